//! Finite Coxeter systems and parabolic factorization.
//!
//! The algorithms here (`X_J`, the factorization `w = x·y` with `x ∈ X_J`,
//! `y ∈ W_J`, the weak order and the longest elements) only use the
//! [`CoxeterSystem`] interface. Three families implement it: the symmetric
//! groups (type A), the hyperoctahedral groups (type B, signed permutations)
//! and the dihedral groups `I₂(m)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use crate::perm::Permutation;

/// A finite Coxeter system `(W, S)` with generators indexed `0..rank()`.
pub trait CoxeterSystem {
    type Element: Clone + Eq + Hash + Ord + Debug;

    fn rank(&self) -> usize;
    fn unit(&self) -> Self::Element;
    fn generator(&self, i: usize) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn length(&self, w: &Self::Element) -> usize;
    /// Every element of `W`, sorted.
    fn elements(&self) -> Vec<Self::Element>;

    /// `w·s_i`.
    fn right_mul_gen(&self, w: &Self::Element, i: usize) -> Self::Element {
        self.mul(w, &self.generator(i))
    }

    /// `s_i·w`.
    fn left_mul_gen(&self, i: usize, w: &Self::Element) -> Self::Element {
        self.mul(&self.generator(i), w)
    }
}

/// `X_J = { w : l(w·s) > l(w) for all s ∈ J }`, sorted.
pub fn x_j_set<W: CoxeterSystem>(group: &W, j: &[usize]) -> Vec<W::Element> {
    group
        .elements()
        .into_iter()
        .filter(|w| has_no_descent_in(group, w, j))
        .collect()
}

fn has_no_descent_in<W: CoxeterSystem>(group: &W, w: &W::Element, j: &[usize]) -> bool {
    let l = group.length(w);
    j.iter()
        .all(|&s| group.length(&group.right_mul_gen(w, s)) > l)
}

/// The standard parabolic subgroup `W_J`, sorted.
pub fn parabolic_subgroup<W: CoxeterSystem>(group: &W, j: &[usize]) -> Vec<W::Element> {
    let mut seen = BTreeSet::from([group.unit()]);
    let mut queue = VecDeque::from([group.unit()]);
    while let Some(w) = queue.pop_front() {
        for &s in j {
            let next = group.right_mul_gen(&w, s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// The unique `(x, y)` with `w = x·y`, `x ∈ X_J` and `y ∈ W_J`. Right descents
/// in `J` are stripped off one at a time.
pub fn parabolic_factor<W: CoxeterSystem>(
    group: &W,
    w: &W::Element,
    j: &[usize],
) -> (W::Element, W::Element) {
    let mut x = w.clone();
    let mut y = group.unit();
    'strip: loop {
        let l = group.length(&x);
        for &s in j {
            let shorter = group.right_mul_gen(&x, s);
            if group.length(&shorter) < l {
                x = shorter;
                y = group.left_mul_gen(s, &y);
                continue 'strip;
            }
        }
        return (x, y);
    }
}

/// Weak order `a ≤ b`: `b = y·a` with lengths adding.
pub fn weak_leq<W: CoxeterSystem>(group: &W, a: &W::Element, b: &W::Element) -> bool {
    let quotient = group.mul(b, &group.inverse(a));
    group.length(&quotient) + group.length(a) == group.length(b)
}

fn longest_of<W: CoxeterSystem>(group: &W, items: Vec<W::Element>) -> W::Element {
    let max = items
        .iter()
        .map(|w| group.length(w))
        .max()
        .expect("nonempty");
    let mut longest = items.into_iter().filter(|w| group.length(w) == max);
    let first = longest.next().expect("nonempty");
    assert!(longest.next().is_none(), "longest element is not unique");
    first
}

/// `w^0`, the unique element of maximal length.
pub fn longest_element<W: CoxeterSystem>(group: &W) -> W::Element {
    longest_of(group, group.elements())
}

/// `w_J^0`, the longest element of `W_J`.
pub fn w_j_0<W: CoxeterSystem>(group: &W, j: &[usize]) -> W::Element {
    longest_of(group, parabolic_subgroup(group, j))
}

/// `x_J^0`, the `X_J` part of `w^0 = x_J^0·w_J^0`.
pub fn x_j_0<W: CoxeterSystem>(group: &W, j: &[usize]) -> W::Element {
    group.mul(&longest_element(group), &group.inverse(&w_j_0(group, j)))
}

/// Word length of every element by breadth-first search over right
/// multiplication by generators.
pub fn word_lengths<W: CoxeterSystem>(group: &W) -> HashMap<W::Element, usize> {
    let mut dist = HashMap::from([(group.unit(), 0)]);
    let mut queue = VecDeque::from([group.unit()]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for s in 0..group.rank() {
            let next = group.right_mul_gen(&w, s);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

/// Order of `s_i·s_j`, computed in the group.
pub fn coxeter_matrix<W: CoxeterSystem>(group: &W) -> Vec<Vec<usize>> {
    let r = group.rank();
    let unit = group.unit();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let step = group.mul(&group.generator(i), &group.generator(j));
                    let mut acc = step.clone();
                    let mut order = 1;
                    while acc != unit {
                        acc = group.mul(&acc, &step);
                        order += 1;
                    }
                    order
                })
                .collect()
        })
        .collect()
}

/// All subsets of `0..rank`, each sorted.
pub fn generator_subsets(rank: usize) -> Vec<Vec<usize>> {
    (0u32..1 << rank)
        .map(|bits| (0..rank).filter(|i| bits >> i & 1 == 1).collect())
        .collect()
}

/// `S_n` with generators `s_1, …, s_{n-1}` at indices `0..n-1`.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricGroup {
    pub n: usize,
}

impl CoxeterSystem for SymmetricGroup {
    type Element = Permutation;

    fn rank(&self) -> usize {
        self.n.saturating_sub(1)
    }

    fn unit(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn generator(&self, i: usize) -> Permutation {
        Permutation::simple(self.n, i + 1)
    }

    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a * b
    }

    fn inverse(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn length(&self, w: &Permutation) -> usize {
        w.length()
    }

    fn elements(&self) -> Vec<Permutation> {
        Permutation::all(self.n)
    }

    fn right_mul_gen(&self, w: &Permutation, i: usize) -> Permutation {
        w.right_mul_simple(i + 1)
    }

    fn left_mul_gen(&self, i: usize, w: &Permutation) -> Permutation {
        w.left_mul_simple(i + 1)
    }
}

/// A signed permutation: `word[i-1] = w(i)` with `|w|` a permutation of `1..=n`
/// and `w(-i) = -w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    pub word: Vec<i32>,
}

impl SignedPermutation {
    fn apply(&self, i: i32) -> i32 {
        let v = self.word[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }
}

/// The hyperoctahedral group `B_n`. Generator 0 negates the first entry
/// (on the right); generator `i ≥ 1` exchanges positions `i` and `i+1`.
#[derive(Clone, Copy, Debug)]
pub struct HyperoctahedralGroup {
    pub n: usize,
}

impl CoxeterSystem for HyperoctahedralGroup {
    type Element = SignedPermutation;

    fn rank(&self) -> usize {
        self.n
    }

    fn unit(&self) -> SignedPermutation {
        SignedPermutation {
            word: (1..=self.n as i32).collect(),
        }
    }

    fn generator(&self, i: usize) -> SignedPermutation {
        let mut w = self.unit();
        if i == 0 {
            w.word[0] = -1;
        } else {
            w.word.swap(i - 1, i);
        }
        w
    }

    fn mul(&self, a: &SignedPermutation, b: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            word: b.word.iter().map(|&v| a.apply(v)).collect(),
        }
    }

    fn inverse(&self, a: &SignedPermutation) -> SignedPermutation {
        let mut word = vec![0; self.n];
        for (i, &v) in a.word.iter().enumerate() {
            let pos = i as i32 + 1;
            word[(v.unsigned_abs() - 1) as usize] = if v < 0 { -pos } else { pos };
        }
        SignedPermutation { word }
    }

    /// Inversions of the signed word plus the absolute values of its negative entries.
    fn length(&self, w: &SignedPermutation) -> usize {
        let word = &w.word;
        let mut inv = 0;
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] > word[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = word
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| v.unsigned_abs() as usize)
            .sum();
        inv + neg
    }

    fn elements(&self) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in Permutation::all(self.n) {
            for signs in 0u32..1 << self.n {
                let word = perm
                    .word()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        if signs >> i & 1 == 1 {
                            -(v as i32)
                        } else {
                            v as i32
                        }
                    })
                    .collect();
                out.push(SignedPermutation { word });
            }
        }
        out.sort();
        out
    }
}

/// `r^rotation · s^reflection` in the dihedral group of order `2m`, where `r`
/// is the rotation `s_1·s_0` and `s = s_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflection: bool,
}

/// The dihedral group `I₂(m)`, `m ≥ 2`, with generators `s_0 = s` and `s_1 = r·s`.
#[derive(Clone, Copy, Debug)]
pub struct DihedralGroup {
    pub m: usize,
}

impl CoxeterSystem for DihedralGroup {
    type Element = DihedralElement;

    fn rank(&self) -> usize {
        2
    }

    fn unit(&self) -> DihedralElement {
        DihedralElement {
            rotation: 0,
            reflection: false,
        }
    }

    fn generator(&self, i: usize) -> DihedralElement {
        assert!(i < 2);
        DihedralElement {
            rotation: i,
            reflection: true,
        }
    }

    fn mul(&self, a: &DihedralElement, b: &DihedralElement) -> DihedralElement {
        let m = self.m;
        // s·r^k = r^{-k}·s
        let rotation = if a.reflection {
            (a.rotation + m - b.rotation) % m
        } else {
            (a.rotation + b.rotation) % m
        };
        DihedralElement {
            rotation,
            reflection: a.reflection != b.reflection,
        }
    }

    fn inverse(&self, a: &DihedralElement) -> DihedralElement {
        if a.reflection {
            *a
        } else {
            DihedralElement {
                rotation: (self.m - a.rotation) % self.m,
                reflection: false,
            }
        }
    }

    /// `r^k = (s_1 s_0)^k = (s_0 s_1)^{m-k}` and `r^k s = (s_1 s_0)^{k-1} s_1 = (s_0 s_1)^{m-k} s_0`.
    fn length(&self, w: &DihedralElement) -> usize {
        let (k, m) = (w.rotation, self.m);
        if w.reflection {
            let back = 2 * ((m - k) % m) + 1;
            if k == 0 {
                back
            } else {
                back.min(2 * k - 1)
            }
        } else {
            2 * k.min(m - k)
        }
    }

    fn elements(&self) -> Vec<DihedralElement> {
        let mut out: Vec<_> = (0..self.m)
            .flat_map(|k| {
                [false, true].map(|reflection| DihedralElement {
                    rotation: k,
                    reflection,
                })
            })
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_lengths<W: CoxeterSystem>(group: &W) {
        let bfs = word_lengths(group);
        let elements = group.elements();
        assert_eq!(bfs.len(), elements.len());
        for w in &elements {
            assert_eq!(group.length(w), bfs[w], "{w:?}");
            assert_eq!(group.mul(w, &group.inverse(w)), group.unit());
            for s in 0..group.rank() {
                let d =
                    group.length(&group.right_mul_gen(w, s)) as isize - group.length(w) as isize;
                assert_eq!(d.abs(), 1);
                assert_eq!(group.right_mul_gen(w, s), group.mul(w, &group.generator(s)));
                assert_eq!(group.left_mul_gen(s, w), group.mul(&group.generator(s), w));
            }
        }
        assert_eq!(group.length(&group.unit()), 0);
    }

    #[test]
    fn instance_lengths_match_word_lengths() {
        for n in 1..=5 {
            check_lengths(&SymmetricGroup { n });
        }
        for n in 1..=4 {
            check_lengths(&HyperoctahedralGroup { n });
        }
        for m in 2..=12 {
            check_lengths(&DihedralGroup { m });
        }
    }

    #[test]
    fn group_orders_and_coxeter_matrices() {
        assert_eq!(HyperoctahedralGroup { n: 3 }.elements().len(), 48);
        assert_eq!(
            coxeter_matrix(&HyperoctahedralGroup { n: 3 }),
            vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]]
        );
        assert_eq!(
            coxeter_matrix(&SymmetricGroup { n: 4 }),
            vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]]
        );
        for m in 2..=12 {
            let g = DihedralGroup { m };
            assert_eq!(g.elements().len(), 2 * m);
            assert_eq!(coxeter_matrix(&g), vec![vec![1, m], vec![m, 1]]);
        }
    }

    #[test]
    fn x_j_extremes() {
        let g = SymmetricGroup { n: 4 };
        assert_eq!(x_j_set(&g, &[]), g.elements());
        assert_eq!(x_j_set(&g, &[0, 1, 2]), vec![g.unit()]);
        // {s_p}^c in S_{p+q} gives the (p,q)-shuffles
        for (p, q) in [(1, 3), (2, 2), (3, 1)] {
            let j: Vec<usize> = (0..3).filter(|&i| i != p - 1).collect();
            assert_eq!(x_j_set(&g, &j), Permutation::shuffles(p, q));
            assert_eq!(x_j_0(&g, &j), Permutation::xi(p, q));
        }
        assert_eq!(x_j_0(&g, &[0, 1, 2]), g.unit());
    }

    #[test]
    fn trivial_factorizations() {
        let g = HyperoctahedralGroup { n: 3 };
        for j in generator_subsets(3) {
            for y in parabolic_subgroup(&g, &j) {
                assert_eq!(parabolic_factor(&g, &y, &j), (g.unit(), y.clone()));
            }
            for x in x_j_set(&g, &j) {
                assert_eq!(parabolic_factor(&g, &x, &j), (x.clone(), g.unit()));
            }
        }
    }

    #[test]
    fn weak_order_extremes_and_type_a_agreement() {
        let g = DihedralGroup { m: 7 };
        let top = longest_element(&g);
        assert_eq!(g.length(&top), 7);
        for w in g.elements() {
            assert!(weak_leq(&g, &g.unit(), &w));
            assert!(weak_leq(&g, &w, &top));
        }
        for n in 1..=5 {
            let g = SymmetricGroup { n };
            assert_eq!(longest_element(&g), Permutation::longest(n));
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(weak_leq(&g, &a, &b), a.leq_weak(&b).unwrap());
                }
            }
        }
    }
}
