//! The symmetric groups `S_n` in one-line notation.
//!
//! Composition acts on values: `(σ·τ)(i) = σ(τ(i))`. Multiplying on the left
//! by a simple transposition `s_i` exchanges the values `i` and `i+1`;
//! multiplying on the right exchanges the entries in positions `i` and `i+1`.
//! The weak order is the one generated by left multiplication: `ω ≤ σ` when
//! `σ = τ·ω` with `l(σ) = l(τ) + l(ω)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{same_grade, Error, Result};

/// A permutation of `{1, …, n}` stored as its one-line word.
///
/// The empty word is the single element of `S_0` and the unit of the graded
/// product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Checks that `word` is a rearrangement of `1..=n`.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotBijective(format!("{word:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    /// The simple transposition `s_i` of `S_n` exchanging `i` and `i+1` (`1 ≤ i < n`).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// The longest element `(n n-1 … 1)`, maximum of the weak order.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// All of `S_n`, in lexicographic order of the words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { word: word.clone() }];
        while next_lexicographic(&mut word) {
            out.push(Permutation { word: word.clone() });
        }
        out
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn grade(&self) -> usize {
        self.word.len()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Position `i` with `σ(i) = value`.
    pub fn position_of(&self, value: usize) -> usize {
        self.word
            .iter()
            .position(|&v| v == value)
            .expect("value out of range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `σ·τ`, the map `i ↦ σ(τ(i))`.
    pub fn compose(&self, tau: &Permutation) -> Result<Permutation> {
        same_grade(self.grade(), tau.grade())?;
        Ok(Permutation {
            word: tau.word.iter().map(|&j| self.word[j - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// Number of inversions, which is the Coxeter length in type A.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` (1-based) with `σ(i) > σ(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Weak order test `self ≤ sigma`. The only candidate left factor is
    /// `σ·ω⁻¹`, so the test reduces to one length identity.
    pub fn leq_weak(&self, sigma: &Permutation) -> Result<bool> {
        same_grade(self.grade(), sigma.grade())?;
        let quotient = sigma.compose(&self.inverse())?;
        Ok(quotient.length() + self.length() == sigma.length())
    }

    /// `s_i·ω` for `1 ≤ i < n`: exchange the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let word = self
            .word
            .iter()
            .map(|&v| match v {
                v if v == i => i + 1,
                v if v == i + 1 => i,
                v => v,
            })
            .collect();
        Permutation { word }
    }

    /// `ω·s_i` for `1 ≤ i < n`: exchange the entries in positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Elements covering `self` in the weak order, sorted.
    pub fn up_covers(&self) -> Vec<Permutation> {
        self.covers(true)
    }

    /// Elements covered by `self` in the weak order, sorted.
    pub fn down_covers(&self) -> Vec<Permutation> {
        self.covers(false)
    }

    fn covers(&self, up: bool) -> Vec<Permutation> {
        let pos = self.inverse();
        let mut out: Vec<Permutation> = (1..self.grade())
            .filter(|&i| (pos.word[i - 1] < pos.word[i]) == up)
            .map(|i| self.left_mul_simple(i))
            .collect();
        out.sort();
        out
    }

    /// The weak-order interval `[low, high]`, sorted; empty when `low ≰ high`.
    pub fn interval(low: &Permutation, high: &Permutation) -> Result<Vec<Permutation>> {
        if !low.leq_weak(high)? {
            return Ok(Vec::new());
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(low.clone());
        queue.push_back(low.clone());
        while let Some(x) = queue.pop_front() {
            for y in x.up_covers() {
                if !seen.contains(&y) && y.leq_weak(high)? {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The `(p,q)`-shuffles: elements of `S_{p+q}` whose only possible descent is at `p`.
    /// Sorted lexicographically.
    pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
        let n = p + q;
        (1..=n)
            .combinations(p)
            .map(|head| {
                let mut word = head.clone();
                word.extend((1..=n).filter(|v| !head.contains(v)));
                Permutation { word }
            })
            .collect()
    }

    /// The longest `(p,q)`-shuffle `(q+1 … q+p 1 … q)`.
    pub fn xi(p: usize, q: usize) -> Permutation {
        Permutation {
            word: (q + 1..=q + p).chain(1..=q).collect(),
        }
    }

    /// `σ×τ`: σ acts on `{1..p}` and τ on `{p+1..p+q}`.
    pub fn direct_product(&self, tau: &Permutation) -> Permutation {
        let p = self.grade();
        let mut word = self.word.clone();
        word.extend(tau.word.iter().map(|&v| v + p));
        Permutation { word }
    }

    /// The unique factorization `σ = ξ·ω` with `ξ` a `(p,q)`-shuffle and
    /// `ω ∈ S_p×S_q`.
    pub fn factorize_parabolic(&self, p: usize, q: usize) -> Result<(Permutation, Permutation)> {
        if p + q != self.grade() {
            return Err(Error::WrongGrade {
                expected: p + q,
                actual: self.grade(),
            });
        }
        let (head, tail) = self.word.split_at(p);
        let mut shuffle: Vec<usize> = head.to_vec();
        shuffle.sort_unstable();
        let mut tail_sorted = tail.to_vec();
        tail_sorted.sort_unstable();
        shuffle.extend(tail_sorted);
        let block = standardize(head).direct_product(&standardize(tail));
        Ok((Permutation::from_word_unchecked(shuffle), block))
    }

    /// Grafting `σ∨τ ∈ S_{p+q+1}`: σ, then the new maximum, then τ shifted by p.
    pub fn graft(&self, tau: &Permutation) -> Permutation {
        let p = self.grade();
        let n = p + tau.grade() + 1;
        let mut word = self.word.clone();
        word.push(n);
        word.extend(tau.word.iter().map(|&v| v + p));
        Permutation { word }
    }

    /// Splits `σ` at its maximum: the unique `(γ, σ^l, σ^r)` with
    /// `γ ∈ Sh(i-1, n-i)` and `σ = (γ×1_1)·(σ^l∨σ^r)`, where `σ(i) = n`.
    pub fn decompose_max(&self) -> Result<(Permutation, Permutation, Permutation)> {
        let n = self.grade();
        if n == 0 {
            return Err(Error::GradeZero {
                op: "decompose_max",
            });
        }
        let i = self.position_of(n);
        let left = &self.word[..i - 1];
        let right = &self.word[i..];
        let mut gamma: Vec<usize> = left.to_vec();
        gamma.sort_unstable();
        let mut right_sorted = right.to_vec();
        right_sorted.sort_unstable();
        gamma.extend(right_sorted);
        Ok((
            Permutation::from_word_unchecked(gamma),
            standardize(left),
            standardize(right),
        ))
    }

    /// `σ/τ = σ×τ`.
    pub fn over(&self, tau: &Permutation) -> Permutation {
        self.direct_product(tau)
    }

    /// `σ\τ = ξ_{p,q}·(σ×τ)`.
    pub fn under(&self, tau: &Permutation) -> Permutation {
        &Permutation::xi(self.grade(), tau.grade()) * &self.direct_product(tau)
    }
}

/// Relabels a sequence of distinct integers to `1..=len`, preserving relative order.
pub fn standardize(values: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    let mut word = vec![0; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        word[i] = rank + 1;
    }
    Permutation { word }
}

fn next_lexicographic(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Panics on a grade mismatch; use [`Permutation::compose`] for the checked form.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
            .expect("composing permutations of different grades")
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("()");
        }
        write!(f, "{}", self.word.iter().join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.word.iter().join(","))
    }
}

/// Accepts one-line notation separated by commas and/or whitespace, optionally
/// wrapped in parentheses. The empty string and `()` denote the empty permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner;
        }
        let word = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_word(word)
    }
}


#[cfg(test)]
mod proptests {
    use proptest::prelude::*;

    use super::*;

    fn perm(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|w| Permutation::from_word(w).unwrap())
        })
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(s in perm(9), cut in 0usize..10) {
            let p = cut.min(s.grade());
            let (x, w) = s.factorize_parabolic(p, s.grade() - p).unwrap();
            prop_assert_eq!(&x * &w, s.clone());
            prop_assert_eq!(x.length() + w.length(), s.length());
            prop_assert!(x.descents().iter().all(|&d| d == p));
        }

        #[test]
        fn decompose_max_reconstructs(s in perm(9)) {
            prop_assume!(s.grade() > 0);
            let (g, l, r) = s.decompose_max().unwrap();
            prop_assert_eq!(&g.direct_product(&Permutation::identity(1)) * &l.graft(&r), s);
        }

        #[test]
        fn text_round_trip(s in perm(12)) {
            prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
        }
    }
}
