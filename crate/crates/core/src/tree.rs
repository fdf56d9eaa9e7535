//! Planar binary trees and their rotation order.
//!
//! `Y_n` is the set of planar binary trees with `n` internal vertices. The
//! order on `Y_n` is generated by the right rotation `(u∨v)∨w → u∨(v∨w)`
//! applied at any subtree; the left comb is the minimum and the right comb
//! the maximum. [`psi`] maps each permutation onto a tree by splitting at
//! the maximal value, and its fibers are weak-order intervals bounded by
//! [`min_perm`] and [`max_perm`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{same_grade, Error, Result};
use crate::perm::Permutation;

/// A planar binary tree: a leaf `|` or the grafting of an ordered pair of trees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Arc<Node>),
}

#[derive(PartialEq, Eq, Hash)]
pub struct Node {
    left: Tree,
    right: Tree,
    grade: usize,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    /// `u∨v`: a new root whose left and right subtrees are `u` and `v`.
    pub fn graft(u: &Tree, v: &Tree) -> Tree {
        Tree::Node(Arc::new(Node {
            left: u.clone(),
            right: v.clone(),
            grade: u.grade() + v.grade() + 1,
        }))
    }

    /// Number of internal vertices.
    pub fn grade(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(node) => node.grade,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    /// The unique `(t^l, t^r)` with `t = t^l∨t^r`, or `None` for the leaf.
    pub fn split(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Node(node) => Some((&node.left, &node.right)),
        }
    }

    /// `a_n`: every internal vertex hangs on the left. Minimum of `Y_n`.
    pub fn left_comb(n: usize) -> Tree {
        (0..n).fold(Tree::Leaf, |acc, _| Tree::graft(&acc, &Tree::Leaf))
    }

    /// `z_n`: every internal vertex hangs on the right. Maximum of `Y_n`.
    pub fn right_comb(n: usize) -> Tree {
        (0..n).fold(Tree::Leaf, |acc, _| Tree::graft(&Tree::Leaf, &acc))
    }

    /// All trees with `n` internal vertices, sorted by their text form.
    pub fn enumerate(n: usize) -> Vec<Tree> {
        let mut table: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
        for k in 1..=n {
            let mut level = Vec::new();
            for i in 0..k {
                for l in &table[i] {
                    for r in &table[k - 1 - i] {
                        level.push(Tree::graft(l, r));
                    }
                }
            }
            level.sort();
            table.push(level);
        }
        table.swap_remove(n)
    }

    /// `u/v`: the root of `u` is identified with the leftmost leaf of `v`.
    pub fn over(&self, v: &Tree) -> Tree {
        match v.split() {
            None => self.clone(),
            Some((vl, vr)) => Tree::graft(&self.over(vl), vr),
        }
    }

    /// `u\v`: the rightmost leaf of `u` is identified with the root of `v`.
    pub fn under(&self, v: &Tree) -> Tree {
        match self.split() {
            None => v.clone(),
            Some((ul, ur)) => Tree::graft(ul, &ur.under(v)),
        }
    }

    /// Trees obtained by one right rotation at some subtree, sorted.
    pub fn up_covers(&self) -> Vec<Tree> {
        let mut out = Vec::new();
        self.collect_rotations(&mut out);
        out.sort();
        out
    }

    fn collect_rotations(&self, out: &mut Vec<Tree>) {
        let Some((l, r)) = self.split() else { return };
        if let Some((a, b)) = l.split() {
            out.push(Tree::graft(a, &Tree::graft(b, r)));
        }
        let mut sub = Vec::new();
        l.collect_rotations(&mut sub);
        out.extend(sub.drain(..).map(|l2| Tree::graft(&l2, r)));
        r.collect_rotations(&mut sub);
        out.extend(sub.drain(..).map(|r2| Tree::graft(l, &r2)));
    }

    /// Rotation order test `self ≤ w`.
    pub fn leq(&self, w: &Tree) -> Result<bool> {
        same_grade(self.grade(), w.grade())?;
        let order = RotationOrder::of_grade(self.grade());
        Ok(order.leq(order.index_of(self), order.index_of(w)))
    }

    /// The interval `[low, high]` of the rotation order, sorted.
    pub fn interval(low: &Tree, high: &Tree) -> Result<Vec<Tree>> {
        same_grade(low.grade(), high.grade())?;
        let order = RotationOrder::of_grade(low.grade());
        let (lo, hi) = (order.index_of(low), order.index_of(high));
        if !order.leq(lo, hi) {
            return Ok(Vec::new());
        }
        let mut seen = BTreeSet::from([lo]);
        let mut queue = VecDeque::from([lo]);
        while let Some(x) = queue.pop_front() {
            for &y in &order.up[x] {
                if order.leq(y, hi) && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().map(|i| order.trees[i].clone()).collect())
    }

    /// Orientation of each of the `n+1` leaves, left to right: `true` when the
    /// leaf is a left child.
    pub fn leaf_sides(&self) -> Vec<bool> {
        fn walk(t: &Tree, is_left: bool, out: &mut Vec<bool>) {
            match t.split() {
                None => out.push(is_left),
                Some((l, r)) => {
                    walk(l, true, out);
                    walk(r, false, out);
                }
            }
        }
        let mut out = Vec::with_capacity(self.grade() + 1);
        walk(self, true, &mut out);
        out
    }

    /// Comparison of the text forms, where `(` sorts before `|`. The text forms
    /// are prefix-free, so this is a structural recursion.
    fn text_cmp(&self, other: &Tree) -> Ordering {
        match (self.split(), other.split()) {
            (None, None) => Ordering::Equal,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some((a, b)), Some((c, d))) => a.text_cmp(c).then_with(|| b.text_cmp(d)),
        }
    }
}

/// The rotation order on one grade, with its reachability closure.
///
/// Built once per grade and shared afterwards.
pub struct RotationOrder {
    trees: Vec<Tree>,
    index: HashMap<Tree, usize>,
    up: Vec<Vec<usize>>,
    reach: Vec<Vec<u64>>,
}

impl RotationOrder {
    pub fn of_grade(n: usize) -> Arc<RotationOrder> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RotationOrder>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(order) = cache.lock().unwrap().get(&n) {
            return Arc::clone(order);
        }
        // Built outside the lock; a concurrent duplicate build is harmless.
        let order = Arc::new(RotationOrder::build(n));
        Arc::clone(cache.lock().unwrap().entry(n).or_insert(order))
    }

    fn build(n: usize) -> RotationOrder {
        let trees = Tree::enumerate(n);
        let index: HashMap<Tree, usize> = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let up: Vec<Vec<usize>> = trees
            .iter()
            .map(|t| t.up_covers().iter().map(|c| index[c]).collect())
            .collect();
        let words = trees.len().div_ceil(64);
        let mut reach: Vec<Option<Vec<u64>>> = vec![None; trees.len()];
        fn fill(i: usize, up: &[Vec<usize>], words: usize, reach: &mut Vec<Option<Vec<u64>>>) {
            if reach[i].is_some() {
                return;
            }
            let mut row = vec![0u64; words];
            row[i / 64] |= 1 << (i % 64);
            for &j in &up[i] {
                fill(j, up, words, reach);
                for (a, b) in row.iter_mut().zip(reach[j].as_ref().unwrap()) {
                    *a |= b;
                }
            }
            reach[i] = Some(row);
        }
        for i in 0..trees.len() {
            fill(i, &up, words, &mut reach);
        }
        RotationOrder {
            trees,
            index,
            up,
            reach: reach.into_iter().map(Option::unwrap).collect(),
        }
    }

    /// The trees of this grade in canonical order; indices refer to this list.
    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn index_of(&self, t: &Tree) -> usize {
        self.index[t]
    }

    /// Indices of the upper covers of tree `i`.
    pub fn up_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach[i][j / 64] >> (j % 64) & 1 == 1
    }
}

/// The tree of a permutation: split the word at its maximum and recurse on
/// both sides. Only the relative order of the entries matters.
pub fn psi(sigma: &Permutation) -> Tree {
    fn go(word: &[usize]) -> Tree {
        match word.iter().enumerate().max_by_key(|(_, &v)| v) {
            None => Tree::Leaf,
            Some((i, _)) => Tree::graft(&go(&word[..i]), &go(&word[i + 1..])),
        }
    }
    go(sigma.word())
}

fn min_perm_unchecked(t: &Tree) -> Permutation {
    match t.split() {
        None => Permutation::empty(),
        Some((l, r)) => min_perm_unchecked(l).graft(&min_perm_unchecked(r)),
    }
}

fn max_perm_unchecked(t: &Tree) -> Permutation {
    match t.split() {
        None => Permutation::empty(),
        Some((l, r)) => {
            let shuffle =
                Permutation::xi(l.grade(), r.grade()).direct_product(&Permutation::identity(1));
            &shuffle * &max_perm_unchecked(l).graft(&max_perm_unchecked(r))
        }
    }
}

/// Minimum of the fiber `ψ⁻¹(t)` in the weak order.
pub fn min_perm(t: &Tree) -> Result<Permutation> {
    if t.is_leaf() {
        return Err(Error::GradeZero { op: "min_perm" });
    }
    Ok(min_perm_unchecked(t))
}

/// Maximum of the fiber `ψ⁻¹(t)` in the weak order.
pub fn max_perm(t: &Tree) -> Result<Permutation> {
    if t.is_leaf() {
        return Err(Error::GradeZero { op: "max_perm" });
    }
    Ok(max_perm_unchecked(t))
}

/// `ψ⁻¹(t)`, computed as the weak-order interval `[min_perm(t), max_perm(t)]`.
pub fn fiber(t: &Tree) -> Result<Vec<Permutation>> {
    Permutation::interval(&min_perm(t)?, &max_perm(t)?)
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.text_cmp(other))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split() {
            None => f.write_str("|"),
            Some((l, r)) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Grammar `T ::= "|" | "(" T "," T ")"`, whitespace-insensitive.
impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in tree {s:?}")));
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<Tree> {
    let expect = |pos: &mut usize, c: char| -> Result<()> {
        if chars.get(*pos) == Some(&c) {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at offset {pos}")))
        }
    };
    match chars.get(*pos) {
        Some('|') => {
            *pos += 1;
            Ok(Tree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let l = parse_tree(chars, pos)?;
            expect(pos, ',')?;
            let r = parse_tree(chars, pos)?;
            expect(pos, ')')?;
            Ok(Tree::graft(&l, &r))
        }
        other => Err(Error::Parse(format!(
            "unexpected {other:?} at offset {pos} in tree"
        ))),
    }
}
