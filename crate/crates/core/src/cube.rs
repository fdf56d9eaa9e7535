//! Vertices of the cube, `Q_n = {-1,+1}^(n-1)`, ordered componentwise.
//!
//! An element of grade `n ≥ 1` carries `n-1` signs, so grade 1 is the empty
//! sign sequence. Grade 0 holds the unit of the graded product.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{same_grade, Error, Result};
use crate::tree::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    grade: usize,
    signs: Vec<Sign>,
}

impl SignVector {
    /// The element of grade `signs.len() + 1`.
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector {
            grade: signs.len() + 1,
            signs,
        }
    }

    /// The grade-0 unit.
    pub fn unit() -> Self {
        SignVector {
            grade: 0,
            signs: Vec::new(),
        }
    }

    /// `(-1)_n`, the minimum of `Q_n` (`n ≥ 1`).
    pub fn minus(n: usize) -> Self {
        SignVector::new(vec![Sign::Minus; n.saturating_sub(1)])
    }

    /// `(+1)_n`, the maximum of `Q_n` (`n ≥ 1`).
    pub fn plus(n: usize) -> Self {
        SignVector::new(vec![Sign::Plus; n.saturating_sub(1)])
    }

    /// All of `Q_n` in canonical order (`-` before `+`, lexicographically).
    pub fn enumerate(n: usize) -> Vec<SignVector> {
        if n == 0 {
            return vec![SignVector::unit()];
        }
        let len = n - 1;
        (0u64..1 << len)
            .map(|bits| {
                SignVector::new(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 1 {
                                Sign::Plus
                            } else {
                                Sign::Minus
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Componentwise comparison with `-1 < +1`.
    pub fn leq(&self, other: &SignVector) -> Result<bool> {
        same_grade(self.grade, other.grade)?;
        Ok(self.signs.iter().zip(&other.signs).all(|(a, b)| a <= b))
    }

    /// `ε∨η = (ε, -1, +1, η)`.
    pub fn graft(&self, other: &SignVector) -> SignVector {
        self.join_with(&[Sign::Minus, Sign::Plus], other)
    }

    /// `ε/η = (ε, -1, η)`.
    pub fn over(&self, other: &SignVector) -> SignVector {
        self.join_with(&[Sign::Minus], other)
    }

    /// `ε\η = (ε, +1, η)`.
    pub fn under(&self, other: &SignVector) -> SignVector {
        self.join_with(&[Sign::Plus], other)
    }

    fn join_with(&self, middle: &[Sign], other: &SignVector) -> SignVector {
        if self.grade == 0 {
            return other.clone();
        }
        if other.grade == 0 {
            return self.clone();
        }
        let mut signs = self.signs.clone();
        signs.extend_from_slice(middle);
        signs.extend_from_slice(&other.signs);
        SignVector::new(signs)
    }

    /// Vertices obtained by raising one `-` to `+`, sorted.
    pub fn up_covers(&self) -> Vec<SignVector> {
        let mut out: Vec<SignVector> = (0..self.signs.len())
            .filter(|&i| self.signs[i] == Sign::Minus)
            .map(|i| {
                let mut signs = self.signs.clone();
                signs[i] = Sign::Plus;
                SignVector {
                    grade: self.grade,
                    signs,
                }
            })
            .collect();
        out.sort();
        out
    }

    /// The interval `[low, high]`: free choice on the coordinates where the
    /// bounds differ. Sorted; empty when `low ≰ high`.
    pub fn interval(low: &SignVector, high: &SignVector) -> Result<Vec<SignVector>> {
        if !low.leq(high)? {
            return Ok(Vec::new());
        }
        let free: Vec<usize> = (0..low.signs.len())
            .filter(|&i| low.signs[i] != high.signs[i])
            .collect();
        let mut out: Vec<SignVector> = (0u64..1 << free.len())
            .map(|bits| {
                let mut signs = low.signs.clone();
                for (k, &i) in free.iter().enumerate() {
                    if bits >> k & 1 == 1 {
                        signs[i] = Sign::Plus;
                    }
                }
                SignVector {
                    grade: low.grade,
                    signs,
                }
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Orientation of the interior leaves of `t`: `-1` for a leaf that is a right
/// child, `+1` for a left child. The two extreme leaves are skipped.
pub fn phi(t: &Tree) -> Result<SignVector> {
    if t.is_leaf() {
        return Err(Error::GradeZero { op: "phi" });
    }
    let sides = t.leaf_sides();
    let signs = sides[1..sides.len() - 1]
        .iter()
        .map(|&left| if left { Sign::Plus } else { Sign::Minus })
        .collect();
    Ok(SignVector::new(signs))
}

/// Minimum of the fiber `φ⁻¹(ε)`, peeling the leading run of signs.
pub fn min_tree(eps: &SignVector) -> Result<Tree> {
    if eps.grade == 0 {
        return Err(Error::GradeZero { op: "min_tree" });
    }
    let s = &eps.signs;
    let Some(&first) = s.first() else {
        return Ok(Tree::left_comb(1));
    };
    let run = s.iter().take_while(|&&x| x == first).count();
    if run == s.len() {
        return Ok(comb(first, eps.grade));
    }
    Ok(match first {
        // (-1)_k / ε' with the run of k minus signs ending in the joining sign.
        Sign::Minus => {
            let rest = SignVector::new(s[run..].to_vec());
            Tree::left_comb(run).over(&min_tree(&rest)?)
        }
        // (+1)_k / ε' where the run of k-1 plus signs is followed by the joining minus.
        Sign::Plus => {
            let rest = SignVector::new(s[run + 1..].to_vec());
            Tree::right_comb(run + 1).over(&min_tree(&rest)?)
        }
    })
}

/// Maximum of the fiber `φ⁻¹(ε)`, peeling the trailing run of signs.
pub fn max_tree(eps: &SignVector) -> Result<Tree> {
    if eps.grade == 0 {
        return Err(Error::GradeZero { op: "max_tree" });
    }
    let s = &eps.signs;
    let Some(&last) = s.last() else {
        return Ok(Tree::left_comb(1));
    };
    let run = s.iter().rev().take_while(|&&x| x == last).count();
    if run == s.len() {
        return Ok(comb(last, eps.grade));
    }
    let cut = s.len() - run;
    Ok(match last {
        // ε' \ (-1)_k: the joining plus precedes a run of k-1 minus signs.
        Sign::Minus => {
            let rest = SignVector::new(s[..cut - 1].to_vec());
            max_tree(&rest)?.under(&Tree::left_comb(run + 1))
        }
        // ε' \ (+1)_k with the joining plus as the first of the run.
        Sign::Plus => {
            let rest = SignVector::new(s[..cut].to_vec());
            max_tree(&rest)?.under(&Tree::right_comb(run))
        }
    })
}

fn comb(sign: Sign, n: usize) -> Tree {
    match sign {
        Sign::Minus => Tree::left_comb(n),
        Sign::Plus => Tree::right_comb(n),
    }
}

/// `φ⁻¹(ε)` as the tree interval `[min_tree(ε), max_tree(ε)]`.
pub fn fiber(eps: &SignVector) -> Result<Vec<Tree>> {
    Tree::interval(&min_tree(eps)?, &max_tree(eps)?)
}

impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade
            .cmp(&other.grade)
            .then_with(|| self.signs.cmp(&other.signs))
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A string over `+`/`-`; grade 1 renders as the empty string and the grade-0
/// unit as `()`.
impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.grade == 0 {
            return f.write_str("()");
        }
        self.signs
            .iter()
            .try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{}[{self}]", self.grade)
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if body == "()" {
            return Ok(SignVector::unit());
        }
        body.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("bad sign {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector::new)
    }
}
