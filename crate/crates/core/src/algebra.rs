//! Free modules with integer coefficients over the three bases, and the
//! graded products on them.
//!
//! On basis elements each product `x*y` equals the sum of the weak-order
//! interval `[x/y, x\y]`; the direct definitions live here next to the
//! interval forms so the two can be compared.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cube::{self, SignVector};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::{self, Tree};

pub trait Graded {
    fn grade(&self) -> usize;
}

impl Graded for Permutation {
    fn grade(&self) -> usize {
        Permutation::grade(self)
    }
}

impl Graded for Tree {
    fn grade(&self) -> usize {
        Tree::grade(self)
    }
}

impl Graded for SignVector {
    fn grade(&self) -> usize {
        SignVector::grade(self)
    }
}

/// A finite formal sum of basis elements with nonzero integer coefficients.
///
/// Terms are kept in the basis order (grade first), which is also the
/// rendering order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

impl<B: Ord + Clone> FreeElement<B> {
    pub fn zero() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: B) -> Self {
        FreeElement {
            terms: BTreeMap::from([(b, BigInt::one())]),
        }
    }

    /// Sum of the given basis elements, each with coefficient 1 (repeats add up).
    pub fn sum_of<I: IntoIterator<Item = B>>(items: I) -> Self {
        let mut out = FreeElement::zero();
        for b in items {
            out.add_term(b, BigInt::one());
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, BigInt)>>(terms: I) -> Self {
        let mut out = FreeElement::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: B, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn coefficient(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every coefficient is 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    /// Linear extension of a map on basis elements.
    pub fn linear_map<C, F>(&self, mut f: F) -> FreeElement<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> FreeElement<C>,
    {
        let mut out = FreeElement::zero();
        for (b, c) in &self.terms {
            for (image, d) in f(b).terms {
                out.add_term(image, c * d);
            }
        }
        out
    }

    pub fn map_basis<C, F>(&self, mut f: F) -> FreeElement<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        FreeElement::from_terms(self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }
}

/// Bilinear extension of a product of basis elements.
pub fn bilinear_extend<A, B, C, F>(
    a: &FreeElement<A>,
    b: &FreeElement<B>,
    mut product: F,
) -> FreeElement<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> FreeElement<C>,
{
    let mut out = FreeElement::zero();
    for (x, c) in &a.terms {
        for (y, d) in &b.terms {
            let coeff = c * d;
            for (z, e) in product(x, y).terms {
                out.add_term(z, &coeff * e);
            }
        }
    }
    out
}

fn try_bilinear<B, F>(
    a: &FreeElement<B>,
    b: &FreeElement<B>,
    mut product: F,
) -> Result<FreeElement<B>>
where
    B: Ord + Clone,
    F: FnMut(&B, &B) -> Result<FreeElement<B>>,
{
    let mut out = FreeElement::zero();
    for (x, c) in &a.terms {
        for (y, d) in &b.terms {
            let coeff = c * d;
            for (z, e) in product(x, y)?.terms {
                out.add_term(z, &coeff * e);
            }
        }
    }
    Ok(out)
}

/// A graded associative product on basis elements, with a grade-0 unit.
pub trait Product: Ord + Clone + Graded {
    fn unit() -> Self;
    fn star(&self, other: &Self) -> FreeElement<Self>;
}

/// The two halves `x*y = x≺y + x≻y`, defined when both factors have positive grade.
pub trait Dendriform: Product {
    fn prec(&self, other: &Self) -> Result<FreeElement<Self>>;
    fn succ(&self, other: &Self) -> Result<FreeElement<Self>>;
}

impl<B: Product> FreeElement<B> {
    pub fn one() -> Self {
        FreeElement::basis(B::unit())
    }

    pub fn star(&self, other: &Self) -> Self {
        bilinear_extend(self, other, B::star)
    }
}

impl<B: Dendriform> FreeElement<B> {
    pub fn prec(&self, other: &Self) -> Result<Self> {
        try_bilinear(self, other, B::prec)
    }

    pub fn succ(&self, other: &Self) -> Result<Self> {
        try_bilinear(self, other, B::succ)
    }
}

impl<B: Ord + Clone> Add for FreeElement<B> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> AddAssign for FreeElement<B> {
    fn add_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> Neg for FreeElement<B> {
    type Output = Self;

    fn neg(self) -> Self {
        FreeElement {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Sub for FreeElement<B> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// One term per line: `<coefficient> <basis>`.
impl<B: Ord + fmt::Display> fmt::Display for FreeElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, c) in &self.terms {
            writeln!(f, "{c} {b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for FreeElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| format!("{c}*{b:?}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

// --- permutations ---

fn shuffle_sum<'a, I>(shuffles: I, block: &Permutation) -> FreeElement<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    FreeElement::sum_of(shuffles.into_iter().map(|x| x * block))
}

/// `σ*τ = Σ_{x ∈ Sh(p,q)} x·(σ×τ)`.
pub fn star_s(sigma: &Permutation, tau: &Permutation) -> FreeElement<Permutation> {
    let block = sigma.direct_product(tau);
    shuffle_sum(&Permutation::shuffles(sigma.grade(), tau.grade()), &block)
}

/// Sum over the weak-order interval `[σ/τ, σ\τ]`.
pub fn star_s_interval(sigma: &Permutation, tau: &Permutation) -> FreeElement<Permutation> {
    let iv = Permutation::interval(&sigma.over(tau), &sigma.under(tau)).expect("equal grades");
    FreeElement::sum_of(iv)
}

fn augmented(op: &'static str, a: usize, b: usize) -> Result<()> {
    if a == 0 || b == 0 {
        Err(Error::GradeZero { op })
    } else {
        Ok(())
    }
}

/// Shuffles sending `p` to `p+q`: the maximum lands in the left block.
fn left_max_shuffles(p: usize, q: usize) -> Vec<Permutation> {
    Permutation::shuffles(p, q)
        .into_iter()
        .filter(|x| x.apply(p) == p + q)
        .collect()
}

/// Shuffles fixing `p+q`: the maximum lands in the right block.
fn right_max_shuffles(p: usize, q: usize) -> Vec<Permutation> {
    Permutation::shuffles(p, q)
        .into_iter()
        .filter(|x| x.apply(p + q) == p + q)
        .collect()
}

/// `σ≺τ`: the shuffle terms whose maximal entry comes from σ.
pub fn prec_s(sigma: &Permutation, tau: &Permutation) -> Result<FreeElement<Permutation>> {
    augmented("prec", sigma.grade(), tau.grade())?;
    let block = sigma.direct_product(tau);
    Ok(shuffle_sum(
        &left_max_shuffles(sigma.grade(), tau.grade()),
        &block,
    ))
}

/// `σ≻τ`: the shuffle terms whose maximal entry comes from τ.
pub fn succ_s(sigma: &Permutation, tau: &Permutation) -> Result<FreeElement<Permutation>> {
    augmented("succ", sigma.grade(), tau.grade())?;
    let block = sigma.direct_product(tau);
    Ok(shuffle_sum(
        &right_max_shuffles(sigma.grade(), tau.grade()),
        &block,
    ))
}

/// `σ≺τ` as the interval `[(1_{p-1}∨1_q)·(σ×τ), σ\τ]`.
pub fn prec_s_interval(sigma: &Permutation, tau: &Permutation) -> Result<FreeElement<Permutation>> {
    let (p, q) = (sigma.grade(), tau.grade());
    augmented("prec", p, q)?;
    let low =
        &Permutation::identity(p - 1).graft(&Permutation::identity(q)) * &sigma.direct_product(tau);
    Ok(FreeElement::sum_of(Permutation::interval(
        &low,
        &sigma.under(tau),
    )?))
}

/// `σ≻τ` as the interval `[σ/τ, (ξ_{p,q-1}×1_1)·(σ×τ)]`.
pub fn succ_s_interval(sigma: &Permutation, tau: &Permutation) -> Result<FreeElement<Permutation>> {
    let (p, q) = (sigma.grade(), tau.grade());
    augmented("succ", p, q)?;
    let high = &Permutation::xi(p, q - 1).direct_product(&Permutation::identity(1))
        * &sigma.direct_product(tau);
    Ok(FreeElement::sum_of(Permutation::interval(
        &sigma.over(tau),
        &high,
    )?))
}

impl Product for Permutation {
    fn unit() -> Self {
        Permutation::empty()
    }

    fn star(&self, other: &Self) -> FreeElement<Self> {
        star_s(self, other)
    }
}

impl Dendriform for Permutation {
    fn prec(&self, other: &Self) -> Result<FreeElement<Self>> {
        prec_s(self, other)
    }

    fn succ(&self, other: &Self) -> Result<FreeElement<Self>> {
        succ_s(self, other)
    }
}

// --- trees ---

/// `t*w = (t*w^l)∨w^r + t^l∨(t^r*w)`, with the leaf as unit.
pub fn star_y(t: &Tree, w: &Tree) -> FreeElement<Tree> {
    match (t.split(), w.split()) {
        (None, _) => FreeElement::basis(w.clone()),
        (_, None) => FreeElement::basis(t.clone()),
        (Some((tl, tr)), Some((wl, wr))) => {
            star_y(t, wl).map_basis(|u| Tree::graft(u, wr))
                + star_y(tr, w).map_basis(|u| Tree::graft(tl, u))
        }
    }
}

/// Sum over the rotation-order interval `[t/w, t\w]`.
pub fn star_y_interval(t: &Tree, w: &Tree) -> FreeElement<Tree> {
    FreeElement::sum_of(Tree::interval(&t.over(w), &t.under(w)).expect("equal grades"))
}

/// `t≺w = t^l∨(t^r*w)`.
pub fn prec_y(t: &Tree, w: &Tree) -> Result<FreeElement<Tree>> {
    augmented("prec", t.grade(), w.grade())?;
    let (tl, tr) = t.split().expect("positive grade");
    Ok(star_y(tr, w).map_basis(|u| Tree::graft(tl, u)))
}

/// `t≻w = (t*w^l)∨w^r`.
pub fn succ_y(t: &Tree, w: &Tree) -> Result<FreeElement<Tree>> {
    augmented("succ", t.grade(), w.grade())?;
    let (wl, wr) = w.split().expect("positive grade");
    Ok(star_y(t, wl).map_basis(|u| Tree::graft(u, wr)))
}

impl Product for Tree {
    fn unit() -> Self {
        Tree::Leaf
    }

    fn star(&self, other: &Self) -> FreeElement<Self> {
        star_y(self, other)
    }
}

impl Dendriform for Tree {
    fn prec(&self, other: &Self) -> Result<FreeElement<Self>> {
        prec_y(self, other)
    }

    fn succ(&self, other: &Self) -> Result<FreeElement<Self>> {
        succ_y(self, other)
    }
}

/// `ψ*(t)`: the sum of all permutations whose tree is `t`.
pub fn psi_star(t: &Tree) -> FreeElement<Permutation> {
    if t.is_leaf() {
        return FreeElement::basis(Permutation::empty());
    }
    FreeElement::sum_of(tree::fiber(t).expect("positive grade"))
}

/// Linear extension of [`psi_star`].
pub fn psi_star_linear(x: &FreeElement<Tree>) -> FreeElement<Permutation> {
    x.linear_map(psi_star)
}

// --- cube ---

/// `ε*δ = ε/δ + ε\δ`; the grade-0 element is the unit.
pub fn star_q(eps: &SignVector, delta: &SignVector) -> FreeElement<SignVector> {
    if eps.grade() == 0 || delta.grade() == 0 {
        return FreeElement::basis(eps.over(delta));
    }
    FreeElement::sum_of([eps.over(delta), eps.under(delta)])
}

/// Sum over the cube interval `[ε/δ, ε\δ]`.
pub fn star_q_interval(eps: &SignVector, delta: &SignVector) -> FreeElement<SignVector> {
    FreeElement::sum_of(
        SignVector::interval(&eps.over(delta), &eps.under(delta)).expect("equal grades"),
    )
}

impl Product for SignVector {
    fn unit() -> Self {
        SignVector::unit()
    }

    fn star(&self, other: &Self) -> FreeElement<Self> {
        star_q(self, other)
    }
}

/// `φ*(ε)`: the sum of all trees whose leaf orientations are `ε`.
pub fn phi_star(eps: &SignVector) -> FreeElement<Tree> {
    if eps.grade() == 0 {
        return FreeElement::basis(Tree::Leaf);
    }
    FreeElement::sum_of(cube::fiber(eps).expect("positive grade"))
}

/// Linear extension of [`phi_star`].
pub fn phi_star_linear(x: &FreeElement<SignVector>) -> FreeElement<Tree> {
    x.linear_map(phi_star)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn e(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn free_element_arithmetic() {
        let a = FreeElement::sum_of([p("1 2"), p("2 1")]);
        let b = FreeElement::basis(p("2 1"));
        assert_eq!((a.clone() - b.clone()), FreeElement::basis(p("1 2")));
        assert!((a.clone() - a.clone()).is_zero());
        assert_eq!(
            a.scale(&BigInt::from(3)).coefficient(&p("1 2")),
            BigInt::from(3)
        );
        assert!(a.scale(&BigInt::zero()).is_zero());
        let mut c = a.clone();
        c.add_term(p("1 2"), BigInt::from(-1));
        assert_eq!(c, b);
        assert_eq!(a.to_string(), "1 1 2\n1 2 1\n");
    }

    #[test]
    fn star_s_values() {
        assert_eq!(
            star_s(&p("1"), &p("1")),
            FreeElement::sum_of([p("1 2"), p("2 1")])
        );
        assert_eq!(
            star_s(&p("2 1"), &p("1")),
            FreeElement::sum_of([p("2 1 3"), p("3 1 2"), p("3 2 1")])
        );
        let s = p("2 3 1");
        assert_eq!(
            star_s(&Permutation::empty(), &s),
            FreeElement::basis(s.clone())
        );
        assert_eq!(star_s(&s, &Permutation::empty()), FreeElement::basis(s));
    }

    #[test]
    fn star_s_interval_values() {
        assert_eq!(
            star_s_interval(&p("1"), &p("1")),
            FreeElement::sum_of([p("1 2"), p("2 1")])
        );
        for n in 0..=5 {
            for a in 0..=n {
                for s in Permutation::all(a) {
                    for u in Permutation::all(n - a) {
                        let x = star_s(&s, &u);
                        assert_eq!(x.num_terms(), binomial(n, a));
                        assert!(x.is_multiplicity_free());
                        assert_eq!(x, star_s_interval(&s, &u));
                    }
                }
            }
        }
    }

    #[test]
    fn dendriform_halves_on_permutations() {
        assert_eq!(
            succ_s(&p("1"), &p("1")).unwrap(),
            FreeElement::basis(p("1 2"))
        );
        assert_eq!(
            prec_s(&p("1"), &p("1")).unwrap(),
            FreeElement::basis(p("2 1"))
        );
        assert!(prec_s(&Permutation::empty(), &p("1")).is_err());
        assert!(succ_s(&p("1"), &Permutation::empty()).is_err());
        assert!(prec_s_interval(&p("1"), &Permutation::empty()).is_err());
        for n in 2..=5 {
            for a in 1..n {
                for s in Permutation::all(a) {
                    for u in Permutation::all(n - a) {
                        let (l, r) = (prec_s(&s, &u).unwrap(), succ_s(&s, &u).unwrap());
                        assert_eq!(l.clone() + r.clone(), star_s(&s, &u));
                        assert_eq!(l, prec_s_interval(&s, &u).unwrap());
                        assert_eq!(r, succ_s_interval(&s, &u).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn star_y_values() {
        let y1 = t("(|,|)");
        assert_eq!(
            star_y(&y1, &y1),
            FreeElement::sum_of([t("((|,|),|)"), t("(|,(|,|))")])
        );
        let u = t("((|,|),(|,|))");
        assert_eq!(star_y(&Tree::Leaf, &u), FreeElement::basis(u.clone()));
        assert_eq!(star_y(&u, &Tree::Leaf), FreeElement::basis(u.clone()));
        assert_eq!(star_y_interval(&u, &Tree::Leaf), FreeElement::basis(u));
        assert_eq!(
            star_y_interval(&y1, &y1),
            FreeElement::sum_of(Tree::enumerate(2))
        );
        assert_eq!(
            prec_y(&y1, &y1).unwrap(),
            FreeElement::basis(Tree::right_comb(2))
        );
        assert_eq!(
            succ_y(&y1, &y1).unwrap(),
            FreeElement::basis(Tree::left_comb(2))
        );
        assert!(prec_y(&Tree::Leaf, &y1).is_err());
        assert!(succ_y(&y1, &Tree::Leaf).is_err());
    }

    #[test]
    fn star_y_counts_match_fibers() {
        for n in 0..=7 {
            for a in 0..=n {
                for x in Tree::enumerate(a) {
                    for y in Tree::enumerate(n - a) {
                        let prod = star_y(&x, &y);
                        let fibers =
                            psi_star(&x).num_terms() * psi_star(&y).num_terms() * binomial(n, a);
                        assert_eq!(
                            psi_star_linear(&prod).coefficient_sum(),
                            BigInt::from(fibers)
                        );
                        if a > 0 && n > a {
                            assert_eq!(prec_y(&x, &y).unwrap() + succ_y(&x, &y).unwrap(), prod);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn star_q_values() {
        assert_eq!(
            star_q(&e("+"), &e("-")),
            FreeElement::sum_of([e("+--"), e("++-")])
        );
        assert_eq!(
            star_q(&e(""), &e("")),
            FreeElement::sum_of([e("-"), e("+")])
        );
        assert_eq!(
            star_q(&SignVector::unit(), &e("+")),
            FreeElement::basis(e("+"))
        );
        assert_eq!(star_q_interval(&e("+"), &e("-")), star_q(&e("+"), &e("-")));
        assert_eq!(star_q(&e("+"), &e("-")).to_string(), "1 +--\n1 ++-\n");
    }

    #[test]
    fn psi_and_phi_star_values() {
        assert_eq!(psi_star(&t("(|,|)")), FreeElement::basis(p("1")));
        assert_eq!(
            psi_star(&Tree::Leaf),
            FreeElement::basis(Permutation::empty())
        );
        for n in 1..=6 {
            assert_eq!(
                phi_star(&SignVector::minus(n)),
                FreeElement::basis(Tree::left_comb(n))
            );
            let mut seen = std::collections::HashSet::new();
            for eps in SignVector::enumerate(n) {
                for tree in phi_star(&eps).support() {
                    assert!(seen.insert(tree.clone()));
                }
            }
            assert_eq!(seen.len(), Tree::enumerate(n).len());
        }
    }

    #[test]
    fn bilinear_extension() {
        let a = FreeElement::sum_of([p("1"), p("1")]);
        let b = FreeElement::sum_of([p("2 1"), p("1 2")]);
        let c = FreeElement::basis(p("1"));
        assert_eq!(
            FreeElement::basis(p("2 1")).star(&c),
            star_s(&p("2 1"), &p("1"))
        );
        assert_eq!((a.clone() + b.clone()).star(&c), a.star(&c) + b.star(&c));
        assert_eq!(a.star(&c).coefficient(&p("2 1")), BigInt::from(2));
        assert_eq!(a.star(&b).star(&c), a.star(&b.star(&c)));
        assert_eq!(FreeElement::<Permutation>::one().star(&b), b);
        assert!(FreeElement::basis(Permutation::empty()).prec(&c).is_err());
    }
}
