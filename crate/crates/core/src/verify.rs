//! Exhaustive checks of the structural identities, bounded by degree.
//!
//! Each suite enumerates every basis configuration up to `max_degree` and
//! compares two independent computations. Degree cells run on separate
//! threads; their reports are merged in degree order.

use std::fmt;
use std::thread;

use crate::algebra::{
    phi_star, phi_star_linear, prec_s, prec_s_interval, prec_y, psi_star, psi_star_linear, star_q,
    star_q_interval, star_s, star_s_interval, star_y, star_y_interval, succ_s, succ_s_interval,
    succ_y, FreeElement, Product,
};
use crate::coxeter::{
    generator_subsets, parabolic_factor, parabolic_subgroup, weak_leq, x_j_0, x_j_set,
    CoxeterSystem, DihedralGroup, HyperoctahedralGroup, SymmetricGroup,
};
use crate::cube::{self, phi, SignVector};
use crate::perm::Permutation;
use crate::tree::{self, psi, Tree};

const MAX_RECORDED: usize = 20;

/// Outcome of a suite: how many cases were compared and which ones failed.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub violations: usize,
    /// The first few counterexamples, rendered.
    pub failures: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(describe());
            }
        }
    }

    fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.violations += other.violations;
        let room = MAX_RECORDED.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{}: {} ({} checked, {} violations)",
            self.suite, status, self.checked, self.violations
        )?;
        for failure in &self.failures {
            writeln!(f, "  counterexample: {failure}")?;
        }
        Ok(())
    }
}

pub struct Suite {
    pub name: &'static str,
    pub default_degree: usize,
    run: fn(usize) -> Report,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "thm4.1",
        default_degree: 6,
        run: thm4_1,
    },
    Suite {
        name: "thm5.1",
        default_degree: 8,
        run: thm5_1,
    },
    Suite {
        name: "thm6.1",
        default_degree: 10,
        run: thm6_1,
    },
    Suite {
        name: "thm2.5",
        default_degree: 7,
        run: thm2_5,
    },
    Suite {
        name: "thm2.9",
        default_degree: 6,
        run: thm2_9,
    },
    Suite {
        name: "prop3.5",
        default_degree: 8,
        run: prop3_5,
    },
    Suite {
        name: "prop4.5",
        default_degree: 6,
        run: prop4_5,
    },
    Suite {
        name: "prop4.6",
        default_degree: 6,
        run: prop4_6,
    },
    Suite {
        name: "prop5.3",
        default_degree: 6,
        run: prop5_3,
    },
    Suite {
        name: "propA.2",
        default_degree: 5,
        run: prop_a2,
    },
    Suite {
        name: "corA.4",
        default_degree: 5,
        run: cor_a4,
    },
    Suite {
        name: "lemmas",
        default_degree: 6,
        run: lemmas,
    },
    Suite {
        name: "counts",
        default_degree: 8,
        run: counts,
    },
    Suite {
        name: "example",
        default_degree: 6,
        run: example,
    },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

impl Suite {
    pub fn run(&self, max_degree: usize) -> Report {
        (self.run)(max_degree)
    }
}

/// Run `cell(suite, d)` for `d` in `degrees` concurrently and merge in order.
fn by_degree<F>(suite: &str, degrees: std::ops::RangeInclusive<usize>, cell: F) -> Report
where
    F: Fn(&mut Report, usize) + Sync,
{
    let cells: Vec<Report> = thread::scope(|scope| {
        let handles: Vec<_> = degrees
            .map(|d| {
                let cell = &cell;
                scope.spawn(move || {
                    let mut r = Report::new(suite);
                    cell(&mut r, d);
                    r
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification cell panicked"))
            .collect()
    });
    let mut total = Report::new(suite);
    for r in cells {
        total.merge(r);
    }
    total
}

/// Splits `n = p + q` with both parts at least `min`.
fn splits(n: usize, min: usize) -> impl Iterator<Item = (usize, usize)> {
    (min..=n.saturating_sub(min)).map(move |p| (p, n - p))
}

fn compositions3(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p in 1..n {
        for q in 1..n - p {
            out.push((p, q, n - p - q));
        }
    }
    out
}

fn thm4_1(max: usize) -> Report {
    by_degree("thm4.1", 0..=max, |r, n| {
        for (p, q) in splits(n, 0) {
            for sigma in Permutation::all(p) {
                for tau in Permutation::all(q) {
                    let lhs = star_s(&sigma, &tau);
                    let rhs = star_s_interval(&sigma, &tau);
                    r.check(lhs == rhs && lhs.is_multiplicity_free(), || {
                        format!("{sigma:?} * {tau:?}")
                    });
                }
            }
        }
    })
}

fn thm5_1(max: usize) -> Report {
    by_degree("thm5.1", 0..=max, |r, n| {
        for (p, q) in splits(n, 0) {
            for t in Tree::enumerate(p) {
                for w in Tree::enumerate(q) {
                    let lhs = star_y(&t, &w);
                    r.check(lhs == star_y_interval(&t, &w), || format!("{t} * {w}"));
                }
            }
        }
    })
}

fn thm6_1(max: usize) -> Report {
    by_degree("thm6.1", 2..=max, |r, n| {
        for (p, q) in splits(n, 1) {
            for eps in SignVector::enumerate(p) {
                for delta in SignVector::enumerate(q) {
                    let product = star_q(&eps, &delta);
                    let two = FreeElement::sum_of([eps.over(&delta), eps.under(&delta)]);
                    let ok = product == two
                        && product.num_terms() == 2
                        && star_q_interval(&eps, &delta) == two;
                    r.check(ok, || format!("{eps} * {delta}"));
                }
            }
        }
    })
}

fn thm2_5(max: usize) -> Report {
    by_degree("thm2.5", 1..=max, |r, n| {
        let perms = Permutation::all(n);
        let mut total = 0;
        for t in Tree::enumerate(n) {
            let mut preimage: Vec<Permutation> =
                perms.iter().filter(|s| psi(s) == t).cloned().collect();
            preimage.sort();
            let fiber = tree::fiber(&t).expect("positive grade");
            total += fiber.len();
            r.check(fiber == preimage, || format!("fiber of {t}"));
        }
        r.check(total == perms.len(), || {
            format!("fibers of grade {n} cover {total} permutations")
        });
    })
}

fn thm2_9(max: usize) -> Report {
    by_degree("thm2.9", 0..=max, |r, n| {
        for (p, q) in splits(n, 0) {
            for sigma in Permutation::all(p) {
                for tau in Permutation::all(q) {
                    let (s, t) = (psi(&sigma), psi(&tau));
                    r.check(psi(&sigma.over(&tau)) == s.over(&t), || {
                        format!("psi({sigma:?} / {tau:?})")
                    });
                    r.check(psi(&sigma.under(&tau)) == s.under(&t), || {
                        format!("psi({sigma:?} \\ {tau:?})")
                    });
                }
            }
        }
    })
}

fn prop3_5(max: usize) -> Report {
    by_degree("prop3.5", 1..=max, |r, n| {
        let trees = Tree::enumerate(n);
        let mut total = 0;
        for eps in SignVector::enumerate(n) {
            let mut preimage: Vec<Tree> = trees
                .iter()
                .filter(|t| phi(t).expect("positive grade") == eps)
                .cloned()
                .collect();
            preimage.sort();
            let fiber = cube::fiber(&eps).expect("positive grade");
            total += fiber.len();
            r.check(fiber == preimage, || format!("fiber of {eps:?}"));
        }
        r.check(total == trees.len(), || {
            format!("fibers of grade {n} cover {total} trees")
        });
    })
}

/// `(a≺b)≺c = a≺(b*c)`, `(a≻b)≺c = a≻(b≺c)`, `(a*b)≻c = a≻(b≻c)`.
fn dendriform_axioms<B>(r: &mut Report, a: &B, b: &B, c: &B)
where
    B: crate::algebra::Dendriform + fmt::Debug,
{
    let (a, b, c) = (
        FreeElement::basis(a.clone()),
        FreeElement::basis(b.clone()),
        FreeElement::basis(c.clone()),
    );
    let ab_prec = a.prec(&b).unwrap();
    let ab_succ = a.succ(&b).unwrap();
    let bc_prec = b.prec(&c).unwrap();
    let bc_succ = b.succ(&c).unwrap();
    r.check(
        ab_prec.prec(&c).unwrap() == a.prec(&b.star(&c)).unwrap(),
        || format!("(i) {a:?} {b:?} {c:?}"),
    );
    r.check(
        ab_succ.prec(&c).unwrap() == a.succ(&bc_prec).unwrap(),
        || format!("(ii) {a:?} {b:?} {c:?}"),
    );
    r.check(
        a.star(&b).succ(&c).unwrap() == a.succ(&bc_succ).unwrap(),
        || format!("(iii) {a:?} {b:?} {c:?}"),
    );
    r.check(ab_prec + ab_succ == a.star(&b), || {
        format!("split {a:?} {b:?}")
    });
}

fn prop4_5(max: usize) -> Report {
    by_degree("prop4.5", 3..=max, |r, n| {
        for (p, q, s) in compositions3(n) {
            for x in Permutation::all(p) {
                for y in Permutation::all(q) {
                    for z in Permutation::all(s) {
                        dendriform_axioms(r, &x, &y, &z);
                    }
                }
            }
            for x in Tree::enumerate(p) {
                for y in Tree::enumerate(q) {
                    for z in Tree::enumerate(s) {
                        dendriform_axioms(r, &x, &y, &z);
                    }
                }
            }
        }
    })
}

fn prop4_6(max: usize) -> Report {
    by_degree("prop4.6", 2..=max, |r, n| {
        for (p, q) in splits(n, 1) {
            for sigma in Permutation::all(p) {
                for tau in Permutation::all(q) {
                    let prec_ok =
                        prec_s(&sigma, &tau).unwrap() == prec_s_interval(&sigma, &tau).unwrap();
                    let succ_ok =
                        succ_s(&sigma, &tau).unwrap() == succ_s_interval(&sigma, &tau).unwrap();
                    r.check(prec_ok, || format!("{sigma:?} < {tau:?}"));
                    r.check(succ_ok, || format!("{sigma:?} > {tau:?}"));
                }
            }
        }
    })
}

fn prop5_3(max: usize) -> Report {
    by_degree("prop5.3", 0..=max, |r, n| {
        for (p, q) in splits(n, 0) {
            for t in Tree::enumerate(p) {
                for w in Tree::enumerate(q) {
                    let (pt, pw) = (psi_star(&t), psi_star(&w));
                    r.check(psi_star_linear(&star_y(&t, &w)) == pt.star(&pw), || {
                        format!("psi*({t} * {w})")
                    });
                    if p > 0 && q > 0 {
                        let prec =
                            psi_star_linear(&prec_y(&t, &w).unwrap()) == pt.prec(&pw).unwrap();
                        let succ =
                            psi_star_linear(&succ_y(&t, &w).unwrap()) == pt.succ(&pw).unwrap();
                        r.check(prec, || format!("psi*({t} < {w})"));
                        r.check(succ, || format!("psi*({t} > {w})"));
                    }
                }
            }
            for eps in SignVector::enumerate(p) {
                for delta in SignVector::enumerate(q) {
                    let lhs = phi_star_linear(&eps.star(&delta));
                    let rhs = phi_star(&eps).star(&phi_star(&delta));
                    r.check(lhs == rhs, || format!("phi*({eps} * {delta})"));
                }
            }
        }
    })
}

/// The groups exercised by the appendix suites: `S_n` up to the degree,
/// `B_3` and `I₂(m)` for `m ≤ 12`.
fn for_each_group(r: &mut Report, max: usize, check: &dyn Fn(&mut Report, &dyn GroupCheck)) {
    for n in 1..=max {
        check(r, &SymmetricGroup { n });
    }
    check(r, &HyperoctahedralGroup { n: 3 });
    for m in 2..=12 {
        check(r, &DihedralGroup { m });
    }
}

/// Object-safe wrapper so differently typed groups share one driver.
trait GroupCheck {
    fn unique_factorization(&self, r: &mut Report);
    fn descent_free_interval(&self, r: &mut Report);
}

impl<W: CoxeterSystem + fmt::Debug> GroupCheck for W {
    fn unique_factorization(&self, r: &mut Report) {
        let elements = self.elements();
        for j in generator_subsets(self.rank()) {
            let xs = x_j_set(self, &j);
            let ys = parabolic_subgroup(self, &j);
            r.check(xs.len() * ys.len() == elements.len(), || {
                format!("{self:?} J={j:?}: |X_J||W_J| != |W|")
            });
            let mut hits = vec![0usize; elements.len()];
            for x in &xs {
                for y in &ys {
                    let w = self.mul(x, y);
                    let i = elements.binary_search(&w).expect("closed");
                    hits[i] += 1;
                    r.check(self.length(&w) == self.length(x) + self.length(y), || {
                        format!("{self:?} J={j:?}: lengths of {x:?}·{y:?} do not add")
                    });
                }
            }
            for (w, &h) in elements.iter().zip(&hits) {
                let (x, y) = parabolic_factor(self, w, &j);
                let ok = h == 1
                    && xs.binary_search(&x).is_ok()
                    && ys.binary_search(&y).is_ok()
                    && self.mul(&x, &y) == *w;
                r.check(ok, || format!("{self:?} J={j:?}: factorization of {w:?}"));
            }
        }
    }

    fn descent_free_interval(&self, r: &mut Report) {
        let elements = self.elements();
        for j in generator_subsets(self.rank()) {
            let top = x_j_0(self, &j);
            let below: Vec<_> = elements
                .iter()
                .filter(|w| weak_leq(self, w, &top))
                .cloned()
                .collect();
            r.check(below == x_j_set(self, &j), || format!("{self:?} J={j:?}"));
        }
    }
}

fn prop_a2(max: usize) -> Report {
    let mut r = Report::new("propA.2");
    for_each_group(&mut r, max, &|r, g| g.unique_factorization(r));
    r
}

fn cor_a4(max: usize) -> Report {
    let mut r = Report::new("corA.4");
    for_each_group(&mut r, max, &|r, g| g.descent_free_interval(r));
    r
}

fn lemmas(max: usize) -> Report {
    by_degree("lemmas", 0..=max, |r, n| {
        // shuffles are the lower set of xi
        for (p, q) in splits(n, 0) {
            let xi = Permutation::xi(p, q);
            let below: Vec<_> = Permutation::all(n)
                .into_iter()
                .filter(|w| w.leq_weak(&xi).unwrap())
                .collect();
            r.check(below == Permutation::shuffles(p, q), || {
                format!("shuffles({p},{q})")
            });
        }
        // monotonicity of × and ∨, strict monotonicity of the shuffle action
        for (p, q) in splits(n, 0) {
            let (sp, sq) = (Permutation::all(p), Permutation::all(q));
            for s in &sp {
                for s2 in sp.iter().filter(|s2| s.leq_weak(s2).unwrap()) {
                    for t in &sq {
                        for t2 in sq.iter().filter(|t2| t.leq_weak(t2).unwrap()) {
                            let prod = s
                                .direct_product(t)
                                .leq_weak(&s2.direct_product(t2))
                                .unwrap();
                            let graft = s.graft(t).leq_weak(&s2.graft(t2)).unwrap();
                            r.check(prod && graft, || {
                                format!("monotone {s:?}{t:?} <= {s2:?}{t2:?}")
                            });
                        }
                    }
                }
            }
            let shuffles = Permutation::shuffles(p, q);
            for s in &sp {
                for t in &sq {
                    let block = s.direct_product(t);
                    for w1 in &shuffles {
                        for w2 in shuffles
                            .iter()
                            .filter(|w2| *w2 != w1 && w1.leq_weak(w2).unwrap())
                        {
                            let ok = (w1 * &block).leq_weak(&(w2 * &block)).unwrap();
                            r.check(ok, || {
                                format!("shuffle action {w1:?} < {w2:?} on {block:?}")
                            });
                        }
                    }
                }
            }
        }
        for (p, q, s) in compositions3(n) {
            let lhs = &Permutation::xi(p + q, s)
                * &Permutation::xi(p, q).direct_product(&Permutation::identity(s));
            let rhs = &Permutation::xi(p, q + s)
                * &Permutation::identity(p).direct_product(&Permutation::xi(q, s));
            r.check(lhs == rhs, || format!("xi cocycle {p},{q},{s}"));
            // associativity of / and \ on permutations, trees and cube vertices
            for a in Permutation::all(p) {
                for b in Permutation::all(q) {
                    for c in Permutation::all(s) {
                        let ok = a.over(&b).over(&c) == a.over(&b.over(&c))
                            && a.under(&b).under(&c) == a.under(&b.under(&c));
                        r.check(ok, || format!("associativity {a:?} {b:?} {c:?}"));
                    }
                }
            }
            for a in Tree::enumerate(p) {
                for b in Tree::enumerate(q) {
                    for c in Tree::enumerate(s) {
                        let ok = a.over(&b).over(&c) == a.over(&b.over(&c))
                            && a.under(&b).under(&c) == a.under(&b.under(&c));
                        r.check(ok, || format!("associativity {a} {b} {c}"));
                    }
                }
            }
        }
        // u/v ≤ u\v on trees
        for (p, q) in splits(n, 0) {
            for u in Tree::enumerate(p) {
                for v in Tree::enumerate(q) {
                    r.check(u.over(&v).leq(&u.under(&v)).unwrap(), || {
                        format!("{u}/{v} <= {u}\\{v}")
                    });
                }
            }
        }
        // right-oriented interior leaves persist downward
        if n >= 1 {
            let trees = Tree::enumerate(n);
            for t in &trees {
                let et = phi(t).unwrap();
                for w in trees.iter().filter(|w| w.leq(t).unwrap()) {
                    let ew = phi(w).unwrap();
                    let ok = et
                        .signs()
                        .iter()
                        .zip(ew.signs())
                        .all(|(a, b)| *a != cube::Sign::Minus || *b == cube::Sign::Minus);
                    r.check(ok, || format!("orientation {w} <= {t}"));
                }
            }
        }
    })
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1u128, |c, k| c * 2 * (2 * k as u128 + 1) / (k as u128 + 2)) as usize
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn counts(max: usize) -> Report {
    let mut r = Report::new("counts");
    for n in 0..=max {
        for (p, q) in splits(n, 0) {
            r.check(Permutation::shuffles(p, q).len() == binomial(n, p), || {
                format!("|Sh({p},{q})|")
            });
            r.check(Permutation::xi(p, q).length() == p * q, || {
                format!("length xi({p},{q})")
            });
        }
    }
    for n in 0..=max + 2 {
        r.check(Tree::enumerate(n).len() == catalan(n), || {
            format!("|Y_{n}|")
        });
    }
    r
}

fn example(_max: usize) -> Report {
    let mut r = Report::new("example");
    let sigma: Permutation = "3 4 1 6 2 5".parse().unwrap();
    let left: Permutation = "2 3 1".parse().unwrap();
    let right: Permutation = "1 2".parse().unwrap();
    let (_, l, rt) = sigma.decompose_max().unwrap();
    r.check(l == left && rt == right, || {
        format!("decompose_max gave {l:?}, {rt:?}")
    });
    r.check(
        psi(&sigma) == Tree::graft(&psi(&left), &psi(&right)),
        || "psi(3 4 1 6 2 5)".to_string(),
    );
    r
}
