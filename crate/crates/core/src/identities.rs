//! Checkable forms of the ring, group and group-ring identities the index
//! characterizations rely on, and a suite runner that evaluates them on a context.
//!
//! Each check returns `true` on every valid input; they exist so tests and the
//! `identities` subcommand can confirm the table arithmetic exhaustively.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::FiniteGroup;
use crate::group_ring::{GroupRing, GroupRingElement};
use crate::ring::FiniteRing;

/// `αβ ∘ γ = α(β ∘ γ) + (γ ∘ α)β − 2αγβ` in `R`.
pub fn check_circle_of_product(r: &FiniteRing, a: usize, b: usize, c: usize) -> bool {
    let lhs = r.circle(r.mul(a, b), c);
    let t1 = r.mul(a, r.circle(b, c));
    let t2 = r.mul(r.circle(c, a), b);
    let acb = r.mul(r.mul(a, c), b);
    let rhs = r.sub(r.add(t1, t2), r.add(acb, acb));
    lhs == rhs
}

/// `αx ∘ βy = (α ∘ β)·yx + αβ·yx((x,y) − 1)` in `RG`.
///
/// The left side goes through group-ring arithmetic; the right side is laid
/// out coefficient by coefficient.
pub fn check_monomial_circle(gr: &Arc<GroupRing>, a: usize, b: usize, x: usize, y: usize) -> bool {
    let ring = gr.ring();
    let g = gr.group();
    let lhs = gr.embed(a, x).circle(&gr.embed(b, y)).expect("same context");
    let yx = g.mul(y, x);
    let ab = ring.mul(a, b);
    let mut rhs = vec![ring.zero(); gr.dim()];
    rhs[yx] = ring.circle(a, b);
    let yxs = g.mul(yx, g.commutator(x, y));
    rhs[yxs] = ring.add(rhs[yxs], ab);
    rhs[yx] = ring.sub(rhs[yx], ab);
    lhs.coeffs().iter().zip(&rhs).all(|(&l, &r)| l as usize == r)
}

/// `(xy, z) = (x, z)^y (y, z)`
pub fn check_commutator_of_product_left(g: &FiniteGroup, x: usize, y: usize, z: usize) -> bool {
    g.commutator(g.mul(x, y), z) == g.mul(g.conjugate(g.commutator(x, z), y), g.commutator(y, z))
}

/// `(x, yz) = (x, z)(x, y)^z`
pub fn check_commutator_of_product_right(g: &FiniteGroup, x: usize, y: usize, z: usize) -> bool {
    g.commutator(x, g.mul(y, z)) == g.mul(g.commutator(x, z), g.conjugate(g.commutator(x, y), z))
}

/// `1 + (x, y)` as an element of `RG`.
fn one_plus_commutator(gr: &Arc<GroupRing>, x: usize, y: usize) -> GroupRingElement {
    let g = gr.group();
    let one = gr.ring().one();
    gr.embed(one, g.identity())
        .checked_add(&gr.embed(one, g.commutator(x, y)))
        .expect("same context")
}

fn unit(gr: &Arc<GroupRing>, g: usize) -> GroupRingElement {
    gr.embed(gr.ring().one(), g)
}

/// `x ∘ y = yx((x, y) + 1)`
pub fn check_group_circle(gr: &Arc<GroupRing>, x: usize, y: usize) -> bool {
    let g = gr.group();
    let lhs = unit(gr, x).circle(&unit(gr, y)).expect("same context");
    let rhs = unit(gr, g.mul(y, x)).checked_mul(&one_plus_commutator(gr, x, y)).expect("same context");
    lhs == rhs
}

/// `x⁻¹y⁻¹ ∘ x = ((x, y) + 1)y⁻¹`
pub fn check_inverse_pair_circle(gr: &Arc<GroupRing>, x: usize, y: usize) -> bool {
    let g = gr.group();
    let lhs = unit(gr, g.mul(g.inv(x), g.inv(y))).circle(&unit(gr, x)).expect("same context");
    let rhs = one_plus_commutator(gr, x, y).checked_mul(&unit(gr, g.inv(y))).expect("same context");
    lhs == rhs
}

/// `y⁻¹x ∘ y = x((x, y) + 1)`
pub fn check_conjugating_circle(gr: &Arc<GroupRing>, x: usize, y: usize) -> bool {
    let g = gr.group();
    let lhs = unit(gr, g.mul(g.inv(y), x)).circle(&unit(gr, y)).expect("same context");
    let rhs = unit(gr, x).checked_mul(&one_plus_commutator(gr, x, y)).expect("same context");
    lhs == rhs
}

pub fn check_circle_commutes(a: &GroupRingElement, b: &GroupRingElement) -> bool {
    a.circle(b).ok() == b.circle(a).ok()
}

/// `(a^{∘2} ∘ b) ∘ a = a^{∘2} ∘ (b ∘ a)`
pub fn check_jordan_identity(a: &GroupRingElement, b: &GroupRingElement) -> bool {
    let sq = a.circle(a).expect("same context");
    let lhs = sq.circle(b).and_then(|t| t.circle(a));
    let rhs = b.circle(a).and_then(|t| sq.circle(&t));
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

pub fn check_lie_alternating(a: &GroupRingElement) -> bool {
    a.lie_bracket(a).map(|v| v.is_zero()).unwrap_or(false)
}

pub fn check_jacobi(a: &GroupRingElement, b: &GroupRingElement, c: &GroupRingElement) -> bool {
    let term = |x: &GroupRingElement, y: &GroupRingElement, z: &GroupRingElement| {
        x.lie_bracket(y).and_then(|t| t.lie_bracket(z)).expect("same context")
    };
    let sum = term(a, b, c)
        .checked_add(&term(b, c, a))
        .and_then(|t| t.checked_add(&term(c, a, b)))
        .expect("same context");
    sum.is_zero()
}

/// Outcome of one identity over its tuple domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub exhaustive: bool,
    pub first_failure: Option<Vec<usize>>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// How many tuples to try when a domain is too large to enumerate.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub exhaustive_cap: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { exhaustive_cap: 1 << 21, samples: 10_000, seed: 0x6a72_6c00 }
    }
}

struct Runner {
    opts: SuiteOptions,
    rng: ChaCha8Rng,
    out: Vec<IdentityOutcome>,
}

impl Runner {
    /// Runs `check` over every tuple of `dims` if there are at most `exhaustive_cap`
    /// of them, else over `samples` uniformly random tuples.
    fn run(&mut self, name: &'static str, dims: &[u64], check: impl FnMut(&[usize]) -> bool) {
        self.run_over(name, dims, true, check)
    }

    /// `complete` says whether `dims` index the whole domain; if not (a random
    /// pool), tuples are always sampled and the outcome is never exhaustive.
    fn run_over(&mut self, name: &'static str, dims: &[u64], complete: bool, mut check: impl FnMut(&[usize]) -> bool) {
        let total = dims.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d));
        let exhaustive = complete && matches!(total, Some(t) if t <= self.opts.exhaustive_cap);
        let mut outcome = IdentityOutcome { name, checked: 0, failed: 0, exhaustive, first_failure: None };
        let mut tuple = vec![0usize; dims.len()];
        let mut record = |tuple: &[usize], outcome: &mut IdentityOutcome| {
            outcome.checked += 1;
            if !check(tuple) {
                outcome.failed += 1;
                outcome.first_failure.get_or_insert_with(|| tuple.to_vec());
            }
        };
        if exhaustive {
            let total = total.unwrap_or(0);
            for mut idx in 0..total {
                for (slot, &d) in tuple.iter_mut().zip(dims).rev() {
                    *slot = (idx % d) as usize;
                    idx /= d;
                }
                record(&tuple, &mut outcome);
            }
        } else {
            for _ in 0..self.opts.samples {
                for (slot, &d) in tuple.iter_mut().zip(dims) {
                    *slot = self.rng.gen_range(0..d) as usize;
                }
                record(&tuple, &mut outcome);
            }
        }
        self.out.push(outcome);
    }
}

/// Source of group-ring elements for the non-linear identities: every element
/// when `|RG|` is small, otherwise seeded random coefficient vectors.
struct Elements {
    gr: Arc<GroupRing>,
    enumerable: bool,
    pool: Vec<GroupRingElement>,
}

const ENUMERABLE_ELEMENTS: u128 = 4096;

impl Elements {
    fn new(gr: &Arc<GroupRing>, rng: &mut ChaCha8Rng, samples: u64) -> Self {
        let count = gr.element_count();
        let enumerable = count <= ENUMERABLE_ELEMENTS;
        let pool = if enumerable {
            Vec::new()
        } else {
            let q = gr.ring().order();
            (0..samples.min(4096))
                .map(|_| {
                    let coeffs: Vec<usize> = (0..gr.dim()).map(|_| rng.gen_range(0..q)).collect();
                    gr.element(&coeffs).expect("valid coefficients")
                })
                .collect()
        };
        Elements { gr: Arc::clone(gr), enumerable, pool }
    }

    fn len(&self) -> u64 {
        if self.enumerable {
            self.gr.element_count() as u64
        } else {
            self.pool.len() as u64
        }
    }

    fn get(&self, i: usize) -> GroupRingElement {
        if self.enumerable {
            let q = self.gr.ring().order();
            let mut idx = i;
            let coeffs: Vec<usize> = (0..self.gr.dim())
                .map(|_| {
                    let c = idx % q;
                    idx /= q;
                    c
                })
                .collect();
            self.gr.element(&coeffs).expect("valid coefficients")
        } else {
            self.pool[i].clone()
        }
    }
}

/// [`check_jacobi`] specialised to monomial triples `(r_i g_i)` indexed as
/// `r·|G| + g`. A double Lie bracket of monomials has at most four terms, so
/// the twelve terms of the Jacobi sum are accumulated sparsely; the suite
/// feeds this millions of triples.
fn monomial_jacobi(gr: &Arc<GroupRing>) -> impl FnMut(&[usize]) -> bool + '_ {
    let ring = gr.ring();
    let group = gr.group();
    let n = group.order();
    let zero = ring.zero();
    let mut acc = vec![zero; n];
    let mut touched = Vec::with_capacity(12);
    move |t: &[usize]| {
        for (x, y, z) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            let (rx, gx) = (x / n, x % n);
            let (ry, gy) = (y / n, y % n);
            let (rz, gz) = (z / n, z % n);
            // [rx gx, ry gy] = (rx ry) gx gy − (ry rx) gy gx
            let inner = [
                (ring.mul(rx, ry), group.mul(gx, gy)),
                (ring.neg(ring.mul(ry, rx)), group.mul(gy, gx)),
            ];
            for (c, g) in inner {
                // [c g, rz gz] = (c rz) g gz − (rz c) gz g
                for (coeff, h) in [(ring.mul(c, rz), group.mul(g, gz)), (ring.neg(ring.mul(rz, c)), group.mul(gz, g))] {
                    acc[h] = ring.add(acc[h], coeff);
                    touched.push(h);
                }
            }
        }
        let vanishes = touched.iter().all(|&h| acc[h] == zero);
        for h in touched.drain(..) {
            acc[h] = zero;
        }
        vanishes
    }
}

/// Evaluates every identity on `gr`.
pub fn run_suite(gr: &Arc<GroupRing>, opts: SuiteOptions) -> Vec<IdentityOutcome> {
    let mut runner = Runner { opts, rng: ChaCha8Rng::seed_from_u64(opts.seed), out: Vec::new() };
    let ring = Arc::clone(gr.ring());
    let group = Arc::clone(gr.group());
    let (nr, ng) = (ring.order() as u64, group.order() as u64);

    runner.run("(xy,z) = (x,z)^y (y,z)", &[ng, ng, ng], |t| check_commutator_of_product_left(&group, t[0], t[1], t[2]));
    runner.run("(x,yz) = (x,z)(x,y)^z", &[ng, ng, ng], |t| check_commutator_of_product_right(&group, t[0], t[1], t[2]));
    runner.run("x∘y = yx((x,y)+1)", &[ng, ng], |t| check_group_circle(gr, t[0], t[1]));
    runner.run("x⁻¹y⁻¹∘x = ((x,y)+1)y⁻¹", &[ng, ng], |t| check_inverse_pair_circle(gr, t[0], t[1]));
    runner.run("y⁻¹x∘y = x((x,y)+1)", &[ng, ng], |t| check_conjugating_circle(gr, t[0], t[1]));
    runner.run("αβ∘γ = α(β∘γ)+(γ∘α)β-2αγβ", &[nr, nr, nr], |t| check_circle_of_product(&ring, t[0], t[1], t[2]));
    runner.run("αx∘βy = (α∘β)yx + αβyx((x,y)-1)", &[nr, nr, ng, ng], |t| {
        check_monomial_circle(gr, t[0], t[1], t[2], t[3])
    });

    // Bilinear identities: all monomials r·g span RG, so monomial tuples are exhaustive.
    let mono = |i: usize| gr.embed(i / group.order(), i % group.order());
    let nm = nr * ng;
    runner.run("a∘b = b∘a (monomials)", &[nm, nm], |t| check_circle_commutes(&mono(t[0]), &mono(t[1])));
    runner.run("Jacobi (monomials)", &[nm, nm, nm], monomial_jacobi(gr));

    let elems = Elements::new(gr, &mut runner.rng, opts.samples);
    let ne = elems.len();
    let all = elems.enumerable;
    runner.run_over("a∘b = b∘a", &[ne, ne], all, |t| check_circle_commutes(&elems.get(t[0]), &elems.get(t[1])));
    runner.run_over("(a²∘b)∘a = a²∘(b∘a)", &[ne, ne], all, |t| check_jordan_identity(&elems.get(t[0]), &elems.get(t[1])));
    runner.run_over("[a,a] = 0", &[ne], all, |t| check_lie_alternating(&elems.get(t[0])));
    runner.run_over("Jacobi", &[ne, ne, ne], all, |t| check_jacobi(&elems.get(t[0]), &elems.get(t[1]), &elems.get(t[2])));
    runner.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin_group, builtin_ring};

    fn ctx(r: &str, g: &str) -> Arc<GroupRing> {
        GroupRing::new(Arc::new(builtin_ring(r).unwrap()), Arc::new(builtin_group(g).unwrap()))
    }

    #[test]
    fn circle_of_product_exhaustive_on_small_rings() {
        for name in ["M2(F2)", "H32", "T2(Z4)", "Z8"] {
            let r = builtin_ring(name).unwrap();
            let n = r.order();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert!(check_circle_of_product(&r, a, b, c), "{name} {a} {b} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_circle_on_t2_d4() {
        let gr = ctx("T2(F2)", "D4");
        for a in 0..8 {
            for b in 0..8 {
                for x in 0..8 {
                    for y in 0..8 {
                        assert!(check_monomial_circle(&gr, a, b, x, y));
                    }
                }
            }
        }
        // abelian group: reduces to (α∘β)yx
        let ab = ctx("H16", "C4");
        for x in 0..4 {
            for y in 0..4 {
                let got = ab.embed(3, x).circle(&ab.embed(5, y)).unwrap();
                let want = ab.embed(ab.ring().circle(3, 5), ab.group().mul(y, x));
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn a_wrong_identity_is_caught() {
        // sanity check of the checker itself: a∘b ≠ 2ab in a non-commutative ring
        let r = builtin_ring("M2(F2)").unwrap();
        let differs = (0..16).any(|a| (0..16).any(|b| r.circle(a, b) != r.times(2, r.mul(a, b))));
        assert!(differs);
    }

    #[test]
    fn sparse_monomial_jacobi_matches_element_form() {
        for (r, g) in [("H32", "Q8"), ("M2(F2)", "S3")] {
            let gr = ctx(r, g);
            let n = gr.group().order();
            let mono = |i: usize| gr.embed(i / n, i % n);
            let mut fast = monomial_jacobi(&gr);
            let nm = gr.ring().order() * n;
            for t in [[1, 2, 3], [nm - 1, 5, 17], [7, 7, 9], [0, nm / 2, 3]] {
                assert_eq!(fast(&t), check_jacobi(&mono(t[0]), &mono(t[1]), &mono(t[2])));
                assert!(fast(&t));
            }
        }
    }

    #[test]
    fn full_suite_on_small_context() {
        let gr = ctx("Z2", "S3");
        let out = run_suite(&gr, SuiteOptions::default());
        assert!(out.iter().all(|o| o.passed()), "{out:?}");
        assert!(out.iter().all(|o| o.exhaustive));
    }

    #[test]
    fn sampled_suite_on_larger_context() {
        let gr = ctx("H32", "D4");
        let opts = SuiteOptions { samples: 500, ..SuiteOptions::default() };
        let out = run_suite(&gr, opts);
        assert!(out.iter().all(|o| o.passed()), "{out:?}");
        let jordan = out.iter().find(|o| o.name.starts_with("(a²")).unwrap();
        assert!(!jordan.exhaustive);
        assert_eq!(jordan.checked, 500);
    }
}
