//! Deciding Jordan (and Lie) nilpotency of a given index.
//!
//! The bracket is bilinear, so a degree-`n` left-normed product vanishes on all
//! of RG iff it vanishes on every `n`-tuple drawn from an additive spanning
//! set. [`SpanningSet`] builds that set from monomials `r·g`, and the search
//! walks tuples in lexicographic order:
//!
//! * a zero partial product prunes its whole subtree;
//! * partial products are memoized on `(slots remaining, value)`, so tuples
//!   whose prefixes agree as elements share all further work;
//! * the first slot is split across the rayon pool with `find_map_first`, so
//!   the reported counterexample is the lexicographically first one whatever
//!   the worker count.
//!
//! [`exhaustive_profile`] is the independent check of that reduction: it uses
//! every element of RG in every slot and full convolution instead of the
//! monomial kernel.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_ring::{Bracket, GroupRing, GroupRingElement};
use crate::ring::FiniteRing;

/// Default upper bound for minimal-index searches.
pub const DEFAULT_MAX_INDEX: usize = 6;

/// Largest context the exhaustive oracle accepts.
pub const EXHAUSTIVE_CAP: u128 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: usize,
    pub group_elem: usize,
}

/// Monomials `r·g` with `r` from the ring's additive generating set and `g` over
/// the group, ordered ring-generator major, group element minor.
#[derive(Debug, Clone)]
pub struct SpanningSet {
    ctx: Arc<GroupRing>,
    monomials: Vec<Monomial>,
}

impl SpanningSet {
    pub fn for_group_ring(ctx: &Arc<GroupRing>) -> Self {
        let ring = ctx.ring();
        let gens = ring.additive_generating_set();
        assert!(
            ring.additive_span(&gens).iter().all(|&b| b),
            "additive generating set does not span {}",
            ring.name()
        );
        let monomials = gens
            .iter()
            .flat_map(|&r| (0..ctx.dim()).map(move |g| Monomial { coeff: r, group_elem: g }))
            .collect();
        SpanningSet { ctx: Arc::clone(ctx), monomials }
    }

    /// Spanning set of the ring alone, viewed as `R[C1]`.
    pub fn for_ring(ring: &Arc<FiniteRing>) -> Self {
        Self::for_group_ring(&GroupRing::over_trivial_group(Arc::clone(ring)))
    }

    pub fn context(&self) -> &Arc<GroupRing> {
        &self.ctx
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn element(&self, i: usize) -> GroupRingElement {
        let m = self.monomials[i];
        self.ctx.embed(m.coeff, m.group_elem)
    }

    /// Number of degree-`n` tuples, saturating.
    pub fn tuple_count(&self, n: usize) -> u128 {
        (0..n).fold(1u128, |acc, _| acc.saturating_mul(self.len() as u128))
    }
}

/// A tuple of spanning-set indices whose left-normed product is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub value: GroupRingElement,
}

impl Counterexample {
    pub fn render(&self, span: &SpanningSet) -> String {
        let factors: Vec<String> = self.indices.iter().map(|&i| span.element(i).to_string()).collect();
        format!("({}) -> {}", factors.join(", "), self.value)
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {}", self.indices, self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinimalIndex {
    Index(usize),
    NotWithinBound(usize),
}

impl fmt::Display for MinimalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimalIndex::Index(n) => write!(f, "{n}"),
            MinimalIndex::NotWithinBound(b) => write!(f, ">{b}"),
        }
    }
}

type MemoKey = Vec<u16>;

/// Lexicographic tuple search with pruning and memoized partial products.
struct Search<'a> {
    span: &'a SpanningSet,
    kind: Bracket,
    // key: coefficients followed by the number of slots still to fill
    memo: DashMap<MemoKey, Option<Box<[u32]>>>,
}

impl<'a> Search<'a> {
    fn new(span: &'a SpanningSet, kind: Bracket) -> Self {
        Search { span, kind, memo: DashMap::new() }
    }

    /// First suffix (lexicographically) extending the nonzero partial `v` by
    /// `rem` slots to a nonzero product.
    fn first_nonzero(&self, v: &[u16], rem: usize) -> Option<Box<[u32]>> {
        if rem == 0 {
            return Some(Box::new([]));
        }
        let mut key: MemoKey = Vec::with_capacity(v.len() + 1);
        key.extend_from_slice(v);
        key.push(rem as u16);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let ctx = &self.span.ctx;
        let mut buf = ctx.zero_coeffs();
        let mut found = None;
        for (i, m) in self.span.monomials.iter().enumerate() {
            ctx.bracket_monomial_into(self.kind, v, m.coeff, m.group_elem, &mut buf);
            if ctx.is_zero(&buf) {
                continue;
            }
            if let Some(rest) = self.first_nonzero(&buf, rem - 1) {
                let mut suffix = Vec::with_capacity(rest.len() + 1);
                suffix.push(i as u32);
                suffix.extend_from_slice(&rest);
                found = Some(suffix.into_boxed_slice());
                break;
            }
        }
        self.memo.insert(key, found.clone());
        found
    }

    fn counterexample(&self, n: usize) -> Option<Counterexample> {
        let indices = (0..self.span.len()).into_par_iter().find_map_first(|i| {
            let first = self.span.element(i);
            if first.is_zero() {
                return None;
            }
            self.first_nonzero(first.coeffs(), n - 1).map(|rest| {
                let mut t = vec![i];
                t.extend(rest.iter().map(|&j| j as usize));
                t
            })
        })?;
        let elems: Vec<GroupRingElement> = indices.iter().map(|&i| self.span.element(i)).collect();
        let value = crate::group_ring::left_normed(self.kind, &elems).expect("shared context");
        debug_assert!(!value.is_zero());
        Some(Counterexample { indices, value })
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidExponent(n))
    } else {
        Ok(())
    }
}

/// `Ok(None)` iff every degree-`n` left-normed circle product over the spanning
/// set vanishes; otherwise the lexicographically first violating tuple.
pub fn vanishes_left_normed(span: &SpanningSet, n: usize) -> Result<Option<Counterexample>> {
    check_degree(n)?;
    Ok(Search::new(span, Bracket::Jordan).counterexample(n))
}

/// Same search with the Lie bracket.
pub fn lie_vanishes_left_normed(span: &SpanningSet, n: usize) -> Result<Option<Counterexample>> {
    check_degree(n)?;
    Ok(Search::new(span, Bracket::Lie).counterexample(n))
}

/// Least `n` in `2..=max_n` at which the left-normed circle product vanishes.
pub fn minimal_jordan_index(span: &SpanningSet, max_n: usize) -> Result<MinimalIndex> {
    check_degree(max_n)?;
    // memo keys carry the remaining depth, so one search serves every n
    let search = Search::new(span, Bracket::Jordan);
    for n in 2..=max_n {
        if search.counterexample(n).is_none() {
            return Ok(MinimalIndex::Index(n));
        }
    }
    Ok(MinimalIndex::NotWithinBound(max_n))
}

fn all_elements(ctx: &GroupRing) -> Vec<Vec<u16>> {
    let q = ctx.ring().order();
    let count = ctx.element_count() as usize;
    (0..count)
        .map(|mut idx| {
            (0..ctx.dim())
                .map(|_| {
                    let c = idx % q;
                    idx /= q;
                    c as u16
                })
                .collect()
        })
        .collect()
}

/// For each degree `2..=max_n`, whether every left-normed product of that degree
/// over *all* elements of the context vanishes.
///
/// Tuples are enumerated level by level: the values of degree `k` are exactly
/// `{v ∘ a : v a value of degree k-1, a ∈ RG}`, so tuples with equal prefix
/// values are expanded once. Zero values are dropped since they only produce zero.
pub fn exhaustive_profile(ctx: &Arc<GroupRing>, kind: Bracket, max_n: usize) -> Result<Vec<bool>> {
    check_degree(max_n)?;
    let count = ctx.element_count();
    if count > EXHAUSTIVE_CAP {
        return Err(Error::TooLarge { elements: count, cap: EXHAUSTIVE_CAP });
    }
    let elements: Vec<Vec<u16>> = all_elements(ctx).into_iter().filter(|e| !ctx.is_zero(e)).collect();
    let mut level: Vec<Vec<u16>> = elements.clone();
    let mut profile = Vec::with_capacity(max_n - 1);
    for _ in 2..=max_n {
        let next: HashSet<Vec<u16>> = level
            .par_iter()
            .fold(HashSet::new, |mut acc, v| {
                let mut buf = ctx.zero_coeffs();
                for a in &elements {
                    ctx.bracket_into(kind, v, a, &mut buf);
                    if !ctx.is_zero(&buf) && !acc.contains(&buf) {
                        acc.insert(buf.clone());
                    }
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        profile.push(next.is_empty());
        level = next.into_iter().collect();
    }
    Ok(profile)
}

/// Brute-force decision over all `n`-tuples of elements; no spanning reduction.
pub fn exhaustive_check(ctx: &Arc<GroupRing>, n: usize) -> Result<bool> {
    Ok(*exhaustive_profile(ctx, Bracket::Jordan, n)?.last().expect("n >= 2"))
}

/// Ring-side conditions of the non-commutative index-4 characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingConditions {
    /// `2(R∘R) = 0`
    pub two_circle_zero: bool,
    /// `(R∘R)∘R = 0`
    pub circle_circle_zero: bool,
    /// `(R∘R)(R∘R) = 0`
    pub circle_square_zero: bool,
    /// Least `n ≤ bound` with `R` Jordan nilpotent of index `n`.
    pub jordan_index_upper: Option<usize>,
}

/// Rings up to this order are checked over all element tuples; larger ones over
/// additive generators in each slot.
pub const FULL_LOOP_ORDER: usize = 32;

pub fn ring_conditions(ring: &Arc<FiniteRing>, bound: usize) -> RingConditions {
    let r = &**ring;
    let slots: Vec<usize> = if r.order() <= FULL_LOOP_ORDER {
        (0..r.order()).collect()
    } else {
        r.additive_generating_set()
    };
    let zero = r.zero();
    let circles: Vec<usize> = {
        let mut seen = vec![false; r.order()];
        for &a in &slots {
            for &b in &slots {
                seen[r.circle(a, b)] = true;
            }
        }
        (0..r.order()).filter(|&c| seen[c]).collect()
    };
    let two_circle_zero = circles.iter().all(|&c| r.add(c, c) == zero);
    let circle_circle_zero = circles.iter().all(|&c| slots.iter().all(|&x| r.circle(c, x) == zero));
    let circle_square_zero = circles.iter().all(|&c| circles.iter().all(|&d| r.mul(c, d) == zero));
    let jordan_index_upper = match minimal_jordan_index(&SpanningSet::for_ring(ring), bound.max(2)) {
        Ok(MinimalIndex::Index(n)) => Some(n),
        _ => None,
    };
    RingConditions { two_circle_zero, circle_circle_zero, circle_square_zero, jordan_index_upper }
}
