//! Arithmetic in the group ring RG with dense coefficient vectors.
//!
//! Every [`GroupRingElement`] carries its [`GroupRing`] handle; combining
//! elements of different group rings is an error. The oracles in
//! [`crate::nilpotency`] work on raw coefficient slices through the
//! `*_into` kernels to avoid allocation in their inner loops.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;

#[derive(Debug, PartialEq, Eq)]
pub struct GroupRing {
    ring: Arc<FiniteRing>,
    group: Arc<FiniteGroup>,
    // transposed multiplication tables, so `ba` can be read along a row
    ring_mul_t: Vec<u16>,
    group_mul_t: Vec<u16>,
}

fn transpose(table: &[u16], n: usize) -> Vec<u16> {
    (0..n * n).map(|i| table[(i % n) * n + i / n]).collect()
}

/// Which bilinear bracket a left-normed product is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bracket {
    /// `ab + ba`
    Jordan,
    /// `ab - ba`
    Lie,
}

impl GroupRing {
    pub fn new(ring: Arc<FiniteRing>, group: Arc<FiniteGroup>) -> Arc<Self> {
        let ring_mul_t = transpose(ring.raw_mul(), ring.order());
        let group_mul_t = transpose(group.raw_mul(), group.order());
        Arc::new(GroupRing { ring, group, ring_mul_t, group_mul_t })
    }

    /// The ring itself, viewed as `R[C1]`.
    pub fn over_trivial_group(ring: Arc<FiniteRing>) -> Arc<Self> {
        let trivial = FiniteGroup::new("C1", 1, &[0], 0).expect("trivial group");
        GroupRing::new(ring, Arc::new(trivial))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Length of a coefficient vector, `|G|`.
    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// `|R|^|G|`, saturating at `u128::MAX`.
    pub fn element_count(&self) -> u128 {
        let base = self.ring.order() as u128;
        (0..self.dim()).fold(1u128, |acc, _| acc.saturating_mul(base))
    }

    pub fn name(&self) -> String {
        format!("{}[{}]", self.ring.name(), self.group.name())
    }

    pub(crate) fn is_zero(&self, a: &[u16]) -> bool {
        let z = self.ring.zero() as u16;
        a.iter().all(|&c| c == z)
    }

    pub(crate) fn zero_coeffs(&self) -> Vec<u16> {
        vec![self.ring.zero() as u16; self.dim()]
    }

    pub(crate) fn add_into(&self, a: &[u16], b: &[u16], out: &mut [u16]) {
        for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
            *o = self.ring.add(x as usize, y as usize) as u16;
        }
    }

    pub(crate) fn neg_into(&self, a: &[u16], out: &mut [u16]) {
        for (o, &x) in out.iter_mut().zip(a) {
            *o = self.ring.neg(x as usize) as u16;
        }
    }

    /// Convolution: `out[h] = Σ_{g1 g2 = h} a[g1]·b[g2]`.
    pub(crate) fn mul_into(&self, a: &[u16], b: &[u16], out: &mut [u16]) {
        let r = &*self.ring;
        let g = &*self.group;
        let zero = r.zero();
        out.fill(zero as u16);
        for (g1, &x) in a.iter().enumerate() {
            if x as usize == zero {
                continue;
            }
            for (g2, &y) in b.iter().enumerate() {
                if y as usize == zero {
                    continue;
                }
                let h = g.mul(g1, g2);
                out[h] = r.add(out[h] as usize, r.mul(x as usize, y as usize)) as u16;
            }
        }
    }

    /// `ab ± ba` by full convolution, in one pass over the nonzero coefficient pairs.
    pub(crate) fn bracket_into(&self, kind: Bracket, a: &[u16], b: &[u16], out: &mut [u16]) {
        let (n, q) = (self.dim(), self.ring.order());
        let zero = self.ring.zero() as u16;
        let (radd, rmul, rneg) = (self.ring.raw_add(), self.ring.raw_mul(), self.ring.raw_neg());
        let gmul = self.group.raw_mul();
        let lie = kind == Bracket::Lie;
        out.fill(zero);
        for (g1, &x) in a.iter().enumerate() {
            if x == zero {
                continue;
            }
            let x = x as usize;
            // row g1 of G gives g1·g2, row g1 of the transpose gives g2·g1; same for R
            let (g_left, g_right) = (&gmul[g1 * n..][..n], &self.group_mul_t[g1 * n..][..n]);
            let (x_left, x_right) = (&rmul[x * q..][..q], &self.ring_mul_t[x * q..][..q]);
            for ((&y, &h), &k) in b.iter().zip(g_left).zip(g_right) {
                if y == zero {
                    continue;
                }
                let y = y as usize;
                let (h, k) = (h as usize, k as usize);
                out[h] = radd[out[h] as usize * q + x_left[y] as usize];
                let term = if lie { rneg[x_right[y] as usize] } else { x_right[y] };
                out[k] = radd[out[k] as usize * q + term as usize];
            }
        }
    }

    /// `a ∘ (r·g)` or `[a, r·g]` for a monomial right operand, in `O(|G|)`.
    pub(crate) fn bracket_monomial_into(&self, kind: Bracket, a: &[u16], r: usize, g: usize, out: &mut [u16]) {
        let ring = &*self.ring;
        let group = &*self.group;
        let zero = ring.zero();
        out.fill(zero as u16);
        for (k, &c) in a.iter().enumerate() {
            let c = c as usize;
            if c == zero {
                continue;
            }
            // a_k k · r g  =  (a_k r)(k g)
            let right = group.mul(k, g);
            out[right] = ring.add(out[right] as usize, ring.mul(c, r)) as u16;
            // r g · a_k k  =  (r a_k)(g k)
            let left = group.mul(g, k);
            let term = ring.mul(r, c);
            let term = if kind == Bracket::Lie { ring.neg(term) } else { term };
            out[left] = ring.add(out[left] as usize, term) as u16;
        }
    }

    pub(crate) fn wrap(self: &Arc<Self>, coeffs: Vec<u16>) -> GroupRingElement {
        GroupRingElement { ctx: Arc::clone(self), coeffs }
    }

    pub fn zero(self: &Arc<Self>) -> GroupRingElement {
        self.wrap(self.zero_coeffs())
    }

    pub fn one(self: &Arc<Self>) -> GroupRingElement {
        self.embed(self.ring.one(), self.group.identity())
    }

    /// The monomial `r·g`.
    pub fn embed(self: &Arc<Self>, r: usize, g: usize) -> GroupRingElement {
        assert!(r < self.ring.order() && g < self.dim(), "embed: index out of range");
        let mut coeffs = self.zero_coeffs();
        coeffs[g] = r as u16;
        self.wrap(coeffs)
    }

    /// Element from a coefficient list indexed by group element.
    pub fn element(self: &Arc<Self>, coeffs: &[usize]) -> Result<GroupRingElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!("expected {} coefficients, found {}", self.dim(), coeffs.len())));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.ring.order()) {
            return Err(Error::Shape(format!("coefficient {c} is not a ring element")));
        }
        Ok(self.wrap(coeffs.iter().map(|&c| c as u16).collect()))
    }

    /// `coeff@g + ...`, omitting zero terms; `0` for the zero element.
    pub fn render(&self, coeffs: &[u16]) -> String {
        let zero = self.ring.zero() as u16;
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != zero)
            .map(|(g, c)| format!("{c}@g{g}"))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupRingElement {
    ctx: Arc<GroupRing>,
    coeffs: Vec<u16>,
}

fn same_context(a: &Arc<GroupRing>, b: &Arc<GroupRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn context(&self) -> &Arc<GroupRing> {
        &self.ctx
    }

    /// Coefficient of each group element, as ring-element indices.
    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> usize {
        self.coeffs[g] as usize
    }

    pub fn is_zero(&self) -> bool {
        self.ctx.is_zero(&self.coeffs)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn binary(&self, other: &Self, f: impl FnOnce(&GroupRing, &[u16], &[u16], &mut [u16])) -> Result<Self> {
        self.check(other)?;
        let mut out = self.ctx.zero_coeffs();
        f(&self.ctx, &self.coeffs, &other.coeffs, &mut out);
        Ok(self.ctx.wrap(out))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.binary(other, GroupRing::add_into)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, GroupRing::mul_into)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.ctx.zero_coeffs();
        self.ctx.neg_into(&self.coeffs, &mut out);
        self.ctx.wrap(out)
    }

    /// Left multiplication of every coefficient by the ring element `r`.
    pub fn scale(&self, r: usize) -> Self {
        let ring = self.ctx.ring();
        let coeffs = self.coeffs.iter().map(|&c| ring.mul(r, c as usize) as u16).collect();
        self.ctx.wrap(coeffs)
    }

    /// `k·a` for a non-negative integer `k`.
    pub fn times(&self, k: usize) -> Self {
        let ring = self.ctx.ring();
        let coeffs = self.coeffs.iter().map(|&c| ring.times(k, c as usize) as u16).collect();
        self.ctx.wrap(coeffs)
    }

    /// Circle product `ab + ba`.
    pub fn circle(&self, other: &Self) -> Result<Self> {
        self.binary(other, |ctx, a, b, out| ctx.bracket_into(Bracket::Jordan, a, b, out))
    }

    /// Lie product `ab - ba`.
    pub fn lie_bracket(&self, other: &Self) -> Result<Self> {
        self.binary(other, |ctx, a, b, out| ctx.bracket_into(Bracket::Lie, a, b, out))
    }

    pub fn bracket(&self, kind: Bracket, other: &Self) -> Result<Self> {
        match kind {
            Bracket::Jordan => self.circle(other),
            Bracket::Lie => self.lie_bracket(other),
        }
    }

    /// `a^{∘1} = a`, `a^{∘n} = a^{∘(n-1)} ∘ a`.
    pub fn jordan_power(&self, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidExponent(n));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.circle(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctx.render(&self.coeffs))
    }
}

/// `(...((a1 ∘ a2) ∘ a3) ...) ∘ an`
pub fn left_normed_jordan(elements: &[GroupRingElement]) -> Result<GroupRingElement> {
    left_normed(Bracket::Jordan, elements)
}

pub fn left_normed(kind: Bracket, elements: &[GroupRingElement]) -> Result<GroupRingElement> {
    let (first, rest) = elements.split_first().ok_or(Error::EmptySequence)?;
    rest.iter().try_fold(first.clone(), |acc, x| acc.bracket(kind, x))
}
