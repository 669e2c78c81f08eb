//! Finite associative unital rings given by Cayley tables.
//!
//! Elements are dense indices `0..order`. A [`FiniteRing`] can only be obtained
//! through [`FiniteRing::new`], which checks every ring axiom exhaustively, so
//! downstream code never re-validates.

use crate::error::{Error, Result, Witness};

/// Largest order a table may have; coefficients are stored as `u16`.
pub const MAX_ORDER: usize = u16::MAX as usize + 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
}

pub(crate) fn check_table(what: &str, order: usize, table: &[usize]) -> Result<()> {
    if order == 0 {
        return Err(Error::Shape(format!("{what}: order must be positive")));
    }
    if order > MAX_ORDER {
        return Err(Error::Shape(format!("{what}: order {order} exceeds {MAX_ORDER}")));
    }
    if table.len() != order * order {
        return Err(Error::Shape(format!(
            "{what}: expected {} entries, found {}",
            order * order,
            table.len()
        )));
    }
    if let Some(pos) = table.iter().position(|&v| v >= order) {
        return Err(Error::Shape(format!(
            "{what}: entry ({}, {}) = {} is out of range",
            pos / order,
            pos % order,
            table[pos]
        )));
    }
    Ok(())
}

impl FiniteRing {
    /// Validates the tables (row-major, `order * order` entries each) and builds the ring.
    ///
    /// Checks, in order: the additive abelian group with neutral `zero`, the two-sided
    /// identity `one`, associativity of multiplication, both distributive laws, and
    /// annihilation by zero. The error names the first violating tuple.
    pub fn new(
        name: impl Into<String>,
        order: usize,
        add: &[usize],
        mul: &[usize],
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        check_table("add", order, add)?;
        check_table("mul", order, mul)?;
        if zero >= order || one >= order {
            return Err(Error::Shape(format!("zero/one index out of range for order {order}")));
        }
        let n = order;
        let a = |x: usize, y: usize| add[x * n + y];
        let m = |x: usize, y: usize| mul[x * n + y];

        for x in 0..n {
            if a(x, zero) != x || a(zero, x) != x {
                return Err(Error::NotAbelianGroup { law: "zero is neutral", witness: Witness(vec![x]) });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return Err(Error::NotAbelianGroup { law: "commutativity", witness: Witness(vec![x, y]) });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = a(x, y);
                for z in 0..n {
                    if a(xy, z) != a(x, a(y, z)) {
                        return Err(Error::NotAbelianGroup {
                            law: "associativity",
                            witness: Witness(vec![x, y, z]),
                        });
                    }
                }
            }
        }
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| a(x, y) == zero)
                    .map(|y| y as u16)
                    .ok_or_else(|| Error::NotAbelianGroup { law: "additive inverse", witness: Witness(vec![x]) })
            })
            .collect::<Result<Vec<u16>>>()?;

        if let Some(x) = (0..n).find(|&x| m(one, x) != x || m(x, one) != x) {
            return Err(Error::NoIdentity(one, x));
        }
        for x in 0..n {
            for y in 0..n {
                let xy = m(x, y);
                for z in 0..n {
                    if m(xy, z) != m(x, m(y, z)) {
                        return Err(Error::NotAssociative(Witness(vec![x, y, z])));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let ypz = a(x, y);
                for z in 0..n {
                    if m(z, ypz) != a(m(z, x), m(z, y)) {
                        return Err(Error::NotDistributive { side: "left", witness: Witness(vec![z, x, y]) });
                    }
                    if m(ypz, z) != a(m(x, z), m(y, z)) {
                        return Err(Error::NotDistributive { side: "right", witness: Witness(vec![x, y, z]) });
                    }
                }
            }
        }
        // Implied by distributivity; kept as a direct check.
        if let Some(x) = (0..n).find(|&x| m(zero, x) != zero || m(x, zero) != zero) {
            return Err(Error::NotDistributive { side: "zero annihilation", witness: Witness(vec![x]) });
        }

        Ok(FiniteRing {
            name: name.into(),
            order,
            add: add.iter().map(|&v| v as u16).collect(),
            mul: mul.iter().map(|&v| v as u16).collect(),
            neg,
            zero,
            one,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Row-major tables for the group-ring kernels.
    pub(crate) fn raw_add(&self) -> &[u16] {
        &self.add
    }

    pub(crate) fn raw_mul(&self) -> &[u16] {
        &self.mul
    }

    pub(crate) fn raw_neg(&self) -> &[u16] {
        &self.neg
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a` for a non-negative integer `k`.
    pub fn times(&self, k: usize, a: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    /// Ring-level circle product `ab + ba`.
    #[inline]
    pub fn circle(&self, a: usize, b: usize) -> usize {
        self.add(self.mul(a, b), self.mul(b, a))
    }

    /// Additive order of an element.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut acc = a;
        while acc != self.zero {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the additive subgroup generated by `gens`.
    pub fn additive_span(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[self.zero] = true;
        let mut stack = vec![self.zero];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Greedy additive generating set: repeatedly adjoin the lowest-index element
    /// outside the current span.
    pub fn additive_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.additive_span(&gens);
        while let Some(x) = span.iter().position(|&inside| !inside) {
            gens.push(x);
            span = self.additive_span(&gens);
        }
        gens
    }

    /// Row-major tables as plain indices, e.g. for serialization.
    pub fn add_table(&self) -> Vec<usize> {
        self.add.iter().map(|&v| v as usize).collect()
    }

    pub fn mul_table(&self) -> Vec<usize> {
        self.mul.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<usize>, Vec<usize>) {
        let mut add = Vec::new();
        let mut mul = Vec::new();
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        (add, mul)
    }

    #[test]
    fn z4_is_a_ring() {
        let (add, mul) = zn_tables(4);
        let r = FiniteRing::new("Z4", 4, &add, &mul, 0, 1).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.characteristic(), 4);
        assert!(r.is_commutative());
        assert_eq!(r.additive_generating_set(), vec![1]);
        assert_eq!(r.neg(1), 3);
    }

    #[test]
    fn zero_multiplication_has_no_identity() {
        let (add, _) = zn_tables(4);
        let mul = vec![0; 16];
        assert!(matches!(FiniteRing::new("z", 4, &add, &mul, 0, 1), Err(Error::NoIdentity(1, _))));
    }

    #[test]
    fn bad_shapes() {
        let (add, mul) = zn_tables(3);
        assert!(matches!(FiniteRing::new("x", 3, &add[..8], &mul, 0, 1), Err(Error::Shape(_))));
        let mut bad = add.clone();
        bad[4] = 7;
        assert!(matches!(FiniteRing::new("x", 3, &bad, &mul, 0, 1), Err(Error::Shape(_))));
        assert!(matches!(FiniteRing::new("x", 3, &add, &mul, 0, 3), Err(Error::Shape(_))));
    }

    #[test]
    fn broken_addition_is_reported() {
        let (mut add, mul) = zn_tables(3);
        // 1 + 2 := 1 breaks commutativity before anything else
        add[5] = 1;
        let err = FiniteRing::new("x", 3, &add, &mul, 0, 1).unwrap_err();
        assert!(matches!(err, Error::NotAbelianGroup { law: "commutativity", .. }), "{err}");
    }

    #[test]
    fn broken_distributivity_is_reported() {
        let (add, mut mul) = zn_tables(3);
        // keep 1 as identity and commutativity of the table; break 2*2
        mul[8] = 2;
        let err = FiniteRing::new("x", 3, &add, &mul, 0, 1).unwrap_err();
        assert!(
            matches!(err, Error::NotDistributive { .. } | Error::NotAssociative(_)),
            "{err}"
        );
    }

    #[test]
    fn span_of_generators_is_everything() {
        let (add, mul) = zn_tables(6);
        let r = FiniteRing::new("Z6", 6, &add, &mul, 0, 1).unwrap();
        assert!(r.additive_span(&r.additive_generating_set()).iter().all(|&b| b));
        assert!(r.additive_span(&[2]).iter().filter(|&&b| b).count() == 3);
        assert_eq!(r.times(5, 1), 5);
        assert_eq!(r.additive_order(2), 3);
    }
}
