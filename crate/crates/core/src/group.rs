//! Finite groups given by Cayley tables, plus the commutator calculus used by
//! the classifier: commutators, conjugates, derived subgroup, centre.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result, Witness};
use crate::ring::check_table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates a row-major multiplication table and builds the group.
    pub fn new(name: impl Into<String>, order: usize, mul: &[usize], identity: usize) -> Result<Self> {
        check_table("mul", order, mul)?;
        if identity >= order {
            return Err(Error::Shape(format!("identity {identity} out of range for order {order}")));
        }
        let n = order;
        let m = |x: usize, y: usize| mul[x * n + y];
        if let Some(x) = (0..n).find(|&x| m(identity, x) != x || m(x, identity) != x) {
            return Err(Error::NoIdentity(identity, x));
        }
        let inv = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| m(x, y) == identity && m(y, x) == identity)
                    .map(|y| y as u16)
                    .ok_or(Error::NoInverse(x))
            })
            .collect::<Result<Vec<u16>>>()?;
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
        Ok(FiniteGroup {
            name: name.into(),
            order,
            mul: mul.iter().map(|&v| v as u16).collect(),
            inv,
            identity,
        })
    }

    /// Direct product; the pair `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let a = self.mul(x / n2, y / n2);
                let b = other.mul(x % n2, y % n2);
                mul.push(a * n2 + b);
            }
        }
        let identity = self.identity * n2 + other.identity;
        FiniteGroup::new(format!("{}x{}", self.name, other.name), n, &mul, identity)
            .expect("direct product of groups is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub(crate) fn raw_mul(&self) -> &[u16] {
        &self.mul
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn mul_table(&self) -> Vec<usize> {
        self.mul.iter().map(|&v| v as usize).collect()
    }

    /// `(x, y) = x⁻¹y⁻¹xy`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// `x^y = y⁻¹xy`
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(&self, gens: impl IntoIterator<Item = usize>) -> Subgroup<'_> {
        let mut members = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = vec![self.identity];
        let gens: Vec<usize> = gens.into_iter().collect();
        // In a finite group closure under multiplication by generators suffices.
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup { parent: self, members: members.into_iter().collect() }
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup { parent: self, members: (0..self.order).collect() }
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let comms: BTreeSet<usize> = (0..self.order)
            .flat_map(|x| (0..self.order).map(move |y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        self.generated(comms)
    }

    pub fn center(&self) -> Subgroup<'_> {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { parent: self, members }
    }

    /// True iff every square is central.
    pub fn squares_central(&self) -> bool {
        (0..self.order).all(|g| {
            let sq = self.mul(g, g);
            (0..self.order).all(|h| self.mul(sq, h) == self.mul(h, sq))
        })
    }

    /// Hypothesis of the cyclic-derived-subgroup criterion: whenever `(x, y) ≠ 1`,
    /// every `(y, z)` lies in `⟨(x, y)⟩`.
    pub fn commutators_absorbed(&self) -> bool {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let s = self.commutator(x, y);
                if s == self.identity {
                    continue;
                }
                let cyclic = self.generated([s]);
                if !(0..n).all(|z| cyclic.contains(self.commutator(y, z))) {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// A subgroup, stored as the sorted member list of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    members: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        let g = self.parent;
        self.members
            .iter()
            .all(|&h| (0..g.order()).all(|y| self.contains(g.conjugate(h, y))))
    }

    pub fn is_closed(&self) -> bool {
        let g = self.parent;
        self.contains(g.identity())
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.members
            .iter()
            .map(|&x| self.parent.element_order(x))
            .fold(1, |acc, k| acc / gcd(acc, k) * k)
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.members.iter().any(|&x| self.parent.element_order(x) == n)
    }

    pub fn iso_class(&self) -> IsoClass {
        match self.order() {
            1 => IsoClass::Trivial,
            2 => IsoClass::C2,
            4 if self.is_cyclic() => IsoClass::C4,
            4 => IsoClass::C2xC2,
            n if self.is_cyclic() => IsoClass::Cyclic(n),
            _ => IsoClass::Other,
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The isomorphism types the classifier distinguishes; everything else is `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoClass {
    Trivial,
    C2,
    C4,
    C2xC2,
    Cyclic(usize),
    Other,
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoClass::Trivial => write!(f, "1"),
            IsoClass::C2 => write!(f, "C2"),
            IsoClass::C4 => write!(f, "C4"),
            IsoClass::C2xC2 => write!(f, "C2xC2"),
            IsoClass::Cyclic(n) => write!(f, "C{n}"),
            IsoClass::Other => write!(f, "other"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let mul: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FiniteGroup::new(format!("C{n}"), n, &mul, 0).unwrap()
    }

    #[test]
    fn c2_table() {
        let g = FiniteGroup::new("C2", 2, &[0, 1, 1, 0], 0).unwrap();
        assert_eq!(g.inv(1), 1);
        assert!(g.is_abelian());
        assert_eq!(g.derived_subgroup().iso_class(), IsoClass::Trivial);
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn latin_square_violation() {
        // row 1 repeats element 1
        let mul = [0, 1, 2, 1, 1, 0, 2, 0, 1];
        let err = FiniteGroup::new("bad", 3, &mul, 0).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(_) | Error::NoInverse(_)), "{err}");
    }

    #[test]
    fn missing_identity() {
        let mul = [1, 0, 0, 1];
        assert!(matches!(FiniteGroup::new("bad", 2, &mul, 0), Err(Error::NoIdentity(0, 0))));
    }

    #[test]
    fn iso_classes_of_cyclic_groups() {
        assert_eq!(cyclic(4).whole().iso_class(), IsoClass::C4);
        assert_eq!(cyclic(3).whole().iso_class(), IsoClass::Cyclic(3));
        let k = cyclic(2).direct_product(&cyclic(2));
        assert_eq!(k.whole().iso_class(), IsoClass::C2xC2);
        assert_eq!(k.whole().exponent(), 2);
        assert_eq!(cyclic(2).direct_product(&cyclic(4)).whole().iso_class(), IsoClass::Other);
        assert_eq!(cyclic(6).whole().exponent(), 6);
    }

    #[test]
    fn abelian_commutators_are_trivial() {
        let g = cyclic(5);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(g.commutator(x, y), 0);
                assert_eq!(g.conjugate(x, y), x);
            }
        }
        assert!(g.squares_central());
        assert!(g.commutators_absorbed());
        assert_eq!(g.power(2, 3), 1);
    }
}
