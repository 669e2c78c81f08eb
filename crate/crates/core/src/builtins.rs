//! Built-in rings and groups, constructed from concrete models and then run
//! through the same validation as user-supplied tables.
//!
//! Groups: `C<n>`, `D<n>` (dihedral of order `2n`), `Q8`, `S3`, and direct
//! products written with `x` (`C2xC2`, `D4xD4`, ...).
//!
//! Rings: `Z<n>`, `M2(F2)`, `T2(F2)`, `T2(Z4)`, `H16`, `H32`, `H64`. The `H`
//! family is `Z_m·1 ⊕ U` where `U` is the algebra of strictly upper-triangular
//! 3×3 matrices over F2 and `2U = 0`; `m = 2, 4, 8` gives orders 16, 32, 64.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;

pub const GROUP_NAMES: &[&str] = &["C1", "C2", "C4", "C8", "C2xC2", "D4", "Q8", "S3", "D4xD4"];

pub const RING_NAMES: &[&str] = &["Z2", "Z4", "Z8", "Z16", "M2(F2)", "T2(F2)", "T2(Z4)", "H16", "H32", "H64"];

/// Rings of the default cross-check catalog.
pub const CATALOG_RINGS: &[&str] = &["Z2", "Z4", "Z8", "Z16", "M2(F2)", "T2(F2)", "T2(Z4)", "H16", "H32"];

/// Groups of the default cross-check catalog.
pub const CATALOG_GROUPS: &[&str] = GROUP_NAMES;

fn parse_suffix(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok().filter(|n| (1..=4096).contains(n))
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    let mul: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteGroup::new(format!("C{n}"), n, &mul, 0).expect("cyclic group")
}

/// Dihedral group of order `2n`; `r^i s^j` has index `i + n*j`, so `r = 1`, `s = n`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    let size = 2 * n;
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            mul.push(rot + n * ((b + d) % 2));
        }
    }
    FiniteGroup::new(format!("D{n}"), size, &mul, 0).expect("dihedral group")
}

/// Quaternion group; index `4*sign + unit` with units `1, i, j, k`.
pub fn quaternion_group() -> FiniteGroup {
    // unit products: (unit, sign flip)
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut mul = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (u, f) = T[x % 4][y % 4];
            let sign = (x / 4 + y / 4 + f) % 2;
            mul.push(sign * 4 + u);
        }
    }
    FiniteGroup::new("Q8", 8, &mul, 0).expect("quaternion group")
}

/// Symmetric group on three points, elements in lexicographic order of permutations.
pub fn symmetric3() -> FiniteGroup {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index: HashMap<[usize; 3], usize> = perms.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut mul = Vec::with_capacity(36);
    for p in &perms {
        for q in &perms {
            // (pq)(i) = p(q(i))
            let c = [p[q[0]], p[q[1]], p[q[2]]];
            mul.push(index[&c]);
        }
    }
    FiniteGroup::new("S3", 6, &mul, 0).expect("symmetric group")
}

fn base_group(name: &str) -> Option<FiniteGroup> {
    match name {
        "Q8" => Some(quaternion_group()),
        "S3" => Some(symmetric3()),
        _ => {
            if let Some(n) = parse_suffix(name, 'C') {
                Some(cyclic_group(n))
            } else {
                parse_suffix(name, 'D').map(dihedral_group)
            }
        }
    }
}

pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    if let Some(g) = base_group(name) {
        return Ok(g);
    }
    let factors: Vec<&str> = name.split('x').collect();
    if factors.len() < 2 {
        return Err(Error::UnknownName(name.to_string()));
    }
    let mut groups = factors
        .iter()
        .map(|f| base_group(f).ok_or_else(|| Error::UnknownName(name.to_string())));
    let first = groups.next().expect("at least two factors")?;
    let product = groups.try_fold(first, |acc, g| g.map(|g| acc.direct_product(&g)))?;
    if product.order() > 4096 {
        return Err(Error::UnknownName(name.to_string()));
    }
    Ok(product.with_name(name))
}

/// Builds and validates a ring from an explicit model whose elements are listed in index order.
pub fn ring_from_model<T, A, M>(name: &str, elements: &[T], add: A, mul: M, zero: &T, one: &T) -> Result<FiniteRing>
where
    T: Eq + Hash + Clone,
    A: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
{
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let lookup = |e: &T| {
        index
            .get(e)
            .copied()
            .ok_or_else(|| Error::Shape(format!("{name}: model is not closed under its operations")))
    };
    let n = elements.len();
    let mut add_t = Vec::with_capacity(n * n);
    let mut mul_t = Vec::with_capacity(n * n);
    for a in elements {
        for b in elements {
            add_t.push(lookup(&add(a, b))?);
            mul_t.push(lookup(&mul(a, b))?);
        }
    }
    FiniteRing::new(name, n, &add_t, &mul_t, lookup(zero)?, lookup(one)?)
}

pub fn integers_mod(n: usize) -> FiniteRing {
    let elems: Vec<usize> = (0..n).collect();
    ring_from_model(&format!("Z{n}"), &elems, |a, b| (a + b) % n, |a, b| (a * b) % n, &0, &(1 % n))
        .expect("integers modulo n")
}

/// 2×2 matrices over F2; index `a11 + 2·a12 + 4·a21 + 8·a22`, so the matrix
/// units E11, E12, E21, E22 are 1, 2, 4, 8.
pub fn matrices_f2() -> FiniteRing {
    type M = [[u8; 2]; 2];
    let elems: Vec<M> = (0..16u8)
        .map(|i| [[i & 1, (i >> 1) & 1], [(i >> 2) & 1, (i >> 3) & 1]])
        .collect();
    let add = |a: &M, b: &M| {
        let mut c = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][j] ^ b[i][j];
            }
        }
        c
    };
    let mul = |a: &M, b: &M| {
        let mut c = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = (a[i][0] & b[0][j]) ^ (a[i][1] & b[1][j]);
            }
        }
        c
    };
    ring_from_model("M2(F2)", &elems, add, mul, &[[0, 0], [0, 0]], &[[1, 0], [0, 1]]).expect("M2(F2)")
}

/// Upper-triangular 2×2 matrices over Z/m; `(a, b, c)` = `[[a, b], [0, c]]` has
/// index `a + m·b + m²·c`.
pub fn upper_triangular(m: usize, name: &str) -> FiniteRing {
    let mut elems = Vec::with_capacity(m * m * m);
    for c in 0..m {
        for b in 0..m {
            for a in 0..m {
                elems.push((a, b, c));
            }
        }
    }
    let add = |x: &(usize, usize, usize), y: &(usize, usize, usize)| ((x.0 + y.0) % m, (x.1 + y.1) % m, (x.2 + y.2) % m);
    let mul = |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
        ((x.0 * y.0) % m, (x.0 * y.1 + x.1 * y.2) % m, (x.2 * y.2) % m)
    };
    ring_from_model(name, &elems, add, mul, &(0, 0, 0), &(1 % m, 0, 1 % m)).expect("upper-triangular ring")
}

/// `Z_m·1 ⊕ U` with `U` the strictly upper-triangular 3×3 matrices over F2 and `2U = 0`.
///
/// Element `(a, u)` with `u = (u12, u13, u23)` has index `a + m·(u12 + 2·u13 + 4·u23)`;
/// `U` acts through `a mod 2`, and the only nonzero product of units is `E12·E23 = E13`.
pub fn scalar_plus_nilpotent(m: usize) -> FiniteRing {
    type E = (usize, [u8; 3]);
    let mut elems: Vec<E> = Vec::with_capacity(8 * m);
    for bits in 0..8u8 {
        for a in 0..m {
            elems.push((a, [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1]));
        }
    }
    let add = |x: &E, y: &E| ((x.0 + y.0) % m, [x.1[0] ^ y.1[0], x.1[1] ^ y.1[1], x.1[2] ^ y.1[2]]);
    let mul = |x: &E, y: &E| {
        let (a, u) = x;
        let (b, v) = y;
        let (a2, b2) = ((*a % 2) as u8, (*b % 2) as u8);
        let uv13 = u[0] & v[2];
        (
            (a * b) % m,
            [
                (a2 & v[0]) ^ (b2 & u[0]),
                (a2 & v[1]) ^ (b2 & u[1]) ^ uv13,
                (a2 & v[2]) ^ (b2 & u[2]),
            ],
        )
    };
    let name = format!("H{}", 8 * m);
    ring_from_model(&name, &elems, add, mul, &(0, [0; 3]), &(1 % m, [0; 3])).expect("scalar plus nilpotent ring")
}

pub fn builtin_ring(name: &str) -> Result<FiniteRing> {
    match name {
        "M2(F2)" => Ok(matrices_f2()),
        "T2(F2)" => Ok(upper_triangular(2, "T2(F2)")),
        "T2(Z4)" => Ok(upper_triangular(4, "T2(Z4)")),
        "H16" => Ok(scalar_plus_nilpotent(2)),
        "H32" => Ok(scalar_plus_nilpotent(4)),
        "H64" => Ok(scalar_plus_nilpotent(8)),
        _ => match parse_suffix(name, 'Z') {
            Some(n) if n <= 256 => Ok(integers_mod(n).with_name(name)),
            _ => Err(Error::UnknownName(name.to_string())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_commutator_calculus() {
        let d4 = builtin_group("D4").unwrap();
        let (r, s) = (1, 4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.power(r, 4), 0);
        assert_eq!(d4.mul(s, s), 0);
        assert_eq!(d4.mul(d4.mul(s, r), s), d4.inv(r));
        assert_eq!(d4.commutator(r, s), 2);
        assert_eq!(d4.conjugate(r, s), 3);
        assert_eq!(d4.conjugate(r, 0), r);
        let derived = d4.derived_subgroup();
        assert_eq!(derived.members(), &[0, 2]);
        assert_eq!(d4.center().members(), &[0, 2]);
        assert!(d4.squares_central());
    }

    #[test]
    fn quaternion_commutator() {
        let q = builtin_group("Q8").unwrap();
        let (i, j, minus_one) = (1, 2, 4);
        assert_eq!(q.mul(i, j), 3);
        assert_eq!(q.commutator(i, j), minus_one);
        assert_eq!(q.derived_subgroup().members(), &[0, 4]);
        assert_eq!(q.element_order(i), 4);
    }

    #[test]
    fn s3_structure() {
        let s3 = builtin_group("S3").unwrap();
        let derived = s3.derived_subgroup();
        assert_eq!(derived.order(), 3);
        assert_eq!(derived.iso_class(), crate::group::IsoClass::Cyclic(3));
        assert!(derived.members().iter().all(|&x| s3.element_order(x) != 2));
        assert_eq!(s3.center().order(), 1);
        assert!(!s3.squares_central());
    }

    #[test]
    fn products_and_unknown_names() {
        let g = builtin_group("D4xD4").unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(g.name(), "D4xD4");
        assert_eq!(g.derived_subgroup().iso_class(), crate::group::IsoClass::C2xC2);
        assert_eq!(builtin_group("C2xC2").unwrap().order(), 4);
        assert_eq!(builtin_group("C2xC4xC2").unwrap().order(), 16);
        assert!(matches!(builtin_group("A5"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin_group("C2xFoo"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin_ring("Z0"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin_ring("F4"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn ring_models() {
        let m2 = builtin_ring("M2(F2)").unwrap();
        assert_eq!(m2.order(), 16);
        assert_eq!(m2.characteristic(), 2);
        assert!(!m2.is_commutative());
        assert_eq!(m2.additive_generating_set(), vec![1, 2, 4, 8]);
        // E11·E12 = E12, E12·E11 = 0
        assert_eq!(m2.mul(1, 2), 2);
        assert_eq!(m2.mul(2, 1), 0);

        let t2 = builtin_ring("T2(F2)").unwrap();
        assert_eq!(t2.order(), 8);
        assert!(!t2.is_commutative());

        let t4 = builtin_ring("T2(Z4)").unwrap();
        assert_eq!((t4.order(), t4.characteristic()), (64, 4));

        let h16 = builtin_ring("H16").unwrap();
        assert_eq!((h16.order(), h16.characteristic()), (16, 2));
        assert!(!h16.is_commutative());
        assert_eq!(h16.additive_generating_set().len(), 4);

        let h32 = builtin_ring("H32").unwrap();
        assert_eq!((h32.order(), h32.characteristic()), (32, 4));
        assert!(!h32.is_commutative());

        let h64 = builtin_ring("H64").unwrap();
        assert_eq!((h64.order(), h64.characteristic()), (64, 8));

        for (name, ch) in [("Z2", 2), ("Z4", 4), ("Z8", 8), ("Z16", 16)] {
            let r = builtin_ring(name).unwrap();
            assert_eq!(r.characteristic(), ch);
            assert_eq!(r.additive_generating_set(), vec![1]);
        }
    }
}
