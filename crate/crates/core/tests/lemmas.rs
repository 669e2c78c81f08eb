//! Consequences of Jordan nilpotency that must hold across the catalog.

use std::sync::Arc;

use jrl::builtins::{builtin_group, builtin_ring, CATALOG_GROUPS, GROUP_NAMES, RING_NAMES};
use jrl::harness::TUPLE_BUDGET;
use jrl::{minimal_jordan_index, GroupRing, MinimalIndex, SpanningSet};

fn catalog_indices() -> Vec<(String, String, usize, usize)> {
    let mut out = Vec::new();
    for r in RING_NAMES {
        let ring = Arc::new(builtin_ring(r).unwrap());
        for g in CATALOG_GROUPS {
            let group = Arc::new(builtin_group(g).unwrap());
            let span = SpanningSet::for_group_ring(&GroupRing::new(Arc::clone(&ring), group));
            if span.tuple_count(4) > TUPLE_BUDGET {
                continue;
            }
            if let MinimalIndex::Index(n) = minimal_jordan_index(&span, 6).unwrap() {
                out.push((r.to_string(), g.to_string(), n, ring.characteristic()));
            }
        }
    }
    out
}

#[test]
fn characteristic_divides_power_of_two() {
    let found = catalog_indices();
    assert!(found.len() > 30);
    for (r, g, n, ch) in found {
        assert!((1usize << (n - 1)).is_multiple_of(ch), "{r}[{g}] index {n}, Char {ch}");
    }
}

#[test]
fn extremal_characteristic_forces_abelian() {
    let mut seen = 0;
    for (r, g, n, ch) in catalog_indices() {
        if ch == 1 << (n - 1) {
            seen += 1;
            assert!(builtin_group(&g).unwrap().is_abelian(), "{r}[{g}]");
        }
    }
    assert!(seen > 0);
}

#[test]
fn central_squares_give_elementary_central_derived() {
    let mut seen = 0;
    for name in GROUP_NAMES {
        let g = builtin_group(name).unwrap();
        if !g.squares_central() {
            continue;
        }
        seen += 1;
        let d = g.derived_subgroup();
        assert!(d.is_subset_of(&g.center()), "{name}");
        assert!(d.members().iter().all(|&c| g.mul(c, c) == g.identity()), "{name}");
    }
    assert!(seen >= 5);
    assert!(!builtin_group("S3").unwrap().squares_central());
}

#[test]
fn absorbed_commutators_give_cyclic_derived() {
    let mut seen = 0;
    for name in GROUP_NAMES.iter().copied().chain(["D3", "D5", "D6", "C2xQ8", "C3xS3"]) {
        let g = builtin_group(name).unwrap();
        if g.commutators_absorbed() {
            seen += 1;
            assert!(g.derived_subgroup().is_cyclic(), "{name}");
        }
    }
    assert!(seen >= 5);
    // C2xC2 derived subgroup, so the hypothesis must fail
    assert!(!builtin_group("D4xD4").unwrap().commutators_absorbed());
}
