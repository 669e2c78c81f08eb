use std::sync::Arc;

use proptest::prelude::*;

use jrl::builtins::{builtin_group, builtin_ring, CATALOG_GROUPS, GROUP_NAMES, RING_NAMES};
use jrl::harness::with_jobs;
use jrl::nilpotency::{exhaustive_profile, lie_vanishes_left_normed};
use jrl::textfmt::{emit_group, emit_ring, parse_group, parse_ring};
use jrl::{left_normed_jordan, minimal_jordan_index, vanishes_left_normed, Bracket, GroupRing, GroupRingElement, MinimalIndex, SpanningSet};

fn ctx(r: &str, g: &str) -> Arc<GroupRing> {
    GroupRing::new(Arc::new(builtin_ring(r).unwrap()), Arc::new(builtin_group(g).unwrap()))
}

/// Small contexts where elements can be drawn freely.
const CONTEXTS: &[(&str, &str)] = &[
    ("Z2", "D4"),
    ("Z4", "Q8"),
    ("Z8", "S3"),
    ("M2(F2)", "C2xC2"),
    ("T2(Z4)", "D4"),
    ("H16", "Q8"),
    ("H32", "D4"),
];

fn element(ctx: &Arc<GroupRing>) -> impl Strategy<Value = GroupRingElement> {
    let ctx = Arc::clone(ctx);
    let q = ctx.ring().order();
    proptest::collection::vec(0..q, ctx.dim()).prop_map(move |c| ctx.element(&c).unwrap())
}

fn context_and_elements(k: usize) -> impl Strategy<Value = Vec<GroupRingElement>> {
    (0..CONTEXTS.len()).prop_flat_map(move |i| {
        let (r, g) = CONTEXTS[i];
        proptest::collection::vec(element(&ctx(r, g)), k)
    })
}

#[test]
fn text_format_round_trips_builtins() {
    for name in RING_NAMES {
        let r = builtin_ring(name).unwrap();
        let back = parse_ring(&emit_ring(&r)).unwrap();
        assert_eq!(back.add_table(), r.add_table(), "{name}");
        assert_eq!(back.mul_table(), r.mul_table(), "{name}");
        assert_eq!((back.zero(), back.one()), (r.zero(), r.one()));
    }
    for name in GROUP_NAMES {
        let g = builtin_group(name).unwrap();
        let back = parse_group(&emit_group(&g)).unwrap();
        assert_eq!(back.mul_table(), g.mul_table(), "{name}");
        assert_eq!(back.identity(), g.identity());
    }
}

#[test]
fn derived_subgroup_is_normal_and_abelianizes() {
    for name in GROUP_NAMES {
        let g = builtin_group(name).unwrap();
        let d = g.derived_subgroup();
        assert!(d.is_closed() && d.is_normal(), "{name}");
        assert_eq!(d.order() == 1, g.is_abelian(), "{name}");
        assert!(g.center().is_normal());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_products_round_trip(a in 1usize..7, b in 1usize..7) {
        let g = builtin_group(&format!("C{a}xC{b}")).unwrap();
        prop_assert!(g.is_abelian());
        let back = parse_group(&emit_group(&g)).unwrap();
        prop_assert_eq!(back.mul_table(), g.mul_table());
    }

    #[test]
    fn integers_mod_round_trip(n in 1usize..40) {
        let r = builtin_ring(&format!("Z{n}")).unwrap();
        prop_assert_eq!(r.characteristic(), n);
        let back = parse_ring(&emit_ring(&r)).unwrap();
        prop_assert_eq!(back.mul_table(), r.mul_table());
    }

    #[test]
    fn commutator_identities(gi in 0..CATALOG_GROUPS.len(), x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let g = builtin_group(CATALOG_GROUPS[gi]).unwrap();
        let n = g.order();
        let (x, y, z) = (x % n, y % n, z % n);
        // (xy, z) = (x, z)^y (y, z)
        let lhs = g.commutator(g.mul(x, y), z);
        let rhs = g.mul(g.conjugate(g.commutator(x, z), y), g.commutator(y, z));
        prop_assert_eq!(lhs, rhs);
        // (x, yz) = (x, z)(x, y)^z
        let lhs = g.commutator(x, g.mul(y, z));
        let rhs = g.mul(g.commutator(x, z), g.conjugate(g.commutator(x, y), z));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(g.derived_subgroup().contains(g.commutator(x, y)));
    }

    #[test]
    fn circle_is_commutative_and_bilinear(v in context_and_elements(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a.circle(b).unwrap(), b.circle(a).unwrap());
        let lhs = a.checked_add(b).unwrap().circle(c).unwrap();
        let rhs = a.circle(c).unwrap().checked_add(&b.circle(c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_identity(v in context_and_elements(2)) {
        let (a, b) = (&v[0], &v[1]);
        let a2 = a.circle(a).unwrap();
        let lhs = a2.circle(b).unwrap().circle(a).unwrap();
        let rhs = a2.circle(&b.circle(a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_power_of_one(ri in 0..RING_NAMES.len(), n in 1usize..8) {
        let r = Arc::new(builtin_ring(RING_NAMES[ri]).unwrap());
        let c = GroupRing::over_trivial_group(Arc::clone(&r));
        let got = c.one().jordan_power(n).unwrap();
        let want = c.one().times(1 << (n - 1));
        prop_assert_eq!(got, want);
    }

    /// Elements drawn from a nilpotent context satisfy the search's verdict.
    #[test]
    fn spanning_verdict_holds_on_random_tuples(
        which in 0usize..4,
        seed in proptest::collection::vec(0usize..1 << 16, 4 * 64),
    ) {
        let (r, g, n) = [("Z2", "D4", 3), ("Z4", "Q8", 4), ("H16", "D4", 4), ("H32", "C4", 3)][which];
        let c = ctx(r, g);
        let span = SpanningSet::for_group_ring(&c);
        prop_assert!(vanishes_left_normed(&span, n).unwrap().is_none());
        let q = c.ring().order();
        let elems: Vec<GroupRingElement> = seed
            .chunks(c.dim())
            .take(n)
            .map(|ch| c.element(&ch.iter().map(|&x| x % q).collect::<Vec<_>>()).unwrap())
            .collect();
        prop_assert!(left_normed_jordan(&elems).unwrap().is_zero());
    }
}

#[test]
fn counterexamples_are_genuine() {
    for (r, g) in [("Z2", "S3"), ("Z4", "D4"), ("Z8", "Q8"), ("M2(F2)", "C2"), ("H32", "D4")] {
        let span = SpanningSet::for_group_ring(&ctx(r, g));
        for n in 2..=4 {
            if let Some(cx) = vanishes_left_normed(&span, n).unwrap() {
                assert_eq!(cx.indices.len(), n);
                let elems: Vec<_> = cx.indices.iter().map(|&i| span.element(i)).collect();
                let v = left_normed_jordan(&elems).unwrap();
                assert!(!v.is_zero());
                assert_eq!(v, cx.value);
            }
        }
    }
}

#[test]
fn vanishing_is_monotone() {
    for (r, g) in [("Z2", "D4"), ("Z4", "C2"), ("Z8", "D4"), ("Z16", "C2"), ("H16", "Q8"), ("T2(F2)", "C2")] {
        let span = SpanningSet::for_group_ring(&ctx(r, g));
        let profile: Vec<bool> = (2..=6).map(|n| vanishes_left_normed(&span, n).unwrap().is_none()).collect();
        for w in profile.windows(2) {
            assert!(!w[0] || w[1], "{r}[{g}]: {profile:?}");
        }
        let first = profile.iter().position(|&b| b).map(|i| i + 2);
        let idx = minimal_jordan_index(&span, 6).unwrap();
        assert_eq!(idx, first.map_or(MinimalIndex::NotWithinBound(6), MinimalIndex::Index));
    }
}

#[test]
fn lie_search_matches_exhaustive() {
    for (r, g) in [("Z2", "D4"), ("Z4", "C2"), ("T2(F2)", "C2"), ("M2(F2)", "C1"), ("Z2", "S3")] {
        let c = ctx(r, g);
        let span = SpanningSet::for_group_ring(&c);
        let profile = exhaustive_profile(&c, Bracket::Lie, 4).unwrap();
        for n in 2..=4 {
            let fast = lie_vanishes_left_normed(&span, n).unwrap().is_none();
            assert_eq!(fast, profile[n - 2], "{r}[{g}] n={n}");
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for (r, g) in [("Z2", "S3"), ("Z4", "D4xD4"), ("H32", "Q8"), ("T2(Z4)", "C8")] {
        let span = SpanningSet::for_group_ring(&ctx(r, g));
        let run = || (minimal_jordan_index(&span, 6).unwrap(), vanishes_left_normed(&span, 4).unwrap());
        let one = with_jobs(1, run);
        for k in [2, 3, 8] {
            assert_eq!(with_jobs(k, run), one, "{r}[{g}] jobs={k}");
        }
    }
}
