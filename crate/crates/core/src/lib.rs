//! Finite group rings over finite, possibly non-commutative, coefficient rings,
//! with exhaustive Jordan-nilpotency oracles and a structural classifier of the
//! minimal Jordan index (up to 4).

pub mod builtins;
pub mod classifier;
pub mod error;
pub mod group;
pub mod group_ring;
pub mod harness;
pub mod identities;
pub mod nilpotency;
pub mod ring;
pub mod textfmt;

pub use classifier::{classify, explain, ClassificationResult, Clause, Verdict};
pub use error::{Error, Result};
pub use group::{FiniteGroup, IsoClass, Subgroup};
pub use group_ring::{left_normed_jordan, Bracket, GroupRing, GroupRingElement};
pub use nilpotency::{
    exhaustive_check, minimal_jordan_index, ring_conditions, vanishes_left_normed, MinimalIndex, RingConditions,
    SpanningSet,
};
pub use ring::FiniteRing;
