//! Structural prediction of the minimal Jordan nilpotency index of RG (when at
//! most 4) from properties of R and G alone.
//!
//! The known characterizations are "index n iff ..." statements that are not
//! about the *least* such n, so clauses are tried in order of increasing index
//! and the first one that holds wins.

use std::fmt;
use std::sync::Arc;

use crate::group::{FiniteGroup, IsoClass};
use crate::nilpotency::{ring_conditions, RingConditions};
use crate::ring::FiniteRing;

/// Which characterization clause produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// R commutative, Char 2, G abelian.
    CommutativeChar2Abelian,
    /// R commutative, Char 4, G abelian.
    CommutativeChar4Abelian,
    /// R commutative, Char 2, G' ≅ C2.
    CommutativeChar2DerivedC2,
    /// R non-commutative of ring index ≤ 3, Char 2 or 4, G abelian.
    NoncommutativeAbelianIndex3,
    /// R commutative, Char 8, G abelian.
    CommutativeChar8Abelian,
    /// R commutative, Char 4, G' ≅ C2.
    CommutativeChar4DerivedC2,
    /// R commutative, Char 2, G' ≅ C2×C2 central.
    CommutativeChar2DerivedKlein,
    /// R non-commutative of ring index ≤ 4, Char 2, 4 or 8, G abelian.
    NoncommutativeAbelianIndex4,
    /// R non-commutative, Char 4, the three ring conditions, G' ≅ C2.
    NoncommutativeChar4DerivedC2,
    /// R non-commutative, Char 2, (R∘R)∘R = 0 and (R∘R)(R∘R) = 0, G' ≅ C2.
    NoncommutativeChar2DerivedC2,
}

impl Clause {
    /// Stable tag used in reports.
    pub fn tag(self) -> &'static str {
        match self {
            Clause::CommutativeChar2Abelian => "comm:char2:abelian",
            Clause::CommutativeChar4Abelian => "comm:char4:abelian",
            Clause::CommutativeChar2DerivedC2 => "comm:char2:G'=C2",
            Clause::NoncommutativeAbelianIndex3 => "noncomm:abelian:R-index3",
            Clause::CommutativeChar8Abelian => "comm:char8:abelian",
            Clause::CommutativeChar4DerivedC2 => "comm:char4:G'=C2",
            Clause::CommutativeChar2DerivedKlein => "comm:char2:G'=C2xC2-central",
            Clause::NoncommutativeAbelianIndex4 => "noncomm:abelian:R-index4",
            Clause::NoncommutativeChar4DerivedC2 => "noncomm:char4:ring-conds:G'=C2",
            Clause::NoncommutativeChar2DerivedC2 => "noncomm:char2:ring-conds:G'=C2",
        }
    }

    pub fn index(self) -> usize {
        match self {
            Clause::CommutativeChar2Abelian => 2,
            Clause::CommutativeChar4Abelian
            | Clause::CommutativeChar2DerivedC2
            | Clause::NoncommutativeAbelianIndex3 => 3,
            _ => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Index(usize),
    NotWithinFour,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Index(n) => write!(f, "{n}"),
            Verdict::NotWithinFour => write!(f, ">4"),
        }
    }
}

/// Everything the clauses look at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facts {
    pub ring: String,
    pub group: String,
    pub characteristic: usize,
    pub ring_commutative: bool,
    pub ring_conditions: RingConditions,
    pub group_abelian: bool,
    pub derived_order: usize,
    pub derived_class: IsoClass,
    pub derived_central: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub clause: Option<Clause>,
    pub facts: Facts,
}

impl ClassificationResult {
    pub fn clause_tag(&self) -> &'static str {
        self.clause.map_or("none", Clause::tag)
    }
}

pub fn gather_facts(ring: &Arc<FiniteRing>, group: &FiniteGroup) -> Facts {
    let derived = group.derived_subgroup();
    let center = group.center();
    Facts {
        ring: ring.name().to_string(),
        group: group.name().to_string(),
        characteristic: ring.characteristic(),
        ring_commutative: ring.is_commutative(),
        ring_conditions: ring_conditions(ring, 4),
        group_abelian: group.is_abelian(),
        derived_order: derived.order(),
        derived_class: derived.iso_class(),
        derived_central: derived.is_subset_of(&center),
    }
}

/// First clause, in order of increasing index, whose conditions all hold.
pub fn first_clause(f: &Facts) -> Option<Clause> {
    let ch = f.characteristic;
    let abelian = f.group_abelian;
    let c2 = f.derived_class == IsoClass::C2;
    let rc = &f.ring_conditions;
    let ring_index_at_most = |n: usize| rc.jordan_index_upper.is_some_and(|k| k <= n);

    let candidates: &[(Clause, bool)] = if f.ring_commutative {
        &[
            (Clause::CommutativeChar2Abelian, ch == 2 && abelian),
            (Clause::CommutativeChar4Abelian, ch == 4 && abelian),
            (Clause::CommutativeChar2DerivedC2, ch == 2 && c2),
            (Clause::CommutativeChar8Abelian, ch == 8 && abelian),
            (Clause::CommutativeChar4DerivedC2, ch == 4 && c2),
            (
                Clause::CommutativeChar2DerivedKlein,
                ch == 2 && f.derived_class == IsoClass::C2xC2 && f.derived_central,
            ),
        ]
    } else {
        &[
            (Clause::NoncommutativeAbelianIndex3, abelian && ring_index_at_most(3) && matches!(ch, 2 | 4)),
            (Clause::NoncommutativeAbelianIndex4, abelian && ring_index_at_most(4) && matches!(ch, 2 | 4 | 8)),
            (
                Clause::NoncommutativeChar4DerivedC2,
                ch == 4 && rc.two_circle_zero && rc.circle_circle_zero && rc.circle_square_zero && c2,
            ),
            (
                Clause::NoncommutativeChar2DerivedC2,
                ch == 2 && rc.circle_circle_zero && rc.circle_square_zero && c2,
            ),
        ]
    };
    candidates.iter().find(|(_, holds)| *holds).map(|(c, _)| *c)
}

pub fn classify(ring: &Arc<FiniteRing>, group: &FiniteGroup) -> ClassificationResult {
    let facts = gather_facts(ring, group);
    let clause = first_clause(&facts);
    let verdict = clause.map_or(Verdict::NotWithinFour, |c| Verdict::Index(c.index()));
    ClassificationResult { verdict, clause, facts }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable account of the evaluated predicates and the outcome.
pub fn explain(result: &ClassificationResult) -> String {
    let f = &result.facts;
    let rc = &f.ring_conditions;
    let mut out = String::new();
    out.push_str(&format!("ring {} / group {}\n", f.ring, f.group));
    out.push_str(&format!("  Char(R)            = {}\n", f.characteristic));
    out.push_str(&format!("  R commutative      : {}\n", yes(f.ring_commutative)));
    out.push_str(&format!("  2(R∘R) = 0         : {}\n", yes(rc.two_circle_zero)));
    out.push_str(&format!("  (R∘R)∘R = 0        : {}\n", yes(rc.circle_circle_zero)));
    out.push_str(&format!("  (R∘R)(R∘R) = 0     : {}\n", yes(rc.circle_square_zero)));
    out.push_str(&format!(
        "  Jordan index of R  : {}\n",
        rc.jordan_index_upper.map_or("> 4".to_string(), |n| n.to_string())
    ));
    out.push_str(&format!("  G abelian          : {}\n", yes(f.group_abelian)));
    out.push_str(&format!("  G'                 ≅ {} (order {})\n", f.derived_class, f.derived_order));
    out.push_str(&format!("  G' ⊆ Z(G)          : {}\n", yes(f.derived_central)));
    match result.clause {
        Some(c) => {
            out.push_str(&format!("verdict: minimal Jordan index {} [{}]\n", c.index(), c.tag()));
        }
        None => {
            let reason = if f.derived_class != IsoClass::Trivial
                && f.derived_class != IsoClass::C2
                && f.derived_class != IsoClass::C2xC2
            {
                format!("G' ≅ {} matches no clause", f.derived_class)
            } else {
                "no clause for index 2, 3 or 4 holds".to_string()
            };
            out.push_str(&format!("verdict: not Jordan nilpotent of index ≤ 4 ({reason})\n"));
        }
    }
    out
}
