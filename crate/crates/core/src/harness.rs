//! Catalog resolution and the classifier-vs-oracle cross-check.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::builtins::{builtin_group, builtin_ring, CATALOG_GROUPS, CATALOG_RINGS};
use crate::classifier::{classify, ClassificationResult, Verdict};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::group_ring::GroupRing;
use crate::nilpotency::{minimal_jordan_index, MinimalIndex, SpanningSet, DEFAULT_MAX_INDEX};
use crate::ring::FiniteRing;
use crate::textfmt;

pub const BUILTIN_PREFIX: &str = "builtin:";

/// Pairs whose degree-4 spanning tuple count exceeds this are skipped.
pub const TUPLE_BUDGET: u128 = 100_000_000;

/// `builtin:<name>` or a path to a ring file.
pub fn resolve_ring(source: &str) -> Result<FiniteRing> {
    match source.strip_prefix(BUILTIN_PREFIX) {
        Some(name) => builtin_ring(name),
        None => textfmt::parse_ring_file(source),
    }
}

/// `builtin:<name>` or a path to a group file.
pub fn resolve_group(source: &str) -> Result<FiniteGroup> {
    match source.strip_prefix(BUILTIN_PREFIX) {
        Some(name) => builtin_group(name),
        None => textfmt::parse_group_file(source),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub ring: String,
    pub group: String,
}

impl CatalogEntry {
    pub fn new(ring: impl Into<String>, group: impl Into<String>) -> Self {
        CatalogEntry { ring: ring.into(), group: group.into() }
    }
}

/// Every catalog ring against every catalog group, ring-major.
pub fn default_catalog() -> Vec<CatalogEntry> {
    CATALOG_RINGS
        .iter()
        .flat_map(|r| {
            CATALOG_GROUPS
                .iter()
                .map(move |g| CatalogEntry::new(format!("{BUILTIN_PREFIX}{r}"), format!("{BUILTIN_PREFIX}{g}")))
        })
        .collect()
}

/// All `*.ring` files against all `*.group` files in `dir`, in file-name order.
pub fn catalog_from_dir(dir: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    let mut rings: Vec<PathBuf> = Vec::new();
    let mut groups: Vec<PathBuf> = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        match path.extension().and_then(|e| e.to_str()) {
            Some("ring") => rings.push(path),
            Some("group") => groups.push(path),
            _ => {}
        }
    }
    rings.sort();
    groups.sort();
    Ok(rings
        .iter()
        .flat_map(|r| groups.iter().map(move |g| CatalogEntry::new(r.display().to_string(), g.display().to_string())))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Agree,
    Disagree,
    /// Over the tuple budget; the oracle was not run.
    Skipped,
    /// The entry could not be resolved.
    Failed(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Agree => write!(f, "Agree"),
            Status::Disagree => write!(f, "Disagree"),
            Status::Skipped => write!(f, "Skipped(budget)"),
            Status::Failed(kind) => write!(f, "Error({kind})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheckRecord {
    pub entry: CatalogEntry,
    pub predicted: Option<ClassificationResult>,
    pub oracle: Option<MinimalIndex>,
    pub status: Status,
    pub elapsed_ms: u128,
    pub note: String,
}

/// `Index(n)` must meet an oracle index of exactly `n`; `NotWithinFour` must meet
/// an oracle that found nonvanishing products through degree 4.
pub fn agrees(verdict: Verdict, oracle: MinimalIndex) -> bool {
    match (verdict, oracle) {
        (Verdict::Index(n), MinimalIndex::Index(m)) => n == m,
        (Verdict::Index(_), MinimalIndex::NotWithinBound(_)) => false,
        (Verdict::NotWithinFour, MinimalIndex::Index(m)) => m > 4,
        (Verdict::NotWithinFour, MinimalIndex::NotWithinBound(b)) => b >= 4,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CrossCheckOptions {
    pub max_index: usize,
    pub tuple_budget: u128,
}

impl Default for CrossCheckOptions {
    fn default() -> Self {
        CrossCheckOptions { max_index: DEFAULT_MAX_INDEX, tuple_budget: TUPLE_BUDGET }
    }
}

fn check_entry(entry: &CatalogEntry, opts: CrossCheckOptions) -> CrossCheckRecord {
    let start = Instant::now();
    let resolved = resolve_ring(&entry.ring).and_then(|r| Ok((r, resolve_group(&entry.group)?)));
    let (ring, group) = match resolved {
        Ok(pair) => pair,
        Err(e) => {
            return CrossCheckRecord {
                entry: entry.clone(),
                predicted: None,
                oracle: None,
                status: Status::Failed(e.kind().to_string()),
                elapsed_ms: start.elapsed().as_millis(),
                note: e.to_string(),
            }
        }
    };
    let ring = Arc::new(ring);
    let group = Arc::new(group);
    let predicted = classify(&ring, &group);
    let span = SpanningSet::for_group_ring(&GroupRing::new(ring, group));
    let tuples = span.tuple_count(4);
    let (oracle, status, note) = if tuples > opts.tuple_budget {
        (None, Status::Skipped, format!("{tuples} degree-4 tuples over budget {}", opts.tuple_budget))
    } else {
        let oracle = minimal_jordan_index(&span, opts.max_index).expect("max_index >= 4");
        let status = if agrees(predicted.verdict, oracle) { Status::Agree } else { Status::Disagree };
        (Some(oracle), status, String::new())
    };
    CrossCheckRecord {
        entry: entry.clone(),
        predicted: Some(predicted),
        oracle,
        status,
        elapsed_ms: start.elapsed().as_millis(),
        note,
    }
}

/// Classifies and runs the oracle on each entry; records come back in input order.
/// Work is spread over the current rayon pool (see [`with_jobs`]).
pub fn crosscheck(entries: &[CatalogEntry], opts: CrossCheckOptions) -> Result<Vec<CrossCheckRecord>> {
    if opts.max_index < 4 {
        return Err(Error::InvalidExponent(opts.max_index));
    }
    Ok(entries.par_iter().map(|e| check_entry(e, opts)).collect())
}

/// Runs `f` on a dedicated pool of `jobs` workers (`0` means rayon's default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(f)
}

fn display_name(source: &str) -> &str {
    source.strip_prefix(BUILTIN_PREFIX).unwrap_or(source)
}

pub const REPORT_HEADER: &str = "ring\tgroup\tpredicted\tclause\toracle\tstatus\tms";

pub fn render_report(records: &[CrossCheckRecord]) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for r in records {
        let (predicted, clause) = match &r.predicted {
            Some(p) => (p.verdict.to_string(), p.clause_tag().to_string()),
            None => ("-".into(), "-".into()),
        };
        let oracle = r.oracle.map_or("-".to_string(), |o| o.to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            display_name(&r.entry.ring),
            display_name(&r.entry.group),
            predicted,
            clause,
            oracle,
            r.status,
            r.elapsed_ms
        ));
    }
    out
}

pub fn emit_report(records: &[CrossCheckRecord], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, render_report(records))?;
    Ok(())
}

pub fn any_disagreement(records: &[CrossCheckRecord]) -> bool {
    records.iter().any(|r| r.status == Status::Disagree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_rule() {
        assert!(agrees(Verdict::Index(3), MinimalIndex::Index(3)));
        assert!(!agrees(Verdict::Index(3), MinimalIndex::Index(4)));
        assert!(!agrees(Verdict::Index(4), MinimalIndex::NotWithinBound(6)));
        assert!(agrees(Verdict::NotWithinFour, MinimalIndex::Index(5)));
        assert!(!agrees(Verdict::NotWithinFour, MinimalIndex::Index(4)));
        assert!(agrees(Verdict::NotWithinFour, MinimalIndex::NotWithinBound(4)));
    }

    #[test]
    fn small_crosscheck() {
        let entries = vec![
            CatalogEntry::new("builtin:Z4", "builtin:D4"),
            CatalogEntry::new("builtin:M2(F2)", "builtin:C2"),
            CatalogEntry::new("builtin:Nope", "builtin:C2"),
        ];
        let recs = crosscheck(&entries, CrossCheckOptions::default()).unwrap();
        assert_eq!(recs[0].status, Status::Agree);
        assert_eq!(recs[0].oracle, Some(MinimalIndex::Index(4)));
        assert_eq!(recs[1].status, Status::Agree);
        assert_eq!(recs[1].predicted.as_ref().unwrap().verdict, Verdict::NotWithinFour);
        assert_eq!(recs[2].status, Status::Failed("UnknownName".into()));
        assert!(!any_disagreement(&recs));
        assert!(crosscheck(&entries, CrossCheckOptions { max_index: 3, ..Default::default() }).is_err());
    }

    #[test]
    fn budget_skips() {
        let entries = vec![CatalogEntry::new("builtin:H16", "builtin:D4xD4")];
        let recs = crosscheck(&entries, CrossCheckOptions::default()).unwrap();
        assert_eq!(recs[0].status, Status::Skipped);
        assert!(recs[0].predicted.is_some());
        assert!(recs[0].oracle.is_none());
    }

    #[test]
    fn report_format() {
        assert_eq!(render_report(&[]), format!("{REPORT_HEADER}\n"));
        let recs = crosscheck(&[CatalogEntry::new("builtin:Z2", "builtin:C2")], CrossCheckOptions::default()).unwrap();
        let text = render_report(&recs);
        let row: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
        assert_eq!(&row[..6], &["Z2", "C2", "2", "comm:char2:abelian", "2", "Agree"]);
    }
}
