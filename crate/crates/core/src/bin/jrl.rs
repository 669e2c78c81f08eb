use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use jrl::builtins::{GROUP_NAMES, RING_NAMES};
use jrl::harness::{self, CrossCheckOptions};
use jrl::identities::{run_suite, SuiteOptions};
use jrl::nilpotency::{minimal_jordan_index, vanishes_left_normed, MinimalIndex, SpanningSet, DEFAULT_MAX_INDEX};
use jrl::textfmt::{self, Structure};
use jrl::{classify, explain, GroupRing};

#[derive(Parser)]
#[command(name = "jrl", version, about = "Jordan nilpotency of finite group rings")]
struct Cli {
    /// Worker threads (0 = one per core)
    #[arg(long, global = true, env = "JRL_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a ring or group file
    Validate { file: PathBuf },
    /// List built-in rings and groups
    ListBuiltins,
    /// Predict the minimal Jordan index from structural conditions
    Classify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        group: String,
    },
    /// Search for the minimal Jordan index by exhaustive tuple search
    Oracle {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        group: String,
        #[arg(long = "max-index", default_value_t = DEFAULT_MAX_INDEX)]
        max_index: usize,
    },
    /// Compare classifier and oracle over a catalog
    Crosscheck {
        /// Directory of *.ring and *.group files (default: built-in catalog)
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long = "max-index", default_value_t = DEFAULT_MAX_INDEX)]
        max_index: usize,
        /// Write the TSV report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the ring, group and group-ring identities on one instance
    Identities {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

fn fail(e: jrl::Error) -> ExitCode {
    eprintln!("error[{}]: {e}", e.kind());
    ExitCode::from(2)
}

fn resolve(ring: &str, group: &str) -> jrl::Result<Arc<GroupRing>> {
    let r = harness::resolve_ring(ring)?;
    let g = harness::resolve_group(group)?;
    Ok(GroupRing::new(Arc::new(r), Arc::new(g)))
}

fn run(cli: Cli) -> jrl::Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(&file)?;
            match textfmt::parse_structure(&text)? {
                Structure::Ring(r) => println!(
                    "ok: ring {} of order {}, characteristic {}, {}",
                    r.name(),
                    r.order(),
                    r.characteristic(),
                    if r.is_commutative() { "commutative" } else { "non-commutative" }
                ),
                Structure::Group(g) => println!(
                    "ok: group {} of order {}, |G'| = {}, |Z(G)| = {}",
                    g.name(),
                    g.order(),
                    g.derived_subgroup().order(),
                    g.center().order()
                ),
            }
        }
        Command::ListBuiltins => {
            println!("rings:  {}", RING_NAMES.iter().map(|n| format!("builtin:{n}")).collect::<Vec<_>>().join(" "));
            println!("groups: {}", GROUP_NAMES.iter().map(|n| format!("builtin:{n}")).collect::<Vec<_>>().join(" "));
            println!("        (also builtin:C<n>, builtin:D<n>, builtin:Z<n> and products such as builtin:C2xD4)");
        }
        Command::Classify { ring, group } => {
            let ctx = resolve(&ring, &group)?;
            print!("{}", explain(&classify(ctx.ring(), ctx.group())));
        }
        Command::Oracle { ring, group, max_index } => {
            let ctx = resolve(&ring, &group)?;
            let span = SpanningSet::for_group_ring(&ctx);
            let result = harness::with_jobs(cli.jobs, || -> jrl::Result<_> {
                let idx = minimal_jordan_index(&span, max_index)?;
                let last_bad = match idx {
                    MinimalIndex::Index(n) if n > 2 => Some(n - 1),
                    MinimalIndex::Index(_) => None,
                    MinimalIndex::NotWithinBound(b) => Some(b),
                };
                let witness = match last_bad {
                    Some(n) => vanishes_left_normed(&span, n)?.map(|c| (n, c)),
                    None => None,
                };
                Ok((idx, witness))
            })?;
            let (idx, witness) = result;
            println!("context: {} ({} spanning monomials)", ctx.name(), span.len());
            match idx {
                MinimalIndex::Index(n) => println!("minimal Jordan index: {n}"),
                MinimalIndex::NotWithinBound(b) => println!("minimal Jordan index: > {b}"),
            }
            if let Some((n, c)) = witness {
                println!("nonzero degree-{n} product: {}", c.render(&span));
            }
        }
        Command::Crosscheck { catalog, max_index, report } => {
            let entries = match catalog {
                Some(dir) => harness::catalog_from_dir(dir)?,
                None => harness::default_catalog(),
            };
            let opts = CrossCheckOptions { max_index, ..CrossCheckOptions::default() };
            let records = harness::with_jobs(cli.jobs, || harness::crosscheck(&entries, opts))?;
            for r in &records {
                if !r.note.is_empty() {
                    eprintln!("{} / {}: {}", r.entry.ring, r.entry.group, r.note);
                }
            }
            match report {
                Some(path) => harness::emit_report(&records, path)?,
                None => print!("{}", harness::render_report(&records)),
            }
            if harness::any_disagreement(&records) {
                eprintln!("classifier and oracle disagree");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Identities { ring, group, samples } => {
            let ctx = resolve(&ring, &group)?;
            let opts = SuiteOptions { samples, ..SuiteOptions::default() };
            let outcomes = run_suite(&ctx, opts);
            let mut ok = true;
            for o in &outcomes {
                ok &= o.passed();
                println!(
                    "{}  {:<38} {:>9} {} tuples{}",
                    if o.passed() { "ok  " } else { "FAIL" },
                    o.name,
                    o.checked,
                    if o.exhaustive { "exhaustive" } else { "sampled" },
                    o.first_failure.as_ref().map(|t| format!(", first failure {t:?}")).unwrap_or_default()
                );
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(fail)
}
