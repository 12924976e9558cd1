use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use autorbit_core::autgrp::{self, automorphism_group, DEFAULT_MAX_NODES};
use autorbit_core::group::DEFAULT_CLOSURE_LIMIT;
use autorbit_core::io::{resolve_group, AutomorphismFile};
use autorbit_core::multinomial::{self, PmfMode};
use autorbit_core::stypes::{class_type_table, simple_with_aut};
use autorbit_core::suites::{self, SuiteOptions, WreathMode};
use autorbit_core::wreath::build_hp;
use autorbit_core::{catalog, par, Error};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Automorphism orbits, wreath-product conjugacy and exact bounds for small finite groups.
///
/// Groups are named `name:<catalog id>` (see `catalog list`) or
/// `file:<path>` for a JSON spec `{"name", "degree", "generators"}`.
/// Output is JSON on stdout. Exit codes: 0 ok, 1 verification failure,
/// 2 usage error, 3 resource limit. AUTORBIT_THREADS caps worker threads.
#[derive(Parser, Debug)]
#[command(name = "autorbit", version)]
struct Cli {
    #[command(flatten)]
    budget: Budget,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Budget {
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_LIMIT)]
    max_order: usize,
    /// Node budget for the automorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Skip suite items that would start after this many seconds.
    #[arg(long, global = true)]
    time_limit_s: Option<u64>,
    /// Record per-item runtimes in reports (reports are then not reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Automorphism orbit sizes and maol of a group.
    Maol(GroupArg),
    /// Minimum centralizer size.
    Mcs(GroupArg),
    /// Class/type table and h of a simple group.
    H(SimpleArg),
    /// Conjugacy classes with representatives.
    Classes(GroupArg),
    /// Automorphism group generators.
    Aut(GroupArg),
    /// Explicit constructions.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: Verify,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
}

#[derive(Args, Debug)]
struct GroupArg {
    #[arg(long)]
    group: String,
}

#[derive(Args, Debug)]
struct SimpleArg {
    /// A catalog simple group, e.g. `name:alt6`.
    #[arg(long)]
    simple: String,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// `Aut(S) ≀ C_p` and the orbit of its distinguished element.
    Hp {
        #[arg(long)]
        simple: String,
        #[arg(long)]
        p: u32,
        /// Allow runs with p ≥ 3 (orbits near a million elements).
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Args, Debug)]
struct Sampling {
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// conj_test against brute force in `base ≀ Sym_n`.
    Wreath {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Candidate values on the composition grids.
    Lemma3,
    /// Multinomial pmf against the largest success probability.
    Pmf {
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Numeric checkpoints for small groups.
    PaperTable,
    /// maol ≤ 3/7 on the nonsolvable catalog list.
    NonsolvableBound,
}

struct Outcome {
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, ok: true }
    }
}

fn catalog_id(spec: &str) -> Result<&str, Error> {
    spec.strip_prefix("name:")
        .ok_or_else(|| Error::Parse(format!("expected name:<catalog id>, got {spec}")))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let b = &cli.budget;
    let opts = SuiteOptions {
        max_order: b.max_order,
        max_nodes: b.max_nodes,
        time_limit: b.time_limit_s.map(Duration::from_secs),
        timing: b.timing,
    };
    Ok(match &cli.command {
        Command::Catalog { action: CatalogAction::List } => Outcome::ok(to_json(&catalog::list())),
        Command::Maol(g) => {
            let (name, group) = resolve_group(&g.group, b.max_order)?;
            let aut = automorphism_group(&group, b.max_nodes)?;
            Outcome::ok(to_json(&autgrp::maol(&name, &group, &aut)?))
        }
        Command::Mcs(g) => {
            let (name, group) = resolve_group(&g.group, b.max_order)?;
            Outcome::ok(json!({ "group": name, "order": group.order(), "mcs": group.mcs() }))
        }
        Command::Classes(g) => {
            let (name, group) = resolve_group(&g.group, b.max_order)?;
            let table = group.classes();
            let classes: Vec<Value> = (0..table.len() as u32)
                .map(|c| {
                    let rep = table.representative(c);
                    json!({
                        "class": c,
                        "representative": group.permutation(rep).to_cycle_string(),
                        "order": group.element_order(rep),
                        "size": table.class_size(c),
                    })
                })
                .collect();
            Outcome::ok(json!({ "group": name, "order": group.order(), "classes": classes }))
        }
        Command::Aut(g) => {
            let (name, group) = resolve_group(&g.group, b.max_order)?;
            let aut = automorphism_group(&group, b.max_nodes)?;
            Outcome::ok(to_json(&AutomorphismFile::from_aut(&name, &aut)))
        }
        Command::H(s) => {
            let data = simple_with_aut(catalog_id(&s.simple)?)?;
            let table = class_type_table(&data.aut, &data.s)?;
            let mut v = to_json(&table);
            v["group"] = json!(data.name);
            Outcome::ok(v)
        }
        Command::Construct { what: Construct::Hp { simple, p, slow } } => {
            if *p >= 3 && !slow {
                return Err(Error::BadParameter("p ≥ 3 enumerates large orbits; pass --slow".into()));
            }
            let data = simple_with_aut(catalog_id(simple)?)?;
            let hp = build_hp(&data.aut, *p)?;
            let report = hp.report()?;
            Outcome {
                ok: report.matches,
                json: to_json(&report),
            }
        }
        Command::Verify { suite } => match suite {
            Verify::Wreath { base, n, sampling } => {
                let mode = match sampling.samples {
                    Some(count) if !sampling.exhaustive => WreathMode::Samples { count, seed: sampling.seed },
                    _ => WreathMode::Exhaustive,
                };
                let report = suites::wreath_suite(catalog_id(base)?, *n, mode)?;
                Outcome { ok: report.passed(), json: to_json(&report) }
            }
            Verify::Lemma3 => {
                let report = multinomial::verify_lemma3_grids();
                Outcome { ok: report.passed(), json: to_json(&report) }
            }
            Verify::Pmf { sampling } => {
                let mode = match sampling.samples {
                    Some(samples) if !sampling.exhaustive => PmfMode::Random { samples, seed: sampling.seed },
                    _ => PmfMode::default_exhaustive(),
                };
                let report = multinomial::pmf_bound_check(mode);
                Outcome { ok: report.passed(), json: to_json(&report) }
            }
            Verify::PaperTable => {
                let report = suites::reference_table(&opts);
                Outcome { ok: report.passed(), json: to_json(&report) }
            }
            Verify::NonsolvableBound => {
                let report = suites::nonsolvable_bound(&opts);
                Outcome { ok: report.passed(), json: to_json(&report) }
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("AUTORBIT_THREADS").ok().and_then(|t| t.parse::<usize>().ok()) {
        if threads <= 1 {
            par::set_parallel(false);
        } else {
            par::init_threads(threads);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.json).expect("json");
            println!("{text}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource_limit() {
                ExitCode::from(EXIT_RESOURCE)
            } else {
                ExitCode::from(EXIT_USAGE)
            }
        }
    }
}
