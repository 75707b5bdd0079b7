use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use sghom::analysis::{has_property_p, has_property_phat, splitters, transitivity, TransitivityKind};
use sghom::gen::{build_tower, named_graph, paley, paley_plus};
use sghom::sgcore::switch;
use sghom::solver::{chi_s_with, chi_sp_with, hom, sp_hom, ChiOptions, SearchOptions};
use sghom::{Error, SignedGraph, VertexSet};
use sghom_harness::cache::{audit_sampled, cache_key, CachedValues, ResultCache};
use sghom_harness::checks::{run_suite, Ctx};
use sghom_harness::format::{graph_from_json, graph_to_json, parse_graph, serialize_graph};

#[derive(Parser)]
#[command(name = "sg", version, about = "Signed graph homomorphisms: generators, solvers and verification")]
struct Cli {
    /// Write graphs and results as JSON instead of the line format.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        what: GenKind,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Switch a graph at a vertex set.
    Switch {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether SRC maps to TGT.
    Hom {
        #[arg(short, long)]
        source: PathBuf,
        #[arg(short, long)]
        target: PathBuf,
        /// Require exact signs (no switching).
        #[arg(long)]
        sp: bool,
        #[arg(long)]
        witness: bool,
        /// Time limit in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Compute chi_s or chi_sp.
    Chi {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// Result cache file (defaults to $SG_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a structural property: P:k,l | Phat:k,l | transitivity:KIND | splitters.
    Props {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        check: String,
    },
    /// Run verification suites.
    Verify {
        /// Comma-separated suite names.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Seconds allowed for open-ended searches.
        #[arg(long, default_value_t = 10.0)]
        budget: f64,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Paley {
        #[arg(long)]
        q: usize,
    },
    PaleyPlus {
        #[arg(long)]
        q: usize,
    },
    Named {
        #[arg(long)]
        name: String,
    },
    Tower {
        #[arg(long)]
        level: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    S,
    Sp,
}

enum Failure {
    Usage(String),
    Check(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded | Error::CapExhausted { .. } | Error::SizeCap { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn read_graph(path: &Path) -> Res<SignedGraph> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let parsed = if text.trim_start().starts_with('{') { graph_from_json(&text) } else { parse_graph(&text) };
    parsed.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Res<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(g: &SignedGraph, json: bool) -> String {
    if json {
        graph_to_json(g) + "\n"
    } else {
        serialize_graph(g)
    }
}

fn budget_opts(budget: Option<f64>) -> SearchOptions {
    SearchOptions { time_budget: budget.map(Duration::from_secs_f64), ..SearchOptions::from_env() }
}

fn threads() -> usize {
    std::env::var("SG_THREADS").ok().and_then(|s| s.parse().ok()).filter(|&t| t > 0).unwrap_or(1)
}

fn run(cli: Cli) -> Res<()> {
    let json = cli.json;
    match cli.command {
        Command::Gen { what, output } => {
            let g = match what {
                GenKind::Paley { q } => paley(q)?,
                GenKind::PaleyPlus { q } => paley_plus(q)?,
                GenKind::Named { name } => named_graph(&name)?.into_graph(),
                GenKind::Tower { level } => build_tower(level)?,
            };
            emit(&render(&g, json), output.as_deref())
        }
        Command::Switch { input, set, output } => {
            let g = read_graph(&input)?;
            let s = VertexSet::new(g.order(), set)?;
            emit(&render(&switch(&g, &s)?, json), output.as_deref())
        }
        Command::Hom { source, target, sp, witness, budget } => {
            let (s, t) = (read_graph(&source)?, read_graph(&target)?);
            let opts = budget_opts(budget);
            let m = if sp { sp_hom(&s, &t, &opts)? } else { hom(&s, &t, &opts)? };
            if json {
                let v = serde_json::json!({
                    "exists": m.is_some(),
                    "image": m.as_ref().filter(|_| witness).map(|m| m.image.clone()),
                    "switch": m.as_ref().filter(|_| witness && !sp).and_then(|m| m.switch_witness.as_ref()).map(|w| w.to_vec()),
                });
                println!("{v}");
            } else {
                println!("{}", if m.is_some() { "yes" } else { "no" });
                if let (true, Some(m)) = (witness, &m) {
                    let pairs: Vec<String> = m.image.iter().enumerate().map(|(v, x)| format!("{v}->{x}")).collect();
                    println!("map {}", pairs.join(" "));
                    if let (false, Some(w)) = (sp, &m.switch_witness) {
                        println!("switch {:?}", w.to_vec());
                    }
                }
            }
            Ok(())
        }
        Command::Chi { input, mode, max_order, cache, budget, seed } => {
            let g = read_graph(&input)?;
            let cache_path = cache.or_else(|| std::env::var_os("SG_CACHE").map(PathBuf::from));
            let mut store = match &cache_path {
                Some(p) => {
                    let c = ResultCache::open(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    if c.was_corrupted() {
                        eprintln!("warning: cache {} failed its checksum; ignoring it", p.display());
                    }
                    Some(c)
                }
                None => None,
            };
            let key = cache_key(&g);
            let compute = || -> Res<usize> {
                let opts = ChiOptions { search: budget_opts(budget), ..ChiOptions::default() };
                let r = match mode {
                    Mode::S => chi_s_with(&g, max_order, &opts)?,
                    Mode::Sp => chi_sp_with(&g, max_order, &opts)?,
                };
                Ok(r.value)
            };
            let cached = store.as_ref().and_then(|c| c.lookup(&key)).and_then(|v| match mode {
                Mode::S => v.chi_s,
                Mode::Sp => v.chi_sp,
            });
            let value = match cached {
                Some(v) => {
                    if audit_sampled(&key, seed) && compute()? != v {
                        return Err(Failure::Check(format!("cache audit failed for key {key}")));
                    }
                    v
                }
                None => {
                    let v = compute()?;
                    if let (Some(c), Some(p)) = (store.as_mut(), &cache_path) {
                        let values = match mode {
                            Mode::S => CachedValues { chi_s: Some(v), ..Default::default() },
                            Mode::Sp => CachedValues { chi_sp: Some(v), ..Default::default() },
                        };
                        c.store(&key, values);
                        c.save().map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    }
                    v
                }
            };
            let name = match mode {
                Mode::S => "chi_s",
                Mode::Sp => "chi_sp",
            };
            if json {
                println!("{}", serde_json::json!({ name: value, "cached": cached.is_some() }));
            } else {
                println!("{name} = {value}");
            }
            Ok(())
        }
        Command::Props { input, check } => {
            let g = read_graph(&input)?;
            let holds = props(&g, &check, json)?;
            if holds {
                Ok(())
            } else {
                Err(Failure::Check(format!("{check} does not hold")))
            }
        }
        Command::Verify { suite, max_n, seed, report, budget } => {
            let ctx = Ctx { seed, max_n, budget: Duration::from_secs_f64(budget), threads: threads() };
            let names: Vec<&str> = suite.iter().map(String::as_str).collect();
            let r = run_suite(&names, &ctx, report.as_deref()).map_err(|e| Failure::Usage(e.to_string()))?;
            print!("{}", if json { r.to_json() + "\n" } else { r.summary() });
            if r.any_failed() {
                Err(Failure::Check(format!("{} checks failed", r.count(sghom_harness::Status::Fail))))
            } else {
                Ok(())
            }
        }
    }
}

fn parse_kl(arg: &str) -> Res<(usize, usize)> {
    let bad = || Failure::Usage(format!("expected k,l in {arg:?}"));
    let (k, l) = arg.split_once(',').ok_or_else(bad)?;
    Ok((k.trim().parse().map_err(|_| bad())?, l.trim().parse().map_err(|_| bad())?))
}

fn props(g: &SignedGraph, check: &str, json: bool) -> Res<bool> {
    let (kind, arg) = check.split_once(':').unwrap_or((check, ""));
    let holds = match kind {
        "P" => {
            let (k, l) = parse_kl(arg)?;
            has_property_p(g, k, l)?
        }
        "Phat" => {
            let (k, l) = parse_kl(arg)?;
            has_property_phat(g, k, l)?
        }
        "transitivity" => transitivity(g, arg.parse::<TransitivityKind>().map_err(Failure::Usage)?),
        "splitters" => {
            let recs = splitters(g)?;
            if json {
                let v: Vec<_> = recs.iter().map(|r| serde_json::json!({ "pair": r.pair, "teams": r.teams })).collect();
                println!("{}", serde_json::Value::Array(v));
            } else {
                for r in &recs {
                    println!("{} {} | {} {} | {} {}", r.pair.0, r.pair.1, r.teams[0].0, r.teams[0].1, r.teams[1].0, r.teams[1].1);
                }
            }
            return Ok(true);
        }
        _ => return Err(Failure::Usage(format!("unknown check {check:?}"))),
    };
    if json {
        println!("{}", serde_json::json!({ "check": check, "holds": holds }));
    } else {
        println!("{holds}");
    }
    Ok(holds)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("{m}");
            ExitCode::from(3)
        }
    }
}
