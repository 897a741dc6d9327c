//! Command-line front end. The `upcolor` binary only forwards to [`run`].
//!
//! Exit codes: 0 success, 2 bad input, 3 infeasible instance, 4 instance
//! over the size limit, 5 an internal self-check failed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact::{self, DominationResult, Limits};
use crate::families::{self, FamilySpec};
use crate::graph::{orient, ColoredGraph, Coloring, Graph};
use crate::io;
use crate::reductions::{self, BalancedE2SatInstance, ThreeSatInstance};
use crate::tree;

#[derive(Parser, Debug)]
#[command(
    name = "upcolor",
    version,
    about = "Up-color domination on colored graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Print a JSON report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest instance handed to the exponential searches.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings in JSON reports.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classic invariants, plus fixed-coloring values when the file has colors.
    Param { input: PathBuf },
    /// Exact value of one parameter.
    Oracle { param: OracleParam, input: PathBuf },
    /// Tree algorithms.
    Tree { param: TreeParam, input: PathBuf },
    /// Build a graph from a source problem.
    Reduce {
        kind: ReduceKind,
        input: PathBuf,
        /// Add the disjoint triangle that makes the min-cover coloring optimal.
        #[arg(long)]
        triangle: bool,
        /// Target number of satisfied clauses (max-e2sat).
        #[arg(long)]
        target: Option<usize>,
    },
    /// Generate a family member (`path:5`, `bipartite:2,3`, `hairy:3:complete:2`,
    /// `cone:cycle:4`, `flower:2`) or a random instance (`random-tree`,
    /// `random-graph`).
    Gen {
        family: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Colors available to random colorings.
        #[arg(long, default_value_t = 4)]
        colors: u32,
        /// Edge probability of `random-graph`.
        #[arg(long, default_value_t = 0.4)]
        p: f64,
    },
    /// Check the general inequalities on colored graph files, or on a batch
    /// of random connected graphs.
    AuditBounds {
        inputs: Vec<PathBuf>,
        /// Number of random graphs to audit instead of files.
        #[arg(long)]
        batch: Option<usize>,
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 0.4)]
        p: f64,
    },
    /// Graphviz output; colored graphs are drawn oriented.
    Dot {
        input: PathBuf,
        /// Box the members of an optimal set.
        #[arg(long)]
        highlight: Option<TreeParam>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum OracleParam {
    #[value(name = "gamma-uc")]
    GammaUc,
    #[value(name = "omega-uc")]
    OmegaUc,
    #[value(name = "Omega-uc")]
    OmegaUcMin,
    #[value(name = "Gamma-uc")]
    GammaUcMin,
    #[value(name = "chi-uc")]
    ChiUc,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum TreeParam {
    #[value(name = "gamma-uc")]
    GammaUc,
    #[value(name = "omega-uc")]
    OmegaUc,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ReduceKind {
    #[value(name = "min-cover")]
    MinCover,
    #[value(name = "3sat")]
    ThreeSat,
    #[value(name = "max-e2sat")]
    MaxE2Sat,
}

/// Failure of one command, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible(_) => 3,
            Error::TooLarge { .. } => 4,
            Error::InternalVerificationFailed(_) => 5,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

type Outcome = std::result::Result<(String, Value), Failure>;

fn read(path: &std::path::Path) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| input_failure(path, e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| input_failure(path, e))
    }
}

fn load(path: &std::path::Path) -> std::result::Result<(Graph, Option<Coloring>), Failure> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn load_colored(path: &std::path::Path) -> std::result::Result<ColoredGraph, Failure> {
    match load(path)? {
        (g, Some(c)) => Ok(orient(&g, &c)?),
        (_, None) => Err(Failure {
            code: 2,
            message: format!(
                "{}: this command needs a colored graph (`c` lines)",
                path.display()
            ),
        }),
    }
}

fn members(set: &crate::graph::VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn domination_text(
    name: &str,
    r: &DominationResult,
    weighted: bool,
) -> std::result::Result<String, Failure> {
    if !r.feasible {
        return Err(Error::Infeasible("an isolated vertex has color 0".into()).into());
    }
    let value = if weighted { r.weight } else { r.size as u64 };
    Ok(format!("{name} {value}\nwitness {}\n", members(&r.witness)))
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn limits(global: &Global) -> Limits {
    match global.limit {
        Some(l) => Limits::default().with_search(l).with_coloring(l),
        None => Limits::default(),
    }
}

fn execute(cli: &Cli) -> Outcome {
    let lim = limits(&cli.global);
    match &cli.command {
        Command::Param { input } => {
            let (g, c) = load(input)?;
            let inv = exact::classic_invariants(&g, &lim)?;
            let mut text = format!(
                "n {}\nedges {}\ngamma {}\ni {}\nalpha {}\nchi {}\ntheta {}\ngamma_r {}\n",
                g.n(),
                g.edge_count(),
                inv.gamma,
                inv.i,
                inv.alpha,
                inv.chi,
                inv.theta,
                inv.gamma_r
            );
            let mut value = json!({ "n": g.n(), "edges": g.edge_count(), "invariants": inv });
            if let Some(c) = c {
                let cg = orient(&g, &c)?;
                let gamma = exact::gamma_uc_exact(&cg, &lim)?;
                let omega = exact::omega_uc_exact(&cg, &lim)?;
                if gamma.feasible {
                    let _ = write!(
                        text,
                        "gamma_uc {}\nomega_uc {}\nlocal_maxima {}\n",
                        gamma.size,
                        omega.weight,
                        members(&cg.local_maxima())
                    );
                } else {
                    text.push_str("gamma_uc infeasible\nomega_uc infeasible\n");
                }
                value["gamma_uc"] = to_json(&gamma);
                value["omega_uc"] = to_json(&omega);
            }
            Ok((text, value))
        }
        Command::Oracle { param, input } => oracle(*param, input, &lim),
        Command::Tree { param, input } => {
            let cg = load_colored(input)?;
            let (text, value) = match param {
                TreeParam::GammaUc => {
                    let (r, stats) = tree::tree_gamma_uc_with_stats(&cg)?;
                    (
                        domination_text("gamma_uc", &r, false)?,
                        json!({ "result": r, "stats": stats }),
                    )
                }
                TreeParam::OmegaUc => {
                    let r = tree::tree_omega_uc(&cg)?;
                    (
                        domination_text("omega_uc", &r, true)?,
                        json!({ "result": r }),
                    )
                }
            };
            Ok((text, value))
        }
        Command::Reduce {
            kind,
            input,
            triangle,
            target,
        } => {
            let text = read(input)?;
            let out = match kind {
                ReduceKind::MinCover => {
                    reductions::reduce_min_cover(&io::parse_min_cover(&text)?, *triangle)?
                }
                ReduceKind::ThreeSat => {
                    let (vars, clauses) = io::parse_dimacs_cnf(&text)?;
                    reductions::reduce_3sat_chromatic(&ThreeSatInstance::new(vars, clauses)?)?
                }
                ReduceKind::MaxE2Sat => {
                    let (vars, clauses) = io::parse_dimacs_cnf(&text)?;
                    let pairs = clauses
                        .iter()
                        .enumerate()
                        .map(|(index, c)| match c.as_slice() {
                            &[a, b] => Ok([a, b]),
                            _ => Err(Error::InvalidClause {
                                index,
                                reason: format!("{} literals, expected exactly 2", c.len()),
                            }),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let target = target.unwrap_or(pairs.len());
                    reductions::reduce_balanced_e2sat(&BalancedE2SatInstance::new(
                        vars, pairs, target,
                    )?)?
                }
            };
            let mut text = io::write_graph(&out.graph, out.coloring.as_ref());
            if let Some(k) = out.k {
                text = format!("# k {k}\n{text}");
            }
            Ok((text, to_json(&out)))
        }
        Command::Gen {
            family,
            n,
            colors,
            p,
        } => {
            let seed = cli.global.seed;
            let (g, c) = match family.as_str() {
                "random-tree" => {
                    let (g, c) = io::random_tree(*n, *colors, seed);
                    (g, Some(c))
                }
                "random-graph" => {
                    let g = io::random_connected_graph(*n, *p, seed)?;
                    let mut rng =
                        <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
                    let c = io::random_coloring(&g, *colors, &mut rng);
                    (g, Some(c))
                }
                spec => {
                    let f = families::generate(&spec.parse::<FamilySpec>()?)?;
                    (f.graph, f.coloring)
                }
            };
            Ok((
                io::write_graph(&g, c.as_ref()),
                json!({ "graph": g, "coloring": c }),
            ))
        }
        Command::AuditBounds {
            inputs,
            batch,
            n_min,
            n_max,
            p,
        } => audit(inputs, *batch, (*n_min, *n_max), *p, cli.global.seed, &lim),
        Command::Dot { input, highlight } => {
            let (g, c) = load(input)?;
            let set = match (highlight, &c) {
                (None, _) => None,
                (Some(_), None) => {
                    return Err(Failure {
                        code: 2,
                        message: "highlighting needs a colored graph".into(),
                    })
                }
                (Some(param), Some(c)) => {
                    let cg = orient(&g, c)?;
                    let r = match param {
                        TreeParam::GammaUc => exact::gamma_uc_exact(&cg, &lim)?,
                        TreeParam::OmegaUc => exact::omega_uc_exact(&cg, &lim)?,
                    };
                    if !r.feasible {
                        return Err(
                            Error::Infeasible("an isolated vertex has color 0".into()).into()
                        );
                    }
                    Some(r.witness)
                }
            };
            let dot = io::emit_dot(&g, c.as_ref(), set.as_ref());
            Ok((dot.clone(), json!({ "dot": dot })))
        }
    }
}

fn oracle(param: OracleParam, input: &std::path::Path, lim: &Limits) -> Outcome {
    match param {
        OracleParam::GammaUc | OracleParam::OmegaUc => {
            let cg = load_colored(input)?;
            let weighted = matches!(param, OracleParam::OmegaUc);
            let r = if weighted {
                exact::omega_uc_exact(&cg, lim)?
            } else {
                exact::gamma_uc_exact(&cg, lim)?
            };
            let name = if weighted { "omega_uc" } else { "gamma_uc" };
            Ok((domination_text(name, &r, weighted)?, to_json(&r)))
        }
        OracleParam::OmegaUcMin | OracleParam::GammaUcMin => {
            let (g, _) = load(input)?;
            let (name, r) = if matches!(param, OracleParam::OmegaUcMin) {
                ("Omega_uc", exact::omega_uc_min(&g, lim)?)
            } else {
                ("Gamma_uc", exact::gamma_uc_min(&g, lim)?)
            };
            let colors: Vec<String> = r
                .best_coloring
                .colors()
                .iter()
                .map(|c| c.to_string())
                .collect();
            let text = format!(
                "{name} {}\ncoloring {}\nwitness {}\n",
                r.value,
                colors.join(" "),
                members(&r.witness.witness)
            );
            Ok((text, to_json(&r)))
        }
        OracleParam::ChiUc => {
            let (g, _) = load(input)?;
            let r = exact::chi_uc_exact(&g, lim)?;
            let colors: Vec<String> = r.coloring.colors().iter().map(|c| c.to_string()).collect();
            let text = format!(
                "chi_uc {}\nchi {}\ncoloring {}\ndominating_set {}\n",
                r.value,
                r.chi,
                colors.join(" "),
                members(&r.dominating_set)
            );
            Ok((text, to_json(&r)))
        }
    }
}

fn audit(
    inputs: &[PathBuf],
    batch: Option<usize>,
    (n_min, n_max): (usize, usize),
    p: f64,
    seed: u64,
    lim: &Limits,
) -> Outcome {
    let instances: Vec<(String, ColoredGraph)> = match batch {
        Some(count) => {
            if n_min > n_max {
                return Err(
                    Error::BadParameters(format!("n-min {n_min} exceeds n-max {n_max}")).into(),
                );
            }
            (0..count as u64)
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(s);
                    let n = rand::Rng::gen_range(&mut rng, n_min..=n_max);
                    let g = io::random_connected_graph(n, p, s)?;
                    let c = io::random_coloring(&g, n as u32, &mut rng);
                    Ok((format!("seed {s}"), orient(&g, &c)?))
                })
                .collect::<Result<_, Error>>()?
        }
        None => inputs
            .iter()
            .map(|path| Ok((path.display().to_string(), load_colored(path)?)))
            .collect::<Result<_, Failure>>()?,
    };
    // Instances are independent; results are gathered back in input order.
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(instances.len().max(1));
    let mut results: Vec<Option<crate::error::Result<families::BoundReport>>> =
        vec![None; instances.len()];
    std::thread::scope(|scope| {
        let chunk = instances.len().div_ceil(workers).max(1);
        for (slots, work) in results.chunks_mut(chunk).zip(instances.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, (_, cg)) in slots.iter_mut().zip(work) {
                    *slot = Some(families::audit_bounds(cg, lim));
                }
            });
        }
    });
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut violations = 0;
    for ((name, _), result) in instances.iter().zip(results) {
        let report = result.expect("every slot filled")?;
        let bad: Vec<_> = report.violations().collect();
        violations += bad.len();
        let _ = writeln!(
            text,
            "{name}: {} checks, {} violations",
            report.checks.len(),
            bad.len()
        );
        for b in bad {
            let _ = writeln!(text, "  {} {} > {}", b.name, b.left, b.right);
        }
        reports.push(json!({ "instance": name, "report": report }));
    }
    let _ = writeln!(text, "total violations {violations}");
    Ok((
        text,
        json!({ "instances": reports, "violations": violations }),
    ))
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    let (text, mut value) = match execute(&cli) {
        Ok(out) => out,
        Err(f) => {
            eprintln!("error: {}", f.message);
            if cli.global.json {
                let kind = match f.code {
                    3 => "infeasible",
                    4 => "too_large",
                    5 => "internal",
                    _ => "input",
                };
                let err =
                    json!({ "error": { "code": f.code, "kind": kind, "message": f.message } });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&err).expect("error serializes")
                );
            }
            return f.code;
        }
    };
    let body = if cli.global.json {
        if cli.global.timings {
            value = json!({ "result": value, "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 });
        }
        let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
        s.push('\n');
        s
    } else {
        text
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{body}"),
    }
    0
}
