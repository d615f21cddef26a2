//! Thin command-line front end over the library. Exit codes: 0 on success,
//! 2 on input or precondition errors, 3 when a search cap is exceeded.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use irregulators::bounds;
use irregulators::dimacs;
use irregulators::error::Error;
use irregulators::generators::{self, FamilySpec};
use irregulators::graph::{EdgeSet, Graph};
use irregulators::harness::{self, MethodChoice, SolveConfig};
use irregulators::kernel::{self, KernelResult, KernelStatus};
use irregulators::oracle::SearchLimits;
use irregulators::vc::VcLimits;

#[derive(Parser)]
#[command(
    name = "irregulators",
    about = "Minimum edge deletions to make a graph locally irregular",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph file to read (`c`/`p edge`/`e` lines, 1-indexed vertices).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Where to write the command's main output (defaults to stdout).
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Solver to use for `compute`.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,

    /// Worker threads for sweeps (results are identical for any count).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Omit timings so that repeated runs are byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,

    /// Cap on the exhaustive search's candidate-edge pool.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_candidates)]
    max_candidates: usize,

    /// Cap on the deletion-set size the exhaustive search attempts.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_subset)]
    max_k: usize,

    /// Cap on the exhaustively enumerated core edges of the cover solver.
    #[arg(long, global = true, default_value_t = VcLimits::default().core_edge_cap)]
    vc_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimum deletion count with a verified certificate.
    Compute {
        /// Also write the certificate as `u v` lines for `verify`.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Check a deletion set against a graph.
    Verify {
        /// File of 1-indexed `u v` pairs (one per line, `c` comments allowed).
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Report lower and constructive upper bounds with a verified witness.
    Bound,
    /// Shrink an instance around its conflicting edges for a given budget.
    Kernelize {
        #[arg(long)]
        k: usize,
    },
    /// Generate a graph family instance.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated leg lengths for the subdivided stars.
        #[arg(long)]
        legs: Option<String>,
        /// Second centre's legs for the subdivided bistar.
        #[arg(long)]
        legs2: Option<String>,
        /// Edge count of the path joining the bistar centres.
        #[arg(long, default_value_t = 1)]
        bridge: usize,
        /// Edge probability for random_connected.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Base family for double_subdivision.
        #[arg(long, value_enum)]
        base: Option<Family>,
    },
    /// Sweep the built-in suite and report each instance's excess over m/3.
    Conjecture {
        /// Seed for the suite's random trees.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also export the report as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    TreeDp,
    Formula,
    VcFpt,
    Bounds,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Oracle => MethodChoice::Oracle,
            MethodArg::TreeDp => MethodChoice::TreeDp,
            MethodArg::Formula => MethodChoice::Formula,
            MethodArg::VcFpt => MethodChoice::VcFpt,
            MethodArg::Bounds => MethodChoice::Bounds,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    StarSubdivision,
    BistarSubdivision,
    RandomTree,
    RandomConnected,
    DoubleSubdivision,
    Figure1,
    TK,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => 3,
                Error::CertificateInvalid { .. } | Error::Internal(_) => 1,
                _ => 2,
            }
        }
    });
}

fn run(cli: Cli) -> Result<(), Error> {
    let config = SolveConfig {
        oracle: SearchLimits {
            max_candidates: cli.max_candidates,
            max_subset: cli.max_k,
        },
        vc: VcLimits {
            core_edge_cap: cli.vc_cap,
        },
    };
    match &cli.command {
        Command::Compute { cert_out } => {
            let (graph, label) = read_input(&cli)?;
            let started = Instant::now();
            let solved = harness::solve_with_method(&graph, cli.method.into(), &config)?;
            let elapsed = started.elapsed().as_millis() as u64;
            let report = harness::report_for(
                &label,
                &graph,
                &solved,
                (!cli.deterministic).then_some(elapsed),
            );
            if let Some(path) = cert_out {
                let pairs = report.certificate.clone().unwrap_or_default();
                let body: String = pairs.iter().map(|(u, v)| format!("{u} {v}\n")).collect();
                std::fs::write(path, body)?;
            }
            emit(&cli, &harness::jsonl_body(&[report])?)
        }
        Command::Verify { certificate } => {
            let (graph, _) = read_input(&cli)?;
            let set = read_certificate(certificate, &graph)?;
            let body = match harness::verify(&graph, &set)? {
                Ok(()) => "{\"valid\":true}\n".to_string(),
                Err(witness) => format!(
                    "{{\"valid\":false,\"conflict_edge\":[{},{}],\"degree\":{}}}\n",
                    witness.u + 1,
                    witness.v + 1,
                    witness.degree
                ),
            };
            emit(&cli, &body)
        }
        Command::Bound => {
            let (graph, _) = read_input(&cli)?;
            let report = bounds::bound_report(&graph)?;
            let pairs: Vec<String> = report
                .upper_certificate
                .to_file_pairs(&graph)
                .iter()
                .map(|(u, v)| format!("[{u},{v}]"))
                .collect();
            let body = format!(
                "{{\"lower\":{},\"lower_source\":\"{}\",\"upper\":{},\"upper_source\":\"{}\",\"gap\":{},\"certificate\":[{}]}}\n",
                report.lower,
                report.lower_source,
                report.upper,
                report.upper_source,
                report.gap(),
                pairs.join(",")
            );
            emit(&cli, &body)
        }
        Command::Kernelize { k } => {
            let (graph, _) = read_input(&cli)?;
            let result = kernel::kernelize(&graph, *k)?;
            let body = match result.status {
                KernelStatus::AlreadyIrregular => {
                    dimacs::emit_with_comments(&graph, &[format!("status already-irregular k {k}")])
                }
                KernelStatus::NoInstance => {
                    let (artifact, budget) = KernelResult::no_instance_artifact();
                    dimacs::emit_with_comments(
                        &artifact,
                        &[format!(
                            "status no-instance k {budget} conflicts {} bound {}",
                            result.stats.conflict_edges,
                            *k * (2 * graph.max_degree() - 1)
                        )],
                    )
                }
                KernelStatus::Kernel => {
                    let h = result.kernel.as_ref().expect("kernel present");
                    dimacs::emit_with_comments(
                        h,
                        &[format!(
                            "status kernel k {k} conflicts {} kept {} leaves {} vertex-bound {}",
                            result.stats.conflict_edges,
                            result.stats.kept_vertices,
                            result.added_leaves,
                            result.stats.vertex_bound
                        )],
                    )
                }
            };
            emit(&cli, &body)
        }
        Command::Gen {
            family,
            n,
            a,
            b,
            k,
            legs,
            legs2,
            bridge,
            p,
            seed,
            base,
        } => {
            let spec = build_spec(
                *family, *n, *a, *b, *k, legs, legs2, *bridge, *p, *seed, *base,
            )?;
            let graph = generators::gen(&spec)?;
            emit(
                &cli,
                &dimacs::emit_with_comments(&graph, &[spec.to_string()]),
            )
        }
        Command::Conjecture { seed, csv } => {
            let suite = harness::standard_suite(*seed)?;
            let config = widen_for_suite(config);
            let outcome = harness::conjecture_sweep(&suite, &config, cli.deterministic, cli.jobs)?;
            if let Some(path) = &cli.output {
                harness::write_jsonl(path, &outcome.reports)?;
            }
            if let Some(path) = csv {
                harness::write_csv(path, &outcome.reports)?;
            }
            let mut summary = format!(
                "instances {} solved {} skipped {}\n",
                outcome.reports.len(),
                outcome.reports.len() - outcome.skipped.len(),
                outcome.skipped.len()
            );
            if let (Some(excess), Some(witness)) =
                (&outcome.max_excess, &outcome.max_excess_witness)
            {
                summary.push_str(&format!("max excess {excess} attained by {witness}\n"));
            }
            summary.push_str(&format!(
                "instances with positive excess {}\n",
                outcome.positive_excess_count
            ));
            for (label, note) in &outcome.skipped {
                summary.push_str(&format!("skipped {label}: {note}\n"));
            }
            print!("{summary}");
            Ok(())
        }
    }
}

/// The suite contains one instance whose candidate pool is slightly wider
/// than the default cap; never narrow caps the user raised themselves.
fn widen_for_suite(config: SolveConfig) -> SolveConfig {
    let suite = SolveConfig::standard_suite();
    SolveConfig {
        oracle: SearchLimits {
            max_candidates: config
                .oracle
                .max_candidates
                .max(suite.oracle.max_candidates),
            max_subset: config.oracle.max_subset.max(suite.oracle.max_subset),
        },
        vc: config.vc,
    }
}

fn read_input(cli: &Cli) -> Result<(Graph, String), Error> {
    let path = cli.input.as_ref().ok_or(Error::MethodNotApplicable(
        "this command needs --input <FILE>",
    ))?;
    let graph = dimacs::read_file(path)?;
    let label = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string());
    Ok((graph, label))
}

fn read_certificate(path: &Path, g: &Graph) -> Result<EdgeSet, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut ids = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected `u v`, got `{line}`"),
            });
        }
        let parse = |s: &str| -> Result<usize, Error> {
            s.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid endpoint `{s}`"),
            })
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u < 1 || v < 1 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "endpoints are 1-indexed".into(),
            });
        }
        let id = g.edge_id(u - 1, v - 1).ok_or(Error::NoSuchEdge { u, v })?;
        ids.push(id);
    }
    Ok(EdgeSet::new(ids))
}

#[allow(clippy::too_many_arguments)]
fn build_spec(
    family: Family,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    legs: &Option<String>,
    legs2: &Option<String>,
    bridge: usize,
    p: Option<f64>,
    seed: u64,
    base: Option<Family>,
) -> Result<FamilySpec, Error> {
    let need = |opt: Option<usize>, what: &str| {
        opt.ok_or_else(|| Error::Generator(format!("{what} is required for this family")))
    };
    let parse_legs = |text: &Option<String>, what: &str| -> Result<Vec<usize>, Error> {
        let text = text
            .as_ref()
            .ok_or_else(|| Error::Generator(format!("{what} is required for this family")))?;
        text.split(',')
            .map(|part| {
                part.trim()
                    .parse()
                    .map_err(|_| Error::Generator(format!("bad leg length `{part}`")))
            })
            .collect()
    };
    Ok(match family {
        Family::Path => FamilySpec::Path { n: need(n, "--n")? },
        Family::Cycle => FamilySpec::Cycle { n: need(n, "--n")? },
        Family::Complete => FamilySpec::Complete { n: need(n, "--n")? },
        Family::CompleteBipartite => FamilySpec::CompleteBipartite {
            a: need(a, "--a")?,
            b: need(b, "--b")?,
        },
        Family::StarSubdivision => FamilySpec::StarSubdivision {
            legs: parse_legs(legs, "--legs")?,
        },
        Family::BistarSubdivision => FamilySpec::BistarSubdivision {
            legs_a: parse_legs(legs, "--legs")?,
            legs_b: parse_legs(legs2, "--legs2")?,
            bridge,
        },
        Family::RandomTree => FamilySpec::RandomTree {
            n: need(n, "--n")?,
            seed,
        },
        Family::RandomConnected => FamilySpec::RandomConnected {
            n: need(n, "--n")?,
            p: p.ok_or_else(|| Error::Generator("--p is required for this family".into()))?,
            seed,
        },
        Family::DoubleSubdivision => {
            let base = base.ok_or_else(|| {
                Error::Generator("--base <FAMILY> is required for double_subdivision".into())
            })?;
            if matches!(base, Family::DoubleSubdivision) {
                return Err(Error::Generator("--base cannot nest subdivisions".into()));
            }
            FamilySpec::DoubleSubdivision {
                base: Box::new(build_spec(
                    base, n, a, b, k, legs, legs2, bridge, p, seed, None,
                )?),
            }
        }
        Family::Figure1 => FamilySpec::Figure1,
        Family::TK => FamilySpec::TriangularLayered { k: need(k, "--k")? },
    })
}

fn emit(cli: &Cli, body: &str) -> Result<(), Error> {
    match &cli.output {
        Some(path) => Ok(std::fs::write(path, body)?),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
