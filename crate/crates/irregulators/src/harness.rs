//! Solver dispatch, certificate verification, the excess sweep over graph
//! families, and report emission.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use num_rational::Rational64;
use serde::Serialize;

use crate::bounds;
use crate::closed_forms;
use crate::error::{Error, Result};
use crate::generators::{self, FamilySpec};
use crate::graph::{EdgeSet, Graph};
use crate::kernel::{self, KernelStatus};
use crate::oracle::{self, IrregulatorResult, Method, SearchLimits};
use crate::tree_dp;
use crate::vc::{self, VcLimits};

/// Caps handed to the exhaustive stages of the automatic dispatch.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveConfig {
    pub oracle: SearchLimits,
    pub vc: VcLimits,
}

impl SolveConfig {
    /// Caps wide enough that the exhaustive stages cover every instance of
    /// the built-in sweep suite, even when forced onto the 31-edge
    /// conflict-bound witness.
    pub fn standard_suite() -> Self {
        SolveConfig {
            oracle: SearchLimits {
                max_candidates: 36,
                max_subset: 12,
            },
            vc: VcLimits::default(),
        }
    }
}

/// Outcome of the automatic dispatch: an exact value whenever some solver
/// finishes within its caps, otherwise a verified bound range.
#[derive(Debug, Clone)]
pub enum AutoSolve {
    Exact(IrregulatorResult),
    Range {
        lower: usize,
        lower_source: &'static str,
        upper: usize,
        upper_source: &'static str,
        certificate: EdgeSet,
    },
}

impl AutoSolve {
    pub fn exact_value(&self) -> Option<usize> {
        match self {
            AutoSolve::Exact(r) => Some(r.value),
            AutoSolve::Range { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match self {
            AutoSolve::Exact(r) => (r.value, r.value),
            AutoSolve::Range { lower, upper, .. } => (*lower, *upper),
        }
    }
}

/// Recognised shapes that admit constant-time formulas. Recognition is
/// purely structural so mislabelled inputs cannot spoof the dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Path,
    Cycle,
    CompleteBipartite { a: usize, b: usize },
    TriangularComplete,
}

fn recognise(g: &Graph) -> Option<Shape> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n >= 2 && m == n - 1 && g.max_degree() <= 2 && g.is_connected() {
        return Some(Shape::Path);
    }
    if n >= 3 && m == n && (0..n).all(|v| g.degree(v) == 2) && g.is_connected() {
        return Some(Shape::Cycle);
    }
    if n >= 2 && g.is_connected() {
        if let Some(side) = g.bipartition() {
            let a = side.iter().filter(|&&s| s == 0).count();
            let b = n - a;
            if a >= 1 && b >= 1 && m == a * b {
                return Some(Shape::CompleteBipartite { a, b });
            }
        }
    }
    if n >= 1 && m == n * (n - 1) / 2 && closed_forms::triangular_index(n).is_some() && n >= 3 {
        return Some(Shape::TriangularComplete);
    }
    None
}

/// Walks a path graph from its lowest-id endpoint; returns the edge ids in
/// walk order.
fn path_walk(g: &Graph) -> Vec<usize> {
    let start = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 1)
        .min()
        .expect("path has endpoints");
    walk_from(g, start, g.vertex_count() - 1)
}

/// Walks a cycle graph from vertex 0 towards its smaller neighbour.
fn cycle_walk(g: &Graph) -> Vec<usize> {
    walk_from(g, 0, g.vertex_count())
}

fn walk_from(g: &Graph, start: usize, steps: usize) -> Vec<usize> {
    let mut edges = Vec::with_capacity(steps);
    let mut prev = usize::MAX;
    let mut at = start;
    for _ in 0..steps {
        let next = g
            .neighbours(at)
            .iter()
            .map(|&w| w as usize)
            .find(|&w| w != prev)
            .expect("walk continues");
        edges.push(g.edge_id(at, next).expect("walk edge"));
        prev = at;
        at = next;
    }
    edges
}

fn solve_by_formula(g: &Graph, shape: Shape) -> Result<IrregulatorResult> {
    let start = Instant::now();
    let n = g.vertex_count();
    let certificate = match shape {
        Shape::Path => {
            let walk = path_walk(g);
            EdgeSet::new(
                closed_forms::path_certificate(n)
                    .iter()
                    .map(|&pos| walk[pos]),
            )
        }
        Shape::Cycle => {
            let walk = cycle_walk(g);
            // Open the cycle at the closing walk edge, then treat the rest
            // as a path.
            let mut ids = vec![walk[n - 1]];
            ids.extend(
                closed_forms::path_certificate(n)
                    .iter()
                    .map(|&pos| walk[pos]),
            );
            EdgeSet::new(ids)
        }
        Shape::CompleteBipartite { a, b } => {
            if a == b {
                // Delete every edge at the lowest-id vertex.
                EdgeSet::new(
                    g.neighbours(0)
                        .iter()
                        .map(|&w| g.edge_id(0, w as usize).expect("edge")),
                )
            } else {
                EdgeSet::empty()
            }
        }
        Shape::TriangularComplete => closed_forms::ie_complete_triangular(n)?.1,
    };
    IrregulatorResult::verified(g, certificate, Method::Formula, start.elapsed())
}

/// Budget-by-budget pipeline: shrink around the conflicts, then search the
/// kernel exhaustively. `Ok(None)` means the caps ruled it out.
fn solve_by_kernel_and_oracle(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<Option<IrregulatorResult>> {
    let start = Instant::now();
    if g.is_locally_irregular() {
        return Ok(Some(IrregulatorResult::verified(
            g,
            EdgeSet::empty(),
            Method::Oracle,
            start.elapsed(),
        )?));
    }
    for k in 1..=limits.max_subset {
        let reduced = kernel::kernelize(g, k)?;
        let h = match reduced.status {
            KernelStatus::NoInstance => continue,
            KernelStatus::AlreadyIrregular => unreachable!("conflicts were checked above"),
            KernelStatus::Kernel => reduced.kernel.expect("kernel present"),
        };
        let cands = oracle::candidate_edges(&h, k);
        if cands.len() > limits.max_candidates {
            return Ok(None);
        }
        // Budgets below k were already refuted, so any witness found at
        // budget k has minimum size.
        if let Some(witness) = oracle::decide_with_witness(&h, k) {
            let lifted = kernel::lift_certificate(g, &h, &witness)?;
            return Ok(Some(IrregulatorResult::verified(
                g,
                lifted,
                Method::Oracle,
                start.elapsed(),
            )?));
        }
    }
    Ok(None)
}

/// Full dispatch: formulas for recognised shapes, the tree solver for
/// forests, then the exhaustive pipelines, finally a bound range when all
/// caps are exceeded. Whenever a value (not a range) is returned it is
/// exact.
pub fn solve_auto(g: &Graph) -> Result<AutoSolve> {
    solve_auto_with(g, &SolveConfig::default())
}

pub fn solve_auto_with(g: &Graph, config: &SolveConfig) -> Result<AutoSolve> {
    let comps = g.connected_components();
    if comps.len() > 1 {
        return solve_components(g, &comps, config);
    }
    if let Some(shape) = recognise(g) {
        return Ok(AutoSolve::Exact(solve_by_formula(g, shape)?));
    }
    if g.is_forest() {
        return Ok(AutoSolve::Exact(tree_dp::ie_tree(g)?));
    }
    if let Some(result) = solve_by_kernel_and_oracle(g, &config.oracle)? {
        return Ok(AutoSolve::Exact(result));
    }
    match vc::ie_vc_fpt_with(g, &config.vc) {
        Ok(result) => return Ok(AutoSolve::Exact(result)),
        Err(Error::CapExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    let report = bounds::bound_report(g)?;
    Ok(AutoSolve::Range {
        lower: report.lower,
        lower_source: report.lower_source,
        upper: report.upper,
        upper_source: report.upper_source,
        certificate: report.upper_certificate,
    })
}

/// Forces a particular solver instead of the automatic dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Oracle,
    TreeDp,
    Formula,
    VcFpt,
    Bounds,
}

pub fn solve_with_method(
    g: &Graph,
    choice: MethodChoice,
    config: &SolveConfig,
) -> Result<AutoSolve> {
    match choice {
        MethodChoice::Auto => solve_auto_with(g, config),
        MethodChoice::Oracle => Ok(AutoSolve::Exact(oracle::solve_exact_with(
            g,
            &config.oracle,
        )?)),
        MethodChoice::TreeDp => Ok(AutoSolve::Exact(tree_dp::ie_tree(g)?)),
        MethodChoice::Formula => {
            let shape = recognise(g).ok_or(Error::MethodNotApplicable(
                "no closed form covers this graph; it is not a path, cycle, complete bipartite graph or complete graph of triangular order",
            ))?;
            Ok(AutoSolve::Exact(solve_by_formula(g, shape)?))
        }
        MethodChoice::VcFpt => Ok(AutoSolve::Exact(vc::ie_vc_fpt_with(g, &config.vc)?)),
        MethodChoice::Bounds => {
            let report = bounds::bound_report(g)?;
            Ok(AutoSolve::Range {
                lower: report.lower,
                lower_source: report.lower_source,
                upper: report.upper,
                upper_source: report.upper_source,
                certificate: report.upper_certificate,
            })
        }
    }
}

/// Disconnected inputs: solve every component and add up. The result is
/// exact iff every component is; the method tag follows the largest
/// component.
fn solve_components(g: &Graph, comps: &[Vec<usize>], config: &SolveConfig) -> Result<AutoSolve> {
    let start = Instant::now();
    let mut all_exact = true;
    let mut lower = 0;
    let mut upper = 0;
    let mut ids = Vec::new();
    let mut method = Method::Oracle;
    let mut largest = 0;
    for comp in comps {
        let (sub, map) = g.induced_subgraph(comp);
        let solved = solve_auto_with(&sub, config)?;
        let (lo, hi) = solved.bounds();
        lower += lo;
        upper += hi;
        let certificate = match &solved {
            AutoSolve::Exact(r) => {
                if comp.len() > largest {
                    largest = comp.len();
                    method = r.method;
                }
                &r.certificate
            }
            AutoSolve::Range { certificate, .. } => {
                all_exact = false;
                certificate
            }
        };
        for &id in certificate.iter() {
            let (u, v) = sub.endpoints(id);
            ids.push(g.edge_id(map[u], map[v]).expect("edge of g"));
        }
    }
    let certificate = EdgeSet::new(ids);
    if all_exact {
        Ok(AutoSolve::Exact(IrregulatorResult::verified(
            g,
            certificate,
            method,
            start.elapsed(),
        )?))
    } else {
        Ok(AutoSolve::Range {
            lower,
            lower_source: "per-component",
            upper,
            upper_source: "per-component",
            certificate,
        })
    }
}

/// A failed check names the offending edge and the shared degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConflictWitness {
    pub u: usize,
    pub v: usize,
    pub degree: usize,
}

/// Checks a deletion set; on failure reports the first conflicting edge of
/// the reduced graph in edge-id order.
pub fn verify(g: &Graph, s: &EdgeSet) -> Result<std::result::Result<(), ConflictWitness>> {
    let reduced = g.delete_edges(s)?;
    for &(u, v) in reduced.edges() {
        let (u, v) = (u as usize, v as usize);
        if reduced.degree(u) == reduced.degree(v) {
            return Ok(Err(ConflictWitness {
                u,
                v,
                degree: reduced.degree(u),
            }));
        }
    }
    Ok(Ok(()))
}

// ---------------------------------------------------------------------------
// Sweep over graph families.
// ---------------------------------------------------------------------------

/// One graph to sweep, with a human-readable label.
#[derive(Debug, Clone)]
pub struct SweepInstance {
    pub label: String,
    pub graph: Graph,
}

impl SweepInstance {
    pub fn from_spec(spec: &FamilySpec) -> Result<Self> {
        Ok(SweepInstance {
            label: spec.to_string(),
            graph: generators::gen(spec)?,
        })
    }
}

/// Per-instance report line. The excess over one third of the edge count is
/// kept as an exact fraction in lowest terms, never a float.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub schema: u32,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub conflicts: usize,
    pub method: String,
    pub ie: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub excess: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub certificate: Option<Vec<(usize, usize)>>,
}

pub const REPORT_SCHEMA: u32 = 1;

/// Exact value of `ie - m/3`.
pub fn excess(ie: usize, m: usize) -> Rational64 {
    Rational64::new(3 * ie as i64 - m as i64, 3)
}

pub fn report_instance(
    instance: &SweepInstance,
    config: &SolveConfig,
    deterministic: bool,
) -> Result<InstanceReport> {
    let started = Instant::now();
    let solved = solve_auto_with(&instance.graph, config)?;
    let elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report_for(
        &instance.label,
        &instance.graph,
        &solved,
        (!deterministic).then_some(elapsed_ms),
    ))
}

/// Assembles the report line for an already-computed answer.
pub fn report_for(
    label: &str,
    g: &Graph,
    solved: &AutoSolve,
    elapsed_ms: Option<u64>,
) -> InstanceReport {
    let (lower, upper) = solved.bounds();
    let (method, ie, excess_str, certificate) = match solved {
        AutoSolve::Exact(r) => (
            r.method.as_str().to_string(),
            Some(r.value),
            Some(excess(r.value, g.edge_count()).to_string()),
            Some(r.certificate.to_file_pairs(g)),
        ),
        AutoSolve::Range {
            upper_source,
            certificate,
            ..
        } => (
            format!("bounds({upper_source})"),
            None,
            None,
            Some(certificate.to_file_pairs(g)),
        ),
    };
    InstanceReport {
        schema: REPORT_SCHEMA,
        family: label.to_string(),
        n: g.vertex_count(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        conflicts: g.conflict_report().count(),
        method,
        ie,
        lower,
        upper,
        excess: excess_str,
        elapsed_ms,
        certificate,
    }
}

/// Sweep outcome: per-instance reports plus the excess summary.
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub reports: Vec<InstanceReport>,
    /// Instances that could not be solved exactly under the caps, with the
    /// reason.
    pub skipped: Vec<(String, String)>,
    pub max_excess: Option<Rational64>,
    pub max_excess_witness: Option<String>,
    pub positive_excess_count: usize,
}

pub fn conjecture_sweep(
    instances: &[SweepInstance],
    config: &SolveConfig,
    deterministic: bool,
    jobs: usize,
) -> Result<SweepOutcome> {
    let run = |inst: &SweepInstance| report_instance(inst, config, deterministic);
    let results: Vec<Result<InstanceReport>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Generator(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            instances.par_iter().map(run).collect()
        })
    } else {
        instances.iter().map(run).collect()
    };

    let mut reports = Vec::with_capacity(instances.len());
    let mut skipped = Vec::new();
    let mut max_excess: Option<(Rational64, String)> = None;
    let mut positive = 0;
    for (inst, result) in instances.iter().zip(results) {
        let report = result?;
        match report.ie {
            Some(value) => {
                let ex = excess(value, report.m);
                if ex > Rational64::from_integer(0) {
                    positive += 1;
                }
                if max_excess.as_ref().is_none_or(|(best, _)| ex > *best) {
                    max_excess = Some((ex, inst.label.clone()));
                }
            }
            None => skipped.push((
                inst.label.clone(),
                format!(
                    "only bounds [{}, {}] under the caps",
                    report.lower, report.upper
                ),
            )),
        }
        reports.push(report);
    }
    let (max_excess, max_excess_witness) = match max_excess {
        Some((ex, label)) => (Some(ex), Some(label)),
        None => (None, None),
    };
    Ok(SweepOutcome {
        reports,
        skipped,
        max_excess,
        max_excess_witness,
        positive_excess_count: positive,
    })
}

/// The built-in sweep suite: paths and cycles through order 30, complete
/// bipartite graphs with sides up to 5, the three smallest triangular
/// complete graphs, every tree up to 9 vertices, seeded random trees up to
/// 14 vertices, double subdivisions of the two smallest complete graphs,
/// and the conflict-bound witness.
pub fn standard_suite(seed: u64) -> Result<Vec<SweepInstance>> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((2..=30).map(|n| FamilySpec::Path { n }));
    specs.extend((3..=30).map(|n| FamilySpec::Cycle { n }));
    for a in 1..=5 {
        for b in a..=5 {
            specs.push(FamilySpec::CompleteBipartite { a, b });
        }
    }
    specs.extend([3, 6, 10].map(|n| FamilySpec::Complete { n }));
    specs.extend([3, 4].map(|n| FamilySpec::DoubleSubdivision {
        base: Box::new(FamilySpec::Complete { n }),
    }));
    specs.push(FamilySpec::Figure1);
    for n in 10..=14 {
        for i in 0..10 {
            specs.push(FamilySpec::RandomTree {
                n,
                seed: seed.wrapping_add((n * 100 + i) as u64),
            });
        }
    }

    let mut instances: Vec<SweepInstance> = specs
        .iter()
        .map(SweepInstance::from_spec)
        .collect::<Result<_>>()?;
    for n in 1..=9 {
        for (i, tree) in generators::all_free_trees(n).into_iter().enumerate() {
            instances.push(SweepInstance {
                label: format!("tree(n={n},#{i})"),
                graph: tree,
            });
        }
    }
    Ok(instances)
}

// ---------------------------------------------------------------------------
// Report emission.
// ---------------------------------------------------------------------------

/// Appends one JSON object per report line.
pub fn write_jsonl(path: impl AsRef<Path>, reports: &[InstanceReport]) -> Result<()> {
    let mut file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    file.write_all(jsonl_body(reports)?.as_bytes())?;
    Ok(())
}

pub fn jsonl_body(reports: &[InstanceReport]) -> Result<String> {
    let mut out = String::new();
    for report in reports {
        out.push_str(
            &serde_json::to_string(report)
                .map_err(|e| Error::Generator(format!("serialising report: {e}")))?,
        );
        out.push('\n');
    }
    Ok(out)
}

/// CSV export mirroring the JSON lines column for column.
pub fn write_csv(path: impl AsRef<Path>, reports: &[InstanceReport]) -> Result<()> {
    let write = || -> std::result::Result<(), csv::Error> {
        let mut writer = csv::Writer::from_path(path.as_ref())?;
        writer.write_record([
            "schema",
            "family",
            "n",
            "m",
            "max_degree",
            "conflicts",
            "method",
            "ie",
            "lower",
            "upper",
            "excess",
            "elapsed_ms",
            "certificate",
        ])?;
        for r in reports {
            let certificate = r.certificate.as_ref().map_or(String::new(), |pairs| {
                pairs
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect::<Vec<_>>()
                    .join(";")
            });
            writer.write_record([
                r.schema.to_string(),
                r.family.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.max_degree.to_string(),
                r.conflicts.to_string(),
                r.method.clone(),
                r.ie.map_or(String::new(), |v| v.to_string()),
                r.lower.to_string(),
                r.upper.to_string(),
                r.excess.clone().unwrap_or_default(),
                r.elapsed_ms.map_or(String::new(), |v| v.to_string()),
                certificate,
            ])?;
        }
        writer.flush()?;
        Ok(())
    };
    write().map_err(|e| Error::Generator(format!("writing csv: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognises_shapes_structurally() {
        let p = generators::path(7).unwrap();
        assert_eq!(recognise(&p), Some(Shape::Path));
        let c = generators::cycle(9).unwrap();
        assert_eq!(recognise(&c), Some(Shape::Cycle));
        let kab = generators::complete_bipartite(2, 4).unwrap();
        assert_eq!(
            recognise(&kab),
            Some(Shape::CompleteBipartite { a: 2, b: 4 })
        );
        let k6 = generators::complete(6).unwrap();
        assert_eq!(recognise(&k6), Some(Shape::TriangularComplete));
        // K5 is complete but not of triangular order.
        let k5 = generators::complete(5).unwrap();
        assert_eq!(recognise(&k5), None);
        assert_eq!(recognise(&generators::figure1()), None);
    }

    #[test]
    fn dispatch_uses_formulas_for_long_paths() {
        let p100 = generators::path(100).unwrap();
        match solve_auto(&p100).unwrap() {
            AutoSolve::Exact(r) => {
                assert_eq!(r.value, 33);
                assert_eq!(r.method, Method::Formula);
            }
            other => panic!("expected exact answer, got {other:?}"),
        }
    }

    #[test]
    fn dispatch_uses_tree_dp_for_random_trees() {
        let t = generators::random_tree(5000, 11).unwrap();
        match solve_auto(&t).unwrap() {
            AutoSolve::Exact(r) => assert_eq!(r.method, Method::TreeDp),
            other => panic!("expected exact answer, got {other:?}"),
        }
    }

    #[test]
    fn dispatch_solves_k6_by_formula() {
        let k6 = generators::complete(6).unwrap();
        let solved = solve_auto(&k6).unwrap();
        assert_eq!(solved.exact_value(), Some(4));
    }

    #[test]
    fn dispatch_handles_figure1_with_suite_caps() {
        let g = generators::figure1();
        let solved = solve_auto_with(&g, &SolveConfig::standard_suite()).unwrap();
        assert_eq!(solved.exact_value(), Some(1));
    }

    #[test]
    fn dispatch_sums_components() {
        // Two 4-cycles: two deletions each.
        let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
        edges.extend([(4, 5), (5, 6), (6, 7), (4, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        let solved = solve_auto(&g).unwrap();
        assert_eq!(solved.exact_value(), Some(4));
    }

    #[test]
    fn verify_reports_witnesses() {
        let c4 = generators::cycle(4).unwrap();
        // Opposite edges leave two bare edges: every survivor conflicts.
        let opposite = EdgeSet::new([0, 3]);
        let witness = verify(&c4, &opposite).unwrap().unwrap_err();
        assert_eq!(witness.degree, 1);
        // Adjacent edges give degrees 0,1,2,1.
        let adjacent = EdgeSet::new([0, 1]);
        assert!(verify(&c4, &adjacent).unwrap().is_ok());
        // Deleting everything always works.
        let all = EdgeSet::new(0..4);
        assert!(verify(&c4, &all).unwrap().is_ok());
    }

    #[test]
    fn excess_is_exact() {
        assert_eq!(excess(3, 5).to_string(), "4/3");
        assert_eq!(excess(1, 1).to_string(), "2/3");
        assert_eq!(excess(3, 9).to_string(), "0");
        assert_eq!(excess(0, 4).to_string(), "-4/3");
    }

    #[test]
    fn sweep_of_named_instances() {
        let instances = vec![
            SweepInstance::from_spec(&FamilySpec::Cycle { n: 5 }).unwrap(),
            SweepInstance::from_spec(&FamilySpec::Path { n: 2 }).unwrap(),
        ];
        let outcome = conjecture_sweep(&instances, &SolveConfig::default(), true, 1).unwrap();
        assert_eq!(outcome.max_excess, Some(Rational64::new(4, 3)));
        assert_eq!(outcome.max_excess_witness.as_deref(), Some("cycle(n=5)"));
        assert_eq!(outcome.positive_excess_count, 2);
        assert!(outcome.skipped.is_empty());
    }

    #[test]
    fn deterministic_reports_are_reproducible() {
        let instances = vec![
            SweepInstance::from_spec(&FamilySpec::RandomTree { n: 12, seed: 5 }).unwrap(),
            SweepInstance::from_spec(&FamilySpec::Cycle { n: 8 }).unwrap(),
        ];
        let config = SolveConfig::default();
        let a = jsonl_body(
            &conjecture_sweep(&instances, &config, true, 1)
                .unwrap()
                .reports,
        )
        .unwrap();
        let b = jsonl_body(
            &conjecture_sweep(&instances, &config, true, 2)
                .unwrap()
                .reports,
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed_ms"));
    }
}
