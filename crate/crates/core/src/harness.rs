//! Verification campaigns for the spectral-radius and size conditions, graph
//! sources for them, and the exhaustive cross-check of the two coveredness
//! deciders.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::covered::{is_covered_criterion, is_covered_direct, sufficient_2m, Verdict, Witness};
use crate::error::{Error, Result};
use crate::factor::{gf_factor_flow, Bounds};
use crate::graph::Graph;
use crate::spectral::spectral_radius;

pub const DEFAULT_RHO_TOL: f64 = 1e-9;
pub const ENUMERATION_MAX_N: usize = 7;
pub const CROSS_VALIDATION_MAX_N: usize = 6;
const RANDOM_DENSE_RETRIES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `ρ(G) ≥ n − b − 1`.
    Spectral,
    /// `e(G) ≥ C(n−b−1, 2) + ab + 2a + (b+1)m`.
    Size,
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spectral" => Ok(Theorem::Spectral),
            "size" => Ok(Theorem::Size),
            other => Err(Error::param(format!("unknown theorem '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Clauses {
    pub connected: bool,
    pub order: bool,
    pub min_degree: bool,
    /// The spectral or size clause, depending on the theorem.
    pub threshold: bool,
}

impl Clauses {
    pub fn all(&self) -> bool {
        self.connected && self.order && self.min_degree && self.threshold
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub n: usize,
    pub e: usize,
    /// Minimum degree.
    pub delta: usize,
    pub rho: Option<f64>,
    pub order_bound: u64,
    pub threshold: i64,
    pub connected: bool,
    pub hypotheses_met: bool,
    pub clauses: Clauses,
}

fn check_theorem_params(a: usize, b: usize, m: usize) -> Result<()> {
    if a < 2 || a > b {
        return Err(Error::param(format!("theorem checks need 2 <= a <= b, got a={a}, b={b}")));
    }
    if m < 1 || m > b {
        return Err(Error::param(format!("theorem checks need 1 <= m <= b, got m={m}")));
    }
    Ok(())
}

/// `⌈(4b + 2a + ab + (b+8)m + 16) / 2⌉`.
pub fn spectral_order_bound(a: usize, b: usize, m: usize) -> u64 {
    ((4 * b + 2 * a + a * b + (b + 8) * m + 16) as u64).div_ceil(2)
}

/// `⌈4a + 5b/2 + 4m + 7⌉`.
pub fn size_order_bound(a: usize, b: usize, m: usize) -> u64 {
    (4 * a + 4 * m + 7) as u64 + ((5 * b) as u64).div_ceil(2)
}

/// `n − b − 1`.
pub fn spectral_threshold(n: usize, b: usize) -> i64 {
    n as i64 - b as i64 - 1
}

/// `C(n−b−1, 2) + ab + 2a + (b+1)m`, with `C(k, 2) = 0` for `k < 2`.
pub fn size_threshold(n: usize, a: usize, b: usize, m: usize) -> i64 {
    let k = spectral_threshold(n, b).max(0);
    k * (k - 1).max(0) / 2 + (a * b + 2 * a + (b + 1) * m) as i64
}

/// Hypotheses of the spectral condition: connected, `n` at least the order
/// bound, `δ ≥ a + m` and `ρ ≥ n − b − 1 − rho_tol`.
pub fn spectral_hypotheses(graph: &Graph, a: usize, b: usize, m: usize, rho_tol: f64) -> Result<HypothesisReport> {
    check_theorem_params(a, b, m)?;
    let rho = spectral_radius(graph, crate::spectral::DEFAULT_TOL)?.rho;
    let threshold = spectral_threshold(graph.n(), b);
    Ok(report(graph, Theorem::Spectral, a, b, m, Some(rho), spectral_order_bound(a, b, m), threshold,
        rho >= threshold as f64 - rho_tol))
}

/// Hypotheses of the size condition.
pub fn size_hypotheses(graph: &Graph, a: usize, b: usize, m: usize) -> Result<HypothesisReport> {
    check_theorem_params(a, b, m)?;
    let threshold = size_threshold(graph.n(), a, b, m);
    Ok(report(graph, Theorem::Size, a, b, m, None, size_order_bound(a, b, m), threshold,
        graph.edge_count() as i64 >= threshold))
}

#[allow(clippy::too_many_arguments)]
fn report(
    graph: &Graph,
    theorem: Theorem,
    a: usize,
    b: usize,
    m: usize,
    rho: Option<f64>,
    order_bound: u64,
    threshold: i64,
    threshold_met: bool,
) -> HypothesisReport {
    let connected = graph.is_connected();
    let delta = graph.min_degree();
    let clauses = Clauses {
        connected,
        order: graph.n() as u64 >= order_bound,
        min_degree: delta >= a + m,
        threshold: threshold_met,
    };
    HypothesisReport {
        theorem,
        a,
        b,
        m,
        n: graph.n(),
        e: graph.edge_count(),
        delta,
        rho,
        order_bound,
        threshold,
        connected,
        hypotheses_met: clauses.all(),
        clauses,
    }
}

/// Every labeled graph on `n` vertices, in order of the bitmask over vertex
/// pairs `(0,1), (0,2), …, (n−2,n−1)`.
pub fn enumerate_labeled_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > ENUMERATION_MAX_N {
        return Err(Error::ScaleCap { what: "labeled graph enumeration", n, cap: ENUMERATION_MAX_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total)
        .map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_sorted_unchecked(n, edges)
        })
        .filter(move |g| !connected_only || g.is_connected()))
}

/// `K_n` with `edges_to_remove` uniformly chosen edges deleted, never letting
/// a degree fall below `a + m`.
pub fn random_dense(n: usize, a: usize, b: usize, m: usize, edges_to_remove: usize, seed: u64) -> Result<Graph> {
    random_dense_with(&mut ChaCha8Rng::seed_from_u64(seed), n, a, b, m, edges_to_remove)
}

pub fn random_dense_with<R: Rng>(rng: &mut R, n: usize, a: usize, b: usize, m: usize, edges_to_remove: usize) -> Result<Graph> {
    if a > b {
        return Err(Error::param("need a <= b"));
    }
    let floor = a + m;
    if n == 0 || n - 1 < floor {
        return Err(Error::param(format!("K_{n} already has minimum degree below a + m = {floor}")));
    }
    let cap = n * (n - 1) / 2 - (n * floor).div_ceil(2);
    if edges_to_remove > cap {
        return Err(Error::param(format!("cannot remove {edges_to_remove} edges (cap {cap})")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut degree = vec![n - 1; n];
    let mut failures = 0;
    let mut removed = 0;
    while removed < edges_to_remove {
        let i = rng.gen_range(0..edges.len());
        let (u, v) = edges[i];
        if degree[u] > floor && degree[v] > floor {
            edges.swap_remove(i);
            degree[u] -= 1;
            degree[v] -= 1;
            removed += 1;
        } else {
            failures += 1;
            if failures > RANDOM_DENSE_RETRIES {
                return Err(Error::param(format!(
                    "placed only {removed} of {edges_to_remove} removals after {RANDOM_DENSE_RETRIES} retries"
                )));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Seeded batch of [`random_dense`] graphs. Graph `i` removes
/// `remove.0 + i mod (remove.1 − remove.0 + 1)` edges and draws from stream `i`
/// of the seeded generator, so results do not depend on evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub count: usize,
    pub n: usize,
    pub remove: (usize, usize),
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self, index: usize, a: usize, b: usize, m: usize) -> Result<Graph> {
        let (lo, hi) = self.remove;
        if lo > hi {
            return Err(Error::param("empty removal range"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        random_dense_with(&mut rng, self.n, a, b, m, lo + index % (hi - lo + 1))
    }
}

pub enum GraphSource {
    /// graph6 records, one per entry.
    Lines(Vec<String>),
    Random(GeneratorSpec),
}

#[derive(Debug, Clone, Copy)]
pub struct CampaignOptions {
    pub rho_tol: f64,
    /// Record wall-clock time per graph; when off `elapsed_ms` is 0 and the
    /// output is byte-for-byte reproducible.
    pub timing: bool,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions { rho_tol: DEFAULT_RHO_TOL, timing: true }
    }
}

/// One JSON-lines record. Field order is the output order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignRecord {
    pub graph6: String,
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub theorem: Theorem,
    pub n: usize,
    pub e: usize,
    pub delta: usize,
    pub rho: Option<f64>,
    pub order_bound: u64,
    pub threshold: i64,
    pub hypotheses_met: bool,
    pub clauses: Clauses,
    pub covered: Option<bool>,
    pub vacuous: bool,
    pub witness: Option<Witness>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordError {
    pub index: usize,
    pub graph6: Option<String>,
    pub error: String,
    #[serde(skip)]
    pub internal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CampaignLine {
    Record(Box<CampaignRecord>),
    Error(RecordError),
}

/// Process exit status of a campaign or CLI command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    Ok = 0,
    InputError = 1,
    ConclusionViolated = 2,
    Inconsistent = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Campaign {
    pub lines: Vec<CampaignLine>,
    pub status: ExitStatus,
}

impl Campaign {
    pub fn records(&self) -> impl Iterator<Item = &CampaignRecord> {
        self.lines.iter().filter_map(|l| match l {
            CampaignLine::Record(r) => Some(r.as_ref()),
            CampaignLine::Error(_) => None,
        })
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&serde_json::to_string(line).expect("campaign lines serialize"));
            out.push('\n');
        }
        out
    }
}

fn campaign_record(graph: &Graph, theorem: Theorem, a: usize, b: usize, m: usize, options: &CampaignOptions) -> Result<CampaignRecord> {
    let start = Instant::now();
    let report = match theorem {
        Theorem::Spectral => spectral_hypotheses(graph, a, b, m, options.rho_tol)?,
        Theorem::Size => size_hypotheses(graph, a, b, m)?,
    };
    let verdict: Option<Verdict> =
        if report.hypotheses_met { Some(is_covered_direct(graph, a, b, m)?) } else { None };
    let elapsed_ms = if options.timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
    Ok(CampaignRecord {
        graph6: graph.to_graph6(),
        a,
        b,
        m,
        theorem,
        n: report.n,
        e: report.e,
        delta: report.delta,
        rho: report.rho,
        order_bound: report.order_bound,
        threshold: report.threshold,
        hypotheses_met: report.hypotheses_met,
        clauses: report.clauses,
        covered: verdict.as_ref().map(|v| v.covered),
        vacuous: verdict.as_ref().is_some_and(|v| v.vacuous),
        witness: verdict.and_then(|v| v.witness),
        elapsed_ms,
    })
}

/// Checks the chosen theorem's conclusion on every graph whose hypotheses
/// hold. Records come back in input order.
///
/// Status is the most severe event seen: 3 for an internal inconsistency, 2
/// if a hypotheses-met graph is not covered, 1 if some input could not be
/// read or evaluated, else 0.
pub fn verify_campaign(source: &GraphSource, theorem: Theorem, a: usize, b: usize, m: usize, options: &CampaignOptions) -> Result<Campaign> {
    check_theorem_params(a, b, m)?;
    let count = match source {
        GraphSource::Lines(lines) => lines.len(),
        GraphSource::Random(spec) => spec.count,
    };
    let lines: Vec<CampaignLine> = (0..count)
        .into_par_iter()
        .map(|index| {
            let (graph, raw) = match source {
                GraphSource::Lines(lines) => (Graph::from_graph6(&lines[index]), Some(lines[index].clone())),
                GraphSource::Random(spec) => (spec.generate(index, a, b, m), None),
            };
            let outcome = graph.and_then(|g| campaign_record(&g, theorem, a, b, m, options));
            match outcome {
                Ok(record) => CampaignLine::Record(Box::new(record)),
                Err(e) => CampaignLine::Error(RecordError {
                    index,
                    graph6: raw,
                    internal: matches!(e, Error::Consistency(_)),
                    error: e.to_string(),
                }),
            }
        })
        .collect();
    let status = lines
        .iter()
        .map(|line| match line {
            CampaignLine::Record(r) if r.hypotheses_met && r.covered != Some(true) => ExitStatus::ConclusionViolated,
            CampaignLine::Record(_) => ExitStatus::Ok,
            CampaignLine::Error(e) if e.internal => ExitStatus::Inconsistent,
            CampaignLine::Error(_) => ExitStatus::InputError,
        })
        .max()
        .unwrap_or(ExitStatus::Ok);
    Ok(Campaign { lines, status })
}

/// Aggregate counts for one `(a, b, m)` in a cross-validation sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ParamSummary {
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub graphs: usize,
    pub agreements: usize,
    pub covered: usize,
    pub vacuous: usize,
    pub sufficient_holds: usize,
    pub witnesses_replayed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrossValidationSummary {
    pub max_n: usize,
    pub graphs: usize,
    pub params: Vec<ParamSummary>,
    pub m_monotone_checks: usize,
    pub bounds_monotone_checks: usize,
}

#[derive(Debug, Clone, Serialize)]
struct Counterexample<'a> {
    graph6: String,
    a: usize,
    b: usize,
    m: usize,
    check: &'a str,
    criterion: Option<&'a Verdict>,
    direct: Option<&'a Verdict>,
}

fn counterexample(graph: &Graph, p: (usize, usize, usize), check: &str, criterion: Option<&Verdict>, direct: Option<&Verdict>) -> Error {
    let ce = Counterexample { graph6: graph.to_graph6(), a: p.0, b: p.1, m: p.2, check, criterion, direct };
    Error::Consistency(serde_json::to_string(&ce).expect("counterexample serializes"))
}

struct GraphOutcome {
    covered: Vec<bool>,
    vacuous: Vec<bool>,
    sufficient: Vec<bool>,
    replayed: Vec<usize>,
    m_checks: usize,
    bound_checks: usize,
}

fn cross_validate_graph(graph: &Graph, params: &[(usize, usize, usize)]) -> Result<GraphOutcome> {
    let mut out = GraphOutcome {
        covered: Vec::with_capacity(params.len()),
        vacuous: Vec::with_capacity(params.len()),
        sufficient: Vec::with_capacity(params.len()),
        replayed: Vec::with_capacity(params.len()),
        m_checks: 0,
        bound_checks: 0,
    };
    for &p @ (a, b, m) in params {
        let criterion = is_covered_criterion(graph, a, b, m)?;
        let direct = is_covered_direct(graph, a, b, m)?;
        if criterion.covered != direct.covered {
            return Err(counterexample(graph, p, "criterion vs direct", Some(&criterion), Some(&direct)));
        }
        let mut replayed = 0;
        for v in [&criterion, &direct] {
            if let Some(w) = &v.witness {
                if !w.replay(graph, a, b)? {
                    return Err(counterexample(graph, p, "witness replay", Some(&criterion), Some(&direct)));
                }
                replayed += 1;
            }
        }
        let sufficient = sufficient_2m(graph, a, b, m)?.holds();
        if sufficient && !direct.covered {
            return Err(counterexample(graph, p, "2m sufficient condition", None, Some(&direct)));
        }
        if m == 0 {
            let flow = gf_factor_flow(graph, &Bounds::constant(graph.n(), a, b)?)?.is_feasible();
            if flow != direct.covered {
                return Err(counterexample(graph, p, "m = 0 vs [a,b]-factor", None, Some(&direct)));
            }
        }
        out.covered.push(direct.covered);
        out.vacuous.push(direct.vacuous);
        out.sufficient.push(sufficient);
        out.replayed.push(replayed);
    }
    for (i, &(a, b, m)) in params.iter().enumerate() {
        for (j, &(a2, b2, m2)) in params.iter().enumerate() {
            if !out.covered[i] {
                continue;
            }
            // a vacuous verdict at m (e(G) < m) says nothing about m - 1
            if (a2, b2) == (a, b) && m2 + 1 == m && !out.vacuous[i] {
                out.m_checks += 1;
                if !out.covered[j] {
                    return Err(counterexample(graph, (a2, b2, m2), "monotone in m", None, None));
                }
            }
            if i != j && m2 == m && a2 <= a && b2 >= b {
                out.bound_checks += 1;
                if !out.covered[j] {
                    return Err(counterexample(graph, (a2, b2, m2), "monotone in bounds", None, None));
                }
            }
        }
    }
    Ok(out)
}

/// Runs both deciders on every connected labeled graph with at most `max_n`
/// vertices for each `(a, b, m)`, and checks that they agree, that witnesses
/// replay, that the `2m` test is sound, the `m = 0` reduction, and
/// monotonicity in `m` and in the bounds. The first failure aborts the sweep
/// with a serialized counterexample.
pub fn cross_validate(max_n: usize, params: &[(usize, usize, usize)]) -> Result<CrossValidationSummary> {
    if max_n == 0 || max_n > CROSS_VALIDATION_MAX_N {
        return Err(Error::ScaleCap { what: "cross validation", n: max_n, cap: CROSS_VALIDATION_MAX_N });
    }
    for &(a, b, m) in params {
        if a < 1 || a > b || m > b {
            return Err(Error::param(format!("invalid parameters (a,b,m) = ({a},{b},{m})")));
        }
    }
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_labeled_graphs(n, true)?);
    }
    let outcomes = graphs
        .par_iter()
        .map(|g| cross_validate_graph(g, params))
        .collect::<Result<Vec<_>>>()?;

    let mut summary = CrossValidationSummary {
        max_n,
        graphs: graphs.len(),
        params: params
            .iter()
            .map(|&(a, b, m)| ParamSummary { a, b, m, ..Default::default() })
            .collect(),
        ..Default::default()
    };
    for o in &outcomes {
        for (i, p) in summary.params.iter_mut().enumerate() {
            p.graphs += 1;
            p.agreements += 1;
            p.covered += o.covered[i] as usize;
            p.vacuous += o.vacuous[i] as usize;
            p.sufficient_holds += o.sufficient[i] as usize;
            p.witnesses_replayed += o.replayed[i];
        }
        summary.m_monotone_checks += o.m_checks;
        summary.bounds_monotone_checks += o.bound_checks;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_bounds_by_substitution() {
        // (8 + 4 + 4 + 10 + 16) / 2
        assert_eq!(spectral_order_bound(2, 2, 1), 21);
        // 8 + 5 + 4 + 7
        assert_eq!(size_order_bound(2, 2, 1), 24);
        // 5b/2 = 7.5 is ceiled: 8 + 8 + 4 + 7
        assert_eq!(size_order_bound(2, 3, 1), 27);
        // (12 + 4 + 6 + 11 + 16) / 2 = 24.5
        assert_eq!(spectral_order_bound(2, 3, 1), 25);
        assert_eq!(size_threshold(24, 2, 2, 1), 210 + 4 + 4 + 3);
        assert_eq!(size_threshold(3, 2, 2, 1), 11);
        assert_eq!(spectral_threshold(21, 2), 18);
    }

    #[test]
    fn spectral_hypotheses_on_examples() {
        let k21 = Graph::complete(21).unwrap();
        let r = spectral_hypotheses(&k21, 2, 2, 1, DEFAULT_RHO_TOL).unwrap();
        assert!(r.hypotheses_met);
        assert_eq!((r.order_bound, r.threshold, r.delta), (21, 18, 20));
        let c21 = Graph::cycle(21).unwrap();
        let r = spectral_hypotheses(&c21, 2, 2, 1, DEFAULT_RHO_TOL).unwrap();
        assert!(!r.hypotheses_met);
        assert!(!r.clauses.min_degree && !r.clauses.threshold && r.clauses.order && r.connected);
        assert!(spectral_hypotheses(&k21, 1, 2, 1, DEFAULT_RHO_TOL).is_err());
        assert!(spectral_hypotheses(&k21, 2, 2, 0, DEFAULT_RHO_TOL).is_err());
        assert!(spectral_hypotheses(&k21, 2, 2, 3, DEFAULT_RHO_TOL).is_err());
    }

    #[test]
    fn size_hypotheses_on_examples() {
        let k24 = Graph::complete(24).unwrap();
        let r = size_hypotheses(&k24, 2, 2, 1).unwrap();
        assert!(r.hypotheses_met);
        assert_eq!((r.e, r.threshold, r.order_bound), (276, 221, 24));
        assert_eq!(r.rho, None);

        let thinned = random_dense(24, 2, 2, 1, 60, 7).unwrap();
        assert_eq!(thinned.edge_count(), 216);
        let r = size_hypotheses(&thinned, 2, 2, 1).unwrap();
        assert!(!r.clauses.threshold && !r.hypotheses_met);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_labeled_graphs(1, false).unwrap().count(), 1);
        assert!(enumerate_labeled_graphs(8, false).is_err());
        assert!(enumerate_labeled_graphs(0, false).is_err());
    }

    #[test]
    fn random_dense_properties() {
        assert_eq!(random_dense(9, 2, 2, 1, 0, 3).unwrap(), Graph::complete(9).unwrap());
        let g = random_dense(21, 2, 2, 1, 20, 1).unwrap();
        assert_eq!(g.edge_count(), 210 - 20);
        assert!(g.min_degree() >= 3);
        assert_eq!(g.to_graph6(), random_dense(21, 2, 2, 1, 20, 1).unwrap().to_graph6());
        assert_ne!(g, random_dense(21, 2, 2, 1, 20, 2).unwrap());
        assert!(random_dense(5, 2, 2, 1, 10, 1).is_err());
        assert!(random_dense(3, 2, 2, 1, 0, 1).is_err());
    }

    #[test]
    fn campaign_examples() {
        let opts = CampaignOptions { timing: false, ..Default::default() };
        let k21 = GraphSource::Lines(vec![Graph::complete(21).unwrap().to_graph6()]);
        let c = verify_campaign(&k21, Theorem::Spectral, 2, 2, 1, &opts).unwrap();
        assert_eq!(c.status, ExitStatus::Ok);
        let r: Vec<_> = c.records().collect();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].covered, Some(true));

        let c21 = GraphSource::Lines(vec![Graph::cycle(21).unwrap().to_graph6()]);
        let c = verify_campaign(&c21, Theorem::Spectral, 2, 2, 1, &opts).unwrap();
        let r: Vec<_> = c.records().collect();
        assert!(!r[0].hypotheses_met);
        assert_eq!(r[0].covered, None);

        let empty = verify_campaign(&GraphSource::Lines(vec![]), Theorem::Size, 2, 2, 1, &opts).unwrap();
        assert!(empty.lines.is_empty());
        assert_eq!(empty.status, ExitStatus::Ok);
        assert_eq!(empty.to_json_lines(), "");

        let bad = GraphSource::Lines(vec!["Bw".into(), "not graph6".into()]);
        let c = verify_campaign(&bad, Theorem::Size, 2, 2, 1, &opts).unwrap();
        assert_eq!(c.lines.len(), 2);
        assert!(matches!(c.lines[1], CampaignLine::Error(_)));
        assert_eq!(c.status, ExitStatus::InputError);
    }

    #[test]
    fn cross_validate_small() {
        let s = cross_validate(4, &[(1, 1, 1)]).unwrap();
        assert_eq!(s.graphs, 1 + 1 + 4 + 38);
        assert_eq!(s.params[0].agreements, s.graphs);
        let s = cross_validate(3, &[(2, 2, 0)]).unwrap();
        assert_eq!(s.params[0].agreements, 6);
        assert!(cross_validate(3, &[(1, 1, 2)]).is_err());
        assert!(cross_validate(7, &[(1, 1, 1)]).is_err());
    }
}
