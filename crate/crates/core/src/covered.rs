//! Fractional (a,b,m)-coveredness.
//!
//! Two independent deciders:
//!
//! * [`is_covered_criterion`] evaluates the subset criterion
//!   `Σ_{v∈T} d_{G−S}(v) − a|T| + b|S| ≥ max_H Δ(S,T,H)` over every `S`, with
//!   `Δ = Σ_{x∈S} d_H(x) − e_H(T,S) + Θ(S,T)`;
//! * [`is_covered_direct`] pins each `m`-edge set `H` to weight 1 and asks the
//!   flow solver for a fractional factor of what remains.
//!
//! [`sufficient_2m`] is the one-sided test obtained by replacing the maximum
//! with its upper bound `2m`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{self, criterion_value, forced_reduction, gf_factor_flow, CriterionOutcome, FlowOutcome};
use crate::graph::{EdgeSubset, Graph, VertexSet};

/// Largest order accepted by [`is_covered_criterion`].
pub const CRITERION_MAX_N: usize = 12;
/// Largest number of edge subsets `C(e(G), m)` the criterion will enumerate.
pub const CRITERION_MAX_SUBSETS: u128 = 1_000_000;
/// Largest order accepted by [`sufficient_2m`].
pub const SUFFICIENT_MAX_N: usize = 22;

const DIRECT_BLOCK: usize = 4096;

/// Every quantity of the criterion at one `(S, H)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionTerms {
    pub s: VertexSet,
    pub t: VertexSet,
    pub h: EdgeSubset,
    /// `Σ_{v∈T} d_{G−S}(v) − a|T| + b|S|`.
    pub lhs: i64,
    /// `Σ_{x∈S} d_H(x)`.
    pub dh_s: i64,
    /// `e_H(T, S)`.
    pub eh_ts: i64,
    pub theta: i64,
    pub delta: i64,
}

impl CriterionTerms {
    pub fn is_violated(&self) -> bool {
        self.lhs < self.delta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Criterion,
    Direct,
    Sufficient,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Criterion => "criterion",
            Method::Direct => "direct",
            Method::Sufficient => "sufficient",
        }
    }
}

/// Where a not-covered witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// First violating `S` of the criterion, with its maximising `H`.
    Criterion,
    /// First infeasible `H`, with the first violating `S` of the reduced instance.
    ReducedCriterion,
    /// First infeasible `H`, with `S` read off a minimum cut (large graphs).
    FlowCut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub s_set: VertexSet,
    pub h_edges: Vec<(usize, usize)>,
    pub lhs: i64,
    pub delta: i64,
    #[serde(skip)]
    pub h: EdgeSubset,
    #[serde(skip)]
    pub source: WitnessSource,
}

impl Witness {
    fn from_terms(graph: &Graph, terms: CriterionTerms, source: WitnessSource) -> Self {
        Witness {
            h_edges: terms.h.pairs(graph),
            s_set: terms.s,
            lhs: terms.lhs,
            delta: terms.delta,
            h: terms.h,
            source,
        }
    }

    /// Re-evaluates the witness from scratch and reports whether it still
    /// demonstrates that `graph` is not (a,b,m)-covered.
    pub fn replay(&self, graph: &Graph, a: usize, b: usize) -> Result<bool> {
        let t = tight_set(graph, &self.s_set, a);
        let terms = delta_h(graph, &self.s_set, &t, &self.h, a, b)?;
        if (terms.lhs, terms.delta) != (self.lhs, self.delta) {
            return Ok(false);
        }
        let reduction = forced_reduction(graph, &self.h, a, b)?;
        match self.source {
            WitnessSource::Criterion | WitnessSource::ReducedCriterion => {
                let (value, _) = criterion_value(&reduction.graph, &reduction.bounds, &self.s_set)?;
                Ok(terms.is_violated() && value == terms.lhs - terms.delta)
            }
            WitnessSource::FlowCut => {
                Ok(!gf_factor_flow(&reduction.graph, &reduction.bounds)?.is_feasible())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub covered: bool,
    pub method: Method,
    /// `e(G) < m`: there is no `H` to cover and the verdict holds trivially.
    pub vacuous: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn vacuous(method: Method) -> Self {
        Verdict { covered: true, method, vacuous: true, witness: None }
    }
}

fn check_params(a: usize, b: usize, m: usize) -> Result<()> {
    if a < 1 || a > b {
        return Err(Error::param(format!("need 1 <= a <= b, got a={a}, b={b}")));
    }
    if m > b {
        return Err(Error::param(format!("need m <= b, got m={m}, b={b}")));
    }
    Ok(())
}

/// `T = {x ∉ S : d_{G−S}(x) ≤ a − 1}`.
pub fn tight_set(graph: &Graph, s: &VertexSet, a: usize) -> VertexSet {
    let in_s = s.indicator(graph.n());
    VertexSet::from_iter_unchecked((0..graph.n()).filter(|&x| {
        !in_s[x] && graph.neighbors(x).iter().filter(|&&y| !in_s[y]).count() < a
    }))
}

/// `Θ(S,T)`: the sum of `θ(x) = d_{G∖E(H)−S}(x) − a + d_H(x)` over `x ∈ T`
/// with `e_H(x,S) ≥ 2` and `1 ≤ θ(x) ≤ e_H(x,S) − 1`.
pub fn theta(graph: &Graph, s: &VertexSet, t: &VertexSet, h: &EdgeSubset, a: usize) -> Result<i64> {
    if *t != tight_set(graph, s, a) {
        return Err(Error::Consistency("T does not match the tight set of S".into()));
    }
    let n = graph.n();
    let in_s = s.indicator(n);
    let d_h = h.degrees(graph);
    let mut e_hs = vec![0i64; n];
    for (u, v) in h.pairs(graph) {
        if in_s[v] {
            e_hs[u] += 1;
        }
        if in_s[u] {
            e_hs[v] += 1;
        }
    }
    let mut sum = 0;
    for x in t.iter() {
        let d_rest = graph
            .neighbors(x)
            .iter()
            .filter(|&&y| !in_s[y] && !h.contains(graph.edge_index(x, y).expect("edge exists")))
            .count() as i64;
        let theta_x = d_rest - a as i64 + d_h[x] as i64;
        if e_hs[x] >= 2 && 1 <= theta_x && theta_x < e_hs[x] {
            sum += theta_x;
        }
    }
    Ok(sum)
}

/// All criterion terms at `(S, H)`; fails if `Δ > 2|H|`.
pub fn delta_h(graph: &Graph, s: &VertexSet, t: &VertexSet, h: &EdgeSubset, a: usize, b: usize) -> Result<CriterionTerms> {
    let theta = theta(graph, s, t, h, a)?;
    let in_s = s.indicator(graph.n());
    let in_t = t.indicator(graph.n());
    let d_gs: i64 = t
        .iter()
        .map(|x| graph.neighbors(x).iter().filter(|&&y| !in_s[y]).count() as i64)
        .sum();
    let lhs = d_gs - (a * t.len()) as i64 + (b * s.len()) as i64;
    let d_h = h.degrees(graph);
    let dh_s: i64 = s.iter().map(|x| d_h[x] as i64).sum();
    let eh_ts = h
        .pairs(graph)
        .iter()
        .filter(|&&(u, v)| (in_t[u] && in_s[v]) || (in_s[u] && in_t[v]))
        .count() as i64;
    let delta = dh_s - eh_ts + theta;
    let terms = CriterionTerms { s: s.clone(), t: t.clone(), h: h.clone(), lhs, dh_s, eh_ts, theta, delta };
    check_fact1(&terms, h.len())?;
    Ok(terms)
}

fn check_fact1(terms: &CriterionTerms, m: usize) -> Result<()> {
    if terms.delta > 2 * m as i64 || terms.theta < 0 {
        return Err(Error::Consistency(format!(
            "Δ = {} exceeds 2m = {} (or Θ = {} < 0) at S = {:?}, H = {:?}",
            terms.delta,
            2 * m,
            terms.theta,
            terms.s,
            terms.h
        )));
    }
    Ok(())
}

/// Per-`S` state shared by every `H`: membership, `d_{G−S}` and the lhs.
struct SubsetFrame {
    in_s: Vec<bool>,
    in_t: Vec<bool>,
    d_gs: Vec<i64>,
    lhs: i64,
}

impl SubsetFrame {
    fn new(graph: &Graph, s: &VertexSet, a: usize, b: usize) -> Self {
        let n = graph.n();
        let in_s = s.indicator(n);
        let d_gs: Vec<i64> = (0..n)
            .map(|x| graph.neighbors(x).iter().filter(|&&y| !in_s[y]).count() as i64)
            .collect();
        let in_t: Vec<bool> = (0..n).map(|x| !in_s[x] && d_gs[x] < a as i64).collect();
        let lhs = (0..n)
            .filter(|&x| in_t[x])
            .map(|x| d_gs[x] - a as i64)
            .sum::<i64>()
            + (b * s.len()) as i64;
        SubsetFrame { in_s, in_t, d_gs, lhs }
    }

    /// `(Σ_S d_H, e_H(T,S), Θ)` for the edge set `h`, touching only its endpoints.
    ///
    /// Uses `d_{G∖E(H)−S}(x) = d_{G−S}(x) − #{H-edges from x to V∖S}`.
    fn evaluate(&self, graph: &Graph, h: &[usize], a: usize, scratch: &mut Scratch) -> (i64, i64, i64) {
        let mut dh_s = 0;
        let mut eh_ts = 0;
        for &e in h {
            let (u, v) = graph.edges()[e];
            for (x, y) in [(u, v), (v, u)] {
                scratch.d_h[x] += 1;
                if self.in_s[x] {
                    dh_s += 1;
                }
                if self.in_s[y] {
                    scratch.e_hs[x] += 1;
                } else {
                    scratch.h_out[x] += 1;
                }
            }
            if (self.in_t[u] && self.in_s[v]) || (self.in_s[u] && self.in_t[v]) {
                eh_ts += 1;
            }
        }
        let mut theta = 0;
        for &e in h {
            let (u, v) = graph.edges()[e];
            for x in [u, v] {
                if self.in_t[x] && scratch.e_hs[x] >= 2 {
                    let theta_x = self.d_gs[x] - scratch.h_out[x] - a as i64 + scratch.d_h[x];
                    if 1 <= theta_x && theta_x < scratch.e_hs[x] {
                        theta += theta_x;
                    }
                    // count each vertex once
                    scratch.e_hs[x] = 0;
                }
            }
        }
        for &e in h {
            let (u, v) = graph.edges()[e];
            for x in [u, v] {
                scratch.d_h[x] = 0;
                scratch.e_hs[x] = 0;
                scratch.h_out[x] = 0;
            }
        }
        (dh_s, eh_ts, theta)
    }
}

struct Scratch {
    d_h: Vec<i64>,
    e_hs: Vec<i64>,
    h_out: Vec<i64>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { d_h: vec![0; n], e_hs: vec![0; n], h_out: vec![0; n] }
    }
}

fn max_delta_in_frame(graph: &Graph, frame: &SubsetFrame, a: usize, m: usize) -> Result<(i64, Vec<usize>)> {
    let mut scratch = Scratch::new(graph.n());
    let mut best: Option<(i64, Vec<usize>)> = None;
    for h in (0..graph.edge_count()).combinations(m) {
        let (dh_s, eh_ts, theta) = frame.evaluate(graph, &h, a, &mut scratch);
        let delta = dh_s - eh_ts + theta;
        if delta > 2 * m as i64 || theta < 0 {
            return Err(Error::Consistency(format!(
                "Δ = {delta} exceeds 2m = {} at H = {h:?}",
                2 * m
            )));
        }
        if best.as_ref().is_none_or(|(d, _)| delta > *d) {
            best = Some((delta, h));
        }
    }
    best.ok_or(Error::NoCandidate { m, edges: graph.edge_count() })
}

/// `max_{|H| = m} Δ(S,T,H)` and the lexicographically first maximising `H`.
pub fn max_delta_over_h(graph: &Graph, s: &VertexSet, a: usize, b: usize, m: usize) -> Result<CriterionTerms> {
    if graph.edge_count() < m {
        return Err(Error::NoCandidate { m, edges: graph.edge_count() });
    }
    VertexSet::new(s.iter(), graph.n())?;
    let frame = SubsetFrame::new(graph, s, a, b);
    let (_, h) = max_delta_in_frame(graph, &frame, a, m)?;
    let h = EdgeSubset::from_sorted_unchecked(h);
    delta_h(graph, s, &tight_set(graph, s, a), &h, a, b)
}

fn binomial(n: usize, k: usize, cap: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k.min(n) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap {
            return acc;
        }
    }
    if k > n {
        0
    } else {
        acc
    }
}

/// Decides coveredness through the subset criterion over all `S ⊆ V`.
pub fn is_covered_criterion(graph: &Graph, a: usize, b: usize, m: usize) -> Result<Verdict> {
    check_params(a, b, m)?;
    let n = graph.n();
    if n > CRITERION_MAX_N {
        return Err(Error::ScaleCap { what: "coveredness criterion", n, cap: CRITERION_MAX_N });
    }
    if graph.edge_count() < m {
        return Ok(Verdict::vacuous(Method::Criterion));
    }
    if binomial(graph.edge_count(), m, CRITERION_MAX_SUBSETS) > CRITERION_MAX_SUBSETS {
        return Err(Error::ScaleCap {
            what: "coveredness criterion (edge subsets)",
            n,
            cap: CRITERION_MAX_N,
        });
    }
    let found = (0u32..1 << n).into_par_iter().find_map_first(|mask| {
        let s = VertexSet::from_mask(mask as u64, n);
        let frame = SubsetFrame::new(graph, &s, a, b);
        match max_delta_in_frame(graph, &frame, a, m) {
            Err(e) => Some(Err(e)),
            Ok((delta, _)) if frame.lhs >= delta => None,
            Ok((_, h)) => {
                let h = EdgeSubset::from_sorted_unchecked(h);
                Some(delta_h(graph, &s, &tight_set(graph, &s, a), &h, a, b))
            }
        }
    });
    match found {
        None => Ok(Verdict { covered: true, method: Method::Criterion, vacuous: false, witness: None }),
        Some(terms) => {
            let terms = terms?;
            if !terms.is_violated() {
                return Err(Error::Consistency("fast and literal Δ evaluations differ".into()));
            }
            Ok(Verdict {
                covered: false,
                method: Method::Criterion,
                vacuous: false,
                witness: Some(Witness::from_terms(graph, terms, WitnessSource::Criterion)),
            })
        }
    }
}

/// Decides coveredness by forcing every `m`-edge set and solving the reduced
/// factor problem by max-flow.
pub fn is_covered_direct(graph: &Graph, a: usize, b: usize, m: usize) -> Result<Verdict> {
    check_params(a, b, m)?;
    if graph.edge_count() < m {
        return Ok(Verdict::vacuous(Method::Direct));
    }
    let mut subsets = (0..graph.edge_count()).combinations(m);
    loop {
        let block: Vec<Vec<usize>> = subsets.by_ref().take(DIRECT_BLOCK).collect();
        if block.is_empty() {
            break;
        }
        let found = block.into_par_iter().find_map_first(|h| {
            let h = EdgeSubset::from_sorted_unchecked(h);
            let step = || -> Result<Option<(EdgeSubset, factor::Reduction, factor::FlowCut)>> {
                let reduction = forced_reduction(graph, &h, a, b)?;
                Ok(match gf_factor_flow(&reduction.graph, &reduction.bounds)? {
                    FlowOutcome::Feasible(_) => None,
                    FlowOutcome::Infeasible(cut) => Some((h.clone(), reduction, cut)),
                })
            };
            step().transpose()
        });
        if let Some(hit) = found {
            let (h, reduction, cut) = hit?;
            let witness = direct_witness(graph, a, b, h, &reduction, cut)?;
            return Ok(Verdict { covered: false, method: Method::Direct, vacuous: false, witness: Some(witness) });
        }
    }
    Ok(Verdict { covered: true, method: Method::Direct, vacuous: false, witness: None })
}

fn direct_witness(
    graph: &Graph,
    a: usize,
    b: usize,
    h: EdgeSubset,
    reduction: &factor::Reduction,
    cut: factor::FlowCut,
) -> Result<Witness> {
    let (s, source) = if graph.n() <= factor::CRITERION_MAX_N {
        match factor::gf_factor_criterion(&reduction.graph, &reduction.bounds)? {
            CriterionOutcome::Infeasible { s, .. } => (s, WitnessSource::ReducedCriterion),
            CriterionOutcome::Feasible => {
                return Err(Error::Consistency(format!(
                    "flow reports H = {:?} infeasible but the factor criterion finds no violation",
                    h.pairs(graph)
                )))
            }
        }
    } else {
        (cut.left, WitnessSource::FlowCut)
    };
    let terms = delta_h(graph, &s, &tight_set(graph, &s, a), &h, a, b)?;
    if source == WitnessSource::ReducedCriterion && !terms.is_violated() {
        return Err(Error::Consistency(format!(
            "reduced-instance violation at S = {:?} is not a criterion violation (lhs {}, Δ {})",
            s, terms.lhs, terms.delta
        )));
    }
    Ok(Witness::from_terms(graph, terms, source))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SufficientOutcome {
    /// Every `S` has lhs `≥ 2m`, so the graph is covered.
    Holds,
    /// First `S` below its target; says nothing about coveredness.
    Inconclusive { s: VertexSet, lhs: i64 },
}

impl SufficientOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, SufficientOutcome::Holds)
    }
}

/// One-sided test: `Σ_{v∈T} d_{G−S}(v) − a|T| + b|S| ≥ 2m` for every
/// nonempty `S`, and `≥ 0` for `S = ∅`.
///
/// At `S = ∅` every `Δ` term vanishes, so the right-hand side there is exactly
/// 0; demanding `2m` would make the test fail on every graph once `m ≥ 1`.
pub fn sufficient_2m(graph: &Graph, a: usize, b: usize, m: usize) -> Result<SufficientOutcome> {
    check_params(a, b, m)?;
    let n = graph.n();
    if n > SUFFICIENT_MAX_N {
        return Err(Error::ScaleCap { what: "2m sufficient condition", n, cap: SUFFICIENT_MAX_N });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|x| graph.neighbors(x).iter().fold(0u32, |acc, &y| acc | 1 << y))
        .collect();
    let hit = (0u32..1 << n).into_par_iter().find_first(|&mask| {
        let target = if mask == 0 { 0 } else { 2 * m as i64 };
        let mut lhs = (b as i64) * mask.count_ones() as i64;
        for x in (0..n).filter(|&x| mask >> x & 1 == 0) {
            let d = (nbr[x] & !mask).count_ones() as i64;
            if d < a as i64 {
                lhs += d - a as i64;
            }
        }
        lhs < target
    });
    Ok(match hit {
        None => SufficientOutcome::Holds,
        Some(mask) => {
            let s = VertexSet::from_mask(mask as u64, n);
            let lhs = SubsetFrame::new(graph, &s, a, b).lhs;
            SufficientOutcome::Inconclusive { s, lhs }
        }
    })
}
