//! Fractional (g,f)-factors: an exact circulation solver, the exponential
//! subset criterion as an independent oracle, and the reduction that pins a
//! set of edges to weight 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::{Circulation, CirculationOutcome};
use crate::graph::{EdgeSubset, Graph, VertexSet};

/// Largest order accepted by [`gf_factor_criterion`].
pub const CRITERION_MAX_N: usize = 22;

/// Per-vertex degree bounds `g(u) <= f(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    g: Vec<usize>,
    f: Vec<usize>,
}

impl Bounds {
    pub fn new(g: Vec<usize>, f: Vec<usize>) -> Result<Self> {
        if g.len() != f.len() {
            return Err(Error::param("g and f have different lengths"));
        }
        if let Some(u) = (0..g.len()).find(|&u| g[u] > f[u]) {
            return Err(Error::param(format!("g({u}) = {} > f({u}) = {}", g[u], f[u])));
        }
        Ok(Bounds { g, f })
    }

    /// `g ≡ a`, `f ≡ b`.
    pub fn constant(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::new(vec![a; n], vec![b; n])
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn lower(&self) -> &[usize] {
        &self.g
    }

    pub fn upper(&self) -> &[usize] {
        &self.f
    }

    fn check_for(&self, graph: &Graph) -> Result<()> {
        if self.len() != graph.n() {
            return Err(Error::param(format!(
                "bounds cover {} vertices, graph has {}",
                self.len(),
                graph.n()
            )));
        }
        Ok(())
    }
}

/// Half-integral edge weights, stored doubled: entry `k ∈ {0,1,2}` means
/// `h(e) = k/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorWitness {
    doubled: Vec<u8>,
}

impl FactorWitness {
    pub fn from_doubled(doubled: Vec<u8>) -> Self {
        FactorWitness { doubled }
    }

    pub fn doubled(&self) -> &[u8] {
        &self.doubled
    }

    pub fn value(&self, edge: usize) -> f64 {
        self.doubled[edge] as f64 / 2.0
    }

    /// Checks `0 <= h <= 1` and `2g(u) <= Σ 2h(e) <= 2f(u)` in integers.
    pub fn verify(&self, graph: &Graph, bounds: &Bounds) -> bool {
        if self.doubled.len() != graph.edge_count() || bounds.len() != graph.n() {
            return false;
        }
        if self.doubled.iter().any(|&k| k > 2) {
            return false;
        }
        let mut load = vec![0usize; graph.n()];
        for (&(u, v), &k) in graph.edges().iter().zip(&self.doubled) {
            load[u] += k as usize;
            load[v] += k as usize;
        }
        (0..graph.n()).all(|u| 2 * bounds.g[u] <= load[u] && load[u] <= 2 * bounds.f[u])
    }
}

/// Minimum cut of the double-cover circulation, as vertex sets of `G`:
/// `left` holds `u` whose out-copy lies on the source side, `right` those
/// whose in-copy does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowCut {
    pub left: VertexSet,
    pub right: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowOutcome {
    Feasible(FactorWitness),
    Infeasible(FlowCut),
}

impl FlowOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FlowOutcome::Feasible(_))
    }
}

/// Decides whether `graph` has a fractional (g,f)-factor.
///
/// Two copies `u_L`, `u_R` of each vertex; `s → u_L` and `u_R → t` carry
/// `[g(u), f(u)]`, each edge `uv` gives `u_L → v_R` and `v_L → u_R` with
/// `[0, 1]`, and `t → s` closes the circulation. An integral circulation `x`
/// yields `h(uv) = (x(u_L→v_R) + x(v_L→u_R)) / 2`.
pub fn gf_factor_flow(graph: &Graph, bounds: &Bounds) -> Result<FlowOutcome> {
    bounds.check_for(graph)?;
    let n = graph.n();
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut circ = Circulation::new(2 * n + 2);
    for u in 0..n {
        circ.add_arc(source, u, bounds.g[u] as i64, bounds.f[u] as i64);
        circ.add_arc(n + u, sink, bounds.g[u] as i64, bounds.f[u] as i64);
    }
    let total: i64 = bounds.f.iter().map(|&x| x as i64).sum();
    circ.add_arc(sink, source, 0, total);
    let first_edge_arc = 2 * n + 1;
    for &(u, v) in graph.edges() {
        circ.add_arc(u, n + v, 0, 1);
        circ.add_arc(v, n + u, 0, 1);
    }
    Ok(match circ.solve() {
        CirculationOutcome::Feasible(x) => {
            let doubled = (0..graph.edge_count())
                .map(|e| (x[first_edge_arc + 2 * e] + x[first_edge_arc + 2 * e + 1]) as u8)
                .collect();
            FlowOutcome::Feasible(FactorWitness { doubled })
        }
        CirculationOutcome::Infeasible(side) => FlowOutcome::Infeasible(FlowCut {
            left: VertexSet::from_iter_unchecked((0..n).filter(|&u| side[u])),
            right: VertexSet::from_iter_unchecked((0..n).filter(|&u| side[n + u])),
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CriterionOutcome {
    Feasible,
    /// `value = Σ_S f − Σ_T g + Σ_T d_{G−S} < 0`.
    Infeasible { s: VertexSet, t: VertexSet, value: i64 },
}

impl CriterionOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, CriterionOutcome::Feasible)
    }
}

/// Value of the subset criterion at `s`, with the deficient set
/// `T = {x ∉ S : d_{G−S}(x) < g(x)}`.
pub fn criterion_value(graph: &Graph, bounds: &Bounds, s: &VertexSet) -> Result<(i64, VertexSet)> {
    bounds.check_for(graph)?;
    let in_s = s.indicator(graph.n());
    let mut value: i64 = s.iter().map(|x| bounds.f[x] as i64).sum();
    let mut t = Vec::new();
    for x in (0..graph.n()).filter(|&x| !in_s[x]) {
        let d = graph.neighbors(x).iter().filter(|&&y| !in_s[y]).count();
        if d < bounds.g[x] {
            value += d as i64 - bounds.g[x] as i64;
            t.push(x);
        }
    }
    Ok((value, VertexSet::from_iter_unchecked(t)))
}

/// Exhaustive subset criterion over all `S ⊆ V` in bitmask order; returns
/// the first violating `S`.
pub fn gf_factor_criterion(graph: &Graph, bounds: &Bounds) -> Result<CriterionOutcome> {
    bounds.check_for(graph)?;
    let n = graph.n();
    if n > CRITERION_MAX_N {
        return Err(Error::ScaleCap { what: "factor subset criterion", n, cap: CRITERION_MAX_N });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|x| graph.neighbors(x).iter().fold(0u32, |m, &y| m | 1 << y))
        .collect();
    let (g, f) = (&bounds.g, &bounds.f);
    for mask in 0u32..(1u32 << n) {
        let mut value = 0i64;
        for x in 0..n {
            if mask >> x & 1 == 1 {
                value += f[x] as i64;
            } else {
                let d = (nbr[x] & !mask).count_ones() as i64;
                value += (d - g[x] as i64).min(0);
            }
        }
        if value < 0 {
            let s = VertexSet::from_mask(mask as u64, n);
            let (v, t) = criterion_value(graph, bounds, &s)?;
            debug_assert_eq!(v, value);
            return Ok(CriterionOutcome::Infeasible { s, t, value });
        }
    }
    Ok(CriterionOutcome::Feasible)
}

/// The instance obtained by fixing `h ≡ 1` on a set of edges.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// `G ∖ E(H)`.
    pub graph: Graph,
    pub bounds: Bounds,
    pub forced: EdgeSubset,
    /// Edge index in the original graph for each edge of `graph`.
    pub kept: Vec<usize>,
}

impl Reduction {
    /// Extends a witness of the reduced instance by weight 1 on the forced edges.
    pub fn lift(&self, witness: &FactorWitness, original: &Graph) -> FactorWitness {
        let mut doubled = vec![0u8; original.edge_count()];
        for e in self.forced.iter() {
            doubled[e] = 2;
        }
        for (i, &e) in self.kept.iter().enumerate() {
            doubled[e] = witness.doubled[i];
        }
        FactorWitness { doubled }
    }
}

/// `G′ = G ∖ E(H)`, `g′(u) = max(0, a − d_H(u))`, `f′(u) = b − d_H(u)`.
///
/// `G` has a fractional [a,b]-factor with `h ≡ 1` on `H` iff `G′` has a
/// fractional (g′,f′)-factor.
pub fn forced_reduction(graph: &Graph, forced: &EdgeSubset, a: usize, b: usize) -> Result<Reduction> {
    if a < 1 || a > b {
        return Err(Error::param(format!("need 1 <= a <= b, got a={a}, b={b}")));
    }
    if forced.len() > b {
        return Err(Error::param(format!("|H| = {} exceeds b = {b}", forced.len())));
    }
    let d_h = forced.degrees(graph);
    let reduced = graph.delete_edges(forced)?;
    // d_H(u) <= |H| <= b, so f' never goes negative
    let g = d_h.iter().map(|&d| a.saturating_sub(d)).collect();
    let f = d_h.iter().map(|&d| b - d).collect();
    let kept = (0..graph.edge_count()).filter(|&e| !forced.contains(e)).collect();
    Ok(Reduction { graph: reduced, bounds: Bounds::new(g, f)?, forced: forced.clone(), kept })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn feasible(g: &Graph, b: &Bounds) -> bool {
        let flow = gf_factor_flow(g, b).unwrap();
        if let FlowOutcome::Feasible(w) = &flow {
            assert!(w.verify(g, b));
        }
        flow.is_feasible()
    }

    #[test]
    fn flow_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(feasible(&c4, &Bounds::constant(4, 1, 1).unwrap()));
        match gf_factor_flow(&c4, &Bounds::constant(4, 2, 2).unwrap()).unwrap() {
            FlowOutcome::Feasible(w) => assert_eq!(w.doubled(), &[2, 2, 2, 2]),
            other => panic!("{other:?}"),
        }
        let star = Graph::star(3).unwrap();
        assert!(!feasible(&star, &Bounds::constant(4, 1, 1).unwrap()));
    }

    #[test]
    fn criterion_examples() {
        let star = Graph::star(3).unwrap();
        match gf_factor_criterion(&star, &Bounds::constant(4, 1, 1).unwrap()).unwrap() {
            CriterionOutcome::Infeasible { s, t, value } => {
                assert_eq!(s.as_slice(), &[0]);
                assert_eq!(t.as_slice(), &[1, 2, 3]);
                assert_eq!(value, -2);
            }
            other => panic!("{other:?}"),
        }
        let k4 = Graph::complete(4).unwrap();
        assert!(gf_factor_criterion(&k4, &Bounds::constant(4, 1, 1).unwrap()).unwrap().is_feasible());
        let p5 = Graph::path(5).unwrap();
        assert!(gf_factor_criterion(&p5, &Bounds::constant(5, 0, 0).unwrap()).unwrap().is_feasible());
        assert!(gf_factor_criterion(&Graph::empty(23).unwrap(), &Bounds::constant(23, 0, 0).unwrap()).is_err());
    }

    #[test]
    fn odd_cycle_needs_halves() {
        let c5 = Graph::cycle(5).unwrap();
        match gf_factor_flow(&c5, &Bounds::constant(5, 1, 1).unwrap()).unwrap() {
            FlowOutcome::Feasible(w) => assert_eq!(w.doubled(), &[1; 5]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bounds_validation() {
        assert!(Bounds::new(vec![2], vec![1]).is_err());
        assert!(Bounds::new(vec![1, 1], vec![1]).is_err());
        let k3 = Graph::complete(3).unwrap();
        assert!(gf_factor_flow(&k3, &Bounds::constant(2, 1, 1).unwrap()).is_err());
    }

    #[test]
    fn reduction_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let h = EdgeSubset::new(&c4, [0]).unwrap();
        let r = forced_reduction(&c4, &h, 2, 2).unwrap();
        let (u, v) = c4.edge(0).unwrap();
        for x in 0..4 {
            let expect = if x == u || x == v { 1 } else { 2 };
            assert_eq!(r.bounds.lower()[x], expect);
            assert_eq!(r.bounds.upper()[x], expect);
        }
        assert_eq!(r.graph.edge_count(), 3);

        let p3 = Graph::path(3).unwrap();
        let all = EdgeSubset::new(&p3, [0]).unwrap();
        let r = forced_reduction(&p3, &all, 1, 1).unwrap();
        assert_eq!(r.bounds.lower(), &[0, 0, 1]);
        assert!(!gf_factor_criterion(&r.graph, &r.bounds).unwrap().is_feasible());

        let k4 = Graph::complete(4).unwrap();
        let r = forced_reduction(&k4, &EdgeSubset::empty(), 2, 3).unwrap();
        assert_eq!(r.graph, k4);
        assert_eq!(r.bounds, Bounds::constant(4, 2, 3).unwrap());

        let two = EdgeSubset::new(&k4, [0, 5]).unwrap();
        assert!(forced_reduction(&k4, &two, 1, 1).is_err());
        assert!(forced_reduction(&k4, &h, 0, 1).is_err());
    }

    #[test]
    fn lifted_witness_is_an_ab_factor() {
        let k4 = Graph::complete(4).unwrap();
        let h = EdgeSubset::new(&k4, [0]).unwrap();
        let r = forced_reduction(&k4, &h, 1, 1).unwrap();
        let FlowOutcome::Feasible(w) = gf_factor_flow(&r.graph, &r.bounds).unwrap() else {
            panic!("K4 edge extends to a perfect matching");
        };
        let lifted = r.lift(&w, &k4);
        assert_eq!(lifted.doubled()[0], 2);
        assert!(lifted.verify(&k4, &Bounds::constant(4, 1, 1).unwrap()));
    }
}
