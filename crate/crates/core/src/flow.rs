//! Integral max-flow (Dinic's shortest-augmenting-path phases) and feasible
//! circulations with lower bounds on top of it.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

/// Residual network. Arc `2k` is the forward arc of the `k`-th added edge and
/// `2k + 1` its reverse.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    original: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), original: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    pub fn nodes(&self) -> usize {
        self.out.len()
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> usize {
        debug_assert!(cap >= 0);
        let id = self.original.len();
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
        self.original.push(cap);
        id
    }

    /// Flow currently carried by edge `id`.
    pub fn flow(&self, id: usize) -> i64 {
        self.original[id] - self.arcs[2 * id].cap
    }

    fn levels(&self, source: usize) -> Vec<u32> {
        let mut level = vec![u32::MAX; self.nodes()];
        level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && level[arc.to] == u32::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, sink: usize, limit: i64, level: &[u32], next: &mut [usize]) -> i64 {
        if u == sink {
            return limit;
        }
        while next[u] < self.out[u].len() {
            let a = self.out[u][next[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.augment(to, sink, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Pushes a maximum flow from `source` to `sink` and returns its value.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink] == u32::MAX {
                return total;
            }
            let mut next = vec![0; self.nodes()];
            loop {
                let pushed = self.augment(source, sink, i64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes reachable from `source` in the residual network.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        self.levels(source).into_iter().map(|l| l != u32::MAX).collect()
    }
}

/// A circulation problem: every arc carries flow in `[lower, upper]` and flow
/// is conserved at every node.
#[derive(Debug, Clone)]
pub struct Circulation {
    nodes: usize,
    arcs: Vec<(usize, usize, i64, i64)>,
}

/// Outcome of [`Circulation::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CirculationOutcome {
    /// Flow value per arc, in insertion order.
    Feasible(Vec<i64>),
    /// Nodes on the source side of a minimum cut of the transformed network;
    /// the lower bounds entering this set exceed what can leave it.
    Infeasible(Vec<bool>),
}

impl Circulation {
    pub fn new(nodes: usize) -> Self {
        Circulation { nodes, arcs: Vec::new() }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, lower: i64, upper: i64) -> usize {
        debug_assert!(0 <= lower && lower <= upper);
        self.arcs.push((from, to, lower, upper));
        self.arcs.len() - 1
    }

    /// Standard reduction: arc capacities become `upper - lower`, each lower
    /// bound turns into supply at its head and demand at its tail, served from
    /// a super source and to a super sink. Feasible iff the max flow saturates
    /// every supply arc.
    pub fn solve(&self) -> CirculationOutcome {
        let super_source = self.nodes;
        let super_sink = self.nodes + 1;
        let mut net = FlowNetwork::new(self.nodes + 2);
        let mut excess = vec![0i64; self.nodes];
        let ids: Vec<usize> = self
            .arcs
            .iter()
            .map(|&(u, v, lo, hi)| {
                excess[v] += lo;
                excess[u] -= lo;
                net.add_edge(u, v, hi - lo)
            })
            .collect();
        let mut demand = 0;
        for (v, &ex) in excess.iter().enumerate() {
            if ex > 0 {
                net.add_edge(super_source, v, ex);
                demand += ex;
            } else if ex < 0 {
                net.add_edge(v, super_sink, -ex);
            }
        }
        if net.max_flow(super_source, super_sink) < demand {
            let mut side = net.source_side(super_source);
            side.truncate(self.nodes);
            return CirculationOutcome::Infeasible(side);
        }
        CirculationOutcome::Feasible(
            self.arcs
                .iter()
                .zip(ids)
                .map(|(&(_, _, lo, _), id)| lo + net.flow(id))
                .collect(),
        )
    }
}
