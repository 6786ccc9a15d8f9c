//! Simple undirected graphs with dense vertex indices and lexicographically
//! indexed edges, plus the join/union constructions used throughout the crate.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the
/// position in that list is the edge's stable index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order is irrelevant; loops
    /// and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    /// `edges` must be sorted, deduplicated, loop-free and in range.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph { n, neighbors, edges }
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("empty graph needs n >= 1"));
        }
        Ok(Self::from_sorted_unchecked(n, Vec::new()))
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("complete graph needs n >= 1"));
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("path needs n >= 1"));
        }
        Ok(Self::from_sorted_unchecked(n, (1..n).map(|v| (v - 1, v)).collect()))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param("cycle needs n >= 3"));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Complete bipartite graph `K_{p,q}`; the first `p` vertices form one side.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        Ok(Self::empty(p)?.join(&Self::empty(q)?))
    }

    /// Star `K_{1,q}` with centre 0.
    pub fn star(q: usize) -> Result<Self> {
        Self::complete_bipartite(1, q)
    }

    /// `self + other`: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted_unchecked(self.n + other.n, edges)
    }

    /// `self ∨ other`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, v + shift));
            }
        }
        edges.sort_unstable();
        Self::from_sorted_unchecked(self.n + other.n, edges)
    }

    /// `H_{n,a} = K_{a-1} ∨ (K_1 + K_{n-a})`.
    ///
    /// Vertices `0..=a-2` are the joined clique, vertex `a-1` is the pendant
    /// `K_1` and the remaining `n-a` vertices form the large clique.
    pub fn h_na(n: usize, a: usize) -> Result<Self> {
        if a < 1 || a + 1 > n {
            return Err(Error::param(format!("h_na needs 1 <= a <= n-1, got n={n}, a={a}")));
        }
        let tail = Self::complete(1)?.disjoint_union(&Self::complete(n - a)?);
        if a == 1 {
            return Ok(tail);
        }
        Ok(Self::complete(a - 1)?.join(&tail))
    }

    /// `K_{a-1} ∨ (K_{n-a} ∪ K_1)`, the same family as [`Graph::h_na`] written
    /// with the large clique before the pendant vertex.
    pub fn k_join_family(n: usize, a: usize) -> Result<Self> {
        if a < 2 || a + 1 > n {
            return Err(Error::param(format!(
                "k_join_family needs 2 <= a <= n-1, got n={n}, a={a}"
            )));
        }
        let tail = Self::complete(n - a)?.disjoint_union(&Self::complete(1)?);
        Ok(Self::complete(a - 1)?.join(&tail))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `e(G)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<(usize, usize)> {
        self.edges.get(index).copied()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// `δ(G)`; zero for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `d_{G-S}(x)`: neighbours of `x` outside `s`.
    pub fn degree_outside(&self, x: usize, s: &VertexSet) -> usize {
        self.neighbors[x].iter().filter(|&&y| !s.contains(y)).count()
    }

    /// `e_G(S1, S2)` for disjoint `s1`, `s2`.
    pub fn edges_between(&self, s1: &VertexSet, s2: &VertexSet) -> Result<usize> {
        if s1.iter().any(|x| s2.contains(x)) {
            return Err(Error::OverlappingSets);
        }
        Ok(s1
            .iter()
            .map(|x| self.neighbors[x].iter().filter(|&&y| s2.contains(y)).count())
            .sum())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// `G - S` together with the index maps between the two vertex sets.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        s.check_bound(self.n)?;
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(self.n - s.len());
        for v in 0..self.n {
            if !s.contains(v) {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        Ok(InducedSubgraph {
            graph: Self::from_sorted_unchecked(new_to_old.len(), edges),
            old_to_new,
            new_to_old,
        })
    }

    /// `G ∖ M`: same vertices, edges of `m` removed. Edge indices of the
    /// result are recomputed.
    pub fn delete_edges(&self, m: &EdgeSubset) -> Result<Graph> {
        m.check_bound(self.edge_count())?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !m.contains(*i))
            .map(|(_, &e)| e)
            .collect();
        Ok(Self::from_sorted_unchecked(self.n, edges))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::param("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::param("not a permutation"));
            }
        }
        Self::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(line: &str) -> Result<Graph> {
        crate::graph6::decode(line)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_graph6())
    }
}

/// Result of [`Graph::delete_vertices`].
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// A set of vertices, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let set = Self::from_iter_unchecked(members);
        set.check_bound(n)?;
        Ok(set)
    }

    pub(crate) fn from_iter_unchecked(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Members are the set bits of `mask`; bit `i` is vertex `i`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        VertexSet((0..n.min(64)).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut out = vec![false; n];
        for v in self.iter() {
            out[v] = true;
        }
        out
    }

    fn check_bound(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

/// A set of edge indices of one particular graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct EdgeSubset(Vec<usize>);

impl EdgeSubset {
    pub fn new(graph: &Graph, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("duplicate edge index in edge subset"));
        }
        let set = EdgeSubset(v);
        set.check_bound(graph.edge_count())?;
        Ok(set)
    }

    /// Looks up each `(u, v)` pair in `graph`.
    pub fn from_pairs(graph: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let indices = pairs
            .iter()
            .map(|&(u, v)| graph.edge_index(u, v).ok_or(Error::InvalidEdge(u, v)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, indices)
    }

    /// `indices` must be sorted, distinct and valid for the intended graph.
    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        EdgeSubset(indices)
    }

    pub fn empty() -> Self {
        EdgeSubset(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn pairs(&self, graph: &Graph) -> Vec<(usize, usize)> {
        self.iter().map(|i| graph.edges[i]).collect()
    }

    /// `d_H(x)` for every vertex of `graph`.
    pub fn degrees(&self, graph: &Graph) -> Vec<usize> {
        let mut d = vec![0; graph.n()];
        for i in self.iter() {
            let (u, v) = graph.edges[i];
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    fn check_bound(&self, edges: usize) -> Result<()> {
        match self.0.last() {
            Some(&i) if i >= edges => Err(Error::EdgeOutOfRange { index: i, edges }),
            _ => Ok(()),
        }
    }
}
