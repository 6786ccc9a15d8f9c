//! Adjacency spectral radius: shifted power iteration, a dense Jacobi oracle,
//! quotient matrices of join families, and the Hong-type upper bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000_000;
pub const JACOBI_MAX_N: usize = 64;
const JACOBI_OFF_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// `‖A v − ρ v‖∞` for the returned vector.
    pub residual: f64,
    /// Iterations summed over all components.
    pub iterations: usize,
    /// Perron vector of the dominant component, scaled to unit ∞-norm and
    /// zero outside that component.
    pub perron_vector: Vec<f64>,
}

/// Largest adjacency eigenvalue by power iteration on `A + I`.
///
/// Each connected component is iterated separately from the all-ones vector
/// and the largest root is returned.
pub fn spectral_radius(graph: &Graph, tol: f64) -> Result<SpectralResult> {
    if graph.n() == 0 {
        return Err(Error::param("spectral radius of the null graph"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param("tolerance must be positive"));
    }
    let mut best: Option<(f64, f64, Vec<usize>, Vec<f64>)> = None;
    let mut iterations = 0;
    for comp in graph.components() {
        let (rho, residual, iters, vector) = component_power_iteration(graph, &comp, tol)
            .map_err(|mut r| {
                r.iterations += iterations;
                Error::NonConvergence(r)
            })?;
        iterations += iters;
        if best.as_ref().is_none_or(|b| rho > b.0) {
            best = Some((rho, residual, comp, vector));
        }
    }
    let (rho, residual, comp, local) = best.expect("at least one component");
    let mut perron_vector = vec![0.0; graph.n()];
    for (&v, x) in comp.iter().zip(local) {
        perron_vector[v] = x;
    }
    Ok(SpectralResult { rho, residual, iterations, perron_vector })
}

type ComponentOutcome = std::result::Result<(f64, f64, usize, Vec<f64>), Box<SpectralResult>>;

fn component_power_iteration(graph: &Graph, comp: &[usize], tol: f64) -> ComponentOutcome {
    let k = comp.len();
    if k == 1 {
        return Ok((0.0, 0.0, 0, vec![1.0]));
    }
    let mut local = vec![usize::MAX; graph.n()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| graph.neighbors(v).iter().map(|&w| local[w]).collect())
        .collect();
    let apply = |x: &[f64], out: &mut [f64]| {
        for (i, row) in adj.iter().enumerate() {
            out[i] = row.iter().map(|&j| x[j]).sum();
        }
    };

    let mut x = vec![1.0; k];
    let mut ax = vec![0.0; k];
    let mut prev = f64::INFINITY;
    let mut rho = 0.0;
    let mut residual = f64::INFINITY;
    for iter in 1..=MAX_ITERATIONS {
        apply(&x, &mut ax);
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        rho = num / den;
        residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, axi)| (axi - rho * xi).abs())
            .fold(0.0, f64::max);
        if (rho - prev).abs() <= tol && residual <= 10.0 * tol {
            return Ok((rho, residual, iter, x));
        }
        prev = rho;
        // x <- (A + I) x, renormalised to unit ∞-norm
        let mut norm = 0.0f64;
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
            norm = norm.max(xi.abs());
        }
        x.iter_mut().for_each(|xi| *xi /= norm);
    }
    Err(Box::new(SpectralResult { rho, residual, iterations: MAX_ITERATIONS, perron_vector: x }))
}

/// Largest eigenvalue from a full cyclic-Jacobi diagonalisation of `A(G)`.
pub fn spectral_radius_jacobi(graph: &Graph) -> Result<f64> {
    let n = graph.n();
    if n > JACOBI_MAX_N {
        return Err(Error::ScaleCap { what: "jacobi eigenvalue oracle", n, cap: JACOBI_MAX_N });
    }
    if n == 0 {
        return Err(Error::param("spectral radius of the null graph"));
    }
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in graph.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    let eig = symmetric_eigenvalues(a)?;
    Ok(eig.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
pub(crate) fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let n = a.len();
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < JACOBI_OFF_TOL {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let off = off_diagonal_norm(&a);
    if off < JACOBI_OFF_TOL {
        Ok((0..n).map(|i| a[i][i]).collect())
    } else {
        Err(Error::JacobiNonConvergence(off))
    }
}

/// One cell of an equitable partition: a clique or an independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Part {
    pub size: usize,
    pub clique: bool,
}

impl Part {
    pub fn clique(size: usize) -> Self {
        Part { size, clique: true }
    }

    pub fn independent(size: usize) -> Self {
        Part { size, clique: false }
    }
}

/// A graph described by cells that are cliques or independent sets, with each
/// pair of cells either completely joined or not adjacent at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinPartition {
    pub parts: Vec<Part>,
    pub joins: Vec<(usize, usize)>,
}

impl JoinPartition {
    pub fn new(parts: Vec<Part>, joins: Vec<(usize, usize)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::param("empty partition"));
        }
        if parts.iter().any(|p| p.size == 0) {
            return Err(Error::param("partition cells must be nonempty"));
        }
        let k = parts.len();
        if joins.iter().any(|&(i, j)| i >= k || j >= k || i == j) {
            return Err(Error::param("join refers to an unknown cell or a cell to itself"));
        }
        Ok(JoinPartition { parts, joins })
    }

    /// The partition of `H_{n,a}` matching the vertex order of [`Graph::h_na`].
    pub fn h_na(n: usize, a: usize) -> Result<Self> {
        if a < 2 || a + 1 > n {
            return Err(Error::param("h_na partition needs 2 <= a <= n-1"));
        }
        Self::new(
            vec![Part::clique(a - 1), Part::clique(1), Part::clique(n - a)],
            vec![(0, 1), (0, 2)],
        )
    }

    fn joined(&self, i: usize, j: usize) -> bool {
        self.joins.iter().any(|&(x, y)| (x, y) == (i, j) || (y, x) == (i, j))
    }

    /// The quotient matrix `B[i][j]`: neighbours a vertex of cell `i` has in cell `j`.
    pub fn quotient_matrix(&self) -> Vec<Vec<f64>> {
        let k = self.parts.len();
        let mut b = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in 0..k {
                b[i][j] = if i == j {
                    if self.parts[i].clique { (self.parts[i].size - 1) as f64 } else { 0.0 }
                } else if self.joined(i, j) {
                    self.parts[j].size as f64
                } else {
                    0.0
                };
            }
        }
        b
    }

    /// Materialises the graph; cells occupy consecutive vertex ranges in order.
    pub fn to_graph(&self) -> Graph {
        let mut start = Vec::with_capacity(self.parts.len());
        let mut n = 0;
        for p in &self.parts {
            start.push(n);
            n += p.size;
        }
        let mut edges = Vec::new();
        for (i, p) in self.parts.iter().enumerate() {
            if p.clique {
                for u in 0..p.size {
                    for v in u + 1..p.size {
                        edges.push((start[i] + u, start[i] + v));
                    }
                }
            }
        }
        for &(i, j) in &self.joins {
            for u in 0..self.parts[i].size {
                for v in 0..self.parts[j].size {
                    edges.push((start[i] + u, start[j] + v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("partition describes a simple graph")
    }
}

/// Largest eigenvalue of the quotient matrix of `partition`.
///
/// `B = M·diag(size)` with `M` symmetric, so `diag(√size)·M·diag(√size)` is a
/// symmetric matrix similar to `B`; its spectrum is read off by Jacobi.
pub fn quotient_spectral_radius(partition: &JoinPartition) -> Result<f64> {
    let k = partition.parts.len();
    if k == 0 {
        return Err(Error::param("empty partition"));
    }
    let mut q = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let (si, sj) = (partition.parts[i].size as f64, partition.parts[j].size as f64);
            q[i][j] = if i == j {
                if partition.parts[i].clique { si - 1.0 } else { 0.0 }
            } else if partition.joined(i, j) {
                (si * sj).sqrt()
            } else {
                0.0
            };
        }
    }
    let eig = symmetric_eigenvalues(q)?;
    Ok(eig.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

/// `(δ−1)/2 + √(2e − nδ + (δ+1)²/4)`.
pub fn hong_bound(graph: &Graph) -> Result<f64> {
    let delta = graph.min_degree();
    if graph.n() == 0 || delta == 0 {
        return Err(Error::IsolatedVertex);
    }
    let d = delta as f64;
    let radicand = 2.0 * graph.edge_count() as f64 - graph.n() as f64 * d + (d + 1.0).powi(2) / 4.0;
    Ok((d - 1.0) / 2.0 + radicand.sqrt())
}

/// `f(x) = (x−1)/2 + √(2q − px + (1+x)²/4)`, non-increasing on its domain
/// whenever `2q ≤ p(p−1)`.
pub fn hong_f(x: f64, p: u64, q: u64) -> Result<f64> {
    if 2 * q > p * p.saturating_sub(1) {
        return Err(Error::param(format!("hong_f needs 2q <= p(p-1), got p={p}, q={q}")));
    }
    if !(0.0..=(p as f64 - 1.0)).contains(&x) {
        return Err(Error::param(format!("hong_f needs 0 <= x <= p-1, got x={x}")));
    }
    let radicand = 2.0 * q as f64 - p as f64 * x + (1.0 + x).powi(2) / 4.0;
    if radicand < 0.0 {
        return Err(Error::param(format!("hong_f radicand {radicand} is negative")));
    }
    Ok((x - 1.0) / 2.0 + radicand.sqrt())
}
