//! Spectral radius by power iteration, its Jacobi cross-check, the Hong-type
//! upper bound and the quotient-matrix value for H_{n,a}.
//!
//! ```text
//! cargo run --release --example spectral_bounds -- 12 3
//! ```

use fraccover::spectral::{hong_bound, quotient_spectral_radius, spectral_radius, spectral_radius_jacobi, JoinPartition, DEFAULT_TOL};
use fraccover::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);
    let a: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);

    let graphs = [
        (format!("K_{n}"), Graph::complete(n)?),
        (format!("C_{n}"), Graph::cycle(n)?),
        (format!("P_{n}"), Graph::path(n)?),
        (format!("K_{{1,{}}}", n - 1), Graph::star(n - 1)?),
        (format!("H_{{{n},{a}}}"), Graph::h_na(n, a)?),
    ];
    println!("{:<10} {:>14} {:>14} {:>6} {:>14}", "graph", "power", "jacobi", "iters", "hong bound");
    for (name, g) in &graphs {
        let r = spectral_radius(g, DEFAULT_TOL)?;
        let jacobi = spectral_radius_jacobi(g)?;
        let hong = hong_bound(g)?;
        println!("{name:<10} {:>14.10} {:>14.10} {:>6} {:>14.10}", r.rho, jacobi, r.iterations, hong);
    }

    let partition = JoinPartition::h_na(n, a)?;
    println!("\nquotient matrix of H_{{{n},{a}}}:");
    for row in partition.quotient_matrix() {
        println!("  {row:?}");
    }
    let q = quotient_spectral_radius(&partition)?;
    println!("largest eigenvalue {q:.10}, compared with rho(K_{}) = {}", n - 1, n - 2);
    Ok(())
}
