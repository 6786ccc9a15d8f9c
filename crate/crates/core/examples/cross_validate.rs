//! Exhaustive agreement check of the two coveredness deciders on every
//! connected labeled graph with up to `max_n` vertices.
//!
//! ```text
//! cargo run --release --example cross_validate -- 5
//! ```

use std::time::Instant;

use fraccover::harness::cross_validate;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let params = [(1, 1, 0), (1, 1, 1), (1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 2, 0), (2, 2, 1), (2, 2, 2), (2, 3, 0), (2, 3, 1), (2, 3, 2)];
    let start = Instant::now();
    let summary = cross_validate(max_n, &params)?;
    println!("{} connected labeled graphs on at most {max_n} vertices", summary.graphs);
    println!("{:>7} {:>8} {:>8} {:>10} {:>9}", "(a,b,m)", "covered", "vacuous", "2m holds", "replayed");
    for p in &summary.params {
        println!(
            "{:>7} {:>8} {:>8} {:>10} {:>9}",
            format!("({},{},{})", p.a, p.b, p.m),
            p.covered,
            p.vacuous,
            p.sufficient_holds,
            p.witnesses_replayed
        );
    }
    println!(
        "monotonicity checks: {} in m, {} in bounds; {:.1?}",
        summary.m_monotone_checks,
        summary.bounds_monotone_checks,
        start.elapsed()
    );
    Ok(())
}
