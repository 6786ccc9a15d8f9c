//! Checks fractional (a,b,m)-coveredness with both deciders and the 2m
//! sufficient condition, and replays a non-coveredness witness.
//!
//! ```text
//! cargo run --release --example covered_check -- 2 2 1
//! ```

use fraccover::covered::{is_covered_criterion, is_covered_direct, sufficient_2m};
use fraccover::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let nums: Vec<usize> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (a, b, m) = match nums[..] {
        [a, b, m] => (a, b, m),
        [] => (2, 2, 1),
        _ => return Err("expected three arguments: a b m".into()),
    };
    let petersen = Graph::from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (6, 9), (6, 8), (5, 8)],
    )?;
    let graphs = [
        ("K_7", Graph::complete(7)?),
        ("C_8", Graph::cycle(8)?),
        ("P_6", Graph::path(6)?),
        ("Petersen", petersen),
        ("H_{9,3}", Graph::h_na(9, 3)?),
    ];
    println!("(a,b,m) = ({a},{b},{m})");
    for (name, g) in &graphs {
        let direct = is_covered_direct(g, a, b, m)?;
        let criterion = is_covered_criterion(g, a, b, m)?;
        assert_eq!(direct.covered, criterion.covered);
        let sufficient = if sufficient_2m(g, a, b, m)?.holds() { "holds" } else { "inconclusive" };
        println!("{name:<9} covered = {:<5} 2m condition {sufficient}", direct.covered);
        if let Some(w) = &direct.witness {
            println!(
                "          witness S = {:?}, H = {:?}: lhs {} < delta {}, replay ok = {}",
                w.s_set.as_slice(),
                w.h_edges,
                w.lhs,
                w.delta,
                w.replay(g, a, b)?
            );
        }
    }
    Ok(())
}
