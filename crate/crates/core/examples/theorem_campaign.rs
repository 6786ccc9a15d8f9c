//! Runs a seeded spectral-radius campaign at n = 21 for (a,b,m) = (2,2,1)
//! and a size campaign at n = 24, printing one summary line per graph.
//!
//! ```text
//! cargo run --release --example theorem_campaign -- 20
//! ```

use fraccover::harness::{verify_campaign, CampaignOptions, GeneratorSpec, GraphSource, Theorem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10);
    let options = CampaignOptions::default();
    for (theorem, n, remove) in [(Theorem::Spectral, 21, (0, 30)), (Theorem::Size, 24, (30, 55))] {
        let source = GraphSource::Random(GeneratorSpec { count, n, remove, seed: 1 });
        let campaign = verify_campaign(&source, theorem, 2, 2, 1, &options)?;
        println!("{theorem:?} condition, n = {n}, exit status {}", campaign.status.code());
        for r in campaign.records() {
            let rho = r.rho.map_or(String::from("-"), |x| format!("{x:.4}"));
            println!(
                "  e={:<3} delta={:<2} rho={rho:<8} threshold={:<4} met={:<5} covered={:<5} {:.1}ms",
                r.e,
                r.delta,
                r.threshold,
                r.hypotheses_met,
                r.covered.map_or("-".into(), |c| c.to_string()),
                r.elapsed_ms
            );
        }
    }
    Ok(())
}
