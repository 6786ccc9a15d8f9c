//! Decides fractional (g,f)-factor existence by circulation and by the subset
//! criterion, printing a half-integral weighting or a violating set.
//!
//! ```text
//! cargo run --example factor_solver
//! ```

use fraccover::factor::{gf_factor_criterion, gf_factor_flow, Bounds, CriterionOutcome, FlowOutcome};
use fraccover::Graph;

fn report(name: &str, g: &Graph, bounds: &Bounds) -> Result<(), Box<dyn std::error::Error>> {
    println!("{name}: g = {:?}, f = {:?}", bounds.lower(), bounds.upper());
    match gf_factor_flow(g, bounds)? {
        FlowOutcome::Feasible(w) => {
            assert!(w.verify(g, bounds));
            for (i, (u, v)) in g.edges().iter().enumerate() {
                println!("  h({u}{v}) = {}", w.value(i));
            }
        }
        FlowOutcome::Infeasible(cut) => println!("  no factor; flow cut {:?} | {:?}", cut.left.as_slice(), cut.right.as_slice()),
    }
    if let CriterionOutcome::Infeasible { s, t, value } = gf_factor_criterion(g, bounds)? {
        println!("  criterion fails at S = {:?} (T = {:?}) with value {value}", s.as_slice(), t.as_slice());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = Graph::cycle(5)?;
    report("C_5 with g = f = 1", &c5, &Bounds::constant(5, 1, 1)?)?;

    let star = Graph::star(3)?;
    report("K_{1,3} with g = f = 1", &star, &Bounds::constant(4, 1, 1)?)?;

    let p4 = Graph::path(4)?;
    report("P_4 with mixed bounds", &p4, &Bounds::new(vec![1, 0, 2, 1], vec![1, 2, 2, 1])?)?;
    Ok(())
}
