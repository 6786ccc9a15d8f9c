//! Builds the named graph families, shows their graph6 encodings and reads
//! one back.
//!
//! ```text
//! cargo run --example graph_families
//! ```

use fraccover::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let families = [
        ("K_6", Graph::complete(6)?),
        ("C_7", Graph::cycle(7)?),
        ("P_5", Graph::path(5)?),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)?),
        ("K_{1,4}", Graph::star(4)?),
        ("H_{8,3}", Graph::h_na(8, 3)?),
        ("K_2 v (K_1 + K_4)", Graph::complete(2)?.join(&Graph::complete(1)?.disjoint_union(&Graph::complete(4)?))),
    ];
    println!("{:<20} {:>3} {:>3} {:>3} {:>3}  graph6", "graph", "n", "e", "min", "max");
    for (name, g) in &families {
        println!("{name:<20} {:>3} {:>3} {:>3} {:>3}  {}", g.n(), g.edge_count(), g.min_degree(), g.max_degree(), g.to_graph6());
    }

    let decoded = Graph::from_graph6("DQc")?;
    println!("\nDQc decodes to {} vertices with edges {:?}", decoded.n(), decoded.edges());
    assert_eq!(Graph::from_graph6(&decoded.to_graph6())?, decoded);

    match Graph::from_graph6("D\x7f") {
        Ok(_) => unreachable!(),
        Err(e) => println!("malformed input is rejected: {e}"),
    }
    Ok(())
}
