//! Odd-cut verification: decide whether a regular multigraph is an r-graph,
//! i.e. every odd vertex set has at least r boundary edges.

use rgraphs::fixtures;
use rgraphs::rgraph::verify_r_graph;

fn main() {
    for (name, g, r) in [
        ("Petersen", fixtures::petersen(), 3),
        ("prism", fixtures::prism(), 3),
        ("doubled C4", fixtures::c4_doubled(), 4),
        ("bridged cubic", fixtures::bridged_cubic(), 3),
        ("K5", fixtures::k5(), 4),
    ] {
        let verdict = verify_r_graph(&g, r).unwrap();
        if verdict.is_r_graph {
            println!("{name}: {r}-graph");
        } else {
            let w = verdict.witness.unwrap();
            println!(
                "{name}: NOT a {r}-graph — odd set {:?} has only {} boundary edges",
                w.side,
                w.boundary.len()
            );
        }
    }
}
