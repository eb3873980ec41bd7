//! Exact chromatic-index decisions: class 1 means a proper r-edge-coloring
//! exists, and its color classes are perfect matchings.

use rgraphs::fixtures;
use rgraphs::matching::edge_color;

fn main() {
    for (name, g, r) in [
        ("K4", fixtures::k4(), 3),
        ("prism", fixtures::prism(), 3),
        ("K3,3", fixtures::k33(), 3),
        ("Wagner V8", fixtures::wagner_v8(), 3),
        ("Petersen", fixtures::petersen(), 3),
        ("doubled C4", fixtures::c4_doubled(), 4),
    ] {
        match edge_color(&g, r) {
            Some(coloring) => {
                let classes = coloring.classes(&g);
                println!(
                    "{name}: class 1 ({} color classes, all perfect: {})",
                    classes.len(),
                    classes.iter().all(|m| m.perfect)
                );
            }
            None => println!("{name}: class 2 (no proper {r}-edge-coloring)"),
        }
    }
}
