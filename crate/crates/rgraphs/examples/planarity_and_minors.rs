//! Planarity, K5/K3,3 minor containment, and the crossing-number-at-most-one
//! decision — three independent recognizers that agree where the theory says
//! they must.

use rgraphs::fixtures;
use rgraphs::minor::{
    crossing_at_most_one, find_minor_model, has_k33_minor, has_k5_minor, is_planar,
    CrossingVerdict, ForbiddenMinor,
};

fn main() {
    println!("{:<18} {:>7} {:>9} {:>10} {:>13}", "graph", "planar", "K5 minor", "K3,3 minor", "crossing");
    for (name, g) in [
        ("K4", fixtures::k4()),
        ("prism", fixtures::prism()),
        ("cube", fixtures::cube_q3()),
        ("K5", fixtures::k5()),
        ("K3,3", fixtures::k33()),
        ("Wagner V8", fixtures::wagner_v8()),
        ("Petersen", fixtures::petersen()),
    ] {
        let cr = match crossing_at_most_one(&g).verdict {
            CrossingVerdict::Planar => "0",
            CrossingVerdict::OneCrossing => "1",
            CrossingVerdict::More => ">= 2",
        };
        println!(
            "{:<18} {:>7} {:>9} {:>10} {:>13}",
            name,
            is_planar(&g),
            has_k5_minor(&g),
            has_k33_minor(&g),
            cr
        );
    }

    // An explicit minor model: branch sets realizing K3,3 inside Petersen.
    let model = find_minor_model(&fixtures::petersen(), ForbiddenMinor::K33).unwrap();
    println!("\nK3,3 branch sets in the Petersen graph:");
    for (i, set) in model.iter().enumerate() {
        println!("  {} {:?}", if i < 3 { "left " } else { "right" }, set);
    }
}
