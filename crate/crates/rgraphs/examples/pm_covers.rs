//! (t,r)-perfect-matching covers: multisets of t*r perfect matchings using
//! every edge exactly t times. The Petersen graph has none for t = 1 (it is
//! class 2) but its six perfect matchings form a (2,3)-PM.

use rgraphs::fixtures;
use rgraphs::matching::{enumerate_perfect_matchings, find_tr_pm, validate_tr_pm};

fn main() {
    let g = fixtures::petersen();
    let pms = enumerate_perfect_matchings(&g, None);
    println!("Petersen graph: {} perfect matchings", pms.len());
    for m in &pms {
        println!("  {:?}", m.edge_ids);
    }

    println!("\n(1,3)-PM: {:?}", find_tr_pm(&g, 1, 3, None).unwrap().map(|_| "found"));
    let cover = find_tr_pm(&g, 2, 3, None).unwrap().expect("the six matchings cover twice");
    println!(
        "(2,3)-PM: {} matchings, validator: {}",
        cover.matchings.len(),
        validate_tr_pm(&g, &cover)
    );

    for (name, g, t, r) in [
        ("K4", fixtures::k4(), 1, 3),
        ("prism", fixtures::prism(), 2, 3),
        ("doubled C4", fixtures::c4_doubled(), 1, 4),
    ] {
        let cover = find_tr_pm(&g, t, r, None).unwrap().unwrap();
        println!(
            "{name}: ({t},{r})-PM with {} matchings, valid: {}",
            cover.matchings.len(),
            validate_tr_pm(&g, &cover)
        );
    }
}
