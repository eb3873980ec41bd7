//! Tight edge-cuts and the small-vertex-cut structure results: every
//! 2-connected r-graph with a 2-cut has a non-trivial tight cut or a
//! 4-circuit underneath; a 3-cut with three odd components forces a tight
//! cut or K3,3.

use rgraphs::fixtures;
use rgraphs::rgraph::{classify_three_cut, classify_two_cut, find_nontrivial_tight_cut};

fn main() {
    for (name, g, r) in [
        ("prism", fixtures::prism(), 3),
        ("Petersen", fixtures::petersen(), 3),
        ("K4", fixtures::k4(), 3),
        ("blown K3,3", fixtures::k33_blown(), 3),
    ] {
        match find_nontrivial_tight_cut(&g, r).unwrap() {
            Some(cut) => println!(
                "{name}: tight cut X = {:?}, boundary = {:?}",
                cut.side, cut.boundary
            ),
            None => println!("{name}: no non-trivial tight cut"),
        }
    }

    // 2-cut classification on the (2,1,2,1)-weighted 4-circuit.
    let g = fixtures::c4_2121();
    let cuts = g.find_vertex_cuts(2).unwrap();
    let out = classify_two_cut(&g, 3, &cuts[0]).unwrap();
    println!("C4(2,1,2,1) with 2-cut {:?}: {:?}", cuts[0].separator, out.case);

    // All-even 2-cut case on the doubled 6-circuit.
    let g = fixtures::c6_doubled();
    let cuts = g.find_vertex_cuts(2).unwrap();
    let s = cuts.iter().find(|c| c.separator == vec![0, 3]).unwrap();
    let out = classify_two_cut(&g, 4, s).unwrap();
    println!(
        "doubled C6 with 2-cut {{0,3}}: {:?}, tight cut {:?}",
        out.case,
        out.tight_cut.map(|c| c.side)
    );

    // 3-cut classification: K3,3 and a blown-up variant.
    let g = fixtures::k33();
    let cuts = g.find_vertex_cuts(3).unwrap();
    let s = cuts.iter().find(|c| c.separator == vec![0, 1, 2]).unwrap();
    let out = classify_three_cut(&g, 3, s).unwrap();
    println!("K3,3 with one side removed: {:?}", out.case);

    let g = fixtures::k33_blown();
    let cuts = g.find_vertex_cuts(3).unwrap();
    let s = cuts
        .iter()
        .find(|c| c.component_parities.iter().filter(|&&p| p == 1).count() >= 3)
        .unwrap();
    let out = classify_three_cut(&g, 3, s).unwrap();
    println!(
        "blown K3,3 with 3-cut {:?}: {:?}, tight cut {:?}",
        s.separator,
        out.case,
        out.tight_cut.map(|c| c.side)
    );
}
