//! Lifting: after contracting a vertex set X of an r-graph, a fixed number
//! of lift operations at the contraction vertex recovers an r-graph —
//! |boundary|/2 lifts (then delete the vertex) for even X, and
//! (|boundary| - r)/2 lifts for odd X.

use rgraphs::fixtures;
use rgraphs::rgraph::{apply_lifting, plan_lifting, verify_r_graph};

fn main() {
    let cases: Vec<(&str, rgraphs::Multigraph, Vec<usize>, usize)> = vec![
        ("K4 / adjacent pair", fixtures::k4(), vec![0, 1], 3),
        ("prism / triangle", fixtures::prism(), vec![3, 4, 5], 3),
        ("Petersen / outer cycle", fixtures::petersen(), vec![0, 1, 2, 3, 4], 3),
    ];
    for (name, g, x, r) in cases {
        let plan = plan_lifting(&g, &x, r, 0).unwrap();
        let contracted = g.contract(&x).unwrap();
        let lifted = apply_lifting(&contracted.graph, &plan).unwrap();
        println!(
            "{name}: |X| = {} ({}), {} lifting steps{} -> {} vertices, {} edges, {}-graph: {}",
            x.len(),
            if x.len() % 2 == 0 { "even" } else { "odd" },
            plan.steps.len(),
            if plan.delete_vertex_after { " + delete w_X" } else { "" },
            lifted.n(),
            lifted.m(),
            r,
            verify_r_graph(&lifted, r).unwrap().is_r_graph,
        );
        for step in &plan.steps {
            println!("    lift edges to {} and {} into a {}-{} edge", step.y, step.z, step.y, step.z);
        }
    }
}
