//! Clique-sum decomposition: K5-minor-free graphs split along separators of
//! size at most 3 into planar pieces and Wagner-graph leaves; K3,3-minor-free
//! graphs split along at most 2 vertices into planar pieces and K5 leaves.

use rgraphs::fixtures;
use rgraphs::minor::{verify_recomposition, wagner_decompose, CsNode, ForbiddenMinor};

fn show(node: &CsNode, indent: usize) {
    let pad = "  ".repeat(indent);
    match node {
        CsNode::Leaf { kind, graph } => {
            println!("{pad}leaf {kind:?}: {} vertices, {} edges", graph.n(), graph.m());
        }
        CsNode::Sum { pasted, left, right, .. } => {
            println!("{pad}sum along S' = {pasted:?}");
            show(left, indent + 1);
            show(right, indent + 1);
        }
    }
}

fn main() {
    for (name, g, mode) in [
        ("Wagner V8", fixtures::wagner_v8(), ForbiddenMinor::K5),
        ("three-book (r=6 composite)", fixtures::three_book_r6(), ForbiddenMinor::K5),
        ("K5", fixtures::k5(), ForbiddenMinor::K33),
        ("expanded K3,3 (r=4 composite)", fixtures::expanded_k33_r4(), ForbiddenMinor::K5),
    ] {
        println!("{name} ({mode:?}-free mode):");
        let tree = wagner_decompose(&g, mode).unwrap();
        show(&tree.root, 1);
        verify_recomposition(&tree.root).unwrap();
        println!("  recomposition check: ok\n");
    }
}
