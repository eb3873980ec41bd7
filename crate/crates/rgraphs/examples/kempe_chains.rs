//! Kempe chains: components of the symmetric difference of two matchings are
//! alternating paths and cycles; switching one exchanges the matchings along
//! it while preserving the covered vertices.

use rgraphs::fixtures;
use rgraphs::matching::{enumerate_perfect_matchings, kempe_chains, kempe_switch};

fn main() {
    let g = fixtures::petersen();
    let pms = enumerate_perfect_matchings(&g, None);
    let (m1, m2) = (&pms[0], &pms[1]);
    println!("matching A: {:?}", m1.edge_ids);
    println!("matching B: {:?}", m2.edge_ids);
    let chains = kempe_chains(&g, m1, m2);
    println!("{} Kempe chains in the symmetric difference:", chains.len());
    for chain in &chains {
        let shape = if chain.endpoints.is_empty() { "cycle" } else { "path" };
        println!("  {shape} of {} edges: {:?}", chain.edges.len(), chain.edges);
    }
    let (a, b) = kempe_switch(&g, m1, m2, &chains[0]).unwrap();
    println!("after switching the first chain:");
    println!("  A' = {:?} (perfect: {})", a.edge_ids, a.perfect);
    println!("  B' = {:?} (perfect: {})", b.edge_ids, b.perfect);
    let (a2, b2) = kempe_switch(&g, &a, &b, &chains[0]).unwrap();
    println!("switching again restores the originals: {}", a2 == *m1 && b2 == *m2);
}
