//! Long-running soak: every cubic r-graph up to order 10 goes through every
//! applicable reduction, with validation and trace replay. Ignored by
//! default (about a minute); run with
//! `cargo test -p rgraphs --test soak --release -- --ignored`.

use rgraphs::census::enumerate_connected_regular;
use rgraphs::matching::validate_tr_pm;
use rgraphs::minor::{crossing_at_most_one, has_k33_minor, has_k5_minor, CrossingVerdict};
use rgraphs::reduce::{
    reduce_crossing_one, reduce_k33_free, reduce_k5_free, replay_trace, PlanarOracle,
};
use rgraphs::rgraph::verify_r_graph;

#[test]
#[ignore = "order-10 pool takes around a minute; run with --ignored"]
fn order_10_reduction_soak() {
    let oracle = PlanarOracle::exact();
    let pool: Vec<_> = enumerate_connected_regular(3, 10, 2)
        .into_iter()
        .filter(|g| verify_r_graph(g, 3).unwrap().is_r_graph)
        .collect();
    assert!(pool.len() >= 80);
    let (mut k5runs, mut k33runs, mut cr1runs) = (0, 0, 0);
    for (i, g) in pool.iter().enumerate() {
        if !has_k5_minor(g) {
            let (cover, trace) = reduce_k5_free(g, 1, 3, &oracle)
                .unwrap_or_else(|e| panic!("k5free failed on #{i} {g:?}: {e}"));
            assert!(validate_tr_pm(g, &cover), "invalid cover #{i}");
            replay_trace(&trace).unwrap();
            k5runs += 1;
        }
        if !has_k33_minor(g) {
            let (cover, trace) = reduce_k33_free(g, 1, 3, &oracle)
                .unwrap_or_else(|e| panic!("k33free failed on #{i} {g:?}: {e}"));
            assert!(validate_tr_pm(g, &cover), "invalid cover #{i}");
            replay_trace(&trace).unwrap();
            k33runs += 1;
        }
        if crossing_at_most_one(g).verdict != CrossingVerdict::More {
            let (cover, trace) = reduce_crossing_one(g, 2, 3, &oracle)
                .unwrap_or_else(|e| panic!("cr1 failed on #{i} {g:?}: {e}"));
            assert!(validate_tr_pm(g, &cover), "invalid cover #{i}");
            replay_trace(&trace).unwrap();
            cr1runs += 1;
        }
    }
    println!("soak: {k5runs} k5free, {k33runs} k33free, {cr1runs} cr1 reductions validated");
    assert!(k5runs > 50 && k33runs > 50 && cr1runs > 50);
}
