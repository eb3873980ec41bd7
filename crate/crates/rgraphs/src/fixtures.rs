//! Named fixture graphs used across tests, examples and the shipped `.g`
//! files. Constructors are the source of truth; `fixtures/*.g` mirror them
//! byte-for-byte (checked by a test).

use crate::graph::Multigraph;

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
pub fn petersen() -> Multigraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5)); // outer cycle
        e.push((i, i + 5)); // spokes
        e.push((5 + i, 5 + (i + 2) % 5)); // pentagram
    }
    Multigraph::new(10, e).unwrap()
}

/// Wagner graph V8: 8-cycle plus the four diameters.
pub fn wagner_v8() -> Multigraph {
    let mut e = Vec::new();
    for i in 0..8 {
        e.push((i, (i + 1) % 8));
    }
    for i in 0..4 {
        e.push((i, i + 4));
    }
    Multigraph::new(8, e).unwrap()
}

/// Complete bipartite K3,3 with sides {0,1,2} and {3,4,5}.
pub fn k33() -> Multigraph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    Multigraph::new(6, e).unwrap()
}

pub fn k4() -> Multigraph {
    complete(4)
}

pub fn k5() -> Multigraph {
    complete(5)
}

pub fn complete(n: usize) -> Multigraph {
    let mut e = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            e.push((a, b));
        }
    }
    Multigraph::new(n, e).unwrap()
}

/// Triangular prism: triangles {0,1,2} and {3,4,5} joined by a matching.
pub fn prism() -> Multigraph {
    Multigraph::new(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

pub fn c4() -> Multigraph {
    Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

/// C4 with every edge doubled: a 4-regular 4-graph.
pub fn c4_doubled() -> Multigraph {
    doubled(&c4())
}

/// C4 with multiplicities (2,1,2,1) around the cycle: a cubic 3-graph.
pub fn c4_2121() -> Multigraph {
    Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap()
}

/// C6 with every edge doubled: 4-regular with all-even two-cut splits.
pub fn c6_doubled() -> Multigraph {
    let mut e = Vec::new();
    for i in 0..6 {
        e.push((i, (i + 1) % 6));
        e.push((i, (i + 1) % 6));
    }
    Multigraph::new(6, e).unwrap()
}

/// Two vertices joined by three parallel edges (smallest cubic 3-graph).
pub fn theta3() -> Multigraph {
    Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap()
}

/// 3-cube: planar, cubic, bipartite.
pub fn cube_q3() -> Multigraph {
    let mut e = Vec::new();
    for v in 0..8usize {
        for bit in [1usize, 2, 4] {
            let u = v ^ bit;
            if v < u {
                e.push((v, u));
            }
        }
    }
    Multigraph::new(8, e).unwrap()
}

/// Replaces degree-3 vertex `v` by a triangle, one incident edge per corner.
/// Preserves 3-regularity.
pub fn blow_up_vertex(g: &Multigraph, v: usize) -> Multigraph {
    assert_eq!(g.degree(v), 3, "blow-up requires a degree-3 vertex");
    let n = g.n();
    let corners = [v, n, n + 1];
    let mut e: Vec<(usize, usize)> = Vec::new();
    let mut slot = 0;
    for (_, a, b) in g.edges() {
        if a != v && b != v {
            e.push((a, b));
        } else {
            let other = if a == v { b } else { a };
            e.push((corners[slot], other));
            slot += 1;
        }
    }
    e.push((corners[0], corners[1]));
    e.push((corners[1], corners[2]));
    e.push((corners[0], corners[2]));
    Multigraph::new(n + 2, e).unwrap()
}

/// K3,3 with one vertex of one side blown up into a triangle: cubic, 8
/// vertices, with a tight cut around the odd 3-vertex component.
pub fn k33_blown() -> Multigraph {
    blow_up_vertex(&k33(), 5)
}

/// Every edge duplicated: degree doubles, multiplicities double.
pub fn doubled(g: &Multigraph) -> Multigraph {
    let mut e: Vec<(usize, usize)> = Vec::new();
    for (_, u, v) in g.edges() {
        e.push((u, v));
        e.push((u, v));
    }
    Multigraph::new(g.n(), e).unwrap()
}

/// Cubic simple graph with a bridge: two 5-vertex blobs joined by one edge.
/// The bridge splits the vertex set 5|5, so one side is an odd set with
/// boundary 1 — not a 3-graph.
pub fn bridged_cubic() -> Multigraph {
    let blob = |o: usize| {
        vec![
            (o, o + 2),
            (o, o + 3),
            (o + 1, o + 2),
            (o + 1, o + 3),
            (o + 2, o + 3),
            (o + 4, o),
            (o + 4, o + 1),
        ]
    };
    let mut e = blob(0);
    e.extend(blob(5));
    e.push((4, 9));
    Multigraph::new(10, e).unwrap()
}

/// 4-regular non-planar K5-minor-free composite: an expanded K3,3 whose
/// independent side {0,1,2} separates a singleton from two doubled-edge
/// pairs. Contains a non-trivial tight cut, so reductions split it first.
pub fn expanded_k33_r4() -> Multigraph {
    Multigraph::new(
        8,
        [
            (0, 3),
            (0, 3),
            (1, 3),
            (2, 3), // singleton z = 3
            (0, 4),
            (1, 4),
            (1, 5),
            (2, 5),
            (4, 5),
            (4, 5), // pair A = {4,5}
            (0, 6),
            (1, 6),
            (2, 7),
            (2, 7),
            (6, 7),
            (6, 7), // pair B = {6,7}
        ],
    )
    .unwrap()
}

/// 6-regular "three-page book": three planar pieces glued on the independent
/// set {0,1,2}. Non-planar, K5-minor-free, 3-connected, and free of
/// non-trivial tight cuts, so reductions must take the three-cut split.
pub fn three_book_r6() -> Multigraph {
    let mut e = vec![(0, 3), (0, 3), (1, 3), (1, 3), (2, 3), (2, 3)];
    for &(p, q) in &[(4usize, 5usize), (6, 7)] {
        e.push((0, p));
        e.push((0, p));
        e.push((1, p));
        e.push((1, q));
        e.push((2, q));
        e.push((2, q));
        e.push((p, q));
        e.push((p, q));
        e.push((p, q));
    }
    Multigraph::new(8, e).unwrap()
}

/// V8 with edge {0,1} replaced by a doubled-edge gadget on {8,9}: cubic,
/// K5-minor-free, non-planar; reduction splits at a tight cut and one side
/// contracts back to a V8-underlying graph.
pub fn v8_two_sum() -> Multigraph {
    let mut e: Vec<(usize, usize)> = wagner_v8()
        .edges()
        .filter(|&(_, u, v)| (u, v) != (0, 1))
        .map(|(_, u, v)| (u, v))
        .collect();
    e.extend([(0, 8), (1, 9), (8, 9), (8, 9)]);
    Multigraph::new(10, e).unwrap()
}

/// V8 with the chord {0,4} replaced by a doubled-edge gadget: cubic,
/// K5-minor-free, non-planar.
pub fn v8_chord_sum() -> Multigraph {
    let mut e: Vec<(usize, usize)> = wagner_v8()
        .edges()
        .filter(|&(_, u, v)| (u, v) != (0, 4))
        .map(|(_, u, v)| (u, v))
        .collect();
    e.extend([(0, 8), (4, 9), (8, 9), (8, 9)]);
    Multigraph::new(10, e).unwrap()
}

/// V8 with two disjoint rim edges replaced by doubled-edge gadgets: cubic,
/// K5-minor-free, non-planar, with two disjoint tight cuts.
pub fn v8_double_sum() -> Multigraph {
    let mut e: Vec<(usize, usize)> = wagner_v8()
        .edges()
        .filter(|&(_, u, v)| (u, v) != (0, 1) && (u, v) != (4, 5))
        .map(|(_, u, v)| (u, v))
        .collect();
    e.extend([(0, 8), (1, 9), (8, 9), (8, 9), (4, 10), (5, 11), (10, 11), (10, 11)]);
    Multigraph::new(12, e).unwrap()
}

/// V8 with the four diameters doubled: 4-regular, crossing number one.
pub fn v8_chords_doubled() -> Multigraph {
    let mut e = Vec::new();
    for i in 0..8 {
        e.push((i, (i + 1) % 8));
    }
    for i in 0..4 {
        e.push((i, i + 4));
        e.push((i, i + 4));
    }
    Multigraph::new(8, e).unwrap()
}

/// K3,3 with a doubled perfect matching: 4-regular, crossing number one.
pub fn k33_matching_doubled() -> Multigraph {
    let mut e: Vec<(usize, usize)> = k33().edges().map(|(_, u, v)| (u, v)).collect();
    e.extend([(0, 3), (1, 4), (2, 5)]);
    Multigraph::new(6, e).unwrap()
}

/// Prism with a doubled spoke matching: 4-regular and planar.
pub fn prism_pm_doubled() -> Multigraph {
    let mut e: Vec<(usize, usize)> = prism().edges().map(|(_, u, v)| (u, v)).collect();
    e.extend([(0, 3), (1, 4), (2, 5)]);
    Multigraph::new(6, e).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_degrees() {
        assert_eq!(petersen().regular_degree(), Some(3));
        assert_eq!(wagner_v8().regular_degree(), Some(3));
        assert_eq!(k33().regular_degree(), Some(3));
        assert_eq!(prism().regular_degree(), Some(3));
        assert_eq!(c4_2121().regular_degree(), Some(3));
        assert_eq!(c4_doubled().regular_degree(), Some(4));
        assert_eq!(c6_doubled().regular_degree(), Some(4));
        assert_eq!(k33_blown().regular_degree(), Some(3));
        assert_eq!(bridged_cubic().regular_degree(), Some(3));
        assert_eq!(expanded_k33_r4().regular_degree(), Some(4));
        assert_eq!(three_book_r6().regular_degree(), Some(6));
        assert_eq!(v8_two_sum().regular_degree(), Some(3));
        assert_eq!(v8_chord_sum().regular_degree(), Some(3));
        assert_eq!(v8_double_sum().regular_degree(), Some(3));
        assert_eq!(v8_chords_doubled().regular_degree(), Some(4));
        assert_eq!(k33_matching_doubled().regular_degree(), Some(4));
        assert_eq!(prism_pm_doubled().regular_degree(), Some(4));
        assert_eq!(cube_q3().regular_degree(), Some(3));
    }

    #[test]
    fn blow_up_preserves_cubic() {
        let g = blow_up_vertex(&k4(), 2);
        assert_eq!(g.n(), 6);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_isomorphic_to(&prism()));
    }

    #[test]
    fn bridged_cubic_has_a_bridge() {
        let g = bridged_cubic();
        let cut = g.boundary(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(cut.boundary.len(), 1);
        assert_eq!(cut.side_parity, 1);
    }
}
