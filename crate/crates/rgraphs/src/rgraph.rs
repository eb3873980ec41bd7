//! r-graph analysis: odd-cut verification, tight-cut detection, the 2- and
//! 3-vertex-cut structure results, and lifting plans that turn contractions
//! back into r-graphs.
//!
//! Everything here is exhaustive at desk scale. The odd-subset enumeration is
//! O(2^(n-1) * m) and doubles as the oracle the other modules are checked
//! against; inputs are capped at 62 vertices.

use crate::graph::{EdgeCut, EdgeId, GraphError, Multigraph, VertexCut};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
    #[error("invalid lifting plan: {0}")]
    InvalidPlan(String),
    #[error("internal: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const MAX_ENUM_N: usize = 62;

/// Outcome of the odd-cut test for one regularity degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RGraphVerdict {
    pub r: usize,
    pub is_r_graph: bool,
    /// On failure: an odd vertex set with boundary below `r`, or a singleton
    /// cut witnessing a degree mismatch on irregular input.
    pub witness: Option<EdgeCut>,
}

/// Exact decision by enumerating every odd vertex subset.
///
/// Non-regular input yields `is_r_graph = false` with a singleton degree
/// witness rather than an error; odd-order graphs are rejected immediately
/// (the full vertex set is an odd set with empty boundary).
pub fn verify_r_graph(g: &Multigraph, r: usize) -> Result<RGraphVerdict, AnalysisError> {
    if r == 0 {
        return Err(AnalysisError::InvalidArgument("r must be at least 1".into()));
    }
    let n = g.n();
    if n > MAX_ENUM_N {
        return Err(AnalysisError::InvalidArgument(format!(
            "odd-cut enumeration supports n <= {MAX_ENUM_N}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(RGraphVerdict { r, is_r_graph: true, witness: None });
    }
    if n % 2 == 1 {
        // X = V(G) is odd with empty boundary.
        return Ok(RGraphVerdict {
            r,
            is_r_graph: false,
            witness: Some(EdgeCut {
                side: (0..n).collect(),
                boundary: Vec::new(),
                side_parity: 1,
                nontrivial_tight: false,
            }),
        });
    }
    let degrees = g.degrees();
    if let Some(v) = (0..n).find(|&v| degrees[v] != r) {
        let cut = g.boundary(&[v])?;
        return Ok(RGraphVerdict { r, is_r_graph: false, witness: Some(cut) });
    }
    if let Some(mask) = min_violating_odd_mask(g, r) {
        let side: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let cut = g.boundary(&side)?;
        return Ok(RGraphVerdict { r, is_r_graph: false, witness: Some(cut) });
    }
    Ok(RGraphVerdict { r, is_r_graph: true, witness: None })
}

/// Least violating odd subset (by size, then lexicographic vertex order),
/// among subsets containing vertex 0 (complement symmetry).
fn min_violating_odd_mask(g: &Multigraph, r: usize) -> Option<u64> {
    let n = g.n();
    let ends: Vec<(u32, u32)> = g.edges().map(|(_, u, v)| (u as u32, v as u32)).collect();
    let mut best: Option<(usize, Vec<usize>, u64)> = None;
    // All masks containing vertex 0; sizes beyond n/2 are complements of
    // smaller sets already covered.
    for half in 0u64..(1u64 << (n - 1)) {
        let mask = half << 1 | 1;
        let size = mask.count_ones() as usize;
        if size.is_multiple_of(2) {
            continue;
        }
        let mut cut = 0usize;
        for &(u, v) in &ends {
            if (mask >> u & 1) != (mask >> v & 1) {
                cut += 1;
            }
        }
        if cut < r {
            let side: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let better = match &best {
                None => true,
                Some((bs, bv, _)) => size < *bs || (size == *bs && side < *bv),
            };
            if better {
                best = Some((size, side, mask));
            }
        }
    }
    best.map(|(_, _, m)| m)
}

/// Smallest (then lexicographically least) non-trivial tight edge-cut, if
/// one exists. Requires the input to verify as an r-graph.
pub fn find_nontrivial_tight_cut(
    g: &Multigraph,
    r: usize,
) -> Result<Option<EdgeCut>, AnalysisError> {
    find_tight_cut_with(g, r, |_| true)
}

/// Like `find_nontrivial_tight_cut`, restricted to cuts whose boundary
/// contains every id in `required`.
pub fn find_tight_cut_containing(
    g: &Multigraph,
    r: usize,
    required: &[EdgeId],
) -> Result<Option<EdgeCut>, AnalysisError> {
    let req = required.to_vec();
    find_tight_cut_with(g, r, move |cut: &EdgeCut| {
        req.iter().all(|e| cut.boundary.binary_search(e).is_ok())
    })
}

fn find_tight_cut_with(
    g: &Multigraph,
    r: usize,
    accept: impl Fn(&EdgeCut) -> bool,
) -> Result<Option<EdgeCut>, AnalysisError> {
    let verdict = verify_r_graph(g, r)?;
    if !verdict.is_r_graph {
        return Err(AnalysisError::PreconditionViolation(format!(
            "input is not a {r}-graph"
        )));
    }
    let n = g.n();
    let ends: Vec<(u32, u32)> = g.edges().map(|(_, u, v)| (u as u32, v as u32)).collect();
    let mut size = 3;
    while 2 * size <= n {
        let mut found: Option<Vec<usize>> = None;
        for_each_subset_of_size(n, size, &mut |side: &[usize]| {
            if found.is_some() {
                return;
            }
            // Among complementary pairs of equal size, only sides containing
            // vertex 0 are visited lexicographically first; both orientations
            // denote the same cut, and the 0-side is the lex-least label.
            if 2 * size == n && side[0] != 0 {
                return;
            }
            let mut mask = 0u64;
            for &v in side {
                mask |= 1 << v;
            }
            let mut cut = 0usize;
            for &(u, v) in &ends {
                if (mask >> u & 1) != (mask >> v & 1) {
                    cut += 1;
                    if cut > r {
                        return;
                    }
                }
            }
            if cut == r {
                let ec = g.boundary_of_mask(&mask_to_bools(mask, n));
                if accept(&ec) {
                    found = Some(side.to_vec());
                }
            }
        });
        if let Some(side) = found {
            let mut mask = 0u64;
            for &v in &side {
                mask |= 1 << v;
            }
            return Ok(Some(g.boundary_of_mask(&mask_to_bools(mask, n))));
        }
        size += 2;
    }
    Ok(None)
}

fn mask_to_bools(mask: u64, n: usize) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Visits size-k subsets of 0..n in lexicographic order.
fn for_each_subset_of_size(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut sel: Vec<usize> = (0..k).collect();
    loop {
        f(&sel);
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if sel[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        sel[i] += 1;
        for j in (i + 1)..k {
            sel[j] = sel[j - 1] + 1;
        }
    }
}

/// Shared case tags for the 2- and 3-vertex-cut classifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutCase {
    /// An odd component of size >= 2 (resp. >= 3) yields a tight cut.
    TightCutFound,
    /// Two odd singleton components: the underlying graph is a 4-circuit.
    UnderlyingC4,
    /// Three odd singleton components: the underlying graph is K3,3.
    UnderlyingK33,
    /// All components even; the proof's a_i = b_i balance yields a tight cut.
    EvenComponentsOnly,
    /// The supplied set does not qualify (not a separator, or too few odd
    /// components for the 3-cut statement).
    NotApplicable,
}

#[derive(Debug, Clone)]
pub struct TwoCutClassification {
    pub case: CutCase,
    pub tight_cut: Option<EdgeCut>,
    /// Per component i: (a_i, b_i) = edges to the first and second separator
    /// vertex.
    pub side_counts: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct ThreeCutClassification {
    pub case: CutCase,
    pub tight_cut: Option<EdgeCut>,
    /// Per component i: (a_i, b_i, c_i) = edges to the separator vertices in
    /// sorted order.
    pub side_counts: Vec<(usize, usize, usize)>,
    pub components: Vec<Vec<usize>>,
    /// Derived fact exposed for testing: no two separator vertices adjacent.
    pub separator_independent: bool,
}

fn count_edges_between(g: &Multigraph, comp: &[usize], v: usize) -> usize {
    comp.iter().map(|&u| g.mu(u, v)).sum()
}

/// Case analysis for a 2-vertex-cut of a 2-connected r-graph: either a
/// concrete non-trivial tight cut, or the underlying graph is a 4-circuit.
pub fn classify_two_cut(
    g: &Multigraph,
    r: usize,
    s: &VertexCut,
) -> Result<TwoCutClassification, AnalysisError> {
    if s.separator.len() != 2 {
        return Err(AnalysisError::InvalidArgument("separator must have 2 vertices".into()));
    }
    let verdict = verify_r_graph(g, r)?;
    if !verdict.is_r_graph {
        return Err(AnalysisError::PreconditionViolation(format!("input is not a {r}-graph")));
    }
    if g.connectivity() < 2 {
        return Err(AnalysisError::PreconditionViolation("input is not 2-connected".into()));
    }
    let (u, v) = (s.separator[0], s.separator[1]);
    let mut removed = vec![false; g.n()];
    removed[u] = true;
    removed[v] = true;
    let comps = g.components_without(&removed);
    let side_counts: Vec<(usize, usize)> = comps
        .iter()
        .map(|c| (count_edges_between(g, c, u), count_edges_between(g, c, v)))
        .collect();
    if comps.len() < 2 {
        return Ok(TwoCutClassification {
            case: CutCase::NotApplicable,
            tight_cut: None,
            side_counts,
            components: comps,
        });
    }
    let odd: Vec<usize> =
        (0..comps.len()).filter(|&i| comps[i].len() % 2 == 1).collect();
    if odd.len() >= 2 {
        // Case 1 of the lemma.
        if let Some(&i) = odd.iter().find(|&&i| comps[i].len() >= 2) {
            let cut = g.boundary(&comps[i])?;
            ensure_tight(g, r, &cut)?;
            return Ok(TwoCutClassification {
                case: CutCase::TightCutFound,
                tight_cut: Some(cut),
                side_counts,
                components: comps,
            });
        }
        // Both odd components are singletons; the lemma forces G_s = C4.
        let c4 = crate::fixtures::c4();
        if !g.underlying_simple().is_isomorphic_to(&c4) {
            return Err(AnalysisError::Internal(
                "case 1 with singleton components but underlying graph is not C4".into(),
            ));
        }
        return Ok(TwoCutClassification {
            case: CutCase::UnderlyingC4,
            tight_cut: None,
            side_counts,
            components: comps,
        });
    }
    // Case 2: all components even; a_i = b_i and boundary(V(G_i) + u) is tight.
    let i = 0;
    if side_counts[i].0 != side_counts[i].1 {
        return Err(AnalysisError::Internal(format!(
            "even-component case with a_0 = {} != b_0 = {}",
            side_counts[i].0, side_counts[i].1
        )));
    }
    let mut side = comps[i].clone();
    side.push(u);
    side.sort_unstable();
    let cut = g.boundary(&side)?;
    ensure_tight(g, r, &cut)?;
    Ok(TwoCutClassification {
        case: CutCase::EvenComponentsOnly,
        tight_cut: Some(cut),
        side_counts,
        components: comps,
    })
}

/// Case analysis for a 3-vertex-cut of a 3-connected r-graph with at least
/// three odd components: a tight cut around a big odd component, or K3,3.
pub fn classify_three_cut(
    g: &Multigraph,
    r: usize,
    s: &VertexCut,
) -> Result<ThreeCutClassification, AnalysisError> {
    if s.separator.len() != 3 {
        return Err(AnalysisError::InvalidArgument("separator must have 3 vertices".into()));
    }
    let verdict = verify_r_graph(g, r)?;
    if !verdict.is_r_graph {
        return Err(AnalysisError::PreconditionViolation(format!("input is not a {r}-graph")));
    }
    if g.connectivity() < 3 {
        return Err(AnalysisError::PreconditionViolation("input is not 3-connected".into()));
    }
    let mut sep = s.separator.clone();
    sep.sort_unstable();
    let mut removed = vec![false; g.n()];
    for &x in &sep {
        removed[x] = true;
    }
    let comps = g.components_without(&removed);
    let side_counts: Vec<(usize, usize, usize)> = comps
        .iter()
        .map(|c| {
            (
                count_edges_between(g, c, sep[0]),
                count_edges_between(g, c, sep[1]),
                count_edges_between(g, c, sep[2]),
            )
        })
        .collect();
    let separator_independent =
        g.mu(sep[0], sep[1]) == 0 && g.mu(sep[0], sep[2]) == 0 && g.mu(sep[1], sep[2]) == 0;
    let odd: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].len() % 2 == 1).collect();
    if odd.len() < 3 {
        return Ok(ThreeCutClassification {
            case: CutCase::NotApplicable,
            tight_cut: None,
            side_counts,
            components: comps,
            separator_independent,
        });
    }
    // Derived facts for qualifying r-graph input: exactly three components,
    // independent separator, each component boundary exactly r.
    if comps.len() != 3 || !separator_independent {
        return Err(AnalysisError::Internal(
            "three odd components but derived structure facts fail".into(),
        ));
    }
    if let Some(&i) = odd.iter().find(|&&i| comps[i].len() >= 3) {
        let cut = g.boundary(&comps[i])?;
        ensure_tight(g, r, &cut)?;
        return Ok(ThreeCutClassification {
            case: CutCase::TightCutFound,
            tight_cut: Some(cut),
            side_counts,
            components: comps,
            separator_independent,
        });
    }
    if !g.underlying_simple().is_isomorphic_to(&crate::fixtures::k33()) {
        return Err(AnalysisError::Internal(
            "three singleton odd components but underlying graph is not K3,3".into(),
        ));
    }
    Ok(ThreeCutClassification {
        case: CutCase::UnderlyingK33,
        tight_cut: None,
        side_counts,
        components: comps,
        separator_independent,
    })
}

fn ensure_tight(g: &Multigraph, r: usize, cut: &EdgeCut) -> Result<(), AnalysisError> {
    let n = g.n();
    let ok = cut.side.len() % 2 == 1
        && cut.boundary.len() == r
        && cut.side.len() > 1
        && n - cut.side.len() > 1;
    if ok {
        Ok(())
    } else {
        Err(AnalysisError::Internal(format!(
            "classification produced a non-tight cut: |X| = {}, boundary = {}",
            cut.side.len(),
            cut.boundary.len()
        )))
    }
}

/// One lifting step at the contraction vertex: delete the two named edges and
/// join their far endpoints. Ids refer to the graph state at that step.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftStep {
    pub y: usize,
    pub z: usize,
    pub edge_to_y: EdgeId,
    pub edge_to_z: EdgeId,
}

/// An ordered lifting schedule at `w_X` in a contracted graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftingPlan {
    pub at: usize,
    pub steps: Vec<LiftStep>,
    pub delete_vertex_after: bool,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn shuffle<T>(items: &mut [T], seed: u64) {
    let mut state = seed ^ 0xa076_1d64_78bd_642f;
    for i in (1..items.len()).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

/// Searches for a lifting schedule at `w_X` in `G/X` of the exact length the
/// lifting theorem states, such that the final graph is a connected r-graph.
/// Backtracks over neighbor pairs in seed-shuffled canonical order.
pub fn plan_lifting(
    g: &Multigraph,
    x: &[usize],
    r: usize,
    seed: u64,
) -> Result<LiftingPlan, AnalysisError> {
    let verdict = verify_r_graph(g, r)?;
    if !verdict.is_r_graph {
        return Err(AnalysisError::PreconditionViolation(format!("input is not a {r}-graph")));
    }
    if !g.is_connected() {
        return Err(AnalysisError::PreconditionViolation("input is not connected".into()));
    }
    let cut = g.boundary(x)?;
    let even = cut.side.len() % 2 == 0;
    let steps_needed = if even {
        cut.boundary.len() / 2
    } else {
        debug_assert!(cut.boundary.len() >= r && (cut.boundary.len() - r).is_multiple_of(2));
        (cut.boundary.len() - r) / 2
    };
    let contraction = g.contract(x)?;
    let w = contraction.w;
    let mut steps = Vec::new();
    if backtrack_lift(&contraction.graph, w, r, even, steps_needed, seed, &mut steps) {
        Ok(LiftingPlan { at: w, steps, delete_vertex_after: even })
    } else {
        Err(AnalysisError::Internal(
            "no lifting sequence of the stated length found; the theorem guarantees one".into(),
        ))
    }
}

fn backtrack_lift(
    h: &Multigraph,
    w: usize,
    r: usize,
    even: bool,
    remaining: usize,
    seed: u64,
    steps: &mut Vec<LiftStep>,
) -> bool {
    if remaining == 0 {
        let final_graph = if even {
            debug_assert_eq!(h.degree(w), 0);
            h.remove_last_vertex().0
        } else {
            h.clone()
        };
        return final_graph.is_connected()
            && verify_r_graph(&final_graph, r).map(|v| v.is_r_graph).unwrap_or(false);
    }
    let mut neighbors: Vec<usize> = h
        .edges()
        .filter_map(|(_, a, b)| {
            if a == w {
                Some(b)
            } else if b == w {
                Some(a)
            } else {
                None
            }
        })
        .collect();
    neighbors.sort_unstable();
    neighbors.dedup();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..neighbors.len() {
        for j in (i + 1)..neighbors.len() {
            pairs.push((neighbors[i], neighbors[j]));
        }
    }
    shuffle(&mut pairs, seed ^ (remaining as u64).wrapping_mul(0x9e37));
    for (y, z) in pairs {
        let e1 = h.edge_ids_between(w, y)[0];
        let e2 = h.edge_ids_between(w, z)[0];
        let (next, _) = apply_lift_step(h, w, y, z, e1, e2);
        steps.push(LiftStep { y, z, edge_to_y: e1, edge_to_z: e2 });
        if backtrack_lift(&next, w, r, even, remaining - 1, seed, steps) {
            return true;
        }
        steps.pop();
    }
    false
}

fn apply_lift_step(
    h: &Multigraph,
    _w: usize,
    y: usize,
    z: usize,
    e1: EdgeId,
    e2: EdgeId,
) -> (Multigraph, ()) {
    let (stripped, _) = h.without_edges(&[e1, e2]);
    let added = stripped.with_edges_added(&[(y, z)]).expect("lift endpoints are valid");
    (added.graph, ())
}

/// Mechanically executes a lifting plan on a contracted graph `G/X`.
pub fn apply_lifting(contracted: &Multigraph, plan: &LiftingPlan) -> Result<Multigraph, AnalysisError> {
    let w = plan.at;
    if w >= contracted.n() {
        return Err(AnalysisError::InvalidPlan(format!("vertex {w} out of range")));
    }
    let mut h = contracted.clone();
    for (i, step) in plan.steps.iter().enumerate() {
        let check = |id: EdgeId, other: usize| -> Result<(), AnalysisError> {
            if id >= h.m() {
                return Err(AnalysisError::InvalidPlan(format!("step {i}: stale edge id {id}")));
            }
            let (a, b) = h.endpoints(id);
            if !((a == w && b == other) || (b == w && a == other)) {
                return Err(AnalysisError::InvalidPlan(format!(
                    "step {i}: edge {id} does not join {w} and {other}"
                )));
            }
            Ok(())
        };
        if step.y == step.z {
            return Err(AnalysisError::InvalidPlan(format!("step {i}: neighbors must differ")));
        }
        check(step.edge_to_y, step.y)?;
        check(step.edge_to_z, step.z)?;
        let (next, _) = apply_lift_step(&h, w, step.y, step.z, step.edge_to_y, step.edge_to_z);
        h = next;
    }
    if plan.delete_vertex_after {
        if h.degree(w) != 0 {
            return Err(AnalysisError::InvalidPlan(format!(
                "plan finishes with degree {} at the contraction vertex",
                h.degree(w)
            )));
        }
        if w != h.n() - 1 {
            return Err(AnalysisError::InvalidPlan("contraction vertex must be last".into()));
        }
        Ok(h.remove_last_vertex().0)
    } else {
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn petersen_is_a_3_graph() {
        let v = verify_r_graph(&fixtures::petersen(), 3).unwrap();
        assert!(v.is_r_graph);
        assert!(v.witness.is_none());
    }

    #[test]
    fn bridged_cubic_fails_with_witness() {
        let g = fixtures::bridged_cubic();
        let v = verify_r_graph(&g, 3).unwrap();
        assert!(!v.is_r_graph);
        let w = v.witness.unwrap();
        assert_eq!(w.side.len() % 2, 1);
        assert!(w.boundary.len() < 3);
        // Recompute the boundary to confirm the witness certifies failure.
        let again = g.boundary(&w.side).unwrap();
        assert_eq!(again.boundary, w.boundary);
    }

    #[test]
    fn doubled_c4_is_a_4_graph() {
        assert!(verify_r_graph(&fixtures::c4_doubled(), 4).unwrap().is_r_graph);
    }

    #[test]
    fn odd_order_rejected() {
        let g = fixtures::k5();
        let v = verify_r_graph(&g, 4).unwrap();
        assert!(!v.is_r_graph);
        assert_eq!(v.witness.unwrap().side.len(), 5);
    }

    #[test]
    fn non_regular_rejected_with_singleton() {
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let v = verify_r_graph(&g, 2).unwrap();
        assert!(!v.is_r_graph);
        assert_eq!(v.witness.unwrap().side.len(), 1);
    }

    #[test]
    fn zero_r_is_invalid() {
        assert!(matches!(
            verify_r_graph(&fixtures::k4(), 0),
            Err(AnalysisError::InvalidArgument(_))
        ));
    }

    #[test]
    fn prism_tight_cut_is_a_triangle() {
        let cut = find_nontrivial_tight_cut(&fixtures::prism(), 3).unwrap().unwrap();
        assert_eq!(cut.side, vec![0, 1, 2]);
        assert!(cut.nontrivial_tight);
    }

    #[test]
    fn k4_has_no_nontrivial_tight_cut() {
        assert!(find_nontrivial_tight_cut(&fixtures::k4(), 3).unwrap().is_none());
    }

    #[test]
    fn petersen_has_no_nontrivial_tight_cut() {
        assert!(find_nontrivial_tight_cut(&fixtures::petersen(), 3).unwrap().is_none());
    }

    #[test]
    fn tight_cut_rejects_non_r_graph() {
        assert!(matches!(
            find_nontrivial_tight_cut(&fixtures::bridged_cubic(), 3),
            Err(AnalysisError::PreconditionViolation(_))
        ));
    }

    #[test]
    fn two_cut_case1_singletons_is_c4() {
        let g = fixtures::c4_2121();
        let cuts = g.find_vertex_cuts(2).unwrap();
        // Either opposite pair separates.
        let s = cuts.iter().find(|c| c.separator == vec![0, 2]).unwrap();
        let out = classify_two_cut(&g, 3, s).unwrap();
        assert_eq!(out.case, CutCase::UnderlyingC4);
    }

    #[test]
    fn two_cut_case2_even_components() {
        let g = fixtures::c6_doubled();
        let cuts = g.find_vertex_cuts(2).unwrap();
        let s = cuts.iter().find(|c| c.separator == vec![0, 3]).unwrap();
        let out = classify_two_cut(&g, 4, s).unwrap();
        assert_eq!(out.case, CutCase::EvenComponentsOnly);
        let cut = out.tight_cut.unwrap();
        assert!(cut.nontrivial_tight);
        assert_eq!(out.side_counts[0].0, out.side_counts[0].1);
    }

    #[test]
    fn two_cut_not_applicable_for_non_separator() {
        let g = fixtures::prism();
        let fake = VertexCut { separator: vec![0, 1], component_count: 1, component_parities: vec![0] };
        let out = classify_two_cut(&g, 3, &fake).unwrap();
        assert_eq!(out.case, CutCase::NotApplicable);
    }

    #[test]
    fn three_cut_on_k33() {
        let g = fixtures::k33();
        let cuts = g.find_vertex_cuts(3).unwrap();
        let s = cuts.iter().find(|c| c.separator == vec![0, 1, 2]).unwrap();
        let out = classify_three_cut(&g, 3, s).unwrap();
        assert_eq!(out.case, CutCase::UnderlyingK33);
        assert!(out.separator_independent);
        assert_eq!(out.components.len(), 3);
    }

    #[test]
    fn three_cut_on_blown_k33_finds_tight_cut() {
        let g = fixtures::k33_blown();
        let cuts = g.find_vertex_cuts(3).unwrap();
        let s = cuts
            .iter()
            .find(|c| c.component_count >= 3 && c.component_parities.iter().filter(|&&p| p == 1).count() >= 3)
            .expect("qualifying separator");
        let out = classify_three_cut(&g, 3, s).unwrap();
        assert_eq!(out.case, CutCase::TightCutFound);
        let cut = out.tight_cut.unwrap();
        assert_eq!(cut.side.len(), 3);
        assert_eq!(cut.boundary.len(), 3);
    }

    #[test]
    fn three_cut_not_applicable_on_prism() {
        let g = fixtures::prism();
        for s in [
            VertexCut { separator: vec![0, 1, 2], component_count: 2, component_parities: vec![1, 1] },
            VertexCut { separator: vec![0, 1, 4], component_count: 2, component_parities: vec![1, 1] },
        ] {
            let out = classify_three_cut(&g, 3, &s).unwrap();
            assert_eq!(out.case, CutCase::NotApplicable);
        }
    }

    #[test]
    fn lifting_k4_edge_contraction() {
        let g = fixtures::k4();
        let x = [0, 1];
        let plan = plan_lifting(&g, &x, 3, 0).unwrap();
        assert_eq!(plan.steps.len(), 2);
        assert!(plan.delete_vertex_after);
        let contracted = g.contract(&x).unwrap();
        let lifted = apply_lifting(&contracted.graph, &plan).unwrap();
        assert!(lifted.is_isomorphic_to(&fixtures::theta3()));
    }

    #[test]
    fn lifting_prism_triangle_needs_no_steps() {
        let g = fixtures::prism();
        let x = [3, 4, 5];
        let plan = plan_lifting(&g, &x, 3, 0).unwrap();
        assert!(plan.steps.is_empty());
        assert!(!plan.delete_vertex_after);
        let contracted = g.contract(&x).unwrap();
        let lifted = apply_lifting(&contracted.graph, &plan).unwrap();
        assert!(lifted.is_isomorphic_to(&fixtures::k4()));
    }

    #[test]
    fn lifting_petersen_outer_cycle() {
        let g = fixtures::petersen();
        let x = [0, 1, 2, 3, 4];
        let plan = plan_lifting(&g, &x, 3, 7).unwrap();
        assert_eq!(plan.steps.len(), 1);
        let contracted = g.contract(&x).unwrap();
        let lifted = apply_lifting(&contracted.graph, &plan).unwrap();
        assert_eq!(lifted.n(), 6);
        assert!(verify_r_graph(&lifted, 3).unwrap().is_r_graph);
        assert!(lifted.is_connected());
    }

    #[test]
    fn stale_plan_rejected() {
        let g = fixtures::k4();
        let contracted = g.contract(&[0, 1]).unwrap();
        let plan = LiftingPlan {
            at: contracted.w,
            steps: vec![LiftStep { y: 0, z: 1, edge_to_y: 99, edge_to_z: 0 }],
            delete_vertex_after: true,
        };
        assert!(matches!(
            apply_lifting(&contracted.graph, &plan),
            Err(AnalysisError::InvalidPlan(_))
        ));
    }
}
