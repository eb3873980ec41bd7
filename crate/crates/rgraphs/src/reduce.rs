//! Reduction engine: combines covers across tight cuts, reduces K5-minor-free
//! and K3,3-minor-free and one-crossing r-graphs to planar instances handled
//! by an oracle, and repairs crossing swaps with Kempe switches. Every run
//! produces a trace whose steps can be replayed and independently validated.

use crate::canon::graph_hash;
use crate::graph::{EdgeCut, EdgeId, GraphError, Multigraph};
use crate::matching::{
    edge_color, find_tr_pm, kempe_chains, kempe_switch, validate_tr_pm, validate_tr_pm_report,
    Matching, MatchingError, PMCover,
};
use crate::minor::{
    crossing_at_most_one, find_splittable_three_cut, has_k33_minor, has_k5_minor, is_planar,
    planarizing_pairs, CrossingVerdict,
};
use crate::rgraph::{
    classify_two_cut, find_nontrivial_tight_cut, find_tight_cut_containing, verify_r_graph,
    AnalysisError, CutCase,
};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("precondition violation: {0}")]
    Precondition(String),
    #[error("planar oracle found no ({t},{r})-PM for a planar r-graph on {} vertices — counterexample candidate", graph.n())]
    OracleGap { graph: Box<Multigraph>, t: usize, r: usize },
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("internal defect: {0}")]
    Defect(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn defect_from_analysis(e: AnalysisError) -> ReduceError {
    ReduceError::Defect(format!("analysis failed inside the engine: {e}"))
}

/// Supplies (t,r)-PM covers for planar instances. The exact strategy runs
/// the cover search; the table strategy (for tests) looks instances up by
/// graph hash, with misses and `None` entries surfacing as oracle gaps.
#[derive(Debug, Clone)]
pub enum PlanarOracle {
    Exact { budget: Option<u64> },
    Table(HashMap<String, Option<PMCover>>),
}

impl PlanarOracle {
    pub fn exact() -> Self {
        PlanarOracle::Exact { budget: None }
    }

    pub fn with_budget(budget: u64) -> Self {
        PlanarOracle::Exact { budget: Some(budget) }
    }

    fn solve(&self, g: &Multigraph, t: usize, r: usize) -> Result<PMCover, ReduceError> {
        debug_assert!(is_planar(g), "oracle invoked on a non-planar instance");
        match self {
            PlanarOracle::Exact { budget } => match find_tr_pm(g, t, r, *budget) {
                Ok(Some(cover)) => Ok(cover),
                Ok(None) => Err(ReduceError::OracleGap { graph: Box::new(g.clone()), t, r }),
                Err(MatchingError::BudgetExceeded { .. }) => Err(ReduceError::BudgetExceeded),
                Err(e) => Err(ReduceError::Defect(format!("cover search failed: {e}"))),
            },
            PlanarOracle::Table(map) => match map.get(&graph_hash(g)) {
                Some(Some(cover)) => Ok(cover.clone()),
                _ => Err(ReduceError::OracleGap { graph: Box::new(g.clone()), t, r }),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    TightCutSplit,
    TwoCutC4Direct,
    ThreeCutSplit,
    PlanarOracle,
    V8Coloring,
    K33Coloring,
    CrossingSwap,
}

/// One retained side of a three-cut split: the removed even component, its
/// boundary counts toward the separator, the derived added-edge counts, and
/// the reduced graph with id maps back to the parent.
#[derive(Debug, Clone)]
pub struct ThreeCutSide {
    /// The removed even component V(G_i), parent labels.
    pub component: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub h: usize,
    pub k: usize,
    /// G'_i = (G - V(G_i)) + d*uv + h*vw + k*wu.
    pub reduced: Multigraph,
    /// Ids of the added parallel copies inside `reduced`.
    pub added_uv: Vec<EdgeId>,
    pub added_vw: Vec<EdgeId>,
    pub added_wu: Vec<EdgeId>,
    /// reduced edge id -> parent edge id (None for added copies).
    pub edge_to_parent: Vec<Option<EdgeId>>,
}

#[derive(Debug, Clone)]
pub struct ThreeCutSplit {
    pub separator: [usize; 3],
    pub sides: [ThreeCutSide; 2],
}

/// Data for one crossing-swap step: the swapped pair, the potential descent,
/// and the conflicting-pair count of the repair.
#[derive(Debug, Clone)]
pub struct CrossingReduction {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
    pub e_xy: EdgeId,
    pub e_uv: EdgeId,
    /// c_G = mu(x,y) * mu(u,v) at this node.
    pub potential: usize,
    /// c_{G'} of the swapped child; strictly smaller.
    pub child_potential: usize,
    /// G' = G - e_xy - e_uv + xu + yv.
    pub swapped: Multigraph,
    /// Ids of the two new edges inside `swapped`.
    pub f: EdgeId,
    pub f_prime: EdgeId,
    /// swapped edge id -> parent edge id (None for f, f').
    pub edge_to_parent: Vec<Option<EdgeId>>,
    /// Number of conflicting pairs repaired by Kempe switches (l = l').
    pub conflicting: usize,
}

#[derive(Debug, Clone)]
pub enum StepDetail {
    Plain,
    TightCut { cut: EdgeCut },
    ThreeCut(Box<ThreeCutSplit>),
    Crossing(Box<CrossingReduction>),
}

/// Recursive record of the reduction: which step solved each subinstance,
/// with the subinstance graph, its cover, and the child traces.
#[derive(Debug, Clone)]
pub struct TraceNode {
    pub kind: StepKind,
    pub graph: Multigraph,
    pub cover: PMCover,
    pub detail: StepDetail,
    pub children: Vec<TraceNode>,
}

pub type ReductionTrace = TraceNode;

impl TraceNode {
    pub fn steps(&self) -> Vec<&TraceNode> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.steps());
        }
        out
    }

    pub fn count_kind(&self, kind: StepKind) -> usize {
        self.steps().iter().filter(|n| n.kind == kind).count()
    }
}

fn check_entry(g: &Multigraph, t: usize, r: usize) -> Result<(), ReduceError> {
    if t == 0 || r == 0 {
        return Err(ReduceError::Precondition("t and r must be at least 1".into()));
    }
    let verdict = verify_r_graph(g, r).map_err(defect_from_analysis)?;
    if !verdict.is_r_graph {
        return Err(ReduceError::Precondition(format!("input is not a {r}-graph")));
    }
    if !g.is_connected() {
        return Err(ReduceError::Precondition("input must be connected".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Cover combination across a tight cut
// ---------------------------------------------------------------------------

/// Combines (t,r)-PM covers of the two contractions G/X^c (`cover_inside`,
/// the side keeping X) and G/X (`cover_outside`) into a cover of `g`, pairing
/// matchings through the cut edge they use.
pub fn combine_across_tight_cut(
    g: &Multigraph,
    cut: &EdgeCut,
    cover_inside: &PMCover,
    cover_outside: &PMCover,
) -> Result<PMCover, ReduceError> {
    let recomputed = g.boundary(&cut.side)?;
    if recomputed.boundary != cut.boundary {
        return Err(ReduceError::Precondition("cut does not match the graph".into()));
    }
    let (t, r) = (cover_inside.t, cover_inside.r);
    if cover_outside.t != t || cover_outside.r != r {
        return Err(ReduceError::Precondition("covers disagree on t or r".into()));
    }
    let odd = cut.side.len() % 2 == 1;
    let nontrivial = cut.side.len() > 1 && g.n() - cut.side.len() > 1;
    if !(odd && cut.boundary.len() == r && nontrivial) {
        return Err(ReduceError::Precondition("cut is not a non-trivial tight edge-cut".into()));
    }
    let complement: Vec<usize> = (0..g.n()).filter(|v| !cut.side.contains(v)).collect();
    let inside = g.contract(&complement)?;
    let outside = g.contract(&cut.side)?;
    for (contracted, cover, name) in
        [(&inside, cover_inside, "inside"), (&outside, cover_outside, "outside")]
    {
        let reasons = validate_tr_pm_report(&contracted.graph, cover);
        if !reasons.is_empty() {
            return Err(ReduceError::Precondition(format!(
                "{name} cover invalid: {}",
                reasons.join("; ")
            )));
        }
    }
    let mut merged: Vec<Matching> = Vec::with_capacity(t * r);
    for &e in &cut.boundary {
        let ein = inside.edge_map[e]
            .ok_or_else(|| ReduceError::Defect("cut edge lost in contraction".into()))?;
        let eout = outside.edge_map[e]
            .ok_or_else(|| ReduceError::Defect("cut edge lost in contraction".into()))?;
        let ins: Vec<&Matching> =
            cover_inside.matchings.iter().filter(|m| m.contains(ein)).collect();
        let outs: Vec<&Matching> =
            cover_outside.matchings.iter().filter(|m| m.contains(eout)).collect();
        if ins.len() != t || outs.len() != t {
            return Err(ReduceError::Precondition(format!(
                "cut edge {e} used {} / {} times, expected {t}",
                ins.len(),
                outs.len()
            )));
        }
        for (mi, mo) in ins.iter().zip(outs.iter()) {
            let mut ids: Vec<EdgeId> = vec![e];
            ids.extend(mi.edge_ids.iter().filter(|&&x| x != ein).map(|&x| inside.new_to_old[x]));
            ids.extend(mo.edge_ids.iter().filter(|&&x| x != eout).map(|&x| outside.new_to_old[x]));
            let m = Matching::new(g, ids)
                .map_err(|e| ReduceError::Defect(format!("combined edges not a matching: {e}")))?;
            if !m.perfect {
                return Err(ReduceError::Defect("combined matching is not perfect".into()));
            }
            merged.push(m);
        }
    }
    let cover = PMCover { t, r, matchings: merged };
    let reasons = validate_tr_pm_report(g, &cover);
    if !reasons.is_empty() {
        return Err(ReduceError::Defect(format!("combined cover invalid: {}", reasons.join("; "))));
    }
    Ok(cover)
}

// ---------------------------------------------------------------------------
// Direct cover for C4-underlying r-graphs
// ---------------------------------------------------------------------------

/// Proper r-edge-coloring of an r-graph whose underlying simple graph is a
/// 4-circuit, repeated t times: opposite parallel classes pair up copy by
/// copy into perfect matchings.
pub fn direct_c4_cover(g: &Multigraph, t: usize, r: usize) -> Result<PMCover, ReduceError> {
    check_entry(g, t, r)?;
    let s = g.underlying_simple();
    if !s.is_isomorphic_to(&crate::fixtures::c4()) {
        return Err(ReduceError::Precondition("underlying simple graph is not a 4-circuit".into()));
    }
    // Cycle order v0, v1, v2, v3 with v0 = 0.
    let nbrs: Vec<usize> = (0..g.n()).filter(|&v| v != 0 && g.mu(0, v) > 0).collect();
    let (v1, v3) = (nbrs[0], nbrs[1]);
    let v2 = (0..g.n()).find(|&v| v != 0 && v != v1 && v != v3).unwrap();
    let group_a = g.edge_ids_between(0, v1);
    let group_b = g.edge_ids_between(v1, v2);
    let group_c = g.edge_ids_between(v2, v3);
    let group_d = g.edge_ids_between(v3, 0);
    if group_a.len() != group_c.len() || group_b.len() != group_d.len() {
        return Err(ReduceError::Precondition("opposite multiplicities differ; not regular".into()));
    }
    let mut classes: Vec<Matching> = Vec::with_capacity(r);
    for i in 0..group_a.len() {
        classes.push(
            Matching::new(g, vec![group_a[i], group_c[i]])
                .map_err(|e| ReduceError::Defect(e.to_string()))?,
        );
    }
    for j in 0..group_b.len() {
        classes.push(
            Matching::new(g, vec![group_b[j], group_d[j]])
                .map_err(|e| ReduceError::Defect(e.to_string()))?,
        );
    }
    if classes.len() != r {
        return Err(ReduceError::Defect(format!("{} classes for r = {r}", classes.len())));
    }
    let mut matchings = Vec::with_capacity(t * r);
    for _ in 0..t {
        matchings.extend(classes.iter().cloned());
    }
    let cover = PMCover { t, r, matchings };
    let reasons = validate_tr_pm_report(g, &cover);
    if !reasons.is_empty() {
        return Err(ReduceError::Defect(format!("c4 cover invalid: {}", reasons.join("; "))));
    }
    Ok(cover)
}

fn coloring_cover(g: &Multigraph, t: usize, r: usize, why: &str) -> Result<PMCover, ReduceError> {
    let coloring = edge_color(g, r).ok_or_else(|| {
        ReduceError::Defect(format!("{why}: expected class 1, no {r}-edge-coloring found"))
    })?;
    let classes = coloring.classes(g);
    if classes.iter().any(|m| !m.perfect) {
        return Err(ReduceError::Defect(format!("{why}: color class is not a perfect matching")));
    }
    let mut matchings = Vec::with_capacity(t * r);
    for _ in 0..t {
        matchings.extend(classes.iter().cloned());
    }
    Ok(PMCover { t, r, matchings })
}

// ---------------------------------------------------------------------------
// Shared recursion steps
// ---------------------------------------------------------------------------

enum Mode {
    K5Free,
    K33Free,
}

fn tight_cut_split<F>(
    g: &Multigraph,
    t: usize,
    r: usize,
    cut: EdgeCut,
    recurse: &mut F,
) -> Result<TraceNode, ReduceError>
where
    F: FnMut(&Multigraph, usize, usize) -> Result<TraceNode, ReduceError>,
{
    let complement: Vec<usize> = (0..g.n()).filter(|v| !cut.side.contains(v)).collect();
    let inside = g.contract(&complement)?;
    let outside = g.contract(&cut.side)?;
    let inside_node = recurse(&inside.graph, t, r)?;
    let outside_node = recurse(&outside.graph, t, r)?;
    let cover = combine_across_tight_cut(g, &cut, &inside_node.cover, &outside_node.cover)?;
    Ok(TraceNode {
        kind: StepKind::TightCutSplit,
        graph: g.clone(),
        cover,
        detail: StepDetail::TightCut { cut },
        children: vec![inside_node, outside_node],
    })
}

/// Handles the 2-vertex-cut case: with tight cuts exhausted, the structure
/// lemma leaves only the 4-circuit shape.
fn two_cut_c4(g: &Multigraph, t: usize, r: usize) -> Result<TraceNode, ReduceError> {
    let cuts = g.find_vertex_cuts(2)?;
    let s = &cuts[0];
    let classification = classify_two_cut(g, r, s).map_err(defect_from_analysis)?;
    match classification.case {
        CutCase::UnderlyingC4 => {
            let cover = direct_c4_cover(g, t, r)?;
            Ok(TraceNode {
                kind: StepKind::TwoCutC4Direct,
                graph: g.clone(),
                cover,
                detail: StepDetail::Plain,
                children: Vec::new(),
            })
        }
        other => Err(ReduceError::Defect(format!(
            "2-cut classified as {other:?} although no non-trivial tight cut exists"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Three-cut split
// ---------------------------------------------------------------------------

fn build_three_cut_side(
    g: &Multigraph,
    sep: &[usize; 3],
    component: &[usize],
) -> Result<ThreeCutSide, ReduceError> {
    let (u, v, w) = (sep[0], sep[1], sep[2]);
    let count = |x: usize| component.iter().map(|&q| g.mu(q, x)).sum::<usize>();
    let (a, b, c) = (count(u), count(v), count(w));
    let half = |x: isize| -> Result<usize, ReduceError> {
        if x < 0 || x % 2 != 0 {
            return Err(ReduceError::Defect(format!(
                "added-edge count {x}/2 is not a nonnegative integer (a={a}, b={b}, c={c})"
            )));
        }
        Ok((x / 2) as usize)
    };
    let d = half(a as isize + b as isize - c as isize)?;
    let h = half(-(a as isize) + b as isize + c as isize)?;
    let k = half(a as isize - b as isize + c as isize)?;
    debug_assert!(a == d + k && b == d + h && c == h + k);
    let keep: Vec<usize> = (0..g.n()).filter(|x| !component.contains(x)).collect();
    let (base, vmap, emap) = g.induced(&keep);
    let pos = |x: usize| vmap.binary_search(&x).expect("separator is kept");
    let mut extra: Vec<(usize, usize)> = Vec::new();
    extra.extend(std::iter::repeat_n((pos(u), pos(v)), d));
    extra.extend(std::iter::repeat_n((pos(v), pos(w)), h));
    extra.extend(std::iter::repeat_n((pos(w), pos(u)), k));
    let addition = base.with_edges_added(&extra)?;
    let reduced = addition.graph;
    let mut edge_to_parent: Vec<Option<EdgeId>> = vec![None; reduced.m()];
    for (base_id, &new_id) in addition.old_to_new.iter().enumerate() {
        edge_to_parent[new_id] = Some(emap[base_id]);
    }
    let added_uv = addition.added[..d].to_vec();
    let added_vw = addition.added[d..d + h].to_vec();
    let added_wu = addition.added[d + h..].to_vec();
    Ok(ThreeCutSide {
        component: component.to_vec(),
        a,
        b,
        c,
        d,
        h,
        k,
        reduced,
        added_uv,
        added_vw,
        added_wu,
        edge_to_parent,
    })
}

/// Which separator pair a restricted matching saturates via the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum SepPair {
    Uv,
    Vw,
    Wu,
    Free,
}

/// Merges covers of G'_1 and G'_2 into a cover of g: each matching of the
/// first cover swaps its added separator edge (if any) for a restriction of
/// a second-cover matching saturating the same separator pair.
pub fn merge_three_cut(
    g: &Multigraph,
    split: &ThreeCutSplit,
    cover1: &PMCover,
    cover2: &PMCover,
) -> Result<PMCover, ReduceError> {
    let (t, r) = (cover1.t, cover1.r);
    if cover2.t != t || cover2.r != r {
        return Err(ReduceError::Precondition("covers disagree on t or r".into()));
    }
    let side1 = &split.sides[0];
    let side2 = &split.sides[1];
    let [u, v, w] = split.separator;
    // Edges of E(G_1) plus its boundary, as parent ids.
    let in_g1 = |x: usize| side1.component.contains(&x);
    let mut target = vec![false; g.m()];
    for (e, a, b) in g.edges() {
        if in_g1(a) || in_g1(b) {
            target[e] = true;
        }
    }
    // Restrict cover2's matchings and classify by saturated separator pair.
    let mut restricted: Vec<(SepPair, Vec<EdgeId>)> = Vec::with_capacity(cover2.matchings.len());
    for m in &cover2.matchings {
        let mut ids: Vec<EdgeId> = Vec::new();
        for &e2 in &m.edge_ids {
            if let Some(p) = side2.edge_to_parent[e2] {
                if target[p] {
                    ids.push(p);
                }
            }
        }
        let mut sep_hits: Vec<usize> = Vec::new();
        for &p in &ids {
            let (a, b) = g.endpoints(p);
            for q in [a, b] {
                if q == u || q == v || q == w {
                    sep_hits.push(q);
                }
            }
        }
        sep_hits.sort_unstable();
        let pair = match sep_hits.len() {
            0 => SepPair::Free,
            2 => {
                let key = (sep_hits[0], sep_hits[1]);
                if key == (u.min(v), u.max(v)) {
                    SepPair::Uv
                } else if key == (v.min(w), v.max(w)) {
                    SepPair::Vw
                } else if key == (w.min(u), w.max(u)) {
                    SepPair::Wu
                } else {
                    return Err(ReduceError::Defect("restriction hits a non-separator pair".into()));
                }
            }
            other => {
                return Err(ReduceError::Defect(format!(
                    "restriction uses {other} boundary edges, expected 0 or 2"
                )))
            }
        };
        restricted.push((pair, ids));
    }
    // Classify cover1's matchings by the added copy they contain.
    let added_pair = |m: &Matching| -> Result<(SepPair, Option<EdgeId>), ReduceError> {
        let mut found: Option<(SepPair, EdgeId)> = None;
        for &e in &m.edge_ids {
            let hit = if side1.added_uv.contains(&e) {
                Some(SepPair::Uv)
            } else if side1.added_vw.contains(&e) {
                Some(SepPair::Vw)
            } else if side1.added_wu.contains(&e) {
                Some(SepPair::Wu)
            } else {
                None
            };
            if let Some(p) = hit {
                if found.is_some() {
                    return Err(ReduceError::Defect("matching uses two added copies".into()));
                }
                found = Some((p, e));
            }
        }
        Ok(match found {
            Some((p, e)) => (p, Some(e)),
            None => (SepPair::Free, None),
        })
    };
    let mut buckets: HashMap<SepPair, Vec<usize>> = HashMap::new();
    for (i, (pair, _)) in restricted.iter().enumerate() {
        buckets.entry(*pair).or_default().push(i);
    }
    let expect = [
        (SepPair::Uv, t * side1.d),
        (SepPair::Vw, t * side1.h),
        (SepPair::Wu, t * side1.k),
        (SepPair::Free, t * r - t * (side1.d + side1.h + side1.k)),
    ];
    for (pair, count) in expect {
        let got = buckets.get(&pair).map_or(0, |v| v.len());
        if got != count {
            return Err(ReduceError::Defect(format!(
                "restriction type {pair:?} count {got}, expected {count}"
            )));
        }
    }
    let mut used: HashMap<SepPair, usize> = HashMap::new();
    let mut merged: Vec<Matching> = Vec::with_capacity(t * r);
    for m1 in &cover1.matchings {
        let (pair, added_edge) = added_pair(m1)?;
        let cursor = used.entry(pair).or_insert(0);
        let bucket_idx = buckets
            .get(&pair)
            .and_then(|b| b.get(*cursor))
            .copied()
            .ok_or_else(|| ReduceError::Defect("ran out of partner restrictions".into()))?;
        *cursor += 1;
        let (_, partner_ids) = &restricted[bucket_idx];
        let mut ids: Vec<EdgeId> = partner_ids.clone();
        for &e1 in &m1.edge_ids {
            if Some(e1) == added_edge {
                continue; // replaced by the partner's boundary edges
            }
            match side1.edge_to_parent[e1] {
                Some(p) => ids.push(p),
                None => {
                    return Err(ReduceError::Defect(
                        "matching uses an added copy it did not declare".into(),
                    ))
                }
            }
        }
        let m = Matching::new(g, ids)
            .map_err(|e| ReduceError::Defect(format!("merged edges not a matching: {e}")))?;
        if !m.perfect {
            return Err(ReduceError::Defect("merged matching is not perfect".into()));
        }
        merged.push(m);
    }
    let cover = PMCover { t, r, matchings: merged };
    let reasons = validate_tr_pm_report(g, &cover);
    if !reasons.is_empty() {
        return Err(ReduceError::Defect(format!("merged cover invalid: {}", reasons.join("; "))));
    }
    Ok(cover)
}

fn three_cut_split<F>(
    g: &Multigraph,
    t: usize,
    r: usize,
    separator: [usize; 3],
    components: &[Vec<usize>],
    recurse: &mut F,
) -> Result<TraceNode, ReduceError>
where
    F: FnMut(&Multigraph, usize, usize) -> Result<TraceNode, ReduceError>,
{
    let evens: Vec<&Vec<usize>> = components.iter().filter(|c| c.len() % 2 == 0).collect();
    if evens.len() < 2 {
        return Err(ReduceError::Defect(format!(
            "three-cut split expected at least two even components, found {}",
            evens.len()
        )));
    }
    let side1 = build_three_cut_side(g, &separator, evens[0])?;
    let side2 = build_three_cut_side(g, &separator, evens[1])?;
    for side in [&side1, &side2] {
        let verdict = verify_r_graph(&side.reduced, r).map_err(defect_from_analysis)?;
        if !verdict.is_r_graph {
            return Err(ReduceError::Defect("reduced side is not an r-graph".into()));
        }
        if has_k5_minor(&side.reduced) {
            return Err(ReduceError::Defect("reduced side acquired a K5 minor".into()));
        }
    }
    let node1 = recurse(&side1.reduced, t, r)?;
    let node2 = recurse(&side2.reduced, t, r)?;
    let split = ThreeCutSplit { separator, sides: [side1, side2] };
    let cover = merge_three_cut(g, &split, &node1.cover, &node2.cover)?;
    Ok(TraceNode {
        kind: StepKind::ThreeCutSplit,
        graph: g.clone(),
        cover,
        detail: StepDetail::ThreeCut(Box::new(split)),
        children: vec![node1, node2],
    })
}

// ---------------------------------------------------------------------------
// K5-minor-free and K3,3-minor-free reductions
// ---------------------------------------------------------------------------

/// Reduces a K5-minor-free r-graph to planar instances: tight-cut splits,
/// the 4-circuit case, Wagner-graph and K3,3 colorings, and three-cut splits,
/// with the oracle solving every planar leaf.
pub fn reduce_k5_free(
    g: &Multigraph,
    t: usize,
    r: usize,
    oracle: &PlanarOracle,
) -> Result<(PMCover, ReductionTrace), ReduceError> {
    check_entry(g, t, r)?;
    if has_k5_minor(g) {
        return Err(ReduceError::Precondition("input has a K5 minor".into()));
    }
    let trace = recurse_minor_free(g, t, r, oracle, &Mode::K5Free)?;
    finish(g, trace)
}

/// Reduces a K3,3-minor-free r-graph: after tight cuts and the 4-circuit
/// case, a 3-connected instance must already be planar (a K5 underlying
/// graph has odd order and can never be an r-graph).
pub fn reduce_k33_free(
    g: &Multigraph,
    t: usize,
    r: usize,
    oracle: &PlanarOracle,
) -> Result<(PMCover, ReductionTrace), ReduceError> {
    check_entry(g, t, r)?;
    if has_k33_minor(g) {
        return Err(ReduceError::Precondition("input has a K3,3 minor".into()));
    }
    let trace = recurse_minor_free(g, t, r, oracle, &Mode::K33Free)?;
    finish(g, trace)
}

fn finish(g: &Multigraph, trace: TraceNode) -> Result<(PMCover, ReductionTrace), ReduceError> {
    if !validate_tr_pm(g, &trace.cover) {
        return Err(ReduceError::Defect("final cover failed validation".into()));
    }
    Ok((trace.cover.clone(), trace))
}

fn recurse_minor_free(
    g: &Multigraph,
    t: usize,
    r: usize,
    oracle: &PlanarOracle,
    mode: &Mode,
) -> Result<TraceNode, ReduceError> {
    // (a) non-trivial tight cut: split and combine.
    if let Some(cut) = find_nontrivial_tight_cut(g, r).map_err(defect_from_analysis)? {
        let mut rec =
            |child: &Multigraph, t: usize, r: usize| recurse_minor_free(child, t, r, oracle, mode);
        return tight_cut_split(g, t, r, cut, &mut rec);
    }
    // (b) 2-vertex-cut: the lemma leaves only the 4-circuit shape.
    if g.n() >= 4 && !g.find_vertex_cuts(2)?.is_empty() {
        return two_cut_c4(g, t, r);
    }
    // (c) planar: oracle.
    if is_planar(g) {
        let cover = oracle.solve(g, t, r)?;
        let reasons = validate_tr_pm_report(g, &cover);
        if !reasons.is_empty() {
            return Err(ReduceError::Defect(format!(
                "oracle cover invalid: {}",
                reasons.join("; ")
            )));
        }
        return Ok(TraceNode {
            kind: StepKind::PlanarOracle,
            graph: g.clone(),
            cover,
            detail: StepDetail::Plain,
            children: Vec::new(),
        });
    }
    match mode {
        Mode::K33Free => Err(ReduceError::Defect(
            "3-connected non-planar K3,3-minor-free r-graph encountered; \
             such graphs cannot exist"
                .into(),
        )),
        Mode::K5Free => {
            // (d) Wagner graph underlying: class 1.
            if g.underlying_simple().is_isomorphic_to(&crate::fixtures::wagner_v8()) {
                let cover = coloring_cover(g, t, r, "Wagner-graph underlying")?;
                return Ok(TraceNode {
                    kind: StepKind::V8Coloring,
                    graph: g.clone(),
                    cover,
                    detail: StepDetail::Plain,
                    children: Vec::new(),
                });
            }
            // (e) splittable 3-cut.
            let (vc, _augmented) = find_splittable_three_cut(g)
                .map_err(|e| ReduceError::Defect(format!("three-cut search failed: {e}")))?
                .ok_or_else(|| {
                    ReduceError::Defect(
                        "no splittable 3-cut found although the structure theorem guarantees one"
                            .into(),
                    )
                })?;
            let mut removed = vec![false; g.n()];
            for &x in &vc.separator {
                removed[x] = true;
            }
            let comps = g.components_without(&removed);
            let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
            if odd >= 3 {
                // Three odd components without a tight cut force K3,3
                // underlying; bipartite regular graphs are class 1.
                if !g.underlying_simple().is_isomorphic_to(&crate::fixtures::k33()) {
                    return Err(ReduceError::Defect(
                        "three odd components without tight cut, but underlying is not K3,3".into(),
                    ));
                }
                let cover = coloring_cover(g, t, r, "K3,3 underlying")?;
                return Ok(TraceNode {
                    kind: StepKind::K33Coloring,
                    graph: g.clone(),
                    cover,
                    detail: StepDetail::Plain,
                    children: Vec::new(),
                });
            }
            let separator = [vc.separator[0], vc.separator[1], vc.separator[2]];
            let mut rec = |child: &Multigraph, t: usize, r: usize| {
                recurse_minor_free(child, t, r, oracle, mode)
            };
            three_cut_split(g, t, r, separator, &comps, &mut rec)
        }
    }
}

// ---------------------------------------------------------------------------
// Crossing-number-one reduction
// ---------------------------------------------------------------------------

/// The node potential c_G: 0 for planar underlying graphs, otherwise the
/// minimum of mu(x,y)*mu(u,v) over valid one-crossing pairs.
pub fn crossing_potential(
    g: &Multigraph,
) -> Result<(usize, Option<(EdgeId, EdgeId)>), ReduceError> {
    let s = g.underlying_simple();
    if is_planar(&s) {
        return Ok((0, None));
    }
    let pairs = planarizing_pairs(&s);
    let mut best: Option<(usize, (EdgeId, EdgeId))> = None;
    for (e, f) in pairs {
        let (x, y) = s.endpoints(e);
        let (u, v) = s.endpoints(f);
        let score = g.mu(x, y) * g.mu(u, v);
        if best.as_ref().is_none_or(|&(b, _)| score < b) {
            best = Some((score, (e, f)));
        }
    }
    match best {
        Some((score, pair)) => Ok((score, Some(pair))),
        None => Err(ReduceError::Precondition(
            "underlying simple graph has crossing number at least 2".into(),
        )),
    }
}

/// Reduces an r-graph whose underlying simple graph has crossing number at
/// most one: planar instances go to the oracle; otherwise either a tight cut
/// containing all copies of the crossing pair splits the graph into planar
/// halves, or the pair is swapped and the cover repaired with Kempe switches.
pub fn reduce_crossing_one(
    g: &Multigraph,
    t: usize,
    r: usize,
    oracle: &PlanarOracle,
) -> Result<(PMCover, ReductionTrace), ReduceError> {
    check_entry(g, t, r)?;
    if crossing_at_most_one(g).verdict == CrossingVerdict::More {
        return Err(ReduceError::Precondition(
            "underlying simple graph has crossing number at least 2".into(),
        ));
    }
    let trace = recurse_cr1(g, t, r, oracle)?;
    finish(g, trace)
}

fn recurse_cr1(
    g: &Multigraph,
    t: usize,
    r: usize,
    oracle: &PlanarOracle,
) -> Result<TraceNode, ReduceError> {
    let (potential, pair) = crossing_potential(g)?;
    if pair.is_none() {
        let cover = oracle.solve(g, t, r)?;
        let reasons = validate_tr_pm_report(g, &cover);
        if !reasons.is_empty() {
            return Err(ReduceError::Defect(format!(
                "oracle cover invalid: {}",
                reasons.join("; ")
            )));
        }
        return Ok(TraceNode {
            kind: StepKind::PlanarOracle,
            graph: g.clone(),
            cover,
            detail: StepDetail::Plain,
            children: Vec::new(),
        });
    }
    let s = g.underlying_simple();
    let (es, fs) = pair.expect("non-planar node has a crossing pair");
    let (x, y) = s.endpoints(es);
    let (u, v) = s.endpoints(fs);
    let mut required = g.edge_ids_between(x, y);
    required.extend(g.edge_ids_between(u, v));
    required.sort_unstable();
    if let Some(cut) = find_tight_cut_containing(g, r, &required).map_err(defect_from_analysis)? {
        let mut rec = |child: &Multigraph, t: usize, r: usize| recurse_cr1(child, t, r, oracle);
        return tight_cut_split(g, t, r, cut, &mut rec);
    }
    // Swap e_xy, e_uv for f = xu, f' = yv.
    let e_xy = g.edge_ids_between(x, y)[0];
    let e_uv = g.edge_ids_between(u, v)[0];
    let (stripped, strip_map) = g.without_edges(&[e_xy, e_uv]);
    let addition = stripped.with_edges_added(&[(x, u), (y, v)])?;
    let swapped = addition.graph.clone();
    let f = addition.added[0];
    let f_prime = addition.added[1];
    let mut edge_to_parent: Vec<Option<EdgeId>> = vec![None; swapped.m()];
    for (stripped_id, &new_id) in addition.old_to_new.iter().enumerate() {
        edge_to_parent[new_id] = Some(strip_map[stripped_id]);
    }
    let verdict = verify_r_graph(&swapped, r).map_err(defect_from_analysis)?;
    if !verdict.is_r_graph {
        return Err(ReduceError::Defect("swapped graph is not an r-graph".into()));
    }
    if !swapped.is_connected() {
        return Err(ReduceError::Defect("swapped graph is disconnected".into()));
    }
    let (child_potential, _) = crossing_potential(&swapped)?;
    if child_potential >= potential {
        return Err(ReduceError::Defect(format!(
            "crossing potential did not descend: {potential} -> {child_potential}"
        )));
    }
    let child = recurse_cr1(&swapped, t, r, oracle)?;
    let mut detail = CrossingReduction {
        x,
        y,
        u,
        v,
        e_xy,
        e_uv,
        potential,
        child_potential,
        swapped,
        f,
        f_prime,
        edge_to_parent,
        conflicting: 0,
    };
    let cover = repair_crossing_swap(g, &mut detail, &child.cover)?;
    Ok(TraceNode {
        kind: StepKind::CrossingSwap,
        graph: g.clone(),
        cover,
        detail: StepDetail::Crossing(Box::new(detail)),
        children: vec![child],
    })
}

/// Translates a cover of the swapped graph back to the parent: matchings
/// with both new edges swap them for the original pair, matchings with
/// neither translate directly, and conflicting pairs are fixed by switching
/// the Kempe chain that starts at `x` (it must end in `u` or `v`).
pub fn repair_crossing_swap(
    g: &Multigraph,
    detail: &mut CrossingReduction,
    child_cover: &PMCover,
) -> Result<PMCover, ReduceError> {
    let t = child_cover.t;
    let translate = |m: &Matching, drop: &[EdgeId]| -> Result<Vec<EdgeId>, ReduceError> {
        let mut ids = Vec::with_capacity(m.edge_ids.len());
        for &e in &m.edge_ids {
            if drop.contains(&e) {
                continue;
            }
            match detail.edge_to_parent[e] {
                Some(p) => ids.push(p),
                None => {
                    return Err(ReduceError::Defect(
                        "matching uses a new edge outside the declared pair".into(),
                    ))
                }
            }
        }
        Ok(ids)
    };
    let f = detail.f;
    let fp = detail.f_prime;
    let mut f_only: Vec<usize> = Vec::new();
    let mut fp_only: Vec<usize> = Vec::new();
    let mut slots: Vec<Option<Matching>> = vec![None; child_cover.matchings.len()];
    for (i, m) in child_cover.matchings.iter().enumerate() {
        match (m.contains(f), m.contains(fp)) {
            (true, true) => {
                let mut ids = translate(m, &[f, fp])?;
                ids.push(detail.e_xy);
                ids.push(detail.e_uv);
                slots[i] = Some(checked_perfect(g, ids)?);
            }
            (false, false) => {
                slots[i] = Some(checked_perfect(g, translate(m, &[])?)?);
            }
            (true, false) => f_only.push(i),
            (false, true) => fp_only.push(i),
        }
    }
    if f_only.len() != fp_only.len() {
        return Err(ReduceError::Defect(format!(
            "conflicting-pair imbalance: {} vs {}",
            f_only.len(),
            fp_only.len()
        )));
    }
    if f_only.len() > t {
        return Err(ReduceError::Defect("more conflicting pairs than t".into()));
    }
    detail.conflicting = f_only.len();
    for (&i, &j) in f_only.iter().zip(fp_only.iter()) {
        let n = Matching::new(g, translate(&child_cover.matchings[i], &[f])?)
            .map_err(|e| ReduceError::Defect(e.to_string()))?;
        let np = Matching::new(g, translate(&child_cover.matchings[j], &[fp])?)
            .map_err(|e| ReduceError::Defect(e.to_string()))?;
        let chains = kempe_chains(g, &n, &np);
        let p1 = chains
            .iter()
            .find(|c| c.endpoints.contains(&detail.x))
            .ok_or_else(|| ReduceError::Defect("no Kempe chain starts at x".into()))?;
        let other = *p1
            .endpoints
            .iter()
            .find(|&&q| q != detail.x)
            .ok_or_else(|| ReduceError::Defect("chain has a single endpoint".into()))?;
        let (n2, np2) = kempe_switch(g, &n, &np, p1)
            .map_err(|e| ReduceError::Defect(format!("Kempe switch failed: {e}")))?;
        if other == detail.u {
            // n2 becomes perfect on g; np2 misses x, y, u, v.
            if !n2.perfect {
                return Err(ReduceError::Defect("switched matching should be perfect".into()));
            }
            let mut ids = np2.edge_ids.clone();
            ids.push(detail.e_xy);
            ids.push(detail.e_uv);
            slots[i] = Some(n2);
            slots[j] = Some(checked_perfect(g, ids)?);
        } else if other == detail.v {
            // n2 misses u, v; np2 misses x, y.
            let mut ids_n = n2.edge_ids.clone();
            ids_n.push(detail.e_uv);
            let mut ids_np = np2.edge_ids.clone();
            ids_np.push(detail.e_xy);
            slots[i] = Some(checked_perfect(g, ids_n)?);
            slots[j] = Some(checked_perfect(g, ids_np)?);
        } else {
            return Err(ReduceError::Defect(format!(
                "Kempe chain from x ends at vertex {other}; the planarity argument forbids this"
            )));
        }
    }
    let matchings: Vec<Matching> = slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| ReduceError::Defect("unfilled matching slot".into()))?;
    let cover = PMCover { t, r: child_cover.r, matchings };
    let reasons = validate_tr_pm_report(g, &cover);
    if !reasons.is_empty() {
        return Err(ReduceError::Defect(format!("repaired cover invalid: {}", reasons.join("; "))));
    }
    Ok(cover)
}

fn checked_perfect(g: &Multigraph, ids: Vec<EdgeId>) -> Result<Matching, ReduceError> {
    let m = Matching::new(g, ids).map_err(|e| ReduceError::Defect(e.to_string()))?;
    if !m.perfect {
        return Err(ReduceError::Defect("expected a perfect matching".into()));
    }
    Ok(m)
}

/// Recomputes every internal node's cover from its children and compares it
/// with the stored one; validates every node's cover against its graph.
pub fn replay_trace(node: &TraceNode) -> Result<(), ReduceError> {
    for child in &node.children {
        replay_trace(child)?;
    }
    let reasons = validate_tr_pm_report(&node.graph, &node.cover);
    if !reasons.is_empty() {
        return Err(ReduceError::Defect(format!(
            "trace node cover invalid: {}",
            reasons.join("; ")
        )));
    }
    let recomputed = match (&node.detail, node.children.len()) {
        (StepDetail::TightCut { cut }, 2) => Some(combine_across_tight_cut(
            &node.graph,
            cut,
            &node.children[0].cover,
            &node.children[1].cover,
        )?),
        (StepDetail::ThreeCut(split), 2) => Some(merge_three_cut(
            &node.graph,
            split,
            &node.children[0].cover,
            &node.children[1].cover,
        )?),
        (StepDetail::Crossing(cr), 1) => {
            let mut detail = (**cr).clone();
            Some(repair_crossing_swap(&node.graph, &mut detail, &node.children[0].cover)?)
        }
        _ => None,
    };
    if let Some(c) = recomputed {
        if c != node.cover {
            return Err(ReduceError::Defect("replayed cover differs from the stored one".into()));
        }
    }
    Ok(())
}
