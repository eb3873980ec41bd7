//! Versioned JSON certificates bound to a subject graph by its canonical
//! hash, plus the independent checker behind `rgraph check`.
//!
//! Kinds: `r-graph-verdict`, `edge-coloring`, `tr-pm`, `clique-sum-tree`,
//! `crossing`, `reduction-trace`. Every certificate re-verifies against the
//! referenced graph using the validators, never the producing searches.

use crate::canon::graph_hash;
use crate::format;
use crate::graph::{EdgeCut, EdgeId, Multigraph};
use crate::matching::{validate_tr_pm_report, EdgeColoring, Matching, PMCover};
use crate::minor::{
    crossing_at_most_one, is_planar, planarize_pair, CliqueSumTree, CrossingCertificate,
    CrossingVerdict, CsNode, ForbiddenMinor, LeafKind,
};
use crate::reduce::{
    replay_trace, CrossingReduction, StepDetail, StepKind, ThreeCutSide, ThreeCutSplit, TraceNode,
};
use crate::rgraph::RGraphVerdict;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("graph hash mismatch: certificate is for a different graph")]
    HashMismatch,
    #[error("unknown certificate kind {0:?}")]
    UnknownKind(String),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("certificate check failed: {0}")]
    Failed(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub kind: String,
    pub graph_hash: String,
    pub payload: Value,
}

impl Certificate {
    fn new(g: &Multigraph, kind: &str, payload: Value) -> Self {
        Certificate {
            schema: SCHEMA_VERSION,
            kind: kind.into(),
            graph_hash: graph_hash(g),
            payload,
        }
    }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

pub fn verdict_certificate(g: &Multigraph, v: &RGraphVerdict) -> Certificate {
    Certificate::new(
        g,
        "r-graph-verdict",
        json!({
            "r": v.r,
            "is_r_graph": v.is_r_graph,
            "witness": v.witness.as_ref().map(|c| json!({
                "side": c.side,
                "boundary": c.boundary,
            })),
        }),
    )
}

pub fn coloring_certificate(g: &Multigraph, c: &EdgeColoring) -> Certificate {
    Certificate::new(g, "edge-coloring", json!({ "k": c.k, "colors": c.colors }))
}

pub fn cover_certificate(g: &Multigraph, cover: &PMCover) -> Certificate {
    Certificate::new(g, "tr-pm", cover_payload(cover))
}

fn cover_payload(cover: &PMCover) -> Value {
    json!({
        "t": cover.t,
        "r": cover.r,
        "matchings": cover.matchings.iter().map(|m| m.edge_ids.clone()).collect::<Vec<_>>(),
    })
}

pub fn crossing_certificate(g: &Multigraph, c: &CrossingCertificate) -> Certificate {
    Certificate::new(
        g,
        "crossing",
        json!({
            "verdict": match c.verdict {
                CrossingVerdict::Planar => "planar",
                CrossingVerdict::OneCrossing => "one-crossing",
                CrossingVerdict::More => "more",
            },
            "crossing_pair": c.crossing_pair.map(|(e, f)| vec![e, f]),
        }),
    )
}

pub fn tree_certificate(g: &Multigraph, tree: &CliqueSumTree) -> Certificate {
    Certificate::new(
        g,
        "clique-sum-tree",
        json!({
            "forbidden": match tree.forbidden {
                ForbiddenMinor::K5 => "k5",
                ForbiddenMinor::K33 => "k33",
            },
            "root": tree_node_to_value(&tree.root),
        }),
    )
}

fn tree_node_to_value(node: &CsNode) -> Value {
    match node {
        CsNode::Leaf { kind, graph } => json!({
            "node": "leaf",
            "leaf": match kind {
                LeafKind::Planar => "planar",
                LeafKind::WagnerV8 => "wagner-v8",
                LeafKind::K5 => "k5",
            },
            "graph": format::to_text(graph),
        }),
        CsNode::Sum { graph, pasted, clique_edges_added, left, left_map, right, right_map } => {
            json!({
                "node": "sum",
                "graph": format::to_text(graph),
                "pasted": pasted,
                "clique_edges_added": clique_edges_added
                    .iter()
                    .map(|&(a, b)| vec![a, b])
                    .collect::<Vec<_>>(),
                "left": tree_node_to_value(left),
                "left_map": left_map,
                "right": tree_node_to_value(right),
                "right_map": right_map,
            })
        }
    }
}

pub fn trace_certificate(g: &Multigraph, trace: &TraceNode) -> Certificate {
    Certificate::new(g, "reduction-trace", trace_node_to_value(trace))
}

fn step_kind_name(kind: StepKind) -> &'static str {
    match kind {
        StepKind::TightCutSplit => "tight-cut-split",
        StepKind::TwoCutC4Direct => "two-cut-C4-direct",
        StepKind::ThreeCutSplit => "three-cut-split",
        StepKind::PlanarOracle => "planar-oracle",
        StepKind::V8Coloring => "V8-coloring",
        StepKind::K33Coloring => "K33-coloring",
        StepKind::CrossingSwap => "crossing-swap",
    }
}

fn step_kind_from_name(name: &str) -> Option<StepKind> {
    Some(match name {
        "tight-cut-split" => StepKind::TightCutSplit,
        "two-cut-C4-direct" => StepKind::TwoCutC4Direct,
        "three-cut-split" => StepKind::ThreeCutSplit,
        "planar-oracle" => StepKind::PlanarOracle,
        "V8-coloring" => StepKind::V8Coloring,
        "K33-coloring" => StepKind::K33Coloring,
        "crossing-swap" => StepKind::CrossingSwap,
        _ => return None,
    })
}

fn trace_node_to_value(node: &TraceNode) -> Value {
    let detail = match &node.detail {
        StepDetail::Plain => json!({ "type": "plain" }),
        StepDetail::TightCut { cut } => json!({
            "type": "tight-cut",
            "side": cut.side,
            "boundary": cut.boundary,
        }),
        StepDetail::ThreeCut(split) => json!({
            "type": "three-cut",
            "separator": split.separator,
            "sides": split.sides.iter().map(|s| json!({
                "component": s.component,
                "a": s.a, "b": s.b, "c": s.c,
                "d": s.d, "h": s.h, "k": s.k,
                "reduced": format::to_text(&s.reduced),
                "added_uv": s.added_uv,
                "added_vw": s.added_vw,
                "added_wu": s.added_wu,
                "edge_to_parent": s.edge_to_parent,
            })).collect::<Vec<_>>(),
        }),
        StepDetail::Crossing(cr) => json!({
            "type": "crossing-swap",
            "x": cr.x, "y": cr.y, "u": cr.u, "v": cr.v,
            "e_xy": cr.e_xy, "e_uv": cr.e_uv,
            "potential": cr.potential,
            "child_potential": cr.child_potential,
            "swapped": format::to_text(&cr.swapped),
            "f": cr.f, "f_prime": cr.f_prime,
            "edge_to_parent": cr.edge_to_parent,
            "conflicting": cr.conflicting,
        }),
    };
    json!({
        "step": step_kind_name(node.kind),
        "graph": format::to_text(&node.graph),
        "cover": cover_payload(&node.cover),
        "detail": detail,
        "children": node.children.iter().map(trace_node_to_value).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// Parsing back
// ---------------------------------------------------------------------------

fn get<'v>(v: &'v Value, key: &str) -> Result<&'v Value, CheckError> {
    v.get(key).ok_or_else(|| CheckError::Malformed(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, key: &str) -> Result<usize, CheckError> {
    get(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| CheckError::Malformed(format!("field {key:?} is not an integer")))
}

fn as_usize_vec(v: &Value, key: &str) -> Result<Vec<usize>, CheckError> {
    get(v, key)?
        .as_array()
        .ok_or_else(|| CheckError::Malformed(format!("field {key:?} is not an array")))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|y| y as usize)
                .ok_or_else(|| CheckError::Malformed(format!("field {key:?} has a non-integer")))
        })
        .collect()
}

fn as_graph(v: &Value, key: &str) -> Result<Multigraph, CheckError> {
    let text = get(v, key)?
        .as_str()
        .ok_or_else(|| CheckError::Malformed(format!("field {key:?} is not a string")))?;
    format::parse(text).map_err(|e| CheckError::Malformed(format!("bad graph in {key:?}: {e}")))
}

fn cover_from_payload(g: &Multigraph, v: &Value) -> Result<PMCover, CheckError> {
    let t = as_usize(v, "t")?;
    let r = as_usize(v, "r")?;
    let raw = get(v, "matchings")?
        .as_array()
        .ok_or_else(|| CheckError::Malformed("matchings is not an array".into()))?;
    let mut matchings = Vec::with_capacity(raw.len());
    for ids in raw {
        let ids: Vec<EdgeId> = ids
            .as_array()
            .ok_or_else(|| CheckError::Malformed("matching is not an array".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|y| y as usize)
                    .ok_or_else(|| CheckError::Malformed("edge id is not an integer".into()))
            })
            .collect::<Result<_, _>>()?;
        let m = Matching::new(g, ids)
            .map_err(|e| CheckError::Failed(format!("matching invalid: {e}")))?;
        matchings.push(m);
    }
    Ok(PMCover { t, r, matchings })
}

fn trace_node_from_value(v: &Value) -> Result<TraceNode, CheckError> {
    let kind_name = get(v, "step")?
        .as_str()
        .ok_or_else(|| CheckError::Malformed("step is not a string".into()))?;
    let kind = step_kind_from_name(kind_name)
        .ok_or_else(|| CheckError::Malformed(format!("unknown step kind {kind_name:?}")))?;
    let graph = as_graph(v, "graph")?;
    let cover = cover_from_payload(&graph, get(v, "cover")?)?;
    let detail_v = get(v, "detail")?;
    let dtype = get(detail_v, "type")?
        .as_str()
        .ok_or_else(|| CheckError::Malformed("detail type is not a string".into()))?;
    let detail = match dtype {
        "plain" => StepDetail::Plain,
        "tight-cut" => {
            let side = as_usize_vec(detail_v, "side")?;
            let boundary = as_usize_vec(detail_v, "boundary")?;
            let side_parity = (side.len() % 2) as u8;
            StepDetail::TightCut {
                cut: EdgeCut { side, boundary, side_parity, nontrivial_tight: true },
            }
        }
        "three-cut" => {
            let sep = as_usize_vec(detail_v, "separator")?;
            if sep.len() != 3 {
                return Err(CheckError::Malformed("separator must have 3 vertices".into()));
            }
            let sides_v = get(detail_v, "sides")?
                .as_array()
                .ok_or_else(|| CheckError::Malformed("sides is not an array".into()))?;
            if sides_v.len() != 2 {
                return Err(CheckError::Malformed("three-cut must have 2 sides".into()));
            }
            let parse_side = |sv: &Value| -> Result<ThreeCutSide, CheckError> {
                Ok(ThreeCutSide {
                    component: as_usize_vec(sv, "component")?,
                    a: as_usize(sv, "a")?,
                    b: as_usize(sv, "b")?,
                    c: as_usize(sv, "c")?,
                    d: as_usize(sv, "d")?,
                    h: as_usize(sv, "h")?,
                    k: as_usize(sv, "k")?,
                    reduced: as_graph(sv, "reduced")?,
                    added_uv: as_usize_vec(sv, "added_uv")?,
                    added_vw: as_usize_vec(sv, "added_vw")?,
                    added_wu: as_usize_vec(sv, "added_wu")?,
                    edge_to_parent: optional_usize_vec(sv, "edge_to_parent")?,
                })
            };
            StepDetail::ThreeCut(Box::new(ThreeCutSplit {
                separator: [sep[0], sep[1], sep[2]],
                sides: [parse_side(&sides_v[0])?, parse_side(&sides_v[1])?],
            }))
        }
        "crossing-swap" => StepDetail::Crossing(Box::new(CrossingReduction {
            x: as_usize(detail_v, "x")?,
            y: as_usize(detail_v, "y")?,
            u: as_usize(detail_v, "u")?,
            v: as_usize(detail_v, "v")?,
            e_xy: as_usize(detail_v, "e_xy")?,
            e_uv: as_usize(detail_v, "e_uv")?,
            potential: as_usize(detail_v, "potential")?,
            child_potential: as_usize(detail_v, "child_potential")?,
            swapped: as_graph(detail_v, "swapped")?,
            f: as_usize(detail_v, "f")?,
            f_prime: as_usize(detail_v, "f_prime")?,
            edge_to_parent: optional_usize_vec(detail_v, "edge_to_parent")?,
            conflicting: as_usize(detail_v, "conflicting")?,
        })),
        other => return Err(CheckError::Malformed(format!("unknown detail type {other:?}"))),
    };
    let children = get(v, "children")?
        .as_array()
        .ok_or_else(|| CheckError::Malformed("children is not an array".into()))?
        .iter()
        .map(trace_node_from_value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TraceNode { kind, graph, cover, detail, children })
}

fn optional_usize_vec(v: &Value, key: &str) -> Result<Vec<Option<usize>>, CheckError> {
    get(v, key)?
        .as_array()
        .ok_or_else(|| CheckError::Malformed(format!("field {key:?} is not an array")))?
        .iter()
        .map(|x| {
            if x.is_null() {
                Ok(None)
            } else {
                x.as_u64()
                    .map(|y| Some(y as usize))
                    .ok_or_else(|| CheckError::Malformed(format!("field {key:?} has a bad entry")))
            }
        })
        .collect()
}

fn tree_node_from_value(v: &Value) -> Result<CsNode, CheckError> {
    let tag = get(v, "node")?
        .as_str()
        .ok_or_else(|| CheckError::Malformed("node tag is not a string".into()))?;
    match tag {
        "leaf" => {
            let kind = match get(v, "leaf")?.as_str() {
                Some("planar") => LeafKind::Planar,
                Some("wagner-v8") => LeafKind::WagnerV8,
                Some("k5") => LeafKind::K5,
                other => return Err(CheckError::Malformed(format!("bad leaf kind {other:?}"))),
            };
            Ok(CsNode::Leaf { kind, graph: as_graph(v, "graph")? })
        }
        "sum" => {
            let added_raw = get(v, "clique_edges_added")?
                .as_array()
                .ok_or_else(|| CheckError::Malformed("clique_edges_added not an array".into()))?;
            let mut clique_edges_added = Vec::with_capacity(added_raw.len());
            for pair in added_raw {
                let pair = pair
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| CheckError::Malformed("clique edge is not a pair".into()))?;
                let a = pair[0].as_u64().ok_or_else(|| CheckError::Malformed("bad pair".into()))?;
                let b = pair[1].as_u64().ok_or_else(|| CheckError::Malformed("bad pair".into()))?;
                clique_edges_added.push((a as usize, b as usize));
            }
            Ok(CsNode::Sum {
                graph: as_graph(v, "graph")?,
                pasted: as_usize_vec(v, "pasted")?,
                clique_edges_added,
                left: Box::new(tree_node_from_value(get(v, "left")?)?),
                left_map: as_usize_vec(v, "left_map")?,
                right: Box::new(tree_node_from_value(get(v, "right")?)?),
                right_map: as_usize_vec(v, "right_map")?,
            })
        }
        other => Err(CheckError::Malformed(format!("unknown tree node {other:?}"))),
    }
}

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

/// Re-verifies a certificate against its subject graph using the independent
/// validators.
pub fn check_certificate(g: &Multigraph, cert: &Certificate) -> Result<(), CheckError> {
    if cert.schema != SCHEMA_VERSION {
        return Err(CheckError::Schema(cert.schema));
    }
    if cert.graph_hash != graph_hash(g) {
        return Err(CheckError::HashMismatch);
    }
    match cert.kind.as_str() {
        "r-graph-verdict" => check_verdict(g, &cert.payload),
        "edge-coloring" => check_coloring(g, &cert.payload),
        "tr-pm" => {
            let cover = cover_from_payload(g, &cert.payload)?;
            let reasons = validate_tr_pm_report(g, &cover);
            if reasons.is_empty() {
                Ok(())
            } else {
                Err(CheckError::Failed(reasons.join("; ")))
            }
        }
        "crossing" => check_crossing(g, &cert.payload),
        "clique-sum-tree" => check_tree(g, &cert.payload),
        "reduction-trace" => {
            let trace = trace_node_from_value(&cert.payload)?;
            if trace.graph != *g {
                return Err(CheckError::Failed("trace root is not the subject graph".into()));
            }
            replay_trace(&trace).map_err(|e| CheckError::Failed(e.to_string()))
        }
        other => Err(CheckError::UnknownKind(other.into())),
    }
}

fn check_verdict(g: &Multigraph, payload: &Value) -> Result<(), CheckError> {
    let r = as_usize(payload, "r")?;
    let claimed = get(payload, "is_r_graph")?
        .as_bool()
        .ok_or_else(|| CheckError::Malformed("is_r_graph is not a bool".into()))?;
    let witness = get(payload, "witness")?;
    if claimed {
        if !witness.is_null() {
            return Err(CheckError::Malformed("positive verdict carries a witness".into()));
        }
        let verdict = crate::rgraph::verify_r_graph(g, r)
            .map_err(|e| CheckError::Failed(e.to_string()))?;
        if verdict.is_r_graph {
            Ok(())
        } else {
            Err(CheckError::Failed("graph is not an r-graph".into()))
        }
    } else {
        // The witness certifies failure by direct recomputation.
        if witness.is_null() {
            return Err(CheckError::Malformed("negative verdict lacks a witness".into()));
        }
        let side = as_usize_vec(witness, "side")?;
        let boundary = as_usize_vec(witness, "boundary")?;
        if side.len() == g.n() {
            return if g.n() % 2 == 1 && boundary.is_empty() {
                Ok(())
            } else {
                Err(CheckError::Failed("full-set witness requires odd order".into()))
            };
        }
        let cut = g.boundary(&side).map_err(|e| CheckError::Failed(e.to_string()))?;
        if cut.boundary != boundary {
            return Err(CheckError::Failed("witness boundary does not match the graph".into()));
        }
        let certifies = (side.len() % 2 == 1 && boundary.len() < r)
            || (side.len() == 1 && g.degree(side[0]) != r);
        if certifies {
            Ok(())
        } else {
            Err(CheckError::Failed("witness does not certify the failure".into()))
        }
    }
}

fn check_coloring(g: &Multigraph, payload: &Value) -> Result<(), CheckError> {
    let k = as_usize(payload, "k")?;
    let colors = as_usize_vec(payload, "colors")?;
    if colors.len() != g.m() {
        return Err(CheckError::Failed("one color per edge required".into()));
    }
    if colors.iter().any(|&c| c >= k) {
        return Err(CheckError::Failed("color index out of range".into()));
    }
    let adj = g.adjacency();
    for lists in adj {
        let mut seen = std::collections::HashSet::new();
        for (_, e) in lists {
            if !seen.insert(colors[e]) {
                return Err(CheckError::Failed("adjacent edges share a color".into()));
            }
        }
    }
    Ok(())
}

fn check_crossing(g: &Multigraph, payload: &Value) -> Result<(), CheckError> {
    let verdict = get(payload, "verdict")?
        .as_str()
        .ok_or_else(|| CheckError::Malformed("verdict is not a string".into()))?;
    let s = g.underlying_simple();
    match verdict {
        "planar" => {
            if is_planar(&s) {
                Ok(())
            } else {
                Err(CheckError::Failed("graph is not planar".into()))
            }
        }
        "one-crossing" => {
            let pair = get(payload, "crossing_pair")?;
            let pair = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| CheckError::Malformed("one-crossing needs a pair".into()))?;
            let e = pair[0].as_u64().ok_or_else(|| CheckError::Malformed("bad pair".into()))?
                as usize;
            let f = pair[1].as_u64().ok_or_else(|| CheckError::Malformed("bad pair".into()))?
                as usize;
            if e >= s.m() || f >= s.m() {
                return Err(CheckError::Failed("pair ids out of range".into()));
            }
            if is_planar(&s) {
                return Err(CheckError::Failed("graph is planar, not one-crossing".into()));
            }
            if is_planar(&planarize_pair(&s, e, f)) {
                Ok(())
            } else {
                Err(CheckError::Failed("pair planarization is not planar".into()))
            }
        }
        "more" => {
            // Exhaustively confirm no single pair suffices.
            let recomputed = crossing_at_most_one(g);
            if recomputed.verdict == CrossingVerdict::More {
                Ok(())
            } else {
                Err(CheckError::Failed("a one-crossing certificate exists".into()))
            }
        }
        other => Err(CheckError::Malformed(format!("unknown verdict {other:?}"))),
    }
}

fn check_tree(g: &Multigraph, payload: &Value) -> Result<(), CheckError> {
    let forbidden = match get(payload, "forbidden")?.as_str() {
        Some("k5") => ForbiddenMinor::K5,
        Some("k33") => ForbiddenMinor::K33,
        other => return Err(CheckError::Malformed(format!("bad forbidden tag {other:?}"))),
    };
    let root = tree_node_from_value(get(payload, "root")?)?;
    if *root.graph() != g.underlying_simple() {
        return Err(CheckError::Failed("tree root is not the underlying simple graph".into()));
    }
    let max_pasted = match forbidden {
        ForbiddenMinor::K5 => 3,
        ForbiddenMinor::K33 => 2,
    };
    if root.max_pasted() > max_pasted {
        return Err(CheckError::Failed("pasted set exceeds the mode's bound".into()));
    }
    for (kind, _) in root.leaves() {
        match (forbidden, kind) {
            (ForbiddenMinor::K5, LeafKind::K5) => {
                return Err(CheckError::Failed("K5 leaf in K5-free mode".into()))
            }
            (ForbiddenMinor::K33, LeafKind::WagnerV8) => {
                return Err(CheckError::Failed("V8 leaf in K3,3-free mode".into()))
            }
            _ => {}
        }
    }
    crate::minor::verify_recomposition(&root).map_err(|e| CheckError::Failed(e.to_string()))
}

/// DOT rendering of a reduction trace (plain emitter; no layout hints).
pub fn trace_to_dot(trace: &TraceNode) -> String {
    let mut out = String::from("digraph reduction {\n  node [shape=box];\n");
    let mut counter = 0usize;
    fn walk(node: &TraceNode, counter: &mut usize, out: &mut String) -> usize {
        let id = *counter;
        *counter += 1;
        out.push_str(&format!(
            "  n{} [label=\"{}\\nn={} m={}\"];\n",
            id,
            step_kind_name(node.kind),
            node.graph.n(),
            node.graph.m()
        ));
        for child in &node.children {
            let cid = walk(child, counter, out);
            out.push_str(&format!("  n{id} -> n{cid};\n"));
        }
        id
    }
    walk(trace, &mut counter, &mut out);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matching::find_tr_pm;
    use crate::minor::wagner_decompose;
    use crate::reduce::{reduce_crossing_one, reduce_k5_free, PlanarOracle};
    use crate::rgraph::verify_r_graph;

    #[test]
    fn verdict_round_trip() {
        let g = fixtures::petersen();
        let v = verify_r_graph(&g, 3).unwrap();
        let cert = verdict_certificate(&g, &v);
        check_certificate(&g, &cert).unwrap();

        let bad = fixtures::bridged_cubic();
        let v = verify_r_graph(&bad, 3).unwrap();
        let cert = verdict_certificate(&bad, &v);
        check_certificate(&bad, &cert).unwrap();
    }

    #[test]
    fn hash_binding() {
        let g = fixtures::petersen();
        let v = verify_r_graph(&g, 3).unwrap();
        let cert = verdict_certificate(&g, &v);
        let other = fixtures::prism();
        assert!(matches!(check_certificate(&other, &cert), Err(CheckError::HashMismatch)));
    }

    #[test]
    fn cover_certificate_and_tamper() {
        let g = fixtures::petersen();
        let cover = find_tr_pm(&g, 2, 3, None).unwrap().unwrap();
        let cert = cover_certificate(&g, &cover);
        check_certificate(&g, &cert).unwrap();

        // Single-bit tamper: flip the low bit of one edge id.
        let mut bad = cert.clone();
        let id = bad.payload["matchings"][0][0].as_u64().unwrap();
        bad.payload["matchings"][0][0] = serde_json::json!(id ^ 1);
        assert!(check_certificate(&g, &bad).is_err());

        // Removing one edge from a matching is rejected too.
        let mut bad = cert.clone();
        bad.payload["matchings"][0].as_array_mut().unwrap().pop();
        assert!(check_certificate(&g, &bad).is_err());
    }

    #[test]
    fn coloring_certificate_checks() {
        let g = fixtures::wagner_v8();
        let col = crate::matching::edge_color(&g, 3).unwrap();
        let cert = coloring_certificate(&g, &col);
        check_certificate(&g, &cert).unwrap();
        let mut bad = cert.clone();
        bad.payload["colors"][0] = serde_json::json!(1);
        assert!(check_certificate(&g, &bad).is_err());
    }

    #[test]
    fn crossing_certificates_check() {
        for g in [fixtures::k33(), fixtures::prism(), fixtures::petersen()] {
            let c = crossing_at_most_one(&g);
            let cert = crossing_certificate(&g, &c);
            check_certificate(&g, &cert).unwrap();
        }
    }

    #[test]
    fn tree_certificate_checks() {
        let g = fixtures::wagner_v8();
        let tree = wagner_decompose(&g, ForbiddenMinor::K5).unwrap();
        let cert = tree_certificate(&g, &tree);
        check_certificate(&g, &cert).unwrap();

        let g = fixtures::three_book_r6();
        let tree = wagner_decompose(&g, ForbiddenMinor::K5).unwrap();
        let cert = tree_certificate(&g, &tree);
        check_certificate(&g, &cert).unwrap();
    }

    #[test]
    fn trace_certificate_checks() {
        let oracle = PlanarOracle::exact();
        let g = fixtures::prism();
        let (_, trace) = reduce_k5_free(&g, 1, 3, &oracle).unwrap();
        let cert = trace_certificate(&g, &trace);
        check_certificate(&g, &cert).unwrap();

        let g = fixtures::k33();
        let (_, trace) = reduce_crossing_one(&g, 1, 3, &oracle).unwrap();
        let cert = trace_certificate(&g, &trace);
        check_certificate(&g, &cert).unwrap();

        // Tampering with a stored cover breaks the replay.
        let mut bad = cert.clone();
        bad.payload["cover"]["matchings"][0][0] = serde_json::json!(99);
        assert!(check_certificate(&g, &bad).is_err());
    }

    #[test]
    fn dot_export_mentions_steps() {
        let oracle = PlanarOracle::exact();
        let g = fixtures::prism();
        let (_, trace) = reduce_k5_free(&g, 1, 3, &oracle).unwrap();
        let dot = trace_to_dot(&trace);
        assert!(dot.contains("digraph"));
        assert!(dot.contains("tight-cut-split"));
        assert!(dot.contains("planar-oracle"));
    }
}
