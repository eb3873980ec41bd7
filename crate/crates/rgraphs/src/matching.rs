//! Matching engine: perfect-matching enumeration, exact edge coloring,
//! (t,r)-perfect-matching covers, Kempe chains and switches.
//!
//! The cover search enumerates all perfect matchings first and then solves an
//! exact multiset cover over them; the validator shares no code with the
//! search and acts as the independent certificate checker.

use crate::graph::{EdgeId, Multigraph};
use crate::rgraph::{verify_r_graph, AnalysisError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatchingError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    /// Sorted edge ids.
    pub edge_ids: Vec<EdgeId>,
    pub perfect: bool,
}

impl Matching {
    /// Validates disjointness against `g` and computes the perfect flag.
    pub fn new(g: &Multigraph, mut ids: Vec<EdgeId>) -> Result<Self, MatchingError> {
        ids.sort_unstable();
        ids.dedup();
        let mut covered = vec![false; g.n()];
        for &e in &ids {
            if e >= g.m() {
                return Err(MatchingError::InvalidArgument(format!("edge id {e} out of range")));
            }
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                return Err(MatchingError::InvalidArgument(format!(
                    "edges share a vertex at edge {e}"
                )));
            }
            covered[u] = true;
            covered[v] = true;
        }
        let perfect = covered.iter().all(|&c| c);
        Ok(Matching { edge_ids: ids, perfect })
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edge_ids.binary_search(&e).is_ok()
    }

    /// Vertices covered by the matching.
    pub fn covered(&self, g: &Multigraph) -> Vec<usize> {
        let mut out = Vec::with_capacity(2 * self.edge_ids.len());
        for &e in &self.edge_ids {
            let (u, v) = g.endpoints(e);
            out.push(u);
            out.push(v);
        }
        out.sort_unstable();
        out
    }
}

/// A multiset of t*r perfect matchings covering every edge exactly t times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PMCover {
    pub t: usize,
    pub r: usize,
    pub matchings: Vec<Matching>,
}

/// A proper edge coloring with colors 0..k.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub k: usize,
    /// Color of each edge, indexed by edge id.
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// Color classes as matchings (perfect ones for class-1 regular graphs).
    pub fn classes(&self, g: &Multigraph) -> Vec<Matching> {
        (0..self.k)
            .map(|c| {
                let ids: Vec<EdgeId> =
                    (0..g.m()).filter(|&e| self.colors[e] == c).collect();
                Matching::new(g, ids).expect("proper coloring gives matchings")
            })
            .collect()
    }
}

/// All perfect matchings as distinct edge-id sets, in lexicographic order of
/// the sorted id vectors; truncated at `limit` when given. Parallel edges
/// give distinct matchings.
pub fn enumerate_perfect_matchings(g: &Multigraph, limit: Option<usize>) -> Vec<Matching> {
    if g.n() % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if g.n() == 0 {
        out.push(Matching { edge_ids: Vec::new(), perfect: true });
        return out;
    }
    let adj = g.adjacency();
    let mut covered = vec![false; g.n()];
    let mut chosen: Vec<EdgeId> = Vec::new();
    enumerate_pm_rec(&adj, &mut covered, &mut chosen, &mut out, limit);
    // Picking the least uncovered vertex and scanning its incident ids in
    // ascending order yields lexicographic order already.
    debug_assert!(out.windows(2).all(|w| w[0].edge_ids < w[1].edge_ids));
    out
}

fn enumerate_pm_rec(
    adj: &[Vec<(usize, EdgeId)>],
    covered: &mut Vec<bool>,
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<Matching>,
    limit: Option<usize>,
) {
    if let Some(cap) = limit {
        if out.len() >= cap {
            return;
        }
    }
    let v = match covered.iter().position(|&c| !c) {
        None => {
            out.push(Matching { edge_ids: chosen.clone(), perfect: true });
            return;
        }
        Some(v) => v,
    };
    let mut edges: Vec<(usize, EdgeId)> =
        adj[v].iter().copied().filter(|&(u, _)| !covered[u]).collect();
    edges.sort_by_key(|&(_, e)| e);
    for (u, e) in edges {
        covered[v] = true;
        covered[u] = true;
        chosen.push(e);
        enumerate_pm_rec(adj, covered, chosen, out, limit);
        chosen.pop();
        covered[v] = false;
        covered[u] = false;
    }
}

/// Exact k-edge-coloring by backtracking in canonical edge order with
/// color-symmetry breaking: an edge may only open one new color index.
pub fn edge_color(g: &Multigraph, k: usize) -> Option<EdgeColoring> {
    if k == 0 {
        return if g.m() == 0 { Some(EdgeColoring { k, colors: Vec::new() }) } else { None };
    }
    if g.degrees().iter().any(|&d| d > k) {
        return None;
    }
    let mut colors = vec![usize::MAX; g.m()];
    // Per-vertex bitmask of colors in use; k <= 64.
    assert!(k <= 64, "edge coloring supports k <= 64");
    let mut used = vec![0u64; g.n()];
    if color_rec(g, k, 0, 0, &mut colors, &mut used) {
        Some(EdgeColoring { k, colors })
    } else {
        None
    }
}

fn color_rec(
    g: &Multigraph,
    k: usize,
    e: EdgeId,
    max_used: usize,
    colors: &mut Vec<usize>,
    used: &mut Vec<u64>,
) -> bool {
    if e == g.m() {
        return true;
    }
    let (u, v) = g.endpoints(e);
    let cap = k.min(max_used + 1);
    for c in 0..cap {
        let bit = 1u64 << c;
        if used[u] & bit != 0 || used[v] & bit != 0 {
            continue;
        }
        colors[e] = c;
        used[u] |= bit;
        used[v] |= bit;
        if color_rec(g, k, e + 1, max_used.max(c + 1), colors, used) {
            return true;
        }
        used[u] &= !bit;
        used[v] &= !bit;
        colors[e] = usize::MAX;
    }
    false
}

/// Whether an r-regular graph admits a proper r-edge-coloring.
pub fn is_class1(g: &Multigraph, r: usize) -> bool {
    edge_color(g, r).is_some()
}

/// Exact (t,r)-perfect-matching cover search: enumerate perfect matchings,
/// then find a nonnegative multiplicity vector covering each edge exactly t
/// times. Returns `Ok(None)` only after exhausting the space; a node budget
/// turns long runs into an explicit error.
pub fn find_tr_pm(
    g: &Multigraph,
    t: usize,
    r: usize,
    budget: Option<u64>,
) -> Result<Option<PMCover>, MatchingError> {
    if t == 0 {
        return Err(MatchingError::InvalidArgument("t must be at least 1".into()));
    }
    let verdict = verify_r_graph(g, r)?;
    if !verdict.is_r_graph {
        return Err(MatchingError::PreconditionViolation(format!("input is not a {r}-graph")));
    }
    let pms = enumerate_perfect_matchings(g, None);
    if g.n() == 0 {
        return Ok(Some(PMCover { t, r, matchings: Vec::new() }));
    }
    if pms.is_empty() {
        return Ok(None);
    }
    // For each edge, the matchings containing it, and suffix counts for
    // demand pruning.
    let m = g.m();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (j, pm) in pms.iter().enumerate() {
        for &e in &pm.edge_ids {
            containing[e].push(j);
        }
    }
    if containing.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    // supply[e][j] = how many of the matchings with index >= j contain e,
    // stored sparsely: supply_from(e, j) computed by binary search.
    let mut residual = vec![t; m];
    let mut mult = vec![0usize; pms.len()];
    let mut nodes = 0u64;
    let found = cover_rec(
        &pms,
        &containing,
        0,
        &mut residual,
        &mut mult,
        &mut nodes,
        budget,
    )?;
    if !found {
        return Ok(None);
    }
    let mut matchings = Vec::with_capacity(t * r);
    for (j, &k) in mult.iter().enumerate() {
        for _ in 0..k {
            matchings.push(pms[j].clone());
        }
    }
    debug_assert_eq!(matchings.len(), t * r);
    Ok(Some(PMCover { t, r, matchings }))
}

fn cover_rec(
    pms: &[Matching],
    containing: &[Vec<usize>],
    j: usize,
    residual: &mut Vec<usize>,
    mult: &mut Vec<usize>,
    nodes: &mut u64,
    budget: Option<u64>,
) -> Result<bool, MatchingError> {
    *nodes += 1;
    if let Some(cap) = budget {
        if *nodes > cap {
            return Err(MatchingError::BudgetExceeded { nodes: *nodes });
        }
    }
    // Feasibility: every unmet edge must have enough remaining supply.
    for (e, &res) in residual.iter().enumerate() {
        if res > 0 {
            let remaining = containing[e].len() - lower_bound(&containing[e], j);
            if remaining == 0 {
                return Ok(false);
            }
        }
    }
    if residual.iter().all(|&r| r == 0) {
        return Ok(true);
    }
    if j == pms.len() {
        return Ok(false);
    }
    let cap = pms[j].edge_ids.iter().map(|&e| residual[e]).min().unwrap_or(0);
    // Largest multiplicity first reaches covers quickly; the order is fixed,
    // so results stay reproducible.
    for k in (0..=cap).rev() {
        for &e in &pms[j].edge_ids {
            residual[e] -= k;
        }
        mult[j] = k;
        let ok = cover_rec(pms, containing, j + 1, residual, mult, nodes, budget)?;
        for &e in &pms[j].edge_ids {
            residual[e] += k;
        }
        if ok {
            return Ok(true);
        }
        mult[j] = 0;
    }
    Ok(false)
}

fn lower_bound(v: &[usize], x: usize) -> usize {
    v.partition_point(|&y| y < x)
}

/// Independent certificate checker for (t,r)-PM covers. Returns the list of
/// violated conditions; empty means valid.
pub fn validate_tr_pm_report(g: &Multigraph, cover: &PMCover) -> Vec<String> {
    let mut reasons = Vec::new();
    if cover.t == 0 || cover.r == 0 {
        reasons.push("t and r must be positive".into());
        return reasons;
    }
    if cover.matchings.len() != cover.t * cover.r {
        reasons.push(format!(
            "expected {} matchings, found {}",
            cover.t * cover.r,
            cover.matchings.len()
        ));
    }
    let mut counts = vec![0usize; g.m()];
    for (i, m) in cover.matchings.iter().enumerate() {
        let mut covered = vec![false; g.n()];
        let mut ok = true;
        for &e in &m.edge_ids {
            if e >= g.m() {
                reasons.push(format!("matching {i}: edge id {e} out of range"));
                ok = false;
                continue;
            }
            counts[e] += 1;
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                reasons.push(format!("matching {i}: edges share a vertex"));
                ok = false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        if ok && !covered.iter().all(|&c| c) {
            reasons.push(format!("matching {i}: not perfect"));
        }
    }
    for (e, &c) in counts.iter().enumerate() {
        if c != cover.t {
            reasons.push(format!("edge {e} covered {c} times, expected {}", cover.t));
        }
    }
    reasons
}

pub fn validate_tr_pm(g: &Multigraph, cover: &PMCover) -> bool {
    validate_tr_pm_report(g, cover).is_empty()
}

/// A maximal alternating path or cycle of the symmetric difference of two
/// matchings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeChain {
    /// Edge ids along the walk, in traversal order.
    pub edges: Vec<EdgeId>,
    /// 0 endpoints for a cycle, 2 for a path (vertices covered by exactly one
    /// of the two matchings).
    pub endpoints: Vec<usize>,
}

/// Connected components of the symmetric difference of two matchings, ordered
/// by least edge id.
pub fn kempe_chains(g: &Multigraph, m1: &Matching, m2: &Matching) -> Vec<KempeChain> {
    let mut sym: Vec<EdgeId> = Vec::new();
    for &e in &m1.edge_ids {
        if !m2.contains(e) {
            sym.push(e);
        }
    }
    for &e in &m2.edge_ids {
        if !m1.contains(e) {
            sym.push(e);
        }
    }
    sym.sort_unstable();
    // Degree <= 2 per vertex; walk each component once.
    let mut incident: std::collections::HashMap<usize, Vec<EdgeId>> = std::collections::HashMap::new();
    for &e in &sym {
        let (u, v) = g.endpoints(e);
        incident.entry(u).or_default().push(e);
        incident.entry(v).or_default().push(e);
    }
    let mut used: std::collections::HashSet<EdgeId> = std::collections::HashSet::new();
    let mut chains = Vec::new();
    for &start_edge in &sym {
        if used.contains(&start_edge) {
            continue;
        }
        // Find a path endpoint in this component if one exists, else walk the
        // cycle from the least edge.
        let comp = component_edges(g, &incident, start_edge);
        let mut degree: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for &e in &comp {
            let (u, v) = g.endpoints(e);
            *degree.entry(u).or_insert(0) += 1;
            *degree.entry(v).or_insert(0) += 1;
        }
        let mut endpoints: Vec<usize> =
            degree.iter().filter(|&(_, &d)| d == 1).map(|(&v, _)| v).collect();
        endpoints.sort_unstable();
        let walk_start = endpoints.first().copied().unwrap_or_else(|| {
            let (u, v) = g.endpoints(comp[0]);
            u.min(v)
        });
        let ordered = walk_from(g, &incident, walk_start, &comp);
        for &e in &ordered {
            used.insert(e);
        }
        chains.push(KempeChain { edges: ordered, endpoints });
    }
    chains.sort_by_key(|c| c.edges.iter().min().copied().unwrap_or(usize::MAX));
    chains
}

fn component_edges(
    g: &Multigraph,
    incident: &std::collections::HashMap<usize, Vec<EdgeId>>,
    start: EdgeId,
) -> Vec<EdgeId> {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(e) = stack.pop() {
        if !seen.insert(e) {
            continue;
        }
        out.push(e);
        let (u, v) = g.endpoints(e);
        for w in [u, v] {
            if let Some(list) = incident.get(&w) {
                for &f in list {
                    if !seen.contains(&f) {
                        stack.push(f);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn walk_from(
    g: &Multigraph,
    incident: &std::collections::HashMap<usize, Vec<EdgeId>>,
    start: usize,
    comp: &[EdgeId],
) -> Vec<EdgeId> {
    let comp_set: std::collections::HashSet<EdgeId> = comp.iter().copied().collect();
    let mut ordered = Vec::with_capacity(comp.len());
    let mut used = std::collections::HashSet::new();
    let mut at = start;
    loop {
        let next = incident
            .get(&at)
            .and_then(|list| {
                let mut candidates: Vec<EdgeId> = list
                    .iter()
                    .copied()
                    .filter(|e| comp_set.contains(e) && !used.contains(e))
                    .collect();
                candidates.sort_unstable();
                candidates.first().copied()
            });
        match next {
            None => break,
            Some(e) => {
                used.insert(e);
                ordered.push(e);
                let (u, v) = g.endpoints(e);
                at = if u == at { v } else { u };
            }
        }
    }
    ordered
}

/// Exchanges the two matchings' edges along one chain. The chain must be a
/// maximal component of the symmetric difference.
pub fn kempe_switch(
    g: &Multigraph,
    m1: &Matching,
    m2: &Matching,
    chain: &KempeChain,
) -> Result<(Matching, Matching), MatchingError> {
    let chains = kempe_chains(g, m1, m2);
    if !chains.iter().any(|c| {
        let mut a = c.edges.clone();
        let mut b = chain.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }) {
        return Err(MatchingError::InvalidArgument(
            "chain is not a component of the symmetric difference".into(),
        ));
    }
    let chain_set: std::collections::HashSet<EdgeId> = chain.edges.iter().copied().collect();
    let swap = |m: &Matching, other: &Matching| -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> =
            m.edge_ids.iter().copied().filter(|e| !chain_set.contains(e)).collect();
        ids.extend(other.edge_ids.iter().copied().filter(|e| chain_set.contains(e)));
        ids
    };
    let n1 = Matching::new(g, swap(m1, m2))?;
    let n2 = Matching::new(g, swap(m2, m1))?;
    Ok((n1, n2))
}
