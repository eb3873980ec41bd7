//! Topological recognizers: planarity, K5/K3,3 minor containment, the
//! crossing-number-at-most-one decision, clique-sum decomposition, and the
//! splittable 3-cut finder.
//!
//! Planarity is a face-tracking incremental embedding over biconnected
//! blocks (fragments with the fewest admissible faces embedded first). Minor
//! containment is exact branch-and-reduce: low-degree elimination, component
//! and block splitting, subgraph base cases, then delete/contract branching
//! memoized on canonical forms. The two never call each other, so planarity
//! can be cross-checked against the minor characterization.

use crate::canon;
use crate::graph::{EdgeId, GraphError, Multigraph, VertexCut};
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("precondition violation: {msg}")]
    PreconditionViolation { msg: String, minor_witness: Option<Vec<Vec<usize>>> },
    #[error("internal: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---------------------------------------------------------------------------
// Planarity
// ---------------------------------------------------------------------------

/// Planarity of the underlying simple graph.
pub fn is_planar(g: &Multigraph) -> bool {
    let s = g.underlying_simple();
    for comp in s.components() {
        if comp.len() < 3 {
            continue;
        }
        let (sub, _, _) = s.induced(&comp);
        for block_verts in blocks(&sub) {
            if block_verts.len() < 3 {
                continue;
            }
            let (block, _, _) = sub.induced(&block_verts);
            if !embed_block(&block) {
                return false;
            }
        }
    }
    true
}

/// Vertex sets of the biconnected blocks of a connected simple graph.
fn blocks(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new(); // edge stack
    let mut timer = 0usize;

    // Iterative DFS to avoid recursion limits on paths.
    struct Frame {
        v: usize,
        parent: usize,
        next: usize,
    }
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut frames = vec![Frame { v: root, parent: usize::MAX, next: 0 }];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(top) = frames.last_mut() {
            let v = top.v;
            if top.next < adj[v].len() {
                let (u, _) = adj[v][top.next];
                top.next += 1;
                if disc[u] == usize::MAX {
                    stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    frames.push(Frame { v: u, parent: v, next: 0 });
                } else if u != top.parent && disc[u] < disc[v] {
                    stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                let parent = top.parent;
                frames.pop();
                if let Some(pframe) = frames.last() {
                    let p = pframe.v;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // Pop one block.
                        let mut verts = std::collections::BTreeSet::new();
                        while let Some(&(a, b)) = stack.last() {
                            if disc[a] >= disc[v] || (a == p && b == v) {
                                stack.pop();
                                verts.insert(a);
                                verts.insert(b);
                                if a == p && b == v {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !verts.is_empty() {
                            out.push(verts.into_iter().collect());
                        }
                    }
                }
                let _ = parent;
            }
        }
    }
    out
}

/// Incremental face-tracking embedding of a 2-connected simple graph.
fn embed_block(g: &Multigraph) -> bool {
    let n = g.n();
    let m = g.m();
    if n < 5 {
        return true; // K4 and smaller are planar
    }
    if m > 3 * n - 6 {
        return false;
    }
    let adj = g.adjacency();
    // Initial cycle by DFS.
    let cycle = match find_cycle(g, &adj) {
        Some(c) => c,
        None => return true, // acyclic blocks are trivial
    };
    let mut embedded_v = vec![false; n];
    let mut embedded_e = vec![false; m];
    for &v in &cycle {
        embedded_v[v] = true;
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_e[edge_between(g, &adj, a, b)] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut remaining = m - cycle.len();
    while remaining > 0 {
        let frags = fragments(g, &adj, &embedded_v, &embedded_e);
        debug_assert!(!frags.is_empty());
        // Admissible faces per fragment.
        let mut choice: Option<(usize, Vec<usize>)> = None; // (fragment idx, admissible faces)
        for (i, frag) in frags.iter().enumerate() {
            let adm: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(fi, _)| fi)
                .collect();
            if adm.is_empty() {
                return false;
            }
            if choice.as_ref().is_none_or(|(_, best)| adm.len() < best.len()) {
                choice = Some((i, adm));
            }
        }
        let (fi, adm) = choice.unwrap();
        let frag = &frags[fi];
        let path = fragment_path(g, &adj, frag);
        let face_idx = adm[0];
        split_face(&mut faces, face_idx, &path);
        // Mark path embedded.
        for w in &path {
            embedded_v[*w] = true;
        }
        for pair in path.windows(2) {
            let e = edge_between(g, &adj, pair[0], pair[1]);
            if !embedded_e[e] {
                embedded_e[e] = true;
                remaining -= 1;
            }
        }
    }
    true
}

fn edge_between(g: &Multigraph, adj: &[Vec<(usize, EdgeId)>], a: usize, b: usize) -> EdgeId {
    let _ = g;
    adj[a].iter().find(|&&(u, _)| u == b).map(|&(_, e)| e).expect("adjacent")
}

fn find_cycle(g: &Multigraph, adj: &[Vec<(usize, EdgeId)>]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 on path, 2 done
    let mut path: Vec<usize> = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    state[0] = 1;
    path.push(0);
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if *next < adj[v].len() {
            let (u, _) = adj[v][*next];
            *next += 1;
            if u == parent[v] {
                continue;
            }
            if state[u] == 1 {
                // Cycle: path suffix from u to v.
                let pos = path.iter().position(|&x| x == u).unwrap();
                return Some(path[pos..].to_vec());
            }
            if state[u] == 0 {
                parent[u] = v;
                state[u] = 1;
                path.push(u);
                stack.push((u, 0));
            }
        } else {
            state[v] = 2;
            path.pop();
            stack.pop();
        }
    }
    None
}

struct PlanarFragment {
    attachments: Vec<usize>,
    kind: FragKind,
}

enum FragKind {
    Chord(usize, usize),
    Component(Vec<usize>),
}

fn fragments(
    g: &Multigraph,
    adj: &[Vec<(usize, EdgeId)>],
    embedded_v: &[bool],
    embedded_e: &[bool],
) -> Vec<PlanarFragment> {
    let n = g.n();
    let mut out = Vec::new();
    for (e, u, v) in g.edges() {
        if !embedded_e[e] && embedded_v[u] && embedded_v[v] {
            out.push(PlanarFragment { attachments: vec![u.min(v), u.max(v)], kind: FragKind::Chord(u, v) });
        }
    }
    let removed: Vec<bool> = (0..n).map(|v| embedded_v[v]).collect();
    for comp in g.components_without(&removed) {
        let mut att = std::collections::BTreeSet::new();
        for &w in &comp {
            for &(u, _) in &adj[w] {
                if embedded_v[u] {
                    att.insert(u);
                }
            }
        }
        out.push(PlanarFragment {
            attachments: att.into_iter().collect(),
            kind: FragKind::Component(comp),
        });
    }
    out
}

/// A path through the fragment between its two first attachments.
fn fragment_path(_g: &Multigraph, adj: &[Vec<(usize, EdgeId)>], frag: &PlanarFragment) -> Vec<usize> {
    match &frag.kind {
        FragKind::Chord(u, v) => vec![*u, *v],
        FragKind::Component(interior) => {
            let a = frag.attachments[0];
            let b = frag.attachments[1];
            // BFS from a through the interior to b.
            let allowed: std::collections::HashSet<usize> = interior.iter().copied().collect();
            let mut prev: HashMap<usize, usize> = HashMap::new();
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(a);
            'bfs: while let Some(x) = queue.pop_front() {
                for &(y, _) in &adj[x] {
                    if y == b && x != a {
                        prev.insert(b, x);
                        break 'bfs;
                    }
                    if allowed.contains(&y) && !prev.contains_key(&y) && y != a {
                        prev.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            let mut path = vec![b];
            let mut at = b;
            while at != a {
                at = prev[&at];
                path.push(at);
            }
            path.reverse();
            debug_assert!(path.len() >= 3);
            path
        }
    }
}

/// Splits face `fi` along `path` (whose ends lie on the face).
fn split_face(faces: &mut Vec<Vec<usize>>, fi: usize, path: &[usize]) {
    let face = faces.swap_remove(fi);
    let a = path[0];
    let b = path[path.len() - 1];
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let l = face.len();
    let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
    // Walk a -> b along the face, then b -> a back along the path.
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % l;
    }
    f1.extend(interior.iter().rev().copied());
    // Walk b -> a along the face, then a -> b along the path.
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % l;
    }
    f2.extend(interior.iter().copied());
    faces.push(f1);
    faces.push(f2);
}

// ---------------------------------------------------------------------------
// Minor containment
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ForbiddenMinor {
    K5,
    K33,
}

impl ForbiddenMinor {
    fn order(self) -> usize {
        match self {
            ForbiddenMinor::K5 => 5,
            ForbiddenMinor::K33 => 6,
        }
    }
    fn size(self) -> usize {
        match self {
            ForbiddenMinor::K5 => 10,
            ForbiddenMinor::K33 => 9,
        }
    }
    pub fn tag(self) -> u8 {
        match self {
            ForbiddenMinor::K5 => 0,
            ForbiddenMinor::K33 => 1,
        }
    }
}

thread_local! {
    static MINOR_MEMO: RefCell<HashMap<(Vec<u8>, u8), bool>> = RefCell::new(HashMap::new());
}

pub fn has_k5_minor(g: &Multigraph) -> bool {
    has_minor(g, ForbiddenMinor::K5)
}

pub fn has_k33_minor(g: &Multigraph) -> bool {
    has_minor(g, ForbiddenMinor::K33)
}

/// Exact minor containment on the underlying simple graph.
pub fn has_minor(g: &Multigraph, which: ForbiddenMinor) -> bool {
    let s = g.underlying_simple();
    MINOR_MEMO.with(|memo| decide_minor(&s, which, &mut memo.borrow_mut()))
}

/// Adjacency bitmask rows of a simple graph; requires n <= 64.
fn adj_masks(g: &Multigraph) -> Vec<u64> {
    assert!(g.n() <= 64, "minor search supports n <= 64");
    let mut rows = vec![0u64; g.n()];
    for (_, u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn has_clique5(rows: &[u64]) -> bool {
    let n = rows.len();
    // Greedy-free exact search over 5-cliques.
    fn extend(rows: &[u64], candidates: u64, depth: usize, from: usize) -> bool {
        if depth == 0 {
            return true;
        }
        let n = rows.len();
        for v in from..n {
            if candidates >> v & 1 == 1
                && (candidates & rows[v]).count_ones() as usize >= depth - 1
                    && extend(rows, candidates & rows[v], depth - 1, v + 1)
                {
                    return true;
                }
        }
        false
    }
    extend(rows, (1u64 << n) - 1, 5, 0)
}

#[allow(clippy::needless_range_loop)]
fn has_k33_subgraph(rows: &[u64]) -> bool {
    let n = rows.len();
    for a in 0..n {
        for b in (a + 1)..n {
            let nab = rows[a] & rows[b];
            if nab.count_ones() < 3 {
                continue;
            }
            for c in (b + 1)..n {
                let common = nab & rows[c];
                if common.count_ones() >= 3 {
                    return true;
                }
            }
        }
    }
    false
}

fn simplified_pairs(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = g.edges().map(|(_, u, v)| (u, v)).collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Removes degree-0/1 vertices and suppresses degree-2 vertices until the
/// minimum degree is 3; relabels densely. Sound for targets of minimum
/// degree 3 (both K5 and K3,3).
fn reduce_for_minor(g: &Multigraph) -> Multigraph {
    let mut pairs = simplified_pairs(g);
    let mut n = g.n();
    loop {
        let mut deg = vec![0usize; n];
        for &(u, v) in &pairs {
            deg[u] += 1;
            deg[v] += 1;
        }
        if let Some(v) = (0..n).find(|&v| deg[v] <= 1) {
            pairs.retain(|&(a, b)| a != v && b != v);
            pairs = relabel_without(&pairs, v, &mut n);
            continue;
        }
        if let Some(v) = (0..n).find(|&v| deg[v] == 2) {
            let nbrs: Vec<usize> = pairs
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .map(|&(a, b)| if a == v { b } else { a })
                .collect();
            let (x, y) = (nbrs[0], nbrs[1]);
            pairs.retain(|&(a, b)| a != v && b != v);
            if x != y {
                pairs.push((x.min(y), x.max(y)));
            }
            pairs.sort_unstable();
            pairs.dedup();
            pairs = relabel_without(&pairs, v, &mut n);
            continue;
        }
        break;
    }
    Multigraph::new(n, pairs).expect("reduction preserves validity")
}

fn relabel_without(pairs: &[(usize, usize)], gone: usize, n: &mut usize) -> Vec<(usize, usize)> {
    let shift = |x: usize| if x > gone { x - 1 } else { x };
    *n -= 1;
    pairs.iter().map(|&(a, b)| (shift(a), shift(b))).collect()
}

fn decide_minor(g: &Multigraph, which: ForbiddenMinor, memo: &mut HashMap<(Vec<u8>, u8), bool>) -> bool {
    let g = reduce_for_minor(g);
    if g.n() < which.order() || g.m() < which.size() {
        return false;
    }
    // Components, then blocks: a 3-connected target sits inside one block.
    let comps = g.components();
    if comps.len() > 1 {
        return comps.iter().any(|c| {
            let (sub, _, _) = g.induced(c);
            decide_minor(&sub, which, memo)
        });
    }
    let blks = blocks(&g);
    if blks.len() > 1 {
        return blks.iter().any(|b| {
            let (sub, _, _) = g.induced(b);
            decide_minor(&sub, which, memo)
        });
    }
    let rows = adj_masks(&g);
    let hit = match which {
        ForbiddenMinor::K5 => has_clique5(&rows),
        ForbiddenMinor::K33 => has_k33_subgraph(&rows),
    };
    if hit {
        return true;
    }
    if g.n() == which.order() {
        return false;
    }
    let key = (canon::canonical_encoding(&g), which.tag());
    if let Some(&ans) = memo.get(&key) {
        return ans;
    }
    let pairs = simplified_pairs(&g);
    let mut answer = false;
    // Contractions first: they reach dense witnesses fastest.
    for &(u, v) in &pairs {
        let contracted = contract_simple(&g, u, v);
        if decide_minor(&contracted, which, memo) {
            answer = true;
            break;
        }
    }
    if !answer {
        for i in 0..pairs.len() {
            let mut rest = pairs.clone();
            rest.remove(i);
            let deleted = Multigraph::new(g.n(), rest).expect("valid");
            if decide_minor(&deleted, which, memo) {
                answer = true;
                break;
            }
        }
    }
    memo.insert(key, answer);
    answer
}

fn contract_simple(g: &Multigraph, u: usize, v: usize) -> Multigraph {
    // Merge v into u, drop loops and parallels, relabel densely.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (_, a, b) in g.edges() {
        let a2 = if a == v { u } else { a };
        let b2 = if b == v { u } else { b };
        if a2 != b2 {
            pairs.push((a2.min(b2), a2.max(b2)));
        }
    }
    let mut n = g.n();
    let pairs = relabel_without(&pairs, v, &mut n);
    let mut pairs = pairs;
    pairs.sort_unstable();
    pairs.dedup();
    Multigraph::new(n, pairs).expect("valid")
}

/// Explicit branch sets witnessing an H-minor, in the labels of `g`'s
/// underlying simple graph. Positive answers are re-derived without the memo
/// (negative entries are still used for pruning).
pub fn find_minor_model(g: &Multigraph, which: ForbiddenMinor) -> Option<Vec<Vec<usize>>> {
    let s = g.underlying_simple();
    let sets: Vec<Vec<usize>> = (0..s.n()).map(|v| vec![v]).collect();
    MINOR_MEMO.with(|memo| model_search(&s, sets, which, &mut memo.borrow_mut()))
}

fn model_search(
    g: &Multigraph,
    sets: Vec<Vec<usize>>,
    which: ForbiddenMinor,
    memo: &mut HashMap<(Vec<u8>, u8), bool>,
) -> Option<Vec<Vec<usize>>> {
    // Quick no: trust negative memo entries via the decision procedure.
    if !decide_minor(g, which, memo) {
        return None;
    }
    let rows = adj_masks(g);
    let embed = match which {
        ForbiddenMinor::K5 => clique5_vertices(&rows),
        ForbiddenMinor::K33 => k33_vertices(&rows),
    };
    if let Some(vs) = embed {
        return Some(vs.into_iter().map(|v| sets[v].clone()).collect());
    }
    let pairs = simplified_pairs(g);
    for &(u, v) in &pairs {
        let contracted = contract_simple(g, u, v);
        let mut next_sets = sets.clone();
        let merged: Vec<usize> = {
            let mut m = next_sets[u].clone();
            m.extend(next_sets[v].iter().copied());
            m.sort_unstable();
            m
        };
        next_sets[u] = merged;
        next_sets.remove(v);
        if let Some(model) = model_search(&contracted, next_sets, which, memo) {
            return Some(model);
        }
    }
    for i in 0..pairs.len() {
        let mut rest = pairs.clone();
        rest.remove(i);
        let deleted = Multigraph::new(g.n(), rest).expect("valid");
        if let Some(model) = model_search(&deleted, sets.clone(), which, memo) {
            return Some(model);
        }
    }
    None
}

fn clique5_vertices(rows: &[u64]) -> Option<Vec<usize>> {
    let n = rows.len();
    fn extend(rows: &[u64], candidates: u64, depth: usize, from: usize, acc: &mut Vec<usize>) -> bool {
        if depth == 0 {
            return true;
        }
        let n = rows.len();
        for v in from..n {
            if candidates >> v & 1 == 1 {
                acc.push(v);
                if extend(rows, candidates & rows[v], depth - 1, v + 1, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    if extend(rows, (1u64 << n) - 1, 5, 0, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

#[allow(clippy::needless_range_loop)]
fn k33_vertices(rows: &[u64]) -> Option<Vec<usize>> {
    let n = rows.len();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let common = rows[a] & rows[b] & rows[c] & !(1 << a) & !(1 << b) & !(1 << c);
                if common.count_ones() >= 3 {
                    let others: Vec<usize> = (0..n).filter(|&v| common >> v & 1 == 1).take(3).collect();
                    return Some(vec![a, b, c, others[0], others[1], others[2]]);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Crossing number at most one
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingVerdict {
    Planar,
    OneCrossing,
    More,
}

/// Outcome of the cr <= 1 decision. The pair ids refer to the canonical edge
/// ids of the underlying simple graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossingCertificate {
    pub verdict: CrossingVerdict,
    pub crossing_pair: Option<(EdgeId, EdgeId)>,
}

/// Replaces the two edges by a degree-4 crossing vertex.
pub fn planarize_pair(s: &Multigraph, e: EdgeId, f: EdgeId) -> Multigraph {
    let (a, b) = s.endpoints(e);
    let (c, d) = s.endpoints(f);
    let w = s.n();
    let mut pairs: Vec<(usize, usize)> = s
        .edges()
        .filter(|&(id, _, _)| id != e && id != f)
        .map(|(_, u, v)| (u, v))
        .collect();
    pairs.extend([(a, w), (b, w), (c, w), (d, w)]);
    Multigraph::new(s.n() + 1, pairs).expect("valid planarization")
}

/// All unordered pairs of independent simple edges whose planarization is
/// planar, in canonical id order.
pub fn planarizing_pairs(s: &Multigraph) -> Vec<(EdgeId, EdgeId)> {
    let mut out = Vec::new();
    for e in 0..s.m() {
        let (a, b) = s.endpoints(e);
        for f in (e + 1)..s.m() {
            let (c, d) = s.endpoints(f);
            if a == c || a == d || b == c || b == d {
                continue; // adjacent edges never need to cross
            }
            if is_planar(&planarize_pair(s, e, f)) {
                out.push((e, f));
            }
        }
    }
    out
}

/// Decides whether the underlying simple graph has crossing number <= 1 and
/// produces the first certifying pair in canonical order.
pub fn crossing_at_most_one(g: &Multigraph) -> CrossingCertificate {
    let s = g.underlying_simple();
    if is_planar(&s) {
        return CrossingCertificate { verdict: CrossingVerdict::Planar, crossing_pair: None };
    }
    for e in 0..s.m() {
        let (a, b) = s.endpoints(e);
        for f in (e + 1)..s.m() {
            let (c, d) = s.endpoints(f);
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if is_planar(&planarize_pair(&s, e, f)) {
                return CrossingCertificate {
                    verdict: CrossingVerdict::OneCrossing,
                    crossing_pair: Some((e, f)),
                };
            }
        }
    }
    CrossingCertificate { verdict: CrossingVerdict::More, crossing_pair: None }
}

// ---------------------------------------------------------------------------
// Clique-sum decomposition
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeafKind {
    Planar,
    WagnerV8,
    K5,
}

#[derive(Debug, Clone)]
pub enum CsNode {
    Leaf {
        kind: LeafKind,
        graph: Multigraph,
    },
    Sum {
        graph: Multigraph,
        /// The pasted vertex set S', in this node's labels.
        pasted: Vec<usize>,
        /// Clique edges added to the pieces that are absent from `graph`.
        clique_edges_added: Vec<(usize, usize)>,
        left: Box<CsNode>,
        /// Child vertex -> this node's vertex.
        left_map: Vec<usize>,
        right: Box<CsNode>,
        right_map: Vec<usize>,
    },
}

impl CsNode {
    pub fn graph(&self) -> &Multigraph {
        match self {
            CsNode::Leaf { graph, .. } | CsNode::Sum { graph, .. } => graph,
        }
    }

    pub fn leaves(&self) -> Vec<(&LeafKind, &Multigraph)> {
        match self {
            CsNode::Leaf { kind, graph } => vec![(kind, graph)],
            CsNode::Sum { left, right, .. } => {
                let mut out = left.leaves();
                out.extend(right.leaves());
                out
            }
        }
    }

    pub fn max_pasted(&self) -> usize {
        match self {
            CsNode::Leaf { .. } => 0,
            CsNode::Sum { pasted, left, right, .. } => {
                pasted.len().max(left.max_pasted()).max(right.max_pasted())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct CliqueSumTree {
    pub forbidden: ForbiddenMinor,
    pub root: CsNode,
}

/// Decomposes the underlying simple graph into clique-sums of planar pieces
/// and Wagner-graph leaves (K5 mode) or K5 leaves (K3,3 mode). Separators are
/// searched smallest first, then lexicographically.
pub fn wagner_decompose(g: &Multigraph, forbidden: ForbiddenMinor) -> Result<CliqueSumTree, TopologyError> {
    let s = g.underlying_simple();
    if has_minor(&s, forbidden) {
        return Err(TopologyError::PreconditionViolation {
            msg: format!("input has a {forbidden:?} minor"),
            minor_witness: find_minor_model(&s, forbidden),
        });
    }
    let root = decompose_node(&s, forbidden)?;
    Ok(CliqueSumTree { forbidden, root })
}

fn decompose_node(s: &Multigraph, forbidden: ForbiddenMinor) -> Result<CsNode, TopologyError> {
    if is_planar(s) {
        return Ok(CsNode::Leaf { kind: LeafKind::Planar, graph: s.clone() });
    }
    match forbidden {
        ForbiddenMinor::K5 => {
            if canon::are_isomorphic(s, &crate::fixtures::wagner_v8()) {
                return Ok(CsNode::Leaf { kind: LeafKind::WagnerV8, graph: s.clone() });
            }
        }
        ForbiddenMinor::K33 => {
            if canon::are_isomorphic(s, &crate::fixtures::k5()) {
                return Ok(CsNode::Leaf { kind: LeafKind::K5, graph: s.clone() });
            }
        }
    }
    let max_k = match forbidden {
        ForbiddenMinor::K5 => 3,
        ForbiddenMinor::K33 => 2,
    };
    let n = s.n();
    for k in 0..=max_k.min(n.saturating_sub(1)) {
        let mut sel: Vec<usize> = Vec::new();
        if let Some(node) = try_separators(s, forbidden, k, 0, &mut sel)? {
            return Ok(node);
        }
    }
    Err(TopologyError::Internal(
        "no admissible clique-sum separator found; the decomposition theorem guarantees one".into(),
    ))
}

fn try_separators(
    s: &Multigraph,
    forbidden: ForbiddenMinor,
    k: usize,
    from: usize,
    sel: &mut Vec<usize>,
) -> Result<Option<CsNode>, TopologyError> {
    if sel.len() == k {
        return try_split(s, forbidden, sel);
    }
    for v in from..s.n() {
        sel.push(v);
        if let Some(node) = try_separators(s, forbidden, k, v + 1, sel)? {
            sel.pop();
            return Ok(Some(node));
        }
        sel.pop();
    }
    Ok(None)
}

fn try_split(
    s: &Multigraph,
    forbidden: ForbiddenMinor,
    sep: &[usize],
) -> Result<Option<CsNode>, TopologyError> {
    let mut removed = vec![false; s.n()];
    for &v in sep {
        removed[v] = true;
    }
    let comps = s.components_without(&removed);
    if comps.len() < 2 {
        return Ok(None);
    }
    // First component on one side, the rest on the other.
    let mut left_verts: Vec<usize> = comps[0].clone();
    left_verts.extend_from_slice(sep);
    left_verts.sort_unstable();
    let mut right_verts: Vec<usize> = comps[1..].iter().flatten().copied().collect();
    right_verts.extend_from_slice(sep);
    right_verts.sort_unstable();

    let lemma_bound = comps.len();
    let build_piece = |verts: &[usize]| -> (Multigraph, Vec<usize>, Vec<(usize, usize)>) {
        let (sub, vmap, _) = s.induced(verts);
        // Extend the separator to a clique inside the piece; record which
        // edges are additions in parent labels.
        let mut added_parent = Vec::new();
        let mut pairs: Vec<(usize, usize)> = sub.edges().map(|(_, u, v)| (u, v)).collect();
        let pos = |pv: usize| vmap.iter().position(|&x| x == pv).unwrap();
        for i in 0..sep.len() {
            for j in (i + 1)..sep.len() {
                if s.mu(sep[i], sep[j]) == 0 {
                    added_parent.push((sep[i].min(sep[j]), sep[i].max(sep[j])));
                    pairs.push((pos(sep[i]), pos(sep[j])));
                }
            }
        }
        let piece = Multigraph::new(sub.n(), pairs).expect("valid piece");
        (piece, vmap, added_parent)
    };

    let (left_piece, left_map, added) = build_piece(&left_verts);
    let (right_piece, right_map, added_r) = build_piece(&right_verts);
    debug_assert_eq!(added, added_r);
    if has_minor(&left_piece, forbidden) || has_minor(&right_piece, forbidden) {
        return Ok(None);
    }
    // Number-of-components monotonicity under clique-sum pieces.
    for (piece, vmap) in [(&left_piece, &left_map), (&right_piece, &right_map)] {
        let mut piece_removed = vec![false; piece.n()];
        for (pv, &orig) in vmap.iter().enumerate() {
            if sep.contains(&orig) {
                piece_removed[pv] = true;
            }
        }
        let w = piece.components_without(&piece_removed).len();
        if w > lemma_bound {
            return Err(TopologyError::Internal(format!(
                "component monotonicity violated: piece has {w} components, whole graph {lemma_bound}"
            )));
        }
    }
    let left = decompose_node(&left_piece, forbidden)?;
    let right = decompose_node(&right_piece, forbidden)?;
    Ok(Some(CsNode::Sum {
        graph: s.clone(),
        pasted: sep.to_vec(),
        clique_edges_added: added,
        left: Box::new(left),
        left_map,
        right: Box::new(right),
        right_map,
    }))
}

/// Recomposes a node by pasting its children and deleting the clique edges
/// that were added; checks the result against the stored graph recursively.
pub fn verify_recomposition(node: &CsNode) -> Result<(), TopologyError> {
    match node {
        CsNode::Leaf { kind, graph } => {
            let ok = match kind {
                LeafKind::Planar => is_planar(graph),
                LeafKind::WagnerV8 => canon::are_isomorphic(graph, &crate::fixtures::wagner_v8()),
                LeafKind::K5 => canon::are_isomorphic(graph, &crate::fixtures::k5()),
            };
            if ok {
                Ok(())
            } else {
                Err(TopologyError::Internal(format!("leaf fails its {kind:?} check")))
            }
        }
        CsNode::Sum { graph, clique_edges_added, left, left_map, right, right_map, .. } => {
            verify_recomposition(left)?;
            verify_recomposition(right)?;
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (child, map) in [(left, left_map), (right, right_map)] {
                for (_, u, v) in child.graph().edges() {
                    let (a, b) = (map[u], map[v]);
                    pairs.push((a.min(b), a.max(b)));
                }
            }
            pairs.sort_unstable();
            pairs.dedup();
            pairs.retain(|p| !clique_edges_added.contains(p));
            let rebuilt = Multigraph::new(graph.n(), pairs).map_err(TopologyError::Graph)?;
            if rebuilt == *graph {
                Ok(())
            } else {
                Err(TopologyError::Internal("recomposition does not reproduce the graph".into()))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Splittable 3-cut
// ---------------------------------------------------------------------------

/// For a 3-connected non-planar K5-minor-free graph other than V8: a 3-cut
/// whose removal leaves at least three components and whose triangle
/// augmentation stays K5-minor-free. All three properties are re-verified
/// before returning.
pub fn find_splittable_three_cut(
    g: &Multigraph,
) -> Result<Option<(VertexCut, Multigraph)>, TopologyError> {
    let s = g.underlying_simple();
    let fail = |msg: &str| TopologyError::PreconditionViolation {
        msg: msg.into(),
        minor_witness: None,
    };
    if s.connectivity() < 3 {
        return Err(fail("input is not 3-connected"));
    }
    if is_planar(&s) {
        return Err(fail("input is planar"));
    }
    if canon::are_isomorphic(&s, &crate::fixtures::wagner_v8()) {
        return Err(fail("input is the Wagner graph"));
    }
    if has_minor(&s, ForbiddenMinor::K5) {
        return Err(TopologyError::PreconditionViolation {
            msg: "input has a K5 minor".into(),
            minor_witness: find_minor_model(&s, ForbiddenMinor::K5),
        });
    }
    let n = s.n();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let sep = [a, b, c];
                let mut removed = vec![false; n];
                for &v in &sep {
                    removed[v] = true;
                }
                let comps = s.components_without(&removed);
                if comps.len() < 3 {
                    continue;
                }
                let mut pairs: Vec<(usize, usize)> = s.edges().map(|(_, u, v)| (u, v)).collect();
                for i in 0..3 {
                    for j in (i + 1)..3 {
                        if s.mu(sep[i], sep[j]) == 0 {
                            pairs.push((sep[i].min(sep[j]), sep[i].max(sep[j])));
                        }
                    }
                }
                let augmented = Multigraph::new(n, pairs).map_err(TopologyError::Graph)?;
                if has_minor(&augmented, ForbiddenMinor::K5) {
                    continue;
                }
                let cut = VertexCut {
                    separator: sep.to_vec(),
                    component_count: comps.len(),
                    component_parities: comps.iter().map(|c| (c.len() % 2) as u8).collect(),
                };
                return Ok(Some((cut, augmented)));
            }
        }
    }
    Ok(None)
}
