//! Loop-free multigraph value type with cuts, contraction, connectivity and
//! canonical edge identity.
//!
//! Vertices are dense integers `0..n`. Parallel edges are distinct objects:
//! edge ids are assigned in sorted `(min(u,v), max(u,v), copy)` order, so the
//! id space is `0..m` and is reproducible from the unordered pair multiset.
//! Every operation returns a new graph together with explicit id mappings;
//! nothing mutates in place.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("subset must be a nonempty proper subset of the vertex set")]
    InvalidSubset,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Immutable loop-free multigraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    /// Endpoint pairs with `u < v`, sorted; the index is the edge id.
    edges: Vec<(u32, u32)>,
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Multigraph {
    /// Builds a graph from an endpoint-pair list. Pair order and orientation
    /// are irrelevant; ids are re-derived canonically.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            let (u, v) = (a.min(b) as u32, a.max(b) as u32);
            edges.push((u, v));
        }
        edges.sort_unstable();
        Ok(Multigraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.edges[e];
        (u as usize, v as usize)
    }

    /// Iterates `(id, u, v)` in id order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, usize, usize)> + '_ {
        self.edges.iter().enumerate().map(|(i, &(u, v))| (i, u as usize, v as usize))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a as usize == v || b as usize == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u as usize] += 1;
            d[v as usize] += 1;
        }
        d
    }

    /// Number of parallel edges joining `u` and `v`.
    pub fn mu(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges.iter().filter(|&&p| p == key).count()
    }

    /// Largest multiplicity over all vertex pairs; 0 for an edgeless graph.
    pub fn max_multiplicity(&self) -> usize {
        let mut best = 0;
        let mut i = 0;
        while i < self.edges.len() {
            let mut j = i;
            while j < self.edges.len() && self.edges[j] == self.edges[i] {
                j += 1;
            }
            best = best.max(j - i);
            i = j;
        }
        best
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degrees();
        let r = d[0];
        if d.iter().all(|&x| x == r) {
            Some(r)
        } else {
            None
        }
    }

    /// Per-vertex list of `(neighbor, edge id)`, ids ascending.
    pub fn adjacency(&self) -> Vec<Vec<(usize, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u as usize].push((v as usize, i));
            adj[v as usize].push((u as usize, i));
        }
        adj
    }

    /// All edge ids joining `u` and `v`, ascending.
    pub fn edge_ids_between(&self, u: usize, v: usize) -> Vec<EdgeId> {
        if u == v {
            return Vec::new();
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == key)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    fn check_subset(&self, x: &[usize]) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.n];
        for &v in x {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            mask[v] = true;
        }
        let size = mask.iter().filter(|&&b| b).count();
        if size == 0 || size == self.n {
            return Err(GraphError::InvalidSubset);
        }
        Ok(mask)
    }

    /// Edge cut induced by the vertex subset `x`.
    pub fn boundary(&self, x: &[usize]) -> Result<EdgeCut, GraphError> {
        let mask = self.check_subset(x)?;
        Ok(self.boundary_of_mask(&mask))
    }

    pub(crate) fn boundary_of_mask(&self, mask: &[bool]) -> EdgeCut {
        let mut boundary = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask[u as usize] != mask[v as usize] {
                boundary.push(i);
            }
        }
        let side: Vec<usize> = (0..self.n).filter(|&v| mask[v]).collect();
        let side_parity = (side.len() % 2) as u8;
        let nontrivial_tight = match self.regular_degree() {
            Some(r) => {
                side.len() % 2 == 1
                    && boundary.len() == r
                    && side.len() > 1
                    && self.n - side.len() > 1
            }
            None => false,
        };
        EdgeCut { side, boundary, side_parity, nontrivial_tight }
    }

    /// Contracts the subset `x` to a single vertex `w_X` (the highest-numbered
    /// vertex of the result), deleting the resulting loops.
    pub fn contract(&self, x: &[usize]) -> Result<Contraction, GraphError> {
        let mask = self.check_subset(x)?;
        let kept: Vec<usize> = (0..self.n).filter(|&v| !mask[v]).collect();
        let new_n = kept.len() + 1;
        let w = new_n - 1;
        let mut vertex_map = vec![w; self.n];
        for (new, &old) in kept.iter().enumerate() {
            vertex_map[old] = new;
        }
        // Pair each surviving old edge with its new endpoints, sort the way
        // Multigraph::new will, and read the id mapping off the positions.
        let mut surviving: Vec<(u32, u32, usize)> = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (a, b) = (vertex_map[u as usize], vertex_map[v as usize]);
            if a == b {
                continue; // loop inside x
            }
            surviving.push((a.min(b) as u32, a.max(b) as u32, i));
        }
        surviving.sort_unstable();
        let mut edge_map = vec![None; self.edges.len()];
        let mut new_to_old = Vec::with_capacity(surviving.len());
        let mut edges = Vec::with_capacity(surviving.len());
        for (new_id, &(a, b, old_id)) in surviving.iter().enumerate() {
            edge_map[old_id] = Some(new_id);
            new_to_old.push(old_id);
            edges.push((a, b));
        }
        Ok(Contraction {
            graph: Multigraph { n: new_n, edges },
            w,
            vertex_map,
            edge_map,
            new_to_old,
        })
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(u, _) in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub(crate) fn is_connected_without(&self, removed: &[bool]) -> bool {
        let adj = self.adjacency();
        let start = match (0..self.n).find(|&v| !removed[v]) {
            Some(v) => v,
            None => return true,
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(u, _) in &adj[v] {
                if !removed[u] && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == (0..self.n).filter(|&v| !removed[v]).count()
    }

    /// Vertex connectivity: the least `k` admitting a `k`-vertex-cut, or
    /// `n - 1` when no separator exists (complete underlying graph).
    pub fn connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        for k in 1..self.n.saturating_sub(1) {
            let mut removed = vec![false; self.n];
            if self.any_cut_of_size(k, 0, &mut removed) {
                return k;
            }
        }
        self.n - 1
    }

    fn any_cut_of_size(&self, remaining: usize, from: usize, removed: &mut Vec<bool>) -> bool {
        if remaining == 0 {
            return !self.is_connected_without(removed);
        }
        for v in from..self.n {
            removed[v] = true;
            if self.any_cut_of_size(remaining - 1, v + 1, removed) {
                removed[v] = false;
                return true;
            }
            removed[v] = false;
        }
        false
    }

    /// All separators of size exactly `k` (`k <= 3`), with component counts
    /// and parities, by exhaustive subset trial.
    pub fn find_vertex_cuts(&self, k: usize) -> Result<Vec<VertexCut>, GraphError> {
        if k == 0 || k > 3 {
            return Err(GraphError::InvalidArgument(format!(
                "vertex-cut enumeration supports 1 <= k <= 3, got {k}"
            )));
        }
        let base = self.components().len();
        let mut out = Vec::new();
        let mut sel = Vec::new();
        self.collect_cuts(k, 0, base, &mut sel, &mut out);
        Ok(out)
    }

    fn collect_cuts(
        &self,
        k: usize,
        from: usize,
        base: usize,
        sel: &mut Vec<usize>,
        out: &mut Vec<VertexCut>,
    ) {
        if sel.len() == k {
            let mut removed = vec![false; self.n];
            for &v in sel.iter() {
                removed[v] = true;
            }
            let comps = self.components_without(&removed);
            if comps.len() > base {
                out.push(VertexCut {
                    separator: sel.clone(),
                    component_count: comps.len(),
                    component_parities: comps.iter().map(|c| (c.len() % 2) as u8).collect(),
                });
            }
            return;
        }
        for v in from..self.n {
            sel.push(v);
            self.collect_cuts(k, v + 1, base, sel, out);
            sel.pop();
        }
    }

    /// Components of the graph minus the flagged vertices.
    pub(crate) fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if removed[start] || seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(u, _) in &adj[v] {
                    if !removed[u] && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// One edge per adjacent pair, deterministic ids.
    pub fn underlying_simple(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.dedup();
        Multigraph { n: self.n, edges }
    }

    /// Multigraph isomorphism via canonical labeling.
    pub fn is_isomorphic_to(&self, other: &Multigraph) -> bool {
        crate::canon::are_isomorphic(self, other)
    }

    /// Induced subgraph on `keep` (sorted internally). Returns the graph, the
    /// vertex map (new -> old) and edge map (new -> old).
    pub fn induced(&self, keep: &[usize]) -> (Multigraph, Vec<usize>, Vec<EdgeId>) {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut tagged: Vec<(u32, u32, usize)> = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (a, b) = (old_to_new[u as usize], old_to_new[v as usize]);
            if a != usize::MAX && b != usize::MAX {
                tagged.push((a.min(b) as u32, a.max(b) as u32, i));
            }
        }
        tagged.sort_unstable();
        let edge_map: Vec<EdgeId> = tagged.iter().map(|&(_, _, old)| old).collect();
        let edges = tagged.into_iter().map(|(a, b, _)| (a, b)).collect();
        (Multigraph { n: keep.len(), edges }, keep, edge_map)
    }

    /// Deletes the highest-numbered vertex. Edge map is new -> old.
    pub fn remove_last_vertex(&self) -> (Multigraph, Vec<EdgeId>) {
        assert!(self.n > 0);
        let keep: Vec<usize> = (0..self.n - 1).collect();
        let (g, _, emap) = self.induced(&keep);
        (g, emap)
    }

    /// Adds the listed endpoint pairs as new parallel copies. Among parallel
    /// edges of one pair, pre-existing copies keep the lower copy indices, so
    /// the ids of the added copies are well defined.
    pub fn with_edges_added(&self, extra: &[(usize, usize)]) -> Result<EdgeAddition, GraphError> {
        for &(a, b) in extra {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a >= self.n || b >= self.n {
                return Err(GraphError::VertexOutOfRange(a.max(b), self.n));
            }
        }
        // Tag old edges 0 and new edges 1 within each pair class; stable sort
        // keeps old copies first.
        let mut tagged: Vec<(u32, u32, u8, usize)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, 0u8, i))
            .collect();
        for (j, &(a, b)) in extra.iter().enumerate() {
            tagged.push((a.min(b) as u32, a.max(b) as u32, 1u8, j));
        }
        tagged.sort_unstable();
        let mut old_to_new = vec![0usize; self.edges.len()];
        let mut added = vec![0usize; extra.len()];
        let mut edges = Vec::with_capacity(tagged.len());
        for (new_id, &(u, v, tag, idx)) in tagged.iter().enumerate() {
            if tag == 0 {
                old_to_new[idx] = new_id;
            } else {
                added[idx] = new_id;
            }
            edges.push((u, v));
        }
        Ok(EdgeAddition { graph: Multigraph { n: self.n, edges }, old_to_new, added })
    }

    /// Removes the listed edge ids. Edge map is new -> old.
    pub fn without_edges(&self, ids: &[EdgeId]) -> (Multigraph, Vec<EdgeId>) {
        let mut drop = vec![false; self.edges.len()];
        for &e in ids {
            drop[e] = true;
        }
        let mut edges = Vec::new();
        let mut new_to_old = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !drop[i] {
                edges.push((u, v));
                new_to_old.push(i);
            }
        }
        (Multigraph { n: self.n, edges }, new_to_old)
    }

    /// Upper-triangle multiplicity matrix, row-major.
    pub(crate) fn mu_matrix(&self) -> Vec<u16> {
        let mut m = vec![0u16; self.n * self.n];
        for &(u, v) in &self.edges {
            m[u as usize * self.n + v as usize] += 1;
            m[v as usize * self.n + u as usize] += 1;
        }
        m
    }
}

/// A vertex subset with its boundary edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    /// Sorted vertex subset X.
    pub side: Vec<usize>,
    /// Sorted edge ids of the boundary of X.
    pub boundary: Vec<EdgeId>,
    /// |X| mod 2.
    pub side_parity: u8,
    /// Whether this is a non-trivial tight cut for the ambient regularity.
    pub nontrivial_tight: bool,
}

impl EdgeCut {
    pub fn side_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.side {
            mask[v] = true;
        }
        mask
    }
}

/// A separator together with the component structure its removal creates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCut {
    pub separator: Vec<usize>,
    pub component_count: usize,
    pub component_parities: Vec<u8>,
}

/// Result of contracting a subset: graph, contraction vertex, and id maps.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Multigraph,
    /// The contraction vertex w_X (highest-numbered vertex of `graph`).
    pub w: usize,
    /// old vertex -> new vertex (members of X map to `w`).
    pub vertex_map: Vec<usize>,
    /// old edge id -> new edge id; `None` for edges inside X.
    pub edge_map: Vec<Option<EdgeId>>,
    /// new edge id -> old edge id.
    pub new_to_old: Vec<EdgeId>,
}

/// Result of adding parallel copies: graph plus id maps.
#[derive(Debug, Clone)]
pub struct EdgeAddition {
    pub graph: Multigraph,
    /// old edge id -> new edge id.
    pub old_to_new: Vec<EdgeId>,
    /// id (in the new graph) of each added copy, in request order.
    pub added: Vec<EdgeId>,
}
