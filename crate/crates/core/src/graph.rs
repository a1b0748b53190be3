//! Simple undirected graphs on dense vertex ids.

use std::collections::VecDeque;

use crate::bound::Bound;

/// Vertex identifier; valid ids of a graph are `0..vertex_count`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric, with no self-loops and no
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

/// Id translation produced by [`Graph::remove_vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remap {
    /// `old_to_new[v]` is the id of `v` in the reduced graph, if it survived.
    pub old_to_new: Vec<Option<VertexId>>,
    /// `new_to_old[w]` is the original id of reduced vertex `w`.
    pub new_to_old: Vec<VertexId>,
}

impl Remap {
    /// Chains `self` (old→mid) with `next` (mid→new).
    pub fn then(&self, next: &Remap) -> Remap {
        let old_to_new = self
            .old_to_new
            .iter()
            .map(|m| m.and_then(|mid| next.old_to_new[mid]))
            .collect();
        let new_to_old = next.new_to_old.iter().map(|&mid| self.new_to_old[mid]).collect();
        Remap { old_to_new, new_to_old }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates (in
    /// either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate edges.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u != v && u < n && v < n, "bad generator edge {u}-{v}");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Induced subgraph on `V \ removed`, with surviving vertices renumbered
    /// in increasing order of their original ids.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> Result<(Graph, Remap), GraphError> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n });
            }
            gone[v] = true;
        }
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(n);
        for v in 0..n {
            if !gone[v] {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let adj = new_to_old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect())
            .collect();
        Ok((Graph { adj }, Remap { old_to_new, new_to_old }))
    }

    /// Induced subgraph on `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<_> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    /// Connected components, each listed in increasing vertex order.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest eccentricity within any component (0 for an edgeless graph).
    pub fn component_diameter_max(&self) -> usize {
        self.vertices()
            .map(|v| {
                self.bfs_distances(v)
                    .into_iter()
                    .filter(|&d| d != usize::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Length of a shortest cycle, or `Unbounded` for a forest.
    pub fn girth(&self) -> Bound {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Any cycle found deeper than this cannot improve on `best`.
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Bound::Unbounded
        } else {
            Bound::Finite(best)
        }
    }

    /// Checks the structural invariants; used by generators and tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {u} not strictly sorted"));
            }
            for &v in list {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if v >= self.adj.len() {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if !self.has_edge(v, u) {
                    return Err(format!("edge {u}-{v} is not symmetric"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn remove_middle_of_path() {
        let (h, remap) = path3().remove_vertices(&[1]).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(remap.new_to_old, vec![0, 2]);
        assert_eq!(remap.old_to_new, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn remove_from_k22_gives_p3() {
        let (k22, _) = generators::complete_bipartite(2).unwrap();
        let (h, _) = k22.remove_vertices(&[0]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert!(h.is_forest());
        assert_eq!(h.component_diameter_max(), 2);
    }

    #[test]
    fn remove_rejects_out_of_range() {
        assert!(path3().remove_vertices(&[3]).is_err());
    }

    #[test]
    fn dodecahedron_minus_three() {
        let g = generators::dodecahedron();
        for s in [[0, 1, 2], [0, 7, 19], [3, 11, 15]] {
            let (h, _) = g.remove_vertices(&s).unwrap();
            assert_eq!(h.vertex_count(), 17);
            assert!(h.max_degree() <= 3);
            h.check_invariants().unwrap();
        }
    }

    #[test]
    fn forest_and_diameter_queries() {
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.is_forest());
        assert_eq!(star.component_diameter_max(), 2);
        assert_eq!(star.max_degree(), 4);

        let c4 = generators::cycle(4).unwrap();
        assert!(!c4.is_forest());

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(two_edges.is_forest());
        assert_eq!(two_edges.component_diameter_max(), 1);
        assert_eq!(two_edges.max_degree(), 1);

        assert_eq!(Graph::empty(3).component_diameter_max(), 0);
    }

    #[test]
    fn girth_small_cases() {
        let (k33, _) = generators::complete_bipartite(3).unwrap();
        assert_eq!(k33.girth(), Bound::Finite(4));
        assert_eq!(generators::path(6).unwrap().girth(), Bound::Unbounded);
        assert_eq!(generators::cycle(5).unwrap().girth(), Bound::Finite(5));
        assert_eq!(Graph::empty(0).girth(), Bound::Unbounded);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Bound::Finite(3));
    }

    #[test]
    fn remap_composition() {
        let g = generators::dodecahedron();
        let (h1, r1) = g.remove_vertices(&[2, 5]).unwrap();
        let ids_in_h1: Vec<_> = [9, 13].iter().map(|&v| r1.old_to_new[v].unwrap()).collect();
        let (h2, r2) = h1.remove_vertices(&ids_in_h1).unwrap();
        let (direct, rd) = g.remove_vertices(&[2, 5, 9, 13]).unwrap();
        assert_eq!(h2, direct);
        assert_eq!(r1.then(&r2), rd);
    }
}
