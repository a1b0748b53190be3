//! Graph families used as inputs and test corpora.

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError, VertexId};

/// The two sides of `K_{n,n}`: `x = 0..n`, `y = n..2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Range<VertexId>,
    pub y: Range<VertexId>,
}

impl Bipartition {
    pub fn of(n: usize) -> Self {
        Bipartition { x: 0..n, y: n..2 * n }
    }

    pub fn side_len(&self) -> usize {
        self.x.len()
    }
}

pub fn complete_bipartite(n: usize) -> Result<(Graph, Bipartition), GraphError> {
    if n == 0 {
        return Err(GraphError::Degenerate("K_{n,n} needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|x| (n..2 * n).map(move |y| (x, y)));
    let g = Graph::from_edges(2 * n, edges)?;
    Ok((g, Bipartition::of(n)))
}

/// Returns `Some(n)` when `g` is exactly `K_{n,n}` with sides `0..n` and `n..2n`.
pub fn as_complete_bipartite(g: &Graph) -> Option<usize> {
    let total = g.vertex_count();
    if total == 0 || !total.is_multiple_of(2) {
        return None;
    }
    let n = total / 2;
    let x_ok = (0..n).all(|v| g.neighbors(v).iter().copied().eq(n..2 * n));
    let y_ok = (n..2 * n).all(|v| g.neighbors(v).iter().copied().eq(0..n));
    (x_ok && y_ok).then_some(n)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Degenerate("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Degenerate(format!("a simple cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges_dedup(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Hub `0` joined to every vertex of the path `1..n`.
pub fn fan(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::Degenerate("fan needs n >= 2".into()));
    }
    let spokes = (1..n).map(|i| (0, i));
    let rim = (2..n).map(|i| (i - 1, i));
    Graph::from_edges(n, spokes.chain(rim))
}

/// The dodecahedron, built as the generalized Petersen graph GP(10, 2).
pub fn dodecahedron() -> Graph {
    let outer = (0..10).map(|i| (i, (i + 1) % 10));
    let spokes = (0..10).map(|i| (i, 10 + i));
    let inner = (0..10).map(|i| (10 + i, 10 + (i + 2) % 10));
    Graph::from_edges_dedup(20, outer.chain(spokes).chain(inner))
}

/// A `rows × cols` patch of hexagons in brick-wall embedding.
///
/// Lattice points `(i, j)` with `i in 0..=rows`, `j in 0..2*cols+2`; row `i`
/// is a horizontal path and `(i, j)–(i+1, j)` is an edge when `i + j` is even.
/// Pendant vertices left at the corners are stripped.
pub fn hex_grid(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::Degenerate("hex_grid needs rows, cols >= 1".into()));
    }
    let width = 2 * cols + 2;
    let id = |i: usize, j: usize| i * width + j;
    let mut edges = Vec::new();
    for i in 0..=rows {
        for j in 0..width {
            if j + 1 < width {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < rows && (i + j) % 2 == 0 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let lattice = Graph::from_edges((rows + 1) * width, edges)?;
    Ok(two_core(&lattice))
}

/// Repeatedly deletes vertices of degree at most one.
fn two_core(g: &Graph) -> Graph {
    let mut g = g.clone();
    loop {
        let low: Vec<_> = g.vertices().filter(|&v| g.degree(v) <= 1).collect();
        if low.is_empty() {
            return g;
        }
        g = g.remove_vertices(&low).expect("ids come from the graph").0;
    }
}

/// Random maximal outerplanar graph: start from a triangle and repeatedly
/// attach a new vertex to both ends of a random edge of the outer cycle.
/// Deterministic per seed; has `2n - 3` edges for `n >= 2`.
pub fn maximal_outerplanar_random(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Degenerate("outerplanar graph needs n >= 1".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outer: Vec<VertexId> = vec![0, 1, 2];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let i = rng.gen_range(0..outer.len());
        let j = (i + 1) % outer.len();
        edges.push((outer[i], v));
        edges.push((outer[j], v));
        outer.insert(i + 1, v);
    }
    Graph::from_edges(n, edges)
}

/// Replaces every edge by a path with `k + 1` edges.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let mut next = g.vertex_count();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges_dedup(next, edges)
}

/// A random planar graph of girth at least 5: the dodecahedron with a random
/// set of edges subdivided (1 or 2 new vertices each) and a random set of
/// edges deleted.
pub fn random_girth5_planar(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = dodecahedron();
    let mut next = base.vertex_count();
    let mut edges = Vec::new();
    for (u, v) in base.edges() {
        match rng.gen_range(0..6) {
            0 => {}
            1 | 2 => {
                let k = rng.gen_range(1..=2);
                let mut prev = u;
                for _ in 0..k {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, v));
            }
            _ => edges.push((u, v)),
        }
    }
    Graph::from_edges_dedup(next, edges)
}

/// A uniformly shuffled labelled random tree (random attachment).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let edges = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i]));
    Graph::from_edges_dedup(n, edges)
}
