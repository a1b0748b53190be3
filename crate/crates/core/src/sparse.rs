//! Inductive equitable `t`-tree-colorings of sparse graphs.
//!
//! Every algorithm here peels off a small vertex set `S`, colors what is left
//! and puts `S` back. Two ways of putting vertices back are used:
//!
//! * an [`ExtensionSequence`] `v1, …, vt` with `|N(v_i) \ S| <= 2i - 1`,
//!   colored from `vt` down to `v1` by [`extend_coloring`];
//! * a hub of degree 8 or 9 (at `t = 3`) or 5 (at `t = 2`) together with
//!   `2t - 1` of its degree-2 neighbors, re-added two per class.
//!
//! The set `S` is chosen from a structural [`Configuration`] that sparse
//! graphs are guaranteed to contain. Inputs are not checked for planarity or
//! girth; a graph outside the intended class either passes anyway or fails
//! with [`SparseError::ConfigurationNotFound`] or
//! [`SparseError::NoLowDegreeVertex`].

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coloring::{is_equitable, TreeColoring};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SparseError {
    #[error("t = {t} is below the minimum {min} for this algorithm")]
    TooFewColors { t: usize, min: usize },
    #[error("{edges} edges exceed the bound {bound} for {class} graphs on {vertices} vertices")]
    EdgeBoundViolated { edges: usize, vertices: usize, bound: usize, class: &'static str },
    #[error("no {family} configuration in the remaining graph on {remaining} vertices")]
    ConfigurationNotFound { family: &'static str, remaining: usize },
    #[error("sequence needs {needed} vertices but only {available} are available")]
    NotEnoughVertices { needed: usize, available: usize },
    #[error("no admissible vertex for position {position} among {remaining} remaining vertices")]
    NoLowDegreeVertex { position: usize, remaining: usize },
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("position {position}: vertex {vertex} has {outside} neighbors outside the sequence, bound is {bound}")]
    SequenceBound { position: usize, vertex: VertexId, outside: usize, bound: usize },
    #[error("inner coloring does not fit the reduced graph: {0}")]
    InnerMismatch(String),
    #[error("could not re-add the neighborhood of hub {hub}")]
    ReinsertionFailed { hub: VertexId },
}

/// Remaining graph during a reduction: the original graph with a set of
/// deleted vertices. Ids stay those of the original graph.
struct Residual<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    remaining: usize,
}

impl<'a> Residual<'a> {
    fn full(g: &'a Graph) -> Self {
        Residual {
            g,
            alive: vec![true; g.vertex_count()],
            degree: g.vertices().map(|v| g.degree(v)).collect(),
            remaining: g.vertex_count(),
        }
    }

    fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.g.vertices().filter(|&v| self.alive[v])
    }

    fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.alive[u] && self.alive[v] && self.g.has_edge(u, v)
    }

    fn remove(&mut self, vs: &[VertexId]) {
        for &v in vs {
            debug_assert!(self.alive[v]);
            self.alive[v] = false;
            self.remaining -= 1;
            for &w in self.g.neighbors(v) {
                self.degree[w] -= 1;
            }
        }
    }
}

/// Distinct vertices `v1, …, vt` with `|N(v_i) \ S| <= 2i - 1` for all `i`,
/// where `S` is the set of all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSequence {
    vertices: Vec<VertexId>,
}

impl ExtensionSequence {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self, SparseError> {
        check_sequence(&Residual::full(g), &vertices)?;
        Ok(ExtensionSequence { vertices })
    }

    /// `v1, …, vt` in position order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn t(&self) -> usize {
        self.vertices.len()
    }
}

fn check_sequence(res: &Residual, vertices: &[VertexId]) -> Result<(), SparseError> {
    if vertices.is_empty() {
        return Err(SparseError::InvalidSequence("sequence is empty".into()));
    }
    let mut in_s = vec![false; res.g.vertex_count()];
    for &v in vertices {
        if v >= in_s.len() || !res.alive[v] {
            return Err(SparseError::InvalidSequence(format!("vertex {v} is not in the graph")));
        }
        if in_s[v] {
            return Err(SparseError::InvalidSequence(format!("vertex {v} appears twice")));
        }
        in_s[v] = true;
    }
    for (i, &v) in vertices.iter().enumerate() {
        let outside = res.neighbors(v).filter(|&w| !in_s[w]).count();
        let bound = 2 * (i + 1) - 1;
        if outside > bound {
            return Err(SparseError::SequenceBound { position: i + 1, vertex: v, outside, bound });
        }
    }
    Ok(())
}

/// Extends an equitable `t`-tree-coloring of `g - S` to `g`.
///
/// `inner` uses the numbering of [`Graph::remove_vertices`] applied to the
/// sequence. Positions are colored `vt` first; `v_i` takes the lowest color
/// not already on `v_{i+1}, …, vt` that appears at most once among its colored
/// neighbors. The members of `S` end up with pairwise distinct colors.
pub fn extend_coloring(
    g: &Graph,
    seq: &ExtensionSequence,
    inner: &TreeColoring,
) -> Result<TreeColoring, SparseError> {
    let t = seq.t();
    if inner.t() != t {
        return Err(SparseError::InnerMismatch(format!("inner uses {} colors, sequence has {t}", inner.t())));
    }
    let (reduced, remap) = g
        .remove_vertices(seq.vertices())
        .map_err(|e| SparseError::InvalidSequence(e.to_string()))?;
    if inner.vertex_count() != reduced.vertex_count() {
        return Err(SparseError::InnerMismatch(format!(
            "inner colors {} vertices, reduced graph has {}",
            inner.vertex_count(),
            reduced.vertex_count()
        )));
    }
    let mut colors: Vec<usize> = remap
        .old_to_new
        .iter()
        .map(|m| m.map_or(0, |w| inner.color(w)))
        .collect();
    extend_in_place(g, seq.vertices(), t, &mut colors);
    Ok(TreeColoring::new(t, colors).expect("every vertex colored in 1..=t"))
}

/// Colors `seq` (currently uncolored, marked 0) given the colors of the other
/// vertices. Vertices still at 0 outside `seq` are treated as absent.
fn extend_in_place(g: &Graph, seq: &[VertexId], t: usize, colors: &mut [usize]) {
    let mut taken = vec![false; t + 1];
    let mut seen = vec![0usize; t + 1];
    for &v in seq.iter().rev() {
        seen.iter_mut().for_each(|s| *s = 0);
        for &w in g.neighbors(v) {
            seen[colors[w]] += 1;
        }
        let c = (1..=t)
            .find(|&c| !taken[c] && seen[c] <= 1)
            .unwrap_or_else(|| panic!("no admissible color for vertex {v}: sequence bound violated"));
        colors[v] = c;
        taken[c] = true;
    }
}

/// Structural configurations used to pick the vertices to remove.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConfigurationKind {
    /// C1.1: a vertex of degree at most 1.
    C11,
    /// C1.2: a 2-vertex with a neighbor of degree at most 6.
    C12,
    /// C1.3: a 3-vertex with a neighbor of degree at most 4 and another of
    /// degree at most 6.
    C13,
    /// C1.4(i): an `i`-vertex, `i` in 7..=9, with at least `i - 1` neighbors
    /// of degree 2.
    C14(usize),
    /// C2.1: a vertex of degree at most 1.
    C21,
    /// C2.2: a 2-vertex with a neighbor of degree at most 4.
    C22,
    /// C2.3: a 5-vertex whose five neighbors all have degree 2.
    C23,
    /// A vertex of degree at most 1 in an outerplanar graph.
    OpLeaf,
    /// OP-C1: two adjacent 2-vertices.
    OpC1,
    /// OP-C2: a triangle `uvw` with `d(u) = 2`, `d(v) = 3`.
    OpC2,
    /// OP-C3: triangles `uvw` and `xyw` sharing only `w`, with
    /// `d(u) = d(x) = 2` and `d(w) = 4`.
    OpC3,
    /// An edge `xy` with `d(x) = 2` and `d(y) <= 4`.
    OpReduced,
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigurationKind::C11 => f.write_str("C1.1"),
            ConfigurationKind::C12 => f.write_str("C1.2"),
            ConfigurationKind::C13 => f.write_str("C1.3"),
            ConfigurationKind::C14(i) => write!(f, "C1.4({i})"),
            ConfigurationKind::C21 => f.write_str("C2.1"),
            ConfigurationKind::C22 => f.write_str("C2.2"),
            ConfigurationKind::C23 => f.write_str("C2.3"),
            ConfigurationKind::OpLeaf => f.write_str("OP-leaf"),
            ConfigurationKind::OpC1 => f.write_str("OP-C1"),
            ConfigurationKind::OpC2 => f.write_str("OP-C2"),
            ConfigurationKind::OpC3 => f.write_str("OP-C3"),
            ConfigurationKind::OpReduced => f.write_str("OP-reduced"),
        }
    }
}

/// A configuration with its witness vertices.
///
/// Witness order by kind:
///
/// | kind | witnesses |
/// |---|---|
/// | C1.1, C2.1, OP-leaf | `[x]` |
/// | C1.2, C2.2, OP-reduced | `[x, y]`, `x` the 2-vertex |
/// | C1.3 | `[x, y, z]`, `d(y) <= 4`, `d(z) <= 6` |
/// | C1.4(i), C2.3 | `[x, x1, x2, …]`, the hub then its 2-neighbors ascending |
/// | OP-C1 | `[u, v]` |
/// | OP-C2 | `[u, v, w]` |
/// | OP-C3 | `[u, v, w, x, y]` |
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub kind: ConfigurationKind,
    pub witnesses: Vec<VertexId>,
}

impl Configuration {
    fn new(kind: ConfigurationKind, witnesses: Vec<VertexId>) -> Self {
        Configuration { kind, witnesses }
    }

    /// Whether the witnesses satisfy the defining conditions of the kind in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        self.holds(&Residual::full(g))
    }

    fn holds(&self, res: &Residual) -> bool {
        use ConfigurationKind::*;
        let w = &self.witnesses;
        let n = res.g.vertex_count();
        if w.iter().any(|&v| v >= n || !res.alive[v]) {
            return false;
        }
        let mut sorted = w.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != w.len() {
            return false;
        }
        let deg = |v: VertexId| res.degree(v);
        let adj = |u, v| res.adjacent(u, v);
        match (self.kind, w.as_slice()) {
            (C11 | C21 | OpLeaf, &[x]) => deg(x) <= 1,
            (C12, &[x, y]) => deg(x) == 2 && adj(x, y) && deg(y) <= 6,
            (C22, &[x, y]) => deg(x) == 2 && adj(x, y) && deg(y) <= 4,
            (OpReduced, &[x, y]) => deg(x) == 2 && adj(x, y) && deg(y) <= 4,
            (C13, &[x, y, z]) => deg(x) == 3 && adj(x, y) && adj(x, z) && deg(y) <= 4 && deg(z) <= 6,
            (C14(i), [x, twos @ ..]) => {
                (7..=9).contains(&i)
                    && deg(*x) == i
                    && twos.len() + 1 >= i
                    && twos.iter().all(|&y| adj(*x, y) && deg(y) == 2)
            }
            (C23, [x, twos @ ..]) => {
                deg(*x) == 5 && twos.len() == 5 && twos.iter().all(|&y| adj(*x, y) && deg(y) == 2)
            }
            (OpC1, &[u, v]) => deg(u) == 2 && deg(v) == 2 && adj(u, v),
            (OpC2, &[u, v, w]) => {
                deg(u) == 2 && deg(v) == 3 && adj(u, v) && adj(v, w) && adj(u, w)
            }
            (OpC3, &[u, v, w, x, y]) => {
                deg(u) == 2
                    && deg(x) == 2
                    && deg(w) == 4
                    && adj(u, v)
                    && adj(v, w)
                    && adj(u, w)
                    && adj(x, y)
                    && adj(y, w)
                    && adj(x, w)
            }
            _ => false,
        }
    }

    /// For outerplanar kinds: the vertex of degree at most 2 and, unless it
    /// is a leaf, a neighbor of degree at most 4.
    fn reduction_edge(&self) -> Option<(VertexId, Option<VertexId>)> {
        use ConfigurationKind::*;
        let w = &self.witnesses;
        match self.kind {
            OpLeaf => Some((w[0], None)),
            OpC1 | OpC2 | OpReduced => Some((w[0], Some(w[1]))),
            OpC3 => Some((w[0], Some(w[2]))),
            _ => None,
        }
    }
}

fn low_degree(res: &Residual, max: usize) -> Option<VertexId> {
    res.vertices().find(|&v| res.degree(v) <= max)
}

fn two_with_light_neighbor(res: &Residual, max: usize) -> Option<(VertexId, VertexId)> {
    res.vertices()
        .filter(|&x| res.degree(x) == 2)
        .find_map(|x| res.neighbors(x).find(|&y| res.degree(y) <= max).map(|y| (x, y)))
}

fn two_neighbors(res: &Residual, x: VertexId) -> Vec<VertexId> {
    res.neighbors(x).filter(|&y| res.degree(y) == 2).collect()
}

fn mad103(res: &Residual) -> Option<Configuration> {
    use ConfigurationKind::*;
    if let Some(x) = low_degree(res, 1) {
        return Some(Configuration::new(C11, vec![x]));
    }
    if let Some((x, y)) = two_with_light_neighbor(res, 6) {
        return Some(Configuration::new(C12, vec![x, y]));
    }
    for x in res.vertices().filter(|&x| res.degree(x) == 3) {
        for y in res.neighbors(x).filter(|&y| res.degree(y) <= 4) {
            if let Some(z) = res.neighbors(x).find(|&z| z != y && res.degree(z) <= 6) {
                return Some(Configuration::new(C13, vec![x, y, z]));
            }
        }
    }
    for x in res.vertices() {
        let i = res.degree(x);
        if (7..=9).contains(&i) {
            let twos = two_neighbors(res, x);
            if twos.len() + 1 >= i {
                return Some(Configuration::new(C14(i), [vec![x], twos].concat()));
            }
        }
    }
    None
}

fn mad3(res: &Residual) -> Option<Configuration> {
    use ConfigurationKind::*;
    if let Some(x) = low_degree(res, 1) {
        return Some(Configuration::new(C21, vec![x]));
    }
    if let Some((x, y)) = two_with_light_neighbor(res, 4) {
        return Some(Configuration::new(C22, vec![x, y]));
    }
    res.vertices().filter(|&x| res.degree(x) == 5).find_map(|x| {
        let twos = two_neighbors(res, x);
        (twos.len() == 5).then(|| Configuration::new(C23, [vec![x], twos].concat()))
    })
}

fn outerplanar(res: &Residual) -> Option<Configuration> {
    use ConfigurationKind::*;
    if let Some(x) = low_degree(res, 1) {
        return Some(Configuration::new(OpLeaf, vec![x]));
    }
    if let Some((u, v)) = two_with_light_neighbor(res, 2) {
        return Some(Configuration::new(OpC1, vec![u, v]));
    }
    let twos: Vec<VertexId> = res.vertices().filter(|&u| res.degree(u) == 2).collect();
    let ends = |u: VertexId| -> (VertexId, VertexId) {
        let mut it = res.neighbors(u);
        (it.next().expect("2-vertex"), it.next().expect("2-vertex"))
    };
    for &u in &twos {
        let (a, b) = ends(u);
        if res.adjacent(a, b) {
            for (v, w) in [(a, b), (b, a)] {
                if res.degree(v) == 3 {
                    return Some(Configuration::new(OpC2, vec![u, v, w]));
                }
            }
        }
    }
    for &u in &twos {
        let (a, b) = ends(u);
        if !res.adjacent(a, b) {
            continue;
        }
        for (v, w) in [(a, b), (b, a)] {
            if res.degree(w) != 4 {
                continue;
            }
            for x in res.neighbors(w).filter(|&x| x != u && x != v && res.degree(x) == 2) {
                let (p, q) = ends(x);
                let y = if p == w { q } else { p };
                if y != u && y != v && res.adjacent(y, w) {
                    return Some(Configuration::new(OpC3, vec![u, v, w, x, y]));
                }
            }
        }
    }
    two_with_light_neighbor(res, 4).map(|(x, y)| Configuration::new(OpReduced, vec![x, y]))
}

fn not_found(family: &'static str, res: &Residual) -> SparseError {
    SparseError::ConfigurationNotFound { family, remaining: res.remaining }
}

/// First configuration among C1.1, C1.2, C1.3, C1.4 (in that order, lowest
/// vertex id first). Graphs of maximum average degree below 10/3, in
/// particular planar graphs of girth at least 5, always contain one.
pub fn find_configuration_mad103(g: &Graph) -> Result<Configuration, SparseError> {
    let res = Residual::full(g);
    mad103(&res).ok_or_else(|| not_found("C1", &res))
}

/// First configuration among C2.1, C2.2, C2.3. Graphs of maximum average
/// degree below 3, in particular planar graphs of girth at least 6, always
/// contain one.
pub fn find_configuration_mad3(g: &Graph) -> Result<Configuration, SparseError> {
    let res = Residual::full(g);
    mad3(&res).ok_or_else(|| not_found("C2", &res))
}

/// A leaf, or one of OP-C1, OP-C2, OP-C3, or else an edge `xy` with
/// `d(x) = 2`, `d(y) <= 4`. Every outerplanar graph contains one.
pub fn find_configuration_outerplanar(g: &Graph) -> Result<Configuration, SparseError> {
    let res = Residual::full(g);
    outerplanar(&res).ok_or_else(|| not_found("outerplanar", &res))
}

/// Pinned positions (1-based) to vertices.
pub type Pins = BTreeMap<usize, VertexId>;

const FILL_NODE_LIMIT: usize = 100_000;

/// Completes `pinned` to an [`ExtensionSequence`] of length `t`.
///
/// Free positions are filled from `t` down to 1. Each takes a vertex with
/// fewest neighbors outside the vertices chosen so far (lowest id on ties),
/// restricted to vertices that can still meet the bound `2i - 1`. If the
/// result violates the bound at some position, earlier choices are revisited.
pub fn fill_sequence(g: &Graph, pinned: &Pins, t: usize) -> Result<ExtensionSequence, SparseError> {
    let res = Residual::full(g);
    let vertices = fill(&res, pinned, t)?;
    Ok(ExtensionSequence { vertices })
}

fn fill(res: &Residual, pinned: &Pins, t: usize) -> Result<Vec<VertexId>, SparseError> {
    if t == 0 {
        return Err(SparseError::InvalidSequence("sequence length must be positive".into()));
    }
    if res.remaining < t {
        return Err(SparseError::NotEnoughVertices { needed: t, available: res.remaining });
    }
    let n = res.g.vertex_count();
    let mut slots: Vec<Option<VertexId>> = vec![None; t];
    let mut in_s = vec![false; n];
    for (&pos, &v) in pinned {
        if pos == 0 || pos > t {
            return Err(SparseError::InvalidSequence(format!("position {pos} outside 1..={t}")));
        }
        if v >= n || !res.alive[v] || in_s[v] {
            return Err(SparseError::InvalidSequence(format!("pinned vertex {v} is absent or repeated")));
        }
        slots[pos - 1] = Some(v);
        in_s[v] = true;
    }
    let free: Vec<usize> = (0..t).rev().filter(|&i| slots[i].is_none()).collect();
    let mut filler = Filler { res, slots, in_s, nodes: 0, stuck_at: t };
    if filler.search(&free) {
        let seq: Vec<VertexId> = filler.slots.into_iter().map(|s| s.expect("filled")).collect();
        debug_assert!(check_sequence(res, &seq).is_ok());
        return Ok(seq);
    }
    if free.is_empty() {
        check_sequence(res, &filler.slots.iter().map(|s| s.expect("pinned")).collect::<Vec<_>>())?;
    }
    Err(SparseError::NoLowDegreeVertex { position: filler.stuck_at, remaining: res.remaining })
}

struct Filler<'r, 'g> {
    res: &'r Residual<'g>,
    slots: Vec<Option<VertexId>>,
    in_s: Vec<bool>,
    nodes: usize,
    stuck_at: usize,
}

impl Filler<'_, '_> {
    fn outside(&self, v: VertexId) -> usize {
        self.res.neighbors(v).filter(|&w| !self.in_s[w]).count()
    }

    fn search(&mut self, free: &[usize]) -> bool {
        let Some((&i, rest)) = free.split_first() else {
            let seq: Vec<VertexId> = self.slots.iter().map(|s| s.expect("filled")).collect();
            return check_sequence(self.res, &seq).is_ok();
        };
        let bound = 2 * (i + 1) - 1;
        let mut candidates: Vec<(usize, VertexId)> = self
            .res
            .vertices()
            .filter(|&v| !self.in_s[v])
            .map(|v| (self.outside(v), v))
            .filter(|&(out, _)| out <= bound)
            .collect();
        candidates.sort_unstable();
        if candidates.is_empty() {
            self.stuck_at = self.stuck_at.min(i + 1);
        }
        for (_, v) in candidates {
            self.nodes += 1;
            if self.nodes > FILL_NODE_LIMIT {
                return false;
            }
            self.slots[i] = Some(v);
            self.in_s[v] = true;
            if self.search(rest) {
                return true;
            }
            self.slots[i] = None;
            self.in_s[v] = false;
        }
        self.stuck_at = self.stuck_at.min(i + 1);
        false
    }
}

/// One reduction: either an extension sequence or a hub with `2t - 1` of its
/// degree-2 neighbors.
enum Step {
    Sequence(Vec<VertexId>),
    Hub { hub: VertexId, twos: Vec<VertexId> },
}

impl Step {
    fn removed(&self) -> Vec<VertexId> {
        match self {
            Step::Sequence(seq) => seq.clone(),
            Step::Hub { hub, twos } => [vec![*hub], twos.clone()].concat(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scheme {
    Girth5,
    Girth6,
    Outerplanar,
}

impl Scheme {
    fn next_step(self, res: &Residual, t: usize) -> Result<Step, SparseError> {
        use ConfigurationKind::*;
        let mut pins = Pins::new();
        match self {
            Scheme::Girth6 if t == 2 => {
                let cfg = mad3(res).ok_or_else(|| not_found("C2", res))?;
                let w = &cfg.witnesses;
                match cfg.kind {
                    C21 => {
                        pins.insert(1, w[0]);
                    }
                    C22 => {
                        pins.insert(1, w[0]);
                        pins.insert(2, w[1]);
                    }
                    C23 => return Ok(Step::Hub { hub: w[0], twos: w[1..4].to_vec() }),
                    _ => unreachable!("mad3 finder returns C2 kinds"),
                }
            }
            Scheme::Girth5 | Scheme::Girth6 => {
                let cfg = match mad103(res) {
                    Some(cfg) => cfg,
                    None if self == Scheme::Girth6 => mad3(res).ok_or_else(|| not_found("C1 or C2", res))?,
                    None => return Err(not_found("C1", res)),
                };
                let w = &cfg.witnesses;
                match cfg.kind {
                    C11 | C21 => {
                        pins.insert(1, w[0]);
                    }
                    C12 | C22 => {
                        pins.insert(1, w[0]);
                        pins.insert(t, w[1]);
                    }
                    C13 => {
                        pins.insert(1, w[0]);
                        pins.insert(2, w[1]);
                        pins.insert(t, w[2]);
                    }
                    C14(i) if i >= 8 && t == 3 => {
                        return Ok(Step::Hub { hub: w[0], twos: w[1..6].to_vec() });
                    }
                    C14(_) | C23 => {
                        pins.insert(1, w[1]);
                        pins.insert(2, w[2]);
                        pins.insert(t, w[0]);
                    }
                    _ => unreachable!("degree-based finders return C1 or C2 kinds"),
                }
            }
            Scheme::Outerplanar => {
                let cfg = outerplanar(res).ok_or_else(|| not_found("outerplanar", res))?;
                let (x, y) = cfg.reduction_edge().expect("outerplanar kind");
                pins.insert(1, x);
                if let Some(y) = y {
                    pins.insert(2, y);
                }
            }
        }
        fill(res, &pins, t).map(Step::Sequence)
    }
}

fn run_scheme(g: &Graph, t: usize, scheme: Scheme) -> Result<TreeColoring, SparseError> {
    let mut res = Residual::full(g);
    let mut steps = Vec::new();
    while res.remaining > t {
        let step = scheme.next_step(&res, t)?;
        res.remove(&step.removed());
        steps.push(step);
    }
    let mut colors = vec![0; g.vertex_count()];
    for (i, v) in res.vertices().enumerate() {
        colors[v] = i + 1;
    }
    for step in steps.iter().rev() {
        match step {
            Step::Sequence(seq) => extend_in_place(g, seq, t, &mut colors),
            Step::Hub { hub, twos } => reinsert_hub(g, *hub, twos, t, &mut colors)?,
        }
    }
    Ok(TreeColoring::new(t, colors).expect("every vertex colored in 1..=t"))
}

/// Colors `hub` and `twos` (currently 0) so that every class gains exactly
/// two of them, when possible.
///
/// The hub takes a color `c` that appears at most once on its colored
/// neighbors, and shares it with a 2-neighbor whose other neighbor is not
/// colored `c`; the remaining 2-neighbors go two by two to the other colors.
/// If no such choice is valid every assignment of the removed vertices is
/// tried.
fn reinsert_hub(
    g: &Graph,
    hub: VertexId,
    twos: &[VertexId],
    t: usize,
    colors: &mut [usize],
) -> Result<(), SparseError> {
    let mut usage = vec![0usize; t + 1];
    for &w in g.neighbors(hub) {
        usage[colors[w]] += 1;
    }
    let mut hub_colors: Vec<usize> = (1..=t).filter(|&c| usage[c] <= 1).collect();
    hub_colors.sort_by_key(|&c| (usage[c], c));
    let removed: Vec<VertexId> = [vec![hub], twos.to_vec()].concat();
    for &c in &hub_colors {
        for &partner in twos {
            let other_is_c = g.neighbors(partner).iter().any(|&w| w != hub && colors[w] == c);
            if usage[c] == 1 && other_is_c {
                continue;
            }
            colors[hub] = c;
            colors[partner] = c;
            let rest = twos.iter().filter(|&&v| v != partner);
            let others = (1..=t).filter(|&d| d != c).flat_map(|d| [d, d]);
            for (&v, d) in rest.zip(others) {
                colors[v] = d;
            }
            if extension_valid(g, colors, &removed, t) {
                return Ok(());
            }
            for &v in &removed {
                colors[v] = 0;
            }
        }
    }
    let total = t.pow(removed.len() as u32);
    for code in 0..total {
        let mut rem = code;
        for &v in &removed {
            colors[v] = rem % t + 1;
            rem /= t;
        }
        if extension_valid(g, colors, &removed, t) {
            return Ok(());
        }
    }
    for &v in &removed {
        colors[v] = 0;
    }
    Err(SparseError::ReinsertionFailed { hub })
}

/// Whether the colored vertices (nonzero) form an equitable coloring in which
/// every class component touching `added` is a tree.
fn extension_valid(g: &Graph, colors: &[usize], added: &[VertexId], t: usize) -> bool {
    let mut sizes = vec![0; t];
    for &c in colors.iter().filter(|&&c| c != 0) {
        sizes[c - 1] += 1;
    }
    if !is_equitable(&sizes) {
        return false;
    }
    let mut seen = vec![false; colors.len()];
    for &start in added {
        if seen[start] {
            continue;
        }
        let c = colors[start];
        seen[start] = true;
        let mut stack = vec![start];
        let (mut vertices, mut degree_sum) = (0usize, 0usize);
        while let Some(v) = stack.pop() {
            vertices += 1;
            for &w in g.neighbors(v) {
                if colors[w] == c {
                    degree_sum += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        if degree_sum / 2 + 1 != vertices {
            return false;
        }
    }
    true
}

fn check_edge_bound(g: &Graph, class: &'static str, bound: impl Fn(usize) -> usize) -> Result<(), SparseError> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n < 3 || g.is_forest() {
        return Ok(());
    }
    let bound = bound(n);
    if m > bound {
        return Err(SparseError::EdgeBoundViolated { edges: m, vertices: n, bound, class });
    }
    Ok(())
}

/// Largest edge count of a planar graph on `n >= 3` vertices with girth at
/// least `girth`, when it contains a cycle.
fn planar_girth_edge_bound(girth: usize) -> impl Fn(usize) -> usize {
    move |n| girth * (n - 2) / (girth - 2)
}

/// Equitable `t`-tree-coloring of a planar graph of girth at least 5, for
/// `t >= 3`.
pub fn color_girth5(g: &Graph, t: usize) -> Result<TreeColoring, SparseError> {
    if t < 3 {
        return Err(SparseError::TooFewColors { t, min: 3 });
    }
    check_edge_bound(g, "planar girth-5", planar_girth_edge_bound(5))?;
    run_scheme(g, t, Scheme::Girth5)
}

/// Equitable `t`-tree-coloring of a planar graph of girth at least 6, for
/// `t >= 2`.
pub fn color_girth6(g: &Graph, t: usize) -> Result<TreeColoring, SparseError> {
    if t < 2 {
        return Err(SparseError::TooFewColors { t, min: 2 });
    }
    check_edge_bound(g, "planar girth-6", planar_girth_edge_bound(6))?;
    run_scheme(g, t, Scheme::Girth6)
}

/// Equitable `t`-tree-coloring of an outerplanar graph, for `t >= 2`.
pub fn color_outerplanar(g: &Graph, t: usize) -> Result<TreeColoring, SparseError> {
    if t < 2 {
        return Err(SparseError::TooFewColors { t, min: 2 });
    }
    check_edge_bound(g, "outerplanar", |n| 2 * n - 3)?;
    run_scheme(g, t, Scheme::Outerplanar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify, Params};
    use crate::generators;
    use ConfigurationKind::*;

    fn assert_valid(g: &Graph, c: &TreeColoring) {
        let report = verify(g, c, &Params::tree(c.t()).unwrap()).unwrap();
        assert!(report.verdict, "{}", report.first_violation);
    }

    fn sorted_sizes(c: &TreeColoring) -> Vec<usize> {
        let mut s = c.class_sizes();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    fn k2m(m: usize) -> Graph {
        Graph::from_edges(m + 2, (2..m + 2).flat_map(|v| [(0, v), (1, v)])).unwrap()
    }

    #[test]
    fn star_extension_example() {
        let g = generators::star(3);
        let seq = ExtensionSequence::new(&g, vec![1, 0]).unwrap();
        // g - {1, 0} keeps leaves 2 and 3 as vertices 0 and 1.
        let inner = TreeColoring::new(2, vec![1, 2]).unwrap();
        let c = extend_coloring(&g, &seq, &inner).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2]);
        assert_valid(&g, &c);
    }

    #[test]
    fn whole_graph_sequence() {
        let g = generators::path(2).unwrap();
        let seq = ExtensionSequence::new(&g, vec![0, 1]).unwrap();
        let inner = TreeColoring::new(2, vec![]).unwrap();
        let c = extend_coloring(&g, &seq, &inner).unwrap();
        assert_eq!(c.colors(), &[2, 1]);
        let g = generators::cycle(3).unwrap();
        let seq = ExtensionSequence::new(&g, vec![0, 1, 2]).unwrap();
        let c = extend_coloring(&g, &seq, &TreeColoring::new(3, vec![]).unwrap()).unwrap();
        assert_eq!(sorted_sizes(&c), vec![1, 1, 1]);
    }

    #[test]
    fn sequence_invariant_enforced() {
        let g = generators::cycle(5).unwrap();
        assert!(matches!(
            ExtensionSequence::new(&g, vec![0, 2]),
            Err(SparseError::SequenceBound { position: 1, .. })
        ));
        assert!(ExtensionSequence::new(&g, vec![0, 0]).is_err());
        assert!(ExtensionSequence::new(&g, vec![0, 9]).is_err());
        assert!(ExtensionSequence::new(&g, vec![0, 1]).is_ok());
    }

    #[test]
    fn extend_rejects_mismatched_inner() {
        let g = generators::path(4).unwrap();
        let seq = ExtensionSequence::new(&g, vec![0, 1]).unwrap();
        let bad = TreeColoring::new(2, vec![1]).unwrap();
        assert!(matches!(extend_coloring(&g, &seq, &bad), Err(SparseError::InnerMismatch(_))));
        let bad = TreeColoring::new(3, vec![1, 2]).unwrap();
        assert!(matches!(extend_coloring(&g, &seq, &bad), Err(SparseError::InnerMismatch(_))));
    }

    #[test]
    fn mad103_examples() {
        let p3 = generators::path(3).unwrap();
        let cfg = find_configuration_mad103(&p3).unwrap();
        assert_eq!((cfg.kind, cfg.witnesses.clone()), (C11, vec![0]));
        let dodeca = generators::dodecahedron();
        let cfg = find_configuration_mad103(&dodeca).unwrap();
        assert_eq!(cfg.kind, C13);
        assert!(cfg.holds_in(&dodeca));
        let g = k2m(7);
        let cfg = find_configuration_mad103(&g).unwrap();
        assert_eq!(cfg.kind, C14(7));
        assert_eq!(cfg.witnesses[0], 0);
        assert!(cfg.holds_in(&g));
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert!(matches!(
            find_configuration_mad103(&k5),
            Err(SparseError::ConfigurationNotFound { .. })
        ));
    }

    #[test]
    fn mad3_examples() {
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(find_configuration_mad3(&c6).unwrap().kind, C22);
        let edge = generators::path(2).unwrap();
        assert_eq!(find_configuration_mad3(&edge).unwrap().kind, C21);
        let g = k2m(5);
        let cfg = find_configuration_mad3(&g).unwrap();
        assert_eq!(cfg.kind, C23);
        assert!(cfg.holds_in(&g));
        assert!(find_configuration_mad3(&generators::dodecahedron()).is_err());
    }

    #[test]
    fn outerplanar_examples() {
        let c4 = generators::cycle(4).unwrap();
        assert_eq!(find_configuration_outerplanar(&c4).unwrap().kind, OpC1);
        // K4 minus the edge {0, 1}: 0 and 1 have degree 2, 2 and 3 degree 3.
        let k4e = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cfg = find_configuration_outerplanar(&k4e).unwrap();
        assert_eq!(cfg.kind, OpC2);
        assert!(cfg.holds_in(&k4e));
        for seed in 0..5 {
            let tree = generators::random_tree(9, seed);
            assert_eq!(find_configuration_outerplanar(&tree).unwrap().kind, OpLeaf);
        }
        // Two triangles 0-1-2 and 3-4-2 sharing the degree-4 vertex 2.
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(find_configuration_outerplanar(&bowtie).unwrap().kind, OpC1);
        assert!(Configuration::new(OpC3, vec![0, 1, 2, 3, 4]).holds_in(&bowtie));
        assert!(!Configuration::new(OpC3, vec![0, 1, 2, 1, 4]).holds_in(&bowtie));
    }

    #[test]
    fn holds_rejects_wrong_witnesses() {
        let g = generators::dodecahedron();
        assert!(!Configuration::new(C11, vec![0]).holds_in(&g));
        assert!(!Configuration::new(C12, vec![0, 1]).holds_in(&g));
        assert!(!Configuration::new(C13, vec![0, 1, 1]).holds_in(&g));
        assert!(!Configuration::new(OpC1, vec![0]).holds_in(&g));
    }

    #[test]
    fn fill_examples() {
        let g = generators::dodecahedron();
        let seq = fill_sequence(&g, &Pins::new(), 3).unwrap();
        assert!(ExtensionSequence::new(&g, seq.vertices().to_vec()).is_ok());
        let p5 = generators::path(5).unwrap();
        let seq = fill_sequence(&p5, &Pins::from([(1, 0)]), 2).unwrap();
        assert_eq!(seq.vertices()[0], 0);
        assert!(ExtensionSequence::new(&p5, seq.vertices().to_vec()).is_ok());
        assert!(matches!(
            fill_sequence(&p5, &Pins::new(), 6),
            Err(SparseError::NotEnoughVertices { needed: 6, available: 5 })
        ));
        assert!(fill_sequence(&p5, &Pins::from([(3, 0)]), 2).is_err());
    }

    #[test]
    fn fill_reports_dense_graphs() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert!(matches!(
            fill_sequence(&k5, &Pins::new(), 2),
            Err(SparseError::NoLowDegreeVertex { .. })
        ));
    }

    #[test]
    fn girth5_examples() {
        let g = generators::dodecahedron();
        let c = color_girth5(&g, 3).unwrap();
        assert_valid(&g, &c);
        assert_eq!(sorted_sizes(&c), vec![7, 7, 6]);
        let c5 = generators::cycle(5).unwrap();
        let c = color_girth5(&c5, 3).unwrap();
        assert_valid(&c5, &c);
        assert_eq!(sorted_sizes(&c), vec![2, 2, 1]);
        for seed in 0..5 {
            let tree = generators::random_tree(30, seed);
            assert_valid(&tree, &color_girth5(&tree, 3).unwrap());
        }
        assert!(matches!(color_girth5(&c5, 2), Err(SparseError::TooFewColors { .. })));
    }

    #[test]
    fn girth5_hub_reinsertion() {
        // Two hubs of degree 8 joined through eight 2-vertices: C1.4(8) at t = 3.
        // The graph has girth 4, so the scheme is run without the edge gate.
        let g = k2m(8);
        assert_eq!(find_configuration_mad103(&g).unwrap().kind, C14(8));
        for t in 3..=6 {
            assert_valid(&g, &run_scheme(&g, t, Scheme::Girth5).unwrap());
        }
        let g = k2m(9);
        for t in 3..=5 {
            assert_valid(&g, &run_scheme(&g, t, Scheme::Girth5).unwrap());
        }
    }

    #[test]
    fn girth6_examples() {
        let hex = generators::hex_grid(2, 2).unwrap();
        let c = color_girth6(&hex, 2).unwrap();
        assert_valid(&hex, &c);
        let c6 = generators::cycle(6).unwrap();
        let c = color_girth6(&c6, 2).unwrap();
        assert_valid(&c6, &c);
        assert_eq!(sorted_sizes(&c), vec![3, 3]);
        let edge = generators::path(2).unwrap();
        assert_eq!(sorted_sizes(&color_girth6(&edge, 2).unwrap()), vec![1, 1]);
    }

    fn icosahedron() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            let (u, u2) = (1 + i, 1 + (i + 1) % 5);
            let (l, l2) = (6 + i, 6 + (i + 1) % 5);
            edges.extend([(0, u), (u, u2), (l, l2), (l, 11), (u, l), (u2, l)]);
        }
        Graph::from_edges(12, edges).unwrap()
    }

    #[test]
    fn girth6_hub_reinsertion() {
        let g = k2m(5);
        assert_valid(&g, &run_scheme(&g, 2, Scheme::Girth6).unwrap());
        // The subdivided icosahedron is planar with girth 6 and every
        // 2-vertex sits between two 5-vertices.
        let ico = icosahedron();
        assert!(ico.vertices().all(|v| ico.degree(v) == 5));
        let g = generators::subdivide(&ico, 1);
        assert_eq!(g.girth(), crate::Bound::Finite(6));
        assert_eq!(find_configuration_mad3(&g).unwrap().kind, C23);
        for t in 2..=8 {
            assert_valid(&g, &color_girth6(&g, t).unwrap());
        }
    }

    #[test]
    fn outerplanar_examples_color() {
        for seed in 0..5 {
            let g = generators::maximal_outerplanar_random(10, seed).unwrap();
            assert_valid(&g, &color_outerplanar(&g, 2).unwrap());
        }
        let tri = generators::cycle(3).unwrap();
        let c = color_outerplanar(&tri, 2).unwrap();
        assert_valid(&tri, &c);
        assert_eq!(sorted_sizes(&c), vec![2, 1]);
        let fan = generators::fan(6).unwrap();
        let c = color_outerplanar(&fan, 3).unwrap();
        assert_valid(&fan, &c);
        assert_eq!(sorted_sizes(&c), vec![2, 2, 2]);
    }

    #[test]
    fn edge_bound_gate() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(color_girth5(&k4, 3), Err(SparseError::EdgeBoundViolated { .. })));
        assert!(matches!(color_outerplanar(&k4, 2), Err(SparseError::EdgeBoundViolated { .. })));
        let tree = generators::star(10);
        assert!(color_girth6(&tree, 2).is_ok());
    }

    #[test]
    fn small_graphs_use_distinct_colors() {
        let g = generators::cycle(4).unwrap();
        let c = color_outerplanar(&g, 4).unwrap();
        let mut colors = c.colors().to_vec();
        colors.sort_unstable();
        assert_eq!(colors, vec![1, 2, 3, 4]);
        let c = color_girth5(&Graph::empty(0), 3).unwrap();
        assert_eq!(c.vertex_count(), 0);
    }
}
