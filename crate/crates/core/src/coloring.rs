//! Colorings, the `(t, k, d)` parameter triple, the verifier and certificates.

use serde::{Deserialize, Serialize};

use crate::bound::Bound;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("number of colors must be at least 1")]
    ZeroColors,
    #[error("coloring uses t = {coloring} but parameters say t = {params}")]
    ColorCountMismatch { coloring: usize, params: usize },
    #[error("coloring covers {colored} vertices but the graph has {vertex_count}")]
    PartialAssignment { colored: usize, vertex_count: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={t}")]
    ColorOutOfRange { vertex: VertexId, color: usize, t: usize },
}

/// The triple `(t, k, d)`: number of classes, maximum degree inside a class
/// and maximum component diameter inside a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub t: usize,
    pub k: Bound,
    pub d: Bound,
}

impl Params {
    pub fn new(t: usize, k: Bound, d: Bound) -> Result<Self, ColoringError> {
        if t == 0 {
            return Err(ColoringError::ZeroColors);
        }
        Ok(Params { t, k, d })
    }

    /// `(t, ∞, ∞)`: every class only has to induce a forest.
    pub fn tree(t: usize) -> Result<Self, ColoringError> {
        Self::new(t, Bound::Unbounded, Bound::Unbounded)
    }

    pub fn with_t(self, t: usize) -> Result<Self, ColoringError> {
        Self::new(t, self.k, self.d)
    }
}

/// A total map from vertices to colors `1..=t`. Empty classes are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeColoring {
    t: usize,
    colors: Vec<usize>,
}

impl TreeColoring {
    pub fn new(t: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if t == 0 {
            return Err(ColoringError::ZeroColors);
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > t) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, t });
        }
        Ok(TreeColoring { t, colors })
    }

    /// Builds a coloring in which `classes[i]` receives color `i + 1`.
    ///
    /// Panics if the classes do not partition `0..n`; callers are
    /// constructions whose classes are correct by design.
    pub(crate) fn from_classes(n: usize, t: usize, classes: &[Vec<VertexId>]) -> Self {
        assert!(classes.len() <= t, "{} classes for t = {t}", classes.len());
        let mut colors = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                assert_eq!(colors[v], 0, "vertex {v} placed twice");
                colors[v] = i + 1;
            }
        }
        assert!(colors.iter().all(|&c| c != 0), "classes do not cover every vertex");
        TreeColoring { t, colors }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.t];
        for &c in &self.colors {
            sizes[c - 1] += 1;
        }
        sizes
    }

    /// Vertices of each class, in increasing id order; index `i` is color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut classes = vec![Vec::new(); self.t];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }
}

/// Sizes all lie in `{⌊N/t⌋, ⌈N/t⌉}` (equivalently, differ pairwise by at most one).
pub fn is_equitable(sizes: &[usize]) -> bool {
    match (sizes.iter().min(), sizes.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub color: usize,
    pub size: usize,
    pub is_forest: bool,
    pub max_degree: usize,
    pub max_diameter: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub equitable: bool,
    pub classes: Vec<ClassReport>,
    pub verdict: bool,
    /// Empty when `verdict` holds.
    pub first_violation: String,
}

/// Checks that `c` is an equitable `(t, k, d)`-tree-coloring of `g`.
///
/// Malformed input (wrong `t`, wrong length) is an error rather than a
/// negative verdict.
pub fn verify(g: &Graph, c: &TreeColoring, p: &Params) -> Result<VerificationReport, ColoringError> {
    if c.t != p.t {
        return Err(ColoringError::ColorCountMismatch { coloring: c.t, params: p.t });
    }
    if c.colors.len() != g.vertex_count() {
        return Err(ColoringError::PartialAssignment {
            colored: c.colors.len(),
            vertex_count: g.vertex_count(),
        });
    }

    let sizes = c.class_sizes();
    let equitable = is_equitable(&sizes);
    let mut first_violation = String::new();
    if !equitable {
        let n = g.vertex_count();
        first_violation = format!(
            "class sizes {:?} not all in {{{}, {}}}",
            sizes,
            n / p.t,
            n.div_ceil(p.t)
        );
    }

    let mut classes = Vec::with_capacity(p.t);
    for (i, members) in c.classes().iter().enumerate() {
        let report = class_report(g, i + 1, members);
        if first_violation.is_empty() {
            if !report.is_forest {
                first_violation = format!("class {} does not induce a forest", report.color);
            } else if !p.k.admits(report.max_degree) {
                first_violation = format!(
                    "class {} has induced degree {} > k = {}",
                    report.color, report.max_degree, p.k
                );
            } else if !p.d.admits(report.max_diameter) {
                first_violation = format!(
                    "class {} has a component of diameter {} > d = {}",
                    report.color, report.max_diameter, p.d
                );
            }
        }
        classes.push(report);
    }

    Ok(VerificationReport {
        equitable,
        classes,
        verdict: first_violation.is_empty(),
        first_violation,
    })
}

fn class_report(g: &Graph, color: usize, members: &[VertexId]) -> ClassReport {
    let h = g.induced(members);
    let is_forest = h.is_forest();
    let max_diameter = if is_forest {
        forest_diameter(&h)
    } else {
        h.component_diameter_max()
    };
    ClassReport {
        color,
        size: members.len(),
        is_forest,
        max_degree: h.max_degree(),
        max_diameter,
    }
}

/// Largest tree diameter in a forest, by double BFS per component.
fn forest_diameter(h: &Graph) -> usize {
    h.components()
        .iter()
        .map(|comp| {
            let d0 = h.bfs_distances(comp[0]);
            let far = comp.iter().copied().max_by_key(|&v| d0[v]).unwrap_or(comp[0]);
            let d1 = h.bfs_distances(far);
            comp.iter().map(|&v| d1[v]).max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

/// Serialized coloring: `{"n_vertices", "t", "k", "d", "colors"}`, with
/// `null` for an unbounded `k` or `d` and `colors[i]` the color of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n_vertices: usize,
    pub t: usize,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub colors: Vec<usize>,
}

impl Certificate {
    pub fn new(coloring: &TreeColoring, params: &Params) -> Self {
        Certificate {
            n_vertices: coloring.vertex_count(),
            t: params.t,
            k: params.k.finite(),
            d: params.d.finite(),
            colors: coloring.colors.clone(),
        }
    }

    pub fn params(&self) -> Result<Params, ColoringError> {
        Params::new(self.t, Bound::from_option(self.k), Bound::from_option(self.d))
    }

    pub fn coloring(&self) -> Result<TreeColoring, ColoringError> {
        if self.colors.len() != self.n_vertices {
            return Err(ColoringError::PartialAssignment {
                colored: self.colors.len(),
                vertex_count: self.n_vertices,
            });
        }
        TreeColoring::new(self.t, self.colors.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
