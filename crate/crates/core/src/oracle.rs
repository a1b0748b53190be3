//! Exhaustive search for equitable `(t, k, d)`-tree-colorings of small graphs.
//!
//! Vertices are colored one at a time (descending degree, ties by id). A
//! branch is cut when a class would exceed `⌈N/t⌉`, when the remaining
//! vertices cannot fill every class up to `⌊N/t⌋`, when the new vertex would
//! close a cycle or break the degree or diameter limit inside its class, and
//! by color symmetry: a vertex may only open the lowest unused color.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bipartite::{self, Variant};
use crate::bound::Bound;
use crate::coloring::{verify, Params, TreeColoring};
use crate::generators::complete_bipartite;
use crate::graph::{Graph, VertexId};

/// Largest graph the bitmask search accepts.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_cap: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000, time_cap: Duration::from_secs(60) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Feasible(TreeColoring),
    Infeasible,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SearchOutcome::Feasible(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; the exhaustive search handles at most {MAX_VERTICES}")]
    GraphTooLarge(usize),
    #[error("search budget must be positive")]
    EmptyBudget,
}

struct Search<'a> {
    adj: Vec<u64>,
    order: Vec<VertexId>,
    params: &'a Params,
    class_mask: Vec<u64>,
    sizes: Vec<usize>,
    color_of: Vec<usize>,
    floor: usize,
    ceil: usize,
    big_allowed: usize,
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    exhausted_budget: bool,
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            i
        })
    })
}

impl Search<'_> {
    /// Vertices reachable from `start` inside `within`.
    fn flood(&self, start: usize, within: u64) -> u64 {
        let mut reached = 1u64 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u] & within;
            }
            frontier = next & !reached;
            reached |= frontier;
        }
        reached
    }

    /// Farthest vertex from `start` inside `within`, with its distance.
    fn farthest(&self, start: usize, within: u64) -> (usize, usize) {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        let mut depth = 0;
        let mut last = start;
        loop {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u] & within;
            }
            next &= !seen;
            if next == 0 {
                return (last, depth);
            }
            depth += 1;
            last = next.trailing_zeros() as usize;
            seen |= next;
            frontier = next;
        }
    }

    fn admissible(&self, v: usize, c: usize) -> bool {
        let size = self.sizes[c] + 1;
        if size > self.ceil {
            return false;
        }
        if size > self.floor {
            let big = self.sizes.iter().filter(|&&s| s > self.floor).count();
            if big + 1 > self.big_allowed {
                return false;
            }
        }
        let class = self.class_mask[c];
        let nb = self.adj[v] & class;
        if let Bound::Finite(k) = self.params.k {
            if nb.count_ones() as usize > k {
                return false;
            }
            if bits(nb).any(|u| (self.adj[u] & class).count_ones() as usize + 1 > k) {
                return false;
            }
        }
        // Two neighbors in one component of the class would close a cycle.
        let mut covered = 0u64;
        let mut merged = 1u64 << v;
        for u in bits(nb) {
            if covered & (1 << u) != 0 {
                return false;
            }
            let comp = self.flood(u, class);
            covered |= comp;
            merged |= comp;
        }
        if let Bound::Finite(d) = self.params.d {
            if nb != 0 {
                // The merged component is a tree, so double BFS gives its diameter.
                let within = merged;
                let (far, _) = self.farthest(v, within);
                let (_, diameter) = self.farthest(far, within);
                if diameter > d {
                    return false;
                }
            }
        }
        true
    }

    fn deficit_ok(&self, remaining: usize) -> bool {
        let deficit: usize = self.sizes.iter().map(|&s| self.floor.saturating_sub(s)).sum();
        deficit <= remaining
    }

    fn run(&mut self, depth: usize, max_used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let remaining_after = self.order.len() - depth - 1;
        let limit = (max_used + 1).min(self.params.t);
        for c in 0..limit {
            self.nodes += 1;
            if self.nodes >= self.budget.max_nodes
                || (self.nodes & 0x3ff == 0 && self.started.elapsed() >= self.budget.time_cap)
            {
                self.exhausted_budget = true;
                return false;
            }
            if !self.admissible(v, c) {
                continue;
            }
            self.sizes[c] += 1;
            self.class_mask[c] |= 1 << v;
            self.color_of[v] = c;
            if self.deficit_ok(remaining_after) && self.run(depth + 1, max_used.max(c + 1)) {
                return true;
            }
            self.sizes[c] -= 1;
            self.class_mask[c] &= !(1 << v);
            if self.exhausted_budget {
                return false;
            }
        }
        false
    }
}

/// Complete backtracking search for an equitable `(t, k, d)`-tree-coloring.
///
/// `Infeasible` is only returned after the whole (pruned) tree is exhausted;
/// running out of nodes or time gives `BudgetExceeded`.
pub fn brute_force_search(
    g: &Graph,
    params: &Params,
    budget: SearchBudget,
) -> Result<SearchOutcome, OracleError> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(OracleError::GraphTooLarge(n));
    }
    if budget.max_nodes == 0 || budget.time_cap.is_zero() {
        return Err(OracleError::EmptyBudget);
    }
    let t = params.t;
    let adj = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        adj,
        order,
        params,
        class_mask: vec![0; t],
        sizes: vec![0; t],
        color_of: vec![0; n],
        floor: n / t,
        ceil: n.div_ceil(t),
        big_allowed: n % t,
        nodes: 0,
        budget,
        started: Instant::now(),
        exhausted_budget: false,
    };
    if search.run(0, 0) {
        let colors = search.color_of.iter().map(|c| c + 1).collect();
        let coloring = TreeColoring::new(t, colors).expect("colors lie in 1..=t");
        debug_assert!(verify(g, &coloring, params).is_ok_and(|r| r.verdict));
        Ok(SearchOutcome::Feasible(coloring))
    } else if search.exhausted_budget {
        Ok(SearchOutcome::BudgetExceeded)
    } else {
        Ok(SearchOutcome::Infeasible)
    }
}

/// Unpruned reference: tries all `t^N` assignments and runs the verifier on
/// each. Only for tiny graphs.
pub fn exhaustive_reference(g: &Graph, params: &Params) -> Option<TreeColoring> {
    let n = g.vertex_count();
    let t = params.t;
    let mut colors = vec![1; n];
    loop {
        let c = TreeColoring::new(t, colors.clone()).expect("colors lie in 1..=t");
        if verify(g, &c, params).is_ok_and(|r| r.verdict) {
            return Some(c);
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            if colors[i] < t {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckEntry {
    pub n: usize,
    pub q: usize,
    pub variant: Variant,
    pub exact: bool,
    pub oracle: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub checked: usize,
    pub disagreements: Vec<CrossCheckEntry>,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares [`bipartite::feasible_11`] and [`bipartite::feasible_inf2`]
/// against the exhaustive search on `K_{n,n}` for `n <= n_max`, `q <= q_max`.
/// A budget overrun counts as a disagreement.
pub fn cross_check_bipartite(n_max: usize, q_max: usize, budget: SearchBudget) -> Result<CrossCheckReport, OracleError> {
    let mut report = CrossCheckReport::default();
    for n in 1..=n_max {
        let (g, _) = complete_bipartite(n).expect("n >= 1");
        for q in 1..=q_max {
            for variant in [Variant::OneOne, Variant::InfTwo] {
                let exact = match variant {
                    Variant::OneOne => bipartite::feasible_11(n, q),
                    Variant::InfTwo => bipartite::feasible_inf2(n, q).is_some(),
                };
                let outcome = brute_force_search(&g, &variant.params(q), budget)?;
                report.checked += 1;
                let agrees = match &outcome {
                    SearchOutcome::Feasible(_) => exact,
                    SearchOutcome::Infeasible => !exact,
                    SearchOutcome::BudgetExceeded => false,
                };
                if !agrees {
                    let oracle = match outcome {
                        SearchOutcome::Feasible(_) => "feasible",
                        SearchOutcome::Infeasible => "infeasible",
                        SearchOutcome::BudgetExceeded => "budget-exceeded",
                    };
                    report.disagreements.push(CrossCheckEntry { n, q, variant, exact, oracle: oracle.into() });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use Bound::{Finite, Unbounded};

    fn search(g: &Graph, t: usize, k: Bound, d: Bound) -> SearchOutcome {
        brute_force_search(g, &Params::new(t, k, d).unwrap(), SearchBudget::default()).unwrap()
    }

    #[test]
    fn k55_has_no_3_11_coloring() {
        let (g, _) = generators::complete_bipartite(5).unwrap();
        assert_eq!(search(&g, 3, Finite(1), Finite(1)), SearchOutcome::Infeasible);
    }

    #[test]
    fn cycle_is_not_a_forest() {
        let g = generators::cycle(5).unwrap();
        assert_eq!(search(&g, 1, Finite(2), Unbounded), SearchOutcome::Infeasible);
    }

    #[test]
    fn path_fits_in_one_class() {
        let g = generators::path(4).unwrap();
        assert!(search(&g, 1, Unbounded, Unbounded).is_feasible());
        assert_eq!(search(&g, 1, Unbounded, Finite(2)), SearchOutcome::Infeasible);
    }

    #[test]
    fn witnesses_verify() {
        let g = generators::dodecahedron();
        for t in 2..=4 {
            let p = Params::tree(t).unwrap();
            match brute_force_search(&g, &p, SearchBudget::default()).unwrap() {
                SearchOutcome::Feasible(c) => assert!(verify(&g, &c, &p).unwrap().verdict),
                other => panic!("t = {t}: {other:?}"),
            }
        }
    }

    #[test]
    fn budget_exceeded_is_distinct() {
        let (g, _) = generators::complete_bipartite(8).unwrap();
        let p = Params::new(5, Finite(1), Finite(1)).unwrap();
        let tiny = SearchBudget { max_nodes: 10, time_cap: Duration::from_secs(10) };
        assert_eq!(brute_force_search(&g, &p, tiny).unwrap(), SearchOutcome::BudgetExceeded);
        let zero = SearchBudget { max_nodes: 0, ..tiny };
        assert_eq!(brute_force_search(&g, &p, zero), Err(OracleError::EmptyBudget));
    }

    #[test]
    fn rejects_large_graphs() {
        let g = generators::path(65).unwrap();
        assert_eq!(
            brute_force_search(&g, &Params::tree(2).unwrap(), SearchBudget::default()),
            Err(OracleError::GraphTooLarge(65))
        );
    }

    #[test]
    fn small_cross_check_examples() {
        let (g, _) = generators::complete_bipartite(3).unwrap();
        assert!(search(&g, 2, Unbounded, Finite(2)).is_feasible());
        assert!(bipartite::feasible_inf2(3, 2).is_some());
    }

    #[test]
    fn empty_graph_and_many_colors() {
        let g = Graph::empty(0);
        assert!(search(&g, 3, Finite(0), Finite(0)).is_feasible());
        let g = generators::path(2).unwrap();
        match search(&g, 4, Finite(0), Finite(0)) {
            SearchOutcome::Feasible(c) => assert_eq!(c.class_sizes().iter().sum::<usize>(), 2),
            other => panic!("{other:?}"),
        }
    }
}
