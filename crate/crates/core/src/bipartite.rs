//! Equitable tree-colorings of the balanced complete bipartite graph `K_{n,n}`.
//!
//! Vertices `0..n` form the side `X` and `n..2n` the side `Y`. With `q`
//! classes, write `2n = a·q + r` with `0 <= r < q`; every class of an
//! equitable coloring then has size `a` or `a + 1`, and exactly `r` classes
//! have size `a + 1`.
//!
//! Two parameter regimes are covered:
//!
//! * `(1, 1)`: every class is a one-sided independent set or a single edge.
//! * `(∞, 2)`: every class is one-sided or a star with its center on the
//!   other side (anything with two vertices on each side contains a 4-cycle).
//!   Any `(k, d)` with `k >= 2` reduces to this, since induced forests of
//!   `K_{n,n}` have diameter at most 2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bound::Bound;
use crate::coloring::{Params, TreeColoring};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BipartiteError {
    #[error("K_{{n,n}} needs n >= 1")]
    ZeroSide,
    #[error("number of classes must be at least 1")]
    ZeroClasses,
    #[error("t = {0} must be even")]
    OddClassCount(usize),
    #[error("q = {0} must be odd")]
    EvenClassCount(usize),
    #[error("q = {q} is below the bound {bound} ({name})")]
    BelowBound { q: usize, bound: usize, name: &'static str },
    #[error("q = {q} must be below n = {n} for the case formulas")]
    QTooLarge { q: usize, n: usize },
    #[error("class-count vector is infeasible for n = {n}, q = {q}: {reason}")]
    InfeasibleVector { n: usize, q: usize, reason: String },
    #[error("case formulas give a negative or fractional count for n = {n}, q = {q} ({detail})")]
    FormulaOutOfRange { n: usize, q: usize, detail: String },
    #[error("({x}, {y}) does not solve {a}x + {}y = {n}", a + 1)]
    NotASolution { a: usize, n: usize, x: usize, y: usize },
    #[error("K_{{{n},{n}}} has no equitable {variant} coloring with {q} classes")]
    Infeasible { n: usize, q: usize, variant: Variant },
}

/// The two `(k, d)` regimes with exact machinery for `K_{n,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `(k, d) = (1, 1)`.
    OneOne,
    /// `(k, d) = (∞, 2)`.
    InfTwo,
}

impl Variant {
    pub fn params(self, q: usize) -> Params {
        let (k, d) = match self {
            Variant::OneOne => (Bound::Finite(1), Bound::Finite(1)),
            Variant::InfTwo => (Bound::Unbounded, Bound::Finite(2)),
        };
        Params { t: q, k, d }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::OneOne => "(q,1,1)",
            Variant::InfTwo => "(q,inf,2)",
        })
    }
}

/// `(a, r)` with `2n = a·q + r`, `0 <= r < q`.
pub fn division(n: usize, q: usize) -> (usize, usize) {
    (2 * n / q, 2 * n % q)
}

/// Counts of the eight class types of an equitable `(q, ∞, 2)`-coloring.
///
/// | field | X-vertices | Y-vertices |
/// |-------|-----------|------------|
/// | `x1`  | a + 1     | 0          |
/// | `x2`  | a         | 0          |
/// | `x1p` | a         | 1          |
/// | `x2p` | a − 1     | 1          |
///
/// and symmetrically `y1, y2, y1p, y2p` with the sides exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ClassCountVector {
    pub a: usize,
    pub r: usize,
    pub x1: usize,
    pub x2: usize,
    pub x1p: usize,
    pub x2p: usize,
    pub y1: usize,
    pub y2: usize,
    pub y1p: usize,
    pub y2p: usize,
}

impl ClassCountVector {
    /// All-zero counts with `a` and `r` derived from `(n, q)`.
    pub fn empty(n: usize, q: usize) -> Self {
        let (a, r) = division(n, q);
        ClassCountVector { a, r, ..Default::default() }
    }

    pub fn total(&self) -> usize {
        self.x1 + self.x2 + self.x1p + self.x2p + self.y1 + self.y2 + self.y1p + self.y2p
    }

    /// Left-hand sides of the two counting equations (vertices consumed from
    /// `X` and from `Y`). `None` when a type with `a − 1` vertices is used
    /// while `a = 0`.
    pub fn side_consumption(&self) -> Option<(usize, usize)> {
        let a = self.a;
        if a == 0 && (self.x2p > 0 || self.y2p > 0) {
            return None;
        }
        let am1 = a.saturating_sub(1);
        let x = (a + 1) * self.x1 + a * self.x2 + a * self.x1p + am1 * self.x2p + self.y1p + self.y2p;
        let y = (a + 1) * self.y1 + a * self.y2 + a * self.y1p + am1 * self.y2p + self.x1p + self.x2p;
        Some((x, y))
    }

    /// Checks `a`, `r`, the class total and both counting equations.
    pub fn check(&self, n: usize, q: usize) -> Result<(), BipartiteError> {
        let fail = |reason: String| Err(BipartiteError::InfeasibleVector { n, q, reason });
        if q == 0 {
            return Err(BipartiteError::ZeroClasses);
        }
        let (a, r) = division(n, q);
        if (self.a, self.r) != (a, r) {
            return fail(format!("(a, r) = ({}, {}) but 2n = {a}·{q} + {r}", self.a, self.r));
        }
        if self.total() != q {
            return fail(format!("{} classes listed", self.total()));
        }
        match self.side_consumption() {
            None => fail("types with a - 1 vertices on one side need a >= 1".into()),
            Some((x, y)) if x != n || y != n => {
                fail(format!("counting equations give ({x}, {y}) instead of ({n}, {n})"))
            }
            Some(_) => Ok(()),
        }
    }
}

impl fmt::Display for ClassCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} r={} x1={} x2={} x1p={} x2p={} y1={} y2={} y1p={} y2p={}",
            self.a, self.r, self.x1, self.x2, self.x1p, self.x2p, self.y1, self.y2, self.y1p, self.y2p
        )
    }
}

/// A nonnegative solution of `a·x + (a+1)·y = n`: `x` parts of size `a`
/// and `y` parts of size `a + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionPair {
    pub x: usize,
    pub y: usize,
}

impl SolutionPair {
    pub fn z(&self) -> usize {
        self.x + self.y
    }
}

/// Hands out consecutive vertex ids from one side.
struct Cursor {
    next: VertexId,
    end: VertexId,
}

impl Cursor {
    fn take(&mut self, count: usize) -> std::ops::Range<VertexId> {
        let start = self.next;
        self.next += count;
        assert!(self.next <= self.end, "side exhausted");
        start..self.next
    }
}

fn sides(n: usize) -> (Cursor, Cursor) {
    (Cursor { next: 0, end: n }, Cursor { next: n, end: 2 * n })
}

/// Splits `len` items into `parts` consecutive blocks whose sizes differ by at most one.
fn equitable_blocks(start: usize, len: usize, parts: usize) -> Vec<Vec<VertexId>> {
    let base = len / parts;
    let extra = len % parts;
    let mut next = start;
    (0..parts)
        .map(|i| {
            let size = base + usize::from(i < extra);
            let block = (next..next + size).collect();
            next += size;
            block
        })
        .collect()
}

fn finish(n: usize, q: usize, classes: Vec<Vec<VertexId>>, params: Params) -> TreeColoring {
    let coloring = TreeColoring::from_classes(2 * n, q, &classes);
    debug_assert!(
        post_check(n, &coloring, &params),
        "construction for K_{{{n},{n}}} with {params:?} does not verify"
    );
    coloring
}

#[cfg(debug_assertions)]
fn post_check(n: usize, coloring: &TreeColoring, params: &Params) -> bool {
    let (g, _) = crate::generators::complete_bipartite(n).expect("n >= 1");
    crate::coloring::verify(&g, coloring, params).is_ok_and(|r| r.verdict)
}

#[cfg(not(debug_assertions))]
fn post_check(_: usize, _: &TreeColoring, _: &Params) -> bool {
    true
}

/// Even `t`: each side is cut into `t/2` near-equal independent classes.
///
/// Both sides are split into blocks of size `⌊n/(t/2)⌋` or `⌈n/(t/2)⌉`,
/// which are exactly `⌊2n/t⌋` and `⌈2n/t⌉`, so the coloring is equitable and
/// proper; it is valid for every `(k, d)`.
pub fn even_t_coloring(n: usize, t: usize) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    if t == 0 || !t.is_multiple_of(2) {
        return Err(BipartiteError::OddClassCount(t));
    }
    let half = t / 2;
    let mut classes = equitable_blocks(0, n, half);
    classes.extend(equitable_blocks(n, n, half));
    let params = Params { t, k: Bound::Finite(0), d: Bound::Finite(0) };
    Ok(finish(n, t, classes, params))
}

/// Smallest odd `q` covered by [`odd_q_11_coloring`]: `2⌊(n+1)/3⌋ + 1`.
pub fn odd_q_11_bound(n: usize) -> usize {
    2 * ((n + 1) / 3) + 1
}

/// Equitable `(q, 1, 1)`-coloring for odd `q >= 2⌊(n+1)/3⌋ + 1`.
///
/// Edge `i` is `(i, n + i)`. For `q < n`, `3q − 2n` edges become classes and
/// the rest of each side is cut into `n − q` triples; for `n <= q < 2n`,
/// `2n − q` edges become classes and everything else is a singleton; for
/// `q >= 2n` every vertex is a singleton.
pub fn odd_q_11_coloring(n: usize, q: usize) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    if q.is_multiple_of(2) {
        return Err(BipartiteError::EvenClassCount(q));
    }
    let bound = odd_q_11_bound(n);
    if q < bound {
        return Err(BipartiteError::BelowBound { q, bound, name: "2⌊(n+1)/3⌋+1" });
    }
    let mut classes: Vec<Vec<VertexId>> = Vec::with_capacity(q);
    if q < n {
        let edges = 3 * q - 2 * n;
        classes.extend((0..edges).map(|i| vec![i, n + i]));
        let triples = n - q;
        classes.extend(equitable_blocks(edges, n - edges, triples));
        classes.extend(equitable_blocks(n + edges, n - edges, triples));
    } else if q < 2 * n {
        let edges = 2 * n - q;
        classes.extend((0..edges).map(|i| vec![i, n + i]));
        classes.extend((edges..n).map(|v| vec![v]));
        classes.extend((n + edges..2 * n).map(|v| vec![v]));
    } else {
        classes.extend((0..2 * n).map(|v| vec![v]));
    }
    Ok(finish(n, q, classes, Variant::OneOne.params(q)))
}

/// Materializes a class-count vector as an equitable `(q, ∞, 2)`-coloring.
///
/// Types are laid out in the order `x1, x2, x1p, x2p, y1, y2, y1p, y2p`,
/// consuming vertices left to right from each side.
pub fn realize_class_counts(
    n: usize,
    q: usize,
    counts: &ClassCountVector,
) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    counts.check(n, q)?;
    let a = counts.a;
    let (mut xs, mut ys) = sides(n);
    let mut classes: Vec<Vec<VertexId>> = Vec::with_capacity(q);
    // (count, vertices from the major side, vertices from the minor side)
    let x_major = [(counts.x1, a + 1, 0), (counts.x2, a, 0), (counts.x1p, a, 1), (counts.x2p, a.saturating_sub(1), 1)];
    let y_major = [(counts.y1, a + 1, 0), (counts.y2, a, 0), (counts.y1p, a, 1), (counts.y2p, a.saturating_sub(1), 1)];
    for (count, major, minor) in x_major {
        for _ in 0..count {
            classes.push(xs.take(major).chain(ys.take(minor)).collect());
        }
    }
    for (count, major, minor) in y_major {
        for _ in 0..count {
            classes.push(ys.take(major).chain(xs.take(minor)).collect());
        }
    }
    Ok(finish(n, q, classes, Variant::InfTwo.params(q)))
}

/// Exact integer square root.
pub fn isqrt(value: u64) -> u64 {
    value.isqrt()
}

/// `t = ⌊(−3 + √(8n+9)) / 2⌋`, the largest `t` with `t(t+3) <= 2n`.
pub fn sqrt_parameter(n: usize) -> usize {
    let s = isqrt(8 * n as u64 + 9) as usize;
    (s - 3) / 2
}

/// `2⌊(n+1)/3⌋`.
pub fn va11_upper(n: usize) -> usize {
    2 * ((n + 1) / 3)
}

/// `2⌊⌊(−1 + √(8n+9))/2⌋ / 2⌋`, computed without floating point.
pub fn vainf2_upper(n: usize) -> usize {
    let s = isqrt(8 * n as u64 + 9) as usize;
    let u = (s - 1) / 2;
    2 * (u / 2)
}

/// Class counts from the three-case construction for odd `q` with
/// `2⌊(t+1)/2⌋ <= q < n`.
///
/// The formulas presuppose `r <= a − 2`; when that fails a count becomes
/// negative and [`BipartiteError::FormulaOutOfRange`] is returned.
pub fn geq_t_coloring(n: usize, q: usize) -> Result<ClassCountVector, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    if q.is_multiple_of(2) {
        return Err(BipartiteError::EvenClassCount(q));
    }
    let t = sqrt_parameter(n);
    let bound = 2 * t.div_ceil(2);
    if q < bound {
        return Err(BipartiteError::BelowBound { q, bound, name: "2⌊(t+1)/2⌋" });
    }
    if q >= n {
        return Err(BipartiteError::QTooLarge { q, n });
    }
    let (a, r) = division(n, q);
    let (ai, ri, qi) = (a as i64, r as i64, q as i64);
    // Each entry is (numerator, denominator) for one count.
    let (case, vals): (u8, [(i64, i64); 4]) = if qi <= 2 * ri + 1 {
        (1, [(qi - 1, 2), (2 * qi - ai - ri, 2), (2 * ri + 1 - qi, 2), (ai - ri, 2)])
    } else if 2 * ri + 3 <= qi && qi < ai + ri {
        (2, [(qi + 1, 2), (ai + ri - 1 - qi, 2), (qi - 2 * ri - 1, 2), (qi + ri - ai + 1, 2)])
    } else {
        (3, [(qi - 1, 2), (qi - ai - ri + 1, 2), (ri, 1), (ai - ri, 2)])
    };
    let mut out = [0usize; 4];
    for (slot, (num, den)) in out.iter_mut().zip(vals) {
        if num < 0 || num % den != 0 {
            return Err(BipartiteError::FormulaOutOfRange {
                n,
                q,
                detail: format!("case {case}, a = {a}, r = {r}, count {num}/{den}"),
            });
        }
        *slot = (num / den) as usize;
    }
    let mut v = ClassCountVector::empty(n, q);
    match case {
        1 => [v.x1, v.y2, v.y1p, v.y2p] = out,
        2 => [v.x2p, v.y1, v.y2, v.y1p] = out,
        _ => [v.x2, v.y2, v.y1p, v.y2p] = out,
    }
    debug_assert!(v.check(n, q).is_ok(), "case {case} counts {v} fail the counting equations");
    Ok(v)
}

/// `true` iff `t` is odd, `t | 2n` and `2n/t − t >= 2`; then `K_{n,n}` has
/// no equitable `(t, ∞, 2)`-tree-coloring.
pub fn lemma_t_impossible(n: usize, t: usize) -> bool {
    t % 2 == 1 && (2 * n).is_multiple_of(t) && (2 * n / t) >= t + 2
}

/// All nonnegative solutions of `a·x + (a+1)·y = n`, ascending in `x`.
pub fn solve_linear(a: usize, n: usize) -> Vec<SolutionPair> {
    assert!(a >= 1, "solve_linear needs a >= 1");
    (0..=n / (a + 1))
        .rev()
        .filter_map(|y| {
            let rest = n - (a + 1) * y;
            rest.is_multiple_of(a).then_some(SolutionPair { x: rest / a, y })
        })
        .collect()
}

/// Cuts `X` according to `s1` and `Y` according to `s2` (parts of size `a`
/// first, then `a + 1`), giving an equitable coloring with `z1 + z2` one-sided
/// classes. Valid for every `(k, d)`.
pub fn two_solution_coloring(
    n: usize,
    a: usize,
    s1: SolutionPair,
    s2: SolutionPair,
) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    for s in [s1, s2] {
        if a == 0 || a * s.x + (a + 1) * s.y != n {
            return Err(BipartiteError::NotASolution { a, n, x: s.x, y: s.y });
        }
    }
    let q = s1.z() + s2.z();
    let (mut xs, mut ys) = sides(n);
    let mut classes = Vec::with_capacity(q);
    for (s, side) in [(s1, &mut xs), (s2, &mut ys)] {
        classes.extend((0..s.x).map(|_| side.take(a).collect()));
        classes.extend((0..s.y).map(|_| side.take(a + 1).collect()));
    }
    let params = Params { t: q, k: Bound::Finite(0), d: Bound::Finite(0) };
    Ok(finish(n, q, classes, params))
}

/// Witness shape for a `(q, 1, 1)` coloring: `edges` single-edge classes and,
/// on each side, `parts` one-sided classes of sizes `a`/`a+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct OneOneShape {
    edges: usize,
    x_parts: usize,
    y_parts: usize,
}

/// Range of part counts `s` with which `len` vertices split into parts of
/// size `a` or `a + 1`: `⌈len/(a+1)⌉ ..= ⌊len/a⌋` (possibly empty).
fn part_count_range(len: usize, a: usize) -> (usize, usize) {
    (len.div_ceil(a + 1), len / a)
}

fn one_one_shape(n: usize, q: usize) -> Option<OneOneShape> {
    let (a, _) = division(n, q);
    debug_assert!(a >= 1);
    // A mixed class with (1,1) must be a single edge, of size 2.
    let max_edges = if a == 1 || a == 2 { n } else { 0 };
    (0..=max_edges.min(q)).find_map(|edges| {
        let (lo, hi) = part_count_range(n - edges, a);
        let want = q - edges;
        if lo > hi || want < 2 * lo || want > 2 * hi {
            return None;
        }
        let x_parts = lo.max(want.saturating_sub(hi));
        Some(OneOneShape { edges, x_parts, y_parts: want - x_parts })
    })
}

/// Exact: does `K_{n,n}` admit an equitable `(q, 1, 1)`-tree-coloring?
///
/// For `a = ⌊2n/q⌋ >= 3` every class is one-sided, so the answer is whether
/// two solutions of `a·x + (a+1)·y = n` have `z1 + z2 = q`. For `a <= 2`
/// single-edge classes are also possible and the class types are enumerated.
pub fn feasible_11(n: usize, q: usize) -> bool {
    if n == 0 || q == 0 {
        return false;
    }
    if q > 2 * n {
        return true;
    }
    let (a, _) = division(n, q);
    if a >= 3 {
        let zs: Vec<usize> = solve_linear(a, n).iter().map(SolutionPair::z).collect();
        zs.iter().any(|z1| zs.iter().any(|z2| z1 + z2 == q))
    } else {
        one_one_shape(n, q).is_some()
    }
}

/// A verifying `(q, 1, 1)` coloring whenever [`feasible_11`] holds.
pub fn witness_11(n: usize, q: usize) -> Option<TreeColoring> {
    if n == 0 || q == 0 {
        return None;
    }
    if q >= 2 * n {
        return Some(singletons(n, q));
    }
    let (a, _) = division(n, q);
    if a >= 3 {
        let sols = solve_linear(a, n);
        let (s1, s2) = sols
            .iter()
            .flat_map(|&s1| sols.iter().map(move |&s2| (s1, s2)))
            .find(|(s1, s2)| s1.z() + s2.z() == q)?;
        return two_solution_coloring(n, a, s1, s2).ok();
    }
    let shape = one_one_shape(n, q)?;
    let mut classes: Vec<Vec<VertexId>> = (0..shape.edges).map(|i| vec![i, n + i]).collect();
    for (start, parts) in [(shape.edges, shape.x_parts), (n + shape.edges, shape.y_parts)] {
        let len = n - shape.edges;
        let big = len - a * parts;
        let mut next = start;
        for i in 0..parts {
            let size = if i < big { a + 1 } else { a };
            classes.push((next..next + size).collect());
            next += size;
        }
    }
    Some(finish(n, q, classes, Variant::OneOne.params(q)))
}

fn singletons(n: usize, q: usize) -> TreeColoring {
    let classes: Vec<Vec<VertexId>> = (0..2 * n).map(|v| vec![v]).collect();
    finish(n, q, classes, Params { t: q, k: Bound::Finite(0), d: Bound::Finite(0) })
}

/// Exact: a class-count vector for an equitable `(q, ∞, 2)`-tree-coloring
/// of `K_{n,n}`, or `None` if there is none.
///
/// Let `A` be the number of X-major classes (types `x*`), of which `p` have
/// size `a + 1`, and let `M`, `M'` be the numbers of mixed classes on each
/// side. The `X` side consumes `a·A + p − M + M'` vertices, and for fixed `A`
/// the admissible `p`, `M`, `M'` each range over an interval, so the set of
/// reachable consumptions is an interval too. The witness uses the least
/// feasible `A`, then the least `p`.
pub fn feasible_inf2(n: usize, q: usize) -> Option<ClassCountVector> {
    if n == 0 || q == 0 {
        return None;
    }
    let mut v = ClassCountVector::empty(n, q);
    if q > 2 * n {
        v.x1 = n;
        v.y1 = n;
        v.x2 = q - 2 * n;
        return Some(v);
    }
    let (a, r) = (v.a, v.r);
    let (ni, ai) = (n as i64, a as i64);
    for big_a in 0..=q {
        let b = q - big_a;
        let p_lo = r.saturating_sub(b);
        let p_hi = big_a.min(r);
        if p_lo > p_hi {
            continue;
        }
        let (ai_a, bi, aa) = (ai * big_a as i64, b as i64, big_a as i64);
        // Need aA + p − A <= n <= aA + p + B.
        let lo = (p_lo as i64).max(ni - ai_a - bi);
        let hi = (p_hi as i64).min(ni - ai_a + aa);
        if lo > hi {
            continue;
        }
        let p = lo as usize;
        let excess = ai_a + p as i64 - ni; // M − M'
        let (mixed_x, mixed_y) = if excess >= 0 {
            (excess as usize, 0)
        } else {
            (0, (-excess) as usize)
        };
        v.x1p = mixed_x.min(p);
        v.x2p = mixed_x - v.x1p;
        v.x1 = p - v.x1p;
        v.x2 = big_a - p - v.x2p;
        let p_y = r - p;
        v.y1p = mixed_y.min(p_y);
        v.y2p = mixed_y - v.y1p;
        v.y1 = p_y - v.y1p;
        v.y2 = b - p_y - v.y2p;
        debug_assert!(v.check(n, q).is_ok(), "bad witness {v}");
        return Some(v);
    }
    None
}

/// Smallest `t` such that `feasible` holds for every `t' >= t`, given that it
/// holds for every `t' >= upper`.
fn strong_threshold(upper: usize, feasible: impl Fn(usize) -> bool) -> usize {
    let mut answer = upper.max(1);
    while answer > 1 && feasible(answer - 1) {
        answer -= 1;
    }
    answer
}

/// Strong equitable `(1,1)`-vertex-arboricity of `K_{n,n}`.
pub fn exact_va11(n: usize) -> usize {
    strong_threshold(va11_upper(n), |q| feasible_11(n, q))
}

/// Strong equitable `(∞,2)`-vertex-arboricity of `K_{n,n}`.
pub fn exact_vainf2(n: usize) -> usize {
    strong_threshold(vainf2_upper(n), |q| feasible_inf2(n, q).is_some())
}

/// Constructive side of the `(1,1)` upper bound: a coloring for every
/// `q >= 2⌊(n+1)/3⌋`.
pub fn construct_11(n: usize, q: usize) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    let bound = va11_upper(n).max(1);
    if q < bound {
        return Err(BipartiteError::BelowBound { q, bound, name: "2⌊(n+1)/3⌋" });
    }
    if q.is_multiple_of(2) {
        even_t_coloring(n, q)
    } else {
        odd_q_11_coloring(n, q)
    }
}

/// Constructive side of the `(∞,2)` upper bound: a coloring for every
/// `q >= vainf2_upper(n)`.
///
/// Odd `q` tries the three-case formulas, then the `(1,1)` construction
/// (whose classes are also valid here), then an exact class-count witness.
pub fn construct_inf2(n: usize, q: usize) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    let bound = vainf2_upper(n).max(1);
    if q < bound {
        return Err(BipartiteError::BelowBound { q, bound, name: "vainf2_upper(n)" });
    }
    if q.is_multiple_of(2) {
        return even_t_coloring(n, q);
    }
    if let Ok(counts) = geq_t_coloring(n, q) {
        return realize_class_counts(n, q, &counts);
    }
    if q >= odd_q_11_bound(n) {
        return odd_q_11_coloring(n, q);
    }
    let counts = feasible_inf2(n, q).ok_or(BipartiteError::Infeasible { n, q, variant: Variant::InfTwo })?;
    realize_class_counts(n, q, &counts)
}

/// Any verifying coloring for the given variant, or `Infeasible`.
pub fn witness(n: usize, q: usize, variant: Variant) -> Result<TreeColoring, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSide);
    }
    if q == 0 {
        return Err(BipartiteError::ZeroClasses);
    }
    let infeasible = BipartiteError::Infeasible { n, q, variant };
    match variant {
        Variant::OneOne => witness_11(n, q).ok_or(infeasible),
        Variant::InfTwo => {
            let counts = feasible_inf2(n, q).ok_or(infeasible)?;
            realize_class_counts(n, q, &counts)
        }
    }
}
