//! Exhaustive generation of connected labeled graphs with a given order and
//! edge count, and extremal scans over them.
//!
//! Generation is a depth-first walk over the vertex pairs in a fixed order,
//! deciding include/exclude for each. A branch is abandoned when
//!
//! * too few pairs remain to reach `m` edges, or
//! * the chosen edges together with every still-undecided pair cannot
//!   connect the vertex set.
//!
//! The second test runs at every node on 16-bit adjacency masks. Each
//! connected labeled graph with `m` edges is delivered exactly once.
//!
//! Scans split the walk into disjoint prefixes (the include/exclude choices
//! on the first few pairs) and reduce per-prefix trackers with an associative
//! and commutative merge, so reports do not depend on the worker count.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, form_from_code, CanonicalForm};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{evaluate_parts, IndexId};

pub const REPORT_SCHEMA: u32 = 1;
/// Default order cap for tricyclic scans.
pub const TRICYCLIC_CAP: usize = 8;
/// Default order cap otherwise, and the hard cap with the override flag.
pub const ORDER_CAP: usize = 9;
/// Largest order the raw generator accepts (edge masks are `u64`).
pub const GENERATOR_MAX_ORDER: usize = 11;
/// Pairs decided before work is handed out.
const PREFIX_DEPTH: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("cyclomatic number {0} is outside 0..=3")]
    Cyclomatic(usize),
    #[error("order must be at least 1")]
    NoVertices,
    #[error("{m} edges do not fit on {n} vertices")]
    TooDense { n: usize, m: usize },
    #[error("n = {n} with cyclomatic number {c} exceeds the default cap of {cap}; pass --allow-large to override (n = 9, c = 3 walks about C(36, 11) = 600M subsets)")]
    OverCap { n: usize, c: usize, cap: usize },
    #[error("n = {n} exceeds the hard enumeration limit of {limit}")]
    BeyondLimit { n: usize, limit: usize },
    #[error("worker pool: {0}")]
    Pool(String),
}

/// What to enumerate: connected graphs of order `n` and cyclomatic number `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n: usize,
    pub c: usize,
    /// Canonicalize and deduplicate witnesses.
    pub dedup: bool,
    pub workers: usize,
    pub allow_large: bool,
}

impl EnumSpec {
    pub fn new(n: usize, c: usize) -> Self {
        EnumSpec {
            n,
            c,
            dedup: true,
            workers: 1,
            allow_large: false,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn allow_large(mut self, allow: bool) -> Self {
        self.allow_large = allow;
        self
    }

    pub fn dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn edges(&self) -> usize {
        self.n + self.c - 1
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.c > 3 {
            return Err(EnumError::Cyclomatic(self.c));
        }
        if self.n == 0 {
            return Err(EnumError::NoVertices);
        }
        if self.n > ORDER_CAP {
            return Err(EnumError::BeyondLimit {
                n: self.n,
                limit: ORDER_CAP,
            });
        }
        if self.c == 3 && self.n > TRICYCLIC_CAP && !self.allow_large {
            return Err(EnumError::OverCap {
                n: self.n,
                c: self.c,
                cap: TRICYCLIC_CAP,
            });
        }
        let m = self.edges();
        if m > self.n * (self.n - 1) / 2 {
            return Err(EnumError::TooDense { n: self.n, m });
        }
        Ok(())
    }

    fn generator(&self) -> Result<ConnectedSubsets, EnumError> {
        self.validate()?;
        ConnectedSubsets::new(self.n, self.edges())
    }
}

/// A labeled graph handed to visitors. Borrowed from the generator's state.
pub struct LabeledGraph<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    degrees: &'a [usize],
    adj: &'a [u16],
    mask: u64,
}

impl LabeledGraph<'_> {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in the order they were chosen.
    pub fn edges(&self) -> &[(usize, usize)] {
        self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        self.degrees
    }

    /// Bit `i` is set when the `i`-th pair in lexicographic order is an edge.
    /// Independent of the generator's pair ordering.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn index(&self, id: IndexId) -> u128 {
        evaluate_parts(id, self.degrees, self.edges)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("generator yields simple graphs")
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        form_from_code(self.n, canonical_code(self.adj))
    }

    pub(crate) fn canonical_code(&self) -> u64 {
        canonical_code(self.adj)
    }
}

/// Lexicographic index of the pair `(a, b)`, `a < b`, among all pairs of `0..n`.
fn lex_index(n: usize, a: usize, b: usize) -> usize {
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Rebuilds a graph from a lexicographic edge mask.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = lex_pairs(n);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Graph::new(n, edges).expect("mask within range")
}

fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// One unit of work: the decisions on the first `depth` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prefix {
    pub depth: usize,
    /// Bit `i` set when pair `i` (generator order) is included.
    pub chosen: u64,
}

#[derive(Clone)]
struct State {
    adj: [u16; 16],
    deg: [usize; 16],
    edges: Vec<(usize, usize)>,
    mask: u64,
}

/// Connected labeled graphs on `0..n` with exactly `m` edges.
#[derive(Debug, Clone)]
pub struct ConnectedSubsets {
    n: usize,
    m: usize,
    pairs: Vec<(usize, usize)>,
    lex: Vec<usize>,
    /// `reach[i][v]`: neighbours of `v` among `pairs[i..]`.
    reach: Vec<Vec<u16>>,
}

impl ConnectedSubsets {
    pub fn new(n: usize, m: usize) -> Result<Self, EnumError> {
        Self::with_order(n, m, lex_pairs(n))
    }

    /// Uses `pairs` as the decision order; it must list every pair of `0..n`
    /// exactly once.
    pub fn with_order(n: usize, m: usize, pairs: Vec<(usize, usize)>) -> Result<Self, EnumError> {
        if n == 0 {
            return Err(EnumError::NoVertices);
        }
        if n > GENERATOR_MAX_ORDER {
            return Err(EnumError::BeyondLimit {
                n,
                limit: GENERATOR_MAX_ORDER,
            });
        }
        let total = n * (n - 1) / 2;
        if m > total {
            return Err(EnumError::TooDense { n, m });
        }
        let pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        let mut seen = vec![false; total];
        let lex: Vec<usize> = pairs.iter().map(|&(a, b)| lex_index(n, a, b)).collect();
        for &i in &lex {
            assert!(!std::mem::replace(&mut seen[i], true), "pair listed twice");
        }
        assert_eq!(pairs.len(), total, "every pair must be listed");
        let mut reach = vec![vec![0u16; n]; total + 1];
        for i in (0..total).rev() {
            let (a, b) = pairs[i];
            reach[i] = reach[i + 1].clone();
            reach[i][a] |= 1 << b;
            reach[i][b] |= 1 << a;
        }
        Ok(ConnectedSubsets {
            n,
            m,
            pairs,
            lex,
            reach,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn empty_state(&self) -> State {
        State {
            adj: [0; 16],
            deg: [0; 16],
            edges: Vec::with_capacity(self.m),
            mask: 0,
        }
    }

    fn push(&self, st: &mut State, i: usize) {
        let (a, b) = self.pairs[i];
        st.adj[a] |= 1 << b;
        st.adj[b] |= 1 << a;
        st.deg[a] += 1;
        st.deg[b] += 1;
        st.edges.push((a, b));
        st.mask |= 1 << self.lex[i];
    }

    fn pop(&self, st: &mut State, i: usize) {
        let (a, b) = self.pairs[i];
        st.adj[a] &= !(1 << b);
        st.adj[b] &= !(1 << a);
        st.deg[a] -= 1;
        st.deg[b] -= 1;
        st.edges.pop();
        st.mask &= !(1 << self.lex[i]);
    }

    fn spans(&self, st: &State, extra: &[u16]) -> bool {
        let all: u16 = if self.n == 16 { u16::MAX } else { (1 << self.n) - 1 };
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = (st.adj[v] | extra[v]) & !seen;
            seen |= next;
            frontier |= next;
        }
        seen == all
    }

    fn viable(&self, st: &State, i: usize) -> bool {
        st.edges.len() + (self.pairs.len() - i) >= self.m && self.spans(st, &self.reach[i])
    }

    fn walk<F: FnMut(&LabeledGraph<'_>)>(&self, st: &mut State, i: usize, f: &mut F) -> u64 {
        if st.edges.len() == self.m {
            if self.spans(st, &self.reach[self.pairs.len()]) {
                f(&LabeledGraph {
                    n: self.n,
                    edges: &st.edges,
                    degrees: &st.deg[..self.n],
                    adj: &st.adj[..self.n],
                    mask: st.mask,
                });
                return 1;
            }
            return 0;
        }
        if !self.viable(st, i) {
            return 0;
        }
        self.push(st, i);
        let mut count = self.walk(st, i + 1, f);
        self.pop(st, i);
        count += self.walk(st, i + 1, f);
        count
    }

    /// Visits every graph; returns how many were visited.
    pub fn for_each<F: FnMut(&LabeledGraph<'_>)>(&self, mut f: F) -> u64 {
        let mut st = self.empty_state();
        self.walk(&mut st, 0, &mut f)
    }

    /// Viable prefixes of length `depth` (shorter where a branch completes
    /// early), in walk order. Their subtrees partition the search.
    pub fn prefixes(&self, depth: usize) -> Vec<Prefix> {
        let depth = depth.min(self.pairs.len());
        let mut out = Vec::new();
        let mut st = self.empty_state();
        self.collect_prefixes(&mut st, 0, 0, depth, &mut out);
        out
    }

    fn collect_prefixes(&self, st: &mut State, i: usize, chosen: u64, depth: usize, out: &mut Vec<Prefix>) {
        if i == depth || st.edges.len() == self.m {
            out.push(Prefix { depth: i, chosen });
            return;
        }
        if !self.viable(st, i) {
            return;
        }
        self.push(st, i);
        self.collect_prefixes(st, i + 1, chosen | 1 << i, depth, out);
        self.pop(st, i);
        self.collect_prefixes(st, i + 1, chosen, depth, out);
    }

    /// Visits the graphs extending `prefix`.
    pub fn for_each_in<F: FnMut(&LabeledGraph<'_>)>(&self, prefix: Prefix, mut f: F) -> u64 {
        let mut st = self.empty_state();
        for i in 0..prefix.depth {
            if prefix.chosen >> i & 1 == 1 {
                self.push(&mut st, i);
            }
        }
        self.walk(&mut st, prefix.depth, &mut f)
    }

    /// Folds each prefix's subtree into an accumulator on a pool of
    /// `workers` threads and reduces the accumulators with `merge`.
    pub fn par_fold<A, Init, Step, Merge>(
        &self,
        workers: usize,
        init: Init,
        step: Step,
        merge: Merge,
    ) -> Result<(A, u64), EnumError>
    where
        A: Send,
        Init: Fn() -> A + Sync + Send,
        Step: Fn(&mut A, &LabeledGraph<'_>) + Sync + Send,
        Merge: Fn(A, A) -> A + Sync + Send,
    {
        let prefixes = self.prefixes(PREFIX_DEPTH);
        let run = || {
            prefixes
                .par_iter()
                .map(|&p| {
                    let mut acc = init();
                    let count = self.for_each_in(p, |g| step(&mut acc, g));
                    (acc, count)
                })
                .reduce(
                    || (init(), 0),
                    |(a, ca), (b, cb)| (merge(a, b), ca + cb),
                )
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .map_err(|e| EnumError::Pool(e.to_string()))?;
        Ok(pool.install(run))
    }
}

/// Visits every connected labeled graph of the spec's class.
pub fn enumerate_connected<F: FnMut(&LabeledGraph<'_>)>(
    spec: &EnumSpec,
    visitor: F,
) -> Result<EnumSummary, EnumError> {
    let gen = spec.generator()?;
    let visited = gen.for_each(visitor);
    Ok(EnumSummary {
        n: spec.n,
        edges: gen.m,
        visited,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSummary {
    pub n: usize,
    pub edges: usize,
    pub visited: u64,
}

/// Running extremum with every labeled graph attaining it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extreme {
    pub value: Option<u128>,
    pub masks: Vec<u64>,
}

impl Extreme {
    fn offer(&mut self, value: u128, mask: u64, better: fn(u128, u128) -> bool) {
        match self.value {
            Some(cur) if better(cur, value) => {}
            Some(cur) if cur == value => self.masks.push(mask),
            _ => {
                self.value = Some(value);
                self.masks.clear();
                self.masks.push(mask);
            }
        }
    }

    fn merge(mut self, mut other: Extreme, better: fn(u128, u128) -> bool) -> Extreme {
        match (self.value, other.value) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) if a == b => {
                self.masks.append(&mut other.masks);
                self
            }
            (Some(a), Some(b)) => {
                if better(a, b) {
                    self
                } else {
                    other
                }
            }
        }
    }
}

/// Min/max tracker. `merge` is associative and commutative up to the order
/// of witness masks, which are sorted before reporting.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtremalTracker {
    pub min: Extreme,
    pub max: Extreme,
}

fn smaller(a: u128, b: u128) -> bool {
    a < b
}

fn larger(a: u128, b: u128) -> bool {
    a > b
}

impl ExtremalTracker {
    pub fn offer(&mut self, value: u128, mask: u64) {
        self.min.offer(value, mask, smaller);
        self.max.offer(value, mask, larger);
    }

    pub fn merge(self, other: ExtremalTracker) -> ExtremalTracker {
        ExtremalTracker {
            min: self.min.merge(other.min, smaller),
            max: self.max.merge(other.max, larger),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremum {
    pub value: u128,
    /// Labeled graphs attaining the value.
    pub labeled_witnesses: u64,
    /// Isomorphism classes among them, when witnesses are deduplicated.
    pub classes: Option<usize>,
    /// graph6 lines: canonical forms when deduplicated, labeled otherwise.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub schema: u32,
    pub n: usize,
    pub cyclomatic: usize,
    pub edges: usize,
    pub index: IndexId,
    pub visited: u64,
    pub dedup: bool,
    pub min: Extremum,
    pub max: Extremum,
    pub wall_time_ms: u64,
}

impl ExtremalReport {
    /// The report with timing zeroed, for comparisons across runs.
    pub fn without_timing(&self) -> ExtremalReport {
        ExtremalReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn min_classes(&self) -> Vec<CanonicalForm> {
        forms(&self.min.witnesses)
    }

    pub fn max_classes(&self) -> Vec<CanonicalForm> {
        forms(&self.max.witnesses)
    }

    pub fn csv_header() -> &'static str {
        "n,cyclomatic,edges,index,visited,min,min_classes,max,max_classes,wall_time_ms"
    }

    pub fn csv_row(&self) -> String {
        let classes = |e: &Extremum| e.classes.map(|c| c.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.cyclomatic,
            self.edges,
            self.index,
            self.visited,
            self.min.value,
            classes(&self.min),
            self.max.value,
            classes(&self.max),
            self.wall_time_ms
        )
    }
}

fn forms(lines: &[String]) -> Vec<CanonicalForm> {
    lines
        .iter()
        .map(|l| {
            crate::canon::canonical_form(&graph6::decode(l).expect("report witnesses are graph6"))
                .expect("enumerated orders are canonicalizable")
        })
        .collect()
}

fn summarize(n: usize, e: Extreme, dedup: bool) -> Extremum {
    let value = e.value.expect("a valid spec has at least one graph");
    let labeled_witnesses = e.masks.len() as u64;
    if dedup {
        let codes: BTreeSet<CanonicalForm> = e
            .masks
            .par_iter()
            .map(|&mask| {
                let g = graph_from_mask(n, mask);
                form_from_code(n, canonical_code(&crate::canon::bitsets(&g)))
            })
            .collect();
        Extremum {
            value,
            labeled_witnesses,
            classes: Some(codes.len()),
            witnesses: codes.into_iter().map(|c| c.as_str().to_string()).collect(),
        }
    } else {
        let mut masks = e.masks;
        masks.sort_unstable();
        Extremum {
            value,
            labeled_witnesses,
            classes: None,
            witnesses: masks
                .into_iter()
                .map(|m| graph6::encode(&graph_from_mask(n, m)))
                .collect(),
        }
    }
}

/// One pass over the class keeping the running min and max of `index` and
/// every labeled graph attaining them.
pub fn extremal_scan(spec: &EnumSpec, index: IndexId) -> Result<ExtremalReport, EnumError> {
    let gen = spec.generator()?;
    scan_with(spec, &gen, index)
}

/// As [`extremal_scan`] but walking pairs in a caller-chosen order.
pub fn extremal_scan_ordered(
    spec: &EnumSpec,
    index: IndexId,
    pairs: Vec<(usize, usize)>,
) -> Result<ExtremalReport, EnumError> {
    spec.validate()?;
    let gen = ConnectedSubsets::with_order(spec.n, spec.edges(), pairs)?;
    scan_with(spec, &gen, index)
}

fn scan_with(spec: &EnumSpec, gen: &ConnectedSubsets, index: IndexId) -> Result<ExtremalReport, EnumError> {
    let start = Instant::now();
    let (tracker, visited) = gen.par_fold(
        spec.workers,
        ExtremalTracker::default,
        |t, g| t.offer(g.index(index), g.mask()),
        ExtremalTracker::merge,
    )?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers.max(1))
        .build()
        .map_err(|e| EnumError::Pool(e.to_string()))?;
    let (min, max) = pool.install(|| {
        (
            summarize(spec.n, tracker.min, spec.dedup),
            summarize(spec.n, tracker.max, spec.dedup),
        )
    });
    Ok(ExtremalReport {
        schema: REPORT_SCHEMA,
        n: spec.n,
        cyclomatic: spec.c,
        edges: spec.edges(),
        index,
        visited,
        dedup: spec.dedup,
        min,
        max,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Canonical forms of the pendant-free graphs (minimum degree at least two)
/// in the class, sorted and deduplicated.
pub fn brace_census(spec: &EnumSpec) -> Result<Vec<CanonicalForm>, EnumError> {
    if spec.c == 0 {
        return Err(EnumError::Cyclomatic(0));
    }
    let gen = spec.generator()?;
    let n = spec.n;
    let (codes, _) = gen.par_fold(
        spec.workers,
        BTreeSet::new,
        |acc: &mut BTreeSet<u64>, g| {
            if g.min_degree() >= 2 {
                acc.insert(g.canonical_code());
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    Ok(codes.into_iter().map(|c| form_from_code(n, c)).collect())
}

/// One representative per isomorphism class of connected graphs of order
/// `n` (any edge count), ordered by edge count then canonical form.
pub fn connected_classes(n: usize, workers: usize) -> Result<Vec<Graph>, EnumError> {
    if n > 8 {
        return Err(EnumError::BeyondLimit { n, limit: 8 });
    }
    let mut out = Vec::new();
    let top = n * n.saturating_sub(1) / 2;
    for m in n.saturating_sub(1)..=top {
        let gen = ConnectedSubsets::new(n, m)?;
        let (codes, _) = gen.par_fold(
            workers,
            BTreeSet::new,
            |acc: &mut BTreeSet<u64>, g| {
                acc.insert(g.canonical_code());
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        )?;
        out.extend(codes.into_iter().map(|c| form_from_code(n, c).to_graph()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::families::{path_graph, s_n_k4, s_n_m, star_graph};

    /// Brute force: every m-subset of pairs, kept when connected.
    fn brute_count(n: usize, m: usize) -> u64 {
        let pairs = lex_pairs(n);
        (0u64..1 << pairs.len())
            .filter(|s| s.count_ones() as usize == m)
            .filter(|&s| graph_from_mask(n, s).is_connected())
            .count() as u64
    }

    #[test]
    fn small_counts() {
        let count = |n, c| {
            enumerate_connected(&EnumSpec::new(n, c), |_| {})
                .unwrap()
                .visited
        };
        assert_eq!(count(3, 1), 1);
        assert_eq!(count(4, 3), 1);
        assert_eq!(count(4, 0), 16);
        assert_eq!(brute_count(4, 3), 16);
        for n in 1..=6 {
            for m in n - 1..=n * (n - 1) / 2 {
                let gen = ConnectedSubsets::new(n, m).unwrap();
                assert_eq!(gen.for_each(|_| {}), brute_count(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn cayley_counts() {
        for n in 2..=8usize {
            let v = enumerate_connected(&EnumSpec::new(n, 0), |_| {}).unwrap().visited;
            assert_eq!(v, (n as u64).pow(n as u32 - 2));
        }
    }

    #[test]
    fn delivered_graphs_are_connected_with_m_edges() {
        let spec = EnumSpec::new(6, 2);
        enumerate_connected(&spec, |g| {
            let h = g.to_graph();
            assert!(h.is_connected());
            assert_eq!(h.size(), 7);
            assert_eq!(h.order(), 6);
            assert_eq!(graph_from_mask(6, g.mask()), h);
        })
        .unwrap();
    }

    #[test]
    fn prefixes_partition_the_walk() {
        let gen = ConnectedSubsets::new(6, 7).unwrap();
        let total = gen.for_each(|_| {});
        for depth in [0, 3, 8, 15] {
            let mut seen = BTreeSet::new();
            let mut sum = 0;
            for p in gen.prefixes(depth) {
                sum += gen.for_each_in(p, |g| {
                    assert!(seen.insert(g.mask()));
                });
            }
            assert_eq!(sum, total);
        }
    }

    #[test]
    fn spec_validation() {
        assert_eq!(EnumSpec::new(5, 4).validate(), Err(EnumError::Cyclomatic(4)));
        assert!(matches!(
            EnumSpec::new(9, 3).validate(),
            Err(EnumError::OverCap { .. })
        ));
        assert!(EnumSpec::new(9, 3).allow_large(true).validate().is_ok());
        assert!(matches!(
            EnumSpec::new(10, 1).validate(),
            Err(EnumError::BeyondLimit { .. })
        ));
        assert!(matches!(
            EnumSpec::new(3, 3).validate(),
            Err(EnumError::TooDense { .. })
        ));
    }

    #[test]
    fn scan_examples() {
        let r = extremal_scan(&EnumSpec::new(4, 3), IndexId::EM1).unwrap();
        assert_eq!((r.min.value, r.max.value), (96, 96));
        assert_eq!(r.max.classes, Some(1));

        let r = extremal_scan(&EnumSpec::new(5, 3), IndexId::EM1).unwrap();
        assert_eq!(r.max.value, 132);
        let want: BTreeSet<_> = [s_n_m(5, 7).unwrap(), s_n_k4(5).unwrap()]
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let got: BTreeSet<_> = r.max_classes().into_iter().collect();
        assert_eq!(got, want);

        let r = extremal_scan(&EnumSpec::new(6, 0), IndexId::EM1).unwrap();
        assert_eq!((r.min.value, r.max.value), (14, 80));
        assert_eq!(r.min_classes(), vec![canonical_form(&path_graph(6).unwrap()).unwrap()]);
        assert_eq!(r.max_classes(), vec![canonical_form(&star_graph(6).unwrap()).unwrap()]);
        assert_eq!(r.min.labeled_witnesses, 360);
    }

    #[test]
    fn labeled_witnesses_without_dedup() {
        let r = extremal_scan(&EnumSpec::new(4, 0).dedup(false), IndexId::EM1).unwrap();
        // four labeled stars
        assert_eq!(r.max.witnesses.len(), 4);
        assert_eq!(r.max.classes, None);
    }

    #[test]
    fn census_examples() {
        let census = |n, c| brace_census(&EnumSpec::new(n, c)).unwrap();
        assert_eq!(census(4, 3), vec![canonical_form(&s_n_k4(4).unwrap()).unwrap()]);
        let diamond = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(census(4, 2), vec![canonical_form(&diamond).unwrap()]);
        let c5 = crate::families::cycle_graph(5).unwrap();
        assert_eq!(census(5, 1), vec![canonical_form(&c5).unwrap()]);
        assert!(brace_census(&EnumSpec::new(5, 0)).is_err());
    }

    #[test]
    fn class_counts_match_known_sequence() {
        // connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112
        let counts: Vec<usize> = (1..=6).map(|n| connected_classes(n, 2).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }
}
