//! The four EM1-monotone graph rewrites.
//!
//! * **I**: `uv` is an edge, `deg(v) >= 2`, and every other neighbour of `u`
//!   is a pendant. All of those pendants move from `u` to `v`. Increases EM1.
//! * **II**: a thread `v1 v2 .. vl` (interior vertices of degree two) joins
//!   two branch vertices. The thread edges are removed, `v1` and `vl` are
//!   fused into `w`, and the `l - 2` interior vertices plus one fresh vertex
//!   hang from `w` as pendants. Increases EM1.
//! * **III**: a tree hanging from `u1` is removed and replaced by a path of
//!   the same order subdividing the edge `u1 y`. Decreases EM1.
//! * **IV**: `v`'s core (non-pendant) neighbourhood is contained in `u`'s;
//!   all pendants of `v` move to `u`. Increases EM1.
//!
//! Every rewrite keeps `n` and `m`, hence connectivity and the cyclomatic
//! number. Rewrites never mutate their input.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Relabeling, Vertex};
use crate::indices::em1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OperationKind {
    I,
    II,
    III,
    IV,
}

impl OperationKind {
    pub const ALL: [OperationKind; 4] = [
        OperationKind::I,
        OperationKind::II,
        OperationKind::III,
        OperationKind::IV,
    ];

    /// Whether a valid application raises EM1 (`false`: lowers it).
    pub fn increases_em1(self) -> bool {
        self != OperationKind::III
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OperationKind::I => "I",
            OperationKind::II => "II",
            OperationKind::III => "III",
            OperationKind::IV => "IV",
        };
        f.write_str(s)
    }
}

impl FromStr for OperationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(OperationKind::I),
            "II" | "2" => Ok(OperationKind::II),
            "III" | "3" => Ok(OperationKind::III),
            "IV" | "4" => Ok(OperationKind::IV),
            _ => Err(format!("unknown operation {s:?} (expected I, II, III or IV)")),
        }
    }
}

/// An operation together with the vertices it acts on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum RewriteSpec {
    I { u: Vertex, v: Vertex },
    II { path: Vec<Vertex> },
    III { root: Vertex, subtree: Vec<Vertex>, y: Vertex },
    IV { u: Vertex, v: Vertex },
}

impl RewriteSpec {
    pub fn kind(&self) -> OperationKind {
        match self {
            RewriteSpec::I { .. } => OperationKind::I,
            RewriteSpec::II { .. } => OperationKind::II,
            RewriteSpec::III { .. } => OperationKind::III,
            RewriteSpec::IV { .. } => OperationKind::IV,
        }
    }
}

impl fmt::Display for RewriteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteSpec::I { u, v } => write!(f, "I(u={u}, v={v})"),
            RewriteSpec::II { path } => write!(f, "II(path={path:?})"),
            RewriteSpec::III { root, subtree, y } => {
                write!(f, "III(root={root}, subtree={subtree:?}, y={y})")
            }
            RewriteSpec::IV { u, v } => write!(f, "IV(u={u}, v={v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("vertex {0} is outside 0..{1}")]
    NoSuchVertex(Vertex, usize),
    #[error("operation {op} precondition failed: {reason}")]
    Precondition { op: OperationKind, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteResult {
    pub graph: Graph,
    pub em1_before: u128,
    pub em1_after: u128,
    pub relabeling: Relabeling,
}

impl RewriteResult {
    pub fn delta(&self) -> i128 {
        self.em1_after as i128 - self.em1_before as i128
    }
}

fn fail<T>(op: OperationKind, reason: impl Into<String>) -> Result<T, RewriteError> {
    Err(RewriteError::Precondition {
        op,
        reason: reason.into(),
    })
}

fn in_range(g: &Graph, vs: &[Vertex]) -> Result<(), RewriteError> {
    match vs.iter().find(|&&v| v >= g.order()) {
        Some(&v) => Err(RewriteError::NoSuchVertex(v, g.order())),
        None => Ok(()),
    }
}

fn core_neighbors(g: &Graph, x: Vertex) -> Vec<Vertex> {
    g.neighbors(x)
        .iter()
        .copied()
        .filter(|&w| !g.is_pendant(w))
        .collect()
}

fn pendant_neighbors(g: &Graph, x: Vertex) -> Vec<Vertex> {
    g.neighbors(x)
        .iter()
        .copied()
        .filter(|&w| g.is_pendant(w))
        .collect()
}

fn finish(g: &Graph, graph: Graph, relabeling: Relabeling) -> RewriteResult {
    debug_assert_eq!(graph.order(), g.order());
    debug_assert_eq!(graph.size(), g.size());
    RewriteResult {
        em1_before: em1(g),
        em1_after: em1(&graph),
        graph,
        relabeling,
    }
}

fn rebuild(g: &Graph, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::new(g.order(), pairs).expect("rewrite preconditions keep the graph simple")
}

/// Checks a site without rewriting.
pub fn check(g: &Graph, spec: &RewriteSpec) -> Result<(), RewriteError> {
    match spec {
        RewriteSpec::I { u, v } => check_i(g, *u, *v).map(|_| ()),
        RewriteSpec::II { path } => check_ii(g, path),
        RewriteSpec::III { root, subtree, y } => check_iii(g, *root, subtree, *y),
        RewriteSpec::IV { u, v } => check_iv(g, *u, *v).map(|_| ()),
    }
}

pub fn apply(g: &Graph, spec: &RewriteSpec) -> Result<RewriteResult, RewriteError> {
    match spec {
        RewriteSpec::I { u, v } => operation_i(g, *u, *v),
        RewriteSpec::II { path } => operation_ii(g, path),
        RewriteSpec::III { root, subtree, y } => operation_iii(g, *root, subtree, *y),
        RewriteSpec::IV { u, v } => operation_iv(g, *u, *v),
    }
}

fn check_i(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>, RewriteError> {
    const OP: OperationKind = OperationKind::I;
    in_range(g, &[u, v])?;
    if !g.has_edge(u, v) {
        return fail(OP, format!("{u}{v} is not an edge"));
    }
    if g.neighbors(v).len() < 2 {
        return fail(OP, format!("deg({v}) < 2"));
    }
    let others: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| w != v).collect();
    if let Some(&w) = others.iter().find(|&&w| !g.is_pendant(w)) {
        return fail(OP, format!("neighbour {w} of {u} is not a pendant"));
    }
    if others.is_empty() {
        return fail(OP, format!("{u} has no pendant neighbours to move"));
    }
    Ok(others)
}

pub fn operation_i(g: &Graph, u: Vertex, v: Vertex) -> Result<RewriteResult, RewriteError> {
    let moved = check_i(g, u, v)?;
    let pairs = g
        .edges()
        .map(|e| {
            if e.u == u && moved.contains(&e.v) || e.v == u && moved.contains(&e.u) {
                (v, e.other(u))
            } else {
                (e.u, e.v)
            }
        })
        .collect::<Vec<_>>();
    Ok(finish(g, rebuild(g, pairs), Relabeling::identity(g.order())))
}

fn check_ii(g: &Graph, path: &[Vertex]) -> Result<(), RewriteError> {
    const OP: OperationKind = OperationKind::II;
    in_range(g, path)?;
    let l = path.len();
    if l < 3 {
        return fail(OP, "path needs at least three vertices");
    }
    let mut seen = vec![false; g.order()];
    for &x in path {
        if std::mem::replace(&mut seen[x], true) {
            return fail(OP, format!("vertex {x} repeats on the path"));
        }
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return fail(OP, format!("{}{} is not an edge", w[0], w[1]));
    }
    if let Some(&x) = path[1..l - 1].iter().find(|&&x| g.neighbors(x).len() != 2) {
        return fail(OP, format!("interior vertex {x} does not have degree 2"));
    }
    let (u, v) = (path[0], path[l - 1]);
    if g.has_edge(u, v) {
        return fail(OP, format!("endpoints {u} and {v} are adjacent"));
    }
    for x in [u, v] {
        if g.neighbors(x).len() < 3 {
            return fail(OP, format!("endpoint {x} has fewer than two neighbours off the path"));
        }
    }
    let interior = &path[1..l - 1];
    if let Some(&z) = g
        .neighbors(u)
        .iter()
        .find(|&&z| !interior.contains(&z) && g.has_edge(v, z))
    {
        return fail(OP, format!("endpoints share the neighbour {z} off the path"));
    }
    Ok(())
}

/// The fused vertex keeps `path[0]`'s label; `path[l-1]`'s label is reused
/// for the fresh pendant.
pub fn operation_ii(g: &Graph, path: &[Vertex]) -> Result<RewriteResult, RewriteError> {
    check_ii(g, path)?;
    let l = path.len();
    let (u, v) = (path[0], path[l - 1]);
    let on_path = |a: Vertex, b: Vertex| {
        path.windows(2)
            .any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
    };
    let mut pairs: Vec<(Vertex, Vertex)> = g
        .edges()
        .filter(|e| !on_path(e.u, e.v))
        .map(|e| {
            let f = |x: Vertex| if x == v { u } else { x };
            (f(e.u), f(e.v))
        })
        .collect();
    pairs.extend(path[1..l - 1].iter().map(|&x| (u, x)));
    pairs.push((u, v));
    let mut relabeling = Relabeling::identity(g.order());
    relabeling.map[v] = Some(u);
    relabeling.fresh.push(v);
    Ok(finish(g, rebuild(g, pairs), relabeling))
}

fn check_iii(g: &Graph, root: Vertex, subtree: &[Vertex], y: Vertex) -> Result<(), RewriteError> {
    const OP: OperationKind = OperationKind::III;
    in_range(g, &[root, y])?;
    in_range(g, subtree)?;
    if subtree.is_empty() {
        return fail(OP, "subtree must contain a vertex besides the root");
    }
    let n = g.order();
    let mut inside = vec![false; n];
    for &s in subtree {
        if s == root {
            return fail(OP, "the root belongs to the subtree implicitly");
        }
        if std::mem::replace(&mut inside[s], true) {
            return fail(OP, format!("vertex {s} repeats in the subtree"));
        }
    }
    if inside[y] || y == root {
        return fail(OP, format!("{y} must lie outside the subtree"));
    }
    if !g.has_edge(root, y) {
        return fail(OP, format!("{root}{y} is not an edge"));
    }
    let mut internal_edges = 0;
    for &s in subtree {
        for &w in g.neighbors(s) {
            if w != root && !inside[w] {
                return fail(OP, format!("subtree vertex {s} also attaches at {w}"));
            }
            if w == root || w > s {
                internal_edges += 1;
            }
        }
    }
    // connected with |S| edges on |S| + 1 vertices <=> tree
    let mut reached = vec![false; n];
    reached[root] = true;
    let mut stack = vec![root];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if inside[w] && !reached[w] {
                reached[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != subtree.len() + 1 {
        return fail(OP, "subtree is not connected to the root");
    }
    if internal_edges != subtree.len() {
        return fail(OP, "subtree together with the root contains a cycle");
    }
    let outside = g.neighbors(root).iter().filter(|&&w| !inside[w]).count();
    if outside < 2 {
        return fail(OP, format!("root {root} needs two neighbours outside the subtree"));
    }
    Ok(())
}

/// The removed subtree labels, ascending, are reused for the new path
/// `root - s1 - s2 - ... - y`.
pub fn operation_iii(
    g: &Graph,
    root: Vertex,
    subtree: &[Vertex],
    y: Vertex,
) -> Result<RewriteResult, RewriteError> {
    check_iii(g, root, subtree, y)?;
    let mut ids = subtree.to_vec();
    ids.sort_unstable();
    let mut pairs: Vec<(Vertex, Vertex)> = g
        .edges()
        .filter(|e| !ids.contains(&e.u) && !ids.contains(&e.v))
        .filter(|e| !(e.u.min(e.v) == root.min(y) && e.u.max(e.v) == root.max(y)))
        .map(|e| (e.u, e.v))
        .collect();
    let chain: Vec<Vertex> = std::iter::once(root)
        .chain(ids.iter().copied())
        .chain(std::iter::once(y))
        .collect();
    pairs.extend(chain.windows(2).map(|w| (w[0], w[1])));
    let mut relabeling = Relabeling::identity(g.order());
    for &s in &ids {
        relabeling.map[s] = None;
    }
    relabeling.fresh = ids;
    Ok(finish(g, rebuild(g, pairs), relabeling))
}

fn check_iv(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>, RewriteError> {
    const OP: OperationKind = OperationKind::IV;
    in_range(g, &[u, v])?;
    if u == v {
        return fail(OP, "u and v must differ");
    }
    if g.has_edge(u, v) {
        return fail(OP, format!("{u} and {v} are adjacent"));
    }
    let core_v = core_neighbors(g, v);
    if core_v.is_empty() {
        return fail(OP, format!("{v} has no core neighbour"));
    }
    let core_u = core_neighbors(g, u);
    if let Some(w) = core_v.iter().find(|w| !core_u.contains(w)) {
        return fail(OP, format!("core neighbour {w} of {v} is not a neighbour of {u}"));
    }
    let moved = pendant_neighbors(g, v);
    if moved.is_empty() {
        return fail(OP, format!("{v} has no pendant neighbours"));
    }
    // With equal core neighbourhoods and no pendants on u, moving the
    // pendants just swaps the roles of u and v.
    if g.neighbors(u).len() <= core_v.len() {
        return fail(
            OP,
            format!("{u} has no pendants and the same core neighbourhood as {v}"),
        );
    }
    Ok(moved)
}

pub fn operation_iv(g: &Graph, u: Vertex, v: Vertex) -> Result<RewriteResult, RewriteError> {
    let moved = check_iv(g, u, v)?;
    let pairs = g
        .edges()
        .map(|e| {
            if e.u == v && moved.contains(&e.v) || e.v == v && moved.contains(&e.u) {
                (u, e.other(v))
            } else {
                (e.u, e.v)
            }
        })
        .collect::<Vec<_>>();
    Ok(finish(g, rebuild(g, pairs), Relabeling::identity(g.order())))
}

/// Above this order Operation III sites use single branches only.
const III_EXHAUSTIVE_ORDER: usize = 12;

/// Every site of `kind` whose preconditions hold. Exhaustive up to 12
/// vertices; beyond that Operation III only tries one hanging branch at a
/// time. Operation II paths are reported once, from the smaller endpoint.
pub fn find_applicable(g: &Graph, kind: OperationKind) -> Vec<RewriteSpec> {
    let n = g.order();
    let mut out = Vec::new();
    match kind {
        OperationKind::I => {
            for u in 0..n {
                for &v in g.neighbors(u) {
                    if check_i(g, u, v).is_ok() {
                        out.push(RewriteSpec::I { u, v });
                    }
                }
            }
        }
        OperationKind::II => {
            for u in 0..n {
                if g.neighbors(u).len() < 3 {
                    continue;
                }
                for &first in g.neighbors(u) {
                    if let Some(path) = thread(g, u, first) {
                        if path[path.len() - 1] > u && check_ii(g, &path).is_ok() {
                            out.push(RewriteSpec::II { path });
                        }
                    }
                }
            }
        }
        OperationKind::III => {
            for root in 0..n {
                let branches = hanging_branches(g, root);
                if branches.is_empty() {
                    continue;
                }
                let k = branches.len();
                let subsets: Vec<u32> = if n <= III_EXHAUSTIVE_ORDER {
                    (1..1u32 << k).collect()
                } else {
                    (0..k).map(|i| 1 << i).collect()
                };
                for mask in subsets {
                    let mut subtree: Vec<Vertex> = (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .flat_map(|i| branches[i].iter().copied())
                        .collect();
                    subtree.sort_unstable();
                    for &y in g.neighbors(root) {
                        if subtree.binary_search(&y).is_err()
                            && check_iii(g, root, &subtree, y).is_ok()
                        {
                            out.push(RewriteSpec::III {
                                root,
                                subtree: subtree.clone(),
                                y,
                            });
                        }
                    }
                }
            }
        }
        OperationKind::IV => {
            for u in 0..n {
                for v in 0..n {
                    if u != v && !g.has_edge(u, v) && check_iv(g, u, v).is_ok() {
                        out.push(RewriteSpec::IV { u, v });
                    }
                }
            }
        }
    }
    out
}

/// Walks from `start` through `first` along degree-two vertices until a
/// vertex of another degree. `None` when the walk returns to `start` or the
/// first step is not through a degree-two vertex.
fn thread(g: &Graph, start: Vertex, first: Vertex) -> Option<Vec<Vertex>> {
    let mut path = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    if g.neighbors(cur).len() != 2 {
        return None;
    }
    while g.neighbors(cur).len() == 2 {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
        if next == start {
            return None;
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
    Some(path)
}

/// Components of `G - root` that form a tree joined to `root` by one edge.
fn hanging_branches(g: &Graph, root: Vertex) -> Vec<Vec<Vertex>> {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for (idx, &start) in g.neighbors(root).iter().enumerate() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = idx;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                if w != root && comp[w] == usize::MAX {
                    comp[w] = idx;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        let degree_sum: usize = members.iter().map(|&x| g.neighbors(x).len()).sum();
        let to_root = members.iter().filter(|&&x| g.has_edge(x, root)).count();
        let internal = (degree_sum - to_root) / 2;
        if to_root == 1 && internal + 1 == members.len() {
            members.sort_unstable();
            out.push(members);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_graph, s_n_k4};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn precondition(r: Result<RewriteResult, RewriteError>) -> bool {
        matches!(r, Err(RewriteError::Precondition { .. }))
    }

    #[test]
    fn op_i_examples() {
        // x=0, v=1, u=2, w1=3, w2=4
        let h = g(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        let r = operation_i(&h, 2, 1).unwrap();
        assert_eq!((r.em1_before, r.em1_after), (18, 36));
        assert!(pendant_neighbors(&r.graph, 2).is_empty());

        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = operation_i(&p4, 2, 1).unwrap();
        assert_eq!((r.em1_before, r.em1_after), (6, 12));
        assert_eq!(r.graph.degrees(), vec![1, 3, 1, 1]);

        // u on a triangle
        let tri = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(precondition(operation_i(&tri, 0, 1)));
        assert!(precondition(operation_i(&p4, 0, 2)));
        assert!(precondition(operation_i(&p4, 1, 0)));
    }

    fn two_triangles() -> Graph {
        // triangles {0,1,2} and {4,5,6} joined by 0-3-4
        g(7, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    }

    #[test]
    fn op_ii_examples() {
        let h = two_triangles();
        assert_eq!(em1(&h), 62);
        let r = operation_ii(&h, &[0, 3, 4]).unwrap();
        assert_eq!((r.em1_before, r.em1_after), (62, 202));
        assert_eq!((r.graph.order(), r.graph.size()), (7, 8));
        assert_eq!(r.graph.degree(0), Ok(6));
        assert_eq!(r.relabeling.fresh, vec![4]);

        // a pendant on the interior vertex
        let mut e: Vec<(usize, usize)> = h.edges().map(|e| (e.u, e.v)).collect();
        e.push((3, 7));
        let h2 = Graph::new(8, e).unwrap();
        assert!(precondition(operation_ii(&h2, &[0, 3, 4])));
        assert!(precondition(operation_ii(&h, &[0, 3])));
        assert!(precondition(operation_ii(&h, &[1, 0, 3])));
    }

    #[test]
    fn op_ii_rejects_shared_outside_neighbour() {
        // 0 and 2 both see 3 besides the thread 0-1-2, and have degree 3
        let h = g(6, &[(0, 1), (1, 2), (0, 3), (2, 3), (0, 4), (2, 5), (3, 4)]);
        assert!(precondition(operation_ii(&h, &[0, 1, 2])));
    }

    #[test]
    fn op_iii_examples() {
        // triangle u1=0, x=1, y=2 with pendant 3 on u1
        let h = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let r = operation_iii(&h, 0, &[3], 2).unwrap();
        assert_eq!((r.em1_before, r.em1_after), (26, 16));
        assert_eq!(r.graph, g(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]));

        // two leaves on u1
        let h = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]);
        let r = operation_iii(&h, 0, &[3, 4], 2).unwrap();
        assert!(r.graph.degrees().iter().all(|&d| d == 2));
        assert!(r.graph.is_connected());
        assert_eq!(r.em1_after, 20);
        assert!(r.em1_after < r.em1_before);

        // subtree vertex 3 also touching 1
        let h = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]);
        assert!(precondition(operation_iii(&h, 0, &[3], 2)));
    }

    #[test]
    fn op_iii_needs_two_outside_neighbours() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(precondition(operation_iii(&p3, 1, &[0], 2)));
    }

    #[test]
    fn op_iv_examples() {
        // u=0, c=1, v=2, pendants 3 (on u) and 4 (on v)
        let h = g(5, &[(0, 1), (1, 2), (0, 3), (2, 4)]);
        let r = operation_iv(&h, 0, 2).unwrap();
        assert_eq!((r.em1_before, r.em1_after), (10, 18));

        // k = 0 but u has an extra core neighbour 3
        let h = g(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 1)]);
        let r = operation_iv(&h, 0, 2).unwrap();
        assert!(r.em1_after > r.em1_before);

        // adjacent
        let h = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(precondition(operation_iv(&h, 0, 2)));
    }

    #[test]
    fn op_iv_rejects_symmetric_swap() {
        // path u-c-v-p: moving p to u yields an isomorphic path
        let h = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(precondition(operation_iv(&h, 0, 2)));
    }

    #[test]
    fn site_discovery() {
        // S4 centred at 0 with a two-edge path 3-4-5 attached to leaf 3
        let h = g(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]);
        assert!(!find_applicable(&h, OperationKind::I).is_empty());
        assert!(find_applicable(&cycle_graph(6).unwrap(), OperationKind::I).is_empty());
        assert!(find_applicable(&s_n_k4(4).unwrap(), OperationKind::III).is_empty());
        let sites = find_applicable(&two_triangles(), OperationKind::II);
        assert_eq!(sites, vec![RewriteSpec::II { path: vec![0, 3, 4] }]);
    }

    #[test]
    fn every_found_site_applies() {
        let h = g(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2), (0, 6), (6, 7)]);
        for kind in OperationKind::ALL {
            for site in find_applicable(&h, kind) {
                let r = apply(&h, &site).unwrap();
                assert_eq!(r.graph.size(), h.size());
                assert!(r.graph.is_connected());
                assert_eq!(kind.increases_em1(), r.em1_after > r.em1_before, "{site}");
            }
        }
    }

    #[test]
    fn spec_serialization() {
        let s = RewriteSpec::III {
            root: 0,
            subtree: vec![3],
            y: 2,
        };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"op":"III","root":0,"subtree":[3],"y":2}"#);
        assert_eq!(serde_json::from_str::<RewriteSpec>(&json).unwrap(), s);
    }
}
