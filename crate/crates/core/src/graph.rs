//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built. Every structural operation that
//! changes the vertex set (deletion, fusion, brace extraction) returns a new
//! graph together with a [`Relabeling`] describing where old vertices went.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("vertex {0} is outside 0..{1}")]
    NoSuchVertex(Vertex, usize),
    #[error("edge ({0}, {0}) is a loop")]
    Loop(Vertex),
    #[error("edge ({0}, {1}) is listed more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic, its brace would be empty")]
    Acyclic,
    #[error("cannot fuse vertex {0} with itself")]
    FuseSelf(Vertex),
    #[error("cannot fuse adjacent vertices {0} and {1}")]
    FuseAdjacent(Vertex, Vertex),
    #[error("line graph of an edgeless graph is empty")]
    Edgeless,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An edge `uv` stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Normalizes the endpoint order. Loops are rejected.
    pub fn new(a: Vertex, b: Vertex) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(a)),
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Where each old vertex ended up after a vertex-set-changing operation.
///
/// `fresh` lists vertices of the new graph that have no preimage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relabeling {
    pub map: Vec<Option<Vertex>>,
    pub fresh: Vec<Vertex>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling {
            map: (0..n).map(Some).collect(),
            fresh: Vec::new(),
        }
    }

    pub fn get(&self, old: Vertex) -> Option<Vertex> {
        self.map.get(old).copied().flatten()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph on `0..n` with exactly the given edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if adj[a].contains(&b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, std::iter::empty())
    }

    /// Skips validation; callers guarantee a simple graph with sorted lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, l)| {
            l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v)
        }));
        Graph { adj }
    }

    /// Builds from (possibly repeated) undirected pairs, collapsing duplicates.
    pub(crate) fn from_pairs_collapsing<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in pairs {
            debug_assert!(a != b);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex(v, self.order()))
        }
    }

    /// Sorted neighbor list. Panics on an out-of-range vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    /// `deg(u) + deg(v) - 2` for an edge `uv`.
    pub fn edge_degree(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        Ok(self.adj[e.u].len() + self.adj[e.v].len() - 2)
    }

    /// Component labels in BFS discovery order, plus the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    /// `m - n + 1`, defined for connected graphs only.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.size() + 1 - self.order())
    }

    /// Vertices of degree exactly one, ascending.
    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (0..self.order()).filter(|&v| self.adj[v].len() == 1).collect()
    }

    pub fn is_pendant(&self, v: Vertex) -> bool {
        self.adj[v].len() == 1
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Removes `doomed` and compacts the survivors in increasing order.
    ///
    /// Deleting every vertex is an error since graphs are nonempty.
    pub fn delete_vertices(&self, doomed: &[Vertex]) -> Result<(Graph, Relabeling), GraphError> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in doomed {
            self.check(v)?;
            gone[v] = true;
        }
        let mut map = vec![None; n];
        let mut next = 0;
        for v in 0..n {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        if next == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![Vec::new(); next];
        for v in 0..n {
            if let Some(nv) = map[v] {
                adj[nv] = self.adj[v].iter().filter_map(|&w| map[w]).collect();
            }
        }
        Ok((
            Graph::from_sorted_adjacency(adj),
            Relabeling {
                map,
                fresh: Vec::new(),
            },
        ))
    }

    /// The pendant-free core: degree-one vertices are stripped repeatedly
    /// until none remain.
    pub fn brace(&self) -> Result<(Graph, Relabeling), GraphError> {
        if self.cyclomatic_number()? == 0 {
            return Err(GraphError::Acyclic);
        }
        let n = self.order();
        let mut deg = self.degrees();
        let mut removed = vec![false; n];
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let doomed: Vec<Vertex> = (0..n).filter(|&v| removed[v]).collect();
        self.delete_vertices(&doomed)
    }

    /// Identifies non-adjacent `a` and `b` into one vertex adjacent to
    /// `N(a) ∪ N(b)`. The merged vertex sits at `min(a, b)`; `max(a, b)` is
    /// removed and higher labels shift down by one.
    pub fn fuse(&self, a: Vertex, b: Vertex) -> Result<(Graph, Relabeling), GraphError> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(GraphError::FuseSelf(a));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::FuseAdjacent(a, b));
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        let n = self.order();
        let map: Vec<Option<Vertex>> = (0..n)
            .map(|v| {
                Some(match v.cmp(&drop) {
                    std::cmp::Ordering::Less => v,
                    std::cmp::Ordering::Equal => keep,
                    std::cmp::Ordering::Greater => v - 1,
                })
            })
            .collect();
        let pairs = self
            .edges()
            .map(|e| (map[e.u].unwrap(), map[e.v].unwrap()));
        let graph = Graph::from_pairs_collapsing(n - 1, pairs);
        Ok((
            graph,
            Relabeling {
                map,
                fresh: Vec::new(),
            },
        ))
    }

    /// Line graph; vertex `i` of the result stands for the `i`-th edge of
    /// [`Graph::edges`], which is returned alongside.
    pub fn line_graph(&self) -> Result<(Graph, Vec<Edge>), GraphError> {
        let edges: Vec<Edge> = self.edges().collect();
        if edges.is_empty() {
            return Err(GraphError::Edgeless);
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.order()];
        for (i, e) in edges.iter().enumerate() {
            incident[e.u].push(i);
            incident[e.v].push(i);
        }
        let mut adj = vec![Vec::new(); edges.len()];
        for list in &incident {
            for (k, &i) in list.iter().enumerate() {
                for &j in &list[k + 1..] {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        // Two distinct edges share at most one endpoint, so no duplicates.
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok((Graph::from_sorted_adjacency(adj), edges))
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let pairs = self.edges().map(|e| (perm[e.u], perm[e.v]));
        Graph::from_pairs_collapsing(self.order(), pairs)
    }

    /// Writes the `n m` header followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.size());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the `n m` / `u v` text format. Blank lines and `#` comments
    /// are ignored.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let mut it = l.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
                _ => Err(GraphError::Parse {
                    line,
                    message: format!("expected two non-negative integers, got {l:?}"),
                }),
            }
        };
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut pairs = Vec::with_capacity(m);
        let mut last = hline;
        for (line, l) in lines {
            pairs.push(parse_pair(line, l)?);
            last = line;
        }
        if pairs.len() != m {
            return Err(GraphError::Parse {
                line: last,
                message: format!("header announces {m} edges, found {}", pairs.len()),
            });
        }
        Graph::new(n, pairs).map_err(|e| match e {
            GraphError::Parse { .. } => e,
            other => GraphError::Parse {
                line: hline,
                message: other.to_string(),
            },
        })
    }
}
