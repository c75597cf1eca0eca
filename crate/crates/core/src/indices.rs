//! First and second Zagreb indices and their edge-degree reformulations.
//!
//! All values are exact `u128`s.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexId {
    M1,
    M2,
    EM1,
    EM2,
}

impl IndexId {
    pub const ALL: [IndexId; 4] = [IndexId::M1, IndexId::M2, IndexId::EM1, IndexId::EM2];

    pub fn name(self) -> &'static str {
        match self {
            IndexId::M1 => "m1",
            IndexId::M2 => "m2",
            IndexId::EM1 => "em1",
            IndexId::EM2 => "em2",
        }
    }

    pub fn evaluate(self, g: &Graph) -> IndexValue {
        let value = match self {
            IndexId::M1 => m1(g),
            IndexId::M2 => m2(g),
            IndexId::EM1 => em1(g),
            IndexId::EM2 => em2(g),
        };
        IndexValue { index: self, value }
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "m1" => Ok(IndexId::M1),
            "m2" => Ok(IndexId::M2),
            "em1" => Ok(IndexId::EM1),
            "em2" => Ok(IndexId::EM2),
            _ => Err(format!("unknown index {s:?} (expected m1, m2, em1 or em2)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexValue {
    pub index: IndexId,
    pub value: u128,
}

/// Evaluates an index from a degree table and an edge list. This is the
/// common kernel behind the [`Graph`] functions and the enumeration hot path.
pub(crate) fn evaluate_parts(id: IndexId, deg: &[usize], edges: &[(usize, usize)]) -> u128 {
    let d = |v: usize| deg[v] as u128;
    match id {
        IndexId::M1 => deg.iter().map(|&x| (x as u128) * (x as u128)).sum(),
        IndexId::M2 => edges.iter().map(|&(u, v)| d(u) * d(v)).sum(),
        IndexId::EM1 => edges
            .iter()
            .map(|&(u, v)| {
                let e = d(u) + d(v) - 2;
                e * e
            })
            .sum(),
        IndexId::EM2 => {
            // Adjacent edge pairs meet at exactly one vertex. At each vertex the
            // unordered pairs contribute ((sum)^2 - sum of squares) / 2.
            let mut sum = vec![0u128; deg.len()];
            let mut sq = vec![0u128; deg.len()];
            for &(u, v) in edges {
                let e = d(u) + d(v) - 2;
                for x in [u, v] {
                    sum[x] += e;
                    sq[x] += e * e;
                }
            }
            sum.iter().zip(&sq).map(|(&s, &q)| (s * s - q) / 2).sum()
        }
    }
}

fn parts(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    (g.degrees(), g.edges().map(|e| (e.u, e.v)).collect())
}

/// Sum of squared vertex degrees.
pub fn m1(g: &Graph) -> u128 {
    g.degrees().iter().map(|&x| (x as u128) * (x as u128)).sum()
}

/// Sum over edges of the product of endpoint degrees.
pub fn m2(g: &Graph) -> u128 {
    let (deg, edges) = parts(g);
    evaluate_parts(IndexId::M2, &deg, &edges)
}

/// Sum over edges of the squared edge degree.
pub fn em1(g: &Graph) -> u128 {
    let (deg, edges) = parts(g);
    evaluate_parts(IndexId::EM1, &deg, &edges)
}

/// Sum over unordered pairs of adjacent edges of the product of their edge
/// degrees.
pub fn em2(g: &Graph) -> u128 {
    let (deg, edges) = parts(g);
    evaluate_parts(IndexId::EM2, &deg, &edges)
}
