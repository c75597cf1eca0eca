//! Canonical labeling for small graphs.
//!
//! Vertices are first partitioned by iterated degree refinement (colour =
//! own colour plus the multiset of neighbour colours, until stable). The
//! canonical labeling is then the colour-respecting permutation whose
//! upper-triangle adjacency string, read in graph6 column order, is
//! lexicographically smallest. The search is a branch and bound over
//! positions: after placing position `j`, the next `j` bits of the string are
//! fixed, so any prefix already larger than the incumbent is cut.
//!
//! The resulting [`CanonicalForm`] is the graph6 line of the canonically
//! relabeled graph, so it decodes back to a representative.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6;

pub const DEFAULT_CANON_LIMIT: usize = 10;
/// Codes are packed into a `u64`, which holds `C(11, 2) = 55` bits.
pub const MAX_CANON_ORDER: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical form requested for n = {n}, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm, CanonError> {
    let n = g.order();
    let limit = limit.min(MAX_CANON_ORDER);
    if n > limit {
        return Err(CanonError::TooLarge { n, limit });
    }
    let adj = bitsets(g);
    Ok(form_from_code(n, canonical_code(&adj)))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

pub(crate) fn bitsets(g: &Graph) -> Vec<u16> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u16, |acc, &w| acc | 1 << w))
        .collect()
}

/// graph6 line for a graph given by its packed adjacency string.
pub(crate) fn form_from_code(n: usize, code: u64) -> CanonicalForm {
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![n as u8 + 63];
    graph6::pack_bits((0..nbits).rev().map(|k| (code >> k) & 1 == 1), &mut out);
    CanonicalForm(String::from_utf8(out).expect("ASCII"))
}

fn refine(adj: &[u16]) -> Vec<u32> {
    let n = adj.len();
    let mut colour: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut classes = {
        let mut c = colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        if uniq.len() == classes {
            return colour;
        }
        classes = uniq.len();
        colour = sigs
            .iter()
            .map(|s| uniq.binary_search(s).unwrap() as u32)
            .collect();
    }
}

struct Search<'a> {
    adj: &'a [u16],
    colour: Vec<u32>,
    slot: Vec<u32>,
    perm: Vec<usize>,
    used: u16,
    total_bits: u32,
    best: u64,
}

impl Search<'_> {
    fn go(&mut self, j: usize, prefix: u64, bits: u32) {
        let n = self.adj.len();
        if j == n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        let nbits = bits + j as u32;
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colour[v] != self.slot[j] {
                continue;
            }
            let mut column = 0u64;
            for i in 0..j {
                column = (column << 1) | (self.adj[self.perm[i]] >> v & 1) as u64;
            }
            let next = (prefix << j) | column;
            let shift = self.total_bits - nbits;
            let incumbent = if shift >= 64 { 0 } else { self.best >> shift };
            if next > incumbent {
                continue;
            }
            self.perm[j] = v;
            self.used |= 1 << v;
            self.go(j + 1, next, nbits);
            self.used &= !(1 << v);
        }
    }
}

/// Minimal colour-respecting adjacency string of the graph with adjacency
/// bitsets `adj`.
pub(crate) fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    debug_assert!(n <= MAX_CANON_ORDER);
    if n <= 1 {
        return 0;
    }
    let colour = refine(adj);
    let mut slot = colour.clone();
    slot.sort_unstable();
    let total_bits = (n * (n - 1) / 2) as u32;
    let mut s = Search {
        adj,
        colour,
        slot,
        perm: vec![0; n],
        used: 0,
        total_bits,
        best: u64::MAX,
    };
    s.go(0, 0, 0);
    s.best
}
