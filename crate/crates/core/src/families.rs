//! Named graph families and closed-form reference values of EM1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::indices::{IndexId, IndexValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}, got n = {n}")]
    OrderOutOfRange {
        family: String,
        n: usize,
        requirement: String,
    },
    #[error("S_n^m needs n - 1 <= m <= 2n - 3 and n >= 4, got n = {n}, m = {m}")]
    SizeOutOfRange { n: usize, m: usize },
    #[error("unknown family or reference symbol {0:?}")]
    Unknown(String),
}

fn need(family: &str, n: usize, min: usize) -> Result<(), FamilyError> {
    if n < min {
        Err(FamilyError::OrderOutOfRange {
            family: family.into(),
            n,
            requirement: format!("n >= {min}"),
        })
    } else {
        Ok(())
    }
}

pub fn path_graph(n: usize) -> Result<Graph, FamilyError> {
    need("path", n, 1)?;
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path"))
}

/// Centre 0, leaves `1..n`.
pub fn star_graph(n: usize) -> Result<Graph, FamilyError> {
    need("star", n, 2)?;
    Ok(Graph::new(n, (1..n).map(|i| (0, i))).expect("valid star"))
}

pub fn cycle_graph(n: usize) -> Result<Graph, FamilyError> {
    need("cycle", n, 3)?;
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle"))
}

/// The star on `n` vertices (centre 0) with leaf 1 joined to the leaves
/// `2..=m-n+2`, for `m` edges in total.
pub fn s_n_m(n: usize, m: usize) -> Result<Graph, FamilyError> {
    // leaf 1 can reach at most the n - 2 other leaves
    if n < 4 || m + 1 < n || m + 1 - n > n - 2 {
        return Err(FamilyError::SizeOutOfRange { n, m });
    }
    let extra = m + 1 - n;
    let edges = (1..n).map(|i| (0, i)).chain((2..2 + extra).map(|i| (1, i)));
    Ok(Graph::new(n, edges).expect("valid S_n^m"))
}

/// `K4` on `0..4` with `n - 4` pendants hung on vertex 0.
pub fn s_n_k4(n: usize) -> Result<Graph, FamilyError> {
    need("S_n^K4", n, 4)?;
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let edges = k4.into_iter().chain((4..n).map(|p| (0, p)));
    Ok(Graph::new(n, edges).expect("valid S_n^K4"))
}

/// Constructible family; `SnM` carries its edge count as an offset from `n`
/// so that one id describes the whole family (`SnM(2)` is `S_n^{n+2}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    Path,
    Star,
    Cycle,
    SnM(isize),
    SnK4,
}

impl FamilyId {
    pub fn build(self, n: usize) -> Result<Graph, FamilyError> {
        match self {
            FamilyId::Path => path_graph(n),
            FamilyId::Star => star_graph(n),
            FamilyId::Cycle => cycle_graph(n),
            FamilyId::SnM(offset) => {
                let m = n as isize + offset;
                if m < 0 {
                    return Err(FamilyError::SizeOutOfRange { n, m: 0 });
                }
                s_n_m(n, m as usize)
            }
            FamilyId::SnK4 => s_n_k4(n),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Path => write!(f, "P_n"),
            FamilyId::Star => write!(f, "S_n"),
            FamilyId::Cycle => write!(f, "C_n"),
            FamilyId::SnM(0) => write!(f, "S_n^n"),
            FamilyId::SnM(k) => write!(f, "S_n^{{n{k:+}}}"),
            FamilyId::SnK4 => write!(f, "S_n^K4"),
        }
    }
}

/// Where a closed form comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the published extremal results.
    Published,
    /// Worked out here from the EM1 definition and checked by direct
    /// evaluation.
    Derived,
}

/// Symbols with a registered EM1 closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reference {
    Path,
    Star,
    Cycle,
    /// `S_n^n`
    SnN,
    /// `S_n^{n+1}`, the bicyclic maximum.
    SnN1,
    /// `S_n^{n+2}`, a tricyclic maximum.
    SnN2,
    /// `S_n^{K4}`, the other tricyclic maximum.
    SnK4,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    /// Lower bound over bicyclic graphs.
    BicyclicMin,
    /// Lower bound over tricyclic graphs.
    TricyclicMin,
}

/// `c3 n^3 + c2 n^2 + c1 n + c0`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cubic(pub [i128; 4]);

impl Cubic {
    pub fn eval(&self, n: usize) -> i128 {
        let n = n as i128;
        self.0.iter().fold(0, |acc, &c| acc * n + c)
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let power = 3 - k;
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (power, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match power {
                0 => {}
                1 => write!(f, "n")?,
                p => write!(f, "n^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceValue {
    pub symbol: Reference,
    pub form: Cubic,
    pub provenance: Provenance,
    pub min_n: usize,
}

impl Reference {
    pub const ALL: [Reference; 13] = [
        Reference::Path,
        Reference::Star,
        Reference::Cycle,
        Reference::SnN,
        Reference::SnN1,
        Reference::SnN2,
        Reference::SnK4,
        Reference::Gamma1,
        Reference::Gamma2,
        Reference::Gamma3,
        Reference::Gamma4,
        Reference::BicyclicMin,
        Reference::TricyclicMin,
    ];

    pub fn value(self) -> ReferenceValue {
        use Provenance::*;
        let (form, provenance, min_n) = match self {
            Reference::Path => ([0, 0, 4, -10], Derived, 3),
            Reference::Star => ([1, -5, 8, -4], Derived, 2),
            Reference::Cycle => ([0, 0, 4, 0], Derived, 3),
            Reference::SnN => ([1, -5, 12, -6], Derived, 4),
            Reference::SnN1 => ([1, -5, 16, 4], Published, 4),
            Reference::SnN2 => ([1, -5, 20, 32], Published, 5),
            Reference::SnK4 => ([1, -5, 20, 32], Published, 4),
            Reference::Gamma1 => ([1, -5, 16, 18], Published, 4),
            Reference::Gamma2 => ([1, -5, 20, -10], Published, 4),
            Reference::Gamma3 => ([1, -5, 20, 2], Published, 4),
            Reference::Gamma4 => ([1, -9, 32, 60], Published, 4),
            Reference::BicyclicMin => ([0, 0, 4, 34], Published, 4),
            Reference::TricyclicMin => ([0, 0, 4, 68], Published, 4),
        };
        ReferenceValue {
            symbol: self,
            form: Cubic(form),
            provenance,
            min_n,
        }
    }

    /// The family realizing this closed form, when one is constructible.
    pub fn family(self) -> Option<FamilyId> {
        match self {
            Reference::Path => Some(FamilyId::Path),
            Reference::Star => Some(FamilyId::Star),
            Reference::Cycle => Some(FamilyId::Cycle),
            Reference::SnN => Some(FamilyId::SnM(0)),
            Reference::SnN1 => Some(FamilyId::SnM(1)),
            Reference::SnN2 => Some(FamilyId::SnM(2)),
            Reference::SnK4 => Some(FamilyId::SnK4),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Reference::Path => "path",
            Reference::Star => "star",
            Reference::Cycle => "cycle",
            Reference::SnN => "s-n-n",
            Reference::SnN1 => "s-n-n1",
            Reference::SnN2 => "s-n-n2",
            Reference::SnK4 => "s-n-k4",
            Reference::Gamma1 => "gamma1",
            Reference::Gamma2 => "gamma2",
            Reference::Gamma3 => "gamma3",
            Reference::Gamma4 => "gamma4",
            Reference::BicyclicMin => "bicyclic-min",
            Reference::TricyclicMin => "tricyclic-min",
        }
    }
}

impl FromStr for Reference {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Reference::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

/// Exact EM1 predicted by the registered closed form.
pub fn expected_em1(symbol: Reference, n: usize) -> Result<IndexValue, FamilyError> {
    let r = symbol.value();
    if n < r.min_n {
        return Err(FamilyError::OrderOutOfRange {
            family: symbol.name().into(),
            n,
            requirement: format!("n >= {}", r.min_n),
        });
    }
    let v = r.form.eval(n);
    debug_assert!(v >= 0);
    Ok(IndexValue {
        index: IndexId::EM1,
        value: v as u128,
    })
}
