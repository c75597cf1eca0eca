//! Falsifiable checks of the extremal EM1 results.
//!
//! Theorem claims are checked by exhaustive scans at each order in a range;
//! lemma claims by applying every applicable rewrite site across a corpus of
//! small graphs. Observed values are always recorded, and every failing
//! verdict carries concrete counterexample graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{connected_classes, extremal_scan, EnumError, EnumSpec};
use crate::families::{expected_em1, FamilyError, Provenance, Reference};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{em1, m1, IndexId};
use crate::operations::{apply, find_applicable, OperationKind, RewriteSpec};

pub const VERDICT_SCHEMA: u32 = 1;
/// Counterexamples stored per report; the count is always exact.
const MAX_STORED_COUNTEREXAMPLES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{claim} is checked for n >= {min}, got n = {n}")]
    OrderTooSmall { claim: Claim, n: usize, min: usize },
    #[error("empty order range {0}..{1}")]
    EmptyRange(usize, usize),
    #[error("{0} is a lemma; use verify_lemma")]
    NotATheorem(Claim),
    #[error("{0} is a theorem; use verify_theorem")]
    NotALemma(Claim),
    #[error("trials must be at least 1")]
    NoTrials,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "theorem-1")]
    Theorem1,
    #[serde(rename = "theorem-2")]
    Theorem2,
    #[serde(rename = "theorem-3")]
    Theorem3,
    #[serde(rename = "theorem-4")]
    Theorem4,
    #[serde(rename = "theorem-5")]
    Theorem5,
    #[serde(rename = "lemma-1")]
    Lemma1,
    #[serde(rename = "lemma-2")]
    Lemma2,
    #[serde(rename = "lemma-3")]
    Lemma3,
    #[serde(rename = "lemma-4")]
    Lemma4,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Theorem1,
        Claim::Theorem2,
        Claim::Theorem3,
        Claim::Theorem4,
        Claim::Theorem5,
        Claim::Lemma1,
        Claim::Lemma2,
        Claim::Lemma3,
        Claim::Lemma4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem-1",
            Claim::Theorem2 => "theorem-2",
            Claim::Theorem3 => "theorem-3",
            Claim::Theorem4 => "theorem-4",
            Claim::Theorem5 => "theorem-5",
            Claim::Lemma1 => "lemma-1",
            Claim::Lemma2 => "lemma-2",
            Claim::Lemma3 => "lemma-3",
            Claim::Lemma4 => "lemma-4",
        }
    }

    pub fn is_theorem(self) -> bool {
        self.cyclomatic().is_some()
    }

    /// Cyclomatic number of the class a theorem ranges over.
    pub fn cyclomatic(self) -> Option<usize> {
        match self {
            Claim::Theorem1 => Some(0),
            Claim::Theorem2 => Some(1),
            Claim::Theorem3 => Some(2),
            Claim::Theorem4 | Claim::Theorem5 => Some(3),
            _ => None,
        }
    }

    pub fn operation(self) -> Option<OperationKind> {
        match self {
            Claim::Lemma1 => Some(OperationKind::I),
            Claim::Lemma2 => Some(OperationKind::II),
            Claim::Lemma3 => Some(OperationKind::III),
            Claim::Lemma4 => Some(OperationKind::IV),
            _ => None,
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::Theorem1 => "trees: EM1(P_n) <= EM1(G) <= EM1(S_n); equality only at P_n and S_n",
            Claim::Theorem2 => "unicyclic: EM1(C_n) <= EM1(G) <= EM1(S_n^n); equality only at C_n and S_n^n",
            Claim::Theorem3 => "bicyclic: 4n + 34 <= EM1(G) <= n^3 - 5n^2 + 16n + 4; upper equality only at S_n^{n+1}",
            Claim::Theorem4 => "tricyclic: EM1(G) >= 4n + 68",
            Claim::Theorem5 => "tricyclic: EM1(G) <= n^3 - 5n^2 + 20n + 32; equality only at S_n^{n+2} and S_n^K4",
            Claim::Lemma1 => "operation I strictly increases EM1",
            Claim::Lemma2 => "operation II strictly increases EM1",
            Claim::Lemma3 => "operation III strictly decreases EM1",
            Claim::Lemma4 => "operation IV strictly increases EM1",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim {s:?} (expected theorem-1..5 or lemma-1..4)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// No violation, but too few rewrite sites were exercised.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Observed minimum must not fall below the bound; attainment recorded.
    LowerBound,
    /// Observed minimum must equal the value, attained by the listed classes.
    Minimum,
    /// Observed maximum must equal the value, attained by the listed classes.
    Maximum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub kind: CheckKind,
    pub reference: String,
    pub formula: String,
    pub provenance: Provenance,
    pub expected: u128,
    pub observed: u128,
    pub attained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses_match: Option<bool>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderVerdict {
    pub n: usize,
    pub cyclomatic: usize,
    pub visited: u64,
    pub observed_min: u128,
    pub observed_max: u128,
    pub min_witnesses: Vec<String>,
    pub max_witnesses: Vec<String>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// The offending graph (before the rewrite, for lemma violations).
    pub graph6: String,
    pub em1: u128,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub site: Option<RewriteSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rewritten: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub em1_after: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub before: String,
    pub site: RewriteSpec,
    pub after: String,
    pub em1_before: u128,
    pub em1_after: u128,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOutcome {
    pub operation: OperationKind,
    pub direction: String,
    pub exhaustive_max_n: usize,
    pub exhaustive_graphs: usize,
    pub random_graphs: usize,
    pub seed: u64,
    pub graphs_with_sites: usize,
    pub sites: u64,
    pub violations: u64,
    pub min_sites: u64,
    pub fixture: FixtureCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub schema: u32,
    pub claim: Claim,
    pub statement: String,
    /// Inclusive order range for theorems; corpus orders for lemmas.
    pub n_from: usize,
    pub n_to: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub orders: Vec<OrderVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lemma: Option<LemmaOutcome>,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl VerdictReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremOptions {
    pub workers: usize,
    pub allow_large: bool,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions {
            workers: 1,
            allow_large: false,
        }
    }
}

fn canon(g: &Graph) -> CanonicalForm {
    canonical_form(g).expect("checked orders are canonicalizable")
}

fn witness_set(lines: &[String]) -> BTreeSet<CanonicalForm> {
    lines
        .iter()
        .map(|l| canon(&graph6::decode(l).expect("witnesses are graph6")))
        .collect()
}

struct Expectation {
    kind: CheckKind,
    reference: Reference,
    witnesses: Vec<Graph>,
}

fn expectations(claim: Claim, n: usize) -> Result<Vec<Expectation>, VerifyError> {
    use crate::families::*;
    let e = |kind, reference, witnesses| Expectation {
        kind,
        reference,
        witnesses,
    };
    Ok(match claim {
        Claim::Theorem1 => vec![
            e(CheckKind::Minimum, Reference::Path, vec![path_graph(n)?]),
            e(CheckKind::Maximum, Reference::Star, vec![star_graph(n)?]),
        ],
        Claim::Theorem2 => vec![
            e(CheckKind::Minimum, Reference::Cycle, vec![cycle_graph(n)?]),
            e(CheckKind::Maximum, Reference::SnN, vec![s_n_m(n, n)?]),
        ],
        Claim::Theorem3 => vec![
            e(CheckKind::LowerBound, Reference::BicyclicMin, vec![]),
            e(CheckKind::Maximum, Reference::SnN1, vec![s_n_m(n, n + 1)?]),
        ],
        Claim::Theorem4 => vec![e(CheckKind::LowerBound, Reference::TricyclicMin, vec![])],
        Claim::Theorem5 => {
            // S_n^{n+2} needs three leaves besides the joined one, so at
            // n = 4 the extremal set is K4 alone.
            let mut w = vec![s_n_k4(n)?];
            if n >= 5 {
                w.insert(0, s_n_m(n, n + 2)?);
            }
            vec![e(CheckKind::Maximum, Reference::SnK4, w)]
        }
        _ => return Err(VerifyError::NotATheorem(claim)),
    })
}

/// Scans every order in `n_from..=n_to` at the claim's cyclomatic number and
/// compares observed extrema and witnesses with the claimed values.
pub fn verify_theorem(
    claim: Claim,
    n_from: usize,
    n_to: usize,
    options: TheoremOptions,
) -> Result<VerdictReport, VerifyError> {
    let c = claim.cyclomatic().ok_or(VerifyError::NotATheorem(claim))?;
    if n_from > n_to {
        return Err(VerifyError::EmptyRange(n_from, n_to));
    }
    if n_from < 4 {
        return Err(VerifyError::OrderTooSmall {
            claim,
            n: n_from,
            min: 4,
        });
    }
    for n in n_from..=n_to {
        EnumSpec::new(n, c).allow_large(options.allow_large).validate()?;
    }
    let mut orders = Vec::new();
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();
    for n in n_from..=n_to {
        let spec = EnumSpec::new(n, c)
            .workers(options.workers)
            .allow_large(options.allow_large);
        let report = extremal_scan(&spec, IndexId::EM1)?;
        let mut checks = Vec::new();
        for exp in expectations(claim, n)? {
            let reference = exp.reference.value();
            let expected = expected_em1(exp.reference, n)?.value;
            let (observed, observed_lines) = match exp.kind {
                CheckKind::LowerBound | CheckKind::Minimum => (report.min.value, &report.min.witnesses),
                CheckKind::Maximum => (report.max.value, &report.max.witnesses),
            };
            let mut check = Check {
                kind: exp.kind,
                reference: exp.reference.name().to_string(),
                formula: reference.form.to_string(),
                provenance: reference.provenance,
                expected,
                observed,
                attained: observed == expected,
                expected_witnesses: None,
                witnesses_match: None,
                pass: false,
            };
            match exp.kind {
                CheckKind::LowerBound => {
                    check.pass = observed >= expected;
                    if !check.pass {
                        for l in observed_lines {
                            counterexamples.push(Counterexample {
                                graph6: l.clone(),
                                em1: observed,
                                reason: format!("n = {n}: EM1 {observed} is below the bound {expected}"),
                                site: None,
                                rewritten: None,
                                em1_after: None,
                            });
                        }
                    }
                }
                CheckKind::Minimum | CheckKind::Maximum => {
                    let want: BTreeSet<CanonicalForm> = exp.witnesses.iter().map(canon).collect();
                    let got = witness_set(observed_lines);
                    check.expected_witnesses = Some(want.iter().map(|c| c.to_string()).collect());
                    check.witnesses_match = Some(want == got);
                    check.pass = observed == expected && want == got;
                    if !check.pass {
                        let side = if exp.kind == CheckKind::Minimum { "minimum" } else { "maximum" };
                        for extra in got.difference(&want) {
                            counterexamples.push(Counterexample {
                                graph6: extra.to_string(),
                                em1: observed,
                                reason: format!(
                                    "n = {n}: attains the observed {side} {observed}, claimed {side} is {expected} at the named family only"
                                ),
                                site: None,
                                rewritten: None,
                                em1_after: None,
                            });
                        }
                        for missing in want.difference(&got) {
                            counterexamples.push(Counterexample {
                                graph6: missing.to_string(),
                                em1: em1(&missing.to_graph()),
                                reason: format!(
                                    "n = {n}: named extremal graph does not attain the observed {side} {observed}"
                                ),
                                site: None,
                                rewritten: None,
                                em1_after: None,
                            });
                        }
                    }
                }
            }
            checks.push(check);
        }
        if c >= 2 && !checks.iter().any(|ch| ch.kind == CheckKind::Maximum) {
            notes.push(format!(
                "n = {n}: observed maximum {} with {} class(es)",
                report.max.value,
                report.max.witnesses.len()
            ));
        }
        if let Some(lb) = checks.iter().find(|ch| ch.kind == CheckKind::LowerBound) {
            if lb.pass && !lb.attained {
                notes.push(format!(
                    "n = {n}: lower bound {} not attained, observed minimum {}",
                    lb.expected, lb.observed
                ));
            }
        }
        let pass = checks.iter().all(|ch| ch.pass);
        orders.push(OrderVerdict {
            n,
            cyclomatic: c,
            visited: report.visited,
            observed_min: report.min.value,
            observed_max: report.max.value,
            min_witnesses: report.min.witnesses,
            max_witnesses: report.max.witnesses,
            checks,
            pass,
        });
    }
    let verdict = if orders.iter().all(|o| o.pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let count = counterexamples.len() as u64;
    counterexamples.truncate(MAX_STORED_COUNTEREXAMPLES);
    Ok(VerdictReport {
        schema: VERDICT_SCHEMA,
        claim,
        statement: claim.statement().to_string(),
        n_from,
        n_to,
        verdict,
        orders,
        lemma: None,
        counterexample_count: count,
        counterexamples,
        notes,
    })
}

/// Uniformly random labeled tree on `n` vertices (random Prüfer sequence)
/// plus `c` distinct random non-edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, c: usize) -> Graph {
    assert!(n >= 2, "need two vertices for a spanning tree");
    let max_extra = n * (n - 1) / 2 - (n - 1);
    assert!(c <= max_extra, "cyclomatic number {c} impossible on {n} vertices");
    let mut edges = Vec::with_capacity(n - 1 + c);
    if n == 2 {
        edges.push((0, 1));
    } else {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &x in &code {
            degree[x] += 1;
        }
        for &x in &code {
            let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
            edges.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((last[0], last[1]));
    }
    let tree = Graph::new(n, edges.iter().copied()).expect("Prüfer decoding yields a tree");
    let mut non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !tree.has_edge(a, b))
        .collect();
    non_edges.shuffle(rng);
    edges.extend(non_edges.into_iter().take(c));
    Graph::new(n, edges).expect("distinct non-edges keep the graph simple")
}

/// `trials` seeded random connected graphs with `4 <= n <= 12` and
/// cyclomatic number uniform in `0..=6` (capped by density).
pub fn random_corpus(trials: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(4..=12);
            let cap = (n * (n - 1) / 2 - (n - 1)).min(6);
            let c = rng.gen_range(0..=cap);
            random_connected_graph(&mut rng, n, c)
        })
        .collect()
}

/// Graphs the lemma checks run on.
#[derive(Debug, Clone)]
pub struct LemmaCorpus {
    pub exhaustive_max_n: usize,
    /// One graph per isomorphism class of connected graphs, `n <= exhaustive_max_n`.
    pub exhaustive: Vec<Graph>,
    pub random: Vec<Graph>,
    pub seed: u64,
}

impl LemmaCorpus {
    pub fn build(exhaustive_max_n: usize, trials: usize, seed: u64, workers: usize) -> Result<Self, VerifyError> {
        let mut exhaustive = Vec::new();
        for n in 1..=exhaustive_max_n {
            exhaustive.extend(connected_classes(n, workers)?);
        }
        Ok(LemmaCorpus {
            exhaustive_max_n,
            exhaustive,
            random: random_corpus(trials, seed),
            seed,
        })
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.exhaustive.iter().chain(&self.random)
    }
}

fn fixture(op: OperationKind) -> (Graph, RewriteSpec) {
    let g = |n, e: &[(usize, usize)]| Graph::new(n, e.iter().copied()).expect("fixture");
    match op {
        OperationKind::I => (
            g(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]),
            RewriteSpec::I { u: 2, v: 1 },
        ),
        OperationKind::II => (
            g(7, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (4, 6)]),
            RewriteSpec::II { path: vec![0, 3, 4] },
        ),
        OperationKind::III => (
            g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]),
            RewriteSpec::III {
                root: 0,
                subtree: vec![3],
                y: 2,
            },
        ),
        OperationKind::IV => (
            g(5, &[(0, 1), (1, 2), (0, 3), (2, 4)]),
            RewriteSpec::IV { u: 0, v: 2 },
        ),
    }
}

/// EM1 by the line-graph route, independent of the edge-degree kernel.
fn em1_via_line_graph(g: &Graph) -> u128 {
    match g.line_graph() {
        Ok((l, _)) => m1(&l),
        Err(_) => 0,
    }
}

/// Problems with one site, or `None` when the lemma holds there.
fn check_site(g: &Graph, site: &RewriteSpec, increases: bool) -> Option<Counterexample> {
    let r = match apply(g, site) {
        Ok(r) => r,
        Err(e) => {
            return Some(Counterexample {
                graph6: graph6::encode(g),
                em1: em1(g),
                reason: format!("discovered site rejected: {e}"),
                site: Some(site.clone()),
                rewritten: None,
                em1_after: None,
            })
        }
    };
    let mut problems = Vec::new();
    let strict = if increases {
        r.em1_after > r.em1_before
    } else {
        r.em1_after < r.em1_before
    };
    if !strict {
        problems.push(format!(
            "EM1 went {} -> {}, expected a strict {}",
            r.em1_before,
            r.em1_after,
            if increases { "increase" } else { "decrease" }
        ));
    }
    let h = &r.graph;
    if h.order() != g.order() || h.size() != g.size() {
        problems.push("order or size changed".into());
    }
    if g.is_connected() && (!h.is_connected() || h.cyclomatic_number() != g.cyclomatic_number()) {
        problems.push("connectivity or cyclomatic number changed".into());
    }
    if r.em1_before != em1_via_line_graph(g) || r.em1_after != em1_via_line_graph(h) {
        problems.push("recorded EM1 disagrees with the line-graph recomputation".into());
    }
    if problems.is_empty() {
        return None;
    }
    Some(Counterexample {
        graph6: graph6::encode(g),
        em1: r.em1_before,
        reason: problems.join("; "),
        site: Some(site.clone()),
        rewritten: Some(graph6::encode(h)),
        em1_after: Some(r.em1_after),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Fewer exercised sites than this makes the verdict inconclusive.
    pub min_sites: u64,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions { min_sites: 1 }
    }
}

/// Runs the lemma on every applicable site of every corpus graph.
pub fn verify_lemma_on(
    claim: Claim,
    corpus: &LemmaCorpus,
    options: LemmaOptions,
) -> Result<VerdictReport, VerifyError> {
    let op = claim.operation().ok_or(VerifyError::NotALemma(claim))?;
    let increases = op.increases_em1();

    let (fg, fsite) = fixture(op);
    let fr = apply(&fg, &fsite).expect("fixture sites are valid");
    let fixture = FixtureCheck {
        before: graph6::encode(&fg),
        site: fsite,
        after: graph6::encode(&fr.graph),
        em1_before: fr.em1_before,
        em1_after: fr.em1_after,
        holds: if increases {
            fr.em1_after > fr.em1_before
        } else {
            fr.em1_after < fr.em1_before
        },
    };

    let graphs: Vec<&Graph> = corpus.graphs().collect();
    let per_graph: Vec<(u64, Vec<Counterexample>)> = graphs
        .par_iter()
        .map(|g| {
            let sites = find_applicable(g, op);
            let bad: Vec<Counterexample> = sites
                .iter()
                .filter_map(|s| check_site(g, s, increases))
                .collect();
            (sites.len() as u64, bad)
        })
        .collect();

    let sites: u64 = per_graph.iter().map(|(s, _)| s).sum();
    let graphs_with_sites = per_graph.iter().filter(|(s, _)| *s > 0).count();
    let mut counterexamples: Vec<Counterexample> =
        per_graph.into_iter().flat_map(|(_, bad)| bad).collect();
    let violations = counterexamples.len() as u64;
    if !fixture.holds {
        counterexamples.insert(
            0,
            Counterexample {
                graph6: fixture.before.clone(),
                em1: fixture.em1_before,
                reason: "fixture violates the claimed direction".into(),
                site: Some(fixture.site.clone()),
                rewritten: Some(fixture.after.clone()),
                em1_after: Some(fixture.em1_after),
            },
        );
    }
    let count = counterexamples.len() as u64;
    counterexamples.truncate(MAX_STORED_COUNTEREXAMPLES);

    let mut notes = Vec::new();
    let verdict = if count > 0 {
        Verdict::Fail
    } else if sites < options.min_sites {
        notes.push(format!(
            "only {sites} site(s) exercised, {} required",
            options.min_sites
        ));
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let max_random = corpus.random.iter().map(Graph::order).max().unwrap_or(0);
    Ok(VerdictReport {
        schema: VERDICT_SCHEMA,
        claim,
        statement: claim.statement().to_string(),
        n_from: 1,
        n_to: corpus.exhaustive_max_n.max(max_random),
        verdict,
        orders: Vec::new(),
        lemma: Some(LemmaOutcome {
            operation: op,
            direction: if increases { "increase" } else { "decrease" }.into(),
            exhaustive_max_n: corpus.exhaustive_max_n,
            exhaustive_graphs: corpus.exhaustive.len(),
            random_graphs: corpus.random.len(),
            seed: corpus.seed,
            graphs_with_sites,
            sites,
            violations,
            min_sites: options.min_sites,
            fixture,
        }),
        counterexample_count: count,
        counterexamples,
        notes,
    })
}

/// Builds the default corpus (all connected graphs up to 7 vertices plus
/// `trials` random ones) and checks the lemma on it.
pub fn verify_lemma(claim: Claim, trials: usize, seed: u64) -> Result<VerdictReport, VerifyError> {
    if trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    claim.operation().ok_or(VerifyError::NotALemma(claim))?;
    let corpus = LemmaCorpus::build(7, trials, seed, rayon::current_num_threads())?;
    verify_lemma_on(claim, &corpus, LemmaOptions::default())
}
