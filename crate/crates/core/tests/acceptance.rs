//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p zagreb --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use zagreb::enumerate::{connected_classes, extremal_scan, ConnectedSubsets, EnumSpec};
use zagreb::families::{expected_em1, FamilyId, Provenance, Reference};
use zagreb::graph6::{self, Graph6Error};
use zagreb::indices::{em1, em2, m1, m2};
use zagreb::verify::{
    random_corpus, verify_lemma_on, verify_theorem, Claim, LemmaCorpus, LemmaOptions, TheoremOptions,
};
use zagreb::{canonical_form, Graph, IndexId};

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// EM1 straight from an edge list, sharing no code with the library.
fn em1_oracle(n: usize, edges: &[(usize, usize)]) -> u128 {
    let mut deg = vec![0u128; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    edges
        .iter()
        .map(|&(u, v)| (deg[u] + deg[v] - 2).pow(2))
        .sum()
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases = [
        (Reference::Path, FamilyId::Path),
        (Reference::Star, FamilyId::Star),
        (Reference::Cycle, FamilyId::Cycle),
        (Reference::SnN, FamilyId::SnM(0)),
        (Reference::SnN1, FamilyId::SnM(1)),
        (Reference::SnN2, FamilyId::SnM(2)),
        (Reference::SnK4, FamilyId::SnK4),
    ];
    let pinned = [
        (Reference::SnN1, "n^3-5n^2+16n+4"),
        (Reference::SnN2, "n^3-5n^2+20n+32"),
        (Reference::SnK4, "n^3-5n^2+20n+32"),
    ];
    for (r, text) in pinned {
        let v = r.value();
        if compact(&v.form.to_string()) != text || v.provenance != Provenance::Published {
            return Err(format!("{} registered as {} ({:?})", r.name(), v.form, v.provenance));
        }
    }
    let mut checked = 0;
    for (r, fam) in cases {
        // three further leaves are needed for S_n^{n+2}
        let from = r.value().min_n.max(4);
        for n in from..=200 {
            let g = fam.build(n).map_err(|e| e.to_string())?;
            let got = em1(&g);
            let want = expected_em1(r, n).map_err(|e| e.to_string())?.value;
            let edges: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
            let oracle = em1_oracle(n, &edges);
            if got != want || oracle != want {
                return Err(format!("{fam} at n = {n}: em1 {got}, oracle {oracle}, form {want}"));
            }
            checked += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 1.0 {
        return Err(format!("{checked} cases took {secs:.3}s (limit 1s)"));
    }
    Ok(format!("{checked} (family, n) cases exact in {secs:.3}s; S_n^{{n+2}} from n = 5"))
}

fn theorem(claim: Claim) -> Result<zagreb::verify::VerdictReport, String> {
    let options = TheoremOptions {
        workers: workers(),
        allow_large: false,
    };
    verify_theorem(claim, 4, 8, options).map_err(|e| e.to_string())
}

fn criterion_2() -> Outcome {
    let r = theorem(Claim::Theorem5)?;
    if !r.passed() {
        return Err(format!("verdict {:?}; {} counterexample(s)", r.verdict, r.counterexample_count));
    }
    for o in &r.orders {
        let n = o.n as u128;
        let want = n * n * n + 20 * n + 32 - 5 * n * n;
        let classes = o.max_witnesses.len();
        let expect_classes = if o.n == 4 { 1 } else { 2 };
        if o.observed_max != want || classes != expect_classes {
            return Err(format!("n = {}: max {} with {classes} class(es)", o.n, o.observed_max));
        }
    }
    let k4 = &r.orders[0];
    if k4.observed_max != 96 || k4.max_witnesses != ["C~"] {
        return Err(format!("n = 4 witnesses {:?}", k4.max_witnesses));
    }
    let maxima: Vec<String> = r.orders.iter().map(|o| o.observed_max.to_string()).collect();
    Ok(format!("max EM1 for n = 4..8: {}", maxima.join(", ")))
}

fn criterion_3() -> Outcome {
    let r = theorem(Claim::Theorem4)?;
    if !r.passed() {
        return Err(format!("verdict {:?}; {} counterexample(s)", r.verdict, r.counterexample_count));
    }
    let rows: Vec<String> = r
        .orders
        .iter()
        .map(|o| {
            let c = &o.checks[0];
            format!(
                "n={}: min {} vs {}{}",
                o.n,
                c.observed,
                c.expected,
                if c.attained { " attained" } else { "" }
            )
        })
        .collect();
    Ok(rows.join("; "))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for claim in [Claim::Theorem1, Claim::Theorem2, Claim::Theorem3] {
        let r = theorem(claim)?;
        if !r.passed() {
            return Err(format!(
                "{claim}: verdict {:?}; {} counterexample(s)",
                r.verdict, r.counterexample_count
            ));
        }
        parts.push(format!("{claim} ok"));
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 300.0 {
        return Err(format!("took {secs:.1}s (limit 300s)"));
    }
    Ok(format!("{} in {secs:.1}s", parts.join(", ")))
}

fn criterion_5() -> Outcome {
    let corpus = LemmaCorpus::build(7, 1000, SEED, workers()).map_err(|e| e.to_string())?;
    let options = LemmaOptions { min_sites: 100 };
    let mut parts = Vec::new();
    for claim in [Claim::Lemma1, Claim::Lemma2, Claim::Lemma3, Claim::Lemma4] {
        let r = verify_lemma_on(claim, &corpus, options).map_err(|e| e.to_string())?;
        let l = r.lemma.as_ref().expect("lemma outcome");
        if !r.passed() {
            return Err(format!(
                "{claim}: verdict {:?}, {} site(s), {} violation(s)",
                r.verdict, l.sites, l.violations
            ));
        }
        parts.push(format!("{claim} {} sites", l.sites));
    }
    Ok(format!(
        "{} graphs ({} classes n <= 7, {} random); {}; 0 violations",
        corpus.exhaustive.len() + corpus.random.len(),
        corpus.exhaustive.len(),
        corpus.random.len(),
        parts.join(", ")
    ))
}

fn line_graph_agrees(g: &Graph) -> bool {
    if g.size() == 0 {
        return em1(g) == 0 && em2(g) == 0;
    }
    let (l, _) = g.line_graph().expect("has edges");
    em1(g) == m1(&l) && em2(g) == m2(&l)
}

fn criterion_6() -> Outcome {
    let mut labeled = 0u64;
    for n in 1..=7 {
        for c in 0..=3 {
            let spec = EnumSpec::new(n, c);
            if spec.validate().is_err() {
                continue;
            }
            let gen = ConnectedSubsets::new(n, spec.edges()).map_err(|e| e.to_string())?;
            let (bad, count) = gen
                .par_fold(
                    workers(),
                    || None,
                    |bad: &mut Option<u64>, g| {
                        if bad.is_none() && !line_graph_agrees(&g.to_graph()) {
                            *bad = Some(g.mask());
                        }
                    },
                    |a, b| a.or(b),
                )
                .map_err(|e| e.to_string())?;
            if let Some(mask) = bad {
                return Err(format!("labeled n = {n}, c = {c}, mask {mask:#x}"));
            }
            labeled += count;
        }
    }
    let mut classes = 0;
    for n in 1..=7 {
        for g in connected_classes(n, workers()).map_err(|e| e.to_string())? {
            if !line_graph_agrees(&g) {
                return Err(format!("class {}", graph6::encode(&g)));
            }
            classes += 1;
        }
    }
    let random = random_corpus(1000, SEED);
    if let Some(g) = random.iter().find(|g| !line_graph_agrees(g)) {
        return Err(format!("random graph {}", graph6::encode(g)));
    }
    Ok(format!(
        "{labeled} labeled (c <= 3) + {classes} classes (n <= 7) + {} random graphs",
        random.len()
    ))
}

fn round_trips(g: &Graph) -> bool {
    graph6::decode(&graph6::encode(g)).as_ref() == Ok(g)
}

fn criterion_7() -> Outcome {
    // K4 by hand: N(4) = 4 + 63 = 'C', six set bits = 63 + 63 = '~'
    let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let hand = String::from_utf8(vec![4 + 63, 63 + 63]).unwrap();
    if graph6::encode(&k4) != hand || hand != "C~" {
        return Err(format!("K4 encodes to {:?}", graph6::encode(&k4)));
    }
    let mut labeled = 0u64;
    for n in 1..=8 {
        for c in 0..=3 {
            let spec = EnumSpec::new(n, c).allow_large(true);
            if spec.validate().is_err() {
                continue;
            }
            let gen = ConnectedSubsets::new(n, spec.edges()).map_err(|e| e.to_string())?;
            let (bad, count) = gen
                .par_fold(
                    workers(),
                    || None,
                    |bad: &mut Option<u64>, g| {
                        if bad.is_none() && !round_trips(&g.to_graph()) {
                            *bad = Some(g.mask());
                        }
                    },
                    |a, b| a.or(b),
                )
                .map_err(|e| e.to_string())?;
            if let Some(mask) = bad {
                return Err(format!("labeled n = {n}, c = {c}, mask {mask:#x}"));
            }
            labeled += count;
        }
    }
    let mut classes = 0;
    for n in 1..=7 {
        for g in connected_classes(n, workers()).map_err(|e| e.to_string())? {
            if !round_trips(&g) {
                return Err(format!("class {}", graph6::encode(&g)));
            }
            classes += 1;
        }
    }
    let malformed: [(&str, Graph6Error); 5] = [
        ("", Graph6Error::Empty),
        ("C~~", Graph6Error::Trailing { position: 2 }),
        ("D!C", Graph6Error::BadByte { position: 1, byte: b'!' }),
        ("D", Graph6Error::Truncated { position: 1, expected: 3 }),
        // n = 2 uses one bit; '@' would set a padding bit
        ("A@", Graph6Error::PaddingSet { position: 1 }),
    ];
    for (line, want) in malformed {
        match graph6::decode(line) {
            Err(e) if e == want => {}
            other => return Err(format!("{line:?} decoded to {other:?}, expected {want:?}")),
        }
    }
    match graph6::decode_lines("C~\n\nDhC\nC?x\n") {
        Err(e) if e.to_string().contains("line 4") => {}
        other => return Err(format!("multi-line diagnostic: {other:?}")),
    }
    Ok(format!(
        "{labeled} labeled (n <= 8, c <= 3) + {classes} classes (n <= 7) round-trip; K4 = \"C~\"; 6 malformed inputs rejected"
    ))
}

fn criterion_8() -> Outcome {
    let run = |w: usize| {
        extremal_scan(&EnumSpec::new(7, 3).workers(w), IndexId::EM1)
            .map(|r| r.without_timing())
            .map_err(|e| e.to_string())
    };
    let one = run(1)?;
    for w in [2, 8] {
        let other = run(w)?;
        if other != one {
            return Err(format!("{w} workers disagree with 1 worker"));
        }
    }
    let classes: BTreeSet<String> = one
        .max
        .witnesses
        .iter()
        .map(|l| canonical_form(&graph6::decode(l).unwrap()).unwrap().to_string())
        .collect();
    Ok(format!(
        "{} graphs, min {}, max {} ({} classes) identical at 1, 2, 8 workers",
        one.visited,
        one.min.value,
        one.max.value,
        classes.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("family closed forms, n = 4..200", criterion_1),
        ("tricyclic maximum, n = 4..8", criterion_2),
        ("tricyclic lower bound, n = 4..8", criterion_3),
        ("tree, unicyclic, bicyclic extremes, n = 4..8", criterion_4),
        ("rewrite lemmas over corpus", criterion_5),
        ("line-graph oracle", criterion_6),
        ("graph6 conformance", criterion_7),
        ("worker-count determinism, n = 7, c = 3", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 8/8 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 failed");
        ExitCode::FAILURE
    }
}
