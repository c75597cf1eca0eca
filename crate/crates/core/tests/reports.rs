use zagreb::verify::{
    verify_lemma_on, verify_theorem, CheckKind, Claim, LemmaCorpus, LemmaOptions, TheoremOptions, Verdict,
    VerdictReport,
};

fn corpus() -> LemmaCorpus {
    LemmaCorpus::build(6, 200, 42, 2).unwrap()
}

#[test]
fn lemma_reports_are_byte_identical_for_a_seed() {
    let a = verify_lemma_on(Claim::Lemma2, &corpus(), LemmaOptions::default()).unwrap();
    let b = verify_lemma_on(Claim::Lemma2, &corpus(), LemmaOptions::default()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn too_few_sites_is_inconclusive_not_pass() {
    let r = verify_lemma_on(Claim::Lemma2, &corpus(), LemmaOptions { min_sites: u64::MAX }).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert_eq!(r.counterexample_count, 0);
    assert!(!r.notes.is_empty());
}

#[test]
fn theorem_report_round_trips_through_json() {
    let r = verify_theorem(Claim::Theorem3, 4, 6, TheoremOptions::default()).unwrap();
    let back: VerdictReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["claim"], "theorem-3");
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn bicyclic_checks_record_bound_and_attainment() {
    let r = verify_theorem(Claim::Theorem3, 4, 7, TheoremOptions { workers: 2, allow_large: false }).unwrap();
    assert!(r.passed());
    for o in &r.orders {
        let n = o.n as u128;
        let lower = o.checks.iter().find(|c| c.kind == CheckKind::LowerBound).unwrap();
        assert_eq!(lower.expected, 4 * n + 34);
        assert!(lower.observed >= lower.expected);
        assert_eq!(lower.attained, lower.observed == lower.expected);
        let upper = o.checks.iter().find(|c| c.kind == CheckKind::Maximum).unwrap();
        assert_eq!(upper.observed, n * n * n + 16 * n + 4 - 5 * n * n);
        assert_eq!(upper.witnesses_match, Some(true));
        assert_eq!(o.max_witnesses.len(), 1);
    }
}

#[test]
fn unicyclic_extremes_are_cycle_and_star_plus_edge() {
    let r = verify_theorem(Claim::Theorem2, 4, 7, TheoremOptions::default()).unwrap();
    assert!(r.passed());
    for o in &r.orders {
        let n = o.n as u128;
        assert_eq!(o.observed_min, 4 * n);
        assert_eq!(o.observed_max, n * n * n + 12 * n - 6 - 5 * n * n);
    }
}
