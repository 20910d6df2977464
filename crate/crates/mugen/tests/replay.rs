use mugen::corpus::StaircaseSpace;
use mugen::suites::{self, replay, run_suite, run_suite_with, Outcome, RunConfig, Source, SourceKind, Suite};
use mugen_core::MonomialIdeal;

fn quick(seed: u64) -> RunConfig {
    RunConfig { seed, samples: Some(60), random_only: true, ..RunConfig::default() }
}

/// Rejects every staircase with a generator of total degree above 7.
fn tripwire() -> Suite {
    let space = StaircaseSpace::new(3, 5).unwrap();
    let check = |_: u64, v: &[MonomialIdeal], _: &suites::Params| {
        let top = v[0].generators().iter().map(|g| g.degree().to_u64().unwrap()).max().unwrap();
        vec![("degree", if top > 7 { Outcome::Fail(format!("degree {top}")) } else { Outcome::Pass })]
    };
    let s = Source::new("tripwire", SourceKind::Exhaustive, space.count(), move |i| vec![space.get(i).to_ideal()], check);
    Suite { name: "tripwire".into(), sources: vec![s] }
}

#[test]
fn same_seed_same_bytes() {
    for name in ["shalom", "type", "cold", "brexit", "new"] {
        let a = run_suite(name, &quick(3)).unwrap().to_json_without_duration();
        let b = run_suite(name, &quick(3)).unwrap().to_json_without_duration();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn seed_changes_the_draws() {
    let a = suites::suite("museum", &quick(1)).unwrap().0;
    let b = suites::suite("museum", &quick(2)).unwrap().0;
    let sa: Vec<_> = (0..20).map(|i| (a.sources[0].generate)(i)).collect();
    let sb: Vec<_> = (0..20).map(|i| (b.sources[0].generate)(i)).collect();
    assert_ne!(sa, sb);
}

#[test]
fn injected_failures_replay_from_text() {
    let (_, resolved) = suites::suite("bar", &quick(0)).unwrap();
    let suite = tripwire();
    let report = run_suite_with(&suite, &resolved);
    assert_eq!(report.exit_code(), mugen::EXIT_FAIL);
    let v = &report.verdicts[0];
    assert!(v.fail > 0);
    assert_eq!(v.witnesses.len(), resolved.max_witnesses);
    // Lowest indices first, whatever the worker count.
    let indices: Vec<u64> = v.witnesses.iter().map(|w| w.index).collect();
    let mut sorted = indices.clone();
    sorted.sort_unstable();
    assert_eq!(indices, sorted);
    for w in &v.witnesses {
        assert_eq!(replay(&suite, w, &resolved.params).unwrap(), Outcome::Fail(w.detail.clone()));
    }
}

#[test]
fn witnesses_do_not_depend_on_workers() {
    let (_, mut resolved) = suites::suite("bar", &quick(0)).unwrap();
    let suite = tripwire();
    resolved.workers = 1;
    let one = run_suite_with(&suite, &resolved).verdicts;
    resolved.workers = 4;
    let four = run_suite_with(&suite, &resolved).verdicts;
    assert_eq!(one, four);
}
