//! One line per acceptance criterion. Runs with `harness = false` so the
//! lines are printed whether or not output capture is on.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mugen::corpus::{small_artinian, StaircaseSpace};
use mugen::parse::parse_ideal;
use mugen::report::Report;
use mugen::suites::{self, run_suite, run_suite_with, Outcome, RunConfig, Source, SourceKind, Suite};
use mugen_core::artinian::{cm_type, intersect_components, irreducible_decomposition};
use mugen_core::fiber::{h_vector, mu_series, reconstruct_series, spread_for_h_vector};
use mugen_core::{minimalize, Monomial, MonomialIdeal};
use num_bigint::BigInt;

type Verdict = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn run(name: &str, cfg: &RunConfig) -> Result<Report, String> {
    run_suite(name, cfg).map_err(|e| e.to_string())
}

fn clean(r: &Report) -> Result<(), String> {
    ensure(r.counts.fail == 0 && !r.partial, || {
        let w = r.verdicts.iter().flat_map(|v| v.witnesses.first()).next();
        format!("suite {}: {} failures, first witness {:?}", r.suite, r.counts.fail, w.map(|w| &w.text))
    })
}

fn instances(r: &Report, kind: &str) -> u64 {
    r.sources.iter().filter(|s| s.kind == kind).map(|s| s.instances).sum()
}

/// `I^k` as the minimalized set of all k-fold generator products.
fn naive_power(i: &MonomialIdeal, k: usize) -> MonomialIdeal {
    let mut layer: Vec<Monomial> = vec![Monomial::one(i.arity())];
    for _ in 0..k {
        let next: Vec<Monomial> =
            layer.iter().flat_map(|u| i.generators().iter().map(move |g| u.mul(g).unwrap())).collect();
        layer = minimalize(&next).unwrap().generators().to_vec();
    }
    minimalize(&layer).unwrap()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let r = run("paper-fixtures", &RunConfig::default())?;
    clean(&r)?;
    ensure(r.counts.pass == 14 && r.verdicts.iter().all(|v| v.pass == 1), || format!("{:?}", r.counts))?;

    let i = parse_ideal("x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6").unwrap();
    let direct: Vec<usize> = (1..=6).map(|k| naive_power(&i, k).mu()).collect();
    ensure(direct == [5, 8, 11, 14, 17, 20], || format!("direct powers {direct:?}"))?;
    let cube = MonomialIdeal::maximal_power(3, 3);
    ensure(cube.mu() == 10 && naive_power(&cube, 2).mu() == 28, || "maximal cube".into())?;
    for a in 1..=3usize {
        let mut text = String::from("x^4, x^3*y, x*y^3, y^4");
        for j in 0..=a {
            text += &format!(", x^2*y^2*z^{}*t^{}", a - j, j);
        }
        let c = parse_ideal(&text).unwrap();
        ensure(c.mu() == 5 + a && naive_power(&c, 2).mu() == 9, || format!("conca a = {a}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("14 fixtures exact, {} ms", elapsed.as_millis()))
}

fn criterion_2() -> Verdict {
    let space = StaircaseSpace::new(7, 12).unwrap();
    let cfg = RunConfig { workers: Some(1), ..RunConfig::default() };
    let r = run("small", &cfg)?;
    clean(&r)?;
    let small = r.verdicts.iter().find(|v| v.check == "small").ok_or("no small verdict")?;
    // Principal ideals (m = 1) are outside the hypothesis; everything else must pass.
    let principal = StaircaseSpace::new(1, 12).unwrap().count();
    let exhaustive = r.sources.iter().find(|s| s.kind == "exhaustive").map_or(0, |s| s.instances);
    ensure(exhaustive == space.count(), || format!("exhaustive source has {exhaustive} of {}", space.count()))?;
    ensure(small.pass >= space.count() - principal, || format!("only {} passes", small.pass))?;
    let single = Duration::from_millis(r.duration_ms);
    ensure(single < Duration::from_secs(600), || format!("single worker took {single:?}"))?;

    let cpus = suites::default_workers();
    let speedup = if cpus >= 8 {
        let r8 = run("small", &RunConfig { workers: Some(8), ..RunConfig::default() })?;
        ensure(r8.verdicts == r.verdicts, || "verdicts differ between 1 and 8 workers".into())?;
        let s = r.duration_ms as f64 / r8.duration_ms.max(1) as f64;
        ensure(s >= 8.0 * 0.8, || format!("speedup {s:.2} with 8 workers"))?;
        format!("speedup {s:.2} at 8 workers")
    } else {
        let r4 = run("small", &RunConfig { workers: Some(4), ..RunConfig::default() })?;
        ensure(r4.verdicts == r.verdicts, || "verdicts differ between 1 and 4 workers".into())?;
        format!("speedup not measurable on {cpus} CPU(s); 1 and 4 workers agree")
    };
    Ok(format!("{} staircases, {} ms single worker, {speedup}", space.count(), r.duration_ms))
}

fn criterion_3() -> Verdict {
    let r = run("new", &RunConfig::default())?;
    clean(&r)?;
    let random = instances(&r, "random");
    let exhaustive = instances(&r, "exhaustive");
    ensure(random >= 10_000, || format!("{random} random pairs"))?;
    ensure(exhaustive == 255 * 255, || format!("{exhaustive} exhaustive pairs"))?;
    Ok(format!("{random} random + {exhaustive} exhaustive pairs agree"))
}

const INEQUALITY_SUITES: &[&str] = &[
    "shalom", "kill", "museum", "huneke", "freiman", "h2", "baby", "rough", "yes", "brexit", "lexsegment", "truered",
    "cold", "convex", "bar", "type",
];

fn criterion_4() -> Verdict {
    let mut total = 0;
    for name in INEQUALITY_SUITES {
        let r = run(name, &RunConfig::default())?;
        clean(&r)?;
        ensure(instances(&r, "random") >= 1_000, || format!("{name}: too few random instances"))?;
        ensure(instances(&r, "exhaustive") > 0, || format!("{name}: no exhaustive source"))?;
        ensure(r.verdicts.iter().all(|v| v.pass > 0), || format!("{name}: a check never applied"))?;
        total += r.counts.instances;
    }
    Ok(format!("{} suites, {total} instances", INEQUALITY_SUITES.len()))
}

fn criterion_5() -> Verdict {
    let r = run("compare", &RunConfig::default())?;
    clean(&r)?;
    let recon = r.verdicts.iter().find(|v| v.check == "h-reconstruct").ok_or("no h-reconstruct verdict")?;
    ensure(recon.pass >= 1_000, || format!("h-reconstruct ran on {} ideals", recon.pass))?;

    // Reconstruct independently of the suite, on every ℓ = 2 staircase with m ≤ 4, B ≤ 5.
    let space = StaircaseSpace::new(4, 5).unwrap();
    let mut checked = 0;
    for idx in 0..space.count() {
        let i = space.get(idx).to_ideal();
        if spread_for_h_vector(&i, 10).ok() != Some(2) {
            continue;
        }
        let h = h_vector(&i, 10, 3).map_err(|e| e.to_string())?;
        let series: Vec<BigInt> = mu_series(&i, 10).unwrap().values.iter().map(|&v| BigInt::from(v)).collect();
        let rebuilt = reconstruct_series(2, &h.coefficients, series.len());
        ensure(rebuilt == series, || format!("series mismatch for ({i})"))?;
        checked += 1;
    }

    let failure = parse_ideal("x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6").unwrap();
    let h = h_vector(&failure, 8, 3).map_err(|e| e.to_string())?;
    let want: Vec<BigInt> = [1, 3, -1].into_iter().map(BigInt::from).collect();
    ensure(h.trimmed() == want.as_slice() && h.stabilized, || format!("failure h = {:?}", h.coefficients))?;

    for a in 1..=4u64 {
        for r in 1..=4usize {
            let i = parse_ideal(&format!("x^{a}, y^{a}")).unwrap().power(r);
            let h = h_vector(&i, 8, 3).map_err(|e| e.to_string())?;
            let want: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(r as i64 - 1)];
            ensure(h.spread == 2 && h.trimmed() == want.as_slice() && h.stabilized, || {
                format!("(x^{a}, y^{a})^{r}: h = {:?}", h.coefficients)
            })?;
        }
    }

    let d = run("difference", &RunConfig::default())?;
    clean(&d)?;
    let d3 = run("difference", &RunConfig { arity: Some(3), ..RunConfig::default() })?;
    clean(&d3)?;
    let applied = d3.verdicts.iter().find(|v| v.check == "difference").map_or(0, |v| v.pass);
    ensure(applied >= 1_000, || format!("difference applied to {applied} ternary ideals"))?;
    Ok(format!("{} + {checked} reconstructions, {applied} ternary difference identities", recon.pass))
}

fn criterion_6() -> Verdict {
    let r = run("duality", &RunConfig::default())?;
    clean(&r)?;
    let mut decomposed = 0;
    for (arity, p) in [(2, 7), (3, 3)] {
        for i in small_artinian(arity, p) {
            let comps = irreducible_decomposition(&i).map_err(|e| e.to_string())?;
            let t = cm_type(&i).map_err(|e| e.to_string())?;
            ensure(intersect_components(&comps).unwrap() == i, || format!("components of ({i}) do not intersect back"))?;
            ensure(comps.len() == t, || format!("({i}): {} components, type {t}", comps.len()))?;
            if arity == 2 {
                ensure(t + 1 == i.mu(), || format!("({i}): type {t}"))?;
            }
            decomposed += 1;
        }
    }
    let ty = run("type", &RunConfig::default())?;
    clean(&ty)?;
    let m = MonomialIdeal::maximal_power(2, 1);
    let sq = m.product(&m).unwrap();
    ensure(cm_type(&sq) == Ok(2), || "boundary (x, y)(x, y) is not type 2".into())?;
    Ok(format!(
        "duality on {} ideals, {decomposed} decompositions, type theorem on {} pairs",
        r.counts.instances,
        ty.counts.pass
    ))
}

/// Breaks on every staircase whose square has an even number of generators.
fn broken_suite() -> Suite {
    let space = StaircaseSpace::new(4, 5).unwrap();
    let source = Source::new(
        "broken",
        SourceKind::Exhaustive,
        space.count().min(2_000),
        move |idx| vec![space.get(idx).to_ideal()],
        |_, v: &[MonomialIdeal], _| {
            let mu2 = v[0].power(2).mu();
            let o = if mu2.is_multiple_of(2) { Outcome::Fail(format!("μ(I²) = {mu2} is even")) } else { Outcome::Pass };
            vec![("parity", o)]
        },
    );
    Suite { name: "broken".into(), sources: vec![source] }
}

fn criterion_7() -> Verdict {
    let mut compared = 0;
    for name in suites::SUITE_NAMES {
        let cfg = RunConfig { seed: 7, samples: Some(150), random_only: *name == "small", ..RunConfig::default() };
        let a = run(name, &cfg)?;
        let b = run(name, &RunConfig { workers: Some(3), ..cfg.clone() })?;
        let c = run(name, &RunConfig { workers: Some(3), ..cfg })?;
        // Worker count is part of the echoed config, so only same-config runs compare byte for byte.
        ensure(b.to_json_without_duration() == c.to_json_without_duration(), || format!("{name}: reports differ"))?;
        ensure(a.verdicts == b.verdicts, || format!("{name}: verdicts depend on worker count"))?;
        compared += 1;
    }

    let (_, resolved) = suites::suite("shalom", &RunConfig { samples: Some(10), ..RunConfig::default() })
        .map_err(|e| e.to_string())?;
    let broken = broken_suite();
    let report = run_suite_with(&broken, &resolved);
    let v = &report.verdicts[0];
    ensure(v.fail > 0 && !v.witnesses.is_empty(), || "broken checker produced no witness".into())?;
    for w in &v.witnesses {
        let again = suites::replay(&broken, w, &resolved.params)?;
        ensure(again == Outcome::Fail(w.detail.clone()), || format!("replay of {} gave {again:?}", w.index))?;
    }
    Ok(format!("{compared} suites reproducible, {} injected witnesses replayed", v.witnesses.len()))
}

fn main() -> ExitCode {
    type Criterion = (u8, &'static str, fn() -> Verdict);
    let criteria: [Criterion; 7] = [
        (1, "fixtures reproduce exactly", criterion_1),
        (2, "exhaustive small, m <= 7, B = 12", criterion_2),
        (3, "power-shape classifier agreement", criterion_3),
        (4, "inequality suites", criterion_4),
        (5, "h-vector reconstruction and difference identity", criterion_5),
        (6, "artinian duality and type", criterion_6),
        (7, "determinism and witness replay", criterion_7),
    ];
    let mut failed = 0;
    for (n, title, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(note) => println!("criterion {n} PASS {title}: {note} [{:.1}s]", start.elapsed().as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL {title}: {why} [{:.1}s]", start.elapsed().as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
