//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use enumgeom::recipes::{
    self, builtin_ledgers, clemens_excess, equivalence_unobstructed, equivalence_zero_dim,
    multiple_cover_weight, normal_bundle_classify, Rigidity,
};
use enumgeom::verify::{run_suite, Suite};
use enumgeom::{BigInt, BigRational, ChernVector, GradedRing, GrassCtx, SchubertCycle};

const LINES_LIMIT: Duration = Duration::from_secs(1);
const CONICS_LIMIT: Duration = Duration::from_secs(30);
const CLEMENS_LIMIT: Duration = Duration::from_secs(1);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn exact_count(n: usize, degrees: &[u32], want: u64, limit: Option<Duration>) -> Outcome {
    let (report, t) = timed(|| recipes::lines_on_complete_intersection(n, degrees));
    let got = report.ok().and_then(|r| r.count().cloned());
    let fast = !matches!(limit, Some(l) if t >= l);
    outcome(
        got == Some(BigInt::from(want)) && fast,
        format!("got {got:?}, expected {want}, {t:?}"),
    )
}

fn criterion_1() -> Outcome {
    exact_count(4, &[5], 2875, Some(LINES_LIMIT))
}

fn criterion_2() -> Outcome {
    let (report, t) = timed(|| recipes::conics_on_quintic_type(5));
    let got = report.ok().and_then(|r| r.count().cloned());
    outcome(
        got == Some(BigInt::from(609250)) && t < CONICS_LIMIT,
        format!("got {got:?}, expected 609250, {t:?}"),
    )
}

fn criterion_3() -> Outcome {
    exact_count(3, &[3], 27, None)
}

fn criterion_4() -> Outcome {
    let deg = |k, n| {
        let ctx = GrassCtx::new(k, n).unwrap();
        SchubertCycle::special(ctx, 1)
            .pow(ctx.dim() as u32)
            .integrate()
    };
    let (a, b) = (deg(2, 4), deg(2, 5));
    outcome(
        a == BigInt::from(2) && b == BigInt::from(5),
        format!("G(2,4): {a}, G(2,5): {b}"),
    )
}

fn criterion_5() -> Outcome {
    let verdicts = builtin_ledgers().check_all();
    let pass = verdicts.iter().all(|v| v.pass);
    let lines: Vec<String> = verdicts.iter().map(ToString::to_string).collect();
    outcome(pass, lines.join("; "))
}

fn criterion_6() -> Outcome {
    let (bad, t) = timed(|| {
        (1..=1000u64)
            .filter(|&d| clemens_excess(d).map_or(true, |c| c.excess != 0))
            .count()
    });
    outcome(
        bad == 0 && t < CLEMENS_LIMIT,
        format!("{bad} nonzero, {t:?}"),
    )
}

fn criterion_7() -> Outcome {
    let bad: Vec<i64> = (-10..=10)
        .filter(|&a| {
            let s = normal_bundle_classify(a);
            let rigid = s.rigidity == Rigidity::Rigid;
            s.b != -2 - a || rigid != (s.a == -1 && s.b == -1)
        })
        .collect();
    outcome(bad.is_empty(), format!("violations at {bad:?}"))
}

fn criterion_8() -> Outcome {
    let checks = run_suite(Suite::Properties);
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(ToString::to_string)
        .collect();
    outcome(
        failed.is_empty(),
        format!("{} checks, failures: {failed:?}", checks.len()),
    )
}

fn criterion_9() -> Outcome {
    let pt = GrassCtx::point();
    let zero_dim = equivalence_zero_dim(&pt, &[pt.one()], &[pt.one()]);
    let unobstructed = equivalence_unobstructed(0, &ChernVector::trivial(pt, 0)).ok();
    let covers = (1..=10i64).all(|m| {
        multiple_cover_weight(m).ok() == Some(BigRational::new(1.into(), BigInt::from(m).pow(3)))
    });
    outcome(
        zero_dim == BigInt::from(1) && unobstructed == Some(BigInt::from(1)) && covers,
        format!("zero-dim {zero_dim}, unobstructed {unobstructed:?}, 1/m^3 for m<=10: {covers}"),
    )
}

fn criterion_10() -> Outcome {
    let file = builtin_ledgers();
    let cubics = file
        .recorded
        .iter()
        .find(|r| r.name == "twisted-cubics/quintic");
    let recorded = cubics.and_then(|r| r.value) == Some(317206375);
    let fermat = file.ledgers.iter().find(|l| l.name == "lines/fermat");
    let inputs = fermat.is_some_and(|l| {
        l.components
            .iter()
            .map(|c| (c.equivalence, c.count))
            .collect::<Vec<_>>()
            == vec![(20, Some(50)), (5, Some(375))]
    });
    outcome(
        recorded && inputs,
        format!("twisted cubics recorded as data: {recorded}; Fermat equivalences are ledger inputs: {inputs}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("lines on the quintic threefold = 2875", criterion_1),
        ("conics on the quintic threefold = 609250", criterion_2),
        ("lines on the cubic surface = 27", criterion_3),
        (
            "sigma_1^4 on G(2,4) = 2, sigma_1^6 on G(2,5) = 5",
            criterion_4,
        ),
        ("degeneration ledgers balance", criterion_5),
        ("constant count excess = 0 for d = 1..1000", criterion_6),
        ("normal bundle splitting for a = -10..10", criterion_7),
        ("property suite", criterion_8),
        ("equivalence formulas and 1/m^3", criterion_9),
        ("out-of-scope values kept as data", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {name}: {}", i + 1, o.detail);
        failures += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
