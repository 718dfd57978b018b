//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Tolerances and budgets are pinned here rather than taken from the
//! library defaults, so a change of default cannot silently loosen a check.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclic_aut::classifier::{classify_belyi, classify_fermat, presentation_for};
use cyclic_aut::grouptheory::{
    abelianization, coset_enumerate, fingerprint_permutations, PermutationSet, Presentation, GROUP96_GENERATORS,
};
use cyclic_aut::numtheory::gcd;
use cyclic_aut::verify::{cross_check, enumerate_classes, standard_actions, verify_action};
use cyclic_aut::Error;

const ACTION_TOL: f64 = 1e-8;
const ACTION_SAMPLES: usize = 100;
const ACTION_SEEDS: [u64; 3] = [0, 1, 2];
const MAX_COSETS: usize = 1_000_000;
const MAX_SIZE: usize = 10_000_000;
const INFINITE_BUDGET: usize = 100_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn table_rows() -> Outcome {
    let start = Instant::now();
    let rows: [(u64, [u64; 3], u64, u64, &str); 11] = [
        (5, [1, 1, 3], 2, 10, "Z10"),
        (6, [1, 1, 4], 2, 24, "(central Z2).D12"),
        (15, [1, 4, 10], 5, 30, "Z15 x| Z2 (twist 4)"),
        (16, [1, 6, 9], 7, 64, "(Z16 x| Z2 (twist 9)).Z2"),
        (8, [1, 2, 5], 3, 96, "(Z4+Z4) x| S3"),
        (13, [1, 3, 9], 6, 39, "Z13 x| Z3 (twist 3)"),
        (7, [1, 2, 4], 3, 168, "PSL(2,7)"),
        (12, [1, 3, 8], 3, 48, "(central Z4).A4"),
        (8, [1, 3, 4], 2, 48, "GL(2,3)"),
        (12, [1, 4, 7], 4, 72, "(central Z3).S4"),
        (24, [1, 4, 19], 10, 144, "(central Z6).S4"),
    ];
    for (n, [a, b, c], genus, order, tag) in rows {
        let r = classify_belyi(n, a, b, c).map_err(|e| format!("({n}; {a},{b},{c}): {e}"))?;
        let got = (r.genus, r.order(), r.group.structure.to_string());
        ensure(got == (genus, order, tag.to_string()), || format!("({n}; {a},{b},{c}) gave {got:?}"))?;
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("11 instances in {t:.2?}"))
}

fn sweep() -> Outcome {
    let start = Instant::now();
    let report = cross_check(4, 30).map_err(|e| e.to_string())?;
    for c in &report.checks {
        ensure(c.pass, || format!("{} failed: {}", c.name, c.witness.clone().unwrap_or_default()))?;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{} checks over n in [4,30] in {t:.2?}", report.checks.len()))
}

fn class_counts() -> Outcome {
    let five = enumerate_classes(5).map_err(|e| e.to_string())?.classes.len();
    let seven = enumerate_classes(7).map_err(|e| e.to_string())?.classes.len();
    ensure((five, seven) == (1, 2), || format!("n=5: {five} classes, n=7: {seven} classes"))?;
    Ok("n=5: 1 class, n=7: 2 classes".into())
}

fn group_engine() -> Outcome {
    let start = Instant::now();
    let order = |p: &Presentation| coset_enumerate(p, MAX_COSETS).map_err(|e| format!("{p}: {e}"));

    let kulkarni = Presentation::parse("<u,v | u^4, v^8, (u*v)^2, u^2*v*u^2*v^3>").map_err(|e| e.to_string())?;
    let k = order(&kulkarni)?;
    ensure(k == 32, || format!("Kulkarni 2n=8: {k}"))?;

    let fermat = classify_fermat(8, 4).map_err(|e| e.to_string())?;
    let fp = presentation_for(&fermat).ok_or("no presentation for Fermat (8,4)")?;
    let f = order(&fp)?;
    ensure(f == 64, || format!("Fermat (8,4): {f}"))?;

    for n in 2..=30u64 {
        let d = Presentation::parse(&format!("<u,v | u^2, v^{n}, (u*v)^2>")).map_err(|e| e.to_string())?;
        let got = order(&d)?;
        ensure(got == 2 * n, || format!("dihedral n={n}: {got}"))?;
    }

    for d in 2..=20u64 {
        for n in 2..=20u64 {
            let ab = abelianization(&Presentation::triangle(d, n, n));
            let expect: Vec<u64> = [gcd(d, n), n].into_iter().filter(|&v| v > 1).collect();
            ensure(ab.free_rank == 0 && ab.invariants == expect, || format!("Δ({d},{n},{n}): {ab}"))?;
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("Kulkarni 32, Fermat 64, dihedral n<=30, 361 abelianizations in {t:.2?}"))
}

fn group96() -> Outcome {
    let perms = PermutationSet::parse(GROUP96_GENERATORS, Some(12)).map_err(|e| e.to_string())?;
    let fp = fingerprint_permutations(&perms, MAX_SIZE).map_err(|e| e.to_string())?;
    ensure(fp.order == 96 && !fp.is_abelian, || format!("{fp}"))?;
    Ok(format!("{fp}"))
}

fn fermat_instances() -> Outcome {
    let cases = [(4, 4, 96), (5, 4, 20), (8, 4, 64), (6, 2, 24), (7, 2, 14), (6, 3, 36), (4, 3, 48)];
    for (n, d, order) in cases {
        let r = classify_fermat(n, d).map_err(|e| format!("({n},{d}): {e}"))?;
        ensure(r.order() == order, || format!("({n},{d}): {}", r.order()))?;
    }
    let r = classify_fermat(7, 2).map_err(|e| e.to_string())?;
    ensure(r.group.structure.to_string() == "Z14", || format!("(7,2) is {}", r.group.structure))?;
    Ok("7 instances".into())
}

fn actions() -> Outcome {
    let start = Instant::now();
    let actions = standard_actions().map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for a in &actions {
        for seed in ACTION_SEEDS {
            let r = verify_action(a, ACTION_SAMPLES, seed).map_err(|e| e.to_string())?;
            worst = worst.max(r.max_residual);
            let failed: Vec<&str> = r.orders.iter().chain(&r.relations).filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            ensure(r.max_residual <= ACTION_TOL && failed.is_empty(), || {
                format!("{} seed {seed}: residual {:e}, failed {failed:?}", a.name, r.max_residual)
            })?;
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{} maps x {} seeds, worst residual {worst:.1e}, {t:.2?}", actions.len(), ACTION_SEEDS.len()))
}

fn budget() -> Outcome {
    match coset_enumerate(&Presentation::triangle(2, 3, 7), INFINITE_BUDGET) {
        Err(Error::BudgetExceeded { .. }) => Ok("Δ(2,3,7) exceeds 1e5 cosets".into()),
        other => Err(format!("expected a budget error, got {other:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table rows", table_rows),
        ("exhaustive sweep", sweep),
        ("Lefschetz class counts", class_counts),
        ("group engine", group_engine),
        ("permutation group of order 96", group96),
        ("Fermat instances", fermat_instances),
        ("numerical actions", actions),
        ("coset budget", budget),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
