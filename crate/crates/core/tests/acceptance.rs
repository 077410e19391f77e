//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::cell::RefCell;
use std::process::ExitCode;
use std::time::Instant;

use pentforge::catalog::Catalog;
use pentforge::constructors::{bose_pent3, degenerate_pent, gdd_compose, pbd_pent3, sts_bose, td3};
use pentforge::search::SearchBudget;
use pentforge::{
    build_deficiency, complete_from_deficiency, count_olps, girth, invariant_violations, max_olps_bound, moore_pent,
    partition_p, pent2_count, pent2_enumerate, two_olp_excluded, verify_pentagonal, Completion, Design, Graph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

thread_local! {
    /// Every design built or loaded during the run, for the universal post-hook.
    static SEEN: RefCell<Vec<(String, Design)>> = const { RefCell::new(Vec::new()) };
}

fn seen(label: impl Into<String>, d: &Design) {
    SEEN.with(|s| s.borrow_mut().push((label.into(), d.clone())));
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn pentagonal_with(d: &Design, label: &str, v: usize, b: usize, r: usize) -> Check {
    let rep = verify_pentagonal(d);
    ensure(rep.pentagonal, || format!("{label} is not pentagonal"))?;
    ensure((d.v(), d.b(), rep.r) == (v, b, Some(r)), || {
        format!("{label}: expected v={v} b={b} r={r}, got v={} b={} r={:?}", d.v(), d.b(), rep.r)
    })
}

fn catalog_reproduction() -> Check {
    let cat = Catalog::bundled();
    let report = cat.verify_all();
    ensure(report.entries.len() == 23, || format!("{} entries, expected 23", report.entries.len()))?;
    if let Some(bad) = report.failed().next() {
        return Err(format!("{}: {}", bad.id, bad.failures.join("; ")));
    }
    for e in cat.entries() {
        seen(&e.id, &cat.load(&e.id).map_err(|e| e.to_string())?);
    }
    let d = cat.load("pent4_60").map_err(|e| e.to_string())?;
    ensure((d.v(), d.b()) == (185, 2775), || format!("pent4_60 has v={} b={}", d.v(), d.b()))?;
    let d = cat.load("pent3_24").map_err(|e| e.to_string())?;
    ensure(girth(&build_deficiency(&d)) == Some(7), || "pent3_24 deficiency girth is not 7".into())?;
    let d = cat.load("pent3_9_olp1").map_err(|e| e.to_string())?;
    let olps = count_olps(&d);
    let pairs: Vec<_> = olps.lines(&d).collect();
    ensure(pairs.len() == 1, || format!("pent3_9_olp1 has {} OLPs", pairs.len()))?;
    ensure(pairs[0].0 == &[0, 1, 2] && pairs[0].1 == &[3, 4, 5], || format!("pent3_9_olp1 OLP is {:?}", pairs[0]))
}

fn bose_pipeline() -> Check {
    let sts9 = sts_bose(9).map_err(|e| e.to_string())?;
    let d = bose_pent3(&sts9, 0).map_err(|e| e.to_string())?;
    seen("bose sts9", &d);
    pentagonal_with(&d, "Bose STS(9)", 24, 80, 10)?;
    let bound = max_olps_bound(10).map_err(|e| e.to_string())?;
    let q = count_olps(&d).q();
    ensure(q == 4 && bound == 4, || format!("q = {q}, bound = {bound}, both should be 4"))?;

    let fano = Catalog::bundled().load_sts("sts7").map_err(|e| e.to_string())?;
    let d = bose_pent3(&fano, 0).map_err(|e| e.to_string())?;
    seen("bose sts7", &d);
    pentagonal_with(&d, "Bose STS(7)", 18, 42, 7)?;
    let olps = count_olps(&d);
    ensure(olps.q() == 3, || format!("Bose STS(7) has q = {}", olps.q()))?;
    ensure(olps.partitions_points(&d), || "OLPs of Bose STS(7) do not partition the points".into())
}

fn pbd_pipeline() -> Check {
    let pbd = Catalog::bundled().load_pbd("pbd11").map_err(|e| e.to_string())?;
    let d = pbd_pent3(&pbd, 10).map_err(|e| e.to_string())?;
    seen("pbd11", &d);
    pentagonal_with(&d, "PBD(11)", 30, 130, 13)
}

fn composition() -> Check {
    let one = degenerate_pent(3).map_err(|e| e.to_string())?;
    let parts: Vec<_> = (0..3).map(|g| (g, one.clone())).collect();
    let d = gdd_compose(&td3(6).map_err(|e| e.to_string())?, &parts).map_err(|e| e.to_string())?;
    seen("td3(6) + 3 x PENT(3,1)", &d);
    pentagonal_with(&d, "TD(3,6) composition", 18, 42, 7)?;
    ensure(count_olps(&d).q() == 3, || format!("TD(3,6) composition has q = {}", count_olps(&d).q()))?;

    let desargues = moore_pent(&Graph::petersen(), 3).map_err(|e| e.to_string())?;
    let parts: Vec<_> = (0..3).map(|g| (g, desargues.clone())).collect();
    let d = gdd_compose(&td3(10).map_err(|e| e.to_string())?, &parts).map_err(|e| e.to_string())?;
    seen("td3(10) + 3 x PENT(3,3)", &d);
    pentagonal_with(&d, "TD(3,10) composition", 30, 130, 13)?;
    ensure(count_olps(&d).q() == 0, || format!("TD(3,10) composition has q = {}", count_olps(&d).q()))?;

    let cat = Catalog::bundled();
    let load = |id: &str| cat.load(id).map_err(|e| e.to_string());
    let table: Vec<(usize, Vec<Design>)> = vec![
        (6, vec![one.clone()]),
        (10, vec![desargues.clone()]),
        (22, vec![load("pent3_9_olp1")?, load("pent3_9_olp0")?]),
        (24, vec![load("pent3_10")?, load("pent3_10_olp1")?, bose_pent3(&sts_bose(9).unwrap(), 2).unwrap()]),
        (28, vec![load("pent3_12")?, load("pent3_12_olp1")?]),
    ];
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, choices) = &table[rng.gen_range(0..table.len())];
        let mut parts = Vec::new();
        let mut q_sum = 0;
        for group in 0..3 {
            let base = &choices[rng.gen_range(0..choices.len())];
            let mut perm: Vec<usize> = (0..base.v()).collect();
            perm.shuffle(&mut rng);
            let part = base.relabel(&perm).map_err(|e| e.to_string())?;
            q_sum += count_olps(&part).q();
            parts.push((group, part));
        }
        let d = gdd_compose(&td3(*g).unwrap(), &parts).map_err(|e| format!("seed {seed}: {e}"))?;
        seen(format!("random composition {seed}"), &d);
        let q = count_olps(&d).q();
        ensure(q == q_sum, || format!("seed {seed}: q = {q}, parts sum to {q_sum}"))?;
    }
    Ok(())
}

fn brute_partitions(n: usize, max: usize, min: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    (min..=max.min(n)).map(|p| brute_partitions(n - p, p, min)).sum()
}

fn enumeration() -> Check {
    for r in 2..=20 {
        let all = pent2_enumerate(r);
        ensure(pent2_count(r) == all.len() as u128, || format!("r = {r}: formula {} vs {}", pent2_count(r), all.len()))?;
        for (ct, d) in &all {
            seen(format!("pent2 r={r} {ct}"), d);
            ensure(verify_pentagonal(d).pentagonal, || format!("PENT(2,{r}) of type {ct} fails verification"))?;
        }
    }
    for n in 0..=40usize {
        let want = brute_partitions(n, n, 1);
        ensure(partition_p(n as i64) == want, || format!("p({n}) = {} but enumeration gives {want}", partition_p(n as i64)))?;
    }
    Ok(())
}

fn nonexistence_formula() -> Check {
    let mut excluded = Vec::new();
    for r in (7..=30).filter(|r| r % 3 != 2) {
        if two_olp_excluded(r).map_err(|e| format!("r = {r}: {e}"))? {
            excluded.push(r);
        }
    }
    ensure(excluded == [7, 9, 10, 12], || format!("excluded set is {excluded:?}"))
}

fn moore_pathway() -> Check {
    let g = Graph::petersen();
    let d = moore_pent(&g, 3).map_err(|e| e.to_string())?;
    seen("Desargues", &d);
    pentagonal_with(&d, "Desargues", 10, 10, 3)?;
    ensure(build_deficiency(&d) == g, || "deficiency graph differs from the Petersen graph".into())
}

fn completion_search() -> Check {
    let original = Catalog::bundled().load("pent3_9_olp1").map_err(|e| e.to_string())?;
    let g = build_deficiency(&original);
    match complete_from_deficiency(&g, 3, 9, &SearchBudget::default()).map_err(|e| e.to_string())? {
        Completion::Found(d) => {
            seen("completion of pent3_9_olp1", &d);
            pentagonal_with(&d, "completion", 22, 66, 9)?;
            ensure(build_deficiency(&d) == g, || "completed design has a different deficiency graph".into())
        }
        Completion::Unsatisfiable => Err("search reported no completion".into()),
    }
}

fn property_suite() -> Check {
    let all = SEEN.with(|s| s.take());
    ensure(!all.is_empty(), || "no designs were recorded".into())?;
    let mut failures = Vec::new();
    for (label, d) in &all {
        for v in invariant_violations(d) {
            failures.push(format!("{label}: {v}"));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    println!("    checked {} designs", all.len());
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("catalog reproduction", catalog_reproduction),
        ("Bose pipeline", bose_pipeline),
        ("PBD pipeline", pbd_pipeline),
        ("composition", composition),
        ("enumeration", enumeration),
        ("two-OLP nonexistence formula", nonexistence_formula),
        ("Moore pathway", moore_pathway),
        ("completion search", completion_search),
        ("universal property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
