//! Acceptance criteria 1–12. Each criterion prints one PASS/FAIL line; the
//! individual checks behind a failure are listed underneath it.

use std::time::Instant;

use cheeger_core::verify::suites::{self, Check, LadderEntry};

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<Check>,
    secs: f64,
}

impl Criterion {
    fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

fn run(id: u32, title: &'static str, f: impl FnOnce() -> Vec<Check>) -> Criterion {
    let t = Instant::now();
    let checks = f();
    Criterion { id, title, checks, secs: t.elapsed().as_secs_f64() }
}

fn report(all: &[Criterion]) {
    for c in all {
        let n = c.checks.len();
        let ok = c.checks.iter().filter(|x| x.pass).count();
        println!(
            "criterion {:>2} {}: {} ({ok}/{n} checks, {:.2}s)",
            c.id,
            c.title,
            if c.pass() { "PASS" } else { "FAIL" },
            c.secs
        );
        for x in c.checks.iter().filter(|x| !x.pass) {
            println!("    failed: {}: {}", x.name, x.detail);
        }
    }
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let t = Instant::now();
    let ladder: Vec<LadderEntry> = suites::ladder().expect("ladder strips solve");
    let ladder_secs = t.elapsed().as_secs_f64();

    let mut all = vec![
        run(1, "disk h = 2/R", suites::disk_checks),
        run(2, "unit square h = 2 + √π", suites::square_checks),
        run(3, "straight strip closed form", suites::straight_oracle_checks),
    ];
    let mut c4 = run(4, "lower and upper bounds on the ladder", || suites::bounds_checks(&ladder));
    c4.secs += ladder_secs;
    all.push(c4);
    all.push(run(5, "asymptotic expansion on the ladder", || suites::asymptotic_checks(&ladder)));
    all.push(run(6, "strip area and perimeter", || suites::strip_measure_checks(&ladder)));
    all.push(run(7, "inner Cheeger formula ratio", || suites::steiner_ratio_checks(&ladder)));
    all.push(run(8, "Pinocchio", suites::pinocchio_checks));
    all.push(run(9, "two balls", suites::two_balls_checks));
    all.push(run(10, "Steiner identities and Minkowski content", || {
        let mut v = suites::random_steiner_checks(50, 0x5bd1_e995);
        v.extend(suites::minkowski_checks());
        v
    }));
    all.push(run(11, "scan and raster oracles", || {
        let mut v = suites::scan_checks(&ladder);
        v.extend(suites::raster_checks());
        v
    }));
    all.push(run(12, "scaling, monotonicity, continuity", || {
        let mut v = suites::scaling_checks();
        v.extend(suites::monotonicity_checks());
        v.extend(suites::continuity_checks());
        v
    }));

    report(&all);
    let total = start.elapsed().as_secs_f64();
    println!("total runtime {total:.2}s");

    assert!(all[0].secs < 1.0, "criterion 1 runtime {:.2}s", all[0].secs);
    assert!(all[3].secs < 30.0, "criterion 4 runtime {:.2}s", all[3].secs);
    assert!(total < 120.0, "total runtime {total:.2}s");
    let failed: Vec<u32> = all.iter().filter(|c| !c.pass()).map(|c| c.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
