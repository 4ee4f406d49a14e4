//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use mexlab::census::{self, full_scan, three_way_census};
use mexlab::qseries;
use mexlab::verify::{registry, verify_identity, IdentityReport, Status, VerifyParams};

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);
/// (r, j, row counts, expected members per column).
type TableCase = (u32, u32, (u64, u64, u64), [&'static [&'static str]; 3]);

fn params(max_n: u32, r: &[u32]) -> VerifyParams {
    VerifyParams {
        max_n,
        r: (!r.is_empty()).then(|| r.to_vec()),
        ..VerifyParams::default()
    }
}

fn run(id: &str, p: &VerifyParams) -> Result<IdentityReport, String> {
    verify_identity(id, p).map_err(|e| format!("{id}: {e}"))
}

fn must_pass(id: &str, p: VerifyParams) -> Result<u64, String> {
    let report = run(id, &p)?;
    if report.passed() {
        Ok(report.checks)
    } else {
        Err(format!("{id} failed: {}", report.to_json()))
    }
}

fn within(started: Instant, budget: Duration, detail: String) -> Check {
    let took = started.elapsed();
    if took <= budget {
        Ok(format!("{detail}; {took:.2?} of {budget:?}"))
    } else {
        Err(format!("{detail}; took {took:.2?}, budget {budget:?}"))
    }
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn ac1() -> Check {
    let t = Instant::now();
    let cases: [TableCase; 2] = [
        (
            2,
            2,
            (3, 3, 3),
            [
                &["5+2", "4+3", "3+3+1"],
                &["4+2+1", "2+2+1+1+1", "3+2+2"],
                &["3+2+2", "2+2+2+1", "2+2+1+1+1"],
            ],
        ),
        (
            3,
            1,
            (5, 5, 5),
            [
                &["7", "6+1", "5+2", "5+1+1", "4+1+1+1"],
                &["6+1", "4+3", "3+2+2", "3+2+1+1", "3+1+1+1+1"],
                &["4+1+1+1", "3+1+1+1+1", "2+2+1+1+1", "2+1+1+1+1+1", "1+1+1+1+1+1+1"],
            ],
        ),
    ];
    for (r, j, counts, columns) in cases {
        let c = three_way_census(7, r).map_err(|e| e.to_string())?;
        if c.row(j) != counts {
            return Err(format!("r = {r}, j = {j}: counts {:?}", c.row(j)));
        }
        for (stat, expected) in c.statistics().iter().zip(columns) {
            let got: BTreeSet<String> = census::members(7, stat, &[j], usize::MAX).iter().map(|p| p.to_string()).collect();
            if got != set(expected) {
                return Err(format!("r = {r}, j = {j}, {stat}: {got:?}"));
            }
        }
    }
    within(t, Duration::from_secs(1), "(3,3,3) and (5,5,5) with all listed partitions".into())
}

fn ac2() -> Check {
    let t = Instant::now();
    let a = must_pass("euler", params(50, &[]))?;
    let b = must_pass("glaisher", params(50, &[2, 3, 4, 5]))?;
    let c = must_pass("franklin", params(40, &[2, 3, 4]))?;
    within(t, Duration::from_secs(60), format!("{} checks", a + b + c))
}

fn ac3() -> Check {
    let t = Instant::now();
    let n = must_pass("thm-3way", params(50, &[2, 3, 4, 5]))?;
    within(t, Duration::from_secs(120), format!("{n} checks"))
}

fn ac4() -> Check {
    let t = Instant::now();
    let n = must_pass("lemma-refine", params(30, &[1, 2, 3]))?;
    within(t, Duration::from_secs(30), format!("{n} cells"))
}

fn ac5() -> Check {
    let t = Instant::now();
    let n = must_pass("gfn-sigma-rc-mex", params(60, &[1, 2, 3, 4, 5]))?;
    let rhs = qseries::gf_sigma_rc_mex_rhs(1, 300).map_err(|e| e.to_string())?;
    let distinct = qseries::distinct_parts_gf(300);
    if rhs != &distinct * &distinct {
        return Err("r = 1 series differs from the squared distinct-parts series at N = 300".into());
    }
    within(t, Duration::from_secs(120), format!("{n} checks, r = 1 collapse to N = 300"))
}

fn ac6() -> Check {
    let a = must_pass("cor-two-color", params(40, &[1, 2, 3, 4]))?;
    let b = must_pass("sigma-mex-d2", params(60, &[]))?;
    Ok(format!("{} checks", a + b))
}

fn ac7() -> Check {
    let n = must_pass("prop-alpha", params(40, &[]))?;
    Ok(format!("{n} checks"))
}

fn ac8() -> Check {
    let a = must_pass("interm1", params(30, &[1, 2, 3]))?;
    let b = must_pass("diff-w", params(30, &[1, 2, 3]))?;
    Ok(format!("{} checks", a + b))
}

fn ac9() -> Check {
    let a = must_pass(
        "fk-sum",
        VerifyParams {
            j: Some((0..=5).collect()),
            ..params(30, &[2, 3])
        },
    )?;
    let b = must_pass(
        "inner-sum-collapse",
        VerifyParams {
            order: 60,
            ..params(0, &[1, 2, 3, 4])
        },
    )?;
    Ok(format!("{} checks", a + b))
}

fn ac10() -> Check {
    let strict = must_pass("thm-chain-maex", params(40, &[2]))?;
    let report = run("thm-chain-maex", &params(40, &[3]))?;
    if report.variants.len() != 4 {
        return Err(format!("r = 3 reported {} readings", report.variants.len()));
    }
    let outcomes: Vec<String> = report
        .variants
        .iter()
        .map(|v| {
            let s = if v.status == Status::Pass { "pass" } else { "fail" };
            match &v.witness {
                Some(w) => format!("{} {s} at n = {}", v.name, w.n),
                None => format!("{} {s}", v.name),
            }
        })
        .collect();
    let detail = format!("r = 2 strict ({strict} checks); r = 3: {}", outcomes.join(", "));
    if report.passed() {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn ac11() -> Check {
    must_pass(
        "parity-sigma-mex",
        VerifyParams {
            order: 200,
            ..params(0, &[])
        },
    )?;
    let series = qseries::gf_sigma_mex(200);
    let mut expected = BTreeSet::new();
    for j in 0i64.. {
        let lo = j * (3 * j - 1);
        if lo > 200 {
            break;
        }
        expected.insert(lo);
        expected.insert(j * (3 * j + 1));
    }
    for (n, c) in series.coeffs().iter().enumerate() {
        let odd = c % 2u32 != num_bigint::BigInt::from(0);
        if odd != expected.contains(&(n as i64)) {
            return Err(format!("parity mismatch at n = {n}"));
        }
    }
    Ok("odd exactly at j(3j±1) for n ≤ 200".into())
}

fn ac12() -> Check {
    let t = Instant::now();
    let scan = full_scan(60);
    let scan_time = t.elapsed();
    if scan.partitions != 966_467 {
        return Err(format!("scanned {} partitions", scan.partitions));
    }
    if scan_time > Duration::from_secs(10) {
        return Err(format!("scan of 60 took {scan_time:.2?}"));
    }
    let series_params = VerifyParams {
        order: 300,
        ..params(0, &[])
    };
    let t = Instant::now();
    let mut first = Vec::new();
    for id in registry().iter().filter(|e| e.uses_order && !e.scans) {
        let report = run(id.id, &series_params)?;
        if !report.passed() {
            return Err(format!("{} failed at N = 300", id.id));
        }
        first.push(report.to_json());
    }
    let series_time = t.elapsed();
    if series_time > Duration::from_secs(10) {
        return Err(format!("series suite took {series_time:.2?}"));
    }
    for (id, json) in registry().iter().filter(|e| e.uses_order && !e.scans).zip(&first) {
        if &run(id.id, &series_params)?.to_json() != json {
            return Err(format!("{} report differs between runs", id.id));
        }
    }
    let again = serde_json::to_string(&full_scan(60)).unwrap();
    if again != serde_json::to_string(&scan).unwrap() {
        return Err("scan summary differs between runs".into());
    }
    Ok(format!(
        "scan of 60 in {scan_time:.2?}, series suite at N = 300 in {series_time:.2?}, reruns identical"
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("AC1", "illustration tables at n = 7", ac1),
        ("AC2", "Euler, Glaisher, Franklin", ac2),
        ("AC3", "three-way theorem", ac3),
        ("AC4", "refinement lemma", ac4),
        ("AC5", "sigma rc-mex generating function", ac5),
        ("AC6", "two-colored corollary", ac6),
        ("AC7", "even parts and parts above mex", ac7),
        ("AC8", "bivariate intermediate and w-derivative", ac8),
        ("AC9", "F_k sum and inner-sum collapse", ac9),
        ("AC10", "chain maex theorem", ac10),
        ("AC11", "parity of sigma mex", ac11),
        ("AC12", "determinism and performance", ac12),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id} {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
