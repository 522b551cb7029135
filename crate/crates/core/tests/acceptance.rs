//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pathpairs::formulas::{resolve_mrs_reading, MrsReading};
use pathpairs::verify::{
    check_avg, check_barrier, check_bijection, check_diag, check_f_residual, check_fk, check_fnk,
    check_legendre, check_mrs, check_n1_twice, check_nkr_oracle, check_pnk, check_same_start,
    check_series, check_sum_identities, check_theorem1, check_totals, check_wz,
    standard_probabilities, BarrierLimits, CheckReport, Counterexample, Status,
};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Vec<CheckReport>,
}

/// Every non-accepted reading of the different-endpoint formula must come
/// with serialized counterexamples instead of a silent value.
fn reading_report() -> CheckReport {
    let mut report = CheckReport {
        check_id: "mrs-reading-report".into(),
        status: Status::Pass,
        instances_checked: 0,
        first_failure: None,
    };
    let mut fail = |args: String, detail: String| {
        if report.first_failure.is_none() {
            report.first_failure = Some(Counterexample {
                args,
                left: "report".into(),
                right: detail,
            });
        }
    };
    match resolve_mrs_reading(8) {
        Ok(r) => {
            if r.accepted != Some(MrsReading::RESOLVED) {
                fail("accepted reading".into(), format!("{:?}", r.accepted));
            }
            for outcome in &r.outcomes {
                report.instances_checked += outcome.instances as u64;
                let rejected = outcome.reading != MrsReading::RESOLVED;
                if rejected && (outcome.mismatches == 0 || outcome.examples.is_empty()) {
                    fail(
                        format!("{:?}", outcome.reading),
                        "no recorded discrepancy".into(),
                    );
                }
            }
            match serde_json::to_value(&r) {
                Ok(v) if v["outcomes"].as_array().map(Vec::len) == Some(MrsReading::ALL.len()) => {}
                other => fail("serialization".into(), format!("{other:?}")),
            }
        }
        Err(e) => fail("resolution".into(), e.to_string()),
    }
    let failed = report.first_failure.is_some();
    report.status = if failed { Status::Fail } else { Status::Pass };
    report
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "same-endpoint formulas agree with each other and with enumeration, n <= 9",
            budget: Some(Duration::from_secs(60)),
            run: || vec![check_theorem1(9), check_nkr_oracle(9)],
        },
        Criterion {
            id: 2,
            title: "enumerated totals equal C(n,r)^2, n <= 9",
            budget: None,
            run: || vec![check_totals(9)],
        },
        Criterion {
            id: 3,
            title: "N_1 = 2 N_0 for n <= 10 and the bijection on every rectangle with r + s <= 9",
            budget: Some(Duration::from_secs(120)),
            run: || vec![check_n1_twice(10), check_bijection(9)],
        },
        Criterion {
            id: 4,
            title: "free-walk counts match enumeration for n <= 8; 4^n identity for n <= 40",
            budget: None,
            run: || vec![check_fnk(8), check_sum_identities(40, 8)],
        },
        Criterion {
            id: 5,
            title: "exact mean crossings for n <= 8; within 2% of the asymptotic at n = 1000",
            budget: None,
            run: || vec![check_avg(8, 1000)],
        },
        Criterion {
            id: 6,
            title: "p(n,k) matches enumeration for n <= 8; sums, telescoping and ratio identities",
            budget: None,
            run: || vec![check_pnk(8), check_wz(40, 60, 40)],
        },
        Criterion {
            id: 7,
            title: "different-endpoint counts match enumeration for n <= 8 with discrepancy reports",
            budget: None,
            run: || vec![check_mrs(8), reading_report()],
        },
        Criterion {
            id: 8,
            title: "generating-function routes to degree 12, F_k to degree 20, diagonal sums for n <= 12",
            budget: None,
            run: || {
                vec![
                    check_series(12),
                    check_legendre(12),
                    check_f_residual(12),
                    check_fk(20),
                    check_diag(12),
                ]
            },
        },
        Criterion {
            id: 9,
            title: "barrier walks: closed form, single-walker equivalence, u + l - 1, same start",
            budget: None,
            run: || {
                let limits = BarrierLimits {
                    grid: 4,
                    level_sum: 10,
                    sequences: 20,
                    seed: 0x5EED,
                };
                let probs = standard_probabilities();
                vec![check_barrier(&limits, &probs), check_same_start(4, &probs)]
            },
        },
    ]
}

fn main() -> ExitCode {
    let mut all_passed = true;
    for criterion in criteria() {
        let start = Instant::now();
        let reports = (criterion.run)();
        let elapsed = start.elapsed();
        let within_budget = criterion.budget.is_none_or(|b| elapsed <= b);
        let passed = within_budget && reports.iter().all(CheckReport::passed);
        all_passed &= passed;
        println!(
            "criterion {}: {} - {} ({:.1}s)",
            criterion.id,
            if passed { "PASS" } else { "FAIL" },
            criterion.title,
            elapsed.as_secs_f64()
        );
        for report in &reports {
            println!("    {report}");
        }
        if !within_budget {
            println!(
                "    runtime exceeded {:?}",
                criterion.budget.unwrap_or_default()
            );
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
