//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed. Exits
//! nonzero when a criterion fails, except for those listed in `KNOWN_DEFECTS`,
//! whose stated target is arithmetically inconsistent with a sibling criterion.
//! Those still print FAIL.

use std::process::ExitCode;
use std::time::Instant;

use regraph::bounds::{conditional_bound, glueck_bound};
use regraph::verify::{self, CheckResult, VerifyOptions};
use regraph::{schmidt_interval, tau_delta, Error};

type Criterion = (&'static str, &'static str, Box<dyn Fn() -> Outcome>);

const KNOWN_DEFECTS: &[&str] = &["1b"];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn within(label: &str, value: f64, target: f64, tol: f64) -> Outcome {
    let err = (value - target).abs();
    outcome(
        err <= tol,
        format!("{label} = {value:.10} (target {target} ± {tol:e}, error {err:.3e})"),
    )
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let passed = parts.iter().all(|o| o.passed);
    let detail = parts
        .iter()
        .filter(|o| !passed || o.passed)
        .filter(|o| passed || !o.passed)
        .map(|o| o.detail.as_str())
        .collect::<Vec<_>>()
        .join("; ");
    outcome(passed, detail)
}

fn checks(results: Vec<CheckResult>) -> Outcome {
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.to_string())
        .collect();
    if failed.is_empty() {
        let names: Vec<_> = results
            .iter()
            .map(|r| format!("{} ({} pts, worst {:.1e})", r.name, r.points, r.worst))
            .collect();
        outcome(true, names.join(", "))
    } else {
        outcome(false, failed.join(" | "))
    }
}

fn timed_bound(n: u32, target: f64) -> Outcome {
    let start = Instant::now();
    let value = conditional_bound(n);
    let elapsed = start.elapsed().as_secs_f64();
    match value {
        Ok(v) => {
            let mut o = within(&format!("conditional_bound({n})"), v, target, 5e-4);
            if elapsed >= 1.0 {
                o.passed = false;
                o.detail.push_str(&format!(", took {elapsed:.2}s"));
            }
            o
        }
        Err(e) => outcome(false, format!("conditional_bound({n}): {e}")),
    }
}

fn reference_values() -> Outcome {
    all(vec![
        timed_bound(4, 6.2875),
        timed_bound(20, 37.8787),
        timed_bound(50, 97.7996),
    ])
}

fn gap_at_fifty() -> Outcome {
    match conditional_bound(50) {
        Ok(v) => within("2*50 - conditional_bound(50)", 100.0 - v, 0.2004, 5e-4),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn closed_forms() -> Outcome {
    let mut parts = Vec::new();
    for (n, exact) in [(2, (3.0 + 5f64.sqrt()) / 2.0), (3, 3.0 + 2f64.sqrt())] {
        parts.push(match conditional_bound(n) {
            Ok(v) => within(&format!("conditional_bound({n})"), v, exact, 1e-9),
            Err(e) => outcome(false, e.to_string()),
        });
    }
    all(parts)
}

fn constants() -> Outcome {
    let c = tau_delta();
    all(vec![
        within("tau", c.tau, 0.5693, 5e-5),
        within("delta", c.delta, 2.2564, 5e-5),
        within("2/tau", c.theta, 3.5128, 5e-4),
    ])
}

fn identities(opts: &VerifyOptions) -> Outcome {
    checks(vec![
        verify::check_total_identity(opts),
        verify::check_vartheta_equation(opts),
        verify::check_phi_equation(opts),
        verify::check_level_transport(opts),
        verify::check_quotients(opts),
    ])
}

fn structure(opts: &VerifyOptions) -> Outcome {
    checks(vec![
        verify::check_thresholds(opts),
        verify::check_small_n_pattern(opts),
    ])
}

fn schmidt() -> Outcome {
    let mut parts = Vec::new();
    for n in [4u32, 6, 8, 10] {
        for t in 1..=n / 2 {
            parts.push(match schmidt_interval(n, t) {
                Ok(i) => {
                    let mid = if i.hi.is_finite() {
                        0.5 * (i.lo + i.hi)
                    } else {
                        2.0 * i.lo
                    };
                    let s = regraph::GraphParams::new(n, mid)
                        .and_then(|p| regraph::lambda_spectrum(&p));
                    match s {
                        Ok(s) => {
                            let d = 1.0 / n as f64;
                            let ok =
                                s.exponent(t as usize + 1) > d && d > s.exponent(t as usize + 2);
                            outcome(ok, format!("n={n} T={t} ({:.6}, {:.6})", i.lo, i.hi))
                        }
                        Err(e) => outcome(false, e.to_string()),
                    }
                }
                Err(e) => outcome(false, format!("n={n} T={t}: {e}")),
            });
        }
        let over = n / 2 + 1;
        parts.push(match schmidt_interval(n, over) {
            Err(Error::NotRepresentable(_)) => {
                outcome(true, format!("n={n} T={over} NotRepresentable"))
            }
            other => outcome(false, format!("n={n} T={over}: {other:?}")),
        });
    }
    all(parts)
}

fn asymptotics(opts: &VerifyOptions) -> Outcome {
    let glueck = match glueck_bound(500) {
        Ok(g) => within("glueck_bound(500)", g, 999.0 - 2f64.ln(), 0.05),
        Err(e) => outcome(false, e.to_string()),
    };
    let suite = checks(vec![
        verify::check_decreasing_in_n(opts),
        verify::check_limit_in_n(opts),
        verify::check_large_lambda(opts),
        verify::check_mit(opts),
    ]);
    all(vec![suite, glueck])
}

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let criteria: Vec<Criterion> = vec![
        (
            "1a",
            "bound values at n = 4, 20, 50",
            Box::new(reference_values),
        ),
        (
            "1b",
            "gap 2*50 - bound(50) = 0.2004",
            Box::new(gap_at_fifty),
        ),
        ("2", "closed forms at n = 2, 3", Box::new(closed_forms)),
        ("3", "constants tau, delta, 2/tau", Box::new(constants)),
        ("4", "identity suite", Box::new(move || identities(&opts))),
        (
            "5",
            "threshold case split",
            Box::new(move || structure(&opts)),
        ),
        ("6", "Schmidt intervals", Box::new(schmidt)),
        ("7", "asymptotics", Box::new(move || asymptotics(&opts))),
    ];

    let start = Instant::now();
    let mut unexpected = 0;
    for (id, name, run) in &criteria {
        let t = Instant::now();
        let o = run();
        let known = KNOWN_DEFECTS.contains(id);
        let tag = match (o.passed, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known defect)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!(
            "criterion {id:<3} {tag:<20} {name} [{:.2}s] {}",
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("criterion 8   EXCLUDED             realizability of the spectra by actual vectors is not computable");
    let total = start.elapsed().as_secs_f64();
    let budget = total < 60.0;
    println!(
        "runtime     {:<20} {total:.2}s (budget 60s)",
        if budget { "PASS" } else { "FAIL" }
    );
    if !budget {
        unexpected += 1;
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed");
        ExitCode::FAILURE
    }
}
