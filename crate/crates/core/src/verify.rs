//! The invariant suite behind `regraph verify`.
//!
//! Each check evaluates one identity or inequality on a grid and reports the
//! worst value it saw against its limit. Grid points are evaluated through
//! [`crate::grid::map`], so the suite runs in parallel when the `parallel`
//! feature is enabled.

use std::fmt;

use crate::bounds::{conditional_bound, glueck_bound, mit_check, tau_delta, unconditional_bound};
use crate::error::{Error, Result};
use crate::grid::{linspace, map};
use crate::regular_graph::{
    dual_spectrum, lambda_spectrum, last_minimum, log_f_aux, phi, psi_profile, to_dual, vartheta,
    GraphParams, LambdaSpectrum,
};
use crate::thresholds::{chi, classify, schmidt_interval, sign_at, Classification};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Shrink every grid roughly tenfold.
    pub quick: bool,
    /// Added to `last_minimum` before the `f_n` level identity is checked.
    /// Zero in normal use; nonzero values exist to prove the check can fail.
    pub last_minimum_perturbation: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            quick: false,
            last_minimum_perturbation: 0.0,
        }
    }
}

impl VerifyOptions {
    pub fn quick() -> Self {
        VerifyOptions {
            quick: true,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub points: usize,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    pub limit: f64,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<24} points={:<6} worst={:<12.3e} limit={:.1e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.points,
            self.worst,
            self.limit
        )?;
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}

/// Outcome of one grid point: the measured value, or a reason it failed outright.
type Sample = std::result::Result<f64, String>;

/// Folds samples into a result; passes when no sample errored and every value
/// is `<= limit`.
fn summarize(name: &'static str, limit: f64, samples: Vec<Sample>) -> CheckResult {
    let points = samples.len();
    let mut worst = 0.0f64;
    let mut detail = String::new();
    let mut passed = true;
    for s in samples {
        match s {
            Ok(v) => {
                if v.is_nan() || v > limit {
                    passed = false;
                }
                if v.is_nan() || v > worst {
                    worst = v;
                }
            }
            Err(e) => {
                if passed || detail.is_empty() {
                    detail = e;
                }
                passed = false;
            }
        }
    }
    CheckResult {
        name,
        passed,
        points,
        worst,
        limit,
        detail,
    }
}

fn err_string(e: Error) -> String {
    format!("{}: {e}", e.token())
}

fn spectrum(n: u32, lambda: f64) -> std::result::Result<LambdaSpectrum, String> {
    GraphParams::new(n, lambda)
        .and_then(|p| lambda_spectrum(&p))
        .map_err(err_string)
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// The `(n, λ)` grid `n ∈ 1..=30`, `λ = (1 + k/10)/n`, `k = 0..=50`.
fn lambda_grid(opts: &VerifyOptions) -> Vec<(u32, f64)> {
    let k_step = if opts.quick { 10 } else { 1 };
    (1..=30u32)
        .flat_map(|n| {
            (0..=50)
                .step_by(k_step)
                .map(move |k| (n, (1.0 + k as f64 / 10.0) / n as f64))
        })
        .collect()
}

/// `w ∈ [n, 100n]` for `n ∈ 1..=30`, plus points just above `w = n`.
fn w_grid(opts: &VerifyOptions) -> Vec<(u32, f64)> {
    let steps = if opts.quick { 6 } else { 51 };
    (1..=30u32)
        .flat_map(|n| {
            let nf = n as f64;
            linspace(nf, 100.0 * nf, steps)
                .into_iter()
                .chain([nf + 2e-6, nf + 1e-3])
                .map(move |w| (n, w))
        })
        .collect()
}

pub fn check_total_identity(opts: &VerifyOptions) -> CheckResult {
    let eps = opts.last_minimum_perturbation;
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let params = GraphParams::new(n, lambda).map_err(err_string)?;
        let x = last_minimum(&params).map_err(err_string)? + eps;
        let lhs = log_f_aux(n, lambda).map_err(err_string)?;
        let rhs = log_f_aux(n, x).map_err(err_string)?;
        Ok((lhs - rhs).abs())
    });
    summarize("level_identity", 1e-10, samples)
}

pub fn check_vartheta_equation(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let params = GraphParams::new(n, lambda).map_err(err_string)?;
        let t = vartheta(&params).map_err(err_string)?;
        // (ϑ−1)λⁿ + ϑλ^{n−1} − ϑ^{n+1}, divided by λⁿ
        let q = t / lambda;
        let terms = [t - 1.0, q, -t * q.powi(n as i32)];
        let scale = terms.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        Ok(terms.iter().sum::<f64>().abs() / scale)
    });
    summarize("vartheta_equation", 1e-9, samples)
}

pub fn check_level_transport(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let s = spectrum(n, lambda)?;
        let target = log_f_aux(n, lambda).map_err(err_string)?;
        let mut worst = 0.0f64;
        for j in 2..=n as usize + 2 {
            let p = (n as f64 + 1.0) / (j as f64 - 1.0);
            let y = ((1.0 - p) * lambda.ln() + p * s.exponent(j).ln()).exp();
            let value = log_f_aux(n, y).map_err(err_string)?;
            worst = worst.max((value - target).abs() / target.abs().max(1.0));
        }
        Ok(worst)
    });
    summarize("level_transport", 1e-9, samples)
}

pub fn check_quotients(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let s = spectrum(n, lambda)?;
        let ratios: Vec<f64> = s
            .values
            .windows(2)
            .filter(|p| p[1] > f64::MIN_POSITIVE)
            .map(|p| p[1] / p[0])
            .collect();
        Ok(ratios
            .iter()
            .map(|r| rel(*r, s.quotient))
            .fold(0.0, f64::max))
    });
    summarize("constant_quotient", 1e-9, samples)
}

pub fn check_ranges(opts: &VerifyOptions) -> CheckResult {
    const SLACK: f64 = 1e-12;
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let s = spectrum(n, lambda)?;
        let d = 1.0 / n as f64;
        let len = s.values.len();
        let ok = s.values.windows(2).all(|p| p[1] <= p[0] * (1.0 + SLACK))
            && s.values[0] >= d * (1.0 - SLACK)
            && s.values[1] >= d * (1.0 - SLACK)
            && s.values[1] <= 1.0 + SLACK
            && s.values[len - 2] <= d * (1.0 + SLACK)
            && s.values[len - 1] <= d * (1.0 + SLACK)
            && s.values[len - 1] >= 0.0;
        if ok {
            Ok(0.0)
        } else {
            Err(format!(
                "range violated at n = {n}, lambda = {lambda}: {:?}",
                s.values
            ))
        }
    });
    summarize("spectrum_ranges", 0.0, samples)
}

pub fn check_phi_equation(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&w_grid(opts), |&(n, w)| {
        let p = phi(n, w).map_err(err_string)?;
        let power = (w / p).powi(n as i32);
        let terms = [w, -p, 1.0, -power];
        let scale = terms.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        Ok(terms.iter().sum::<f64>().abs() / scale)
    });
    summarize("phi_equation", 1e-9, samples)
}

pub fn check_phi_power_bound(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&w_grid(opts), |&(n, w)| {
        let nf = n as f64;
        let p = phi(n, w).map_err(err_string)?;
        let weak = ((nf.ln() + nf * w.ln()) / (nf + 1.0)).exp();
        if w == nf {
            return Ok(rel(p, weak));
        }
        // strict for w > n + 1e-6
        if p < weak {
            Ok(0.0)
        } else {
            Err(format!("phi_{n}({w}) = {p} is not below {weak}"))
        }
    });
    summarize("phi_power_bound", 1e-15, samples)
}

pub fn check_phi_monotone(opts: &VerifyOptions) -> CheckResult {
    let steps = if opts.quick { 20 } else { 200 };
    let ns: Vec<u32> = (2..=30).collect();
    let samples = map(&ns, |&n| {
        let nf = n as f64;
        let mut prev = phi(n, nf).map_err(err_string)?;
        for w in linspace(nf, 100.0 * nf, steps).into_iter().skip(1) {
            let p = phi(n, w).map_err(err_string)?;
            if !(p > prev) {
                return Err(format!("phi_{n} not increasing at w = {w}"));
            }
            prev = p;
        }
        Ok(0.0)
    });
    summarize("phi_increasing", 0.0, samples)
}

pub fn check_duality(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let s = spectrum(n, lambda)?;
        let mirrored = to_dual(&s).map_err(err_string)?;
        let w = 1.0 / s.exponent(n as usize + 2);
        let direct = dual_spectrum(n, w).map_err(err_string)?;
        Ok(mirrored
            .values
            .iter()
            .zip(&direct.values)
            .map(|(a, b)| rel(*a, *b))
            .fold(0.0, f64::max))
    });
    summarize("duality_round_trip", 1e-9, samples)
}

pub fn check_psi(opts: &VerifyOptions) -> CheckResult {
    let samples = map(&lambda_grid(opts), |&(n, lambda)| {
        let params = GraphParams::new(n, lambda).map_err(err_string)?;
        let p = psi_profile(&params).map_err(err_string)?;
        let s = lambda_spectrum(&params).map_err(err_string)?;
        let d = 1.0 / n as f64;
        let tol = 1e-12;
        for j in 0..=n as usize {
            let (lo, hi) = (p.psi_lower[j], p.psi_upper[j]);
            if !(-1.0 - tol <= lo && lo <= hi + tol && hi <= d + tol) {
                return Err(format!(
                    "psi chain broken at n = {n}, lambda = {lambda}, j = {}",
                    j + 1
                ));
            }
            // ψ̲ < 0 iff λ_{n,j} > 1/n, away from ties
            let gap = s.values[j] - d;
            if gap.abs() > 1e-12 && (lo < 0.0) != (gap > 0.0) {
                return Err(format!(
                    "sign equivalence fails at n = {n}, lambda = {lambda}"
                ));
            }
        }
        Ok(p.psi_lower
            .iter()
            .skip(1)
            .zip(&p.psi_upper)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    });
    summarize("psi_profile", 1e-9, samples)
}

pub fn check_exponent_bounds(opts: &VerifyOptions) -> CheckResult {
    let mut grid: Vec<(u32, f64)> = lambda_grid(opts).into_iter().filter(|p| p.0 >= 2).collect();
    grid.extend((2..=30).map(|n| (n, 1e6)));
    let samples = map(&grid, |&(n, lambda)| {
        let s = spectrum(n, lambda)?;
        for j in 1..=n as usize + 2 {
            let v = s.exponent(j);
            let lower = lambda / (1.0 + lambda).powi(j as i32 - 1);
            let upper = lambda.powi(2 - j as i32);
            if v < lower * (1.0 - 1e-12) || v > upper * (1.0 + 1e-12) {
                return Err(format!(
                    "bounds fail at n = {n}, lambda = {lambda}, j = {j}"
                ));
            }
            if lambda == 1e6 && j >= 3 && v >= 1e-3 {
                return Err(format!("no decay at n = {n}, j = {j}: {v}"));
            }
        }
        Ok(0.0)
    });
    summarize("exponent_bounds", 0.0, samples)
}

/// Strict decrease of `λ_{n,j}(λ)` in `n`, for fixed `λ` and `j`.
///
/// Where consecutive values agree to rounding, both must already equal the
/// limit `λ/(1+λ)^{j−1}` to the same precision; the gap is then below what
/// binary64 resolves.
pub fn check_decreasing_in_n(_opts: &VerifyOptions) -> CheckResult {
    let lambdas: [f64; 7] = [0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0];
    let samples = map(&lambdas, |&lambda| {
        let n0 = (1.0 / lambda).ceil() as u32;
        for j in 2..=12usize {
            let limit = lambda / (1.0 + lambda).powi(j as i32 - 1);
            let start = n0.max(j as u32 - 1).max(1);
            let mut prev = spectrum(start, lambda)?.exponent(j);
            for n in start + 1..=30 {
                let v = spectrum(n, lambda)?.exponent(j);
                let resolved = rel(prev, limit) > 1e-12;
                if !(v < prev) && resolved {
                    return Err(format!(
                        "lambda_(n,{j})({lambda}) not decreasing at n = {n}: {prev} -> {v}"
                    ));
                }
                if v > prev * (1.0 + 1e-12) {
                    return Err(format!("increase at n = {n}, j = {j}, lambda = {lambda}"));
                }
                prev = v;
            }
        }
        Ok(0.0)
    });
    summarize("decreasing_in_n", 0.0, samples)
}

pub fn check_limit_in_n(opts: &VerifyOptions) -> CheckResult {
    let n_max = if opts.quick { 60 } else { 200 };
    let cases: Vec<(f64, usize)> = [0.5, 1.0, 2.0]
        .iter()
        .flat_map(|&l| [2usize, 3, 4].map(|j| (l, j)))
        .collect();
    let samples = map(&cases, |&(lambda, j)| {
        let limit = lambda / (1.0 + lambda).powi(j as i32 - 1);
        let n0 = ((1.0 / lambda).ceil() as u32).max(j as u32 - 1);
        let mut prev = f64::INFINITY;
        for n in n0..=n_max {
            let d = spectrum(n, lambda)?.exponent(j) - limit;
            // once the gap reaches rounding level it only jitters
            if d > prev * (1.0 + 1e-12) + 1e-14 * limit {
                return Err(format!("gap grows at n = {n}, lambda = {lambda}, j = {j}"));
            }
            prev = d;
        }
        Ok(prev.abs())
    });
    summarize("limit_in_n", 1e-2, samples)
}

pub fn check_large_lambda(_opts: &VerifyOptions) -> CheckResult {
    let ns: Vec<u32> = (2..=10).collect();
    let samples = map(&ns, |&n| {
        let lambda = 1e4;
        let params = GraphParams::new(n, lambda).map_err(err_string)?;
        let t = vartheta(&params).map_err(err_string)?;
        Ok((lambda + 1.0 - lambda / t).abs())
    });
    summarize("large_lambda", 1e-2, samples)
}

pub fn check_planar_monotone(opts: &VerifyOptions) -> CheckResult {
    let steps = if opts.quick { 100 } else { 1000 };
    let grid = linspace(0.5, 50.0, steps);
    let rows: Vec<_> = map(&grid, |&l| spectrum(2, l));
    let mut samples = Vec::new();
    let rows: std::result::Result<Vec<_>, _> = rows.into_iter().collect();
    match rows {
        Err(e) => samples.push(Err(e)),
        Ok(rows) => {
            for i in 0..4 {
                let col: Vec<f64> = rows.iter().map(|s| s.values[i]).collect();
                let up = col.windows(2).all(|p| p[1] >= p[0]);
                let down = col.windows(2).all(|p| p[1] <= p[0]);
                samples.push(if up || down {
                    Ok(0.0)
                } else {
                    Err(format!("lambda_(2,{}) is not monotone", i + 1))
                });
            }
        }
    }
    summarize("planar_monotone", 0.0, samples)
}

/// Expected case split for the sign of `λ_{n,j} − 1/n`, `n >= 2`.
fn expected_classification(n: u32, j: u32) -> Classification {
    if j <= 2 {
        Classification::AlwaysAbove
    } else if j > n || n <= 2 * j - 3 {
        Classification::AlwaysBelow
    } else {
        Classification::CrossesOnce
    }
}

pub fn check_thresholds(opts: &VerifyOptions) -> CheckResult {
    let points = if opts.quick { 20 } else { 200 };
    let cases: Vec<(u32, u32)> = (2..=12u32)
        .flat_map(|n| (1..=n + 2).map(move |j| (n, j)))
        .collect();
    let samples = map(&cases, |&(n, j)| {
        let r = classify(n, j).map_err(err_string)?;
        if r.classification != expected_classification(n, j) {
            return Err(format!("classify({n}, {j}) = {:?}", r.classification));
        }
        let d = 1.0 / n as f64;
        let mut worst = 0.0;
        if let Some(t) = r.tilde_lambda {
            if !(t > d && t < n as f64) {
                return Err(format!("threshold {t} outside (1/{n}, {n})"));
            }
            let v = spectrum(n, t)?.exponent(j as usize);
            worst = (v - d).abs();
        }
        // sign consistency on a log-spaced grid over (1/n, 3n]
        let (a, b) = ((1.001 * d).ln(), (3.0 * n as f64).ln());
        for k in 0..points {
            let lambda = (a + (b - a) * k as f64 / (points - 1) as f64).exp();
            let sign = sign_at(n, j, lambda).map_err(err_string)?;
            let want = match (r.classification, r.tilde_lambda) {
                (Classification::AlwaysAbove, _) => 1,
                (Classification::AlwaysBelow, _) => -1,
                (_, Some(t)) if rel(lambda, t) < 1e-6 => sign,
                (_, Some(t)) if lambda < t => 1,
                _ => -1,
            };
            if sign != want {
                return Err(format!(
                    "sign_at({n}, {j}, {lambda}) = {sign}, expected {want}"
                ));
            }
        }
        Ok(worst)
    });
    summarize("threshold_case_split", 1e-9, samples)
}

pub fn check_chi_convex(_opts: &VerifyOptions) -> CheckResult {
    let cases: Vec<(u32, u32)> = (3..=20u32)
        .flat_map(|n| (3..=n).map(move |j| (n, j)))
        .collect();
    let samples = map(&cases, |&(n, j)| {
        for k in 1..=100 {
            let t = 0.1 * k as f64;
            let second: f64 = (j as i32 - 1 - n as i32..=j as i32 - 2)
                .map(|e| (e * (e - 1)) as f64 * t.powi(e - 2))
                .sum();
            if !(second > 0.0) {
                return Err(format!("chi''_({n},{j})({t}) = {second}"));
            }
        }
        // and χ(1) = n
        Ok(rel(chi(n, j, 1.0).map_err(err_string)?, n as f64))
    });
    summarize("chi_convex", 1e-14, samples)
}

pub fn check_small_n_pattern(_opts: &VerifyOptions) -> CheckResult {
    let mut samples = Vec::new();
    for n in [2u32, 3] {
        for j in 1..=n + 2 {
            samples.push(match classify(n, j) {
                Ok(r) if r.classification != Classification::CrossesOnce => Ok(0.0),
                Ok(_) => Err(format!("({n}, {j}) unexpectedly crosses")),
                Err(e) => Err(err_string(e)),
            });
        }
    }
    samples.push(match classify(4, 3) {
        Ok(r) if r.classification == Classification::CrossesOnce => Ok(0.0),
        Ok(r) => Err(format!("(4, 3) classified {:?}", r.classification)),
        Err(e) => Err(err_string(e)),
    });
    summarize("small_n_pattern", 0.0, samples)
}

pub fn check_schmidt(_opts: &VerifyOptions) -> CheckResult {
    let ns = [2u32, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
    let samples = map(&ns, |&n| {
        for t in 1..=n / 2 {
            let i = schmidt_interval(n, t).map_err(err_string)?;
            let probe = if i.hi.is_finite() {
                0.5 * (i.lo + i.hi)
            } else {
                2.0 * i.lo
            };
            let s = spectrum(n, probe)?;
            let d = 1.0 / n as f64;
            if !(s.exponent(t as usize + 1) > d && s.exponent(t as usize + 2) < d) {
                return Err(format!("Schmidt property fails for n = {n}, T = {t}"));
            }
        }
        match schmidt_interval(n, n / 2 + 1) {
            Err(Error::NotRepresentable(_)) => Ok(0.0),
            other => Err(format!("T = floor(n/2)+1 for n = {n} gave {other:?}")),
        }
    });
    summarize("schmidt_intervals", 0.0, samples)
}

pub fn check_bounds(opts: &VerifyOptions) -> CheckResult {
    let n_max = if opts.quick { 40 } else { 200 };
    let delta = tau_delta().delta;
    let ns: Vec<u32> = (2..=n_max).collect();
    let rows: Vec<std::result::Result<(u32, f64, f64, f64), String>> = map(&ns, |&n| {
        let c = conditional_bound(n).map_err(err_string)?;
        let g = glueck_bound(n).map_err(err_string)?;
        let u = unconditional_bound(n).map_err(err_string)?;
        Ok((n, c, g, u))
    });
    let mut samples = Vec::new();
    let mut prev_gap = f64::NEG_INFINITY;
    for row in rows {
        let (n, c, g, u) = match row {
            Ok(r) => r,
            Err(e) => {
                samples.push(Err(e));
                continue;
            }
        };
        let nf = n as f64;
        let mut problems = Vec::new();
        // equality holds at n = 2, 3; allow rounding there
        let slack = 1.0 + 1e-12;
        if c > g * slack {
            problems.push("conditional > glueck");
        }
        if n >= 8 && g >= u {
            problems.push("glueck >= unconditional");
        }
        if c > u * slack {
            problems.push("conditional > unconditional");
        }
        if !(c < 2.0 * nf && 2.0 * nf - c > 0.0 && 2.0 * nf - c < 3.0) {
            problems.push("gap outside (0, 3)");
        }
        if n >= 60 && c >= 2.0 * nf - delta + 0.2 {
            problems.push("above 2n - Delta + 0.2");
        }
        if n >= 10 {
            let gap = 2.0 * nf - c;
            if gap <= prev_gap {
                problems.push("2n - bound not increasing");
            }
            prev_gap = gap;
        }
        samples.push(if problems.is_empty() {
            Ok(0.0)
        } else {
            Err(format!("n = {n}: {}", problems.join(", ")))
        });
    }
    for (n, want) in [(4u32, 6.2875), (20, 37.8787), (50, 97.7996)] {
        samples.push(
            conditional_bound(n)
                .map(|c| (c - want).abs() * 1e-4 / 5e-4)
                .map_err(err_string),
        );
    }
    summarize("conditional_bounds", 1e-4, samples)
}

pub fn check_mit(opts: &VerifyOptions) -> CheckResult {
    let n_max = if opts.quick { 100 } else { 1000 };
    let mut samples = vec![match mit_check(9) {
        Ok(v) if v < 0.0 => Ok(0.0),
        Ok(v) => Err(format!("mit_check(9) = {v} is not negative")),
        Err(e) => Err(err_string(e)),
    }];
    let ns: Vec<u32> = (10..=n_max).collect();
    samples.extend(map(&ns, |&n| match mit_check(n) {
        Ok(v) if v > 0.0 => Ok(0.0),
        Ok(v) => Err(format!("mit_check({n}) = {v} is not positive")),
        Err(e) => Err(err_string(e)),
    }));
    summarize("mit_sign_pattern", 0.0, samples)
}

/// Runs every check in a fixed order.
pub fn run(opts: &VerifyOptions) -> Vec<CheckResult> {
    let checks: [fn(&VerifyOptions) -> CheckResult; 22] = [
        check_total_identity,
        check_vartheta_equation,
        check_level_transport,
        check_quotients,
        check_ranges,
        check_phi_equation,
        check_phi_power_bound,
        check_phi_monotone,
        check_duality,
        check_psi,
        check_exponent_bounds,
        check_decreasing_in_n,
        check_limit_in_n,
        check_large_lambda,
        check_planar_monotone,
        check_thresholds,
        check_chi_convex,
        check_small_n_pattern,
        check_schmidt,
        check_bounds,
        check_mit,
        check_relations,
    ];
    checks.iter().map(|c| c(opts)).collect()
}

/// Relations between exponents on the regular graph: the geometric identity
/// for `w_{n,i}` and nonnegative slack in every inequality of
/// [`crate::regular_graph::RelationReport`].
pub fn check_relations(opts: &VerifyOptions) -> CheckResult {
    let grid: Vec<(u32, f64)> = lambda_grid(opts)
        .into_iter()
        .filter(|&(n, l)| n >= 2 && l > 1.0 / n as f64)
        .collect();
    let samples = map(&grid, |&(n, lambda)| {
        let params = GraphParams::new(n, lambda).map_err(err_string)?;
        let r = crate::regular_graph::relation_report(&params).map_err(err_string)?;
        let slacks = [
            r.w_lower_slack,
            r.lambda_lower_slack,
            r.german_upper_slack,
            r.german_lower_slack,
            r.laurent_slack,
        ];
        if slacks.iter().flatten().any(|s| *s < -1e-9) {
            return Err(format!(
                "negative slack at n = {n}, lambda = {lambda}: {r:?}"
            ));
        }
        Ok(r.geometric_residual)
    });
    summarize("relations", 1e-9, samples)
}

/// `true` when every check passed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// Runs the suite and converts a failure into an error naming the first
/// failing check.
pub fn run_strict(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let results = run(opts);
    match results.iter().find(|r| !r.passed) {
        Some(r) => Err(Error::Inconsistent(format!("check {} failed", r.name))),
        None => Ok(results),
    }
}
