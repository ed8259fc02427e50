//! Exponent spectra of the regular graph in dimension `n` with parameter `λ`.
//!
//! The whole spectrum is a geometric progression
//! `λ_{n,j} = λ·q^{j-1}` (`j = 1..=n+2`) whose common ratio `q` is fixed by
//! the requirement that the last entry `λ_{n,n+2}` lies on the same level of
//! `f_n(x) = (1+x)^{n+1}/x` as `λ` itself, on the branch `[0, 1/n]`.
//! Writing the last entry as `λ·e^s` gives `q = e^{s/(n+1)}`, so every
//! quantity here is derived from the single number `s`.
//!
//! The dual (linear form) side is the mirror image: `w_{n,j} = 1/λ_{n,n+3-j}`.
//! It is computed independently from `w` through the level sets of
//! `(1+x)^{n+1}/x^n`, which makes the duality a checkable identity rather
//! than a definition.

use crate::error::{Error, Result};
use crate::numerics::{Bracket, Solver, DEFAULT_REL_TOL};

/// Relative distance below which a parameter is treated as the Dirichlet point.
pub const DIRICHLET_REL_TOL: f64 = 1e-15;

/// Identifies one regular graph: dimension `n` and parameter `λ = λ_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphParams {
    n: u32,
    lambda: f64,
}

impl GraphParams {
    /// `lambda` may be `f64::INFINITY`. Values within [`DIRICHLET_REL_TOL`] of
    /// `1/n` are snapped to `1/n`.
    pub fn new(n: u32, lambda: f64) -> Result<Self> {
        check_dimension(n)?;
        let dirichlet = 1.0 / n as f64;
        if lambda.is_nan() {
            return Err(Error::domain("lambda must not be NaN"));
        }
        if (lambda - dirichlet).abs() < DIRICHLET_REL_TOL * dirichlet {
            return Ok(GraphParams {
                n,
                lambda: dirichlet,
            });
        }
        if lambda < dirichlet {
            return Err(Error::domain(format!(
                "lambda must be >= 1/n = {dirichlet} for n = {n}, got {lambda}"
            )));
        }
        Ok(GraphParams { n, lambda })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn is_dirichlet(&self) -> bool {
        self.lambda == 1.0 / self.n as f64
    }

    pub fn is_infinite(&self) -> bool {
        self.lambda == f64::INFINITY
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::domain("dimension n must be >= 1"))
    } else {
        Ok(())
    }
}

/// The simultaneous approximation exponents `λ_{n,1} >= ... >= λ_{n,n+2}`.
///
/// `values[j-1]` is `λ_{n,j}`. The uniform exponents are the same list
/// shifted by one: `ŵλ_{n,j} = λ_{n,j+1}`, see [`LambdaSpectrum::uniform`].
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSpectrum {
    pub n: u32,
    pub values: Vec<f64>,
    /// Common ratio `λ_{n,j+1}/λ_{n,j}` in `[0, 1]`; the reciprocal of
    /// `ρ`, see [`LambdaSpectrum::rho`].
    pub quotient: f64,
}

impl LambdaSpectrum {
    /// `λ_{n,j}` for `1 <= j <= n+2`.
    pub fn exponent(&self, j: usize) -> f64 {
        self.values[j - 1]
    }

    /// `ŵλ_{n,j} = λ_{n,j+1}` for `1 <= j <= n+1`.
    pub fn uniform(&self, j: usize) -> f64 {
        self.values[j]
    }

    /// `ρ = λ_{n,1}/λ_{n,2}`.
    pub fn rho(&self) -> f64 {
        1.0 / self.quotient
    }
}

/// The linear form exponents `w_{n,1} >= ... >= w_{n,n+2}`, with
/// `values[j-1] = w_{n,j}` and `ŵw_{n,j} = w_{n,j+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualSpectrum {
    pub n: u32,
    pub values: Vec<f64>,
    /// Common ratio `w_{n,j+1}/w_{n,j}`; equal to the quotient of the mirrored
    /// [`LambdaSpectrum`].
    pub quotient: f64,
}

impl DualSpectrum {
    pub fn exponent(&self, j: usize) -> f64 {
        self.values[j - 1]
    }

    pub fn uniform(&self, j: usize) -> f64 {
        self.values[j]
    }
}

/// Limits `ψ̲_{n,j}` and `ψ̄_{n,j}` of the normalized successive minima,
/// indexed `j = 1..=n+1` (stored zero-based).
#[derive(Debug, Clone, PartialEq)]
pub struct PsiProfile {
    pub n: u32,
    pub psi_lower: Vec<f64>,
    pub psi_upper: Vec<f64>,
}

/// `f_n(x) = (1+x)^{n+1}/x`.
pub fn f_aux(n: u32, x: f64) -> Result<f64> {
    check_dimension(n)?;
    if !(x > 0.0) {
        return Err(Error::domain(format!("f_aux requires x > 0, got {x}")));
    }
    let direct = (1.0 + x).powi(n as i32 + 1) / x;
    if direct.is_finite() {
        Ok(direct)
    } else {
        Ok(log_f_aux(n, x)?.exp())
    }
}

/// `log f_n(x)`, finite for every positive finite `x`.
pub fn log_f_aux(n: u32, x: f64) -> Result<f64> {
    check_dimension(n)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "log_f_aux requires finite x > 0, got {x}"
        )));
    }
    Ok((n as f64 + 1.0) * x.ln_1p() - x.ln())
}

/// `log((1 + v·e^s)/(1 + v))` for `s <= 0`, accurate near `s = 0`.
fn log_level_ratio(v: f64, s: f64) -> f64 {
    if s > -1.0 {
        (v * s.exp_m1() / (1.0 + v)).ln_1p()
    } else {
        (v * s.exp()).ln_1p() - v.ln_1p()
    }
}

/// Finds the partner of `v` on the descending branch of
/// `ℓ(x) = (n+1)·log(1+x) − m·log(x)`, which has its minimum at
/// `x* = m/(n+1−m)`. Returns `s = log(x/v)` where `x < x*` and `ℓ(x) = ℓ(v)`.
///
/// Requires `x* < v < ∞`.
fn partner_log_ratio(n: u32, m: f64, v: f64) -> Result<f64> {
    let np1 = n as f64 + 1.0;
    let x_star = m / (np1 - m);
    // s at x = x*, computed without cancellation.
    let s_hi = -((v - x_star) / x_star).ln_1p();
    let s_lo = -np1 * v.ln_1p() / m - 1.0;
    let level_gap = |s: f64| np1 * log_level_ratio(v, s) - m * s;

    if level_gap(s_hi) >= 0.0 {
        // v sits so close to x* that the two level values are equal in
        // floating point; use the reflection of the quadratic model.
        let mirrored = 2.0 * x_star - v;
        return Ok(if mirrored > 0.0 {
            (mirrored / v).ln()
        } else {
            s_hi
        });
    }
    let bracket = Bracket::decreasing(s_lo, s_hi)?;
    let scale = 1.0 + np1 * v.ln_1p();
    let root = Solver::new(DEFAULT_REL_TOL)
        .residual_scale(scale)
        .solve(level_gap, 0.0, &bracket)?;
    Ok(root.root)
}

/// `log(λ_{n,n+2}/λ)` for a finite, non-Dirichlet parameter.
fn last_log_ratio(params: &GraphParams) -> Result<f64> {
    partner_log_ratio(params.n, 1.0, params.lambda)
}

/// `ŵλ_{n,n+1} = λ_{n,n+2}`: the solution in `[0, 1/n]` of `f_n(x) = f_n(λ)`.
///
/// Exactly `1/n` at the Dirichlet point and `0` at `λ = ∞`. For very large
/// `n·log λ` the true value underflows and `0` is returned.
pub fn last_minimum(params: &GraphParams) -> Result<f64> {
    if params.is_dirichlet() {
        return Ok(params.lambda);
    }
    if params.is_infinite() {
        return Ok(0.0);
    }
    let s = last_log_ratio(params)?;
    Ok(params.lambda * s.exp())
}

/// `ϑ_n(λ) = ŵλ_n = λ_{n,2}`, the uniform exponent of the regular graph.
pub fn vartheta(params: &GraphParams) -> Result<f64> {
    if params.is_dirichlet() {
        return Ok(params.lambda);
    }
    if params.is_infinite() {
        return Ok(1.0);
    }
    let n = params.n as f64;
    let s = last_log_ratio(params)?;
    let value = params.lambda * (s / (n + 1.0)).exp();
    Ok(value.clamp(1.0 / n, params.lambda.min(1.0)))
}

/// The full spectrum `(λ_{n,1}, …, λ_{n,n+2})`.
pub fn lambda_spectrum(params: &GraphParams) -> Result<LambdaSpectrum> {
    let n = params.n;
    let len = n as usize + 2;
    if params.is_dirichlet() {
        return Ok(LambdaSpectrum {
            n,
            values: vec![params.lambda; len],
            quotient: 1.0,
        });
    }
    if params.is_infinite() {
        let mut values = vec![0.0; len];
        values[0] = f64::INFINITY;
        values[1] = 1.0;
        return Ok(LambdaSpectrum {
            n,
            values,
            quotient: 0.0,
        });
    }
    let s = last_log_ratio(params)?;
    let step = s / (n as f64 + 1.0);
    let mut values: Vec<f64> = (0..len)
        .map(|k| params.lambda * (k as f64 * step).exp())
        .collect();
    values[1] = values[1].clamp(1.0 / n as f64, params.lambda.min(1.0));
    Ok(LambdaSpectrum {
        n,
        values,
        quotient: step.exp(),
    })
}

fn check_w(n: u32, w: f64) -> Result<f64> {
    check_dimension(n)?;
    let nf = n as f64;
    if w.is_nan() {
        return Err(Error::domain("w must not be NaN"));
    }
    if (w - nf).abs() < DIRICHLET_REL_TOL * nf {
        return Ok(nf);
    }
    if w < nf {
        return Err(Error::domain(format!("w must be >= n = {n}, got {w}")));
    }
    Ok(w)
}

/// `log(ŵw_{n,n+1}/w)`: partner of `w` on the level sets of `(1+x)^{n+1}/x^n`.
fn dual_log_ratio(n: u32, w: f64) -> Result<f64> {
    partner_log_ratio(n, n as f64, w)
}

/// `φ_n(w) = ŵw_n`, the uniform linear form exponent of the regular graph
/// with `w_n = w`.
///
/// Obtained by first solving for `ŵw_{n,n+1}` and then taking the
/// geometric interpolation `w·(ŵw_{n,n+1}/w)^{1/(n+1)}`.
pub fn phi(n: u32, w: f64) -> Result<f64> {
    let w = check_w(n, w)?;
    let nf = n as f64;
    if w == nf {
        return Ok(nf);
    }
    if w.is_infinite() {
        return Ok(if n == 1 { 1.0 } else { f64::INFINITY });
    }
    let s = dual_log_ratio(n, w)?;
    Ok(w * (s / (nf + 1.0)).exp())
}

/// `(w_{n,1}, …, w_{n,n+2})` with `w_{n,1} = w`.
pub fn dual_spectrum(n: u32, w: f64) -> Result<DualSpectrum> {
    let w = check_w(n, w)?;
    let nf = n as f64;
    let len = n as usize + 2;
    if w == nf {
        return Ok(DualSpectrum {
            n,
            values: vec![nf; len],
            quotient: 1.0,
        });
    }
    if w.is_infinite() {
        let mut values = vec![f64::INFINITY; len];
        values[len - 2] = 1.0;
        values[len - 1] = 0.0;
        return Ok(DualSpectrum {
            n,
            values,
            quotient: 0.0,
        });
    }
    let s = dual_log_ratio(n, w)?;
    let step = s / (nf + 1.0);
    let values = (0..len).map(|k| w * (k as f64 * step).exp()).collect();
    Ok(DualSpectrum {
        n,
        values,
        quotient: step.exp(),
    })
}

fn check_spectrum_shape(n: u32, values: &[f64], what: &str) -> Result<()> {
    check_dimension(n)?;
    if values.len() != n as usize + 2 {
        return Err(Error::domain(format!(
            "{what} for n = {n} must have {} entries, got {}",
            n + 2,
            values.len()
        )));
    }
    if values.iter().any(|v| v.is_nan() || *v < 0.0) {
        return Err(Error::domain(format!(
            "{what} entries must be non-negative numbers"
        )));
    }
    if values.windows(2).any(|p| p[1] > p[0]) {
        return Err(Error::domain(format!("{what} must be non-increasing")));
    }
    Ok(())
}

fn mirror_reciprocals(values: &[f64]) -> Vec<f64> {
    values.iter().rev().map(|v| 1.0 / v).collect()
}

/// Dual spectrum from a simultaneous one: `w_{n,j} = 1/λ_{n,n+3-j}`.
pub fn to_dual(spec: &LambdaSpectrum) -> Result<DualSpectrum> {
    check_spectrum_shape(spec.n, &spec.values, "lambda spectrum")?;
    Ok(DualSpectrum {
        n: spec.n,
        values: mirror_reciprocals(&spec.values),
        quotient: spec.quotient,
    })
}

/// Inverse of [`to_dual`].
pub fn from_dual(dual: &DualSpectrum) -> Result<LambdaSpectrum> {
    check_spectrum_shape(dual.n, &dual.values, "dual spectrum")?;
    Ok(LambdaSpectrum {
        n: dual.n,
        values: mirror_reciprocals(&dual.values),
        quotient: dual.quotient,
    })
}

/// `ψ̲_{n,j}` and `ψ̄_{n,j}` from
/// `(1+λ_{n,j})(1+ψ̲_{n,j}) = (1+ŵλ_{n,j})(1+ψ̄_{n,j}) = (n+1)/n`.
pub fn psi_profile(params: &GraphParams) -> Result<PsiProfile> {
    if params.is_infinite() {
        return Err(Error::domain(
            "psi profile requires finite lambda (psi_lower_1 degenerates to -1)",
        ));
    }
    let spec = lambda_spectrum(params)?;
    let n = params.n as usize;
    let c = (n as f64 + 1.0) / n as f64;
    let psi = |x: f64| c / (1.0 + x) - 1.0;
    Ok(PsiProfile {
        n: params.n,
        psi_lower: (1..=n + 1).map(|j| psi(spec.exponent(j))).collect(),
        psi_upper: (1..=n + 1).map(|j| psi(spec.uniform(j))).collect(),
    })
}

/// Known relations between exponents, evaluated on one regular graph.
///
/// Slacks are `lhs − rhs` of an inequality `lhs >= rhs`; `None` where the
/// relation needs `n >= 2` (or `n = 2` for Laurent's inequality). For `n = 2`
/// German's lower bound and Laurent's inequality are identities on the regular
/// graph, so their slacks are zero up to rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    pub n: u32,
    pub lambda: f64,
    /// `w_n`
    pub w: f64,
    /// `ŵ_n`
    pub w_hat: f64,
    /// `ŵλ_n`
    pub lambda_hat: f64,
    /// Largest relative deviation of `w_{n,i}` from `ŵ^{i−1}/w^{i−2}`, `1 <= i <= n+1`.
    pub geometric_residual: f64,
    /// `w − ŵ·((ŵ−1)/(n−1))^{1/(n−1)}`
    pub w_lower_slack: Option<f64>,
    /// `λ − ŵλ·((n−1)ŵλ/(1−ŵλ))^{1/(n−1)}`
    pub lambda_lower_slack: Option<f64>,
    /// `ŵ/(ŵ−n+1) − ŵλ`
    pub german_upper_slack: Option<f64>,
    /// `ŵλ − (ŵ−1)/((n−1)ŵ)`
    pub german_lower_slack: Option<f64>,
    /// `w − ŵ(ŵ−1)`, `n = 2` only.
    pub laurent_slack: Option<f64>,
}

pub fn relation_report(params: &GraphParams) -> Result<RelationReport> {
    if params.is_infinite() || params.is_dirichlet() {
        return Err(Error::domain(format!(
            "relation report requires 1/n < lambda < inf, got {}",
            params.lambda
        )));
    }
    let n = params.n;
    let nf = n as f64;
    let spec = lambda_spectrum(params)?;
    let dual = to_dual(&spec)?;
    let w = dual.exponent(1);
    let w_hat = dual.uniform(1);
    let lambda_hat = spec.uniform(1);

    let geometric_residual = (1..=n as usize + 1)
        .map(|i| {
            let ifl = i as f64;
            let predicted = (ifl - 1.0) * w_hat.ln() - (ifl - 2.0) * w.ln();
            (dual.exponent(i).ln() - predicted).exp_m1().abs()
        })
        .fold(0.0, f64::max);

    let (w_lower, lambda_lower, german_upper, german_lower) = if n >= 2 {
        let e = 1.0 / (nf - 1.0);
        (
            Some(w - w_hat * ((w_hat - 1.0) / (nf - 1.0)).powf(e)),
            Some(
                params.lambda - lambda_hat * ((nf - 1.0) * lambda_hat / (1.0 - lambda_hat)).powf(e),
            ),
            Some(w_hat / (w_hat - nf + 1.0) - lambda_hat),
            Some(lambda_hat - (w_hat - 1.0) / ((nf - 1.0) * w_hat)),
        )
    } else {
        (None, None, None, None)
    };
    let laurent = (n == 2).then_some(w - w_hat * (w_hat - 1.0));

    Ok(RelationReport {
        n,
        lambda: params.lambda,
        w,
        w_hat,
        lambda_hat,
        geometric_residual,
        w_lower_slack: w_lower,
        lambda_lower_slack: lambda_lower,
        german_upper_slack: german_upper,
        german_lower_slack: german_lower,
        laurent_slack: laurent,
    })
}
