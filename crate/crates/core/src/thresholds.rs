//! Where `λ_{n,j}(λ)` crosses the Dirichlet value `1/n`, and the parameter
//! ranges on which the regular graph has Schmidt's property.
//!
//! Substituting `λ = α/n`, `θ = α^{1/(j−1)}` turns `λ_{n,j}(λ) = 1/n` into
//! `χ_{n,j}(θ) = n` with `χ_{n,j}(θ) = θ^{j−2} + θ^{j−3} + … + θ^{j−1−n}`.
//! `χ_{n,j}` is convex with `χ_{n,j}(1) = n`, so a crossing beyond `θ = 1`
//! exists exactly when `χ'_{n,j}(1) < 0`.

use crate::error::{Error, Result};
use crate::numerics::{bracket_scan, solve_monotone, DEFAULT_REL_TOL};
use crate::regular_graph::{lambda_spectrum, GraphParams};

/// Values of `λ_{n,j} − 1/n` smaller than this in magnitude count as zero.
pub const SIGN_DEAD_ZONE: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `λ_{n,j}(λ) > 1/n` for all `λ > 1/n`.
    AlwaysAbove,
    /// `λ_{n,j}(λ) < 1/n` for all `λ > 1/n`.
    AlwaysBelow,
    /// Above `1/n` on `(1/n, λ̃)`, below on `(λ̃, ∞]`.
    CrossesOnce,
    /// `λ_{n,j}(λ) = 1/n` for all `λ` (only `n = 1`, `j = 2`).
    IdenticallyDirichlet,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::AlwaysAbove => "always_above",
            Classification::AlwaysBelow => "always_below",
            Classification::CrossesOnce => "crosses_once",
            Classification::IdenticallyDirichlet => "identically_dirichlet",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub n: u32,
    pub j: u32,
    pub classification: Classification,
    /// `λ̃`, present iff the classification is `CrossesOnce`.
    pub tilde_lambda: Option<f64>,
    /// `μ₀ > 1` with `χ_{n,j}(μ₀) = n`; `λ̃ = μ₀^{j−1}/n`.
    pub theta_root: Option<f64>,
}

/// Parameter range `(lo, hi)` on which `λ_{n,T+1} > 1/n > λ_{n,T+2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtInterval {
    pub n: u32,
    pub t: u32,
    pub lo: f64,
    /// May be `f64::INFINITY`.
    pub hi: f64,
}

fn check_chi_indices(n: u32, j: u32) -> Result<()> {
    if n < 2 || j < 2 || j > n {
        return Err(Error::domain(format!(
            "chi requires 2 <= j <= n, got n = {n}, j = {j}"
        )));
    }
    Ok(())
}

/// `χ_{n,j}(θ) = Σ_{k=j−1−n}^{j−2} θ^k`.
pub fn chi(n: u32, j: u32, theta: f64) -> Result<f64> {
    check_chi_indices(n, j)?;
    if !(theta > 0.0) || !theta.is_finite() {
        return Err(Error::domain(format!(
            "chi requires finite theta > 0, got {theta}"
        )));
    }
    let top = j as i32 - 2;
    let bottom = j as i32 - 1 - n as i32;
    // smallest terms first
    Ok((bottom..=top).map(|k| theta.powi(k)).sum())
}

/// `χ'_{n,j}(1) = nj − (n² + 3n)/2`.
pub fn chi_prime_at_one(n: u32, j: u32) -> Result<f64> {
    check_chi_indices(n, j)?;
    let (n, j) = (n as f64, j as f64);
    Ok(n * j - (n * n + 3.0 * n) / 2.0)
}

fn check_indices(n: u32, j: u32) -> Result<()> {
    if n == 0 || j == 0 || j > n + 2 {
        return Err(Error::domain(format!(
            "threshold requires n >= 1 and 1 <= j <= n + 2, got n = {n}, j = {j}"
        )));
    }
    Ok(())
}

/// Sign behaviour of `λ_{n,j}(λ) − 1/n` on `λ ∈ (1/n, ∞]`.
pub fn classify(n: u32, j: u32) -> Result<ThresholdResult> {
    check_indices(n, j)?;
    let plain = |classification| ThresholdResult {
        n,
        j,
        classification,
        tilde_lambda: None,
        theta_root: None,
    };
    if n == 1 {
        // λ_{1,1} = λ, λ_{1,2} = 1, λ_{1,3} = 1/λ
        return Ok(plain(match j {
            1 => Classification::AlwaysAbove,
            2 => Classification::IdenticallyDirichlet,
            _ => Classification::AlwaysBelow,
        }));
    }
    if j <= 2 {
        return Ok(plain(Classification::AlwaysAbove));
    }
    if j > n || n <= 2 * j - 3 {
        return Ok(plain(Classification::AlwaysBelow));
    }

    let mu = chi_crossing(n, j)?;
    let tilde = mu.powi(j as i32 - 1) / n as f64;
    Ok(ThresholdResult {
        n,
        j,
        classification: Classification::CrossesOnce,
        tilde_lambda: Some(tilde),
        theta_root: Some(mu),
    })
}

/// Root of `χ_{n,j}(θ) = n` on `(1, ∞)`, assuming `χ'_{n,j}(1) < 0`.
fn chi_crossing(n: u32, j: u32) -> Result<f64> {
    let target = n as f64;
    let f = |t: f64| chi(n, j, t).unwrap_or(f64::NAN);

    // Grow the offset from 1 until χ is back above n.
    let mut lo = 1.0 + 1e-6;
    let mut offset = 1e-6;
    let mut hi = lo;
    while f(hi) <= target {
        lo = hi;
        offset *= 2.0;
        hi = 1.0 + offset;
        if !hi.is_finite() || offset > 1e6 {
            return Err(Error::Inconsistent(format!(
                "chi_{n},{j} did not return above {n}"
            )));
        }
    }
    // The minimum of χ may sit inside [lo, hi]; scan so that the solve runs
    // on the increasing branch only.
    let cells = bracket_scan(f, target, lo, hi, 64)?;
    let cell = cells.last().ok_or(Error::NoSignChange { lo, hi })?;
    Ok(solve_monotone(f, target, cell, DEFAULT_REL_TOL)?.root)
}

/// Sign of `λ_{n,j}(λ) − 1/n`, with [`SIGN_DEAD_ZONE`] reported as `0`.
pub fn sign_at(n: u32, j: u32, lambda: f64) -> Result<i8> {
    check_indices(n, j)?;
    let params = GraphParams::new(n, lambda)?;
    let spec = lambda_spectrum(&params)?;
    let diff = spec.exponent(j as usize) - 1.0 / n as f64;
    Ok(if diff.abs() < SIGN_DEAD_ZONE {
        0
    } else if diff > 0.0 {
        1
    } else {
        -1
    })
}

/// Maximal interval of parameters giving Schmidt's property for `(n, T)`.
///
/// The upper end is the threshold of index `T+1` (or `∞` for `T = 1`), the
/// lower end the threshold of index `T+2` if that index crosses, otherwise
/// `1/n`. The result is checked at an interior point before it is returned.
pub fn schmidt_interval(n: u32, t: u32) -> Result<SchmidtInterval> {
    if n < 2 || t < 1 {
        return Err(if n >= 1 && t >= 1 {
            not_representable(n, t)
        } else {
            Error::domain(format!(
                "schmidt interval requires n >= 1 and T >= 1, got n = {n}, T = {t}"
            ))
        });
    }
    if t > n / 2 {
        return Err(not_representable(n, t));
    }
    let dirichlet = 1.0 / n as f64;
    let hi = if t == 1 {
        f64::INFINITY
    } else {
        classify(n, t + 1)?.tilde_lambda.ok_or_else(|| {
            Error::Inconsistent(format!("index {} was expected to cross 1/{n}", t + 1))
        })?
    };
    let lo = classify(n, t + 2)?.tilde_lambda.unwrap_or(dirichlet);
    if !(lo < hi) {
        return Err(Error::Inconsistent(format!(
            "empty Schmidt interval ({lo}, {hi}) for n = {n}, T = {t}"
        )));
    }

    let probe = if hi.is_finite() {
        0.5 * (lo + hi)
    } else {
        2.0 * lo
    };
    let upper = sign_at(n, t + 1, probe)?;
    let lower = sign_at(n, t + 2, probe)?;
    if upper != 1 || lower != -1 {
        return Err(Error::Inconsistent(format!(
            "Schmidt property fails at lambda = {probe} for n = {n}, T = {t}"
        )));
    }
    Ok(SchmidtInterval { n, t, lo, hi })
}

fn not_representable(n: u32, t: u32) -> Error {
    Error::NotRepresentable(format!(
        "T = {t} > floor(n/2) = {} for n = {n}: lambda_hat_(n,T) < 1/n for every lambda > 1/n, \
         so no regular graph has Schmidt's property for (n, T)",
        n / 2
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use Classification::*;

    #[test]
    fn chi_values() {
        for n in 2..10 {
            for j in 2..=n {
                assert_relative_eq!(chi(n, j, 1.0).unwrap(), n as f64, max_relative = 1e-15);
            }
        }
        assert_eq!(chi(8, 3, 2.0).unwrap(), 3.984375);
        for t in [1.01, 1.5, 3.0, 10.0] {
            assert!(chi(3, 3, t).unwrap() > 3.0);
        }
        assert!(chi(3, 3, 0.0).is_err());
        assert!(chi(3, 4, 1.0).is_err());
        assert!(chi(3, 1, 1.0).is_err());
    }

    #[test]
    fn chi_prime_values() {
        for n in (3..30).step_by(2) {
            assert_eq!(chi_prime_at_one(n, (n + 3) / 2).unwrap(), 0.0);
        }
        assert_eq!(chi_prime_at_one(8, 3).unwrap(), -20.0);
        assert_eq!(chi_prime_at_one(3, 3).unwrap(), 0.0);
        assert!(chi_prime_at_one(3, 5).is_err());
    }

    #[test]
    fn scan_finds_one_crossing() {
        let cells = bracket_scan(|t| chi(8, 3, t).unwrap(), 8.0, 1.0 + 1e-9, 10.0, 1000).unwrap();
        assert_eq!(cells.len(), 1);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(3, 3).unwrap().classification, AlwaysBelow);
        assert_eq!(classify(2, 4).unwrap().classification, AlwaysBelow);
        let r = classify(8, 3).unwrap();
        assert_eq!(r.classification, CrossesOnce);
        let t = r.tilde_lambda.unwrap();
        assert!(t > 0.125 && t < 8.0);
        let mu = r.theta_root.unwrap();
        assert_relative_eq!(chi(8, 3, mu).unwrap(), 8.0, max_relative = 1e-13);
        assert_relative_eq!(t, mu * mu / 8.0, max_relative = 1e-15);
        let s = lambda_spectrum(&GraphParams::new(8, t).unwrap()).unwrap();
        assert!((s.exponent(3) - 0.125).abs() < 1e-9);
        assert!(classify(0, 1).is_err());
        assert!(classify(3, 6).is_err());
        assert!(classify(3, 0).is_err());
    }

    #[test]
    fn n_one() {
        assert_eq!(classify(1, 2).unwrap().classification, IdenticallyDirichlet);
        assert_eq!(classify(1, 1).unwrap().classification, AlwaysAbove);
        assert_eq!(classify(1, 3).unwrap().classification, AlwaysBelow);
        assert_eq!(sign_at(1, 2, 5.0).unwrap(), 0);
    }

    #[test]
    fn sign_examples() {
        for n in 1..6 {
            for j in 1..=n + 2 {
                assert_eq!(sign_at(n, j, 1.0 / n as f64).unwrap(), 0);
            }
        }
        let t = classify(8, 3).unwrap().tilde_lambda.unwrap();
        assert_eq!(sign_at(8, 3, 0.9 * t).unwrap(), 1);
        assert_eq!(sign_at(8, 3, 1.1 * t).unwrap(), -1);
        assert_eq!(sign_at(3, 3, 2.0).unwrap(), -1);
        assert!(sign_at(3, 3, 0.1).is_err());
    }

    #[test]
    fn schmidt_examples() {
        let i = schmidt_interval(2, 1).unwrap();
        assert_eq!((i.lo, i.hi), (0.5, f64::INFINITY));
        let i = schmidt_interval(8, 4).unwrap();
        assert_eq!(i.lo, 0.125);
        assert_eq!(Some(i.hi), classify(8, 5).unwrap().tilde_lambda);
        assert!(matches!(
            schmidt_interval(8, 5),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            schmidt_interval(1, 1),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(schmidt_interval(4, 0), Err(Error::Domain(_))));
    }
}
