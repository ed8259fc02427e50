//! Upper bounds for the uniform exponents `ŵ_n` and `ŵ*_n` of a real
//! transcendental number.
//!
//! The conditional bounds assume that the regular graph is extremal, i.e.
//! `ŵ_n <= φ_n(w_n)`. Combined with the unconditional estimate
//! `ŵ*_n <= n·w_n/(w_n − n + 1)` this caps `ŵ*_n` at the value where the
//! increasing `φ_n` meets the decreasing right hand side.

use crate::error::{Error, Result};
use crate::numerics::{Bracket, Solver, DEFAULT_REL_TOL};
use crate::regular_graph::phi;

fn check_n(n: u32) -> Result<f64> {
    if n < 2 {
        Err(Error::domain(format!("bound requires n >= 2, got {n}")))
    } else {
        Ok(n as f64)
    }
}

/// Best known unconditional bound: `3 + √2` for `n = 3`, otherwise
/// `n − 1/2 + √(n² − 2n + 5/4)`.
pub fn unconditional_bound(n: u32) -> Result<f64> {
    let nf = check_n(n)?;
    Ok(if n == 3 {
        3.0 + 2f64.sqrt()
    } else {
        nf - 0.5 + (nf * nf - 2.0 * nf + 1.25).sqrt()
    })
}

/// `n·w/(w − n + 1)`, the unconditional bound for `ŵ*_n` in terms of `w = w_n`.
pub fn linear_form_cap(n: u32, w: f64) -> Result<f64> {
    let nf = check_n(n)?;
    if !(w >= nf) {
        return Err(Error::domain(format!("w must be >= n = {n}, got {w}")));
    }
    if w.is_infinite() {
        return Ok(nf);
    }
    Ok(nf * w / (w - nf + 1.0))
}

/// Solves `inc(w) = dec(w)` on `(n, ∞)` where `log inc − log dec` increases
/// from negative to positive, and returns `w`.
fn crossing<F>(n: u32, log_gap: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let nf = n as f64;
    let lo = nf + 1e-9;
    let mut hi = 4.0 * nf;
    while log_gap(hi) <= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::NoSignChange { lo, hi });
        }
    }
    let bracket = Bracket::increasing(lo, hi)?;
    let scale = 1.0 + hi.ln();
    Ok(Solver::new(DEFAULT_REL_TOL)
        .residual_scale(scale)
        .solve(log_gap, 0.0, &bracket)?
        .root)
}

fn log_cap(nf: f64, w: f64) -> f64 {
    nf.ln() + w.ln() - (w - nf + 1.0).ln()
}

/// `w̃_n`: the solution of `φ_n(w) = n·w/(w − n + 1)`.
pub fn conditional_crossing(n: u32) -> Result<f64> {
    let nf = check_n(n)?;
    crossing(n, |w| match phi(n, w) {
        Ok(p) => p.ln() - log_cap(nf, w),
        Err(_) => f64::NAN,
    })
}

/// `φ_n(w̃_n)`: the bound for `ŵ*_n` implied by the extremality of the
/// regular graph.
pub fn conditional_bound(n: u32) -> Result<f64> {
    check_n(n)?;
    phi(n, conditional_crossing(n)?)
}

/// The same construction with `φ_n(w)` replaced by the weaker
/// `n^{1/(n+1)}·w^{n/(n+1)}`. Tends to `2n − 1 − log 2`.
pub fn glueck_bound(n: u32) -> Result<f64> {
    let nf = check_n(n)?;
    let log_weak = |w: f64| (nf.ln() + nf * w.ln()) / (nf + 1.0);
    let w = crossing(n, |w| log_weak(w) - log_cap(nf, w))?;
    Ok(log_weak(w).exp())
}

/// Constants of the large-`n` asymptotics of the conditional bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauDelta {
    /// Solution `y ∈ (0, 1)` of `y·e^{1/y} = 2√e`.
    pub tau: f64,
    /// `log(2/τ) + 1`; the conditional bound behaves like `2n − Δ`.
    pub delta: f64,
    /// `2/τ`.
    pub theta: f64,
}

pub fn tau_delta() -> TauDelta {
    // log y + 1/y = log 2 + 1/2 on (0, 1), decreasing
    let target = 2f64.ln() + 0.5;
    let bracket = Bracket::decreasing(0.01, 1.0).expect("static bracket");
    let tau = crate::numerics::solve_monotone(
        |y: f64| y.ln() + 1.0 / y,
        target,
        &bracket,
        DEFAULT_REL_TOL,
    )
    .expect("y·e^(1/y) = 2√e has a root in (0.01, 1)")
    .root;
    TauDelta {
        tau,
        delta: (2.0 / tau).ln() + 1.0,
        theta: 2.0 / tau,
    }
}

/// `H(w, 2n−2) = 2/(n−2) + 3 − ((n−1)/(n−2))^n` at `w = 2(n−1)²/(n−2)`.
///
/// Positive values certify `φ_n(w) < 2n − 2` at that `w`, which holds for
/// every `n >= 10`.
pub fn mit_check(n: u32) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(format!("mit_check requires n >= 3, got {n}")));
    }
    let m = n as f64 - 2.0;
    let power = (n as f64 * (1.0 / m).ln_1p()).exp();
    Ok(2.0 / m + 3.0 - power)
}

/// Bounds evaluated at a specific `w_n = w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointwiseBounds {
    pub w: f64,
    /// `n·w/(w − n + 1)`
    pub linear_form_cap: f64,
    /// `φ_n(w)`
    pub phi: f64,
    /// `min{n·w/(w−n+1), φ_n(w)}`, a bound for `ŵ*_n`.
    pub star_bound: f64,
    /// `min{max{2n−2, n·w/(w−n+1)}, φ_n(w)}`, a bound for `ŵ_n`.
    pub w_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub n: u32,
    pub unconditional: f64,
    /// Conditional bound for `ŵ*_n`.
    pub conditional_star: f64,
    /// Conditional bound for `ŵ_n` valid in every case:
    /// `max{2n − 2, conditional_star}`.
    pub conditional_w: f64,
    /// `2n − conditional_star`.
    pub asymptotic_gap: f64,
    /// `w̃_n`.
    pub crossing_w: f64,
    /// Set when `conditional_star < 2n − 2`. Then `conditional_star` bounds
    /// `ŵ_n` only outside the case `w_{n−2} < w_{n−1} = w_n`.
    pub caveat: bool,
    pub pointwise: Option<PointwiseBounds>,
}

pub fn bound_report(n: u32, w: Option<f64>) -> Result<BoundReport> {
    let nf = check_n(n)?;
    let crossing_w = conditional_crossing(n)?;
    let conditional_star = phi(n, crossing_w)?;
    let floor = 2.0 * nf - 2.0;
    let pointwise = w
        .map(|w| -> Result<PointwiseBounds> {
            let cap = linear_form_cap(n, w)?;
            let p = phi(n, w)?;
            Ok(PointwiseBounds {
                w,
                linear_form_cap: cap,
                phi: p,
                star_bound: cap.min(p),
                w_bound: cap.max(floor).min(p),
            })
        })
        .transpose()?;
    Ok(BoundReport {
        n,
        unconditional: unconditional_bound(n)?,
        conditional_star,
        conditional_w: conditional_star.max(floor),
        asymptotic_gap: 2.0 * nf - conditional_star,
        crossing_w,
        caveat: conditional_star < floor,
        pointwise,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unconditional_values() {
        assert_relative_eq!(
            unconditional_bound(2).unwrap(),
            (3.0 + 5f64.sqrt()) / 2.0,
            max_relative = 1e-15
        );
        assert_eq!(unconditional_bound(3).unwrap(), 3.0 + 2f64.sqrt());
        assert_relative_eq!(
            unconditional_bound(4).unwrap(),
            3.5 + 9.25f64.sqrt(),
            max_relative = 1e-15
        );
        assert!((unconditional_bound(4).unwrap() - 6.5414).abs() < 5e-5);
        assert!(unconditional_bound(1).is_err());
    }

    #[test]
    fn conditional_closed_forms() {
        assert!((conditional_bound(2).unwrap() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        assert!((conditional_bound(3).unwrap() - (3.0 + 2f64.sqrt())).abs() < 1e-9);
        assert!((conditional_bound(4).unwrap() - 6.2875).abs() < 5e-4);
        assert!(conditional_bound(1).is_err());
    }

    #[test]
    fn crossing_agrees() {
        for n in [2, 5, 17, 60] {
            let w = conditional_crossing(n).unwrap();
            let lhs = phi(n, w).unwrap();
            let rhs = linear_form_cap(n, w).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-9);
        }
    }

    #[test]
    fn constants() {
        let c = tau_delta();
        assert!((c.tau - 0.5693).abs() < 5e-5);
        assert!((c.delta - 2.2564).abs() < 5e-5);
        assert!((c.theta - 3.5128).abs() < 5e-4);
        assert_relative_eq!(
            c.tau * (1.0 / c.tau).exp(),
            2.0 * 0.5f64.exp(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn glueck_examples() {
        for n in 2..=50 {
            let g = glueck_bound(n).unwrap();
            assert!(g >= conditional_bound(n).unwrap());
            // the advantage over the unconditional bound is asymptotic
            assert_eq!(g < unconditional_bound(n).unwrap(), n >= 8, "n = {n}");
        }
        let g = glueck_bound(500).unwrap();
        assert!((g - (999.0 - 2f64.ln())).abs() < 0.05);
    }

    #[test]
    fn mit_values() {
        let m10 = mit_check(10).unwrap();
        assert_relative_eq!(m10, 3.25 - 1.125f64.powi(10), max_relative = 1e-12);
        assert!(m10 > 0.0 && (m10 - 0.0027).abs() < 5e-5);
        let m9 = mit_check(9).unwrap();
        assert!(m9 < 0.0 && (m9 + 0.04).abs() < 5e-3);
        assert!(mit_check(2).is_err());
    }

    #[test]
    fn report() {
        let r = bound_report(4, None).unwrap();
        assert!((r.conditional_star - 6.2875).abs() < 5e-4);
        assert!((r.unconditional - 6.5414).abs() < 5e-4);
        assert!(!r.caveat);
        assert_eq!(r.conditional_w, r.conditional_star);

        let r = bound_report(50, None).unwrap();
        assert!((r.asymptotic_gap - 2.2004).abs() < 5e-4);
        assert!((2.0 * 50.0 - 2.0 - r.conditional_star - 0.2004).abs() < 5e-4);
        assert!(r.caveat);
        assert_eq!(r.conditional_w, 98.0);

        let r = bound_report(3, Some(3.0)).unwrap();
        let p = r.pointwise.unwrap();
        assert_eq!(p.phi, 3.0);
        assert_eq!(p.linear_form_cap, 9.0);
        assert_eq!(p.star_bound, 3.0);
        assert_eq!(p.w_bound, 3.0);
        assert!(bound_report(3, Some(2.0)).is_err());
    }
}
