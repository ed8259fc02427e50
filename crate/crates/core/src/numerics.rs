//! Bracketed root finding for strictly monotone functions of one variable.
//!
//! Every implicit equation in this crate is reduced to a scalar equation
//! `f(x) = target` on an interval where `f` is continuous and strictly
//! monotone. [`solve_monotone`] bisects until the bracket is small, then
//! switches to secant steps, falling back to bisection whenever a secant
//! iterate leaves the bracket or fails to halve it. The iteration path does
//! not depend on the tolerance; only the stopping point does.

use crate::error::{Error, Result};

/// Default relative tolerance used by all solvers in the crate.
pub const DEFAULT_REL_TOL: f64 = 1e-13;

/// Hard cap on solver iterations. Hitting it is reported as an error.
pub const MAX_ITERATIONS: usize = 200;

// Fraction of the initial width below which secant polishing is allowed.
const SAFE_WIDTH_FRACTION: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

impl Monotonicity {
    fn sign(self) -> f64 {
        match self {
            Monotonicity::Increasing => 1.0,
            Monotonicity::Decreasing => -1.0,
        }
    }
}

/// A search interval together with the direction in which the function moves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub monotonicity: Monotonicity,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, monotonicity: Monotonicity) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::domain(format!(
                "bracket requires finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Bracket {
            lo,
            hi,
            monotonicity,
        })
    }

    pub fn increasing(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, Monotonicity::Increasing)
    }

    pub fn decreasing(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, Monotonicity::Decreasing)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    /// `f(root) - target`.
    pub residual: f64,
    pub iterations: usize,
}

/// Solves `f(x) = target` on `bracket` with the default residual scale
/// `max(1, |target|)`.
///
/// On success `|f(root) - target| <= rel_tol * max(1, |target|)` and the final
/// bracket is no wider than `rel_tol * max(1, |root|)`.
pub fn solve_monotone<F>(f: F, target: f64, bracket: &Bracket, rel_tol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> f64,
{
    Solver::new(rel_tol).solve(f, target, bracket)
}

/// Configurable form of [`solve_monotone`].
///
/// `residual_scale` replaces `max(1, |target|)` in the residual bound. It is
/// needed when `f - target` is a difference of large terms, so that its
/// rounding error is proportional to those terms rather than to the target.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    rel_tol: f64,
    residual_scale: Option<f64>,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(DEFAULT_REL_TOL)
    }
}

impl Solver {
    pub fn new(rel_tol: f64) -> Self {
        Solver {
            rel_tol,
            residual_scale: None,
        }
    }

    pub fn residual_scale(mut self, scale: f64) -> Self {
        self.residual_scale = Some(scale);
        self
    }

    pub fn solve<F>(&self, f: F, target: f64, bracket: &Bracket) -> Result<RootResult>
    where
        F: Fn(f64) -> f64,
    {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::domain(format!(
                "rel_tol must be positive and finite, got {}",
                self.rel_tol
            )));
        }
        if !target.is_finite() {
            return Err(Error::domain(format!(
                "target must be finite, got {target}"
            )));
        }
        let scale = self.residual_scale.unwrap_or_else(|| target.abs()).max(1.0);
        let ftol = self.rel_tol * scale;
        let sign = bracket.monotonicity.sign();

        // h is oriented so that it increases through the root.
        let h = |x: f64| -> Result<f64> {
            let y = f(x);
            if y.is_finite() {
                Ok(sign * (y - target))
            } else {
                Err(Error::NonFinite { x })
            }
        };
        let done = |x: f64, hx: f64, iterations: usize| RootResult {
            root: x,
            residual: sign * hx,
            iterations,
        };

        let (mut a, mut b) = (bracket.lo, bracket.hi);
        let (mut ha, mut hb) = (h(a)?, h(b)?);
        if ha > 0.0 || hb < 0.0 {
            return Err(Error::NoSignChange { lo: a, hi: b });
        }
        if ha == 0.0 {
            return Ok(done(a, ha, 0));
        }
        if hb == 0.0 {
            return Ok(done(b, hb, 0));
        }

        let safe_width = SAFE_WIDTH_FRACTION * (b - a);
        // Last two evaluated points, for the secant step.
        let mut prev: Option<(f64, f64)> = None;
        let mut last: Option<(f64, f64)> = None;
        let mut width_two_back = f64::INFINITY;
        let mut width_one_back = b - a;

        for iteration in 1..=MAX_ITERATIONS {
            let mid = a + 0.5 * (b - a);
            if mid <= a || mid >= b {
                let (x, hx) = if ha.abs() <= hb.abs() {
                    (a, ha)
                } else {
                    (b, hb)
                };
                return if hx.abs() <= ftol {
                    Ok(done(x, hx, iteration - 1))
                } else {
                    Err(Error::Stalled {
                        x,
                        residual: sign * hx,
                    })
                };
            }

            let slow = b - a > 0.5 * width_two_back;
            let candidate = match (prev, last) {
                (Some((x0, h0)), Some((x1, h1))) if b - a <= safe_width && !slow && h1 != h0 => {
                    let x = x1 - h1 * (x1 - x0) / (h1 - h0);
                    if x > a && x < b {
                        x
                    } else {
                        mid
                    }
                }
                _ => mid,
            };

            let hx = h(candidate)?;
            if hx == 0.0 {
                return Ok(done(candidate, hx, iteration));
            }
            if hx < 0.0 {
                a = candidate;
                ha = hx;
            } else {
                b = candidate;
                hb = hx;
            }
            prev = last;
            last = Some((candidate, hx));
            width_two_back = width_one_back;
            width_one_back = b - a;

            let (x, hx) = if ha.abs() <= hb.abs() {
                (a, ha)
            } else {
                (b, hb)
            };
            let xtol = self.rel_tol * x.abs().max(1.0);
            if b - a <= xtol && hx.abs() <= ftol {
                return Ok(done(x, hx, iteration));
            }
        }
        Err(Error::IterationLimit {
            iterations: MAX_ITERATIONS,
            lo: a,
            hi: b,
        })
    }
}

/// Returns every cell of a uniform grid on `[lo, hi]` with `steps` cells on
/// which `f - target` changes sign, in increasing order.
///
/// A grid point where `f` hits the target exactly is reported once, as the
/// right end of the cell before it (or the left end of the first cell).
pub fn bracket_scan<F>(f: F, target: f64, lo: f64, hi: f64, steps: usize) -> Result<Vec<Bracket>>
where
    F: Fn(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::domain(format!(
            "bracket_scan requires finite lo < hi, got [{lo}, {hi}]"
        )));
    }
    if steps < 2 {
        return Err(Error::domain(format!(
            "bracket_scan requires at least 2 steps, got {steps}"
        )));
    }
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y - target)
        } else {
            Err(Error::NonFinite { x })
        }
    };
    let grid = |i: usize| {
        if i == steps {
            hi
        } else {
            lo + (hi - lo) * (i as f64 / steps as f64)
        }
    };

    let mut out = Vec::new();
    let mut x0 = lo;
    let mut g0 = eval(x0)?;
    for i in 1..=steps {
        let x1 = grid(i);
        let g1 = eval(x1)?;
        let crosses = (g0 < 0.0 && g1 > 0.0)
            || (g0 > 0.0 && g1 < 0.0)
            || (g1 == 0.0 && g0 != 0.0)
            || (i == 1 && g0 == 0.0 && g1 != 0.0);
        if crosses {
            let monotonicity = if g1 > g0 {
                Monotonicity::Increasing
            } else {
                Monotonicity::Decreasing
            };
            out.push(Bracket::new(x0, x1, monotonicity)?);
        }
        x0 = x1;
        g0 = g1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Plain bisection, used as an independent oracle.
    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        let flo = f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == (flo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn identity() {
        let b = Bracket::increasing(0.0, 1.0).unwrap();
        let r = solve_monotone(|x| x, 0.5, &b, DEFAULT_REL_TOL).unwrap();
        assert_eq!(r.root, 0.5);
    }

    #[test]
    fn cubic_over_x() {
        let f = |x: f64| (1.0 + x).powi(3) / x;
        let oracle = bisect(|x| f(x) - 8.0, 1e-9, 0.5);
        let exact = 5f64.sqrt() - 2.0;
        assert!((oracle - exact).abs() < 1e-15);

        let b = Bracket::decreasing(1e-9, 0.5).unwrap();
        let r = solve_monotone(f, 8.0, &b, DEFAULT_REL_TOL).unwrap();
        assert_relative_eq!(r.root, exact, max_relative = 1e-12);
        assert!(r.residual.abs() <= 8.0 * DEFAULT_REL_TOL);
    }

    #[test]
    fn lambert_like() {
        let target = 2.0 * 0.5f64.exp();
        let b = Bracket::decreasing(0.01, 1.0).unwrap();
        let r = solve_monotone(|y| y * (1.0 / y).exp(), target, &b, DEFAULT_REL_TOL).unwrap();
        assert!((r.root - 0.5693).abs() < 5e-5);
    }

    #[test]
    fn errors() {
        let b = Bracket::increasing(0.0, 1.0).unwrap();
        assert!(matches!(
            solve_monotone(|x| x, 2.0, &b, 1e-13),
            Err(Error::NoSignChange { .. })
        ));
        // declared decreasing but the function increases
        let d = Bracket::decreasing(0.0, 1.0).unwrap();
        assert!(matches!(
            solve_monotone(|x| x, 0.5, &d, 1e-13),
            Err(Error::NoSignChange { .. })
        ));
        let r = solve_monotone(|x| if x > 0.7 { f64::NAN } else { x }, 0.75, &b, 1e-13);
        assert!(matches!(r, Err(Error::NonFinite { .. })));
        assert!(matches!(
            solve_monotone(|x| x, 0.5, &b, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(Bracket::increasing(1.0, 1.0).is_err());
    }

    #[test]
    fn endpoint_root() {
        let b = Bracket::increasing(1.0, 2.0).unwrap();
        let r = solve_monotone(|x| x * x, 1.0, &b, 1e-13).unwrap();
        assert_eq!((r.root, r.iterations), (1.0, 0));
    }

    #[test]
    fn scan_single_root() {
        let bs = bracket_scan(|x| x * x - 1.0, 0.0, 0.0, 2.0, 10).unwrap();
        assert_eq!(bs.len(), 1);
        assert!(bs[0].contains(1.0));
        let r = solve_monotone(|x| x * x - 1.0, 0.0, &bs[0], 1e-13).unwrap();
        assert_relative_eq!(r.root, 1.0, max_relative = 1e-13);
    }

    #[test]
    fn scan_no_crossing() {
        assert!(bracket_scan(|_| 0.0, 1.0, 0.0, 1.0, 10).unwrap().is_empty());
    }

    #[test]
    fn scan_two_roots_in_order() {
        let bs = bracket_scan(|x| (x - 0.33) * (x - 0.71), 0.0, 0.0, 1.0, 50).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].monotonicity, Monotonicity::Decreasing);
        assert_eq!(bs[1].monotonicity, Monotonicity::Increasing);
        assert!(bs[0].hi <= bs[1].lo);
    }

    #[test]
    fn scan_rejects_bad_input() {
        assert!(bracket_scan(|x| x, 0.0, 1.0, 0.0, 10).is_err());
        assert!(bracket_scan(|x| x, 0.0, 0.0, 1.0, 1).is_err());
        assert!(matches!(
            bracket_scan(|x| 1.0 / (x - 0.5), 0.0, 0.0, 1.0, 2),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn iteration_cap_is_an_error() {
        // Residual bound cannot be met: a jump discontinuity of size 1.
        let b = Bracket::increasing(0.0, 1.0).unwrap();
        let r = solve_monotone(|x| if x < 0.3 { -0.5 } else { 0.5 }, 0.0, &b, 1e-13);
        assert!(matches!(
            r,
            Err(Error::Stalled { .. }) | Err(Error::IterationLimit { .. })
        ));
    }
}
