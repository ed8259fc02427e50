//! Grid evaluation with an optional rayon backend.
//!
//! With the `parallel` feature (on by default) [`map`] fans out over a rayon
//! pool; without it, or through [`map_sequential`], the same closure runs on
//! the calling thread. Output order always matches input order.

use crate::error::{Error, Result};
use crate::regular_graph::{lambda_spectrum, GraphParams, LambdaSpectrum};

/// Applies `f` to every item, sequentially.
pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Applies `f` to every item on the rayon pool.
#[cfg(feature = "parallel")]
pub fn map_parallel<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_parallel(items, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_sequential(items, f)
}

/// `steps` equally spaced points from `lo` to `hi`, both included.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..steps)
            .map(|i| {
                if i + 1 == steps {
                    hi
                } else {
                    lo + (hi - lo) * (i as f64 / (steps - 1) as f64)
                }
            })
            .collect(),
    }
}

/// A sweep of the parameter `λ` over `[lambda_min, lambda_max]` in dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub n: u32,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Number of grid points, endpoints included.
    pub steps: usize,
}

impl SweepSpec {
    pub fn new(n: u32, lambda_min: f64, lambda_max: f64, steps: usize) -> Result<Self> {
        // validates n and the lower end
        GraphParams::new(n, lambda_min)?;
        if !(lambda_min < lambda_max) || !lambda_max.is_finite() {
            return Err(Error::domain(format!(
                "sweep requires finite lambda_min < lambda_max, got [{lambda_min}, {lambda_max}]"
            )));
        }
        if steps < 2 {
            return Err(Error::domain(format!(
                "sweep requires at least 2 steps, got {steps}"
            )));
        }
        Ok(SweepSpec {
            n,
            lambda_min,
            lambda_max,
            steps,
        })
    }

    pub fn grid(&self) -> Vec<f64> {
        linspace(self.lambda_min, self.lambda_max, self.steps)
    }
}

fn spectrum_row(n: u32, lambda: f64) -> Result<(f64, LambdaSpectrum)> {
    let params = GraphParams::new(n, lambda)?;
    Ok((lambda, lambda_spectrum(&params)?))
}

/// Spectra along the sweep grid, in grid order.
pub fn spectrum_sweep(spec: &SweepSpec) -> Result<Vec<(f64, LambdaSpectrum)>> {
    let n = spec.n;
    map(&spec.grid(), |&l| spectrum_row(n, l))
        .into_iter()
        .collect()
}

/// [`spectrum_sweep`] on the calling thread only.
pub fn spectrum_sweep_sequential(spec: &SweepSpec) -> Result<Vec<(f64, LambdaSpectrum)>> {
    let n = spec.n;
    map_sequential(&spec.grid(), |&l| spectrum_row(n, l))
        .into_iter()
        .collect()
}
