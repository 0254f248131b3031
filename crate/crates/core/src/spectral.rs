//! Second-eigenvalue estimate for regular graphs by power iteration.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TOLERANCE: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralGap {
    pub degree: u64,
    /// Largest `|λ|` over the eigenvalues of `A/d` other than the trivial 1.
    pub lambda2: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl SpectralGap {
    pub fn gap(&self) -> f64 {
        1.0 - self.lambda2
    }
}

/// Power iteration on `A' = A/d` restricted to the complement of the
/// all-ones vector. The magnitude estimate is `‖A'x‖ / ‖x‖`, which converges
/// to the largest `|λ|` even when `λ` and `−λ` are both eigenvalues.
///
/// Requires a connected regular graph with at least two vertices and
/// positive degree.
pub fn spectral_gap_estimate(g: &Graph) -> Result<SpectralGap> {
    let degree = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall("a single vertex has no second eigenvalue".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let d = degree.to_f64().filter(|d| *d > 0.0).ok_or(Error::NotConnected)?;
    let rows: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .into_iter()
                .map(|(w, m)| (w, m.to_f64().unwrap_or(f64::NAN) / d))
                .collect()
        })
        .collect();

    // Deterministic start vector with no special alignment to the spectrum.
    let mut x: Vec<f64> = (0..n).map(|i| libm::sin(1.0 + i as f64 * 1.618_033_988_7)).collect();
    deflate(&mut x);
    normalize(&mut x);

    let mut estimate = 0.0;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut y: Vec<f64> = rows
            .iter()
            .map(|row| row.iter().map(|&(w, a)| a * x[w]).sum())
            .collect();
        deflate(&mut y);
        let norm = norm(&y);
        if norm == 0.0 {
            estimate = 0.0;
            converged = true;
            break;
        }
        let delta = (norm - estimate).abs();
        estimate = norm;
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
        if delta < TOLERANCE && iterations > 1 {
            converged = true;
            break;
        }
    }
    Ok(SpectralGap {
        degree: degree.to_u64().unwrap_or(u64::MAX),
        lambda2: estimate,
        iterations,
        converged,
    })
}

fn deflate(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|v| *v -= mean);
}

fn norm(x: &[f64]) -> f64 {
    libm::sqrt(x.iter().map(|v| v * v).sum())
}

fn normalize(x: &mut [f64]) {
    let n = norm(x);
    if n > 0.0 {
        x.iter_mut().for_each(|v| *v /= n);
    }
}
