//! Exhaustive and sampled scans of `Sym(k·m)` for valid permutations.
//!
//! Both scans run on a rayon pool whose size is read from the
//! `PERMPOW_THREADS` environment variable (all cores when unset). Results
//! do not depend on the thread count.

use std::fmt;

use permpow_core::perm::{factorial, SymmetricGroup};
use permpow_core::{Permutation, PowerSpace};
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use thiserror::Error;

use crate::random::{rng, uniform_permutation};

pub const THREADS_VAR: &str = "PERMPOW_THREADS";

const CHUNK: u64 = 4096;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("{size}! = {count} permutations exceed the cap of {cap}")]
    TooLarge { size: usize, count: String, cap: u64 },
    #[error("invalid {THREADS_VAR} value {0:?}")]
    Threads(String),
    #[error(transparent)]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Core(#[from] permpow_core::Error),
}

/// Counts of a scan. `non_involutive` lists the valid non-involutions,
/// sorted and without repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: u64,
    pub symmetric: u64,
    pub involutive: u64,
    pub non_involutive: Vec<Permutation>,
    /// Number of valid non-involutions counted with repeats (differs from
    /// `non_involutive.len()` only for sampled scans).
    pub non_involutive_hits: u64,
}

impl ScanSummary {
    fn merge(mut self, other: ScanSummary) -> ScanSummary {
        self.total += other.total;
        self.symmetric += other.symmetric;
        self.involutive += other.involutive;
        self.non_involutive_hits += other.non_involutive_hits;
        self.non_involutive.extend(other.non_involutive);
        self
    }

    fn record(&mut self, space: &PowerSpace, p: Permutation) -> Result<(), ScanError> {
        self.total += 1;
        if space.is_symmetric(&p)? {
            self.symmetric += 1;
            if p.is_involution() {
                self.involutive += 1;
            } else {
                self.non_involutive_hits += 1;
                self.non_involutive.push(p);
            }
        }
        Ok(())
    }

    fn finish(mut self) -> Self {
        self.non_involutive.sort_unstable();
        self.non_involutive.dedup();
        self
    }
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "total scanned: {}", self.total)?;
        writeln!(f, "symmetric: {}", self.symmetric)?;
        writeln!(f, "involutive: {}", self.involutive)?;
        write!(f, "non-involutive valid: {}", self.non_involutive_hits)
    }
}

/// A pool sized by `PERMPOW_THREADS`.
pub fn thread_pool() -> Result<ThreadPool, ScanError> {
    let mut builder = ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_VAR) {
        let n: usize = value.trim().parse().map_err(|_| ScanError::Threads(value.clone()))?;
        if n == 0 {
            return Err(ScanError::Threads(value));
        }
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?)
}

/// Every permutation of the `k·m` points, refusing when `(k·m)!` exceeds
/// `cap`.
pub fn exhaustive(space: &PowerSpace, cap: u64) -> Result<ScanSummary, ScanError> {
    let n = space.size();
    let count = factorial(n);
    let total = u64::try_from(&count)
        .ok()
        .filter(|&t| t <= cap)
        .ok_or_else(|| ScanError::TooLarge {
            size: n,
            count: count.to_string(),
            cap,
        })?;
    let group = SymmetricGroup::new(n);
    let starts: Vec<u64> = (0..total).step_by(CHUNK as usize).collect();
    let summary = thread_pool()?.install(|| {
        starts
            .par_iter()
            .map(|&start| {
                let mut part = ScanSummary::default();
                for p in group.iter_from(start).take((total - start).min(CHUNK) as usize) {
                    part.record(space, p)?;
                }
                Ok::<_, ScanError>(part)
            })
            .try_reduce(ScanSummary::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(summary.finish())
}

/// `samples` uniform permutations drawn from a ChaCha stream seeded with
/// `seed`. The draws are sequential, so the sample set depends only on the
/// seed.
pub fn sampled(space: &PowerSpace, samples: u64, seed: u64) -> Result<ScanSummary, ScanError> {
    let mut r = rng(seed);
    let draws: Vec<Permutation> = (0..samples).map(|_| uniform_permutation(&mut r, space.size())).collect();
    let summary = thread_pool()?.install(|| {
        draws
            .par_chunks(CHUNK as usize)
            .map(|chunk| {
                let mut part = ScanSummary::default();
                for p in chunk {
                    part.record(space, p.clone())?;
                }
                Ok::<_, ScanError>(part)
            })
            .try_reduce(ScanSummary::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(summary.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use permpow_core::families::cycle_graph;

    #[test]
    fn c4_exhaustive() {
        let space = PowerSpace::new(&cycle_graph(4).unwrap(), 1).unwrap();
        let s = exhaustive(&space, 1000).unwrap();
        assert_eq!(s.total, 24);
        assert_eq!(s.symmetric, s.involutive + s.non_involutive_hits);
        assert_eq!(s.non_involutive.len() as u64, s.non_involutive_hits);
    }

    #[test]
    fn cap_is_enforced() {
        let space = PowerSpace::new(&cycle_graph(8).unwrap(), 1).unwrap();
        assert!(matches!(exhaustive(&space, 100), Err(ScanError::TooLarge { size: 8, .. })));
    }

    #[test]
    fn sampling_is_seeded() {
        let space = PowerSpace::new(&cycle_graph(5).unwrap(), 2).unwrap();
        let a = sampled(&space, 500, 9).unwrap();
        assert_eq!(a, sampled(&space, 500, 9).unwrap());
        assert_eq!(a.total, 500);
    }
}
