//! Reducing a valid permutation to an equivalent involution.
//!
//! For a partition `π` and a permutation `p`, the transfer set `V_{i,j}` is
//! the set of points of block `C_i` that `p` sends into block `C_j`. When
//! `|V_{i,j}| = |V_{j,i}|` for all `i, j` (the permutation quotient is
//! symmetric), pairing `V_{i,j}` with `V_{j,i}` and fixing `V_{i,i}` gives an
//! involution `q` with the same transfer counts; on the neighborhood
//! partition this forces `Ã Q Ã = Ã P Ã`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;
use crate::partition::{neighborhood_partition, permutation_quotient_counts, quotient_adjacency, Partition};
use crate::perm::{factorial, involution_count, Permutation, SymmetricGroup};
use crate::power::PowerSpace;

/// `V_{i,j}` for every ordered pair of blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransferSets {
    m: usize,
    sets: Vec<Vec<usize>>,
}

impl TransferSets {
    pub fn blocks(&self) -> usize {
        self.m
    }

    /// Sorted points of block `i` sent into block `j`.
    pub fn get(&self, i: usize, j: usize) -> &[usize] {
        &self.sets[i * self.m + j]
    }

    pub fn counts(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.m, self.m, |i, j| self.get(i, j).len().into())
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.m).all(|i| (i + 1..self.m).all(|j| self.get(i, j).len() == self.get(j, i).len()))
    }
}

pub fn transfer_sets(p: &Permutation, pi: &Partition) -> Result<TransferSets> {
    if p.len() != pi.points() {
        return Err(Error::DimensionMismatch {
            expected: pi.points(),
            found: p.len(),
        });
    }
    let m = pi.len();
    let mut sets = vec![Vec::new(); m * m];
    // Points are visited in increasing order, so each set comes out sorted.
    for v in 0..p.len() {
        sets[pi.block_of(v) * m + pi.block_of(p.apply(v))].push(v);
    }
    Ok(TransferSets { m, sets })
}

/// Pairs the sorted `V_{i,j}` with the sorted `V_{j,i}` positionally for
/// each `i < j` and fixes every point of each `V_{i,i}`.
pub fn reduce_with_partition(p: &Permutation, pi: &Partition) -> Result<Permutation> {
    let sets = transfer_sets(p, pi)?;
    if !sets.is_balanced() {
        return Err(Error::QuotientNotSymmetric);
    }
    let mut images: Vec<usize> = (0..p.len()).collect();
    for i in 0..sets.blocks() {
        for j in i + 1..sets.blocks() {
            for (&x, &y) in sets.get(i, j).iter().zip(sets.get(j, i)) {
                images[x] = y;
                images[y] = x;
            }
        }
    }
    Ok(Permutation::from_images(images).expect("pairing of disjoint sets is a bijection"))
}

/// Neighborhood partition of `k` copies of `h`.
pub fn copies_partition(h: &Graph, k: usize) -> Result<Partition> {
    Ok(neighborhood_partition(&h.disjoint_copies(k)?))
}

/// An involution `q` with `Ã Q Ã = Ã P Ã`, built on the neighborhood
/// partition of `k` copies of `h`. Fails with
/// [`Error::QuotientNotSymmetric`] when the transfer counts are unbalanced;
/// no involution is promised by this route then.
pub fn reduce_to_involution(h: &Graph, k: usize, p: &Permutation) -> Result<Permutation> {
    reduce_with_partition(p, &copies_partition(h, k)?)
}

/// `∏_{i,j} p_{ij}!` over all ordered block pairs, where `p_{ij} = |V_{i,j}|`.
///
/// This is the closed-form count of equivalent involutions as usually
/// stated. It is reported as is; it is not the number of involutions
/// produced by [`bijection_system_involutions`], which is
/// `∏_{i<j} p_{ij}! · ∏_i t(p_{ii})` with `t` the involution count.
pub fn count_involution_candidates(p: &Permutation, pi: &Partition) -> Result<BigUint> {
    let counts = permutation_quotient_counts(p, pi)?;
    if !counts.is_symmetric() {
        return Err(Error::QuotientNotSymmetric);
    }
    let mut total = BigUint::one();
    for i in 0..counts.rows() {
        for j in 0..counts.cols() {
            total *= factorial(counts[(i, j)].to_usize().expect("count fits in usize"));
        }
    }
    Ok(total)
}

/// Exact number of involutions arising from bijection systems on the
/// transfer sets of `p`.
pub fn bijection_system_count(p: &Permutation, pi: &Partition) -> Result<BigUint> {
    let sets = transfer_sets(p, pi)?;
    if !sets.is_balanced() {
        return Err(Error::QuotientNotSymmetric);
    }
    let m = sets.blocks();
    let mut total = BigUint::one();
    for i in 0..m {
        total *= involution_count(sets.get(i, i).len());
        for j in i + 1..m {
            total *= factorial(sets.get(i, j).len());
        }
    }
    Ok(total)
}

/// Every involution obtained by choosing a bijection `V_{i,j} → V_{j,i}` for
/// each `i < j` and an involution on each `V_{i,i}`. Sorted.
pub fn bijection_system_involutions(p: &Permutation, pi: &Partition, cap: u64) -> Result<Vec<Permutation>> {
    let total = bijection_system_count(p, pi)?;
    if total > BigUint::from(cap) {
        return Err(Error::TooLarge {
            size: total.to_string(),
            cap: cap.to_string(),
        });
    }
    let sets = transfer_sets(p, pi)?;
    let m = sets.blocks();
    // Each factor is a list of alternative partial assignments.
    let mut factors: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    for i in 0..m {
        let diag = sets.get(i, i);
        if diag.len() > 1 {
            factors.push(
                SymmetricGroup::new(diag.len())
                    .involutions()
                    .iter()
                    .map(|s| (0..diag.len()).map(|a| (diag[a], diag[s.apply(a)])).collect())
                    .collect(),
            );
        }
        for j in i + 1..m {
            let (from, to) = (sets.get(i, j), sets.get(j, i));
            if from.is_empty() {
                continue;
            }
            factors.push(
                SymmetricGroup::new(from.len())
                    .iter()
                    .map(|s| {
                        (0..from.len())
                            .flat_map(|a| [(from[a], to[s.apply(a)]), (to[s.apply(a)], from[a])])
                            .collect()
                    })
                    .collect(),
            );
        }
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..p.len()).collect();
    expand(&factors, 0, &mut images, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn expand(factors: &[Vec<Vec<(usize, usize)>>], at: usize, images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    let Some(options) = factors.get(at) else {
        out.push(Permutation::from_images(images.clone()).expect("bijection system yields a permutation"));
        return;
    };
    for option in options {
        for &(x, y) in option {
            images[x] = y;
        }
        expand(factors, at + 1, images, out);
    }
}

/// All involutions `q` of `Sym(k·m)` (identity included) with
/// `Ã Q Ã = Ã P Ã`, sorted. Fails with [`Error::TooLarge`] when the number
/// of involutions to test exceeds `cap`.
pub fn brute_force_equivalent_involutions(h: &Graph, k: usize, p: &Permutation, cap: u64) -> Result<Vec<Permutation>> {
    let space = PowerSpace::new(h, k)?;
    equivalent_involutions_in(&space, p, cap)
}

pub fn equivalent_involutions_in(space: &PowerSpace, p: &Permutation, cap: u64) -> Result<Vec<Permutation>> {
    let target = space.product(p)?;
    let total = involution_count(space.size());
    if total > BigUint::from(cap) {
        return Err(Error::TooLarge {
            size: total.to_string(),
            cap: cap.to_string(),
        });
    }
    let mut out = Vec::new();
    for q in SymmetricGroup::new(space.size()).involutions() {
        if space.product(&q)? == target {
            out.push(q);
        }
    }
    Ok(out)
}

/// Result of the invertible-quotient route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FastPath {
    /// The quotient is invertible and the product symmetric; here is an
    /// equivalent involution.
    Reduced(Permutation),
    /// `Ã P Ã` is not symmetric, so there is no power to reduce.
    NotSymmetric,
    /// The adjacency quotient is singular; the route does not apply.
    SingularQuotient,
}

/// If `Ã/π̂` is invertible and `Ã P Ã` symmetric, symmetry of the product
/// forces symmetry of the permutation quotient and the reduction succeeds.
pub fn invertible_quotient_fast_path(h: &Graph, k: usize, p: &Permutation) -> Result<FastPath> {
    let space = PowerSpace::new(h, k)?;
    if !space.is_symmetric(p)? {
        return Ok(FastPath::NotSymmetric);
    }
    let pi = neighborhood_partition(space.copies());
    let quotient = quotient_adjacency(space.copies(), &pi)?;
    if !quotient.is_invertible() {
        return Ok(FastPath::SingularQuotient);
    }
    Ok(FastPath::Reduced(reduce_with_partition(p, &pi)?))
}
