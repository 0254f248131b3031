//! Equitable partitions, the neighborhood partition and exact quotients.
//!
//! The characteristic matrix of a partition `π = {C_1, …, C_m}` is
//! `M_π = N D^{-1/2}`, where `N` is the 0/1 indicator matrix
//! (`N[v][i] = 1` iff `v ∈ C_i`) and `D = diag(|C_1|, …, |C_m|)`. The
//! square roots are never formed. For any square `X`,
//!
//! ```text
//! X/π = M_πᵀ X M_π = D^{-1/2} (Nᵀ X N) D^{-1/2},
//! ```
//!
//! so `X/π` is stored as the integer *count* matrix `Nᵀ X N` plus the block
//! sizes, and `(X/π)_{ij} = counts_{ij} / √(c_i c_j)`. Entries `ij` and `ji`
//! carry the same factor, hence `X/π` is symmetric iff the counts are.
//!
//! Triple products reduce the same way. With `C_A = Nᵀ Ã N`, `C_P = Nᵀ P N`:
//!
//! ```text
//! (Ã/π)(P/π)(Ã/π) = D^{-1/2} · (C_A D⁻¹ C_P D⁻¹ C_A) · D^{-1/2},
//! ```
//!
//! and conjugating by the invertible diagonal `D^{-1/2}` preserves both
//! equality and symmetry, so the rational matrix `C_A D⁻¹ C_P D⁻¹ C_A`
//! decides both questions exactly. Likewise `M_π M_πᵀ = N D⁻¹ Nᵀ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{is_invertible, RationalMatrix};
use crate::matrix::IntegerMatrix;
use crate::perm::Permutation;

/// An ordered partition of `{0, …, n-1}` into nonempty blocks. Blocks are
/// sorted and ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range for {n}")));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two blocks")));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { blocks, block_of })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of points partitioned.
    pub fn points(&self) -> usize {
        self.block_of.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    /// The 0/1 indicator matrix `N`, `n × m`.
    pub fn indicator(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.points(), self.len(), |v, i| BigInt::from(u8::from(self.block_of[v] == i)))
    }

    /// `N D⁻¹ Nᵀ = M_π M_πᵀ`: entry `(u, v)` is `1/|C|` when `u, v` share
    /// block `C`, else 0.
    pub fn averaging_matrix(&self) -> RationalMatrix {
        let sizes = self.sizes();
        RationalMatrix::from_fn(self.points(), self.points(), |u, v| {
            let b = self.block_of[u];
            if b == self.block_of[v] {
                BigRational::new(BigInt::one(), BigInt::from(sizes[b]))
            } else {
                BigRational::from_integer(BigInt::from(0))
            }
        })
    }

    fn check_points(&self, n: usize) -> Result<()> {
        if self.points() != n {
            return Err(Error::DimensionMismatch {
                expected: self.points(),
                found: n,
            });
        }
        Ok(())
    }
}

/// Classes of identical adjacency rows (diagonal included, multiplicities
/// compared exactly).
pub fn neighborhood_partition(g: &Graph) -> Partition {
    let n = g.vertex_count();
    let mut classes: BTreeMap<&[BigInt], Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(g.adjacency().row(v)).or_default().push(v);
    }
    Partition::new(n, classes.into_values().collect()).expect("row classes cover the vertex set")
}

/// Edge counts from `v` into each block, with multiplicity.
fn block_profile(g: &Graph, pi: &Partition, v: usize) -> Vec<BigInt> {
    let mut profile = vec![BigInt::from(0); pi.len()];
    for (w, mult) in g.neighbors(v) {
        profile[pi.block_of(w)] += mult;
    }
    profile
}

pub fn is_equitable(g: &Graph, pi: &Partition) -> Result<bool> {
    if pi.points() != g.vertex_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} points, graph has {}",
            pi.points(),
            g.vertex_count()
        )));
    }
    Ok(pi.blocks().iter().all(|block| {
        let first = block_profile(g, pi, block[0]);
        block[1..].iter().all(|&v| block_profile(g, pi, v) == first)
    }))
}

/// `X/π` stored exactly as `(Nᵀ X N, sizes)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientMatrix {
    pub counts: IntegerMatrix,
    pub sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn dimension(&self) -> usize {
        self.sizes.len()
    }

    /// `counts_{ij} / √(c_i c_j)`, for display only.
    pub fn entry_f64(&self, i: usize, j: usize) -> f64 {
        let c = self.counts[(i, j)].to_f64().unwrap_or(f64::NAN);
        c / libm::sqrt((self.sizes[i] * self.sizes[j]) as f64)
    }

    /// `X/π` is invertible iff its count matrix is, since the two differ by
    /// the invertible diagonal factor `D^{-1/2}` on each side.
    pub fn is_invertible(&self) -> bool {
        is_invertible(&RationalMatrix::from(&self.counts))
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts.is_symmetric()
    }
}

pub fn quotient_adjacency(g: &Graph, pi: &Partition) -> Result<QuotientMatrix> {
    if !is_equitable(g, pi)? {
        return Err(Error::NotEquitable);
    }
    let n = pi.indicator();
    let counts = &(&n.transpose() * g.adjacency()) * &n;
    Ok(QuotientMatrix {
        counts,
        sizes: pi.sizes(),
    })
}

/// `Nᵀ M(p) N`: entry `(i, j)` is `|{v ∈ C_i : p(v) ∈ C_j}|`.
pub fn permutation_quotient_counts(p: &Permutation, pi: &Partition) -> Result<IntegerMatrix> {
    pi.check_points(p.len())?;
    let mut counts = IntegerMatrix::zeros(pi.len(), pi.len());
    for v in 0..p.len() {
        counts[(pi.block_of(v), pi.block_of(p.apply(v)))] += 1;
    }
    Ok(counts)
}

pub fn is_quotient_symmetric(p: &Permutation, pi: &Partition) -> Result<bool> {
    Ok(permutation_quotient_counts(p, pi)?.is_symmetric())
}

/// `C_A D⁻¹ C_P D⁻¹ C_A`, the exact stand-in for `(Ã/π)(P/π)(Ã/π)`.
pub fn reweighted_triple_product(adjacency: &QuotientMatrix, perm_counts: &IntegerMatrix) -> RationalMatrix {
    let m = adjacency.dimension();
    assert_eq!(perm_counts.rows(), m, "quotient dimensions differ");
    let d_inv = RationalMatrix::from_fn(m, m, |i, j| {
        if i == j {
            BigRational::new(BigInt::one(), BigInt::from(adjacency.sizes[i]))
        } else {
            BigRational::from_integer(BigInt::from(0))
        }
    });
    let ca = RationalMatrix::from(&adjacency.counts);
    let cp = RationalMatrix::from(perm_counts);
    let left = &(&ca * &d_inv) * &cp;
    &(&left * &d_inv) * &ca
}
