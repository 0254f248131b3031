//! Exact zig-zag products and permutational powers of graphs.
//!
//! The crate works with undirected multigraphs given by symmetric
//! nonnegative integer adjacency matrices and with permutations acting on
//! the vertices of `k` disjoint copies of a graph `H`. For a permutation `p`
//! with matrix `P`, the *permutational k-th power* of `H` is the graph whose
//! adjacency matrix is `Ã P Ã` with `Ã = I_k ⊗ A_H`, defined whenever that
//! product is symmetric. When `p` is an involution this is a classical
//! zig-zag product; the interesting cases are the non-involutive `p` that
//! still give a symmetric product.
//!
//! Everything here is exact: integer matrices use arbitrary-precision
//! integers and linear algebra runs over the rationals. The only floating
//! point code is the spectral-gap estimator and the root-of-unity scan.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! # Layout
//!
//! - [`matrix`], [`graph`], [`perm`]: integer matrices, graphs, permutations.
//! - [`linalg`]: rational matrices, RREF, range/kernel bases.
//! - [`zigzag`]: rotation maps, the zig-zag product, cloud graphs.
//! - [`power`]: permutational powers and their symmetry/equality tests.
//! - [`partition`]: equitable partitions and exact quotient matrices.
//! - [`reduction`]: reducing a valid permutation to an equivalent involution.
//! - [`families`]: cycles, paths, complete bipartite graphs and the `C_8`
//!   catalog.
//! - [`spectral`]: power-iteration estimate of the second eigenvalue.
//!
//! # Conventions
//!
//! Vertices are 0-based. The matrix of a permutation `p` has
//! `M(p)[i][p(i)] = 1`, so `(M(p) v)_i = v_{p(i)}`. In `k` copies of a graph
//! on `m` vertices, vertex `x` is local vertex `x % m` of copy `x / m`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod power;
pub mod reduction;
pub mod spectral;
pub mod zigzag;

pub use error::{Error, Result};
pub use graph::Graph;
pub use linalg::{RangeKernelSplit, RationalMatrix};
pub use matrix::IntegerMatrix;
pub use partition::{Partition, QuotientMatrix};
pub use perm::Permutation;
pub use power::{PowerResult, PowerSpace};
pub use zigzag::{CloudGraph, LabeledGraph};
