//! Undirected multigraphs stored as symmetric integer adjacency matrices.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// A finite undirected graph with loops and multi-edges.
///
/// Entry `(u, v)` of the adjacency matrix is the number of edges joining `u`
/// and `v`; the diagonal counts loops. The degree of a vertex is its row sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: IntegerMatrix,
}

impl Graph {
    /// Validates `matrix` as an adjacency matrix: square, nonempty,
    /// symmetric, nonnegative.
    pub fn from_adjacency(matrix: IntegerMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() == 0 {
            return Err(Error::Empty);
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in 0..n {
                if matrix[(i, j)].sign() == Sign::Minus {
                    return Err(Error::NegativeEntry { row: i, col: j });
                }
            }
        }
        if let Some((row, col)) = matrix.asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        Ok(Graph { adj: matrix })
    }

    /// Builds a graph from an edge list. A pair `(v, v)` adds one loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut adj = IntegerMatrix::zeros(n, n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, len: n });
                }
            }
            adj[(u, v)] += 1;
            if u != v {
                adj[(v, u)] += 1;
            }
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &IntegerMatrix {
        &self.adj
    }

    pub fn into_adjacency(self) -> IntegerMatrix {
        self.adj
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> &BigInt {
        &self.adj[(u, v)]
    }

    pub fn degree(&self, v: usize) -> BigInt {
        self.adj.row_sum(v)
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<BigInt> {
        let d = self.degree(0);
        (1..self.vertex_count())
            .all(|v| self.degree(v) == d)
            .then_some(d)
    }

    /// Neighbors of `v` with edge multiplicities.
    pub fn neighbors(&self, v: usize) -> Vec<(usize, BigInt)> {
        self.adj.row_support(v)
    }

    /// `k` disjoint copies: adjacency `I_k ⊗ A`. Vertex `x` of the result is
    /// local vertex `x % n` of copy `x / n`.
    pub fn disjoint_copies(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::TooSmall("number of copies must be positive".into()));
        }
        Ok(Graph {
            adj: self.adj.kron_identity(k),
        })
    }

    /// Connected components by BFS over the edge support, each sorted, in
    /// order of smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for (w, _) in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn edge_count(&self) -> BigInt {
        let n = self.vertex_count();
        let mut total = BigInt::zero();
        for i in 0..n {
            for j in i..n {
                total += &self.adj[(i, j)];
            }
        }
        total
    }

    /// Whether rows `u` and `v` of the adjacency matrix coincide.
    pub fn same_neighborhood(&self, u: usize, v: usize) -> bool {
        self.adj.row(u) == self.adj.row(v)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.adj[(v, v)] >= BigInt::one())
    }
}
