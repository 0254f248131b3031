//! Permutational powers: the products `Ã P Ã` with `Ã = I_k ⊗ A_H`.
//!
//! Two independent decision procedures are provided. The direct one builds
//! `Ã P Ã` in exact integer arithmetic and compares entries. The projected
//! one uses a basis `B` of `range(Ã)`: since `ker Ã = range(Ã)^⊥` for
//! symmetric `Ã`,
//!
//! ```text
//! Ã P Ã = Ã Q Ã  ⇔  (P − Q) maps range(Ã) into ker(Ã)  ⇔  Bᵀ (P − Q) B = 0,
//! ```
//!
//! and taking `Q = Pᵀ` gives the symmetry test `Bᵀ P B` symmetric.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{range_kernel_split, RationalMatrix};
use crate::matrix::IntegerMatrix;
use crate::perm::{Permutation, SymmetricGroup};

/// `k` copies of a base graph `H`, the space on which permutations act.
#[derive(Clone, Debug)]
pub struct PowerSpace {
    base: Graph,
    copies: Graph,
    k: usize,
    support: Vec<Vec<(usize, BigInt)>>,
}

impl PowerSpace {
    pub fn new(base: &Graph, k: usize) -> Result<Self> {
        let copies = base.disjoint_copies(k)?;
        let support = (0..copies.vertex_count()).map(|v| copies.neighbors(v)).collect();
        Ok(PowerSpace {
            base: base.clone(),
            copies,
            k,
            support,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The disjoint union, adjacency `Ã`.
    pub fn copies(&self) -> &Graph {
        &self.copies
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertices per copy.
    pub fn m(&self) -> usize {
        self.base.vertex_count()
    }

    /// Total number of points `k * m`.
    pub fn size(&self) -> usize {
        self.copies.vertex_count()
    }

    pub fn check(&self, p: &Permutation) -> Result<()> {
        if p.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: p.len(),
            });
        }
        Ok(())
    }

    /// `Ã M(p) Ã`, entry `(x, y) = Σ_l Ã[x][l] · Ã[p(l)][y]`.
    pub fn product(&self, p: &Permutation) -> Result<IntegerMatrix> {
        self.check(p)?;
        let n = self.size();
        let mut out = IntegerMatrix::zeros(n, n);
        for x in 0..n {
            for (l, a) in &self.support[x] {
                for (y, b) in &self.support[p.apply(*l)] {
                    if a.is_one() && b.is_one() {
                        out[(x, *y)] += 1;
                    } else {
                        out[(x, *y)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Direct symmetry test of `Ã P Ã`.
    pub fn is_symmetric(&self, p: &Permutation) -> Result<bool> {
        Ok(self.product(p)?.is_symmetric())
    }

    pub fn power(&self, p: &Permutation) -> Result<PowerResult> {
        let product = self.product(p)?;
        let symmetric = product.is_symmetric();
        let graph = symmetric.then(|| Graph::from_adjacency(product.clone()).expect("symmetric nonnegative product"));
        Ok(PowerResult {
            product,
            symmetric,
            graph,
        })
    }

    pub fn products_equal(&self, p: &Permutation, q: &Permutation) -> Result<bool> {
        self.check(q)?;
        Ok(self.product(p)? == self.product(q)?)
    }
}

/// `Ã P Ã` together with its symmetry verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerResult {
    pub product: IntegerMatrix,
    pub symmetric: bool,
    /// The permutational power, present iff the product is symmetric.
    pub graph: Option<Graph>,
}

pub fn permutational_power(h: &Graph, k: usize, p: &Permutation) -> Result<PowerResult> {
    PowerSpace::new(h, k)?.power(p)
}

pub fn products_equal(h: &Graph, k: usize, p: &Permutation, q: &Permutation) -> Result<bool> {
    PowerSpace::new(h, k)?.products_equal(p, q)
}

/// `(sym(p), sym(p⁻¹))`. The two flags always agree.
pub fn inverse_symmetry(h: &Graph, k: usize, p: &Permutation) -> Result<(bool, bool)> {
    let space = PowerSpace::new(h, k)?;
    Ok((space.is_symmetric(p)?, space.is_symmetric(&p.inverse())?))
}

/// Range-projection form of the equality and symmetry tests.
///
/// Holds an integral basis `B` (columns) of `range(Ã)`; see the module docs.
#[derive(Clone, Debug)]
pub struct RangeProjector {
    basis: IntegerMatrix,
    support: Vec<Vec<(usize, BigInt)>>,
}

impl RangeProjector {
    pub fn new(space: &PowerSpace) -> Result<Self> {
        let a = RationalMatrix::from(space.copies().adjacency());
        let basis = range_kernel_split(&a)?.integral_range_basis();
        let support = (0..basis.rows()).map(|i| basis.row_support(i)).collect();
        Ok(RangeProjector { basis, support })
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// `Bᵀ M(p) B`, entry `(a, b) = Σ_i B[i][a] · B[p(i)][b]`.
    pub fn project(&self, p: &Permutation) -> Result<IntegerMatrix> {
        let n = self.basis.rows();
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
        let r = self.rank();
        let mut out = IntegerMatrix::zeros(r, r);
        for i in 0..n {
            for (a, x) in &self.support[i] {
                for (b, y) in &self.support[p.apply(i)] {
                    out[(*a, *b)] += x * y;
                }
            }
        }
        Ok(out)
    }

    pub fn equal(&self, p: &Permutation, q: &Permutation) -> Result<bool> {
        Ok(self.project(p)? == self.project(q)?)
    }

    pub fn is_symmetric(&self, p: &Permutation) -> Result<bool> {
        Ok(self.project(p)?.is_symmetric())
    }
}

pub fn range_projection_equal(h: &Graph, k: usize, p: &Permutation, q: &Permutation) -> Result<bool> {
    let space = PowerSpace::new(h, k)?;
    space.check(p)?;
    space.check(q)?;
    RangeProjector::new(&space)?.equal(p, q)
}

pub fn is_symmetric_product_projected(h: &Graph, k: usize, p: &Permutation) -> Result<bool> {
    let space = PowerSpace::new(h, k)?;
    space.check(p)?;
    RangeProjector::new(&space)?.is_symmetric(p)
}

/// Outcome of a search for `p` with `Ã P Ã` symmetric but `Ã P^h Ã` not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSearch {
    pub scanned: u64,
    pub symmetric: u64,
    /// Powers `p^h`, `2 ≤ h < order(p)`, checked across all symmetric `p`.
    pub powers_checked: u64,
    pub found: Option<(Permutation, u64)>,
}

/// Scans at most `budget` candidates and stops at the first witness.
pub fn search_power_counterexample<I>(space: &PowerSpace, candidates: I, budget: u64) -> Result<PowerSearch>
where
    I: IntoIterator<Item = Permutation>,
{
    let mut out = PowerSearch {
        scanned: 0,
        symmetric: 0,
        powers_checked: 0,
        found: None,
    };
    for p in candidates.into_iter().take(budget.try_into().unwrap_or(usize::MAX)) {
        out.scanned += 1;
        if !space.is_symmetric(&p)? {
            continue;
        }
        out.symmetric += 1;
        let mut power = p.compose(&p);
        let mut h = 2;
        while !power.is_identity() {
            out.powers_checked += 1;
            if !space.is_symmetric(&power)? {
                out.found = Some((p, h));
                return Ok(out);
            }
            power = power.compose(&p);
            h += 1;
        }
    }
    Ok(out)
}

/// Exhaustive variant over `Sym(k·m)` in lexicographic order.
pub fn search_power_counterexample_exhaustive(space: &PowerSpace, budget: u64) -> Result<PowerSearch> {
    search_power_counterexample(space, SymmetricGroup::new(space.size()).iter(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_graph, path_graph};

    #[test]
    fn identity_gives_square() {
        let c4 = cycle_graph(4).unwrap();
        let space = PowerSpace::new(&c4, 2).unwrap();
        let res = space.power(&Permutation::identity(8)).unwrap();
        assert!(res.symmetric);
        let a = space.copies().adjacency();
        assert_eq!(res.product, a * a);
        assert_eq!(res.graph.unwrap().adjacency(), &res.product);
    }

    #[test]
    fn sparse_product_matches_dense() {
        let h = path_graph(3).unwrap();
        let space = PowerSpace::new(&h, 2).unwrap();
        let a = space.copies().adjacency();
        for p in SymmetricGroup::new(6).iter().step_by(7) {
            assert_eq!(space.product(&p).unwrap(), &(a * &p.matrix()) * a);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let c4 = cycle_graph(4).unwrap();
        let err = permutational_power(&c4, 2, &Permutation::identity(4)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 8, found: 4 });
        assert!(products_equal(&c4, 1, &Permutation::identity(4), &Permutation::identity(5)).is_err());
        assert!(range_projection_equal(&c4, 1, &Permutation::identity(4), &Permutation::identity(5)).is_err());
    }

    #[test]
    fn three_cycle_on_c8_is_not_symmetric() {
        let c8 = cycle_graph(8).unwrap();
        let p = Permutation::parse_cycles("(0 1 2)", 8).unwrap();
        assert!(!is_symmetric_product_projected(&c8, 1, &p).unwrap());
        assert_eq!(inverse_symmetry(&c8, 1, &p).unwrap(), (false, false));
    }

    #[test]
    fn zero_budget_finds_nothing() {
        let c4 = cycle_graph(4).unwrap();
        let space = PowerSpace::new(&c4, 1).unwrap();
        let out = search_power_counterexample_exhaustive(&space, 0).unwrap();
        assert_eq!(out.scanned, 0);
        assert!(out.found.is_none());
    }
}
