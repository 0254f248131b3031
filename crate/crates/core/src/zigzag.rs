//! Rotation maps, the zig-zag product and cloud graphs.
//!
//! A pair `(v, h)` (vertex, color) is flattened to the index `v * d + h`.
//! Every fixture and every matrix in this module depends on that layout.
//!
//! Loops in a rotation map: a *half loop* `Rot(v, h) = (v, h)` occupies one
//! color and contributes 1 to `a[v][v]`; a loop `Rot(v, h) = (v, k)` with
//! `h != k` occupies two colors and contributes 2. With this convention the
//! underlying multigraph has row sums equal to `d`, and the adjacency of a
//! zig-zag product is exactly `(I ⊗ A_H) P_G (I ⊗ A_H)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;
use crate::perm::Permutation;

/// A `d`-regular graph with an explicit rotation map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    d: usize,
    rot: Vec<(usize, usize)>,
}

impl LabeledGraph {
    /// Builds a labeled graph from quadruples `(v, h, w, k)` meaning
    /// `Rot(v, h) = (w, k)`. Every pair must appear exactly once and the map
    /// must be an involution.
    pub fn new(n: usize, d: usize, quads: &[(usize, usize, usize, usize)]) -> Result<Self> {
        let mut rot = vec![None; n * d];
        for &(v, h, w, k) in quads {
            if v >= n || w >= n {
                return Err(Error::InvalidRotation(format!("vertex out of range in ({v},{h},{w},{k})")));
            }
            if h >= d || k >= d {
                return Err(Error::InvalidRotation(format!("color out of range in ({v},{h},{w},{k})")));
            }
            if rot[v * d + h].replace((w, k)).is_some() {
                return Err(Error::InvalidRotation(format!("pair ({v},{h}) listed twice")));
            }
        }
        let rot = rot
            .into_iter()
            .enumerate()
            .map(|(x, r)| r.ok_or_else(|| Error::InvalidRotation(format!("pair ({},{}) missing", x / d, x % d))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_map(n, d, rot)
    }

    /// Builds a labeled graph from the full map, indexed by `v * d + h`.
    pub fn from_map(n: usize, d: usize, rot: Vec<(usize, usize)>) -> Result<Self> {
        if rot.len() != n * d {
            return Err(Error::DimensionMismatch {
                expected: n * d,
                found: rot.len(),
            });
        }
        for (x, &(w, k)) in rot.iter().enumerate() {
            if w >= n || k >= d {
                return Err(Error::InvalidRotation(format!("image ({w},{k}) out of range")));
            }
            let back = rot[w * d + k];
            if back != (x / d, x % d) {
                return Err(Error::InvalidRotation(format!(
                    "Rot(Rot({},{})) = ({},{})",
                    x / d,
                    x % d,
                    back.0,
                    back.1
                )));
            }
        }
        Ok(LabeledGraph { n, d, rot })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn rot(&self, v: usize, h: usize) -> (usize, usize) {
        self.rot[v * self.d + h]
    }

    /// All quadruples `(v, h, w, k)` in index order.
    pub fn quadruples(&self) -> Vec<(usize, usize, usize, usize)> {
        self.rot
            .iter()
            .enumerate()
            .map(|(x, &(w, k))| (x / self.d, x % self.d, w, k))
            .collect()
    }

    /// Underlying multigraph: `a[v][w] = #{h : Rot(v, h) = (w, ·)}`.
    pub fn underlying(&self) -> Graph {
        let mut adj = IntegerMatrix::zeros(self.n, self.n);
        for (x, &(w, _)) in self.rot.iter().enumerate() {
            adj[(x / self.d, w)] += 1;
        }
        Graph::from_adjacency(adj).expect("rotation map yields a symmetric adjacency")
    }

    /// The involution `v * d + h ↦ w * d + k` on `n * d` points.
    pub fn rotation_permutation(&self) -> Permutation {
        Permutation::from_images(self.rot.iter().map(|&(w, k)| w * self.d + k).collect())
            .expect("rotation map is a bijection")
    }
}

pub fn rotation_to_permutation(g: &LabeledGraph) -> Permutation {
    g.rotation_permutation()
}

/// Rotation map of `G ⓩ H`. Vertex `(v, k)` is `v * d_G + k`; color `(i, j)`
/// is `i * d_H + j`.
///
/// `Rot((v,k),(i,j)) = ((w,l),(j',i'))` where `Rot_H(k,i) = (k',i')`,
/// `Rot_G(v,k') = (w,l')` and `Rot_H(l',j) = (l,j')`.
pub fn zigzag_rotation(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    if h.n != g.d {
        return Err(Error::DimensionMismatch {
            expected: g.d,
            found: h.n,
        });
    }
    let dh = h.d;
    let mut rot = Vec::with_capacity(g.n * g.d * dh * dh);
    for v in 0..g.n {
        for k in 0..g.d {
            for i in 0..dh {
                for j in 0..dh {
                    let (k1, i1) = h.rot(k, i);
                    let (w, l1) = g.rot(v, k1);
                    let (l, j1) = h.rot(l1, j);
                    rot.push((w * g.d + l, j1 * dh + i1));
                }
            }
        }
    }
    LabeledGraph::from_map(g.n * g.d, dh * dh, rot)
}

/// `G ⓩ H` as a `d_H²`-regular multigraph on `|V_G| · d_G` vertices.
pub fn zigzag_product(g: &LabeledGraph, h: &LabeledGraph) -> Result<Graph> {
    Ok(zigzag_rotation(g, h)?.underlying())
}

/// One directed arc of a cloud graph: `p(i_s * m + j_s) = i_t * m + j_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub source_cloud: usize,
    pub source_color: usize,
    pub target_cloud: usize,
    pub target_color: usize,
}

/// The labeled graph read off a permutation of `k * m` points: `k` clouds
/// with `m` colors each, one arc per point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CloudGraph {
    k: usize,
    m: usize,
    perm: Permutation,
    arcs: Vec<Arc>,
}

impl CloudGraph {
    pub fn from_permutation(p: &Permutation, k: usize, m: usize) -> Result<Self> {
        if p.len() != k * m {
            return Err(Error::DimensionMismatch {
                expected: k * m,
                found: p.len(),
            });
        }
        let arcs = (0..k * m)
            .map(|x| {
                let y = p.apply(x);
                Arc {
                    source_cloud: x / m,
                    source_color: x % m,
                    target_cloud: y / m,
                    target_color: y % m,
                }
            })
            .collect();
        Ok(CloudGraph {
            k,
            m,
            perm: p.clone(),
            arcs,
        })
    }

    pub fn clouds(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> usize {
        self.m
    }

    /// Arc of point `x = i * m + j`, in point order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arcs from cloud `from` to cloud `to`.
    pub fn arcs_between(&self, from: usize, to: usize) -> Vec<Arc> {
        self.arcs
            .iter()
            .filter(|a| a.source_cloud == from && a.target_cloud == to)
            .copied()
            .collect()
    }

    pub fn is_undirected(&self) -> bool {
        self.perm.is_involution()
    }

    /// For an involution: one arc per transposition `(s t)` with `s < t`,
    /// plus one half loop `(i, j) → (i, j)` per fixed point.
    pub fn undirected_edges(&self) -> Option<Vec<Arc>> {
        if !self.is_undirected() {
            return None;
        }
        Some(
            (0..self.k * self.m)
                .filter(|&x| x <= self.perm.apply(x))
                .map(|x| self.arcs[x])
                .collect(),
        )
    }

    /// For an involution, the labeled `m`-regular graph on `k` vertices with
    /// `Rot(i_s, j_s) = (i_t, j_t)`.
    pub fn to_labeled_graph(&self) -> Option<LabeledGraph> {
        if !self.is_undirected() {
            return None;
        }
        let rot = self.arcs.iter().map(|a| (a.target_cloud, a.target_color)).collect();
        Some(LabeledGraph::from_map(self.k, self.m, rot).expect("involution gives a rotation map"))
    }
}

pub fn cloud_graph_from_permutation(p: &Permutation, k: usize, m: usize) -> Result<CloudGraph> {
    CloudGraph::from_permutation(p, k, m)
}
