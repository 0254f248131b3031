//! Graph families and the theory of first powers of cycles.
//!
//! For `C_n` with `4 | n`, the star involution `i* = i + n/2 (mod n)`
//! satisfies `λ^{i*} = −λ^i` for every `n`-th root of unity `λ` with
//! `λ^{n/2} = −1`. First powers of `C_n` are decided by two families of
//! pairwise conditions on `p` and `p⁻¹` (see [`cyclic_symmetry_conditions`]);
//! for `n > 8` only involutions satisfy them, while `C_8` admits exactly 112
//! valid non-involutions, listed by [`c8_all_valid_noninvolutions`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;
use crate::perm::{Permutation, SymmetricGroup};

/// The cycle `C_n`, `n ≥ 3`, with edges `i ~ i+1 (mod n)`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// The path `P_n` on `n ≥ 1` vertices.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::TooSmall("path needs at least 1 vertex".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{m,n}` with the `m` side first: vertices `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::TooSmall(format!("K_{{{m},{n}}} needs both sides nonempty")));
    }
    let adj = IntegerMatrix::from_fn(m + n, m + n, |i, j| if (i < m) != (j < m) { 1.into() } else { 0.into() });
    Graph::from_adjacency(adj)
}

/// The complete graph `K_n`, `n ≥ 1`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::TooSmall("complete graph needs at least 1 vertex".into()));
    }
    Graph::from_adjacency(IntegerMatrix::from_fn(n, n, |i, j| u8::from(i != j).into()))
}

/// `i* = (i + n/2) mod n`.
pub fn star_involution(i: usize, n: usize) -> Result<usize> {
    if !n.is_multiple_of(4) || n == 0 {
        return Err(Error::NotDivisibleBy4(n));
    }
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    Ok((i + n / 2) % n)
}

/// Evaluates the pairwise conditions that decide symmetry of `A P A` for
/// `A = A_{C_n}`, `4 | n`, at a primitive root of unity.
///
/// For `i ≠ j`, `i ≡ j (mod 4)`:
/// `(p(i), p(j)) = (p⁻¹(i), p⁻¹(j))` or `(p(i), p(j)) = (p⁻¹(j)*, p⁻¹(i)*)`.
///
/// For `i ≡ j + 2 (mod 4)`:
/// `(p(i), p(j)) = (p⁻¹(i), p⁻¹(j))` or `(p(i), p(j)) = (p⁻¹(j), p⁻¹(i))`
/// or `(p(i), p⁻¹(i)) = (p(j)*, p⁻¹(j)*)`.
pub fn cyclic_symmetry_conditions(p: &Permutation, n: usize) -> Result<bool> {
    if !n.is_multiple_of(4) || n == 0 {
        return Err(Error::NotDivisibleBy4(n));
    }
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.len(),
        });
    }
    let inv = p.inverse();
    let star = |x: usize| (x + n / 2) % n;
    let (f, g) = (|x| p.apply(x), |x| inv.apply(x));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let ok = match (i + 4 - j % 4) % 4 {
                0 => (f(i), f(j)) == (g(i), g(j)) || (f(i), f(j)) == (star(g(j)), star(g(i))),
                2 => {
                    (f(i), f(j)) == (g(i), g(j))
                        || (f(i), f(j)) == (g(j), g(i))
                        || (f(i), g(i)) == (star(f(j)), star(g(j)))
                }
                _ => true,
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The named 4-cycles and the 16 alternating double 4-cycles of `C_8`,
/// 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C8Catalog {
    /// 4-cycles on the odd labels of `1..=8`, i.e. even 0-based points.
    pub sigmas: Vec<Permutation>,
    /// 4-cycles on the even labels of `1..=8`, i.e. odd 0-based points.
    pub taus: Vec<Permutation>,
    pub gammas: Vec<Permutation>,
}

fn from_one_based(cycles: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Permutation::from_cycles(8, &cycles).expect("catalog cycles are disjoint")
}

/// Star on 1-based labels of `[8]`.
fn star8(x: usize) -> usize {
    (x + 3) % 8 + 1
}

pub fn c8_catalog() -> C8Catalog {
    let sigmas = [[1, 3, 7, 5], [1, 7, 3, 5], [1, 5, 3, 7], [1, 5, 7, 3]]
        .iter()
        .map(|c| from_one_based(&[c]))
        .collect();
    let taus = [[2, 4, 8, 6], [2, 8, 4, 6], [2, 6, 4, 8], [2, 6, 8, 4]]
        .iter()
        .map(|c| from_one_based(&[c]))
        .collect();
    // (1 a b c)(5 c* b* a*) with a even, b ∈ {3, 7}, c even and c ∉ {a, a*}.
    // Ordered as c = a + 2 then c = a − 2 (mod 8 on even labels), then b,
    // then a.
    let mut gammas = Vec::with_capacity(16);
    for shift in [2usize, 6] {
        for b in [3usize, 7] {
            for a in [2usize, 4, 6, 8] {
                let c = (a + shift - 1) % 8 + 1;
                gammas.push(from_one_based(&[&[1, a, b, c], &[5, star8(c), star8(b), star8(a)]]));
            }
        }
    }
    C8Catalog { sigmas, taus, gammas }
}

/// The 112 non-involutions `p ∈ Sym(8)` with `A_{C_8} P A_{C_8}` symmetric:
/// `q σ_i`, `s τ_j`, `σ_i τ_j` and `γ_k`, where `q` (resp. `s`) ranges over
/// permutations of order at most 2 fixing every odd (resp. even) label.
pub fn c8_all_valid_noninvolutions() -> Vec<Permutation> {
    let cat = c8_catalog();
    // 1-based odd labels are the 0-based even points.
    let on_points = |points: [usize; 4]| -> Vec<Permutation> {
        SymmetricGroup::new(4)
            .involutions()
            .iter()
            .map(|s| {
                let mut images: Vec<usize> = (0..8).collect();
                for a in 0..4 {
                    images[points[a]] = points[s.apply(a)];
                }
                Permutation::from_images(images).expect("involution on a subset")
            })
            .collect()
    };
    let fixing_odd_labels = on_points([1, 3, 5, 7]);
    let fixing_even_labels = on_points([0, 2, 4, 6]);
    let mut out = BTreeSet::new();
    for sigma in &cat.sigmas {
        for q in &fixing_odd_labels {
            out.insert(q.compose(sigma));
        }
    }
    for tau in &cat.taus {
        for s in &fixing_even_labels {
            out.insert(s.compose(tau));
        }
    }
    for sigma in &cat.sigmas {
        for tau in &cat.taus {
            out.insert(sigma.compose(tau));
        }
    }
    out.extend(cat.gammas.iter().cloned());
    out.into_iter().collect()
}

/// Outcome of the exhaustive root-of-unity scan.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSumReport {
    pub n: usize,
    pub tuples: u64,
    /// Quadruples with `ζ^{i1} + ζ^{i2} = ζ^{i3} + ζ^{i4}` (numerically).
    pub equalities: u64,
    /// Equalities where neither `i1 = i2* ∧ i3 = i4*` nor
    /// `{i1, i2} = {i3, i4}` holds.
    pub violations: Vec<[usize; 4]>,
    /// Magnitudes that fell in `[1e-12, 1e-6]`.
    pub band_hits: Vec<f64>,
    /// Smallest magnitude above the zero threshold.
    pub min_nonzero: f64,
}

impl RootSumReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.band_hits.is_empty()
    }
}

const ZERO_TOL: f64 = 1e-9;
const BAND: (f64, f64) = (1e-12, 1e-6);

/// Scans all `n⁴` quadruples with `ζ = exp(2πi/n)`.
pub fn root_sum_scan(n: usize) -> Result<RootSumReport> {
    if !n.is_multiple_of(4) || n == 0 {
        return Err(Error::NotDivisibleBy4(n));
    }
    if n > 24 {
        return Err(Error::TooLarge {
            size: format!("{n}"),
            cap: "24".into(),
        });
    }
    let roots: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = 2.0 * core::f64::consts::PI * i as f64 / n as f64;
            (libm::cos(t), libm::sin(t))
        })
        .collect();
    let star = |x: usize| (x + n / 2) % n;
    let mut report = RootSumReport {
        n,
        tuples: 0,
        equalities: 0,
        violations: vec![],
        band_hits: vec![],
        min_nonzero: f64::INFINITY,
    };
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                for i4 in 0..n {
                    report.tuples += 1;
                    let re = roots[i1].0 + roots[i2].0 - roots[i3].0 - roots[i4].0;
                    let im = roots[i1].1 + roots[i2].1 - roots[i3].1 - roots[i4].1;
                    let mag = libm::sqrt(re * re + im * im);
                    if (BAND.0..=BAND.1).contains(&mag) {
                        report.band_hits.push(mag);
                    }
                    if mag < ZERO_TOL {
                        report.equalities += 1;
                        let antipodal = i1 == star(i2) && i3 == star(i4);
                        let same = (i1 == i3 && i2 == i4) || (i1 == i4 && i2 == i3);
                        if !antipodal && !same {
                            report.violations.push([i1, i2, i3, i4]);
                        }
                    } else if mag < report.min_nonzero {
                        report.min_nonzero = mag;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `true` iff the scan finds no violation. Any magnitude in the ambiguous
/// band `[1e-12, 1e-6]` is an error rather than a verdict.
pub fn verify_root_sum_lemma(n: usize) -> Result<bool> {
    let report = root_sum_scan(n)?;
    if let Some(&mag) = report.band_hits.first() {
        return Err(Error::ToleranceBand(mag));
    }
    Ok(report.violations.is_empty())
}
