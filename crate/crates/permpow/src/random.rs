//! Seeded random permutations.

use permpow_core::{Graph, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("a shuffle is a permutation")
}

/// Shuffles the points, then turns each consecutive pair into a
/// transposition with probability 1/2.
pub fn random_involution<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut images: Vec<usize> = (0..n).collect();
    for pair in order.chunks_exact(2) {
        if rng.random_bool(0.5) {
            images[pair[0]] = pair[1];
            images[pair[1]] = pair[0];
        }
    }
    Permutation::from_images(images).expect("disjoint transpositions")
}

/// Pairs `(x, y)` of points in `k` copies of `h` whose local vertices have
/// identical adjacency rows, within the same copy.
pub fn twin_pairs(h: &Graph, k: usize) -> Vec<(usize, usize)> {
    let m = h.vertex_count();
    let mut out = Vec::new();
    for r in 0..m {
        for s in r + 1..m {
            if h.same_neighborhood(r, s) {
                out.extend((0..k).map(|c| (c * m + r, c * m + s)));
            }
        }
    }
    out
}

/// `p ∘ t` for a random product `t` of twin swaps. Swapping twins leaves
/// `Ã` unchanged, so the product `Ã P Ã` is unchanged too.
pub fn twin_modified<R: Rng + ?Sized>(rng: &mut R, p: &Permutation, twins: &[(usize, usize)]) -> Permutation {
    let mut t = Permutation::identity(p.len());
    for &(x, y) in twins {
        if rng.random_bool(0.5) {
            let swap = Permutation::from_cycles(p.len(), &[vec![x, y]]).expect("twins are distinct");
            t = t.compose(&swap);
        }
    }
    p.compose(&t)
}
