//! Permutations of `{0, …, n-1}`, their text forms and enumeration.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// A bijection of `{0, …, n-1}`, stored as its image list.
///
/// Ordering is lexicographic on the image list, which is also the order in
/// which [`SymmetricGroup`] enumerates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
            if seen[x] {
                return Err(Error::RepeatedIndex(x));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `n` elements from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, len: n });
                }
                if seen[x] {
                    return Err(Error::RepeatedIndex(x));
                }
                seen[x] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(0 11)(1 9)(2 5)"`. Whitespace and
    /// commas separate entries; unlisted indices are fixed; `""` and `"()"`
    /// give the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Parse("unclosed cycle".into()));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::Parse("nested '(' in cycle".into()));
            }
            let cycle = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    /// Parses word form `"w:4,10,16,…"`: the 0-based images in order.
    pub fn parse_word(text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix("w:")
            .ok_or_else(|| Error::Parse("word form must start with 'w:'".into()))?;
        let images = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    /// Parses either text form. Word form must list exactly `n` images.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if text.trim_start().starts_with("w:") {
            let p = Self::parse_word(text)?;
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
            Ok(p)
        } else {
            Self::parse_cycles(text, n)
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// `self^e` for any integer exponent; negative exponents invert.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.len());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `p ∘ p = id`. The identity counts.
    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x] == i)
    }

    /// Nontrivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// Points with `p(i) = i`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.images[i] == i).collect()
    }

    /// Permutation matrix with `M[i][p(i)] = 1`, so `(M v)_i = v_{p(i)}`.
    pub fn matrix(&self) -> IntegerMatrix {
        let n = self.len();
        let mut m = IntegerMatrix::zeros(n, n);
        for (i, &x) in self.images.iter().enumerate() {
            m[(i, x)] = BigInt::one();
        }
        m
    }

    /// Word form, `w:` followed by the images.
    pub fn to_word(&self) -> String {
        let mut s = String::from("w:");
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{x}"));
        }
        s
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.len(), self)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Number of involutions of `n` elements (identity included):
/// `t(n) = t(n-1) + (n-1) t(n-2)`.
pub fn involution_count(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for i in 2..=n {
        let next = &b + BigUint::from(i - 1) * &a;
        a = b;
        b = next;
    }
    b
}

/// The symmetric group `Sym(n)`, enumerated in lexicographic order of image
/// lists.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricGroup {
    n: usize,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        SymmetricGroup { n }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> BigUint {
        factorial(self.n)
    }

    pub fn iter(&self) -> LexPermutations {
        LexPermutations {
            current: Some((0..self.n).collect()),
        }
    }

    /// Iterator starting at lexicographic rank `rank`.
    pub fn iter_from(&self, rank: u64) -> LexPermutations {
        LexPermutations {
            current: self.unrank(rank).map(|p| p.images),
        }
    }

    /// The permutation at lexicographic rank `rank`, if `rank < n!`.
    pub fn unrank(&self, mut rank: u64) -> Option<Permutation> {
        let n = self.n;
        if BigUint::from(rank) >= self.order() {
            return None;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let f = factorial(n - 1 - i).to_u64().unwrap_or(u64::MAX);
            let idx = (rank / f) as usize;
            rank %= f;
            images.push(pool.remove(idx));
        }
        Some(Permutation { images })
    }

    /// All involutions in lexicographic order, identity first.
    pub fn involutions(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images = vec![usize::MAX; self.n];
        involutions_rec(&mut images, 0, &mut out);
        out.sort_unstable();
        out
    }
}

fn involutions_rec(images: &mut [usize], from: usize, out: &mut Vec<Permutation>) {
    let n = images.len();
    let Some(i) = (from..n).find(|&i| images[i] == usize::MAX) else {
        out.push(Permutation {
            images: images.to_vec(),
        });
        return;
    };
    images[i] = i;
    involutions_rec(images, i + 1, out);
    for j in i + 1..n {
        if images[j] == usize::MAX {
            images[i] = j;
            images[j] = i;
            involutions_rec(images, i + 1, out);
            images[j] = usize::MAX;
        }
    }
    images[i] = usize::MAX;
}

pub struct LexPermutations {
    current: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if next_lex(&mut next) {
            self.current = Some(next);
        }
        Some(Permutation { images: cur })
    }
}

fn next_lex(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
