//! Partitions, skew shapes, 2-cores and 2-quotients, signs, border strips
//! and domino tilings.

mod domino;
mod expansion;
mod jordan;

pub use domino::{domino_tilings, yamanouchi_domino_count, Domino};
pub use expansion::{removal_expansion, ExpansionTerm, SignRule, TermKind};
pub use jordan::{
    enumerate_jordan_types, is_very_even, jordan_type_violation, valid_jordan_type, LieType, Sign,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition stored as a weakly decreasing sequence of positive parts.
///
/// The derived order is lexicographic on the parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary non-negative parts: zeros are
    /// dropped and the rest sorted decreasingly.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn from_decreasing(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, or ∅ when `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 0-based, with zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for ∅.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Multiplicity `m_i` of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let mut parts = Vec::with_capacity(width);
        for j in 0..width {
            parts.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Partition { parts }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// `kλ = (kλ₁, kλ₂, …)`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition::new(self.parts.iter().map(|&p| p * k).collect())
    }

    /// `λ⟨from → to⟩`: removes the parts in `from` and inserts those in
    /// `to`; zero entries of `to` are dropped.
    pub fn replace(&self, from: &[usize], to: &[usize]) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for &f in from {
            match parts.iter().position(|&p| p == f) {
                Some(pos) => {
                    parts.remove(pos);
                }
                None => return Err(Error::PartNotPresent(from.to_vec())),
            }
        }
        parts.extend_from_slice(to);
        Ok(Partition::new(parts))
    }

    /// `b(λ) = Σ (i−1) λ_i`.
    pub fn weight_b(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (p, m) in self.multiplicities() {
            for j in 1..=m {
                z *= BigInt::from(p) * BigInt::from(j);
            }
        }
        z
    }

    /// `ε(λ) = (−1)^{b(λ)}`.
    pub fn sign(&self) -> i32 {
        if self.weight_b().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True when every part is even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Cell-wise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ≥ other`.
    pub fn dominance_geq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "dominance between {self} and {other}"
            )));
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Beta-numbers `λ_i + m − i` for `i = 1..m`, decreasing.
    pub fn beta_numbers(&self, m: usize) -> Vec<usize> {
        assert!(m >= self.len(), "beta length {m} shorter than {}", self.len());
        (0..m).map(|i| self.part(i) + m - 1 - i).collect()
    }

    /// Inverse of [`Partition::beta_numbers`] for an arbitrary set of
    /// distinct non-negative integers.
    pub fn from_beta_numbers(beta: &[usize]) -> Partition {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let m = b.len();
        Partition::new(b.iter().enumerate().map(|(i, &x)| x + i + 1 - m).collect())
    }

    fn even_beta_length(&self) -> usize {
        self.len() + self.len() % 2
    }

    /// The 2-core, obtained by sliding beads down on a two-runner abacus.
    pub fn two_core(&self) -> Partition {
        let m = self.even_beta_length();
        let beta = self.beta_numbers(m);
        let evens = beta.iter().filter(|b| *b % 2 == 0).count();
        let odds = m - evens;
        let mut core: Vec<usize> = (0..evens).map(|i| 2 * i).collect();
        core.extend((0..odds).map(|i| 2 * i + 1));
        Partition::from_beta_numbers(&core)
    }

    /// True when the 2-core has at most one cell.
    pub fn has_minimal_core(&self) -> bool {
        self.two_core().size() <= 1
    }

    /// The 2-quotient `(q₀, q₁)` computed from beta-numbers of the smallest
    /// even length `m ≥ l(λ)`: even beta-numbers give `q₀`, odd ones `q₁`.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        let m = self.even_beta_length();
        let beta = self.beta_numbers(m);
        let halves = |r: usize| -> Partition {
            let b: Vec<usize> = beta.iter().filter(|x| *x % 2 == r).map(|x| x / 2).collect();
            Partition::from_beta_numbers(&b)
        };
        (halves(0), halves(1))
    }

    /// All `μ ⊃ λ` with `μ/λ` a border strip of size `k`, with heights, in
    /// reverse lexicographic order of `μ`.
    pub fn border_strips_add(&self, k: usize) -> Vec<(Partition, usize)> {
        if k == 0 {
            return Vec::new();
        }
        let m = self.len() + k;
        let beta = self.beta_numbers(m);
        let mut out = Vec::new();
        for (idx, &x) in beta.iter().enumerate() {
            let y = x + k;
            if beta.contains(&y) {
                continue;
            }
            let height = beta.iter().filter(|&&b| b > x && b < y).count();
            let mut nb = beta.clone();
            nb[idx] = y;
            out.push((Partition::from_beta_numbers(&nb), height));
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// All `ν ⊂ λ` with `λ/ν` a border strip of size `k`, with heights, in
    /// reverse lexicographic order of `ν`.
    pub fn border_strips_remove(&self, k: usize) -> Vec<(Partition, usize)> {
        if k == 0 {
            return Vec::new();
        }
        let m = self.len();
        let beta = self.beta_numbers(m);
        let mut out = Vec::new();
        for (idx, &x) in beta.iter().enumerate() {
            if x < k || beta.contains(&(x - k)) {
                continue;
            }
            let y = x - k;
            let height = beta.iter().filter(|&&b| b > y && b < x).count();
            let mut nb = beta.clone();
            nb[idx] = y;
            out.push((Partition::from_beta_numbers(&nb), height));
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Text form `"5,3,1"`, with `"-"` for ∅.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", s.join(","))
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        if t.is_empty() || t == "-" || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_decreasing(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Column range `inner_i..outer_i` of each row (0-based, half-open).
    pub fn rows(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .map(|i| (self.inner.part(i), self.outer.part(i)))
            .collect()
    }

    /// Number of occupied rows minus one.
    pub fn height(&self) -> Result<usize> {
        let occupied = self.rows().iter().filter(|(a, b)| b > a).count();
        if occupied == 0 {
            return Err(Error::EmptyShape);
        }
        Ok(occupied - 1)
    }

    /// `ε₂`: zero without a domino tiling, otherwise the parity of the
    /// number of vertical dominoes in any tiling.
    pub fn two_sign(&self) -> i32 {
        match domino::first_tiling(self) {
            None => 0,
            Some(t) => {
                if t.iter().filter(|d| d.vertical).count() % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// True iff the shape has a domino tiling in which no two dominoes meet
    /// the same column.
    pub fn column_disjoint_domino_cover(&self) -> bool {
        let conj_out = self.outer.conjugate();
        let conj_in = self.inner.conjugate();
        let width = conj_out.len();
        let column = |c: usize| (conj_in.part(c), conj_out.part(c));
        let mut c = 0;
        while c < width {
            let (top, bottom) = column(c);
            match bottom - top {
                0 => c += 1,
                2 => c += 1,
                1 => {
                    if c + 1 >= width {
                        return false;
                    }
                    let (t2, b2) = column(c + 1);
                    if b2 - t2 != 1 || t2 != top {
                        return false;
                    }
                    c += 2;
                }
                _ => return false,
            }
        }
        true
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests;
