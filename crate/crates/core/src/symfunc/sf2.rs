//! Elements of `Λ(x) ⊗ Λ(y)` in the basis `s_α(x) s_β(y)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use super::operators::schur_expand_p;
use super::tables::degree;
use super::{skew_schur, SymFunc};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::Partition;
use crate::poly::IntPoly;

static POWER_SUMS: Memo<(Partition, Partition), SymFunc2> = Memo::new();

#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc2 {
    degree: usize,
    coeffs: BTreeMap<(Partition, Partition), IntPoly>,
}

impl SymFunc2 {
    pub fn zero(degree: usize) -> Self {
        SymFunc2 { degree, coeffs: BTreeMap::new() }
    }

    /// `s_α(x) s_β(y)`.
    pub fn from_pair(alpha: Partition, beta: Partition) -> Self {
        let mut out = SymFunc2::zero(alpha.size() + beta.size());
        out.add_term(alpha, beta, &IntPoly::one());
        out
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = ((Partition, Partition), IntPoly)>,
    ) -> Result<Self> {
        let mut out = SymFunc2::zero(degree);
        for ((a, b), c) in terms {
            if a.size() + b.size() != degree {
                return Err(Error::SizeMismatch(format!("({a}, {b}) in degree {degree}")));
            }
            out.add_term(a, b, &c);
        }
        Ok(out)
    }

    /// `f(x) g(y)`.
    pub fn tensor(f: &SymFunc, g: &SymFunc) -> Self {
        let mut out = SymFunc2::zero(f.degree() + g.degree());
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_term(a.clone(), b.clone(), &(ca * cb));
            }
        }
        out
    }

    /// `p_{(ρ,σ)} = ∏ (p_{ρ_i}(x) + p_{ρ_i}(y)) ∏ (p_{σ_j}(x) − p_{σ_j}(y))`.
    pub fn p(rho: &Partition, sigma: &Partition) -> Self {
        let key = (rho.clone(), sigma.clone());
        (*POWER_SUMS.get_or_insert_with(&key, || SymFunc2::expand_p(rho, sigma))).clone()
    }

    fn expand_p(rho: &Partition, sigma: &Partition) -> Self {
        let mut out = SymFunc2::zero(rho.size() + sigma.size());
        let mut slots: Vec<(usize, usize, bool)> = Vec::new();
        for (k, m) in rho.multiplicities() {
            slots.push((k, m, false));
        }
        for (k, m) in sigma.multiplicities() {
            slots.push((k, m, true));
        }
        let mut chosen = vec![0usize; slots.len()];
        loop {
            let mut x = Vec::new();
            let mut y = Vec::new();
            let mut coeff = BigInt::from(1);
            for (&(k, m, negative), &j) in slots.iter().zip(&chosen) {
                x.extend(std::iter::repeat_n(k, m - j));
                y.extend(std::iter::repeat_n(k, j));
                coeff *= binomial(BigInt::from(m), BigInt::from(j));
                if negative && j % 2 == 1 {
                    coeff = -coeff;
                }
            }
            let term = SymFunc2::tensor(
                &schur_expand_p(&Partition::new(x)),
                &schur_expand_p(&Partition::new(y)),
            );
            out.add_scaled(&term, &IntPoly::constant(coeff));
            let mut pos = 0;
            loop {
                if pos == slots.len() {
                    return out;
                }
                if chosen[pos] < slots[pos].1 {
                    chosen[pos] += 1;
                    break;
                }
                chosen[pos] = 0;
                pos += 1;
            }
        }
    }

    /// The coproduct `Δ f = f(x, y)`, using
    /// `Δ s_λ = Σ_{μ ⊆ λ} s_μ(x) s_{λ/μ}(y)`.
    pub fn delta(f: &SymFunc) -> Self {
        let mut out = SymFunc2::zero(f.degree());
        for (lambda, c) in f.terms() {
            for k in 0..=lambda.size() {
                for mu in &degree(k).parts {
                    if !lambda.contains(mu) {
                        continue;
                    }
                    let skew = skew_schur(lambda, mu);
                    let left = SymFunc::schur(mu.clone());
                    out.add_scaled(&SymFunc2::tensor(&left, &skew), c);
                }
            }
        }
        out
    }

    /// The product map `∇: s_α(x) s_β(y) ↦ s_α s_β`.
    pub fn nabla(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for ((a, b), c) in &self.coeffs {
            let prod = SymFunc::schur(a.clone()).multiply(&SymFunc::schur(b.clone()));
            out = out.add(&prod.scale(c)).expect("degrees agree");
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, alpha: &Partition, beta: &Partition) -> IntPoly {
        self.coeffs.get(&(alpha.clone(), beta.clone())).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &IntPoly)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, alpha: Partition, beta: Partition, c: &IntPoly) {
        if c.is_zero() {
            return;
        }
        let key = (alpha, beta);
        let entry = self.coeffs.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &SymFunc2, c: &IntPoly) {
        for ((a, b), x) in &other.coeffs {
            self.add_term(a.clone(), b.clone(), &(x * c));
        }
    }

    pub fn add(&self, other: &SymFunc2) -> Result<SymFunc2> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch(format!("degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        out.add_scaled(other, &IntPoly::one());
        Ok(out)
    }

    pub fn scale(&self, c: &IntPoly) -> SymFunc2 {
        let mut out = SymFunc2::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    /// `⟨a(x) b(y), c(x) d(y)⟩ = ⟨a, c⟩⟨b, d⟩`.
    pub fn scalar(&self, other: &SymFunc2) -> Result<IntPoly> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch(format!("degrees {} and {}", self.degree, other.degree)));
        }
        let mut acc = IntPoly::zero();
        for (k, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(k) {
                acc += &(c * d);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for SymFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((a, b), c)| {
                if c.as_constant().is_some() {
                    format!("{c}·s{a}(x)s{b}(y)")
                } else {
                    format!("({c})·s{a}(x)s{b}(y)")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    alpha: Partition,
    beta: Partition,
    poly: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFunc2Json {
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFunc2Json {
            degree: self.degree,
            terms: self
                .coeffs
                .iter()
                .map(|((a, b), c)| TermJson { alpha: a.clone(), beta: b.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFunc2Json::deserialize(deserializer)?;
        SymFunc2::from_terms(raw.degree, raw.terms.into_iter().map(|t| ((t.alpha, t.beta), t.poly)))
            .map_err(serde::de::Error::custom)
    }
}
