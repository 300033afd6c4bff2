//! Homogeneous symmetric functions in the Schur basis with coefficients in
//! `Z[t]`.

mod hall_littlewood;
mod kostka;
mod lr;
mod operators;
mod sf2;
mod tables;

pub use hall_littlewood::{green, green_X, green_at, green_table, hall_littlewood_P, qprime, GreenTable};
pub use kostka::{charge, for_each_ssyt, kostka_data, kostka_foulkes, reading_word, KostkaData};
pub use lr::{lr_coefficient, lr_product};
pub use operators::{
    complete, plethysm_p2, power_sum_coefficients, schur_expand_p, skew_by_p, verschiebung,
};
pub use sf2::SymFunc2;
pub use tables::{degree, mn_character, DegreeData};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::IntPoly;

/// An element of `Λⁿ ⊗ Z[t]` written as `Σ c_λ(t) s_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<Partition, IntPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// The unit `s_∅` of degree 0.
    pub fn unit() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, IntPoly::one());
        SymFunc { degree, coeffs }
    }

    /// Builds from `(λ, c)` pairs; every `λ` must have size `degree`.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, IntPoly)>) -> Result<Self> {
        let mut f = SymFunc::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch(format!("{lambda} in degree {degree}")));
            }
            f.add_term(lambda, &c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `s_λ`.
    pub fn coeff(&self, lambda: &Partition) -> IntPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &IntPoly)> {
        self.coeffs.iter()
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: &IntPoly) {
        debug_assert_eq!(lambda.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        same_degree(self, other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&IntPoly::from(-1)))
    }

    pub fn scale(&self, c: &IntPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for (l, x) in &self.coeffs {
            out.add_term(l.clone(), &(x * c));
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> SymFunc {
        self.scale(&IntPoly::from(c))
    }

    /// Substitutes `t = v` in every coefficient.
    pub fn eval_t(&self, v: i64) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for (l, x) in &self.coeffs {
            out.add_term(l.clone(), &IntPoly::constant(x.eval_i64(v)));
        }
        out
    }

    /// Hall inner product, Schur functions orthonormal.
    pub fn scalar(&self, other: &SymFunc) -> Result<IntPoly> {
        same_degree(self, other)?;
        let mut acc = IntPoly::zero();
        for (l, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(l) {
                acc += &(c * d);
            }
        }
        Ok(acc)
    }

    /// The involution `ω: s_λ ↦ s_{λ′}`.
    pub fn omega(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for (l, c) in &self.coeffs {
            out.add_term(l.conjugate(), c);
        }
        out
    }

    /// Product in the Schur basis by the Littlewood–Richardson rule.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero(self.degree + other.degree);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let c = ca * cb;
                for (nu, m) in lr_product(a, b).iter() {
                    out.add_term(nu.clone(), &c.scale(&BigInt::from(*m)));
                }
            }
        }
        out
    }

    /// Applies an integer matrix given on Schur functions.
    pub(crate) fn apply(&self, target_degree: usize, image: impl Fn(&Partition) -> Vec<(Partition, BigInt)>) -> SymFunc {
        let mut out = SymFunc::zero(target_degree);
        for (l, c) in &self.coeffs {
            for (nu, a) in image(l) {
                out.add_term(nu, &c.scale(&a));
            }
        }
        out
    }
}

fn same_degree(a: &SymFunc, b: &SymFunc) -> Result<()> {
    if a.degree != b.degree {
        return Err(Error::SizeMismatch(format!("degrees {} and {}", a.degree, b.degree)));
    }
    Ok(())
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`; zero unless `μ ⊆ λ`.
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(lambda.size().saturating_sub(mu.size()));
    if !lambda.contains(mu) {
        return out;
    }
    let deg = degree(lambda.size() - mu.size());
    for nu in &deg.parts {
        if !lambda.contains(nu) {
            continue;
        }
        let c = lr_coefficient(lambda, mu, nu);
        if c > 0 {
            out.add_term(nu.clone(), &IntPoly::constant(BigInt::from(c)));
        }
    }
    out
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| {
                if c.as_constant().is_some() {
                    format!("{c}·s{l}")
                } else {
                    format!("({c})·s{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    poly: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            degree: self.degree,
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| TermJson { partition: l.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(deserializer)?;
        SymFunc::from_terms(raw.degree, raw.terms.into_iter().map(|t| (t.partition, t.poly)))
            .map_err(serde::de::Error::custom)
    }
}
