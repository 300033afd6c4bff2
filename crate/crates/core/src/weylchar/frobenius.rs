//! Frobenius characteristic maps for `S_n` and `W(BC_n)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::table::character_table;
use super::{ClassFunction, Group, WeylType};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::IntPoly;
use crate::symfunc::{schur_expand_p, SymFunc, SymFunc2};

fn expect_type(f: &ClassFunction, ty: WeylType) -> Result<()> {
    if f.group().ty != ty {
        return Err(Error::SizeMismatch(format!("expected a class function of type {ty}, got {}", f.group())));
    }
    Ok(())
}

fn integral(m: BigRational, what: &dyn Fn() -> String) -> Result<BigInt> {
    if m.is_integer() {
        Ok(m.to_integer())
    } else {
        Err(Error::NotIntegral(format!("{} has multiplicity {m}", what())))
    }
}

fn constant(c: &IntPoly, what: &dyn Fn() -> String) -> Result<BigInt> {
    c.as_constant().ok_or_else(|| Error::NotIntegral(format!("{} has coefficient {c}, not a constant", what())))
}

/// `Ψ(f) = Σ_ρ f(ρ) p_ρ / z_ρ`, written in the Schur basis; the result
/// must have integer coefficients.
#[allow(non_snake_case)]
pub fn frobenius_A(f: &ClassFunction) -> Result<SymFunc> {
    expect_type(f, WeylType::A)?;
    let n = f.group().n;
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (c, v) in f.group().classes().iter().zip(f.values()) {
        if v.is_zero() {
            continue;
        }
        let w = v / BigRational::from_integer(c.centralizer_order.clone());
        for (mu, x) in schur_expand_p(&c.label.rho).terms() {
            let x = BigRational::from_integer(x.as_constant().expect("integer expansion"));
            *acc.entry(mu.clone()).or_insert_with(BigRational::zero) += &w * x;
        }
    }
    let mut terms = Vec::new();
    for (mu, m) in acc {
        let c = integral(m, &|| format!("s{mu}"))?;
        terms.push((mu, IntPoly::constant(c)));
    }
    SymFunc::from_terms(n, terms)
}

/// `Ψ⁻¹`, defined for functions with constant coefficients.
#[allow(non_snake_case)]
pub fn frobenius_A_inv(sf: &SymFunc) -> Result<ClassFunction> {
    let g = Group::factor(WeylType::A, sf.degree());
    let table = character_table(g);
    let mut acc = ClassFunction::zero(g);
    for (lambda, c) in sf.terms() {
        let c = constant(c, &|| format!("s{lambda}"))?;
        let i = table.irrep_index(&super::IrrLabel::a(lambda.clone()))?;
        acc = acc.add(&table.character(i).scale(&BigRational::from_integer(c)))?;
    }
    Ok(acc)
}

/// `Ψ(f) = Σ f(w_{(ρ,σ)}) p_{(ρ,σ)} / |C(w_{(ρ,σ)})|` in the basis
/// `s_α(x) s_β(y)`.
#[allow(non_snake_case)]
pub fn frobenius_BC(f: &ClassFunction) -> Result<SymFunc2> {
    expect_type(f, WeylType::BC)?;
    let n = f.group().n;
    let mut acc: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
    for (c, v) in f.group().classes().iter().zip(f.values()) {
        if v.is_zero() {
            continue;
        }
        let w = v / BigRational::from_integer(c.centralizer_order.clone());
        for (key, x) in SymFunc2::p(&c.label.rho, &c.label.sigma).terms() {
            let x = BigRational::from_integer(x.as_constant().expect("integer expansion"));
            *acc.entry(key.clone()).or_insert_with(BigRational::zero) += &w * x;
        }
    }
    let mut terms = Vec::new();
    for ((a, b), m) in acc {
        let c = integral(m, &|| format!("s{a}(x)s{b}(y)"))?;
        terms.push(((a, b), IntPoly::constant(c)));
    }
    SymFunc2::from_terms(n, terms)
}

#[allow(non_snake_case)]
pub fn frobenius_BC_inv(sf: &SymFunc2) -> Result<ClassFunction> {
    let g = Group::factor(WeylType::BC, sf.degree());
    let table = character_table(g);
    let mut acc = ClassFunction::zero(g);
    for ((a, b), c) in sf.terms() {
        let c = constant(c, &|| format!("s{a}(x)s{b}(y)"))?;
        let i = table.irrep_index(&super::IrrLabel::bc(a.clone(), b.clone()))?;
        acc = acc.add(&table.character(i).scale(&BigRational::from_integer(c)))?;
    }
    Ok(acc)
}
