//! Hall–Littlewood functions and Green polynomials.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::kostka::kostka_data;
use super::tables::degree;
use super::SymFunc;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::Partition;
use crate::poly::IntPoly;

/// `Q′_λ(t) = Σ_μ K_{μλ}(t) s_μ`.
pub fn qprime(lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    let deg = degree(n);
    let data = kostka_data(n);
    let l = deg.idx(lambda);
    let mut out = SymFunc::zero(n);
    for (m, mu) in deg.parts.iter().enumerate() {
        out.add_term(mu.clone(), &data.kf[m][l]);
    }
    out
}

/// `P_λ(t)`, defined by `s_μ = Σ_λ K_{μλ}(t) P_λ(t)`.
#[allow(non_snake_case)]
pub fn hall_littlewood_P(lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    let deg = degree(n);
    let data = kostka_data(n);
    let l = deg.idx(lambda);
    let mut out = SymFunc::zero(n);
    for (m, mu) in deg.parts.iter().enumerate() {
        out.add_term(mu.clone(), &data.inverse[l][m]);
    }
    out
}

/// Green polynomials of one degree: `x[λ][ρ] = X^λ_ρ(t)` and
/// `gr[λ][ρ] = t^{b(λ)} X^λ_ρ(t⁻¹)`.
pub struct GreenTable {
    pub x: Vec<Vec<IntPoly>>,
    pub gr: Vec<Vec<IntPoly>>,
}

static GREEN: Memo<usize, GreenTable> = Memo::new();

pub fn green_table(n: usize) -> Result<Arc<GreenTable>> {
    if let Some(t) = GREEN.get(&n) {
        return Ok(t);
    }
    let deg = degree(n);
    let data = kostka_data(n);
    let size = deg.parts.len();
    let rows: Vec<Result<(Vec<IntPoly>, Vec<IntPoly>)>> = (0..size)
        .into_par_iter()
        .map(|l| {
            let b = deg.parts[l].weight_b();
            let mut xs = Vec::with_capacity(size);
            let mut grs = Vec::with_capacity(size);
            for r in 0..size {
                let mut x = IntPoly::zero();
                for m in 0..size {
                    let k = &data.kf[m][l];
                    if !k.is_zero() && deg.chi[m][r] != 0 {
                        x += &k.scale(&BigInt::from(deg.chi[m][r]));
                    }
                }
                let gr = x.reflect(b).ok_or_else(|| {
                    Error::Internal(format!("X^{}_{} = {x} has degree above b = {b}", deg.parts[l], deg.parts[r]))
                })?;
                xs.push(x);
                grs.push(gr);
            }
            Ok((xs, grs))
        })
        .collect();
    let mut x = Vec::with_capacity(size);
    let mut gr = Vec::with_capacity(size);
    for row in rows {
        let (a, b) = row?;
        x.push(a);
        gr.push(b);
    }
    Ok(GREEN.insert(n, GreenTable { x, gr }))
}

fn lookup(lambda: &Partition, rho: &Partition) -> Result<(usize, usize)> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("λ = {lambda}, ρ = {rho}")));
    }
    let deg = degree(lambda.size());
    Ok((deg.idx(lambda), deg.idx(rho)))
}

/// `X^λ_ρ(t) = ⟨p_ρ, Q′_λ(t)⟩`.
#[allow(non_snake_case)]
pub fn green_X(lambda: &Partition, rho: &Partition) -> Result<IntPoly> {
    let (l, r) = lookup(lambda, rho)?;
    Ok(green_table(lambda.size())?.x[l][r].clone())
}

/// The Green polynomial `gr^λ_ρ(t) = t^{b(λ)} X^λ_ρ(t⁻¹)`.
pub fn green(lambda: &Partition, rho: &Partition) -> Result<IntPoly> {
    let (l, r) = lookup(lambda, rho)?;
    Ok(green_table(lambda.size())?.gr[l][r].clone())
}

/// `gr^λ_ρ(v)`.
pub fn green_at(lambda: &Partition, rho: &Partition, v: i64) -> Result<BigInt> {
    Ok(green(lambda, rho)?.eval_i64(v))
}
