//! Linear operators on symmetric functions given by integer matrices on the
//! Schur basis, built once per degree.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::kostka::kostka_data;
use super::tables::{degree, DegreeData};
use super::SymFunc;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::Partition;
use crate::poly::IntPoly;

type Matrix = Vec<Vec<BigInt>>;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Class sizes `n!/z_ρ` in the order of `deg.parts`.
fn class_sizes(deg: &DegreeData) -> Vec<BigInt> {
    let f = factorial(deg.n);
    deg.z.iter().map(|z| &f / z).collect()
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "non-integral matrix entry");
    q
}

/// `p_ρ = Σ_μ χ^μ(ρ) s_μ`.
pub fn schur_expand_p(rho: &Partition) -> SymFunc {
    let deg = degree(rho.size());
    let r = deg.idx(rho);
    let mut out = SymFunc::zero(rho.size());
    for (m, mu) in deg.parts.iter().enumerate() {
        out.add_term(mu.clone(), &IntPoly::from(deg.chi[m][r]));
    }
    out
}

/// `⟨f, p_ρ⟩ = Σ_μ c_μ χ^μ(ρ)`, so that `f = Σ_ρ ⟨f, p_ρ⟩ p_ρ / z_ρ`.
pub fn power_sum_coefficients(f: &SymFunc, rho: &Partition) -> Result<IntPoly> {
    if rho.size() != f.degree() {
        return Err(Error::SizeMismatch(format!("p{rho} against degree {}", f.degree())));
    }
    let deg = degree(f.degree());
    let r = deg.idx(rho);
    let mut acc = IntPoly::zero();
    for (mu, c) in f.terms() {
        acc += &c.scale(&BigInt::from(deg.chi[deg.idx(mu)][r]));
    }
    Ok(acc)
}

static KOSTKA_NUMBERS: Memo<usize, (Matrix, Matrix)> = Memo::new();

/// `K_{μλ}(1)` and the entries of its inverse.
fn kostka_numbers(n: usize) -> Arc<(Matrix, Matrix)> {
    KOSTKA_NUMBERS.get_or_insert_with(&n, || {
        let data = kostka_data(n);
        let eval = |m: &Vec<Vec<IntPoly>>| -> Matrix {
            m.iter().map(|row| row.iter().map(|p| p.eval_i64(1)).collect()).collect()
        };
        (eval(&data.kf), eval(&data.inverse))
    })
}

/// The complete homogeneous function `h_λ = Σ_μ K_{μλ}(1) s_μ`.
pub fn complete(lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    let deg = degree(n);
    let k = kostka_numbers(n);
    let l = deg.idx(lambda);
    let mut out = SymFunc::zero(n);
    for (m, mu) in deg.parts.iter().enumerate() {
        out.add_term(mu.clone(), &IntPoly::constant(k.0[m][l].clone()));
    }
    out
}

static PLETHYSM: Memo<usize, Matrix> = Memo::new();

/// `a[μ][ν] = ⟨s_μ[p₂], s_ν⟩ = Σ_ρ χ^μ(ρ) χ^ν(2ρ) / z_ρ`.
fn plethysm_matrix(n: usize) -> Arc<Matrix> {
    PLETHYSM.get_or_insert_with(&n, || {
        let deg = degree(n);
        let big = degree(2 * n);
        let sizes = class_sizes(&deg);
        let f = factorial(n);
        let doubled: Vec<usize> = deg.parts.iter().map(|r| big.idx(&r.scale(2))).collect();
        (0..deg.parts.len())
            .map(|m| {
                (0..big.parts.len())
                    .map(|v| {
                        let mut acc = BigInt::zero();
                        for (r, size) in sizes.iter().enumerate() {
                            let x = deg.chi[m][r] * big.chi[v][doubled[r]];
                            if x != 0 {
                                acc += size * x;
                            }
                        }
                        exact_div(acc, &f)
                    })
                    .collect()
            })
            .collect()
    })
}

/// `f[p₂]`, obtained from `p_k ↦ p_{2k}` on power sums.
pub fn plethysm_p2(f: &SymFunc) -> SymFunc {
    let n = f.degree();
    let deg = degree(n);
    let big = degree(2 * n);
    let a = plethysm_matrix(n);
    f.apply(2 * n, |mu| {
        let row = &a[deg.idx(mu)];
        big.parts
            .iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|(nu, c)| (nu.clone(), c.clone()))
            .collect()
    })
}

static VERSCHIEBUNG: Memo<usize, Matrix> = Memo::new();

/// `v[μ][ν]`: coefficient of `s_ν` in `φ(s_μ)`, computed through
/// `s_μ = Σ_λ (K⁻¹)_{λμ} h_λ` and `φ(h_λ) = h_{λ/2}` for even `λ`.
fn verschiebung_matrix(n: usize) -> Arc<Matrix> {
    VERSCHIEBUNG.get_or_insert_with(&n, || {
        let deg = degree(n);
        let k = kostka_numbers(n);
        if n % 2 == 1 {
            return vec![Vec::new(); deg.parts.len()];
        }
        let half = degree(n / 2);
        let kh = kostka_numbers(n / 2);
        let even: Vec<(usize, usize)> = deg
            .parts
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_even())
            .map(|(i, l)| {
                let halved = Partition::new(l.parts().iter().map(|p| p / 2).collect());
                (i, half.idx(&halved))
            })
            .collect();
        (0..deg.parts.len())
            .map(|m| {
                (0..half.parts.len())
                    .map(|v| {
                        let mut acc = BigInt::zero();
                        for &(l, lh) in &even {
                            let a = &k.1[l][m];
                            if !a.is_zero() {
                                acc += a * &kh.0[v][lh];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    })
}

/// The Verschiebung operator `φ`, with `φ(h_{2n}) = h_n` and
/// `φ(h_{2n+1}) = 0`.
pub fn verschiebung(f: &SymFunc) -> SymFunc {
    let n = f.degree();
    if n % 2 == 1 {
        return SymFunc::zero(n / 2);
    }
    let deg = degree(n);
    let half = degree(n / 2);
    let v = verschiebung_matrix(n);
    f.apply(n / 2, |mu| {
        half.parts
            .iter()
            .zip(&v[deg.idx(mu)])
            .filter(|(_, c)| !c.is_zero())
            .map(|(nu, c)| (nu.clone(), c.clone()))
            .collect()
    })
}

static SKEW_P: Memo<(usize, usize), Matrix> = Memo::new();

/// `b[μ][ν] = ⟨p_k^⊥ s_μ, s_ν⟩ = Σ_{σ ⊢ n−k} χ^μ(σ ∪ k) χ^ν(σ) / z_σ`,
/// which is `k ∂/∂p_k` written out using `z_ρ = z_{ρ−k} · k · m_k(ρ)`.
fn skew_p_matrix(n: usize, k: usize) -> Arc<Matrix> {
    SKEW_P.get_or_insert_with(&(n, k), || {
        let deg = degree(n);
        let low = degree(n - k);
        let sizes = class_sizes(&low);
        let f = factorial(n - k);
        let added: Vec<usize> = low.parts.iter().map(|s| deg.idx(&s.union(&Partition::row(k)))).collect();
        (0..deg.parts.len())
            .map(|m| {
                (0..low.parts.len())
                    .map(|v| {
                        let mut acc = BigInt::zero();
                        for (s, size) in sizes.iter().enumerate() {
                            let x = deg.chi[m][added[s]] * low.chi[v][s];
                            if x != 0 {
                                acc += size * x;
                            }
                        }
                        exact_div(acc, &f)
                    })
                    .collect()
            })
            .collect()
    })
}

/// The adjoint of multiplication by `p_k`.
pub fn skew_by_p(k: usize, f: &SymFunc) -> Result<SymFunc> {
    let n = f.degree();
    if k == 0 || n < k {
        return Err(Error::DegreeTooSmall { degree: n, k });
    }
    let deg = degree(n);
    let low = degree(n - k);
    let b = skew_p_matrix(n, k);
    Ok(f.apply(n - k, |mu| {
        low.parts
            .iter()
            .zip(&b[deg.idx(mu)])
            .filter(|(_, c)| !c.is_zero())
            .map(|(nu, c)| (nu.clone(), c.clone()))
            .collect()
    }))
}
