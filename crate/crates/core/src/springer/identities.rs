//! Symmetric function identities behind the restriction formula: the Green
//! and Kostka–Foulkes recursions, the skew identity for `Q′_λ(−1)`, the
//! factorization at `t = −1`, the domino pairing and two adjunctions.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::report::{Case, Report};
use super::kostka_at;
use crate::error::Result;
use crate::partitions::{
    enumerate_partitions, removal_expansion, valid_jordan_type, yamanouchi_domino_count, LieType, Partition,
    SignRule, SkewShape,
};
use crate::symfunc::{complete, green_at, plethysm_p2, qprime, skew_by_p, verschiebung, SymFunc, SymFunc2};
use crate::weylchar::Group;

/// Partitions of `size` that are Jordan types of type B, C or D.
fn classical_jordan_types(size: usize) -> Vec<Partition> {
    enumerate_partitions(size)
        .into_iter()
        .filter(|lambda| {
            let n = size / 2;
            if size % 2 == 1 {
                valid_jordan_type(LieType::B, n, lambda)
            } else {
                valid_jordan_type(LieType::C, n, lambda) || valid_jordan_type(LieType::D, n, lambda)
            }
        })
        .collect()
}

fn sign(p: &Partition) -> BigInt {
    BigInt::from(p.sign())
}

fn q_at_minus_one(lambda: &Partition) -> SymFunc {
    qprime(lambda).eval_t(-1)
}

fn constant_scalar(f: &SymFunc, g: &SymFunc) -> BigInt {
    f.scalar(g).expect("same degree").as_constant().expect("constant coefficients")
}

fn report(suite: &str, size: usize, start: Instant, cases: Vec<Vec<Case>>) -> Report {
    Report::new(suite, "sym", size, cases.into_iter().flatten().collect(), start.elapsed())
}

/// `gr^λ_{ρ∪(2k)}(−1) = Σ c_i gr^{λ′_i}_ρ(−1)` for classical Jordan types
/// `λ ⊢ size`, all `k` and all `ρ ⊢ size − 2k`.
pub fn verify_green_recursion(size: usize) -> Report {
    let start = Instant::now();
    let cases = classical_jordan_types(size)
        .par_iter()
        .map(|lambda| {
            let mut out = Vec::new();
            for k in 1..=size / 2 {
                let terms = removal_expansion(lambda, k, SignRule::Height);
                for rho in enumerate_partitions(size - 2 * k) {
                    let param = format!("k={k},rho={}", rho.to_text());
                    let run = || -> Result<Case> {
                        let lhs = green_at(lambda, &rho.union(&Partition::row(2 * k)), -1)?;
                        let mut rhs = BigInt::from(0);
                        for t in &terms {
                            rhs += BigInt::from(t.coefficient) * green_at(&t.partition, &rho, -1)?;
                        }
                        Ok(Case::values(lambda.to_text(), &param, lhs, rhs))
                    };
                    out.push(run().unwrap_or_else(|e| Case::error(lambda.to_text(), &param, &e)));
                }
            }
            out
        })
        .collect();
    report("green-recursion", size, start, cases)
}

/// `ε(λ) Σ_{ν+2k-strip} (−1)^{ht} K_{μ,λ}(−1) = Σ c_i ε(λ′_i) K_{ν,λ′_i}(−1)`
/// for classical Jordan types `λ ⊢ size`, all `k` and all `ν ⊢ size − 2k`.
pub fn verify_kostka_recursion(size: usize) -> Report {
    let start = Instant::now();
    let cases = classical_jordan_types(size)
        .par_iter()
        .map(|lambda| {
            let mut out = Vec::new();
            for k in 1..=size / 2 {
                let terms = removal_expansion(lambda, k, SignRule::Height);
                for nu in enumerate_partitions(size - 2 * k) {
                    let mut lhs = BigInt::from(0);
                    for (mu, h) in nu.border_strips_add(2 * k) {
                        let v = kostka_at(&mu, lambda, -1);
                        lhs += if h % 2 == 0 { v } else { -v };
                    }
                    lhs *= sign(lambda);
                    let mut rhs = BigInt::from(0);
                    for t in &terms {
                        rhs += BigInt::from(t.coefficient) * sign(&t.partition) * kostka_at(&nu, &t.partition, -1);
                    }
                    out.push(Case::values(lambda.to_text(), format!("k={k},nu={}", nu.to_text()), lhs, rhs));
                }
            }
            out
        })
        .collect();
    report("kostka-recursion", size, start, cases)
}

/// `p_{2k}^⊥ ε(λ) Q′_λ(−1) = Σ c_i ε(λ′_i) Q′_{λ′_i}(−1)` for every
/// `λ ⊢ size`, with the column-corrected signs.
pub fn verify_skew_identity(size: usize) -> Report {
    let start = Instant::now();
    let cases = enumerate_partitions(size)
        .par_iter()
        .map(|lambda| {
            let q = q_at_minus_one(lambda).scale_int(lambda.sign().into());
            (1..=size / 2)
                .map(|k| {
                    let param = format!("k={k}");
                    let run = || -> Result<Case> {
                        let lhs = skew_by_p(2 * k, &q)?;
                        let mut rhs = SymFunc::zero(size - 2 * k);
                        for t in removal_expansion(lambda, k, SignRule::HeightAndColumns) {
                            let term = q_at_minus_one(&t.partition).scale_int(t.coefficient * i64::from(t.partition.sign()));
                            rhs = rhs.add(&term)?;
                        }
                        Ok(Case::values(lambda.to_text(), &param, lhs, rhs))
                    };
                    run().unwrap_or_else(|e| Case::error(lambda.to_text(), &param, &e))
                })
                .collect()
        })
        .collect();
    report("skew-identity", size, start, cases)
}

/// `Q′_{λ∪(k,k)}(−1) = Q′_λ(−1) Q′_{(k,k)}(−1)` with `|λ| + 2k = size`.
pub fn verify_llt(size: usize) -> Report {
    let start = Instant::now();
    let jobs: Vec<(usize, Partition)> = (1..=size / 2)
        .flat_map(|k| enumerate_partitions(size - 2 * k).into_iter().map(move |l| (k, l)))
        .collect();
    let cases = jobs
        .par_iter()
        .map(|(k, lambda)| {
            let kk = Partition::new(vec![*k, *k]);
            let lhs = q_at_minus_one(&lambda.union(&kk));
            let rhs = q_at_minus_one(lambda).multiply(&q_at_minus_one(&kk));
            vec![Case::values(lambda.to_text(), format!("k={k}"), lhs, rhs)]
        })
        .collect();
    report("llt", size, start, cases)
}

/// `Q′_{(k,k)}(−1) = (−1)^k h_k[p₂]`.
pub fn verify_qprime_kk(k: usize) -> Report {
    let start = Instant::now();
    let kk = Partition::new(vec![k, k]);
    let lhs = q_at_minus_one(&kk);
    let rhs = plethysm_p2(&complete(&Partition::row(k))).scale_int(if k.is_multiple_of(2) { 1 } else { -1 });
    let cases = vec![vec![Case::values(kk.to_text(), format!("k={k}"), lhs, rhs)]];
    report("qprime-kk", 2 * k, start, cases)
}

/// `ε₂(ν/μ) ⟨h_k[p₂] s_μ, s_ν⟩` equals the number of Yamanouchi domino
/// tableaux of `ν/μ`, which is 0 or 1 and detected by the column scan.
pub fn verify_domino_pairing(size: usize) -> Report {
    let start = Instant::now();
    let cases = enumerate_partitions(size)
        .par_iter()
        .map(|nu| {
            let mut out = Vec::new();
            for k in 1..=size / 2 {
                let hk = plethysm_p2(&complete(&Partition::row(k)));
                for mu in enumerate_partitions(size - 2 * k) {
                    if !nu.contains(&mu) {
                        continue;
                    }
                    let shape = SkewShape::new(nu.clone(), mu.clone()).expect("contained");
                    let pairing = hk.multiply(&SymFunc::schur(mu.clone())).coeff(nu);
                    let pairing = pairing.as_constant().expect("constant coefficients");
                    let count = yamanouchi_domino_count(&shape);
                    let param = format!("mu={}", mu.to_text());
                    let lhs = BigInt::from(shape.two_sign()) * pairing;
                    let mut case = Case::values(nu.to_text(), &param, lhs, BigInt::from(count));
                    if case.pass && (count > 1 || (count == 1) != shape.column_disjoint_domino_cover()) {
                        case = Case::fail(nu.to_text(), &param, "column scan disagrees with the tableau count");
                        case.lhs = Some(count.to_string());
                    }
                    out.push(case);
                }
            }
            out
        })
        .collect();
    report("domino-pairing", size, start, cases)
}

/// `⟨f[p₂], g⟩ = ⟨f, φ g⟩` for Schur functions `g ⊢ size`, and
/// `⟨Δ s_λ, s_α ⊗ s_β⟩ = ⟨s_λ, s_α s_β⟩` for `λ ⊢ size`.
pub fn verify_adjunctions(size: usize) -> Report {
    let start = Instant::now();
    let mut cases: Vec<Vec<Case>> = Vec::new();
    if size.is_multiple_of(2) {
        cases.extend(
            enumerate_partitions(size)
                .par_iter()
                .map(|beta| {
                    let g = SymFunc::schur(beta.clone());
                    let down = verschiebung(&g);
                    enumerate_partitions(size / 2)
                        .into_iter()
                        .map(|alpha| {
                            let f = SymFunc::schur(alpha.clone());
                            let lhs = constant_scalar(&plethysm_p2(&f), &g);
                            let rhs = constant_scalar(&f, &down);
                            Case::values(beta.to_text(), format!("verschiebung,alpha={}", alpha.to_text()), lhs, rhs)
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
    }
    cases.extend(
        enumerate_partitions(size)
            .par_iter()
            .map(|lambda| {
                let f = SymFunc::schur(lambda.clone());
                let delta = SymFunc2::delta(&f);
                let mut out = Vec::new();
                for a in 0..=size {
                    for alpha in enumerate_partitions(a) {
                        for beta in enumerate_partitions(size - a) {
                            let pair = SymFunc2::from_pair(alpha.clone(), beta.clone());
                            let lhs = delta.scalar(&pair).expect("same degree");
                            let rhs = f.scalar(&pair.nabla()).expect("same degree");
                            let param = format!("coproduct,alpha={},beta={}", alpha.to_text(), beta.to_text());
                            out.push(Case::values(lambda.to_text(), param, lhs, rhs));
                        }
                    }
                }
                out
            })
            .collect::<Vec<_>>(),
    );
    report("adjunctions", size, start, cases)
}

/// All symmetric function identities at the Jordan type size of
/// `(ty, n)`, merged into one report.
pub fn verify_symfunc_identities(ty: LieType, n: usize) -> Result<Report> {
    Group::new(ty.into(), n)?;
    let start = Instant::now();
    let size = ty.jordan_size(n);
    let parts = [
        verify_green_recursion(size),
        verify_kostka_recursion(size),
        verify_skew_identity(size),
        verify_llt(size),
        verify_qprime_kk(n),
        verify_domino_pairing(size),
        verify_adjunctions(size),
    ];
    let mut cases = Vec::new();
    for r in parts {
        for mut c in r.cases {
            c.param = format!("{}:{}", r.suite, c.param);
            cases.push(c);
        }
    }
    Ok(Report::new("symfunc-identities", ty, n, cases, start.elapsed()))
}
