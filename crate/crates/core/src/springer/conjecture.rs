//! Scan for the conjectural equality of type D multiplicities on pairs of
//! partitions with swapped 2-quotients.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::report::{Case, Report};
use super::{kostka_at, NilpotentLabel};
use crate::error::Result;
use crate::partitions::{enumerate_partitions, is_very_even, LieType, Partition};

/// For each type D Jordan type `λ` of rank `n` and each pair `μ, ν` of
/// partitions of `2n` with minimal 2-cores and swapped 2-quotients, compares
/// `ε(μ) K_{μ,λ}(−1)` with `ε(ν) K_{ν,λ}(−1)`. Failures are counterexamples
/// to the conjecture, not errors.
pub fn conjecture_scan(n: usize) -> Result<Report> {
    let start = Instant::now();
    let labels = NilpotentLabel::all(LieType::D, n)?;
    let size = 2 * n;
    let by_quotient: BTreeMap<(Partition, Partition), Partition> = enumerate_partitions(size)
        .into_iter()
        .filter(|mu| mu.has_minimal_core())
        .map(|mu| (mu.two_quotient(), mu))
        .collect();
    let pairs: Vec<(Partition, Partition)> = by_quotient
        .iter()
        .filter(|(_, mu)| !is_very_even(mu))
        .filter_map(|((q0, q1), mu)| {
            let nu = by_quotient.get(&(q1.clone(), q0.clone()))?;
            (mu < nu).then(|| (mu.clone(), nu.clone()))
        })
        .collect();
    let mut lambdas: Vec<Partition> = labels.into_iter().map(|nl| nl.lambda).collect();
    lambdas.dedup();
    let cases: Vec<Vec<Case>> = lambdas
        .par_iter()
        .map(|lambda| {
            pairs
                .iter()
                .map(|(mu, nu)| {
                    let lhs = BigInt::from(mu.sign()) * kostka_at(mu, lambda, -1);
                    let rhs = BigInt::from(nu.sign()) * kostka_at(nu, lambda, -1);
                    Case::values(lambda.to_text(), format!("mu={},nu={}", mu.to_text(), nu.to_text()), lhs, rhs)
                })
                .collect()
        })
        .collect();
    Ok(Report::new("conjecture-scan", LieType::D, n, cases.into_iter().flatten().collect(), start.elapsed()))
}
