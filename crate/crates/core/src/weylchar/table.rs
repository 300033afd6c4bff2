//! Irreducible characters and character tables.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{ClassFunction, ClassLabel, Group, IrrLabel, WeylType};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{enumerate_partitions, Partition, Sign};
use crate::symfunc::{mn_character, SymFunc2};

/// `χ^μ(w_ρ)` for `S_n`.
pub fn sym_char(mu: &Partition, rho: &Partition) -> Result<i64> {
    if mu.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("χ^{mu} at {rho}")));
    }
    Ok(mn_character(mu, rho))
}

/// The character table of one group: `values[i][c]` is the value of
/// `irreps[i]` on `classes[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub group: Group,
    pub irreps: Vec<IrrLabel>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharTable {
    pub fn irrep_index(&self, label: &IrrLabel) -> Result<usize> {
        self.irreps
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidLabel(format!("{label} is not an irreducible character of {}", self.group)))
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction::from_integers(self.group, &self.values[i])
    }
}

static TABLES: Memo<Group, CharTable> = Memo::new();

fn irrep_labels(g: Group) -> Vec<IrrLabel> {
    let mut out = Vec::new();
    match g.ty {
        WeylType::A => {
            for l in enumerate_partitions(g.n).into_iter().rev() {
                out.push(IrrLabel::a(l));
            }
        }
        WeylType::BC => {
            for a in 0..=g.n {
                for alpha in enumerate_partitions(a) {
                    for beta in enumerate_partitions(g.n - a) {
                        out.push(IrrLabel::bc(alpha.clone(), beta));
                    }
                }
            }
        }
        WeylType::D => {
            for a in 0..=g.n {
                for alpha in enumerate_partitions(a) {
                    for beta in enumerate_partitions(g.n - a) {
                        if alpha < beta {
                            out.push(IrrLabel::d(alpha.clone(), beta, None).expect("distinct pair"));
                        } else if alpha == beta {
                            if alpha.is_empty() {
                                out.push(IrrLabel::d(alpha.clone(), beta, None).expect("trivial group"));
                            } else {
                                for s in [Sign::Plus, Sign::Minus] {
                                    out.push(IrrLabel::d(alpha.clone(), beta.clone(), Some(s)).expect("split pair"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn bc_values(g: Group, irreps: &[(Partition, Partition)]) -> Vec<Vec<BigInt>> {
    let classes = g.classes();
    let columns: Vec<Vec<BigInt>> = classes
        .par_iter()
        .map(|c| {
            let p = SymFunc2::p(&c.label.rho, &c.label.sigma);
            irreps
                .iter()
                .map(|(a, b)| p.coeff(a, b).as_constant().expect("constant power-sum expansion"))
                .collect()
        })
        .collect();
    (0..irreps.len()).map(|i| columns.iter().map(|col| col[i].clone()).collect()).collect()
}

/// `Δ_λ` at a `W(D_n)` class: `±2^{l(τ)} χ^λ(τ)` on `(2τ, ∅)±`, zero
/// elsewhere.
fn difference_value(lambda: &Partition, class: &ClassLabel) -> BigInt {
    match class.split {
        None => BigInt::zero(),
        Some(s) => {
            let tau = Partition::new(class.rho.parts().iter().map(|p| p / 2).collect());
            let v = BigInt::from(mn_character(lambda, &tau)) << tau.len();
            if s == Sign::Plus {
                v
            } else {
                -v
            }
        }
    }
}

fn build_table(g: Group) -> CharTable {
    let irreps = irrep_labels(g);
    let values = match g.ty {
        WeylType::A => {
            let classes = g.classes();
            irreps
                .iter()
                .map(|l| classes.iter().map(|c| BigInt::from(mn_character(&l.alpha, &c.label.rho))).collect())
                .collect()
        }
        WeylType::BC => {
            let pairs: Vec<(Partition, Partition)> = irreps.iter().map(|l| (l.alpha.clone(), l.beta.clone())).collect();
            bc_values(g, &pairs)
        }
        WeylType::D => {
            let bc = Group::factor(WeylType::BC, g.n);
            let bc_classes = bc.classes();
            let pairs: Vec<(Partition, Partition)> = irreps.iter().map(|l| (l.alpha.clone(), l.beta.clone())).collect();
            let bc_rows = bc_values(bc, &pairs);
            let classes = g.classes();
            let positions: Vec<usize> = classes
                .iter()
                .map(|c| bc_classes.iter().position(|b| b.label == c.label.to_bc()).expect("D class lies in BC"))
                .collect();
            irreps
                .iter()
                .zip(&bc_rows)
                .map(|(l, row)| {
                    classes
                        .iter()
                        .zip(&positions)
                        .map(|(c, &p)| {
                            let res = row[p].clone();
                            match l.split {
                                None => res,
                                Some(s) => {
                                    let delta = difference_value(&l.alpha, &c.label);
                                    let total = if s == Sign::Plus { res + delta } else { res - delta };
                                    let (q, r) = total.div_rem(&BigInt::from(2));
                                    assert!(r.is_zero(), "non-integral split character {l} at {}", c.label);
                                    q
                                }
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    CharTable { group: g, irreps, values }
}

/// The character table of `g`, computed once.
pub fn character_table(g: Group) -> Arc<CharTable> {
    TABLES.get_or_insert_with(&g, || build_table(g))
}

/// The irreducible character with the given label.
pub fn irreducible(label: &IrrLabel) -> Result<ClassFunction> {
    let g = Group::factor(label.ty, label.size());
    let table = character_table(g);
    Ok(table.character(table.irrep_index(label)?))
}

/// `χ^{(α,β)}` of `W(BC_n)`.
pub fn bc_char(alpha: &Partition, beta: &Partition) -> ClassFunction {
    irreducible(&IrrLabel::bc(alpha.clone(), beta.clone())).expect("every pair labels a character")
}

/// An irreducible character of `W(D_n)`, `n ≥ 2`.
pub fn d_char(label: &IrrLabel) -> Result<ClassFunction> {
    if label.ty != WeylType::D {
        return Err(Error::InvalidLabel(format!("{label} is not a type D label")));
    }
    Group::new(WeylType::D, label.size())?;
    let canonical = IrrLabel::d(label.alpha.clone(), label.beta.clone(), label.split)?;
    irreducible(&canonical)
}

/// Checks that a table has integer entries of the right shape and satisfies
/// both orthogonality relations; returns a description of the first failure.
pub fn orthogonality_failure(table: &CharTable) -> Option<String> {
    let classes = table.group.classes();
    let order = table.group.order();
    if table.irreps.len() != classes.len() {
        return Some(format!("{} irreducibles for {} classes", table.irreps.len(), classes.len()));
    }
    for (i, a) in table.values.iter().enumerate() {
        for (j, b) in table.values.iter().enumerate().skip(i) {
            let s: BigInt = classes.iter().zip(a.iter().zip(b)).map(|(c, (x, y))| &c.class_size * x * y).sum();
            let expected = if i == j { order.clone() } else { BigInt::zero() };
            if s != expected {
                return Some(format!("⟨{}, {}⟩·|W| = {s}", table.irreps[i], table.irreps[j]));
            }
        }
    }
    for (c, cd) in classes.iter().enumerate() {
        for (d, dd) in classes.iter().enumerate().skip(c) {
            let s: BigInt = table.values.iter().map(|row| &row[c] * &row[d]).sum();
            let expected = if c == d { cd.centralizer_order.clone() } else { BigInt::zero() };
            if s != expected {
                return Some(format!("column sum at {} and {} = {s}", cd.label, dd.label));
            }
        }
    }
    let dims: BigInt = table.values.iter().map(|row| &row[0] * &row[0]).sum();
    if dims != order || table.values.iter().any(|row| !row[0].is_positive()) {
        return Some(format!("Σ dim² = {dims}, |W| = {order}"));
    }
    None
}
