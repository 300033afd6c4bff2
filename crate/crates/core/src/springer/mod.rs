//! Springer correspondence labels, total Springer characters, Green values
//! of the total representations and Euler characteristics of Springer
//! fibers for the classical types.

mod conjecture;
mod identities;
mod report;
mod verify;

pub use conjecture::conjecture_scan;
pub use identities::{
    verify_adjunctions, verify_domino_pairing, verify_green_recursion, verify_kostka_recursion, verify_llt,
    verify_qprime_kk, verify_skew_identity, verify_symfunc_identities,
};
pub use report::{Case, Report};
pub use verify::{
    verify_difference_pairing, verify_induction, verify_main_consistency, verify_orthogonality, verify_positivity,
    verify_restriction, verify_triangularity,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{
    enumerate_jordan_types, enumerate_partitions, is_very_even, jordan_type_violation, LieType, Partition, Sign,
};
use crate::poly::IntPoly;
use crate::symfunc::{degree, green, green_at, kostka_data};
use crate::weylchar::{ClassFunction, ClassLabel, Group, IrrLabel, WeylType};

/// A nilpotent orbit: a Jordan type of rank `n`, with a `±` marker for
/// very even types in type D.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NilpotentLabel {
    pub ty: LieType,
    pub n: usize,
    pub lambda: Partition,
    pub split: Option<Sign>,
}

impl NilpotentLabel {
    /// Checks the Jordan type rules, the rank bounds and the split marker.
    pub fn new(ty: LieType, n: usize, lambda: Partition, split: Option<Sign>) -> Result<Self> {
        Group::new(WeylType::from(ty), n)?;
        if let Some(why) = jordan_type_violation(ty, n, &lambda) {
            return Err(Error::InvalidJordanType(why));
        }
        let needs_split = ty == LieType::D && is_very_even(&lambda);
        if needs_split && split.is_none() {
            return Err(Error::InvalidJordanType(format!(
                "{lambda} is very even, so the orbit needs a + or - marker"
            )));
        }
        if !needs_split && split.is_some() {
            return Err(Error::InvalidJordanType(format!(
                "only very even Jordan types in type D take a marker, not {lambda} in type {ty}"
            )));
        }
        Ok(NilpotentLabel { ty, n, lambda, split })
    }

    /// Like `new`, with the rank read off from `|λ|`.
    pub fn infer(ty: LieType, lambda: Partition, split: Option<Sign>) -> Result<Self> {
        let size = lambda.size();
        let n = match ty {
            LieType::A => size,
            LieType::B if size % 2 == 1 => size / 2,
            LieType::C | LieType::D if size.is_multiple_of(2) => size / 2,
            _ => {
                return Err(Error::InvalidJordanType(format!(
                    "{lambda} has size {size}, which is not a Jordan type size in type {ty}"
                )))
            }
        };
        NilpotentLabel::new(ty, n, lambda, split)
    }

    /// All orbits of rank `n`, in the order of `enumerate_jordan_types`.
    pub fn all(ty: LieType, n: usize) -> Result<Vec<NilpotentLabel>> {
        Group::new(WeylType::from(ty), n)?;
        Ok(enumerate_jordan_types(ty, n)
            .into_iter()
            .map(|(lambda, split)| NilpotentLabel { ty, n, lambda, split })
            .collect())
    }

    pub fn group(&self) -> Group {
        Group::factor(WeylType::from(self.ty), self.n)
    }

    /// The label with `±` exchanged.
    pub fn flip(&self) -> NilpotentLabel {
        NilpotentLabel { split: self.split.map(Sign::flip), ..self.clone() }
    }

    /// `λ` in partition text syntax followed by the marker, e.g. `4,4+`.
    pub fn text(&self) -> String {
        match self.split {
            Some(s) => format!("{}{s}", self.lambda.to_text()),
            None => self.lambda.to_text(),
        }
    }
}

impl fmt::Display for NilpotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if let Some(s) = self.split {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The value of the Springer correspondence on a partition: an irreducible
/// character, or zero when the 2-core is not minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpringerLabel {
    Irreducible(IrrLabel),
    Zero,
}

impl SpringerLabel {
    pub fn irreducible(&self) -> Option<&IrrLabel> {
        match self {
            SpringerLabel::Irreducible(l) => Some(l),
            SpringerLabel::Zero => None,
        }
    }
}

impl fmt::Display for SpringerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpringerLabel::Irreducible(l) => write!(f, "{l}"),
            SpringerLabel::Zero => f.write_str("0"),
        }
    }
}

/// `χ^μ` for a partition `μ` of the Jordan type size. In type D a very even
/// `μ` needs the marker; otherwise the marker is ignored.
pub fn partition_label(ty: LieType, mu: &Partition, split: Option<Sign>) -> Result<SpringerLabel> {
    if ty == LieType::A {
        return Ok(SpringerLabel::Irreducible(IrrLabel::a(mu.clone())));
    }
    if !mu.has_minimal_core() {
        return Ok(SpringerLabel::Zero);
    }
    let (q0, q1) = mu.two_quotient();
    let label = match ty {
        LieType::B => IrrLabel::bc(q0, q1),
        LieType::C => IrrLabel::bc(q1, q0),
        LieType::D => {
            let split = if q0 == q1 && !q0.is_empty() {
                Some(split.ok_or_else(|| {
                    Error::InvalidLabel(format!("{mu} is very even and needs a + or - marker"))
                })?)
            } else {
                None
            };
            IrrLabel::d(q0, q1, split)?
        }
        LieType::A => unreachable!(),
    };
    Ok(SpringerLabel::Irreducible(label))
}

/// The Springer correspondent of an orbit.
pub fn springer_label(nl: &NilpotentLabel) -> Result<SpringerLabel> {
    partition_label(nl.ty, &nl.lambda, nl.split)
}

/// Which combination of total Springer representations a character is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpringerKind {
    /// `ch H^*(B_N)` for a single orbit.
    Total,
    /// `ch H^*(B_N) ⊕ H^*(B_N)` in type D, or the sum over `λ±`.
    Doubled,
    /// `ch X_{λ+} − ch X_{λ−}` for very even `λ`.
    Difference,
}

/// A class function attached to a Jordan type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerChar {
    pub ty: LieType,
    pub lambda: Partition,
    pub split: Option<Sign>,
    pub kind: SpringerKind,
    pub character: ClassFunction,
}

impl SpringerChar {
    pub fn group(&self) -> Group {
        self.character.group()
    }

    pub fn dimension(&self) -> BigInt {
        self.character.degree().to_integer()
    }

    pub fn value(&self, class: &ClassLabel) -> Result<BigInt> {
        let v = self.character.value(class)?;
        if !v.is_integer() {
            return Err(Error::NotIntegral(format!("value {v} at {class}")));
        }
        Ok(v.to_integer())
    }

    /// Nonzero multiplicities in table order; fails if one is not an
    /// integer.
    pub fn multiplicities(&self) -> Result<Vec<(IrrLabel, BigInt)>> {
        self.character
            .constituents()
            .into_iter()
            .map(|(l, m)| {
                if m.is_integer() {
                    Ok((l, m.to_integer()))
                } else {
                    Err(Error::NotIntegral(format!("multiplicity {m} of {l}")))
                }
            })
            .collect()
    }
}

fn rational(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn kostka_at(mu: &Partition, lambda: &Partition, v: i64) -> BigInt {
    let d = degree(lambda.size());
    let data = kostka_data(lambda.size());
    data.kf[d.idx(mu)][d.idx(lambda)].eval_i64(v)
}

/// `μ̃` with `μ = 2μ̃ ∪ 2μ̃`.
fn halve_very_even(mu: &Partition) -> Partition {
    Partition::new(mu.parts().iter().step_by(2).map(|p| p / 2).collect())
}

fn sign_int(p: &Partition) -> BigInt {
    BigInt::from(p.sign())
}

fn weyl_rank(ty: LieType, size: usize) -> usize {
    match ty {
        LieType::A => size,
        _ => size / 2,
    }
}

fn accumulate(group: Group, terms: BTreeMap<IrrLabel, BigRational>) -> ClassFunction {
    let terms: Vec<_> = terms.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    ClassFunction::from_multiplicities(group, &terms).expect("labels come from the group's own table")
}

fn add_term(terms: &mut BTreeMap<IrrLabel, BigRational>, label: IrrLabel, c: BigRational) {
    *terms.entry(label).or_insert_with(BigRational::zero) += c;
}

static TOTALS: Memo<(LieType, Partition, Option<Sign>), ClassFunction> = Memo::new();
static AVERAGED: Memo<Partition, ClassFunction> = Memo::new();

/// `Σ_μ K_{μ,λ}(1) χ^μ` on `S_n`.
fn type_a_total(lambda: &Partition) -> ClassFunction {
    let n = lambda.size();
    let mut terms = BTreeMap::new();
    for mu in enumerate_partitions(n) {
        let k = kostka_at(&mu, lambda, 1);
        if !k.is_zero() {
            add_term(&mut terms, IrrLabel::a(mu), rational(k));
        }
    }
    accumulate(Group::factor(WeylType::A, n), terms)
}

/// `Σ_μ ε(λ)ε(μ) K_{μ,λ}(−1) χ^μ` on `W(BC_n)`, any rank.
pub(crate) fn gue_function(ty: LieType, lambda: &Partition) -> ClassFunction {
    let key = (ty, lambda.clone(), None);
    let f = TOTALS.get_or_insert_with(&key, || {
        let size = lambda.size();
        let mut terms = BTreeMap::new();
        for mu in enumerate_partitions(size) {
            let label = match partition_label(ty, &mu, None).expect("B and C labels need no marker") {
                SpringerLabel::Irreducible(l) => l,
                SpringerLabel::Zero => continue,
            };
            let c = sign_int(lambda) * sign_int(&mu) * kostka_at(&mu, lambda, -1);
            if !c.is_zero() {
                add_term(&mut terms, label, rational(c));
            }
        }
        accumulate(Group::factor(WeylType::BC, weyl_rank(ty, size)), terms)
    });
    (*f).clone()
}

/// The sum over `μ` of the averaged type D character, on
/// `W(D_n)` for `n ≥ 2`.
pub(crate) fn ague_function(lambda: &Partition) -> ClassFunction {
    let f = AVERAGED.get_or_insert_with(lambda, || {
        let size = lambda.size();
        let mut terms = BTreeMap::new();
        for mu in enumerate_partitions(size) {
            if !mu.has_minimal_core() {
                continue;
            }
            let k = kostka_at(&mu, lambda, -1);
            if k.is_zero() {
                continue;
            }
            let c = rational(sign_int(lambda) * &k);
            if is_very_even(&mu) && !mu.is_empty() {
                for s in [Sign::Plus, Sign::Minus] {
                    add_term(&mut terms, d_label(&mu, Some(s)), c.clone());
                }
            } else {
                add_term(&mut terms, d_label(&mu, None), c * rational(sign_int(&mu)));
            }
        }
        accumulate(Group::factor(WeylType::D, size / 2), terms)
    });
    (*f).clone()
}

fn d_label(mu: &Partition, split: Option<Sign>) -> IrrLabel {
    match partition_label(LieType::D, mu, split).expect("marker supplied for very even partitions") {
        SpringerLabel::Irreducible(l) => l,
        SpringerLabel::Zero => unreachable!("caller checks the 2-core"),
    }
}

/// `ch X_λ` in type D: half the averaged character, or the refined
/// formula with Kostka numbers of `λ̃` for very even `λ`.
pub(crate) fn d_total_function(lambda: &Partition, split: Option<Sign>) -> ClassFunction {
    let Some(split) = split else {
        return ague_function(lambda).scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
    };
    let key = (LieType::D, lambda.clone(), Some(split));
    let f = TOTALS.get_or_insert_with(&key, || {
        let size = lambda.size();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let lambda_t = halve_very_even(lambda);
        let mut terms = BTreeMap::new();
        for mu in enumerate_partitions(size) {
            if !mu.has_minimal_core() {
                continue;
            }
            let k = kostka_at(&mu, lambda, -1);
            if is_very_even(&mu) && !mu.is_empty() {
                let kt = kostka_at(&halve_very_even(&mu), &lambda_t, 1);
                for s in [Sign::Plus, Sign::Minus] {
                    let c = if s == split { &k + &kt } else { &k - &kt };
                    add_term(&mut terms, d_label(&mu, Some(s)), rational(c) * &half);
                }
            } else if !k.is_zero() {
                add_term(&mut terms, d_label(&mu, None), rational(sign_int(&mu) * k) * &half);
            }
        }
        accumulate(Group::factor(WeylType::D, size / 2), terms)
    });
    (*f).clone()
}

pub(crate) fn total_function(nl: &NilpotentLabel) -> ClassFunction {
    match nl.ty {
        LieType::A => {
            let key = (LieType::A, nl.lambda.clone(), None);
            (*TOTALS.get_or_insert_with(&key, || type_a_total(&nl.lambda))).clone()
        }
        LieType::B | LieType::C => gue_function(nl.ty, &nl.lambda),
        LieType::D => d_total_function(&nl.lambda, nl.split),
    }
}

/// `Σ_{μ⊢|λ|} ε(λ)ε(μ) K_{μ,λ}(−1) ch χ^μ` for a Jordan type of type B or
/// C, on `W(BC_n)`.
pub fn gue(ty: LieType, lambda: &Partition) -> Result<SpringerChar> {
    if !matches!(ty, LieType::B | LieType::C) {
        return Err(Error::InvalidJordanType(format!("gue is defined for types B and C, not {ty}")));
    }
    let nl = NilpotentLabel::infer(ty, lambda.clone(), None)?;
    Ok(SpringerChar {
        ty,
        lambda: nl.lambda.clone(),
        split: None,
        kind: SpringerKind::Total,
        character: gue_function(ty, lambda),
    })
}

/// The doubled type D character: `ch X_λ ⊕ X_λ`, or `ch X_{λ+} ⊕ X_{λ−}`
/// for very even `λ`.
pub fn ague(lambda: &Partition) -> Result<SpringerChar> {
    let split = is_very_even(lambda).then_some(Sign::Plus);
    let nl = NilpotentLabel::infer(LieType::D, lambda.clone(), split)?;
    Ok(SpringerChar {
        ty: LieType::D,
        lambda: nl.lambda,
        split: None,
        kind: SpringerKind::Doubled,
        character: ague_function(lambda),
    })
}

/// `ch X_λ` (or `ch X_{λ±}`) in type D.
pub fn d_total(nl: &NilpotentLabel) -> Result<SpringerChar> {
    if nl.ty != LieType::D {
        return Err(Error::InvalidJordanType(format!("d_total needs a type D orbit, got type {}", nl.ty)));
    }
    let nl = NilpotentLabel::new(nl.ty, nl.n, nl.lambda.clone(), nl.split)?;
    Ok(SpringerChar {
        ty: LieType::D,
        character: d_total_function(&nl.lambda, nl.split),
        lambda: nl.lambda,
        split: nl.split,
        kind: SpringerKind::Total,
    })
}

/// `ch X_{λ+} − ch X_{λ−}` for very even `λ`.
pub fn difference_character(lambda: &Partition) -> Result<SpringerChar> {
    let nl = NilpotentLabel::infer(LieType::D, lambda.clone(), Some(Sign::Plus))?;
    let plus = d_total_function(&nl.lambda, Some(Sign::Plus));
    let minus = d_total_function(&nl.lambda, Some(Sign::Minus));
    Ok(SpringerChar {
        ty: LieType::D,
        lambda: nl.lambda,
        split: None,
        kind: SpringerKind::Difference,
        character: plus.sub(&minus)?,
    })
}

/// The total Springer character of any orbit; in type A this is
/// `Σ_μ K_{μ,λ}(1) χ^μ`.
pub fn total_character(nl: &NilpotentLabel) -> Result<SpringerChar> {
    let nl = NilpotentLabel::new(nl.ty, nl.n, nl.lambda.clone(), nl.split)?;
    Ok(SpringerChar {
        ty: nl.ty,
        character: total_function(&nl),
        lambda: nl.lambda,
        split: nl.split,
        kind: SpringerKind::Total,
    })
}

fn halve(x: BigInt, what: impl FnOnce() -> String) -> Result<BigInt> {
    let (q, r) = x.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::NotIntegral(format!("{} is odd, cannot halve", what())));
    }
    Ok(q)
}

/// The value of the total Springer character at the class of `w_ρ` in the
/// parabolic `S_n`, from Green polynomials: `gr^λ_ρ(1)` in type A,
/// `gr^λ_{2ρ∪(1)}(−1)` in type B, `gr^λ_{2ρ}(−1)` in type C, and in type
/// D half of `gr^λ_{2ρ}(−1)`, or the full value resp. zero for matching
/// resp. opposite markers when `λ` is very even and `ρ` even.
pub fn green_value(nl: &NilpotentLabel, rho: &Partition, split: Option<Sign>) -> Result<BigInt> {
    if rho.size() != nl.n {
        return Err(Error::SizeMismatch(format!("class {rho} in rank {}", nl.n)));
    }
    let splits = nl.ty == LieType::D && rho.is_even() && !rho.is_empty();
    if split.is_some() && !splits {
        return Err(Error::InvalidLabel(format!("the class of {rho} does not split in type {}", nl.ty)));
    }
    let doubled = rho.scale(2);
    match nl.ty {
        LieType::A => green_at(&nl.lambda, rho, 1),
        LieType::B => green_at(&nl.lambda, &doubled.union(&Partition::row(1)), -1),
        LieType::C => green_at(&nl.lambda, &doubled, -1),
        LieType::D => {
            let g = green_at(&nl.lambda, &doubled, -1)?;
            match (nl.split, splits) {
                (Some(s), true) => {
                    let class_split = split.ok_or_else(|| {
                        Error::InvalidLabel(format!("the class of {rho} splits; give a + or - marker"))
                    })?;
                    Ok(if s == class_split { g } else { BigInt::zero() })
                }
                _ => halve(g, || format!("gr^{}_{}(-1)", nl.lambda, doubled)),
            }
        }
    }
}

/// `χ(B_N)` via Green polynomials at `ρ = (1^n)`.
pub fn euler_characteristic(nl: &NilpotentLabel) -> Result<BigInt> {
    let nl = NilpotentLabel::new(nl.ty, nl.n, nl.lambda.clone(), nl.split)?;
    green_value(&nl, &Partition::column(nl.n), None)
}

/// `Σ_i (−1)^i t^{i/2} ch H^i(B_{N_λ})(w_ρ) = gr^λ_ρ(t)` in type A.
#[allow(non_snake_case)]
pub fn graded_char_A(lambda: &Partition, rho: &Partition) -> Result<IntPoly> {
    green(lambda, rho)
}
