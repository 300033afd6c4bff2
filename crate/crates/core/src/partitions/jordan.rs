//! Jordan types of nilpotent orbits in the classical Lie algebras.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{enumerate_partitions, Partition};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    /// Size of the Jordan types of rank `n`.
    pub fn jordan_size(self, n: usize) -> usize {
        match self {
            LieType::A => n,
            LieType::B => 2 * n + 1,
            LieType::C | LieType::D => 2 * n,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieType::A),
            "B" => Ok(LieType::B),
            "C" => Ok(LieType::C),
            "D" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown Lie type {other:?}"))),
        }
    }
}

/// The `±` decoration of very even orbits and split classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `−1`.
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "−" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        }
    }
}

/// All parts even, each with even multiplicity.
pub fn is_very_even(lambda: &Partition) -> bool {
    lambda
        .multiplicities()
        .iter()
        .all(|&(p, m)| p % 2 == 0 && m % 2 == 0)
}

/// Describes why `λ` is not a Jordan type of rank `n`, or `None` if it is.
pub fn jordan_type_violation(ty: LieType, n: usize, lambda: &Partition) -> Option<String> {
    let expected = ty.jordan_size(n);
    if lambda.size() != expected {
        return Some(format!(
            "{lambda} has size {} but type {ty} rank {n} needs size {expected}",
            lambda.size()
        ));
    }
    let bad_parity = match ty {
        LieType::A => return None,
        LieType::B | LieType::D => 0,
        LieType::C => 1,
    };
    let word = if bad_parity == 0 { "even" } else { "odd" };
    lambda
        .multiplicities()
        .into_iter()
        .find(|&(p, m)| p % 2 == bad_parity && m % 2 == 1)
        .map(|(p, m)| {
            format!("in type {ty} every {word} part needs even multiplicity, but part {p} occurs {m} time(s)")
        })
}

pub fn valid_jordan_type(ty: LieType, n: usize, lambda: &Partition) -> bool {
    jordan_type_violation(ty, n, lambda).is_none()
}

/// Valid Jordan types of rank `n`; in type D each very even type appears
/// twice, decorated `+` then `−`.
pub fn enumerate_jordan_types(ty: LieType, n: usize) -> Vec<(Partition, Option<Sign>)> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(ty.jordan_size(n)) {
        if !valid_jordan_type(ty, n, &lambda) {
            continue;
        }
        if ty == LieType::D && !lambda.is_empty() && is_very_even(&lambda) {
            out.push((lambda.clone(), Some(Sign::Plus)));
            out.push((lambda, Some(Sign::Minus)));
        } else {
            out.push((lambda, None));
        }
    }
    out
}
