//! Rational class functions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::table::character_table;
use super::{ClassLabel, Group, IrrLabel};
use crate::error::{Error, Result};

/// A class function, one exact value per class of `group.classes()`.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    group: Group,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn new(group: Group, values: Vec<BigRational>) -> Result<Self> {
        let expected = group.classes().len();
        if values.len() != expected {
            return Err(Error::SizeMismatch(format!("{} values for {expected} classes of {group}", values.len())));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn from_integers(group: Group, values: &[BigInt]) -> Self {
        ClassFunction::new(group, values.iter().map(|v| BigRational::from_integer(v.clone())).collect())
            .expect("one value per class")
    }

    pub fn from_fn(group: Group, mut f: impl FnMut(&ClassLabel) -> BigRational) -> Self {
        let values = group.classes().iter().map(|c| f(&c.label)).collect();
        ClassFunction { group, values }
    }

    pub fn zero(group: Group) -> Self {
        ClassFunction::from_fn(group, |_| BigRational::zero())
    }

    pub fn trivial(group: Group) -> Self {
        ClassFunction::from_fn(group, |_| BigRational::from_integer(1.into()))
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, label: &ClassLabel) -> Result<&BigRational> {
        Ok(&self.values[self.group.class_index(label)?])
    }

    /// Value at the identity, i.e. the dimension of a character.
    pub fn degree(&self) -> &BigRational {
        &self.values[0]
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Integer values, or `NotIntegral`.
    pub fn integer_values(&self) -> Result<Vec<BigInt>> {
        self.values
            .iter()
            .zip(self.group.classes().iter())
            .map(|(v, c)| {
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NotIntegral(format!("value {v} at {}", c.label)))
                }
            })
            .collect()
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::SizeMismatch(format!("class functions on {} and {}", self.group, other.group)));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { group: self.group, values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction { group: self.group, values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn scale_int(&self, c: i64) -> ClassFunction {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { group: self.group, values })
    }

    /// `⟨f, g⟩ = |W|⁻¹ Σ_c |c| f(c) g(c)`.
    pub fn inner(&self, other: &ClassFunction) -> Result<BigRational> {
        self.check_same(other)?;
        let classes = self.group.classes();
        let mut acc = BigRational::zero();
        for ((c, a), b) in classes.iter().zip(&self.values).zip(&other.values) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += BigRational::from_integer(c.class_size.clone()) * a * b;
        }
        Ok(acc / BigRational::from_integer(self.group.order()))
    }

    /// Multiplicities against every irreducible character, in table order.
    pub fn decompose(&self) -> Vec<(IrrLabel, BigRational)> {
        let table = character_table(self.group);
        table
            .irreps
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), self.inner(&table.character(i)).expect("same group")))
            .collect()
    }

    /// Nonzero multiplicities only.
    pub fn constituents(&self) -> Vec<(IrrLabel, BigRational)> {
        self.decompose().into_iter().filter(|(_, m)| !m.is_zero()).collect()
    }

    /// True when every multiplicity is a nonnegative integer.
    pub fn is_character(&self) -> bool {
        self.decompose().iter().all(|(_, m)| m.is_integer() && !m.is_negative())
    }

    /// Builds `Σ m_i χ_i`.
    pub fn from_multiplicities(group: Group, terms: &[(IrrLabel, BigRational)]) -> Result<ClassFunction> {
        let table = character_table(group);
        let mut acc = ClassFunction::zero(group);
        for (l, m) in terms {
            acc = acc.add(&table.character(table.irrep_index(l)?).scale(m))?;
        }
        Ok(acc)
    }

    /// First class where the two functions differ.
    pub fn first_difference(&self, other: &ClassFunction) -> Option<ClassLabel> {
        if self.group != other.group {
            return self.group.classes().first().map(|c| c.label.clone());
        }
        self.group
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .find(|(_, (a, b))| a != b)
            .map(|(c, _)| c.label.clone())
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes = self.group.classes();
        let parts: Vec<String> = classes.iter().zip(&self.values).map(|(c, v)| format!("[{}] {v}", c.label)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.group, self)
    }
}
