//! Parabolic subgroups `S_k × W′`, induction, restriction and restriction
//! to cosets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ClassFunction, ClassLabel, Group, WeylType};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition, Sign};

/// Which of the two `W(D_n)`-classes of embeddings is used. `Plus` is the
/// standard embedding on coordinates without sign changes, `Minus` its
/// conjugate by a sign change in `W(BC_n)`; the other types only admit
/// `Plain`, and `Plain` means `Plus` in type D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Plain,
    Plus,
    Minus,
}

/// The subgroup `S_k × W′` of `W = W(type_n)` with `W′ = W(type_{n−k})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parabolic {
    pub ty: WeylType,
    pub n: usize,
    pub k: usize,
    pub branch: Branch,
}

impl Parabolic {
    pub fn new(ty: WeylType, n: usize, k: usize, branch: Branch) -> Result<Parabolic> {
        if k == 0 || k > n {
            return Err(Error::InvalidParabolic(format!("S_{k} in rank {n}")));
        }
        if ty != WeylType::D && branch != Branch::Plain {
            return Err(Error::InvalidParabolic(format!("branch {branch:?} only exists in type D")));
        }
        Ok(Parabolic { ty, n, k, branch })
    }

    pub fn whole(&self) -> Group {
        Group::factor(self.ty, self.n)
    }

    pub fn complement(&self) -> Group {
        Group::factor(self.ty, self.n - self.k)
    }

    pub fn order(&self) -> BigInt {
        Group::factor(WeylType::A, self.k).order() * self.complement().order()
    }

    /// Classes `(τ, c′)` with `τ ⊢ k` ascending and `c′` in class order,
    /// together with their centralizer orders.
    pub fn classes(&self) -> Vec<(Partition, ClassLabel, BigInt)> {
        let sub = self.complement().classes();
        let mut out = Vec::new();
        for tau in enumerate_partitions(self.k).into_iter().rev() {
            for c in sub.iter() {
                out.push((tau.clone(), c.label.clone(), tau.z() * &c.centralizer_order));
            }
        }
        out
    }

    /// The `W`-class of `(c_τ, w′)`.
    pub fn fuse(&self, tau: &Partition, inner: &ClassLabel) -> ClassLabel {
        let rho = tau.union(&inner.rho);
        match self.ty {
            WeylType::A => ClassLabel::a(rho),
            WeylType::BC => ClassLabel::bc(rho, inner.sigma.clone()),
            WeylType::D => {
                let split = if inner.sigma.is_empty() && rho.is_even() && !rho.is_empty() {
                    let s = inner.split.unwrap_or(Sign::Plus);
                    Some(if self.branch == Branch::Minus { s.flip() } else { s })
                } else {
                    None
                };
                ClassLabel::d(rho, inner.sigma.clone(), split)
            }
        }
    }

    /// `Ind_{S_k × W′}^W f`.
    pub fn induce(&self, f: &ProductClassFunction) -> Result<ClassFunction> {
        if f.parabolic != *self {
            return Err(Error::SizeMismatch("class function lives on another subgroup".into()));
        }
        let w = self.whole();
        let mut acc = vec![BigRational::zero(); w.classes().len()];
        for ((tau, c, z), v) in self.classes().iter().zip(&f.values) {
            if v.is_zero() {
                continue;
            }
            let target = w.class_index(&self.fuse(tau, c))?;
            acc[target] += v / BigRational::from_integer(z.clone());
        }
        for (a, c) in acc.iter_mut().zip(w.classes().iter()) {
            *a *= BigRational::from_integer(c.centralizer_order.clone());
        }
        ClassFunction::new(w, acc)
    }

    /// `Res^W_{S_k × W′} f`.
    pub fn restrict(&self, f: &ClassFunction) -> Result<ProductClassFunction> {
        if f.group() != self.whole() {
            return Err(Error::SizeMismatch(format!("class function on {} restricted from {}", f.group(), self.whole())));
        }
        let values = self
            .classes()
            .iter()
            .map(|(tau, c, _)| f.value(&self.fuse(tau, c)).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductClassFunction { parabolic: *self, values })
    }
}

/// A class function on `S_k × W′`, indexed like `Parabolic::classes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClassFunction {
    parabolic: Parabolic,
    values: Vec<BigRational>,
}

impl ProductClassFunction {
    /// The external product `f × g`.
    pub fn tensor(parabolic: Parabolic, f: &ClassFunction, g: &ClassFunction) -> Result<Self> {
        if f.group() != Group::factor(WeylType::A, parabolic.k) || g.group() != parabolic.complement() {
            return Err(Error::SizeMismatch(format!(
                "{} × {} is not a class function on S_{} × {}",
                f.group(),
                g.group(),
                parabolic.k,
                parabolic.complement()
            )));
        }
        let mut values = Vec::new();
        for a in f.values() {
            for b in g.values() {
                values.push(a * b);
            }
        }
        Ok(ProductClassFunction { parabolic, values })
    }

    pub fn trivial(parabolic: Parabolic) -> Self {
        let values = vec![BigRational::one(); parabolic.classes().len()];
        ProductClassFunction { parabolic, values }
    }

    pub fn parabolic(&self) -> Parabolic {
        self.parabolic
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn inner(&self, other: &ProductClassFunction) -> Result<BigRational> {
        if self.parabolic != other.parabolic {
            return Err(Error::SizeMismatch("class functions on different subgroups".into()));
        }
        let order = self.parabolic.order();
        let mut acc = BigRational::zero();
        for (((_, _, z), a), b) in self.parabolic.classes().iter().zip(&self.values).zip(&other.values) {
            let size = &order / z;
            acc += BigRational::from_integer(size) * a * b;
        }
        Ok(acc / BigRational::from_integer(order))
    }
}

/// `c′ ↦ f(c · c′)` on `W′ = W(type_{n−k})`, where `c` is a `k`-cycle in
/// the `S_k` factor.
pub fn restrict_coset(f: &ClassFunction, k: usize, branch: Branch) -> Result<ClassFunction> {
    let g = f.group();
    let p = Parabolic::new(g.ty, g.n, k, branch)?;
    let cycle = Partition::row(k);
    let sub = p.complement();
    let values = sub
        .classes()
        .iter()
        .map(|c| f.value(&p.fuse(&cycle, &c.label)).cloned())
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(sub, values)
}
