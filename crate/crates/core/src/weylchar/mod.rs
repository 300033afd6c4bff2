//! Character theory of the Weyl groups `S_n`, `W(BC_n)` and `W(D_n)`.

mod classfn;
mod frobenius;
mod parabolic;
mod table;

pub use classfn::ClassFunction;
pub use frobenius::{frobenius_A, frobenius_A_inv, frobenius_BC, frobenius_BC_inv};
pub use parabolic::{restrict_coset, Branch, Parabolic, ProductClassFunction};
pub use table::{bc_char, character_table, d_char, irreducible, orthogonality_failure, sym_char, CharTable};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{enumerate_partitions, LieType, Partition, Sign};

/// The three families of classical Weyl groups; types B and C share `BC`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylType {
    A,
    BC,
    D,
}

impl From<LieType> for WeylType {
    fn from(t: LieType) -> Self {
        match t {
            LieType::A => WeylType::A,
            LieType::B | LieType::C => WeylType::BC,
            LieType::D => WeylType::D,
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeylType::A => "A",
            WeylType::BC => "BC",
            WeylType::D => "D",
        })
    }
}

impl FromStr for WeylType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(WeylType::A),
            "B" | "C" | "BC" => Ok(WeylType::BC),
            "D" => Ok(WeylType::D),
            other => Err(Error::Parse(format!("unknown Weyl group type {other:?}"))),
        }
    }
}

/// A Weyl group `W(type_n)`. Ranks 0 and 1 are allowed so that parabolic
/// factors can be trivial; `W(D_0)` and `W(D_1)` are the trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Group {
    pub ty: WeylType,
    pub n: usize,
}

impl Group {
    /// A group within the public rank bounds (`n ≥ 1`, and `n ≥ 2` for D).
    pub fn new(ty: WeylType, n: usize) -> Result<Group> {
        let min = if ty == WeylType::D { 2 } else { 1 };
        if n < min {
            return Err(Error::RankTooSmall { ty: ty.to_string(), n });
        }
        Ok(Group { ty, n })
    }

    /// A group of any rank, including the degenerate ones.
    pub fn factor(ty: WeylType, n: usize) -> Group {
        Group { ty, n }
    }

    pub fn order(&self) -> BigInt {
        let fact: BigInt = (1..=self.n).fold(BigInt::one(), |a, k| a * k);
        match self.ty {
            WeylType::A => fact,
            WeylType::BC => fact << self.n,
            WeylType::D if self.n == 0 => BigInt::one(),
            WeylType::D => fact << (self.n - 1),
        }
    }

    pub fn classes(&self) -> Arc<Vec<ClassData>> {
        CLASSES.get_or_insert_with(self, || build_classes(*self))
    }

    /// Position of a class in `classes()`.
    pub fn class_index(&self, label: &ClassLabel) -> Result<usize> {
        self.classes()
            .iter()
            .position(|c| &c.label == label)
            .ok_or_else(|| Error::InvalidLabel(format!("{label} is not a class of {self}")))
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            WeylType::A => write!(f, "S_{}", self.n),
            WeylType::BC => write!(f, "W(BC_{})", self.n),
            WeylType::D => write!(f, "W(D_{})", self.n),
        }
    }
}

/// A conjugacy class: `ρ` for `S_n`, `(ρ, σ)` for `W(BC_n)` and `W(D_n)`,
/// with a split marker on the classes `(ρ, ∅)±` of `W(D_n)` for even `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassLabel {
    pub ty: WeylType,
    pub rho: Partition,
    pub sigma: Partition,
    pub split: Option<Sign>,
}

impl ClassLabel {
    pub fn a(rho: Partition) -> Self {
        ClassLabel { ty: WeylType::A, rho, sigma: Partition::empty(), split: None }
    }

    pub fn bc(rho: Partition, sigma: Partition) -> Self {
        ClassLabel { ty: WeylType::BC, rho, sigma, split: None }
    }

    pub fn d(rho: Partition, sigma: Partition, split: Option<Sign>) -> Self {
        ClassLabel { ty: WeylType::D, rho, sigma, split }
    }

    pub fn size(&self) -> usize {
        self.rho.size() + self.sigma.size()
    }

    /// The underlying `W(BC_n)` class of a `W(D_n)` class.
    pub fn to_bc(&self) -> ClassLabel {
        ClassLabel::bc(self.rho.clone(), self.sigma.clone())
    }

    /// Parses `"ρ"` (type A) or `"ρ;σ"`, `"ρ;σ;±"`, `"ρ;±"`; `"ρ,-"`
    /// abbreviates `"ρ;-"`.
    pub fn parse(ty: WeylType, text: &str) -> Result<ClassLabel> {
        let fields: Vec<&str> = text.trim().split(';').map(str::trim).collect();
        let bad = || Error::Parse(format!("bad class label {text:?} for type {ty}"));
        let label = match ty {
            WeylType::A => {
                if fields.len() != 1 {
                    return Err(bad());
                }
                ClassLabel::a(fields[0].parse()?)
            }
            WeylType::BC | WeylType::D => {
                let mut fields = fields.clone();
                let mut expanded = Vec::new();
                if let Some(rho) = fields.first().and_then(|f| f.strip_suffix(",-")) {
                    expanded.push(rho);
                    expanded.push("-");
                    fields.remove(0);
                }
                expanded.extend(fields);
                let mut split = None;
                if let Some(last) = expanded.last() {
                    if expanded.len() >= 2 && matches!(*last, "+" | "−" | "plus" | "minus")
                        || (expanded.len() == 3 && *last == "-")
                    {
                        split = Some(last.parse::<Sign>()?);
                        expanded.pop();
                    }
                }
                let (rho, sigma) = match expanded.as_slice() {
                    [rho] => (rho.parse()?, Partition::empty()),
                    [rho, sigma] => (rho.parse()?, sigma.parse()?),
                    _ => return Err(bad()),
                };
                if ty == WeylType::BC {
                    if split.is_some() {
                        return Err(bad());
                    }
                    ClassLabel::bc(rho, sigma)
                } else {
                    ClassLabel::d(rho, sigma, split)
                }
            }
        };
        Ok(label)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            WeylType::A => write!(f, "{}", self.rho.to_text()),
            _ => {
                write!(f, "{};{}", self.rho.to_text(), self.sigma.to_text())?;
                if let Some(s) = self.split {
                    write!(f, ";{s}")?;
                }
                Ok(())
            }
        }
    }
}

/// A class with its centralizer order and size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub label: ClassLabel,
    #[serde(with = "crate::weylchar::bigint_text")]
    pub centralizer_order: BigInt,
    #[serde(with = "crate::weylchar::bigint_text")]
    pub class_size: BigInt,
}

pub(crate) mod bigint_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

static CLASSES: Memo<Group, Vec<ClassData>> = Memo::new();

fn bipartitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for b in 0..=n {
        for sigma in enumerate_partitions(b).into_iter().rev() {
            for rho in enumerate_partitions(n - b).into_iter().rev() {
                out.push((rho, sigma.clone()));
            }
        }
    }
    out
}

fn build_classes(g: Group) -> Vec<ClassData> {
    let order = g.order();
    let mut labels: Vec<(ClassLabel, BigInt)> = Vec::new();
    match g.ty {
        WeylType::A => {
            for rho in enumerate_partitions(g.n).into_iter().rev() {
                let z = rho.z();
                labels.push((ClassLabel::a(rho), z));
            }
        }
        WeylType::BC => {
            for (rho, sigma) in bipartitions(g.n) {
                let z = (rho.z() * sigma.z()) << (rho.len() + sigma.len());
                labels.push((ClassLabel::bc(rho, sigma), z));
            }
        }
        WeylType::D => {
            if g.n == 0 {
                labels.push((ClassLabel::d(Partition::empty(), Partition::empty(), None), BigInt::one()));
            }
            for (rho, sigma) in bipartitions(g.n) {
                if g.n == 0 || sigma.len() % 2 == 1 {
                    continue;
                }
                if sigma.is_empty() && rho.is_even() {
                    for s in [Sign::Plus, Sign::Minus] {
                        let z = rho.z() << rho.len();
                        labels.push((ClassLabel::d(rho.clone(), sigma.clone(), Some(s)), z));
                    }
                } else {
                    let z = (rho.z() * sigma.z()) << (rho.len() + sigma.len() - 1);
                    labels.push((ClassLabel::d(rho, sigma, None), z));
                }
            }
        }
    }
    labels
        .into_iter()
        .map(|(label, z)| {
            let class_size = &order / &z;
            ClassData { label, centralizer_order: z, class_size }
        })
        .collect()
}

/// `|W|` within the public rank bounds.
pub fn group_order(ty: WeylType, n: usize) -> Result<BigInt> {
    Ok(Group::new(ty, n)?.order())
}

/// The conjugacy classes of `W`, sorted by `(|σ|, σ, ρ, split)`.
pub fn classes(ty: WeylType, n: usize) -> Result<Arc<Vec<ClassData>>> {
    Ok(Group::new(ty, n)?.classes())
}

/// An irreducible character: `λ` for `S_n`, `(α, β)` for `W(BC_n)`, and for
/// `W(D_n)` an unordered pair `{α, β}` stored with `α ≤ β`, split into
/// `{λ, λ}±` when `α = β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrLabel {
    pub ty: WeylType,
    pub alpha: Partition,
    pub beta: Partition,
    pub split: Option<Sign>,
}

impl IrrLabel {
    pub fn a(lambda: Partition) -> Self {
        IrrLabel { ty: WeylType::A, alpha: lambda, beta: Partition::empty(), split: None }
    }

    pub fn bc(alpha: Partition, beta: Partition) -> Self {
        IrrLabel { ty: WeylType::BC, alpha, beta, split: None }
    }

    /// Canonical `W(D_n)` label; `split` is required exactly when
    /// `α = β ≠ ∅`.
    pub fn d(alpha: Partition, beta: Partition, split: Option<Sign>) -> Result<Self> {
        let (alpha, beta) = if alpha <= beta { (alpha, beta) } else { (beta, alpha) };
        let needs_split = alpha == beta && !alpha.is_empty();
        if needs_split != split.is_some() {
            return Err(Error::InvalidLabel(format!(
                "{{{alpha},{beta}}} {} a split marker",
                if needs_split { "needs" } else { "does not take" }
            )));
        }
        Ok(IrrLabel { ty: WeylType::D, alpha, beta, split })
    }

    pub fn size(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            WeylType::A => write!(f, "{}", self.alpha),
            WeylType::BC => write!(f, "({},{})", self.alpha, self.beta),
            WeylType::D => {
                write!(f, "{{{},{}}}", self.alpha, self.beta)?;
                if let Some(s) = self.split {
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}


#[cfg(test)]
mod tests;
