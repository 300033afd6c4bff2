//! Checks of the restriction, induction and consistency identities for
//! total Springer characters.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::report::{Case, Report};
use super::{
    ague_function, d_total_function, euler_characteristic, gue_function, kostka_at, partition_label,
    springer_label, total_function, NilpotentLabel, SpringerLabel,
};
use crate::error::{Error, Result};
use crate::partitions::{
    enumerate_jordan_types, enumerate_partitions, is_very_even, removal_expansion, LieType, Partition, Sign, SignRule,
};
use crate::symfunc::{complete, green_at, mn_character};
use crate::weylchar::{
    character_table, orthogonality_failure, restrict_coset, Branch, ClassFunction, ClassLabel, Group, IrrLabel,
    Parabolic, ProductClassFunction, WeylType,
};

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn require_classical(ty: LieType, n: usize) -> Result<()> {
    if ty == LieType::A {
        return Err(Error::InvalidLabel("this suite covers types B, C and D".into()));
    }
    Group::new(WeylType::from(ty), n)?;
    Ok(())
}

/// Distinct Jordan types of rank `n`, forgetting the marker.
fn partitions_of_rank(ty: LieType, n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = Vec::new();
    for (lambda, _) in enumerate_jordan_types(ty, n) {
        if out.last() != Some(&lambda) {
            out.push(lambda);
        }
    }
    out
}

fn collect(suite: &str, ty: impl std::fmt::Display, n: usize, start: Instant, cases: Vec<Vec<Case>>) -> Report {
    Report::new(suite, ty, n, cases.into_iter().flatten().collect(), start.elapsed())
}

fn lower_sum(group: Group, terms: impl IntoIterator<Item = (BigRational, ClassFunction)>) -> Result<ClassFunction> {
    let mut acc = ClassFunction::zero(group);
    for (c, f) in terms {
        acc = acc.add(&f.scale(&c))?;
    }
    Ok(acc)
}

/// The doubled type D character with the rank 0 and rank 1 conventions.
fn ague_extended(lambda: &Partition, rank: usize) -> Result<ClassFunction> {
    match rank {
        0 if lambda.is_empty() => Ok(ClassFunction::trivial(Group::factor(WeylType::D, 0))),
        1 if *lambda == Partition::column(2) => Ok(ClassFunction::trivial(Group::factor(WeylType::D, 1)).scale_int(2)),
        0 | 1 => Err(Error::InvalidJordanType(format!("{lambda} in rank {rank}"))),
        _ => Ok(ague_function(lambda)),
    }
}

fn bc_restriction_cases(ty: LieType, n: usize, lambda: &Partition) -> Vec<Case> {
    let whole = gue_function(ty, lambda);
    (1..=n)
        .map(|k| {
            let param = format!("k={k}");
            let run = || -> Result<Case> {
                let lhs = restrict_coset(&whole, k, Branch::Plain)?;
                let terms = removal_expansion(lambda, k, SignRule::Height);
                let rhs = lower_sum(
                    Group::factor(WeylType::BC, n - k),
                    terms.into_iter().map(|t| (int(t.coefficient), gue_function(ty, &t.partition))),
                )?;
                Ok(Case::functions(lambda.to_text(), &param, &lhs, &rhs))
            };
            run().unwrap_or_else(|e| Case::error(lambda.to_text(), &param, &e))
        })
        .collect()
}

fn branches(k: usize, n: usize) -> Vec<Branch> {
    if k == n {
        vec![Branch::Plus, Branch::Minus]
    } else {
        vec![Branch::Plain]
    }
}

fn branch_text(b: Branch) -> &'static str {
    match b {
        Branch::Plain => "",
        Branch::Plus => ",c+",
        Branch::Minus => ",c-",
    }
}

/// `Res_{c·W′} ague(λ) = Σ c_i ague(λ′_i)` for every `k`.
fn d_averaged_restriction_cases(n: usize, lambda: &Partition) -> Vec<Case> {
    let whole = ague_function(lambda);
    let mut out = Vec::new();
    for k in 1..=n {
        for b in branches(k, n) {
            let param = format!("averaged,k={k}{}", branch_text(b));
            let run = || -> Result<Case> {
                let lhs = restrict_coset(&whole, k, b)?;
                let mut terms = Vec::new();
                for t in removal_expansion(lambda, k, SignRule::Height) {
                    terms.push((int(t.coefficient), ague_extended(&t.partition, n - k)?));
                }
                let rhs = lower_sum(Group::factor(WeylType::D, n - k), terms)?;
                Ok(Case::functions(lambda.to_text(), &param, &lhs, &rhs))
            };
            out.push(run().unwrap_or_else(|e| Case::error(lambda.to_text(), &param, &e)));
        }
    }
    out
}

/// `ch X_λ(c)` for `c` an `(n−1)`-cycle in `W(D_n)`.
fn near_regular_value(n: usize, lambda: &Partition) -> i64 {
    let p = |v: &[usize]| Partition::new(v.to_vec());
    if n == 2 {
        return match lambda.parts() {
            [1, 1, 1, 1] => 4,
            [2, 2] => 2,
            [3, 1] => 1,
            _ => 0,
        };
    }
    let mut v = 0;
    if *lambda == p(&[n - 1, n - 1, 1, 1]) {
        v += 2;
    }
    if *lambda == p(&[n, n]) {
        v += 2;
    }
    if *lambda == p(&[2 * n - 1, 1]) {
        v += 1;
    }
    if let [i, j, 1, 1] = lambda.parts() {
        if i > j && i % 2 == 1 && j % 2 == 1 && i + j == 2 * n - 2 {
            v += 2;
        }
    }
    if let [i, j] = lambda.parts() {
        if i > j && *j > 1 && i % 2 == 1 && j % 2 == 1 && i + j == 2 * n {
            v += 2;
        }
    }
    v
}

/// `ch X_λ(c±)` for `c±` the two classes of `n`-cycles in `W(D_n)`.
fn regular_value(n: usize, nl: &NilpotentLabel, branch: Branch) -> i64 {
    match nl.lambda.parts() {
        [i, j] if i > j && i % 2 == 1 && j % 2 == 1 && i + j == 2 * n => 1,
        [i, j] if *i == n && *j == n => {
            if n % 2 == 1 {
                1
            } else {
                let at = if branch == Branch::Minus { Sign::Minus } else { Sign::Plus };
                if nl.split == Some(at) {
                    2
                } else {
                    0
                }
            }
        }
        _ => 0,
    }
}

/// `X(λ′)` on the right hand side of the refined restriction formula.
fn refined_term(lambda: &Partition, sign: Option<Sign>) -> ClassFunction {
    if is_very_even(lambda) && !lambda.is_empty() {
        match sign {
            Some(s) => d_total_function(lambda, Some(s)),
            None => ague_function(lambda).scale(&half()),
        }
    } else {
        d_total_function(lambda, None)
    }
}

fn d_refined_restriction_cases(n: usize, nl: &NilpotentLabel) -> Vec<Case> {
    let whole = d_total_function(&nl.lambda, nl.split);
    let mut out = Vec::new();
    for k in 1..=n {
        for b in branches(k, n) {
            let param = format!("k={k}{}", branch_text(b));
            let run = || -> Result<Case> {
                let lhs = restrict_coset(&whole, k, b)?;
                if k + 2 <= n {
                    let sign = if k % 2 == 0 { nl.split } else { None };
                    let terms = removal_expansion(&nl.lambda, k, SignRule::Height)
                        .into_iter()
                        .map(|t| (int(t.coefficient), refined_term(&t.partition, sign)));
                    let rhs = lower_sum(Group::factor(WeylType::D, n - k), terms)?;
                    return Ok(Case::functions(nl.text(), &param, &lhs, &rhs));
                }
                let expected = if k + 1 == n { near_regular_value(n, &nl.lambda) } else { regular_value(n, nl, b) };
                let rhs = ClassFunction::trivial(lhs.group()).scale_int(expected);
                Ok(Case::functions(nl.text(), &param, &lhs, &rhs))
            };
            out.push(run().unwrap_or_else(|e| Case::error(nl.text(), &param, &e)));
        }
    }
    out
}

/// Restriction of total characters to cosets `c·W′` of `k`-cycles, against
/// the removal expansion into lower rank characters. In type D both the
/// averaged form and the refined form, including the delta-function values
/// at `k = n−1` and `k = n`, are checked.
pub fn verify_restriction(ty: LieType, n: usize) -> Result<Report> {
    require_classical(ty, n)?;
    let start = Instant::now();
    let cases: Vec<Vec<Case>> = match ty {
        LieType::D => {
            let mut cases: Vec<Vec<Case>> = partitions_of_rank(ty, n)
                .par_iter()
                .map(|lambda| d_averaged_restriction_cases(n, lambda))
                .collect();
            let labels = NilpotentLabel::all(ty, n)?;
            cases.extend(labels.par_iter().map(|nl| d_refined_restriction_cases(n, nl)).collect::<Vec<_>>());
            cases
        }
        _ => partitions_of_rank(ty, n).par_iter().map(|lambda| bc_restriction_cases(ty, n, lambda)).collect(),
    };
    Ok(collect("restriction", ty, n, start, cases))
}

fn induction_case(
    whole_label: &Partition,
    param: String,
    lhs: ClassFunction,
    rhs: impl FnOnce() -> Result<ClassFunction>,
) -> Case {
    match rhs() {
        Ok(rhs) => Case::functions(whole_label.to_text(), param, &lhs, &rhs),
        Err(e) => Case::error(whole_label.to_text(), param, &e),
    }
}

fn induce_trivial_times(par: Parabolic, g: &ClassFunction) -> Result<ClassFunction> {
    let one = ClassFunction::trivial(Group::factor(WeylType::A, par.k));
    par.induce(&ProductClassFunction::tensor(par, &one, g)?)
}

/// `gue(λ ∪ (k,k)) = Ind_{S_k × W′}(1 × gue(λ))`, and in type D the same
/// for the doubled characters together with the two exceptional shapes
/// `(n−1,n−1,1,1)` and `(n,n)`.
pub fn verify_induction(ty: LieType, n: usize) -> Result<Report> {
    require_classical(ty, n)?;
    let start = Instant::now();
    let mut jobs: Vec<(usize, Partition)> = Vec::new();
    let top = if ty == LieType::D { n.saturating_sub(2) } else { n };
    for k in 1..=top {
        for lambda in partitions_of_rank(ty, n - k) {
            jobs.push((k, lambda));
        }
    }
    let mut cases: Vec<Vec<Case>> = jobs
        .par_iter()
        .map(|(k, lambda)| {
            let big = lambda.union(&Partition::new(vec![*k, *k]));
            let param = format!("k={k},inner={}", lambda.to_text());
            let case = if ty == LieType::D {
                induction_case(&big, param, ague_function(&big), || {
                    induce_trivial_times(Parabolic::new(WeylType::D, n, *k, Branch::Plain)?, &ague_function(lambda))
                })
            } else {
                induction_case(&big, param, gue_function(ty, &big), || {
                    induce_trivial_times(Parabolic::new(WeylType::BC, n, *k, Branch::Plain)?, &gue_function(ty, lambda))
                })
            };
            vec![case]
        })
        .collect();
    if ty == LieType::D {
        let hook = Partition::new(vec![n - 1, n - 1, 1, 1]);
        cases.push(vec![induction_case(&hook, format!("k={}", n - 1), ague_function(&hook), || {
            let par = Parabolic::new(WeylType::D, n, n - 1, Branch::Plain)?;
            induce_trivial_times(par, &ClassFunction::trivial(par.complement()).scale_int(2))
        })]);
        let square = Partition::new(vec![n, n]);
        cases.push(vec![induction_case(&square, format!("k={n},S+ and S-"), ague_function(&square), || {
            let plus = Parabolic::new(WeylType::D, n, n, Branch::Plus)?;
            let minus = Parabolic::new(WeylType::D, n, n, Branch::Minus)?;
            plus.induce(&ProductClassFunction::trivial(plus))?.add(&minus.induce(&ProductClassFunction::trivial(minus))?)
        })]);
    }
    Ok(collect("induction", ty, n, start, cases))
}

/// Class labels `(ρ,∅)` with their markers, as `(ρ, marker, label)`.
fn parabolic_classes(ty: LieType, n: usize) -> Vec<(Partition, Option<Sign>, ClassLabel)> {
    let mut out = Vec::new();
    for rho in enumerate_partitions(n) {
        match ty {
            LieType::A => out.push((rho.clone(), None, ClassLabel::a(rho))),
            LieType::B | LieType::C => out.push((rho.clone(), None, ClassLabel::bc(rho, Partition::empty()))),
            LieType::D => {
                if rho.is_even() && !rho.is_empty() {
                    for s in [Sign::Plus, Sign::Minus] {
                        out.push((rho.clone(), Some(s), ClassLabel::d(rho.clone(), Partition::empty(), Some(s))));
                    }
                } else {
                    out.push((rho.clone(), None, ClassLabel::d(rho, Partition::empty(), None)));
                }
            }
        }
    }
    out
}

fn consistency_cases(nl: &NilpotentLabel) -> Vec<Case> {
    let chi = total_function(nl);
    parabolic_classes(nl.ty, nl.n)
        .into_iter()
        .map(|(rho, split, class)| {
            let param = format!("class={class}");
            let run = || -> Result<Case> {
                let lhs = chi.value(&class)?.clone();
                let rhs = BigRational::from_integer(super::green_value(nl, &rho, split)?);
                Ok(Case::values(nl.text(), &param, lhs, rhs))
            };
            run().unwrap_or_else(|e| Case::error(nl.text(), &param, &e))
        })
        .collect()
}

/// `Σ_μ̃ K_{μ̃,λ̃}(1) 2^{l(τ)} χ^μ̃(τ) = gr^{2λ̃∪2λ̃}_{4τ}(−1)`.
fn difference_value_cases(n: usize) -> Vec<Case> {
    if n % 2 == 1 {
        return Vec::new();
    }
    let m = n / 2;
    let mut out = Vec::new();
    for lt in enumerate_partitions(m) {
        let lambda = lt.scale(2).union(&lt.scale(2));
        for tau in enumerate_partitions(m) {
            let param = format!("difference,tau={}", tau.to_text());
            let mut lhs = BigInt::zero();
            for mt in enumerate_partitions(m) {
                lhs += (kostka_at(&mt, &lt, 1) * BigInt::from(mn_character(&mt, &tau))) << tau.len();
            }
            out.push(match green_at(&lambda, &tau.scale(4), -1) {
                Ok(rhs) => Case::values(lambda.to_text(), param, lhs, rhs),
                Err(e) => Case::error(lambda.to_text(), param, &e),
            });
        }
    }
    out
}

/// Values of total characters at the classes `(ρ,∅)` (both halves of
/// split classes in type D) against Green polynomial values.
pub fn verify_main_consistency(ty: LieType, n: usize) -> Result<Report> {
    if ty != LieType::A {
        require_classical(ty, n)?;
    } else {
        Group::new(WeylType::A, n)?;
    }
    let start = Instant::now();
    let labels = NilpotentLabel::all(ty, n)?;
    let mut cases: Vec<Vec<Case>> = labels.par_iter().map(consistency_cases).collect();
    if ty == LieType::D {
        cases.push(difference_value_cases(n));
    }
    Ok(collect("main-consistency", ty, n, start, cases))
}

/// Pairings of the differences `ch X_{λ+} − ch X_{λ−}` for
/// `λ = 2λ̃ ∪ 2λ̃` with the split irreducibles, with each other, and
/// unitriangularity of the resulting matrix.
pub fn verify_difference_pairing(n: usize) -> Result<Report> {
    if n % 2 == 1 {
        return Err(Error::InvalidLabel(format!("the difference pairing needs even rank, got {n}")));
    }
    Group::new(WeylType::D, n)?;
    let start = Instant::now();
    let m = n / 2;
    let tildes = enumerate_partitions(m);
    let very_even = |p: &Partition| p.scale(2).union(&p.scale(2));
    let diffs: Vec<ClassFunction> = tildes
        .par_iter()
        .map(|lt| {
            let lambda = very_even(lt);
            d_total_function(&lambda, Some(Sign::Plus))
                .sub(&d_total_function(&lambda, Some(Sign::Minus)))
                .expect("same group")
        })
        .collect();
    let irr = |mt: &Partition, s: Sign| -> Result<ClassFunction> {
        let label = match partition_label(LieType::D, &very_even(mt), Some(s))? {
            SpringerLabel::Irreducible(l) => l,
            SpringerLabel::Zero => return Err(Error::Internal(format!("{mt} doubled has a zero label"))),
        };
        let table = character_table(Group::factor(WeylType::D, n));
        Ok(table.character(table.irrep_index(&label)?))
    };
    let mut cases = Vec::new();
    for (li, lt) in tildes.iter().enumerate() {
        let name = very_even(lt).to_text();
        let mut unitriangular = true;
        for (mi, mt) in tildes.iter().enumerate() {
            let k = kostka_at(mt, lt, 1);
            for s in [Sign::Plus, Sign::Minus] {
                let param = format!("mu={}{s}", very_even(mt).to_text());
                let expected = if s == Sign::Plus { k.clone() } else { -k.clone() };
                let case = match irr(mt, s).and_then(|chi| diffs[li].inner(&chi)) {
                    Ok(v) => {
                        if s == Sign::Plus {
                            let diagonal_ok = li != mi || v == int(1);
                            let support_ok = v.is_zero() || mt.dominance_geq(lt).unwrap_or(false);
                            unitriangular &= diagonal_ok && support_ok;
                        }
                        Case::values(&name, param, v, BigRational::from_integer(expected))
                    }
                    Err(e) => Case::error(&name, param, &e),
                };
                cases.push(case);
            }
            let param = format!("pairing,mu={}", very_even(mt).to_text());
            let case = match diffs[li].inner(&diffs[mi]) {
                Ok(v) => {
                    let h = complete(lt).scalar(&complete(mt)).expect("same degree");
                    let h = h.as_constant().expect("constant coefficients");
                    Case::values(&name, param, v, BigRational::from_integer(h * 2))
                }
                Err(e) => Case::error(&name, param, &e),
            };
            cases.push(case);
        }
        cases.push(if unitriangular {
            Case::ok(&name, "unitriangular")
        } else {
            Case::fail(&name, "unitriangular", "matrix entry outside the dominance order or diagonal not 1")
        });
    }
    Ok(Report::new("difference", LieType::D, n, cases, start.elapsed()))
}

/// Partitions of `size` grouped by the irreducible they label.
fn label_preimages(ty: LieType, size: usize) -> BTreeMap<IrrLabel, Vec<Partition>> {
    let mut map: BTreeMap<IrrLabel, Vec<Partition>> = BTreeMap::new();
    for mu in enumerate_partitions(size) {
        let splits: &[Option<Sign>] = if ty == LieType::D && is_very_even(&mu) && !mu.is_empty() {
            &[Some(Sign::Plus), Some(Sign::Minus)]
        } else {
            &[None]
        };
        for &s in splits {
            if let Ok(SpringerLabel::Irreducible(l)) = partition_label(ty, &mu, s) {
                map.entry(l).or_default().push(mu.clone());
            }
        }
    }
    map
}

/// `λ₁ ≤ μ₁` for every constituent `χ^μ` of a total character.
pub fn verify_triangularity(ty: LieType, n: usize) -> Result<Report> {
    Group::new(WeylType::from(ty), n)?;
    let start = Instant::now();
    let preimages = label_preimages(ty, ty.jordan_size(n));
    let labels = NilpotentLabel::all(ty, n)?;
    let cases: Vec<Vec<Case>> = labels
        .par_iter()
        .map(|nl| {
            let chi = total_function(nl);
            let lambda1 = nl.lambda.first();
            chi.constituents()
                .into_iter()
                .map(|(label, _)| {
                    let param = format!("constituent={label}");
                    match preimages.get(&label) {
                        None => Case::fail(nl.text(), param, "no partition has this label"),
                        Some(mus) => match mus.iter().find(|mu| mu.first() < lambda1) {
                            Some(mu) => {
                                let mut c = Case::fail(nl.text(), param, format!("mu={}", mu.to_text()));
                                c.lhs = Some(lambda1.to_string());
                                c.rhs = Some(mu.first().to_string());
                                c
                            }
                            None => Case::ok(nl.text(), param),
                        },
                    }
                })
                .collect()
        })
        .collect();
    Ok(collect("triangularity", ty, n, start, cases))
}

/// `c ↦ c` with the markers of split classes exchanged.
fn flip_class(c: &ClassLabel) -> ClassLabel {
    ClassLabel { split: c.split.map(Sign::flip), ..c.clone() }
}

fn positivity_cases(nl: &NilpotentLabel) -> Vec<Case> {
    let chi = total_function(nl);
    let name = nl.text();
    let mut out = Vec::new();
    let decomposition = chi.decompose();
    let bad = decomposition.iter().find(|(_, m)| !m.is_integer() || *m < BigRational::zero());
    out.push(match bad {
        None => Case::ok(&name, "multiplicities"),
        Some((l, m)) => {
            let mut c = Case::fail(&name, "multiplicities", format!("{l}"));
            c.lhs = Some(m.to_string());
            c
        }
    });
    out.push(match springer_label(nl) {
        Ok(SpringerLabel::Irreducible(l)) => {
            let m = decomposition.iter().find(|(x, _)| *x == l).map(|(_, m)| m.clone()).unwrap_or_default();
            if m >= int(1) {
                Case::ok(&name, "springer-label")
            } else {
                let mut c = Case::fail(&name, "springer-label", format!("{l}"));
                c.lhs = Some(m.to_string());
                c
            }
        }
        Ok(SpringerLabel::Zero) => Case::fail(&name, "springer-label", "the label is zero"),
        Err(e) => Case::error(&name, "springer-label", &e),
    });
    out.push(match euler_characteristic(nl) {
        Ok(e) => Case::values(&name, "dimension", chi.degree().clone(), BigRational::from_integer(e)),
        Err(e) => Case::error(&name, "dimension", &e),
    });
    if nl.ty == LieType::D {
        let other = total_function(&nl.flip());
        let g = chi.group();
        let swapped = ClassFunction::from_fn(g, |c| other.value(&flip_class(c)).expect("class exists").clone());
        out.push(Case::functions(&name, "tau-symmetry", &chi, &swapped));
    }
    out
}

/// Nonnegative integer multiplicities, the Springer correspondent as a
/// constituent, dimension equal to the Euler characteristic, and in type D
/// the symmetry exchanging `±` together with the values of `ch X_{(n,n)}` at
/// `n`-cycles.
pub fn verify_positivity(ty: LieType, n: usize) -> Result<Report> {
    Group::new(WeylType::from(ty), n)?;
    let start = Instant::now();
    let labels = NilpotentLabel::all(ty, n)?;
    let mut cases: Vec<Vec<Case>> = labels.par_iter().map(positivity_cases).collect();
    if ty == LieType::D {
        let square = Partition::new(vec![n, n]);
        let splits: Vec<Option<Sign>> =
            if n.is_multiple_of(2) { vec![Some(Sign::Plus), Some(Sign::Minus)] } else { vec![None] };
        let mut base = Vec::new();
        for s in splits {
            let nl = NilpotentLabel::new(ty, n, square.clone(), s)?;
            for b in [Branch::Plus, Branch::Minus] {
                let param = format!("regular{}", branch_text(b));
                let case = match restrict_coset(&d_total_function(&square, s), n, b) {
                    Ok(f) => Case::values(nl.text(), param, f.values()[0].clone(), int(regular_value(n, &nl, b))),
                    Err(e) => Case::error(nl.text(), param, &e),
                };
                base.push(case);
            }
        }
        cases.push(base);
    }
    Ok(collect("positivity", ty, n, start, cases))
}

/// Row and column orthogonality and `Σ dim² = |W|` for a character table;
/// in type D with even rank also `⟨Ind_{S_{n±}} 1, χ^{{λ,λ}∓}⟩ = 0`.
pub fn verify_orthogonality(ty: WeylType, n: usize) -> Result<Report> {
    let g = Group::new(ty, n)?;
    let start = Instant::now();
    let table = character_table(g);
    let mut cases = vec![match orthogonality_failure(&table) {
        None => Case::ok(g.to_string(), "orthogonality"),
        Some(w) => Case::fail(g.to_string(), "orthogonality", w),
    }];
    let dims: BigInt = table.values.iter().map(|row| &row[0] * &row[0]).sum();
    cases.push(Case::values(g.to_string(), "sum of squared degrees", dims, g.order()));
    if ty == WeylType::D && n.is_multiple_of(2) {
        for (branch, other) in [(Branch::Plus, Sign::Minus), (Branch::Minus, Sign::Plus)] {
            let par = Parabolic::new(ty, n, n, branch)?;
            let induced = par.induce(&ProductClassFunction::trivial(par))?;
            for lambda in enumerate_partitions(n / 2) {
                let label = IrrLabel::d(lambda.clone(), lambda.clone(), Some(other))?;
                let chi = table.character(table.irrep_index(&label)?);
                let param = format!("sign pinning{}", branch_text(branch));
                cases.push(Case::values(label.to_string(), param, induced.inner(&chi)?, BigRational::zero()));
            }
        }
    }
    Ok(Report::new("orthogonality", ty, n, cases, start.elapsed()))
}
