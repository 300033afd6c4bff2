use super::*;
use crate::symfunc::{complete, SymFunc, SymFunc2};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::collections::HashMap;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Enumerates `W(BC_n)` as signed permutations and returns the number of
/// elements in each `(ρ, σ)` class, splitting cycles by the product of their
/// signs; for type D only elements with an even number of sign changes are
/// kept.
fn brute_class_sizes(n: usize, only_even: bool) -> HashMap<(Partition, Partition), u64> {
    let mut counts = HashMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut perms = Vec::new();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, &mut perms);
    if n == 0 {
        perms = vec![Vec::new()];
    }
    for w in &perms {
        for signs in 0u32..(1 << n) {
            if only_even && signs.count_ones() % 2 == 1 {
                continue;
            }
            let mut seen = vec![false; n];
            let (mut rho, mut sigma) = (Vec::new(), Vec::new());
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let (mut len, mut neg, mut i) = (0, 0, start);
                while !seen[i] {
                    seen[i] = true;
                    len += 1;
                    neg += (signs >> i) & 1;
                    i = w[i];
                }
                if neg % 2 == 0 {
                    rho.push(len);
                } else {
                    sigma.push(len);
                }
            }
            *counts.entry((Partition::new(rho), Partition::new(sigma))).or_insert(0) += 1;
        }
    }
    counts
}

fn hook_dimension(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let n = lambda.size();
    let mut num: BigInt = (1..=n).fold(BigInt::one(), |a, k| a * k);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = row - j + conj.part(j) - i - 1;
            num /= BigInt::from(hook);
        }
    }
    num
}

#[test]
fn class_examples() {
    let bc2 = classes(WeylType::BC, 2).unwrap();
    assert_eq!(bc2.len(), 5);
    let mut sizes: Vec<BigInt> = bc2.iter().map(|c| c.class_size.clone()).collect();
    assert_eq!(sizes.iter().sum::<BigInt>(), BigInt::from(8));
    sizes.sort();
    assert_eq!(sizes, [1, 1, 2, 2, 2].map(BigInt::from).to_vec());
    assert_eq!(group_order(WeylType::D, 3).unwrap(), BigInt::from(24));
    let a3 = classes(WeylType::A, 3).unwrap();
    let labels: Vec<String> = a3.iter().map(|c| c.label.to_string()).collect();
    assert_eq!(labels, ["1,1,1", "2,1", "3"]);
    let sizes: Vec<BigInt> = a3.iter().map(|c| c.class_size.clone()).collect();
    assert_eq!(sizes, [1, 3, 2].map(BigInt::from).to_vec());
    assert!(matches!(classes(WeylType::D, 1), Err(Error::RankTooSmall { .. })));
    assert!(matches!(classes(WeylType::A, 0), Err(Error::RankTooSmall { .. })));
}

#[test]
fn class_bookkeeping() {
    for ty in [WeylType::A, WeylType::BC, WeylType::D] {
        for n in 0..=7 {
            let g = Group::factor(ty, n);
            let cls = g.classes();
            let total: BigInt = cls.iter().map(|c| c.class_size.clone()).sum();
            assert_eq!(total, g.order(), "{g}");
            for c in cls.iter() {
                assert_eq!(&c.class_size * &c.centralizer_order, g.order(), "{g} {}", c.label);
            }
        }
    }
}

#[test]
fn class_sizes_match_signed_permutations() {
    for n in 0..=5 {
        let bc = brute_class_sizes(n, false);
        let g = Group::factor(WeylType::BC, n);
        assert_eq!(bc.len(), g.classes().len());
        for c in g.classes().iter() {
            let key = (c.label.rho.clone(), c.label.sigma.clone());
            assert_eq!(BigInt::from(bc[&key]), c.class_size, "{g} {}", c.label);
        }
        let d = brute_class_sizes(n, true);
        let g = Group::factor(WeylType::D, n);
        let mut merged: HashMap<(Partition, Partition), BigInt> = HashMap::new();
        for c in g.classes().iter() {
            *merged.entry((c.label.rho.clone(), c.label.sigma.clone())).or_insert_with(BigInt::zero) +=
                &c.class_size;
        }
        assert_eq!(merged.len(), d.len());
        for (k, v) in d {
            assert_eq!(merged[&k], BigInt::from(v), "{g} {k:?}");
        }
    }
}

#[test]
fn class_label_text() {
    let l = ClassLabel::parse(WeylType::D, "2,-;+").unwrap();
    assert_eq!(l, ClassLabel::d(p("2"), p(""), Some(Sign::Plus)));
    assert_eq!(l.to_string(), "2;-;+");
    assert_eq!(ClassLabel::parse(WeylType::D, "2;-;+").unwrap(), l);
    assert_eq!(ClassLabel::parse(WeylType::D, "2;+").unwrap(), l);
    assert_eq!(ClassLabel::parse(WeylType::D, "4;-;-").unwrap().split, Some(Sign::Minus));
    assert_eq!(ClassLabel::parse(WeylType::BC, "2,1;1").unwrap(), ClassLabel::bc(p("2,1"), p("1")));
    assert_eq!(ClassLabel::parse(WeylType::BC, "-;1,1").unwrap(), ClassLabel::bc(p(""), p("1,1")));
    assert!(ClassLabel::parse(WeylType::BC, "2;-;+").is_err());
    assert_eq!(ClassLabel::parse(WeylType::A, "3,1").unwrap(), ClassLabel::a(p("3,1")));
    for ty in [WeylType::A, WeylType::BC, WeylType::D] {
        for c in Group::factor(ty, 4).classes().iter() {
            assert_eq!(ClassLabel::parse(ty, &c.label.to_string()).unwrap(), c.label);
        }
    }
}

#[test]
fn symmetric_group_characters() {
    assert_eq!(sym_char(&p("1,1"), &p("2")).unwrap(), -1);
    assert_eq!(sym_char(&p("2,1"), &p("1,1,1")).unwrap(), 2);
    assert!(sym_char(&p("2"), &p("1")).is_err());
    for n in 1..=8 {
        for rho in enumerate_partitions(n) {
            assert_eq!(sym_char(&Partition::row(n), &rho).unwrap(), 1);
            let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sym_char(&Partition::column(n), &rho).unwrap(), sign);
        }
        for lambda in enumerate_partitions(n) {
            assert_eq!(BigInt::from(sym_char(&lambda, &Partition::column(n)).unwrap()), hook_dimension(&lambda));
        }
    }
}

#[test]
fn hyperoctahedral_characters() {
    for n in 1..=4 {
        let triv = bc_char(&Partition::row(n), &p(""));
        assert_eq!(triv, ClassFunction::trivial(Group::factor(WeylType::BC, n)));
        // χ^{(∅,(n))} = (−1)^{l(σ)} and χ^{(∅,(1^n))} is the sign of the Coxeter group
        let eta = bc_char(&p(""), &Partition::row(n));
        let sgn = bc_char(&p(""), &Partition::column(n));
        for c in Group::factor(WeylType::BC, n).classes().iter() {
            let e = if c.label.sigma.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(eta.value(&c.label).unwrap(), &int(e));
            let perm_sign = if (n - c.label.rho.len() - c.label.sigma.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sgn.value(&c.label).unwrap(), &int(e * perm_sign));
        }
    }
    let chi = bc_char(&p(""), &p("1"));
    assert_eq!(chi.value(&ClassLabel::bc(p(""), p("1"))).unwrap(), &int(-1));
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=7 {
        let t = character_table(Group::factor(WeylType::A, n));
        assert_eq!(orthogonality_failure(&t), None, "S_{n}");
    }
    for n in 0..=6 {
        let t = character_table(Group::factor(WeylType::BC, n));
        assert_eq!(orthogonality_failure(&t), None, "BC_{n}");
    }
    for n in 0..=6 {
        let t = character_table(Group::factor(WeylType::D, n));
        assert_eq!(orthogonality_failure(&t), None, "D_{n}");
    }
}

#[test]
fn klein_four_table() {
    let g = Group::factor(WeylType::D, 2);
    let t = character_table(g);
    assert_eq!(t.irreps.len(), 4);
    for row in &t.values {
        assert!(row.iter().all(|v| v == &BigInt::one() || v == &BigInt::from(-1)));
    }
    let plus = d_char(&IrrLabel::d(p("1"), p("1"), Some(Sign::Plus)).unwrap()).unwrap();
    let minus = d_char(&IrrLabel::d(p("1"), p("1"), Some(Sign::Minus)).unwrap()).unwrap();
    let delta = plus.sub(&minus).unwrap();
    let cp = ClassLabel::d(p("2"), p(""), Some(Sign::Plus));
    let cm = ClassLabel::d(p("2"), p(""), Some(Sign::Minus));
    assert_eq!(delta.value(&cp).unwrap(), &int(2));
    assert_eq!(delta.value(&cm).unwrap(), &int(-2));
    assert_eq!(delta.value(&ClassLabel::d(p("1,1"), p(""), None)).unwrap(), &int(0));
}

#[test]
fn type_d_trivial_and_labels() {
    for n in 2..=5 {
        let triv = d_char(&IrrLabel::d(Partition::row(n), p(""), None).unwrap()).unwrap();
        assert_eq!(triv, ClassFunction::trivial(Group::factor(WeylType::D, n)));
    }
    assert!(IrrLabel::d(p("1"), p("1"), None).is_err());
    assert!(IrrLabel::d(p("2"), p("1"), Some(Sign::Plus)).is_err());
    let swapped = IrrLabel::d(p("2"), p("1"), None).unwrap();
    assert_eq!((swapped.alpha.clone(), swapped.beta.clone()), (p("1"), p("2")));
    assert!(d_char(&IrrLabel::bc(p("1"), p("1"))).is_err());
    assert!(matches!(d_char(&IrrLabel::d(p("1"), p(""), None).unwrap()), Err(Error::RankTooSmall { .. })));
}

fn restrict_to_d(f: &ClassFunction) -> ClassFunction {
    let d = Group::factor(WeylType::D, f.group().n);
    ClassFunction::from_fn(d, |c| f.value(&c.to_bc()).unwrap().clone())
}

#[test]
fn restriction_from_bc_to_d() {
    for n in 2..=6 {
        for a in 0..=n {
            for alpha in enumerate_partitions(a) {
                for beta in enumerate_partitions(n - a) {
                    let r = restrict_to_d(&bc_char(&alpha, &beta));
                    assert_eq!(r, restrict_to_d(&bc_char(&beta, &alpha)));
                    let norm = r.inner(&r).unwrap();
                    if alpha != beta {
                        assert_eq!(norm, int(1));
                        assert_eq!(r, d_char(&IrrLabel::d(alpha.clone(), beta.clone(), None).unwrap()).unwrap());
                    } else {
                        assert_eq!(norm, int(2));
                        let plus = d_char(&IrrLabel::d(alpha.clone(), beta.clone(), Some(Sign::Plus)).unwrap()).unwrap();
                        let minus = d_char(&IrrLabel::d(alpha.clone(), beta.clone(), Some(Sign::Minus)).unwrap()).unwrap();
                        assert_eq!(plus.add(&minus).unwrap(), r);
                    }
                }
            }
        }
    }
}

#[test]
fn sign_pinning() {
    for n in [2usize, 4, 6] {
        let ind = |b: Branch| {
            let par = Parabolic::new(WeylType::D, n, n, b).unwrap();
            par.induce(&ProductClassFunction::trivial(par)).unwrap()
        };
        let plus = ind(Branch::Plus);
        let minus = ind(Branch::Minus);
        for lambda in enumerate_partitions(n / 2) {
            let chi = |s| d_char(&IrrLabel::d(lambda.clone(), lambda.clone(), Some(s)).unwrap()).unwrap();
            assert_eq!(plus.inner(&chi(Sign::Minus)).unwrap(), int(0), "n = {n}, λ = {lambda}");
            assert_eq!(minus.inner(&chi(Sign::Plus)).unwrap(), int(0), "n = {n}, λ = {lambda}");
        }
    }
}

#[test]
fn frobenius_maps() {
    for n in 0..=5 {
        for lambda in enumerate_partitions(n) {
            let chi = irreducible(&IrrLabel::a(lambda.clone())).unwrap();
            assert_eq!(frobenius_A(&chi).unwrap(), SymFunc::schur(lambda.clone()));
            assert_eq!(frobenius_A_inv(&SymFunc::schur(lambda.clone())).unwrap(), chi);
        }
        for a in 0..=n {
            for alpha in enumerate_partitions(a) {
                for beta in enumerate_partitions(n - a) {
                    let chi = bc_char(&alpha, &beta);
                    let pair = SymFunc2::from_pair(alpha.clone(), beta.clone());
                    assert_eq!(frobenius_BC(&chi).unwrap(), pair);
                    assert_eq!(frobenius_BC_inv(&pair).unwrap(), chi);
                }
            }
        }
    }
    let half = ClassFunction::trivial(Group::factor(WeylType::A, 2)).scale(&BigRational::new(1.into(), 2.into()));
    assert!(matches!(frobenius_A(&half), Err(Error::NotIntegral(_))));
    let graded = SymFunc::from_terms(1, [(p("1"), crate::poly::IntPoly::t())]).unwrap();
    assert!(matches!(frobenius_A_inv(&graded), Err(Error::NotIntegral(_))));
}

#[test]
fn frobenius_is_an_isometry() {
    for n in 1..=5 {
        let g = Group::factor(WeylType::BC, n);
        let t = character_table(g);
        let images: Vec<SymFunc2> = (0..t.irreps.len()).map(|i| frobenius_BC(&t.character(i)).unwrap()).collect();
        for i in 0..t.irreps.len() {
            for j in 0..t.irreps.len() {
                let lhs = t.character(i).inner(&t.character(j)).unwrap();
                let rhs = images[i].scalar(&images[j]).unwrap();
                assert_eq!(lhs, BigRational::from_integer(rhs.as_constant().unwrap()));
            }
        }
        let g = Group::factor(WeylType::A, n);
        let t = character_table(g);
        let images: Vec<SymFunc> = (0..t.irreps.len()).map(|i| frobenius_A(&t.character(i)).unwrap()).collect();
        for i in 0..t.irreps.len() {
            for j in 0..t.irreps.len() {
                let lhs = t.character(i).inner(&t.character(j)).unwrap();
                let rhs = images[i].scalar(&images[j]).unwrap();
                assert_eq!(lhs, BigRational::from_integer(rhs.as_constant().unwrap()));
            }
        }
    }
}

#[test]
fn induction_from_symmetric_group() {
    for n in 1..=5 {
        let par = Parabolic::new(WeylType::BC, n, n, Branch::Plain).unwrap();
        let triv = ProductClassFunction::trivial(par);
        let ind = par.induce(&triv).unwrap();
        let expected = frobenius_BC_inv(&SymFunc2::delta(&complete(&Partition::row(n)))).unwrap();
        assert_eq!(ind, expected);
    }
}

#[test]
fn induction_basics() {
    for ty in [WeylType::A, WeylType::BC, WeylType::D] {
        for n in 2..=5 {
            for k in 1..=n {
                let branches: &[Branch] = if ty == WeylType::D { &[Branch::Plus, Branch::Minus] } else { &[Branch::Plain] };
                for &b in branches {
                    let par = Parabolic::new(ty, n, k, b).unwrap();
                    let ind = par.induce(&ProductClassFunction::trivial(par)).unwrap();
                    let index = BigRational::new(par.whole().order(), par.order());
                    assert_eq!(ind.degree(), &index, "{ty} {n} {k}");
                    assert_eq!(ind.inner(&ClassFunction::trivial(par.whole())).unwrap(), int(1));
                    assert!(ind.is_character());
                }
            }
        }
    }
    assert!(matches!(Parabolic::new(WeylType::BC, 3, 4, Branch::Plain), Err(Error::InvalidParabolic(_))));
    assert!(matches!(Parabolic::new(WeylType::BC, 3, 0, Branch::Plain), Err(Error::InvalidParabolic(_))));
    assert!(matches!(Parabolic::new(WeylType::BC, 3, 1, Branch::Plus), Err(Error::InvalidParabolic(_))));
}

#[test]
fn induced_products_multiply() {
    // Ψ(Ind (f × g)) = Ψ(f) Ψ(g)
    for n in 2..=6 {
        for k in 1..n {
            let par = Parabolic::new(WeylType::A, n, k, Branch::Plain).unwrap();
            for a in enumerate_partitions(k) {
                for b in enumerate_partitions(n - k) {
                    let f = irreducible(&IrrLabel::a(a.clone())).unwrap();
                    let g = irreducible(&IrrLabel::a(b.clone())).unwrap();
                    let ind = par.induce(&ProductClassFunction::tensor(par, &f, &g).unwrap()).unwrap();
                    let lhs = frobenius_A(&ind).unwrap();
                    assert_eq!(lhs, SymFunc::schur(a.clone()).multiply(&SymFunc::schur(b.clone())));
                }
            }
        }
    }
}

#[test]
fn coset_restriction() {
    for ty in [WeylType::BC, WeylType::D] {
        for n in 2..=5 {
            let triv = ClassFunction::trivial(Group::factor(ty, n));
            for k in 1..=n {
                let r = restrict_coset(&triv, k, Branch::Plain).unwrap();
                assert_eq!(r, ClassFunction::trivial(Group::factor(ty, n - k)));
            }
        }
    }
    let chi = bc_char(&p("2"), &p("1"));
    let r = restrict_coset(&chi, 3, Branch::Plain).unwrap();
    assert_eq!(r.values().len(), 1);
    assert_eq!(&r.values()[0], chi.value(&ClassLabel::bc(p("3"), p(""))).unwrap());
    assert!(matches!(restrict_coset(&chi, 4, Branch::Plain), Err(Error::InvalidParabolic(_))));
    // the branch selects the split half at k = n
    let plus = d_char(&IrrLabel::d(p("1"), p("1"), Some(Sign::Plus)).unwrap()).unwrap();
    let at_plus = restrict_coset(&plus, 2, Branch::Plus).unwrap();
    let at_minus = restrict_coset(&plus, 2, Branch::Minus).unwrap();
    assert_eq!(&at_plus.values()[0], plus.value(&ClassLabel::d(p("2"), p(""), Some(Sign::Plus))).unwrap());
    assert_eq!(&at_minus.values()[0], plus.value(&ClassLabel::d(p("2"), p(""), Some(Sign::Minus))).unwrap());
}

fn arb_class_function(g: Group) -> impl Strategy<Value = ClassFunction> {
    let len = g.classes().len();
    proptest::collection::vec(-4i64..5, len)
        .prop_map(move |v| ClassFunction::from_integers(g, &v.into_iter().map(BigInt::from).collect::<Vec<_>>()))
}

fn arb_case() -> impl Strategy<Value = (Parabolic, ClassFunction, ClassFunction, ClassFunction)> {
    (0usize..3, 2usize..=5)
        .prop_flat_map(|(t, n)| (Just(t), Just(n), 1..=n, 0usize..2))
        .prop_flat_map(|(t, n, k, b)| {
            let ty = [WeylType::A, WeylType::BC, WeylType::D][t];
            let branch = if ty == WeylType::D { [Branch::Plus, Branch::Minus][b] } else { Branch::Plain };
            let par = Parabolic::new(ty, n, k, branch).unwrap();
            (
                Just(par),
                arb_class_function(Group::factor(WeylType::A, k)),
                arb_class_function(par.complement()),
                arb_class_function(par.whole()),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frobenius_reciprocity((par, f, g, h) in arb_case()) {
        let sub = ProductClassFunction::tensor(par, &f, &g).unwrap();
        let lhs = par.induce(&sub).unwrap().inner(&h).unwrap();
        let rhs = sub.inner(&par.restrict(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
