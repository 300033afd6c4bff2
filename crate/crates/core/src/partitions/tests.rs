use super::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::{BTreeSet, HashSet};

fn p(parts: &[usize]) -> Partition {
    Partition::from_decreasing(parts.to_vec()).unwrap()
}

fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(p(outer), p(inner)).unwrap()
}

fn cells(lambda: &Partition) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            out.insert((r, c));
        }
    }
    out
}

fn from_cells(cells: &BTreeSet<(usize, usize)>) -> Option<Partition> {
    let rows = cells.iter().map(|&(r, _)| r + 1).max().unwrap_or(0);
    let mut parts = vec![0; rows];
    for &(r, _) in cells {
        parts[r] += 1;
    }
    let lambda = Partition::new(parts.clone());
    if lambda.parts() == parts.as_slice() && cells == &self::cells(&lambda) {
        Some(lambda)
    } else {
        None
    }
}

/// Strips dominoes one at a time from the diagram until none can be removed.
fn greedy_two_core(lambda: &Partition) -> Partition {
    let mut current = cells(lambda);
    'outer: loop {
        let list: Vec<_> = current.iter().copied().collect();
        for &(r, c) in &list {
            for &(dr, dc) in &[(0usize, 1usize), (1, 0)] {
                let other = (r + dr, c + dc);
                if current.contains(&other) {
                    let mut next = current.clone();
                    next.remove(&(r, c));
                    next.remove(&other);
                    if from_cells(&next).is_some() {
                        current = next;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    from_cells(&current).unwrap()
}

/// Border strips found by testing every partition of the right size.
fn brute_border_strips(nu: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for mu in enumerate_partitions(nu.size() + k) {
        if !mu.contains(nu) {
            continue;
        }
        let inner = cells(nu);
        let strip: BTreeSet<_> = cells(&mu).difference(&inner).copied().collect();
        let no_square = strip.iter().all(|&(r, c)| {
            !(strip.contains(&(r + 1, c)) && strip.contains(&(r, c + 1)) && strip.contains(&(r + 1, c + 1)))
        });
        let start = *strip.iter().next().unwrap();
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some((r, c)) = stack.pop() {
            let mut nbrs = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                nbrs.push((r - 1, c));
            }
            if c > 0 {
                nbrs.push((r, c - 1));
            }
            for q in nbrs {
                if strip.contains(&q) && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        if no_square && seen.len() == strip.len() {
            let rows: BTreeSet<_> = strip.iter().map(|&(r, _)| r).collect();
            out.push((mu, rows.len() - 1));
        }
    }
    out
}

fn all_partitions_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

#[test]
fn conjugate_examples() {
    assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    assert_eq!(Partition::empty().conjugate(), Partition::empty());
    assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
}

#[test]
fn union_scale_examples() {
    assert_eq!(p(&[3, 1]).union(&p(&[2])), p(&[3, 2, 1]));
    assert_eq!(p(&[2, 1]).scale(2), p(&[4, 2]));
    assert_eq!(p(&[4, 2, 2]).union(&Partition::empty()), p(&[4, 2, 2]));
}

#[test]
fn replace_examples() {
    assert_eq!(p(&[6, 6, 3]).replace(&[6], &[2]).unwrap(), p(&[6, 3, 2]));
    assert_eq!(p(&[5, 3]).replace(&[3], &[3]).unwrap(), p(&[5, 3]));
    assert_eq!(p(&[4, 4]).replace(&[4, 4], &[3, 3]).unwrap(), p(&[3, 3]));
    assert_eq!(p(&[2, 1, 1]).replace(&[1, 1], &[0, 0]).unwrap(), p(&[2]));
    assert_eq!(
        p(&[4, 4]).replace(&[3], &[1]),
        Err(Error::PartNotPresent(vec![3]))
    );
    assert!(p(&[4]).replace(&[4, 4], &[]).is_err());
}

#[test]
fn weight_and_centralizer() {
    assert_eq!(p(&[7]).weight_b(), 0);
    assert_eq!(p(&[1, 1, 1, 1]).weight_b(), 6);
    assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
    assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
    for lambda in all_partitions_upto(10) {
        let via_columns: usize = lambda.conjugate().parts().iter().map(|&c| c * (c.max(1) - 1) / 2).sum();
        assert_eq!(lambda.weight_b(), via_columns, "{lambda}");
    }
}

#[test]
fn heights() {
    for r in 1..6 {
        assert_eq!(SkewShape::new(Partition::column(r), Partition::empty()).unwrap().height().unwrap(), r - 1);
    }
    assert_eq!(skew(&[5], &[]).height().unwrap(), 0);
    assert_eq!(skew(&[2, 1], &[1]).height().unwrap(), 1);
    assert_eq!(skew(&[2, 1], &[2, 1]).height(), Err(Error::EmptyShape));
    assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
}

#[test]
fn two_core_and_quotient_examples() {
    assert_eq!(p(&[10]).two_quotient(), (Partition::empty(), p(&[5])));
    assert_eq!(p(&[2, 2]).two_core(), Partition::empty());
    assert_eq!(Partition::empty().two_quotient(), (Partition::empty(), Partition::empty()));
    assert_eq!(p(&[2, 1]).two_core(), p(&[2, 1]));
    assert_eq!(p(&[2]).two_quotient(), (Partition::empty(), p(&[1])));
    assert_eq!(p(&[1, 1]).two_quotient(), (p(&[1]), Partition::empty()));
}

#[test]
fn two_core_matches_greedy_stripping() {
    for lambda in all_partitions_upto(12) {
        assert_eq!(lambda.two_core(), greedy_two_core(&lambda), "{lambda}");
    }
}

#[test]
fn core_quotient_reconstruction_and_injectivity() {
    for n in 0..=12 {
        let mut seen = HashSet::new();
        for lambda in enumerate_partitions(n) {
            let core = lambda.two_core();
            let (q0, q1) = lambda.two_quotient();
            assert_eq!(n, core.size() + 2 * (q0.size() + q1.size()), "{lambda}");
            let k = core.len();
            assert_eq!(core, Partition::new((1..=k).rev().collect()));
            assert!(seen.insert((core, q0, q1)), "collision at {lambda}");
        }
    }
}

#[test]
fn quotient_does_not_depend_on_even_beta_length() {
    for lambda in all_partitions_upto(10) {
        let m = lambda.len() + lambda.len() % 2 + 2;
        let beta = lambda.beta_numbers(m);
        let half = |r: usize| {
            let b: Vec<usize> = beta.iter().filter(|x| *x % 2 == r).map(|x| x / 2).collect();
            Partition::from_beta_numbers(&b)
        };
        assert_eq!(lambda.two_quotient(), (half(0), half(1)), "{lambda}");
    }
}

#[test]
fn sign_examples() {
    assert_eq!(p(&[1, 1]).sign(), -1);
    assert_eq!(skew(&[2], &[]).two_sign(), 1);
    assert_eq!(skew(&[1, 1], &[]).two_sign(), -1);
    assert_eq!(skew(&[2, 1], &[]).two_sign(), 0);
    assert_eq!(skew(&[3, 3], &[1, 1]).two_sign(), 1);
    assert_eq!(skew(&[3, 1], &[]).two_sign(), -1);
}

#[test]
fn sign_via_even_rows() {
    for lambda in all_partitions_upto(12) {
        let even_rows: usize = lambda.parts().iter().skip(1).step_by(2).sum();
        assert_eq!(lambda.sign(), if even_rows.is_multiple_of(2) { 1 } else { -1 });
    }
}

#[test]
fn two_sign_is_independent_of_tiling() {
    for outer in all_partitions_upto(8) {
        for inner in all_partitions_upto(outer.size()) {
            if !outer.contains(&inner) {
                continue;
            }
            let s = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            let parities: HashSet<usize> = domino_tilings(&s)
                .iter()
                .map(|t| t.iter().filter(|d| d.vertical).count() % 2)
                .collect();
            assert!(parities.len() <= 1, "{s}");
            let expected = match parities.into_iter().next() {
                None => 0,
                Some(0) => 1,
                Some(_) => -1,
            };
            assert_eq!(s.two_sign(), expected, "{s}");
        }
    }
}

#[test]
fn sign_multiplicativity() {
    for outer in all_partitions_upto(10) {
        for inner in all_partitions_upto(outer.size()) {
            if !outer.contains(&inner) {
                continue;
            }
            let e2 = SkewShape::new(outer.clone(), inner.clone()).unwrap().two_sign();
            if e2 != 0 {
                assert_eq!(outer.sign(), inner.sign() * e2, "{outer}/{inner}");
            }
        }
    }
}

#[test]
fn border_strip_examples() {
    let e = Partition::empty();
    assert_eq!(e.border_strips_add(2), vec![(p(&[2]), 0), (p(&[1, 1]), 1)]);
    assert_eq!(e.border_strips_add(1), vec![(p(&[1]), 0)]);
    // (2,1)/(1) is disconnected, so it is not a strip.
    assert_eq!(p(&[1]).border_strips_add(2), vec![(p(&[3]), 0), (p(&[1, 1, 1]), 1)]);
    assert_eq!(p(&[1]).border_strips_add(2), brute_border_strips(&p(&[1]), 2));
}

#[test]
fn border_strips_match_exhaustive_search() {
    for nu in all_partitions_upto(8) {
        for k in 1..=5 {
            assert_eq!(nu.border_strips_add(k), brute_border_strips(&nu, k), "{nu} + {k}");
        }
    }
}

#[test]
fn border_strip_removal_inverts_addition() {
    for mu in all_partitions_upto(10) {
        for k in 1..=mu.size() {
            for (nu, h) in mu.border_strips_remove(k) {
                assert!(nu.border_strips_add(k).contains(&(mu.clone(), h)));
            }
        }
    }
}

#[test]
fn dominance_examples() {
    assert!(p(&[2, 1]).dominance_geq(&p(&[1, 1, 1])).unwrap());
    assert!(p(&[3, 2]).dominance_geq(&p(&[3, 2])).unwrap());
    assert!(!p(&[2, 2]).dominance_geq(&p(&[3, 1])).unwrap());
    assert!(matches!(p(&[2]).dominance_geq(&p(&[1])), Err(Error::SizeMismatch(_))));
    assert!(p(&[3, 2]).contains(&p(&[2, 2])));
    assert!(!p(&[3, 1]).contains(&p(&[2, 2])));
}

#[test]
fn domino_cover_examples() {
    assert!(skew(&[2], &[]).column_disjoint_domino_cover());
    assert!(skew(&[1, 1], &[]).column_disjoint_domino_cover());
    assert!(skew(&[2, 2], &[]).column_disjoint_domino_cover());
    assert!(!skew(&[1, 1, 1, 1], &[]).column_disjoint_domino_cover());
    assert!(!skew(&[2, 1, 1], &[]).column_disjoint_domino_cover());
    assert_eq!(yamanouchi_domino_count(&skew(&[2, 2], &[])), 1);
    assert_eq!(domino_tilings(&skew(&[2, 2], &[])).len(), 2);
}

#[test]
fn domino_cover_matches_brute_force_in_6x6_box() {
    let boxed: Vec<Partition> = all_partitions_upto(36)
        .into_iter()
        .filter(|l| l.len() <= 6 && l.first() <= 6)
        .collect();
    for outer in &boxed {
        for inner in &boxed {
            if !outer.contains(inner) || (outer.size() - inner.size()) % 2 == 1 {
                continue;
            }
            let s = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            let count = yamanouchi_domino_count(&s);
            assert!(count <= 1, "{s}");
            assert_eq!(s.column_disjoint_domino_cover(), count == 1, "{s}");
        }
    }
}

#[test]
fn jordan_type_examples() {
    assert!(valid_jordan_type(LieType::B, 4, &p(&[5, 3, 1])));
    assert!(!valid_jordan_type(LieType::C, 2, &p(&[3, 1])));
    assert!(is_very_even(&p(&[2, 2])));
    assert!(!is_very_even(&p(&[2, 2, 1, 1])));
    assert!(valid_jordan_type(LieType::D, 2, &p(&[3, 1])));
    assert!(!valid_jordan_type(LieType::D, 2, &p(&[2, 1, 1])));
    assert!(jordan_type_violation(LieType::C, 2, &p(&[3, 1])).unwrap().contains("part 3"));
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    assert_eq!(enumerate_partitions(10).len(), 42);
    let d2 = enumerate_jordan_types(LieType::D, 2);
    assert_eq!(
        d2,
        vec![
            (p(&[3, 1]), None),
            (p(&[2, 2]), Some(Sign::Plus)),
            (p(&[2, 2]), Some(Sign::Minus)),
            (p(&[1, 1, 1, 1]), None)
        ]
    );
}

#[test]
fn enumeration_counts_against_generating_function() {
    let mut counts = [0u64; 21];
    counts[0] = 1;
    for part in 1..=20 {
        for n in part..=20 {
            counts[n] += counts[n - part];
        }
    }
    for n in 0..=20 {
        let list = enumerate_partitions(n);
        assert_eq!(list.len() as u64, counts[n]);
        assert!(list.windows(2).all(|w| w[0] > w[1]));
    }
}

#[test]
fn text_round_trip() {
    for lambda in all_partitions_upto(7) {
        assert_eq!(lambda.to_text().parse::<Partition>().unwrap(), lambda);
    }
    assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    assert!("1,2".parse::<Partition>().is_err());
    assert!("3,0".parse::<Partition>().is_err());
}

fn parity(x: usize) -> usize {
    x % 2
}

#[test]
fn strip_parity_exhaustive() {
    for lambda in all_partitions_upto(12) {
        let conj = lambda.conjugate();
        let col = |from: usize, to: usize| -> usize { (from..=to).map(|a| conj.part(a - 1)).sum() };
        let b = lambda.weight_b();
        for (i, m) in lambda.multiplicities() {
            for k in 1..=i {
                let one = lambda.replace(&[i], &[i - k]).unwrap();
                assert_eq!(parity(b), parity(one.weight_b() + col(i - k + 1, i) + k), "{lambda} {i} {k}");
                if m >= 2 {
                    let two = lambda.replace(&[i, i], &[i - k, i - k]).unwrap();
                    assert_eq!(parity(b), parity(two.weight_b() + k), "{lambda} {i} {k}");
                }
            }
        }
        let distinct: Vec<usize> = lambda.multiplicities().iter().map(|x| x.0).collect();
        for &i in &distinct {
            for &j in &distinct {
                if i <= j || (i - j) % 2 == 1 {
                    continue;
                }
                for k in 1..=(i + j) / 2 {
                    if i - j < 2 * k && 2 * k <= i + j {
                        let h = (i + j) / 2 - k;
                        let merged = lambda.replace(&[i, j], &[h, h]).unwrap();
                        let rhs = merged.weight_b() + col(j + 1, i) + (2 * k - (i - j)) / 2;
                        assert_eq!(parity(b), parity(rhs), "{lambda} {i} {j} {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn zero_one_sequence_exhaustive() {
    for n in 0..=12 {
        for nu in enumerate_partitions(n) {
            if !nu.has_minimal_core() {
                continue;
            }
            let (a0, a1) = nu.two_quotient();
            for k in 1..=(12 - n) / 2 {
                let mut images = BTreeSet::new();
                for (mu, h) in nu.border_strips_add(2 * k) {
                    let (b0, b1) = mu.two_quotient();
                    let strip0 = a0.border_strips_add(k).into_iter().find(|x| x.0 == b0);
                    let strip1 = a1.border_strips_add(k).into_iter().find(|x| x.0 == b1);
                    let qh = match (strip0, strip1) {
                        (Some((_, h0)), None) if b1 == a1 => h0,
                        (None, Some((_, h1))) if b0 == a0 => h1,
                        other => panic!("{mu}/{nu}: {other:?}"),
                    };
                    assert_eq!(parity(mu.weight_b() + nu.weight_b() + h), parity(qh), "{mu}/{nu}");
                    assert!(images.insert((b0, b1)));
                }
                let expected = a0.border_strips_add(k).len() + a1.border_strips_add(k).len();
                assert_eq!(images.len(), expected, "{nu} k={k}");
            }
        }
    }
}

#[test]
fn expansion_general_and_simplified_signs_agree_on_jordan_types() {
    for n in 1..=12 {
        for lambda in enumerate_partitions(n) {
            let valid = [LieType::B, LieType::C, LieType::D]
                .iter()
                .any(|&t| lambda.size() == t.jordan_size(lambda.size() / 2) && valid_jordan_type(t, lambda.size() / 2, &lambda));
            if !valid {
                continue;
            }
            for k in 1..=n / 2 {
                assert_eq!(
                    removal_expansion(&lambda, k, SignRule::Height),
                    removal_expansion(&lambda, k, SignRule::HeightAndColumns),
                    "{lambda} {k}"
                );
            }
        }
    }
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let list = enumerate_partitions(n);
        (0..list.len()).prop_map(move |i| list[i].clone())
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lambda in arb_partition(14)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn conjugation_reverses_dominance(a in arb_partition(9), b in arb_partition(9)) {
        if a.size() == b.size() {
            prop_assert_eq!(
                a.dominance_geq(&b).unwrap(),
                b.conjugate().dominance_geq(&a.conjugate()).unwrap()
            );
        }
    }

    #[test]
    fn union_is_commutative_and_additive(a in arb_partition(10), b in arb_partition(10)) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).size(), a.size() + b.size());
        prop_assert_eq!(a.scale(2).size(), 2 * a.size());
    }
}

/// Signs of the single and merged terms against
/// `(−1)^{m_{i−2} + m_{i−4} + ⋯ + m_{j+2}}`, for Jordan types.
#[test]
fn expansion_signs_follow_multiplicities() {
    let msum = |lambda: &Partition, i: usize, j: usize| -> usize {
        let mut s = 0;
        let mut a = i;
        while a >= j + 4 {
            a -= 2;
            s += lambda.parts().iter().filter(|&&x| x == a).count();
        }
        s
    };
    for size in 1..=12 {
        for lambda in enumerate_partitions(size) {
            let n = size / 2;
            let valid = if size % 2 == 1 {
                valid_jordan_type(LieType::B, n, &lambda)
            } else {
                valid_jordan_type(LieType::C, n, &lambda) || valid_jordan_type(LieType::D, n, &lambda)
            };
            if !valid {
                continue;
            }
            for k in 1..=size / 2 {
                for t in removal_expansion(&lambda, k, SignRule::Height) {
                    let (e, mag) = match t.kind {
                        TermKind::Pair { .. } => continue,
                        TermKind::Single { i } => (msum(&lambda, i, i - 2 * k), 1),
                        TermKind::Merge { i, j } => (msum(&lambda, i, j), 2),
                    };
                    let expected = if e % 2 == 0 { mag } else { -mag };
                    assert_eq!(t.coefficient, expected, "{lambda} k={k} {:?}", t.kind);
                }
            }
        }
    }
    let terms = removal_expansion(&"3,2,2".parse().unwrap(), 1, SignRule::Height);
    let single = terms.iter().find(|t| matches!(t.kind, TermKind::Single { i: 3 })).unwrap();
    assert_eq!(single.coefficient, 1);
}
