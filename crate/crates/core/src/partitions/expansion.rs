//! The three-sum expansion shared by the restriction formula and the
//! Green and Kostka–Foulkes recursions.

use super::Partition;

/// Which sign to attach to the single-row and merged terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    /// `(−1)^{h}` with `h` the row span of `λ/λ⟨i→j⟩`; correct for Jordan
    /// types of type B, C and D.
    Height,
    /// `(−1)^{h + Σ λ′_a}`, valid for an arbitrary partition.
    HeightAndColumns,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermKind {
    /// `λ⟨i,i → i−k,i−k⟩`
    Pair { i: usize },
    /// `λ⟨i → i−2k⟩`
    Single { i: usize },
    /// `λ⟨i,j → (i+j)/2−k, (i+j)/2−k⟩`
    Merge { i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub coefficient: i64,
    pub partition: Partition,
    pub kind: TermKind,
}

/// Rows spanned by `outer/inner` minus one: the first through the last row
/// where the two differ. For a border strip this is its height; for
/// `λ/λ⟨i→j⟩` it counts the parts of `λ` strictly between `j` and `i`.
fn row_span(outer: &Partition, inner: &Partition) -> usize {
    let changed: Vec<usize> = (0..outer.len()).filter(|&r| outer.part(r) > inner.part(r)).collect();
    match (changed.first(), changed.last()) {
        (Some(a), Some(b)) => b - a,
        _ => unreachable!("replacement by a smaller part changes at least one row"),
    }
}

fn column_sum(conj: &Partition, from: usize, to: usize) -> usize {
    (from..=to).map(|a| conj.part(a - 1)).sum()
}

fn sign_of(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Terms of
/// `Σ_{i≥k, m_i≥2} 2⌊m_i/2⌋ [λ⟨i,i→i−k,i−k⟩]
///  + Σ_{i≥2k, m_i odd} ± [λ⟨i→i−2k⟩]
///  + Σ_{0<i−j<2k≤i+j, i−j even, m_i,m_j odd} ±2 [λ⟨i,j→(i+j)/2−k,(i+j)/2−k⟩]`.
pub fn removal_expansion(lambda: &Partition, k: usize, rule: SignRule) -> Vec<ExpansionTerm> {
    assert!(k >= 1);
    let mult = lambda.multiplicities();
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for &(i, m) in &mult {
        if i >= k && m >= 2 {
            out.push(ExpansionTerm {
                coefficient: 2 * (m / 2) as i64,
                partition: lambda.replace(&[i, i], &[i - k, i - k]).unwrap(),
                kind: TermKind::Pair { i },
            });
        }
    }
    for &(i, m) in &mult {
        if i >= 2 * k && m % 2 == 1 {
            let target = lambda.replace(&[i], &[i - 2 * k]).unwrap();
            let mut e = row_span(lambda, &target);
            if rule == SignRule::HeightAndColumns {
                e += column_sum(&conj, i - 2 * k + 1, i);
            }
            out.push(ExpansionTerm {
                coefficient: sign_of(e),
                partition: target,
                kind: TermKind::Single { i },
            });
        }
    }
    for &(i, mi) in &mult {
        for &(j, mj) in &mult {
            if !(i > j && mi % 2 == 1 && mj % 2 == 1 && (i - j) % 2 == 0) {
                continue;
            }
            if !(i - j < 2 * k && 2 * k <= i + j) {
                continue;
            }
            let lowered = lambda.replace(&[i], &[j]).unwrap();
            let mut e = row_span(lambda, &lowered);
            if rule == SignRule::HeightAndColumns {
                e += column_sum(&conj, j + 1, i);
            }
            let h = (i + j) / 2 - k;
            out.push(ExpansionTerm {
                coefficient: 2 * sign_of(e),
                partition: lambda.replace(&[i, j], &[h, h]).unwrap(),
                kind: TermKind::Merge { i, j },
            });
        }
    }
    out
}
