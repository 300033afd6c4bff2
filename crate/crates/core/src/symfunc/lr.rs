//! Littlewood–Richardson coefficients by enumeration of LR tableaux.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::memo::Memo;
use crate::partitions::Partition;

static LR: Memo<(Partition, Partition), Vec<(Partition, u64)>> = Memo::new();

/// `s_λ · s_μ = Σ c^ν_{λμ} s_ν`, as a list `(ν, c^ν_{λμ})` sorted by `ν`.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Arc<Vec<(Partition, u64)>> {
    let (base, content) = if lambda.size() >= mu.size() { (lambda, mu) } else { (mu, lambda) };
    let key = (base.clone(), content.clone());
    LR.get_or_insert_with(&key, || {
        let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
        let mut skew: Vec<Vec<usize>> = vec![Vec::new(); base.len() + content.len()];
        place(base, content.parts(), 0, &mut skew, &mut counts);
        counts.into_iter().collect()
    })
}

/// `c^ν_{λμ}`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    lr_product(lambda, mu)
        .iter()
        .find(|(p, _)| p == nu)
        .map(|x| x.1)
        .unwrap_or(0)
}

fn shape_of(base: &Partition, skew: &[Vec<usize>]) -> Vec<usize> {
    skew.iter().enumerate().map(|(r, row)| base.part(r) + row.len()).collect()
}

/// Reading word (rows top to bottom, right to left) restricted to the
/// letters `a` and `a+1`; checks that `a+1` never outnumbers `a`.
fn lattice_ok(skew: &[Vec<usize>], a: usize) -> bool {
    let (mut ca, mut cb) = (0i64, 0i64);
    for row in skew {
        for &x in row.iter().rev() {
            if x == a {
                ca += 1;
            } else if x == a + 1 {
                cb += 1;
                if cb > ca {
                    return false;
                }
            }
        }
    }
    true
}

fn place(
    base: &Partition,
    content: &[usize],
    letter: usize,
    skew: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == content.len() {
        *out.entry(Partition::new(shape_of(base, skew))).or_insert(0) += 1;
        return;
    }
    let shape = shape_of(base, skew);
    let mut added = vec![0usize; shape.len()];
    horizontal_strips(&shape, content[letter], 0, &mut added, &mut |added| {
        for (r, &a) in added.iter().enumerate() {
            skew[r].extend(std::iter::repeat_n(letter + 1, a));
        }
        if letter == 0 || lattice_ok(skew, letter) {
            place(base, content, letter + 1, skew, out);
        }
        for (r, &a) in added.iter().enumerate() {
            let l = skew[r].len();
            skew[r].truncate(l - a);
        }
    });
}

fn horizontal_strips(shape: &[usize], size: usize, row: usize, added: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if size == 0 {
        for a in added.iter_mut().skip(row) {
            *a = 0;
        }
        visit(added);
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 { size } else { shape[row - 1] - shape[row] };
    for a in (0..=size.min(cap)).rev() {
        added[row] = a;
        horizontal_strips(shape, size - a, row + 1, added, visit);
    }
    added[row] = 0;
}
