//! Kostka–Foulkes polynomials from the charge statistic.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::tables::degree;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::Partition;
use crate::poly::IntPoly;

/// Charge of a word whose content is a partition (letters start at 1).
///
/// Standard subwords are extracted by scanning leftwards, cyclically, for
/// `1, 2, 3, …`; within a subword the index rises by one each time the
/// scan wraps around, and the charge is the sum of indices.
pub fn charge(word: &[usize]) -> usize {
    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0;
    while remaining > 0 {
        let mut pos = (0..n)
            .rev()
            .find(|&i| !used[i] && word[i] == 1)
            .expect("content of a charged word must be a partition");
        used[pos] = true;
        remaining -= 1;
        let mut index = 0;
        let mut letter = 1;
        loop {
            letter += 1;
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let next = match left {
                Some(i) => i,
                None => match (pos + 1..n).rev().find(|&i| !used[i] && word[i] == letter) {
                    Some(i) => {
                        index += 1;
                        i
                    }
                    None => break,
                },
            };
            total += index;
            used[next] = true;
            remaining -= 1;
            pos = next;
        }
    }
    total
}

/// Row-reading word (bottom row first, each row left to right).
pub fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// Visits every semistandard tableau of content `content`, of any shape.
pub fn for_each_ssyt(content: &Partition, visit: &mut dyn FnMut(&[Vec<usize>])) {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fill(content.parts(), 0, &mut rows, visit);
}

fn fill(content: &[usize], letter: usize, rows: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
    if letter == content.len() {
        visit(rows);
        return;
    }
    let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let mut added = vec![0usize; shape.len() + 1];
    strips(&shape, content[letter], 0, &mut added, &mut |added| {
        let old_len = rows.len();
        for (r, &a) in added.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].extend(std::iter::repeat_n(letter + 1, a));
        }
        fill(content, letter + 1, rows, visit);
        for (r, &a) in added.iter().enumerate() {
            if r < old_len {
                let l = rows[r].len();
                rows[r].truncate(l - a);
            }
        }
        rows.truncate(old_len);
    });
}

/// Enumerates the ways to add a horizontal strip of `size` cells to
/// `shape`; `added[r]` is the number of cells placed in row `r`.
fn strips(shape: &[usize], size: usize, row: usize, added: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if row == shape.len() + 1 || size == 0 {
        if size == 0 {
            for a in added.iter_mut().skip(row) {
                *a = 0;
            }
            visit(added);
        }
        return;
    }
    let current = shape.get(row).copied().unwrap_or(0);
    let cap = if row == 0 { usize::MAX } else { shape[row - 1] - current };
    let max = size.min(cap);
    for a in (0..=max).rev() {
        added[row] = a;
        strips(shape, size - a, row + 1, added, visit);
    }
    added[row] = 0;
}

/// Kostka–Foulkes data of one degree: `kf[μ][λ] = K_{μ,λ}(t)` indexed by
/// positions in the reverse lexicographic list, and its inverse.
pub struct KostkaData {
    pub kf: Vec<Vec<IntPoly>>,
    pub inverse: Vec<Vec<IntPoly>>,
}

static KOSTKA: Memo<usize, KostkaData> = Memo::new();

/// Inverse of an upper unitriangular matrix of polynomials.
pub(crate) fn invert_unitriangular(m: &[Vec<IntPoly>]) -> Vec<Vec<IntPoly>> {
    let n = m.len();
    let mut inv = vec![vec![IntPoly::zero(); n]; n];
    for j in 0..n {
        inv[j][j] = IntPoly::one();
        for i in (0..j).rev() {
            let mut acc = IntPoly::zero();
            for k in i + 1..=j {
                if !m[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc += &(&m[i][k] * &inv[k][j]);
                }
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

pub fn kostka_data(n: usize) -> Arc<KostkaData> {
    KOSTKA.get_or_insert_with(&n, || {
        let deg = degree(n);
        let columns: Vec<Vec<Vec<u64>>> = deg
            .parts
            .par_iter()
            .map(|lambda| {
                let mut counts = vec![Vec::<u64>::new(); deg.parts.len()];
                for_each_ssyt(lambda, &mut |rows| {
                    let shape = Partition::new(rows.iter().map(|r| r.len()).collect());
                    let c = charge(&reading_word(rows));
                    let slot = &mut counts[deg.idx(&shape)];
                    if slot.len() <= c {
                        slot.resize(c + 1, 0);
                    }
                    slot[c] += 1;
                });
                counts
            })
            .collect();
        let size = deg.parts.len();
        let mut kf = vec![vec![IntPoly::zero(); size]; size];
        for (l, col) in columns.into_iter().enumerate() {
            for (m, counts) in col.into_iter().enumerate() {
                kf[m][l] = IntPoly::new(counts.into_iter().map(BigInt::from).collect());
            }
        }
        let inverse = invert_unitriangular(&kf);
        KostkaData { kf, inverse }
    })
}

/// `K_{μ,λ}(t)`.
pub fn kostka_foulkes(mu: &Partition, lambda: &Partition) -> Result<IntPoly> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("K_{{{mu},{lambda}}}")));
    }
    let deg = degree(mu.size());
    Ok(kostka_data(mu.size()).kf[deg.idx(mu)][deg.idx(lambda)].clone())
}
