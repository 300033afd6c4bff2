//! Per-degree data: the partition list and the character table of `S_n`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::memo::Memo;
use crate::partitions::{enumerate_partitions, Partition};

/// Partitions of `n` in reverse lexicographic order together with the
/// matrix `chi[μ][ρ] = χ^μ(ρ)`.
pub struct DegreeData {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub chi: Vec<Vec<i64>>,
    pub z: Vec<BigInt>,
}

impl DegreeData {
    pub fn idx(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }
}

static DEGREES: Memo<usize, DegreeData> = Memo::new();
static CHARS: Memo<(Partition, Partition), i64> = Memo::new();

/// `χ^μ(ρ)` by the Murnaghan–Nakayama rule, stripping the largest part of
/// `ρ` first. Sizes must agree.
pub fn mn_character(mu: &Partition, rho: &Partition) -> i64 {
    debug_assert_eq!(mu.size(), rho.size());
    if rho.is_empty() {
        return 1;
    }
    let key = (mu.clone(), rho.clone());
    if let Some(v) = CHARS.get(&key) {
        return *v;
    }
    let k = rho.first();
    let rest = Partition::new(rho.parts()[1..].to_vec());
    let mut total: i64 = 0;
    for (nu, h) in mu.border_strips_remove(k) {
        let v = mn_character(&nu, &rest);
        let term = if h % 2 == 0 { v } else { -v };
        total = total.checked_add(term).expect("character value overflow");
    }
    *CHARS.insert(key, total)
}

pub fn degree(n: usize) -> Arc<DegreeData> {
    DEGREES.get_or_insert_with(&n, || {
        let parts = enumerate_partitions(n);
        let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let chi = parts
            .iter()
            .map(|mu| parts.iter().map(|rho| mn_character(mu, rho)).collect())
            .collect();
        let z = parts.iter().map(|p| p.z()).collect();
        DegreeData { n, parts, index, chi, z }
    })
}
