//! Krull dimension from the leading monomials of a Gröbner basis.
//!
//! A set of variables is independent modulo the initial ideal exactly when no
//! leading monomial is supported inside it, so the dimension is `n` minus the
//! size of a smallest set of variables meeting every leading monomial's support.

use super::poly::Poly;

/// Dimension of `k[y_0, …, y_{n-1}] / I` given a Gröbner basis of `I`;
/// `-1` for the unit ideal.
pub fn dimension_from_basis(basis: &[Poly], nvars: usize) -> i64 {
    if basis.iter().any(Poly::is_unit) {
        return -1;
    }
    let masks: Vec<u64> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.lm().mask()).collect();
    nvars as i64 - min_hitting_set(&masks) as i64
}

/// Size of a smallest variable set meeting every mask.
pub fn min_hitting_set(masks: &[u64]) -> u32 {
    let mut sets: Vec<u64> = masks.to_vec();
    sets.sort_by_key(|m| (m.count_ones(), *m));
    sets.dedup();
    // Drop supersets: hitting the subset already hits them.
    let mut minimal: Vec<u64> = Vec::new();
    for m in sets {
        if !minimal.iter().any(|&s| s & m == s) {
            minimal.push(m);
        }
    }
    let mut best = minimal.len() as u32;
    search(&minimal, 0, &mut best);
    best
}

fn search(sets: &[u64], chosen: u32, best: &mut u32) {
    let open: Vec<u64> = sets.to_vec();
    if open.is_empty() {
        *best = (*best).min(chosen);
        return;
    }
    if chosen + disjoint_lower_bound(&open) >= *best {
        return;
    }
    let pivot = *open.iter().min_by_key(|m| m.count_ones()).unwrap();
    let mut bits = pivot;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        let rest: Vec<u64> = open.iter().copied().filter(|m| m & v == 0).collect();
        search(&rest, chosen + 1, best);
        bits &= bits - 1;
    }
}

/// Number of pairwise disjoint sets picked greedily; each needs its own variable.
fn disjoint_lower_bound(sets: &[u64]) -> u32 {
    let mut used = 0u64;
    let mut count = 0;
    for &m in sets {
        if m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}
