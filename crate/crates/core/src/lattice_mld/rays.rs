//! Linearity pieces of the log-discrepancy function and the extreme rays of
//! their cones, used to bound the lattice search box.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::{primitive_integer_vector, Q};

/// Cones `{v ≥ 0 : ⟨u − u*, v⟩ ≥ 0 for u ∈ a_j}`, one per choice of a
/// minimizing generator `u*` in every factor. Each cone is a list of rows `r`
/// meaning `⟨r, v⟩ ≥ 0`.
pub fn piece_cones(dim: usize, factors: &[&[Vec<u32>]]) -> Vec<Vec<Vec<i64>>> {
    let mut cones: Vec<Vec<Vec<i64>>> = vec![(0..dim)
        .map(|i| (0..dim).map(|k| i64::from(i == k)).collect())
        .collect()];
    for gens in factors {
        let mut next = Vec::new();
        for cone in &cones {
            for star in gens.iter() {
                let mut c = cone.clone();
                for u in gens.iter() {
                    if u != star {
                        c.push(u.iter().zip(star.iter()).map(|(&a, &b)| a as i64 - b as i64).collect());
                    }
                }
                next.push(c);
            }
        }
        cones = next;
    }
    cones
}

/// Primitive integer generators of the extreme rays of a pointed cone.
pub fn extreme_rays(dim: usize, constraints: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for subset in combinations(constraints.len(), dim.saturating_sub(1)) {
        let rows: Vec<Vec<Q>> = subset
            .iter()
            .map(|&k| constraints[k].iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        let Some(dir) = one_dim_kernel(&rows, dim) else { continue };
        for sign in [1i64, -1] {
            let cand: Vec<Q> = dir.iter().map(|x| x * Q::from_integer(sign.into())).collect();
            let ok = constraints.iter().all(|r| {
                let s: Q = r.iter().zip(&cand).map(|(&a, x)| x * Q::from_integer(a.into())).sum();
                !s.is_negative()
            });
            if ok {
                let prim = primitive_integer_vector(&cand);
                if !rays.contains(&prim) {
                    rays.push(prim);
                }
            }
        }
    }
    rays.sort();
    rays
}

/// A radius `R` such that the lexicographically smallest minimizer of the log
/// discrepancy over interior lattice points has every coordinate at most `R`.
///
/// A minimizer `v` in a piece cone lies in a simplicial subcone spanned by at
/// most `dim` extreme rays `ρ_k`, `v = Σ λ_k ρ_k`. The point
/// `Σ frac(λ_k) ρ_k + Σ_{λ_k ≥ 1} ρ_k` is a lattice point with the same
/// support, at most `v` coordinatewise, and no worse on that linear piece, so
/// the lexicographic minimizer equals it and obeys `‖v‖_∞ < 2 · dim · max ‖ρ‖_∞`.
pub fn search_radius(dim: usize, factors: &[&[Vec<u32>]]) -> BigInt {
    let mut max_norm = BigInt::from(1);
    for cone in piece_cones(dim, factors) {
        for ray in extreme_rays(dim, &cone) {
            for x in ray {
                if x.abs() > max_norm {
                    max_norm = x.abs();
                }
            }
        }
    }
    BigInt::from(2 * dim) * max_norm
}

/// Spanning vector of the kernel when it is one-dimensional.
fn one_dim_kernel(rows: &[Vec<Q>], dim: usize) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let pv = m[r][col].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() + 1 != dim {
        return None;
    }
    let free = (0..dim).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![Q::zero(); dim];
    v[free] = Q::from_integer(1.into());
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[row][free].clone();
    }
    Some(v)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthant_rays() {
        let cones = piece_cones(3, &[]);
        assert_eq!(cones.len(), 1);
        let rays = extreme_rays(3, &cones[0]);
        assert_eq!(rays.len(), 3);
    }

    #[test]
    fn rays_of_a_split_orthant() {
        // Factor (x1, x2): the piece where x1 is minimal is {v1 <= v2}.
        let gens = vec![vec![1, 0], vec![0, 1]];
        let cones = piece_cones(2, &[&gens]);
        assert_eq!(cones.len(), 2);
        let rays = extreme_rays(2, &cones[0]);
        let expected: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(rays, expected);
        assert_eq!(search_radius(2, &[&gens]), BigInt::from(4));
    }
}
