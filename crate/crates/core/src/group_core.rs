//! Finite subgroups of `GL_N` generated by monomial (generalized permutation)
//! matrices whose nonzero entries are roots of unity.
//!
//! Every scalar is stored as an exponent of a fixed primitive `L`-th root of
//! unity `ζ_L`, where `L` is the ambient order of the group. All arithmetic
//! needed here (composition, eigenvalues, determinants) is multiplicative, so
//! no cyclotomic field arithmetic is required.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac, gcd_u64, lcm_u64, q, Q};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// `ζ_L^exponent` for an ambient order `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u64,
    pub exponent: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, exponent: u64) -> Self {
        assert!(order > 0, "root of unity order must be positive");
        RootOfUnity { order, exponent: exponent % order }
    }

    pub fn one(order: u64) -> Self {
        RootOfUnity::new(order, 0)
    }

    pub fn mul(self, other: RootOfUnity) -> RootOfUnity {
        assert_eq!(self.order, other.order, "roots of unity with different ambient orders");
        RootOfUnity::new(self.order, self.exponent + other.exponent)
    }

    pub fn inverse(self) -> RootOfUnity {
        RootOfUnity::new(self.order, self.order - self.exponent)
    }

    /// Multiplicative order.
    pub fn multiplicative_order(self) -> u64 {
        self.order / gcd_u64(self.exponent, self.order)
    }

    /// The angle `exponent / order` as a fraction of a full turn.
    pub fn angle(self) -> Q {
        q(self.exponent as i64, self.order as i64)
    }
}

/// A generalized permutation matrix sending basis vector `j` to
/// `ζ_L^{exps[j]}` times basis vector `perm[j]` (0-based).
///
/// The derived ordering is the canonical element order: lexicographic on the
/// permutation image list, then on the scalar exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    exps: Vec<u64>,
    ambient: u64,
}

impl MonomialMatrix {
    /// Builds a matrix from a 0-based permutation image list and exponents mod `ambient`.
    pub fn new(perm: Vec<usize>, exps: Vec<u64>, ambient: u64) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::InvalidInput("ambient order must be positive".into()));
        }
        if perm.len() != exps.len() {
            return Err(Error::DimensionMismatch(format!(
                "permutation has length {} but {} exponents were given",
                perm.len(),
                exps.len()
            )));
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotMonomial(format!("{perm:?} is not a permutation of 0..{n}")));
            }
            seen[p] = true;
        }
        let exps = exps.into_iter().map(|k| k % ambient).collect();
        Ok(MonomialMatrix { perm, exps, ambient })
    }

    /// Builds a matrix from a 1-based permutation image list.
    pub fn from_one_based(perm: &[usize], exps: Vec<u64>, ambient: u64) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(perm.len());
        for &p in perm {
            if p == 0 {
                return Err(Error::NotMonomial("permutation images are 1-based".into()));
            }
            zero_based.push(p - 1);
        }
        Self::new(zero_based, exps, ambient)
    }

    pub fn identity(dim: usize, ambient: u64) -> Self {
        MonomialMatrix { perm: (0..dim).collect(), exps: vec![0; dim], ambient }
    }

    pub fn diagonal(exps: Vec<u64>, ambient: u64) -> Result<Self> {
        let n = exps.len();
        Self::new((0..n).collect(), exps, ambient)
    }

    /// `diag(ζ_d^{e_1}, …, ζ_d^{e_N})` written over the ambient order `ambient`;
    /// `d` must divide `ambient`.
    pub fn from_weights(d: u64, e: &[u64], ambient: u64) -> Result<Self> {
        if d == 0 || ambient % d != 0 {
            return Err(Error::InvalidInput(format!("order {d} does not divide ambient order {ambient}")));
        }
        let scale = ambient / d;
        Self::diagonal(e.iter().map(|&k| (k % d) * scale).collect(), ambient)
    }

    /// Builds a matrix from dense entries, `Some(k)` meaning `ζ_L^k` and `None` meaning zero.
    /// `rows[r][c]` is the entry in row `r`, column `c`.
    pub fn from_entries(rows: &[Vec<Option<u64>>], ambient: u64) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotMonomial("matrix is not square".into()));
        }
        let mut perm = vec![usize::MAX; n];
        let mut exps = vec![0; n];
        for c in 0..n {
            let nonzero: Vec<usize> = (0..n).filter(|&r| rows[r][c].is_some()).collect();
            if nonzero.len() != 1 {
                return Err(Error::NotMonomial(format!(
                    "column {} has {} nonzero entries",
                    c + 1,
                    nonzero.len()
                )));
            }
            perm[c] = nonzero[0];
            exps[c] = rows[nonzero[0]][c].unwrap();
        }
        for r in 0..n {
            let count = (0..n).filter(|&c| rows[r][c].is_some()).count();
            if count != 1 {
                return Err(Error::NotMonomial(format!("row {} has {} nonzero entries", r + 1, count)));
            }
        }
        Self::new(perm, exps, ambient)
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn ambient_order(&self) -> u64 {
        self.ambient
    }

    /// 0-based permutation image list.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.is_diagonal() && self.exps.iter().all(|&k| k == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in composition");
        assert_eq!(self.ambient, other.ambient, "ambient order mismatch in composition");
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for j in 0..n {
            let mid = other.perm[j];
            perm[j] = self.perm[mid];
            exps[j] = (other.exps[j] + self.exps[mid]) % self.ambient;
        }
        MonomialMatrix { perm, exps, ambient: self.ambient }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for j in 0..n {
            let i = self.perm[j];
            perm[i] = j;
            exps[i] = (self.ambient - self.exps[j]) % self.ambient;
        }
        MonomialMatrix { perm, exps, ambient: self.ambient }
    }

    pub fn pow(&self, mut k: u64) -> MonomialMatrix {
        let mut base = self.clone();
        let mut acc = MonomialMatrix::identity(self.dim(), self.ambient);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Cycles of the permutation, each starting at its smallest index.
    fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.perm[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.perm[j];
            }
            out.push(cyc);
        }
        out
    }

    /// Multiplicative order, computed cycle by cycle.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, cyc| {
            let s = cyc.iter().map(|&j| self.exps[j]).sum::<u64>() % self.ambient;
            let scalar_order = self.ambient / gcd_u64(s, self.ambient);
            lcm_u64(acc, cyc.len() as u64 * scalar_order)
        })
    }

    /// Eigenvalues as angles in `[0, 1)` (fractions of a full turn). A cycle of
    /// length `ℓ` whose scalars multiply to `ζ_L^s` contributes the `ℓ`-th roots
    /// of `ζ_L^s`. Returned unsorted, cycle by cycle.
    pub fn eigen_angles(&self) -> Vec<Q> {
        let mut out = Vec::with_capacity(self.dim());
        for cyc in self.cycles() {
            let len = cyc.len() as i64;
            let s = cyc.iter().map(|&j| self.exps[j]).sum::<u64>() % self.ambient;
            let base = q(s as i64, self.ambient as i64);
            for j in 0..len {
                out.push(frac(&((base.clone() + Q::from_integer(j.into())) / Q::from_integer(len.into()))));
            }
        }
        out
    }

    /// Determinant as an angle in `[0, 1)`: `sign(σ) · ζ_L^{Σ k_j}`.
    pub fn det_angle(&self) -> Q {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        let s = self.exps.iter().sum::<u64>() % self.ambient;
        let mut angle = q(s as i64, self.ambient as i64);
        if transpositions % 2 == 1 {
            angle += q(1, 2);
        }
        frac(&angle)
    }

    /// Number of eigenvalues equal to one.
    pub fn fixed_dimension(&self) -> usize {
        self.eigen_angles().iter().filter(|a| a.is_zero()).count()
    }

    /// A non-identity element fixing a hyperplane pointwise.
    pub fn is_pseudo_reflection(&self) -> bool {
        !self.is_identity() && self.fixed_dimension() + 1 == self.dim()
    }

    /// The diagonalized data `(d; e_1, …, e_N)`, sorted ascending.
    pub fn weights(&self) -> WeightVector {
        let d = self.order();
        let mut e: Vec<u64> = self
            .eigen_angles()
            .iter()
            .map(|a| {
                let x = a * Q::from_integer((d as i64).into());
                debug_assert!(x.is_integer());
                x.to_integer().try_into().expect("weight fits in u64")
            })
            .collect();
        e.sort_unstable();
        WeightVector { d, e }
    }

    /// For a diagonal matrix, the weights aligned with the coordinates (unsorted).
    pub fn diagonal_weights(&self) -> Option<WeightVector> {
        if !self.is_diagonal() {
            return None;
        }
        let d = self.order();
        let e = self.exps.iter().map(|&k| k * d / self.ambient).collect();
        Some(WeightVector { d, e })
    }

    /// Re-expresses the matrix over a multiple of the ambient order.
    pub fn lift_ambient(&self, new_ambient: u64) -> Result<MonomialMatrix> {
        if new_ambient % self.ambient != 0 {
            return Err(Error::InvalidInput(format!(
                "ambient order {new_ambient} is not a multiple of {}",
                self.ambient
            )));
        }
        let scale = new_ambient / self.ambient;
        Ok(MonomialMatrix {
            perm: self.perm.clone(),
            exps: self.exps.iter().map(|&k| k * scale).collect(),
            ambient: new_ambient,
        })
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exps.iter().map(|k| k.to_string()).collect();
        if self.is_diagonal() {
            write!(f, "diag[{}]/{}", exps.join(","), self.ambient)
        } else {
            let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "perm[{}]exp[{}]/{}", perm.join(","), exps.join(","), self.ambient)
        }
    }
}

/// Diagonalized data `(d; e_1, …, e_N)` of an element of order `d` with
/// eigenvalues `ζ_d^{e_i}`, `0 ≤ e_i < d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    pub d: u64,
    pub e: Vec<u64>,
}

impl WeightVector {
    pub fn new(d: u64, e: Vec<u64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("weight order must be positive".into()));
        }
        if let Some(&bad) = e.iter().find(|&&k| k >= d) {
            return Err(Error::InvalidInput(format!("weight {bad} is not below the order {d}")));
        }
        Ok(WeightVector { d, e })
    }

    pub fn identity(dim: usize) -> Self {
        WeightVector { d: 1, e: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.e.len()
    }

    pub fn is_identity(&self) -> bool {
        self.e.iter().all(|&k| k == 0)
    }

    /// `(Σ e_i) / d`.
    pub fn age(&self) -> Q {
        age(self)
    }

    /// The fractional point `e / d` of the quotient lattice.
    pub fn as_point(&self) -> Vec<Q> {
        self.e.iter().map(|&k| q(k as i64, self.d as i64)).collect()
    }

    /// Weights of the `k`-th power, aligned with these coordinates.
    pub fn power(&self, k: u64) -> WeightVector {
        let e: Vec<u64> = self.e.iter().map(|&x| (x * k) % self.d).collect();
        let g = e.iter().fold(self.d, |g, &x| gcd_u64(g, x));
        WeightVector { d: self.d / g, e: e.into_iter().map(|x| x / g).collect() }
    }

    /// Reduces to lowest terms so that `d` is the exact order of the element.
    pub fn normalized(&self) -> WeightVector {
        self.power(1)
    }

    pub fn inverse(&self) -> WeightVector {
        WeightVector { d: self.d, e: self.e.iter().map(|&x| (self.d - x) % self.d).collect() }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.e.iter().map(|k| k.to_string()).collect();
        write!(f, "1/{}({})", self.d, e.join(","))
    }
}

/// `age(γ) = (1/d) Σ e_i`.
pub fn age(w: &WeightVector) -> Q {
    q(w.e.iter().sum::<u64>() as i64, w.d as i64)
}

/// Diagonalized data of a group element (sorted ascending).
pub fn weights(g: &MonomialMatrix) -> WeightVector {
    g.weights()
}

/// A finite group of monomial matrices with elements in canonical order.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    dim: usize,
    ambient_order: u64,
    elements: Vec<MonomialMatrix>,
    generators: Vec<MonomialMatrix>,
    index: HashMap<MonomialMatrix, usize>,
}

impl FiniteGroup {
    pub fn trivial(dim: usize, ambient_order: u64) -> Self {
        let id = MonomialMatrix::identity(dim, ambient_order);
        Self::from_elements(dim, ambient_order, vec![id.clone()], vec![id])
    }

    fn from_elements(
        dim: usize,
        ambient_order: u64,
        mut elements: Vec<MonomialMatrix>,
        generators: Vec<MonomialMatrix>,
    ) -> Self {
        elements.sort();
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        FiniteGroup { dim, ambient_order, elements, generators, index }
    }

    /// Builds a group of diagonal matrices from weight vectors, using the lcm
    /// of their orders as the ambient order.
    pub fn from_weight_vectors(weights: &[WeightVector], cap: usize) -> Result<Self> {
        let first = weights
            .first()
            .ok_or_else(|| Error::InvalidInput("at least one weight vector is required".into()))?;
        let ambient = weights.iter().fold(1, |l, w| lcm_u64(l, w.d));
        let gens = weights
            .iter()
            .map(|w| {
                if w.dim() != first.dim() {
                    return Err(Error::DimensionMismatch("weight vectors of different lengths".into()));
                }
                MonomialMatrix::from_weights(w.d, &w.e, ambient)
            })
            .collect::<Result<Vec<_>>>()?;
        closure(&gens, cap)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_order(&self) -> u64 {
        self.ambient_order
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MonomialMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[MonomialMatrix] {
        &self.generators
    }

    pub fn index_of(&self, g: &MonomialMatrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &MonomialMatrix) -> bool {
        self.index.contains_key(g)
    }

    pub fn is_diagonal(&self) -> bool {
        self.elements.iter().all(MonomialMatrix::is_diagonal)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators.iter().all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Partition into conjugacy classes (indices into [`Self::elements`]).
    /// Each class is sorted; classes are ordered by their minimal element,
    /// which is the canonical representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let inverses: Vec<MonomialMatrix> = self.generators.iter().map(|g| g.inverse()).collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let x = &self.elements[i];
                for (g, g_inv) in self.generators.iter().zip(&inverses) {
                    let y = g.compose(x).compose(g_inv);
                    let j = self.index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        class.push(j);
                        queue.push_back(j);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Elements of the cyclic subgroup generated by element `i`, sorted.
    pub fn cyclic_subgroup(&self, i: usize) -> Vec<usize> {
        let g = &self.elements[i];
        let mut out = Vec::new();
        let mut x = MonomialMatrix::identity(self.dim, self.ambient_order);
        loop {
            out.push(self.index[&x]);
            x = x.compose(g);
            if x.is_identity() {
                break;
            }
        }
        out.sort_unstable();
        out
    }

    /// One generator per cyclic subgroup (the minimal element index among the
    /// generators of that subgroup), in canonical order.
    pub fn cyclic_subgroup_representatives(&self) -> Vec<usize> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut reps = Vec::new();
        for i in 0..self.order() {
            let sub = self.cyclic_subgroup(i);
            if seen.insert(sub) {
                reps.push(i);
            }
        }
        reps
    }

    /// `None` when no non-identity element fixes a hyperplane pointwise;
    /// otherwise the first pseudo-reflection in canonical order.
    pub fn pseudo_reflection(&self) -> Option<&MonomialMatrix> {
        self.elements.iter().find(|g| g.is_pseudo_reflection())
    }

    pub fn is_free_in_codim1(&self) -> bool {
        self.pseudo_reflection().is_none()
    }

    /// Minimal invariant monomials of a diagonal group with total degree at
    /// most `max_degree`, in graded lexicographic order.
    pub fn invariant_monomials(&self, max_degree: u32) -> Result<Vec<Vec<u32>>> {
        let weights = self.diagonal_generator_weights()?;
        let mut found: Vec<Vec<u32>> = Vec::new();
        for deg in 1..=max_degree {
            for u in monomials_of_degree(self.dim, deg) {
                if found.iter().any(|g| g.iter().zip(&u).all(|(a, b)| a <= b)) {
                    continue;
                }
                if weights.iter().all(|w| is_weight_invariant(&u, w)) {
                    found.push(u);
                }
            }
        }
        Ok(found)
    }

    /// For each coordinate, the smallest power of `x_i` that is invariant.
    /// Together these monomials cut out the origin, so they define the same
    /// order-one contact condition as the full invariant maximal ideal.
    pub fn pure_power_invariants(&self) -> Result<Vec<Vec<u32>>> {
        let weights = self.diagonal_generator_weights()?;
        Ok((0..self.dim)
            .map(|i| {
                let k = weights.iter().fold(1u64, |acc, w| {
                    let e = w.e[i] % w.d;
                    lcm_u64(acc, w.d / gcd_u64(e, w.d))
                });
                let mut u = vec![0u32; self.dim];
                u[i] = k as u32;
                u
            })
            .collect())
    }

    /// Aligned weights of every element of a diagonal group, in canonical order.
    pub fn diagonal_element_weights(&self) -> Result<Vec<WeightVector>> {
        self.elements
            .iter()
            .map(|g| {
                g.diagonal_weights()
                    .ok_or_else(|| Error::InvalidInput(format!("element {g} is not diagonal")))
            })
            .collect()
    }

    fn diagonal_generator_weights(&self) -> Result<Vec<WeightVector>> {
        self.generators
            .iter()
            .map(|g| {
                g.diagonal_weights()
                    .ok_or_else(|| Error::InvalidInput(format!("generator {g} is not diagonal")))
            })
            .collect()
    }
}

/// `⟨e, u⟩ ≡ 0 (mod d)`.
pub fn is_weight_invariant(u: &[u32], w: &WeightVector) -> bool {
    let s: u64 = u.iter().zip(&w.e).map(|(&a, &b)| a as u64 * b).sum();
    s % w.d == 0
}

/// All exponent vectors of total degree `deg` in `n` variables, in
/// descending lexicographic order.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(n, i + 1, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, 0, deg, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Enumerates the group generated by `generators`, in canonical order.
pub fn closure(generators: &[MonomialMatrix], cap: usize) -> Result<FiniteGroup> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidInput("at least one generator is required".into()))?;
    let (dim, ambient) = (first.dim(), first.ambient_order());
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch(format!(
                "generator {g} has dimension {} instead of {dim}",
                g.dim()
            )));
        }
        if g.ambient_order() != ambient {
            return Err(Error::DimensionMismatch(format!(
                "generator {g} has ambient order {} instead of {ambient}",
                g.ambient_order()
            )));
        }
    }
    let identity = MonomialMatrix::identity(dim, ambient);
    let mut seen: HashSet<MonomialMatrix> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(FiniteGroup::from_elements(dim, ambient, seen.into_iter().collect(), generators.to_vec()))
}

/// Whether the group acts freely in codimension one, with a pseudo-reflection
/// as witness when it does not.
pub fn is_free_in_codim1(group: &FiniteGroup) -> (bool, Option<MonomialMatrix>) {
    match group.pseudo_reflection() {
        None => (true, None),
        Some(g) => (false, Some(g.clone())),
    }
}

/// Conjugacy classes as lists of element indices.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<Vec<usize>> {
    group.conjugacy_classes()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(exps: &[u64], l: u64) -> MonomialMatrix {
        MonomialMatrix::diagonal(exps.to_vec(), l).unwrap()
    }

    fn antidiagonal() -> MonomialMatrix {
        // [[0,1],[-1,0]]: e1 -> -e2, e2 -> e1.
        MonomialMatrix::from_entries(&[vec![None, Some(0)], vec![Some(2), None]], 4).unwrap()
    }

    /// Brute-force multiplication-table closure used as an oracle.
    fn brute_force_order(gens: &[MonomialMatrix]) -> usize {
        let mut set: Vec<MonomialMatrix> = vec![MonomialMatrix::identity(gens[0].dim(), gens[0].ambient_order())];
        loop {
            let mut grew = false;
            let snapshot = set.clone();
            for a in &snapshot {
                for b in gens {
                    let c = a.compose(b);
                    if !set.contains(&c) {
                        set.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return set.len();
            }
        }
    }

    #[test]
    fn closure_examples() {
        let g = closure(&[MonomialMatrix::identity(2, 1)], 100).unwrap();
        assert_eq!(g.order(), 1);

        let g = closure(&[diag(&[1, 2], 3)], 100).unwrap();
        assert_eq!(g.order(), 3);

        let gens = [diag(&[1, 1, 0], 2), diag(&[0, 1, 1], 2)];
        let g = closure(&gens, 100).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(brute_force_order(&gens), 4);
    }

    #[test]
    fn closure_cap_and_validation() {
        let err = closure(&[diag(&[1, 2], 7)], 3).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 3 });
        let err = MonomialMatrix::from_entries(&[vec![Some(0), Some(0)], vec![None, Some(0)]], 2).unwrap_err();
        assert!(matches!(err, Error::NotMonomial(_)));
        let err = closure(&[diag(&[1, 2], 3), diag(&[1], 3)], 10).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn canonical_order_is_presentation_independent() {
        let a = closure(&[diag(&[1, 3], 4)], 100).unwrap();
        let b = closure(&[diag(&[3, 1], 4), diag(&[2, 2], 4)], 100).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn weights_examples() {
        assert_eq!(diag(&[0, 1, 2], 3).weights(), WeightVector { d: 3, e: vec![0, 1, 2] });
        assert_eq!(MonomialMatrix::identity(2, 5).weights(), WeightVector { d: 1, e: vec![0, 0] });
        let a = antidiagonal();
        assert_eq!(a.order(), 4);
        assert_eq!(a.weights(), WeightVector { d: 4, e: vec![1, 3] });
    }

    #[test]
    fn age_examples() {
        assert_eq!(age(&WeightVector { d: 3, e: vec![0, 1, 2] }), q(1, 1));
        assert_eq!(age(&WeightVector::identity(4)), q(0, 1));
        assert_eq!(age(&WeightVector { d: 4, e: vec![1, 3] }), q(1, 1));
    }

    #[test]
    fn free_in_codim1_examples() {
        let g = closure(&[diag(&[1, 1], 2)], 10).unwrap();
        assert!(g.is_free_in_codim1());
        let g = closure(&[diag(&[1, 0], 2)], 10).unwrap();
        let (free, witness) = is_free_in_codim1(&g);
        assert!(!free);
        assert_eq!(witness.unwrap(), diag(&[1, 0], 2));
        let g = closure(&[diag(&[1, 1, 0], 2), diag(&[0, 1, 1], 2)], 10).unwrap();
        assert!(g.is_free_in_codim1());
    }

    #[test]
    fn conjugacy_examples() {
        let klein = closure(&[diag(&[1, 1, 0], 2), diag(&[0, 1, 1], 2)], 10).unwrap();
        assert_eq!(klein.conjugacy_classes().len(), 4);
        assert_eq!(FiniteGroup::trivial(3, 1).conjugacy_classes(), vec![vec![0]]);
        let bd8 = closure(&[diag(&[1, 3], 4), antidiagonal()], 100).unwrap();
        assert_eq!(bd8.order(), 8);
        // Oracle: brute-force conjugation table.
        let els = bd8.elements();
        let mut classes: Vec<Vec<MonomialMatrix>> = Vec::new();
        for x in els {
            let mut class: Vec<MonomialMatrix> = els.iter().map(|g| g.compose(x).compose(&g.inverse())).collect();
            class.sort();
            class.dedup();
            if !classes.contains(&class) {
                classes.push(class);
            }
        }
        assert_eq!(classes.len(), 5);
        assert_eq!(bd8.conjugacy_classes().len(), 5);
    }

    #[test]
    fn determinant_matches_eigenvalues() {
        for g in [antidiagonal(), diag(&[1, 2, 3], 6), antidiagonal().compose(&diag(&[1, 3], 4))] {
            let total: Q = g.eigen_angles().iter().sum();
            assert_eq!(frac(&total), g.det_angle());
        }
    }

    #[test]
    fn invariant_monomials_of_a1() {
        let g = closure(&[diag(&[1, 1], 2)], 10).unwrap();
        let inv = g.invariant_monomials(2).unwrap();
        assert_eq!(inv, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(g.pure_power_invariants().unwrap(), vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn cyclic_subgroups_of_z4() {
        let g = closure(&[diag(&[1, 3], 4)], 10).unwrap();
        // {1}, <g^2>, <g> = <g^3>.
        assert_eq!(g.cyclic_subgroup_representatives().len(), 3);
    }
}
