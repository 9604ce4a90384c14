//! Minimal log discrepancy at the origin of `A^N / G` for an abelian diagonal
//! group `G` and a monomial ideal with rational exponents, computed by exact
//! minimization over the lattice `Z^N + Σ Z·e/d` in the positive orthant.
//!
//! For a lattice point `v` with positive coordinates the log discrepancy of the
//! corresponding toric valuation is `Σ v_i − Σ_j δ_j min_{u ∈ a_j} ⟨u, v⟩`.

mod lp;
mod rays;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

pub use lp::{Lp, LpOutcome};
pub use rays::{combinations, extreme_rays, piece_cones, search_radius};

use crate::error::{Error, Result};
use crate::group_core::{is_weight_invariant, FiniteGroup, WeightVector, DEFAULT_GROUP_CAP};
use crate::rational::{format_rational, primitive_integer_vector, qi, Q};

/// One factor `a_j^{δ_j}` of a monomial R-ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFactor {
    pub generators: Vec<Vec<u32>>,
    pub exponent: Q,
}

impl IdealFactor {
    pub fn new(generators: Vec<Vec<u32>>, exponent: Q) -> Self {
        IdealFactor { generators, exponent }
    }
}

/// A formal product `∏ a_j^{δ_j}` of monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialRIdeal {
    pub factors: Vec<IdealFactor>,
}

impl MonomialRIdeal {
    pub fn empty() -> Self {
        MonomialRIdeal { factors: Vec::new() }
    }

    pub fn single(generators: Vec<Vec<u32>>, exponent: Q) -> Self {
        MonomialRIdeal { factors: vec![IdealFactor::new(generators, exponent)] }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.iter().all(|f| f.exponent.is_zero())
    }

    /// Checks shapes and signs against the ambient dimension.
    pub fn validate(&self, dim: usize) -> Result<()> {
        for (j, f) in self.factors.iter().enumerate() {
            if f.generators.is_empty() {
                return Err(Error::InvalidInput(format!("ideal factor {} has no generators", j + 1)));
            }
            if f.exponent.is_negative() {
                return Err(Error::InvalidInput(format!("ideal factor {} has a negative exponent", j + 1)));
            }
            if let Some(u) = f.generators.iter().find(|u| u.len() != dim) {
                return Err(Error::DimensionMismatch(format!(
                    "monomial {u:?} has length {} instead of {dim}",
                    u.len()
                )));
            }
        }
        Ok(())
    }

    /// Factors with a positive exponent.
    pub fn active_factors(&self) -> Vec<&IdealFactor> {
        self.factors.iter().filter(|f| f.exponent.is_positive()).collect()
    }

    /// Errors unless every generator is invariant under each diagonal weight vector.
    pub fn check_invariant(&self, weights: &[WeightVector]) -> Result<()> {
        for f in &self.factors {
            for u in &f.generators {
                if weights.iter().any(|w| !is_weight_invariant(u, w)) {
                    return Err(Error::NonInvariantIdeal { monomial: format!("{u:?}") });
                }
            }
        }
        Ok(())
    }

    /// Applies a coordinate permutation `x_i ↦ x_{perm[i]}` to every generator.
    pub fn permuted(&self, perm: &[usize]) -> MonomialRIdeal {
        MonomialRIdeal {
            factors: self
                .factors
                .iter()
                .map(|f| IdealFactor {
                    generators: f
                        .generators
                        .iter()
                        .map(|u| {
                            let mut out = vec![0; u.len()];
                            for (i, &k) in u.iter().enumerate() {
                                out[perm[i]] = k;
                            }
                            out
                        })
                        .collect(),
                    exponent: f.exponent.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for MonomialRIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| {
                let gens: Vec<String> = fac.generators.iter().map(|u| monomial_string(u)).collect();
                format!("({})^{}", gens.join(","), fac.exponent)
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

pub(crate) fn monomial_string(u: &[u32]) -> String {
    let parts: Vec<String> = u
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Reliability of a computed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Exact,
    LowerBound,
    StabilizedHeuristic,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower_bound",
            Status::StabilizedHeuristic => "stabilized_heuristic",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value in `Q ∪ {−∞}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MldKind {
    Finite(Q),
    MinusInfinity,
}

impl MldKind {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            MldKind::Finite(x) => Some(x),
            MldKind::MinusInfinity => None,
        }
    }
}

impl PartialOrd for MldKind {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MldKind {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MldKind::MinusInfinity, MldKind::MinusInfinity) => Ordering::Equal,
            (MldKind::MinusInfinity, _) => Ordering::Less,
            (_, MldKind::MinusInfinity) => Ordering::Greater,
            (MldKind::Finite(a), MldKind::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for MldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MldKind::Finite(x) => f.write_str(&format_rational(x)),
            MldKind::MinusInfinity => f.write_str("-inf"),
        }
    }
}

/// Where a value was attained.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    /// The group element or twisted sector, as display text.
    pub gamma: Option<String>,
    /// A lattice point attaining the minimum.
    pub point: Option<Vec<Q>>,
    /// A direction along which the objective decreases without bound.
    pub ray: Option<Vec<BigInt>>,
    /// Coordinate orders of the optimal arcs.
    pub orders: Option<Vec<u64>>,
    /// Contact orders with the ideal factors.
    pub w: Option<Vec<u64>>,
    /// Contact order with the Jacobian ideal.
    pub b1: Option<u64>,
    /// Explored bounds (search windows, levels).
    pub window: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        if let Some(g) = &self.gamma {
            m.insert("gamma".into(), json!(g));
        }
        if let Some(p) = &self.point {
            m.insert("point".into(), json!(p.iter().map(format_rational).collect::<Vec<_>>()));
        }
        if let Some(r) = &self.ray {
            m.insert("ray".into(), json!(r.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
        }
        if let Some(o) = &self.orders {
            m.insert("orders".into(), json!(o));
        }
        if let Some(w) = &self.w {
            m.insert("w".into(), json!(w));
        }
        if let Some(b) = self.b1 {
            m.insert("b1".into(), json!(b));
        }
        if !self.window.is_empty() {
            m.insert("window".into(), json!(self.window));
        }
        if !self.notes.is_empty() {
            m.insert("notes".into(), json!(self.notes));
        }
        Value::Object(m)
    }
}

/// A minimal log discrepancy together with its witness and status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MldValue {
    pub kind: MldKind,
    pub witness: Witness,
    pub status: Status,
}

impl MldValue {
    pub fn finite(value: Q, witness: Witness, status: Status) -> Self {
        MldValue { kind: MldKind::Finite(value), witness, status }
    }

    pub fn minus_infinity(ray: Vec<BigInt>, status: Status) -> Self {
        MldValue {
            kind: MldKind::MinusInfinity,
            witness: Witness { ray: Some(ray), ..Witness::default() },
            status,
        }
    }

    pub fn value_string(&self) -> String {
        self.kind.to_string()
    }

    pub fn is_minus_infinity(&self) -> bool {
        self.kind == MldKind::MinusInfinity
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value_string(),
            "status": self.status.as_str(),
            "witness": self.witness.to_json(),
        })
    }
}

impl fmt::Display for MldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.kind, self.status)
    }
}

/// `min_{u ∈ a} ⟨v, u⟩`.
pub fn ord_monomial(v: &[Q], generators: &[Vec<u32>]) -> Q {
    generators
        .iter()
        .map(|u| v.iter().zip(u).map(|(x, &k)| x * Q::from_integer(k.into())).sum::<Q>())
        .min()
        .expect("ideal factor without generators")
}

/// `Σ v_i − Σ_j δ_j ord_v(a_j)`.
pub fn log_discrepancy(v: &[Q], ideal: &MonomialRIdeal) -> Q {
    let mut total: Q = v.iter().sum();
    for f in &ideal.factors {
        if !f.exponent.is_zero() {
            total -= &f.exponent * ord_monomial(v, &f.generators);
        }
    }
    total
}

/// The lattice `Z^N + Σ Z·e/d` of an abelian diagonal group, with one coset
/// representative in `[0,1)^N` per group element.
#[derive(Debug, Clone)]
pub struct QuotientLattice {
    pub dim: usize,
    /// Aligned weights of every group element, in canonical element order.
    pub elements: Vec<WeightVector>,
    /// Coset representatives `e/d`, parallel to `elements`.
    pub representatives: Vec<Vec<Q>>,
}

impl QuotientLattice {
    /// Builds the lattice, rejecting groups with pseudo-reflections.
    pub fn new(weights: &[WeightVector]) -> Result<Self> {
        let group = FiniteGroup::from_weight_vectors(weights, DEFAULT_GROUP_CAP)?;
        if let Some(g) = group.pseudo_reflection() {
            return Err(Error::NotFreeInCodim1 { witness: g.to_string() });
        }
        Self::from_group(&group)
    }

    pub fn from_group(group: &FiniteGroup) -> Result<Self> {
        let elements = group.diagonal_element_weights()?;
        let representatives = elements.iter().map(WeightVector::as_point).collect();
        Ok(QuotientLattice { dim: group.dim(), elements, representatives })
    }

    /// Common denominator of all representatives.
    pub fn denominator(&self) -> u64 {
        self.elements.iter().fold(1, |l, w| l.lcm(&w.d))
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.representatives
            .iter()
            .any(|r| r.iter().zip(v).all(|(a, b)| (b - a).is_integer()))
    }
}

/// Decides whether the log discrepancy is negative somewhere on the orthant,
/// returning an integral ray along which it decreases without bound.
pub fn unbounded_ray(dim: usize, ideal: &MonomialRIdeal) -> Option<Vec<BigInt>> {
    let factors = ideal.active_factors();
    if factors.is_empty() {
        return None;
    }
    let nv = dim + factors.len();
    let mut lp = Lp::new(nv);
    for i in 0..dim {
        lp.c[i] = qi(1);
    }
    for (j, f) in factors.iter().enumerate() {
        lp.c[dim + j] = -f.exponent.clone();
        for u in &f.generators {
            let mut row = vec![Q::zero(); nv];
            for i in 0..dim {
                row[i] = -Q::from_integer(u[i].into());
            }
            row[dim + j] = qi(1);
            lp.add_le(row, Q::zero());
        }
    }
    let mut row = vec![Q::zero(); nv];
    for x in row.iter_mut().take(dim) {
        *x = qi(1);
    }
    lp.add_le(row, qi(1));
    match lp.solve() {
        LpOutcome::Optimal { value, x } if value.is_negative() => Some(primitive_integer_vector(&x[..dim])),
        LpOutcome::Optimal { .. } => None,
        _ => unreachable!("the region Σv ≤ 1 is feasible and bounded"),
    }
}

/// `(true, ray)` when the minimal log discrepancy is `−∞`.
pub fn is_unbounded_below(weights: &[WeightVector], ideal: &MonomialRIdeal) -> (bool, Option<Vec<BigInt>>) {
    let dim = weights.first().map(WeightVector::dim).unwrap_or(0);
    match unbounded_ray(dim, ideal) {
        Some(r) => (true, Some(r)),
        None => (false, None),
    }
}

/// Exact lexicographic objective: first the log discrepancy, then `v_1, v_2, …`.
struct Objective {
    dim: usize,
    /// Coefficient of each `v_i`.
    v_coef: Vec<Q>,
    /// Coefficient of each epigraph variable `s_j`.
    s_coef: Vec<Q>,
}

impl Objective {
    fn new(dim: usize, factors: &[&IdealFactor], denom: u64, radius: &BigInt) -> Self {
        let delta_den = factors.iter().fold(BigInt::one(), |l, f| l.lcm(f.exponent.denom()));
        let k = Q::from_integer(delta_den * BigInt::from(denom));
        let b = Q::from_integer(radius * BigInt::from(denom) + 1);
        let mut f_scale = k;
        for _ in 0..dim {
            f_scale = f_scale * &b;
        }
        let mut v_coef = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut tie = Q::from_integer(denom.into());
            for _ in 0..(dim - 1 - i) {
                tie = tie * &b;
            }
            v_coef.push(&f_scale + tie);
        }
        let s_coef = factors.iter().map(|f| -(&f_scale * &f.exponent)).collect();
        Objective { dim, v_coef, s_coef }
    }

    fn eval(&self, v: &[Q], factors: &[&IdealFactor]) -> Q {
        let mut total: Q = v.iter().zip(&self.v_coef).map(|(x, c)| x * c).sum();
        for (f, c) in factors.iter().zip(&self.s_coef) {
            total += c * ord_monomial(v, &f.generators);
        }
        total
    }
}

/// Minimizes the lexicographic objective over lattice points `v ∈ r + Z^N`
/// with `lo ≤ v ≤ hi`, by branch and bound on simplex relaxations.
fn branch_and_bound(
    obj: &Objective,
    factors: &[&IdealFactor],
    lo: Vec<Q>,
    hi: Vec<Q>,
    incumbent: Option<(Q, Vec<Q>)>,
) -> Option<(Q, Vec<Q>)> {
    let dim = obj.dim;
    let mut best = incumbent;
    let mut stack = vec![(lo, hi)];
    while let Some((lo, hi)) = stack.pop() {
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            continue;
        }
        let nv = dim + factors.len();
        let mut lp = Lp::new(nv);
        let mut constant = Q::zero();
        for i in 0..dim {
            lp.c[i] = obj.v_coef[i].clone();
            constant += &obj.v_coef[i] * &lo[i];
            let mut row = vec![Q::zero(); nv];
            row[i] = qi(1);
            lp.add_le(row, &hi[i] - &lo[i]);
        }
        for (j, f) in factors.iter().enumerate() {
            lp.c[dim + j] = obj.s_coef[j].clone();
            for u in &f.generators {
                let mut row = vec![Q::zero(); nv];
                let mut rhs = Q::zero();
                for i in 0..dim {
                    let k = Q::from_integer(u[i].into());
                    rhs += &k * &lo[i];
                    row[i] = -k;
                }
                row[dim + j] = qi(1);
                lp.add_le(row, rhs);
            }
        }
        let LpOutcome::Optimal { value, x } = lp.solve() else {
            unreachable!("bounded relaxation")
        };
        let bound = value + constant;
        if let Some((b, _)) = &best {
            if &bound >= b {
                continue;
            }
        }
        match (0..dim).find(|&i| !x[i].is_integer()) {
            None => {
                let v: Vec<Q> = (0..dim).map(|i| &lo[i] + &x[i]).collect();
                let val = obj.eval(&v, factors);
                debug_assert_eq!(val, bound);
                best = Some((val, v));
            }
            Some(i) => {
                let fl = Q::from_integer(x[i].floor().to_integer());
                let mut left_hi = hi.clone();
                left_hi[i] = &lo[i] + &fl;
                let mut right_lo = lo.clone();
                right_lo[i] = &lo[i] + fl + qi(1);
                stack.push((right_lo, hi));
                stack.push((lo, left_hi));
            }
        }
    }
    best
}

/// The minimal log discrepancy at the origin of `A^N/G` for the group
/// generated by the diagonal elements `weights`.
pub fn mld_origin_toric(weights: &[WeightVector], ideal: &MonomialRIdeal) -> Result<MldValue> {
    let lattice = QuotientLattice::new(weights)?;
    ideal.validate(lattice.dim)?;
    ideal.check_invariant(weights)?;
    mld_on_lattice(&lattice, ideal)
}

/// Same as [`mld_origin_toric`] on a prepared lattice (no invariance checks).
pub fn mld_on_lattice(lattice: &QuotientLattice, ideal: &MonomialRIdeal) -> Result<MldValue> {
    let dim = lattice.dim;
    if let Some(ray) = unbounded_ray(dim, ideal) {
        return Ok(MldValue::minus_infinity(ray, Status::Exact));
    }
    let factors = ideal.active_factors();
    let gens: Vec<&[Vec<u32>]> = factors.iter().map(|f| f.generators.as_slice()).collect();
    let radius = search_radius(dim, &gens);
    let obj = Objective::new(dim, &factors, lattice.denominator(), &radius);
    let r_q = Q::from_integer(radius.clone());

    let boxes: Vec<(usize, Vec<Q>, Vec<Q>)> = lattice
        .representatives
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let lo: Vec<Q> = r.iter().map(|x| if x.is_zero() { qi(1) } else { x.clone() }).collect();
            let hi: Vec<Q> = r.iter().map(|x| x + Q::from_integer((&r_q - x).floor().to_integer())).collect();
            (k, lo, hi)
        })
        .collect();
    let start = boxes
        .iter()
        .map(|(_, lo, _)| (obj.eval(lo, &factors), lo.clone()))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("the lattice has at least one coset");

    let results: Vec<(usize, Option<(Q, Vec<Q>)>)> = boxes
        .into_par_iter()
        .map(|(k, lo, hi)| {
            let found = branch_and_bound(&obj, &factors, lo, hi, Some(start.clone()));
            (k, found)
        })
        .collect();
    let (mut best_k, mut best) = (usize::MAX, None::<(Q, Vec<Q>)>);
    for (k, found) in results {
        if let Some((val, v)) = found {
            let better = match &best {
                None => true,
                Some((b, _)) => val < *b,
            };
            if better {
                best = Some((val, v));
                best_k = k;
            }
        }
    }
    let (_, point) = best.expect("the starting point is always feasible");
    let value = log_discrepancy(&point, ideal);
    let element = lattice
        .representatives
        .iter()
        .position(|r| r.iter().zip(&point).all(|(a, b)| (b - a).is_integer()))
        .unwrap_or(best_k);
    let mut witness = Witness {
        gamma: Some(lattice.elements[element].to_string()),
        point: Some(point),
        ..Witness::default()
    };
    witness.window.insert("radius".into(), radius.to_u64().unwrap_or(u64::MAX));
    Ok(MldValue::finite(value, witness, Status::Exact))
}

/// Exhaustive oracle: the minimum log discrepancy over interior lattice points
/// with `Σ v_i ≤ bound`, with the lexicographically smallest minimizer.
pub fn brute_force_mld(weights: &[WeightVector], ideal: &MonomialRIdeal, bound: u64) -> Result<Option<(Q, Vec<Q>)>> {
    let lattice = QuotientLattice::new(weights)?;
    let dim = lattice.dim;
    let bound_q = qi(bound as i64);
    let mut best: Option<(Q, Vec<Q>)> = None;
    for r in &lattice.representatives {
        let base: Vec<Q> = r.iter().map(|x| if x.is_zero() { qi(1) } else { x.clone() }).collect();
        let slack = &bound_q - base.iter().sum::<Q>();
        if slack.is_negative() {
            continue;
        }
        let budget = slack.floor().to_integer().to_u64().unwrap_or(0);
        let mut m = vec![0u64; dim];
        enumerate_bounded(&mut m, 0, budget, &mut |m| {
            let v: Vec<Q> = base.iter().zip(m).map(|(b, &k)| b + qi(k as i64)).collect();
            let val = log_discrepancy(&v, ideal);
            let better = match &best {
                None => true,
                Some((b, bv)) => val < *b || (val == *b && v < *bv),
            };
            if better {
                best = Some((val, v));
            }
        });
    }
    Ok(best)
}

fn enumerate_bounded(m: &mut Vec<u64>, i: usize, left: u64, f: &mut impl FnMut(&[u64])) {
    if i == m.len() {
        f(m);
        return;
    }
    for k in 0..=left {
        m[i] = k;
        enumerate_bounded(m, i + 1, left - k, f);
    }
    m[i] = 0;
}

/// The cyclic quotient `1/d(e_1, …, e_N)` as a single weight vector.
pub fn cyclic(d: u64, e: &[u64]) -> WeightVector {
    WeightVector { d, e: e.to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn qv(xs: &[(i64, i64)]) -> Vec<Q> {
        xs.iter().map(|&(a, b)| q(a, b)).collect()
    }

    #[test]
    fn ord_and_discrepancy() {
        let v = qv(&[(1, 1), (1, 1)]);
        assert_eq!(ord_monomial(&v, &[vec![1, 0], vec![0, 1]]), qi(1));
        assert_eq!(ord_monomial(&v, &[vec![2, 0], vec![0, 3]]), qi(2));
        assert_eq!(ord_monomial(&qv(&[(1, 2), (1, 2)]), &[vec![1, 1]]), qi(1));
        assert_eq!(log_discrepancy(&v, &MonomialRIdeal::empty()), qi(2));
        assert_eq!(log_discrepancy(&qv(&[(1, 2), (1, 2)]), &MonomialRIdeal::empty()), qi(1));
        let a = MonomialRIdeal::single(vec![vec![1, 0], vec![0, 1]], q(1, 2));
        assert_eq!(log_discrepancy(&v, &a), q(3, 2));
    }

    #[test]
    fn toric_examples() {
        let m = mld_origin_toric(&[WeightVector::identity(3)], &MonomialRIdeal::empty()).unwrap();
        assert_eq!(m.kind, MldKind::Finite(qi(3)));
        assert_eq!(m.witness.point, Some(qv(&[(1, 1), (1, 1), (1, 1)])));

        let m = mld_origin_toric(&[cyclic(2, &[1, 1])], &MonomialRIdeal::empty()).unwrap();
        assert_eq!(m.kind, MldKind::Finite(qi(1)));
        assert_eq!(m.witness.point, Some(qv(&[(1, 2), (1, 2)])));

        let m = mld_origin_toric(&[cyclic(3, &[1, 1])], &MonomialRIdeal::empty()).unwrap();
        assert_eq!(m.kind, MldKind::Finite(q(2, 3)));
        assert_eq!(m.witness.point, Some(qv(&[(1, 3), (1, 3)])));

        let a = MonomialRIdeal::single(vec![vec![1, 0]], qi(3));
        let m = mld_origin_toric(&[WeightVector::identity(2)], &a).unwrap();
        assert!(m.is_minus_infinity());
        assert_eq!(m.witness.ray, Some(vec![BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn unboundedness() {
        let id = [WeightVector::identity(2)];
        assert!(is_unbounded_below(&id, &MonomialRIdeal::single(vec![vec![1, 0]], qi(3))).0);
        assert!(!is_unbounded_below(&id, &MonomialRIdeal::single(vec![vec![1, 0]], q(1, 2))).0);
        assert!(!is_unbounded_below(&[cyclic(5, &[1, 2])], &MonomialRIdeal::empty()).0);
    }

    #[test]
    fn rejects_bad_input() {
        let err = mld_origin_toric(&[cyclic(2, &[1, 0])], &MonomialRIdeal::empty()).unwrap_err();
        assert!(matches!(err, Error::NotFreeInCodim1 { .. }));
        let a = MonomialRIdeal::single(vec![vec![1, 0]], qi(1));
        let err = mld_origin_toric(&[cyclic(2, &[1, 1])], &a).unwrap_err();
        assert!(matches!(err, Error::NonInvariantIdeal { .. }));
    }

    #[test]
    fn agrees_with_enumeration_on_small_cases() {
        let cases: Vec<(WeightVector, MonomialRIdeal)> = vec![
            (cyclic(5, &[1, 2]), MonomialRIdeal::empty()),
            (cyclic(7, &[1, 3]), MonomialRIdeal::empty()),
            (cyclic(2, &[1, 1]), MonomialRIdeal::single(vec![vec![1, 1]], q(1, 4))),
            (cyclic(3, &[1, 2]), MonomialRIdeal::single(vec![vec![3, 0], vec![1, 1]], q(1, 2))),
            (WeightVector::identity(2), MonomialRIdeal::single(vec![vec![1, 0]], qi(1))),
        ];
        for (w, a) in cases {
            let m = mld_origin_toric(&[w.clone()], &a).unwrap();
            let value = m.kind.finite().unwrap().clone();
            let bound = (value.floor().to_integer() + BigInt::from(3)).to_u64().unwrap();
            let (oracle, point) = brute_force_mld(&[w], &a, bound).unwrap().unwrap();
            assert_eq!(value, oracle);
            assert_eq!(m.witness.point.unwrap(), point);
        }
    }
}
