//! Codimensions of contact loci on the twisted affine space, and the quotient
//! formula `mld = inf_{γ, w} codim(C_{w,γ}) + age(γ) − δ·w` evaluated directly.
//!
//! An arc whose coordinates have exact orders `m_i` pulls the twisted monomial
//! `t^{⟨e,u⟩/d} x^u` back to order `⟨e,u⟩/d + ⟨m,u⟩`, and the locus of such
//! arcs has codimension `Σ m_i`. Contact conditions on monomial ideals are
//! therefore integer conditions on `m`.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_core::{FiniteGroup, WeightVector};
use crate::lattice_mld::{
    search_radius, unbounded_ray, IdealFactor, Lp, LpOutcome, MldValue, MonomialRIdeal, Status, Witness,
};
use crate::rational::{q, qi, Q};

/// Kind of order condition imposed on an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderBound {
    AtLeast(u64),
    Exactly(u64),
}

impl OrderBound {
    pub fn value(self) -> u64 {
        match self {
            OrderBound::AtLeast(w) | OrderBound::Exactly(w) => w,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactConstraint {
    pub generators: Vec<Vec<u32>>,
    pub bound: OrderBound,
}

/// Contact conditions on monomial ideals, always including order at least one
/// along the maximal ideal of the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactSpec {
    pub dim: usize,
    pub constraints: Vec<ContactConstraint>,
    /// Generators of an ideal with the same zero set as the invariant maximal ideal.
    pub maximal_ideal: Vec<Vec<u32>>,
}

impl ContactSpec {
    /// Only the maximal-ideal condition, with the maximal ideal generated by `x_1, …, x_N`.
    pub fn new(dim: usize) -> Self {
        let maximal_ideal = (0..dim)
            .map(|i| (0..dim).map(|k| u32::from(i == k)).collect())
            .collect();
        ContactSpec { dim, constraints: Vec::new(), maximal_ideal }
    }

    pub fn with_maximal_ideal(dim: usize, maximal_ideal: Vec<Vec<u32>>) -> Self {
        ContactSpec { dim, constraints: Vec::new(), maximal_ideal }
    }

    pub fn at_least(mut self, generators: Vec<Vec<u32>>, w: u64) -> Self {
        self.constraints.push(ContactConstraint { generators, bound: OrderBound::AtLeast(w) });
        self
    }

    pub fn exactly(mut self, generators: Vec<Vec<u32>>, w: u64) -> Self {
        self.constraints.push(ContactConstraint { generators, bound: OrderBound::Exactly(w) });
        self
    }
}

/// Codimension of a contact locus; `Infinite` for an empty cylinder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodimValue {
    Finite { value: u64, witness: Vec<u64> },
    Infinite,
}

impl CodimValue {
    pub fn value(&self) -> Option<u64> {
        match self {
            CodimValue::Finite { value, .. } => Some(*value),
            CodimValue::Infinite => None,
        }
    }
}

/// A twisted monomial: its `t`-weight and exponent vector.
struct TwistedMono {
    t_weight: i64,
    u: Vec<u32>,
}

struct Condition {
    monos: Vec<TwistedMono>,
    bound: OrderBound,
}

fn twist_generators(gens: &[Vec<u32>], w: &WeightVector) -> Result<Vec<TwistedMono>> {
    gens.iter()
        .map(|u| {
            let s: u64 = u.iter().zip(&w.e).map(|(&a, &b)| a as u64 * b).sum();
            if s % w.d != 0 {
                return Err(Error::NonInvariantIdeal { monomial: format!("{u:?}") });
            }
            Ok(TwistedMono { t_weight: (s / w.d) as i64, u: u.clone() })
        })
        .collect()
}

/// Smallest `Σ m_i` over order vectors `m` meeting every condition of `spec`
/// in the sector `w`, with the lexicographically first minimizer as witness.
///
/// Lowering any `m_i` above `max(1, max bound)` to that value keeps every
/// condition satisfied, so the search box `[0, max(1, max bound)]^N` is exhaustive.
pub fn contact_codim(spec: &ContactSpec, w: &WeightVector) -> Result<CodimValue> {
    if w.dim() != spec.dim {
        return Err(Error::DimensionMismatch(format!(
            "weights of length {} for a contact condition in {} variables",
            w.dim(),
            spec.dim
        )));
    }
    let mut conditions = Vec::with_capacity(spec.constraints.len() + 1);
    for c in &spec.constraints {
        if c.generators.iter().any(|u| u.len() != spec.dim) {
            return Err(Error::DimensionMismatch("monomial of the wrong length".into()));
        }
        conditions.push(Condition { monos: twist_generators(&c.generators, w)?, bound: c.bound });
    }
    conditions.push(Condition {
        monos: twist_generators(&spec.maximal_ideal, w)?,
        bound: OrderBound::AtLeast(1),
    });
    let cap = conditions.iter().map(|c| c.bound.value()).max().unwrap_or(1).max(1);
    Ok(minimize_orders(spec.dim, &conditions, cap))
}

fn minimize_orders(dim: usize, conditions: &[Condition], cap: u64) -> CodimValue {
    let mut best: Option<(u64, Vec<u64>)> = None;
    let mut m = vec![0u64; dim];
    search(0, dim, conditions, cap, 0, &mut m, &mut best);
    match best {
        Some((value, witness)) => CodimValue::Finite { value, witness },
        None => CodimValue::Infinite,
    }
}

fn order_of(mono: &TwistedMono, m: &[u64]) -> i64 {
    mono.t_weight + mono.u.iter().zip(m).map(|(&a, &b)| a as i64 * b as i64).sum::<i64>()
}

fn search(
    i: usize,
    dim: usize,
    conditions: &[Condition],
    cap: u64,
    partial: u64,
    m: &mut Vec<u64>,
    best: &mut Option<(u64, Vec<u64>)>,
) {
    if let Some((b, _)) = best {
        if partial >= *b {
            return;
        }
    }
    if i + 1 < dim {
        for k in 0..=cap {
            m[i] = k;
            search(i + 1, dim, conditions, cap, partial + k, m, best);
        }
        m[i] = 0;
        return;
    }
    // Last coordinate: the lower-bound conditions give its least feasible value.
    let last = dim - 1;
    m[last] = 0;
    let mut lo: i64 = 0;
    for c in conditions {
        let target = c.bound.value() as i64;
        for mono in &c.monos {
            let base = order_of(mono, m);
            let coef = mono.u[last] as i64;
            if base >= target {
                continue;
            }
            if coef == 0 {
                return;
            }
            lo = lo.max((target - base + coef - 1) / coef);
        }
    }
    for k in lo as u64..=cap {
        if let Some((b, _)) = best {
            if partial + k >= *b {
                break;
            }
        }
        m[last] = k;
        let exact_ok = conditions.iter().all(|c| match c.bound {
            OrderBound::AtLeast(_) => true,
            OrderBound::Exactly(w) => c.monos.iter().map(|mono| order_of(mono, m)).min() == Some(w as i64),
        });
        if exact_ok {
            *best = Some((partial + k, m.clone()));
            break;
        }
    }
    m[last] = 0;
}

/// Limits for [`formula_mld_quot_with`].
#[derive(Debug, Clone)]
pub struct FormulaOptions {
    /// Largest number of `(γ, w)` cells evaluated before giving up on a certified window.
    pub max_cells: usize,
}

impl Default for FormulaOptions {
    fn default() -> Self {
        FormulaOptions { max_cells: 2_000_000 }
    }
}

/// Lower bound for `codim + age − Σ δ_l w_l` over all windows with
/// `w_j ≥ threshold` in the sector `w`: every such term is at least the log
/// discrepancy of `m + e/d`, minimized here over the real relaxation.
/// `None` when no window reaches the threshold (a factor containing `1`).
pub fn tail_lower_bound(w: &WeightVector, factors: &[&IdealFactor], j: usize, threshold: u64) -> Option<Q> {
    let dim = w.dim();
    let lo: Vec<Q> = w.e.iter().map(|&e| if e == 0 { qi(1) } else { q(e as i64, w.d as i64) }).collect();
    let nv = dim + factors.len();
    let mut lp = Lp::new(nv);
    let mut constant: Q = lo.iter().sum();
    for i in 0..dim {
        lp.c[i] = qi(1);
    }
    for (l, f) in factors.iter().enumerate() {
        lp.c[dim + l] = -f.exponent.clone();
        for u in &f.generators {
            // s_l − ⟨u, x⟩ ≤ ⟨u, lo⟩ with v = lo + x.
            let mut row = vec![Q::zero(); nv];
            let mut at_lo = Q::zero();
            for i in 0..dim {
                row[i] = -qi(u[i] as i64);
                at_lo += qi(u[i] as i64) * &lo[i];
            }
            row[dim + l] = qi(1);
            lp.add_le(row, at_lo);
        }
    }
    for u in &factors[j].generators {
        let mut row = vec![Q::zero(); nv];
        let mut at_lo = Q::zero();
        for i in 0..dim {
            row[i] = qi(u[i] as i64);
            at_lo += qi(u[i] as i64) * &lo[i];
        }
        lp.add_ge(row, qi(threshold as i64) - at_lo);
    }
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => {
            constant += value;
            Some(constant)
        }
        LpOutcome::Unbounded => panic!("tail bound requested for an unbounded objective"),
        LpOutcome::Infeasible => None,
    }
}

/// The best term found in one sector.
#[derive(Debug, Clone)]
struct Cell {
    value: Q,
    element: usize,
    w: Vec<u64>,
    orders: Vec<u64>,
}

/// Evaluates `inf_{γ, w} codim(Cont^{≥w}(a) ∩ Cont^{≥1}(m_x)) + age(γ) − Σ δ_j w_j`
/// over an abelian diagonal group with the default limits.
pub fn formula_mld_quot(group: &FiniteGroup, ideal: &MonomialRIdeal) -> Result<MldValue> {
    formula_mld_quot_with(group, ideal, &FormulaOptions::default())
}

pub fn formula_mld_quot_with(group: &FiniteGroup, ideal: &MonomialRIdeal, opts: &FormulaOptions) -> Result<MldValue> {
    if !group.is_diagonal() {
        return Err(Error::InvalidInput("the quotient formula needs a diagonal group".into()));
    }
    if let Some(g) = group.pseudo_reflection() {
        return Err(Error::NotFreeInCodim1 { witness: g.to_string() });
    }
    let dim = group.dim();
    ideal.validate(dim)?;
    let elements = group.diagonal_element_weights()?;
    ideal.check_invariant(&elements)?;
    if let Some(ray) = unbounded_ray(dim, ideal) {
        return Ok(MldValue::minus_infinity(ray, Status::Exact));
    }
    let maximal = group.pure_power_invariants()?;
    let factors = ideal.active_factors();
    let gens: Vec<&[Vec<u32>]> = factors.iter().map(|f| f.generators.as_slice()).collect();
    let radius = search_radius(dim, &gens).to_u64().unwrap_or(u64::MAX);
    let caps: Vec<u64> = factors
        .iter()
        .map(|f| {
            let deg = f.generators.iter().map(|u| u.iter().sum::<u32>() as u64).max().unwrap_or(1);
            radius.saturating_mul(deg).max(1)
        })
        .collect();

    let mut window: Vec<u64> = caps.iter().map(|&c| c.min(1)).collect();
    let mut cache: BTreeMap<(usize, Vec<u64>), CodimValue> = BTreeMap::new();
    loop {
        let cells = window_cells(elements.len(), &window);
        let best = evaluate_window(&elements, &factors, &maximal, &window, &mut cache)?;
        let best_value = best.value.clone();

        let mut uncertified: Vec<usize> = Vec::new();
        let mut tail_min: Option<Q> = None;
        for j in 0..factors.len() {
            if window[j] >= caps[j] {
                continue;
            }
            let lbs: Vec<Option<Q>> = elements
                .par_iter()
                .map(|g| tail_lower_bound(g, &factors, j, window[j] + 1))
                .collect();
            let Some(lb) = lbs.into_iter().flatten().min() else { continue };
            if lb < best_value {
                uncertified.push(j);
                tail_min = Some(match tail_min {
                    None => lb,
                    Some(t) => t.min(lb),
                });
            }
        }

        let mut witness = Witness {
            gamma: Some(elements[best.element].to_string()),
            point: Some(
                best.orders
                    .iter()
                    .zip(&elements[best.element].e)
                    .map(|(&m, &e)| qi(m as i64) + q(e as i64, elements[best.element].d as i64))
                    .collect(),
            ),
            orders: Some(best.orders.clone()),
            w: Some(best.w.clone()),
            ..Witness::default()
        };
        for (j, &wj) in window.iter().enumerate() {
            witness.window.insert(format!("w_max_{}", j + 1), wj);
        }
        if uncertified.is_empty() {
            return Ok(MldValue::finite(best_value, witness, Status::Exact));
        }
        let mut next = window.clone();
        for &j in &uncertified {
            next[j] = (window[j] * 2).min(caps[j]);
        }
        let next_cells = window_cells(elements.len(), &next);
        if next_cells > opts.max_cells || next_cells <= cells {
            let bound = tail_min.map_or(best_value.clone(), |t| t.min(best_value));
            witness.notes.push("w-window not certified; value is a lower bound".into());
            return Ok(MldValue::finite(bound, witness, Status::LowerBound));
        }
        window = next;
    }
}

fn window_cells(sectors: usize, window: &[u64]) -> usize {
    window.iter().fold(sectors, |acc, &w| acc.saturating_mul((w as usize).saturating_add(1)))
}

fn evaluate_window(
    elements: &[WeightVector],
    factors: &[&IdealFactor],
    maximal: &[Vec<u32>],
    window: &[u64],
    cache: &mut BTreeMap<(usize, Vec<u64>), CodimValue>,
) -> Result<Cell> {
    let windows = all_vectors(window);
    let missing: Vec<(usize, Vec<u64>)> = (0..elements.len())
        .flat_map(|k| windows.iter().map(move |w| (k, w.clone())))
        .filter(|key| !cache.contains_key(key))
        .collect();
    let computed: Vec<((usize, Vec<u64>), CodimValue)> = missing
        .into_par_iter()
        .map(|(k, w)| {
            let mut spec = ContactSpec::with_maximal_ideal(elements[k].dim(), maximal.to_vec());
            for (f, &wj) in factors.iter().zip(&w) {
                spec = spec.at_least(f.generators.clone(), wj);
            }
            contact_codim(&spec, &elements[k]).map(|c| ((k, w), c))
        })
        .collect::<Result<_>>()?;
    cache.extend(computed);

    let mut best: Option<Cell> = None;
    for (k, g) in elements.iter().enumerate() {
        let age = g.age();
        for w in &windows {
            let CodimValue::Finite { value, witness } = &cache[&(k, w.clone())] else { continue };
            let mut term = qi(*value as i64) + &age;
            for (f, &wj) in factors.iter().zip(w) {
                term -= &f.exponent * qi(wj as i64);
            }
            if best.as_ref().map_or(true, |b| term < b.value) {
                best = Some(Cell { value: term, element: k, w: w.clone(), orders: witness.clone() });
            }
        }
    }
    Ok(best.expect("the maximal-ideal condition alone is always satisfiable"))
}

/// All vectors `w` with `0 ≤ w_j ≤ bounds_j`, lexicographically.
fn all_vectors(bounds: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in &out {
            for k in 0..=b {
                let mut v = prefix.clone();
                v.push(k);
                next.push(v);
            }
        }
        out = next;
    }
    out
}
