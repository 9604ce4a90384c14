//! User-facing mld computations and cross-checks between backends.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::contact_loci::formula_mld_quot;
use crate::error::{Error, Result};
use crate::group_core::{FiniteGroup, MonomialMatrix, WeightVector, DEFAULT_GROUP_CAP};
use crate::jet_schemes::{cylinder_codim_estimate, jacobian_ideal, JacobianBound, JetContactSpec};
use crate::lattice_mld::{
    brute_force_mld, mld_origin_toric, IdealFactor, MldKind, MldValue, MonomialRIdeal, Status, Witness,
};
use crate::poly_engine::DEFAULT_GROEBNER_BUDGET;
use crate::rational::{format_rational, gcd_u64, q, Q};
use crate::twist::{build_twisted_scheme, twist_poly, Polynomial};

/// Minimum over one generator per cyclic subgroup of the toric mld of `⟨γ⟩`.
pub fn mld_reid_tai(group: &FiniteGroup, ideal: &MonomialRIdeal) -> Result<MldValue> {
    if let Some(g) = group.pseudo_reflection() {
        return Err(Error::NotFreeInCodim1 { witness: g.to_string() });
    }
    ideal.validate(group.dim())?;
    for g in group.generators() {
        check_group_invariant(g, ideal)?;
    }
    let reps = group.cyclic_subgroup_representatives();
    let values: Vec<(usize, MldValue)> = reps
        .par_iter()
        .map(|&i| {
            let g = &group.elements()[i];
            let (w, a) = cyclic_data(g, ideal)?;
            mld_origin_toric(&[w], &a).map(|v| (i, v))
        })
        .collect::<Result<_>>()?;
    let (i, mut best) = values
        .into_iter()
        .min_by(|a, b| a.1.kind.cmp(&b.1.kind).then(a.0.cmp(&b.0)))
        .expect("the identity is always a representative");
    best.witness.gamma = Some(group.elements()[i].to_string());
    best.witness.window.insert("cyclic_subgroups".into(), reps.len() as u64);
    Ok(best)
}

/// Weights of `γ` in a diagonalizing basis and the ideal expressed there.
fn cyclic_data(g: &MonomialMatrix, ideal: &MonomialRIdeal) -> Result<(WeightVector, MonomialRIdeal)> {
    if let Some(w) = g.diagonal_weights() {
        return Ok((w, ideal.clone()));
    }
    let n = g.dim();
    let mut factors = Vec::new();
    for f in ideal.active_factors() {
        // Only ideals with the same valuations as m^k survive the basis change.
        let k = f.generators.iter().map(|u| u.iter().sum::<u32>()).min().unwrap_or(0);
        let has_powers = (0..n).all(|i| {
            f.generators.iter().any(|u| u[i] == k && u.iter().sum::<u32>() == k)
        });
        if !has_powers {
            return Err(Error::UnsupportedIdealBasisChange { element: g.to_string() });
        }
        let gens = (0..n)
            .map(|i| {
                let mut u = vec![0u32; n];
                u[i] = k;
                u
            })
            .collect();
        factors.push(IdealFactor::new(gens, f.exponent.clone()));
    }
    Ok((g.weights(), MonomialRIdeal { factors }))
}

fn check_group_invariant(g: &MonomialMatrix, ideal: &MonomialRIdeal) -> Result<()> {
    let n = g.dim();
    for f in &ideal.factors {
        for u in &f.generators {
            // The image of x^u under a monomial matrix is a scalar times a permuted monomial.
            let mut image = vec![0u32; n];
            for (i, &k) in u.iter().enumerate() {
                image[g.perm()[i]] += k;
            }
            if !f.generators.contains(&image) {
                return Err(Error::NonInvariantIdeal { monomial: crate::lattice_mld::monomial_string(u) });
            }
        }
        if let Some(w) = g.diagonal_weights() {
            ideal.check_invariant(&[w])?;
        }
    }
    Ok(())
}

/// A complete intersection `B = V(f_1, …, f_c)` in `A^N/G` with an R-ideal.
#[derive(Debug, Clone)]
pub struct HyperquotientInstance {
    pub group: FiniteGroup,
    pub equations: Vec<Polynomial>,
    pub ideal: MonomialRIdeal,
}

/// Limits for the jet-based evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperquotOptions {
    pub m_max: usize,
    pub w_max: u64,
    pub b1_max: u64,
    pub groebner_budget: usize,
}

impl Default for HyperquotOptions {
    fn default() -> Self {
        HyperquotOptions { m_max: 6, w_max: 4, b1_max: 2, groebner_budget: DEFAULT_GROEBNER_BUDGET }
    }
}

/// An ideal factor with polynomial generators.
#[derive(Debug, Clone)]
pub struct PolyFactor {
    pub generators: Vec<Polynomial>,
    pub exponent: Q,
}

impl PolyFactor {
    pub fn from_monomial(f: &IdealFactor) -> Self {
        PolyFactor { generators: f.generators.iter().map(|u| Polynomial::monomial(u)).collect(), exponent: f.exponent.clone() }
    }
}

/// `inf codim(Cont^{≥w}(a) ∩ Cont^{≥1}(m_x) ∩ Cont^{b₁}(Jac)) + age(γ) − b₁ − Σ δ_j w_j`
/// over twisted sectors of a hyperquotient singularity.
pub fn mld_hyperquot(inst: &HyperquotientInstance, opts: &HyperquotOptions) -> Result<MldValue> {
    let g = &inst.group;
    if let Some(p) = g.pseudo_reflection() {
        return Err(Error::NotFreeInCodim1 { witness: p.to_string() });
    }
    inst.ideal.validate(g.dim())?;
    if inst.equations.is_empty() {
        let mut v = formula_mld_quot(g, &inst.ideal)?;
        v.witness.notes.push("no equations: quotient formula".into());
        return Ok(v);
    }
    let factors: Vec<PolyFactor> = inst.ideal.active_factors().into_iter().map(PolyFactor::from_monomial).collect();
    mld_jets(g, &inst.equations, &factors, opts)
}

struct Cell {
    sector: usize,
    w: Vec<u64>,
    b1: u64,
}

struct CellResult {
    term: Option<Q>,
    explored: bool,
    stabilized: bool,
    levels: Vec<usize>,
}

/// Jet-based evaluation of the sector formula on a diagonal group.
pub fn mld_jets(
    group: &FiniteGroup,
    equations: &[Polynomial],
    factors: &[PolyFactor],
    opts: &HyperquotOptions,
) -> Result<MldValue> {
    let sectors = group.diagonal_element_weights()?;
    let n = group.dim();
    let m_powers = group.pure_power_invariants()?;
    let m_gens: Vec<Polynomial> = m_powers.iter().map(|u| Polynomial::monomial(u)).collect();

    struct Sector {
        scheme: crate::twist::TwistedScheme,
        m_x: Vec<Polynomial>,
        factors: Vec<Vec<Polynomial>>,
        age: Q,
        smooth: bool,
    }
    let mut prepared = Vec::with_capacity(sectors.len());
    for w in &sectors {
        let scheme = build_twisted_scheme(equations, w)?;
        let m_x = m_gens.iter().map(|f| twist_poly(f, w)).collect::<Result<Vec<_>>>()?;
        let tw = factors
            .iter()
            .map(|f| f.generators.iter().map(|p| twist_poly(p, w)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let jac = jacobian_ideal(&scheme);
        let smooth = jac.iter().any(|p| p.num_terms() == 1 && p.terms().all(|(m, _)| m.is_constant()));
        prepared.push(Sector { scheme, m_x, factors: tw, age: w.age(), smooth });
    }

    let mut cells = Vec::new();
    for (s, sec) in prepared.iter().enumerate() {
        let b1s: Vec<u64> = if sec.smooth { vec![0] } else { (0..=opts.b1_max).collect() };
        for w in window_vectors(factors.len(), opts.w_max) {
            for &b1 in &b1s {
                cells.push(Cell { sector: s, w: w.clone(), b1 });
            }
        }
    }

    let results: Vec<CellResult> = cells
        .par_iter()
        .map(|c| {
            let sec = &prepared[c.sector];
            let spec = JetContactSpec {
                at_least: sec.factors.iter().cloned().zip(c.w.iter().copied()).filter(|(_, w)| *w > 0).collect(),
                jacobian: if sec.smooth { None } else { Some(JacobianBound::Exactly(c.b1)) },
            };
            let est = cylinder_codim_estimate(&sec.scheme, &spec, &sec.m_x, opts.m_max, opts.groebner_budget)?;
            let explored = est.empty || est.per_order.iter().all(|o| !o.probes.is_empty());
            let term = if est.empty {
                None
            } else {
                est.per_order[0].codim().map(|codim| {
                    let dw: Q = factors.iter().zip(&c.w).map(|(f, &w)| &f.exponent * Q::from_integer(w.into())).sum();
                    Q::from_integer(codim.into()) + &sec.age - Q::from_integer(c.b1.into()) - dw
                })
            };
            Ok(CellResult { term, explored, stabilized: est.stabilized, levels: est.levels_probed() })
        })
        .collect::<Result<_>>()?;

    let mut best: Option<(Q, usize)> = None;
    for (k, r) in results.iter().enumerate() {
        if let Some(t) = &r.term {
            if best.as_ref().map_or(true, |(b, _)| t < b) {
                best = Some((t.clone(), k));
            }
        }
    }
    let mut notes = Vec::new();
    for (s, w) in sectors.iter().enumerate() {
        let mine: Vec<&CellResult> = cells.iter().zip(&results).filter(|(c, _)| c.sector == s).map(|(_, r)| r).collect();
        if mine.iter().all(|r| r.explored && r.term.is_none()) {
            notes.push(format!("sector {w}: every explored cylinder is empty (thin arc space)"));
        }
    }
    let unexplored = results.iter().filter(|r| !r.explored).count();
    if unexplored > 0 {
        notes.push(format!("{unexplored} cells need levels above m_max"));
    }
    let Some((value, k)) = best else {
        return Err(Error::BudgetExceeded(format!(
            "no nonempty cylinder within w ≤ {}, b1 ≤ {}, m ≤ {}{}",
            opts.w_max,
            opts.b1_max,
            opts.m_max,
            if notes.is_empty() { String::new() } else { format!(" ({})", notes.join("; ")) }
        )));
    };

    let all_stable = results.iter().all(|r| !r.explored || r.term.is_none() || r.stabilized);
    let status = if group.order() == 1 && prepared[0].smooth && tail_certified(n - equations.len(), factors, &value, opts.w_max) {
        Status::Exact
    } else if unexplored == 0 && all_stable {
        Status::StabilizedHeuristic
    } else {
        Status::LowerBound
    };
    let cell = &cells[k];
    let mut witness = Witness {
        gamma: Some(sectors[cell.sector].to_string()),
        w: Some(cell.w.clone()),
        b1: Some(cell.b1),
        notes,
        ..Witness::default()
    };
    witness.window.insert("w_max".into(), opts.w_max);
    witness.window.insert("b1_max".into(), opts.b1_max);
    witness.window.insert("m_max".into(), opts.m_max as u64);
    witness.window.insert("cells".into(), cells.len() as u64);
    if let Some(&l) = results[k].levels.last() {
        witness.window.insert("level".into(), l as u64);
    }
    Ok(MldValue::finite(value, witness, status))
}

/// On a smooth `B` of dimension `n` with factors `a_j ⊇ (x_1^{k_j}, …, x_N^{k_j})`,
/// `ord a_j ≤ k_j · ord m`, so every cell with some `w_j > W` has term at least
/// `(W+1)/k_max · (n − Σ δ_j k_j)`.
fn tail_certified(n: usize, factors: &[PolyFactor], best: &Q, w_max: u64) -> bool {
    if factors.is_empty() {
        return true;
    }
    let mut ks = Vec::new();
    for f in factors {
        let dim = f.generators.first().map_or(0, Polynomial::dim);
        let mut k = 0u32;
        for i in 0..dim {
            let pure = f.generators.iter().filter_map(|p| {
                if p.num_terms() != 1 {
                    return None;
                }
                let (m, _) = p.terms().next()?;
                (m.t_power == 0 && m.exponents.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0))).then(|| m.exponents[i])
            });
            match pure.min() {
                Some(e) => k = k.max(e),
                None => return false,
            }
        }
        ks.push(k);
    }
    let slope = Q::from_integer(n.into()) - factors.iter().zip(&ks).map(|(f, &k)| &f.exponent * Q::from_integer(k.into())).sum::<Q>();
    if !slope.is_positive() {
        return false;
    }
    let kmax = *ks.iter().max().unwrap();
    let bound = Q::new((w_max + 1).into(), kmax.into()) * slope;
    bound >= *best
}

fn window_vectors(k: usize, w_max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=w_max).map(move |w| {
                    let mut v = v.clone();
                    v.push(w);
                    v
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    ConsistentWithinStatus,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::ConsistentWithinStatus => "consistent-within-status",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Two or three evaluations of the same quantity and how they compare.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub lhs: MldValue,
    pub rhs: MldValue,
    pub extra: Option<MldValue>,
    pub verdict: Verdict,
    pub provenance: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "verdict": self.verdict.as_str(),
            "provenance": self.provenance,
        });
        if let Some(e) = &self.extra {
            v["extra"] = e.to_json();
        }
        v
    }
}

/// Compares values by status: exact pairs must agree, a lower bound must not
/// exceed the other side, heuristic values must coincide.
pub fn compare(values: &[&MldValue]) -> Verdict {
    let all_exact = values.iter().all(|v| v.status == Status::Exact);
    let same = values.windows(2).all(|p| p[0].kind == p[1].kind);
    if all_exact {
        return if same { Verdict::Equal } else { Verdict::Mismatch };
    }
    if same {
        return Verdict::ConsistentWithinStatus;
    }
    // Each lower bound must sit below every non-lower-bound value.
    let firm: Vec<&MldKind> = values.iter().filter(|v| v.status != Status::LowerBound).map(|v| &v.kind).collect();
    let firm_agree = firm.windows(2).all(|p| p[0] == p[1]);
    let bounds_ok = values
        .iter()
        .filter(|v| v.status == Status::LowerBound)
        .all(|lb| firm.iter().all(|f| lb.kind <= **f));
    if firm_agree && bounds_ok {
        Verdict::ConsistentWithinStatus
    } else {
        Verdict::Mismatch
    }
}

/// Compares `mld_x(A/G, (f_1⋯f_c)·a^δ)` with `mld_x(B, a^δ|_B)`.
pub fn verify_pia(inst: &HyperquotientInstance, opts: &HyperquotOptions) -> Result<VerificationReport> {
    let g = &inst.group;
    let product = inst.equations.iter().fold(Polynomial::constant(g.dim(), Q::one()), |acc, f| acc.mul(f));
    let lhs = match monomial_exponents(&product) {
        Some(u) if !inst.equations.is_empty() => {
            let mut ideal = inst.ideal.clone();
            ideal.factors.push(IdealFactor::new(vec![u], Q::one()));
            formula_mld_quot(g, &ideal)?
        }
        _ if inst.equations.is_empty() => formula_mld_quot(g, &inst.ideal)?,
        _ => {
            let mut factors: Vec<PolyFactor> =
                inst.ideal.active_factors().into_iter().map(PolyFactor::from_monomial).collect();
            factors.push(PolyFactor { generators: vec![product.clone()], exponent: Q::one() });
            mld_jets(g, &[], &factors, opts)?
        }
    };
    let rhs = mld_hyperquot(inst, opts)?;
    let verdict = compare(&[&lhs, &rhs]);
    let provenance = vec![
        format!("lhs: ambient pair with (f1...fc) = {product}, {} ({})", lhs.kind, lhs.status),
        format!("rhs: hyperquotient, {} ({})", rhs.kind, rhs.status),
        "klt of B assumed, not checked".into(),
    ];
    Ok(VerificationReport { lhs, rhs, extra: None, verdict, provenance })
}

fn monomial_exponents(p: &Polynomial) -> Option<Vec<u32>> {
    if p.num_terms() != 1 {
        return None;
    }
    let (m, _) = p.terms().next()?;
    (m.t_power == 0).then(|| m.exponents.clone())
}

/// Runs the quotient formula, the toric minimization and Reid–Tai on one instance.
pub fn verify_consistency(group: &FiniteGroup, ideal: &MonomialRIdeal) -> Result<VerificationReport> {
    let formula = formula_mld_quot(group, ideal)?;
    let toric = mld_origin_toric(&group.diagonal_element_weights()?, ideal)?;
    let rt = mld_reid_tai(group, ideal)?;
    let verdict = compare(&[&formula, &toric, &rt]);
    let provenance = vec![
        format!("formula: {} ({}) at {}", formula.kind, formula.status, formula.witness.gamma.clone().unwrap_or_default()),
        format!("toric: {} ({})", toric.kind, toric.status),
        format!("reid-tai: {} ({}) at {}", rt.kind, rt.status, rt.witness.gamma.clone().unwrap_or_default()),
    ];
    Ok(VerificationReport { lhs: formula, rhs: toric, extra: Some(rt), verdict, provenance })
}

/// A random abelian diagonal group, free in codimension one, with a random
/// monomial R-ideal of invariant monomials.
pub fn random_instance<R: Rng>(rng: &mut R) -> (FiniteGroup, MonomialRIdeal) {
    loop {
        let n = rng.gen_range(2..=4usize);
        let ngens = rng.gen_range(1..=2usize);
        let weights: Vec<WeightVector> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(2..=12u64);
                let e = (0..n).map(|_| rng.gen_range(0..d)).collect();
                WeightVector::new(d, e).expect("valid weights")
            })
            .collect();
        let Ok(group) = FiniteGroup::from_weight_vectors(&weights, DEFAULT_GROUP_CAP) else { continue };
        if !group.is_free_in_codim1() {
            continue;
        }
        let candidates: Vec<Vec<u32>> = all_small_exponents(n, 3)
            .into_iter()
            .filter(|u| weights.iter().all(|w| crate::group_core::is_weight_invariant(u, w)))
            .collect();
        let mut factors = Vec::new();
        if !candidates.is_empty() {
            for _ in 0..rng.gen_range(0..=2usize) {
                let k = rng.gen_range(1..=3usize.min(candidates.len()));
                let mut gens: Vec<Vec<u32>> = candidates.choose_multiple(rng, k).cloned().collect();
                gens.sort();
                let delta = [q(1, 4), q(1, 2), q(1, 1)].choose(rng).unwrap().clone();
                factors.push(IdealFactor::new(gens, delta));
            }
        }
        return (group, MonomialRIdeal { factors });
    }
}

fn all_small_exponents(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.retain(|u| u.iter().any(|&k| k > 0));
    out
}

/// Largest order accepted by [`acc_sample`].
pub const ACC_ORDER_CAP: u64 = 60;

/// Values of mld at the origin of cyclic quotients, with an oracle cross-check.
#[derive(Debug, Clone)]
pub struct AccReport {
    pub dim: usize,
    pub d_max: u64,
    /// Each group `1/d(e)` (canonical form) with its mld.
    pub groups: Vec<(WeightVector, Q)>,
    pub values: Vec<Q>,
    pub oracle_match: bool,
    pub in_range: bool,
}

impl AccReport {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "d_max": self.d_max,
            "groups": self.groups.len(),
            "values": self.values.iter().map(format_rational).collect::<Vec<_>>(),
            "oracle_match": self.oracle_match,
            "in_range": self.in_range,
        })
    }
}

/// All cyclic groups `1/d(e_1, …, e_n)`, `d ≤ d_max`, free in codimension one,
/// up to coordinate permutation and choice of generator.
pub fn cyclic_groups(n: usize, d_max: u64) -> Vec<WeightVector> {
    let mut seen = BTreeSet::new();
    let mut out = vec![WeightVector::identity(n)];
    for d in 2..=d_max {
        for e in nondecreasing(n, d) {
            if e.iter().fold(d, |g, &x| gcd_u64(g, x)) != 1 {
                continue;
            }
            let w = WeightVector::new(d, e).expect("weights below d");
            let free = (1..d).all(|k| w.power(k).e.iter().filter(|&&x| x != 0).count() != 1);
            if !free {
                continue;
            }
            let canon = (1..d)
                .filter(|&k| gcd_u64(k, d) == 1)
                .map(|k| {
                    let mut e = w.power(k).e;
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            if seen.insert((d, canon.clone())) {
                out.push(WeightVector::new(d, canon).unwrap());
            }
        }
    }
    out
}

fn nondecreasing(n: usize, d: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u64>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..d).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn acc_sample(n: usize, d_max: u64) -> Result<AccReport> {
    if d_max > ACC_ORDER_CAP {
        return Err(Error::CapExceeded { cap: ACC_ORDER_CAP as usize });
    }
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidInput(format!("dimension {n} outside 1..=3")));
    }
    let groups = cyclic_groups(n, d_max);
    let empty = MonomialRIdeal::empty();
    let computed: Vec<(WeightVector, Q, bool)> = groups
        .into_par_iter()
        .map(|w| {
            let v = mld_origin_toric(std::slice::from_ref(&w), &empty)?;
            let value = v.kind.finite().cloned().ok_or_else(|| Error::InvalidInput(format!("{w}: unexpected -inf")))?;
            let oracle = brute_force_mld(std::slice::from_ref(&w), &empty, n as u64)?;
            let matches = oracle.map_or(false, |(o, _)| o == value);
            Ok((w, value, matches))
        })
        .collect::<Result<_>>()?;
    let oracle_match = computed.iter().all(|c| c.2);
    let values: BTreeSet<Q> = computed.iter().map(|c| c.1.clone()).collect();
    let top = Q::from_integer(n.into());
    let in_range = values.iter().all(|v| v.is_positive() && *v <= top);
    Ok(AccReport {
        dim: n,
        d_max,
        groups: computed.into_iter().map(|(w, v, _)| (w, v)).collect(),
        values: values.into_iter().collect(),
        oracle_match,
        in_range,
    })
}

/// Summary of a randomized consistency sweep.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub seed: u64,
    pub samples: usize,
    pub minus_infinity: usize,
    pub mismatches: Vec<String>,
}

impl SweepReport {
    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "samples": self.samples,
            "minus_infinity": self.minus_infinity,
            "mismatches": self.mismatches,
        })
    }
}

/// Runs [`verify_consistency`] on `samples` random instances.
pub fn consistency_sweep(seed: u64, samples: usize) -> Result<SweepReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<(FiniteGroup, MonomialRIdeal)> = (0..samples).map(|_| random_instance(&mut rng)).collect();
    let reports: Vec<(String, VerificationReport)> = instances
        .par_iter()
        .map(|(g, a)| {
            let label = format!(
                "{} / {}",
                g.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                a
            );
            verify_consistency(g, a).map(|r| (label, r))
        })
        .collect::<Result<_>>()?;
    let minus_infinity = reports.iter().filter(|(_, r)| r.lhs.is_minus_infinity()).count();
    let mismatches = reports
        .iter()
        .filter(|(_, r)| r.verdict == Verdict::Mismatch)
        .map(|(l, r)| format!("{l}: {}", r.provenance.join("; ")))
        .collect();
    Ok(SweepReport { seed, samples, minus_infinity, mismatches })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::closure;
    use crate::rational::qi;

    fn diag_group(ws: &[(u64, &[u64])]) -> FiniteGroup {
        let w: Vec<WeightVector> = ws.iter().map(|(d, e)| WeightVector::new(*d, e.to_vec()).unwrap()).collect();
        FiniteGroup::from_weight_vectors(&w, DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn reid_tai_examples() {
        let g = FiniteGroup::trivial(3, 1);
        assert_eq!(mld_reid_tai(&g, &MonomialRIdeal::empty()).unwrap().kind, MldKind::Finite(qi(3)));
        let klein = diag_group(&[(2, &[1, 1, 0]), (2, &[0, 1, 1])]);
        assert_eq!(mld_reid_tai(&klein, &MonomialRIdeal::empty()).unwrap().kind, MldKind::Finite(qi(2)));
        // Binary dihedral group of order 8 in monomial form.
        let a = MonomialMatrix::diagonal(vec![1, 3], 4).unwrap();
        let b = MonomialMatrix::from_one_based(&[2, 1], vec![0, 2], 4).unwrap();
        let bd = closure(&[a, b], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(bd.order(), 8);
        assert_eq!(mld_reid_tai(&bd, &MonomialRIdeal::empty()).unwrap().kind, MldKind::Finite(qi(1)));
    }

    #[test]
    fn consistency_examples() {
        let g = diag_group(&[(3, &[1, 1])]);
        let r = verify_consistency(&g, &MonomialRIdeal::empty()).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
        assert_eq!(r.lhs.kind, MldKind::Finite(q(2, 3)));
        let g = diag_group(&[(2, &[1, 1])]);
        let r = verify_consistency(&g, &MonomialRIdeal::single(vec![vec![1, 1]], q(1, 4))).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
    }

    #[test]
    fn pia_smooth_divisor() {
        for (num, den) in [(0, 1), (1, 4), (1, 2), (3, 4)] {
            let delta = q(num, den);
            let ideal = if num == 0 {
                MonomialRIdeal::empty()
            } else {
                MonomialRIdeal::single(vec![vec![1, 0], vec![0, 1]], delta.clone())
            };
            let inst = HyperquotientInstance {
                group: FiniteGroup::trivial(2, 1),
                equations: vec![Polynomial::parse("x1", 2).unwrap()],
                ideal,
            };
            let r = verify_pia(&inst, &HyperquotOptions::default()).unwrap();
            let expected = MldKind::Finite(qi(1) - delta);
            assert_eq!(r.lhs.kind, expected);
            assert_eq!(r.rhs.kind, expected);
            assert_eq!(r.verdict, Verdict::Equal, "{r:?}");
        }
    }

    #[test]
    fn acc_examples() {
        let r = acc_sample(2, 2).unwrap();
        assert_eq!(r.values, vec![qi(1), qi(2)]);
        let r = acc_sample(2, 3).unwrap();
        assert!(r.values.contains(&q(2, 3)) && r.values.contains(&qi(1)));
        assert!(r.oracle_match && r.in_range);
        assert_eq!(acc_sample(1, 7).unwrap().values, vec![qi(1)]);
    }
}
