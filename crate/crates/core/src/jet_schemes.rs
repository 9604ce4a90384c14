//! Jet schemes of twisted `k[t]`-schemes and codimensions of contact loci.
//!
//! An `m`-jet is `x_i(t) = Σ_{j ≤ m} a_{i,j} t^j`; the jet ideal collects the
//! coefficients of `t^0, …, t^m` of every equation after substitution, with
//! `t` kept as the jet parameter. Variable `a_{i,j}` has ring index `j·N + i`.
//!
//! Codimension of a cylinder `C` inside `Cont^e(Jac)`: if `L_M` is the locus
//! of `M`-jets of the scheme that satisfy the contact conditions, then for
//! `M ≥ max(2e, e + k)` (`k` the highest jet coefficient the conditions read)
//! every such jet truncates to a liftable `(M−e)`-jet, the fibres of the
//! truncation have dimension `e(n+1)`, and
//! `codim C = (M+1)·n − dim L_M + e`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly_engine::{cached_groebner, dimension_from_basis, Mono, MonomialOrder, Poly, MAX_VARS};
use crate::rational::Q;
use crate::twist::{Monomial, Polynomial, TwistedScheme};

const ORDER: MonomialOrder = MonomialOrder::GrevLex;

/// Coefficient ring of `m`-jets of `A^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JetRing {
    pub dim: usize,
    pub level: usize,
}

impl JetRing {
    pub fn new(dim: usize, level: usize) -> Self {
        JetRing { dim, level }
    }

    pub fn nvars(&self) -> usize {
        self.dim * (self.level + 1)
    }

    /// Ring index of `a_{i,j}` (0-based `i`).
    pub fn var(&self, i: usize, j: usize) -> usize {
        j * self.dim + i
    }

    pub fn var_name(&self, index: usize) -> String {
        format!("a{},{}", index % self.dim + 1, index / self.dim)
    }
}

/// The `m`-th jet ideal of a twisted scheme.
#[derive(Debug, Clone)]
pub struct JetIdeal {
    pub ring: JetRing,
    /// Coefficients of `t^0, …, t^m`, equation by equation (zero entries kept).
    pub generators: Vec<Poly>,
}

impl JetIdeal {
    /// Renders a generator with `a{i},{j}` variable names.
    pub fn render(&self, k: usize) -> String {
        render_poly(&self.generators[k], &self.ring)
    }
}

pub fn render_poly(p: &Poly, ring: &JetRing) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let abs = if neg { -c.clone() } else { c.clone() };
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for v in 0..ring.nvars() {
            match m.get(v) {
                0 => {}
                1 => factors.push(ring.var_name(v)),
                k => factors.push(format!("{}^{k}", ring.var_name(v))),
            }
        }
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&format!("{abs}*{}", factors.join("*")));
        }
    }
    out
}

/// Truncated power series in `t` with polynomial coefficients.
type Series = Vec<Poly>;

fn series_mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![Poly::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y, &ORDER), &ORDER);
            }
        }
    }
    out
}

/// Substitutes a generic `m`-jet into polynomials in `t, x`.
pub struct Pullback {
    ring: JetRing,
    powers: HashMap<(usize, u32), Series>,
}

impl Pullback {
    pub fn new(ring: JetRing) -> Self {
        Pullback { ring, powers: HashMap::new() }
    }

    fn power(&mut self, i: usize, k: u32) -> Series {
        let len = self.ring.level + 1;
        if let Some(s) = self.powers.get(&(i, k)) {
            return s.clone();
        }
        let s = if k == 0 {
            let mut s = vec![Poly::zero(); len];
            s[0] = Poly::one();
            s
        } else if k == 1 {
            (0..len).map(|j| Poly::var(self.ring.var(i, j))).collect()
        } else {
            let prev = self.power(i, k - 1);
            let base = self.power(i, 1);
            series_mul(&prev, &base, len)
        };
        self.powers.insert((i, k), s.clone());
        s
    }

    /// Coefficients of `t^0, …, t^m` of `f(t, x(t))`, scaled to integer coefficients.
    pub fn coefficients(&mut self, f: &Polynomial) -> Vec<Poly> {
        let len = self.ring.level + 1;
        let den = f.terms().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        let mut total: Series = vec![Poly::zero(); len];
        for (mono, c) in f.terms() {
            let shift = mono.t_power as usize;
            if shift >= len {
                continue;
            }
            let coef = (c * Q::from_integer(den.clone())).to_integer();
            let mut s: Series = vec![Poly::zero(); len];
            s[0] = Poly::constant(coef);
            for (i, &k) in mono.exponents.iter().enumerate() {
                if k > 0 {
                    let p = self.power(i, k);
                    s = series_mul(&s, &p, len - shift);
                    s.resize(len, Poly::zero());
                }
            }
            for j in 0..len - shift {
                if !s[j].is_zero() {
                    total[j + shift] = total[j + shift].add(&s[j], &ORDER);
                }
            }
        }
        total
    }
}

/// The level-`m` jet ideal of `s`.
pub fn jet_ideal(s: &TwistedScheme, m: usize) -> JetIdeal {
    let ring = JetRing::new(s.ambient_dim, m);
    let mut pb = Pullback::new(ring);
    let generators = s.generators.iter().flat_map(|f| pb.coefficients(f)).collect();
    JetIdeal { ring, generators }
}

/// Dimension of the level-`m` jet scheme.
pub fn jet_dimension(s: &TwistedScheme, m: usize, budget: usize) -> Result<i64> {
    let ideal = jet_ideal(s, m);
    locus_dimension(ideal.generators, ideal.ring.nvars(), budget)
}

/// `∂f/∂x_j`.
pub fn derivative(f: &Polynomial, j: usize) -> Polynomial {
    Polynomial::from_terms(
        f.dim(),
        f.terms().filter(|(m, _)| m.exponents[j] > 0).map(|(m, c)| {
            let mut e = m.exponents.clone();
            let k = e[j];
            e[j] -= 1;
            (Monomial::new(e, m.t_power), c * Q::from_integer(k.into()))
        }),
    )
}

/// The `c × c` minors of the Jacobian matrix `(∂F_i/∂x_j)`; for `c = 0` the unit ideal.
pub fn jacobian_ideal(s: &TwistedScheme) -> Vec<Polynomial> {
    let n = s.ambient_dim;
    let c = s.generators.len();
    if c == 0 {
        return vec![Polynomial::constant(n, Q::one())];
    }
    let partials: Vec<Vec<Polynomial>> = s
        .generators
        .iter()
        .map(|f| (0..n).map(|j| derivative(f, j)).collect())
        .collect();
    let mut minors = Vec::new();
    for cols in crate::lattice_mld::combinations(n, c) {
        let det = determinant(&partials, &cols, n);
        if !det.is_zero() {
            minors.push(det);
        }
    }
    minors
}

fn determinant(m: &[Vec<Polynomial>], cols: &[usize], dim: usize) -> Polynomial {
    let c = m.len();
    let mut total = Polynomial::zero(dim);
    for perm in permutations(c) {
        let sign = if inversions(&perm) % 2 == 0 { Q::one() } else { -Q::one() };
        let mut term = Polynomial::constant(dim, sign);
        for (row, &p) in perm.iter().enumerate() {
            term = term.mul(&m[row][cols[p]]);
            if term.is_zero() {
                break;
            }
        }
        total = total.add(&term);
    }
    total
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// Dimension of `V(generators) ⊂ A^nvars`, `-1` when empty.
///
/// Before computing a Gröbner basis, generators of the form `c·v^k` set `v = 0`
/// (the zero set only depends on the radical), generators `c·v + r` with `v`
/// absent from `r` eliminate `v`, and variables occurring nowhere are counted
/// as free directions. A generator `M − 1` makes the variables of `M`
/// invertible, and both rules then allow coefficients that are monomials in them.
pub fn locus_dimension(generators: Vec<Poly>, nvars: usize, budget: usize) -> Result<i64> {
    let simple = simplify_locus(generators, nvars)?;
    if simple.empty {
        return Ok(-1);
    }
    if simple.generators.is_empty() {
        return Ok(simple.free);
    }
    let n = simple.nvars;
    let basis = cached_groebner(n, &ORDER, &simple.generators, budget)?;
    let d = dimension_from_basis(&basis, n);
    Ok(if d < 0 { -1 } else { d + simple.free })
}

/// A locus after elimination of determined variables.
#[derive(Debug, Clone)]
pub struct SimplifiedLocus {
    /// Remaining generators over variables renumbered `0..nvars`.
    pub generators: Vec<Poly>,
    pub nvars: usize,
    /// Variables that occur nowhere (free directions).
    pub free: i64,
    pub empty: bool,
}

/// Applies the elimination rules of [`locus_dimension`] without a Gröbner basis.
pub fn simplify_locus(generators: Vec<Poly>, nvars: usize) -> Result<SimplifiedLocus> {
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let empty = |nvars| SimplifiedLocus { generators: Vec::new(), nvars, free: 0, empty: true };
    let mut gens: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
    let mut fixed: u64 = 0;
    loop {
        if gens.iter().any(Poly::is_unit) {
            return Ok(empty(0));
        }
        let units = units(&gens);
        match monomial_zero(&gens, &units) {
            Some(None) => return Ok(empty(0)),
            Some(Some(v)) => {
                fixed |= 1 << v;
                gens = substitute_all(&gens, v, None);
            }
            None => match find_linear(&gens, &units) {
                Some((k, v, g)) => {
                    fixed |= 1 << v;
                    gens.swap_remove(k);
                    gens = substitute_all(&gens, v, Some(&g));
                }
                None => break,
            },
        }
    }
    let used = gens.iter().fold(0u64, |m, g| m | g.support_mask());
    let free = (0..nvars).filter(|&v| fixed & (1 << v) == 0 && used & (1 << v) == 0).count() as i64;
    let vars: Vec<usize> = (0..nvars).filter(|&v| used & (1 << v) != 0).collect();
    let mut map = vec![0usize; nvars];
    for (new, &old) in vars.iter().enumerate() {
        map[old] = new;
    }
    let generators = gens.iter().map(|g| g.rename(&map, &ORDER)).collect();
    Ok(SimplifiedLocus { generators, nvars: vars.len(), free, empty: false })
}

/// An invertible variable `u` with `u⁻¹ = (num/den)·mono`.
#[derive(Debug, Clone)]
struct Unit {
    var: usize,
    mono: Mono,
    num: BigInt,
    den: BigInt,
}

/// Variables made invertible by a generator `a·M + b` (`b ≠ 0` constant):
/// on its zero set `u⁻¹ = (−a/b)·M/u` for every `u` dividing `M`.
fn units(gens: &[Poly]) -> Vec<Unit> {
    let mut out: Vec<Unit> = Vec::new();
    for g in gens {
        let t = g.terms();
        if t.len() != 2 || !t[1].0.is_one() {
            continue;
        }
        let (m, a, b) = (t[0].0, &t[0].1, &t[1].1);
        for u in 0..MAX_VARS {
            if m.get(u) > 0 && !out.iter().any(|w| w.var == u) {
                let mut mono = m;
                mono.set(u, m.get(u) - 1);
                out.push(Unit { var: u, mono, num: -a.clone(), den: b.clone() });
            }
        }
    }
    out
}

fn unit_mask(units: &[Unit]) -> u64 {
    units.iter().fold(0, |m, u| m | 1 << u.var)
}

/// A generator `c·N·v + r` with `N` a monomial in invertible variables and
/// `v` absent from `N` and `r`, rewritten as `c·v + N⁻¹·r` (denominators
/// cleared). Prefers short generators.
fn find_linear(gens: &[Poly], units: &[Unit]) -> Option<(usize, usize, Poly)> {
    const MAX_TERMS: usize = 40;
    let invertible = unit_mask(units);
    let mut best: Option<(usize, usize, Mono)> = None;
    for (k, g) in gens.iter().enumerate() {
        if g.len() > MAX_TERMS || best.as_ref().map_or(false, |b| gens[b.0].len() <= g.len()) {
            continue;
        }
        for (m, _) in g.terms() {
            let outside = m.mask() & !invertible;
            if outside.count_ones() != 1 {
                continue;
            }
            let v = outside.trailing_zeros() as usize;
            if m.get(v) != 1 {
                continue;
            }
            let elsewhere = g.terms().iter().filter(|(t, _)| t.get(v) > 0).count();
            if elsewhere == 1 {
                let mut n = *m;
                n.set(v, 0);
                best = Some((k, v, n));
                break;
            }
        }
    }
    let (k, v, n) = best?;
    if n.is_one() {
        return Some((k, v, gens[k].clone()));
    }
    let (mut mono, mut num, mut den) = (Mono::one(), BigInt::one(), BigInt::one());
    for u in units {
        for _ in 0..n.get(u.var) {
            mono = mono.mul(&u.mono);
            num *= &u.num;
            den *= &u.den;
        }
    }
    let terms = gens[k]
        .terms()
        .iter()
        .map(|(t, c)| {
            if t.get(v) > 0 {
                (Mono::var(v), c * &den)
            } else {
                (t.mul(&mono), c * &num)
            }
        })
        .collect();
    Some((k, v, Poly::from_terms(terms, &ORDER)))
}

/// A single-term generator `c·N·v^k` with `N` invertible forces `v = 0`;
/// with nothing outside the invertible variables the locus is empty.
fn monomial_zero(gens: &[Poly], units: &[Unit]) -> Option<Option<usize>> {
    let invertible = unit_mask(units);
    for g in gens.iter().filter(|g| g.len() == 1) {
        let outside = g.support_mask() & !invertible;
        match outside.count_ones() {
            0 => return Some(None),
            1 => return Some(Some(outside.trailing_zeros() as usize)),
            _ => {}
        }
    }
    None
}

/// Substitutes `v = 0` (when `g` is `None`) or `v = −r/c` from `g = c·v + r`,
/// clearing denominators.
fn substitute_all(gens: &[Poly], v: usize, g: Option<&Poly>) -> Vec<Poly> {
    let mut out = Vec::with_capacity(gens.len());
    for p in gens {
        let q = match g {
            None => p.substitute_constant(v, &BigInt::zero(), &ORDER),
            Some(g) => substitute_linear(p, v, g),
        };
        if !q.is_zero() {
            let mut q = q;
            q.make_primitive();
            out.push(q);
        }
    }
    out.sort_by(|a, b| ORDER.cmp(b.lm(), a.lm()).then_with(|| a.len().cmp(&b.len())));
    out.dedup();
    out
}

fn substitute_linear(p: &Poly, v: usize, g: &Poly) -> Poly {
    let max_k = p.terms().iter().map(|(m, _)| m.get(v)).max().unwrap_or(0);
    if max_k == 0 {
        return p.clone();
    }
    let (c, rest) = {
        let mut c = BigInt::zero();
        let mut rest = Vec::new();
        for (m, a) in g.terms() {
            if m.get(v) > 0 {
                c = a.clone();
            } else {
                rest.push((*m, -a));
            }
        }
        (c, Poly::from_terms(rest, &ORDER))
    };
    // c^K · p(v = rest/c) = Σ_k p_k · rest^k · c^{K−k}.
    let mut rest_pows = vec![Poly::one()];
    for k in 1..=max_k as usize {
        let next = rest_pows[k - 1].mul(&rest, &ORDER);
        rest_pows.push(next);
    }
    let mut total = Poly::zero();
    for (m, a) in p.terms() {
        let k = m.get(v);
        let mut mm = *m;
        mm.set(v, 0);
        let scale = a * c.pow(max_k - k);
        let term = rest_pows[k as usize].mul_term(&mm, &scale);
        total = total.add(&term, &ORDER);
    }
    total
}

/// Order condition on the Jacobian ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobianBound {
    Exactly(u64),
    AtMost(u64),
}

/// Contact conditions imposed on arcs of a twisted scheme. Ideal conditions
/// are on polynomials in `t, x` already twisted into the sector.
#[derive(Debug, Clone)]
pub struct JetContactSpec {
    /// Each entry: generators of an ideal and a lower bound on its order.
    pub at_least: Vec<(Vec<Polynomial>, u64)>,
    pub jacobian: Option<JacobianBound>,
}

/// One probed level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProbe {
    pub level: usize,
    /// Dimension of the locus in the jet scheme; `-1` if empty.
    pub dim: i64,
    /// Codimension of the cylinder computed at this level; `None` if empty.
    pub codim: Option<i64>,
}

/// Codimension estimate for one Jacobian order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderEstimate {
    pub jacobian_order: u64,
    pub probes: Vec<LevelProbe>,
    /// `true` when the locus was empty at some probed level.
    pub empty: bool,
    /// `true` when three consecutive probed levels agree.
    pub stabilized: bool,
}

impl OrderEstimate {
    /// Codimension read at the last probed level.
    pub fn codim(&self) -> Option<i64> {
        if self.empty {
            return None;
        }
        self.probes.last().and_then(|p| p.codim)
    }
}

/// Codimension interval over all probed levels and Jacobian orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderEstimate {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
    pub per_order: Vec<OrderEstimate>,
    pub stabilized: bool,
    /// `true` when every Jacobian order gave an empty locus.
    pub empty: bool,
}

impl CylinderEstimate {
    pub fn levels_probed(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.per_order.iter().flat_map(|o| o.probes.iter().map(|p| p.level)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Number of consecutive valid levels probed per cell.
pub const PROBE_LEVELS: usize = 3;

/// Estimates the codimension of
/// `∩ Cont^{≥w}(a) ∩ Cont^{≥1}(m_x) ∩ Cont^{b}(Jac)` on the arcs of `s`.
///
/// `maximal_ideal` lists twisted generators of the maximal ideal of the origin.
pub fn cylinder_codim_estimate(
    s: &TwistedScheme,
    spec: &JetContactSpec,
    maximal_ideal: &[Polynomial],
    m_max: usize,
    budget: usize,
) -> Result<CylinderEstimate> {
    let orders: Vec<u64> = match spec.jacobian {
        None => vec![0],
        Some(JacobianBound::Exactly(e)) => vec![e],
        Some(JacobianBound::AtMost(b)) => (0..=b).collect(),
    };
    let jac = jacobian_ideal(s);
    let jac_is_unit = is_unit_ideal(&jac);
    let mut per_order = Vec::new();
    for e in orders {
        if jac_is_unit && e > 0 {
            per_order.push(OrderEstimate { jacobian_order: e, probes: Vec::new(), empty: true, stabilized: true });
            continue;
        }
        per_order.push(estimate_for_order(s, spec, maximal_ideal, &jac, e, m_max, budget)?);
    }
    let codims: Vec<i64> = per_order.iter().filter_map(OrderEstimate::codim).collect();
    let all_codims: Vec<i64> = per_order
        .iter()
        .filter(|o| !o.empty)
        .flat_map(|o| o.probes.iter().filter_map(|p| p.codim))
        .collect();
    let empty = per_order.iter().all(|o| o.empty);
    let stabilized = per_order.iter().all(|o| o.empty || o.stabilized);
    Ok(CylinderEstimate {
        lo: all_codims.iter().copied().min().or(codims.iter().copied().min()),
        hi: all_codims.iter().copied().max(),
        per_order,
        stabilized,
        empty,
    })
}

fn is_unit_ideal(gens: &[Polynomial]) -> bool {
    gens.iter().any(|p| p.num_terms() == 1 && p.terms().all(|(m, _)| m.is_constant()))
}

/// Smallest level at which the conditions are read faithfully for Jacobian order `e`.
pub fn first_valid_level(spec: &JetContactSpec, e: u64) -> usize {
    let read = spec.at_least.iter().map(|(_, w)| w.saturating_sub(1)).max().unwrap_or(0);
    let read = read.max(e);
    ((2 * e).max(e + read)) as usize
}

fn estimate_for_order(
    s: &TwistedScheme,
    spec: &JetContactSpec,
    maximal_ideal: &[Polynomial],
    jac: &[Polynomial],
    e: u64,
    m_max: usize,
    budget: usize,
) -> Result<OrderEstimate> {
    let start = first_valid_level(spec, e);
    let n = s.rel_dim as i64;
    let mut probes = Vec::new();
    let mut empty = false;
    for level in start..=m_max {
        if probes.len() == PROBE_LEVELS {
            break;
        }
        let dim = level_locus_dimension(s, spec, maximal_ideal, jac, e, level, budget)?;
        let codim = if dim < 0 { None } else { Some((level as i64 + 1) * n - dim + e as i64) };
        probes.push(LevelProbe { level, dim, codim });
        if dim < 0 {
            empty = true;
            break;
        }
    }
    let stabilized = probes.len() >= PROBE_LEVELS && probes.windows(2).all(|w| w[0].codim == w[1].codim);
    Ok(OrderEstimate { jacobian_order: e, probes, empty, stabilized })
}

/// Dimension of the level-`level` locus: jet equations, the closed contact
/// conditions, and Jacobian order exactly `e` (as a union over minors of the
/// open sets where the order-`e` coefficient is nonzero).
pub fn level_locus_dimension(
    s: &TwistedScheme,
    spec: &JetContactSpec,
    maximal_ideal: &[Polynomial],
    jac: &[Polynomial],
    e: u64,
    level: usize,
    budget: usize,
) -> Result<i64> {
    let ring = JetRing::new(s.ambient_dim, level);
    let mut pb = Pullback::new(ring);
    let mut closed: Vec<Poly> = s.generators.iter().flat_map(|f| pb.coefficients(f)).collect();
    let push_order = |gens: &[Polynomial], w: u64, closed: &mut Vec<Poly>, pb: &mut Pullback| {
        for g in gens {
            let coeffs = pb.coefficients(g);
            closed.extend(coeffs.into_iter().take(w as usize));
        }
    };
    push_order(maximal_ideal, 1, &mut closed, &mut pb);
    for (gens, w) in &spec.at_least {
        push_order(gens, *w, &mut closed, &mut pb);
    }
    if spec.jacobian.is_none() || is_unit_ideal(jac) {
        return locus_dimension(closed, ring.nvars(), budget);
    }
    push_order(jac, e, &mut closed, &mut pb);
    let openers: Vec<Poly> = jac
        .iter()
        .map(|g| pb.coefficients(g)[e as usize].clone())
        .filter(|p| !p.is_zero())
        .collect();
    let y = ring.nvars();
    let mut best = -1i64;
    for h in openers {
        // y·h − 1 makes h invertible; a monomial is invertible iff its support is.
        let h = if h.len() == 1 {
            let mut m = Mono::one();
            for v in 0..y {
                if h.lm().get(v) > 0 {
                    m.set(v, 1);
                }
            }
            Poly::monomial(m, BigInt::one())
        } else {
            h
        };
        let yh = h.mul_term(&Mono::var(y), &BigInt::one());
        let rab = yh.sub(&Poly::one(), &ORDER);
        let mut gens = closed.clone();
        gens.push(rab);
        best = best.max(locus_dimension(gens, y + 1, budget)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::WeightVector;
    use crate::twist::build_twisted_scheme;

    fn scheme(eqs: &[&str], n: usize, w: &WeightVector) -> TwistedScheme {
        let polys: Vec<Polynomial> = eqs.iter().map(|e| Polynomial::parse(e, n).unwrap()).collect();
        build_twisted_scheme(&polys, w).unwrap()
    }

    fn cubic() -> TwistedScheme {
        scheme(&["x1^3 + x2^3 + x3^3"], 3, &WeightVector::new(3, vec![0, 1, 2]).unwrap())
    }

    #[test]
    fn jet_ideal_examples() {
        let s = scheme(&["x1"], 1, &WeightVector::identity(1));
        let j = jet_ideal(&s, 1);
        let rendered: Vec<String> = (0..j.generators.len()).map(|k| j.render(k)).collect();
        assert_eq!(rendered, vec!["a1,0", "a1,1"]);

        let j = jet_ideal(&cubic(), 0);
        assert_eq!(j.render(0), "a1,0^3");
        let j = jet_ideal(&cubic(), 1);
        assert_eq!(j.generators.len(), 2);
        // Grevlex puts a20^3 first.
        assert_eq!(j.render(1), "a2,0^3 + 3*a1,0^2*a1,1");
    }

    #[test]
    fn jet_dimension_examples() {
        for n in 1..=3 {
            let s = scheme(&[], n, &WeightVector::identity(n));
            for m in 0..=4 {
                assert_eq!(jet_dimension(&s, m, 10_000).unwrap(), ((m + 1) * n) as i64);
            }
        }
        let s = scheme(&["x1"], 2, &WeightVector::identity(2));
        assert_eq!(jet_dimension(&s, 2, 10_000).unwrap(), 3);
        assert_eq!(jet_dimension(&cubic(), 0, 10_000).unwrap(), 2);
    }

    #[test]
    fn jacobian_examples() {
        let s = scheme(&["x1"], 2, &WeightVector::identity(2));
        assert_eq!(jacobian_ideal(&s), vec![Polynomial::constant(2, Q::one())]);
        let j: Vec<String> = jacobian_ideal(&cubic()).iter().map(|p| p.to_string()).collect();
        assert_eq!(j, vec!["3*x1^2", "3*t*x2^2", "3*t^2*x3^2"]);
        let s = scheme(&["x1^2 + x2^2"], 2, &WeightVector::identity(2));
        let j: Vec<String> = jacobian_ideal(&s).iter().map(|p| p.to_string()).collect();
        assert_eq!(j, vec!["2*x1", "2*x2"]);
    }

    #[test]
    fn cylinder_examples() {
        let s = scheme(&["x1"], 2, &WeightVector::identity(2));
        let m = vec![Polynomial::parse("x1", 2).unwrap(), Polynomial::parse("x2", 2).unwrap()];
        let spec = JetContactSpec { at_least: vec![], jacobian: None };
        let est = cylinder_codim_estimate(&s, &spec, &m, 3, 10_000).unwrap();
        assert_eq!((est.lo, est.hi), (Some(1), Some(1)));
        assert!(est.stabilized);

        let m3: Vec<Polynomial> = ["x1^3", "t*x2^3", "t^2*x3^3"]
            .iter()
            .map(|p| Polynomial::parse(p, 3).unwrap())
            .collect();
        for b in 0..=2 {
            let spec = JetContactSpec { at_least: vec![], jacobian: Some(JacobianBound::AtMost(b)) };
            let est = cylinder_codim_estimate(&cubic(), &spec, &m3, 6, 50_000).unwrap();
            assert!(est.empty, "bounded Jacobian order {b} should be empty");
        }
    }

    #[test]
    fn linear_elimination_preserves_dimension() {
        // y0 + y1*y2 = 0, y1 = 0 in three variables: a line.
        let p = Poly::from_terms(
            vec![
                (Mono::from_exponents(&[1, 0, 0]), BigInt::from(1)),
                (Mono::from_exponents(&[0, 1, 1]), BigInt::from(1)),
            ],
            &ORDER,
        );
        assert_eq!(locus_dimension(vec![p.clone()], 3, 100).unwrap(), 2);
        assert_eq!(locus_dimension(vec![p, Poly::var(1)], 3, 100).unwrap(), 1);
    }
}
