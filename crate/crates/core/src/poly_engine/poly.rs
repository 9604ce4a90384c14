use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Mono, MonomialOrder};
use crate::rational::Q;

/// A polynomial with integer coefficients, terms sorted in descending order
/// under the order it was built with. Ideal computations keep polynomials
/// primitive (content one, positive leading coefficient).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { terms: vec![(Mono::one(), BigInt::one())] }
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        Poly { terms: vec![(Mono::var(i), BigInt::one())] }
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        Poly::constant(c).mul_term(&m, &BigInt::one())
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(terms: Vec<(Mono, BigInt)>, order: &MonomialOrder) -> Self {
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<(Mono, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    /// Clears denominators and returns the primitive integer multiple.
    pub fn from_rational_terms(terms: Vec<(Mono, Q)>, order: &MonomialOrder) -> Self {
        let den = terms.iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        let ints = terms
            .into_iter()
            .map(|(m, c)| (m, (c * Q::from_integer(den.clone())).to_integer()))
            .collect();
        let mut p = Poly::from_terms(ints, order);
        p.make_primitive();
        p
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Bitmask of variables occurring in some term.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |m, (t, _)| m | t.mask())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    pub fn resort(&self, order: &MonomialOrder) -> Poly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// `c · m · self`; the order is preserved because orders are multiplicative.
    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn add(&self, other: &Poly, order: &MonomialOrder) -> Poly {
        combine(&BigInt::one(), &self.terms, &BigInt::from(-1), &Mono::one(), &other.terms, order)
    }

    pub fn sub(&self, other: &Poly, order: &MonomialOrder) -> Poly {
        combine(&BigInt::one(), &self.terms, &BigInt::one(), &Mono::one(), &other.terms, order)
    }

    pub fn mul(&self, other: &Poly, order: &MonomialOrder) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        Poly::from_terms(terms, order)
    }

    /// Leading-term-cancelling combination used by S-polynomials:
    /// `(lcm/lm(f))·lc(g)·f − (lcm/lm(g))·lc(f)·g`, scaled down by `gcd(lc f, lc g)`.
    pub fn s_poly(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
        let l = f.lm().lcm(g.lm());
        let h = f.lc().gcd(g.lc());
        let a = g.lc() / &h;
        let b = f.lc() / &h;
        let fm = f.lm().quotient_of(&l);
        let gm = g.lm().quotient_of(&l);
        let left = f.mul_term(&fm, &a);
        combine(&BigInt::one(), &left.terms[1..], &b, &gm, &g.terms[1..], order)
    }

    /// Full reduction modulo `basis`; the result is primitive.
    pub fn normal_form(&self, basis: &[Poly], order: &MonomialOrder) -> Poly {
        let refs: Vec<&Poly> = basis.iter().collect();
        self.reduce_by(&refs, order, true)
    }

    /// Reduces modulo `basis`: every term when `full`, otherwise only until the
    /// leading term is irreducible. The result is primitive.
    pub fn reduce_by(&self, basis: &[&Poly], order: &MonomialOrder, full: bool) -> Poly {
        let mut p = self.clone();
        let mut k = 0;
        let mut steps = 0usize;
        while k < p.terms.len() {
            let (m, c) = (p.terms[k].0, p.terms[k].1.clone());
            match basis.iter().find(|g| !g.is_zero() && g.lm().divides(&m)) {
                None if full => k += 1,
                None => break,
                Some(g) => {
                    let h = c.gcd(g.lc());
                    let a = g.lc() / &h;
                    let b = &c / &h;
                    let q = g.lm().quotient_of(&m);
                    let mut head: Vec<(Mono, BigInt)> = Vec::with_capacity(p.terms.len());
                    if a.is_one() {
                        head.extend_from_slice(&p.terms[..k]);
                    } else {
                        head.extend(p.terms[..k].iter().map(|(t, x)| (*t, x * &a)));
                    }
                    let tail = combine(&a, &p.terms[k + 1..], &b, &q, &g.terms[1..], order);
                    head.extend(tail.terms);
                    p.terms = head;
                    steps += 1;
                    if steps % 8 == 0 {
                        p.make_primitive();
                    }
                }
            }
        }
        p.make_primitive();
        p
    }

    /// Substitutes the constant `value` for variable `i`.
    pub fn substitute_constant(&self, i: usize, value: &BigInt, order: &MonomialOrder) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let k = m.get(i);
                let mut m2 = *m;
                m2.set(i, 0);
                (m2, c * value.pow(k))
            })
            .collect();
        Poly::from_terms(terms, order)
    }

    /// Renames variables through `map` (old index to new index).
    pub fn rename(&self, map: &[usize], order: &MonomialOrder) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; super::MAX_VARS];
                for (old, &new) in map.iter().enumerate() {
                    e[new] += m.get(old);
                }
                (Mono::from_exponents(&e), c.clone())
            })
            .collect();
        Poly::from_terms(terms, order)
    }
}

/// `a·f − b·m·g` for term lists sorted descending, merged in order.
fn combine(
    a: &BigInt,
    f: &[(Mono, BigInt)],
    b: &BigInt,
    m: &Mono,
    g: &[(Mono, BigInt)],
    order: &MonomialOrder,
) -> Poly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let a_one = a.is_one();
    let shift = !m.is_one();
    let g_term = |j: usize| if shift { g[j].0.mul(m) } else { g[j].0 };
    let mut gm = if j < g.len() { Some(g_term(0)) } else { None };
    while i < f.len() || j < g.len() {
        let ord = match (i < f.len(), &gm) {
            (true, Some(t)) => order.cmp(&f[i].0, t),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push((f[i].0, if a_one { f[i].1.clone() } else { &f[i].1 * a }));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.unwrap(), -(&g[j].1 * b)));
                j += 1;
                gm = if j < g.len() { Some(g_term(j)) } else { None };
            }
            Ordering::Equal => {
                let c = if a_one { f[i].1.clone() } else { &f[i].1 * a } - &g[j].1 * b;
                if !c.is_zero() {
                    out.push((f[i].0, c));
                }
                i += 1;
                j += 1;
                gm = if j < g.len() { Some(g_term(j)) } else { None };
            }
        }
    }
    Poly { terms: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(
            terms.iter().map(|(e, c)| (Mono::from_exponents(e), BigInt::from(*c))).collect(),
            &MonomialOrder::GrevLex,
        )
    }

    #[test]
    fn arithmetic() {
        let o = MonomialOrder::GrevLex;
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(f.mul(&g, &o), p(&[(&[2, 0], 1), (&[0, 2], -1)]));
        assert_eq!(f.sub(&g, &o), p(&[(&[0, 1], 2)]));
        assert_eq!(f.add(&g, &o), p(&[(&[1, 0], 2)]));
    }

    #[test]
    fn reduction_is_primitive() {
        let o = MonomialOrder::GrevLex;
        let f = p(&[(&[2, 0], 2), (&[0, 1], 4)]);
        let g = p(&[(&[1, 0], 1)]);
        assert_eq!(f.normal_form(&[g], &o), p(&[(&[0, 1], 1)]));
    }
}
