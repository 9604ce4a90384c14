//! Polynomials in `x_1, …, x_N` (and optionally `t`) with exact rational
//! coefficients, and the substitution `x_i ↦ t^{e_i/d} x_i` that turns a
//! `γ`-invariant polynomial into a polynomial over `k[t]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group_core::WeightVector;
use crate::rational::{parse_rational, q, Q};

/// `t^{t_power} · x^{exponents}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u32>,
    pub t_power: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>, t_power: u32) -> Self {
        Monomial { exponents, t_power }
    }

    pub fn one(dim: usize) -> Self {
        Monomial { exponents: vec![0; dim], t_power: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.t_power == 0 && self.exponents.iter().all(|&k| k == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
            t_power: self.t_power + other.t_power,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.t_power {
            0 => {}
            1 => factors.push("t".to_string()),
            k => factors.push(format!("t^{k}")),
        }
        for (i, &k) in self.exponents.iter().enumerate() {
            match k {
                0 => {}
                1 => factors.push(format!("x{}", i + 1)),
                k => factors.push(format!("x{}^{k}", i + 1)),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// A polynomial with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Q) -> Self {
        Self::from_terms(dim, [(Monomial::one(dim), c)])
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Polynomial::zero(dim);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `x^u` with coefficient one.
    pub fn monomial(u: &[u32]) -> Self {
        Self::from_terms(u.len(), [(Monomial::new(u.to_vec(), 0), Q::one())])
    }

    /// Parses expressions such as `x1^3 + 2/3*x2*x3 - t*x1`.
    pub fn parse(s: &str, dim: usize) -> Result<Self> {
        parse_polynomial(s, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_t(&self) -> bool {
        self.terms.keys().any(|m| m.t_power > 0)
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        assert_eq!(m.exponents.len(), self.dim, "monomial length does not match the dimension");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        Self::from_terms(self.dim, self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Value at `x = 0, t = 0`.
    pub fn constant_term(&self) -> Q {
        self.terms.get(&Monomial::one(self.dim)).cloned().unwrap_or_else(Q::zero)
    }

    /// Substitutes `t = 1`.
    pub fn at_t_one(&self) -> Polynomial {
        Self::from_terms(
            self.dim,
            self.terms.iter().map(|(m, c)| (Monomial::new(m.exponents.clone(), 0), c.clone())),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Q::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            if m.is_constant() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

fn parse_polynomial(s: &str, dim: usize) -> Result<Polynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    let mut p = Polynomial::zero(dim);
    for term in terms {
        let (sign, body) = match term.as_bytes()[0] {
            b'+' => (Q::one(), &term[1..]),
            b'-' => (-Q::one(), &term[1..]),
            _ => (Q::one(), term),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        let mut coeff = sign;
        let mut mono = Monomial::one(dim);
        for factor in body.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {e:?} in {s:?}")))?;
                    (b, e)
                }
                None => (factor, 1),
            };
            if base == "t" {
                mono.t_power += exp;
            } else if let Some(idx) = base.strip_prefix('x') {
                let i: usize = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {base:?} in {s:?}")))?;
                if i == 0 || i > dim {
                    return Err(Error::Parse(format!("variable {base} outside x1..x{dim}")));
                }
                mono.exponents[i - 1] += exp;
            } else if !base.is_empty() && base.chars().all(|c| c.is_ascii_digit() || c == '/') {
                let c = parse_rational(base)?;
                for _ in 0..exp {
                    coeff *= &c;
                }
            } else {
                return Err(Error::Parse(format!("unexpected factor {factor:?} in {s:?}")));
            }
        }
        p.add_term(mono, coeff);
    }
    Ok(p)
}

/// `⟨e, u⟩ / d`.
pub fn monomial_t_weight(u: &[u32], w: &WeightVector) -> Q {
    assert_eq!(u.len(), w.e.len(), "monomial and weight vector lengths differ");
    let s: u64 = u.iter().zip(&w.e).map(|(&a, &b)| a as u64 * b).sum();
    q(s as i64, w.d as i64)
}

/// Whether every monomial of `f` is invariant under the diagonal element `w`.
pub fn is_invariant(f: &Polynomial, w: &WeightVector) -> bool {
    f.terms().all(|(m, _)| monomial_t_weight(&m.exponents, w).is_integer())
}

/// Applies `x_i ↦ t^{e_i/d} x_i`.
pub fn twist_poly(f: &Polynomial, w: &WeightVector) -> Result<Polynomial> {
    if f.dim() != w.dim() {
        return Err(Error::DimensionMismatch(format!(
            "polynomial in {} variables, weights of length {}",
            f.dim(),
            w.dim()
        )));
    }
    let mut out = Polynomial::zero(f.dim());
    for (m, c) in f.terms() {
        let weight = monomial_t_weight(&m.exponents, w);
        if !weight.is_integer() {
            return Err(Error::NotInvariant { monomial: m.to_string() });
        }
        let shift: u32 = weight.to_integer().try_into().expect("t-weight fits in u32");
        out.add_term(Monomial::new(m.exponents.clone(), m.t_power + shift), c.clone());
    }
    Ok(out)
}

/// The twisted complete intersection `Spec k[t][x]/(λ(f_1), …, λ(f_c))`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedScheme {
    pub gamma: WeightVector,
    pub generators: Vec<Polynomial>,
    pub ambient_dim: usize,
    pub codim: usize,
    pub rel_dim: usize,
}

/// Twists each equation by `w`. Generators sharing a factor of `t` are kept as they are.
pub fn build_twisted_scheme(f_list: &[Polynomial], w: &WeightVector) -> Result<TwistedScheme> {
    let n = w.dim();
    if f_list.len() > n {
        return Err(Error::InvalidInput(format!("{} equations in {n} variables", f_list.len())));
    }
    let mut generators = Vec::with_capacity(f_list.len());
    for (i, f) in f_list.iter().enumerate() {
        if f.has_t() {
            return Err(Error::InvalidInput(format!("equation {} already involves t", i + 1)));
        }
        if !f.constant_term().is_zero() {
            return Err(Error::NotAtOrigin { index: i + 1 });
        }
        generators.push(twist_poly(f, w)?);
    }
    Ok(TwistedScheme {
        gamma: w.clone(),
        generators,
        ambient_dim: n,
        codim: f_list.len(),
        rel_dim: n - f_list.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: u64, e: &[u64]) -> WeightVector {
        WeightVector::new(d, e.to_vec()).unwrap()
    }

    #[test]
    fn t_weights() {
        assert_eq!(monomial_t_weight(&[3, 0, 0], &w(3, &[0, 1, 2])), q(0, 1));
        assert_eq!(monomial_t_weight(&[0, 3, 0], &w(3, &[0, 1, 2])), q(1, 1));
        assert_eq!(monomial_t_weight(&[1, 1], &w(2, &[1, 1])), q(1, 1));
    }

    #[test]
    fn invariance() {
        let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3).unwrap();
        assert!(is_invariant(&cubic, &w(3, &[0, 1, 2])));
        assert!(!is_invariant(&Polynomial::parse("x2", 3).unwrap(), &w(3, &[0, 1, 2])));
        assert!(is_invariant(&Polynomial::parse("x2 + 5*x1*x3", 3).unwrap(), &WeightVector::identity(3)));
    }

    #[test]
    fn twisting_examples() {
        let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3).unwrap();
        let twisted = twist_poly(&cubic, &w(3, &[0, 1, 2])).unwrap();
        assert_eq!(twisted.to_string(), "x1^3 + t*x2^3 + t^2*x3^3");
        assert_eq!(twist_poly(&cubic, &WeightVector::identity(3)).unwrap(), cubic);
        let xy = Polynomial::parse("x1*x2", 2).unwrap();
        assert_eq!(twist_poly(&xy, &w(2, &[1, 1])).unwrap().to_string(), "t*x1*x2");
        let err = twist_poly(&Polynomial::parse("x2", 3).unwrap(), &w(3, &[0, 1, 2])).unwrap_err();
        assert!(matches!(err, Error::NotInvariant { .. }));
    }

    #[test]
    fn twisted_schemes() {
        let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3).unwrap();
        let s = build_twisted_scheme(&[cubic], &w(3, &[0, 1, 2])).unwrap();
        assert_eq!(s.rel_dim, 2);
        assert_eq!(s.generators[0].to_string(), "x1^3 + t*x2^3 + t^2*x3^3");

        let s = build_twisted_scheme(&[Polynomial::parse("x1", 2).unwrap()], &WeightVector::identity(2)).unwrap();
        assert_eq!(s.rel_dim, 1);
        assert_eq!(s.generators[0].to_string(), "x1");

        let quad = Polynomial::parse("x1^2 + x2^2 + x3^2", 3).unwrap();
        let s = build_twisted_scheme(&[quad], &w(2, &[1, 1, 1])).unwrap();
        assert_eq!(s.generators[0].to_string(), "t*x1^2 + t*x2^2 + t*x3^2");
        assert_eq!(s.rel_dim, 2);

        let err = build_twisted_scheme(&[Polynomial::parse("1 + x1", 2).unwrap()], &WeightVector::identity(2));
        assert_eq!(err.unwrap_err(), Error::NotAtOrigin { index: 1 });
    }

    #[test]
    fn parser_forms() {
        let p = Polynomial::parse("2/3*x2*x3 - x1^2 + 1/2", 3).unwrap();
        assert_eq!(p.to_string(), "-x1^2 + 2/3*x2*x3 + 1/2");
        assert_eq!(p.constant_term(), q(1, 2));
        assert!(Polynomial::parse("x4", 3).is_err());
        assert!(Polynomial::parse("1.5*x1", 3).is_err());
        assert!(Polynomial::parse("", 3).is_err());
        let p = Polynomial::parse("x1*x1 - x1^2", 1).unwrap();
        assert!(p.is_zero());
    }
}
