//! Exact polynomial arithmetic over the rationals: monomial orders,
//! Buchberger Gröbner bases, ideal membership, saturation and Krull dimension.

pub mod cache;
mod dimension;
mod groebner;
mod monomial;
mod poly;

pub use dimension::{dimension_from_basis, min_hitting_set};
pub use groebner::{buchberger, reduce_basis};
pub use monomial::{Mono, MonomialOrder, MAX_VARS};
pub use poly::Poly;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Default cap on S-polynomial reductions per basis computation.
pub const DEFAULT_GROEBNER_BUDGET: usize = 50_000;

/// An ideal of `Q[y_0, …, y_{nvars-1}]` with an optional reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Poly>,
    groebner: Option<Vec<Poly>>,
}

impl IdealBasis {
    pub fn new(nvars: usize, order: MonomialOrder, generators: Vec<Poly>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let mut g = g.resort(&order);
                g.make_primitive();
                g
            })
            .collect();
        Ok(IdealBasis { nvars, order, generators, groebner: None })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn groebner(&mut self, budget: usize) -> Result<&[Poly]> {
        if self.groebner.is_none() {
            self.groebner = Some(cached_groebner(self.nvars, &self.order, &self.generators, budget)?);
        }
        Ok(self.groebner.as_deref().unwrap())
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn dimension(&mut self, budget: usize) -> Result<i64> {
        let nvars = self.nvars;
        Ok(dimension_from_basis(self.groebner(budget)?, nvars))
    }

    pub fn is_unit(&mut self, budget: usize) -> Result<bool> {
        Ok(self.groebner(budget)?.iter().any(Poly::is_unit))
    }

    /// Ideal membership by normal form.
    pub fn contains(&mut self, f: &Poly, budget: usize) -> Result<bool> {
        let order = self.order.clone();
        let basis = self.groebner(budget)?;
        Ok(f.resort(&order).normal_form(basis, &order).is_zero())
    }

    /// `I : y_var^∞`, by adjoining `z`, adding `z·y_var − 1` and eliminating `z`.
    pub fn saturate_by_var(&self, var: usize, budget: usize) -> Result<IdealBasis> {
        if var >= self.nvars {
            return Err(Error::InvalidInput(format!("variable {var} outside the ring")));
        }
        if self.nvars + 1 > MAX_VARS {
            return Err(Error::TooManyVariables(self.nvars + 1));
        }
        let elim = MonomialOrder::Block(vec![1]);
        let shift: Vec<usize> = (1..=self.nvars).collect();
        let mut gens: Vec<Poly> = self.generators.iter().map(|g| g.rename(&shift, &elim)).collect();
        let mut z_var = Mono::var(0);
        z_var = z_var.mul(&Mono::var(var + 1));
        gens.push(Poly::from_terms(
            vec![(z_var, BigInt::from(1)), (Mono::one(), BigInt::from(-1))],
            &elim,
        ));
        let basis = cached_groebner(self.nvars + 1, &elim, &gens, budget)?;
        let mut unshift = vec![0; self.nvars + 1];
        for (i, u) in unshift.iter_mut().enumerate().skip(1) {
            *u = i - 1;
        }
        let kept: Vec<Poly> = basis
            .iter()
            .filter(|p| p.support_mask() & 1 == 0)
            .map(|p| p.rename(&unshift, &self.order))
            .collect();
        let mut out = IdealBasis::new(self.nvars, self.order.clone(), kept)?;
        if self.order == MonomialOrder::GrevLex {
            let mut g = out.generators.clone();
            g.sort_by(|a, b| self.order.cmp(a.lm(), b.lm()));
            out.groebner = Some(g);
        }
        Ok(out)
    }
}

/// Reduced Gröbner basis through the process-wide cache.
pub fn cached_groebner(nvars: usize, order: &MonomialOrder, generators: &[Poly], budget: usize) -> Result<Vec<Poly>> {
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    if !cache::is_enabled() {
        return Ok(buchberger(generators, order, budget)?.0);
    }
    let key = cache::key(nvars, order, generators);
    if let Some(hit) = cache::lookup(&key, order) {
        return Ok(hit);
    }
    let (basis, _) = buchberger(generators, order, budget)?;
    cache::store(key, &basis, nvars);
    Ok(basis)
}

/// Reduced Gröbner basis of `ideal` under its order.
pub fn groebner(ideal: &mut IdealBasis, budget: usize) -> Result<Vec<Poly>> {
    Ok(ideal.groebner(budget)?.to_vec())
}

/// Krull dimension of the quotient by `ideal`; `-1` for the unit ideal.
pub fn dimension(ideal: &mut IdealBasis, budget: usize) -> Result<i64> {
    ideal.dimension(budget)
}

/// `ideal : y_var^∞`.
pub fn saturate_by_var(ideal: &IdealBasis, var: usize, budget: usize) -> Result<IdealBasis> {
    ideal.saturate_by_var(var, budget)
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

    fn ideal(n: usize, gens: Vec<Poly>) -> IdealBasis {
        IdealBasis::new(n, MonomialOrder::GrevLex, gens).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(ideal(3, vec![]).dimension(100).unwrap(), 3);
        assert_eq!(ideal(2, vec![p(&[(&[1, 1], 1)])]).dimension(100).unwrap(), 1);
        assert_eq!(ideal(2, vec![Poly::one()]).dimension(100).unwrap(), -1);
    }

    #[test]
    fn saturation_examples() {
        let xy = ideal(2, vec![p(&[(&[1, 1], 1)])]);
        let sat = xy.saturate_by_var(0, 100).unwrap();
        assert_eq!(sat.generators(), &[p(&[(&[0, 1], 1)])]);

        let x2 = ideal(2, vec![p(&[(&[2, 0], 1)])]);
        let mut sat = x2.saturate_by_var(0, 100).unwrap();
        assert!(sat.is_unit(100).unwrap());

        let y = ideal(2, vec![p(&[(&[0, 1], 1)])]);
        assert_eq!(y.saturate_by_var(0, 100).unwrap().generators(), &[p(&[(&[0, 1], 1)])]);
    }

    #[test]
    fn membership() {
        let mut i = ideal(2, vec![p(&[(&[2, 0], 1), (&[0, 1], -1)]), p(&[(&[0, 2], 1), (&[1, 0], -1)])]);
        assert!(i.contains(&p(&[(&[4, 0], 1), (&[1, 0], -1)]), 100).unwrap());
        assert!(!i.contains(&p(&[(&[1, 0], 1)]), 100).unwrap());
    }
}
