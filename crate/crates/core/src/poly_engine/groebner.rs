use std::cmp::Ordering;

use super::monomial::{Mono, MonomialOrder};
use super::poly::Poly;
use crate::error::{Error, Result};

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

/// Buchberger's algorithm with the sugar selection strategy, top reduction
/// inside the loop, and the Gebauer–Möller installation of both criteria. Returns the reduced basis
/// (primitive, sorted by increasing leading monomial) and the number of
/// S-polynomial reductions performed. `budget` caps the reductions.
pub fn buchberger(generators: &[Poly], order: &MonomialOrder, budget: usize) -> Result<(Vec<Poly>, usize)> {
    let mut input: Vec<Poly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut g = g.resort(order);
            g.make_primitive();
            g
        })
        .collect();
    if input.iter().any(Poly::is_unit) {
        return Ok((vec![Poly::one()], 0));
    }
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.len().cmp(&b.len())));
    input.dedup();

    let mut polys: Vec<Poly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut reductions = 0usize;

    for g in input {
        let h = g.reduce_by(&active_basis(&polys, &active), order, false);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok((vec![Poly::one()], reductions));
        }
        let s = g.total_degree();
        update(&mut polys, &mut sugar, &mut active, &mut pairs, h, s);
    }

    while let Some(idx) = select_pair(&pairs, order) {
        let pair = pairs.swap_remove(idx);
        if reductions >= budget {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis computation stopped after {reductions} S-polynomial reductions"
            )));
        }
        reductions += 1;
        let s = Poly::s_poly(&polys[pair.i], &polys[pair.j], order);
        if s.is_zero() {
            continue;
        }
        let h = s.reduce_by(&active_basis(&polys, &active), order, false);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok((vec![Poly::one()], reductions));
        }
        update(&mut polys, &mut sugar, &mut active, &mut pairs, h, pair.sugar);
    }

    let basis: Vec<Poly> = polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    Ok((reduce_basis(basis, order), reductions))
}

fn active_basis<'a>(polys: &'a [Poly], active: &[bool]) -> Vec<&'a Poly> {
    polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
}

fn select_pair(pairs: &[Pair], order: &MonomialOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let c = p
                    .sugar
                    .cmp(&q.sugar)
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)));
                if c == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

/// Inserts `h` into the basis, pruning pairs with the product and chain criteria.
fn update(polys: &mut Vec<Poly>, sugar: &mut Vec<u32>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Poly, h_sugar: u32) {
    let hi = polys.len();
    let hlm = *h.lm();
    let candidates: Vec<(usize, Mono)> = (0..hi)
        .filter(|&g| active[g])
        .map(|g| (g, hlm.lcm(polys[g].lm())))
        .collect();

    let mut remaining: Vec<(usize, Mono)> = candidates;
    let mut chosen: Vec<(usize, Mono)> = Vec::new();
    while !remaining.is_empty() {
        let (g, l) = remaining.remove(0);
        let coprime = hlm.is_coprime(polys[g].lm());
        let dominated = remaining.iter().chain(&chosen).any(|(_, l2)| l2.divides(&l));
        if coprime || !dominated {
            chosen.push((g, l));
        }
    }
    let fresh = chosen
        .into_iter()
        .filter(|(g, _)| !hlm.is_coprime(polys[*g].lm()))
        .map(|(g, l)| {
            let s = (sugar[g] + l.degree() - polys[g].lm().degree()).max(h_sugar + l.degree() - hlm.degree());
            Pair { i: g, j: hi, lcm: l, sugar: s }
        })
        .collect::<Vec<_>>();

    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && hlm.lcm(polys[p.i].lm()) != p.lcm
            && hlm.lcm(polys[p.j].lm()) != p.lcm)
    });
    pairs.extend(fresh);

    for g in 0..hi {
        if active[g] && hlm.divides(polys[g].lm()) {
            active[g] = false;
        }
    }
    polys.push(h);
    sugar.push(h_sugar.max(hlm.degree()));
    active.push(true);
}

/// Minimalizes and interreduces a Gröbner basis.
pub fn reduce_basis(mut basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    if basis.iter().any(Poly::is_unit) {
        return vec![Poly::one()];
    }
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k2, _)| k2 != k)
            .map(|(_, p)| p.clone())
            .collect();
        // The leading term is irreducible, so only the tail changes.
        reduced.push(minimal[k].normal_form(&others, order));
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(
            terms.iter().map(|(e, c)| (Mono::from_exponents(e), BigInt::from(*c))).collect(),
            &MonomialOrder::GrevLex,
        )
    }

    #[test]
    fn small_bases() {
        let o = MonomialOrder::GrevLex;
        let (b, _) = buchberger(&[p(&[(&[1, 0], 1)])], &o, 100).unwrap();
        assert_eq!(b, vec![p(&[(&[1, 0], 1)])]);
        let (b, _) = buchberger(&[p(&[(&[0, 0], 3)])], &o, 100).unwrap();
        assert_eq!(b, vec![Poly::one()]);
        // x^2 - y, y^2 - x: x^4 - x is in the ideal.
        let gens = [p(&[(&[2, 0], 1), (&[0, 1], -1)]), p(&[(&[0, 2], 1), (&[1, 0], -1)])];
        let (b, _) = buchberger(&gens, &o, 100).unwrap();
        let f = p(&[(&[4, 0], 1), (&[1, 0], -1)]);
        assert!(f.normal_form(&b, &o).is_zero());
        assert!(!p(&[(&[1, 0], 1)]).normal_form(&b, &o).is_zero());
    }

    #[test]
    fn unit_detection() {
        let o = MonomialOrder::GrevLex;
        let gens = [p(&[(&[1, 0], 1)]), p(&[(&[1, 0], 1), (&[0, 0], 1)])];
        assert_eq!(buchberger(&gens, &o, 100).unwrap().0, vec![Poly::one()]);
    }
}
