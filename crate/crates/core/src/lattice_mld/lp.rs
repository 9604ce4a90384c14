//! Exact rational two-phase simplex for small linear programs
//! `min c·x` subject to linear constraints and `x ≥ 0`. Bland's rule
//! guarantees termination.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, x: Vec<Q> },
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Lp {
    rows: Vec<(Vec<Q>, Sense, Q)>,
    pub c: Vec<Q>,
}

impl Lp {
    pub fn new(nvars: usize) -> Self {
        Lp { rows: Vec::new(), c: vec![Q::zero(); nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.c.len()
    }

    /// `row · x ≤ rhs`.
    pub fn add_le(&mut self, row: Vec<Q>, rhs: Q) {
        self.push(row, Sense::Le, rhs);
    }

    /// `row · x ≥ rhs`.
    pub fn add_ge(&mut self, row: Vec<Q>, rhs: Q) {
        self.push(row, Sense::Ge, rhs);
    }

    /// `row · x = rhs`.
    pub fn add_eq(&mut self, row: Vec<Q>, rhs: Q) {
        self.push(row, Sense::Eq, rhs);
    }

    fn push(&mut self, row: Vec<Q>, sense: Sense, rhs: Q) {
        assert_eq!(row.len(), self.nvars(), "constraint width does not match the variable count");
        if rhs.is_negative() {
            let flipped = match sense {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
            self.rows.push((row.into_iter().map(|x| -x).collect(), flipped, -rhs));
        } else {
            self.rows.push((row, sense, rhs));
        }
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.nvars();
        let m = self.rows.len();
        let n_slack = self.rows.iter().filter(|r| r.1 != Sense::Eq).count();
        let n_art = self.rows.iter().filter(|r| r.1 != Sense::Le).count();
        let width = n + n_slack + n_art;
        let art_start = n + n_slack;

        let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut slack, mut art) = (n, art_start);
        for (row, sense, rhs) in &self.rows {
            let mut r = row.clone();
            r.resize(width + 1, Q::zero());
            match sense {
                Sense::Le => {
                    r[slack] = Q::one();
                    basis.push(slack);
                    slack += 1;
                }
                Sense::Ge => {
                    r[slack] = -Q::one();
                    slack += 1;
                    r[art] = Q::one();
                    basis.push(art);
                    art += 1;
                }
                Sense::Eq => {
                    r[art] = Q::one();
                    basis.push(art);
                    art += 1;
                }
            }
            r[width] = rhs.clone();
            t.push(r);
        }

        if n_art > 0 {
            // Phase one: minimize the sum of artificial variables.
            let mut cost = vec![Q::zero(); width + 1];
            for j in art_start..width {
                cost[j] = Q::one();
            }
            for (i, &b) in basis.iter().enumerate() {
                if b >= art_start {
                    for (c, x) in cost.iter_mut().zip(&t[i]) {
                        *c -= x;
                    }
                }
            }
            if !run_simplex(&mut t, &mut cost, &mut basis, width) {
                unreachable!("phase one is bounded below by zero");
            }
            if cost[width].is_negative() {
                return LpOutcome::Infeasible;
            }
            // Drive remaining artificial variables out of the basis.
            let mut i = 0;
            while i < t.len() {
                if basis[i] >= art_start {
                    match (0..art_start).find(|&j| !t[i][j].is_zero()) {
                        Some(j) => {
                            pivot(&mut t, &mut cost, i, j);
                            basis[i] = j;
                            i += 1;
                        }
                        None => {
                            t.remove(i);
                            basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
            for r in t.iter_mut() {
                r[art_start..width].iter_mut().for_each(|x| *x = Q::zero());
            }
        }

        let mut cost = vec![Q::zero(); width + 1];
        cost[..n].clone_from_slice(&self.c);
        for (i, &b) in basis.iter().enumerate() {
            if !cost[b].is_zero() {
                let f = cost[b].clone();
                for (c, x) in cost.iter_mut().zip(&t[i]) {
                    *c -= &f * x;
                }
            }
        }
        if !run_simplex(&mut t, &mut cost, &mut basis, art_start) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Q::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                x[b] = t[i][width].clone();
            }
        }
        LpOutcome::Optimal { value: -cost[width].clone(), x }
    }
}

/// Runs Bland's rule over columns `0..allowed`; `false` when unbounded.
fn run_simplex(t: &mut [Vec<Q>], cost: &mut [Q], basis: &mut [usize], allowed: usize) -> bool {
    let rhs = cost.len() - 1;
    loop {
        let Some(enter) = (0..allowed).find(|&j| cost[j].is_negative()) else { return true };
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Q> = None;
        for i in 0..t.len() {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &best_ratio {
                    None => true,
                    Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(row) = leave else { return false };
        pivot(t, cost, row, enter);
        basis[row] = enter;
    }
}

fn pivot(t: &mut [Vec<Q>], cost: &mut [Q], row: usize, col: usize) {
    let p = t[row][col].clone();
    if !p.is_one() {
        for v in t[row].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &p;
            }
        }
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn small_programs() {
        // min -x - y s.t. x + 2y <= 4, 3x + y <= 6.
        let mut lp = Lp::new(2);
        lp.c = vec![qi(-1), qi(-1)];
        lp.add_le(vec![qi(1), qi(2)], qi(4));
        lp.add_le(vec![qi(3), qi(1)], qi(6));
        match lp.solve() {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, q(-14, 5));
                assert_eq!(x, vec![q(8, 5), q(6, 5)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut lp = Lp::new(2);
        lp.c = vec![qi(-1), qi(0)];
        lp.add_le(vec![qi(0), qi(1)], qi(1));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn two_phase_programs() {
        // min x + y s.t. x + y >= 2, x - y = 1.
        let mut lp = Lp::new(2);
        lp.c = vec![qi(1), qi(1)];
        lp.add_ge(vec![qi(1), qi(1)], qi(2));
        lp.add_eq(vec![qi(1), qi(-1)], qi(1));
        match lp.solve() {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, qi(2));
                assert_eq!(x, vec![q(3, 2), q(1, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut lp = Lp::new(1);
        lp.add_ge(vec![qi(1)], qi(2));
        lp.add_le(vec![qi(1)], qi(1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }
}
