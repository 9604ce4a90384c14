use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

/// Largest number of ring variables supported by the dense exponent layout.
pub const MAX_VARS: usize = 48;

/// A monomial stored as a dense exponent array, with its total degree and a
/// bitmask of the variables that occur.
#[derive(Clone, Copy)]
pub struct Mono {
    exps: [u16; MAX_VARS],
    deg: u32,
    mask: u64,
}

impl Mono {
    pub fn one() -> Self {
        Mono { exps: [0; MAX_VARS], deg: 0, mask: 0 }
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        assert!(e.len() <= MAX_VARS, "too many variables for a monomial");
        let mut m = Mono::one();
        for (i, &k) in e.iter().enumerate() {
            m.set(i, k);
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Mono::one();
        m.set(i, 1);
        m
    }

    pub fn get(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn set(&mut self, i: usize, k: u32) {
        let k: u16 = k.try_into().expect("exponent exceeds u16");
        self.deg = self.deg - self.exps[i] as u32 + k as u32;
        self.exps[i] = k;
        if k == 0 {
            self.mask &= !(1 << i);
        } else {
            self.mask |= 1 << i;
        }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&k| k as u32).collect()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out.mask |= other.mask;
        out
    }

    pub fn divides(&self, other: &Mono) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        let mut bits = self.mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            if self.exps[i] > other.exps[i] {
                return false;
            }
            bits &= bits - 1;
        }
        true
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        out.mask = 0;
        for i in 0..MAX_VARS {
            if out.exps[i] != 0 {
                out.mask |= 1 << i;
            }
        }
        out
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut out = Mono::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out.mask = self.mask | other.mask;
        out
    }

    /// No variable in common.
    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.mask & other.mask == 0
    }
}

impl PartialEq for Mono {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.exps == other.exps
    }
}

impl Eq for Mono {}

impl Hash for Mono {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..MAX_VARS)
            .filter(|&i| self.exps[i] > 0)
            .map(|i| if self.exps[i] == 1 { format!("y{i}") } else { format!("y{i}^{}", self.exps[i]) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Admissible monomial orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `y_0 > y_1 > …`.
    GrevLex,
    /// Lexicographic with `y_0 > y_1 > …`.
    Lex,
    /// Consecutive blocks of the given sizes, compared block by block, each
    /// block by graded reverse lexicographic order. Variables past the last
    /// block form one extra block.
    Block(Vec<usize>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a, b, 0, MAX_VARS),
            MonomialOrder::Lex => {
                for i in 0..MAX_VARS {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(sizes) => {
                let mut start = 0;
                for &s in sizes {
                    match grevlex(a, b, start, start + s) {
                        Ordering::Equal => start += s,
                        o => return o,
                    }
                }
                grevlex(a, b, start, MAX_VARS)
            }
        }
    }
}

fn grevlex(a: &Mono, b: &Mono, lo: usize, hi: usize) -> Ordering {
    let (da, db) = if lo == 0 && hi == MAX_VARS {
        (a.deg, b.deg)
    } else {
        (
            a.exps[lo..hi].iter().map(|&k| k as u32).sum(),
            b.exps[lo..hi].iter().map(|&k| k as u32).sum(),
        )
    };
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::from_exponents(e)
    }

    #[test]
    fn orders_on_small_examples() {
        // y0*y2 vs y1^2: same degree, grevlex compares the last variable.
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
        let block = MonomialOrder::Block(vec![1, 2]);
        assert_eq!(block.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(block.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert!(!m(&[1, 0, 2]).divides(&m(&[0, 1, 2])));
        assert_eq!(m(&[1, 0, 2]).lcm(&m(&[0, 3, 1])), m(&[1, 3, 2]));
        assert_eq!(m(&[1, 0, 2]).quotient_of(&m(&[2, 1, 2])), m(&[1, 1, 0]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }
}
