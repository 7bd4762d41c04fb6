//! Monomials as exponent vectors; the combinatorial atom everything else
//! builds on. The derived `Ord` is the pure lexicographic order with
//! x1 > x2 > ... > xn, which doubles as the canonical serialization order.

use crate::order::TermOrder;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable x_i, 1-based.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when divisible.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Largest index (1-based) of a variable dividing `self`; `max 1 = 1`.
    pub fn maxvar(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .unwrap_or(1)
    }

    /// Smallest index (1-based) of a variable dividing `self`; `min 1 = n`.
    pub fn minvar(&self) -> usize {
        self.exps
            .iter()
            .position(|&e| e > 0)
            .map(|i| i + 1)
            .unwrap_or(self.nvars())
    }

    /// Dot product with a weight vector.
    pub fn weight(&self, w: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(w)
            .map(|(&e, &wi)| e as u64 * wi)
            .sum()
    }

    /// Exchange u*x_i/x_j; requires x_j | u.
    pub fn exchange(&self, i: usize, j: usize) -> Self {
        assert!(self.exps[j - 1] > 0, "x_{} does not divide", j);
        let mut exps = self.exps.clone();
        exps[j - 1] -= 1;
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// Image under the involution x_i -> x_{n+1-i}.
    pub fn mirror(&self) -> Self {
        let mut exps = self.exps.clone();
        exps.reverse();
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n` variables, strictly descending in
/// `ord`. Exactly `C(n+d-1, d)` of them.
pub fn enumerate_degree(n: usize, d: usize, ord: &TermOrder) -> Vec<Monomial> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(crate::monomial_count(n, d));
    let mut exps = vec![0u32; n];
    fill(&mut out, &mut exps, 0, d as u32);
    out.sort_by(|a, b| ord.cmp_unchecked(b, a));
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, rest: u32) {
    if var + 1 == exps.len() {
        exps[var] = rest;
        out.push(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    for e in (0..=rest).rev() {
        exps[var] = e;
        fill(out, exps, var + 1, rest - e);
        exps[var] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn maxvar_minvar_conventions() {
        assert_eq!(m(&[1, 0, 1]).maxvar(), 3);
        assert_eq!(m(&[1, 0, 1]).minvar(), 1);
        assert_eq!(m(&[0, 0, 0]).maxvar(), 1);
        assert_eq!(m(&[0, 0, 0]).minvar(), 3);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 2]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), m(&[2, 2]));
        assert_eq!(a.mul(&b), m(&[3, 3]));
        assert_eq!(a.mul(&b).try_div(&a).unwrap(), b);
        assert!(a.try_div(&b).is_none());
    }

    #[test]
    fn enumerate_lex_top() {
        let ms = enumerate_degree(2, 2, &TermOrder::LexTop);
        assert_eq!(ms, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let ms = enumerate_degree(3, 3, &TermOrder::LexTop);
        assert_eq!(ms.len(), 10);
        assert_eq!(
            &ms[..4],
            &[m(&[3, 0, 0]), m(&[2, 1, 0]), m(&[2, 0, 1]), m(&[1, 2, 0])]
        );
        let ms = enumerate_degree(3, 0, &TermOrder::RevLexTop);
        assert_eq!(ms, vec![Monomial::one(3)]);
    }

    #[test]
    fn enumerate_opposite_lex_degree_three() {
        // descending opposite-lex starts x3^3, x3^2*x2, x3^2*x1, x3*x2^2
        let ms = enumerate_degree(3, 3, &TermOrder::OppositeLex);
        assert_eq!(
            &ms[..4],
            &[m(&[0, 0, 3]), m(&[0, 1, 2]), m(&[1, 0, 2]), m(&[0, 2, 1])]
        );
    }

    #[test]
    fn display_round() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[0, 1]).to_string(), "x2");
    }
}
