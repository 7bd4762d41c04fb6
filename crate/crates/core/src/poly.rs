//! Multivariate polynomials over an exact field: a finite map from
//! monomials to nonzero scalars. Terms are kept in a BTreeMap whose key
//! order is pure lex, so iterating in reverse yields the canonical
//! descending-LexTop serialization.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    n: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(field: &F, m: Monomial, c: F::Elem) -> Self {
        let n = m.nvars();
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn constant(field: &F, n: usize, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(n), c)
    }

    pub fn variable(field: &F, n: usize, i: usize) -> Self {
        Self::term(field, Monomial::variable(n, i), field.one())
    }

    pub fn from_terms<I>(field: &F, n: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in iter {
            assert_eq!(m.nvars(), n, "term with wrong variable count");
            p.add_term(field, m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.get(m)
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// True when the polynomial is a single scalar-times-monomial term.
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    fn add_term(&mut self, field: &F, m: Monomial, c: F::Elem) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = field.add(&old, &c);
                if !field.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(field, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, field: &F) -> Self {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        if field.is_zero(c) {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Polynomial::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(field, u.mul(v), field.mul(a, b));
            }
        }
        out
    }

    pub fn pow(&self, field: &F, e: u32) -> Self {
        let mut out = Polynomial::constant(field, self.n, field.one());
        for _ in 0..e {
            out = out.mul(field, self);
        }
        out
    }

    /// Leading term under `ord` (largest monomial).
    pub fn leading(&self, ord: &TermOrder) -> Option<(&Monomial, &F::Elem)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp_unchecked(a, b))
    }

    /// Canonical deterministic rendering: terms descending in LexTop.
    pub fn canonical_string(&self, field: &F) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let one = field.one();
        let minus_one = field.neg(&one);
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = field.characteristic() == 0 && {
                // detect sign through the formatted representation
                field.fmt_elem(c).starts_with('-')
            };
            let (sep, shown): (&str, F::Elem) = if idx == 0 {
                ("", c.clone())
            } else if neg {
                (" - ", field.neg(c))
            } else {
                (" + ", c.clone())
            };
            out.push_str(sep);
            let coeff_is_unit = shown == one;
            let coeff_is_neg_unit = idx == 0 && shown == minus_one && field.characteristic() == 0;
            if m.is_one() {
                out.push_str(&field.fmt_elem(&shown));
            } else if coeff_is_unit {
                out.push_str(&m.to_string());
            } else if coeff_is_neg_unit {
                out.push('-');
                out.push_str(&m.to_string());
            } else {
                out.push_str(&field.fmt_elem(&shown));
                out.push('*');
                out.push_str(&m.to_string());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q() -> Rationals {
        Rationals
    }

    fn x(i: usize) -> Polynomial<Rationals> {
        Polynomial::variable(&q(), 2, i)
    }

    #[test]
    fn arithmetic_basics() {
        let f = x(1).add(&q(), &x(2));
        let g = x(1).sub(&q(), &x(2));
        let prod = f.mul(&q(), &g);
        // (x1+x2)(x1-x2) = x1^2 - x2^2
        assert_eq!(prod.num_terms(), 2);
        assert_eq!(
            prod.coefficient(&Monomial::new(vec![2, 0])),
            Some(&q().one())
        );
        assert_eq!(
            prod.coefficient(&Monomial::new(vec![0, 2])),
            Some(&q().neg(&q().one()))
        );
        assert!(f.sub(&q(), &f).is_zero());
    }

    #[test]
    fn homogeneity() {
        let f = x(1).mul(&q(), &x(2));
        assert_eq!(f.homogeneous_degree(), Some(2));
        let g = f.add(&q(), &x(1));
        assert!(!g.is_homogeneous());
        assert!(Polynomial::<Rationals>::zero(2).is_homogeneous());
    }

    #[test]
    fn canonical_rendering() {
        let two = q().from_i64(2);
        let f = x(1)
            .pow(&q(), 2)
            .sub(&q(), &x(2).pow(&q(), 2).scale(&q(), &two));
        assert_eq!(f.canonical_string(&q()), "x1^2 - 2*x2^2");
        assert_eq!(Polynomial::<Rationals>::zero(2).canonical_string(&q()), "0");
    }

    #[test]
    fn pow_expands() {
        let f = x(1).add(&q(), &x(2));
        let cube = f.pow(&q(), 3);
        assert_eq!(cube.num_terms(), 4);
        assert_eq!(
            cube.coefficient(&Monomial::new(vec![2, 1])),
            Some(&q().from_i64(3))
        );
    }
}
