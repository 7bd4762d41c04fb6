//! Term orders: lex with x1 > ... > xn, its opposite with xn > ... > x1,
//! degree-reverse-lex, and weight orders refined by an explicit tiebreak.
//!
//! All four are total and multiplicative on each degree. Pure lex flavors
//! compare exponent vectors directly across degrees; RevLexTop and Weight
//! compare total degree first.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    /// Lexicographic, induced by x1 > x2 > ... > xn.
    LexTop,
    /// Lexicographic, induced by xn > ... > x1 (the opposite lex order).
    OppositeLex,
    /// Degree-reverse-lexicographic with x1 > ... > xn.
    RevLexTop,
    /// Weight order: degree, then w-weight, then the tiebreak order.
    Weight {
        weights: Vec<u64>,
        tiebreak: Box<TermOrder>,
    },
}

impl TermOrder {
    pub fn weight(weights: Vec<u64>, tiebreak: TermOrder) -> Self {
        TermOrder::Weight {
            weights,
            tiebreak: Box::new(tiebreak),
        }
    }

    /// Compare two monomials, checking variable counts.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.nvars() != v.nvars() {
            return Err(Error::DimensionMismatch {
                left: u.nvars(),
                right: v.nvars(),
            });
        }
        if let TermOrder::Weight { weights, .. } = self {
            if weights.len() != u.nvars() {
                return Err(Error::DimensionMismatch {
                    left: weights.len(),
                    right: u.nvars(),
                });
            }
        }
        Ok(self.cmp_unchecked(u, v))
    }

    pub(crate) fn cmp_unchecked(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self {
            TermOrder::LexTop => u.exponents().cmp(v.exponents()),
            TermOrder::OppositeLex => {
                for (a, b) in u.exponents().iter().rev().zip(v.exponents().iter().rev()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TermOrder::RevLexTop => match u.degree().cmp(&v.degree()) {
                Ordering::Equal => {
                    for (a, b) in u.exponents().iter().rev().zip(v.exponents().iter().rev()) {
                        // the one with the smaller trailing exponent is larger
                        match b.cmp(a) {
                            Ordering::Equal => continue,
                            other => return other,
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            },
            TermOrder::Weight { weights, tiebreak } => match u.degree().cmp(&v.degree()) {
                Ordering::Equal => match u.weight(weights).cmp(&v.weight(weights)) {
                    Ordering::Equal => tiebreak.cmp_unchecked(u, v),
                    other => other,
                },
                other => other,
            },
        }
    }

    /// Whether variables are oriented x1 > ... > xn (`true`) or the mirror
    /// (`false`); determines which Borel flavor a generic initial ideal
    /// satisfies. Weight orders defer to their tiebreak.
    pub fn standard_orientation(&self) -> bool {
        match self {
            TermOrder::LexTop | TermOrder::RevLexTop => true,
            TermOrder::OppositeLex => false,
            TermOrder::Weight { tiebreak, .. } => tiebreak.standard_orientation(),
        }
    }
}

/// Spec-level entry point; same as [`TermOrder::cmp`].
pub fn monomial_cmp(u: &Monomial, v: &Monomial, ord: &TermOrder) -> Result<Ordering> {
    ord.cmp(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_and_opposite() {
        let x1x2 = m(&[1, 1]);
        let x2sq = m(&[0, 2]);
        assert_eq!(
            monomial_cmp(&x1x2, &x2sq, &TermOrder::LexTop).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            monomial_cmp(&x1x2, &x2sq, &TermOrder::OppositeLex).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn revlex_within_degree() {
        // degree 2 in 2 vars, descending: x1^2 > x1x2 > x2^2
        let ord = TermOrder::RevLexTop;
        assert_eq!(
            ord.cmp(&m(&[2, 0]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&m(&[1, 1]), &m(&[0, 2])).unwrap(),
            Ordering::Greater
        );
        // graded: degree dominates
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn weight_with_tiebreak() {
        let ord = TermOrder::weight(vec![2, 1], TermOrder::LexTop);
        // same degree: weight decides
        assert_eq!(
            ord.cmp(&m(&[2, 0]), &m(&[0, 2])).unwrap(),
            Ordering::Greater
        );
        // weight ties within a degree fall through to lex
        let ord = TermOrder::weight(vec![1, 1], TermOrder::LexTop);
        assert_eq!(
            ord.cmp(&m(&[2, 0]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let e = monomial_cmp(&m(&[1]), &m(&[1, 0]), &TermOrder::LexTop);
        assert!(matches!(e, Err(Error::DimensionMismatch { .. })));
        let w = TermOrder::weight(vec![1], TermOrder::LexTop);
        assert!(w.cmp(&m(&[1, 0]), &m(&[0, 1])).is_err());
    }
}
