//! Exact-arithmetic kernel for experiments on Hilbert functions of general
//! intersections, products and Tor modules of graded ideals.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals or a
//! prime field, there is no floating point anywhere. All values are immutable
//! after construction and safe to share across threads; with the default
//! `parallel` feature the per-degree and per-trial loops run on rayon.

pub mod coords;
pub mod error;
pub mod field;
pub mod generic;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod par;
pub mod poly;
pub mod resolution;
pub mod tor;

pub use coords::ChangeOfCoordinates;
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use generic::{Direction, GeneralStatistic, GenericityProtocol, GinCertificate};
pub use groebner::{FreeModuleElement, GroebnerBasis};
pub use ideal::{LexFlavor, MonomialIdeal};
pub use linalg::{GradedPiece, HilbertTable};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::Polynomial;
pub use resolution::{FreeResolution, Provenance};
pub use tor::{ResolutionChoice, TorTable};

/// Binomial coefficient as `usize`; desk-scale inputs only.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: usize) -> usize {
    binomial(n + d - 1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(monomial_count(3, 3), 10);
        assert_eq!(monomial_count(2, 2), 3);
    }
}
