//! Exact coefficient fields: the rationals with arbitrary-precision
//! normalized fractions, and prime fields F_p.
//!
//! Operations take the field as an explicit context argument so the same
//! generic code serves both. The prime fields exist solely to reproduce the
//! characteristic-p counterexample; reports built on them carry a caveat.

use crate::error::{Error, Result};
use crate::linalg::{bareiss_rref, gauss_jordan, Echelon};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::fmt;

/// Runtime description of a coefficient field, as read from an ideal file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "F{}", p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field of scalars. Elements carry no field reference; every
/// operation takes the field as context.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Build an element from an integer fraction, e.g. parsed coefficients.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String;

    /// Uniform random element with the protocol's height bound
    /// (numerator in [-height, height] over the rationals, full range mod p).
    fn random_elem<R: Rng>(&self, rng: &mut R, height: u64) -> Self::Elem;

    /// Reduced row echelon form of the row span. The default is ordinary
    /// Gauss-Jordan elimination; the rationals override it with a
    /// fraction-free Bareiss pass to control coefficient growth.
    fn echelonize(&self, rows: Vec<Vec<Self::Elem>>) -> Echelon<Self::Elem> {
        gauss_jordan(self, rows)
    }

    /// Rescale a coefficient vector to a canonical representative of its
    /// projective class: primitive integer vector with positive leading
    /// entry over the rationals, monic over F_p. Keeps Groebner reductions
    /// from accumulating huge fractions.
    fn normalize_coeffs(&self, coeffs: &mut [Self::Elem]);
}

/// The field of rational numbers; fractions are always normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Input("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn random_elem<R: Rng>(&self, rng: &mut R, height: u64) -> BigRational {
        let h = height as i64;
        BigRational::from_integer(BigInt::from(rng.gen_range(-h..=h)))
    }

    fn echelonize(&self, rows: Vec<Vec<BigRational>>) -> Echelon<BigRational> {
        bareiss_rref(rows)
    }

    fn normalize_coeffs(&self, coeffs: &mut [BigRational]) {
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            if !c.is_zero() {
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let mut num_gcd = BigInt::zero();
        let scaled: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        for v in &scaled {
            num_gcd = num_gcd.gcd(v);
        }
        if num_gcd.is_zero() {
            return;
        }
        let sign = scaled
            .iter()
            .find(|v| !v.is_zero())
            .map(|v| if v.is_negative() { -1 } else { 1 })
            .unwrap_or(1);
        let num_gcd = num_gcd * BigInt::from(sign);
        for (c, v) in coeffs.iter_mut().zip(scaled) {
            *c = BigRational::from_integer(v / &num_gcd);
        }
    }
}

/// The prime field F_p with elements represented by 0..p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let p = BigInt::from(self.p);
        let n = ((num % &p) + &p) % &p;
        let d = ((den % &p) + &p) % &p;
        let n: u64 = n.try_into().expect("reduced residue fits u64");
        let d: u64 = d.try_into().expect("reduced residue fits u64");
        let di = self.inv(&d).ok_or(Error::ZeroDenominator { p: self.p })?;
        Ok(self.mul(&n, &di))
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn random_elem<R: Rng>(&self, rng: &mut R, _height: u64) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn normalize_coeffs(&self, coeffs: &mut [u64]) {
        let lead = match coeffs.iter().find(|c| **c != 0) {
            Some(c) => *c,
            None => return,
        };
        let inv = self.inv(&lead).expect("nonzero lead");
        for c in coeffs.iter_mut() {
            *c = self.mul(c, &inv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(101).is_ok());
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(PrimeField::new(6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn fp_inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert!(f.inv(&0).is_none());
    }

    #[test]
    fn fp_from_ratio_rejects_p_denominator() {
        let f = PrimeField::new(3).unwrap();
        let err = f.from_ratio(&BigInt::from(1), &BigInt::from(6));
        assert!(matches!(err, Err(Error::ZeroDenominator { p: 3 })));
        let ok = f.from_ratio(&BigInt::from(-1), &BigInt::from(2)).unwrap();
        // -1/2 = 2 * 2 = 4 = 1 mod 3
        assert_eq!(ok, 1);
    }

    #[test]
    fn rational_normalize_primitive() {
        let q = Rationals;
        let mut v = vec![
            BigRational::new(BigInt::from(-2), BigInt::from(3)),
            BigRational::new(BigInt::from(4), BigInt::from(9)),
        ];
        q.normalize_coeffs(&mut v);
        // common scale: (-2/3, 4/9) -> (-6, 4)/9 -> primitive (-3, 2) -> lead positive (3, -2)
        assert_eq!(v[0], BigRational::from_integer(BigInt::from(3)));
        assert_eq!(v[1], BigRational::from_integer(BigInt::from(-2)));
    }
}
