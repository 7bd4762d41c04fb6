//! Invertible linear changes of coordinates. The matrix (a_ij) acts by
//! x_i -> sum_j a_ji x_j, i.e. column i holds the image of x_i.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
pub struct ChangeOfCoordinates<F: Field> {
    n: usize,
    entries: Vec<Vec<F::Elem>>,
}

impl<F: Field> ChangeOfCoordinates<F> {
    /// Build from a square matrix; fails on singular input.
    pub fn new(field: &F, entries: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTransform("matrix is not square".into()));
        }
        let rank = field.echelonize(entries.clone()).rank;
        if rank != n {
            return Err(Error::SingularTransform);
        }
        Ok(ChangeOfCoordinates { n, entries })
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        ChangeOfCoordinates { n, entries }
    }

    /// D_{λ,w}: the diagonal transform x_i -> λ^{-w_i} x_i.
    pub fn diagonal(field: &F, lambda: &F::Elem, w: &[u64]) -> Result<Self> {
        let n = w.len();
        let inv = field
            .inv(lambda)
            .ok_or_else(|| Error::InvalidTransform("λ must be nonzero".into()))?;
        let mut entries = vec![vec![field.zero(); n]; n];
        for (i, &wi) in w.iter().enumerate() {
            let mut v = field.one();
            for _ in 0..wi {
                v = field.mul(&v, &inv);
            }
            entries[i][i] = v;
        }
        Ok(ChangeOfCoordinates { n, entries })
    }

    /// The involution op: x_i -> x_{n+1-i}.
    pub fn op_involution(field: &F, n: usize) -> Self {
        let mut entries = vec![vec![field.zero(); n]; n];
        for i in 0..n {
            entries[n - 1 - i][i] = field.one();
        }
        ChangeOfCoordinates { n, entries }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<F::Elem>] {
        &self.entries
    }

    /// Image of x_i (1-based) as a linear form.
    pub fn image_of_variable(&self, field: &F, i: usize) -> Polynomial<F> {
        let mut out = Polynomial::zero(self.n);
        for j in 0..self.n {
            let c = &self.entries[j][i - 1];
            if !field.is_zero(c) {
                let t = Polynomial::variable(field, self.n, j + 1).scale(field, c);
                out = out.add(field, &t);
            }
        }
        out
    }

    /// Ring-map image of a polynomial: substitute each variable by its
    /// image linear form and expand. Degree-preserving.
    pub fn apply(&self, field: &F, f: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(f.nvars(), self.n, "variable count mismatch");
        let images: Vec<Polynomial<F>> = (1..=self.n)
            .map(|i| self.image_of_variable(field, i))
            .collect();
        let mut out = Polynomial::zero(self.n);
        for (m, c) in f.terms() {
            let mut term = Polynomial::constant(field, self.n, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(field, &images[i].pow(field, e));
                }
            }
            out = out.add(field, &term);
        }
        out
    }

    pub fn apply_all(&self, field: &F, gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        gens.iter().map(|g| self.apply(field, g)).collect()
    }

    /// Matrix of the composite transform `self ∘ other`
    /// (apply `other` first): entry-wise product self.entries * other.entries.
    pub fn compose(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![vec![field.zero(); n]; n];
        #[allow(clippy::needless_range_loop)]
        for k in 0..n {
            for i in 0..n {
                let mut acc = field.zero();
                for j in 0..n {
                    let t = field.mul(&self.entries[k][j], &other.entries[j][i]);
                    acc = field.add(&acc, &t);
                }
                entries[k][i] = acc;
            }
        }
        ChangeOfCoordinates { n, entries }
    }
}
