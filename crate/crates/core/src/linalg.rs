//! Per-degree vector-space view of homogeneous ideals: graded pieces as
//! reduced row-echelon spans over the monomial basis, Hilbert function
//! values, and dimensions of sums, intersections and products.
//!
//! Rank over the rationals goes through fraction-free Bareiss elimination
//! on denominator-cleared rows; over F_p ordinary elimination is used.
//! Correctness never depends on a Groebner basis: pieces are spanned by
//! monomial multiples of the given generators.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{enumerate_degree, Monomial};
use crate::order::TermOrder;
use crate::par;
use crate::poly::Polynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Reduced row echelon data: `rank` nonzero rows and their pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<E> {
    pub rank: usize,
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

/// Ordinary exact Gauss-Jordan elimination; works over any [`Field`].
pub fn gauss_jordan<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> Echelon<F::Elem> {
    rows.retain(|r| r.iter().any(|e| !field.is_zero(e)));
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(&rows[r][col]).expect("nonzero pivot");
        for j in col..ncols {
            rows[r][j] = field.mul(&rows[r][j], &inv);
        }
        for i in 0..rows.len() {
            if i == r || field.is_zero(&rows[i][col]) {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..ncols {
                let t = field.mul(&factor, &rows[r][j]);
                rows[i][j] = field.sub(&rows[i][j], &t);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon {
        rank: r,
        rows,
        pivots,
    }
}

/// Fraction-free elimination for rational matrices: clear denominators
/// row-wise, run Bareiss two-step elimination over the integers, then
/// back-substitute the (small) triangular result into reduced form.
pub fn bareiss_rref(rows: Vec<Vec<BigRational>>) -> Echelon<BigRational> {
    let mut int_rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|e| !e.is_zero()))
        .map(|r| {
            let mut l = BigInt::one();
            for e in &r {
                if !e.is_zero() {
                    l = l.lcm(e.denom());
                }
            }
            r.into_iter().map(|e| e.numer() * (&l / e.denom())).collect()
        })
        .collect();
    let ncols = int_rows.first().map(|r| r.len()).unwrap_or(0);
    let nrows = int_rows.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !int_rows[i][col].is_zero()) else {
            continue;
        };
        int_rows.swap(r, pr);
        let pivot = int_rows[r][col].clone();
        for i in r + 1..nrows {
            // zero pivot-column entry and pivot == prev make the Bareiss
            // update the identity on this row
            if int_rows[i][col].is_zero() && pivot == prev {
                continue;
            }
            for j in col + 1..ncols {
                let num = &int_rows[i][j] * &pivot - &int_rows[i][col] * &int_rows[r][j];
                int_rows[i][j] = num / &prev;
            }
            int_rows[i][col] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    int_rows.truncate(r);
    // triangular integer echelon -> reduced rational echelon
    let mut rat: Vec<Vec<BigRational>> = int_rows
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for k in (0..r).rev() {
        let pc = pivots[k];
        let inv = rat[k][pc].recip();
        for j in pc..ncols {
            let v = &rat[k][j] * &inv;
            rat[k][j] = v;
        }
        for i in 0..k {
            if rat[i][pc].is_zero() {
                continue;
            }
            let factor = rat[i][pc].clone();
            for j in pc..ncols {
                let t = &factor * &rat[k][j];
                rat[i][j] = &rat[i][j] - t;
            }
        }
    }
    Echelon {
        rank: r,
        rows: rat,
        pivots,
    }
}

/// Hilbert function values H(0..=D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    values: Vec<usize>,
}

impl HilbertTable {
    pub fn new(values: Vec<usize>) -> Self {
        assert!(!values.is_empty());
        HilbertTable { values }
    }

    pub fn zero(dmax: usize) -> Self {
        HilbertTable {
            values: vec![0; dmax + 1],
        }
    }

    pub fn dmax(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, d: usize) -> usize {
        self.values[d]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Degree-`d` slice of an ideal: echelonized coordinate rows over the
/// descending-LexTop monomial basis.
#[derive(Debug, Clone)]
pub struct GradedPiece<F: Field> {
    pub degree: usize,
    pub nvars: usize,
    pub basis: Vec<Monomial>,
    pub echelon: Echelon<F::Elem>,
}

impl<F: Field> GradedPiece<F> {
    pub fn dim(&self) -> usize {
        self.echelon.rank
    }

    /// Reduce a coordinate row against the echelon; true iff it lies in
    /// the span.
    pub fn contains_row(&self, field: &F, mut row: Vec<F::Elem>) -> bool {
        for (r, &pc) in self.echelon.rows.iter().zip(&self.echelon.pivots) {
            if field.is_zero(&row[pc]) {
                continue;
            }
            let factor = row[pc].clone();
            for j in pc..row.len() {
                let t = field.mul(&factor, &r[j]);
                row[j] = field.sub(&row[j], &t);
            }
        }
        row.iter().all(|e| field.is_zero(e))
    }

    pub fn contains(&self, field: &F, f: &Polynomial<F>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if f.homogeneous_degree() != Some(self.degree) {
            return Ok(false);
        }
        let index = basis_index(&self.basis);
        let row = poly_row(field, f, &index, self.basis.len())?;
        Ok(self.contains_row(field, row))
    }
}

pub(crate) fn basis_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

pub(crate) fn poly_row<F: Field>(
    field: &F,
    f: &Polynomial<F>,
    index: &HashMap<Monomial, usize>,
    width: usize,
) -> Result<Vec<F::Elem>> {
    let mut row = vec![field.zero(); width];
    for (m, c) in f.terms() {
        let i = *index
            .get(m)
            .ok_or_else(|| Error::Internal(format!("monomial {} outside basis", m)))?;
        row[i] = c.clone();
    }
    Ok(row)
}

fn check_homogeneous<F: Field>(gens: &[Polynomial<F>]) -> Result<()> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(format!(
                "generator with {} terms of mixed degree",
                g.num_terms()
            )));
        }
    }
    Ok(())
}

/// Echelonized basis of the degree-`d` piece of the ideal generated by
/// `gens`: the span of all multiples m*g landing in degree d.
pub fn ideal_piece<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    d: usize,
) -> Result<GradedPiece<F>> {
    check_homogeneous(gens)?;
    let basis = enumerate_degree(n, d, &TermOrder::LexTop);
    let index = basis_index(&basis);
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let e = g.homogeneous_degree().expect("checked homogeneous");
        if e > d {
            continue;
        }
        for m in enumerate_degree(n, d - e, &TermOrder::LexTop) {
            rows.push(poly_row(field, &g.mul_monomial(&m), &index, basis.len())?);
        }
    }
    let echelon = field.echelonize(rows);
    Ok(GradedPiece {
        degree: d,
        nvars: n,
        basis,
        echelon,
    })
}

/// H(I, d) for each d ≤ dmax, one rank per degree (degrees in parallel).
pub fn hilbert_table<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    dmax: usize,
) -> Result<HilbertTable> {
    check_homogeneous(gens)?;
    let dims = par::map_range(0..dmax + 1, |d| {
        ideal_piece(field, n, gens, d).map(|p| p.dim())
    });
    let mut values = Vec::with_capacity(dmax + 1);
    for v in dims {
        values.push(v?);
    }
    Ok(HilbertTable::new(values))
}

/// dim (I + J)_d.
pub fn dim_sum<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    d: usize,
) -> Result<usize> {
    let mut all = gens_i.to_vec();
    all.extend_from_slice(gens_j);
    Ok(ideal_piece(field, n, &all, d)?.dim())
}

/// dim (I ∩ J)_d via inclusion-exclusion:
/// dim I_d + dim J_d - dim (I+J)_d.
pub fn dim_intersection<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    d: usize,
) -> Result<usize> {
    let di = ideal_piece(field, n, gens_i, d)?.dim();
    let dj = ideal_piece(field, n, gens_j, d)?.dim();
    let ds = dim_sum(field, n, gens_i, gens_j, d)?;
    Ok(di + dj - ds)
}

/// Generators of the product ideal: all pairwise products.
pub fn product_gens<F: Field>(
    field: &F,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
) -> Vec<Polynomial<F>> {
    let mut out = Vec::with_capacity(gens_i.len() * gens_j.len());
    for f in gens_i {
        for g in gens_j {
            let p = f.mul(field, g);
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    out
}

/// dim (I*J)_d, from the span of monomial multiples of pairwise products.
pub fn dim_product<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    d: usize,
) -> Result<usize> {
    check_homogeneous(gens_i)?;
    check_homogeneous(gens_j)?;
    let prod = product_gens(field, gens_i, gens_j);
    Ok(ideal_piece(field, n, &prod, d)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q() -> Rationals {
        Rationals
    }

    fn x(n: usize, i: usize) -> Polynomial<Rationals> {
        Polynomial::variable(&q(), n, i)
    }

    #[test]
    fn whole_space_piece() {
        let gens = vec![x(2, 1), x(2, 2)];
        let p = ideal_piece(&q(), 2, &gens, 1).unwrap();
        assert_eq!(p.dim(), 2);
        // degree 3: all of S_3
        assert_eq!(ideal_piece(&q(), 2, &gens, 3).unwrap().dim(), 4);
    }

    #[test]
    fn empty_generators_are_zero() {
        for d in 0..5 {
            assert_eq!(ideal_piece::<Rationals>(&q(), 3, &[], d).unwrap().dim(), 0);
        }
    }

    #[test]
    fn cube_of_two_variable_ideal_in_three_vars() {
        // (x1,x2)^3 in 3 variables has 4 monomials in degree 3
        let gens: Vec<_> = [[3u32, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0]]
            .iter()
            .map(|e| Polynomial::term(&q(), Monomial::new(e.to_vec()), q().one()))
            .collect();
        assert_eq!(ideal_piece(&q(), 3, &gens, 3).unwrap().dim(), 4);
        // degree 4: multiples of the four cubics by 3 variables: monomials
        // x1^a x2^b x3^c with a+b >= 3
        assert_eq!(ideal_piece(&q(), 3, &gens, 4).unwrap().dim(), 9);
    }

    #[test]
    fn non_homogeneous_rejected() {
        let f = x(2, 1).add(&q(), &Polynomial::constant(&q(), 2, q().one()));
        assert!(matches!(
            ideal_piece(&q(), 2, &[f], 1),
            Err(Error::NonHomogeneous(_))
        ));
    }

    #[test]
    fn inclusion_exclusion_consistency() {
        let i = vec![x(3, 1), x(3, 2)];
        let j = vec![x(3, 2), x(3, 3)];
        for d in 0..5 {
            let di = ideal_piece(&q(), 3, &i, d).unwrap().dim();
            let dj = ideal_piece(&q(), 3, &j, d).unwrap().dim();
            let s = dim_sum(&q(), 3, &i, &j, d).unwrap();
            let t = dim_intersection(&q(), 3, &i, &j, d).unwrap();
            assert_eq!(di + dj, s + t);
        }
    }

    #[test]
    fn product_dimension_example() {
        // I=(x1,x2), J=(x2,x3) in 3 vars, degree 2: x1x2, x1x3, x2^2, x2x3
        let i = vec![x(3, 1), x(3, 2)];
        let j = vec![x(3, 2), x(3, 3)];
        assert_eq!(dim_product(&q(), 3, &i, &j, 2).unwrap(), 4);
        // I = S: product = J
        let s = vec![Polynomial::constant(&q(), 3, q().one())];
        for d in 0..4 {
            assert_eq!(
                dim_product(&q(), 3, &s, &j, d).unwrap(),
                ideal_piece(&q(), 3, &j, d).unwrap().dim()
            );
        }
    }

    #[test]
    fn bareiss_matches_gauss_over_fp() {
        // same rank from both elimination paths on a fixed matrix
        let qf = q();
        let rows_q: Vec<Vec<_>> = vec![
            vec![qf.from_i64(2), qf.from_i64(4), qf.from_i64(-2)],
            vec![qf.from_i64(1), qf.from_i64(2), qf.from_i64(-1)],
            vec![qf.from_i64(3), qf.from_i64(0), qf.from_i64(3)],
        ];
        let e = bareiss_rref(rows_q);
        assert_eq!(e.rank, 2);
        let f = PrimeField::new(5).unwrap();
        let rows_p: Vec<Vec<u64>> = vec![vec![2, 4, 3], vec![1, 2, 4], vec![3, 0, 3]];
        let ep = gauss_jordan(&f, rows_p);
        assert_eq!(ep.rank, 2);
    }

    #[test]
    fn rref_idempotent() {
        let gens = vec![x(3, 1).add(&q(), &x(3, 2)), x(3, 2).add(&q(), &x(3, 3))];
        let p = ideal_piece(&q(), 3, &gens, 2).unwrap();
        let again = q().echelonize(p.echelon.rows.clone());
        assert_eq!(again.rank, p.echelon.rank);
        assert_eq!(again.rows, p.echelon.rows);
    }
}
