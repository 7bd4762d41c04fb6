//! Graded Tor Hilbert functions. Every value comes from the resolution
//! formula: with F a free resolution of S/I,
//!
//!   dim Tor_i(S/I, S/J)_d = H(F_i,d) - H(φ_i(F_i)+J·F_{i-1}, d)
//!                         + H(J·F_{i-1}, d) - H(φ_{i+1}(F_{i+1})+J·F_i, d)
//!
//! evaluated by ranks of explicit spanning sets inside each free module
//! slice. No homology bookkeeping, no minimality assumptions; the Taylor
//! complex is the fast path for monomial ideals.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::minimalize;
use crate::linalg::{dim_intersection, dim_product, ideal_piece};
use crate::monomial::Monomial;
use crate::par;
use crate::poly::Polynomial;
use crate::resolution::{
    free_resolution, module_span_dim, taylor_resolution, FreeResolution, Provenance,
};

/// How to build the resolution of S/I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionChoice {
    /// Taylor when the generators are all single terms, Schreyer otherwise.
    Auto,
    Taylor,
    Schreyer,
}

/// dim Tor_i(S/I, S/J)_d for 0 ≤ i ≤ imax, 0 ≤ d ≤ dmax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorTable {
    pub values: Vec<Vec<usize>>,
    pub imax: usize,
    pub dmax: usize,
    pub provenance: Provenance,
}

impl TorTable {
    pub fn get(&self, i: usize, d: usize) -> usize {
        self.values[i][d]
    }

    /// Entrywise ≤ comparison.
    pub fn dominated_by(&self, other: &TorTable) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }
}

/// Build a resolution of S/I suitable for Tor up to homological degree
/// `depth` and internal degree `dmax`.
pub fn resolve_quotient<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    depth: usize,
    dmax: usize,
    choice: ResolutionChoice,
) -> Result<FreeResolution<F>> {
    let nonzero: Vec<&Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    let monomial_input = nonzero.iter().all(|g| g.is_term());
    let use_taylor = match choice {
        ResolutionChoice::Taylor => true,
        ResolutionChoice::Schreyer => false,
        ResolutionChoice::Auto => monomial_input,
    };
    if use_taylor {
        if !monomial_input {
            return Err(Error::Input(
                "Taylor resolution needs monomial generators".into(),
            ));
        }
        let ideal = minimalize(
            n,
            nonzero
                .iter()
                .map(|g| g.terms().next().expect("nonzero term").0.clone())
                .collect::<Vec<Monomial>>(),
        );
        taylor_resolution(field, &ideal, depth, dmax)
    } else {
        free_resolution(field, n, gens, depth.max(1), dmax)
    }
}

fn recovered_gens<F: Field>(res: &FreeResolution<F>) -> Vec<Polynomial<F>> {
    res.columns(1)
        .iter()
        .map(|c| c.coords[0].clone())
        .collect()
}

/// Tor table of (S/I, S/J) from a prebuilt resolution of S/I; the
/// resolution must reach homological degree imax+1 (or have terminated)
/// and internal degree dmax. Row 0 and row 1 are re-derived from plain
/// graded linear algebra before returning.
pub fn tor_table_with_resolution<F: Field>(
    field: &F,
    res: &FreeResolution<F>,
    gens_j: &[Polynomial<F>],
    imax: usize,
    dmax: usize,
) -> Result<TorTable> {
    if dmax > res.truncation {
        return Err(Error::Truncation {
            needed: dmax,
            have: res.truncation,
        });
    }
    if imax + 1 > res.depth() && !res.terminated {
        return Err(Error::Truncation {
            needed: imax + 1,
            have: res.depth(),
        });
    }
    let n = res.nvars;
    // s[k][d] = H(φ_{k+1}(F_{k+1}) + J·F_k, d), t[k][d] = H(J·F_k, d)
    let cells: Vec<(usize, usize)> = (0..=imax)
        .flat_map(|k| (0..=dmax).map(move |d| (k, d)))
        .collect();
    let ranks = par::map_slice(&cells, |&(k, d)| span_pair(field, res, gens_j, k, d));
    let mut s = vec![vec![0usize; dmax + 1]; imax + 1];
    let mut t = vec![vec![0usize; dmax + 1]; imax + 1];
    for (&(k, d), r) in cells.iter().zip(ranks) {
        let (sv, tv) = r?;
        s[k][d] = sv;
        t[k][d] = tv;
    }
    let mut values = vec![vec![0usize; dmax + 1]; imax + 1];
    for i in 0..=imax {
        for d in 0..=dmax {
            let mut v = res.hf_free(i, d) as i64 - s[i][d] as i64;
            if i > 0 {
                v += t[i - 1][d] as i64 - s[i - 1][d] as i64;
            }
            if v < 0 {
                return Err(Error::Internal(format!(
                    "negative Tor dimension at i={}, d={}",
                    i, d
                )));
            }
            values[i][d] = v as usize;
        }
    }
    verify_low_rows(field, n, &recovered_gens(res), gens_j, &values, dmax)?;
    Ok(TorTable {
        values,
        imax,
        dmax,
        provenance: res.provenance,
    })
}

/// (H(φ_{k+1}(F_{k+1}) + J·F_k, d), H(J·F_k, d)).
fn span_pair<F: Field>(
    field: &F,
    res: &FreeResolution<F>,
    gens_j: &[Polynomial<F>],
    k: usize,
    d: usize,
) -> Result<(usize, usize)> {
    if k > res.depth() {
        return Ok((0, 0));
    }
    let shifts = &res.shifts[k];
    let cols = res.columns(k + 1);
    let s = module_span_dim(field, res.nvars, shifts, cols, gens_j, d)?;
    let t = module_span_dim(field, res.nvars, shifts, &[], gens_j, d)?;
    Ok((s, t))
}

/// One cell dim Tor_i(S/I, S/J)_d from a prebuilt resolution, without
/// tabulating other degrees (the window checks live on this path).
pub fn tor_cell_with_resolution<F: Field>(
    field: &F,
    res: &FreeResolution<F>,
    gens_j: &[Polynomial<F>],
    i: usize,
    d: usize,
) -> Result<usize> {
    if d > res.truncation {
        return Err(Error::Truncation {
            needed: d,
            have: res.truncation,
        });
    }
    if i + 1 > res.depth() && !res.terminated {
        return Err(Error::Truncation {
            needed: i + 1,
            have: res.depth(),
        });
    }
    let (s_i, _) = span_pair(field, res, gens_j, i, d)?;
    let mut v = res.hf_free(i, d) as i64 - s_i as i64;
    if i > 0 {
        let (s_prev, t_prev) = span_pair(field, res, gens_j, i - 1, d)?;
        v += t_prev as i64 - s_prev as i64;
    }
    if v < 0 {
        return Err(Error::Internal(format!(
            "negative Tor dimension at i={}, d={}",
            i, d
        )));
    }
    Ok(v as usize)
}

/// Row identities from the long exact sequence:
/// Tor_0 = S/(I+J) and Tor_1 = (I∩J)/IJ, checked degree by degree.
fn verify_low_rows<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    values: &[Vec<usize>],
    dmax: usize,
) -> Result<()> {
    for d in 0..=dmax {
        let mut sum = gens_i.to_vec();
        sum.extend_from_slice(gens_j);
        let dim_sum = ideal_piece(field, n, &sum, d)?.dim();
        let expect0 = crate::monomial_count(n, d) - dim_sum;
        if values[0][d] != expect0 {
            return Err(Error::Internal(format!(
                "Tor_0 row mismatch at d={}: {} vs {}",
                d, values[0][d], expect0
            )));
        }
        if values.len() > 1 {
            let int = dim_intersection(field, n, gens_i, gens_j, d)?;
            let prod = dim_product(field, n, gens_i, gens_j, d)?;
            if values[1][d] != int - prod {
                return Err(Error::Internal(format!(
                    "Tor_1 row mismatch at d={}: {} vs {}",
                    d,
                    values[1][d],
                    int - prod
                )));
            }
        }
    }
    Ok(())
}

/// Full Tor table, building the resolution internally.
pub fn tor_table<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    imax: usize,
    dmax: usize,
    choice: ResolutionChoice,
) -> Result<TorTable> {
    let res = resolve_quotient(field, n, gens_i, imax + 1, dmax, choice)?;
    tor_table_with_resolution(field, &res, gens_j, imax, dmax)
}

/// Single value dim Tor_i(S/I, S/J)_d.
pub fn tor_hilbert<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    i: usize,
    d: usize,
    choice: ResolutionChoice,
) -> Result<usize> {
    Ok(tor_table(field, n, gens_i, gens_j, i, d, choice)?.get(i, d))
}

/// True iff Tor_i(S/I, S/J) vanishes in every degree of the window.
/// Evidence for Krull-dimension-zero Tor when the window sits past the
/// heuristic bound (sum of all generator degrees plus i).
pub fn vanishing_window_check<F: Field>(
    field: &F,
    n: usize,
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    i: usize,
    window: (usize, usize),
    choice: ResolutionChoice,
) -> Result<bool> {
    if i == 0 {
        return Err(Error::Input(
            "vanishing check is about homological degrees i ≥ 1".into(),
        ));
    }
    let (d0, d1) = window;
    if d1 < d0 {
        return Err(Error::Input("empty degree window".into()));
    }
    let res = resolve_quotient(field, n, gens_i, i + 1, d1, choice)?;
    for d in d0..=d1 {
        if tor_cell_with_resolution(field, &res, gens_j, i, d)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The heuristic start of the vanishing window: past the sum of all
/// generator degrees plus the homological index.
pub fn vanishing_window_start<F: Field>(
    gens_i: &[Polynomial<F>],
    gens_j: &[Polynomial<F>],
    i: usize,
) -> usize {
    let total: usize = gens_i
        .iter()
        .chain(gens_j)
        .filter_map(|g| g.homogeneous_degree())
        .sum();
    total + i
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q() -> Rationals {
        Rationals
    }

    fn mono(_n: usize, e: &[u32]) -> Polynomial<Rationals> {
        Polynomial::term(&q(), Monomial::new(e.to_vec()), q().one())
    }

    fn variables(n: usize) -> Vec<Polynomial<Rationals>> {
        (1..=n).map(|i| Polynomial::variable(&q(), n, i)).collect()
    }

    #[test]
    fn koszul_tor_of_residue_field() {
        // Tor_i(K, K)_d = C(n, i) when d = i, else 0
        for n in 1..=3 {
            let m = variables(n);
            let table = tor_table(&q(), n, &m, &m, n, n + 1, ResolutionChoice::Auto).unwrap();
            for i in 0..=n {
                for d in 0..=n + 1 {
                    let expect = if d == i { crate::binomial(n, i) } else { 0 };
                    assert_eq!(table.get(i, d), expect, "n={} i={} d={}", n, i, d);
                }
            }
        }
    }

    #[test]
    fn flat_when_j_is_unit() {
        let i = vec![mono(2, &[2, 0]), mono(2, &[1, 1])];
        let s = vec![Polynomial::constant(&q(), 2, q().one())];
        let table = tor_table(&q(), 2, &i, &s, 2, 5, ResolutionChoice::Auto).unwrap();
        for row in 0..=2 {
            for d in 0..=5 {
                assert_eq!(table.get(row, d), 0);
            }
        }
    }

    #[test]
    fn taylor_and_schreyer_agree() {
        let gi = vec![mono(3, &[2, 0, 0]), mono(3, &[1, 1, 0]), mono(3, &[0, 0, 2])];
        let gj = vec![mono(3, &[0, 2, 0]), mono(3, &[0, 1, 1])];
        let a = tor_table(&q(), 3, &gi, &gj, 3, 7, ResolutionChoice::Taylor).unwrap();
        let b = tor_table(&q(), 3, &gi, &gj, 3, 7, ResolutionChoice::Schreyer).unwrap();
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn principal_self_tor_never_vanishes() {
        // I = J = (x1^2): Tor_1 = (x1^2)/(x1^4) is nonzero in all degrees ≥ 4
        let g = vec![mono(2, &[2, 0])];
        let start = vanishing_window_start(&g, &g, 1);
        let ok =
            vanishing_window_check(&q(), 2, &g, &g, 1, (start, start + 3), ResolutionChoice::Auto)
                .unwrap();
        assert!(!ok);
    }

    #[test]
    fn vanishing_check_rejects_i_zero() {
        let g = vec![mono(2, &[1, 0])];
        assert!(matches!(
            vanishing_window_check(&q(), 2, &g, &g, 0, (2, 4), ResolutionChoice::Auto),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn zero_ideal_rows() {
        // I = 0: Tor_0 = S/J, higher rows vanish
        let j = vec![mono(2, &[1, 0])];
        let table = tor_table(&q(), 2, &[], &j, 2, 4, ResolutionChoice::Auto).unwrap();
        for d in 0..=4 {
            assert_eq!(table.get(0, d), crate::monomial_count(2, d) - d);
        }
        for d in 0..=4 {
            assert_eq!(table.get(1, d), 0);
            assert_eq!(table.get(2, d), 0);
        }
    }
}
