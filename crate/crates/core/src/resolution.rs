//! Graded free resolutions of S/I, truncated at a degree bound: the
//! Taylor complex for monomial ideals (subsets with lcm degree beyond the
//! bound are dropped, which is consistent because lcms only grow along
//! faces), and iterated syzygy computations for arbitrary homogeneous
//! input. Resolutions are not minimalized; nothing downstream needs
//! minimality.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{syzygies, FreeModuleElement};
use crate::ideal::MonomialIdeal;
use crate::linalg::{basis_index, poly_row};
use crate::monomial::{enumerate_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::Polynomial;

/// Which construction produced a resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Taylor,
    Schreyer,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Taylor => write!(f, "taylor"),
            Provenance::Schreyer => write!(f, "schreyer"),
        }
    }
}

/// A truncated graded free resolution of S/I:
/// F_p -> ... -> F_1 -> F_0 = S. `maps[k]` holds the columns of the map
/// F_{k+1} -> F_k as elements of F_k; `shifts[i]` the generator degrees
/// of F_i. When `terminated` is set there are no further syzygies in
/// internal degrees ≤ `truncation`, so missing modules count as zero.
#[derive(Debug, Clone)]
pub struct FreeResolution<F: Field> {
    pub nvars: usize,
    pub shifts: Vec<Vec<usize>>,
    pub maps: Vec<Vec<FreeModuleElement<F>>>,
    pub truncation: usize,
    pub terminated: bool,
    pub provenance: Provenance,
}

impl<F: Field> FreeResolution<F> {
    /// Largest homological index with a module recorded.
    pub fn depth(&self) -> usize {
        self.shifts.len() - 1
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts.get(i).map(|s| s.len()).unwrap_or(0)
    }

    /// H(F_i, d).
    pub fn hf_free(&self, i: usize, d: usize) -> usize {
        match self.shifts.get(i) {
            None => 0,
            Some(shifts) => shifts
                .iter()
                .filter(|&&s| s <= d)
                .map(|&s| crate::monomial_count(self.nvars, d - s))
                .sum(),
        }
    }

    /// Columns of the map F_i -> F_{i-1}; empty when the resolution has
    /// terminated before i.
    pub fn columns(&self, i: usize) -> &[FreeModuleElement<F>] {
        assert!(i >= 1);
        self.maps.get(i - 1).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Exact composition check: each consecutive pair of maps composes to
    /// the zero map.
    pub fn composes_to_zero(&self, field: &F) -> bool {
        for i in 1..self.maps.len() {
            let lower = &self.maps[i - 1]; // columns of φ_i in F_{i-1}
            for col in &self.maps[i] {
                // image of a basis vector of F_{i+1} under φ_i ∘ φ_{i+1}
                let rank_below = self.shifts[i - 1].len();
                let mut acc = FreeModuleElement::zero(self.nvars, rank_below);
                for (slot, p) in col.coords.iter().enumerate() {
                    if !p.is_zero() {
                        acc = acc.add(field, &lower[slot].scale_poly(field, p));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Rank of the degree-d piece of the image of φ_i.
    pub fn map_image_dim(&self, field: &F, i: usize, d: usize) -> Result<usize> {
        if i > self.depth() {
            return Ok(0);
        }
        module_span_dim(field, self.nvars, &self.shifts[i - 1], self.columns(i), &[], d)
    }

    /// Exactness at homological positions ≥ 1 in all internal degrees
    /// ≤ dmax, by rank counting; positions past the recorded depth are
    /// covered when the resolution terminated.
    pub fn is_exact_up_to(&self, field: &F, dmax: usize) -> Result<bool> {
        let p = self.depth();
        for i in 1..=p {
            if i == p && !self.terminated {
                break;
            }
            for d in 0..=dmax {
                let here = self.hf_free(i, d);
                let img_in = self.map_image_dim(field, i, d)?;
                let img_above = self.map_image_dim(field, i + 1, d)?;
                if here != img_in + img_above {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Rank of the degree-d slice of the submodule of ⊕ S(-shifts) spanned by
/// `elements` together with g*e_slot for every generator g of `extra_ideal`
/// and every slot. Realizes the graded pieces in the Tor formula.
pub fn module_span_dim<F: Field>(
    field: &F,
    n: usize,
    ambient_shifts: &[usize],
    elements: &[FreeModuleElement<F>],
    extra_ideal: &[Polynomial<F>],
    d: usize,
) -> Result<usize> {
    // per-slot monomial bases, concatenated
    let mut offsets = Vec::with_capacity(ambient_shifts.len());
    let mut bases = Vec::with_capacity(ambient_shifts.len());
    let mut width = 0usize;
    for &s in ambient_shifts {
        offsets.push(width);
        if s <= d {
            let b = enumerate_degree(n, d - s, &TermOrder::LexTop);
            width += b.len();
            bases.push(Some((basis_index(&b), b)));
        } else {
            bases.push(None);
        }
    }
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let push_element = |el: &FreeModuleElement<F>, rows: &mut Vec<Vec<F::Elem>>| -> Result<()> {
        let deg = match el.homogeneous_degree(ambient_shifts) {
            Some(e) => e,
            None => {
                if el.is_zero() {
                    return Ok(());
                }
                return Err(Error::NonHomogeneous("module span element".into()));
            }
        };
        if deg > d {
            return Ok(());
        }
        for m in enumerate_degree(n, d - deg, &TermOrder::LexTop) {
            let mut row = vec![field.zero(); width];
            for (slot, p) in el.coords.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let (index, basis) = bases[slot].as_ref().expect("slot within degree");
                let sub = poly_row(field, &p.mul_monomial(&m), index, basis.len())?;
                for (k, v) in sub.into_iter().enumerate() {
                    row[offsets[slot] + k] = v;
                }
            }
            rows.push(row);
        }
        Ok(())
    };
    for el in elements {
        push_element(el, &mut rows)?;
    }
    for g in extra_ideal {
        if g.is_zero() {
            continue;
        }
        for slot in 0..ambient_shifts.len() {
            let mut coords = vec![Polynomial::zero(n); ambient_shifts.len()];
            coords[slot] = g.clone();
            push_element(&FreeModuleElement::new(coords), &mut rows)?;
        }
    }
    Ok(field.echelonize(rows).rank)
}

fn subsets_of_size(s: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(s: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..s {
            cur.push(v);
            rec(s, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(s, k, 0, &mut cur, &mut out);
    out
}

/// Taylor complex of a monomial ideal, truncated: F_k is spanned by the
/// size-k subsets of the minimal generators whose lcm has degree ≤ dmax.
pub fn taylor_resolution<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    i_max: usize,
    dmax: usize,
) -> Result<FreeResolution<F>> {
    let n = ideal.nvars();
    let gens = ideal.gens();
    let s = gens.len();
    if s > 20 {
        return Err(Error::TaylorTooLarge { gens: s });
    }
    let lcm_of = |t: &[usize]| -> Monomial {
        t.iter()
            .fold(Monomial::one(n), |acc, &g| acc.lcm(&gens[g]))
    };
    let mut shifts: Vec<Vec<usize>> = vec![vec![0]];
    let mut maps: Vec<Vec<FreeModuleElement<F>>> = Vec::new();
    let mut prev: Vec<Vec<usize>> = vec![vec![]];
    let top = i_max.min(s);
    for k in 1..=top {
        let subsets: Vec<Vec<usize>> = subsets_of_size(s, k)
            .into_iter()
            .filter(|t| lcm_of(t).degree() <= dmax)
            .collect();
        if subsets.is_empty() {
            break;
        }
        let prev_index: std::collections::HashMap<&[usize], usize> = prev
            .iter()
            .map(|t| t.as_slice())
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut cols = Vec::with_capacity(subsets.len());
        for t in &subsets {
            let big = lcm_of(t);
            let mut coords = vec![Polynomial::zero(n); prev.len()];
            for (r, &drop) in t.iter().enumerate() {
                let face: Vec<usize> = t.iter().copied().filter(|&g| g != drop).collect();
                let small = lcm_of(&face);
                let ratio = big.try_div(&small).expect("face lcm divides");
                let sign = if r % 2 == 0 {
                    field.one()
                } else {
                    field.neg(&field.one())
                };
                let slot = *prev_index.get(face.as_slice()).expect("face kept");
                let term = Polynomial::term(field, ratio, sign);
                coords[slot] = coords[slot].add(field, &term);
            }
            cols.push(FreeModuleElement::new(coords));
        }
        shifts.push(subsets.iter().map(|t| lcm_of(t).degree()).collect());
        maps.push(cols);
        prev = subsets;
    }
    // terminated when no admissible subset one size larger exists
    let next = top + 1;
    let terminated = next > s
        || subsets_of_size(s, next)
            .iter()
            .all(|t| lcm_of(t).degree() > dmax)
        || shifts.len() <= top; // an empty level already cut the complex
    Ok(FreeResolution {
        nvars: n,
        shifts,
        maps,
        truncation: dmax,
        terminated,
        provenance: Provenance::Taylor,
    })
}

/// Resolution of S/I by iterated syzygy computations, truncated at `dmax`.
/// Correct in all internal degrees ≤ dmax up to homological degree
/// `i_max`; stops early (and is then complete ≤ dmax) when a syzygy step
/// comes back empty.
pub fn free_resolution<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    i_max: usize,
    dmax: usize,
) -> Result<FreeResolution<F>> {
    assert!(i_max >= 1);
    let ord = TermOrder::RevLexTop;
    let cols: Vec<FreeModuleElement<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    let mut shifts: Vec<Vec<usize>> = vec![vec![0]];
    let mut maps: Vec<Vec<FreeModuleElement<F>>> = Vec::new();
    let mut terminated = false;
    if cols.is_empty() {
        return Ok(FreeResolution {
            nvars: n,
            shifts,
            maps,
            truncation: dmax,
            terminated: true,
            provenance: Provenance::Schreyer,
        });
    }
    let mut degs = Vec::with_capacity(cols.len());
    for c in &cols {
        degs.push(
            c.homogeneous_degree(&[0])
                .ok_or_else(|| Error::NonHomogeneous("resolution input".into()))?,
        );
    }
    shifts.push(degs);
    maps.push(cols);
    while maps.len() < i_max {
        let level = maps.len();
        let syz = syzygies(
            field,
            n,
            &shifts[level - 1],
            &maps[level - 1],
            &ord,
            Some(dmax),
        )?;
        if syz.is_empty() {
            terminated = true;
            break;
        }
        let mut degs = Vec::with_capacity(syz.len());
        for s in &syz {
            degs.push(
                s.homogeneous_degree(&shifts[level])
                    .ok_or_else(|| Error::Internal("non-homogeneous syzygy".into()))?,
            );
        }
        shifts.push(degs);
        maps.push(syz);
    }
    Ok(FreeResolution {
        nvars: n,
        shifts,
        maps,
        truncation: dmax,
        terminated,
        provenance: Provenance::Schreyer,
    })
}
