//! Buchberger Groebner bases for homogeneous ideals and submodules of
//! shifted free modules, with Gebauer-Moller pair elimination and
//! degree-by-degree pair processing (optionally truncated at a degree
//! bound). Syzygies come from the graph-module construction: track the
//! original generators in extra slots dominated by the ambient ones and
//! read off the basis elements whose ambient part vanished.
//!
//! The module order is position-over-term with the ambient term order;
//! earlier slots dominate.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Element of a free module with one polynomial per generator slot.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeModuleElement<F: Field> {
    pub coords: Vec<Polynomial<F>>,
}

impl<F: Field> FreeModuleElement<F> {
    pub fn new(coords: Vec<Polynomial<F>>) -> Self {
        FreeModuleElement { coords }
    }

    pub fn zero(n: usize, rank: usize) -> Self {
        FreeModuleElement {
            coords: (0..rank).map(|_| Polynomial::zero(n)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|p| p.is_zero())
    }

    /// Internal degree w.r.t. the slot shifts when homogeneous.
    pub fn homogeneous_degree(&self, shifts: &[usize]) -> Option<usize> {
        let mut deg = None;
        for (p, &s) in self.coords.iter().zip(shifts) {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()? + s;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        FreeModuleElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(field, b))
                .collect(),
        }
    }

    pub fn scale_poly(&self, field: &F, p: &Polynomial<F>) -> Self {
        FreeModuleElement {
            coords: self.coords.iter().map(|a| a.mul(field, p)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// internal flat representation

type Slot = usize;
type MTerm = (Slot, Monomial);

#[derive(Debug, Clone)]
struct Elt<E> {
    terms: Vec<(MTerm, E)>, // strictly descending in the module order
}

impl<E> Elt<E> {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(MTerm, E) {
        &self.terms[0]
    }
}

/// Position-over-term: earlier slots dominate, ties by the ambient order.
fn mt_cmp(ord: &TermOrder, a: &MTerm, b: &MTerm) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => ord.cmp_unchecked(&a.1, &b.1),
        other => other,
    }
}

fn elt_from_terms<F: Field>(field: &F, ord: &TermOrder, mut ts: Vec<(MTerm, F::Elem)>) -> Elt<F::Elem> {
    ts.sort_by(|(a, _), (b, _)| mt_cmp(ord, b, a));
    let mut terms: Vec<(MTerm, F::Elem)> = Vec::with_capacity(ts.len());
    for (t, c) in ts {
        if let Some(last) = terms.last_mut() {
            if last.0 == t {
                last.1 = field.add(&last.1, &c);
                continue;
            }
        }
        terms.push((t, c));
    }
    terms.retain(|(_, c)| !field.is_zero(c));
    Elt { terms }
}

/// a - c * x^m * b, merging the two sorted term lists.
fn combine<F: Field>(
    field: &F,
    ord: &TermOrder,
    a: &Elt<F::Elem>,
    b: &Elt<F::Elem>,
    m: &Monomial,
    c: &F::Elem,
) -> Elt<F::Elem> {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = if i == a.terms.len() {
            false
        } else if j == b.terms.len() {
            true
        } else {
            let bt = (b.terms[j].0 .0, b.terms[j].0 .1.mul(m));
            match mt_cmp(ord, &a.terms[i].0, &bt) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let v = field.sub(&a.terms[i].1, &field.mul(c, &b.terms[j].1));
                    if !field.is_zero(&v) {
                        out.push((a.terms[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
            }
        };
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else {
            let (slot, mon) = &b.terms[j].0;
            let v = field.neg(&field.mul(c, &b.terms[j].1));
            out.push(((*slot, mon.mul(m)), v));
            j += 1;
        }
    }
    Elt { terms: out }
}

/// Full normal form: repeatedly rewrite the largest reducible term,
/// moving irreducible leads to the remainder. Deterministic: reducers are
/// scanned in basis order.
fn reduce<F: Field>(
    field: &F,
    ord: &TermOrder,
    f: Elt<F::Elem>,
    basis: &[Elt<F::Elem>],
    skip: Option<usize>,
) -> Elt<F::Elem> {
    let mut rem: Vec<(MTerm, F::Elem)> = Vec::new();
    let mut cur = f;
    'outer: while !cur.is_zero() {
        let (t, c) = cur.lead().clone();
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip || g.is_zero() {
                continue;
            }
            let (gt, gc) = g.lead();
            if gt.0 == t.0 {
                if let Some(q) = t.1.try_div(&gt.1) {
                    let factor = field.div(&c, gc).expect("nonzero lead coefficient");
                    cur = combine(field, ord, &cur, g, &q, &factor);
                    continue 'outer;
                }
            }
        }
        rem.push((t, c));
        cur.terms.remove(0);
    }
    Elt { terms: rem }
}

fn normalize_elt<F: Field>(field: &F, e: &mut Elt<F::Elem>) {
    let mut coeffs: Vec<F::Elem> = e.terms.iter().map(|(_, c)| c.clone()).collect();
    field.normalize_coeffs(&mut coeffs);
    for ((_, c), v) in e.terms.iter_mut().zip(coeffs) {
        *c = v;
    }
}

#[derive(Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Degree-ordered pending pairs, keyed for deterministic processing.
type PairQueue = BTreeMap<(usize, usize, usize), Pair>;

fn pair_degree(lcm: &Monomial, slot: Slot, shifts: &[usize]) -> usize {
    lcm.degree() + shifts[slot]
}

/// Gebauer-Moller update: form the new pairs against `h`, discard by the
/// lcm (M), duplicate (F) and - for rank-one ambients only - coprime (B)
/// criteria, then prune old pairs whose lcm the new lead divides.
fn update_pairs<E: Clone>(
    basis: &[Elt<E>],
    pairs: &mut PairQueue,
    h: usize,
    shifts: &[usize],
    product_criterion: bool,
) {
    let (ht, _) = basis[h].lead();
    let mut cand: Vec<(usize, Monomial)> = Vec::new();
    for (i, g) in basis.iter().enumerate().take(h) {
        if g.is_zero() {
            continue;
        }
        let (gt, _) = g.lead();
        if gt.0 == ht.0 {
            cand.push((i, gt.1.lcm(&ht.1)));
        }
    }
    // M: strict divisibility by another candidate lcm kills a pair
    let mut keep: Vec<bool> = vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a != b && cand[b].1 != cand[a].1 && cand[b].1.divides(&cand[a].1) {
                keep[a] = false;
                break;
            }
        }
    }
    // F: a single representative per lcm
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..a {
            if keep[b] && cand[b].1 == cand[a].1 {
                keep[a] = false;
                break;
            }
        }
    }
    // B: coprime leads (sound for ideals, not for proper modules)
    if product_criterion {
        for (a, (i, _)) in cand.iter().enumerate() {
            if keep[a] && basis[*i].lead().0 .1.is_coprime(&ht.1) {
                keep[a] = false;
            }
        }
    }
    // prune old pairs strictly refined by the new lead
    let slot = ht.0;
    pairs.retain(|_, p| {
        let (it, _) = basis[p.i].lead();
        if it.0 != slot || !ht.1.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lead().0 .1.lcm(&ht.1);
        let lj = basis[p.j].lead().0 .1.lcm(&ht.1);
        li == p.lcm || lj == p.lcm
    });
    for (a, (i, lcm)) in cand.into_iter().enumerate() {
        if keep[a] {
            let deg = pair_degree(&lcm, slot, shifts);
            pairs.insert((deg, i, h), Pair { i, j: h, lcm });
        }
    }
}

fn s_pair<F: Field>(field: &F, ord: &TermOrder, gi: &Elt<F::Elem>, gj: &Elt<F::Elem>) -> Elt<F::Elem> {
    let ((_, mi), ci) = gi.lead();
    let ((_, mj), cj) = gj.lead();
    let l = mi.lcm(mj);
    let qi = l.try_div(mi).expect("lcm divisible");
    let qj = l.try_div(mj).expect("lcm divisible");
    // cj * qi * gi - ci * qj * gj
    let scaled: Vec<(MTerm, F::Elem)> = gi
        .terms
        .iter()
        .map(|((s, m), c)| ((*s, m.mul(&qi)), field.mul(c, cj)))
        .collect();
    let lhs = Elt { terms: scaled };
    combine(field, ord, &lhs, gj, &qj, ci)
}

fn buchberger_elts<F: Field>(
    field: &F,
    ord: &TermOrder,
    shifts: &[usize],
    gens: Vec<Elt<F::Elem>>,
    truncate: Option<usize>,
    product_criterion: bool,
) -> Vec<Elt<F::Elem>> {
    let mut basis: Vec<Elt<F::Elem>> = Vec::new();
    let mut pairs: PairQueue = BTreeMap::new();
    for mut g in gens {
        if g.is_zero() {
            continue;
        }
        normalize_elt(field, &mut g);
        basis.push(g);
        update_pairs(&basis, &mut pairs, basis.len() - 1, shifts, product_criterion);
    }
    while let Some((&key, _)) = pairs.iter().next() {
        let pair = pairs.remove(&key).expect("key present");
        if truncate.map_or(false, |d| key.0 > d) {
            // pairs only get larger from here on
            break;
        }
        let s = s_pair(field, ord, &basis[pair.i], &basis[pair.j]);
        let mut r = reduce(field, ord, s, &basis, None);
        if !r.is_zero() {
            normalize_elt(field, &mut r);
            basis.push(r);
            update_pairs(&basis, &mut pairs, basis.len() - 1, shifts, product_criterion);
        }
    }
    auto_reduce(field, ord, basis)
}

fn auto_reduce<F: Field>(field: &F, ord: &TermOrder, mut basis: Vec<Elt<F::Elem>>) -> Vec<Elt<F::Elem>> {
    // keep only lead-minimal elements
    let mut alive: Vec<bool> = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !alive[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !alive[b] {
                continue;
            }
            let (ta, _) = basis[a].lead();
            let (tb, _) = basis[b].lead();
            if ta.0 == tb.0 && tb.1.divides(&ta.1) && (tb.1 != ta.1 || b < a) {
                alive[a] = false;
                break;
            }
        }
    }
    let mut kept: Vec<Elt<F::Elem>> = basis
        .drain(..)
        .zip(alive)
        .filter_map(|(e, a)| a.then_some(e))
        .collect();
    // tail-reduce each element against the rest
    for k in 0..kept.len() {
        let e = kept[k].clone();
        let mut r = reduce(field, ord, e, &kept, Some(k));
        normalize_elt(field, &mut r);
        kept[k] = r;
    }
    kept.sort_by(|a, b| mt_cmp(ord, &b.lead().0, &a.lead().0));
    kept
}

// ---------------------------------------------------------------------------
// public API

/// A reduced Groebner basis, optionally truncated: when `truncation` is
/// `Some(d)` the basis is complete for all internal degrees ≤ d only.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    pub order: TermOrder,
    pub elements: Vec<Polynomial<F>>,
    pub truncation: Option<usize>,
    nvars: usize,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Unique remainder modulo the basis; zero iff `f` lies in the ideal
    /// (in degrees covered by the truncation).
    pub fn normal_form(&self, field: &F, f: &Polynomial<F>) -> Polynomial<F> {
        if let (Some(t), Some(d)) = (self.truncation, f.homogeneous_degree()) {
            debug_assert!(d <= t, "normal form beyond the truncation degree");
        }
        let basis: Vec<Elt<F::Elem>> = self
            .elements
            .iter()
            .map(|p| elt_of_poly(field, &self.order, p))
            .collect();
        let r = reduce(field, &self.order, elt_of_poly(field, &self.order, f), &basis, None);
        poly_of_elt(field, self.nvars, &r)
    }

    /// Monomial ideal of leading terms.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        let leads: Vec<Monomial> = self
            .elements
            .iter()
            .filter_map(|p| p.leading(&self.order).map(|(m, _)| m.clone()))
            .collect();
        minimalize(self.nvars, leads)
    }
}

fn elt_of_poly<F: Field>(field: &F, ord: &TermOrder, p: &Polynomial<F>) -> Elt<F::Elem> {
    elt_from_terms(
        field,
        ord,
        p.terms().map(|(m, c)| ((0usize, m.clone()), c.clone())).collect(),
    )
}

fn poly_of_elt<F: Field>(field: &F, n: usize, e: &Elt<F::Elem>) -> Polynomial<F> {
    Polynomial::from_terms(
        field,
        n,
        e.terms.iter().map(|((_, m), c)| (m.clone(), c.clone())),
    )
}

fn check_homogeneous_gens<F: Field>(gens: &[Polynomial<F>]) -> Result<()> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous("Groebner input must be graded".into()));
    }
    Ok(())
}

/// Reduced Groebner basis of a homogeneous ideal. With `truncate =
/// Some(d)`, S-pairs above internal degree d are discarded; the result is
/// then a d-truncated basis (sound for all queries in degrees ≤ d).
pub fn buchberger<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    ord: &TermOrder,
    truncate: Option<usize>,
) -> Result<GroebnerBasis<F>> {
    check_homogeneous_gens(gens)?;
    let elts: Vec<Elt<F::Elem>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| elt_of_poly(field, ord, g))
        .collect();
    let out = buchberger_elts(field, ord, &[0], elts, truncate, true);
    Ok(GroebnerBasis {
        order: ord.clone(),
        elements: out.iter().map(|e| poly_of_elt(field, n, e)).collect(),
        truncation: truncate,
        nvars: n,
    })
}

/// in_ord(I) as a monomial ideal (minimal generators of degree ≤ the
/// truncation bound when one is given).
pub fn initial_ideal<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    ord: &TermOrder,
    truncate: Option<usize>,
) -> Result<MonomialIdeal> {
    Ok(buchberger(field, n, gens, ord, truncate)?.initial_ideal())
}

/// Initial ideal for a weight order refined by `tiebreak`. The flag
/// reports whether some reduced basis element has more than one monomial
/// of maximal w-weight, i.e. whether the unrefined in_w is not monomial
/// and the result is a strict refinement of it.
pub fn initial_weight<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    w: &[u64],
    tiebreak: &TermOrder,
    truncate: Option<usize>,
) -> Result<(MonomialIdeal, bool)> {
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            left: w.len(),
            right: n,
        });
    }
    let ord = TermOrder::weight(w.to_vec(), tiebreak.clone());
    let gb = buchberger(field, n, gens, &ord, truncate)?;
    let tie = gb.elements.iter().any(|p| {
        let top = p.terms().map(|(m, _)| m.weight(w)).max().unwrap_or(0);
        p.terms().filter(|(m, _)| m.weight(w) == top).count() > 1
    });
    Ok((gb.initial_ideal(), tie))
}

/// Generators of the syzygy module of `gens` (elements of the free module
/// with the given slot shifts): the kernel of the presentation map, via a
/// Groebner basis of the graph module. Truncation keeps all syzygies of
/// internal degree ≤ the bound.
pub fn syzygies<F: Field>(
    field: &F,
    n: usize,
    ambient_shifts: &[usize],
    gens: &[FreeModuleElement<F>],
    ord: &TermOrder,
    truncate: Option<usize>,
) -> Result<Vec<FreeModuleElement<F>>> {
    let m = ambient_shifts.len();
    let r = gens.len();
    let mut shifts = ambient_shifts.to_vec();
    for g in gens {
        assert!(!g.is_zero(), "syzygies of zero generators are not meaningful");
        assert_eq!(g.rank(), m, "generator rank mismatch");
        let d = g
            .homogeneous_degree(ambient_shifts)
            .ok_or_else(|| Error::NonHomogeneous("module generator".into()))?;
        shifts.push(d);
    }
    let graph: Vec<Elt<F::Elem>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut ts: Vec<(MTerm, F::Elem)> = Vec::new();
            for (slot, p) in g.coords.iter().enumerate() {
                for (mon, c) in p.terms() {
                    ts.push(((slot, mon.clone()), c.clone()));
                }
            }
            ts.push(((m + i, Monomial::one(n)), field.one()));
            elt_from_terms(field, ord, ts)
        })
        .collect();
    let out = buchberger_elts(field, ord, &shifts, graph, truncate, false);
    let mut syz = Vec::new();
    for e in out {
        if e.lead().0 .0 >= m {
            let mut coords = vec![Polynomial::zero(n); r];
            for ((slot, mon), c) in &e.terms {
                debug_assert!(*slot >= m, "mixed graph element");
                let t = Polynomial::term(field, mon.clone(), c.clone());
                coords[*slot - m] = coords[*slot - m].add(field, &t);
            }
            syz.push(FreeModuleElement::new(coords));
        }
    }
    Ok(syz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q() -> Rationals {
        Rationals
    }

    fn x(n: usize, i: usize) -> Polynomial<Rationals> {
        Polynomial::variable(&q(), n, i)
    }

    fn mono(_n: usize, e: &[u32]) -> Polynomial<Rationals> {
        Polynomial::term(&q(), Monomial::new(e.to_vec()), q().one())
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let gens = vec![mono(2, &[2, 0]), mono(2, &[1, 1])];
        let gb = buchberger(&q(), 2, &gens, &TermOrder::LexTop, None).unwrap();
        assert_eq!(gb.elements.len(), 2);
        let init = gb.initial_ideal();
        assert_eq!(init.gens().len(), 2);
    }

    #[test]
    fn linear_system_reduces_to_variables() {
        let gens = vec![x(2, 1).add(&q(), &x(2, 2)), x(2, 1).sub(&q(), &x(2, 2))];
        let gb = buchberger(&q(), 2, &gens, &TermOrder::LexTop, None).unwrap();
        let init = gb.initial_ideal();
        assert_eq!(init.gens().len(), 2);
        assert!(init.contains(&Monomial::new(vec![1, 0])));
        assert!(init.contains(&Monomial::new(vec![0, 1])));
        // and the reduced basis is exactly {x1, x2}
        assert_eq!(gb.elements[0], x(2, 1));
        assert_eq!(gb.elements[1], x(2, 2));
    }

    #[test]
    fn initial_ideal_of_binomial() {
        let f = x(2, 1).add(&q(), &x(2, 2));
        let lex = initial_ideal(&q(), 2, &[f.clone()], &TermOrder::LexTop, None).unwrap();
        assert_eq!(lex.gens(), &[Monomial::new(vec![1, 0])]);
        let olex = initial_ideal(&q(), 2, &[f], &TermOrder::OppositeLex, None).unwrap();
        assert_eq!(olex.gens(), &[Monomial::new(vec![0, 1])]);
    }

    #[test]
    fn normal_form_membership() {
        let gens = vec![x(2, 1).add(&q(), &x(2, 2))];
        let gb = buchberger(&q(), 2, &gens, &TermOrder::LexTop, None).unwrap();
        assert!(gb.normal_form(&q(), &gens[0]).is_zero());
        let one = Polynomial::constant(&q(), 2, q().one());
        assert_eq!(gb.normal_form(&q(), &one), one);
        // x1 reduces to -x2 modulo (x1 + x2)
        let nf = gb.normal_form(&q(), &x(2, 1));
        assert_eq!(nf, x(2, 2).neg(&q()));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let f = x(2, 1).add(&q(), &mono(2, &[0, 2]));
        assert!(matches!(
            buchberger(&q(), 2, &[f], &TermOrder::LexTop, None),
            Err(Error::NonHomogeneous(_))
        ));
    }

    #[test]
    fn weight_order_with_unit_weights_matches_lex() {
        let gens = vec![
            x(3, 1).add(&q(), &x(3, 2)).add(&q(), &x(3, 3)),
            x(3, 2).mul(&q(), &x(3, 3)),
        ];
        let (w_init, _tie) =
            initial_weight(&q(), 3, &gens, &[1, 1, 1], &TermOrder::LexTop, None).unwrap();
        let lex_init = initial_ideal(&q(), 3, &gens, &TermOrder::LexTop, None).unwrap();
        assert_eq!(w_init, lex_init);
    }

    #[test]
    fn weight_tie_flag_reports() {
        // single generator x1 + x2 with w = (1,1): both terms have top weight
        let f = x(2, 1).add(&q(), &x(2, 2));
        let (_, tie) = initial_weight(&q(), 2, &[f], &[1, 1], &TermOrder::LexTop, None).unwrap();
        assert!(tie);
        let g = x(2, 1).add(&q(), &x(2, 2));
        let (_, tie) = initial_weight(&q(), 2, &[g], &[2, 1], &TermOrder::LexTop, None).unwrap();
        assert!(!tie);
    }

    #[test]
    fn koszul_syzygy() {
        let gens = vec![
            FreeModuleElement::new(vec![x(2, 1)]),
            FreeModuleElement::new(vec![x(2, 2)]),
        ];
        let syz = syzygies(&q(), 2, &[0], &gens, &TermOrder::LexTop, None).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // (-x2, x1) up to scaling
        assert_eq!(s.homogeneous_degree(&[1, 1]), Some(2));
        let prod = gens[0]
            .scale_poly(&q(), &s.coords[0])
            .add(&q(), &gens[1].scale_poly(&q(), &s.coords[1]));
        assert!(prod.is_zero());
    }

    #[test]
    fn principal_ideal_has_no_syzygies() {
        let gens = vec![FreeModuleElement::new(vec![x(2, 1).add(&q(), &x(2, 2))])];
        let syz = syzygies(&q(), 2, &[0], &gens, &TermOrder::LexTop, None).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn truncated_basis_sound_below_bound() {
        // lex GB of (x1^2 - x2x3, x1x2 - x3^2) has elements up to degree 3;
        // truncating at 2 keeps only the quadrics but Hilbert data below 3
        // is unaffected.
        let g1 = mono(3, &[2, 0, 0]).sub(&q(), &mono(3, &[0, 1, 1]));
        let g2 = mono(3, &[1, 1, 0]).sub(&q(), &mono(3, &[0, 0, 2]));
        let full = buchberger(&q(), 3, &[g1.clone(), g2.clone()], &TermOrder::LexTop, None).unwrap();
        let trunc = buchberger(&q(), 3, &[g1, g2], &TermOrder::LexTop, Some(2)).unwrap();
        let full_init = full.initial_ideal();
        let trunc_init = trunc.initial_ideal();
        for d in 0..=2 {
            assert_eq!(full_init.hf(d), trunc_init.hf(d));
        }
        assert!(full.elements.len() >= trunc.elements.len());
    }
}
