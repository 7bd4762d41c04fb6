//! Monomial ideal combinatorics: minimal generators, Hilbert functions by
//! counting (with an independent recursive path as a self-check), lex and
//! opposite-lex segment ideals with Macaulay growth validation, 0-Borel
//! tests, and the Borel product decomposition.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::HilbertTable;
use crate::monomial::{enumerate_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::Polynomial;

/// Which segment flavor a lexification uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexFlavor {
    Lex,
    OppositeLex,
}

impl LexFlavor {
    pub fn order(&self) -> TermOrder {
        match self {
            LexFlavor::Lex => TermOrder::LexTop,
            LexFlavor::OppositeLex => TermOrder::OppositeLex,
        }
    }
}

/// A degree-wise segment prescription: the Hilbert values a segment ideal
/// must realize. Macaulay growth is validated when the ideal is built.
#[derive(Debug, Clone)]
pub struct LexSegmentSpec {
    pub flavor: LexFlavor,
    pub counts: HilbertTable,
}

impl LexSegmentSpec {
    pub fn build(&self, n: usize) -> Result<MonomialIdeal> {
        lexify(n, &self.counts, self.flavor)
    }
}

/// A monomial ideal held by its minimal generators (an antichain under
/// divisibility).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn max_gen_degree(&self) -> usize {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// All degree-d monomials of the ideal, descending in LexTop.
    pub fn monomials_of_degree(&self, d: usize) -> Vec<Monomial> {
        enumerate_degree(self.n, d, &TermOrder::LexTop)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// H(I, d) by explicit enumeration; the reference implementation.
    pub fn hf(&self, d: usize) -> usize {
        enumerate_degree(self.n, d, &TermOrder::LexTop)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    /// H(I, d) by the pivot-variable recursion on the last variable.
    /// Independent of [`MonomialIdeal::hf`]; the two must always agree.
    pub fn hf_recursive(&self, d: usize) -> usize {
        hf_rec(self.n, &self.gens, d)
    }

    pub fn hilbert_table(&self, dmax: usize) -> HilbertTable {
        HilbertTable::new((0..=dmax).map(|d| self.hf(d)).collect())
    }

    /// View the generators as single-term polynomials over `field`.
    pub fn to_polynomials<F: Field>(&self, field: &F) -> Vec<Polynomial<F>> {
        self.gens
            .iter()
            .map(|m| Polynomial::term(field, m.clone(), field.one()))
            .collect()
    }

    /// Image under the involution x_i -> x_{n+1-i}.
    pub fn mirror(&self) -> Self {
        minimalize(self.n, self.gens.iter().map(|g| g.mirror()).collect())
    }

    /// Intersection with another monomial ideal (pairwise lcms).
    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        minimalize(self.n, gens)
    }

    /// Product ideal (pairwise products).
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        minimalize(self.n, gens)
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        minimalize(self.n, gens)
    }

    /// Strongly stable test: for every generator u and every x_j | u,
    /// u*x_i/x_j must lie in the ideal for all i < j. Checking generators
    /// suffices because the exchange property is multiplicative.
    pub fn is_zero_borel(&self) -> bool {
        self.gens.iter().all(|u| {
            (1..=self.n).all(|j| {
                if u.exponent(j) == 0 {
                    return true;
                }
                (1..j).all(|i| self.contains(&u.exchange(i, j)))
            })
        })
    }

    /// Mirror of [`MonomialIdeal::is_zero_borel`]: exchanges towards larger
    /// variable indices.
    pub fn is_opposite_zero_borel(&self) -> bool {
        self.gens.iter().all(|u| {
            (1..=self.n).all(|j| {
                if u.exponent(j) == 0 {
                    return true;
                }
                (j + 1..=self.n).all(|i| self.contains(&u.exchange(i, j)))
            })
        })
    }

    /// Count of degree-d monomials of I supported on x1..xk.
    pub fn restrict_maxvar_dim(&self, k: usize, d: usize) -> usize {
        assert!(k >= 1 && k <= self.n, "k out of range");
        enumerate_degree(k, d, &TermOrder::LexTop)
            .iter()
            .map(|m| {
                let mut exps = m.exponents().to_vec();
                exps.resize(self.n, 0);
                Monomial::new(exps)
            })
            .filter(|m| self.contains(m))
            .count()
    }

    /// Whether the monomials of each degree ≤ dmax form an initial segment
    /// in the flavor's order. Decides the "Gin_lex(J) is lex" hypothesis.
    pub fn is_segment_up_to(&self, flavor: LexFlavor, dmax: usize) -> bool {
        let ord = flavor.order();
        (0..=dmax).all(|d| {
            let all = enumerate_degree(self.n, d, &ord);
            let k = all.iter().filter(|m| self.contains(m)).count();
            all[..k].iter().all(|m| self.contains(m))
        })
    }
}

fn hf_rec(n: usize, gens: &[Monomial], d: usize) -> usize {
    if gens.iter().any(|g| g.is_one()) {
        return crate::monomial_count(n, d);
    }
    if gens.is_empty() {
        return 0;
    }
    if n == 1 {
        let a = gens.iter().map(|g| g.exponent(1) as usize).min().unwrap();
        return if d >= a { 1 } else { 0 };
    }
    // split on the exponent of x_n: u = v * x_n^e lies in I iff v is
    // divisible by some generator with x_n-part at most e, truncated
    let mut total = 0;
    for e in 0..=d {
        let rest: Vec<Monomial> = gens
            .iter()
            .filter(|g| (g.exponent(n) as usize) <= e)
            .map(|g| Monomial::new(g.exponents()[..n - 1].to_vec()))
            .collect();
        let rest = minimalize(n - 1, rest);
        total += hf_rec(n - 1, rest.gens(), d - e);
    }
    total
}

/// Reduce a set of monomials to the minimal generators of the ideal they
/// span: drop anything divisible by another element.
pub fn minimalize(n: usize, mut monomials: Vec<Monomial>) -> MonomialIdeal {
    for m in &monomials {
        assert_eq!(m.nvars(), n, "monomial with wrong variable count");
    }
    monomials.sort_by_key(|m| m.degree());
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in monomials {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    // canonical generator ordering: by degree, then descending LexTop
    kept.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    MonomialIdeal { n, gens: kept }
}

/// H(I, d) of a monomial ideal. Spec-level alias for [`MonomialIdeal::hf`].
pub fn hf_monomial(ideal: &MonomialIdeal, d: usize) -> usize {
    ideal.hf(d)
}

/// Macaulay lexification: the unique (opposite-)lex ideal whose Hilbert
/// function matches `table` up to its degree bound. Fails when the counts
/// violate Macaulay growth, i.e. when some segment does not contain all
/// multiples of the previous one.
pub fn lexify(n: usize, table: &HilbertTable, flavor: LexFlavor) -> Result<MonomialIdeal> {
    let ord = flavor.order();
    let dmax = table.dmax();
    let mut gens: Vec<Monomial> = Vec::new();
    let mut prev_segment: Vec<Monomial> = Vec::new();
    for d in 0..=dmax {
        let count = table.get(d);
        let all = enumerate_degree(n, d, &ord);
        if count > all.len() {
            return Err(Error::InvalidHilbertFunction { degree: d });
        }
        let segment: Vec<Monomial> = all[..count].to_vec();
        // every multiple of the previous segment must reappear
        for u in &prev_segment {
            for i in 1..=n {
                let m = u.mul(&Monomial::variable(n, i));
                if !segment.contains(&m) {
                    return Err(Error::InvalidHilbertFunction { degree: d });
                }
            }
        }
        for m in &segment {
            let is_multiple = (1..=n).any(|i| {
                m.try_div(&Monomial::variable(n, i))
                    .map(|q| prev_segment.contains(&q))
                    .unwrap_or(false)
            });
            if !is_multiple {
                gens.push(m.clone());
            }
        }
        prev_segment = segment;
    }
    Ok(minimalize(n, gens))
}

/// Count of degree-d monomials lying in both ideals.
pub fn intersection_hf(a: &MonomialIdeal, b: &MonomialIdeal, d: usize) -> usize {
    assert_eq!(a.nvars(), b.nvars());
    enumerate_degree(a.nvars(), d, &TermOrder::LexTop)
        .iter()
        .filter(|m| a.contains(m) && b.contains(m))
        .count()
}

/// dim (I*P)_d through the Borel direct-sum decomposition
/// IP = ⊕_u I_{(≤ min u)} * u over the minimal generators u of P.
/// Requires I 0-Borel and P opposite 0-Borel.
pub fn borel_product_dim(i: &MonomialIdeal, p: &MonomialIdeal, d: usize) -> Result<usize> {
    if !i.is_zero_borel() {
        return Err(Error::BorelPrecondition("first ideal is not 0-Borel".into()));
    }
    if !p.is_opposite_zero_borel() {
        return Err(Error::BorelPrecondition(
            "second ideal is not opposite 0-Borel".into(),
        ));
    }
    let mut total = 0;
    for u in p.gens() {
        let du = u.degree();
        if du > d {
            continue;
        }
        total += i.restrict_maxvar_dim(u.minvar(), d - du);
    }
    Ok(total)
}

/// Lemma-style dominance: sort both sets descending in RevLexTop and
/// require the i-th of `v` to be ≥ the i-th of `w` throughout.
pub fn rev_dominates(v: &[Monomial], w: &[Monomial]) -> Result<bool> {
    if v.len() != w.len() {
        return Err(Error::Input(format!(
            "set sizes differ: {} vs {}",
            v.len(),
            w.len()
        )));
    }
    let deg = v
        .iter()
        .chain(w.iter())
        .map(|m| m.degree())
        .collect::<Vec<_>>();
    if deg.windows(2).any(|p| p[0] != p[1]) {
        return Err(Error::Input("sets must be of a single common degree".into()));
    }
    let ord = TermOrder::RevLexTop;
    let mut vs = v.to_vec();
    let mut ws = w.to_vec();
    vs.sort_by(|a, b| ord.cmp_unchecked(b, a));
    ws.sort_by(|a, b| ord.cmp_unchecked(b, a));
    Ok(vs
        .iter()
        .zip(&ws)
        .all(|(a, b)| ord.cmp_unchecked(a, b) != std::cmp::Ordering::Less))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(n, gens.iter().map(|e| m(e)).collect())
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(3, &[&[0, 0, 2], &[0, 1, 2]]);
        assert_eq!(i.gens(), &[m(&[0, 0, 2])]);
        // the paper's I is already minimal
        let j = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0]]);
        assert_eq!(j.gens().len(), 4);
    }

    #[test]
    fn hf_of_maximal_ideal_power() {
        // (x1,..,x3)^2: H(d) = C(d+2,2) for d >= 2, else 0
        let gens: Vec<Monomial> = enumerate_degree(3, 2, &TermOrder::LexTop);
        let i = minimalize(3, gens);
        assert_eq!(i.hf(0), 0);
        assert_eq!(i.hf(1), 0);
        assert_eq!(i.hf(2), 6);
        assert_eq!(i.hf(3), 10);
        assert_eq!(i.hf_recursive(3), 10);
    }

    #[test]
    fn hf_paths_agree() {
        let i = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0]]);
        for d in 0..8 {
            assert_eq!(i.hf(d), i.hf_recursive(d), "degree {}", d);
        }
        assert_eq!(i.hf(3), 4);
        // typo-corrected J from the paper
        let j = ideal(3, &[&[0, 0, 3], &[0, 1, 2], &[0, 2, 1], &[0, 3, 0]]);
        assert_eq!(j.hf(3), 4);
        // literal J as printed (x3^2 instead of x3^3) has 5 cubics
        let j_lit = ideal(3, &[&[0, 0, 2], &[0, 1, 2], &[0, 2, 1], &[0, 3, 0]]);
        assert_eq!(j_lit.hf(3), 5);
    }

    #[test]
    fn lexify_paper_segments() {
        let i = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0]]);
        let lex = lexify(3, &i.hilbert_table(3), LexFlavor::Lex).unwrap();
        assert_eq!(
            lex.monomials_of_degree(3),
            vec![m(&[3, 0, 0]), m(&[2, 1, 0]), m(&[2, 0, 1]), m(&[1, 2, 0])]
        );
        let j = ideal(3, &[&[0, 0, 3], &[0, 1, 2], &[0, 2, 1], &[0, 3, 0]]);
        let oplex = lexify(3, &j.hilbert_table(3), LexFlavor::OppositeLex).unwrap();
        let mut got = oplex.monomials_of_degree(3);
        got.sort_by(|a, b| TermOrder::OppositeLex.cmp_unchecked(b, a));
        assert_eq!(
            got,
            vec![m(&[0, 0, 3]), m(&[0, 1, 2]), m(&[1, 0, 2]), m(&[0, 2, 1])]
        );
    }

    #[test]
    fn lexify_fixed_point() {
        let i = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0]]);
        let lex = lexify(3, &i.hilbert_table(5), LexFlavor::Lex).unwrap();
        let again = lexify(3, &lex.hilbert_table(5), LexFlavor::Lex).unwrap();
        assert_eq!(lex, again);
    }

    #[test]
    fn lexify_rejects_bad_growth() {
        // H = (0, 1, 0, ...): a linear form then nothing is impossible
        let t = HilbertTable::new(vec![0, 1, 0]);
        assert!(matches!(
            lexify(2, &t, LexFlavor::Lex),
            Err(Error::InvalidHilbertFunction { degree: 2 })
        ));
    }

    #[test]
    fn borel_tests() {
        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(sq.is_zero_borel());
        assert!(sq.is_opposite_zero_borel());
        let x2 = ideal(2, &[&[0, 1]]);
        assert!(!x2.is_zero_borel());
        assert!(x2.is_opposite_zero_borel());
        // unit and zero ideals are trivially both
        assert!(ideal(2, &[&[0, 0]]).is_zero_borel());
        assert!(MonomialIdeal::zero(2).is_zero_borel());
    }

    #[test]
    fn restrict_maxvar_examples() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(i.restrict_maxvar_dim(2, 1), 2);
        assert_eq!(i.restrict_maxvar_dim(3, 1), i.hf(1));
        assert_eq!(i.restrict_maxvar_dim(1, 1), 1);
    }

    #[test]
    fn borel_product_matches_examples() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let p = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(borel_product_dim(&i, &p, 2).unwrap(), 4);
        // single generator x3: sum collapses to H(I, d-1)
        let p3 = ideal(3, &[&[0, 0, 1]]);
        for d in 1..6 {
            assert_eq!(borel_product_dim(&i, &p3, d).unwrap(), i.hf(d - 1));
        }
        // precondition violation
        let notborel = ideal(3, &[&[0, 1, 0]]);
        assert!(matches!(
            borel_product_dim(&notborel, &p, 2),
            Err(Error::BorelPrecondition(_))
        ));
    }

    #[test]
    fn rev_dominates_cases() {
        let v = vec![m(&[2, 0]), m(&[1, 1])];
        assert!(rev_dominates(&v, &v).unwrap());
        assert!(!rev_dominates(&[m(&[0, 2])], &[m(&[2, 0])]).unwrap());
        assert!(rev_dominates(&[m(&[2, 0])], &[m(&[0, 2])]).unwrap());
        assert!(rev_dominates(&[m(&[2, 0])], &[m(&[1, 1]), m(&[2, 0])]).is_err());
        assert!(rev_dominates(&[m(&[2, 0])], &[m(&[1, 0])]).is_err());
    }

    #[test]
    fn segment_detection() {
        let i = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0]]);
        let lex = lexify(3, &i.hilbert_table(4), LexFlavor::Lex).unwrap();
        assert!(lex.is_segment_up_to(LexFlavor::Lex, 4));
        assert!(!i.is_segment_up_to(LexFlavor::Lex, 3));
        // principal x1^a is lex
        let xa = ideal(3, &[&[2, 0, 0]]);
        assert!(xa.is_segment_up_to(LexFlavor::Lex, 6));
    }

    #[test]
    fn mirror_swaps_borel_flavors() {
        let i = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0]]);
        assert!(i.is_zero_borel());
        let j = i.mirror();
        assert!(j.is_opposite_zero_borel());
        assert_eq!(j.gens().len(), 4);
        for d in 0..6 {
            assert_eq!(i.hf(d), j.hf(d));
        }
    }
}
