//! Property-based invariants for the kernel: order axioms, field axioms,
//! ring-map laws, enumeration, elimination idempotence and Macaulay
//! growth.

use genint_core::field::{Field, PrimeField, Rationals};
use genint_core::ideal::{lexify, minimalize, LexFlavor};
use genint_core::monomial::{enumerate_degree, Monomial};
use genint_core::order::TermOrder;
use genint_core::poly::Polynomial;
use proptest::prelude::*;
use std::cmp::Ordering;

fn monomial_strategy(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn order_strategy() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::LexTop),
        Just(TermOrder::OppositeLex),
        Just(TermOrder::RevLexTop),
        prop::collection::vec(0u64..5, 3)
            .prop_map(|w| TermOrder::weight(w, TermOrder::LexTop)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_axioms(
        ord in order_strategy(),
        u in monomial_strategy(3, 5),
        v in monomial_strategy(3, 5),
        w in monomial_strategy(3, 5),
        m in monomial_strategy(3, 3),
    ) {
        // totality and antisymmetry
        let uv = ord.cmp(&u, &v).unwrap();
        let vu = ord.cmp(&v, &u).unwrap();
        prop_assert_eq!(uv, vu.reverse());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
        // transitivity
        let vw = ord.cmp(&v, &w).unwrap();
        if uv != Ordering::Less && vw != Ordering::Less {
            prop_assert_ne!(ord.cmp(&u, &w).unwrap(), Ordering::Less);
        }
        // multiplicativity
        prop_assert_eq!(ord.cmp(&u.mul(&m), &v.mul(&m)).unwrap(), uv);
    }

    #[test]
    fn enumeration_is_descending_and_complete(
        n in 1usize..4,
        d in 0usize..6,
        ord in order_strategy(),
    ) {
        // weight vectors above are length 3; keep dimensions consistent
        let ord = match ord {
            TermOrder::Weight { weights, tiebreak } => {
                TermOrder::weight(weights[..n.min(3)].iter().copied().chain(std::iter::repeat(1)).take(n).collect(), *tiebreak)
            }
            o => o,
        };
        let ms = enumerate_degree(n, d, &ord);
        prop_assert_eq!(ms.len(), genint_core::monomial_count(n, d));
        for m in &ms {
            prop_assert_eq!(m.degree(), d);
        }
        for pair in ms.windows(2) {
            prop_assert_eq!(ord.cmp(&pair[0], &pair[1]).unwrap(), Ordering::Greater);
        }
        let mut dedup = ms.clone();
        dedup.sort();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), ms.len());
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let f = Rationals;
        let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
        if !f.is_zero(&x) {
            let inv = f.inv(&x).unwrap();
            prop_assert_eq!(f.mul(&x, &inv), f.one());
        }
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 101]), a in 0u64..200, b in 0u64..200, c in 0u64..200) {
        let f = PrimeField::new(p).unwrap();
        let (x, y, z) = (a % p, b % p, c % p);
        prop_assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.add(&x, &f.neg(&x)), 0);
        if x != 0 {
            prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), 1);
        }
    }

    #[test]
    fn polynomial_ring_laws(
        ea in prop::collection::vec((monomial_strategy(2, 3), -3i64..=3), 1..5),
        eb in prop::collection::vec((monomial_strategy(2, 3), -3i64..=3), 1..5),
    ) {
        let f = Rationals;
        let a = Polynomial::from_terms(&f, 2, ea.into_iter().map(|(m, c)| (m, f.from_i64(c))));
        let b = Polynomial::from_terms(&f, 2, eb.into_iter().map(|(m, c)| (m, f.from_i64(c))));
        prop_assert_eq!(a.add(&f, &b), b.add(&f, &a));
        prop_assert_eq!(a.mul(&f, &b), b.mul(&f, &a));
        prop_assert!(a.sub(&f, &a).is_zero());
    }

    #[test]
    fn echelon_is_idempotent(
        rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..5),
    ) {
        let f = Rationals;
        let rows: Vec<Vec<_>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| f.from_i64(v)).collect())
            .collect();
        let e = f.echelonize(rows);
        let again = f.echelonize(e.rows.clone());
        prop_assert_eq!(e.rank, again.rank);
        prop_assert_eq!(e.rows, again.rows);
    }

    #[test]
    fn macaulay_growth_never_fails_on_real_hilbert_functions(
        gens in prop::collection::vec(monomial_strategy(3, 3), 1..5),
    ) {
        let gens: Vec<Monomial> = gens
            .into_iter()
            .map(|m| if m.is_one() { Monomial::variable(3, 1) } else { m })
            .collect();
        let ideal = minimalize(3, gens);
        let table = ideal.hilbert_table(6);
        let lex = lexify(3, &table, LexFlavor::Lex).unwrap();
        let oplex = lexify(3, &table, LexFlavor::OppositeLex).unwrap();
        prop_assert!(lex.is_zero_borel());
        prop_assert!(oplex.is_opposite_zero_borel());
        for d in 0..=6 {
            prop_assert_eq!(lex.hf(d), table.get(d));
            prop_assert_eq!(oplex.hf(d), table.get(d));
        }
        // lexify is a projection: applied to its own output it is fixed
        let again = lexify(3, &lex.hilbert_table(6), LexFlavor::Lex).unwrap();
        prop_assert_eq!(again, lex);
    }

    #[test]
    fn hilbert_function_monotone_under_containment(
        gens in prop::collection::vec(monomial_strategy(3, 3), 1..4),
        extra in monomial_strategy(3, 3),
    ) {
        let gens: Vec<Monomial> = gens
            .into_iter()
            .map(|m| if m.is_one() { Monomial::variable(3, 2) } else { m })
            .collect();
        let small = minimalize(3, gens.clone());
        let mut bigger = gens;
        bigger.push(if extra.is_one() { Monomial::variable(3, 3) } else { extra });
        let big = minimalize(3, bigger);
        for d in 0..=6 {
            prop_assert!(small.hf(d) <= big.hf(d));
        }
    }
}
