//! Randomized realization of "general": seeded sampling of invertible
//! changes of coordinates, triangular factors, generic initial ideals
//! with stability certificates, and the aggregation protocol that turns
//! sampled per-degree statistics into "general g" values.
//!
//! Genericity here is heuristic by construction: the bad locus is a
//! proper closed subvariety, so independent samples agreeing is strong
//! evidence. The extremum direction per statistic comes from
//! semicontinuity (intersection/Tor dimensions are minimized at general
//! g, sums and products maximized). Identical seeds reproduce identical
//! samples bit for bit.

use crate::coords::ChangeOfCoordinates;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::initial_ideal;
use crate::ideal::MonomialIdeal;
use crate::order::TermOrder;
use crate::par;
use crate::poly::Polynomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sampling parameters for everything "general".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericityProtocol {
    pub trials: usize,
    pub seed: u64,
    pub height: u64,
}

impl GenericityProtocol {
    pub fn new(trials: usize, seed: u64, height: u64) -> Result<Self> {
        if trials < 2 {
            return Err(Error::Input("at least two trials are required".into()));
        }
        if height == 0 {
            return Err(Error::Input("height must be positive".into()));
        }
        Ok(GenericityProtocol {
            trials,
            seed,
            height,
        })
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GenericityProtocol { seed, ..*self }
    }
}

impl Default for GenericityProtocol {
    fn default() -> Self {
        GenericityProtocol {
            trials: 3,
            seed: 1,
            height: 10_000,
        }
    }
}

/// Disjoint stream bases so different sampling purposes never collide on
/// the same RNG stream.
pub mod stream {
    pub const STATISTIC: u64 = 1 << 32;
    pub const GIN: u64 = 2 << 32;
    pub const TRIANGULAR: u64 = 3 << 32;
    pub const SCALAR: u64 = 4 << 32;
    pub const FUZZ: u64 = 5 << 32;
}

/// Deterministic seed derivation (splitmix64 round over seed xor salt).
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn rng_for(protocol: &GenericityProtocol, stream_id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(protocol.seed);
    rng.set_stream(stream_id);
    rng
}

const SAMPLING_RETRIES: usize = 100;

/// A random invertible change of coordinates; entries are i.i.d. within
/// the height bound and the matrix is resampled on zero determinant.
pub fn random_coords<F: Field>(
    field: &F,
    n: usize,
    protocol: &GenericityProtocol,
    stream_id: u64,
) -> Result<ChangeOfCoordinates<F>> {
    let mut rng = rng_for(protocol, stream_id);
    for _ in 0..SAMPLING_RETRIES {
        let entries: Vec<Vec<F::Elem>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| field.random_elem(&mut rng, protocol.height))
                    .collect()
            })
            .collect();
        match ChangeOfCoordinates::new(field, entries) {
            Ok(g) => return Ok(g),
            Err(Error::SingularTransform) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingFailed(SAMPLING_RETRIES))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularKind {
    Upper,
    Lower,
}

/// A random invertible triangular transform; the diagonal is resampled
/// until nonzero so the result is invertible by construction.
pub fn random_triangular<F: Field>(
    field: &F,
    n: usize,
    protocol: &GenericityProtocol,
    stream_id: u64,
    kind: TriangularKind,
) -> Result<ChangeOfCoordinates<F>> {
    let mut rng = rng_for(protocol, stream_id);
    let mut entries = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let fill = match kind {
                TriangularKind::Upper => i <= j,
                TriangularKind::Lower => i >= j,
            };
            if !fill {
                continue;
            }
            entries[i][j] = if i == j {
                let mut v = field.random_elem(&mut rng, protocol.height);
                let mut tries = 0;
                while field.is_zero(&v) {
                    v = field.random_elem(&mut rng, protocol.height);
                    tries += 1;
                    if tries > SAMPLING_RETRIES {
                        return Err(Error::SamplingFailed(SAMPLING_RETRIES));
                    }
                }
                v
            } else {
                field.random_elem(&mut rng, protocol.height)
            };
        }
    }
    ChangeOfCoordinates::new(field, entries)
}

/// A random nonzero scalar.
pub fn random_scalar<F: Field>(
    field: &F,
    protocol: &GenericityProtocol,
    stream_id: u64,
) -> Result<F::Elem> {
    let mut rng = rng_for(protocol, stream_id);
    for _ in 0..SAMPLING_RETRIES {
        let v = field.random_elem(&mut rng, protocol.height);
        if !field.is_zero(&v) {
            return Ok(v);
        }
    }
    Err(Error::SamplingFailed(SAMPLING_RETRIES))
}

/// Result of a generic-initial-ideal computation: the agreed ideal plus
/// the evidence recorded with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinCertificate {
    pub result: MonomialIdeal,
    pub agreed: bool,
    pub borel: bool,
    pub trials: usize,
}

impl GinCertificate {
    /// Over char 0 a genuine gin must be (opposite) 0-Borel; a certificate
    /// failing that saw a bad sample and should be treated as unstable.
    pub fn is_valid(&self, characteristic: u64) -> bool {
        self.agreed && (characteristic != 0 || self.borel)
    }
}

/// Gin_ord(I): initial ideal of g(I) for sampled g, repeated over the
/// protocol's trials. All trials must agree on the minimal generators up
/// to `dmax`; disagreement raises [`Error::UnstableGin`].
pub fn gin<F: Field>(
    field: &F,
    n: usize,
    gens: &[Polynomial<F>],
    ord: &TermOrder,
    protocol: &GenericityProtocol,
    dmax: usize,
) -> Result<GinCertificate> {
    let trials: Vec<Result<MonomialIdeal>> = par::map_range(0..protocol.trials, |t| {
        let g = random_coords(field, n, protocol, stream::GIN + t as u64)?;
        let moved = g.apply_all(field, gens);
        initial_ideal(field, n, &moved, ord, Some(dmax))
    });
    let mut results = Vec::with_capacity(trials.len());
    for t in trials {
        results.push(t?);
    }
    let first = results[0].clone();
    if results.iter().any(|r| *r != first) {
        return Err(Error::UnstableGin {
            trials: protocol.trials,
        });
    }
    let borel = if ord.standard_orientation() {
        first.is_zero_borel()
    } else {
        first.is_opposite_zero_borel()
    };
    Ok(GinCertificate {
        result: first,
        agreed: true,
        borel,
        trials: protocol.trials,
    })
}

/// Which extremum realizes the general value of a sampled statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    TakeMin,
    TakeMax,
}

/// Aggregated per-degree statistic: the semicontinuity-correct extremum
/// over all trials, plus a per-degree stability flag (the last two trials
/// agreed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralStatistic {
    pub values: Vec<usize>,
    pub stable: Vec<bool>,
    pub trials: usize,
}

impl GeneralStatistic {
    pub fn all_stable(&self) -> bool {
        self.stable.iter().all(|&s| s)
    }
}

/// Evaluate `stat` on `trials` independently sampled changes of
/// coordinates and fold per degree with the requested extremum.
pub fn general_statistic<F, G>(
    field: &F,
    n: usize,
    protocol: &GenericityProtocol,
    direction: Direction,
    stat: G,
) -> Result<GeneralStatistic>
where
    F: Field,
    G: Fn(&ChangeOfCoordinates<F>) -> Result<Vec<usize>> + Sync + Send,
{
    let tables: Vec<Result<Vec<usize>>> = par::map_range(0..protocol.trials, |t| {
        let g = random_coords(field, n, protocol, stream::STATISTIC + t as u64)?;
        stat(&g)
    });
    let mut rows = Vec::with_capacity(tables.len());
    for t in tables {
        rows.push(t?);
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Internal("ragged statistic tables".into()));
    }
    let mut values = rows[0].clone();
    for row in &rows[1..] {
        for (v, &x) in values.iter_mut().zip(row) {
            *v = match direction {
                Direction::TakeMin => (*v).min(x),
                Direction::TakeMax => (*v).max(x),
            };
        }
    }
    let last = &rows[rows.len() - 1];
    let prev = &rows[rows.len() - 2];
    let stable = last.iter().zip(prev).map(|(a, b)| a == b).collect();
    Ok(GeneralStatistic {
        values,
        stable,
        trials: protocol.trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ideal::minimalize;
    use crate::monomial::Monomial;

    fn q() -> Rationals {
        Rationals
    }

    fn proto(trials: usize, seed: u64) -> GenericityProtocol {
        GenericityProtocol::new(trials, seed, 100).unwrap()
    }

    #[test]
    fn protocol_validation() {
        assert!(GenericityProtocol::new(1, 0, 10).is_err());
        assert!(GenericityProtocol::new(2, 0, 0).is_err());
        assert!(GenericityProtocol::new(2, 0, 1).is_ok());
    }

    #[test]
    fn coords_determinism() {
        let p = proto(2, 42);
        let a = random_coords(&q(), 3, &p, 7).unwrap();
        let b = random_coords(&q(), 3, &p, 7).unwrap();
        assert_eq!(a, b);
        let c = random_coords(&q(), 3, &p, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn coords_invertible_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let p = proto(2, 5);
        for s in 0..50 {
            assert!(random_coords(&f, 3, &p, s).is_ok());
        }
    }

    #[test]
    fn triangular_shapes() {
        let p = proto(2, 9);
        let u = random_triangular(&q(), 3, &p, 0, TriangularKind::Upper).unwrap();
        for i in 0..3 {
            for j in 0..i {
                assert!(q().is_zero(&u.entries()[i][j]));
            }
        }
        let l = random_triangular(&q(), 3, &p, 1, TriangularKind::Lower).unwrap();
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(q().is_zero(&l.entries()[i][j]));
            }
        }
        // n = 1: a single nonzero scalar
        let one = random_triangular(&q(), 1, &p, 2, TriangularKind::Lower).unwrap();
        assert!(!q().is_zero(&one.entries()[0][0]));
    }

    #[test]
    fn gin_of_principal_variable() {
        // I = (x2) in 2 vars: a general image has leading term x1
        let p = proto(3, 11);
        let gens = vec![Polynomial::variable(&q(), 2, 2)];
        let cert = gin(&q(), 2, &gens, &TermOrder::LexTop, &p, 4).unwrap();
        assert_eq!(cert.result.gens(), &[Monomial::new(vec![1, 0])]);
        assert!(cert.is_valid(0));
        // reproducible under a fresh protocol with the same seed
        let again = gin(&q(), 2, &gens, &TermOrder::LexTop, &p, 4).unwrap();
        assert_eq!(cert, again);
    }

    #[test]
    fn gin_hilbert_invariance_and_borel() {
        let p = proto(3, 23);
        let i = minimalize(
            3,
            vec![Monomial::new(vec![0, 2, 0]), Monomial::new(vec![0, 0, 2])],
        );
        let gens = i.to_polynomials(&q());
        let cert = gin(&q(), 3, &gens, &TermOrder::LexTop, &p, 6).unwrap();
        assert!(cert.is_valid(0));
        for d in 0..=6 {
            assert_eq!(cert.result.hf(d), {
                crate::linalg::ideal_piece(&q(), 3, &gens, d).unwrap().dim()
            });
        }
        assert!(cert.result.is_zero_borel());
    }

    #[test]
    fn statistic_constant_is_stable() {
        let p = proto(2, 3);
        let s = general_statistic(&q(), 2, &p, Direction::TakeMin, |_| Ok(vec![5, 7])).unwrap();
        assert_eq!(s.values, vec![5, 7]);
        assert!(s.all_stable());
    }

    #[test]
    fn running_minimum_monotone_in_trials() {
        // TakeMin over more trials can only decrease values
        let p2 = proto(2, 77);
        let p4 = GenericityProtocol::new(4, 77, 100).unwrap();
        let gens = vec![Polynomial::variable(&q(), 2, 1)];
        let f = |g: &ChangeOfCoordinates<Rationals>| {
            let moved = g.apply_all(&q(), &gens);
            (0..=3)
                .map(|d| {
                    crate::linalg::dim_intersection(&q(), 2, &gens, &moved, d).map(|v| v)
                })
                .collect()
        };
        let a = general_statistic(&q(), 2, &p2, Direction::TakeMin, f).unwrap();
        let b = general_statistic(&q(), 2, &p4, Direction::TakeMin, f).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            assert!(y <= x);
        }
    }
}
