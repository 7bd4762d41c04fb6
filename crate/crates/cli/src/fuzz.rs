//! Seeded fuzzing: a deterministic stream of random instances pushed
//! through the verification suites. Any instance whose report contains a
//! stable violation is dumped as a replayable ideal file; replaying it
//! with the same configuration reproduces the report bit for bit.

use crate::report::VerificationReport;
use crate::suites::{self, ExperimentConfig, Suite};
use genint_core::generic::derive_seed;
use genint_core::ideal::{lexify, minimalize, LexFlavor, MonomialIdeal};
use genint_core::monomial::enumerate_degree;
use genint_core::{par, Field, Monomial, Polynomial, Result, TermOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mix {
    Monomial,
    Dense,
    Mixed,
}

impl std::str::FromStr for Mix {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "monomial" => Ok(Mix::Monomial),
            "dense" => Ok(Mix::Dense),
            "mixed" => Ok(Mix::Mixed),
            other => Err(format!("unknown mix {}", other)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FuzzParams {
    pub count: usize,
    pub n: usize,
    pub max_gens: usize,
    pub max_degree: usize,
    pub mix: Mix,
}

impl Default for FuzzParams {
    fn default() -> Self {
        FuzzParams {
            count: 20,
            n: 3,
            max_gens: 4,
            max_degree: 3,
            mix: Mix::Mixed,
        }
    }
}

pub fn random_monomial_ideal(rng: &mut impl Rng, n: usize, max_gens: usize, max_degree: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(k);
    for _ in 0..k {
        let d = rng.gen_range(1..=max_degree);
        let mut exps = vec![0u32; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        gens.push(Monomial::new(exps));
    }
    minimalize(n, gens)
}

/// A random 0-Borel ideal: Borel-close a random monomial ideal.
pub fn random_borel_ideal(rng: &mut impl Rng, n: usize, max_gens: usize, max_degree: usize) -> MonomialIdeal {
    let seed = random_monomial_ideal(rng, n, max_gens, max_degree);
    let mut monomials: Vec<Monomial> = seed.gens().to_vec();
    let mut i = 0;
    while i < monomials.len() {
        let m = monomials[i].clone();
        for j in 2..=n {
            if m.exponent(j) > 0 {
                for k in 1..j {
                    let ex = m.exchange(k, j);
                    if !monomials.contains(&ex) {
                        monomials.push(ex);
                    }
                }
            }
        }
        i += 1;
    }
    minimalize(n, monomials)
}

/// Dense homogeneous form with small random coefficients; never zero.
pub fn random_dense_form<F: Field>(
    field: &F,
    rng: &mut impl Rng,
    n: usize,
    degree: usize,
) -> Polynomial<F> {
    loop {
        let mut p = Polynomial::zero(n);
        for m in enumerate_degree(n, degree, &TermOrder::LexTop) {
            let c = field.random_elem(rng, 5);
            p = p.add(field, &Polynomial::term(field, m, c));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random ideal generators according to the mix.
pub fn random_ideal<F: Field>(
    field: &F,
    rng: &mut impl Rng,
    n: usize,
    params: &FuzzParams,
) -> Vec<Polynomial<F>> {
    let dense = match params.mix {
        Mix::Monomial => false,
        Mix::Dense => true,
        Mix::Mixed => rng.gen_bool(0.3),
    };
    if dense {
        let k = rng.gen_range(1..=2usize);
        (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=params.max_degree);
                random_dense_form(field, rng, n, d)
            })
            .collect()
    } else {
        random_monomial_ideal(rng, n, params.max_gens, params.max_degree).to_polynomials(field)
    }
}

/// J-ideals from families that keep the "Gin_lex(J) is lex" hypothesis
/// satisfiable: principal forms and lex ideals. The hypothesis is still
/// re-checked at runtime by the suites.
pub fn random_hypothesis_j<F: Field>(
    field: &F,
    rng: &mut impl Rng,
    n: usize,
    max_degree: usize,
) -> Vec<Polynomial<F>> {
    match rng.gen_range(0..10) {
        0..=4 => {
            let d = rng.gen_range(1..=max_degree);
            vec![random_dense_form(field, rng, n, d)]
        }
        5..=6 => {
            let mut exps = vec![0u32; n];
            exps[rng.gen_range(0..n)] = rng.gen_range(1..=max_degree) as u32;
            vec![Polynomial::term(field, Monomial::new(exps), field.one())]
        }
        _ => {
            let seed = random_monomial_ideal(rng, n, 3, max_degree);
            let table = seed.hilbert_table(max_degree + 1);
            let lex = lexify(n, &table, LexFlavor::Lex).expect("ideal Hilbert function");
            lex.to_polynomials(field)
        }
    }
}

pub fn instance_id(seed: u64, k: usize) -> String {
    format!("fuzz-{}-{:04}", seed, k)
}

fn dump_instance<F: Field>(
    field: &F,
    dir: &Path,
    id: &str,
    suite: Suite,
    n: usize,
    cfg: &ExperimentConfig,
    gens_i: &[Polynomial<F>],
    gens_j: Option<&[Polynomial<F>]>,
) -> std::io::Result<PathBuf> {
    use std::fmt::Write as _;
    let mut text = String::new();
    writeln!(text, "# dumped by genint fuzz; replay with `genint verify`").unwrap();
    writeln!(
        text,
        "# suite={:?} seed={} trials={} height={} dmax={} imax={}",
        suite, cfg.protocol.seed, cfg.protocol.trials, cfg.protocol.height, cfg.dmax, cfg.imax
    )
    .unwrap();
    writeln!(text, "ring {}", n).unwrap();
    match field.characteristic() {
        0 => writeln!(text, "field QQ").unwrap(),
        p => writeln!(text, "field Fp {}", p).unwrap(),
    }
    let fmt_ideal = |gens: &[Polynomial<F>]| -> String {
        if gens.is_empty() {
            "0".to_string()
        } else {
            gens.iter()
                .map(|g| g.canonical_string(field))
                .collect::<Vec<_>>()
                .join(", ")
        }
    };
    writeln!(text, "I: {}", fmt_ideal(gens_i)).unwrap();
    if let Some(gj) = gens_j {
        writeln!(text, "J: {}", fmt_ideal(gj)).unwrap();
    }
    let path = dir.join(format!("violation-{}.ideal", id));
    std::fs::write(&path, text)?;
    Ok(path)
}

/// Run `params.count` seeded instances through the suite. Instances are
/// generated from the protocol seed, evaluated in parallel, and reported
/// in instance order.
pub fn run_fuzz<F: Field>(
    field: &F,
    suite: Suite,
    params: &FuzzParams,
    cfg: &ExperimentConfig,
    hpg_degree: usize,
    dump_dir: Option<&Path>,
) -> Result<VerificationReport> {
    let n = params.n;
    let seed = cfg.protocol.seed;
    type Instance<F> = (Vec<Polynomial<F>>, Option<Vec<Polynomial<F>>>);
    let gen_instance = |k: usize| -> Instance<F> {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, k as u64));
        let gens_i = random_ideal(field, &mut rng, n, params);
        let gens_j = match suite {
            Suite::Green | Suite::Hpg => None,
            Suite::Intersection | Suite::Tor => {
                Some(random_hypothesis_j(field, &mut rng, n, params.max_degree))
            }
            Suite::Product | Suite::GinBounds | Suite::All => {
                Some(random_ideal(field, &mut rng, n, params))
            }
        };
        (gens_i, gens_j)
    };
    let results = par::map_range(0..params.count, |k| {
        let id = instance_id(seed, k);
        let (gens_i, gens_j) = gen_instance(k);
        let reports = match suite {
            Suite::Green => verify_single(field, n, &id, &gens_i, cfg, |f, n, i, g, c| {
                suites::verify_green(f, n, i, g, c)
            }),
            Suite::Hpg => verify_single(field, n, &id, &gens_i, cfg, |f, n, i, g, c| {
                suites::verify_hpg(f, n, i, g, hpg_degree, c)
            }),
            Suite::Intersection => {
                let gj = gens_j.as_ref().expect("pair suite");
                suites::verify_intersection(field, n, &id, &gens_i, gj, cfg).map(|r| vec![r])
            }
            Suite::Product => {
                let gj = gens_j.as_ref().expect("pair suite");
                suites::verify_product(field, n, &id, &gens_i, gj, cfg).map(|r| vec![r])
            }
            Suite::GinBounds => {
                let gj = gens_j.as_ref().expect("pair suite");
                suites::verify_gin_bounds(field, n, &id, &gens_i, gj, cfg)
            }
            Suite::Tor => {
                let gj = gens_j.as_ref().expect("pair suite");
                suites::verify_tor(field, n, &id, &gens_i, gj, cfg)
            }
            Suite::All => (|| {
                let gj = gens_j.as_ref().expect("pair suite");
                let mut all = vec![
                    suites::verify_green(field, n, &id, &gens_i, cfg)?,
                    suites::verify_hpg(field, n, &id, &gens_i, hpg_degree, cfg)?,
                    suites::verify_intersection(field, n, &id, &gens_i, gj, cfg)?,
                    suites::verify_product(field, n, &id, &gens_i, gj, cfg)?,
                ];
                all.extend(suites::verify_gin_bounds(field, n, &id, &gens_i, gj, cfg)?);
                all.extend(suites::verify_tor(field, n, &id, &gens_i, gj, cfg)?);
                Ok(all)
            })()
        };
        (k, gens_i, gens_j, reports)
    });
    let mut report = VerificationReport::default();
    for (k, gens_i, gens_j, res) in results {
        let reports = res?;
        let violated = reports.iter().any(|r| r.has_violation());
        if violated {
            if let Some(dir) = dump_dir {
                let id = instance_id(seed, k);
                dump_instance(field, dir, &id, suite, n, cfg, &gens_i, gens_j.as_deref())
                    .map_err(|e| genint_core::Error::Input(format!("dump failed: {}", e)))?;
            }
        }
        report.extend(reports);
    }
    Ok(report)
}

fn verify_single<F: Field, G>(
    field: &F,
    n: usize,
    id: &str,
    gens: &[Polynomial<F>],
    cfg: &ExperimentConfig,
    f: G,
) -> Result<Vec<crate::report::InstanceReport>>
where
    G: Fn(&F, usize, &str, &[Polynomial<F>], &ExperimentConfig) -> Result<crate::report::InstanceReport>,
{
    f(field, n, id, gens, cfg).map(|r| vec![r])
}
