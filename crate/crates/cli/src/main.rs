//! `genint`: Hilbert functions of general intersections, products and Tor
//! of graded ideals, over exact arithmetic.
//!
//! Exit codes: 0 all pass/expected, 1 stable unexpected violation,
//! 2 input error, 3 inconclusive results present.

use clap::{Parser, Subcommand, ValueEnum};
use genint_cli::fuzz::{self, FuzzParams, Mix};
use genint_cli::parse::{parse_ideal_file, ParsedFile};
use genint_cli::suites::{self, ExperimentConfig, Suite};
use genint_core::generic::{self, Direction, GenericityProtocol};
use genint_core::ideal::{lexify, LexFlavor};
use genint_core::linalg;
use genint_core::tor::{self, ResolutionChoice};
use genint_core::{Field, FieldSpec, Polynomial, PrimeField, Rationals, TermOrder};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Parser)]
#[command(
    name = "genint",
    about = "Exact kernel and harness for Hilbert functions of general intersections, products and Tor",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Debug, Clone)]
struct ProtocolArgs {
    /// Samples per "general" quantity (at least 2)
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// RNG seed; identical seeds reproduce identical reports
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Coefficient height bound for sampled transforms
    #[arg(long, default_value_t = 10_000)]
    height: u64,
}

impl ProtocolArgs {
    fn build(&self) -> Result<GenericityProtocol, genint_core::Error> {
        GenericityProtocol::new(self.trials, self.seed, self.height)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Hilbert function values of each ideal in the file
    Hilbert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Macaulay lexification (lex or opposite-lex) of each ideal
    Lexify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// lex or oplex
        #[arg(long, default_value = "lex")]
        flavor: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generic initial ideal with its stability certificate
    Gin {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// lex or oplex
        #[arg(long, default_value = "lex")]
        order: String,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Per-degree H(I ∩ g(J), d) for general g (stable minimum)
    Intersect {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Per-degree H(I g(J), d) for general g (stable maximum)
    Product {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded Tor table of (S/I, S/J), optionally with general g applied to J
    Tor {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        imax: usize,
        /// Sample a general change of coordinates on J and take the
        /// per-cell stable minimum
        #[arg(long, default_value_t = false)]
        general: bool,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the theorem-verification suites over the ideals of a file
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        imax: usize,
        /// Degree of the general form for the hpg suite
        #[arg(long, default_value_t = 2)]
        hpg_degree: usize,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seeded random instances through a suite; stable violations are
    /// dumped as replayable ideal files
    Fuzz {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        /// QQ or a prime p (meaning F_p)
        #[arg(long, default_value = "QQ")]
        field: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        imax: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        #[arg(long, default_value_t = 3)]
        max_gen_degree: usize,
        /// monomial, dense or mixed
        #[arg(long, default_value = "mixed")]
        mix: Mix,
        #[arg(long, default_value_t = 2)]
        hpg_degree: usize,
        /// Directory for violation dumps (default: current directory)
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $f = Rationals;
                $body
            }
            FieldSpec::PrimeField(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn realize_all<F: Field>(
    field: &F,
    parsed: &ParsedFile,
) -> anyhow::Result<Vec<(String, Vec<Polynomial<F>>)>> {
    let mut out = Vec::with_capacity(parsed.ideals.len());
    for (name, gens) in &parsed.ideals {
        out.push((name.clone(), parsed.realize(field, gens, name)?));
    }
    Ok(out)
}

fn load(input: &PathBuf) -> anyhow::Result<ParsedFile> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {}", input.display(), e))?;
    Ok(parse_ideal_file(&text)?)
}

fn pick_pair<'a, T>(ideals: &'a [(String, T)]) -> anyhow::Result<(&'a str, &'a T, &'a str, &'a T)> {
    let find = |name: &str| ideals.iter().find(|(id, _)| id == name);
    if let (Some((ia, ga)), Some((ib, gb))) = (find("I"), find("J")) {
        return Ok((ia, ga, ib, gb));
    }
    if ideals.len() >= 2 {
        let (ia, ga) = &ideals[0];
        let (ib, gb) = &ideals[1];
        return Ok((ia, ga, ib, gb));
    }
    anyhow::bail!("need two ideals (I and J, or at least two declarations)")
}

fn run() -> anyhow::Result<i32> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Hilbert {
            input,
            max_degree,
            format,
        } => {
            let parsed = load(&input)?;
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                for (name, gens) in &ideals {
                    let table = suites::hf_any(&f, parsed.n, gens, max_degree)?;
                    for d in 0..=max_degree {
                        match format {
                            Format::Text => println!("H({}, {}) = {}", name, d, table.get(d)),
                            Format::Tsv => println!("{}\t{}\t{}", name, d, table.get(d)),
                        }
                    }
                }
                Ok(0)
            })
        }
        Cmd::Lexify {
            input,
            max_degree,
            flavor,
            format,
        } => {
            let parsed = load(&input)?;
            let flavor = match flavor.as_str() {
                "lex" => LexFlavor::Lex,
                "oplex" => LexFlavor::OppositeLex,
                other => anyhow::bail!("unknown flavor {} (use lex or oplex)", other),
            };
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                for (name, gens) in &ideals {
                    let table = suites::hf_any(&f, parsed.n, gens, max_degree)?;
                    let seg = lexify(parsed.n, &table, flavor)?;
                    match format {
                        Format::Text => {
                            let gens: Vec<String> =
                                seg.gens().iter().map(|m| m.to_string()).collect();
                            println!("{} -> ({})", name, gens.join(", "));
                        }
                        Format::Tsv => {
                            for m in seg.gens() {
                                println!("{}\t{:?}\t{}", name, flavor, m);
                            }
                        }
                    }
                }
                Ok(0)
            })
        }
        Cmd::Gin {
            input,
            max_degree,
            order,
            protocol,
            format,
        } => {
            let parsed = load(&input)?;
            let ord = match order.as_str() {
                "lex" => TermOrder::LexTop,
                "oplex" => TermOrder::OppositeLex,
                other => anyhow::bail!("unknown order {} (use lex or oplex)", other),
            };
            let proto = protocol.build()?;
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                for (name, gens) in &ideals {
                    let cert = generic::gin(&f, parsed.n, gens, &ord, &proto, max_degree)?;
                    match format {
                        Format::Text => {
                            let gens: Vec<String> =
                                cert.result.gens().iter().map(|m| m.to_string()).collect();
                            println!(
                                "Gin({}) = ({})  [agreed={} borel={} trials={}]",
                                name,
                                gens.join(", "),
                                cert.agreed,
                                cert.borel,
                                cert.trials
                            );
                        }
                        Format::Tsv => {
                            for m in cert.result.gens() {
                                println!(
                                    "{}\t{}\t{}\t{}\t{}",
                                    name, m, cert.agreed, cert.borel, cert.trials
                                );
                            }
                        }
                    }
                }
                Ok(0)
            })
        }
        Cmd::Intersect {
            input,
            max_degree,
            protocol,
            format,
        } => {
            let parsed = load(&input)?;
            let proto = protocol.build()?;
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                let (na, ga, nb, gb) = pick_pair(&ideals)?;
                let stat =
                    generic::general_statistic(&f, parsed.n, &proto, Direction::TakeMin, |g| {
                        let moved = g.apply_all(&f, gb);
                        (0..=max_degree)
                            .map(|d| linalg::dim_intersection(&f, parsed.n, ga, &moved, d))
                            .collect()
                    })?;
                emit_statistic(format, na, nb, "intersect", &stat);
                Ok(if stat.all_stable() { 0 } else { 3 })
            })
        }
        Cmd::Product {
            input,
            max_degree,
            protocol,
            format,
        } => {
            let parsed = load(&input)?;
            let proto = protocol.build()?;
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                let (na, ga, nb, gb) = pick_pair(&ideals)?;
                let stat =
                    generic::general_statistic(&f, parsed.n, &proto, Direction::TakeMax, |g| {
                        let moved = g.apply_all(&f, gb);
                        (0..=max_degree)
                            .map(|d| linalg::dim_product(&f, parsed.n, ga, &moved, d))
                            .collect()
                    })?;
                emit_statistic(format, na, nb, "product", &stat);
                Ok(if stat.all_stable() { 0 } else { 3 })
            })
        }
        Cmd::Tor {
            input,
            max_degree,
            imax,
            general,
            protocol,
            format,
        } => {
            let parsed = load(&input)?;
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                let (na, ga, nb, gb) = pick_pair(&ideals)?;
                let label = format!("{}&{}", na, nb);
                if general {
                    let proto = protocol.build()?;
                    let cfg = ExperimentConfig {
                        dmax: max_degree,
                        imax,
                        protocol: proto,
                    };
                    let (vals, stable) = suites::sampled_tor(&f, parsed.n, ga, gb, &cfg)?;
                    for (i, row) in vals.iter().enumerate() {
                        for (d, v) in row.iter().enumerate() {
                            match format {
                                Format::Text => println!(
                                    "Tor_{}({})_{} = {}{}",
                                    i,
                                    label,
                                    d,
                                    v,
                                    if stable[i][d] { "" } else { " (unstable)" }
                                ),
                                Format::Tsv => {
                                    println!("{}\t{}\t{}\t{}\t{}", label, i, d, v, stable[i][d])
                                }
                            }
                        }
                    }
                } else {
                    let table = tor::tor_table(
                        &f,
                        parsed.n,
                        ga,
                        gb,
                        imax,
                        max_degree,
                        ResolutionChoice::Auto,
                    )?;
                    for i in 0..=imax {
                        for d in 0..=max_degree {
                            match format {
                                Format::Text => {
                                    println!("Tor_{}({})_{} = {}", i, label, d, table.get(i, d))
                                }
                                Format::Tsv => println!(
                                    "{}\t{}\t{}\t{}\ttrue",
                                    label,
                                    i,
                                    d,
                                    table.get(i, d)
                                ),
                            }
                        }
                    }
                }
                Ok(0)
            })
        }
        Cmd::Verify {
            input,
            suite,
            max_degree,
            imax,
            hpg_degree,
            protocol,
            format,
        } => {
            let parsed = load(&input)?;
            let cfg = ExperimentConfig {
                dmax: max_degree,
                imax,
                protocol: protocol.build()?,
            };
            with_field!(parsed.field, |f| {
                let ideals = realize_all(&f, &parsed)?;
                let report = suites::run_suites(&f, parsed.n, &ideals, suite, hpg_degree, &cfg)?;
                emit_report(format, &report)?;
                Ok(report.exit_code())
            })
        }
        Cmd::Fuzz {
            suite,
            count,
            nvars,
            field,
            max_degree,
            imax,
            max_gens,
            max_gen_degree,
            mix,
            hpg_degree,
            dump_dir,
            protocol,
            format,
        } => {
            let spec = match field.as_str() {
                "QQ" => FieldSpec::Rationals,
                p => FieldSpec::prime_field(
                    p.parse::<u64>()
                        .map_err(|_| anyhow::anyhow!("field must be QQ or a prime"))?,
                )?,
            };
            let cfg = ExperimentConfig {
                dmax: max_degree,
                imax,
                protocol: protocol.build()?,
            };
            let params = FuzzParams {
                count,
                n: nvars,
                max_gens,
                max_degree: max_gen_degree,
                mix,
            };
            let dump = dump_dir.unwrap_or_else(|| PathBuf::from("."));
            with_field!(spec, |f| {
                let report =
                    fuzz::run_fuzz(&f, suite, &params, &cfg, hpg_degree, Some(dump.as_path()))?;
                emit_report(format, &report)?;
                Ok(report.exit_code())
            })
        }
    }
}

fn emit_statistic(format: Format, na: &str, nb: &str, what: &str, stat: &generic::GeneralStatistic) {
    let label = format!("{}&{}", na, nb);
    for (d, v) in stat.values.iter().enumerate() {
        match format {
            Format::Text => println!(
                "{}({})_{} = {}{}",
                what,
                label,
                d,
                v,
                if stat.stable[d] { "" } else { " (unstable)" }
            ),
            Format::Tsv => println!("{}\t{}\t{}\t{}\t{}", label, what, d, v, stat.stable[d]),
        }
    }
}

fn emit_report(format: Format, report: &genint_cli::VerificationReport) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Text => report.write_text(&mut out)?,
        Format::Tsv => {
            report.write_tsv(&mut out)?;
            let mut err = std::io::stderr().lock();
            use std::io::Write as _;
            writeln!(
                err,
                "# {} instances, {} violations, {} inconclusive",
                report.instances.len(),
                report.violations(),
                report.inconclusive()
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
