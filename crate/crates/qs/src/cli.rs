//! Command-line interface: argument parsing, subcommands and exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use qs_core::hermite::{hermite_basis_of_idempotent, Domain};
use qs_core::horrocks::{horrocks_with_trace, HorrocksInput, HorrocksTrace};
use qs_core::patching::{bezout_combine, specialize_to_zero};
use qs_core::solver::{complete_unimodular_row, rational_point_search, solve_with_log, PointSearch, SolverConfig};
use qs_core::{Error, Mat, MultiPoly};

use crate::json::{self, *};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_UNSUPPORTED: u8 = 2;
pub const EXIT_PARSE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "qs", version, about = "Free bases of projective modules over Q[x1, ..., xn]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Free certificate (A, B) of an idempotent matrix E.
    Solve {
        /// Matrix JSON for E.
        input: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Local certificates and Bézout data, needed for three or more variables.
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Polynomial certificate over R_m[x] from one over the monic localization.
    Horrocks {
        /// JSON with E, the variable x and optionally A, B.
        #[arg(long)]
        input: PathBuf,
        /// Point JSON for the maximal ideal m.
        #[arg(long)]
        point: PathBuf,
        /// Include the intermediate matrices.
        #[arg(long)]
        trace: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Combine translation certificates with Bézout coefficients.
    Patch {
        #[arg(long, num_args = 1.., required = true)]
        certs: Vec<PathBuf>,
        #[arg(long)]
        bezout: PathBuf,
        /// Emit the certificate E^(x↦0) ~ E instead of the combined translation.
        #[arg(long)]
        specialize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Invertible matrix with the given unimodular first row.
    CompleteRow {
        input: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate file; exits 1 at the first failing identity.
    Verify { input: PathBuf },
    /// Rational common zero of univariate generators.
    FindPoint {
        input: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

/// Exit code for a failed command.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return core_exit_code(e);
        }
        if cause.is::<serde_json::Error>() || cause.is::<std::io::Error>() {
            return EXIT_PARSE;
        }
    }
    EXIT_VERIFY
}

fn core_exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::NonRationalLocus(_)
        | Error::UnsupportedDimension(_)
        | Error::NotUnimodular
        | Error::NotIdempotent
        | Error::NotLocal(_)
        | Error::InvalidInput(_)
        | Error::UnknownVariable(_)
        | Error::ContextMismatch
        | Error::ZeroDenominator
        | Error::DimensionMismatch { .. }
        | Error::MismatchedE
        | Error::NotBezout
        | Error::NotUnitTranslation
        | Error::DenominatorInIdeal => EXIT_UNSUPPORTED,
        _ => EXIT_VERIFY,
    }
}

fn read<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write<T: Serialize>(value: &T, output: Option<&Path>) -> Result<()> {
    let text = json::to_string(value);
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<ConfigJson> {
    Ok(match path {
        Some(p) => read(p)?,
        None => ConfigJson::default(),
    })
}

/// Runs a command; `Ok` carries the exit code.
pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Solve { input, config, cover, output } => {
            solve(input, config.as_deref(), cover.as_deref(), output.as_deref())
        }
        Command::Horrocks { input, point, trace, output } => horrocks(input, point, *trace, output.as_deref()),
        Command::Patch { certs, bezout, specialize, output } => patch(certs, bezout, *specialize, output.as_deref()),
        Command::CompleteRow { input, config, output } => {
            let v = poly_mat_from_json(&read(input)?, None)?;
            let cfg = load_config(config.as_deref())?.solver_config()?;
            write(&poly_mat_to_json(&complete_unimodular_row(&v, &cfg)?), output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Verify { input } => verify(input),
        Command::FindPoint { input, config } => find_point(input, config.as_deref()),
    }
}

fn solve(input: &Path, config: Option<&Path>, cover: Option<&Path>, output: Option<&Path>) -> Result<u8> {
    let e = poly_mat_from_json(&read(input)?, None)?;
    let cfg = load_config(config)?;
    let cover = match cover {
        Some(p) => Some(cover_from_json(&read(p)?, &e)?),
        None => None,
    };
    let (cert, log) = solve_with_log(&e, &cfg.solver_config()?, cover.as_ref())?;
    if cfg.trace {
        for r in &log {
            let point: Vec<String> = r.point.iter().map(|(v, c)| format!("{v} = {c}")).collect();
            eprintln!("patch {} at {}: denominator {}", r.var, point.join(", "), r.denominator);
        }
    }
    write(&certificate_to_json(&cert.to_equivalence()), output)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TraceJson {
    #[serde(rename = "E_bar")]
    e_bar: MatJson,
    #[serde(rename = "C_hat")]
    c_hat: MatJson,
    #[serde(rename = "D_hat")]
    d_hat: MatJson,
    #[serde(rename = "U")]
    u: MatJson,
    #[serde(rename = "A1")]
    a1: MatJson,
    #[serde(rename = "B1")]
    b1: MatJson,
    #[serde(rename = "F1")]
    f1: MatJson,
    #[serde(rename = "V")]
    v: MatJson,
    det_v: EntryJson,
    #[serde(rename = "G2")]
    g2: MatJson,
}

impl TraceJson {
    fn new(t: &HorrocksTrace, var: &str) -> Self {
        let f = |m: &Mat<qs_core::Fraction>| fraction_mat_to_json(m, Some(var));
        TraceJson {
            e_bar: poly_mat_to_json(&t.e_bar),
            c_hat: poly_mat_to_json(&t.c_hat),
            d_hat: poly_mat_to_json(&t.d_hat),
            u: f(&t.unit.matrix()),
            a1: f(&t.a1),
            b1: f(&t.b1),
            f1: f(&t.f1),
            v: f(&t.v),
            det_v: fraction_to_json(&t.det_v, Some(var)),
            g2: f(&t.g2),
        }
    }
}

#[derive(Serialize)]
struct TracedCertificate {
    certificate: CertificateJson,
    trace: TraceJson,
}

fn horrocks(input: &Path, point: &Path, trace: bool, output: Option<&Path>) -> Result<u8> {
    let j: HorrocksInputJson = read(input)?;
    let e = poly_mat_from_json(&j.e, None)?;
    let ctx = e.ctx().clone();
    let var = ctx.index_of(&j.var)?;
    let p: PointJson = read(point)?;
    let ideal = point_from_map(&p.point, &ctx)?;
    let (a, b) = match (&j.a, &j.b) {
        (Some(a), Some(b)) => (fraction_mat_from_json(a, Some(&ctx))?, fraction_mat_from_json(b, Some(&ctx))?),
        (None, None) => {
            let domain = match ideal.vars()[..] {
                [y] => Domain::Poly(y),
                _ => Domain::Field,
            };
            hermite_basis_of_idempotent(&e.to_fractions(), domain)?
        }
        _ => return Err(Error::InvalidInput("give both A and B or neither".into()).into()),
    };
    let (cert, t) = horrocks_with_trace(&HorrocksInput { e, a, b, ideal, var })?;
    let certificate = fraction_certificate_to_json(&cert, Some(&j.var));
    if trace {
        write(&TracedCertificate { certificate, trace: TraceJson::new(&t, &j.var) }, output)?;
    } else {
        write(&certificate, output)?;
    }
    Ok(EXIT_OK)
}

fn patch(certs: &[PathBuf], bezout: &Path, specialize: bool, output: Option<&Path>) -> Result<u8> {
    let certs = certs
        .iter()
        .map(|p| Ok(translation_from_json(&read(p)?)?))
        .collect::<Result<Vec<_>>>()?;
    let ctx = certs[0].ctx().clone();
    let b: BezoutJson = read(bezout)?;
    let us = b
        .coefficients
        .iter()
        .map(|u| poly_from_json(u, Some(&ctx)))
        .collect::<qs_core::Result<Vec<MultiPoly>>>()?;
    let one = bezout_combine(&certs, &us)?;
    if specialize {
        write(&certificate_to_json(&specialize_to_zero(&one)?), output)?;
    } else {
        write(&translation_to_json(&one), output)?;
    }
    Ok(EXIT_OK)
}

fn verify(input: &Path) -> Result<u8> {
    let value: serde_json::Value = read(input)?;
    let report = if value.get("j").is_some() {
        let t = translation_from_json(&serde_json::from_value(value).context("parsing translation certificate")?)?;
        let report = t.to_equivalence().verify();
        if report.passed() {
            t.verify()?;
        }
        report
    } else {
        let j: CertificateJson = serde_json::from_value(value).context("parsing certificate")?;
        certificate_from_json(&j)?.verify()
    };
    println!("{report}");
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY })
}

#[derive(Serialize)]
struct UnitJson {
    unit: bool,
}

fn find_point(input: &Path, config: Option<&Path>) -> Result<u8> {
    let j: GeneratorsJson = read(input)?;
    let first = j.generators.first().ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    let ctx = json::context(&first.vars)?;
    let gens = j
        .generators
        .iter()
        .map(|g| poly_from_json(g, Some(&ctx)))
        .collect::<qs_core::Result<Vec<_>>>()?;
    let mut vars: Vec<usize> = gens.iter().flat_map(MultiPoly::support).collect();
    vars.sort_unstable();
    vars.dedup();
    let cfg: SolverConfig = load_config(config)?.solver_config()?;
    match rational_point_search(&ctx, &vars, &gens, &cfg)? {
        PointSearch::Unit => write(&UnitJson { unit: true }, None)?,
        PointSearch::Point(p) => write(&point_to_json(&p), None)?,
    }
    Ok(EXIT_OK)
}
