//! Command-line front end. Every subcommand writes byte-deterministic
//! output for a fixed flag set (the one exception is the `runtime_ms`
//! diagnostic field in raster summaries). Exit codes: 0 success, 2 on
//! precondition or parse errors, 3 on resource caps.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::algebraic::{
    algebraic_number, catalog, classify, AlgebraicNumber, IntPolynomial, RootSelector,
};
use crate::attractor::{polygon_attractor, render_attractor, PolygonForm};
use crate::base::{Alphabet, DigitString, Disc, Parameter, Window};
use crate::bernoulli::{
    continuous_density_intervals, density_histogram, fourier_nu, garsia_separation_with_cap,
    pisot_decay_scan, singularity_witness, transversality_bound, typical_region_report,
};
use crate::caps;
use crate::certificates::{
    certify_disc, cover_params, make_cover_certificate, max_certified_radius,
    omega_cover_params, reverify_cover_certificate, reverify_disc_certificate, CertifyOutcome,
    CoverCertificate, DiscCertificate, OmegaCoverOutcome, TranslateSet, COVER_CERTIFICATE_KIND,
    DISC_CERTIFICATE_KIND,
};
use crate::connectivity::{m0_roots, render_mset, MsetRenderOptions, Region};
use crate::error::Error;

#[derive(Parser)]
#[command(
    name = "mlocus",
    about = "Attractors of {λz−1, λz+1}, their connectivity locus, and complex Bernoulli convolutions",
    after_help = "Output paths are taken as given unless the MLOCUS_OUT_DIR environment \
                  variable is set, in which case relative paths are placed under it. \
                  Hard ceilings: exclusion depth 64, polynomial enumeration degree 16, \
                  enumeration level 22, 100000 Fourier terms."
)]
pub struct Cli {
    /// Worker threads (default: available parallelism). Output bytes do not
    /// depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rasterize the connectivity locus over a window (P5 + JSON summary).
    RenderMset(RenderMsetArgs),
    /// Rasterize an attractor over a window.
    RenderAttractor(RenderAttractorArgs),
    /// Exact polygon attractor for a rational-angle parameter.
    Polygon(PolygonArgs),
    /// Certify that a disc around a polynomial root lies in the locus.
    CertifyInterior(CertifyArgs),
    /// Largest certified disc radius around a polynomial root.
    MaxRadius(MaxRadiusArgs),
    /// Check a covering rectangle (conditions + exact geometry).
    CoverCheck(CoverCheckArgs),
    /// Search for a two-translate covering rectangle.
    OmegaCover(OmegaCoverArgs),
    /// Classify an algebraic number (Pisot/Garsia kinds).
    ClassifyNumber(ClassifyArgs),
    /// Built-in catalog of algebraic numbers with classifications.
    Catalog(CatalogArgs),
    /// Partial products of the Fourier transform of the convolution (CSV).
    FourierScan(FourierScanArgs),
    /// Non-decay witness of the Fourier transform at a Pisot reciprocal.
    PisotWitness(PisotWitnessArgs),
    /// Cardinality and separation of level-n sums at a Garsia reciprocal.
    GarsiaSeparation(GarsiaArgs),
    /// Empirical density histogram of level-n sums.
    DensityHistogram(DensityArgs),
    /// Almost-sure dimension/density statements applying at a parameter.
    Regions(RegionsArgs),
    /// Root-count radius bound for [−1,1]-coefficient power series.
    Transversality(TransversalityArgs),
    /// Re-check a serialized certificate bit for bit.
    VerifyCertificate(VerifyArgs),
    /// Zeros of {0,±1} polynomials with constant term 1 in a region (CSV).
    M0Roots(M0Args),
}

#[derive(Args)]
struct RenderMsetArgs {
    /// Window as x0,x1,y0,y1.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Window,
    /// Resolution as W,H.
    #[arg(long, value_parser = parse_resolution)]
    res: (u32, u32),
    /// Branch-and-bound depth (ceiling 64).
    #[arg(long, default_value_t = caps::DEFAULT_EXCLUDE_DEPTH)]
    depth: u32,
    /// Degree of the polynomial-root witness pass (0 disables, ceiling 16).
    #[arg(long, default_value_t = caps::DEFAULT_WITNESS_M0_DEGREE)]
    witness_degree: u32,
    /// Per-pixel cap on surviving prefixes.
    #[arg(long, default_value_t = caps::DEFAULT_RENDER_SURVIVOR_CAP)]
    survivor_cap: u64,
    /// Output image path (P5).
    #[arg(long, default_value = "mset.pgm")]
    out: PathBuf,
    /// Summary JSON path; defaults to the image path with extension .json.
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args)]
struct RenderAttractorArgs {
    /// Parameter as re,im.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Complex64,
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Window,
    #[arg(long, value_parser = parse_resolution)]
    res: (u32, u32),
    /// Subdivision depth.
    #[arg(long, default_value_t = 16)]
    depth: u32,
    /// Digit alphabet: pm = {±1}, zpm = {−1,0,1}.
    #[arg(long, value_enum, default_value_t = AlphabetArg::Pm)]
    alphabet: AlphabetArg,
    #[arg(long, value_enum, default_value_t = FormatArg::P5)]
    format: FormatArg,
    #[arg(long, default_value = "attractor.pgm")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Pm,
    Zpm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    P5,
    P6,
}

#[derive(Args)]
struct PolygonArgs {
    /// Radius r of λ = r·e^{iπm/n} (half-turn) or r·e^{2πim/(2n+1)}.
    #[arg(long)]
    r: f64,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = FormArg::HalfTurn)]
    form: FormArg,
    /// Optional JSON output path (otherwise stdout only).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    HalfTurn,
    OddFullTurn,
}

#[derive(Args)]
struct CertifyArgs {
    /// Constant-first coefficient list "[1,0,1,1,-1,-1,0,1]" with all
    /// entries in {−1,0,1} and constant 1.
    #[arg(long)]
    poly: String,
    /// Select the root nearest to this point (default: the first root in
    /// the interior of the covering region with Im > 0).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    center: Option<Complex64>,
    /// Disc radius to certify.
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value = "disc-certificate.json")]
    out: PathBuf,
}

#[derive(Args)]
struct MaxRadiusArgs {
    #[arg(long)]
    poly: String,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    center: Option<Complex64>,
}

#[derive(Args)]
struct CoverCheckArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Complex64,
    /// Rectangle half-width; computed from the closed form when absent.
    #[arg(long, requires = "b")]
    a: Option<f64>,
    /// Rectangle half-height.
    #[arg(long, requires = "a")]
    b: Option<f64>,
    /// Number of translates: 3 for {0,±1}, 2 for {±1}.
    #[arg(long, default_value_t = 3)]
    translates: u8,
    /// Optional Monte-Carlo cross-check sample count.
    #[arg(long)]
    mc_samples: Option<u64>,
    /// Seed for the Monte-Carlo cross-check.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OmegaCoverArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Complex64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Polynomial: text form "z^3 - z^2 + 1" or list "[1,0,-1,1]".
    #[arg(long)]
    poly: String,
    /// Root selector: "largest" or a 0-based index into the roots sorted
    /// by (modulus, argument).
    #[arg(long, default_value = "largest")]
    root: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FourierScanArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Complex64,
    /// Frequency as re,im.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    xi: Complex64,
    /// Number of product terms (ceiling 100000).
    #[arg(long, default_value_t = 64)]
    terms: u32,
    #[arg(long, default_value = "fourier.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct PisotWitnessArgs {
    /// Minimal polynomial of the complex Pisot number θ.
    #[arg(long)]
    poly: String,
    /// Select the root nearest to this point (default: the lower-half root
    /// of largest modulus, so that λ = 1/θ is in the upper half plane).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    root_near: Option<Complex64>,
    #[arg(long, default_value_t = 25)]
    n_max: u32,
    /// Fixed truncation for the Fourier products (default: automatic).
    #[arg(long)]
    terms: Option<u32>,
    #[arg(long, default_value = "witness.csv")]
    out: PathBuf,
    /// Optional JSON summary.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Optional CSV of the distance scan dist(2Re θⁿ, ℤ).
    #[arg(long)]
    decay_csv: Option<PathBuf>,
}

#[derive(Args)]
struct GarsiaArgs {
    /// Minimal polynomial of the complex Garsia number θ (constant ±2).
    #[arg(long)]
    poly: String,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    root_near: Option<Complex64>,
    /// Verify levels 1..=n.
    #[arg(long, default_value_t = 12)]
    n: u32,
    /// Level cap (hard ceiling 22).
    #[arg(long, default_value_t = caps::DEFAULT_LEVEL_CAP)]
    cap: u32,
    #[arg(long, default_value = "separation.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Complex64,
    /// Enumeration level n (2ⁿ points, ceiling 22).
    #[arg(long, default_value_t = 12)]
    level: u32,
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Window,
    #[arg(long, value_parser = parse_resolution)]
    res: (u32, u32),
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RegionsArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Complex64,
    /// Also list the continuous-density intervals up to this k.
    #[arg(long, default_value_t = 12)]
    k_max: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransversalityArgs {
    /// Root count k; k = 4 gives the double-zero radius for non-real zeros.
    #[arg(long)]
    k: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Path to a serialized certificate JSON.
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args)]
struct M0Args {
    /// Enumerate polynomials of degree up to this (hard ceiling 16).
    #[arg(long, default_value_t = caps::DEFAULT_WITNESS_M0_DEGREE)]
    max_degree: u32,
    /// Restrict to a window x0,x1,y0,y1.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true, conflicts_with = "disc")]
    window: Option<Window>,
    /// Restrict to a disc re,im,radius.
    #[arg(long, value_parser = parse_disc, allow_hyphen_values = true)]
    disc: Option<Disc>,
    #[arg(long, default_value = "m0-roots.csv")]
    out: PathBuf,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected re,im but got '{s}'"));
    }
    let re = parts[0].trim().parse::<f64>().map_err(|e| e.to_string())?;
    let im = parts[1].trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok(Complex64::new(re, im))
}

fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected x0,x1,y0,y1 but got '{s}'"));
    }
    let v: Vec<f64> = parts
        .iter()
        .map(|t| t.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Window::new(v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())
}

fn parse_resolution(s: &str) -> Result<(u32, u32), String> {
    let parts: Vec<&str> = s.split([',', 'x']).collect();
    if parts.len() != 2 {
        return Err(format!("expected W,H but got '{s}'"));
    }
    let w = parts[0].trim().parse::<u32>().map_err(|e| e.to_string())?;
    let h = parts[1].trim().parse::<u32>().map_err(|e| e.to_string())?;
    Ok((w, h))
}

fn parse_disc(s: &str) -> Result<Disc, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected re,im,radius but got '{s}'"));
    }
    let v: Vec<f64> = parts
        .iter()
        .map(|t| t.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Disc::new(Complex64::new(v[0], v[1]), v[2]).map_err(|e| e.to_string())
}

fn parameter(z: Complex64) -> Result<Parameter, Error> {
    Parameter::new(z.re, z.im)
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("MLOCUS_OUT_DIR") {
            return PathBuf::from(dir).join(path);
        }
    }
    path.to_path_buf()
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<(), Error> {
    let resolved = resolve_out(path);
    if let Some(parent) = resolved.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| Error::Precondition(format!("cannot create {parent:?}: {e}")))?;
        }
    }
    std::fs::write(&resolved, bytes)
        .map_err(|e| Error::Precondition(format!("cannot write {resolved:?}: {e}")))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Numeric(format!("serialization failed: {e}")))?;
    text.push('\n');
    write_bytes(path, text.as_bytes())
}

/// Digit polynomial 1 + Σ a_k z^k from the CLI coefficient list.
fn digit_polynomial(text: &str) -> Result<DigitString, Error> {
    let poly = IntPolynomial::parse(text)?;
    let mut coeffs = vec![poly.coeffs()[0]];
    coeffs.extend_from_slice(&poly.coeffs()[1..]);
    DigitString::polynomial_from_coeffs(&coeffs)
}

/// Center selection for disc certification: the explicit nearest root, or
/// the first upper-half root interior to the covering region.
fn certification_center(
    digits: &DigitString,
    near: Option<Complex64>,
) -> Result<Parameter, Error> {
    let mut coeffs = vec![1i64];
    coeffs.extend(digits.digits().iter().map(|&d| d as i64));
    let poly = IntPolynomial::new(coeffs)?;
    let roots = crate::algebraic::find_roots(&poly)?;
    let chosen = match near {
        Some(target) => roots
            .iter()
            .min_by(|a, b| {
                (a.value - target).norm().total_cmp(&(b.value - target).norm())
            })
            .map(|r| r.value),
        None => roots
            .iter()
            .map(|r| r.value)
            .find(|z| z.im > 0.0 && crate::certificates::h_contains(
                &Parameter::new(z.re, z.im).unwrap_or_else(|_| Parameter::new(0.0, 0.0).unwrap()),
                true,
            ) && z.norm() < 1.0),
    };
    let root = chosen.ok_or_else(|| {
        Error::Precondition(
            "no root of the polynomial lies in the interior of the covering region".into(),
        )
    })?;
    parameter(root)
}

fn algebraic_input(text: &str, near: Option<Complex64>) -> Result<AlgebraicNumber, Error> {
    let poly = IntPolynomial::parse(text)?;
    let selector = match near {
        Some(z) => RootSelector::Nearest(z),
        None => {
            // Default: lower-half root of largest modulus, so λ = 1/θ lies
            // in the upper half plane; falls back to the largest modulus.
            let roots = crate::algebraic::find_roots(&poly)?;
            let target = roots
                .iter()
                .rev()
                .find(|r| r.value.im < -1e-9)
                .or_else(|| roots.last())
                .map(|r| r.value)
                .ok_or_else(|| Error::Precondition("polynomial has no roots".into()))?;
            RootSelector::Nearest(target)
        }
    };
    algebraic_number(&poly, selector)
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore failure: the global pool may already exist in tests.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Error::Resource { what, cap }) => {
            eprintln!("mlocus: resource cap exceeded: {what} (cap {cap})");
            3
        }
        Err(e) => {
            eprintln!("mlocus: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::RenderMset(args) => {
            let opts = MsetRenderOptions {
                witness_degree: args.witness_degree,
                survivor_cap: args.survivor_cap,
            };
            let (raster, summary) =
                render_mset(&args.window, args.res.0, args.res.1, args.depth, &opts)?;
            write_bytes(&args.out, &raster.to_pgm())?;
            let summary_path = args
                .summary
                .unwrap_or_else(|| args.out.with_extension("json"));
            write_json(&summary_path, &summary)?;
            println!(
                "out {} / in {} / unknown {} → {}",
                summary.counts.out,
                summary.counts.inside,
                summary.counts.unknown,
                args.out.display()
            );
            Ok(0)
        }
        Command::RenderAttractor(args) => {
            let lambda = parameter(args.lambda)?;
            let alphabet = match args.alphabet {
                AlphabetArg::Pm => Alphabet::PlusMinus,
                AlphabetArg::Zpm => Alphabet::ZeroPlusMinus,
            };
            let raster = render_attractor(
                &lambda,
                alphabet,
                args.depth,
                &args.window,
                args.res.0,
                args.res.1,
            )?;
            let bytes = match args.format {
                FormatArg::P5 => raster.to_pgm(),
                FormatArg::P6 => raster.to_ppm(),
            };
            write_bytes(&args.out, &bytes)?;
            let marked = raster.pixels().iter().filter(|&&v| v > 0).count();
            println!("{marked} marked pixels → {}", args.out.display());
            Ok(0)
        }
        Command::Polygon(args) => {
            let form = match args.form {
                FormArg::HalfTurn => PolygonForm::HalfTurn,
                FormArg::OddFullTurn => PolygonForm::OddFullTurn,
            };
            let poly = polygon_attractor(args.r, args.m, args.n, form)?;
            #[derive(serde::Serialize)]
            struct PolygonReport {
                schema_version: u32,
                vertices: Vec<Complex64>,
                interior_angles: Vec<f64>,
                area: f64,
            }
            let report = PolygonReport {
                schema_version: crate::SCHEMA_VERSION,
                vertices: poly.vertices().to_vec(),
                interior_angles: poly.interior_angles(),
                area: poly.area(),
            };
            let text = serde_json::to_string_pretty(&report)
                .map_err(|e| Error::Numeric(e.to_string()))?;
            println!("{text}");
            if let Some(path) = args.out {
                write_json(&path, &report)?;
            }
            Ok(0)
        }
        Command::CertifyInterior(args) => {
            let digits = digit_polynomial(&args.poly)?;
            let center = certification_center(&digits, args.center)?;
            match certify_disc(&digits, &center, args.delta)? {
                CertifyOutcome::Accepted(cert) => {
                    write_json(&args.out, &cert)?;
                    println!(
                        "accepted: disc of radius {} at {} lies in the locus → {}",
                        cert.radius,
                        cert.center,
                        args.out.display()
                    );
                    Ok(0)
                }
                CertifyOutcome::Rejected { clause, detail } => {
                    eprintln!("rejected ({clause:?}): {detail}");
                    Ok(2)
                }
            }
        }
        Command::MaxRadius(args) => {
            let digits = digit_polynomial(&args.poly)?;
            let center = certification_center(&digits, args.center)?;
            let radius = max_certified_radius(&digits, &center)?;
            println!("{radius:.9e}");
            Ok(0)
        }
        Command::CoverCheck(args) => {
            let lambda = parameter(args.lambda)?;
            let translates = match args.translates {
                3 => TranslateSet::ZeroPlusMinus,
                2 => TranslateSet::PlusMinus,
                other => {
                    return Err(Error::Parse(format!(
                        "translates must be 2 or 3, got {other}"
                    )))
                }
            };
            let (a, b) = match (args.a, args.b) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    let (a, b, regime) = cover_params(&lambda)?;
                    println!("closed form: a = {a}, b = {b} ({regime:?})");
                    (a, b)
                }
            };
            let cert = make_cover_certificate(&lambda, a, b, translates)?;
            if let Some(mc) = args.mc_samples {
                let est = monte_carlo_residual(&lambda, a, b, translates, mc, args.seed);
                println!("monte-carlo residual estimate: {est}");
            }
            let text =
                serde_json::to_string_pretty(&cert).map_err(|e| Error::Numeric(e.to_string()))?;
            println!("{text}");
            if let Some(path) = args.out {
                write_json(&path, &cert)?;
            }
            Ok(0)
        }
        Command::OmegaCover(args) => {
            let lambda = parameter(args.lambda)?;
            match omega_cover_params(&lambda)? {
                OmegaCoverOutcome::Found(cert) => {
                    let text = serde_json::to_string_pretty(&cert)
                        .map_err(|e| Error::Numeric(e.to_string()))?;
                    println!("{text}");
                    if let Some(path) = args.out {
                        write_json(&path, &cert)?;
                    }
                }
                OmegaCoverOutcome::NotFound { best_a, best_b, best_residual } => {
                    println!(
                        "no covering found; best residual {best_residual} at a = {best_a}, b = {best_b}"
                    );
                }
            }
            Ok(0)
        }
        Command::ClassifyNumber(args) => {
            let poly = IntPolynomial::parse(&args.poly)?;
            let selector = if args.root == "largest" {
                RootSelector::LargestModulus
            } else {
                let idx: usize = args
                    .root
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad root selector '{}'", args.root)))?;
                RootSelector::Index(idx)
            };
            let report = classify(&poly, selector)?;
            let text = serde_json::to_string_pretty(&report)
                .map_err(|e| Error::Numeric(e.to_string()))?;
            println!("{text}");
            if let Some(path) = args.out {
                write_json(&path, &report)?;
            }
            Ok(0)
        }
        Command::Catalog(args) => {
            let entries = catalog();
            let text = serde_json::to_string_pretty(&entries)
                .map_err(|e| Error::Numeric(e.to_string()))?;
            println!("{text}");
            if let Some(path) = args.out {
                write_json(&path, &entries)?;
            }
            Ok(0)
        }
        Command::FourierScan(args) => {
            let lambda = parameter(args.lambda)?;
            let mut csv = String::from("n,value,bound,error\n");
            for n in 1..=args.terms {
                let v = fourier_nu(&lambda, args.xi, n)?;
                // bound: modulus of the next cosine argument, the natural
                // decay diagnostic.
                let next_arg = lambda.modulus().powi(n as i32) * args.xi.norm();
                csv.push_str(&format!("{n},{},{next_arg},{}\n", v.value, v.truncation_error));
            }
            write_bytes(&args.out, csv.as_bytes())?;
            let final_value = fourier_nu(&lambda, args.xi, args.terms)?;
            println!(
                "ν̂({}) ≈ {} ± {} ({} terms) → {}",
                args.xi,
                final_value.value,
                final_value.truncation_error,
                args.terms,
                args.out.display()
            );
            Ok(0)
        }
        Command::PisotWitness(args) => {
            let theta = algebraic_input(&args.poly, args.root_near)?;
            let scan = singularity_witness(&theta, args.n_max, args.terms)?;
            let mut csv = String::from("n,value,bound,error\n");
            for row in &scan.rows {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    row.n,
                    row.direct,
                    scan.floor,
                    (row.direct - row.factorized).abs()
                ));
            }
            write_bytes(&args.out, csv.as_bytes())?;
            if let Some(path) = &args.decay_csv {
                let decay = pisot_decay_scan(&theta, args.n_max.max(200))?;
                let mut dcsv = String::from("n,value,bound,error\n");
                let rho = decay.fitted_rho.unwrap_or(f64::NAN);
                for row in &decay.rows {
                    dcsv.push_str(&format!(
                        "{},{},{},{}\n",
                        row.n,
                        row.dist_to_integer,
                        rho.powi(row.n as i32),
                        (row.two_re_float - row.two_re_recurrence).abs()
                    ));
                }
                write_bytes(path, dcsv.as_bytes())?;
            }
            if let Some(path) = &args.json {
                write_json(path, &scan)?;
            }
            println!(
                "min |ν̂| over n ≤ {} is {} ≥ floor {} → {}",
                args.n_max,
                scan.min_direct,
                scan.floor,
                args.out.display()
            );
            Ok(0)
        }
        Command::GarsiaSeparation(args) => {
            let theta = algebraic_input(&args.poly, args.root_near)?;
            let mut csv = String::from("n,count,value,bound,error\n");
            let mut last = None;
            for n in 1..=args.n {
                let report = garsia_separation_with_cap(&theta, n, args.cap)?;
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    report.n,
                    report.count,
                    report.min_distance,
                    report.bound,
                    report.min_distance - report.bound
                ));
                last = Some(report);
            }
            write_bytes(&args.out, csv.as_bytes())?;
            if let Some(report) = last {
                println!(
                    "level {}: count {} , min distance {} ≥ bound {} → {}",
                    report.n,
                    report.count,
                    report.min_distance,
                    report.bound,
                    args.out.display()
                );
            }
            Ok(0)
        }
        Command::DensityHistogram(args) => {
            let lambda = parameter(args.lambda)?;
            let report =
                density_histogram(&lambda, args.level, &args.window, args.res.0, args.res.1)?;
            let text = serde_json::to_string_pretty(&report)
                .map_err(|e| Error::Numeric(e.to_string()))?;
            println!("{text}");
            if let Some(path) = args.out {
                write_json(&path, &report)?;
            }
            Ok(0)
        }
        Command::Regions(args) => {
            let lambda = parameter(args.lambda)?;
            let report = typical_region_report(&lambda);
            #[derive(serde::Serialize)]
            struct RegionsOutput {
                report: crate::bernoulli::RegionReport,
                continuous_density_intervals: Vec<crate::bernoulli::DensityInterval>,
                first_overlapping_k: Option<u32>,
            }
            let (intervals, overlap) = continuous_density_intervals(args.k_max)?;
            let output = RegionsOutput {
                report,
                continuous_density_intervals: intervals,
                first_overlapping_k: overlap,
            };
            let text = serde_json::to_string_pretty(&output)
                .map_err(|e| Error::Numeric(e.to_string()))?;
            println!("{text}");
            if let Some(path) = args.out {
                write_json(&path, &output)?;
            }
            Ok(0)
        }
        Command::Transversality(args) => {
            let bound = transversality_bound(args.k)?;
            println!("{bound:.16}");
            Ok(0)
        }
        Command::VerifyCertificate(args) => {
            let text = std::fs::read_to_string(resolve_out(&args.cert))
                .map_err(|e| Error::Parse(format!("cannot read {:?}: {e}", args.cert)))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let kind = value
                .get("kind")
                .and_then(|k| k.as_str())
                .ok_or_else(|| Error::Parse("certificate has no 'kind' field".into()))?
                .to_string();
            let ok = match kind.as_str() {
                DISC_CERTIFICATE_KIND => {
                    let cert: DiscCertificate =
                        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
                    reverify_disc_certificate(&cert)?
                }
                COVER_CERTIFICATE_KIND => {
                    let cert: CoverCertificate =
                        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
                    reverify_cover_certificate(&cert)?
                }
                other => return Err(Error::Parse(format!("unknown certificate kind '{other}'"))),
            };
            if ok {
                println!("verified: {kind} re-checks bit for bit");
                Ok(0)
            } else {
                eprintln!("verification FAILED for {kind}");
                Ok(2)
            }
        }
        Command::M0Roots(args) => {
            let region = match (args.window, args.disc) {
                (Some(w), None) => Region::Window(w),
                (None, Some(d)) => Region::Disc(d),
                (None, None) => {
                    Region::Disc(Disc::new(Complex64::new(0.0, 0.0), 1.0)?)
                }
                _ => unreachable!("clap conflicts_with"),
            };
            let roots = m0_roots(args.max_degree, &region)?;
            let mut csv = String::from("re,im,residual,degree,digits\n");
            for hit in &roots {
                let digits: Vec<String> =
                    hit.polynomial.digits().iter().map(|d| d.to_string()).collect();
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    hit.root.re,
                    hit.root.im,
                    hit.residual,
                    hit.polynomial.degree(),
                    digits.join(";")
                ));
            }
            write_bytes(&args.out, csv.as_bytes())?;
            println!("{} distinct roots → {}", roots.len(), args.out.display());
            Ok(0)
        }
    }
}

fn monte_carlo_residual(
    lambda: &Parameter,
    a: f64,
    b: f64,
    translates: TranslateSet,
    samples: u64,
    seed: u64,
) -> f64 {
    // Small xorshift generator; good enough for a diagnostic estimate and
    // dependency-free.
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let inv = lambda.as_complex().inv();
    let offsets: &[f64] = match translates {
        TranslateSet::ZeroPlusMinus => &[0.0, -1.0, 1.0],
        TranslateSet::PlusMinus => &[-1.0, 1.0],
    };
    let mut outside = 0u64;
    for _ in 0..samples {
        let u = 2.0 * next() - 1.0;
        let v = 2.0 * next() - 1.0;
        let z = Complex64::new(u * a, v * b) * inv;
        let covered = offsets.iter().any(|&t| {
            let c = inv * t;
            (z.re - c.re).abs() <= a && (z.im - c.im).abs() <= b
        });
        if !covered {
            outside += 1;
        }
    }
    let region_area = 4.0 * a * b / lambda.norm_sqr();
    region_area * outside as f64 / samples as f64
}

/// Entry point used by the binary; flushes stdout before returning the code.
pub fn main_entry() -> i32 {
    let code = run();
    let _ = std::io::stdout().flush();
    code
}
