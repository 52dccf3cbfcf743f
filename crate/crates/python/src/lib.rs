//! Python bindings: scalar operations map to native Python types, report-
//! and certificate-producing operations return JSON strings (parse with
//! `json.loads`).

use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use mlocus::algebraic::{self, IntPolynomial, RootSelector};
use mlocus::attractor;
use mlocus::base::{Alphabet, DigitString, Parameter, Rectangle, Window};
use mlocus::bernoulli;
use mlocus::certificates;
use mlocus::connectivity;
use mlocus::error::Error;

fn err(e: Error) -> PyErr {
    match e {
        Error::Resource { .. } | Error::Numeric(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn param(z: Complex64) -> PyResult<Parameter> {
    Parameter::new(z.re, z.im).map_err(err)
}

fn window(w: (f64, f64, f64, f64)) -> PyResult<Window> {
    Window::new(w.0, w.1, w.2, w.3).map_err(err)
}

fn digits(v: Vec<i8>, leading_one: bool) -> PyResult<DigitString> {
    DigitString::new(v, Alphabet::ZeroPlusMinus, leading_one).map_err(err)
}

fn alphabet(tag: &str) -> PyResult<Alphabet> {
    match tag {
        "pm" => Ok(Alphabet::PlusMinus),
        "zpm" => Ok(Alphabet::ZeroPlusMinus),
        other => Err(PyValueError::new_err(format!(
            "alphabet must be 'pm' or 'zpm', got '{other}'"
        ))),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// log 2 / (−log |λ|).
#[pyfunction]
fn similarity_dimension(lambda: Complex64) -> PyResult<f64> {
    mlocus::base::similarity_dimension(&param(lambda)?).map_err(err)
}

/// Upper bound on Σ_{k>n} |λ|^k.
#[pyfunction]
fn tail_bound(lambda: Complex64, n: u32) -> PyResult<f64> {
    Ok(mlocus::base::tail_bound(&param(lambda)?, n))
}

/// Evaluates 1 + Σ a_k λ^k (leading_one) or Σ a_k λ^k; returns
/// (value, rounding_error).
#[pyfunction]
#[pyo3(signature = (digit_list, lambda, leading_one = true))]
fn eval_prefix(
    digit_list: Vec<i8>,
    lambda: Complex64,
    leading_one: bool,
) -> PyResult<(Complex64, f64)> {
    let d = digits(digit_list, leading_one)?;
    let e = mlocus::base::eval_prefix(&d, &param(lambda)?);
    Ok((e.value, e.rounding_error))
}

/// Distinct level-n prefix sums over the digit alphabet ('pm' or 'zpm').
#[pyfunction]
#[pyo3(signature = (lambda, n, alphabet_tag = "pm"))]
fn prefix_sums(lambda: Complex64, n: u32, alphabet_tag: &str) -> PyResult<Vec<Complex64>> {
    let cloud =
        attractor::prefix_sums(&param(lambda)?, alphabet(alphabet_tag)?, n).map_err(err)?;
    Ok(cloud.points().to_vec())
}

/// Vertices of the exact polygon attractor; form is 'half-turn' or
/// 'odd-full-turn'.
#[pyfunction]
#[pyo3(signature = (r, m, n, form = "half-turn"))]
fn polygon_attractor(r: f64, m: u32, n: u32, form: &str) -> PyResult<Vec<Complex64>> {
    let form = match form {
        "half-turn" => attractor::PolygonForm::HalfTurn,
        "odd-full-turn" => attractor::PolygonForm::OddFullTurn,
        other => return Err(PyValueError::new_err(format!("unknown form '{other}'"))),
    };
    let poly = attractor::polygon_attractor(r, m, n, form).map_err(err)?;
    Ok(poly.vertices().to_vec())
}

/// Membership in the two-translate covering region of the attractor.
#[pyfunction]
fn omega_contains(lambda: Complex64) -> PyResult<bool> {
    Ok(attractor::omega_contains(&param(lambda)?))
}

/// 'in' (|λ| ≥ 2^(−1/2)), 'out' (|λ| < 1/2), or 'unknown'.
#[pyfunction]
fn classify_annulus(lambda: Complex64) -> PyResult<&'static str> {
    Ok(match connectivity::classify_annulus(&param(lambda)?) {
        connectivity::AnnulusClass::In => "in",
        connectivity::AnnulusClass::Out => "out",
        connectivity::AnnulusClass::Unknown => "unknown",
    })
}

/// Branch-and-bound exclusion; returns (kind, depth_used, surviving_count).
#[pyfunction]
fn mset_exclude(lambda: Complex64, max_depth: u32) -> PyResult<(String, u32, u64)> {
    match connectivity::mset_exclude(&param(lambda)?, max_depth).map_err(err)? {
        connectivity::MembershipVerdict::CertifiedOut { depth_used } => {
            Ok(("certified-out".into(), depth_used, 0))
        }
        connectivity::MembershipVerdict::Inconclusive { depth_used, surviving_count } => {
            Ok(("inconclusive".into(), depth_used, surviving_count))
        }
        connectivity::MembershipVerdict::WitnessIn { .. } => Ok(("witness-in".into(), 0, 0)),
    }
}

/// Full point verdict combining the annulus bound, disc certificates, a
/// polynomial-root witness search, and branch-and-bound exclusion; returns
/// (kind, detail_json).
#[pyfunction]
#[pyo3(signature = (lambda, max_depth, witness_degree = 8, discs = vec![]))]
fn membership(
    lambda: Complex64,
    max_depth: u32,
    witness_degree: u32,
    discs: Vec<(Complex64, f64)>,
) -> PyResult<(String, String)> {
    let query = connectivity::PointQuery {
        witness_degree,
        discs,
        exclusion: connectivity::ExclusionOptions::default(),
    };
    let verdict = connectivity::classify_point(&param(lambda)?, max_depth, &query).map_err(err)?;
    let kind = match &verdict {
        connectivity::MembershipVerdict::CertifiedOut { .. } => "certified-out",
        connectivity::MembershipVerdict::WitnessIn { .. } => "witness-in",
        connectivity::MembershipVerdict::Inconclusive { .. } => "inconclusive",
    };
    Ok((kind.into(), to_json(&verdict)?))
}

/// Zeros of {0,±1} polynomials with constant term 1 inside a window, as
/// (root, residual, digits) triples.
#[pyfunction]
fn m0_roots(
    max_degree: u32,
    win: (f64, f64, f64, f64),
) -> PyResult<Vec<(Complex64, f64, Vec<i8>)>> {
    let region = connectivity::Region::Window(window(win)?);
    let hits = connectivity::m0_roots(max_degree, &region).map_err(err)?;
    Ok(hits
        .into_iter()
        .map(|h| (h.root, h.residual, h.polynomial.digits().to_vec()))
        .collect())
}

/// Membership in the covering region H.
#[pyfunction]
#[pyo3(signature = (lambda, strict = false))]
fn h_contains(lambda: Complex64, strict: bool) -> PyResult<bool> {
    Ok(certificates::h_contains(&param(lambda)?, strict))
}

/// Closed-form covering rectangle (a, b, regime).
#[pyfunction]
fn cover_params(lambda: Complex64) -> PyResult<(f64, f64, String)> {
    let (a, b, regime) = certificates::cover_params(&param(lambda)?).map_err(err)?;
    Ok((a, b, format!("{regime:?}")))
}

/// Covering certificate at an explicit rectangle, as JSON.
#[pyfunction]
#[pyo3(signature = (lambda, a, b, translates = 3))]
fn cover_certificate_json(lambda: Complex64, a: f64, b: f64, translates: u8) -> PyResult<String> {
    let t = match translates {
        3 => certificates::TranslateSet::ZeroPlusMinus,
        2 => certificates::TranslateSet::PlusMinus,
        other => {
            return Err(PyValueError::new_err(format!(
                "translates must be 2 or 3, got {other}"
            )))
        }
    };
    let cert = certificates::make_cover_certificate(&param(lambda)?, a, b, t).map_err(err)?;
    to_json(&cert)
}

/// Exact uncovered area of the covering; returns (residual_area, covered).
#[pyfunction]
#[pyo3(signature = (lambda, a, b, translates = 3))]
fn cover_residual(lambda: Complex64, a: f64, b: f64, translates: u8) -> PyResult<(f64, bool)> {
    let t = match translates {
        3 => certificates::TranslateSet::ZeroPlusMinus,
        2 => certificates::TranslateSet::PlusMinus,
        other => {
            return Err(PyValueError::new_err(format!(
                "translates must be 2 or 3, got {other}"
            )))
        }
    };
    let rect = Rectangle::new(a, b).map_err(err)?;
    let geo = certificates::verify_cover_geometric(&param(lambda)?, &rect, t).map_err(err)?;
    Ok((geo.residual_area, geo.covered))
}

/// Disc certification outcome as JSON: either the accepted certificate or
/// {"rejected": clause, "detail": ...}.
#[pyfunction]
fn certify_disc_json(digit_list: Vec<i8>, center: Complex64, delta: f64) -> PyResult<String> {
    let d = digits(digit_list, true)?;
    match certificates::certify_disc(&d, &param(center)?, delta).map_err(err)? {
        certificates::CertifyOutcome::Accepted(cert) => to_json(&*cert),
        certificates::CertifyOutcome::Rejected { clause, detail } => {
            to_json(&serde_json::json!({
                "rejected": format!("{clause:?}"),
                "detail": detail,
            }))
        }
    }
}

/// Largest certified disc radius around the root.
#[pyfunction]
fn max_certified_radius(digit_list: Vec<i8>, center: Complex64) -> PyResult<f64> {
    let d = digits(digit_list, true)?;
    certificates::max_certified_radius(&d, &param(center)?).map_err(err)
}

/// All roots of an integer polynomial (constant-first coefficients).
#[pyfunction]
fn find_roots(coeffs: Vec<i64>) -> PyResult<Vec<Complex64>> {
    let poly = IntPolynomial::new(coeffs).map_err(err)?;
    Ok(algebraic::find_roots(&poly)
        .map_err(err)?
        .into_iter()
        .map(|r| r.value)
        .collect())
}

/// Classification of an algebraic number as JSON. The polynomial may be
/// text ("z^3 - z^2 + 1") or a list ("[1,0,-1,1]").
#[pyfunction]
#[pyo3(signature = (poly, root_index = None))]
fn classify_json(poly: &str, root_index: Option<usize>) -> PyResult<String> {
    let poly = IntPolynomial::parse(poly).map_err(err)?;
    let selector = match root_index {
        Some(i) => RootSelector::Index(i),
        None => RootSelector::LargestModulus,
    };
    to_json(&algebraic::classify(&poly, selector).map_err(err)?)
}

/// Built-in catalog as JSON.
#[pyfunction]
fn catalog_json() -> PyResult<String> {
    to_json(&algebraic::catalog())
}

/// Fourier transform of the convolution at frequency ξ; returns
/// (value, truncation_error, terms_used). Automatic truncation when terms
/// is omitted.
#[pyfunction]
#[pyo3(signature = (lambda, xi, terms = None))]
fn fourier_nu(lambda: Complex64, xi: Complex64, terms: Option<u32>) -> PyResult<(f64, f64, u32)> {
    let lam = param(lambda)?;
    let v = match terms {
        Some(t) => bernoulli::fourier_nu(&lam, xi, t).map_err(err)?,
        None => bernoulli::fourier_nu_auto(&lam, xi),
    };
    Ok((v.value, v.truncation_error, v.terms_used))
}

/// k-root radius bound for [−1,1]-coefficient power series.
#[pyfunction]
fn transversality_bound(k: u32) -> PyResult<f64> {
    bernoulli::transversality_bound(k).map_err(err)
}

fn number_near(poly: &str, root_near: Option<Complex64>) -> PyResult<algebraic::AlgebraicNumber> {
    let poly = IntPolynomial::parse(poly).map_err(err)?;
    let selector = match root_near {
        Some(z) => RootSelector::Nearest(z),
        None => RootSelector::LargestModulus,
    };
    algebraic::algebraic_number(&poly, selector).map_err(err)
}

/// Separation report for a Garsia reciprocal at level n, as JSON.
#[pyfunction]
#[pyo3(signature = (poly, n, root_near = None))]
fn garsia_separation_json(poly: &str, n: u32, root_near: Option<Complex64>) -> PyResult<String> {
    let theta = number_near(poly, root_near)?;
    to_json(&bernoulli::garsia_separation(&theta, n).map_err(err)?)
}

/// Singularity witness scan for a complex Pisot reciprocal, as JSON.
#[pyfunction]
#[pyo3(signature = (poly, n_max, root_near = None))]
fn pisot_witness_json(poly: &str, n_max: u32, root_near: Option<Complex64>) -> PyResult<String> {
    let theta = number_near(poly, root_near)?;
    to_json(&bernoulli::singularity_witness(&theta, n_max, None).map_err(err)?)
}

/// Distance scan dist(2Re θⁿ, ℤ) with the fitted decay rate, as JSON.
#[pyfunction]
#[pyo3(signature = (poly, n_max, root_near = None))]
fn pisot_decay_json(poly: &str, n_max: u32, root_near: Option<Complex64>) -> PyResult<String> {
    let theta = number_near(poly, root_near)?;
    to_json(&bernoulli::pisot_decay_scan(&theta, n_max).map_err(err)?)
}

/// Density histogram report for level-n sums, as JSON.
#[pyfunction]
fn density_histogram_json(
    lambda: Complex64,
    level: u32,
    win: (f64, f64, f64, f64),
    width: u32,
    height: u32,
) -> PyResult<String> {
    let report =
        bernoulli::density_histogram(&param(lambda)?, level, &window(win)?, width, height)
            .map_err(err)?;
    to_json(&report)
}

/// Almost-sure region statements applying at λ, as JSON.
#[pyfunction]
fn region_report_json(lambda: Complex64) -> PyResult<String> {
    to_json(&bernoulli::typical_region_report(&param(lambda)?))
}

/// Continuous-density annulus intervals for k = 2..k_max and the first
/// overlapping k.
#[pyfunction]
fn continuous_density_intervals(k_max: u32) -> PyResult<(Vec<(u32, f64, f64)>, Option<u32>)> {
    let (intervals, overlap) = bernoulli::continuous_density_intervals(k_max).map_err(err)?;
    Ok((intervals.into_iter().map(|i| (i.k, i.low, i.high)).collect(), overlap))
}

/// Tri-state raster of the connectivity locus; returns (P5 bytes, summary
/// JSON).
#[pyfunction]
#[pyo3(signature = (win, width, height, depth, witness_degree = 8, survivor_cap = 20_000))]
fn render_mset(
    py: Python<'_>,
    win: (f64, f64, f64, f64),
    width: u32,
    height: u32,
    depth: u32,
    witness_degree: u32,
    survivor_cap: u64,
) -> PyResult<(Py<pyo3::types::PyBytes>, String)> {
    let opts = connectivity::MsetRenderOptions { witness_degree, survivor_cap };
    let (raster, summary) =
        connectivity::render_mset(&window(win)?, width, height, depth, &opts).map_err(err)?;
    let bytes = pyo3::types::PyBytes::new(py, &raster.to_pgm());
    Ok((bytes.into(), to_json(&summary)?))
}

/// Binary raster of an attractor, as P5 bytes.
#[pyfunction]
#[pyo3(signature = (lambda, depth, win, width, height, alphabet_tag = "pm"))]
fn render_attractor(
    py: Python<'_>,
    lambda: Complex64,
    depth: u32,
    win: (f64, f64, f64, f64),
    width: u32,
    height: u32,
    alphabet_tag: &str,
) -> PyResult<Py<pyo3::types::PyBytes>> {
    let raster = attractor::render_attractor(
        &param(lambda)?,
        alphabet(alphabet_tag)?,
        depth,
        &window(win)?,
        width,
        height,
    )
    .map_err(err)?;
    Ok(pyo3::types::PyBytes::new(py, &raster.to_pgm()).into())
}

#[pymodule]
fn mlocus_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(similarity_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(tail_bound, m)?)?;
    m.add_function(wrap_pyfunction!(eval_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(prefix_sums, m)?)?;
    m.add_function(wrap_pyfunction!(polygon_attractor, m)?)?;
    m.add_function(wrap_pyfunction!(omega_contains, m)?)?;
    m.add_function(wrap_pyfunction!(classify_annulus, m)?)?;
    m.add_function(wrap_pyfunction!(mset_exclude, m)?)?;
    m.add_function(wrap_pyfunction!(membership, m)?)?;
    m.add_function(wrap_pyfunction!(m0_roots, m)?)?;
    m.add_function(wrap_pyfunction!(h_contains, m)?)?;
    m.add_function(wrap_pyfunction!(cover_params, m)?)?;
    m.add_function(wrap_pyfunction!(cover_certificate_json, m)?)?;
    m.add_function(wrap_pyfunction!(cover_residual, m)?)?;
    m.add_function(wrap_pyfunction!(certify_disc_json, m)?)?;
    m.add_function(wrap_pyfunction!(max_certified_radius, m)?)?;
    m.add_function(wrap_pyfunction!(find_roots, m)?)?;
    m.add_function(wrap_pyfunction!(classify_json, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_json, m)?)?;
    m.add_function(wrap_pyfunction!(fourier_nu, m)?)?;
    m.add_function(wrap_pyfunction!(transversality_bound, m)?)?;
    m.add_function(wrap_pyfunction!(garsia_separation_json, m)?)?;
    m.add_function(wrap_pyfunction!(pisot_witness_json, m)?)?;
    m.add_function(wrap_pyfunction!(pisot_decay_json, m)?)?;
    m.add_function(wrap_pyfunction!(density_histogram_json, m)?)?;
    m.add_function(wrap_pyfunction!(region_report_json, m)?)?;
    m.add_function(wrap_pyfunction!(continuous_density_intervals, m)?)?;
    m.add_function(wrap_pyfunction!(render_mset, m)?)?;
    m.add_function(wrap_pyfunction!(render_attractor, m)?)?;
    Ok(())
}
