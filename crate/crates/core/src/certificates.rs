//! Covering certificates for the connectivity locus.
//!
//! On the region H = {1/3 ≤ |λ|² ≤ 1/2, 0 ≤ Re(λ) ≤ (3|λ|²−1)/2} a rectangle
//! R with vertices ±a±ib can be chosen so that R ⊂ λR ∪ (λR−1) ∪ (λR+1);
//! the attractor with digits {−1,0,1} then contains the disc of radius 1/2,
//! and a polynomial root inside int(H) promotes to an open disc of
//! parameters inside the locus. The module computes the closed-form (a,b),
//! checks the four sufficient linear conditions, verifies the covering
//! geometrically by exact convex clipping, reconstructs the analogous
//! two-translate covering on the region where the attractor itself has
//! interior, and issues disc certificates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::attractor::omega_contains;
use crate::base::{eval_prefix, ulp, DigitString, Parameter, Rectangle};
use crate::error::{Error, Result};
use crate::geometry;
use crate::SCHEMA_VERSION;

/// Membership in H = {1/3 ≤ |λ|² ≤ 1/2, 0 ≤ Re(λ) ≤ (3|λ|²−1)/2}, by exact
/// floating comparison. Strict mode tests the interior. The inequalities do
/// not involve the sign of Im(λ), so the region is conjugation-symmetric
/// here; the covering construction commutes with conjugation.
pub fn h_contains(lambda: &Parameter, strict: bool) -> bool {
    let m2 = lambda.norm_sqr();
    let re = lambda.re();
    let upper = (3.0 * m2 - 1.0) / 2.0;
    if strict {
        m2 > 1.0 / 3.0 && m2 < 0.5 && re > 0.0 && re < upper
    } else {
        (1.0 / 3.0..=0.5).contains(&m2) && re >= 0.0 && re <= upper
    }
}

/// Which pair of covering conditions is tight in the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverRegime {
    /// ξ at or above the threshold: the long-side condition and the
    /// imaginary short-side reach hold with equality.
    LongSideTight,
    /// ξ below the threshold: both short-side vertex conditions hold with
    /// equality.
    ShortSideTight,
}

/// Closed-form rectangle half-sizes (a, b) for λ ∈ H, with the regime
/// threshold ξ* = |λ|² − |λ|√(1−|λ|²)/√2. Guarantees a ≥ 1, b > 1/2, a ≥ b.
pub fn cover_params(lambda: &Parameter) -> Result<(f64, f64, CoverRegime)> {
    if !h_contains(lambda, false) {
        return Err(Error::Precondition(format!(
            "λ = {} + {}i lies outside the covering region H",
            lambda.re(),
            lambda.im()
        )));
    }
    let m2 = lambda.norm_sqr();
    let m = lambda.modulus();
    let xi = lambda.re();
    let eta = lambda.im().abs();
    let xi_star = m2 - m * (1.0 - m2).sqrt() / std::f64::consts::SQRT_2;
    if xi >= xi_star {
        let denom = m2 * (1.0 - m2);
        let a = 1.0 + (m2 - xi).powi(2) / denom;
        let b = eta * (m2 - xi) / denom;
        Ok((a, b, CoverRegime::LongSideTight))
    } else {
        let denom = eta * eta - (m2 - xi).powi(2);
        if denom <= 0.0 {
            return Err(Error::Numeric(
                "degenerate short-side system; λ is outside the usable part of H".into(),
            ));
        }
        let a = (eta * eta + xi * (m2 - xi)) / denom;
        let b = eta * m2 / denom;
        Ok((a, b, CoverRegime::ShortSideTight))
    }
}

/// Signed slacks of the four sufficient covering conditions, oriented so
/// that ≥ 0 means satisfied:
/// overlap:    |λ|² − η/(2b)          (the translates overlap vertically)
/// long_side:  aη + bξ − b − ξη/|λ|²  (the long sides stay covered)
/// short_re:   a|λ|² + ξ − aξ − bη    (short-side vertices, real reach)
/// short_im:   b|λ|² + η − aη − bξ    (short-side vertices, imaginary reach)
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverSlacks {
    pub overlap: f64,
    pub long_side: f64,
    pub short_re: f64,
    pub short_im: f64,
}

impl CoverSlacks {
    pub fn min(&self) -> f64 {
        self.overlap
            .min(self.long_side)
            .min(self.short_re)
            .min(self.short_im)
    }

    pub fn all_satisfied(&self) -> bool {
        self.min() >= 0.0
    }
}

/// Evaluates the four covering-condition slacks at the given rectangle.
pub fn verify_conditions(lambda: &Parameter, a: f64, b: f64) -> Result<CoverSlacks> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Precondition("rectangle half-sizes must be positive".into()));
    }
    let xi = lambda.re();
    let eta = lambda.im().abs();
    if xi < 0.0 {
        return Err(Error::Precondition("conditions need Re(λ) ≥ 0".into()));
    }
    let m2 = lambda.norm_sqr();
    if m2 == 0.0 {
        return Err(Error::Domain("conditions are undefined at λ = 0".into()));
    }
    Ok(CoverSlacks {
        overlap: m2 - eta / (2.0 * b),
        long_side: a * eta + b * xi - b - xi * eta / m2,
        short_re: a * m2 + xi - (a * xi + b * eta),
        short_im: b * m2 + eta - (a * eta + b * xi),
    })
}

/// Translate sets for the geometric covering check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TranslateSet {
    /// {0, −1, +1}: R ∪ (R − 1/λ) ∪ (R + 1/λ) must cover R/λ.
    ZeroPlusMinus,
    /// {−1, +1}: (R − 1/λ) ∪ (R + 1/λ) must cover R/λ.
    PlusMinus,
}

impl TranslateSet {
    fn offsets(&self) -> &'static [f64] {
        match self {
            TranslateSet::ZeroPlusMinus => &[0.0, -1.0, 1.0],
            TranslateSet::PlusMinus => &[-1.0, 1.0],
        }
    }
}

/// Relative area tolerance for declaring a covering exact.
pub const COVER_AREA_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometricCover {
    /// Total area of R/λ not covered by the translates.
    pub residual_area: f64,
    /// Area of the rotated rectangle R/λ.
    pub region_area: f64,
    pub covered: bool,
}

/// Verifies the covering R/λ ⊂ ⋃_t (R + t/λ) by exact convex clipping: the
/// rotated rectangle is decomposed against each axis-aligned translate and
/// the leftover area is summed.
pub fn verify_cover_geometric(
    lambda: &Parameter,
    rect: &Rectangle,
    translates: TranslateSet,
) -> Result<GeometricCover> {
    lambda.require_nonzero("covering check")?;
    let inv = lambda.as_complex().inv();
    let quad: Vec<Complex64> = rect.corners().iter().map(|&c| c * inv).collect();
    let quad = if geometry::signed_area(&quad) < 0.0 {
        quad.into_iter().rev().collect()
    } else {
        quad
    };
    let region_area = geometry::signed_area(&quad);
    let mut pieces = vec![quad];
    for &t in translates.offsets() {
        let center = inv * t;
        pieces = geometry::subtract_axis_rect(pieces, center.re, center.im, rect.a(), rect.b());
        if pieces.is_empty() {
            break;
        }
    }
    let residual_area = geometry::total_area(&pieces);
    Ok(GeometricCover {
        residual_area,
        region_area,
        covered: residual_area <= COVER_AREA_TOL * region_area,
    })
}

/// A serializable covering certificate: all inputs plus the recorded slack
/// and residual values, re-checkable bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub schema_version: u32,
    pub kind: String,
    pub lambda: Complex64,
    pub half_width: f64,
    pub half_height: f64,
    pub translates: TranslateSet,
    /// Present for three-translate certificates, where the four linear
    /// conditions apply.
    pub slacks: Option<CoverSlacks>,
    pub residual_area: f64,
    pub region_area: f64,
    pub covered: bool,
}

pub const COVER_CERTIFICATE_KIND: &str = "cover-certificate";

/// Builds a covering certificate at an explicit rectangle.
pub fn make_cover_certificate(
    lambda: &Parameter,
    a: f64,
    b: f64,
    translates: TranslateSet,
) -> Result<CoverCertificate> {
    let rect = Rectangle::new(a, b)?;
    let geo = verify_cover_geometric(lambda, &rect, translates)?;
    let slacks = match translates {
        TranslateSet::ZeroPlusMinus => Some(verify_conditions(lambda, a, b)?),
        TranslateSet::PlusMinus => None,
    };
    Ok(CoverCertificate {
        schema_version: SCHEMA_VERSION,
        kind: COVER_CERTIFICATE_KIND.into(),
        lambda: lambda.as_complex(),
        half_width: a,
        half_height: b,
        translates,
        slacks,
        residual_area: geo.residual_area,
        region_area: geo.region_area,
        covered: geo.covered,
    })
}

/// Recomputes a covering certificate from its inputs and compares every
/// derived field bit for bit.
pub fn reverify_cover_certificate(cert: &CoverCertificate) -> Result<bool> {
    let lambda = Parameter::new(cert.lambda.re, cert.lambda.im)?;
    let fresh =
        make_cover_certificate(&lambda, cert.half_width, cert.half_height, cert.translates)?;
    Ok(fresh == *cert && cert.covered)
}

/// Outcome of the two-translate search on the region where the attractor
/// itself admits a covering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum OmegaCoverOutcome {
    Found(CoverCertificate),
    /// No pair passed; reports the best residual seen. Not fatal: the
    /// region is known to admit coverings, but no closed form is available
    /// and the search grid may simply miss.
    NotFound { best_a: f64, best_b: f64, best_residual: f64 },
}

/// Searches a coarse-to-fine grid over (a,b) ∈ [1,40] × [2^{−1/2},40] for a
/// rectangle with R ⊂ (λR−1) ∪ (λR+1). Deterministic: the first passing
/// pair in scan order wins; two refinement levels around the best residual
/// follow if the coarse grid fails.
pub fn omega_cover_params(lambda: &Parameter) -> Result<OmegaCoverOutcome> {
    if !omega_contains(lambda) {
        return Err(Error::Precondition(format!(
            "λ = {} + {}i is outside the two-translate covering region",
            lambda.re(),
            lambda.im()
        )));
    }
    const GRID: usize = 64;
    let (a_lo, a_hi) = (1.0f64, 40.0f64);
    let (b_lo, b_hi) = (std::f64::consts::FRAC_1_SQRT_2, 40.0f64);
    let mut window = (a_lo, a_hi, b_lo, b_hi);
    let mut best = (f64::INFINITY, a_lo, b_lo);
    for _level in 0..3 {
        let (alo, ahi, blo, bhi) = window;
        let da = (ahi - alo) / (GRID - 1) as f64;
        let db = (bhi - blo) / (GRID - 1) as f64;
        for i in 0..GRID {
            let a = alo + da * i as f64;
            for j in 0..GRID {
                let b = blo + db * j as f64;
                let rect = Rectangle::new(a, b)?;
                let geo = verify_cover_geometric(lambda, &rect, TranslateSet::PlusMinus)?;
                if geo.covered {
                    return Ok(OmegaCoverOutcome::Found(make_cover_certificate(
                        lambda,
                        a,
                        b,
                        TranslateSet::PlusMinus,
                    )?));
                }
                if geo.residual_area < best.0 {
                    best = (geo.residual_area, a, b);
                }
            }
        }
        // Refine around the best residual.
        let da = (window.1 - window.0) / (GRID - 1) as f64;
        let db = (window.3 - window.2) / (GRID - 1) as f64;
        window = (
            (best.1 - da).max(a_lo),
            (best.1 + da).min(a_hi),
            (best.2 - db).max(b_lo),
            (best.2 + db).min(b_hi),
        );
    }
    Ok(OmegaCoverOutcome::NotFound { best_a: best.1, best_b: best.2, best_residual: best.0 })
}

/// Residual bound a certified disc center must satisfy.
pub const DISC_CENTER_RESIDUAL_TOL: f64 = 1e-10;

/// Clause that rejected a disc certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectClause {
    /// |p(λ₀)| (plus evaluation rounding) exceeds the residual tolerance.
    CenterResidual,
    /// The closed disc is not contained in the interior of H.
    DiscNotInteriorH,
    /// |p(λ₀)| + δ·L exceeds the self-similar floor 0.5·(|λ₀|−δ)^{n+1}.
    ContractionInequality,
    /// A covering re-check at a sample point of the disc failed.
    CoverSpotCheck,
}

/// One covering re-check at a sample point of the certified disc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverSpotCheck {
    pub point: Complex64,
    pub min_slack: f64,
    pub residual_area: f64,
}

/// Certificate that the closed disc B_δ(λ₀) lies in the connectivity locus:
/// λ₀ is a root of the {0,±1} polynomial, the disc stays in int(H), and the
/// polynomial moves by less than the self-similar floor across the disc.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscCertificate {
    pub schema_version: u32,
    pub kind: String,
    /// Digits a_1..a_n of 1 + Σ a_k z^k.
    pub digits: Vec<i8>,
    pub degree: usize,
    pub center: Complex64,
    pub radius: f64,
    /// |p(λ₀)| inflated by the evaluation rounding bound.
    pub center_residual: f64,
    /// L = Σ |a_k|·k·ρ^{k−1} at ρ = |λ₀|+δ: a per-polynomial Lipschitz
    /// constant on the disc, sharper than the universal (1−2^{−1/2})^{−2}.
    pub lipschitz_bound: f64,
    /// 0.5·(|λ₀|−δ)^{n+1}, the worst-case self-similar floor on the disc.
    pub floor_bound: f64,
    /// floor_bound − (center_residual + δ·L) ≥ 0.
    pub margin: f64,
    /// Covering re-checks at the center and eight boundary points.
    pub cover_checks: Vec<CoverSpotCheck>,
}

pub const DISC_CERTIFICATE_KIND: &str = "disc-certificate";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CertifyOutcome {
    Accepted(Box<DiscCertificate>),
    Rejected { clause: RejectClause, detail: String },
}

impl CertifyOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CertifyOutcome::Accepted(_))
    }
}

// The negated comparisons fail closed: a NaN anywhere rejects the disc.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn check_disc_in_interior_h(center: &Parameter, delta: f64) -> std::result::Result<(), String> {
    let r_min = ulp::down(center.modulus() - delta);
    let r_max = ulp::up(center.modulus() + delta);
    if r_min <= 0.0 {
        return Err("disc contains the origin".into());
    }
    let r_min2 = ulp::mul_down(r_min, r_min);
    let r_max2 = ulp::mul_up(r_max, r_max);
    if !(r_min2 > 1.0 / 3.0) {
        return Err(format!("inner modulus² {r_min2} ≤ 1/3"));
    }
    if !(r_max2 < 0.5) {
        return Err(format!("outer modulus² {r_max2} ≥ 1/2"));
    }
    let re_lo = ulp::down(center.re() - delta);
    let re_hi = ulp::up(center.re() + delta);
    if !(re_lo > 0.0) {
        return Err(format!("Re range reaches {re_lo} ≤ 0"));
    }
    let upper = ulp::down((3.0 * r_min2 - 1.0) / 2.0);
    if !(re_hi < upper) {
        return Err(format!("Re range {re_hi} ≥ circle bound {upper}"));
    }
    Ok(())
}

/// Certifies that every parameter within δ of the polynomial root λ₀ lies
/// in the connectivity locus. Preconditions: digits in {0,±1} with the
/// leading one, degree ≥ 1, δ ≥ 0 finite. Acceptance clauses: (i) the
/// closed disc lies in int(H), by conservative interval evaluation of the
/// three region constraints; (ii) |p(λ₀)| + δ·L ≤ 0.5·(|λ₀|−δ)^{n+1}. As a
/// defense-in-depth check the covering construction is re-verified at the
/// center and eight boundary points.
pub fn certify_disc(
    p: &DigitString,
    center: &Parameter,
    delta: f64,
) -> Result<CertifyOutcome> {
    if !p.leading_one() {
        return Err(Error::Precondition("polynomial must have constant term 1".into()));
    }
    let degree = p.degree();
    if degree < 1 {
        return Err(Error::Precondition("polynomial degree must be ≥ 1".into()));
    }
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::Precondition("radius must be finite and ≥ 0".into()));
    }
    let eval = eval_prefix(p, center);
    let center_residual = ulp::add_up(eval.value.norm(), eval.rounding_error);
    if center_residual > DISC_CENTER_RESIDUAL_TOL {
        return Ok(CertifyOutcome::Rejected {
            clause: RejectClause::CenterResidual,
            detail: format!(
                "|p(λ₀)| = {center_residual:.3e} exceeds {DISC_CENTER_RESIDUAL_TOL:.1e}"
            ),
        });
    }
    if let Err(detail) = check_disc_in_interior_h(center, delta) {
        return Ok(CertifyOutcome::Rejected { clause: RejectClause::DiscNotInteriorH, detail });
    }
    let rho = ulp::up(center.modulus() + delta);
    let mut lipschitz = 0.0f64;
    for (i, &d) in p.digits().iter().enumerate() {
        if d != 0 {
            let k = (i + 1) as u32;
            lipschitz = ulp::add_up(lipschitz, ulp::mul_up(k as f64, ulp::pow_up(rho, k - 1)));
        }
    }
    let r_min = ulp::down(center.modulus() - delta);
    let floor_bound = ulp::mul_down(0.5, ulp::pow_down(r_min, degree as u32 + 1));
    let moved = ulp::add_up(center_residual, ulp::mul_up(delta, lipschitz));
    if moved > floor_bound {
        return Ok(CertifyOutcome::Rejected {
            clause: RejectClause::ContractionInequality,
            detail: format!(
                "|p(λ₀)| + δ·L = {moved:.6e} exceeds 0.5(|λ₀|−δ)^{} = {floor_bound:.6e}",
                degree + 1
            ),
        });
    }
    // Re-verify the covering construction across the disc: center plus
    // eight boundary points.
    let mut cover_checks = Vec::with_capacity(9);
    let mut points = vec![center.as_complex()];
    for k in 0..8 {
        let ang = std::f64::consts::FRAC_PI_4 * k as f64;
        points.push(center.as_complex() + Complex64::from_polar(delta, ang));
    }
    for pt in points {
        let lam = Parameter::new(pt.re, pt.im)
            .map_err(|e| Error::Numeric(format!("sample point escaped the unit disk: {e}")))?;
        let fail = |detail: String| CertifyOutcome::Rejected {
            clause: RejectClause::CoverSpotCheck,
            detail,
        };
        if !h_contains(&lam, true) {
            return Ok(fail(format!("sample {pt} left int(H)")));
        }
        let (a, b, _) = cover_params(&lam)?;
        let slacks = verify_conditions(&lam, a, b)?;
        if slacks.min() < -1e-12 {
            return Ok(fail(format!("condition slack {} at {pt}", slacks.min())));
        }
        let rect = Rectangle::new(a, b)?;
        let geo = verify_cover_geometric(&lam, &rect, TranslateSet::ZeroPlusMinus)?;
        if !geo.covered {
            return Ok(fail(format!("geometric residual {} at {pt}", geo.residual_area)));
        }
        cover_checks.push(CoverSpotCheck {
            point: pt,
            min_slack: slacks.min(),
            residual_area: geo.residual_area,
        });
    }
    Ok(CertifyOutcome::Accepted(Box::new(DiscCertificate {
        schema_version: SCHEMA_VERSION,
        kind: DISC_CERTIFICATE_KIND.into(),
        digits: p.digits().to_vec(),
        degree,
        center: center.as_complex(),
        radius: delta,
        center_residual,
        lipschitz_bound: lipschitz,
        floor_bound,
        margin: floor_bound - moved,
        cover_checks,
    })))
}

/// Recomputes a disc certificate from its inputs and compares every derived
/// field bit for bit.
pub fn reverify_disc_certificate(cert: &DiscCertificate) -> Result<bool> {
    let digits =
        DigitString::new(cert.digits.clone(), crate::base::Alphabet::ZeroPlusMinus, true)?;
    let center = Parameter::new(cert.center.re, cert.center.im)?;
    match certify_disc(&digits, &center, cert.radius)? {
        CertifyOutcome::Accepted(fresh) => Ok(*fresh == *cert),
        CertifyOutcome::Rejected { .. } => Ok(false),
    }
}

/// Largest certified radius around a polynomial root, by bisection to
/// relative precision 1e-6; zero when even the degenerate disc fails.
pub fn max_certified_radius(p: &DigitString, center: &Parameter) -> Result<f64> {
    if !certify_disc(p, center, 0.0)?.is_accepted() {
        return Ok(0.0);
    }
    let mut lo = 0.0f64;
    let mut hi = 0.2f64;
    if certify_disc(p, center, hi)?.is_accepted() {
        return Ok(hi);
    }
    while hi - lo > 1e-6 * hi {
        let mid = 0.5 * (lo + hi);
        if certify_disc(p, center, mid)?.is_accepted() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}
