//! Numerics for the complex Bernoulli convolution: the Fourier transform as
//! an infinite cosine product with rigorous truncation error, singularity
//! witnesses at reciprocals of complex Pisot numbers, cardinality and
//! separation verification at reciprocals of complex Garsia numbers,
//! empirical density histograms, the double-zero transversality bound, and
//! the almost-sure region classifier.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebraic::{classify_near, find_roots, AlgebraicNumber, ClassKind};
use crate::base::Parameter;
use crate::base::Window;
use crate::caps;
use crate::error::{Error, Result};
use crate::SCHEMA_VERSION;

/// A truncated value of the Fourier product ∏ cos(Re(λⁿ ξ̄)) with a rigorous
/// bound on the discarded tail: each omitted factor differs from 1 by at
/// most |λⁿξ|²/2, so the product of omitted factors lies within
/// E = Σ_{n≥N} |λⁿξ|²/2 of 1 whenever E < 1 (and the value is clamped to
/// the trivial bound 2|value| otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourierValue {
    pub value: f64,
    pub truncation_error: f64,
    pub terms_used: u32,
}

fn tail_energy(r: f64, xi_norm: f64, from_term: u32) -> f64 {
    // Σ_{n ≥ from} (rⁿ|ξ|)²/2 = |ξ|² r^{2·from} / (2(1−r²))
    let r2 = r * r;
    0.5 * xi_norm * xi_norm * r2.powi(from_term as i32) / (1.0 - r2)
}

fn fourier_error(value: f64, energy: f64) -> f64 {
    if energy < 1.0 {
        (value.abs() * energy / (1.0 - energy)).min(2.0 * value.abs())
    } else {
        2.0 * value.abs()
    }
}

/// Truncated Fourier transform of the convolution at frequency ξ:
/// ∏_{n<N} cos(Re(λⁿ ξ̄)). The value is real and at most 1 in modulus.
pub fn fourier_nu(lambda: &Parameter, xi: Complex64, terms: u32) -> Result<FourierValue> {
    if terms < 1 {
        return Err(Error::Precondition("at least one product term is required".into()));
    }
    if terms > caps::MAX_FOURIER_TERMS {
        return Err(Error::Resource {
            what: format!("fourier terms {terms}"),
            cap: caps::MAX_FOURIER_TERMS as u64,
        });
    }
    let z = lambda.as_complex();
    let mut w = xi.conj();
    let mut value = 1.0f64;
    for _ in 0..terms {
        value *= w.re.cos();
        w *= z;
    }
    let energy = tail_energy(lambda.modulus(), xi.norm(), terms);
    Ok(FourierValue { value, truncation_error: fourier_error(value, energy), terms_used: terms })
}

/// Fourier transform with the truncation point chosen automatically: terms
/// are consumed until the tail bound drops below 1e-12 of the running
/// product magnitude, capped at the configured ceiling.
pub fn fourier_nu_auto(lambda: &Parameter, xi: Complex64) -> FourierValue {
    let z = lambda.as_complex();
    let r = lambda.modulus();
    let xi_norm = xi.norm();
    let mut w = xi.conj();
    let mut value = 1.0f64;
    let mut terms = 0u32;
    while terms < caps::DEFAULT_FOURIER_TERMS {
        let energy = tail_energy(r, xi_norm, terms);
        if terms > 0 && energy < 1e-12 * value.abs().max(1e-300) {
            break;
        }
        value *= w.re.cos();
        w *= z;
        terms += 1;
    }
    let energy = tail_energy(r, xi_norm, terms);
    FourierValue { value, truncation_error: fourier_error(value, energy), terms_used: terms }
}

/// One row of the distance scan: 2Re(θⁿ) computed along two independent
/// routes, and its distance to the nearest integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayRow {
    pub n: u32,
    /// Integer power sum s_n = Σ_j θ_jⁿ over all conjugates, from the
    /// Newton recurrence on the minimal polynomial.
    pub power_sum: i64,
    /// 2Re(θⁿ) by floating complex powers.
    pub two_re_float: f64,
    /// s_n minus the floating sum of the non-selected, non-conjugate
    /// conjugate powers.
    pub two_re_recurrence: f64,
    pub dist_to_integer: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayScan {
    pub rows: Vec<DecayRow>,
    /// Least-squares geometric rate fitted on log-distances over rows with
    /// distance in (1e-13, 0.1); absent when fewer than two rows qualify.
    pub fitted_rho: Option<f64>,
}

/// Integer power sums s_n = Σ roots^n of a monic integer polynomial, by the
/// Newton recurrence.
fn power_sums(coeffs: &[i64], n_max: u32) -> Vec<i128> {
    let m = coeffs.len() - 1;
    debug_assert_eq!(coeffs[m], 1);
    let c = |k: usize| coeffs[k] as i128;
    let mut s = vec![0i128; (n_max + 1) as usize];
    s[0] = m as i128;
    for n in 1..=n_max as usize {
        // s_n + Σ_{i=1..min(n−1,m)} c_{m−i} s_{n−i} + [n ≤ m]·n·c_{m−n} = 0
        let mut acc: i128 = 0;
        for i in 1..=(n - 1).min(m) {
            acc += c(m - i) * s[n - i];
        }
        if n <= m {
            s[n] = -(n as i128) * c(m - n) - acc;
        } else {
            s[n] = -acc;
        }
    }
    s
}

/// Distances of 2Re(θⁿ) to the nearest integer for a complex Pisot number,
/// computed both by floating powers and by the integer Newton power-sum
/// recurrence, together with the fitted geometric decay rate.
pub fn pisot_decay_scan(theta: &AlgebraicNumber, n_max: u32) -> Result<DecayScan> {
    let cls = classify_near(&theta.minpoly, theta.root)?;
    if cls.kind != ClassKind::ComplexPisot {
        return Err(Error::Precondition(format!(
            "decay scan requires a complex Pisot number, got {:?}",
            cls.kind
        )));
    }
    let sums = power_sums(theta.minpoly.coeffs(), n_max);
    let roots = find_roots(&theta.minpoly)?;
    // Conjugates other than θ and its complex conjugate.
    let theta_idx = roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (a.value - theta.root).norm().total_cmp(&(b.value - theta.root).norm())
        })
        .map(|(i, _)| i)
        .unwrap();
    let conj_idx = roots
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != theta_idx)
        .min_by(|(_, a), (_, b)| {
            (a.value - theta.root.conj())
                .norm()
                .total_cmp(&(b.value - theta.root.conj()).norm())
        })
        .map(|(j, _)| j)
        .unwrap();
    let others: Vec<Complex64> = roots
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != theta_idx && *j != conj_idx)
        .map(|(_, r)| r.value)
        .collect();
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    let mut theta_pow = Complex64::new(1.0, 0.0);
    let mut other_pows: Vec<Complex64> = others.iter().map(|_| Complex64::new(1.0, 0.0)).collect();
    for n in 0..=n_max {
        let two_re_float = 2.0 * theta_pow.re;
        let other_sum: Complex64 = other_pows.iter().sum();
        let two_re_recurrence = sums[n as usize] as f64 - other_sum.re;
        let dist = (two_re_float - two_re_float.round()).abs();
        rows.push(DecayRow {
            n,
            power_sum: sums[n as usize] as i64,
            two_re_float,
            two_re_recurrence,
            dist_to_integer: dist,
        });
        theta_pow *= theta.root;
        for (p, o) in other_pows.iter_mut().zip(&others) {
            *p *= o;
        }
    }
    // Geometric fit on the clean decay regime.
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.n >= 1 && r.dist_to_integer > 1e-13 && r.dist_to_integer < 0.1)
        .map(|r| (r.n as f64, r.dist_to_integer.ln()))
        .collect();
    let fitted_rho = if pts.len() >= 2 {
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        Some(slope.exp())
    } else {
        None
    };
    Ok(DecayScan { rows, fitted_rho })
}

/// One frequency of the singularity witness scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WitnessRow {
    pub n: u32,
    /// |ν̂(2π θ̄ⁿ)| via the direct cosine product.
    pub direct: f64,
    pub direct_error: f64,
    /// The same value via the factorization ∏_{k≤n} cos(2πRe(θᵏ)) · ν̂(2π).
    pub factorized: f64,
}

/// Witness that the Fourier transform does not vanish along the frequency
/// sequence 2πθ̄ⁿ, hence the convolution is singular.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessScan {
    pub rows: Vec<WitnessRow>,
    pub min_direct: f64,
    /// Floor ∏_n |cos(2π·dist_n)| · |ν̂(2π)| computed from the measured
    /// distance sequence (the analytic constant in the decay bound is not
    /// pinned down independently, so the floor is data-driven).
    pub floor: f64,
    pub base_value: f64,
    pub base_error: f64,
}

/// Evaluates |ν̂(2πθ̄ⁿ)| for n ≤ n_max along two routes and reports the
/// minimum together with a strictly positive floor. Requires a complex
/// Pisot number with 1 < |θ| < √2 (above √2 the support already has zero
/// area and the transform question is moot).
pub fn singularity_witness(
    theta: &AlgebraicNumber,
    n_max: u32,
    terms: Option<u32>,
) -> Result<WitnessScan> {
    let cls = classify_near(&theta.minpoly, theta.root)?;
    if cls.kind != ClassKind::ComplexPisot {
        return Err(Error::Precondition(format!(
            "singularity witness requires a complex Pisot number, got {:?}",
            cls.kind
        )));
    }
    let modulus = theta.root.norm();
    if modulus >= std::f64::consts::SQRT_2 {
        return Err(Error::Precondition(format!(
            "|θ| = {modulus} ≥ √2: the convolution is trivially singular"
        )));
    }
    let lambda_c = theta.root.inv();
    let lambda = Parameter::new(lambda_c.re, lambda_c.im)?;
    let tau = 2.0 * std::f64::consts::PI;
    let base = match terms {
        Some(t) => fourier_nu(&lambda, Complex64::new(tau, 0.0), t)?,
        None => fourier_nu_auto(&lambda, Complex64::new(tau, 0.0)),
    };
    let scan_len = n_max.max(200);
    let decay = pisot_decay_scan(theta, scan_len)?;
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    let mut cos_product = 1.0f64;
    let mut theta_conj_pow = Complex64::new(1.0, 0.0);
    let mut min_direct = f64::INFINITY;
    for n in 0..=n_max {
        if n > 0 {
            cos_product *= (tau * decay.rows[n as usize].two_re_float / 2.0).cos();
        }
        let xi = theta_conj_pow * tau;
        let direct = match terms {
            Some(t) => fourier_nu(&lambda, xi, t)?,
            None => fourier_nu_auto(&lambda, xi),
        };
        min_direct = min_direct.min(direct.value.abs());
        rows.push(WitnessRow {
            n,
            direct: direct.value.abs(),
            direct_error: direct.truncation_error,
            factorized: (cos_product * base.value).abs(),
        });
        theta_conj_pow *= theta.root.conj();
    }
    // Data-driven floor: every |cos(2πRe θⁿ)| equals |cos(2π·dist_n)|, and
    // the scanned range covers the sequence until the distances are far
    // below the floating noise floor.
    let mut floor = (base.value.abs() - base.truncation_error).max(0.0);
    for row in decay.rows.iter().skip(1) {
        floor *= (tau * row.dist_to_integer).cos().abs();
    }
    Ok(WitnessScan {
        rows,
        min_direct,
        floor,
        base_value: base.value,
        base_error: base.truncation_error,
    })
}

/// Level-n separation report for a Garsia reciprocal: the 2ⁿ signed power
/// sums are pairwise separated by c·2^{−n/2} with
/// c = 2|θ|·∏_{other conjugates}(|θ_j|−1)^{1/2}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub n: u32,
    pub count: u64,
    pub min_distance: f64,
    /// c·2^{−n/2}.
    pub bound: f64,
    pub c: f64,
}

/// Exact minimum pairwise distance via a uniform grid: any pair closer than
/// the cell size lands in neighboring cells, so the scan is exact once the
/// detected minimum is below the cell size; otherwise the cell is doubled.
fn min_pairwise_distance(points: &[Complex64], initial_cell: f64) -> f64 {
    use std::collections::HashMap;
    if points.len() < 2 {
        return f64::INFINITY;
    }
    let mut cell = initial_cell.max(1e-300);
    loop {
        let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            let key = ((p.re / cell).floor() as i64, (p.im / cell).floor() as i64);
            grid.entry(key).or_default().push(i);
        }
        let mut best = f64::INFINITY;
        for (&(gx, gy), members) in &grid {
            for dx in -1..=1i64 {
                for dy in -1..=1i64 {
                    let Some(neigh) = grid.get(&(gx + dx, gy + dy)) else { continue };
                    for &i in members {
                        for &j in neigh {
                            if j > i {
                                best = best.min((points[i] - points[j]).norm());
                            }
                        }
                    }
                }
            }
        }
        if best <= cell {
            return best;
        }
        cell *= 2.0;
    }
}

/// Enumerates the 2ⁿ level-n signed power sums at λ = 1/θ and verifies the
/// Garsia cardinality and separation quantities. Requires a complex Garsia
/// number whose minimal polynomial has constant term ±2.
pub fn garsia_separation(theta: &AlgebraicNumber, n: u32) -> Result<SeparationReport> {
    garsia_separation_with_cap(theta, n, caps::DEFAULT_LEVEL_CAP)
}

pub fn garsia_separation_with_cap(
    theta: &AlgebraicNumber,
    n: u32,
    cap: u32,
) -> Result<SeparationReport> {
    if n > cap || n > caps::MAX_LEVEL {
        return Err(Error::Resource {
            what: format!("separation level {n}"),
            cap: cap.min(caps::MAX_LEVEL) as u64,
        });
    }
    if n < 1 {
        return Err(Error::Precondition("level must be ≥ 1".into()));
    }
    let cls = classify_near(&theta.minpoly, theta.root)?;
    if cls.kind != ClassKind::ComplexGarsia {
        return Err(Error::Precondition(format!(
            "separation requires a complex Garsia number, got {:?}",
            cls.kind
        )));
    }
    if !cls.constant_pm2 {
        return Err(Error::Precondition(
            "separation requires a minimal polynomial with constant term ±2".into(),
        ));
    }
    let lambda = theta.root.inv();
    // c = 2|θ| ∏ (|θ_j| − 1)^{1/2} over conjugates other than θ, θ̄.
    let modulus = theta.root.norm();
    let mut c = 2.0 * modulus;
    let mut skipped_pair = 0;
    for &m in &theta.conjugate_moduli {
        if skipped_pair < 2 && (m - modulus).abs() < 1e-9 {
            skipped_pair += 1;
            continue;
        }
        c *= (m - 1.0).sqrt();
    }
    let bound = c * 2f64.powf(-(n as f64) / 2.0);
    // All Σ_{k<n} ±λᵏ by doubling.
    let mut points = vec![Complex64::new(0.0, 0.0)];
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        let mut next = Vec::with_capacity(points.len() * 2);
        for &p in &points {
            next.push(p + power);
            next.push(p - power);
        }
        points = next;
        power *= lambda;
    }
    let mut sorted = points.clone();
    sorted.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    sorted.dedup_by(|a, b| a.re == b.re && a.im == b.im);
    let count = sorted.len() as u64;
    let min_distance = min_pairwise_distance(&points, bound);
    Ok(SeparationReport { n, count, min_distance, bound, c })
}

/// Location and value of the densest histogram cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub n: u32,
    pub window: Window,
    pub resolution: [u32; 2],
    /// max over cells of (cell mass)/(cell area), with each of the 2ⁿ
    /// level-n points carrying mass 2⁻ⁿ.
    pub max_ratio: f64,
    pub max_cell: [u32; 2],
    pub max_cell_center: Complex64,
    /// Fraction of the total mass that landed inside the window.
    pub mass_in_window: f64,
}

/// Bins the level-n signed power sums with uniform weights 2⁻ⁿ and reports
/// the maximal cell density.
pub fn density_histogram(
    lambda: &Parameter,
    n: u32,
    window: &Window,
    width: u32,
    height: u32,
) -> Result<DensityReport> {
    if n > caps::MAX_LEVEL {
        return Err(Error::Resource {
            what: format!("histogram level {n}"),
            cap: caps::MAX_LEVEL as u64,
        });
    }
    if width < 1 || height < 1 {
        return Err(Error::Precondition("resolution must be at least 1×1".into()));
    }
    let z = lambda.as_complex();
    let mut points = vec![Complex64::new(0.0, 0.0)];
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        let mut next = Vec::with_capacity(points.len() * 2);
        for &p in &points {
            next.push(p + power);
            next.push(p - power);
        }
        points = next;
        power *= z;
    }
    let weight = 0.5f64.powi(n as i32);
    let px_w = window.width() / width as f64;
    let px_h = window.height() / height as f64;
    let mut mass = vec![0.0f64; (width * height) as usize];
    let mut in_window = 0.0f64;
    for p in &points {
        if !window.contains(*p) {
            continue;
        }
        let ix = (((p.re - window.x0) / px_w).floor() as i64).clamp(0, width as i64 - 1) as u32;
        let iy = (((window.y1 - p.im) / px_h).floor() as i64).clamp(0, height as i64 - 1) as u32;
        mass[(iy * width + ix) as usize] += weight;
        in_window += weight;
    }
    let cell_area = px_w * px_h;
    let (best_idx, best_mass) = mass
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.total_cmp(b))
        .unwrap();
    let bx = best_idx as u32 % width;
    let by = best_idx as u32 / width;
    Ok(DensityReport {
        n,
        window: *window,
        resolution: [width, height],
        max_ratio: best_mass / cell_area,
        max_cell: [bx, by],
        max_cell_center: Complex64::new(
            window.x0 + (bx as f64 + 0.5) * px_w,
            window.y1 - (by as f64 + 0.5) * px_h,
        ),
        mass_in_window: in_window,
    })
}

/// Radius below which a power series 1 + Σ a_n zⁿ with coefficients in
/// [−1,1] cannot have k roots: k^{−1/2k}·(1+1/k)^{−(1+1/k)/2}. At k = 4
/// this is the double-zero transversality radius 2·5^{−5/8}.
pub fn transversality_bound(k: u32) -> Result<f64> {
    if k < 1 {
        return Err(Error::Domain("root count must be ≥ 1".into()));
    }
    let kf = k as f64;
    Ok(kf.powf(-1.0 / (2.0 * kf)) * (1.0 + 1.0 / kf).powf(-0.5 * (1.0 + 1.0 / kf)))
}

/// One annulus interval on which the convolution has a continuous density
/// for almost every parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityInterval {
    pub k: u32,
    pub low: f64,
    pub high: f64,
}

/// The intervals (2^{−1/(2k)}, (2·5^{−5/8})^{1/k}) for k = 2..k_max, plus
/// the smallest k at which consecutive intervals overlap (from there on the
/// union is a single ray approaching 1). The overlap index is reported only
/// when both intervals of the overlapping pair are within k_max.
pub fn continuous_density_intervals(
    k_max: u32,
) -> Result<(Vec<DensityInterval>, Option<u32>)> {
    if k_max < 2 {
        return Err(Error::Precondition("k_max must be ≥ 2".into()));
    }
    let t4 = transversality_bound(4)?;
    let interval = |k: u32| {
        let kf = k as f64;
        DensityInterval { k, low: 2f64.powf(-1.0 / (2.0 * kf)), high: t4.powf(1.0 / kf) }
    };
    let intervals: Vec<DensityInterval> = (2..=k_max).map(interval).collect();
    let mut overlap = None;
    for k in 2..k_max {
        if interval(k + 1).low < interval(k).high {
            overlap = Some(k);
            break;
        }
    }
    Ok((intervals, overlap))
}

/// Almost-sure statements that apply at a given modulus. Every claim is
/// about almost every parameter in the stated annulus; nothing is asserted
/// about the individual parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub schema_version: u32,
    pub lambda: Complex64,
    pub modulus: f64,
    pub similarity_dimension: Option<f64>,
    /// |λ| < 1/2: outside the locus, the attractor is totally disconnected
    /// and has Hausdorff dimension equal to the similarity dimension.
    pub below_locus: bool,
    /// |λ| < 2^{−1/2}: almost surely dim_H = s(λ) on the locus, with the
    /// stated bound on the dimension of the exceptional parameter set, the
    /// similarity-dimension Hausdorff measure vanishing and the packing
    /// measure positive and finite.
    pub dimension_formula: Option<DimensionFormulaReport>,
    /// 2^{−1/2} ≤ |λ| ≤ 2·5^{−5/8}: almost surely an L² density.
    pub l2_density: Option<L2DensityReport>,
    /// |λ| in some (2^{−1/(2k)}, (2·5^{−5/8})^{1/k}): almost surely a
    /// continuous density.
    pub continuous_density: Option<DensityInterval>,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionFormulaReport {
    /// s(λ) = log 2 / (−log |λ|).
    pub almost_sure_dimension: f64,
    /// Upper bound log2/(−log R) on the Hausdorff dimension of the
    /// exceptional set in any annulus r < |λ| < R < 2^{−1/2}.
    pub exceptional_dimension_bound: f64,
    pub hausdorff_measure_zero: bool,
    pub packing_measure_positive_finite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct L2DensityReport {
    pub low: f64,
    pub high: f64,
    /// 4 − log2/(−log r): bound on the dimension of the exceptional set in
    /// any annulus r < |λ| < R inside the L² range.
    pub exceptional_dimension_bound: f64,
}

/// Classifies which almost-sure statements apply at |λ|.
pub fn typical_region_report(lambda: &Parameter) -> RegionReport {
    let r = lambda.modulus();
    let s = crate::base::similarity_dimension(lambda).ok();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let t4 = transversality_bound(4).expect("k = 4 is valid");
    let dimension_formula = if r > 0.0 && r < inv_sqrt2 {
        Some(DimensionFormulaReport {
            almost_sure_dimension: s.unwrap_or(0.0),
            exceptional_dimension_bound: std::f64::consts::LN_2 / -r.ln(),
            hausdorff_measure_zero: true,
            packing_measure_positive_finite: true,
        })
    } else {
        None
    };
    let l2_density = if (inv_sqrt2..=t4).contains(&r) {
        Some(L2DensityReport {
            low: inv_sqrt2,
            high: t4,
            exceptional_dimension_bound: 4.0 - std::f64::consts::LN_2 / -r.ln(),
        })
    } else {
        None
    };
    let mut continuous_density = None;
    let mut k = 2u32;
    while k < 100_000 {
        let kf = k as f64;
        let low = 2f64.powf(-1.0 / (2.0 * kf));
        if low >= r {
            break;
        }
        let high = t4.powf(1.0 / kf);
        if r < high {
            continuous_density = Some(DensityInterval { k, low, high });
            break;
        }
        k += 1;
    }
    RegionReport {
        schema_version: SCHEMA_VERSION,
        lambda: lambda.as_complex(),
        modulus: r,
        similarity_dimension: s,
        below_locus: r < 0.5,
        dimension_formula,
        l2_density,
        continuous_density,
        note: "all statements hold for almost every parameter in the stated annulus; \
               nothing is asserted about this particular value"
            .into(),
    }
}
