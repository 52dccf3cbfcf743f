//! Finite approximations of the attractors A_λ (digits ±1) and A_λ{−1,0,1},
//! exact polygon attractors for parameters on rational-angle rays, the
//! two-translate covering region test, and raster images.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::base::{geometric_tail_upper, ulp, Alphabet, Parameter, Window};
use crate::caps;
use crate::error::{Error, Result};
use crate::geometry;
use crate::raster::Raster;

/// Distinct level-n prefix sums Σ_{k<n} a_k λ^k together with the covering
/// radius: the full attractor lies within `covering_radius` of the cloud,
/// and every cloud point lies within `covering_radius` of the attractor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    points: Vec<Complex64>,
    pub lambda: Complex64,
    pub depth: u32,
    pub alphabet: Alphabet,
    pub covering_radius: f64,
}

impl PointCloud {
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn canonical_key(z: &Complex64) -> (u64, u64) {
    (z.re.to_bits(), z.im.to_bits())
}

/// Normalizes −0.0 to +0.0 so bit-exact deduplication treats them as equal.
fn clean_zero(z: Complex64) -> Complex64 {
    Complex64::new(z.re + 0.0, z.im + 0.0)
}

/// All distinct values Σ_{k=0..n−1} a_k λ^k with digits in the alphabet.
/// Deduplication is bit-exact only; near-coincident points are kept so that
/// cardinality statements can be tested on the raw values.
pub fn prefix_sums(lambda: &Parameter, alphabet: Alphabet, n: u32) -> Result<PointCloud> {
    let branch = alphabet.size();
    let total = (branch as f64).powi(n as i32);
    if total > caps::ENUM_POINT_CAP as f64 {
        return Err(Error::Resource {
            what: format!("prefix enumeration {branch}^{n}"),
            cap: caps::ENUM_POINT_CAP,
        });
    }
    let z = lambda.as_complex();
    let powers: Vec<Complex64> = {
        let mut p = Vec::with_capacity(n as usize);
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 0..n {
            p.push(acc);
            acc *= z;
        }
        p
    };
    // Split the top digit to parallelize over disjoint subtrees; each branch
    // enumerates its subtree independently and the union is sorted
    // canonically, so the result is schedule-independent.
    let digits = alphabet.digits();
    let enumerate_subtree = |top: i8| -> Vec<Complex64> {
        let mut points = vec![Complex64::new(0.0, 0.0)];
        if n == 0 {
            return points;
        }
        points = vec![Complex64::new(top as f64, 0.0) * powers[(n - 1) as usize]];
        for k in (0..n - 1).rev() {
            let mut next = Vec::with_capacity(points.len() * digits.len());
            for &d in digits {
                let offset = Complex64::new(d as f64, 0.0) * powers[k as usize];
                next.extend(points.iter().map(|p| p + offset));
            }
            points = next;
        }
        points
    };
    let mut points: Vec<Complex64> = if n == 0 {
        vec![Complex64::new(0.0, 0.0)]
    } else {
        digits
            .par_iter()
            .map(|&d| enumerate_subtree(d))
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
    };
    for p in points.iter_mut() {
        *p = clean_zero(*p);
    }
    points.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    points.dedup_by(|a, b| canonical_key(a) == canonical_key(b));
    let covering_radius = geometric_tail_upper(ulp::up(lambda.modulus()), n);
    Ok(PointCloud {
        points,
        lambda: z,
        depth: n,
        alphabet,
        covering_radius,
    })
}

/// Strictly convex polygon, counterclockwise, canonically rotated to start
/// at the vertex of maximal real part (ties broken by maximal imaginary
/// part).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Complex64>,
}

impl ConvexPolygon {
    fn from_vertices(mut vertices: Vec<Complex64>) -> Self {
        if geometry::signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        let start = vertices
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        geometry::signed_area(&self.vertices)
    }

    /// Interior angles at each vertex, in radians. For a counterclockwise
    /// polygon the interior angle is the rotation from the outgoing edge
    /// direction to the incoming-reversed direction.
    pub fn interior_angles(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let prev = self.vertices[(i + n - 1) % n];
                let here = self.vertices[i];
                let next = self.vertices[(i + 1) % n];
                let u = prev - here;
                let v = next - here;
                let dot = u.re * v.re + u.im * v.im;
                let cross = v.re * u.im - v.im * u.re;
                cross.atan2(dot).rem_euclid(2.0 * std::f64::consts::PI)
            })
            .collect()
    }
}

/// Which rational-angle family the parameter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolygonForm {
    /// λ = r·e^{iπm/n}: the attractor is a 2n-gon with angles π(n−1)/n.
    HalfTurn,
    /// λ = r·e^{2πim/(2n+1)}: a (4n+2)-gon with angles π·2n/(2n+1).
    OddFullTurn,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The exact polygon attractor as a Minkowski sum of rotated segments.
/// With N = n (half-turn) or N = 2n+1 (odd full turn), λ^N is ±r^N, so
/// A_{λ^N} is the real segment of length 2/(1−r^N) once r^N ≥ 1/2, and
/// A_λ = A_{λ^N} + λA_{λ^N} + ⋯ + λ^{N−1}A_{λ^N} is a zonotope.
pub fn polygon_attractor(r: f64, m: u32, n: u32, form: PolygonForm) -> Result<ConvexPolygon> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Precondition(format!("radius must be in (0,1), got {r}")));
    }
    let (segments, angle_step, modulus) = match form {
        PolygonForm::HalfTurn => {
            if n < 2 {
                return Err(Error::Precondition("half-turn form needs n ≥ 2".into()));
            }
            if gcd(m as u64, n as u64) != 1 {
                return Err(Error::Precondition(format!("gcd({m},{n}) must be 1")));
            }
            (n, std::f64::consts::PI * m as f64 / n as f64, n)
        }
        PolygonForm::OddFullTurn => {
            if n < 1 {
                return Err(Error::Precondition("odd-full-turn form needs n ≥ 1".into()));
            }
            let denom = 2 * n + 1;
            if gcd(m as u64, denom as u64) != 1 {
                return Err(Error::Precondition(format!("gcd({m},{denom}) must be 1")));
            }
            (
                denom,
                2.0 * std::f64::consts::PI * m as f64 / denom as f64,
                denom,
            )
        }
    };
    let threshold = 2f64.powf(-1.0 / modulus as f64);
    if r < threshold - 1e-12 {
        return Err(Error::Precondition(format!(
            "r = {r} below 2^(-1/{modulus}) ≈ {threshold:.6}; the base attractor is a Cantor set, not a segment"
        )));
    }
    let r_n = r.powi(modulus as i32);
    let seg_half = 1.0 / (1.0 - r_n);
    let lambda = Complex64::from_polar(r, angle_step);
    // Zonotope generators: the k-th segment is λ^k · [−seg_half, seg_half].
    let mut generators: Vec<Complex64> = Vec::with_capacity(segments as usize);
    let mut pow = Complex64::new(1.0, 0.0);
    for _ in 0..segments {
        generators.push(pow * 2.0 * seg_half);
        pow *= lambda;
    }
    // Normalize directions into [0, π) and sort by angle; walking the
    // generators in angular order traces half the boundary.
    for g in generators.iter_mut() {
        let ang = g.im.atan2(g.re);
        if ang < 0.0 || (ang == 0.0 && g.re < 0.0) {
            *g = -*g;
        }
    }
    generators.sort_by(|a, b| a.im.atan2(a.re).total_cmp(&b.im.atan2(b.re)));
    let start: Complex64 = -generators.iter().sum::<Complex64>() * 0.5;
    let mut vertices = Vec::with_capacity(2 * generators.len());
    let mut v = start;
    vertices.push(v);
    for &g in &generators {
        v += g;
        vertices.push(v);
    }
    vertices.pop();
    let mirrored: Vec<Complex64> = vertices.iter().map(|&w| -w).collect();
    vertices.extend(mirrored);
    Ok(ConvexPolygon::from_vertices(vertices))
}

/// Membership in the region {0 ≤ Re(λ) ≤ |λ|² − 1/2}, where the attractor
/// itself admits a two-translate rectangle covering and hence has interior.
/// Closed conditions, exact floating comparison.
pub fn omega_contains(lambda: &Parameter) -> bool {
    let re = lambda.re();
    re >= 0.0 && re <= lambda.norm_sqr() - 0.5
}

/// Binary raster of the attractor over a window. A pixel is marked iff some
/// depth-`depth` prefix sum lies within covering_radius + pixel-diagonal of
/// its center, which guarantees no false negatives at the stated depth.
/// Subdivision is breadth-first with per-node viewport pruning instead of
/// materializing every prefix.
pub fn render_attractor(
    lambda: &Parameter,
    alphabet: Alphabet,
    depth: u32,
    window: &Window,
    width: u32,
    height: u32,
) -> Result<Raster> {
    if width < 1 || height < 1 {
        return Err(Error::Precondition("resolution must be at least 1×1".into()));
    }
    let total = (alphabet.size() as f64).powi(depth as i32);
    if total > caps::ENUM_POINT_CAP as f64 {
        return Err(Error::Resource {
            what: format!("render enumeration {}^{depth}", alphabet.size()),
            cap: caps::ENUM_POINT_CAP,
        });
    }
    let z = lambda.as_complex();
    let r = ulp::up(lambda.modulus());
    let px_w = window.width() / width as f64;
    let px_h = window.height() / height as f64;
    let pixel_diag = px_w.hypot(px_h);
    let covering_radius = geometric_tail_upper(r, depth);
    let threshold = covering_radius + pixel_diag;
    // Reach of all continuations below a node at depth d.
    let reach: Vec<f64> = (0..=depth).map(|d| geometric_tail_upper(r, d)).collect();
    let dist_to_window = |p: Complex64| -> f64 {
        let dx = (window.x0 - p.re).max(p.re - window.x1).max(0.0);
        let dy = (window.y0 - p.im).max(p.im - window.y1).max(0.0);
        dx.hypot(dy)
    };
    let digits = alphabet.digits();
    let powers: Vec<Complex64> = {
        let mut p = Vec::with_capacity(depth as usize);
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 0..depth {
            p.push(acc);
            acc *= z;
        }
        p
    };
    // Breadth-first subdivision, pruning nodes whose entire subtree stays
    // farther than the marking threshold from the window.
    let mut frontier: Vec<Complex64> = vec![Complex64::new(0.0, 0.0)];
    for d in 0..depth {
        let power = powers[d as usize];
        let child_reach = reach[(d + 1) as usize];
        let next: Vec<Complex64> = frontier
            .par_iter()
            .flat_map_iter(|&v| {
                digits.iter().filter_map(move |&a| {
                    let child = v + Complex64::new(a as f64, 0.0) * power;
                    if dist_to_window(child) <= child_reach + threshold {
                        Some(child)
                    } else {
                        None
                    }
                })
            })
            .collect();
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    // Stamp each surviving point into per-thread bitmaps and OR-merge; the
    // result is independent of scheduling.
    let w = width as usize;
    let h = height as usize;
    let stamp = |bits: &mut Vec<bool>, p: Complex64| {
        let ix_lo = ((p.re - threshold - window.x0) / px_w).floor().max(0.0) as i64;
        let ix_hi = ((p.re + threshold - window.x0) / px_w).ceil().min(w as f64) as i64;
        let iy_lo = ((window.y1 - (p.im + threshold)) / px_h).floor().max(0.0) as i64;
        let iy_hi = ((window.y1 - (p.im - threshold)) / px_h).ceil().min(h as f64) as i64;
        for iy in iy_lo..iy_hi {
            for ix in ix_lo..ix_hi {
                let cx = window.x0 + (ix as f64 + 0.5) * px_w;
                let cy = window.y1 - (iy as f64 + 0.5) * px_h;
                if (p.re - cx).hypot(p.im - cy) <= threshold {
                    bits[iy as usize * w + ix as usize] = true;
                }
            }
        }
    };
    let bits = frontier
        .par_chunks(4096.max(frontier.len() / 64 + 1))
        .map(|chunk| {
            let mut local = vec![false; w * h];
            for &p in chunk {
                stamp(&mut local, p);
            }
            local
        })
        .reduce(
            || vec![false; w * h],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x |= y;
                }
                a
            },
        );
    let mut raster = Raster::new(width, height, 0);
    for (i, &on) in bits.iter().enumerate() {
        if on {
            raster.pixels_mut()[i] = 255;
        }
    }
    Ok(raster)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(re: f64, im: f64) -> Parameter {
        Parameter::new(re, im).unwrap()
    }

    #[test]
    fn depth_one_plus_minus() {
        let cloud = prefix_sums(&p(0.3, 0.4), Alphabet::PlusMinus, 1).unwrap();
        assert_eq!(cloud.points(), &[Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn twindragon_depth_two() {
        let cloud = prefix_sums(&p(0.5, 0.5), Alphabet::PlusMinus, 2).unwrap();
        let expect = [
            Complex64::new(-1.5, -0.5),
            Complex64::new(-0.5, 0.5),
            Complex64::new(0.5, -0.5),
            Complex64::new(1.5, 0.5),
        ];
        assert_eq!(cloud.len(), 4);
        for e in expect {
            assert!(cloud.points().iter().any(|&q| (q - e).norm() < 1e-15), "{e}");
        }
    }

    #[test]
    fn real_half_depth_three_gives_eight_reals() {
        let cloud = prefix_sums(&p(0.5, 0.0), Alphabet::PlusMinus, 3).unwrap();
        assert_eq!(cloud.len(), 8);
        for q in cloud.points() {
            assert_eq!(q.im, 0.0);
        }
        // ±1 ± 0.5 ± 0.25
        assert!(cloud.points().iter().any(|&q| q.re == 1.75));
        assert!(cloud.points().iter().any(|&q| q.re == -1.75));
        assert!(cloud.points().iter().any(|&q| q.re == 0.25));
    }

    #[test]
    fn cloud_is_exactly_symmetric_under_negation() {
        let cloud = prefix_sums(&p(0.44, 0.31), Alphabet::PlusMinus, 9).unwrap();
        for q in cloud.points() {
            let neg = clean_zero(-q);
            assert!(
                cloud
                    .points()
                    .binary_search_by(|a| a
                        .re
                        .total_cmp(&neg.re)
                        .then(a.im.total_cmp(&neg.im)))
                    .is_ok(),
                "missing −{q}"
            );
        }
    }

    #[test]
    fn real_lambda_matches_negated_lambda() {
        for r in [0.5, 0.6] {
            let a = prefix_sums(&p(r, 0.0), Alphabet::PlusMinus, 10).unwrap();
            let b = prefix_sums(&p(-r, 0.0), Alphabet::PlusMinus, 10).unwrap();
            assert_eq!(a.points(), b.points());
        }
    }

    #[test]
    fn consecutive_depths_are_close_in_hausdorff() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let r = rng.gen_range(0.3..0.72);
            let ang = rng.gen_range(0.0..std::f64::consts::TAU);
            let lam = p(r * ang.cos(), r * ang.sin());
            let n = rng.gen_range(4..11u32);
            let a = prefix_sums(&lam, Alphabet::PlusMinus, n).unwrap();
            let b = prefix_sums(&lam, Alphabet::PlusMinus, n + 1).unwrap();
            let d = geometry::hausdorff_points(a.points(), b.points());
            let bound = crate::base::tail_bound(&lam, n - 1);
            assert!(d <= bound, "d = {d}, bound = {bound}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        match prefix_sums(&p(0.5, 0.1), Alphabet::PlusMinus, 40) {
            Err(Error::Resource { cap, .. }) => assert_eq!(cap, caps::ENUM_POINT_CAP),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn rectangle_attractor_vertices() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let poly = polygon_attractor(r, 1, 2, PolygonForm::HalfTurn).unwrap();
        assert_eq!(poly.len(), 4);
        let sqrt2 = std::f64::consts::SQRT_2;
        let expect = [
            Complex64::new(2.0, sqrt2),
            Complex64::new(-2.0, sqrt2),
            Complex64::new(-2.0, -sqrt2),
            Complex64::new(2.0, -sqrt2),
        ];
        for e in expect {
            assert!(
                poly.vertices().iter().any(|&v| (v - e).norm() < 1e-9),
                "missing vertex {e}; got {:?}",
                poly.vertices()
            );
        }
        // Canonical start: maximal real part, then maximal imaginary part.
        assert!((poly.vertices()[0] - Complex64::new(2.0, sqrt2)).norm() < 1e-9);
    }

    #[test]
    fn hexagon_angles() {
        let poly = polygon_attractor(0.9, 1, 3, PolygonForm::HalfTurn).unwrap();
        assert_eq!(poly.len(), 6);
        for ang in poly.interior_angles() {
            assert!((ang - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-9, "{ang}");
        }
    }

    #[test]
    fn imaginary_lambda_rectangle_dimensions() {
        // λ = 0.85i: half-width 1/(1−r²), half-height r/(1−r²).
        let poly = polygon_attractor(0.85, 1, 2, PolygonForm::HalfTurn).unwrap();
        assert_eq!(poly.len(), 4);
        let hw = 1.0 / (1.0 - 0.7225);
        let hh = 0.85 * hw;
        let max_re = poly.vertices().iter().map(|v| v.re).fold(0.0, f64::max);
        let max_im = poly.vertices().iter().map(|v| v.im).fold(0.0, f64::max);
        assert!((max_re - hw).abs() < 1e-9, "{max_re} vs {hw}");
        assert!((max_im - hh).abs() < 1e-9, "{max_im} vs {hh}");
    }

    #[test]
    fn odd_full_turn_heptagonish() {
        // N = 2n+1 = 3 segments → hexagon with angles 2π/3.
        let r = 2f64.powf(-1.0 / 3.0) + 0.05;
        let poly = polygon_attractor(r, 1, 1, PolygonForm::OddFullTurn).unwrap();
        assert_eq!(poly.len(), 6);
        for ang in poly.interior_angles() {
            assert!((ang - std::f64::consts::PI * 2.0 / 3.0).abs() < 1e-9);
        }
    }

    #[test]
    fn polygon_preconditions() {
        assert!(polygon_attractor(0.6, 1, 2, PolygonForm::HalfTurn).is_err());
        assert!(polygon_attractor(0.9, 2, 4, PolygonForm::HalfTurn).is_err());
        assert!(polygon_attractor(1.1, 1, 2, PolygonForm::HalfTurn).is_err());
    }

    #[test]
    fn hull_converges_to_polygon() {
        let r = 0.9;
        let lam = Complex64::from_polar(r, std::f64::consts::PI / 3.0);
        let param = p(lam.re, lam.im);
        let poly = polygon_attractor(r, 1, 3, PolygonForm::HalfTurn).unwrap();
        let cloud = prefix_sums(&param, Alphabet::PlusMinus, 16).unwrap();
        let hull = geometry::convex_hull(cloud.points().to_vec());
        let d = geometry::hausdorff_convex(&hull, poly.vertices());
        let bound = crate::base::tail_bound(&param, 15);
        assert!(d <= bound, "d = {d}, bound = {bound}");
    }

    #[test]
    fn omega_examples() {
        assert!(omega_contains(&p(0.0, 0.95)));
        assert!(!omega_contains(&p(0.3, 0.8)));
        assert!(omega_contains(&p(0.1, 0.8)));
        assert!(!omega_contains(&p(-0.01, 0.9)));
    }

    #[test]
    fn render_real_cantor_set() {
        let window = Window::new(-2.0, 2.0, -0.5, 0.5).unwrap();
        let img = render_attractor(&p(0.3, 0.0), Alphabet::PlusMinus, 12, &window, 128, 32)
            .unwrap();
        // Marked pixels hug the real axis.
        let mid_rows: Vec<u32> = (14..18).collect();
        let mut marked_mid = 0;
        for y in 0..32 {
            for x in 0..128 {
                if img.get(x, y) == 255 {
                    assert!(
                        (7..25).contains(&y),
                        "marked pixel far from the real axis at row {y}"
                    );
                    if mid_rows.contains(&y) {
                        marked_mid += 1;
                    }
                }
            }
        }
        assert!(marked_mid > 0);
        // The central gap (−(1−2r/(1−r)), …) ≈ (−0.57, 0.57) is empty:
        // the column at re = 0 has no marked pixel.
        for y in 0..32 {
            assert_ne!(img.get(64, y), 255, "gap pixel marked at row {y}");
        }
    }

    #[test]
    fn render_rectangle_attractor() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let window = Window::new(-2.5, 2.5, -2.0, 2.0).unwrap();
        let img =
            render_attractor(&p(0.0, r), Alphabet::PlusMinus, 16, &window, 100, 80).unwrap();
        // Interior pixels of the rectangle ±2 ± i√2 are all marked.
        let sqrt2 = std::f64::consts::SQRT_2;
        for y in 0..80u32 {
            for x in 0..100u32 {
                let cx = -2.5 + (x as f64 + 0.5) * 5.0 / 100.0;
                let cy = 2.0 - (y as f64 + 0.5) * 4.0 / 80.0;
                if cx.abs() < 1.9 && cy.abs() < sqrt2 - 0.1 {
                    assert_eq!(img.get(x, y), 255, "unmarked interior pixel ({cx},{cy})");
                }
                if cx.abs() > 2.2 || cy.abs() > sqrt2 + 0.2 {
                    assert_eq!(img.get(x, y), 0, "marked exterior pixel ({cx},{cy})");
                }
            }
        }
    }

    #[test]
    fn render_matches_brute_force_enumeration() {
        let lam = p(0.5, 0.5);
        let window = Window::new(-2.2, 2.2, -2.2, 2.2).unwrap();
        let depth = 12;
        let img =
            render_attractor(&lam, Alphabet::PlusMinus, depth, &window, 64, 64).unwrap();
        // Brute-force oracle: mark pixels from the full prefix-sum cloud
        // without any subdivision pruning.
        let cloud = prefix_sums(&lam, Alphabet::PlusMinus, depth).unwrap();
        let px_w = window.width() / 64.0;
        let px_h = window.height() / 64.0;
        let threshold = cloud.covering_radius + px_w.hypot(px_h);
        let mut expect = Raster::new(64, 64, 0);
        for y in 0..64u32 {
            for x in 0..64u32 {
                let cx = window.x0 + (x as f64 + 0.5) * px_w;
                let cy = window.y1 - (y as f64 + 0.5) * px_h;
                if cloud
                    .points()
                    .iter()
                    .any(|p| (p.re - cx).hypot(p.im - cy) <= threshold)
                {
                    expect.set(x, y, 255);
                }
            }
        }
        assert_eq!(img, expect);
    }

    #[test]
    fn render_deterministic_across_thread_counts() {
        let lam = p(0.5, 0.5);
        let window = Window::new(-2.2, 2.2, -2.2, 2.2).unwrap();
        let render = || {
            render_attractor(&lam, Alphabet::PlusMinus, 14, &window, 48, 48)
                .unwrap()
                .to_pgm()
        };
        let pool1 = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let pool4 = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = pool1.install(render);
        let b = pool4.install(render);
        assert_eq!(a, b);
    }
}
