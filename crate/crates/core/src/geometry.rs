//! Convex-polygon primitives: half-plane clipping, axis-aligned rectangle
//! subtraction, hulls, and distances. Used by the covering certificates and
//! by attractor/polygon comparisons.

use num_complex::Complex64;

/// Absolute coordinate snap for merging clip vertices; avoids sliver
/// polygons made of numerically coincident points.
pub const SNAP: f64 = 1e-14;

/// Signed area by the shoelace formula (positive for counterclockwise).
pub fn signed_area(poly: &[Complex64]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        s += p.re * q.im - q.re * p.im;
    }
    0.5 * s
}

/// Merges consecutive vertices closer than `SNAP` (absolute) and drops
/// degenerate results.
fn snap_poly(mut poly: Vec<Complex64>) -> Vec<Complex64> {
    poly.dedup_by(|a, b| (a.re - b.re).abs() <= SNAP && (a.im - b.im).abs() <= SNAP);
    if poly.len() >= 2 {
        let (first, last) = (poly[0], *poly.last().unwrap());
        if (first.re - last.re).abs() <= SNAP && (first.im - last.im).abs() <= SNAP {
            poly.pop();
        }
    }
    if poly.len() < 3 {
        Vec::new()
    } else {
        poly
    }
}

/// Clips a convex polygon to the half-plane a·x + b·y ≤ c.
pub fn clip_halfplane(poly: &[Complex64], a: f64, b: f64, c: f64) -> Vec<Complex64> {
    if poly.is_empty() {
        return Vec::new();
    }
    let dist = |p: &Complex64| a * p.re + b * p.im - c;
    let mut out = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let s = poly[i];
        let e = poly[(i + 1) % poly.len()];
        let ds = dist(&s);
        let de = dist(&e);
        let s_in = ds <= 0.0;
        let e_in = de <= 0.0;
        match (s_in, e_in) {
            (true, true) => out.push(e),
            (true, false) => {
                let denom = ds - de;
                if denom.abs() > 0.0 {
                    let t = ds / denom;
                    out.push(s + (e - s) * t);
                }
            }
            (false, true) => {
                let denom = ds - de;
                if denom.abs() > 0.0 {
                    let t = ds / denom;
                    out.push(s + (e - s) * t);
                }
                out.push(e);
            }
            (false, false) => {}
        }
    }
    snap_poly(out)
}

/// Removes an axis-aligned rectangle [cx−hw, cx+hw] × [cy−hh, cy+hh] from a
/// set of convex pieces, decomposing each remainder into up to four convex
/// pieces (left and right of the rectangle's vertical slab, then below and
/// above within the slab).
pub fn subtract_axis_rect(
    pieces: Vec<Vec<Complex64>>,
    cx: f64,
    cy: f64,
    hw: f64,
    hh: f64,
) -> Vec<Vec<Complex64>> {
    let mut out = Vec::new();
    for piece in pieces {
        if piece.is_empty() {
            continue;
        }
        let left = clip_halfplane(&piece, 1.0, 0.0, cx - hw);
        let right = clip_halfplane(&piece, -1.0, 0.0, -(cx + hw));
        let slab = clip_halfplane(
            &clip_halfplane(&piece, -1.0, 0.0, -(cx - hw)),
            1.0,
            0.0,
            cx + hw,
        );
        let below = clip_halfplane(&slab, 0.0, 1.0, cy - hh);
        let above = clip_halfplane(&slab, 0.0, -1.0, -(cy + hh));
        for q in [left, right, below, above] {
            if q.len() >= 3 && signed_area(&q).abs() > 0.0 {
                out.push(q);
            }
        }
    }
    out
}

/// Total unsigned area of a piece list.
pub fn total_area(pieces: &[Vec<Complex64>]) -> f64 {
    pieces.iter().map(|p| signed_area(p).abs()).sum()
}

/// Convex hull, counterclockwise, by the monotone-chain construction.
/// Collinear points on the hull boundary are dropped.
pub fn convex_hull(mut pts: Vec<Complex64>) -> Vec<Complex64> {
    pts.sort_by(|p, q| {
        p.re.partial_cmp(&q.re)
            .unwrap()
            .then(p.im.partial_cmp(&q.im).unwrap())
    });
    pts.dedup_by(|a, b| a.re == b.re && a.im == b.im);
    let n = pts.len();
    if n < 3 {
        return pts;
    }
    let cross = |o: Complex64, a: Complex64, b: Complex64| {
        (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
    };
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * n);
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len
            && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

fn dist_point_segment(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a).re * ab.re + (p - a).im * ab.im) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Is `p` inside (or on the boundary of) a counterclockwise convex polygon?
pub fn inside_convex(p: Complex64, poly: &[Complex64]) -> bool {
    if poly.len() < 3 {
        return false;
    }
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        let cross = (b.re - a.re) * (p.im - a.im) - (b.im - a.im) * (p.re - a.re);
        if cross < 0.0 {
            return false;
        }
    }
    true
}

/// Distance from a point to a counterclockwise convex polygon (0 inside).
pub fn dist_to_convex(p: Complex64, poly: &[Complex64]) -> f64 {
    if inside_convex(p, poly) {
        return 0.0;
    }
    (0..poly.len())
        .map(|i| dist_point_segment(p, poly[i], poly[(i + 1) % poly.len()]))
        .fold(f64::INFINITY, f64::min)
}

/// Hausdorff distance between two convex polygons. For convex bodies the
/// supremum is attained at a vertex of one of them.
pub fn hausdorff_convex(a: &[Complex64], b: &[Complex64]) -> f64 {
    let d_ab = a
        .iter()
        .map(|&p| dist_to_convex(p, b))
        .fold(0.0, f64::max);
    let d_ba = b
        .iter()
        .map(|&p| dist_to_convex(p, a))
        .fold(0.0, f64::max);
    d_ab.max(d_ba)
}

/// Hausdorff distance between two finite point sets, brute force.
pub fn hausdorff_points(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_sided = |xs: &[Complex64], ys: &[Complex64]| {
        xs.iter()
            .map(|&x| {
                ys.iter()
                    .map(|&y| (x - y).norm_sqr())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_sided(a, b).max(one_sided(b, a)).sqrt()
}
