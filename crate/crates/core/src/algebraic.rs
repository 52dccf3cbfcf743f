//! Integer-polynomial machinery: deterministic root finding with certified
//! residuals, bounded irreducibility testing, classification of real and
//! complex Pisot and Garsia numbers, and a built-in catalog of the algebraic
//! numbers this project cares about.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::caps;
use crate::error::{Error, Result};

/// Monic-or-not integer polynomial, constant term first. Trailing zero
/// coefficients are trimmed on construction; degree ≥ 1 is required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::Domain("polynomial degree must be ≥ 1".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn constant_term(&self) -> i64 {
        self.coeffs[0]
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c as f64, 0.0);
        }
        acc
    }

    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * z + Complex64::new((k as i64 * c) as f64, 0.0);
        }
        acc
    }

    fn eval_i128(&self, x: i128) -> Option<i128> {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x)?.checked_add(c as i128)?;
        }
        Some(acc)
    }

    /// ±p(−z), sign-normalized so the result keeps a positive leading
    /// coefficient; its roots are the negated roots of p.
    pub fn compose_neg(&self) -> Self {
        let mut coeffs: Vec<i64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
            .collect();
        if coeffs.last().is_some_and(|&c| c < 0) {
            for c in coeffs.iter_mut() {
                *c = -*c;
            }
        }
        Self { coeffs }
    }

    /// Parses either a constant-first coefficient list "[1,0,-1,1]" or a
    /// textual form like "z^3 - z^2 + 1" (variable letter free, `x` works).
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        if s.starts_with('[') {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse("unterminated coefficient list".into()))?;
            let coeffs = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{}'", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::new(coeffs);
        }
        parse_polynomial_text(s)
    }

    pub fn to_text(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match k {
                0 => format!("{mag}"),
                1 if mag == 1 => "z".to_string(),
                1 => format!("{mag}z"),
                _ if mag == 1 => format!("z^{k}"),
                _ => format!("{mag}z^{k}"),
            };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if c < 0 { "-" } else { "+" }, body));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

fn parse_polynomial_text(s: &str) -> Result<IntPolynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut var: Option<char> = None;
    let mut terms: Vec<(i64, usize)> = Vec::new();
    let bytes: Vec<char> = compact.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign: i64 = 1;
        while i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-') {
            if bytes[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= bytes.len() {
            return Err(Error::Parse("dangling sign in polynomial".into()));
        }
        let mut mag: Option<i64> = None;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i > start {
            let text: String = bytes[start..i].iter().collect();
            mag = Some(
                text.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient '{text}'")))?,
            );
        }
        if i < bytes.len() && bytes[i] == '*' {
            i += 1;
        }
        let mut power = 0usize;
        if i < bytes.len() && bytes[i].is_ascii_alphabetic() {
            let v = bytes[i];
            match var {
                None => var = Some(v),
                Some(prev) if prev != v => {
                    return Err(Error::Parse(format!(
                        "mixed variable letters '{prev}' and '{v}'"
                    )))
                }
                _ => {}
            }
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == start {
                    return Err(Error::Parse("missing exponent after '^'".into()));
                }
                let text: String = bytes[start..i].iter().collect();
                power = text
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad exponent '{text}'")))?;
            }
        }
        let mag = match mag {
            Some(m) => m,
            None if power > 0 => 1,
            None => return Err(Error::Parse("term with neither coefficient nor variable".into())),
        };
        terms.push((sign * mag, power));
    }
    let max_power = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![0i64; max_power + 1];
    for (c, k) in terms {
        coeffs[k] += c;
    }
    IntPolynomial::new(coeffs)
}

/// One root with its certified residual |p(root)|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootEstimate {
    pub value: Complex64,
    pub residual: f64,
}

/// Residual every reported root must satisfy.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

/// All complex roots with multiplicity, by simultaneous Aberth–Ehrlich
/// iteration from deterministic initial points equally spaced on the unit
/// circle, followed by Newton polishing and an a-posteriori residual check.
pub fn find_roots(p: &IntPolynomial) -> Result<Vec<RootEstimate>> {
    if p.degree() > caps::MAX_ROOTFIND_DEGREE {
        return Err(Error::Resource {
            what: format!("root finding degree {}", p.degree()),
            cap: caps::MAX_ROOTFIND_DEGREE as u64,
        });
    }
    let mut coeffs = p.coeffs().to_vec();
    let mut origin_roots = 0usize;
    while coeffs[0] == 0 {
        coeffs.remove(0);
        origin_roots += 1;
    }
    let mut roots: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); origin_roots];
    if coeffs.len() >= 2 {
        let deg = coeffs.len() - 1;
        let lead = *coeffs.last().unwrap() as f64;
        let monic: Vec<f64> = coeffs.iter().map(|&c| c as f64 / lead).collect();
        let eval = |z: Complex64| -> (Complex64, Complex64) {
            let mut v = Complex64::new(0.0, 0.0);
            let mut d = Complex64::new(0.0, 0.0);
            for &c in monic.iter().rev() {
                d = d * z + v;
                v = v * z + Complex64::new(c, 0.0);
            }
            (v, d)
        };
        let mut zs: Vec<Complex64> = (0..deg)
            .map(|k| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
                Complex64::from_polar(1.0, angle)
            })
            .collect();
        let mut converged = false;
        for _ in 0..500 {
            let mut max_step = 0.0f64;
            for i in 0..deg {
                let (v, d) = eval(zs[i]);
                if v.norm() == 0.0 {
                    continue;
                }
                let newton = if d.norm() > 0.0 {
                    v / d
                } else {
                    Complex64::new(1e-8, 1e-8)
                };
                let mut sum = Complex64::new(0.0, 0.0);
                for j in 0..deg {
                    if j != i {
                        let diff = zs[i] - zs[j];
                        if diff.norm() > 0.0 {
                            sum += diff.inv();
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * sum;
                let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
                zs[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + zs[i].norm()));
            }
            if max_step < 1e-14 {
                converged = true;
                break;
            }
        }
        if !converged {
            // Polishing below may still reach the residual target; the
            // residual check is the arbiter.
        }
        for z in zs.iter_mut() {
            for _ in 0..4 {
                let (v, d) = eval(*z);
                if d.norm() > 0.0 {
                    *z -= v / d;
                }
            }
        }
        roots.extend(zs);
    }
    let mut out: Vec<RootEstimate> = roots
        .into_iter()
        .map(|z| RootEstimate { value: z, residual: p.eval(z).norm() })
        .collect();
    if let Some(bad) = out.iter().find(|r| !(r.residual <= ROOT_RESIDUAL_TOL)) {
        return Err(Error::Numeric(format!(
            "root finding failed to converge on {}: residual {} at {}",
            p.to_text(),
            bad.residual,
            bad.value
        )));
    }
    out.sort_by(|a, b| {
        a.value
            .norm()
            .total_cmp(&b.value.norm())
            .then(a.value.arg().total_cmp(&b.value.arg()))
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

fn divisors(n: u64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as i64);
            if d != n / d {
                out.push((n / d) as i64);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Exact division test over ℤ for a monic candidate factor; `None` means an
/// intermediate coefficient overflowed i128, which cannot happen for a true
/// divisor at our coefficient scales.
fn divides_exactly(p: &[i64], g: &[i64]) -> Option<bool> {
    let dg = g.len() - 1;
    debug_assert_eq!(*g.last().unwrap(), 1);
    let mut rem: Vec<i128> = p.iter().map(|&c| c as i128).collect();
    for k in (dg..rem.len()).rev() {
        let q = rem[k];
        if q == 0 {
            continue;
        }
        for j in 0..=dg {
            let t = q.checked_mul(g[j] as i128)?;
            rem[k - dg + j] = rem[k - dg + j].checked_sub(t)?;
        }
    }
    Some(rem[..dg].iter().all(|&c| c == 0))
}

/// Irreducibility over ℤ for monic polynomials: rational-root test, then an
/// exhaustive search over monic integer factors of degree ≤ deg/2 with
/// coefficients bounded via elementary symmetric functions of the root
/// moduli. Returns `Unknown` when the candidate space exceeds the cap.
pub fn is_irreducible(p: &IntPolynomial) -> Result<Irreducibility> {
    if !p.is_monic() {
        return Err(Error::Precondition(
            "irreducibility test requires a monic polynomial".into(),
        ));
    }
    let deg = p.degree();
    if deg == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    if p.constant_term() == 0 {
        return Ok(Irreducibility::Reducible);
    }
    for d in divisors(p.constant_term().unsigned_abs()) {
        for cand in [d, -d] {
            if p.eval_i128(cand as i128) == Some(0) {
                return Ok(Irreducibility::Reducible);
            }
        }
    }
    if deg <= 3 {
        // A monic quadratic or cubic over ℤ factors only with a linear term.
        return Ok(Irreducibility::Irreducible);
    }
    let roots = find_roots(p)?;
    let mut moduli: Vec<f64> = roots.iter().map(|r| r.value.norm() * (1.0 + 1e-6) + 1e-9).collect();
    moduli.sort_by(f64::total_cmp);
    moduli.reverse();
    let const_divs = divisors(p.constant_term().unsigned_abs());
    for d in 2..=deg / 2 {
        // Bound |g_{d−j}| ≤ C(d,j) · (product of the j largest moduli).
        let mut bounds: Vec<i64> = Vec::with_capacity(d);
        for j in 1..=d {
            let prod: f64 = moduli.iter().take(j).product();
            let b = (binomial(d, j) * prod).floor();
            if b > 1e15 {
                return Ok(Irreducibility::Unknown);
            }
            bounds.push(b as i64);
        }
        let mut count: u128 = (const_divs.iter().filter(|&&v| v <= bounds[d - 1]).count() as u128) * 2;
        for j in 1..d {
            count = count.saturating_mul(2 * bounds[j - 1] as u128 + 1);
            if count > caps::FACTOR_SEARCH_CAP as u128 {
                return Ok(Irreducibility::Unknown);
            }
        }
        // Candidate g = x^d + g_{d−1} x^{d−1} + … + g_1 x + g_0, with g_0 a
        // signed divisor of the constant term.
        let mut g = vec![0i64; d + 1];
        g[d] = 1;
        let free_bounds: Vec<i64> = (1..d).map(|j| bounds[j - 1]).collect();
        let mut stack_done = false;
        let mut idx = vec![0u64; d - 1];
        while !stack_done {
            for (slot, &i) in idx.iter().enumerate() {
                // slot s holds g_{d−1−s}, bounded by bounds[s].
                g[d - 1 - slot] = i as i64 - free_bounds[slot];
            }
            for &c0 in &const_divs {
                if c0 > bounds[d - 1] {
                    continue;
                }
                for signed in [c0, -c0] {
                    g[0] = signed;
                    if divides_exactly(p.coeffs(), &g) == Some(true) {
                        return Ok(Irreducibility::Reducible);
                    }
                }
            }
            // Odometer increment over the free coefficient slots.
            stack_done = true;
            for slot in 0..d - 1 {
                if idx[slot] < 2 * free_bounds[slot] as u64 {
                    idx[slot] += 1;
                    for lower in idx.iter_mut().take(slot) {
                        *lower = 0;
                    }
                    stack_done = false;
                    break;
                }
            }
        }
    }
    Ok(Irreducibility::Irreducible)
}

/// Classification margin: moduli closer to 1 than this are refused rather
/// than guessed.
pub const CLASSIFY_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    RealPisot,
    ComplexPisot,
    RealGarsia,
    ComplexGarsia,
    Neither,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ClassKind,
    /// Minimum distance of any conjugate modulus to 1.
    pub margin: f64,
    pub selected_root: Complex64,
    /// Moduli of all roots (including the selected one), ascending.
    pub conjugate_moduli: Vec<f64>,
    /// Constant term is ±2, the hypothesis of the absolute-continuity
    /// theorem for Garsia reciprocals.
    pub constant_pm2: bool,
    /// For a complex Pisot number: |θ| < √2, the hypothesis of the
    /// singularity theorem.
    pub modulus_below_sqrt2: bool,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootSelector {
    /// Index into the roots sorted by (modulus, argument).
    Index(usize),
    /// Largest modulus; ties resolved by largest argument.
    LargestModulus,
    /// Root nearest to a target point.
    Nearest(Complex64),
}

fn select_root(roots: &[RootEstimate], sel: RootSelector) -> Result<usize> {
    match sel {
        RootSelector::Index(i) => {
            if i < roots.len() {
                Ok(i)
            } else {
                Err(Error::Precondition(format!(
                    "root index {i} out of range for degree {}",
                    roots.len()
                )))
            }
        }
        RootSelector::LargestModulus => Ok(roots.len() - 1),
        RootSelector::Nearest(target) => Ok(roots
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                (a.value - target).norm().total_cmp(&(b.value - target).norm())
            })
            .map(|(i, _)| i)
            .unwrap()),
    }
}

/// Classifies the selected root of a monic irreducible integer polynomial.
pub fn classify(p: &IntPolynomial, selector: RootSelector) -> Result<Classification> {
    if !p.is_monic() {
        return Err(Error::Precondition("classification requires a monic polynomial".into()));
    }
    let roots = find_roots(p)?;
    let idx = select_root(&roots, selector)?;
    let theta = roots[idx].value;
    let mut moduli: Vec<f64> = roots.iter().map(|r| r.value.norm()).collect();
    let margin = moduli.iter().map(|m| (m - 1.0).abs()).fold(f64::INFINITY, f64::min);
    moduli.sort_by(f64::total_cmp);
    let constant_pm2 = p.constant_term().abs() == 2;
    let base = Classification {
        kind: ClassKind::Indeterminate,
        margin,
        selected_root: theta,
        conjugate_moduli: moduli.clone(),
        constant_pm2,
        modulus_below_sqrt2: false,
        reason: None,
    };
    match is_irreducible(p)? {
        Irreducibility::Reducible => {
            return Ok(Classification { reason: Some("reducible".into()), ..base })
        }
        Irreducibility::Unknown => {
            return Ok(Classification {
                reason: Some("irreducibility unknown at the configured search cap".into()),
                ..base
            })
        }
        Irreducibility::Irreducible => {}
    }
    if margin < CLASSIFY_MARGIN {
        return Ok(Classification {
            reason: Some(format!("a conjugate modulus is within {CLASSIFY_MARGIN} of 1")),
            ..base
        });
    }
    let is_real = theta.im.abs() < CLASSIFY_MARGIN;
    let all_outside = roots.iter().all(|r| r.value.norm() > 1.0);
    let kind = if all_outside {
        if is_real {
            ClassKind::RealGarsia
        } else {
            ClassKind::ComplexGarsia
        }
    } else if is_real && theta.re > 1.0 {
        let others_inside = roots
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .all(|(_, r)| r.value.norm() < 1.0);
        if others_inside {
            ClassKind::RealPisot
        } else {
            ClassKind::Neither
        }
    } else if !is_real && theta.norm() > 1.0 {
        let conj_idx = roots
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .min_by(|(_, a), (_, b)| {
                (a.value - theta.conj())
                    .norm()
                    .total_cmp(&(b.value - theta.conj()).norm())
            })
            .map(|(j, _)| j);
        let others_inside = roots.iter().enumerate().all(|(j, r)| {
            j == idx || Some(j) == conj_idx || r.value.norm() < 1.0
        });
        if others_inside {
            ClassKind::ComplexPisot
        } else {
            ClassKind::Neither
        }
    } else {
        ClassKind::Neither
    };
    let modulus_below_sqrt2 =
        kind == ClassKind::ComplexPisot && theta.norm() < std::f64::consts::SQRT_2;
    Ok(Classification { kind, modulus_below_sqrt2, ..base })
}

/// Classifies the root of `p` nearest to `target`.
pub fn classify_near(p: &IntPolynomial, target: Complex64) -> Result<Classification> {
    classify(p, RootSelector::Nearest(target))
}

/// A selected root of a monic integer polynomial together with the moduli of
/// all of its conjugates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraicNumber {
    pub minpoly: IntPolynomial,
    pub root: Complex64,
    pub residual: f64,
    /// Exactly `degree` entries, ascending, including the root's own modulus.
    pub conjugate_moduli: Vec<f64>,
}

pub fn algebraic_number(p: &IntPolynomial, selector: RootSelector) -> Result<AlgebraicNumber> {
    let roots = find_roots(p)?;
    let idx = select_root(&roots, selector)?;
    let mut moduli: Vec<f64> = roots.iter().map(|r| r.value.norm()).collect();
    moduli.sort_by(f64::total_cmp);
    Ok(AlgebraicNumber {
        minpoly: p.clone(),
        root: roots[idx].value,
        residual: roots[idx].residual,
        conjugate_moduli: moduli,
    })
}

/// A catalog entry: the number θ, its classification, and the unit-disk
/// parameter λ = 1/θ it certifies something about.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub number: AlgebraicNumber,
    pub classification: Classification,
    pub lambda: Complex64,
    pub note: &'static str,
}

struct CatalogSpec {
    name: &'static str,
    poly: &'static str,
    /// Approximate root to select (the one whose reciprocal lies in the
    /// closed upper half plane).
    target: (f64, f64),
    expect: ClassKind,
    note: &'static str,
}

const CATALOG_SPECS: &[CatalogSpec] = &[
    CatalogSpec {
        name: "rectangle",
        poly: "z^2 + 2",
        target: (0.0, -std::f64::consts::SQRT_2),
        expect: ClassKind::ComplexGarsia,
        note: "λ = i·2^(−1/2); the attractor is a rectangle",
    },
    CatalogSpec {
        name: "twindragon",
        poly: "z^2 - 2z + 2",
        target: (1.0, -1.0),
        expect: ClassKind::ComplexGarsia,
        note: "λ = (1+i)/2; the attractor is the twindragon",
    },
    CatalogSpec {
        name: "tame_twindragon",
        poly: "z^2 - z + 2",
        target: (0.5, -1.3228756555322954),
        expect: ClassKind::ComplexGarsia,
        note: "λ = (1+i√7)/4; the attractor is the tame twindragon",
    },
    CatalogSpec {
        name: "garsia_cubic",
        poly: "z^3 - z - 2",
        target: (-0.7606898534022844, -0.8578736265951797),
        expect: ClassKind::ComplexGarsia,
        note: "smallest member of the x^(m+n) − x^n − 2 family beyond the quadratics",
    },
    CatalogSpec {
        name: "smallest_real_pisot",
        poly: "z^3 - z - 1",
        target: (1.3247179572447458, 0.0),
        expect: ClassKind::RealPisot,
        note: "the smallest real Pisot number ≈ 1.3247",
    },
    CatalogSpec {
        name: "chamfy_cubic",
        poly: "z^3 - z^2 + 1",
        target: (0.8774388331233464, -0.7448617666197442),
        expect: ClassKind::ComplexPisot,
        note: "smallest-modulus complex Pisot number, |θ| ≈ 1.1510",
    },
    CatalogSpec {
        name: "chamfy_sextic",
        poly: "z^6 - z^2 + 1",
        target: (0.0, -1.150963925257758),
        expect: ClassKind::ComplexPisot,
        note: "the other minimal polynomial at the smallest complex Pisot modulus; θ = −i√α for the smallest real Pisot α",
    },
    CatalogSpec {
        name: "cubic_pisot_a",
        poly: "z^3 - z^2 + z + 1",
        target: (0.7718445063182942, -1.1151425080399373),
        expect: ClassKind::ComplexPisot,
        note: "a cubic complex Pisot number with |θ| < √2",
    },
    CatalogSpec {
        name: "cubic_pisot_b",
        poly: "z^3 + z + 1",
        target: (0.3411639019140095, -1.1615414199889522),
        expect: ClassKind::ComplexPisot,
        note: "a cubic complex Pisot number with |θ| < √2",
    },
];

/// Built-in catalog of algebraic numbers; classifications are recomputed and
/// re-verified on every call.
pub fn catalog() -> Vec<CatalogEntry> {
    CATALOG_SPECS
        .iter()
        .map(|spec| {
            let poly = IntPolynomial::parse(spec.poly).expect("catalog polynomial parses");
            let target = Complex64::new(spec.target.0, spec.target.1);
            let number = algebraic_number(&poly, RootSelector::Nearest(target))
                .expect("catalog root exists");
            assert!(
                (number.root - target).norm() < 1e-6,
                "catalog root drifted for {}",
                spec.name
            );
            let classification =
                classify_near(&poly, target).expect("catalog entry classifies");
            assert_eq!(
                classification.kind, spec.expect,
                "catalog classification changed for {}",
                spec.name
            );
            let lambda = number.root.inv();
            CatalogEntry { name: spec.name, number, classification, lambda, note: spec.note }
        })
        .collect()
}
