//! Foundational types and evaluation primitives shared by every other
//! module: parameters in the open unit disk, digit strings over {−1,0,1},
//! prefix evaluation with a tracked rounding bound, safe geometric tail
//! bounds, and the similarity dimension.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Directed-rounding helpers. Every arithmetic step that feeds a certified
/// comparison is nudged by one unit in the last place in the safe direction.
pub mod ulp {
    #[inline]
    pub fn up(x: f64) -> f64 {
        x.next_up()
    }

    #[inline]
    pub fn down(x: f64) -> f64 {
        x.next_down()
    }

    #[inline]
    pub fn mul_up(a: f64, b: f64) -> f64 {
        up(a * b)
    }

    #[inline]
    pub fn mul_down(a: f64, b: f64) -> f64 {
        down(a * b)
    }

    #[inline]
    pub fn add_up(a: f64, b: f64) -> f64 {
        up(a + b)
    }

    #[inline]
    pub fn sub_down(a: f64, b: f64) -> f64 {
        down(a - b)
    }

    #[inline]
    pub fn div_up(a: f64, b: f64) -> f64 {
        up(a / b)
    }

    /// x^n rounded up, one ulp per multiplication.
    pub fn pow_up(x: f64, n: u32) -> f64 {
        let mut acc = 1.0;
        for _ in 0..n {
            acc = mul_up(acc, x);
        }
        acc
    }

    /// x^n rounded down, one ulp per multiplication.
    pub fn pow_down(x: f64, n: u32) -> f64 {
        let mut acc = 1.0;
        for _ in 0..n {
            acc = mul_down(acc, x);
        }
        acc.max(0.0)
    }
}

/// A complex parameter λ restricted to the open unit disk. Every operation
/// that needs 1/λ or log|λ| rejects the zero parameter itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Parameter {
    re: f64,
    im: f64,
}

impl Parameter {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Domain("parameter components must be finite".into()));
        }
        if re * re + im * im >= 1.0 {
            return Err(Error::Domain(format!(
                "parameter must lie in the open unit disk, got |λ| = {}",
                (re * re + im * im).sqrt()
            )));
        }
        Ok(Self { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    pub fn require_nonzero(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            Err(Error::Domain(format!("{what} is undefined at λ = 0")))
        } else {
            Ok(())
        }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn neg(&self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

/// Digit alphabet of a coefficient string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alphabet {
    /// {−1, +1}
    PlusMinus,
    /// {−1, 0, +1}
    ZeroPlusMinus,
}

impl Alphabet {
    pub fn contains(self, d: i8) -> bool {
        match self {
            Alphabet::PlusMinus => d == -1 || d == 1,
            Alphabet::ZeroPlusMinus => (-1..=1).contains(&d),
        }
    }

    pub fn digits(self) -> &'static [i8] {
        match self {
            Alphabet::PlusMinus => &[-1, 1],
            Alphabet::ZeroPlusMinus => &[-1, 0, 1],
        }
    }

    pub fn size(self) -> u64 {
        self.digits().len() as u64
    }
}

/// A finite coefficient string. With `leading_one` set it represents the
/// polynomial prefix 1 + Σ_{k=1..n} a_k z^k (digits index from k = 1);
/// otherwise it represents Σ_{k=0..n−1} a_k z^k (digits index from k = 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitString {
    digits: Vec<i8>,
    alphabet: Alphabet,
    leading_one: bool,
}

impl DigitString {
    pub fn new(digits: Vec<i8>, alphabet: Alphabet, leading_one: bool) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|d| !alphabet.contains(**d)) {
            return Err(Error::Domain(format!(
                "digit {bad} is not in the declared alphabet"
            )));
        }
        Ok(Self { digits, alphabet, leading_one })
    }

    /// Builds the polynomial form 1 + Σ a_k z^k from a constant-first
    /// coefficient list whose first entry must be 1.
    pub fn polynomial_from_coeffs(coeffs: &[i64]) -> Result<Self> {
        if coeffs.first() != Some(&1) {
            return Err(Error::Parse(
                "polynomial digit string must have constant term 1".into(),
            ));
        }
        let digits = coeffs[1..]
            .iter()
            .map(|&c| {
                if (-1..=1).contains(&c) {
                    Ok(c as i8)
                } else {
                    Err(Error::Parse(format!("coefficient {c} outside {{-1,0,1}}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(digits, Alphabet::ZeroPlusMinus, true)
    }

    pub fn digits(&self) -> &[i8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn leading_one(&self) -> bool {
        self.leading_one
    }

    /// Degree of the represented polynomial, ignoring trailing zero digits.
    /// The empty string with a leading one has degree 0 (the constant 1).
    pub fn degree(&self) -> usize {
        let last_nonzero = self.digits.iter().rposition(|&d| d != 0);
        match (self.leading_one, last_nonzero) {
            (true, Some(k)) => k + 1,
            (true, None) => 0,
            (false, Some(k)) => k,
            (false, None) => 0,
        }
    }
}

/// Open or closed disc in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::Domain("disc radius must be finite and ≥ 0".into()));
        }
        Ok(Self { center, radius })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() <= self.radius
    }
}

/// Axis-aligned rectangle centered at the origin with vertices ±a ± ib.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    half_width: f64,
    half_height: f64,
}

impl Rectangle {
    pub fn new(half_width: f64, half_height: f64) -> Result<Self> {
        if !(half_width > 0.0) || !(half_height > 0.0)
            || !half_width.is_finite()
            || !half_height.is_finite()
        {
            return Err(Error::Domain(
                "rectangle half-sizes must be finite and > 0".into(),
            ));
        }
        Ok(Self { half_width, half_height })
    }

    pub fn a(&self) -> f64 {
        self.half_width
    }

    pub fn b(&self) -> f64 {
        self.half_height
    }

    pub fn area(&self) -> f64 {
        4.0 * self.half_width * self.half_height
    }

    /// Corners in counterclockwise order starting at (a, b).
    pub fn corners(&self) -> [Complex64; 4] {
        let (a, b) = (self.half_width, self.half_height);
        [
            Complex64::new(a, b),
            Complex64::new(-a, b),
            Complex64::new(-a, -b),
            Complex64::new(a, -b),
        ]
    }
}

/// Axis-aligned window [x0, x1] × [y0, y1] in the parameter or dynamical
/// plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if ![x0, x1, y0, y1].iter().all(|v| v.is_finite()) || x0 >= x1 || y0 >= y1 {
            return Err(Error::Domain(format!(
                "window must satisfy x0 < x1 and y0 < y1, got [{x0},{x1}]×[{y0},{y1}]"
            )));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.x0 && z.re <= self.x1 && z.im >= self.y0 && z.im <= self.y1
    }

    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.x0, self.y0),
            Complex64::new(self.x1, self.y0),
            Complex64::new(self.x1, self.y1),
            Complex64::new(self.x0, self.y1),
        ]
    }

    pub fn max_modulus(&self) -> f64 {
        self.corners()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// Result of a prefix evaluation: the value plus an absolute bound on the
/// floating-point rounding error, (n+2)·ε·Σ|λ|^k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub rounding_error: f64,
}

/// Evaluates the digit string at λ by Horner's scheme, highest degree
/// first. Returns 1 + Σ_{k=1..n} a_k λ^k when the string carries a leading
/// one, else Σ_{k=0..n−1} a_k λ^k.
pub fn eval_prefix(d: &DigitString, lambda: &Parameter) -> Evaluation {
    let z = lambda.as_complex();
    let value = eval_prefix_at(d, z);
    let r = lambda.modulus();
    let n = d.len();
    // Σ_{k=0..m} r^k with m = highest power appearing (plus the constant).
    let top = if d.leading_one() { n } else { n.saturating_sub(1) };
    let mut power_sum = 0.0;
    let mut p = 1.0;
    for _ in 0..=top {
        power_sum += p;
        p *= r;
    }
    let rounding_error = (n as f64 + 2.0) * f64::EPSILON * power_sum;
    Evaluation { value, rounding_error }
}

/// Horner evaluation of a digit string at an arbitrary complex point.
pub fn eval_prefix_at(d: &DigitString, z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &digit in d.digits().iter().rev() {
        acc = acc * z + Complex64::new(digit as f64, 0.0);
    }
    if d.leading_one() {
        acc * z + Complex64::new(1.0, 0.0)
    } else {
        acc
    }
}

/// Upper bound on the geometric tail Σ_{k ≥ first} r^k = r^first/(1−r),
/// rounded up one ulp per arithmetic step so the bound is safe.
pub(crate) fn geometric_tail_upper(r: f64, first: u32) -> f64 {
    debug_assert!((0.0..1.0).contains(&r));
    if r == 0.0 {
        return if first == 0 { 1.0 } else { 0.0 };
    }
    let num = ulp::pow_up(r, first);
    let denom = ulp::sub_down(1.0, ulp::up(r));
    ulp::div_up(num, denom)
}

/// Safe upper bound on Σ_{k > n} |λ|^k, the modulus of any series
/// continuation with digits in {0,±1} beyond index n.
pub fn tail_bound(lambda: &Parameter, n: u32) -> f64 {
    geometric_tail_upper(ulp::up(lambda.modulus()), n + 1)
}

/// Similarity dimension s(λ) = log 2 / (−log |λ|).
pub fn similarity_dimension(lambda: &Parameter) -> Result<f64> {
    lambda.require_nonzero("similarity dimension")?;
    let r = lambda.modulus();
    Ok(std::f64::consts::LN_2 / -r.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(re: f64, im: f64) -> Parameter {
        Parameter::new(re, im).unwrap()
    }

    #[test]
    fn parameter_rejects_outside_disk() {
        assert!(Parameter::new(1.0, 0.0).is_err());
        assert!(Parameter::new(0.8, 0.7).is_err());
        assert!(Parameter::new(f64::NAN, 0.0).is_err());
        assert!(Parameter::new(0.999, 0.0).is_ok());
        assert!(Parameter::new(0.0, 0.0).is_ok());
    }

    #[test]
    fn empty_prefix_with_leading_one_is_one() {
        let d = DigitString::new(vec![], Alphabet::ZeroPlusMinus, true).unwrap();
        let e = eval_prefix(&d, &p(0.3, 0.4));
        assert_eq!(e.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn all_minus_one_digits_at_half() {
        // 1 − Σ_{k=1..40} 2^{−k} = 2^{−40}
        let d = DigitString::new(vec![-1; 40], Alphabet::ZeroPlusMinus, true).unwrap();
        let e = eval_prefix(&d, &p(0.5, 0.0));
        assert!((e.value.re - 2f64.powi(-40)).abs() < 1e-22, "{}", e.value.re);
        assert_eq!(e.value.im, 0.0);
        assert!(e.rounding_error > 0.0);
    }

    #[test]
    fn example_polynomial_nearly_vanishes_at_its_root() {
        // 1 + z^2 + z^3 − z^4 − z^5 + z^7 at the printed six-digit root.
        let d = DigitString::new(vec![0, 1, 1, -1, -1, 0, 1], Alphabet::ZeroPlusMinus, true)
            .unwrap();
        let e = eval_prefix(&d, &p(0.141964, 0.677696));
        assert!(e.value.norm() < 1e-5, "|p(λ₀)| = {}", e.value.norm());
    }

    #[test]
    fn tail_bound_examples() {
        // The bound rounds up one ulp per step, so it sits a few ulps above
        // the exact value and never below it.
        let half = p(0.5, 0.0);
        assert!(tail_bound(&half, 0) >= 1.0);
        assert!((tail_bound(&half, 0) - 1.0).abs() < 1e-14);
        assert!(tail_bound(&half, 3) >= 0.125);
        assert!((tail_bound(&half, 3) - 0.125).abs() < 1e-14);
        let inv_sqrt2 = p(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        // 0.5 / (1 − 2^{−1/2}); cross-checked against a 60-term partial sum.
        let expect = 0.5 / (1.0 - std::f64::consts::FRAC_1_SQRT_2);
        assert!((tail_bound(&inv_sqrt2, 1) - expect).abs() < 1e-12);
        assert!((expect - 1.70710678).abs() < 1e-7);
        let summed: f64 = (2..60).map(|k| std::f64::consts::FRAC_1_SQRT_2.powi(k)).sum();
        assert!(tail_bound(&inv_sqrt2, 1) >= summed);
        assert!(tail_bound(&inv_sqrt2, 1) - summed < 1e-8);
    }

    #[test]
    fn tail_bound_is_safe_upper_bound() {
        // The rounded-up bound must dominate the true tail for many radii.
        for i in 1..99 {
            let r = i as f64 / 100.0;
            let lam = p(r, 0.0);
            for n in 0..30u32 {
                let exact: f64 = (n + 1..n + 400).map(|k| r.powi(k as i32)).sum();
                assert!(tail_bound(&lam, n) >= exact, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn similarity_dimension_examples() {
        assert!((similarity_dimension(&p(0.5, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        assert!(
            (similarity_dimension(&p(0.0, std::f64::consts::FRAC_1_SQRT_2)).unwrap() - 2.0)
                .abs()
                < 1e-12
        );
        let r = 2f64.powf(-1.0 / 3.0);
        assert!((similarity_dimension(&p(r, 0.0)).unwrap() - 3.0).abs() < 1e-12);
        assert!(similarity_dimension(&p(0.0, 0.0)).is_err());
    }

    #[test]
    fn digit_string_validates_alphabet() {
        assert!(DigitString::new(vec![0, 1], Alphabet::PlusMinus, false).is_err());
        assert!(DigitString::new(vec![-1, 1], Alphabet::PlusMinus, false).is_ok());
        assert!(DigitString::new(vec![2], Alphabet::ZeroPlusMinus, true).is_err());
    }

    #[test]
    fn degree_ignores_trailing_zeros() {
        let d = DigitString::new(vec![0, 1, 0, 0], Alphabet::ZeroPlusMinus, true).unwrap();
        assert_eq!(d.degree(), 2);
        let e = DigitString::new(vec![1, 0], Alphabet::ZeroPlusMinus, false).unwrap();
        assert_eq!(e.degree(), 0);
    }
}
