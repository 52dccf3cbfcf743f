//! Exact rational-complex arithmetic, used to validate the floating
//! evaluation path on parameters with rational coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::base::DigitString;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl RationalComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_ratios(re: (i64, i64), im: (i64, i64)) -> Self {
        Self {
            re: BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            im: BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        }
    }

    pub fn zero() -> Self {
        Self { re: BigRational::from_integer(0.into()), im: BigRational::from_integer(0.into()) }
    }

    pub fn from_integer(n: i64) -> Self {
        Self {
            re: BigRational::from_integer(n.into()),
            im: BigRational::from_integer(0.into()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let f = |q: &BigRational| {
            let num = q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let den = q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            num / den
        };
        (f(&self.re), f(&self.im))
    }
}

/// Horner evaluation of a digit string at an exact rational-complex point,
/// in the same highest-degree-first order as the floating path.
pub fn eval_prefix_exact(d: &DigitString, lambda: &RationalComplex) -> RationalComplex {
    let mut acc = RationalComplex::zero();
    for &digit in d.digits().iter().rev() {
        acc = acc.mul(lambda).add(&RationalComplex::from_integer(digit as i64));
    }
    if d.leading_one() {
        acc.mul(lambda).add(&RationalComplex::from_integer(1))
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Alphabet;

    #[test]
    fn exact_eval_matches_hand_computation() {
        // 1 − z − z^2 at z = 1/2: 1 − 1/2 − 1/4 = 1/4.
        let d = DigitString::new(vec![-1, -1], Alphabet::ZeroPlusMinus, true).unwrap();
        let z = RationalComplex::from_ratios((1, 2), (0, 1));
        let v = eval_prefix_exact(&d, &z);
        assert_eq!(v.re, BigRational::new(1.into(), 4.into()));
        assert_eq!(v.im, BigRational::from_integer(0.into()));
    }

    #[test]
    fn digit_perturbation_is_exactly_linear() {
        // Changing digit k by Δ changes the value by exactly Δ·λ^k.
        let base = DigitString::new(vec![1, 0, -1, 1, 0, 1], Alphabet::ZeroPlusMinus, true)
            .unwrap();
        let lambda = RationalComplex::from_ratios((3, 7), (2, 5));
        let v0 = eval_prefix_exact(&base, &lambda);
        for k in 0..base.len() {
            let mut digits = base.digits().to_vec();
            let delta = if digits[k] == 1 { -1 } else { 1 };
            digits[k] += delta;
            let d1 = DigitString::new(digits, Alphabet::ZeroPlusMinus, true).unwrap();
            let v1 = eval_prefix_exact(&d1, &lambda);
            // λ^{k+1} because digits of a leading-one string start at power 1.
            let mut pow = RationalComplex::from_integer(1);
            for _ in 0..=k {
                pow = pow.mul(&lambda);
            }
            let expected = v0.add(&pow.mul(&RationalComplex::from_integer(delta as i64)));
            assert_eq!(v1, expected);
        }
    }
}
