//! Exact complex scalars `a + b i` with `a, b` rational.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::rational::Rational;

/// Element of the Gaussian rationals `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self::from_rationals(Rational::from_big(re), Rational::from_big(im))
    }

    pub fn from_rationals(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::from_rationals(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rationals(Rational::from_int(n), Rational::zero())
    }

    /// `num/den + 0 i`. Panics if `den == 0`.
    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rationals(Rational::from_i128(num.into(), den.into()), Rational::zero())
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::from_rationals(
            Rational::from_i128(re.0.into(), re.1.into()),
            Rational::from_i128(im.0.into(), im.1.into()),
        )
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn re(&self) -> BigRational {
        self.re.to_big()
    }

    pub fn im(&self) -> BigRational {
        self.im.to_big()
    }

    pub fn re_rational(&self) -> &Rational {
        &self.re
    }

    pub fn im_rational(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::from_rationals(self.re.clone(), -&self.im)
    }

    /// `|z|^2`, always real and non-negative.
    pub fn norm_sqr(&self) -> BigRational {
        self.norm_sqr_rational().to_big()
    }

    fn norm_sqr_rational(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        let n = self
            .norm_sqr_rational()
            .recip()
            .ok_or_else(|| Error::NotInvertible("zero scalar".into()))?;
        Ok(Self::from_rationals(&self.re * &n, -&(&self.im * &n)))
    }

    pub fn mul_i(&self) -> Self {
        Self::from_rationals(-&self.im, self.re.clone())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let r = Rational::from_big(r.clone());
        Self::from_rationals(&self.re * &r, &self.im * &r)
    }
}

/// Formats a rational as `p/q` in lowest terms, always with an explicit denominator.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Json(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    /// Prints in the syntax accepted by the expression parser, e.g. `(1/2 - 3i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({} {} {}i)", self.re, sign, self.im.abs())
            }
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::from_rationals(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::from_rationals(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        let (a, b, c, d) = (&self.re, &self.im, &rhs.re, &rhs.im);
        match (b.is_zero(), d.is_zero()) {
            (true, true) => GaussianRational::from_rationals(a * c, Rational::zero()),
            (true, false) => GaussianRational::from_rationals(a * c, a * d),
            (false, true) => GaussianRational::from_rationals(a * c, b * c),
            (false, false) => GaussianRational::from_rationals(&(a * c) - &(b * d), &(a * d) + &(b * c)),
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero; use [`GaussianRational::inv`] for a fallible path.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::from_rationals(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::from_rationals(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re = &self.re + &rhs.re;
        self.im = &self.im + &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re = &self.re - &rhs.re;
        self.im = &self.im - &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = GaussianRational::from_parts((1, 2), (3, 1));
        let b = GaussianRational::from_parts((-2, 1), (1, 3));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), GaussianRational::from_int(-1));
        assert!(GaussianRational::zero().inv().is_err());
    }

    #[test]
    fn rational_strings() {
        let r = parse_rational("6/-4").unwrap();
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_to_string(&parse_rational("7").unwrap()), "7/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::from_parts((1, 2), (-3, 1)).to_string(), "(1/2 - 3i)");
        assert_eq!(GaussianRational::i().to_string(), "1i");
        assert_eq!(GaussianRational::from_frac(-5, 3).to_string(), "-5/3");
    }
}
