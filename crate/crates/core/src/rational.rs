//! Rationals that stay on machine words while they fit.
//!
//! Values whose reduced numerator and denominator fit in `i64` are kept as a
//! pair; anything larger falls back to `BigRational`. The representation is
//! canonical, so structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    /// Reduced `n/d` with `d > 0` and `|n| <= i64::MAX`.
    Small(i64, i64),
    /// Only used when the reduced value does not fit `Small`.
    Big(BigRational),
}

impl Default for Rational {
    fn default() -> Self {
        Rational::Small(0, 1)
    }
}

fn fits(x: i128) -> bool {
    x.unsigned_abs() <= i64::MAX as u128
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn one() -> Self {
        Rational::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// Panics if `d == 0`.
    pub fn from_i128(n: i128, d: i128) -> Self {
        assert!(d != 0, "zero denominator");
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if fits(n) && fits(d) {
            Rational::Small(n as i64, d as i64)
        } else {
            Rational::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))
        }
    }

    pub fn from_big(b: BigRational) -> Self {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(n, d),
            _ => Rational::Big(b),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(n, d) => Some(if *n < 0 { Rational::Small(-d, -n) } else { Rational::Small(*d, *n) }),
            Rational::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    pub fn numer_string(&self) -> String {
        match self {
            Rational::Small(n, _) => n.to_string(),
            Rational::Big(b) => b.numer().to_string(),
        }
    }

    pub fn denom_string(&self) -> String {
        match self {
            Rational::Small(_, d) => d.to_string(),
            Rational::Big(b) => b.denom().to_string(),
        }
    }
}

impl std::ops::Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (self, rhs) {
            (Rational::Small(0, _), x) | (x, Rational::Small(0, _)) => x.clone(),
            (Rational::Small(a, 1), Rational::Small(b, 1)) => Rational::from_i128(*a as i128 + *b as i128, 1),
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(n, d) => Rational::Small(-n, *d),
            Rational::Big(b) => Rational::Big(-b),
        }
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl std::ops::Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &-rhs
    }
}

impl std::ops::Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (self, rhs) {
            (Rational::Small(0, _), _) | (_, Rational::Small(0, _)) => Rational::zero(),
            (Rational::Small(1, 1), x) | (x, Rational::Small(1, 1)) => x.clone(),
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl std::ops::Div for &Rational {
    type Output = Rational;
    /// Panics on division by zero.
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.recip().expect("division by zero")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    /// `n` for integers, `n/d` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            f.write_str(&self.numer_string())
        } else {
            write!(f, "{}/{}", self.numer_string(), self.denom_string())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<BigRational> for Rational {
    fn from(b: BigRational) -> Self {
        Rational::from_big(b)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Rational::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(..)));
        assert_eq!(&sq - &sq, Rational::zero());
    }

    #[test]
    fn arithmetic_matches_bigrational() {
        let vals = [(1, 2), (-3, 4), (7, 1), (0, 1), (5, -6)];
        for (a, b) in vals {
            for (c, d) in vals {
                let x = Rational::from_i128(a, b);
                let y = Rational::from_i128(c, d);
                let bx = BigRational::new(a.into(), b.into());
                let by = BigRational::new(c.into(), d.into());
                assert_eq!((&x + &y).to_big(), &bx + &by);
                assert_eq!((&x * &y).to_big(), &bx * &by);
                assert_eq!((&x - &y).to_big(), &bx - &by);
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }
}
