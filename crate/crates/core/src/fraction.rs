//! Exact reduced rationals over `i64`.
//!
//! Intermediate products are formed in `i128` and reduced before being
//! narrowed back, so overflow only surfaces when a reduced result does not
//! fit. The `checked_*` methods report that as [`Error::Overflow`]; the
//! operator impls panic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn narrow(n: i128, d: i128) -> Result<Fraction> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    let g = gcd_i128(n, d).max(1);
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    let num = i64::try_from(n).map_err(|_| Error::Overflow("fraction"))?;
    let den = i64::try_from(d).map_err(|_| Error::Overflow("fraction"))?;
    Ok(Fraction { num, den })
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Builds and reduces `num/den`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        narrow(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    pub fn floor(self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(self) -> i64 {
        -((-self.num).div_euclid(self.den))
    }

    /// Fractional part `x - floor(x)`, always in `[0, 1)`.
    pub fn fract(self) -> Fraction {
        Fraction { num: self.num.rem_euclid(self.den), den: self.den }
    }

    pub fn checked_add(self, rhs: Fraction) -> Result<Fraction> {
        let n = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        narrow(n, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_sub(self, rhs: Fraction) -> Result<Fraction> {
        self.checked_add(-rhs)
    }

    pub fn checked_mul(self, rhs: Fraction) -> Result<Fraction> {
        narrow(self.num as i128 * rhs.num as i128, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_div(self, rhs: Fraction) -> Result<Fraction> {
        if rhs.num == 0 {
            return Err(Error::ZeroDenominator);
        }
        narrow(self.num as i128 * rhs.den as i128, self.den as i128 * rhs.num as i128)
    }

    pub fn mul_int(self, k: i64) -> Fraction {
        self * Fraction::from_int(k)
    }

    pub fn div_int(self, k: i64) -> Fraction {
        self.checked_div(Fraction::from_int(k)).expect("fraction division")
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_int(n)
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction { num: -self.num, den: self.den }
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        self.checked_add(rhs).expect("fraction overflow")
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Fraction) -> Fraction {
        self.checked_sub(rhs).expect("fraction overflow")
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        self.checked_mul(rhs).expect("fraction overflow")
    }
}

impl Add<i64> for Fraction {
    type Output = Fraction;
    fn add(self, rhs: i64) -> Fraction {
        self + Fraction::from_int(rhs)
    }
}

impl Sub<i64> for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: i64) -> Fraction {
        self - Fraction::from_int(rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `a/b` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid fraction {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                Fraction::new(n, d)
            }
            None => Ok(Fraction::from_int(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fr(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(fr(6, -4), fr(-3, 2));
        assert_eq!(fr(-6, -4).num(), 3);
        assert_eq!(fr(0, 7), Fraction::ZERO);
        assert_eq!(Fraction::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn floor_ceil_fract() {
        assert_eq!(fr(5, 3).floor(), 1);
        assert_eq!(fr(5, 3).ceil(), 2);
        assert_eq!(fr(-5, 3).floor(), -2);
        assert_eq!(fr(-5, 3).ceil(), -1);
        assert_eq!(fr(-5, 3).fract(), fr(1, 3));
        assert_eq!(fr(6, 3).fract(), Fraction::ZERO);
        assert_eq!(Fraction::from_int(4).ceil(), 4);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("5/3".parse::<Fraction>().unwrap(), fr(5, 3));
        assert_eq!(" 10/6 ".parse::<Fraction>().unwrap().to_string(), "5/3");
        assert_eq!("7".parse::<Fraction>().unwrap(), Fraction::from_int(7));
        assert!("5/x".parse::<Fraction>().is_err());
        assert!("1/0".parse::<Fraction>().is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Fraction::from_int(i64::MAX);
        assert_eq!(big.checked_add(Fraction::ONE), Err(Error::Overflow("fraction")));
        assert_eq!(big.checked_mul(fr(1, 2)).unwrap(), fr(i64::MAX, 2));
    }

    proptest! {
        #[test]
        fn arithmetic_matches_cross_multiplication(a in -1000i64..1000, b in 1i64..60, c in -1000i64..1000, d in 1i64..60) {
            let x = fr(a, b);
            let y = fr(c, d);
            prop_assert_eq!(x + y, fr(a * d + c * b, b * d));
            prop_assert_eq!(x * y, fr(a * c, b * d));
            prop_assert_eq!(x - y + y, x);
            prop_assert_eq!(x < y, a * d < c * b);
            let f = x.fract();
            prop_assert!(f >= Fraction::ZERO && f < Fraction::ONE);
            prop_assert_eq!(Fraction::from_int(x.floor()) + f, x);
        }
    }
}
