//! h-Farey fractions and intervals.
//!
//! An h-Farey fraction is a reduced `a/b` with `b <= h`. Two consecutive ones
//! `a'/b' < a/b` satisfy `a*b' = a'*b + 1` and `b + b' > h`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// The half-open interval `(lower, upper]` between consecutive h-Farey
/// fractions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyInterval {
    pub h: i64,
    pub lower: Fraction,
    pub upper: Fraction,
}

impl FareyInterval {
    /// Builds the interval ending at `upper`.
    pub fn ending_at(upper: Fraction, h: i64) -> Result<Self> {
        let lower = farey_predecessor(upper, h)?;
        Ok(FareyInterval { h, lower, upper })
    }

    pub fn width(&self) -> Fraction {
        self.upper - self.lower
    }

    pub fn contains(&self, x: Fraction) -> bool {
        self.lower < x && x <= self.upper
    }

    /// `{-i a / b}`.
    pub fn phi(&self, i: i64) -> Fraction {
        phi(i, self)
    }

    /// `{i a' / b'}`.
    pub fn phi_prime(&self, i: i64) -> Fraction {
        phi_prime(i, self)
    }
}

impl fmt::Display for FareyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lower, self.upper)
    }
}

fn check_order(h: i64) -> Result<()> {
    if h < 1 {
        return Err(Error::InvalidOrder(h));
    }
    Ok(())
}

/// Inverse of `a` modulo `b` in `[0, b)`; `b = 1` yields 0.
fn mod_inverse(a: i64, b: i64) -> Option<i64> {
    let (mut old_r, mut r) = (a.rem_euclid(b) as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if b == 1 {
        return Some(0);
    }
    (old_r == 1).then(|| old_s.rem_euclid(b as i128) as i64)
}

/// Largest h-Farey fraction strictly below `f`.
///
/// `b'` is the unique solution of `a b' = 1 (mod b)` in `(h - b, h]`.
pub fn farey_predecessor(f: Fraction, h: i64) -> Result<Fraction> {
    check_order(h)?;
    if !f.is_positive() {
        return Err(Error::NonPositive(f.to_string()));
    }
    let (a, b) = (f.num(), f.den());
    if b > h {
        return Err(Error::NotFarey(f.to_string(), h));
    }
    let inv = mod_inverse(a, b).expect("reduced fraction has invertible numerator");
    let bp = h - (h - inv).rem_euclid(b);
    let ap = (a as i128 * bp as i128 - 1) / b as i128;
    let ap = i64::try_from(ap).map_err(|_| Error::Overflow("farey_predecessor"))?;
    Fraction::new(ap, bp)
}

/// The h-Farey interval `(a'/b', a/b]` containing `x`.
///
/// Stern-Brocot descent keeping `lo < x <= hi` until the next mediant has a
/// denominator above `h`.
pub fn farey_cover(x: Fraction, h: i64) -> Result<FareyInterval> {
    check_order(h)?;
    if !x.is_positive() {
        return Err(Error::NonPositive(x.to_string()));
    }
    let (xn, xd) = (x.num() as i128, x.den() as i128);
    // lo = 0/1, hi = 1/0
    let (mut ln, mut ld, mut hn, mut hd) = (0i128, 1i128, 1i128, 0i128);
    let h = h as i128;
    loop {
        let (mn, md) = (ln + hn, ld + hd);
        if md > h {
            break;
        }
        // mediant >= x ?
        if mn * xd >= xn * md {
            // jump as many left steps as possible: hi = lo*j + hi
            // largest j with (ln*j + hn)/(ld*j + hd) >= x and ld*j + hd <= h
            let mut j = (h - hd) / ld;
            let num = hd * xn - hn * xd;
            let den = ln * xd - ld * xn;
            // (ln j + hn) xd >= xn (ld j + hd)  <=>  j * den >= num, den < 0
            if den < 0 {
                j = j.min((-num).div_euclid(-den));
            }
            hn += ln * j.max(1);
            hd += ld * j.max(1);
        } else {
            let mut j = if hd == 0 { i128::MAX } else { (h - ld) / hd };
            // (hn j + ln) xd < xn (hd j + ld)  <=>  j * (hn xd - xn hd) < xn ld - ln xd
            let den = hn * xd - xn * hd;
            let num = xn * ld - ln * xd;
            if den > 0 {
                j = j.min((num - 1).div_euclid(den));
            }
            ln += hn * j.max(1);
            ld += hd * j.max(1);
        }
    }
    let upper = Fraction::new(
        i64::try_from(hn).map_err(|_| Error::Overflow("farey_cover"))?,
        i64::try_from(hd).map_err(|_| Error::Overflow("farey_cover"))?,
    )?;
    let lower = Fraction::new(
        i64::try_from(ln).map_err(|_| Error::Overflow("farey_cover"))?,
        i64::try_from(ld).map_err(|_| Error::Overflow("farey_cover"))?,
    )?;
    debug_assert_eq!(farey_predecessor(upper, h as i64), Ok(lower));
    Ok(FareyInterval { h: h as i64, lower, upper })
}

/// `{-i a / b}`, the fractional part of `-i` times the upper endpoint.
pub fn phi(i: i64, interval: &FareyInterval) -> Fraction {
    (-interval.upper.mul_int(i)).fract()
}

/// `{i a' / b'}`, the fractional part of `i` times the lower endpoint.
pub fn phi_prime(i: i64, interval: &FareyInterval) -> Fraction {
    interval.lower.mul_int(i).fract()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    /// All reduced fractions with denominator <= h in `[0, bound]`, sorted.
    fn enumerate_farey(h: i64, bound: i64) -> Vec<Fraction> {
        let mut v: Vec<Fraction> = (1..=h)
            .flat_map(|b| (0..=bound * b).map(move |a| fr(a, b)))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    fn brute_cover(x: Fraction, h: i64) -> (Fraction, Fraction) {
        let all = enumerate_farey(h, x.ceil() + 1);
        let idx = all.iter().position(|&f| f >= x).unwrap();
        (all[idx - 1], all[idx])
    }

    #[test]
    fn cover_examples() {
        let c = farey_cover(fr(70, 42), 3).unwrap();
        assert_eq!((c.lower, c.upper), (fr(3, 2), fr(5, 3)));
        // 1 is a Farey fraction of every order; its predecessor is (h-1)/h
        let c = farey_cover(Fraction::ONE, 5).unwrap();
        assert_eq!((c.lower, c.upper), (fr(4, 5), fr(1, 1)));
        let c = farey_cover(Fraction::ONE, 1).unwrap();
        assert_eq!((c.lower, c.upper), (fr(0, 1), fr(1, 1)));
        let c = farey_cover(fr(17, 10), 4).unwrap();
        assert_eq!((c.lower, c.upper), brute_cover(fr(17, 10), 4));
        assert_eq!((c.lower, c.upper), (fr(5, 3), fr(7, 4)));
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(farey_predecessor(fr(5, 3), 3).unwrap(), fr(3, 2));
        assert_eq!(farey_predecessor(fr(5, 3), 4).unwrap(), fr(3, 2));
        assert_eq!(farey_predecessor(fr(3, 2), 4).unwrap(), fr(4, 3));
        assert_eq!(farey_predecessor(fr(2, 1), 4).unwrap(), fr(7, 4));
        assert_eq!(farey_predecessor(fr(1, 5), 5).unwrap(), fr(0, 1));
    }

    #[test]
    fn predecessor_rejects_bad_input() {
        assert!(matches!(farey_predecessor(fr(5, 3), 2), Err(Error::NotFarey(..))));
        assert!(matches!(farey_predecessor(Fraction::ZERO, 3), Err(Error::NonPositive(_))));
        assert!(matches!(farey_predecessor(fr(-1, 2), 3), Err(Error::NonPositive(_))));
        assert_eq!(farey_cover(fr(1, 2), 0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn phi_examples() {
        let iv = FareyInterval::ending_at(fr(5, 3), 3).unwrap();
        assert_eq!((iv.phi(1), iv.phi_prime(1)), (fr(1, 3), fr(1, 2)));
        assert_eq!((iv.phi(3), iv.phi_prime(3)), (Fraction::ZERO, fr(1, 2)));
        let iv = FareyInterval::ending_at(fr(3, 2), 4).unwrap();
        assert_eq!((iv.phi(2), iv.phi_prime(2)), (Fraction::ZERO, fr(2, 3)));
    }

    #[test]
    fn consecutive_pairs_match_enumeration() {
        for h in 1..=12 {
            let all = enumerate_farey(h, 4);
            for w in all.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                if hi.num() == 0 {
                    continue;
                }
                let p = farey_predecessor(hi, h).unwrap();
                assert_eq!(p, lo, "h={h} f={hi}");
                let (a, b, ap, bp) = (hi.num(), hi.den(), p.num(), p.den());
                assert_eq!(a * bp - ap * b, 1);
                assert!(bp <= h && b + bp > h);
                assert_eq!(hi - lo, fr(1, b * bp));
                let iv = FareyInterval::ending_at(hi, h).unwrap();
                // a'b = ab' - 1, so {b a'/b'} = 1 - 1/b'
                assert_eq!(iv.phi_prime(b), Fraction::ONE - fr(1, bp));
                assert_eq!(iv.phi_prime(b % bp), Fraction::ONE - fr(1, bp));
                assert_eq!(iv.phi(bp), Fraction::ONE - fr(1, b));
            }
        }
    }

    #[test]
    fn cover_matches_brute_force() {
        for h in 1..=9 {
            for d in 1..=40 {
                for n in 1..=3 * d {
                    let x = fr(n, d);
                    let c = farey_cover(x, h).unwrap();
                    assert_eq!((c.lower, c.upper), brute_cover(x, h), "x={x} h={h}");
                    assert!(c.contains(x));
                }
            }
        }
    }

    #[test]
    fn cover_handles_large_values() {
        let c = farey_cover(Fraction::from_int(100), 3).unwrap();
        assert_eq!((c.lower, c.upper), (fr(299, 3), fr(100, 1)));
        let c = farey_cover(fr(1_000_001, 3), 7).unwrap();
        assert_eq!(c.upper, fr(1_000_001, 3));
    }
}
