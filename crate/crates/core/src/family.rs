//! The h-regular family `S(h, a/b, Delta, tau, m) = <m, Gamma>_c` with
//!
//! ```text
//! c = floor(a h m / b) - m - tau,    Gamma = floor((c + m - 1) / h) - Delta
//! ```
//!
//! together with the short/split criteria, the closed-form rank and
//! Eliahou number, the transforms that produce infinite families, and the
//! two explicit Eliahou families.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationRecord};
use crate::error::{Error, Result};
use crate::farey::{farey_predecessor, FareyInterval};
use crate::fraction::Fraction;
use crate::semigroup::{EliahouRecord, Semigroup};
use crate::sumset::{canonical_bh_set, mc, IntSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub h: i64,
    pub frac: Fraction,
    pub delta: IntSet,
    pub tau: i64,
    pub m: i64,
}

impl FamilyParams {
    pub fn new(h: i64, frac: Fraction, delta: IntSet, tau: i64, m: i64) -> Result<Self> {
        if h < 2 {
            return Err(Error::InvalidFamily(format!("h = {h} < 2")));
        }
        if frac.den() > h || !frac.is_positive() {
            return Err(Error::NotFarey(frac.to_string(), h));
        }
        if delta.is_empty() {
            return Err(Error::InvalidFamily("empty Delta".into()));
        }
        Ok(FamilyParams { h, frac, delta, tau, m })
    }

    pub fn interval(&self) -> FareyInterval {
        FareyInterval::ending_at(self.frac, self.h).expect("validated Farey fraction")
    }

    /// `a h m / b` as an exact fraction.
    fn scaled(&self) -> Fraction {
        self.frac.mul_int(self.h * self.m)
    }

    pub fn conductor(&self) -> i64 {
        self.scaled().floor() - self.m - self.tau
    }

    /// `floor((c + m - 1) / h)`, the largest generator when `0 in Delta`.
    pub fn top(&self) -> i64 {
        (self.conductor() + self.m - 1).div_euclid(self.h)
    }

    pub fn delta1(&self) -> i64 {
        self.delta.largest().expect("non-empty Delta")
    }

    pub fn gamma(&self) -> IntSet {
        self.delta.reflect(self.top())
    }

    /// Number of left generators, `|Delta| + 1`.
    pub fn l(&self) -> usize {
        self.delta.len() + 1
    }

    /// `t = a h m / b - c - m = tau + {a h m / b}`.
    pub fn t(&self) -> Fraction {
        self.scaled() - self.conductor() - self.m
    }

    /// `w = h delta_1 + 1 + ((c + m - 1) mod h) = c + m - h gamma_1`.
    pub fn w(&self) -> i64 {
        self.h * self.delta1() + 1 + (self.conductor() + self.m - 1).rem_euclid(self.h)
    }

    /// `m >= w`, which together with `Delta >= 0` is h-regularity.
    pub fn is_h_regular(&self) -> bool {
        self.m >= self.w() && self.delta.is_nonnegative()
    }

    /// `m > b b' t / h`: the Farey interval of `(c + m) / (h m)` is the one
    /// ending at `a/b`.
    pub fn farey_matches(&self) -> bool {
        let iv = self.interval();
        Fraction::from_int(self.m) > self.t().mul_int(iv.upper.den() * iv.lower.den()).div_int(self.h)
    }

    pub fn with_tau(&self, tau: i64) -> Self {
        FamilyParams { tau, ..self.clone() }
    }

    pub fn with_m(&self, m: i64) -> Self {
        FamilyParams { m, ..self.clone() }
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({}, {}, {{{}}}, {}, {})", self.h, self.frac, self.delta, self.tau, self.m)
    }
}

/// `S(h, a/b, Delta, tau, m)` as an explicit semigroup.
pub fn construct(p: &FamilyParams) -> Result<Semigroup> {
    let c = p.conductor();
    let gamma = p.gamma();
    if c <= p.m {
        return Err(Error::InvalidFamily(format!("{p}: conductor {c} <= m")));
    }
    if let Some(g) = gamma.iter().find(|&g| g <= p.m || g >= c) {
        return Err(Error::InvalidFamily(format!("{p}: generator {g} outside ({}, {c})", p.m)));
    }
    Semigroup::new(p.m, &gamma, c)
}

/// Parameters of the extremal split member `S^(h, a/b, Delta)`:
/// `tau^ = floor((h - b)(h delta_1 + 1) / b)` and
/// `m^ = [(b + b') h - b b'] delta_1 + b + b'`.
pub fn hat_params(h: i64, frac: Fraction, delta: IntSet) -> Result<FamilyParams> {
    let probe = FamilyParams::new(h, frac, delta, 0, 0)?;
    let d1 = probe.delta1();
    if d1 < 1 {
        return Err(Error::InvalidFamily(format!("max Delta = {d1} < 1")));
    }
    let iv = probe.interval();
    let (b, bp) = (frac.den(), iv.lower.den());
    let tau = ((h - b) * (h * d1 + 1)).div_euclid(b);
    let m = ((b + bp) * h - b * bp) * d1 + b + bp;
    Ok(FamilyParams { tau, m, ..probe })
}

/// Outcome of the short/split criteria on a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaVerdict {
    /// `t >= (h - b) w / b`
    pub c1: bool,
    /// `(b - bm) m >= b b' [(h - bm) w - bm t] / h`
    pub cunif: bool,
    /// `m >= b b' t / h + b (w + [b' = h])`
    pub csplit: bool,
    pub short: bool,
    pub split: bool,
    /// `b mod b'`
    pub bm: i64,
}

pub fn criteria(p: &FamilyParams) -> Result<CriteriaVerdict> {
    if !p.farey_matches() {
        return Err(Error::FareyMismatch(format!("{p}: m <= b b' t / h")));
    }
    let iv = p.interval();
    let (h, m) = (p.h, p.m);
    let (b, bp) = (iv.upper.den(), iv.lower.den());
    let bm = b % bp;
    let t = p.t();
    let w = Fraction::from_int(p.w());
    let mf = Fraction::from_int(m);

    let c1 = t >= w.mul_int(h - b).div_int(b);
    let cunif = if b == h {
        // equivalent form, (h - bm) > 0 since bm < b' <= h
        let alt = mf >= w.mul_int(bp) - t.mul_int(bm * bp).div_int(h - bm);
        let direct = mf.mul_int(b - bm) >= (w.mul_int(h - bm) - t.mul_int(bm)).mul_int(b * bp).div_int(h);
        assert_eq!(alt, direct, "b = h forms of the uniformity criterion disagree for {p}");
        alt
    } else {
        mf.mul_int(b - bm) >= (w.mul_int(h - bm) - t.mul_int(bm)).mul_int(b * bp).div_int(h)
    };
    let indicator = i64::from(bp == h);
    let csplit = mf >= t.mul_int(b * bp).div_int(h) + (w + indicator).mul_int(b);
    Ok(CriteriaVerdict { c1, cunif, csplit, short: c1 && cunif, split: c1 && csplit, bm })
}

/// `k = sum_{i<h} floor((h - i) a'/b') s_i + omega` with
/// `s_i = multichoose(l - 1, i)`.
pub fn closed_form_k(p: &FamilyParams, omega: usize) -> i64 {
    let lower = p.interval().lower;
    let size = p.delta.len();
    (0..p.h)
        .map(|i| lower.mul_int(p.h - i).floor() * mc(size, i as usize) as i64)
        .sum::<i64>()
        + omega as i64
}

/// The four expressions of `E0`, which depends only on `h`, the Farey
/// interval and `l`.
pub fn e0_forms(h: i64, iv: &FareyInterval, l: usize) -> [Fraction; 4] {
    let hu = h as usize;
    let li = l as i64;
    let s_i = |i: i64| Fraction::from_int(mc(l - 1, i as usize) as i64);
    let s = Fraction::from_int(mc(l, hu) as i64);
    let s_h = s_i(h);
    let phi = |i| iv.phi(i);
    let phip = |i| iv.phi_prime(i);

    let sum_p: Fraction = (0..h).map(|i| phip(h - i) * s_i(i)).fold(Fraction::ZERO, |a, x| a + x);
    let f16 = -(sum_p.mul_int(li)) + phip(h) * s;

    let sum: Fraction = (0..h).map(|i| phi(h - i) * s_i(i)).fold(Fraction::ZERO, |a, x| a + x);
    let f17 = -(s_h.mul_int(h - 1)) + sum.mul_int(li) - phi(h) * s;

    // sum_{j=1}^{floor(h x)} multichoose(l, h - ceil(j / x))
    let abel = |x: Fraction| -> (i64, i64) {
        let n = x.mul_int(h).floor();
        let tail = (1..=n)
            .map(|j| {
                let idx = Fraction::from_int(j).checked_div(x).expect("x > 0 when n >= 1").ceil();
                mc(l, (h - idx) as usize) as i64
            })
            .sum();
        (n, tail)
    };
    let (n18, tail18) = abel(phip(1));
    let f18 = -(s.mul_int(n18)) + Fraction::from_int(li * tail18);
    let (n19, tail19) = abel(phi(1));
    let f19 = -(s_h.mul_int(h - 1)) + s.mul_int(n19) - Fraction::from_int(li * tail19);
    [f16, f17, f18, f19]
}

/// Closed-form numbers of a collision-free family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub e0: Fraction,
    pub forms: [Fraction; 4],
    pub q: i64,
    pub rho: i64,
    pub k: i64,
    pub s: i64,
    pub record: EliahouRecord,
}

/// `E = E0 + rho + l omega`, with `rho = ceil(phi_h m) + tau` and
/// `q = ceil(h a / b) - 1`. All four forms of `E0` must agree.
pub fn closed_form_e(p: &FamilyParams, omega: usize) -> Result<ClosedForm> {
    let iv = p.interval();
    let h = p.h;
    let l = p.l();
    let forms = e0_forms(h, &iv, l);
    assert!(forms.iter().all(|&f| f == forms[0]), "E0 forms disagree for {p}: {forms:?}");
    let e0 = forms[0];
    assert!(e0.is_integer(), "E0 = {e0} is not an integer for {p}");

    let q = p.frac.mul_int(h).ceil() - 1;
    assert_eq!(q, iv.lower.mul_int(h).floor(), "depth forms disagree for {p}");
    let rho = (iv.phi(h).mul_int(p.m)).ceil() + p.tau;
    let c = p.conductor();
    if q * p.m - rho != c || rho < 0 || rho >= p.m {
        return Err(Error::FareyMismatch(format!("{p}: q m - rho = {} but c = {c}", q * p.m - rho)));
    }
    let k = closed_form_k(p, omega);
    let s = mc(l, h as usize) as i64;
    let r = p.m - s;
    let e = e0.num() + rho + l as i64 * omega as i64;
    let w = k * (l as i64 + r) - c;
    Ok(ClosedForm { e0, forms, q, rho, k, s, record: EliahouRecord { e, w, e0: Some(e0) } })
}

/// `S(h, a/b + 1, Delta, tau, m)`, which is also `<m, Gamma + m>_{c + h m}`.
pub fn shift_numerator(p: &FamilyParams) -> FamilyParams {
    FamilyParams { frac: p.frac + 1, ..p.clone() }
}

/// `S(h, a/b, Delta, tau, m + b n)`; `t` and `w` are unchanged when `b | h`.
pub fn inflate_m(p: &FamilyParams, n: i64) -> Result<FamilyParams> {
    let b = p.frac.den();
    if p.h % b != 0 {
        return Err(Error::InvalidFamily(format!("b = {b} does not divide h = {}", p.h)));
    }
    Ok(p.with_m(p.m + b * n))
}

/// A member of the split family with `b | h`, together with the proven
/// upper bound on its Eliahou number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedFamily {
    pub params: FamilyParams,
    /// `-(b - 1)(h / b - 1) h / 4`
    pub e_bound: Fraction,
}

/// `S(h, a/b, {0,1}, tau^, m^ + b n)` for `b | h`, `b != 1`, `b' != 1`.
pub fn family_ex1(h: i64, frac: Fraction, n: i64) -> Result<BoundedFamily> {
    let b = frac.den();
    if b == 1 || h % b != 0 || n < 0 {
        return Err(Error::InvalidFamily(format!("need b | h, b != 1 and n >= 0 (h = {h}, a/b = {frac}, n = {n})")));
    }
    let hat = hat_params(h, frac, IntSet::from([0, 1]))?;
    if hat.interval().lower.den() == 1 {
        return Err(Error::InvalidFamily(format!("predecessor of {frac} has denominator 1")));
    }
    let params = inflate_m(&hat, n)?;
    let e_bound = -Fraction::new((b - 1) * (h / b - 1) * h, 4)?;
    Ok(BoundedFamily { params, e_bound })
}

/// `S^(h, (2b - 1)/b, {0,1})` and its predicted Eliahou number
/// `-C(b - 1, 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedFamily {
    pub params: FamilyParams,
    pub predicted_e: i64,
}

pub fn family_ex2(h: i64, b: i64) -> Result<PredictedFamily> {
    if b <= (h + 1) / 2 || b > h {
        return Err(Error::InvalidFamily(format!("need ceil(h/2) < b <= h (h = {h}, b = {b})")));
    }
    let params = hat_params(h, Fraction::new(2 * b - 1, b)?, IntSet::from([0, 1]))?;
    Ok(PredictedFamily { params, predicted_e: -((b - 1) * (b - 2) / 2) })
}

/// A family member checked against the brute-force oracle.
#[derive(Clone, Debug, Serialize)]
pub struct MemberCheck {
    pub params: FamilyParams,
    pub semigroup: Semigroup,
    pub t: Fraction,
    pub w: i64,
    pub farey: FareyInterval,
    pub oracle_k: i64,
    pub oracle: EliahouRecord,
    pub classification: Option<ClassificationRecord>,
    pub verdict: Option<CriteriaVerdict>,
    pub closed_form: Option<ClosedForm>,
    /// Canonically defined, h-regular, collision-free and with the Farey
    /// interval ending at `a/b`: the closed forms apply.
    pub verified: bool,
}

pub fn evaluate(p: &FamilyParams) -> Result<MemberCheck> {
    let semigroup = construct(p)?;
    let classification = classify(&semigroup, p.h).ok();
    let farey_ok = p.farey_matches();
    let omega = classification.as_ref().map_or(0, |c| c.long_elements);
    let closed_form = if farey_ok { closed_form_e(p, omega).ok() } else { None };
    let verdict = if farey_ok { criteria(p).ok() } else { None };
    let verified = farey_ok
        && p.is_h_regular()
        && classification.as_ref().is_some_and(|c| c.collision_free && c.h_regular);
    Ok(MemberCheck {
        params: p.clone(),
        t: p.t(),
        w: p.w(),
        farey: p.interval(),
        oracle_k: semigroup.params().k,
        oracle: semigroup.numbers(),
        semigroup,
        classification,
        verdict,
        closed_form,
        verified,
    })
}

/// Every reduced `a/b` in `(lo, hi]` with `b <= h`, ascending.
pub fn farey_fractions(h: i64, lo: Fraction, hi: Fraction) -> Vec<Fraction> {
    let mut out = Vec::new();
    let mut f = hi;
    while f > lo {
        out.push(f);
        f = farey_predecessor(f, h).expect("positive Farey fraction");
    }
    out.reverse();
    out
}

/// The standard parameter grid: `h` in 3..=5, every h-Farey `a/b` in
/// `(1, 2]`, Delta among the canonical B_h sets of size 2 and 3 plus
/// `{0,2}` and `{0,1,5}`, `tau` in `tau^..=tau^+4` and `m` in
/// `m^..=m^+4b`.
pub fn sweep_grid() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for h in 3..=5 {
        let mut deltas: Vec<IntSet> = (2..=3).map(|n| canonical_bh_set(n, h as u64).expect("small")).collect();
        deltas.extend([IntSet::from([0, 2]), IntSet::from([0, 1, 5])]);
        deltas.dedup();
        deltas.sort();
        deltas.dedup();
        for frac in farey_fractions(h, Fraction::ONE, Fraction::from_int(2)) {
            for delta in &deltas {
                let hat = hat_params(h, frac, delta.clone()).expect("valid grid point");
                let b = frac.den();
                for tau in hat.tau..=hat.tau + 4 {
                    for m in hat.m..=hat.m + 4 * b {
                        out.push(FamilyParams { tau, m, ..hat.clone() });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    fn fr(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn fam(h: i64, f: (i64, i64), d: &[i64], tau: i64, m: i64) -> FamilyParams {
        FamilyParams::new(h, fr(f.0, f.1), d.iter().copied().collect(), tau, m).unwrap()
    }

    fn lit(s: &Semigroup) -> String {
        s.literal()
    }

    #[test]
    fn construct_examples() {
        assert_eq!(lit(&construct(&fam(3, (5, 3), &[0, 1], 0, 14)).unwrap()), "14,22,23;56");
        assert_eq!(lit(&construct(&fam(4, (5, 3), &[0, 1], 1, 19)).unwrap()), "19,30,31;106");
        assert_eq!(lit(&construct(&fam(5, (7, 4), &[0, 1, 6], 7, 105)).unwrap()), "105,176,181,182;806");
        assert_eq!(lit(&construct(&fam(4, (3, 2), &[0, 2], 1, 21)).unwrap()), "21,29,31;104");
        assert_eq!(lit(&construct(&fam(3, (5, 3), &[-2, 2, 7, 9], 1, 59)).unwrap()), "59,88,90,95,99;235");
    }

    #[test]
    fn construct_rejects_out_of_range() {
        assert!(construct(&fam(3, (5, 3), &[0, 30], 0, 14)).is_err());
        assert!(construct(&fam(3, (1, 1), &[0, 1], 0, 14)).is_err());
    }

    #[test]
    fn t_and_w_forms_agree() {
        for p in [fam(3, (5, 3), &[0, 1], 0, 14), fam(4, (5, 3), &[0, 1], 1, 19), fam(5, (7, 4), &[0, 1, 6], 7, 105)] {
            let g1 = p.gamma().smallest().unwrap();
            assert_eq!(p.w(), p.conductor() + p.m - p.h * g1);
            assert_eq!(p.t(), p.scaled().fract() + p.tau);
        }
    }

    #[test]
    fn hat_examples() {
        let p = hat_params(4, fr(5, 3), IntSet::from([0, 1])).unwrap();
        assert_eq!((p.tau, p.m), (1, 19));
        assert_eq!(lit(&construct(&p).unwrap()), "19,30,31;106");
        let p = hat_params(4, fr(3, 2), IntSet::from([0, 1, 5])).unwrap();
        assert_eq!((p.tau, p.m), (21, 75));
        assert_eq!(construct(&p).unwrap().numbers().e, 2);
        let p = hat_params(5, fr(7, 4), IntSet::from([0, 1, 6])).unwrap();
        let s = construct(&p).unwrap();
        assert_eq!(lit(&s), "145,246,251,252;1116");
        assert_eq!(s.numbers().e, 0);
        // t^ = (h - b)(h d1 + 1) / b and w^ = h d1 + 1
        for (h, f, d) in [(4, (5, 3), vec![0, 1]), (5, (7, 4), vec![0, 1, 6]), (4, (3, 2), vec![0, 1, 5])] {
            let p = hat_params(h, fr(f.0, f.1), d.into()).unwrap();
            let b = p.frac.den();
            assert_eq!(p.t(), fr((h - b) * (h * p.delta1() + 1), b));
            assert_eq!(p.w(), h * p.delta1() + 1);
        }
        assert!(hat_params(4, fr(3, 2), IntSet::from([0])).is_err());
    }

    #[test]
    fn criteria_examples() {
        assert!(criteria(&fam(4, (5, 3), &[0, 1], 1, 19)).unwrap().split);
        let v = criteria(&fam(4, (7, 4), &[0, 2], 3, 24)).unwrap();
        assert!(v.short && !v.split);
        assert!(!criteria(&fam(4, (3, 2), &[0, 2], 1, 21)).unwrap().short);
        assert!(matches!(criteria(&fam(4, (3, 2), &[0, 1], 200, 21)), Err(Error::FareyMismatch(_))));
    }

    #[test]
    fn closed_form_smallest() {
        let p = fam(3, (5, 3), &[0, 1], 0, 14);
        assert_eq!(closed_form_k(&p, 0), 13);
        let cf = closed_form_e(&p, 0).unwrap();
        assert_eq!(cf.e0, Fraction::from_int(-1));
        assert_eq!((cf.record.e, cf.record.w, cf.q, cf.rho), (-1, 35, 4, 0));
    }

    #[test]
    fn closed_form_matches_oracle_on_split_example() {
        let p = fam(4, (5, 3), &[0, 1], 1, 19);
        let s = construct(&p).unwrap();
        let cls = classify(&s, 4).unwrap();
        let cf = closed_form_e(&p, cls.long_elements).unwrap();
        assert_eq!(closed_form_k(&p, cls.long_elements), s.params().k);
        assert_eq!(cf.record.e, s.numbers().e);
        assert_eq!(cf.record.w, s.numbers().w);
        assert_eq!(cf.rho, s.params().rho);
    }

    #[test]
    fn e0_bras_amoros_case() {
        let iv = FareyInterval::ending_at(fr(3, 2), 4).unwrap();
        assert!(e0_forms(4, &iv, 3).iter().all(|&f| f == Fraction::from_int(-6)));
        assert!(e0_forms(4, &iv, 4).iter().all(|&f| f == Fraction::from_int(-19)));
    }

    #[test]
    fn e0_nonnegative_when_predecessor_is_integer() {
        // (h+1)/h has predecessor 1/1
        for h in 2..=7 {
            let iv = FareyInterval::ending_at(fr(h + 1, h), h).unwrap();
            assert_eq!(iv.lower, Fraction::ONE);
            for l in 1..=5 {
                let f = e0_forms(h, &iv, l);
                assert!(f.iter().all(|&x| x == f[0] && x >= Fraction::ZERO), "h={h} l={l} {f:?}");
            }
        }
    }

    #[test]
    fn shift_examples() {
        let p = fam(3, (5, 3), &[0, 1], 0, 14);
        let q = shift_numerator(&p);
        assert_eq!(q.frac, fr(8, 3));
        let (s, t) = (construct(&p).unwrap(), construct(&q).unwrap());
        assert_eq!(t.c(), s.c() + 3 * 14);
        assert_eq!(t.gamma(), s.gamma().translate(14));
        assert_eq!((s.numbers().e, t.numbers().e), (-1, -1));
        assert_eq!(classify(&s, 3).unwrap().collision_free, classify(&t, 3).unwrap().collision_free);

        let p = fam(3, (5, 3), &[0, 2], 0, 8);
        let s = construct(&p).unwrap();
        let t = construct(&shift_numerator(&p)).unwrap();
        assert_eq!((lit(&s), s.numbers().e), ("8,11,13;32".to_string(), 11));
        assert_eq!((lit(&t), t.numbers().e), ("8,19,21;56".to_string(), 17));
    }

    #[test]
    fn inflate_examples() {
        let hat = hat_params(4, fr(3, 2), IntSet::from([0, 1])).unwrap();
        assert_eq!(inflate_m(&hat, 0).unwrap(), hat);
        let e_hat = construct(&hat).unwrap().numbers().e;
        for n in 1..6 {
            let p = inflate_m(&hat, n).unwrap();
            assert_eq!((p.t(), p.w()), (hat.t(), hat.w()));
            let s = construct(&p).unwrap();
            assert_eq!(s.params().rho, 5);
            assert_eq!(s.numbers().e, e_hat);
            assert!(e_hat < 0);
        }
        assert!(inflate_m(&fam(4, (5, 3), &[0, 1], 1, 19), 1).is_err());
    }

    #[test]
    fn explicit_families() {
        let ex = family_ex1(4, fr(3, 2), 0).unwrap();
        assert_eq!(ex.e_bound, Fraction::from_int(-1));
        let s = construct(&ex.params).unwrap();
        assert!(classify(&s, 4).unwrap().split);
        let e = s.numbers().e;
        assert!(Fraction::from_int(e) <= ex.e_bound);
        assert_eq!(construct(&family_ex1(4, fr(3, 2), 5).unwrap().params).unwrap().numbers().e, e);
        let ex6 = family_ex1(6, fr(3, 2), 0).unwrap();
        assert_eq!(ex6.e_bound, Fraction::from_int(-3));
        assert!(Fraction::from_int(construct(&ex6.params).unwrap().numbers().e) <= ex6.e_bound);
        assert!(family_ex1(4, fr(5, 3), 0).is_err());
        assert!(family_ex1(4, fr(2, 1), 0).is_err());

        let ex = family_ex2(4, 3).unwrap();
        assert_eq!(ex.predicted_e, -1);
        assert_eq!(lit(&construct(&ex.params).unwrap()), "19,30,31;106");
        assert_eq!(construct(&family_ex2(5, 4).unwrap().params).unwrap().numbers().e, -3);
        let ex = family_ex2(2, 2).unwrap();
        assert_eq!(ex.predicted_e, 0);
        assert_eq!(construct(&ex.params).unwrap().numbers().e, 0);
        assert!(family_ex2(3, 2).is_err());
        assert!(family_ex2(4, 5).is_err());
    }
}
