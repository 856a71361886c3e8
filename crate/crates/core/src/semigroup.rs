//! Explicit numerical semigroups `<m, Gamma>_c` and their parameters.
//!
//! Everything here is computed from a membership table, with no closed
//! forms, so it serves as the reference the rest of the crate is checked
//! against.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::sumset::{for_each_multiset, IntSet};

/// The semigroup generated by `m`, `gens` and every integer `>= c`.
///
/// The membership table covers `[0, c + 2m)`.
#[derive(Clone)]
pub struct Semigroup {
    m: i64,
    c: i64,
    left_gens: IntSet,
    dropped: Vec<i64>,
    member: Vec<bool>,
    canonical: bool,
}

impl Semigroup {
    /// Builds `<m, gens>_c`. Generators that turn out not to be primitive are
    /// dropped and recorded; such a semigroup is not canonically defined.
    pub fn new(m: i64, gens: &IntSet, c: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSemigroup(format!("multiplicity {m} < 2")));
        }
        if c < m {
            return Err(Error::InvalidSemigroup(format!("conductor {c} below multiplicity {m}")));
        }
        if let Some(g) = gens.iter().find(|&g| g <= m || g >= c) {
            return Err(Error::InvalidSemigroup(format!("generator {g} outside ({m}, {c})")));
        }
        let len = (c + 2 * m) as usize;
        let mut member = vec![false; len];
        member[0] = true;
        let all_gens: Vec<usize> = std::iter::once(m).chain(gens.iter()).map(|g| g as usize).collect();
        for x in 1..len {
            member[x] = x as i64 >= c || all_gens.iter().any(|&g| g <= x && member[x - g]);
        }
        let mut s = Semigroup {
            m,
            c,
            left_gens: IntSet::new(),
            dropped: Vec::new(),
            member,
            canonical: false,
        };
        s.left_gens = (1..c).filter(|&x| s.is_primitive(x)).collect();
        s.dropped = gens.iter().filter(|&g| !s.left_gens.contains(g)).collect();
        s.canonical = s.dropped.is_empty() && !s.contains(c - 1);
        Ok(s)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// Primitive elements below `c`, including `m` when `m < c`.
    pub fn left_gens(&self) -> &IntSet {
        &self.left_gens
    }

    /// Left generators other than `m`.
    pub fn gamma(&self) -> IntSet {
        self.left_gens.iter().filter(|&g| g != self.m).collect()
    }

    /// Input generators that were not primitive.
    pub fn dropped_gens(&self) -> &[i64] {
        &self.dropped
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        self.member.get(x as usize).copied().unwrap_or(true)
    }

    /// Nonzero member that is not a sum of two nonzero members.
    pub fn is_primitive(&self, x: i64) -> bool {
        if x <= 0 || !self.contains(x) {
            return false;
        }
        (self.m..=x / 2).all(|y| !(self.contains(y) && self.contains(x - y)))
    }

    /// Elements of `S` below `c`, including 0.
    pub fn left_elements(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.c).filter(|&x| self.member[x as usize])
    }

    /// Primitive elements of the critical interval `[c, c + m)`.
    pub fn right_gens(&self) -> Vec<i64> {
        (self.c..self.c + self.m).filter(|&x| self.is_primitive(x)).collect()
    }

    /// Number of multisets over `{m} u Gamma` summing to `x`, with at most
    /// `h_max` elements taken from `Gamma` and any number of copies of `m`.
    pub fn representation_count(&self, x: i64, h_max: Option<usize>) -> usize {
        let gamma: Vec<i64> = self.gamma().iter().collect();
        let mut n = 0;
        for_each_multiset(&gamma, h_max.unwrap_or(usize::MAX), x, |_, _, sum| {
            if (x - sum) % self.m == 0 {
                n += 1;
            }
        });
        n
    }

    pub fn params(&self) -> Params {
        let (m, c) = (self.m, self.c);
        let k = self.left_elements().count() as i64;
        let l = self.left_gens.len() as i64;
        let r = self.right_gens().len() as i64;
        let q = (c + m - 1).div_euclid(m);
        Params { m, c, k, l, r, e: l + r, g: c - k, q, rho: q * m - c, s: m - r }
    }

    pub fn numbers(&self) -> EliahouRecord {
        self.params().numbers()
    }

    /// `m,g1,...;c`.
    pub fn literal(&self) -> String {
        let mut s = self.m.to_string();
        for g in self.gamma().iter() {
            s.push_str(&format!(",{g}"));
        }
        format!("{s};{}", self.c)
    }

    /// The same semigroup with an extra left generator `g`.
    pub fn with_generator(&self, g: i64) -> Result<Semigroup> {
        let gens: IntSet = self.gamma().iter().chain(std::iter::once(g)).collect();
        Semigroup::new(self.m, &gens, self.c)
    }

    fn key(&self) -> (i64, i64, &IntSet) {
        (self.c, self.m, &self.left_gens)
    }
}

/// Builds `<m, gens>_c`.
pub fn semigroup_from(m: i64, gens: &IntSet, c: i64) -> Result<Semigroup> {
    Semigroup::new(m, gens, c)
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Semigroup {}

impl Hash for Semigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl Ord for Semigroup {
    /// By conductor, then multiplicity, then generators.
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Semigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.m)?;
        for g in self.gamma().iter() {
            write!(f, ",{g}")?;
        }
        write!(f, ">_{}", self.c)
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Semigroup {
    type Err = Error;

    /// Accepts `14,22,23;56`, `<14,22,23>_56` and `⟨14,22,23⟩_56`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid semigroup literal {s:?}"));
        let t = s.trim();
        let (gens, c) = if let Some((g, c)) = t.split_once(';') {
            (g, c)
        } else if let Some((g, c)) = t.rsplit_once('_') {
            (g, c)
        } else {
            return Err(bad());
        };
        let gens = gens.trim().trim_start_matches(['<', '⟨']).trim_end_matches(['>', '⟩']);
        let c: i64 = c.trim().parse().map_err(|_| bad())?;
        let v: Vec<i64> = gens
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let (&m, rest) = v.split_first().ok_or_else(bad)?;
        Semigroup::new(m, &rest.iter().copied().collect(), c)
    }
}

impl Serialize for Semigroup {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.literal())
    }
}

impl<'de> Deserialize<'de> for Semigroup {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Derived parameters, counted with respect to the given `c` (which need not
/// be the true conductor when the semigroup is not canonically defined).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub m: i64,
    pub c: i64,
    /// rank: elements below `c`, 0 included
    pub k: i64,
    /// left generators
    pub l: i64,
    /// right generators
    pub r: i64,
    /// embedding dimension
    pub e: i64,
    /// genus
    pub g: i64,
    /// depth, `ceil(c / m)`
    pub q: i64,
    pub rho: i64,
    /// critical elements
    pub s: i64,
}

impl Params {
    /// Wilf and Eliahou numbers. Both expressions for `E` are evaluated and
    /// must agree.
    pub fn numbers(&self) -> EliahouRecord {
        let e_s = self.k * self.l - self.q * self.s + self.rho;
        let e_r = self.k * self.l + self.q * self.r - self.c;
        assert_eq!(e_s, e_r, "Eliahou number forms disagree for {self:?}");
        let w = self.k * self.e - self.c;
        // W - E = (k - q) r and k >= q
        assert!(w >= e_r, "W < E for {self:?}");
        EliahouRecord { e: e_r, w, e0: None }
    }
}

/// Eliahou number `E = k l - q s + rho`, Wilf number `W = k e - c`, and the
/// closed-form part `E0` when a family is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliahouRecord {
    #[serde(rename = "E")]
    pub e: i64,
    #[serde(rename = "W")]
    pub w: i64,
    #[serde(rename = "E0", skip_serializing_if = "Option::is_none", default)]
    pub e0: Option<Fraction>,
}
