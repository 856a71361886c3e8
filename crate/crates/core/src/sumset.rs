//! Integer sets, h-fold sumsets and B_h sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of integers, kept strictly increasing. Negative elements are
/// allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSet(Vec<i64>);

impl IntSet {
    pub fn new() -> Self {
        IntSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn smallest(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// `{t - x : x in self}`.
    pub fn reflect(&self, t: i64) -> IntSet {
        IntSet(self.0.iter().rev().map(|&x| t - x).collect())
    }

    /// `{x + t : x in self}`.
    pub fn translate(&self, t: i64) -> IntSet {
        IntSet(self.0.iter().map(|&x| x + t).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.smallest().is_none_or(|x| x >= 0)
    }
}

impl FromIterator<i64> for IntSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let set: BTreeSet<i64> = iter.into_iter().collect();
        IntSet(set.into_iter().collect())
    }
}

impl From<Vec<i64>> for IntSet {
    fn from(v: Vec<i64>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[i64; N]> for IntSet {
    fn from(v: [i64; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Comma-separated integers, optionally wrapped in braces: `0,1,5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if s.is_empty() {
            return Ok(IntSet::new());
        }
        let v: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("invalid integer {t:?}"))))
            .collect::<Result<_>>()?;
        let set: IntSet = v.iter().copied().collect();
        if set.len() != v.len() {
            return Err(Error::Parse(format!("duplicate entries in {s:?}")));
        }
        Ok(set)
    }
}

/// Number of multisets of size `h` drawn from `n` symbols, `C(n + h - 1, h)`.
pub fn multichoose(n: u64, h: u64) -> Result<u64> {
    if h == 0 {
        return Ok(1);
    }
    if n == 0 {
        return Ok(0);
    }
    // product_{j=1..h} (n - 1 + j) / j, exact at every step
    let mut acc: u128 = 1;
    for j in 1..=h as u128 {
        acc = acc
            .checked_mul(n as u128 - 1 + j)
            .ok_or(Error::Overflow("multichoose"))?
            / j;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("multichoose"))
}

/// `multichoose` for small arguments where overflow is impossible in
/// practice.
pub(crate) fn mc(n: usize, h: usize) -> u64 {
    multichoose(n as u64, h as u64).expect("multichoose overflow")
}

/// `{d_1 + ... + d_h : d_i in d}`; `h = 0` gives `{0}`.
pub fn hfold_sumset(d: &IntSet, h: usize) -> IntSet {
    let mut acc: BTreeSet<i64> = BTreeSet::from([0]);
    for _ in 0..h {
        acc = acc.iter().flat_map(|&s| d.iter().map(move |x| s + x)).collect();
    }
    IntSet(acc.into_iter().collect())
}

/// True iff all sums of `h` elements of `d` are distinct up to permutation.
pub fn is_bh_set(d: &IntSet, h: usize) -> bool {
    match multichoose(d.len() as u64, h as u64) {
        Ok(expected) => hfold_sumset(d, h).len() as u64 == expected,
        Err(_) => false,
    }
}

/// The first `size` terms of `0, 1, h + 1, h^2 + h + 1, ...`.
pub fn canonical_bh_set(size: usize, h: u64) -> Result<IntSet> {
    if size == 0 || h == 0 {
        return Err(Error::InvalidFamily("canonical B_h set needs size >= 1 and h >= 1".into()));
    }
    let mut v = vec![0i64];
    let mut term: i64 = 0;
    let mut power: i64 = 1;
    for _ in 1..size {
        // term_j = 1 + h + ... + h^(j-1)
        term = term.checked_add(power).ok_or(Error::Overflow("canonical_bh_set"))?;
        power = power.checked_mul(h as i64).ok_or(Error::Overflow("canonical_bh_set"))?;
        v.push(term);
    }
    Ok(IntSet(v))
}

/// Calls `f(multiset, sum)` for every multiset of size `0..=max_size` over
/// `elems` (given as index counts) whose sum does not exceed `limit`.
/// Elements must be positive and sorted ascending.
pub(crate) fn for_each_multiset<F>(elems: &[i64], max_size: usize, limit: i64, mut f: F)
where
    F: FnMut(&[usize], usize, i64),
{
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&[usize], usize, i64)>(
        elems: &[i64],
        start: usize,
        counts: &mut Vec<usize>,
        size: usize,
        max_size: usize,
        sum: i64,
        limit: i64,
        f: &mut F,
    ) {
        f(counts, size, sum);
        if size == max_size {
            return;
        }
        for i in start..elems.len() {
            let s = sum + elems[i];
            if s > limit {
                break;
            }
            counts[i] += 1;
            rec(elems, i, counts, size + 1, max_size, s, limit, f);
            counts[i] -= 1;
        }
    }
    let mut counts = vec![0usize; elems.len()];
    rec(elems, 0, &mut counts, 0, max_size, 0, limit, &mut f);
}
