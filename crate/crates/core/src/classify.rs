//! Brute-force classification of a semigroup against a sumset order `h`:
//! regularity, collisions, short/long elements and the split property.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{farey_cover, FareyInterval};
use crate::fraction::Fraction;
use crate::semigroup::Semigroup;
use crate::sumset::{for_each_multiset, hfold_sumset};

/// Largest order tried by [`detect_h`].
pub const MAX_DETECTED_H: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub h: i64,
    pub farey: FareyInterval,
    /// `h Gamma` lies in `[c, c + m)`.
    pub h_regular: bool,
    /// Not h-regular, but `h Gamma` lies in `[c, c + 2m)` with at most
    /// `ceil(l / 2)` elements at or past `c + m`.
    pub nearly_h_regular: bool,
    /// Elements of `h Gamma` at or past `c + m`.
    pub overflow: usize,
    pub collision_free: bool,
    /// Long pairs `(i, lambda)` with `lambda` in the set `i Gamma`.
    pub long_elements: usize,
    /// Long sums counted per multiset, so merged sums count repeatedly.
    pub long_multisets: usize,
    pub short: bool,
    pub split: bool,
    pub collisions: usize,
    pub primitive_collisions: usize,
}

fn rem_frac(x: Fraction, m: i64) -> Fraction {
    x - Fraction::from_int(m * x.div_int(m).floor())
}

/// Half-open arcs `[a, a + p)` and `[b, b + q)` on the circle of length `m`.
/// A zero length stands for the single point.
fn arcs_meet(a: Fraction, p: Fraction, b: Fraction, q: Fraction, m: i64) -> bool {
    let full = Fraction::from_int(m);
    if p >= full || q >= full {
        return true;
    }
    rem_frac(b - a, m) < p || rem_frac(a - b, m) < q
}

/// The intervals `U_0 = {0}` and `U_i = [i gamma_1, i (c + m) / h)` are
/// pairwise disjoint modulo `m`.
pub(crate) fn is_split(m: i64, c: i64, gamma1: Option<i64>, h: i64) -> bool {
    let Some(g1) = gamma1 else { return true };
    let mut arcs = vec![(Fraction::ZERO, Fraction::ZERO)];
    for i in 1..=h {
        let lo = Fraction::from_int(i * g1);
        let hi = Fraction::new(i * (c + m), h).expect("h >= 1");
        if hi > lo {
            arcs.push((lo, hi - lo));
        }
    }
    for (x, &(a, p)) in arcs.iter().enumerate() {
        for &(b, q) in &arcs[x + 1..] {
            if arcs_meet(a, p, b, q, m) {
                return false;
            }
        }
    }
    true
}

/// Classifies a canonically defined semigroup with respect to `h`.
pub fn classify(s: &Semigroup, h: i64) -> Result<ClassificationRecord> {
    if !s.is_canonical() {
        return Err(Error::NotCanonical(s.to_string()));
    }
    if h < 2 {
        return Err(Error::InvalidSemigroup(format!("classification order h = {h} < 2")));
    }
    let (m, c) = (s.m(), s.c());
    let gamma = s.gamma();
    let l = s.left_gens().len();
    let hu = h as usize;

    let top = hfold_sumset(&gamma, hu);
    let below = top.iter().filter(|&x| x < c).count();
    let overflow = top.iter().filter(|&x| x >= c + m).count();
    let far = top.iter().filter(|&x| x >= c + 2 * m).count();
    let h_regular = below == 0 && overflow == 0;
    let nearly_h_regular = !h_regular && below == 0 && far == 0 && overflow <= l.div_ceil(2);

    let farey = farey_cover(Fraction::new(c + m, h * m)?, h)?;
    let lower = farey.lower;
    let short_bound = |i: i64| lower.mul_int(h - i).floor();
    let left_count = |lambda: i64| Fraction::new(c - lambda, m).expect("m >= 2").ceil();

    let mut long_elements = 0;
    for i in 0..h {
        let bound = short_bound(i);
        long_elements += hfold_sumset(&gamma, i as usize)
            .iter()
            .filter(|&lambda| left_count(lambda) != bound)
            .count();
    }

    let elems: Vec<i64> = gamma.iter().collect();
    let mut long_multisets = 0;
    // residue -> multisets of size <= h
    let mut by_residue: HashMap<i64, Vec<Vec<usize>>> = HashMap::new();
    // residue -> sums inside [0, c + m), each one a representation of the
    // critical element of that residue
    let mut reps: HashMap<i64, usize> = HashMap::new();
    for_each_multiset(&elems, usize::MAX, c + m - 1, |_, _, sum| {
        *reps.entry(sum.rem_euclid(m)).or_default() += 1;
    });
    for_each_multiset(&elems, hu, i64::MAX, |counts, size, sum| {
        if (size as i64) < h && left_count(sum) != short_bound(size as i64) {
            long_multisets += 1;
        }
        by_residue.entry(sum.rem_euclid(m)).or_default().push(counts.to_vec());
    });
    let collision_free = reps.values().all(|&n| n <= 1);

    let mut collisions = 0;
    let mut primitive_collisions = 0;
    for group in by_residue.values() {
        for (x, a) in group.iter().enumerate() {
            for b in &group[x + 1..] {
                collisions += 1;
                if a.iter().zip(b).all(|(&p, &q)| p == 0 || q == 0) {
                    primitive_collisions += 1;
                }
            }
        }
    }

    Ok(ClassificationRecord {
        h,
        farey,
        h_regular,
        nearly_h_regular,
        overflow,
        collision_free,
        long_elements,
        long_multisets,
        short: long_elements == 0,
        split: is_split(m, c, gamma.smallest(), h),
        collisions,
        primitive_collisions,
    })
}

/// Smallest `h` in `[2, 8]` for which the semigroup is h-regular or nearly
/// h-regular.
pub fn detect_h(s: &Semigroup) -> Option<i64> {
    if !s.is_canonical() {
        return None;
    }
    let gamma = s.gamma();
    let (m, c) = (s.m(), s.c());
    let l = s.left_gens().len();
    (2..=MAX_DETECTED_H).find(|&h| {
        let top = hfold_sumset(&gamma, h as usize);
        let overflow = top.iter().filter(|&x| x >= c + m).count();
        top.iter().all(|x| x >= c && x < c + 2 * m) && overflow <= l.div_ceil(2)
    })
}
