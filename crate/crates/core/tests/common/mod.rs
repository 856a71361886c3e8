#![allow(dead_code)]

use std::collections::BTreeSet;

use rayon::prelude::*;

/// Every canonically defined Eliahou semigroup with conductor at most
/// `c_max`, found by brute force.
///
/// For each multiplicity `m` and exact conductor `c` in `(3m, c_max]`, left
/// generators are chosen in increasing order, each one a non-element of the
/// semigroup generated so far. Membership comes from a coin-change table over
/// `[0, c + m)`. Two proven cuts keep this finite in practice:
///
/// * adding generators raises both `k` and `l` by at least one, so a node
///   with `(k + 1)(l + 1) >= c` has no Eliahou descendant;
/// * a generator `g >= c + m - gamma1` raises `E` (it adds at least one to
///   `k` and `l` and removes at most one right generator, and `k >= q`), so
///   below a node with `E >= 0` such generators are never tried.
pub fn naive_eliahou(c_max: i64) -> BTreeSet<(i64, i64, Vec<i64>)> {
    let mut jobs = Vec::new();
    for m in 3..=c_max {
        for c in 3 * m + 1..=c_max {
            jobs.push((m, c));
        }
    }
    jobs.par_iter()
        .flat_map_iter(|&(m, c)| {
            let mut out = Vec::new();
            let mut member = vec![false; (c + m) as usize];
            for x in (0..(c + m) as usize).step_by(m as usize) {
                member[x] = true;
            }
            let mut gens = Vec::new();
            walk(m, c, &member, &mut gens, &mut out);
            out
        })
        .collect()
}

fn numbers(m: i64, c: i64, member: &[bool], l: i64) -> (i64, i64) {
    let k = member[..c as usize].iter().filter(|&&b| b).count() as i64;
    let r = m - member[c as usize..].iter().filter(|&&b| b).count() as i64;
    let q = (c + m - 1) / m;
    (k, k * l + q * r - c)
}

fn walk(m: i64, c: i64, member: &[bool], gens: &mut Vec<i64>, out: &mut Vec<(i64, i64, Vec<i64>)>) {
    let l = gens.len() as i64 + 1;
    let (k, e) = numbers(m, c, member, l);
    if e < 0 && !member[c as usize - 1] {
        out.push((c, m, gens.clone()));
    }
    if (k + 1) * (l + 1) >= c {
        return;
    }
    let start = gens.last().map_or(m + 1, |&g| g + 1);
    let stop = match gens.first() {
        Some(&g1) if e >= 0 => (c + m - g1).min(c),
        _ => c,
    };
    for g in start..stop {
        if member[g as usize] {
            continue;
        }
        let mut next = member.to_vec();
        for x in g as usize..next.len() {
            if next[x - g as usize] {
                next[x] = true;
            }
        }
        gens.push(g);
        walk(m, c, &next, gens, out);
        gens.pop();
    }
}
