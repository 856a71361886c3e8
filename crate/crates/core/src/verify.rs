//! Randomized and exhaustive self-checks, shared by the test suites and the
//! `verify` command. The seed only drives the random choices here.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::explorer::ExplorerState;
use crate::family::{evaluate, sweep_grid};
use crate::farey::{farey_cover, farey_predecessor, FareyInterval};
use crate::fraction::Fraction;
use crate::search::{run_search, SearchConfig};
use crate::semigroup::Semigroup;
use crate::sumset::IntSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from(name: &'static str, r: Result<String, String>) -> Check {
        match r {
            Ok(detail) => Check { name, passed: true, detail },
            Err(detail) => Check { name, passed: false, detail },
        }
    }
}

/// `L` and `D ∩ [c, ∞)` of `<m, gens>_c` by direct computation.
fn direct(m: i64, gens: &[i64], c: i64) -> Result<(Semigroup, Vec<i64>, Vec<i64>), String> {
    let s = Semigroup::new(m, &gens.iter().copied().collect::<IntSet>(), c).map_err(|e| e.to_string())?;
    let left: Vec<i64> = s.left_elements().collect();
    let mut doubles: Vec<i64> =
        left.iter().flat_map(|&x| left.iter().map(move |&y| x + y)).filter(|&z| z >= c).collect();
    doubles.sort_unstable();
    doubles.dedup();
    Ok((s, left, doubles))
}

/// Random walks in the tree, each state compared with a semigroup rebuilt
/// from its generators. Returns the number of states compared.
pub fn bisimulation(seed: u64, walks: usize, max_steps: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut compared = 0;
    for w in 0..walks {
        let m = rng.random_range(3..=24);
        let gamma1 = loop {
            let g = rng.random_range(m + 1..4 * m);
            if g % m != 0 {
                break g;
            }
        };
        let mut st = ExplorerState::<4>::init_root(m, gamma1).map_err(|e| e.to_string())?;
        let mut gens = vec![gamma1];
        let steps = rng.random_range(0..=max_steps);
        for step in 0..=steps {
            let (s, left, doubles) = direct(m, &gens, st.c())?;
            let p = s.params();
            let got = (st.c(), st.k(), st.l(), st.r(), st.left_elements(), st.doubles());
            let want = (p.c, p.k, p.l, p.r, left, doubles);
            if got != want {
                return Err(format!("walk {w} step {step} from <{m},{gamma1}>: {got:?} != {want:?}"));
            }
            if st.eliahou() != s.numbers().e || st.eliahou_test() != (s.numbers().e < 0) {
                return Err(format!("walk {w} step {step}: Eliahou number mismatch at {s}"));
            }
            compared += 1;
            if step == steps {
                break;
            }
            let c = st.c();
            if st.c_is_double() {
                st.add_non_gen();
                if !s.contains(c) {
                    return Err(format!("walk {w}: forced element {c} outside {s}"));
                }
            } else if rng.random_bool(0.2) {
                st.add_left_gen();
                gens.push(c);
            } else {
                st.add_gap();
                let after = Semigroup::new(m, &gens.iter().copied().collect(), st.c()).map_err(|e| e.to_string())?;
                if after.contains(c) {
                    return Err(format!("walk {w}: gap {c} is an element of {after}"));
                }
            }
        }
    }
    Ok(compared)
}

/// A random semigroup with `c <= c_max`.
fn random_semigroup(rng: &mut ChaCha8Rng, c_max: i64) -> Semigroup {
    let m = rng.random_range(2..=c_max / 3);
    let c = rng.random_range(m..=c_max);
    let n = if c > m + 1 { rng.random_range(0..=4) } else { 0 };
    let gens: IntSet = (0..n).map(|_| rng.random_range(m + 1..c)).collect();
    Semigroup::new(m, &gens, c).expect("generators in range")
}

/// Both Eliahou forms agree and `W >= E`, on random semigroups.
pub fn eliahou_forms(seed: u64, samples: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let s = random_semigroup(&mut rng, 200);
        let p = s.params();
        let e2 = p.k * p.l - p.q * p.s + p.rho;
        let e3 = p.k * p.l + p.q * p.r - p.c;
        let w = p.k * p.e - p.c;
        if e2 != e3 || w < e3 {
            return Err(format!("{s}: E2 = {e2}, E3 = {e3}, W = {w}"));
        }
    }
    Ok(format!("{samples} random semigroups"))
}

/// Sums of members inside the table are members.
pub fn closure(seed: u64, samples: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let s = random_semigroup(&mut rng, 150);
        let top = s.c() + 2 * s.m();
        for _ in 0..50 {
            let x = rng.random_range(0..top);
            let y = rng.random_range(0..top - x);
            if s.contains(x) && s.contains(y) && !s.contains(x + y) {
                return Err(format!("{s}: {x} + {y} missing"));
            }
        }
    }
    Ok(format!("{samples} random semigroups"))
}

/// Consecutivity and the mediant property for every h-Farey fraction below
/// 4 with `h <= 12`, and the cover of random rationals.
pub fn farey(seed: u64) -> Result<String, String> {
    let mut n = 0;
    for h in 1..=12 {
        let mut f = Fraction::from_int(4);
        while f > Fraction::ZERO {
            let p = farey_predecessor(f, h).map_err(|e| e.to_string())?;
            let (a, b, ap, bp) = (f.num(), f.den(), p.num(), p.den());
            if a * bp - ap * b != 1 || bp > h || b + bp <= h {
                return Err(format!("h = {h}: {p} -> {f}"));
            }
            f = p;
            n += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..500 {
        let h = rng.random_range(1..=12);
        let x = Fraction::new(rng.random_range(1..400), rng.random_range(1..100)).expect("positive");
        let iv: FareyInterval = farey_cover(x, h).map_err(|e| e.to_string())?;
        if !(iv.lower < x && x <= iv.upper) {
            return Err(format!("cover of {x} with h = {h} is {iv:?}"));
        }
        for b in 1..=h {
            let a = iv.lower.mul_int(b).floor() + 1;
            if Fraction::new(a, b).expect("b > 0") < iv.upper {
                return Err(format!("{a}/{b} inside {iv:?}"));
            }
        }
    }
    Ok(format!("{n} predecessors, 500 covers"))
}

/// Closed forms and criteria against brute force over the standard grid.
pub fn family_sweep() -> Result<String, String> {
    let mut verified = 0;
    for p in sweep_grid() {
        let Ok(c) = evaluate(&p) else { continue };
        if !c.verified {
            continue;
        }
        verified += 1;
        let cf = c.closed_form.ok_or_else(|| format!("{p}: no closed form"))?;
        let cls = c.classification.as_ref().expect("verified members are classified");
        let v = c.verdict.ok_or_else(|| format!("{p}: no verdict"))?;
        if cf.record.e != c.oracle.e || cf.k != c.oracle_k {
            return Err(format!("{p}: closed form E = {}, k = {}; oracle E = {}, k = {}", cf.record.e, cf.k, c.oracle.e, c.oracle_k));
        }
        if v.short != cls.short || v.split != cls.split {
            return Err(format!("{p}: criteria {v:?} vs classification short = {}, split = {}", cls.short, cls.split));
        }
    }
    Ok(format!("{verified} verified members"))
}

/// Search results up to `c_max` are canonical Eliahou semigroups with
/// `W >= 0` and `E + k - q >= 0`.
pub fn search_results(c_max: i64) -> Result<String, String> {
    let out = run_search(&SearchConfig::new(c_max)).map_err(|e| e.to_string())?;
    for s in &out.semigroups {
        let p = s.params();
        let n = s.numbers();
        if !s.is_canonical() || n.e >= 0 || n.w < 0 || n.e + p.k - p.q < 0 {
            return Err(format!("{s}: E = {}, W = {}, k = {}, q = {}", n.e, n.w, p.k, p.q));
        }
    }
    Ok(format!("{} semigroups up to {c_max}", out.semigroups.len()))
}

/// Runs every check.
pub fn run_suite(seed: u64) -> Vec<Check> {
    vec![
        Check::from("bisimulation", bisimulation(seed, 1000, 60).map(|n| format!("{n} states"))),
        Check::from("eliahou-forms", eliahou_forms(seed, 2000)),
        Check::from("closure", closure(seed, 300)),
        Check::from("farey", farey(seed)),
        Check::from("family-sweep", family_sweep()),
        Check::from("search-72", search_results(72)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_bisimulation() {
        assert!(bisimulation(7, 50, 40).unwrap() > 50);
    }

    #[test]
    fn seeded_checks_pass() {
        assert!(eliahou_forms(1, 200).is_ok());
        assert!(closure(2, 50).is_ok());
        assert!(farey(3).is_ok());
    }
}
