//! Exhaustive search for Eliahou semigroups up to a conductor bound.
//!
//! The work is split into tasks `(m, gamma1, conductor interval)`. Each
//! task walks the tree below `<m, gamma1>_{gamma1 + 1}` and only reports
//! conductors inside its interval, so the intervals partitioning
//! `(3m, c_max]` make every result belong to exactly one task.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::explorer::{explore, needed_bits, ExplorerState, Walk, WalkStats, DEFAULT_WORDS};
use crate::semigroup::Semigroup;
use crate::sumset::IntSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SearchTask {
    pub m: i64,
    pub gamma1: i64,
    pub c_min: i64,
    pub c_max: i64,
}

/// Where left generators stop being tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenBound {
    /// `c_max + m - 2 gamma1 + offset`, complete if the conjectured bound
    /// holds
    Conjectured { offset: i64 },
    /// `c_max + m - gamma1`, proven
    Safe,
}

impl GenBound {
    pub fn limit(&self, t: &SearchTask) -> i64 {
        let raw = match *self {
            GenBound::Conjectured { offset } => t.c_max + t.m - 2 * t.gamma1 + offset,
            GenBound::Safe => t.c_max + t.m - t.gamma1,
        };
        raw.min(t.c_max)
    }

    pub fn completeness(&self) -> Completeness {
        match self {
            GenBound::Safe => Completeness::Unconditional,
            GenBound::Conjectured { .. } => Completeness::Conditional,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Completeness {
    Conditional,
    Unconditional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub c_max: i64,
    pub c_min: i64,
    pub interval_len: i64,
    /// `None` uses the rayon default
    pub workers: Option<usize>,
    pub prune: bool,
    pub bound: GenBound,
    /// abort with [`Error::TimeLimit`] past this wall-clock budget
    pub time_limit: Option<Duration>,
}

impl SearchConfig {
    pub fn new(c_max: i64) -> Self {
        SearchConfig {
            c_max,
            c_min: 1,
            interval_len: 8,
            workers: None,
            prune: true,
            bound: GenBound::Conjectured { offset: 0 },
            time_limit: None,
        }
    }

    /// Tasks for every `m` in `[3, (c_max - 1) / 3]`, every `gamma1` in
    /// `(m, c_max)` not a multiple of `m`, and the intervals
    /// `(lo, lo + len]` covering `(max(3m, c_min - 1), c_max]`. Intervals
    /// ending at or below `gamma1` are skipped.
    pub fn tasks(&self) -> Result<Vec<SearchTask>> {
        if self.interval_len < 1 {
            return Err(Error::InvalidSearch(format!("interval length {} < 1", self.interval_len)));
        }
        let width = crate::bits::Bits::<DEFAULT_WORDS>::WIDTH;
        let mut out = Vec::new();
        for m in 3..=(self.c_max - 1) / 3 {
            let need = needed_bits(self.c_max, m);
            if need > width {
                return Err(Error::WidthOverflow { width, index: need - 1 });
            }
            let start = (3 * m).max(self.c_min - 1);
            for gamma1 in m + 1..self.c_max {
                if gamma1 % m == 0 {
                    continue;
                }
                let mut lo = start;
                while lo < self.c_max {
                    let hi = (lo + self.interval_len).min(self.c_max);
                    if hi > gamma1 {
                        out.push(SearchTask { m, gamma1, c_min: lo + 1, c_max: hi });
                    }
                    lo = hi;
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub tasks: usize,
    pub branches: u64,
    pub pruned: u64,
    /// emissions before deduplication
    pub emitted: u64,
    pub duplicates: u64,
    /// found only by the extension pass
    pub extended: usize,
}

#[derive(Clone, Debug)]
pub struct SearchOutput {
    pub semigroups: Vec<Semigroup>,
    pub stats: SearchStats,
    pub completeness: Completeness,
}

/// Runs one task and builds the emitted semigroups.
pub fn run_task(
    task: &SearchTask,
    prune: bool,
    bound: GenBound,
    deadline: Option<Instant>,
) -> Result<(Vec<Semigroup>, WalkStats)> {
    let root = ExplorerState::<DEFAULT_WORDS>::init_root_bounded(task.m, task.gamma1, task.c_max)?;
    let walk = Walk { c_min: task.c_min, c_max: task.c_max, gen_limit: bound.limit(task), prune, deadline };
    let mut stats = WalkStats::default();
    let mut found = Vec::new();
    let mut failure = None;
    let mut gens = vec![task.gamma1];
    explore(&root, &walk, &mut gens, &mut stats, &mut |st, gens| {
        let set: IntSet = gens.iter().copied().collect();
        match Semigroup::new(st.m(), &set, st.c()) {
            Ok(s) => found.push(s),
            Err(e) => failure = Some(e),
        }
    });
    if stats.aborted {
        return Err(Error::TimeLimit { branches: stats.branches });
    }
    match failure {
        Some(e) => Err(e),
        None => Ok((found, stats)),
    }
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutput> {
    let tasks = cfg.tasks()?;
    let deadline = cfg.time_limit.map(|d| Instant::now() + d);
    let run = || -> Result<SearchOutput> {
        let branches = AtomicU64::new(0);
        let pruned = AtomicU64::new(0);
        let emitted = AtomicU64::new(0);
        let per_task: Vec<Vec<Semigroup>> = tasks
            .par_iter()
            .map(|t| {
                let (found, st) = run_task(t, cfg.prune, cfg.bound, deadline).inspect_err(|e| {
                    if let Error::TimeLimit { branches: b } = e {
                        branches.fetch_add(*b, Ordering::Relaxed);
                    }
                })?;
                branches.fetch_add(st.branches, Ordering::Relaxed);
                pruned.fetch_add(st.pruned, Ordering::Relaxed);
                emitted.fetch_add(st.emitted, Ordering::Relaxed);
                Ok(found)
            })
            .collect::<Result<_>>()
            .map_err(|e| match e {
                Error::TimeLimit { .. } => Error::TimeLimit { branches: branches.load(Ordering::Relaxed) },
                e => e,
            })?;
        let mut set: BTreeSet<Semigroup> = BTreeSet::new();
        let mut duplicates = 0;
        for s in per_task.into_iter().flatten() {
            if !set.insert(s) {
                duplicates += 1;
            }
        }
        let base: Vec<Semigroup> = set.iter().cloned().collect();
        let offset = match cfg.bound {
            GenBound::Conjectured { offset } => offset.min(0),
            GenBound::Safe => 0,
        };
        let extra = postprocess_extend_from(&base, offset);
        let extended = extra.len();
        set.extend(extra);
        Ok(SearchOutput {
            semigroups: set.into_iter().filter(|s| s.c() >= cfg.c_min).collect(),
            stats: SearchStats {
                tasks: tasks.len(),
                branches: branches.into_inner(),
                pruned: pruned.into_inner(),
                emitted: emitted.into_inner(),
                duplicates,
                extended,
            },
            completeness: cfg.bound.completeness(),
        })
    };
    match cfg.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidSearch(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Adds left generators `>= c + m - 2 gamma1` to each semigroup found,
/// recursively, and returns the new canonically defined Eliahou semigroups.
pub fn postprocess_extend(found: &[Semigroup]) -> Vec<Semigroup> {
    postprocess_extend_from(found, 0)
}

fn postprocess_extend_from(found: &[Semigroup], offset: i64) -> Vec<Semigroup> {
    let known: BTreeSet<&Semigroup> = found.iter().collect();
    let mut seen: BTreeSet<Semigroup> = BTreeSet::new();
    let mut stack: Vec<Semigroup> = found.to_vec();
    while let Some(s) = stack.pop() {
        let Some(g1) = s.gamma().smallest() else { continue };
        for g in (s.c() + s.m() - 2 * g1 + offset).max(g1 + 1)..s.c() {
            if s.contains(g) {
                continue;
            }
            let Ok(t) = s.with_generator(g) else { continue };
            if t.is_canonical() && t.numbers().e < 0 && !known.contains(&t) && seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    seen.into_iter().collect()
}
