//! The semigroup tree walked one conductor at a time.
//!
//! A node is `<m, Gamma>_c`, not necessarily canonically defined, and moves
//! to `c + 1` by declaring `c` a gap, a non-generator element or a new left
//! generator. The state keeps `L - 1` and `D - c` as bitsets, where `L` is
//! the set of elements below `c` and `D = L + L`.
//!
//! Bits at index `j >= ceil((c_max + m) / 2)` can never influence a node
//! with conductor at most `c_max`: such a bit of `D` stands for `x + y` with
//! `x, y < c` and `x + y >= c_max + m`. The state therefore drops them,
//! which is what lets a 256-bit state reach conductors near 384.

use std::time::Instant;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Number of 64-bit words in the default state.
pub const DEFAULT_WORDS: usize = 4;

/// Bits a walk bounded by `c_max` needs for multiplicity `m`.
pub fn needed_bits(c_max: i64, m: i64) -> usize {
    ((c_max + m + 1) / 2).max(m) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExplorerState<const N: usize = DEFAULT_WORDS> {
    m: i64,
    gamma1: i64,
    c: i64,
    k: i64,
    l: i64,
    r: i64,
    q: i64,
    /// `q m`, the smallest multiple of `m` at or above `c`
    qm: i64,
    lbits: Bits<N>,
    dbits: Bits<N>,
    /// bits at or past this index are dropped
    keep: usize,
    /// some bit was dropped, so decoding no longer gives all of `L` and `D`
    truncated: bool,
}

impl<const N: usize> ExplorerState<N> {
    /// `<m, gamma1>_{gamma1 + 1}` with every bit kept (up to the width).
    pub fn init_root(m: i64, gamma1: i64) -> Result<Self> {
        Self::root_with(m, gamma1, Bits::<N>::WIDTH)
    }

    /// The root of a walk that never passes `c_max`, keeping only the bits
    /// such a walk can read. Fails when they do not fit in the width.
    pub fn init_root_bounded(m: i64, gamma1: i64, c_max: i64) -> Result<Self> {
        let need = needed_bits(c_max, m);
        if need > Bits::<N>::WIDTH {
            return Err(Error::WidthOverflow { width: Bits::<N>::WIDTH, index: need - 1 });
        }
        Self::root_with(m, gamma1, need)
    }

    fn root_with(m: i64, gamma1: i64, keep: usize) -> Result<Self> {
        if m < 3 || gamma1 <= m || gamma1 % m == 0 {
            return Err(Error::InvalidSearch(format!("invalid root m = {m}, gamma1 = {gamma1}")));
        }
        if (m as usize) > keep {
            return Err(Error::WidthOverflow { width: keep, index: m as usize - 1 });
        }
        let c = gamma1 + 1;
        // gamma1 + m > c, so L holds only multiples of m and gamma1
        let mut left: Vec<i64> = (0..=gamma1 / m).map(|j| j * m).collect();
        left.push(gamma1);
        let mut st = ExplorerState {
            m,
            gamma1,
            c,
            k: left.len() as i64,
            l: 2,
            r: 0,
            q: (c + m - 1) / m,
            qm: (c + m - 1) / m * m,
            lbits: Bits::new(),
            dbits: Bits::new(),
            keep,
            truncated: false,
        };
        for &x in &left[1..] {
            st.put_l((x - 1) as usize);
        }
        for (i, &x) in left.iter().enumerate() {
            for &y in &left[i..] {
                if x + y >= c {
                    st.put_d((x + y - c) as usize);
                }
            }
        }
        st.r = m - st.dbits.count_ones_below(m as usize) as i64;
        Ok(st)
    }

    #[inline]
    fn put_l(&mut self, i: usize) {
        if i < self.keep {
            self.lbits.set(i);
        } else {
            self.truncated = true;
        }
    }

    #[inline]
    fn put_d(&mut self, i: usize) {
        if i < self.keep {
            self.dbits.set(i);
        } else {
            self.truncated = true;
        }
    }

    #[inline]
    fn bump_c(&mut self) {
        self.c += 1;
        if self.c > self.qm {
            self.qm += self.m;
            self.q += 1;
        }
    }

    /// `c` is a double element, so it must belong to the child.
    #[inline]
    pub fn c_is_double(&self) -> bool {
        self.dbits.get(0)
    }

    /// `c` becomes a gap. Requires `c` not double.
    #[inline]
    pub fn add_gap(&mut self) {
        assert!(!self.c_is_double(), "add_gap at double element {}", self.c);
        self.dbits.shr1();
        self.bump_c();
        if self.dbits.get(self.m as usize - 1) {
            self.r -= 1;
        }
    }

    /// `c` becomes an element that is not a generator. Requires `c` double.
    #[inline]
    pub fn add_non_gen(&mut self) {
        assert!(self.c_is_double(), "add_non_gen at non-double {}", self.c);
        self.put_l(self.c as usize - 1);
        self.dbits.clear(0);
        self.dbits.shr1();
        self.dbits.or_assign(&self.lbits);
        self.bump_c();
        self.k += 1;
    }

    /// `c` becomes a left generator. Requires `c` not double.
    #[inline]
    pub fn add_left_gen(&mut self) {
        assert!(!self.c_is_double(), "add_left_gen at double element {}", self.c);
        self.put_l(self.c as usize - 1);
        self.dbits.shr1();
        self.dbits.or_assign(&self.lbits);
        self.bump_c();
        self.k += 1;
        self.l += 1;
        self.r -= 1;
    }

    /// `k l + q r < c`, that is `E < 0`.
    #[inline]
    pub fn eliahou_test(&self) -> bool {
        self.k * self.l + self.q * self.r < self.c
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn gamma1(&self) -> i64 {
        self.gamma1
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Eliahou number `k l + q r - c`.
    pub fn eliahou(&self) -> i64 {
        self.k * self.l + self.q * self.r - self.c
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// `L` as decoded from the bitset, `0` included.
    pub fn left_elements(&self) -> Vec<i64> {
        std::iter::once(0).chain(self.lbits.ones().map(|j| j as i64 + 1)).collect()
    }

    /// `D ∩ [c, ∞)` as decoded from the bitset.
    pub fn doubles(&self) -> Vec<i64> {
        self.dbits.ones().map(|j| self.c + j as i64).collect()
    }

    pub fn lbits(&self) -> &Bits<N> {
        &self.lbits
    }

    pub fn dbits(&self) -> &Bits<N> {
        &self.dbits
    }
}

/// What the walk looks for and how hard it prunes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Walk {
    pub c_min: i64,
    pub c_max: i64,
    /// left generators are only tried below this value
    pub gen_limit: i64,
    /// skip the depth-first stage when `(k_min + 1)(l + 1) >= c_max`
    pub prune: bool,
    /// give up once this instant has passed
    pub deadline: Option<Instant>,
}

/// Counters gathered by [`explore`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WalkStats {
    /// calls of `explore`, one per branch
    pub branches: u64,
    /// branches cut by the rank bound
    pub pruned: u64,
    pub emitted: u64,
    /// the deadline passed and the walk stopped early
    pub aborted: bool,
}

/// Emits every Eliahou descendant of `st` with conductor in
/// `[c_min, c_max]` whose extra left generators lie below `gen_limit`.
/// `gens` holds the left generators of `st` other than `m` and is restored
/// on return. The sink receives the final state and the generators.
pub fn explore<const N: usize, F>(st: &ExplorerState<N>, walk: &Walk, gens: &mut Vec<i64>, stats: &mut WalkStats, sink: &mut F)
where
    F: FnMut(&ExplorerState<N>, &[i64]),
{
    stats.branches += 1;
    if stats.branches & 4095 == 0 && walk.deadline.is_some_and(|d| Instant::now() >= d) {
        stats.aborted = true;
    }
    if stats.aborted {
        return;
    }
    let mut s = *st;
    // if the walk starts past c_min, the rank at entry is a lower bound
    let mut k_min = (st.c >= walk.c_min).then_some(st.k);
    while s.c < walk.c_max {
        if s.c == walk.c_min {
            k_min = Some(s.k);
        }
        if s.c_is_double() {
            s.add_non_gen();
        } else {
            s.add_gap();
            if s.c >= walk.c_min && s.eliahou_test() {
                stats.emitted += 1;
                sink(&s, gens);
            }
        }
    }
    let k_min = k_min.unwrap_or(s.k);

    if walk.prune && (k_min + 1) * (st.l + 1) >= walk.c_max {
        stats.pruned += 1;
        return;
    }
    let mut s = *st;
    while s.c < walk.gen_limit {
        if s.c_is_double() {
            s.add_non_gen();
        } else {
            let mut child = s;
            child.add_left_gen();
            gens.push(s.c);
            explore(&child, walk, gens, stats, sink);
            gens.pop();
            if stats.aborted {
                return;
            }
            s.add_gap();
        }
    }
}
