//! Result rows for search output and the classification table.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, detect_h, ClassificationRecord};
use crate::error::{Error, Result};
use crate::family::{construct, e0_forms, FamilyParams};
use crate::farey::farey_cover;
use crate::fraction::Fraction;
use crate::semigroup::Semigroup;
use crate::sumset::IntSet;

/// `(h, a/b, Delta, tau, m)` recovered from a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attribution {
    pub h: i64,
    pub frac: Fraction,
    pub delta: IntSet,
    pub tau: i64,
    pub m: i64,
}

impl Attribution {
    pub fn params(&self) -> Result<FamilyParams> {
        FamilyParams::new(self.h, self.frac, self.delta.clone(), self.tau, self.m)
    }
}

/// Solves `c = floor(a h m / b) - m - tau`, `Gamma = floor((c + m - 1)/h) - Delta`
/// for the given `h`, with `a/b` the upper end of the h-Farey interval of
/// `(c + m) / (h m)`. Only returned when it constructs `s` back.
pub fn attribute(s: &Semigroup, h: i64) -> Option<Attribution> {
    let (m, c) = (s.m(), s.c());
    let frac = farey_cover(Fraction::new(c + m, h * m).ok()?, h).ok()?.upper;
    let delta = s.gamma().reflect((c + m - 1).div_euclid(h));
    if delta.is_empty() {
        return None;
    }
    let tau = frac.mul_int(h * m).floor() - m - c;
    let a = Attribution { h, frac, delta, tau, m };
    let rebuilt = construct(&a.params().ok()?).ok()?;
    (rebuilt == *s).then_some(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRow {
    pub literal: String,
    pub m: i64,
    /// left generators other than `m`
    pub gens: IntSet,
    pub c: i64,
    pub k: i64,
    pub l: i64,
    pub r: i64,
    pub e: i64,
    pub g: i64,
    pub q: i64,
    pub rho: i64,
    pub s: i64,
    #[serde(rename = "E")]
    pub eliahou: i64,
    #[serde(rename = "W")]
    pub wilf: i64,
    /// closed-form part, present for attributed collision-free rows
    #[serde(rename = "E0", default, skip_serializing_if = "Option::is_none")]
    pub e0: Option<Fraction>,
    pub canonical: bool,
    #[serde(default)]
    pub h: Option<i64>,
    #[serde(default)]
    pub classification: Option<ClassificationRecord>,
    #[serde(default)]
    pub family: Option<Attribution>,
}

impl ResultRow {
    pub fn new(s: &Semigroup) -> Self {
        let p = s.params();
        let n = s.numbers();
        let h = detect_h(s);
        let classification = h.and_then(|h| classify(s, h).ok());
        let family = h.and_then(|h| attribute(s, h));
        let e0 = match (&family, &classification) {
            (Some(a), Some(cls)) if cls.collision_free => Some(e0_forms(a.h, &cls.farey, s.left_gens().len())[0]),
            _ => None,
        };
        ResultRow {
            literal: s.literal(),
            m: p.m,
            gens: s.gamma(),
            c: p.c,
            k: p.k,
            l: p.l,
            r: p.r,
            e: p.e,
            g: p.g,
            q: p.q,
            rho: p.rho,
            s: p.s,
            eliahou: n.e,
            wilf: n.w,
            e0,
            canonical: s.is_canonical(),
            h,
            classification,
            family,
        }
    }

    pub fn semigroup(&self) -> Result<Semigroup> {
        Semigroup::new(self.m, &self.gens, self.c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rows serialize")
    }
}

/// Column of the classification table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    SplitCollisionFree,
    ShortCollisionFree,
    SplitCollisions,
    ShortCollisions,
    NotShort,
    NotRegular,
}

impl Class {
    pub const ALL: [Class; 6] = [
        Class::SplitCollisionFree,
        Class::ShortCollisionFree,
        Class::SplitCollisions,
        Class::ShortCollisions,
        Class::NotShort,
        Class::NotRegular,
    ];

    /// "short" meaning short but not split.
    pub fn of(cls: &ClassificationRecord) -> Class {
        match (cls.h_regular, cls.split, cls.short, cls.collision_free) {
            (false, ..) => Class::NotRegular,
            (true, true, _, true) => Class::SplitCollisionFree,
            (true, true, _, false) => Class::SplitCollisions,
            (true, false, true, true) => Class::ShortCollisionFree,
            (true, false, true, false) => Class::ShortCollisions,
            (true, false, false, _) => Class::NotShort,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Class::SplitCollisionFree => "split, collision-free",
            Class::ShortCollisionFree => "short, collision-free",
            Class::SplitCollisions => "split, collisions",
            Class::ShortCollisions => "short, collisions",
            Class::NotShort => "not short",
            Class::NotRegular => "not h-regular",
        }
    }
}

/// Counts per `(h, a/b)`, class and number of left generators; rows with
/// `a/b >= 2` and rows with no detected `h` are only counted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub cells: BTreeMap<(i64, Fraction), BTreeMap<(Class, i64), usize>>,
    pub at_least_two: usize,
    pub unclassified: usize,
    pub total: usize,
}

impl Table {
    pub fn from_rows<'a>(rows: impl IntoIterator<Item = &'a ResultRow>) -> Self {
        let mut t = Table::default();
        for row in rows {
            t.total += 1;
            let (Some(h), Some(cls)) = (row.h, &row.classification) else {
                t.unclassified += 1;
                continue;
            };
            if cls.farey.upper >= Fraction::from_int(2) {
                t.at_least_two += 1;
                continue;
            }
            *t.cells.entry((h, cls.farey.upper)).or_default().entry((Class::of(cls), row.l)).or_default() += 1;
        }
        t
    }

    pub fn cell(&self, h: i64, frac: Fraction, class: Class) -> usize {
        self.cells
            .get(&(h, frac))
            .map_or(0, |m| m.iter().filter(|((c, _), _)| *c == class).map(|(_, n)| n).sum())
    }

    pub fn counted(&self) -> usize {
        self.cells.values().flat_map(|m| m.values()).sum::<usize>() + self.at_least_two + self.unclassified
    }

    /// One line per class, one column per `(h, a/b)`; a cell lists
    /// `count/l<l>` for each number of left generators present.
    pub fn render(&self) -> String {
        let cols: Vec<&(i64, Fraction)> = self.cells.keys().collect();
        let mut out = String::new();
        let _ = write!(out, "{:<24}", "h");
        for (h, _) in &cols {
            let _ = write!(out, "{h:>14}");
        }
        out.push('\n');
        let _ = write!(out, "{:<24}", "a/b");
        for (_, f) in &cols {
            let _ = write!(out, "{:>14}", f.to_string());
        }
        out.push('\n');
        for class in Class::ALL {
            let _ = write!(out, "{:<24}", class.label());
            for key in &cols {
                let by_l: Vec<String> = self.cells[key]
                    .iter()
                    .filter(|((c, _), _)| *c == class)
                    .map(|((_, l), n)| format!("{n}/l{l}"))
                    .collect();
                let _ = write!(out, "{:>14}", by_l.join(" "));
            }
            out.push('\n');
        }
        let _ = writeln!(out, "a/b >= 2: {}", self.at_least_two);
        let _ = writeln!(out, "no h detected: {}", self.unclassified);
        let _ = writeln!(out, "total: {}", self.total);
        out
    }
}

/// Parses JSON lines, skipping blank lines.
pub fn read_rows(text: &str) -> Result<Vec<ResultRow>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1))))
        .collect()
}
