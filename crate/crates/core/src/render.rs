//! Critical-interval diagrams: one cell per position of `[c, c + m)`.
//!
//! A critical element is labeled by the `i` with `x = lambda mod m` for some
//! `lambda` in `i Gamma`; right generators are drawn as gaps and the
//! position of `qm` is marked.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::sumset::hfold_sumset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    /// right generator
    Gap,
    /// reached from exactly one sum in `i Gamma`
    Class(usize),
    /// reached from several sums
    Collision,
    /// critical element not reached by any `i Gamma`, `i <= h`
    Other,
}

/// Cells for offsets `0..m` of the critical interval.
pub fn critical_cells(s: &Semigroup, h: i64) -> Vec<Cell> {
    let (m, c) = (s.m(), s.c());
    let gamma = s.gamma();
    let mut hits: Vec<Vec<usize>> = vec![Vec::new(); m as usize];
    for i in 0..=h as usize {
        for lambda in hfold_sumset(&gamma, i).iter() {
            hits[(lambda - c).rem_euclid(m) as usize].push(i);
        }
    }
    (0..m)
        .map(|j| {
            let x = c + j;
            let hit = &hits[j as usize];
            if s.is_primitive(x) {
                Cell::Gap
            } else if hit.len() == 1 {
                Cell::Class(hit[0])
            } else if hit.is_empty() {
                Cell::Other
            } else {
                Cell::Collision
            }
        })
        .collect()
}

fn label(cell: Cell) -> char {
    match cell {
        Cell::Gap => '.',
        Cell::Class(i) => char::from_digit(i as u32, 36).unwrap_or('#'),
        Cell::Collision => '*',
        Cell::Other => '+',
    }
}

const PALETTE: [&str; 9] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"];

pub fn render_critical_interval(s: &Semigroup, h: i64, format: Format) -> Result<String> {
    if !s.is_canonical() {
        return Err(Error::NotCanonical(s.to_string()));
    }
    let cells = critical_cells(s, h);
    let rho = s.params().rho as usize;
    let mut out = String::new();
    match format {
        Format::Ascii => {
            let _ = writeln!(out, "{s}  h={h}  [{}, {})", s.c(), s.c() + s.m());
            out.extend(cells.iter().map(|&c| label(c)));
            out.push('\n');
            out.push_str(&" ".repeat(rho));
            out.push_str("^ qm\n");
        }
        Format::Svg => {
            let r = 8;
            let step = 2 * r + 4;
            let width = step * cells.len() as i64 + step;
            let _ = writeln!(
                out,
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{}" font-family="monospace" font-size="10">"#,
                4 * step
            );
            let _ = writeln!(out, r#"<text x="4" y="12">{s} h={h}</text>"#);
            for (j, &cell) in cells.iter().enumerate() {
                let cx = step + step * j as i64;
                let cy = 2 * step;
                if j == rho {
                    let _ = writeln!(out, r##"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#f0c000" stroke-width="3" class="rho"/>"##, r + 3);
                }
                let (fill, stroke) = match cell {
                    Cell::Gap => ("none", "#bbbbbb"),
                    Cell::Class(i) => (PALETTE[i % PALETTE.len()], "#000000"),
                    Cell::Collision => ("#000000", "#000000"),
                    Cell::Other => ("#ffffff", "#000000"),
                };
                let _ = writeln!(
                    out,
                    r#"<circle cx="{cx}" cy="{cy}" r="{r}" fill="{fill}" stroke="{stroke}" data-x="{}" data-cell="{}"/>"#,
                    s.c() + j as i64,
                    label(cell)
                );
            }
            out.push_str("</svg>\n");
        }
    }
    Ok(out)
}
