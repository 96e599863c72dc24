//! Cycle diagrams.
//!
//! The graph of π is the set of points `(i, π(i))`. From every point a
//! vertical wire runs to the line `y = x` at `(i, i)` and a horizontal wire
//! runs to it at `(π(i), π(i))`. Each diagonal cell is the end of exactly
//! one vertical and one horizontal wire, so the wires close up into loops;
//! following a loop from the point in column `i` along its horizontal wire
//! leads to the vertical wire of column `π(i)`. Loops are extracted here by
//! matching wire ends on the diagonal, not from the cycle decomposition.
//!
//! Rendering puts row 1 at the bottom, so the diagonal runs from bottom
//! left to top right.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::Permutation;

/// Cell `(column, row)`, both 1-based.
pub type Cell = (u32, u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// A wire from a point to the diagonal. Zero length for fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wire {
    pub from: Cell,
    pub to: Cell,
    pub orientation: Orientation,
}

impl Wire {
    /// The diagonal coordinate where the wire ends.
    fn diagonal(&self) -> u32 {
        self.to.0
    }
}

/// Position of a point relative to `y = x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
    On,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDiagram {
    n: u32,
    /// Indexed by column - 1.
    points: Vec<Cell>,
    wires: Vec<Wire>,
    /// Columns of each loop in visiting order, each starting at its
    /// smallest column; loops sorted by that column.
    loops: Vec<Vec<u32>>,
}

pub fn build_diagram(p: &Permutation) -> CycleDiagram {
    let n = p.len() as u32;
    let points: Vec<Cell> = (1..=n).map(|i| (i, p.get(i as usize))).collect();
    let mut wires = Vec::with_capacity(2 * n as usize);
    for &(c, r) in &points {
        wires.push(Wire {
            from: (c, r),
            to: (c, c),
            orientation: Orientation::Vertical,
        });
        wires.push(Wire {
            from: (c, r),
            to: (r, r),
            orientation: Orientation::Horizontal,
        });
    }

    // For each diagonal cell, the column of the point whose vertical wire
    // ends there, and likewise for horizontal wires.
    let mut vertical_at = vec![0u32; n as usize + 1];
    let mut horizontal_at = vec![0u32; n as usize + 1];
    for w in &wires {
        let slot = match w.orientation {
            Orientation::Vertical => &mut vertical_at[w.diagonal() as usize],
            Orientation::Horizontal => &mut horizontal_at[w.diagonal() as usize],
        };
        debug_assert_eq!(
            *slot, 0,
            "two wires of one orientation meet the diagonal at one cell"
        );
        *slot = w.from.0;
    }

    let mut visited = vec![false; n as usize + 1];
    let mut loops = Vec::new();
    for start in 1..=n {
        if visited[start as usize] {
            continue;
        }
        let mut lp = Vec::new();
        let mut col = start;
        while !visited[col as usize] {
            visited[col as usize] = true;
            lp.push(col);
            // leave along the horizontal wire, arrive on the vertical wire
            // that shares its diagonal end
            let horizontal = &wires[2 * (col as usize - 1) + 1];
            col = vertical_at[horizontal.diagonal() as usize];
        }
        loops.push(lp);
    }

    CycleDiagram {
        n,
        points,
        wires,
        loops,
    }
}

impl CycleDiagram {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn points(&self) -> &[Cell] {
        &self.points
    }

    pub fn wires(&self) -> &[Wire] {
        &self.wires
    }

    pub fn loops(&self) -> &[Vec<u32>] {
        &self.loops
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn is_single_loop(&self) -> bool {
        self.loops.len() == 1
    }

    pub fn point(&self, column: u32) -> Cell {
        self.points[column as usize - 1]
    }

    pub fn side(&self, column: u32) -> Side {
        let (c, r) = self.point(column);
        match r.cmp(&c) {
            std::cmp::Ordering::Greater => Side::Above,
            std::cmp::Ordering::Less => Side::Below,
            std::cmp::Ordering::Equal => Side::On,
        }
    }

    /// Columns of the points before and after `column` along its loop.
    pub fn wire_neighbors(&self, column: u32) -> (u32, u32) {
        let lp = self
            .loops
            .iter()
            .find(|l| l.contains(&column))
            .expect("every column lies on a loop");
        let pos = lp.iter().position(|&c| c == column).unwrap();
        let len = lp.len();
        (lp[(pos + len - 1) % len], lp[(pos + 1) % len])
    }

    /// Every point's two wire neighbours lie on the other side of `y = x`.
    pub fn alternates_sides(&self) -> bool {
        (1..=self.n).all(|c| {
            let here = self.side(c);
            let (prev, next) = self.wire_neighbors(c);
            let opposite = |s: Side| {
                matches!(
                    (here, s),
                    (Side::Above, Side::Below) | (Side::Below, Side::Above)
                )
            };
            opposite(self.side(prev)) && opposite(self.side(next))
        })
    }

    fn inverse_row(&self) -> Vec<u32> {
        let mut col_of_row = vec![0u32; self.n as usize + 1];
        for &(c, r) in &self.points {
            col_of_row[r as usize] = c;
        }
        col_of_row
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Ascii => self.render_ascii(),
            RenderFormat::Svg => self.render_svg(),
        }
    }

    /// Text grid, top row first. `×` marks points, `·` the cells on
    /// `y = x` where wires turn, `│`/`─` wires and `┼` crossings.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        let col_of_row = self.inverse_row();
        let between = |x: u32, a: u32, b: u32| a.min(b) < x && x < a.max(b);
        let mut out = format!(
            "# cycle diagram of {}: n={}, loops={} (row 1 at bottom; × point, · y=x)\n",
            self.permutation(),
            n,
            self.loop_count()
        );
        for r in (1..=n).rev() {
            let hc = col_of_row[r as usize];
            let mut line = String::new();
            for c in 1..=n {
                if c > 1 {
                    // gap between columns c-1 and c
                    let spans = hc.min(r) < c && c <= hc.max(r);
                    line.push(if spans { '─' } else { ' ' });
                }
                let (_, pr) = self.point(c);
                let glyph = if pr == r {
                    '×'
                } else if c == r {
                    '·'
                } else {
                    let vertical = between(r, pr, c);
                    let horizontal = between(c, hc, r);
                    match (vertical, horizontal) {
                        (true, true) => '┼',
                        (true, false) => '│',
                        (false, true) => '─',
                        (false, false) => ' ',
                    }
                };
                line.push(glyph);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Standalone SVG: 24-unit cells, dashed `y = x`, one polyline per loop
    /// and a cross at every point.
    pub fn render_svg(&self) -> String {
        const CELL: u32 = 24;
        const MARGIN: u32 = 12;
        const PALETTE: [&str; 6] = [
            "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
        ];
        let n = self.n;
        let size = 2 * MARGIN + CELL * n;
        let x = |c: u32| MARGIN + CELL * (c - 1) + CELL / 2;
        let y = |r: u32| MARGIN + CELL * (n - r) + CELL / 2;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        );
        let _ = writeln!(
            s,
            "<!-- cycle diagram of {}: n={}, loops={}; row 1 at bottom -->",
            self.permutation(),
            n,
            self.loop_count()
        );
        let _ = writeln!(
            s,
            r#"<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>"#
        );
        let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
        for k in 0..=n {
            let p = MARGIN + CELL * k;
            let (lo, hi) = (MARGIN, MARGIN + CELL * n);
            let _ = writeln!(s, r#"<line x1="{p}" y1="{lo}" x2="{p}" y2="{hi}"/>"#);
            let _ = writeln!(s, r#"<line x1="{lo}" y1="{p}" x2="{hi}" y2="{p}"/>"#);
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888" stroke-width="1" stroke-dasharray="4 4"/>"##,
            MARGIN,
            MARGIN + CELL * n,
            MARGIN + CELL * n,
            MARGIN
        );
        for (idx, lp) in self.loops.iter().enumerate() {
            if lp.len() == 1 {
                continue;
            }
            let mut pts = Vec::with_capacity(2 * lp.len() + 1);
            for &c in lp {
                let (_, r) = self.point(c);
                pts.push(format!("{},{}", x(c), y(r)));
                pts.push(format!("{},{}", x(r), y(r)));
            }
            pts.push(pts[0].clone());
            let _ = writeln!(
                s,
                r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
                pts.join(" "),
                PALETTE[idx % PALETTE.len()]
            );
        }
        let _ = writeln!(s, r##"<g stroke="#000000" stroke-width="2">"##);
        for &(c, r) in &self.points {
            let (cx, cy) = (x(c), y(r));
            let _ = writeln!(
                s,
                r#"<path d="M{} {} L{} {} M{} {} L{} {}"/>"#,
                cx - 5,
                cy - 5,
                cx + 5,
                cy + 5,
                cx - 5,
                cy + 5,
                cx + 5,
                cy - 5
            );
        }
        let _ = writeln!(s, "</g>");
        s.push_str("</svg>\n");
        s
    }

    fn permutation(&self) -> Permutation {
        Permutation::from_values_unchecked(self.points.iter().map(|&(_, r)| r).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            _ => Err(Error::Parse {
                what: "diagram format",
                input: s.to_string(),
                reason: "expected ascii or svg".into(),
            }),
        }
    }
}
