//! Link, Legendrian and combinatorial quantities of a grid.
//!
//! Crossing signs use the right-handed convention: with the vertical strand
//! on top, a crossing is positive when the over strand, turned a quarter turn
//! counterclockwise, points along the under strand. In grid terms the sign is
//! `-(horizontal direction) * (vertical direction)`.
//!
//! The Legendrian front of a grid is obtained by turning it 45 degrees
//! counterclockwise, which keeps vertical strands in front. The corners that
//! become cusps are the upper-left and lower-right corners of the rectilinear
//! curve, so
//!
//! ```text
//! tb  = writhe - (cusps / 2)
//! rot = (descending cusps - ascending cusps) / 2
//! sl  = tb - rot
//! ```

use serde::{Deserialize, Serialize};

use crate::grid::{GridDiagram, Marking};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
}

/// Position of a marking inside the bounding box of its two incident
/// segments: `NW` means the segments leave to the right and downwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CornerKind {
    NW,
    NE,
    SW,
    SE,
}

impl CornerKind {
    pub fn is_cusp(self) -> bool {
        matches!(self, CornerKind::NW | CornerKind::SE)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CuspCount {
    pub ascending: usize,
    pub descending: usize,
}

impl CuspCount {
    pub fn total(&self) -> usize {
        self.ascending + self.descending
    }
}

pub fn grid_number(g: &GridDiagram) -> usize {
    g.grid_number()
}

/// Cycle decomposition of the row map `i -> os^-1(xs[i])`: the rows visited
/// by each component, in traversal order, components ordered by lowest row.
pub fn component_rows(g: &GridDiagram) -> Vec<Vec<usize>> {
    let o_rows = g.o_rows();
    let n = g.grid_number();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut r = start;
        while !seen[r] {
            seen[r] = true;
            cycle.push(r);
            r = o_rows[g.xs()[r]];
        }
        out.push(cycle);
    }
    out
}

pub fn number_of_components(g: &GridDiagram) -> usize {
    let o_rows = g.o_rows();
    let n = g.grid_number();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut r = start;
        while !seen[r] {
            seen[r] = true;
            r = o_rows[g.xs()[r]];
        }
    }
    count
}

fn signum(a: usize, b: usize) -> i8 {
    if b > a {
        1
    } else {
        -1
    }
}

/// All crossings, ordered by row then column.
pub fn crossings(g: &GridDiagram) -> Vec<Crossing> {
    let x_rows = g.x_rows();
    let o_rows = g.o_rows();
    let mut out = Vec::new();
    for (row, (&x, &o)) in g.xs().iter().zip(g.os()).enumerate() {
        let h = signum(o, x);
        for col in x.min(o) + 1..x.max(o) {
            let (a, b) = (x_rows[col], o_rows[col]);
            if a.min(b) < row && row < a.max(b) {
                let v = signum(a, b);
                out.push(Crossing {
                    row,
                    col,
                    sign: -h * v,
                });
            }
        }
    }
    out
}

pub fn crossing_number(g: &GridDiagram) -> usize {
    crossings(g).len()
}

pub fn writhe(g: &GridDiagram) -> i64 {
    crossings(g).iter().map(|c| c.sign as i64).sum()
}

/// Sum of the lengths of all horizontal and vertical segments.
pub fn grid_length(g: &GridDiagram) -> usize {
    g.segments().iter().map(|s| s.len()).sum()
}

/// Every marking with its corner kind, row by row (X before O).
pub fn corners(g: &GridDiagram) -> Vec<(usize, usize, Marking, CornerKind)> {
    let x_rows = g.x_rows();
    let o_rows = g.o_rows();
    let mut out = Vec::with_capacity(2 * g.grid_number());
    for row in 0..g.grid_number() {
        for marking in [Marking::X, Marking::O] {
            let (col, partner_col, partner_row) = match marking {
                Marking::X => (g.xs()[row], g.os()[row], o_rows[g.xs()[row]]),
                Marking::O => (g.os()[row], g.xs()[row], x_rows[g.os()[row]]),
            };
            let right = partner_col > col;
            let up = partner_row > row;
            let kind = match (right, up) {
                (true, true) => CornerKind::SW,
                (true, false) => CornerKind::NW,
                (false, true) => CornerKind::SE,
                (false, false) => CornerKind::NE,
            };
            out.push((row, col, marking, kind));
        }
    }
    out
}

/// Cusps of the Legendrian front, split by the vertical direction in which
/// the oriented curve passes through them.
pub fn cusps(g: &GridDiagram) -> CuspCount {
    let mut count = CuspCount::default();
    for (_, _, marking, kind) in corners(g) {
        match (kind, marking) {
            (CornerKind::NW, Marking::X) | (CornerKind::SE, Marking::O) => count.descending += 1,
            (CornerKind::NW, Marking::O) | (CornerKind::SE, Marking::X) => count.ascending += 1,
            _ => {}
        }
    }
    count
}

pub fn ascending_cusps(g: &GridDiagram) -> usize {
    cusps(g).ascending
}

pub fn descending_cusps(g: &GridDiagram) -> usize {
    cusps(g).descending
}

pub fn thurston_bennequin(g: &GridDiagram) -> i64 {
    writhe(g) - (cusps(g).total() / 2) as i64
}

pub fn rotation_number(g: &GridDiagram) -> i64 {
    let c = cusps(g);
    (c.descending as i64 - c.ascending as i64) / 2
}

pub fn self_linking(g: &GridDiagram) -> i64 {
    thurston_bennequin(g) - rotation_number(g)
}

/// All quantities at once, as emitted by the `invariants` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub grid_number: usize,
    pub components: usize,
    pub crossing_number: usize,
    pub writhe: i64,
    pub grid_length: usize,
    pub thurston_bennequin: i64,
    pub rotation_number: i64,
    pub self_linking: i64,
    pub ascending_cusps: usize,
    pub descending_cusps: usize,
}

impl InvariantReport {
    pub fn of(g: &GridDiagram) -> Self {
        let cs = crossings(g);
        let w: i64 = cs.iter().map(|c| c.sign as i64).sum();
        let cu = cusps(g);
        let tb = w - (cu.total() / 2) as i64;
        let rot = (cu.descending as i64 - cu.ascending as i64) / 2;
        InvariantReport {
            grid_number: g.grid_number(),
            components: number_of_components(g),
            crossing_number: cs.len(),
            writhe: w,
            grid_length: grid_length(g),
            thurston_bennequin: tb,
            rotation_number: rot,
            self_linking: tb - rot,
            ascending_cusps: cu.ascending,
            descending_cusps: cu.descending,
        }
    }
}
