//! Local moves on grids.
//!
//! Row moves are written directly against the marking lists; column moves
//! are the same row moves conjugated by [`GridDiagram::transpose`].
//!
//! Stabilization convention: the marking at `(row, col)` becomes a 2x2
//! block occupying rows `row, row + 1` and columns `col, col + 1` of the new
//! grid. [`Corner`] names the square of that block left empty. The two
//! squares next to the empty one carry the original marking type, the
//! square diagonally opposite carries the other type. The other marking of
//! the old row moves into the empty square's row, the other marking of the
//! old column into the empty square's column.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Axis, GridDiagram, Marking};
use crate::invariants::number_of_components;

/// How the marking intervals of two adjacent lines sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Disjoint,
    Nested,
    Interleaved,
    SharedEndpoint,
}

/// Empty square of a stabilization block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NW, Corner::NE, Corner::SW, Corner::SE];

    /// (row offset, column offset) of the square inside the block.
    fn offsets(self) -> (usize, usize) {
        match self {
            Corner::NW => (1, 0),
            Corner::NE => (1, 1),
            Corner::SW => (0, 0),
            Corner::SE => (0, 1),
        }
    }

    fn from_offsets(dr: usize, dc: usize) -> Corner {
        match (dr, dc) {
            (1, 0) => Corner::NW,
            (1, 1) => Corner::NE,
            (0, 0) => Corner::SW,
            _ => Corner::SE,
        }
    }

    /// Image under [`GridDiagram::transpose`].
    pub fn transposed(self) -> Corner {
        match self {
            Corner::NW => Corner::SE,
            Corner::SE => Corner::NW,
            c => c,
        }
    }
}

/// One of the eight stabilization types: which marking is split and where
/// the empty square goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StabilizationKind {
    pub marking: Marking,
    pub corner: Corner,
}

impl StabilizationKind {
    pub const ALL: [StabilizationKind; 8] = {
        use Corner::*;
        use Marking::*;
        [
            StabilizationKind {
                marking: X,
                corner: NW,
            },
            StabilizationKind {
                marking: X,
                corner: NE,
            },
            StabilizationKind {
                marking: X,
                corner: SW,
            },
            StabilizationKind {
                marking: X,
                corner: SE,
            },
            StabilizationKind {
                marking: O,
                corner: NW,
            },
            StabilizationKind {
                marking: O,
                corner: NE,
            },
            StabilizationKind {
                marking: O,
                corner: SW,
            },
            StabilizationKind {
                marking: O,
                corner: SE,
            },
        ]
    };

    pub fn transposed(self) -> StabilizationKind {
        StabilizationKind {
            marking: self.marking,
            corner: self.corner.transposed(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BandClass {
    Coherent,
    Uncoherent,
}

/// A single move together with its site. Serializes as a JSON object tagged
/// by `"move"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    CyclicShift {
        axis: Axis,
        dir: i32,
    },
    Commutation {
        axis: Axis,
        index: usize,
    },
    CrossingChange {
        axis: Axis,
        index: usize,
    },
    BandMove {
        axis: Axis,
        index: usize,
        class: BandClass,
    },
    Stabilization {
        row: usize,
        marking: Marking,
        corner: Corner,
    },
    Destabilization {
        row: usize,
        col: usize,
    },
    GeneralizedDestabilization {
        axis: Axis,
        index: usize,
    },
}

impl Move {
    pub fn apply(&self, g: &GridDiagram) -> Result<GridDiagram> {
        match *self {
            Move::CyclicShift { axis, dir } => Ok(cyclic_shift(g, axis, dir)),
            Move::Commutation { axis, index } => commute(g, axis, index),
            Move::CrossingChange { axis, index } => crossing_change(g, axis, index),
            Move::BandMove {
                axis,
                index,
                class: BandClass::Coherent,
            } => coherent_bs(g, axis, index),
            Move::BandMove {
                axis,
                index,
                class: BandClass::Uncoherent,
            } => uncoherent_bs(g, axis, index),
            Move::Stabilization {
                row,
                marking,
                corner,
            } => stabilize(g, row, marking, corner),
            Move::Destabilization { row, col } => destabilize(g, row, col),
            Move::GeneralizedDestabilization { axis, index } => {
                generalized_destabilize(g, axis, index)
            }
        }
    }

    /// Does the move preserve the link type?
    pub fn is_cromwell(&self) -> bool {
        !matches!(self, Move::CrossingChange { .. } | Move::BandMove { .. })
    }
}

fn on_axis(
    g: &GridDiagram,
    axis: Axis,
    f: impl FnOnce(&GridDiagram) -> Result<GridDiagram>,
) -> Result<GridDiagram> {
    match axis {
        Axis::Rows => f(g),
        Axis::Columns => Ok(f(&g.transpose())?.transpose()),
    }
}

fn check_pair_index(g: &GridDiagram, i: usize) -> Result<()> {
    let n = g.grid_number();
    if i + 1 >= n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

fn classify_rows(g: &GridDiagram, i: usize) -> Relation {
    let (x0, o0, x1, o1) = (g.xs()[i], g.os()[i], g.xs()[i + 1], g.os()[i + 1]);
    if x0 == x1 || x0 == o1 || o0 == x1 || o0 == o1 {
        return Relation::SharedEndpoint;
    }
    let (a0, b0) = (x0.min(o0), x0.max(o0));
    let (a1, b1) = (x1.min(o1), x1.max(o1));
    if b0 < a1 || b1 < a0 {
        Relation::Disjoint
    } else if (a0 < a1 && b1 < b0) || (a1 < a0 && b0 < b1) {
        Relation::Nested
    } else {
        Relation::Interleaved
    }
}

/// Relation between lines `i` and `i + 1`.
pub fn classify_adjacent(g: &GridDiagram, axis: Axis, i: usize) -> Result<Relation> {
    check_pair_index(g, i)?;
    Ok(match axis {
        Axis::Rows => classify_rows(g, i),
        Axis::Columns => classify_rows(&g.transpose(), i),
    })
}

/// Rows: every row moves up by `dir` (wrapping). Columns: every column moves
/// right by `dir` (wrapping).
pub fn cyclic_shift(g: &GridDiagram, axis: Axis, dir: i32) -> GridDiagram {
    let n = g.grid_number();
    let d = dir.rem_euclid(n as i32) as usize;
    match axis {
        Axis::Rows => {
            let mut xs = g.xs().to_vec();
            let mut os = g.os().to_vec();
            xs.rotate_right(d);
            os.rotate_right(d);
            GridDiagram::from_parts(xs, os)
        }
        Axis::Columns => {
            let xs = g.xs().iter().map(|&c| (c + d) % n).collect();
            let os = g.os().iter().map(|&c| (c + d) % n).collect();
            GridDiagram::from_parts(xs, os)
        }
    }
}

fn swap_rows(g: &GridDiagram, i: usize) -> GridDiagram {
    let mut xs = g.xs().to_vec();
    let mut os = g.os().to_vec();
    xs.swap(i, i + 1);
    os.swap(i, i + 1);
    GridDiagram::from_parts(xs, os)
}

/// Exchanges lines `i` and `i + 1` when their intervals are disjoint or nested.
pub fn commute(g: &GridDiagram, axis: Axis, i: usize) -> Result<GridDiagram> {
    match classify_adjacent(g, axis, i)? {
        Relation::Disjoint | Relation::Nested => on_axis(g, axis, |h| Ok(swap_rows(h, i))),
        relation => Err(Error::IllegalCommutation {
            axis,
            index: i,
            relation,
        }),
    }
}

/// Exchanges two interleaved lines, which switches exactly one crossing.
pub fn crossing_change(g: &GridDiagram, axis: Axis, i: usize) -> Result<GridDiagram> {
    match classify_adjacent(g, axis, i)? {
        Relation::Interleaved => on_axis(g, axis, |h| Ok(swap_rows(h, i))),
        relation => Err(Error::NotInterleaved {
            axis,
            index: i,
            relation,
        }),
    }
}

fn band_site(g: &GridDiagram, axis: Axis, i: usize) -> Result<()> {
    if classify_adjacent(g, axis, i)? == Relation::SharedEndpoint {
        Err(Error::NotABandSite { axis, index: i })
    } else {
        Ok(())
    }
}

fn class_name(delta_zero: bool) -> &'static str {
    if delta_zero {
        "uncoherent"
    } else {
        "coherent"
    }
}

/// Band attachment that respects orientation: the X markings of lines `i`
/// and `i + 1` trade places. Always splits one component or merges two.
pub fn coherent_bs(g: &GridDiagram, axis: Axis, i: usize) -> Result<GridDiagram> {
    band_site(g, axis, i)?;
    let out = on_axis(g, axis, |h| {
        let mut xs = h.xs().to_vec();
        xs.swap(i, i + 1);
        Ok(GridDiagram::from_parts(xs, h.os().to_vec()))
    })?;
    let unchanged = number_of_components(&out) == number_of_components(g);
    if unchanged {
        return Err(Error::WrongBandClass {
            axis,
            index: i,
            wanted: "coherent",
            found: class_name(true),
        });
    }
    Ok(out)
}

/// Band attachment against the orientation: the X marking of line `i` trades
/// places with the O marking of line `i + 1`, after which every component is
/// re-oriented to agree with its first marking outside the two lines. Only
/// accepted when the number of components stays the same.
pub fn uncoherent_bs(g: &GridDiagram, axis: Axis, i: usize) -> Result<GridDiagram> {
    band_site(g, axis, i)?;
    let out = on_axis(g, axis, |h| Ok(cross_exchange(h, i)))?;
    let unchanged = number_of_components(&out) == number_of_components(g);
    if !unchanged {
        return Err(Error::WrongBandClass {
            axis,
            index: i,
            wanted: "uncoherent",
            found: class_name(false),
        });
    }
    Ok(out)
}

/// Moves X of row `i` to row `i + 1` and O of row `i + 1` to row `i`, then
/// relabels markings so each row and column again holds one X and one O.
fn cross_exchange(g: &GridDiagram, i: usize) -> GridDiagram {
    let n = g.grid_number();
    // unlabeled points per row; slot 0 keeps its old label where possible
    let mut rows: Vec<[usize; 2]> = (0..n).map(|r| [g.xs()[r], g.os()[r]]).collect();
    rows[i] = [g.os()[i + 1], g.os()[i]];
    rows[i + 1] = [g.xs()[i], g.xs()[i + 1]];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::with_capacity(2); n];
    for (r, pts) in rows.iter().enumerate() {
        for &c in pts {
            col_rows[c].push(r);
        }
    }
    // label[r][k]: true for X
    let mut label: Vec<[Option<bool>; 2]> = vec![[None, None]; n];
    let mut start_order: Vec<usize> = (0..n).filter(|&r| r != i && r != i + 1).collect();
    start_order.extend([i, i + 1]);
    for &r0 in &start_order {
        if label[r0][0].is_some() {
            continue;
        }
        // reference label: slot 0 of untouched rows is the old X
        let mut r = r0;
        let mut k = 0;
        let is_x = true;
        loop {
            label[r][k] = Some(is_x);
            // row partner has the other label
            let k2 = 1 - k;
            label[r][k2] = Some(!is_x);
            let c = rows[r][k2];
            let r2 = if col_rows[c][0] == r {
                col_rows[c][1]
            } else {
                col_rows[c][0]
            };
            let k3 = if rows[r2][0] == c { 0 } else { 1 };
            if label[r2][k3].is_some() {
                break;
            }
            r = r2;
            k = k3;
        }
    }
    let mut xs = vec![0; n];
    let mut os = vec![0; n];
    for r in 0..n {
        let (a, b) = (rows[r][0], rows[r][1]);
        if label[r][0] == Some(true) {
            xs[r] = a;
            os[r] = b;
        } else {
            xs[r] = b;
            os[r] = a;
        }
    }
    GridDiagram::from_parts(xs, os)
}

fn set_marking(xs: &mut [usize], os: &mut [usize], row: usize, m: Marking, col: usize) {
    match m {
        Marking::X => xs[row] = col,
        Marking::O => os[row] = col,
    }
}

/// Replaces the `marking` of `row` by a three-marking 2x2 block whose empty
/// square sits at `corner`. The grid number grows by one.
pub fn stabilize(
    g: &GridDiagram,
    row: usize,
    marking: Marking,
    corner: Corner,
) -> Result<GridDiagram> {
    let n = g.grid_number();
    if row >= n {
        return Err(Error::IndexOutOfRange { index: row, n });
    }
    let (c, partner_col) = match marking {
        Marking::X => (g.xs()[row], g.os()[row]),
        Marking::O => (g.os()[row], g.xs()[row]),
    };
    let (er, ec) = corner.offsets();
    let map_row = |i: usize| if i < row { i } else { i + 1 };
    let map_col = |j: usize| if j < c { j } else { j + 1 };
    let mut xs = vec![usize::MAX; n + 1];
    let mut os = vec![usize::MAX; n + 1];
    for i in (0..n).filter(|&i| i != row) {
        for (m, col) in [(Marking::X, g.xs()[i]), (Marking::O, g.os()[i])] {
            // the column partner lands in the empty square's column
            let nc = if col == c { c + ec } else { map_col(col) };
            set_marking(&mut xs, &mut os, map_row(i), m, nc);
        }
    }
    let t = marking;
    set_marking(&mut xs, &mut os, row + er, t.other(), map_col(partner_col));
    set_marking(&mut xs, &mut os, row + 1 - er, t.other(), c + 1 - ec);
    set_marking(&mut xs, &mut os, row + er, t, c + 1 - ec);
    set_marking(&mut xs, &mut os, row + 1 - er, t, c + ec);
    Ok(GridDiagram::from_parts(xs, os))
}

struct Block {
    empty: Corner,
    kind_marking: Marking,
}

fn inspect_block(g: &GridDiagram, row: usize, col: usize) -> Result<Block> {
    let n = g.grid_number();
    if row + 1 >= n || col + 1 >= n {
        return Err(Error::IndexOutOfRange {
            index: row.max(col),
            n,
        });
    }
    let mut empty = Vec::new();
    for dr in 0..2 {
        for dc in 0..2 {
            if g.marking_at(row + dr, col + dc).is_none() {
                empty.push((dr, dc));
            }
        }
    }
    if empty.len() != 1 {
        return Err(Error::NotDestabilizable(format!(
            "block at row {row}, column {col} holds {} markings",
            4 - empty.len()
        )));
    }
    let (er, ec) = empty[0];
    let kind_marking = g
        .marking_at(row + er, col + 1 - ec)
        .expect("block square next to the empty one is marked");
    Ok(Block {
        empty: Corner::from_offsets(er, ec),
        kind_marking,
    })
}

/// The stabilization type undone by destabilizing the block whose lower-left
/// square is `(row, col)`.
pub fn destabilization_kind(g: &GridDiagram, row: usize, col: usize) -> Result<StabilizationKind> {
    let b = inspect_block(g, row, col)?;
    Ok(StabilizationKind {
        marking: b.kind_marking,
        corner: b.empty,
    })
}

/// Inverse of [`stabilize`]: collapses the 2x2 block with lower-left square
/// `(row, col)`, which must hold exactly three markings.
pub fn destabilize(g: &GridDiagram, row: usize, col: usize) -> Result<GridDiagram> {
    let n = g.grid_number();
    if n <= 2 {
        return Err(Error::TooSmall(n));
    }
    let block = inspect_block(g, row, col)?;
    let (er, ec) = block.empty.offsets();
    let t = block.kind_marking;
    let empty_row = row + er;
    let empty_col = col + ec;
    let (ex, eo) = (g.xs()[empty_row], g.os()[empty_row]);
    let row_partner = if ex == col || ex == col + 1 { eo } else { ex };
    let map_row = |i: usize| if i <= row { i } else { i - 1 };
    let map_col = |j: usize| if j <= col { j } else { j - 1 };
    let mut xs = vec![usize::MAX; n - 1];
    let mut os = vec![usize::MAX; n - 1];
    for i in (0..n).filter(|&i| i != row && i != row + 1) {
        for (m, cc) in [(Marking::X, g.xs()[i]), (Marking::O, g.os()[i])] {
            let nc = if cc == empty_col { col } else { map_col(cc) };
            set_marking(&mut xs, &mut os, map_row(i), m, nc);
        }
    }
    set_marking(&mut xs, &mut os, row, t, col);
    set_marking(&mut xs, &mut os, row, t.other(), map_col(row_partner));
    Ok(GridDiagram::from_parts(xs, os))
}

/// Where a length-one row segment can be contracted: returns its left column
/// and the rows holding the other markings of columns `a` and `a + 1`.
fn unit_row_site(
    g: &GridDiagram,
    x_rows: &[usize],
    o_rows: &[usize],
    i: usize,
) -> Option<(usize, usize, usize)> {
    let (x, o) = (g.xs()[i], g.os()[i]);
    if x.abs_diff(o) != 1 {
        return None;
    }
    let a = x.min(o);
    let other = |c: usize| if x_rows[c] == i { o_rows[c] } else { x_rows[c] };
    Some((a, other(a), other(a + 1)))
}

fn generalized_rows(g: &GridDiagram, i: usize) -> Result<GridDiagram> {
    let n = g.grid_number();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if n <= 2 {
        return Err(Error::TooSmall(n));
    }
    let (x_rows, o_rows) = (g.x_rows(), g.o_rows());
    let (a, p, q) = unit_row_site(g, &x_rows, &o_rows, i).ok_or_else(|| {
        Error::NotDestabilizable(format!("segment in line {i} is longer than one"))
    })?;
    if p == q {
        return Err(Error::TrivialConfiguration {
            axis: Axis::Rows,
            index: i,
        });
    }
    let map_col = |c: usize| if c <= a { c } else { c - 1 };
    let mut xs = Vec::with_capacity(n - 1);
    let mut os = Vec::with_capacity(n - 1);
    for r in (0..n).filter(|&r| r != i) {
        xs.push(map_col(g.xs()[r]));
        os.push(map_col(g.os()[r]));
    }
    Ok(GridDiagram::from_parts(xs, os))
}

/// Removes a length-one segment (row `index` or column `index`) and merges
/// the two lines it joined.
pub fn generalized_destabilize(g: &GridDiagram, axis: Axis, index: usize) -> Result<GridDiagram> {
    match axis {
        Axis::Rows => generalized_rows(g, index),
        Axis::Columns => generalized_rows(&g.transpose(), index)
            .map(|h| h.transpose())
            .map_err(|e| match e {
                Error::TrivialConfiguration { index, .. } => Error::TrivialConfiguration {
                    axis: Axis::Columns,
                    index,
                },
                e => e,
            }),
    }
}

/// Stabilization type undone by a generalized destabilization. The segment
/// slides by commutations until it sits next to the other marking of one of
/// its two columns (the left one unless the right one is in the way), which
/// yields an ordinary destabilization block.
pub fn generalized_destabilization_kind(
    g: &GridDiagram,
    axis: Axis,
    index: usize,
) -> Result<StabilizationKind> {
    let h = match axis {
        Axis::Rows => g.clone(),
        Axis::Columns => g.transpose(),
    };
    let n = h.grid_number();
    if index >= n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let (x_rows, o_rows) = (h.x_rows(), h.o_rows());
    let (a, p, q) = unit_row_site(&h, &x_rows, &o_rows, index).ok_or_else(|| {
        Error::NotDestabilizable(format!("segment in line {index} is longer than one"))
    })?;
    let between = |t: usize, u: usize| index.min(t) < u && u < index.max(t);
    let (marking, corner) = if !between(p, q) {
        let m = h.marking_at(p, a).expect("column partner is marked");
        (m, if p > index { Corner::NE } else { Corner::SE })
    } else {
        let m = h.marking_at(q, a + 1).expect("column partner is marked");
        (m, if q > index { Corner::NW } else { Corner::SW })
    };
    let kind = StabilizationKind { marking, corner };
    Ok(match axis {
        Axis::Rows => kind,
        Axis::Columns => kind.transposed(),
    })
}

/// Options for [`legal_moves`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MoveOptions {
    /// Also list crossing changes and band moves.
    pub include_link_changing: bool,
}

/// Every move that applies to `g`, in a fixed order: the four cyclic shifts
/// (rows +1, rows -1, columns +1, columns -1), commutations (rows, then
/// columns), stabilizations (by row, X before O, corners NW NE SW SE),
/// ordinary destabilizations (by lower-left square), generalized
/// destabilizations (rows, then columns), and when requested crossing
/// changes followed by band moves.
pub fn legal_moves(g: &GridDiagram, opts: MoveOptions) -> Vec<Move> {
    let n = g.grid_number();
    let t = g.transpose();
    let mut out = Vec::with_capacity(12 * n);
    for axis in [Axis::Rows, Axis::Columns] {
        for dir in [1, -1] {
            out.push(Move::CyclicShift { axis, dir });
        }
    }
    let relations: Vec<(Axis, usize, Relation)> = [(Axis::Rows, g), (Axis::Columns, &t)]
        .into_iter()
        .flat_map(|(axis, h)| (0..n - 1).map(move |i| (axis, i, classify_rows(h, i))))
        .collect();
    for &(axis, index, rel) in &relations {
        if matches!(rel, Relation::Disjoint | Relation::Nested) {
            out.push(Move::Commutation { axis, index });
        }
    }
    for row in 0..n {
        for marking in [Marking::X, Marking::O] {
            for corner in Corner::ALL {
                out.push(Move::Stabilization {
                    row,
                    marking,
                    corner,
                });
            }
        }
    }
    if n > 2 {
        out.extend(
            destabilization_blocks(g)
                .into_iter()
                .map(|(row, col)| Move::Destabilization { row, col }),
        );
        for (axis, h) in [(Axis::Rows, g), (Axis::Columns, &t)] {
            let (x_rows, o_rows) = (h.x_rows(), h.o_rows());
            for index in 0..n {
                if let Some((_, p, q)) = unit_row_site(h, &x_rows, &o_rows, index) {
                    if p != q {
                        out.push(Move::GeneralizedDestabilization { axis, index });
                    }
                }
            }
        }
    }
    if opts.include_link_changing {
        for &(axis, index, rel) in &relations {
            if rel == Relation::Interleaved {
                out.push(Move::CrossingChange { axis, index });
            }
        }
        for &(axis, index, rel) in &relations {
            if rel == Relation::SharedEndpoint {
                continue;
            }
            out.push(Move::BandMove {
                axis,
                index,
                class: BandClass::Coherent,
            });
            let probe = Move::BandMove {
                axis,
                index,
                class: BandClass::Uncoherent,
            };
            if probe.apply(g).is_ok() {
                out.push(probe);
            }
        }
    }
    out
}

/// Lower-left squares of all 2x2 blocks holding exactly three markings,
/// sorted by row then column.
pub fn destabilization_blocks(g: &GridDiagram) -> Vec<(usize, usize)> {
    let n = g.grid_number();
    let mut out = Vec::new();
    // a three-marking block always contains a length-one row segment
    for i in 0..n {
        let (x, o) = (g.xs()[i], g.os()[i]);
        if x.abs_diff(o) != 1 {
            continue;
        }
        let a = x.min(o);
        for row in [i.wrapping_sub(1), i] {
            if row == usize::MAX || row + 1 >= n {
                continue;
            }
            let other = if row == i { i + 1 } else { row };
            let hits = [g.xs()[other], g.os()[other]]
                .iter()
                .filter(|&&c| c == a || c == a + 1)
                .count();
            if hits == 1 {
                out.push((row, a));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Applies every legal move (see [`legal_moves`]) and returns the results.
pub fn perform_all_moves(g: &GridDiagram, include_link_changing: bool) -> Vec<(Move, GridDiagram)> {
    legal_moves(
        g,
        MoveOptions {
            include_link_changing,
        },
    )
    .into_iter()
    .map(|m| {
        let h = m.apply(g).expect("enumerated moves apply");
        (m, h)
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{number_of_components, writhe};

    fn grid(xs: &[usize], os: &[usize]) -> GridDiagram {
        GridDiagram::new(xs.to_vec(), os.to_vec()).unwrap()
    }

    fn unknot() -> GridDiagram {
        grid(&[1, 0], &[0, 1])
    }

    #[test]
    fn classification_examples() {
        let g = grid(&[1, 0, 3, 2], &[0, 1, 2, 3]);
        assert_eq!(
            classify_adjacent(&g, Axis::Rows, 1).unwrap(),
            Relation::Disjoint
        );
        let g = grid(&[1, 2, 0], &[0, 1, 2]);
        assert_eq!(
            classify_adjacent(&g, Axis::Rows, 0).unwrap(),
            Relation::SharedEndpoint
        );
        // spans [0,2] and [1,3]
        let g = grid(&[2, 3, 0, 1], &[0, 1, 3, 2]);
        assert_eq!(
            classify_adjacent(&g, Axis::Rows, 0).unwrap(),
            Relation::Interleaved
        );
        assert!(matches!(
            classify_adjacent(&g, Axis::Rows, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn cyclic_shift_examples() {
        let g = unknot();
        let s = cyclic_shift(&g, Axis::Rows, 1);
        assert_eq!((s.xs(), s.os()), (&[0, 1][..], &[1, 0][..]));
        let c = cyclic_shift(&cyclic_shift(&g, Axis::Columns, 1), Axis::Columns, -1);
        assert_eq!(c, g);
        let f = grid(&[7, 2, 4, 5, 6, 1, 0, 3], &[5, 6, 7, 0, 3, 4, 1, 2]);
        let mut h = f.clone();
        for _ in 0..8 {
            h = cyclic_shift(&h, Axis::Rows, 1);
        }
        assert_eq!(h, f);
    }

    #[test]
    fn commute_example_and_involution() {
        let g = grid(&[1, 0, 3, 2], &[0, 1, 2, 3]);
        let h = commute(&g, Axis::Rows, 1).unwrap();
        assert_eq!((h.xs(), h.os()), (&[1, 3, 0, 2][..], &[0, 2, 1, 3][..]));
        assert_eq!(commute(&h, Axis::Rows, 1).unwrap(), g);
        assert!(matches!(
            commute(&unknot(), Axis::Rows, 0),
            Err(Error::IllegalCommutation { .. })
        ));
    }

    #[test]
    fn stabilize_then_destabilize_every_kind() {
        let g = grid(&[7, 2, 4, 5, 6, 1, 0, 3], &[5, 6, 7, 0, 3, 4, 1, 2]);
        for row in 0..8 {
            for kind in StabilizationKind::ALL {
                let s = stabilize(&g, row, kind.marking, kind.corner).unwrap();
                assert_eq!(s.grid_number(), 9);
                let col = match kind.marking {
                    Marking::X => g.xs()[row],
                    Marking::O => g.os()[row],
                };
                assert_eq!(destabilization_kind(&s, row, col).unwrap(), kind);
                assert_eq!(destabilize(&s, row, col).unwrap(), g);
                assert_eq!(number_of_components(&s), number_of_components(&g));
                assert!((writhe(&s) - writhe(&g)).abs() <= 1);
            }
        }
    }

    #[test]
    fn destabilize_errors() {
        assert_eq!(destabilize(&unknot(), 0, 0), Err(Error::TooSmall(2)));
        let g = grid(&[2, 0, 1], &[0, 1, 2]);
        assert!(matches!(
            destabilize(&g, 0, 1),
            Err(Error::NotDestabilizable(_))
        ));
    }

    #[test]
    fn split_unknot_block_is_trivial() {
        let g = grid(&[1, 0, 3, 4, 2], &[0, 1, 4, 2, 3]);
        for i in [0, 1] {
            assert!(matches!(
                generalized_destabilize(&g, Axis::Rows, i),
                Err(Error::TrivialConfiguration { .. })
            ));
        }
        for c in [0, 1] {
            assert!(matches!(
                generalized_destabilize(&g, Axis::Columns, c),
                Err(Error::TrivialConfiguration { .. })
            ));
        }
    }

    #[test]
    fn all_moves_on_minimal_unknot() {
        let moves = perform_all_moves(&unknot(), false);
        let shifts = moves
            .iter()
            .filter(|(m, _)| matches!(m, Move::CyclicShift { .. }))
            .count();
        let stabs = moves
            .iter()
            .filter(|(m, _)| matches!(m, Move::Stabilization { .. }))
            .count();
        assert_eq!(shifts, 4);
        assert_eq!(stabs, 16);
        assert_eq!(moves.len(), 20);
    }

    #[test]
    fn move_json_is_tagged() {
        let m = Move::Stabilization {
            row: 3,
            marking: Marking::X,
            corner: Corner::NE,
        };
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"move":"stabilization","row":3,"marking":"X","corner":"NE"}"#
        );
        assert_eq!(serde_json::from_str::<Move>(&text).unwrap(), m);
    }
}
