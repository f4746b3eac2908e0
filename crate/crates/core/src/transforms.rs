//! Whole-grid operations.

use crate::error::{Error, Result};
use crate::grid::{Axis, GridDiagram};
use crate::invariants::{corners, writhe, CornerKind};
use crate::moves::cyclic_shift;

/// Reverses every component by exchanging the roles of X and O.
pub fn invert_orientation(g: &GridDiagram) -> GridDiagram {
    GridDiagram::from_parts(g.os().to_vec(), g.xs().to_vec())
}

/// Reflection in a vertical line. Every crossing changes sign.
pub fn mirror_grid(g: &GridDiagram) -> GridDiagram {
    let n = g.grid_number();
    GridDiagram::from_parts(
        g.xs().iter().map(|&c| n - 1 - c).collect(),
        g.os().iter().map(|&c| n - 1 - c).collect(),
    )
}

/// Quarter turn clockwise: the marking in row `r`, column `c` moves to row
/// `c`, column `n - 1 - r`. Verticals become horizontals and vice versa, so
/// the result represents the mirror link.
pub fn rotate(g: &GridDiagram) -> GridDiagram {
    let n = g.grid_number();
    let mut xs = vec![0; n];
    let mut os = vec![0; n];
    for r in 0..n {
        xs[g.xs()[r]] = n - 1 - r;
        os[g.os()[r]] = n - 1 - r;
    }
    GridDiagram::from_parts(xs, os)
}

/// `a` in the lower left, `b` in the upper right.
pub fn disjoint_union(a: &GridDiagram, b: &GridDiagram) -> GridDiagram {
    let off = a.grid_number();
    let xs = a
        .xs()
        .iter()
        .copied()
        .chain(b.xs().iter().map(|c| c + off))
        .collect();
    let os = a
        .os()
        .iter()
        .copied()
        .chain(b.os().iter().map(|c| c + off))
        .collect();
    GridDiagram::from_parts(xs, os)
}

/// `a` in the lower right, `b` in the upper left, the top row of `a` directly
/// below the bottom row of `b`. If the right marking of that top row has the
/// same type as the left marking of the bottom row, exchanging the two joins
/// the components without creating a crossing.
fn splice_rows(a: &GridDiagram, b: &GridDiagram) -> Option<GridDiagram> {
    let (n1, n2) = (a.grid_number(), b.grid_number());
    let top = n1 - 1;
    let right_is_x = a.xs()[top] > a.os()[top];
    let left_is_x = b.xs()[0] < b.os()[0];
    if right_is_x != left_is_x {
        return None;
    }
    let mut xs: Vec<usize> = a.xs().iter().map(|c| c + n2).collect();
    let mut os: Vec<usize> = a.os().iter().map(|c| c + n2).collect();
    xs.extend_from_slice(b.xs());
    os.extend_from_slice(b.os());
    if right_is_x {
        xs.swap(top, n1);
    } else {
        os.swap(top, n1);
    }
    Some(GridDiagram::from_parts(xs, os))
}

fn splice(a: &GridDiagram, b: &GridDiagram) -> Option<GridDiagram> {
    splice_rows(a, b)
        .or_else(|| splice_rows(b, a))
        .or_else(|| splice_rows(&a.transpose(), &b.transpose()).map(|g| g.transpose()))
        .or_else(|| splice_rows(&b.transpose(), &a.transpose()).map(|g| g.transpose()))
}

/// Half turn in the plane. Unlike a quarter turn this keeps every crossing.
pub fn rotate_half(g: &GridDiagram) -> GridDiagram {
    let n = g.grid_number();
    GridDiagram::from_parts(
        g.xs().iter().rev().map(|&c| n - 1 - c).collect(),
        g.os().iter().rev().map(|&c| n - 1 - c).collect(),
    )
}

/// Planar positions of `g` to try for a splice: `g`, its half turn, then the
/// same for every row and column shift that leaves the writhe unchanged.
fn splice_candidates(g: &GridDiagram) -> impl Iterator<Item = GridDiagram> + '_ {
    let n = g.grid_number() as i32;
    let w = writhe(g);
    (0..n)
        .flat_map(move |d| (0..n).map(move |e| (d, e)))
        .map(move |(d, e)| cyclic_shift(&cyclic_shift(g, Axis::Rows, d), Axis::Columns, e))
        .filter(move |h| writhe(h) == w)
        .flat_map(|h| {
            let r = rotate_half(&h);
            [h, r]
        })
}

/// Connected sum on a grid of size `n1 + n2`.
///
/// The grids sit diagonally next to each other and one marking is exchanged
/// between two facing boundary lines, which joins one component of each
/// without new crossings, so writhes add. When the boundary lines of the
/// inputs are oriented incompatibly, half turns and cyclic shifts that keep
/// the writhe are tried in a fixed order.
pub fn connected_sum(a: &GridDiagram, b: &GridDiagram) -> GridDiagram {
    let b_shifts: Vec<GridDiagram> = splice_candidates(b).collect();
    for a2 in splice_candidates(a) {
        for b2 in &b_shifts {
            if let Some(g) = splice(&a2, b2) {
                return g;
            }
        }
    }
    unreachable!("some shift of a grid has a compatible boundary line")
}

/// Flat (blackboard framed) parallel cable with `k` strands per component.
/// Each marking becomes a diagonal run of `k` markings inside a `k x k`
/// block, ascending or descending so the strands turn the corner without
/// crossing each other.
pub fn parallel_copies(g: &GridDiagram, k: usize) -> Result<GridDiagram> {
    if k == 0 {
        return Err(Error::InvalidArgument("need at least one copy".into()));
    }
    let n = g.grid_number();
    let mut xs = vec![0; k * n];
    let mut os = vec![0; k * n];
    for (row, col, marking, kind) in corners(g) {
        let ascending = matches!(kind, CornerKind::SW | CornerKind::NE);
        for i in 0..k {
            let j = if ascending { i } else { k - 1 - i };
            let target = match marking {
                crate::grid::Marking::X => &mut xs,
                crate::grid::Marking::O => &mut os,
            };
            target[k * row + i] = k * col + j;
        }
    }
    Ok(GridDiagram::from_parts(xs, os))
}
