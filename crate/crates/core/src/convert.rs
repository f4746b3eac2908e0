//! Braid words and Gauss codes.
//!
//! Braid extraction: every vertical strand that runs downwards is replaced
//! by the complementary arc of its column, going up past the top edge and
//! coming back from the bottom. Since verticals lie over everything this does
//! not change the link, and afterwards every vertical runs upwards. Reading
//! the rows from the bottom, each horizontal segment moves one strand from
//! the column of its O to the column of its X, passing under the active
//! strands in between; each such passage is one generator.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridDiagram;
use crate::invariants::component_rows;
use crate::simplify::{simplify_grid, EffortSpec, MoveMode};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    /// Generator `i` as `i`, its inverse as `-i`, numbered from 1.
    pub letters: Vec<i32>,
    pub strands: usize,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs a strand".into()));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} does not fit {strands} strands"
            )));
        }
        Ok(BraidWord { letters, strands })
    }

    /// The smallest strand count that fits the letters.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        BraidWord::new(letters, strands)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Permutation of strand positions realised by the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        at
    }

    /// Components of the closure: cycles of [`BraidWord::permutation`].
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut count = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                count += 1;
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                }
            }
        }
        count
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[i32]) -> fmt::Result {
    f.write_str("[")?;
    for (k, v) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("]")
}

/// Plain bracketed list, e.g. `[1, -2, 1, -2]`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.letters)
    }
}

pub fn count_crossings_braid(w: &BraidWord) -> usize {
    w.letters.len()
}

/// Braid whose closure is the link of `g`. With `simplify_first` the grid is
/// simplified (default effort, seed 0) before reading off the word.
pub fn convert_to_braid(g: &GridDiagram, simplify_first: bool) -> BraidWord {
    let g = if simplify_first {
        simplify_grid(g, &EffortSpec::new(0), MoveMode::Topological)
    } else {
        g.clone()
    };
    let n = g.grid_number();
    let (x_rows, o_rows) = (g.x_rows(), g.o_rows());
    // below row 0 only the wrapped (downward) columns carry strands
    let mut active: Vec<bool> = (0..n).map(|c| x_rows[c] > o_rows[c]).collect();
    let strands = active.iter().filter(|&&a| a).count();
    let mut letters = Vec::new();
    for r in 0..n {
        let (from, to) = (g.os()[r], g.xs()[r]);
        let pos = active[..from].iter().filter(|&&a| a).count() as i32;
        let passed = (from.min(to) + 1..from.max(to))
            .filter(|&c| active[c])
            .count() as i32;
        if to > from {
            letters.extend((1..=passed).map(|k| -(pos + k)));
        } else {
            letters.extend((0..passed).map(|k| pos - k));
        }
        active[from] = false;
        active[to] = true;
    }
    BraidWord { letters, strands }
}

/// A grid of size `2 * strands + letters` whose braid, as read by
/// [`convert_to_braid`], is exactly `w`.
///
/// Strands start in wrapped columns on the far left, are moved one by one
/// (rightmost first) to fresh columns on the far right, then each letter
/// moves one strand across a single neighbour into a fresh column, and
/// finally the strands return to the wrapped columns leftmost first.
pub fn grid_from_braid(w: &BraidWord) -> Result<GridDiagram> {
    let w = BraidWord::new(w.letters.clone(), w.strands)?;
    let m = w.strands;
    let n = 2 * m + w.letters.len();
    // columns are built as an ordered list of ids, positions fixed at the end
    let mut order: Vec<usize> = (0..m).collect();
    order.extend(m..2 * m);
    let mut next_id = 2 * m;
    let mut rows: Vec<(usize, usize)> = Vec::with_capacity(n); // (o id, x id)
    let mut strand_col: Vec<usize> = (m..2 * m).collect();
    for j in (0..m).rev() {
        rows.push((j, m + j));
    }
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize; // swaps 0-based positions i-1 and i
        let id = next_id;
        next_id += 1;
        if l > 0 {
            let left = strand_col[i - 1];
            let at = order
                .iter()
                .position(|&c| c == left)
                .expect("active column is ordered");
            order.insert(at, id);
            rows.push((strand_col[i], id));
            strand_col[i] = strand_col[i - 1];
        } else {
            let right = strand_col[i];
            let at = order
                .iter()
                .position(|&c| c == right)
                .expect("active column is ordered");
            order.insert(at + 1, id);
            rows.push((strand_col[i - 1], id));
            strand_col[i - 1] = strand_col[i];
        }
        strand_col[if l > 0 { i - 1 } else { i }] = id;
    }
    for (j, &c) in strand_col.iter().enumerate() {
        rows.push((c, j));
    }
    let mut place = vec![0; next_id];
    for (p, &id) in order.iter().enumerate() {
        place[id] = p;
    }
    let os = rows.iter().map(|&(o, _)| place[o]).collect();
    let xs = rows.iter().map(|&(_, x)| place[x]).collect();
    GridDiagram::new(xs, os)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussCode {
    /// Signed crossing labels met along each component: positive when
    /// passing over, negative when passing under.
    pub components: Vec<Vec<i32>>,
    /// Sign of crossing `k` at index `k - 1`.
    pub signs: Vec<i8>,
}

impl GaussCode {
    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }
}

/// Nested-list text, e.g. `[[[1, -2, 3, -1, 2, -3]], [1, 1, 1]]`.
impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[[")?;
        for (k, comp) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write_list(f, comp)?;
        }
        f.write_str("], ")?;
        let signs: Vec<i32> = self.signs.iter().map(|&s| s as i32).collect();
        write_list(f, &signs)?;
        f.write_str("]")
    }
}

/// Components in order of their lowest row, each read from the O marking
/// of that row: along its horizontal segment, then its vertical one, and so
/// on. Crossings are numbered from 1 in order of first encounter.
pub fn gauss_code(g: &GridDiagram) -> GaussCode {
    let n = g.grid_number();
    let (x_rows, o_rows) = (g.x_rows(), g.o_rows());
    let row_span = |r: usize| (g.xs()[r].min(g.os()[r]), g.xs()[r].max(g.os()[r]));
    let col_span = |c: usize| (x_rows[c].min(o_rows[c]), x_rows[c].max(o_rows[c]));
    let is_crossing = |r: usize, c: usize| {
        let (a, b) = row_span(r);
        let (p, q) = col_span(c);
        a < c && c < b && p < r && r < q
    };
    let mut label = vec![0i32; n * n];
    let mut signs = Vec::new();
    let mut components = Vec::new();
    let mut mark = |r: usize, c: usize, labels: &mut Vec<i32>, over: bool, signs: &mut Vec<i8>| {
        let slot = &mut label[r * n + c];
        if *slot == 0 {
            signs.push(0);
            *slot = signs.len() as i32;
        }
        labels.push(if over { *slot } else { -*slot });
    };
    for rows in component_rows(g) {
        let mut seq = Vec::new();
        let start = rows[0];
        let mut r = start;
        loop {
            let (o, x) = (g.os()[r], g.xs()[r]);
            let cols: Box<dyn Iterator<Item = usize>> = if x > o {
                Box::new(o + 1..x)
            } else {
                Box::new((x + 1..o).rev())
            };
            for c in cols {
                if is_crossing(r, c) {
                    mark(r, c, &mut seq, false, &mut signs);
                }
            }
            let next = o_rows[x];
            let rs: Box<dyn Iterator<Item = usize>> = if next > r {
                Box::new(r + 1..next)
            } else {
                Box::new((next + 1..r).rev())
            };
            for rr in rs {
                if is_crossing(rr, x) {
                    mark(rr, x, &mut seq, true, &mut signs);
                }
            }
            r = next;
            if r == start {
                break;
            }
        }
        components.push(seq);
    }
    // fill in signs now that every crossing has a label
    for c in crate::invariants::crossings(g) {
        let k = label[c.row * n + c.col];
        signs[(k - 1) as usize] = c.sign;
    }
    GaussCode { components, signs }
}
