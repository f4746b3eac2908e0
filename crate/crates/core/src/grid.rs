//! The grid diagram value type.
//!
//! A grid of size `n` is stored as two permutations of `0..n`: `xs[i]` is the
//! column of the X marking in row `i` and `os[i]` the column of the O marking.
//! Rows are counted from the bottom, columns from the left, both from zero.
//! Horizontal segments run from O to X, vertical segments from X to O, and
//! vertical segments always pass over horizontal ones.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Rows,
    Columns,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Marking {
    X,
    O,
}

impl Marking {
    pub fn other(self) -> Marking {
        match self {
            Marking::X => Marking::O,
            Marking::O => Marking::X,
        }
    }
}

/// An oriented straight piece of the link: it runs from `from` to `to` along
/// row or column `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub axis: Axis,
    pub index: usize,
    pub from: usize,
    pub to: usize,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.from.abs_diff(self.to)
    }

    pub fn is_empty(&self) -> bool {
        self.from == self.to
    }

    pub fn lo(&self) -> usize {
        self.from.min(self.to)
    }

    pub fn hi(&self) -> usize {
        self.from.max(self.to)
    }

    /// +1 when the segment runs towards larger coordinates.
    pub fn direction(&self) -> i32 {
        if self.to > self.from {
            1
        } else {
            -1
        }
    }

    /// True if `coord` lies strictly between the endpoints.
    pub fn strictly_contains(&self, coord: usize) -> bool {
        self.lo() < coord && coord < self.hi()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GridWire", into = "GridWire")]
pub struct GridDiagram {
    xs: Vec<usize>,
    os: Vec<usize>,
}

impl fmt::Debug for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grid(x={:?}, o={:?})", self.xs, self.os)
    }
}

fn check_permutation(list: &'static str, values: &[usize]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation { list, n, value: v });
        }
        seen[v] = true;
    }
    Ok(())
}

pub(crate) fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

impl GridDiagram {
    /// Validates the two marking lists and builds the grid.
    pub fn new(xs: Vec<usize>, os: Vec<usize>) -> Result<Self> {
        if xs.len() != os.len() {
            return Err(Error::LengthMismatch {
                x: xs.len(),
                o: os.len(),
            });
        }
        if xs.len() < 2 {
            return Err(Error::TooSmall(xs.len()));
        }
        check_permutation("x", &xs)?;
        check_permutation("o", &os)?;
        if let Some(row) = xs.iter().zip(&os).position(|(x, o)| x == o) {
            return Err(Error::Collision(row));
        }
        Ok(GridDiagram { xs, os })
    }

    /// For lists produced by moves that are valid by construction.
    pub(crate) fn from_parts(xs: Vec<usize>, os: Vec<usize>) -> Self {
        debug_assert!(
            GridDiagram::new(xs.clone(), os.clone()).is_ok(),
            "invalid grid x={xs:?} o={os:?}"
        );
        GridDiagram { xs, os }
    }

    pub fn grid_number(&self) -> usize {
        self.xs.len()
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn os(&self) -> &[usize] {
        &self.os
    }

    pub fn into_parts(self) -> (Vec<usize>, Vec<usize>) {
        (self.xs, self.os)
    }

    /// Row of the X marking in each column.
    pub fn x_rows(&self) -> Vec<usize> {
        inverse(&self.xs)
    }

    /// Row of the O marking in each column.
    pub fn o_rows(&self) -> Vec<usize> {
        inverse(&self.os)
    }

    pub fn marking_at(&self, row: usize, col: usize) -> Option<Marking> {
        if row >= self.grid_number() {
            None
        } else if self.xs[row] == col {
            Some(Marking::X)
        } else if self.os[row] == col {
            Some(Marking::O)
        } else {
            None
        }
    }

    pub fn horizontal_segment(&self, row: usize) -> Segment {
        Segment {
            axis: Axis::Rows,
            index: row,
            from: self.os[row],
            to: self.xs[row],
        }
    }

    /// The `2n` segments: all horizontal ones by row, then all vertical ones
    /// by column.
    pub fn segments(&self) -> Vec<Segment> {
        let x_rows = self.x_rows();
        let o_rows = self.o_rows();
        let n = self.grid_number();
        let horizontal = (0..n).map(|r| self.horizontal_segment(r));
        let vertical = (0..n).map(|c| Segment {
            axis: Axis::Columns,
            index: c,
            from: x_rows[c],
            to: o_rows[c],
        });
        horizontal.chain(vertical).collect()
    }

    /// Swaps the roles of rows and columns. The marking in row `r`, column `c`
    /// moves to row `c`, column `r`. Moves defined on rows are applied to
    /// columns by conjugating with this map.
    pub fn transpose(&self) -> GridDiagram {
        GridDiagram {
            xs: self.x_rows(),
            os: self.o_rows(),
        }
    }

    /// Canonical single-line JSON: `{"x":[..],"o":[..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("grid serialization cannot fail")
    }

    pub fn to_json_named(&self, name: Option<&str>) -> String {
        let wire = GridWire {
            x: self.xs.clone(),
            o: self.os.clone(),
            name: name.map(str::to_owned),
        };
        serde_json::to_string(&wire).expect("grid serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(decode_named(text)?.1)
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl FromStr for GridDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GridDiagram::from_json(s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridWire {
    x: Vec<usize>,
    o: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl TryFrom<GridWire> for GridDiagram {
    type Error = Error;

    fn try_from(w: GridWire) -> Result<Self> {
        GridDiagram::new(w.x, w.o)
    }
}

impl From<GridDiagram> for GridWire {
    fn from(g: GridDiagram) -> Self {
        GridWire {
            x: g.xs,
            o: g.os,
            name: None,
        }
    }
}

/// Decodes one grid object, returning its optional name as well.
pub fn decode_named(text: &str) -> Result<(Option<String>, GridDiagram)> {
    let wire: GridWire = serde_json::from_str(text.trim())?;
    let name = wire.name.clone();
    Ok((name, GridDiagram::try_from(wire)?))
}

/// Decodes a JSON-lines collection; blank lines are skipped.
pub fn decode_jsonl(text: &str) -> Result<Vec<(Option<String>, GridDiagram)>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode_named)
        .collect()
}

pub fn encode_jsonl<'a>(grids: impl IntoIterator<Item = &'a GridDiagram>) -> String {
    let mut out = String::new();
    for g in grids {
        out.push_str(&g.to_json());
        out.push('\n');
    }
    out
}
