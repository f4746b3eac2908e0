use thiserror::Error;

use crate::grid::Axis;
use crate::moves::Relation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong across the crate.
///
/// The CLI reports failures by [`Error::name`], so variant names are part of
/// the public surface.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid number {0} is too small")]
    TooSmall(usize),
    #[error("x and o lists have different lengths ({x} and {o})")]
    LengthMismatch { x: usize, o: usize },
    #[error("the {list} list is not a permutation of 0..{n} (offending entry {value})")]
    NotAPermutation {
        list: &'static str,
        n: usize,
        value: usize,
    },
    #[error("X and O markings collide in row {0}")]
    Collision(usize),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("index {index} is out of range for grid number {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{axis:?} {index} and {} are {relation:?}, not commutable", index + 1)]
    IllegalCommutation {
        axis: Axis,
        index: usize,
        relation: Relation,
    },
    #[error("{axis:?} {index} and {} are {relation:?}, not interleaved", index + 1)]
    NotInterleaved {
        axis: Axis,
        index: usize,
        relation: Relation,
    },
    #[error("{axis:?} {index} and {} do not share a marking line", index + 1)]
    NotABandSite { axis: Axis, index: usize },
    #[error("band move at {axis:?} {index} is {found}, not {wanted}")]
    WrongBandClass {
        axis: Axis,
        index: usize,
        wanted: &'static str,
        found: &'static str,
    },
    #[error("no destabilization at this site: {0}")]
    NotDestabilizable(String),
    #[error("destabilizing {axis:?} {index} would merge a closed 2x2 loop")]
    TrivialConfiguration { axis: Axis, index: usize },
    #[error("no grid with the requested component count after {0} tries")]
    BudgetExhausted(u64),
    #[error("unknown knot name {0:?}")]
    UnknownName(String),
    #[error("no Legendrian entry {name:?} with tb={tb}, rot={rot}")]
    UnknownEntry { name: String, tb: i64, rot: i64 },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("line fit needs at least two distinct x values")]
    DegenerateInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Variant name, as printed by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::TooSmall(_) => "TooSmall",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotAPermutation { .. } => "NotAPermutation",
            Error::Collision(_) => "Collision",
            Error::ParseError(_) => "ParseError",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::IllegalCommutation { .. } => "IllegalCommutation",
            Error::NotInterleaved { .. } => "NotInterleaved",
            Error::NotABandSite { .. } => "NotABandSite",
            Error::WrongBandClass { .. } => "WrongBandClass",
            Error::NotDestabilizable(_) => "NotDestabilizable",
            Error::TrivialConfiguration { .. } => "TrivialConfiguration",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::UnknownName(_) => "UnknownName",
            Error::UnknownEntry { .. } => "UnknownEntry",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::DegenerateInput => "DegenerateInput",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Io(_) => "Io",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::ParseError(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
