pub mod cli;
pub mod convert;
pub mod error;
pub mod generators;
pub mod grid;
pub mod invariants;
pub mod moves;
pub mod render;
pub mod simplify;
pub mod stats;
pub mod transforms;

pub use error::{Error, Result};
pub use grid::{Axis, GridDiagram, Marking, Segment};
