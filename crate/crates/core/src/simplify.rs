//! Randomized simplification and scrambling.
//!
//! Which stabilization types each mode may use (see [`MoveMode::permits`]):
//!
//! | kind             | change of (tb, rot) | legendrian | transverse |
//! |------------------|---------------------|------------|------------|
//! | X:NE X:SW O:NE O:SW | (0, 0)           | yes        | yes        |
//! | X:SE O:NW        | (-1, -1)            | no         | yes        |
//! | X:NW O:SE        | (-1, +1)            | no         | no         |
//!
//! Cyclic shifts and commutations keep (tb, rot) and are allowed everywhere.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::substream;
use crate::grid::{Axis, GridDiagram, Marking};
use crate::moves::{
    destabilization_kind, generalized_destabilization_kind, generalized_destabilize, legal_moves,
    Corner, Move, MoveOptions, StabilizationKind,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveMode {
    #[default]
    Topological,
    Legendrian,
    Transverse,
}

impl MoveMode {
    pub fn permits_kind(self, kind: StabilizationKind) -> bool {
        use Corner::*;
        use Marking::*;
        match self {
            MoveMode::Topological => true,
            MoveMode::Legendrian => matches!(kind.corner, NE | SW),
            MoveMode::Transverse => {
                matches!(kind.corner, NE | SW)
                    || matches!((kind.marking, kind.corner), (X, SE) | (O, NW))
            }
        }
    }

    /// Is `m`, applied to `g`, a move of this mode? Link-changing moves never
    /// are.
    pub fn permits(self, m: &Move, g: &GridDiagram) -> bool {
        match *m {
            Move::CyclicShift { .. } | Move::Commutation { .. } => true,
            Move::CrossingChange { .. } | Move::BandMove { .. } => false,
            Move::Stabilization {
                marking, corner, ..
            } => self.permits_kind(StabilizationKind { marking, corner }),
            Move::Destabilization { row, col } => destabilization_kind(g, row, col)
                .map(|k| self.permits_kind(k))
                .unwrap_or(false),
            Move::GeneralizedDestabilization { axis, index } => {
                generalized_destabilization_kind(g, axis, index)
                    .map(|k| self.permits_kind(k))
                    .unwrap_or(false)
            }
        }
    }
}

impl std::str::FromStr for MoveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "topological" => Ok(MoveMode::Topological),
            "legendrian" => Ok(MoveMode::Legendrian),
            "transverse" => Ok(MoveMode::Transverse),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffortSpec {
    pub rounds: usize,
    /// Moves per round; `None` means 20 times the grid number.
    pub walk_length: Option<usize>,
    pub seed: u64,
}

impl EffortSpec {
    pub const DEFAULT_ROUNDS: usize = 10;
    pub const WALK_PER_N: usize = 20;

    pub fn new(seed: u64) -> Self {
        EffortSpec {
            rounds: Self::DEFAULT_ROUNDS,
            walk_length: None,
            seed,
        }
    }

    /// Parses `low`, `default`, `high` or `ROUNDS:WALK`.
    pub fn parse(text: &str, seed: u64) -> Result<Self> {
        let base = EffortSpec::new(seed);
        let spec = match text {
            "low" => EffortSpec { rounds: 3, ..base },
            "default" => base,
            "high" => EffortSpec {
                rounds: 40,
                walk_length: None,
                seed,
            },
            other => {
                let (r, w) = other
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidArgument(format!("bad effort {other:?}")))?;
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidArgument(format!("bad effort {other:?}")))
                };
                EffortSpec {
                    rounds: parse(r)?,
                    walk_length: Some(parse(w)?),
                    seed,
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rounds == 0 || self.walk_length == Some(0) {
            return Err(Error::InvalidArgument(
                "rounds and walk length must be positive".into(),
            ));
        }
        Ok(())
    }

    fn walk_for(&self, n: usize) -> usize {
        self.walk_length.unwrap_or(Self::WALK_PER_N * n)
    }
}

fn first_destabilization(g: &GridDiagram, mode: MoveMode) -> Option<GridDiagram> {
    if g.grid_number() <= 2 {
        return None;
    }
    for axis in [Axis::Rows, Axis::Columns] {
        let h = match axis {
            Axis::Rows => g.clone(),
            Axis::Columns => g.transpose(),
        };
        for index in 0..h.grid_number() {
            let (x, o) = (h.xs()[index], h.os()[index]);
            if x.abs_diff(o) != 1 {
                continue;
            }
            let allowed = mode == MoveMode::Topological
                || generalized_destabilization_kind(g, axis, index)
                    .map(|k| mode.permits_kind(k))
                    .unwrap_or(false);
            if allowed {
                if let Ok(out) = generalized_destabilize(g, axis, index) {
                    return Some(out);
                }
            }
        }
    }
    None
}

/// Applies generalized destabilizations until none is left.
pub fn destabilize_all(g: &GridDiagram) -> GridDiagram {
    destabilize_all_in(g, MoveMode::Topological)
}

/// [`destabilize_all`] restricted to the destabilizations of `mode`.
pub fn destabilize_all_in(g: &GridDiagram, mode: MoveMode) -> GridDiagram {
    let mut cur = g.clone();
    while let Some(next) = first_destabilization(&cur, mode) {
        cur = next;
    }
    cur
}

/// Commutations and cyclic shifts, the moves of the simplifying walk.
fn walk_moves(g: &GridDiagram) -> Vec<Move> {
    let n = g.grid_number();
    let t = g.transpose();
    let mut out = Vec::with_capacity(2 * n + 4);
    for axis in [Axis::Rows, Axis::Columns] {
        for dir in [1, -1] {
            out.push(Move::CyclicShift { axis, dir });
        }
    }
    for (axis, h) in [(Axis::Rows, g), (Axis::Columns, &t)] {
        for index in 0..n - 1 {
            if disjoint_or_nested(h, index) {
                out.push(Move::Commutation { axis, index });
            }
        }
    }
    out
}

fn disjoint_or_nested(h: &GridDiagram, i: usize) -> bool {
    let (x0, o0, x1, o1) = (h.xs()[i], h.os()[i], h.xs()[i + 1], h.os()[i + 1]);
    if x0 == x1 || x0 == o1 || o0 == x1 || o0 == o1 {
        return false;
    }
    let (a0, b0) = (x0.min(o0), x0.max(o0));
    let (a1, b1) = (x1.min(o1), x1.max(o1));
    let interleaved = (a0 < a1 && a1 < b0 && b0 < b1) || (a1 < a0 && a0 < b1 && b1 < b0);
    !interleaved
}

fn simplify_round(
    g: &GridDiagram,
    walk: usize,
    mode: MoveMode,
    seed: u64,
    round: u64,
) -> GridDiagram {
    let mut rng = substream(seed, round);
    let mut cur = destabilize_all_in(g, mode);
    let mut best = cur.clone();
    for _ in 0..walk {
        if cur.grid_number() == 2 {
            break;
        }
        let moves = walk_moves(&cur);
        let m = moves[rng.gen_range(0..moves.len())];
        cur = m.apply(&cur).expect("walk moves are legal");
        cur = destabilize_all_in(&cur, mode);
        if cur.grid_number() < best.grid_number() {
            best = cur.clone();
        }
    }
    best
}

/// Smallest grid found by `effort.rounds` independent random walks of
/// commutations and cyclic shifts, each followed by exhaustive
/// destabilization. Ties go to the lowest round.
pub fn simplify_grid(g: &GridDiagram, effort: &EffortSpec, mode: MoveMode) -> GridDiagram {
    let walk = effort.walk_for(g.grid_number());
    (0..effort.rounds.max(1) as u64)
        .into_par_iter()
        .map(|r| (r, simplify_round(g, walk, mode, effort.seed, r)))
        .min_by_key(|(r, h)| (h.grid_number(), *r))
        .map(|(_, h)| h)
        .expect("at least one round")
}

/// Every move of `mode` that applies to `g`, in [`legal_moves`] order.
pub fn permitted_moves(g: &GridDiagram, mode: MoveMode) -> Vec<Move> {
    legal_moves(g, MoveOptions::default())
        .into_iter()
        .filter(|m| mode.permits(m, g))
        .collect()
}

/// `steps` moves drawn uniformly from the moves of `mode` that apply at
/// each point.
pub fn scramble_grid(g: &GridDiagram, steps: usize, mode: MoveMode, seed: u64) -> GridDiagram {
    let mut rng = substream(seed, 0);
    let mut cur = g.clone();
    for _ in 0..steps {
        let moves = permitted_moves(&cur, mode);
        let m = moves[rng.gen_range(0..moves.len())];
        cur = m.apply(&cur).expect("enumerated moves apply");
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_unknot, load_knot};
    use crate::invariants::{
        number_of_components, rotation_number, self_linking, thurston_bennequin,
    };

    #[test]
    fn effort_parsing() {
        assert_eq!(EffortSpec::parse("default", 1).unwrap(), EffortSpec::new(1));
        let e = EffortSpec::parse("4:100", 2).unwrap();
        assert_eq!((e.rounds, e.walk_length), (4, Some(100)));
        assert!(EffortSpec::parse("0:5", 0).is_err());
        assert!(EffortSpec::parse("lots", 0).is_err());
    }

    #[test]
    fn staircase_unknots_collapse() {
        for n in 2..=30 {
            let g = generate_unknot(n).unwrap();
            assert_eq!(
                simplify_grid(&g, &EffortSpec::new(0), MoveMode::Topological).grid_number(),
                2
            );
        }
    }

    #[test]
    fn scrambled_unknot_comes_back() {
        let u = generate_unknot(2).unwrap();
        for seed in 0..10 {
            let s = scramble_grid(&u, 30, MoveMode::Topological, seed);
            let back = simplify_grid(&s, &EffortSpec::new(seed), MoveMode::Topological);
            assert_eq!(back.grid_number(), 2, "seed {seed}");
        }
    }

    #[test]
    fn zero_steps_is_identity() {
        let g = load_knot("5_2").unwrap();
        assert_eq!(scramble_grid(&g, 0, MoveMode::Topological, 4), g);
    }

    #[test]
    fn contact_modes_keep_their_invariants() {
        let g = load_knot("5_2").unwrap();
        for seed in 0..5 {
            let s = scramble_grid(&g, 40, MoveMode::Legendrian, seed);
            assert_eq!(
                (thurston_bennequin(&s), rotation_number(&s)),
                (thurston_bennequin(&g), rotation_number(&g))
            );
            let t = simplify_grid(&s, &EffortSpec::new(seed), MoveMode::Legendrian);
            assert_eq!(
                (thurston_bennequin(&t), rotation_number(&t)),
                (thurston_bennequin(&g), rotation_number(&g))
            );
            let s = scramble_grid(&g, 40, MoveMode::Transverse, seed);
            assert_eq!(self_linking(&s), self_linking(&g));
            assert_eq!(number_of_components(&s), 1);
        }
    }
}
