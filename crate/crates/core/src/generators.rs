//! Grid producers: uniform random grids, standard families, and the
//! embedded knot libraries.
//!
//! Randomness comes from ChaCha8 seeded with a 64-bit seed. Independent
//! substreams are selected with [`substream`], so item `i` of any batch
//! depends only on `(seed, i)` and batches can be generated in parallel.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{decode_jsonl, GridDiagram};
use crate::invariants::{number_of_components, rotation_number, thurston_bennequin};
use crate::transforms::mirror_grid;

/// The generator for substream `stream` of `seed`.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform over all valid grids of size `n`: shuffle both lists and retry
/// while some row collides.
pub fn sample_uniform<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> GridDiagram {
    assert!(n >= 2, "grid number must be at least 2");
    let mut xs: Vec<usize> = (0..n).collect();
    let mut os: Vec<usize> = (0..n).collect();
    loop {
        xs.shuffle(rng);
        os.shuffle(rng);
        if xs.iter().zip(&os).all(|(x, o)| x != o) {
            return GridDiagram::from_parts(xs, os);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    pub components: Option<usize>,
    pub seed: u64,
    pub max_tries: u64,
}

impl RandomSpec {
    pub const DEFAULT_MAX_TRIES: u64 = 1_000_000;

    pub fn new(n: usize, seed: u64) -> Self {
        RandomSpec {
            n,
            components: None,
            seed,
            max_tries: Self::DEFAULT_MAX_TRIES,
        }
    }

    pub fn with_components(mut self, k: usize) -> Self {
        self.components = Some(k);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidSpec(format!("n = {} is below 2", self.n)));
        }
        if let Some(k) = self.components {
            if k == 0 || k > self.n / 2 {
                return Err(Error::InvalidSpec(format!(
                    "{k} components impossible at grid number {}",
                    self.n
                )));
            }
        }
        if self.max_tries == 0 {
            return Err(Error::InvalidSpec("max_tries must be positive".into()));
        }
        Ok(())
    }
}

fn sample_with_spec(spec: &RandomSpec, stream: u64) -> Result<GridDiagram> {
    spec.validate()?;
    let mut rng = substream(spec.seed, stream);
    match spec.components {
        None => Ok(sample_uniform(spec.n, &mut rng)),
        Some(k) => {
            for _ in 0..spec.max_tries {
                let g = sample_uniform(spec.n, &mut rng);
                if number_of_components(&g) == k {
                    return Ok(g);
                }
            }
            Err(Error::BudgetExhausted(spec.max_tries))
        }
    }
}

/// A uniform random grid (uniform among grids with the requested component
/// count if one is set). Uses substream 0 of the seed.
pub fn generate_random_grid(spec: &RandomSpec) -> Result<GridDiagram> {
    sample_with_spec(spec, 0)
}

/// Grid number `index` of the list for `seed`.
pub fn random_grid_at(n: usize, seed: u64, index: u64) -> GridDiagram {
    sample_uniform(n, &mut substream(seed, index))
}

/// `count` independent uniform grids; element `i` equals
/// `random_grid_at(n, seed, i)`.
pub fn generate_grid_list(n: usize, count: usize, seed: u64) -> Result<Vec<GridDiagram>> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    Ok((0..count as u64)
        .into_par_iter()
        .map(|i| random_grid_at(n, seed, i))
        .collect())
}

/// List version of [`generate_random_grid`] honouring the component
/// constraint; element `i` uses substream `i`.
pub fn generate_grid_list_with(spec: &RandomSpec, count: usize) -> Result<Vec<GridDiagram>> {
    spec.validate()?;
    (0..count as u64)
        .into_par_iter()
        .map(|i| sample_with_spec(spec, i))
        .collect()
}

/// Staircase unknot `xs[i] = i + 1 mod n`, `os[i] = i`.
pub fn generate_unknot(n: usize) -> Result<GridDiagram> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    Ok(GridDiagram::from_parts(
        (0..n).map(|i| (i + 1) % n).collect(),
        (0..n).collect(),
    ))
}

/// `k` split copies of the 2x2 unknot along the diagonal.
pub fn generate_unlink(k: usize) -> Result<GridDiagram> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "an unlink needs at least one component".into(),
        ));
    }
    let xs = (0..2 * k).map(|i| i ^ 1).collect();
    let os = (0..2 * k).collect();
    Ok(GridDiagram::from_parts(xs, os))
}

/// The torus link T(p, q) on a grid of size `p + q`: `os[i] = i`,
/// `xs[i] = i + q mod (p + q)`.
pub fn generate_torus_link(p: usize, q: usize) -> Result<GridDiagram> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(format!(
            "T({p}, {q}) needs p, q >= 1"
        )));
    }
    let n = p + q;
    Ok(GridDiagram::from_parts(
        (0..n).map(|i| (i + q) % n).collect(),
        (0..n).collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClaspSign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl ClaspSign {
    pub fn sign(self) -> i8 {
        match self {
            ClaspSign::Positive => 1,
            ClaspSign::Negative => -1,
        }
    }
}

/// Twist knot with `k` half twists whose two clasp crossings have the given
/// sign. The diagram has `k + 2` crossings on a grid of size `k + 4`.
pub fn generate_twist_knot(k: usize, clasp: ClaspSign) -> Result<GridDiagram> {
    if k == 0 {
        return Err(Error::InvalidArgument("a twist knot needs k >= 1".into()));
    }
    let n = k + 4;
    // markings per column; the twist region is a staircase of columns 4..n
    let mut cols: Vec<[usize; 2]> = vec![[1, n - 2], [n - 3, n - 1], [0, n - 2], [n - 4, n - 1]];
    cols.extend((5..=n).map(|j| [n - j, n + 2 - j]));
    let g = orient_columns(&cols);
    // rotate the columns so the clasp closes up without extra crossings
    let g = (0..n)
        .map(|d| crate::moves::cyclic_shift(&g, crate::grid::Axis::Columns, d as i32))
        .min_by_key(crate::invariants::crossing_number)
        .expect("n >= 5");
    // the construction's twists are negative; its clasp sign alternates with k
    let natural = if k % 2 == 0 {
        ClaspSign::Positive
    } else {
        ClaspSign::Negative
    };
    Ok(if natural == clasp { g } else { mirror_grid(&g) })
}

/// Builds a one-component grid from the unlabeled marking rows of each
/// column, alternating X and O along the curve starting with an O at the
/// lowest column marked in row 0.
fn orient_columns(cols: &[[usize; 2]]) -> GridDiagram {
    let n = cols.len();
    let mut row_cols: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, rows) in cols.iter().enumerate() {
        for &r in rows {
            row_cols[r].push(c);
        }
    }
    let mut xs = vec![0; n];
    let mut os = vec![0; n];
    let mut row = 0;
    let mut o_col = row_cols[0][0];
    for _ in 0..n {
        let x_col = row_cols[row][0] + row_cols[row][1] - o_col;
        os[row] = o_col;
        xs[row] = x_col;
        let [a, b] = cols[x_col];
        row = a + b - row;
        o_col = x_col;
    }
    GridDiagram::from_parts(xs, os)
}

const KNOTS_JSONL: &str = include_str!("../data/knots.jsonl");
const LEGENDRIAN_JSONL: &str = include_str!("../data/legendrian.jsonl");

fn knot_table() -> &'static [(String, GridDiagram)] {
    static TABLE: OnceLock<Vec<(String, GridDiagram)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        decode_jsonl(KNOTS_JSONL)
            .expect("embedded knot table is valid")
            .into_iter()
            .map(|(name, g)| (name.expect("library entries are named"), g))
            .collect()
    })
}

/// Names in the knot library, in table order (3_1 through 8_21).
pub fn available_knots() -> Vec<&'static str> {
    knot_table().iter().map(|(n, _)| n.as_str()).collect()
}

pub fn load_knot(name: &str) -> Result<GridDiagram> {
    if name == "0_1" {
        return generate_unknot(2);
    }
    knot_table()
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g.clone())
        .ok_or_else(|| Error::UnknownName(name.to_owned()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianEntry {
    pub name: String,
    pub grid: GridDiagram,
    pub tb: i64,
    pub rot: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LegendrianWire {
    name: String,
    x: Vec<usize>,
    o: Vec<usize>,
    tb: i64,
    rot: i64,
}

fn legendrian_table() -> &'static [LegendrianEntry] {
    static TABLE: OnceLock<Vec<LegendrianEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        LEGENDRIAN_JSONL
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let w: LegendrianWire = serde_json::from_str(l).expect("embedded entry parses");
                LegendrianEntry {
                    name: w.name,
                    grid: GridDiagram::new(w.x, w.o).expect("embedded entry is a grid"),
                    tb: w.tb,
                    rot: w.rot,
                }
            })
            .collect()
    })
}

/// All embedded Legendrian representatives. Names starting with `m` are
/// mirror images.
pub fn available_legendrian_knots() -> &'static [LegendrianEntry] {
    legendrian_table()
}

pub fn load_legendrian_knot(name: &str, tb: i64, rot: i64) -> Result<GridDiagram> {
    legendrian_table()
        .iter()
        .find(|e| e.name == name && e.tb == tb && e.rot == rot)
        .map(|e| e.grid.clone())
        .ok_or_else(|| Error::UnknownEntry {
            name: name.to_owned(),
            tb,
            rot,
        })
}

impl LegendrianEntry {
    /// Do the stored numbers match the grid?
    pub fn is_consistent(&self) -> bool {
        thurston_bennequin(&self.grid) == self.tb && rotation_number(&self.grid) == self.rot
    }
}
