//! The `gridknot` command-line tool.
//!
//! [`run`] takes its streams as arguments so the tool can be driven
//! in-process; the binary only forwards the real ones.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::convert::{convert_to_braid, gauss_code};
use crate::error::{Error, Result};
use crate::generators::{
    available_knots, available_legendrian_knots, generate_grid_list_with, generate_random_grid,
    generate_torus_link, generate_twist_knot, generate_unknot, generate_unlink, load_knot,
    load_legendrian_knot, ClaspSign, RandomSpec,
};
use crate::grid::{decode_named, encode_jsonl, GridDiagram};
use crate::invariants::InvariantReport;
use crate::moves::{legal_moves, Move, MoveOptions};
use crate::render::{draw_ascii, draw_svg};
use crate::simplify::{scramble_grid, simplify_grid, EffortSpec, MoveMode};
use crate::stats::{run_experiment, write_csv, write_plots};
use crate::transforms::{
    connected_sum, disjoint_union, invert_orientation, mirror_grid, parallel_copies, rotate,
    rotate_half,
};

#[derive(Parser, Debug)]
#[command(name = "gridknot", version, about = "Grid diagrams of oriented links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a grid: uniform random, unknot, unlink, torus link or twist knot
    Generate(GenerateArgs),
    /// Print a grid from the built-in knot or Legendrian tables
    Load(LoadArgs),
    /// Shrink a grid by random commutations, shifts and destabilizations
    Simplify(SimplifyArgs),
    /// Apply random moves to a grid
    Scramble(ScrambleArgs),
    /// List the moves that apply to a grid, or apply one
    Moves(MovesArgs),
    /// Print all invariants of a grid as one JSON object
    Invariants(InputArgs),
    /// Mirror, rotate, invert, combine or cable grids
    Transform(TransformArgs),
    /// Print a braid word or Gauss code for a grid
    Convert(ConvertArgs),
    /// Draw a grid as text or SVG
    Draw(DrawArgs),
    /// Invariant statistics of random grids, as CSV
    Stats(StatsArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Grid JSON file; standard input when missing or `-`
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("kind").required(true).args(["random", "unknot", "unlink", "torus", "twist"])))]
pub struct GenerateArgs {
    /// Uniform random grid of size -n
    #[arg(long, requires = "n")]
    pub random: bool,
    /// Grid number for --random
    #[arg(short)]
    pub n: Option<usize>,
    /// Only accept random grids with this many components
    #[arg(long, requires = "random")]
    pub components: Option<usize>,
    /// Number of random grids; more than one prints JSON lines
    #[arg(long, default_value_t = 1, requires = "random")]
    pub count: usize,
    /// Random seed, echoed on standard error
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Staircase unknot of the given size
    #[arg(long, value_name = "N")]
    pub unknot: Option<usize>,
    /// Unlink with the given number of components
    #[arg(long, value_name = "K")]
    pub unlink: Option<usize>,
    /// Torus link T(P, Q)
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub torus: Option<Vec<usize>>,
    /// Twist knot with K half twists
    #[arg(long, value_name = "K")]
    pub twist: Option<usize>,
    /// Clasp sign of the twist knot
    #[arg(long, value_enum, default_value_t = Clasp::Positive, requires = "twist")]
    pub clasp: Clasp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Clasp {
    Positive,
    Negative,
}

#[derive(Args, Debug)]
pub struct LoadArgs {
    /// Knot name such as 3_1 or m5_2
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    /// Thurston-Bennequin number, selects the Legendrian table
    #[arg(long, requires = "rot", allow_hyphen_values = true)]
    pub tb: Option<i64>,
    /// Rotation number, selects the Legendrian table
    #[arg(long, requires = "tb", allow_hyphen_values = true)]
    pub rot: Option<i64>,
    /// List the available names instead
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug)]
pub struct SimplifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// low, default, high or ROUNDS:WALK
    #[arg(long, default_value = "default")]
    pub effort: String,
    #[arg(long, value_enum, default_value_t = Mode::Topological)]
    pub mode: Mode,
    /// Random seed, echoed on standard error
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ScrambleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 30)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Mode::Topological)]
    pub mode: Mode,
    /// Random seed, echoed on standard error
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Topological,
    Legendrian,
    Transverse,
}

impl From<Mode> for MoveMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Topological => MoveMode::Topological,
            Mode::Legendrian => MoveMode::Legendrian,
            Mode::Transverse => MoveMode::Transverse,
        }
    }
}

#[derive(Args, Debug)]
pub struct MovesArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Also list crossing changes and band moves
    #[arg(long)]
    pub link_changing: bool,
    /// Apply this move (JSON, as listed) and print the resulting grid
    #[arg(long, value_name = "MOVE")]
    pub apply: Option<String>,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub op: TransformOp,
    /// Second grid for union and sum
    #[arg(long, value_name = "FILE", required_if_eq_any = [("op", "union"), ("op", "sum")])]
    pub with: Option<PathBuf>,
    /// Number of copies for cable
    #[arg(short, default_value_t = 2)]
    pub k: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TransformOp {
    Mirror,
    Rotate,
    RotateHalf,
    Invert,
    Union,
    Sum,
    Cable,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub to: Target,
    /// Simplify the grid before reading off the braid
    #[arg(long)]
    pub simplify_first: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Target {
    Braid,
    Gauss,
}

#[derive(Args, Debug)]
pub struct DrawArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Cell size in pixels for SVG
    #[arg(long, default_value_t = 24)]
    pub cell: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[arg(long, default_value_t = 10)]
    pub n_min: usize,
    #[arg(long, default_value_t = 60)]
    pub n_max: usize,
    #[arg(long, default_value_t = 10)]
    pub step: usize,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Random seed, echoed on standard error
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV destination; standard output when missing
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory for one SVG plot per panel
    #[arg(long, value_name = "DIR")]
    pub plot: Option<PathBuf>,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_grid(&mut self, input: &InputArgs) -> Result<GridDiagram> {
        let text = match input.input.as_deref() {
            None => read_all(self.stdin)?,
            Some(p) if p == Path::new("-") => read_all(self.stdin)?,
            Some(p) => std::fs::read_to_string(p)?,
        };
        Ok(decode_named(&text)?.1)
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn seed(&mut self, seed: u64) -> Result<()> {
        writeln!(self.err, "seed: {seed}")?;
        Ok(())
    }
}

fn read_all(r: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    r.read_to_string(&mut s)?;
    Ok(s)
}

/// Runs the tool on `args` (program name first). Returns the exit status:
/// 0 on success, 2 on a usage error, 1 when the library reports an error.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    2
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match execute(cli.command, &mut io) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.err, "error: {}: {e}", e.name());
            1
        }
    }
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<()> {
    match cmd {
        Command::Generate(a) => generate(a, io),
        Command::Load(a) => {
            if a.list {
                for name in available_knots() {
                    io.line(name)?;
                }
                for e in available_legendrian_knots() {
                    io.line(&format!("{} tb={} rot={}", e.name, e.tb, e.rot))?;
                }
                return Ok(());
            }
            let name = a.name.expect("clap requires a name without --list");
            let g = match (a.tb, a.rot) {
                (Some(tb), Some(rot)) => load_legendrian_knot(&name, tb, rot)?,
                _ => load_knot(&name)?,
            };
            io.line(&g.to_json_named(Some(&name)))
        }
        Command::Simplify(a) => {
            let g = io.read_grid(&a.input)?;
            let effort = EffortSpec::parse(&a.effort, a.seed)?;
            io.seed(a.seed)?;
            io.line(&simplify_grid(&g, &effort, a.mode.into()).to_json())
        }
        Command::Scramble(a) => {
            let g = io.read_grid(&a.input)?;
            io.seed(a.seed)?;
            io.line(&scramble_grid(&g, a.steps, a.mode.into(), a.seed).to_json())
        }
        Command::Moves(a) => {
            let g = io.read_grid(&a.input)?;
            match a.apply {
                Some(text) => {
                    let m: Move = serde_json::from_str(&text)?;
                    io.line(&m.apply(&g)?.to_json())
                }
                None => {
                    let opts = MoveOptions {
                        include_link_changing: a.link_changing,
                    };
                    for m in legal_moves(&g, opts) {
                        io.line(&serde_json::to_string(&m)?)?;
                    }
                    Ok(())
                }
            }
        }
        Command::Invariants(a) => {
            let g = io.read_grid(&a)?;
            io.line(&serde_json::to_string(&InvariantReport::of(&g))?)
        }
        Command::Transform(a) => {
            let g = io.read_grid(&a.input)?;
            let other = |p: &Option<PathBuf>| -> Result<GridDiagram> {
                let p = p.as_ref().expect("clap requires --with");
                Ok(decode_named(&std::fs::read_to_string(p)?)?.1)
            };
            let out = match a.op {
                TransformOp::Mirror => mirror_grid(&g),
                TransformOp::Rotate => rotate(&g),
                TransformOp::RotateHalf => rotate_half(&g),
                TransformOp::Invert => invert_orientation(&g),
                TransformOp::Union => disjoint_union(&g, &other(&a.with)?),
                TransformOp::Sum => connected_sum(&g, &other(&a.with)?),
                TransformOp::Cable => parallel_copies(&g, a.k)?,
            };
            io.line(&out.to_json())
        }
        Command::Convert(a) => {
            let g = io.read_grid(&a.input)?;
            let text = match a.to {
                Target::Braid => convert_to_braid(&g, a.simplify_first).to_string(),
                Target::Gauss => gauss_code(&g).to_string(),
            };
            io.line(&text)
        }
        Command::Draw(a) => {
            let g = io.read_grid(&a.input)?;
            let text = match a.format {
                Format::Ascii => draw_ascii(&g),
                Format::Svg => draw_svg(&g, a.cell)?,
            };
            write!(io.out, "{text}")?;
            Ok(())
        }
        Command::Stats(a) => {
            io.seed(a.seed)?;
            let recs = run_experiment(a.n_min, a.n_max, a.step, a.samples, a.seed)?;
            match &a.out {
                Some(p) => write_csv(&recs, std::fs::File::create(p)?)?,
                None => write_csv(&recs, &mut *io.out)?,
            }
            if let Some(dir) = &a.plot {
                write_plots(&recs, dir)?;
            }
            Ok(())
        }
    }
}

fn generate(a: GenerateArgs, io: &mut Io<'_>) -> Result<()> {
    if a.random {
        let n = a.n.expect("clap requires -n with --random");
        let mut spec = RandomSpec::new(n, a.seed);
        spec.components = a.components;
        io.seed(a.seed)?;
        if a.count == 1 {
            return io.line(&generate_random_grid(&spec)?.to_json());
        }
        if a.count == 0 {
            return Err(Error::InvalidArgument("count must be at least 1".into()));
        }
        let grids = generate_grid_list_with(&spec, a.count)?;
        write!(io.out, "{}", encode_jsonl(&grids))?;
        return Ok(());
    }
    let g = if let Some(n) = a.unknot {
        generate_unknot(n)?
    } else if let Some(k) = a.unlink {
        generate_unlink(k)?
    } else if let Some(pq) = a.torus {
        generate_torus_link(pq[0], pq[1])?
    } else if let Some(k) = a.twist {
        let clasp = match a.clasp {
            Clasp::Positive => ClaspSign::Positive,
            Clasp::Negative => ClaspSign::Negative,
        };
        generate_twist_knot(k, clasp)?
    } else {
        unreachable!("clap requires one generator")
    };
    io.line(&g.to_json())
}
