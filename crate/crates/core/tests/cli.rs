use std::path::PathBuf;

use gridknot::cli::run;
use gridknot::convert::{convert_to_braid, gauss_code};
use gridknot::generators::{generate_random_grid, load_knot, RandomSpec};
use gridknot::invariants::{rotation_number, thurston_bennequin, InvariantReport};
use gridknot::simplify::{scramble_grid, simplify_grid, EffortSpec, MoveMode};
use gridknot::stats::{run_experiment, to_csv, CSV_HEADER};
use gridknot::GridDiagram;

const SUBCOMMANDS: [&str; 10] = [
    "generate",
    "load",
    "simplify",
    "scramble",
    "moves",
    "invariants",
    "transform",
    "convert",
    "draw",
    "stats",
];

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str], stdin: &str) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gridknot").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "{name} differs from the golden file");
}

#[test]
fn help_is_frozen() {
    let mut text = call(&["--help"], "").stdout;
    for sub in SUBCOMMANDS {
        let o = call(&[sub, "--help"], "");
        assert_eq!(o.code, 0);
        text += &format!("\n==> {sub} --help\n{}", o.stdout);
    }
    check_golden("help.txt", &text);
}

#[test]
fn unknot_drawing_is_frozen() {
    let o = call(&["draw"], r#"{"x":[1,0],"o":[0,1]}"#);
    check_golden("unknot_2x2.txt", &o.stdout);
    let t = call(&["draw"], &load_knot("3_1").unwrap().to_json());
    check_golden("trefoil.txt", &t.stdout);
}

#[test]
fn generate_random_prints_one_grid() {
    let o = call(&["generate", "--random", "-n", "20", "--seed", "7"], "");
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 1);
    let g = GridDiagram::from_json(&o.stdout).unwrap();
    assert_eq!(g, generate_random_grid(&RandomSpec::new(20, 7)).unwrap());
    assert_eq!(o.stderr, "seed: 7\n");
    assert_eq!(
        call(&["generate", "--random", "-n", "20", "--seed", "7"], "").stdout,
        o.stdout
    );
}

#[test]
fn exit_codes() {
    assert_eq!(call(&[], "").code, 2);
    assert_eq!(call(&["generate"], "").code, 2);
    assert_eq!(call(&["draw", "--format", "png"], "").code, 2);
    let bad = call(&["invariants"], r#"{"x":[0,1],"o":[0,1]}"#);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.starts_with("error: Collision"));
    let missing = call(&["invariants"], r#"{"x":[1,0]}"#);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.starts_with("error: ParseError"));
    assert!(call(&["load", "9_99"], "")
        .stderr
        .starts_with("error: UnknownName"));
    assert!(call(
        &["draw", "--format", "svg", "--cell", "2"],
        r#"{"x":[1,0],"o":[0,1]}"#
    )
    .stderr
    .starts_with("error: InvalidArgument"));
}

#[test]
fn commands_match_library_calls() {
    let g = load_knot("5_2").unwrap();
    let input = g.to_json();
    let inv = call(&["invariants"], &input).stdout;
    assert_eq!(
        inv.trim(),
        serde_json::to_string(&InvariantReport::of(&g)).unwrap()
    );
    let braid = call(&["convert", "--to", "braid"], &input).stdout;
    assert_eq!(braid.trim(), convert_to_braid(&g, false).to_string());
    let gauss = call(&["convert", "--to", "gauss"], &input).stdout;
    assert_eq!(gauss.trim(), gauss_code(&g).to_string());
    let s = call(&["scramble", "--steps", "25", "--seed", "3"], &input).stdout;
    let lib = scramble_grid(&g, 25, MoveMode::Topological, 3);
    assert_eq!(s.trim(), lib.to_json());
    let simp = call(&["simplify", "--seed", "3"], &s).stdout;
    assert_eq!(
        simp.trim(),
        simplify_grid(&lib, &EffortSpec::new(3), MoveMode::Topological).to_json()
    );
    let moves = call(&["moves", "--link-changing"], &input).stdout;
    let first = moves.lines().next().unwrap();
    let applied = call(&["moves", "--apply", first], &input).stdout;
    assert_eq!(
        applied.trim(),
        gridknot::moves::cyclic_shift(&g, gridknot::Axis::Rows, 1).to_json()
    );
}

#[test]
fn legendrian_simplify_through_the_cli() {
    let u = load_knot("0_1").unwrap();
    let scrambled = call(
        &[
            "scramble",
            "--mode",
            "legendrian",
            "--steps",
            "30",
            "--seed",
            "5",
        ],
        &u.to_json(),
    )
    .stdout;
    let s = GridDiagram::from_json(&scrambled).unwrap();
    assert!(s.grid_number() > 2);
    let out = call(
        &["simplify", "--mode", "legendrian", "--seed", "5"],
        &scrambled,
    )
    .stdout;
    let t = GridDiagram::from_json(&out).unwrap();
    assert!(t.grid_number() < s.grid_number());
    assert_eq!(
        (thurston_bennequin(&t), rotation_number(&t)),
        (thurston_bennequin(&u), rotation_number(&u))
    );
}

#[test]
fn transforms_and_file_inputs() {
    let dir = std::env::temp_dir().join(format!("gridknot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    std::fs::write(&a, load_knot("3_1").unwrap().to_json_named(Some("3_1"))).unwrap();
    let a = a.to_str().unwrap();
    let sum = call(&["transform", a, "--op", "sum", "--with", a], "");
    assert_eq!(sum.code, 0);
    assert_eq!(
        GridDiagram::from_json(&sum.stdout).unwrap().grid_number(),
        10
    );
    assert_eq!(call(&["transform", a, "--op", "sum"], "").code, 2);
    let cable = call(&["transform", "--op", "cable", "-k", "3", a], "");
    assert_eq!(
        GridDiagram::from_json(&cable.stdout).unwrap().grid_number(),
        15
    );
    for op in ["mirror", "rotate", "rotate-half", "invert", "union"] {
        let o = call(&["transform", a, "--op", op, "--with", a], "");
        assert_eq!(o.code, 0, "{op}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn stats_writes_the_csv_schema() {
    let dir = std::env::temp_dir().join(format!("gridknot-stats-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("s.csv");
    let plots = dir.join("plots");
    let args = [
        "stats",
        "--n-min",
        "10",
        "--n-max",
        "60",
        "--step",
        "10",
        "--samples",
        "200",
        "--seed",
        "1",
        "--out",
        csv.to_str().unwrap(),
        "--plot",
        plots.to_str().unwrap(),
    ];
    let o = call(&args, "");
    assert_eq!(o.code, 0);
    assert_eq!(o.stderr, "seed: 1\n");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next().unwrap(), CSV_HEADER.join(","));
    assert_eq!(text.lines().count(), 7);
    assert_eq!(
        text,
        to_csv(&run_experiment(10, 60, 10, 200, 1).unwrap()).unwrap()
    );
    for entry in std::fs::read_dir(&plots).unwrap() {
        let svg = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        roxmltree::Document::parse(&svg).unwrap();
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn load_tables() {
    let list = call(&["load", "--list"], "").stdout;
    assert!(list.lines().any(|l| l == "8_21"));
    assert!(list.lines().any(|l| l == "m5_2 tb=-8 rot=1"));
    let o = call(&["load", "m3_1", "--tb", "-6", "--rot", "1"], "");
    assert_eq!(o.code, 0);
    let g = GridDiagram::from_json(&o.stdout).unwrap();
    assert_eq!((thurston_bennequin(&g), rotation_number(&g)), (-6, 1));
}
