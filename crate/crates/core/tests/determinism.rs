use gridknot::cli::run;
use gridknot::generators::{generate_grid_list, generate_grid_list_with, load_knot, RandomSpec};
use gridknot::simplify::{scramble_grid, simplify_grid, EffortSpec, MoveMode};
use gridknot::stats::{run_experiment, to_csv};

/// Everything randomized, rendered to one string.
pub fn fingerprint() -> String {
    let mut s = String::new();
    for g in generate_grid_list(15, 64, 11).unwrap() {
        s += &g.to_json();
    }
    for g in generate_grid_list_with(&RandomSpec::new(10, 12).with_components(2), 16).unwrap() {
        s += &g.to_json();
    }
    let k = load_knot("6_2").unwrap();
    for mode in [
        MoveMode::Topological,
        MoveMode::Legendrian,
        MoveMode::Transverse,
    ] {
        let sc = scramble_grid(&k, 40, mode, 13);
        s += &sc.to_json();
        s += &simplify_grid(&sc, &EffortSpec::new(14), mode).to_json();
    }
    s += &to_csv(&run_experiment(5, 25, 5, 40, 15).unwrap()).unwrap();
    for args in [
        &["generate", "--random", "-n", "30", "--seed", "16"][..],
        &[
            "generate",
            "--random",
            "-n",
            "12",
            "--count",
            "5",
            "--components",
            "3",
            "--seed",
            "17",
        ][..],
        &[
            "stats",
            "--n-min",
            "4",
            "--n-max",
            "12",
            "--step",
            "4",
            "--samples",
            "30",
            "--seed",
            "18",
        ][..],
    ] {
        let mut out = Vec::new();
        let argv = std::iter::once("gridknot").chain(args.iter().copied());
        assert_eq!(
            run(argv, &mut std::io::empty(), &mut out, &mut std::io::sink()),
            0
        );
        s += &String::from_utf8(out).unwrap();
    }
    s
}

fn in_pool(threads: usize) -> String {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(fingerprint)
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let one = in_pool(1);
    assert_eq!(one, in_pool(2));
    assert_eq!(one, in_pool(8));
    assert_eq!(one, fingerprint());
}
