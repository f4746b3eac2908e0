mod common;

use gridknot::convert::{convert_to_braid, gauss_code, grid_from_braid, BraidWord};
use gridknot::grid::{decode_jsonl, encode_jsonl};
use gridknot::invariants::{
    crossing_number, grid_length, number_of_components, rotation_number, thurston_bennequin, writhe,
};
use gridknot::moves::legal_moves;
use gridknot::render::{draw_ascii, draw_svg};
use gridknot::simplify::{destabilize_all, scramble_grid, simplify_grid, EffortSpec, MoveMode};
use gridknot::transforms::*;
use gridknot::GridDiagram;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_round_trip(g in common::arb_grid(16)) {
        let text = g.to_json();
        prop_assert_eq!(GridDiagram::from_json(&text).unwrap(), g.clone());
        prop_assert_eq!(GridDiagram::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn jsonl_round_trip(gs in prop::collection::vec(common::arb_grid(8), 0..6)) {
        let back: Vec<GridDiagram> = decode_jsonl(&encode_jsonl(&gs)).unwrap().into_iter().map(|p| p.1).collect();
        prop_assert_eq!(back, gs);
    }

    #[test]
    fn segments_have_marking_gaps(g in common::arb_grid(16)) {
        let segs = g.segments();
        prop_assert_eq!(segs.len(), 2 * g.grid_number());
        let total: usize = segs.iter().map(|s| s.len()).sum();
        prop_assert_eq!(total, grid_length(&g));
    }

    #[test]
    fn symmetries(g in common::arb_grid(14)) {
        let w = writhe(&g);
        let k = number_of_components(&g);
        prop_assert_eq!(invert_orientation(&invert_orientation(&g)), g.clone());
        prop_assert_eq!(writhe(&invert_orientation(&g)), w);
        prop_assert_eq!(grid_length(&invert_orientation(&g)), grid_length(&g));
        prop_assert_eq!(mirror_grid(&mirror_grid(&g)), g.clone());
        prop_assert_eq!(writhe(&mirror_grid(&g)), -w);
        let r = rotate(&g);
        prop_assert_eq!(writhe(&r), -w);
        prop_assert_eq!(common::components(&r), k);
        prop_assert_eq!(rotate(&rotate(&rotate(&r))), g.clone());
        prop_assert_eq!(common::writhe(&rotate_half(&g)), w);
    }

    #[test]
    fn union_and_sum_laws(a in common::arb_grid(9), b in common::arb_grid(9)) {
        let u = disjoint_union(&a, &b);
        prop_assert_eq!(common::components(&u), common::components(&a) + common::components(&b));
        prop_assert_eq!(common::writhe(&u), common::writhe(&a) + common::writhe(&b));
        prop_assert_eq!(common::crossings(&u).len(), common::crossings(&a).len() + common::crossings(&b).len());
        let s = connected_sum(&a, &b);
        prop_assert_eq!(s.grid_number(), a.grid_number() + b.grid_number());
        prop_assert_eq!(common::components(&s), common::components(&a) + common::components(&b) - 1);
        prop_assert_eq!(common::writhe(&s), common::writhe(&a) + common::writhe(&b));
    }

    #[test]
    fn cables_of_knots(g in common::arb_grid(8), k in 1usize..4) {
        let c = parallel_copies(&g, k).unwrap();
        prop_assert_eq!(c.grid_number(), k * g.grid_number());
        prop_assert_eq!(common::components(&c), k * common::components(&g));
    }

    #[test]
    fn every_listed_move_is_valid(g in common::arb_grid(7)) {
        for m in legal_moves(&g, Default::default()) {
            let h = m.apply(&g).unwrap();
            prop_assert_eq!(GridDiagram::new(h.xs().to_vec(), h.os().to_vec()).unwrap(), h.clone());
            prop_assert_eq!(common::components(&h), common::components(&g), "{:?}", m);
        }
    }

    #[test]
    fn destabilize_all_is_a_fixed_point(g in common::arb_grid(14)) {
        let d = destabilize_all(&g);
        prop_assert_eq!(destabilize_all(&d), d.clone());
        prop_assert!(d.grid_number() <= g.grid_number());
        prop_assert_eq!(common::components(&d), common::components(&g));
        let short = g.xs().iter().zip(g.os()).any(|(x, o)| x.abs_diff(*o) == 1);
        if g.grid_number() > 2 && common::components(&g) == 1 && short {
            prop_assert!(d.grid_number() < g.grid_number());
        }
    }

    #[test]
    fn simplify_keeps_components(g in common::arb_grid(12), seed in 0u64..1000) {
        let s = simplify_grid(&g, &EffortSpec::parse("2:40", seed).unwrap(), MoveMode::Topological);
        prop_assert!(s.grid_number() <= g.grid_number());
        prop_assert_eq!(common::components(&s), common::components(&g));
    }

    #[test]
    fn legendrian_simplify_keeps_tb_and_rot(g in common::arb_grid(10), seed in 0u64..1000) {
        let s = simplify_grid(&g, &EffortSpec::parse("2:40", seed).unwrap(), MoveMode::Legendrian);
        prop_assert_eq!(thurston_bennequin(&s), thurston_bennequin(&g));
        prop_assert_eq!(rotation_number(&s), rotation_number(&g));
    }

    #[test]
    fn scramble_keeps_components(g in common::arb_grid(8), seed in 0u64..1000, steps in 0usize..20) {
        let s = scramble_grid(&g, steps, MoveMode::Topological, seed);
        prop_assert_eq!(common::components(&s), common::components(&g));
        prop_assert_eq!(s.clone(), scramble_grid(&g, steps, MoveMode::Topological, seed));
    }

    #[test]
    fn braid_closure_components(g in common::arb_grid(14)) {
        let w = convert_to_braid(&g, false);
        prop_assert_eq!(w.closure_components(), common::components(&g));
        prop_assert_eq!(convert_to_braid(&g, true).closure_components(), common::components(&g));
    }

    #[test]
    fn braid_round_trip(letters in prop::collection::vec((1i32..5, any::<bool>()), 0..12)) {
        let letters: Vec<i32> = letters.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
        let w = BraidWord::new(letters, 5).unwrap();
        let g = grid_from_braid(&w).unwrap();
        prop_assert_eq!(convert_to_braid(&g, false), w.clone());
        prop_assert_eq!(common::writhe(&g), w.exponent_sum());
    }

    #[test]
    fn gauss_code_well_formed(g in common::arb_grid(14)) {
        let gc = gauss_code(&g);
        let m = crossing_number(&g);
        prop_assert_eq!(gc.signs.len(), m);
        prop_assert_eq!(gc.components.len(), common::components(&g));
        prop_assert_eq!(gc.signs.iter().map(|&s| s as i64).sum::<i64>(), common::writhe(&g));
        let mut seen = vec![(0, 0); m + 1];
        for &l in gc.components.iter().flatten() {
            let e = &mut seen[l.unsigned_abs() as usize];
            if l > 0 { e.0 += 1 } else { e.1 += 1 }
        }
        prop_assert!(seen[1..].iter().all(|&e| e == (1, 1)));
    }

    #[test]
    fn pictures_count_crossings(g in common::arb_grid(14)) {
        let m = common::crossings(&g).len();
        let a = draw_ascii(&g);
        prop_assert_eq!(a.matches('+').count(), m);
        prop_assert_eq!(a.matches('X').count() + a.matches('O').count(), 2 * g.grid_number());
        let svg = draw_svg(&g, 8).unwrap();
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let pieces = doc.descendants().filter(|n| n.attribute("class") == Some("h")).count();
        prop_assert_eq!(pieces - g.grid_number(), m);
    }

    #[test]
    fn shifts_keep_tb_and_rot(g in common::arb_grid(14)) {
        for axis in [gridknot::Axis::Rows, gridknot::Axis::Columns] {
            for dir in [1, -1] {
                let h = gridknot::moves::cyclic_shift(&g, axis, dir);
                prop_assert_eq!(thurston_bennequin(&h), thurston_bennequin(&g));
                prop_assert_eq!(rotation_number(&h), rotation_number(&g));
                prop_assert!((common::writhe(&h) - common::writhe(&g)).abs() <= 1);
            }
        }
    }

    #[test]
    fn knots_have_odd_tb_plus_rot(g in common::arb_grid(14)) {
        prop_assume!(common::components(&g) == 1);
        let (tb, r) = (thurston_bennequin(&g), rotation_number(&g));
        prop_assert_eq!((tb + r).rem_euclid(2), 1);
        prop_assert_eq!((tb - r).rem_euclid(2), 1);
    }
}
