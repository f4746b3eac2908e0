//! Cromwell moves and the link-changing moves, one at a time.

use gridknot::generators::{generate_unknot, load_knot};
use gridknot::invariants::{number_of_components, writhe};
use gridknot::moves::*;
use gridknot::{Axis, Marking};

fn main() -> gridknot::Result<()> {
    let u = generate_unknot(2)?;
    for m in legal_moves(&u, MoveOptions::default()).iter().take(6) {
        println!("{}", serde_json::to_string(m).unwrap());
    }

    let s = stabilize(&u, 0, Marking::X, Corner::NE)?;
    println!("stabilized: {s}");
    println!("destabilization sites: {:?}", destabilization_blocks(&s));
    let (r, c) = destabilization_blocks(&s)[0];
    println!("destabilized back: {}", destabilize(&s, r, c)?);

    let t = load_knot("5_2")?;
    println!("shifted 5_2: {}", cyclic_shift(&t, Axis::Columns, 1));
    for i in 0..t.grid_number() - 1 {
        let rel = classify_adjacent(&t, Axis::Rows, i)?;
        print!("rows {i},{}: {rel:?}", i + 1);
        if rel == Relation::Interleaved {
            let h = crossing_change(&t, Axis::Rows, i)?;
            print!(
                " -> crossing change, writhe {} -> {}",
                writhe(&t),
                writhe(&h)
            );
        }
        println!();
    }

    let opts = MoveOptions {
        include_link_changing: true,
    };
    for (m, h) in perform_all_moves(&t, true) {
        if let Move::BandMove { class, .. } = m {
            println!(
                "{class:?} band: {} -> {} components",
                number_of_components(&t),
                number_of_components(&h)
            );
        }
    }
    println!(
        "{} moves in total with link-changing ones",
        legal_moves(&t, opts).len()
    );
    Ok(())
}
