//! Braid words and Gauss codes, in the text forms other tools read.

use gridknot::convert::*;
use gridknot::generators::load_knot;

fn main() -> gridknot::Result<()> {
    for name in ["3_1", "4_1", "7_3"] {
        let g = load_knot(name)?;
        let w = convert_to_braid(&g, true);
        println!(
            "{name}: braid on {} strands {w} ({} crossings)",
            w.strands,
            count_crossings_braid(&w)
        );
        println!("{name}: gauss {}", gauss_code(&g));
    }

    let w = BraidWord::from_letters(vec![1, -2, 1, -2])?;
    let g = grid_from_braid(&w)?;
    println!("grid for {w}: {g}");
    assert_eq!(convert_to_braid(&g, false), w);
    Ok(())
}
