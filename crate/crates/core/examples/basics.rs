//! Build a grid from its marking lists, look at its segments and invariants,
//! and round-trip it through JSON.

use gridknot::invariants::{crossings, InvariantReport};
use gridknot::render::draw_ascii;
use gridknot::GridDiagram;

fn main() -> gridknot::Result<()> {
    let g = GridDiagram::new(vec![7, 2, 4, 5, 6, 1, 0, 3], vec![5, 6, 7, 0, 3, 4, 1, 2])?;
    print!("{}", draw_ascii(&g));

    for s in g.segments().iter().take(3) {
        println!("{s:?}");
    }
    for c in crossings(&g) {
        println!("crossing at row {} col {}, sign {:+}", c.row, c.col, c.sign);
    }
    println!("{:#?}", InvariantReport::of(&g));

    let text = g.to_json();
    println!("{text}");
    assert_eq!(GridDiagram::from_json(&text)?, g);

    match GridDiagram::new(vec![0, 1], vec![0, 1]) {
        Err(e) => println!("rejected: {} ({e})", e.name()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
