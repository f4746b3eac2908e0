//! Scramble the unknot and simplify it back, in each mode.

use gridknot::generators::generate_unknot;
use gridknot::invariants::{rotation_number, self_linking, thurston_bennequin};
use gridknot::simplify::{destabilize_all, scramble_grid, simplify_grid, EffortSpec, MoveMode};

fn main() -> gridknot::Result<()> {
    let u = generate_unknot(2)?;
    for mode in [
        MoveMode::Topological,
        MoveMode::Legendrian,
        MoveMode::Transverse,
    ] {
        let s = scramble_grid(&u, 30, mode, 1);
        let back = simplify_grid(&s, &EffortSpec::parse("high", 1)?, mode);
        println!(
            "{mode:?}: 2 -> {} -> {}  (tb, rot, sl) {:?} -> {:?}",
            s.grid_number(),
            back.grid_number(),
            (
                thurston_bennequin(&s),
                rotation_number(&s),
                self_linking(&s)
            ),
            (
                thurston_bennequin(&back),
                rotation_number(&back),
                self_linking(&back)
            ),
        );
    }

    let staircase = generate_unknot(25)?;
    println!(
        "destabilize_all on a 25 staircase: {}",
        destabilize_all(&staircase)
    );
    Ok(())
}
