//! Building new links from old ones.

use gridknot::generators::{generate_torus_link, load_knot};
use gridknot::invariants::{number_of_components, writhe};
use gridknot::render::draw_ascii;
use gridknot::transforms::*;

fn main() -> gridknot::Result<()> {
    let t = generate_torus_link(2, 3)?;
    let e = load_knot("4_1")?;
    let show = |name: &str, g: &gridknot::GridDiagram| {
        println!(
            "{name}: n = {}, components {}, writhe {}",
            g.grid_number(),
            number_of_components(g),
            writhe(g)
        );
    };
    show("trefoil", &t);
    show("mirror", &mirror_grid(&t));
    show("rotate", &rotate(&t));
    show("inverted", &invert_orientation(&t));
    show("trefoil + figure eight", &disjoint_union(&t, &e));
    show("trefoil # figure eight", &connected_sum(&t, &e));
    let cable = parallel_copies(&t, 3)?;
    show("flat 3-cable", &cable);
    print!("{}", draw_ascii(&connected_sum(&t, &t)));
    Ok(())
}
