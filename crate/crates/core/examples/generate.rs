//! The grid families and tables that ship with the crate.

use gridknot::generators::*;
use gridknot::invariants::{number_of_components, rotation_number, thurston_bennequin, writhe};

fn main() -> gridknot::Result<()> {
    let g = generate_random_grid(&RandomSpec::new(12, 7))?;
    println!("random: {g} ({} components)", number_of_components(&g));

    let knot = generate_random_grid(&RandomSpec::new(12, 7).with_components(1))?;
    println!("random knot: {knot}");

    let list = generate_grid_list(20, 4, 42)?;
    assert_eq!(list[2], random_grid_at(20, 42, 2));

    for (p, q) in [(2, 3), (2, 4), (3, 4)] {
        let t = generate_torus_link(p, q)?;
        println!(
            "T({p},{q}): n = {}, {} components, writhe {}",
            t.grid_number(),
            number_of_components(&t),
            writhe(&t)
        );
    }
    let tw = generate_twist_knot(3, ClaspSign::Negative)?;
    println!("twist knot k=3: {tw}");

    println!("library: {}", available_knots().join(" "));
    println!("7_4 = {}", load_knot("7_4")?);
    for e in available_legendrian_knots() {
        let g = load_legendrian_knot(&e.name, e.tb, e.rot)?;
        assert_eq!((thurston_bennequin(&g), rotation_number(&g)), (e.tb, e.rot));
        println!("{:>5} tb={:>3} rot={:>2}  {}", e.name, e.tb, e.rot, g);
    }
    Ok(())
}
