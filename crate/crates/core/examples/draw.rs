//! Text and SVG pictures. Writes `trefoil.svg` to the directory given as the
//! first argument, or the system temp directory.

use gridknot::generators::load_knot;
use gridknot::render::{draw_ascii, draw_svg};

fn main() -> gridknot::Result<()> {
    let g = load_knot("3_1")?;
    print!("{}", draw_ascii(&g));
    let dir = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(std::env::temp_dir);
    let path = std::path::Path::new(&dir).join("trefoil.svg");
    std::fs::write(&path, draw_svg(&g, 32)?)?;
    println!("wrote {}", path.display());
    Ok(())
}
