//! Draw a 2×2 square-twist tessellation with one valid assignment.
//!
//!     cargo run --example render_svg > twist.svg

use origami_mv::enumerate::enumerate_mv;
use origami_mv::generators::gen_square_twist;
use origami_mv::svg::render_svg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let twist = gen_square_twist(2, 2)?;
    // 40 creases is past the exhaustive limit, so draw a single unit
    // assigned and the tessellation unassigned
    let unit = gen_square_twist(1, 1)?;
    let mv = enumerate_mv(&unit.base, Some(1))?.remove(0);
    if std::env::args().any(|a| a == "--tessellation") {
        print!("{}", render_svg(&twist.base, None));
    } else {
        print!("{}", render_svg(&unit.base, Some(&mv)));
    }
    Ok(())
}
