//! Walk every valid assignment of a 3×3 Miura-ori through the bijection
//! with 3-colorings of the face grid and back.

use origami_mv::enumerate::enumerate_mv;
use origami_mv::generators::gen_miura;
use origami_mv::miura::{coloring_to_mv, is_proper, mv_to_coloring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let miura = gen_miura(3, 3, 60.0)?;
    let all = enumerate_mv(&miura.base, None)?;
    for (i, mv) in all.iter().enumerate() {
        let coloring = mv_to_coloring(&miura, mv)?;
        assert!(is_proper(&coloring));
        assert_eq!(&coloring_to_mv(3, 3, &coloring)?, mv);
        if i < 3 {
            println!("{coloring}");
        }
    }
    println!("{} assignments, each mapped to a distinct coloring and back", all.len());
    Ok(())
}
