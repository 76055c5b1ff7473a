//! Generate a small Miura-ori, write it as CPT with one valid assignment,
//! and read it back.

use origami_mv::cpt::{parse_cpt, serialize_cpt};
use origami_mv::enumerate::enumerate_mv;
use origami_mv::generators::gen_miura;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let miura = gen_miura(2, 2, 60.0)?;
    let mv = enumerate_mv(&miura.base, Some(1))?.remove(0);
    let text = serialize_cpt(&miura.base, Some(&mv))?;
    print!("{text}");

    let (pattern, back) = parse_cpt(&text)?;
    assert_eq!(pattern, miura.base);
    assert_eq!(back, mv);
    println!("# round trip ok: {} vertices, {} creases", pattern.vertices().len(), pattern.creases().len());
    Ok(())
}
