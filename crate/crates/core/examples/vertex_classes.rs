//! The three kinds of flat-foldable degree-4 vertex and the assignments
//! each one admits.

use origami_mv::local::{blb_pairs, classify_degree4, degree4_forced_same, vertex_valid_assignments};
use origami_mv::model::{Mv, VertexStar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for angles in [[60.0, 100.0, 120.0, 80.0], [60.0, 60.0, 120.0, 120.0], [90.0; 4]] {
        let star = VertexStar::from_angles(&angles)?;
        println!("angles {angles:?}: {:?}", classify_degree4(&star)?);
        println!("  different: {:?}", blb_pairs(&star));
        println!("  same:      {:?}", degree4_forced_same(&star)?);
        for t in vertex_valid_assignments(&star)? {
            println!("  {}", t.iter().copied().map(Mv::letter).collect::<String>());
        }
    }
    Ok(())
}
