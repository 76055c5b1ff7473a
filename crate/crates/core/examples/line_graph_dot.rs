//! Build the constraint graph of one square twist and print it in DOT.
//!
//!     cargo run --example line_graph_dot | dot -Tsvg > twist.svg

use origami_mv::generators::gen_square_twist;
use origami_mv::line_graph::{build_line_graph, Relation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let twist = gen_square_twist(1, 1)?;
    let lg = build_line_graph(&twist.base)?;
    for c in lg.constraints() {
        let kind = match c.relation {
            Relation::Same => "same",
            Relation::Different => "different",
        };
        let note = if c.applied { "" } else { " (skipped)" };
        eprintln!("{kind} {} {}{note}", c.pair.first(), c.pair.second());
    }
    eprintln!("two-colorable: {}, components: {}", lg.two_colorable(), lg.component_count());
    print!("{}", lg.to_dot());
    Ok(())
}
