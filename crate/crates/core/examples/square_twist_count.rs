//! Count assignments of square-twist tessellations two ways: exhaustive
//! search and connected components of the line graph.

use std::time::Instant;

use origami_mv::enumerate::count_mv;
use origami_mv::generators::gen_square_twist;
use origami_mv::line_graph::build_line_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)] {
        let twist = gen_square_twist(m, n)?;
        let lg = build_line_graph(&twist.base)?;
        let by_components = lg.count_mv_by_components()?;
        let search = if twist.base.creases().len() <= 30 {
            let t = Instant::now();
            let c = count_mv(&twist.base)?;
            format!("{c} ({:.2?})", t.elapsed())
        } else {
            "too large".to_string()
        };
        println!(
            "{m}x{n}: {} creases, {} components, line graph {by_components}, search {search}",
            twist.base.creases().len(),
            lg.component_count()
        );
    }
    Ok(())
}
