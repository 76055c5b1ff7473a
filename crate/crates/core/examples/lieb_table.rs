//! Grid 3-coloring counts by transfer matrix, checked against exhaustive
//! counts on small grids, then the per-cell growth table.

use origami_mv::coloring::{count_colorings_brute, count_colorings_transfer, lieb_constant, lieb_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(2, 5), (3, 4), (4, 5)] {
        let brute = count_colorings_brute(m, n)?;
        assert_eq!(brute, count_colorings_transfer(m, n)?);
        println!("{m}x{n}: {brute}");
    }
    let w = lieb_constant();
    for row in lieb_table(14)? {
        println!("n={:2}  f={:.6}  W-f={:+.6}  count={}", row.n, row.f, w - row.f, row.count);
    }
    Ok(())
}
