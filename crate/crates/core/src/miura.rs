//! Bijection between locally flat-foldable MV-assignments of the m×n
//! Miura-ori and proper 3-colorings of the m×n grid graph with the
//! upper-left cell colored 0.
//!
//! Every grid edge `a -> b` (left to right, or top to bottom) carries a
//! crease, and the coloring satisfies `c(b) - c(a) = σ(edge) · μ(crease)`
//! in Z₃. The sign σ depends on the edge direction and the parity of its
//! row and column; [`SignTable::FROZEN`] is the convention under which the
//! correspondence is a bijection for the pointing-left orientation.

use std::fmt;

use thiserror::Error;

use crate::generators::{gen_miura, GridEdge, MiuraOrientation, MiuraPattern, DEFAULT_MIURA_ANGLE};
use crate::local::{classify_degree4, vertex_valid_assignments, Degree4Class};
use crate::model::{vertex_star, CreaseId, CreasePattern, Mv, MvAssignment, VertexId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MiuraError {
    #[error("the bijection needs the top crease row pointing left")]
    Orientation,
    #[error("assignment does not label every crease")]
    NotTotal,
    #[error("assignment does not fold flat at vertex {0}")]
    NotLocallyValid(VertexId),
    #[error("coloring is not proper with the upper-left cell colored 0")]
    NotProper,
    #[error("coloring is {found_rows}x{found_cols}, expected {rows}x{cols}")]
    Dimensions { rows: usize, cols: usize, found_rows: usize, found_cols: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("pattern is not a Miura-ori produced by the generator")]
    NotMiura,
}

/// A Z₃ coloring of the cells of an m×n grid, row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridColoring {
    pub rows: usize,
    pub cols: usize,
    colors: Vec<u8>,
}

impl GridColoring {
    pub fn new(rows: usize, cols: usize, colors: Vec<u8>) -> Option<GridColoring> {
        (rows > 0 && cols > 0 && colors.len() == rows * cols && colors.iter().all(|&c| c < 3))
            .then_some(GridColoring { rows, cols, colors })
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.colors[row * self.cols + col]
    }

    fn set(&mut self, (row, col): (usize, usize), color: u8) {
        self.colors[row * self.cols + col] = color;
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Parses rows of digits `0`–`2`, one row per line, no separators.
    pub fn parse(text: &str) -> Result<GridColoring, MiuraError> {
        let mut rows = 0;
        let mut cols = 0;
        let mut colors = Vec::new();
        let lines: Vec<&str> = text.lines().collect();
        let end = lines.iter().rposition(|l| !l.trim().is_empty()).map_or(0, |i| i + 1);
        for (i, line) in lines[..end].iter().enumerate() {
            let line = line.trim_end_matches('\r');
            let parse_err = |message: String| MiuraError::Parse { line: i + 1, message };
            if line.is_empty() {
                return Err(parse_err("empty row".into()));
            }
            for ch in line.chars() {
                match ch.to_digit(10) {
                    Some(d) if d < 3 => colors.push(d as u8),
                    _ => return Err(parse_err(format!("invalid color {ch:?}"))),
                }
            }
            let width = line.chars().count();
            if rows > 0 && width != cols {
                return Err(parse_err(format!("row has {width} cells, expected {cols}")));
            }
            cols = width;
            rows += 1;
        }
        GridColoring::new(rows, cols, colors).ok_or(MiuraError::Parse { line: 1, message: "empty grid".into() })
    }
}

impl fmt::Display for GridColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.colors.chunks(self.cols) {
            for c in row {
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Proper (adjacent cells differ) with the upper-left cell colored 0.
pub fn is_proper(c: &GridColoring) -> bool {
    c.get(0, 0) == 0 && grid_edges(c.rows, c.cols).all(|e| {
        let (a, b) = e.cells();
        c.get(a.0, a.1) != c.get(b.0, b.1)
    })
}

fn grid_edges(rows: usize, cols: usize) -> impl Iterator<Item = GridEdge> {
    (0..rows).flat_map(move |row| {
        let h = (0..cols.saturating_sub(1)).map(move |col| GridEdge::Horizontal { row, col });
        let v = (0..cols).filter(move |_| row + 1 < rows).map(move |col| GridEdge::Vertical { row, col });
        h.chain(v)
    })
}

/// The boustrophedon path through the grid plus the vertical edges it
/// does not use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagOrder {
    pub path: Vec<(usize, usize)>,
    /// `path_edges[i]` joins `path[i]` and `path[i + 1]`.
    pub path_edges: Vec<GridEdge>,
    pub off_path: Vec<GridEdge>,
}

pub fn zigzag_order(rows: usize, cols: usize) -> ZigzagOrder {
    let mut path = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        if r % 2 == 0 {
            path.extend((0..cols).map(|c| (r, c)));
        } else {
            path.extend((0..cols).rev().map(|c| (r, c)));
        }
    }
    let path_edges: Vec<GridEdge> =
        path.windows(2).map(|w| GridEdge::between(w[0], w[1]).expect("path steps are grid-adjacent")).collect();
    let off_path = grid_edges(rows, cols).filter(|e| !path_edges.contains(e)).collect();
    ZigzagOrder { path, path_edges, off_path }
}

/// σ for every edge class: `[direction][row parity][column parity]`, with
/// direction 0 for horizontal and 1 for vertical edges, `true` meaning +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignTable(pub [[[bool; 2]; 2]; 2]);

impl SignTable {
    /// Horizontal edges in even rows and all vertical edges take +1;
    /// horizontal edges in odd rows take −1. Along the zig-zag path this is
    /// exactly `c(v_i) = c(v_{i-1}) + μ(c_i)`, and an off-path edge
    /// satisfies `c(lower) - c(upper) = μ`.
    pub const FROZEN: SignTable = SignTable([[[true, true], [false, false]], [[true, true], [true, true]]]);

    pub fn sign(&self, edge: GridEdge) -> i32 {
        let (dir, row, col) = match edge {
            GridEdge::Horizontal { row, col } => (0, row, col),
            GridEdge::Vertical { row, col } => (1, row, col),
        };
        if self.0[dir][row % 2][col % 2] {
            1
        } else {
            -1
        }
    }

    /// All 256 candidate tables.
    pub fn all() -> impl Iterator<Item = SignTable> {
        (0..256u32).map(|bits| {
            SignTable(std::array::from_fn(|d| {
                std::array::from_fn(|r| std::array::from_fn(|c| bits >> (d * 4 + r * 2 + c) & 1 == 1))
            }))
        })
    }
}

fn z3(x: i32) -> u8 {
    x.rem_euclid(3) as u8
}

/// The coloring obtained by walking the zig-zag path; no validity checks.
pub fn mv_to_coloring_with(table: &SignTable, mp: &MiuraPattern, mv: &MvAssignment) -> Option<GridColoring> {
    let order = zigzag_order(mp.rows, mp.cols);
    let mut c = GridColoring { rows: mp.rows, cols: mp.cols, colors: vec![0; mp.rows * mp.cols] };
    for (i, &edge) in order.path_edges.iter().enumerate() {
        let label = mv.get(mp.crease_for(edge)?)?;
        let (from, to) = (order.path[i], order.path[i + 1]);
        // the edge's own direction runs left to right / top to bottom
        let forward = edge.cells().0 == from;
        let step = table.sign(edge) * label.sign() * if forward { 1 } else { -1 };
        let prev = c.get(from.0, from.1) as i32;
        c.set(to, z3(prev + step));
    }
    Some(c)
}

/// The assignment read off color differences; `None` if some adjacent
/// cells share a color.
pub fn coloring_to_mv_with(table: &SignTable, mp: &MiuraPattern, c: &GridColoring) -> Option<MvAssignment> {
    mp.grid_edges()
        .map(|(edge, crease)| {
            let (a, b) = edge.cells();
            let diff = c.get(b.0, b.1) as i32 - c.get(a.0, a.1) as i32;
            let mv = match z3(diff * table.sign(edge)) {
                1 => Mv::Mountain,
                2 => Mv::Valley,
                _ => return None,
            };
            Some((crease, mv))
        })
        .collect()
}

/// Interior vertex of `pattern` where `mv` fails, if any.
pub fn first_invalid_vertex(pattern: &CreasePattern, mv: &MvAssignment) -> Option<VertexId> {
    pattern.interior_vertices().map(|v| v.id).find(|&v| {
        let Ok(star) = vertex_star(pattern, v) else { return true };
        let Ok(valid) = vertex_valid_assignments(&star) else { return true };
        let tuple: Option<Vec<Mv>> = star.creases.iter().map(|&c| mv.get(c)).collect();
        match tuple.as_deref() {
            Some(&[a, b, c, d]) => !valid.contains(&[a, b, c, d]),
            _ => true,
        }
    })
}

pub fn mv_to_coloring(mp: &MiuraPattern, mv: &MvAssignment) -> Result<GridColoring, MiuraError> {
    if mp.orientation != MiuraOrientation::PointingLeft {
        return Err(MiuraError::Orientation);
    }
    if !mv.is_total_for(&mp.base) {
        return Err(MiuraError::NotTotal);
    }
    if let Some(v) = first_invalid_vertex(&mp.base, mv) {
        return Err(MiuraError::NotLocallyValid(v));
    }
    let c = mv_to_coloring_with(&SignTable::FROZEN, mp, mv).expect("assignment is total");
    assert!(is_proper(&c), "locally valid Miura assignment produced an improper coloring");
    Ok(c)
}

/// The assignment of `gen_miura(rows, cols, 60°)` corresponding to `c`.
pub fn coloring_to_mv(rows: usize, cols: usize, c: &GridColoring) -> Result<MvAssignment, MiuraError> {
    if (c.rows, c.cols) != (rows, cols) {
        return Err(MiuraError::Dimensions { rows, cols, found_rows: c.rows, found_cols: c.cols });
    }
    if !is_proper(c) {
        return Err(MiuraError::NotProper);
    }
    let mp = gen_miura(rows, cols, DEFAULT_MIURA_ANGLE).expect("coloring dimensions are positive");
    let mv = coloring_to_mv_with(&SignTable::FROZEN, &mp, c).expect("coloring is proper");
    assert!(first_invalid_vertex(&mp.base, &mv).is_none(), "proper coloring produced an assignment that does not fold flat");
    Ok(mv)
}

/// Identifies a parsed pattern as a generated Miura-ori: the same vertex
/// ids, the same crease ids and endpoints, and the same crease between the
/// obtuse angles at every interior vertex as a pointing-left
/// `gen_miura(m, n, α)`. Returns that generated pattern, whose crease ids
/// match the input's.
pub fn recognize_miura(pattern: &CreasePattern) -> Result<MiuraPattern, MiuraError> {
    let e = pattern.creases().len();
    for rows in 1..=e + 1 {
        for cols in 1..=e + 1 {
            if rows * (cols - 1) + (rows - 1) * cols != e {
                continue;
            }
            let mp = gen_miura(rows, cols, DEFAULT_MIURA_ANGLE).expect("positive dimensions");
            if same_combinatorics(&mp.base, pattern) {
                return if same_fold_axes(&mp.base, pattern) { Ok(mp) } else { Err(MiuraError::Orientation) };
            }
        }
    }
    Err(MiuraError::NotMiura)
}

fn same_combinatorics(a: &CreasePattern, b: &CreasePattern) -> bool {
    let key = |p: &CreasePattern| -> Vec<(CreaseId, (VertexId, VertexId))> {
        p.creases().iter().map(|c| (c.id, (c.endpoints.0.min(c.endpoints.1), c.endpoints.0.max(c.endpoints.1)))).collect()
    };
    let ids = |p: &CreasePattern| -> Vec<(VertexId, bool)> {
        p.vertices().iter().map(|v| (v.id, p.incident(v.id).len() == 4)).collect()
    };
    key(a) == key(b) && ids(a) == ids(b)
}

fn e4_crease(pattern: &CreasePattern, v: VertexId) -> Option<CreaseId> {
    let star = vertex_star(pattern, v).ok()?;
    match classify_degree4(&star).ok()? {
        Degree4Class::DoubleMin { e4 } => Some(star.creases[e4]),
        _ => None,
    }
}

fn same_fold_axes(reference: &CreasePattern, pattern: &CreasePattern) -> bool {
    reference.interior_vertices().all(|v| {
        let expected = e4_crease(reference, v.id);
        expected.is_some() && e4_crease(pattern, v.id) == expected
    })
}
