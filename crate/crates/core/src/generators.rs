//! Parametric crease-pattern families: the m×n Miura-ori and the m×n
//! square-twist tessellation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{Crease, CreaseId, CreasePattern, Vertex, VertexId, VertexKind};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("dimensions must be positive, got {rows}x{cols}")]
    Dimensions { rows: usize, cols: usize },
    #[error("Miura angle must lie strictly between 0 and 90 degrees, got {0}")]
    Angle(f64),
    #[error("vertex angles must be positive and sum to 360, got {0:?}")]
    VertexAngles(Vec<f64>),
}

pub const DEFAULT_MIURA_ANGLE: f64 = 60.0;

/// An edge of the m×n grid graph whose vertices are the Miura faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GridEdge {
    /// Between `(row, col)` and `(row, col + 1)`.
    Horizontal { row: usize, col: usize },
    /// Between `(row, col)` and `(row + 1, col)`.
    Vertical { row: usize, col: usize },
}

impl GridEdge {
    /// The two cells, left/upper first.
    pub fn cells(self) -> ((usize, usize), (usize, usize)) {
        match self {
            GridEdge::Horizontal { row, col } => ((row, col), (row, col + 1)),
            GridEdge::Vertical { row, col } => ((row, col), (row + 1, col)),
        }
    }

    pub fn between(a: (usize, usize), b: (usize, usize)) -> Option<GridEdge> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if lo.0 == hi.0 && lo.1 + 1 == hi.1 {
            Some(GridEdge::Horizontal { row: lo.0, col: lo.1 })
        } else if lo.1 == hi.1 && lo.0 + 1 == hi.0 {
            Some(GridEdge::Vertical { row: lo.0, col: lo.1 })
        } else {
            None
        }
    }
}

/// Which way the degree-4 vertices of the top crease row point. A vertex
/// points left when its zig-zag creases both leave to the right, so the
/// crease flanked by the two obtuse angles lies to its left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MiuraOrientation {
    PointingLeft,
    PointingRight,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MiuraPattern {
    pub base: CreasePattern,
    pub rows: usize,
    pub cols: usize,
    pub alpha: f64,
    pub orientation: MiuraOrientation,
    horizontal: Vec<CreaseId>,
    vertical: Vec<CreaseId>,
    edge_of: BTreeMap<CreaseId, GridEdge>,
}

impl MiuraPattern {
    pub fn crease_for(&self, edge: GridEdge) -> Option<CreaseId> {
        match edge {
            GridEdge::Horizontal { row, col } if row < self.rows && col + 1 < self.cols => {
                Some(self.horizontal[row * (self.cols - 1) + col])
            }
            GridEdge::Vertical { row, col } if row + 1 < self.rows && col < self.cols => {
                Some(self.vertical[row * self.cols + col])
            }
            _ => None,
        }
    }

    pub fn edge_for(&self, crease: CreaseId) -> Option<GridEdge> {
        self.edge_of.get(&crease).copied()
    }

    /// All grid edges in crease-id order.
    pub fn grid_edges(&self) -> impl Iterator<Item = (GridEdge, CreaseId)> + '_ {
        self.edge_of.iter().map(|(&c, &e)| (e, c))
    }

    /// Corners of the parallelogram face `(row, col)`, counterclockwise from
    /// the upper-left corner.
    pub fn cell_polygon(&self, row: usize, col: usize) -> [(f64, f64); 4] {
        let p = |i, j| miura_point(i, j, self.alpha, self.orientation);
        [p(row, col), p(row + 1, col), p(row + 1, col + 1), p(row, col + 1)]
    }

    /// Sidecar metadata as `key=value` lines.
    pub fn metadata(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind=miura").unwrap();
        writeln!(out, "rows={}", self.rows).unwrap();
        writeln!(out, "cols={}", self.cols).unwrap();
        writeln!(out, "alpha={}", self.alpha).unwrap();
        let orientation = match self.orientation {
            MiuraOrientation::PointingLeft => "pointing-left",
            MiuraOrientation::PointingRight => "pointing-right",
        };
        writeln!(out, "orientation={orientation}").unwrap();
        for (edge, crease) in self.grid_edges() {
            let ((r0, c0), (r1, c1)) = edge.cells();
            writeln!(out, "edge.{r0}.{c0}-{r1}.{c1}={crease}").unwrap();
        }
        out
    }
}

/// Horizontal shift of crease row `i`; rows alternate so every face is a
/// parallelogram and every interior vertex has acute angles `alpha`.
fn miura_shift(i: usize, alpha: f64, orientation: MiuraOrientation) -> f64 {
    let delta = 1.0 / alpha.to_radians().tan();
    let shifted = match orientation {
        MiuraOrientation::PointingLeft => i.is_multiple_of(2),
        MiuraOrientation::PointingRight => i % 2 == 1,
    };
    if shifted {
        delta
    } else {
        0.0
    }
}

fn miura_point(i: usize, j: usize, alpha: f64, orientation: MiuraOrientation) -> (f64, f64) {
    (j as f64 + miura_shift(i, alpha, orientation), -(i as f64))
}

/// The m×n Miura-ori with the top crease row pointing left.
pub fn gen_miura(rows: usize, cols: usize, alpha: f64) -> Result<MiuraPattern, GenError> {
    gen_miura_oriented(rows, cols, alpha, MiuraOrientation::PointingLeft)
}

/// Miura-ori with `rows` × `cols` parallelogram faces. Crease rows are
/// horizontal lines at integer heights; the crossing creases zig-zag with
/// horizontal offset `cot(alpha)`.
pub fn gen_miura_oriented(
    rows: usize,
    cols: usize,
    alpha: f64,
    orientation: MiuraOrientation,
) -> Result<MiuraPattern, GenError> {
    if rows == 0 || cols == 0 {
        return Err(GenError::Dimensions { rows, cols });
    }
    if !(alpha > 0.0 && alpha < 90.0) {
        return Err(GenError::Angle(alpha));
    }
    let (m, n) = (rows, cols);
    // lattice point (i, j): crease row i in 0..=m, zig-zag line j in 0..=n
    let used = |i: usize, j: usize| (1..m).contains(&i) || (1..n).contains(&j);
    let mut ids = BTreeMap::new();
    let mut vertices = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            if !used(i, j) {
                continue;
            }
            let id = VertexId(vertices.len() as u32);
            let (x, y) = miura_point(i, j, alpha, orientation);
            let interior = (1..m).contains(&i) && (1..n).contains(&j);
            let kind = if interior { VertexKind::Interior } else { VertexKind::Boundary };
            vertices.push(Vertex { id, x, y, kind });
            ids.insert((i, j), id);
        }
    }

    let mut creases = Vec::new();
    let mut horizontal = Vec::new();
    let mut vertical = Vec::new();
    let mut edge_of = BTreeMap::new();
    let mut push = |a, b, edge, creases: &mut Vec<Crease>| {
        let id = CreaseId(creases.len() as u32);
        creases.push(Crease { id, endpoints: (ids[&a], ids[&b]) });
        edge_of.insert(id, edge);
        id
    };
    for r in 0..m {
        for c in 0..n - 1 {
            // faces (r, c) and (r, c + 1) share a zig-zag segment
            let id = push((r, c + 1), (r + 1, c + 1), GridEdge::Horizontal { row: r, col: c }, &mut creases);
            horizontal.push(id);
        }
        if r + 1 < m {
            for c in 0..n {
                // faces (r, c) and (r + 1, c) share a segment of crease row r + 1
                let id = push((r + 1, c), (r + 1, c + 1), GridEdge::Vertical { row: r, col: c }, &mut creases);
                vertical.push(id);
            }
        }
    }

    let base = CreasePattern::new(vertices, creases).expect("generated Miura pattern is well formed");
    Ok(MiuraPattern { base, rows, cols, alpha, orientation, horizontal, vertical, edge_of })
}

/// One square twist of the tessellation.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistUnit {
    pub row: usize,
    pub col: usize,
    pub mirrored: bool,
    /// The four twist vertices: right, top, left and bottom corner of the
    /// central square.
    pub vertices: [VertexId; 4],
    /// Central-square creases.
    pub center: [CreaseId; 4],
    /// Pleat creases incident to this unit's vertices, ascending.
    pub pleats: [CreaseId; 8],
}

#[derive(Clone, Debug, PartialEq)]
pub struct SquareTwistPattern {
    pub base: CreasePattern,
    pub rows: usize,
    pub cols: usize,
    pub units: Vec<TwistUnit>,
}

impl SquareTwistPattern {
    pub fn unit(&self, row: usize, col: usize) -> Option<&TwistUnit> {
        (row < self.rows && col < self.cols).then(|| &self.units[row * self.cols + col])
    }

    pub fn metadata(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind=square-twist").unwrap();
        writeln!(out, "rows={}", self.rows).unwrap();
        writeln!(out, "cols={}", self.cols).unwrap();
        let join = |ids: &mut dyn Iterator<Item = String>| ids.collect::<Vec<_>>().join(",");
        for u in &self.units {
            let key = format!("unit.{}.{}", u.row, u.col);
            writeln!(out, "{key}.mirrored={}", u.mirrored).unwrap();
            writeln!(out, "{key}.vertices={}", join(&mut u.vertices.iter().map(|v| v.to_string()))).unwrap();
            writeln!(out, "{key}.center={}", join(&mut u.center.iter().map(|c| c.to_string()))).unwrap();
            writeln!(out, "{key}.pleats={}", join(&mut u.pleats.iter().map(|c| c.to_string()))).unwrap();
        }
        out
    }
}

// Square-twist geometry works on an integer lattice with half-unit spacing:
// the central square is a diamond with corners one step from the unit
// centre, units sit four steps apart, and the sheet extends two steps past
// the outermost centres.
const CORNERS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
const UNIT_SPACING: i64 = 4;
const MARGIN: i64 = 2;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Right,
    Up,
    Left,
    Down,
}

impl Dir {
    fn step(self) -> (i64, i64) {
        match self {
            Dir::Right => (1, 0),
            Dir::Up => (0, 1),
            Dir::Left => (-1, 0),
            Dir::Down => (0, -1),
        }
    }

    fn mirrored(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
            d => d,
        }
    }
}

/// Pleat directions at each corner of an unmirrored unit (right, top, left,
/// bottom). Mirroring reflects top and bottom.
const PLEATS: [[Dir; 2]; 4] =
    [[Dir::Right, Dir::Up], [Dir::Up, Dir::Left], [Dir::Left, Dir::Down], [Dir::Down, Dir::Right]];

fn corner_offset(k: usize, mirrored: bool) -> (i64, i64) {
    let (x, y) = CORNERS[k];
    if mirrored {
        (x, -y)
    } else {
        (x, y)
    }
}

/// The m×n square-twist tessellation. Units alternate with their mirror
/// images on a checkerboard so that neighbouring pleats line up; boundary
/// pleats run to the bounding rectangle.
pub fn gen_square_twist(rows: usize, cols: usize) -> Result<SquareTwistPattern, GenError> {
    if rows == 0 || cols == 0 {
        return Err(GenError::Dimensions { rows, cols });
    }
    let (m, n) = (rows as i64, cols as i64);
    let centre = |r: i64, c: i64| (UNIT_SPACING * c, -UNIT_SPACING * r);
    let (x_min, x_max) = (-MARGIN, UNIT_SPACING * (n - 1) + MARGIN);
    let (y_min, y_max) = (-UNIT_SPACING * (m - 1) - MARGIN, MARGIN);

    // unit corners as lattice points, in the order of CORNERS
    let mut corners = Vec::new();
    let mut interior = BTreeSet::new();
    for r in 0..m {
        for c in 0..n {
            let mirrored = (r + c) % 2 == 1;
            let (cx, cy) = centre(r, c);
            let pts: Vec<(i64, i64)> = (0..4)
                .map(|k| {
                    let (dx, dy) = CORNERS[k];
                    (cx + dx, cy + dy)
                })
                .collect();
            interior.extend(pts.iter().copied());
            corners.push((r, c, mirrored, pts));
        }
    }

    let mut segments: BTreeSet<((i64, i64), (i64, i64))> = BTreeSet::new();
    let mut add = |a: (i64, i64), b: (i64, i64)| {
        segments.insert((a.min(b), a.max(b)));
    };
    for (_, _, mirrored, pts) in &corners {
        for k in 0..4 {
            add(pts[k], pts[(k + 1) % 4]);
            // which corner sits at lattice point pts[k] after mirroring
            let base = (0..4).find(|&b| corner_offset(b, *mirrored) == CORNERS[k]).unwrap();
            for d in PLEATS[base] {
                let d = if *mirrored { d.mirrored() } else { d };
                let (sx, sy) = d.step();
                let mut q = pts[k];
                loop {
                    q = (q.0 + sx, q.1 + sy);
                    let on_edge = q.0 == x_min || q.0 == x_max || q.1 == y_min || q.1 == y_max;
                    if interior.contains(&q) || on_edge {
                        break;
                    }
                }
                add(pts[k], q);
            }
        }
    }

    // vertices: top to bottom, left to right
    let mut points: Vec<(i64, i64)> =
        segments.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().into_iter().collect();
    points.sort_by_key(|&(x, y)| (-y, x));
    let index: BTreeMap<(i64, i64), VertexId> =
        points.iter().enumerate().map(|(i, &p)| (p, VertexId(i as u32))).collect();
    let vertices: Vec<Vertex> = points
        .iter()
        .map(|&p| Vertex {
            id: index[&p],
            x: p.0 as f64 * 0.5,
            y: p.1 as f64 * 0.5,
            kind: if interior.contains(&p) { VertexKind::Interior } else { VertexKind::Boundary },
        })
        .collect();
    let mut endpoint_pairs: Vec<(VertexId, VertexId)> = segments
        .iter()
        .map(|(a, b)| {
            let (u, v) = (index[a], index[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    endpoint_pairs.sort();
    let creases: Vec<Crease> = endpoint_pairs
        .iter()
        .enumerate()
        .map(|(i, &endpoints)| Crease { id: CreaseId(i as u32), endpoints })
        .collect();
    let base = CreasePattern::new(vertices, creases).expect("generated square-twist pattern is well formed");

    let units = corners
        .into_iter()
        .map(|(r, c, mirrored, pts)| {
            let vs: [VertexId; 4] = std::array::from_fn(|k| index[&pts[k]]);
            let center: [CreaseId; 4] = std::array::from_fn(|k| {
                let (a, b) = (vs[k], vs[(k + 1) % 4]);
                find_crease(&base, a, b)
            });
            let mut pleats: Vec<CreaseId> = vs
                .iter()
                .flat_map(|&v| base.incident(v).iter().copied())
                .filter(|c| !center.contains(c))
                .collect();
            pleats.sort();
            pleats.dedup();
            TwistUnit {
                row: r as usize,
                col: c as usize,
                mirrored,
                vertices: vs,
                center,
                pleats: pleats.try_into().expect("each unit has eight pleat creases"),
            }
        })
        .collect();
    Ok(SquareTwistPattern { base, rows, cols, units })
}

/// A single interior vertex at the origin with creases of unit length,
/// the first pointing along +x and the rest counterclockwise, separated by
/// `angles`. Crease `i` ends at boundary vertex `i + 1`.
pub fn gen_single_vertex(angles: &[f64]) -> Result<CreasePattern, GenError> {
    let sum: f64 = angles.iter().sum();
    if angles.len() < 2 || angles.iter().any(|&a| a.is_nan() || a <= 0.0) || (sum - 360.0).abs() > crate::model::ANGLE_TOLERANCE {
        return Err(GenError::VertexAngles(angles.to_vec()));
    }
    let mut vertices = vec![Vertex { id: VertexId(0), x: 0.0, y: 0.0, kind: VertexKind::Interior }];
    let mut creases = Vec::new();
    let mut theta = 0.0f64;
    for (i, a) in angles.iter().enumerate() {
        let (s, c) = theta.to_radians().sin_cos();
        let v = VertexId(i as u32 + 1);
        vertices.push(Vertex { id: v, x: c, y: s, kind: VertexKind::Boundary });
        creases.push(Crease { id: CreaseId(i as u32), endpoints: (VertexId(0), v) });
        theta += a;
    }
    CreasePattern::new(vertices, creases).map_err(|_| GenError::VertexAngles(angles.to_vec()))
}

fn find_crease(pattern: &CreasePattern, a: VertexId, b: VertexId) -> CreaseId {
    *pattern
        .incident(a)
        .iter()
        .find(|&&c| pattern.crease(c).and_then(|cr| cr.other(a)) == Some(b))
        .expect("central-square crease exists")
}
