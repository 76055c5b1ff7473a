//! Crease patterns, mountain-valley assignments and vertex stars.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

/// Absolute tolerance, in degrees, for angle-sum and alternating-sum checks.
pub const ANGLE_TOLERANCE: f64 = 1e-6;

/// Angles are compared on a lattice of this many steps per degree.
const ANGLE_LATTICE: f64 = 1e6;

/// Snaps an angle in degrees to the comparison lattice.
pub fn snap_angle(degrees: f64) -> i64 {
    (degrees * ANGLE_LATTICE).round() as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CreaseId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for CreaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Boundary,
    Interior,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vertex {
    pub id: VertexId,
    pub x: f64,
    pub y: f64,
    pub kind: VertexKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crease {
    pub id: CreaseId,
    pub endpoints: (VertexId, VertexId),
}

impl Crease {
    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: VertexId) -> Option<VertexId> {
        match self.endpoints {
            (a, b) if a == v => Some(b),
            (a, b) if b == v => Some(a),
            _ => None,
        }
    }
}

/// A crease label: valley (−1) or mountain (+1).
///
/// Valley orders before mountain, which gives the lexicographic order used
/// by enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mv {
    Valley,
    Mountain,
}

impl Mv {
    pub const BOTH: [Mv; 2] = [Mv::Valley, Mv::Mountain];

    pub fn sign(self) -> i32 {
        match self {
            Mv::Valley => -1,
            Mv::Mountain => 1,
        }
    }

    pub fn from_sign(sign: i32) -> Option<Mv> {
        match sign {
            -1 => Some(Mv::Valley),
            1 => Some(Mv::Mountain),
            _ => None,
        }
    }

    pub fn flip(self) -> Mv {
        match self {
            Mv::Valley => Mv::Mountain,
            Mv::Mountain => Mv::Valley,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Mv::Valley => 'V',
            Mv::Mountain => 'M',
        }
    }
}

impl fmt::Display for Mv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Mapping from crease ids to mountain/valley labels.
///
/// A parsed document may leave creases unassigned, so totality is checked
/// against a pattern with [`MvAssignment::is_total_for`] rather than enforced
/// by the type. Ordering is lexicographic by crease id with valley < mountain.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MvAssignment(BTreeMap<CreaseId, Mv>);

impl MvAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, crease: CreaseId) -> Option<Mv> {
        self.0.get(&crease).copied()
    }

    pub fn insert(&mut self, crease: CreaseId, mv: Mv) -> Option<Mv> {
        self.0.insert(crease, mv)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CreaseId, Mv)> + '_ {
        self.0.iter().map(|(&c, &m)| (c, m))
    }

    /// True iff the assignment labels exactly the creases of `pattern`.
    pub fn is_total_for(&self, pattern: &CreasePattern) -> bool {
        self.0.len() == pattern.creases().len()
            && pattern.creases().iter().all(|c| self.0.contains_key(&c.id))
    }

    /// Every label flipped.
    pub fn negated(&self) -> MvAssignment {
        MvAssignment(self.0.iter().map(|(&c, &m)| (c, m.flip())).collect())
    }
}

impl FromIterator<(CreaseId, Mv)> for MvAssignment {
    fn from_iter<T: IntoIterator<Item = (CreaseId, Mv)>>(iter: T) -> Self {
        MvAssignment(iter.into_iter().collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PatternError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate crease id {0}")]
    DuplicateCrease(CreaseId),
    #[error("crease {crease} references unknown vertex {vertex}")]
    DanglingVertex { crease: CreaseId, vertex: VertexId },
    #[error("crease {0} is a self-loop")]
    SelfLoop(CreaseId),
    #[error("creases {0} and {1} join the same pair of vertices")]
    DuplicateSegment(CreaseId, CreaseId),
    #[error("creases {0} and {1} intersect away from a shared endpoint")]
    Crossing(CreaseId, CreaseId),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(VertexId),
    #[error("interior vertex {vertex} has degree {degree}, need at least 2")]
    InteriorDegree { vertex: VertexId, degree: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is on the boundary; stars are defined for interior vertices only")]
    BoundaryVertex(VertexId),
}

/// A planar straight-line graph of creases.
///
/// Vertices and creases are kept sorted by id. The constructor checks every
/// structural invariant, so a value of this type is always well formed.
#[derive(Clone, Debug)]
pub struct CreasePattern {
    vertices: Vec<Vertex>,
    creases: Vec<Crease>,
    vertex_index: HashMap<VertexId, usize>,
    crease_index: HashMap<CreaseId, usize>,
    incident: Vec<Vec<CreaseId>>,
}

impl PartialEq for CreasePattern {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.creases == other.creases
    }
}

impl CreasePattern {
    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new()).expect("empty pattern is valid")
    }

    pub fn new(mut vertices: Vec<Vertex>, mut creases: Vec<Crease>) -> Result<Self, PatternError> {
        vertices.sort_by_key(|v| v.id);
        creases.sort_by_key(|c| c.id);
        for w in vertices.windows(2) {
            if w[0].id == w[1].id {
                return Err(PatternError::DuplicateVertex(w[0].id));
            }
        }
        for w in creases.windows(2) {
            if w[0].id == w[1].id {
                return Err(PatternError::DuplicateCrease(w[0].id));
            }
        }
        for v in &mut vertices {
            if !v.x.is_finite() || !v.y.is_finite() {
                return Err(PatternError::NonFinite(v.id));
            }
            // normalize negative zero so serialization is canonical
            v.x += 0.0;
            v.y += 0.0;
        }
        let vertex_index: HashMap<_, _> =
            vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
        let crease_index: HashMap<_, _> =
            creases.iter().enumerate().map(|(i, c)| (c.id, i)).collect();

        let mut incident = vec![Vec::new(); vertices.len()];
        let mut segments: HashMap<(VertexId, VertexId), CreaseId> = HashMap::new();
        for c in &creases {
            let (a, b) = c.endpoints;
            for v in [a, b] {
                if !vertex_index.contains_key(&v) {
                    return Err(PatternError::DanglingVertex { crease: c.id, vertex: v });
                }
            }
            if a == b {
                return Err(PatternError::SelfLoop(c.id));
            }
            let key = (a.min(b), a.max(b));
            if let Some(&prev) = segments.get(&key) {
                return Err(PatternError::DuplicateSegment(prev, c.id));
            }
            segments.insert(key, c.id);
            incident[vertex_index[&a]].push(c.id);
            incident[vertex_index[&b]].push(c.id);
        }
        for (v, inc) in vertices.iter().zip(&incident) {
            if v.kind == VertexKind::Interior && inc.len() < 2 {
                return Err(PatternError::InteriorDegree { vertex: v.id, degree: inc.len() });
            }
        }

        let pattern = CreasePattern { vertices, creases, vertex_index, crease_index, incident };
        pattern.check_planar()?;
        Ok(pattern)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn creases(&self) -> &[Crease] {
        &self.creases
    }

    pub fn vertex(&self, id: VertexId) -> Option<&Vertex> {
        self.vertex_index.get(&id).map(|&i| &self.vertices[i])
    }

    pub fn crease(&self, id: CreaseId) -> Option<&Crease> {
        self.crease_index.get(&id).map(|&i| &self.creases[i])
    }

    /// Creases incident to `id`, ascending by crease id.
    pub fn incident(&self, id: VertexId) -> &[CreaseId] {
        self.vertex_index.get(&id).map(|&i| self.incident[i].as_slice()).unwrap_or(&[])
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = &Vertex> + '_ {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Interior)
    }

    fn point(&self, id: VertexId) -> (f64, f64) {
        let v = &self.vertices[self.vertex_index[&id]];
        (v.x, v.y)
    }

    fn check_planar(&self) -> Result<(), PatternError> {
        let segs: Vec<_> = self
            .creases
            .iter()
            .map(|c| (c, self.point(c.endpoints.0), self.point(c.endpoints.1)))
            .collect();
        for (i, &(ca, a0, a1)) in segs.iter().enumerate() {
            for &(cb, b0, b1) in &segs[i + 1..] {
                if !boxes_touch(a0, a1, b0, b1) {
                    continue;
                }
                let shared = [ca.endpoints.0, ca.endpoints.1]
                    .into_iter()
                    .find(|v| cb.other(*v).is_some());
                let bad = match shared {
                    Some(v) => {
                        let p = self.point(v);
                        let qa = self.point(ca.other(v).unwrap());
                        let qb = self.point(cb.other(v).unwrap());
                        overlapping_rays(p, qa, qb)
                    }
                    None => segments_meet(a0, a1, b0, b1),
                };
                if bad {
                    return Err(PatternError::Crossing(ca.id, cb.id));
                }
            }
        }
        Ok(())
    }
}

fn boxes_touch(a0: (f64, f64), a1: (f64, f64), b0: (f64, f64), b1: (f64, f64)) -> bool {
    let eps = 1e-9;
    a0.0.min(a1.0) <= b0.0.max(b1.0) + eps
        && b0.0.min(b1.0) <= a0.0.max(a1.0) + eps
        && a0.1.min(a1.1) <= b0.1.max(b1.1) + eps
        && b0.1.min(b1.1) <= a0.1.max(a1.1) + eps
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Signed orientation of `c` relative to segment `a`→`b`, zero within a
/// length-relative tolerance.
fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> i8 {
    let len = ((b.0 - a.0).hypot(b.1 - a.1)).max(1e-300);
    let d = cross(a, b, c) / len;
    if d > 1e-9 {
        1
    } else if d < -1e-9 {
        -1
    } else {
        0
    }
}

fn on_segment(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> bool {
    orient(a, b, p) == 0 && boxes_touch(a, b, p, p)
}

fn segments_meet(a0: (f64, f64), a1: (f64, f64), b0: (f64, f64), b1: (f64, f64)) -> bool {
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(a0, a1, b0) || on_segment(a0, a1, b1) || on_segment(b0, b1, a0) || on_segment(b0, b1, a1)
}

/// Two segments leaving `p` overlap iff they point the same way.
fn overlapping_rays(p: (f64, f64), qa: (f64, f64), qb: (f64, f64)) -> bool {
    let da = (qa.0 - p.0, qa.1 - p.1);
    let db = (qb.0 - p.0, qb.1 - p.1);
    let la = da.0.hypot(da.1);
    let lb = db.0.hypot(db.1);
    let sin = (da.0 * db.1 - da.1 * db.0) / (la * lb);
    let cos = (da.0 * db.0 + da.1 * db.1) / (la * lb);
    sin.abs() < 1e-9 && cos > 0.0
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StarError {
    #[error("a vertex star needs at least 2 creases, got {0}")]
    TooFewCreases(usize),
    #[error("angles must be positive, got {0}")]
    NonPositiveAngle(f64),
    #[error("angles sum to {}, expected 360", fmt_angle(*.0))]
    AngleSum(f64),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// The creases around one interior vertex in counterclockwise order, with
/// `angles[i]` the sector between `creases[i]` and `creases[i + 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexStar {
    pub vertex: VertexId,
    pub creases: Vec<CreaseId>,
    pub angles: Vec<f64>,
}

impl VertexStar {
    /// A free-standing star with creases numbered `0..n`.
    pub fn from_angles(angles: &[f64]) -> Result<VertexStar, StarError> {
        if angles.len() < 2 {
            return Err(StarError::TooFewCreases(angles.len()));
        }
        if let Some(&a) = angles.iter().find(|&&a| a.is_nan() || a <= 0.0) {
            return Err(StarError::NonPositiveAngle(a));
        }
        let sum: f64 = angles.iter().sum();
        if (sum - 360.0).abs() > ANGLE_TOLERANCE {
            return Err(StarError::AngleSum(sum));
        }
        Ok(VertexStar {
            vertex: VertexId(0),
            creases: (0..angles.len() as u32).map(CreaseId).collect(),
            angles: angles.to_vec(),
        })
    }

    pub fn degree(&self) -> usize {
        self.creases.len()
    }

    pub fn angle_keys(&self) -> Vec<i64> {
        self.angles.iter().map(|&a| snap_angle(a)).collect()
    }

    /// α₁ − α₂ + α₃ − … over the cyclic sequence.
    pub fn alternating_sum(&self) -> f64 {
        self.angles
            .iter()
            .enumerate()
            .map(|(i, &a)| if i % 2 == 0 { a } else { -a })
            .sum()
    }
}

/// Direction of the segment from `from` to `to`, in degrees in `[0, 360)`.
fn direction(from: (f64, f64), to: (f64, f64)) -> f64 {
    let d = (to.1 - from.1).atan2(to.0 - from.0).to_degrees();
    let d = if d < 0.0 { d + 360.0 } else { d };
    if d >= 360.0 {
        d - 360.0
    } else {
        d
    }
}

/// Counterclockwise star of an interior vertex, starting at the crease with
/// the smallest direction angle.
pub fn vertex_star(pattern: &CreasePattern, vertex: VertexId) -> Result<VertexStar, StarError> {
    let v = pattern.vertex(vertex).ok_or(PatternError::UnknownVertex(vertex))?;
    if v.kind == VertexKind::Boundary {
        return Err(PatternError::BoundaryVertex(vertex).into());
    }
    let inc = pattern.incident(vertex);
    if inc.len() < 2 {
        return Err(StarError::TooFewCreases(inc.len()));
    }
    let origin = (v.x, v.y);
    let mut dirs: Vec<(f64, CreaseId)> = inc
        .iter()
        .map(|&c| {
            let other = pattern.crease(c).and_then(|cr| cr.other(vertex)).unwrap();
            (direction(origin, pattern.point(other)), c)
        })
        .collect();
    dirs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let n = dirs.len();
    let angles = (0..n)
        .map(|i| {
            let next = if i + 1 == n { dirs[0].0 + 360.0 } else { dirs[i + 1].0 };
            next - dirs[i].0
        })
        .collect();
    Ok(VertexStar { vertex, creases: dirs.into_iter().map(|(_, c)| c).collect(), angles })
}

/// Local angle diagnostics for one interior vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexCheck {
    pub vertex: VertexId,
    pub degree: usize,
    pub angle_sum_deviation: f64,
    pub alternating_sum: f64,
}

impl VertexCheck {
    pub fn odd_degree(&self) -> bool {
        self.degree % 2 == 1
    }

    pub fn angle_sum_ok(&self) -> bool {
        self.angle_sum_deviation.abs() <= ANGLE_TOLERANCE
    }

    pub fn alternating_ok(&self) -> bool {
        self.alternating_sum.abs() <= ANGLE_TOLERANCE
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.odd_degree() {
            out.push(format!("vertex {}: odd degree {}", self.vertex, self.degree));
        }
        if !self.angle_sum_ok() {
            out.push(format!(
                "vertex {}: angle sum deviates from 360 by {}",
                self.vertex, self.angle_sum_deviation
            ));
        }
        if !self.alternating_ok() {
            out.push(format!(
                "vertex {}: alternating angle sum is {}, expected 0",
                self.vertex,
                fmt_angle(self.alternating_sum)
            ));
        }
        out
    }
}

pub(crate) fn fmt_angle(a: f64) -> String {
    let r = (a * 1e6).round() / 1e6;
    format!("{}", r + 0.0)
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ValidationReport {
    pub vertices: Vec<VertexCheck>,
}

impl ValidationReport {
    pub fn warnings(&self) -> Vec<String> {
        self.vertices.iter().flat_map(VertexCheck::warnings).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| !v.odd_degree() && v.angle_sum_ok() && v.alternating_ok())
    }
}

/// Necessary local angle conditions at every interior vertex.
pub fn validate(pattern: &CreasePattern) -> ValidationReport {
    let vertices = pattern
        .interior_vertices()
        .map(|v| {
            let star = vertex_star(pattern, v.id).expect("interior vertices have degree >= 2");
            check_star(&star)
        })
        .collect();
    ValidationReport { vertices }
}

pub fn check_star(star: &VertexStar) -> VertexCheck {
    VertexCheck {
        vertex: star.vertex,
        degree: star.degree(),
        angle_sum_deviation: star.angles.iter().sum::<f64>() - 360.0,
        alternating_sum: star.alternating_sum(),
    }
}
