//! Single-vertex rules: Maekawa's count, the Big-Little-Big Lemma and the
//! classification of flat-foldable degree-4 vertices.
//!
//! Indices follow the star: `angles[i]` lies between `creases[i]` and
//! `creases[i + 1]` (cyclically), and MV tuples list labels in the order of
//! `creases`.

mod layer;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::model::{fmt_angle, snap_angle, CreaseId, Mv, VertexStar, ANGLE_TOLERANCE};

pub use layer::layer_oracle;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LocalError {
    #[error("vertex has degree {0}; only degree 4 is supported")]
    UnsupportedDegree(usize),
    #[error("angles sum to {}, expected 360", fmt_angle(*.0))]
    AngleSum(f64),
    #[error("alternating angle sum is {}; the vertex cannot fold flat", fmt_angle(*.0))]
    NotFlat(f64),
    #[error("the two smallest angles are not adjacent")]
    SplitMinima,
}

/// An unordered pair of creases, stored smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CreasePair(CreaseId, CreaseId);

impl CreasePair {
    pub fn new(a: CreaseId, b: CreaseId) -> Self {
        CreasePair(a.min(b), a.max(b))
    }

    pub fn first(self) -> CreaseId {
        self.0
    }

    pub fn second(self) -> CreaseId {
        self.1
    }
}

/// Maekawa: mountains minus valleys is ±2.
pub fn maekawa_ok(values: &[Mv]) -> bool {
    let sum: i32 = values.iter().map(|m| m.sign()).sum();
    sum.abs() == 2
}

/// Crease pairs bounding a strict local minimum angle; such pairs must take
/// different labels.
pub fn blb_pairs(star: &VertexStar) -> BTreeSet<CreasePair> {
    let keys = star.angle_keys();
    let n = keys.len();
    (0..n)
        .filter(|&i| keys[(i + n - 1) % n] > keys[i] && keys[(i + 1) % n] > keys[i])
        .map(|i| CreasePair::new(star.creases[i], star.creases[(i + 1) % n]))
        .collect()
}

/// At a degree-4 vertex with exactly one BLB pair, the other two creases
/// must agree: the pair contributes zero to the Maekawa sum.
pub fn degree4_forced_same(star: &VertexStar) -> Result<BTreeSet<CreasePair>, LocalError> {
    if star.degree() != 4 {
        return Err(LocalError::UnsupportedDegree(star.degree()));
    }
    let blb = blb_pairs(star);
    let mut out = BTreeSet::new();
    if blb.len() == 1 {
        let pair = *blb.iter().next().unwrap();
        let rest: Vec<CreaseId> =
            star.creases.iter().copied().filter(|&c| c != pair.first() && c != pair.second()).collect();
        out.insert(CreasePair::new(rest[0], rest[1]));
    }
    Ok(out)
}

/// Flat-foldable degree-4 vertices come in three shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree4Class {
    /// One strictly smallest angle, at this angle index.
    UniqueMin { angle: usize },
    /// Two equal smallest angles, adjacent. `e4` is the crease index
    /// between the two largest angles, opposite the crease shared by the
    /// small ones; it can never be the lone mountain or valley.
    DoubleMin { e4: usize },
    /// All four angles are right angles.
    AllEqual,
}

pub fn classify_degree4(star: &VertexStar) -> Result<Degree4Class, LocalError> {
    if star.degree() != 4 {
        return Err(LocalError::UnsupportedDegree(star.degree()));
    }
    let sum: f64 = star.angles.iter().sum();
    if (sum - 360.0).abs() > ANGLE_TOLERANCE {
        return Err(LocalError::AngleSum(sum));
    }
    let alt = star.alternating_sum();
    if alt.abs() > ANGLE_TOLERANCE {
        return Err(LocalError::NotFlat(alt));
    }
    let keys = star.angle_keys();
    let min = *keys.iter().min().unwrap();
    let minima: Vec<usize> = (0..4).filter(|&i| keys[i] == min).collect();
    match minima.as_slice() {
        [i] => Ok(Degree4Class::UniqueMin { angle: *i }),
        [a, b] => {
            let shared = if b - a == 1 {
                *b
            } else if *a == 0 && *b == 3 {
                0
            } else {
                return Err(LocalError::SplitMinima);
            };
            Ok(Degree4Class::DoubleMin { e4: (shared + 2) % 4 })
        }
        [_, _, _, _] if min == snap_angle(90.0) => Ok(Degree4Class::AllEqual),
        // three equal minima contradict a zero alternating sum
        _ => Err(LocalError::NotFlat(alt)),
    }
}

pub type Tuple4 = [Mv; 4];

/// All 16 label tuples, lexicographic.
pub fn all_tuples() -> impl Iterator<Item = Tuple4> {
    (0..16u8).map(|bits| std::array::from_fn(|k| if bits >> (3 - k) & 1 == 1 { Mv::Mountain } else { Mv::Valley }))
}

/// Index of the crease whose label differs from the other three.
fn minority(t: &Tuple4) -> Option<usize> {
    let mountains = t.iter().filter(|&&m| m == Mv::Mountain).count();
    let odd = match mountains {
        1 => Mv::Mountain,
        3 => Mv::Valley,
        _ => return None,
    };
    t.iter().position(|&m| m == odd)
}

/// Label tuples under which a degree-4 vertex folds flat.
pub fn vertex_valid_assignments(star: &VertexStar) -> Result<BTreeSet<Tuple4>, LocalError> {
    let class = classify_degree4(star)?;
    Ok(all_tuples()
        .filter(|t| {
            let Some(k) = minority(t) else { return false };
            match class {
                Degree4Class::UniqueMin { angle } => k == angle || k == (angle + 1) % 4,
                Degree4Class::DoubleMin { e4 } => k != e4,
                Degree4Class::AllEqual => true,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Mv::{Mountain as M, Valley as V};

    fn star(angles: [f64; 4]) -> VertexStar {
        VertexStar::from_angles(&angles).unwrap()
    }

    fn pair(a: u32, b: u32) -> CreasePair {
        CreasePair::new(CreaseId(a), CreaseId(b))
    }

    #[test]
    fn maekawa() {
        assert!(maekawa_ok(&[M, M, M, V]));
        assert!(!maekawa_ok(&[M, M, V, V]));
        assert!(!maekawa_ok(&[V, V, V, V]));
        assert!(maekawa_ok(&[V, V]));
    }

    #[test]
    fn blb_examples() {
        assert_eq!(blb_pairs(&star([45.0, 90.0, 135.0, 90.0])), [pair(0, 1)].into());
        assert!(blb_pairs(&star([90.0; 4])).is_empty());
        assert!(blb_pairs(&star([60.0, 60.0, 120.0, 120.0])).is_empty());
        // degree 6, two strict minima
        let s = VertexStar::from_angles(&[30.0, 60.0, 90.0, 40.0, 70.0, 70.0]).unwrap();
        assert_eq!(blb_pairs(&s), [pair(0, 1), pair(3, 4)].into());
    }

    #[test]
    fn forced_same_examples() {
        assert_eq!(degree4_forced_same(&star([45.0, 90.0, 135.0, 90.0])).unwrap(), [pair(2, 3)].into());
        assert!(degree4_forced_same(&star([90.0; 4])).unwrap().is_empty());
        assert!(degree4_forced_same(&star([60.0, 60.0, 120.0, 120.0])).unwrap().is_empty());
        let tri = VertexStar::from_angles(&[120.0; 3]).unwrap();
        assert_eq!(degree4_forced_same(&tri).unwrap_err(), LocalError::UnsupportedDegree(3));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_degree4(&star([45.0, 90.0, 135.0, 90.0])).unwrap(), Degree4Class::UniqueMin { angle: 0 });
        assert_eq!(classify_degree4(&star([60.0, 60.0, 120.0, 120.0])).unwrap(), Degree4Class::DoubleMin { e4: 3 });
        assert_eq!(classify_degree4(&star([60.0, 120.0, 120.0, 60.0])).unwrap(), Degree4Class::DoubleMin { e4: 2 });
        assert_eq!(classify_degree4(&star([90.0; 4])).unwrap(), Degree4Class::AllEqual);
        assert!(matches!(classify_degree4(&star([60.0, 120.0, 60.0, 120.0])), Err(LocalError::NotFlat(_))));
        assert!(matches!(classify_degree4(&star([10.0, 100.0, 120.0, 130.0])), Err(LocalError::NotFlat(_))));
    }

    #[test]
    fn validity_set_sizes() {
        let unique = vertex_valid_assignments(&star([45.0, 90.0, 135.0, 90.0])).unwrap();
        assert_eq!(unique.len(), 4);
        assert!(unique.iter().all(|t| matches!(minority(t), Some(0 | 1))));

        let double = vertex_valid_assignments(&star([60.0, 60.0, 120.0, 120.0])).unwrap();
        assert_eq!(double.len(), 6);
        assert!(!double.contains(&[M, M, M, V]));
        assert!(!double.contains(&[V, V, V, M]));
        assert!(double.contains(&[M, V, M, M]));

        assert_eq!(vertex_valid_assignments(&star([90.0; 4])).unwrap().len(), 8);
    }

    #[test]
    fn blb_and_forced_same_are_disjoint() {
        for a in (5..180).step_by(5) {
            for b in (5..180).step_by(5) {
                let (a, b) = (a as f64, b as f64);
                let s = star([a, b, 180.0 - a, 180.0 - b]);
                let blb = blb_pairs(&s);
                let same = degree4_forced_same(&s).unwrap();
                assert!(blb.is_disjoint(&same));
                for t in vertex_valid_assignments(&s).unwrap() {
                    assert!(maekawa_ok(&t));
                    let neg = t.map(Mv::flip);
                    assert!(vertex_valid_assignments(&s).unwrap().contains(&neg));
                }
            }
        }
    }
}
