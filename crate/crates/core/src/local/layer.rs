//! Brute-force layer-ordering oracle for a single vertex.
//!
//! The folded vertex is modelled one-dimensionally: sector `k` folds onto
//! the arc from `pos[k]` to `pos[k + 1]` of the unit circle, where crease
//! positions alternate direction (`pos[k + 1] = pos[k] ± angles[k]`). Even
//! sectors keep their front face up, odd sectors are flipped. A folded state
//! is a stacking order of the sectors; it is accepted when
//!
//! * every crease's label matches which side its flipped sector lands on
//!   (mountain: the flipped sector goes below; valley: above),
//! * no sector strictly covering a crease's folded position is stacked
//!   between the two sectors meeting at that crease, and
//! * two creases folded onto the same position from the same side do not
//!   interleave.
//!
//! The oracle knows nothing about Maekawa's count or the Big-Little-Big
//! Lemma; both must fall out of the search.

use crate::model::{snap_angle, Mv, VertexStar};

use super::LocalError;

const FULL_TURN: i64 = 360_000_000;
/// Slack in lattice units when comparing folded positions.
const SLACK: i64 = 4;

/// True iff some stacking order folds the degree-4 `star` flat with labels
/// `mv` (listed in the order of `star.creases`).
pub fn layer_oracle(star: &VertexStar, mv: &[Mv; 4]) -> Result<bool, LocalError> {
    if star.degree() != 4 {
        return Err(LocalError::UnsupportedDegree(star.degree()));
    }
    Ok(folds_flat(&star.angle_keys(), mv))
}

fn congruent(a: i64, b: i64) -> bool {
    let d = (a - b).rem_euclid(FULL_TURN);
    d <= SLACK || d >= FULL_TURN - SLACK
}

fn strictly_inside(p: i64, (lo, hi): (i64, i64)) -> bool {
    (-2..=2).any(|turns| {
        let q = p + turns * FULL_TURN;
        lo + SLACK < q && q < hi - SLACK
    })
}

fn strictly_between(x: usize, a: usize, b: usize) -> bool {
    a.min(b) < x && x < a.max(b)
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

struct Taco {
    pos: i64,
    outward: i8,
    sectors: (usize, usize),
}

fn folds_flat(angles: &[i64], mv: &[Mv]) -> bool {
    let n = angles.len();
    if n % 2 == 1 || angles.iter().sum::<i64>().abs_diff(snap_angle(360.0)) as i64 > SLACK {
        return false;
    }
    let mut pos = vec![0i64; n + 1];
    for k in 0..n {
        pos[k + 1] = pos[k] + if k % 2 == 0 { angles[k] } else { -angles[k] };
    }
    if !congruent(pos[n], 0) {
        return false;
    }
    let arcs: Vec<(i64, i64)> = (0..n).map(|k| (pos[k].min(pos[k + 1]), pos[k].max(pos[k + 1]))).collect();
    // crease k joins sectors k - 1 and k, both of which leave pos[k] on the same side
    let tacos: Vec<Taco> = (0..n)
        .map(|k| Taco {
            pos: pos[k],
            outward: if k % 2 == 0 { 1 } else { -1 },
            sectors: ((k + n - 1) % n, k),
        })
        .collect();

    let arcs = &arcs;
    let tortillas: Vec<(usize, usize)> = tacos
        .iter()
        .enumerate()
        .flat_map(|(t, taco)| {
            (0..n)
                .filter(move |&s| s != taco.sectors.0 && s != taco.sectors.1)
                .filter(move |&s| strictly_inside(taco.pos, arcs[s]))
                .map(move |s| (t, s))
        })
        .collect();
    let mut taco_pairs = Vec::new();
    for t in 0..n {
        for u in t + 1..n {
            if congruent(tacos[t].pos, tacos[u].pos) && tacos[t].outward == tacos[u].outward {
                taco_pairs.push((t, u));
            }
        }
    }

    let accepts = |height: &[usize]| {
        let labels_match = tacos.iter().zip(mv).all(|(taco, &label)| {
            let (a, b) = taco.sectors;
            let (up, flipped) = if a % 2 == 0 { (a, b) } else { (b, a) };
            match label {
                Mv::Mountain => height[flipped] < height[up],
                Mv::Valley => height[flipped] > height[up],
            }
        });
        labels_match
            && tortillas.iter().all(|&(t, s)| {
                let (a, b) = tacos[t].sectors;
                !strictly_between(height[s], height[a], height[b])
            })
            && taco_pairs.iter().all(|&(t, u)| {
                let h = |(a, b): (usize, usize)| (height[a], height[b]);
                !interleaved(h(tacos[t].sectors), h(tacos[u].sectors))
            })
    };

    let mut height: Vec<usize> = (0..n).collect();
    any_permutation(&mut height, 0, &accepts)
}

fn any_permutation(items: &mut [usize], k: usize, accepts: &impl Fn(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return accepts(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        let found = any_permutation(items, k + 1, accepts);
        items.swap(k, i);
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{all_tuples, maekawa_ok};
    use Mv::{Mountain as M, Valley as V};

    fn star(angles: [f64; 4]) -> VertexStar {
        VertexStar::from_angles(&angles).unwrap()
    }

    fn accepted(s: &VertexStar) -> Vec<[Mv; 4]> {
        all_tuples().filter(|t| layer_oracle(s, t).unwrap()).collect()
    }

    #[test]
    fn unique_min_accepts_minority_on_small_angle() {
        let s = star([45.0, 90.0, 135.0, 90.0]);
        assert!(layer_oracle(&s, &[V, M, M, M]).unwrap());
        assert!(layer_oracle(&s, &[M, V, M, M]).unwrap());
        assert!(!layer_oracle(&s, &[M, M, V, M]).unwrap());
        assert_eq!(accepted(&s).len(), 4);
    }

    #[test]
    fn double_min_rejects_lone_e4() {
        let s = star([60.0, 60.0, 120.0, 120.0]);
        // crease 3 sits between the two obtuse angles
        assert!(!layer_oracle(&s, &[M, M, M, V]).unwrap());
        assert!(!layer_oracle(&s, &[V, V, V, M]).unwrap());
        // the crease between the acute angles may stand alone
        assert!(layer_oracle(&s, &[M, V, M, M]).unwrap());
        assert_eq!(accepted(&s).len(), 6);
    }

    #[test]
    fn maekawa_emerges() {
        for s in [star([90.0; 4]), star([45.0, 90.0, 135.0, 90.0]), star([30.0, 100.0, 150.0, 80.0])] {
            for t in all_tuples() {
                if !maekawa_ok(&t) {
                    assert!(!layer_oracle(&s, &t).unwrap(), "{:?} {:?}", s.angles, t);
                }
            }
        }
        assert_eq!(accepted(&star([90.0; 4])).len(), 8);
    }

    #[test]
    fn non_flat_star_never_folds() {
        let s = star([60.0, 120.0, 60.0, 120.0]);
        assert!(accepted(&s).is_empty());
    }

    #[test]
    fn rejects_other_degrees() {
        let s = VertexStar::from_angles(&[120.0; 3]).unwrap();
        assert_eq!(layer_oracle(&s, &[M; 4]).unwrap_err(), LocalError::UnsupportedDegree(3));
    }
}
