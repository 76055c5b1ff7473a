use std::collections::BTreeSet;

use num_bigint::BigUint;
use origami_mv::coloring::{count_colorings_transfer, TransferMatrix};
use origami_mv::cpt::{parse_cpt, serialize_cpt};
use origami_mv::enumerate::{count_mv, count_mv_with, enumerate_mv, Pruning};
use origami_mv::generators::{gen_miura, gen_single_vertex, gen_square_twist};
use origami_mv::line_graph::{build_line_graph, build_line_graph_with, determined_check};
use origami_mv::local::{
    all_tuples, blb_pairs, degree4_forced_same, layer_oracle, maekawa_ok, vertex_valid_assignments,
};
use origami_mv::miura::{coloring_to_mv_with, mv_to_coloring, GridColoring, SignTable};
use origami_mv::model::{vertex_star, CreasePattern, Mv, MvAssignment, Vertex};
use proptest::prelude::*;

fn generated() -> impl Strategy<Value = CreasePattern> {
    prop_oneof![
        (1usize..5, 1usize..5, 20.0f64..85.0).prop_map(|(m, n, a)| gen_miura(m, n, a).unwrap().base),
        (1usize..4, 1usize..4).prop_map(|(m, n)| gen_square_twist(m, n).unwrap().base),
    ]
}

/// Flat-foldable degree-4 angle sequences (a, b, 180 - a, 180 - b).
fn flat_star() -> impl Strategy<Value = [f64; 4]> {
    (1u32..180, 1u32..180).prop_map(|(a, b)| [a as f64, b as f64, 180.0 - a as f64, 180.0 - b as f64])
}

/// Small patterns accepted by the exhaustive search.
fn small_pattern() -> impl Strategy<Value = CreasePattern> {
    prop_oneof![
        flat_star().prop_map(|a| gen_single_vertex(&a).unwrap()),
        (1usize..4, 1usize..4, 30.0f64..80.0)
            .prop_filter("at most 16 creases", |(m, n, _)| m * (n - 1) + (m - 1) * n <= 16)
            .prop_map(|(m, n, a)| gen_miura(m, n, a).unwrap().base),
        Just(gen_square_twist(1, 1).unwrap().base),
    ]
}

fn rotated(p: &CreasePattern, degrees: f64) -> CreasePattern {
    let (s, c) = degrees.to_radians().sin_cos();
    let vs: Vec<Vertex> = p.vertices().iter().map(|v| Vertex { x: c * v.x - s * v.y, y: s * v.x + c * v.y, ..*v }).collect();
    CreasePattern::new(vs, p.creases().to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cpt_round_trip(p in generated(), labels in prop::collection::vec(0u8..3, 0..64)) {
        let mv: MvAssignment = p
            .creases()
            .iter()
            .zip(labels.iter().chain(std::iter::repeat(&2)))
            .filter_map(|(c, &l)| match l {
                0 => Some((c.id, Mv::Valley)),
                1 => Some((c.id, Mv::Mountain)),
                _ => None,
            })
            .collect();
        let text = serialize_cpt(&p, Some(&mv)).unwrap();
        let (q, back) = parse_cpt(&text).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(&back, &mv);
        prop_assert_eq!(serialize_cpt(&q, Some(&back)).unwrap(), text);
    }

    #[test]
    fn generated_stars_sum_to_full_turn(p in generated()) {
        for v in p.interior_vertices() {
            let star = vertex_star(&p, v.id).unwrap();
            let sum: f64 = star.angles.iter().sum();
            prop_assert!((sum - 360.0).abs() <= 360.0 * 1e-9);
            prop_assert_eq!(vertex_star(&p, v.id).unwrap(), star);
        }
    }

    #[test]
    fn star_order_survives_rotation(p in generated(), turn in 0.0f64..360.0) {
        let q = rotated(&p, turn);
        for v in p.interior_vertices() {
            let a = vertex_star(&p, v.id).unwrap();
            let b = vertex_star(&q, v.id).unwrap();
            let n = a.creases.len();
            let shift = b.creases.iter().position(|&c| c == a.creases[0]).unwrap();
            for i in 0..n {
                prop_assert_eq!(b.creases[(shift + i) % n], a.creases[i]);
                prop_assert!((b.angles[(shift + i) % n] - a.angles[i]).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn vertex_rules_match_the_layer_oracle(angles in flat_star()) {
        let star = gen_single_vertex(&angles).unwrap();
        let s = vertex_star(&star, origami_mv::model::VertexId(0)).unwrap();
        let valid = vertex_valid_assignments(&s).unwrap();
        prop_assert!(blb_pairs(&s).is_disjoint(&degree4_forced_same(&s).unwrap()));
        for t in all_tuples() {
            prop_assert_eq!(layer_oracle(&s, &t).unwrap(), valid.contains(&t));
            if valid.contains(&t) {
                prop_assert!(maekawa_ok(&t));
                prop_assert!(valid.contains(&t.map(Mv::flip)));
            }
        }
    }

    #[test]
    fn pruning_is_sound(p in small_pattern()) {
        prop_assert_eq!(count_mv_with(&p, Pruning::Partial).unwrap(), count_mv_with(&p, Pruning::None).unwrap());
    }

    #[test]
    fn negation_closure(p in small_pattern()) {
        let all = enumerate_mv(&p, None).unwrap();
        let set: BTreeSet<&MvAssignment> = all.iter().collect();
        for mv in &all {
            prop_assert!(set.contains(&mv.negated()));
        }
        prop_assert_eq!(BigUint::from(all.len()), count_mv(&p).unwrap());
        if p.interior_vertices().next().is_some() {
            prop_assert!(all.len().is_multiple_of(2));
        }
    }

    #[test]
    fn determined_patterns_count_by_components(p in small_pattern()) {
        if determined_check(&p).unwrap() {
            let lg = build_line_graph(&p).unwrap();
            prop_assert_eq!(count_mv(&p).unwrap(), BigUint::from(1u32) << lg.component_count());
        }
    }

    #[test]
    fn even_path_skipping_is_invisible(m in 1usize..5, n in 1usize..5) {
        let p = gen_square_twist(m, n).unwrap().base;
        let a = build_line_graph_with(&p, true).unwrap();
        let b = build_line_graph_with(&p, false).unwrap();
        prop_assert_eq!(a.component_count(), b.component_count());
        prop_assert_eq!(a.two_colorable(), b.two_colorable());
        prop_assert_eq!(a.count_mv_by_components().unwrap(), BigUint::from(1u32) << a.component_count());
    }

    #[test]
    fn color_shift_keeps_the_assignment(m in 1usize..4, n in 1usize..4, pick in any::<prop::sample::Index>(), k in 1u8..3) {
        let mp = gen_miura(m, n, 60.0).unwrap();
        let all = enumerate_mv(&mp.base, None).unwrap();
        let mv = &all[pick.index(all.len())];
        let c = mv_to_coloring(&mp, mv).unwrap();
        let shifted = GridColoring::new(m, n, c.colors().iter().map(|&x| (x + k) % 3).collect()).unwrap();
        let back = coloring_to_mv_with(&SignTable::FROZEN, &mp, &shifted);
        prop_assert_eq!(back.as_ref(), Some(mv));
    }

    #[test]
    fn transfer_counts_are_symmetric(m in 1usize..9, n in 1usize..9) {
        prop_assert_eq!(count_colorings_transfer(m, n).unwrap(), count_colorings_transfer(n, m).unwrap());
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let patterns = [gen_miura(4, 4, 60.0).unwrap().base, gen_square_twist(1, 2).unwrap().base];
    let mut results = Vec::new();
    for threads in [1, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        results.push(pool.install(|| {
            let counts: Vec<BigUint> = patterns.iter().map(|p| count_mv(p).unwrap()).collect();
            let first = enumerate_mv(&patterns[0], Some(50)).unwrap();
            let colorings = count_colorings_transfer(10, 10).unwrap();
            (counts, first, colorings)
        }));
    }
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn transfer_matrix_shape() {
    for m in 1..=7 {
        let tm = TransferMatrix::new(m).unwrap();
        assert_eq!(tm.state_count(), 3 << (m - 1));
    }
}
