mod common;

use std::f64::consts::TAU;

use convex_rope::geometry::{
    angle_at, distance_to_polyline, hausdorff_distance, orient, polyline_length, segment_intersection,
};
use convex_rope::{Point, Polyline, Segment};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    (-1000i32..1000, -1000i32..1000).prop_map(|(x, y)| Point::new(x as f64, y as f64))
}

fn fine_point() -> impl Strategy<Value = Point> {
    (-100.0..100.0f64, -100.0..100.0f64).prop_map(|(x, y)| Point::new(x, y))
}

fn polyline(max: usize) -> impl Strategy<Value = Polyline> {
    prop::collection::vec(fine_point(), 1..max).prop_filter_map("repeated vertex", |v| Polyline::new(v).ok())
}

/// Directed Hausdorff distance by dense sampling of `a`.
fn sampled_directed(a: &Polyline, b: &Polyline, per_segment: usize) -> f64 {
    let mut best = distance_to_polyline(a.first(), b);
    for s in a.segments() {
        for k in 1..=per_segment {
            let x = s.p.lerp(s.q, k as f64 / per_segment as f64);
            best = best.max(distance_to_polyline(x, b));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orientation_flips_under_swaps(a in point(), b in point(), c in point()) {
        let o = orient(a, b, c);
        prop_assert_eq!(orient(b, a, c), -o);
        prop_assert_eq!(orient(a, c, b), -o);
        prop_assert_eq!(orient(c, b, a), -o);
        prop_assert_eq!(orient(b, c, a), o);
    }

    #[test]
    fn orientation_on_a_lattice_line_is_zero(a in point(), dx in -50i32..50, dy in -50i32..50, k in -20i32..20) {
        let c = Point::new(a.x + (k * dx) as f64, a.y + (k * dy) as f64);
        let b = Point::new(a.x + dx as f64, a.y + dy as f64);
        prop_assert_eq!(orient(a, b, c), 0);
    }

    #[test]
    fn angles_on_both_sides_sum_to_full_turn(
        apex in fine_point(),
        t1 in 0.0..TAU,
        t2 in 0.0..TAU,
        r in 0.5..50.0f64,
    ) {
        let dir = |t: f64| Point::new(apex.x + r * t.cos(), apex.y + r * t.sin());
        let (prev, next) = (dir(t1), dir(t2));
        prop_assume!(orient(prev, apex, next) != 0);
        // bisector of the arms points into the smaller wedge
        let u = (prev - apex).normalized() + (next - apex).normalized();
        let inner = apex + u * 0.25;
        let outer = apex - u * 0.25;
        let a = angle_at(prev, apex, next, inner).unwrap();
        let b = angle_at(prev, apex, next, outer).unwrap();
        prop_assert!(a < b);
        prop_assert!((a + b - TAU).abs() <= 1e-12, "{} + {} != 2π", a, b);
    }

    #[test]
    fn hausdorff_is_a_metric(a in polyline(6), b in polyline(6), c in polyline(6)) {
        let ab = hausdorff_distance(&a, &b);
        prop_assert!(ab >= 0.0);
        prop_assert_eq!(ab, hausdorff_distance(&b, &a));
        prop_assert_eq!(hausdorff_distance(&a, &a), 0.0);
        let ac = hausdorff_distance(&a, &c);
        let cb = hausdorff_distance(&c, &b);
        prop_assert!(ab <= ac + cb + 1e-9 * (1.0 + ab), "{} > {} + {}", ab, ac, cb);
    }

    #[test]
    fn hausdorff_zero_only_for_equal_sets(a in polyline(6)) {
        // the same point set traversed backwards, and with a midpoint added
        prop_assert_eq!(hausdorff_distance(&a, &a.reversed()), 0.0);
        if a.len() >= 2 {
            let mut v = a.vertices().to_vec();
            v.insert(1, v[0].midpoint(v[1]));
            let split = Polyline::new(v).unwrap();
            prop_assert!(hausdorff_distance(&a, &split) <= 1e-12);
            let mut w = a.vertices().to_vec();
            w.push(Point::new(a.last().x + 1.0, a.last().y));
            let longer = Polyline::new(w).unwrap();
            prop_assert!(hausdorff_distance(&a, &longer) > 0.0);
        }
    }

    #[test]
    fn hausdorff_matches_sampling(a in polyline(5), b in polyline(5)) {
        let exact = hausdorff_distance(&a, &b);
        let per = 400;
        let sampled = sampled_directed(&a, &b, per).max(sampled_directed(&b, &a, per));
        let step = a.segments().chain(b.segments()).map(|s| s.length()).fold(0.0, f64::max) / per as f64;
        prop_assert!(sampled <= exact + 1e-9, "sampled {} above exact {}", sampled, exact);
        prop_assert!(exact <= sampled + step + 1e-9, "exact {} above sampled {} + {}", exact, sampled, step);
    }

    #[test]
    fn length_is_invariant_under_rigid_motions(
        a in polyline(12),
        theta in 0.0..TAU,
        dx in -1e4..1e4f64,
        dy in -1e4..1e4f64,
    ) {
        let (s, c) = theta.sin_cos();
        let moved = Polyline::new(
            a.vertices().iter().map(|p| Point::new(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy)).collect(),
        ).unwrap();
        let (l0, l1) = (polyline_length(&a), polyline_length(&moved));
        prop_assert!(common::relative_gap(l0, l1) <= 1e-9 || (l0 - l1).abs() <= 1e-9, "{} vs {}", l0, l1);
    }

    #[test]
    fn intersection_is_symmetric(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b && c != d);
        let (s, t) = (Segment::new(a, b), Segment::new(c, d));
        prop_assert_eq!(segment_intersection(s, t).is_empty(), segment_intersection(t, s).is_empty());
    }
}
