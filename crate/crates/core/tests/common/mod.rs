#![allow(dead_code)]

use std::f64::consts::TAU;

use convex_rope::polygon::Containment;
use convex_rope::{Point, SimplePolygon};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Star-shaped polygon around the origin with integer vertices.
pub fn star(rng: &mut ChaCha8Rng, n: usize) -> SimplePolygon {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point> = angles
            .iter()
            .map(|&t| {
                let r = rng.gen_range(200.0..1000.0);
                Point::new((r * t.cos()).round(), (r * t.sin()).round())
            })
            .collect();
        if let Ok(p) = SimplePolygon::new(pts) {
            if p.len() == n {
                return p;
            }
        }
    }
}

/// x-monotone polygon with integer vertices.
pub fn monotone(rng: &mut ChaCha8Rng, n: usize) -> SimplePolygon {
    let mut xs: Vec<i64> = Vec::new();
    while xs.len() < n {
        let x = rng.gen_range(0..(100 * n as i64));
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs.sort_unstable();
    let h = 50 * n as i64;
    let (mut lower, mut upper) = (Vec::new(), Vec::new());
    for &x in &xs[1..n - 1] {
        if rng.gen_bool(0.5) {
            lower.push(Point::new(x as f64, -rng.gen_range(1..h) as f64));
        } else {
            upper.push(Point::new(x as f64, rng.gen_range(1..h) as f64));
        }
    }
    let mut pts = vec![Point::new(xs[0] as f64, 0.0)];
    pts.extend(lower);
    pts.push(Point::new(xs[n - 1] as f64, 0.0));
    pts.extend(upper.into_iter().rev());
    SimplePolygon::new(pts).unwrap()
}

/// A uniformly drawn point of the closed polygon, or one of its vertices.
pub fn point_in(rng: &mut ChaCha8Rng, p: &SimplePolygon) -> Point {
    if rng.gen_bool(0.2) {
        return p.vertex(rng.gen_range(0..p.len()));
    }
    let bb = p.bbox();
    loop {
        let q = Point::new(rng.gen_range(bb.min.x..bb.max.x), rng.gen_range(bb.min.y..bb.max.y));
        if p.contains(q) != Containment::Outside {
            return q;
        }
    }
}

pub fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
