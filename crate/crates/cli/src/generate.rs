//! Deterministic random fixtures with integer coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use convex_rope::Point;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::PolygonFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Convex,
    Monotone,
    Comb,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "convex" => Ok(Family::Convex),
            "monotone" => Ok(Family::Monotone),
            "comb" => Ok(Family::Comb),
            _ => Err(format!("unknown family `{s}` (expected convex, monotone or comb)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Convex => "convex",
            Family::Monotone => "monotone",
            Family::Comb => "comb",
        })
    }
}

/// A counterclockwise polygon of the family with `b` at its lowest
/// leftmost vertex. Combs have `4k + 2` vertices, the largest such count
/// not above `n` (at least 6).
pub fn generate(family: Family, n: usize, seed: u64) -> PolygonFile {
    assert!(n >= 3, "a polygon needs at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = match family {
        Family::Convex => convex(n, &mut rng),
        Family::Monotone => monotone(n, &mut rng),
        Family::Comb => comb(n, &mut rng),
    };
    let vertices: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x as f64, y as f64)).collect();
    let b = (0..pts.len()).min_by_key(|&i| pts[i]).unwrap();
    let mut file = PolygonFile::new(vertices);
    file.b = Some(b);
    file
}

/// Valtr's method: split sorted random coordinates into two chains, pair
/// the resulting edge vectors at random and sort them by angle. Parallel
/// vectors are merged, and the draw is repeated until exactly `n` remain.
fn convex(n: usize, rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    let range = 1_000_000i64.max(100 * n as i64);
    loop {
        let xs = chain_steps(n, range, rng);
        let mut ys = chain_steps(n, range, rng);
        for i in (1..n).rev() {
            ys.swap(i, rng.gen_range(0..=i));
        }
        let mut v: Vec<(i64, i64)> = xs.into_iter().zip(ys).filter(|&d| d != (0, 0)).collect();
        v.sort_by(|&a, &b| by_angle(a, b));
        let mut merged: Vec<(i64, i64)> = Vec::with_capacity(v.len());
        for d in v {
            match merged.last_mut() {
                Some(last) if cross(*last, d) == 0 && dot(*last, d) > 0 => {
                    last.0 += d.0;
                    last.1 += d.1;
                }
                _ => merged.push(d),
            }
        }
        if merged.len() != n {
            continue;
        }
        let mut pts = Vec::with_capacity(n);
        let (mut x, mut y) = (0i64, 0i64);
        for d in merged {
            pts.push((x, y));
            x += d.0;
            y += d.1;
        }
        let mx = pts.iter().map(|p| p.0).min().unwrap();
        let my = pts.iter().map(|p| p.1).min().unwrap();
        return pts.into_iter().map(|(x, y)| (x - mx, y - my)).collect();
    }
}

/// Signed steps along two random chains between the extremes of `n`
/// random values; they sum to zero.
fn chain_steps(n: usize, range: i64, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut vals: Vec<i64> = (0..n).map(|_| rng.gen_range(0..range)).collect();
    vals.sort_unstable();
    let (lo, hi) = (vals[0], vals[n - 1]);
    let (mut a, mut b) = (lo, lo);
    let mut steps = Vec::with_capacity(n);
    for &x in &vals[1..n - 1] {
        if rng.gen_bool(0.5) {
            steps.push(x - a);
            a = x;
        } else {
            steps.push(b - x);
            b = x;
        }
    }
    steps.push(hi - a);
    steps.push(b - hi);
    steps
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

/// Exact counterclockwise order of directions starting at angle 0.
fn by_angle(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |d: (i64, i64)| d.1 < 0 || (d.1 == 0 && d.0 < 0);
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// Distinct random abscissae; every interior one goes to the lower or the
/// upper chain, with random heights below or above the axis.
fn monotone(n: usize, rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    let width = 100 * n;
    let height = 50 * n as i64;
    let mut xs: Vec<i64> = index::sample(rng, width, n).into_iter().map(|x| x as i64).collect();
    xs.sort_unstable();
    let mut lower = vec![(xs[0], 0)];
    let mut upper = Vec::new();
    for &x in &xs[1..n - 1] {
        if rng.gen_bool(0.5) {
            lower.push((x, -rng.gen_range(1..=height)));
        } else {
            upper.push((x, rng.gen_range(1..=height)));
        }
    }
    lower.push((xs[n - 1], 0));
    lower.extend(upper.into_iter().rev());
    lower
}

/// Teeth pointing up from a base, alternating with gaps, the last tooth at
/// the right end.
fn comb(n: usize, rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    let k = n.saturating_sub(2).max(4) / 4;
    let unit = 10i64;
    // gap and tooth boundaries, left to right
    let mut xs = vec![0i64];
    for _ in 0..2 * k {
        let last = *xs.last().unwrap();
        xs.push(last + unit * rng.gen_range(1..=5));
    }
    let gaps: Vec<i64> = (0..k).map(|_| unit * rng.gen_range(1..=5)).collect();
    let teeth: Vec<i64> = (0..k).map(|_| unit * rng.gen_range(6..=40)).collect();
    let w = xs[2 * k];
    let mut pts = vec![(0, 0), (w, 0)];
    for t in (0..k).rev() {
        // tooth t spans xs[2t+1]..xs[2t+2], gap t spans xs[2t]..xs[2t+1]
        pts.push((xs[2 * t + 2], teeth[t]));
        pts.push((xs[2 * t + 1], teeth[t]));
        pts.push((xs[2 * t + 1], gaps[t]));
        pts.push((xs[2 * t], gaps[t]));
    }
    pts
}
