//! The whole pipeline: polygon → visibility of b → slit domain → partition
//! → iteration → rope from a to b.

use alloc::vec::Vec;
use core::f64::consts::PI;

use thiserror::Error;

use crate::domain::{build_domain, DomainError, RopeDomain, B, B_TILDE, DEFAULT_MARGIN};
use crate::geodesic::{Location, PathError};
use crate::geometry::{GeometryError, Point, Polyline, Vector};
use crate::partition::{make_partition, make_vertical_partition, Partition, PartitionError};
use crate::polygon::{verify_ray, visibility_from_infinity, PolygonError, SimplePolygon, Visibility};
use crate::solver::{solve_partition, Solution, SolverConfig, SolverError};
use crate::visibility::RingVisibility;

/// Shooting points whose upper angle is this close to π are not rope
/// vertices.
pub const ROPE_ANGLE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RopeError {
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error("vertex {0} is not visible from infinity")]
    NotVisible(usize),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("vertex {0} is not on the convex hull, so no rope ends there")]
    NotOnHull(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RopeConfig {
    pub solver: SolverConfig,
    pub margin: f64,
    /// Escape direction for b; found automatically when absent.
    pub ray: Option<Vector>,
    /// Explicit cutting segments (u on B₁, v on B₂), ordered from the b̃
    /// side; vertical cuts are used when absent.
    pub cuts: Option<Vec<(Point, Point)>>,
}

impl Default for RopeConfig {
    fn default() -> Self {
        Self {
            solver: SolverConfig::default(),
            margin: DEFAULT_MARGIN,
            ray: None,
            cuts: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RopeRun {
    pub domain: RopeDomain,
    pub partition: Partition,
    pub solution: Solution,
    /// The convex rope from a to b (closed when a = b).
    pub rope: Polyline,
}

/// Slit domain for `b_index`, with the escape ray given or searched for.
pub fn domain_for(p: &SimplePolygon, b_index: usize, ray: Option<Vector>, margin: f64) -> Result<RopeDomain, RopeError> {
    let cert = match ray {
        Some(dir) => verify_ray(p, b_index, dir).map_err(|e| match e {
            PolygonError::RayBlocked(i) => RopeError::NotVisible(i),
            e => e.into(),
        })?,
        None => match visibility_from_infinity(p, b_index)? {
            Visibility::Visible(c) => c,
            Visibility::NotVisible => return Err(RopeError::NotVisible(b_index)),
        },
    };
    Ok(build_domain(p, b_index, &cert, margin)?)
}

/// Convex rope of `p` from vertex `a_index` (default b) to vertex `b_index`.
pub fn convex_rope(
    p: &SimplePolygon,
    b_index: usize,
    a_index: Option<usize>,
    config: &RopeConfig,
) -> Result<RopeRun, RopeError> {
    config.solver.validate()?;
    if let Some(a) = a_index {
        if a >= p.len() {
            return Err(PolygonError::IndexOutOfRange(a).into());
        }
    }
    let domain = domain_for(p, b_index, config.ray, config.margin)?;
    let partition = match &config.cuts {
        Some(cuts) => make_partition(&domain, cuts)?,
        None => make_vertical_partition(&domain, config.solver.n_cuts)?,
    };
    let solution = solve_partition(&partition, &config.solver)?;
    let keep: Vec<bool> = {
        let mut keep = alloc::vec![true; solution.path.len()];
        for (&k, &angle) in solution.shooting_indices.iter().zip(&solution.angles) {
            if (angle - PI).abs() <= ROPE_ANGLE_TOLERANCE {
                keep[k] = false;
            }
        }
        keep
    };
    let rope = rope_from_path(&domain, solution.path.vertices(), &keep, a_index)?;
    Ok(RopeRun {
        domain,
        partition,
        solution,
        rope,
    })
}

/// Cuts the closed path b̃ → b down to the part from a to b.
fn rope_from_path(d: &RopeDomain, path: &[Point], keep: &[bool], a_index: Option<usize>) -> Result<Polyline, RopeError> {
    let pts: Vec<Point> = path.iter().zip(keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
    let start = match a_index {
        None => 0,
        Some(a) if a == d.b_index() => 0,
        Some(a) => {
            let pa = d.polygon().vertex(a);
            pts.iter()
                .skip(1)
                .position(|&q| q == pa)
                .map(|k| k + 1)
                .ok_or(RopeError::NotOnHull(a))?
        }
    };
    Ok(Polyline::new(pts[start..].to_vec())?)
}

/// Exact shortest path b̃ → b in the domain over its visibility graph.
pub fn oracle_path(d: &RopeDomain) -> Result<Polyline, RopeError> {
    let g = RingVisibility::new(d.ring()).shortest_path(Location::Vertex(B_TILDE), Location::Vertex(B))?;
    Ok(g.polyline())
}

/// Rope from a to b read off the oracle path.
pub fn oracle_rope(d: &RopeDomain, a_index: Option<usize>) -> Result<Polyline, RopeError> {
    let path = oracle_path(d)?;
    let keep = alloc::vec![true; path.len()];
    rope_from_path(d, path.vertices(), &keep, a_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::convex_hull_indices;

    fn poly(v: &[(f64, f64)]) -> SimplePolygon {
        SimplePolygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn cfg(n: usize) -> RopeConfig {
        RopeConfig {
            solver: SolverConfig {
                n_cuts: n,
                epsilon: 1e-9,
                ..SolverConfig::default()
            },
            ..RopeConfig::default()
        }
    }

    #[test]
    fn hexagon_rope_is_boundary_chain() {
        let p = poly(&[(0., 0.), (4., -1.), (7., 1.), (6., 4.), (2., 5.), (-1., 3.)]);
        for b in 0..6 {
            for a in 0..6 {
                let run = convex_rope(&p, b, Some(a), &cfg(3)).unwrap();
                let mut want = alloc::vec![p.vertex(a)];
                let mut k = a;
                loop {
                    k = (k + 1) % 6;
                    want.push(p.vertex(k));
                    if k == b {
                        break;
                    }
                }
                assert_eq!(run.rope.vertices(), &want[..], "a={a} b={b}");
            }
        }
    }

    #[test]
    fn closed_rope_is_hull() {
        let p = poly(&[(0., 0.), (4., 0.), (4., 3.), (3., 3.), (2., 1.), (1., 3.), (0., 3.)]);
        let run = convex_rope(&p, 2, None, &cfg(4)).unwrap();
        let hull = convex_hull_indices(&p);
        assert_eq!(run.rope.len(), hull.len() + 1);
        for &h in &hull {
            assert!(run.rope.vertices().contains(&p.vertex(h)));
        }
        assert_eq!(run.rope.vertices(), oracle_rope(&run.domain, None).unwrap().vertices());
    }

    #[test]
    fn reflex_a_is_rejected() {
        let p = poly(&[(0., 0.), (4., 0.), (4., 3.), (3., 3.), (2., 1.), (1., 3.), (0., 3.)]);
        assert_eq!(convex_rope(&p, 2, Some(4), &cfg(2)).unwrap_err(), RopeError::NotOnHull(4));
    }

    #[test]
    fn hidden_vertex_is_rejected() {
        // (1,4) sits at the end of a bent channel
        let p = poly(&[
            (0., 0.),
            (4., 0.),
            (4., 5.),
            (0., 5.),
            (0., 2.),
            (2., 2.),
            (2., 3.),
            (1., 3.),
            (1., 4.),
            (3., 4.),
            (3., 1.),
            (0., 1.),
        ]);
        assert_eq!(convex_rope(&p, 8, None, &cfg(2)).unwrap_err(), RopeError::NotVisible(8));
    }
}
