//! The slit domain 𝒟: the rectangle R minus the polygon, cut open along
//! the segment from the rope endpoint b to R.
//!
//! Ring layout (counterclockwise, interior on the left), for an input of
//! `n` vertices with `b = p[k]`:
//!
//! ```text
//! 0: b̃   1: c̃   2..=5: corners of R   6: c   7: b   8..: p[k-1], p[k-2], …, p[k+1]
//! ```
//!
//! B₁ is positions `0..=7`; B₂ is positions `7..len` followed by `0`.

use alloc::vec::Vec;

use thiserror::Error;

use crate::geometry::{orient, segment_intersection, Aabb, Intersection, Point, Polyline, Segment, Vector};
use crate::polygon::{first_ring_conflict, AngularInterval, SimplePolygon, VisibilityCertificate};

pub const DEFAULT_MARGIN: f64 = 0.25;

pub const B_TILDE: usize = 0;
pub const C_TILDE: usize = 1;
pub const C: usize = 6;
pub const B: usize = 7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("margin fraction must be positive and finite, got {0}")]
    NonPositiveMargin(f64),
    #[error("certificate belongs to vertex {cert}, not {b}")]
    CertificateMismatch { b: usize, cert: usize },
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("ray leaves the rectangle through a corner")]
    RayThroughCorner,
    #[error("segment from b to the rectangle meets the polygon")]
    RayIntersectsPolygon,
    #[error("domain boundary edges {0} and {1} intersect")]
    InvalidBoundary(usize, usize),
}

/// Axis-aligned rectangle, corners counterclockwise from `(min x, min y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rectangle {
    pub min: Point,
    pub max: Point,
}

impl Rectangle {
    pub fn corners(&self) -> [Point; 4] {
        [
            self.min,
            Point::new(self.max.x, self.min.y),
            self.max,
            Point::new(self.min.x, self.max.y),
        ]
    }

    /// Side `i` runs from corner `i` to corner `i + 1`.
    pub fn side(&self, i: usize) -> Segment {
        let c = self.corners();
        Segment::new(c[i % 4], c[(i + 1) % 4])
    }

    pub fn bbox(&self) -> Aabb {
        Aabb { min: self.min, max: self.max }
    }
}

/// Bounding box of `p` inflated by `margin_fraction` × its diagonal on every side.
pub fn bounding_rectangle(p: &SimplePolygon, margin_fraction: f64) -> Result<Rectangle, DomainError> {
    if !(margin_fraction > 0.0) || !margin_fraction.is_finite() {
        return Err(DomainError::NonPositiveMargin(margin_fraction));
    }
    let bb = p.bbox();
    let m = margin_fraction * bb.diagonal();
    Ok(Rectangle {
        min: Point::new(bb.min.x - m, bb.min.y - m),
        max: Point::new(bb.max.x + m, bb.max.y + m),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RopeDomain {
    ring: Vec<Point>,
    polygon: SimplePolygon,
    b_index: usize,
    rect: Rectangle,
    /// Side of R hit by the ray.
    exit_side: usize,
    ray: Vector,
}

impl RopeDomain {
    pub fn ring(&self) -> &[Point] {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ring.is_empty()
    }

    pub fn point(&self, pos: usize) -> Point {
        self.ring[pos]
    }

    pub fn polygon(&self) -> &SimplePolygon {
        &self.polygon
    }

    pub fn b_index(&self) -> usize {
        self.b_index
    }

    pub fn b(&self) -> Point {
        self.ring[B]
    }

    pub fn b_tilde(&self) -> Point {
        self.ring[B_TILDE]
    }

    pub fn c(&self) -> Point {
        self.ring[C]
    }

    pub fn c_tilde(&self) -> Point {
        self.ring[C_TILDE]
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    pub fn exit_side(&self) -> usize {
        self.exit_side
    }

    /// Unit direction of the ray from b through c.
    pub fn ray(&self) -> Vector {
        self.ray
    }

    /// Ring edge `e` joins positions `e` and `e + 1`.
    pub fn edge(&self, e: usize) -> Segment {
        Segment::new(self.ring[e], self.ring[(e + 1) % self.len()])
    }

    /// Edges of B₁ (b̃ → … → b).
    pub fn b1_edges(&self) -> core::ops::Range<usize> {
        0..B
    }

    /// Edges of B₂ (b → … → b̃).
    pub fn b2_edges(&self) -> core::ops::Range<usize> {
        B..self.len()
    }

    pub fn is_b1_position(&self, pos: usize) -> bool {
        pos <= B
    }

    /// Ring position of polygon vertex `j`.
    pub fn position_of_vertex(&self, j: usize) -> usize {
        let n = self.polygon.len();
        B + (self.b_index + n - j) % n
    }

    /// Polygon vertex stored at ring position `pos`, if any (b̃ maps to b).
    pub fn vertex_at(&self, pos: usize) -> Option<usize> {
        let n = self.polygon.len();
        match pos {
            B_TILDE => Some(self.b_index),
            p if p >= B && p < self.len() => Some((self.b_index + n - (p - B)) % n),
            _ => None,
        }
    }

    /// Whether ring position `pos` is a strict reflex corner of 𝒟.
    pub fn is_reflex(&self, pos: usize) -> bool {
        let m = self.len();
        orient(self.ring[(pos + m - 1) % m], self.ring[pos], self.ring[(pos + 1) % m]) < 0
    }

    pub fn area(&self) -> f64 {
        crate::geometry::signed_area(&self.ring)
    }

    pub fn bbox(&self) -> Aabb {
        self.rect.bbox()
    }

    /// Checks that the ring is a simple polygon apart from the slit: the
    /// walls b̃c̃ and cb may coincide, and coincident copies may touch.
    pub fn validate(&self) -> Result<(), DomainError> {
        let m = self.len();
        let ring = &self.ring;
        let conflict = first_ring_conflict(ring, |a, b, hit| match hit {
            Intersection::Empty => true,
            Intersection::Overlap(_) => a == B_TILDE && b == C,
            Intersection::Point(x) => {
                let ends_a = *x == ring[a] || *x == ring[(a + 1) % m];
                let ends_b = *x == ring[b] || *x == ring[(b + 1) % m];
                ends_a && ends_b
            }
        });
        match conflict {
            Some((a, b)) => Err(DomainError::InvalidBoundary(a, b)),
            None => Ok(()),
        }
    }
}

/// Builds 𝒟 from the polygon, the vertex b and a visibility certificate
/// for b. If the certified ray leaves R through a corner it is re-chosen
/// once, at the first third of its free interval.
pub fn build_domain(
    p: &SimplePolygon,
    b_index: usize,
    cert: &VisibilityCertificate,
    margin_fraction: f64,
) -> Result<RopeDomain, DomainError> {
    if b_index >= p.len() {
        return Err(DomainError::IndexOutOfRange(b_index));
    }
    if cert.vertex_index != b_index {
        return Err(DomainError::CertificateMismatch {
            b: b_index,
            cert: cert.vertex_index,
        });
    }
    let rect = bounding_rectangle(p, margin_fraction)?;
    let b = p.vertex(b_index);
    let (dir, exit) = match exit_point(rect, b, cert.ray_direction) {
        Some(hit) => (cert.ray_direction, hit),
        None => {
            let iv = cert.interval_of_ray().unwrap_or(AngularInterval {
                start: cert.ray_direction.angle(),
                width: 0.0,
            });
            [1.0 / 3.0, 2.0 / 3.0, 0.2, 0.8]
                .iter()
                .map(|&f| Vector::from_angle(iv.at(f)))
                .find_map(|dir| {
                    exit_point(rect, b, dir)
                        .filter(|_| crate::polygon::ray_is_clear(p, b_index, dir))
                        .map(|hit| (dir, hit))
                })
                .ok_or(DomainError::RayThroughCorner)?
        }
    };
    let (c, side) = exit;

    let cut = Segment::new(b, c);
    let n = p.len();
    for i in 0..n {
        let j = (i + 1) % n;
        let hit = segment_intersection(cut, p.edge(i));
        let ok = if i == b_index || j == b_index {
            hit == Intersection::Point(b)
        } else {
            hit.is_empty()
        };
        if !ok {
            return Err(DomainError::RayIntersectsPolygon);
        }
    }

    let corners = rect.corners();
    let mut ring = Vec::with_capacity(n + 7);
    ring.push(b);
    ring.push(c);
    for k in 1..=4 {
        ring.push(corners[(side + k) % 4]);
    }
    ring.push(c);
    for m in 0..n {
        ring.push(p.vertex((b_index + n - m) % n));
    }
    Ok(RopeDomain {
        ring,
        polygon: p.clone(),
        b_index,
        rect,
        exit_side: side,
        ray: dir,
    })
}

/// Where the ray from `b` along `dir` leaves the rectangle, with the side
/// index; `None` when it leaves through a corner.
fn exit_point(rect: Rectangle, b: Point, dir: Vector) -> Option<(Point, usize)> {
    let tx = if dir.x > 0.0 {
        (rect.max.x - b.x) / dir.x
    } else if dir.x < 0.0 {
        (rect.min.x - b.x) / dir.x
    } else {
        f64::INFINITY
    };
    let ty = if dir.y > 0.0 {
        (rect.max.y - b.y) / dir.y
    } else if dir.y < 0.0 {
        (rect.min.y - b.y) / dir.y
    } else {
        f64::INFINITY
    };
    let (c, side) = if tx < ty {
        let x = if dir.x > 0.0 { rect.max.x } else { rect.min.x };
        let y = b.y + tx * dir.y;
        (Point::new(x, y), if dir.x > 0.0 { 1 } else { 3 })
    } else if ty < tx {
        let y = if dir.y > 0.0 { rect.max.y } else { rect.min.y };
        let x = b.x + ty * dir.x;
        (Point::new(x, y), if dir.y > 0.0 { 2 } else { 0 })
    } else {
        return None;
    };
    // an exit (numerically) at a corner would leave a sliver edge between
    // c and the corner
    let tol = 1e-6 * ((rect.max.x - rect.min.x) + (rect.max.y - rect.min.y));
    let inside_side = match side {
        0 | 2 => c.x > rect.min.x + tol && c.x < rect.max.x - tol,
        _ => c.y > rect.min.y + tol && c.y < rect.max.y - tol,
    };
    inside_side.then_some((c, side))
}

/// True iff `path` meets B₁ only at the coordinates of b (= b̃).
pub fn sp_avoids_b1(path: &Polyline, d: &RopeDomain) -> bool {
    let b = d.b();
    for s in path.segments() {
        for e in d.b1_edges() {
            match segment_intersection(s, d.edge(e)) {
                Intersection::Empty => {}
                Intersection::Point(x) if x == b => {}
                _ => return false,
            }
        }
    }
    if path.len() == 1 {
        let x = path.first();
        return x == b || d.b1_edges().all(|e| !d.edge(e).contains(x));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::signed_area;
    use crate::polygon::{verify_ray, visibility_from_infinity, point_in_ring, Containment};
    use alloc::vec;

    fn poly(v: &[(f64, f64)]) -> SimplePolygon {
        SimplePolygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn square() -> SimplePolygon {
        poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)])
    }

    #[test]
    fn rectangle_of_unit_square() {
        let r = bounding_rectangle(&square(), 0.1).unwrap();
        let m = 0.1 * 2f64.sqrt();
        assert!((r.min.x + m).abs() < 1e-15 && (r.max.y - 1.0 - m).abs() < 1e-15);
        assert!(bounding_rectangle(&square(), 0.0).is_err());
        assert!(bounding_rectangle(&square(), f64::NAN).is_err());
    }

    #[test]
    fn thin_polygon_keeps_clearance() {
        let p = poly(&[(0., 0.), (100., 0.), (100., 1e-3)]);
        let r = bounding_rectangle(&p, 0.25).unwrap();
        assert!(r.min.y < -20.0 && r.max.y > 20.0);
    }

    #[test]
    fn square_corner_domain_layout() {
        let p = square();
        let cert = verify_ray(&p, 2, Vector::new(1.0, 1.0)).unwrap();
        let d = build_domain(&p, 2, &cert, DEFAULT_MARGIN).unwrap();
        assert_eq!(d.len(), 11);
        // (1,1) hits R exactly at a corner, so the ray was re-chosen
        assert_ne!(d.ray(), cert.ray_direction);
        assert_eq!(d.b(), Point::new(1.0, 1.0));
        assert_eq!(d.b_tilde(), d.b());
        assert_eq!(d.c(), d.c_tilde());
        // B₂ walks the square clockwise from b
        assert_eq!(&d.ring()[7..], &[
            Point::new(1., 1.),
            Point::new(1., 0.),
            Point::new(0., 0.),
            Point::new(0., 1.)
        ]);
        assert!(d.validate().is_ok());
        assert!(signed_area(d.ring()) > 0.0);
        let r = d.rect();
        let expect = (r.max.x - r.min.x) * (r.max.y - r.min.y) - 1.0;
        assert!((d.area() - expect).abs() < 1e-12);
    }

    #[test]
    fn b1_vertices_other_than_b_are_convex() {
        let p = poly(&[(0., 0.), (4., 0.), (4., 3.), (2., 1.), (0., 3.)]);
        for k in 0..p.len() {
            if let Some(cert) = visibility_from_infinity(&p, k).unwrap().certificate() {
                let d = build_domain(&p, k, &cert, 0.25).unwrap();
                d.validate().unwrap();
                for pos in (C_TILDE..=C).filter(|&q| q != B_TILDE && q != B) {
                    assert!(!d.is_reflex(pos), "vertex {k} pos {pos}");
                    let m = d.len();
                    assert!(orient(d.point((pos + m - 1) % m), d.point(pos), d.point(pos + 1)) > 0);
                }
            }
        }
    }

    #[test]
    fn positions_roundtrip() {
        let p = poly(&[(0., 0.), (4., 0.), (4., 3.), (2., 1.), (0., 3.)]);
        let cert = visibility_from_infinity(&p, 1).unwrap().certificate().unwrap();
        let d = build_domain(&p, 1, &cert, 0.25).unwrap();
        for j in 0..p.len() {
            let pos = d.position_of_vertex(j);
            assert_eq!(d.vertex_at(pos), Some(j));
            assert_eq!(d.point(pos), p.vertex(j));
        }
        assert_eq!(d.vertex_at(B_TILDE), Some(1));
        assert_eq!(d.vertex_at(3), None);
    }

    #[test]
    fn cut_midpoint_is_interior() {
        let p = poly(&[
            (0., 0.),
            (6., 0.),
            (6., 3.),
            (5., 3.),
            (5., 1.),
            (4., 1.),
            (4., 3.),
            (3., 3.),
            (3., 1.),
            (2., 1.),
            (2., 3.),
            (1., 3.),
            (1., 1.),
            (0., 1.),
        ]);
        let cert = visibility_from_infinity(&p, 13).unwrap().certificate().unwrap();
        let d = build_domain(&p, 13, &cert, 0.25).unwrap();
        d.validate().unwrap();
        let mid = d.b().midpoint(d.c());
        assert_eq!(p.contains(mid), Containment::Outside);
        let r = d.rect().corners();
        assert_eq!(point_in_ring(&r, mid), Containment::Inside);
    }

    #[test]
    fn avoids_b1_examples() {
        let p = square();
        let cert = verify_ray(&p, 2, Vector::new(2.0, 1.0)).unwrap();
        let d = build_domain(&p, 2, &cert, 0.25).unwrap();
        let hull: Vec<Point> = vec![d.b_tilde(), Point::new(0., 1.), Point::new(0., 0.), Point::new(1., 0.), d.b()];
        assert!(sp_avoids_b1(&Polyline::new(hull).unwrap(), &d));
        let r = d.rect().corners();
        let along_r = Polyline::new(vec![r[0], r[1]]).unwrap();
        assert!(!sp_avoids_b1(&along_r, &d));
        let into_slit = Polyline::new(vec![d.b(), d.c()]).unwrap();
        assert!(!sp_avoids_b1(&into_slit, &d));
    }

    #[test]
    fn blocked_ray_is_rejected() {
        let p = poly(&[(0., 0.), (4., 0.), (4., 3.), (2., 1.), (0., 3.)]);
        // a forged certificate pointing through the polygon
        let cert = VisibilityCertificate {
            vertex_index: 3,
            ray_direction: Vector::new(0.0, -1.0),
            free_cone: vec![],
        };
        assert_eq!(build_domain(&p, 3, &cert, 0.25), Err(DomainError::RayIntersectsPolygon));
    }
}
