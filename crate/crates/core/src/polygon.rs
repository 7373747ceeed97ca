//! The input polygon: validation, containment, hull, visibility from
//! infinity and x-monotonicity.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::TAU;

use thiserror::Error;

use crate::geometry::{
    normalize_angle, orient, segment_intersection, signed_area, Aabb, Intersection, Point, Segment,
    Vector,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("polygon has zero area")]
    ZeroArea,
    #[error("edges {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("ray from vertex {0} meets the polygon away from the vertex")]
    RayBlocked(usize),
}

/// Simple polygon with counterclockwise vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
    reversed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// Validates a vertex list, reversing it to counterclockwise order if needed.
pub fn validate(vertices: Vec<Point>) -> Result<SimplePolygon, PolygonError> {
    SimplePolygon::new(vertices)
}

impl SimplePolygon {
    pub fn new(mut vertices: Vec<Point>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(PolygonError::NonFinite(i));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vertices[a].lex_cmp(&vertices[b]));
        for w in order.windows(2) {
            if vertices[w[0]] == vertices[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(PolygonError::DuplicateVertex(a, b));
            }
        }
        if let Some((i, j)) = first_edge_conflict(&vertices) {
            return Err(PolygonError::SelfIntersection(i, j));
        }
        let area = signed_area(&vertices);
        if area == 0.0 {
            return Err(PolygonError::ZeroArea);
        }
        let reversed = area < 0.0;
        if reversed {
            vertices.reverse();
        }
        Ok(Self { vertices, reversed })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn next_index(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    pub fn prev_index(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(self.vertices[i], self.vertices[self.next_index(i)])
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    /// Whether the input was clockwise and got reversed during validation.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    /// Maps an index of the vertex list as supplied to this polygon's order.
    pub fn index_from_input(&self, i: usize) -> usize {
        if self.reversed {
            self.len() - 1 - i
        } else {
            i
        }
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn bbox(&self) -> Aabb {
        Aabb::of_points(&self.vertices).expect("non-empty polygon")
    }

    /// Strictly convex corner (interior angle below π).
    pub fn is_convex_vertex(&self, i: usize) -> bool {
        orient(self.vertex(self.prev_index(i)), self.vertex(i), self.vertex(self.next_index(i))) > 0
    }

    /// Interior angle strictly above π.
    pub fn is_reflex_vertex(&self, i: usize) -> bool {
        orient(self.vertex(self.prev_index(i)), self.vertex(i), self.vertex(self.next_index(i))) < 0
    }

    pub fn contains(&self, p: Point) -> Containment {
        point_in_ring(&self.vertices, p)
    }
}

/// Exact winding-number containment for a closed ring (either orientation).
/// Rings with coincident walls are handled: crossings of a doubled wall cancel.
pub fn point_in_ring(ring: &[Point], p: Point) -> Containment {
    let n = ring.len();
    let mut winding = 0i32;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        if Segment::new(a, b).contains(p) {
            return Containment::Boundary;
        }
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) > 0 {
                winding += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) < 0 {
            winding -= 1;
        }
    }
    if winding != 0 {
        Containment::Inside
    } else {
        Containment::Outside
    }
}

/// Returns the first pair of edges violating simplicity, if any.
fn first_edge_conflict(v: &[Point]) -> Option<(usize, usize)> {
    let n = v.len();
    first_ring_conflict(v, |a, b, hit| {
        let adjacent = b == a + 1 || (a == 0 && b == n - 1);
        match hit {
            Intersection::Empty => true,
            Intersection::Point(x) if adjacent => {
                let shared = if b == a + 1 { v[b] } else { v[0] };
                *x == shared
            }
            _ => false,
        }
    })
}

/// Smallest pair `(a, b)`, `a < b`, of ring edges whose intersection is
/// rejected by `allowed`. Edge `i` joins `ring[i]` and `ring[i + 1]`;
/// pairs with disjoint bounding boxes are never offered to `allowed`.
pub(crate) fn first_ring_conflict(
    ring: &[Point],
    allowed: impl Fn(usize, usize, &Intersection) -> bool,
) -> Option<(usize, usize)> {
    let n = ring.len();
    let seg = |i: usize| Segment::new(ring[i], ring[(i + 1) % n]);
    let xmin = |i: usize| ring[i].x.min(ring[(i + 1) % n].x);
    let xmax = |i: usize| ring[i].x.max(ring[(i + 1) % n].x);
    let mut by_xmin: Vec<usize> = (0..n).collect();
    by_xmin.sort_by(|&a, &b| xmin(a).total_cmp(&xmin(b)));
    let mut worst: Option<(usize, usize)> = None;
    for (k, &i) in by_xmin.iter().enumerate() {
        let si = seg(i);
        let hi = xmax(i);
        let (ylo, yhi) = (si.p.y.min(si.q.y), si.p.y.max(si.q.y));
        for &j in &by_xmin[k + 1..] {
            if xmin(j) > hi {
                break;
            }
            let sj = seg(j);
            if sj.p.y.max(sj.q.y) < ylo || sj.p.y.min(sj.q.y) > yhi {
                continue;
            }
            let (a, b) = (i.min(j), i.max(j));
            if worst.is_some_and(|w| w <= (a, b)) {
                continue;
            }
            let hit = segment_intersection(seg(a), seg(b));
            if !allowed(a, b, &hit) {
                worst = Some((a, b));
            }
        }
    }
    worst
}

/// Convex hull of a simple polygon as a counterclockwise polygon whose
/// vertices are a subsequence of the input's.
pub fn convex_hull(p: &SimplePolygon) -> SimplePolygon {
    let idx = convex_hull_indices(p);
    SimplePolygon {
        vertices: idx.iter().map(|&i| p.vertex(i)).collect(),
        reversed: false,
    }
}

/// Melkman's linear-time hull of a simple polygonal chain; returns strict
/// hull corners in increasing index order (counterclockwise).
pub fn convex_hull_indices(p: &SimplePolygon) -> Vec<usize> {
    let n = p.len();
    // start at the lexicographically smallest vertex, which is a strict hull corner
    let start = (0..n)
        .min_by(|&a, &b| p.vertex(a).lex_cmp(&p.vertex(b)))
        .expect("non-empty");
    let order: Vec<usize> = (0..n).map(|k| (start + k) % n).collect();
    let pt = |k: usize| p.vertex(order[k]);

    let mut b = 1;
    let mut k = 2;
    while k < n && orient(pt(0), pt(b), pt(k)) == 0 {
        b = k;
        k += 1;
    }
    if k == n {
        // all collinear cannot happen for a validated polygon
        return alloc::vec![order[0], order[b]];
    }
    let mut dq: VecDeque<usize> = VecDeque::new();
    if orient(pt(0), pt(b), pt(k)) > 0 {
        dq.extend([k, 0, b, k]);
    } else {
        dq.extend([k, b, 0, k]);
    }
    for i in (k + 1)..n {
        let v = pt(i);
        let t = dq.len() - 1;
        if orient(pt(dq[t - 1]), pt(dq[t]), v) > 0 && orient(pt(dq[0]), pt(dq[1]), v) > 0 {
            continue;
        }
        while dq.len() >= 2 && orient(pt(dq[dq.len() - 2]), pt(dq[dq.len() - 1]), v) <= 0 {
            dq.pop_back();
        }
        dq.push_back(i);
        while dq.len() >= 2 && orient(v, pt(dq[0]), pt(dq[1])) <= 0 {
            dq.pop_front();
        }
        dq.push_front(i);
    }
    dq.pop_back();
    let mut hull: Vec<usize> = dq.into_iter().map(|k| order[k]).collect();
    // rotate so the sequence starts at its smallest original index
    let lo = hull
        .iter()
        .enumerate()
        .min_by_key(|&(_, &i)| i)
        .map(|(pos, _)| pos)
        .unwrap_or(0);
    hull.rotate_left(lo);
    hull
}

/// Counterclockwise angular interval `[start, start + width]` (radians).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularInterval {
    pub start: f64,
    pub width: f64,
}

impl AngularInterval {
    pub fn end(&self) -> f64 {
        self.start + self.width
    }

    /// Angle at the given fraction of the interval, normalized to `[0, 2π)`.
    pub fn at(&self, fraction: f64) -> f64 {
        normalize_angle(self.start + fraction * self.width)
    }

    /// Strict interior membership.
    pub fn contains(&self, angle: f64) -> bool {
        let rel = normalize_angle(angle - self.start);
        rel > 0.0 && rel < self.width
    }
}

/// Witness that a polygon vertex is visible from infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct VisibilityCertificate {
    pub vertex_index: usize,
    pub ray_direction: Vector,
    /// Open intervals of unobstructed directions, widest first.
    pub free_cone: Vec<AngularInterval>,
}

impl VisibilityCertificate {
    /// The free interval containing the certificate's ray.
    pub fn interval_of_ray(&self) -> Option<AngularInterval> {
        let a = self.ray_direction.angle();
        self.free_cone.iter().copied().find(|iv| iv.contains(a))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Visibility {
    Visible(VisibilityCertificate),
    NotVisible,
}

impl Visibility {
    pub fn certificate(self) -> Option<VisibilityCertificate> {
        match self {
            Visibility::Visible(c) => Some(c),
            Visibility::NotVisible => None,
        }
    }
}

/// Decides whether vertex `vertex_index` sees infinity, by subtracting the
/// directions occluded by every non-incident edge (and the interior cone)
/// from the circle of directions.
pub fn visibility_from_infinity(
    p: &SimplePolygon,
    vertex_index: usize,
) -> Result<Visibility, PolygonError> {
    if vertex_index >= p.len() {
        return Err(PolygonError::IndexOutOfRange(vertex_index));
    }
    let mut free = free_directions(p, vertex_index);
    free.sort_by(|a, b| {
        b.width
            .total_cmp(&a.width)
            .then(normalize_angle(a.start).total_cmp(&normalize_angle(b.start)))
    });
    for iv in &free {
        let dir = Vector::from_angle(iv.at(0.5));
        if ray_is_clear(p, vertex_index, dir) {
            return Ok(Visibility::Visible(VisibilityCertificate {
                vertex_index,
                ray_direction: dir,
                free_cone: free.clone(),
            }));
        }
    }
    Ok(Visibility::NotVisible)
}

/// Checks a caller-supplied ray direction and wraps it in a certificate.
pub fn verify_ray(
    p: &SimplePolygon,
    vertex_index: usize,
    direction: Vector,
) -> Result<VisibilityCertificate, PolygonError> {
    if vertex_index >= p.len() {
        return Err(PolygonError::IndexOutOfRange(vertex_index));
    }
    let norm = direction.norm();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(PolygonError::RayBlocked(vertex_index));
    }
    let dir = direction * (1.0 / norm);
    if !ray_is_clear(p, vertex_index, dir) {
        return Err(PolygonError::RayBlocked(vertex_index));
    }
    let mut free = free_directions(p, vertex_index);
    free.sort_by(|a, b| b.width.total_cmp(&a.width));
    Ok(VisibilityCertificate {
        vertex_index,
        ray_direction: dir,
        free_cone: free,
    })
}

fn free_directions(p: &SimplePolygon, vi: usize) -> Vec<AngularInterval> {
    let n = p.len();
    let w = p.vertex(vi);
    let prev = p.vertex(p.prev_index(vi));
    let next = p.vertex(p.next_index(vi));

    // everything is measured relative to the end of the interior cone, so the
    // interior occupies [2π - interior, 2π]
    let origin = (prev - w).angle();
    let interior = {
        let a = normalize_angle((next - w).angle() - origin);
        if a == 0.0 {
            TAU
        } else {
            TAU - a
        }
    };
    let limit = TAU - interior;

    let mut arcs: Vec<(f64, f64)> = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if i == vi || j == vi {
            continue;
        }
        let (a, b) = (p.vertex(i), p.vertex(j));
        let (from, to) = if orient(w, a, b) >= 0 { (a, b) } else { (b, a) };
        let s = normalize_angle((from - w).angle() - origin);
        let width = normalize_angle((to - w).angle() - (from - w).angle());
        // an edge seen from outside subtends less than π
        let width = if width > core::f64::consts::PI { 0.0 } else { width };
        let e = s + width;
        if e > TAU {
            arcs.push((s, TAU));
            arcs.push((0.0, e - TAU));
        } else {
            arcs.push((s, e));
        }
    }
    arcs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut out = Vec::new();
    let mut cursor = 0.0_f64;
    let mut first = true;
    for (s, e) in arcs {
        if s >= limit {
            break;
        }
        if s > cursor || (first && s > 0.0) {
            out.push(AngularInterval {
                start: normalize_angle(origin + cursor),
                width: s - cursor,
            });
        }
        first = false;
        cursor = cursor.max(e);
    }
    if cursor < limit {
        out.push(AngularInterval {
            start: normalize_angle(origin + cursor),
            width: limit - cursor,
        });
    }
    out
}

/// Exact test that the ray from vertex `vi` along `dir` touches the polygon
/// only at the vertex.
pub(crate) fn ray_is_clear(p: &SimplePolygon, vi: usize, dir: Vector) -> bool {
    let w = p.vertex(vi);
    let bb = p.bbox();
    let reach = 4.0 * (bb.diagonal() + (w - bb.min).norm() + 1.0);
    let far = w + dir * reach;
    let ray = Segment::new(w, far);
    let n = p.len();
    for i in 0..n {
        let j = (i + 1) % n;
        let hit = segment_intersection(ray, p.edge(i));
        if i == vi || j == vi {
            if hit != Intersection::Point(w) {
                return false;
            }
        } else if !hit.is_empty() {
            return false;
        }
    }
    true
}

/// Leftmost and rightmost vertices bounding two x-monotone chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneSplit {
    /// Minimum x (ties: minimum y). The lower chain runs counterclockwise
    /// from here to `rightmost`.
    pub leftmost: usize,
    /// Maximum x (ties: maximum y).
    pub rightmost: usize,
}

/// `Some(split)` iff the boundary consists of two x-monotone chains meeting
/// at the extreme vertices (monotone in the non-strict sense, so vertical
/// edges are allowed).
pub fn is_x_monotone_boundary(p: &SimplePolygon) -> Option<MonotoneSplit> {
    let n = p.len();
    let key_min = |i: usize| (p.vertex(i).x, p.vertex(i).y);
    let leftmost = (0..n).min_by(|&a, &b| cmp_pair(key_min(a), key_min(b)))?;
    let rightmost = (0..n).max_by(|&a, &b| cmp_pair(key_min(a), key_min(b)))?;
    let mut i = leftmost;
    while i != rightmost {
        let j = p.next_index(i);
        if p.vertex(j).x < p.vertex(i).x {
            return None;
        }
        i = j;
    }
    while i != leftmost {
        let j = p.next_index(i);
        if p.vertex(j).x > p.vertex(i).x {
            return None;
        }
        i = j;
    }
    Some(MonotoneSplit { leftmost, rightmost })
}

fn cmp_pair(a: (f64, f64), b: (f64, f64)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn poly(v: &[(f64, f64)]) -> Result<SimplePolygon, PolygonError> {
        SimplePolygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    const SQUARE: [(f64, f64); 4] = [(0., 0.), (1., 0.), (1., 1.), (0., 1.)];

    #[test]
    fn validate_examples() {
        let ccw = poly(&SQUARE).unwrap();
        assert!(!ccw.was_reversed());
        let cw = poly(&[(0., 0.), (0., 1.), (1., 1.), (1., 0.)]).unwrap();
        assert!(cw.was_reversed());
        assert!(cw.area() > 0.0);
        assert_eq!(cw.index_from_input(1), 2);
        assert!(matches!(
            poly(&[(0., 0.), (2., 2.), (2., 0.), (0., 2.)]),
            Err(PolygonError::SelfIntersection(..))
        ));
    }

    #[test]
    fn validate_errors() {
        assert_eq!(poly(&[(0., 0.), (1., 0.)]), Err(PolygonError::TooFewVertices(2)));
        assert_eq!(
            poly(&[(0., 0.), (1., 0.), (1., 1.), (1., 0.)]),
            Err(PolygonError::DuplicateVertex(1, 3))
        );
        // collinear triple folds back on itself
        assert!(matches!(
            poly(&[(0., 0.), (2., 0.), (1., 0.)]),
            Err(PolygonError::SelfIntersection(..))
        ));
        assert!(matches!(poly(&[(0., 0.), (f64::NAN, 0.), (1., 1.)]), Err(PolygonError::NonFinite(1))));
        // a vertex touching a non-adjacent edge
        assert!(matches!(
            poly(&[(0., 0.), (4., 0.), (4., 4.), (2., 0.), (0., 4.)]),
            Err(PolygonError::SelfIntersection(..))
        ));
    }

    #[test]
    fn collinear_vertices_are_valid() {
        let p = poly(&[(0., 0.), (1., 0.), (2., 0.), (2., 2.), (0., 2.)]).unwrap();
        assert_eq!(p.len(), 5);
        assert!(!p.is_convex_vertex(1) && !p.is_reflex_vertex(1));
    }

    #[test]
    fn containment() {
        let p = poly(&SQUARE).unwrap();
        assert_eq!(p.contains(Point::new(0.5, 0.5)), Containment::Inside);
        assert_eq!(p.contains(Point::new(1.0, 0.5)), Containment::Boundary);
        assert_eq!(p.contains(Point::new(0.0, 0.0)), Containment::Boundary);
        assert_eq!(p.contains(Point::new(1.5, 0.5)), Containment::Outside);
    }

    #[test]
    fn hull_examples() {
        let sq = poly(&SQUARE).unwrap();
        assert_eq!(convex_hull_indices(&sq), vec![0, 1, 2, 3]);
        let dented = poly(&[(0., 0.), (1., 0.), (2., 0.), (2., 2.), (1., 1.), (0., 2.)]).unwrap();
        assert_eq!(convex_hull_indices(&dented), vec![0, 2, 3, 5]);
        assert_eq!(convex_hull(&dented).vertices(), &[
            Point::new(0., 0.),
            Point::new(2., 0.),
            Point::new(2., 2.),
            Point::new(0., 2.)
        ]);
    }

    #[test]
    fn hull_starting_inside_a_pocket() {
        // vertex 0 is reflex, the chain winds back out
        let p = poly(&[(2., 1.), (4., 0.), (4., 4.), (0., 4.), (0., 0.)]).unwrap();
        assert_eq!(convex_hull_indices(&p), vec![1, 2, 3, 4]);
    }

    #[test]
    fn visibility_of_square_corner() {
        let p = poly(&SQUARE).unwrap();
        let cert = visibility_from_infinity(&p, 2).unwrap().certificate().unwrap();
        let d = cert.ray_direction;
        assert!(d.x > 0.0 && d.y > 0.0);
        // the free cone is the exterior 270°
        assert!((cert.free_cone[0].width - 1.5 * core::f64::consts::PI).abs() < 1e-12);
        assert!((d.angle() - core::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn deep_notch_bottom_sees_upward() {
        // U shape: notch from x=4..6 going down to y=1
        let p = poly(&[
            (0., 0.),
            (10., 0.),
            (10., 10.),
            (6., 10.),
            (6., 1.),
            (5., 0.5),
            (4., 1.),
            (4., 10.),
            (0., 10.),
        ])
        .unwrap();
        let cert = visibility_from_infinity(&p, 5).unwrap().certificate().unwrap();
        let d = cert.ray_direction;
        assert!(d.y > 0.0 && d.x.abs() < 0.2);
        assert!(ray_is_clear(&p, 5, d));
    }

    #[test]
    fn verify_explicit_ray() {
        let p = poly(&SQUARE).unwrap();
        assert!(verify_ray(&p, 2, Vector::new(1.0, 2.0)).is_ok());
        assert_eq!(verify_ray(&p, 2, Vector::new(-1.0, -1.0)), Err(PolygonError::RayBlocked(2)));
        // along an incident edge
        assert_eq!(verify_ray(&p, 2, Vector::new(-1.0, 0.0)), Err(PolygonError::RayBlocked(2)));
    }

    #[test]
    fn monotone_examples() {
        let sq = poly(&SQUARE).unwrap();
        assert_eq!(is_x_monotone_boundary(&sq), Some(MonotoneSplit { leftmost: 0, rightmost: 2 }));
        let comb = poly(&[
            (0., 0.),
            (5., 0.),
            (5., 2.),
            (4., 2.),
            (4., 5.),
            (3., 5.),
            (3., 2.),
            (2., 2.),
            (2., 5.),
            (1., 5.),
            (1., 2.),
            (0., 2.),
        ])
        .unwrap();
        assert!(is_x_monotone_boundary(&comb).is_some());
        let spiral = poly(&[
            (0., 0.),
            (6., 0.),
            (6., 6.),
            (1., 6.),
            (1., 2.),
            (4., 2.),
            (4., 4.),
            (3., 4.),
            (3., 3.),
            (2., 3.),
            (2., 5.),
            (5., 5.),
            (5., 1.),
            (0., 1.),
        ]);
        assert!(is_x_monotone_boundary(&spiral.unwrap()).is_none());
    }
}
