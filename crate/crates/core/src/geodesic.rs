//! Geodesic shortest paths inside triangulated (unions of) polygons: sleeve
//! extraction by breadth-first search over the dual graph, then the funnel
//! algorithm over the portal sequence.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::ops::Range;

use thiserror::Error;

use crate::geometry::{orient, Point, Polyline, Segment};
use crate::polygon::SimplePolygon;
use crate::triangulation::{triangulate, Triangulation, TriangulationError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PathError {
    #[error("query point ({0}, {1}) is outside the polygon")]
    Outside(f64, f64),
    #[error("point id {0} is not a vertex of the searched region")]
    NotAVertex(usize),
    #[error("edge ({0}, {1}) is not an edge of the searched region")]
    NotAnEdge(usize, usize),
    #[error("no sleeve connects the endpoints")]
    Disconnected,
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

/// Where a query point sits relative to the triangulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Location {
    /// A point of the triangulation, by id.
    Vertex(usize),
    /// A point on the edge between two point ids.
    OnEdge { a: usize, b: usize, point: Point },
    /// Anywhere else (interior or boundary); located by search.
    Free(Point),
}

/// A shortest path, with the triangulation point id of every vertex that is
/// one.
#[derive(Debug, Clone, PartialEq)]
pub struct Geodesic {
    points: Vec<Point>,
    ids: Vec<Option<usize>>,
}

impl Geodesic {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn ids(&self) -> &[Option<usize>] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> Point {
        self.points[0]
    }

    pub fn last(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    pub fn polyline(&self) -> Polyline {
        Polyline::new(self.points.clone()).expect("geodesic vertices are distinct")
    }

    pub fn length(&self) -> f64 {
        self.points.windows(2).map(|w| w[0].distance(w[1])).sum()
    }

    /// Single straight segment (or a single point).
    pub fn is_straight(&self) -> bool {
        self.points.len() <= 2
    }

    /// Ids of the turn vertices, excluding the endpoints.
    pub fn interior_vertex_ids(&self) -> Vec<Option<usize>> {
        if self.points.len() < 3 {
            return Vec::new();
        }
        self.ids[1..self.ids.len() - 1].to_vec()
    }

    pub fn reversed(&self) -> Geodesic {
        let mut g = self.clone();
        g.points.reverse();
        g.ids.reverse();
        g
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.points.windows(2).map(|w| Segment::new(w[0], w[1]))
    }
}

/// The path vertex adjacent to the start (or the end), if the path turns.
pub fn first_interior_vertex(g: &Geodesic, from_start: bool) -> Option<Point> {
    let n = g.points.len();
    if n < 3 {
        None
    } else if from_start {
        Some(g.points[1])
    } else {
        Some(g.points[n - 2])
    }
}

/// Reusable buffers for sleeve searches.
#[derive(Debug, Clone, Default)]
pub struct SleeveScratch {
    stamp: Vec<u32>,
    target: Vec<u32>,
    parent: Vec<usize>,
    generation: u32,
    queue: VecDeque<usize>,
    sleeve: Vec<usize>,
}

impl SleeveScratch {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self, n: usize) {
        if self.stamp.len() != n {
            self.stamp = alloc::vec![0; n];
            self.target = alloc::vec![0; n];
            self.parent = alloc::vec![usize::MAX; n];
            self.generation = 0;
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.target.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        self.queue.clear();
        self.sleeve.clear();
    }
}

#[derive(Clone, Copy)]
struct Node {
    p: Point,
    id: Option<usize>,
}

impl Triangulation {
    /// Point of a location.
    pub fn location_point(&self, loc: Location) -> Point {
        match loc {
            Location::Vertex(id) => self.point(id),
            Location::OnEdge { point, .. } | Location::Free(point) => point,
        }
    }

    fn location_id(&self, loc: Location) -> Option<usize> {
        match loc {
            Location::Vertex(id) => Some(id),
            _ => None,
        }
    }

    /// Triangles of `range` that contain the location.
    fn locate(&self, loc: Location, range: &Range<usize>, out: &mut Vec<usize>) -> Result<(), PathError> {
        out.clear();
        match loc {
            Location::Vertex(id) => {
                if id >= self.points().len() {
                    return Err(PathError::NotAVertex(id));
                }
                out.extend(self.incident_triangles(id).iter().copied().filter(|t| range.contains(t)));
                if out.is_empty() {
                    return Err(PathError::NotAVertex(id));
                }
            }
            Location::OnEdge { a, b, .. } => {
                if a >= self.points().len() || b >= self.points().len() {
                    return Err(PathError::NotAnEdge(a, b));
                }
                out.extend(
                    self.incident_triangles(a)
                        .iter()
                        .copied()
                        .filter(|t| range.contains(t) && self.edge_index(*t, a, b).is_some()),
                );
                if out.is_empty() {
                    return Err(PathError::NotAnEdge(a, b));
                }
            }
            Location::Free(p) => {
                out.extend(range.clone().filter(|&t| self.triangle_contains(t, p)));
                if out.is_empty() {
                    // rounding can leave a boundary point just outside; accept
                    // the nearest triangle within a relative tolerance
                    let mut best = (f64::INFINITY, usize::MAX);
                    for t in range.clone() {
                        let [a, b, c] = self.triangle_points(t);
                        let d = Segment::new(a, b)
                            .distance_to(p)
                            .min(Segment::new(b, c).distance_to(p))
                            .min(Segment::new(c, a).distance_to(p));
                        if d < best.0 {
                            best = (d, t);
                        }
                    }
                    let scale = 1.0 + p.x.abs().max(p.y.abs());
                    if best.1 == usize::MAX || best.0 > 1e-9 * scale {
                        return Err(PathError::Outside(p.x, p.y));
                    }
                    out.push(best.1);
                }
            }
        }
        Ok(())
    }

    /// Shortest path between two locations inside the union of the pieces
    /// `pieces` (consecutive piece indices).
    pub fn shortest_path_in(
        &self,
        pieces: Range<usize>,
        from: Location,
        to: Location,
        scratch: &mut SleeveScratch,
    ) -> Result<Geodesic, PathError> {
        let range = self.pieces_triangles(pieces);
        self.shortest_path_range(range, from, to, scratch)
    }

    pub(crate) fn shortest_path_range(
        &self,
        range: Range<usize>,
        from: Location,
        to: Location,
        scratch: &mut SleeveScratch,
    ) -> Result<Geodesic, PathError> {
        let start = Node {
            p: self.location_point(from),
            id: self.location_id(from),
        };
        let end = Node {
            p: self.location_point(to),
            id: self.location_id(to),
        };
        let distinct_copies = matches!((start.id, end.id), (Some(a), Some(b)) if a != b);
        if start.p == end.p && !distinct_copies {
            return Ok(Geodesic {
                points: alloc::vec![start.p],
                ids: alloc::vec![start.id.or(end.id)],
            });
        }

        let mut starts = Vec::new();
        let mut ends = Vec::new();
        self.locate(from, &range, &mut starts)?;
        self.locate(to, &range, &mut ends)?;

        scratch.reset(self.len());
        let g = scratch.generation;
        for &t in &ends {
            scratch.target[t] = g;
        }
        let mut found = None;
        for &t in &starts {
            if scratch.target[t] == g {
                found = Some(t);
                break;
            }
            if scratch.stamp[t] != g {
                scratch.stamp[t] = g;
                scratch.parent[t] = usize::MAX;
                scratch.queue.push_back(t);
            }
        }
        if found.is_none() {
            'bfs: while let Some(t) = scratch.queue.pop_front() {
                for nb in self.neighbors(t).into_iter().flatten() {
                    if !range.contains(&nb) || scratch.stamp[nb] == g {
                        continue;
                    }
                    scratch.stamp[nb] = g;
                    scratch.parent[nb] = t;
                    if scratch.target[nb] == g {
                        found = Some(nb);
                        break 'bfs;
                    }
                    scratch.queue.push_back(nb);
                }
            }
        }
        let last = found.ok_or(PathError::Disconnected)?;
        let mut t = last;
        scratch.sleeve.push(t);
        while scratch.parent[t] != usize::MAX && scratch.stamp[t] == g && !starts.contains(&t) {
            t = scratch.parent[t];
            scratch.sleeve.push(t);
        }
        scratch.sleeve.reverse();

        let mut portals: Vec<(Node, Node)> = Vec::with_capacity(scratch.sleeve.len() + 1);
        portals.push((start, start));
        for w in scratch.sleeve.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            let k = (0..3)
                .find(|&k| self.neighbors(t0)[k] == Some(t1))
                .expect("consecutive sleeve triangles are adjacent");
            let tri = self.triangle(t0);
            let (p, q) = (tri[k], tri[(k + 1) % 3]);
            let right = Node {
                p: self.point(p),
                id: Some(p),
            };
            let left = Node {
                p: self.point(q),
                id: Some(q),
            };
            portals.push((left, right));
        }
        portals.push((end, end));
        Ok(normalize(funnel(&portals)))
    }
}

/// Simple stupid funnel algorithm over `(left, right)` portals; the first
/// and last portals are the degenerate start and end.
fn funnel(portals: &[(Node, Node)]) -> Vec<Node> {
    let mut path = alloc::vec![portals[0].0];
    let mut apex = portals[0].0;
    let (mut left, mut right) = portals[0];
    let (mut left_i, mut right_i) = (0usize, 0usize);
    let mut i = 1;
    while i < portals.len() {
        let (l, r) = portals[i];

        if orient(apex.p, right.p, r.p) >= 0 {
            if apex.p == right.p || orient(apex.p, left.p, r.p) < 0 {
                right = r;
                right_i = i;
            } else {
                path.push(left);
                apex = left;
                right = apex;
                right_i = left_i;
                i = left_i + 1;
                continue;
            }
        }

        if orient(apex.p, left.p, l.p) <= 0 {
            if apex.p == left.p || orient(apex.p, right.p, l.p) > 0 {
                left = l;
                left_i = i;
            } else {
                path.push(right);
                apex = right;
                left = apex;
                left_i = right_i;
                i = right_i + 1;
                continue;
            }
        }
        i += 1;
    }
    let end = portals[portals.len() - 1].0;
    if path.last().map(|n| n.p) != Some(end.p) {
        path.push(end);
    }
    path
}

/// Drops repeated points and exactly collinear interior vertices.
fn normalize(nodes: Vec<Node>) -> Geodesic {
    let mut out: Vec<Node> = Vec::with_capacity(nodes.len());
    for n in nodes {
        if let Some(last) = out.last_mut() {
            if last.p == n.p {
                if last.id.is_none() {
                    last.id = n.id;
                }
                continue;
            }
        }
        while out.len() >= 2 {
            let (a, b) = (out[out.len() - 2].p, out[out.len() - 1].p);
            if orient(a, b, n.p) == 0 && (b - a).dot(n.p - b) > 0.0 {
                out.pop();
            } else {
                break;
            }
        }
        out.push(n);
    }
    Geodesic {
        points: out.iter().map(|n| n.p).collect(),
        ids: out.iter().map(|n| n.id).collect(),
    }
}

/// Shortest path between two points of a simple polygon (boundary allowed).
/// Vertex ids in the result are polygon vertex indices.
pub fn shortest_path(p: &SimplePolygon, x: Point, y: Point) -> Result<Geodesic, PathError> {
    let tri = triangulate(p)?;
    let mut scratch = SleeveScratch::new();
    let loc = |q: Point| match p.vertices().iter().position(|&v| v == q) {
        Some(i) => Location::Vertex(i),
        None => Location::Free(q),
    };
    tri.shortest_path_in(0..1, loc(x), loc(y), &mut scratch)
}

pub(crate) fn geodesic_from_parts(points: Vec<Point>, ids: Vec<Option<usize>>) -> Geodesic {
    normalize(
        points
            .into_iter()
            .zip(ids)
            .map(|(p, id)| Node { p, id })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(f64, f64)]) -> SimplePolygon {
        SimplePolygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn l_shape() -> SimplePolygon {
        poly(&[(0., 0.), (4., 0.), (4., 1.), (1., 1.), (1., 4.), (0., 4.)])
    }

    #[test]
    fn convex_gives_segment() {
        let sq = poly(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.)]);
        let g = shortest_path(&sq, p(0.5, 0.5), p(3., 3.7)).unwrap();
        assert_eq!(g.points(), &[p(0.5, 0.5), p(3., 3.7)]);
        assert!(g.is_straight());
        assert_eq!(first_interior_vertex(&g, true), None);
    }

    #[test]
    fn same_point() {
        let g = shortest_path(&l_shape(), p(0.5, 0.5), p(0.5, 0.5)).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.length(), 0.0);
    }

    #[test]
    fn l_shape_turns_at_reflex_corner() {
        let (x, y) = (p(3.5, 0.5), p(0.5, 3.5));
        let g = shortest_path(&l_shape(), x, y).unwrap();
        assert_eq!(g.points(), &[x, p(1., 1.), y]);
        assert_eq!(g.ids(), &[None, Some(3), None]);
        let expect = x.distance(p(1., 1.)) + p(1., 1.).distance(y);
        assert!((g.length() - expect).abs() < 1e-15);
        assert_eq!(first_interior_vertex(&g, true), Some(p(1., 1.)));
        assert_eq!(first_interior_vertex(&g, false), Some(p(1., 1.)));
    }

    #[test]
    fn boundary_to_boundary_along_edge() {
        let g = shortest_path(&l_shape(), p(4., 0.), p(0., 0.)).unwrap();
        assert_eq!(g.points(), &[p(4., 0.), p(0., 0.)]);
        let g = shortest_path(&l_shape(), p(4., 1.), p(1., 4.)).unwrap();
        assert_eq!(g.points(), &[p(4., 1.), p(1., 1.), p(1., 4.)]);
    }

    #[test]
    fn outside_point_is_rejected() {
        assert!(matches!(
            shortest_path(&l_shape(), p(3., 3.), p(0.5, 0.5)),
            Err(PathError::Outside(..))
        ));
    }

    #[test]
    fn snake_multiple_turns() {
        let s = poly(&[
            (0., 0.),
            (3., 0.),
            (3., 7.),
            (4., 7.),
            (4., 0.),
            (10., 0.),
            (10., 10.),
            (7., 10.),
            (7., 3.),
            (6., 3.),
            (6., 10.),
            (0., 10.),
        ]);
        let x = p(1., 1.);
        let y = p(9., 9.);
        let g = shortest_path(&s, x, y).unwrap();
        let turns: Vec<Point> = g.points()[1..g.len() - 1].to_vec();
        assert_eq!(turns, [p(3., 7.), p(4., 7.), p(6., 3.), p(7., 3.)]);
        for t in &turns {
            let i = s.vertices().iter().position(|v| v == t).unwrap();
            assert!(s.is_reflex_vertex(i));
        }
        let back = shortest_path(&s, y, x).unwrap();
        assert_eq!(back.reversed().points(), g.points());
    }
}
