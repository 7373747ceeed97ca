//! Cutting segments ξᵢ = [uᵢ, vᵢ] (uᵢ on B₁, vᵢ on B₂) and the pieces
//! 𝒟₀ … 𝒟_N they cut the domain into.
//!
//! Cuts are numbered `1..=N` from the b̃ side to the b side. Every piece
//! is stored as a counterclockwise ring of point ids into
//! [`Partition::points`]: ids below the domain length are ring positions,
//! larger ids are cut endpoints that split a ring edge.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::domain::{RopeDomain, B, B_TILDE, C};
use crate::geometry::{orient, segment_intersection, signed_area, Intersection, Point, Segment};
use crate::polygon::{is_x_monotone_boundary, point_in_ring, Containment};
use crate::triangulation::{Triangulation, TriangulationError};
use crate::visibility::RingVisibility;

/// Stations closer than this (relative to the polygon width) to a critical
/// x-coordinate are moved.
const STATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PartitionError {
    #[error("at least one cutting segment is required")]
    NoCuts,
    #[error("polygon boundary is not x-monotone")]
    NonMonotone,
    #[error("station at x = {0} cannot be cut")]
    Station(f64),
    #[error("endpoint of cut {0} is not on the domain boundary")]
    OffBoundary(usize),
    #[error("partition fails: {0:?}")]
    Invalid(PartitionReport),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

/// A point on the domain ring: ring edge `edge` at parameter `param ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Anchor {
    pub edge: usize,
    pub param: f64,
    pub point: Point,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CuttingSegment {
    /// 1-based.
    pub index: usize,
    pub u: Point,
    pub v: Point,
    pub u_anchor: Anchor,
    pub v_anchor: Anchor,
    /// Point ids of `u` and `v`.
    pub u_id: usize,
    pub v_id: usize,
}

impl CuttingSegment {
    pub fn segment(&self) -> Segment {
        Segment::new(self.u, self.v)
    }

    /// Point at parameter `s` (0 at v, 1 at u).
    pub fn point_at(&self, s: f64) -> Point {
        if s == 0.0 {
            self.v
        } else if s == 1.0 {
            self.u
        } else {
            self.v.lerp(self.u, s)
        }
    }
}

#[derive(Debug, Clone)]
pub struct Partition {
    points: Vec<Point>,
    cuts: Vec<CuttingSegment>,
    /// Domain ring with the cut endpoints spliced in.
    extended: Vec<usize>,
    pieces: Option<Vec<Vec<usize>>>,
    mesh: Option<Triangulation>,
    domain_len: usize,
}

/// Outcome of each decomposition condition; `None` means it holds, otherwise
/// the first offending cut (or piece for `bounded` / `coverage`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartitionReport {
    pub containment: Option<usize>,
    pub separation: Option<usize>,
    pub disjoint: Option<(usize, usize)>,
    pub bounded: Option<usize>,
    pub coverage: Option<usize>,
}

impl PartitionReport {
    pub fn all_pass(&self) -> bool {
        *self == PartitionReport::default()
    }
}

impl Partition {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn n_cuts(&self) -> usize {
        self.cuts.len()
    }

    pub fn cuts(&self) -> &[CuttingSegment] {
        &self.cuts
    }

    /// Cut ξᵢ, `1 ≤ i ≤ N`.
    pub fn cut(&self, i: usize) -> &CuttingSegment {
        &self.cuts[i - 1]
    }

    /// Piece rings 𝒟₀ … 𝒟_N, when the cuts are correctly ordered.
    pub fn pieces(&self) -> Option<&[Vec<usize>]> {
        self.pieces.as_deref()
    }

    pub fn piece_points(&self, i: usize) -> Option<Vec<Point>> {
        self.pieces
            .as_ref()
            .map(|p| p[i].iter().map(|&id| self.points[id]).collect())
    }

    /// Triangulation of all pieces, piece `i` in `mesh.piece_triangles(i)`.
    pub fn mesh(&self) -> Option<&Triangulation> {
        self.mesh.as_ref()
    }

    pub fn domain_len(&self) -> usize {
        self.domain_len
    }

    /// Assembles cuts given by their boundary anchors, in order ξ₁ … ξ_N.
    /// Fails only when an anchor is malformed; all decomposition conditions
    /// are left to [`verify_partition`].
    pub fn from_anchors(d: &RopeDomain, anchors: &[(Anchor, Anchor)]) -> Result<Self, PartitionError> {
        if anchors.is_empty() {
            return Err(PartitionError::NoCuts);
        }
        let m = d.len();
        let mut points = d.ring().to_vec();
        // (edge, param, id) of every anchor strictly inside an edge
        let mut splits: Vec<(usize, f64, usize)> = Vec::new();
        let mut cuts = Vec::with_capacity(anchors.len());
        let mut place = |a: Anchor, points: &mut Vec<Point>| -> usize {
            if a.param == 0.0 {
                a.edge
            } else {
                let id = points.len();
                points.push(a.point);
                splits.push((a.edge, a.param, id));
                id
            }
        };
        for (k, &(ua, va)) in anchors.iter().enumerate() {
            for a in [ua, va] {
                if a.edge >= m || !(0.0..1.0).contains(&a.param) || !a.point.is_finite() {
                    return Err(PartitionError::OffBoundary(k + 1));
                }
            }
            let u_id = place(ua, &mut points);
            let v_id = place(va, &mut points);
            cuts.push(CuttingSegment {
                index: k + 1,
                u: points[u_id],
                v: points[v_id],
                u_anchor: ua,
                v_anchor: va,
                u_id,
                v_id,
            });
        }
        splits.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let mut extended = Vec::with_capacity(points.len());
        let mut s = 0;
        for e in 0..m {
            extended.push(e);
            while s < splits.len() && splits[s].0 == e {
                extended.push(splits[s].2);
                s += 1;
            }
        }

        let mut part = Self {
            points,
            cuts,
            extended,
            pieces: None,
            mesh: None,
            domain_len: m,
        };
        if let Some(pieces) = part.piece_rings() {
            part.mesh = Triangulation::from_rings(part.points.clone(), &pieces).ok();
            part.pieces = Some(pieces);
        }
        Ok(part)
    }

    /// Position of every point id in the extended ring.
    fn extended_positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.points.len()];
        for (k, &id) in self.extended.iter().enumerate() {
            pos[id] = k;
        }
        pos
    }

    /// Piece rings if the cut endpoints are strictly ordered: u increasing
    /// along B₁, v decreasing along B₂, none at b or b̃.
    fn piece_rings(&self) -> Option<Vec<Vec<usize>>> {
        let pos = self.extended_positions();
        let len = self.extended.len();
        let pb = pos[B];
        let us: Vec<usize> = self.cuts.iter().map(|c| pos[c.u_id]).collect();
        let vs: Vec<usize> = self.cuts.iter().map(|c| pos[c.v_id]).collect();
        let n = us.len();
        let ordered = us[0] > 0
            && us.windows(2).all(|w| w[0] < w[1])
            && us[n - 1] < pb
            && vs[n - 1] > pb
            && vs.windows(2).all(|w| w[0] > w[1])
            && vs[0] < len;
        if !ordered {
            return None;
        }
        let ext = &self.extended;
        let mut pieces = Vec::with_capacity(n + 1);
        let mut first: Vec<usize> = ext[..=us[0]].to_vec();
        first.extend_from_slice(&ext[vs[0]..]);
        pieces.push(first);
        for i in 0..n - 1 {
            let mut ring: Vec<usize> = ext[us[i]..=us[i + 1]].to_vec();
            ring.extend_from_slice(&ext[vs[i + 1]..=vs[i]]);
            pieces.push(ring);
        }
        pieces.push(ext[us[n - 1]..=vs[n - 1]].to_vec());
        Some(pieces)
    }
}

/// Finds the ring edge of `chain` nearest to `p` and returns the anchor
/// (exact vertex hits map to parameter 0).
fn locate_anchor(d: &RopeDomain, p: Point, chain: core::ops::Range<usize>) -> Option<Anchor> {
    let tol = 1e-9 * d.bbox().diagonal();
    let m = d.len();
    let mut best: Option<(f64, Anchor)> = None;
    for e in chain {
        let s = d.edge(e);
        if p == s.p {
            return Some(Anchor {
                edge: e,
                param: 0.0,
                point: p,
            });
        }
        let dist = s.distance_to(p);
        if dist <= tol && best.is_none_or(|(bd, _)| dist < bd) {
            let dir = s.q - s.p;
            let t = (p - s.p).dot(dir) / dir.norm_squared();
            let (edge, param) = if t >= 1.0 { ((e + 1) % m, 0.0) } else { (e, t.max(0.0)) };
            let point = if param == 0.0 { d.point(edge) } else { p };
            best = Some((dist, Anchor { edge, param, point }));
        }
    }
    best.map(|(_, a)| a)
}

/// Builds and verifies a partition from user-supplied cuts `(u, v)`, ordered
/// from the b̃ side to the b side.
pub fn make_partition(d: &RopeDomain, cuts: &[(Point, Point)]) -> Result<Partition, PartitionError> {
    let mut anchors = Vec::with_capacity(cuts.len());
    for (k, &(u, v)) in cuts.iter().enumerate() {
        let ua = locate_anchor(d, u, d.b1_edges()).ok_or(PartitionError::OffBoundary(k + 1))?;
        let va = locate_anchor(d, v, d.b2_edges()).ok_or(PartitionError::OffBoundary(k + 1))?;
        anchors.push((ua, va));
    }
    let part = Partition::from_anchors(d, &anchors)?;
    let report = verify_partition(d, &part);
    if !report.all_pass() {
        return Err(PartitionError::Invalid(report));
    }
    Ok(part)
}

/// N vertical cuts at equally spaced stations along the boundary track of an
/// x-monotone polygon, starting just after b and proceeding counterclockwise
/// around 𝒫 (that is, from the b̃ side to the b side of B₂).
pub fn make_vertical_partition(d: &RopeDomain, n_cuts: usize) -> Result<Partition, PartitionError> {
    if n_cuts == 0 {
        return Err(PartitionError::NoCuts);
    }
    let p = d.polygon();
    let split = is_x_monotone_boundary(p).ok_or(PartitionError::NonMonotone)?;
    let xmin = p.vertex(split.leftmost).x;
    let xmax = p.vertex(split.rightmost).x;
    let w = xmax - xmin;

    // lower chain: leftmost → rightmost (counterclockwise), x non-decreasing
    let mut lower = vec![split.leftmost];
    while *lower.last().unwrap() != split.rightmost {
        lower.push(p.next_index(*lower.last().unwrap()));
    }
    let mut upper = vec![split.rightmost];
    while *upper.last().unwrap() != split.leftmost {
        upper.push(p.next_index(*upper.last().unwrap()));
    }

    let b_index = d.b_index();
    let tau_b = if lower.contains(&b_index) {
        p.vertex(b_index).x - xmin
    } else {
        w + (xmax - p.vertex(b_index).x)
    };

    let mut critical: Vec<f64> = p.vertices().iter().map(|v| v.x).collect();
    critical.push(d.c().x);
    critical.sort_by(f64::total_cmp);
    critical.dedup();
    let min_gap = critical
        .windows(2)
        .map(|g| g[1] - g[0])
        .fold(f64::INFINITY, f64::min);
    let near_critical = |x: f64| {
        let i = critical.partition_point(|&c| c < x);
        let tol = STATION_TOLERANCE * w;
        (i < critical.len() && (critical[i] - x).abs() <= tol) || (i > 0 && (x - critical[i - 1]).abs() <= tol)
    };
    let to_chain = |tau: f64| -> (bool, f64) {
        if tau < w {
            (false, xmin + tau)
        } else {
            (true, xmax - (tau - w))
        }
    };

    let period = 2.0 * w;
    let mut anchors = Vec::with_capacity(n_cuts);
    for k in 1..=n_cuts {
        let mut tau = (tau_b + k as f64 * period / (n_cuts + 1) as f64) % period;
        let (_, mut x) = to_chain(tau);
        if near_critical(x) {
            tau = (tau + 0.5 * min_gap) % period;
            x = to_chain(tau).1;
            if near_critical(x) {
                return Err(PartitionError::Station(x));
            }
        }
        let (is_upper, x) = to_chain(tau);
        if !(x > xmin && x < xmax) {
            return Err(PartitionError::Station(x));
        }
        let chain = if is_upper { &upper } else { &lower };
        let (v_anchor, v) = chain_crossing(d, chain, x, is_upper).ok_or(PartitionError::Station(x))?;
        let u_anchor = shoot(d, v, is_upper).ok_or(PartitionError::Station(x))?;
        anchors.push((u_anchor, v_anchor));
    }

    let part = Partition::from_anchors(d, &anchors)?;
    let report = verify_partition(d, &part);
    if !report.all_pass() {
        let bad = report
            .containment
            .or(report.separation)
            .or(report.bounded)
            .or(report.coverage)
            .or(report.disjoint.map(|(a, _)| a))
            .unwrap_or(1);
        let x = anchors
            .get(bad.saturating_sub(1))
            .map(|a| a.1.point.x)
            .unwrap_or(f64::NAN);
        return Err(if report.bounded.is_some() || report.disjoint.is_some() {
            PartitionError::Invalid(report)
        } else {
            PartitionError::Station(x)
        });
    }
    Ok(part)
}

/// Point of a monotone chain at abscissa `x` (strictly inside one edge).
fn chain_crossing(d: &RopeDomain, chain: &[usize], x: f64, is_upper: bool) -> Option<(Anchor, Point)> {
    let p = d.polygon();
    // index of the first chain vertex past x
    let k = if is_upper {
        chain.partition_point(|&i| p.vertex(i).x > x)
    } else {
        chain.partition_point(|&i| p.vertex(i).x < x)
    };
    if k == 0 || k >= chain.len() {
        return None;
    }
    let (j0, j1) = (chain[k - 1], chain[k]);
    let (a, b) = (p.vertex(j0), p.vertex(j1));
    if a.x == x || b.x == x || a.x == b.x {
        return None;
    }
    let y = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
    let v = Point::new(x, y);
    // polygon edge j0 → j1 is walked j1 → j0 in the domain ring
    let edge = d.position_of_vertex(j1);
    let (r0, r1) = (d.point(edge), d.point((edge + 1) % d.len()));
    let param = (x - r0.x) / (r1.x - r0.x);
    Some((
        Anchor {
            edge,
            param,
            point: v,
        },
        v,
    ))
}

/// First point of B₁ hit by the vertical ray from `v` (up for the upper
/// chain, down for the lower one).
fn shoot(d: &RopeDomain, v: Point, up: bool) -> Option<Anchor> {
    let x = v.x;
    let (b, c) = (d.b(), d.c());
    if (b.x - x) * (c.x - x) < 0.0 {
        let ys = b.y + (x - b.x) * (c.y - b.y) / (c.x - b.x);
        if (up && ys > v.y) || (!up && ys < v.y) {
            // the wall facing v: b̃c̃ lies on the left of the ray b → c
            let left = orient(b, c, v) > 0;
            let mut w = Point::new(x, ys);
            // keep the split point on v's side of the slit line
            let raise = (c.x - b.x > 0.0) == left;
            for _ in 0..64 {
                let o = orient(b, c, w);
                if (left && o >= 0) || (!left && o <= 0) {
                    break;
                }
                w.y = if raise { w.y.next_up() } else { w.y.next_down() };
            }
            let (edge, param) = if left {
                (B_TILDE, (x - b.x) / (c.x - b.x))
            } else {
                (C, (x - c.x) / (b.x - c.x))
            };
            return (param > 0.0 && param < 1.0).then_some(Anchor { edge, param, point: w });
        }
    }
    let rect = d.rect();
    let y = if up { rect.max.y } else { rect.min.y };
    let hit = Point::new(x, y);
    // ring edges 1..=5 run c̃ → corners → c along R
    for e in 1..C {
        let s = d.edge(e);
        if s.p.y == y && s.q.y == y && (s.p.x - x) * (s.q.x - x) < 0.0 {
            return Some(Anchor {
                edge: e,
                param: (x - s.p.x) / (s.q.x - s.p.x),
                point: hit,
            });
        }
    }
    None
}

/// Checks the five decomposition conditions independently.
pub fn verify_partition(d: &RopeDomain, part: &Partition) -> PartitionReport {
    let mut report = PartitionReport::default();
    let m = d.len();
    let vis = RingVisibility::new(d.ring());

    for cut in part.cuts() {
        let i = cut.index;
        let in_b1 = cut.u_anchor.edge < B;
        let in_b2 = cut.v_anchor.edge >= B;
        if report.containment.is_none() && !(in_b1 && in_b2 && open_cut_inside(d, &vis, cut)) {
            report.containment = Some(i);
        }
        let at_ends = |id: usize| id == B || id == B_TILDE || (id < m && d.point(id) == d.b());
        if report.separation.is_none() && (at_ends(cut.u_id) || at_ends(cut.v_id) || !in_b1 || !in_b2) {
            report.separation = Some(i);
        }
    }

    'pairs: for (a, ca) in part.cuts().iter().enumerate() {
        for cb in &part.cuts()[a + 1..] {
            if !segment_intersection(ca.segment(), cb.segment()).is_empty() {
                report.disjoint = Some((ca.index, cb.index));
                break 'pairs;
            }
        }
    }

    let rings: Vec<Vec<Point>> = match part.pieces() {
        Some(p) => p.iter().map(|r| r.iter().map(|&id| part.points[id]).collect()).collect(),
        None => {
            report.bounded = Some(0);
            report.coverage = Some(0);
            return report;
        }
    };
    for (k, r) in rings.iter().enumerate() {
        if signed_area(r) <= 0.0 {
            report.bounded.get_or_insert(k);
        }
    }
    let mesh = match part.mesh() {
        Some(mesh) => mesh,
        None => {
            report.bounded.get_or_insert(0);
            report.coverage = Some(0);
            return report;
        }
    };

    let total: f64 = rings.iter().map(|r| signed_area(r)).sum();
    let area = d.area();
    if (total - area).abs() > 1e-9 * area.abs() {
        report.coverage = Some(0);
    }
    for k in 0..rings.len() {
        let tri_area = mesh.area(mesh.piece_triangles(k));
        let ring_area = signed_area(&rings[k]);
        if (tri_area - ring_area).abs() > 1e-9 * ring_area.abs().max(1e-300) {
            report.bounded.get_or_insert(k);
        }
    }
    // interior disjointness: no triangle centroid strictly inside another piece
    let boxes: Vec<_> = rings
        .iter()
        .map(|r| crate::geometry::Aabb::of_points(r).expect("non-empty"))
        .collect();
    'outer: for k in 0..rings.len() {
        for t in mesh.piece_triangles(k) {
            let [a, b, c] = mesh.triangle_points(t);
            let g = Point::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0);
            for (j, r) in rings.iter().enumerate() {
                if j == k {
                    continue;
                }
                let bb = &boxes[j];
                if g.x < bb.min.x || g.x > bb.max.x || g.y < bb.min.y || g.y > bb.max.y {
                    continue;
                }
                if point_in_ring(r, g) == Containment::Inside {
                    report.coverage = Some(k);
                    break 'outer;
                }
            }
        }
    }
    report
}

/// ]u, v[ lies in the open interior of 𝒟.
fn open_cut_inside(d: &RopeDomain, vis: &RingVisibility<'_>, cut: &CuttingSegment) -> bool {
    let m = d.len();
    let (u, v) = (cut.u, cut.v);
    if u == v {
        return false;
    }
    let seg = Segment::new(u, v);
    // edges that carry an endpoint; their contact is judged by direction
    let mut own: Vec<usize> = Vec::with_capacity(6);
    for a in [cut.u_anchor, cut.v_anchor] {
        own.push(a.edge);
        if a.param == 0.0 {
            own.push((a.edge + m - 1) % m);
        }
    }
    if matches!(cut.u_anchor.edge, B_TILDE | C) {
        own.push(B_TILDE);
        own.push(C);
    }
    for e in 0..m {
        if own.contains(&e) {
            continue;
        }
        match segment_intersection(seg, d.edge(e)) {
            Intersection::Empty => {}
            Intersection::Point(x) if x == u || x == v => {}
            _ => return false,
        }
    }
    for (a, other) in [(cut.u_anchor, v), (cut.v_anchor, u)] {
        let ok = if a.param == 0.0 {
            let w = d.point(a.edge);
            let along = |q: Point| orient(w, q, other) == 0 && (q - w).dot(other - w) > 0.0;
            vis.wedge_contains(a.edge, other)
                && !along(d.point((a.edge + m - 1) % m))
                && !along(d.point((a.edge + 1) % m))
        } else {
            let s = d.edge(a.edge);
            orient(s.p, s.q, other) > 0
        };
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::build_domain;
    use crate::polygon::{verify_ray, visibility_from_infinity, SimplePolygon};
    use crate::geometry::Vector;

    fn poly(v: &[(f64, f64)]) -> SimplePolygon {
        SimplePolygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn square_domain() -> RopeDomain {
        let p = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let cert = verify_ray(&p, 2, Vector::new(1.0, 1.0)).unwrap();
        build_domain(&p, 2, &cert, 0.25).unwrap()
    }

    fn comb() -> SimplePolygon {
        poly(&[
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
        ])
    }

    #[test]
    fn square_single_cut() {
        let d = square_domain();
        let part = make_vertical_partition(&d, 1).unwrap();
        assert_eq!(part.n_cuts(), 1);
        let cut = part.cut(1);
        // b = (1,1) sits at track 1; half a period on is the extreme (0,0),
        // so the station gets nudged onto the lower chain
        assert!(cut.v.x > 0.0 && cut.v.x < 1.0);
        let pieces = part.pieces().unwrap();
        assert_eq!(pieces.len(), 2);
        let total: f64 = (0..2).map(|k| signed_area(&part.piece_points(k).unwrap())).sum();
        assert!((total - d.area()).abs() < 1e-12 * d.area());
        assert!(verify_partition(&d, &part).all_pass());
    }

    #[test]
    fn comb_three_cuts() {
        let p = comb();
        let b = 13;
        let cert = visibility_from_infinity(&p, b).unwrap().certificate().unwrap();
        let d = build_domain(&p, b, &cert, 0.25).unwrap();
        let part = make_vertical_partition(&d, 3).unwrap();
        assert_eq!(part.pieces().unwrap().len(), 4);
        for k in 0..4 {
            let ring = part.piece_points(k).unwrap();
            assert!(signed_area(&ring) > 0.0);
        }
        for cut in part.cuts() {
            assert_ne!(point_in_ring(d.ring(), cut.segment().midpoint()), Containment::Outside);
            let piece_a = part.piece_points(cut.index - 1).unwrap();
            let piece_b = part.piece_points(cut.index).unwrap();
            for ring in [piece_a, piece_b] {
                assert_eq!(point_in_ring(&ring, cut.u), Containment::Boundary);
                assert_eq!(point_in_ring(&ring, cut.v), Containment::Boundary);
            }
        }
    }

    #[test]
    fn many_cuts_on_every_vertex() {
        let p = comb();
        for b in 0..p.len() {
            let Some(cert) = visibility_from_infinity(&p, b).unwrap().certificate() else {
                continue;
            };
            let d = build_domain(&p, b, &cert, 0.25).unwrap();
            for n in [1, 2, 5, 13, 40] {
                let part = make_vertical_partition(&d, n).unwrap_or_else(|e| panic!("b={b} n={n}: {e}"));
                assert!(verify_partition(&d, &part).all_pass());
            }
        }
    }

    #[test]
    fn crossing_cuts_fail_disjointness() {
        let d = square_domain();
        let r = d.rect();
        // two cuts from the bottom side to the bottom edge of the square, crossed
        let cuts = [
            (Point::new(0.25, r.min.y), Point::new(0.75, 0.0)),
            (Point::new(0.75, r.min.y), Point::new(0.25, 0.0)),
        ];
        match make_partition(&d, &cuts) {
            Err(PartitionError::Invalid(rep)) => assert_eq!(rep.disjoint, Some((1, 2))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cut_ending_on_b1_fails_chain_condition() {
        let d = square_domain();
        let r = d.rect();
        let cuts = [(Point::new(0.5, r.min.y), Point::new(r.min.x, 0.5))];
        match make_partition(&d, &cuts) {
            Err(PartitionError::OffBoundary(1)) => {}
            Err(PartitionError::Invalid(rep)) => assert!(rep.containment.is_some()),
            other => panic!("{other:?}"),
        }
        // anchors forced onto B₁ for both ends
        let a = Anchor {
            edge: 3,
            param: 0.5,
            point: d.edge(3).midpoint(),
        };
        let b = Anchor {
            edge: 4,
            param: 0.5,
            point: d.edge(4).midpoint(),
        };
        let part = Partition::from_anchors(&d, &[(a, b)]).unwrap();
        let rep = verify_partition(&d, &part);
        assert_eq!(rep.containment, Some(1));
    }

    #[test]
    fn manual_cut_is_accepted() {
        let d = square_domain();
        let r = d.rect();
        let part = make_partition(&d, &[(Point::new(0.5, r.min.y), Point::new(0.5, 0.0))]).unwrap();
        assert!(part.mesh().is_some());
    }

    #[test]
    fn non_monotone_rejected() {
        let p = poly(&[(0., 0.), (4., 0.), (4., 4.), (1., 4.), (1., 2.), (2., 2.), (2., 3.), (3., 3.), (3., 1.), (0., 1.)]);
        let cert = visibility_from_infinity(&p, 0).unwrap().certificate().unwrap();
        let d = build_domain(&p, 0, &cert, 0.25).unwrap();
        assert_eq!(make_vertical_partition(&d, 2).unwrap_err(), PartitionError::NonMonotone);
    }
}
