//! Ear-clipping triangulation of one or several rings over a shared point
//! array, with triangle adjacency across diagonals and across edges shared
//! between rings.
//!
//! Rings may be weakly simple: coincident points at distinct ring positions
//! (the slit of the rope domain) are tolerated.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use thiserror::Error;

use crate::geometry::{orient, signed_area, Point};
use crate::polygon::SimplePolygon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("ring {0} has fewer than 3 vertices")]
    TooFewVertices(usize),
    #[error("ring {ring}: no ear found with {remaining} vertices left")]
    NoEar { ring: usize, remaining: usize },
    #[error("point id {0} out of range")]
    BadPointId(usize),
}

#[derive(Debug, Clone)]
pub struct Triangulation {
    points: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    /// `neighbors[t][k]` lies across the edge `triangles[t][k] → triangles[t][k + 1]`.
    neighbors: Vec<[Option<usize>; 3]>,
    pieces: Vec<Range<usize>>,
    /// Incident triangles per point (CSR layout).
    incident_start: Vec<usize>,
    incident: Vec<usize>,
}

/// Triangulates a single simple polygon; point ids are vertex indices.
pub fn triangulate(p: &SimplePolygon) -> Result<Triangulation, TriangulationError> {
    let ring: Vec<usize> = (0..p.len()).collect();
    Triangulation::from_rings(p.vertices().to_vec(), &[ring])
}

impl Triangulation {
    /// Triangulates every ring (counterclockwise lists of point ids). The
    /// triangles of ring `i` occupy `piece_triangles(i)`.
    pub fn from_rings(points: Vec<Point>, rings: &[Vec<usize>]) -> Result<Self, TriangulationError> {
        let mut triangles = Vec::new();
        let mut pieces = Vec::with_capacity(rings.len());
        for (r, ring) in rings.iter().enumerate() {
            if let Some(&bad) = ring.iter().find(|&&id| id >= points.len()) {
                return Err(TriangulationError::BadPointId(bad));
            }
            let start = triangles.len();
            ear_clip(&points, ring, r, &mut triangles)?;
            pieces.push(start..triangles.len());
        }

        let mut keys: Vec<(usize, usize, usize, usize)> = Vec::with_capacity(3 * triangles.len());
        for (t, tri) in triangles.iter().enumerate() {
            for k in 0..3 {
                keys.push((tri[k], tri[(k + 1) % 3], t, k));
            }
        }
        keys.sort_unstable();
        let mut neighbors = vec![[None; 3]; triangles.len()];
        for &(a, b, t, k) in &keys {
            if let Ok(pos) = keys.binary_search_by(|e| (e.0, e.1).cmp(&(b, a))) {
                neighbors[t][k] = Some(keys[pos].2);
            }
        }

        let mut counts = vec![0usize; points.len() + 1];
        for tri in &triangles {
            for &v in tri {
                counts[v + 1] += 1;
            }
        }
        for i in 1..counts.len() {
            counts[i] += counts[i - 1];
        }
        let mut fill = counts.clone();
        let mut incident = vec![0; 3 * triangles.len()];
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                incident[fill[v]] = t;
                fill[v] += 1;
            }
        }

        Ok(Self {
            points,
            triangles,
            neighbors,
            pieces,
            incident_start: counts,
            incident,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: usize) -> Point {
        self.points[id]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn triangle(&self, t: usize) -> [usize; 3] {
        self.triangles[t]
    }

    pub fn neighbors(&self, t: usize) -> [Option<usize>; 3] {
        self.neighbors[t]
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    pub fn piece_triangles(&self, piece: usize) -> Range<usize> {
        self.pieces[piece].clone()
    }

    /// Triangles of the consecutive pieces `pieces`.
    pub fn pieces_triangles(&self, pieces: Range<usize>) -> Range<usize> {
        if pieces.is_empty() {
            return 0..0;
        }
        self.pieces[pieces.start].start..self.pieces[pieces.end - 1].end
    }

    pub fn incident_triangles(&self, id: usize) -> &[usize] {
        &self.incident[self.incident_start[id]..self.incident_start[id + 1]]
    }

    pub fn triangle_points(&self, t: usize) -> [Point; 3] {
        let [a, b, c] = self.triangles[t];
        [self.points[a], self.points[b], self.points[c]]
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        signed_area(&self.triangle_points(t))
    }

    pub fn area(&self, range: Range<usize>) -> f64 {
        range.map(|t| self.triangle_area(t)).sum()
    }

    /// Closed exact containment of `p` in triangle `t`.
    pub fn triangle_contains(&self, t: usize, p: Point) -> bool {
        let [a, b, c] = self.triangle_points(t);
        orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0
    }

    /// Index `k` of the edge `(a, b)` (either direction) in triangle `t`.
    pub fn edge_index(&self, t: usize, a: usize, b: usize) -> Option<usize> {
        let tri = self.triangles[t];
        (0..3).find(|&k| {
            let (p, q) = (tri[k], tri[(k + 1) % 3]);
            (p == a && q == b) || (p == b && q == a)
        })
    }
}

struct Ring<'a> {
    pts: &'a [Point],
    ids: &'a [usize],
    prev: Vec<usize>,
    next: Vec<usize>,
}

impl Ring<'_> {
    fn p(&self, i: usize) -> Point {
        self.pts[self.ids[i]]
    }

    fn corner_orient(&self, i: usize) -> i8 {
        orient(self.p(self.prev[i]), self.p(i), self.p(self.next[i]))
    }
}

fn ear_clip(
    pts: &[Point],
    ids: &[usize],
    ring_index: usize,
    out: &mut Vec<[usize; 3]>,
) -> Result<(), TriangulationError> {
    let m = ids.len();
    if m < 3 {
        return Err(TriangulationError::TooFewVertices(ring_index));
    }
    let mut ring = Ring {
        pts,
        ids,
        prev: (0..m).map(|i| (i + m - 1) % m).collect(),
        next: (0..m).map(|i| (i + 1) % m).collect(),
    };
    let mut remaining = m;
    let mut i = 0;
    let mut misses = 0;
    while remaining > 3 {
        if is_ear(&ring, i) {
            let (a, c) = (ring.prev[i], ring.next[i]);
            out.push([ids[a], ids[i], ids[c]]);
            ring.next[a] = c;
            ring.prev[c] = a;
            remaining -= 1;
            misses = 0;
            i = a;
        } else {
            i = ring.next[i];
            misses += 1;
            if misses > remaining {
                return Err(TriangulationError::NoEar {
                    ring: ring_index,
                    remaining,
                });
            }
        }
    }
    if ring.corner_orient(i) <= 0 {
        return Err(TriangulationError::NoEar {
            ring: ring_index,
            remaining,
        });
    }
    out.push([ids[ring.prev[i]], ids[i], ids[ring.next[i]]]);
    Ok(())
}

fn is_ear(ring: &Ring<'_>, i: usize) -> bool {
    let (ia, ic) = (ring.prev[i], ring.next[i]);
    let (a, b, c) = (ring.p(ia), ring.p(i), ring.p(ic));
    if orient(a, b, c) <= 0 {
        return false;
    }
    let (xlo, xhi) = (a.x.min(b.x).min(c.x), a.x.max(b.x).max(c.x));
    let (ylo, yhi) = (a.y.min(b.y).min(c.y), a.y.max(b.y).max(c.y));
    let mut j = ring.next[ic];
    while j != ia {
        let p = ring.p(j);
        let jn = ring.next[j];
        if p.x < xlo || p.x > xhi || p.y < ylo || p.y > yhi {
            j = jn;
            continue;
        }
        if p == a || p == b || p == c {
            // a coincident copy of a corner blocks only if one of its edges
            // heads into the ear
            let (corner_prev, corner_next) = if p == a {
                (c, b)
            } else if p == b {
                (a, c)
            } else {
                (b, a)
            };
            let apex = p;
            for q in [ring.p(ring.prev[j]), ring.p(jn)] {
                if orient(apex, corner_next, q) > 0 && orient(apex, q, corner_prev) > 0 {
                    return false;
                }
            }
        } else if ring.corner_orient(j) <= 0
            && orient(a, b, p) >= 0
            && orient(b, c, p) >= 0
            && orient(c, a, p) >= 0
        {
            return false;
        }
        j = jn;
    }
    true
}
