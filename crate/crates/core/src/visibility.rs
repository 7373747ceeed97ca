//! Visibility-graph shortest paths: an independent (slow) oracle for the
//! funnel engine. Nodes are the endpoints and the strictly reflex ring
//! vertices; edges are exact visibility tests accelerated by a bounding
//! volume hierarchy over the ring edges.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::geodesic::{geodesic_from_parts, Geodesic, Location, PathError};
use crate::geometry::{orient, Aabb, Point, Segment};
use crate::polygon::{point_in_ring, Containment, SimplePolygon};

/// Bounding volume hierarchy over the edges of a closed ring.
#[derive(Debug, Clone)]
pub struct EdgeBvh {
    nodes: Vec<BvhNode>,
    order: Vec<usize>,
}

#[derive(Debug, Clone)]
struct BvhNode {
    bbox: Aabb,
    /// Leaf: range into `order`. Inner: children indices.
    kind: BvhKind,
}

#[derive(Debug, Clone)]
enum BvhKind {
    Leaf(usize, usize),
    Inner(usize, usize),
}

const LEAF_SIZE: usize = 4;

fn edge_box(ring: &[Point], e: usize) -> Aabb {
    let (a, b) = (ring[e], ring[(e + 1) % ring.len()]);
    Aabb {
        min: Point::new(a.x.min(b.x), a.y.min(b.y)),
        max: Point::new(a.x.max(b.x), a.y.max(b.y)),
    }
}

impl EdgeBvh {
    pub fn new(ring: &[Point]) -> Self {
        let mut bvh = Self {
            nodes: Vec::new(),
            order: (0..ring.len()).collect(),
        };
        let n = ring.len();
        if n > 0 {
            bvh.build(ring, 0, n);
        }
        bvh
    }

    fn build(&mut self, ring: &[Point], lo: usize, hi: usize) -> usize {
        let mut bbox = edge_box(ring, self.order[lo]);
        for &e in &self.order[lo + 1..hi] {
            bbox = bbox.union(&edge_box(ring, e));
        }
        let id = self.nodes.len();
        self.nodes.push(BvhNode {
            bbox,
            kind: BvhKind::Leaf(lo, hi),
        });
        if hi - lo <= LEAF_SIZE {
            return id;
        }
        let mid = (lo + hi) / 2;
        let center = |e: usize| {
            let b = edge_box(ring, e);
            (b.min.x + b.max.x, b.min.y + b.max.y)
        };
        let by_x = bbox.width() >= bbox.height();
        self.order[lo..hi].select_nth_unstable_by(mid - lo, |&a, &b| {
            let (ca, cb) = (center(a), center(b));
            if by_x {
                ca.0.total_cmp(&cb.0)
            } else {
                ca.1.total_cmp(&cb.1)
            }
        });
        let l = self.build(ring, lo, mid);
        let r = self.build(ring, mid, hi);
        self.nodes[id].kind = BvhKind::Inner(l, r);
        id
    }

    /// Edges whose bounding boxes meet `query`.
    pub fn query(&self, query: &Aabb, out: &mut Vec<usize>) {
        out.clear();
        if self.nodes.is_empty() {
            return;
        }
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            let node = &self.nodes[i];
            if !node.bbox.overlaps(query) {
                continue;
            }
            match node.kind {
                BvhKind::Leaf(lo, hi) => out.extend_from_slice(&self.order[lo..hi]),
                BvhKind::Inner(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
    }
}

/// Exact visibility inside a counterclockwise, weakly simple ring.
#[derive(Debug, Clone)]
pub struct RingVisibility<'a> {
    ring: &'a [Point],
    bvh: EdgeBvh,
}

#[derive(Debug, Clone, Copy)]
struct End {
    p: Point,
    pos: Option<usize>,
}

impl<'a> RingVisibility<'a> {
    pub fn new(ring: &'a [Point]) -> Self {
        Self {
            ring,
            bvh: EdgeBvh::new(ring),
        }
    }

    fn prev(&self, i: usize) -> Point {
        self.ring[(i + self.ring.len() - 1) % self.ring.len()]
    }

    fn next(&self, i: usize) -> Point {
        self.ring[(i + 1) % self.ring.len()]
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        orient(self.prev(i), self.ring[i], self.next(i)) < 0
    }

    /// Whether the direction from ring vertex `i` towards `target` enters
    /// the closed interior wedge at `i`.
    pub fn wedge_contains(&self, i: usize, target: Point) -> bool {
        let w = self.ring[i];
        let (p, q) = (self.prev(i), self.next(i));
        // the wedge runs counterclockwise from q - w to p - w
        let turn = orient(w, q, p);
        if turn > 0 {
            orient(w, q, target) >= 0 && orient(w, target, p) >= 0
        } else if turn < 0 {
            !(orient(w, p, target) > 0 && orient(w, target, q) > 0)
        } else if (q - w).dot(p - w) < 0.0 {
            orient(w, q, target) >= 0
        } else {
            true
        }
    }

    fn endpoint_ok(&self, end: End, other: Point, copies: &[usize], edges: &[usize]) -> bool {
        match end.pos {
            Some(pos) => self.wedge_contains(pos, other),
            None if !copies.is_empty() => copies.iter().any(|&i| self.wedge_contains(i, other)),
            None => {
                let m = self.ring.len();
                let mut on_edge = false;
                for &e in edges {
                    let (a, b) = (self.ring[e], self.ring[(e + 1) % m]);
                    if Segment::new(a, b).contains(end.p) {
                        on_edge = true;
                        if orient(a, b, other) >= 0 {
                            return true;
                        }
                    }
                }
                !on_edge
            }
        }
    }

    fn visible(&self, s: End, t: End, edges: &mut Vec<usize>, touched: &mut Vec<usize>) -> bool {
        if s.p == t.p {
            // distinct copies of a slit point are on opposite walls
            return s.pos.is_none() || t.pos.is_none() || s.pos == t.pos;
        }
        let m = self.ring.len();
        let bbox = Aabb {
            min: Point::new(s.p.x.min(t.p.x), s.p.y.min(t.p.y)),
            max: Point::new(s.p.x.max(t.p.x), s.p.y.max(t.p.y)),
        };
        self.bvh.query(&bbox, edges);
        touched.clear();
        let seg = Segment::new(s.p, t.p);
        for &e in edges.iter() {
            let (a, b) = (self.ring[e], self.ring[(e + 1) % m]);
            let (o1, o2) = (orient(s.p, t.p, a), orient(s.p, t.p, b));
            let (o3, o4) = (orient(a, b, s.p), orient(a, b, t.p));
            if o1 * o2 < 0 && o3 * o4 < 0 {
                return false;
            }
            for v in [e, (e + 1) % m] {
                if (v == e && o1 == 0 || v != e && o2 == 0) && seg.contains(self.ring[v]) {
                    touched.push(v);
                }
            }
        }
        touched.sort_unstable_by(|&a, &b| self.ring[a].lex_cmp(&self.ring[b]).then(a.cmp(&b)));
        touched.dedup();

        let copies_at = |p: Point, out: &mut Vec<usize>| {
            out.clear();
            out.extend(touched.iter().copied().filter(|&v| self.ring[v] == p));
        };
        let mut copies = Vec::new();
        copies_at(s.p, &mut copies);
        if !self.endpoint_ok(s, t.p, &copies, edges) {
            return false;
        }
        copies_at(t.p, &mut copies);
        if !self.endpoint_ok(t, s.p, &copies, edges) {
            return false;
        }
        let mut k = 0;
        while k < touched.len() {
            let w = self.ring[touched[k]];
            let mut j = k;
            while j < touched.len() && self.ring[touched[j]] == w {
                j += 1;
            }
            if w != s.p && w != t.p {
                let ok = touched[k..j]
                    .iter()
                    .any(|&v| self.wedge_contains(v, s.p) && self.wedge_contains(v, t.p));
                if !ok {
                    return false;
                }
            }
            k = j;
        }
        true
    }

    /// Whether the closed segment between two locations stays in the ring's
    /// closed interior. `Location::OnEdge` is treated as a free point.
    pub fn segment_visible(&self, from: Location, to: Location) -> bool {
        let (s, t) = (self.end(from), self.end(to));
        self.visible(s, t, &mut Vec::new(), &mut Vec::new())
    }

    fn end(&self, loc: Location) -> End {
        match loc {
            Location::Vertex(i) => End {
                p: self.ring[i],
                pos: Some(i),
            },
            Location::OnEdge { point, .. } | Location::Free(point) => End { p: point, pos: None },
        }
    }

    /// Dijkstra over the visibility graph; result ids are ring positions.
    pub fn shortest_path(&self, from: Location, to: Location) -> Result<Geodesic, PathError> {
        let m = self.ring.len();
        for loc in [from, to] {
            match loc {
                Location::Vertex(i) if i >= m => return Err(PathError::NotAVertex(i)),
                Location::Vertex(_) => {}
                Location::OnEdge { point, .. } | Location::Free(point) => {
                    if point_in_ring(self.ring, point) == Containment::Outside {
                        return Err(PathError::Outside(point.x, point.y));
                    }
                }
            }
        }
        let mut nodes = vec![self.end(from), self.end(to)];
        for i in 0..m {
            if self.is_reflex(i) && Some(i) != nodes[0].pos && Some(i) != nodes[1].pos {
                nodes.push(End {
                    p: self.ring[i],
                    pos: Some(i),
                });
            }
        }
        let k = nodes.len();
        let mut dist = vec![f64::INFINITY; k];
        let mut prev = vec![usize::MAX; k];
        let mut done = vec![false; k];
        let mut heap = BinaryHeap::new();
        let (mut edges, mut touched) = (Vec::new(), Vec::new());
        dist[0] = 0.0;
        heap.push(Entry(0.0, 0));
        while let Some(Entry(d, u)) = heap.pop() {
            if done[u] || d > dist[u] {
                continue;
            }
            done[u] = true;
            if u == 1 {
                break;
            }
            for v in 0..k {
                if done[v] {
                    continue;
                }
                let nd = d + nodes[u].p.distance(nodes[v].p);
                if nd < dist[v] && self.visible(nodes[u], nodes[v], &mut edges, &mut touched) {
                    dist[v] = nd;
                    prev[v] = u;
                    heap.push(Entry(nd, v));
                }
            }
        }
        if !done[1] {
            return Err(PathError::Disconnected);
        }
        let mut chain = vec![1usize];
        while *chain.last().unwrap() != 0 {
            chain.push(prev[*chain.last().unwrap()]);
        }
        chain.reverse();
        Ok(geodesic_from_parts(
            chain.iter().map(|&i| nodes[i].p).collect(),
            chain.iter().map(|&i| nodes[i].pos).collect(),
        ))
    }
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

/// Visibility-graph shortest path between two points of a simple polygon.
/// Vertex ids in the result are polygon vertex indices.
pub fn vg_shortest_path(p: &SimplePolygon, x: Point, y: Point) -> Result<Geodesic, PathError> {
    let loc = |q: Point| match p.vertices().iter().position(|&v| v == q) {
        Some(i) => Location::Vertex(i),
        None => Location::Free(q),
    };
    RingVisibility::new(p.vertices()).shortest_path(loc(x), loc(y))
}
