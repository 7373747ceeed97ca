//! Planar primitives shared by every other module.
//!
//! Predicate signs (orientation, intersection classification) are evaluated
//! with adaptive exact arithmetic; constructed points (intersection points,
//! projections) are ordinary `f64`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::{PI, TAU};
use core::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Angular tolerance used wherever an angle is compared against `π`.
pub const ANGLE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("polyline must have at least one vertex")]
    EmptyPolyline,
    #[error("consecutive polyline vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("angle arm has zero length")]
    ZeroLengthArm,
    #[error("side reference is collinear with the angle's rays")]
    DegenerateReference,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(self, other: Point) -> f64 {
        (other - self).norm()
    }

    /// `self + t (other - self)`.
    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + t * (other.x - self.x),
            self.y + t * (other.y - self.y),
        )
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Lexicographic (x, then y) comparison; monotone along any line.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl Vector {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, o: Vector) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Vector) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Vector {
        Vector::new(-self.y, self.x)
    }

    /// Polar angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        normalize_angle(libm::atan2(self.y, self.x))
    }

    pub fn from_angle(theta: f64) -> Vector {
        Vector::new(libm::cos(theta), libm::sin(theta))
    }

    pub fn normalized(self) -> Vector {
        let n = self.norm();
        Vector::new(self.x / n, self.y / n)
    }
}

impl Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    fn add(self, rhs: Vector) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub<Vector> for Point {
    type Output = Point;
    fn sub(self, rhs: Vector) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        Vector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, rhs: f64) -> Vector {
        Vector::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

/// Maps any finite angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % TAU;
    if t < 0.0 {
        t += TAU;
    }
    if t >= TAU {
        t -= TAU;
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Sign of `(b - a) × (c - a)`, exact for all finite inputs.
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let det = robust::orient2d(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
    );
    if det > 0.0 {
        Orientation::CounterClockwise
    } else if det < 0.0 {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Exact sign as an integer; shorthand used by the polygon algorithms.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> i8 {
    orientation(a, b, c).sign()
}

/// Closed segment `[p, q]`; `p == q` is the point-segment `{p}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub const fn new(p: Point, q: Point) -> Self {
        Self { p, q }
    }

    pub const fn point(p: Point) -> Self {
        Self { p, q: p }
    }

    pub fn is_degenerate(&self) -> bool {
        self.p == self.q
    }

    pub fn length(&self) -> f64 {
        self.p.distance(self.q)
    }

    pub fn midpoint(&self) -> Point {
        self.p.midpoint(self.q)
    }

    /// Exact closed containment test.
    pub fn contains(&self, x: Point) -> bool {
        if self.is_degenerate() {
            return x == self.p;
        }
        orient(self.p, self.q, x) == 0 && within_box(self.p, self.q, x)
    }

    /// Euclidean distance from `x` to the closed segment.
    pub fn distance_to(&self, x: Point) -> f64 {
        x.distance(self.closest_point(x))
    }

    pub fn closest_point(&self, x: Point) -> Point {
        let d = self.q - self.p;
        let len2 = d.norm_squared();
        if len2 == 0.0 {
            return self.p;
        }
        let t = ((x - self.p).dot(d) / len2).clamp(0.0, 1.0);
        self.p.lerp(self.q, t)
    }
}

fn within_box(a: Point, b: Point, x: Point) -> bool {
    x.x >= a.x.min(b.x) && x.x <= a.x.max(b.x) && x.y >= a.y.min(b.y) && x.y <= a.y.max(b.y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Intersection {
    Empty,
    Point(Point),
    Overlap(Segment),
}

impl Intersection {
    pub fn is_empty(&self) -> bool {
        matches!(self, Intersection::Empty)
    }
}

/// Exact classification of the intersection of two closed segments.
///
/// When the intersection is a single point that coincides with an input
/// endpoint, that endpoint is returned bit-for-bit; otherwise the crossing
/// point is constructed in floating point.
pub fn segment_intersection(s1: Segment, s2: Segment) -> Intersection {
    if s1.is_degenerate() {
        return if s2.contains(s1.p) {
            Intersection::Point(s1.p)
        } else {
            Intersection::Empty
        };
    }
    if s2.is_degenerate() {
        return if s1.contains(s2.p) {
            Intersection::Point(s2.p)
        } else {
            Intersection::Empty
        };
    }

    let o1 = orient(s1.p, s1.q, s2.p);
    let o2 = orient(s1.p, s1.q, s2.q);
    let o3 = orient(s2.p, s2.q, s1.p);
    let o4 = orient(s2.p, s2.q, s1.q);

    if o1 == 0 && o2 == 0 {
        return collinear_overlap(s1, s2);
    }
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return Intersection::Empty;
    }
    if o1 == 0 {
        return Intersection::Point(s2.p);
    }
    if o2 == 0 {
        return Intersection::Point(s2.q);
    }
    if o3 == 0 {
        return Intersection::Point(s1.p);
    }
    if o4 == 0 {
        return Intersection::Point(s1.q);
    }
    Intersection::Point(line_crossing(s1, s2))
}

/// Crossing point of two segments known to cross properly.
fn line_crossing(s1: Segment, s2: Segment) -> Point {
    let d1 = s1.q - s1.p;
    let d2 = s2.q - s2.p;
    let denom = d1.cross(d2);
    let t = ((s2.p - s1.p).cross(d2) / denom).clamp(0.0, 1.0);
    s1.p.lerp(s1.q, t)
}

fn collinear_overlap(s1: Segment, s2: Segment) -> Intersection {
    let (a0, a1) = sorted_pair(s1.p, s1.q);
    let (b0, b1) = sorted_pair(s2.p, s2.q);
    let lo = if a0.lex_cmp(&b0) == Ordering::Less { b0 } else { a0 };
    let hi = if a1.lex_cmp(&b1) == Ordering::Less { a1 } else { b1 };
    match lo.lex_cmp(&hi) {
        Ordering::Greater => Intersection::Empty,
        Ordering::Equal => Intersection::Point(lo),
        Ordering::Less => Intersection::Overlap(Segment::new(lo, hi)),
    }
}

fn sorted_pair(a: Point, b: Point) -> (Point, Point) {
    if a.lex_cmp(&b) == Ordering::Greater {
        (b, a)
    } else {
        (a, b)
    }
}

/// Measure of the angle `prev–apex–next` on the side that contains the ray
/// `apex → side_ref`. The two sides of a polyline vertex sum to `2π`.
pub fn angle_at(prev: Point, apex: Point, next: Point, side_ref: Point) -> Result<f64, GeometryError> {
    let d1 = prev - apex;
    let d2 = next - apex;
    let r = side_ref - apex;
    if d1.norm_squared() == 0.0 || d2.norm_squared() == 0.0 || r.norm_squared() == 0.0 {
        return Err(GeometryError::ZeroLengthArm);
    }

    let turn = orient(apex, prev, next);
    let o1 = orient(apex, prev, side_ref);
    let o2 = orient(apex, next, side_ref);

    if turn == 0 {
        if d1.dot(d2) < 0.0 {
            // straight line: both sides measure π unless the reference runs along it
            if o1 == 0 {
                return Err(GeometryError::DegenerateReference);
            }
            return Ok(PI);
        }
        // folded polyline, one side is empty
        return Err(GeometryError::DegenerateReference);
    }

    // counterclockwise sweep from d1 to d2
    let sweep = normalize_angle(libm::atan2(d1.cross(d2), d1.dot(d2)));

    // a reference lying on one arm borders both sides; take the convex one
    let along_first = o1 == 0 && d1.dot(r) > 0.0;
    let along_second = o2 == 0 && d2.dot(r) > 0.0;
    if along_first || along_second {
        return Ok(sweep.min(TAU - sweep));
    }
    let inside = if turn > 0 {
        // sweep < π
        o1 > 0 && o2 < 0
    } else {
        !(o2 >= 0 && o1 <= 0)
    };
    Ok(if inside { sweep } else { TAU - sweep })
}

/// An ordered chain of points with no two consecutive vertices equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Point>,
}

impl Polyline {
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.is_empty() {
            return Err(GeometryError::EmptyPolyline);
        }
        for (i, w) in vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(GeometryError::RepeatedVertex(i, i + 1));
            }
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { vertices })
    }

    /// Builds a polyline, silently dropping consecutive duplicates.
    pub fn from_points_dedup<I: IntoIterator<Item = Point>>(points: I) -> Result<Self, GeometryError> {
        let mut vertices: Vec<Point> = Vec::new();
        for p in points {
            if vertices.last() != Some(&p) {
                vertices.push(p);
            }
        }
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Point {
        self.vertices[0]
    }

    pub fn last(&self) -> Point {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    pub fn length(&self) -> f64 {
        polyline_length(self)
    }

    pub fn reversed(&self) -> Polyline {
        let mut v = self.vertices.clone();
        v.reverse();
        Polyline { vertices: v }
    }
}

pub fn polyline_length(p: &Polyline) -> f64 {
    p.segments().map(|s| s.length()).sum()
}

/// Distance from `x` to the nearest point of the polyline.
pub fn distance_to_polyline(x: Point, p: &Polyline) -> f64 {
    if p.len() == 1 {
        return x.distance(p.first());
    }
    p.segments()
        .map(|s| s.distance_to(x))
        .fold(f64::INFINITY, f64::min)
}

/// Hausdorff distance between the point sets of two polylines.
pub fn hausdorff_distance(a: &Polyline, b: &Polyline) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

/// `sup_{x ∈ a} d(x, b)`, computed exactly up to rounding.
///
/// Along one segment of `a` the distance to `b` is the lower envelope of the
/// convex distance functions of `b`'s segments, so the supremum sits at a
/// segment endpoint or where two features of `b` (endpoint or supporting
/// line) are equidistant. All such candidates are enumerated.
pub fn directed_hausdorff(a: &Polyline, b: &Polyline) -> f64 {
    let mut best = 0.0_f64;
    if a.len() == 1 {
        return distance_to_polyline(a.first(), b);
    }
    if b.len() == 1 {
        return a.vertices().iter().map(|v| v.distance(b.first())).fold(0.0, f64::max);
    }
    let segs: Vec<Segment> = b.segments().collect();
    let mut kept: Vec<Segment> = Vec::new();
    let mut features: Vec<Feature> = Vec::new();
    let mut candidates: Vec<f64> = Vec::new();
    for seg in a.segments() {
        if segs.iter().any(|s| s.contains(seg.p) && s.contains(seg.q)) {
            continue;
        }
        // every b-segment's distance is convex along `seg`, so the envelope
        // never exceeds `bound`; segments staying farther never attain it
        let bound = segs
            .iter()
            .map(|s| s.distance_to(seg.p).max(s.distance_to(seg.q)))
            .fold(f64::INFINITY, f64::min);
        kept.clear();
        kept.extend(segs.iter().filter(|s| segment_distance(**s, seg) <= bound).copied());
        features_of(&kept, &mut features);

        candidates.clear();
        candidates.push(0.0);
        candidates.push(1.0);
        let o = seg.p;
        let d = seg.q - seg.p;
        for i in 0..features.len() {
            for j in (i + 1)..features.len() {
                equidistant_params(&features[i], &features[j], o, d, &mut candidates);
            }
        }
        for &t in &candidates {
            if (0.0..=1.0).contains(&t) {
                let x = seg.p.lerp(seg.q, t);
                let dist = kept.iter().map(|s| s.distance_to(x)).fold(f64::INFINITY, f64::min);
                best = best.max(dist);
            }
        }
    }
    best
}

fn segment_distance(s: Segment, t: Segment) -> f64 {
    if !segment_intersection(s, t).is_empty() {
        return 0.0;
    }
    s.distance_to(t.p)
        .min(s.distance_to(t.q))
        .min(t.distance_to(s.p))
        .min(t.distance_to(s.q))
}

enum Feature {
    Point(Point),
    /// Unit normal `n` and offset `c` of the line `n · x = c`.
    Line(Vector, f64),
}

fn features_of(segs: &[Segment], out: &mut Vec<Feature>) {
    out.clear();
    for (k, s) in segs.iter().enumerate() {
        // consecutive kept segments share an endpoint
        if k == 0 || segs[k - 1].q != s.p {
            out.push(Feature::Point(s.p));
        }
        out.push(Feature::Point(s.q));
        let n = (s.q - s.p).perp().normalized();
        out.push(Feature::Line(n, n.dot(s.p - Point::default())));
    }
}

/// Pushes every `t` with `dist(o + t d, f) = dist(o + t d, g)`.
fn equidistant_params(f: &Feature, g: &Feature, o: Point, d: Vector, out: &mut Vec<f64>) {
    let ov = o - Point::default();
    match (f, g) {
        (Feature::Point(p), Feature::Point(q)) => {
            // |o + t d - p|² = |o + t d - q|²  is linear in t
            let w = *q - *p;
            let denom = 2.0 * d.dot(w);
            if denom != 0.0 {
                let rhs = q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y - 2.0 * ov.dot(w);
                out.push(rhs / denom);
            }
        }
        (Feature::Line(n1, c1), Feature::Line(n2, c2)) => {
            for sgn in [1.0, -1.0] {
                // n1·x - c1 = ±(n2·x - c2)
                let k = *n1 - *n2 * sgn;
                let denom = k.dot(d);
                if denom != 0.0 {
                    out.push((c1 - c2 * sgn - k.dot(ov)) / denom);
                }
            }
        }
        (Feature::Point(p), Feature::Line(n, c)) | (Feature::Line(n, c), Feature::Point(p)) => {
            // |o + t d - p|² = (n·(o + t d) - c)²
            let w = o - *p;
            let e = n.dot(ov) - c;
            let nd = n.dot(d);
            let qa = d.dot(d) - nd * nd;
            let qb = 2.0 * (w.dot(d) - e * nd);
            let qc = w.dot(w) - e * e;
            solve_quadratic(qa, qb, qc, out);
        }
    }
}

fn solve_quadratic(a: f64, b: f64, c: f64, out: &mut Vec<f64>) {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return;
    }
    if a.abs() <= 1e-14 * scale {
        if b != 0.0 {
            out.push(-c / b);
        }
        return;
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        // tangency lost to rounding still yields a useful candidate
        out.push(-b / (2.0 * a));
        return;
    }
    let sq = libm::sqrt(disc);
    let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    if q != 0.0 {
        out.push(c / q);
    }
    out.push(q / a);
}

/// Double-double value `hi + lo` with `|lo| ≤ ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExtendedFloat {
    pub hi: f64,
    pub lo: f64,
}

impl ExtendedFloat {
    pub const ZERO: ExtendedFloat = ExtendedFloat { hi: 0.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: ExtendedFloat) -> ExtendedFloat {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = quick_two_sum(s, e);
        ExtendedFloat { hi, lo }
    }

    pub fn sub(self, o: ExtendedFloat) -> ExtendedFloat {
        self.add(ExtendedFloat { hi: -o.hi, lo: -o.lo })
    }

    pub fn sqrt(self) -> ExtendedFloat {
        if self.hi <= 0.0 {
            return ExtendedFloat::ZERO;
        }
        let r = libm::sqrt(self.hi);
        let (p, e) = two_prod(r, r);
        let corr = ((self.hi - p) - e + self.lo) / (2.0 * r);
        let (hi, lo) = quick_two_sum(r, corr);
        ExtendedFloat { hi, lo }
    }

    pub fn total_cmp(&self, o: &ExtendedFloat) -> Ordering {
        let d = self.sub(*o);
        d.hi.total_cmp(&0.0).then(d.lo.total_cmp(&0.0))
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn split(a: f64) -> (f64, f64) {
    let c = 134_217_729.0 * a;
    let hi = c - (c - a);
    (hi, a - hi)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

fn square_diff(a: f64, b: f64) -> ExtendedFloat {
    let (dh, dl) = two_sum(a, -b);
    let (p, e) = two_prod(dh, dh);
    let (hi, lo) = quick_two_sum(p, e + 2.0 * dh * dl + dl * dl);
    ExtendedFloat { hi, lo }
}

/// Length of a polyline with roughly 30 significant digits, treating the
/// `f64` vertices as exact. Used where consecutive lengths must be compared
/// below `f64` resolution.
pub fn polyline_length_extended(points: &[Point]) -> ExtendedFloat {
    let mut total = ExtendedFloat::ZERO;
    for w in points.windows(2) {
        let sq = square_diff(w[1].x, w[0].x).add(square_diff(w[1].y, w[0].y));
        total = total.add(sq.sqrt());
    }
    total
}

/// Shoelace signed area (positive for counterclockwise rings).
pub fn signed_area(points: &[Point]) -> f64 {
    let n = points.len();
    if n < 3 {
        return 0.0;
    }
    let o = points[0];
    let mut acc = 0.0;
    for i in 1..n - 1 {
        acc += (points[i] - o).cross(points[i + 1] - o);
    }
    0.5 * acc
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub min: Point,
    pub max: Point,
}

impl Aabb {
    pub fn of_points<'a, I: IntoIterator<Item = &'a Point>>(points: I) -> Option<Aabb> {
        let mut it = points.into_iter();
        let first = *it.next()?;
        let mut bb = Aabb { min: first, max: first };
        for p in it {
            bb.min.x = bb.min.x.min(p.x);
            bb.min.y = bb.min.y.min(p.y);
            bb.max.x = bb.max.x.max(p.x);
            bb.max.y = bb.max.y.max(p.y);
        }
        Some(bb)
    }

    pub fn diagonal(&self) -> f64 {
        self.min.distance(self.max)
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn union(&self, o: &Aabb) -> Aabb {
        Aabb {
            min: Point::new(self.min.x.min(o.min.x), self.min.y.min(o.min.y)),
            max: Point::new(self.max.x.max(o.max.x), self.max.y.max(o.max.y)),
        }
    }

    pub fn overlaps(&self, o: &Aabb) -> bool {
        self.min.x <= o.max.x && o.min.x <= self.max.x && self.min.y <= o.max.y && o.min.y <= self.max.y
    }
}
