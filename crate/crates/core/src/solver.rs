//! The multiple-shooting iteration: shooting points on the cuts, the
//! collinear condition at each of them, and the temporary-point update that
//! moves them toward the shortest path b̃ → b.
//!
//! A shooting point is stored as its parameter `s ∈ [0, 1)` along the cut
//! (0 at v, 1 at u). Sweeps are Jacobi-style: every temporary point and
//! every candidate comes from the same snapshot before anything moves.

use alloc::vec::Vec;
use core::f64::consts::PI;

use thiserror::Error;

use crate::domain::{RopeDomain, B, B_TILDE};
use crate::geodesic::{Geodesic, Location, PathError, SleeveScratch};
use crate::geometry::{angle_at, orient, polyline_length_extended, ExtendedFloat, GeometryError, Point, Polyline};
use crate::partition::{make_vertical_partition, CuttingSegment, Partition, PartitionError};
use crate::triangulation::Triangulation;

pub const DEFAULT_EPSILON: f64 = 1e-6;
pub const DEFAULT_MAX_ITERATIONS: usize = 10_000;
pub const DEFAULT_CUTS: usize = 8;
/// Tolerance of the angle form of the collinear condition.
pub const COLLINEAR_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("invalid solver configuration: {0}")]
    Config(&'static str),
    #[error("partition has no valid pieces")]
    InvalidPartition,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("degenerate angle at shooting point {0}: {1}")]
    Angle(usize, GeometryError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("shortest path between temporary points misses cut {0}")]
    NoCrossing(usize),
    #[error("shortest path between temporary points touches B₁ at cut {0}")]
    TouchesB1(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub n_cuts: usize,
    pub epsilon: f64,
    pub max_iterations: usize,
    /// Keep per-cut diagnostics and every iterate's path.
    pub record_history: bool,
    pub angle_tolerance: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            n_cuts: DEFAULT_CUTS,
            epsilon: DEFAULT_EPSILON,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            record_history: false,
            angle_tolerance: COLLINEAR_TOLERANCE,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolverError> {
        if self.n_cuts == 0 {
            return Err(SolverError::Config("at least one cut is required"));
        }
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return Err(SolverError::Config("epsilon must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(SolverError::Config("max_iterations must be at least 1"));
        }
        if !(self.angle_tolerance >= 0.0) {
            return Err(SolverError::Config("angle tolerance must be non-negative"));
        }
        Ok(())
    }
}

/// Shooting points a₁ … a_N as cut parameters; a₀ = b̃ and a_{N+1} = b are
/// implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootingState {
    pub params: Vec<f64>,
    pub j: usize,
}

impl ShootingState {
    /// Shooting point aᵢ, `0 ≤ i ≤ N + 1`.
    pub fn point(&self, part: &Partition, i: usize) -> Point {
        let n = self.params.len();
        if i == 0 {
            part.points()[B_TILDE]
        } else if i == n + 1 {
            part.points()[B]
        } else {
            part.cut(i).point_at(self.params[i - 1])
        }
    }

    pub fn points(&self, part: &Partition) -> Vec<Point> {
        (0..self.params.len() + 2).map(|i| self.point(part, i)).collect()
    }

    fn location(&self, part: &Partition, i: usize) -> Location {
        let n = self.params.len();
        if i == 0 {
            Location::Vertex(B_TILDE)
        } else if i == n + 1 {
            Location::Vertex(B)
        } else {
            let cut = part.cut(i);
            let s = self.params[i - 1];
            if s == 0.0 {
                Location::Vertex(cut.v_id)
            } else {
                Location::OnEdge {
                    a: cut.u_id,
                    b: cut.v_id,
                    point: cut.point_at(s),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Converged,
    IterationCapped,
}

/// Diagnostics of one sweep, taken on the iterate γʲ before it moves.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub j: usize,
    /// γʲ, when history is recorded.
    pub gamma: Option<Polyline>,
    pub length: f64,
    pub length_extended: ExtendedFloat,
    /// Largest committed move ‖aᵢ^next − aᵢ‖.
    pub max_shift: f64,
    /// Number of cuts where the collinear condition fails.
    pub violated: usize,
    /// Per-cut details, when history is recorded.
    pub collinear_flags: Vec<bool>,
    pub angles: Vec<f64>,
    /// ‖âᵢ − aᵢ‖ for the candidate âᵢ, whether or not it was committed.
    pub candidate_shifts: Vec<f64>,
    pub params: Vec<f64>,
    pub candidate_params: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct Solution {
    /// Final γ, including the shooting points.
    pub path: Polyline,
    /// Index in `path` of every shooting point a₁ … a_N.
    pub shooting_indices: Vec<usize>,
    pub state: ShootingState,
    /// Upper angle at each final shooting point.
    pub angles: Vec<f64>,
    pub history: Vec<IterationRecord>,
    pub status: SolveStatus,
    pub iterations: usize,
}

impl Solution {
    /// Length of the final path, summed the way the iterates are.
    pub fn length(&self) -> f64 {
        self.history.last().map_or_else(|| self.path.length(), |r| r.length)
    }

    pub fn converged(&self) -> bool {
        self.status == SolveStatus::Converged
    }
}

pub fn initial_state(part: &Partition) -> ShootingState {
    ShootingState {
        params: alloc::vec![0.0; part.n_cuts()],
        j: 0,
    }
}

/// Evaluation context: the partition mesh plus reusable search buffers.
pub struct Shooter<'a> {
    part: &'a Partition,
    mesh: &'a Triangulation,
    scratch: SleeveScratch,
}

impl<'a> Shooter<'a> {
    pub fn new(part: &'a Partition) -> Result<Self, SolverError> {
        let mesh = part.mesh().ok_or(SolverError::InvalidPartition)?;
        Ok(Self {
            part,
            mesh,
            scratch: SleeveScratch::new(),
        })
    }

    pub fn partition(&self) -> &Partition {
        self.part
    }

    /// SP(aᵢ, aᵢ₊₁) inside piece 𝒟ᵢ, for i = 0..=N.
    pub fn piece_geodesics(&mut self, state: &ShootingState) -> Result<Vec<Geodesic>, SolverError> {
        let n = self.part.n_cuts();
        (0..=n)
            .map(|i| {
                let from = state.location(self.part, i);
                let to = state.location(self.part, i + 1);
                Ok(self.mesh.shortest_path_in(i..i + 1, from, to, &mut self.scratch)?)
            })
            .collect()
    }

    /// Candidate âᵢ = SP(t_prev, t_next) ∩ ξᵢ as a cut parameter, the path
    /// taken inside 𝒟ᵢ₋₁ ∪ 𝒟ᵢ.
    pub fn update_shooting_point(&mut self, t_prev: Location, t_next: Location, i: usize) -> Result<f64, SolverError> {
        let g = self.mesh.shortest_path_in(i - 1..i + 1, t_prev, t_next, &mut self.scratch)?;
        cut_crossing(&g, self.part.cut(i)).ok_or(SolverError::NoCrossing(i))?
    }
}

/// Parameter where a path from one side of the cut to the other meets it.
fn cut_crossing(g: &Geodesic, cut: &CuttingSegment) -> Option<Result<f64, SolverError>> {
    let (u, v) = (cut.u, cut.v);
    let pts = g.points();
    let ids = g.ids();
    let on_cut = |k: usize| -> Option<Result<f64, SolverError>> {
        let p = pts[k];
        if ids[k] == Some(cut.v_id) || p == v {
            return Some(Ok(0.0));
        }
        if ids[k] == Some(cut.u_id) || p == u {
            return Some(Err(SolverError::TouchesB1(cut.index)));
        }
        if orient(v, u, p) == 0 && (p - v).dot(u - v) > 0.0 && (p - u).dot(v - u) > 0.0 {
            let d = u - v;
            return Some(Ok(((p - v).dot(d) / d.norm_squared()).clamp(0.0, 1.0)));
        }
        None
    };
    for k in 0..pts.len() {
        if let Some(r) = on_cut(k) {
            return Some(r);
        }
        if k + 1 == pts.len() {
            break;
        }
        let (p, q) = (pts[k], pts[k + 1]);
        let (op, oq) = (orient(v, u, p), orient(v, u, q));
        if op * oq >= 0 {
            continue;
        }
        // the segment crosses the cut line; only a crossing inside [v, u] counts
        let (ov, ou) = (orient(p, q, v), orient(p, q, u));
        if ou == 0 {
            return Some(Err(SolverError::TouchesB1(cut.index)));
        }
        if ov == 0 {
            return Some(Ok(0.0));
        }
        if ov == ou {
            continue;
        }
        let e = q - p;
        let s = (p - v).cross(e) / (u - v).cross(e);
        if !(s < 1.0) {
            return Some(Err(SolverError::TouchesB1(cut.index)));
        }
        return Some(Ok(s.max(0.0)));
    }
    None
}

/// Upper angle at aᵢ: between the last leg of SP(aᵢ₋₁, aᵢ) and the first
/// leg of SP(aᵢ, aᵢ₊₁), on the side of uᵢ.
pub fn upper_angle_at(part: &Partition, pieces: &[Geodesic], i: usize) -> Result<f64, SolverError> {
    let before = pieces[i - 1].points();
    let after = pieces[i].points();
    if before.len() < 2 || after.len() < 2 {
        return Err(SolverError::Angle(i, GeometryError::ZeroLengthArm));
    }
    let a = after[0];
    angle_at(before[before.len() - 2], a, after[1], part.cut(i).u).map_err(|e| SolverError::Angle(i, e))
}

/// Collinear condition: the upper angle is π at an interior shooting point
/// and at least π at vᵢ.
pub fn collinear_condition_holds(angle: f64, at_v: bool, tol: f64) -> bool {
    if at_v {
        angle >= PI - tol
    } else {
        (angle - PI).abs() <= tol
    }
}

/// t₀ … t_N: the midpoint of a straight piece, otherwise its turn vertex
/// next to aᵢ.
pub fn pick_temporary_points(pieces: &[Geodesic]) -> Vec<Location> {
    pieces
        .iter()
        .map(|g| {
            let pts = g.points();
            if pts.len() <= 2 {
                Location::Free(pts[0].midpoint(pts[pts.len() - 1]))
            } else {
                match g.ids()[1] {
                    Some(id) => Location::Vertex(id),
                    None => Location::Free(pts[1]),
                }
            }
        })
        .collect()
}

/// γ from its pieces, shared shooting points kept once; also returns the
/// index of each aᵢ (i = 1..N) in the result.
pub fn join_pieces(pieces: &[Geodesic]) -> (Vec<Point>, Vec<usize>) {
    let mut pts: Vec<Point> = Vec::new();
    let mut marks = Vec::with_capacity(pieces.len().saturating_sub(1));
    for (k, g) in pieces.iter().enumerate() {
        if k > 0 {
            marks.push(pts.len() - 1);
        }
        let skip = usize::from(k > 0);
        pts.extend_from_slice(&g.points()[skip..]);
    }
    (pts, marks)
}

fn pieces_length(pieces: &[Geodesic]) -> ExtendedFloat {
    pieces
        .iter()
        .fold(ExtendedFloat::ZERO, |acc, g| acc.add(polyline_length_extended(g.points())))
}

/// One sweep: tests the collinear condition at every cut of the snapshot,
/// moves the shooting points where it fails, and reports on the snapshot.
/// Moves are committed only when `commit` is set.
pub fn collinear_update(
    shooter: &mut Shooter<'_>,
    state: &ShootingState,
    config: &SolverConfig,
) -> Result<(ShootingState, bool, IterationRecord, Vec<Geodesic>), SolverError> {
    let part = shooter.part;
    let n = part.n_cuts();
    let pieces = shooter.piece_geodesics(state)?;
    let temps = pick_temporary_points(&pieces);

    let mut next = state.clone();
    next.j += 1;
    let mut all = true;
    let mut max_shift = 0.0f64;
    let mut violated = 0;
    let mut flags = Vec::with_capacity(n);
    let mut angles = Vec::with_capacity(n);
    let mut shifts = Vec::with_capacity(n);
    let mut cand_params = Vec::with_capacity(n);
    for i in 1..=n {
        let s = state.params[i - 1];
        let angle = upper_angle_at(part, &pieces, i)?;
        let ok = collinear_condition_holds(angle, s == 0.0, config.angle_tolerance);
        let cand = shooter.update_shooting_point(temps[i - 1], temps[i], i)?;
        let cut = part.cut(i);
        let shift = cut.point_at(cand).distance(cut.point_at(s));
        if !ok {
            all = false;
            violated += 1;
            next.params[i - 1] = cand;
            max_shift = max_shift.max(shift);
        }
        if config.record_history {
            flags.push(ok);
            angles.push(angle);
            shifts.push(shift);
            cand_params.push(cand);
        }
    }

    let length_extended = pieces_length(&pieces);
    let record = IterationRecord {
        j: state.j,
        gamma: if config.record_history {
            Some(Polyline::new(join_pieces(&pieces).0)?)
        } else {
            None
        },
        length: length_extended.to_f64(),
        length_extended,
        max_shift,
        violated,
        collinear_flags: flags,
        angles,
        candidate_shifts: shifts,
        params: if config.record_history { state.params.clone() } else { Vec::new() },
        candidate_params: cand_params,
    };
    Ok((next, all, record, pieces))
}

/// Runs the iteration on a given partition until every move is shorter than
/// ε or the iteration cap is reached.
pub fn solve_partition(part: &Partition, config: &SolverConfig) -> Result<Solution, SolverError> {
    config.validate()?;
    let mut shooter = Shooter::new(part)?;
    let mut state = initial_state(part);
    let mut history = Vec::new();
    let mut status = SolveStatus::IterationCapped;
    let mut last_pieces = None;
    while state.j <= config.max_iterations {
        let (next, _, record, pieces) = collinear_update(&mut shooter, &state, config)?;
        let done = record.max_shift < config.epsilon;
        history.push(record);
        last_pieces = Some(pieces);
        if done {
            status = SolveStatus::Converged;
            break;
        }
        if state.j == config.max_iterations {
            break;
        }
        state = next;
    }
    let pieces = last_pieces.expect("at least one sweep runs");
    let angles = (1..=part.n_cuts())
        .map(|i| upper_angle_at(part, &pieces, i))
        .collect::<Result<Vec<_>, _>>()?;
    let (pts, shooting_indices) = join_pieces(&pieces);
    let iterations = state.j;
    Ok(Solution {
        path: Polyline::new(pts)?,
        shooting_indices,
        state,
        angles,
        history,
        status,
        iterations,
    })
}

/// Partitions the domain with `config.n_cuts` vertical cuts and solves.
pub fn solve(d: &RopeDomain, config: &SolverConfig) -> Result<(Partition, Solution), SolverError> {
    config.validate()?;
    let part = make_vertical_partition(d, config.n_cuts)?;
    let sol = solve_partition(&part, config)?;
    Ok((part, sol))
}
