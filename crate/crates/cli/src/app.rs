//! Flag handling and the run modes behind the `convex-rope` binary.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Parser;
use convex_rope::geometry::hausdorff_distance;
use convex_rope::partition::PartitionError;
use convex_rope::polygon::SimplePolygon;
use convex_rope::rope::{convex_rope, oracle_path, RopeConfig, RopeError, RopeRun};
use convex_rope::solver::{SolveStatus, SolverConfig, SolverError, DEFAULT_CUTS, DEFAULT_EPSILON, DEFAULT_MAX_ITERATIONS};
use convex_rope::domain::DEFAULT_MARGIN;
use convex_rope::Vector;

use crate::format::{FormatError, PolygonFile};
use crate::generate::{generate, Family};
use crate::report::{self, ConfigEcho, IterationRow, OracleEcho, RunReport, SweepReport, SweepRow};
use crate::svg::render_svg;

pub const EXIT_CONVERGED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CAPPED: i32 = 3;
pub const EXIT_INVALID_INPUT: i32 = 4;
pub const EXIT_NOT_VISIBLE: i32 = 5;
pub const EXIT_NON_MONOTONE: i32 = 6;

/// Convex ropes of simple polygons by multiple shooting.
#[derive(Debug, Clone, Parser)]
#[command(name = "convex-rope", version)]
pub struct Cli {
    /// Polygon file (`rope-polygon v1`).
    #[arg(long, required_unless_present = "generate")]
    pub input: Option<PathBuf>,
    /// End vertex b; overrides the file's `b` line.
    #[arg(long)]
    pub b_index: Option<usize>,
    /// Start vertex a; the rope is closed (a = b) when absent.
    #[arg(long)]
    pub a_index: Option<usize>,
    /// Escape direction for b, as `dx,dy`.
    #[arg(long, value_parser = parse_ray, allow_hyphen_values = true)]
    pub ray: Option<Vector>,
    /// Number of cutting segments N.
    #[arg(long, default_value_t = DEFAULT_CUTS)]
    pub cuts: usize,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[arg(long = "max-iters", default_value_t = DEFAULT_MAX_ITERATIONS)]
    pub max_iters: usize,
    /// Solve once per decade of ε from `hi:lo`, e.g. `1e0:1e-9`.
    #[arg(long, alias = "epsilon-sweep", value_parser = parse_sweep)]
    pub sweep: Option<Sweep>,
    /// Run the sweep's tolerances concurrently; runtimes are then not comparable.
    #[arg(long, requires = "sweep")]
    pub parallel: bool,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// JSON report file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Include every iterate's path in the report.
    #[arg(long)]
    pub history: bool,
    /// Also compute the exact path over the visibility graph and print the gap.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write a random fixture `family,n` (convex, monotone or comb) instead of solving.
    #[arg(long, value_parser = parse_generate)]
    pub generate: Option<(Family, usize)>,
    /// Where `--generate` writes; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Rectangle margin as a fraction of the bounding-box diagonal.
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: f64,
}

fn parse_ray(s: &str) -> Result<Vector, String> {
    let (x, y) = s.split_once(',').ok_or("expected `dx,dy`")?;
    let x: f64 = x.trim().parse().map_err(|_| format!("bad number `{x}`"))?;
    let y: f64 = y.trim().parse().map_err(|_| format!("bad number `{y}`"))?;
    Ok(Vector::new(x, y))
}

/// Tolerances of a sweep, one per decade, largest first.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep(pub Vec<f64>);

fn parse_sweep(s: &str) -> Result<Sweep, String> {
    let (a, b) = s.split_once(':').ok_or("expected `hi:lo`")?;
    let exp = |t: &str| -> Result<i32, String> {
        let v: f64 = t.trim().parse().map_err(|_| format!("bad number `{t}`"))?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(format!("`{t}` is not a positive tolerance"));
        }
        Ok(v.log10().round() as i32)
    };
    let (hi, lo) = {
        let (x, y) = (exp(a)?, exp(b)?);
        (x.max(y), x.min(y))
    };
    Ok(Sweep((lo..=hi).rev().map(|k| format!("1e{k}").parse().unwrap()).collect()))
}

fn parse_generate(s: &str) -> Result<(Family, usize), String> {
    let (f, n) = s.split_once(',').ok_or("expected `family,n`")?;
    let n: usize = n.trim().parse().map_err(|_| format!("bad vertex count `{n}`"))?;
    if n < 3 {
        return Err("a polygon needs at least 3 vertices".into());
    }
    Ok((f.trim().parse()?, n))
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<RopeError> for Failure {
    fn from(e: RopeError) -> Self {
        let code = match &e {
            RopeError::NotVisible(_) => EXIT_NOT_VISIBLE,
            RopeError::Partition(PartitionError::NonMonotone)
            | RopeError::Solver(SolverError::Partition(PartitionError::NonMonotone)) => EXIT_NON_MONOTONE,
            RopeError::Polygon(_) | RopeError::NotOnHull(_) | RopeError::Domain(_) => EXIT_INVALID_INPUT,
            RopeError::Solver(SolverError::Config(_)) => EXIT_INVALID_INPUT,
            _ => EXIT_ERROR,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let code = match e {
            FormatError::Io { .. } => EXIT_ERROR,
            _ => EXIT_INVALID_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::new(EXIT_ERROR, format!("cannot write {}: {e}", path.display()))
}

/// Runs the command; human output goes to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if let Some((family, n)) = cli.generate {
        let text = generate(family, n, cli.seed).to_text();
        match &cli.output {
            Some(path) => std::fs::write(path, text).map_err(|e| io_failure(path, e))?,
            None => out.write_all(text.as_bytes()).map_err(|e| Failure::new(EXIT_ERROR, e.to_string()))?,
        }
        return Ok(EXIT_CONVERGED);
    }

    let path = cli.input.as_ref().ok_or_else(|| Failure::new(EXIT_INVALID_INPUT, "--input is required"))?;
    let file = PolygonFile::read(path)?;
    let n = file.vertices.len();
    let b = cli
        .b_index
        .or(file.b)
        .ok_or_else(|| Failure::new(EXIT_INVALID_INPUT, "no b vertex: pass --b-index or add a `b` line"))?;
    let a = cli.a_index.or(file.a);
    for (name, idx) in [("b", Some(b)), ("a", a)] {
        if let Some(i) = idx.filter(|&i| i >= n) {
            return Err(Failure::new(EXIT_INVALID_INPUT, format!("{name} index {i} out of range for {n} vertices")));
        }
    }
    let polygon = SimplePolygon::new(file.vertices.clone()).map_err(|e| Failure::from(RopeError::from(e)))?;
    // indices refer to the file's vertex order, which a clockwise input reverses
    let b_int = polygon.index_from_input(b);
    let a_int = a.map(|i| polygon.index_from_input(i));

    let config = RopeConfig {
        solver: SolverConfig {
            n_cuts: cli.cuts,
            epsilon: cli.epsilon,
            max_iterations: cli.max_iters,
            record_history: cli.history,
            ..SolverConfig::default()
        },
        margin: cli.margin,
        ray: cli.ray.or(file.ray),
        cuts: None,
    };
    let echo = ConfigEcho {
        n_cuts: cli.cuts,
        epsilon: cli.epsilon,
        max_iterations: cli.max_iters,
        seed: cli.seed,
        margin: cli.margin,
        b_index: b,
        a_index: a,
    };
    let digest = report::digest(&file.to_text());
    let w = |out: &mut dyn Write, s: &str| out.write_all(s.as_bytes()).map_err(|e| Failure::new(EXIT_ERROR, e.to_string()));

    if let Some(Sweep(eps)) = &cli.sweep {
        // warm-up, not timed
        convex_rope(&polygon, b_int, a_int, &RopeConfig {
            solver: SolverConfig { epsilon: eps[0], ..config.solver },
            ..config.clone()
        })?;
        let solve_one = |e: f64| -> Result<SweepRow, RopeError> {
            let cfg = RopeConfig {
                solver: SolverConfig { epsilon: e, ..config.solver },
                ..config.clone()
            };
            let t = Instant::now();
            let run = convex_rope(&polygon, b_int, a_int, &cfg)?;
            let secs = t.elapsed().as_secs_f64();
            Ok(SweepRow {
                epsilon: e,
                length: run.rope.length(),
                iterations: run.solution.iterations,
                status: status_name(run.solution.status).into(),
                runtime_secs: secs,
            })
        };
        let rows: Vec<SweepRow> = if cli.parallel {
            std::thread::scope(|scope| {
                let handles: Vec<_> = eps.iter().map(|&e| scope.spawn(move || solve_one(e))).collect();
                handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect::<Result<_, _>>()
            })?
        } else {
            eps.iter().map(|&e| solve_one(e)).collect::<Result<_, _>>()?
        };
        w(out, &report::sweep_table(&rows))?;
        let all_converged = rows.iter().all(|r| r.status == "converged");
        if let Some(path) = &cli.report {
            let rep = SweepReport {
                input_digest: digest,
                config: echo,
                rows,
            };
            write_json(path, &rep)?;
        }
        return Ok(if all_converged { EXIT_CONVERGED } else { EXIT_CAPPED });
    }

    let t = Instant::now();
    let run = convex_rope(&polygon, b_int, a_int, &config)?;
    let secs = t.elapsed().as_secs_f64();
    let rows: Vec<IterationRow> = run.solution.history.iter().map(IterationRow::from_record).collect();
    w(out, &report::iteration_table(&rows))?;
    w(
        out,
        &format!(
            "status: {}  iterations: {}  length: {:.12}  rope length: {:.12}  time: {:.6} s\n",
            status_name(run.solution.status),
            run.solution.iterations,
            run.solution.length(),
            run.rope.length(),
            secs
        ),
    )?;
    let oracle = if cli.oracle { Some(oracle_echo(&run)?) } else { None };
    if let Some(o) = &oracle {
        w(
            out,
            &format!(
                "oracle length: {:.12}  relative gap: {:.3e}  hausdorff: {:.3e}\n",
                o.length, o.relative_gap, o.hausdorff
            ),
        )?;
    }
    if let Some(path) = &cli.svg {
        std::fs::write(path, render_svg(&run)).map_err(|e| io_failure(path, e))?;
    }
    if let Some(path) = &cli.report {
        let rep = RunReport {
            input_digest: digest,
            config: echo,
            iterations: rows,
            status: status_name(run.solution.status).into(),
            length: run.solution.length(),
            path: report::coords(run.solution.path.vertices()),
            rope: report::coords(run.rope.vertices()),
            rope_length: run.rope.length(),
            wall_time_secs: secs,
            oracle,
        };
        write_json(path, &rep)?;
    }
    Ok(match run.solution.status {
        SolveStatus::Converged => EXIT_CONVERGED,
        SolveStatus::IterationCapped => EXIT_CAPPED,
    })
}

fn oracle_echo(run: &RopeRun) -> Result<OracleEcho, Failure> {
    let o = oracle_path(&run.domain)?;
    let length = o.length();
    Ok(OracleEcho {
        length,
        relative_gap: (run.solution.length() - length) / length,
        hausdorff: hausdorff_distance(&run.solution.path, &o),
    })
}

fn write_json<T: serde::Serialize>(path: &std::path::Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::new(EXIT_ERROR, e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| io_failure(path, e))
}

pub fn status_name(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Converged => "converged",
        SolveStatus::IterationCapped => "capped",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_decades() {
        let Sweep(e) = parse_sweep("1e0:1e-9").unwrap();
        assert_eq!(e.len(), 10);
        assert_eq!(e[0], 1.0);
        assert_eq!(e[9], 1e-9);
        assert_eq!(parse_sweep("1e-3:1e-1").unwrap().0, vec![1e-1, 1e-2, 1e-3]);
        assert!(parse_sweep("0:1").is_err());
    }

    #[test]
    fn ray_and_family_flags() {
        assert_eq!(parse_ray("-1,0.5").unwrap(), Vector::new(-1.0, 0.5));
        assert!(parse_ray("1").is_err());
        assert_eq!(parse_generate("comb,30").unwrap(), (Family::Comb, 30));
        assert!(parse_generate("star,30").is_err());
        assert!(parse_generate("convex,2").is_err());
    }
}
