//! Run reports: a human table on standard output and a JSON file.

use std::fmt::Write as _;

use convex_rope::solver::IterationRecord;
use convex_rope::Point;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Rows shown on the terminal before the table is elided.
const TABLE_HEAD: usize = 25;

pub fn digest(text: &str) -> String {
    let mut out = String::with_capacity(64);
    for b in Sha256::digest(text.as_bytes()) {
        let _ = write!(out, "{b:02x}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n_cuts: usize,
    pub epsilon: f64,
    pub max_iterations: usize,
    pub seed: u64,
    pub margin: f64,
    pub b_index: usize,
    pub a_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRow {
    pub j: usize,
    pub length: f64,
    pub max_shift: f64,
    pub violated: usize,
    /// The iterate γʲ, when requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<Vec<[f64; 2]>>,
}

impl IterationRow {
    pub fn from_record(r: &IterationRecord) -> Self {
        Self {
            j: r.j,
            length: r.length,
            max_shift: r.max_shift,
            violated: r.violated,
            gamma: r.gamma.as_ref().map(|g| coords(g.vertices())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleEcho {
    pub length: f64,
    pub relative_gap: f64,
    pub hausdorff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub input_digest: String,
    pub config: ConfigEcho,
    pub iterations: Vec<IterationRow>,
    pub status: String,
    pub length: f64,
    pub path: Vec<[f64; 2]>,
    pub rope: Vec<[f64; 2]>,
    pub rope_length: f64,
    pub wall_time_secs: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleEcho>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub epsilon: f64,
    pub length: f64,
    pub iterations: usize,
    pub status: String,
    pub runtime_secs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub input_digest: String,
    pub config: ConfigEcho,
    pub rows: Vec<SweepRow>,
}

pub fn coords(pts: &[Point]) -> Vec<[f64; 2]> {
    pts.iter().map(|p| [p.x, p.y]).collect()
}

pub fn iteration_table(rows: &[IterationRow]) -> String {
    let mut s = format!("{:>6}  {:>22}  {:>12}  {:>8}\n", "j", "length", "max_shift", "violated");
    let elide = rows.len() > 2 * TABLE_HEAD;
    for (k, r) in rows.iter().enumerate() {
        if elide && k == TABLE_HEAD {
            let _ = writeln!(s, "{:>6}", "...");
        }
        if elide && k >= TABLE_HEAD && k < rows.len() - TABLE_HEAD {
            continue;
        }
        let _ = writeln!(s, "{:>6}  {:>22.12}  {:>12.3e}  {:>8}", r.j, r.length, r.max_shift, r.violated);
    }
    s
}

pub fn sweep_table(rows: &[SweepRow]) -> String {
    let mut s = format!("{:>8}  {:>22}  {:>10}  {:>12}  {:>10}\n", "epsilon", "length", "iterations", "runtime (s)", "status");
    for r in rows {
        let _ = writeln!(
            s,
            "{:>8.0e}  {:>22.6}  {:>10}  {:>12.6}  {:>10}",
            r.epsilon, r.length, r.iterations, r.runtime_secs, r.status
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256() {
        assert_eq!(digest("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn long_tables_are_elided() {
        let rows: Vec<IterationRow> = (0..100)
            .map(|j| IterationRow {
                j,
                length: 1.0,
                max_shift: 0.0,
                violated: 0,
                gamma: None,
            })
            .collect();
        let t = iteration_table(&rows);
        assert_eq!(t.lines().count(), 1 + 2 * TABLE_HEAD + 1);
        assert_eq!(iteration_table(&rows[..10]).lines().count(), 11);
    }
}
