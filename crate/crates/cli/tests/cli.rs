use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use convex_rope::geometry::polyline_length;
use convex_rope::{Point, Polyline};
use convex_rope_cli::format::PolygonFile;
use convex_rope_cli::report::{RunReport, SweepReport};
use tempfile::TempDir;

const SQUARE: &str = "rope-polygon v1\nb 0\n0 0\n4 0\n4 4\n0 4\n";
const HIDDEN: &str = "rope-polygon v1\nb 8\n0 0\n4 0\n4 5\n0 5\n0 2\n2 2\n2 3\n1 3\n1 4\n3 4\n3 1\n0 1\n";
const C_SHAPE: &str = "rope-polygon v1\nb 1\n0 0\n10 0\n10 10\n0 10\n0 7\n7 7\n7 3\n0 3\n";
const BOWTIE: &str = "rope-polygon v1\nb 0\n0 0\n4 4\n4 0\n0 4\n";
const NOTCH: &str = "rope-polygon v1\nb 2\n0 0\n4 0\n4 3\n3 3\n2 1\n1 3\n0 3\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convex-rope"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generated(dir: &TempDir, family: &str, n: usize, seed: u64) -> PathBuf {
    let out = dir.path().join(format!("{family}-{n}-{seed}.txt"));
    let o = run(&["--generate", &format!("{family},{n}"), "--seed", &seed.to_string(), "--output", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let square = write(&dir, "square.txt", SQUARE);
    assert_eq!(code(&run(&["--input", s(&square), "--cuts", "2"])), 0);
    assert_eq!(code(&run(&["--input", s(&write(&dir, "hidden.txt", HIDDEN)), "--cuts", "2"])), 5);
    assert_eq!(code(&run(&["--input", s(&write(&dir, "c.txt", C_SHAPE)), "--cuts", "4"])), 6);
    assert_eq!(code(&run(&["--input", s(&write(&dir, "bowtie.txt", BOWTIE))])), 4);
    assert_eq!(code(&run(&["--input", s(&write(&dir, "bad.txt", "0 0\n1 0\n0 1\n"))])), 4);
    let notch = write(&dir, "notch.txt", NOTCH);
    assert_eq!(code(&run(&["--input", s(&notch), "--a-index", "4"])), 4);
    assert_eq!(code(&run(&["--input", s(&square), "--b-index", "9"])), 4);
    assert_eq!(code(&run(&["--input", s(&dir.path().join("missing.txt"))])), 1);
    assert_eq!(code(&run(&["--input", s(&square), "--no-such-flag"])), 2);

    let mono = generated(&dir, "monotone", 60, 3);
    assert_eq!(code(&run(&["--input", s(&mono), "--b-index", "0", "--cuts", "12", "--max-iters", "1"])), 3);
    assert_eq!(code(&run(&["--input", s(&mono), "--b-index", "0", "--cuts", "12"])), 0);
}

#[test]
fn closed_rope_of_a_notched_rectangle() {
    let dir = TempDir::new().unwrap();
    let notch = write(&dir, "notch.txt", NOTCH);
    let report = dir.path().join("r.json");
    let o = run(&["--input", s(&notch), "--cuts", "3", "--epsilon", "1e-9", "--oracle", "--report", s(&report)]);
    assert_eq!(code(&o), 0);
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("status: converged"), "{stdout}");
    assert!(stdout.contains("oracle length:"), "{stdout}");
    let rep: RunReport = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    // the hull: the notch is bridged, its collinear rim vertices are not turns
    assert_eq!(rep.rope, vec![[4.0, 3.0], [0.0, 3.0], [0.0, 0.0], [4.0, 0.0], [4.0, 3.0]]);
    assert!((rep.rope_length - 14.0).abs() < 1e-9);
    assert!(rep.oracle.unwrap().relative_gap.abs() < 1e-9);
}

#[test]
fn sweep_prints_one_row_per_decade() {
    let dir = TempDir::new().unwrap();
    let mono = generated(&dir, "monotone", 40, 11);
    let report = dir.path().join("sweep.json");
    for parallel in [false, true] {
        let mut args = vec!["--input", s(&mono), "--b-index", "0", "--cuts", "6", "--sweep", "1e0:1e-9", "--report", s(&report)];
        if parallel {
            args.push("--parallel");
        }
        let o = run(&args);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let rep: SweepReport = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
        assert_eq!(rep.rows.len(), 10);
        for (k, row) in rep.rows.iter().enumerate() {
            assert_eq!(row.epsilon, format!("1e-{k}").parse::<f64>().unwrap());
            assert_eq!(row.status, "converged");
        }
        for w in rep.rows.windows(2) {
            assert!(w[1].length <= w[0].length + 1e-9 * w[0].length);
            assert!(w[1].iterations >= w[0].iterations);
        }
    }
}

#[test]
fn svg_shows_every_part_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let mono = generated(&dir, "comb", 30, 5);
    let (svg1, svg2, report) = (dir.path().join("1.svg"), dir.path().join("2.svg"), dir.path().join("r.json"));
    for out in [&svg1, &svg2] {
        let o = run(&["--input", s(&mono), "--cuts", "5", "--svg", s(out), "--report", s(&report)]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    let text = std::fs::read_to_string(&svg1).unwrap();
    assert_eq!(text, std::fs::read_to_string(&svg2).unwrap());
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    for id in ["domain", "polygon", "slit", "rope"] {
        assert_eq!(text.matches(&format!("id=\"{id}\"")).count(), 1, "{id}");
    }
    assert_eq!(text.matches("id=\"cut-").count(), 5);
    assert_eq!(text.matches("id=\"shoot-").count(), 5);

    let rep: RunReport = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let attr = text.split("id=\"rope\" points=\"").nth(1).unwrap().split('"').next().unwrap();
    let drawn: Vec<[f64; 2]> = attr
        .split_whitespace()
        .map(|pair| {
            let (x, y) = pair.split_once(',').unwrap();
            [x.parse().unwrap(), y.parse().unwrap()]
        })
        .collect();
    assert_eq!(drawn, rep.rope);
}

#[test]
fn report_lengths_match_the_stored_iterates() {
    let dir = TempDir::new().unwrap();
    let mono = generated(&dir, "monotone", 50, 21);
    let report = dir.path().join("r.json");
    let o = run(&["--input", s(&mono), "--b-index", "0", "--cuts", "8", "--epsilon", "1e-9", "--history", "--report", s(&report)]);
    assert_eq!(code(&o), 0);
    let rep: RunReport = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(rep.iterations.len() > 1);
    for row in &rep.iterations {
        let gamma = Polyline::new(row.gamma.as_ref().unwrap().iter().map(|&[x, y]| Point::new(x, y)).collect()).unwrap();
        assert!((polyline_length(&gamma) - row.length).abs() <= 1e-9, "j={}", row.j);
    }
    for w in rep.iterations.windows(2) {
        assert!(w[1].length <= w[0].length);
        assert_eq!(w[1].j, w[0].j + 1);
    }
    let last = rep.iterations.last().unwrap();
    assert_eq!(last.gamma.as_ref().unwrap(), &rep.path);
    assert_eq!(last.length, rep.length);
}

#[test]
fn generated_files_are_reproducible_and_round_trip() {
    let dir = TempDir::new().unwrap();
    for family in ["convex", "monotone", "comb"] {
        let a = generated(&dir, family, 57, 9);
        let first = std::fs::read_to_string(&a).unwrap();
        let again = run(&["--generate", &format!("{family},57"), "--seed", "9"]);
        assert_eq!(String::from_utf8(again.stdout).unwrap(), first);
        let other = run(&["--generate", &format!("{family},57"), "--seed", "10"]);
        assert_ne!(String::from_utf8(other.stdout).unwrap(), first);

        let file = PolygonFile::read(&a).unwrap();
        let copy = dir.path().join("copy.txt");
        file.write(&copy).unwrap();
        assert_eq!(PolygonFile::read(&copy).unwrap(), file);
        assert_eq!(std::fs::read_to_string(&copy).unwrap(), first);
    }
}
