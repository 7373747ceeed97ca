//! The `rope-polygon v1` text format: a header line, optional `b`, `a` and
//! `ray` lines, then one `x y` pair per vertex. Blank lines and `#`
//! comments are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use convex_rope::{Point, Vector};
use thiserror::Error;

pub const HEADER: &str = "rope-polygon v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("missing `{HEADER}` header")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0} index {1} out of range for {2} vertices")]
    Anchor(&'static str, usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonFile {
    pub vertices: Vec<Point>,
    pub b: Option<usize>,
    pub a: Option<usize>,
    pub ray: Option<Vector>,
}

impl PolygonFile {
    pub fn new(vertices: Vec<Point>) -> Self {
        Self {
            vertices,
            b: None,
            a: None,
            ray: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, h)) if h == HEADER => {}
            _ => return Err(FormatError::MissingHeader),
        }
        let mut file = PolygonFile::new(Vec::new());
        for (line, l) in lines {
            let err = |msg: String| FormatError::Parse { line, msg };
            let fields: Vec<&str> = l.split_whitespace().collect();
            let num = |s: &str| -> Result<f64, FormatError> {
                let v: f64 = s.parse().map_err(|_| err(format!("`{s}` is not a number")))?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(err(format!("`{s}` is not finite")))
                }
            };
            let index = |s: &str| -> Result<usize, FormatError> {
                s.parse().map_err(|_| err(format!("`{s}` is not a vertex index")))
            };
            match fields.as_slice() {
                ["b", i] if file.vertices.is_empty() => file.b = Some(index(i)?),
                ["a", i] if file.vertices.is_empty() => file.a = Some(index(i)?),
                ["ray", dx, dy] if file.vertices.is_empty() => file.ray = Some(Vector::new(num(dx)?, num(dy)?)),
                [x, y] => file.vertices.push(Point::new(num(x)?, num(y)?)),
                _ => return Err(err(format!("unexpected `{l}`"))),
            }
        }
        let n = file.vertices.len();
        for (name, idx) in [("b", file.b), ("a", file.a)] {
            if let Some(i) = idx.filter(|&i| i >= n) {
                return Err(FormatError::Anchor(name, i, n));
            }
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, FormatError> {
        let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Text form; numbers use the shortest representation that reads back
    /// to the same value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        if let Some(b) = self.b {
            let _ = writeln!(out, "b {b}");
        }
        if let Some(a) = self.a {
            let _ = writeln!(out, "a {a}");
        }
        if let Some(r) = self.ray {
            let _ = writeln!(out, "ray {} {}", r.x, r.y);
        }
        for p in &self.vertices {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
        out
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        fs::write(path, self.to_text())
    }
}
