//! SVG 1.1 picture of a solved run: the slit domain, 𝒫, the cuts, the
//! final shooting points and the rope.

use std::fmt::Write as _;

use convex_rope::rope::RopeRun;
use convex_rope::Point;

fn points_attr(pts: &[Point]) -> String {
    let mut s = String::new();
    for (k, p) in pts.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{},{}", p.x, p.y);
    }
    s
}

/// Deterministic for a given run. Element ids: `domain`, `polygon`, `slit`,
/// `cut-<i>`, `shoot-<i>` (i from 1) and `rope`.
pub fn render_svg(run: &RopeRun) -> String {
    let d = &run.domain;
    let r = d.rect();
    let (w, h) = (r.max.x - r.min.x, r.max.y - r.min.y);
    let pad = 0.02 * w.max(h);
    let stroke = 0.002 * (w * w + h * h).sqrt();

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        r.min.x - pad,
        -r.max.y - pad,
        w + 2.0 * pad,
        h + 2.0 * pad
    );
    // flip y so the picture is in the usual orientation
    let _ = writeln!(s, "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"{stroke}\">");
    let _ = writeln!(
        s,
        "<polygon id=\"domain\" points=\"{}\" fill=\"#f4f4f0\" stroke=\"#999999\"/>",
        points_attr(d.ring())
    );
    let _ = writeln!(
        s,
        "<polygon id=\"polygon\" points=\"{}\" fill=\"#d8dde6\" stroke=\"#334455\"/>",
        points_attr(d.polygon().vertices())
    );
    let _ = writeln!(
        s,
        "<line id=\"slit\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#aa3333\"/>",
        d.b().x,
        d.b().y,
        d.c().x,
        d.c().y
    );
    for cut in run.partition.cuts() {
        let _ = writeln!(
            s,
            "<line id=\"cut-{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#7fa07f\" stroke-dasharray=\"{} {}\"/>",
            cut.index,
            cut.u.x,
            cut.u.y,
            cut.v.x,
            cut.v.y,
            3.0 * stroke,
            2.0 * stroke
        );
    }
    let _ = writeln!(
        s,
        "<polyline id=\"rope\" points=\"{}\" stroke=\"#d04010\" stroke-width=\"{}\"/>",
        points_attr(run.rope.vertices()),
        2.0 * stroke
    );
    for (k, p) in run.solution.state.points(&run.partition)[1..=run.partition.n_cuts()].iter().enumerate() {
        let _ = writeln!(
            s,
            "<circle id=\"shoot-{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#1050c0\" stroke=\"none\"/>",
            k + 1,
            p.x,
            p.y,
            2.5 * stroke
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}
