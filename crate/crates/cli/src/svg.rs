//! Overlay plots: input curves solid, approximants dashed.

use std::fmt::Write as _;

/// Samples per curve.
pub const POLYLINE_POINTS: usize = 512;

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 20.0;

/// A curve flattened to plot coordinates; one-dimensional curves are drawn
/// as graphs `(t, x(t))`, higher dimensions by their first two coordinates.
pub fn polyline(eval: impl Fn(f64) -> Vec<f64>) -> Vec<(f64, f64)> {
    (0..POLYLINE_POINTS)
        .map(|i| {
            let t = i as f64 / (POLYLINE_POINTS - 1) as f64;
            let p = eval(t);
            match p.len() {
                1 => (t, p[0]),
                _ => (p[0], p[1]),
            }
        })
        .collect()
}

pub fn render(inputs: &[Vec<(f64, f64)>], approximants: &[Vec<(f64, f64)>]) -> String {
    let all = inputs.iter().chain(approximants).flatten();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let scale = (WIDTH - 2.0 * MARGIN) / span;
    let height = (y1 - y0) * scale + 2.0 * MARGIN;
    let width = (x1 - x0) * scale + 2.0 * MARGIN;
    // y grows downwards in SVG
    let map = |(x, y): (f64, f64)| ((x - x0) * scale + MARGIN, (y1 - y) * scale + MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for line in inputs {
        push_polyline(&mut out, line, &map, r##"stroke="#c0392b" stroke-width="1.5""##);
    }
    for line in approximants {
        push_polyline(&mut out, line, &map, r##"stroke="#1f4e9c" stroke-width="1.5" stroke-dasharray="6 4""##);
    }
    out.push_str("</svg>\n");
    out
}

fn push_polyline(out: &mut String, line: &[(f64, f64)], map: &impl Fn((f64, f64)) -> (f64, f64), style: &str) {
    let pts: Vec<String> = line
        .iter()
        .map(|&p| {
            let (x, y) = map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"<polyline fill="none" {style} points="{}"/>"#, pts.join(" "));
}
