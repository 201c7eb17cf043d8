//! SVG drawings of a scene: lines, punctures, rays and crossing letters.
//!
//! Floats are used for layout only. Every label comes from the exact
//! crossing computation, so the `crossing` texts of a line spell its raw
//! Poincaré word in reading order.

use std::fmt::Write;

use crate::error::Result;
use crate::poincare::{crossing_points, RaySystem};
use crate::polyline::{Polyline, PunctureSet};
use crate::scene::Scene;

const SIZE: f64 = 480.0;
const PAD: f64 = 24.0;

struct View {
    min_x: f64,
    max_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl View {
    fn fit(points: &[(f64, f64)]) -> View {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        // one unit of slack around everything
        let (x0, x1, y0, y1) = (x0 - 1.0, x1 + 1.0, y0 - 1.0, y1 + 1.0);
        let scale = SIZE / (x1 - x0).max(y1 - y0);
        View {
            min_x: x0,
            max_y: y1,
            scale,
            width: (x1 - x0) * scale + 2.0 * PAD,
            height: (y1 - y0) * scale + 2.0 * PAD,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            (x - self.min_x) * self.scale + PAD,
            (self.max_y - y) * self.scale + PAD,
        )
    }
}

/// Renders named lines around `punctures`, with the ray system the
/// classifier would use for them.
pub fn render_svg(punctures: &PunctureSet, lines: &[(&str, &dyn Polyline)]) -> Result<String> {
    let polys: Vec<&dyn Polyline> = lines.iter().map(|(_, l)| *l).collect();
    crate::polyline::validate_scene(punctures, &polys)?;
    let rays = RaySystem::build(punctures, &polys);

    let mut pts: Vec<(f64, f64)> = punctures.points().iter().map(|p| p.to_f64()).collect();
    for l in &polys {
        pts.extend(l.vertices().iter().map(|p| p.to_f64()));
    }
    let view = View::fit(&pts);
    let reach = (view.width.max(view.height) / view.scale) * 2.0;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = view.width,
        h = view.height
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(out, r#"<g class="rays">"#);
    for (i, ray) in rays.rays().iter().enumerate() {
        let (ox, oy) = ray.origin().to_f64();
        let (dx, dy) = ray.direction();
        let norm = ((dx * dx + dy * dy) as f64).sqrt();
        let far = (ox + dx as f64 / norm * reach, oy + dy as f64 / norm * reach);
        let (a, b) = (view.map((ox, oy)), view.map(far));
        let _ = writeln!(
            out,
            r##"<line class="ray" data-index="{i}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#888" stroke-dasharray="6 4"/>"##,
            a.0, a.1, b.0, b.1
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g class="lines">"#);
    for (name, line) in lines {
        let mut coords: Vec<String> = line
            .vertices()
            .iter()
            .map(|p| {
                let (x, y) = view.map(p.to_f64());
                format!("{x:.2},{y:.2}")
            })
            .collect();
        coords.push(coords[0].clone());
        let _ = writeln!(
            out,
            r##"<polyline class="line" data-name="{name}" points="{}" fill="none" stroke="#1f5fbf" stroke-width="2"/>"##,
            coords.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g class="punctures">"#);
    for (i, p) in punctures.points().iter().enumerate() {
        let (x, y) = view.map(p.to_f64());
        let _ = writeln!(
            out,
            r#"<circle class="puncture" data-index="{i}" cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#
        );
    }
    let _ = writeln!(out, "</g>");

    for (name, line) in lines {
        let _ = writeln!(out, r#"<g class="crossings" data-line="{name}">"#);
        for (p, letter) in crossing_points(*line, &rays)? {
            let (x, y) = view.map(p.to_f64());
            let _ = writeln!(
                out,
                r##"<text class="crossing" x="{:.2}" y="{:.2}" font-size="12" fill="#b02020">{letter}</text>"##,
                x + 3.0,
                y - 3.0
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Renders every line of a scene.
pub fn render_scene(scene: &Scene) -> Result<String> {
    let lines: Vec<(&str, &dyn Polyline)> = scene
        .lines
        .iter()
        .map(|l| (l.name.as_str(), l.line.as_polyline()))
        .collect();
    render_svg(scene.punctures()?, &lines)
}
