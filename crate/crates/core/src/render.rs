//! SVG drawings of hexagonal systems in their natural embedding.

use std::fmt::Write;

use crate::error::Result;
use crate::hexsystem::HexSystem;
use crate::skeleton::{skeleton, Label};

const FILL: &str = "#dde6f0";
const INTERNAL_WIDTH: f64 = 0.06;
const BOUNDARY_WIDTH: f64 = 0.14;

/// Pointy-top unit hexagons, boundary edges drawn heavier, holes left empty.
/// The view box leaves a margin of one unit; `y` points up in lattice
/// coordinates and is flipped for SVG.
pub fn render_svg(k: &HexSystem) -> Result<String> {
    let g = skeleton(k)?;
    let points: Vec<(f64, f64)> = g
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = v.position();
            (x, -y)
        })
        .collect();
    let min_x = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - 1.0;
    let max_x = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let min_y = points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - 1.0;
    let max_y = points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + 1.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt(min_x),
        fmt(min_y),
        fmt(max_x - min_x),
        fmt(max_y - min_y)
    )
    .unwrap();
    writeln!(out, r#"<g fill="{FILL}" stroke="none">"#).unwrap();
    for h in k.iter() {
        let corners: Vec<String> = h
            .boundary_cycle()
            .iter()
            .map(|v| {
                let (x, y) = v.position();
                format!("{},{}", fmt(x), fmt(-y))
            })
            .collect();
        writeln!(out, r#"<polygon points="{}"/>"#, corners.join(" ")).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g stroke="black" stroke-linecap="round">"#).unwrap();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let width = match g.edge_label(e) {
            Label::Internal => INTERNAL_WIDTH,
            Label::Boundary => BOUNDARY_WIDTH,
        };
        let (p, q) = (points[a], points[b]);
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{}"/>"#,
            fmt(p.0),
            fmt(p.1),
            fmt(q.0),
            fmt(q.1),
            fmt(width)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

fn fmt(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexgrid::HexCoord;

    #[test]
    fn benzene_drawing() {
        let svg = render_svg(&HexSystem::single(HexCoord::ORIGIN)).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<line").count(), 6);
        assert_eq!(svg.matches("stroke-width=\"0.14\"").count(), 6);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg, render_svg(&HexSystem::single(HexCoord::ORIGIN)).unwrap());
    }

    #[test]
    fn internal_edges_are_thin() {
        let svg = render_svg(&HexSystem::from_pairs(&[(0, 0), (1, 0)]).unwrap()).unwrap();
        assert_eq!(svg.matches("stroke-width=\"0.06\"").count(), 1);
    }
}
