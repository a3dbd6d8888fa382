//! SVG renderer: straight-line edges, labeled vertices, dummy crossings as
//! squares, layers as styled groups.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::LayoutError;
use crate::layout::Drawing;

pub struct SvgOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub vertex_radius: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640.0,
            height: 640.0,
            margin: 40.0,
            vertex_radius: 9.0,
        }
    }
}

const LAYER_STYLES: [&str; 6] = [
    "stroke:#1f77b4",
    "stroke:#d62728;stroke-dasharray:6 3",
    "stroke:#2ca02c;stroke-dasharray:2 3",
    "stroke:#9467bd;stroke-dasharray:8 2 2 2",
    "stroke:#8c564b",
    "stroke:#e377c2;stroke-dasharray:4 4",
];

/// Renders the drawing. `layers` gives one edge list per stroke style (a
/// single layer renders everything uniformly); `dummies` are drawn as small
/// squares instead of labeled circles.
pub fn emit_svg(
    drawing: &Drawing,
    layers: &[Vec<(usize, usize)>],
    dummies: &[usize],
    options: &SvgOptions,
) -> Result<String, LayoutError> {
    for layer in layers {
        for &(u, v) in layer {
            for w in [u, v] {
                if !drawing.coords.contains_key(&w) {
                    return Err(LayoutError::MissingCoordinate { vertex: w });
                }
            }
        }
    }
    // map model coordinates into the viewport, y growing upward
    let xs: Vec<f64> = drawing.coords.values().map(|p| p.0).collect();
    let ys: Vec<f64> = drawing.coords.values().map(|p| p.1).collect();
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1) = (min(&xs), max(&xs));
    let (y0, y1) = (min(&ys), max(&ys));
    let spanx = (x1 - x0).max(1e-9);
    let spany = (y1 - y0).max(1e-9);
    let options_span_x = options.width - 2.0 * options.margin;
    let options_span_y = options.height - 2.0 * options.margin;
    let scale = (options_span_x / spanx).min(options_span_y / spany);
    let place: BTreeMap<usize, (f64, f64)> = drawing
        .coords
        .iter()
        .map(|(&v, &(x, y))| {
            (
                v,
                (
                    options.margin + (x - x0) * scale,
                    options.height - options.margin - (y - y0) * scale,
                ),
            )
        })
        .collect();

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        options.width, options.height, options.width, options.height
    )
    .unwrap();
    for (i, layer) in layers.iter().enumerate() {
        let style = LAYER_STYLES[i % LAYER_STYLES.len()];
        writeln!(svg, r#"  <g fill="none" style="{style};stroke-width:1.5">"#).unwrap();
        for &(u, v) in layer {
            let (ux, uy) = place[&u];
            let (vx, vy) = place[&v];
            writeln!(
                svg,
                r#"    <line x1="{ux:.2}" y1="{uy:.2}" x2="{vx:.2}" y2="{vy:.2}"/>"#
            )
            .unwrap();
        }
        writeln!(svg, "  </g>").unwrap();
    }
    writeln!(
        svg,
        r#"  <g font-family="sans-serif" font-size="10" text-anchor="middle">"#
    )
    .unwrap();
    for (&v, &(x, y)) in &place {
        if dummies.contains(&v) {
            let r = options.vertex_radius * 0.7;
            writeln!(
                svg,
                r##"    <rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#fff" stroke="#000"/>"##,
                x - r / 2.0,
                y - r / 2.0,
                r,
                r
            )
            .unwrap();
        } else {
            writeln!(
                svg,
                r##"    <circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="#fff" stroke="#000"/>"##,
                options.vertex_radius
            )
            .unwrap();
            writeln!(svg, r#"    <text x="{x:.2}" y="{:.2}">{v}</text>"#, y + 3.5).unwrap();
        }
    }
    writeln!(svg, "  </g>").unwrap();
    writeln!(svg, "</svg>").unwrap();
    Ok(svg)
}
