//! `.gm1` boundary files and the `.gm2`-style coordinate report.

use std::collections::BTreeMap;

use super::{ParseError, Tokens};
use crate::layout::Drawing;

/// A pinned boundary: vertex ids with their coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySpec {
    pub vertices: Vec<usize>,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl BoundarySpec {
    pub fn as_map(&self) -> BTreeMap<usize, (f64, f64)> {
        self.vertices
            .iter()
            .zip(self.xs.iter().zip(&self.ys))
            .map(|(&v, (&x, &y))| (v, (x, y)))
            .collect()
    }
}

/// Parses a `.gm1` file: count, the vertex ids, the X row, the Y row.
pub fn parse_gm1(text: &str) -> Result<BoundarySpec, ParseError> {
    let mut tokens = Tokens::new(text);
    let count = tokens.usize("boundary count")?;
    if count == 0 {
        return Err(ParseError::Invalid {
            line: tokens.last_line,
            message: "boundary is empty".into(),
        });
    }
    let mut vertices = Vec::with_capacity(count);
    for _ in 0..count {
        vertices.push(tokens.usize("boundary vertex id")?);
    }
    let mut xs = Vec::with_capacity(count);
    for _ in 0..count {
        xs.push(tokens.f64("x coordinate")?);
    }
    let mut ys = Vec::with_capacity(count);
    for _ in 0..count {
        ys.push(tokens.f64("y coordinate")?);
    }
    Ok(BoundarySpec { vertices, xs, ys })
}

fn rows_of<T: std::fmt::Display>(values: &[T], per_line: usize) -> String {
    values
        .chunks(per_line)
        .map(|chunk| {
            chunk
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Writes the coordinate report: boundary block then the free vertices with
/// their solved coordinates, three decimals, ten values per line.
pub fn write_gm2(drawing: &Drawing, boundary: &BoundarySpec) -> String {
    let mut out = String::new();
    out.push_str(&format!("boundary count: {}\n", boundary.vertices.len()));
    out.push_str("boundary vertices:\n");
    out.push_str(&rows_of(&boundary.vertices, 10));
    out.push('\n');
    let fmt3 = |v: &[f64]| {
        let strings: Vec<String> = v.iter().map(|x| format!("{x:.3}")).collect();
        rows_of(&strings, 10)
    };
    out.push_str("boundary x:\n");
    out.push_str(&fmt3(&boundary.xs));
    out.push('\n');
    out.push_str("boundary y:\n");
    out.push_str(&fmt3(&boundary.ys));
    out.push('\n');
    let free: Vec<usize> = drawing
        .coords
        .keys()
        .copied()
        .filter(|v| !boundary.vertices.contains(v))
        .collect();
    out.push_str("free vertices:\n");
    out.push_str(&rows_of(&free, 10));
    out.push('\n');
    let free_x: Vec<f64> = free.iter().map(|v| drawing.coords[v].0).collect();
    let free_y: Vec<f64> = free.iter().map(|v| drawing.coords[v].1).collect();
    out.push_str("free x:\n");
    out.push_str(&fmt3(&free_x));
    out.push('\n');
    out.push_str("free y:\n");
    out.push_str(&fmt3(&free_y));
    out.push('\n');
    out
}
