//! File formats and renderers.
//!
//! The numeric formats are plain whitespace-separated ASCII: `.grf` holds an
//! adjacency structure as a pointer array plus concatenated neighbor rows,
//! `.gr1` extends it with the incidence rows, `.ezi` lists cycles first by
//! edges then by vertices over a shared pointer array, and `.gm1` pins
//! boundary vertices to coordinates. JSON and SVG writers are deterministic.

mod ezi;
mod gm;
mod grf;
mod json;
mod svg;

pub use ezi::write_ezi;
pub use gm::{parse_gm1, write_gm2, BoundarySpec};
pub use grf::{parse_grf, write_gr1, write_grf};
pub use json::{Document, JsonGraph};
pub use svg::{emit_svg, SvgOptions};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, found end of input")]
    Truncated { line: usize, expected: &'static str },
    #[error("line {line}: bad token {token:?}: expected {expected}")]
    BadToken {
        line: usize,
        token: String,
        expected: &'static str,
    },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

/// Whitespace tokenizer that remembers line numbers for diagnostics.
pub(crate) struct Tokens<'a> {
    items: std::vec::IntoIter<(usize, &'a str)>,
    pub(crate) last_line: usize,
}

impl<'a> Tokens<'a> {
    pub(crate) fn new(text: &'a str) -> Tokens<'a> {
        let items: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)))
            .collect();
        Tokens {
            items: items.into_iter(),
            last_line: 1,
        }
    }

    pub(crate) fn usize(&mut self, expected: &'static str) -> Result<usize, ParseError> {
        match self.items.next() {
            Some((line, tok)) => {
                self.last_line = line;
                tok.parse().map_err(|_| ParseError::BadToken {
                    line,
                    token: tok.to_string(),
                    expected,
                })
            }
            None => Err(ParseError::Truncated {
                line: self.last_line,
                expected,
            }),
        }
    }

    pub(crate) fn f64(&mut self, expected: &'static str) -> Result<f64, ParseError> {
        match self.items.next() {
            Some((line, tok)) => {
                self.last_line = line;
                tok.parse().map_err(|_| ParseError::BadToken {
                    line,
                    token: tok.to_string(),
                    expected,
                })
            }
            None => Err(ParseError::Truncated {
                line: self.last_line,
                expected,
            }),
        }
    }
}
