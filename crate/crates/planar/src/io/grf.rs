//! `.grf` / `.gr1` adjacency files.

use super::{ParseError, Tokens};
use crate::graph::Graph;

/// Parses a `.grf` file: vertex count, pointer array of n+1 cumulative
/// offsets, then the concatenated 1-based neighbor rows.
pub fn parse_grf(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = Tokens::new(text);
    let n = tokens.usize("vertex count")?;
    let mut pointers = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        pointers.push(tokens.usize("pointer entry")?);
    }
    if pointers[0] != 1 {
        return Err(ParseError::Invalid {
            line: tokens.last_line,
            message: format!("pointer array must start at 1, got {}", pointers[0]),
        });
    }
    for w in pointers.windows(2) {
        if w[1] < w[0] {
            return Err(ParseError::Invalid {
                line: tokens.last_line,
                message: "pointer array must be non-decreasing".into(),
            });
        }
    }
    let mut lists = Vec::with_capacity(n);
    for k in 0..n {
        let len = pointers[k + 1] - pointers[k];
        let mut row = Vec::with_capacity(len);
        for _ in 0..len {
            let v = tokens.usize("neighbor id")?;
            if v == 0 || v > n {
                return Err(ParseError::Invalid {
                    line: tokens.last_line,
                    message: format!("neighbor {v} out of range 1..={n}"),
                });
            }
            row.push(v);
        }
        lists.push(row);
    }
    Graph::from_adjacency(n, &lists).map_err(|e| ParseError::Invalid {
        line: tokens.last_line,
        message: e.to_string(),
    })
}

fn push_row(out: &mut String, row: &[usize]) {
    let mut first = true;
    for v in row {
        if !first {
            out.push(' ');
        }
        out.push_str(&v.to_string());
        first = false;
    }
    out.push('\n');
}

fn pointer_array(lengths: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut pointers = vec![1];
    for len in lengths {
        pointers.push(pointers.last().unwrap() + len);
    }
    pointers
}

/// Writes the `.grf` form: count, pointers, one neighbor row per vertex.
pub fn write_grf(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&g.vertex_count().to_string());
    out.push('\n');
    push_row(&mut out, &pointer_array(g.vertices().map(|v| g.degree(v))));
    for v in g.vertices() {
        push_row(&mut out, g.neighbors(v));
    }
    out
}

/// Writes the `.gr1` form: the `.grf` content, the edge count, then one
/// incidence row per vertex.
pub fn write_gr1(g: &Graph) -> String {
    let mut out = write_grf(g);
    out.push_str(&g.edge_count().to_string());
    out.push('\n');
    for v in g.vertices() {
        push_row(&mut out, g.incident_edges(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sample_7_16;

    const SEVEN: &str = "7\n1 6 11 15 19 24 29 33\n2 3 5 6 7\n1 3 4 5 6\n1 2 4 7\n2 3 5 6\n1 2 4 6 7\n1 2 4 5 7\n1 3 5 6\n";

    #[test]
    fn seven_vertex_file_round_trips() {
        let g = parse_grf(SEVEN).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 16);
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![5, 5, 4, 4, 5, 5, 4]);
        assert_eq!(write_grf(&g), SEVEN);
        assert_eq!(g, sample_7_16());
    }

    #[test]
    fn gr1_carries_the_incidence_rows() {
        let g = parse_grf(SEVEN).unwrap();
        let gr1 = write_gr1(&g);
        let lines: Vec<&str> = gr1.lines().collect();
        assert_eq!(lines[9], "16");
        assert_eq!(lines[10], "1 2 3 4 5");
        assert_eq!(lines[11], "1 6 7 8 9");
        assert_eq!(lines[16], "5 11 15 16");
    }

    #[test]
    fn gr1_matches_the_golden_listing() {
        let g = parse_grf(SEVEN).unwrap();
        assert_eq!(write_gr1(&g), include_str!("../../tests/golden/7.gr1"));
    }

    #[test]
    fn truncated_file_reports_the_line() {
        let err = parse_grf("7\n1 6 11 15 19 24 29 33\n2 3 5\n").unwrap_err();
        assert!(matches!(err, ParseError::Truncated { line: 3, .. }));
    }

    #[test]
    fn bad_pointer_and_bad_neighbor() {
        assert!(matches!(
            parse_grf("2\n2 3 4\n2\n1\n"),
            Err(ParseError::Invalid { .. })
        ));
        assert!(matches!(
            parse_grf("2\n1 2 3\n9\n1\n"),
            Err(ParseError::Invalid { .. })
        ));
        assert!(matches!(
            parse_grf("x\n"),
            Err(ParseError::BadToken { line: 1, .. })
        ));
    }
}
