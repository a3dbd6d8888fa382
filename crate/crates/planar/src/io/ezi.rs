//! `.ezi` cycle files.

use crate::edgeset::CycleSystem;

/// Writes a cycle system: cycle count, the shared pointer array, every cycle
/// as an edge row, then every cycle as a sorted vertex row.
pub fn write_ezi(sys: &CycleSystem) -> String {
    let mut out = String::new();
    out.push_str(&sys.len().to_string());
    out.push('\n');
    let mut pointers = vec![1usize];
    for c in sys.cycles() {
        pointers.push(pointers.last().unwrap() + c.len());
    }
    let join = |row: &[usize]| {
        row.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&join(&pointers));
    out.push('\n');
    for c in sys.cycles() {
        out.push_str(&join(&c.edge_ids()));
        out.push('\n');
    }
    for c in sys.cycles() {
        let mut vs = c.vertices().to_vec();
        vs.sort_unstable();
        out.push_str(&join(&vs));
        out.push('\n');
    }
    out
}
