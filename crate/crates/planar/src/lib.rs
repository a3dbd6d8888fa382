//! Planar parts of nonseparable graphs.
//!
//! Starting from a simple nonseparable graph, this crate extracts a maximal
//! planar spanning subgraph by minimizing MacLane-style functionals over the
//! graph's isometric cycles, turns the surviving cycle system into a rotation
//! system, reinserts the deleted edges with few crossings or as extra planar
//! layers, and finally computes straight-line coordinates with a fixed-rim
//! spring solve. File formats and an SVG/JSON renderer live in [`io`].
//!
//! The long-form guide under `book/` walks through each stage; its code
//! blocks run as doc-tests from the `book-tests` crate.

// 1-based vertex/edge ids are indexed by plain ranges on purpose.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::type_complexity)]

pub mod catalog;
pub mod cycles;
pub mod edgeset;
pub mod error;
pub mod fixtures;
pub mod gauss;
pub mod graph;
pub mod io;
pub mod layout;
pub mod maclane;
pub mod planarize;
pub mod reinsert;
pub mod rotation;

pub use edgeset::{sym_diff, Cycle, CycleSystem, EdgeSet};
pub use graph::{Graph, NonseparabilityReport, SpanningTreeSplit, Violation};
