use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("expected {expected} adjacency rows, got {got}")]
    RowCount { expected: usize, got: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range 1..={m}")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("self loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate neighbor {neighbor} in row {row}")]
    DuplicateNeighbor { row: usize, neighbor: usize },
    #[error("adjacency is asymmetric: {u} lists {v} but not vice versa")]
    Asymmetric { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a spanning tree")]
    NotATree,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("edge set lengths differ: {a} vs {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("edge set is not a single simple cycle")]
    NotACycle,
    #[error("graph must be nonseparable for cycle enumeration: {0}")]
    Separable(String),
    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaussError {
    #[error("cycle row has no chord edge; rows must be cycles of the split graph")]
    NoChordInRow,
    #[error("candidate size {got} differs from cyclomatic number {expected}")]
    CandidateSize { expected: usize, got: usize },
    #[error("transversal budget {budget} exceeded")]
    BudgetExceeded { budget: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("edge {edge} is covered {count} times; a disk system covers every edge exactly twice")]
    BadCoverage { edge: usize, count: usize },
    #[error("cycle orientations cannot be made consistent (edge {edge})")]
    NotOrientable { edge: usize },
    #[error("corner stitching at vertex {vertex} yields more than one cyclic order")]
    SplitVertex { vertex: usize },
    #[error("face trace does not cover every dart exactly once")]
    BadFaceTrace,
    #[error("embedding has no rim face")]
    NoRim,
    #[error("vertex {vertex} is not on the rim")]
    OffRim { vertex: usize },
    #[error("vertex {vertex} is not embedded")]
    NotEmbedded { vertex: usize },
    #[error("chords cross or share endpoints; insert them one conflict-free batch at a time")]
    ChordConflict,
    #[error("inserting edge ({u},{v}) would create a parallel edge")]
    ParallelEdge { u: usize, v: usize },
    #[error("no face carries a neighbor of vertex {vertex}")]
    NoHostFace { vertex: usize },
    #[error("route is not valid in this embedding")]
    BadRoute,
    #[error("embedding verification failed: {0}")]
    Verify(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescentError {
    #[error("cubic descent stalled: FP={fp} but no admissible cycle removal")]
    NoAdmissibleRemoval { fp: i64 },
    #[error("steepest descent stalled: every removal empties a vertex")]
    AllRemovalsVetoed,
    #[error("all {0} restarts failed to reach FP=0")]
    AllRestartsFailed(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayoutError {
    #[error("boundary is empty")]
    EmptyBoundary,
    #[error("free vertex {vertex} has no path to the fixed boundary")]
    UnreachableVertex { vertex: usize },
    #[error("spring system is singular")]
    Singular,
    #[error("no coordinate for vertex {vertex}")]
    MissingCoordinate { vertex: usize },
}
