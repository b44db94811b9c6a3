use thiserror::Error;

use crate::graph::{Edge, Vertex};
use crate::lattice::Point;

/// Errors raised while building graphs and subgraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("side sizes must satisfy 1 <= m, n <= 32 (got m={m}, n={n})")]
    OutOfRange { m: usize, n: usize },
    #[error("expected {expected} right neighborhoods, got {got}")]
    NeighborhoodCount { expected: usize, got: usize },
    #[error("left index {index} out of range 1..={m}")]
    LeftIndexOutOfRange { index: usize, m: usize },
    #[error("right index {index} out of range 1..={n}")]
    RightIndexOutOfRange { index: usize, n: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("edge {0} listed twice")]
    DuplicateEdge(Edge),
    #[error("subgraph is not a partial matching")]
    NotPartialMatching,
}

/// Errors raised by the forest compatibility tests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("subgraph is not a forest")]
    NotAForest,
    #[error("brute-force oracle limited to 16 edges per forest (got {0})")]
    TooLarge(usize),
    #[error("forests have different vertex sets")]
    ShapeMismatch,
}

/// Errors raised while validating or querying triangulations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("tree #{index} is not a spanning tree of the graph")]
    NotSpanningTree { index: usize },
    #[error("two trees share the trimmed left degree vector {point:?}")]
    DuplicateDegreeVector { point: Point },
    #[error("trimmed degree vectors do not cover the lattice points (missing {missing:?}, extra {extra:?})")]
    CoverageMismatch {
        missing: Vec<Point>,
        extra: Vec<Point>,
    },
    #[error("trees at {first:?} and {second:?} are incompatible")]
    IncompatiblePair {
        first: Point,
        second: Point,
        cycle: Vec<Vertex>,
    },
    #[error("point {0:?} is not a lattice point of the polytope")]
    PointOutsidePolytope(Point),
    #[error("collection member #{index} is not a forest of the requested kind")]
    CollectionKindMismatch { index: usize },
    #[error("the reconstructed triangulation does not reproduce the input collection")]
    CollectionMismatch,
    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(Box<TriangulationError>),
    #[error("edge {0} is not in the tree")]
    EdgeNotInTree(Edge),
    #[error("edge {0} is not replaceable")]
    NotReplaceable(Edge),
    #[error(
        "no tree of the triangulation differs from the tree at {point:?} by exactly edge {edge}"
    )]
    NotFound { point: Point, edge: Edge },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by trianguloid construction and conversion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrianguloidError {
    #[error("entry {from:?} -> direction {dir} does not land in the lattice points of P_G")]
    BadEntry { from: Point, dir: usize },
    #[error("entry {from:?} -> direction {dir} listed twice")]
    DuplicateEntry { from: Point, dir: usize },
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("map is not a pre-trianguloid")]
    NotPreTrianguloid,
    #[error("map is not a trianguloid")]
    NotTrianguloid,
    #[error("trees of the trianguloid fail validation: {0}")]
    ValidationFailed(Box<TriangulationError>),
    #[error("edge colorings are only defined for complete bipartite graphs")]
    NotComplete,
    #[error("inconsistent coloring at {point:?}, direction {dir}")]
    InconsistentColoring { point: Point, dir: usize },
}

/// Errors raised by the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search exceeded the limit of {0} results")]
    LimitExceeded(usize),
}

/// Errors raised by the lozenge tiling construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("tilings are drawn only for three left vertices (got m={0})")]
    NotThreeRows(usize),
    #[error("map is not a trianguloid")]
    NotTrianguloid,
    #[error("no unique differing direction at hexagon {c:?}")]
    Degenerate { c: Point },
}

/// Errors raised while reading or writing the JSON formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Trianguloid(#[from] TrianguloidError),
}
