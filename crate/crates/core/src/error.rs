use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: u32, n: usize },

    #[error("operation requires a declared bipartition")]
    MissingBipartition,

    #[error("{what}: needed {needed}, cap {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("anchor is not part of the host graph")]
    AnchorNotInGraph,

    #[error("spanning selection needs at least {required} edges, got {supplied}")]
    InsufficientEdges { supplied: usize, required: u64 },

    #[error("collision selection needs {need} distinct parents, got {have}")]
    InsufficientParents { have: usize, need: usize },

    #[error("no qualifying selection among the supplied parents")]
    NoQualifyingSelection,

    #[error("leaf is not a vertex of the search tree")]
    LeafNotInTree,

    #[error("no degree class on side {side} reaches its mass threshold")]
    NoQualifyingClass { side: &'static str },

    #[error("degree class {index} on side {side} selects an empty vertex set")]
    EmptySelection { index: u32, side: &'static str },

    #[error(
        "floored selection keeps {kept} of {total} edges, below the 1/(64 i^2 j^2) target at i={i}, j={j}"
    )]
    EdgeFractionUnmet { kept: usize, total: usize, i: u32, j: u32 },

    #[error("graph contains an H_{{{t},{t}}}; bound check requires an H_{{{t},{t}}}-free input")]
    NotHstFree { t: u32 },

    #[error("bipartition is not a prefix block; cannot serialize")]
    NonPrefixBipartition,
}

pub type Result<T> = std::result::Result<T, Error>;
