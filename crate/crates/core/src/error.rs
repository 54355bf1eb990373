use thiserror::Error;

use crate::graph::{Side, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge {x}-{y}")]
    DuplicateEdge { x: VertexId, y: VertexId },

    #[error("vertex {vertex} out of range: side {} has {len} vertices", vertex.side)]
    IndexOutOfRange { vertex: VertexId, len: usize },

    #[error("edge {x}-{y} has weight 0; weights must be at least 1")]
    ZeroWeight { x: VertexId, y: VertexId },

    #[error("total edge weight exceeds {max}")]
    WeightOverflow { max: u64 },

    #[error("invalid layout for side {side}: {reason}")]
    InvalidLayout { side: Side, reason: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("side {side} has {len} vertices, at least {min} required")]
    SideTooSmall { side: Side, len: usize, min: usize },

    #[error("resource limit hit in {stage}: {detail} (limit {limit})")]
    ResourceLimit {
        stage: &'static str,
        limit: u64,
        detail: String,
    },

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
