use thiserror::Error;

use crate::cells::GenKey;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed expression: {0}")]
    Structural(String),

    #[error("unknown generator {0}")]
    UnknownGenerator(GenKey),

    #[error("a 0-cell has no source or target")]
    ZeroDimensional,

    #[error("requested {requested}-boundary of a {dim}-cell")]
    BoundaryOutOfRange { requested: usize, dim: usize },

    #[error("cannot {p}-compose cells of dimension {left} and {right}")]
    CompositionIndex { p: usize, left: usize, right: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("cells are not {p}-composable: mismatch in row {row}")]
    NotComposable { p: usize, row: usize },

    #[error("context is not a strong Steiner presentation: {0}")]
    NotStrongSteiner(String),

    #[error("basis element {0} is not unital")]
    NotUnital(GenKey),

    #[error("invalid polygraph: {0}")]
    InvalidPolygraph(String),

    #[error("invalid simplicial data: {0}")]
    Simplicial(String),

    #[error("invalid cylinder: {0}")]
    Cylinder(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
