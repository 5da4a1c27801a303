use thiserror::Error;

use crate::intersection::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("classes belong to different geometries ({left} vs {right})")]
    GeometryMismatch { left: String, right: String },

    #[error("{what}: expected {expected} coordinates, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("Picard rank 1: h^{{1,1}} > 1 required")]
    PicardRankOne,

    #[error("polarization is not ample: violates {}", violated.join(", "))]
    NotAmple { violated: Vec<String> },

    #[error("non-integral Euler characteristic {chi} for integral input data ({context})")]
    NonIntegralEuler { chi: String, context: String },

    #[error("Hodge index violation: D^2.H = {value} >= 0 for D = {d}, H = {h} with D.H^2 = 0")]
    HodgeIndex { d: String, h: String, value: String },

    #[error("invalid bundle data: {0}")]
    Bundle(String),

    #[error("unsupported base surface: {0}")]
    UnsupportedBase(String),

    #[error("parse error at `{key}`: {message}")]
    Parse { key: String, message: String },

    #[error("geometry failed validation:\n{0}")]
    Validation(ValidationReport),

    #[error("lattice weights exceed the enumeration range")]
    Overflow,

    #[error("worker pool: {0}")]
    Pool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
