//! Exact intersection theory for Calabi-Yau threefolds and a search for
//! divisor classes that certify stable extension bundles.
//!
//! A threefold is given purely by intersection data ([`Geometry`]): a divisor
//! basis, a dual curve basis, the triple-intersection tensor and the Chern
//! numbers `c2(X)`, `c3(X)`. On top of that the crate provides
//!
//! * Chern classes and the Euler characteristic `chi_D(E2, E1)` of extensions
//!   `0 -> E1(r2' D) -> E -> E2(-r1' D) -> 0` ([`chern`]);
//! * a lattice search for classes `D` with `D.H^2 = 0`, `D.H` numerically
//!   nontrivial and `chi_D < 0` ([`search`]);
//! * the heterotic anomaly class `c2(X) - c2(E)` and an exact effectivity test
//!   against a finitely generated cone ([`anomaly`]).
//!
//! All arithmetic is exact over big rationals.

// Tensor code indexes several arrays with the same loop variables.
#![allow(clippy::needless_range_loop)]

pub mod anomaly;
pub mod catalog;
pub mod chern;
pub mod cone;
mod error;
pub mod intersection;
pub mod io;
pub mod linalg;
pub mod rational;
pub mod search;

pub use anomaly::{anomaly_class, anomaly_scan, is_effective, AnomalyEntry, AnomalyVerdict};
pub use catalog::{build_elliptic, build_octic_k3, builtin, builtin_names, BaseKind, BaseSurface};
pub use chern::{
    euler_characteristic, extension_chern, nonsplit_general, nonsplit_r2, nonsplit_r4, BundleData,
    ExtensionSpec, RankCase,
};
pub use error::{Error, Result};
pub use intersection::{
    validate_geometry, CurveClass, DivisorClass, Geometry, GeometryData, GeometryId, LinearForm,
    ValidationReport, Violation,
};
pub use io::{load_geometry, parse_geometry, save_geometry, to_file_string, FileFormat};
pub use rational::Q;
pub use search::{
    check_negativity, check_numerically_nontrivial, check_orthogonal, evaluate_candidate,
    perturb_polarization, scan_multiples, search, solve_orthogonal, Checks, Origin, SearchConfig,
    StabilityCertificate,
};
