//! Central characters of positive representations of split real quantum groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`rootdata`] builds Cartan data in the node labeling used throughout
//!   (short node 1 in type B, long node 1 in C/F/G, branch nodes 0 and 1 in
//!   type D, branch node 0 in type E) together with the Weyl group machinery.
//! * [`repweights`] computes weight systems of irreducible representations by
//!   Freudenthal's recursion and dimensions by the Weyl dimension formula.
//! * [`casimir`] evaluates the positive Casimir eigenvalues
//!   `C_k(t) = Σ_μ m_μ exp(-4π μ(t))`, the map `Φ`, the root product `D`, the
//!   Weyl character formula oracle and the virtual lowest weight data.
//! * [`poly`] holds exact Laurent and multivariate polynomial arithmetic,
//!   characteristic polynomials and discriminants.
//! * [`region`] samples `Φ` over grids and exports CSV/JSON/SVG.
//! * [`verify`] aggregates every identity check into a JSON report.
//!
//! Spectral parameters are always the rescaled `t_i = b_i λ_i`; only the
//! virtual weight operations take the deformation parameter `b`.

pub mod casimir;
pub mod error;
pub mod numeric;
pub mod poly;
pub mod region;
pub mod repweights;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
