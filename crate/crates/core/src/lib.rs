//! Exact-arithmetic toolkit for finite-dimensional Lie-Yamaguti algebras
//! equipped with modified Rota-Baxter operators.
//!
//! Everything is computed over the rationals with arbitrary precision —
//! no floating point, no tolerance thresholds. The crate provides:
//!
//! - structure-constant algebras with full axiom checking ([`algebra`]),
//! - operator identities — modified Rota-Baxter, Rota-Baxter of weight
//!   minus one, Nijenhuis — plus descendant structures and a bounded
//!   brute-force operator search ([`operators`]),
//! - representations, compatibility with operators, induced
//!   representations, and semidirect sums ([`representation`]),
//! - three cochain complexes (plain, operator, and total) with exact
//!   cohomology dimensions in low degree ([`cohomology`]),
//! - order-1 deformation checks tied back to the total complex
//!   ([`deformation`]),
//! - abelian extensions, cocycle extraction, and equivalence
//!   classification ([`extension`]),
//! - a concrete example corpus ([`corpus`]), seeded sampling
//!   ([`sample`]), and lossless JSON file formats ([`format`]).
//!
//! All checkers report per-basis-tuple violations with exact left/right
//! values rather than a bare boolean; see [`report`].

pub mod algebra;
pub mod cohomology;
pub mod corpus;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod format;
pub mod linalg;
pub mod matrix;
pub mod operators;
pub mod report;
pub mod representation;
pub mod sample;
pub mod scalar;

pub use algebra::LYAlgebra;
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use operators::{MrblyAlgebra, OperatorKind};
pub use report::{AxiomReport, Violation};
pub use representation::Representation;
pub use scalar::Scalar;
