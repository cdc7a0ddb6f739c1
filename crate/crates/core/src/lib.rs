//! Exact line arrangements in the projective plane and the incidence
//! operators acting on them.
//!
//! Arrangements live over one exact field ([`field`]); the operators
//! `𝒫_n`, `ℒ_n`, `Λ_{n,m}`, `Ψ_{n,m}` and duality are in [`arrangement`],
//! iteration with fixed point and cycle detection in [`dynamics`], and named
//! constructions in [`catalog`].

pub mod error;
pub mod field;
pub mod geom;
pub mod arrangement;
pub mod dynamics;
pub mod catalog;
pub mod matroid;
pub mod render;

pub use error::{Error, Result};
pub use field::{AnyField, ExactField, FieldSpec, Scalar};
