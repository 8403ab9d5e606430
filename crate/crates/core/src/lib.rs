//! Exact computations for abelian crossed modules over finite abelian groups.

pub mod affine;
pub mod cochain;
pub mod cohomology;
pub mod crossed;
pub mod error;
pub mod extension;
pub mod group;
pub mod hom;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod picard;
pub mod scalar;
pub mod snf;
pub mod verify;

use num_bigint::BigInt;

pub use cochain::{Cochain1, Cochain2, Cochain3, Violation};
pub use cohomology::{SymCocycle, SymCohomology, H2, H3};
pub use crossed::{
    compose_morphism, validate_morphism, AbCrossMorphism, AbCrossedModule, CrossedData,
};
pub use error::{Error, Result};
pub use extension::{ClassificationResult, Extension};
pub use group::{Element, FinAbGroup};
pub use hom::{ExactDecomposition, GroupHom};
pub use picard::{
    base_of, picard_of, reduce, FunctorTypePair, ReducedFunctor, ReducedPicard, StrictPicard,
    SymMonoidalFunctor,
};
pub use scalar::IntScalar;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = matrix::Matrix<BigInt>;
/// Fixed-width matrix for inputs known not to overflow.
pub type SmallMatrix = matrix::Matrix<i64>;
pub type SmithForm = snf::SmithForm<BigInt>;
