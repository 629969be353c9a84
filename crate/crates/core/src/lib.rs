//! Exact computations with corings, comodules and comonad morphisms over
//! finite-dimensional algebras, possibly without unit.

pub mod bimod;
pub mod corings;
pub mod comod;
pub mod comonadlab;
pub mod corpus;
pub mod exactla;
pub mod galois;
pub mod rings;

#[cfg(test)]
mod testutil;

pub use bimod::{Bimodule, BimoduleMap};
pub use exactla::{FieldSpec, Mat, Scalar, Subspace};
pub use rings::{Algebra, RingHom};
