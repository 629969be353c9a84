//! Named algebras, the reference instances and seeded random generators.

pub mod algebras;
pub mod instances;
pub mod random;
