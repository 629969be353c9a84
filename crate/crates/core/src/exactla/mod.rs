//! Exact dense linear algebra over prime fields and the rationals.
//!
//! Every other part of the lab compiles down to the handful of operations
//! here: canonical row reduction, kernels (all equalizers are `kernel(f - g)`),
//! quotients (all tensor products over a ring are cokernels), linear solves and
//! Kronecker products.

mod field;
mod mat;
mod subspace;

pub use field::{FieldSpec, Scalar};
pub use mat::Mat;
pub use subspace::{QuotientData, Subspace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
}

pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    m.rref()
}

/// `{ v : m v = 0 }`.
pub fn kernel(m: &Mat) -> Subspace {
    let f = m.field();
    let (red, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut gens = Mat::zeros(f, free.len(), m.cols());
    for (g, &fc) in free.iter().enumerate() {
        gens.set(g, fc, f.one());
        for (r, &p) in pivots.iter().enumerate() {
            gens.set(g, p, f.neg(red.get(r, fc)));
        }
    }
    Subspace::from_rows(&gens)
}

pub fn quotient(ambient_dim: usize, relations: Subspace) -> QuotientData {
    QuotientData::new(ambient_dim, relations)
}

pub fn solve(a: &Mat, b: &Mat) -> Option<Mat> {
    a.solve(b)
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kron(b)
}
