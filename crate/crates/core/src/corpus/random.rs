//! Seeded random small objects.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebras::generated_subalgebra;
use crate::bimod::Bimodule;
use crate::exactla::{FieldSpec, Mat};
use crate::rings::Algebra;

fn random_matrix(rng: &mut ChaCha8Rng, f: FieldSpec, n: usize, density: f64) -> Mat {
    let mut m = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                m.set(i, j, f.from_i64(rng.gen_range(-2..=2)));
            }
        }
    }
    m
}

/// A right and a left module over a random subalgebra `A ⊆ M_d(k)`, `d <= 3`:
/// `A` acts on row vectors from the right and on column vectors from the left,
/// each possibly cut down to an invariant coordinate flag.
pub fn random_module_pair(f: FieldSpec, seed: u64) -> (Bimodule, Bimodule) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(1..=3);
    let ngens = rng.gen_range(1..=2);
    let gens: Vec<Mat> = (0..ngens).map(|_| random_matrix(&mut rng, f, d, 0.5)).collect();
    let with_identity = rng.gen_bool(0.7);
    let (alg, basis) = generated_subalgebra(f, d, &gens, with_identity);
    let alg = Arc::new(alg);
    let k = Arc::new(Algebra::ground(f));
    let id = Mat::identity(f, d);
    let rows = Bimodule::with_dim(
        k.clone(),
        alg.clone(),
        d,
        vec![id.clone()],
        basis.iter().map(Mat::transpose).collect(),
        None,
    );
    let cols = Bimodule::with_dim(alg.clone(), k, d, basis.clone(), vec![id], None);
    (maybe_sub(&mut rng, rows), maybe_sub(&mut rng, cols))
}

/// Replaces a module by a random invariant subspace generated by one vector.
fn maybe_sub(rng: &mut ChaCha8Rng, m: Bimodule) -> Bimodule {
    if m.dim() == 0 || !rng.gen_bool(0.3) {
        return m;
    }
    let f = m.field();
    let v: Vec<_> = (0..m.dim()).map(|_| f.from_i64(rng.gen_range(-1..=1))).collect();
    let mut cols = vec![v.clone()];
    for act in m.left_acts().iter().chain(m.right_acts()) {
        cols.push(act.mul_vec(&v));
    }
    // close under the actions
    let mut sub = crate::exactla::Subspace::from_columns(&Mat::from_columns(f, m.dim(), &cols));
    loop {
        let mut more = vec![sub.inclusion()];
        for act in m.left_acts().iter().chain(m.right_acts()) {
            more.push(act.mul(&sub.inclusion()));
        }
        let refs: Vec<&Mat> = more.iter().collect();
        let next = crate::exactla::Subspace::from_columns(&Mat::hstack(&refs));
        if next.dim() == sub.dim() {
            break;
        }
        sub = next;
    }
    if sub.is_zero() {
        return m;
    }
    m.submodule(&sub).expect("closed under the actions").0
}
