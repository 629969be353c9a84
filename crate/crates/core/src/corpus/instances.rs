//! The reference instances and seeded random instances with small corings.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebras::{dual_numbers, f4, row_ring, split_pair};
use crate::bimod::{is_fg_projective, is_firm_module, tensor_over, Bimodule};
use crate::comod::{comodule_from_grouplike, regular_comodule, Comodule};
use crate::corings::{
    comatrix_coaction, comatrix_coring, sweedler_coring, trivial_coring, Coring, Grouplike,
};
use crate::exactla::{FieldSpec, Mat, Scalar};
use crate::galois::GaloisInstance;
use crate::rings::{Algebra, RingHom};

pub const CORPUS_IDS: [&str; 5] = ["i1", "i2", "i3", "i4", "i5"];

fn rationals() -> FieldSpec {
    FieldSpec::Rationals
}

fn f2() -> FieldSpec {
    FieldSpec::Prime(2)
}

/// `A = B = Σ = k = ℚ` over the trivial coring.
pub fn i1() -> GaloisInstance {
    let k = Arc::new(Algebra::ground(rationals()));
    let c = trivial_coring(&k).expect("a field is firm");
    let g = Grouplike { coring: c, g: vec![rationals().one()] };
    GaloisInstance::new("i1", comodule_from_grouplike(&g).expect("unital"), None)
}

/// The Sweedler coring of `F_2 ⊆ F_4` with `Σ = F_4` through `1 ⊗ 1`.
pub fn i2() -> GaloisInstance {
    let k = Arc::new(Algebra::ground(f2()));
    let iota = RingHom::new(k, Arc::new(f4()), Mat::from_i64(f2(), &[&[1], &[0]]), true);
    let (_, g) = sweedler_coring(&iota).expect("F_4 is unital");
    GaloisInstance::new("i2", comodule_from_grouplike(&g).expect("unital"), None)
}

/// `Σ = k²` over `A = B = ℚ` with its comatrix coring `(k²)* ⊗ k²`.
pub fn i3() -> GaloisInstance {
    let sigma = Bimodule::vector_space(rationals(), 2);
    let db = is_fg_projective(&sigma).expect("free");
    let c = comatrix_coring(&sigma, &db).expect("comatrix data");
    let rho = comatrix_coaction(&sigma, &db, &c);
    GaloisInstance::new("i3", Comodule::new(Arc::new(c), sigma, rho).expect("shapes agree"), None)
}

/// The firm ring without unit used for firmness checks.
pub fn i4() -> Algebra {
    row_ring(f2())
}

/// The two-dimensional ring with zero multiplication.
pub fn null_ring(f: FieldSpec) -> Algebra {
    Algebra::new(f, 2, vec![f.zero(); 8], None, None)
}

/// The trivial coring on `F_4` with `Σ = F_4` over `B = F_2`.
pub fn i5() -> GaloisInstance {
    let a = Arc::new(f4());
    let c = trivial_coring(&a).expect("unital");
    let g = Grouplike { coring: c, g: a.unit().unwrap().to_vec() };
    GaloisInstance::new("i5", comodule_from_grouplike(&g).expect("unital"), None)
}

pub fn galois_instance(id: &str) -> Option<GaloisInstance> {
    match id {
        "i1" => Some(i1()),
        "i2" => Some(i2()),
        "i3" => Some(i3()),
        "i5" => Some(i5()),
        _ => None,
    }
}

/// The group-like coalgebra on `{g1, g2}` or the divided-power coalgebra on `{1, x}`.
fn two_dim_coalgebra(f: FieldSpec, grouplike: bool) -> (Mat, Mat) {
    let mut delta = Mat::zeros(f, 4, 2);
    let mut eps = Mat::zeros(f, 1, 2);
    if grouplike {
        delta.set(0, 0, f.one());
        delta.set(3, 1, f.one());
        eps.set(0, 0, f.one());
        eps.set(0, 1, f.one());
    } else {
        delta.set(0, 0, f.one());
        delta.set(1, 1, f.one());
        delta.set(2, 1, f.one());
        eps.set(0, 0, f.one());
    }
    (delta, eps)
}

fn random_invertible(rng: &mut ChaCha8Rng, f: FieldSpec, n: usize) -> Mat {
    loop {
        let rows: Vec<Vec<Scalar>> =
            (0..n).map(|_| (0..n).map(|_| f.from_i64(rng.gen_range(0..2))).collect()).collect();
        let m = Mat::from_rows(f, &rows);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random instance over `F_2` with a coring of dimension at most 2.
///
/// Either a trivial coring on a random algebra of dimension at most 2 with
/// `Σ` the regular comodule, or a two-dimensional coalgebra transported along
/// a random change of basis with `Σ` the regular comodule or the line through
/// a group-like.
pub fn random_instance(seed: u64) -> GaloisInstance {
    let f = f2();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("random-{seed}");
    if rng.gen_bool(0.5) {
        let a = Arc::new(match rng.gen_range(0..4) {
            0 => Algebra::ground(f),
            1 => split_pair(f),
            2 => f4(),
            _ => dual_numbers(f),
        });
        let c = Arc::new(trivial_coring(&a).expect("unital"));
        let sigma = if rng.gen_bool(0.5) {
            regular_comodule(&c)
        } else {
            let x = Bimodule::right_regular(a.clone());
            let d = is_firm_module(&x).expect("unital").d;
            Comodule::new(c, x, d).expect("shapes agree")
        };
        return GaloisInstance::new(name, sigma, None);
    }
    let grouplike = rng.gen_bool(0.5);
    let (delta, eps) = two_dim_coalgebra(f, grouplike);
    let p = random_invertible(&mut rng, f, 2);
    let pinv = p.inverse().unwrap();
    let carrier = Bimodule::vector_space(f, 2);
    let cc = tensor_over(&carrier, &carrier).expect("same base");
    let delta = cc.tensor_info().unwrap().projection().mul(&p.kron(&p)).mul(&delta).mul(&pinv);
    let coring = Arc::new(Coring::new(carrier, delta, eps.mul(&pinv)).expect("shapes agree"));
    if rng.gen_bool(0.5) {
        return GaloisInstance::new(name, regular_comodule(&coring), None);
    }
    // the first basis vector is group-like in both coalgebras
    let g = p.column(0);
    let gl = Grouplike { coring: (*coring).clone(), g };
    GaloisInstance::new(name, comodule_from_grouplike(&gl).expect("unital"), None)
}
