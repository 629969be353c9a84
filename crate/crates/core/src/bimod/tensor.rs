use crate::exactla::{quotient, Mat, QuotientData, Subspace};

use super::{same_algebra, BimodError, Bimodule, BimoduleMap};

/// Provenance of `M ⊗_A N`: the factors and the cokernel presentation of the
/// tensor as a quotient of `M ⊗_k N`.
#[derive(Clone)]
pub struct TensorOverRing {
    pub left: Bimodule,
    pub right: Bimodule,
    pub quotient: QuotientData,
}

impl TensorOverRing {
    /// `M ⊗_k N -> M ⊗_A N`.
    pub fn projection(&self) -> &Mat {
        self.quotient.projection()
    }
    /// A linear (not balanced) section of the projection.
    pub fn section(&self) -> &Mat {
        self.quotient.section()
    }
    pub fn relations(&self) -> &Subspace {
        self.quotient.relations()
    }
}

/// `M ⊗_A N` where `A` is the right algebra of `m` and the left algebra of `n`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<Bimodule, BimodError> {
    if !same_algebra(m.right(), n.left()) {
        return Err(BimodError::AlgebraMismatch("tensor factors over different algebras".into()));
    }
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let amb = dm * dn;
    let im = Mat::identity(f, dm);
    let in_ = Mat::identity(f, dn);
    let mut rel_rows = Vec::with_capacity(m.right().dim());
    for a in 0..m.right().dim() {
        let r = m.right_act(a).kron(&in_).sub(&im.kron(n.left_act(a)));
        rel_rows.push(r.transpose());
    }
    let relations = if rel_rows.is_empty() {
        Subspace::zero(f, amb)
    } else {
        let refs: Vec<&Mat> = rel_rows.iter().collect();
        Subspace::from_rows(&Mat::vstack(&refs))
    };
    let q = quotient(amb, relations);
    let (p, s) = (q.projection(), q.section());
    let left_act = m.left_acts().iter().map(|l| p.mul(&l.kron(&in_)).mul(s)).collect();
    let right_act = n.right_acts().iter().map(|r| p.mul(&im.kron(r)).mul(s)).collect();
    let labels = (0..amb)
        .filter(|c| !q.relations().pivots().contains(c))
        .map(|c| format!("{}⊗{}", m.labels()[c / dn], n.labels()[c % dn]))
        .collect();
    let dim = q.dim();
    let info = TensorOverRing { left: m.clone(), right: n.clone(), quotient: q };
    Ok(Bimodule::from_tensor(m.left().clone(), n.right().clone(), dim, left_act, right_act, labels, info))
}

/// The matrix of `f ⊗ g : src -> dst` where both are tensor products.
pub fn induced_map(f: &Mat, g: &Mat, src: &Bimodule, dst: &Bimodule) -> Result<Mat, BimodError> {
    let ts = src.tensor_info().expect("source must be a tensor product");
    let td = dst.tensor_info().expect("target must be a tensor product");
    let k = f.kron(g);
    let pk = td.projection().mul(&k);
    if !pk.mul(&ts.relations().inclusion()).is_zero() {
        return Err(BimodError::NotBalanced);
    }
    Ok(pk.mul(ts.section()))
}

/// `f ⊗ g` between freshly built tensor products.
pub fn tensor_map(f: &BimoduleMap, g: &BimoduleMap) -> Result<BimoduleMap, BimodError> {
    let src = tensor_over(&f.source, &g.source)?;
    let dst = tensor_over(&f.target, &g.target)?;
    let m = induced_map(&f.matrix, &g.matrix, &src, &dst)?;
    Ok(BimoduleMap::new(src, dst, m))
}

fn is_stop(m: &Bimodule, stops: &[&Bimodule]) -> bool {
    !m.is_tensor() || stops.iter().any(|s| s.ptr_eq(m))
}

/// The factors of an iterated tensor product, read left to right, descending
/// until an atomic module or one of `stops`.
pub fn leaves(m: &Bimodule, stops: &[&Bimodule]) -> Vec<Bimodule> {
    if is_stop(m, stops) {
        return vec![m.clone()];
    }
    let t = m.tensor_info().unwrap();
    let mut out = leaves(&t.left, stops);
    out.extend(leaves(&t.right, stops));
    out
}

/// A linear section `m -> L1 ⊗_k L2 ⊗_k ...` of the iterated projection.
pub fn lift_to_leaves(m: &Bimodule, stops: &[&Bimodule]) -> Mat {
    if is_stop(m, stops) {
        return m.identity();
    }
    let t = m.tensor_info().unwrap();
    lift_to_leaves(&t.left, stops).kron(&lift_to_leaves(&t.right, stops)).mul(t.section())
}

/// The iterated projection `L1 ⊗_k L2 ⊗_k ... -> m`.
pub fn proj_from_leaves(m: &Bimodule, stops: &[&Bimodule]) -> Mat {
    if is_stop(m, stops) {
        return m.identity();
    }
    let t = m.tensor_info().unwrap();
    t.projection().mul(&proj_from_leaves(&t.left, stops).kron(&proj_from_leaves(&t.right, stops)))
}

/// The associativity isomorphism between two bracketings of the same factors.
pub fn rebracket(src: &Bimodule, dst: &Bimodule) -> Mat {
    let ls: Vec<usize> = leaves(src, &[]).iter().map(Bimodule::dim).collect();
    let ld: Vec<usize> = leaves(dst, &[]).iter().map(Bimodule::dim).collect();
    assert_eq!(ls, ld, "rebracketing between different factor sequences");
    proj_from_leaves(dst, &[]).mul(&lift_to_leaves(src, &[]))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bimod::check_bimodule;
    use crate::exactla::FieldSpec;
    use crate::rings::Algebra;
    use crate::testutil::*;
    use proptest::prelude::*;

    #[test]
    fn regular_tensor_regular() {
        let a = Arc::new(f4());
        let reg = Bimodule::regular(a.clone());
        let t = tensor_over(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(check_bimodule(&t).is_empty());
    }

    #[test]
    fn tensor_over_base_field() {
        let a = Arc::new(f4());
        let k = Arc::new(Algebra::ground(f2()));
        let incl = crate::rings::RingHom::new(k, a.clone(), Mat::from_i64(f2(), &[&[1], &[0]]), true);
        let m = Bimodule::regular(a.clone()).restrict_right(&incl);
        let n = Bimodule::regular(a).restrict_left(&incl);
        assert_eq!(tensor_over(&m, &n).unwrap().dim(), 4);
    }

    #[test]
    fn row_ring_tensor_square() {
        let r = Arc::new(row_ring(f2()));
        let reg = Bimodule::regular(r.clone());
        let t = tensor_over(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(4 - brute_balancing_rank(&r), 2);
    }

    #[test]
    fn induced_identity_and_zero() {
        let a = Arc::new(f4());
        let reg = Bimodule::regular(a);
        let t = tensor_over(&reg, &reg).unwrap();
        let id = reg.identity();
        assert!(induced_map(&id, &id, &t, &t).unwrap().is_identity());
        let z = Mat::zeros(f2(), 2, 2);
        assert!(induced_map(&id, &z, &t, &t).unwrap().is_zero());
    }

    #[test]
    fn frobenius_tensor_identity_matches_pure_tensors() {
        // A ⊗_{F2} A for A = F4, applying (x ↦ x^2) ⊗ id
        let f = f2();
        let a = Arc::new(f4());
        let k = Arc::new(Algebra::ground(f));
        let incl = crate::rings::RingHom::new(k, a.clone(), Mat::from_i64(f, &[&[1], &[0]]), true);
        let m = Bimodule::regular(a.clone()).restrict_right(&incl);
        let n = Bimodule::regular(a.clone()).restrict_left(&incl);
        let t = tensor_over(&m, &n).unwrap();
        // 1 ↦ 1, w ↦ w^2 = 1 + w
        let frob = Mat::from_i64(f, &[&[1, 1], &[0, 1]]);
        let got = induced_map(&frob, &n.identity(), &t, &t).unwrap();
        assert_eq!((got.rows(), got.cols()), (4, 4));
        // oracle: all 16 pure tensors x⊗y with x, y ∈ F4
        let elems = [[0, 0], [1, 0], [0, 1], [1, 1]];
        for x in elems {
            for y in elems {
                let xv: Vec<_> = x.iter().map(|&c| f.from_i64(c)).collect();
                let yv: Vec<_> = y.iter().map(|&c| f.from_i64(c)).collect();
                let fx = frob.mul_vec(&xv);
                let pure = |u: &[crate::exactla::Scalar], v: &[crate::exactla::Scalar]| {
                    let mut out = Vec::new();
                    for i in u {
                        for j in v {
                            out.push(f.mul(i, j));
                        }
                    }
                    t.tensor_info().unwrap().projection().mul_vec(&out)
                };
                assert_eq!(got.mul_vec(&pure(&xv, &yv)), pure(&fx, &yv));
            }
        }
    }

    #[test]
    fn unbalanced_pair_is_rejected() {
        let f = f2();
        let a = Arc::new(f4());
        let reg = Bimodule::regular(a);
        let t = tensor_over(&reg, &reg).unwrap();
        let frob = Mat::from_i64(f, &[&[1, 1], &[0, 1]]);
        // Frobenius is not A-linear, so frob ⊗ id does not descend over F4
        assert_eq!(induced_map(&frob, &reg.identity(), &t, &t).unwrap_err(), BimodError::NotBalanced);
    }

    #[test]
    fn associator_is_invertible() {
        let r = Arc::new(row_ring(f2()));
        let reg = Bimodule::regular(r);
        let ab = tensor_over(&reg, &reg).unwrap();
        let ab_c = tensor_over(&ab, &reg).unwrap();
        let bc = tensor_over(&reg, &reg).unwrap();
        let a_bc = tensor_over(&reg, &bc).unwrap();
        let fwd = rebracket(&ab_c, &a_bc);
        let back = rebracket(&a_bc, &ab_c);
        assert!(fwd.mul(&back).is_identity());
        assert!(ab_c.is_bimodule_map(&a_bc, &fwd));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn tensor_dimension_matches_oracle(seed in 0u64..10_000, fi in 0usize..3) {
            let field = [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals][fi];
            let (m, n) = random_module_pair(field, seed);
            let t = tensor_over(&m, &n).unwrap();
            prop_assert_eq!(t.dim(), oracle_tensor_dim(&m, &n));
            prop_assert!(check_bimodule(&t).is_empty());
        }
    }
}
