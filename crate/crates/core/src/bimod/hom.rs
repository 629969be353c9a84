use crate::exactla::{kernel, Mat, Scalar, Subspace};

use super::{same_algebra, Bimodule};

/// `Hom_A(Σ, X)` for right `A`-modules, realized inside `Hom_k(Σ, X)`.
///
/// A map `F` is stored through its row-major vectorization. The result is a
/// `(D, B)`-bimodule when `X` is `(D, A)` and `Σ` is `(B, A)`, with
/// `(d·F·b)(u) = d·F(b·u)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub sigma: Bimodule,
    pub target: Bimodule,
    pub space: Subspace,
    pub module: Bimodule,
}

pub fn hom_right(sigma: &Bimodule, x: &Bimodule) -> HomSpace {
    assert!(same_algebra(sigma.right(), x.right()), "Hom over different right algebras");
    let f = sigma.field();
    let (ds, dx) = (sigma.dim(), x.dim());
    let is = Mat::identity(f, ds);
    let ix = Mat::identity(f, dx);
    let mut rows = Vec::new();
    for a in 0..sigma.right().dim() {
        // vec(F·R^Σ_a) - vec(R^X_a·F)
        rows.push(ix.kron(&sigma.right_act(a).transpose()).sub(&x.right_act(a).kron(&is)));
    }
    let space = if rows.is_empty() {
        Subspace::full(f, ds * dx)
    } else {
        let refs: Vec<&Mat> = rows.iter().collect();
        kernel(&Mat::vstack(&refs))
    };
    let incl = space.inclusion();
    let ret = space.retraction();
    let left = x.left_acts().iter().map(|l| ret.mul(&l.kron(&is)).mul(&incl)).collect();
    let right =
        sigma.left_acts().iter().map(|l| ret.mul(&ix.kron(&l.transpose())).mul(&incl)).collect();
    let module =
        Bimodule::with_dim(x.left().clone(), sigma.left().clone(), space.dim(), left, right, None);
    HomSpace { sigma: sigma.clone(), target: x.clone(), space, module }
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The `dim X x dim Σ` matrix with the given coordinates.
    pub fn map_of(&self, coords: &[Scalar]) -> Mat {
        let v = self.space.inclusion().mul_vec(coords);
        Mat::unvectorize(self.sigma.field(), self.target.dim(), self.sigma.dim(), &v)
    }

    pub fn basis_map(&self, i: usize) -> Mat {
        Mat::unvectorize(
            self.sigma.field(),
            self.target.dim(),
            self.sigma.dim(),
            self.space.basis().row(i),
        )
    }

    /// Coordinates of an `A`-linear map, or `None` when it is not in the space.
    pub fn coords_of(&self, f: &Mat) -> Option<Vec<Scalar>> {
        self.space.coords(&f.vectorize())
    }

    /// The induced map `Hom(Σ, X) -> Hom(Σ, X')`, `F ↦ g∘F`.
    pub fn post_compose(&self, g: &Mat, other: &HomSpace) -> Mat {
        let is = Mat::identity(self.sigma.field(), self.sigma.dim());
        other.space.retraction().mul(&g.kron(&is)).mul(&self.space.inclusion())
    }

    /// The induced map `Hom(Σ, X) -> Hom(Σ', X)`, `F ↦ F∘h` for `h: Σ' -> Σ`.
    pub fn pre_compose(&self, h: &Mat, other: &HomSpace) -> Mat {
        let ix = Mat::identity(self.sigma.field(), self.target.dim());
        other.space.retraction().mul(&ix.kron(&h.transpose())).mul(&self.space.inclusion())
    }

    /// Evaluation on the flat product `Hom ⊗_k Σ -> X`, `F ⊗ u ↦ F(u)`.
    pub fn evaluation_flat(&self) -> Mat {
        let f = self.sigma.field();
        let (ds, dx) = (self.sigma.dim(), self.target.dim());
        let mut cols = Vec::with_capacity(self.dim() * ds);
        for h in 0..self.dim() {
            let fh = self.basis_map(h);
            for u in 0..ds {
                cols.push(fh.column(u));
            }
        }
        Mat::from_columns(f, dx, &cols)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bimod::check_bimodule;
    use crate::exactla::FieldSpec;
    use crate::rings::Algebra;
    use crate::testutil::*;

    #[test]
    fn endomorphisms_of_regular_module() {
        for a in [f4(), Algebra::matrix_algebra(f3(), 2)] {
            let a = Arc::new(a);
            let reg = Bimodule::regular(a.clone());
            let h = hom_right(&reg, &Bimodule::right_regular(a.clone()));
            assert_eq!(h.dim(), a.dim());
            assert!(check_bimodule(&h.module).is_empty());
            // every basis map is a left multiplication
            for i in 0..h.dim() {
                let fi = h.basis_map(i);
                let x = fi.mul_vec(a.unit().unwrap());
                assert_eq!(a.left_mult_by(&x), fi);
            }
        }
    }

    #[test]
    fn f4_endomorphisms_over_f2() {
        let a = Arc::new(f4());
        let m = Bimodule::right_regular(a);
        assert_eq!(hom_right(&m, &m).dim(), 2);
    }

    #[test]
    fn plain_dual() {
        let q = FieldSpec::Rationals;
        let h = hom_right(&Bimodule::vector_space(q, 2), &Bimodule::vector_space(q, 1));
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn composition_maps_stay_linear() {
        let a = Arc::new(Algebra::matrix_algebra(f2(), 2));
        let reg = Bimodule::regular(a.clone());
        let x = Bimodule::free_right(a.clone(), 2);
        let h1 = hom_right(&reg, &x);
        let h2 = hom_right(&reg, &x);
        // post-composition with the swap of the two summands
        let n = a.dim();
        let mut swap = Mat::zeros(f2(), 2 * n, 2 * n);
        for i in 0..n {
            swap.set(i, n + i, f2().one());
            swap.set(n + i, i, f2().one());
        }
        let p = h1.post_compose(&swap, &h2);
        assert!(p.mul(&p).is_identity());
        assert!(h1.module.is_bimodule_map(&h2.module, &p));
    }
}
