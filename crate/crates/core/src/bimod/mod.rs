//! Bimodules over finite-dimensional algebras and the module-theoretic test battery.
//!
//! Actions are stored as one matrix per basis element of the acting algebra.
//! `left_act[b]` is `m ↦ b·m` and `right_act[a]` is `m ↦ m·a`. One-sided modules
//! use the ground field as the missing algebra.

mod hom;
mod props;
mod tensor;

pub use hom::{hom_right, HomSpace};
pub use props::{
    default_flat_probes, default_reflection_probes, equalizer_in_mod, is_faithfully_flat,
    is_firm_left_module, is_firm_module, is_fg_projective, is_flat, reflects_isos_probe,
    DualBasis, FirmData,
};
pub use tensor::{
    induced_map, leaves, lift_to_leaves, proj_from_leaves, rebracket, tensor_map, tensor_over,
    TensorOverRing,
};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{FieldSpec, Mat, Scalar, Subspace};
use crate::rings::{Algebra, RingHom};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BimodError {
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("map is not balanced over the middle algebra")]
    NotBalanced,
    #[error("subspace is not stable under the actions")]
    NotStable,
    #[error("module is not firm")]
    NotFirm,
}

#[derive(Clone)]
pub struct Bimodule {
    inner: Arc<Inner>,
}

struct Inner {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_act: Vec<Mat>,
    right_act: Vec<Mat>,
    labels: Vec<String>,
    tensor: Option<TensorOverRing>,
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (same_algebra(&self.inner.left, &other.inner.left)
                && same_algebra(&self.inner.right, &other.inner.right)
                && self.inner.dim == other.inner.dim
                && self.inner.left_act == other.inner.left_act
                && self.inner.right_act == other.inner.right_act)
    }
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bimodule(dim {}, left dim {}, right dim {}{})",
            self.dim(),
            self.left().dim(),
            self.right().dim(),
            if self.is_tensor() { ", tensor" } else { "" }
        )
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("v{i}")).collect()
}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        left_act: Vec<Mat>,
        right_act: Vec<Mat>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let dim = left_act
            .first()
            .or(right_act.first())
            .map(Mat::rows)
            .expect("at least one algebra must be nonzero");
        Self::with_dim(left, right, dim, left_act, right_act, labels)
    }

    pub fn with_dim(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_act: Vec<Mat>,
        right_act: Vec<Mat>,
        labels: Option<Vec<String>>,
    ) -> Self {
        assert_eq!(left_act.len(), left.dim());
        assert_eq!(right_act.len(), right.dim());
        for m in left_act.iter().chain(right_act.iter()) {
            assert!(m.rows() == dim && m.cols() == dim, "action matrix has wrong shape");
        }
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        assert_eq!(labels.len(), dim);
        Bimodule {
            inner: Arc::new(Inner { left, right, dim, left_act, right_act, labels, tensor: None }),
        }
    }

    pub(crate) fn from_tensor(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_act: Vec<Mat>,
        right_act: Vec<Mat>,
        labels: Vec<String>,
        tensor: TensorOverRing,
    ) -> Self {
        Bimodule {
            inner: Arc::new(Inner {
                left,
                right,
                dim,
                left_act,
                right_act,
                labels,
                tensor: Some(tensor),
            }),
        }
    }

    /// `A` as an `(A, A)`-bimodule.
    pub fn regular(a: Arc<Algebra>) -> Self {
        let l = (0..a.dim()).map(|i| a.left_mult(i).clone()).collect();
        let r = (0..a.dim()).map(|i| a.right_mult(i).clone()).collect();
        let labels = a.labels().to_vec();
        let dim = a.dim();
        Bimodule::with_dim(a.clone(), a, dim, l, r, Some(labels))
    }

    /// `A_A`, a right module with the ground field acting on the left.
    pub fn right_regular(a: Arc<Algebra>) -> Self {
        Bimodule::regular(a).forget_left()
    }

    /// `_A A`, a left module with the ground field acting on the right.
    pub fn left_regular(a: Arc<Algebra>) -> Self {
        Bimodule::regular(a).forget_right()
    }

    /// `k^n` as a `(k, k)`-bimodule.
    pub fn vector_space(field: FieldSpec, n: usize) -> Self {
        let k = Arc::new(Algebra::ground(field));
        let id = Mat::identity(field, n);
        Bimodule::with_dim(k.clone(), k, n, vec![id.clone()], vec![id], None)
    }

    /// `A^n` as a right `A`-module.
    pub fn free_right(a: Arc<Algebra>, n: usize) -> Self {
        let one = Bimodule::right_regular(a.clone());
        let mut acc = one.clone();
        for _ in 1..n {
            acc = acc.direct_sum(&one);
        }
        if n == 0 {
            let f = a.field();
            let k = Arc::new(Algebra::ground(f));
            let z = Mat::zeros(f, 0, 0);
            return Bimodule::with_dim(k, a.clone(), 0, vec![z.clone()], vec![z; a.dim()], None);
        }
        acc
    }

    pub fn field(&self) -> FieldSpec {
        self.inner.right.field()
    }
    pub fn dim(&self) -> usize {
        self.inner.dim
    }
    pub fn left(&self) -> &Arc<Algebra> {
        &self.inner.left
    }
    pub fn right(&self) -> &Arc<Algebra> {
        &self.inner.right
    }
    pub fn left_act(&self, b: usize) -> &Mat {
        &self.inner.left_act[b]
    }
    pub fn right_act(&self, a: usize) -> &Mat {
        &self.inner.right_act[a]
    }
    pub fn left_acts(&self) -> &[Mat] {
        &self.inner.left_act
    }
    pub fn right_acts(&self) -> &[Mat] {
        &self.inner.right_act
    }
    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }
    pub fn tensor_info(&self) -> Option<&TensorOverRing> {
        self.inner.tensor.as_ref()
    }
    pub fn is_tensor(&self) -> bool {
        self.inner.tensor.is_some()
    }
    pub fn ptr_eq(&self, other: &Bimodule) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn left_act_by(&self, x: &[Scalar]) -> Mat {
        lin_comb(self.field(), self.dim(), &self.inner.left_act, x)
    }

    pub fn right_act_by(&self, x: &[Scalar]) -> Mat {
        lin_comb(self.field(), self.dim(), &self.inner.right_act, x)
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.field(), self.dim())
    }

    /// Same actions, tensor structure dropped, so that leaf lifting stops here.
    pub fn atomized(&self) -> Bimodule {
        Bimodule::with_dim(
            self.left().clone(),
            self.right().clone(),
            self.dim(),
            self.inner.left_act.clone(),
            self.inner.right_act.clone(),
            Some(self.labels().to_vec()),
        )
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Bimodule {
        assert_eq!(labels.len(), self.dim());
        let mut m = self.atomized();
        Arc::get_mut(&mut m.inner).expect("fresh module").labels = labels;
        m
    }

    /// Replaces the left algebra by the ground field.
    pub fn forget_left(&self) -> Bimodule {
        let f = self.field();
        let k = Arc::new(Algebra::ground(f));
        Bimodule::with_dim(
            k,
            self.right().clone(),
            self.dim(),
            vec![self.identity()],
            self.inner.right_act.clone(),
            Some(self.labels().to_vec()),
        )
    }

    pub fn forget_right(&self) -> Bimodule {
        let f = self.field();
        let k = Arc::new(Algebra::ground(f));
        Bimodule::with_dim(
            self.left().clone(),
            k,
            self.dim(),
            self.inner.left_act.clone(),
            vec![self.identity()],
            Some(self.labels().to_vec()),
        )
    }

    /// Pulls the left action back along `hom: B -> T` (this module's left algebra is `T`).
    pub fn restrict_left(&self, hom: &RingHom) -> Bimodule {
        assert!(same_algebra(&hom.target, self.left()));
        let acts = (0..hom.source.dim()).map(|b| self.left_act_by(&hom.matrix.column(b))).collect();
        Bimodule::with_dim(
            hom.source.clone(),
            self.right().clone(),
            self.dim(),
            acts,
            self.inner.right_act.clone(),
            Some(self.labels().to_vec()),
        )
    }

    pub fn restrict_right(&self, hom: &RingHom) -> Bimodule {
        assert!(same_algebra(&hom.target, self.right()));
        let acts =
            (0..hom.source.dim()).map(|b| self.right_act_by(&hom.matrix.column(b))).collect();
        Bimodule::with_dim(
            self.left().clone(),
            hom.source.clone(),
            self.dim(),
            self.inner.left_act.clone(),
            acts,
            Some(self.labels().to_vec()),
        )
    }

    /// Replaces the left action wholesale (used when a new algebra starts acting).
    pub fn with_left_action(&self, left: Arc<Algebra>, acts: Vec<Mat>) -> Bimodule {
        Bimodule::with_dim(
            left,
            self.right().clone(),
            self.dim(),
            acts,
            self.inner.right_act.clone(),
            Some(self.labels().to_vec()),
        )
    }

    pub fn with_right_action(&self, right: Arc<Algebra>, acts: Vec<Mat>) -> Bimodule {
        Bimodule::with_dim(
            self.left().clone(),
            right,
            self.dim(),
            self.inner.left_act.clone(),
            acts,
            Some(self.labels().to_vec()),
        )
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Bimodule {
        assert!(same_algebra(self.left(), other.left()) && same_algebra(self.right(), other.right()));
        let l = self.inner.left_act.iter().zip(&other.inner.left_act).map(|(a, b)| a.direct_sum(b));
        let r = self.inner.right_act.iter().zip(&other.inner.right_act).map(|(a, b)| a.direct_sum(b));
        let labels = self
            .labels()
            .iter()
            .map(|l| format!("{l}.0"))
            .chain(other.labels().iter().map(|l| format!("{l}.1")))
            .collect();
        Bimodule::with_dim(
            self.left().clone(),
            self.right().clone(),
            self.dim() + other.dim(),
            l.collect(),
            r.collect(),
            Some(labels),
        )
    }

    /// The action-stable subspace `sub` with inherited actions and its inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Result<(Bimodule, Mat), BimodError> {
        let incl = sub.inclusion();
        let ret = sub.retraction();
        let restrict = |acts: &[Mat]| -> Result<Vec<Mat>, BimodError> {
            acts.iter()
                .map(|m| {
                    let img = m.mul(&incl);
                    if sub.contains_columns(&img) {
                        Ok(ret.mul(&img))
                    } else {
                        Err(BimodError::NotStable)
                    }
                })
                .collect()
        };
        let l = restrict(&self.inner.left_act)?;
        let r = restrict(&self.inner.right_act)?;
        let m = Bimodule::with_dim(self.left().clone(), self.right().clone(), sub.dim(), l, r, None);
        Ok((m, incl))
    }

    /// Quotient by an action-stable subspace, with the projection.
    pub fn quotient_module(&self, sub: &Subspace) -> Result<(Bimodule, Mat), BimodError> {
        let q = crate::exactla::quotient(self.dim(), sub.clone());
        let (p, s) = (q.projection().clone(), q.section().clone());
        let induce = |acts: &[Mat]| -> Result<Vec<Mat>, BimodError> {
            acts.iter()
                .map(|m| {
                    if !p.mul(m).mul(&sub.inclusion()).is_zero() {
                        return Err(BimodError::NotStable);
                    }
                    Ok(p.mul(m).mul(&s))
                })
                .collect()
        };
        let l = induce(&self.inner.left_act)?;
        let r = induce(&self.inner.right_act)?;
        let m = Bimodule::with_dim(self.left().clone(), self.right().clone(), q.dim(), l, r, None);
        Ok((m, p))
    }

    /// Whether `matrix: self -> target` commutes with both actions.
    pub fn is_bimodule_map(&self, target: &Bimodule, matrix: &Mat) -> bool {
        if matrix.rows() != target.dim() || matrix.cols() != self.dim() {
            return false;
        }
        self.inner.left_act.iter().zip(target.left_acts()).all(|(s, t)| matrix.mul(s) == t.mul(matrix))
            && self
                .inner
                .right_act
                .iter()
                .zip(target.right_acts())
                .all(|(s, t)| matrix.mul(s) == t.mul(matrix))
    }

    /// Only the right actions are checked.
    pub fn is_right_linear(&self, target: &Bimodule, matrix: &Mat) -> bool {
        self.inner.right_act.iter().zip(target.right_acts()).all(|(s, t)| matrix.mul(s) == t.mul(matrix))
    }
}

pub(crate) fn lin_comb(field: FieldSpec, dim: usize, mats: &[Mat], x: &[Scalar]) -> Mat {
    let mut acc = Mat::zeros(field, dim, dim);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

/// A matrix between two bimodules, meant to commute with the actions.
#[derive(Clone, Debug)]
pub struct BimoduleMap {
    pub source: Bimodule,
    pub target: Bimodule,
    pub matrix: Mat,
}

impl BimoduleMap {
    pub fn new(source: Bimodule, target: Bimodule, matrix: Mat) -> Self {
        assert_eq!(matrix.rows(), target.dim(), "map has wrong number of rows");
        assert_eq!(matrix.cols(), source.dim(), "map has wrong number of columns");
        BimoduleMap { source, target, matrix }
    }

    pub fn identity(m: &Bimodule) -> Self {
        BimoduleMap::new(m.clone(), m.clone(), m.identity())
    }

    pub fn is_valid(&self) -> bool {
        self.source.is_bimodule_map(&self.target, &self.matrix)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &BimoduleMap) -> BimoduleMap {
        BimoduleMap::new(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix))
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.is_invertible()
    }
}

/// Localized failures of the module axioms.
pub fn check_bimodule(m: &Bimodule) -> Vec<String> {
    let mut out = Vec::new();
    let (b, a) = (m.left(), m.right());
    let lab_b = b.labels();
    let lab_a = a.labels();
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            let prod = b.mul_vec(&b.basis_vector(i), &b.basis_vector(j));
            if m.left_act(i).mul(m.left_act(j)) != m.left_act_by(&prod) {
                out.push(format!("left action: ({}*{})·m != {}·({}·m)", lab_b[i], lab_b[j], lab_b[i], lab_b[j]));
            }
        }
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let prod = a.mul_vec(&a.basis_vector(i), &a.basis_vector(j));
            if m.right_act(j).mul(m.right_act(i)) != m.right_act_by(&prod) {
                out.push(format!("right action: m·({}*{}) != (m·{})·{}", lab_a[i], lab_a[j], lab_a[i], lab_a[j]));
            }
        }
    }
    for i in 0..b.dim() {
        for j in 0..a.dim() {
            if m.left_act(i).mul(m.right_act(j)) != m.right_act(j).mul(m.left_act(i)) {
                out.push(format!("actions do not commute: ({}·m)·{}", lab_b[i], lab_a[j]));
            }
        }
    }
    if let Some(u) = b.unit() {
        if !m.left_act_by(u).is_identity() {
            out.push("left unit does not act as identity".into());
        }
    }
    if let Some(u) = a.unit() {
        if !m.right_act_by(u).is_identity() {
            out.push("right unit does not act as identity".into());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn regular_modules_are_valid() {
        for a in [f4(), row_ring(f2()), Algebra::matrix_algebra(f3(), 2)] {
            let a = Arc::new(a);
            assert!(check_bimodule(&Bimodule::regular(a.clone())).is_empty());
            assert!(check_bimodule(&Bimodule::free_right(a, 2)).is_empty());
        }
    }

    #[test]
    fn submodule_and_quotient() {
        let f = f2();
        let a = Arc::new(Algebra::product(&Algebra::ground(f), &Algebra::ground(f)));
        let m = Bimodule::right_regular(a.clone());
        let first = Subspace::from_rows(&Mat::from_i64(f, &[&[1, 0]]));
        let (s, incl) = m.submodule(&first).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.is_bimodule_map(&m, &incl));
        let (q, p) = m.quotient_module(&first).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(m.is_bimodule_map(&q, &p));
        let diag = Subspace::from_rows(&Mat::from_i64(f, &[&[1, 1]]));
        let f4a = Arc::new(f4());
        let f4m = Bimodule::right_regular(f4a);
        assert_eq!(f4m.submodule(&diag).unwrap_err(), BimodError::NotStable);
    }
}
