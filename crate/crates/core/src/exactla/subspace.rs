use super::field::{FieldSpec, Scalar};
use super::mat::Mat;

/// A subspace of `k^n`, stored by its canonical RREF basis (one basis vector per row).
///
/// Because the basis is in RREF, the coordinates of a member vector are just
/// its entries at the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Mat::zeros(field, 0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace::from_rows(&Mat::identity(field, ambient_dim))
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat) -> Self {
        let (red, pivots) = m.rref();
        let basis = red.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { ambient_dim: m.cols(), basis, pivots }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &Mat) -> Self {
        Subspace::from_rows(&m.transpose())
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn basis(&self) -> &Mat {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix (the inclusion map).
    pub fn inclusion(&self) -> Mat {
        self.basis.transpose()
    }

    /// Reads off pivot coordinates; a left inverse of [`Subspace::inclusion`].
    pub fn retraction(&self) -> Mat {
        let f = self.field();
        let mut r = Mat::zeros(f, self.dim(), self.ambient_dim);
        for (i, &p) in self.pivots.iter().enumerate() {
            r.set(i, p, f.one());
        }
        r
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.inclusion().mul_vec(&c);
        (back == v).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// True when every column of `m` lies in the subspace.
    pub fn contains_columns(&self, m: &Mat) -> bool {
        (0..m.cols()).all(|j| self.contains(&m.column(j)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(&Mat::vstack(&[&self.basis, &other.basis]))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = x^T B1 = y^T B2  <=>  [B1^T | -B2^T] (x; y) = 0
        let f = self.field();
        let neg = other.basis.scale(&f.neg(&f.one()));
        let stacked = Mat::hstack(&[&self.basis.transpose(), &neg.transpose()]);
        let ker = super::kernel(&stacked);
        let xs = ker.basis().select_cols(&(0..self.dim()).collect::<Vec<_>>());
        Subspace::from_rows(&xs.mul(&self.basis))
    }

    /// Image of the subspace under the linear map `m`.
    pub fn image_under(&self, m: &Mat) -> Subspace {
        Subspace::from_columns(&m.mul(&self.inclusion()))
    }
}

/// Cokernel data for `k^n / relations` with a deterministic basis: the
/// non-pivot coordinates of the relations' RREF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    ambient_dim: usize,
    relations: Subspace,
    dim: usize,
    projection: Mat,
    section: Mat,
}

impl QuotientData {
    pub fn new(ambient_dim: usize, relations: Subspace) -> Self {
        assert_eq!(relations.ambient_dim(), ambient_dim, "relations live in the wrong ambient");
        let f = relations.field();
        let free: Vec<usize> =
            (0..ambient_dim).filter(|c| !relations.pivots().contains(c)).collect();
        let dim = free.len();
        let mut select_free = Mat::zeros(f, dim, ambient_dim);
        let mut section = Mat::zeros(f, ambient_dim, dim);
        for (j, &c) in free.iter().enumerate() {
            select_free.set(j, c, f.one());
            section.set(c, j, f.one());
        }
        // reduce v against the RREF rows, then keep the free coordinates
        let reduce = Mat::identity(f, ambient_dim).sub(&relations.inclusion().mul(&relations.retraction()));
        let projection = select_free.mul(&reduce);
        QuotientData { ambient_dim, relations, dim, projection, section }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn projection(&self) -> &Mat {
        &self.projection
    }
    pub fn section(&self) -> &Mat {
        &self.section
    }
}
