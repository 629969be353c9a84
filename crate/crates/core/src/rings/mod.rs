//! Finite-dimensional associative algebras given by structure constants.
//!
//! A unit is optional: firm non-unital rings are first-class. Operations that
//! need a unit say so and fail with [`RingError::UnitRequired`].

mod radical;

pub use radical::{jacobson_radical, simple_right_modules, wedderburn_multiplicities};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bimod::{self, Bimodule};
use crate::exactla::{kernel, FieldSpec, Mat, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("operation needs a unital algebra")]
    UnitRequired,
    #[error("unsupported field for {0}")]
    UnsupportedField(String),
}

/// An associative algebra over a field, presented by structure constants
/// `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    consts: Vec<Scalar>,
    unit: Option<Vec<Scalar>>,
    labels: Vec<String>,
    left: Vec<Mat>,
    right: Vec<Mat>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.consts == other.consts
            && self.unit == other.unit
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra({} dim {} {:?}{})",
            self.field,
            self.dim,
            self.labels,
            if self.unit.is_some() { ", unital" } else { "" }
        )
    }
}

impl Algebra {
    /// `consts[(i * dim + j) * dim + k]` is the coefficient of `e_k` in `e_i e_j`.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        consts: Vec<Scalar>,
        unit: Option<Vec<Scalar>>,
        labels: Option<Vec<String>>,
    ) -> Self {
        assert_eq!(consts.len(), dim * dim * dim, "structure constants must be dim^3");
        if let Some(u) = &unit {
            assert_eq!(u.len(), dim, "unit vector has wrong length");
        }
        let labels = labels.unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect());
        assert_eq!(labels.len(), dim);
        let mut left = Vec::with_capacity(dim);
        let mut right = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut l = Mat::zeros(field, dim, dim);
            let mut r = Mat::zeros(field, dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    l.set(k, j, consts[(i * dim + j) * dim + k].clone());
                    r.set(k, j, consts[(j * dim + i) * dim + k].clone());
                }
            }
            left.push(l);
            right.push(r);
        }
        Algebra { field, dim, consts, unit, labels, left, right }
    }

    /// The ground field as a one-dimensional unital algebra.
    pub fn ground(field: FieldSpec) -> Self {
        Algebra::new(field, 1, vec![field.one()], Some(vec![field.one()]), Some(vec!["1".into()]))
    }

    /// The subalgebra of `n x n` matrices spanned by `basis`, which must be
    /// linearly independent and closed under multiplication.
    pub fn from_matrices(field: FieldSpec, basis: &[Mat], labels: Option<Vec<String>>) -> Self {
        let dim = basis.len();
        let vecs: Vec<Vec<Scalar>> = basis.iter().map(Mat::vectorize).collect();
        let span = Mat::from_columns(field, vecs.first().map_or(0, Vec::len), &vecs);
        let mut consts = Vec::with_capacity(dim * dim * dim);
        for a in basis {
            for b in basis {
                let prod = Mat::column_vector(field, &a.mul(b).vectorize());
                let c = span.solve(&prod).expect("span not closed under multiplication");
                consts.extend(c.column(0));
            }
        }
        let unit = basis.first().and_then(|m| {
            let id = Mat::column_vector(field, &Mat::identity(field, m.rows()).vectorize());
            span.solve(&id).map(|c| c.column(0))
        });
        Algebra::new(field, dim, consts, unit, labels)
    }

    /// Full matrix algebra `M_n(k)` with matrix units `E_ij` ordered row-major.
    pub fn matrix_algebra(field: FieldSpec, n: usize) -> Self {
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut m = Mat::zeros(field, n, n);
                m.set(i, j, field.one());
                basis.push(m);
                labels.push(format!("E{}{}", i + 1, j + 1));
            }
        }
        Algebra::from_matrices(field, &basis, Some(labels))
    }

    /// Direct product `A × B`, basis of `A` first.
    pub fn product(a: &Algebra, b: &Algebra) -> Self {
        assert_eq!(a.field, b.field);
        let f = a.field;
        let n = a.dim + b.dim;
        let mut consts = vec![f.zero(); n * n * n];
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    consts[(i * n + j) * n + k] = a.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for k in 0..b.dim {
                    let (ii, jj, kk) = (a.dim + i, a.dim + j, a.dim + k);
                    consts[(ii * n + jj) * n + kk] = b.structure_constant(i, j, k).clone();
                }
            }
        }
        let unit = match (&a.unit, &b.unit) {
            (Some(u), Some(v)) => Some(u.iter().chain(v.iter()).cloned().collect()),
            _ => None,
        };
        let labels = a
            .labels
            .iter()
            .map(|l| format!("{l}.0"))
            .chain(b.labels.iter().map(|l| format!("{l}.1")))
            .collect();
        Algebra::new(f, n, consts, unit, Some(labels))
    }

    /// Quotient by a two-sided ideal, with the projection `A -> A/I`.
    pub fn quotient(&self, ideal: &Subspace) -> (Algebra, Mat) {
        let q = crate::exactla::quotient(self.dim, ideal.clone());
        let (p, s) = (q.projection(), q.section());
        let n = q.dim();
        let mut consts = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let x = s.column(i);
                let y = s.column(j);
                consts.extend(p.mul_vec(&self.mul_vec(&x, &y)));
            }
        }
        let unit = self.unit.as_ref().map(|u| p.mul_vec(u));
        (Algebra::new(self.field, n, consts, unit, None), p.clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }
    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }
    pub fn structure_constants(&self) -> &[Scalar] {
        &self.consts
    }

    /// `x ↦ e_i x`.
    pub fn left_mult(&self, i: usize) -> &Mat {
        &self.left[i]
    }

    /// `x ↦ x e_j`.
    pub fn right_mult(&self, j: usize) -> &Mat {
        &self.right[j]
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &[Scalar]) -> Mat {
        combine(self.field, self.dim, &self.left, x)
    }

    pub fn right_mult_by(&self, x: &[Scalar]) -> Mat {
        combine(self.field, self.dim, &self.right, x)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.left_mult_by(x).mul_vec(y)
    }

    /// Two-sided ideal generated by `gens` (columns), i.e. `kG + AG + GA + AGA`.
    pub fn ideal_generated(&self, gens: &Subspace) -> Subspace {
        let mut current = gens.clone();
        loop {
            let mut cols = vec![current.inclusion()];
            for i in 0..self.dim {
                cols.push(self.left[i].mul(&current.inclusion()));
                cols.push(self.right[i].mul(&current.inclusion()));
            }
            let refs: Vec<&Mat> = cols.iter().collect();
            let next = Subspace::from_columns(&Mat::hstack(&refs));
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// Span of all products `x y` with `x ∈ u`, `y ∈ v`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut cols = Vec::new();
        for i in 0..u.dim() {
            let x = u.basis().row(i).to_vec();
            let lx = self.left_mult_by(&x);
            cols.push(lx.mul(&v.inclusion()));
        }
        if cols.is_empty() {
            return Subspace::zero(self.field, self.dim);
        }
        let refs: Vec<&Mat> = cols.iter().collect();
        Subspace::from_columns(&Mat::hstack(&refs))
    }

    /// Whether the subspace `i` satisfies `i^m = 0` for some `m <= dim + 1`.
    pub fn is_nilpotent_subspace(&self, i: &Subspace) -> bool {
        let mut power = i.clone();
        for _ in 0..=self.dim {
            if power.is_zero() {
                return true;
            }
            power = self.product_space(&power, i);
        }
        power.is_zero()
    }

    /// Center `{ z : z e_i = e_i z for all i }`.
    pub fn center(&self) -> Subspace {
        let parts: Vec<Mat> = (0..self.dim).map(|i| self.right[i].sub(&self.left[i])).collect();
        if parts.is_empty() {
            return Subspace::zero(self.field, 0);
        }
        let refs: Vec<&Mat> = parts.iter().collect();
        kernel(&Mat::vstack(&refs))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }
}

fn combine(field: FieldSpec, dim: usize, mats: &[Mat], x: &[Scalar]) -> Mat {
    let mut acc = Mat::zeros(field, dim, dim);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

/// One failed identity in [`check_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, a: &Algebra) -> Vec<String> {
        let l = a.labels();
        self.violations
            .iter()
            .map(|v| match v {
                AlgebraViolation::Associativity { i, j, k } => {
                    format!("associativity fails on ({}*{})*{}", l[*i], l[*j], l[*k])
                }
                AlgebraViolation::LeftUnit { i } => format!("1*{} != {}", l[*i], l[*i]),
                AlgebraViolation::RightUnit { i } => format!("{}*1 != {}", l[*i], l[*i]),
            })
            .collect()
    }
}

/// Checks associativity on every basis triple and the unit laws on every basis vector.
pub fn check_algebra(a: &Algebra) -> AlgebraReport {
    let mut violations = Vec::new();
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            let eij = a.mul_vec(&a.basis_vector(i), &a.basis_vector(j));
            for k in 0..n {
                let lhs = a.right_mult(k).mul_vec(&eij);
                let ejk = a.mul_vec(&a.basis_vector(j), &a.basis_vector(k));
                let rhs = a.left_mult(i).mul_vec(&ejk);
                if lhs != rhs {
                    violations.push(AlgebraViolation::Associativity { i, j, k });
                }
            }
        }
    }
    if let Some(u) = a.unit() {
        for i in 0..n {
            let e = a.basis_vector(i);
            if a.mul_vec(u, &e) != e {
                violations.push(AlgebraViolation::LeftUnit { i });
            }
            if a.mul_vec(&e, u) != e {
                violations.push(AlgebraViolation::RightUnit { i });
            }
        }
    }
    AlgebraReport { violations }
}

/// A linear map between algebras, meant to be multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub matrix: Mat,
    /// When set, the unit must map to the unit.
    pub unital: bool,
}

impl RingHom {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Mat, unital: bool) -> Self {
        assert_eq!(matrix.rows(), target.dim());
        assert_eq!(matrix.cols(), source.dim());
        RingHom { source, target, matrix, unital }
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let m = Mat::identity(a.field(), a.dim());
        RingHom::new(a.clone(), a, m, true)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_columns(&self.matrix)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &RingHom) -> RingHom {
        RingHom::new(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
            self.unital && first.unital,
        )
    }
}

/// Lists failures of multiplicativity (and of unit preservation when requested).
pub fn check_hom(h: &RingHom) -> Vec<String> {
    let mut out = Vec::new();
    let (s, t) = (&h.source, &h.target);
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let lhs = h.matrix.mul_vec(&s.mul_vec(&s.basis_vector(i), &s.basis_vector(j)));
            let rhs = t.mul_vec(&h.matrix.column(i), &h.matrix.column(j));
            if lhs != rhs {
                out.push(format!(
                    "f({}*{}) != f({})*f({})",
                    s.labels()[i],
                    s.labels()[j],
                    s.labels()[i],
                    s.labels()[j]
                ));
            }
        }
    }
    if h.unital {
        match (s.unit(), t.unit()) {
            (Some(u), Some(v)) => {
                if h.matrix.mul_vec(u) != v {
                    out.push("unit is not preserved".into());
                }
            }
            _ => out.push("unit preservation requested but a unit is missing".into()),
        }
    }
    out
}

/// Certificate that `A ⊗_A A -> A` is bijective.
#[derive(Clone, Debug)]
pub struct FirmWitness {
    /// The multiplication map from `A ⊗_A A` (quotient coordinates) to `A`.
    pub mult_map: Mat,
    /// Its inverse `d_A`.
    pub d: Mat,
    pub tensor_dim: usize,
}

pub fn is_firm_ring(a: &Arc<Algebra>) -> Option<FirmWitness> {
    let reg = Bimodule::regular(a.clone());
    let firm = bimod::is_firm_module(&reg)?;
    Some(FirmWitness { tensor_dim: firm.tensor.dim(), mult_map: firm.mult, d: firm.d })
}

/// `T · f(B) ⊆ f(B)`: the image of `hom` is a left ideal of its target.
pub fn is_left_ideal_via(hom: &RingHom) -> bool {
    let img = hom.image();
    let t = &hom.target;
    (0..t.dim()).all(|i| img.contains_columns(&t.left_mult(i).mul(&img.inclusion())))
}
