//! Corings over firm algebras: axioms, constructors, group-likes and morphisms.

use std::sync::Arc;

use thiserror::Error;

use crate::bimod::{
    check_bimodule, hom_right, induced_map, is_firm_left_module, is_firm_module, proj_from_leaves,
    rebracket, tensor_over, BimodError, Bimodule, DualBasis,
};
use crate::exactla::{Mat, Scalar};
use crate::rings::{is_firm_ring, Algebra, RingError, RingHom};

pub use crate::galois::comatrix_coring_firm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoringError {
    #[error("{0}")]
    Bimod(#[from] BimodError),
    #[error("{0}")]
    Ring(#[from] RingError),
    #[error("base algebra is not firm")]
    NotFirm,
    #[error("map has the wrong shape: {0}")]
    Shape(String),
}

/// An `A`-coring `(C, Δ, ε)` with `Δ` written in the coordinates of `C ⊗_A C`.
#[derive(Clone, Debug)]
pub struct Coring {
    base: Arc<Algebra>,
    carrier: Bimodule,
    cc: Bimodule,
    delta: Mat,
    eps: Mat,
    base_module: Bimodule,
}

impl Coring {
    pub fn new(carrier: Bimodule, delta: Mat, eps: Mat) -> Result<Self, CoringError> {
        let base = carrier.right().clone();
        if !crate::bimod::same_algebra(carrier.left(), &base) {
            return Err(CoringError::Shape("carrier must be an (A, A)-bimodule".into()));
        }
        let cc = tensor_over(&carrier, &carrier)?;
        if delta.rows() != cc.dim() || delta.cols() != carrier.dim() {
            return Err(CoringError::Shape(format!(
                "comultiplication is {}x{}, expected {}x{}",
                delta.rows(),
                delta.cols(),
                cc.dim(),
                carrier.dim()
            )));
        }
        if eps.rows() != base.dim() || eps.cols() != carrier.dim() {
            return Err(CoringError::Shape(format!(
                "counit is {}x{}, expected {}x{}",
                eps.rows(),
                eps.cols(),
                base.dim(),
                carrier.dim()
            )));
        }
        let base_module = Bimodule::regular(base.clone());
        Ok(Coring { base, carrier, cc, delta, eps, base_module })
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }
    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
    /// `C ⊗_A C`.
    pub fn cc(&self) -> &Bimodule {
        &self.cc
    }
    pub fn delta(&self) -> &Mat {
        &self.delta
    }
    pub fn eps(&self) -> &Mat {
        &self.eps
    }
    /// `A` as an `(A, A)`-bimodule, the target of the counit.
    pub fn base_module(&self) -> &Bimodule {
        &self.base_module
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoringViolation {
    CarrierAxioms(Vec<String>),
    NotFirm,
    DeltaNotBimoduleMap,
    EpsNotBimoduleMap,
    /// Columns (basis vectors of `C`) where the identity fails.
    Coassociativity(Vec<usize>),
    LeftCounit(Vec<usize>),
    RightCounit(Vec<usize>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoringReport {
    pub violations: Vec<CoringViolation>,
}

impl CoringReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, c: &Coring) -> Vec<String> {
        let lab = c.carrier().labels();
        let names = |cols: &[usize]| cols.iter().map(|&i| lab[i].clone()).collect::<Vec<_>>().join(", ");
        self.violations
            .iter()
            .map(|v| match v {
                CoringViolation::CarrierAxioms(msgs) => format!("carrier: {}", msgs.join("; ")),
                CoringViolation::NotFirm => "carrier is not firm on both sides".into(),
                CoringViolation::DeltaNotBimoduleMap => "comultiplication is not a bimodule map".into(),
                CoringViolation::EpsNotBimoduleMap => "counit is not a bimodule map".into(),
                CoringViolation::Coassociativity(c) => format!("coassociativity fails at {}", names(c)),
                CoringViolation::LeftCounit(c) => format!("left counit law fails at {}", names(c)),
                CoringViolation::RightCounit(c) => format!("right counit law fails at {}", names(c)),
            })
            .collect()
    }
}

pub(crate) fn differing_columns(x: &Mat, y: &Mat) -> Vec<usize> {
    (0..x.cols()).filter(|&j| x.column(j) != y.column(j)).collect()
}

/// Checks coassociativity and both counit laws, localized at basis vectors.
pub fn check_coring(c: &Coring) -> CoringReport {
    let mut violations = Vec::new();
    let car = c.carrier();
    let axioms = check_bimodule(car);
    if !axioms.is_empty() {
        violations.push(CoringViolation::CarrierAxioms(axioms));
        return CoringReport { violations };
    }
    if !car.is_bimodule_map(c.cc(), c.delta()) {
        violations.push(CoringViolation::DeltaNotBimoduleMap);
    }
    if !car.is_bimodule_map(c.base_module(), c.eps()) {
        violations.push(CoringViolation::EpsNotBimoduleMap);
    }
    let id = car.identity();
    // (C ⊗ Δ)∘Δ against (Δ ⊗ C)∘Δ, compared in C ⊗ (C ⊗ C)
    let c_cc = tensor_over(car, c.cc()).expect("same base");
    let cc_c = tensor_over(c.cc(), car).expect("same base");
    match (induced_map(&id, c.delta(), c.cc(), &c_cc), induced_map(c.delta(), &id, c.cc(), &cc_c)) {
        (Ok(right), Ok(left)) => {
            let lhs = right.mul(c.delta());
            let rhs = rebracket(&cc_c, &c_cc).mul(&left.mul(c.delta()));
            let bad = differing_columns(&lhs, &rhs);
            if !bad.is_empty() {
                violations.push(CoringViolation::Coassociativity(bad));
            }
        }
        _ => violations.push(CoringViolation::DeltaNotBimoduleMap),
    }
    match (is_firm_left_module(car), is_firm_module(car)) {
        (Some(left), Some(right)) => {
            if let Ok(m) = induced_map(c.eps(), &id, c.cc(), &left.tensor) {
                let bad = differing_columns(&m.mul(c.delta()), &left.d);
                if !bad.is_empty() {
                    violations.push(CoringViolation::LeftCounit(bad));
                }
            } else {
                violations.push(CoringViolation::EpsNotBimoduleMap);
            }
            if let Ok(m) = induced_map(&id, c.eps(), c.cc(), &right.tensor) {
                let bad = differing_columns(&m.mul(c.delta()), &right.d);
                if !bad.is_empty() {
                    violations.push(CoringViolation::RightCounit(bad));
                }
            } else {
                violations.push(CoringViolation::EpsNotBimoduleMap);
            }
        }
        _ => violations.push(CoringViolation::NotFirm),
    }
    violations.dedup();
    CoringReport { violations }
}

/// `C = A` with `Δ = d_A` and `ε = id`.
pub fn trivial_coring(a: &Arc<Algebra>) -> Result<Coring, CoringError> {
    let w = is_firm_ring(a).ok_or(CoringError::NotFirm)?;
    let carrier = Bimodule::regular(a.clone());
    Coring::new(carrier, w.d, Mat::identity(a.field(), a.dim()))
}

/// A group-like element `g` of a coring.
#[derive(Clone, Debug)]
pub struct Grouplike {
    pub coring: Coring,
    pub g: Vec<Scalar>,
}

/// The Sweedler coring `A ⊗_B A` of `iota: B -> A`, with its group-like `1 ⊗ 1`.
pub fn sweedler_coring(iota: &RingHom) -> Result<(Coring, Grouplike), CoringError> {
    let a = iota.target.clone();
    let f = a.field();
    let u = a.unit().ok_or(RingError::UnitRequired)?.to_vec();
    let reg = Bimodule::regular(a.clone());
    let m = reg.restrict_right(iota);
    let n = reg.restrict_left(iota);
    let carrier = tensor_over(&m, &n)?;
    let cc = tensor_over(&carrier, &carrier)?;
    let da = a.dim();
    let ucol = Mat::column_vector(f, &u);
    let ida = Mat::identity(f, da);
    // a ⊗ a' ↦ (a ⊗ 1) ⊗ (1 ⊗ a') on the flat factors
    let flat = ida.kron(&ucol).kron(&ucol.kron(&ida));
    let section = carrier.tensor_info().unwrap().section().clone();
    let delta = proj_from_leaves(&cc, &[&m, &n]).mul(&flat).mul(&section);
    let mut mult_cols = Vec::with_capacity(da * da);
    for i in 0..da {
        for j in 0..da {
            mult_cols.push(a.mul_vec(&a.basis_vector(i), &a.basis_vector(j)));
        }
    }
    let eps = Mat::from_columns(f, da, &mult_cols).mul(&section);
    let g = carrier.tensor_info().unwrap().projection().mul_vec(&ucol.kron(&ucol).column(0));
    let coring = Coring::new(carrier, delta, eps)?;
    Ok((coring.clone(), Grouplike { coring, g }))
}

/// `Σ* = Hom_A(Σ, A)` as an `(A, B)`-bimodule.
pub fn dual_module(sigma: &Bimodule) -> crate::bimod::HomSpace {
    hom_right(sigma, &Bimodule::regular(sigma.right().clone()))
}

/// The comatrix coring `Σ* ⊗_B Σ` of a finitely generated projective `Σ_A`.
pub fn comatrix_coring(sigma: &Bimodule, db: &DualBasis) -> Result<Coring, CoringError> {
    let f = sigma.field();
    let dual = dual_module(sigma);
    let star = dual.module.clone();
    let carrier = tensor_over(&star, sigma)?;
    let cc = tensor_over(&carrier, &carrier)?;
    let (dh, ds) = (star.dim(), sigma.dim());
    let star_coords: Vec<Vec<Scalar>> = db
        .functionals
        .iter()
        .map(|phi| dual.coords_of(phi).expect("dual basis functionals are A-linear"))
        .collect();
    // (φ, u) ↦ Σ_i φ ⊗ e_i ⊗ e_i* ⊗ u on the four flat factors
    let flat_dim = dh * ds * dh * ds;
    let mut cols = Vec::with_capacity(dh * ds);
    for h in 0..dh {
        for u in 0..ds {
            let mut v = vec![f.zero(); flat_dim];
            for (e, phi) in db.elements.iter().zip(&star_coords) {
                for (s, es) in e.iter().enumerate() {
                    if es.is_zero() {
                        continue;
                    }
                    for (h2, ph) in phi.iter().enumerate() {
                        if ph.is_zero() {
                            continue;
                        }
                        let idx = ((h * ds + s) * dh + h2) * ds + u;
                        v[idx] = f.add(&v[idx], &f.mul(es, ph));
                    }
                }
            }
            cols.push(v);
        }
    }
    let flat = Mat::from_columns(f, flat_dim, &cols);
    let section = carrier.tensor_info().unwrap().section().clone();
    let delta = proj_from_leaves(&cc, &[&star, sigma]).mul(&flat).mul(&section);
    let eps = dual.evaluation_flat().mul(&section);
    Coring::new(carrier, delta, eps)
}

/// The coaction `u ↦ Σ_i e_i ⊗ (e_i* ⊗ u)` of `Σ` over its comatrix coring.
pub fn comatrix_coaction(sigma: &Bimodule, db: &DualBasis, c: &Coring) -> Mat {
    let f = sigma.field();
    let dual = dual_module(sigma);
    let star = c.carrier().tensor_info().expect("comatrix carrier").left.clone();
    let sc = tensor_over(sigma, c.carrier()).expect("same base");
    let (dh, ds) = (star.dim(), sigma.dim());
    let flat_dim = ds * dh * ds;
    let mut cols = Vec::with_capacity(ds);
    for u in 0..ds {
        let mut v = vec![f.zero(); flat_dim];
        for (e, phi) in db.elements.iter().zip(&db.functionals) {
            let ph = dual.coords_of(phi).expect("dual basis functionals are A-linear");
            for (s, es) in e.iter().enumerate() {
                for (h, c) in ph.iter().enumerate() {
                    let idx = (s * dh + h) * ds + u;
                    v[idx] = f.add(&v[idx], &f.mul(es, c));
                }
            }
        }
        cols.push(v);
    }
    proj_from_leaves(&sc, &[sigma, &star]).mul(&Mat::from_columns(f, flat_dim, &cols))
}

/// `Δ(g) = g ⊗ g` and `ε(g) = 1`.
pub fn is_grouplike(c: &Coring, g: &[Scalar]) -> Result<bool, RingError> {
    let u = c.base().unit().ok_or(RingError::UnitRequired)?;
    if c.eps().mul_vec(g) != u {
        return Ok(false);
    }
    let f = c.base().field();
    let gcol = Mat::column_vector(f, g);
    let gg = c.cc().tensor_info().unwrap().projection().mul_vec(&gcol.kron(&gcol).column(0));
    Ok(c.delta().mul_vec(g) == gg)
}

/// `Δ' f = (f ⊗ f) Δ` and `ε' f = ε`.
pub fn check_coring_morphism(f: &Mat, src: &Coring, dst: &Coring) -> bool {
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return false;
    }
    if !src.carrier().is_bimodule_map(dst.carrier(), f) {
        return false;
    }
    let Ok(ff) = induced_map(f, f, src.cc(), dst.cc()) else { return false };
    dst.delta().mul(f) == ff.mul(src.delta()) && dst.eps().mul(f) == *src.eps()
}
