//! Right and left comodules over a coring, comodule homs, endomorphism rings
//! and cotensor products.

use std::sync::Arc;

use crate::bimod::{
    hom_right, induced_map, is_firm_left_module, is_firm_module, rebracket, tensor_over, Bimodule,
    HomSpace,
};
use crate::corings::{differing_columns, Coring, CoringError, Grouplike};
use crate::exactla::{kernel, Mat, Scalar, Subspace};
use crate::rings::{Algebra, RingError, RingHom};

/// A right `C`-comodule `(X, ρ)` with `ρ: X -> X ⊗_A C`.
#[derive(Clone, Debug)]
pub struct Comodule {
    coring: Arc<Coring>,
    carrier: Bimodule,
    xc: Bimodule,
    rho: Mat,
}

impl Comodule {
    pub fn new(coring: Arc<Coring>, carrier: Bimodule, rho: Mat) -> Result<Self, CoringError> {
        let xc = tensor_over(&carrier, coring.carrier())?;
        if rho.rows() != xc.dim() || rho.cols() != carrier.dim() {
            return Err(CoringError::Shape(format!(
                "coaction is {}x{}, expected {}x{}",
                rho.rows(),
                rho.cols(),
                xc.dim(),
                carrier.dim()
            )));
        }
        Ok(Comodule { coring, carrier, xc, rho })
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }
    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
    /// `X ⊗_A C`.
    pub fn xc(&self) -> &Bimodule {
        &self.xc
    }
    pub fn rho(&self) -> &Mat {
        &self.rho
    }

    /// The same coaction on a carrier with the same right action (for example
    /// after installing a left action).
    pub fn with_carrier(&self, carrier: Bimodule) -> Result<Comodule, CoringError> {
        if carrier.right_acts() != self.carrier.right_acts() {
            return Err(CoringError::Shape("replacement carrier has a different right action".into()));
        }
        Comodule::new(self.coring.clone(), carrier, self.rho.clone())
    }

    /// Forgets any left action on the carrier.
    pub fn forget_left(&self) -> Comodule {
        self.with_carrier(self.carrier.forget_left()).expect("right action unchanged")
    }

    /// `ρ' f = (f ⊗ C) ρ`.
    pub fn is_comodule_map(&self, target: &Comodule, f: &Mat) -> bool {
        if f.rows() != target.dim() || f.cols() != self.dim() {
            return false;
        }
        if !self.carrier.is_right_linear(&target.carrier, f) {
            return false;
        }
        let id = self.coring.carrier().identity();
        match induced_map(f, &id, &self.xc, &target.xc) {
            Ok(fc) => target.rho.mul(f) == fc.mul(&self.rho),
            Err(_) => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComoduleViolation {
    NotRightLinear,
    NotLeftLinear,
    NotFirm,
    Coassociativity(Vec<usize>),
    Counit(Vec<usize>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComoduleReport {
    pub violations: Vec<ComoduleViolation>,
}

impl ComoduleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, labels: &[String]) -> Vec<String> {
        let names = |cols: &[usize]| cols.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>().join(", ");
        self.violations
            .iter()
            .map(|v| match v {
                ComoduleViolation::NotRightLinear => "coaction is not right A-linear".into(),
                ComoduleViolation::NotLeftLinear => "coaction is not left linear".into(),
                ComoduleViolation::NotFirm => "carrier is not firm".into(),
                ComoduleViolation::Coassociativity(c) => format!("coassociativity fails at {}", names(c)),
                ComoduleViolation::Counit(c) => format!("counit law fails at {}", names(c)),
            })
            .collect()
    }
}

/// Coassociativity and the counit law, localized at basis vectors of `X`.
/// Left linearity is included, so a bicomodule is checked in full.
pub fn check_comodule(x: &Comodule) -> ComoduleReport {
    let mut violations = Vec::new();
    let c = x.coring();
    let car = x.carrier();
    if !car.is_right_linear(x.xc(), x.rho()) {
        violations.push(ComoduleViolation::NotRightLinear);
    } else if !car.is_bimodule_map(x.xc(), x.rho()) {
        violations.push(ComoduleViolation::NotLeftLinear);
    }
    let idx = car.identity();
    let idc = c.carrier().identity();
    let xc_c = tensor_over(x.xc(), c.carrier()).expect("same base");
    let x_cc = tensor_over(car, c.cc()).expect("same base");
    match (induced_map(x.rho(), &idc, x.xc(), &xc_c), induced_map(&idx, c.delta(), x.xc(), &x_cc)) {
        (Ok(rc), Ok(xd)) => {
            let lhs = rc.mul(x.rho());
            let rhs = rebracket(&x_cc, &xc_c).mul(&xd.mul(x.rho()));
            let bad = differing_columns(&lhs, &rhs);
            if !bad.is_empty() {
                violations.push(ComoduleViolation::Coassociativity(bad));
            }
        }
        _ => {
            if !violations.contains(&ComoduleViolation::NotRightLinear) {
                violations.push(ComoduleViolation::NotRightLinear);
            }
        }
    }
    match is_firm_module(car) {
        Some(firm) => {
            if let Ok(xe) = induced_map(&idx, c.eps(), x.xc(), &firm.tensor) {
                let bad = differing_columns(&xe.mul(x.rho()), &firm.d);
                if !bad.is_empty() {
                    violations.push(ComoduleViolation::Counit(bad));
                }
            }
        }
        None => violations.push(ComoduleViolation::NotFirm),
    }
    ComoduleReport { violations }
}

/// `(A, ρ)` with `ρ(a) = 1 ⊗ g·a` in `A ⊗_A C`.
pub fn comodule_from_grouplike(gl: &Grouplike) -> Result<Comodule, RingError> {
    let c = &gl.coring;
    let a = c.base();
    let f = a.field();
    let u = a.unit().ok_or(RingError::UnitRequired)?;
    let carrier = Bimodule::right_regular(a.clone());
    let xc = tensor_over(&carrier, c.carrier()).expect("same base");
    let p = xc.tensor_info().unwrap().projection();
    let ucol = Mat::column_vector(f, u);
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|i| {
            let ga = c.carrier().right_act(i).mul_vec(&gl.g);
            p.mul_vec(&ucol.kron(&Mat::column_vector(f, &ga)).column(0))
        })
        .collect();
    let rho = Mat::from_columns(f, xc.dim(), &cols);
    Ok(Comodule::new(Arc::new(c.clone()), carrier, rho).expect("shapes agree"))
}

/// The cofree comodule `(X ⊗_A C, X ⊗ Δ)`.
pub fn cofree(coring: &Arc<Coring>, x: &Bimodule) -> Comodule {
    let gx = tensor_over(x, coring.carrier()).expect("X must be a right A-module");
    let x_cc = tensor_over(x, coring.cc()).expect("same base");
    let gx_c = tensor_over(&gx, coring.carrier()).expect("same base");
    let xd = induced_map(&x.identity(), coring.delta(), &gx, &x_cc).expect("Δ is left A-linear");
    let rho = rebracket(&x_cc, &gx_c).mul(&xd);
    Comodule::new(coring.clone(), gx, rho).expect("shapes agree")
}

/// The coring as a right comodule over itself.
pub fn regular_comodule(coring: &Arc<Coring>) -> Comodule {
    Comodule::new(coring.clone(), coring.carrier().clone(), coring.delta().clone()).expect("shapes agree")
}

/// `{a ∈ A : a·g = g·a}`.
pub fn coinvariants(gl: &Grouplike) -> Result<Subspace, RingError> {
    let c = &gl.coring;
    let a = c.base();
    a.unit().ok_or(RingError::UnitRequired)?;
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|i| {
            let ag = c.carrier().left_act(i).mul_vec(&gl.g);
            let ga = c.carrier().right_act(i).mul_vec(&gl.g);
            ag.iter().zip(&ga).map(|(x, y)| a.field().sub(x, y)).collect()
        })
        .collect();
    Ok(kernel(&Mat::from_columns(a.field(), c.dim(), &cols)))
}

/// `Hom_C(Σ, X)` as a subspace of `Hom_A(Σ, X)`.
#[derive(Clone, Debug)]
pub struct ComodHom {
    pub hom: HomSpace,
    /// The equalizer, in coordinates of `hom`.
    pub space: Subspace,
    /// The equalizer as a module; the right action comes from the left action on `Σ`.
    pub module: Bimodule,
    /// `module -> hom.module`.
    pub incl: Mat,
}

impl ComodHom {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The map `Σ -> X` of a basis vector of the equalizer.
    pub fn basis_map(&self, i: usize) -> Mat {
        self.hom.map_of(&self.incl.column(i))
    }
}

pub fn hom_comodules(sigma: &Comodule, x: &Comodule) -> ComodHom {
    let hom = hom_right(sigma.carrier(), x.carrier());
    let f = sigma.carrier().field();
    let idc = sigma.coring().carrier().identity();
    let cols: Vec<Vec<Scalar>> = (0..hom.dim())
        .map(|h| {
            let fh = hom.basis_map(h);
            let a = x.rho().mul(&fh);
            let b = induced_map(&fh, &idc, sigma.xc(), x.xc()).expect("A-linear maps descend").mul(sigma.rho());
            a.sub(&b).vectorize()
        })
        .collect();
    let rows = x.xc().dim() * sigma.dim();
    let space = if hom.dim() == 0 {
        Subspace::zero(f, 0)
    } else {
        kernel(&Mat::from_columns(f, rows, &cols))
    };
    let (module, incl) = hom.module.submodule(&space).expect("comodule maps form a submodule");
    ComodHom { hom, space, module, incl }
}

/// `T = End_C(Σ)` with its basis realized as matrices on `Σ`.
#[derive(Clone, Debug)]
pub struct EndRing {
    pub algebra: Arc<Algebra>,
    pub maps: Vec<Mat>,
    /// `B -> T`, `b ↦ (u ↦ b·u)`.
    pub lambda: RingHom,
    pub homs: ComodHom,
}

pub fn end_ring(sigma: &Comodule) -> EndRing {
    let homs = hom_comodules(sigma, sigma);
    let f = sigma.carrier().field();
    let n = homs.dim();
    let maps: Vec<Mat> = (0..n).map(|i| homs.basis_map(i)).collect();
    let coords = |m: &Mat| -> Vec<Scalar> {
        let h = homs.hom.coords_of(m).expect("composite of comodule maps");
        homs.space.coords(&h).expect("composite of comodule maps")
    };
    let mut consts = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            consts.extend(coords(&maps[i].mul(&maps[j])));
        }
    }
    let unit = (n > 0).then(|| coords(&sigma.carrier().identity()));
    let labels = (0..n).map(|i| format!("t{i}")).collect();
    let algebra = Arc::new(Algebra::new(f, n, consts, unit, Some(labels)));
    let b = sigma.carrier().left().clone();
    let cols: Vec<Vec<Scalar>> = sigma.carrier().left_acts().iter().map(&coords).collect();
    let lambda = RingHom::new(b.clone(), algebra.clone(), Mat::from_columns(f, n, &cols), b.is_unital());
    EndRing { algebra, maps, lambda, homs }
}

impl EndRing {
    /// `Σ` as a `(T, A)`-bimodule.
    pub fn sigma_over_t(&self, sigma: &Bimodule) -> Bimodule {
        sigma.with_left_action(self.algebra.clone(), self.maps.clone())
    }
}

/// A left `C`-comodule `(N, λ)` with `λ: N -> C ⊗_A N`.
#[derive(Clone, Debug)]
pub struct LeftComodule {
    coring: Arc<Coring>,
    carrier: Bimodule,
    cx: Bimodule,
    lambda: Mat,
}

impl LeftComodule {
    pub fn new(coring: Arc<Coring>, carrier: Bimodule, lambda: Mat) -> Result<Self, CoringError> {
        let cx = tensor_over(coring.carrier(), &carrier)?;
        if lambda.rows() != cx.dim() || lambda.cols() != carrier.dim() {
            return Err(CoringError::Shape("left coaction has the wrong shape".into()));
        }
        Ok(LeftComodule { coring, carrier, cx, lambda })
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }
    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }
    pub fn cx(&self) -> &Bimodule {
        &self.cx
    }
    pub fn lambda(&self) -> &Mat {
        &self.lambda
    }
}

pub fn check_left_comodule(n: &LeftComodule) -> ComoduleReport {
    let mut violations = Vec::new();
    let c = n.coring();
    let car = n.carrier();
    if !car.is_bimodule_map(n.cx(), n.lambda()) {
        violations.push(ComoduleViolation::NotRightLinear);
    }
    let idn = car.identity();
    let idc = c.carrier().identity();
    let c_cx = tensor_over(c.carrier(), n.cx()).expect("same base");
    let cc_x = tensor_over(c.cc(), car).expect("same base");
    match (induced_map(&idc, n.lambda(), n.cx(), &c_cx), induced_map(c.delta(), &idn, n.cx(), &cc_x)) {
        (Ok(cl), Ok(dx)) => {
            let lhs = cl.mul(n.lambda());
            let rhs = rebracket(&cc_x, &c_cx).mul(&dx.mul(n.lambda()));
            let bad = differing_columns(&lhs, &rhs);
            if !bad.is_empty() {
                violations.push(ComoduleViolation::Coassociativity(bad));
            }
        }
        _ => violations.push(ComoduleViolation::NotRightLinear),
    }
    match is_firm_left_module(car) {
        Some(firm) => {
            if let Ok(ex) = induced_map(c.eps(), &idn, n.cx(), &firm.tensor) {
                let bad = differing_columns(&ex.mul(n.lambda()), &firm.d);
                if !bad.is_empty() {
                    violations.push(ComoduleViolation::Counit(bad));
                }
            }
        }
        None => violations.push(ComoduleViolation::NotFirm),
    }
    ComoduleReport { violations }
}

/// `X □_C N`: the equalizer of `X ⊗ λ_N` and `ρ_X ⊗ N`, with its inclusion
/// into `X ⊗_A N`.
pub fn cotensor(x: &Comodule, n: &LeftComodule) -> (Bimodule, Mat) {
    let xn = tensor_over(x.carrier(), n.carrier()).expect("same base");
    let x_cn = tensor_over(x.carrier(), n.cx()).expect("same base");
    let xc_n = tensor_over(x.xc(), n.carrier()).expect("same base");
    let left = induced_map(&x.carrier().identity(), n.lambda(), &xn, &x_cn).expect("λ is left A-linear");
    let right = induced_map(x.rho(), &n.carrier().identity(), &xn, &xc_n).expect("ρ is right A-linear");
    let diff = left.sub(&rebracket(&xc_n, &x_cn).mul(&right));
    xn.submodule(&kernel(&diff)).expect("equalizer of bimodule maps")
}
