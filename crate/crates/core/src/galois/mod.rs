//! Canonical maps, the ring `S = Σ ⊗_A Σ*`, the module `Σ† = Σ* ⊗_R R`,
//! the `ν` isomorphisms, and the theorem verifiers in [`verify`].

pub mod verify;

use std::sync::Arc;

use thiserror::Error;

use crate::bimod::{
    hom_right, induced_map, BimodError, is_fg_projective, is_firm_left_module, is_firm_module, lift_to_leaves,
    rebracket, tensor_over, Bimodule, DualBasis, HomSpace,
};
use crate::comod::{end_ring, Comodule, EndRing, LeftComodule};
use crate::comonadlab::{phi_from_beta, ComonadError, ComonadMorphism, Induced, RObject, Setting};
use crate::corings::{comatrix_coring, dual_module, Coring, CoringError};
use crate::exactla::{Mat, Scalar};
use crate::rings::{Algebra, RingError, RingHom};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("Σ is not finitely generated projective over A")]
    NotProjective,
    #[error("not firm: {0}")]
    NotFirm(String),
    #[error("{0}")]
    Ring(#[from] RingError),
    #[error("{0}")]
    Bimod(#[from] BimodError),
    #[error("{0}")]
    Comonad(#[from] ComonadError),
    #[error("{0}")]
    Coring(#[from] CoringError),
}

/// A `B`-`C`-bicomodule `Σ`, optionally with a ring map `ι: R -> Σ ⊗_A Σ*`.
#[derive(Clone, Debug)]
pub struct GaloisInstance {
    pub name: String,
    /// The carrier is a `(B, A)`-bimodule.
    pub sigma: Comodule,
    pub iota: Option<RingHom>,
}

impl GaloisInstance {
    pub fn new(name: impl Into<String>, sigma: Comodule, iota: Option<RingHom>) -> Self {
        GaloisInstance { name: name.into(), sigma, iota }
    }

    pub fn coring(&self) -> &Arc<Coring> {
        self.sigma.coring()
    }
    pub fn a(&self) -> &Arc<Algebra> {
        self.coring().base()
    }
    pub fn b(&self) -> &Arc<Algebra> {
        self.sigma.carrier().left()
    }

    pub fn setting(&self) -> Arc<Setting> {
        Arc::new(
            Setting::new(self.sigma.carrier().clone(), self.coring().clone())
                .expect("Σ is a right module over the base of C"),
        )
    }

    /// `can = Gϵ·βR` with `β` the coaction of `Σ`.
    pub fn can_morphism(&self) -> Result<ComonadMorphism, ComonadError> {
        phi_from_beta(&Induced::from_coaction(self.setting(), self.sigma.rho().clone()))
    }

    /// `T = End_C(Σ)` and the same bicomodule viewed over `T`.
    pub fn t_side(&self) -> (EndRing, GaloisInstance) {
        let t = end_ring(&self.sigma);
        let st = t.sigma_over_t(self.sigma.carrier());
        let sigma = self.sigma.with_carrier(st).expect("right action unchanged");
        (t, GaloisInstance::new(format!("{}/T", self.name), sigma, None))
    }

    pub fn dual_basis(&self) -> Option<DualBasis> {
        is_fg_projective(self.sigma.carrier())
    }
}

/// `can: Σ* ⊗_B Σ -> C`, `φ ⊗ u ↦ φ(u_0)u_1`, with its source.
#[derive(Clone, Debug)]
pub struct CanMap {
    pub source: Bimodule,
    pub matrix: Mat,
}

impl CanMap {
    pub fn is_iso(&self) -> bool {
        self.matrix.is_invertible()
    }
    pub fn kernel_dim(&self) -> usize {
        self.matrix.cols() - self.matrix.rank()
    }
}

/// Column `(v, c)` blocks of `ρ(e_u)` in the flat product `Σ ⊗_k C`.
fn flat_coaction(sigma: &Comodule) -> Mat {
    lift_to_leaves(sigma.xc(), &[sigma.carrier(), sigma.coring().carrier()]).mul(sigma.rho())
}

pub fn can_coring(inst: &GaloisInstance) -> Result<CanMap, GaloisError> {
    if !inst.b().is_unital() {
        return Err(RingError::UnitRequired.into());
    }
    inst.dual_basis().ok_or(GaloisError::NotProjective)?;
    let sigma = inst.sigma.carrier();
    let c = inst.coring().carrier();
    let f = sigma.field();
    let dual = dual_module(sigma);
    let source = tensor_over(&dual.module, sigma)?;
    let rho = flat_coaction(&inst.sigma);
    let (ds, dc) = (sigma.dim(), c.dim());
    let mut cols = Vec::with_capacity(dual.dim() * ds);
    for h in 0..dual.dim() {
        let fh = dual.basis_map(h);
        for u in 0..ds {
            let mut out = vec![f.zero(); dc];
            for v in 0..ds {
                let act = c.left_act_by(&fh.column(v));
                for k in 0..dc {
                    let coef = rho.get(v * dc + k, u);
                    if coef.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(act.column(k)) {
                        *o = f.add(o, &f.mul(coef, &x));
                    }
                }
            }
            cols.push(out);
        }
    }
    let matrix = Mat::from_columns(f, dc, &cols).mul(source.tensor_info().unwrap().section());
    Ok(CanMap { source, matrix })
}

/// `S = Σ ⊗_A Σ*` with `μ(x ⊗ φ ⊗ y ⊗ ψ) = x ⊗ φ(y)ψ`.
#[derive(Clone, Debug)]
pub struct SRing {
    pub sigma: Bimodule,
    pub dual: HomSpace,
    pub carrier: Bimodule,
    pub algebra: Arc<Algebra>,
    /// `x ⊗ φ ↦ (y ↦ xφ(y))` on each basis vector of `S`.
    pub to_end: Vec<Mat>,
    /// `y ⊗ ψ ↦ (φ ↦ φ(y)ψ)`: right action matrices on `Σ*`.
    pub to_end_dual: Vec<Mat>,
}

pub fn build_s_ring(sigma: &Bimodule) -> Result<SRing, GaloisError> {
    if !sigma.right().is_unital() {
        return Err(RingError::UnitRequired.into());
    }
    let f = sigma.field();
    let dual = dual_module(sigma);
    let star = dual.module.clone();
    let carrier = tensor_over(sigma, &star)?;
    let n = carrier.dim();
    let (ds, dh) = (sigma.dim(), star.dim());
    let section = carrier.tensor_info().unwrap().section().clone();
    let proj = carrier.tensor_info().unwrap().projection().clone();
    let maps: Vec<Mat> = (0..dh).map(|h| dual.basis_map(h)).collect();
    // left action on Σ* of φ_h(e_y)
    let lacts: Vec<Vec<Mat>> =
        maps.iter().map(|m| (0..ds).map(|y| star.left_act_by(&m.column(y))).collect()).collect();
    let lift = |j: usize| section.column(j);
    // v_j(h) = Σ_{y,ψ} σ_j[y,ψ] φ_h(e_y)·ψ
    let vj = |j: usize| -> Vec<Vec<Scalar>> {
        let sj = lift(j);
        (0..dh)
            .map(|h| {
                let mut out = vec![f.zero(); dh];
                for y in 0..ds {
                    for psi in 0..dh {
                        let c = &sj[y * dh + psi];
                        if c.is_zero() {
                            continue;
                        }
                        for (o, x) in out.iter_mut().zip(lacts[h][y].column(psi)) {
                            *o = f.add(o, &f.mul(c, &x));
                        }
                    }
                }
                out
            })
            .collect()
    };
    let vs: Vec<Vec<Vec<Scalar>>> = (0..n).map(vj).collect();
    let mut consts = Vec::with_capacity(n * n * n);
    for i in 0..n {
        let si = lift(i);
        for v in vs.iter() {
            let mut flat = vec![f.zero(); ds * dh];
            for x in 0..ds {
                for h in 0..dh {
                    let c = &si[x * dh + h];
                    if c.is_zero() {
                        continue;
                    }
                    for (k, val) in v[h].iter().enumerate() {
                        let idx = x * dh + k;
                        flat[idx] = f.add(&flat[idx], &f.mul(c, val));
                    }
                }
            }
            consts.extend(proj.mul_vec(&flat));
        }
    }
    // basis endomorphisms of the flat pairs
    let flat_end = |x: usize, h: usize| -> Mat {
        let cols: Vec<Vec<Scalar>> =
            (0..ds).map(|y| sigma.right_act_by(&maps[h].column(y)).column(x)).collect();
        Mat::from_columns(f, ds, &cols)
    };
    let flat_end_dual = |x: usize, h: usize| -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..dh).map(|psi| star.left_act_by(&maps[psi].column(x)).column(h)).collect();
        Mat::from_columns(f, dh, &cols)
    };
    let combine = |j: usize, g: &dyn Fn(usize, usize) -> Mat, size: usize| -> Mat {
        let sj = lift(j);
        let mut acc = Mat::zeros(f, size, size);
        for x in 0..ds {
            for h in 0..dh {
                let c = &sj[x * dh + h];
                if !c.is_zero() {
                    acc = acc.add(&g(x, h).scale(c));
                }
            }
        }
        acc
    };
    let to_end: Vec<Mat> = (0..n).map(|j| combine(j, &flat_end, ds)).collect();
    let to_end_dual: Vec<Mat> = (0..n).map(|j| combine(j, &flat_end_dual, dh)).collect();
    let mut algebra = Algebra::new(f, n, consts, None, Some(carrier.labels().to_vec()));
    if let Some(db) = is_fg_projective(sigma) {
        let u = dual_basis_element(&carrier, &dual, &db, &|i| db.elements[i].clone());
        let candidate = Algebra::new(f, n, algebra.structure_constants().to_vec(), Some(u.clone()), Some(carrier.labels().to_vec()));
        if crate::rings::check_algebra(&candidate).is_valid() {
            algebra = candidate;
        }
    }
    Ok(SRing { sigma: sigma.clone(), dual, carrier, algebra: Arc::new(algebra), to_end, to_end_dual })
}

/// `Σ_i π(x_i ⊗ e_i*)` for the elements `x_i` chosen by `pick`.
fn dual_basis_element(
    carrier: &Bimodule,
    dual: &HomSpace,
    db: &DualBasis,
    pick: &dyn Fn(usize) -> Vec<Scalar>,
) -> Vec<Scalar> {
    let f = carrier.field();
    let mut flat = vec![f.zero(); carrier.tensor_info().unwrap().projection().cols()];
    let dh = dual.dim();
    for (i, phi) in db.functionals.iter().enumerate() {
        let ph = dual.coords_of(phi).expect("dual basis functionals are A-linear");
        for (x, xv) in pick(i).iter().enumerate() {
            for (h, hv) in ph.iter().enumerate() {
                let idx = x * dh + h;
                flat[idx] = f.add(&flat[idx], &f.mul(xv, hv));
            }
        }
    }
    carrier.tensor_info().unwrap().projection().mul_vec(&flat)
}

impl SRing {
    /// `to_end` and `to_end_dual` respect products (the latter as a right action).
    pub fn check_homomorphisms(&self) -> bool {
        let a = &self.algebra;
        let n = a.dim();
        let combo = |maps: &[Mat], v: &[Scalar]| -> Mat {
            let size = maps.first().map(Mat::rows).unwrap_or(0);
            let mut acc = Mat::zeros(a.field(), size, size);
            for (m, c) in maps.iter().zip(v) {
                if !c.is_zero() {
                    acc = acc.add(&m.scale(c));
                }
            }
            acc
        };
        for i in 0..n {
            for j in 0..n {
                let p = a.mul_vec(&a.basis_vector(i), &a.basis_vector(j));
                if combo(&self.to_end, &p) != self.to_end[i].mul(&self.to_end[j]) {
                    return false;
                }
                if combo(&self.to_end_dual, &p) != self.to_end_dual[j].mul(&self.to_end_dual[i]) {
                    return false;
                }
            }
        }
        true
    }

    fn combo(&self, maps: &[Mat], v: &[Scalar]) -> Mat {
        let size = maps.first().map(Mat::rows).unwrap_or(0);
        let mut acc = Mat::zeros(self.algebra.field(), size, size);
        for (m, c) in maps.iter().zip(v) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }
}

/// `ι: B -> S`, `b ↦ Σ_i b·e_i ⊗ e_i*`, which recovers the given left action.
pub fn iota_from_left_action(s: &SRing, db: &DualBasis) -> RingHom {
    let b = s.sigma.left().clone();
    let f = s.sigma.field();
    let cols: Vec<Vec<Scalar>> = (0..b.dim())
        .map(|k| {
            let act = s.sigma.left_act(k);
            dual_basis_element(&s.carrier, &s.dual, db, &|i| act.mul_vec(&db.elements[i]))
        })
        .collect();
    RingHom::new(b.clone(), s.algebra.clone(), Mat::from_columns(f, s.algebra.dim(), &cols), b.is_unital())
}

/// `Σ` as an `(R, A)`-bimodule and `Σ*` as an `(A, R)`-bimodule through `ι`.
pub fn install_iota(s: &SRing, iota: &RingHom) -> (Bimodule, Bimodule) {
    let r = iota.source.clone();
    let left: Vec<Mat> = (0..r.dim()).map(|k| s.combo(&s.to_end, &iota.matrix.column(k))).collect();
    let right: Vec<Mat> = (0..r.dim()).map(|k| s.combo(&s.to_end_dual, &iota.matrix.column(k))).collect();
    (s.sigma.with_left_action(r.clone(), left), s.dual.module.with_right_action(r, right))
}

/// `Σ† = Σ* ⊗_R R` with the data needed for `ν`, `η` and `can†`.
#[derive(Clone, Debug)]
pub struct SigmaDagger {
    pub s: SRing,
    pub iota: RingHom,
    pub sigma_r: Bimodule,
    pub star_r: Bimodule,
    pub r_reg: Bimodule,
    pub carrier: Bimodule,
    /// `R ⊗_R R` and the inverse of its multiplication.
    rr: Bimodule,
    d_r: Mat,
}

pub fn build_sigma_dagger(sigma: &Bimodule, iota: &RingHom) -> Result<SigmaDagger, GaloisError> {
    let s = build_s_ring(sigma)?;
    let iota = RingHom::new(iota.source.clone(), s.algebra.clone(), iota.matrix.clone(), iota.unital);
    let (sigma_r, star_r) = install_iota(&s, &iota);
    let r = iota.source.clone();
    let r_reg = Bimodule::regular(r.clone());
    let firm = is_firm_module(&r_reg).ok_or_else(|| GaloisError::NotFirm("R".into()))?;
    is_firm_left_module(&sigma_r).ok_or_else(|| GaloisError::NotFirm("Σ over R".into()))?;
    let carrier = tensor_over(&star_r, &r_reg)?;
    Ok(SigmaDagger { s, iota, sigma_r, star_r, r_reg, carrier, rr: firm.tensor, d_r: firm.d })
}

impl SigmaDagger {
    pub fn r(&self) -> &Arc<Algebra> {
        &self.iota.source
    }

    /// Lift of `ι(e_k)` to the flat product `Σ ⊗_k Σ*`.
    fn iota_flat(&self, k: usize) -> Vec<Scalar> {
        let v = self.iota.matrix.column(k);
        self.s.carrier.tensor_info().unwrap().section().mul_vec(&v)
    }

    /// `R -> R ⊗_k R`, a lift of `d_R`.
    fn d_r_flat(&self) -> Mat {
        self.rr.tensor_info().unwrap().section().mul(&self.d_r)
    }

    /// `(n, s, r') ↦ n ⊗ ι(s) ⊗ r'` from `N ⊗_k R ⊗_k R` into the leaves
    /// `[N, Σ, Σ*, R]`.
    fn insert_iota(&self, dn: usize) -> Mat {
        let f = self.sigma_r.field();
        let (ds, dh, dr) = (self.sigma_r.dim(), self.star_r.dim(), self.r().dim());
        let rows = dn * ds * dh * dr;
        let mut cols = Vec::with_capacity(dn * dr * dr);
        let lifts: Vec<Vec<Scalar>> = (0..dr).map(|k| self.iota_flat(k)).collect();
        for n in 0..dn {
            for s in 0..dr {
                for r2 in 0..dr {
                    let mut v = vec![f.zero(); rows];
                    for (xh, c) in lifts[s].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (x, h) = (xh / dh, xh % dh);
                        v[((n * ds + x) * dh + h) * dr + r2] = c.clone();
                    }
                    cols.push(v);
                }
            }
        }
        Mat::from_columns(f, rows, &cols)
    }

    /// `η_N: N -> (N ⊗_R Σ) ⊗_A Σ†`, `n ↦ n^r ⊗ e_s ⊗ e_s* ⊗ r^s`.
    pub fn eta(&self, n: &Bimodule) -> Result<Mat, GaloisError> {
        let firm = is_firm_module(n).ok_or_else(|| GaloisError::NotFirm("N over R".into()))?;
        let ns = tensor_over(n, &self.sigma_r)?;
        let target = tensor_over(&ns, &self.carrier)?;
        let lift_n = firm.tensor.tensor_info().unwrap().section().mul(&firm.d);
        let split = n.identity().kron(&self.d_r_flat()).mul(&lift_n);
        // explicit one-level projections: `n` may itself be `Σ†`
        let dagger_p = self.carrier.tensor_info().unwrap().projection();
        let proj = target.tensor_info().unwrap().projection().mul(&ns.tensor_info().unwrap().projection().kron(dagger_p));
        Ok(proj.mul(&self.insert_iota(n.dim())).mul(&split))
    }

    /// `ν: Hom_A(Σ, X) ⊗_R R -> X ⊗_A Σ†`, `h ⊗ r ↦ h(e_s) ⊗ e_s* ⊗ r^s`.
    pub fn nu_firm(&self, x: &Bimodule) -> Result<Mat, GaloisError> {
        let hom = hom_right(&self.sigma_r, x);
        let obj = tensor_over(&hom.module, &self.r_reg)?;
        let rx = RObject { hom, obj };
        let f = x.field();
        let target = tensor_over(x, &self.carrier)?;
        let (dx, ds, dh, dr) = (x.dim(), self.sigma_r.dim(), self.star_r.dim(), self.r().dim());
        // (h, x', φ, r') ↦ h(e_x') ⊗ φ ⊗ r'
        let mut cols = Vec::with_capacity(rx.hom.dim() * ds * dh * dr);
        for h in 0..rx.hom.dim() {
            let fh = rx.hom.basis_map(h);
            for s in 0..ds {
                let img = fh.column(s);
                for p in 0..dh {
                    for r2 in 0..dr {
                        let mut v = vec![f.zero(); dx * dh * dr];
                        for (xi, c) in img.iter().enumerate() {
                            v[(xi * dh + p) * dr + r2] = c.clone();
                        }
                        cols.push(v);
                    }
                }
            }
        }
        let eval = Mat::from_columns(f, dx * dh * dr, &cols);
        let split = rx.hom.module.identity().kron(&self.d_r_flat()).mul(&lift_to_leaves(&rx.obj, &[]));
        let ins = self.insert_iota(rx.hom.dim());
        let proj = target.tensor_info().unwrap().projection().mul(&x.identity().kron(self.carrier.tensor_info().unwrap().projection()));
        Ok(proj.mul(&eval).mul(&ins).mul(&split))
    }

    /// `can†: Σ† ⊗_R Σ -> C`, `φ ⊗ r ⊗ u ↦ φ(r·u_0)u_1`.
    pub fn can_dagger(&self, sigma: &Comodule) -> Result<CanMap, GaloisError> {
        let sigma = sigma.with_carrier(self.sigma_r.clone())?;
        let c = sigma.coring().carrier();
        let f = c.field();
        let source = tensor_over(&self.carrier, &self.sigma_r)?;
        let rho = flat_coaction(&sigma);
        let (ds, dc, dr) = (self.sigma_r.dim(), c.dim(), self.r().dim());
        let mut cols = Vec::new();
        for h in 0..self.s.dual.dim() {
            let fh = self.s.dual.basis_map(h);
            for r in 0..dr {
                let fr = fh.mul(self.sigma_r.left_act(r));
                for u in 0..ds {
                    let mut out = vec![f.zero(); dc];
                    for v in 0..ds {
                        let act = c.left_act_by(&fr.column(v));
                        for k in 0..dc {
                            let coef = rho.get(v * dc + k, u);
                            if coef.is_zero() {
                                continue;
                            }
                            for (o, x) in out.iter_mut().zip(act.column(k)) {
                                *o = f.add(o, &f.mul(coef, &x));
                            }
                        }
                    }
                    cols.push(out);
                }
            }
        }
        let lift = lift_to_leaves(&source, &[&self.star_r, &self.r_reg, &self.sigma_r]);
        Ok(CanMap { matrix: Mat::from_columns(f, dc, &cols).mul(&lift), source })
    }

    /// `α_{Σ†} = (can† ⊗ Σ†)·η_{Σ†}`, making `Σ†` a left `C`-comodule.
    pub fn left_structure(&self, sigma: &Comodule) -> Result<LeftComodule, GaloisError> {
        let can = self.can_dagger(sigma)?;
        let eta = self.eta(&self.carrier)?;
        let ns = tensor_over(&self.carrier, &self.sigma_r)?;
        let src = tensor_over(&ns, &self.carrier)?;
        let c = sigma.coring();
        let dst = tensor_over(c.carrier(), &self.carrier)?;
        let alpha = induced_map(&can.matrix, &self.carrier.identity(), &src, &dst)?.mul(&eta);
        Ok(LeftComodule::new(c.clone(), self.carrier.clone(), alpha)?)
    }

    /// The comonad morphism `L_R R_R -> G` for `Σ` viewed over `R`.
    pub fn can_morphism(&self, sigma: &Comodule) -> Result<ComonadMorphism, GaloisError> {
        let setting = Arc::new(Setting::new(self.sigma_r.clone(), sigma.coring().clone())?);
        Ok(phi_from_beta(&Induced::from_coaction(setting, sigma.rho().clone()))?)
    }
}

/// `ν: Hom_A(Σ, X) ⊗_B B -> X ⊗_A Σ*`, `f ⊗ b ↦ Σ_i f(b·e_i) ⊗ e_i*`.
pub fn nu_finite(setting: &Setting, db: &DualBasis, x: &Bimodule) -> Result<Mat, GaloisError> {
    let sigma = setting.sigma();
    let dual = dual_module(sigma);
    let rx = setting.r(x);
    let target = tensor_over(x, &dual.module)?;
    let f = x.field();
    let (dx, dh) = (x.dim(), dual.dim());
    let star_coords: Vec<Vec<Scalar>> =
        db.functionals.iter().map(|p| dual.coords_of(p).expect("A-linear")).collect();
    let mut cols = Vec::new();
    for h in 0..rx.hom.dim() {
        let fh = rx.hom.basis_map(h);
        for b in 0..setting.b().dim() {
            let fb = fh.mul(sigma.left_act(b));
            let mut v = vec![f.zero(); dx * dh];
            for (e, ph) in db.elements.iter().zip(&star_coords) {
                let img = fb.mul_vec(e);
                for (xi, xc) in img.iter().enumerate() {
                    for (p, pc) in ph.iter().enumerate() {
                        let idx = xi * dh + p;
                        v[idx] = f.add(&v[idx], &f.mul(xc, pc));
                    }
                }
            }
            cols.push(v);
        }
    }
    let flat = Mat::from_columns(f, dx * dh, &cols);
    Ok(target.tensor_info().unwrap().projection().mul(&flat).mul(&lift_to_leaves(&rx.obj, &[])))
}

/// The comatrix coring `Σ† ⊗_R Σ` with `Δ† = η_{Σ†} ⊗ Σ` and `ε(φ ⊗ r ⊗ u) = φ(ru)`.
pub fn comatrix_coring_firm(d: &SigmaDagger) -> Result<Coring, CoringError> {
    let carrier = tensor_over(&d.carrier, &d.sigma_r)?;
    let eta = d.eta(&d.carrier).map_err(|_| CoringError::NotFirm)?;
    let ns = tensor_over(&d.carrier, &d.sigma_r)?;
    let nsn = tensor_over(&ns, &d.carrier)?;
    let nsns = tensor_over(&nsn, &d.sigma_r)?;
    let cc = tensor_over(&carrier, &carrier)?;
    let lifted = induced_map(&eta, &d.sigma_r.identity(), &carrier, &nsns)?;
    let delta = rebracket(&nsns, &cc).mul(&lifted);
    let f = carrier.field();
    let mut cols = Vec::new();
    for h in 0..d.s.dual.dim() {
        let fh = d.s.dual.basis_map(h);
        for r in 0..d.r().dim() {
            let fr = fh.mul(d.sigma_r.left_act(r));
            for u in 0..d.sigma_r.dim() {
                cols.push(fr.column(u));
            }
        }
    }
    let flat = Mat::from_columns(f, d.sigma_r.right().dim(), &cols);
    let eps = flat.mul(&lift_to_leaves(&carrier, &[&d.star_r, &d.r_reg, &d.sigma_r]));
    Coring::new(carrier, delta, eps)
}

/// The comatrix coring of a finitely generated projective instance.
pub fn comatrix_of(inst: &GaloisInstance) -> Result<Coring, GaloisError> {
    let db = inst.dual_basis().ok_or(GaloisError::NotProjective)?;
    Ok(comatrix_coring(inst.sigma.carrier(), &db)?)
}

#[cfg(test)]
mod tests;
