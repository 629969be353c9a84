//! The adjunction `L = − ⊗_B Σ ⊣ R = Hom_A(Σ, −) ⊗_B B` against the comonad
//! `G = − ⊗_A C`: comonad morphisms, their induced and co-induced
//! representations, the comparison functor and its adjoint.
//!
//! Natural transformations are evaluated object by object. All components are
//! matrices in the deterministic coordinates of the tensor and Hom
//! constructions, so components computed along different routes compare
//! entrywise.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bimod::{
    hom_right, induced_map, is_firm_module, lift_to_leaves, rebracket, tensor_over, Bimodule,
    HomSpace,
};
use crate::comod::{cofree, regular_comodule, Comodule};
use crate::corings::Coring;
use crate::exactla::{kernel, Mat, Scalar};
use crate::rings::{simple_right_modules, Algebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComonadError {
    #[error("module is not firm: {0}")]
    NotFirm(String),
    #[error("algebras do not match: {0}")]
    Mismatch(String),
    #[error("structure diagram fails at probe {0}")]
    DiagramFailure(String),
    #[error("unit does not factor through the equalizer")]
    FactorizationFailure,
}

/// `R(X) = Hom_A(Σ, X) ⊗_B B` together with its Hom factor.
#[derive(Clone, Debug)]
pub struct RObject {
    pub hom: HomSpace,
    pub obj: Bimodule,
}

/// The represented adjunction together with the target comonad.
#[derive(Clone, Debug)]
pub struct Setting {
    coring: Arc<Coring>,
    sigma: Bimodule,
    b_reg: Bimodule,
}

impl Setting {
    pub fn new(sigma: Bimodule, coring: Arc<Coring>) -> Result<Self, ComonadError> {
        if **sigma.right() != **coring.base() {
            return Err(ComonadError::Mismatch("Σ is not a right module over the base of C".into()));
        }
        let b_reg = Bimodule::regular(sigma.left().clone());
        Ok(Setting { coring, sigma, b_reg })
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }
    pub fn sigma(&self) -> &Bimodule {
        &self.sigma
    }
    pub fn a(&self) -> &Arc<Algebra> {
        self.sigma.right()
    }
    pub fn b(&self) -> &Arc<Algebra> {
        self.sigma.left()
    }

    pub fn l(&self, y: &Bimodule) -> Bimodule {
        tensor_over(y, &self.sigma).expect("Y must be a right B-module")
    }

    /// `f ⊗ Σ: LY -> LY'`.
    pub fn l_map(&self, f: &Mat, y: &Bimodule, y2: &Bimodule) -> Mat {
        induced_map(f, &self.sigma.identity(), &self.l(y), &self.l(y2)).expect("f must be B-linear")
    }

    pub fn r(&self, x: &Bimodule) -> RObject {
        let hom = hom_right(&self.sigma, x);
        let obj = tensor_over(&hom.module, &self.b_reg).expect("Hom is a right B-module");
        RObject { hom, obj }
    }

    pub fn r_map(&self, g: &Mat, x: &Bimodule, x2: &Bimodule) -> Mat {
        let (r1, r2) = (self.r(x), self.r(x2));
        let h = r1.hom.post_compose(g, &r2.hom);
        induced_map(&h, &self.b_reg.identity(), &r1.obj, &r2.obj).expect("post-composition is B-linear")
    }

    pub fn g(&self, x: &Bimodule) -> Bimodule {
        tensor_over(x, self.coring.carrier()).expect("X must be a right A-module")
    }

    pub fn g_map(&self, f: &Mat, x: &Bimodule, x2: &Bimodule) -> Mat {
        induced_map(f, &self.coring.carrier().identity(), &self.g(x), &self.g(x2))
            .expect("f must be A-linear")
    }

    /// `η_Y: Y -> RLY`, `y ↦ (u ↦ y^b ⊗ u) ⊗ b` through `d_Y`.
    pub fn eta(&self, y: &Bimodule) -> Result<Mat, ComonadError> {
        let firm = is_firm_module(y).ok_or_else(|| ComonadError::NotFirm(format!("dim {}", y.dim())))?;
        let ly = self.l(y);
        let rly = self.r(&ly);
        let f = y.field();
        let p = ly.tensor_info().unwrap().projection();
        let is = self.sigma.identity();
        let cols: Vec<Vec<Scalar>> = (0..y.dim())
            .map(|i| {
                let m = p.mul(&Mat::unit_column(f, y.dim(), i).kron(&is));
                rly.hom.coords_of(&m).expect("y ⊗ − is A-linear")
            })
            .collect();
        let j = Mat::from_columns(f, rly.hom.dim(), &cols);
        let lifted = induced_map(&j, &self.b_reg.identity(), &firm.tensor, &rly.obj)
            .expect("j is B-linear");
        Ok(lifted.mul(&firm.d))
    }

    /// `ϵ_X: LRX -> X`, `f ⊗ b ⊗ u ↦ f(b·u)`.
    pub fn epsilon(&self, x: &Bimodule) -> Mat {
        let rx = self.r(x);
        let lrx = self.l(&rx.obj);
        let f = x.field();
        let mut cols = Vec::with_capacity(rx.hom.dim() * self.b().dim() * self.sigma.dim());
        for h in 0..rx.hom.dim() {
            let fh = rx.hom.basis_map(h);
            for b in 0..self.b().dim() {
                let fb = fh.mul(self.sigma.left_act(b));
                for s in 0..self.sigma.dim() {
                    cols.push(fb.column(s));
                }
            }
        }
        let flat = Mat::from_columns(f, x.dim(), &cols);
        flat.mul(&lift_to_leaves(&lrx, &[&self.sigma]))
    }

    /// `δ_X = Lη_{RX}: LRX -> LRLRX`.
    pub fn delta_lr(&self, x: &Bimodule) -> Result<Mat, ComonadError> {
        let rx = self.r(x).obj;
        let e = self.eta(&rx)?;
        let rlrx = self.r(&self.l(&rx)).obj;
        Ok(self.l_map(&e, &rx, &rlrx))
    }

    /// `Δ_X: GX -> GGX`.
    pub fn g_delta(&self, x: &Bimodule) -> Mat {
        let c = &self.coring;
        let gx = self.g(x);
        let x_cc = tensor_over(x, c.cc()).expect("same base");
        let xd = induced_map(&x.identity(), c.delta(), &gx, &x_cc).expect("Δ is A-linear");
        rebracket(&x_cc, &self.g(&gx)).mul(&xd)
    }

    /// `ε_X: GX -> X`.
    pub fn g_eps(&self, x: &Bimodule) -> Mat {
        let firm = is_firm_module(x).expect("right A-modules in play are firm");
        let xe = induced_map(&x.identity(), self.coring.eps(), &self.g(x), &firm.tensor)
            .expect("ε is A-linear");
        firm.mult.mul(&xe)
    }

    /// Right `B`-module probes: `B`, `B²` and the simple modules when they are computable.
    pub fn b_probes(&self) -> Vec<Bimodule> {
        let b = self.b().clone();
        let mut out = vec![Bimodule::right_regular(b.clone()), Bimodule::free_right(b.clone(), 2)];
        if b.is_unital() {
            if let Ok(simples) = simple_right_modules(&b) {
                out.extend(simples.into_iter().map(|s| s.forget_left()));
            }
        }
        out.retain(|y| is_firm_module(y).is_some());
        out
    }

    /// Right `A`-module probes: `A`, `A²`, `C` and `Σ`.
    pub fn a_probes(&self) -> Vec<Bimodule> {
        let a = self.a().clone();
        vec![
            Bimodule::right_regular(a.clone()),
            Bimodule::free_right(a, 2),
            self.coring.carrier().forget_left(),
            self.sigma.forget_left(),
        ]
    }
}

/// One component per object: `X ↦ matrix`.
pub type Component = Arc<dyn Fn(&Bimodule) -> Mat + Send + Sync>;

/// A comonad morphism `φ: LR -> G`, evaluated at right `A`-modules.
#[derive(Clone)]
pub struct ComonadMorphism {
    pub setting: Arc<Setting>,
    phi: Component,
}

impl fmt::Debug for ComonadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComonadMorphism").field("setting", &self.setting).finish_non_exhaustive()
    }
}

impl ComonadMorphism {
    pub fn new(setting: Arc<Setting>, phi: Component) -> Self {
        ComonadMorphism { setting, phi }
    }

    /// `φ_X: LRX -> GX`.
    pub fn phi(&self, x: &Bimodule) -> Mat {
        (self.phi)(x)
    }

    /// `Δ_X φ_X = φ_{GX}·LRφ_X·δ_X` and `ε_X φ_X = ϵ_X`.
    pub fn check_at(&self, x: &Bimodule) -> Result<bool, ComonadError> {
        let s = &self.setting;
        let phi = self.phi(x);
        if s.g_eps(x).mul(&phi) != s.epsilon(x) {
            return Ok(false);
        }
        let gx = s.g(x);
        let rx = s.r(x).obj;
        let lrx = s.l(&rx);
        let rphi = s.r_map(&phi, &lrx, &gx);
        let lrphi = s.l_map(&rphi, &s.r(&lrx).obj, &s.r(&gx).obj);
        let rhs = self.phi(&gx).mul(&lrphi).mul(&s.delta_lr(x)?);
        Ok(s.g_delta(x).mul(&phi) == rhs)
    }
}

/// The co-induced representation `α: R -> RG`.
#[derive(Clone)]
pub struct CoInduced {
    pub setting: Arc<Setting>,
    alpha: Component,
}

impl CoInduced {
    pub fn new(setting: Arc<Setting>, alpha: Component) -> Self {
        CoInduced { setting, alpha }
    }

    /// `α_X: RX -> RGX`.
    pub fn alpha(&self, x: &Bimodule) -> Mat {
        (self.alpha)(x)
    }

    /// `RΔ_X·α_X = α_{GX}·α_X` and `Rε_X·α_X = id`.
    pub fn check_at(&self, x: &Bimodule) -> bool {
        let s = &self.setting;
        let gx = s.g(x);
        let a = self.alpha(x);
        let coassoc = s.r_map(&s.g_delta(x), &gx, &s.g(&gx)).mul(&a) == self.alpha(&gx).mul(&a);
        coassoc && s.r_map(&s.g_eps(x), &gx, x).mul(&a).is_identity()
    }
}

/// The induced representation `β: L -> GL`.
#[derive(Clone)]
pub struct Induced {
    pub setting: Arc<Setting>,
    beta: Component,
}

impl Induced {
    pub fn new(setting: Arc<Setting>, beta: Component) -> Self {
        Induced { setting, beta }
    }

    /// `β_Y = (Y ⊗ ρ_Σ)` rebracketed, for a coaction `ρ_Σ: Σ -> Σ ⊗_A C`.
    pub fn from_coaction(setting: Arc<Setting>, rho: Mat) -> Self {
        let s = setting.clone();
        let beta: Component = Arc::new(move |y: &Bimodule| {
            let sc = s.g(s.sigma());
            let y_sc = tensor_over(y, &sc).expect("Y is a right B-module");
            let ly = s.l(y);
            let yr = induced_map(&y.identity(), &rho, &ly, &y_sc).expect("ρ_Σ is left B-linear");
            rebracket(&y_sc, &s.g(&ly)).mul(&yr)
        });
        Induced { setting, beta }
    }

    /// `β_Y: LY -> GLY`.
    pub fn beta(&self, y: &Bimodule) -> Mat {
        (self.beta)(y)
    }

    /// `Δ_{LY}·β_Y = Gβ_Y·β_Y` and `ε_{LY}·β_Y = id`.
    pub fn check_at(&self, y: &Bimodule) -> bool {
        let s = &self.setting;
        let ly = s.l(y);
        let b = self.beta(y);
        let gly = s.g(&ly);
        let coassoc = s.g_delta(&ly).mul(&b) == s.g_map(&b, &ly, &gly).mul(&b);
        coassoc && s.g_eps(&ly).mul(&b).is_identity()
    }
}

/// `α = Rφ·ηR`.
pub fn alpha_from_phi(cm: &ComonadMorphism) -> CoInduced {
    let s = cm.setting.clone();
    let cm2 = cm.clone();
    let alpha: Component = Arc::new(move |x: &Bimodule| {
        let rx = s.r(x).obj;
        let lrx = s.l(&rx);
        let e = s.eta(&rx).expect("R(X) is firm");
        s.r_map(&cm2.phi(x), &lrx, &s.g(x)).mul(&e)
    });
    CoInduced::new(cm.setting.clone(), alpha)
}

/// `φ = ϵG·Lα`, after checking the structure diagrams of `α` on the probes.
pub fn phi_from_alpha(rep: &CoInduced) -> Result<ComonadMorphism, ComonadError> {
    let s = rep.setting.clone();
    for (i, x) in s.a_probes().iter().enumerate() {
        if !rep.check_at(x) {
            return Err(ComonadError::DiagramFailure(format!("A-module probe {i}")));
        }
    }
    let rep2 = rep.clone();
    let s2 = s.clone();
    let phi: Component = Arc::new(move |x: &Bimodule| {
        let gx = s2.g(x);
        let la = s2.l_map(&rep2.alpha(x), &s2.r(x).obj, &s2.r(&gx).obj);
        s2.epsilon(&gx).mul(&la)
    });
    Ok(ComonadMorphism::new(s, phi))
}

/// `β = φL·Lη`.
pub fn beta_from_phi(cm: &ComonadMorphism) -> Induced {
    let s = cm.setting.clone();
    let cm2 = cm.clone();
    let beta: Component = Arc::new(move |y: &Bimodule| {
        let ly = s.l(y);
        let e = s.eta(y).expect("probe modules are firm");
        let le = s.l_map(&e, y, &s.r(&ly).obj);
        cm2.phi(&ly).mul(&le)
    });
    Induced::new(cm.setting.clone(), beta)
}

/// `φ = Gϵ·βR`, after checking the structure diagrams of `β` on the probes.
pub fn phi_from_beta(rep: &Induced) -> Result<ComonadMorphism, ComonadError> {
    let s = rep.setting.clone();
    for (i, y) in s.b_probes().iter().enumerate() {
        if !rep.check_at(y) {
            return Err(ComonadError::DiagramFailure(format!("B-module probe {i}")));
        }
    }
    let rep2 = rep.clone();
    let s2 = s.clone();
    let phi: Component = Arc::new(move |x: &Bimodule| {
        let rx = s2.r(x).obj;
        let lrx = s2.l(&rx);
        s2.g_map(&s2.epsilon(x), &lrx, x).mul(&rep2.beta(&rx))
    });
    Ok(ComonadMorphism::new(s, phi))
}

/// `K_φ(Y) = (LY, β_Y)`.
#[allow(non_snake_case)]
pub fn K_phi(cm: &ComonadMorphism, y: &Bimodule) -> Comodule {
    let s = &cm.setting;
    let beta = beta_from_phi(cm).beta(y);
    Comodule::new(s.coring().clone(), s.l(y), beta).expect("β_Y lands in LY ⊗_A C")
}

/// `D_φ(X)` with its equalizer inclusion into `RX`.
#[derive(Clone, Debug)]
pub struct Equalizer {
    pub object: Bimodule,
    pub eq: Mat,
}

/// The equalizer of `α_X` and `R(ρ_X)`.
#[allow(non_snake_case)]
pub fn D_phi(cm: &ComonadMorphism, x: &Comodule) -> Equalizer {
    let s = &cm.setting;
    let car = x.carrier();
    let alpha = alpha_from_phi(cm).alpha(car);
    let rrho = s.r_map(x.rho(), car, x.xc());
    let rx = s.r(car).obj;
    let (object, eq) = rx.submodule(&kernel(&alpha.sub(&rrho))).expect("equalizer of B-linear maps");
    Equalizer { object, eq }
}

/// The factorization of `η_Y` through `D_φ K_φ Y`.
pub fn unit_hat(cm: &ComonadMorphism, y: &Bimodule) -> Result<Mat, ComonadError> {
    let k = K_phi(cm, y);
    let d = D_phi(cm, &k);
    let e = cm.setting.eta(y)?;
    d.eq.solve(&e).ok_or(ComonadError::FactorizationFailure)
}

/// `ε̂_X = ϵ_X·L(eq_X): L D_φ X -> X`.
pub fn counit_hat(cm: &ComonadMorphism, x: &Comodule) -> Mat {
    let s = &cm.setting;
    let d = D_phi(cm, x);
    let rx = s.r(x.carrier()).obj;
    s.epsilon(x.carrier()).mul(&s.l_map(&d.eq, &d.object, &rx))
}

/// The split equalizer `RX -> RGX ⇉ RGGX` with contractions `Rε_X`, `RGε_X`.
pub fn contractible_equalizer_check(cm: &ComonadMorphism, x: &Bimodule) -> bool {
    let s = &cm.setting;
    let alpha = alpha_from_phi(cm);
    let gx = s.g(x);
    let ggx = s.g(&gx);
    let e = alpha.alpha(x);
    let f = s.r_map(&s.g_delta(x), &gx, &ggx);
    let g = alpha.alpha(&gx);
    let sc = s.r_map(&s.g_eps(x), &gx, x);
    let t = s.r_map(&s.g_map(&s.g_eps(x), &gx, x), &ggx, &gx);
    f.mul(&e) == g.mul(&e)
        && sc.mul(&e).is_identity()
        && t.mul(&f).is_identity()
        && t.mul(&g) == e.mul(&sc)
}

/// `ε̂_{GX}·Lθ = φ_X`, where `θ: RX ≅ D_φ(GX)` is the factorization of `α_X`.
pub fn counit_hat_on_cofree_is_phi(cm: &ComonadMorphism, x: &Bimodule) -> bool {
    let s = &cm.setting;
    let gx = cofree(s.coring(), x);
    let d = D_phi(cm, &gx);
    let alpha = alpha_from_phi(cm).alpha(x);
    let Some(theta) = d.eq.solve(&alpha) else { return false };
    let rx = s.r(x).obj;
    counit_hat(cm, &gx).mul(&s.l_map(&theta, &rx, &d.object)) == cm.phi(x)
}

/// Whether `− ⊗_B Σ` carries the equalizer `D_φ X -> RX ⇉ RGX` to an equalizer.
pub fn l_preserves_equalizer(cm: &ComonadMorphism, x: &Comodule) -> bool {
    let s = &cm.setting;
    let car = x.carrier();
    let d = D_phi(cm, x);
    let rx = s.r(car).obj;
    let rgx = s.r(x.xc()).obj;
    let leq = s.l_map(&d.eq, &d.object, &rx);
    let la = s.l_map(&alpha_from_phi(cm).alpha(car), &rx, &rgx);
    let lr = s.l_map(&s.r_map(x.rho(), car, x.xc()), &rx, &rgx);
    let target = kernel(&la.sub(&lr));
    leq.rank() == leq.cols() && leq.cols() == target.dim()
}

/// Both squares of the comparison between `L D_φ X -> LRX ⇉ LRGX` and
/// `X -> GX ⇉ GGX`, each checked serially.
pub fn verify_serial_diagram(cm: &ComonadMorphism, x: &Comodule) -> bool {
    let s = &cm.setting;
    let car = x.carrier();
    let gx = x.xc();
    let d = D_phi(cm, x);
    let rx = s.r(car).obj;
    let rgx = s.r(gx).obj;
    let leq = s.l_map(&d.eq, &d.object, &rx);
    let phi_x = cm.phi(car);
    let phi_gx = cm.phi(gx);
    let left = phi_x.mul(&leq) == x.rho().mul(&counit_hat(cm, x));
    let la = s.l_map(&alpha_from_phi(cm).alpha(car), &rx, &rgx);
    let lr = s.l_map(&s.r_map(x.rho(), car, gx), &rx, &rgx);
    let top = phi_gx.mul(&la) == s.g_delta(car).mul(&phi_x);
    let bottom = phi_gx.mul(&lr) == s.g_map(x.rho(), car, gx).mul(&phi_x);
    left && top && bottom
}

/// Probe comodules: `C`, `K_φ(B)`, `K_φ(B²)`, the cofree `A ⊗_A C` and any extras.
pub fn comodule_probes(cm: &ComonadMorphism, extra: &[Comodule]) -> Vec<Comodule> {
    let s = &cm.setting;
    let b = s.b().clone();
    let mut out = vec![regular_comodule(s.coring()).forget_left()];
    for y in [Bimodule::right_regular(b.clone()), Bimodule::free_right(b, 2)] {
        if is_firm_module(&y).is_some() {
            out.push(K_phi(cm, &y));
        }
    }
    out.push(cofree(s.coring(), &Bimodule::right_regular(s.a().clone())));
    out.extend(extra.iter().map(Comodule::forget_left));
    out
}

/// Whether `ε̂` is invertible at every probe comodule.
pub fn counit_hat_isos(cm: &ComonadMorphism, probes: &[Comodule]) -> bool {
    probes.iter().all(|x| counit_hat(cm, x).is_invertible())
}

/// Whether `η̂` is invertible at every probe `B`-module.
pub fn unit_hat_isos(cm: &ComonadMorphism, probes: &[Bimodule]) -> bool {
    probes.iter().all(|y| unit_hat(cm, y).map(|u| u.is_invertible()).unwrap_or(false))
}

/// Whether `φ` is invertible at every probe `A`-module.
pub fn phi_isos(cm: &ComonadMorphism, probes: &[Bimodule]) -> bool {
    probes.iter().all(|x| cm.phi(x).is_invertible())
}

#[cfg(test)]
mod tests;
