use super::*;
use crate::comod::{check_comodule, comodule_from_grouplike};
use crate::corings::{trivial_coring, Grouplike};
use crate::corpus::algebras::dual_numbers;
use crate::corpus::instances::{i1, i2, i3, i5, random_instance};
use crate::exactla::FieldSpec;
use crate::galois::GaloisInstance;

fn cm_of(inst: &GaloisInstance) -> ComonadMorphism {
    inst.can_morphism().unwrap()
}

fn assert_round_trips(inst: &GaloisInstance) {
    let cm = cm_of(inst);
    let s = cm.setting.clone();
    let back_a = phi_from_alpha(&alpha_from_phi(&cm)).unwrap();
    let back_b = phi_from_beta(&beta_from_phi(&cm)).unwrap();
    for x in s.a_probes() {
        assert!(cm.check_at(&x).unwrap(), "{}", inst.name);
        assert_eq!(back_a.phi(&x), cm.phi(&x), "{}", inst.name);
        assert_eq!(back_b.phi(&x), cm.phi(&x), "{}", inst.name);
    }
    let alpha = alpha_from_phi(&cm);
    let alpha2 = alpha_from_phi(&back_a);
    for x in s.a_probes() {
        assert_eq!(alpha.alpha(&x), alpha2.alpha(&x));
    }
    let beta = beta_from_phi(&cm);
    let beta2 = beta_from_phi(&back_b);
    for y in s.b_probes() {
        assert!(beta.check_at(&y));
        assert_eq!(beta.beta(&y), beta2.beta(&y));
    }
}

#[test]
fn round_trips_on_corpus() {
    for inst in [i1(), i2(), i3(), i5()] {
        assert_round_trips(&inst);
    }
}

#[test]
fn round_trips_on_random_instances() {
    for seed in 0..8 {
        assert_round_trips(&random_instance(seed));
    }
}

#[test]
fn beta_from_coaction_matches_beta_from_phi() {
    for inst in [i2(), i5()] {
        let cm = cm_of(&inst);
        let direct = Induced::from_coaction(cm.setting.clone(), inst.sigma.rho().clone());
        let derived = beta_from_phi(&cm);
        for y in cm.setting.b_probes() {
            assert_eq!(direct.beta(&y), derived.beta(&y));
        }
    }
}

#[test]
fn trivial_instance_is_identity() {
    let inst = i1();
    let cm = cm_of(&inst);
    let k = Bimodule::right_regular(cm.setting.b().clone());
    assert!(cm.phi(&k).is_identity());
    assert!(unit_hat(&cm, &k).unwrap().is_identity());
    let x = K_phi(&cm, &k);
    assert!(counit_hat(&cm, &x).is_identity());
}

#[test]
fn comparison_functor_on_i2() {
    let inst = i2();
    let cm = cm_of(&inst);
    let b = Bimodule::right_regular(cm.setting.b().clone());
    let kb = K_phi(&cm, &b);
    assert!(check_comodule(&kb).is_valid());
    assert_eq!(kb.dim(), 2);
    assert_eq!(D_phi(&cm, &kb).object.dim(), 1);
    for y in [b.clone(), Bimodule::free_right(cm.setting.b().clone(), 2)] {
        let u = unit_hat(&cm, &y).unwrap();
        assert!(u.is_invertible());
        let k = K_phi(&cm, &y);
        let d = D_phi(&cm, &k);
        assert_eq!(d.eq.mul(&u), cm.setting.eta(&y).unwrap());
    }
}

#[test]
fn counit_on_i5_is_not_injective() {
    let inst = i5();
    let cm = cm_of(&inst);
    let c = crate::comod::regular_comodule(inst.coring()).forget_left();
    let m = counit_hat(&cm, &c);
    assert!(m.rank() < m.cols());
}

#[test]
fn contractible_equalizers() {
    for inst in [i1(), i2(), i3(), i5()] {
        let cm = cm_of(&inst);
        for x in cm.setting.a_probes() {
            assert!(contractible_equalizer_check(&cm, &x), "{}", inst.name);
            assert!(counit_hat_on_cofree_is_phi(&cm, &x), "{}", inst.name);
        }
    }
}

#[test]
fn equalizer_of_cofree_is_r() {
    let inst = i2();
    let cm = cm_of(&inst);
    let a = Bimodule::right_regular(inst.a().clone());
    let gx = cofree(inst.coring(), &a);
    assert_eq!(D_phi(&cm, &gx).object.dim(), cm.setting.r(&a).obj.dim());
}

#[test]
fn triangle_identities() {
    for inst in [i1(), i2(), i3()] {
        let cm = cm_of(&inst);
        let s = &cm.setting;
        for y in s.b_probes() {
            // ε̂_{KY}·K(η̂_Y) = id
            let k = K_phi(&cm, &y);
            let d = D_phi(&cm, &k);
            let ky = s.l_map(&unit_hat(&cm, &y).unwrap(), &y, &d.object);
            assert!(counit_hat(&cm, &k).mul(&ky).is_identity(), "{}", inst.name);
        }
        for x in comodule_probes(&cm, &[inst.sigma.clone()]) {
            // D(ε̂_X)·η̂_{DX} = id
            let d = D_phi(&cm, &x);
            let u = unit_hat(&cm, &d.object).unwrap();
            let kd = K_phi(&cm, &d.object);
            let dkd = D_phi(&cm, &kd);
            let e = counit_hat(&cm, &x);
            let re = s.r_map(&e, kd.carrier(), x.carrier());
            let de = d.eq.solve(&re.mul(&dkd.eq)).expect("comodule map restricts");
            assert!(de.mul(&u).is_identity(), "{}", inst.name);
        }
    }
}

#[test]
fn serial_diagrams() {
    for inst in [i1(), i2(), i5()] {
        let cm = cm_of(&inst);
        for x in comodule_probes(&cm, &[inst.sigma.clone()]) {
            assert!(verify_serial_diagram(&cm, &x), "{}", inst.name);
        }
    }
}

#[test]
fn preservation_on_i2() {
    let inst = i2();
    let cm = cm_of(&inst);
    for x in comodule_probes(&cm, &[inst.sigma.clone()]) {
        assert!(l_preserves_equalizer(&cm, &x));
    }
}

/// `Σ = k` over `B = k[x]/(x²)` and the trivial coring on `k`: every module
/// in the equalizer is killed by `x`, so `− ⊗_B k` still preserves it.
#[test]
fn nonflat_sigma_over_trivial_coring_preserves() {
    let f = FieldSpec::Prime(2);
    let k = Arc::new(Algebra::ground(f));
    let b = Arc::new(dual_numbers(f));
    let c = trivial_coring(&k).unwrap();
    let zero = Mat::zeros(f, 1, 1);
    let sigma = Bimodule::with_dim(b, k.clone(), 1, vec![Mat::identity(f, 1), zero], vec![Mat::identity(f, 1)], None);
    let gl = Grouplike { coring: c, g: vec![f.one()] };
    let x = comodule_from_grouplike(&gl).unwrap();
    let sc = Comodule::new(x.coring().clone(), sigma, x.rho().clone()).unwrap();
    let cm = GaloisInstance::new("nonflat", sc, None).can_morphism().unwrap();
    assert!(!crate::bimod::is_flat(cm.setting.b(), cm.setting.sigma(), &[]));
    assert!(l_preserves_equalizer(&cm, &x));
}

/// `Σ = C ⊕ k` over the divided-power coalgebra on `{1, t}` with `x` acting
/// by `t ↦ 1`: at `X = k` the equalizer contains `xB ⊂ B`, which `− ⊗_B Σ`
/// does not keep injective.
#[test]
fn nonflat_sigma_breaks_preservation() {
    let f = FieldSpec::Prime(2);
    let k = Arc::new(Algebra::ground(f));
    let b = Arc::new(dual_numbers(f));
    let carrier = Bimodule::vector_space(f, 2);
    let cc = tensor_over(&carrier, &carrier).unwrap();
    let mut delta = Mat::zeros(f, 4, 2);
    delta.set(0, 0, f.one());
    delta.set(1, 1, f.one());
    delta.set(2, 1, f.one());
    let delta = cc.tensor_info().unwrap().projection().mul(&delta);
    let eps = Mat::from_i64(f, &[&[1, 0]]);
    let c = Arc::new(Coring::new(carrier, delta, eps).unwrap());
    let mut xact = Mat::zeros(f, 3, 3);
    xact.set(0, 1, f.one());
    let id3 = Mat::identity(f, 3);
    let sigma = Bimodule::with_dim(b, k, 3, vec![id3.clone(), xact], vec![id3], None);
    let sc = tensor_over(&sigma, c.carrier()).unwrap();
    let mut rho = Mat::zeros(f, 6, 3);
    rho.set(0, 0, f.one());
    rho.set(1, 1, f.one());
    rho.set(2, 1, f.one());
    rho.set(4, 2, f.one());
    let rho = sc.tensor_info().unwrap().projection().mul(&rho);
    let sigma_c = Comodule::new(c.clone(), sigma, rho).unwrap();
    assert!(check_comodule(&sigma_c).is_valid());
    let cm = GaloisInstance::new("nonflat", sigma_c, None).can_morphism().unwrap();
    let gl = Grouplike { coring: (*c).clone(), g: vec![f.one(), f.zero()] };
    let x = comodule_from_grouplike(&gl).unwrap();
    assert!(!l_preserves_equalizer(&cm, &x));
}
