//! Algebraic laws over seeded random instances.

use proptest::prelude::*;

use coringlab::bimod::{induced_map, tensor_over};
use coringlab::comod::{check_comodule, end_ring};
use coringlab::comonadlab::{alpha_from_phi, beta_from_phi, phi_from_alpha, phi_from_beta, unit_hat, K_phi};
use coringlab::corings::check_coring;
use coringlab::corpus::instances::random_instance;
use coringlab::corpus::random::random_module_pair;
use coringlab::exactla::{FieldSpec, Mat};
use coringlab::galois::can_coring;
use coringlab::rings::{check_algebra, check_hom};

fn field(i: u8) -> FieldSpec {
    [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals][i as usize % 3]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_instances_satisfy_their_axioms(seed in 0u64..1000) {
        let inst = random_instance(seed);
        prop_assert!(check_algebra(inst.a()).is_valid());
        prop_assert!(check_coring(inst.coring()).is_valid());
        prop_assert!(check_comodule(&inst.sigma).is_valid());
    }

    #[test]
    fn representations_round_trip(seed in 0u64..1000) {
        let inst = random_instance(seed);
        let cm = inst.can_morphism().unwrap();
        let via_alpha = phi_from_alpha(&alpha_from_phi(&cm)).unwrap();
        let via_beta = phi_from_beta(&beta_from_phi(&cm)).unwrap();
        for x in cm.setting.a_probes() {
            prop_assert!(cm.check_at(&x).unwrap());
            prop_assert_eq!(via_alpha.phi(&x), cm.phi(&x));
            prop_assert_eq!(via_beta.phi(&x), cm.phi(&x));
        }
    }

    #[test]
    fn comparison_functor_lands_in_comodules(seed in 0u64..1000) {
        let inst = random_instance(seed);
        let cm = inst.can_morphism().unwrap();
        for y in cm.setting.b_probes() {
            let k = K_phi(&cm, &y);
            prop_assert!(check_comodule(&k).is_valid());
            let u = unit_hat(&cm, &y).unwrap();
            prop_assert_eq!((u.rows(), u.cols()), (k.dim(), y.dim()));
        }
    }

    #[test]
    fn can_is_a_map_into_the_coring(seed in 0u64..1000) {
        let inst = random_instance(seed);
        if let Ok(can) = can_coring(&inst) {
            prop_assert_eq!(can.matrix.rows(), inst.coring().dim());
            prop_assert_eq!(can.matrix.cols(), can.source.dim());
            prop_assert!(can.source.is_bimodule_map(inst.coring().carrier(), &can.matrix));
        }
    }

    #[test]
    fn lambda_is_a_ring_map(seed in 0u64..1000) {
        let inst = random_instance(seed);
        let t = end_ring(&inst.sigma);
        prop_assert!(check_algebra(&t.algebra).is_valid());
        prop_assert!(check_hom(&t.lambda).is_empty());
    }

    /// The projection onto `M ⊗_A N` kills exactly the balancing relations.
    #[test]
    fn tensor_projection_kills_balancing_relations(f in 0u8..3, seed in 0u64..1000) {
        let (m, n) = random_module_pair(field(f), seed);
        let t = tensor_over(&m, &n).unwrap();
        let info = t.tensor_info().unwrap();
        let p = info.projection();
        for a in 0..m.right().dim() {
            let rel = m.right_act(a).kron(&Mat::identity(m.field(), n.dim()))
                .sub(&Mat::identity(m.field(), m.dim()).kron(n.left_act(a)));
            prop_assert!(p.mul(&rel).is_zero());
        }
        prop_assert!(p.mul(info.section()).is_identity());
        prop_assert_eq!(p.rank(), t.dim());
    }

    /// `induced_map` is functorial in each variable.
    #[test]
    fn induced_maps_compose(f in 0u8..3, seed in 0u64..1000) {
        let (m, n) = random_module_pair(field(f), seed);
        let t = tensor_over(&m, &n).unwrap();
        let id = induced_map(&m.identity(), &n.identity(), &t, &t).unwrap();
        prop_assert!(id.is_identity());
        let two = m.field().from_i64(2);
        let g = n.identity().scale(&two);
        let once = induced_map(&m.identity(), &g, &t, &t).unwrap();
        let twice = induced_map(&m.identity(), &g.mul(&g), &t, &t).unwrap();
        prop_assert_eq!(once.mul(&once), twice);
    }
}
