use core::f64::consts::{PI, TAU};

use proptest::prelude::*;
use spinorlab_core::algebra::{
    boost_block, dirac_operator, pauli_dot, theta_conjugate, Handedness, Matrix2, Matrix4,
};
use spinorlab_core::bilinears::{bilinear_set, fpk_residuals};
use spinorlab_core::classify::{helicity_profile, lounesto_class, HelicityCategory};
use spinorlab_core::factory::{
    build_dual_helicity, build_self_conjugate, build_single_helicity, build_singular_form,
    build_weyl, dual_helicity_partner, parity_linked, rest_spinor, Phases, RestSpinorSpec,
};
use spinorlab_core::spinor::{HelicityPair, Sign, WeylBlock};
use spinorlab_core::symmetries::{
    c_eigen_check, charge_conjugate, dirac_flip_residual, dirac_residual, theta_link_check,
};
use spinorlab_core::{BiSpinor, Block, Direction, FourMomentum, LounestoClass, Tolerance, C64};

const TOL: Tolerance = Tolerance::DEFAULT;

fn complex() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| C64::new(re, im))
}

/// Complex amplitude with modulus in `[0.05, 1]`.
fn amplitude() -> impl Strategy<Value = C64> {
    (0.05..1.0f64, 0.0..TAU).prop_map(|(r, a)| C64::from_polar(r, a))
}

fn spinor() -> impl Strategy<Value = BiSpinor> {
    [complex(), complex(), complex(), complex()]
        .prop_map(BiSpinor::new)
        .prop_filter("nonzero", |psi| psi.norm_sqr() > 1e-6)
}

fn block() -> impl Strategy<Value = Block> {
    (complex(), complex())
        .prop_map(|(x, y)| Block::new(x, y))
        .prop_filter("nonzero", |b| b.norm_sqr() > 1e-6)
}

/// Uniform on the sphere, away from the poles.
fn direction() -> impl Strategy<Value = Direction> {
    (-0.999..0.999f64, 0.0..TAU).prop_map(|(z, phi)| Direction::new(libm::acos(z), phi).unwrap())
}

/// Mass in `[0.1, 10]` and `pmag/m` in `[1e-3, 10]`, both log-uniform.
fn momentum() -> impl Strategy<Value = FourMomentum> {
    (-1.0..1.0f64, -3.0..1.0f64, direction()).prop_map(|(lm, lr, d)| {
        let m = 10f64.powf(lm);
        FourMomentum::new(m, m * 10f64.powf(lr), d).unwrap()
    })
}

fn pair() -> impl Strategy<Value = HelicityPair> {
    prop_oneof![
        Just(HelicityPair::PLUS_PLUS),
        Just(HelicityPair::MINUS_MINUS),
        Just(HelicityPair::PLUS_MINUS),
        Just(HelicityPair::MINUS_PLUS),
    ]
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn eigen_residual(m: &Matrix2, b: &Block, h: f64) -> f64 {
    (m.apply(b) - b.scale(C64::new(h, 0.0))).norm() / b.norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn fpk_identities_hold(psi in spinor()) {
        let r = fpk_residuals(&bilinear_set(&psi).unwrap());
        prop_assert!(r.max() < 1e-10, "{:?}", r);
    }

    #[test]
    fn current_time_component_is_the_norm(psi in spinor()) {
        let b = bilinear_set(&psi).unwrap();
        prop_assert!(b.j[0] > 0.0);
        prop_assert!((b.j[0] - psi.norm_sqr()).abs() <= 1e-15 * psi.norm_sqr());
    }

    #[test]
    fn bilinears_are_quadratic(psi in spinor(), lambda in amplitude()) {
        let b = bilinear_set(&psi).unwrap();
        let scaled = bilinear_set(&psi.scale(lambda)).unwrap();
        let expected = b.scaled(lambda.norm_sqr());
        prop_assert!(scaled.max_difference(&expected) <= 1e-13 * expected.norm());
    }

    #[test]
    fn bilinears_ignore_global_phase(psi in spinor(), alpha in 0.0..TAU) {
        let b = bilinear_set(&psi).unwrap();
        let rotated = bilinear_set(&psi.scale(C64::from_polar(1.0, alpha))).unwrap();
        prop_assert!(rotated.max_difference(&b) < 1e-12);
    }

    #[test]
    fn class_survives_rescaling(psi in spinor(), lambda in amplitude()) {
        let class = |s: &BiSpinor| lounesto_class(&bilinear_set(s).unwrap(), s.norm_sqr(), &TOL);
        prop_assert_eq!(class(&psi), class(&psi.scale(lambda)));
    }

    #[test]
    fn pauli_dot_squares_to_identity(d in direction()) {
        let m = pauli_dot(d);
        prop_assert!((m * m - Matrix2::IDENTITY).max_abs() < 1e-15);
    }

    #[test]
    fn theta_conjugate_flips_helicity(d in direction(), h in sign(), phase in 0.0..TAU) {
        let spec = RestSpinorSpec { helicity: h, direction: d, mass: 1.0, phase };
        let image = theta_conjugate(&rest_spinor(&spec).unwrap());
        prop_assert!(eigen_residual(&pauli_dot(d), &image, -h.value()) < 1e-14);
    }

    #[test]
    fn chiral_boosts_agree_only_at_rest(m in 0.1..10.0f64, r in 0.0..100.0f64, d in direction()) {
        let p = FourMomentum::new(m, m * r, d).unwrap();
        let diff = boost_block(Handedness::Right, &p).unwrap() - boost_block(Handedness::Left, &p).unwrap();
        if r == 0.0 {
            prop_assert_eq!(diff.max_abs(), 0.0);
        } else {
            prop_assert!(diff.max_abs() > 0.0);
        }
    }

    #[test]
    fn rest_helicity_states_are_orthogonal(d in direction(), m in 0.1..10.0f64, t1 in 0.0..TAU, t2 in 0.0..TAU) {
        let plus = rest_spinor(&RestSpinorSpec { helicity: Sign::Plus, direction: d, mass: m, phase: t1 }).unwrap();
        let minus = rest_spinor(&RestSpinorSpec { helicity: Sign::Minus, direction: d, mass: m, phase: t2 }).unwrap();
        prop_assert!(plus.inner(&minus).norm() < 1e-15 * m);
    }

    #[test]
    fn constructor_blocks_are_helicity_eigenvectors(p in pair(), a in amplitude(), c in amplitude(), d in direction()) {
        let psi = if p.is_single() {
            build_single_helicity(p, a, c, d).unwrap()
        } else {
            build_dual_helicity(p, a, c, d).unwrap()
        };
        let op = pauli_dot(d);
        prop_assert!(eigen_residual(&op, &psi.right(), p.right.value()) < 1e-12);
        prop_assert!(eigen_residual(&op, &psi.left(), p.left.value()) < 1e-12);
    }

    #[test]
    fn dual_helicity_has_the_singular_form(p in pair(), a in amplitude(), c in amplitude(), d in direction()) {
        prop_assume!(!p.is_single());
        let psi = build_dual_helicity(p, a, c, d).unwrap();
        let [a, b, c, d] = psi.components();
        let expected = -b * c * d.conj() / c.norm_sqr();
        prop_assert!((a - expected).norm() <= 1e-12 * psi.norm());
    }

    #[test]
    fn singular_form_is_singular(b in complex(), c in amplitude(), d in complex()) {
        let psi = build_singular_form(b, c, d).unwrap();
        let bset = bilinear_set(&psi).unwrap();
        let n = psi.norm_sqr();
        prop_assert!(bset.sigma.abs() <= 1e-12 * n && bset.omega.abs() <= 1e-12 * n);
    }

    #[test]
    fn charge_conjugation_is_an_involution(psi in spinor()) {
        prop_assert_eq!(charge_conjugate(&charge_conjugate(&psi)).components(), psi.components());
    }

    #[test]
    fn self_conjugate_spinors_are_fixed_points(s in sign(), b in block()) {
        let psi = build_self_conjugate(s, b[0], b[1]).unwrap();
        let image = charge_conjugate(&psi);
        prop_assert!(image.distance(&psi.scale(C64::new(s.value(), 0.0))) <= 1e-15 * psi.norm());
        let check = c_eigen_check(&psi, &TOL).unwrap();
        prop_assert_eq!(check.verdict.eigenvalue, Some(s));
        prop_assert!(check.constraints.all_hold());
    }

    #[test]
    fn single_helicity_spinors_are_not_self_conjugate(p in pair(), a in amplitude(), c in amplitude(), d in direction()) {
        prop_assume!(p.is_single());
        let psi = build_single_helicity(p, a, c, d).unwrap();
        prop_assert_eq!(c_eigen_check(&psi, &TOL).unwrap().verdict.eigenvalue, None);
    }

    #[test]
    fn constructor_families_land_in_their_classes(
        p in pair(), a in amplitude(), c in amplitude(), d in direction(), s in sign(), b in block(), right in any::<bool>()
    ) {
        let class = |psi: &BiSpinor| lounesto_class(&bilinear_set(psi).unwrap(), psi.norm_sqr(), &TOL);
        if p.is_single() {
            let k = class(&build_single_helicity(p, a, c, d).unwrap()).index().unwrap();
            prop_assert!((1..=3).contains(&k));
        } else {
            let k = class(&build_dual_helicity(p, a, c, d).unwrap()).index().unwrap();
            prop_assert!(k == 4 || k == 5);
        }
        prop_assert_eq!(class(&build_self_conjugate(s, b[0], b[1]).unwrap()), LounestoClass::Class(5));
        let which = if right { WeylBlock::RightOnly } else { WeylBlock::LeftOnly };
        prop_assert_eq!(class(&build_weyl(which, b).unwrap()), LounestoClass::Class(6));
    }

    #[test]
    fn dual_category_only_for_singular_spinors(p in pair(), a in amplitude(), c in amplitude(), d in direction()) {
        let psi = if p.is_single() {
            build_single_helicity(p, a, c, d).unwrap()
        } else {
            build_dual_helicity(p, a, c, d).unwrap()
        };
        let profile = helicity_profile(&psi, d, &TOL).unwrap();
        let bset = bilinear_set(&psi).unwrap();
        let n = psi.norm_sqr();
        let singular = bset.sigma.abs() <= TOL.class * n && bset.omega.abs() <= TOL.class * n;
        prop_assert_eq!(profile.category == HelicityCategory::Dual, singular);
    }

    #[test]
    fn parity_link_gives_dirac_dynamics(h in sign(), p in momentum(), phase in 0.0..TAU) {
        let spec = RestSpinorSpec { helicity: h, direction: p.direction(), mass: p.mass(), phase };
        let psi = parity_linked(&spec, &p).unwrap();
        prop_assert!(dirac_residual(&psi, &p, Sign::Plus).unwrap() < 1e-12);
    }

    #[test]
    fn dual_helicity_is_never_dirac_but_flips(p in pair(), a in amplitude(), c in amplitude(), k in momentum()) {
        prop_assume!(!p.is_single());
        let d = k.direction();
        let boost = |s: BiSpinor| spinorlab_core::factory::boost(&s, &k).unwrap();
        let psi = boost(build_dual_helicity(p, a, c, d).unwrap());
        let partner = boost(dual_helicity_partner(p, a, c, d).unwrap());
        for s in [Sign::Plus, Sign::Minus] {
            prop_assert!(dirac_residual(&psi, &k, s).unwrap() > 0.1);
        }
        prop_assert!(dirac_flip_residual(&psi, &partner, &k).unwrap() < 1e-10);
        prop_assert!(dirac_flip_residual(&partner, &psi, &k).unwrap() < 1e-10);
    }

    #[test]
    fn theta_link_holds(b in block(), p in momentum(), alpha in 0.0..TAU, right in any::<bool>()) {
        let hand = if right { Handedness::Right } else { Handedness::Left };
        let zeta = C64::from_polar(1.0, alpha);
        prop_assert!(theta_link_check(&b, hand, &p, zeta).unwrap() < 1e-12);
    }

    #[test]
    fn dirac_operator_squares_to_mass(p in momentum()) {
        let g = dirac_operator(&p);
        let m2 = p.mass() * p.mass();
        let diff = g * g - Matrix4::identity().scale(C64::new(m2, 0.0));
        prop_assert!(diff.max_abs() < 1e-12 * m2);
    }
}

#[test]
fn default_phases_are_charge_conjugation_choice() {
    assert_eq!(
        Phases::default(),
        Phases {
            theta1: 0.0,
            theta2: PI
        }
    );
}
