//! The invariant suite run by verify mode.
//!
//! Every property draws from its own seeded stream and reports the worst
//! value it saw against a fixed threshold. Identities that are exact in real
//! arithmetic use thresholds a few orders above double-precision rounding.

use serde::Serialize;
use spinorlab_core::algebra::{
    dirac_operator, gammas, pauli_dot, Handedness, Matrix2, Matrix4, METRIC,
};
use spinorlab_core::bilinears::{bilinear_set, fpk_residuals};
use spinorlab_core::classify::{classify_report, lounesto_class, HelicityCategory};
use spinorlab_core::factory::{
    boost, build_dual_helicity, build_self_conjugate, dual_helicity_partner, parity_linked,
    rest_spinor, Phases, RestSpinorSpec,
};
use spinorlab_core::spinor::{HelicityPair, Sign};
use spinorlab_core::symmetries::{
    c_eigen_check, charge_conjugate, dirac_flip_residual, dirac_residual, theta_link_check,
};
use spinorlab_core::{BiSpinor, FourMomentum, LounestoClass, Tolerance, C64};

use crate::sample::{Expected, Sampler, RAPIDITY_RANGE};

/// Largest `|p|/m` for properties whose conditioning grows with `E/m`.
///
/// `(γ_μp^μ)² − m²` and the dual-helicity flip both cancel terms of size
/// `E²` (or `E·|p|`) down to `m²`, so double-precision rounding grows like
/// `(E/m)²` relative to the result.
pub const MODERATE_RAPIDITY: f64 = 10.0;

/// Which side of the threshold passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Values must stay below the threshold.
    Below,
    /// Values must stay above the threshold.
    Above,
}

/// Outcome of one property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyOutcome {
    /// Stable property name.
    pub name: &'static str,
    /// No violations.
    pub passed: bool,
    /// Direction of the threshold.
    pub bound: Bound,
    /// Pass threshold; absent for purely discrete checks.
    pub threshold: Option<f64>,
    /// Largest (or, for `Above`, smallest) value observed.
    pub worst: Option<f64>,
    /// Draws evaluated.
    pub draws: u64,
    /// Draws that failed.
    pub violations: u64,
}

/// Parameters shared by every property.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Base seed; each property uses its own stream.
    pub seed: u64,
    /// Draws per property (per family for the class table and dichotomy).
    pub draws: u64,
    /// Classification thresholds.
    pub tolerance: Tolerance,
    /// Rest-spinor phases.
    pub phases: Phases,
}

impl SuiteConfig {
    /// Default tolerances and phases.
    pub fn new(seed: u64, draws: u64) -> Self {
        SuiteConfig {
            seed,
            draws,
            tolerance: Tolerance::DEFAULT,
            phases: Phases::default(),
        }
    }
}

/// All outcomes of a suite run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    /// Every property passed.
    pub passed: bool,
    /// Per-property outcomes, in a fixed order.
    pub properties: Vec<PropertyOutcome>,
}

struct Tracker {
    name: &'static str,
    bound: Bound,
    threshold: Option<f64>,
    worst: Option<f64>,
    draws: u64,
    violations: u64,
}

impl Tracker {
    fn below(name: &'static str, threshold: f64) -> Self {
        Tracker::new(name, Bound::Below, Some(threshold))
    }

    fn above(name: &'static str, threshold: f64) -> Self {
        Tracker::new(name, Bound::Above, Some(threshold))
    }

    fn discrete(name: &'static str) -> Self {
        Tracker::new(name, Bound::Below, None)
    }

    fn new(name: &'static str, bound: Bound, threshold: Option<f64>) -> Self {
        Tracker {
            name,
            bound,
            threshold,
            worst: None,
            draws: 0,
            violations: 0,
        }
    }

    /// Records a value; NaN always fails.
    fn value(&mut self, x: f64) {
        let t = self.threshold.expect("threshold for valued property");
        let (ok, worse) = match self.bound {
            Bound::Below => (x < t, self.worst.is_none_or(|w| x > w || x.is_nan())),
            Bound::Above => (x > t, self.worst.is_none_or(|w| x < w || x.is_nan())),
        };
        if worse {
            self.worst = Some(x);
        }
        if !ok {
            self.violations += 1;
        }
    }

    fn check(&mut self, ok: bool) {
        if !ok {
            self.violations += 1;
        }
    }

    fn draw(&mut self) {
        self.draws += 1;
    }

    fn finish(self) -> PropertyOutcome {
        PropertyOutcome {
            name: self.name,
            passed: self.violations == 0,
            bound: self.bound,
            threshold: self.threshold,
            worst: self.worst,
            draws: self.draws,
            violations: self.violations,
        }
    }
}

fn sampler(config: &SuiteConfig, stream: u64) -> Sampler<rand_chacha::ChaCha8Rng> {
    Sampler::seeded(config.seed, stream)
}

/// `J·J = σ² + ω²`, `J·K = 0`, `J·J + K·K = 0` on raw spinors, normalized by `(J⁰)²`.
pub fn fpk_identities(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 0);
    let mut t = Tracker::below("fpk_identities", 1e-10);
    for _ in 0..config.draws {
        t.draw();
        match bilinear_set(&s.spinor()) {
            Ok(b) => t.value(fpk_residuals(&b).max()),
            Err(_) => t.check(false),
        }
    }
    t.finish()
}

/// Bilinears scale by `|λ|²` and the class is unchanged under `ψ → λψ`.
pub fn homogeneity(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 1);
    let mut t = Tracker::below("bilinear_homogeneity", 1e-12);
    let tol = config.tolerance;
    for _ in 0..config.draws {
        t.draw();
        let psi = s.spinor();
        let lambda = s.unit_phase() * s.log_uniform(0.1, 10.0);
        let (Ok(b), Ok(scaled)) = (bilinear_set(&psi), bilinear_set(&psi.scale(lambda))) else {
            t.check(false);
            continue;
        };
        let factor = lambda.norm_sqr();
        t.value(scaled.max_difference(&b.scaled(factor)) / (factor * psi.norm_sqr()));
        let class = lounesto_class(&b, psi.norm_sqr(), &tol);
        let scaled_class = lounesto_class(&scaled, psi.norm_sqr() * factor, &tol);
        t.check(class == scaled_class);
    }
    t.finish()
}

/// `ψ → e^{iα}ψ` leaves every bilinear unchanged.
pub fn phase_invariance(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 2);
    let mut t = Tracker::below("bilinear_phase_invariance", 1e-12);
    for _ in 0..config.draws {
        t.draw();
        let psi = s.spinor();
        let rotated = psi.scale(s.unit_phase());
        match (bilinear_set(&psi), bilinear_set(&rotated)) {
            (Ok(a), Ok(b)) => t.value(a.max_difference(&b) / psi.norm_sqr()),
            _ => t.check(false),
        }
    }
    t.finish()
}

/// `{γ^μ, γ^ν} = 2η^{μν}` for all sixteen index pairs.
pub fn clifford_algebra(_config: &SuiteConfig) -> PropertyOutcome {
    let g = gammas();
    let mut t = Tracker::below("clifford_algebra", 1e-15);
    for mu in 0..4 {
        for nu in 0..4 {
            t.draw();
            let eta = if mu == nu { 2.0 * METRIC[mu] } else { 0.0 };
            let target = Matrix4::identity().scale(C64::new(eta, 0.0));
            t.value((g[mu].anticommutator(&g[nu]) - target).max_abs());
        }
    }
    t.finish()
}

/// `(σ·n̂)² = 1`.
pub fn pauli_dot_square(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 3);
    let mut t = Tracker::below("pauli_dot_square", 1e-15);
    for _ in 0..config.draws {
        t.draw();
        let m = pauli_dot(s.direction());
        t.value((m * m - Matrix2::IDENTITY).max_abs());
    }
    t.finish()
}

/// Rest spinors of opposite helicity are orthogonal.
pub fn rest_orthogonality(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 4);
    let mut t = Tracker::below("rest_helicity_orthogonality", 1e-15);
    for _ in 0..config.draws {
        t.draw();
        let direction = s.direction();
        let mass = s.log_uniform(0.1, 10.0);
        let spec = |helicity, phase| RestSpinorSpec {
            helicity,
            direction,
            mass,
            phase,
        };
        let (p1, p2) = (s.angle(), s.angle());
        match (
            rest_spinor(&spec(Sign::Plus, p1)),
            rest_spinor(&spec(Sign::Minus, p2)),
        ) {
            (Ok(a), Ok(b)) => t.value(a.inner(&b).norm() / mass),
            _ => t.check(false),
        }
    }
    t.finish()
}

/// Dual-helicity outputs have the singular form `a = −b c d*/|c|²`.
pub fn dual_helicity_singular_form(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 5);
    let mut t = Tracker::below("dual_helicity_singular_form", 1e-12);
    for _ in 0..config.draws {
        t.draw();
        let psi = s.dual_helicity();
        let [a, b, c, d] = psi.components();
        t.value((a + b * c * d.conj() / c.norm_sqr()).norm() / psi.norm());
    }
    t.finish()
}

fn class_of(psi: &BiSpinor, tol: &Tolerance) -> Option<LounestoClass> {
    let b = bilinear_set(psi).ok()?;
    Some(lounesto_class(&b, psi.norm_sqr(), tol))
}

/// Constructor families land in their classes: single-helicity in the
/// steered subclass, dual-helicity and singular-form in 4 or 5,
/// self-conjugate in 5, Weyl in 6. `draws` per family.
pub fn constructor_class_table(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 6);
    let mut t = Tracker::discrete("constructor_class_table");
    let tol = config.tolerance;
    for _ in 0..config.draws {
        let (single, subclass) = s.single_helicity();
        let cases = [
            (single, Expected::Exactly(subclass)),
            (s.dual_helicity(), Expected::Singular),
            (s.singular_form(), Expected::Singular),
            (s.self_conjugate(), Expected::Exactly(5)),
            (s.weyl(), Expected::Exactly(6)),
        ];
        for (psi, expected) in cases {
            t.draw();
            t.check(class_of(&psi, &tol).is_some_and(|c| expected.admits(c)));
        }
    }
    t.finish()
}

/// Classes 1–3 measure Single helicity, 4–5 Dual, 6 NotWellDefined, for
/// every constructor family along its own direction.
///
/// Constructor outputs are tested at rest and parity-linked spinors at
/// moderate rapidity: a boost shrinks a block by up to `m/(E + |p|)`, which
/// can push an already small block under the zero threshold.
pub fn helicity_dichotomy(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 7);
    let mut t = Tracker::discrete("helicity_dichotomy");
    let tol = config.tolerance;
    for _ in 0..config.draws {
        let (single, class) = s.single_helicity();
        let (linked, _) = s.parity_linked(config.phases, MODERATE_RAPIDITY);
        let draws = [
            (single, Expected::Exactly(class)),
            (s.dual_helicity(), Expected::Singular),
            (s.singular_form(), Expected::Singular),
            (s.self_conjugate(), Expected::Exactly(5)),
            (s.weyl(), Expected::Exactly(6)),
            (linked, Expected::Exactly(2)),
        ];
        for (psi, expected) in draws {
            t.draw();
            let ok = classify_report(&psi, psi.natural_direction(), &tol)
                .ok()
                .and_then(|report| {
                    let predicted = HelicityCategory::expected_for(report.class.annotation()?);
                    let measured = report.helicity?.category;
                    Some(
                        report.findings.is_empty()
                            && measured == predicted
                            && expected.admits(report.class),
                    )
                });
            t.check(ok == Some(true));
        }
    }
    t.finish()
}

/// `C(Cψ) = ψ`.
pub fn charge_conjugation_involution(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 8);
    let mut t = Tracker::below("charge_conjugation_involution", 1e-15);
    for _ in 0..config.draws {
        t.draw();
        let psi = s.spinor();
        t.value(charge_conjugate(&charge_conjugate(&psi)).distance(&psi));
    }
    t.finish()
}

/// Self-conjugate constructors give `Cψ = ±ψ` with every component constraint.
pub fn self_conjugate_eigen(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 9);
    let mut t = Tracker::below("self_conjugate_eigen", 1e-14);
    for _ in 0..config.draws {
        t.draw();
        let sign = s.sign();
        let b = s.block();
        let Ok(psi) = build_self_conjugate(sign, b[0], b[1]) else {
            t.check(false);
            continue;
        };
        match c_eigen_check(&psi, &config.tolerance) {
            Ok(check) => {
                t.value(check.verdict.residual);
                t.check(check.verdict.eigenvalue == Some(sign) && check.constraints.all_hold());
            }
            Err(_) => t.check(false),
        }
    }
    t.finish()
}

/// No single-helicity spinor is a charge-conjugation eigenspinor.
pub fn single_helicity_not_c_eigen(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 10);
    let mut t = Tracker::above("single_helicity_not_c_eigen", config.tolerance.helicity);
    for _ in 0..config.draws {
        t.draw();
        let (psi, _) = s.single_helicity();
        match c_eigen_check(&psi, &config.tolerance) {
            Ok(check) => {
                t.value(check.verdict.residual);
                t.check(check.verdict.eigenvalue.is_none());
            }
            Err(_) => t.check(false),
        }
    }
    t.finish()
}

/// `(−2i d*, i c*, c, d)`: the phase pattern of a `+1` eigenspinor with
/// `|a| = 2|d|`. It must fail the eigen test with only `|a| = |d|` flagged.
pub fn norm_constraint_fixture(config: &SuiteConfig) -> PropertyOutcome {
    let mut t = Tracker::above("norm_constraint_fixture", config.tolerance.helicity);
    t.draw();
    let (c, d) = (C64::new(0.6, 0.3), C64::new(-0.2, 0.7));
    let i = C64::new(0.0, 1.0);
    let psi = BiSpinor::new([-i * d.conj() * 2.0, i * c.conj(), c, d]);
    match c_eigen_check(&psi, &config.tolerance) {
        Ok(check) => {
            t.value(check.verdict.residual);
            let k = check.constraints;
            t.check(
                check.verdict.eigenvalue.is_none()
                    && k.sign == Sign::Plus
                    && k.phase_pattern
                    && !k.norm_a_d
                    && k.norm_b_c,
            );
        }
        Err(_) => t.check(false),
    }
    t.finish()
}

/// `ζΘ(B_L φ)* = B_R(ζΘφ*)` and its mirror, for `|p|/m` up to `1e3`.
pub fn theta_link(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 11);
    let mut t = Tracker::below("theta_link", 1e-12);
    for _ in 0..config.draws {
        t.draw();
        let block = s.block();
        let hand = if s.coin() {
            Handedness::Left
        } else {
            Handedness::Right
        };
        let direction = s.direction();
        let p = s.momentum(direction, RAPIDITY_RANGE.1);
        match theta_link_check(&block, hand, &p, s.unit_phase()) {
            Ok(r) => t.value(r),
            Err(_) => t.check(false),
        }
    }
    t.finish()
}

/// Parity-linked spinors satisfy `γ_μp^μψ = mψ`, for `|p|/m` up to `1e3`.
pub fn parity_link_dirac(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 12);
    let mut t = Tracker::below("parity_link_dirac", 1e-12);
    for _ in 0..config.draws {
        t.draw();
        let helicity = s.sign();
        let direction = s.direction();
        let p = s.momentum(direction, RAPIDITY_RANGE.1);
        let phase = s.angle();
        let spec = RestSpinorSpec {
            helicity,
            direction,
            mass: p.mass(),
            phase,
        };
        match parity_linked(&spec, &p).and_then(|psi| dirac_residual(&psi, &p, Sign::Plus)) {
            Ok(r) => t.value(r),
            Err(_) => t.check(false),
        }
    }
    t.finish()
}

/// Boosted dual-helicity spinors miss both mass branches of the Dirac
/// equation, while `γ_μp^μ` maps each onto its partner.
pub fn dual_helicity_dynamics(config: &SuiteConfig) -> [PropertyOutcome; 2] {
    let mut s = sampler(config, 13);
    let mut never = Tracker::above("dual_helicity_not_dirac", 0.1);
    let mut flip = Tracker::below("dual_helicity_flip", 1e-10);
    for _ in 0..config.draws {
        never.draw();
        flip.draw();
        let pair = if s.coin() {
            HelicityPair::PLUS_MINUS
        } else {
            HelicityPair::MINUS_PLUS
        };
        let direction = s.direction();
        let (a, c) = s.amplitude_pair();
        let p = s.momentum(direction, MODERATE_RAPIDITY);
        let pair_at = |psi: spinorlab_core::Result<BiSpinor>| psi.and_then(|x| boost(&x, &p));
        let (Ok(psi), Ok(partner)) = (
            pair_at(build_dual_helicity(pair, a, c, direction)),
            pair_at(dual_helicity_partner(pair, a, c, direction)),
        ) else {
            never.check(false);
            flip.check(false);
            continue;
        };
        match (
            dirac_residual(&psi, &p, Sign::Plus),
            dirac_residual(&psi, &p, Sign::Minus),
        ) {
            (Ok(r1), Ok(r2)) => never.value(r1.min(r2)),
            _ => never.check(false),
        }
        match (
            dirac_flip_residual(&psi, &partner, &p),
            dirac_flip_residual(&partner, &psi, &p),
        ) {
            (Ok(f1), Ok(f2)) => flip.value(f1.max(f2)),
            _ => flip.check(false),
        }
    }
    [never.finish(), flip.finish()]
}

/// `(γ_μp^μ)² = m²` on shell, relative to `m²`.
pub fn klein_gordon(config: &SuiteConfig) -> PropertyOutcome {
    let mut s = sampler(config, 14);
    let mut t = Tracker::below("klein_gordon", 1e-12);
    for _ in 0..config.draws {
        t.draw();
        let direction = s.direction();
        let p = s.momentum(direction, MODERATE_RAPIDITY);
        t.value(kg_defect(&p));
    }
    t.finish()
}

/// `‖(γ_μp^μ)² − m²‖_max / m²`.
pub fn kg_defect(p: &FourMomentum) -> f64 {
    let g = dirac_operator(p);
    let m2 = p.mass() * p.mass();
    (g * g - Matrix4::identity().scale(C64::new(m2, 0.0))).max_abs() / m2
}

/// Runs every property.
pub fn run_suite(config: &SuiteConfig) -> SuiteSummary {
    let mut properties = vec![
        fpk_identities(config),
        homogeneity(config),
        phase_invariance(config),
        clifford_algebra(config),
        pauli_dot_square(config),
        rest_orthogonality(config),
        dual_helicity_singular_form(config),
        constructor_class_table(config),
        helicity_dichotomy(config),
        charge_conjugation_involution(config),
        self_conjugate_eigen(config),
        single_helicity_not_c_eigen(config),
        norm_constraint_fixture(config),
        theta_link(config),
        parity_link_dirac(config),
    ];
    properties.extend(dual_helicity_dynamics(config));
    properties.push(klein_gordon(config));
    SuiteSummary {
        passed: properties.iter().all(|p| p.passed),
        properties,
    }
}
