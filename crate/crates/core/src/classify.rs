//! Lounesto classes and helicity profiles.
//!
//! A bilinear `q` counts as zero when `|q| ≤ ε_class · ψ†ψ`; vectors and the
//! spin tensor use the largest component modulus. Since every covariant is
//! quadratic in `ψ`, the test does not depend on the overall scale.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{pauli_dot, Block};
use crate::bilinears::{bilinear_set, fpk_residuals, BilinearSet, FpkResiduals};
use crate::momentum::Direction;
use crate::spinor::BiSpinor;
use crate::{Error, Result, Tolerance};

/// Helicity character attached to a Lounesto class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Annotation {
    /// Classes 1–3.
    SingleHelicity,
    /// Classes 4–5.
    DualHelicity,
    /// Class 6.
    NotWellDefined,
}

impl Annotation {
    /// Label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Annotation::SingleHelicity => "single-helicity",
            Annotation::DualHelicity => "dual-helicity",
            Annotation::NotWellDefined => "Not well defined",
        }
    }
}

/// One of the six Lounesto classes, or the pattern no spinor can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LounestoClass {
    /// Class index `1..=6`.
    Class(u8),
    /// `σ = ω = 0` together with `K = 0` and `S = 0`.
    Unclassifiable,
}

impl LounestoClass {
    /// Class index, if any.
    pub fn index(self) -> Option<u8> {
        match self {
            LounestoClass::Class(n) => Some(n),
            LounestoClass::Unclassifiable => None,
        }
    }

    /// Helicity annotation of the class.
    pub fn annotation(self) -> Option<Annotation> {
        match self.index()? {
            1..=3 => Some(Annotation::SingleHelicity),
            4 | 5 => Some(Annotation::DualHelicity),
            _ => Some(Annotation::NotWellDefined),
        }
    }

    /// Classes 1–3.
    pub fn is_regular(self) -> bool {
        matches!(self.index(), Some(1..=3))
    }
}

impl fmt::Display for LounestoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LounestoClass::Class(n) => write!(f, "class {n}"),
            LounestoClass::Unclassifiable => f.write_str("unclassifiable"),
        }
    }
}

/// Which of `σ, ω, K, S` test nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroPattern {
    /// `σ ≠ 0`.
    pub sigma: bool,
    /// `ω ≠ 0`.
    pub omega: bool,
    /// `K ≠ 0`.
    pub k: bool,
    /// `S ≠ 0`.
    pub s: bool,
}

fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |acc, x| f64::max(acc, x.abs()))
}

/// Nonzero pattern of the covariants at threshold `epsilon · norm`.
pub fn zero_pattern(bset: &BilinearSet, norm: f64, epsilon: f64) -> ZeroPattern {
    let threshold = epsilon * norm;
    ZeroPattern {
        sigma: bset.sigma.abs() > threshold,
        omega: bset.omega.abs() > threshold,
        k: max_abs(&bset.k) > threshold,
        s: max_abs(&bset.s) > threshold,
    }
}

/// Decision tree over the zero pattern.
pub fn lounesto_class(bset: &BilinearSet, norm: f64, tol: &Tolerance) -> LounestoClass {
    let p = zero_pattern(bset, norm, tol.class);
    match (p.sigma, p.omega, p.k, p.s) {
        (true, true, _, _) => LounestoClass::Class(1),
        (true, false, _, _) => LounestoClass::Class(2),
        (false, true, _, _) => LounestoClass::Class(3),
        (false, false, true, true) => LounestoClass::Class(4),
        (false, false, false, true) => LounestoClass::Class(5),
        (false, false, true, false) => LounestoClass::Class(6),
        (false, false, false, false) => LounestoClass::Unclassifiable,
    }
}

/// Helicity character of one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockHelicity {
    /// `σ·p̂ φ = +φ`.
    Plus,
    /// `σ·p̂ φ = −φ`.
    Minus,
    /// The block vanishes.
    NullBlock,
    /// Not an eigenvector of `σ·p̂`.
    NotEigen,
}

impl BlockHelicity {
    /// Label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            BlockHelicity::Plus => "plus",
            BlockHelicity::Minus => "minus",
            BlockHelicity::NullBlock => "null_block",
            BlockHelicity::NotEigen => "not_eigen",
        }
    }
}

/// Combined helicity character of a bispinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HelicityCategory {
    /// Both blocks share a helicity.
    Single,
    /// Blocks have opposite helicities.
    Dual,
    /// Exactly one block is null.
    NotWellDefined,
    /// Some nonnull block is not an eigenvector.
    NonEigen,
}

impl HelicityCategory {
    /// Label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            HelicityCategory::Single => "single",
            HelicityCategory::Dual => "dual",
            HelicityCategory::NotWellDefined => "not_well_defined",
            HelicityCategory::NonEigen => "non_eigen",
        }
    }

    /// The category a class annotation predicts.
    pub fn expected_for(annotation: Annotation) -> Self {
        match annotation {
            Annotation::SingleHelicity => HelicityCategory::Single,
            Annotation::DualHelicity => HelicityCategory::Dual,
            Annotation::NotWellDefined => HelicityCategory::NotWellDefined,
        }
    }
}

/// Per-block helicities along a direction and their combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicityProfile {
    /// Direction tested.
    pub direction: Direction,
    /// Upper block.
    pub right: BlockHelicity,
    /// Lower block.
    pub left: BlockHelicity,
    /// Derived category.
    pub category: HelicityCategory,
    /// Relative eigen-residuals `(min over ±)` of the two blocks; 0 for null blocks.
    pub residuals: [f64; 2],
}

fn block_helicity(
    block: &Block,
    op: &crate::algebra::Matrix2,
    total_norm: f64,
    tol: &Tolerance,
) -> (BlockHelicity, f64) {
    let n2 = block.norm_sqr();
    if n2 <= tol.class * total_norm {
        return (BlockHelicity::NullBlock, 0.0);
    }
    let image = op.apply(block);
    let n = libm::sqrt(n2);
    let plus = (image - *block).norm() / n;
    let minus = (image + *block).norm() / n;
    if plus < tol.helicity {
        (BlockHelicity::Plus, plus)
    } else if minus < tol.helicity {
        (BlockHelicity::Minus, minus)
    } else {
        (BlockHelicity::NotEigen, f64::min(plus, minus))
    }
}

fn category(right: BlockHelicity, left: BlockHelicity) -> HelicityCategory {
    use BlockHelicity::*;
    match (right, left) {
        (Plus, Plus) | (Minus, Minus) => HelicityCategory::Single,
        (Plus, Minus) | (Minus, Plus) => HelicityCategory::Dual,
        (NullBlock, NullBlock) => HelicityCategory::NonEigen,
        (NullBlock, _) | (_, NullBlock) => HelicityCategory::NotWellDefined,
        _ => HelicityCategory::NonEigen,
    }
}

/// Tests each block against `σ·p̂` for the given direction.
pub fn helicity_profile(
    psi: &BiSpinor,
    direction: Direction,
    tol: &Tolerance,
) -> Result<HelicityProfile> {
    let norm = psi.norm_sqr();
    if !(norm > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    let op = pauli_dot(direction);
    let (right, r_res) = block_helicity(&psi.right(), &op, norm, tol);
    let (left, l_res) = block_helicity(&psi.left(), &op, norm, tol);
    Ok(HelicityProfile {
        direction,
        right,
        left,
        category: category(right, left),
        residuals: [r_res, l_res],
    })
}

/// Consistency notes attached to a classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Finding {
    /// No direction was available, so helicity was not evaluated.
    NoDirection,
    /// Some block is not a helicity eigenvector along the supplied direction.
    HelicityNotAligned,
    /// The measured category differs from the class annotation.
    AnnotationMismatch {
        /// Category predicted by the class.
        expected: HelicityCategory,
        /// Category measured.
        measured: HelicityCategory,
    },
    /// All of `σ, ω, K, S` tested zero.
    Unclassifiable,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::NoDirection => f.write_str("no direction supplied; helicity not evaluated"),
            Finding::HelicityNotAligned => {
                f.write_str("helicity not aligned with supplied direction")
            }
            Finding::AnnotationMismatch { expected, measured } => write!(
                f,
                "class annotation predicts {} helicity but measured {}",
                expected.label(),
                measured.label()
            ),
            Finding::Unclassifiable => {
                f.write_str("all of sigma, omega, K, S vanish; numerically degenerate spinor")
            }
        }
    }
}

/// Bilinears, identity residuals, class and helicity of one spinor.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    /// Covariants.
    pub bilinears: BilinearSet,
    /// Scalar identity residuals.
    pub fpk: FpkResiduals,
    /// Assigned class.
    pub class: LounestoClass,
    /// Helicity along the supplied direction, when one was available.
    pub helicity: Option<HelicityProfile>,
    /// Consistency notes; empty when class and helicity agree.
    pub findings: Vec<Finding>,
}

/// Classifies `psi` and cross-checks the class annotation against the
/// measured helicity. Without an explicit direction the constructor's own
/// direction is used; raw spinors get none.
pub fn classify_report(
    psi: &BiSpinor,
    direction: Option<Direction>,
    tol: &Tolerance,
) -> Result<ClassReport> {
    let bilinears = bilinear_set(psi)?;
    let fpk = fpk_residuals(&bilinears);
    let class = lounesto_class(&bilinears, psi.norm_sqr(), tol);
    let mut findings = Vec::new();
    if class == LounestoClass::Unclassifiable {
        findings.push(Finding::Unclassifiable);
    }
    let helicity = match direction.or(psi.natural_direction()) {
        Some(d) => Some(helicity_profile(psi, d, tol)?),
        None => {
            findings.push(Finding::NoDirection);
            None
        }
    };
    if let (Some(profile), Some(annotation)) = (&helicity, class.annotation()) {
        let expected = HelicityCategory::expected_for(annotation);
        if profile.category == HelicityCategory::NonEigen {
            findings.push(Finding::HelicityNotAligned);
        } else if profile.category != expected {
            findings.push(Finding::AnnotationMismatch {
                expected,
                measured: profile.category,
            });
        }
    }
    Ok(ClassReport {
        bilinears,
        fpk,
        class,
        helicity,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::C64;
    use crate::factory::{
        build_dual_helicity, build_self_conjugate, build_single_helicity, build_weyl, rest_spinor,
        Phases, RestSpinorSpec,
    };
    use crate::spinor::{HelicityPair, Sign, WeylBlock};
    use core::f64::consts::FRAC_PI_2;
    use std::string::ToString;

    fn z(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn classify(psi: &BiSpinor) -> LounestoClass {
        let b = bilinear_set(psi).unwrap();
        lounesto_class(&b, psi.norm_sqr(), &Tolerance::DEFAULT)
    }

    #[test]
    fn fixture_classes() {
        let one = z(1.0, 0.0);
        let zero = z(0.0, 0.0);
        assert_eq!(
            classify(&BiSpinor::new([one, zero, one, zero])),
            LounestoClass::Class(2)
        );
        assert_eq!(
            classify(&BiSpinor::new([z(0.0, -1.0), zero, zero, one])),
            LounestoClass::Class(5)
        );
        assert_eq!(
            classify(&BiSpinor::new([one, zero, zero, zero])),
            LounestoClass::Class(6)
        );
    }

    #[test]
    fn annotations_follow_class_index() {
        for n in 1..=6u8 {
            let expected = match n {
                1..=3 => Annotation::SingleHelicity,
                4 | 5 => Annotation::DualHelicity,
                _ => Annotation::NotWellDefined,
            };
            assert_eq!(LounestoClass::Class(n).annotation(), Some(expected));
        }
        assert_eq!(LounestoClass::Unclassifiable.annotation(), None);
        assert_eq!(Annotation::NotWellDefined.label(), "Not well defined");
    }

    #[test]
    fn unclassifiable_pattern() {
        let b = BilinearSet {
            sigma: 0.0,
            omega: 0.0,
            j: [1.0, 0.0, 0.0, 0.0],
            k: [0.0; 4],
            s: [0.0; 6],
        };
        assert_eq!(
            lounesto_class(&b, 1.0, &Tolerance::DEFAULT),
            LounestoClass::Unclassifiable
        );
    }

    #[test]
    fn profile_of_single_helicity() {
        let d = Direction::new(1.0, 2.0).unwrap();
        let psi =
            build_single_helicity(HelicityPair::PLUS_PLUS, z(1.0, 0.5), z(-0.3, 0.2), d).unwrap();
        let p = helicity_profile(&psi, d, &Tolerance::DEFAULT).unwrap();
        assert_eq!(
            (p.right, p.left, p.category),
            (
                BlockHelicity::Plus,
                BlockHelicity::Plus,
                HelicityCategory::Single
            )
        );
    }

    #[test]
    fn profile_of_dual_helicity() {
        let d = Direction::new(FRAC_PI_2, 0.3).unwrap();
        let psi =
            build_dual_helicity(HelicityPair::PLUS_MINUS, z(1.0, 0.0), z(0.2, 0.9), d).unwrap();
        let p = helicity_profile(&psi, d, &Tolerance::DEFAULT).unwrap();
        assert_eq!(
            (p.right, p.left, p.category),
            (
                BlockHelicity::Plus,
                BlockHelicity::Minus,
                HelicityCategory::Dual
            )
        );
    }

    #[test]
    fn profile_of_weyl() {
        let d = Direction::new(0.6, 4.0).unwrap();
        let rest = rest_spinor(&RestSpinorSpec::with_phases(
            Sign::Plus,
            d,
            1.0,
            Phases::default(),
        ))
        .unwrap();
        let psi = build_weyl(WeylBlock::RightOnly, rest).unwrap();
        let p = helicity_profile(&psi, d, &Tolerance::DEFAULT).unwrap();
        assert_eq!(
            (p.right, p.left, p.category),
            (
                BlockHelicity::Plus,
                BlockHelicity::NullBlock,
                HelicityCategory::NotWellDefined
            )
        );
    }

    #[test]
    fn profile_rejects_zero() {
        let psi = BiSpinor::new([z(0.0, 0.0); 4]);
        assert_eq!(
            helicity_profile(&psi, Direction::Z, &Tolerance::DEFAULT),
            Err(Error::ZeroSpinor)
        );
    }

    #[test]
    fn report_is_consistent_for_constructors() {
        let d = Direction::new(1.2, 0.4).unwrap();
        let single =
            build_single_helicity(HelicityPair::MINUS_MINUS, z(1.0, 0.0), z(2.0, 0.0), d).unwrap();
        let r = classify_report(&single, None, &Tolerance::DEFAULT).unwrap();
        assert_eq!(r.class, LounestoClass::Class(2));
        assert!(r.findings.is_empty(), "{:?}", r.findings);

        let flag_pole = build_self_conjugate(Sign::Plus, z(0.4, 0.1), z(-0.2, 0.8)).unwrap();
        let r = classify_report(&flag_pole, None, &Tolerance::DEFAULT).unwrap();
        assert_eq!(r.class, LounestoClass::Class(5));
        assert_eq!(r.helicity.unwrap().category, HelicityCategory::Dual);
        assert!(r.findings.is_empty(), "{:?}", r.findings);
    }

    #[test]
    fn report_flags_misaligned_and_missing_direction() {
        let psi = BiSpinor::new([z(0.3, 0.1), z(0.9, -0.4), z(-0.5, 0.2), z(0.1, 0.7)]);
        let r = classify_report(&psi, None, &Tolerance::DEFAULT).unwrap();
        assert_eq!(r.findings, [Finding::NoDirection]);
        assert!(r.class.is_regular());
        let r = classify_report(&psi, Some(Direction::Z), &Tolerance::DEFAULT).unwrap();
        assert_eq!(r.helicity.unwrap().category, HelicityCategory::NonEigen);
        assert_eq!(r.findings, [Finding::HelicityNotAligned]);
        assert_eq!(
            r.findings[0].to_string(),
            "helicity not aligned with supplied direction"
        );
    }
}
