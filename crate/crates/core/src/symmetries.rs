//! Charge conjugation, parity, the Dirac operator and the Wigner-Θ link
//! between the chiral representation spaces.
//!
//! Parity acts as `γ⁰` composed with `p⃗ → −p⃗` and intrinsic phase `+1`.
//! At nonzero momentum it needs the rest-frame blocks, so it only applies
//! to spinors produced by [`crate::factory::boost`] or
//! [`crate::factory::parity_linked`].

use crate::algebra::{
    boost_block, c64, dirac_operator, gammas, theta_conjugate, wigner_theta, Block, Handedness, C64,
};
use crate::factory::{boost, dual_helicity_partner, Phases};
use crate::momentum::FourMomentum;
use crate::spinor::{BiSpinor, Family, Origin, Sign};
use crate::{Error, Result, Tolerance};

/// `Cψ = (iΘ φ_L*, −iΘ φ_R*)`.
pub fn charge_conjugate(psi: &BiSpinor) -> BiSpinor {
    let i = c64(0.0, 1.0);
    BiSpinor::from_blocks(
        theta_conjugate(&psi.left()).scale(i),
        theta_conjugate(&psi.right()).scale(-i),
        Origin::RAW,
    )
}

/// Whether an eigen-equation holds, and how well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenVerdict {
    /// `±1` when the relative residual is below tolerance.
    pub eigenvalue: Option<Sign>,
    /// `min_± ‖Oψ ∓ ψ‖ / ‖ψ‖`.
    pub residual: f64,
    /// The sign attaining the minimum.
    pub nearest: Sign,
}

fn verdict(image: &BiSpinor, psi: &BiSpinor, tol: f64) -> EigenVerdict {
    let n = psi.norm();
    let plus = image.distance(psi) / n;
    let minus = image.distance(&psi.scale(c64(-1.0, 0.0))) / n;
    let (nearest, residual) = if plus <= minus {
        (Sign::Plus, plus)
    } else {
        (Sign::Minus, minus)
    };
    EigenVerdict {
        eigenvalue: (residual < tol).then_some(nearest),
        residual,
        nearest,
    }
}

/// Component constraints of a charge-conjugation eigenspinor with eigenvalue `s`:
/// `a = −s·i d*`, `b = s·i c*` and `|a| = |d|`, `|b| = |c|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugationConstraints {
    /// Sign the constraints were evaluated for.
    pub sign: Sign,
    /// `a` and `b` point along `−s·i d*` and `s·i c*` (positive real multiples).
    pub phase_pattern: bool,
    /// `|a| = |d|`.
    pub norm_a_d: bool,
    /// `|b| = |c|`.
    pub norm_b_c: bool,
}

impl ConjugationConstraints {
    /// Both norm equalities hold.
    pub fn norms_hold(&self) -> bool {
        self.norm_a_d && self.norm_b_c
    }

    /// The full component relations hold.
    pub fn all_hold(&self) -> bool {
        self.phase_pattern && self.norms_hold()
    }
}

/// Result of testing `Cψ = ±ψ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CEigenCheck {
    /// Eigen-equation verdict.
    pub verdict: EigenVerdict,
    /// Component constraints for the nearest sign.
    pub constraints: ConjugationConstraints,
}

fn aligned(x: C64, target: C64, scale: f64, tol: f64) -> bool {
    // x = λ·target with λ ≥ 0 ⇔ x·conj(target) is real and nonnegative with modulus |x||target|
    let prod = x * target.conj();
    (prod.norm() - prod.re).abs() <= tol * scale
}

/// Tests `Cψ = ±ψ` and the component constraints that go with it.
pub fn c_eigen_check(psi: &BiSpinor, tol: &Tolerance) -> Result<CEigenCheck> {
    let norm = psi.norm_sqr();
    if !(norm > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    let verdict = verdict(&charge_conjugate(psi), psi, tol.helicity);
    let s = verdict.nearest.value();
    let [a, b, c, d] = psi.components();
    let i = c64(0.0, 1.0);
    let threshold = tol.helicity * norm;
    let constraints = ConjugationConstraints {
        sign: verdict.nearest,
        phase_pattern: aligned(a, -i * d.conj() * s, norm, tol.helicity)
            && aligned(b, i * c.conj() * s, norm, tol.helicity),
        norm_a_d: (a.norm_sqr() - d.norm_sqr()).abs() <= threshold,
        norm_b_c: (b.norm_sqr() - c.norm_sqr()).abs() <= threshold,
    };
    Ok(CEigenCheck {
        verdict,
        constraints,
    })
}

/// `γ⁰ ψ(E, −p⃗)`: reevaluates the spinor at the reflected momentum and
/// swaps the chiral blocks.
///
/// At `|p| = 0` the reflection is trivial and any spinor is accepted. At
/// nonzero momentum the spinor must carry its rest-frame blocks and have
/// been boosted to `p`.
pub fn parity_apply(psi: &BiSpinor, p: &FourMomentum) -> Result<BiSpinor> {
    let g0 = gammas()[0];
    let at_reflected = if p.pmag() == 0.0 {
        psi.components()
    } else {
        let record = psi.origin().boost.ok_or(Error::ParityNeedsRestBlocks)?;
        if !record.momentum.approx_eq(p, 1e-12) {
            return Err(Error::ParityNeedsRestBlocks);
        }
        let q = p.reflected();
        let right = boost_block(Handedness::Right, &q)?.apply(&record.rest[0]);
        let left = boost_block(Handedness::Left, &q)?.apply(&record.rest[1]);
        [right[0], right[1], left[0], left[1]]
    };
    Ok(BiSpinor::new(g0.apply(&at_reflected)))
}

/// Tests `Pψ = ±ψ`.
pub fn parity_eigen(psi: &BiSpinor, p: &FourMomentum, tol: &Tolerance) -> Result<EigenVerdict> {
    if !(psi.norm_sqr() > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    Ok(verdict(&parity_apply(psi, p)?, psi, tol.helicity))
}

/// `‖γ_μ p^μ ψ − s·m ψ‖ / (m ‖ψ‖)` for the mass branch `s`.
pub fn dirac_residual(psi: &BiSpinor, p: &FourMomentum, sign: Sign) -> Result<f64> {
    p.require_massive()?;
    let n = psi.norm();
    if !(n > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    let m = p.mass();
    let image = BiSpinor::new(dirac_operator(p).apply(&psi.components()));
    Ok(image.distance(&psi.scale(c64(sign.value() * m, 0.0))) / (m * n))
}

/// Collinearity defect of `v = γ_μ p^μ · source` against `target`:
/// `‖v − (⟨w, v⟩/⟨w, w⟩) w‖ / ‖v‖` with `w = target`.
pub fn dirac_flip_residual(source: &BiSpinor, target: &BiSpinor, p: &FourMomentum) -> Result<f64> {
    let w = target.components();
    let ww: f64 = target.norm_sqr();
    if !(source.norm_sqr() > 0.0) || !(ww > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    let v = BiSpinor::new(dirac_operator(p).apply(&source.components()));
    let vn = v.norm();
    if !(vn > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    let wv: C64 = w
        .iter()
        .zip(&v.components())
        .map(|(x, y)| x.conj() * y)
        .sum();
    let projection = target.scale(wv / ww);
    Ok(v.distance(&projection) / vn)
}

/// Checks that a Θ-conjugated block transforms with the opposite chirality.
///
/// For a left-handed rest block `φ`, compares `ζΘ(B_L φ)*` with
/// `B_R (ζΘφ*)`; for a right-handed one, `ζΘ(B_R φ)*` with `B_L (ζΘφ*)`.
/// Returns the relative difference.
pub fn theta_link_check(
    block_at_rest: &Block,
    handedness: Handedness,
    p: &FourMomentum,
    zeta: C64,
) -> Result<f64> {
    let modulus = zeta.norm();
    if (modulus - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitPhase(modulus));
    }
    let other = match handedness {
        Handedness::Left => Handedness::Right,
        Handedness::Right => Handedness::Left,
    };
    let theta = wigner_theta();
    let own = boost_block(handedness, p)?;
    let opposite = boost_block(other, p)?;
    let lhs = theta.apply(&own.apply(block_at_rest).conj()).scale(zeta);
    let rhs = opposite.apply(&theta.apply(&block_at_rest.conj()).scale(zeta));
    let scale = rhs.norm();
    if scale == 0.0 {
        return Ok(lhs.norm());
    }
    Ok((lhs - rhs).norm() / scale)
}

/// Symmetry diagnostics of one spinor at one momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryReport {
    /// Parity verdict; `None` when the spinor lacks rest-frame blocks.
    pub parity: Option<EigenVerdict>,
    /// Charge-conjugation verdict and constraints.
    pub charge: CEigenCheck,
    /// Dirac residuals for the `+m` and `−m` branches.
    pub dirac: [f64; 2],
    /// Collinearity defect against the dual-helicity partner, for dual-helicity spinors.
    pub dirac_flip: Option<f64>,
    /// Worst Θ-link residual over both blocks.
    pub theta_link: f64,
    /// Rest-spinor phases in force.
    pub phases: Phases,
    /// `ζ₁` (left block) and `ζ₂` (right block).
    pub zetas: [C64; 2],
}

/// Runs every symmetry diagnostic for `psi` at `p`.
pub fn symmetry_report(
    psi: &BiSpinor,
    p: &FourMomentum,
    phases: Phases,
    zetas: [C64; 2],
    tol: &Tolerance,
) -> Result<SymmetryReport> {
    let charge = c_eigen_check(psi, tol)?;
    let parity = match parity_eigen(psi, p, tol) {
        Ok(v) => Some(v),
        Err(Error::ParityNeedsRestBlocks) => None,
        Err(e) => return Err(e),
    };
    let dirac = [
        dirac_residual(psi, p, Sign::Plus)?,
        dirac_residual(psi, p, Sign::Minus)?,
    ];
    let rest = match psi.origin().boost {
        Some(record) => record.rest,
        None => [psi.right(), psi.left()],
    };
    let theta_link = f64::max(
        theta_link_check(&rest[1], Handedness::Left, p, zetas[0])?,
        theta_link_check(&rest[0], Handedness::Right, p, zetas[1])?,
    );
    let dirac_flip = match (psi.origin().family, psi.natural_direction()) {
        (Family::DualHelicity(pair), Some(direction)) => {
            let partner = dual_helicity_partner(pair, rest[0][0], rest[1][0], direction)?;
            let partner = match psi.origin().boost {
                Some(_) => boost(&partner, p)?,
                None => partner,
            };
            Some(dirac_flip_residual(psi, &partner, p)?)
        }
        _ => None,
    };
    Ok(SymmetryReport {
        parity,
        charge,
        dirac,
        dirac_flip,
        theta_link,
        phases,
        zetas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{
        build_dual_helicity, build_self_conjugate, build_single_helicity, parity_linked,
        RestSpinorSpec,
    };
    use crate::momentum::Direction;
    use crate::spinor::HelicityPair;
    use core::f64::consts::{FRAC_PI_4, PI};

    fn z(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn dir(theta: f64, phi: f64) -> Direction {
        Direction::new(theta, phi).unwrap()
    }

    #[test]
    fn charge_conjugation_is_an_involution() {
        let psi = BiSpinor::new([z(0.3, -1.0), z(2.0, 0.5), z(-0.7, 0.2), z(0.1, 0.9)]);
        assert_eq!(
            charge_conjugate(&charge_conjugate(&psi)).components(),
            psi.components()
        );
    }

    #[test]
    fn flag_pole_fixture_is_self_conjugate() {
        let psi = BiSpinor::new([z(0.0, -1.0), z(0.0, 0.0), z(0.0, 0.0), z(1.0, 0.0)]);
        assert_eq!(charge_conjugate(&psi).components(), psi.components());
        let check = c_eigen_check(&psi, &Tolerance::DEFAULT).unwrap();
        assert_eq!(check.verdict.eigenvalue, Some(Sign::Plus));
        assert!(check.constraints.all_hold());
    }

    #[test]
    fn dirac_fixture_is_not_conjugate() {
        let psi = BiSpinor::new([z(1.0, 0.0), z(0.0, 0.0), z(1.0, 0.0), z(0.0, 0.0)]);
        let check = c_eigen_check(&psi, &Tolerance::DEFAULT).unwrap();
        assert_eq!(check.verdict.eigenvalue, None);
        assert!(check.verdict.residual > 0.5);
    }

    #[test]
    fn self_conjugate_constructors_have_matching_eigenvalues() {
        for sign in [Sign::Plus, Sign::Minus] {
            let psi = build_self_conjugate(sign, z(0.7, 0.1), z(-0.2, 0.4)).unwrap();
            let check = c_eigen_check(&psi, &Tolerance::DEFAULT).unwrap();
            assert_eq!(check.verdict.eigenvalue, Some(sign));
            assert!(check.verdict.residual < 1e-14);
            assert!(check.constraints.all_hold());
        }
    }

    #[test]
    fn norm_violation_is_flagged() {
        let (c, d) = (z(0.5, 0.2), z(-0.3, 0.6));
        let i = z(0.0, 1.0);
        let psi = BiSpinor::new([-i * d.conj() * 2.0, i * c.conj(), c, d]);
        let check = c_eigen_check(&psi, &Tolerance::DEFAULT).unwrap();
        assert_eq!(check.verdict.eigenvalue, None);
        assert_eq!(check.constraints.sign, Sign::Plus);
        assert!(check.constraints.phase_pattern);
        assert!(!check.constraints.norm_a_d);
        assert!(check.constraints.norm_b_c);
    }

    #[test]
    fn parity_at_rest_on_equal_blocks() {
        let phi = Block::new(z(0.6, 0.2), z(-0.1, 0.5));
        let psi = BiSpinor::from_blocks(phi, phi, Origin::RAW);
        let p = FourMomentum::at_rest(1.0, Direction::Z).unwrap();
        assert_eq!(
            parity_apply(&psi, &p).unwrap().components(),
            psi.components()
        );
        let v = parity_eigen(&psi, &p, &Tolerance::DEFAULT).unwrap();
        assert_eq!(v.eigenvalue, Some(Sign::Plus));
    }

    #[test]
    fn parity_swaps_boosted_blocks() {
        let d = dir(0.8, 1.7);
        let p = FourMomentum::new(1.3, 4.0, d).unwrap();
        let spec = RestSpinorSpec::with_phases(Sign::Minus, d, 1.3, Phases::PARITY);
        let psi = parity_linked(&spec, &p).unwrap();
        let image = parity_apply(&psi, &p).unwrap();
        assert!((image.left() - psi.left()).norm() < 1e-12 * psi.norm());
        assert!((image.right() - psi.right()).norm() < 1e-12 * psi.norm());
    }

    #[test]
    fn parity_rejects_raw_moving_spinor() {
        let psi = BiSpinor::new([z(1.0, 0.0), z(0.0, 0.0), z(1.0, 0.0), z(0.0, 0.0)]);
        let p = FourMomentum::new(1.0, 2.0, Direction::Z).unwrap();
        assert_eq!(parity_apply(&psi, &p), Err(Error::ParityNeedsRestBlocks));
    }

    #[test]
    fn dual_helicity_is_not_a_parity_eigenspinor() {
        let d = dir(1.0, 0.4);
        let psi =
            build_dual_helicity(HelicityPair::PLUS_MINUS, z(1.0, 0.0), z(0.5, 0.5), d).unwrap();
        let p = FourMomentum::new(1.0, 2.0, d).unwrap();
        let psi = boost(&psi, &p).unwrap();
        let v = parity_eigen(&psi, &p, &Tolerance::DEFAULT).unwrap();
        assert_eq!(v.eigenvalue, None);
        assert!(v.residual > 0.1);
    }

    #[test]
    fn dirac_residual_examples() {
        let psi = BiSpinor::new([z(1.0, 0.0), z(0.0, 0.0), z(1.0, 0.0), z(0.0, 0.0)]);
        let rest = FourMomentum::at_rest(1.0, Direction::Z).unwrap();
        assert_eq!(dirac_residual(&psi, &rest, Sign::Plus).unwrap(), 0.0);
        let d = dir(2.1, 5.5);
        let p = FourMomentum::new(0.8, 3.0, d).unwrap();
        let spec = RestSpinorSpec::with_phases(Sign::Plus, d, 0.8, Phases::PARITY);
        let linked = parity_linked(&spec, &p).unwrap();
        assert!(dirac_residual(&linked, &p, Sign::Plus).unwrap() < 1e-12);
        let massless = FourMomentum::new(0.0, 1.0, d).unwrap();
        assert!(dirac_residual(&linked, &massless, Sign::Plus).is_err());
    }

    #[test]
    fn dual_helicity_flip_example() {
        let d = dir(PI / 3.0, PI / 7.0);
        let p = FourMomentum::new(1.0, 2.5, d).unwrap();
        let (a, c) = (z(1.0, 0.0), z(2.0, 0.0));
        let pm = boost(
            &build_dual_helicity(HelicityPair::PLUS_MINUS, a, c, d).unwrap(),
            &p,
        )
        .unwrap();
        let mp = boost(
            &dual_helicity_partner(HelicityPair::PLUS_MINUS, a, c, d).unwrap(),
            &p,
        )
        .unwrap();
        assert!(dirac_flip_residual(&pm, &mp, &p).unwrap() < 1e-10);
        assert!(dirac_flip_residual(&mp, &pm, &p).unwrap() < 1e-10);
        // Same amplitudes in both slots are collinear only when a² = c².
        let same = boost(
            &build_dual_helicity(HelicityPair::MINUS_PLUS, a, c, d).unwrap(),
            &p,
        )
        .unwrap();
        assert!(dirac_flip_residual(&pm, &same, &p).unwrap() > 0.1);
        for s in [Sign::Plus, Sign::Minus] {
            assert!(dirac_residual(&pm, &p, s).unwrap() > 1.0 - 1e-12);
        }
    }

    #[test]
    fn theta_link_examples() {
        let phi = Block::new(z(0.3, 0.4), z(-1.0, 0.2));
        let rest = FourMomentum::at_rest(2.0, dir(1.0, 1.0)).unwrap();
        assert_eq!(
            theta_link_check(&phi, Handedness::Left, &rest, z(1.0, 0.0)).unwrap(),
            0.0
        );
        let p = FourMomentum::new(0.5, 12.0, dir(2.5, 0.3)).unwrap();
        let base = theta_link_check(&phi, Handedness::Left, &p, z(1.0, 0.0)).unwrap();
        assert!(base < 1e-12);
        let rotated =
            theta_link_check(&phi, Handedness::Left, &p, C64::from_polar(1.0, FRAC_PI_4)).unwrap();
        assert!(rotated < 1e-12);
        assert!(theta_link_check(&phi, Handedness::Right, &p, z(0.0, 1.0)).unwrap() < 1e-12);
        assert!(matches!(
            theta_link_check(&phi, Handedness::Left, &p, z(2.0, 0.0)),
            Err(Error::NonUnitPhase(_))
        ));
    }

    #[test]
    fn report_for_self_conjugate_spinor() {
        let psi = build_self_conjugate(Sign::Plus, z(0.0, 0.0), z(1.0, 0.0)).unwrap();
        let p = FourMomentum::at_rest(1.0, psi.natural_direction().unwrap()).unwrap();
        let report = symmetry_report(
            &psi,
            &p,
            Phases::default(),
            [z(1.0, 0.0); 2],
            &Tolerance::DEFAULT,
        )
        .unwrap();
        assert_eq!(report.charge.verdict.eigenvalue, Some(Sign::Plus));
        assert!(report.dirac.iter().all(|r| *r > 0.1));
        assert_eq!(report.dirac_flip, None);
        assert_eq!(report.theta_link, 0.0);
    }

    #[test]
    fn single_helicity_is_not_conjugate() {
        let d = dir(0.5, 0.5);
        let psi =
            build_single_helicity(HelicityPair::PLUS_PLUS, z(1.0, 0.2), z(-0.4, 0.9), d).unwrap();
        assert_eq!(
            c_eigen_check(&psi, &Tolerance::DEFAULT)
                .unwrap()
                .verdict
                .eigenvalue,
            None
        );
    }
}
