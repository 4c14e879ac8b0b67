//! Constructors for every spinor family: rest-frame helicity eigenstates,
//! boosted chiral blocks, single- and dual-helicity bispinors, the singular
//! form, charge-conjugation eigenspinors and Weyl-type spinors.
//!
//! Amplitude relations that contain `sin θ / (1 ± cos θ)` are evaluated
//! through the half-angle forms `tan(θ/2)` and `cot(θ/2)`, which agree
//! identically and avoid cancellation near the poles.

use core::f64::consts::{PI, TAU};

use crate::algebra::{boost_block, c64, theta_conjugate, Block, Handedness, C64};
use crate::momentum::{Direction, FourMomentum};
use crate::spinor::{BiSpinor, Boost, Family, Helicity, HelicityPair, Origin, Sign, WeylBlock};
use crate::{Error, Result};

/// Below this, `1 ± cos θ` is treated as a vanishing denominator.
pub const SINGULAR_DENOMINATOR: f64 = 1e-12;

/// Rest-spinor phases `ϑ₁` (helicity `+`) and `ϑ₂` (helicity `−`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phases {
    /// Phase of the positive-helicity rest spinor.
    pub theta1: f64,
    /// Phase of the negative-helicity rest spinor.
    pub theta2: f64,
}

impl Phases {
    /// `ϑ₁ = 0`, `ϑ₂ = π`, the choice made for charge-conjugation eigenspinors.
    pub const CHARGE_CONJUGATION: Phases = Phases {
        theta1: 0.0,
        theta2: PI,
    };

    /// `ϑ₁ = ϑ₂ = 0`.
    pub const PARITY: Phases = Phases {
        theta1: 0.0,
        theta2: 0.0,
    };

    /// The phase used for a rest spinor of the given helicity.
    pub fn for_helicity(&self, helicity: Helicity) -> f64 {
        match helicity {
            Sign::Plus => self.theta1,
            Sign::Minus => self.theta2,
        }
    }
}

impl Default for Phases {
    fn default() -> Self {
        Phases::CHARGE_CONJUGATION
    }
}

/// Parameters of a rest-frame helicity eigenstate `φ^±(k^μ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestSpinorSpec {
    /// Eigenvalue of `σ·p̂`.
    pub helicity: Helicity,
    /// Direction `p̂` labelling the rest frame.
    pub direction: Direction,
    /// Mass `m > 0`.
    pub mass: f64,
    /// Overall phase, in `[0, 2π)`.
    pub phase: f64,
}

impl RestSpinorSpec {
    /// Picks the phase from `phases` according to the helicity.
    pub fn with_phases(
        helicity: Helicity,
        direction: Direction,
        mass: f64,
        phases: Phases,
    ) -> Self {
        RestSpinorSpec {
            helicity,
            direction,
            mass,
            phase: phases.for_helicity(helicity),
        }
    }
}

/// `φ^±(k^μ)`:
/// `√m e^{iϑ₁} (cos(θ/2) e^{−iφ/2}, sin(θ/2) e^{iφ/2})` for `+`,
/// `√m e^{iϑ₂} (sin(θ/2) e^{−iφ/2}, −cos(θ/2) e^{iφ/2})` for `−`.
pub fn rest_spinor(spec: &RestSpinorSpec) -> Result<Block> {
    if !(spec.mass > 0.0) || !spec.mass.is_finite() {
        return Err(Error::NonPositiveMass(spec.mass));
    }
    if !(0.0..TAU).contains(&spec.phase) {
        return Err(Error::PhaseOutOfRange(spec.phase));
    }
    let (s, c) = libm::sincos(spec.direction.theta() / 2.0);
    let half_phi = spec.direction.phi() / 2.0;
    let prefactor = C64::from_polar(libm::sqrt(spec.mass), spec.phase);
    let (upper, lower) = match spec.helicity {
        Sign::Plus => (c, s),
        Sign::Minus => (s, -c),
    };
    Ok(Block::new(
        prefactor * C64::from_polar(upper, -half_phi),
        prefactor * C64::from_polar(lower, half_phi),
    ))
}

/// Boosts a rest spinor with the chiral boost of the given handedness.
pub fn boosted_block(
    spec: &RestSpinorSpec,
    handedness: Handedness,
    p: &FourMomentum,
) -> Result<Block> {
    check_momentum(spec, p)?;
    Ok(boost_block(handedness, p)?.apply(&rest_spinor(spec)?))
}

/// `(φ_R(p), φ_L(p))` with equal rest blocks `φ_R(k) = φ_L(k) = φ^±(k)`.
///
/// This is the bispinor obtained when parity links the two representation
/// spaces; it satisfies `γ_μ p^μ ψ = m ψ`.
pub fn parity_linked(spec: &RestSpinorSpec, p: &FourMomentum) -> Result<BiSpinor> {
    check_momentum(spec, p)?;
    let rest = rest_spinor(spec)?;
    let origin = Origin::new(Family::ParityLinked(spec.helicity), Some(spec.direction));
    boost(&BiSpinor::from_blocks(rest, rest, origin), p)
}

fn check_momentum(spec: &RestSpinorSpec, p: &FourMomentum) -> Result<()> {
    if (spec.mass - p.mass()).abs() > 1e-12 * spec.mass {
        return Err(Error::MassMismatch {
            spec: spec.mass,
            momentum: p.mass(),
        });
    }
    if !spec.direction.approx_eq(&p.direction(), 1e-12) {
        return Err(Error::DirectionMismatch);
    }
    Ok(())
}

/// Treats the blocks of `psi` as rest-frame blocks and boosts them to `p`.
///
/// The momentum must point along the spinor's own direction when it has one.
pub fn boost(psi: &BiSpinor, p: &FourMomentum) -> Result<BiSpinor> {
    let origin = *psi.origin();
    if origin.boost.is_some() {
        return Err(Error::AlreadyBoosted);
    }
    if let Some(d) = origin.direction {
        if !d.approx_eq(&p.direction(), 1e-12) {
            return Err(Error::DirectionMismatch);
        }
    }
    let rest = [psi.right(), psi.left()];
    let right = boost_block(Handedness::Right, p)?.apply(&rest[0]);
    let left = boost_block(Handedness::Left, p)?.apply(&rest[1]);
    let origin = Origin {
        boost: Some(Boost { rest, momentum: *p }),
        ..origin
    };
    Ok(BiSpinor::from_blocks(right, left, origin))
}

/// `tan(θ/2) e^{iφ}` for `+`, `−cot(θ/2) e^{iφ}` for `−`: the lower-to-upper
/// component ratio of a `σ·p̂` eigenvector.
fn helicity_ratio(helicity: Helicity, direction: Direction) -> Result<C64> {
    let theta = direction.theta();
    let (s, c) = libm::sincos(theta / 2.0);
    let (num, den) = match helicity {
        Sign::Plus => (s, c),
        Sign::Minus => (-c, s),
    };
    // 1 ± cos θ = 2 cos²(θ/2) or 2 sin²(θ/2)
    if 2.0 * den * den <= SINGULAR_DENOMINATOR {
        return Err(Error::SingularAngle { theta });
    }
    Ok(C64::from_polar(num / den, direction.phi()))
}

fn eigen_block(amplitude: C64, helicity: Helicity, direction: Direction) -> Result<Block> {
    Ok(Block::new(
        amplitude,
        amplitude * helicity_ratio(helicity, direction)?,
    ))
}

/// `ψ_(+,+)` or `ψ_(−,−)`:
/// `b = ±a sin θ e^{iφ}/(1 ± cos θ)`, `d = ±c sin θ e^{iφ}/(1 ± cos θ)`.
pub fn build_single_helicity(
    pair: HelicityPair,
    a: C64,
    c: C64,
    direction: Direction,
) -> Result<BiSpinor> {
    if !pair.is_single() {
        return Err(Error::PairMismatch {
            expected: "single-helicity",
        });
    }
    if a == c64(0.0, 0.0) && c == c64(0.0, 0.0) {
        return Err(Error::ZeroAmplitude("a, c"));
    }
    let h = pair.right;
    Ok(BiSpinor::from_blocks(
        eigen_block(a, h, direction)?,
        eigen_block(c, h, direction)?,
        Origin::new(Family::SingleHelicity(pair), Some(direction)),
    ))
}

/// `Φ_(+,−)` or `Φ_(−,+)`: right block with the first helicity, left block
/// with the opposite one.
pub fn build_dual_helicity(
    pair: HelicityPair,
    a: C64,
    c: C64,
    direction: Direction,
) -> Result<BiSpinor> {
    if pair.is_single() {
        return Err(Error::PairMismatch {
            expected: "dual-helicity",
        });
    }
    if a == c64(0.0, 0.0) {
        return Err(Error::ZeroAmplitude("a"));
    }
    if c == c64(0.0, 0.0) {
        return Err(Error::ZeroAmplitude("c"));
    }
    // Both denominators appear across the family, so both poles are excluded.
    helicity_ratio(Sign::Plus, direction)?;
    helicity_ratio(Sign::Minus, direction)?;
    Ok(BiSpinor::from_blocks(
        eigen_block(a, pair.right, direction)?,
        eigen_block(c, pair.left, direction)?,
        Origin::new(Family::DualHelicity(pair), Some(direction)),
    ))
}

/// The dual-helicity spinor that `γ_μ p^μ` maps `build_dual_helicity(pair, a, c, ·)` onto:
/// the opposite pair with the amplitudes exchanged.
pub fn dual_helicity_partner(
    pair: HelicityPair,
    a: C64,
    c: C64,
    direction: Direction,
) -> Result<BiSpinor> {
    let flipped = HelicityPair::new(pair.left, pair.right);
    build_dual_helicity(flipped, c, a, direction)
}

/// `(−b c d*/|c|², b, c, d)`.
pub fn build_singular_form(b: C64, c: C64, d: C64) -> Result<BiSpinor> {
    if c == c64(0.0, 0.0) {
        return Err(Error::ZeroAmplitude("c"));
    }
    let a = -b * c * d.conj() / c.norm_sqr();
    let left = Block::new(c, d);
    Ok(BiSpinor::from_blocks(
        Block::new(a, b),
        left,
        Origin::new(Family::SingularForm, Direction::of_spin(&left).ok()),
    ))
}

/// `(−i d*, i c*, c, d)` for `+1`, `(i d*, −i c*, c, d)` for `−1`.
///
/// The right block is `±iΘ φ_L*`, so the spinor satisfies `Cψ = ±ψ`. Its
/// recorded direction is the spin axis of `(c, d)`, along which the left
/// block has helicity `+` and the right block helicity `−`.
pub fn build_self_conjugate(sign: Sign, c: C64, d: C64) -> Result<BiSpinor> {
    let left = Block::new(c, d);
    if left.norm_sqr() == 0.0 {
        return Err(Error::ZeroBlock);
    }
    let right = theta_conjugate(&left).scale(c64(0.0, sign.value()));
    Ok(BiSpinor::from_blocks(
        right,
        left,
        Origin::new(Family::SelfConjugate(sign), Direction::of_spin(&left).ok()),
    ))
}

/// `(φ, 0)` or `(0, φ)`; the recorded direction is the spin axis of `φ`.
pub fn build_weyl(which: WeylBlock, block: Block) -> Result<BiSpinor> {
    if block.norm_sqr() == 0.0 {
        return Err(Error::ZeroBlock);
    }
    let origin = Origin::new(Family::Weyl(which), Direction::of_spin(&block).ok());
    Ok(match which {
        WeylBlock::RightOnly => BiSpinor::from_blocks(block, Block::ZERO, origin),
        WeylBlock::LeftOnly => BiSpinor::from_blocks(Block::ZERO, block, origin),
    })
}
