use thiserror::Error;

/// Errors raised by spinor constructors and analyses.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    /// Gamma-matrix index outside `0..=3`.
    #[error("gamma index {0} out of range 0..=3")]
    InvalidIndex(usize),
    /// Mass must be strictly positive for rest frames and boosts.
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),
    /// Momentum magnitude must be nonnegative and finite.
    #[error("momentum magnitude must be nonnegative and finite, got {0}")]
    InvalidMomentum(f64),
    /// Polar angle outside `[0, π]` or a non-finite azimuth.
    #[error("angle out of range: theta = {theta}, phi = {phi}")]
    AngleOutOfRange {
        /// Polar angle.
        theta: f64,
        /// Azimuthal angle.
        phi: f64,
    },
    /// A constructor denominator `1 ± cos θ` vanishes.
    #[error("singular polar angle theta = {theta} for this helicity pair")]
    SingularAngle {
        /// Offending polar angle.
        theta: f64,
    },
    /// An amplitude required to be nonzero is zero.
    #[error("amplitude `{0}` must be nonzero")]
    ZeroAmplitude(&'static str),
    /// Analysis of the zero bispinor.
    #[error("spinor is zero")]
    ZeroSpinor,
    /// A two-component block required to be nonzero is zero.
    #[error("two-component block is zero")]
    ZeroBlock,
    /// A bilinear that must be real picked up an imaginary part.
    #[error("bilinear {name} has imaginary residue {imag:e}")]
    NonRealBilinear {
        /// Which covariant.
        name: &'static str,
        /// Size of the imaginary part.
        imag: f64,
    },
    /// Momentum direction differs from the spinor's direction.
    #[error("momentum direction does not match the spinor direction")]
    DirectionMismatch,
    /// Helicity pair of the wrong kind for the constructor.
    #[error("helicity pair must be {expected}")]
    PairMismatch {
        /// `"single-helicity"` or `"dual-helicity"`.
        expected: &'static str,
    },
    /// Rest-spinor mass differs from the momentum's mass.
    #[error("rest-spinor mass {spec} does not match momentum mass {momentum}")]
    MassMismatch {
        /// Mass in the rest-spinor parameters.
        spec: f64,
        /// Mass carried by the momentum.
        momentum: f64,
    },
    /// The spinor already carries a boost.
    #[error("spinor is already boosted")]
    AlreadyBoosted,
    /// Parity at nonzero momentum needs the rest-frame blocks.
    #[error("parity at nonzero momentum requires a constructor-generated boosted spinor")]
    ParityNeedsRestBlocks,
    /// A phase factor that must have unit modulus does not.
    #[error("phase must have unit modulus, got |zeta| = {0}")]
    NonUnitPhase(f64),
    /// A rest-spinor phase outside `[0, 2π)`.
    #[error("phase {0} outside [0, 2pi)")]
    PhaseOutOfRange(f64),
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;
