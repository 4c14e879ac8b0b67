//! Fixed-size complex linear algebra and the constant operators of the
//! `(1/2, 0) ⊕ (0, 1/2)` representation.

mod matrix;

pub use matrix::{Block, Matrix2, Matrix4};
pub use num_complex::Complex64 as C64;

use crate::momentum::{Direction, FourMomentum};
use crate::{Error, Result};

pub(crate) const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

const O: C64 = c64(0.0, 0.0);
const ONE: C64 = c64(1.0, 0.0);
const I: C64 = c64(0.0, 1.0);

/// Which chiral block an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    /// `(1/2, 0)`, the upper block.
    Right,
    /// `(0, 1/2)`, the lower block.
    Left,
}

/// Pauli matrices `σ¹, σ², σ³`.
pub const PAULI: [Matrix2; 3] = [
    Matrix2([[O, ONE], [ONE, O]]),
    Matrix2([[O, c64(0.0, -1.0)], [I, O]]),
    Matrix2([[ONE, O], [O, c64(-1.0, 0.0)]]),
];

/// `σ·n̂ = [[cos θ, sin θ e^{−iφ}], [sin θ e^{iφ}, −cos θ]]`.
pub fn pauli_dot(direction: Direction) -> Matrix2 {
    let (st, ct) = libm::sincos(direction.theta());
    let (sp, cp) = libm::sincos(direction.phi());
    Matrix2([
        [c64(ct, 0.0), c64(st * cp, -st * sp)],
        [c64(st * cp, st * sp), c64(-ct, 0.0)],
    ])
}

/// `σ·p⃗` for the spatial part of `p`.
pub fn pauli_dot_momentum(p: &FourMomentum) -> Matrix2 {
    pauli_dot(p.direction()).scale(c64(p.pmag(), 0.0))
}

/// Wigner time-reversal matrix `Θ = [[0, −1], [1, 0]]`.
pub fn wigner_theta() -> Matrix2 {
    Matrix2([[O, c64(-1.0, 0.0)], [ONE, O]])
}

/// `Θ φ*`: maps a `σ·p̂` eigenvector with eigenvalue `h` to one with `−h`.
pub fn theta_conjugate(block: &Block) -> Block {
    wigner_theta().apply(&block.conj())
}

/// `γ^μ` in the chiral basis with the right-handed block on top.
pub fn gamma(mu: usize) -> Result<Matrix4> {
    match mu {
        0 => Ok(Matrix4::from_blocks(
            Matrix2::ZERO,
            Matrix2::IDENTITY,
            Matrix2::IDENTITY,
            Matrix2::ZERO,
        )),
        1..=3 => {
            let s = PAULI[mu - 1];
            Ok(Matrix4::from_blocks(Matrix2::ZERO, -s, s, Matrix2::ZERO))
        }
        _ => Err(Error::InvalidIndex(mu)),
    }
}

/// All four gamma matrices.
pub fn gammas() -> [Matrix4; 4] {
    core::array::from_fn(|mu| gamma(mu).expect("index in range"))
}

/// `γ⁵ = iγ⁰γ¹γ²γ³ = diag(1, 1, −1, −1)`.
pub fn gamma5() -> Matrix4 {
    Matrix4::from_blocks(
        Matrix2::IDENTITY,
        Matrix2::ZERO,
        Matrix2::ZERO,
        -Matrix2::IDENTITY,
    )
}

/// Minkowski metric `diag(+1, −1, −1, −1)`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Minkowski product of two contravariant vectors.
pub fn minkowski_dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    (0..4).map(|mu| METRIC[mu] * a[mu] * b[mu]).sum()
}

/// The Dirac operator `γ_μ p^μ = E γ⁰ − p⃗·γ⃗`.
pub fn dirac_operator(p: &FourMomentum) -> Matrix4 {
    let g = gammas();
    let pc = p.contravariant();
    (0..4).fold(Matrix4::ZERO, |acc, mu| {
        acc + g[mu].scale(c64(METRIC[mu] * pc[mu], 0.0))
    })
}

/// Chiral boost `√((E+m)/2m) (1 ± σ·p⃗/(E+m))`, `+` for `Right`.
pub fn boost_block(handedness: Handedness, p: &FourMomentum) -> Result<Matrix2> {
    p.require_massive()?;
    let (e, m) = (p.energy(), p.mass());
    let norm = libm::sqrt((e + m) / (2.0 * m));
    let sign = match handedness {
        Handedness::Right => 1.0,
        Handedness::Left => -1.0,
    };
    let generator = pauli_dot_momentum(p).scale(c64(sign / (e + m), 0.0));
    Ok((Matrix2::IDENTITY + generator).scale(c64(norm, 0.0)))
}

/// Spinor rotation `cos(ϑ/2) 1 + i σ·n̂ sin(ϑ/2)`.
pub fn rotation_block(angle: f64, axis: Direction) -> Matrix2 {
    let (s, c) = libm::sincos(angle / 2.0);
    Matrix2::IDENTITY.scale(c64(c, 0.0)) + pauli_dot(axis).scale(c64(0.0, s))
}
