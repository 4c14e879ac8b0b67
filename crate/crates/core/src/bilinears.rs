//! Dirac adjoint, bilinear covariants and the scalar Fierz–Pauli–Kofink
//! identities.
//!
//! Every covariant is a sandwich `ψ̄ Γ ψ` with a Hermitian-under-`γ⁰`
//! insertion, so each value is real up to rounding. The imaginary residue is
//! checked before it is discarded.

use crate::algebra::{c64, gamma5, gammas, minkowski_dot, Matrix4, C64};
use crate::spinor::BiSpinor;
use crate::{Error, Result};

/// Index pairs `(μ, ν)`, `μ < ν`, in the order `S` components are stored.
pub const TENSOR_INDICES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Imaginary residues above `REALITY_TOLERANCE · ψ†ψ` are rejected.
pub const REALITY_TOLERANCE: f64 = 1e-12;

/// The sixteen real bilinear covariants of a spinor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilinearSet {
    /// Scalar `σ = ψ̄ψ`.
    pub sigma: f64,
    /// Pseudoscalar `ω = iψ̄γ⁵ψ`.
    pub omega: f64,
    /// Current `J^μ = ψ̄γ^μψ`.
    pub j: [f64; 4],
    /// Axial current `K^μ = ψ̄γ^μγ⁵ψ`.
    pub k: [f64; 4],
    /// Spin tensor `S^{μν} = iψ̄γ^μγ^νψ` in [`TENSOR_INDICES`] order.
    pub s: [f64; 6],
}

impl BilinearSet {
    /// `ψ†ψ`, which equals `J⁰`.
    pub fn norm(&self) -> f64 {
        self.j[0]
    }

    /// `J·J` with the mostly-minus metric.
    pub fn j_squared(&self) -> f64 {
        minkowski_dot(&self.j, &self.j)
    }

    /// `K·K`.
    pub fn k_squared(&self) -> f64 {
        minkowski_dot(&self.k, &self.k)
    }

    /// `J·K`.
    pub fn j_dot_k(&self) -> f64 {
        minkowski_dot(&self.j, &self.k)
    }

    /// Multiplies every covariant by a real factor.
    pub fn scaled(&self, factor: f64) -> Self {
        BilinearSet {
            sigma: self.sigma * factor,
            omega: self.omega * factor,
            j: self.j.map(|x| x * factor),
            k: self.k.map(|x| x * factor),
            s: self.s.map(|x| x * factor),
        }
    }

    /// `[σ, ω, J⁰..J³, K⁰..K³, S⁰¹..S²³]`.
    pub fn to_array(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        out[0] = self.sigma;
        out[1] = self.omega;
        out[2..6].copy_from_slice(&self.j);
        out[6..10].copy_from_slice(&self.k);
        out[10..].copy_from_slice(&self.s);
        out
    }

    /// Largest absolute difference between corresponding covariants.
    pub fn max_difference(&self, other: &BilinearSet) -> f64 {
        self.to_array()
            .iter()
            .zip(&other.to_array())
            .fold(0.0, |acc, (a, b)| f64::max(acc, (a - b).abs()))
    }
}

/// Residuals of the scalar identities, each divided by `(J⁰)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FpkResiduals {
    /// `J·J − (σ² + ω²)`.
    pub current_square: f64,
    /// `J·K`.
    pub orthogonality: f64,
    /// `J·J + K·K`.
    pub null_sum: f64,
}

impl FpkResiduals {
    /// Largest absolute residual.
    pub fn max(&self) -> f64 {
        self.current_square
            .abs()
            .max(self.orthogonality.abs())
            .max(self.null_sum.abs())
    }
}

/// `ψ̄ = ψ†γ⁰`, as a row of four components.
pub fn dirac_adjoint(psi: &BiSpinor) -> [C64; 4] {
    let g0 = gammas()[0];
    let v = psi.components();
    core::array::from_fn(|j| (0..4).map(|i| v[i].conj() * g0[(i, j)]).sum())
}

/// `ψ̄ M ψ`.
pub fn sandwich(psi: &BiSpinor, m: &Matrix4) -> C64 {
    let row = dirac_adjoint(psi);
    let col = m.apply(&psi.components());
    row.iter().zip(&col).map(|(r, c)| r * c).sum()
}

fn real_part(name: &'static str, z: C64, scale: f64) -> Result<f64> {
    if z.im.abs() > REALITY_TOLERANCE * scale {
        return Err(Error::NonRealBilinear { name, imag: z.im });
    }
    Ok(z.re)
}

/// Computes `σ, ω, J, K, S` for a nonzero spinor.
pub fn bilinear_set(psi: &BiSpinor) -> Result<BilinearSet> {
    let norm = psi.norm_sqr();
    if !(norm > 0.0) {
        return Err(Error::ZeroSpinor);
    }
    let g = gammas();
    let g5 = gamma5();
    let i = c64(0.0, 1.0);

    let sigma = real_part("sigma", sandwich(psi, &Matrix4::identity()), norm)?;
    let omega = real_part("omega", sandwich(psi, &g5.scale(i)), norm)?;
    let mut j = [0.0; 4];
    let mut k = [0.0; 4];
    for mu in 0..4 {
        j[mu] = real_part("J", sandwich(psi, &g[mu]), norm)?;
        k[mu] = real_part("K", sandwich(psi, &(g[mu] * g5)), norm)?;
    }
    let mut s = [0.0; 6];
    for (slot, &(mu, nu)) in s.iter_mut().zip(&TENSOR_INDICES) {
        *slot = real_part("S", sandwich(psi, &(g[mu] * g[nu]).scale(i)), norm)?;
    }
    Ok(BilinearSet {
        sigma,
        omega,
        j,
        k,
        s,
    })
}

/// Residuals of `J·J = σ² + ω²`, `J·K = 0` and `J·J + K·K = 0`.
pub fn fpk_residuals(bset: &BilinearSet) -> FpkResiduals {
    let jj = bset.j_squared();
    let scale = bset.j[0] * bset.j[0];
    FpkResiduals {
        current_square: (jj - (bset.sigma * bset.sigma + bset.omega * bset.omega)) / scale,
        orthogonality: bset.j_dot_k() / scale,
        null_sum: (jj + bset.k_squared()) / scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Block;

    fn z(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn spinor(v: [(f64, f64); 4]) -> BiSpinor {
        BiSpinor::new(v.map(|(re, im)| z(re, im)))
    }

    #[test]
    fn adjoint_swaps_blocks() {
        let psi = spinor([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        assert_eq!(
            dirac_adjoint(&psi),
            [z(0.0, 0.0), z(0.0, 0.0), z(1.0, 0.0), z(0.0, 0.0)]
        );
    }

    #[test]
    fn adjoint_with_gamma0_gives_norm() {
        let psi = spinor([(0.3, -1.0), (2.0, 0.5), (-0.7, 0.2), (0.1, 0.9)]);
        let value = sandwich(&psi, &gammas()[0]);
        assert!((value - z(psi.norm_sqr(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn dirac_type_example() {
        let b = bilinear_set(&spinor([(1.0, 0.0), (0.0, 0.0), (1.0, 0.0), (0.0, 0.0)])).unwrap();
        assert_eq!(b.sigma, 2.0);
        assert_eq!(b.omega, 0.0);
        assert_eq!(b.j, [2.0, 0.0, 0.0, 0.0]);
        assert_eq!(b.k, [0.0, 0.0, 0.0, 2.0]);
        assert_eq!(b.j_squared(), 4.0);
        assert_eq!(b.s, [0.0, 0.0, 0.0, 2.0, 0.0, 0.0]);
    }

    #[test]
    fn flag_pole_example() {
        let b = bilinear_set(&spinor([(0.0, -1.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)])).unwrap();
        assert_eq!((b.sigma, b.omega), (0.0, 0.0));
        assert_eq!(b.k, [0.0; 4]);
        assert!(b.s.iter().any(|x| *x != 0.0));
    }

    #[test]
    fn weyl_example() {
        let b = bilinear_set(&spinor([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)])).unwrap();
        assert_eq!((b.sigma, b.omega), (0.0, 0.0));
        assert_eq!(b.k, [1.0, 0.0, 0.0, 1.0]);
        assert_eq!(b.s, [0.0; 6]);
    }

    #[test]
    fn zero_spinor_is_rejected() {
        let zero = BiSpinor::from_blocks(Block::ZERO, Block::ZERO, crate::spinor::Origin::RAW);
        assert_eq!(bilinear_set(&zero), Err(Error::ZeroSpinor));
    }

    #[test]
    fn fpk_holds_for_tiny_spinor() {
        let psi = spinor([(3e-9, 1e-9), (-2e-9, 0.5e-9), (1e-9, 1e-9), (0.0, -4e-9)]);
        let r = fpk_residuals(&bilinear_set(&psi).unwrap());
        assert!(r.max() < 1e-10, "{r:?}");
    }
}
