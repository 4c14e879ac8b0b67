//! Directions on the unit sphere and on-shell four-momenta.

use core::f64::consts::{PI, TAU};

use crate::algebra::Block;
use crate::{Error, Result};

/// Maps an angle into `[0, 2π)`.
fn wrap_azimuth(phi: f64) -> f64 {
    let r = libm::fmod(phi, TAU);
    let r = if r < 0.0 { r + TAU } else { r };
    // r + TAU can round up to TAU itself
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// A unit 3-vector in spherical angles: `θ ∈ [0, π]`, `φ ∈ [−2π, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    /// The `+z` axis.
    pub const Z: Direction = Direction {
        theta: 0.0,
        phi: 0.0,
    };

    /// Validates the angles.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !(-TAU..=TAU).contains(&phi) {
            return Err(Error::AngleOutOfRange { theta, phi });
        }
        Ok(Direction { theta, phi })
    }

    /// Direction of a nonzero Cartesian vector, with `φ` in `[0, 2π)`.
    pub fn from_cartesian(v: [f64; 3]) -> Result<Self> {
        let r = libm::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::ZeroBlock);
        }
        let theta = libm::acos((v[2] / r).clamp(-1.0, 1.0));
        let phi = wrap_azimuth(libm::atan2(v[1], v[0]));
        Direction::new(theta, phi)
    }

    /// The direction along which `block` is a `+1` eigenvector of `σ·n̂`.
    pub fn of_spin(block: &Block) -> Result<Self> {
        Direction::from_cartesian(block.spin_vector())
    }

    /// Polar angle.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Azimuthal angle.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `(sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = libm::sincos(self.theta);
        let (sp, cp) = libm::sincos(self.phi);
        [st * cp, st * sp, ct]
    }

    /// `−n̂`, expressed as `(π − θ, φ + π)` with the azimuth wrapped into `[0, 2π)`.
    pub fn reflected(&self) -> Self {
        Direction {
            theta: PI - self.theta,
            phi: wrap_azimuth(self.phi + PI),
        }
    }

    /// Whether the two unit vectors agree componentwise within `tol`.
    pub fn approx_eq(&self, other: &Direction, tol: f64) -> bool {
        let (a, b) = (self.unit_vector(), other.unit_vector());
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }
}

/// On-shell four-momentum `p^μ = (E, |p| n̂)` with `E = √(m² + |p|²)`.
///
/// The rest-frame momentum `k^μ` is the `pmag = 0` case; it keeps its
/// direction so that rest spinors stay labelled by helicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    mass: f64,
    pmag: f64,
    direction: Direction,
}

impl FourMomentum {
    /// Validates `m ≥ 0` and `pmag ≥ 0`.
    pub fn new(mass: f64, pmag: f64, direction: Direction) -> Result<Self> {
        if !(mass >= 0.0) || !mass.is_finite() {
            return Err(Error::NonPositiveMass(mass));
        }
        if !(pmag >= 0.0) || !pmag.is_finite() {
            return Err(Error::InvalidMomentum(pmag));
        }
        Ok(FourMomentum {
            mass,
            pmag,
            direction,
        })
    }

    /// The rest-frame momentum `k^μ = (m, 0)` pointing along `direction`.
    pub fn at_rest(mass: f64, direction: Direction) -> Result<Self> {
        FourMomentum::new(mass, 0.0, direction)
    }

    /// Mass `m`.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Momentum magnitude `|p|`.
    pub fn pmag(&self) -> f64 {
        self.pmag
    }

    /// Unit direction of motion.
    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// On-shell energy.
    pub fn energy(&self) -> f64 {
        libm::hypot(self.mass, self.pmag)
    }

    /// Spatial momentum `p⃗`.
    pub fn spatial(&self) -> [f64; 3] {
        self.direction.unit_vector().map(|x| x * self.pmag)
    }

    /// Contravariant components `(E, p_x, p_y, p_z)`.
    pub fn contravariant(&self) -> [f64; 4] {
        let [x, y, z] = self.spatial();
        [self.energy(), x, y, z]
    }

    /// `(E, −p⃗)`.
    pub fn reflected(&self) -> Self {
        FourMomentum {
            direction: self.direction.reflected(),
            ..*self
        }
    }

    /// Same mass and momentum magnitude, same direction within `tol`.
    pub fn approx_eq(&self, other: &FourMomentum, tol: f64) -> bool {
        let scale = f64::max(1.0, self.energy());
        (self.mass - other.mass).abs() <= tol * scale
            && (self.pmag - other.pmag).abs() <= tol * scale
            && (self.pmag == 0.0 || self.direction.approx_eq(&other.direction, tol))
    }

    pub(crate) fn require_massive(&self) -> Result<()> {
        if self.mass > 0.0 {
            Ok(())
        } else {
            Err(Error::NonPositiveMass(self.mass))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_angles() {
        assert!(Direction::new(-0.1, 0.0).is_err());
        assert!(Direction::new(PI + 1e-9, 0.0).is_err());
        assert!(Direction::new(1.0, f64::NAN).is_err());
        assert!(Direction::new(1.0, 7.0).is_err());
        assert!(Direction::new(PI, -1.0).is_ok());
    }

    #[test]
    fn dispersion_is_on_shell() {
        let p = FourMomentum::new(3.0, 4.0, Direction::new(0.7, 2.1).unwrap()).unwrap();
        assert_eq!(p.energy(), 5.0);
        let [e, x, y, z] = p.contravariant();
        assert!((e * e - x * x - y * y - z * z - 9.0).abs() < 1e-13);
    }

    #[test]
    fn reflection_negates_spatial_part() {
        let p = FourMomentum::new(1.0, 2.5, Direction::new(1.1, 5.9).unwrap()).unwrap();
        let (a, b) = (p.spatial(), p.reflected().spatial());
        for k in 0..3 {
            assert!((a[k] + b[k]).abs() < 1e-15);
        }
        assert_eq!(p.reflected().energy(), p.energy());
    }

    #[test]
    fn cartesian_round_trip() {
        let d = Direction::new(2.0, 4.0).unwrap();
        let back = Direction::from_cartesian(d.unit_vector()).unwrap();
        assert!((back.theta() - 2.0).abs() < 1e-14);
        assert!((back.phi() - 4.0).abs() < 1e-14);
        assert!(Direction::from_cartesian([0.0; 3]).is_err());
    }

    #[test]
    fn rejects_negative_mass_and_momentum() {
        assert!(FourMomentum::new(-1.0, 0.0, Direction::Z).is_err());
        assert!(FourMomentum::new(1.0, -1.0, Direction::Z).is_err());
        assert!(FourMomentum::new(0.0, 1.0, Direction::Z).is_ok());
        assert!(FourMomentum::new(0.0, 1.0, Direction::Z)
            .unwrap()
            .require_massive()
            .is_err());
    }
}
