/// Floating-point thresholds shared by every check in the crate.
///
/// All three are relative: `exact` bounds residuals of identities that hold
/// exactly in real arithmetic, `class` decides whether a bilinear is zero
/// (`|q| ≤ class · ψ†ψ`), `helicity` bounds the relative eigen-residual
/// `‖Mφ − λφ‖ / ‖φ‖` of eigenvector tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Exact-algebra residual bound.
    pub exact: f64,
    /// Zero test for bilinear covariants, relative to `ψ†ψ`.
    pub class: f64,
    /// Relative eigen-residual bound.
    pub helicity: f64,
}

impl Tolerance {
    /// `exact = 1e-12`, `class = 1e-9`, `helicity = 1e-9`.
    pub const DEFAULT: Tolerance = Tolerance {
        exact: 1e-12,
        class: 1e-9,
        helicity: 1e-9,
    };

    /// Replaces the bilinear zero threshold.
    pub fn with_class(self, class: f64) -> Self {
        Tolerance { class, ..self }
    }

    /// Replaces the eigen-residual threshold.
    pub fn with_helicity(self, helicity: f64) -> Self {
        Tolerance { helicity, ..self }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}
