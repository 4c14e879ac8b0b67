//! Four-component spinors and the record of how they were built.

use core::fmt;

use crate::algebra::{Block, C64};
use crate::momentum::{Direction, FourMomentum};

/// A sign `±1`: helicity eigenvalues, C and P eigenvalues, mass branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `+1`.
    Plus,
    /// `−1`.
    Minus,
}

/// Helicity eigenvalue of a block along a direction.
pub type Helicity = Sign;

impl Sign {
    /// `+1.0` or `−1.0`.
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// The opposite sign.
    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `'+'` or `'-'`.
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Parses `'+'`/`'-'`.
    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Helicities of the right- and left-handed blocks, as in `ψ_(+,−)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HelicityPair {
    /// Helicity of the upper (right-handed) block.
    pub right: Helicity,
    /// Helicity of the lower (left-handed) block.
    pub left: Helicity,
}

impl HelicityPair {
    /// `(+, +)`.
    pub const PLUS_PLUS: Self = HelicityPair::new(Sign::Plus, Sign::Plus);
    /// `(−, −)`.
    pub const MINUS_MINUS: Self = HelicityPair::new(Sign::Minus, Sign::Minus);
    /// `(+, −)`.
    pub const PLUS_MINUS: Self = HelicityPair::new(Sign::Plus, Sign::Minus);
    /// `(−, +)`.
    pub const MINUS_PLUS: Self = HelicityPair::new(Sign::Minus, Sign::Plus);

    /// Builds a pair.
    pub const fn new(right: Helicity, left: Helicity) -> Self {
        HelicityPair { right, left }
    }

    /// Both blocks share a helicity.
    pub fn is_single(&self) -> bool {
        self.right == self.left
    }

    /// Parses `"++"`, `"--"`, `"+-"` or `"-+"`.
    pub fn parse(s: &str) -> Option<Self> {
        let mut chars = s.chars();
        let right = Sign::from_symbol(chars.next()?)?;
        let left = Sign::from_symbol(chars.next()?)?;
        chars
            .next()
            .is_none()
            .then_some(HelicityPair { right, left })
    }
}

impl fmt::Display for HelicityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.right.symbol(), self.left.symbol())
    }
}

/// Which block of a Weyl-type spinor is populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylBlock {
    /// `(φ_R, 0)`.
    RightOnly,
    /// `(0, φ_L)`.
    LeftOnly,
}

/// The constructor that produced a spinor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Components supplied directly.
    Raw,
    /// Both blocks share a helicity.
    SingleHelicity(HelicityPair),
    /// Blocks carry opposite helicities.
    DualHelicity(HelicityPair),
    /// `(−b c d*/|c|², b, c, d)`.
    SingularForm,
    /// Charge-conjugation eigenspinor with the given eigenvalue.
    SelfConjugate(Sign),
    /// One block null.
    Weyl(WeylBlock),
    /// Equal rest blocks joined by parity.
    ParityLinked(Helicity),
}

impl Family {
    /// Stable snake-case name used in reports and job files.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Raw => "raw",
            Family::SingleHelicity(_) => "single_helicity",
            Family::DualHelicity(_) => "dual_helicity",
            Family::SingularForm => "singular_form",
            Family::SelfConjugate(_) => "self_conjugate",
            Family::Weyl(_) => "weyl",
            Family::ParityLinked(_) => "parity_linked",
        }
    }
}

/// Rest-frame blocks and the momentum they were boosted to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boost {
    /// `(φ_R(k), φ_L(k))`.
    pub rest: [Block; 2],
    /// Target momentum `p`.
    pub momentum: FourMomentum,
}

/// Provenance attached to every [`BiSpinor`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Origin {
    /// Constructor family.
    pub family: Family,
    /// Direction relative to which the constructor fixes helicities.
    pub direction: Option<Direction>,
    /// Present when the components were boosted from rest blocks.
    pub boost: Option<Boost>,
}

impl Origin {
    /// Provenance of directly supplied components.
    pub const RAW: Origin = Origin {
        family: Family::Raw,
        direction: None,
        boost: None,
    };

    pub(crate) fn new(family: Family, direction: Option<Direction>) -> Self {
        Origin {
            family,
            direction,
            boost: None,
        }
    }
}

/// Bispinor `(a, b, c, d)` with `(a, b)` the right-handed block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiSpinor {
    components: [C64; 4],
    origin: Origin,
}

impl BiSpinor {
    /// Wraps raw components.
    pub fn new(components: [C64; 4]) -> Self {
        BiSpinor {
            components,
            origin: Origin::RAW,
        }
    }

    /// Assembles `(φ_R, φ_L)`.
    pub fn from_blocks(right: Block, left: Block, origin: Origin) -> Self {
        BiSpinor {
            components: [right[0], right[1], left[0], left[1]],
            origin,
        }
    }

    /// Replaces the provenance record.
    pub fn with_origin(self, origin: Origin) -> Self {
        BiSpinor { origin, ..self }
    }

    /// `[a, b, c, d]`.
    pub fn components(&self) -> [C64; 4] {
        self.components
    }

    /// Upper block `(a, b)`.
    pub fn right(&self) -> Block {
        Block::new(self.components[0], self.components[1])
    }

    /// Lower block `(c, d)`.
    pub fn left(&self) -> Block {
        Block::new(self.components[2], self.components[3])
    }

    /// How the spinor was built.
    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// The constructor's direction, if it fixes one.
    pub fn natural_direction(&self) -> Option<Direction> {
        self.origin.direction
    }

    /// `ψ†ψ`.
    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Euclidean norm `√(ψ†ψ)`.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// All four components vanish.
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|z| *z == C64::new(0.0, 0.0))
    }

    /// `λψ`, keeping provenance.
    pub fn scale(&self, lambda: C64) -> Self {
        BiSpinor {
            components: self.components.map(|z| z * lambda),
            origin: self.origin,
        }
    }

    /// `‖self − other‖`, ignoring provenance.
    pub fn distance(&self, other: &BiSpinor) -> f64 {
        libm::sqrt(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(x, y)| (x - y).norm_sqr())
                .sum(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::string::ToString;

    #[test]
    fn helicity_pair_parsing() {
        assert_eq!(HelicityPair::parse("+-"), Some(HelicityPair::PLUS_MINUS));
        assert_eq!(HelicityPair::parse("--"), Some(HelicityPair::MINUS_MINUS));
        assert_eq!(HelicityPair::parse("+"), None);
        assert_eq!(HelicityPair::parse("+-+"), None);
        assert_eq!(HelicityPair::parse("x+"), None);
        assert_eq!(HelicityPair::MINUS_PLUS.to_string(), "-+");
    }

    #[test]
    fn blocks_split_components() {
        let z = |x: f64| C64::new(x, 0.0);
        let psi = BiSpinor::new([z(1.0), z(2.0), z(3.0), z(4.0)]);
        assert_eq!(psi.right(), Block::new(z(1.0), z(2.0)));
        assert_eq!(psi.left(), Block::new(z(3.0), z(4.0)));
        assert_eq!(psi.norm_sqr(), 30.0);
        assert!(!psi.is_zero());
        assert!(BiSpinor::new([z(0.0); 4]).is_zero());
    }
}
