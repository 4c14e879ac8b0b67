//! Job documents: the JSON schema, defaults, command-line overrides and
//! validation into a [`JobSpec`].

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};
use spinorlab_core::factory::Phases;
use spinorlab_core::spinor::{HelicityPair, Sign, WeylBlock};
use spinorlab_core::{Tolerance, C64};

use crate::error::CliError;
use crate::sample::Population;

/// A complex number as `[re, im]`.
pub type Complex = [f64; 2];

/// Draws per property in verify mode when no count is given.
pub const DEFAULT_VERIFY_COUNT: u64 = 10_000;
/// Draws in sample mode when no count is given.
pub const DEFAULT_SAMPLE_COUNT: u64 = 1_000;

/// What a job does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Bilinears, class and helicity of one spinor.
    Classify,
    /// Classification plus parity, charge conjugation, Dirac and Θ-link diagnostics.
    Symmetries,
    /// Seeded campaign over a population of random spinors.
    Sample,
    /// The full invariant suite.
    Verify,
}

impl Mode {
    /// Name used in job files.
    pub fn name(self) -> &'static str {
        match self {
            Mode::Classify => "classify",
            Mode::Symmetries => "symmetries",
            Mode::Sample => "sample",
            Mode::Verify => "verify",
        }
    }
}

/// A helicity pair written `"++"`, `"--"`, `"+-"` or `"-+"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PairField(pub HelicityPair);

impl TryFrom<String> for PairField {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        HelicityPair::parse(&s).map(PairField).ok_or_else(|| {
            format!("invalid helicity pair {s:?}; expected \"++\", \"--\", \"+-\" or \"-+\"")
        })
    }
}

impl From<PairField> for String {
    fn from(p: PairField) -> String {
        p.0.to_string()
    }
}

/// A sign written `"+"` or `"-"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SignField(pub Sign);

impl TryFrom<String> for SignField {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        let mut chars = s.chars();
        match (chars.next().and_then(Sign::from_symbol), chars.next()) {
            (Some(sign), None) => Ok(SignField(sign)),
            _ => Err(format!("invalid sign {s:?}; expected \"+\" or \"-\"")),
        }
    }
}

impl From<SignField> for String {
    fn from(s: SignField) -> String {
        s.0.symbol().to_string()
    }
}

/// Which block a Weyl-type spinor populates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    /// `(φ, 0)`.
    Right,
    /// `(0, φ)`.
    Left,
}

impl From<Chirality> for WeylBlock {
    fn from(c: Chirality) -> Self {
        match c {
            Chirality::Right => WeylBlock::RightOnly,
            Chirality::Left => WeylBlock::LeftOnly,
        }
    }
}

/// A constructor invocation, tagged by `family`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Constructor {
    /// Both blocks with the same helicity along `(theta, phi)`.
    SingleHelicity {
        /// `"++"` or `"--"`.
        pair: PairField,
        /// Upper amplitude.
        a: Complex,
        /// Lower amplitude.
        c: Complex,
        /// Polar angle.
        theta: f64,
        /// Azimuth.
        phi: f64,
    },
    /// Opposite block helicities along `(theta, phi)`.
    DualHelicity {
        /// `"+-"` or `"-+"`.
        pair: PairField,
        /// Upper amplitude.
        a: Complex,
        /// Lower amplitude.
        c: Complex,
        /// Polar angle.
        theta: f64,
        /// Azimuth.
        phi: f64,
    },
    /// `(−b c d*/|c|², b, c, d)`.
    SingularForm {
        /// Second component.
        b: Complex,
        /// Third component, nonzero.
        c: Complex,
        /// Fourth component.
        d: Complex,
    },
    /// Charge-conjugation eigenspinor built from its lower block.
    SelfConjugate {
        /// Eigenvalue.
        sign: SignField,
        /// Third component.
        c: Complex,
        /// Fourth component.
        d: Complex,
    },
    /// One populated block.
    Weyl {
        /// Populated block.
        which: Chirality,
        /// Its two components.
        block: [Complex; 2],
    },
    /// Equal rest blocks boosted to the job momentum.
    ParityLinked {
        /// Rest-spinor helicity.
        helicity: SignField,
        /// Polar angle.
        theta: f64,
        /// Azimuth.
        phi: f64,
    },
}

impl Constructor {
    /// Family name.
    pub fn family(&self) -> &'static str {
        match self {
            Constructor::SingleHelicity { .. } => "single_helicity",
            Constructor::DualHelicity { .. } => "dual_helicity",
            Constructor::SingularForm { .. } => "singular_form",
            Constructor::SelfConjugate { .. } => "self_conjugate",
            Constructor::Weyl { .. } => "weyl",
            Constructor::ParityLinked { .. } => "parity_linked",
        }
    }

    /// Angles passed explicitly to the constructor.
    pub fn angles(&self) -> Option<Angles> {
        match *self {
            Constructor::SingleHelicity { theta, phi, .. }
            | Constructor::DualHelicity { theta, phi, .. }
            | Constructor::ParityLinked { theta, phi, .. } => Some(Angles { theta, phi }),
            _ => None,
        }
    }
}

/// Spherical angles in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Angles {
    /// Polar angle in `[0, π]`.
    pub theta: f64,
    /// Azimuth in `[−2π, 2π]`.
    pub phi: f64,
}

/// On-shell momentum. Angles default to the constructor's direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MomentumSpec {
    /// Mass.
    pub m: f64,
    /// Momentum magnitude.
    pub pmag: f64,
    /// Polar angle of `p⃗`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    /// Azimuth of `p⃗`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
}

/// Classification thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TolerancesDoc {
    /// Zero test for bilinears.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_class: Option<f64>,
    /// Relative eigen-residual bound.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_helicity: Option<f64>,
}

/// Rest-spinor phases.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhasesDoc {
    /// Phase of helicity `+` rest spinors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta1: Option<f64>,
    /// Phase of helicity `−` rest spinors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta2: Option<f64>,
}

/// The job document as written. Every field is optional here; [`parse_job`]
/// applies defaults and checks which combinations are allowed.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDocument {
    /// What to run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    /// Raw components `[a, b, c, d]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<[Complex; 4]>,
    /// Constructor invocation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructor: Option<Constructor>,
    /// Treat the input blocks as rest-frame blocks and boost them to `momentum`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boost: Option<bool>,
    /// Momentum at which the spinor is analysed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub momentum: Option<MomentumSpec>,
    /// Direction for the helicity test.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Angles>,
    /// Threshold overrides.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<TolerancesDoc>,
    /// Rest-spinor phases.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phases: Option<PhasesDoc>,
    /// Θ-link phases `[ζ₁, ζ₂]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zetas: Option<[Complex; 2]>,
    /// Population drawn in sample mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub population: Option<Population>,
    /// RNG seed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Number of draws.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
}

/// Command-line values that replace document fields.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    /// `--mode`.
    pub mode: Option<Mode>,
    /// `--seed`.
    pub seed: Option<u64>,
    /// `--count`.
    pub count: Option<u64>,
    /// `--epsilon-class`.
    pub epsilon_class: Option<f64>,
    /// `--epsilon-helicity`.
    pub epsilon_helicity: Option<f64>,
    /// `--theta1`.
    pub theta1: Option<f64>,
    /// `--theta2`.
    pub theta2: Option<f64>,
}

/// The spinor a single-spinor job analyses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Input {
    /// Components given directly.
    Components([Complex; 4]),
    /// Built by a constructor.
    Constructor(Constructor),
}

/// A validated job with every default filled in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JobSpec {
    /// What to run.
    pub mode: Mode,
    /// Spinor for classify and symmetries jobs.
    pub input: Option<Input>,
    /// Boost the input to `momentum`.
    pub boost: bool,
    /// Analysis momentum.
    pub momentum: Option<MomentumSpec>,
    /// Explicit helicity direction.
    pub direction: Option<Angles>,
    /// Thresholds.
    pub tolerance: Tolerance,
    /// Rest-spinor phases.
    pub phases: Phases,
    /// Θ-link phases.
    pub zetas: [Complex; 2],
    /// Sample-mode population.
    pub population: Population,
    /// RNG seed.
    pub seed: u64,
    /// Number of draws.
    pub count: u64,
}

/// Converts `[re, im]` to a complex number.
pub fn complex(z: Complex) -> C64 {
    C64::new(z[0], z[1])
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

fn check_finite(name: &str, x: f64) -> Result<(), CliError> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(input_error(format!("{name} must be finite")))
    }
}

fn check_complex(name: &str, z: Complex) -> Result<(), CliError> {
    check_finite(&format!("{name}[0]"), z[0])?;
    check_finite(&format!("{name}[1]"), z[1])
}

fn check_theta(name: &str, theta: f64) -> Result<(), CliError> {
    if (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(input_error(format!(
            "angle out of range: {name} = {theta} (expected 0 <= theta <= pi)"
        )))
    }
}

fn check_phi(name: &str, phi: f64) -> Result<(), CliError> {
    if (-TAU..=TAU).contains(&phi) {
        Ok(())
    } else {
        Err(input_error(format!(
            "angle out of range: {name} = {phi} (expected -2pi <= phi <= 2pi)"
        )))
    }
}

fn check_angles(prefix: &str, a: Angles) -> Result<(), CliError> {
    check_theta(&format!("{prefix}.theta"), a.theta)?;
    check_phi(&format!("{prefix}.phi"), a.phi)
}

fn check_constructor(c: &Constructor) -> Result<(), CliError> {
    if let Some(a) = c.angles() {
        check_angles("constructor", a)?;
    }
    match *c {
        Constructor::SingleHelicity { pair, a, c, .. } => {
            if !pair.0.is_single() {
                return Err(input_error(
                    "single_helicity requires pair \"++\" or \"--\"",
                ));
            }
            check_complex("constructor.a", a)?;
            check_complex("constructor.c", c)
        }
        Constructor::DualHelicity { pair, a, c, .. } => {
            if pair.0.is_single() {
                return Err(input_error("dual_helicity requires pair \"+-\" or \"-+\""));
            }
            check_complex("constructor.a", a)?;
            check_complex("constructor.c", c)
        }
        Constructor::SingularForm { b, c, d } => {
            check_complex("constructor.b", b)?;
            check_complex("constructor.c", c)?;
            check_complex("constructor.d", d)
        }
        Constructor::SelfConjugate { c, d, .. } => {
            check_complex("constructor.c", c)?;
            check_complex("constructor.d", d)
        }
        Constructor::Weyl { block, .. } => {
            check_complex("constructor.block[0]", block[0])?;
            check_complex("constructor.block[1]", block[1])
        }
        Constructor::ParityLinked { .. } => Ok(()),
    }
}

fn check_momentum(m: &MomentumSpec) -> Result<(), CliError> {
    // m = 0 is a valid document; operations that need a mass reject it.
    if !(m.m >= 0.0) || !m.m.is_finite() {
        return Err(input_error(format!(
            "momentum.m must be nonnegative, got {}",
            m.m
        )));
    }
    if !(m.pmag >= 0.0) || !m.pmag.is_finite() {
        return Err(input_error(format!(
            "momentum.pmag must be nonnegative, got {}",
            m.pmag
        )));
    }
    match (m.theta, m.phi) {
        (Some(theta), Some(phi)) => check_angles("momentum", Angles { theta, phi }),
        (None, None) => Ok(()),
        _ => Err(input_error(
            "momentum.theta and momentum.phi must be given together",
        )),
    }
}

fn positive(name: &str, x: f64) -> Result<f64, CliError> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(input_error(format!("{name} must be positive, got {x}")))
    }
}

fn phase(name: &str, x: f64) -> Result<f64, CliError> {
    if (0.0..TAU).contains(&x) {
        Ok(x)
    } else {
        Err(input_error(format!("{name} = {x} outside [0, 2pi)")))
    }
}

/// Parses and validates a job document, applying `overrides` first.
pub fn parse_job(text: &str, overrides: &Overrides) -> Result<JobSpec, CliError> {
    let text = if text.trim().is_empty() { "{}" } else { text };
    let doc: JobDocument = serde_json::from_str(text)
        .map_err(|e| input_error(format!("malformed job document: {e}")))?;
    JobSpec::from_document(doc, overrides)
}

impl JobSpec {
    /// Validates a parsed document.
    pub fn from_document(doc: JobDocument, overrides: &Overrides) -> Result<JobSpec, CliError> {
        let mode = overrides.mode.or(doc.mode).ok_or_else(|| {
            input_error("mode is required (classify, symmetries, sample or verify)")
        })?;

        let input = match (doc.components, doc.constructor) {
            (Some(_), Some(_)) => {
                return Err(input_error(
                    "give either `components` or `constructor`, not both",
                ))
            }
            (Some(v), None) => Some(Input::Components(v)),
            (None, Some(c)) => Some(Input::Constructor(c)),
            (None, None) => None,
        };
        let single = matches!(mode, Mode::Classify | Mode::Symmetries);
        if single && input.is_none() {
            return Err(input_error(format!(
                "{} mode needs exactly one of `components` or `constructor`",
                mode.name()
            )));
        }
        if !single {
            if input.is_some()
                || doc.boost.is_some()
                || doc.direction.is_some()
                || doc.momentum.is_some()
            {
                return Err(input_error(format!(
                    "{} mode draws its own spinors; remove `components`, `constructor`, `boost`, `direction` and `momentum`",
                    mode.name()
                )));
            }
        } else if doc.population.is_some() || doc.seed.is_some() || doc.count.is_some() {
            return Err(input_error(format!(
                "`population`, `seed` and `count` apply to sample and verify modes, not {}",
                mode.name()
            )));
        }

        match input {
            Some(Input::Components(v)) => {
                for (i, z) in v.iter().enumerate() {
                    check_complex(&format!("components[{i}]"), *z)?;
                }
            }
            Some(Input::Constructor(c)) => check_constructor(&c)?,
            None => {}
        }
        if let Some(m) = &doc.momentum {
            check_momentum(m)?;
        }
        if let Some(d) = doc.direction {
            check_angles("direction", d)?;
        }

        let boost = doc.boost.unwrap_or(false);
        if mode == Mode::Symmetries && doc.momentum.is_none() {
            return Err(input_error("momentum required for Dirac residual"));
        }
        if matches!(
            input,
            Some(Input::Constructor(Constructor::ParityLinked { .. }))
        ) {
            if doc.momentum.is_none() {
                return Err(input_error(
                    "momentum required for parity_linked constructor",
                ));
            }
            if boost {
                return Err(input_error(
                    "parity_linked spinors are already boosted; drop `boost`",
                ));
            }
        }
        if boost && doc.momentum.is_none() {
            return Err(input_error("momentum required for boost"));
        }
        if let (Some(m), Some(Input::Components(_))) = (&doc.momentum, &input) {
            if m.pmag > 0.0 && (m.theta.is_none() || m.phi.is_none()) {
                return Err(input_error(
                    "momentum.theta and momentum.phi are required for raw components at nonzero pmag",
                ));
            }
        }

        let tol_doc = doc.tolerances.unwrap_or_default();
        let mut tolerance = Tolerance::DEFAULT;
        if let Some(x) = overrides.epsilon_class.or(tol_doc.epsilon_class) {
            tolerance = tolerance.with_class(positive("epsilon_class", x)?);
        }
        if let Some(x) = overrides.epsilon_helicity.or(tol_doc.epsilon_helicity) {
            tolerance = tolerance.with_helicity(positive("epsilon_helicity", x)?);
        }

        let ph = doc.phases.unwrap_or_default();
        let defaults = Phases::default();
        let phases = Phases {
            theta1: phase(
                "theta1",
                overrides.theta1.or(ph.theta1).unwrap_or(defaults.theta1),
            )?,
            theta2: phase(
                "theta2",
                overrides.theta2.or(ph.theta2).unwrap_or(defaults.theta2),
            )?,
        };

        let zetas = doc.zetas.unwrap_or([[1.0, 0.0], [1.0, 0.0]]);
        for (i, z) in zetas.iter().enumerate() {
            let modulus = complex(*z).norm();
            if !((modulus - 1.0).abs() <= 1e-12) {
                return Err(input_error(format!(
                    "zetas[{i}] must have unit modulus, got {modulus}"
                )));
            }
        }

        let (population, seed, count) = match mode {
            Mode::Sample | Mode::Verify => {
                if mode == Mode::Verify && doc.population.is_some() {
                    return Err(input_error("`population` applies to sample mode only"));
                }
                let default_count = if mode == Mode::Sample {
                    DEFAULT_SAMPLE_COUNT
                } else {
                    DEFAULT_VERIFY_COUNT
                };
                let count = overrides.count.or(doc.count).unwrap_or(default_count);
                if count == 0 {
                    return Err(input_error("count must be at least 1"));
                }
                (
                    doc.population.unwrap_or_default(),
                    overrides.seed.or(doc.seed).unwrap_or(0),
                    count,
                )
            }
            _ => (Population::default(), 0, 0),
        };

        Ok(JobSpec {
            mode,
            input,
            boost,
            momentum: doc.momentum,
            direction: doc.direction,
            tolerance,
            phases,
            zetas,
            population,
            seed,
            count,
        })
    }

    /// The normalized document: every default written out, irrelevant
    /// fields omitted. Parsing it back yields the same `JobSpec`.
    pub fn to_document(&self) -> JobDocument {
        let single = matches!(self.mode, Mode::Classify | Mode::Symmetries);
        let (components, constructor) = match self.input {
            Some(Input::Components(v)) => (Some(v), None),
            Some(Input::Constructor(c)) => (None, Some(c)),
            None => (None, None),
        };
        JobDocument {
            mode: Some(self.mode),
            components,
            constructor,
            boost: single.then_some(self.boost),
            momentum: self.momentum,
            direction: self.direction,
            tolerances: Some(TolerancesDoc {
                epsilon_class: Some(self.tolerance.class),
                epsilon_helicity: Some(self.tolerance.helicity),
            }),
            phases: Some(PhasesDoc {
                theta1: Some(self.phases.theta1),
                theta2: Some(self.phases.theta2),
            }),
            zetas: Some(self.zetas),
            population: (self.mode == Mode::Sample).then_some(self.population),
            seed: (!single).then_some(self.seed),
            count: (!single).then_some(self.count),
        }
    }
}
