//! Seeded random draws and the sample-mode campaign.
//!
//! Distributions:
//! - raw spinors: eight real parts uniform on `[−1, 1]`, redrawn while `ψ†ψ < 1e−6`;
//! - directions: `cos θ` uniform on `[−1, 1]`, `φ` uniform on `[0, 2π)`, redrawn
//!   within `1e−6` of a pole in `cos θ`;
//! - amplitudes: real and imaginary parts uniform on `[−1, 1]`; pairs are
//!   redrawn when either modulus is below `1e−3` of their joint norm;
//! - momenta: `m` log-uniform on `[0.1, 10]`, `|p|/m` log-uniform on `[1e−3, 1e3]`.
//!
//! Each property or campaign owns a ChaCha8 stream derived from the seed,
//! so results do not depend on evaluation order.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use spinorlab_core::classify::{classify_report, Finding, HelicityCategory};
use spinorlab_core::factory::{
    boost, build_dual_helicity, build_self_conjugate, build_single_helicity, build_singular_form,
    build_weyl, parity_linked, Phases, RestSpinorSpec,
};
use spinorlab_core::spinor::{HelicityPair, Sign, WeylBlock};
use spinorlab_core::symmetries::symmetry_report;
use spinorlab_core::{BiSpinor, Block, Direction, FourMomentum, LounestoClass, Tolerance, C64};

use crate::error::CliError;
use crate::job::{complex, JobSpec};

/// Draws with `ψ†ψ` below this are redrawn.
pub const MIN_NORM_SQR: f64 = 1e-6;
/// Directions with `|cos θ| > 1 − POLE_EXCLUSION` are redrawn.
pub const POLE_EXCLUSION: f64 = 1e-6;
/// Smallest modulus of an amplitude relative to its partner's joint norm.
pub const MIN_RELATIVE_AMPLITUDE: f64 = 1e-3;
/// Mass range, sampled log-uniformly.
pub const MASS_RANGE: (f64, f64) = (0.1, 10.0);
/// Range of `|p|/m`, sampled log-uniformly.
pub const RAPIDITY_RANGE: (f64, f64) = (1e-3, 1e3);

/// A ChaCha8 generator on stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Which spinors a sample campaign draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Population {
    /// Uniform raw components.
    #[default]
    RandomRaw,
    /// `build_single_helicity`, subclass steered uniformly among 1, 2, 3.
    SingleHelicity,
    /// `build_dual_helicity`.
    DualHelicity,
    /// `build_singular_form`.
    SingularForm,
    /// `build_self_conjugate`.
    SelfConjugate,
    /// `build_weyl`.
    Weyl,
    /// `parity_linked`.
    ParityLinked,
}

impl Population {
    /// Name used in job files and reports.
    pub fn name(self) -> &'static str {
        match self {
            Population::RandomRaw => "random_raw",
            Population::SingleHelicity => "single_helicity",
            Population::DualHelicity => "dual_helicity",
            Population::SingularForm => "singular_form",
            Population::SelfConjugate => "self_conjugate",
            Population::Weyl => "weyl",
            Population::ParityLinked => "parity_linked",
        }
    }
}

/// Classes a draw may land in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    /// Exactly this class.
    Exactly(u8),
    /// Class 4 or 5.
    Singular,
    /// No prediction.
    Any,
}

impl Expected {
    /// Whether `class` meets the prediction.
    pub fn admits(self, class: LounestoClass) -> bool {
        match (self, class.index()) {
            (Expected::Any, _) => true,
            (Expected::Exactly(k), Some(n)) => k == n,
            (Expected::Singular, Some(n)) => n == 4 || n == 5,
            _ => false,
        }
    }
}

/// One draw from a population, before any boost.
#[derive(Debug, Clone, Copy)]
pub struct Draw {
    /// The spinor; parity-linked draws are already at `momentum`.
    pub spinor: BiSpinor,
    /// Predicted class.
    pub expected: Expected,
    /// Momentum the draw is analysed at, along the spinor's direction when it has one.
    pub momentum: FourMomentum,
}

/// A random generator together with the number of redraws it needed.
#[derive(Debug, Clone)]
pub struct Sampler<R> {
    rng: R,
    rejected: u64,
}

impl Sampler<ChaCha8Rng> {
    /// Sampler on stream `stream` of `seed`.
    pub fn seeded(seed: u64, stream: u64) -> Self {
        Sampler::new(stream_rng(seed, stream))
    }
}

impl<R: Rng> Sampler<R> {
    /// Wraps a generator.
    pub fn new(rng: R) -> Self {
        Sampler { rng, rejected: 0 }
    }

    /// Draws redrawn so far.
    pub fn rejected(&self) -> u64 {
        self.rejected
    }

    /// Uniform on `[−1, 1]`.
    pub fn unit(&mut self) -> f64 {
        self.rng.random_range(-1.0..=1.0)
    }

    /// Uniform on `[0, 2π)`.
    pub fn angle(&mut self) -> f64 {
        self.rng.random_range(0.0..TAU)
    }

    /// A fair coin.
    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    /// `+` or `−` with equal probability.
    pub fn sign(&mut self) -> Sign {
        if self.coin() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Log-uniform on `[lo, hi]`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let t: f64 = self.rng.random_range(0.0..=1.0);
        (lo.ln() + t * (hi.ln() - lo.ln())).exp()
    }

    /// Real and imaginary parts uniform on `[−1, 1]`.
    pub fn complex(&mut self) -> C64 {
        C64::new(self.unit(), self.unit())
    }

    /// `e^{iα}` with `α` uniform.
    pub fn unit_phase(&mut self) -> C64 {
        C64::from_polar(1.0, self.angle())
    }

    fn redraw_until<T>(&mut self, mut draw: impl FnMut(&mut Self) -> Option<T>) -> T {
        loop {
            if let Some(x) = draw(self) {
                return x;
            }
            self.rejected += 1;
        }
    }

    /// A raw spinor with `ψ†ψ ≥ 1e−6`.
    pub fn spinor(&mut self) -> BiSpinor {
        self.redraw_until(|s| {
            let psi = BiSpinor::new([s.complex(), s.complex(), s.complex(), s.complex()]);
            (psi.norm_sqr() >= MIN_NORM_SQR).then_some(psi)
        })
    }

    /// A two-component block with squared norm at least `1e−6`.
    pub fn block(&mut self) -> Block {
        self.redraw_until(|s| {
            let b = Block::new(s.complex(), s.complex());
            (b.norm_sqr() >= MIN_NORM_SQR).then_some(b)
        })
    }

    /// Uniform on the sphere away from the poles.
    pub fn direction(&mut self) -> Direction {
        self.redraw_until(|s| {
            let z = s.unit();
            let phi = s.angle();
            if z.abs() > 1.0 - POLE_EXCLUSION {
                return None;
            }
            Direction::new(z.acos(), phi).ok()
        })
    }

    /// Two amplitudes, neither small relative to the pair.
    pub fn amplitude_pair(&mut self) -> (C64, C64) {
        self.redraw_until(|s| {
            let (a, c) = (s.complex(), s.complex());
            balanced(&[a, c]).then_some((a, c))
        })
    }

    /// On-shell momentum along `direction` with `|p|/m ≤ max_ratio`.
    pub fn momentum(&mut self, direction: Direction, max_ratio: f64) -> FourMomentum {
        let m = self.log_uniform(MASS_RANGE.0, MASS_RANGE.1);
        let ratio = self.log_uniform(RAPIDITY_RANGE.0, max_ratio);
        FourMomentum::new(m, m * ratio, direction).expect("sampled momentum is valid")
    }

    /// Single-helicity spinor steered into a uniformly chosen regular subclass:
    /// `c = λa` with `λ` generic (class 1), real (class 2) or imaginary (class 3).
    pub fn single_helicity(&mut self) -> (BiSpinor, u8) {
        let class = self.rng.random_range(1..=3u8);
        let pair = if self.coin() {
            HelicityPair::PLUS_PLUS
        } else {
            HelicityPair::MINUS_MINUS
        };
        let direction = self.direction();
        let (a, c) = self.redraw_until(|s| {
            let a = s.complex();
            let c = match class {
                1 => {
                    let c = s.complex();
                    let w = a.conj() * c;
                    let floor = MIN_RELATIVE_AMPLITUDE * w.norm();
                    (w.re.abs() >= floor && w.im.abs() >= floor).then_some(c)?
                }
                2 => a * s.unit(),
                _ => a * C64::new(0.0, s.unit()),
            };
            balanced(&[a, c]).then_some((a, c))
        });
        let psi = build_single_helicity(pair, a, c, direction).expect("nonsingular draw");
        (psi, class)
    }

    /// Dual-helicity spinor with a random pair.
    pub fn dual_helicity(&mut self) -> BiSpinor {
        let pair = if self.coin() {
            HelicityPair::PLUS_MINUS
        } else {
            HelicityPair::MINUS_PLUS
        };
        let direction = self.direction();
        let (a, c) = self.amplitude_pair();
        build_dual_helicity(pair, a, c, direction).expect("nonsingular draw")
    }

    /// `(−b c d*/|c|², b, c, d)` with `b`, `c` not small.
    pub fn singular_form(&mut self) -> BiSpinor {
        let (b, c, d) = self.redraw_until(|s| {
            let (b, c, d) = (s.complex(), s.complex(), s.complex());
            balanced(&[b, c]).then_some((b, c, d))
        });
        build_singular_form(b, c, d).expect("c is nonzero")
    }

    /// Charge-conjugation eigenspinor with a random sign and block.
    pub fn self_conjugate(&mut self) -> BiSpinor {
        let sign = self.sign();
        let b = self.block();
        build_self_conjugate(sign, b[0], b[1]).expect("block is nonzero")
    }

    /// Weyl-type spinor with a random populated block.
    pub fn weyl(&mut self) -> BiSpinor {
        let which = if self.coin() {
            WeylBlock::RightOnly
        } else {
            WeylBlock::LeftOnly
        };
        let b = self.block();
        build_weyl(which, b).expect("block is nonzero")
    }

    /// Parity-linked spinor at a random momentum with `|p|/m ≤ max_ratio`.
    pub fn parity_linked(&mut self, phases: Phases, max_ratio: f64) -> (BiSpinor, FourMomentum) {
        let helicity = self.sign();
        let direction = self.direction();
        let p = self.momentum(direction, max_ratio);
        let spec = RestSpinorSpec::with_phases(helicity, direction, p.mass(), phases);
        (
            parity_linked(&spec, &p).expect("valid parity-linked draw"),
            p,
        )
    }

    /// One draw from `population`. Constructor outputs are boosted to the
    /// drawn momentum, which points along their own direction.
    pub fn draw(&mut self, population: Population, phases: Phases) -> Result<Draw, CliError> {
        let (spinor, expected) = match population {
            Population::ParityLinked => {
                let (spinor, momentum) = self.parity_linked(phases, RAPIDITY_RANGE.1);
                return Ok(Draw {
                    spinor,
                    expected: Expected::Exactly(2),
                    momentum,
                });
            }
            Population::RandomRaw => (self.spinor(), Expected::Any),
            Population::SingleHelicity => {
                let (psi, class) = self.single_helicity();
                (psi, Expected::Exactly(class))
            }
            Population::DualHelicity => (self.dual_helicity(), Expected::Singular),
            Population::SingularForm => (self.singular_form(), Expected::Singular),
            Population::SelfConjugate => (self.self_conjugate(), Expected::Exactly(5)),
            Population::Weyl => (self.weyl(), Expected::Exactly(6)),
        };
        match spinor.natural_direction() {
            Some(d) => {
                let momentum = self.momentum(d, RAPIDITY_RANGE.1);
                let spinor =
                    boost(&spinor, &momentum).map_err(|e| CliError::domain("boosting draw", e))?;
                Ok(Draw {
                    spinor,
                    expected,
                    momentum,
                })
            }
            None => {
                let d = self.direction();
                let momentum = self.momentum(d, RAPIDITY_RANGE.1);
                Ok(Draw {
                    spinor,
                    expected,
                    momentum,
                })
            }
        }
    }
}

/// Each modulus is at least `MIN_RELATIVE_AMPLITUDE` of the joint norm.
fn balanced(values: &[C64]) -> bool {
    let total: f64 = values.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    total > 0.0
        && values
            .iter()
            .all(|z| z.norm() >= MIN_RELATIVE_AMPLITUDE * total)
}

/// Counts of each outcome of an eigen test.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerdictCounts {
    /// Eigenvalue `+1`.
    pub plus: u64,
    /// Eigenvalue `−1`.
    pub minus: u64,
    /// Neither.
    pub none: u64,
    /// Test not applicable.
    pub unavailable: u64,
}

impl VerdictCounts {
    fn record(&mut self, verdict: Option<Option<Sign>>) {
        match verdict {
            Some(Some(Sign::Plus)) => self.plus += 1,
            Some(Some(Sign::Minus)) => self.minus += 1,
            Some(None) => self.none += 1,
            None => self.unavailable += 1,
        }
    }
}

/// Largest absolute identity residuals.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FpkMaxima {
    /// `J·J − (σ² + ω²)`.
    pub current_square: f64,
    /// `J·K`.
    pub orthogonality: f64,
    /// `J·J + K·K`.
    pub null_sum: f64,
}

/// Aggregated results of a sample campaign. Only counts and extrema are
/// kept, so the result does not depend on the order of evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSummary {
    /// Population drawn.
    pub population: Population,
    /// Draws analysed.
    pub draws: u64,
    /// Redraws needed by the rejection rules.
    pub rejected: u64,
    /// Class index (or `"unclassifiable"`) to count.
    pub classes: BTreeMap<String, u64>,
    /// Helicity category to count.
    pub categories: BTreeMap<String, u64>,
    /// Finding kind to count.
    pub findings: BTreeMap<String, u64>,
    /// Draws whose class missed the constructor's prediction.
    pub expected_class_misses: u64,
    /// Identity residual maxima.
    pub fpk_max: FpkMaxima,
    /// Charge-conjugation verdicts.
    pub charge: VerdictCounts,
    /// Parity verdicts; unavailable for raw draws at nonzero momentum.
    pub parity: VerdictCounts,
    /// Dirac equation with `+m` (plus), `−m` (minus), or neither, at the exact tolerance.
    pub dirac: VerdictCounts,
    /// Smallest Dirac residual over both branches.
    pub dirac_min: f64,
    /// Largest collinearity defect, for dual-helicity draws.
    pub dirac_flip_max: Option<f64>,
    /// Largest Θ-link residual.
    pub theta_link_max: f64,
}

fn finding_key(f: &Finding) -> &'static str {
    match f {
        Finding::NoDirection => "no_direction",
        Finding::HelicityNotAligned => "helicity_not_aligned",
        Finding::AnnotationMismatch { .. } => "annotation_mismatch",
        Finding::Unclassifiable => "unclassifiable",
    }
}

/// Class key used in count tables.
pub fn class_key(class: LounestoClass) -> String {
    match class.index() {
        Some(n) => n.to_string(),
        None => "unclassifiable".to_string(),
    }
}

/// Runs a sample-mode job.
pub fn run_campaign(job: &JobSpec) -> Result<SampleSummary, CliError> {
    let tol: Tolerance = job.tolerance;
    let zetas = job.zetas.map(complex);
    let mut sampler = Sampler::seeded(job.seed, 0);
    let mut classes: BTreeMap<String, u64> = (1..=6).map(|n| (n.to_string(), 0)).collect();
    classes.insert("unclassifiable".into(), 0);
    let mut categories: BTreeMap<String, u64> = [
        HelicityCategory::Single,
        HelicityCategory::Dual,
        HelicityCategory::NotWellDefined,
        HelicityCategory::NonEigen,
    ]
    .iter()
    .map(|c| (c.label().to_string(), 0))
    .collect();
    let mut findings = BTreeMap::new();
    let mut summary = SampleSummary {
        population: job.population,
        draws: job.count,
        rejected: 0,
        classes: BTreeMap::new(),
        categories: BTreeMap::new(),
        findings: BTreeMap::new(),
        expected_class_misses: 0,
        fpk_max: FpkMaxima::default(),
        charge: VerdictCounts::default(),
        parity: VerdictCounts::default(),
        dirac: VerdictCounts::default(),
        dirac_min: f64::INFINITY,
        dirac_flip_max: None,
        theta_link_max: 0.0,
    };

    for _ in 0..job.count {
        let draw = sampler.draw(job.population, job.phases)?;
        let p = draw.momentum;
        let helicity_direction = draw.spinor.natural_direction().unwrap_or(p.direction());
        let report = classify_report(&draw.spinor, Some(helicity_direction), &tol)
            .map_err(|e| CliError::domain("classifying draw", e))?;
        *classes.entry(class_key(report.class)).or_default() += 1;
        if let Some(h) = &report.helicity {
            *categories
                .entry(h.category.label().to_string())
                .or_default() += 1;
        }
        for f in &report.findings {
            *findings.entry(finding_key(f).to_string()).or_default() += 1;
        }
        if !draw.expected.admits(report.class) {
            summary.expected_class_misses += 1;
        }
        let fpk = &mut summary.fpk_max;
        fpk.current_square = fpk.current_square.max(report.fpk.current_square.abs());
        fpk.orthogonality = fpk.orthogonality.max(report.fpk.orthogonality.abs());
        fpk.null_sum = fpk.null_sum.max(report.fpk.null_sum.abs());

        let sym = symmetry_report(&draw.spinor, &p, job.phases, zetas, &tol)
            .map_err(|e| CliError::domain("symmetry diagnostics of draw", e))?;
        summary.charge.record(Some(sym.charge.verdict.eigenvalue));
        summary.parity.record(sym.parity.map(|v| v.eigenvalue));
        let dirac = if sym.dirac[0] < tol.exact {
            Some(Sign::Plus)
        } else if sym.dirac[1] < tol.exact {
            Some(Sign::Minus)
        } else {
            None
        };
        summary.dirac.record(Some(dirac));
        summary.dirac_min = summary.dirac_min.min(sym.dirac[0].min(sym.dirac[1]));
        if let Some(flip) = sym.dirac_flip {
            summary.dirac_flip_max = Some(summary.dirac_flip_max.unwrap_or(0.0).max(flip));
        }
        summary.theta_link_max = summary.theta_link_max.max(sym.theta_link);
    }
    summary.rejected = sampler.rejected();
    summary.classes = classes;
    summary.categories = categories;
    summary.findings = findings;
    Ok(summary)
}
