//! Executes a validated job.

use spinorlab_core::classify::{classify_report, ClassReport};
use spinorlab_core::factory::{
    boost, build_dual_helicity, build_self_conjugate, build_single_helicity, build_singular_form,
    build_weyl, parity_linked, RestSpinorSpec,
};
use spinorlab_core::symmetries::{symmetry_report, SymmetryReport};
use spinorlab_core::{BiSpinor, Block, Direction, FourMomentum};

use crate::error::CliError;
use crate::job::{complex, Angles, Constructor, Input, JobSpec, Mode, MomentumSpec};
use crate::sample::{run_campaign, SampleSummary};
use crate::verify::{run_suite, SuiteConfig, SuiteSummary};

/// Results of a single-spinor job.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    /// The spinor analysed, after any boost.
    pub spinor: BiSpinor,
    /// Momentum, when the job gave one.
    pub momentum: Option<FourMomentum>,
    /// Bilinears, class and helicity.
    pub class: ClassReport,
    /// Symmetry diagnostics, in symmetries mode.
    pub symmetry: Option<SymmetryReport>,
}

/// What a job produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// classify or symmetries.
    Analysis(Box<Analysis>),
    /// sample.
    Sample(Box<SampleSummary>),
    /// verify.
    Verify(SuiteSummary),
}

/// A job together with its results.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    /// The validated job.
    pub job: JobSpec,
    /// Results.
    pub outcome: Outcome,
}

impl Report {
    /// False only for a verify run with a failing property.
    pub fn passed(&self) -> bool {
        match &self.outcome {
            Outcome::Verify(s) => s.passed,
            _ => true,
        }
    }
}

fn direction(context: &str, a: Angles) -> Result<Direction, CliError> {
    Direction::new(a.theta, a.phi).map_err(|e| CliError::domain(context, e))
}

fn build_input(input: &Input, job: &JobSpec) -> Result<BiSpinor, CliError> {
    let c = |z| complex(z);
    let built = match *input {
        Input::Components(v) => return Ok(BiSpinor::new(v.map(complex))),
        Input::Constructor(ctor) => {
            let dir = ctor
                .angles()
                .map(|a| direction("constructor direction", a))
                .transpose()?;
            match ctor {
                Constructor::SingleHelicity { pair, a, c: cc, .. } => {
                    build_single_helicity(pair.0, c(a), c(cc), dir.expect("angles"))
                }
                Constructor::DualHelicity { pair, a, c: cc, .. } => {
                    build_dual_helicity(pair.0, c(a), c(cc), dir.expect("angles"))
                }
                Constructor::SingularForm { b, c: cc, d } => build_singular_form(c(b), c(cc), c(d)),
                Constructor::SelfConjugate { sign, c: cc, d } => {
                    build_self_conjugate(sign.0, c(cc), c(d))
                }
                Constructor::Weyl { which, block } => {
                    build_weyl(which.into(), Block::new(c(block[0]), c(block[1])))
                }
                Constructor::ParityLinked { helicity, .. } => {
                    let dir = dir.expect("angles");
                    let spec = job.momentum.expect("validated: parity_linked has momentum");
                    let p = momentum(&spec, Some(dir))?;
                    let rest = RestSpinorSpec::with_phases(helicity.0, dir, spec.m, job.phases);
                    parity_linked(&rest, &p)
                }
            }
        }
    };
    built.map_err(|e| {
        let family = match input {
            Input::Constructor(c) => c.family(),
            Input::Components(_) => "components",
        };
        CliError::domain(format!("building {family} spinor"), e)
    })
}

/// Momentum angles come from the job, else from `fallback`, else `+z`.
fn momentum(spec: &MomentumSpec, fallback: Option<Direction>) -> Result<FourMomentum, CliError> {
    let dir = match (spec.theta, spec.phi) {
        (Some(theta), Some(phi)) => direction("momentum direction", Angles { theta, phi })?,
        _ => fallback.unwrap_or(Direction::Z),
    };
    FourMomentum::new(spec.m, spec.pmag, dir).map_err(|e| CliError::domain("momentum", e))
}

fn analyse(job: &JobSpec) -> Result<Analysis, CliError> {
    let input = job
        .input
        .as_ref()
        .expect("validated: single-spinor job has input");
    let mut spinor = build_input(input, job)?;
    let p = job
        .momentum
        .as_ref()
        .map(|m| match spinor.origin().boost {
            Some(b) => Ok(b.momentum),
            None => momentum(m, spinor.natural_direction()),
        })
        .transpose()?;
    if job.boost {
        let p = p.as_ref().expect("validated: boost has momentum");
        spinor = boost(&spinor, p).map_err(|e| CliError::domain("boosting spinor", e))?;
    }
    let helicity_direction = job
        .direction
        .map(|a| direction("direction", a))
        .transpose()?;
    let class = classify_report(&spinor, helicity_direction, &job.tolerance)
        .map_err(|e| CliError::domain("classifying spinor", e))?;
    let symmetry = if job.mode == Mode::Symmetries {
        let p = p.as_ref().expect("validated: symmetries has momentum");
        Some(
            symmetry_report(
                &spinor,
                p,
                job.phases,
                job.zetas.map(complex),
                &job.tolerance,
            )
            .map_err(|e| CliError::domain("symmetry diagnostics", e))?,
        )
    } else {
        None
    };
    Ok(Analysis {
        spinor,
        momentum: p,
        class,
        symmetry,
    })
}

/// Runs `job`.
pub fn run_job(job: &JobSpec) -> Result<Report, CliError> {
    let outcome = match job.mode {
        Mode::Classify | Mode::Symmetries => Outcome::Analysis(Box::new(analyse(job)?)),
        Mode::Sample => Outcome::Sample(Box::new(run_campaign(job)?)),
        Mode::Verify => Outcome::Verify(run_suite(&SuiteConfig {
            seed: job.seed,
            draws: job.count,
            tolerance: job.tolerance,
            phases: job.phases,
        })),
    };
    Ok(Report { job: *job, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::{parse_job, Overrides};
    use spinorlab_core::spinor::Sign;
    use spinorlab_core::LounestoClass;

    fn run(text: &str) -> Result<Report, CliError> {
        run_job(&parse_job(text, &Overrides::default())?)
    }

    fn analysis(report: &Report) -> &Analysis {
        match &report.outcome {
            Outcome::Analysis(a) => a,
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn classify_dirac_type_spinor() {
        let r = run(
            r#"{"mode": "classify", "components": [[1,0],[0,0],[1,0],[0,0]],
                        "momentum": {"m": 1, "pmag": 0}}"#,
        )
        .unwrap();
        let a = analysis(&r);
        assert_eq!(a.class.class, LounestoClass::Class(2));
        assert_eq!(a.class.bilinears.sigma, 2.0);
    }

    #[test]
    fn self_conjugate_symmetries() {
        let r = run(r#"{"mode": "symmetries",
                        "constructor": {"family": "self_conjugate", "sign": "+", "c": [0,0], "d": [1,0]},
                        "momentum": {"m": 1, "pmag": 0}}"#)
        .unwrap();
        let sym = analysis(&r).symmetry.unwrap();
        assert_eq!(sym.charge.verdict.eigenvalue, Some(Sign::Plus));
        assert!(sym.dirac[0] > 0.1 && sym.dirac[1] > 0.1);
    }

    #[test]
    fn domain_errors_have_exit_code_three() {
        let err =
            run(r#"{"mode": "classify", "components": [[0,0],[0,0],[0,0],[0,0]]}"#).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let err = run(
            r#"{"mode": "classify", "constructor": {"family": "single_helicity", "pair": "++",
                          "a": [1,0], "c": [1,0], "theta": 3.141592653589793, "phi": 0}}"#,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 3, "{err}");
    }

    #[test]
    fn boosted_parity_linked_spinor_is_dirac() {
        let r = run(r#"{"mode": "symmetries",
                        "constructor": {"family": "parity_linked", "helicity": "+", "theta": 0.8, "phi": 2.0},
                        "momentum": {"m": 1.5, "pmag": 40}}"#)
        .unwrap();
        let sym = analysis(&r).symmetry.unwrap();
        assert!(sym.dirac[0] < 1e-12);
        assert_eq!(sym.parity.unwrap().eigenvalue, Some(Sign::Plus));
    }
}
