//! Job files, sampling campaigns, the invariant suite and reports on top of
//! `spinorlab-core`.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod error;
pub mod job;
pub mod json;
pub mod report;
pub mod run;
pub mod sample;
pub mod verify;

pub use error::CliError;
pub use job::{parse_job, JobSpec, Mode, Overrides};
pub use report::{render, Format};
pub use run::{run_job, Report};
