//! Library side of the `twopair` command: sweeps, single-angle reports and
//! the verification suite. The binary in `main.rs` only parses arguments.

pub mod angle;
pub mod clone;
pub mod error;
pub mod format;
pub mod sweep;
pub mod verify;

pub use angle::parse_angle;
pub use error::CliError;
pub use format::sig;
pub use sweep::{run_sweep, write_csv, RunConfig, SweepRow};
pub use verify::{run_verify, PropertyResult, VerifyConfig};
