//! File formats, result cache and the verification suite behind the `sg` tool.

pub mod cache;
pub mod checks;
pub mod format;
pub mod report;

pub use checks::{run_suite, Ctx};
pub use report::{CheckRecord, Status, VerificationReport};
