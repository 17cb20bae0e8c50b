//! IO, canned inputs, parallel searches and appendix replay on top of `ftv-core`.

pub mod appendix;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod scenario;
pub mod search;

pub use error::{CliError, Result};
