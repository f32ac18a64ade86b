//! File formats, law suites and the command-line frontend over
//! `weightkit-core`.

pub mod cli;
pub mod formats;
pub mod laws;
