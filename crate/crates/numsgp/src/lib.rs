//! Command line, parallel census and output formats for `numsgp-core`.

pub mod cli;
pub mod json;
pub mod parallel;
pub mod render;
pub mod verify;

pub use parallel::census_parallel;
