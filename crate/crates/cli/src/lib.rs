//! Command-line front end for `conicgin`: single computations (`gin`,
//! `resolve`, `limit`) and the `verify` sweep, writing JSON, CSV and SVG
//! into an output directory with a file cache for oracle runs.

pub mod args;
pub mod cache;
pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

pub use args::Cli;
pub use commands::run;
pub use config::RunConfig;
