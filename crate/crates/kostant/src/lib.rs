//! Report generation, text formats, reference oracles and self-checks on top
//! of `kostant-core`. The `kostant` binary is a thin clap front end over
//! [`report`] and [`checks`].

pub mod checks;
pub mod kltable;
pub mod oracle;
pub mod report;

/// Largest `n` accepted without `--force`.
pub const DEFAULT_N_LIMIT: usize = 8;

/// Largest `n` for which a full Kazhdan-Lusztig table is built without `--force`.
/// The table is dense in `|S_n|^2`, so `n = 7` already needs several gigabytes.
pub const DEFAULT_KL_LIMIT: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kostant_core::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("n = {n} exceeds the limit {limit} for {what}; pass --force to override")]
    Limit {
        n: usize,
        limit: usize,
        what: &'static str,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = Result<T, CliError>;
