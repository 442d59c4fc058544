//! Orchestration of the GIT stability pipeline: configuration, commands,
//! the published reference data and the audit against it.
//!
//! The `gitstab` binary is a thin wrapper over [`commands`]; every command
//! builds one serializable report and renders it as text, JSON or DOT.
//! [`audit::run_audit`] recomputes every published table and figure of the
//! quintic-threefold analysis and reports, criterion by criterion, where the
//! computation agrees and where it does not.
//!
//! # Example
//!
//! ```
//! use gitstab_cli::commands::cmd_classify;
//! use gitstab_cli::config::{Format, RunConfig};
//!
//! let config = RunConfig::resolve(None, None, None, Format::Text).unwrap();
//! let out = cmd_classify(&config, "x0^5+x1^5+x2^5+x3^5+x4^5").unwrap();
//! assert!(out.text.starts_with("Stable"));
//! ```

pub mod audit;
pub mod commands;
pub mod config;
pub mod reference;
pub mod session;
