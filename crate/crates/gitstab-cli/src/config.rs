//! Run configuration: the monomial profile and the output format.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

/// Name of the environment variable holding a default profile `n,d`.
pub const PROFILE_VAR: &str = "GITSTAB_PROFILE";

/// Output format of a command.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Aligned text tables.
    #[default]
    Text,
    /// JSON for machine consumption.
    Json,
    /// Graphviz DOT (graphs only).
    Dot,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Dot => "dot",
        })
    }
}

/// A monomial profile: number of variables and degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    /// Number of variables.
    pub n_vars: usize,
    /// Degree of the hypersurface.
    pub degree: u32,
}

impl Profile {
    /// Quintic threefolds: five variables, degree five.
    pub const QUINTIC: Profile = Profile { n_vars: 5, degree: 5 };

    /// Whether this is the quintic profile, for which the published tables
    /// apply.
    pub fn is_quintic(&self) -> bool {
        *self == Self::QUINTIC
    }
}

impl FromStr for Profile {
    type Err = anyhow::Error;

    /// Parses `n,d`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = s
            .split_once(',')
            .with_context(|| format!("profile {s:?} is not of the form n,d"))?;
        let n_vars: usize = n.trim().parse().with_context(|| format!("bad variable count {n:?}"))?;
        let degree: u32 = d.trim().parse().with_context(|| format!("bad degree {d:?}"))?;
        if n_vars == 0 || degree == 0 {
            bail!("profile {s:?}: variables and degree must be at least 1");
        }
        Ok(Profile { n_vars, degree })
    }
}

/// Everything a command needs besides its own arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// The monomial profile.
    pub profile: Profile,
    /// The output format.
    pub format: Format,
}

impl RunConfig {
    /// Resolves the profile with precedence flags > environment > `(5,5)`.
    ///
    /// `env` is the value of [`PROFILE_VAR`], if set. Either flag overrides
    /// the corresponding half of the environment profile.
    pub fn resolve(n: Option<usize>, d: Option<u32>, env: Option<&str>, format: Format) -> Result<Self> {
        let base = match env {
            Some(v) if !v.trim().is_empty() => {
                v.parse::<Profile>().with_context(|| format!("invalid {PROFILE_VAR}"))?
            }
            _ => Profile::QUINTIC,
        };
        let profile = Profile {
            n_vars: n.unwrap_or(base.n_vars),
            degree: d.unwrap_or(base.degree),
        };
        if profile.n_vars == 0 || profile.degree == 0 {
            bail!("--n and --d must be at least 1");
        }
        Ok(RunConfig { profile, format })
    }
}
