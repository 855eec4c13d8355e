use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_SELFTEST: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INSIDE: u8 = 3;
pub const EXIT_NUMERIC: u8 = 4;

/// Everything a subcommand can fail with.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] ticf_core::Error),

    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{failed} of {total} checks failed")]
    SelfTest {
        failed: usize,
        total: usize,
        report: String,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use ticf_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::SelfTest { .. } => EXIT_SELFTEST,
            CliError::Core(e) => match e {
                E::Domain(_) | E::Geometry(_) => EXIT_USAGE,
                E::OriginInside | E::PointInside(_) => EXIT_INSIDE,
                E::Accuracy { .. }
                | E::Region { .. }
                | E::Pole(_)
                | E::Convergence(_)
                | E::Solver(_)
                | E::Fit { .. } => EXIT_NUMERIC,
            },
        }
    }

    /// Reason code printed as `error[<code>]` on stderr.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(e) => e.code(),
            CliError::Io { .. } => "io",
            CliError::SelfTest { .. } => "selftest",
        }
    }

    /// The single stderr line.
    pub fn render(&self) -> String {
        let message = self.to_string().replace('\n', " ");
        format!("error[{}]: {}", self.code(), message)
    }
}

pub type CliResult<T> = Result<T, CliError>;
