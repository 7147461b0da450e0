use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("config {}: {message}", path.display())]
    Config { path: PathBuf, message: String },

    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },

    #[error("boundary meshes differ in geometry at face {face}")]
    GeometryMismatch { face: usize },

    #[error("optical mode {mode} has no boundary samples for mechanical mode {mech}")]
    MissingSamples { mode: String, mech: String },

    #[error("near-degenerate optical modes ({omega_a:e} vs {omega_b:e} rad/s)")]
    Degenerate { omega_a: f64, omega_b: f64 },

    #[error("empty volume grid")]
    EmptyGrid,

    #[error("fit: {0}")]
    Fit(String),

    #[error("unstable time step: dt*omega_m = {0} (must be < 0.3)")]
    UnstableStep(f64),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            message: message.into(),
        }
    }

    /// True for failures caused by missing or malformed input files, as
    /// opposed to physically invalid parameters or numerical failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Parse { .. } | Error::Config { .. }
        )
    }
}
