use std::path::PathBuf;

/// Error type shared by all evolab subsystems.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested resolvent point is too close to the spectrum.
    #[error("singular resolvent: distance {distance:.3e} to the spectrum is below threshold {threshold:.3e}")]
    SingularResolvent { distance: f64, threshold: f64 },

    /// An iterative solver failed to reach its tolerance.
    #[error("solver did not converge: relative residual {residual:.3e} after {iterations} iterations")]
    SolverDiverged { residual: f64, iterations: usize },

    /// Adaptive quadrature stalled above its tolerance.
    #[error("quadrature did not converge: relative change {relative_change:.3e} after {panels} panels")]
    QuadratureAccuracy { relative_change: f64, panels: usize },

    /// A degenerate or inconsistent geometric configuration.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A size guard was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Spectral content of a vector not covered by a truncated eigenbasis.
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// Config text could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
