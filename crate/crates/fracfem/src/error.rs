//! Error type shared across the library.

/// Library-wide error.
///
/// `Domain` marks inputs outside an operation's mathematical domain
/// (for example a positive Mittag-Leffler argument). `Invariant` marks a
/// numerical check that failed at run time (a residual out of tolerance,
/// a corrupt cache). `Config` marks an invalid experiment description.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain: {0}")]
    Domain(String),
    #[error("numerical invariant violated: {0}")]
    Invariant(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
