use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("format error: {0}")]
    Format(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("configuration error: {0}")]
    Config(String),

    /// The service refused the request because a credit limit was reached.
    /// `resume_from_row` is filled in by the geocoder so a caller knows where
    /// to restart once the quota window has passed.
    #[error("quota exhausted: {message}{}", resume_hint(*.resume_from_row))]
    QuotaExhausted {
        message: String,
        resume_from_row: Option<usize>,
    },

    #[error("transport error: {0}")]
    Transport(String),

    #[error("geonames service error {code}: {message}")]
    Service { code: i64, message: String },
}

fn resume_hint(row: Option<usize>) -> String {
    match row {
        Some(row) => format!(" (resume from row {row})"),
        None => String::new(),
    }
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 3,
            Error::Format(_) => 4,
            Error::Validation(_) => 5,
            Error::Config(_) => 6,
            Error::QuotaExhausted { .. } => 7,
            Error::Transport(_) | Error::Service { .. } => 8,
        }
    }

    /// Short stable tag for one-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io",
            Error::Format(_) => "format",
            Error::Validation(_) => "validation",
            Error::Config(_) => "config",
            Error::QuotaExhausted { .. } => "quota",
            Error::Transport(_) => "transport",
            Error::Service { .. } => "service",
        }
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        match err.kind() {
            csv::ErrorKind::Io(_) => Error::Format(format!("csv i/o: {err}")),
            _ => Error::Format(format!("csv: {err}")),
        }
    }
}

/// Non-fatal diagnostics collected while processing. Each entry is also
/// emitted through `log::warn!`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Warnings(Vec<String>);

impl Warnings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, message: impl Into<String>) {
        let message = message.into();
        log::warn!("{message}");
        self.0.push(message);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn extend(&mut self, other: Warnings) {
        self.0.extend(other.0);
    }
}
