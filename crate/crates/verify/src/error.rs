use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("suite {suite}: sampler starved, predicate `{predicate}` rejected every recent draw")]
    Starvation { suite: String, predicate: &'static str },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
