//! Batch interface: session files, commands, canonical JSON reports and the
//! corpus runner behind the `qgor` binary.

pub mod commands;
pub mod corpus;
pub mod report;
pub mod session;

pub use commands::{run_command, Command, Options, Output};
pub use corpus::{parse_expectations, run_corpus, CorpusSummary, Expectations};
pub use session::{parse_session, Session, SessionError};

pub const TOOL: &str = "qgor";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit codes: 0 computed, 1 usage or input error, 2 budget exhausted,
/// 3 internal consistency failure.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<qgor_core::Error> for CliError {
    fn from(e: qgor_core::Error) -> Self {
        let code = match &e {
            e if e.is_budget() => 2,
            qgor_core::Error::Invariant(_) | qgor_core::Error::RouteDisagreement { .. } => 3,
            _ => 1,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<SessionError> for CliError {
    fn from(e: SessionError) -> Self {
        Self::usage(e.to_string())
    }
}
