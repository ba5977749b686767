use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown name `{name}`")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: `{name}` is already declared")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Core {
        line: usize,
        #[source]
        source: contact_core::Error,
    },
    #[error("{context}: {source}")]
    Command {
        context: String,
        #[source]
        source: contact_core::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit status: 2 for input problems, 1 for failures while running.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Command { .. } => 1,
            _ => 2,
        }
    }
}
