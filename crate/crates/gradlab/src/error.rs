use std::path::PathBuf;

use gradlab_core::error::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum GradlabError {
    /// JSON that does not parse or does not match the document shape.
    #[error("{file}line {line}, column {column}: {message}")]
    Syntax { file: String, line: usize, column: usize, message: String },
    /// Well-formed JSON with a bad value, located by its JSON path.
    #[error("{file}{path}: {message}")]
    Semantic { file: String, path: String, message: String },
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl GradlabError {
    pub(crate) fn semantic(path: impl Into<String>, message: impl Into<String>) -> Self {
        GradlabError::Semantic { file: String::new(), path: path.into(), message: message.into() }
    }

    pub(crate) fn from_json(e: serde_json::Error) -> Self {
        let mut message = e.to_string();
        if let Some(at) = message.rfind(" at line ") {
            message.truncate(at);
        }
        GradlabError::Syntax { file: String::new(), line: e.line(), column: e.column(), message }
    }

    /// Prefixes the location with a file name.
    pub fn in_file(self, name: &str) -> Self {
        let file = format!("{name}: ");
        match self {
            GradlabError::Syntax { line, column, message, .. } => GradlabError::Syntax { file, line, column, message },
            GradlabError::Semantic { path, message, .. } => GradlabError::Semantic { file, path, message },
            other => other,
        }
    }

    /// Parse and validation failures, as opposed to IO.
    pub fn is_input(&self) -> bool {
        !matches!(self, GradlabError::Io { .. })
    }
}

pub type Result<T> = std::result::Result<T, GradlabError>;
