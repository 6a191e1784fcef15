//! File formats: structure and profile documents (JSON), lexicons (TSV) and
//! DOT export. All text is UTF-8 with LF line endings.

pub mod dot;
pub mod lexicon;
pub mod profile;
pub mod structure;

use serde::de::DeserializeOwned;

use crate::model::ValidationErrors;

pub use dot::to_dot;
pub use lexicon::parse_lexicon;
pub use profile::parse_profile;
pub use structure::{parse_structure, serialize_structure, StructureDocument};

/// Every variant carries a location: a line number or a key path.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("malformed input at line {line}, column {column} ({path}): {message}")]
    MalformedSyntax {
        line: usize,
        column: usize,
        path: String,
        message: String,
    },
    #[error("unknown key `{key}` at {path}")]
    UnknownKey { path: String, key: String },
    #[error("unknown word order `{value}` at {path}")]
    UnknownWordOrder { path: String, value: String },
    #[error("invalid value at {path}: {message}")]
    InvalidValue { path: String, message: String },
    #[error("duplicate morpheme rule ordinal {ordinal} at {path}")]
    DuplicateOrdinal { path: String, ordinal: u32 },
    #[error("second placement rule for category {category} at {path}")]
    DuplicateBranchRule { path: String, category: String },
    #[error("line {line}: {message}")]
    LexiconLine { line: usize, message: String },
    #[error("line {line}: duplicate entry for ({surface}, {category}), first defined on line {first_line}")]
    DuplicateLexeme {
        line: usize,
        first_line: usize,
        surface: String,
        category: String,
    },
    #[error("invalid structure: {0}")]
    Invalid(#[from] ValidationErrors),
}

impl FormatError {
    pub fn kind(&self) -> &'static str {
        match self {
            FormatError::MalformedSyntax { .. } => "MalformedSyntax",
            FormatError::UnknownKey { .. } => "UnknownKey",
            FormatError::UnknownWordOrder { .. } => "UnknownWordOrder",
            FormatError::InvalidValue { .. } => "InvalidValue",
            FormatError::DuplicateOrdinal { .. } => "DuplicateOrdinal",
            FormatError::DuplicateBranchRule { .. } => "DuplicateBranchRule",
            FormatError::LexiconLine { .. } => "LexiconLine",
            FormatError::DuplicateLexeme { .. } => "DuplicateLexeme",
            FormatError::Invalid(_) => "Invalid",
        }
    }

    /// Line number or key path of the problem.
    pub fn location(&self) -> String {
        match self {
            FormatError::MalformedSyntax { line, column, .. } => format!("line {line}, column {column}"),
            FormatError::UnknownKey { path, key } => join_path(path, key),
            FormatError::UnknownWordOrder { path, .. }
            | FormatError::InvalidValue { path, .. }
            | FormatError::DuplicateOrdinal { path, .. }
            | FormatError::DuplicateBranchRule { path, .. } => path.clone(),
            FormatError::LexiconLine { line, .. } | FormatError::DuplicateLexeme { line, .. } => {
                format!("line {line}")
            }
            FormatError::Invalid(errors) => errors.violations.first().map(|v| v.path.clone()).unwrap_or_default(),
        }
    }
}

fn join_path(parent: &str, key: &str) -> String {
    if parent.is_empty() || parent == "." {
        key.to_string()
    } else {
        format!("{parent}.{key}")
    }
}

/// Strict JSON decoding with key paths on every error.
pub(crate) fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        let message = inner.to_string();
        if let Some(key) = unknown_field(&message) {
            return FormatError::UnknownKey {
                path: trim_path(&path, &key),
                key,
            };
        }
        FormatError::MalformedSyntax {
            line: inner.line(),
            column: inner.column(),
            path,
            message: strip_position(&message),
        }
    })?;
    de.end().map_err(|inner| FormatError::MalformedSyntax {
        line: inner.line(),
        column: inner.column(),
        path: String::new(),
        message: strip_position(&inner.to_string()),
    })?;
    Ok(value)
}

fn unknown_field(message: &str) -> Option<String> {
    let rest = message.strip_prefix("unknown field `")?;
    Some(rest[..rest.find('`')?].to_string())
}

/// The reported path may or may not end in the offending key.
fn trim_path(path: &str, key: &str) -> String {
    if path == key {
        return String::new();
    }
    path.strip_suffix(key)
        .and_then(|p| p.strip_suffix('.'))
        .unwrap_or(path)
        .to_string()
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}
