//! Class-comment extraction from Java, Python, and Smalltalk (Tonel) source
//! files.
//!
//! The scanners here are lexical: they track string, comment, and
//! brace/indent state but build no syntax tree. That is enough to locate
//! class declarations and the comment blocks attached to them, and it keeps
//! the three languages uniform.

mod java;
mod python;
mod tonel;

use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

/// Source languages with class-comment extraction support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    Java,
    Python,
    Smalltalk,
}

impl Language {
    pub fn as_str(&self) -> &'static str {
        match self {
            Language::Java => "java",
            Language::Python => "python",
            Language::Smalltalk => "smalltalk",
        }
    }
}

impl std::fmt::Display for Language {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "java" => Ok(Language::Java),
            "python" | "py" => Ok(Language::Python),
            "smalltalk" | "tonel" | "st" => Ok(Language::Smalltalk),
            other => Err(format!("unknown language: {other}")),
        }
    }
}

/// Map a file extension to its language. Returns `None` for anything the
/// toolkit does not extract from.
pub fn detect_language(path: &Path) -> Option<Language> {
    match path.extension()?.to_str()? {
        "java" => Some(Language::Java),
        "py" => Some(Language::Python),
        "st" => Some(Language::Smalltalk),
        _ => None,
    }
}

/// One source file with its language resolved and content normalized to
/// UTF-8 text with `\n` line endings.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub path: String,
    pub language: Language,
    pub content: String,
    /// Number of invalid UTF-8 byte sequences replaced while decoding.
    pub replaced_sequences: usize,
}

impl SourceFile {
    /// Build a source file from raw bytes, replacing invalid UTF-8 and
    /// normalizing line endings.
    pub fn from_bytes(path: &str, language: Language, bytes: &[u8]) -> SourceFile {
        let mut replaced = 0usize;
        let mut rest = bytes;
        let mut text = String::with_capacity(bytes.len());
        loop {
            match std::str::from_utf8(rest) {
                Ok(s) => {
                    text.push_str(s);
                    break;
                }
                Err(e) => {
                    let valid = e.valid_up_to();
                    text.push_str(std::str::from_utf8(&rest[..valid]).unwrap());
                    text.push('\u{FFFD}');
                    replaced += 1;
                    let skip = e.error_len().unwrap_or(rest.len() - valid);
                    rest = &rest[valid + skip..];
                }
            }
        }
        let content = text.replace("\r\n", "\n").replace('\r', "\n");
        SourceFile {
            path: path.to_string(),
            language,
            content,
            replaced_sequences: replaced,
        }
    }

    pub fn new(path: &str, language: Language, content: &str) -> SourceFile {
        SourceFile::from_bytes(path, language, content.as_bytes())
    }
}

/// One extracted class-level comment. Serializes in the JSON-Lines record
/// layout used by the `extract` output and the labeled dataset format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassComment {
    pub id: String,
    pub language: Language,
    pub class_name: String,
    pub raw_text: String,
    pub start_line: usize,
    pub end_line: usize,
    pub declaration_line: usize,
    pub path: String,
}

/// A class declaration found by the scanner, with or without a comment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDeclaration {
    pub class_name: String,
    pub declaration_line: usize,
    pub has_comment: bool,
}

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("{path}:{line}: unbalanced {delimiter} delimiter")]
    UnbalancedDelimiter {
        path: String,
        line: usize,
        delimiter: &'static str,
    },
}

/// A comment region paired with the declaration it documents, before id
/// assignment. Produced by the per-language scanners.
#[derive(Debug, Clone)]
pub(crate) struct ScannedClass {
    pub name: String,
    pub declaration_line: usize,
    pub comment: Option<ScannedComment>,
}

#[derive(Debug, Clone)]
pub(crate) struct ScannedComment {
    pub raw_text: String,
    pub start_line: usize,
    pub end_line: usize,
}

fn scan(file: &SourceFile) -> Result<Vec<ScannedClass>, ExtractError> {
    match file.language {
        Language::Java => java::scan(&file.content, &file.path),
        Language::Python => python::scan(&file.content, &file.path),
        Language::Smalltalk => tonel::scan(&file.content, &file.path),
    }
}

/// Extract all class comments from one file, in declaration order. Classes
/// without a qualifying comment produce no record.
pub fn extract_class_comments(file: &SourceFile) -> Result<Vec<ClassComment>, ExtractError> {
    let classes = scan(file)?;
    let mut seen: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let mut out = Vec::new();
    for class in classes {
        let ordinal = seen.entry(class.name.clone()).or_insert(0);
        let current = *ordinal;
        *ordinal += 1;
        if let Some(comment) = class.comment {
            out.push(ClassComment {
                id: format!("{}:{}:{}", file.path, class.name, current),
                language: file.language,
                class_name: class.name,
                raw_text: comment.raw_text,
                start_line: comment.start_line,
                end_line: comment.end_line,
                declaration_line: class.declaration_line,
                path: file.path.clone(),
            });
        }
    }
    Ok(out)
}

/// List every class declaration in the file with a flag telling whether
/// `extract_class_comments` yields a record for it.
pub fn extract_class_declarations(
    file: &SourceFile,
) -> Result<Vec<ClassDeclaration>, ExtractError> {
    Ok(scan(file)?
        .into_iter()
        .map(|c| ClassDeclaration {
            class_name: c.name,
            declaration_line: c.declaration_line,
            has_comment: c.comment.is_some(),
        })
        .collect())
}

/// Strip the common leading whitespace of all non-empty lines, trim
/// trailing whitespace per line, and drop leading/trailing blank lines.
pub(crate) fn dedent_and_trim(lines: &[String]) -> String {
    let indent = lines
        .iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.len() - l.trim_start().len())
        .min()
        .unwrap_or(0);
    let mut cleaned: Vec<&str> = lines
        .iter()
        .map(|l| {
            if l.trim().is_empty() {
                ""
            } else {
                l[indent..].trim_end()
            }
        })
        .collect();
    while cleaned.first().is_some_and(|l| l.is_empty()) {
        cleaned.remove(0);
    }
    while cleaned.last().is_some_and(|l| l.is_empty()) {
        cleaned.pop();
    }
    cleaned.join("\n")
}
