//! Lexical scanner for Java class comments.
//!
//! Tracks line/block comments, string and char literals (including text
//! blocks), and brace depth. A `/** ... */` block is attached to the next
//! `class`/`interface`/`enum` declaration when only whitespace, annotations,
//! and modifier keywords stand between them.

use super::{dedent_and_trim, ExtractError, ScannedClass, ScannedComment};

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "abstract",
    "static",
    "final",
    "strictfp",
    "sealed",
    "non-sealed",
];

struct DocBlock {
    start_line: usize,
    end_line: usize,
    /// Char index just past the closing `*/`.
    end_idx: usize,
    text: String,
}

pub(crate) fn scan(content: &str, path: &str) -> Result<Vec<ScannedClass>, ExtractError> {
    let chars: Vec<char> = content.chars().collect();
    let n = chars.len();
    let mut line = 1usize;
    let mut i = 0usize;

    let mut docs: Vec<DocBlock> = Vec::new();
    let mut classes: Vec<ScannedClass> = Vec::new();
    let mut depth = 0usize;
    // Stack of (dotted name, depth of the scope's opening brace).
    let mut scopes: Vec<(String, usize)> = Vec::new();
    // Declaration waiting for its opening brace: (simple name, line, keyword
    // start index).
    let mut pending: Option<(String, usize, usize)> = None;

    while i < n {
        let c = chars[i];
        match c {
            '\n' => {
                line += 1;
                i += 1;
            }
            '/' if i + 1 < n && chars[i + 1] == '/' => {
                while i < n && chars[i] != '\n' {
                    i += 1;
                }
            }
            '/' if i + 1 < n && chars[i + 1] == '*' => {
                let open_line = line;
                let is_doc = i + 2 < n && chars[i + 2] == '*' && !(i + 3 < n && chars[i + 3] == '/');
                let body_start = if is_doc { i + 3 } else { i + 2 };
                let mut j = body_start;
                let mut block_line = line;
                loop {
                    if j + 1 >= n {
                        return Err(ExtractError::UnbalancedDelimiter {
                            path: path.to_string(),
                            line: open_line,
                            delimiter: "/*",
                        });
                    }
                    if chars[j] == '*' && chars[j + 1] == '/' {
                        break;
                    }
                    if chars[j] == '\n' {
                        block_line += 1;
                    }
                    j += 1;
                }
                if is_doc {
                    let text: String = chars[body_start..j].iter().collect();
                    docs.push(DocBlock {
                        start_line: open_line,
                        end_line: block_line,
                        end_idx: j + 2,
                        text,
                    });
                }
                line = block_line;
                i = j + 2;
            }
            '"' => {
                if i + 2 < n && chars[i + 1] == '"' && chars[i + 2] == '"' {
                    // Text block: scan to the closing triple quote.
                    let open_line = line;
                    let mut j = i + 3;
                    loop {
                        if j + 2 >= n {
                            return Err(ExtractError::UnbalancedDelimiter {
                                path: path.to_string(),
                                line: open_line,
                                delimiter: "\"\"\"",
                            });
                        }
                        if chars[j] == '\\' {
                            if j + 1 < n && chars[j + 1] == '\n' {
                                line += 1;
                            }
                            j += 2;
                            continue;
                        }
                        if chars[j] == '"' && chars[j + 1] == '"' && chars[j + 2] == '"' {
                            break;
                        }
                        if chars[j] == '\n' {
                            line += 1;
                        }
                        j += 1;
                    }
                    i = j + 3;
                } else {
                    // Ordinary string literal; a newline also ends the
                    // scan so malformed input cannot swallow the file.
                    i += 1;
                    while i < n && chars[i] != '"' && chars[i] != '\n' {
                        if chars[i] == '\\' {
                            i += 1;
                        }
                        i += 1;
                    }
                    if i < n && chars[i] == '"' {
                        i += 1;
                    }
                }
            }
            '\'' => {
                i += 1;
                while i < n && chars[i] != '\'' && chars[i] != '\n' {
                    if chars[i] == '\\' {
                        i += 1;
                    }
                    i += 1;
                }
                if i < n && chars[i] == '\'' {
                    i += 1;
                }
            }
            '{' => {
                depth += 1;
                if let Some((name, decl_line, kw_idx)) = pending.take() {
                    let dotted = qualified_name(&scopes, &name);
                    let comment = attach_doc(&docs, &chars, kw_idx);
                    classes.push(ScannedClass {
                        name: dotted.clone(),
                        declaration_line: decl_line,
                        comment,
                    });
                    scopes.push((dotted, depth));
                }
                i += 1;
            }
            '}' => {
                if scopes.last().is_some_and(|(_, d)| *d == depth) {
                    scopes.pop();
                }
                depth = depth.saturating_sub(1);
                i += 1;
            }
            ';' => {
                pending = None;
                i += 1;
            }
            c if c.is_alphabetic() || c == '_' || c == '$' => {
                let start = i;
                while i < n && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '$') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let preceded_by_dot = start > 0 && chars[start - 1] == '.';
                if !preceded_by_dot && matches!(word.as_str(), "class" | "interface" | "enum") {
                    let decl_line = line;
                    let mut j = i;
                    let mut skipped_newlines = 0usize;
                    while j < n && chars[j].is_whitespace() {
                        if chars[j] == '\n' {
                            skipped_newlines += 1;
                        }
                        j += 1;
                    }
                    if j < n && (chars[j].is_alphabetic() || chars[j] == '_' || chars[j] == '$') {
                        let name_start = j;
                        while j < n
                            && (chars[j].is_alphanumeric() || chars[j] == '_' || chars[j] == '$')
                        {
                            j += 1;
                        }
                        let name: String = chars[name_start..j].iter().collect();
                        pending = Some((name, decl_line, start));
                        line += skipped_newlines;
                        i = j;
                    }
                }
            }
            _ => {
                i += 1;
            }
        }
    }
    Ok(classes)
}

fn qualified_name(scopes: &[(String, usize)], simple: &str) -> String {
    match scopes.last() {
        Some((outer, _)) => format!("{outer}.{simple}"),
        None => simple.to_string(),
    }
}

/// Nearest preceding doc block whose gap to the keyword contains only
/// whitespace, annotations, and modifiers.
fn attach_doc(docs: &[DocBlock], chars: &[char], kw_idx: usize) -> Option<ScannedComment> {
    let doc = docs.iter().rev().find(|d| d.end_idx <= kw_idx)?;
    let gap: String = chars[doc.end_idx..kw_idx].iter().collect();
    if !gap_is_clean(&gap) {
        return None;
    }
    Some(ScannedComment {
        raw_text: clean_doc_text(&doc.text),
        start_line: doc.start_line,
        end_line: doc.end_line,
    })
}

/// Accepts whitespace, `@Annotation` (with optional balanced argument
/// list), and modifier keywords. Anything else breaks the association.
fn gap_is_clean(gap: &str) -> bool {
    let chars: Vec<char> = gap.chars().collect();
    let n = chars.len();
    let mut i = 0;
    while i < n {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        if chars[i] == '@' {
            i += 1;
            let start = i;
            while i < n && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            if i == start {
                return false;
            }
            let mut j = i;
            while j < n && chars[j].is_whitespace() {
                j += 1;
            }
            if j < n && chars[j] == '(' {
                let mut paren = 0usize;
                let mut in_str = false;
                while j < n {
                    let c = chars[j];
                    if in_str {
                        if c == '\\' {
                            j += 1;
                        } else if c == '"' {
                            in_str = false;
                        }
                    } else if c == '"' {
                        in_str = true;
                    } else if c == '(' {
                        paren += 1;
                    } else if c == ')' {
                        paren -= 1;
                        if paren == 0 {
                            j += 1;
                            break;
                        }
                    }
                    j += 1;
                }
                if paren != 0 {
                    return false;
                }
                i = j;
            }
            continue;
        }
        if chars[i].is_alphabetic() {
            let start = i;
            while i < n && (chars[i].is_alphanumeric() || chars[i] == '-') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if !MODIFIERS.contains(&word.as_str()) {
                return false;
            }
            continue;
        }
        return false;
    }
    true
}

/// Strip `*` gutters and common indentation from the body of a doc block.
fn clean_doc_text(inner: &str) -> String {
    let lines: Vec<String> = inner
        .split('\n')
        .map(|l| {
            let trimmed = l.trim_start();
            if let Some(rest) = trimmed.strip_prefix('*') {
                rest.strip_prefix(' ').unwrap_or(rest).to_string()
            } else {
                l.to_string()
            }
        })
        .collect();
    dedent_and_trim(&lines)
}

#[cfg(test)]
mod tests {
    use super::super::{extract_class_comments, extract_class_declarations, Language, SourceFile};

    fn file(src: &str) -> SourceFile {
        SourceFile::new("T.java", Language::Java, src)
    }

    #[test]
    fn doc_with_annotation_gap() {
        let f = file("/** Parses X. */ @Deprecated class P {}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].class_name, "P");
        assert_eq!(got[0].raw_text, "Parses X.");
        assert_eq!((got[0].start_line, got[0].end_line), (1, 1));
        assert_eq!(got[0].declaration_line, 1);
    }

    #[test]
    fn modifiers_do_not_break_association() {
        let f = file("/** A base. */\npublic final class Base {}\n");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].raw_text, "A base.");
        assert_eq!(got[0].declaration_line, 2);
    }

    #[test]
    fn statements_between_break_association() {
        let f = file("/** Doc. */ int x; class A {}");
        let got = extract_class_comments(&f).unwrap();
        assert!(got.is_empty());
        let decls = extract_class_declarations(&f).unwrap();
        assert_eq!(decls.len(), 1);
        assert!(!decls[0].has_comment);
    }

    #[test]
    fn non_doc_comments_ignored() {
        let f = file("/* plain */\n// line\nclass A {}");
        assert!(extract_class_comments(&f).unwrap().is_empty());
    }

    #[test]
    fn gutter_stripped_multiline() {
        let f = file("/**\n * Maps keys.\n * Second line.\n */\nclass M {}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got[0].raw_text, "Maps keys.\nSecond line.");
        assert_eq!((got[0].start_line, got[0].end_line), (1, 4));
    }

    #[test]
    fn doc_inside_string_not_extracted() {
        let f = file("class A { String s = \"/** not a doc */ class Fake\"; }\n/** Real. */\nclass B {}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].class_name, "B");
    }

    #[test]
    fn nested_classes_dotted_names() {
        let f = file("/** Outer. */\nclass Outer {\n  /** Inner. */\n  class Inner {}\n}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].class_name, "Outer");
        assert_eq!(got[1].class_name, "Outer.Inner");
        assert_eq!(got[1].declaration_line, 4);
    }

    #[test]
    fn interface_and_enum_count() {
        let f = file("/** I. */\ninterface I {}\n/** E. */\nenum E { A, B }");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].class_name, "I");
        assert_eq!(got[1].class_name, "E");
    }

    #[test]
    fn class_literal_is_not_a_declaration() {
        let f = file("class A { Object o = String.class; }");
        let decls = extract_class_declarations(&f).unwrap();
        assert_eq!(decls.len(), 1);
        assert_eq!(decls[0].class_name, "A");
    }

    #[test]
    fn nearest_doc_wins() {
        let f = file("/** Far. */\n/** Near. */\nclass A {}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got[0].raw_text, "Near.");
    }

    #[test]
    fn doc_not_reused_for_second_class() {
        let f = file("/** Only for A. */\nclass A {}\nclass B {}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].class_name, "A");
    }

    #[test]
    fn unbalanced_block_comment_reports_position() {
        let f = file("class A {}\n/** unterminated\nclass B {}");
        let err = extract_class_comments(&f).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("T.java:2"), "{msg}");
    }

    #[test]
    fn multiline_annotation_arguments_allowed() {
        let f = file("/** Doc. */\n@SuppressWarnings({\n  \"a\", \"b\"\n})\nclass A {}");
        let got = extract_class_comments(&f).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].declaration_line, 5);
    }

    #[test]
    fn empty_file_yields_nothing() {
        let f = file("");
        assert!(extract_class_comments(&f).unwrap().is_empty());
        assert!(extract_class_declarations(&f).unwrap().is_empty());
    }
}
