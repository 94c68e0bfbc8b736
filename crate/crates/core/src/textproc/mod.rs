//! Deterministic text normalization for comment text: sentence splitting,
//! tokenization, stopword removal, and stemming.
//!
//! Every operation here is a pure function of its input; the full pipeline
//! produces bit-identical output across platforms for identical input text.

mod porter;

pub use porter::porter_stem;

/// Version tag recorded in model files so a trained model pins the exact
/// normalization chain it was built with.
pub const CHAIN_VERSION: &str = "tokenize/1+stopwords/127+porter/1";

/// Embedded stopword list, one word per line.
const STOPWORDS_RAW: &str = include_str!("../../data/stopwords.txt");

/// One sentence of a comment, in order of appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub text: String,
    pub index: usize,
}

/// Ordered lowercase tokens. Tokens are never empty and contain no
/// whitespace.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenStream {
    pub tokens: Vec<String>,
}

impl TokenStream {
    pub fn new(tokens: Vec<String>) -> Self {
        TokenStream { tokens }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.tokens.iter()
    }
}

fn is_sentence_terminator(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

/// A period does not end a sentence inside a dotted abbreviation ("e.g.",
/// "i.e.": a single letter itself preceded by a period) or after "etc".
fn period_is_guarded(chars: &[char], i: usize) -> bool {
    let mut start = i;
    while start > 0 && chars[start - 1].is_alphabetic() {
        start -= 1;
    }
    let run = i - start;
    if run == 1 {
        return start > 0 && chars[start - 1] == '.';
    }
    let word: String = chars[start..i].iter().collect::<String>().to_lowercase();
    word == "etc"
}

/// Split text into sentences on `.`, `!` or `?` followed by whitespace or
/// end of input, and on blank lines. Empty input yields no sentences.
pub fn split_sentences(text: &str) -> Vec<Sentence> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut current = String::new();
    let push = |s: &mut String, out: &mut Vec<Sentence>| {
        let trimmed = s.trim();
        if !trimmed.is_empty() {
            out.push(Sentence {
                text: trimmed.to_string(),
                index: out.len(),
            });
        }
        s.clear();
    };

    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            // A blank line (possibly containing other whitespace) ends the
            // current sentence.
            let mut j = i + 1;
            while j < chars.len() && chars[j] != '\n' && chars[j].is_whitespace() {
                j += 1;
            }
            if j < chars.len() && chars[j] == '\n' {
                push(&mut current, &mut sentences);
                i = j;
                continue;
            }
            current.push(' ');
            i += 1;
            continue;
        }
        current.push(c);
        if is_sentence_terminator(c) {
            let at_end = i + 1 >= chars.len();
            let before_ws = !at_end && chars[i + 1].is_whitespace();
            if (at_end || before_ws) && !(c == '.' && period_is_guarded(&chars, i)) {
                push(&mut current, &mut sentences);
            }
        }
        i += 1;
    }
    push(&mut current, &mut sentences);
    sentences
}

/// Lowercase and split on non-alphanumeric characters. `@word` annotations
/// become `ann_word` tokens; pure-number tokens longer than six digits are
/// dropped.
pub fn tokenize(text: &str) -> TokenStream {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '@' && (i == 0 || chars[i - 1].is_whitespace()) {
            let start = i + 1;
            let mut end = start;
            while end < chars.len() && chars[end].is_alphanumeric() {
                end += 1;
            }
            if end > start {
                let word: String = chars[start..end].iter().collect();
                tokens.push(format!("ann_{}", word.to_lowercase()));
                i = end;
                continue;
            }
            i += 1;
            continue;
        }
        if c.is_alphanumeric() {
            let start = i;
            let mut end = i;
            while end < chars.len() && chars[end].is_alphanumeric() {
                end += 1;
            }
            let word: String = chars[start..end].iter().collect::<String>().to_lowercase();
            let pure_number = word.chars().all(|c| c.is_ascii_digit());
            if !(pure_number && word.len() > 6) {
                tokens.push(word);
            }
            i = end;
            continue;
        }
        i += 1;
    }
    TokenStream::new(tokens)
}

fn stopword_set() -> &'static std::collections::HashSet<&'static str> {
    static SET: std::sync::OnceLock<std::collections::HashSet<&'static str>> =
        std::sync::OnceLock::new();
    SET.get_or_init(|| STOPWORDS_RAW.lines().collect())
}

/// True if `token` is on the embedded stopword list. Annotation tokens
/// (`ann_*`) are never stopwords.
pub fn is_stopword(token: &str) -> bool {
    if token.starts_with("ann_") {
        return false;
    }
    stopword_set().contains(token)
}

/// Remove stopwords from a lowercase token stream.
pub fn remove_stopwords(stream: &TokenStream) -> TokenStream {
    TokenStream::new(
        stream
            .tokens
            .iter()
            .filter(|t| !is_stopword(t))
            .cloned()
            .collect(),
    )
}

/// Full normalization chain used for term features: tokenize, drop
/// stopwords, stem.
pub fn preprocess(text: &str) -> TokenStream {
    let tokens = remove_stopwords(&tokenize(text));
    TokenStream::new(tokens.tokens.iter().map(|t| porter_stem(t)).collect())
}
