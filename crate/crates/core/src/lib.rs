//! Core library for class-comment analysis: extraction of class-level
//! comments from Java, Python, and Smalltalk (Tonel) sources, an
//! information-type taxonomy with labeled datasets, text normalization,
//! TF-IDF plus heuristic-pattern features, binary-relevance classifiers,
//! stratified cross-validation, and guideline adherence checking.

pub mod textproc;
