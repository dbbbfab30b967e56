//! Loading a folder of plain-text files into an ordered, tokenized corpus.
//!
//! Token positions are per document. Distances between occurrences are only
//! ever measured inside one document, so a file boundary acts as an infinite
//! gap.

use std::fs;
use std::path::{Path, PathBuf};

use encoding_rs::Encoding;
use rayon::prelude::*;
use unicode_normalization::char::is_combining_mark;

pub const DEFAULT_GLOB: &str = "*.txt";
pub const DEFAULT_ENCODING: &str = "utf-8";

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("no input: {path} {reason}")]
    NoInput { path: PathBuf, reason: &'static str },
    #[error("cannot decode {file} as {encoding}")]
    Encoding { file: PathBuf, encoding: String },
    #[error("unknown text encoding label `{0}`")]
    UnknownEncoding(String),
    #[error("invalid file glob `{pattern}`: {message}")]
    InvalidGlob { pattern: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub doc_id: String,
    pub ordinal: usize,
    pub tokens: Vec<Token>,
}

impl Document {
    pub fn new(doc_id: impl Into<String>, ordinal: usize, text: &str) -> Self {
        Document {
            doc_id: doc_id.into(),
            ordinal,
            tokens: tokenize(text),
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// An ordered, immutable collection of tokenized documents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    documents: Vec<Document>,
    total_tokens: usize,
}

impl Corpus {
    /// Builds a corpus from documents, re-sorting them by ordinal.
    ///
    /// Panics if two documents share a `doc_id`.
    pub fn from_documents(mut documents: Vec<Document>) -> Self {
        documents.sort_by_key(|d| d.ordinal);
        let mut ids: Vec<&str> = documents.iter().map(|d| d.doc_id.as_str()).collect();
        ids.sort_unstable();
        assert!(
            ids.windows(2).all(|w| w[0] != w[1]),
            "duplicate doc_id in corpus"
        );
        let total_tokens = documents.iter().map(Document::len).sum();
        Corpus {
            documents,
            total_tokens,
        }
    }

    /// Convenience constructor: one document per `(doc_id, text)` pair, in order.
    pub fn from_texts<I, S, T>(texts: I) -> Self
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let docs = texts
            .into_iter()
            .enumerate()
            .map(|(i, (id, text))| Document::new(id, i, text.as_ref()))
            .collect();
        Self::from_documents(docs)
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn total_tokens(&self) -> usize {
        self.total_tokens
    }
}

/// Where and how to read the corpus from disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSource {
    pub folder: PathBuf,
    pub glob: String,
    pub encoding: String,
}

impl CorpusSource {
    pub fn new(folder: impl Into<PathBuf>) -> Self {
        CorpusSource {
            folder: folder.into(),
            glob: DEFAULT_GLOB.to_string(),
            encoding: DEFAULT_ENCODING.to_string(),
        }
    }

    pub fn load(&self) -> Result<Corpus, CorpusError> {
        load_corpus_with(&self.folder, &self.glob, &self.encoding)
    }
}

/// Loads every `*.txt` file in `folder`, decoded with the given encoding label.
pub fn load_corpus(folder: &Path, encoding: &str) -> Result<Corpus, CorpusError> {
    load_corpus_with(folder, DEFAULT_GLOB, encoding)
}

pub fn load_corpus_with(folder: &Path, glob: &str, encoding: &str) -> Result<Corpus, CorpusError> {
    let encoding_impl = Encoding::for_label(encoding.trim().as_bytes())
        .ok_or_else(|| CorpusError::UnknownEncoding(encoding.to_string()))?;
    let pattern = glob::Pattern::new(glob).map_err(|e| CorpusError::InvalidGlob {
        pattern: glob.to_string(),
        message: e.to_string(),
    })?;

    if !folder.is_dir() {
        return Err(CorpusError::NoInput {
            path: folder.to_path_buf(),
            reason: "is not a readable folder",
        });
    }
    let entries = fs::read_dir(folder).map_err(|source| CorpusError::Io {
        path: folder.to_path_buf(),
        source,
    })?;

    let mut files: Vec<(String, PathBuf)> = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|source| CorpusError::Io {
            path: folder.to_path_buf(),
            source,
        })?;
        let path = entry.path();
        if !path.is_file() {
            continue;
        }
        let Some(file_name) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        if pattern.matches(file_name) {
            files.push((file_name.to_string(), path));
        }
    }
    if files.is_empty() {
        return Err(CorpusError::NoInput {
            path: folder.to_path_buf(),
            reason: "contains no matching text files",
        });
    }
    files.sort_by(|a, b| a.0.cmp(&b.0));

    // Collecting an indexed parallel iterator keeps filename order.
    let documents = files
        .par_iter()
        .enumerate()
        .map(|(ordinal, (_, path))| {
            let bytes = fs::read(path).map_err(|source| CorpusError::Io {
                path: path.clone(),
                source,
            })?;
            let text = decode(&bytes, encoding_impl).ok_or_else(|| CorpusError::Encoding {
                file: path.clone(),
                encoding: encoding_impl.name().to_string(),
            })?;
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok(Document::new(stem, ordinal, &text))
        })
        .collect::<Result<Vec<_>, CorpusError>>()?;

    Ok(Corpus::from_documents(disambiguate_ids(documents)))
}

fn decode(bytes: &[u8], encoding: &'static Encoding) -> Option<String> {
    // A UTF-8 BOM is tolerated; anything malformed is an error, never replaced.
    let bytes = if encoding == encoding_rs::UTF_8 {
        bytes.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(bytes)
    } else {
        bytes
    };
    encoding
        .decode_without_bom_handling_and_without_replacement(bytes)
        .map(|cow| cow.into_owned())
}

// "a.txt" and "a.md" share a stem; fall back to the full file name order suffix.
fn disambiguate_ids(mut documents: Vec<Document>) -> Vec<Document> {
    let mut seen = std::collections::HashMap::<String, usize>::new();
    for doc in &mut documents {
        let n = seen.entry(doc.doc_id.clone()).or_insert(0);
        if *n > 0 {
            doc.doc_id = format!("{}~{}", doc.doc_id, n);
        }
        *n += 1;
    }
    documents
}

fn is_connector(c: char) -> bool {
    matches!(
        c,
        '\'' | '\u{2019}' | '\u{02BC}' | '-' | '\u{2010}' | '\u{2011}'
    )
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || is_combining_mark(c) || is_connector(c)
}

/// Splits text into word tokens.
///
/// Any character that is not a letter, digit, combining mark, apostrophe or
/// hyphen separates words. Each fragment then loses leading and trailing
/// non-letters (a combining mark stays when it follows a letter), and
/// fragments left without a letter are dropped.
pub fn tokenize(text: &str) -> Vec<Token> {
    text.split(|c: char| !is_word_char(c))
        .filter_map(strip_edges)
        .enumerate()
        .map(|(position, text)| Token {
            text: text.to_string(),
            position,
        })
        .collect()
}

fn strip_edges(fragment: &str) -> Option<&str> {
    let start = fragment.find(char::is_alphabetic)?;
    let rest = &fragment[start..];
    let mut end = 0;
    let mut after_letter = false;
    for (i, c) in rest.char_indices() {
        if c.is_alphabetic() {
            after_letter = true;
            end = i + c.len_utf8();
        } else if after_letter && is_combining_mark(c) {
            end = i + c.len_utf8();
        } else {
            after_letter = false;
        }
    }
    Some(&rest[..end])
}
