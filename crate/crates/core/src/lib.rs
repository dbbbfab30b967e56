//! Character and place interaction networks from literary text.
//!
//! The crate covers the whole path from a folder of chapter files to a
//! Graphviz DOT file:
//!
//! 1. [`corpus`] tokenizes the text files.
//! 2. [`wordlist`] lists candidate name words for a human curator.
//! 3. [`names`] holds the curated names, their variants and types.
//! 4. [`analysis`] scores frequencies and proximity-weighted interactions and
//!    applies thresholds.
//! 5. [`graphout`] writes the resulting network as DOT.
//!
//! [`project`] persists a curation session, [`cli`] and [`service`] are the
//! command-line and HTTP front ends. See the `examples/` directory for one
//! runnable program per stage.

pub mod analysis;
pub mod cli;
pub mod corpus;
pub mod graphout;
pub mod names;
pub mod pipeline;
pub mod project;
pub mod service;
pub mod wordlist;

pub use analysis::{AnalysisParams, KernelKind, NetworkModel, ProximityKernel};
pub use corpus::{load_corpus, tokenize, Corpus, CorpusError, Document, Token};
pub use graphout::{emit_dot, DotStyle};
pub use names::{NameEntry, NameId, NameRegistry, NameType, RegistryError};
pub use project::{load_project, save_project, ProjectError, ProjectFile};
pub use wordlist::{extract_raw_words, ExtractionConstraints, RawWordTable};
