//! Project files: the curated registry plus every setting needed to rerun the
//! pipeline, stored as TOML.
//!
//! ```toml
//! schema_version = 1
//! corpus_path = "texts"
//! glob = "*.txt"
//! encoding = "utf-8"
//!
//! [constraints]
//! min_length = 3
//! require_capitalized = true
//! min_count = 2
//!
//! [params]
//! delta_s = 40
//! f_t_char = 0.2
//! f_t_place = 0.4
//! i_t = 0.35
//! kernel = "linear"
//!
//! [[names]]
//! id = 0
//! type = "char"
//! variants = ["Hagen", "Hagene"]
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::analysis::{AnalysisParams, ParamError};
use crate::corpus::{CorpusSource, DEFAULT_ENCODING, DEFAULT_GLOB};
use crate::names::{NameEntry, NameRegistry, RegistryError};
use crate::wordlist::{ConstraintError, ExtractionConstraints};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum ProjectError {
    #[error("cannot read project file {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write project file {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed project file: {0}")]
    Parse(String),
    #[error("unsupported project schema_version {found} (this build reads {SCHEMA_VERSION})")]
    Version { found: i64 },
    #[error("registry invariant violated: {0}")]
    Invariant(#[from] RegistryError),
    #[error("invalid analysis parameters: {0}")]
    Params(#[from] ParamError),
    #[error("invalid extraction constraints: {0}")]
    Constraints(#[from] ConstraintError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectFile {
    pub corpus_path: PathBuf,
    pub glob: String,
    pub encoding: String,
    pub constraints: ExtractionConstraints,
    pub params: AnalysisParams,
    pub registry: NameRegistry,
}

impl ProjectFile {
    pub fn new(corpus_path: impl Into<PathBuf>) -> Self {
        ProjectFile {
            corpus_path: corpus_path.into(),
            glob: DEFAULT_GLOB.to_string(),
            encoding: DEFAULT_ENCODING.to_string(),
            constraints: ExtractionConstraints::default(),
            params: AnalysisParams::default(),
            registry: NameRegistry::new(),
        }
    }

    pub fn schema_version(&self) -> u32 {
        SCHEMA_VERSION
    }

    /// Corpus location; a relative `corpus_path` is taken relative to `base`
    /// (normally the directory holding the project file).
    pub fn corpus_source(&self, base: Option<&Path>) -> CorpusSource {
        let folder = match base {
            Some(base) if self.corpus_path.is_relative() => base.join(&self.corpus_path),
            _ => self.corpus_path.clone(),
        };
        CorpusSource {
            folder,
            glob: self.glob.clone(),
            encoding: self.encoding.clone(),
        }
    }

    pub fn to_toml(&self) -> Result<String, ProjectError> {
        let stored = StoredProject {
            schema_version: SCHEMA_VERSION,
            corpus_path: self.corpus_path.to_string_lossy().into_owned(),
            glob: self.glob.clone(),
            encoding: self.encoding.clone(),
            constraints: self.constraints,
            params: self.params,
            names: self.registry.entries().to_vec(),
        };
        toml::to_string(&stored).map_err(|e| ProjectError::Parse(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self, ProjectError> {
        // Check the version before the schema so newer files fail cleanly.
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| ProjectError::Parse(e.to_string()))?;
        match table.get("schema_version") {
            Some(toml::Value::Integer(v)) if *v == i64::from(SCHEMA_VERSION) => {}
            Some(toml::Value::Integer(v)) => return Err(ProjectError::Version { found: *v }),
            Some(_) => return Err(ProjectError::Parse("schema_version must be an integer".into())),
            None => return Err(ProjectError::Parse("missing schema_version".into())),
        }
        let stored: StoredProject = toml::from_str(text).map_err(|e| ProjectError::Parse(e.to_string()))?;
        stored.constraints.validate()?;
        stored.params.validate()?;
        Ok(ProjectFile {
            corpus_path: PathBuf::from(stored.corpus_path),
            glob: stored.glob,
            encoding: stored.encoding,
            constraints: stored.constraints,
            params: stored.params,
            registry: NameRegistry::from_entries(stored.names)?,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StoredProject {
    schema_version: u32,
    corpus_path: String,
    #[serde(default = "default_glob")]
    glob: String,
    #[serde(default = "default_encoding")]
    encoding: String,
    #[serde(default)]
    constraints: ExtractionConstraints,
    #[serde(default)]
    params: AnalysisParams,
    #[serde(default)]
    names: Vec<NameEntry>,
}

fn default_glob() -> String {
    DEFAULT_GLOB.to_string()
}

fn default_encoding() -> String {
    DEFAULT_ENCODING.to_string()
}

pub fn save_project(project: &ProjectFile, path: &Path) -> Result<(), ProjectError> {
    let text = project.to_toml()?;
    fs::write(path, text).map_err(|source| ProjectError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_project(path: &Path) -> Result<ProjectFile, ProjectError> {
    let text = fs::read_to_string(path).map_err(|source| ProjectError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    ProjectFile::from_toml(&text)
}
