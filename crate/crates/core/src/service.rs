//! Local HTTP API backing the curation UI.
//!
//! | method | path                          | purpose                                  |
//! |--------|-------------------------------|------------------------------------------|
//! | POST   | `/projects`                   | open a folder or project file            |
//! | GET    | `/projects/{id}/raw-words`    | paginated raw-word list                  |
//! | POST   | `/projects/{id}/registry`     | `add_name`, `add_variant`, `remove_name` |
//! | GET    | `/projects/{id}/network`      | recompute the network for given params   |
//! | POST   | `/projects/{id}/save`         | write the project file                   |
//! | GET    | `/projects/{id}/export.gv`    | DOT text for the current params          |
//!
//! Bodies are JSON. Each session is guarded by one mutex, so a mutation and
//! the cache invalidation it causes are observed together or not at all.
//! Every response is computed by the same library calls the CLI uses.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{index_occurrences, AnalysisParams, KernelKind, OccurrenceIndex, ParamError};
use crate::corpus::{Corpus, CorpusError, CorpusSource};
use crate::graphout::DotStyle;
use crate::names::{NameEntry, NameId, NameType, RegistryError};
use crate::pipeline::{analyze_index, NetworkReport};
use crate::project::{load_project, save_project, ProjectError, ProjectFile};
use crate::wordlist::{extract_raw_words, ExtractionConstraints, RawWordTable};

/// Cache instrumentation, reported with every network response.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SessionStats {
    pub corpus_loads: u64,
    pub index_builds: u64,
    pub index_reuses: u64,
    pub raw_word_builds: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum RegistryOp {
    AddName {
        main_variant: String,
        #[serde(rename = "type")]
        ntype: NameType,
    },
    AddVariant {
        name_id: NameId,
        variant: String,
    },
    RemoveName {
        name_id: NameId,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum OpenError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Project(#[from] ProjectError),
}

/// One curation session: project state plus caches derived from it.
#[derive(Debug)]
pub struct Session {
    project: ProjectFile,
    // Directory relative corpus paths are resolved against.
    base: Option<PathBuf>,
    corpus: Arc<Corpus>,
    raw_words: Option<RawWordTable>,
    index: Option<OccurrenceIndex>,
    stats: SessionStats,
}

impl Session {
    pub fn open_folder(source: CorpusSource) -> Result<Self, OpenError> {
        let corpus = source.load()?;
        let mut project = ProjectFile::new(&source.folder);
        project.glob = source.glob;
        project.encoding = source.encoding;
        Ok(Self::with_corpus(project, None, corpus))
    }

    pub fn open_project(path: &Path) -> Result<Self, OpenError> {
        let project = load_project(path)?;
        let base = path.parent().map(Path::to_path_buf);
        let corpus = project.corpus_source(base.as_deref()).load()?;
        Ok(Self::with_corpus(project, base, corpus))
    }

    fn with_corpus(project: ProjectFile, base: Option<PathBuf>, corpus: Corpus) -> Self {
        Session {
            project,
            base,
            corpus: Arc::new(corpus),
            raw_words: None,
            index: None,
            stats: SessionStats {
                corpus_loads: 1,
                ..Default::default()
            },
        }
    }

    pub fn project(&self) -> &ProjectFile {
        &self.project
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    pub fn stats(&self) -> SessionStats {
        self.stats
    }

    pub fn raw_words(&mut self, constraints: &ExtractionConstraints) -> &RawWordTable {
        let stale = self.raw_words.as_ref().is_none_or(|t| t.constraints() != constraints);
        if stale {
            self.stats.raw_word_builds += 1;
            self.raw_words = Some(extract_raw_words(&self.corpus, constraints));
        }
        self.raw_words.as_ref().expect("just filled")
    }

    pub fn mutate(&mut self, op: RegistryOp) -> Result<Option<NameId>, RegistryError> {
        let registry = &mut self.project.registry;
        let added = match op {
            RegistryOp::AddName { main_variant, ntype } => Some(registry.add_name(&main_variant, ntype)?),
            RegistryOp::AddVariant { name_id, variant } => {
                registry.add_variant(name_id, &variant)?;
                None
            }
            RegistryOp::RemoveName { name_id } => {
                registry.remove_name(name_id)?;
                None
            }
        };
        self.index = None;
        Ok(added)
    }

    /// Recomputes the network with `params`, which become the session's
    /// current parameters.
    pub fn network(&mut self, params: AnalysisParams) -> Result<NetworkReport, ParamError> {
        params.validate()?;
        self.project.params = params;
        if self.index.is_some() {
            self.stats.index_reuses += 1;
        } else {
            self.stats.index_builds += 1;
            self.index = Some(index_occurrences(&self.corpus, &self.project.registry));
        }
        let index = self.index.as_ref().expect("just filled");
        analyze_index(index, &self.project.registry, &self.project.params)
    }

    pub fn export_dot(&mut self) -> Result<String, ParamError> {
        let params = self.project.params;
        Ok(self.network(params)?.dot(&DotStyle::default()))
    }

    pub fn save(&self, path: &Path) -> Result<(), ProjectError> {
        let mut project = self.project.clone();
        if project.corpus_path.is_relative() {
            if let Some(base) = &self.base {
                let target_dir = path.parent().filter(|p| !p.as_os_str().is_empty());
                if target_dir != Some(base.as_path()) {
                    project.corpus_path = base.join(&project.corpus_path);
                }
            }
        }
        save_project(&project, path)
    }
}

#[derive(Debug, Default)]
pub struct AppState {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    next_id: AtomicU64,
}

impl AppState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&self, session: Session) -> String {
        let id = format!("s{}", self.next_id.fetch_add(1, Ordering::Relaxed) + 1);
        self.sessions
            .write()
            .expect("session map poisoned")
            .insert(id.clone(), Arc::new(Mutex::new(session)));
        id
    }

    pub fn session(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        self.sessions.read().expect("session map poisoned").get(id).cloned()
    }
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/projects", post(open_project))
        .route("/projects/{id}/raw-words", get(raw_words))
        .route("/projects/{id}/registry", post(mutate_registry))
        .route("/projects/{id}/network", get(network))
        .route("/projects/{id}/save", post(save))
        .route("/projects/{id}/export.gv", get(export_gv))
        .with_state(state)
}

pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(Arc::new(AppState::new()))).await
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: Value,
}

impl ApiError {
    fn new(status: StatusCode, message: impl ToString) -> Self {
        ApiError {
            status,
            body: json!({ "error": message.to_string() }),
        }
    }

    fn unknown_session(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, format!("unknown session `{id}`"))
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

impl From<RegistryError> for ApiError {
    fn from(e: RegistryError) -> Self {
        match &e {
            RegistryError::Conflict { variant, owner, owner_name } => ApiError {
                status: StatusCode::CONFLICT,
                body: json!({
                    "error": e.to_string(),
                    "variant": variant,
                    "owner": { "id": owner, "name": owner_name },
                }),
            },
            RegistryError::NotFound(_) => Self::new(StatusCode::NOT_FOUND, e),
            _ => Self::new(StatusCode::BAD_REQUEST, e),
        }
    }
}

impl From<ParamError> for ApiError {
    fn from(e: ParamError) -> Self {
        Self::new(StatusCode::BAD_REQUEST, e)
    }
}

type ApiResult<T> = Result<T, ApiError>;

fn lookup(state: &AppState, id: &str) -> ApiResult<Arc<Mutex<Session>>> {
    state.session(id).ok_or_else(|| ApiError::unknown_session(id))
}

fn lock(session: &Mutex<Session>) -> std::sync::MutexGuard<'_, Session> {
    session.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpenRequest {
    pub folder: Option<PathBuf>,
    pub project: Option<PathBuf>,
    pub glob: Option<String>,
    pub encoding: Option<String>,
}

async fn open_project(State(state): State<Arc<AppState>>, Json(req): Json<OpenRequest>) -> ApiResult<Json<Value>> {
    let opened = match (&req.folder, &req.project) {
        (Some(folder), None) => {
            let mut source = CorpusSource::new(folder);
            if let Some(glob) = &req.glob {
                source.glob = glob.clone();
            }
            if let Some(encoding) = &req.encoding {
                source.encoding = encoding.clone();
            }
            tokio::task::spawn_blocking(move || Session::open_folder(source)).await
        }
        (None, Some(project)) => {
            let path = project.clone();
            tokio::task::spawn_blocking(move || Session::open_project(&path)).await
        }
        _ => return Err(ApiError::new(StatusCode::BAD_REQUEST, "give exactly one of `folder` or `project`")),
    };
    let session = opened
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e))?
        .map_err(|e| ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, e))?;
    let summary = json!({
        "documents": session.corpus().documents().len(),
        "tokens": session.corpus().total_tokens(),
        "names": session.project().registry.len(),
    });
    let id = state.insert(session);
    let mut body = summary;
    body["session_id"] = json!(id);
    Ok(Json(body))
}

#[derive(Debug, Default, Deserialize)]
pub struct RawWordsQuery {
    pub min_length: Option<usize>,
    pub require_capitalized: Option<bool>,
    pub min_count: Option<usize>,
    pub offset: Option<usize>,
    pub limit: Option<usize>,
}

const DEFAULT_PAGE: usize = 100;

async fn raw_words(
    State(state): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    Query(q): Query<RawWordsQuery>,
) -> ApiResult<Json<Value>> {
    let session = lookup(&state, &id)?;
    let mut session = lock(&session);
    let mut constraints = session.project().constraints;
    if let Some(v) = q.min_length {
        constraints.min_length = v;
    }
    if let Some(v) = q.require_capitalized {
        constraints.require_capitalized = v;
    }
    if let Some(v) = q.min_count {
        constraints.min_count = v;
    }
    constraints
        .validate()
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, e))?;

    let offset = q.offset.unwrap_or(0);
    let limit = q.limit.unwrap_or(DEFAULT_PAGE);
    let registry = session.project().registry.clone();
    let table = session.raw_words(&constraints);
    let entries: Vec<Value> = table
        .entries()
        .iter()
        .skip(offset)
        .take(limit)
        .map(|e| {
            let owner = registry.owner_of(&e.word);
            json!({
                "word": e.word,
                "count": e.count,
                "doc_coverage": e.doc_coverage,
                "assigned": owner.is_some(),
                "name_id": owner,
            })
        })
        .collect();
    Ok(Json(json!({
        "total": table.len(),
        "offset": offset,
        "limit": limit,
        "constraints": constraints,
        "entries": entries,
    })))
}

fn registry_view(entries: &[NameEntry]) -> Vec<Value> {
    entries
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "type": e.ntype,
                "main_variant": e.main_variant(),
                "variants": e.variants,
            })
        })
        .collect()
}

async fn mutate_registry(
    State(state): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    Json(op): Json<RegistryOp>,
) -> ApiResult<Json<Value>> {
    let session = lookup(&state, &id)?;
    let mut session = lock(&session);
    let added = session.mutate(op)?;
    Ok(Json(json!({
        "name_id": added,
        "names": registry_view(session.project().registry.entries()),
    })))
}

#[derive(Debug, Default, Deserialize)]
pub struct NetworkQuery {
    pub delta_s: Option<u32>,
    pub f_t_char: Option<f64>,
    pub f_t_place: Option<f64>,
    pub i_t: Option<f64>,
    pub kernel: Option<KernelKind>,
}

async fn network(
    State(state): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    Query(q): Query<NetworkQuery>,
) -> ApiResult<Json<Value>> {
    let session = lookup(&state, &id)?;
    let mut session = lock(&session);
    let mut params = session.project().params;
    if let Some(v) = q.delta_s {
        params.delta_s = v;
    }
    if let Some(v) = q.f_t_char {
        params.f_t_char = v;
    }
    if let Some(v) = q.f_t_place {
        params.f_t_place = v;
    }
    if let Some(v) = q.i_t {
        params.i_t = v;
    }
    if let Some(v) = q.kernel {
        params.kernel = v;
    }
    let report = session.network(params)?;
    let registry = &session.project().registry;
    let name = |id: NameId| registry.get(id).map(|e| e.main_variant().to_string());
    let edges: Vec<Value> = report
        .network
        .edges
        .iter()
        .map(|e| {
            json!({
                "source": e.source,
                "target": e.target,
                "source_name": name(e.source),
                "target_name": name(e.target),
                "score": e.score,
            })
        })
        .collect();
    Ok(Json(json!({
        "params": params,
        "nodes": report.network.nodes,
        "edges": edges,
        "warnings": report.warnings.iter().map(|w| json!({"code": w, "message": w.to_string()})).collect::<Vec<_>>(),
        "summary": report.summary(),
        "dot": report.dot(&DotStyle::default()),
        "stats": session.stats(),
    })))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaveRequest {
    pub path: PathBuf,
}

async fn save(
    State(state): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    Json(req): Json<SaveRequest>,
) -> ApiResult<Json<Value>> {
    let session = lookup(&state, &id)?;
    let session = lock(&session);
    session
        .save(&req.path)
        .map_err(|e| ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, e))?;
    Ok(Json(json!({ "ok": true, "path": req.path })))
}

async fn export_gv(State(state): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> ApiResult<Response> {
    let session = lookup(&state, &id)?;
    let dot = lock(&session).export_dot()?;
    Ok(([(header::CONTENT_TYPE, "text/vnd.graphviz; charset=utf-8")], dot).into_response())
}
