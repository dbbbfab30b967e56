//! Batch command line: `extract`, `analyze`, `render` and `serve`.
//!
//! Flags override values from the project file. Exit codes: 0 success,
//! 1 usage error, 2 corpus error, 3 project or registry error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::net::{IpAddr, Ipv4Addr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::{AnalysisParams, KernelKind};
use crate::corpus::{CorpusError, CorpusSource};
use crate::graphout::DotStyle;
use crate::pipeline::{analyze, PipelineError};
use crate::project::{load_project, ProjectError, ProjectFile};
use crate::service;
use crate::wordlist::{extract_raw_words, ExtractionConstraints};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CORPUS: i32 = 2;
pub const EXIT_PROJECT: i32 = 3;

pub const DEFAULT_PORT: u16 = 7414;

const DELTA_S_HELP: &str = "Proximity cutoff in words; pairs farther apart score zero [default: 40]";
const F_T_CHAR_HELP: &str = "Frequency threshold for characters, in [0,1] [default: 0.20]";
const F_T_PLACE_HELP: &str = "Frequency threshold for places, in [0,1] [default: 0.40]";
const I_T_HELP: &str = "Interaction threshold for edges, in [0,1] [default: 0.35]";

#[derive(Debug, Parser)]
#[command(name = "charnet", version, about = "Character and place interaction networks from literary text")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List candidate name words as `word<TAB>count<TAB>doc_coverage`.
    Extract {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        constraints: ConstraintArgs,
        /// Output TSV file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write frequency and interaction tables for a curated project.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Output prefix; writes PREFIX.frequencies.tsv and PREFIX.interactions.tsv
        #[arg(long, default_value = "network")]
        out: PathBuf,
    },
    /// Run the whole pipeline and write a Graphviz GV file.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Output GV file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Start the local HTTP service used by the curation UI.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        /// Address to bind
        #[arg(long, default_value_t = IpAddr::V4(Ipv4Addr::LOCALHOST))]
        bind: IpAddr,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Folder of text files (overrides the project's corpus_path)
    #[arg(long)]
    pub folder: Option<PathBuf>,
    /// Project file (TOML)
    #[arg(long)]
    pub project: Option<PathBuf>,
    /// File name pattern inside the folder [default: *.txt]
    #[arg(long)]
    pub glob: Option<String>,
    /// Text encoding label, e.g. utf-8 or windows-1252 [default: utf-8]
    #[arg(long)]
    pub encoding: Option<String>,
}

#[derive(Debug, Args)]
pub struct ConstraintArgs {
    /// Minimum word length in letters [default: 3]
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub min_length: Option<u32>,
    /// Keep only words starting with an uppercase letter [default]
    #[arg(long, overrides_with = "no_capitalized")]
    pub capitalized: bool,
    /// Keep words regardless of case
    #[arg(long, overrides_with = "capitalized")]
    pub no_capitalized: bool,
    /// Minimum number of occurrences [default: 2]
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub min_count: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, help = DELTA_S_HELP, value_parser = clap::value_parser!(u32).range(1..))]
    pub delta_s: Option<u32>,
    #[arg(long, help = F_T_CHAR_HELP, value_parser = unit_interval)]
    pub f_t_char: Option<f64>,
    #[arg(long, help = F_T_PLACE_HELP, value_parser = unit_interval)]
    pub f_t_place: Option<f64>,
    #[arg(long, help = I_T_HELP, value_parser = unit_interval)]
    pub i_t: Option<f64>,
    /// Proximity kernel: linear or exponential [default: linear]
    #[arg(long)]
    pub kernel: Option<KernelKind>,
}

fn unit_interval(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

impl ConstraintArgs {
    pub fn apply(&self, c: &mut ExtractionConstraints) {
        if let Some(v) = self.min_length {
            c.min_length = v as usize;
        }
        if self.capitalized {
            c.require_capitalized = true;
        }
        if self.no_capitalized {
            c.require_capitalized = false;
        }
        if let Some(v) = self.min_count {
            c.min_count = v as usize;
        }
    }
}

impl ParamArgs {
    pub fn apply(&self, p: &mut AnalysisParams) {
        if let Some(v) = self.delta_s {
            p.delta_s = v;
        }
        if let Some(v) = self.f_t_char {
            p.f_t_char = v;
        }
        if let Some(v) = self.f_t_place {
            p.f_t_place = v;
        }
        if let Some(v) = self.i_t {
            p.i_t = v;
        }
        if let Some(v) = self.kernel {
            p.kernel = v;
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Project(#[from] ProjectError),
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Output { .. } => EXIT_USAGE,
            CliError::Corpus(_) => EXIT_CORPUS,
            CliError::Project(_) => EXIT_PROJECT,
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Corpus(e) => CliError::Corpus(e),
            PipelineError::Params(e) => CliError::Usage(e.to_string()),
        }
    }
}

/// Project (if any) with flag overrides applied, plus the folder it lives in.
struct Resolved {
    project: ProjectFile,
    source: CorpusSource,
}

fn resolve(input: &InputArgs, require_project: bool) -> Result<Resolved, CliError> {
    let (mut project, base) = match &input.project {
        Some(path) => {
            let project = load_project(path)?;
            let base = path.parent().map(Path::to_path_buf);
            (project, base)
        }
        None if require_project => return Err(CliError::Usage("--project is required".into())),
        None => match &input.folder {
            Some(folder) => (ProjectFile::new(folder), None),
            None => return Err(CliError::Usage("either --folder or --project is required".into())),
        },
    };
    if let Some(glob) = &input.glob {
        project.glob = glob.clone();
    }
    if let Some(encoding) = &input.encoding {
        project.encoding = encoding.clone();
    }
    let source = match &input.folder {
        Some(folder) => CorpusSource {
            folder: folder.clone(),
            glob: project.glob.clone(),
            encoding: project.encoding.clone(),
        },
        None => project.corpus_source(base.as_deref()),
    };
    Ok(Resolved { project, source })
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Output {
            path: path.to_path_buf(),
            source,
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Output {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Extract { input, constraints, out } => {
            let mut resolved = resolve(&input, false)?;
            constraints.apply(&mut resolved.project.constraints);
            resolved
                .project
                .constraints
                .validate()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let corpus = resolved.source.load()?;
            let table = extract_raw_words(&corpus, &resolved.project.constraints);
            write_output(out.as_deref(), &table.to_tsv(), stdout)?;
            let _ = writeln!(stderr, "{} raw words", table.len());
        }
        Command::Analyze { input, params, out } => {
            let mut resolved = resolve(&input, true)?;
            params.apply(&mut resolved.project.params);
            let corpus = resolved.source.load()?;
            let project = &resolved.project;
            let report = analyze(&corpus, &project.registry, &project.params).map_err(PipelineError::from)?;
            let precision = DotStyle::default().precision;
            let freq_path = with_suffix(&out, ".frequencies.tsv");
            let inter_path = with_suffix(&out, ".interactions.tsv");
            write_output(Some(&freq_path), &report.frequencies.to_tsv(&project.registry, precision), stdout)?;
            write_output(Some(&inter_path), &report.interactions.to_tsv(&project.registry, precision), stdout)?;
            for w in &report.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            let s = report.summary();
            let _ = writeln!(stdout, "names: {}", s.names);
            let _ = writeln!(stdout, "non-zero pairs: {}", s.nonzero_pairs);
            let _ = writeln!(stdout, "max raw sum: {}", s.max_raw_sum);
        }
        Command::Render { input, params, out } => {
            let mut resolved = resolve(&input, true)?;
            params.apply(&mut resolved.project.params);
            let corpus = resolved.source.load()?;
            let project = &resolved.project;
            let report = analyze(&corpus, &project.registry, &project.params).map_err(PipelineError::from)?;
            for w in &report.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            write_output(out.as_deref(), &report.dot(&DotStyle::default()), stdout)?;
            let s = report.summary();
            let _ = writeln!(stderr, "{} nodes, {} edges", s.nodes, s.edges);
        }
        Command::Serve { port, bind } => {
            let addr = SocketAddr::new(bind, port);
            let runtime = tokio::runtime::Runtime::new().map_err(|e| CliError::Usage(e.to_string()))?;
            let _ = writeln!(stderr, "listening on http://{addr}");
            runtime
                .block_on(service::serve(addr))
                .map_err(|e| CliError::Usage(format!("server error: {e}")))?;
        }
    }
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}
