//! Jobs for the `spectra` command: read one description of a graph, convert
//! or check it, and render the result as JSON or a text table.

pub mod format;

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use spectra_core::drg::{
    check_bipartite_oddgirth, check_bipartite_omega, check_girth_regular, check_gamma_sufficient,
    check_monic_sufficient, check_spectral_excess, DrgReport, DEFAULT_DRG_TOL, PATTERN_TOL,
};
use spectra_core::io::representation_from_json;
use spectra_core::spectral::{walk_moments_of_graph, DEFAULT_CLUSTER_TOL};
use spectra_core::transforms::{convert_along, roundtrip_check, Conversion, RoundtripReport};
use spectra_core::{
    parse_graph, spectrum_of_graph, walk_moments, Graph, GraphFormat, PolySequence,
    PreintersectionSet, Representation, RepresentationKind, Spectrum, WalkMoments,
};
use thiserror::Error;

use format::{num, num_with, round_floats, with_rationalized, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] spectra_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Graph,
    Spectrum,
    Polys,
    Preintersection,
}

impl InputKind {
    fn representation(self) -> Option<RepresentationKind> {
        match self {
            InputKind::Graph => None,
            InputKind::Spectrum => Some(RepresentationKind::Spectrum),
            InputKind::Polys => Some(RepresentationKind::Polys),
            InputKind::Preintersection => Some(RepresentationKind::Preintersection),
        }
    }

    fn of(kind: RepresentationKind) -> Self {
        match kind {
            RepresentationKind::Spectrum => InputKind::Spectrum,
            RepresentationKind::Polys => InputKind::Polys,
            RepresentationKind::Preintersection => InputKind::Preintersection,
        }
    }
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputKind::Graph => f.write_str("graph"),
            other => write!(f, "{}", other.representation().expect("not a graph")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Spectrum,
    Polys,
    Preintersection,
    Moments,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Drg,
    Bipartite,
    Girth,
    Gamma,
    Monic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Compute { target: Target, max_len: Option<usize> },
    Convert { path: Vec<Conversion> },
    Check { what: CheckKind },
    Roundtrip { path: Vec<Conversion>, tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub cluster_tol: f64,
    /// Overrides the default tolerance of whichever check runs.
    pub check_tol: Option<f64>,
    pub output: OutputFormat,
    pub rationalize: bool,
    /// Inferred from the file name or contents when absent.
    pub graph_format: Option<GraphFormat>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cluster_tol: DEFAULT_CLUSTER_TOL,
            check_tol: None,
            output: OutputFormat::Json,
            rationalize: false,
            graph_format: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Stdin,
    File(PathBuf),
}

impl Input {
    pub fn parse(arg: &str) -> Self {
        if arg == "-" {
            Input::Stdin
        } else {
            Input::File(PathBuf::from(arg))
        }
    }

    fn read(&self) -> Result<Vec<u8>> {
        match self {
            Input::Stdin => {
                let mut buf = Vec::new();
                std::io::stdin()
                    .read_to_end(&mut buf)
                    .map_err(|source| CliError::Io {
                        path: "<stdin>".into(),
                        source,
                    })?;
                Ok(buf)
            }
            Input::File(p) => std::fs::read(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            }),
        }
    }

    fn path(&self) -> Option<&Path> {
        match self {
            Input::Stdin => None,
            Input::File(p) => Some(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub command: Command,
    /// `None` lets conversion paths decide, or means a graph for checks.
    pub input_kind: Option<InputKind>,
    pub input: Input,
    pub options: Options,
}

/// What a job produced. `failed` marks a completed run whose verdict is a
/// failure, such as a round trip beyond tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            OutputFormat::Text => self.text.clone(),
        }
    }
}

enum Loaded {
    Graph(Graph),
    Rep(Representation),
}

impl Job {
    /// Input kind after defaults: the path's source for conversions, a
    /// graph otherwise. Conflicts are usage errors.
    fn resolved_kind(&self) -> Result<InputKind> {
        let from_path = match &self.command {
            Command::Convert { path } | Command::Roundtrip { path, .. } => {
                path.first().map(|c| InputKind::of(c.source()))
            }
            _ => None,
        };
        match (self.input_kind, from_path) {
            (Some(k), Some(p)) if k != p => Err(CliError::Usage(format!(
                "--from {k} does not match the path, which starts at {p}"
            ))),
            (Some(k), _) => Ok(k),
            (None, Some(p)) => Ok(p),
            (None, None) => match self.command {
                Command::Compute { .. } => Err(CliError::Usage("compute needs --from".into())),
                _ => Ok(InputKind::Graph),
            },
        }
    }

    fn load(&self, kind: InputKind) -> Result<Loaded> {
        let bytes = self.input.read()?;
        match kind.representation() {
            None => {
                let format = self
                    .options
                    .graph_format
                    .unwrap_or_else(|| infer_graph_format(self.input.path(), &bytes));
                log::info!("reading graph as {format}");
                Ok(Loaded::Graph(parse_graph(&bytes, format)?))
            }
            Some(rk) => {
                let text = String::from_utf8_lossy(&bytes);
                Ok(Loaded::Rep(representation_from_json(&text, rk)?))
            }
        }
    }
}

/// Graph format from the file extension, or failing that from the shape of
/// the text: one token is graph6, rows of 0/1 are an adjacency matrix.
pub fn infer_graph_format(path: Option<&Path>, bytes: &[u8]) -> GraphFormat {
    let ext = path
        .and_then(|p| p.extension())
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("g6" | "graph6") => return GraphFormat::Graph6,
        Some("adj" | "adjmatrix" | "mat") => return GraphFormat::AdjMatrix,
        Some("edges" | "edgelist" | "el") => return GraphFormat::EdgeList,
        _ => {}
    }
    let text = String::from_utf8_lossy(bytes);
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.len() == 1 && !lines[0].contains(char::is_whitespace) && !lines[0].bytes().all(|b| b == b'0') {
        GraphFormat::Graph6
    } else if !lines.is_empty()
        && lines
            .iter()
            .all(|l| l.len() == lines.len() && l.bytes().all(|b| b == b'0' || b == b'1'))
    {
        GraphFormat::AdjMatrix
    } else {
        GraphFormat::EdgeList
    }
}

fn conversion(from: RepresentationKind, to: RepresentationKind) -> Conversion {
    Conversion::ALL
        .into_iter()
        .find(|c| c.source() == from && c.target() == to)
        .expect("every ordered pair of distinct kinds has a conversion")
}

fn as_kind(loaded: &Loaded, kind: RepresentationKind, cluster_tol: f64) -> Result<Representation> {
    let rep = match loaded {
        Loaded::Graph(g) => Representation::Spectrum(spectrum_of_graph(g, cluster_tol)?),
        Loaded::Rep(r) => r.clone(),
    };
    if rep.kind() == kind {
        return Ok(rep);
    }
    Ok(convert_along(&rep, &[conversion(rep.kind(), kind)])?)
}

fn spectrum_of(loaded: &Loaded, tol: f64) -> Result<Spectrum> {
    match as_kind(loaded, RepresentationKind::Spectrum, tol)? {
        Representation::Spectrum(s) => Ok(s),
        _ => unreachable!(),
    }
}

fn polys_of(loaded: &Loaded, tol: f64) -> Result<PolySequence> {
    match as_kind(loaded, RepresentationKind::Polys, tol)? {
        Representation::Polys(p) => Ok(p),
        _ => unreachable!(),
    }
}

/// Runs a job on its single input.
pub fn run(job: &Job) -> Result<Output> {
    let kind = job.resolved_kind()?;
    if job.command == (Command::Check { what: CheckKind::Drg }) && kind != InputKind::Graph {
        return Err(CliError::Usage(format!(
            "check drg needs a graph, not a {kind}"
        )));
    }
    let loaded = job.load(kind)?;
    let opts = &job.options;
    let out = match &job.command {
        Command::Compute { target, max_len } => compute(&loaded, *target, *max_len, opts)?,
        Command::Convert { path } => {
            let start = as_kind(&loaded, path[0].source(), opts.cluster_tol)?;
            representation_output(&convert_along(&start, path)?, opts.rationalize)
        }
        Command::Check { what } => check(&loaded, *what, opts)?,
        Command::Roundtrip { path, tol } => {
            let start = as_kind(&loaded, path[0].source(), opts.cluster_tol)?;
            roundtrip_output(&roundtrip_check(&start, path, *tol)?)
        }
    };
    Ok(Output {
        json: if opts.rationalize {
            with_rationalized(round_floats(out.json))
        } else {
            round_floats(out.json)
        },
        ..out
    })
}

fn compute(loaded: &Loaded, target: Target, max_len: Option<usize>, opts: &Options) -> Result<Output> {
    let rk = match target {
        Target::Spectrum => RepresentationKind::Spectrum,
        Target::Polys => RepresentationKind::Polys,
        Target::Preintersection => RepresentationKind::Preintersection,
        Target::Moments => {
            let moments = match loaded {
                Loaded::Graph(g) => {
                    let len = match max_len {
                        Some(l) => l,
                        None => 2 * spectrum_of_graph(g, opts.cluster_tol)?.d() + 1,
                    };
                    walk_moments_of_graph(g, len)
                }
                Loaded::Rep(_) => {
                    let s = spectrum_of(loaded, opts.cluster_tol)?;
                    walk_moments(&s, max_len.unwrap_or(2 * s.d() + 1))
                }
            };
            return Ok(moments_output(&moments, opts.rationalize));
        }
    };
    let rep = as_kind(loaded, rk, opts.cluster_tol)?;
    Ok(representation_output(&rep, opts.rationalize))
}

fn check(loaded: &Loaded, what: CheckKind, opts: &Options) -> Result<Output> {
    let tol = opts.check_tol.unwrap_or(match what {
        CheckKind::Drg => DEFAULT_DRG_TOL,
        _ => PATTERN_TOL,
    });
    if let CheckKind::Drg = what {
        let Loaded::Graph(g) = loaded else {
            unreachable!("checked in run")
        };
        let report = check_spectral_excess(g, opts.cluster_tol, tol)?;
        return Ok(drg_output(&report));
    }
    let ps = polys_of(loaded, opts.cluster_tol)?;
    let pre = spectra_core::preintersection_from_polys(&ps)?;
    let parity = check_bipartite_oddgirth(&pre, tol)?;
    let (json, text) = match what {
        CheckKind::Drg => unreachable!(),
        CheckKind::Bipartite => {
            let by_omega = check_bipartite_omega(&ps, tol);
            let json = json!({
                "bipartite": parity.bipartite,
                "odd_girth": parity.odd_girth,
                "omega_agrees": by_omega == parity,
            });
            let odd = parity.odd_girth.map_or("none".to_string(), |g| g.to_string());
            let text = format!(
                "bipartite     {}\nodd girth     {odd}\nomega agrees  {}\n",
                parity.bipartite,
                by_omega == parity
            );
            (json, text)
        }
        CheckKind::Girth => {
            let girth = check_girth_regular(&pre, tol)?;
            (json!({ "girth": girth }), format!("girth  {girth}\n"))
        }
        CheckKind::Gamma | CheckKind::Monic => {
            let verdict = if what == CheckKind::Gamma {
                check_gamma_sufficient(&pre, parity.bipartite, tol)
            } else {
                check_monic_sufficient(&ps, parity.bipartite, tol)
            };
            let json = json!({ "verdict": verdict, "bipartite": parity.bipartite });
            let text = format!("verdict    {verdict}\nbipartite  {}\n", parity.bipartite);
            (json, text)
        }
    };
    Ok(Output {
        json,
        text,
        failed: false,
    })
}

fn representation_output(rep: &Representation, rational: bool) -> Output {
    let text = match rep {
        Representation::Spectrum(s) => spectrum_table(s, rational),
        Representation::Polys(p) => polys_table(p, rational),
        Representation::Preintersection(p) => preintersection_table(p, rational),
    };
    Output {
        json: serde_json::to_value(rep).expect("serializable"),
        text,
        failed: false,
    }
}

fn spectrum_table(s: &Spectrum, rational: bool) -> String {
    let mut t = Table::new(&["i", "eigenvalue", "multiplicity"]);
    for (i, (e, m)) in s.eigenvalues().iter().zip(s.multiplicities()).enumerate() {
        t.row(vec![i.to_string(), num_with(*e, rational), m.to_string()]);
    }
    t.render()
}

fn polys_table(p: &PolySequence, rational: bool) -> String {
    let d = p.d();
    let header: Vec<String> = std::iter::once("p".to_string())
        .chain((0..=d).map(|j| format!("x^{j}")))
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut t = Table::new(&header);
    for (i, row) in p.omega().iter().enumerate() {
        let mut cells = vec![format!("p_{i}")];
        cells.extend(row.iter().map(|&w| num_with(w, rational)));
        cells.extend((i + 1..=d).map(|_| String::new()));
        t.row(cells);
    }
    format!("lambda0  {}\n{}", num_with(p.lambda0(), rational), t.render())
}

fn preintersection_table(p: &PreintersectionSet, rational: bool) -> String {
    let mut t = Table::new(&["i", "alpha", "beta", "gamma"]);
    let d = p.d();
    for i in 0..=d {
        let beta = if i < d { num_with(p.b(i), rational) } else { "-".into() };
        let gamma = if i > 0 { num_with(p.c(i), rational) } else { "-".into() };
        t.row(vec![i.to_string(), num_with(p.a(i), rational), beta, gamma]);
    }
    format!("lambda0  {}\n{}", num_with(p.lambda0(), rational), t.render())
}

fn moments_output(m: &WalkMoments, rational: bool) -> Output {
    let mut t = Table::new(&["l", "c(l)"]);
    for (l, c) in m.c.iter().enumerate() {
        t.row(vec![l.to_string(), num_with(*c, rational)]);
    }
    Output {
        json: serde_json::to_value(m).expect("serializable"),
        text: format!("n  {}\n{}", m.n, t.render()),
        failed: false,
    }
}

fn drg_output(r: &DrgReport) -> Output {
    let mut t = Table::prose(&["criterion", "verdict", "witness"]);
    for c in &r.criteria {
        let witness = if c.witness.is_null() {
            String::new()
        } else {
            round_floats(c.witness.clone()).to_string()
        };
        t.row(vec![c.name.clone(), c.verdict.clone(), witness]);
    }
    let text = format!(
        "is_drg           {}\nspectral_excess  {}\naverage_excess   {}\ngap              {}\n\n{}",
        r.is_drg,
        num(r.spectral_excess),
        num(r.average_excess),
        num(r.gap),
        t.render()
    );
    Output {
        json: serde_json::to_value(r).expect("serializable"),
        text,
        failed: false,
    }
}

fn roundtrip_output(r: &RoundtripReport) -> Output {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let mut json = serde_json::to_value(r).expect("serializable");
    json["verdict"] = Value::String(verdict.into());
    let text = format!(
        "{verdict}  {}  deviation {}  tol {}\n",
        r.path.join(","),
        num(r.deviation),
        num(r.tol)
    );
    Output {
        json,
        text,
        failed: !r.pass,
    }
}

/// Runs `job` on every regular file directly inside `dir`, in parallel,
/// in file-name order. The combined output fails if any file does.
pub fn run_each(job: &Job, dir: &Path) -> Result<Output> {
    use rayon::prelude::*;

    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let results: Vec<(String, Result<Output>)> = files
        .par_iter()
        .map(|p| {
            let one = Job {
                input: Input::File(p.clone()),
                ..job.clone()
            };
            let name = p.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
            (name, run(&one))
        })
        .collect();

    let mut json = Vec::new();
    let mut text = String::new();
    let mut failed = false;
    for (name, res) in results {
        text.push_str(&format!("== {name}\n"));
        match res {
            Ok(out) => {
                failed |= out.failed;
                json.push(json!({ "file": name, "output": out.json }));
                text.push_str(&out.text);
            }
            Err(e) => {
                failed = true;
                json.push(json!({
                    "file": name,
                    "error": { "code": e.code(), "message": e.to_string() },
                }));
                text.push_str(&format!("error[{}]: {e}\n", e.code()));
            }
        }
    }
    Ok(Output {
        json: Value::Array(json),
        text,
        failed,
    })
}
