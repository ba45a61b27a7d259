//! coxwalls: wall geometry of finitely generated Coxeter systems.

mod formats;
mod report;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::json;

use coxwalls_core::{
    double_tracking_bound, spiral_path, Caps, CoxeterSystem, EdgePath, Element, Error,
    QuasiGeodesicParams, SpiralParams, TraceEvent, Wall, Word,
};

use formats::{LetterSpec, PathFile, SystemFile};
use report::{Format, Report};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit code 1.
    Input(String),
    /// Capped or undetermined result: exit code 2.
    Capped(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Capped(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Capped(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ClosureCapExceeded { .. }
            | Error::BallCapExceeded { .. }
            | Error::DepthCapExceeded { .. }
            | Error::UndeterminedCrossing { .. }
            | Error::SolverPrecision(_) => CliError::Capped(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// System description file (JSON).
    #[arg(long)]
    system: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock timing in the report. Off by default so equal
    /// inputs produce byte-identical reports.
    #[arg(long)]
    timing: bool,
    /// Braid-closure size cap (env COXWALLS_CAP_CLOSURE).
    #[arg(long)]
    cap_closure: Option<usize>,
    /// Reflection-product order cap (env COXWALLS_CAP_ORDER).
    #[arg(long)]
    cap_order: Option<usize>,
    /// Ball enumeration cap (env COXWALLS_CAP_BALL).
    #[arg(long)]
    cap_ball: Option<usize>,
    /// Straightening recursion depth cap (env COXWALLS_CAP_DEPTH).
    #[arg(long)]
    cap_depth: Option<usize>,
}

impl Common {
    fn caps(&self) -> Result<Caps, CliError> {
        let mut caps = Caps::default();
        let env_override = |name: &str| -> Result<Option<usize>, CliError> {
            match std::env::var(name) {
                Ok(v) => v
                    .parse::<usize>()
                    .map(Some)
                    .map_err(|_| CliError::input(format!("{name} is not an integer: {v:?}"))),
                Err(_) => Ok(None),
            }
        };
        if let Some(v) = env_override("COXWALLS_CAP_CLOSURE")? {
            caps.closure_cap = v;
        }
        if let Some(v) = env_override("COXWALLS_CAP_ORDER")? {
            caps.order_cap = v;
        }
        if let Some(v) = env_override("COXWALLS_CAP_BALL")? {
            caps.ball_cap = v;
        }
        if let Some(v) = env_override("COXWALLS_CAP_DEPTH")? {
            caps.depth_cap = v;
        }
        // Flags win over the environment.
        if let Some(v) = self.cap_closure {
            caps.closure_cap = v;
        }
        if let Some(v) = self.cap_order {
            caps.order_cap = v;
        }
        if let Some(v) = self.cap_ball {
            caps.ball_cap = v;
        }
        if let Some(v) = self.cap_depth {
            caps.depth_cap = v;
        }
        Ok(caps)
    }

    fn load_system(&self) -> Result<(SystemFile, CoxeterSystem), CliError> {
        let path = self
            .system
            .as_ref()
            .ok_or_else(|| CliError::input("--system FILE is required"))?;
        load_system_file(path, self.caps()?)
    }

    fn effective_caps_json(&self) -> Result<serde_json::Value, CliError> {
        let caps = self.caps()?;
        Ok(json!({
            "ball": caps.ball_cap,
            "closure": caps.closure_cap,
            "depth": caps.depth_cap,
            "order": caps.order_cap,
        }))
    }
}

fn load_system_file(path: &Path, caps: Caps) -> Result<(SystemFile, CoxeterSystem), CliError> {
    let bytes =
        fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let origin = path.display().to_string();
    let file = SystemFile::parse(&bytes, &origin)?;
    let sys = file.build(caps, &origin)?;
    Ok((file, sys))
}

#[derive(Args, Debug, Clone)]
struct PathInput {
    /// Path description file (JSON).
    #[arg(long)]
    path: Option<PathBuf>,
    /// Inline letters over generator names.
    #[arg(long)]
    letters: Option<String>,
    /// Inline start vertex word (defaults to the identity).
    #[arg(long, default_value = "")]
    start: String,
}

impl PathInput {
    fn build(&self, sys: &CoxeterSystem) -> Result<EdgePath, CliError> {
        match (&self.path, &self.letters) {
            (Some(file), None) => {
                let bytes = fs::read(file)
                    .map_err(|e| CliError::input(format!("{}: {e}", file.display())))?;
                let parsed = PathFile::parse(&bytes, &file.display().to_string())?;
                parsed.build(sys, &file.display().to_string())
            }
            (None, Some(letters)) => {
                let spec = PathFile {
                    start: self.start.clone(),
                    letters: LetterSpec::Joined(letters.clone()),
                };
                spec.build(sys, "--letters")
            }
            (Some(_), Some(_)) => Err(CliError::input(
                "supply either --path or --letters, not both",
            )),
            (None, None) => Err(CliError::input("supply --path FILE or --letters WORD")),
        }
    }

    fn describe(&self) -> String {
        match (&self.path, &self.letters) {
            (Some(file), _) => file.display().to_string(),
            (_, Some(letters)) if self.start.is_empty() => letters.clone(),
            (_, Some(letters)) => format!("{}:{letters}", self.start),
            _ => String::new(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "coxwalls",
    version,
    about = "Wall geometry of finitely generated Coxeter systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a word to its canonical ShortLex form.
    Reduce {
        #[command(flatten)]
        common: Common,
        /// Word over generator names.
        #[arg(long)]
        word: String,
    },
    /// Distance between two vertices (or from the identity to a word).
    Dist {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
    /// ShortLex geodesic between two vertices.
    Geodesic {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Walls separating two vertices, in crossing order.
    Walls {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Bracket numbers of a path.
    Bracket {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        path: PathInput,
    },
    /// Geodesic approximation of a path.
    Approx {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        path: PathInput,
    },
    /// Straighten a path into a tracking geodesic.
    Straighten {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        path: PathInput,
    },
    /// Dilworth chain partition of the walls separating two vertices.
    Dilworth {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Width: the largest set of pairwise-crossing separating walls.
    Width {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Empirical lower bound for the parallel wall constant P(n).
    Pwconst {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        radius: usize,
    },
    /// Spiral experiment over the fixed grid system.
    Spiral {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        windings: usize,
        #[arg(long, default_value_t = 4.0)]
        c: f64,
        #[arg(long, default_value_t = 1.7)]
        growth: f64,
    },
    /// Axis experiment: straighten periodic powers of an element.
    Axis {
        #[command(flatten)]
        common: Common,
        /// Element word over generator names.
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
    },
    /// Verify the double-tracking bound for a tracked pair of paths.
    #[command(name = "doubletrack-check")]
    DoubletrackCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        path1: PathBuf,
        #[arg(long)]
        path2: PathBuf,
        #[arg(long)]
        k: usize,
        /// Quasi-geodesic lambda of the tracking path, as "p" or "p/q".
        #[arg(long, default_value = "1")]
        lambda2: String,
        /// Quasi-geodesic epsilon of the tracking path, as "p" or "p/q".
        #[arg(long, default_value = "0")]
        eps2: String,
    },
}

fn parse_rational(text: &str, what: &str) -> Result<Rational64, CliError> {
    let parse_int = |s: &str| -> Result<i64, CliError> {
        s.trim()
            .parse::<i64>()
            .map_err(|_| CliError::input(format!("{what}: not an integer: {s:?}")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == 0 {
                return Err(CliError::input(format!("{what}: zero denominator")));
            }
            Ok(Rational64::new(parse_int(num)?, den))
        }
        None => Ok(Rational64::from_integer(parse_int(text)?)),
    }
}

fn element_from(sys: &CoxeterSystem, text: &str, what: &str) -> Result<Element, CliError> {
    let word = sys
        .word_from_names(text)
        .map_err(|e| CliError::input(format!("{what}: {e}")))?;
    Ok(sys.normal_form(&word)?)
}

fn wall_json(sys: &CoxeterSystem, wall: &Wall) -> serde_json::Value {
    json!(sys.word_to_names(wall.reflection().nf()))
}

fn run(cli: Cli) -> Result<(Report, Common), CliError> {
    Ok(match cli.command {
        Command::Reduce { common, word } => {
            let (file, sys) = common.load_system()?;
            let input = sys
                .word_from_names(&word)
                .map_err(|e| CliError::input(format!("--word: {e}")))?;
            let reduced = sys.reduce(&input)?;
            let mut report = Report::new(
                "reduce",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "word": word }),
            );
            report.push(json!({
                "length": reduced.len(),
                "reduced": sys.word_to_names(&reduced),
                "word": word,
            }));
            (report, common)
        }
        Command::Dist {
            common,
            word,
            from,
            to,
        } => {
            let (file, sys) = common.load_system()?;
            let (a, b, label) = match (&word, &from, &to) {
                (Some(w), None, None) => {
                    (sys.identity(), element_from(&sys, w, "--word")?, w.clone())
                }
                (None, Some(f), Some(t)) => (
                    element_from(&sys, f, "--from")?,
                    element_from(&sys, t, "--to")?,
                    format!("{f}->{t}"),
                ),
                _ => return Err(CliError::input("supply --word W, or --from A --to B")),
            };
            let d = sys.distance(&a, &b)?;
            let mut report = Report::new(
                "dist",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "query": label }),
            );
            report.push(json!({
                "distance": d,
                "from": sys.word_to_names(a.nf()),
                "to": sys.word_to_names(b.nf()),
            }));
            (report, common)
        }
        Command::Geodesic { common, from, to } => {
            let (file, sys) = common.load_system()?;
            let a = element_from(&sys, &from, "--from")?;
            let b = element_from(&sys, &to, "--to")?;
            let geo = sys.geodesic(&a, &b)?;
            let mut report = Report::new(
                "geodesic",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "from": from, "to": to }),
            );
            let vertices: Vec<String> = sys
                .path_vertices(&geo)?
                .iter()
                .map(|v| sys.word_to_names(v.nf()))
                .collect();
            report.push(json!({
                "length": geo.len(),
                "letters": sys.word_to_names(&Word::new(geo.letters().to_vec())),
                "vertices": vertices,
            }));
            (report, common)
        }
        Command::Walls { common, from, to } => {
            let (file, sys) = common.load_system()?;
            let a = element_from(&sys, &from, "--from")?;
            let b = element_from(&sys, &to, "--to")?;
            let walls = sys.walls_separating(&a, &b)?;
            let mut report = Report::new(
                "walls",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "from": from, "to": to }),
            );
            for (i, q) in walls.iter().enumerate() {
                report.push(json!({
                    "index": i,
                    "reflection": wall_json(&sys, q),
                }));
            }
            (report, common)
        }
        Command::Bracket { common, path } => {
            let (file, sys) = common.load_system()?;
            let p = path.build(&sys)?;
            let b = sys.bracket_report(&p)?;
            let mut report = Report::new(
                "bracket",
                Some(&file),
                json!({
                    "caps": common.effective_caps_json()?,
                    "max": b.max,
                    "path": path.describe(),
                }),
            );
            for (i, &count) in b.per_vertex.iter().enumerate() {
                let witnesses: Vec<serde_json::Value> = b.witnesses[i]
                    .iter()
                    .map(|&wi| wall_json(&sys, &b.walls[wi]))
                    .collect();
                report.push(json!({
                    "bracket": count,
                    "vertex": i,
                    "witnesses": witnesses,
                }));
            }
            (report, common)
        }
        Command::Approx { common, path } => {
            let (file, sys) = common.load_system()?;
            let p = path.build(&sys)?;
            let out = sys.geodesic_approximation(&p)?;
            let mut report = Report::new(
                "approx",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "path": path.describe() }),
            );
            report.push(json!({
                "boundaries": out.segment_boundaries,
                "l_achieved": out.l_achieved,
                "letters": sys.word_to_names(&Word::new(out.approx.letters().to_vec())),
                "start": sys.word_to_names(out.approx.start().nf()),
            }));
            (report, common)
        }
        Command::Straighten { common, path } => {
            let (file, sys) = common.load_system()?;
            let p = path.build(&sys)?;
            let out = sys.straighten(&p)?;
            let mut report = Report::new(
                "straighten",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "path": path.describe() }),
            );
            let trace: Vec<serde_json::Value> = out
                .trace
                .iter()
                .map(|event| match event {
                    TraceEvent::Splice {
                        depth,
                        chain,
                        from_edge,
                        to_edge,
                    } => json!({
                        "chain": chain,
                        "depth": depth,
                        "from_edge": from_edge,
                        "kind": "splice",
                        "to_edge": to_edge,
                    }),
                    TraceEvent::DeletePair {
                        depth,
                        edge_i,
                        edge_j,
                    } => json!({
                        "depth": depth,
                        "edge_i": edge_i,
                        "edge_j": edge_j,
                        "kind": "delete",
                    }),
                })
                .collect();
            report.push(json!({
                "geodesic": sys.word_to_names(&Word::new(out.geodesic.letters().to_vec())),
                "k_achieved": out.k_achieved,
                "start": sys.word_to_names(out.geodesic.start().nf()),
                "trace": trace,
            }));
            (report, common)
        }
        Command::Dilworth { common, from, to } => {
            let (file, sys) = common.load_system()?;
            let a = element_from(&sys, &from, "--from")?;
            let b = element_from(&sys, &to, "--to")?;
            let part = sys.dilworth_partition(&a, &b)?;
            let mut report = Report::new(
                "dilworth",
                Some(&file),
                json!({
                    "caps": common.effective_caps_json()?,
                    "chain_count": part.chains.len(),
                    "from": from,
                    "to": to,
                }),
            );
            for (i, chain) in part.chains.iter().enumerate() {
                let walls: Vec<serde_json::Value> =
                    chain.iter().map(|q| wall_json(&sys, q)).collect();
                report.push(json!({ "chain": i, "walls": walls }));
            }
            (report, common)
        }
        Command::Width { common, from, to } => {
            let (file, sys) = common.load_system()?;
            let a = element_from(&sys, &from, "--from")?;
            let b = element_from(&sys, &to, "--to")?;
            let walls = sys.walls_separating(&a, &b)?;
            let width = sys.max_antichain(&walls)?;
            let mut report = Report::new(
                "width",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "from": from, "to": to }),
            );
            report.push(json!({ "wall_count": walls.len(), "width": width }));
            (report, common)
        }
        Command::Pwconst { common, n, radius } => {
            let (file, sys) = common.load_system()?;
            let est = sys.estimate_parallel_wall_constant(n, radius)?;
            let mut report = Report::new(
                "pwconst",
                Some(&file),
                json!({ "caps": common.effective_caps_json()?, "n": n, "radius": radius }),
            );
            let witnesses: Vec<serde_json::Value> = est
                .witnesses
                .iter()
                .map(|(v, q, d)| {
                    json!({
                        "distance": d,
                        "vertex": sys.word_to_names(v.nf()),
                        "wall": wall_json(&sys, q),
                    })
                })
                .collect();
            report.push(json!({
                "estimate": est.estimate,
                "witnesses": witnesses,
            }));
            (report, common)
        }
        Command::Spiral {
            common,
            windings,
            c,
            growth,
        } => {
            if windings == 0 {
                return Err(CliError::input("--windings must be at least 1"));
            }
            let grid = coxwalls_core::grid_system();
            let file = SystemFile {
                generators: grid.generator_names().to_vec(),
                matrix: grid.matrix_rows(),
            };
            let params = SpiralParams { c, growth };
            let mut report = Report::new(
                "spiral",
                Some(&file),
                json!({
                    "c": c,
                    "caps": common.effective_caps_json()?,
                    "growth": growth,
                    "windings": windings,
                }),
            );
            for w in 1..=windings {
                let p = spiral_path(&grid, w, params)?;
                let bracket = grid.bracket_report(&p)?;
                let out = grid.straighten(&p)?;
                report.push(json!({
                    "bracket_max": bracket.max,
                    "k_achieved": out.k_achieved,
                    "length": p.len(),
                    "windings": w,
                }));
            }
            (report, common)
        }
        Command::Axis { common, g, k_max } => {
            let (file, sys) = common.load_system()?;
            let elem = element_from(&sys, &g, "--g")?;
            let infinite = sys.has_infinite_order(&elem)?;
            let mut report = Report::new(
                "axis",
                Some(&file),
                json!({
                    "caps": common.effective_caps_json()?,
                    "g": g,
                    "infinite_order": infinite,
                    "k_max": k_max,
                }),
            );
            for k in 1..=k_max {
                let p = sys.periodic_path(&elem, k)?;
                let bracket = sys.bracket_report(&p)?;
                let out = sys.straighten(&p)?;
                report.push(json!({
                    "bracket_max": bracket.max,
                    "geodesic": sys.is_geodesic(&p)?,
                    "k": k,
                    "k_achieved": out.k_achieved,
                    "length": p.len(),
                }));
            }
            (report, common)
        }
        Command::DoubletrackCheck {
            common,
            path1,
            path2,
            k,
            lambda2,
            eps2,
        } => {
            let (file, sys) = common.load_system()?;
            let bytes1 = fs::read(&path1)
                .map_err(|e| CliError::input(format!("{}: {e}", path1.display())))?;
            let p1 = PathFile::parse(&bytes1, &path1.display().to_string())?
                .build(&sys, &path1.display().to_string())?;
            let bytes2 = fs::read(&path2)
                .map_err(|e| CliError::input(format!("{}: {e}", path2.display())))?;
            let p2 = PathFile::parse(&bytes2, &path2.display().to_string())?
                .build(&sys, &path2.display().to_string())?;
            let lambda = parse_rational(&lambda2, "--lambda2")?;
            let eps = parse_rational(&eps2, "--eps2")?;
            let params = QuasiGeodesicParams::new(lambda, eps)
                .map_err(|e| CliError::input(e.to_string()))?;
            let rep = sys.tracking_correspondence(&p1, &p2, k, &params)?;
            let reverse = sys.tracking_distance(&p2, &p1)?;
            let bound = double_tracking_bound(lambda, eps, k as u64);
            let mut report = Report::new(
                "doubletrack-check",
                Some(&file),
                json!({
                    "caps": common.effective_caps_json()?,
                    "eps2": eps2,
                    "k": k,
                    "lambda2": lambda2,
                }),
            );
            report.push(json!({
                "a_of": rep.a_of,
                "bound": rep.bound_checked,
                "bound_exact": bound.to_string(),
                "reverse_tracking": reverse,
                "within_bound": reverse <= rep.bound_checked,
            }));
            (report, common)
        }
    })
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli) {
        Ok((mut report, common)) => {
            if common.timing {
                report.wall_clock_ms = Some(started.elapsed().as_millis());
            }
            let format = match common.format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
            let result = match &common.out {
                Some(path) => match fs::File::create(path) {
                    Ok(mut file) => report.write(format, &mut file),
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        std::process::exit(1);
                    }
                },
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    let r = report.write(format, &mut lock);
                    let _ = lock.flush();
                    r
                }
            };
            if let Err(e) = result {
                eprintln!("error: {e}");
                std::process::exit(e.exit_code());
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
