use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lineop::arrangement::json::{arrangement_from_json, arrangement_to_json, points_from_json, points_to_json};
use lineop::arrangement::{
    classify_degenerate, dualize_lines, freeness_necessary, inequality_report, profile, projectively_equivalent,
    Arrangement, PointConfig, Profile, Slack,
};
use lineop::catalog::{self, Params, ENTRIES};
use lineop::dynamics::{run_sequence, Budgets, Operator};
use lineop::geom::rich_conics;
use lineop::matroid::{extract_matroid, flashing_incidence, matroid_isomorphic, Matroid3};
use lineop::render::{render_svg, RenderSpec};
use lineop::{AnyField, ExactField};

type Arr = Arrangement<AnyField>;

#[derive(Parser)]
#[command(name = "lineop", version, about = "Incidence operators on exact line arrangements")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List, describe or build named arrangements.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Apply an operator once and print the resulting arrangement.
    Apply {
        #[arg(long)]
        op: String,
        #[command(flatten)]
        src: Source,
    },
    /// Iterate an operator and report counts, profiles and the verdict.
    Seq {
        #[arg(long)]
        op: String,
        #[arg(long, default_value_t = 16)]
        steps: usize,
        #[arg(long, default_value_t = 20_000)]
        max_lines: usize,
        /// Print the trace as JSON instead of a table.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        src: Source,
    },
    /// Singularity profile and H-constant.
    Profile {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        approx: bool,
        #[command(flatten)]
        src: Source,
    },
    /// Inequality slacks, freeness test and degeneracy class.
    Check {
        /// Treat the arrangement as real even if the field has no real embedding.
        #[arg(long)]
        real: bool,
        #[command(flatten)]
        src: Source,
    },
    /// Search for a projectivity mapping A onto B.
    Equiv { a: PathBuf, b: PathBuf },
    /// Rank-3 matroids.
    Matroid {
        #[command(subcommand)]
        cmd: MatroidCmd,
    },
    /// Conics through at least N of the points (for lines: of their dual points).
    Conics {
        #[arg(long, default_value_t = 6)]
        min: usize,
        #[command(flatten)]
        src: Source,
    },
    /// Draw arrangements as SVG; each input is one layer (step0, step1, ...).
    Render {
        inputs: Vec<PathBuf>,
        #[arg(long)]
        catalog: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Window as x0,x1,y0,y1 (exact rationals).
        #[arg(long, default_value = "-2,2,-2,2")]
        window: String,
        /// Homogeneous coordinate set to 1 (0, 1 or 2).
        #[arg(long, default_value_t = 2)]
        chart: usize,
        #[arg(long, default_value_t = 0)]
        root_index: usize,
        #[arg(long)]
        no_points: bool,
        /// Also draw the first N iterates of this operator as further layers.
        #[arg(long)]
        op: Option<String>,
        #[arg(long, default_value_t = 0)]
        steps: usize,
    },
    /// Read an arrangement document and print it normalized.
    Import { file: PathBuf },
    /// Write an arrangement as JSON or as one line of coordinates per line.
    Export {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        approx: bool,
        #[command(flatten)]
        src: Source,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show { name: String },
    Build {
        name: String,
        #[command(flatten)]
        params: BuildArgs,
    },
}

#[derive(Subcommand)]
enum MatroidCmd {
    /// Flats of the matroid of a labelled arrangement.
    Extract {
        #[command(flatten)]
        src: Source,
    },
    /// Isomorphism of two matroids (arrangement or matroid documents).
    Iso { a: PathBuf, b: PathBuf },
    /// The flashing incidence matrix for n and its flats.
    Flashing {
        n: usize,
        #[arg(long)]
        matrix: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Clone, Default)]
struct BuildArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// + or - (also +1 / -1).
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    allow_degenerate: bool,
}

#[derive(Args, Clone)]
struct Source {
    /// Build the input from the catalog instead of reading JSON.
    #[arg(long)]
    catalog: Option<String>,
    /// JSON input file ("-" or absent: standard input).
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[command(flatten)]
    params: BuildArgs,
}

/// Errors that should exit with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

fn params(b: &BuildArgs) -> Result<Params> {
    let sign = match b.sign.as_deref() {
        None => None,
        Some("+") | Some("+1") | Some("1") => Some(1),
        Some("-") | Some("-1") => Some(-1),
        Some(s) => return Err(usage(format!("--sign must be + or -, got {s}"))),
    };
    Ok(Params {
        n: b.n,
        q: b.q,
        t: b.t.clone(),
        a: b.a.clone(),
        sign,
        seed: b.seed,
        field: b.field.clone(),
        allow_degenerate: b.allow_degenerate,
    })
}

fn build(name: &str, b: &BuildArgs) -> Result<catalog::Built> {
    let built = catalog::build(name, &params(b)?)?;
    if let Some(w) = &built.warning {
        eprintln!("warning: {w}");
    }
    Ok(built)
}

fn read_text(path: Option<&Path>) -> Result<String> {
    let mut s = String::new();
    match path {
        None => {
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
        }
        Some(p) if p == Path::new("-") => {
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
        }
        Some(p) => s = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
    }
    Ok(s)
}

fn read_json(path: Option<&Path>) -> Result<Value> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| anyhow!("invalid JSON: {e}"))
}

enum Doc {
    Lines(Arr),
    Points(PointConfig<AnyField>),
}

fn read_doc(v: &Value) -> Result<Doc> {
    if v.get("points").is_some() {
        Ok(Doc::Points(points_from_json(v)?))
    } else {
        Ok(Doc::Lines(arrangement_from_json(v)?))
    }
}

fn load_doc(src: &Source) -> Result<Doc> {
    match &src.catalog {
        Some(name) => Ok(Doc::Lines(build(name, &src.params)?.arrangement)),
        None => read_doc(&read_json(src.input.as_deref())?),
    }
}

fn load_lines(src: &Source) -> Result<Arr> {
    match load_doc(src)? {
        Doc::Lines(a) => Ok(a),
        Doc::Points(_) => bail!("expected a line arrangement, got a point configuration"),
    }
}

fn load_file(path: &Path) -> Result<Arr> {
    match read_doc(&read_json(Some(path))?)? {
        Doc::Lines(a) => Ok(a),
        Doc::Points(_) => bail!("{}: expected a line arrangement", path.display()),
    }
}

fn parse_op(s: &str) -> Result<Operator> {
    s.parse::<Operator>().map_err(|e| usage(format!("bad operator '{s}': {e}")))
}

fn print_json(v: &Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn profile_text(pr: &Profile) -> String {
    pr.t.iter().map(|(k, n)| format!("t{k}={n}")).collect::<Vec<_>>().join(" ")
}

fn h_text(pr: &Profile) -> String {
    match (pr.h_constant(), pr.h_approx()) {
        (Ok(h), Some(x)) => format!("{h} ({x:.4})"),
        _ => "undefined".to_string(),
    }
}

fn profile_json(pr: &Profile) -> Value {
    let t: serde_json::Map<String, Value> = pr.t.iter().map(|(k, n)| (k.to_string(), json!(n))).collect();
    json!({
        "lines": pr.d,
        "t": t,
        "h": pr.h_constant().ok().map(|h| h.to_string()),
    })
}

fn slack_text(name: &str, s: &Slack) -> String {
    let status = if !s.applicable {
        "n/a"
    } else if s.informational {
        "info"
    } else if s.value >= 0 {
        "ok"
    } else {
        "VIOLATED"
    };
    format!("{name:<16} {:>6}  {status}", s.value)
}

fn approx_elem(f: &AnyField, e: &<AnyField as ExactField>::Elem) -> String {
    match f.real_embedding(e, 0) {
        Ok(x) => format!("{x:.6}"),
        Err(_) => f.format_elem(e),
    }
}

macro_rules! say {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*)?
    };
}

macro_rules! say_raw {
    ($($arg:tt)*) => {
        write!(io::stdout().lock(), $($arg)*)?
    };
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Catalog { cmd } => match cmd {
            CatalogCmd::List => {
                let w = ENTRIES.iter().map(|e| e.name.len()).max().unwrap_or(0);
                for e in ENTRIES {
                    say!("{:<w$}  {}", e.name, e.summary);
                }
            }
            CatalogCmd::Show { name } => {
                let e = catalog::entry(&name).ok_or_else(|| anyhow!("unknown catalog entry: {name}"))?;
                say!("name       {}", e.name);
                say!("summary    {}", e.summary);
                say!("params     {}", if e.params.is_empty() { "none" } else { e.params });
                say!("field      {}", e.field);
                say!("profile    {}", e.profile.unwrap_or("-"));
                say!("forbidden  {}", e.forbidden.unwrap_or("-"));
            }
            CatalogCmd::Build { name, params } => {
                let built = build(&name, &params)?;
                let mut v = arrangement_to_json(&built.arrangement);
                if let Some(seed) = built.seed {
                    v["seed"] = json!(seed);
                }
                print_json(&v)?;
            }
        },
        Cmd::Apply { op, src } => {
            let op = parse_op(&op)?;
            let a = load_lines(&src)?;
            print_json(&arrangement_to_json(&op.apply(&a)))?;
        }
        Cmd::Seq {
            op,
            steps,
            max_lines,
            json,
            src,
        } => {
            let op = parse_op(&op)?;
            let seed = match &src.catalog {
                Some(name) => build(name, &src.params)?.seed,
                None => None,
            };
            let a = load_lines(&src)?;
            let budgets = Budgets {
                max_steps: steps,
                max_lines,
                ..Budgets::default()
            };
            let tr = run_sequence(&op, &a, budgets);
            if json {
                let mut v = tr.to_json();
                if let Some(s) = seed {
                    v["seed"] = json!(s);
                }
                print_json(&v)?;
            } else {
                if let Some(s) = seed {
                    say!("seed {s}");
                }
                say_raw!("{}", tr.to_table());
            }
        }
        Cmd::Profile { json, approx, src } => {
            let a = load_lines(&src)?;
            let pr = profile(&a);
            if json {
                let mut v = profile_json(&pr);
                if approx {
                    v["h_approx"] = json!(pr.h_approx());
                }
                print_json(&v)?;
            } else {
                say!("lines {}", pr.d);
                say!("{}", profile_text(&pr));
                say!("H {}", h_text(&pr));
            }
        }
        Cmd::Check { real, src } => {
            let a = load_lines(&src)?;
            let real = real || a.field().real_roots().is_ok();
            let rep = inequality_report(&a, real);
            say!("lines {}", rep.profile.d);
            say!("{}", profile_text(&rep.profile));
            say!("class {}", classify_degenerate(&a).name());
            say!("{}", slack_text("hirzebruch", &rep.hirzebruch));
            say!("{}", slack_text("melchior", &rep.melchior));
            say!("{}", slack_text("simpliciality", &rep.simpliciality));
            say!("{}", slack_text("de-bruijn-erdos", &rep.de_bruijn_erdos));
            match freeness_necessary(&rep.profile) {
                Some((a, b)) => say!("freeness roots {a} {b}"),
                None => say!("freeness roots none (not free)"),
            }
        }
        Cmd::Equiv { a, b } => {
            let (a, b) = (load_file(&a)?, load_file(&b)?);
            match projectively_equivalent(&a, &b)? {
                Some(g) => {
                    let f = a.field();
                    let rows: Vec<Vec<String>> = g
                        .matrix()
                        .iter()
                        .map(|r| r.iter().map(|e| f.format_elem(e)).collect())
                        .collect();
                    print_json(&json!({"equivalent": true, "matrix": rows}))?;
                }
                None => print_json(&json!({"equivalent": false}))?,
            }
        }
        Cmd::Matroid { cmd } => match cmd {
            MatroidCmd::Extract { src } => {
                let a = load_lines(&src)?;
                print_json(&extract_matroid(&a).to_json())?;
            }
            MatroidCmd::Iso { a, b } => {
                let load = |p: &Path| -> Result<Matroid3> {
                    let v = read_json(Some(p))?;
                    if v.get("flats").is_some() {
                        Ok(Matroid3::from_json(&v)?)
                    } else {
                        Ok(extract_matroid(&arrangement_from_json(&v)?))
                    }
                };
                let (ma, mb) = (load(&a)?, load(&b)?);
                match matroid_isomorphic(&ma, &mb) {
                    Some(s) => print_json(&json!({"isomorphic": true, "bijection": s}))?,
                    None => print_json(&json!({"isomorphic": false}))?,
                }
            }
            MatroidCmd::Flashing { n, matrix } => {
                let m = flashing_incidence(n)?;
                if matrix {
                    say!("{}", m.to_text());
                } else {
                    print_json(&m.to_matroid().to_json())?;
                }
            }
        },
        Cmd::Conics { min, src } => {
            let pts = match load_doc(&src)? {
                Doc::Points(p) => p,
                Doc::Lines(a) => dualize_lines(&a),
            };
            let f = pts.field().clone();
            let list: Vec<_> = pts.iter().cloned().collect();
            let found = rich_conics(&f, &list, min)?;
            let out: Vec<Value> = found
                .iter()
                .map(|c| {
                    json!({
                        "coefficients": c.conic.coeffs().iter().map(|e| f.format_elem(e)).collect::<Vec<_>>(),
                        "points": c.points,
                        "irreducible": c.irreducible,
                    })
                })
                .collect();
            print_json(&json!({"monomials": ["x^2", "xy", "xz", "y^2", "yz", "z^2"], "conics": out}))?;
        }
        Cmd::Render {
            inputs,
            catalog,
            output,
            window,
            chart,
            root_index,
            no_points,
            op,
            steps,
        } => {
            let mut layers: Vec<Arr> = Vec::new();
            if let Some(name) = catalog {
                layers.push(build(&name, &BuildArgs::default())?.arrangement);
            }
            for p in &inputs {
                layers.push(load_file(p)?);
            }
            if layers.is_empty() {
                layers.push(load_lines(&Source {
                    catalog: None,
                    input: None,
                    params: BuildArgs::default(),
                })?);
            }
            if let Some(op) = op {
                let op = parse_op(&op)?;
                for _ in 0..steps {
                    let next = op.apply(layers.last().expect("nonempty"));
                    layers.push(next);
                }
            }
            let field = layers[0].field().clone();
            if layers.iter().any(|l| l.field() != &field) {
                bail!("all layers must share one field");
            }
            let parts: Vec<&str> = window.split(',').map(str::trim).collect();
            if parts.len() != 4 {
                return Err(usage("--window needs x0,x1,y0,y1"));
            }
            let q = lineop::field::Rationals;
            let r = |s: &str| q.parse_elem(s).map_err(|e| usage(format!("bad window bound '{s}': {e}")));
            let spec = RenderSpec {
                x_range: (r(parts[0])?, r(parts[1])?),
                y_range: (r(parts[2])?, r(parts[3])?),
                chart,
                root_index,
                mark_points: !no_points,
                ..RenderSpec::default()
            };
            let classes: Vec<String> = (0..layers.len()).map(|i| format!("step{i}")).collect();
            let pairs: Vec<(&Arr, &str)> = layers.iter().zip(&classes).map(|(l, c)| (l, c.as_str())).collect();
            let rendered = render_svg(&pairs, &spec)?;
            match output {
                Some(p) => fs::write(&p, &rendered.svg).with_context(|| format!("writing {}", p.display()))?,
                None => say_raw!("{}", rendered.svg),
            }
            eprintln!(
                "segments {} omitted {} outside {} points {}",
                rendered.segments.len(),
                rendered.omitted,
                rendered.outside,
                rendered.markers.len()
            );
        }
        Cmd::Import { file } => match read_doc(&read_json(Some(&file))?)? {
            Doc::Lines(a) => print_json(&arrangement_to_json(&a))?,
            Doc::Points(p) => print_json(&points_to_json(&p))?,
        },
        Cmd::Export {
            format,
            output,
            approx,
            src,
        } => {
            let a = load_lines(&src)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&arrangement_to_json(&a))? + "\n",
                Format::Text => {
                    let f = a.field();
                    let mut s = format!("# field {}\n", f.spec());
                    for l in a.iter() {
                        let c: Vec<String> = l
                            .coords()
                            .iter()
                            .map(|e| if approx { approx_elem(f, e) } else { f.format_elem(e) })
                            .collect();
                        s.push_str(&c.join(" "));
                        s.push('\n');
                    }
                    s
                }
            };
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => say_raw!("{text}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if e
                .downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
