use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sl3_specht::json::int;
use sl3_specht::specht::{expand_in_m, expand_via_webs, BasisTag, SpechtBasis};
use sl3_specht::suite::{run_suite, SuiteOptions};
use sl3_specht::web::{
    crossing_diagram_of_fork, depth_word, reduce, reduce_sum, to_svg, to_tikz, tymoczko_web, web_sum_from_json,
    web_sum_to_json,
};
use sl3_specht::{Error, ForkDiagram, LinComb, OrderKind, Tableau, Web, WebSum};

#[derive(Parser)]
#[command(name = "sl3-specht", version, about = "Fork diagrams, M-diagrams and sl3-webs for S^(n,n,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux with their diagrams and webs.
    Enumerate {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a bijection to a tableau, or invert one on a fork diagram.
    Map {
        #[arg(long, value_enum)]
        to: MapTarget,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a fork diagram in M-diagrams or webs, or reduce a web.
    Reduce {
        #[arg(long, value_enum, ignore_case = true, default_value_t = Basis::W)]
        to: Basis,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
    /// Print a transition matrix and its unitriangularity verdict.
    Matrix {
        #[arg(long, value_enum, ignore_case = true)]
        from: Basis,
        #[arg(long, value_enum, ignore_case = true)]
        to: Basis,
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Order::Prec)]
        order: Order,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the self-check suite.
    Check {
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a tableau's web, a fork diagram or a web.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
}

#[derive(Args)]
struct Size {
    /// Number of columns.
    #[arg(value_name = "N", conflicts_with = "n_flag")]
    n: Option<usize>,
    #[arg(long = "n", id = "n_flag", value_name = "N")]
    n_flag: Option<usize>,
    /// Largest accepted n.
    #[arg(long, default_value_t = 5)]
    limit: usize,
}

impl Size {
    fn get(&self) -> Result<usize, Failure> {
        let n = self.n.or(self.n_flag).ok_or_else(|| Failure::Input("missing N".into()))?;
        check_limit(n, self.limit)?;
        Ok(n)
    }
}

#[derive(Args)]
struct Input {
    /// Tableau (JSON or `1,4/2,5/3,6`), fork diagram JSON, web JSON or a web
    /// sum; `-` reads standard input.
    #[arg(value_name = "INPUT", required_unless_present = "file")]
    value: Option<String>,
    #[arg(long, conflicts_with = "value")]
    file: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> Result<String, Failure> {
        match (&self.value, &self.file) {
            (_, Some(path)) => {
                std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
            }
            (Some(v), None) if v == "-" => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(e.to_string()))?;
                Ok(s)
            }
            (Some(v), None) => Ok(v.clone()),
            (None, None) => Err(Failure::Input("no input".into())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapTarget {
    /// Polytabloid diagram.
    Phi,
    /// M-diagram.
    Psi,
    /// Boundary word.
    Word,
    /// Non-elliptic web.
    Web,
    /// Tableau of a polytabloid diagram or M-diagram.
    Tableau,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Basis {
    P,
    M,
    W,
}

impl From<Basis> for BasisTag {
    fn from(b: Basis) -> Self {
        match b {
            Basis::P => BasisTag::P,
            Basis::M => BasisTag::M,
            Basis::W => BasisTag::W,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    /// Closure of the covering relation on boundary words.
    Prec,
    /// Weak order transported from permutations.
    Weak,
}

enum Failure {
    Input(String),
    /// A check ran and failed; its report still goes to stdout.
    Check {
        output: String,
        message: String,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn check_limit(n: usize, limit: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::ZeroColumns.into());
    }
    if n > limit {
        return Err(Error::TooLarge { n, limit }.into());
    }
    Ok(())
}

fn unsupported(format: Format, verb: &str) -> Failure {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::Input(format!("format {name} is not available for {verb}"))
}

enum Parsed {
    Tableau(Tableau),
    Diagram(ForkDiagram),
    Web(Web),
    Sum(WebSum),
}

fn parse(text: &str) -> Result<Parsed, Failure> {
    let text = text.trim();
    if !text.starts_with('{') {
        return Ok(Parsed::Tableau(text.parse()?));
    }
    let v: Value = serde_json::from_str(text).map_err(|e| Failure::Input(format!("json: {e}")))?;
    let has = |k: &str| v.get(k).is_some();
    match (has("rows"), has("arcs"), has("half_edges"), has("terms")) {
        (true, false, false, false) => Ok(Parsed::Tableau(from_value(v)?)),
        (false, true, false, false) => Ok(Parsed::Diagram(from_value(v)?)),
        (false, false, true, false) => Ok(Parsed::Web(from_value(v)?)),
        (false, false, false, true) => Ok(Parsed::Sum(web_sum_from_json(&v)?)),
        _ => Err(Failure::Input("JSON is not a tableau, fork diagram, web or web sum".into())),
    }
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Input(format!("json: {e}")))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn word_of(w: &Web) -> String {
    depth_word(w).map(|w| w.to_string()).unwrap_or_else(|_| "?".into())
}

fn enumerate(n: usize, format: Format) -> Result<String, Failure> {
    let rows = Tableau::enumerate(n)?
        .into_iter()
        .map(|t| {
            let w = tymoczko_web(&t)?;
            Ok((ForkDiagram::phi(&t)?, ForkDiagram::psi(&t)?, t.word()?, w, t))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(p, m, word, w, t)| {
                    json!({"tableau": t, "word": word.to_string(), "polytabloid": p, "m_diagram": m, "web": w})
                })
                .collect();
            Ok(pretty(&json!({"n": n, "count": items.len(), "items": items})))
        }
        Format::Text => {
            let mut s = format!("{} standard tableaux of shape ({n},{n},{n})\n", rows.len());
            for (p, m, word, w, t) in &rows {
                s += &format!("{}  {word}  P={p}  M={m}  W: {} vertices\n", t.to_compact(), w.internal_vertex_count());
            }
            Ok(s)
        }
        f => Err(unsupported(f, "enumerate")),
    }
}

fn map(to: MapTarget, text: &str, format: Format) -> Result<String, Failure> {
    let out: Value = match (to, parse(text)?) {
        (MapTarget::Tableau, Parsed::Diagram(d)) => {
            let p = d.polytabloid_tableau();
            let m = d.m_tableau();
            if p.is_none() && m.is_none() {
                return Err(Failure::Input(format!("{d} is neither a polytabloid diagram nor an M-diagram")));
            }
            if format == Format::Text {
                let show = |t: Option<Tableau>| t.map_or("-".to_string(), |t| t.to_compact());
                return Ok(format!("phi^-1: {}\npsi^-1: {}\n", show(p), show(m)));
            }
            json!({"phi_inverse": p, "psi_inverse": m})
        }
        (MapTarget::Tableau, _) => return Err(Failure::Input("--to tableau expects a fork diagram".into())),
        (to, Parsed::Tableau(t)) => {
            let (v, s) = match to {
                MapTarget::Phi => {
                    let d = ForkDiagram::phi(&t)?;
                    (json!(d), d.to_string())
                }
                MapTarget::Psi => {
                    let d = ForkDiagram::psi(&t)?;
                    (json!(d), d.to_string())
                }
                MapTarget::Word => {
                    let w = t.word()?.to_string();
                    (json!(w), w)
                }
                MapTarget::Web => {
                    let w = tymoczko_web(&t)?;
                    let s = format!("{} (depth word {})", w.key(), word_of(&w));
                    (json!(w), s)
                }
                MapTarget::Tableau => unreachable!(),
            };
            if format == Format::Text {
                return Ok(format!("{s}\n"));
            }
            v
        }
        _ => return Err(Failure::Input("expected a tableau".into())),
    };
    match format {
        Format::Json => Ok(pretty(&out)),
        f => Err(unsupported(f, "map")),
    }
}

fn diagram_sum_text(x: &LinComb<ForkDiagram>) -> String {
    let mut s = String::new();
    for (d, c) in x.iter() {
        let t = d.m_tableau().map(|t| format!("  m[{}]", t.to_compact())).unwrap_or_default();
        s += &format!("{c:>6}  {d}{t}\n");
    }
    s
}

fn web_sum_text(x: &WebSum) -> Result<String, Failure> {
    let mut s = String::new();
    for (k, c) in x.iter() {
        let w = k.decode()?;
        s += &format!("{c:>6}  W[{}]\n", word_of(&w));
    }
    Ok(s)
}

fn reduce_cmd(to: Basis, text: &str, format: Format, limit: usize) -> Result<String, Failure> {
    let parsed = parse(text)?;
    let points = match &parsed {
        Parsed::Tableau(t) => 3 * t.n(),
        Parsed::Diagram(d) => d.points(),
        Parsed::Web(w) => w.points(),
        Parsed::Sum(s) => s.basis().next().and_then(|k| k.decode().ok()).map_or(0, |w| w.points()),
    };
    check_limit(points.div_ceil(3).max(1), limit)?;
    match (parsed, to) {
        (Parsed::Diagram(d), Basis::M) => {
            let x = expand_in_m(&d);
            match format {
                Format::Json => {
                    let terms: Vec<Value> =
                        x.iter().map(|(d, c)| json!({"coefficient": int(c), "diagram": d})).collect();
                    Ok(pretty(&json!({"terms": terms})))
                }
                Format::Text => Ok(diagram_sum_text(&x)),
                f => Err(unsupported(f, "reduce")),
            }
        }
        (p, Basis::W) => {
            let x = match p {
                Parsed::Diagram(d) => expand_via_webs(&d),
                Parsed::Web(w) => reduce(&w),
                Parsed::Sum(s) => reduce_sum(&s),
                Parsed::Tableau(_) => return Err(Failure::Input("reduce expects a diagram or a web".into())),
            };
            match format {
                Format::Json => Ok(pretty(&web_sum_to_json(&x))),
                Format::Text => web_sum_text(&x),
                f => Err(unsupported(f, "reduce")),
            }
        }
        _ => Err(Failure::Input("only fork diagrams expand in M; webs reduce to W".into())),
    }
}

fn matrix(from: Basis, to: Basis, n: usize, order: Order, format: Format) -> Result<String, Failure> {
    let basis = SpechtBasis::new(n)?;
    let m = basis.transition_matrix(from.into(), to.into())?;
    let kind = match order {
        Order::Prec => OrderKind::PrecClosure,
        Order::Weak => OrderKind::Weak,
    };
    let poset = basis.poset(kind)?;
    let violations = m.violations(&poset);
    let unitriangular = m.diagonal_is_one() && violations.is_empty();
    let det = m.determinant();
    let negative = m.negative_entries();
    let body = match format {
        Format::Json => {
            let mut v = m.to_json();
            v["partial_order"] = json!(format!("{kind:?}"));
            v["unitriangular"] = json!(unitriangular);
            v["violations"] = json!(violations);
            v["determinant"] = int(&det);
            v["negative_entries"] = json!(negative);
            pretty(&v)
        }
        Format::Text => {
            let mut s = m.to_string();
            s += &format!("determinant {det}, {negative} negative entries\n");
            s += &format!(
                "unitriangular w.r.t. {kind:?}: {} ({} violations)\n",
                if unitriangular { "yes" } else { "no" },
                violations.len()
            );
            s
        }
        f => return Err(unsupported(f, "matrix")),
    };
    if unitriangular {
        Ok(body)
    } else {
        Err(Failure::Check { output: body, message: format!("{}->{} is not unitriangular", m.from, m.to) })
    }
}

fn check(n: usize, seed: u64, format: Format) -> Result<String, Failure> {
    let mut opts = SuiteOptions::new(n);
    opts.seed = seed;
    let outcomes = run_suite(&opts)?;
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let body = match format {
        Format::Json => {
            let items: Vec<Value> =
                outcomes.iter().map(|o| json!({"name": o.name, "passed": o.passed, "detail": o.detail})).collect();
            pretty(&json!({"n": n, "seed": seed, "passed": failed == 0, "checks": items}))
        }
        Format::Text => {
            let mut s = String::new();
            for o in &outcomes {
                // timings go to stderr so that stdout stays deterministic
                eprintln!("{}: {} ms", o.name, o.millis);
                s += &format!("{} {:<14} {}\n", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
            }
            s += &format!("{} of {} checks passed\n", outcomes.len() - failed, outcomes.len());
            s
        }
        f => return Err(unsupported(f, "check")),
    };
    if failed == 0 {
        Ok(body)
    } else {
        Err(Failure::Check { output: body, message: format!("{failed} checks failed") })
    }
}

fn render(text: &str, format: Format, limit: usize) -> Result<String, Failure> {
    let web = match parse(text)? {
        Parsed::Tableau(t) => {
            check_limit(t.n(), limit)?;
            tymoczko_web(&t)?
        }
        Parsed::Diagram(d) => {
            check_limit(d.n(), limit)?;
            crossing_diagram_of_fork(&d)
        }
        Parsed::Web(w) => w,
        Parsed::Sum(_) => return Err(Failure::Input("render draws a single web".into())),
    };
    match format {
        Format::Svg => Ok(to_svg(&web)),
        Format::Tikz => Ok(to_tikz(&web)),
        Format::Json => Ok(pretty(&json!(web))),
        Format::Text => Err(unsupported(format, "render")),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Enumerate { size, format } => enumerate(size.get()?, format),
        Command::Map { to, input, format } => map(to, &input.read()?, format),
        Command::Reduce { to, input, format, limit } => reduce_cmd(to, &input.read()?, format, limit),
        Command::Matrix { from, to, size, order, format } => matrix(from, to, size.get()?, order, format),
        Command::Check { size, seed, format } => check(size.get()?, seed, format),
        Command::Render { input, format, limit } => render(&input.read()?, format, limit),
    }
}

fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    // a closed pipe (`| head`) is not an error
    let _ = stdout.write_all(out.as_bytes());
    if !out.is_empty() && !out.ends_with('\n') {
        let _ = stdout.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check { output, message }) => {
            emit(&output);
            eprintln!("check failed: {message}");
            ExitCode::from(1)
        }
    }
}
