use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pconn::coloring::{first_unconnected_pair, first_weak_pair};
use pconn::formats::{certificate_from_json, certificate_to_json, coloring_from_json, parse_edge_list};
use pconn::graph6::{from_graph6, parse_graph6_lines, to_graph6};
use pconn::solver::{pc_exact_with, verify_certificate, SolverOptions};
use pconn::survey::{
    exception_fixture_codes, survey_bipartite_theorem8, survey_corpus, survey_main_theorem, SurveyOptions,
    SurveyReport, Theorem,
};
use pconn::{Error, Graph, PcCertificate};
use serde_json::json;

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_CONTRADICTION: u8 = 3;

#[derive(Parser)]
#[command(name = "pc", about = "Proper connection numbers of small graphs", version)]
struct Cli {
    /// Cap on worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Compute pc exactly and print a witness.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Largest palette to search; smaller values make this a decision procedure.
        #[arg(long)]
        kmax: Option<u8>,
        /// Also report whether the witness has the strong property.
        #[arg(long)]
        strong: bool,
        /// Write the witness certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a colouring file or a certificate against a graph.
    Verify {
        #[command(flatten)]
        source: OptionalSource,
        /// Colouring file (JSON) for the given graph.
        #[arg(long, conflicts_with = "certificate")]
        coloring: Option<PathBuf>,
        /// Certificate file; carries its own graph.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Require the strong property as well.
        #[arg(long)]
        strong: bool,
    },
    /// Compute pc and emit the witness as a certificate file.
    Certify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        kmax: Option<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep every graph of the given orders and compare against the known exceptions.
    Survey {
        /// Order range such as `5..8` (inclusive) or a single order.
        #[arg(long = "n", value_parser = parse_range)]
        range: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value_t = TheoremArg::Main)]
        theorem: TheoremArg,
        /// graph6 corpus to survey instead of the built-in enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Report path; exceptions also go to `<out>.exceptions.g6`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Main,
    Bipartite,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph as a graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file (`n <count>` header, then `u v` lines).
    #[arg(long)]
    edges: Option<PathBuf>,
    /// graph6 corpus file; every graph is processed.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalSource {
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    edges: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::SearchBudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order `{t}`"));
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.trim_start_matches('='))?)),
        None => num(s).map(|n| (n, n)),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graphs(graph6: &Option<String>, edges: &Option<PathBuf>, input: &Option<PathBuf>) -> Result<Vec<Graph>, Failure> {
    if let Some(code) = graph6 {
        return Ok(vec![from_graph6(code.trim())?]);
    }
    if let Some(path) = edges {
        return Ok(vec![parse_edge_list(&read(path)?)?]);
    }
    if let Some(path) = input {
        return Ok(parse_graph6_lines(&read(path)?)?);
    }
    Err(input_error("no graph given"))
}

fn solver_options() -> Result<SolverOptions, Failure> {
    match std::env::var("PC_BUDGET_MS") {
        Ok(ms) => {
            let ms: u64 = ms.trim().parse().map_err(|_| input_error("PC_BUDGET_MS must be an integer"))?;
            Ok(SolverOptions {
                budget: Some(Duration::from_millis(ms)),
            })
        }
        Err(_) => Ok(SolverOptions::default()),
    }
}

fn colors_text(cert: &PcCertificate) -> String {
    let c = cert.coloring();
    c.graph()
        .edges()
        .iter()
        .zip(c.colors())
        .map(|(&(u, v), col)| format!("{u}-{v}:{col}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn compute(g: &Graph, kmax: Option<u8>, strong: bool, format: Format) -> Result<(String, PcCertificate), Failure> {
    let opts = solver_options()?;
    let (pc, cert) = match pc_exact_with(g, kmax, &opts) {
        Ok(r) => r,
        Err(Error::SearchBudgetExceeded { lower, upper }) => {
            let text = match format {
                Format::Text => format!("pc in [{lower}, {upper}]\n"),
                Format::Structured => format!(
                    "{}\n",
                    json!({"graph6": to_graph6(g), "inconclusive": {"lower": lower, "upper": upper}})
                ),
            };
            return Err(Failure {
                code: EXIT_BUDGET,
                message: text,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let strong_holds = if strong { Some(first_weak_pair(cert.coloring())?.is_none()) } else { None };
    let text = match format {
        Format::Text => {
            let mut s = format!("pc={pc}\nstrategy={}\nwitness={}\n", cert.strategy(), colors_text(&cert));
            if let Some(b) = strong_holds {
                s.push_str(&format!("strong={b}\n"));
            }
            s
        }
        Format::Structured => {
            let witness: serde_json::Value = serde_json::from_str(&certificate_to_json(&cert)).expect("valid json");
            let mut v = json!({"graph6": to_graph6(g), "pc": pc, "strategy": cert.strategy().tag(), "witness": witness});
            if let Some(b) = strong_holds {
                v["strong"] = json!(b);
            }
            format!("{v}\n")
        }
    };
    Ok((text, cert))
}

fn cmd_compute(source: &Source, kmax: Option<u8>, strong: bool, out: &Option<PathBuf>, format: Format) -> Result<(), Failure> {
    let graphs = load_graphs(&source.graph6, &source.edges, &source.input)?;
    let many = graphs.len() > 1 || source.input.is_some();
    let mut certs = Vec::new();
    let mut worst = None;
    for g in &graphs {
        match compute(g, kmax, strong, format) {
            Ok((text, cert)) => {
                if many && format == Format::Text {
                    print!("graph6={}\n{text}\n", to_graph6(g));
                } else {
                    print!("{text}");
                }
                certs.push(cert);
            }
            Err(f) if f.code == EXIT_BUDGET => {
                print!("{}", f.message);
                worst = Some(f.code);
            }
            Err(f) => return Err(f),
        }
    }
    if let Some(path) = out {
        let body = if certs.len() == 1 {
            certificate_to_json(&certs[0])
        } else {
            let all: Vec<serde_json::Value> =
                certs.iter().map(|c| serde_json::from_str(&certificate_to_json(c)).expect("valid json")).collect();
            serde_json::to_string_pretty(&all).expect("serializes")
        };
        write(path, &(body + "\n"))?;
    }
    match worst {
        Some(code) => Err(Failure {
            code,
            message: String::new(),
        }),
        None => Ok(()),
    }
}

fn cmd_verify(source: &OptionalSource, coloring: &Option<PathBuf>, certificate: &Option<PathBuf>, strong: bool) -> Result<(), Failure> {
    if let Some(path) = certificate {
        let cert = certificate_from_json(&read(path)?)?;
        let report = verify_certificate(&cert);
        if strong && !cert.strong() {
            return Err(input_error("certificate does not claim the strong property"));
        }
        if report.ok {
            println!("ok");
            return Ok(());
        }
        return Err(input_error(report.reasons.join("\n")));
    }
    let Some(path) = coloring else {
        return Err(input_error("give --coloring or --certificate"));
    };
    let graphs = load_graphs(&source.graph6, &source.edges, &None)?;
    let c = coloring_from_json(&read(path)?, &graphs[0])?;
    if let Some((u, v)) = first_unconnected_pair(&c)? {
        return Err(input_error(format!("not proper connected: no proper path between {u} and {v}")));
    }
    if strong {
        if let Some((u, v)) = first_weak_pair(&c)? {
            return Err(input_error(format!("proper connected but not strong: pair ({u}, {v})")));
        }
    }
    println!("ok");
    Ok(())
}

fn cmd_certify(source: &Source, kmax: Option<u8>, out: &Option<PathBuf>) -> Result<(), Failure> {
    let graphs = load_graphs(&source.graph6, &source.edges, &source.input)?;
    if graphs.len() != 1 {
        return Err(input_error("certify takes exactly one graph"));
    }
    let (_, cert) = compute(&graphs[0], kmax, false, Format::Text)?;
    let body = certificate_to_json(&cert) + "\n";
    match out {
        Some(path) => write(path, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn expected_codes(theorem: Theorem, report: &SurveyReport) -> Result<Vec<String>, Failure> {
    if theorem == Theorem::Bipartite {
        return Ok(Vec::new());
    }
    let [lo, hi] = report.n_range;
    let mut codes: Vec<String> = exception_fixture_codes()?
        .into_iter()
        .filter(|c| from_graph6(c).map(|g| (lo..=hi).contains(&g.n())).unwrap_or(false))
        .collect();
    codes.sort();
    Ok(codes)
}

fn survey_text(report: &SurveyReport) -> String {
    let mut s = String::new();
    for t in &report.totals {
        s.push_str(&format!(
            "n={} graphs={} exact_fallbacks={} exceptions={} inconclusive={}\n",
            t.n, t.graphs, t.exact_fallbacks, t.exceptions, t.inconclusive
        ));
    }
    for e in &report.exceptions {
        s.push_str(&format!("exception n={} pc={} graph6={}\n", e.n, e.pc, e.graph6));
    }
    for i in &report.inconclusive {
        s.push_str(&format!("inconclusive n={} graph6={} pc in [{}, {}]\n", i.n, i.graph6, i.lower, i.upper));
    }
    s
}

fn cmd_survey(range: Option<(usize, usize)>, theorem: TheoremArg, input: &Option<PathBuf>, out: &Option<PathBuf>, format: Format) -> Result<(), Failure> {
    let theorem = match theorem {
        TheoremArg::Main => Theorem::Main,
        TheoremArg::Bipartite => Theorem::Bipartite,
    };
    let opts = SurveyOptions {
        budget: solver_options()?.budget,
    };
    let report = match input {
        Some(path) => survey_corpus(theorem, &read(path)?, &opts)?,
        None => {
            let (lo, hi) = range.unwrap_or(theorem.range());
            match theorem {
                Theorem::Main => survey_main_theorem(lo, hi, &opts)?,
                Theorem::Bipartite => survey_bipartite_theorem8(lo, hi, &opts)?,
            }
        }
    };
    let body = match format {
        Format::Text => survey_text(&report),
        Format::Structured => report.to_json() + "\n",
    };
    match out {
        Some(path) => {
            write(path, &(report.to_json() + "\n"))?;
            let mut sidecar = path.clone().into_os_string();
            sidecar.push(".exceptions.g6");
            write(Path::new(&sidecar), &report.exceptions_graph6())?;
            print!("{}", survey_text(&report));
        }
        None => print!("{body}"),
    }
    if !report.inconclusive.is_empty() {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: "some graphs were not settled within the budget".into(),
        });
    }
    let mut found = report.exception_codes();
    found.sort();
    let expected = expected_codes(theorem, &report)?;
    if found != expected {
        return Err(Failure {
            code: EXIT_CONTRADICTION,
            message: format!("exceptions differ from the recorded set: found {found:?}, expected {expected:?}"),
        });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| input_error(e.to_string()))?;
    }
    match &cli.command {
        Command::Compute { source, kmax, strong, out } => cmd_compute(source, *kmax, *strong, out, cli.format),
        Command::Verify {
            source,
            coloring,
            certificate,
            strong,
        } => cmd_verify(source, coloring, certificate, *strong),
        Command::Certify { source, kmax, out } => cmd_certify(source, *kmax, out),
        Command::Survey {
            range,
            theorem,
            input,
            out,
        } => cmd_survey(*range, *theorem, input, out, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("{}", f.message.trim_end());
            }
            ExitCode::from(f.code)
        }
    }
}
