use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use hyperfan::hypercore::shadow;
use hyperfan::io::{fmt_sig, read_hypergraph, write_bound_csv, write_hypergraph, write_perron, write_scan_csv};
use hyperfan::outerplanar::{enumerate_triangulations, is_outerplanar_hypergraph, FailureReason};
use hyperfan::spectral::{apply_adjacency, poly_eval};
use hyperfan::verify::{asymptotic_table, check_fan_bound, extremal_scan_bounded, DEFAULT_MAX_N};
use hyperfan::{fan, spectral_radius, Error, SolverConfig, UniformHypergraph};

#[derive(Parser, Debug)]
#[command(name = "hyperfan", version, about = "Spectral radii of uniform hypergraphs and the outerplanar fan")]
struct Cli {
    /// Stopping tolerance on the Collatz-Wielandt bracket.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Iteration cap per connected component.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_iter: usize,
    /// Seed of the start-vector perturbation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Keep one triangulation per dihedral class (enumerate, scan).
    #[arg(long, global = true)]
    dedupe: bool,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the fan hypergraph on n vertices.
    Fan { n: usize },
    /// Solve for the spectral radius of a hypergraph file ("-" for stdin).
    Lambda { input: PathBuf },
    /// List the triangulations of the convex n-gon.
    Enumerate { n: usize },
    /// Rank every maximal outerplanar hypergraph on n vertices.
    Scan {
        n: usize,
        /// Largest accepted n.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Compare the fan's spectral radius with the explicit lower bound.
    Bound { n: usize },
    /// Bound rows along a schedule of n.
    Asymptotics {
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 100, 1000, 10000])]
        ns: Vec<usize>,
    },
    /// Shadow statistics, outerplanarity report and solver residual.
    Check { input: PathBuf },
}

impl Cli {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            tol: self.tol,
            max_iter: self.max_iter,
            seed: self.seed,
            ..SolverConfig::default()
        }
    }

    fn header(&self) -> Vec<String> {
        let command = match &self.command {
            Command::Fan { n } => format!("fan {n}"),
            Command::Lambda { input } => format!("lambda {}", input.display()),
            Command::Enumerate { n } => format!("enumerate {n}"),
            Command::Scan { n, max_n } => format!("scan {n} max_n={max_n}"),
            Command::Bound { n } => format!("bound {n}"),
            Command::Asymptotics { ns } => format!(
                "asymptotics ns={}",
                ns.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            ),
            Command::Check { input } => format!("check {}", input.display()),
        };
        vec![format!(
            "hyperfan {} {command} | {} dedupe={}",
            env!("CARGO_PKG_VERSION"),
            self.config(),
            self.dedupe
        )]
    }
}

fn io_err(path: &Path, e: io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

fn read_input(path: &Path) -> Result<UniformHypergraph, Error> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map_err(|e| io_err(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    }
    read_hypergraph(&text)
}

fn check_report(h: &UniformHypergraph, cfg: &SolverConfig, header: &[String]) -> Result<String, Error> {
    let g = shadow(h);
    let mut out = String::new();
    for line in header {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("n = {}\nr = {}\nedges = {}\n\n", h.n(), h.r(), h.edge_count()));
    out.push_str("[shadow]\n");
    out.push_str(&format!("edges = {}\n", g.edge_count()));
    out.push_str(&format!("min_degree = {}\n", if h.n() == 0 { 0 } else { g.min_degree() }));
    out.push_str(&format!("max_degree = {}\n", if h.n() == 0 { 0 } else { g.max_degree() }));
    out.push_str(&format!("components = {}\n", g.components().len()));
    out.push_str(&format!("two_connected = {}\n\n", g.is_two_connected()));

    out.push_str("[outerplanar]\n");
    if h.r() == 3 {
        let rep = is_outerplanar_hypergraph(h)?;
        out.push_str(&format!("ok = {}\n", rep.ok));
        out.push_str(&format!("maximal = {}\n", rep.ok && rep.maximal));
        if let Some(cycle) = &rep.outer_cycle {
            out.push_str(&format!("outer_cycle = {cycle:?}\n"));
        }
        match &rep.failure_reason {
            Some(FailureReason::ShadowNotOuterplanar { block }) => {
                out.push_str(&format!("failure_reason = \"shadow-not-outerplanar\"\nfailure_block = {block:?}\n"))
            }
            Some(FailureReason::HyperedgeNotFace { edge }) => {
                out.push_str(&format!("failure_reason = \"hyperedge-not-face\"\nfailure_edge = {edge:?}\n"))
            }
            None => {}
        }
    } else {
        out.push_str("applicable = false\n");
    }
    out.push('\n');

    let res = spectral_radius(h, cfg)?;
    let ax = apply_adjacency(h, &res.vector)?;
    let dual: f64 = ax.iter().zip(&res.vector).map(|(a, x)| a * x).sum();
    let duality_gap = (dual - poly_eval(h, &res.vector)?).abs();
    out.push_str("[spectral]\n");
    out.push_str(&format!("lambda = {}\n", fmt_sig(res.lambda)));
    out.push_str(&format!(
        "bracket = [{}, {}]\n",
        fmt_sig(res.bracket_low),
        fmt_sig(res.bracket_high)
    ));
    out.push_str(&format!("residual = {}\n", fmt_sig(res.residual)));
    out.push_str(&format!("iterations = {}\n", res.iterations));
    out.push_str(&format!("duality_gap = {}\n", fmt_sig(duality_gap)));
    out.push_str(&format!("degenerate = {}\n", res.degenerate));
    Ok(out)
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Error> {
    let cfg = cli.config();
    cfg.validate()?;
    let header = cli.header();
    let emit = |out: &mut dyn Write, text: String| out.write_all(text.as_bytes());
    let result = match &cli.command {
        Command::Fan { n } => emit(out, write_hypergraph(&fan(*n)?, &header)),
        Command::Lambda { input } => {
            let h = read_input(input)?;
            emit(out, write_perron(&spectral_radius(&h, &cfg)?, &header))
        }
        Command::Enumerate { n } => {
            if *n < 3 {
                return Err(Error::InvalidSize {
                    what: "polygon",
                    n: *n,
                    min: 3,
                });
            }
            let mut count = 0u128;
            (|| {
                writeln!(out, "# {}", header[0])?;
                for t in enumerate_triangulations(*n, cli.dedupe) {
                    writeln!(out, "{t}")?;
                    count += 1;
                }
                writeln!(out, "count {count}")
            })()
        }
        Command::Scan { n, max_n } => {
            let report = extremal_scan_bounded(*n, &cfg, cli.dedupe, *max_n)?;
            emit(out, write_scan_csv(&report, &header))
        }
        Command::Bound { n } => emit(out, write_bound_csv(&[check_fan_bound(*n, &cfg)?], &header)),
        Command::Asymptotics { ns } => {
            let rows = asymptotic_table(ns, &cfg).into_iter().collect::<Result<Vec<_>, _>>()?;
            emit(out, write_bound_csv(&rows, &header))
        }
        Command::Check { input } => {
            let h = read_input(input)?;
            emit(out, check_report(&h, &cfg, &header)?)
        }
    };
    result.and_then(|_| out.flush()).map_err(|e| Error::Io(e.to_string()))
}

fn error_record(kind: &str, err: &dyn std::fmt::Display, extra: Option<(usize, &str)>) {
    let mut record = json!({ "error": kind, "message": err.to_string() });
    if let Some((line, field)) = extra {
        record["line"] = json!(line);
        record["field"] = json!(field);
    }
    eprintln!("{record}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            error_record("usage", &message.trim_end(), None);
            return ExitCode::from(2);
        }
    };

    // write to a temporary file next to the target so a failed run leaves
    // no partial artifact
    let outcome = match &cli.out {
        None => run(&cli, &mut BufWriter::new(io::stdout().lock())),
        Some(path) => {
            let tmp = path.with_extension("partial");
            File::create(&tmp)
                .map_err(|e| io_err(&tmp, e))
                .and_then(|f| run(&cli, &mut BufWriter::new(f)))
                .and_then(|_| std::fs::rename(&tmp, path).map_err(|e| io_err(path, e)))
                .inspect_err(|_| {
                    let _ = std::fs::remove_file(&tmp);
                })
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let extra = match &e {
                Error::Parse { line, field, .. } => Some((*line, field.as_str())),
                _ => None,
            };
            error_record(e.kind(), &e, extra);
            ExitCode::FAILURE
        }
    }
}
