use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use uncluttered::audit::{self, AuditReport, DEFAULT_N_CAP};
use uncluttered::enumerate::graphs_of_order;
use uncluttered::{
    classify, color_uncluttered, decomposition_tree, from_edge_list, from_graph6, is_uncluttered,
    to_edge_list, to_graph6, Certificate, Coloring, DecompositionTree, Error, Graph,
    PatternWitness,
};

const EXIT_LEMMA: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "uncluttered",
    version,
    about = "Fork- and antifork-free graphs: recognition, certificates, colouring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Read from FILE instead of stdin
    #[arg(long, value_name = "FILE")]
    from: Option<String>,
    /// Input is a single edge list ("n" then one "u v" per line) instead of graph6 lines
    #[arg(long)]
    edge_list: bool,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Report which case of the structure theorem applies, one JSON line per graph
    Classify(Input),
    /// Colour with at most twice the clique number, one JSON line per graph
    Color(Input),
    /// Recursive decomposition tree, one JSON line per graph
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Maximum tree depth; defaults to twice the order
        #[arg(long)]
        depth_limit: Option<usize>,
    },
    /// Exhaustive verification over all graphs up to isomorphism
    Audit {
        /// Largest order to enumerate
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Comma separated suites, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        /// Audit the graph6 lines in FILE instead of enumerating
        #[arg(long, value_name = "FILE")]
        from: Option<String>,
        /// Allow --n-max above the default cap
        #[arg(long)]
        allow_large: bool,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print every graph on N vertices up to isomorphism as graph6
    Generate {
        #[arg(long)]
        n: usize,
        /// Only graphs with no induced fork or antifork
        #[arg(long)]
        uncluttered: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Edge lists to graph6
    Encode {
        #[arg(long, value_name = "FILE")]
        from: Option<String>,
    },
    /// graph6 lines to edge lists, or JSON with --json
    Decode {
        #[arg(long, value_name = "FILE")]
        from: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn read_all(from: &Option<String>) -> io::Result<String> {
    match from {
        Some(path) => fs::read_to_string(path),
        None => {
            let mut s = String::new();
            io::stdin().lock().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Each record is the raw input text and its parse result.
fn read_graphs(input: &Input) -> io::Result<Vec<(String, Result<Graph, Error>)>> {
    let text = read_all(&input.from)?;
    if input.edge_list {
        let g = from_edge_list(&text);
        let label = g.as_ref().map(to_graph6).unwrap_or_default();
        return Ok(vec![(label, g)]);
    }
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| (l.to_string(), from_graph6(l)))
        .collect())
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    graph6: &'a str,
    error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct WitnessJson {
    pattern: String,
    embedding: Vec<usize>,
}

impl From<&PatternWitness> for WitnessJson {
    fn from(w: &PatternWitness) -> Self {
        WitnessJson {
            pattern: w.pattern_name(),
            embedding: w.embedding.clone(),
        }
    }
}

#[derive(Serialize)]
struct ClassifyLine<'a> {
    graph6: &'a str,
    uncluttered: bool,
    certificate: &'a Certificate,
}

#[derive(Serialize)]
struct ColorLine<'a> {
    graph6: &'a str,
    coloring: &'a Coloring,
}

#[derive(Serialize)]
struct TreeLine<'a> {
    graph6: &'a str,
    tree: &'a DecompositionTree,
}

/// One output line per input plus the exit code it implies.
fn error_line(graph6: &str, e: &Error) -> (String, u8) {
    let witness = match e {
        Error::NotUncluttered(w) => Some(w.into()),
        _ => None,
    };
    let code = match e {
        Error::TheoremViolation { .. } => EXIT_LEMMA,
        _ => EXIT_INPUT,
    };
    let line = ErrorLine {
        graph6,
        error: e.to_string(),
        witness,
    };
    (serde_json::to_string(&line).unwrap(), code)
}

fn run_lines<F>(input: &Input, f: F) -> ExitCode
where
    F: Fn(&str, &Graph) -> Result<String, Error> + Sync,
{
    let records = match read_graphs(input) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let work = || -> Vec<(String, u8)> {
        records
            .par_iter()
            .map(|(raw, parsed)| {
                let result = parsed
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(|g| f(raw, g));
                match result {
                    Ok(line) => (line, 0),
                    Err(e) => error_line(raw, &e),
                }
            })
            .collect()
    };
    let lines = match rayon::ThreadPoolBuilder::new()
        .num_threads(input.jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut code = 0;
    for (line, c) in lines {
        let _ = writeln!(out, "{line}");
        code = code.max(c);
    }
    ExitCode::from(code)
}

fn print_summary(report: &AuditReport) {
    println!(
        "orders {}..={}: {} graphs, {} uncluttered",
        report.n_min, report.n_max, report.graphs_scanned, report.uncluttered_count
    );
    for o in &report.per_order {
        println!(
            "  n={}: {} graphs, {} uncluttered",
            o.n, o.graphs, o.uncluttered
        );
    }
    for (case, count) in &report.case_histogram {
        println!("  {case}: {count}");
    }
    for s in &report.suite_counts {
        let status = if s.failed == 0 { "PASS" } else { "FAIL" };
        println!(
            "{status} {}: {} checked, {} failed",
            s.suite, s.checked, s.failed
        );
    }
    if let Some(r) = &report.max_ratio {
        println!("max chi/omega = {}/{} on {}", r.chi, r.omega, r.graph6);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(input) => run_lines(&input, |raw, g| {
            let c = classify(g)?;
            let line = ClassifyLine {
                graph6: raw,
                uncluttered: !matches!(c, Certificate::NotUncluttered(_)),
                certificate: &c,
            };
            Ok(serde_json::to_string(&line).unwrap())
        }),
        Command::Color(input) => run_lines(&input, |raw, g| {
            let c = color_uncluttered(g)?;
            Ok(serde_json::to_string(&ColorLine {
                graph6: raw,
                coloring: &c,
            })
            .unwrap())
        }),
        Command::Decompose { input, depth_limit } => run_lines(&input, |raw, g| {
            let t = decomposition_tree(g, depth_limit.unwrap_or(2 * g.order()))?;
            Ok(serde_json::to_string(&TreeLine {
                graph6: raw,
                tree: &t,
            })
            .unwrap())
        }),
        Command::Audit {
            n_max,
            suite,
            from,
            allow_large,
            json,
            jobs,
        } => {
            let suites = match audit::parse_suites(&suite) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            };
            let start = Instant::now();
            let report = match &from {
                Some(_) => read_all(&from)
                    .map_err(|e| Error::Precondition(e.to_string()))
                    .and_then(|text| {
                        text.lines()
                            .map(str::trim)
                            .filter(|l| !l.is_empty())
                            .map(from_graph6)
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .and_then(|graphs| audit::audit_graphs(&graphs, &suites, jobs)),
                None => audit::audit(n_max, &suites, jobs, allow_large),
            };
            let report = match report {
                Ok(r) => r,
                Err(e @ Error::TooLarge { .. }) => {
                    eprintln!("error: {e}; --n-max above {DEFAULT_N_CAP} needs --allow-large");
                    return ExitCode::from(EXIT_INPUT);
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            };
            if json {
                println!("{}", report.to_json());
            } else {
                print_summary(&report);
            }
            for f in &report.failures {
                eprintln!("counterexample [{}] {}: {}", f.suite, f.graph6, f.reason);
            }
            eprintln!("wall time {:.2}s", start.elapsed().as_secs_f64());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_LEMMA)
            }
        }
        Command::Generate {
            n,
            uncluttered,
            allow_large,
        } => {
            if n > DEFAULT_N_CAP && !allow_large {
                eprintln!("error: n above {DEFAULT_N_CAP} needs --allow-large");
                return ExitCode::from(EXIT_INPUT);
            }
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for g in graphs_of_order(n) {
                if !uncluttered || is_uncluttered(&g).is_none() {
                    let _ = writeln!(out, "{}", to_graph6(&g));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Encode { from } => {
            let text = match read_all(&from) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            };
            match from_edge_list(&text) {
                Ok(g) => {
                    println!("{}", to_graph6(&g));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_INPUT)
                }
            }
        }
        Command::Decode { from, json } => {
            let reader: Box<dyn BufRead> = match &from {
                Some(path) => match fs::File::open(path) {
                    Ok(f) => Box::new(io::BufReader::new(f)),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_INPUT);
                    }
                },
                None => Box::new(io::BufReader::new(io::stdin())),
            };
            let mut code = 0;
            for line in reader.lines() {
                let Ok(line) = line else {
                    code = EXIT_INPUT;
                    break;
                };
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                match from_graph6(line) {
                    Ok(g) if json => {
                        #[derive(Serialize)]
                        struct Decoded {
                            n: usize,
                            edges: Vec<(usize, usize)>,
                        }
                        let d = Decoded {
                            n: g.order(),
                            edges: g.edges(),
                        };
                        println!("{}", serde_json::to_string(&d).unwrap());
                    }
                    Ok(g) => print!("{}", to_edge_list(&g)),
                    Err(e) => {
                        let (l, c) = error_line(line, &e);
                        println!("{l}");
                        code = code.max(c);
                    }
                }
            }
            ExitCode::from(code)
        }
    }
}
