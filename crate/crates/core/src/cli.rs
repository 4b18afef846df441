//! `bergesat` command line.
//!
//! Exit status: 0 on success, 1 when a command that asserts a verdict gets a
//! negative one (unsaturated host, theorem disagreement, lemma failure,
//! search cap exceeded), 2 on usage, parse or constraint errors.
//!
//! `BERGESAT_THREADS` caps the worker threads used by the exhaustive
//! searches (default 1).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::berge::contains_berge;
use crate::constructions::{construct_hnm, construct_hprime, construct_ht, special_saturated, SpecialKind};
use crate::error::{Error, Result};
use crate::io::{read_graph, read_hypergraph, to_json};
use crate::saturation::{
    default_cap, lemma_lower_bound_report, sat_number_with_threads, saturation_report,
    theorem_check_with_threads,
};

pub const THREADS_ENV: &str = "BERGESAT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "bergesat", version, about = "Berge-G containment and saturation for hypergraphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one of the saturated constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Search a host hypergraph for a Berge copy of a graph.
    CheckBerge(PatternHost),
    /// Check whether a host hypergraph is Berge-saturated for a graph.
    VerifySat(PatternHost),
    /// Exact saturation number by exhaustive search (n <= 6).
    SatNumber {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        /// Largest hyperedge count to try; defaults to |E(G)| + 1.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Compare exhaustive saturation numbers with the predicted values for
    /// every small graph.
    TheoremCheck {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        e_max: usize,
    },
    /// Confirm that no (t-2)-edge hypergraph is saturated for the star S_t.
    LemmaCheck {
        #[arg(long, default_value_t = 5)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The star construction H_t(n).
    Ht {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// The complement construction H(n, m).
    Hnm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The set system H'(n, m) behind H(n, m).
    Hprime {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Witness for S2, S3, S4 or K3.
    Special {
        #[arg(long)]
        kind: SpecialKind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct PatternHost {
    /// Pattern graph (JSON or compact text).
    #[arg(long)]
    pub graph: PathBuf,
    /// Host hypergraph (JSON or compact text).
    #[arg(long)]
    pub host: PathBuf,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: 0, stdout, stderr: String::new() }
    }

    fn verdict(ok: bool, stdout: String) -> Self {
        Outcome { status: if ok { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn error(status: i32, stderr: String) -> Self {
        Outcome { status, stdout: String::new(), stderr }
    }
}

/// Reads `BERGESAT_THREADS`; unset means one thread.
pub fn threads_from_env() -> Result<NonZeroUsize> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(NonZeroUsize::MIN),
        Ok(s) => s
            .trim()
            .parse::<NonZeroUsize>()
            .map_err(|_| Error::Parse(format!("{THREADS_ENV} must be a positive integer, got {s:?}"))),
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(rendered)
                }
                _ => Outcome::error(2, rendered),
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(e @ Error::CapExceeded { .. }) => Outcome::error(1, format!("error: {e}\n")),
        Err(e) => Outcome::error(2, format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    let emit = |text: String, value: String| if json { value + "\n" } else { text };
    match &cli.command {
        Command::Construct(c) => {
            let (text, value) = match *c {
                Construct::Ht { n, t } => {
                    let h = construct_ht(n, t)?;
                    (format!("{h}\n"), to_json(&h))
                }
                Construct::Hnm { n, m } => {
                    let h = construct_hnm(n, m)?;
                    (format!("{h}\n"), to_json(&h))
                }
                Construct::Hprime { n, m } => {
                    let s = construct_hprime(n, m)?;
                    (format!("{s}\n"), to_json(&s))
                }
                Construct::Special { kind, n } => {
                    let h = special_saturated(kind, n)?;
                    (format!("{h}\n"), to_json(&h))
                }
            };
            Ok(Outcome::ok(emit(text, value)))
        }
        Command::CheckBerge(io) => {
            let g = read_graph(&io.graph)?;
            let h = read_hypergraph(&io.host)?;
            let w = contains_berge(&g, &h)?;
            let text = match &w {
                Some(w) => format!("berge: true\n{w}\n"),
                None => "none\n".to_string(),
            };
            let value = match &w {
                Some(w) => to_json(w),
                None => "null".to_string(),
            };
            Ok(Outcome::ok(emit(text, value)))
        }
        Command::VerifySat(io) => {
            let g = read_graph(&io.graph)?;
            let h = read_hypergraph(&io.host)?;
            let r = saturation_report(&g, &h)?;
            let mut text = String::new();
            writeln!(text, "free: {}", r.is_free).unwrap();
            writeln!(text, "saturated: {}", r.is_saturated).unwrap();
            writeln!(text, "absent edges: {}", r.absent_edge_count).unwrap();
            if !r.failing_edges.is_empty() {
                let listed: Vec<String> = r.failing_edges.iter().map(|e| e.to_string()).collect();
                writeln!(text, "failing edges: {}", listed.join(" ")).unwrap();
            }
            Ok(Outcome::verdict(r.is_saturated, emit(text, to_json(&r))))
        }
        Command::SatNumber { graph, n, cap } => {
            let g = read_graph(graph)?;
            let cap = cap.unwrap_or_else(|| default_cap(&g));
            let r = sat_number_with_threads(&g, *n, cap, threads_from_env()?)?;
            let s = r.search_stats;
            let text = format!(
                "sat = {}\nwitness: {}\ncandidates: {} examined, {} isomorph-rejected, {} tested\n",
                r.value, r.witness_hypergraph, s.candidates_examined, s.isomorph_rejected, s.saturation_tests
            );
            Ok(Outcome::ok(emit(text, to_json(&r))))
        }
        Command::TheoremCheck { n_max, e_max } => {
            let t = theorem_check_with_threads(*n_max, *e_max, threads_from_env()?)?;
            let mut text = String::new();
            for row in &t.rows {
                writeln!(
                    text,
                    "{:<40} predicted {:>2}  computed {:>2}  {}  {} saturated: {}",
                    row.graph.to_string(),
                    row.predicted,
                    row.computed,
                    if row.agree { "agree" } else { "DISAGREE" },
                    row.construction,
                    row.construction_saturated
                )
                .unwrap();
            }
            writeln!(text, "all agree: {}", t.all_agree).unwrap();
            Ok(Outcome::verdict(t.all_agree, emit(text, to_json(&t))))
        }
        Command::LemmaCheck { t, n } => {
            let r = lemma_lower_bound_report(*t, *n, threads_from_env()?)?;
            let mut text = format!("holds: {}\n", r.holds);
            if let Some(h) = &r.counterexample {
                writeln!(text, "counterexample: {h}").unwrap();
            }
            Ok(Outcome::verdict(r.holds, emit(text, to_json(&r))))
        }
    }
}
