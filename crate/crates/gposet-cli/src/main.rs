use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gposet::dsl::parse_graph;
use gposet::experiments::{self, Conjecture, ExperimentReport};
use gposet::formulas;
use gposet::paths::{path_mobius, PathError, PathMultiset};
use gposet::{build_interval, Canonicalizer, Graph, IntervalError};
use serde_json::json;

/// Intervals and Möbius functions of the induced-subgraph poset.
///
/// Graphs are given as specs: path:5, cycle:4, complete:4 (or K4), nK1:3,
/// paths:5,4,3, bipartite:2,3, multipartite:2,2,2, house, paw, null,
/// Dv:cycle:4, complement:<spec>, union:<spec>+<spec>, edges:3:0-1,1-2,
/// g6:<graph6>, file:<path>, or a bare graph6 string.
#[derive(Parser, Debug)]
#[command(name = "gposet", version)]
struct Cli {
    /// Largest graph order the canonical labeller accepts.
    #[arg(long, global = true, default_value_t = 10)]
    max_order: usize,
    /// Work in the poset of connected graphs.
    #[arg(long, global = true)]
    connected: bool,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Exit with status 2 when a cross-check disagrees.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Schroder,
    House,
    Unimodal,
    Coatoms,
    Alternating,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// μ(H, G), with a closed-form prediction where one is known.
    Mu { h: String, g: String },
    /// Export the interval [H, G] with per-element μ.
    Interval {
        h: String,
        g: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// μ(nK1, n P_x) for n + x <= max-total against the published table.
    Table2 {
        #[arg(long, default_value_t = 10)]
        max_total: usize,
    },
    /// Share of intervals with μ = 0 among simple graphs with |G| <= n.
    ZeroProportion {
        #[arg(default_value_t = 6)]
        n: usize,
    },
    /// Probe one of the open conjectures at a small bound.
    Conjectures {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Critical chains of a path-forest interval (parts at most 5).
    Morse { top: String, bottom: String },
    /// Zero-split classification of [H, G].
    SplitClassify { h: String, g: String },
}

struct Outcome {
    text: String,
    json: serde_json::Value,
    agreement: bool,
}

impl From<ExperimentReport> for Outcome {
    fn from(r: ExperimentReport) -> Self {
        Outcome { text: r.to_text(), agreement: r.agreement, json: serde_json::to_value(&r).expect("serializable") }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n",
        Format::Text => outcome.text,
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{body}"),
    }
    if cli.strict && !outcome.agreement {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn run(cli: &Cli) -> Result<Outcome, Box<dyn Error>> {
    let canon = Canonicalizer::new(cli.max_order);
    Ok(match &cli.command {
        Command::Mu { h, g } => cmd_mu(&canon, cli.connected, &parse_graph(h)?, &parse_graph(g)?)?,
        Command::Interval { h, g, dot, json } => {
            let (h, g) = (parse_graph(h)?, parse_graph(g)?);
            let iv = build_interval(&canon, &h, &g, cli.connected)?;
            let value = iv.to_json();
            let text = if *dot {
                iv.to_dot()
            } else if *json {
                serde_json::to_string_pretty(&value)? + "\n"
            } else {
                interval_text(&iv)
            };
            Outcome { text, json: value, agreement: true }
        }
        Command::Table2 { max_total } => experiments::table2(*max_total)?.into(),
        Command::ZeroProportion { n } => {
            if *n >= 7 {
                eprintln!("note: n = {n} enumerates every graph on {n} vertices and takes a while");
            }
            experiments::zero_proportion(&canon, *n)?.into()
        }
        Command::Conjectures { which, bound } => {
            let (which, default) = match which {
                Which::Schroder => (Conjecture::Schroder, 4),
                Which::House => (Conjecture::House, 2),
                Which::Unimodal => (Conjecture::Unimodal, 6),
                Which::Coatoms => (Conjecture::Coatoms, 6),
                Which::Alternating => (Conjecture::Alternating, 6),
            };
            experiments::conjecture(&canon, which, bound.unwrap_or(default))?.into()
        }
        Command::Morse { top, bottom } => {
            let top = PathMultiset::from_graph(&parse_graph(top)?)?;
            let bottom = PathMultiset::from_graph(&parse_graph(bottom)?)?;
            match experiments::morse_report(&top, &bottom) {
                Err(experiments::ExperimentError::Path(PathError::PartTooLarge { part, max })) => {
                    return Err(format!(
                        "part {part} is too large: the operation order is only defined for parts of order \
                         at most {max}; use `mu` for the recursion"
                    )
                    .into())
                }
                r => r?.into(),
            }
        }
        Command::SplitClassify { h, g } => {
            experiments::split_report(&canon, &parse_graph(h)?, &parse_graph(g)?)?.into()
        }
    })
}

fn interval_text(iv: &gposet::Interval) -> String {
    let mut out = format!(
        "size={} rank={} mu={} rank_sequence={:?} interior_disconnected={}\n",
        iv.len(),
        iv.rank(),
        iv.mobius(),
        iv.rank_sequence(),
        iv.interior_disconnected()
    );
    for e in iv.elements() {
        let g6 = gposet::io::to_graph6(&e.graph).unwrap_or_else(|_| format!("{:?}", e.graph));
        out.push_str(&format!("rank={} mu={} graph6={}\n", e.rank, e.mobius, g6));
    }
    out
}

fn cmd_mu(canon: &Canonicalizer, connected: bool, h: &Graph, g: &Graph) -> Result<Outcome, Box<dyn Error>> {
    let paths = match (h.as_path_forest(), g.as_path_forest()) {
        (Some(a), Some(b)) if !connected => Some((PathMultiset::new(a)?, PathMultiset::new(b)?)),
        _ => None,
    };
    let (value, method, contained) = match &paths {
        Some((a, b)) => (path_mobius(a, b), "path_forest_recursion", a.is_contained_in(b)),
        None => {
            let (value, contained) = match build_interval(canon, h, g, connected) {
                Ok(iv) => (iv.mobius(), true),
                Err(IntervalError::NotContained) => (0, false),
                Err(e) => return Err(e.into()),
            };
            (value, "recursion", contained)
        }
    };
    let prediction = if connected { None } else { formulas::predict(h, g) };
    let matches = prediction.as_ref().map(|p| p.value == value);
    let symbol = if connected { "μ_c" } else { "μ" };
    let mut text = format!("{value}\n");
    if !contained {
        text.push_str(&format!("note: H is not an induced subgraph of G, so {symbol}(H, G) = 0\n"));
    }
    if let Some(p) = &prediction {
        let verdict = if p.value == value { "match" } else { "MISMATCH" };
        text.push_str(&format!("closed form {}: {} ({verdict})\n", serde_json::to_string(&p.form)?, p.value));
    }
    let json = json!({
        "mu": value, "method": method, "connected_variant": connected, "contained": contained,
        "prediction": prediction, "match": matches,
    });
    Ok(Outcome { text, json, agreement: matches != Some(false) })
}
