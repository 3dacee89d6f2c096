//! `chigap` command-line front end.
//!
//! Exit status: 0 on success, 1 when a checked property fails, 2 on usage or
//! input errors. Output is buffered and only written once a command has
//! finished, so a failing command leaves stdout empty (except `verify` and
//! `check-lemmas`, which report the violating graphs there).

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chigap::extremal::CoreKind;
use chigap::oracle::{self, generate, DecoratedBounds, Mode};
use chigap::{chromatic_number, classify, gap, io as formats, to_graph6, Format, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "chigap", version, about = "Chromatic number vs. edge count: exact coloring, extremal graphs, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::EdgeList,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Labeled,
    Unlabeled,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeB")]
    TypeB,
}

#[derive(clap::Args)]
struct Input {
    /// Input file; standard input when absent or `-`.
    file: Option<PathBuf>,
    /// Input format; inferred from the first line when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number of each input graph.
    Chi {
        #[command(flatten)]
        input: Input,
        /// Also print the witness coloring as `v:color` pairs.
        #[arg(long)]
        witness: bool,
    },
    /// Vertex count, edge count, chromatic number and gap of each connected graph.
    Gap {
        #[command(flatten)]
        input: Input,
    },
    /// Structural type (TypeA / TypeB / Neither) and core vertices.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive sweep: gap >= 0 everywhere and gap = 0 exactly on type A/B graphs.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "labeled")]
        mode: ModeArg,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Randomized and exhaustive lemma suites.
    CheckLemmas {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest vertex count for the exhaustive vertex-removal suite.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Emit decorated type A/B graphs as graph6.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order of the complete core (typeA) or odd cycle length (typeB).
        #[arg(long)]
        core: usize,
        /// Trees to attach as `anchor:size[,anchor:size...]`; shapes are random.
        #[arg(long, default_value = "")]
        trees: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of graphs to emit.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

/// Either the text to print and the exit status, or a usage/input error.
type Outcome = Result<(String, u8), String>;

fn read_input(input: &Input) -> Result<Vec<Graph>, String> {
    let text = match &input.file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    formats::read_graphs(&text, input.format.map(Format::from)).map_err(|e| e.to_string())
}

fn cmd_chi(input: &Input, witness: bool) -> Outcome {
    let mut out = String::new();
    for g in read_input(input)? {
        let (k, coloring) = chromatic_number(&g);
        out.push_str(&format!("chi={k}"));
        if witness {
            for (v, c) in coloring.colors().iter().enumerate() {
                out.push_str(&format!(" {v}:{c}"));
            }
        }
        out.push('\n');
    }
    Ok((out, 0))
}

fn cmd_gap(input: &Input) -> Outcome {
    let mut out = String::new();
    for (i, g) in read_input(input)?.iter().enumerate() {
        let report = gap(g).map_err(|e| format!("graph {}: {e}", i + 1))?;
        out.push_str(&format!("{report}\n"));
    }
    Ok((out, 0))
}

fn cmd_classify(input: &Input) -> Outcome {
    let mut out = String::new();
    for (i, g) in read_input(input)?.iter().enumerate() {
        let c = classify(g).map_err(|e| format!("graph {}: {e}", i + 1))?;
        let core: Vec<String> = c.core_vertices.iter().map(ToString::to_string).collect();
        out.push_str(&format!("{} core={}\n", c.kind, core.join(",")));
    }
    Ok((out, 0))
}

fn cmd_verify(max_n: usize, mode: ModeArg, jobs: Option<usize>) -> Outcome {
    let mode = match mode {
        ModeArg::Labeled => Mode::Labeled,
        ModeArg::Unlabeled => Mode::Unlabeled,
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let summaries = oracle::check_theorem_with_jobs(max_n, mode, jobs).map_err(|e| e.to_string())?;
    let mut out = oracle::render_table(&summaries);
    let mut code = 0;
    for s in &summaries {
        for g6 in &s.counterexamples {
            out.push_str(g6);
            out.push('\n');
            code = 1;
        }
    }
    Ok((out, code))
}

fn cmd_check_lemmas(trials: usize, seed: u64, max_n: usize) -> Outcome {
    if !(2..=oracle::MAX_LABELED_N).contains(&max_n) {
        return Err(format!("--max-n must be in 2..={}", oracle::MAX_LABELED_N));
    }
    let err = |e: oracle::OracleError| e.to_string();
    let suites = [
        oracle::decorated_chi_check(trials, seed, DecoratedBounds::default()).map_err(err)?,
        oracle::pendant_closure_suite(trials, seed).map_err(err)?,
        oracle::lemma_big_sweep(max_n).map_err(err)?,
    ];
    let mut out = String::new();
    let mut code = 0;
    for s in &suites {
        out.push_str(&format!("{s}\n"));
    }
    for s in &suites {
        for g6 in &s.failures {
            out.push_str(&format!("failure\t{}\t{g6}\n", s.name));
            code = 1;
        }
    }
    Ok((out, code))
}

fn cmd_gen(kind: KindArg, core: usize, trees: &str, seed: u64, count: usize) -> Outcome {
    let core = match kind {
        KindArg::TypeA if core >= 1 => CoreKind::Complete(core),
        KindArg::TypeB if core >= 3 && core % 2 == 1 => CoreKind::Cycle(core),
        KindArg::TypeA => return Err("typeA needs --core >= 1".into()),
        KindArg::TypeB => return Err("typeB needs an odd --core >= 3".into()),
    };
    let trees = generate::parse_tree_spec(trees)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    for _ in 0..count {
        let g = generate::decorated_from_sizes(&mut rng, core, &trees).map_err(|e| e.to_string())?;
        out.push_str(&to_graph6(&g));
        out.push('\n');
    }
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Chi { input, witness } => cmd_chi(input, *witness),
        Command::Gap { input } => cmd_gap(input),
        Command::Classify { input } => cmd_classify(input),
        Command::Verify { max_n, mode, jobs } => cmd_verify(*max_n, *mode, *jobs),
        Command::CheckLemmas { trials, seed, max_n } => cmd_check_lemmas(*trials, *seed, *max_n),
        Command::Gen { kind, core, trees, seed, count } => cmd_gen(*kind, *core, trees, *seed, *count),
    };
    match outcome {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("chigap: {msg}");
            ExitCode::from(2)
        }
    }
}
