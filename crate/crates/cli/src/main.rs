use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use propfactor::oracle::{self, DEFAULT_CAP};
use propfactor::{
    compute_runs, load_text_with, lpalcf, lpcf, maximal_palindromes, LoadOptions, LpcfAlgorithm,
    LpcfQuery, NewlinePolicy, SqmsIndex, SuffixTree, Text,
};
use serde::Serialize;

mod bench;

#[derive(Parser)]
#[command(
    name = "propfactor",
    version,
    about = "Longest common factors with structural constraints"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Treat inputs as inline strings instead of file paths.
    #[arg(long, global = true)]
    literal: bool,

    /// Keep a trailing newline in input files.
    #[arg(long, global = true)]
    keep_newline: bool,

    /// Cross-check results against the brute-force oracle.
    #[arg(long, global = true, hide = true)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Wa,
    Nga,
}

#[derive(Subcommand)]
enum Command {
    /// Square-free-preserved matching statistics of QUERY against TEXT.
    Sqms {
        #[arg(long)]
        text: String,
        #[arg(long)]
        query: String,
    },
    /// Longest periodic factor common to at least K' inputs.
    Lpcf {
        #[arg(long = "k-prime")]
        k_prime: usize,
        #[arg(long, value_enum, default_value_t = Algorithm::Wa)]
        algorithm: Algorithm,
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
    },
    /// Longest palindromic factor common to two inputs.
    Lpalcf { x: String, y: String },
    /// Runs of one input.
    Runs { input: String },
    /// Maximal palindromes of one input, one per center.
    Palindromes { input: String },
    /// Wall time at sizes N and 2N on synthetic inputs.
    Bench {
        #[arg(long, value_enum)]
        problem: bench::Problem,
        #[arg(long)]
        size: usize,
    },
    /// Suffix tree dump.
    #[command(hide = true)]
    Tree {
        input: String,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Serialize)]
struct SqmsOut {
    values: Vec<usize>,
    best_length: usize,
    witness: Option<SqmsWitnessOut>,
}

#[derive(Serialize)]
struct SqmsWitnessOut {
    x_pos: usize,
    y_pos: usize,
    length: usize,
}

#[derive(Serialize)]
struct LpcfOut {
    length: usize,
    period: Option<usize>,
    witness: Option<LpcfWitnessOut>,
}

#[derive(Serialize)]
struct LpcfWitnessOut {
    string: usize,
    start: usize,
    text: String,
}

#[derive(Serialize)]
struct LpalcfOut {
    length: usize,
    witness: Option<LpalcfWitnessOut>,
}

#[derive(Serialize)]
struct LpalcfWitnessOut {
    x_pos: usize,
    y_pos: usize,
    text: String,
}

#[derive(Serialize)]
struct RunOut {
    start: usize,
    end: usize,
    period: usize,
}

/// `[start, end)` half-open.
#[derive(Serialize)]
struct PalindromeOut {
    center2: usize,
    radius2: usize,
    start: usize,
    end: usize,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Sqms { text, query } => sqms(cli, text, query),
        Command::Lpcf {
            k_prime,
            algorithm,
            inputs,
        } => periodic(cli, *k_prime, *algorithm, inputs),
        Command::Lpalcf { x, y } => palindromic(cli, x, y),
        Command::Runs { input } => runs(cli, input),
        Command::Palindromes { input } => palindromes(cli, input),
        Command::Bench { problem, size } => bench::run(*problem, *size, cli.format),
        Command::Tree { input, dot } => {
            let tree = SuffixTree::from_texts(&[load(cli, input)?])?;
            print!(
                "{}",
                if *dot {
                    tree.dump_dot()
                } else {
                    tree.dump_text()
                }
            );
            Ok(())
        }
    }
}

fn load(cli: &Cli, source: &str) -> Result<Text, Failure> {
    let raw = if cli.literal {
        source.as_bytes().to_vec()
    } else {
        std::fs::read(Path::new(source)).map_err(|e| Failure(format!("{source}: {e}")))?
    };
    let opts = LoadOptions {
        dense: false,
        newline: if cli.keep_newline || cli.literal {
            NewlinePolicy::Keep
        } else {
            NewlinePolicy::StripOne
        },
    };
    load_text_with(&raw, &opts).map_err(|e| Failure(format!("{source}: {e}")))
}

fn emit<T: Serialize>(value: &T) -> Outcome {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn check_oracle(
    cli: &Cli,
    what: &str,
    got: usize,
    want: impl FnOnce() -> propfactor::Result<usize>,
) -> Outcome {
    if !cli.oracle {
        return Ok(());
    }
    match want() {
        Ok(want) if want == got => Ok(()),
        Ok(want) => Err(Failure(format!(
            "oracle mismatch for {what}: got {got}, oracle {want}"
        ))),
        Err(e) => {
            eprintln!("oracle skipped: {e}");
            Ok(())
        }
    }
}

fn sqms(cli: &Cli, text: &str, query: &str) -> Outcome {
    let x = load(cli, text)?;
    let y = load(cli, query)?;
    let res = SqmsIndex::build(&x)?.query(&y);
    match cli.format {
        Format::Json => emit(&SqmsOut {
            values: res.values.clone(),
            best_length: res.best_length,
            witness: res.witness.map(|w| SqmsWitnessOut {
                x_pos: w.x_pos,
                y_pos: w.y_pos,
                length: w.length,
            }),
        })?,
        Format::Tsv => res.values.iter().for_each(|v| println!("{v}")),
    }
    check_oracle(cli, "sqms", res.best_length, || {
        oracle::brute_longest_common_squarefree(x.symbols(), y.symbols(), DEFAULT_CAP)
    })
}

fn periodic(cli: &Cli, k_prime: usize, algorithm: Algorithm, inputs: &[String]) -> Outcome {
    let texts = inputs
        .iter()
        .map(|s| load(cli, s))
        .collect::<Result<Vec<_>, _>>()?;
    let algorithm = match algorithm {
        Algorithm::Wa => LpcfAlgorithm::WeightedAncestor,
        Algorithm::Nga => LpcfAlgorithm::NearestGoodAncestor,
    };
    let q = LpcfQuery::new(texts, k_prime, algorithm)?;
    let res = lpcf(&q);
    let witness = res.witness.map(|w| LpcfWitnessOut {
        string: w.string,
        start: w.start,
        text: q.texts()[w.string].render(w.start, w.length),
    });
    match cli.format {
        Format::Json => emit(&LpcfOut {
            length: res.length,
            period: res.witness.map(|w| w.period),
            witness,
        })?,
        Format::Tsv => println!(
            "{}\t{}",
            res.length,
            witness.map_or(String::new(), |w| w.text)
        ),
    }
    check_oracle(cli, "lpcf", res.length, || {
        let refs: Vec<&[u32]> = q.texts().iter().map(Text::symbols).collect();
        oracle::brute_lpcf(&refs, k_prime, DEFAULT_CAP)
    })
}

fn palindromic(cli: &Cli, x: &str, y: &str) -> Outcome {
    let tx = load(cli, x)?;
    let ty = load(cli, y)?;
    let res = lpalcf(&tx, &ty)?;
    let witness = res.witness.map(|w| LpalcfWitnessOut {
        x_pos: w.x_pos,
        y_pos: w.y_pos,
        text: tx.render(w.x_pos, w.length),
    });
    match cli.format {
        Format::Json => emit(&LpalcfOut {
            length: res.length,
            witness,
        })?,
        Format::Tsv => println!(
            "{}\t{}",
            res.length,
            witness.map_or(String::new(), |w| w.text)
        ),
    }
    check_oracle(cli, "lpalcf", res.length, || {
        oracle::brute_lpalcf(tx.symbols(), ty.symbols(), DEFAULT_CAP)
    })
}

fn runs(cli: &Cli, input: &str) -> Outcome {
    let t = load(cli, input)?;
    let list = compute_runs(&t);
    match cli.format {
        Format::Json => emit(
            &list
                .iter()
                .map(|r| RunOut {
                    start: r.start,
                    end: r.end,
                    period: r.period,
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Tsv => list
            .iter()
            .for_each(|r| println!("{}\t{}\t{}", r.start, r.end, r.period)),
    }
    if cli.oracle {
        match oracle::brute_runs(t.symbols(), DEFAULT_CAP) {
            Ok(want) if want == list => {}
            Ok(want) => {
                return Err(Failure(format!(
                    "oracle mismatch for runs: got {} runs, oracle {}",
                    list.len(),
                    want.len()
                )))
            }
            Err(e) => eprintln!("oracle skipped: {e}"),
        }
    }
    Ok(())
}

fn palindromes(cli: &Cli, input: &str) -> Outcome {
    let t = load(cli, input)?;
    let pals = maximal_palindromes(&t);
    match cli.format {
        Format::Json => emit(
            &pals
                .iter()
                .map(|p| PalindromeOut {
                    center2: p.center2,
                    radius2: p.radius2,
                    start: p.start,
                    end: p.end,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Tsv => {
            for p in &pals {
                println!("{}\t{}\t{}\t{}", p.center2, p.radius2, p.start, p.end);
            }
            Ok(())
        }
    }
}
