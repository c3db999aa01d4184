//! Command-line front end: build, extend, query and inspect dictionary
//! automata stored in the `DAFSA 1` text format.
//!
//! Exit codes: 0 success, 1 I/O or parse failure, 2 precondition
//! violation (unsorted input to the sorted builder, non-minimal input
//! automaton), 3 verification failure.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dafsa::automaton::{Automaton, StateId, Word};
use dafsa::error::Error;
use dafsa::io::{deserialize, export_dot, read_words, serialize};
use dafsa::oracle::{build_trie, canonical_form, minimize_exhaustive};
use dafsa::register::Register;
use dafsa::sorted::SortedBuilder;
use dafsa::stats::BuildStats;
use dafsa::unsorted::UnsortedBuilder;

#[derive(Parser)]
#[command(name = "dafsa", version, about = "Minimal acyclic dictionary automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Sorted,
    Unsorted,
}

#[derive(Args)]
struct BuildArgs {
    /// Construction algorithm; `sorted` requires lexicographically
    /// sorted input and fails otherwise.
    #[arg(long, value_enum)]
    algo: Algo,
    /// Newline-delimited word list.
    #[arg(long = "in")]
    input: PathBuf,
    /// Output automaton file.
    #[arg(long)]
    out: PathBuf,
    /// Print build statistics as key=value lines.
    #[arg(long)]
    stats: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build a minimal automaton from a word list.
    Build(BuildArgs),
    /// Add words to an existing automaton, keeping it minimal.
    Add {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        words: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Test membership; prints `1` or `0` per word.
    Query {
        #[arg(long = "in")]
        input: PathBuf,
        /// Single word to test.
        #[arg(long, conflicts_with = "stdin")]
        word: Option<String>,
        /// Read words to test from standard input.
        #[arg(long)]
        stdin: bool,
    },
    /// Print size statistics for an automaton file.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Export an automaton as a Graphviz DOT digraph.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Compare an automaton against an oracle rebuild from a word list.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        words: PathBuf,
    },
    /// Time a build and report peak liveness.
    Bench {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("dafsa: {err}");
            let mut source = std::error::Error::source(&err);
            while let Some(cause) = source {
                eprintln!("  caused by: {cause}");
                source = cause.source();
            }
            match err {
                Error::OutOfOrder { .. } | Error::NotMinimal { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Build(args) => build(args),
        Command::Add { input, words, out } => add(&input, &words, &out),
        Command::Query { input, word, stdin } => query(&input, word, stdin),
        Command::Stats { input } => stats(&input),
        Command::Export { input, dot } => export(&input, &dot),
        Command::Verify { input, words } => verify(&input, &words),
        Command::Bench { algo, input } => bench(algo, &input),
    }
}

fn open(path: &Path) -> Result<BufReader<File>, Error> {
    Ok(BufReader::new(File::open(path)?))
}

fn build(args: BuildArgs) -> Result<ExitCode, Error> {
    let (automaton, stats) = build_from_list(args.algo, &args.input)?;
    write_automaton(&automaton, &args.out)?;
    if args.stats {
        print!("{}", stats.lines());
    }
    Ok(ExitCode::SUCCESS)
}

fn build_from_list(algo: Algo, input: &Path) -> Result<(Automaton, BuildStats), Error> {
    let words = read_words(open(input)?);
    match algo {
        Algo::Sorted => {
            let mut b = SortedBuilder::new();
            for word in words {
                b.insert(&word?)?;
            }
            Ok(b.finish())
        }
        Algo::Unsorted => {
            let mut b = UnsortedBuilder::new();
            for word in words {
                b.add_word(&word?)?;
            }
            Ok(b.finish())
        }
    }
}

fn write_automaton(a: &Automaton, path: &Path) -> Result<(), Error> {
    let mut out = BufWriter::new(File::create(path)?);
    serialize(a, &mut out)?;
    out.flush()?;
    Ok(())
}

fn add(input: &Path, words: &Path, out: &Path) -> Result<ExitCode, Error> {
    let automaton = deserialize(open(input)?)?;
    let register = Register::rebuild(&automaton)?;
    let mut b = UnsortedBuilder::from_parts(automaton, register);
    for word in read_words(open(words)?) {
        b.add_word(&word?)?;
    }
    let (automaton, _) = b.finish();
    write_automaton(&automaton, out)?;
    Ok(ExitCode::SUCCESS)
}

fn query(input: &Path, word: Option<String>, stdin: bool) -> Result<ExitCode, Error> {
    let a = deserialize(open(input)?)?;
    let check = |w: &Word| -> bool {
        a.delta_star(a.start(), w.labels())
            .ok()
            .flatten()
            .is_some_and(|q| a.is_final(q).unwrap_or(false))
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Some(word) = word {
        writeln!(out, "{}", u8::from(check(&Word::from_bytes(word.as_bytes()))))?;
    } else if stdin {
        for w in read_words(BufReader::new(std::io::stdin())) {
            writeln!(out, "{}", u8::from(check(&w?)))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stats(input: &Path) -> Result<ExitCode, Error> {
    let a = deserialize(open(input)?)?;
    println!("states={}", a.live_count());
    println!("transitions={}", a.transition_count());
    println!("final_states={}", a.final_count());
    println!("words={}", language_size(&a));
    Ok(ExitCode::SUCCESS)
}

/// Number of accepted words, computed by the path-counting recurrence
/// over the DAG rather than by enumeration.
fn language_size(a: &Automaton) -> u128 {
    fn count(
        a: &Automaton,
        q: StateId,
        memo: &mut std::collections::HashMap<StateId, u128>,
    ) -> u128 {
        if let Some(&n) = memo.get(&q) {
            return n;
        }
        let mut n = u128::from(a.is_final(q).expect("live"));
        for &(_, t) in a.transitions(q).expect("live") {
            n += count(a, t, memo);
        }
        memo.insert(q, n);
        n
    }
    count(a, a.start(), &mut std::collections::HashMap::new())
}

fn export(input: &Path, dot: &Path) -> Result<ExitCode, Error> {
    let a = deserialize(open(input)?)?;
    let mut out = BufWriter::new(File::create(dot)?);
    export_dot(&a, &mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn verify(input: &Path, words: &Path) -> Result<ExitCode, Error> {
    let a = deserialize(open(input)?)?;
    let list: Vec<Word> = read_words(open(words)?).collect::<Result<_, _>>()?;
    let reference = minimize_exhaustive(&build_trie(list.clone()))?;

    let mut sorted = list;
    sorted.sort();
    sorted.dedup();
    let language_ok = a.enumerate_language() == sorted;
    let canonical_ok = canonical_form(&a) == canonical_form(&reference);
    if language_ok && canonical_ok {
        println!("verify: ok ({} states)", a.live_count());
        Ok(ExitCode::SUCCESS)
    } else {
        if !language_ok {
            eprintln!("verify: language mismatch");
        }
        if !canonical_ok {
            eprintln!(
                "verify: not canonically equal to the minimal automaton ({} vs {} states)",
                a.live_count(),
                reference.live_count()
            );
        }
        Ok(ExitCode::from(3))
    }
}

fn bench(algo: Algo, input: &Path) -> Result<ExitCode, Error> {
    let words: Vec<Word> = read_words(open(input)?).collect::<Result<_, _>>()?;
    let letters: usize = words.iter().map(Word::len).sum();
    let started = Instant::now();
    let (a, stats) = match algo {
        Algo::Sorted => {
            let mut b = SortedBuilder::new();
            for word in &words {
                b.insert(word)?;
            }
            b.finish()
        }
        Algo::Unsorted => {
            let mut b = UnsortedBuilder::new();
            for word in &words {
                b.add_word(word)?;
            }
            b.finish()
        }
    };
    let elapsed = started.elapsed();
    println!("words={}", words.len());
    println!("letters={letters}");
    println!("states={}", a.live_count());
    println!("transitions={}", a.transition_count());
    println!("peak_live_states={}", stats.peak_live_states);
    println!("rr_visits={}", stats.rr_visits);
    println!("build_ms={:.3}", elapsed.as_secs_f64() * 1e3);
    println!(
        "letters_per_sec={:.0}",
        letters as f64 / elapsed.as_secs_f64()
    );
    Ok(ExitCode::SUCCESS)
}
