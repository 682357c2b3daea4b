use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use isemlab::enumerate::{check_order_cap, enumerate_semigroups, EnumerateOptions};
use isemlab::io::{
    automorphism_rows, automorphism_rows_text, emit_corpus, emit_table, parse_corpus, parse_table,
    PropertyReport,
};
use isemlab::verify::{gallery_checks, run_statements, ReplayFile, Statement};
use isemlab::{Corpus, Filter, TheoremReport};

const OUT_ENV: &str = "ISEMLAB_OUT";
const DEFAULT_OUT: &str = "isemlab-out";

/// Finite semigroup laboratory.
#[derive(Parser, Debug)]
#[command(name = "isemlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural properties of a table file.
    Check {
        file: PathBuf,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List the automorphisms of a table file.
    Aut {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run statements over a corpus and write one JSON report per statement.
    Verify {
        /// Statement ids (`lemma21` expands to both directions, `all` to every statement).
        #[arg(required = true)]
        statements: Vec<String>,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Load the corpus from a file instead of enumerating.
        #[arg(long = "corpus", conflicts_with_all = ["max_order", "filter"])]
        corpus_file: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check the fixed examples and write the band table and report.
    Gallery {
        #[command(flatten)]
        out: OutArgs,
    },
    /// Enumerate semigroups up to isomorphism and write a corpus file.
    Enumerate {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Re-run a counterexample replay file.
    Replay { file: PathBuf },
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long)]
    max_order: Option<usize>,
    /// all, inverse, cr, clifford, band, group or cancellative.
    #[arg(long)]
    filter: Option<Filter>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Allow orders above the filter's default cap.
    #[arg(long)]
    force_large: bool,
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Output directory (default: $ISEMLAB_OUT, else ./isemlab-out).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutArgs {
    fn dir(&self) -> Result<PathBuf> {
        let dir = self
            .out
            .clone()
            .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT));
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        Ok(dir)
    }
}

const DEFAULT_MAX_ORDER: usize = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { file, json } => {
            let report = PropertyReport::of(&read_table(&file)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Aut { file, json } => {
            let rows = automorphism_rows(&read_table(&file)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                print!("{}", automorphism_rows_text(&rows));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            statements,
            corpus,
            corpus_file,
            out,
        } => verify(&statements, &corpus, corpus_file.as_deref(), &out),
        Command::Gallery { out } => gallery(&out),
        Command::Enumerate { corpus, out } => {
            let filter = corpus.filter.unwrap_or(Filter::All);
            let c = build_corpus(&corpus, filter)?;
            let dir = out.dir()?;
            let path = dir.join(format!("corpus-{}-{}.txt", c.filter, c.max_order));
            write(&path, &emit_corpus(&c))?;
            for (n, count) in c.counts_by_order().iter().enumerate() {
                println!("order {}: {count}", n + 1);
            }
            println!("total: {} -> {}", c.len(), path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { file } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let replay: ReplayFile = serde_json::from_str(&text).context("parsing replay file")?;
            if replay.replay()? {
                println!(
                    "reproduced: {} fails clause {} at {:?}",
                    replay.statement, replay.record.clause, replay.record.witnesses
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "not reproduced: {} holds on the recorded pair",
                    replay.statement
                );
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn read_table(path: &Path) -> Result<isemlab::FiniteSemigroup> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_table(&text).with_context(|| format!("in {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn build_corpus(args: &CorpusArgs, filter: Filter) -> Result<Corpus> {
    let max_order = args.max_order.unwrap_or(DEFAULT_MAX_ORDER);
    check_order_cap(max_order, filter, args.force_large)?;
    if max_order > filter.default_cap() {
        eprintln!(
            "warning: order {max_order} is above the default cap {} for `{filter}`; this may take a while",
            filter.default_cap()
        );
    }
    Ok(enumerate_semigroups(
        max_order,
        filter,
        EnumerateOptions {
            workers: args.workers,
            force_large: args.force_large,
        },
    )?)
}

fn verify(
    ids: &[String],
    args: &CorpusArgs,
    corpus_file: Option<&Path>,
    out: &OutArgs,
) -> Result<ExitCode> {
    let statements = Statement::parse_list(ids)?;
    let loaded = match corpus_file {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Some(parse_corpus(&text).with_context(|| format!("in {}", path.display()))?)
        }
        None => None,
    };
    // one corpus per filter, each statement on its own default unless overridden
    let mut by_filter: BTreeMap<Filter, Vec<Statement>> = BTreeMap::new();
    for &s in &statements {
        let filter = match &loaded {
            Some(c) => c.filter,
            None => args.filter.unwrap_or(s.default_filter()),
        };
        by_filter.entry(filter).or_default().push(s);
    }
    if loaded.is_none() {
        for &filter in by_filter.keys() {
            check_order_cap(
                args.max_order.unwrap_or(DEFAULT_MAX_ORDER),
                filter,
                args.force_large,
            )?;
        }
    }
    let mut reports: BTreeMap<Statement, TheoremReport> = BTreeMap::new();
    for (filter, group) in &by_filter {
        let corpus = match &loaded {
            Some(c) => c.clone(),
            None => build_corpus(args, *filter)?,
        };
        for (s, r) in group
            .iter()
            .zip(run_statements(group, &corpus, args.workers))
        {
            reports.insert(*s, r);
        }
    }

    let dir = out.dir()?;
    let mut theorem_failed = false;
    for s in statements {
        let r = &reports[&s];
        write(&dir.join(format!("{}.json", s.id())), &r.to_json())?;
        println!(
            "{}: checked={} satisfied={} skipped={} violations={} {}",
            r.statement,
            r.checked,
            r.satisfied_hypotheses,
            r.skipped,
            r.violations.len(),
            if r.pass { "PASS" } else { "FAIL" }
        );
        if r.pass {
            continue;
        }
        if s.is_conjecture() {
            println!("==================== COUNTEREXAMPLE ====================");
            println!("{} has {} counterexample(s)", s.id(), r.violations.len());
            for (i, record) in r.violations.iter().enumerate() {
                let path = dir.join(format!("{}-counterexample-{}.json", s.id(), i + 1));
                let file = ReplayFile {
                    statement: s.id().to_string(),
                    record: record.clone(),
                };
                write(&path, &(serde_json::to_string_pretty(&file)? + "\n"))?;
                println!(
                    "  clause {} witnesses {:?} -> {}",
                    record.clause,
                    record.witnesses,
                    path.display()
                );
            }
            println!("========================================================");
        } else {
            theorem_failed = true;
            for record in &r.violations {
                eprintln!(
                    "violation of {}: clause {} witnesses {:?} alpha {:?}",
                    s.id(),
                    record.clause,
                    record.witnesses,
                    record.alpha
                );
            }
        }
    }
    Ok(if theorem_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn gallery(out: &OutArgs) -> Result<ExitCode> {
    let report = gallery_checks();
    let (b4, _) = isemlab::verify::gallery_band_b4();
    let dir = out.dir()?;
    write(&dir.join("band-b4.txt"), &emit_table(&b4))?;
    write(&dir.join("gallery.json"), &report.to_json())?;
    println!(
        "gallery: checked={} violations={} {}",
        report.checked,
        report.violations.len(),
        if report.pass { "PASS" } else { "FAIL" }
    );
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
