use std::path::PathBuf;
use std::process::ExitCode;

use apolar_cli::{
    run, write_report, Command, CorpusAction, CorpusJob, Job, MacaulayJob, SearchOverrides, JOBS_ENV,
};
use clap::{Args, Parser, Subcommand};

/// Border-rank bounds, move-fit searches and ideal verification for
/// monomials and tensors on products of projective spaces.
#[derive(Parser, Debug)]
#[command(name = "apolar", version)]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct Workers {
    /// Worker threads; 0 uses every core.
    #[arg(long, env = JOBS_ENV)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Lower and upper border-rank bounds with witnesses.
    Bounds { tensor: PathBuf },
    /// Move-fit search for a monomial ideal at rank r.
    Search {
        /// Tensor file, or the name of a corpus file.
        tensor: PathBuf,
        #[arg(long)]
        r: u64,
        /// Largest total degree examined; defaults to |L|.
        #[arg(long)]
        horizon: Option<u32>,
        /// Turn off canonical-form pruning.
        #[arg(long)]
        no_symmetry: bool,
        /// Prune with Lex-bar growth.
        #[arg(long)]
        growth_prune: bool,
        #[command(flatten)]
        workers: Workers,
        /// Stop after this many placements.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check an ideal against the generic Hilbert function and F^⊥.
    Verify {
        ideal: PathBuf,
        tensor: PathBuf,
        #[arg(long)]
        r: u64,
        /// Largest total degree checked; defaults to |L|.
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Macaulay decompositions and Lex-bar profiles.
    Macaulay {
        #[arg(long)]
        r: u64,
        /// Degree for the Macaulay decomposition of r.
        #[arg(long)]
        d: Option<u32>,
        /// Ascending summand degrees, comma separated.
        #[arg(long, value_delimiter = ',')]
        lexbar: Option<Vec<u32>>,
        /// Projective dimension, needed with --lexbar.
        #[arg(long)]
        n: Option<u32>,
    },
    /// The shipped instances.
    Corpus {
        #[command(subcommand)]
        action: CorpusCmd,
    },
    /// Run a job file.
    Job { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    /// List cases, optionally filtered by a substring.
    List { filter: Option<String> },
    /// Run cases by name, or `all`.
    Run {
        names: Vec<String>,
        /// Include cases tagged slow.
        #[arg(long)]
        slow: bool,
        #[command(flatten)]
        workers: Workers,
    },
}

fn job_from(cli: Cli) -> apolar_cli::Result<Job> {
    let mut job = match cli.command {
        Cmd::Job { file } => Job::from_file(&file)?,
        Cmd::Bounds { tensor } => Job { tensor: Some(tensor), ..Job::new(Command::Bounds) },
        Cmd::Search { tensor, r, horizon, no_symmetry, growth_prune, workers, budget } => Job {
            tensor: Some(tensor),
            search: SearchOverrides {
                r: Some(r),
                horizon,
                symmetry: Some(!no_symmetry),
                growth: Some(growth_prune),
                jobs: workers.jobs,
                budget,
            },
            ..Job::new(Command::Search)
        },
        Cmd::Verify { ideal, tensor, r, horizon } => Job {
            ideal: Some(ideal),
            tensor: Some(tensor),
            search: SearchOverrides { r: Some(r), horizon, ..Default::default() },
            ..Job::new(Command::Verify)
        },
        Cmd::Macaulay { r, d, lexbar, n } => {
            Job { macaulay: Some(MacaulayJob { r, d, lexbar, n }), ..Job::new(Command::Macaulay) }
        }
        Cmd::Corpus { action: CorpusCmd::List { filter } } => Job {
            corpus: Some(CorpusJob { action: CorpusAction::List, names: filter.into_iter().collect(), slow: false }),
            ..Job::new(Command::Corpus)
        },
        Cmd::Corpus { action: CorpusCmd::Run { names, slow, workers } } => Job {
            corpus: Some(CorpusJob { action: CorpusAction::Run, names, slow }),
            search: SearchOverrides { jobs: workers.jobs, ..Default::default() },
            ..Job::new(Command::Corpus)
        },
    };
    if cli.output.is_some() {
        job.output = cli.output;
    }
    Ok(job)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = job_from(cli).and_then(|job| {
        let report = run(&job)?;
        if let Some(text) = write_report(&job, &report)? {
            print!("{text}");
        }
        Ok(report.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
