//! Command-line front end: fold sizes, streaming enumeration, exact counts
//! and fold-count sweep tables.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use foldenum::{
    count_configurations, fold_sizes, partition_k_m, sweep, ClassDistribution, Error,
};

/// Validation failures and bad arguments.
const EXIT_INVALID: u8 = 2;
/// I/O failures.
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "foldenum",
    about = "Enumerate, count and analyze the standardized k-fold configurations of a multi-class dataset",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the balanced fold sizes for N records and k folds
    Sizes {
        /// Total number of records
        #[arg(long)]
        n: u64,
        /// Number of folds
        #[arg(long)]
        k: u64,
    },
    /// Stream every standardized fold configuration
    Enumerate {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Number of folds
        #[arg(long)]
        k: u64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        /// Stop after this many configurations
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Print the exact number of standardized fold configurations
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Number of folds
        #[arg(long)]
        k: u64,
    },
    /// Count configurations for a range of fold counts, as a CSV table
    Sweep {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long = "k-min")]
        k_min: u64,
        #[arg(long = "k-max")]
        k_max: u64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InstanceArgs {
    /// Per-class record counts, e.g. 2,24,64
    #[arg(long, value_delimiter = ',')]
    classes: Option<Vec<u64>>,
    /// Text file with one class label per line; classes are taken in
    /// first-appearance order
    #[arg(long)]
    labels_file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
}

enum CliError {
    Invalid(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(CliError::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sizes { n, k } => {
            let sizes = fold_sizes(n, k)?;
            let rendered: Vec<String> = sizes.sizes().iter().map(u64::to_string).collect();
            println!("{}", rendered.join(","));
            Ok(())
        }
        Command::Enumerate {
            instance,
            k,
            out,
            format,
            limit,
        } => cmd_enumerate(&instance.resolve()?, k, out, format, limit),
        Command::Count { instance, k } => {
            let classes = instance.resolve()?;
            let sizes = fold_sizes(classes.total(), k)?;
            let count = count_configurations(&sizes, &classes)?;
            println!("{count}");
            Ok(())
        }
        Command::Sweep {
            instance,
            k_min,
            k_max,
            out,
            format: SweepFormat::Csv,
        } => cmd_sweep(&instance.resolve()?, k_min, k_max, out),
    }
}

impl InstanceArgs {
    fn resolve(&self) -> Result<ClassDistribution, CliError> {
        let counts = match (&self.classes, &self.labels_file) {
            (Some(counts), None) => counts.clone(),
            (None, Some(path)) => label_multiplicities(path)?,
            _ => unreachable!("clap enforces exactly one source"),
        };
        for (class, &count) in counts.iter().enumerate() {
            if count == 0 {
                eprintln!("warning: class {class} has zero records");
            }
        }
        Ok(ClassDistribution::new(counts)?)
    }
}

/// One label token per line, trimmed; empty lines are skipped. Classes are
/// numbered in first-appearance order.
fn label_multiplicities(path: &PathBuf) -> Result<Vec<u64>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut labels: Vec<&str> = Vec::new();
    let mut counts: Vec<u64> = Vec::new();
    for token in text.lines().map(str::trim).filter(|t| !t.is_empty()) {
        match labels.iter().position(|&l| l == token) {
            Some(index) => counts[index] += 1,
            None => {
                labels.push(token);
                counts.push(1);
            }
        }
    }
    if counts.is_empty() {
        return Err(CliError::Invalid(format!(
            "no labels found in {}",
            path.display()
        )));
    }
    Ok(counts)
}

fn open_sink(out: Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_enumerate(
    classes: &ClassDistribution,
    k: u64,
    out: Option<PathBuf>,
    format: Format,
    limit: Option<u64>,
) -> Result<(), CliError> {
    let sizes = fold_sizes(classes.total(), k)?;
    let stream = partition_k_m(&sizes, classes)?;
    let mut sink = open_sink(out)?;

    if format == Format::Csv {
        let header: Vec<String> = (0..sizes.num_folds())
            .flat_map(|fold| {
                (0..classes.num_classes()).map(move |class| format!("f{fold}_c{class}"))
            })
            .collect();
        writeln!(sink, "{}", header.join(","))?;
    }

    let mut emitted: u64 = 0;
    for config in stream {
        if limit.is_some_and(|cap| emitted >= cap) {
            break;
        }
        match format {
            Format::Jsonl => {
                let rows: Vec<&[u64]> = config.rows().collect();
                let record = serde_json::json!({ "folds": rows });
                writeln!(sink, "{record}")?;
            }
            Format::Csv => {
                let cells: Vec<String> = config.cells().iter().map(u64::to_string).collect();
                writeln!(sink, "{}", cells.join(","))?;
            }
        }
        emitted += 1;
    }
    sink.flush()?;
    eprintln!("enumerated {emitted} configurations");
    Ok(())
}

fn cmd_sweep(
    classes: &ClassDistribution,
    k_min: u64,
    k_max: u64,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    if k_min > k_max {
        return Err(CliError::Invalid(format!(
            "k-min ({k_min}) exceeds k-max ({k_max})"
        )));
    }
    let rows = sweep(classes, k_min, k_max)?;
    let mut sink = open_sink(out)?;
    writeln!(sink, "k,sizes,count,elapsed_ms")?;
    for row in rows {
        let sizes: Vec<String> = row.sizes.sizes().iter().map(u64::to_string).collect();
        writeln!(
            sink,
            "{},{},{},{}",
            row.k,
            sizes.join("|"),
            row.count,
            row.elapsed.as_millis()
        )?;
    }
    sink.flush()?;
    Ok(())
}
