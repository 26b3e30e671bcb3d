use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use punctuate::chunker::ChunkConfig;
use punctuate::corpus_io::{
    align_text_file, normalize_ellipsis, read_text_lines, read_timed_file, render_punctuated,
    LabeledDocument,
};
use punctuate::error::Result;
use punctuate::evaluator::evaluate_files;
use punctuate::stats::{compute_stats, format_stats_table};
use punctuate::tagger::{self, LinearModel, PauseFeatureConfig, TrainOptions};

/// Punctuation prediction for timestamped ASR transcripts.
#[derive(Parser)]
#[command(name = "punctuate", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// An `IN:EXPECTED` pair of paths, split at the first colon.
#[derive(Clone, Debug)]
struct DataPair {
    input: PathBuf,
    expected: PathBuf,
}

impl std::str::FromStr for DataPair {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (input, expected) = s
            .split_once(':')
            .ok_or_else(|| format!("expected IN:EXPECTED, got {s:?}"))?;
        if input.is_empty() || expected.is_empty() {
            return Err(format!("expected IN:EXPECTED, got {s:?}"));
        }
        Ok(DataPair {
            input: PathBuf::from(input),
            expected: PathBuf::from(expected),
        })
    }
}

#[derive(Args)]
struct ChunkArgs {
    /// Window size in words for chunked prediction
    #[arg(long, default_value_t = 100)]
    chunk_size: usize,
    /// Overlap in words between consecutive windows
    #[arg(long, default_value_t = 20)]
    overlap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Fold runs of three full stops into the ellipsis character
    Normalize {
        /// Text file, one document per line
        input: PathBuf,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Profile a corpus: samples, mean words per sample, per-1000-word rates
    Stats {
        /// In-file of token:start-end lines
        input: PathBuf,
        /// Expected-file of golden punctuated lines
        expected: PathBuf,
        /// Row label in the table (defaults to the in-file stem)
        #[arg(long)]
        label: Option<String>,
    },
    /// Align golden text to transcript words and dump word/label pairs
    Align {
        input: PathBuf,
        expected: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Train the averaged-perceptron tagger
    Train {
        /// Training corpus as IN:EXPECTED path pairs, concatenated in order
        #[arg(long = "data", value_name = "IN:EXPECTED", required = true)]
        data: Vec<DataPair>,
        /// Where to write the model file
        #[arg(short, long)]
        model: PathBuf,
        #[arg(long, default_value_t = 5)]
        epochs: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Words of context on each side of the focus word
        #[arg(long, default_value_t = 2)]
        context_radius: usize,
        /// Enable pause-gap features from the timestamps
        #[arg(long)]
        pauses: bool,
        /// Ascending pause bucket edges in milliseconds
        #[arg(
            long,
            value_name = "MS,MS,...",
            default_value = "50,200,500",
            value_delimiter = ','
        )]
        pause_buckets: Vec<u64>,
    },
    /// Punctuate an in-file with a trained model
    Predict {
        input: PathBuf,
        /// Model file written by train
        #[arg(short, long)]
        model: PathBuf,
        /// Out-file of punctuated lines (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        chunk: ChunkArgs,
    },
    /// Score an out-file against an expected-file
    Eval {
        /// In-file of token:start-end lines
        input: PathBuf,
        /// Expected-file of golden punctuated lines
        expected: PathBuf,
        /// Out-file of predicted punctuated lines
        out: PathBuf,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Normalize { input, output } => {
            let lines = read_text_lines(&input)?;
            let mut out = open_output(output.as_deref())?;
            for line in lines {
                writeln!(out, "{}", normalize_ellipsis(&line))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Stats {
            input,
            expected,
            label,
        } => {
            let docs = load_labeled(&input, &expected)?;
            let stats = compute_stats(&docs)?;
            let label = label.unwrap_or_else(|| file_stem(&input));
            print!("{}", format_stats_table(&[(label, stats)]));
            Ok(())
        }
        Command::Align {
            input,
            expected,
            output,
        } => {
            let docs = load_labeled(&input, &expected)?;
            let mut out = open_output(output.as_deref())?;
            for (i, doc) in docs.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                for (word, label) in doc.words.iter().zip(&doc.labels) {
                    writeln!(out, "{word}\t{}", label.label_name())?;
                }
            }
            out.flush()?;
            Ok(())
        }
        Command::Train {
            data,
            model,
            epochs,
            seed,
            context_radius,
            pauses,
            pause_buckets,
        } => {
            let mut corpus = Vec::new();
            for pair in &data {
                corpus.extend(load_labeled(&pair.input, &pair.expected)?);
            }
            let pause_config = if pauses {
                PauseFeatureConfig::enabled_with_edges(pause_buckets)?
            } else {
                PauseFeatureConfig {
                    enabled: false,
                    bucket_edges_ms: pause_buckets,
                }
            };
            let options = TrainOptions {
                epochs,
                seed,
                context_radius,
                pauses: pause_config,
            };
            let trained = tagger::train(&corpus, &options)?;
            trained.save(&model)?;
            println!(
                "trained on {} documents ({} epochs, seed {}): {} features -> {}",
                corpus.len(),
                epochs,
                seed,
                trained.num_features(),
                model.display()
            );
            Ok(())
        }
        Command::Predict {
            input,
            model,
            output,
            chunk,
        } => {
            let model = LinearModel::load(&model)?;
            let config = ChunkConfig {
                chunk_size: chunk.chunk_size,
                overlap: chunk.overlap,
            };
            let docs = read_timed_file(&input)?;
            let mut out = open_output(output.as_deref())?;
            for doc in &docs {
                let labeled = tagger::predict(&model, doc, &config)?;
                writeln!(out, "{}", render_punctuated(&labeled))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Eval {
            input,
            expected,
            out,
        } => {
            let report = evaluate_files(&expected, &out, &input)?;
            print!("{}", report.table());
            println!();
            print!("{}", report.machine_block());
            Ok(())
        }
    }
}

fn load_labeled(in_path: &Path, expected_path: &Path) -> Result<Vec<LabeledDocument>> {
    let docs = read_timed_file(in_path)?;
    align_text_file(expected_path, &docs)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}
