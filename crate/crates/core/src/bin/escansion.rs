use std::collections::BTreeSet;
use std::io::Read;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use escansion::corpus::{evaluate, load_corpus, CorpusFormat};
use escansion::lexicon::load_word_list;
use escansion::report::{to_json, to_pretty, to_tsv};
use escansion::{
    Catalog, LexiconConfig, MeterMode, PoemOptions, ScanConfig, Scanner, SplitTable, TieBreak,
    WindowAnchor,
};

#[derive(Parser)]
#[command(
    name = "escansion",
    version,
    about = "Metrical scansion of Spanish verse"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a poem from a file or standard input.
    Scan {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[command(flatten)]
        opts: ScanOpts,
    },
    /// Evaluate against an annotated corpus.
    Eval {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value = "dotted", value_parser = parse_corpus_format)]
        corpus_format: CorpusFormat,
        /// Print every failed verse after the summary.
        #[arg(long)]
        failures: bool,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        opts: ScanOpts,
    },
    /// Serve the analysis endpoint.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        #[command(flatten)]
        opts: ScanOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Args)]
struct ScanOpts {
    /// Verses consulted in mixed mode.
    #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u64).range(1..))]
    window: u64,
    /// Mixed-mode context: preceding or centered.
    #[arg(long, default_value = "preceding", value_parser = parse_anchor)]
    anchor: WindowAnchor,
    #[arg(long, default_value = "auto", value_parser = parse_mode)]
    mode: MeterMode,
    /// Expected measures, e.g. 7,11,14.
    #[arg(long, value_delimiter = ',')]
    measures: Vec<usize>,
    /// Pattern catalog replacing the bundled one.
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Atonic word list replacing the bundled one.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Words always treated as stressed.
    #[arg(long)]
    tonic_lexicon: Option<PathBuf>,
    /// Hemistich split table replacing the bundled one.
    #[arg(long)]
    splits: Option<PathBuf>,
    /// Treat the interjection "oh" as unstressed.
    #[arg(long)]
    oh_atonic: bool,
    /// Let punctuation block synalepha.
    #[arg(long)]
    strict_punctuation: bool,
    /// Never split long verses into hemistichs.
    #[arg(long)]
    no_hemistich: bool,
    /// Break resolution ties by resource kind instead of site order.
    #[arg(long)]
    kind_order: bool,
}

fn parse_mode(s: &str) -> Result<MeterMode, String> {
    s.parse()
}

fn parse_anchor(s: &str) -> Result<WindowAnchor, String> {
    s.parse()
}

fn parse_corpus_format(s: &str) -> Result<CorpusFormat, String> {
    s.parse()
}

type BoxError = Box<dyn std::error::Error>;

impl ScanOpts {
    fn scanner(&self) -> Result<Scanner, BoxError> {
        let mut lexicon = LexiconConfig::default().with_oh_tonic(!self.oh_atonic);
        if let Some(path) = &self.lexicon {
            lexicon = lexicon.with_atonic_words(load_word_list(path)?);
        }
        if let Some(path) = &self.tonic_lexicon {
            lexicon = lexicon.with_forced_tonic_words(load_word_list(path)?);
        }
        let catalog = match &self.catalog {
            Some(path) => Catalog::load(path)?,
            None => Catalog::default(),
        };
        let splits = match &self.splits {
            Some(path) => SplitTable::load(path)?,
            None => SplitTable::default(),
        };
        let config = ScanConfig {
            allow_hemistich: !self.no_hemistich,
            synalepha_across_punctuation: !self.strict_punctuation,
            tie_break: if self.kind_order {
                TieBreak::KindOrder
            } else {
                TieBreak::SiteOrder
            },
            ..ScanConfig::default()
        };
        Ok(Scanner::new(lexicon, catalog)
            .with_splits(splits)
            .with_config(config))
    }

    fn poem_options(&self) -> PoemOptions {
        let forced: BTreeSet<usize> = self.measures.iter().copied().collect();
        PoemOptions {
            window: self.window as usize,
            anchor: self.anchor,
            mode: self.mode,
            forced_measures: (!forced.is_empty()).then_some(forced),
        }
    }
}

fn read_input(input: Option<&PathBuf>) -> Result<String, BoxError> {
    Ok(match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            text
        }
    })
}

fn run(cli: Cli) -> Result<(), BoxError> {
    match cli.command {
        Command::Scan {
            input,
            format,
            opts,
        } => {
            let scanner = opts.scanner()?;
            let text = read_input(input.as_ref())?;
            let analysis = scanner.analyze_text(&text, &opts.poem_options());
            let out = match format {
                Format::Json => to_json(&analysis) + "\n",
                Format::Tsv => to_tsv(&analysis),
                Format::Pretty => to_pretty(&analysis),
            };
            print!("{out}");
        }
        Command::Eval {
            corpus,
            corpus_format,
            failures,
            json,
            opts,
        } => {
            let scanner = opts.scanner()?;
            let entries = load_corpus(&corpus, corpus_format)
                .map_err(|e| format!("{}: {e}", corpus.display()))?;
            let report = evaluate(&scanner, &entries, &opts.poem_options());
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{}", report.summary());
                if failures {
                    for f in &report.failures {
                        let produced = f
                            .produced
                            .as_ref()
                            .map_or("-".to_string(), |s| s.pattern.dotted());
                        println!("{}\tgold {}\tgot {}", f.verse, f.gold, produced);
                    }
                }
            }
        }
        Command::Serve { port, host, opts } => {
            let scanner = opts.scanner()?;
            let addr = SocketAddr::new(host, port);
            let runtime = tokio::runtime::Runtime::new()?;
            eprintln!("listening on http://{addr}");
            runtime.block_on(escansion::server::serve(scanner, addr))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("escansion: {e}");
            ExitCode::FAILURE
        }
    }
}
