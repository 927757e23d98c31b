// Evaluate the scanner on an annotated corpus.
//
// cargo run --release --example evaluate_corpus -- corpus.tsv [dotted|signs]
//
// Without arguments a small built-in sample is used.

use escansion::corpus::{evaluate, load_corpus, parse_corpus, CorpusFormat};
use escansion::{PoemOptions, Scanner};

const SAMPLE: &str = "\
Amigos, el amor me perjudica\t2.6.10
Siempre la claridad viene del cielo\t1.6.7.10
Creía que te había dicho adiós\t2.6.8.10
dentro de su fluir los manantiales\t1.6.10
Todas las tardes se muere un niño\t1.4.8.9.10
";

fn main() {
    run(std::env::args().skip(1).collect());
}

fn run(args: Vec<String>) {
    let mut args = args.into_iter();
    let path = args.next();
    let format: CorpusFormat = args.next().and_then(|f| f.parse().ok()).unwrap_or_default();
    let entries = match &path {
        Some(p) => load_corpus(p, format),
        None => parse_corpus(SAMPLE, CorpusFormat::Dotted),
    }
    .unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(1);
    });

    let report = evaluate(&Scanner::default(), &entries, &PoemOptions::default());
    println!("{}", report.summary());
    for f in report.failures.iter().take(20) {
        let got = f
            .produced
            .as_ref()
            .map_or("-".into(), |s| s.pattern.dotted());
        println!("  {}  gold {}  got {}", f.verse, f.gold, got);
    }
}
