// List every candidate reading of an ambiguous verse and pick one for a
// target measure.
//
// cargo run --example resolve_ambiguity -- "Todas las tardes se muere un niño" 11

use std::collections::BTreeSet;

use escansion::Scanner;

fn main() {
    run(std::env::args().skip(1).collect());
}

fn run(args: Vec<String>) {
    let mut args = args.into_iter();
    let verse = args
        .next()
        .unwrap_or_else(|| "dentro de su fluir los manantiales".into());
    let targets: BTreeSet<usize> = args
        .next()
        .map(|t| t.split(',').filter_map(|m| m.parse().ok()).collect())
        .unwrap_or_else(|| BTreeSet::from([11]));

    let scanner = Scanner::default();
    let candidates = match scanner.generate_candidates(&verse) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    for c in &candidates {
        let applied: Vec<String> = c.applied.iter().map(|t| t.to_string()).collect();
        println!(
            "{:>2}  {:<16} {:.2}  {:<40} [{}]",
            c.scansion.measure,
            c.scansion.pattern.dotted(),
            c.scansion.matched.coincidence_ratio.value(),
            c.scansion.tagged_text,
            applied.join(" ")
        );
    }
    if let Some(best) = scanner.resolve_ambiguity(candidates, &targets) {
        println!(
            "\nchosen for {targets:?}: {} | {} ({})",
            best.tagged_text,
            best.pattern.dotted(),
            best.matched.type_name()
        );
    }
}
