// Scan single verses with the default reading.
//
// cargo run --example scan_verse -- "Amigos, el amor me perjudica"

use escansion::Scanner;

fn main() {
    run(std::env::args().skip(1).collect());
}

fn run(args: Vec<String>) {
    let verses: Vec<String> = match args.into_iter().next() {
        Some(v) => vec![v],
        None => vec![
            "Amigos, el amor me perjudica".into(),
            "Creía que te había dicho adiós".into(),
            "Oh, qué frescor, qué música de chopos de estación".into(),
            "una lucha común, y un descanso común".into(),
        ],
    };
    let scanner = Scanner::default();
    for verse in &verses {
        match scanner.scan_verse(verse) {
            Ok(s) => {
                println!("{}", s.tagged_text);
                println!("  {}", s.stressed_text);
                print!("  {} syllables, pattern {}", s.measure, s.pattern.dotted());
                if let Some(plan) = &s.hemistichs {
                    print!(", hemistichs {}", plan.describe());
                }
                println!();
                let resources: Vec<String> = s.resources.iter().map(|r| r.to_string()).collect();
                if !resources.is_empty() {
                    println!("  resources: {}", resources.join(" "));
                }
            }
            Err(e) => println!("{verse}: {e}"),
        }
    }
}
