// Match stress patterns against the rhythm catalog.
//
// cargo run --example catalog_match -- 1.6.7.10

use escansion::{Catalog, MetricalPattern};

fn main() {
    run(std::env::args().skip(1).collect());
}

fn run(args: Vec<String>) {
    let patterns: Vec<String> = {
        if args.is_empty() {
            [
                "2.6.10",
                "1.6.7.10",
                "1.4.8.9.10",
                "3.6.8.10",
                "5.10",
                "2.4.6|7",
            ]
            .map(String::from)
            .to_vec()
        } else {
            args
        }
    };
    let catalog = Catalog::default();
    println!("{} hendecasyllable types", catalog.lookup(11).len());
    for p in &patterns {
        let pattern = match MetricalPattern::parse_dotted(p) {
            Ok(p) => p,
            Err(e) => {
                println!("{p}: {e}");
                continue;
            }
        };
        let m = catalog.match_pattern(&pattern);
        let name = m.type_name();
        println!(
            "{:<14} {:>2}  {:<20} {:.2}  extra {:?}",
            pattern.dotted(),
            pattern.measure,
            if name.is_empty() { "-" } else { &name },
            m.coincidence_ratio.value(),
            m.extrarrhythmic
        );
    }
}
