// Analyze a whole poem, inferring its frequent measures.
//
// cargo run --example analyze_poem -- poem.txt [fixed|mixed|auto]

use escansion::report::{to_pretty, AnalysisResponse};
use escansion::{MeterMode, PoemOptions, Scanner};

const SONNET: &str = "\
En tanto que de rosa y azucena
se muestra la color en vuestro gesto,
y que vuestro mirar ardiente, honesto,
enciende al corazón y lo refrena;

y en tanto que el cabello, que en la vena
del oro se escogió, con vuelo presto,
por el hermoso cuello blanco, enhiesto,
el viento mueve, esparce y desordena:

coged de vuestra alegre primavera
el dulce fruto, antes que el tiempo airado
cubra de nieve la hermosa cumbre.

Marchitará la rosa el viento helado,
todo lo mudará la edad ligera
por no hacer mudanza en su costumbre.
";

fn main() {
    run(std::env::args().skip(1).collect());
}

fn run(args: Vec<String>) {
    let mut args = args.into_iter();
    let text = match args.next() {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("{path}: {e}");
            std::process::exit(1);
        }),
        None => SONNET.to_string(),
    };
    let mode: MeterMode = args.next().and_then(|m| m.parse().ok()).unwrap_or_default();
    let options = PoemOptions {
        mode,
        ..PoemOptions::default()
    };

    let analysis = Scanner::default().analyze_text(&text, &options);
    print!("{}", to_pretty(&analysis));

    let response = AnalysisResponse::new(&analysis, &options);
    println!(
        "\nfrequent measures {:?}, fixed: {}",
        response.frequent_measures, response.is_fixed
    );
    let colors: Vec<String> = response
        .rows
        .iter()
        .map(|r| format!("{:?}", r.color).to_lowercase())
        .collect();
    println!("colors: {}", colors.join(" "));
}
