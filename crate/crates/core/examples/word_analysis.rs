// Nucleus count, stress and compensation for a few words.
//
// cargo run --example word_analysis -- [WORD...]

use escansion::text::normalize_word;
use escansion::{scan_word, LexiconConfig};

fn main() {
    run(std::env::args().skip(1).collect());
}

fn run(mut words: Vec<String>) {
    if words.is_empty() {
        words = [
            "bolígrafo",
            "amor",
            "sol",
            "solamente",
            "fluir",
            "creía",
            "Uruguay",
            "de",
        ]
        .map(String::from)
        .to_vec();
    }
    let lexicon = LexiconConfig::default();
    println!(
        "{:<12} {:>4} {:>6} {:>5}  atonic",
        "word", "nuc", "stress", "comp"
    );
    for raw in &words {
        let word = normalize_word(raw);
        match scan_word(&word, &lexicon) {
            Ok(s) => println!(
                "{:<12} {:>4} {:>6} {:>+5}  {}",
                s.word,
                s.syllable_count,
                s.stress_index.map_or("-".into(), |i| i.to_string()),
                s.compensation,
                s.is_atonic
            ),
            Err(e) => println!("{raw:<12} error: {e}"),
        }
    }
}
