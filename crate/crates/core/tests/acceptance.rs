//! One line per primary acceptance criterion: PASS, FAIL or BLOCKED.
//!
//! The fixed-meter corpus is not bundled. Point `SCANSION_FIXED_CORPUS` at a
//! TAB-separated copy (`verse<TAB>pattern`, dotted or signs) to run it.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{generate_line, hand_checked_words, reference_nuclei, GOLDEN};
use escansion::corpus::{evaluate, load_corpus, CorpusEntry, CorpusFormat};
use escansion::{
    scan_word, Candidate, Catalog, LexiconConfig, MeterMode, MetricalPattern, PoemOptions,
    ResourceKind, ScanConfig, Scanner, VerseScansion,
};

const CORPUS_ENV: &str = "SCANSION_FIXED_CORPUS";

enum Outcome {
    Pass(String),
    Fail(String),
    Blocked(String),
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn resolve(scanner: &Scanner, verse: &str, targets: &[usize]) -> VerseScansion {
    if targets.is_empty() {
        scanner.scan_verse(verse).unwrap()
    } else {
        let t: BTreeSet<usize> = targets.iter().copied().collect();
        scanner.scan_resolved(verse, &t).unwrap()
    }
}

fn golden_suite() -> Check {
    let scanner = Scanner::default();
    let start = Instant::now();
    for g in GOLDEN {
        let s = resolve(&scanner, g.verse, g.targets);
        let ctx = |what: &str| format!("{:?}: {what} {s:?}", g.verse);
        ensure(s.measure == g.measure, || ctx("measure"))?;
        if let Some(p) = g.positions {
            ensure(s.pattern.positions == p, || ctx("pattern"))?;
        }
        if let Some(h) = g.hemistichs {
            let got = s.hemistichs.as_ref().map(|p| p.describe());
            ensure(got.as_deref() == Some(h), || ctx("hemistichs"))?;
        }
        if let Some(t) = g.type_name {
            ensure(s.matched.type_name() == t, || ctx("type"))?;
        }
        if let Some(x) = g.extrarrhythmic {
            ensure(s.matched.extrarrhythmic == x, || ctx("extrarrhythmic"))?;
        }
        if let Some(t) = g.tagged {
            ensure(s.tagged_text == t, || ctx("tagged"))?;
        }
    }
    let escucho = scanner
        .scan_verse("Escucho solamente entre las voces una")
        .unwrap();
    ensure(
        escucho.count(ResourceKind::HemistichDialefa) == 1
            && escucho.count(ResourceKind::Synalepha) == 0,
        || "pause does not break solamente‿entre".into(),
    )?;
    ensure(scanner.scan_verse("X").is_err(), || "X scanned".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} examples in {:.0?}", GOLDEN.len(), elapsed))
}

fn catalog_fidelity() -> Check {
    let catalog = Catalog::default();
    let rows = catalog.lookup(11);
    ensure(rows.len() == 27, || format!("{} rows", rows.len()))?;
    let only = Catalog::hendecasyllables_only();
    ensure(only.lookup(11) == rows, || "bundled tables disagree".into())?;
    for t in &rows {
        let m = catalog.match_pattern(&MetricalPattern::new(t.stresses.clone(), 11).unwrap());
        let got = m.matched_type.as_ref().map(|g| g.stresses.clone());
        ensure(
            m.coincidence_ratio.is_one() && got.as_ref() == Some(&t.stresses),
            || format!("{} does not match itself", t.name()),
        )?;
    }
    Ok("27 rows, all round-trip at ratio 1".into())
}

fn fixed_corpus() -> Outcome {
    let Ok(path) = std::env::var(CORPUS_ENV) else {
        return Outcome::Blocked(format!(
            "corpus not bundled and not downloadable here; set {CORPUS_ENV}"
        ));
    };
    let format = if std::fs::read_to_string(&path)
        .map(|t| t.lines().any(|l| l.ends_with('+') || l.ends_with('-')))
        .unwrap_or(false)
    {
        CorpusFormat::Signs
    } else {
        CorpusFormat::Dotted
    };
    let entries = match load_corpus(&path, format) {
        Ok(e) => e,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let fixed = PoemOptions {
        mode: MeterMode::Fixed,
        ..PoemOptions::default()
    };
    let full = evaluate(&Scanner::default(), &entries, &fixed);
    let head: Vec<CorpusEntry> = entries.iter().take(1400).cloned().collect();
    let oh_atonic = Scanner::new(
        LexiconConfig::default().with_oh_tonic(false),
        Catalog::default(),
    );
    let subset = evaluate(&oh_atonic, &head, &fixed);
    let detail = format!(
        "full {} ({} verses, {:.2}s); first 1400 with atonic oh {:.4}",
        full.accuracy, full.total, full.elapsed_seconds, subset.accuracy
    );
    if full.accuracy >= 0.93 && full.elapsed_seconds <= 30.0 && subset.accuracy >= 0.94 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

/// Golden verses plus generated 7/11/14 lines, with gold labels from the
/// reference scanner in the common module.
fn synthetic_corpus(rng: &mut ChaCha8Rng) -> (Vec<CorpusEntry>, BTreeSet<usize>) {
    let mut entries = Vec::new();
    let mut generated = BTreeSet::new();
    for g in GOLDEN {
        if let Some(p) = g.positions {
            entries.push(CorpusEntry {
                verse: g.verse.to_string(),
                gold: MetricalPattern::new(p.to_vec(), g.measure).unwrap(),
            });
        }
    }
    for i in 0..240 {
        let measure = [7, 11, 14][i % 3];
        let (verse, positions) = if measure == 14 {
            let (a, _, pa) = generate_line(rng, 7);
            let (b, _, pb) = generate_line(rng, 7);
            let mut p = pa;
            p.extend(pb.iter().map(|x| x + 7));
            (format!("{a} {b}"), p)
        } else {
            let (v, _, p) = generate_line(rng, measure);
            (v, p)
        };
        generated.insert(entries.len());
        entries.push(CorpusEntry {
            verse,
            gold: MetricalPattern::new(positions, measure).unwrap(),
        });
    }
    (entries, generated)
}

fn mixed_meter(rng: &mut ChaCha8Rng) -> Check {
    let (entries, generated) = synthetic_corpus(rng);
    let scanner = Scanner::default();
    let options = PoemOptions {
        mode: MeterMode::Mixed,
        ..PoemOptions::default()
    };
    let verses: Vec<&str> = entries.iter().map(|e| e.verse.as_str()).collect();
    let analysis = scanner.analyze_poem(&verses, &options);
    ensure(
        analysis.frequent_measures == BTreeSet::from([7, 11, 14]),
        || format!("frequent {:?}", analysis.frequent_measures),
    )?;
    let mut wrong = Vec::new();
    let mut long_rows = 0;
    for (i, (entry, row)) in entries.iter().zip(&analysis.rows).enumerate() {
        let s = row
            .scansion
            .as_ref()
            .ok_or(format!("{:?} unscannable", entry.verse))?;
        if generated.contains(&i) && s.pattern.positions != entry.gold.positions {
            wrong.push(format!(
                "{:?} gold {} got {}",
                entry.verse,
                entry.gold.dotted(),
                s.pattern.dotted()
            ));
        }
        if s.measure == 14 {
            long_rows += 1;
            let plan = s
                .hemistichs
                .as_ref()
                .ok_or(format!("{:?} no hemistichs", entry.verse))?;
            let sums = plan.measure() == 14
                && plan.splits.iter().all(|h| {
                    h.raw as isize + h.compensation as isize == h.expected_measure as isize
                });
            ensure(sums, || {
                format!("{:?} inconsistent plan {plan:?}", entry.verse)
            })?;
            ensure(
                s.pattern.positions.iter().all(|&p| p <= 14) && s.pattern.positions.contains(&13),
                || format!("{:?} pattern {}", entry.verse, s.pattern.dotted()),
            )?;
        }
    }
    ensure(wrong.is_empty(), || {
        format!("{} wrong: {}", wrong.len(), wrong.join("; "))
    })?;
    Ok(format!(
        "{} verses, {} generated all exact, {} 14-syllable rows consistent",
        entries.len(),
        generated.len(),
        long_rows
    ))
}

fn compensation_identity() -> Check {
    let lexicon = LexiconConfig::default();
    let words = hand_checked_words();
    ensure(words.len() >= 200, || format!("only {} words", words.len()))?;
    for w in &words {
        let s = scan_word(&escansion::text::normalize_word(&w.word), &lexicon)
            .map_err(|e| format!("{}: {e}", w.word))?;
        ensure(s.syllable_count == w.nuclei, || {
            format!(
                "{}: {} nuclei, expected {}",
                w.word, s.syllable_count, w.nuclei
            )
        })?;
        ensure(s.compensation == w.compensation, || {
            format!(
                "{}: compensation {}, expected {}",
                w.word, s.compensation, w.compensation
            )
        })?;
        let last = s.last_stress().unwrap() as isize;
        let identity = (last - (s.syllable_count as isize - 1)).clamp(-1, 1) as i8;
        ensure(s.compensation == identity, || {
            format!("{}: identity broken", w.word)
        })?;
        ensure(reference_nuclei(&s.word) == s.syllable_count, || {
            format!("{}: reference counter disagrees", w.word)
        })?;
    }
    Ok(format!("{} words", words.len()))
}

fn random_verse(rng: &mut ChaCha8Rng) -> String {
    let pool: Vec<&str> = hand_checked_words()
        .into_iter()
        .map(|w| &*Box::leak(w.word.into_boxed_str()))
        .chain(common::GEN_LEXICON.iter().map(|g| g.text))
        .collect();
    let n = rng.gen_range(3..8);
    (0..n)
        .map(|_| *pool.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .join(" ")
}

fn single_resource_arithmetic(rng: &mut ChaCha8Rng) -> Check {
    let scanner = Scanner::default().with_config(ScanConfig {
        allow_hemistich: false,
        ..ScanConfig::default()
    });
    let mut checked = 0;
    for _ in 0..1000 {
        let verse = random_verse(rng);
        let Ok(cands) = scanner.generate_candidates(&verse) else {
            continue;
        };
        let base = cands
            .iter()
            .find(|c| c.is_default())
            .unwrap()
            .scansion
            .measure as isize;
        let words = verse.split_whitespace().count();
        for c in cands.iter().filter(|c| c.applied.len() == 1) {
            let tag = c.applied[0];
            let delta = match tag.kind {
                ResourceKind::Dialefa => 1,
                ResourceKind::Dieresis if tag.word + 1 < words => 1,
                ResourceKind::Syneresis if tag.word + 1 < words => -1,
                _ => continue,
            };
            checked += 1;
            ensure(c.scansion.measure as isize == base + delta, || {
                format!("{verse:?} {tag}: {} vs base {base}", c.scansion.measure)
            })?;
        }
    }
    Ok(format!("1000 verses, {checked} single resources"))
}

fn punctuate(verse: &str, rng: &mut ChaCha8Rng) -> String {
    verse
        .split_whitespace()
        .map(|w| {
            let pre = ["", "", "¡", "¿", "«", "("].choose(rng).unwrap();
            let post = ["", "", ",", ";", ".", "!", "?", "»", "...", ":"]
                .choose(rng)
                .unwrap();
            format!("{pre}{w}{post}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn punctuation_invariance(rng: &mut ChaCha8Rng) -> Check {
    let scanner = Scanner::default();
    for _ in 0..500 {
        let verse = random_verse(rng);
        let noisy = punctuate(&verse, rng);
        let (a, b) = (scanner.scan_verse(&verse), scanner.scan_verse(&noisy));
        match (a, b) {
            (Ok(a), Ok(b)) => ensure(
                a.measure == b.measure && a.pattern == b.pattern && a.resources == b.resources,
                || format!("{verse:?} vs {noisy:?}"),
            )?,
            (Err(_), Err(_)) => {}
            _ => return Err(format!("{verse:?} vs {noisy:?}: scannability differs")),
        }
    }
    Ok("500 verse pairs".into())
}

/// Exhaustive oracle for the selection rule over every subset of sites.
fn brute_force_best(cands: &[Candidate], targets: &BTreeSet<usize>) -> VerseScansion {
    let key = |c: &Candidate| {
        (
            targets.contains(&c.scansion.measure),
            c.scansion.matched.coincidence_ratio,
            std::cmp::Reverse(c.applied.len()),
            std::cmp::Reverse(c.site_order.clone()),
        )
    };
    let best = cands.iter().max_by_key(|c| key(c)).unwrap();
    let chosen = if targets.contains(&best.scansion.measure) {
        best
    } else {
        cands.iter().find(|c| c.is_default()).unwrap()
    };
    chosen.scansion.clone()
}

fn candidate_equivalence(rng: &mut ChaCha8Rng) -> Check {
    let scanner = Scanner::default();
    let mut checked = 0;
    let mut tries = 0;
    while checked < 300 && tries < 20_000 {
        tries += 1;
        let verse = random_verse(rng);
        let Ok(cands) = scanner.generate_candidates(&verse) else {
            continue;
        };
        let sites: BTreeSet<_> = cands
            .iter()
            .flat_map(|c| c.applied.iter().copied())
            .collect();
        if sites.len() > 3 {
            continue;
        }
        checked += 1;
        let sites: Vec<_> = sites.into_iter().collect();
        let expected: BTreeSet<Vec<_>> = (0..1usize << sites.len())
            .map(|mask| {
                let mut s: Vec<_> = (0..sites.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| sites[i])
                    .collect();
                s.sort();
                s
            })
            .collect();
        let got: BTreeSet<Vec<_>> = cands
            .iter()
            .map(|c| {
                let mut s = c.applied.clone();
                s.sort();
                s
            })
            .collect();
        ensure(got == expected && cands.len() == expected.len(), || {
            format!("{verse:?}: candidates are not the powerset of {sites:?}")
        })?;
        for c in &cands {
            let again = scanner
                .generate_candidates(&verse)
                .unwrap()
                .into_iter()
                .find(|d| d.applied == c.applied)
                .unwrap();
            ensure(again.scansion == c.scansion, || {
                format!("{verse:?}: unstable rescan")
            })?;
        }
        let targets = BTreeSet::from([rng.gen_range(6..16)]);
        let mut expected = brute_force_best(&cands, &targets);
        let got = scanner.resolve_ambiguity(cands, &targets).unwrap();
        if got.flags.contains(&escansion::ScanFlag::Rescanned)
            && !expected.flags.contains(&escansion::ScanFlag::Rescanned)
        {
            expected.flags.push(escansion::ScanFlag::Rescanned);
        }
        ensure(got == expected, || format!("{verse:?}: resolution differs"))?;
    }
    ensure(checked >= 300, || {
        format!("only {checked} verses with at most 3 sites")
    })?;
    Ok(format!("{checked} verses"))
}

fn format_round_trip(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..1000 {
        let measure = rng.gen_range(1..=20);
        let positions: Vec<usize> = (1..=measure).filter(|_| rng.gen_bool(0.4)).collect();
        if positions.is_empty() {
            continue;
        }
        let p = MetricalPattern::new(positions, measure).unwrap();
        let via_signs = MetricalPattern::parse_signs(&p.signs()).unwrap();
        let via_dotted =
            MetricalPattern::parse_dotted(&format!("{}|{}", p.dotted(), p.measure)).unwrap();
        ensure(via_signs == p && via_dotted == p, || format!("{p:?}"))?;
    }
    Ok("1000 patterns".into())
}

fn property_suites(rng: &mut ChaCha8Rng) -> Check {
    let parts = [
        ("compensation", compensation_identity()),
        ("arithmetic", single_resource_arithmetic(rng)),
        ("punctuation", punctuation_invariance(rng)),
        ("candidates", candidate_equivalence(rng)),
        ("round-trip", format_round_trip(rng)),
    ];
    let mut ok = Vec::new();
    for (name, r) in parts {
        match r {
            Ok(d) => ok.push(format!("{name}: {d}")),
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok(ok.join("; "))
}

#[test]
fn primary_criteria() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let as_outcome = |r: Check| match r {
        Ok(d) => Outcome::Pass(d),
        Err(e) => Outcome::Fail(e),
    };
    let results = [
        ("golden example suite", as_outcome(golden_suite())),
        ("catalog fidelity", as_outcome(catalog_fidelity())),
        ("fixed-meter corpus", fixed_corpus()),
        (
            "mixed-meter synthetic corpus",
            as_outcome(mixed_meter(&mut rng)),
        ),
        ("property suites", as_outcome(property_suites(&mut rng))),
    ];
    let mut failed = false;
    for (name, outcome) in &results {
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                failed = true;
                ("FAIL", d)
            }
            Outcome::Blocked(d) => ("BLOCKED", d),
        };
        println!("{tag:<7} {name}: {detail}");
    }
    assert!(!failed, "some acceptance criteria failed");
}

/// Runs only with the corpus available; `cargo test -- --ignored`.
#[test]
#[ignore = "needs the fixed-meter corpus in SCANSION_FIXED_CORPUS"]
fn fixed_meter_corpus() {
    match fixed_corpus() {
        Outcome::Pass(d) => println!("PASS {d}"),
        Outcome::Fail(d) => panic!("{d}"),
        Outcome::Blocked(d) => panic!("{d}"),
    }
}
