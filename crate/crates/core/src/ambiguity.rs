//! Ambiguity resolution: candidate readings from every synalepha,
//! diphthong and hiatus in the verse, and selection of the best one.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::catalog::Ratio;
use crate::error::ScanError;
use crate::verse::{
    PreparedVerse, Reading, ResourceKind, ResourceTag, ScanFlag, Scanner, TieBreak, VerseScansion,
};

/// A full rescan of the verse under some set of applied resources.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub scansion: VerseScansion,
    /// Dialefas, diereses and synereses applied on top of the default
    /// reading, in site order.
    pub applied: Vec<ResourceTag>,
    /// Positions of `applied` in the verse's site order.
    #[serde(skip)]
    pub site_order: Vec<usize>,
}

/// Lexicographic selection key; larger wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Score {
    pub measure_conformity: bool,
    pub coincidence_ratio: Ratio,
    /// Negated number of applied resources.
    pub resource_penalty: i64,
}

impl Candidate {
    pub fn is_default(&self) -> bool {
        self.applied.is_empty()
    }

    pub fn score(&self, targets: &BTreeSet<usize>) -> Score {
        Score {
            measure_conformity: targets.is_empty() || targets.contains(&self.scansion.measure),
            coincidence_ratio: self.scansion.matched.coincidence_ratio,
            resource_penalty: -(self.applied.len() as i64),
        }
    }
}

fn kind_rank(kind: ResourceKind) -> u8 {
    match kind {
        ResourceKind::Dialefa => 0,
        ResourceKind::Dieresis => 1,
        _ => 2,
    }
}

impl Scanner {
    /// Ambiguity sites of a verse in detection order: for each word its
    /// diphthongs and hiatuses, then the synalepha joining it to the next.
    pub(crate) fn ambiguity_sites(&self, prepared: &PreparedVerse) -> Vec<ResourceTag> {
        let mut sites = Vec::new();
        for (w, word) in prepared.words.iter().enumerate() {
            let scan = &word.scan;
            let mut internal: Vec<ResourceTag> = scan
                .diphthong_sites
                .iter()
                .map(|&n| ResourceTag {
                    kind: ResourceKind::Dieresis,
                    word: w,
                    nucleus: n,
                })
                .chain(scan.hiatus_sites.iter().map(|&(n, _)| ResourceTag {
                    kind: ResourceKind::Syneresis,
                    word: w,
                    nucleus: n,
                }))
                .collect();
            internal.sort_by_key(|t| (t.nucleus, t.kind));
            sites.extend(internal);
            if w + 1 < prepared.words.len() && self.can_synalepha(prepared, w) {
                sites.push(ResourceTag {
                    kind: ResourceKind::Dialefa,
                    word: w,
                    nucleus: scan.syllable_count,
                });
            }
        }
        sites
    }

    /// The default reading plus one candidate per combination of
    /// ambiguity sites.
    pub fn generate_candidates(&self, verse: &str) -> Result<Vec<Candidate>, ScanError> {
        let prepared = self.prepare(verse)?;
        let sites = self.ambiguity_sites(&prepared);
        Ok(site_subsets(sites.len(), self.config.max_sites)
            .into_iter()
            .map(|subset| {
                let applied: Vec<ResourceTag> = subset.iter().map(|&i| sites[i]).collect();
                let reading = Reading::from_tags(&applied);
                Candidate {
                    scansion: self.scan_reading(&prepared, &reading),
                    applied,
                    site_order: subset,
                }
            })
            .collect())
    }

    /// Picks the best candidate for the target measures (empty: any).
    pub fn resolve_ambiguity(
        &self,
        candidates: Vec<Candidate>,
        targets: &BTreeSet<usize>,
    ) -> Option<VerseScansion> {
        resolve_ambiguity(candidates, targets, self.config.tie_break)
    }

    /// Generates and resolves in one step; the result is flagged as
    /// rescanned when a non-default reading wins.
    pub fn scan_resolved(
        &self,
        verse: &str,
        targets: &BTreeSet<usize>,
    ) -> Result<VerseScansion, ScanError> {
        let candidates = self.generate_candidates(verse)?;
        Ok(self
            .resolve_ambiguity(candidates, targets)
            .expect("the default reading is always a candidate"))
    }
}

/// Compares two candidates; `Greater` means `a` is preferred.
fn preference(a: &Candidate, b: &Candidate, targets: &BTreeSet<usize>, tie: TieBreak) -> Ordering {
    let by_score = a.score(targets).cmp(&b.score(targets));
    if by_score != Ordering::Equal {
        return by_score;
    }
    let by_sites = b.site_order.cmp(&a.site_order);
    match tie {
        TieBreak::SiteOrder => by_sites,
        TieBreak::KindOrder => {
            let ranks = |c: &Candidate| {
                let mut r: Vec<u8> = c.applied.iter().map(|t| kind_rank(t.kind)).collect();
                r.sort_unstable();
                r
            };
            ranks(b).cmp(&ranks(a)).then(by_sites)
        }
    }
}

/// Returns the winning scansion, or `None` for an empty candidate list.
/// When no candidate reaches a target measure the default reading is kept.
pub fn resolve_ambiguity(
    candidates: Vec<Candidate>,
    targets: &BTreeSet<usize>,
    tie: TieBreak,
) -> Option<VerseScansion> {
    let mut best: Option<usize> = None;
    for (i, c) in candidates.iter().enumerate() {
        let replace = match best {
            None => true,
            Some(b) => preference(c, &candidates[b], targets, tie) == Ordering::Greater,
        };
        if replace {
            best = Some(i);
        }
    }
    let mut best = best?;
    if !candidates[best].score(targets).measure_conformity {
        best = candidates
            .iter()
            .position(Candidate::is_default)
            .unwrap_or(best);
    }
    candidates.into_iter().nth(best).map(|c| {
        let mut s = c.scansion;
        if !c.applied.is_empty() && !s.flags.contains(&ScanFlag::Rescanned) {
            s.flags.push(ScanFlag::Rescanned);
        }
        s
    })
}

/// Subsets of `0..n` to try, each sorted, ordered by size then
/// lexicographically. All of them when `n <= max_sites`; otherwise the
/// smallest ones, up to `2^max_sites` subsets.
pub(crate) fn site_subsets(n: usize, max_sites: usize) -> Vec<Vec<usize>> {
    let cap = 1usize << max_sites.min(20);
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &frontier {
            let from = s.last().map_or(0, |l| l + 1);
            for i in from..n {
                if out.len() >= cap {
                    return out;
                }
                let mut t = s.clone();
                t.push(i);
                out.push(t.clone());
                next.push(t);
            }
        }
        frontier = next;
    }
    out
}
