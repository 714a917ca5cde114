//! Brute-force checks and exhaustive enumeration by genus.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{arf_closure, Analysis, Flags, TriState, Violation};
use crate::semigroup::NumericalSemigroup;

/// A triple `x >= y >= z` of members with `x + y - z` outside `h`.
///
/// Only members below the conductor `c` are scanned: `x + y - z >= x`, so
/// any `x >= c` lands in `h` automatically.
pub fn arf_pattern_witness(h: &NumericalSemigroup) -> Option<(i64, i64, i64)> {
    let small: Vec<i64> = h.members_below(h.conductor()).collect();
    for (i, &x) in small.iter().enumerate() {
        for (j, &y) in small[..=i].iter().enumerate() {
            for &z in &small[..=j] {
                if !h.contains(x + y - z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Arf via the additive pattern: `x + y - z ∈ H` whenever `x >= y >= z`.
pub fn arf_by_pattern(h: &NumericalSemigroup) -> bool {
    arf_pattern_witness(h).is_none()
}

/// Children in the semigroup tree: remove one minimal generator above the
/// Frobenius number.
pub fn children(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    h.generators()
        .iter()
        .filter_map(|&g| h.remove_generator(g))
        .collect()
}

/// Every numerical semigroup of genus at most `g_max`, each exactly once,
/// level by level from ℕ.
pub fn enumerate_by_genus(g_max: usize) -> Vec<NumericalSemigroup> {
    let mut out = vec![NumericalSemigroup::natural()];
    let mut level = out.clone();
    for _ in 0..g_max {
        level = level.iter().flat_map(children).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// One line of survey output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub gens: Vec<i64>,
    pub genus: usize,
    pub flags: Flags,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GenusRow {
    pub semigroups: usize,
    pub arf: usize,
    pub almost_symmetric: usize,
    pub ggl_true: usize,
    pub ggl_unknown: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyOptions {
    pub max_genus: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Run the per-semigroup consistency audit.
    pub audit: bool,
    /// Check Arf-closure minimality and monotonicity against the enumerated
    /// Arf semigroups up to this genus.
    pub closure_max_genus: Option<usize>,
}

impl SurveyOptions {
    pub fn new(max_genus: usize) -> Self {
        SurveyOptions {
            max_genus,
            jobs: 0,
            audit: true,
            closure_max_genus: Some(max_genus.min(10)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SurveyOutcome {
    pub records: Vec<SurveyRecord>,
    pub by_genus: BTreeMap<usize, GenusRow>,
    /// Corpus-wide failures (closure minimality and monotonicity).
    pub corpus_violations: Vec<Violation>,
}

impl SurveyOutcome {
    pub fn total_violations(&self) -> usize {
        self.records.iter().map(|r| r.violations.len()).sum::<usize>() + self.corpus_violations.len()
    }

    pub fn passed(&self) -> bool {
        self.total_violations() == 0
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        w.flush()
    }

    pub fn summary_table(&self) -> String {
        let mut s = format!(
            "{:>5} {:>10} {:>8} {:>8} {:>8} {:>12} {:>10}\n",
            "genus", "semigroups", "arf", "almost", "ggl", "ggl_unknown", "violations"
        );
        let mut total = GenusRow::default();
        for (g, row) in &self.by_genus {
            s.push_str(&format!(
                "{:>5} {:>10} {:>8} {:>8} {:>8} {:>12} {:>10}\n",
                g, row.semigroups, row.arf, row.almost_symmetric, row.ggl_true, row.ggl_unknown, row.violations
            ));
            total.semigroups += row.semigroups;
            total.arf += row.arf;
            total.almost_symmetric += row.almost_symmetric;
            total.ggl_true += row.ggl_true;
            total.ggl_unknown += row.ggl_unknown;
            total.violations += row.violations;
        }
        s.push_str(&format!(
            "{:>5} {:>10} {:>8} {:>8} {:>8} {:>12} {:>10}\n",
            "all",
            total.semigroups,
            total.arf,
            total.almost_symmetric,
            total.ggl_true,
            total.ggl_unknown,
            total.violations
        ));
        s.push_str(&format!("corpus violations: {}\n", self.corpus_violations.len()));
        s
    }
}

fn survey_record(h: &NumericalSemigroup, audit: bool) -> SurveyRecord {
    let a = Analysis::new(h);
    SurveyRecord {
        gens: h.generators().to_vec(),
        genus: h.genus(),
        flags: a.flags(),
        violations: if audit { a.audit() } else { Vec::new() },
    }
}

/// Classifies and audits every semigroup up to `opts.max_genus`. Records come
/// back in enumeration order regardless of thread count.
pub fn survey(opts: &SurveyOptions) -> SurveyOutcome {
    let corpus = enumerate_by_genus(opts.max_genus);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let records: Vec<SurveyRecord> =
        pool.install(|| corpus.par_iter().map(|h| survey_record(h, opts.audit)).collect());

    let mut by_genus: BTreeMap<usize, GenusRow> = (0..=opts.max_genus).map(|g| (g, GenusRow::default())).collect();
    for r in &records {
        let row = by_genus.entry(r.genus).or_default();
        row.semigroups += 1;
        row.arf += r.flags.arf as usize;
        row.almost_symmetric += r.flags.almost_symmetric as usize;
        row.ggl_true += (r.flags.ggl == TriState::True) as usize;
        row.ggl_unknown += (r.flags.ggl == TriState::Unknown) as usize;
        row.violations += r.violations.len();
    }

    let corpus_violations = match opts.closure_max_genus {
        Some(g) => pool.install(|| closure_corpus_check(&corpus, g)),
        None => Vec::new(),
    };

    SurveyOutcome {
        records,
        by_genus,
        corpus_violations,
    }
}

/// Arf-closure minimality and monotonicity over the semigroups of `corpus`
/// with genus at most `g`. Every Arf oversemigroup of `h` has genus at most
/// that of `h`, so the corpus holds all of them.
pub fn closure_corpus_check(corpus: &[NumericalSemigroup], g: usize) -> Vec<Violation> {
    let small: Vec<&NumericalSemigroup> = corpus.iter().filter(|h| h.genus() <= g).collect();
    let arf: Vec<&NumericalSemigroup> = small.iter().copied().filter(|h| arf_by_pattern(h)).collect();
    let closures: Vec<NumericalSemigroup> = small.par_iter().map(|h| arf_closure(h)).collect();

    let mut out: Vec<Violation> = small
        .par_iter()
        .zip(closures.par_iter())
        .enumerate()
        .flat_map_iter(|(i, (h, c))| {
            let mut v = Vec::new();
            // Minimality: the closure is inside every Arf oversemigroup.
            for t in arf.iter().filter(|t| h.is_subset_of(t)) {
                if !c.is_subset_of(t) {
                    v.push(Violation {
                        check: "arf_closure_minimal".into(),
                        detail: format!("closure {c} of {h} not inside Arf {t}"),
                        witnesses: vec![],
                    });
                }
            }
            if !arf.contains(&c) {
                v.push(Violation {
                    check: "arf_closure_in_corpus".into(),
                    detail: format!("closure {c} of {h} is not an enumerated Arf semigroup"),
                    witnesses: vec![],
                });
            }
            // Monotonicity against every oversemigroup in the corpus.
            for (j, k) in small.iter().enumerate() {
                if i != j && h.is_subset_of(k) && !c.is_subset_of(&closures[j]) {
                    v.push(Violation {
                        check: "arf_closure_monotone".into(),
                        detail: format!("{h} ⊆ {k} but closures {c}, {}", closures[j]),
                        witnesses: vec![],
                    });
                }
            }
            v
        })
        .collect();
    out.sort_by(|a, b| a.detail.cmp(&b.detail));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn pattern() {
        assert!(arf_by_pattern(&sg(&[4, 7, 9, 10])));
        assert_eq!(arf_pattern_witness(&sg(&[3, 7, 11])), Some((7, 7, 6)));
        assert!(arf_by_pattern(&NumericalSemigroup::natural()));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_by_genus(0), vec![NumericalSemigroup::natural()]);
        let two: HashSet<NumericalSemigroup> = enumerate_by_genus(2).into_iter().collect();
        let expected: HashSet<NumericalSemigroup> = [
            NumericalSemigroup::natural(),
            sg(&[2, 3]),
            sg(&[2, 5]),
            sg(&[3, 4, 5]),
        ]
        .into_iter()
        .collect();
        assert_eq!(two, expected);
    }

    /// Counts semigroups of genus `g` by filtering gap sets inside `[1, 2g)`.
    fn count_by_gap_sets(g: usize) -> usize {
        if g == 0 {
            return 1;
        }
        let width = 2 * g - 1;
        let full: u64 = (1 << width) - 1;
        (0u64..=full)
            .filter(|gaps| gaps.count_ones() as usize == g)
            .filter(|&gaps| {
                // bit i-1 set means i is a gap; members are everything else.
                let members = !gaps & full;
                (1..=width).all(|a| members & (1 << (a - 1)) == 0 || ((members << a) & gaps) == 0)
            })
            .count()
    }

    #[test]
    fn genus_counts_match_gap_set_filtering() {
        let corpus = enumerate_by_genus(10);
        let mut counts = vec![0usize; 11];
        for h in &corpus {
            counts[h.genus()] += 1;
        }
        for (g, &c) in counts.iter().enumerate() {
            assert_eq!(c, count_by_gap_sets(g), "genus {g}");
        }
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let corpus = enumerate_by_genus(9);
        let set: HashSet<String> = corpus.iter().map(|h| h.to_string()).collect();
        assert_eq!(set.len(), corpus.len());
        for h in &corpus {
            assert_eq!(&NumericalSemigroup::from_generators(h.generators()).unwrap(), h);
        }
    }

    #[test]
    fn survey_small() {
        let out = survey(&SurveyOptions::new(0));
        assert_eq!(out.records.len(), 1);
        let f = out.records[0].flags;
        assert!(f.symmetric && f.almost_symmetric && f.max_embdim && f.arf);
        assert_eq!(f.ggl, TriState::True);

        let out = survey(&SurveyOptions::new(5));
        assert!(out.passed(), "{}", out.summary_table());
    }

    #[test]
    fn survey_is_deterministic_across_thread_counts() {
        let mut a = SurveyOptions::new(7);
        a.jobs = 1;
        let mut b = a.clone();
        b.jobs = 4;
        let (ra, rb) = (survey(&a), survey(&b));
        assert_eq!(ra.records, rb.records);
        assert_eq!(ra.by_genus, rb.by_genus);
        let mut buf_a = Vec::new();
        let mut buf_b = Vec::new();
        ra.write_jsonl(&mut buf_a).unwrap();
        rb.write_jsonl(&mut buf_b).unwrap();
        assert_eq!(buf_a, buf_b);
    }
}
