//! Seeded random braid words and the cross-checks run by `alexsum verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    apply_rewrite, component_count, conjugate, markov_stabilize, rewrite_sites, BraidLetter,
    BraidWord, CrossingSign, Rewrite,
};
use crate::hecke::{alexander_via_trace, check_hecke_relations};
use crate::laurent::to_conway;
use crate::oracle::cross_validate;
use crate::state_sum::{evaluate_dp, state_sum, EnumBounds};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_strands: usize,
    pub max_letters: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            samples: 200,
            max_strands: 5,
            max_letters: 8,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut impl Rng, strands: usize) -> BraidLetter {
    let index = rng.random_range(1..strands);
    if rng.random_bool(0.5) {
        BraidLetter::positive(index)
    } else {
        BraidLetter::negative(index)
    }
}

/// Words on `2..=max_strands` strands with `0..=max_letters` letters.
pub fn random_words(cfg: &SuiteConfig) -> Vec<BraidWord> {
    let mut rng = rng(cfg.seed);
    (0..cfg.samples)
        .map(|_| {
            let n = rng.random_range(2..=cfg.max_strands.max(2));
            let len = rng.random_range(0..=cfg.max_letters);
            let letters = (0..len).map(|_| random_letter(&mut rng, n)).collect();
            BraidWord::new(n, letters).expect("letters drawn in range")
        })
        .collect()
}

/// One braid-relation rewrite, chosen uniformly among the applicable
/// commutations, braid moves, cancellations, and one random insertion.
pub fn random_rewrite(w: &BraidWord, rng: &mut impl Rng) -> BraidWord {
    let mut options = rewrite_sites(w);
    options.push(Rewrite::Insert {
        at: rng.random_range(0..=w.len()),
        letter: random_letter(rng, w.strands().max(2)),
    });
    let pick = options[rng.random_range(0..options.len())];
    match (pick, w.strands()) {
        // no generators on one strand
        (Rewrite::Insert { .. }, 1) => w.clone(),
        _ => apply_rewrite(w, pick).expect("site was listed as applicable"),
    }
}

/// Words with the same closure as `w`: a rewrite, a conjugation, and a
/// stabilization of each sign.
pub fn markov_variants(w: &BraidWord, rng: &mut impl Rng) -> Vec<(&'static str, BraidWord)> {
    let mut out = vec![("rewrite", random_rewrite(w, rng))];
    if w.strands() >= 2 {
        let g = random_letter(rng, w.strands());
        out.push(("conjugate", conjugate(w, g).expect("letter in range")));
    }
    out.push(("stabilize+", markov_stabilize(w, CrossingSign::Positive)));
    out.push(("stabilize-", markov_stabilize(w, CrossingSign::Negative)));
    out
}

/// Unknots, trefoil, figure-eight, Hopf link, the (2,5) torus knot, and a
/// split link.
pub fn named_corpus() -> Vec<(&'static str, BraidWord)> {
    let w =
        |s: &str, n: usize| crate::braid::parse_braid_word(s, Some(n)).expect("valid corpus word");
    vec![
        ("unknot (B1 identity)", w("", 1)),
        ("unknot (sigma_1)", w("1", 2)),
        ("unknot (stabilized)", w("1 -2 3", 4)),
        ("trefoil", w("1 1 1", 2)),
        ("figure-eight", w("-2 1 -2 1", 3)),
        ("Hopf link", w("1 1", 2)),
        ("torus knot (2,5)", w("1 1 1 1 1", 2)),
        ("two-component unlink", w("", 2)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub suite: SuiteConfig,
    pub hecke_max_n: usize,
    pub bounds: EnumBounds,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            suite: SuiteConfig::default(),
            hecke_max_n: 6,
            bounds: EnumBounds::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckOutcome::ok)
    }
}

/// Conway exponents all have the parity of `components - 1`.
pub fn conway_parity_holds(w: &BraidWord, value: &crate::laurent::LaurentPoly) -> Result<bool> {
    let parity = (component_count(w) as u32 + 1) % 2;
    Ok(to_conway(value)?.terms().all(|(e, _)| e % 2 == parity))
}

pub fn run_verification(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();

    let relations = check_hecke_relations(opts.hecke_max_n)?;
    let mut hecke = CheckOutcome::new("hecke relations");
    for c in &relations.checks {
        hecke.record(c.holds, || {
            format!(
                "{} on hook (n={}, leg={})",
                c.relation,
                c.shape.n(),
                c.shape.leg()
            )
        });
    }
    report.checks.push(hecke);

    let words = random_words(&opts.suite);
    let mut rng = rng(opts.suite.seed.wrapping_add(1));
    let mut agreement = CheckOutcome::new("method agreement");
    let mut markov = CheckOutcome::new("markov invariance");
    let mut mirror = CheckOutcome::new("mirror symmetry");
    let mut parity = CheckOutcome::new("conway parity");
    let mut split = CheckOutcome::new("split-link vanishing");
    let mut oracle = CheckOutcome::new("burau oracle");

    for w in &words {
        let dp = evaluate_dp(w)?;
        let trace = alexander_via_trace(w)?;
        let exhaustive = if opts.bounds.check(w).is_ok() {
            Some(state_sum(w, &opts.bounds)?)
        } else {
            None
        };
        agreement.record(
            dp == trace && exhaustive.as_ref().is_none_or(|s| *s == dp),
            || format!("`{w}` on {} strands", w.strands()),
        );
        for (move_name, variant) in markov_variants(w, &mut rng) {
            markov.record(evaluate_dp(&variant)? == dp, || {
                format!("{move_name}: `{w}` -> `{variant}`")
            });
        }
        mirror.record(evaluate_dp(&w.mirror())? == dp.bar(), || format!("`{w}`"));
        parity.record(
            to_conway(&dp).is_ok() && conway_parity_holds(w, &dp)?,
            || format!("`{w}` gives {dp}"),
        );
        let wider = w.with_strands(w.strands() + 1)?;
        split.record(evaluate_dp(&wider)?.is_zero(), || format!("`{w}`"));
        oracle.record(cross_validate(w)?, || {
            format!("`{w}` on {} strands", w.strands())
        });
    }
    for (name, w) in named_corpus().into_iter().filter(|(_, w)| w.strands() >= 2) {
        oracle.record(cross_validate(&w)?, || name.to_string());
    }
    report
        .checks
        .extend([agreement, markov, mirror, parity, split, oracle]);
    Ok(report)
}
