//! Acceptance checks AC1-AC8. Prints one line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use alexsum_core::braid::{component_count, parse_braid_word, BraidWord};
use alexsum_core::hecke::{alexander_via_trace, check_hecke_relations};
use alexsum_core::hook::{
    enumerate_sign_sequences, residue_sequence, signs_from_tableau, tableau_from_signs, HookShape,
    StandardTableau,
};
use alexsum_core::laurent::{quantum_integer, to_conway, ConwayPoly, LaurentPoly, RationalFn};
use alexsum_core::oracle::cross_validate;
use alexsum_core::state_sum::{evaluate_dp, state_sum, weighted_states, EnumBounds};
use alexsum_core::verify::{conway_parity_holds, markov_variants, random_words, rng, SuiteConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn word(s: &str, n: usize) -> BraidWord {
    parse_braid_word(s, Some(n)).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took < limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn ac1() -> Outcome {
    let w = word("-2 1 -2 1", 3);
    let expected = LaurentPoly::from_terms([(2, -1), (0, 3), (-2, -1)]);
    let start = Instant::now();
    let exhaustive = state_sum(&w, &EnumBounds::default()).map_err(|e| e.to_string())?;
    let dp = evaluate_dp(&w).map_err(|e| e.to_string())?;
    let trace = alexander_via_trace(&w).map_err(|e| e.to_string())?;
    let conway = to_conway(&dp).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    for (name, got) in [("state_sum", &exhaustive), ("dp", &dp), ("trace", &trace)] {
        if *got != expected {
            return Err(format!("{name} gave {got}"));
        }
    }
    if conway != ConwayPoly::from_terms([(0, 1), (2, -1)]) {
        return Err(format!("conway form {conway}"));
    }
    within(start, Duration::from_millis(50))?;
    Ok(format!("{expected} = {conway} in {took:?}"))
}

fn ac2() -> Outcome {
    let w = word("-2 1 -2 1", 3);
    let states = weighted_states(&w, &EnumBounds::default()).map_err(|e| e.to_string())?;
    let q2sq = quantum_integer(2).pow(2);
    let frac = |num: LaurentPoly| RationalFn::new(num, q2sq.clone()).unwrap();
    let one = RationalFn::one();
    let mut expected = vec![
        (one.clone(), 1),
        (frac(LaurentPoly::v_pow(6)), -1),
        (frac(LaurentPoly::v_pow(-6)), -1),
        (one, 1),
        (frac(-quantum_integer(3)), -1),
        (frac(-quantum_integer(3)), -1),
    ];
    if states.len() != 6 {
        return Err(format!("{} states", states.len()));
    }
    for s in &states {
        let sp = s.state.signs.sign_product();
        if sp != s.sign_product {
            return Err(format!(
                "stored sign product {} for {}",
                s.sign_product, s.state.signs
            ));
        }
        match expected
            .iter()
            .position(|(wt, p)| *wt == s.weight && *p == sp)
        {
            Some(i) => {
                expected.remove(i);
            }
            None => {
                return Err(format!(
                    "unexpected state {} {} with weight {} and <e> = {sp}",
                    s.state.resolution, s.state.signs, s.weight
                ))
            }
        }
    }
    Ok("6 states, weights and sign products match".to_string())
}

fn ac3() -> Outcome {
    let z = |terms: &[(u32, i64)]| ConwayPoly::from_terms(terms.iter().copied());
    let corpus = [
        ("unknot (B1 identity)", word("", 1), z(&[(0, 1)])),
        ("unknot (sigma_1)", word("1", 2), z(&[(0, 1)])),
        ("unknot (stabilized)", word("1 -2 3", 4), z(&[(0, 1)])),
        ("trefoil", word("1 1 1", 2), z(&[(0, 1), (2, 1)])),
        ("Hopf link", word("1 1", 2), z(&[(1, 1)])),
        (
            "sigma_1^5",
            word("1 1 1 1 1", 2),
            z(&[(0, 1), (2, 3), (4, 1)]),
        ),
        ("B2 identity", word("", 2), z(&[])),
    ];
    let start = Instant::now();
    for (name, w, expected) in &corpus {
        let got =
            to_conway(&evaluate_dp(w).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if got != *expected {
            return Err(format!("{name}: got {got}, expected {expected}"));
        }
        if w.strands() >= 2 && !cross_validate(w).map_err(|e| e.to_string())? {
            return Err(format!("{name}: Burau oracle disagrees"));
        }
    }
    let took = start.elapsed();
    within(start, Duration::from_secs(1))?;
    Ok(format!("{} presentations in {took:?}", corpus.len()))
}

fn ac4() -> Outcome {
    let words = random_words(&SuiteConfig::default());
    let bounds = EnumBounds::default();
    let start = Instant::now();
    for w in &words {
        let exhaustive = state_sum(w, &bounds).map_err(|e| e.to_string())?;
        let dp = evaluate_dp(w).map_err(|e| e.to_string())?;
        let trace = alexander_via_trace(w).map_err(|e| e.to_string())?;
        if exhaustive != dp || dp != trace {
            return Err(format!(
                "`{w}` on {} strands: {exhaustive} / {dp} / {trace}",
                w.strands()
            ));
        }
    }
    let took = start.elapsed();
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} words in {took:?}", words.len()))
}

fn ac5() -> Outcome {
    let cfg = SuiteConfig {
        samples: 100,
        seed: 11,
        ..SuiteConfig::default()
    };
    let words = random_words(&cfg);
    let mut g = rng(cfg.seed.wrapping_add(1));
    let start = Instant::now();
    let mut variants = 0;
    for w in &words {
        let base = evaluate_dp(w).map_err(|e| e.to_string())?;
        let moves = markov_variants(w, &mut g);
        let names: Vec<_> = moves.iter().map(|(n, _)| *n).collect();
        for required in ["rewrite", "conjugate", "stabilize+", "stabilize-"] {
            if !names.contains(&required) {
                return Err(format!("`{w}`: missing {required}"));
            }
        }
        for (name, v) in moves {
            variants += 1;
            if evaluate_dp(&v).map_err(|e| e.to_string())? != base {
                return Err(format!("{name}: `{w}` -> `{v}` changed the value"));
            }
        }
    }
    let took = start.elapsed();
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} words, {variants} variants in {took:?}",
        words.len()
    ))
}

fn ac6() -> Outcome {
    let report = check_hecke_relations(6).map_err(|e| e.to_string())?;
    if let Some(f) = report.failures().next() {
        return Err(format!(
            "{} fails on (n={}, leg={})",
            f.relation,
            f.shape.n(),
            f.shape.leg()
        ));
    }
    Ok(format!(
        "{} relation checks for n <= 6",
        report.checks.len()
    ))
}

/// Hook tableaux built directly: `leg` entries from `2..=n` go down the column.
fn hook_tableaux(n: usize, leg: usize) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        if mask.count_ones() as usize != leg {
            continue;
        }
        let mut rows = vec![vec![1]];
        for k in 2..=n {
            if mask & (1 << (k - 2)) != 0 {
                rows.push(vec![k]);
            } else {
                rows[0].push(k);
            }
        }
        out.push(StandardTableau::new(rows).unwrap());
    }
    out
}

fn ac7() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for leg in 0..n {
            let seqs = enumerate_sign_sequences(n, leg).map_err(|e| e.to_string())?;
            let tableaux = hook_tableaux(n, leg);
            if seqs.len()
                != HookShape::new(n, leg)
                    .map_err(|e| e.to_string())?
                    .dimension()
                || tableaux.len() != seqs.len()
            {
                return Err(format!("count mismatch at n={n}, leg={leg}"));
            }
            for t in &tableaux {
                let eps = signs_from_tableau(t).map_err(|e| e.to_string())?;
                if !seqs.contains(&eps) {
                    return Err(format!("{eps} not a label for leg {leg}"));
                }
                if tableau_from_signs(eps).map_err(|e| e.to_string())? != *t {
                    return Err(format!("round trip fails for {eps}"));
                }
                if residue_sequence(eps).map_err(|e| e.to_string())? != t.residues() {
                    return Err(format!("residues disagree for {eps}"));
                }
                count += 1;
            }
        }
    }
    let fig = residue_sequence("++-+".parse().unwrap()).map_err(|e| e.to_string())?;
    if fig != vec![0, 1, -1, 2] {
        return Err(format!("(+,+,-,+) gave residues {fig:?}"));
    }
    Ok(format!(
        "{count} tableaux for n <= 8; (+,+,-,+) -> (0,1,-1,2)"
    ))
}

fn ac8() -> Outcome {
    let mut words = random_words(&SuiteConfig::default());
    words.extend(random_words(&SuiteConfig {
        samples: 100,
        seed: 11,
        ..SuiteConfig::default()
    }));
    words.extend(
        alexsum_core::verify::named_corpus()
            .into_iter()
            .map(|(_, w)| w),
    );
    for w in &words {
        let value = evaluate_dp(w).map_err(|e| e.to_string())?;
        if let Err(e) = to_conway(&value) {
            return Err(format!("`{w}`: {e}"));
        }
        if !conway_parity_holds(w, &value).map_err(|e| e.to_string())? {
            return Err(format!(
                "`{w}` ({} components) gives {value}",
                component_count(w)
            ));
        }
    }
    Ok(format!("{} suite words", words.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "figure-eight exactness", ac1),
        ("AC2", "state table reproduction", ac2),
        ("AC3", "named corpus and Burau oracle", ac3),
        ("AC4", "method agreement on 200 random words", ac4),
        ("AC5", "Markov invariance on 100 random words", ac5),
        ("AC6", "Hecke relations for n <= 6", ac6),
        ("AC7", "tableau/sign bijection and residues", ac7),
        ("AC8", "Conway polynomiality and parity", ac8),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 8/8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
