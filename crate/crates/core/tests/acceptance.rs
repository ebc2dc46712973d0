//! Acceptance suite: one pass/fail line per criterion, with time bounds.
//! Exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coprod::cli::{parse_element, round_trips};
use coprod::monoid::{enumerate_words, enumerate_words_up_to, left_factorizations, project};
use coprod::order::compare;
use coprod::verify::random::{random_element, random_word, Mode};
use coprod::verify::{negative_control, product_support_exhaustive, replay, run, CheckReport, Lemma, TrialConfig};
use coprod::{AlgebraElement, Alphabet, FieldSpec, Letter, Word};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn campaign_ok(r: &CheckReport) -> Result<(), String> {
    ensure(r.passed(), || {
        format!("{}: first failure {:?}", r.summary(), r.failures.first())
    })
}

fn alpha(nx: usize, ny: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::standard(nx, ny))
}

fn names(a: &Alphabet, list: &[&str]) -> Word {
    Word::from_names(a, list).unwrap()
}

/// 1. The cancelling product, built term by term without the parser.
fn example_identity() -> Verdict {
    let q = FieldSpec::Rationals;
    let a = alpha(1, 2);
    let el = |terms: &[(&[&str], i64)]| {
        AlgebraElement::from_terms(a.clone(), q, terms.iter().map(|(w, c)| (names(&a, w), q.from_i64(*c)))).unwrap()
    };
    let f = el(&[(&["x1", "y1"], 1), (&["x1", "y2"], 1)]);
    let g = el(&[(&["y1", "x1"], 1), (&["y2", "x1"], -1)]);
    let expected = el(&[(&["x1", "y1", "y1", "x1"], 1), (&["x1", "y2", "y2", "x1"], -1)]);
    let start = Instant::now();
    let product = f.multiply(&g).unwrap();
    let elapsed = start.elapsed();
    ensure(product == expected, || format!("product is {product}"))?;
    ensure(product.coefficient(&names(&a, &["x1", "y1", "y2", "x1"])).is_zero(), || {
        "x1*y1*y2*x1 survived".into()
    })?;
    ensure(product.to_string() == "x1*y1^2*x1 - x1*y2^2*x1", || product.to_string())?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("x1*y1*y2*x1 cancels, product in {elapsed:?}"))
}

fn random_letters_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let a = Alphabet::standard(2, 2);
    let len = rng.gen_range(0..=max_len);
    random_word(&a, len, rng).unwrap()
}

/// 2. Totality, antisymmetry, transitivity and strict compatibility.
fn order_soundness() -> Verdict {
    let a = Alphabet::standard(2, 2);
    let words = enumerate_words_up_to(&a, 3);
    for u in &words {
        for v in &words {
            let o = compare(u, v);
            ensure(o.is_eq() == (u == v), || format!("{u} vs {v}: {o:?}"))?;
            ensure(o.reverse() == compare(v, u), || format!("{u} vs {v} not antisymmetric"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100_000 {
        let (x, y, z) = (
            words[rng.gen_range(0..words.len())].clone(),
            words[rng.gen_range(0..words.len())].clone(),
            words[rng.gen_range(0..words.len())].clone(),
        );
        if compare(&x, &y).is_lt() && compare(&y, &z).is_lt() {
            ensure(compare(&x, &z).is_lt(), || format!("{x} < {y} < {z} but not {x} < {z}"))?;
        }
    }
    let mut checked = 0;
    while checked < 10_000 {
        let (x, y, z) = (
            random_letters_word(&mut rng, 4),
            random_letters_word(&mut rng, 4),
            random_letters_word(&mut rng, 4),
        );
        let (x, y) = match compare(&x, &y) {
            std::cmp::Ordering::Less => (x, y),
            std::cmp::Ordering::Greater => (y, x),
            std::cmp::Ordering::Equal => continue,
        };
        ensure(compare(&x.concat(&z), &y.concat(&z)).is_lt(), || format!("right multiplication by {z}: {x} < {y}"))?;
        ensure(compare(&z.concat(&x), &z.concat(&y)).is_lt(), || format!("left multiplication by {z}: {x} < {y}"))?;
        checked += 1;
    }
    Ok(format!("{} pairs exhaustive, 10^5 triples, 10^4 compatibility triples", words.len().pow(2)))
}

/// 3. Distinct words have distinct projection tuples.
fn projection_oracle() -> Verdict {
    let a = Alphabet::standard(2, 2);
    let words = enumerate_words_up_to(&a, 4);
    let indices = a.projection_indices();
    let tuples: HashSet<Vec<_>> = words
        .iter()
        .map(|w| indices.iter().map(|i| project(w, i.kind).unwrap()).collect())
        .collect();
    ensure(tuples.len() == words.len(), || {
        format!("{} words, {} distinct tuples", words.len(), tuples.len())
    })?;
    // Independent count: canonical forms of all letter strings.
    let letters: Vec<Letter> = a.letters().collect();
    let mut canonical = HashSet::new();
    for len in 0..=4u32 {
        for code in 0..4usize.pow(len) {
            let mut c = code;
            let w = Word::from_letters((0..len).map(|_| {
                let l = letters[c % 4];
                c /= 4;
                l
            }));
            canonical.insert(w);
        }
    }
    ensure(canonical.len() == words.len(), || {
        format!("{} canonical strings vs {} enumerated words", canonical.len(), words.len())
    })?;
    Ok(format!("{} words, all projection tuples distinct", words.len()))
}

/// 4. Left factorizations against all products of enumerated words.
fn factorization_oracle() -> Verdict {
    let a = Alphabet::standard(2, 2);
    let strata: Vec<Vec<Word>> = (0..=5).map(|n| enumerate_words(&a, n)).collect();
    let mut brute: HashMap<(Word, usize), BTreeSet<(Word, Word)>> = HashMap::new();
    for total in 0..=5 {
        for n in 0..=total {
            for v in &strata[n] {
                for w in &strata[total - n] {
                    brute.entry((v.concat(w), n)).or_default().insert((v.clone(), w.clone()));
                }
            }
        }
    }
    let mut count = 0;
    for u in strata.iter().flatten() {
        for n in 0..=u.len() {
            let got = left_factorizations(u, n).unwrap();
            let set: BTreeSet<_> = got.iter().cloned().collect();
            ensure(set.len() == got.len(), || format!("duplicates for {u} at {n}"))?;
            let expected = brute.remove(&(u.clone(), n)).unwrap_or_default();
            ensure(set == expected, || format!("mismatch for {u} at {n}"))?;
            count += 1;
        }
    }
    ensure(brute.is_empty(), || "brute force produced unmatched words".into())?;
    Ok(format!("{count} (u, n) pairs, u of length <= 5"))
}

/// 5. Degree additivity and leading multiplicativity.
fn degree_additivity() -> Verdict {
    let mut total = 0;
    for field in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
        let cfg = TrialConfig {
            field,
            trials: 10_000,
            max_degree: 3,
            seed: 5,
            ..Default::default()
        };
        let r = run(Lemma::DegreeAdditivity, &cfg).map_err(|e| e.to_string())?;
        campaign_ok(&r)?;
        ensure(r.not_applicable == 0, || r.summary())?;
        total += r.passes;
    }
    Ok(format!("{total} random pairs over q and gf:3"))
}

/// 6. Factorization statements exhaustively, product support randomized and
/// exhaustively over GF(2).
fn lemma_suites() -> Verdict {
    let cfg = TrialConfig {
        max_degree: 5,
        ..Default::default()
    };
    let f = run(Lemma::Factorization, &cfg).map_err(|e| e.to_string())?;
    campaign_ok(&f)?;
    let mut random_checked = 0;
    for (field, seed) in [(FieldSpec::Rationals, 6), (FieldSpec::Prime(2), 7), (FieldSpec::Prime(3), 8)] {
        let cfg = TrialConfig {
            field,
            trials: 4_000,
            max_degree: 3,
            seed,
            ..Default::default()
        };
        let r = run(Lemma::ProductSupport, &cfg).map_err(|e| e.to_string())?;
        campaign_ok(&r)?;
        ensure(r.not_applicable == 0, || format!("selector missed hypotheses: {}", r.summary()))?;
        random_checked += r.passes;
    }
    ensure(random_checked >= 10_000, || format!("only {random_checked} product-support trials"))?;
    let e = product_support_exhaustive().map_err(|e| e.to_string())?;
    campaign_ok(&e)?;
    Ok(format!(
        "factorization {} instances; product support {random_checked} random, {} exhaustive ({} applicable)",
        f.passes, e.trials, e.passes
    ))
}

/// 7. The homogeneous commutant of a non-pure homogeneous element in its
/// own degree is the line through it.
fn commutant_proportionality() -> Verdict {
    let mut total = 0;
    for (field, seed) in [(FieldSpec::Rationals, 9), (FieldSpec::Prime(3), 10)] {
        let cfg = TrialConfig {
            field,
            trials: 100,
            max_degree: 4,
            seed,
            ..Default::default()
        };
        let r = run(Lemma::CommutantProportionality, &cfg).map_err(|e| e.to_string())?;
        campaign_ok(&r)?;
        ensure(r.passes == 100, || r.summary())?;
        total += r.passes;
    }
    Ok(format!("{total} elements of degree <= 4"))
}

/// 8. Centralizers of random elements up to degree 6.
fn commutativity_campaign() -> Verdict {
    let mut total = 0;
    let mut pure = 0;
    for (i, (nx, ny)) in [(1, 1), (1, 2), (2, 1), (2, 2)].into_iter().enumerate() {
        for (j, field) in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals].into_iter().enumerate() {
            let cfg = TrialConfig {
                nx,
                ny,
                field,
                trials: 5,
                max_degree: 6,
                seed: (10 * i + j) as u64,
                ..Default::default()
            };
            let r = run(Lemma::Commutativity, &cfg).map_err(|e| e.to_string())?;
            campaign_ok(&r)?;
            ensure(r.passes == 5, || r.summary())?;
            total += r.passes;
            // Trial 4 of each configuration draws a pure element.
            pure += 1;
        }
    }
    ensure(total >= 50, || format!("only {total} elements"))?;
    Ok(format!("{total} elements ({pure} pure), N = 6"))
}

/// 9. Every checker rejects corrupted evidence, the witness replays, and the
/// CLI exits with status 1.
fn negative_controls() -> Verdict {
    for lemma in Lemma::ALL {
        let r = negative_control(lemma).map_err(|e| e.to_string())?;
        ensure(!r.passed(), || format!("{lemma} control passed"))?;
        let replayed = replay(lemma, &r.failures[0].inputs).map_err(|e| e.to_string())?;
        ensure(replayed.is_fail(), || format!("{lemma} witness replayed to {replayed:?}"))?;
        let status = Command::new(env!("CARGO_BIN_EXE_coprod"))
            .args(["verify", "--lemma", lemma.name(), "--negative-control"])
            .output()
            .map_err(|e| e.to_string())?
            .status;
        ensure(status.code() == Some(1), || format!("{lemma}: CLI exit status {status}"))?;
    }
    Ok(format!("{} checkers flagged, witnesses replayed, CLI exit 1", Lemma::ALL.len()))
}

/// 10. Round trip of generated elements and byte-identical seeded output.
fn cli_round_trip() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let rings = [
        (alpha(2, 2), FieldSpec::Rationals),
        (alpha(1, 2), FieldSpec::Prime(3)),
        (alpha(2, 1), FieldSpec::Prime(7)),
        (alpha(0, 3), FieldSpec::Rationals),
    ];
    for i in 0..10_000 {
        let (a, field) = &rings[i % rings.len()];
        let degree = rng.gen_range(0..=4);
        let density = rng.gen_range(1..=6).min(enumerate_words_up_to(a, degree).len());
        let e = random_element(a, *field, degree, density, Mode::UpToDegree, &mut rng).map_err(|e| e.to_string())?;
        let e = if i % 10 == 0 { e.scale(&field.zero()) } else { e };
        ensure(round_trips(&e), || format!("round trip failed for {e}"))?;
        let reparsed = parse_element(a, *field, &e.to_string()).map_err(|e| e.to_string())?;
        ensure(reparsed.to_string() == e.to_string(), || format!("format not canonical for {e}"))?;
    }
    let invoke = || {
        Command::new(env!("CARGO_BIN_EXE_coprod"))
            .args(["--format", "structured", "--seed", "7", "verify", "--lemma", "all", "--trials", "30", "--max-degree", "3"])
            .env_remove(coprod::cli::SEED_ENV)
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (invoke()?, invoke()?);
    ensure(first.status.code() == Some(0), || format!("verify exited {}", first.status))?;
    ensure(first.stdout == second.stdout, || "structured output differs between runs".into())?;
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    ensure(json["seed"] == 7 && json["schema"] == coprod::cli::SCHEMA, || "unexpected report header".into())?;
    Ok(format!("10^4 round trips, {} identical output bytes", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Verdict); 10] = [
        ("example product identity", Duration::from_millis(1000), example_identity),
        ("order soundness", Duration::from_secs(30), order_soundness),
        ("projection tuples distinct", Duration::from_secs(30), projection_oracle),
        ("left factorizations match brute force", Duration::from_secs(120), factorization_oracle),
        ("degree additivity and leading multiplicativity", Duration::from_secs(60), degree_additivity),
        ("factorization and product-support suites", Duration::from_secs(120), lemma_suites),
        ("commutant proportionality", Duration::from_secs(120), commutant_proportionality),
        ("centralizer commutativity campaign", Duration::from_secs(300), commutativity_campaign),
        ("negative controls", Duration::from_secs(120), negative_controls),
        ("CLI round trip and determinism", Duration::from_secs(120), cli_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, bound, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed <= *bound => Ok(detail),
            Ok(detail) => Err(format!("{detail}, but exceeded the {bound:?} bound")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!("PASS criterion {:>2}: {name} [{elapsed:.2?}] {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} [{elapsed:.2?}] {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
