//! Randomized and exhaustive campaigns over the checkers, and negative
//! controls that feed them corrupted evidence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::IteratorRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::AlgebraElement;
use crate::centralizer::{centralizer_basis, homogeneous_commutant};
use crate::cli::{parse_element, parse_word};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::monoid::{count_words, enumerate_words, enumerate_words_up_to, left_factorizations, Alphabet, Word};
use crate::verify::config::TrialConfig;
use crate::verify::instance::{check_instance, Instance};
use crate::verify::lemmas::{product_support_on, select_left, select_right, Branch};
use crate::verify::random::{
    random_coefficient, random_element, random_in_class, random_mixed_word, random_pure_word, random_word, Mode,
};
use crate::verify::report::{CheckReport, Outcome};
use crate::verify::commutativity::{power_exponents, POWER_DEGREE_CAP};

/// The checkable statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    Factorization,
    ProductSupport,
    PrefixSuffix,
    LeadingProportionality,
    PurityProfile,
    CommutantProportionality,
    DegreeAdditivity,
    Commutativity,
}

impl Lemma {
    pub const ALL: [Lemma; 8] = [
        Lemma::Factorization,
        Lemma::ProductSupport,
        Lemma::PrefixSuffix,
        Lemma::LeadingProportionality,
        Lemma::PurityProfile,
        Lemma::CommutantProportionality,
        Lemma::DegreeAdditivity,
        Lemma::Commutativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Factorization => "factorization",
            Lemma::ProductSupport => "product-support",
            Lemma::PrefixSuffix => "prefix-suffix",
            Lemma::LeadingProportionality => "leading-proportionality",
            Lemma::PurityProfile => "purity-profile",
            Lemma::CommutantProportionality => "commutant-proportionality",
            Lemma::DegreeAdditivity => "degree-additivity",
            Lemma::Commutativity => "commutativity",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Lemma::ALL.iter().map(|l| l.name()).collect();
                Error::Config(format!("unknown lemma `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

/// Outcome of one instance, with witness inputs kept only for failures.
type Checked = (Outcome, Option<Vec<(String, String)>>);

fn check_one(instance: &Instance) -> Result<Checked> {
    let outcome = instance.check()?;
    let inputs = outcome.is_fail().then(|| instance.inputs());
    Ok((outcome, inputs))
}

fn collect(name: &str, per_trial: Vec<Result<Vec<Checked>>>) -> Result<CheckReport> {
    let mut report = CheckReport::new(name);
    for (trial, checked) in per_trial.into_iter().enumerate() {
        for (outcome, inputs) in checked? {
            report.record(trial, outcome, || inputs.unwrap_or_default());
        }
    }
    Ok(report)
}

/// Runs `cfg.trials` seeded trials in parallel; trial `t` draws from
/// `cfg.rng(t)` and yields any number of instances.
fn run_trials<F>(lemma: Lemma, cfg: &TrialConfig, generate: F) -> Result<CheckReport>
where
    F: Fn(usize, &mut ChaCha8Rng) -> Result<Vec<Instance>> + Sync,
{
    cfg.validate()?;
    let per_trial: Vec<Result<Vec<Checked>>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = cfg.rng(t);
            generate(t, &mut rng)?.iter().map(check_one).collect()
        })
        .collect();
    collect(lemma.name(), per_trial)
}

/// Runs groups of instances in parallel, one group per trial index.
fn run_groups(lemma: Lemma, groups: Vec<Vec<Instance>>) -> Result<CheckReport> {
    let per_trial = groups
        .par_iter()
        .map(|g| g.iter().map(check_one).collect())
        .collect();
    collect(lemma.name(), per_trial)
}

/// Runs the campaign for `lemma`. The factorization and purity-profile
/// campaigns are exhaustive and ignore `cfg.trials`; the purity-profile
/// search also fixes its own alphabets and field.
pub fn run(lemma: Lemma, cfg: &TrialConfig) -> Result<CheckReport> {
    let alphabet = cfg.alphabet();
    let field = cfg.field;
    let a = &alphabet;
    match lemma {
        Lemma::Factorization => {
            cfg.validate()?;
            let groups = enumerate_words_up_to(a, cfg.max_degree)
                .into_par_iter()
                .map(|u| (0..=u.len()).map(|n| Instance::factorization(&u, n)).collect())
                .collect::<Result<Vec<_>>>()?;
            run_groups(lemma, groups)
        }
        Lemma::ProductSupport => run_trials(lemma, cfg, |_, rng| {
            let d = cfg.max_degree.clamp(1, 3);
            let x = random_homogeneous(a, field, rng.gen_range(1..=d), rng)?;
            let y = random_homogeneous(a, field, rng.gen_range(1..=d), rng)?;
            let (x0, y0) = (pick(&x, rng), pick(&y, rng));
            let bx = random_branch(&x0, rng);
            let by = random_branch(&y0, rng);
            let xs = select_left(&x, &x0, bx).expect("x0 is in its class");
            let ys = select_right(&y, &y0, by).expect("y0 is in its class");
            Ok(vec![Instance::product_support(&x, &y, &xs, &ys)?])
        }),
        Lemma::PrefixSuffix => run_trials(lemma, cfg, |t, rng| {
            let d = cfg.max_degree.clamp(1, 3);
            let x = random_non_pure_homogeneous(a, field, rng.gen_range(1..=d), rng)?;
            let basis = homogeneous_commutant(&x, x.total_degree().finite().unwrap_or(0))?;
            let y = random_combination(&basis, rng)?;
            let mut out: Vec<Instance> = non_pure_support(&x)
                .map(|v0| Instance::prefix_suffix(&x, &y, v0))
                .collect();
            if t % 4 == 0 {
                // Leading terms of commuting elements commute as well. Each
                // instance re-checks commutation, so only a few start words
                // are drawn from these larger supports.
                let u = random_non_pure(a, field, 2, rng)?;
                for (p, q) in matched_powers(&u, cfg.max_degree.min(4), 8)? {
                    let (lp, lq) = (p.leading_term(), q.leading_term());
                    let starts = non_pure_support(&lp).choose_multiple(rng, HARVESTED_STARTS);
                    out.extend(starts.into_iter().map(|v0| Instance::prefix_suffix(&lp, &lq, v0)));
                }
            }
            Ok(out)
        }),
        Lemma::LeadingProportionality => run_trials(lemma, cfg, |t, rng| {
            let u = if t % 3 == 0 && a.num_commuting() > 0 {
                random_top_pure(a, field, rng.gen_range(2..=3), rng)?
            } else {
                random_non_pure(a, field, 3, rng)?
            };
            let n = cfg.max_degree;
            let gb = centralizer_basis(&u, n)?;
            let mut out = Vec::new();
            for (p, q) in matched_powers(&u, n, POWER_DEGREE_CAP)? {
                out.push(Instance::leading_proportionality(&p, &q));
                out.push(Instance::leading_proportionality(&q, &p));
            }
            let by_degree: BTreeMap<usize, &AlgebraElement> =
                gb.cumulative.iter().map(|e| (degree(e), e)).collect();
            for (i, e) in gb.cumulative.iter().enumerate() {
                for f in &gb.cumulative[i..] {
                    if let Some(g) = by_degree.get(&(degree(e) + degree(f))) {
                        out.push(Instance::leading_proportionality(&e.multiply(f)?, g));
                    }
                }
            }
            Ok(out)
        }),
        Lemma::PurityProfile => run_groups(lemma, purity_profile_groups()?),
        Lemma::CommutantProportionality => run_trials(lemma, cfg, |_, rng| {
            let d = rng.gen_range(1..=cfg.max_degree.clamp(1, 4));
            Ok(vec![Instance::commutant(&random_non_pure_homogeneous(a, field, d, rng)?)?])
        }),
        Lemma::DegreeAdditivity => run_trials(lemma, cfg, |_, rng| {
            let d = cfg.max_degree.min(3);
            let x = random_sparse(a, field, rng.gen_range(0..=d), Mode::UpToDegree, rng)?;
            let y = random_sparse(a, field, rng.gen_range(0..=d), Mode::UpToDegree, rng)?;
            Ok(vec![Instance::additivity(&x, &y)?])
        }),
        Lemma::Commutativity => run_trials(lemma, cfg, |t, rng| {
            let d = rng.gen_range(1..=cfg.max_degree.clamp(1, 3));
            let pure = a.num_commuting() > 0 && (a.num_noncommuting() == 0 || t % 5 == 4);
            let u = if pure {
                random_pure_nonscalar(a, field, d, rng)?
            } else {
                random_non_pure(a, field, d, rng)?
            };
            Ok(vec![Instance::commutativity(&u, cfg.max_degree)?])
        }),
    }
}

/// Product-support check over GF(2) with one noncommuting and two commuting
/// letters: every pair of homogeneous elements of degrees 1 and 2 and every
/// pair of support words, letting the hypothesis filter decide
/// applicability.
pub fn product_support_exhaustive() -> Result<CheckReport> {
    let alphabet = Arc::new(Alphabet::standard(1, 2));
    let field = FieldSpec::Prime(2);
    let elements: Vec<AlgebraElement> = (1..=2)
        .flat_map(|d| subsets(&enumerate_words(&alphabet, d)))
        .map(|words| AlgebraElement::from_terms(alphabet.clone(), field, words.into_iter().map(|w| (w, field.one()))))
        .collect::<Result<_>>()?;
    let per_trial: Vec<Result<Vec<Checked>>> = elements
        .par_iter()
        .map(|x| {
            let mut out = Vec::new();
            for y in &elements {
                let supp = x.multiply(y)?.support();
                for (xw, _) in x.terms() {
                    for (yw, _) in y.terms() {
                        let outcome = product_support_on(x, y, xw, yw, &supp);
                        let inputs = match outcome.is_fail() {
                            true => Some(Instance::product_support(x, y, xw, yw)?.inputs()),
                            false => None,
                        };
                        out.push((outcome, inputs));
                    }
                }
            }
            Ok(out)
        })
        .collect();
    collect("product-support-exhaustive", per_trial)
}

/// Commuting top-pure pairs over GF(2): for each non-pure `b` whose top
/// component is pure, every top-pure element of the same degree in the
/// span of its truncated centralizer.
fn purity_profile_groups() -> Result<Vec<Vec<Instance>>> {
    let field = FieldSpec::Prime(2);
    let mut candidates = Vec::new();
    for (nx, ny, d) in [(1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 1, 2)] {
        let alphabet = Arc::new(Alphabet::standard(nx, ny));
        let pure_top: Vec<Word> = enumerate_words(&alphabet, d).into_iter().filter(Word::is_pure).collect();
        let lower: Vec<Word> = enumerate_words_up_to(&alphabet, d - 1);
        for top in subsets(&pure_top) {
            for low in subsets(&lower).into_iter().chain([Vec::new()]) {
                if low.iter().all(Word::is_pure) {
                    continue;
                }
                let terms = top.iter().chain(&low).map(|w| (w.clone(), field.one()));
                candidates.push(AlgebraElement::from_terms(alphabet.clone(), field, terms)?);
            }
        }
    }
    candidates
        .par_iter()
        .map(|b| {
            let n = degree(b);
            let gb = centralizer_basis(b, n)?;
            let mut out = Vec::new();
            for combo in subsets(&gb.cumulative) {
                let a = combo
                    .iter()
                    .fold(AlgebraElement::zero(b.alphabet().clone(), field), |acc, e| &acc + e);
                if degree(&a) == n && a.purity_flags()?.is_top_pure {
                    out.push(Instance::purity_profile(&a, b));
                }
            }
            Ok(out)
        })
        .collect()
}

/// Nonempty subsets, in binary counting order.
fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (1u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, t)| t.clone())
                .collect()
        })
        .collect()
}

fn degree(e: &AlgebraElement) -> usize {
    e.total_degree().finite().unwrap_or(0)
}

fn pick(e: &AlgebraElement, rng: &mut ChaCha8Rng) -> Word {
    e.terms().map(|(w, _)| w.clone()).choose(rng).expect("nonzero element")
}

fn random_branch(w: &Word, rng: &mut ChaCha8Rng) -> Branch {
    if !w.is_pure() && rng.gen_bool(0.5) {
        Branch::SharedEnd
    } else {
        Branch::WholeClass
    }
}

/// Start words tried per harvested pair of leading terms.
const HARVESTED_STARTS: usize = 6;

fn non_pure_support(e: &AlgebraElement) -> impl Iterator<Item = &Word> {
    e.terms().map(|(w, _)| w).filter(|w| !w.is_pure())
}

fn random_sparse(
    a: &Arc<Alphabet>,
    field: FieldSpec,
    degree: usize,
    mode: Mode,
    rng: &mut ChaCha8Rng,
) -> Result<AlgebraElement> {
    let stratum: u128 = match mode {
        Mode::Homogeneous => count_words(a, degree),
        Mode::UpToDegree => (0..=degree).map(|n| count_words(a, n)).sum(),
    };
    let density = (rng.gen_range(1..=5u128)).min(stratum).max(1) as usize;
    random_element(a, field, degree, density, mode, rng)
}

/// A homogeneous element; half of the time supported in a single
/// `~`-class, where products cancel most.
fn random_homogeneous(a: &Arc<Alphabet>, field: FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    if rng.gen_bool(0.5) {
        let template = random_word(a, d, rng)?;
        let density = rng.gen_range(2..=5);
        random_in_class(a, field, &template, density, rng)
    } else {
        random_sparse(a, field, d, Mode::Homogeneous, rng)
    }
}

fn random_non_pure_homogeneous(
    a: &Arc<Alphabet>,
    field: FieldSpec,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<AlgebraElement> {
    let e = random_homogeneous(a, field, d, rng)?;
    if !e.is_pure() {
        return Ok(e);
    }
    let w = random_mixed_word(a, d, rng)?;
    let extra = AlgebraElement::monomial(a.clone(), field, w, random_coefficient(field, rng))?;
    Ok(&e + &extra)
}

/// A non-pure element of degree at most `d` (and at least one).
fn random_non_pure(a: &Arc<Alphabet>, field: FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    let top = rng.gen_range(1..=d.max(1));
    let e = random_sparse(a, field, top, Mode::UpToDegree, rng)?;
    let w = random_mixed_word(a, rng.gen_range(1..=top), rng)?;
    let extra = AlgebraElement::monomial(a.clone(), field, w, random_coefficient(field, rng))?;
    let sum = &e + &extra;
    if sum.is_pure() {
        // The added word cancelled against `e`; keep it alone.
        return Ok(extra);
    }
    Ok(sum)
}

/// A non-pure element of degree `d` whose top component is pure.
fn random_top_pure(a: &Arc<Alphabet>, field: FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    let top = AlgebraElement::monomial(a.clone(), field, random_pure_word(a, d, rng)?, random_coefficient(field, rng))?;
    Ok(&top + &random_non_pure(a, field, d - 1, rng)?)
}

fn random_pure_nonscalar(a: &Arc<Alphabet>, field: FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    let mut terms: BTreeMap<Word, FieldValue> = BTreeMap::new();
    terms.insert(random_pure_word(a, d, rng)?, random_coefficient(field, rng));
    for _ in 0..rng.gen_range(0..=3) {
        let len = rng.gen_range(0..=d);
        terms.insert(random_pure_word(a, len, rng)?, random_coefficient(field, rng));
    }
    AlgebraElement::from_terms(a.clone(), field, terms)
}

fn random_combination(basis: &[AlgebraElement], rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    let first = basis.first().ok_or(Error::EmptySet)?;
    let mut acc = AlgebraElement::zero(first.alphabet().clone(), first.field());
    for e in basis {
        acc = &acc + &e.scale(&random_coefficient(e.field(), rng));
    }
    Ok(acc)
}

/// Pairs `(a^p, u^q)` of equal degree for the positive-degree elements `a`
/// of the centralizer basis of `u` up to `n`, skipping powers above `cap`.
fn matched_powers(u: &AlgebraElement, n: usize, cap: usize) -> Result<Vec<(AlgebraElement, AlgebraElement)>> {
    let gb = centralizer_basis(u, n)?;
    let du = degree(u);
    let mut out = Vec::new();
    for a in gb.cumulative.iter().filter(|a| degree(a) > 0) {
        let (p, q) = power_exponents(degree(a), du);
        if p * degree(a) <= cap {
            out.push((a.pow(p as u32), u.pow(q as u32)));
        }
    }
    Ok(out)
}

/// A deliberately corrupted instance of `lemma`, checked. A sound checker
/// reports a failure.
pub fn negative_control(lemma: Lemma) -> Result<CheckReport> {
    let q = FieldSpec::Rationals;
    let a12 = Arc::new(Alphabet::standard(1, 2));
    let a22 = Arc::new(Alphabet::standard(2, 2));
    let a11 = Arc::new(Alphabet::standard(1, 1));
    let el = |a: &Arc<Alphabet>, t: &str| parse_element(a, q, t);
    let wd = |a: &Arc<Alphabet>, t: &str| parse_word(a, t);
    let instance = match lemma {
        Lemma::Factorization => {
            let u = wd(&a22, "x1*y1*y2*x1")?;
            let mut pairs = left_factorizations(&u, 2)?;
            pairs.push((wd(&a22, "y1*x1")?, wd(&a22, "y2*x1")?));
            Instance::Factorization { u, n: 2, pairs }
        }
        Lemma::ProductSupport => {
            let (x, y) = (el(&a12, "x1*y1 + x1*y2")?, el(&a12, "y1*x1 - y2*x1")?);
            let mut supp_ab = x.multiply(&y)?.support();
            supp_ab.remove(&wd(&a12, "x1*y1^2*x1")?);
            Instance::ProductSupport {
                a: x,
                b: y,
                x: wd(&a12, "x1*y1")?,
                y: wd(&a12, "y1*x1")?,
                supp_ab,
            }
        }
        Lemma::PrefixSuffix => {
            let x = el(&a12, "x1*y1 + x1*y2")?;
            let mut supp_b = x.support();
            supp_b.remove(&wd(&a12, "x1*y2")?);
            Instance::PrefixSuffix {
                a: x.clone(),
                b: x.clone(),
                v0: wd(&a12, "x1*y1")?,
                supp_a: x.support(),
                supp_b,
            }
        }
        Lemma::LeadingProportionality => {
            let u = el(&a22, "x1 + y1")?.pow(2);
            let v = u.scale(&q.from_i64(2));
            let lt_a = &u.leading_term() - &el(&a22, "x1*y1")?;
            Instance::LeadingProportionality {
                lt_b: v.leading_term(),
                a: u,
                b: v,
                lt_a,
            }
        }
        Lemma::PurityProfile => {
            let x = el(&a11, "y1^3 + y1*x1 + x1*y1")?;
            let mut supp_a = x.support();
            supp_a.remove(&wd(&a11, "x1*y1")?);
            Instance::PurityProfile {
                a: x.clone(),
                b: x.clone(),
                supp_a,
                supp_b: x.support(),
            }
        }
        Lemma::CommutantProportionality => {
            let x = el(&a12, "x1*y1 + x1*y2")?;
            Instance::Commutant {
                basis: vec![x.clone(), el(&a12, "x1*y1")?],
                a: x,
            }
        }
        Lemma::DegreeAdditivity => {
            let (x, y) = (el(&a12, "x1*y1 + x1*y2")?, el(&a12, "y1*x1 - y2*x1")?);
            let ab = &x.multiply(&y)? - &el(&a12, "x1*y1^2*x1")?;
            Instance::Additivity { a: x, b: y, ab }
        }
        Lemma::Commutativity => Instance::Commutativity {
            basis: centralizer_basis(&el(&a11, "x1")?, 3)?,
            injected: Some(el(&a11, "y1")?),
        },
    };
    let mut report = check_instance(&instance)?;
    report.name = format!("{}-negative-control", lemma.name());
    Ok(report)
}
