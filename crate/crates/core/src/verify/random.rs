//! Seeded generators of words and elements.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::monoid::{count_words, enumerate_words, enumerate_words_up_to, Alphabet, CommBlock, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every support word has exactly the given length.
    Homogeneous,
    /// Support words have length at most the given degree.
    UpToDegree,
}

/// Strata at most this large are enumerated and sampled without rejection.
const ENUMERATION_LIMIT: u128 = 4096;

/// A word of the given length built from uniformly chosen letters.
pub fn random_word<R: Rng>(alphabet: &Alphabet, length: usize, rng: &mut R) -> Result<Word> {
    let letters: Vec<Letter> = alphabet.letters().collect();
    if letters.is_empty() && length > 0 {
        return Err(Error::ImpossibleConstraint(format!(
            "no words of length {length} over an empty alphabet"
        )));
    }
    Ok(Word::from_letters((0..length).map(|_| letters[rng.gen_range(0..letters.len())])))
}

/// A word of the given length with at least one noncommuting letter.
pub fn random_mixed_word<R: Rng>(alphabet: &Alphabet, length: usize, rng: &mut R) -> Result<Word> {
    if alphabet.num_noncommuting() == 0 || length == 0 {
        return Err(Error::ImpossibleConstraint(format!(
            "no non-pure words of length {length}"
        )));
    }
    let mut letters: Vec<Letter> = random_word(alphabet, length - 1, rng)?.letters().collect();
    let x = Letter::Free(rng.gen_range(0..alphabet.num_noncommuting()) as u16);
    letters.insert(rng.gen_range(0..=letters.len()), x);
    Ok(Word::from_letters(letters))
}

/// A pure word of the given length.
pub fn random_pure_word<R: Rng>(alphabet: &Alphabet, length: usize, rng: &mut R) -> Result<Word> {
    Ok(random_block(alphabet.num_commuting(), length, rng)?.to_word())
}

fn random_block<R: Rng>(ny: usize, size: usize, rng: &mut R) -> Result<CommBlock> {
    if ny == 0 && size > 0 {
        return Err(Error::ImpossibleConstraint(format!(
            "no commutative blocks of size {size} without commuting letters"
        )));
    }
    let mut exps = vec![0u32; ny];
    for _ in 0..size {
        exps[rng.gen_range(0..ny)] += 1;
    }
    Ok(CommBlock::from_exponents(exps))
}

/// A nonzero scalar: `±n/d` with `1 <= n <= 5`, `1 <= d <= 3` over the
/// rationals, a uniform nonzero residue over a prime field.
pub fn random_coefficient<R: Rng>(field: FieldSpec, rng: &mut R) -> FieldValue {
    match field {
        FieldSpec::Rationals => {
            let n = rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let d = rng.gen_range(1..=3i64);
            field
                .ratio(&n.into(), &d.into())
                .expect("nonzero denominator")
        }
        FieldSpec::Prime(p) => field.from_i64(rng.gen_range(1..p as i64)),
    }
}

/// An element with `density` distinct support words and nonzero
/// coefficients.
pub fn random_element<R: Rng>(
    alphabet: &Arc<Alphabet>,
    field: FieldSpec,
    degree: usize,
    density: usize,
    mode: Mode,
    rng: &mut R,
) -> Result<AlgebraElement> {
    let stratum: u128 = match mode {
        Mode::Homogeneous => count_words(alphabet, degree),
        Mode::UpToDegree => (0..=degree).map(|n| count_words(alphabet, n)).sum(),
    };
    if density as u128 > stratum {
        return Err(Error::ImpossibleConstraint(format!(
            "density {density} exceeds the {stratum} available words"
        )));
    }
    let words: Vec<Word> = if stratum <= ENUMERATION_LIMIT {
        let all = match mode {
            Mode::Homogeneous => enumerate_words(alphabet, degree),
            Mode::UpToDegree => enumerate_words_up_to(alphabet, degree),
        };
        all.choose_multiple(rng, density).cloned().collect()
    } else {
        let mut chosen = BTreeSet::new();
        while chosen.len() < density {
            let len = match mode {
                Mode::Homogeneous => degree,
                Mode::UpToDegree => rng.gen_range(0..=degree),
            };
            chosen.insert(random_word(alphabet, len, rng)?);
        }
        chosen.into_iter().collect()
    };
    let terms: Vec<(Word, FieldValue)> = words
        .into_iter()
        .map(|w| (w, random_coefficient(field, rng)))
        .collect();
    AlgebraElement::from_terms(alphabet.clone(), field, terms)
}

/// A homogeneous element supported in the `~`-class of `template`, with at
/// most `density` terms. Such elements make products with heavy
/// cancellation likely.
pub fn random_in_class<R: Rng>(
    alphabet: &Arc<Alphabet>,
    field: FieldSpec,
    template: &Word,
    density: usize,
    rng: &mut R,
) -> Result<AlgebraElement> {
    let parts = template.decompose();
    let ny = alphabet.num_commuting();
    let mut words = BTreeSet::new();
    for _ in 0..density.max(1) * 4 {
        if words.len() >= density {
            break;
        }
        let w = match &parts.middle {
            None => random_pure_word(alphabet, template.len(), rng)?,
            Some(middle) => {
                let p = random_block(ny, parts.prefix.size(), rng)?.to_word();
                let s = random_block(ny, parts.suffix.size(), rng)?.to_word();
                p.concat(middle).concat(&s)
            }
        };
        words.insert(w);
    }
    let terms: Vec<(Word, FieldValue)> = words
        .into_iter()
        .map(|w| (w, random_coefficient(field, rng)))
        .collect();
    AlgebraElement::from_terms(alphabet.clone(), field, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alpha() -> Arc<Alphabet> {
        Arc::new(Alphabet::standard(2, 2))
    }

    #[test]
    fn word_contracts() {
        let a = alpha();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_word(&a, 0, &mut rng).unwrap(), Word::one());
        let w1 = random_word(&a, 5, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let w2 = random_word(&a, 5, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(w1.len(), 5);
        let empty = Alphabet::standard(0, 0);
        assert!(matches!(random_word(&empty, 1, &mut rng), Err(Error::ImpossibleConstraint(_))));
        for _ in 0..50 {
            assert!(!random_mixed_word(&a, 3, &mut rng).unwrap().is_pure());
            assert!(random_pure_word(&a, 3, &mut rng).unwrap().is_pure());
        }
    }

    #[test]
    fn element_contracts() {
        let a = alpha();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for field in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
            for density in 1..6 {
                let e = random_element(&a, field, 3, density, Mode::Homogeneous, &mut rng).unwrap();
                assert_eq!(e.num_terms(), density);
                assert!(e.terms().all(|(w, _)| w.len() == 3));
                let e = random_element(&a, field, 7, density, Mode::UpToDegree, &mut rng).unwrap();
                assert_eq!(e.num_terms(), density);
                assert!(e.terms().all(|(w, _)| w.len() <= 7));
            }
        }
        assert!(matches!(
            random_element(&a, FieldSpec::Rationals, 1, 5, Mode::Homogeneous, &mut rng),
            Err(Error::ImpossibleConstraint(_))
        ));
        let full = random_element(&a, FieldSpec::Rationals, 1, 4, Mode::Homogeneous, &mut rng).unwrap();
        assert_eq!(full.num_terms(), 4);
        let seeded = |s| random_element(&a, FieldSpec::Rationals, 4, 3, Mode::UpToDegree, &mut ChaCha8Rng::seed_from_u64(s));
        assert_eq!(seeded(7).unwrap(), seeded(7).unwrap());
    }

    #[test]
    fn class_elements_stay_in_class() {
        let a = alpha();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = Word::from_names(&a, &["y1", "x1", "y2", "x2", "y1", "y2"]).unwrap();
        for _ in 0..20 {
            let e = random_in_class(&a, FieldSpec::Prime(5), &t, 4, &mut rng).unwrap();
            assert!(e.num_terms() >= 1 && e.num_terms() <= 4);
            assert!(e.terms().all(|(w, _)| w.equivalent(&t)));
        }
    }
}
