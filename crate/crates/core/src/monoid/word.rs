use std::fmt;
use std::ops::Mul;

use super::alphabet::{Alphabet, Letter};
use crate::error::Result;

/// A monomial in the commuting variables, stored as an exponent vector
/// indexed by commuting-variable number with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CommBlock(Vec<u32>);

impl CommBlock {
    pub fn empty() -> Self {
        CommBlock(Vec::new())
    }

    pub fn variable(index: usize) -> Self {
        let mut exps = vec![0; index + 1];
        exps[index] = 1;
        CommBlock(exps)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        CommBlock(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree of the block.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Nonzero `(variable, exponent)` pairs in variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    /// The block's variables one by one, in variable order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.iter()
            .flat_map(|(i, e)| std::iter::repeat(Letter::Commuting(i as u16)).take(e as usize))
    }

    pub fn mul(&self, other: &CommBlock) -> CommBlock {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.0.clone();
        for (e, s) in exps.iter_mut().zip(&short.0) {
            *e += s;
        }
        CommBlock(exps)
    }

    /// `self / other`, provided `other` divides `self`.
    pub fn checked_div(&self, other: &CommBlock) -> Option<CommBlock> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut exps = self.0.clone();
        for (e, s) in exps.iter_mut().zip(&other.0) {
            *e = e.checked_sub(*s)?;
        }
        Some(CommBlock::from_exponents(exps))
    }

    /// All sub-monomials of total degree `size`, exponent vectors in
    /// lexicographic order.
    pub fn divisors_of_size(&self, size: usize) -> Vec<CommBlock> {
        fn rec(bounds: &[u32], pos: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<CommBlock>) {
            if pos == bounds.len() {
                if left == 0 {
                    out.push(CommBlock::from_exponents(cur.clone()));
                }
                return;
            }
            let rest: usize = bounds[pos + 1..].iter().map(|&b| b as usize).sum();
            let lo = left.saturating_sub(rest);
            let hi = left.min(bounds[pos] as usize);
            for e in lo..=hi {
                cur.push(e as u32);
                rec(bounds, pos + 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if size <= self.size() {
            rec(&self.0, 0, size, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All monomials of total degree `size` in `num_vars` variables, exponent
    /// vectors in lexicographic order.
    pub fn all_of_size(num_vars: usize, size: usize) -> Vec<CommBlock> {
        if num_vars == 0 {
            return if size == 0 { vec![CommBlock::empty()] } else { Vec::new() };
        }
        CommBlock(vec![size as u32; num_vars]).divisors_of_size(size)
    }

    pub fn to_word(&self) -> Word {
        Word {
            lead: self.clone(),
            tail: Vec::new(),
        }
    }
}

/// An element of the coproduct monoid in canonical form
/// `B0 a1 B1 ... ak Bk`: commutative blocks `Bi` (possibly empty)
/// alternating with noncommuting letters `ai`.
///
/// The representation is canonical, so structural equality is monoid
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    lead: CommBlock,
    tail: Vec<(u16, CommBlock)>,
}

/// A word split as `prefix · middle · suffix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub prefix: CommBlock,
    /// Starts and ends with a noncommuting letter; absent for pure words.
    pub middle: Option<Word>,
    pub suffix: CommBlock,
    pub is_pure: bool,
}

/// Invariant data of a `~`-class: words are equivalent iff their keys agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EquivKey {
    Pure {
        length: usize,
    },
    Mixed {
        length: usize,
        prefix_len: usize,
        middle: Word,
        suffix_len: usize,
    },
}

impl Word {
    pub fn one() -> Self {
        Word::default()
    }

    pub fn letter(letter: Letter) -> Self {
        match letter {
            Letter::Commuting(i) => CommBlock::variable(i as usize).to_word(),
            Letter::Free(i) => Word {
                lead: CommBlock::empty(),
                tail: vec![(i, CommBlock::empty())],
            },
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut lead = Vec::new();
        let mut tail: Vec<(u16, Vec<u32>)> = Vec::new();
        for letter in letters {
            match letter {
                Letter::Commuting(i) => {
                    let exps = match tail.last_mut() {
                        Some((_, b)) => b,
                        None => &mut lead,
                    };
                    let i = i as usize;
                    if exps.len() <= i {
                        exps.resize(i + 1, 0);
                    }
                    exps[i] += 1;
                }
                Letter::Free(i) => tail.push((i, Vec::new())),
            }
        }
        Word {
            lead: CommBlock::from_exponents(lead),
            tail: tail
                .into_iter()
                .map(|(x, b)| (x, CommBlock::from_exponents(b)))
                .collect(),
        }
    }

    /// Canonical word of a sequence of variable names.
    pub fn from_names<S: AsRef<str>>(alphabet: &Alphabet, names: &[S]) -> Result<Self> {
        let letters = names
            .iter()
            .map(|n| alphabet.letter(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters(letters))
    }

    pub fn from_parts(lead: CommBlock, tail: Vec<(u16, CommBlock)>) -> Self {
        Word { lead, tail }
    }

    pub fn lead(&self) -> &CommBlock {
        &self.lead
    }

    pub fn tail(&self) -> &[(u16, CommBlock)] {
        &self.tail
    }

    pub fn is_one(&self) -> bool {
        self.lead.is_empty() && self.tail.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.tail.is_empty()
    }

    pub fn num_free_letters(&self) -> usize {
        self.tail.len()
    }

    pub fn len(&self) -> usize {
        self.lead.size()
            + self
                .tail
                .iter()
                .map(|(_, b)| 1 + b.size())
                .sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    /// Letters in canonical reading order (blocks expanded in variable order).
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.lead.letters().chain(
            self.tail
                .iter()
                .flat_map(|(x, b)| std::iter::once(Letter::Free(*x)).chain(b.letters())),
        )
    }

    /// Every letter of the word belongs to the alphabet.
    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        self.lead.exponents().len() <= alphabet.num_commuting()
            && self.tail.iter().all(|(x, b)| {
                (*x as usize) < alphabet.num_noncommuting()
                    && b.exponents().len() <= alphabet.num_commuting()
            })
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut tail = Vec::with_capacity(self.tail.len() + other.tail.len());
        tail.extend(self.tail.iter().cloned());
        let lead = if let Some((_, last)) = tail.last_mut() {
            *last = last.mul(&other.lead);
            self.lead.clone()
        } else {
            self.lead.mul(&other.lead)
        };
        tail.extend(other.tail.iter().cloned());
        Word { lead, tail }
    }

    pub fn pow(&self, exp: u32) -> Word {
        (0..exp).fold(Word::one(), |acc, _| acc.concat(self))
    }

    /// The commuting variables before the first noncommuting letter; the
    /// whole word when pure.
    pub fn prefix(&self) -> &CommBlock {
        &self.lead
    }

    /// The commuting variables after the last noncommuting letter; the
    /// whole word when pure.
    pub fn suffix(&self) -> &CommBlock {
        self.tail.last().map_or(&self.lead, |(_, b)| b)
    }

    pub fn decompose(&self) -> Decomposition {
        if self.is_pure() {
            return Decomposition {
                prefix: self.lead.clone(),
                middle: None,
                suffix: self.lead.clone(),
                is_pure: true,
            };
        }
        let mut middle_tail = self.tail.clone();
        let suffix = std::mem::take(&mut middle_tail.last_mut().unwrap().1);
        Decomposition {
            prefix: self.lead.clone(),
            middle: Some(Word {
                lead: CommBlock::empty(),
                tail: middle_tail,
            }),
            suffix,
            is_pure: false,
        }
    }

    pub fn equiv_key(&self) -> EquivKey {
        let length = self.len();
        let d = self.decompose();
        match d.middle {
            None => EquivKey::Pure { length },
            Some(middle) => EquivKey::Mixed {
                length,
                prefix_len: d.prefix.size(),
                middle,
                suffix_len: d.suffix.size(),
            },
        }
    }

    pub fn equivalent(&self, other: &Word) -> bool {
        self.equiv_key() == other.equiv_key()
    }

    /// Canonical text using the alphabet's variable names.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet: Some(alphabet),
        }
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: Option<&'a Alphabet>,
}

impl WordDisplay<'_> {
    fn name(&self, letter: Letter) -> String {
        match (self.alphabet, letter) {
            (Some(a), l) => a.name(l).to_string(),
            (None, Letter::Commuting(i)) => format!("y{}", i + 1),
            (None, Letter::Free(i)) => format!("x{}", i + 1),
        }
    }
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_one() {
            return f.write_str("1");
        }
        // Runs of one noncommuting letter separated by empty blocks print as powers.
        let mut factors: Vec<(Letter, u32)> = Vec::new();
        let push = |letter: Letter, exp: u32, factors: &mut Vec<(Letter, u32)>| match factors.last_mut() {
            Some((l, e)) if *l == letter && !letter.is_commuting() => *e += exp,
            _ => factors.push((letter, exp)),
        };
        for (i, e) in self.word.lead.iter() {
            push(Letter::Commuting(i as u16), e, &mut factors);
        }
        for (x, block) in &self.word.tail {
            push(Letter::Free(*x), 1, &mut factors);
            for (i, e) in block.iter() {
                push(Letter::Commuting(i as u16), e, &mut factors);
            }
        }
        for (k, (letter, exp)) in factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(&self.name(*letter))?;
            if *exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Displays with the standard names `x1, x2, ...` and `y1, y2, ...`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WordDisplay {
            word: self,
            alphabet: None,
        }
        .fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(names: &[&str]) -> Word {
        Word::from_names(&Alphabet::standard(2, 2), names).unwrap()
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(w(&["y2", "y1", "x1"]), w(&["y1", "y2", "x1"]));
        assert_eq!(w(&["y2", "y1", "x1"]).to_string(), "y1*y2*x1");
        assert_eq!(w(&[]), Word::one());
        assert_eq!(w(&["x1", "y2", "y1", "x1"]).to_string(), "x1*y1*y2*x1");
        assert_ne!(w(&["x1", "y1"]), w(&["y1", "x1"]));
        assert_eq!(w(&["x1", "x1", "y1", "y1"]).to_string(), "x1^2*y1^2");
        assert!(matches!(
            Word::from_names(&Alphabet::standard(1, 1), &["x2"]),
            Err(crate::Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w(&["x1", "y1"]).concat(&w(&["y2", "x1"])), w(&["x1", "y1", "y2", "x1"]));
        assert_eq!(Word::one().concat(&w(&["x2", "y1"])), w(&["x2", "y1"]));
        assert_eq!(w(&["y1"]).concat(&w(&["y1"])).to_string(), "y1^2");
    }

    #[test]
    fn length_examples() {
        assert_eq!(Word::one().len(), 0);
        assert_eq!(w(&["x1", "y1", "y2", "x1"]).len(), 4);
        assert_eq!(w(&["y1", "y1", "y1"]).len(), 3);
    }

    #[test]
    fn decompose_examples() {
        let d = w(&["y1", "x1", "y2", "x1", "y1", "y2"]).decompose();
        assert_eq!(d.prefix, CommBlock::variable(0));
        assert_eq!(d.middle, Some(w(&["x1", "y2", "x1"])));
        assert_eq!(d.suffix, CommBlock::from_exponents(vec![1, 1]));
        assert!(!d.is_pure);

        let d = w(&["y1", "y2"]).decompose();
        assert_eq!(d.prefix, CommBlock::from_exponents(vec![1, 1]));
        assert_eq!(d.suffix, d.prefix);
        assert_eq!(d.middle, None);
        assert!(d.is_pure);

        let d = w(&["x1"]).decompose();
        assert_eq!(
            (d.prefix.is_empty(), d.middle, d.suffix.is_empty(), d.is_pure),
            (true, Some(w(&["x1"])), true, false)
        );
    }

    #[test]
    fn equivalence_examples() {
        assert!(w(&["y1", "x1", "y2"]).equivalent(&w(&["y2", "x1", "y1"])));
        assert!(w(&["y1", "y2"]).equivalent(&w(&["y1", "y1"])));
        assert!(!w(&["y1", "x1"]).equivalent(&w(&["x1", "y1"])));
        assert_eq!(
            w(&["x1", "y1"]).equiv_key(),
            EquivKey::Mixed {
                length: 2,
                prefix_len: 0,
                middle: w(&["x1"]),
                suffix_len: 1
            }
        );
    }

    #[test]
    fn divisors_are_lexicographic() {
        let b = CommBlock::from_exponents(vec![2, 1]);
        let d: Vec<_> = b.divisors_of_size(2).into_iter().map(|c| c.exponents().to_vec()).collect();
        assert_eq!(d, vec![vec![1, 1], vec![2]]);
        assert_eq!(CommBlock::all_of_size(2, 2).len(), 3);
        assert_eq!(CommBlock::all_of_size(0, 0), vec![CommBlock::empty()]);
        assert!(CommBlock::all_of_size(0, 1).is_empty());
    }
}
