//! Sparse exact arithmetic in the monoid algebra of the coproduct monoid.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::monoid::{Alphabet, Word};

/// Total degree; the zero element has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Top-degree data of a nonzero element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub degree: usize,
    pub leading_term: AlgebraElement,
    /// Largest word of the leading term.
    pub phi: Word,
    /// Coefficient of `phi`.
    pub coeff: FieldValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityFlags {
    pub is_pure: bool,
    pub is_top_pure: bool,
    /// Degrees whose homogeneous component is not pure.
    pub non_pure_degrees: BTreeSet<usize>,
}

impl PurityFlags {
    pub fn is_m_pure(&self, m: usize) -> bool {
        !self.non_pure_degrees.contains(&m)
    }
}

/// A finite linear combination of words with nonzero coefficients.
///
/// Terms are kept in a map ordered by the total order on words, so iteration
/// is deterministic and the last term is the largest word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    alphabet: Arc<Alphabet>,
    field: FieldSpec,
    terms: BTreeMap<Word, FieldValue>,
}

impl AlgebraElement {
    pub fn zero(alphabet: Arc<Alphabet>, field: FieldSpec) -> Self {
        AlgebraElement {
            alphabet,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(alphabet: Arc<Alphabet>, field: FieldSpec, c: FieldValue) -> Result<Self> {
        Self::monomial(alphabet, field, Word::one(), c)
    }

    pub fn one(alphabet: Arc<Alphabet>, field: FieldSpec) -> Self {
        Self::scalar(alphabet, field, field.one()).expect("one is in the field")
    }

    pub fn monomial(alphabet: Arc<Alphabet>, field: FieldSpec, word: Word, c: FieldValue) -> Result<Self> {
        Self::from_terms(alphabet, field, [(word, c)])
    }

    /// The single variable `name` with coefficient one.
    pub fn variable(alphabet: Arc<Alphabet>, field: FieldSpec, name: &str) -> Result<Self> {
        let word = Word::letter(alphabet.letter(name)?);
        Self::monomial(alphabet, field, word, field.one())
    }

    /// Sums the given terms; repeated words accumulate and zero sums vanish.
    pub fn from_terms(
        alphabet: Arc<Alphabet>,
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Word, FieldValue)>,
    ) -> Result<Self> {
        let mut acc: HashMap<Word, FieldValue> = HashMap::new();
        for (word, c) in terms {
            if !word.is_over(&alphabet) {
                return Err(Error::AlphabetMismatch);
            }
            if !field.contains(&c) {
                return Err(Error::FieldMismatch);
            }
            accumulate(&mut acc, word, c);
        }
        Ok(Self::from_map(alphabet, field, acc))
    }

    fn from_map(alphabet: Arc<Alphabet>, field: FieldSpec, acc: HashMap<Word, FieldValue>) -> Self {
        AlgebraElement {
            alphabet,
            field,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn with_terms(&self, terms: BTreeMap<Word, FieldValue>) -> Self {
        AlgebraElement {
            alphabet: self.alphabet.clone(),
            field: self.field,
            terms,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &FieldValue)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> FieldValue {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// A scalar multiple of the identity, including zero.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Word::is_one)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(d) => lens.all(|l| l == d),
        }
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if !Arc::ptr_eq(&self.alphabet, &other.alphabet) && self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    /// `lambda * a + mu * b`.
    pub fn linear_combine(
        lambda: &FieldValue,
        a: &AlgebraElement,
        mu: &FieldValue,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        a.check_compatible(b)?;
        if !a.field.contains(lambda) || !a.field.contains(mu) {
            return Err(Error::FieldMismatch);
        }
        let mut terms = BTreeMap::new();
        if !lambda.is_zero() {
            for (w, c) in &a.terms {
                terms.insert(w.clone(), lambda * c);
            }
        }
        if !mu.is_zero() {
            for (w, c) in &b.terms {
                let t = mu * c;
                match terms.get_mut(w) {
                    Some(existing) => {
                        *existing = &*existing + &t;
                        if existing.is_zero() {
                            terms.remove(w);
                        }
                    }
                    None => {
                        terms.insert(w.clone(), t);
                    }
                }
            }
        }
        Ok(a.with_terms(terms))
    }

    pub fn scale(&self, lambda: &FieldValue) -> AlgebraElement {
        if lambda.is_zero() {
            return self.with_terms(BTreeMap::new());
        }
        self.with_terms(self.terms.iter().map(|(w, c)| (w.clone(), lambda * c)).collect())
    }

    /// Exact product: coefficients of equal words accumulate, so terms may
    /// cancel.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Word, FieldValue> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                accumulate(&mut acc, u.concat(v), c * d);
            }
        }
        Ok(Self::from_map(self.alphabet.clone(), self.field, acc))
    }

    pub fn pow(&self, exp: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one(self.alphabet.clone(), self.field);
        for _ in 0..exp {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        let ab = self.multiply(other)?;
        let ba = other.multiply(self)?;
        Ok(&ab - &ba)
    }

    /// Whether `ab = ba`. The commutator is accumulated without ordering its
    /// words, which keeps large products cheap.
    pub fn commutes(&self, other: &AlgebraElement) -> Result<bool> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Word, FieldValue> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let cd = c * d;
                accumulate(&mut acc, v.concat(u), -&cd);
                accumulate(&mut acc, u.concat(v), cd);
            }
        }
        Ok(acc.values().all(FieldValue::is_zero))
    }

    pub fn support(&self) -> BTreeSet<Word> {
        self.terms.keys().cloned().collect()
    }

    /// Words of the support that are `~`-equivalent to `w`.
    pub fn support_in_class(&self, w: &Word) -> BTreeSet<Word> {
        let key = w.equiv_key();
        self.terms
            .keys()
            .filter(|v| v.len() == w.len() && v.equiv_key() == key)
            .cloned()
            .collect()
    }

    pub fn homogeneous_component(&self, i: usize) -> AlgebraElement {
        self.with_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.len() == i)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        )
    }

    /// Nonzero homogeneous components by degree.
    pub fn components(&self) -> BTreeMap<usize, AlgebraElement> {
        let mut out: BTreeMap<usize, BTreeMap<Word, FieldValue>> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.len()).or_default().insert(w.clone(), c.clone());
        }
        out.into_iter().map(|(d, t)| (d, self.with_terms(t))).collect()
    }

    pub fn total_degree(&self) -> Degree {
        // Length-first order: the largest word has the largest length.
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |w| Degree::Finite(w.len()))
    }

    pub fn leading_term(&self) -> AlgebraElement {
        match self.total_degree() {
            Degree::NegInfinity => self.clone(),
            Degree::Finite(d) => self.homogeneous_component(d),
        }
    }

    pub fn leading_data(&self) -> Result<LeadingData> {
        let (phi, coeff) = self.terms.iter().next_back().ok_or(Error::ZeroElement)?;
        let degree = phi.len();
        Ok(LeadingData {
            degree,
            leading_term: self.homogeneous_component(degree),
            phi: phi.clone(),
            coeff: coeff.clone(),
        })
    }

    /// `self / c(self)`, so that the largest word has coefficient one.
    pub fn normalized(&self) -> Result<AlgebraElement> {
        let c = self.leading_data()?.coeff;
        Ok(self.scale(&c.inv()?))
    }

    pub fn is_pure(&self) -> bool {
        self.terms.keys().all(Word::is_pure)
    }

    pub fn purity_flags(&self) -> Result<PurityFlags> {
        let degree = self.total_degree().finite().ok_or(Error::ZeroElement)?;
        let non_pure_degrees: BTreeSet<usize> = self
            .terms
            .keys()
            .filter(|w| !w.is_pure())
            .map(Word::len)
            .collect();
        Ok(PurityFlags {
            is_pure: non_pure_degrees.is_empty(),
            is_top_pure: !non_pure_degrees.contains(&degree),
            non_pure_degrees,
        })
    }
}

fn accumulate(acc: &mut HashMap<Word, FieldValue>, w: Word, c: FieldValue) {
    match acc.entry(w) {
        Entry::Occupied(mut e) => {
            let sum = &*e.get() + &c;
            *e.get_mut() = sum;
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Canonical text: terms in descending word order, e.g. `x1*y1^2*x1 - 2*y2`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = if negative { -c } else { c.clone() };
            if w.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", w.display(&self.alphabet))?;
            } else {
                write!(f, "{magnitude}*{}", w.display(&self.alphabet))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for &AlgebraElement {
            type Output = AlgebraElement;

            /// Panics if the operands live in different algebras.
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                let ($a, $b) = (self, rhs);
                $body.expect("operands from different algebras")
            }
        }
    };
}

binop!(Add, add, |a, b| AlgebraElement::linear_combine(
    &a.field.one(),
    a,
    &a.field.one(),
    b
));
binop!(Sub, sub, |a, b| AlgebraElement::linear_combine(
    &a.field.one(),
    a,
    &a.field.from_i64(-1),
    b
));
binop!(Mul, mul, |a, b| a.multiply(b));

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&self.field.from_i64(-1))
    }
}
