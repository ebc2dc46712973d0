//! Centralizers and homogeneous commutants by exact linear algebra.
//!
//! Two independent routes compute kernels of `x -> xu - ux`:
//!
//! * [`homogeneous_commutant`] assembles the constraint matrix on the words
//!   of one length and runs row-reduction ([`crate::linalg`]).
//! * [`centralizer_basis`] works on all words up to a length bound and
//!   eliminates images by their largest word, column by column.
//!
//! Both return the unique reduced echelon basis with respect to the word
//! order: every element has leading coefficient one on its largest word, and
//! no element contains another element's largest word.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{AlgebraElement, Degree};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::linalg::{Rref, SparseRow};
use crate::monoid::{enumerate_words, enumerate_words_up_to, Alphabet, Word};

/// Basis of homogeneous degree-`n` elements commuting with `u`, from the
/// nullspace of the commutator map on the span of the length-`n` words.
pub fn homogeneous_commutant(u: &AlgebraElement, n: usize) -> Result<Vec<AlgebraElement>> {
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    let alphabet = u.alphabet();
    let field = u.field();
    let columns = enumerate_words(alphabet, n);
    let mut rows: HashMap<Word, SparseRow> = HashMap::new();
    for (col, w) in columns.iter().enumerate() {
        for (v, c) in u.terms() {
            for (word, coeff) in [(w.concat(v), c.clone()), (v.concat(w), -c)] {
                let row = rows.entry(word).or_default();
                let entry = row.entry(col).or_insert_with(|| field.zero());
                *entry = &*entry + &coeff;
            }
        }
    }
    let mut rows: Vec<(Word, SparseRow)> = rows.into_iter().collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let mut rref = Rref::new(field, columns.len());
    for (_, row) in rows {
        rref.push(row);
    }
    rref.nullspace()
        .into_iter()
        .map(|v| {
            AlgebraElement::from_terms(
                alphabet.clone(),
                field,
                v.into_iter().map(|(col, c)| (columns[col].clone(), c)),
            )
        })
        .collect()
}

/// Reduces elements to the reduced echelon basis of their span, sorted by
/// increasing largest word.
pub fn echelonize(elements: &[AlgebraElement]) -> Vec<AlgebraElement> {
    let mut basis: BTreeMap<Word, AlgebraElement> = BTreeMap::new();
    for e in elements {
        let mut r = e.clone();
        reduce_fully(&mut r, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.normalized().expect("nonzero");
        let lead = r.leading_data().expect("nonzero").phi;
        for b in basis.values_mut() {
            let c = b.coefficient(&lead);
            if !c.is_zero() {
                *b = AlgebraElement::linear_combine(&b.field().one(), b, &-&c, &r).expect("same ring");
            }
        }
        basis.insert(lead, r);
    }
    basis.into_values().collect()
}

fn reduce_fully(r: &mut AlgebraElement, basis: &BTreeMap<Word, AlgebraElement>) {
    for (lead, b) in basis.iter().rev() {
        let c = r.coefficient(lead);
        if !c.is_zero() {
            *r = AlgebraElement::linear_combine(&r.field().one(), r, &-&c, b).expect("same ring");
        }
    }
}

/// One degree of a [`GradedBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSlice {
    pub degree: usize,
    /// `dim C_{<=n} - dim C_{<=n-1}`.
    pub dim_gr: usize,
    pub new_basis: Vec<AlgebraElement>,
}

/// Basis of the centralizer of `u` truncated to degree `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub u: AlgebraElement,
    pub max_degree: usize,
    pub per_degree: Vec<DegreeSlice>,
    pub cumulative: Vec<AlgebraElement>,
}

impl GradedBasis {
    fn from_basis(u: AlgebraElement, max_degree: usize, cumulative: Vec<AlgebraElement>) -> Self {
        let per_degree = (0..=max_degree)
            .map(|degree| {
                let new_basis: Vec<_> = cumulative
                    .iter()
                    .filter(|e| e.total_degree() == Degree::Finite(degree))
                    .cloned()
                    .collect();
                DegreeSlice {
                    degree,
                    dim_gr: new_basis.len(),
                    new_basis,
                }
            })
            .collect();
        GradedBasis {
            u,
            max_degree,
            per_degree,
            cumulative,
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.per_degree.iter().map(|s| s.dim_gr).collect()
    }
}

/// Sparse vector kept ordered so the largest word is the last key.
type Vector = BTreeMap<Word, FieldValue>;

fn sub_scaled(target: &mut Vector, factor: &FieldValue, other: &Vector) {
    for (w, v) in other {
        let t = factor * v;
        match target.get_mut(w) {
            Some(existing) => {
                *existing = &*existing - &t;
                if existing.is_zero() {
                    target.remove(w);
                }
            }
            None => {
                target.insert(w.clone(), -&t);
            }
        }
    }
}

/// The centralizer of a nonscalar `u` intersected with the span of words of
/// length at most `max_degree`.
///
/// Columns are processed in increasing word order. Each column's image
/// `[w, u]` is reduced by previously stored images sharing its largest word;
/// columns whose image vanishes contribute kernel vectors.
pub fn centralizer_basis(u: &AlgebraElement, max_degree: usize) -> Result<GradedBasis> {
    if u.is_scalar() {
        return Err(Error::ScalarElement);
    }
    let alphabet: &Arc<Alphabet> = u.alphabet();
    let field: FieldSpec = u.field();
    let one = field.one();
    let u_terms: Vec<(Word, FieldValue)> = u.terms().map(|(w, c)| (w.clone(), c.clone())).collect();

    let mut pivots: HashMap<Word, (Vector, Vector)> = HashMap::new();
    let mut kernel: Vec<AlgebraElement> = Vec::new();
    for w in enumerate_words_up_to(alphabet, max_degree) {
        let mut image: Vector = BTreeMap::new();
        for (v, c) in &u_terms {
            for (word, coeff) in [(w.concat(v), c.clone()), (v.concat(&w), -c)] {
                let e = image.entry(word).or_insert_with(|| field.zero());
                *e = &*e + &coeff;
            }
        }
        image.retain(|_, c| !c.is_zero());
        let mut comb: Vector = BTreeMap::from([(w.clone(), one.clone())]);
        loop {
            let Some((lead, c)) = image.iter().next_back() else {
                break;
            };
            let Some((pimage, pcomb)) = pivots.get(lead) else {
                break;
            };
            let c = c.clone();
            sub_scaled(&mut image, &c, pimage);
            sub_scaled(&mut comb, &c, pcomb);
        }
        match image.iter().next_back() {
            None => kernel.push(AlgebraElement::from_terms(alphabet.clone(), field, comb)?),
            Some((lead, c)) => {
                let inv = c.inv()?;
                let lead = lead.clone();
                for v in image.values_mut().chain(comb.values_mut()) {
                    *v = &*v * &inv;
                }
                pivots.insert(lead, (image, comb));
            }
        }
    }
    Ok(GradedBasis::from_basis(u.clone(), max_degree, echelonize(&kernel)))
}

/// Outcome of [`check_pairwise_commutes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseReport {
    pub passed: bool,
    pub pairs_checked: usize,
    /// Indices into the cumulative basis of the first non-commuting pair.
    pub witness: Option<(usize, usize)>,
}

pub fn check_pairwise_commutes(gb: &GradedBasis) -> PairwiseReport {
    let basis = &gb.cumulative;
    let mut pairs_checked = 0;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs_checked += 1;
            if !basis[i].commutes(&basis[j]).unwrap_or(false) {
                return PairwiseReport {
                    passed: false,
                    pairs_checked,
                    witness: Some((i, j)),
                };
            }
        }
    }
    PairwiseReport {
        passed: true,
        pairs_checked,
        witness: None,
    }
}

/// Outcome of [`degree_additivity_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityReport {
    pub passed: bool,
    pub degree_a: usize,
    pub degree_b: usize,
    pub degree_ab: usize,
    pub phi_ab: Word,
    pub phi_product: Word,
    pub coeff_ab: FieldValue,
    pub coeff_product: FieldValue,
}

/// Checks `d(ab) = d(a) + d(b)`, `phi(ab) = phi(a) phi(b)` and
/// `c(ab) = c(a) c(b)`.
pub fn degree_additivity_check(a: &AlgebraElement, b: &AlgebraElement) -> Result<AdditivityReport> {
    additivity_report(a, b, &a.multiply(b)?)
}

/// [`degree_additivity_check`] against a supplied product `ab`.
pub fn additivity_report(a: &AlgebraElement, b: &AlgebraElement, ab: &AlgebraElement) -> Result<AdditivityReport> {
    let la = a.leading_data()?;
    let lb = b.leading_data()?;
    let (degree_ab, phi_ab, coeff_ab) = match ab.leading_data() {
        Ok(l) => (l.degree, l.phi, l.coeff),
        // A zero product is itself a violation; report it as such.
        Err(_) => (0, Word::one(), a.field().zero()),
    };
    let phi_product = la.phi.concat(&lb.phi);
    let coeff_product = &la.coeff * &lb.coeff;
    Ok(AdditivityReport {
        passed: !ab.is_zero()
            && degree_ab == la.degree + lb.degree
            && phi_ab == phi_product
            && coeff_ab == coeff_product,
        degree_a: la.degree,
        degree_b: lb.degree,
        degree_ab,
        phi_ab,
        phi_product,
        coeff_ab,
        coeff_product,
    })
}
