//! Brute-force check that truncated centralizers are commutative, with the
//! graded-dimension and leading-term consequences used along the way.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::{AlgebraElement, Degree};
use crate::centralizer::{centralizer_basis, check_pairwise_commutes, GradedBasis};
use crate::error::Result;
use crate::monoid::CommBlock;
use crate::verify::lemmas::{leading_ratio, proportionality_applies};
use crate::verify::report::Outcome;

/// Powers `a^p` and `u^q` above this degree are not formed.
pub const POWER_DEGREE_CAP: usize = 12;

/// The smallest `(p, q)` with `p * degree_a = q * degree_u`.
pub fn power_exponents(degree_a: usize, degree_u: usize) -> (usize, usize) {
    let g = degree_a.gcd(&degree_u).max(1);
    (degree_u / g, degree_a / g)
}

fn degree(e: &AlgebraElement) -> usize {
    e.total_degree().finite().unwrap_or(0)
}

/// Checks a computed (or supplied) graded basis of the centralizer of
/// `gb.u`:
///
/// * every basis element commutes with `u` and the basis is pairwise
///   commuting;
/// * for pure `u`, the basis consists of pure elements and has as many
///   elements as there are pure words of length at most the bound;
/// * for non-pure `u`, every graded piece has dimension at most one, the
///   normalized leading term of each product of basis elements and of each
///   power of `u` equals that of the basis element of its degree, and each
///   basis element `a` has `a^p` and `u^q` of equal degree with
///   proportional leading terms.
pub fn commutativity_on(gb: &GradedBasis) -> Result<Outcome> {
    let u = &gb.u;
    let basis = &gb.cumulative;
    for e in basis {
        if !e.commutes(u)? {
            return Ok(Outcome::Fail(format!("basis element {e} does not commute with u = {u}")));
        }
    }
    let pairwise = check_pairwise_commutes(gb);
    if let Some((i, j)) = pairwise.witness {
        return Ok(Outcome::Fail(format!(
            "basis elements {} and {} do not commute",
            basis[i], basis[j]
        )));
    }
    if u.is_pure() {
        if let Some(e) = basis.iter().find(|e| !e.is_pure()) {
            return Ok(Outcome::Fail(format!("u is pure but {e} is in the centralizer")));
        }
        let ny = u.alphabet().num_commuting();
        let pure_words: usize = (0..=gb.max_degree).map(|n| CommBlock::all_of_size(ny, n).len()).sum();
        return Ok(Outcome::require(basis.len() == pure_words, || {
            format!("basis has {} elements, expected the {pure_words} pure words", basis.len())
        }));
    }
    if let Some(s) = gb.per_degree.iter().find(|s| s.dim_gr > 1) {
        return Ok(Outcome::Fail(format!(
            "falsification candidate: non-pure u = {u} has a graded piece of dimension {} in degree {}",
            s.dim_gr, s.degree
        )));
    }
    let by_degree: BTreeMap<usize, AlgebraElement> = basis
        .iter()
        .map(|e| Ok((degree(e), e.normalized()?)))
        .collect::<Result<_>>()?;
    let same_top = |e: &AlgebraElement, what: &str| -> Result<Option<Outcome>> {
        let d = degree(e);
        let Some(reference) = by_degree.get(&d) else {
            return Ok(Some(Outcome::Fail(format!(
                "{what} has degree {d} but the centralizer has no element of that degree"
            ))));
        };
        let lt = e.normalized()?.leading_term();
        if lt != reference.leading_term() {
            return Ok(Some(Outcome::Fail(format!(
                "{what} has normalized leading term {lt}, but the degree-{d} element has {}",
                reference.leading_term()
            ))));
        }
        Ok(None)
    };
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            if degree(a) + degree(b) > gb.max_degree {
                continue;
            }
            let ab = a.multiply(b)?;
            if ab.total_degree() != Degree::Finite(degree(a) + degree(b)) {
                return Ok(Outcome::Fail(format!("product of {a} and {b} is {ab}, degrees do not add")));
            }
            if let Some(fail) = same_top(&ab, &format!("({a})({b})"))? {
                return Ok(fail);
            }
        }
    }
    let du = degree(u);
    for k in 1..=gb.max_degree / du {
        if let Some(fail) = same_top(&u.pow(k as u32), &format!("u^{k}"))? {
            return Ok(fail);
        }
    }
    for a in basis.iter().filter(|a| degree(a) > 0) {
        let (p, q) = power_exponents(degree(a), du);
        if p * degree(a) > POWER_DEGREE_CAP {
            continue;
        }
        // `a` commutes with `u` (checked above), so the powers commute and
        // only the leading terms need comparing.
        let (ap, uq) = (a.pow(p as u32), u.pow(q as u32));
        if proportionality_applies(&ap, &uq)? && leading_ratio(&ap.leading_term(), &uq.leading_term()).is_none() {
            return Ok(Outcome::Fail(format!(
                "a = {a}: leading terms of a^{p} and u^{q} are not proportional"
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Computes the centralizer of `u` up to `max_degree` and runs
/// [`commutativity_on`].
pub fn commutativity_outcome(u: &AlgebraElement, max_degree: usize) -> Result<(GradedBasis, Outcome)> {
    let gb = centralizer_basis(u, max_degree)?;
    let outcome = commutativity_on(&gb)?;
    Ok((gb, outcome))
}
