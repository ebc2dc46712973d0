//! Executable statements about supports, prefixes and suffixes of commuting
//! elements.
//!
//! Each `*_on` function takes the hypotheses as algebra elements and the
//! conclusion's data (supports, leading terms, factorizations) as separate
//! evidence. Campaigns pass honestly computed evidence; negative controls
//! pass corrupted evidence and expect a failure.

use std::collections::BTreeSet;

use crate::algebra::AlgebraElement;
use crate::centralizer::additivity_report;
use crate::error::Result;
use crate::monoid::Word;
use crate::verify::report::Outcome;

fn prefix_word(w: &Word) -> Word {
    w.prefix().to_word()
}

fn suffix_word(w: &Word) -> Word {
    w.suffix().to_word()
}

fn in_class<'a>(support: &'a BTreeSet<Word>, w: &'a Word) -> impl Iterator<Item = &'a Word> + 'a {
    support.iter().filter(move |v| v.equivalent(w))
}

fn prefix_set<'a>(words: impl Iterator<Item = &'a Word>) -> BTreeSet<Word> {
    words.map(prefix_word).collect()
}

fn suffix_set<'a>(words: impl Iterator<Item = &'a Word>) -> BTreeSet<Word> {
    words.map(suffix_word).collect()
}

fn show(words: &BTreeSet<Word>) -> String {
    let items: Vec<String> = words.iter().map(Word::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// Checks the factorization statements for the length-`n` left
/// factorizations `pairs` of `u`: equal lengths, `v ~ v'` and `w ~ w'`,
/// equal prefixes of non-pure left factors, equal suffixes of non-pure right
/// factors, `s(v) p(w) = s(v') p(w')`, and finally that every pair
/// multiplies to `u`.
pub fn factorization_on(u: &Word, n: usize, pairs: &[(Word, Word)]) -> Outcome {
    for (v, w) in pairs {
        if v.len() != n || v.len() + w.len() != u.len() {
            return Outcome::Fail(format!("({v}, {w}) does not split a length-{} word at {n}", u.len()));
        }
    }
    for (i, (v, w)) in pairs.iter().enumerate() {
        for (v2, w2) in &pairs[i + 1..] {
            let pair = || format!("({v}, {w}) and ({v2}, {w2})");
            if !v.equivalent(v2) || !w.equivalent(w2) {
                return Outcome::Fail(format!("{}: factors are not equivalent", pair()));
            }
            if !v.is_pure() && v.prefix() != v2.prefix() {
                return Outcome::Fail(format!("{}: non-pure left factors have different prefixes", pair()));
            }
            if !w.is_pure() && w.suffix() != w2.suffix() {
                return Outcome::Fail(format!("{}: non-pure right factors have different suffixes", pair()));
            }
            let inner = suffix_word(v).concat(&prefix_word(w));
            let inner2 = suffix_word(v2).concat(&prefix_word(w2));
            if inner != inner2 {
                return Outcome::Fail(format!("{}: s(v)p(w) = {inner} but s(v')p(w') = {inner2}", pair()));
            }
        }
    }
    for (v, w) in pairs {
        if v.concat(w) != *u {
            return Outcome::Fail(format!("({v}, {w}) multiplies to {}, not {u}", v.concat(w)));
        }
    }
    Outcome::Pass
}

/// Which maximality condition a selected support word satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Maximal over the whole `~`-class within the support.
    WholeClass,
    /// Non-pure and maximal among class members sharing the fixed end
    /// (the prefix for a left factor, the suffix for a right factor).
    SharedEnd,
}

/// Whether `x` satisfies a maximality condition for left factors in `a`:
/// `s(x)` maximal among suffixes in `supp_x a`, or `x` non-pure and `s(x)`
/// maximal among suffixes of class members with prefix `p(x)`.
pub fn left_maximal(a: &AlgebraElement, x: &Word) -> Option<Branch> {
    let support = a.support();
    let class: Vec<&Word> = in_class(&support, x).collect();
    let sx = suffix_word(x);
    if class.iter().all(|w| suffix_word(w) <= sx) {
        return Some(Branch::WholeClass);
    }
    let shared = class.iter().filter(|w| w.prefix() == x.prefix());
    if !x.is_pure() && shared.clone().all(|w| suffix_word(w) <= sx) {
        return Some(Branch::SharedEnd);
    }
    None
}

/// Mirror image of [`left_maximal`] for right factors in `b`.
pub fn right_maximal(b: &AlgebraElement, y: &Word) -> Option<Branch> {
    let support = b.support();
    let class: Vec<&Word> = in_class(&support, y).collect();
    let py = prefix_word(y);
    if class.iter().all(|w| prefix_word(w) <= py) {
        return Some(Branch::WholeClass);
    }
    let shared = class.iter().filter(|w| w.suffix() == y.suffix());
    if !y.is_pure() && shared.clone().all(|w| prefix_word(w) <= py) {
        return Some(Branch::SharedEnd);
    }
    None
}

/// From the class of `x0` in `supp a`, the word with the largest suffix
/// (restricted to words with prefix `p(x0)` for [`Branch::SharedEnd`]).
/// Ties go to the largest word.
pub fn select_left(a: &AlgebraElement, x0: &Word, branch: Branch) -> Option<Word> {
    let support = a.support();
    in_class(&support, x0)
        .filter(|w| branch == Branch::WholeClass || w.prefix() == x0.prefix())
        .max_by(|u, v| suffix_word(u).cmp(&suffix_word(v)).then_with(|| u.cmp(v)))
        .cloned()
}

/// Mirror image of [`select_left`]: the largest prefix, restricted to words
/// with suffix `s(y0)` for [`Branch::SharedEnd`].
pub fn select_right(b: &AlgebraElement, y0: &Word, branch: Branch) -> Option<Word> {
    let support = b.support();
    in_class(&support, y0)
        .filter(|w| branch == Branch::WholeClass || w.suffix() == y0.suffix())
        .max_by(|u, v| prefix_word(u).cmp(&prefix_word(v)).then_with(|| u.cmp(v)))
        .cloned()
}

/// For homogeneous `a`, `b` and support words `x`, `y` meeting the
/// maximality conditions, checks that `xy` lies in `supp_ab`, the claimed
/// support of `ab`.
pub fn product_support_on(
    a: &AlgebraElement,
    b: &AlgebraElement,
    x: &Word,
    y: &Word,
    supp_ab: &BTreeSet<Word>,
) -> Outcome {
    if a.is_zero() || b.is_zero() || !a.is_homogeneous() || !b.is_homogeneous() {
        return Outcome::NotApplicable("factors must be nonzero and homogeneous".into());
    }
    if a.coefficient(x).is_zero() || b.coefficient(y).is_zero() {
        return Outcome::NotApplicable(format!("{x} or {y} is not in the support"));
    }
    if left_maximal(a, x).is_none() {
        return Outcome::NotApplicable(format!("the suffix of {x} is not maximal"));
    }
    if right_maximal(b, y).is_none() {
        return Outcome::NotApplicable(format!("the prefix of {y} is not maximal"));
    }
    let xy = x.concat(y);
    Outcome::require(supp_ab.contains(&xy), || format!("{xy} is missing from supp ab = {}", show(supp_ab)))
}

fn commuting_equal_degree(a: &AlgebraElement, b: &AlgebraElement) -> Result<Option<String>> {
    if a.is_zero() || b.is_zero() {
        return Ok(Some("elements must be nonzero".into()));
    }
    if a.total_degree() != b.total_degree() {
        return Ok(Some(format!(
            "degrees differ: {} and {}",
            a.total_degree(),
            b.total_degree()
        )));
    }
    if !a.commutes(b)? {
        return Ok(Some("elements do not commute".into()));
    }
    Ok(None)
}

/// For commuting homogeneous `a`, `b` of equal degree and a non-pure
/// `v0 ∈ supp a`, checks on the supplied supports that both class supports
/// of `v0` are nonempty and carry the same prefixes and the same suffixes.
pub fn prefix_suffix_transfer_on(
    a: &AlgebraElement,
    b: &AlgebraElement,
    v0: &Word,
    supp_a: &BTreeSet<Word>,
    supp_b: &BTreeSet<Word>,
) -> Result<Outcome> {
    if let Some(reason) = commuting_equal_degree(a, b)? {
        return Ok(Outcome::NotApplicable(reason));
    }
    if !a.is_homogeneous() || !b.is_homogeneous() {
        return Ok(Outcome::NotApplicable("elements must be homogeneous".into()));
    }
    if v0.is_pure() || a.coefficient(v0).is_zero() {
        return Ok(Outcome::NotApplicable(format!("{v0} is not a non-pure support word of a")));
    }
    let ca: BTreeSet<Word> = in_class(supp_a, v0).cloned().collect();
    let cb: BTreeSet<Word> = in_class(supp_b, v0).cloned().collect();
    if ca.is_empty() || cb.is_empty() {
        return Ok(Outcome::Fail(format!(
            "empty class support: supp_v0 a = {}, supp_v0 b = {}",
            show(&ca),
            show(&cb)
        )));
    }
    let (pa, pb) = (prefix_set(ca.iter()), prefix_set(cb.iter()));
    if pa != pb {
        return Ok(Outcome::Fail(format!("prefix sets differ: {} vs {}", show(&pa), show(&pb))));
    }
    let (sa, sb) = (suffix_set(ca.iter()), suffix_set(cb.iter()));
    Ok(Outcome::require(sa == sb, || {
        format!("suffix sets differ: {} vs {}", show(&sa), show(&sb))
    }))
}

/// Whether the leading-term proportionality statement applies to `(a, b)`:
/// one of them is not top-pure, or both are top-pure and `b` is non-pure.
pub fn proportionality_applies(a: &AlgebraElement, b: &AlgebraElement) -> Result<bool> {
    let (fa, fb) = (a.purity_flags()?, b.purity_flags()?);
    Ok(!fa.is_top_pure || !fb.is_top_pure || !fb.is_pure)
}

/// The scalar `λ` with `lt_a = λ lt_b`, if one exists.
pub fn leading_ratio(lt_a: &AlgebraElement, lt_b: &AlgebraElement) -> Option<crate::field::FieldValue> {
    let lb = lt_b.leading_data().ok()?;
    let lambda = &lt_a.coefficient(&lb.phi) * &lb.coeff.inv().ok()?;
    (*lt_a == lt_b.scale(&lambda)).then_some(lambda)
}

/// For commuting `a`, `b` of equal degree to which the statement applies,
/// checks that the supplied leading terms are proportional.
pub fn leading_proportionality_on(
    a: &AlgebraElement,
    b: &AlgebraElement,
    lt_a: &AlgebraElement,
    lt_b: &AlgebraElement,
) -> Result<Outcome> {
    if let Some(reason) = commuting_equal_degree(a, b)? {
        return Ok(Outcome::NotApplicable(reason));
    }
    if !proportionality_applies(a, b)? {
        return Ok(Outcome::NotApplicable("both top-pure and b pure".into()));
    }
    Ok(Outcome::require(leading_ratio(lt_a, lt_b).is_some(), || {
        format!("leading terms {lt_a} and {lt_b} are not proportional")
    }))
}

/// For commuting, equal-degree, top-pure `a`, `b` with `b` non-pure, checks
/// on the supplied supports: `a` is non-pure; with `ℓ` the largest length of
/// a non-pure word of `b`, `a` has a non-pure word of length `ℓ` and none
/// longer; every non-pure length-`ℓ` word `w` of `b` has the same prefix
/// set in `supp_w a` as in `supp_w b`.
pub fn purity_profile_on(
    a: &AlgebraElement,
    b: &AlgebraElement,
    supp_a: &BTreeSet<Word>,
    supp_b: &BTreeSet<Word>,
) -> Result<Outcome> {
    if let Some(reason) = commuting_equal_degree(a, b)? {
        return Ok(Outcome::NotApplicable(reason));
    }
    let (fa, fb) = (a.purity_flags()?, b.purity_flags()?);
    if !fa.is_top_pure || !fb.is_top_pure || fb.is_pure {
        return Ok(Outcome::NotApplicable("needs both top-pure and b non-pure".into()));
    }
    let non_pure_lengths = |s: &BTreeSet<Word>| -> BTreeSet<usize> {
        s.iter().filter(|w| !w.is_pure()).map(Word::len).collect()
    };
    let la = non_pure_lengths(supp_a);
    let Some(&ell) = non_pure_lengths(supp_b).last() else {
        return Ok(Outcome::Fail("b has no non-pure support word".into()));
    };
    if la.is_empty() {
        return Ok(Outcome::Fail("a is pure".into()));
    }
    if !la.contains(&ell) {
        return Ok(Outcome::Fail(format!("a is {ell}-pure but b is not")));
    }
    if let Some(m) = la.iter().find(|&&m| m > ell) {
        return Ok(Outcome::Fail(format!("a is not {m}-pure although b is m-pure above {ell}")));
    }
    for w in supp_b.iter().filter(|w| !w.is_pure() && w.len() == ell) {
        let pa = prefix_set(in_class(supp_a, w));
        let pb = prefix_set(in_class(supp_b, w));
        if pa != pb {
            return Ok(Outcome::Fail(format!(
                "prefix sets in the class of {w} differ: {} vs {}",
                show(&pa),
                show(&pb)
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Checks that `basis` is exactly the normalized element `a`, i.e. that the
/// homogeneous commutant of a non-pure homogeneous `a` in its own degree is
/// the line through `a`. Every basis element must commute with `a`.
pub fn commutant_proportionality_on(a: &AlgebraElement, basis: &[AlgebraElement]) -> Result<Outcome> {
    if a.is_zero() || !a.is_homogeneous() || a.is_pure() {
        return Ok(Outcome::NotApplicable("a must be nonzero, homogeneous and non-pure".into()));
    }
    for e in basis {
        if !e.commutes(a)? {
            return Ok(Outcome::Fail(format!("basis element {e} does not commute with a")));
        }
    }
    let expected = a.normalized()?;
    Ok(Outcome::require(basis.len() == 1 && basis[0] == expected, || {
        let items: Vec<String> = basis.iter().map(|e| e.to_string()).collect();
        format!("commutant basis [{}] is not the line through {expected}", items.join("; "))
    }))
}

/// Checks degree additivity and multiplicativity of leading words and
/// coefficients for nonzero `a`, `b` against the supplied product `ab`.
pub fn additivity_on(a: &AlgebraElement, b: &AlgebraElement, ab: &AlgebraElement) -> Result<Outcome> {
    if a.is_zero() || b.is_zero() {
        return Ok(Outcome::NotApplicable("factors must be nonzero".into()));
    }
    let r = additivity_report(a, b, ab)?;
    Ok(Outcome::require(r.passed, || {
        format!(
            "d(a) = {}, d(b) = {}, d(ab) = {}; phi(ab) = {}, phi(a)phi(b) = {}; c(ab) = {}, c(a)c(b) = {}",
            r.degree_a, r.degree_b, r.degree_ab, r.phi_ab, r.phi_product, r.coeff_ab, r.coeff_product
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{parse_element, parse_word};
    use crate::field::FieldSpec;
    use crate::monoid::{left_factorizations, Alphabet};
    use std::sync::Arc;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn alpha(nx: usize, ny: usize) -> Arc<Alphabet> {
        Arc::new(Alphabet::standard(nx, ny))
    }

    fn el(a: &Arc<Alphabet>, text: &str) -> AlgebraElement {
        parse_element(a, Q, text).unwrap()
    }

    fn wd(a: &Arc<Alphabet>, text: &str) -> Word {
        parse_word(a, text).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let a = alpha(2, 2);
        let u = wd(&a, "x1*y1*y2*x1");
        let pairs = left_factorizations(&u, 2).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(factorization_on(&u, 2, &pairs), Outcome::Pass);
        let u = wd(&a, "y1*x1*y2");
        let pairs = left_factorizations(&u, 2).unwrap();
        assert_eq!(pairs, vec![(wd(&a, "y1*x1"), wd(&a, "y2"))]);
        assert_eq!(factorization_on(&u, 2, &pairs), Outcome::Pass);
        let u = wd(&a, "y1^2*y2");
        assert_eq!(factorization_on(&u, 1, &left_factorizations(&u, 1).unwrap()), Outcome::Pass);
    }

    #[test]
    fn factorization_detects_bad_pairs() {
        let a = alpha(2, 2);
        let u = wd(&a, "x1*y1*y2*x1");
        let mut pairs = left_factorizations(&u, 2).unwrap();
        pairs.push((wd(&a, "y1*x1"), wd(&a, "y2*x1")));
        assert!(factorization_on(&u, 2, &pairs).is_fail());
        let wrong_product = vec![(wd(&a, "x1*y1"), wd(&a, "y1*x1"))];
        assert!(factorization_on(&u, 2, &wrong_product).is_fail());
        assert!(factorization_on(&u, 1, &left_factorizations(&u, 2).unwrap()).is_fail());
    }

    #[test]
    fn product_support_examples() {
        let al = alpha(1, 2);
        let a = el(&al, "x1*y1 + x1*y2");
        let b = el(&al, "y1*x1 - y2*x1");
        let supp = a.multiply(&b).unwrap().support();
        let (x, y) = (wd(&al, "x1*y1"), wd(&al, "y1*x1"));
        assert_eq!(left_maximal(&a, &x), Some(Branch::WholeClass));
        assert_eq!(right_maximal(&b, &y), Some(Branch::WholeClass));
        assert_eq!(product_support_on(&a, &b, &x, &y, &supp), Outcome::Pass);
        // x1*y2 has the smaller suffix, so the statement says nothing about it.
        let x2 = wd(&al, "x1*y2");
        assert!(matches!(product_support_on(&a, &b, &x2, &y, &supp), Outcome::NotApplicable(_)));
        let x1 = el(&al, "x1");
        let sq = x1.multiply(&x1).unwrap().support();
        assert_eq!(product_support_on(&x1, &x1, &wd(&al, "x1"), &wd(&al, "x1"), &sq), Outcome::Pass);
        let mut damaged = supp.clone();
        damaged.remove(&wd(&al, "x1*y1^2*x1"));
        assert!(product_support_on(&a, &b, &x, &y, &damaged).is_fail());
    }

    #[test]
    fn selectors_meet_the_conditions() {
        let al = alpha(2, 2);
        let a = el(&al, "y1*x1*y2 + y2*x1*y1 + y2*x1*y2 + 3*y1*x1*y1");
        let x0 = wd(&al, "y2*x1*y2");
        let x = select_left(&a, &x0, Branch::WholeClass).unwrap();
        assert_eq!(x, wd(&al, "y1*x1*y1"));
        assert!(left_maximal(&a, &x).is_some());
        let x = select_left(&a, &x0, Branch::SharedEnd).unwrap();
        assert_eq!(x.prefix(), x0.prefix());
        assert_eq!(left_maximal(&a, &x), Some(Branch::WholeClass));
        let y = select_right(&a, &wd(&al, "y1*x1*y2"), Branch::SharedEnd).unwrap();
        assert_eq!(y, wd(&al, "y1*x1*y2"));
        assert!(right_maximal(&a, &y).is_some());
    }

    #[test]
    fn shared_end_branch_only() {
        // y1*x1*y2 is not suffix-maximal in its class, but it is among the
        // class members with prefix y1.
        let al = alpha(1, 2);
        let a = el(&al, "y1*x1*y2 + y2*x1*y1");
        assert_eq!(left_maximal(&a, &wd(&al, "y1*x1*y2")), Some(Branch::SharedEnd));
        assert_eq!(left_maximal(&a, &wd(&al, "y2*x1*y1")), Some(Branch::WholeClass));
        let p = el(&al, "y1*y2 + y1^2");
        assert_eq!(left_maximal(&p, &wd(&al, "y1*y2")), None);
    }

    #[test]
    fn transfer_examples() {
        let al = alpha(1, 2);
        let a = el(&al, "x1*y1 + x1*y2");
        let v0 = wd(&al, "x1*y1");
        assert_eq!(
            prefix_suffix_transfer_on(&a, &a, &v0, &a.support(), &a.support()).unwrap(),
            Outcome::Pass
        );
        let b = a.scale(&Q.from_i64(-3));
        assert_eq!(
            prefix_suffix_transfer_on(&a, &b, &v0, &a.support(), &b.support()).unwrap(),
            Outcome::Pass
        );
        let mut short = b.support();
        short.remove(&wd(&al, "x1*y2"));
        assert!(prefix_suffix_transfer_on(&a, &b, &v0, &a.support(), &short).unwrap().is_fail());
        let y1 = el(&al, "y1");
        assert!(matches!(
            prefix_suffix_transfer_on(&a, &y1, &v0, &a.support(), &y1.support()).unwrap(),
            Outcome::NotApplicable(_)
        ));
        let c = el(&al, "y1*x1");
        assert!(matches!(
            prefix_suffix_transfer_on(&a, &c, &v0, &a.support(), &c.support()).unwrap(),
            Outcome::NotApplicable(_)
        ));
    }

    #[test]
    fn proportionality_examples() {
        let al = alpha(2, 2);
        let u = el(&al, "x1 + y1");
        let a = u.pow(2);
        let b = a.scale(&Q.from_i64(2));
        let (lta, ltb) = (a.leading_term(), b.leading_term());
        assert_eq!(leading_ratio(&lta, &ltb), Some(Q.ratio(&1.into(), &2.into()).unwrap()));
        assert_eq!(leading_proportionality_on(&a, &b, &lta, &ltb).unwrap(), Outcome::Pass);
        let t = el(&al, "y1^2 + x1");
        assert_eq!(
            leading_proportionality_on(&t, &t, &t.leading_term(), &t.leading_term()).unwrap(),
            Outcome::Pass
        );
        let p = el(&al, "y1");
        let q = el(&al, "y2");
        assert!(matches!(
            leading_proportionality_on(&p, &q, &p, &q).unwrap(),
            Outcome::NotApplicable(_)
        ));
        let bad = el(&al, "x1^2 + x1*y1");
        assert!(leading_proportionality_on(&a, &b, &bad, &ltb).unwrap().is_fail());
    }

    #[test]
    fn purity_profile_examples() {
        let al = alpha(1, 1);
        let a = el(&al, "y1^2 + x1");
        assert_eq!(purity_profile_on(&a, &a, &a.support(), &a.support()).unwrap(), Outcome::Pass);
        let a = el(&al, "y1^3 + y1*x1 + x1*y1");
        assert_eq!(purity_profile_on(&a, &a, &a.support(), &a.support()).unwrap(), Outcome::Pass);
        let mut short = a.support();
        short.remove(&wd(&al, "x1*y1"));
        assert!(purity_profile_on(&a, &a, &short, &a.support()).unwrap().is_fail());
        let not_top = el(&al, "x1^2 + y1");
        assert!(matches!(
            purity_profile_on(&not_top, &not_top, &not_top.support(), &not_top.support()).unwrap(),
            Outcome::NotApplicable(_)
        ));
    }

    #[test]
    fn commutant_and_additivity_examples() {
        let al = alpha(1, 2);
        let a = el(&al, "2*x1*y1 + 2*x1*y2");
        let n = a.normalized().unwrap();
        assert_eq!(commutant_proportionality_on(&a, &[n.clone()]).unwrap(), Outcome::Pass);
        assert!(commutant_proportionality_on(&a, &[n.clone(), el(&al, "y1^2")]).unwrap().is_fail());
        let b = el(&al, "y1*x1 - y2*x1");
        let ab = a.multiply(&b).unwrap();
        assert_eq!(additivity_on(&a, &b, &ab).unwrap(), Outcome::Pass);
        let phi = ab.leading_data().unwrap().phi;
        let damaged = &ab - &AlgebraElement::monomial(al.clone(), Q, phi, ab.leading_data().unwrap().coeff).unwrap();
        assert!(additivity_on(&a, &b, &damaged).unwrap().is_fail());
    }
}
