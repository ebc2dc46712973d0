use std::sync::Arc;

use coprod::centralizer::{centralizer_basis, echelonize, homogeneous_commutant};
use coprod::cli::parse_element;
use coprod::monoid::enumerate_words;
use coprod::{AlgebraElement, Alphabet, FieldSpec};

fn el(nx: usize, ny: usize, field: FieldSpec, text: &str) -> AlgebraElement {
    parse_element(&Arc::new(Alphabet::standard(nx, ny)), field, text).unwrap()
}

fn degree(e: &AlgebraElement) -> usize {
    e.total_degree().finite().unwrap()
}

/// For homogeneous `u` the truncated centralizer is graded, so its basis in
/// each degree must span the homogeneous commutant of that degree.
#[test]
fn graded_slices_match_homogeneous_commutant() {
    let cases = [
        (1, 1, FieldSpec::Rationals, "x1"),
        (1, 1, FieldSpec::Rationals, "x1*y1"),
        (1, 2, FieldSpec::Prime(3), "x1*y1 - y2*x1"),
        (2, 1, FieldSpec::Rationals, "x1*x2 + x2*x1"),
        (2, 2, FieldSpec::Prime(2), "x1 + y2"),
        (0, 2, FieldSpec::Rationals, "y1*y2"),
        (1, 2, FieldSpec::Rationals, "y1^2"),
    ];
    for (nx, ny, field, text) in cases {
        let u = el(nx, ny, field, text);
        let gb = centralizer_basis(&u, 4).unwrap();
        for n in 0..=4 {
            let slice: Vec<_> = gb.cumulative.iter().filter(|e| degree(e) == n).cloned().collect();
            assert!(gb.cumulative.iter().all(|e| e.is_homogeneous()), "{text}");
            let direct = homogeneous_commutant(&u, n).unwrap();
            assert_eq!(echelonize(&slice), echelonize(&direct), "{text} in degree {n}");
            assert_eq!(gb.per_degree[n].dim_gr, direct.len(), "{text} in degree {n}");
        }
    }
}

#[test]
fn powers_lie_in_the_span() {
    for (nx, ny, field, text) in [
        (1, 1, FieldSpec::Rationals, "x1 + y1 + 1"),
        (2, 1, FieldSpec::Prime(3), "x1*y1 - x2"),
        (1, 2, FieldSpec::Prime(2), "y1*x1*y2 + y2"),
    ] {
        let u = el(nx, ny, field, text);
        let n = 5;
        let gb = centralizer_basis(&u, n).unwrap();
        assert_eq!(gb.per_degree[0].dim_gr, 1);
        let rank = gb.cumulative.len();
        for k in 0..=n / degree(&u) {
            let mut with_power = gb.cumulative.clone();
            with_power.push(u.pow(k as u32));
            assert_eq!(echelonize(&with_power).len(), rank, "{text}^{k}");
        }
        for e in &gb.cumulative {
            assert!(e.commutes(&u).unwrap());
        }
    }
}

/// Over GF(2) the homogeneous commutant can be found by trying every subset
/// of the words of a degree.
#[test]
fn commutant_dimension_by_exhaustion() {
    let cases = [(1, 1, "x1", 3), (1, 1, "x1*y1 + y1*x1", 2), (1, 2, "y1", 2), (1, 2, "x1*y2", 2), (2, 1, "x1 + x2", 2)];
    for (nx, ny, text, n) in cases {
        let a = Arc::new(Alphabet::standard(nx, ny));
        let field = FieldSpec::Prime(2);
        let u = parse_element(&a, field, text).unwrap();
        let words = enumerate_words(&a, n);
        assert!(words.len() <= 12);
        let mut commuting = 0u64;
        for mask in 0u32..1 << words.len() {
            let terms = words
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, w)| (w.clone(), field.one()));
            let e = AlgebraElement::from_terms(a.clone(), field, terms).unwrap();
            commuting += u64::from(e.commutes(&u).unwrap());
        }
        let dim = homogeneous_commutant(&u, n).unwrap().len();
        assert_eq!(commuting, 1 << dim, "{text} in degree {n}");
    }
}

#[test]
fn scalars_are_rejected() {
    assert!(centralizer_basis(&el(1, 1, FieldSpec::Rationals, "3"), 2).is_err());
    assert!(homogeneous_commutant(&el(1, 1, FieldSpec::Rationals, "0"), 2).is_err());
}
