//! Projections of words onto single letters and onto dependent letter pairs.
//!
//! A word is determined by its letter counts together with its projections
//! onto every pair of letters that do not commute with each other. The
//! total order is built on top of these projections.

use std::fmt;

use super::alphabet::{Alphabet, Letter};
use super::word::Word;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjectionKind {
    Singleton(Letter),
    /// Two distinct letters, not both commuting.
    Pair(Letter, Letter),
}

impl ProjectionKind {
    pub fn pair(a: Letter, b: Letter) -> Result<Self> {
        if a == b || (a.is_commuting() && b.is_commuting()) {
            return Err(Error::IndependentPair(format!("{{{a:?}, {b:?}}}")));
        }
        Ok(ProjectionKind::Pair(a, b))
    }
}

/// A projection together with its position in the fixed enumeration used by
/// the total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjectionIndex {
    pub kind: ProjectionKind,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Projection {
    Count(u32),
    /// A word in the free monoid on the two projected letters.
    Free(Vec<Letter>),
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Projection::Count(c) => write!(f, "{c}"),
            Projection::Free(letters) if letters.is_empty() => f.write_str("1"),
            Projection::Free(letters) => {
                let names: Vec<String> = letters.iter().map(|&l| Word::letter(l).to_string()).collect();
                f.write_str(&names.join(" "))
            }
        }
    }
}

impl Alphabet {
    /// The fixed enumeration: all singletons in base order, then the
    /// noncommuting pairs `(xi, xj)` with `i < j` in lexicographic order, then
    /// the mixed pairs `(xi, yj)` ordered by `(i, j)`.
    pub fn projection_indices(&self) -> Vec<ProjectionIndex> {
        let nx = self.num_noncommuting() as u16;
        let ny = self.num_commuting() as u16;
        let singles = self.letters().map(ProjectionKind::Singleton);
        let free_pairs = (0..nx).flat_map(|i| {
            (i + 1..nx).map(move |j| ProjectionKind::Pair(Letter::Free(i), Letter::Free(j)))
        });
        let mixed_pairs = (0..nx).flat_map(|i| {
            (0..ny).map(move |j| ProjectionKind::Pair(Letter::Free(i), Letter::Commuting(j)))
        });
        singles
            .chain(free_pairs)
            .chain(mixed_pairs)
            .enumerate()
            .map(|(rank, kind)| ProjectionIndex { kind, rank })
            .collect()
    }
}

/// Occurrence count of a letter, or the subsequence of letters in a
/// dependent pair.
pub fn project(w: &Word, kind: ProjectionKind) -> Result<Projection> {
    match kind {
        ProjectionKind::Singleton(a) => {
            Ok(Projection::Count(w.letters().filter(|&l| l == a).count() as u32))
        }
        ProjectionKind::Pair(a, b) => {
            ProjectionKind::pair(a, b)?;
            Ok(Projection::Free(
                w.letters().filter(|&l| l == a || l == b).collect(),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(names: &[&str]) -> Word {
        Word::from_names(&Alphabet::standard(2, 2), names).unwrap()
    }

    const X1: Letter = Letter::Free(0);
    const X2: Letter = Letter::Free(1);
    const Y1: Letter = Letter::Commuting(0);
    const Y2: Letter = Letter::Commuting(1);

    #[test]
    fn projection_examples() {
        assert_eq!(
            project(&w(&["x1", "y1", "x1"]), ProjectionKind::pair(X1, Y1).unwrap()).unwrap(),
            Projection::Free(vec![X1, Y1, X1])
        );
        assert_eq!(
            project(&w(&["y1", "y2"]), ProjectionKind::Singleton(X1)).unwrap(),
            Projection::Count(0)
        );
        assert_eq!(
            project(&w(&["x1", "y1", "y2", "x2"]), ProjectionKind::Pair(X1, X2)).unwrap(),
            Projection::Free(vec![X1, X2])
        );
        assert!(matches!(ProjectionKind::pair(Y1, Y2), Err(Error::IndependentPair(_))));
        assert!(matches!(
            project(&Word::one(), ProjectionKind::Pair(Y2, Y1)),
            Err(Error::IndependentPair(_))
        ));
        assert!(ProjectionKind::pair(X1, X1).is_err());
    }

    #[test]
    fn enumeration_layout() {
        let idx = Alphabet::standard(2, 2).projection_indices();
        let kinds: Vec<_> = idx.iter().map(|i| i.kind).collect();
        assert_eq!(
            kinds,
            vec![
                ProjectionKind::Singleton(Y1),
                ProjectionKind::Singleton(Y2),
                ProjectionKind::Singleton(X1),
                ProjectionKind::Singleton(X2),
                ProjectionKind::Pair(X1, X2),
                ProjectionKind::Pair(X1, Y1),
                ProjectionKind::Pair(X1, Y2),
                ProjectionKind::Pair(X2, Y1),
                ProjectionKind::Pair(X2, Y2),
            ]
        );
        assert!(idx.iter().enumerate().all(|(i, p)| p.rank == i));
    }

    #[test]
    fn projections_are_multiplicative() {
        let a = Alphabet::standard(2, 2);
        let words = crate::monoid::enumerate_words_up_to(&a, 3);
        for u in &words {
            for v in &words {
                let uv = u.concat(v);
                for idx in a.projection_indices() {
                    let (pu, pv, puv) = (
                        project(u, idx.kind).unwrap(),
                        project(v, idx.kind).unwrap(),
                        project(&uv, idx.kind).unwrap(),
                    );
                    let product = match (pu, pv) {
                        (Projection::Count(c), Projection::Count(d)) => Projection::Count(c + d),
                        (Projection::Free(mut s), Projection::Free(t)) => {
                            s.extend(t);
                            Projection::Free(s)
                        }
                        _ => unreachable!(),
                    };
                    assert_eq!(puv, product);
                }
            }
        }
    }
}
