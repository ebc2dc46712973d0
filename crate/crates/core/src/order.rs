//! A strict total order on the coproduct monoid.
//!
//! Words are compared by length, then by the projections of
//! [`Alphabet::projection_indices`] in rank order: letter counts as naturals,
//! pair projections lexicographically in the base order. Counts and
//! projections are multiplicative and lexicographic comparison of equal-length
//! words is compatible with concatenation on both sides, so `a < b` implies
//! `ac < bc` and `ca < cb`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monoid::{Alphabet, Letter, Word};

fn counts(w: &Word) -> (Vec<u32>, Vec<u32>) {
    let mut ys = Vec::new();
    let mut xs = Vec::new();
    let add_block = |ys: &mut Vec<u32>, exps: &[u32]| {
        if ys.len() < exps.len() {
            ys.resize(exps.len(), 0);
        }
        for (c, e) in ys.iter_mut().zip(exps) {
            *c += e;
        }
    };
    add_block(&mut ys, w.lead().exponents());
    for (x, block) in w.tail() {
        let x = *x as usize;
        if xs.len() <= x {
            xs.resize(x + 1, 0);
        }
        xs[x] += 1;
        add_block(&mut ys, block.exponents());
    }
    (ys, xs)
}

/// Compares count vectors; a larger count at the first difference is larger.
fn cmp_counts(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i)
                .copied()
                .unwrap_or(0)
                .cmp(&b.get(i).copied().unwrap_or(0))
        })
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn cmp_pair(u: &Word, v: &Word, a: Letter, b: Letter) -> Ordering {
    let keep = |l: &Letter| *l == a || *l == b;
    u.letters().filter(keep).cmp(v.letters().filter(keep))
}

/// The total order on words.
pub fn compare(u: &Word, v: &Word) -> Ordering {
    if u == v {
        return Ordering::Equal;
    }
    let by_len = u.len().cmp(&v.len());
    if by_len.is_ne() {
        return by_len;
    }
    let (uy, ux) = counts(u);
    let (vy, vx) = counts(v);
    let by_count = cmp_counts(&uy, &vy).then_with(|| cmp_counts(&ux, &vx));
    if by_count.is_ne() {
        return by_count;
    }
    // Counts agree from here on, so a pair containing an absent letter has
    // equal projections and can be skipped.
    let nx = ux.len() as u16;
    let ny = uy.len() as u16;
    let present_x = |i: u16| ux[i as usize] > 0;
    let present_y = |j: u16| uy[j as usize] > 0;
    for i in (0..nx).filter(|&i| present_x(i)) {
        for j in (i + 1..nx).filter(|&j| present_x(j)) {
            let o = cmp_pair(u, v, Letter::Free(i), Letter::Free(j));
            if o.is_ne() {
                return o;
            }
        }
    }
    for i in (0..nx).filter(|&i| present_x(i)) {
        for j in (0..ny).filter(|&j| present_y(j)) {
            let o = cmp_pair(u, v, Letter::Free(i), Letter::Commuting(j));
            if o.is_ne() {
                return o;
            }
        }
    }
    unreachable!("distinct words {u} and {v} with identical projections")
}

/// [`compare`], after checking that both words are over `alphabet`.
pub fn compare_in(alphabet: &Alphabet, u: &Word, v: &Word) -> Result<Ordering> {
    if !u.is_over(alphabet) || !v.is_over(alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(compare(u, v))
}

/// The largest word of a nonempty collection.
pub fn max_word<'a>(words: impl IntoIterator<Item = &'a Word>) -> Result<Word> {
    words.into_iter().max().cloned().ok_or(Error::EmptySet)
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
