use super::alphabet::Alphabet;
use super::word::{CommBlock, Word};
use crate::error::{Error, Result};

/// All pairs `(v, w)` with `v·w = u` and `|v| = n`.
///
/// With `u = B0 a1 B1 ... ak Bk`, the cut falls inside exactly one block `Bj`:
/// `v = B0 a1 ... aj B'` for a sub-monomial `B'` of `Bj`, and `w` is the rest.
/// Within a block, `B'` runs over exponent vectors in lexicographic order.
pub fn left_factorizations(u: &Word, n: usize) -> Result<Vec<(Word, Word)>> {
    let length = u.len();
    if n > length {
        return Err(Error::LengthOutOfRange {
            requested: n,
            length,
        });
    }
    let tail = u.tail();
    let mut out = Vec::new();
    // Length of B0 a1 ... aj, i.e. everything before block j.
    let mut before = 0usize;
    for j in 0..=tail.len() {
        let block = if j == 0 { u.lead() } else { &tail[j - 1].1 };
        if n >= before && n - before <= block.size() {
            for head in block.divisors_of_size(n - before) {
                let rest = block.checked_div(&head).expect("divisor");
                let v = if j == 0 {
                    head.to_word()
                } else {
                    let mut vt = tail[..j].to_vec();
                    vt[j - 1].1 = head;
                    Word::from_parts(u.lead().clone(), vt)
                };
                let w = Word::from_parts(rest, tail[j..].to_vec());
                out.push((v, w));
            }
        }
        before += block.size() + 1;
    }
    Ok(out)
}

/// Every word of length `n` over the alphabet, each once, in ascending total
/// order.
pub fn enumerate_words(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    words_into(alphabet, n, &mut out);
    out.sort();
    out
}

/// All words of length at most `n`, ascending.
pub fn enumerate_words_up_to(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|k| enumerate_words(alphabet, k)).collect()
}

/// Number of words of length `n`, without materializing them.
pub fn count_words(alphabet: &Alphabet, n: usize) -> u128 {
    // a(n) = |blocks of size n| + sum_{s<n} |blocks of size s| * nx * a(n-s-1)
    let ny = alphabet.num_commuting() as u128;
    let nx = alphabet.num_noncommuting() as u128;
    let blocks = |s: usize| -> u128 {
        if ny == 0 {
            return (s == 0) as u128;
        }
        // C(s + ny - 1, ny - 1)
        let mut c = 1u128;
        for i in 1..ny {
            c = c * (s as u128 + i) / i;
        }
        c
    };
    let mut a = vec![0u128; n + 1];
    for m in 0..=n {
        let mut total = blocks(m);
        for s in 0..m {
            total += blocks(s) * nx * a[m - s - 1];
        }
        a[m] = total;
    }
    a[n]
}

fn words_into(alphabet: &Alphabet, n: usize, out: &mut Vec<Word>) {
    // word = B0 (pure, if |B0| = n) or B0 · x · rest with |rest| = n - |B0| - 1
    let ny = alphabet.num_commuting();
    let nx = alphabet.num_noncommuting() as u16;
    for s in 0..=n {
        for block in CommBlock::all_of_size(ny, s) {
            if s == n {
                out.push(block.to_word());
                continue;
            }
            let mut rest = Vec::new();
            words_into(alphabet, n - s - 1, &mut rest);
            for x in 0..nx {
                let head = Word::from_parts(block.clone(), vec![(x, CommBlock::empty())]);
                out.extend(rest.iter().map(|r| head.concat(r)));
            }
        }
    }
}
