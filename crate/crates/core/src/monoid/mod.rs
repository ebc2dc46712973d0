//! The coproduct monoid of a free monoid and a free commutative monoid.
//!
//! Elements are words in noncommuting letters `X` and commuting letters `Y`
//! where only adjacent commuting letters may be swapped.

mod alphabet;
mod factor;
mod projection;
mod word;

pub use alphabet::{Alphabet, Letter};
pub use factor::{count_words, enumerate_words, enumerate_words_up_to, left_factorizations};
pub use projection::{project, Projection, ProjectionIndex, ProjectionKind};
pub use word::{CommBlock, Decomposition, EquivKey, Word, WordDisplay};
