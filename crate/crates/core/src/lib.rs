//! Exact computer algebra for the coproduct `k<X> * k[Y]` of a free
//! associative algebra and a polynomial algebra.
//!
//! * [`monoid`]: canonical words, prefixes and suffixes, `~`-classes,
//!   factorizations, enumeration and projections.
//! * [`order`]: a strict total order on words compatible with
//!   multiplication on both sides.
//! * [`field`]: exact coefficients (rationals and prime fields).
//! * [`algebra`]: sparse elements, products, supports, degrees and leading
//!   data.
//! * [`centralizer`]: homogeneous commutants and truncated centralizers.
//! * [`verify`]: executable checks of the support and commutation lemmas
//!   and of centralizer commutativity.
//! * [`cli`]: text syntax and the command-line front end.

pub mod algebra;
pub mod centralizer;
pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod monoid;
pub mod order;
pub mod verify;

pub use algebra::{AlgebraElement, Degree, LeadingData, PurityFlags};
pub use error::{Error, Result};
pub use field::{FieldSpec, FieldValue};
pub use monoid::{Alphabet, CommBlock, EquivKey, Letter, Word};
