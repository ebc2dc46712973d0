//! Executable checks of the support, prefix/suffix and leading-term
//! statements about commuting elements, and of centralizer commutativity.
//!
//! Checkers distinguish failure from inapplicable hypotheses; every failure
//! carries the inputs needed to replay it.

pub mod campaign;
pub mod config;
pub mod instance;
pub mod lemmas;
pub mod random;
pub mod report;
pub mod commutativity;

pub use campaign::{negative_control, product_support_exhaustive, run, Lemma};
pub use config::TrialConfig;
pub use instance::{
    check_factorization_lemma, check_instance, check_leading_proportionality, check_prefix_suffix_transfer,
    check_product_support, check_purity_profile, check_theorem, replay, Instance,
};
pub use report::{CheckReport, Outcome, Witness};
