use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monoid::{count_words, Alphabet};

/// Largest alphabet size accepted on either side.
pub const MAX_LETTERS: usize = 4;

/// Parameters of a verification campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub nx: usize,
    pub ny: usize,
    pub field: FieldSpec,
    /// Bound on word lengths and element degrees.
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    /// Largest number of words of length at most `max_degree` a campaign
    /// may enumerate.
    pub word_cap: u128,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            nx: 2,
            ny: 2,
            field: FieldSpec::Rationals,
            max_degree: 4,
            trials: 200,
            seed: 0,
            word_cap: 100_000,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nx > MAX_LETTERS || self.ny > MAX_LETTERS {
            return Err(Error::Config(format!(
                "alphabet sizes must be at most {MAX_LETTERS}, got nx = {}, ny = {}",
                self.nx, self.ny
            )));
        }
        let alphabet = Alphabet::standard(self.nx, self.ny);
        let words: u128 = (0..=self.max_degree).map(|n| count_words(&alphabet, n)).sum();
        if words > self.word_cap {
            return Err(Error::Config(format!(
                "{words} words of length at most {} exceed the cap of {}",
                self.max_degree, self.word_cap
            )));
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Arc<Alphabet> {
        Arc::new(Alphabet::standard(self.nx, self.ny))
    }

    /// The generator of one trial: the master seed selects the key and the
    /// trial index the stream, so trials are independent of scheduling.
    pub fn rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}
