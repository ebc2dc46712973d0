use std::fs;

use crate::error::{Error, Result};

/// Environment variable holding the default seed.
pub const SEED_ENV: &str = "COPROD_SEED";

/// Settings read from a config file of `key = value` lines. Blank lines and
/// lines starting with `#` are ignored; keys may use `-` or `_`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub field: Option<String>,
    pub seed: Option<u64>,
    pub format: Option<String>,
    pub max_degree: Option<usize>,
    pub trials: Option<usize>,
    pub lemma: Option<String>,
}

impl FileConfig {
    pub fn load(path: &str) -> Result<FileConfig> {
        let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read `{path}`: {e}")))?;
        FileConfig::parse(&text)
    }

    pub fn parse(text: &str) -> Result<FileConfig> {
        let mut cfg = FileConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Config(format!("line {}: {msg}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected `key = value`"))?;
            let (key, value) = (key.trim().replace('-', "_"), value.trim().to_string());
            let num = |v: &str| v.parse::<usize>().map_err(|_| bad(&format!("`{v}` is not a number")));
            match key.as_str() {
                "nx" => cfg.nx = Some(num(&value)?),
                "ny" => cfg.ny = Some(num(&value)?),
                "max_degree" => cfg.max_degree = Some(num(&value)?),
                "trials" => cfg.trials = Some(num(&value)?),
                "seed" => cfg.seed = Some(value.parse().map_err(|_| bad(&format!("`{value}` is not a seed")))?),
                "field" => cfg.field = Some(value),
                "format" => cfg.format = Some(value),
                "lemma" => cfg.lemma = Some(value),
                other => return Err(bad(&format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }
}
