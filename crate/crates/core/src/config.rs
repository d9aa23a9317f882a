//! Defaults file: plain `key = value` lines, `#` starts a comment.
//!
//! ```text
//! j_sign = -i
//! seed = 7
//! algebra_q = 8
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::realform::JSign;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub j_sign: Option<JSign>,
    pub seed: Option<u64>,
    pub algebra_q: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Config(format!("line {}: {msg}", n + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            let value = value.trim().trim_matches('"');
            match key.trim() {
                "j_sign" | "j" => cfg.j_sign = Some(value.parse().map_err(|e: Error| err(e.to_string()))?),
                "seed" => cfg.seed = Some(value.parse().map_err(|_| err(format!("bad seed {value:?}")))?),
                "algebra_q" => cfg.algebra_q = Some(value.parse().map_err(|_| err(format!("bad algebra_q {value:?}")))?),
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = Config::parse("# defaults\nj_sign = +i\nseed = 42  # fixed\n\nalgebra_q = \"6\"\n").unwrap();
        assert_eq!(cfg, Config { j_sign: Some(JSign::PlusI), seed: Some(42), algebra_q: Some(6) });
    }

    #[test]
    fn rejects_garbage() {
        assert!(Config::parse("seed 4").is_err());
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("j_sign = 2i").is_err());
    }
}
