//! Optional `key = value` config file. Command-line flags override it; it
//! overrides the library defaults.

use std::path::Path;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CliConfig {
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub max_level: Option<usize>,
    pub max_nodes: Option<usize>,
    pub format: Option<String>,
    pub seed: Option<u64>,
    pub output: Option<String>,
}

fn value<T: std::str::FromStr>(key: &str, raw: &str, line: usize) -> Result<T, String> {
    raw.parse()
        .map_err(|_| format!("config line {line}: bad value `{raw}` for `{key}`"))
}

impl CliConfig {
    /// Blank lines and `#` comments are skipped; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Self::default();
        for (i, line) in text.lines().enumerate() {
            let n = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {n}: expected key = value"))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "rel_tol" => cfg.rel_tol = Some(value(k, v, n)?),
                "abs_tol" => cfg.abs_tol = Some(value(k, v, n)?),
                "max_level" => cfg.max_level = Some(value(k, v, n)?),
                "max_nodes" => cfg.max_nodes = Some(value(k, v, n)?),
                "format" => cfg.format = Some(v.to_owned()),
                "seed" => cfg.seed = Some(value(k, v, n)?),
                "output" => cfg.output = Some(v.to_owned()),
                _ => return Err(format!("config line {n}: unknown key `{k}`")),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text)
    }
}
