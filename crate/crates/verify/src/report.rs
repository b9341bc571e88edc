//! Report types and their JSON / CSV serializations.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

/// `|x - y| / max(|x|, |y|, 1e-300)`; `None` when either side is not finite.
pub fn rel_dev(x: f64, y: f64) -> Option<f64> {
    if !(x.is_finite() && y.is_finite()) {
        return None;
    }
    Some((x - y).abs() / x.abs().max(y.abs()).max(1e-300))
}

/// One compared pair. `rel_dev` is `None` when evaluation failed; the
/// failure message then sits in `point.error`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub point: BTreeMap<String, Value>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub rel_dev: Option<f64>,
}

impl SampleRecord {
    pub fn check(&self) -> Option<&str> {
        self.point.get("check").and_then(Value::as_str)
    }

    pub fn coord(&self, name: &str) -> Option<f64> {
        self.point.get(name).and_then(Value::as_f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub suite: String,
    pub seed: u64,
    pub n_samples: usize,
    pub tolerance: f64,
    /// `None` if any sample failed to evaluate.
    pub max_rel_dev: Option<f64>,
    pub passed: bool,
    pub samples: Vec<SampleRecord>,
    pub runtime_ms: u64,
}

impl IdentityReport {
    pub fn new(suite: &str, seed: u64, n_samples: usize, tolerance: f64, samples: Vec<SampleRecord>) -> Self {
        let max_rel_dev = samples
            .iter()
            .map(|s| s.rel_dev)
            .try_fold(0.0f64, |m, d| d.map(|d| m.max(d)));
        let passed = max_rel_dev.is_some_and(|m| m <= tolerance);
        Self {
            suite: suite.to_owned(),
            seed,
            n_samples,
            tolerance,
            max_rel_dev,
            passed,
            samples,
            runtime_ms: 0,
        }
    }

    /// Rows whose `check` equals `name`.
    pub fn rows<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a SampleRecord> + 'a {
        self.samples.iter().filter(move |s| s.check() == Some(name))
    }
}

pub fn write_json<W: Write>(reports: &[IdentityReport], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, reports)?;
    writeln!(out)?;
    Ok(())
}

fn point_text(point: &BTreeMap<String, Value>) -> String {
    point
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.16e}")).unwrap_or_default()
}

/// One CSV row per sample: `suite,seed,tolerance,index,point,lhs,rhs,rel_dev,within_tolerance`.
pub fn write_csv<W: Write>(reports: &[IdentityReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "suite",
        "seed",
        "tolerance",
        "index",
        "point",
        "lhs",
        "rhs",
        "rel_dev",
        "within_tolerance",
    ])?;
    for r in reports {
        for (i, s) in r.samples.iter().enumerate() {
            let ok = s.rel_dev.is_some_and(|d| d <= r.tolerance);
            w.write_record([
                r.suite.clone(),
                r.seed.to_string(),
                format!("{:e}", r.tolerance),
                i.to_string(),
                point_text(&s.point),
                opt(s.lhs),
                opt(s.rhs),
                opt(s.rel_dev),
                ok.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Human-readable summary, one line per suite.
pub fn write_plain<W: Write>(reports: &[IdentityReport], mut out: W) -> Result<()> {
    for r in reports {
        let dev = r
            .max_rel_dev
            .map_or("evaluation failed".to_owned(), |d| format!("{d:.3e}"));
        writeln!(
            out,
            "{:<28} {} max_rel_dev {} (tol {:.0e}, {} rows)",
            r.suite,
            if r.passed { "PASS" } else { "FAIL" },
            dev,
            r.tolerance,
            r.samples.len()
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(d: Option<f64>) -> SampleRecord {
        SampleRecord {
            point: BTreeMap::from([("z".to_owned(), Value::from(1.5))]),
            lhs: Some(1.0),
            rhs: Some(1.0),
            rel_dev: d,
        }
    }

    #[test]
    fn passed_iff_max_within_tolerance() {
        let r = IdentityReport::new("s", 1, 2, 1e-9, vec![rec(Some(1e-12)), rec(Some(5e-10))]);
        assert!(r.passed);
        assert_eq!(r.max_rel_dev, Some(5e-10));
        let r = IdentityReport::new("s", 1, 2, 1e-9, vec![rec(Some(1e-12)), rec(Some(2e-9))]);
        assert!(!r.passed);
        let r = IdentityReport::new("s", 1, 2, 1e-9, vec![rec(Some(1e-12)), rec(None)]);
        assert!(!r.passed && r.max_rel_dev.is_none());
    }

    #[test]
    fn rel_dev_guards_zero_and_nan() {
        assert_eq!(rel_dev(0.0, 0.0), Some(0.0));
        assert_eq!(rel_dev(f64::NAN, 1.0), None);
        assert!((rel_dev(1.0, 1.1).unwrap() - 0.1 / 1.1).abs() < 1e-16);
    }

    #[test]
    fn json_field_order_and_round_trip() {
        let r = IdentityReport::new("s", 7, 1, 1e-9, vec![rec(Some(0.0))]);
        let text = serde_json::to_string(&r).unwrap();
        let keys = [
            "\"suite\"",
            "\"seed\"",
            "\"n_samples\"",
            "\"tolerance\"",
            "\"max_rel_dev\"",
            "\"passed\"",
            "\"samples\"",
            "\"runtime_ms\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let back: IdentityReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
