//! Randomized verification of the extended beta, hypergeometric and Whittaker
//! identities. Each suite samples a parameter domain with a seeded generator,
//! evaluates both sides of an identity and reports the worst relative deviation.
//!
//! Reports are deterministic for a fixed seed: sampling is serial, evaluation
//! is parallel but collected in sample order, and `runtime_ms` stays 0 unless
//! timing is requested.

pub mod domain;
pub mod error;
pub mod fd;
pub mod report;
pub mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

pub use domain::{Axis, ParameterDomain, Point};
pub use error::{Error, Result};
pub use report::{rel_dev, write_csv, write_json, write_plain, IdentityReport, SampleRecord};
pub use suites::{lookup, RunConfig, SuiteInfo, CATALOGUE};

/// FNV-1a, so each suite draws from its own stream under a shared seed.
fn suite_hash(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn records(id: &str, point: &Point, cfg: &RunConfig) -> Vec<SampleRecord> {
    let base: BTreeMap<String, Value> = point.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
    match suites::evaluate(id, point, cfg) {
        Ok(rows) => rows
            .into_iter()
            .map(|r| {
                let mut pt = base.clone();
                pt.insert("check".to_owned(), Value::from(r.check));
                for (k, v) in r.extra {
                    pt.insert(k.to_owned(), v);
                }
                SampleRecord {
                    point: pt,
                    lhs: Some(r.lhs),
                    rhs: Some(r.rhs),
                    rel_dev: rel_dev(r.lhs, r.rhs),
                }
            })
            .collect(),
        Err(e) => {
            log::warn!("{id}: evaluation failed at {point:?}: {e}");
            let mut pt = base;
            pt.insert("check".to_owned(), Value::from("evaluation"));
            pt.insert("error".to_owned(), Value::from(e.to_string()));
            vec![SampleRecord {
                point: pt,
                lhs: None,
                rhs: None,
                rel_dev: None,
            }]
        }
    }
}

/// Runs one suite on `n` sampled points.
pub fn run_suite(id: &str, n: usize, seed: u64, cfg: &RunConfig) -> Result<IdentityReport> {
    let info = lookup(id).ok_or_else(|| Error::UnknownSuite(id.to_owned()))?;
    let domain = suites::domain(id).ok_or_else(|| Error::UnknownSuite(id.to_owned()))?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ suite_hash(id));
    let points = domain.sample(id, n, &mut rng)?;
    let samples: Vec<SampleRecord> = points
        .par_iter()
        .map(|p| records(id, p, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut report = IdentityReport::new(id, seed, n, info.tolerance, samples);
    if cfg.timing {
        report.runtime_ms = start.elapsed().as_millis() as u64;
    }
    log::info!(
        "{id}: {} rows, max_rel_dev {:?}, {}",
        report.samples.len(),
        report.max_rel_dev,
        if report.passed { "pass" } else { "fail" }
    );
    Ok(report)
}

/// Runs the whole catalogue at default sample counts. A suite whose sampler
/// starves yields a failed report carrying the error instead of aborting the run.
pub fn run_all(seed: u64, cfg: &RunConfig) -> Vec<IdentityReport> {
    run_all_with(seed, None, cfg)
}

/// [`run_all`] with every suite drawing `samples` points instead of its default.
pub fn run_all_with(seed: u64, samples: Option<usize>, cfg: &RunConfig) -> Vec<IdentityReport> {
    CATALOGUE
        .iter()
        .map(|info| {
            let n = samples.unwrap_or(info.default_samples);
            run_suite(info.id, n, seed, cfg).unwrap_or_else(|e| {
                let point = BTreeMap::from([
                    ("check".to_owned(), Value::from("sampling")),
                    ("error".to_owned(), Value::from(e.to_string())),
                ]);
                let rec = SampleRecord {
                    point,
                    lhs: None,
                    rhs: None,
                    rel_dev: None,
                };
                IdentityReport::new(info.id, seed, n, info.tolerance, vec![rec])
            })
        })
        .collect()
}
