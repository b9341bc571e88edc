//! Sampled parameter boxes with validity predicates.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Coordinates of one sample, keyed by parameter name.
pub type Point = BTreeMap<String, f64>;

/// Consecutive rejected draws after which sampling gives up.
pub const MAX_REJECTIONS: usize = 10_000;

#[derive(Debug, Clone)]
pub enum Axis {
    /// Uniform on the closed interval.
    Uniform(f64, f64),
    /// Uniform over a finite set.
    Choice(Vec<f64>),
    Fixed(f64),
}

type Predicate = fn(&Point) -> bool;

/// Named ranges plus predicates every accepted sample must satisfy.
#[derive(Debug, Clone, Default)]
pub struct ParameterDomain {
    axes: Vec<(String, Axis)>,
    predicates: Vec<(&'static str, Predicate)>,
}

impl ParameterDomain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn uniform(mut self, name: &str, lo: f64, hi: f64) -> Self {
        self.axes.push((name.to_owned(), Axis::Uniform(lo, hi)));
        self
    }

    pub fn choice(mut self, name: &str, values: &[f64]) -> Self {
        self.axes.push((name.to_owned(), Axis::Choice(values.to_vec())));
        self
    }

    pub fn fixed(mut self, name: &str, value: f64) -> Self {
        self.axes.push((name.to_owned(), Axis::Fixed(value)));
        self
    }

    /// Adds a predicate; `label` names it in starvation errors.
    pub fn require(mut self, label: &'static str, pred: Predicate) -> Self {
        self.predicates.push((label, pred));
        self
    }

    pub fn axes(&self) -> impl Iterator<Item = (&str, &Axis)> {
        self.axes.iter().map(|(n, a)| (n.as_str(), a))
    }

    /// The first violated predicate, if any.
    pub fn violation(&self, point: &Point) -> Option<&'static str> {
        self.predicates.iter().find(|(_, p)| !p(point)).map(|(l, _)| *l)
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Point {
        self.axes
            .iter()
            .map(|(name, axis)| {
                let x = match axis {
                    Axis::Uniform(lo, hi) => rng.gen_range(*lo..=*hi),
                    Axis::Choice(v) => v[rng.gen_range(0..v.len())],
                    Axis::Fixed(x) => *x,
                };
                (name.clone(), x)
            })
            .collect()
    }

    /// Draws `n` points by rejection sampling.
    pub fn sample(&self, suite: &str, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Point>> {
        let mut out = Vec::with_capacity(n);
        let mut rejected = 0usize;
        while out.len() < n {
            let point = self.draw(rng);
            match self.violation(&point) {
                None => {
                    out.push(point);
                    rejected = 0;
                }
                Some(label) => {
                    rejected += 1;
                    if rejected > MAX_REJECTIONS {
                        return Err(Error::Starvation {
                            suite: suite.to_owned(),
                            predicate: label,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}
