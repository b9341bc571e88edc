//! `start:stop:count` axes for tables.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct GridError(pub String);

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for GridError {}

fn number(s: &str, what: &str) -> Result<f64, GridError> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| GridError(format!("{what}: `{s}` is not a number")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(GridError(format!("{what}: `{s}` is not finite")))
    }
}

/// Parses a single value or `start:stop:count` into the points of the axis.
/// Endpoints are included exactly.
pub fn parse_axis(spec: &str) -> Result<Vec<f64>, GridError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [x] => Ok(vec![number(x, "value")?]),
        [start, stop, count] => {
            let (start, stop) = (number(start, "start")?, number(stop, "stop")?);
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| GridError(format!("count: `{count}` is not a positive integer")))?;
            match count {
                0 => Err(GridError("count must be at least 1".into())),
                1 if start != stop => Err(GridError(format!("count 1 needs start = stop, got {start}:{stop}"))),
                1 => Ok(vec![start]),
                n => {
                    let step = (stop - start) / (n - 1) as f64;
                    Ok((0..n)
                        .map(|i| if i == n - 1 { stop } else { start + step * i as f64 })
                        .collect())
                }
            }
        }
        _ => Err(GridError(format!("`{spec}`: expected a number or start:stop:count"))),
    }
}

/// Cartesian product in lexicographic order: the last axis varies fastest.
pub fn product(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![Vec::new()], |rows, axis| {
        rows.iter()
            .flat_map(|r| {
                axis.iter().map(move |x| {
                    let mut r = r.clone();
                    r.push(*x);
                    r
                })
            })
            .collect()
    })
}
