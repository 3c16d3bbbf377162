//! Fixture readers shared by the integration tests.

#![allow(dead_code)]

use posetprob::ExactRational;

pub const MATRICES: &str = include_str!("../fixtures/two_row_matrices.txt");
pub const LIMITS: &str = include_str!("../fixtures/limit_table.txt");

pub fn rational(s: &str) -> ExactRational {
    match s.split_once('/') {
        Some((n, d)) => ExactRational::new(n.parse().unwrap(), d.parse().unwrap()),
        None => ExactRational::from_integer(s.parse().unwrap()),
    }
}

/// `(a, b, rows)` for each printed matrix; row `i` holds `i + 1` entries.
pub fn matrices() -> Vec<(usize, usize, Vec<Vec<ExactRational>>)> {
    let mut out: Vec<(usize, usize, Vec<Vec<ExactRational>>)> = Vec::new();
    for line in MATRICES.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(rest) = line.strip_prefix("a=") {
            let (a, b) = rest.split_once(" b=").unwrap();
            out.push((a.parse().unwrap(), b.parse().unwrap(), Vec::new()));
        } else {
            let row = line.split_whitespace().map(rational).collect();
            out.last_mut().unwrap().2.push(row);
        }
    }
    out
}

/// `(a, b, limit)` triples.
pub fn limits() -> Vec<(usize, usize, ExactRational)> {
    LIMITS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), rational(f[2]))
        })
        .collect()
}
