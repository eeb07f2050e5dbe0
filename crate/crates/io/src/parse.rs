//! Exact parsing of weights and facet orders.

use wcx_core::perm::Permutation;
use wcx_core::weight::{Rat, WeightVector};

use crate::{IoError, IoResult};

/// Parses one rational: an optionally signed integer or `p/q`.
/// Decimal points are rejected; all arithmetic downstream is exact.
pub fn parse_rat(token: &str) -> IoResult<Rat> {
    let token = token.trim();
    if token.is_empty() {
        return Err(IoError::Parse("empty weight entry".into()));
    }
    if token.contains('.') {
        return Err(IoError::Parse(format!(
            "'{token}' looks like a float; weights are exact rationals, write p/q instead"
        )));
    }
    let (numer, denom) = match token.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (token, "1"),
    };
    let p: i64 = numer
        .parse()
        .map_err(|_| IoError::Parse(format!("'{numer}' is not an integer")))?;
    let q: i64 = denom
        .parse()
        .map_err(|_| IoError::Parse(format!("'{denom}' is not an integer")))?;
    if q == 0 {
        return Err(IoError::Parse(format!("'{token}' has a zero denominator")));
    }
    Ok(Rat::new(p, q))
}

/// Parses a comma-separated weight vector.
pub fn parse_lambda(text: &str) -> IoResult<WeightVector> {
    let entries: Vec<Rat> = text
        .split(',')
        .map(parse_rat)
        .collect::<IoResult<_>>()?;
    WeightVector::new(entries).map_err(IoError::from)
}

/// Parses a facet-order file: one permutation per line in one-line
/// notation, entries separated by commas or whitespace. Blank lines
/// and `#` comments are skipped.
pub fn parse_order_file(text: &str) -> IoResult<Vec<Permutation>> {
    let mut order = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entries: Vec<u8> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>().map_err(|_| {
                    IoError::OrderFile(format!("line {}: '{t}' is not an element", lineno + 1))
                })
            })
            .collect::<IoResult<_>>()?;
        order.push(Permutation::new(entries).map_err(|e| {
            IoError::OrderFile(format!("line {}: {e}", lineno + 1))
        })?);
    }
    if order.is_empty() {
        return Err(IoError::OrderFile("no permutations found".into()));
    }
    Ok(order)
}
