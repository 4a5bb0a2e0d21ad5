//! graph6 encoding for graphs of order at most 32.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let bytes = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::InvalidChar(b));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Truncated),
        [126, 126, rest @ ..] => (read_long(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (read_long(rest, 3)?, &rest[3..]),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    if n == 0 {
        return Err(Error::BadArgument("graph6 record of order 0".into()));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Truncated);
    }
    if body.len() > need {
        return Err(Error::Parse(format!("{} trailing bytes in graph6 record", body.len() - need)));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn read_long(rest: &[u8], len: usize) -> Result<usize> {
    if rest.len() < len {
        return Err(Error::Truncated);
    }
    Ok(rest[..len].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = vec![(n + 63) as u8];
    let mut cur = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((cur << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every non-blank line of a graph6 stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}
