//! graph6 encoding.
//!
//! Layout: one size byte `chr(n + 63)` (every supported order is below 63),
//! then the upper triangle `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six
//! bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push((n as u8) + 63);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decode one graph6 line. A leading `>>graph6<<` header and trailing
/// newline are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "malformed character {:?} at offset {pos}",
            bytes[pos] as char
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        // '~' introduces an order of 63 or more
        let n = if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
        } else {
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
        };
        return Err(Error::Capacity(n));
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    let need = body_len(n);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated body: expected {need} bytes for n={n}, got {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "trailing data: expected {need} bytes for n={n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
