//! Edge-list text and graph6 formats.
//!
//! Edge lists start with a line `n m` followed by `m` lines `u v` of 0-based
//! vertex indices. Blank lines and everything after `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(
                line_no,
                format!("expected two integers, found {line:?}"),
            ));
        }
        let a: usize = fields[0].parse().map_err(|_| {
            Error::parse(
                line_no,
                format!("not a non-negative integer: {:?}", fields[0]),
            )
        })?;
        let b: usize = fields[1].parse().map_err(|_| {
            Error::parse(
                line_no,
                format!("not a non-negative integer: {:?}", fields[1]),
            )
        })?;
        match header {
            None => header = Some((a, b, line_no)),
            Some((n, _, _)) => {
                for v in [a, b] {
                    if v >= n {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex {v} out of range for n = {n}"),
                        ));
                    }
                }
                if a == b {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m, header_line) =
        header.ok_or_else(|| Error::parse(last_line.max(1), "missing `n m` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 string. Connectivity is not required here; callers
/// that need it check `is_connected`.
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| Error::parse(1, format!("graph6: {msg}"));
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, mut pos) = if bytes[0] != 126 {
        (six(bytes[0]), 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size"));
        }
        (
            (six(bytes[1]) << 12) | (six(bytes[2]) << 6) | six(bytes[3]),
            4,
        )
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | six(b));
        (n, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(bad(&format!(
            "expected {nbytes} data bytes for n = {n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = six(bytes[pos + k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    pos += nbytes;
    debug_assert_eq!(pos, bytes.len());
    Graph::build(n, &edges, false)
}

/// Parses either format: a single-line graph6 string or an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let meaningful: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let looks_like_graph6 = meaningful.len() == 1
        && (meaningful[0].starts_with(GRAPH6_HEADER)
            || !meaningful[0].contains(char::is_whitespace));
    if looks_like_graph6 {
        let g = decode_graph6(meaningful[0])?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    } else {
        parse_edge_list(text)
    }
}
