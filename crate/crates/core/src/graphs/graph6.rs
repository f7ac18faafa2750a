//! graph6 encoding (ASCII, upper triangle in column order, 6 bits per byte).

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let body = &bytes[start..];
    let err = |offset: usize, what: &str| Error::parse(format!("graph6: {what} at byte {}", start + offset));

    let Some(&first) = body.first() else {
        return Err(err(0, "empty input"));
    };
    if first == b':' || first == b'&' {
        return Err(err(0, "sparse6/digraph6 input is not supported"));
    }
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(k, &format!("byte {b:#04x} out of range")));
        }
    }

    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.get(1) == Some(&126) {
            return Err(err(1, "graphs with n >= 258048 are not supported"));
        }
        if body.len() < 4 {
            return Err(err(body.len(), "truncated size header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let available = body.len() - pos;
    if available < needed {
        return Err(err(body.len(), &format!("truncated bit field: need {needed} bytes, found {available}")));
    }
    if available > needed {
        return Err(err(pos + needed, "trailing bytes after bit field"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += needed;
    if bits % 6 != 0 {
        let last = body[pos - 1] - 63;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        assert!(n < 258_048, "graph6 long form not supported");
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
