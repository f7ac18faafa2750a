//! Plain-text edge lists: a header line `n <count>`, then one `u v` pair per
//! line with 1-based vertices. Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| Error::parse("edge list: missing header \"n <count>\""))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("bad vertex count {count:?}, line {hline}")))?,
        _ => return Err(Error::parse(format!("expected \"n <count>\", line {hline}"))),
    };

    let mut edges = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = tokens.as_slice() else {
            return Err(Error::parse(format!("expected \"u v\", line {line}")));
        };
        let vertex = |tok: &str| -> Result<usize> {
            let x: usize = tok.parse().map_err(|_| Error::parse(format!("bad token {tok:?}, line {line}")))?;
            if x == 0 || x > n {
                return Err(Error::parse(format!("vertex out of range, line {line}")));
            }
            Ok(x - 1)
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        if u == v {
            return Err(Error::parse(format!("loop at vertex {}, line {line}", u + 1)));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
