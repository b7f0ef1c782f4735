//! graph6 and plain edge-list formats.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

/// Encodes `g` as a graph6 line (without header or trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. Surrounding whitespace is ignored; anything that
/// would not re-encode to the same bytes (wrong length, nonzero padding) is
/// rejected.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim().as_bytes();
    let bad = |msg: &str| Error::Graph6(format!("{msg} in {:?}", line.trim()));
    if bytes.is_empty() {
        return Err(bad("empty line"));
    }
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(bad(&format!("byte {c:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &c| acc << 6 | (c - BIAS) as usize);
        if n <= 62 {
            return Err(bad("non-canonical long order prefix"));
        }
        (n, &bytes[4..])
    } else {
        return Err(bad("order prefix too large or truncated"));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[body.len() - 1] - BIAS) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses the edge-list format: first line `n`, then one `u v` pair per line.
/// Blank lines are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, first) = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::EdgeList(format!("line 1: expected vertex count, got {first:?}")))?;
    let mut g = Graph::new(n)?;
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::EdgeList(format!("line {lineno}: bad vertex {s:?}")))
        };
        match fields.as_slice() {
            [u, v] => g.add_edge(parse(u)?, parse(v)?)?,
            _ => {
                return Err(Error::EdgeList(format!(
                    "line {lineno}: expected two vertices, got {line:?}"
                )))
            }
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
