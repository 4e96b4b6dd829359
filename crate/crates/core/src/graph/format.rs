//! graph6 and plain edge-list interchange formats.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn encode_order(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` in graph6 with zero padding and no header.
pub fn encode_graph6(g: &Graph) -> String {
    let mut out = String::new();
    encode_order(g.order(), &mut out);
    let pairs = g.pair_count();
    let bits = g.raw_bits();
    let mut k = 0;
    while k < pairs {
        let mut group = 0u8;
        for b in 0..6 {
            group <<= 1;
            let idx = k + b;
            if idx < pairs && bits[idx / 64] >> (idx % 64) & 1 == 1 {
                group |= 1;
            }
        }
        out.push((group + 63) as char);
        k += 6;
    }
    out
}

/// Parses one graph6 line. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, mut offset) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), lead + HEADER.len()),
        None => (trimmed.as_bytes(), lead),
    };
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(g6_err(offset + i, format!("byte {c:#04x} outside 63..=126")));
        }
    }
    if body.is_empty() {
        return Err(g6_err(offset, "empty input"));
    }

    let (n, header_len) = if body[0] != 126 {
        (usize::from(body[0] - 63), 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(g6_err(offset + body.len(), "truncated 8-byte order header"));
        }
        let n = body[2..8]
            .iter()
            .fold(0usize, |acc, &c| (acc << 6) | usize::from(c - 63));
        (n, 8)
    } else {
        if body.len() < 4 {
            return Err(g6_err(offset + body.len(), "truncated 4-byte order header"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &c| (acc << 6) | usize::from(c - 63));
        (n, 4)
    };
    if n == 0 {
        return Err(g6_err(offset, "order 0 is not supported"));
    }
    let data = &body[header_len..];
    offset += header_len;

    let mut g = Graph::empty(n);
    let pairs = g.pair_count();
    let expected = pairs.div_ceil(6);
    if data.len() != expected {
        let at = offset + data.len().min(expected);
        return Err(g6_err(
            at,
            format!("expected {expected} edge bytes for order {n}, found {}", data.len()),
        ));
    }
    for (byte_idx, &c) in data.iter().enumerate() {
        let group = c - 63;
        for b in 0..6 {
            let k = byte_idx * 6 + b;
            let bit = (group >> (5 - b)) & 1 == 1;
            if k >= pairs {
                if bit {
                    return Err(g6_err(offset + byte_idx, "nonzero padding bits"));
                }
                continue;
            }
            if bit {
                g.bits[k / 64] |= 1 << (k % 64);
            }
        }
    }
    Ok(g)
}

/// Parses the plain edge-list format: the order `n` as the first token,
/// then one `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, first) = lines.next().ok_or(GraphError::EdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| GraphError::EdgeList {
        line: line_no,
        reason: format!("invalid vertex count {first:?}"),
    })?;
    if n == 0 {
        return Err(GraphError::EmptyOrder);
    }
    let mut g = Graph::empty(n);
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parsed: Vec<usize> = toks.iter().filter_map(|t| t.parse().ok()).collect();
        if toks.len() != 2 || parsed.len() != 2 {
            return Err(GraphError::EdgeList {
                line: line_no,
                reason: format!("expected two vertex indices, got {line:?}"),
            });
        }
        g.add_edge(parsed[0], parsed[1])?;
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
