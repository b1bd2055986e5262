//! Graph serialization: graph6, plain edge-list text, and DOT export.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column-major
//! order — bits (0,1), (0,2), (1,2), (0,3), ... — into 6-bit chunks offset
//! by 63, after a 1-, 4-, or 8-byte vertex-count header.

use crate::graph::Graph;

/// Input text could not be parsed as a graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodecError {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("edge-list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

fn g6_err(offset: usize, message: impl Into<String>) -> CodecError {
    CodecError::Graph6 {
        offset,
        message: message.into(),
    }
}

fn el_err(line: usize, message: impl Into<String>) -> CodecError {
    CodecError::EdgeList {
        line,
        message: message.into(),
    }
}

/// Encode as a graph6 line (no trailing newline).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (chunk << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decode a graph6 line; the optional `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn graph6_decode(text: &str) -> Result<Graph, CodecError> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    let sixbit = |offset: usize| -> Result<u64, CodecError> {
        match bytes.get(offset) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(&b) => Err(g6_err(offset, format!("byte {b} outside the graph6 range 63..=126"))),
            None => Err(g6_err(offset, "unexpected end of input")),
        }
    };

    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    // Vertex-count header: n, n>62, or n>258047 forms.
    let (n, mut pos) = if bytes[0] != 126 {
        (sixbit(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sixbit(i)?;
        }
        (n, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sixbit(i)?;
        }
        (n, 8)
    };
    let n = usize::try_from(n).map_err(|_| g6_err(0, "vertex count overflows this platform"))?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut chunk = 0u64;
    let mut avail = 0usize;
    let mut consumed = 0usize;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                chunk = sixbit(pos)?;
                pos += 1;
                avail = 6;
            }
            if chunk >> (avail - 1) & 1 == 1 {
                g.add_edge(u, v);
            }
            avail -= 1;
            consumed += 1;
        }
    }
    debug_assert_eq!(consumed, bit_count);
    if pos != bytes.len() {
        return Err(g6_err(pos, format!("{} trailing bytes after the bit data", bytes.len() - pos)));
    }
    Ok(g)
}

/// Serialize as edge-list text: an `n m` header line, then one `u v` line
/// per edge in lexicographic order.
pub fn edge_list_encode(g: &Graph) -> String {
    use std::fmt::Write;
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

/// Parse edge-list text (`n m` header, then `u v` lines, 0-based).
/// Blank lines are skipped; the edge count must match the header.
pub fn edge_list_decode(text: &str) -> Result<Graph, CodecError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| el_err(1, "missing `n m` header"))?;
    let parse = |line: usize, tok: &str, what: &str| -> Result<usize, CodecError> {
        tok.parse()
            .map_err(|_| el_err(line, format!("{what} is not a non-negative integer: {tok:?}")))
    };
    let mut header_toks = header.split_whitespace();
    let (n_tok, m_tok) = match (header_toks.next(), header_toks.next(), header_toks.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(el_err(header_line, "header must be exactly `n m`")),
    };
    let n = parse(header_line, n_tok, "vertex count")?;
    let m = parse(header_line, m_tok, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| el_err(header_line, format!("header promises {m} edges, input has {}", edges.len())))?;
        let mut toks = text.split_whitespace();
        let (u_tok, v_tok) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(el_err(line, "edge line must be exactly `u v`")),
        };
        edges.push((parse(line, u_tok, "endpoint")?, parse(line, v_tok, "endpoint")?));
        edge_lines.push(line);
    }
    if let Some((line, _)) = lines.next() {
        return Err(el_err(line, "more edge lines than the header promises"));
    }
    Graph::from_edge_list(n, edges).map_err(|e| {
        let index = match e {
            crate::graph::GraphError::SelfLoop { index, .. } => index,
            crate::graph::GraphError::OutOfRange { index, .. } => index,
        };
        el_err(edge_lines[index], e.to_string())
    })
}

/// Render as DOT, optionally labeling vertex `i` with `labels[i]`.
pub fn dot_export(g: &Graph, labels: Option<&[String]>) -> String {
    use std::fmt::Write;
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(ls) => writeln!(out, "  {v} [label=\"{}\"];", ls[v]),
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String cannot fail");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String cannot fail");
    }
    out.push_str("}\n");
    out
}
