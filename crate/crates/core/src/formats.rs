//! Text formats: graph6 (read/write, orders 1..=62), a plain edge list
//! (read/write) and Graphviz DOT (write only).

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

/// Largest order representable with a single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: bad header byte {0:#04x}")]
    Graph6Header(u8),
    #[error("graph6: character {byte:#04x} at offset {offset} outside 63..=126")]
    Graph6Char { byte: u8, offset: usize },
    #[error("graph6: expected {expected} payload bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    Graph6Padding,
    #[error("graph6: order {0} is outside 1..=62")]
    Graph6Order(usize),
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::Graph6Order(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.are_adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph6 string. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim().as_bytes();
    let (&head, payload) = bytes.split_first().ok_or(FormatError::Graph6Empty)?;
    if !(64..=63 + GRAPH6_MAX_ORDER as u8).contains(&head) {
        return Err(FormatError::Graph6Header(head));
    }
    let n = (head - 63) as usize;
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Graph6Char {
                byte: b,
                offset: i + 1,
            });
        }
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(FormatError::Graph6Length {
            expected,
            found: payload.len(),
        });
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(FormatError::Graph6Padding);
    }
    let mut b = GraphBuilder::new(n).map_err(|_| FormatError::Graph6Order(n))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                b.set(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Edge-list text: a header line `n <count>`, then one `u v` pair per line.
/// Blank lines and `#` comments are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, message: String| FormatError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| err(hline, format!("bad vertex count {count:?}")))?,
        _ => return Err(err(hline, format!("expected `n <count>`, found {header:?}"))),
    };
    let mut b = GraphBuilder::new(n).map_err(|e| err(hline, e.to_string()))?;
    for (ln, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(err(ln, format!("expected `u v`, found {l:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(ln, format!("bad vertex {s:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        b.add_edge(u, v).map_err(|e| match e {
            GraphError::SelfLoop(v) => err(ln, format!("self-loop at vertex {v}")),
            other => err(ln, other.to_string()),
        })?;
    }
    Ok(b.build())
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Undirected DOT with edges in lexicographic order. Isolated vertices are
/// listed explicitly. With `labels`, each vertex gets a `label` attribute.
pub fn emit_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        let label = labels.and_then(|l| l.get(v));
        if let Some(label) = label {
            let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
        } else if g.degree(v) == 0 {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
