//! The ECG edge-list text format.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! n m
//! u v c      (m lines, 1 <= u < v <= n, c >= 1)
//! ```
//!
//! LF and CRLF line endings are accepted. The writer emits LF and lists edges
//! sorted by `(u, v)`.

use std::fmt::Write as _;

use crate::error::{Error, GraphError, Result};
use crate::graph::{Color, ColoredGraph, GraphBuilder};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn fields<const N: usize>(line_no: usize, line: &str) -> Result<[u64; N]> {
    let mut out = [0u64; N];
    let mut tokens = line.split_whitespace();
    for slot in out.iter_mut() {
        let token = tokens
            .next()
            .ok_or_else(|| parse_error(line_no, format!("expected {N} fields")))?;
        if token.starts_with('-') {
            return Err(parse_error(line_no, format!("negative value {token:?}")));
        }
        *slot = token
            .parse()
            .map_err(|_| parse_error(line_no, format!("not a decimal integer: {token:?}")))?;
    }
    if tokens.next().is_some() {
        return Err(parse_error(line_no, format!("expected {N} fields")));
    }
    Ok(out)
}

/// Parses an ECG document.
pub fn parse(text: &str) -> Result<ColoredGraph> {
    let mut content = text
        .split('\n')
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.strip_suffix('\r').unwrap_or(raw)))
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = content
        .next()
        .ok_or_else(|| parse_error(1, "missing header line `n m`"))?;
    let [n, m] = fields::<2>(header_line, header)?;
    let n = usize::try_from(n).map_err(|_| parse_error(header_line, "n too large"))?;
    let mut builder = GraphBuilder::new(n).map_err(|e| parse_error(header_line, e.to_string()))?;

    let mut seen = 0u64;
    for (line_no, line) in content {
        if seen == m {
            return Err(parse_error(
                line_no,
                format!("unexpected line after the {m} declared edges"),
            ));
        }
        let [u, v, c] = fields::<3>(line_no, line)?;
        let c = Color::try_from(c).map_err(|_| parse_error(line_no, "color id too large"))?;
        let (u, v) = (u as usize, v as usize);
        builder.add_edge(u, v, c).map_err(|e| match e {
            GraphError::DuplicateEdge(a, b) => {
                parse_error(line_no, format!("duplicate edge {a}-{b}"))
            }
            other => parse_error(line_no, other.to_string()),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_error(
            text.split('\n').count(),
            format!("expected {m} edges, found {seen}"),
        ));
    }
    Ok(builder.build())
}

/// Serializes `g` as ECG.
pub fn write(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v, c) in g.edges() {
        writeln!(out, "{u} {v} {c}").unwrap();
    }
    out
}
