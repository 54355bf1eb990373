//! Graph file formats.
//!
//! The native format is line based. Blank lines and lines starting with `#`
//! are ignored. The first remaining line is the header `bigraph <x> <y>`;
//! every following line is an edge `x<i> y<j> [weight]` with 0-based
//! indices and weight defaulting to 1:
//!
//! ```text
//! # a 4-cycle
//! bigraph 2 2
//! x0 y0
//! x0 y1
//! x1 y0
//! x1 y1 3
//! ```
//!
//! The edge-list importer reads headerless `i j [weight]` lines, where `i`
//! indexes the X side and `j` the Y side. Side sizes are one more than the
//! largest index seen.

use std::collections::HashSet;
use std::fmt::Write as _;

use bicross_core::BipartiteGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum InputFormat {
    #[default]
    Native,
    Edgelist,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
pub struct ParseError {
    /// 1-based line number, when the problem is tied to a line.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }
}

/// Non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
    })
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::at(line, format!("invalid {what} '{tok}'")));
    }
    tok.parse()
        .map_err(|_| ParseError::at(line, format!("{what} '{tok}' is too large")))
}

fn parse_weight(tok: Option<&str>, line: usize) -> Result<u64, ParseError> {
    let Some(tok) = tok else { return Ok(1) };
    let w = parse_count(tok, line, "weight")? as u64;
    if w == 0 {
        return Err(ParseError::at(line, "weight must be positive"));
    }
    Ok(w)
}

fn vertex(tok: &str, prefix: char, line: usize) -> Result<usize, ParseError> {
    match tok.strip_prefix(prefix) {
        Some(rest) => parse_count(rest, line, &format!("{prefix}-vertex index")),
        None => Err(ParseError::at(
            line,
            format!("expected {prefix}<index>, found '{tok}'"),
        )),
    }
}

fn build(
    x_count: usize,
    y_count: usize,
    edges: Vec<(usize, usize, u64)>,
) -> Result<BipartiteGraph, ParseError> {
    BipartiteGraph::new(x_count, y_count, edges).map_err(|e| ParseError {
        line: None,
        message: e.to_string(),
    })
}

/// Parses the native format.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return Err(ParseError {
            line: None,
            message: "missing 'bigraph <x> <y>' header".into(),
        });
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (x_count, y_count) = match toks.as_slice() {
        ["bigraph", a, b] => (
            parse_count(a, hline, "X size")?,
            parse_count(b, hline, "Y size")?,
        ),
        _ => {
            return Err(ParseError::at(
                hline,
                format!("expected header 'bigraph <x> <y>', found '{header}'"),
            ))
        }
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.first() == Some(&"bigraph") {
            return Err(ParseError::at(line, "duplicate header"));
        }
        if !(2..=3).contains(&toks.len()) {
            return Err(ParseError::at(
                line,
                format!("expected 'x<i> y<j> [weight]', found '{l}'"),
            ));
        }
        let x = vertex(toks[0], 'x', line)?;
        let y = vertex(toks[1], 'y', line)?;
        let w = parse_weight(toks.get(2).copied(), line)?;
        if x >= x_count {
            return Err(ParseError::at(
                line,
                format!("x{x} out of range (X has {x_count} vertices)"),
            ));
        }
        if y >= y_count {
            return Err(ParseError::at(
                line,
                format!("y{y} out of range (Y has {y_count} vertices)"),
            ));
        }
        if !seen.insert((x, y)) {
            return Err(ParseError::at(line, format!("duplicate edge x{x}-y{y}")));
        }
        edges.push((x, y, w));
    }
    build(x_count, y_count, edges)
}

/// Parses a headerless `i j [weight]` edge list.
pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let (mut x_count, mut y_count) = (0, 0);
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if !(2..=3).contains(&toks.len()) {
            return Err(ParseError::at(
                line,
                format!("expected 'i j [weight]', found '{l}'"),
            ));
        }
        let x = parse_count(toks[0], line, "X index")?;
        let y = parse_count(toks[1], line, "Y index")?;
        let w = parse_weight(toks.get(2).copied(), line)?;
        if !seen.insert((x, y)) {
            return Err(ParseError::at(line, format!("duplicate edge {x} {y}")));
        }
        x_count = x_count.max(x + 1);
        y_count = y_count.max(y + 1);
        edges.push((x, y, w));
    }
    build(x_count, y_count, edges)
}

pub fn parse(text: &str, format: InputFormat) -> Result<BipartiteGraph, ParseError> {
    match format {
        InputFormat::Native => parse_graph(text),
        InputFormat::Edgelist => parse_edge_list(text),
    }
}

/// Canonical native text: header, then edges sorted by `(x, y)`, weights
/// written only when not 1.
pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = format!("bigraph {} {}\n", g.x_count(), g.y_count());
    for e in g.edges() {
        let _ = write!(out, "x{} y{}", e.x, e.y);
        if e.weight != 1 {
            let _ = write!(out, " {}", e.weight);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_c4() {
        let g = parse_graph("# c4\nbigraph 2 2\nx0 y0\nx0 y1\n\nx1 y0\nx1 y1\n").unwrap();
        assert_eq!(g, BipartiteGraph::complete(2, 2));
    }

    #[test]
    fn parses_weight() {
        let g = parse_graph("bigraph 1 1\nx0 y0 5\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0].weight, 5);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_graph("bigraph 2 2\n# note\nx0 z1\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        assert!(e.to_string().starts_with("line 3: "));

        let e = parse_graph("bigraph 2 2\nx0 y0\nx0 y0 2\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        assert!(e.message.contains("duplicate"));

        let e = parse_graph("bigraph 2 2\nx2 y0\n").unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(e.message.contains("out of range"));

        assert_eq!(parse_graph("x0 y0\n").unwrap_err().line, Some(1));
        assert_eq!(parse_graph("# only\n").unwrap_err().line, None);
        assert_eq!(
            parse_graph("bigraph 1 1\nx0 y0 0\n").unwrap_err().line,
            Some(2)
        );
        assert_eq!(
            parse_graph("bigraph 1 1\nx-1 y0\n").unwrap_err().line,
            Some(2)
        );
        assert_eq!(
            parse_graph("bigraph 1 1\nbigraph 1 1\n").unwrap_err().line,
            Some(2)
        );
    }

    #[test]
    fn edge_list_infers_sizes() {
        let g = parse_edge_list("0 0\n# x\n2 1 4\n").unwrap();
        assert_eq!((g.x_count(), g.y_count()), (3, 2));
        assert_eq!(g.edge_between(2, 1).map(|e| e.weight), Some(4));
        assert_eq!(parse_edge_list("0 0\n0 0\n").unwrap_err().line, Some(2));
    }

    #[test]
    fn writes_canonical_text() {
        let g = BipartiteGraph::new(2, 3, [(1, 2, 1), (0, 0, 7)]).unwrap();
        assert_eq!(write_graph(&g), "bigraph 2 3\nx0 y0 7\nx1 y2\n");
    }
}
