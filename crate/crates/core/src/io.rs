//! Text formats for networks and matrices.
//!
//! Network files:
//!
//! ```text
//! n 3
//! v 1 boundary
//! v 2 boundary
//! v 3 boundary
//! v 4 inner
//! e 1 1 4 1
//! e 2 2 4 1
//! e 3 3 4 1
//! rot 1 1
//! rot 2 2
//! rot 3 3
//! rot 4 1 2 3
//! ```
//!
//! Matrix files start with `n` (or `rows cols`) followed by the rows.
//! Entries are integers, fractions `p/q`, or exact decimals. Blank lines and
//! `#` comments are ignored in both formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::network::{CircularNetwork, Edge, EdgeId, VertexRole};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content
            .char_indices()
            .chain(std::iter::once((content.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: k + 1,
                tokens,
            });
        }
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn index(line: &Line<'_>, k: usize, what: &str) -> Result<usize> {
    let tok = line.tokens.get(k).ok_or_else(|| {
        let column = line.tokens.last().map_or(1, |t| t.column + t.text.len());
        parse_error(line.number, column, format!("missing {what}"))
    })?;
    tok.text.parse::<usize>().map_err(|_| {
        parse_error(
            line.number,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

/// Parses an integer, `p/q`, or a decimal such as `-1.25` exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let value = if let Some((p, q)) = body.split_once('/') {
        if !digits(p) || !digits(q) {
            return None;
        }
        let q = BigInt::from_str_radix(q, 10).ok()?;
        if q.is_zero() {
            return None;
        }
        Rational::new(BigInt::from_str_radix(p, 10).ok()?, q)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if !(digits(whole) || whole.is_empty()) || !digits(frac) {
            return None;
        }
        let numer = BigInt::from_str_radix(&format!("{whole}{frac}"), 10).ok()?;
        Rational::new(numer, BigInt::from(10).pow(frac.len() as u32))
    } else {
        if !digits(body) {
            return None;
        }
        Rational::from_integer(BigInt::from_str_radix(body, 10).ok()?)
    };
    Some(if sign < 0 { -value } else { value })
}

fn rational(line: &Line<'_>, k: usize, what: &str) -> Result<Rational> {
    let tok = line.tokens.get(k).ok_or_else(|| {
        let column = line.tokens.last().map_or(1, |t| t.column + t.text.len());
        parse_error(line.number, column, format!("missing {what}"))
    })?;
    parse_rational(tok.text).ok_or_else(|| {
        parse_error(
            line.number,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

fn expect_len(line: &Line<'_>, len: usize) -> Result<()> {
    if line.tokens.len() > len {
        let tok = &line.tokens[len];
        return Err(parse_error(
            line.number,
            tok.column,
            format!("unexpected `{}`", tok.text),
        ));
    }
    Ok(())
}

/// Whether `text` looks like a network file rather than a matrix file.
pub fn is_network_text(text: &str) -> bool {
    lines(text).first().is_some_and(|l| l.tokens[0].text == "n")
}

pub fn parse_network(text: &str) -> Result<CircularNetwork> {
    let all = lines(text);
    let Some(header) = all.first() else {
        return Err(parse_error(1, 1, "empty network file"));
    };
    if header.tokens[0].text != "n" {
        return Err(parse_error(
            header.number,
            header.tokens[0].column,
            "expected header `n <boundary-count>`",
        ));
    }
    let n = index(header, 1, "boundary count")?;
    expect_len(header, 2)?;

    let mut vertices: BTreeMap<usize, (VertexRole, usize)> = BTreeMap::new();
    let mut edges: BTreeMap<EdgeId, (Edge, usize)> = BTreeMap::new();
    let mut rotation: BTreeMap<usize, (Vec<EdgeId>, usize)> = BTreeMap::new();
    for line in &all[1..] {
        let keyword = &line.tokens[0];
        match keyword.text {
            "v" => {
                let id = index(line, 1, "vertex id")?;
                let role_tok = line.tokens.get(2).ok_or_else(|| {
                    parse_error(line.number, keyword.column, "missing vertex role")
                })?;
                let role = match role_tok.text {
                    "boundary" => VertexRole::Boundary,
                    "inner" => VertexRole::Inner,
                    other => {
                        return Err(parse_error(
                            line.number,
                            role_tok.column,
                            format!("expected `boundary` or `inner`, found `{other}`"),
                        ))
                    }
                };
                expect_len(line, 3)?;
                if vertices.insert(id, (role, line.number)).is_some() {
                    return Err(validation(line.number, format!("duplicate vertex {id}")));
                }
            }
            "e" => {
                let id = index(line, 1, "edge id")?;
                let u = index(line, 2, "endpoint")?;
                let v = index(line, 3, "endpoint")?;
                let c = rational(line, 4, "conductance")?;
                expect_len(line, 5)?;
                if edges
                    .insert(id, (Edge::new(id, u, v, c), line.number))
                    .is_some()
                {
                    return Err(validation(line.number, format!("duplicate edge {id}")));
                }
            }
            "rot" => {
                let v = index(line, 1, "vertex id")?;
                let mut list = Vec::new();
                for k in 2..line.tokens.len() {
                    list.push(index(line, k, "edge id")?);
                }
                if rotation.insert(v, (list, line.number)).is_some() {
                    return Err(validation(
                        line.number,
                        format!("duplicate rotation for {v}"),
                    ));
                }
            }
            "n" => {
                return Err(validation(line.number, "repeated header"));
            }
            other => {
                return Err(parse_error(
                    line.number,
                    keyword.column,
                    format!("unknown record `{other}`"),
                ))
            }
        }
    }

    let vertex_count = vertices.len();
    for (expected, (&id, &(role, line))) in (1..).zip(&vertices) {
        if id != expected {
            return Err(validation(
                line,
                format!("vertex ids must be 1..={vertex_count}, found {id}"),
            ));
        }
        let want = if id <= n {
            VertexRole::Boundary
        } else {
            VertexRole::Inner
        };
        if role != want {
            return Err(validation(
                line,
                format!("vertex {id} must be {}", role_name(want)),
            ));
        }
    }
    if vertex_count < n {
        return Err(validation(
            header.number,
            format!("{n} boundary vertices declared, {vertex_count} vertices listed"),
        ));
    }
    for (edge, line) in edges.values() {
        for end in [edge.u, edge.v] {
            if end == 0 || end > vertex_count {
                return Err(validation(
                    *line,
                    format!("edge {} references unknown vertex {end}", edge.id),
                ));
            }
        }
        if edge.conductance < Rational::zero() {
            return Err(validation(
                *line,
                format!("edge {} has negative conductance", edge.id),
            ));
        }
    }
    let rotation = if rotation.is_empty() {
        None
    } else {
        for (&v, (list, line)) in &rotation {
            if v == 0 || v > vertex_count {
                return Err(validation(
                    *line,
                    format!("rotation for unknown vertex {v}"),
                ));
            }
            if let Some(e) = list.iter().find(|e| !edges.contains_key(e)) {
                return Err(validation(
                    *line,
                    format!("rotation references unknown edge {e}"),
                ));
            }
        }
        let first_line = rotation
            .values()
            .map(|(_, l)| *l)
            .min()
            .unwrap_or(header.number);
        let full: Vec<Vec<EdgeId>> = (1..=vertex_count)
            .map(|v| rotation.get(&v).map(|(l, _)| l.clone()).unwrap_or_default())
            .collect();
        Some((full, first_line))
    };
    let edge_list: Vec<Edge> = edges.into_values().map(|(e, _)| e).collect();
    let (rot, rot_line) = match rotation {
        Some((r, l)) => (Some(r), l),
        None => (None, header.number),
    };
    CircularNetwork::new(n, vertex_count, edge_list, rot)
        .map_err(|e| validation(rot_line, e.to_string()))
}

fn validation(line: usize, message: impl Into<String>) -> Error {
    Error::Validation {
        line,
        message: message.into(),
    }
}

fn role_name(role: VertexRole) -> &'static str {
    match role {
        VertexRole::Boundary => "boundary",
        VertexRole::Inner => "inner",
    }
}

pub fn serialize_network(net: &CircularNetwork) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", net.n()).unwrap();
    for v in 1..=net.vertex_count() {
        writeln!(out, "v {v} {}", role_name(net.role(v))).unwrap();
    }
    for e in net.edges() {
        writeln!(out, "e {} {} {} {}", e.id, e.u, e.v, e.conductance).unwrap();
    }
    if let Some(rotation) = net.rotation() {
        for (k, list) in rotation.iter().enumerate() {
            write!(out, "rot {}", k + 1).unwrap();
            for id in list {
                write!(out, " {id}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

/// Parses a matrix file. Square matrices may use a single `n` header.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let all = lines(text);
    let Some(header) = all.first() else {
        return Err(parse_error(1, 1, "empty matrix file"));
    };
    let rows = index(header, 0, "row count")?;
    let cols = if header.tokens.len() > 1 {
        index(header, 1, "column count")?
    } else {
        rows
    };
    expect_len(header, 2)?;
    let body = &all[1..];
    if body.len() != rows {
        let line = body.get(rows).map_or(header.number, |l| l.number);
        return Err(parse_error(
            line,
            1,
            format!("expected {rows} rows, found {}", body.len()),
        ));
    }
    let mut data = Vec::with_capacity(rows);
    for line in body {
        if line.tokens.len() != cols {
            let column = line.tokens.get(cols).map_or(1, |t| t.column);
            return Err(parse_error(
                line.number,
                column,
                format!("expected {cols} entries, found {}", line.tokens.len()),
            ));
        }
        let row = (0..cols)
            .map(|k| rational(line, k, "rational entry"))
            .collect::<Result<Vec<_>>>()?;
        data.push(row);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    Ok(Matrix::from_rows(data))
}

pub fn serialize_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    if m.is_square() {
        writeln!(out, "{}", m.rows()).unwrap();
    } else {
        writeln!(out, "{} {}", m.rows(), m.cols()).unwrap();
    }
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
