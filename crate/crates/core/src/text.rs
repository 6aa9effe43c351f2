//! Plain-text formats for Cayley tables and fuzzy sets.
//!
//! Magma file: the first line holds `n`, then `n` rows of `n`
//! whitespace-separated entries. IFS file: one `index mu gamma` record per
//! element. Indices are 1-based unless another base is requested. Blank lines
//! and lines starting with `#` are ignored.

use serde_json::{json, Value};
use thiserror::Error;

use crate::error::Error as CoreError;
use crate::grade::Grade;
use crate::ifs::{Ifs, Strictness};
use crate::magma::FiniteMagma;
use crate::subset::CrispSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_magma(text: &str, base: usize) -> Result<FiniteMagma, ParseError> {
    let mut lines = content_lines(text);
    let (first_line, header) = lines.next().ok_or_else(|| ParseError::at(1, 1, "empty file"))?;
    let header_tokens = tokens(header);
    let (col, tok) = header_tokens[0];
    if header_tokens.len() != 1 {
        return Err(ParseError::at(
            first_line,
            header_tokens[1].0,
            "expected only the order n",
        ));
    }
    let n: usize = tok
        .parse()
        .map_err(|_| ParseError::at(first_line, col, format!("invalid order {tok:?}")))?;
    if n == 0 {
        return Err(ParseError::at(first_line, col, "order must be positive"));
    }
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut last_line = first_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == n {
            return Err(ParseError::at(line_no, 1, format!("extra row: expected {n} rows")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let column = toks.get(n).map_or(line.len() + 1, |t| t.0);
            return Err(ParseError::at(
                line_no,
                column,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            let v: i64 = tok
                .parse()
                .map_err(|_| ParseError::at(line_no, col, format!("invalid entry {tok:?}")))?;
            let shifted = v - base as i64;
            if shifted < 0 || shifted >= n as i64 {
                return Err(ParseError::at(
                    line_no,
                    col,
                    format!("entry {v} outside [{base}, {}]", n - 1 + base),
                ));
            }
            row.push(shifted);
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::at(
            last_line + 1,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    FiniteMagma::new(n, &rows).map_err(|e| ParseError::at(first_line, 1, e.to_string()))
}

pub fn parse_ifs(text: &str, base: usize, strictness: Strictness) -> Result<Ifs, ParseError> {
    let mut records: Vec<(usize, usize, Grade, Grade)> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let toks = tokens(line);
        if toks.len() != 3 {
            let column = toks.get(3).map_or(1, |t| t.0);
            return Err(ParseError::at(
                line_no,
                column,
                format!("expected \"index mu gamma\", found {} fields", toks.len()),
            ));
        }
        let (icol, itok) = toks[0];
        let index: usize = itok
            .parse()
            .ok()
            .and_then(|i: usize| i.checked_sub(base))
            .ok_or_else(|| ParseError::at(line_no, icol, format!("invalid index {itok:?}")))?;
        let grade = |(col, tok): (usize, &str)| {
            tok.parse::<Grade>()
                .map_err(|e| ParseError::at(line_no, col, e.to_string()))
        };
        records.push((line_no, index, grade(toks[1])?, grade(toks[2])?));
    }
    let n = records.len();
    if n == 0 {
        return Err(ParseError::at(1, 1, "no records"));
    }
    let mut slots: Vec<Option<(Grade, Grade)>> = vec![None; n];
    for &(line_no, index, mu, gamma) in &records {
        if index >= n {
            return Err(ParseError::at(
                line_no,
                1,
                format!("index {} outside [{base}, {}]", index + base, n - 1 + base),
            ));
        }
        if slots[index].is_some() {
            return Err(ParseError::at(line_no, 1, format!("duplicate index {}", index + base)));
        }
        slots[index] = Some((mu, gamma));
    }
    // n records, no duplicates, all in range: every slot is filled
    let (mu, gamma): (Vec<Grade>, Vec<Grade>) = slots.into_iter().map(|s| s.expect("filled")).unzip();
    Ifs::new(mu, gamma, strictness).map_err(|e| match e {
        CoreError::ConstraintViolation { element, ref sum } => {
            let line = records.iter().find(|r| r.1 == element).map_or(1, |r| r.0);
            ParseError::at(line, 1, format!("element {}: mu + gamma = {sum} > 1", element + base))
        }
        other => ParseError::at(1, 1, other.to_string()),
    })
}

pub fn format_magma(magma: &FiniteMagma, base: usize) -> String {
    let mut out = format!("{}\n", magma.order());
    for row in magma.rows() {
        let cells: Vec<String> = row.iter().map(|v| (v + base).to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_ifs(set: &Ifs, base: usize) -> String {
    (0..set.carrier())
        .map(|x| format!("{} {} {}\n", x + base, set.mu(x), set.gamma(x)))
        .collect()
}

pub fn magma_to_json(magma: &FiniteMagma, base: usize) -> Value {
    let rows: Vec<Vec<usize>> = magma
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v + base).collect())
        .collect();
    json!({ "order": magma.order(), "table": rows })
}

pub fn magma_from_json(value: &Value, base: usize) -> Result<FiniteMagma, CoreError> {
    let bad = || CoreError::Unsupported("malformed magma document".into());
    let n = value["order"].as_u64().ok_or_else(bad)? as usize;
    let rows = value["table"].as_array().ok_or_else(bad)?;
    let rows: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|v| v.as_i64().map(|v| v - base as i64).ok_or_else(bad))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    FiniteMagma::new(n, &rows)
}

pub fn ifs_to_json(set: &Ifs, base: usize) -> Value {
    let records: Vec<Value> = (0..set.carrier())
        .map(|x| json!({ "element": x + base, "mu": set.mu(x).to_string(), "gamma": set.gamma(x).to_string() }))
        .collect();
    Value::Array(records)
}

pub fn ifs_from_json(value: &Value, base: usize, strictness: Strictness) -> Result<Ifs, CoreError> {
    let bad = || CoreError::Unsupported("malformed IFS document".into());
    let records = value.as_array().ok_or_else(bad)?;
    let mut mu = vec![Grade::ZERO; records.len()];
    let mut gamma = vec![Grade::ZERO; records.len()];
    let mut seen = vec![false; records.len()];
    for r in records {
        let x = r["element"]
            .as_u64()
            .and_then(|x| (x as usize).checked_sub(base))
            .filter(|&x| x < records.len() && !seen[x])
            .ok_or_else(bad)?;
        seen[x] = true;
        mu[x] = r["mu"].as_str().ok_or_else(bad)?.parse()?;
        gamma[x] = r["gamma"].as_str().ok_or_else(bad)?.parse()?;
    }
    Ifs::new(mu, gamma, strictness)
}

pub fn subset_to_json(subset: &CrispSubset, base: usize) -> Value {
    json!(subset.iter().map(|x| x + base).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const G1: &str = "5\n1 1 1 1 1\n1 2 2 2 2\n1 2 4 5 3\n1 2 3 4 5\n1 2 5 3 4\n";

    #[test]
    fn parses_tables() {
        assert_eq!(parse_magma(G1, 1).unwrap(), fixtures::g1());
        let g2 = format_magma(&fixtures::g2(), 1);
        assert_eq!(parse_magma(&g2, 1).unwrap(), fixtures::g2());
        let zero_based = format_magma(&fixtures::g1(), 0);
        assert_eq!(parse_magma(&zero_based, 0).unwrap(), fixtures::g1());
    }

    #[test]
    fn table_errors_carry_positions() {
        let extra = format!("{G1}1 1 1 1 1\n");
        let e = parse_magma(&extra, 1).unwrap_err();
        assert_eq!((e.line, e.column), (7, 1));
        let e = parse_magma("2\n1 3\n1 1\n", 1).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_magma("2\n1 x\n1 1\n", 1).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_magma("2\n1 1 1\n1 1\n", 1).unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_magma("2\n1 1\n", 1).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_magma("", 1).is_err());
        assert!(parse_magma("0\n", 1).is_err());
    }

    #[test]
    fn parses_sets() {
        let text = "1 0.3 0.2\n2 0.3 0.3\n3 0.3 0.4\n4 0.1 0.5\n5 0.4 0.2\n";
        assert_eq!(parse_ifs(text, 1, Strictness::Strict).unwrap(), fixtures::second_a());
        let shuffled = "# comment\n5 2/5 1/5\n1 3/10 1/5\n2 0.3 0.3\n3 0.3 0.4\n4 0.1 0.5\n";
        assert_eq!(
            parse_ifs(shuffled, 1, Strictness::Strict).unwrap(),
            fixtures::second_a()
        );
    }

    #[test]
    fn set_errors() {
        let e = parse_ifs("1 1 3/10\n", 1, Strictness::Strict).unwrap_err();
        assert!(e.message.contains("13/10"), "{e}");
        assert!(parse_ifs("1 1 3/10\n", 1, Strictness::Lenient).is_ok());
        let e = parse_ifs("1 7/5 0\n", 1, Strictness::Strict).unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert!(e.message.contains("outside [0, 1]"), "{e}");
        let e = parse_ifs("1 0 0\n1 0 0\n", 1, Strictness::Strict).unwrap_err();
        assert!(e.message.contains("duplicate"));
        let e = parse_ifs("1 0 0\n3 0 0\n", 1, Strictness::Strict).unwrap_err();
        assert!(e.message.contains("outside"));
        let e = parse_ifs("0 0 0\n", 1, Strictness::Strict).unwrap_err();
        assert!(e.message.contains("invalid index"));
        assert!(parse_ifs("1 0\n", 1, Strictness::Strict).is_err());
    }

    #[test]
    fn json_round_trip() {
        for base in [0, 1] {
            let g = fixtures::g2();
            assert_eq!(magma_from_json(&magma_to_json(&g, base), base).unwrap(), g);
            let a = fixtures::second_b();
            assert_eq!(
                ifs_from_json(&ifs_to_json(&a, base), base, Strictness::Strict).unwrap(),
                a
            );
        }
    }
}
