//! Text formats.
//!
//! All formats are line based, ignore blank lines and `#` comments, and
//! accept an optional `vars: n` header fixing the ambient ring.
//!
//! * ideal: one monomial per line, `x1*x2*x3`
//! * complex: one facet per line, `x1 x3`; `{}` is the empty facet
//! * elements: one polynomial per line, as accepted by
//!   [`parse_polynomial`]

use crate::error::{Error, Result};
use crate::monomial::{check_ambient, MonomialIdeal, SquarefreeMonomial, VarSet};
use crate::poly::{parse_polynomial, Polynomial};
use crate::simplicial::SimplicialComplex;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A content line with its 1-based line number and the column of its
/// first character.
struct Line<'a> {
    number: usize,
    offset: usize,
    text: &'a str,
}

struct Document<'a> {
    vars: Option<usize>,
    lines: Vec<Line<'a>>,
}

fn split(src: &str) -> Result<Document<'_>> {
    let mut vars = None;
    let mut lines = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let number = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let offset = body.len() - trimmed.len();
        let text = trimmed.trim_end();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix("vars:") {
            if vars.is_some() || !lines.is_empty() {
                return Err(parse_err(number, offset + 1, "the vars header must come first and only once"));
            }
            let value = rest.trim();
            let col = offset + 1 + text.len() - rest.trim_start().len();
            let n: usize = value
                .parse()
                .map_err(|_| parse_err(number, col, format!("expected a variable count, found '{value}'")))?;
            check_ambient(n).map_err(|e| parse_err(number, col, e.to_string()))?;
            vars = Some(n);
            continue;
        }
        lines.push(Line { number, offset, text });
    }
    Ok(Document { vars, lines })
}

/// Parses `x<k>` at 1-based `column` of `line`.
fn variable(token: &str, line: usize, column: usize) -> Result<usize> {
    let digits = token
        .strip_prefix('x')
        .or_else(|| token.strip_prefix('X'))
        .ok_or_else(|| parse_err(line, column, format!("expected a variable like x1, found '{token}'")))?;
    let index: usize = digits
        .parse()
        .map_err(|_| parse_err(line, column, format!("expected a variable like x1, found '{token}'")))?;
    if index == 0 {
        return Err(parse_err(line, column, "variables are numbered from x1"));
    }
    if index > crate::monomial::MAX_VARS {
        return Err(parse_err(line, column, format!("x{index} exceeds the supported {} variables", crate::monomial::MAX_VARS)));
    }
    Ok(index)
}

/// Splits `text` at `sep`, yielding tokens with their 1-based columns.
fn tokens<'a>(line: &Line<'a>, sep: impl Fn(char) -> bool + 'a) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    let base = line.offset + 1;
    let text = line.text;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in text.char_indices() {
        if sep(c) {
            out.push((base + start, &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((base + start, &text[start..]));
    out.into_iter()
}

fn check_declared(vars: Option<usize>, index: usize, line: usize, column: usize) -> Result<()> {
    match vars {
        Some(n) if index > n => Err(parse_err(line, column, format!("x{index} exceeds the declared {n} variables"))),
        _ => Ok(()),
    }
}

pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let doc = split(src)?;
    let mut gens = Vec::new();
    let mut top = 0;
    for line in &doc.lines {
        let mut support = VarSet::EMPTY;
        for (col, tok) in tokens(line, |c| c == '*') {
            let tok_trim = tok.trim();
            let col = col + (tok.len() - tok.trim_start().len());
            if tok_trim.is_empty() {
                return Err(parse_err(line.number, col, "empty factor"));
            }
            let v = variable(tok_trim, line.number, col)?;
            check_declared(doc.vars, v, line.number, col)?;
            if support.contains(v) {
                return Err(parse_err(line.number, col, format!("x{v} repeated: monomials must be squarefree")));
            }
            support = support.with(v);
            top = top.max(v);
        }
        gens.push(SquarefreeMonomial::new(support));
    }
    MonomialIdeal::new(doc.vars.unwrap_or(top), &gens)
}

pub fn parse_complex(src: &str) -> Result<SimplicialComplex> {
    let doc = split(src)?;
    let mut facets = Vec::new();
    let mut top = 0;
    for line in &doc.lines {
        if line.text == "{}" {
            facets.push(VarSet::EMPTY);
            continue;
        }
        let mut face = VarSet::EMPTY;
        for (col, tok) in tokens(line, char::is_whitespace) {
            if tok.is_empty() {
                continue;
            }
            let v = variable(tok, line.number, col)?;
            check_declared(doc.vars, v, line.number, col)?;
            face = face.with(v);
            top = top.max(v);
        }
        facets.push(face);
    }
    if facets.is_empty() {
        return Err(parse_err(1, 1, "a complex needs at least one facet"));
    }
    SimplicialComplex::from_faces(doc.vars.unwrap_or(top), &facets)
}

/// Polynomials over a common ring: the declared `vars`, else the largest
/// index used.
pub fn parse_elements(src: &str) -> Result<Vec<Polynomial>> {
    let doc = split(src)?;
    let mut out = Vec::new();
    for line in &doc.lines {
        let p = parse_polynomial(line.text, doc.vars).map_err(|e| match e {
            Error::Parse { column, message, .. } => parse_err(line.number, column + line.offset, message),
            other => other,
        })?;
        out.push(p);
    }
    let n = doc
        .vars
        .unwrap_or_else(|| out.iter().map(Polynomial::nvars).max().unwrap_or(0));
    Ok(out.into_iter().map(|p| p.extend_vars(n)).collect())
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut s = format!("vars: {}\n", ideal.ambient_n());
    if ideal.is_zero() {
        s.push_str("# zero ideal\n");
    }
    for m in ideal.generators() {
        s.push_str(&m.to_string());
        s.push('\n');
    }
    s
}

pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut s = format!("vars: {}\n", complex.ambient_n());
    for f in complex.facets() {
        if f.is_empty() {
            s.push_str("{}");
        } else {
            s.push_str(&f.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(" "));
        }
        s.push('\n');
    }
    s
}

pub fn write_elements(elements: &[Polynomial]) -> String {
    let n = elements.iter().map(Polynomial::nvars).max().unwrap_or(0);
    let mut s = format!("vars: {n}\n");
    for e in elements {
        s.push_str(&e.to_string());
        s.push('\n');
    }
    s
}

/// A face given inline as `x1,x3`, `x1 x3` or `{}`.
pub fn parse_face(src: &str) -> Result<VarSet> {
    let src = src.trim();
    if src == "{}" || src.is_empty() {
        return Ok(VarSet::EMPTY);
    }
    let mut face = VarSet::EMPTY;
    let mut col = 1;
    for tok in src.split(|c: char| c == ',' || c.is_whitespace()) {
        if !tok.is_empty() {
            face = face.with(variable(tok, 1, col)?);
        }
        col += tok.len() + 1;
    }
    Ok(face)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::stanley_reisner_ideal;

    #[test]
    fn ideal_round_trip() {
        let src = "# line ideal\nvars: 4\nx1*x2\n\nx3 * x4  # last\nx1*x4\n";
        let i = parse_ideal(src).unwrap();
        assert_eq!(i.to_string(), "(x1*x2, x1*x4, x3*x4)");
        assert_eq!(parse_ideal(&write_ideal(&i)).unwrap(), i);
        assert_eq!(parse_ideal("x2*x5").unwrap().ambient_n(), 5);
        assert!(parse_ideal("vars: 3\n").unwrap().is_zero());
    }

    #[test]
    fn ideal_errors_have_positions() {
        let pos = |src: &str| match parse_ideal(src) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("{other:?}"),
        };
        assert_eq!(pos("x1*x2\n  x1*y3"), (2, 6));
        assert_eq!(pos("vars: 3\nx1*x4"), (2, 4));
        assert_eq!(pos("x1*x1"), (1, 4));
        assert_eq!(pos("x1**x2"), (1, 4));
        assert_eq!(pos("vars: many"), (1, 7));
        assert_eq!(pos("x1\nvars: 3"), (2, 1));
    }

    #[test]
    fn complex_round_trip() {
        let c = parse_complex("x1 x2\nx2 x3\nx3 x4\n").unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
        assert_eq!(stanley_reisner_ideal(&c).to_string(), "(x1*x3, x1*x4, x2*x4)");
        let empty = parse_complex("vars: 2\n{}").unwrap();
        assert_eq!(empty.facets(), &[VarSet::EMPTY]);
        assert!(parse_complex("x1 y2").unwrap_err().is_parse());
        assert!(parse_complex("# nothing\n").unwrap_err().is_parse());
    }

    #[test]
    fn elements_share_a_ring() {
        let els = parse_elements("x1*x4\n  x1*x2 + x3*x4\n").unwrap();
        assert_eq!(els.len(), 2);
        assert!(els.iter().all(|e| e.nvars() == 4));
        assert_eq!(parse_elements(&write_elements(&els)).unwrap(), els);
        match parse_elements("x1\n  x1 + ?") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn faces_inline() {
        assert_eq!(parse_face("x1,x3").unwrap(), VarSet::from_indices([1, 3]));
        assert_eq!(parse_face("x4").unwrap(), VarSet::singleton(4));
        assert_eq!(parse_face("{}").unwrap(), VarSet::EMPTY);
        assert!(parse_face("y1").is_err());
    }
}
