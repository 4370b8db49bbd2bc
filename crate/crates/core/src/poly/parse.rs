use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (lno, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, column) = (lno + 1, i + 1);
            let push = |out: &mut Vec<Spanned>, tok| out.push(Spanned { tok, line, column });
            match c {
                ' ' | '\t' | '\r' => {
                    i += 1;
                }
                '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                    let tok = match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '/' => Tok::Slash,
                        '^' => Tok::Caret,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    };
                    push(&mut out, tok);
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    push(&mut out, Tok::Num(digits.parse().expect("ascii digits")));
                }
                'x' | 'X' => {
                    let start = i + 1;
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(line, column, "expected a variable index after 'x'"));
                    }
                    let digits: String = chars[start..i].iter().collect();
                    let index: usize = digits
                        .parse()
                        .map_err(|_| err(line, column, "variable index too large"))?;
                    if index == 0 {
                        return Err(err(line, column, "variables are numbered from x1"));
                    }
                    push(&mut out, Tok::Var(index));
                }
                other => return Err(err(line, column, format!("unexpected character '{other}'"))),
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    nvars: usize,
    end: (usize, usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|s| (s.line, s.column)).unwrap_or(self.end)
    }

    fn fail<T>(&self, message: &str) -> Result<T> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.product()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| {
                        let (l, c) = self.here();
                        err(l, c, "exponent too large")
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return self.fail("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut d = BigInt::one();
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(m)) if !m.is_zero() => {
                            self.pos += 1;
                            d = m;
                        }
                        Some(Tok::Num(_)) => return self.fail("zero denominator"),
                        _ => return self.fail("expected a denominator"),
                    }
                }
                Ok(Polynomial::constant(self.nvars, Coeff::new(n, d)))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(Polynomial::var(self.nvars, i))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.fail("expected ')'"),
                }
            }
            Some(_) => self.fail("expected a number, variable or '('"),
            None => self.fail("unexpected end of input"),
        }
    }
}

/// Parses a polynomial such as `x1*x4*x5 - 3/2*x1^2*x2`.
///
/// With `nvars = None` the variable range is the largest index that occurs.
pub fn parse_polynomial(src: &str, nvars: Option<usize>) -> Result<Polynomial> {
    let toks = tokenize(src)?;
    let used = toks
        .iter()
        .filter_map(|s| match s.tok {
            Tok::Var(i) => Some((i, s.line, s.column)),
            _ => None,
        })
        .max_by_key(|&(i, _, _)| i);
    let n = match (nvars, used) {
        (Some(n), Some((i, l, c))) if i > n => {
            return Err(err(l, c, format!("x{i} exceeds the declared {n} variables")));
        }
        (Some(n), _) => n,
        (None, Some((i, _, _))) => i,
        (None, None) => 0,
    };
    let end = src
        .lines()
        .enumerate()
        .last()
        .map(|(l, s)| (l + 1, s.chars().count() + 1))
        .unwrap_or((1, 1));
    if toks.is_empty() {
        return Err(err(end.0, end.1, "empty polynomial"));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        nvars: n,
        end,
    };
    let poly = p.expr()?;
    if p.pos < toks.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{integer, rational, Term};

    #[test]
    fn parses_displayed_form() {
        let f = parse_polynomial("x1*x4*x5 - x1^2*x2^2*x3", None).unwrap();
        assert_eq!(f.nvars(), 5);
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coefficient(&Term::from_exponents(vec![2, 2, 1, 0, 0])), integer(-1));
        assert_eq!(f.to_string(), "-x1^2*x2^2*x3 + x1*x4*x5");
    }

    #[test]
    fn rational_coefficients_and_parentheses() {
        let f = parse_polynomial("3/2*x1 - (x1 + 1/2)*2", Some(2)).unwrap();
        assert_eq!(f.nvars(), 2);
        assert_eq!(f.coefficient(&Term::from_exponents(vec![1, 0])), rational(-1, 2));
        assert_eq!(f.coefficient(&Term::one(2)), integer(-1));
        assert_eq!(parse_polynomial("6/4", None).unwrap().to_string(), "3/2");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_polynomial("x1 +\nx2 * ?", None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 6)),
            other => panic!("{other:?}"),
        }
        match parse_polynomial("x1 + x0", None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x3", Some(2)).unwrap_err().is_parse());
        assert!(parse_polynomial("x1 x2", None).unwrap_err().is_parse());
        assert!(parse_polynomial("1/0", None).unwrap_err().is_parse());
        assert!(parse_polynomial("", None).unwrap_err().is_parse());
    }
}
