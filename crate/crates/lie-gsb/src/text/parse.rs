//! Presentation files and element expressions.
//!
//! ```text
//! # comment
//! field GF 2
//! ygens y1 y2 y3
//! xgens x1 x2 x3
//! rrels
//!   y1^2
//! srels
//!   y3*x3 + y2*x2 + y1*x1
//!   [x2,x1] = x11
//! ```

use num_bigint::BigInt;
use num_traits::One;

use crate::commutative::{CommPoly, Field, YMonomial};
use crate::freelie::LieElement;
use crate::gsb_lie::LiePresentation;

use super::TextError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, TextError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^[](),=".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(TextError::Parse {
                line,
                col,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

/// Generator names and the field used to interpret expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Names {
    pub field: Field,
    pub ygens: Vec<String>,
    pub xgens: Vec<String>,
}

impl Names {
    pub fn of(p: &LiePresentation) -> Self {
        Names {
            field: p.field,
            ygens: p.ygens.clone(),
            xgens: p.xgens.clone(),
        }
    }
}

/// A partially evaluated expression: a polynomial, or a Lie element.
enum Val {
    Poly(CommPoly),
    Lie(LieElement),
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    names: &'a Names,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, TextError> {
        let col = self.toks.get(self.pos).map_or(self.end_col, |t| t.1);
        Err(TextError::Parse {
            line: self.line,
            col,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), TextError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn field(&self) -> Field {
        self.names.field
    }

    fn sum(&mut self) -> Result<Val, TextError> {
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        } else {
            self.eat('+');
        }
        let mut acc = self.product()?;
        if neg {
            acc = self.negate(acc);
        }
        loop {
            let neg = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return Ok(acc);
            };
            let mut t = self.product()?;
            if neg {
                t = self.negate(t);
            }
            acc = self.add(acc, t)?;
        }
    }

    fn negate(&self, v: Val) -> Val {
        match v {
            Val::Poly(p) => Val::Poly(p.scale(&-&self.field().one())),
            Val::Lie(e) => Val::Lie(e.neg()),
        }
    }

    fn add(&self, a: Val, b: Val) -> Result<Val, TextError> {
        Ok(match (a, b) {
            (Val::Poly(p), Val::Poly(q)) => Val::Poly(p.add(&q)),
            (Val::Lie(e), Val::Lie(f)) => Val::Lie(e.add(&f)),
            (Val::Poly(p), Val::Lie(e)) | (Val::Lie(e), Val::Poly(p)) => {
                if !p.is_zero() {
                    return self.err("cannot add a scalar term to a Lie term");
                }
                Val::Lie(e)
            }
        })
    }

    fn product(&mut self) -> Result<Val, TextError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = match (acc, f) {
                (Val::Poly(p), Val::Poly(q)) => Val::Poly(p.mul(&q)),
                (Val::Poly(p), Val::Lie(e)) | (Val::Lie(e), Val::Poly(p)) => Val::Lie(poly_times(&p, &e)),
                (Val::Lie(_), Val::Lie(_)) => return self.err("product of two Lie terms; use brackets"),
            };
        }
        Ok(acc)
    }

    fn number(&mut self) -> Result<BigInt, TextError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a number"),
        }
    }

    fn factor(&mut self) -> Result<Val, TextError> {
        let field = self.field();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let d = if self.eat('/') { self.number()? } else { BigInt::one() };
                let Some(c) = field.fraction(&n, &d) else {
                    return self.err("zero denominator");
                };
                Ok(Val::Poly(CommPoly::monomial(field, c, YMonomial::one())))
            }
            Some(Tok::Ident(name)) => {
                let col = self.toks[self.pos].1;
                self.pos += 1;
                if let Some(g) = self.names.ygens.iter().position(|n| *n == name) {
                    let e = if self.eat('^') {
                        let n = self.number()?;
                        u32::try_from(n).or_else(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    Ok(Val::Poly(CommPoly::monomial(field, field.one(), YMonomial::pow(g as u32, e))))
                } else if let Some(x) = self.names.xgens.iter().position(|n| *n == name) {
                    Ok(Val::Lie(LieElement::generator(field, x as u32)))
                } else {
                    Err(TextError::UnknownGenerator {
                        name,
                        line: self.line,
                        col,
                    })
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect(']')?;
                match (a, b) {
                    (Val::Lie(a), Val::Lie(b)) => Ok(Val::Lie(a.bracket(&b))),
                    (Val::Poly(p), _) | (_, Val::Poly(p)) if p.is_zero() => Ok(Val::Lie(LieElement::zero(field))),
                    _ => self.err("bracket of a scalar"),
                }
            }
            _ => self.err("expected a term"),
        }
    }

    fn finish(&self) -> Result<(), TextError> {
        if self.pos < self.toks.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }
}

fn poly_times(p: &CommPoly, e: &LieElement) -> LieElement {
    let mut out = LieElement::zero(e.field());
    for (m, c) in p.terms() {
        out.add_scaled(e, c, m);
    }
    out
}

fn parse_val(src: &str, names: &Names, line: usize, col0: usize) -> Result<Val, TextError> {
    let (lhs, rhs) = match src.split_once('=') {
        Some((l, r)) => (l, Some(r)),
        None => (src, None),
    };
    let mut p = Parser {
        toks: lex(lhs, line, col0)?,
        pos: 0,
        line,
        end_col: col0 + lhs.chars().count(),
        names,
    };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let mut v = p.sum()?;
    p.finish()?;
    if let Some(rhs) = rhs {
        let rcol = col0 + lhs.chars().count() + 1;
        let mut q = Parser {
            toks: lex(rhs, line, rcol)?,
            pos: 0,
            line,
            end_col: rcol + rhs.chars().count(),
            names,
        };
        if q.toks.is_empty() {
            return q.err("empty right-hand side");
        }
        let r = q.sum()?;
        q.finish()?;
        let r = q.negate(r);
        v = q.add(v, r)?;
    }
    Ok(v)
}

/// Parses a Lie expression such as `y2*y1*[x2,x1] - 3/2*x1`.
pub fn parse_lie(src: &str, names: &Names) -> Result<LieElement, TextError> {
    parse_lie_at(src, names, 1, 1)
}

fn parse_lie_at(src: &str, names: &Names, line: usize, col0: usize) -> Result<LieElement, TextError> {
    match parse_val(src, names, line, col0)? {
        Val::Lie(e) => Ok(e),
        Val::Poly(p) if p.is_zero() => Ok(LieElement::zero(names.field)),
        Val::Poly(_) => Err(TextError::Parse {
            line,
            col: col0,
            msg: "expected a Lie element, found a scalar".into(),
        }),
    }
}

/// Parses a polynomial in the Y generators.
pub fn parse_poly(src: &str, names: &Names) -> Result<CommPoly, TextError> {
    parse_poly_at(src, names, 1, 1)
}

fn parse_poly_at(src: &str, names: &Names, line: usize, col0: usize) -> Result<CommPoly, TextError> {
    match parse_val(src, names, line, col0)? {
        Val::Poly(p) => Ok(p),
        Val::Lie(_) => Err(TextError::Parse {
            line,
            col: col0,
            msg: "expected a polynomial in the Y generators".into(),
        }),
    }
}

fn parse_field(rest: &str, line: usize, col: usize) -> Result<Field, TextError> {
    let bad = |msg: String| TextError::Parse { line, col, msg };
    let t: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let digits = t
        .strip_prefix("GF")
        .map(|d| d.trim_start_matches('(').trim_end_matches(')'))
        .ok_or_else(|| bad(format!("unknown field '{}'", rest.trim())))?;
    let p: u32 = digits
        .parse()
        .map_err(|_| bad(format!("bad characteristic '{digits}'")))?;
    Field::prime(p).ok_or_else(|| bad(format!("{p} is not a prime")))
}

#[derive(PartialEq)]
enum Block {
    None,
    R,
    S,
}

/// Parses a presentation file. Relations are made k-monic.
pub fn parse_presentation(text: &str) -> Result<LiePresentation, TextError> {
    let mut field = None;
    let mut ygens: Vec<String> = Vec::new();
    let mut xgens: Vec<String> = Vec::new();
    let mut r_lines = Vec::new();
    let mut s_lines = Vec::new();
    let mut block = Block::None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let col = indent + 1;
        let (head, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        match head {
            "field" => {
                field = Some(parse_field(rest, line, col)?);
                block = Block::None;
            }
            "ygens" | "xgens" => {
                let list = if head == "ygens" { &mut ygens } else { &mut xgens };
                for name in rest.split_whitespace() {
                    if !name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                        || !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                    {
                        return Err(TextError::Parse {
                            line,
                            col,
                            msg: format!("bad generator name '{name}'"),
                        });
                    }
                    list.push(name.to_string());
                }
                block = Block::None;
            }
            "rrels" | "srels" if rest.trim().is_empty() => {
                block = if head == "rrels" { Block::R } else { Block::S };
            }
            _ => match block {
                Block::R => r_lines.push((line, col, trimmed.to_string())),
                Block::S => s_lines.push((line, col, trimmed.to_string())),
                Block::None => {
                    return Err(TextError::Parse {
                        line,
                        col,
                        msg: format!("unknown directive '{head}'"),
                    })
                }
            },
        }
    }
    let field = field.ok_or(TextError::Parse {
        line: 1,
        col: 1,
        msg: "missing 'field' line".into(),
    })?;
    let mut seen = std::collections::HashSet::new();
    for n in ygens.iter().chain(&xgens) {
        if !seen.insert(n) {
            return Err(TextError::DuplicateGenerator(n.clone()));
        }
    }
    let names = Names { field, ygens, xgens };
    let mut r = Vec::new();
    for (line, col, src) in r_lines {
        let p = parse_poly_at(&src, &names, line, col)?;
        if p.is_zero() {
            return Err(TextError::ZeroRelation { line });
        }
        r.push(p.make_monic());
    }
    let mut s = Vec::new();
    for (line, col, src) in s_lines {
        let e = parse_lie_at(&src, &names, line, col)?;
        if e.is_zero() {
            return Err(TextError::ZeroRelation { line });
        }
        s.push(e.make_k_monic().expect("nonzero"));
    }
    Ok(LiePresentation {
        field,
        ygens: names.ygens,
        xgens: names.xgens,
        r,
        s,
    })
}
