//! Text format for polynomial systems.
//!
//! ```text
//! field: QQ | QQ(w) | GF(p)        (w^2 = -7 implied)
//! vars: U0 .. U9                   (range or explicit list)
//! <polynomial>                     (one per line; + - * ^, rationals a/b)
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag, QuadElem};
use crate::exactalg::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    pub tag: FieldTag,
    pub vars: Vec<String>,
    pub polys: Vec<MultiPoly>,
}

pub fn parse_field_tag(s: &str) -> Result<FieldTag, AlgError> {
    let s = s.trim();
    match s {
        "QQ" => Ok(FieldTag::Rational),
        "QQ(w)" => Ok(FieldTag::Quad),
        "QQ(zeta7)" => Ok(FieldTag::Cyclotomic),
        _ => {
            if let Some(inner) = s.strip_prefix("GF(").and_then(|t| t.strip_suffix(')')) {
                let p: u64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| AlgError::Parse(format!("bad prime in '{}'", s)))?;
                Ok(FieldTag::Prime(p))
            } else {
                Err(AlgError::Parse(format!("unknown field '{}'", s)))
            }
        }
    }
}

/// Expand `vars:` payload: either explicit names or a `U0 .. U9` range.
pub fn parse_var_list(s: &str) -> Result<Vec<String>, AlgError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.len() == 3 && tokens[1] == ".." {
        let (prefix, lo) = split_name_index(tokens[0])?;
        let (prefix2, hi) = split_name_index(tokens[2])?;
        if prefix != prefix2 || hi < lo {
            return Err(AlgError::Parse(format!("bad variable range '{}'", s)));
        }
        Ok((lo..=hi).map(|i| format!("{}{}", prefix, i)).collect())
    } else if tokens.is_empty() {
        Err(AlgError::Parse("empty variable list".into()))
    } else {
        Ok(tokens.iter().map(|t| t.to_string()).collect())
    }
}

fn split_name_index(name: &str) -> Result<(&str, usize), AlgError> {
    let pos = name
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| AlgError::Parse(format!("range endpoint '{}' has no index", name)))?;
    let idx = name[pos..]
        .parse()
        .map_err(|_| AlgError::Parse(format!("bad index in '{}'", name)))?;
    Ok((&name[..pos], idx))
}

pub fn parse_system(text: &str) -> Result<PolySystem, AlgError> {
    let mut tag = None;
    let mut vars: Option<Vec<String>> = None;
    let mut polys = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("field:") {
            tag = Some(parse_field_tag(rest)?);
        } else if let Some(rest) = line.strip_prefix("vars:") {
            vars = Some(parse_var_list(rest)?);
        } else {
            let tag = tag.ok_or_else(|| {
                AlgError::Parse(format!("line {}: polynomial before field header", lineno + 1))
            })?;
            let vars = vars.as_ref().ok_or_else(|| {
                AlgError::Parse(format!("line {}: polynomial before vars header", lineno + 1))
            })?;
            polys.push(parse_poly(line, vars, tag).map_err(|e| {
                AlgError::Parse(format!("line {}: {}", lineno + 1, e))
            })?);
        }
    }
    let tag = tag.ok_or_else(|| AlgError::Parse("missing field header".into()))?;
    let vars = vars.ok_or_else(|| AlgError::Parse("missing vars header".into()))?;
    Ok(PolySystem { tag, vars, polys })
}

pub fn format_system(sys: &PolySystem) -> String {
    let mut out = String::new();
    out.push_str(&format!("field: {}\n", sys.tag));
    out.push_str(&format!("vars: {}\n", sys.vars.join(" ")));
    for p in &sys.polys {
        out.push_str(&format!("{}\n", p));
    }
    out
}

/// Recursive-descent parser for a single polynomial.
pub fn parse_poly(text: &str, vars: &[String], tag: FieldTag) -> Result<MultiPoly, AlgError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        vars,
        tag,
    };
    let poly = parser.expression()?;
    if parser.pos != parser.tokens.len() {
        return Err(AlgError::Parse(format!(
            "trailing input near '{:?}'",
            parser.tokens[parser.pos]
        )));
    }
    Ok(poly)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>, AlgError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Number(s.parse().unwrap()));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(AlgError::Parse(format!("unexpected character '{}'", c))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
    tag: FieldTag,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expression(&mut self) -> Result<MultiPoly, AlgError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(&Token::Plus) {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Token::Minus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, AlgError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    // only division by a nonzero constant makes sense here
                    let c = f.coeff(&vec![0u16; self.vars.len()]);
                    if f.num_terms() > 1 || f.total_degree().unwrap_or(0) > 0 || c.is_zero() {
                        return Err(AlgError::Parse("division by non-constant".into()));
                    }
                    acc = acc.scale(&c.inv()?)?;
                }
                // implicit multiplication: `2 x`, `x y`, `(..)(..)`
                Some(Token::Ident(_)) | Some(Token::Number(_)) | Some(Token::Open) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, AlgError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let mut negative = false;
            if self.peek() == Some(&Token::Minus) {
                // allow ^-1 for completeness in inputs like group words; here
                // only constants may carry negative exponents
                self.pos += 1;
                negative = true;
            }
            let e = match self.peek() {
                Some(Token::Number(n)) => {
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| AlgError::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    e
                }
                _ => return Err(AlgError::Parse("expected exponent after ^".into())),
            };
            if negative {
                let c = base.coeff(&vec![0u16; self.vars.len()]);
                if base.num_terms() > 1 || base.total_degree().unwrap_or(0) > 0 {
                    return Err(AlgError::Parse("negative exponent on non-constant".into()));
                }
                return Ok(MultiPoly::constant(
                    self.vars.to_vec(),
                    c.pow(-(e as i64))?,
                ));
            }
            let mut acc = MultiPoly::constant(self.vars.to_vec(), FieldElement::one(self.tag));
            for _ in 0..e {
                acc = acc.mul(&base)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, AlgError> {
        match self.peek().cloned() {
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(AlgError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Number(n)) => {
                self.pos += 1;
                let value = FieldElement::from_rational(
                    BigRational::from_integer(n),
                    self.tag,
                );
                Ok(MultiPoly::constant(self.vars.to_vec(), value))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "w" {
                    if self.tag != FieldTag::Quad {
                        return Err(AlgError::Parse("'w' only valid over QQ(w)".into()));
                    }
                    return Ok(MultiPoly::constant(
                        self.vars.to_vec(),
                        FieldElement::Quad(QuadElem {
                            a: BigRational::from_integer(BigInt::from(0)),
                            b: BigRational::from_integer(BigInt::from(1)),
                        }),
                    ));
                }
                let idx = self
                    .vars
                    .iter()
                    .position(|v| v == &name)
                    .ok_or_else(|| AlgError::UnknownSymbol(name.clone()))?;
                Ok(MultiPoly::variable(self.vars.to_vec(), idx, self.tag))
            }
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            other => Err(AlgError::Parse(format!("unexpected token {:?}", other))),
        }
    }
}
