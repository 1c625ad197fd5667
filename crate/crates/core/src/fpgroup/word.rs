//! Words over a generator alphabet with inverses, kept freely reduced.

use std::fmt;

use crate::error::AlgError;

/// A freely reduced word: adjacent letters always have distinct generators
/// and exponents are nonzero. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(String, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(name: &str) -> Self {
        Word {
            letters: vec![(name.to_string(), 1)],
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word length counted in single letters.
    pub fn length(&self) -> usize {
        self.letters.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    fn push(&mut self, gen: String, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == gen {
                last.1 += exp;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((gen, exp));
    }

    pub fn mul(&self, rhs: &Word) -> Word {
        let mut out = self.clone();
        for (g, e) in &rhs.letters {
            out.push(g.clone(), *e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn commutator(&self, rhs: &Word) -> Word {
        self.mul(rhs).mul(&self.inverse()).mul(&rhs.inverse())
    }

    /// Flatten into signed single letters: +name, -name, ...
    pub fn single_letters(&self) -> Vec<(&str, bool)> {
        let mut out = Vec::with_capacity(self.length());
        for (g, e) in &self.letters {
            for _ in 0..e.unsigned_abs() {
                out.push((g.as_str(), *e > 0));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (g, e) in &self.letters {
            if *e == 1 {
                write!(f, "{}", g)?;
            } else {
                write!(f, "{}^{}", g, e)?;
            }
        }
        Ok(())
    }
}

/// Parse a word in the notation used throughout: juxtaposition for products,
/// `^` exponents (optionally braced, e.g. `b^{-1}`), parenthesized subwords
/// with exponents such as `(b^-2z)^3`. Empty input parses to the identity.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, AlgError> {
    let mut names: Vec<&String> = generators.iter().collect();
    // longest-match so that e.g. "t12" never parses as "t1" "2"
    names.sort_by_key(|n| std::cmp::Reverse(n.len()));
    let chars: Vec<char> = text.chars().collect();
    let (word, pos) = parse_sequence(&chars, 0, &names)?;
    let rest: String = chars[pos..].iter().collect();
    if !rest.trim().is_empty() {
        return Err(AlgError::Parse(format!(
            "unexpected trailing input '{}'",
            rest.trim()
        )));
    }
    Ok(word)
}

fn parse_sequence(
    chars: &[char],
    mut pos: usize,
    names: &[&String],
) -> Result<(Word, usize), AlgError> {
    let mut word = Word::identity();
    loop {
        while pos < chars.len() && chars[pos].is_whitespace() {
            pos += 1;
        }
        if pos >= chars.len() || chars[pos] == ')' {
            return Ok((word, pos));
        }
        let atom;
        if chars[pos] == '(' {
            let (inner, next) = parse_sequence(chars, pos + 1, names)?;
            if next >= chars.len() || chars[next] != ')' {
                return Err(AlgError::Parse("missing ')' in word".into()));
            }
            atom = inner;
            pos = next + 1;
        } else if chars[pos] == '1' {
            // explicit identity letter
            atom = Word::identity();
            pos += 1;
        } else {
            let rest: String = chars[pos..].iter().collect();
            let name = names
                .iter()
                .find(|n| rest.starts_with(n.as_str()))
                .ok_or_else(|| {
                    AlgError::UnknownSymbol(
                        rest.chars().take_while(|c| !c.is_whitespace()).collect(),
                    )
                })?;
            atom = Word::generator(name);
            pos += name.len();
        }
        let mut exp = 1i64;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let braced = pos < chars.len() && chars[pos] == '{';
            if braced {
                pos += 1;
            }
            let start = pos;
            if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
                pos += 1;
            }
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = chars[start..pos].iter().collect();
            exp = digits
                .parse()
                .map_err(|_| AlgError::Parse(format!("malformed exponent '{}'", digits)))?;
            if braced {
                if pos >= chars.len() || chars[pos] != '}' {
                    return Err(AlgError::Parse("missing '}' in exponent".into()));
                }
                pos += 1;
            }
        }
        word = word.mul(&atom.pow(exp));
    }
}
