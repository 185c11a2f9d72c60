//! The expression grammar shared by the CLI and the file formats.
//!
//! ```text
//! word     := ident | 'R' '(' word ')' | '[' word ',' word ']'
//! term     := [rational '*'] word
//! expr     := ['+'|'-'] term (('+'|'-') term)*  |  '0'
//! rational := integer ['/' positive-integer]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Q};
use crate::word::{Alphabet, Word};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected `{want}`, found `{c}`")),
            None => self.err(format!("expected `{want}`, found end of input")),
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            len = i + c.len_utf8();
        }
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(rest[..len].parse().expect("digits parse"))
    }

    fn word(&mut self) -> Result<Word> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Ok(Word::br(u, v))
            }
            Some(_) => {
                let save = self.pos;
                let Some((start, name)) = self.ident() else {
                    self.pos = save;
                    return self.err("expected a word");
                };
                if name == "R" {
                    self.expect('(')?;
                    let u = self.word()?;
                    self.expect(')')?;
                    return Ok(Word::r(u));
                }
                match self.alphabet.rank(name) {
                    Some(i) => Ok(Word::gen(i)),
                    None => Err(Error::UnknownIdent {
                        name: name.to_string(),
                        offset: start,
                    }),
                }
            }
            None => self.err("expected a word, found end of input"),
        }
    }

    fn term(&mut self) -> Result<LinComb> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.integer().expect("digit present");
            let mut coeff = Q::from_integer(num);
            if self.peek() == Some('/') {
                self.pos += 1;
                let at = self.pos;
                let Some(den) = self.integer() else {
                    return self.err("expected a denominator");
                };
                if den.is_zero() {
                    return Err(Error::ZeroDenominator { offset: at });
                }
                coeff /= Q::from_integer(den);
            }
            if self.peek() == Some('*') {
                self.pos += 1;
                let w = self.word()?;
                return Ok(LinComb::term(w, coeff));
            }
            if coeff.is_zero() {
                return Ok(LinComb::zero());
            }
            return self.err("expected `*` after coefficient");
        }
        let w = self.word()?;
        Ok(LinComb::term(w, Q::one()))
    }

    fn expr(&mut self) -> Result<LinComb> {
        let mut out = LinComb::zero();
        let mut sign = Q::one();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            out.add_scaled(&t, &sign);
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = Q::one();
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -Q::one();
                }
                None => return Ok(out),
                Some(c) => return self.err(format!("unexpected `{c}`")),
            }
        }
    }
}

/// Parses a linear combination of (not necessarily basis) words.
pub fn parse_expr(text: &str, alphabet: &Alphabet) -> Result<LinComb> {
    let mut p = Parser {
        src: text,
        pos: 0,
        alphabet,
    };
    p.expr()
}

/// Parses a single word with no coefficient.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let mut p = Parser {
        src: text,
        pos: 0,
        alphabet,
    };
    let w = p.word()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected `{c}`"));
    }
    Ok(w)
}

pub fn format_expr(x: &LinComb, alphabet: &Alphabet) -> String {
    x.display(alphabet)
}
