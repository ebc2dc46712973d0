//! Text syntax for algebra elements.
//!
//! ```text
//! element := ['+'|'-'] term (('+'|'-') term)*
//! term    := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor  := var ['^' nat]
//! coeff   := int | int '/' int
//! ```
//!
//! Whitespace is ignored. Positions in errors are byte offsets into the input.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::monoid::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            c if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += c.len_utf8();
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    alphabet: &'a Alphabet,
    field: FieldSpec,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn element(&mut self) -> Result<Vec<(Word, FieldValue)>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (w, c) = self.term()?;
            terms.push((w, if negate { -&c } else { c }));
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                Tok::End => return Ok(terms),
                other => return self.error(format!("expected `+`, `-` or end of input, found {other:?}")),
            };
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(Word, FieldValue)> {
        let mut coeff = self.field.one();
        let mut letters: Vec<Letter> = Vec::new();
        match self.peek().clone() {
            Tok::Num(num) => {
                self.bump();
                let mut text = num.clone();
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Num(d) => {
                            text = format!("{num}/{d}");
                            d
                        }
                        _ => return Err(Error::MalformedCoefficient(format!("{num}/"))),
                    }
                } else {
                    "1".to_string()
                };
                let n: BigInt = num.parse().expect("digits");
                let d: BigInt = den.parse().expect("digits");
                coeff = self
                    .field
                    .ratio(&n, &d)
                    .map_err(|_| Error::MalformedCoefficient(text.clone()))?;
                if *self.peek() != Tok::Star {
                    return Ok((Word::one(), coeff));
                }
                self.bump();
                self.factor(&mut letters)?;
            }
            Tok::Ident(_) => self.factor(&mut letters)?,
            other => return self.error(format!("expected a coefficient or variable, found {other:?}")),
        }
        while *self.peek() == Tok::Star {
            self.bump();
            self.factor(&mut letters)?;
        }
        Ok((Word::from_letters(letters), coeff))
    }

    fn factor(&mut self, letters: &mut Vec<Letter>) -> Result<()> {
        let name = match self.peek().clone() {
            Tok::Ident(name) => name,
            other => return self.error(format!("expected a variable, found {other:?}")),
        };
        let letter = self.alphabet.letter(&name)?;
        self.bump();
        let mut exp = 1usize;
        if *self.peek() == Tok::Caret {
            self.bump();
            exp = match self.peek().clone() {
                Tok::Num(n) => match n.parse() {
                    Ok(e) if e <= 1 << 16 => e,
                    _ => return self.error(format!("exponent `{n}` too large")),
                },
                other => return self.error(format!("expected an exponent, found {other:?}")),
            };
            self.bump();
        }
        letters.extend(std::iter::repeat(letter).take(exp));
        Ok(())
    }
}

/// Parses an element over the given alphabet and field.
pub fn parse_element(alphabet: &Arc<Alphabet>, field: FieldSpec, text: &str) -> Result<AlgebraElement> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        at: 0,
        alphabet,
        field,
    };
    let terms = parser.element()?;
    AlgebraElement::from_terms(alphabet.clone(), field, terms)
}

/// Parses a single word such as `x1*y2^2*x1` (or `1`).
pub fn parse_word(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word> {
    let e = parse_element(alphabet, FieldSpec::Rationals, text)?;
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() => Ok(w.clone()),
        _ => Err(Error::Syntax {
            pos: 0,
            msg: format!("`{text}` is not a single word"),
        }),
    }
}

/// Canonical text of an element; `0` for zero.
pub fn format_element(a: &AlgebraElement) -> String {
    a.to_string()
}
