//! Text format for presentations:
//!
//! ```text
//! < x, y, z | [x,y], [x,z], [y,z] >
//! < x_1, x_2 | x_1 x_2 x_1^-1 x_2-1 > @meridian=x_1, @longitude=x_2 x_1^-1
//! ```
//!
//! Exponents follow a factor directly (`x2`, `x-1`, `x^-1`); `[u,v]` is
//! `u v u⁻¹ v⁻¹`; `1` is the empty word; `#` starts a comment. An undeclared
//! identifier made only of declared one-letter generators is read as their
//! product (`xy` = `x y`), with any exponent applying to the last letter.

use super::{Letter, Presentation, Word};
use crate::error::{Error, Result};

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    names: Vec<String>,
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
        names: Vec::new(),
    };
    p.presentation()
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.col,
            message: msg.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.err(format!("expected `{want}`, found `{c}`")),
            None => self.err(format!("expected `{want}`, found end of input")),
        }
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || c == '_' || c == '\'' {
                self.bump();
            } else {
                break;
            }
        }
        if self.chars[self.pos - 1] == '_' {
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn presentation(&mut self) -> Result<Presentation> {
        self.expect('<')?;
        self.skip_ws();
        if self.peek() != Some('|') {
            loop {
                self.skip_ws();
                let (line, col) = (self.line, self.col);
                let Some(name) = self.ident() else {
                    return self.err("expected a generator name");
                };
                if self.names.contains(&name) {
                    return Err(Error::Syntax {
                        line,
                        column: col,
                        message: format!("duplicate generator `{name}`"),
                    });
                }
                self.names.push(name);
                self.skip_ws();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect('|')?;
        let mut relators = Vec::new();
        self.skip_ws();
        if self.peek() != Some('>') {
            loop {
                relators.push(self.word()?);
                self.skip_ws();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect('>')?;
        let mut pres = Presentation::new(self.names.clone(), relators)?;
        self.skip_ws();
        let mut meridian = None;
        let mut longitude = None;
        while self.peek() == Some('@') {
            self.bump();
            let Some(key) = self.ident() else {
                return self.err("expected annotation name");
            };
            self.expect('=')?;
            let w = self.word()?;
            match key.as_str() {
                "meridian" => meridian = Some(w),
                "longitude" => longitude = Some(w),
                _ => return self.err(format!("unknown annotation `@{key}`")),
            }
            self.skip_ws();
            if self.peek() == Some(',') {
                self.bump();
                self.skip_ws();
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        match (meridian, longitude) {
            (Some(m), Some(l)) => pres = pres.with_peripheral(m, l)?,
            (None, None) => {}
            _ => return self.err("@meridian and @longitude must be given together"),
        }
        Ok(pres)
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters: Vec<Letter> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(',') | Some('>') | Some(')') | Some(']') | Some('@') => break,
                _ => {}
            }
            let f = self.factor()?;
            letters.extend_from_slice(f.letters());
        }
        Ok(Word::from_letters(letters))
    }

    fn factor(&mut self) -> Result<Word> {
        let (line, col) = (self.line, self.col);
        let base = match self.peek() {
            Some('(') => {
                self.bump();
                let w = self.word()?;
                self.expect(')')?;
                w
            }
            Some('[') => {
                self.bump();
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Word::commutator(&u, &v)
            }
            Some('1') => {
                self.bump();
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return self.err("unexpected number");
                }
                Word::identity()
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().expect("alphabetic start");
                if let Some(g) = self.names.iter().position(|n| *n == name) {
                    let e = self.exponent()?;
                    return Ok(Word::letter(g, e));
                }
                let split: Option<Vec<usize>> = if name.chars().all(|c| c.is_ascii_alphabetic()) {
                    name.chars()
                        .map(|c| self.names.iter().position(|n| *n == c.to_string()))
                        .collect()
                } else {
                    None
                };
                let Some(gens) = split else {
                    return Err(Error::UndeclaredGenerator {
                        name,
                        line,
                        column: col,
                    });
                };
                let e = self.exponent()?;
                let mut letters: Vec<Letter> = gens.iter().map(|&g| (g, 1)).collect();
                if let Some(last) = letters.last_mut() {
                    last.1 = e;
                }
                return Ok(Word::from_letters(letters));
            }
            Some(c) => return self.err(format!("unexpected character `{c}`")),
            None => return self.err("unexpected end of input"),
        };
        let e = self.exponent()?;
        Ok(base.pow(e))
    }

    /// Optional exponent immediately following a factor.
    fn exponent(&mut self) -> Result<i32> {
        let caret = self.peek() == Some('^');
        if caret {
            self.bump();
        }
        let neg = self.peek() == Some('-');
        if neg {
            self.bump();
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            if caret || neg {
                return self.err("expected an integer exponent");
            }
            return Ok(1);
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let Ok(v) = s.parse::<i32>() else {
            return self.err("exponent out of range");
        };
        Ok(if neg { -v } else { v })
    }
}
