//! Text format for finitely presented groups.
//!
//! ```text
//! presentation := gens '|' [ word { ',' word } ]
//! gens         := ident { ',' ident }
//! word         := factor { '*' factor }
//! factor       := primary { '^' ( ['-'] int | ident | '(' word ')' ) }
//! primary      := ident | '1' | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `x^n` is a power, `x^y` is the conjugate `y⁻¹xy` and `[x,y]` is the
//! commutator `x⁻¹y⁻¹xy`.

use thiserror::Error;

use super::{Presentation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("undeclared generator `{name}` at line {line}, column {column}")]
    UndeclaredGenerator { name: String, line: usize, column: usize },
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Star,
    Caret,
    Minus,
    Comma,
    Bar,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '-' => Some(Tok::Minus),
            ',' => Some(Tok::Comma),
            '|' => Some(Tok::Bar),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line: l0, column: c0 });
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let value = s.parse::<u64>().map_err(|_| ParseError::Syntax {
                line: l0,
                column: c0,
                message: format!("integer `{s}` out of range"),
            })?;
            column += i - start;
            out.push(Spanned { tok: Tok::Int(value), line: l0, column: c0 });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, column: c0 });
            continue;
        }
        return Err(ParseError::Syntax { line: l0, column: c0, message: format!("unexpected character `{c}`") });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    gens: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError::Syntax { line: t.line, column: t.column, message: message.into() }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn generator(&self, name: &str, at: &Spanned) -> Result<Word, ParseError> {
        match self.gens.iter().position(|g| g == name) {
            Some(i) => Ok(Word::generator(i)),
            None => Err(ParseError::UndeclaredGenerator {
                name: name.to_string(),
                line: at.line,
                column: at.column,
            }),
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut w = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            w = w.mul(&rhs);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let mut w = self.primary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            match self.peek().clone() {
                Tok::Int(n) => {
                    self.bump();
                    w = w.pow(n as i64);
                }
                Tok::Minus => {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(n) => {
                            self.bump();
                            w = w.pow(-(n as i64));
                        }
                        _ => return Err(self.error("expected integer after `^-`")),
                    }
                }
                Tok::Ident(name) => {
                    let at = self.bump();
                    let by = self.generator(&name, &at)?;
                    w = w.conjugate(&by);
                }
                Tok::LParen => {
                    self.bump();
                    let by = self.word()?;
                    self.expect(Tok::RParen, "`)`")?;
                    w = w.conjugate(&by);
                }
                _ => return Err(self.error("expected exponent or conjugating word after `^`")),
            }
        }
        Ok(w)
    }

    fn primary(&mut self) -> Result<Word, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let at = self.bump();
                self.generator(&name, &at)
            }
            Tok::Int(1) => {
                self.bump();
                Ok(Word::identity())
            }
            Tok::LParen => {
                self.bump();
                let w = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(w)
            }
            Tok::LBracket => {
                self.bump();
                let x = self.word()?;
                self.expect(Tok::Comma, "`,` inside commutator")?;
                let y = self.word()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(x.commutator(&y))
            }
            Tok::End => Err(self.error("unexpected end of input")),
            other => Err(self.error(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a presentation in the `gens | rel, rel, ...` format. Relators are
/// returned freely reduced.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let toks = lex(text)?;
    let mut pos = 0;
    let mut names: Vec<String> = Vec::new();
    loop {
        match &toks[pos].tok {
            Tok::Ident(name) => {
                if names.contains(name) {
                    return Err(ParseError::DuplicateGenerator(name.clone()));
                }
                names.push(name.clone());
                pos += 1;
            }
            _ => {
                return Err(ParseError::Syntax {
                    line: toks[pos].line,
                    column: toks[pos].column,
                    message: "expected generator name".into(),
                })
            }
        }
        match &toks[pos].tok {
            Tok::Comma => pos += 1,
            Tok::Bar => {
                pos += 1;
                break;
            }
            _ => {
                return Err(ParseError::Syntax {
                    line: toks[pos].line,
                    column: toks[pos].column,
                    message: "expected `,` or `|` after generator".into(),
                })
            }
        }
    }
    let relators = {
        let mut p = Parser { toks, pos, gens: &names };
        let mut rels = Vec::new();
        if *p.peek() != Tok::End {
            loop {
                rels.push(p.word()?);
                match p.peek() {
                    Tok::Comma => {
                        p.bump();
                    }
                    Tok::End => break,
                    _ => return Err(p.error("expected `,` or end of input")),
                }
            }
        }
        rels
    };
    Ok(Presentation::new(names, relators).expect("names checked unique"))
}

/// Parses a single word over an existing generator list.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, gens: generators };
    let w = p.word()?;
    if *p.peek() != Tok::End {
        return Err(p.error("trailing input after word"));
    }
    Ok(w)
}
