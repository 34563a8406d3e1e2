//! Finitely presented groups: words, presentations and Todd–Coxeter coset
//! enumeration.

mod coset;
mod parse;
mod word;

pub use coset::{coset_enumeration, CosetTable, EnumerationError, Strategy, DEFAULT_MAX_COSETS};
pub use parse::{parse_presentation, parse_word, ParseError};
pub use word::Word;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Generators plus relators of a finitely presented group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("relator references generator {index} but only {count} are declared")]
    UndeclaredGenerator { index: usize, count: usize },
    #[error("triangle exponents must satisfy 1 <= k <= l <= m <= 6, got ({0}, {1}, {2})")]
    TriangleOutOfRange(u32, u32, u32),
}

impl Presentation {
    /// Relators are freely reduced. Relators that reduce to the empty word are
    /// kept as identity words so the relator count matches the input.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(PresentationError::DuplicateGenerator(name.clone()));
            }
        }
        for r in &relators {
            if r.max_generator() > generator_names.len() {
                return Err(PresentationError::UndeclaredGenerator {
                    index: r.max_generator(),
                    count: generator_names.len(),
                });
            }
        }
        let relators = relators.iter().map(Word::reduced).collect();
        Ok(Presentation { generator_names, relators })
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Number of relators that reduce to the identity.
    pub fn trivial_relators(&self) -> usize {
        self.relators.iter().filter(|r| r.is_identity()).count()
    }

    /// Returns a new presentation with additional relators appended.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Self, PresentationError> {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Presentation::new(self.generator_names.clone(), relators)
    }

    /// The presentation `⟨a, b, c | R(k, l, m)⟩`.
    pub fn triangle(k: u32, l: u32, m: u32) -> Result<Self, PresentationError> {
        let relators = triangle_relators(k, l, m)?;
        Presentation::new(vec!["a".into(), "b".into(), "c".into()], relators)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse_word(text, &self.generator_names)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | ", self.generator_names.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display_with(&self.generator_names))?;
        }
        Ok(())
    }
}

/// The six relators `a², b², c², (ab)^k, (bc)^l, (ac)^m` over generators
/// `a, b, c` (indices 1, 2, 3).
pub fn triangle_relators(k: u32, l: u32, m: u32) -> Result<Vec<Word>, PresentationError> {
    if !(1 <= k && k <= l && l <= m && m <= 6) {
        return Err(PresentationError::TriangleOutOfRange(k, l, m));
    }
    let (a, b, c) = (Word::generator(0), Word::generator(1), Word::generator(2));
    Ok(vec![
        a.pow(2),
        b.pow(2),
        c.pow(2),
        a.mul(&b).pow(k as i64),
        b.mul(&c).pow(l as i64),
        a.mul(&c).pow(m as i64),
    ])
}

/// Parses either an explicit presentation (`gens | rels`) or the shorthand
/// `R(k,l,m)` optionally followed by `+ rel, rel, ...` over `a, b, c`.
pub fn parse_group_spec(text: &str) -> Result<Presentation, GroupSpecError> {
    let trimmed = text.trim();
    if let Some(rest) = trimmed.strip_prefix("R(") {
        let close = rest.find(')').ok_or(GroupSpecError::BadShorthand(text.to_string()))?;
        let nums: Vec<u32> = rest[..close]
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| GroupSpecError::BadShorthand(text.to_string()))?;
        if nums.len() != 3 {
            return Err(GroupSpecError::BadShorthand(text.to_string()));
        }
        let base = Presentation::triangle(nums[0], nums[1], nums[2])?;
        let tail = rest[close + 1..].trim();
        if tail.is_empty() {
            return Ok(base);
        }
        let extra = tail.strip_prefix('+').ok_or(GroupSpecError::BadShorthand(text.to_string()))?;
        let mut words = Vec::new();
        for part in split_top_level(extra) {
            words.push(base.parse_word(part.trim())?);
        }
        return Ok(base.with_relators(words)?);
    }
    Ok(parse_presentation(trimmed)?)
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts.into_iter().filter(|p| !p.trim().is_empty()).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupSpecError {
    #[error("malformed R(k,l,m) shorthand: `{0}`")]
    BadShorthand(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}
