use std::fmt;

use serde::{Deserialize, Serialize};

/// A word over the generators of a presentation.
///
/// Letters are signed, 1-based generator indices: `k` is the `k`-th generator
/// and `-k` its inverse. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw letters without reducing it.
    pub fn from_letters(letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0));
        Word(letters)
    }

    /// The word consisting of the single generator `gen` (0-based).
    pub fn generator(gen: usize) -> Self {
        Word(vec![gen as i32 + 1])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index referenced (1-based), or 0 for the identity.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters).reduced()
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters).reduced()
    }

    /// `self^by = by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().mul(self).mul(by)
    }

    /// `[self, other] = self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Free reduction: cancels adjacent `x x⁻¹` pairs.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free and cyclic reduction. The result is a conjugate of `self`.
    pub fn cyclically_reduced(&self) -> Word {
        let w = self.reduced();
        let letters = &w.0;
        let (mut lo, mut hi) = (0usize, letters.len());
        while hi - lo >= 2 && letters[lo] == -letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Word(letters[lo..hi].to_vec())
    }

    /// Renders the word with the given generator names, e.g. `a*b^-1`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let idx = l.unsigned_abs() as usize - 1;
            let name = self.names.get(idx).map(String::as_str).unwrap_or("?");
            let exp = if l < 0 { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}
