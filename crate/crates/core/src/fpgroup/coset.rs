//! Todd–Coxeter coset enumeration.
//!
//! Column `2g` of the table holds the action of generator `g`, column
//! `2g + 1` the action of its inverse. Coset indices are 0-based in the API;
//! coset 0 is the coset of the subgroup itself (printed as coset 1).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::{Presentation, Word};

/// Default cap on simultaneously live cosets.
pub const DEFAULT_MAX_COSETS: usize = 2_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Hasselgrove–Leech–Trotter with lookahead when the table fills up.
    #[default]
    Hlt,
    /// Felsch: define the first gap, then process all deductions.
    Felsch,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hlt" => Ok(Strategy::Hlt),
            "felsch" => Ok(Strategy::Felsch),
            other => Err(format!("unknown strategy `{other}` (expected hlt or felsch)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Hlt => "hlt",
            Strategy::Felsch => "felsch",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    /// The limit was reached. The index is unknown at this limit; this says
    /// nothing about whether the group is infinite.
    #[error("overflow at {limit} cosets")]
    Overflow { limit: usize },
    #[error("coset limit must be at least 1")]
    InvalidLimit,
    #[error("subgroup generator references generator {0} outside the presentation")]
    BadSubgroupGenerator(usize),
}

/// A completed coset table.
#[derive(Clone, Debug)]
pub struct CosetTable {
    n_cosets: usize,
    n_generators: usize,
    table: Vec<u32>,
    subgroup_generators: Vec<Word>,
    total_defined: usize,
}

impl CosetTable {
    pub fn n_cosets(&self) -> usize {
        self.n_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.n_generators
    }

    pub fn subgroup_generators(&self) -> &[Word] {
        &self.subgroup_generators
    }

    /// Total number of cosets defined during the run, including those later
    /// found to coincide.
    pub fn total_defined(&self) -> usize {
        self.total_defined
    }

    /// Image of `coset` under generator `gen` (or its inverse).
    pub fn image(&self, coset: usize, gen: usize, inverse: bool) -> usize {
        let col = 2 * gen + inverse as usize;
        self.table[coset * 2 * self.n_generators + col] as usize
    }

    /// Image under a signed 1-based letter.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.image(coset, letter.unsigned_abs() as usize - 1, letter < 0)
    }

    pub fn trace(&self, coset: usize, word: &Word) -> usize {
        word.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Images of every coset under generator `gen`.
    pub fn generator_images(&self, gen: usize) -> Vec<u32> {
        (0..self.n_cosets).map(|c| self.image(c, gen, false) as u32).collect()
    }

    /// Every entry is defined and each generator column is inverse to its
    /// partner column.
    pub fn is_closed(&self) -> bool {
        let cols = 2 * self.n_generators;
        (0..self.n_cosets).all(|c| {
            (0..cols).all(|col| {
                let d = self.table[c * cols + col];
                d != NONE && (d as usize) < self.n_cosets && self.table[d as usize * cols + (col ^ 1)] as usize == c
            })
        })
    }

    /// Every relator traces to the identity from every coset.
    pub fn relators_hold(&self, presentation: &Presentation) -> bool {
        (0..self.n_cosets).all(|c| presentation.relators().iter().all(|r| self.trace(c, r) == c))
    }

    /// The first coset is fixed by every subgroup generator.
    pub fn subgroup_fixes_first_coset(&self) -> bool {
        self.subgroup_generators.iter().all(|w| self.trace(0, w) == 0)
    }
}

impl fmt::Display for CosetTable {
    /// 1-based rendering, one row per coset: `coset: g1 g1^-1 g2 g2^-1 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = 2 * self.n_generators;
        for c in 0..self.n_cosets {
            write!(f, "{}:", c + 1)?;
            for col in 0..cols {
                write!(f, " {}", self.table[c * cols + col] + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group given by `presentation`.
pub fn coset_enumeration(
    presentation: &Presentation,
    subgroup: &[Word],
    limit: usize,
    strategy: Strategy,
) -> Result<CosetTable, EnumerationError> {
    if limit == 0 {
        return Err(EnumerationError::InvalidLimit);
    }
    let ngens = presentation.num_generators();
    for w in subgroup {
        if w.max_generator() > ngens {
            return Err(EnumerationError::BadSubgroupGenerator(w.max_generator()));
        }
    }
    let mut engine = Engine::new(presentation, subgroup, limit);
    match strategy {
        Strategy::Hlt => engine.run_hlt()?,
        Strategy::Felsch => engine.run_felsch()?,
    }
    Ok(engine.finish(subgroup.to_vec()))
}

fn to_columns(word: &Word) -> Vec<u32> {
    word.letters()
        .iter()
        .map(|&l| 2 * (l.unsigned_abs() - 1) + (l < 0) as u32)
        .collect()
}

struct Full;

struct Engine {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    limit: usize,
    total_defined: usize,
    relators: Vec<Vec<u32>>,
    subgroup: Vec<Vec<u32>>,
    rotations: Vec<Vec<Vec<u32>>>,
    queue: Vec<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
    events: u64,
}

impl Engine {
    fn new(presentation: &Presentation, subgroup: &[Word], limit: usize) -> Self {
        let ncols = 2 * presentation.num_generators();
        let relators: Vec<Vec<u32>> = presentation
            .relators()
            .iter()
            .map(Word::cyclically_reduced)
            .filter(|w| !w.is_identity())
            .map(|w| to_columns(&w))
            .collect();
        let subgroup = subgroup
            .iter()
            .map(Word::reduced)
            .filter(|w| !w.is_identity())
            .map(|w| to_columns(&w))
            .collect();
        let mut rotations: Vec<Vec<Vec<u32>>> = vec![Vec::new(); ncols];
        for r in &relators {
            let inv: Vec<u32> = r.iter().rev().map(|c| c ^ 1).collect();
            for base in [r, &inv] {
                for s in 0..base.len() {
                    let rot: Vec<u32> = base[s..].iter().chain(&base[..s]).copied().collect();
                    let bucket = &mut rotations[rot[0] as usize];
                    if !bucket.contains(&rot) {
                        bucket.push(rot);
                    }
                }
            }
        }
        let mut e = Engine {
            ncols,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            limit,
            total_defined: 0,
            relators,
            subgroup,
            rotations,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions: false,
            events: 0,
        };
        e.new_row();
        e
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn new_row(&mut self) -> u32 {
        let r = self.parent.len() as u32;
        self.parent.push(r);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live += 1;
        self.total_defined += 1;
        r
    }

    #[inline]
    fn get(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.ncols + col as usize]
    }

    #[inline]
    fn put(&mut self, c: u32, col: u32, v: u32) {
        self.table[c as usize * self.ncols + col as usize] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn link(&mut self, a: u32, col: u32, b: u32) {
        self.put(a, col, b);
        self.put(b, col ^ 1, a);
        self.events += 1;
        if self.track_deductions {
            self.deductions.push((a, col));
        }
    }

    fn define(&mut self, a: u32, col: u32) -> Result<(), Full> {
        if self.rows() >= self.limit {
            return Err(Full);
        }
        let b = self.new_row();
        self.link(a, col, b);
        Ok(())
    }

    fn rep(&mut self, k: u32) -> u32 {
        let mut root = k;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = k;
        while self.parent[cur as usize] != cur {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let phi = self.rep(k);
        let psi = self.rep(l);
        if phi != psi {
            let (mu, nu) = if phi < psi { (phi, psi) } else { (psi, phi) };
            self.parent[nu as usize] = mu;
            self.live -= 1;
            self.queue.push(nu);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.events += 1;
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.ncols as u32 {
                let d = self.get(g, col);
                if d == NONE {
                    continue;
                }
                self.put(d, col ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let m_img = self.get(mu, col);
                if m_img != NONE {
                    self.merge(nu, m_img);
                } else {
                    let n_img = self.get(nu, col ^ 1);
                    if n_img != NONE {
                        self.merge(mu, n_img);
                    } else {
                        self.link(mu, col, nu);
                    }
                }
            }
        }
    }

    /// Scans `word` at `a`, defining new cosets to close gaps.
    fn scan_and_fill(&mut self, a: u32, word: &[u32]) -> Result<(), Full> {
        let r = word.len();
        let (mut f, mut b) = (a, a);
        let mut i = 0usize;
        let mut j = r as isize - 1;
        loop {
            while i < r {
                let nx = self.get(f, word[i]);
                if nx == NONE {
                    break;
                }
                f = nx;
                i += 1;
            }
            if i == r {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i as isize {
                let nx = self.get(b, word[j as usize] ^ 1);
                if nx == NONE {
                    break;
                }
                b = nx;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i as isize {
                self.link(f, word[i], b);
                return Ok(());
            } else {
                self.define(f, word[i])?;
            }
        }
    }

    /// Scans `word` at `a` without defining; records deductions and
    /// coincidences.
    fn scan(&mut self, a: u32, word: &[u32]) {
        let r = word.len();
        let (mut f, mut b) = (a, a);
        let mut i = 0usize;
        let mut j = r as isize - 1;
        while i < r {
            let nx = self.get(f, word[i]);
            if nx == NONE {
                break;
            }
            f = nx;
            i += 1;
        }
        if i == r {
            if f != a {
                self.coincidence(f, a);
            }
            return;
        }
        while j >= i as isize {
            let nx = self.get(b, word[j as usize] ^ 1);
            if nx == NONE {
                break;
            }
            b = nx;
            j -= 1;
        }
        if j < i as isize {
            self.coincidence(f, b);
        } else if j == i as isize {
            self.link(f, word[i], b);
        }
    }

    fn process_row_hlt(&mut self, a: u32) -> Result<(), Full> {
        for r in 0..self.relators.len() {
            if !self.is_live(a) {
                return Ok(());
            }
            let w = std::mem::take(&mut self.relators[r]);
            let res = self.scan_and_fill(a, &w);
            self.relators[r] = w;
            res?;
        }
        for col in 0..self.ncols as u32 {
            if !self.is_live(a) {
                return Ok(());
            }
            if self.get(a, col) == NONE {
                self.define(a, col)?;
            }
        }
        Ok(())
    }

    fn fill_subgroup(&mut self) -> Result<(), Full> {
        for s in 0..self.subgroup.len() {
            let w = std::mem::take(&mut self.subgroup[s]);
            let res = self.scan_and_fill(0, &w);
            self.subgroup[s] = w;
            res?;
        }
        Ok(())
    }

    fn lookahead(&mut self) {
        let mut b = 0u32;
        while (b as usize) < self.rows() {
            if self.is_live(b) {
                for r in 0..self.relators.len() {
                    if !self.is_live(b) {
                        break;
                    }
                    let w = std::mem::take(&mut self.relators[r]);
                    self.scan(b, &w);
                    self.relators[r] = w;
                }
            }
            b += 1;
        }
    }

    /// Renumbers live rows consecutively. Returns the old-to-new map.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.rows();
        let mut map = vec![NONE; n];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for c in 0..n {
            if map[c] != NONE {
                for col in 0..self.ncols {
                    let v = self.table[c * self.ncols + col];
                    table.push(if v == NONE { NONE } else { map[v as usize] });
                }
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.deductions.clear();
        map
    }

    /// Frees space after the table filled up. Returns the new position for
    /// the row cursor, or `None` if nothing could be reclaimed.
    fn reclaim(&mut self, cursor: u32) -> Option<u32> {
        self.lookahead();
        if self.live >= self.limit {
            return None;
        }
        let map = self.compact();
        let mut c = cursor as usize;
        while c < map.len() && map[c] == NONE {
            c += 1;
        }
        Some(if c < map.len() { map[c] } else { self.rows() as u32 })
    }

    fn run_hlt(&mut self) -> Result<(), EnumerationError> {
        let overflow = EnumerationError::Overflow { limit: self.limit };
        while self.fill_subgroup().is_err() {
            self.reclaim(0).ok_or(overflow.clone())?;
        }
        let mut a = 0u32;
        while (a as usize) < self.rows() {
            if self.is_live(a)
                && self.process_row_hlt(a).is_err() {
                    a = self.reclaim(a).ok_or(overflow.clone())?;
                    continue;
                }
            a += 1;
        }
        Ok(())
    }

    fn process_deductions(&mut self) {
        while let Some((g, col)) = self.deductions.pop() {
            if !self.is_live(g) {
                continue;
            }
            let rots = std::mem::take(&mut self.rotations[col as usize]);
            for w in &rots {
                if !self.is_live(g) {
                    break;
                }
                self.scan(g, w);
            }
            self.rotations[col as usize] = rots;
            if !self.is_live(g) {
                continue;
            }
            let d = self.get(g, col);
            if d == NONE || !self.is_live(d) {
                continue;
            }
            let icol = (col ^ 1) as usize;
            let rots = std::mem::take(&mut self.rotations[icol]);
            for w in &rots {
                if !self.is_live(d) {
                    break;
                }
                self.scan(d, w);
            }
            self.rotations[icol] = rots;
        }
        for s in 0..self.subgroup.len() {
            let w = std::mem::take(&mut self.subgroup[s]);
            self.scan(0, &w);
            self.subgroup[s] = w;
        }
    }

    fn run_felsch(&mut self) -> Result<(), EnumerationError> {
        let overflow = EnumerationError::Overflow { limit: self.limit };
        self.track_deductions = true;
        self.fill_subgroup().map_err(|_| overflow.clone())?;
        loop {
            self.process_deductions();
            let mut a = 0u32;
            while (a as usize) < self.rows() {
                for col in 0..self.ncols as u32 {
                    if !self.is_live(a) {
                        break;
                    }
                    if self.get(a, col) == NONE {
                        self.define(a, col).map_err(|_| overflow.clone())?;
                        while !self.deductions.is_empty() {
                            self.process_deductions();
                        }
                    }
                }
                a += 1;
            }
            // Closing pass: every relator must already hold; anything found
            // here is fed back through the deduction loop.
            let before = self.events;
            for a in 0..self.rows() as u32 {
                for r in 0..self.relators.len() {
                    if !self.is_live(a) {
                        break;
                    }
                    let w = std::mem::take(&mut self.relators[r]);
                    let res = self.scan_and_fill(a, &w);
                    self.relators[r] = w;
                    res.map_err(|_| overflow.clone())?;
                }
            }
            self.fill_subgroup().map_err(|_| overflow.clone())?;
            if self.events == before {
                return Ok(());
            }
        }
    }

    fn finish(mut self, subgroup_generators: Vec<Word>) -> CosetTable {
        self.compact();
        CosetTable {
            n_cosets: self.rows(),
            n_generators: self.ncols / 2,
            table: self.table,
            subgroup_generators,
            total_defined: self.total_defined,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{parse_group_spec, parse_presentation};

    fn count(spec: &str, strategy: Strategy) -> usize {
        let p = parse_group_spec(spec).unwrap();
        let t = coset_enumeration(&p, &[], DEFAULT_MAX_COSETS, strategy).unwrap();
        assert!(t.is_closed());
        assert!(t.relators_hold(&p));
        t.n_cosets()
    }

    #[test]
    fn dihedral_orders() {
        for n in 1..=12 {
            let spec = format!("a,b | a^2, b^2, (a*b)^{n}");
            assert_eq!(count(&spec, Strategy::Hlt), 2 * n);
            assert_eq!(count(&spec, Strategy::Felsch), 2 * n);
        }
    }

    #[test]
    fn s4_from_triangle() {
        assert_eq!(count("R(2,3,3)", Strategy::Hlt), 24);
        assert_eq!(count("R(2,3,3)", Strategy::Felsch), 24);
    }

    #[test]
    fn g33_order_150() {
        assert_eq!(count("R(3,3,3) + (a*b^c)^5", Strategy::Hlt), 150);
    }

    #[test]
    fn trivial_and_cyclic() {
        assert_eq!(count("a | a", Strategy::Hlt), 1);
        assert_eq!(count("a | a^2", Strategy::Hlt), 2);
        assert_eq!(count("a | a^7", Strategy::Felsch), 7);
        assert_eq!(count("a,b | a, b", Strategy::Felsch), 1);
    }

    #[test]
    fn subgroup_index() {
        let p = parse_group_spec("R(2,3,3)").unwrap();
        let h = vec![Word::generator(0), Word::generator(1)];
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let t = coset_enumeration(&p, &h, 1000, s).unwrap();
            assert_eq!(t.n_cosets(), 6);
            assert!(t.subgroup_fixes_first_coset());
            assert!(t.relators_hold(&p));
        }
    }

    #[test]
    fn overflow_is_reported() {
        let p = parse_presentation("a,b | a^2").unwrap();
        let err = coset_enumeration(&p, &[], 50, Strategy::Hlt).unwrap_err();
        assert_eq!(err, EnumerationError::Overflow { limit: 50 });
        let err = coset_enumeration(&p, &[], 50, Strategy::Felsch).unwrap_err();
        assert_eq!(err, EnumerationError::Overflow { limit: 50 });
        assert_eq!(coset_enumeration(&p, &[], 0, Strategy::Hlt).unwrap_err(), EnumerationError::InvalidLimit);
    }

    #[test]
    fn tight_limit_uses_lookahead() {
        let p = parse_group_spec("R(2,3,5)").unwrap();
        let t = coset_enumeration(&p, &[], 121, Strategy::Hlt).unwrap();
        assert_eq!(t.n_cosets(), 120);
    }

    #[test]
    fn display_is_one_based() {
        let p = parse_presentation("a | a^2").unwrap();
        let t = coset_enumeration(&p, &[], 10, Strategy::Hlt).unwrap();
        assert_eq!(t.to_string(), "1: 2 2\n2: 1 1\n");
    }

    #[test]
    fn strategy_parse() {
        assert_eq!("HLT".parse::<Strategy>().unwrap(), Strategy::Hlt);
        assert_eq!("felsch".parse::<Strategy>().unwrap(), Strategy::Felsch);
        assert!("bogus".parse::<Strategy>().is_err());
    }
}
