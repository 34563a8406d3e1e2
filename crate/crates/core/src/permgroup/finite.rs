//! Finite groups as indexed element sets with right-multiplication tables.

use std::collections::HashMap;

use thiserror::Error;

use super::perm::Perm;
use super::schreier::StabChain;
use crate::fpgroup::{CosetTable, Word};

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator action {0} is not a permutation of the elements")]
    NotPermutation(usize),
    #[error("generator actions do not act transitively")]
    NotTransitive,
    #[error("group has {0} elements, more than the supported {1}")]
    TooLarge(u128, usize),
    #[error("generator degree mismatch")]
    DegreeMismatch,
    #[error("too many generators ({0})")]
    TooManyGenerators(usize),
}

/// Largest group order handled by [`FiniteGroup`].
pub const MAX_ELEMENTS: usize = 1 << 22;

/// A finite group with elements `0..n`, identity `0`.
///
/// Right multiplication by each generator and its inverse is stored as a
/// table. Every element also carries a shortest word in the generators,
/// which gives general products: `x * y` is `x` pushed along the word of `y`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    gens: Vec<u32>,
    /// Column `2g` is right multiplication by generator `g`, `2g+1` by its
    /// inverse.
    right: Vec<Vec<u32>>,
    word_start: Vec<u32>,
    word_cols: Vec<u8>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u16>>,
}

impl FiniteGroup {
    /// Builds a group from its right regular action: `actions[g][x]` is the
    /// index of `x * g`, with element 0 the identity. The action must be
    /// regular, as for a coset table over the trivial subgroup.
    pub fn from_right_action(actions: Vec<Vec<u32>>) -> Result<Self, GroupError> {
        let n = actions.first().map_or(1, Vec::len);
        if actions.len() > 127 {
            return Err(GroupError::TooManyGenerators(actions.len()));
        }
        let mut right = Vec::with_capacity(2 * actions.len());
        for (g, act) in actions.into_iter().enumerate() {
            if act.len() != n {
                return Err(GroupError::NotPermutation(g));
            }
            let p = Perm::from_images(act).map_err(|_| GroupError::NotPermutation(g))?;
            let inv = p.inverse();
            right.push(p.images().to_vec());
            right.push(inv.images().to_vec());
        }
        Self::assemble(n, right)
    }

    pub fn from_coset_table(table: &CosetTable) -> Result<Self, GroupError> {
        let actions = (0..table.num_generators()).map(|g| table.generator_images(g)).collect();
        Self::from_right_action(actions)
    }

    /// Builds the group generated by permutations. Elements are numbered in
    /// breadth-first order from the identity.
    pub fn from_perms(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let chain = StabChain::new(degree, gens);
        let order = chain.order();
        if order > MAX_ELEMENTS as u128 {
            return Err(GroupError::TooLarge(order, MAX_ELEMENTS));
        }
        let base = chain.base();
        Self::from_perms_with_base(gens, &base, order as usize)
    }

    fn from_perms_with_base(gens: &[Perm], base: &[u32], order: usize) -> Result<Self, GroupError> {
        if gens.len() > 127 {
            return Err(GroupError::TooManyGenerators(gens.len()));
        }
        let inv_gens: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::with_capacity(order);
        let mut keys: Vec<Vec<u32>> = vec![base.to_vec()];
        index.insert(base.to_vec(), 0);
        let mut right: Vec<Vec<u32>> = vec![Vec::with_capacity(order); 2 * gens.len()];
        let mut k = 0;
        while k < keys.len() {
            for (g, p) in gens.iter().enumerate() {
                for (col, q) in [(2 * g, p), (2 * g + 1, &inv_gens[g])] {
                    let key: Vec<u32> = keys[k].iter().map(|&b| q.apply(b)).collect();
                    let next = keys.len() as u32;
                    let idx = *index.entry(key.clone()).or_insert_with(|| {
                        keys.push(key);
                        next
                    });
                    right[col].push(idx);
                }
            }
            k += 1;
        }
        debug_assert_eq!(keys.len(), order);
        Self::assemble(keys.len(), right)
    }

    fn assemble(n: usize, right: Vec<Vec<u32>>) -> Result<Self, GroupError> {
        let ncols = right.len();
        let gens: Vec<u32> = (0..ncols / 2).map(|g| right[2 * g][0]).collect();
        // Breadth-first words from the identity.
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0u8; n];
        let mut order_seen = Vec::with_capacity(n);
        parent[0] = 0;
        order_seen.push(0u32);
        let mut k = 0;
        while k < order_seen.len() {
            let x = order_seen[k];
            for (col, r) in right.iter().enumerate() {
                let y = r[x as usize];
                if parent[y as usize] == u32::MAX {
                    parent[y as usize] = x;
                    via[y as usize] = col as u8;
                    order_seen.push(y);
                }
            }
            k += 1;
        }
        if order_seen.len() != n {
            return Err(GroupError::NotTransitive);
        }
        let mut depth = vec![0u32; n];
        for &x in &order_seen[1..] {
            depth[x as usize] = depth[parent[x as usize] as usize] + 1;
        }
        let mut word_start = Vec::with_capacity(n + 1);
        let mut word_cols = Vec::new();
        for x in 0..n {
            word_start.push(word_cols.len() as u32);
            let start = word_cols.len();
            let mut y = x;
            while y != 0 {
                word_cols.push(via[y]);
                y = parent[y] as usize;
            }
            word_cols[start..].reverse();
        }
        word_start.push(word_cols.len() as u32);
        let mut g = FiniteGroup {
            n,
            gens,
            right,
            word_start,
            word_cols,
            inv: Vec::new(),
            orders: Vec::new(),
            table: None,
        };
        if n <= TABLE_LIMIT {
            let mut table = vec![0u16; n * n];
            for x in 0..n {
                table[x * n] = x as u16;
                for &y in &order_seen[1..] {
                    let p = parent[y as usize] as usize;
                    let col = via[y as usize] as usize;
                    let xp = table[x * n + p] as usize;
                    table[x * n + y as usize] = g.right[col][xp] as u16;
                }
            }
            g.table = Some(table);
        }
        g.inv = (0..n as u32)
            .map(|x| g.word_cols(x).iter().rev().fold(0u32, |acc, &c| g.right[(c ^ 1) as usize][acc as usize]))
            .collect();
        g.orders = (0..n as u32)
            .map(|x| {
                let mut y = x;
                let mut k = 1;
                while y != 0 {
                    y = g.mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.n as u32
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    fn word_cols(&self, x: u32) -> &[u8] {
        let s = self.word_start[x as usize] as usize;
        let e = self.word_start[x as usize + 1] as usize;
        &self.word_cols[s..e]
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if let Some(t) = &self.table {
            return t[x as usize * self.n + y as usize] as u32;
        }
        self.word_cols(y).iter().fold(x, |acc, &c| self.right[c as usize][acc as usize])
    }

    pub fn inverse(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn element_order(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn pow(&self, x: u32, exp: i64) -> u32 {
        let base = if exp < 0 { self.inverse(x) } else { x };
        let e = exp.unsigned_abs() % self.orders[x as usize] as u64;
        (0..e).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        let a = self.mul(self.inverse(x), self.inverse(y));
        self.mul(self.mul(a, x), y)
    }

    /// A shortest word for `x` in the generators.
    pub fn word(&self, x: u32) -> Word {
        Word::from_letters(
            self.word_cols(x)
                .iter()
                .map(|&c| {
                    let g = (c / 2) as i32 + 1;
                    if c % 2 == 0 {
                        g
                    } else {
                        -g
                    }
                })
                .collect(),
        )
    }

    /// Evaluates a word in the generators.
    pub fn eval(&self, w: &Word) -> u32 {
        w.letters().iter().fold(0u32, |acc, &l| {
            let col = 2 * (l.unsigned_abs() as usize - 1) + (l < 0) as usize;
            self.right[col][acc as usize]
        })
    }

    /// Image of `x` under a homomorphism given by images of the generators.
    /// `target` multiplies images; the result is only meaningful when the
    /// generator assignment extends to a homomorphism.
    pub fn map_via_words<F: Fn(u32, u32) -> u32, I: Fn(u32) -> u32>(
        &self,
        x: u32,
        gen_images: &[u32],
        target_identity: u32,
        mul: F,
        inv: I,
    ) -> u32 {
        self.word_cols(x).iter().fold(target_identity, |acc, &c| {
            let img = gen_images[(c / 2) as usize];
            mul(acc, if c % 2 == 0 { img } else { inv(img) })
        })
    }

    /// Permutation of the element indices induced by right multiplication by
    /// generator `g`.
    pub fn right_action(&self, g: usize) -> &[u32] {
        &self.right[2 * g]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.gens;
        gens.iter().all(|&x| gens.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{coset_enumeration, parse_group_spec, Strategy};

    fn s4() -> FiniteGroup {
        let gens = [Perm::parse(4, "(1,2,3,4)").unwrap(), Perm::parse(4, "(1,2)").unwrap()];
        FiniteGroup::from_perms(4, &gens).unwrap()
    }

    fn check_group_axioms(g: &FiniteGroup) {
        let n = g.order() as u32;
        for x in 0..n {
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inverse(x)), 0);
            assert_eq!(g.eval(&g.word(x)), x);
        }
        for x in 0..n.min(40) {
            for y in 0..n.min(40) {
                for z in 0..n.min(40) {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn s4_from_perms() {
        let g = s4();
        assert_eq!(g.order(), 24);
        check_group_axioms(&g);
        let mut hist = [0usize; 5];
        for x in g.elements() {
            hist[g.element_order(x) as usize] += 1;
        }
        assert_eq!(hist, [0, 1, 9, 8, 6]);
    }

    #[test]
    fn from_coset_table_matches() {
        let p = parse_group_spec("R(2,3,5)").unwrap();
        let t = coset_enumeration(&p, &[], 10_000, Strategy::Hlt).unwrap();
        let g = FiniteGroup::from_coset_table(&t).unwrap();
        assert_eq!(g.order(), 120);
        check_group_axioms(&g);
        for r in p.relators() {
            assert_eq!(g.eval(r), 0);
        }
    }

    #[test]
    fn large_group_without_table() {
        let p = parse_group_spec("R(2,4,5)+(a*b^c)^4").unwrap();
        let t = coset_enumeration(&p, &[], 100_000, Strategy::Hlt).unwrap();
        let g = FiniteGroup::from_coset_table(&t).unwrap();
        assert_eq!(g.order(), 320);
        check_group_axioms(&g);
        let p = parse_group_spec("R(2,4,5)+(a*b^c)^6,(c*a^(b^c*a))^4").unwrap();
        let t = coset_enumeration(&p, &[], 100_000, Strategy::Hlt).unwrap();
        let g = FiniteGroup::from_coset_table(&t).unwrap();
        assert!(g.table.is_none());
        check_group_axioms(&g);
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_perms(3, &[Perm::identity(3)]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.generators(), &[0]);
    }

    #[test]
    fn pow_and_commutator() {
        let g = s4();
        let x = g.generators()[0];
        assert_eq!(g.pow(x, 4), 0);
        assert_eq!(g.pow(x, -1), g.inverse(x));
        let y = g.generators()[1];
        assert_ne!(g.commutator(x, y), 0);
    }
}
