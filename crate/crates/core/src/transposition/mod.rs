//! 6-transposition groups `(G, D)` and minimal 3-generation.
//!
//! `D` is a normal set of involutions (the identity may be included) that
//! generates `G` and whose pairwise products have order at most 6. `(G, D)` is
//! minimal 3-generated when `G` is generated by three members of `D` while
//! every proper subgroup generated by three members of `D` is already
//! generated by two of them.

mod audit;
mod classify;
mod kp;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::permgroup::{FiniteGroup, Subgroup};

pub use audit::{theorem_one_audit, AuditEntry, AuditReport, DChoice};
pub use classify::{
    main_table, minimal_quotients, row_presentation, ClassificationReport, DRule, QuotientEntry, TableRow,
};
pub use kp::{kp_membership, odd_core_structure, KpReport, OddCore, OddCoreKind};

/// Largest permitted order of a product of two members of `D`.
pub const MAX_PRODUCT_ORDER: u32 = 6;

/// One way in which a candidate `(G, D)` fails to be a 6-transposition group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotInvolution { element: u32, order: u32 },
    NotConjugationClosed { element: u32, conjugator: u32, image: u32 },
    DoesNotGenerate { generated_order: usize, group_order: usize },
    ProductOrderTooLarge { x: u32, y: u32, order: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInvolution { element, order } => {
                write!(f, "element {element} has order {order}, not 1 or 2")
            }
            Violation::NotConjugationClosed { element, conjugator, image } => {
                write!(f, "{element} conjugated by {conjugator} gives {image}, which is outside D")
            }
            Violation::DoesNotGenerate { generated_order, group_order } => {
                write!(f, "D generates a subgroup of order {generated_order}, not {group_order}")
            }
            Violation::ProductOrderTooLarge { x, y, order } => {
                write!(f, "product of {x} and {y} has order {order} > {MAX_PRODUCT_ORDER}")
            }
        }
    }
}

/// Every kind of violation found, one witness per kind.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("not a 6-transposition group: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct SystemViolations(pub Vec<Violation>);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MinimalityError {
    #[error("G is not generated by three elements of D")]
    NotThreeGenerated,
}

/// A verified 6-transposition group.
#[derive(Clone, Debug)]
pub struct TranspositionSystem<'g> {
    group: &'g FiniteGroup,
    /// Sorted, without the identity.
    d: Vec<u32>,
    in_d: Vec<bool>,
}

/// Checks the axioms, reporting every kind of failure.
pub fn verify_system<'g>(g: &'g FiniteGroup, d: &[u32]) -> Result<TranspositionSystem<'g>, SystemViolations> {
    let set: BTreeSet<u32> = d.iter().copied().filter(|&x| x != 0).collect();
    let mut in_d = vec![false; g.order()];
    for &x in &set {
        in_d[x as usize] = true;
    }
    let d: Vec<u32> = set.into_iter().collect();
    let mut found = Vec::new();

    if let Some(&x) = d.iter().find(|&&x| g.element_order(x) != 2) {
        found.push(Violation::NotInvolution { element: x, order: g.element_order(x) });
    }
    'closed: for &x in &d {
        for &s in g.generators() {
            let y = g.conj(x, s);
            if !in_d[y as usize] {
                found.push(Violation::NotConjugationClosed { element: x, conjugator: s, image: y });
                break 'closed;
            }
        }
    }
    let generated = g.generate(&d).order();
    if generated != g.order() {
        found.push(Violation::DoesNotGenerate { generated_order: generated, group_order: g.order() });
    }
    'products: for (i, &x) in d.iter().enumerate() {
        for &y in &d[i + 1..] {
            let order = g.element_order(g.mul(x, y));
            if order > MAX_PRODUCT_ORDER {
                found.push(Violation::ProductOrderTooLarge { x, y, order });
                break 'products;
            }
        }
    }
    if found.is_empty() {
        Ok(TranspositionSystem { group: g, d, in_d })
    } else {
        Err(SystemViolations(found))
    }
}

/// A triple of `D` generating a proper subgroup that two members of `D`
/// do not generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityWitness {
    pub triple: [u32; 3],
    pub subgroup: Subgroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    /// Three members of `D` generating `G`.
    pub generating_triple: [u32; 3],
    pub witness: Option<MinimalityWitness>,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        self.witness.is_none()
    }
}

/// Whether `h` is generated by two members of `d_in_h` (the elements of `D`
/// lying in `h`, identity excluded). Two involutions generate a dihedral
/// group of order twice the order of their product, so it suffices to look
/// for a product of order `|h| / 2`.
pub fn two_generated_by_d(g: &FiniteGroup, h: &Subgroup, d_in_h: &[u32]) -> bool {
    let n = h.order();
    if n <= 2 {
        return true;
    }
    if n % 2 == 1 {
        return false;
    }
    let half = (n / 2) as u32;
    d_in_h
        .iter()
        .enumerate()
        .any(|(i, &x)| d_in_h[i + 1..].iter().any(|&y| g.element_order(g.mul(x, y)) == half))
}

impl<'g> TranspositionSystem<'g> {
    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Members of `D` other than the identity, ascending.
    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn contains(&self, x: u32) -> bool {
        self.in_d[x as usize]
    }

    /// `D` split into conjugacy classes of `G`.
    pub fn d_classes(&self) -> Vec<Vec<u32>> {
        self.group.conjugacy_classes().into_iter().filter(|c| self.in_d[c[0] as usize]).collect()
    }

    fn d_in(&self, h: &Subgroup) -> Vec<u32> {
        h.elements().iter().copied().filter(|&x| self.in_d[x as usize]).collect()
    }

    /// Pairs `(a, b)` covering every pair of `D` up to simultaneous
    /// conjugation: `a` runs over class representatives and `b` over
    /// representatives of the orbits of `C_G(a)` on `D`.
    fn pair_representatives(&self) -> Vec<(u32, u32)> {
        let g = self.group;
        let mut pairs = Vec::new();
        for class in self.d_classes() {
            let a = class[0];
            let c = g.centralizer(a);
            let cgens = g.small_generating_set(&c);
            let mut seen = vec![false; g.order()];
            for &b in &self.d {
                if seen[b as usize] {
                    continue;
                }
                for y in g.orbit_under(b, &cgens) {
                    seen[y as usize] = true;
                }
                pairs.push((a, b));
            }
        }
        pairs
    }

    /// Three members of `D` generating `G`, if any.
    pub fn generating_triple(&self) -> Option<[u32; 3]> {
        let g = self.group;
        let n = g.order();
        if n == 1 {
            return Some([0, 0, 0]);
        }
        for (a, b) in self.pair_representatives() {
            let k = g.generate(&[a, b]);
            if k.order() == n {
                return Some([a, b, b]);
            }
            for &c in &self.d {
                if !k.contains(c) && g.extend_subgroup(&k, &[c]).order() == n {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    /// Decides minimal 3-generation, returning a witness when it fails.
    ///
    /// Every proper subgroup `<a, b, c>` is tested for 2-generation by `D`;
    /// triples are taken up to conjugacy, and `c` is skipped when it already
    /// lies in `<a, b>`.
    pub fn is_minimal_3generated(&self) -> Result<Minimality, MinimalityError> {
        let generating_triple = self.generating_triple().ok_or(MinimalityError::NotThreeGenerated)?;
        let g = self.group;
        let n = g.order();
        let mut checked: HashSet<Subgroup> = HashSet::new();
        for (a, b) in self.pair_representatives() {
            let k = g.generate(&[a, b]);
            for &c in &self.d {
                if k.contains(c) {
                    continue;
                }
                let h = g.extend_subgroup(&k, &[c]);
                if h.order() == n || checked.contains(&h) {
                    continue;
                }
                if !two_generated_by_d(g, &h, &self.d_in(&h)) {
                    let witness = MinimalityWitness { triple: [a, b, c], subgroup: h };
                    return Ok(Minimality { generating_triple, witness: Some(witness) });
                }
                checked.insert(h);
            }
        }
        Ok(Minimality { generating_triple, witness: None })
    }

    /// A triple `(a, b, c)` of `D` generating `G` with `|ab| = k`, `|bc| = l`
    /// and `|ac| = m`, taken up to conjugacy.
    pub fn find_sklm_triple(&self, k: u32, l: u32, m: u32) -> Option<[u32; 3]> {
        let g = self.group;
        let n = g.order();
        for (a, b) in self.pair_representatives() {
            if g.element_order(g.mul(a, b)) != k {
                continue;
            }
            let ab = g.generate(&[a, b]);
            for &c in &self.d {
                if g.element_order(g.mul(b, c)) == l
                    && g.element_order(g.mul(a, c)) == m
                    && g.extend_subgroup(&ab, &[c]).order() == n
                {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    /// Membership of `(G, D)` in `S(k, l, m)`: minimal 3-generated and
    /// generated by a triple with those product orders.
    pub fn in_sklm(&self, k: u32, l: u32, m: u32) -> bool {
        self.find_sklm_triple(k, l, m).is_some() && self.is_minimal_3generated().is_ok_and(|r| r.is_minimal())
    }
}

/// Unions of non-identity involution classes of `g`, as sorted element lists,
/// in order of the class bitmask.
pub fn involution_class_unions(g: &FiniteGroup) -> Vec<Vec<u32>> {
    let classes = g.involution_classes(false);
    assert!(classes.len() < 20, "too many involution classes to enumerate unions");
    (1u32..1 << classes.len())
        .map(|mask| {
            let mut d: Vec<u32> = (0..classes.len())
                .filter(|i| mask >> i & 1 == 1)
                .flat_map(|i| classes[i].iter().copied())
                .collect();
            d.sort_unstable();
            d
        })
        .collect()
}

/// All sorted orders `(k, l, m)` with `k <= l <= m` for which the dihedral
/// group of order `2n` lies in `S(k, l, m)` for some choice of `D`.
pub fn dihedral_sklm_triples(n: usize) -> Vec<(u32, u32, u32)> {
    let g = crate::permgroup::catalogue::dihedral_group(n);
    let mut out = BTreeSet::new();
    for d in involution_class_unions(&g) {
        let Ok(s) = verify_system(&g, &d) else { continue };
        if !s.is_minimal_3generated().is_ok_and(|r| r.is_minimal()) {
            continue;
        }
        for &a in s.d() {
            for &b in s.d() {
                for &c in s.d() {
                    if g.generate(&[a, b, c]).order() != g.order() {
                        continue;
                    }
                    let mut t =
                        [g.mul(a, b), g.mul(b, c), g.mul(a, c)].map(|x| g.element_order(x));
                    t.sort_unstable();
                    out.insert((t[0], t[1], t[2]));
                }
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalogue::{dihedral_group, lookup};

    fn all_involutions(g: &FiniteGroup) -> Vec<u32> {
        g.elements().filter(|&x| g.element_order(x) == 2).collect()
    }

    /// Definitional check: enumerate all subgroups generated by members of
    /// `D` and test each proper one for 2-generation directly.
    fn minimal_by_definition(g: &FiniteGroup, d: &[u32]) -> bool {
        let n = g.order();
        let mut subgroups = HashSet::new();
        for &a in d {
            for &b in d {
                for &c in d {
                    subgroups.insert(g.generate(&[a, b, c]));
                }
            }
        }
        subgroups.into_iter().filter(|h| h.order() < n).all(|h| {
            let dh: Vec<u32> = d.iter().copied().filter(|&x| h.contains(x)).collect();
            h.order() <= 2 || dh.iter().any(|&x| dh.iter().any(|&y| g.generate(&[x, y]) == h))
        })
    }

    fn sklm_unpruned(g: &FiniteGroup, d: &[u32], klm: (u32, u32, u32)) -> bool {
        let o = |x, y| g.element_order(g.mul(x, y));
        d.iter().any(|&a| {
            d.iter().any(|&b| {
                d.iter().any(|&c| {
                    (o(a, b), o(b, c), o(a, c)) == klm && g.generate(&[a, b, c]).order() == g.order()
                })
            })
        })
    }

    #[test]
    fn violations_are_all_reported() {
        let s4 = lookup("S4").unwrap();
        let four_cycle = s4.elements().find(|&x| s4.element_order(x) == 4).unwrap();
        let err = verify_system(s4, &[four_cycle]).unwrap_err();
        let kinds: Vec<_> = err.0.iter().map(std::mem::discriminant).collect();
        assert_eq!(kinds.len(), 3, "{err}");
        let d14 = dihedral_group(7);
        let err = verify_system(&d14, &all_involutions(&d14)).unwrap_err();
        assert!(matches!(err.0[..], [Violation::ProductOrderTooLarge { order: 7, .. }]));
    }

    #[test]
    fn s4_with_transpositions() {
        let s4 = lookup("S4").unwrap();
        let transpositions = s4.involution_classes(false).into_iter().find(|c| c.len() == 6).unwrap();
        let s = verify_system(s4, &transpositions).unwrap();
        assert!(s.is_minimal_3generated().unwrap().is_minimal());
        assert!(s.in_sklm(2, 3, 3));
        assert!(s.in_sklm(3, 3, 3));
        assert!(!s.in_sklm(2, 2, 2));
    }

    #[test]
    fn two_by_d8_is_not_minimal() {
        for name in ["2xD8", "2xD12"] {
            let g = lookup(name).unwrap();
            let s = verify_system(g, &all_involutions(g)).unwrap();
            let w = s.is_minimal_3generated().unwrap().witness.expect(name);
            assert_eq!(w.subgroup.order(), 8);
            assert!(w.subgroup.elements().iter().all(|&x| g.element_order(x) <= 2));
        }
    }

    #[test]
    fn criterion_agrees_with_definition() {
        for name in ["2^2", "S3", "D8", "2^3", "S4", "D12", "3^2:2", "GL(2,3)", "(4x2):2", "2xD8", "2xS4"] {
            let g = lookup(name).unwrap();
            for d in involution_class_unions(g) {
                let Ok(s) = verify_system(g, &d) else { continue };
                let Ok(m) = s.is_minimal_3generated() else { continue };
                assert_eq!(m.is_minimal(), minimal_by_definition(g, s.d()), "{name} {d:?}");
            }
        }
    }

    #[test]
    fn pruned_triple_search_agrees() {
        for name in ["S3", "D8", "S4", "D12", "3^2:2", "2xD8", "(6x2):2", "GL(2,3)"] {
            let g = lookup(name).unwrap();
            for d in involution_class_unions(g) {
                let Ok(s) = verify_system(g, &d) else { continue };
                for k in 1..=6 {
                    for l in 1..=6 {
                        for m in 1..=6 {
                            assert_eq!(
                                s.find_sklm_triple(k, l, m).is_some(),
                                sklm_unpruned(g, s.d(), (k, l, m)),
                                "{name} {k}{l}{m}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dihedral_table() {
        for n in [1u32, 2, 3, 5] {
            assert_eq!(dihedral_sklm_triples(n as usize), vec![(1, n, n), (n, n, n)].into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
        }
        assert_eq!(dihedral_sklm_triples(4), vec![(1, 4, 4), (2, 2, 4), (2, 4, 4)]);
        assert_eq!(dihedral_sklm_triples(6), vec![(1, 6, 6), (2, 2, 3), (2, 2, 6), (2, 3, 6), (3, 6, 6)]);
    }
}
