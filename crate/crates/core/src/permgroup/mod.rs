//! Permutation groups and finite-group machinery.
//!
//! [`PermGroup`] is the user-facing type: generators as permutations, with
//! the order from a stabilizer chain. Structural questions are answered on
//! an indexed [`FiniteGroup`] built on demand; algorithms elsewhere in the
//! crate work on that representation directly.

pub mod catalogue;
mod finite;
mod iso;
mod perm;
mod schreier;
mod structure;

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

pub use finite::{FiniteGroup, GroupError, MAX_ELEMENTS};
pub use iso::{automorphisms, find_isomorphism, is_isomorphic, GroupFingerprint};
pub use perm::{Perm, PermError};
pub use schreier::StabChain;
pub use structure::{abelian_group_invariants, Subgroup};

use crate::fpgroup::CosetTable;

/// Element lists are only built for groups up to this order.
pub const CACHE_BOUND: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermGroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group order {0} exceeds the cache bound {CACHE_BOUND}")]
    TooLarge(u128),
    #[error("permutation is not an element of the group")]
    NotAnElement,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("coset table is incomplete")]
    IncompleteTable,
}

/// A permutation group on `0..degree`.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    order: OnceLock<u128>,
    /// Set when the generators act regularly, so point 0 alone is a base.
    regular: bool,
    finite: OnceLock<Result<FiniteGroup, PermGroupError>>,
    index: OnceLock<HashMap<Vec<u32>, u32>>,
    base: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup").field("degree", &self.degree).field("gens", &self.gens).finish()
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let mut g = PermGroup::from_parts(self.degree, self.gens.clone(), self.regular);
        if let Some(&o) = self.order.get() {
            let _ = g.order.set(o);
        }
        if let Some(Ok(f)) = self.finite.get() {
            g.finite = OnceLock::from(Ok(f.clone()));
        }
        g
    }
}

impl PermGroup {
    fn from_parts(degree: usize, gens: Vec<Perm>, regular: bool) -> Self {
        PermGroup {
            degree,
            gens,
            order: OnceLock::new(),
            regular,
            finite: OnceLock::new(),
            index: OnceLock::new(),
            base: OnceLock::new(),
        }
    }

    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, PermGroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch.into());
        }
        Ok(PermGroup::from_parts(degree, gens, false))
    }

    /// Generators given as 1-based cycle strings such as `"(1,2)(3,4)"`.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self, PermGroupError> {
        let gens = gens.iter().map(|s| Perm::parse(degree, s)).collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(degree, gens)
    }

    /// The action on cosets of a complete coset table, one permutation per
    /// generator.
    pub fn from_coset_table(t: &CosetTable) -> Result<Self, PermGroupError> {
        if !t.is_closed() {
            return Err(PermGroupError::IncompleteTable);
        }
        let gens = (0..t.num_generators())
            .map(|g| Perm::from_images(t.generator_images(g)))
            .collect::<Result<Vec<_>, _>>()?;
        let regular = t.subgroup_generators().iter().all(|w| w.is_identity());
        let g = PermGroup::from_parts(t.n_cosets(), gens, false);
        if regular {
            // Over the trivial subgroup the action is regular; the indexed
            // group can be read straight off the table.
            let _ = g.finite.set(FiniteGroup::from_coset_table(t).map_err(Into::into));
        }
        Ok(PermGroup { regular, ..g })
    }

    /// Wraps an indexed group as the permutation group of its right regular
    /// action.
    pub fn from_finite(f: &FiniteGroup) -> Self {
        let gens = (0..f.num_generators())
            .map(|g| Perm::from_images(f.right_action(g).to_vec()).expect("regular action"))
            .collect();
        let g = PermGroup::from_parts(f.order(), gens, true);
        let _ = g.finite.set(Ok(f.clone()));
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Exact order from a stabilizer chain.
    pub fn order(&self) -> u128 {
        *self.order.get_or_init(|| StabChain::new(self.degree, &self.gens).order())
    }

    fn base(&self) -> &[u32] {
        self.base.get_or_init(|| {
            if self.regular {
                if self.degree == 0 {
                    Vec::new()
                } else {
                    vec![0]
                }
            } else {
                StabChain::new(self.degree, &self.gens).base()
            }
        })
    }

    /// The indexed form of this group. Element `i` of the result corresponds
    /// to [`PermGroup::element`]`(i)`.
    pub fn finite(&self) -> Result<&FiniteGroup, PermGroupError> {
        self.finite
            .get_or_init(|| {
                let order = self.order();
                if order > CACHE_BOUND as u128 {
                    return Err(PermGroupError::TooLarge(order));
                }
                Ok(FiniteGroup::from_perms(self.degree, &self.gens)?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The permutation of element `x` of [`PermGroup::finite`].
    pub fn element(&self, x: u32) -> Result<Perm, PermGroupError> {
        let f = self.finite()?;
        let w = f.word(x);
        let inv: Vec<Perm> = self.gens.iter().map(Perm::inverse).collect();
        Ok(w.letters().iter().fold(Perm::identity(self.degree), |acc, &l| {
            let g = l.unsigned_abs() as usize - 1;
            acc.mul(if l > 0 { &self.gens[g] } else { &inv[g] })
        }))
    }

    /// Index of a permutation in [`PermGroup::finite`].
    pub fn index_of(&self, p: &Perm) -> Result<u32, PermGroupError> {
        if p.degree() != self.degree {
            return Err(PermGroupError::NotAnElement);
        }
        let f = self.finite()?;
        let base = self.base();
        let index = self.index.get_or_init(|| {
            let mut map = HashMap::with_capacity(f.order());
            for x in f.elements() {
                let e = self.element(x).expect("finite built");
                map.insert(base.iter().map(|&b| e.apply(b)).collect::<Vec<u32>>(), x);
            }
            map
        });
        let key: Vec<u32> = base.iter().map(|&b| p.apply(b)).collect();
        let x = *index.get(&key).ok_or(PermGroupError::NotAnElement)?;
        // Base images pin down group elements only; check the rest.
        if self.element(x)? == *p {
            Ok(x)
        } else {
            Err(PermGroupError::NotAnElement)
        }
    }

    fn subgroup_as_perm_group(&self, h: &Subgroup) -> Result<PermGroup, PermGroupError> {
        let f = self.finite()?;
        let gens = f
            .small_generating_set(h)
            .into_iter()
            .map(|x| self.element(x))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(self.degree, gens)
    }

    fn as_subgroup(&self, h: &PermGroup) -> Result<Subgroup, PermGroupError> {
        let f = self.finite()?;
        let gens = h.gens.iter().map(|p| self.index_of(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(f.generate(&gens))
    }

    /// Conjugacy classes as lists of permutations, in the order of
    /// [`FiniteGroup::conjugacy_classes`].
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<Perm>>, PermGroupError> {
        let f = self.finite()?;
        f.conjugacy_classes()
            .iter()
            .map(|c| c.iter().map(|&x| self.element(x)).collect())
            .collect()
    }

    pub fn involution_classes(&self, include_identity: bool) -> Result<Vec<Vec<Perm>>, PermGroupError> {
        let f = self.finite()?;
        f.involution_classes(include_identity)
            .iter()
            .map(|c| c.iter().map(|&x| self.element(x)).collect())
            .collect()
    }

    pub fn centralizer(&self, x: &Perm) -> Result<PermGroup, PermGroupError> {
        let i = self.index_of(x)?;
        let c = self.finite()?.centralizer(i);
        self.subgroup_as_perm_group(&c)
    }

    /// `⟨elems⟩`, which must lie in this group.
    pub fn subgroup_generated(&self, elems: &[Perm]) -> Result<PermGroup, PermGroupError> {
        for p in elems {
            self.index_of(p)?;
        }
        PermGroup::new(self.degree, elems.to_vec())
    }

    pub fn normal_subgroups(&self) -> Result<Vec<PermGroup>, PermGroupError> {
        let f = self.finite()?;
        f.normal_subgroups().iter().map(|n| self.subgroup_as_perm_group(n)).collect()
    }

    /// `G/N` acting regularly on the cosets of `N`.
    pub fn quotient(&self, n: &PermGroup) -> Result<PermGroup, PermGroupError> {
        let f = self.finite()?;
        let sub = self.as_subgroup(n)?;
        if !f.is_normal(&sub) {
            return Err(PermGroupError::NotNormal);
        }
        let (q, _) = f.quotient(&sub);
        Ok(PermGroup::from_finite(&q))
    }

    /// Subgroups `H` with `⟨t⟩ <= H <= C_G(t)`, up to conjugacy in `C_G(t)`.
    pub fn subgroups_between(&self, t: &Perm) -> Result<Vec<PermGroup>, PermGroupError> {
        let f = self.finite()?;
        let i = self.index_of(t)?;
        f.overgroups_in_centralizer(i)
            .iter()
            .map(|h| self.subgroup_as_perm_group(h))
            .collect()
    }

    pub fn fingerprint(&self) -> Result<GroupFingerprint, PermGroupError> {
        Ok(self.finite()?.fingerprint())
    }

    pub fn identify(&self) -> Result<String, PermGroupError> {
        Ok(catalogue::identify(self.finite()?))
    }

    pub fn is_isomorphic(&self, other: &PermGroup) -> Result<bool, PermGroupError> {
        Ok(is_isomorphic(self.finite()?, other.finite()?))
    }
}

impl FiniteGroup {
    /// Subgroups `H` with `⟨t⟩ <= H <= C_G(t)`, one per `C_G(t)`-class, in
    /// canonical order.
    pub fn overgroups_in_centralizer(&self, t: u32) -> Vec<Subgroup> {
        let c = self.centralizer(t);
        let all = self.subgroups_between(&self.generate(&[t]), &c);
        self.conjugacy_representatives(&all, &c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{coset_enumeration, parse_group_spec, Strategy};

    fn s4() -> PermGroup {
        PermGroup::from_cycles(4, &["(1,2,3,4)", "(1,2)"]).unwrap()
    }

    #[test]
    fn order_examples() {
        assert_eq!(s4().order(), 24);
        assert_eq!(PermGroup::from_cycles(3, &[]).unwrap().order(), 1);
        let p = parse_group_spec("R(2,3,5)").unwrap();
        let t = coset_enumeration(&p, &[], 10_000, Strategy::Hlt).unwrap();
        let g = PermGroup::from_coset_table(&t).unwrap();
        assert_eq!(g.degree(), 120);
        assert_eq!(g.order(), 120);
        assert_eq!(g.finite().unwrap().order(), 120);
    }

    #[test]
    fn class_examples() {
        let sizes: Vec<usize> = s4().conjugacy_classes().unwrap().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, [1, 3, 6, 6, 8]);
        let a5 = PermGroup::from_cycles(5, &["(1,2,3,4,5)", "(1,2,3)"]).unwrap();
        let mut sizes: Vec<usize> = a5.conjugacy_classes().unwrap().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 12, 12, 15, 20]);
        let c3 = PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap();
        assert!(c3.involution_classes(false).unwrap().is_empty());
        assert_eq!(c3.involution_classes(true).unwrap().len(), 1);
    }

    #[test]
    fn centralizer_examples() {
        let g = s4();
        let t = Perm::parse(4, "(1,2)").unwrap();
        assert_eq!(g.centralizer(&t).unwrap().order(), 4);
        let a5 = PermGroup::from_cycles(5, &["(1,2,3,4,5)", "(1,2,3)"]).unwrap();
        let c = Perm::parse(5, "(1,2,3,4,5)").unwrap();
        assert_eq!(a5.centralizer(&c).unwrap().order(), 5);
        assert!(matches!(a5.centralizer(&Perm::parse(5, "(1,2)").unwrap()), Err(PermGroupError::NotAnElement)));
    }

    #[test]
    fn subgroups_between_examples() {
        let g = s4();
        let t = Perm::parse(4, "(1,2)").unwrap();
        let hs = g.subgroups_between(&t).unwrap();
        let orders: Vec<u128> = hs.iter().map(PermGroup::order).collect();
        assert_eq!(orders, [2, 4]);
        let v = PermGroup::from_cycles(4, &["(1,2)", "(3,4)"]).unwrap();
        assert_eq!(v.subgroups_between(&Perm::parse(4, "(1,2)").unwrap()).unwrap().len(), 2);
        let one = PermGroup::from_cycles(1, &[]).unwrap();
        assert_eq!(one.subgroups_between(&Perm::identity(1)).unwrap().len(), 1);
    }

    #[test]
    fn quotient_examples() {
        let g = s4();
        let normals = g.normal_subgroups().unwrap();
        let orders: Vec<u128> = normals.iter().map(PermGroup::order).collect();
        assert_eq!(orders, [1, 4, 12, 24]);
        let q = g.quotient(&normals[1]).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.identify().unwrap(), "S3");
        assert_eq!(g.quotient(&normals[3]).unwrap().order(), 1);
        assert!(g.quotient(&normals[0]).unwrap().is_isomorphic(&g).unwrap());
        let not_normal = g.subgroup_generated(&[Perm::parse(4, "(1,2)").unwrap()]).unwrap();
        assert!(matches!(g.quotient(&not_normal), Err(PermGroupError::NotNormal)));
    }

    #[test]
    fn regular_representation_is_isomorphic() {
        let g = s4();
        let r = PermGroup::from_finite(g.finite().unwrap());
        assert_eq!(r.degree(), 24);
        assert_eq!(r.order(), 24);
        assert!(g.is_isomorphic(&r).unwrap());
    }

    #[test]
    fn index_roundtrip() {
        let g = s4();
        for x in g.finite().unwrap().elements() {
            assert_eq!(g.index_of(&g.element(x).unwrap()).unwrap(), x);
        }
    }
}
