//! Isomorphism invariants and generator-image isomorphism search.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::finite::FiniteGroup;
use super::structure::Subgroup;

/// Isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// `(element order, count)`, ascending.
    pub element_orders: Vec<(u32, usize)>,
    /// `(element order, class size)` for every class, ascending.
    pub classes: Vec<(u32, usize)>,
    pub abelian_invariants: Vec<u64>,
    pub derived_length: Option<usize>,
    pub center_order: usize,
}

impl fmt::Display for GroupFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.element_orders.iter().map(|(o, c)| format!("{o}:{c}")).collect();
        let classes: Vec<String> = self.classes.iter().map(|(o, s)| format!("{o}/{s}")).collect();
        let ab: Vec<String> = self.abelian_invariants.iter().map(u64::to_string).collect();
        let dl = self.derived_length.map_or("-".to_string(), |d| d.to_string());
        write!(
            f,
            "orders[{}] classes[{}] ab[{}] dl={} z={}",
            orders.join(","),
            classes.join(","),
            ab.join(","),
            dl,
            self.center_order
        )
    }
}

impl FiniteGroup {
    pub fn fingerprint(&self) -> GroupFingerprint {
        let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
        for &o in self.element_orders() {
            *hist.entry(o).or_default() += 1;
        }
        let mut classes: Vec<(u32, usize)> = self
            .conjugacy_classes()
            .iter()
            .map(|c| (self.element_order(c[0]), c.len()))
            .collect();
        classes.sort_unstable();
        GroupFingerprint {
            order: self.order(),
            element_orders: hist.into_iter().collect(),
            classes,
            abelian_invariants: self.abelian_invariants(),
            derived_length: self.derived_length(),
            center_order: self.center().order(),
        }
    }

    /// A short generating sequence: greedy by descending element order,
    /// then trimmed of redundant members.
    pub fn short_generators(&self) -> Vec<u32> {
        let mut gens = self.small_generating_set(&Subgroup::whole(self));
        let mut i = 0;
        while i < gens.len() && gens.len() > 1 {
            let rest: Vec<u32> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            if self.generate(&rest).order() == self.order() {
                gens = rest;
            } else {
                i += 1;
            }
        }
        gens
    }
}

/// Returns an isomorphism `g -> h` as an element map, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<u32>> {
    if g.order() != h.order() {
        return None;
    }
    if g.order() == 1 {
        return Some(vec![0]);
    }
    let fg = g.fingerprint();
    if fg != h.fingerprint() {
        return None;
    }
    let gens = g.short_generators();
    // Orders of pairwise products constrain the images.
    let mut pair_orders = vec![vec![0u32; gens.len()]; gens.len()];
    for i in 0..gens.len() {
        for j in 0..i {
            pair_orders[i][j] = g.element_order(g.mul(gens[j], gens[i]));
        }
    }
    let first_candidates: Vec<u32> = h
        .conjugacy_classes()
        .iter()
        .map(|c| c[0])
        .filter(|&y| h.element_order(y) == g.element_order(gens[0]))
        .collect();
    let mut images: Vec<u32> = Vec::with_capacity(gens.len());
    search(g, h, &gens, &pair_orders, &first_candidates, &mut images)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[u32],
    pair_orders: &[Vec<u32>],
    first: &[u32],
    images: &mut Vec<u32>,
) -> Option<Vec<u32>> {
    let i = images.len();
    if i == gens.len() {
        return extend_to_isomorphism(g, h, gens, images);
    }
    let want = g.element_order(gens[i]);
    let candidates: Vec<u32> = if i == 0 {
        first.to_vec()
    } else {
        h.elements().filter(|&y| h.element_order(y) == want).collect()
    };
    for y in candidates {
        let ok = (0..i).all(|j| h.element_order(h.mul(images[j], y)) == pair_orders[i][j]);
        if !ok {
            continue;
        }
        images.push(y);
        if let Some(m) = search(g, h, gens, pair_orders, first, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

/// Every automorphism of `g`, as element maps; the identity comes first.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Vec<u32>> {
    if g.order() == 1 {
        return vec![vec![0]];
    }
    let gens = g.short_generators();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    all_images(g, &gens, &mut images, &mut out);
    let id: Vec<u32> = g.elements().collect();
    if let Some(p) = out.iter().position(|m| *m == id) {
        out.swap(0, p);
    }
    out
}

fn all_images(g: &FiniteGroup, gens: &[u32], images: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let i = images.len();
    if i == gens.len() {
        out.extend(extend_to_isomorphism(g, g, gens, images));
        return;
    }
    let want = g.element_order(gens[i]);
    for y in g.elements().filter(|&y| g.element_order(y) == want) {
        let ok = (0..i).all(|j| {
            g.element_order(g.mul(images[j], y)) == g.element_order(g.mul(gens[j], gens[i]))
        });
        if ok {
            images.push(y);
            all_images(g, gens, images, out);
            images.pop();
        }
    }
}

/// Extends `gens[i] -> images[i]` along the Cayley graph of `g`; succeeds
/// when the map is well defined on every edge and injective.
fn extend_to_isomorphism(g: &FiniteGroup, h: &FiniteGroup, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0u32];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        let fx = map[x as usize];
        for (s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, *s);
            let fy = h.mul(fx, t);
            let cur = map[y as usize];
            if cur == u32::MAX {
                if used[fy as usize] {
                    return None;
                }
                used[fy as usize] = true;
                map[y as usize] = fy;
                queue.push(y);
            } else if cur != fy {
                return None;
            }
        }
        k += 1;
    }
    (queue.len() == n).then_some(map)
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::perm::Perm;

    fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse(degree, s).unwrap()).collect();
        FiniteGroup::from_perms(degree, &gens).unwrap()
    }

    #[test]
    fn s4_two_ways() {
        let a = group(4, &["(1,2,3,4)", "(1,2)"]);
        let b = group(4, &["(1,2)", "(2,3)", "(3,4)"]);
        let m = find_isomorphism(&a, &b).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(m[a.mul(x, y) as usize], b.mul(m[x as usize], m[y as usize]));
            }
        }
    }

    #[test]
    fn small_non_isomorphic_pairs() {
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let e8 = group(6, &["(1,2)", "(3,4)", "(5,6)"]);
        assert!(!is_isomorphic(&d8, &e8));
        let c8 = group(8, &["(1,2,3,4,5,6,7,8)"]);
        let c4c2 = group(6, &["(1,2,3,4)", "(5,6)"]);
        assert!(!is_isomorphic(&c8, &c4c2));
        assert!(is_isomorphic(&c8, &group(8, &["(1,4,7,2,5,8,3,6)"])));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&group(4, &["(1,2,3,4)", "(1,2)"])).len(), 24);
        assert_eq!(automorphisms(&group(6, &["(1,2)", "(3,4)", "(5,6)"])).len(), 168);
        assert_eq!(automorphisms(&group(4, &["(1,2,3,4)", "(1,3)"])).len(), 8);
        assert_eq!(automorphisms(&group(5, &["(1,2,3,4,5)"])).len(), 4);
        let a = automorphisms(&group(3, &["(1,2,3)", "(1,2)"]));
        assert_eq!(a[0], (0..6).collect::<Vec<u32>>());
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        let q8 = group(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]);
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.center().order(), 2);
        assert!(!is_isomorphic(&q8, &d8));
        assert!(is_isomorphic(&q8, &q8.clone()));
    }
}
