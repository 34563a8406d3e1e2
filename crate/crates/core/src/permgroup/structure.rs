//! Subgroups, conjugacy, normal structure and quotients of a [`FiniteGroup`].

use std::collections::{BTreeSet, HashSet};

use super::finite::FiniteGroup;

/// A subgroup stored as its sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn from_sorted(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { elements: g.elements().collect() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// Sort key used for canonical subgroup lists: order first, then elements.
fn subgroup_key(h: &Subgroup) -> (usize, &[u32]) {
    (h.order(), h.elements())
}

impl FiniteGroup {
    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        self.extend_subgroup(&Subgroup::trivial(), gens)
    }

    /// The subgroup generated by `base` together with `extra`.
    pub fn extend_subgroup(&self, base: &Subgroup, extra: &[u32]) -> Subgroup {
        let mut in_h = vec![false; self.order()];
        let mut elems: Vec<u32> = base.elements().to_vec();
        for &x in &elems {
            in_h[x as usize] = true;
        }
        let extra: Vec<u32> = extra.iter().copied().filter(|&x| !in_h[x as usize]).collect();
        if extra.is_empty() {
            return base.clone();
        }
        let mut gens: Vec<u32> = extra;
        // Generators of the base are needed for products of new elements;
        // a handful suffice but all elements are correct and simple.
        if base.order() > 1 {
            gens.extend(self.small_generating_set(base));
        }
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            for &s in &gens {
                let y = self.mul(x, s);
                if !in_h[y as usize] {
                    in_h[y as usize] = true;
                    elems.push(y);
                }
            }
            k += 1;
        }
        elems.sort_unstable();
        Subgroup::from_sorted(elems)
    }

    /// A generating set of `h` built greedily from its elements.
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut cur = Subgroup::trivial();
        // Prefer elements of large order; they cut the subgroup fastest.
        let mut candidates: Vec<u32> = h.elements().to_vec();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        for x in candidates {
            if cur.order() == h.order() {
                break;
            }
            if !cur.contains(x) {
                cur = self.extend_subgroup(&cur, &[x]);
                gens.push(x);
            }
        }
        gens
    }

    /// Conjugacy classes, each sorted, listed by (element order, size,
    /// smallest member).
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for x in 0..n as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut class = vec![x];
            class_of[x as usize] = id;
            let mut k = 0;
            while k < class.len() {
                let y = class[k];
                for &g in self.generators() {
                    let z = self.conj(y, g);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = id;
                        class.push(z);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (self.element_order(c[0]), c.len(), c[0]));
        classes
    }

    /// The conjugacy class of `x`, sorted.
    pub fn class_of(&self, x: u32) -> Vec<u32> {
        self.orbit_under(x, self.generators())
    }

    /// Orbit of `x` under conjugation by the group generated by `by`.
    pub fn orbit_under(&self, x: u32, by: &[u32]) -> Vec<u32> {
        let mut seen = HashSet::from([x]);
        let mut orbit = vec![x];
        let mut k = 0;
        while k < orbit.len() {
            for &g in by {
                let z = self.conj(orbit[k], g);
                if seen.insert(z) {
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Classes of involutions; with `include_identity` the identity class is
    /// listed first.
    pub fn involution_classes(&self, include_identity: bool) -> Vec<Vec<u32>> {
        self.conjugacy_classes()
            .into_iter()
            .filter(|c| self.element_order(c[0]) == 2 || (include_identity && c[0] == 0))
            .collect()
    }

    pub fn centralizer(&self, x: u32) -> Subgroup {
        let elems = self.elements().filter(|&g| self.mul(x, g) == self.mul(g, x)).collect();
        Subgroup::from_sorted(elems)
    }

    /// Elements of `within` commuting with every element of `set`.
    pub fn centralizer_in(&self, set: &[u32], within: &Subgroup) -> Subgroup {
        let elems = within
            .elements()
            .iter()
            .copied()
            .filter(|&g| set.iter().all(|&x| self.mul(x, g) == self.mul(g, x)))
            .collect();
        Subgroup::from_sorted(elems)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_in(self.generators(), &Subgroup::whole(self))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        let elems = self
            .elements()
            .filter(|&g| gens.iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        Subgroup::from_sorted(elems)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.small_generating_set(h);
        gens.iter().all(|&x| self.generators().iter().all(|&g| h.contains(self.conj(x, g))))
    }

    /// The smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[u32]) -> Subgroup {
        let mut h = self.generate(set);
        loop {
            let gens = self.small_generating_set(&h);
            let missing: Vec<u32> = gens
                .iter()
                .flat_map(|&x| self.generators().iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .filter(|&y| !h.contains(y))
                .collect();
            if missing.is_empty() {
                return h;
            }
            h = self.extend_subgroup(&h, &missing);
        }
    }

    /// All normal subgroups, ordered by (order, elements). Every normal
    /// subgroup is a join of normal closures of single classes.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        let mut minimal: Vec<Subgroup> = Vec::new();
        for class in self.conjugacy_classes() {
            let n = self.normal_closure(&class[..1]);
            if found.insert(n.clone()) {
                minimal.push(n);
            }
        }
        let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
        while let Some(n) = frontier.pop() {
            for m in &minimal {
                if m.is_subset_of(&n) {
                    continue;
                }
                let gens = self.small_generating_set(m);
                let j = self.extend_subgroup(&n, &gens);
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| subgroup_key(a).cmp(&subgroup_key(b)));
        out
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let comms: Vec<u32> = gens
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        self.normal_closure(&comms)
    }

    /// Commutator subgroup of a subgroup `h`.
    pub fn derived_of(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        let comms: Vec<u32> = gens
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        // Normal closure inside h.
        let mut d = self.generate(&comms);
        loop {
            let dg = self.small_generating_set(&d);
            let missing: Vec<u32> = dg
                .iter()
                .flat_map(|&x| gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .filter(|&y| !d.contains(y))
                .collect();
            if missing.is_empty() {
                return d;
            }
            d = self.extend_subgroup(&d, &missing);
        }
    }

    /// Length of the derived series, or `None` if the group is not soluble.
    pub fn derived_length(&self) -> Option<usize> {
        let mut h = Subgroup::whole(self);
        let mut len = 0;
        while h.order() > 1 {
            let d = self.derived_of(&h);
            if d.order() == h.order() {
                return None;
            }
            h = d;
            len += 1;
        }
        Some(len)
    }

    /// Quotient by a normal subgroup, with the map from elements of `self`
    /// to elements of the quotient.
    pub fn quotient(&self, n: &Subgroup) -> (FiniteGroup, Vec<u32>) {
        debug_assert!(self.is_normal(n));
        let size = self.order();
        let mut coset = vec![u32::MAX; size];
        let mut reps: Vec<u32> = Vec::new();
        for x in 0..size as u32 {
            if coset[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &m in n.elements() {
                coset[self.mul(m, x) as usize] = id;
            }
        }
        let actions: Vec<Vec<u32>> = self
            .generators()
            .iter()
            .map(|&g| reps.iter().map(|&r| coset[self.mul(r, g) as usize]).collect())
            .collect();
        let q = FiniteGroup::from_right_action(actions).expect("quotient action is regular");
        // The quotient's own numbering comes from the regular action of the
        // coset ids, which keeps coset ids as element indices.
        (q, coset)
    }

    /// All subgroups `h` with `lower <= h <= upper`, ordered by
    /// (order, elements).
    pub fn subgroups_between(&self, lower: &Subgroup, upper: &Subgroup) -> Vec<Subgroup> {
        debug_assert!(lower.is_subset_of(upper));
        let mut found: BTreeSet<Subgroup> = BTreeSet::from([lower.clone()]);
        let mut frontier = vec![lower.clone()];
        while let Some(h) = frontier.pop() {
            let mut covered = vec![false; self.order()];
            for &x in h.elements() {
                covered[x as usize] = true;
            }
            for &x in upper.elements() {
                if covered[x as usize] {
                    continue;
                }
                let k = self.extend_subgroup(&h, &[x]);
                // Every element of the double coset h x h gives the same k.
                for &a in h.elements() {
                    let ax = self.mul(a, x);
                    for &b in h.elements() {
                        covered[self.mul(ax, b) as usize] = true;
                    }
                }
                if found.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| subgroup_key(a).cmp(&subgroup_key(b)));
        out
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: u32) -> Subgroup {
        let mut elems: Vec<u32> = h.elements().iter().map(|&x| self.conj(x, g)).collect();
        elems.sort_unstable();
        Subgroup::from_sorted(elems)
    }

    /// Representatives of the `by`-conjugacy classes in `subgroups`, keeping
    /// the first member of each class in the input order.
    pub fn conjugacy_representatives(&self, subgroups: &[Subgroup], by: &Subgroup) -> Vec<Subgroup> {
        let by_gens = self.small_generating_set(by);
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut reps = Vec::new();
        for h in subgroups {
            if seen.contains(h) {
                continue;
            }
            reps.push(h.clone());
            let mut orbit = vec![h.clone()];
            seen.insert(h.clone());
            let mut k = 0;
            while k < orbit.len() {
                for &g in &by_gens {
                    let c = self.conjugate_subgroup(&orbit[k], g);
                    if seen.insert(c.clone()) {
                        orbit.push(c);
                    }
                }
                k += 1;
            }
        }
        reps
    }

    /// Abelian invariants of `G/G'` as prime powers, ascending.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let d = self.derived_subgroup();
        let (q, _) = self.quotient(&d);
        abelian_group_invariants(&q)
    }
}

/// Invariants of an abelian group as a sorted list of prime powers.
pub fn abelian_group_invariants(q: &FiniteGroup) -> Vec<u64> {
    let n = q.order() as u64;
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            // omega[k] = #elements of order dividing p^k.
            let mut omega = vec![1u64];
            let mut k = 1u32;
            loop {
                let pk = p.pow(k);
                let c = q.elements().filter(|&x| pk % q.element_order(x) as u64 == 0).count() as u64;
                omega.push(c);
                if c == *omega.get(k as usize - 1).unwrap() {
                    break;
                }
                k += 1;
            }
            // Number of cyclic factors of exponent >= k is log_p(omega[k]/omega[k-1]).
            let mut ge = Vec::new();
            for k in 1..omega.len() {
                let mut ratio = omega[k] / omega[k - 1];
                let mut e = 0;
                while ratio > 1 {
                    ratio /= p;
                    e += 1;
                }
                ge.push(e);
            }
            for k in 0..ge.len() {
                let next = ge.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(ge[k] - next) {
                    out.push(p.pow(k as u32 + 1));
                }
            }
        }
        p += 1;
    }
    out.sort_unstable();
    out
}
