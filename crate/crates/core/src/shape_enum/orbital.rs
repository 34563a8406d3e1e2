//! Orbitals of a system: `G`-classes of the 2-generated subalgebras
//! `⟨⟨a, b⟩⟩`, identified by their axis sets `a^H ∪ b^H`.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use super::AxisSystem;
use crate::dihedral_algebra::{algebra_table, subalgebra_type, AlgebraType, BasisLabel};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OrbitalError {
    #[error("pair ({a}, {b}) is not admissible")]
    Inadmissible { a: usize, b: usize },
    #[error("axis set of ({a}, {b}) mixes one- and two-orbit pairs")]
    MixedOrbits { a: usize, b: usize },
    #[error("the image of the axis set of ({a}, {b}) is not an axis set")]
    NotInvariant { a: usize, b: usize },
    #[error("orbital {inner} cannot take the type {ty} required by orbital {outer}")]
    InnerMismatch { outer: usize, inner: usize, ty: AlgebraType },
}

/// One class of 2-generated subalgebras.
#[derive(Clone, Debug, Serialize)]
pub struct Orbital {
    /// Lexicographically smallest pair `(a, b)`, `a < b`, in the class.
    pub rep: (usize, usize),
    /// `|a^H ∪ b^H|`, the `N` of the type `NX`.
    pub n: usize,
    pub same_orbit: bool,
    pub allowed: Vec<AlgebraType>,
    /// Number of distinct axis sets in the class.
    pub instances: usize,
}

/// The subalgebra generated by a pair inside an `outer` algebra: its
/// generating pair sits at distance `offset` in the outer algebra's axis
/// numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionEdge {
    pub outer: usize,
    pub inner: usize,
    pub offset: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitalAnalysis {
    /// Sorted by decreasing `n`, then by representative.
    pub orbitals: Vec<Orbital>,
    pub edges: Vec<InclusionEdge>,
    #[serde(skip)]
    num_axes: usize,
    #[serde(skip)]
    pair_class: Vec<u32>,
}

impl OrbitalAnalysis {
    /// The orbital containing the pair `(a, b)`, `a != b`.
    pub fn orbital_of(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.pair_class[a * self.num_axes + b];
        (c != u32::MAX).then_some(c as usize)
    }

    /// The type an `inner` orbital must take when its edge's outer orbital
    /// has type `outer`.
    pub fn required_inner(&self, e: &InclusionEdge, outer: AlgebraType) -> AlgebraType {
        inner_type(outer, e.offset)
    }
}

/// Dihedral types a pair with `|a^H ∪ b^H| = n` may generate.
pub fn types_for(n: usize) -> Vec<AlgebraType> {
    use AlgebraType::*;
    match n {
        1 => vec![T1A],
        2 => vec![T2A, T2B],
        3 => vec![T3A, T3C],
        4 => vec![T4A, T4B],
        5 => vec![T5A],
        6 => vec![T6A],
        _ => vec![],
    }
}

/// Type of `⟨⟨a0, a_offset⟩⟩` inside the dihedral algebra of type `outer`,
/// read off the structure constants.
pub fn inner_type(outer: AlgebraType, offset: i32) -> AlgebraType {
    static CACHE: OnceLock<HashMap<(AlgebraType, i32), AlgebraType>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let mut m = HashMap::new();
        for ty in AlgebraType::ALL {
            let t = algebra_table(ty).expect("dihedral tables complete");
            let a0 = t.index_of(BasisLabel::Axis(0)).unwrap();
            for off in 1..ty.n() {
                if let Some(b) = t.index_of(BasisLabel::Axis(off)).or_else(|| t.index_of(BasisLabel::Axis(off - ty.n()))) {
                    m.insert((ty, off), subalgebra_type(&t, a0, b).expect("dihedral subalgebra"));
                }
            }
        }
        m
    });
    cache[&(outer, offset)]
}

/// Classes of 2-generated subalgebras and the inclusions between them.
pub fn orbital_analysis(s: &AxisSystem) -> Result<OrbitalAnalysis, OrbitalError> {
    let n = s.num_axes();
    let mut instance_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut same: Vec<bool> = Vec::new();
    let mut first_pair: Vec<(usize, usize)> = Vec::new();
    let mut pair_instance = vec![u32::MAX; n * n];
    for a in 0..n {
        for b in a + 1..n {
            let p = s.pair_orbits(a, b);
            if !p.is_admissible() {
                return Err(OrbitalError::Inadmissible { a, b });
            }
            let id = *instance_of.entry(p.axis_set.clone()).or_insert_with(|| {
                sets.push(p.axis_set.clone());
                same.push(p.same());
                first_pair.push((a, b));
                sets.len() - 1
            });
            if same[id] != p.same() {
                return Err(OrbitalError::MixedOrbits { a, b });
            }
            pair_instance[a * n + b] = id as u32;
            pair_instance[b * n + a] = id as u32;
        }
    }

    // Merge instances along the group action.
    let mut parent: Vec<usize> = (0..sets.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (id, set) in sets.iter().enumerate() {
        for &g in s.group().generators() {
            let mut image: Vec<usize> = set.iter().map(|&x| s.act(x, g)).collect();
            image.sort_unstable();
            let Some(&j) = instance_of.get(&image) else {
                let (a, b) = first_pair[id];
                return Err(OrbitalError::NotInvariant { a, b });
            };
            let (ra, rb) = (find(&mut parent, id), find(&mut parent, j));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }

    // One orbital per root; first_pair is increasing, so the first instance
    // met supplies the smallest pair.
    let mut root_orbital: HashMap<usize, usize> = HashMap::new();
    let mut orbitals: Vec<Orbital> = Vec::new();
    let mut instance_orbital = vec![0usize; sets.len()];
    for id in 0..sets.len() {
        let r = find(&mut parent, id);
        let o = *root_orbital.entry(r).or_insert_with(|| {
            orbitals.push(Orbital {
                rep: first_pair[id],
                n: sets[id].len(),
                same_orbit: same[id],
                allowed: types_for(sets[id].len()),
                instances: 0,
            });
            orbitals.len() - 1
        });
        orbitals[o].instances += 1;
        instance_orbital[id] = o;
    }
    let mut order: Vec<usize> = (0..orbitals.len()).collect();
    order.sort_by_key(|&o| (std::cmp::Reverse(orbitals[o].n), orbitals[o].rep));
    let mut rank = vec![0usize; orbitals.len()];
    for (r, &o) in order.iter().enumerate() {
        rank[o] = r;
    }
    let orbitals: Vec<Orbital> = order.iter().map(|&o| orbitals[o].clone()).collect();
    let pair_class: Vec<u32> = pair_instance
        .iter()
        .map(|&i| if i == u32::MAX { i } else { rank[instance_orbital[i as usize]] as u32 })
        .collect();
    let mut analysis = OrbitalAnalysis { orbitals, edges: Vec::new(), num_axes: n, pair_class };

    // Pairs inside a 4- or 6-set whose own axis set is smaller.
    for outer in 0..analysis.orbitals.len() {
        let o = &analysis.orbitals[outer];
        if !matches!(o.n, 4 | 6) {
            continue;
        }
        let set = &sets[pair_instance[o.rep.0 * n + o.rep.1] as usize];
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                let id = pair_instance[x * n + y] as usize;
                let m = sets[id].len();
                if m == o.n {
                    continue;
                }
                let e = InclusionEdge {
                    outer,
                    inner: analysis.orbital_of(x, y).unwrap(),
                    offset: (o.n / m) as i32,
                };
                if !analysis.edges.contains(&e) {
                    analysis.edges.push(e);
                }
            }
        }
    }
    for e in &analysis.edges {
        for &ty in &analysis.orbitals[e.outer].allowed {
            let want = inner_type(ty, e.offset);
            if !analysis.orbitals[e.inner].allowed.contains(&want) {
                return Err(OrbitalError::InnerMismatch { outer: e.outer, inner: e.inner, ty: want });
            }
        }
    }
    Ok(analysis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalogue::lookup;
    use crate::shape_enum::{axis_actions, generating_class_tuples};
    use std::sync::Arc;
    use AlgebraType::*;

    pub(crate) fn systems(name: &str, k: usize) -> Vec<AxisSystem> {
        let g = Arc::new(lookup(name).unwrap().clone());
        generating_class_tuples(&g, k).iter().flat_map(|t| axis_actions(&g, t).systems).collect()
    }

    fn free_ns(s: &AxisSystem) -> Vec<usize> {
        let a = orbital_analysis(s).unwrap();
        a.orbitals.iter().filter(|o| o.allowed.len() > 1).map(|o| o.n).collect()
    }

    #[test]
    fn inclusions_from_structure_constants() {
        assert_eq!(inner_type(T4A, 2), T2B);
        assert_eq!(inner_type(T4B, 2), T2A);
        assert_eq!(inner_type(T6A, 2), T3A);
        assert_eq!(inner_type(T6A, 3), T2A);
        assert_eq!(inner_type(T5A, 2), T5A);
    }

    #[test]
    fn one_orbit_structure() {
        let s4 = systems("S4", 1);
        let twelve = s4.iter().find(|s| s.num_axes() == 12).unwrap();
        let a = orbital_analysis(twelve).unwrap();
        assert_eq!(a.orbitals.iter().filter(|o| o.n == 4).count(), 1);
        let nine = &systems("3^2:2", 1)[0];
        assert_eq!(free_ns(nine), vec![3, 3, 3, 3]);
        let e = &systems("3^(1+2):2", 1);
        let big = e.iter().find(|s| s.num_axes() == 27).unwrap();
        assert!(crate::shape_enum::choice_orbitals(&orbital_analysis(big).unwrap()).is_empty());
    }

    #[test]
    fn edges_connect_containers_to_smaller_sets() {
        for s in systems("S4", 3) {
            let a = orbital_analysis(&s).unwrap();
            for e in &a.edges {
                assert!(a.orbitals[e.outer].n > a.orbitals[e.inner].n);
                assert_eq!(a.orbitals[e.outer].n as i32 / e.offset, a.orbitals[e.inner].n as i32);
            }
            // Every pair has an orbital, symmetric in (a, b).
            for x in 0..s.num_axes() {
                for y in 0..s.num_axes() {
                    assert_eq!(a.orbital_of(x, y).is_some(), x != y);
                    assert_eq!(a.orbital_of(x, y), a.orbital_of(y, x));
                }
            }
        }
    }
}
