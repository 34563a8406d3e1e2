//! Axis actions of a group and the shapes they allow.
//!
//! Given a group `G` and `k` orbits of axes, each orbit is described by an
//! involution `t_i` (the image of its base axis under `τ`) and a stabiliser
//! `⟨t_i⟩ <= H_i <= C_G(t_i)`. The orbit is then the right coset space
//! `H_i \ G`, and `τ(H_i g) = t_i^g`. Systems whose action is unfaithful or
//! whose `τ` is not admissible are discarded. The remaining ones are split
//! into orbitals (one per `G`-class of 2-generated subalgebras) and every
//! consistent assignment of dihedral types is listed.

use std::sync::Arc;

use serde::Serialize;

use crate::permgroup::{FiniteGroup, Subgroup};

mod orbital;
mod shapes;
mod sweep;

pub use orbital::{orbital_analysis, InclusionEdge, Orbital, OrbitalAnalysis, OrbitalError};
pub use shapes::{choice_orbitals, choice_plan, consistent_assignments, ChoicePlan, count_shapes, dedup_shapes, enumerate_shapes, tau_symmetries, ShapeAssignment};
pub use sweep::{
    dedup_systems, shape_report, summary_csv, summary_rows, systems_for, OrbitalReport, ShapeEntry, ShapeReport, ShapeRow,
    SweepError, SystemReport, SWEEP_GROUPS,
};

/// Why a candidate system was discarded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rejection {
    #[error("action has a kernel of order {kernel_order}")]
    Unfaithful { kernel_order: usize },
    #[error("pair ({a}, {b}) has orbit sizes {n_a} and {n_b} (same orbit: {same})")]
    Inadmissible { a: usize, b: usize, n_a: usize, n_b: usize, same: bool },
}

/// Orbits of the dihedral group `⟨τ(a), τ(b)⟩` on a pair of axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOrbits {
    pub orbit_a: Vec<usize>,
    pub orbit_b: Vec<usize>,
    /// `a^H ∪ b^H`, sorted.
    pub axis_set: Vec<usize>,
}

impl PairOrbits {
    pub fn same(&self) -> bool {
        self.orbit_a == self.orbit_b
    }

    /// Admissible when both orbits have the same size `n`, with `n` in
    /// `{1, 3, 5}` for a shared orbit and `{1, 2, 3}` otherwise.
    pub fn is_admissible(&self) -> bool {
        let n = self.orbit_a.len();
        n == self.orbit_b.len() && if self.same() { matches!(n, 1 | 3 | 5) } else { matches!(n, 1..=3) }
    }
}

/// A group acting on axes `A = a_0^G ∪ ... ∪ a_{k-1}^G` together with `τ`.
///
/// Axes are numbered orbit by orbit; inside orbit `i` axis `j` is the coset
/// `H_i g_j`, with cosets in order of their smallest element, so `a_i` is
/// the first axis of its orbit.
#[derive(Clone, Debug)]
pub struct AxisSystem {
    group: Arc<FiniteGroup>,
    classes: Vec<usize>,
    reps: Vec<u32>,
    stabilizers: Vec<Subgroup>,
    orbit_start: Vec<usize>,
    orbit_of: Vec<usize>,
    coset_reps: Vec<u32>,
    tau: Vec<u32>,
    /// `action[x][a] = a^x`.
    action: Vec<Vec<u32>>,
}

impl AxisSystem {
    /// Builds the coset action for each `(class index, t_i, H_i)`; no
    /// faithfulness or admissibility check is made here.
    pub fn new(group: Arc<FiniteGroup>, orbits: &[(usize, u32, Subgroup)]) -> Self {
        let g = &*group;
        let n = g.order();
        let mut orbit_start = Vec::new();
        let mut orbit_of = Vec::new();
        let mut coset_reps = Vec::new();
        let mut tau = Vec::new();
        // coset_id[i][x]: global axis index of H_i x.
        let mut coset_id = Vec::new();
        for (i, (_, t, h)) in orbits.iter().enumerate() {
            orbit_start.push(coset_reps.len());
            let mut ids = vec![u32::MAX; n];
            for x in g.elements() {
                if ids[x as usize] != u32::MAX {
                    continue;
                }
                let id = coset_reps.len() as u32;
                for &y in h.elements() {
                    ids[g.mul(y, x) as usize] = id;
                }
                coset_reps.push(x);
                orbit_of.push(i);
                tau.push(g.conj(*t, x));
            }
            coset_id.push(ids);
        }
        let action = g
            .elements()
            .map(|x| {
                (0..coset_reps.len())
                    .map(|a| coset_id[orbit_of[a]][g.mul(coset_reps[a], x) as usize])
                    .collect()
            })
            .collect();
        AxisSystem {
            classes: orbits.iter().map(|o| o.0).collect(),
            reps: orbits.iter().map(|o| o.1).collect(),
            stabilizers: orbits.iter().map(|o| o.2.clone()).collect(),
            group,
            orbit_start,
            orbit_of,
            coset_reps,
            tau,
            action,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn num_axes(&self) -> usize {
        self.tau.len()
    }

    pub fn num_orbits(&self) -> usize {
        self.reps.len()
    }

    /// Indices into `involution_classes(true)` of each orbit's `τ` class.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn stabilizers(&self) -> &[Subgroup] {
        &self.stabilizers
    }

    /// The base axis `a_i` of each orbit.
    pub fn orbit_reps(&self) -> Vec<usize> {
        self.orbit_start.clone()
    }

    pub fn orbit_of(&self, a: usize) -> usize {
        self.orbit_of[a]
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        (0..self.num_orbits())
            .map(|i| self.orbit_of.iter().filter(|&&o| o == i).count())
            .collect()
    }

    /// Orbit lengths joined as `l0+l1+...`.
    pub fn axes_label(&self) -> String {
        self.orbit_lengths().iter().map(|l| l.to_string()).collect::<Vec<_>>().join("+")
    }

    /// `a3` is the fourth axis of the first orbit, `b0` the base axis of the
    /// second, and so on.
    pub fn axis_name(&self, a: usize) -> String {
        let o = self.orbit_of[a];
        let letter = (b'a' + o as u8) as char;
        format!("{letter}{}", a - self.orbit_start[o])
    }

    pub fn tau(&self, a: usize) -> u32 {
        self.tau[a]
    }

    /// The group element `g` with `a = a_i^g` used to label `a`.
    pub fn coset_rep(&self, a: usize) -> u32 {
        self.coset_reps[a]
    }

    pub fn act(&self, a: usize, x: u32) -> usize {
        self.action[x as usize][a] as usize
    }

    /// Orbits of `⟨τ(a), τ(b)⟩` on `a` and `b`.
    pub fn pair_orbits(&self, a: usize, b: usize) -> PairOrbits {
        let gens = [self.tau[a], self.tau[b]];
        let orbit_a = self.orbit_under(a, &gens);
        let orbit_b = self.orbit_under(b, &gens);
        let mut axis_set = orbit_a.clone();
        axis_set.extend(&orbit_b);
        axis_set.sort_unstable();
        axis_set.dedup();
        PairOrbits { orbit_a, orbit_b, axis_set }
    }

    fn orbit_under(&self, a: usize, gens: &[u32]) -> Vec<usize> {
        let mut orbit = vec![a];
        let mut k = 0;
        while k < orbit.len() {
            for &s in gens {
                let b = self.act(orbit[k], s);
                if !orbit.contains(&b) {
                    orbit.push(b);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Order of the kernel of the action.
    pub fn kernel_order(&self) -> usize {
        self.action.iter().filter(|p| p.iter().enumerate().all(|(a, &b)| a == b as usize)).count()
    }

    /// The first pair `(a_i, b)` violating admissibility, if any. Checking
    /// base axes suffices since admissibility is `G`-invariant.
    pub fn admissibility_violation(&self) -> Option<Rejection> {
        for &a in &self.orbit_start {
            for b in 0..self.num_axes() {
                let p = self.pair_orbits(a, b);
                if !p.is_admissible() {
                    return Some(Rejection::Inadmissible {
                        a,
                        b,
                        n_a: p.orbit_a.len(),
                        n_b: p.orbit_b.len(),
                        same: p.same(),
                    });
                }
            }
        }
        None
    }

    /// Faithfulness then admissibility.
    pub fn validate(&self) -> Result<(), Rejection> {
        let kernel_order = self.kernel_order();
        if kernel_order > 1 {
            return Err(Rejection::Unfaithful { kernel_order });
        }
        self.admissibility_violation().map_or(Ok(()), Err)
    }
}

/// Multisets of `k` involution classes (identity included, as index lists
/// into `involution_classes(true)`, non-decreasing) such that `G` is
/// generated by three involutions drawn from them with every class used.
pub fn generating_class_tuples(g: &FiniteGroup, k: usize) -> Vec<Vec<usize>> {
    assert!((1..=3).contains(&k), "orbit count must be 1, 2 or 3");
    let classes = g.involution_classes(true);
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(k);
    multisets(classes.len(), k, 0, &mut tuple, &mut |t| {
        if generated_by_triple(g, &classes, t) {
            out.push(t.to_vec());
        }
    });
    out
}

fn multisets(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in from..n {
        cur.push(i);
        multisets(n, k, i, cur, f);
        cur.pop();
    }
}

/// Whether some `x_j` in class `tuple[f(j)]`, for a surjection
/// `f: {0,1,2} -> tuple`, generate `g`. The first element may be taken to
/// be the class representative.
fn generated_by_triple(g: &FiniteGroup, classes: &[Vec<u32>], tuple: &[usize]) -> bool {
    let patterns: Vec<[usize; 3]> = match tuple.len() {
        1 => vec![[0, 0, 0]],
        2 => vec![[0, 1, 0], [0, 1, 1]],
        _ => vec![[0, 1, 2]],
    };
    patterns.iter().any(|p| {
        let c: Vec<&Vec<u32>> = p.iter().map(|&j| &classes[tuple[j]]).collect();
        let x = c[0][0];
        c[1].iter().any(|&y| c[2].iter().any(|&z| g.generate(&[x, y, z]).order() == g.order()))
    })
}

/// Systems for one class tuple, with rejection tallies.
#[derive(Clone, Debug)]
pub struct AxisActions {
    pub systems: Vec<AxisSystem>,
    pub unfaithful: usize,
    pub inadmissible: usize,
}

/// All faithful admissible systems whose orbit `i` has `τ` in class
/// `tuple[i]`. Stabilisers run over `C_G(t_i)`-classes of overgroups of
/// `⟨t_i⟩`; equal classes take stabilisers as a multiset.
pub fn axis_actions(group: &Arc<FiniteGroup>, tuple: &[usize]) -> AxisActions {
    let g = &**group;
    let classes = g.involution_classes(true);
    let reps: Vec<u32> = tuple.iter().map(|&c| classes[c][0]).collect();
    let options: Vec<Vec<Subgroup>> = reps.iter().map(|&t| g.overgroups_in_centralizer(t)).collect();
    let mut out = AxisActions { systems: Vec::new(), unfaithful: 0, inadmissible: 0 };
    let mut choice = Vec::with_capacity(tuple.len());
    choose_stabilizers(tuple, &options, &mut choice, &mut |choice| {
        let orbits: Vec<(usize, u32, Subgroup)> = (0..tuple.len())
            .map(|i| (tuple[i], reps[i], options[i][choice[i]].clone()))
            .collect();
        let s = AxisSystem::new(Arc::clone(group), &orbits);
        match s.validate() {
            Ok(()) => out.systems.push(s),
            Err(Rejection::Unfaithful { .. }) => out.unfaithful += 1,
            Err(Rejection::Inadmissible { .. }) => out.inadmissible += 1,
        }
    });
    out
}

fn choose_stabilizers(tuple: &[usize], options: &[Vec<Subgroup>], cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let i = cur.len();
    if i == tuple.len() {
        f(cur);
        return;
    }
    let from = if i > 0 && tuple[i] == tuple[i - 1] { cur[i - 1] } else { 0 };
    for j in from..options[i].len() {
        cur.push(j);
        choose_stabilizers(tuple, options, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalogue::lookup;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(lookup(name).unwrap().clone())
    }

    fn systems(name: &str, k: usize) -> Vec<AxisSystem> {
        let g = group(name);
        generating_class_tuples(&g, k).iter().flat_map(|t| axis_actions(&g, t).systems).collect()
    }

    fn labels(s: &[AxisSystem]) -> Vec<String> {
        let mut v: Vec<String> = s.iter().map(|s| s.axes_label()).collect();
        v.sort();
        v
    }

    /// Every triple of involutions and every surjective assignment of its
    /// members to the tuple's slots.
    fn brute_force_tuples(g: &FiniteGroup, k: usize) -> usize {
        let classes = g.involution_classes(true);
        let mut count = 0;
        multisets(classes.len(), k, 0, &mut Vec::new(), &mut |t| {
            let d: Vec<u32> = classes.iter().flatten().copied().collect();
            let maps: Vec<[usize; 3]> = (0..k.pow(3))
                .map(|m| [m % k, (m / k) % k, m / (k * k)])
                .filter(|f| (0..k).all(|slot| f.contains(&slot)))
                .collect();
            let found = d.iter().any(|&x| {
                d.iter().any(|&y| {
                    d.iter().any(|&z| {
                        let xs = [x, y, z];
                        maps.iter().any(|f| (0..3).all(|j| classes[t[f[j]]].contains(&xs[j])))
                            && g.generate(&xs).order() == g.order()
                    })
                })
            });
            count += found as usize;
        });
        count
    }

    #[test]
    fn class_tuples() {
        let s4 = group("S4");
        let classes = s4.involution_classes(true);
        let t = generating_class_tuples(&s4, 1);
        assert_eq!(t.len(), 1);
        assert_eq!(classes[t[0][0]].len(), 6);
        assert_eq!(generating_class_tuples(&group("1"), 3), vec![vec![0, 0, 0]]);
        // 2^2: {x, y, xy} and {u, u, v} (6 of them) and {1, u, v} (3).
        assert_eq!(generating_class_tuples(&group("2^2"), 3).len(), 10);
        for name in ["2^2", "S3", "S4", "D12", "2^3"] {
            let g = group(name);
            for k in 1..=3 {
                assert_eq!(generating_class_tuples(&g, k).len(), brute_force_tuples(&g, k), "{name} k={k}");
            }
        }
    }

    #[test]
    fn one_orbit_examples() {
        assert_eq!(labels(&systems("S4", 1)), ["12", "6"]);
        assert_eq!(labels(&systems("D10", 1)), ["5"]);
        assert_eq!(labels(&systems("3^2:2", 1)), ["9"]);
    }

    #[test]
    fn emitted_systems_satisfy_invariants() {
        for (name, k) in [("S4", 3), ("2^3", 3), ("D12", 2), ("S3", 3)] {
            for s in systems(name, k) {
                let g = s.group();
                assert_eq!(s.kernel_order(), 1);
                for a in 0..s.num_axes() {
                    let i = s.orbit_of(a);
                    let h = &s.stabilizers()[i];
                    assert_eq!(s.orbit_lengths()[i] * h.order(), g.order());
                    for x in g.elements() {
                        let b = s.act(a, x);
                        assert_eq!(s.tau(b), g.conj(s.tau(a), x), "equivariance");
                    }
                    let stab: Vec<u32> = g.elements().filter(|&x| s.act(a, x) == a).collect();
                    assert!(stab.contains(&s.tau(a)));
                    assert!(stab.iter().all(|&x| g.mul(x, s.tau(a)) == g.mul(s.tau(a), x)));
                    for b in 0..s.num_axes() {
                        assert!(s.pair_orbits(a, b).is_admissible());
                    }
                }
            }
        }
    }
}
