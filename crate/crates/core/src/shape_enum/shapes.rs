//! Type assignments to orbitals that respect every inclusion.

use std::collections::BTreeSet;

use serde::Serialize;

use super::orbital::{inner_type, InclusionEdge, OrbitalAnalysis};
use super::AxisSystem;
use crate::dihedral_algebra::AlgebraType;
use crate::permgroup::automorphisms;

/// One type per orbital, in the analysis' orbital order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeAssignment {
    pub types: Vec<AlgebraType>,
    /// Inclusions violated by this assignment, as `(outer, inner)`
    /// orbital pairs.
    pub conflicts: Vec<(usize, usize)>,
}

impl ShapeAssignment {
    pub fn is_consistent(&self) -> bool {
        self.conflicts.is_empty()
    }

    /// The types at the given orbitals, e.g. `(4B, 3C, 2A)`.
    pub fn display_at(&self, orbitals: &[usize]) -> String {
        let t: Vec<String> = orbitals.iter().map(|&o| self.types[o].to_string()).collect();
        format!("({})", t.join(", "))
    }
}

/// Where the choices are: orbitals with one allowed type, or whose type is
/// fixed by such a container, are `forced`; the remaining free orbitals are
/// grouped along `4X ⊃ 2X` inclusions into components, each carrying one
/// binary choice made at its first orbital.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoicePlan {
    pub forced: Vec<Option<AlgebraType>>,
    pub components: Vec<Vec<usize>>,
}

impl ChoicePlan {
    /// First orbital of each component.
    pub fn choices(&self) -> Vec<usize> {
        self.components.iter().map(|c| c[0]).collect()
    }
}

fn injective(a: &OrbitalAnalysis, e: &InclusionEdge) -> bool {
    let allowed = &a.orbitals[e.outer].allowed;
    let imgs: BTreeSet<AlgebraType> = allowed.iter().map(|&t| inner_type(t, e.offset)).collect();
    allowed.len() > 1 && imgs.len() == allowed.len()
}

pub fn choice_plan(a: &OrbitalAnalysis) -> ChoicePlan {
    let m = a.orbitals.len();
    let mut forced: Vec<Option<AlgebraType>> =
        a.orbitals.iter().map(|o| (o.allowed.len() == 1).then(|| o.allowed[0])).collect();
    // Containers precede their inner orbitals, so one pass in order suffices.
    for o in 0..m {
        if let Some(t) = forced[o] {
            for e in a.edges.iter().filter(|e| e.outer == o) {
                forced[e.inner].get_or_insert(inner_type(t, e.offset));
            }
        }
    }
    let mut comp = vec![usize::MAX; m];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if comp[start] != usize::MAX || a.orbitals[start].allowed.len() < 2 {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for e in a.edges.iter().filter(|e| injective(a, e)) {
                let y = if e.outer == x { e.inner } else if e.inner == x { e.outer } else { continue };
                if comp[y] == usize::MAX && a.orbitals[y].allowed.len() > 1 {
                    comp[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        components.push(members);
    }
    components.retain(|c| c.iter().any(|&o| forced[o].is_none()));
    ChoicePlan { forced, components }
}

/// Orbitals carrying a choice, one per component.
pub fn choice_orbitals(a: &OrbitalAnalysis) -> Vec<usize> {
    choice_plan(a).choices()
}

/// The types implied by `lead_types[i]` at the first orbital of component
/// `i`, with forced types elsewhere; every violated inclusion is recorded.
fn propagate(a: &OrbitalAnalysis, plan: &ChoicePlan, lead_types: &[AlgebraType]) -> ShapeAssignment {
    let m = a.orbitals.len();
    let mut types: Vec<Option<AlgebraType>> = vec![None; m];
    for (c, &t) in plan.components.iter().zip(lead_types) {
        types[c[0]] = Some(t);
        let mut changed = true;
        while changed {
            changed = false;
            for e in a.edges.iter().filter(|e| c.contains(&e.outer) && c.contains(&e.inner)) {
                match (types[e.outer], types[e.inner]) {
                    (Some(o), None) => {
                        types[e.inner] = Some(inner_type(o, e.offset));
                        changed = true;
                    }
                    (None, Some(i)) => {
                        let o = a.orbitals[e.outer].allowed.iter().copied().find(|&t| inner_type(t, e.offset) == i);
                        if o.is_some() {
                            types[e.outer] = o;
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    let types: Vec<AlgebraType> = (0..m)
        .map(|o| types[o].or(plan.forced[o]).unwrap_or(a.orbitals[o].allowed[0]))
        .collect();
    let conflicts = a
        .edges
        .iter()
        .filter(|e| inner_type(types[e.outer], e.offset) != types[e.inner])
        .map(|e| (e.outer, e.inner))
        .collect();
    ShapeAssignment { types, conflicts }
}

/// Every shape: one per combination of component choices, in order of the
/// choices' allowed types. Shapes whose choice contradicts a type forced
/// elsewhere are kept and carry their conflicts.
pub fn enumerate_shapes(a: &OrbitalAnalysis) -> Vec<ShapeAssignment> {
    let plan = choice_plan(a);
    let leads = plan.choices();
    let mut out = Vec::new();
    let mut idx = vec![0usize; leads.len()];
    loop {
        let lead_types: Vec<AlgebraType> = leads.iter().zip(&idx).map(|(&o, &i)| a.orbitals[o].allowed[i]).collect();
        out.push(propagate(a, &plan, &lead_types));
        let mut i = leads.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < a.orbitals[leads[i]].allowed.len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Number of shapes, conflicting ones included.
pub fn count_shapes(a: &OrbitalAnalysis) -> usize {
    enumerate_shapes(a).len()
}

/// Backtracking over orbitals in order; an inner orbital is checked against
/// every already-assigned container, which always precedes it.
fn search(a: &OrbitalAnalysis, cur: &mut Vec<AlgebraType>, out: &mut dyn FnMut(&[AlgebraType])) {
    let i = cur.len();
    if i == a.orbitals.len() {
        out(cur);
        return;
    }
    for &ty in &a.orbitals[i].allowed {
        let ok = a.edges.iter().filter(|e| e.inner == i).all(|e| inner_type(cur[e.outer], e.offset) == ty);
        if ok {
            cur.push(ty);
            search(a, cur, out);
            cur.pop();
        }
    }
}

/// Assignments satisfying every inclusion, found by direct search rather
/// than through the choice plan.
pub fn consistent_assignments(a: &OrbitalAnalysis) -> Vec<Vec<AlgebraType>> {
    let mut out = Vec::new();
    search(a, &mut Vec::new(), &mut |t| out.push(t.to_vec()));
    out
}

/// Permutations of the axes that preserve `τ` and normalise the action:
/// `π(a^g) = π(a)^{α(g)}` for an automorphism `α`. Preserving `τ` forces
/// `α(g) g^{-1}` to centralise every `τ` value.
pub fn tau_symmetries(s: &AxisSystem) -> Vec<Vec<usize>> {
    let g = s.group();
    let taus: BTreeSet<u32> = (0..s.num_axes()).map(|a| s.tau(a)).collect();
    let taus: Vec<u32> = taus.into_iter().collect();
    let central = |x: u32| taus.iter().all(|&t| g.mul(x, t) == g.mul(t, x));
    let stab_of = |a: usize| {
        let r = s.coset_rep(a);
        let mut e: Vec<u32> = s.stabilizers()[s.orbit_of(a)].elements().iter().map(|&x| g.conj(x, r)).collect();
        e.sort_unstable();
        e
    };
    let stabs: Vec<Vec<u32>> = (0..s.num_axes()).map(stab_of).collect();
    let reps = s.orbit_reps();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for alpha in automorphisms(g) {
        if !g.generators().iter().all(|&x| central(g.mul(alpha[x as usize], g.inverse(x)))) {
            continue;
        }
        // Candidate images of each base axis.
        let cands: Vec<Vec<usize>> = reps
            .iter()
            .map(|&a| {
                let mut want: Vec<u32> = stabs[a].iter().map(|&x| alpha[x as usize]).collect();
                want.sort_unstable();
                (0..s.num_axes()).filter(|&b| s.tau(b) == s.tau(a) && stabs[b] == want).collect()
            })
            .collect();
        let mut pick = vec![0usize; reps.len()];
        'outer: loop {
            if cands.iter().all(|c| !c.is_empty()) {
                let pi: Vec<usize> = (0..s.num_axes())
                    .map(|a| {
                        let i = s.orbit_of(a);
                        s.act(cands[i][pick[i]], alpha[s.coset_rep(a) as usize])
                    })
                    .collect();
                let mut seen = vec![false; pi.len()];
                let bijective = pi.iter().all(|&b| !std::mem::replace(&mut seen[b], true));
                if bijective && (0..pi.len()).all(|a| s.tau(pi[a]) == s.tau(a)) {
                    found.insert(pi);
                }
            } else {
                break;
            }
            for i in 0..pick.len() {
                pick[i] += 1;
                if pick[i] < cands[i].len() {
                    continue 'outer;
                }
                pick[i] = 0;
            }
            break;
        }
    }
    found.into_iter().collect()
}

/// One representative per orbit of `shapes` under the `τ`-preserving
/// symmetries of the system; the first shape of each orbit is kept.
pub fn dedup_shapes(s: &AxisSystem, a: &OrbitalAnalysis, shapes: &[ShapeAssignment]) -> Vec<ShapeAssignment> {
    let perms: Vec<Vec<usize>> = tau_symmetries(s)
        .iter()
        .map(|pi| {
            a.orbitals
                .iter()
                .map(|o| a.orbital_of(pi[o.rep.0], pi[o.rep.1]).expect("distinct axes"))
                .collect()
        })
        .collect();
    let mut seen: BTreeSet<ShapeAssignment> = BTreeSet::new();
    let mut reps = Vec::new();
    for sh in shapes {
        if seen.contains(sh) {
            continue;
        }
        reps.push(sh.clone());
        for p in &perms {
            let mut image = sh.clone();
            for (o, &to) in p.iter().enumerate() {
                image.types[to] = sh.types[o];
            }
            image.conflicts = a
                .edges
                .iter()
                .filter(|e| inner_type(image.types[e.outer], e.offset) != image.types[e.inner])
                .map(|e| (e.outer, e.inner))
                .collect();
            seen.insert(image);
        }
        seen.insert(sh.clone());
    }
    reps
}
