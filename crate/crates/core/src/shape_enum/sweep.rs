//! Per-group reports and the summary table.

use std::sync::Arc;

use serde::Serialize;

use super::*;
use crate::dihedral_algebra::AlgebraType;
use crate::permgroup::automorphisms;
use crate::permgroup::catalogue::{canonical_name, identify_known, lookup};

/// Groups swept by default: the trivial group and the catalogue groups of
/// the minimal 3-generated classification.
pub const SWEEP_GROUPS: &[&str] = &[
    "1", "2", "2^2", "S3", "D8", "D10", "D12", "D20", "2^3", "S4", "GL(2,3)", "A5", "3^2:2", "5^2:2", "(4x2):2",
    "(6x2):2", "3^(1+2):2", "5^(1+2):2", "(5^2:3):2",
];

/// Canonical key of `(t, H)` up to conjugation in `g`.
fn pair_key(g: &FiniteGroup, t: u32, h: &[u32]) -> (u32, Vec<u32>) {
    g.elements()
        .map(|x| {
            let mut e: Vec<u32> = h.iter().map(|&y| g.conj(y, x)).collect();
            e.sort_unstable();
            (g.conj(t, x), e)
        })
        .min()
        .unwrap()
}

/// Systems up to conjugacy and automorphisms of the group, keeping the
/// first of each class.
pub fn dedup_systems(g: &FiniteGroup, systems: Vec<AxisSystem>) -> Vec<AxisSystem> {
    if systems.len() < 2 {
        return systems;
    }
    let auts = automorphisms(g);
    let key = |s: &AxisSystem| {
        auts.iter()
            .map(|alpha| {
                let mut k: Vec<(u32, Vec<u32>)> = (0..s.num_orbits())
                    .map(|i| {
                        let a = s.orbit_reps()[i];
                        let h: Vec<u32> = s.stabilizers()[i].elements().iter().map(|&x| alpha[x as usize]).collect();
                        pair_key(g, alpha[s.tau(a) as usize], &h)
                    })
                    .collect();
                k.sort();
                k
            })
            .min()
            .unwrap()
    };
    let mut seen = std::collections::HashSet::new();
    systems.into_iter().filter(|s| seen.insert(key(s))).collect()
}

/// All systems of `g` with `k` orbits, up to automorphisms.
pub fn systems_for(g: &Arc<FiniteGroup>, k: usize) -> (Vec<AxisSystem>, usize, usize) {
    let mut all = Vec::new();
    let (mut unfaithful, mut inadmissible) = (0, 0);
    for t in generating_class_tuples(g, k) {
        let r = axis_actions(g, &t);
        unfaithful += r.unfaithful;
        inadmissible += r.inadmissible;
        all.extend(r.systems);
    }
    (dedup_systems(g, all), unfaithful, inadmissible)
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("orbit count must be 1, 2 or 3, got {0}")]
    BadOrbitCount(usize),
    #[error("system {axes}: {source}")]
    Orbital {
        axes: String,
        #[source]
        source: OrbitalError,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitalReport {
    /// Representative pair, e.g. `(a0, b2)`.
    pub rep: String,
    pub n: usize,
    pub forced: Option<AlgebraType>,
    /// Allowed types when the orbital is a free choice, else empty.
    pub choices: Vec<AlgebraType>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeEntry {
    /// Types at the choice orbitals, as the tables print them.
    pub choices: String,
    /// One type per orbital, in orbital order.
    pub types: Vec<AlgebraType>,
    pub consistent: bool,
    /// Violated inclusions as `(outer, inner)` orbital indices.
    pub conflicts: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemReport {
    pub axes: String,
    /// Size of each orbit's `τ` class.
    pub tau_class_sizes: Vec<usize>,
    pub stabilizers: Vec<String>,
    pub orbitals: Vec<OrbitalReport>,
    /// Indices into `orbitals` of the choices, e.g. `4X, 2X^2`.
    pub choice_orbitals: Vec<usize>,
    pub choice_label: String,
    pub shape_count: usize,
    pub consistent_count: usize,
    pub dedup_count: usize,
    pub shapes: Vec<ShapeEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub orbits: usize,
    pub systems: Vec<SystemReport>,
    pub rejected_unfaithful: usize,
    pub rejected_inadmissible: usize,
}

impl ShapeReport {
    /// Systems whose orbit lengths equal `axes` as a multiset, e.g. `"6+6+3"`
    /// matches a system labelled `3+6+6`.
    pub fn systems_with_axes<'a>(&'a self, axes: &str) -> impl Iterator<Item = &'a SystemReport> {
        let want = sorted_axes(axes);
        self.systems.iter().filter(move |s| sorted_axes(&s.axes) == want)
    }
}

fn sorted_axes(label: &str) -> Vec<usize> {
    let mut v: Vec<usize> = label.split('+').filter_map(|x| x.trim().parse().ok()).collect();
    v.sort_unstable();
    v
}

/// `4X, 2X^2` style label of the choice orbitals' sizes.
fn choice_label(ns: &[usize]) -> String {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &n in ns {
        match runs.last_mut() {
            Some((m, c)) if *m == n => *c += 1,
            _ => runs.push((n, 1)),
        }
    }
    let parts: Vec<String> =
        runs.iter().map(|&(n, c)| if c == 1 { format!("{n}X") } else { format!("{n}X^{c}") }).collect();
    parts.join(", ")
}

fn stabilizer_name(g: &FiniteGroup, h: &Subgroup) -> String {
    if h.order() == 1 {
        return "1".into();
    }
    let pos: std::collections::HashMap<u32, u32> =
        h.elements().iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
    let actions: Vec<Vec<u32>> = g
        .small_generating_set(h)
        .iter()
        .map(|&s| h.elements().iter().map(|&x| pos[&g.mul(x, s)]).collect())
        .collect();
    match FiniteGroup::from_right_action(actions) {
        Ok(sub) => identify_known(&sub).map_or_else(|| format!("order {}", h.order()), str::to_string),
        Err(_) => format!("order {}", h.order()),
    }
}

fn system_report(s: &AxisSystem) -> Result<SystemReport, SweepError> {
    let a = orbital_analysis(s).map_err(|source| SweepError::Orbital { axes: s.axes_label(), source })?;
    let plan = choice_plan(&a);
    let choices = plan.choices();
    let shapes = enumerate_shapes(&a);
    let dedup = dedup_shapes(s, &a, &shapes);
    let g = s.group();
    let classes = g.involution_classes(true);
    let free: std::collections::BTreeSet<usize> = plan.components.iter().flatten().copied().collect();
    Ok(SystemReport {
        axes: s.axes_label(),
        tau_class_sizes: s.classes().iter().map(|&c| classes[c].len()).collect(),
        stabilizers: s.stabilizers().iter().map(|h| stabilizer_name(g, h)).collect(),
        orbitals: a
            .orbitals
            .iter()
            .enumerate()
            .map(|(i, o)| OrbitalReport {
                rep: format!("({}, {})", s.axis_name(o.rep.0), s.axis_name(o.rep.1)),
                n: o.n,
                forced: plan.forced[i],
                choices: if free.contains(&i) { o.allowed.clone() } else { Vec::new() },
            })
            .collect(),
        choice_label: choice_label(&choices.iter().map(|&o| a.orbitals[o].n).collect::<Vec<_>>()),
        choice_orbitals: choices.clone(),
        shape_count: shapes.len(),
        consistent_count: shapes.iter().filter(|x| x.is_consistent()).count(),
        dedup_count: dedup.len(),
        shapes: shapes
            .iter()
            .map(|x| ShapeEntry {
                choices: x.display_at(&choices),
                types: x.types.clone(),
                consistent: x.is_consistent(),
                conflicts: x.conflicts.clone(),
            })
            .collect(),
    })
}

/// Every system of the catalogue group `name` with `k` orbits of axes, and
/// its shapes.
pub fn shape_report(name: &str, k: usize) -> Result<ShapeReport, SweepError> {
    if !(1..=3).contains(&k) {
        return Err(SweepError::BadOrbitCount(k));
    }
    let canonical = canonical_name(name).ok_or_else(|| SweepError::UnknownGroup(name.into()))?;
    let g = Arc::new(lookup(canonical).expect("canonical names resolve").clone());
    let (systems, unfaithful, inadmissible) = systems_for(&g, k);
    Ok(ShapeReport {
        schema: 1,
        group: canonical.into(),
        order: g.order(),
        orbits: k,
        systems: systems.iter().map(system_report).collect::<Result<_, _>>()?,
        rejected_unfaithful: unfaithful,
        rejected_inadmissible: inadmissible,
    })
}

/// One line of the summary table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeRow {
    pub group: String,
    pub axes: String,
    pub shapes: usize,
    pub consistent: usize,
    pub dedup: usize,
    pub choices: String,
}

pub fn summary_rows(reports: &[ShapeReport]) -> Vec<ShapeRow> {
    reports
        .iter()
        .flat_map(|r| {
            r.systems.iter().map(|s| ShapeRow {
                group: r.group.clone(),
                axes: s.axes.clone(),
                shapes: s.shape_count,
                consistent: s.consistent_count,
                dedup: s.dedup_count,
                choices: s.choice_label.clone(),
            })
        })
        .collect()
}

/// The rows as CSV with a header line.
pub fn summary_csv(rows: &[ShapeRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}
