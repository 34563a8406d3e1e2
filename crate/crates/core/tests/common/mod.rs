#![allow(dead_code)]

pub mod tables;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use min3gen::dihedral_algebra::AlgebraType;
use min3gen::shape_enum::{shape_report, ShapeReport, SystemReport, SWEEP_GROUPS};

/// The sweep over every group and orbit count, computed once per binary.
pub fn reports() -> &'static BTreeMap<(String, usize), ShapeReport> {
    static R: OnceLock<BTreeMap<(String, usize), ShapeReport>> = OnceLock::new();
    R.get_or_init(|| {
        let mut m = BTreeMap::new();
        for g in SWEEP_GROUPS {
            for k in 1..=3 {
                m.insert((g.to_string(), k), shape_report(g, k).unwrap());
            }
        }
        m
    })
}

pub fn sorted_axes(label: &str) -> Vec<usize> {
    let mut v: Vec<usize> = label.split('+').map(|x| x.parse().unwrap()).collect();
    v.sort_unstable();
    v
}

/// `(group, sorted axes) -> sorted counts`, one count per system.
pub type Counts = BTreeMap<(String, Vec<usize>), Vec<usize>>;

pub fn table_counts(rows: &[(&str, &str, usize)]) -> Counts {
    let mut m = Counts::new();
    for &(g, axes, n) in rows {
        m.entry((g.to_string(), sorted_axes(axes))).or_default().push(n);
    }
    m.values_mut().for_each(|v| v.sort_unstable());
    m
}

pub fn swept_counts(k: usize) -> Counts {
    let mut m = Counts::new();
    for ((g, kk), r) in reports() {
        if *kk != k {
            continue;
        }
        for s in &r.systems {
            m.entry((g.clone(), sorted_axes(&s.axes))).or_default().push(s.shape_count);
        }
    }
    m.values_mut().for_each(|v| v.sort_unstable());
    m
}

/// Named shapes that do not occur in the sweep.
pub fn missing_named_shapes() -> Vec<&'static (&'static str, &'static str, &'static str)> {
    tables::NAMED_SHAPES
        .iter()
        .filter(|(g, axes, shape)| {
            let k = axes.split('+').count();
            !shape_occurs(&reports()[&(g.to_string(), k)], axes, shape)
        })
        .collect()
}

fn parse_shape(s: &str) -> Vec<AlgebraType> {
    if s.is_empty() {
        return Vec::new();
    }
    s.split(", ").map(|t| t.parse().expect("type name")).collect()
}

fn is_submultiset(small: &[AlgebraType], big: &[AlgebraType]) -> bool {
    let mut rest = big.to_vec();
    small.iter().all(|t| match rest.iter().position(|x| x == t) {
        Some(i) => {
            rest.swap_remove(i);
            true
        }
        None => false,
    })
}

/// Whether a consistent shape of `s` has `named` as its choice types, or,
/// for rows that also print forced types, has `named` among all its types
/// with the choice types included.
fn system_has_shape(s: &SystemReport, named: &[AlgebraType]) -> bool {
    s.shapes.iter().filter(|sh| sh.consistent).any(|sh| {
        let choice: Vec<AlgebraType> = s.choice_orbitals.iter().map(|&o| sh.types[o]).collect();
        if named.len() == choice.len() {
            is_submultiset(named, &choice)
        } else {
            is_submultiset(&choice, named) && is_submultiset(named, &sh.types)
        }
    })
}

pub fn shape_occurs(r: &ShapeReport, axes: &str, shape: &str) -> bool {
    let named = parse_shape(shape);
    r.systems_with_axes(axes).any(|s| system_has_shape(s, &named))
}
