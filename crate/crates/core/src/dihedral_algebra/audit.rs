//! Axiom-by-axiom audit of the dihedral algebras.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use super::eigen::{check_automorphism, eigen_decomposition, sigma_map, sigma_on_plus, tau_map, EigenError};
use super::linalg::{self, Vector};
use super::{
    algebra_table, check_m1, gram_positive_definite, inclusion_map, norton_sample, AlgebraTable, AlgebraType,
    BasisLabel,
};

/// Default number of Norton pairs per type and the default seed.
pub const NORTON_TRIALS: usize = 1000;
pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &'static str, result: Result<(), String>) -> Self {
        let (pass, detail) = match result {
            Ok(()) => (true, None),
            Err(e) => (false, Some(e)),
        };
        Check { name, pass, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeAudit {
    #[serde(rename = "type")]
    pub ty: AlgebraType,
    pub dim: usize,
    /// Eigenspace dimensions of `a0` for `1, 0, 1/4, 1/32`.
    pub eigenspace_dimensions: Option<[usize; 4]>,
    pub printed_eigenvectors_checked: usize,
    pub checks: Vec<Check>,
}

impl TypeAudit {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Eigenspace dimensions of `a0` as published.
pub fn printed_eigenspace_dimensions(ty: AlgebraType) -> [usize; 4] {
    use AlgebraType::*;
    match ty {
        T1A => [1, 0, 0, 0],
        T2A => [1, 1, 1, 0],
        T2B => [1, 1, 0, 0],
        T3A => [1, 1, 1, 1],
        T3C => [1, 1, 0, 1],
        T4A | T4B => [1, 2, 1, 1],
        T5A => [1, 2, 1, 2],
        T6A => [1, 3, 2, 2],
    }
}

fn axes(t: &AlgebraTable) -> Vec<usize> {
    (0..t.dim()).filter(|&i| t.basis()[i].is_axis()).collect()
}

fn for_each_axis(t: &AlgebraTable, f: impl Fn(usize) -> Result<(), String>) -> Result<(), String> {
    axes(t).into_iter().try_for_each(|i| f(i).map_err(|e| format!("{}: {e}", t.basis()[i])))
}

fn m3(t: &AlgebraTable) -> Result<(), String> {
    for_each_axis(t, |i| {
        let a = t.basis_vector(i);
        if t.multiply(&a, &a).unwrap() != a {
            return Err("not idempotent".into());
        }
        if !t.inner(&a, &a).unwrap().is_one() {
            return Err("norm is not 1".into());
        }
        Ok(())
    })
}

/// M4 with orthogonality of the eigenspaces, or M5, depending on `which`.
fn decomposition(t: &AlgebraTable, m5: bool) -> Result<(), String> {
    for_each_axis(t, |i| match eigen_decomposition(t, i) {
        Ok(d) => {
            if m5 {
                return Ok(());
            }
            for k in 0..4 {
                for l in k + 1..4 {
                    for x in &d.spaces[k] {
                        if d.spaces[l].iter().any(|y| !t.inner(x, y).unwrap().is_zero()) {
                            return Err("eigenspaces are not orthogonal".into());
                        }
                    }
                }
            }
            Ok(())
        }
        Err(e @ EigenError::OneSpace(_)) if m5 => Err(e.to_string()),
        Err(EigenError::OneSpace(_)) | Err(EigenError::PrintedMismatch { .. }) => Ok(()),
        Err(e) => Err(e.to_string()),
    })
}

fn printed(t: &AlgebraTable) -> Result<usize, String> {
    let i = t.index_of(BasisLabel::Axis(0)).expect("a0 exists");
    eigen_decomposition(t, i).map(|d| d.printed_checked).map_err(|e| e.to_string())
}

fn m6(t: &AlgebraTable) -> Result<(), String> {
    let full: Vec<Vector> = (0..t.dim()).map(|i| t.basis_vector(i)).collect();
    for_each_axis(t, |i| {
        let m = tau_map(t, i).map_err(|e| e.to_string())?;
        if linalg::mat_mul(&m, &m) != linalg::identity(t.dim()) {
            return Err("tau is not an involution".into());
        }
        check_automorphism(t, &m, &full)
    })
}

fn m7(t: &AlgebraTable) -> Result<(), String> {
    for_each_axis(t, |i| {
        let s = sigma_on_plus(t, i).map_err(|e| e.to_string())?;
        check_automorphism(t, &s.matrix, &s.domain)
    })
}

pub fn audit_type(ty: AlgebraType, seed: u64) -> TypeAudit {
    let t = match algebra_table(ty) {
        Ok(t) => t,
        Err(e) => {
            return TypeAudit {
                ty,
                dim: 0,
                eigenspace_dimensions: None,
                printed_eigenvectors_checked: 0,
                checks: vec![Check::new("table", Err(e.to_string()))],
            }
        }
    };
    let a0 = t.index_of(BasisLabel::Axis(0)).expect("a0 exists");
    let dims = eigen_decomposition(&t, a0).ok().map(|d| d.dimensions());
    let printed_checked = printed(&t);
    let m1 = check_m1(&t);
    let norton = norton_sample(&t, NORTON_TRIALS, seed);
    let want = printed_eigenspace_dimensions(ty);
    let checks = vec![
        Check::new(
            "M1",
            match m1.first() {
                None => Ok(()),
                Some(v) => Err(format!("{} violations, first ({}, {} {})", m1.len(), v.u, v.v, v.w)),
            },
        ),
        Check::new(
            "M2",
            match norton.violations.first() {
                None => Ok(()),
                Some(v) => Err(format!("{} violations, first u = {}, v = {}", norton.violations.len(), v.u, v.v)),
            },
        ),
        Check::new("M3", m3(&t)),
        Check::new("M4", decomposition(&t, false)),
        Check::new("M5", decomposition(&t, true)),
        Check::new("M6", m6(&t)),
        Check::new("M7", m7(&t)),
        Check::new(
            "gram_positive_definite",
            if gram_positive_definite(&t) { Ok(()) } else { Err("a leading minor is not positive".into()) },
        ),
        Check::new(
            "eigenspace_dimensions",
            match dims {
                Some(d) if d == want => Ok(()),
                Some(d) => Err(format!("found {d:?}, printed {want:?}")),
                None => Err("a0 does not decompose".into()),
            },
        ),
        Check::new("printed_eigenvectors", printed_checked.as_ref().map(|_| ()).map_err(Clone::clone)),
    ];
    TypeAudit {
        ty,
        dim: t.dim(),
        eigenspace_dimensions: dims,
        printed_eigenvectors_checked: printed_checked.unwrap_or(0),
        checks,
    }
}

/// The inclusions `sub < parent` found, and whether they are exactly
/// `2B < 4A`, `2A < 4B`, `2A < 6A`, `3A < 6A`.
#[derive(Clone, Debug, Serialize)]
pub struct InclusionAudit {
    pub found: Vec<String>,
    pub pass: bool,
    /// Type of `<<a0, a2>>` and `<<a0, a3>>` in `6A`, as computed.
    pub six_a_a0_a2: AlgebraType,
    pub six_a_a0_a3: AlgebraType,
    /// The usual labelling has these the other way round.
    pub labelling_note: String,
}

pub fn inclusion_audit() -> InclusionAudit {
    use AlgebraType::*;
    let (list, pairs) = inclusion_map();
    let expected: BTreeSet<(AlgebraType, AlgebraType)> =
        [(T2B, T4A), (T2A, T4B), (T2A, T6A), (T3A, T6A)].into_iter().collect();
    let six = |y: i32| {
        list.iter()
            .find(|i| i.parent == T6A && i.x == BasisLabel::Axis(0) && i.y == BasisLabel::Axis(y))
            .map(|i| i.sub)
            .expect("6A inclusions present")
    };
    let (s2, s3) = (six(2), six(3));
    InclusionAudit {
        found: pairs.iter().map(|(s, p)| format!("{s} < {p}")).collect(),
        pass: pairs == expected,
        six_a_a0_a2: s2,
        six_a_a0_a3: s3,
        labelling_note: format!(
            "structure constants give <<a0, a2>> = {s2} and <<a0, a3>> = {s3} in 6A; the usual labelling has <<a0, a2>> as 2A and <<a0, a3>> as 3A"
        ),
    }
}

/// In `2A`, `sigma(a0)` maps `a1` to `a_rho`.
pub fn sigma_resurrection_holds() -> bool {
    let Ok(t) = algebra_table(AlgebraType::T2A) else { return false };
    let (Some(a0), Some(a1), Some(ar)) = (
        t.index_of(BasisLabel::Axis(0)),
        t.index_of(BasisLabel::Axis(1)),
        t.index_of(BasisLabel::Extra(super::Extra::ARho)),
    ) else {
        return false;
    };
    match sigma_map(&t, a0) {
        Ok(s) => linalg::mat_vec(&s.matrix, &t.basis_vector(a1)) == t.basis_vector(ar),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralAudit {
    pub schema: u32,
    pub seed: u64,
    pub norton_trials: usize,
    pub types: Vec<TypeAudit>,
    pub inclusions: InclusionAudit,
    pub sigma_resurrection: bool,
}

impl DihedralAudit {
    pub fn pass(&self) -> bool {
        self.types.iter().all(TypeAudit::pass) && self.inclusions.pass && self.sigma_resurrection
    }
}

pub fn dihedral_audit(types: &[AlgebraType], seed: u64) -> DihedralAudit {
    DihedralAudit {
        schema: 1,
        seed,
        norton_trials: NORTON_TRIALS,
        types: types.iter().map(|&ty| audit_type(ty, seed)).collect(),
        inclusions: inclusion_audit(),
        sigma_resurrection: sigma_resurrection_holds(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_type_passes() {
        for ty in AlgebraType::ALL {
            let a = audit_type(ty, DEFAULT_SEED);
            assert!(a.pass(), "{ty}: {:?}", a.checks.iter().find(|c| !c.pass));
            assert_eq!(a.checks.len(), 10);
        }
    }

    #[test]
    fn inclusions_and_labelling() {
        let i = inclusion_audit();
        assert!(i.pass, "{:?}", i.found);
        assert_eq!(i.six_a_a0_a2, AlgebraType::T3A);
        assert_eq!(i.six_a_a0_a3, AlgebraType::T2A);
        assert!(sigma_resurrection_holds());
    }

    #[test]
    fn m7_covers_nontrivial_tau() {
        // 3C has a 1/32-eigenspace, so sigma lives on a proper subspace.
        let t = algebra_table(AlgebraType::T3C).unwrap();
        let s = sigma_on_plus(&t, 0).unwrap();
        assert!(s.domain.len() < t.dim());
        assert!(check_automorphism(&t, &s.matrix, &s.domain).is_ok());
    }
}
