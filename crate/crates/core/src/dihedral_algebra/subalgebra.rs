//! Subalgebras generated by two axes, identified by their structure
//! constants.

use std::collections::BTreeSet;

use super::linalg::{self, Vector};
use super::{algebra_table, AlgebraTable, AlgebraType, BasisLabel};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SubalgebraError {
    #[error("{0} is not an axis")]
    NotAxis(BasisLabel),
    #[error("the {dim}-dimensional subalgebra generated by {x} and {y} matches no dihedral type")]
    NoMatch { x: BasisLabel, y: BasisLabel, dim: usize },
}

/// Monomials spanning the subalgebra generated by two vectors: entry `k >= 2`
/// is the product of entries `parents[k]`.
struct WordBasis {
    vectors: Vec<Vector>,
    parents: Vec<(usize, usize)>,
}

fn word_basis(t: &AlgebraTable, x: Vector, y: Vector) -> WordBasis {
    let mut vectors = vec![x];
    let mut parents = vec![(0, 0)];
    if !linalg::in_span(&vectors, &y) {
        vectors.push(y);
        parents.push((1, 1));
    }
    let mut changed = true;
    while changed {
        changed = false;
        let n = vectors.len();
        for i in 0..n {
            for j in i..n {
                let p = t.multiply(&vectors[i], &vectors[j]).expect("same algebra");
                if !linalg::in_span(&vectors, &p) {
                    vectors.push(p);
                    parents.push((i, j));
                    changed = true;
                }
            }
        }
    }
    WordBasis { vectors, parents }
}

/// Evaluates the same monomials in `t` starting from `x`, `y`.
fn replay(t: &AlgebraTable, w: &WordBasis, x: Vector, y: Vector) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(w.vectors.len());
    for (k, &(i, j)) in w.parents.iter().enumerate() {
        let v = match k {
            0 => x.clone(),
            1 if (i, j) == (1, 1) => y.clone(),
            _ => t.multiply(&out[i], &out[j]).expect("same algebra"),
        };
        out.push(v);
    }
    out
}

/// Whether the structure constants and inner products agree on the two
/// monomial bases.
fn same_structure(s: &AlgebraTable, ws: &[Vector], t: &AlgebraTable, wt: &[Vector]) -> bool {
    if linalg::rank(&wt.to_vec()) != wt.len() {
        return false;
    }
    for i in 0..ws.len() {
        for j in i..ws.len() {
            let ps = linalg::coordinates(ws, &s.multiply(&ws[i], &ws[j]).unwrap());
            let pt = linalg::coordinates(wt, &t.multiply(&wt[i], &wt[j]).unwrap());
            if ps.is_none() || ps != pt {
                return false;
            }
            if s.inner(&ws[i], &ws[j]).unwrap() != t.inner(&wt[i], &wt[j]).unwrap() {
                return false;
            }
        }
    }
    true
}

/// Type of the subalgebra generated by the axes at `x` and `y`, found by
/// matching structure constants against each dihedral type with `a0 -> x`
/// and `a1 -> y`.
pub fn subalgebra_type(t: &AlgebraTable, x: usize, y: usize) -> Result<AlgebraType, SubalgebraError> {
    for i in [x, y] {
        if !t.basis()[i].is_axis() {
            return Err(SubalgebraError::NotAxis(t.basis()[i]));
        }
    }
    let w = word_basis(t, t.basis_vector(x), t.basis_vector(y));
    for ty in AlgebraType::ALL.into_iter().filter(|ty| ty.dimension() == w.vectors.len()) {
        let cand = algebra_table(ty).expect("dihedral tables complete");
        let a0 = cand.basis_vector(cand.index_of(BasisLabel::Axis(0)).unwrap());
        let a1 = cand.basis_vector(cand.index_of(BasisLabel::Axis(1)).unwrap());
        let wt = replay(&cand, &w, a0, a1);
        if same_structure(t, &w.vectors, &cand, &wt) {
            return Ok(ty);
        }
    }
    Err(SubalgebraError::NoMatch { x: t.basis()[x], y: t.basis()[y], dim: w.vectors.len() })
}

/// One proper subalgebra generated by two distinct axes `a_i`, `a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub parent: AlgebraType,
    pub sub: AlgebraType,
    pub x: BasisLabel,
    pub y: BasisLabel,
}

/// Every proper, non-trivial subalgebra generated by a pair of axes `a_i`,
/// over all nine types, and the distinct `(sub, parent)` type pairs.
pub fn inclusion_map() -> (Vec<Inclusion>, BTreeSet<(AlgebraType, AlgebraType)>) {
    let mut found = Vec::new();
    let mut pairs = BTreeSet::new();
    for parent in AlgebraType::ALL {
        let t = algebra_table(parent).expect("dihedral tables complete");
        let axes = t.axes();
        for (k, &x) in axes.iter().enumerate() {
            for &y in &axes[k + 1..] {
                let sub = subalgebra_type(&t, x, y).expect("dihedral subalgebra");
                if sub != parent && sub != AlgebraType::T1A {
                    pairs.insert((sub, parent));
                    found.push(Inclusion { parent, sub, x: t.basis()[x], y: t.basis()[y] });
                }
            }
        }
    }
    (found, pairs)
}
