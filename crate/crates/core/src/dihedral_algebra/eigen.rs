//! Eigenspaces of axes and the maps `tau(a)` and `sigma(a)` built from them.


use super::linalg::{self, Matrix, Vector};
use super::{q, AlgebraTable, AlgebraType, BasisLabel, Rational};

/// Eigenvalues of an axis, in the order used for the eigenspaces.
pub const EIGENVALUES: [(i64, i64); 4] = [(1, 1), (0, 1), (1, 4), (1, 32)];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EigenError {
    #[error("{0} is not an axis")]
    NotAxis(BasisLabel),
    #[error("adjoint of {axis} is not diagonalizable with eigenvalues 1, 0, 1/4, 1/32 (eigenspaces span {found} of {dim} dimensions)")]
    NotDiagonalizable { axis: BasisLabel, found: usize, dim: usize },
    #[error("the 1-eigenspace of {0} is not spanned by the axis")]
    OneSpace(BasisLabel),
    #[error("printed {eigenvalue}-eigenvector {vector} is not in the computed eigenspace")]
    PrintedMismatch { eigenvalue: String, vector: String },
    #[error("sigma is only defined when the 1/32-eigenspace is zero")]
    SigmaUndefined,
}

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub axis: BasisLabel,
    pub axis_index: usize,
    /// Bases for the eigenvalues of [`EIGENVALUES`], in that order.
    pub spaces: [Vec<Vector>; 4],
    /// Number of printed eigenvectors checked against the spaces.
    pub printed_checked: usize,
}

impl EigenDecomposition {
    pub fn dimensions(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|k| self.spaces[k].len())
    }
}

fn eigenvalue(k: usize) -> Rational {
    q(EIGENVALUES[k].0, EIGENVALUES[k].1)
}

/// A published eigenvector for `a0`.
#[derive(Clone, Debug)]
pub struct PrintedEigenvector {
    pub eigenvalue: Rational,
    /// The vector used in checks.
    pub vector: Vector,
    /// The literal printed vector, when it differs from `vector` by a sign
    /// inside one bracket: the printed `(a_i - a_-i)` is read as
    /// `(a_i + a_-i)`, as required for a vector fixed by `tau(a0)`.
    pub as_printed: Option<Vector>,
}

/// Eigenvectors for `a0` as published.
pub fn printed_eigenvectors(t: &AlgebraTable) -> Vec<PrintedEigenvector> {
    let mut out: Vec<PrintedEigenvector> = printed_raw(t)
        .into_iter()
        .map(|(eigenvalue, vector)| PrintedEigenvector { eigenvalue, vector, as_printed: None })
        .collect();
    // The first 0-eigenvector of 5A and of 6A carry the bracket sign slip.
    let flip = match t.algebra_type() {
        AlgebraType::T5A => Some("a-2"),
        AlgebraType::T6A => Some("a-1"),
        _ => None,
    };
    if let Some(label) = flip {
        let i = t.index_of(label.parse().unwrap()).unwrap();
        let mut printed = out[0].vector.clone();
        printed[i] = -printed[i].clone();
        out[0].as_printed = Some(printed);
    }
    out
}

fn printed_raw(t: &AlgebraTable) -> Vec<(Rational, Vector)> {
    use AlgebraType::*;
    let v = |terms: &[(&str, Rational)]| t.vector(terms).expect("labels of this type");
    let r = q;
    let quarter = r(1, 4);
    let zero = r(0, 1);
    let tiny = r(1, 32);
    match t.algebra_type() {
        T1A => vec![],
        T2A => vec![
            (zero, v(&[("a1", r(1, 1)), ("a_rho", r(1, 1)), ("a0", r(-1, 4))])),
            (quarter, v(&[("a1", r(1, 1)), ("a_rho", r(-1, 1))])),
        ],
        T2B => vec![(zero, v(&[("a1", r(1, 1))]))],
        T3A => vec![
            (zero, v(&[("u_rho", r(1, 1)), ("a0", r(-10, 27)), ("a1", r(32, 27)), ("a-1", r(32, 27))])),
            (quarter, v(&[("u_rho", r(1, 1)), ("a0", r(-8, 45)), ("a1", r(-32, 45)), ("a-1", r(-32, 45))])),
            (tiny, v(&[("a1", r(1, 1)), ("a-1", r(-1, 1))])),
        ],
        T3C => vec![
            (zero, v(&[("a1", r(1, 1)), ("a-1", r(1, 1)), ("a0", r(-1, 32))])),
            (tiny, v(&[("a1", r(1, 1)), ("a-1", r(-1, 1))])),
        ],
        T4A => vec![
            (zero.clone(), v(&[("v_rho", r(1, 1)), ("a0", r(-1, 2)), ("a1", r(2, 1)), ("a-1", r(2, 1))])),
            (zero, v(&[("a2", r(1, 1))])),
            (quarter, v(&[("v_rho", r(1, 1)), ("a0", r(-1, 3)), ("a1", r(-2, 3)), ("a-1", r(-2, 3)), ("a2", r(-1, 3))])),
            (tiny, v(&[("a1", r(1, 1)), ("a-1", r(-1, 1))])),
        ],
        T4B => vec![
            (
                zero.clone(),
                v(&[("a1", r(1, 1)), ("a-1", r(1, 1)), ("a0", r(-1, 32)), ("a_rho2", r(-1, 8)), ("a2", r(1, 8))]),
            ),
            (zero, v(&[("a2", r(1, 1)), ("a_rho2", r(1, 1)), ("a0", r(-1, 4))])),
            (quarter, v(&[("a2", r(1, 1)), ("a_rho2", r(-1, 1))])),
            (tiny, v(&[("a1", r(1, 1)), ("a-1", r(-1, 1))])),
        ],
        T5A => vec![
            (
                zero.clone(),
                v(&[
                    ("w_rho", r(1, 1)),
                    ("a0", r(3, 512)),
                    ("a1", r(-15, 128)),
                    ("a-1", r(-15, 128)),
                    ("a2", r(-1, 128)),
                    ("a-2", r(-1, 128)),
                ]),
            ),
            (
                zero,
                v(&[
                    ("w_rho", r(1, 1)),
                    ("a0", r(-3, 512)),
                    ("a1", r(1, 128)),
                    ("a-1", r(1, 128)),
                    ("a2", r(15, 128)),
                    ("a-2", r(15, 128)),
                ]),
            ),
            (
                quarter,
                v(&[("w_rho", r(1, 1)), ("a1", r(1, 128)), ("a-1", r(1, 128)), ("a2", r(-1, 128)), ("a-2", r(-1, 128))]),
            ),
            (tiny.clone(), v(&[("a1", r(1, 1)), ("a-1", r(-1, 1))])),
            (tiny, v(&[("a2", r(1, 1)), ("a-2", r(-1, 1))])),
        ],
        T6A => vec![
            (
                zero.clone(),
                v(&[
                    ("u_rho2", r(1, 1)),
                    ("a0", r(2, 45)),
                    ("a1", r(-256, 45)),
                    ("a-1", r(-256, 45)),
                    ("a2", r(-32, 45)),
                    ("a-2", r(-32, 45)),
                    ("a3", r(-32, 45)),
                    ("a_rho3", r(32, 45)),
                ]),
            ),
            (zero.clone(), v(&[("a3", r(1, 1)), ("a_rho3", r(1, 1)), ("a0", r(-1, 4))])),
            (zero, v(&[("u_rho2", r(1, 1)), ("a0", r(-10, 27)), ("a2", r(32, 27)), ("a-2", r(32, 27))])),
            (
                quarter.clone(),
                v(&[
                    ("u_rho2", r(1, 1)),
                    ("a0", r(-8, 45)),
                    ("a2", r(-32, 45)),
                    ("a-2", r(-32, 45)),
                    ("a3", r(-32, 45)),
                    ("a_rho3", r(32, 45)),
                ]),
            ),
            (quarter, v(&[("a3", r(1, 1)), ("a_rho3", r(-1, 1))])),
            (tiny.clone(), v(&[("a1", r(1, 1)), ("a-1", r(-1, 1))])),
            (tiny, v(&[("a2", r(1, 1)), ("a-2", r(-1, 1))])),
        ],
    }
}

/// Exact eigenspaces of the adjoint of the axis at `axis_index`. For `a0`
/// the printed eigenvectors are also checked.
pub fn eigen_decomposition(t: &AlgebraTable, axis_index: usize) -> Result<EigenDecomposition, EigenError> {
    let axis = t.basis()[axis_index];
    if !axis.is_axis() {
        return Err(EigenError::NotAxis(axis));
    }
    let n = t.dim();
    let ad = t.adjoint(&t.basis_vector(axis_index));
    let spaces = [0, 1, 2, 3].map(|k| {
        let mu = eigenvalue(k);
        let m: Matrix = ad
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(j, x)| if i == j { x - &mu } else { x.clone() }).collect())
            .collect();
        linalg::kernel(&m, n)
    });
    let found: usize = spaces.iter().map(Vec::len).sum();
    if found != n {
        return Err(EigenError::NotDiagonalizable { axis, found, dim: n });
    }
    if spaces[0].len() != 1 || !linalg::in_span(&spaces[0], &t.basis_vector(axis_index)) {
        return Err(EigenError::OneSpace(axis));
    }
    let mut printed_checked = 0;
    if axis == BasisLabel::Axis(0) {
        for PrintedEigenvector { eigenvalue: mu, vector: v, .. } in printed_eigenvectors(t) {
            let k = (0..4).find(|&k| eigenvalue(k) == mu).expect("printed eigenvalue is standard");
            if !linalg::in_span(&spaces[k], &v) {
                return Err(EigenError::PrintedMismatch {
                    eigenvalue: super::format_rational(&mu),
                    vector: t.format_vector(&v),
                });
            }
            printed_checked += 1;
        }
    }
    Ok(EigenDecomposition { axis, axis_index, spaces, printed_checked })
}

/// The linear map acting as `signs[k]` on eigenspace `k`, as a matrix on
/// basis coordinates.
fn signed_projection(t: &AlgebraTable, d: &EigenDecomposition, signs: [i64; 4]) -> Matrix {
    let mut cols: Vec<Vector> = Vec::with_capacity(t.dim());
    let mut images: Vec<Vector> = Vec::with_capacity(t.dim());
    for (space, &sign) in d.spaces.iter().zip(&signs) {
        for v in space {
            cols.push(v.clone());
            images.push(linalg::scale(&q(sign, 1), v));
        }
    }
    let p = linalg::transpose(&cols);
    let p_inv = linalg::inverse(&p).expect("eigenvectors form a basis");
    linalg::mat_mul(&linalg::transpose(&images), &p_inv)
}

/// `tau(a)`: identity on the 1-, 0- and 1/4-eigenspaces, negation on the
/// 1/32-eigenspace.
pub fn tau_map(t: &AlgebraTable, axis_index: usize) -> Result<Matrix, EigenError> {
    let d = eigen_decomposition(t, axis_index)?;
    Ok(signed_projection(t, &d, [1, 1, 1, -1]))
}

/// `sigma(a)` on `V+ = V_1 + V_0 + V_1/4`: negation on the 1/4-eigenspace.
#[derive(Clone, Debug)]
pub struct SigmaMap {
    /// A basis of `V+`.
    pub domain: Vec<Vector>,
    /// A matrix agreeing with `sigma(a)` on the domain.
    pub matrix: Matrix,
}

/// `sigma(a)` as a map of the whole algebra; requires `tau(a)` to be
/// trivial, so that `V+ = V`.
pub fn sigma_map(t: &AlgebraTable, axis_index: usize) -> Result<SigmaMap, EigenError> {
    let s = sigma_on_plus(t, axis_index)?;
    if s.domain.len() != t.dim() {
        return Err(EigenError::SigmaUndefined);
    }
    Ok(s)
}

/// `sigma(a)` on `V+`, defined whatever `tau(a)` is.
pub fn sigma_on_plus(t: &AlgebraTable, axis_index: usize) -> Result<SigmaMap, EigenError> {
    let d = eigen_decomposition(t, axis_index)?;
    let domain = d.spaces[..3].concat();
    Ok(SigmaMap { domain, matrix: signed_projection(t, &d, [1, 1, -1, 1]) })
}

/// Checks that `m` preserves products and inner products of vectors in the
/// span of `domain` (whose products must stay in that span).
pub fn check_automorphism(t: &AlgebraTable, m: &Matrix, domain: &[Vector]) -> Result<(), String> {
    let apply = |v: &Vector| linalg::mat_vec(m, v);
    for x in domain {
        for y in domain {
            let xy = t.multiply(x, y).map_err(|e| e.to_string())?;
            if !linalg::in_span(domain, &xy) {
                return Err(format!("domain not closed: {} * {}", t.format_vector(x), t.format_vector(y)));
            }
            let (mx, my) = (apply(x), apply(y));
            if apply(&xy) != t.multiply(&mx, &my).map_err(|e| e.to_string())? {
                return Err(format!("product not preserved on {} * {}", t.format_vector(x), t.format_vector(y)));
            }
            if t.inner(&mx, &my).unwrap() != t.inner(x, y).unwrap() {
                return Err(format!("inner product not preserved on {}, {}", t.format_vector(x), t.format_vector(y)));
            }
        }
    }
    Ok(())
}
