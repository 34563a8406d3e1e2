//! The nine dihedral Majorana algebras `1A`..`6A` over the rationals.
//!
//! Each algebra is built from one printed product or inner product per orbit
//! of basis pairs and completed under the automorphisms `tau(a0)`,
//! `tau(a1)` and the flip `a0 <-> a1`, which act on the axes `a_i` as
//! `i -> -i`, `i -> 2 - i` and `i -> 1 - i` and fix every other basis vector.
//! Completion fails if two derivations of the same entry disagree or if an
//! entry is left undetermined.

mod audit;
mod eigen;
pub mod linalg;
mod norton;
mod seeds;
mod subalgebra;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use linalg::{Matrix, Vector};

pub use audit::{
    audit_type, dihedral_audit, inclusion_audit, printed_eigenspace_dimensions, sigma_resurrection_holds, Check,
    DihedralAudit, InclusionAudit, TypeAudit, DEFAULT_SEED, NORTON_TRIALS,
};
pub use eigen::{
    check_automorphism, eigen_decomposition, printed_eigenvectors, sigma_map, sigma_on_plus, tau_map, EigenDecomposition,
    EigenError, PrintedEigenvector, SigmaMap, EIGENVALUES,
};
pub use norton::{norton_sample, NortonReport, NortonViolation, Lcg};
pub use subalgebra::{inclusion_map, subalgebra_type, SubalgebraError};

pub type Rational = BigRational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraType {
    T1A,
    T2A,
    T2B,
    T3A,
    T3C,
    T4A,
    T4B,
    T5A,
    T6A,
}

impl AlgebraType {
    pub const ALL: [AlgebraType; 9] = [
        AlgebraType::T1A,
        AlgebraType::T2A,
        AlgebraType::T2B,
        AlgebraType::T3A,
        AlgebraType::T3C,
        AlgebraType::T4A,
        AlgebraType::T4B,
        AlgebraType::T5A,
        AlgebraType::T6A,
    ];

    /// `N` in `NX`: the axes `a_i` are indexed modulo `N`.
    pub fn n(self) -> i32 {
        use AlgebraType::*;
        match self {
            T1A => 1,
            T2A | T2B => 2,
            T3A | T3C => 3,
            T4A | T4B => 4,
            T5A => 5,
            T6A => 6,
        }
    }

    pub fn dimension(self) -> usize {
        use AlgebraType::*;
        match self {
            T1A => 1,
            T2A => 3,
            T2B => 2,
            T3A => 4,
            T3C => 3,
            T4A | T4B => 5,
            T5A => 6,
            T6A => 8,
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format!("{self:?}");
        f.write_str(&s[1..])
    }
}

impl Serialize for AlgebraType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown algebra type `{0}`; expected one of 1A 2A 2B 3A 3C 4A 4B 5A 6A")]
pub struct UnknownType(pub String);

impl FromStr for AlgebraType {
    type Err = UnknownType;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownType(s.to_string()))
    }
}

/// Basis vectors other than the axes `a_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extra {
    ARho,
    ARho2,
    ARho3,
    URho,
    URho2,
    VRho,
    WRho,
}

impl Extra {
    const NAMES: [(Extra, &'static str); 7] = [
        (Extra::ARho, "a_rho"),
        (Extra::ARho2, "a_rho2"),
        (Extra::ARho3, "a_rho3"),
        (Extra::URho, "u_rho"),
        (Extra::URho2, "u_rho2"),
        (Extra::VRho, "v_rho"),
        (Extra::WRho, "w_rho"),
    ];

    /// `a_rho`, `a_rho2` and `a_rho3` are themselves axes.
    pub fn is_axis(self) -> bool {
        matches!(self, Extra::ARho | Extra::ARho2 | Extra::ARho3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    Axis(i32),
    Extra(Extra),
}

impl BasisLabel {
    /// Idempotent of norm 1.
    pub fn is_axis(self) -> bool {
        match self {
            BasisLabel::Axis(_) => true,
            BasisLabel::Extra(e) => e.is_axis(),
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Axis(i) => write!(f, "a{i}"),
            BasisLabel::Extra(e) => {
                f.write_str(Extra::NAMES.iter().find(|(x, _)| x == e).map(|(_, n)| *n).unwrap_or("?"))
            }
        }
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("inconsistent closure for {what}: {left} vs {right}")]
    Inconsistent { what: String, left: String, right: String },
    #[error("incomplete closure: {0} is undetermined")]
    Incomplete(String),
}

impl FromStr for BasisLabel {
    type Err = TableError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((e, _)) = Extra::NAMES.iter().find(|(_, n)| *n == s) {
            return Ok(BasisLabel::Extra(*e));
        }
        s.strip_prefix('a')
            .and_then(|i| i.parse::<i32>().ok())
            .map(BasisLabel::Axis)
            .ok_or_else(|| TableError::UnknownLabel(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("vector of length {got} does not match algebra dimension {expected}")]
pub struct DimensionMismatch {
    pub expected: usize,
    pub got: usize,
}

/// A dihedral algebra with all products and inner products of basis vectors.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    ty: AlgebraType,
    basis: Vec<BasisLabel>,
    products: Vec<Vec<Vector>>,
    gram: Matrix,
    /// Basis permutations induced by `tau(a0)`, `tau(a1)` and the flip.
    action: [Vec<usize>; 3],
}

/// Builds and completes the table for `ty`.
pub fn algebra_table(ty: AlgebraType) -> Result<AlgebraTable, TableError> {
    complete(ty, &seeds::seeds(ty))
}

fn complete(ty: AlgebraType, seeds: &seeds::Seeds) -> Result<AlgebraTable, TableError> {
    let basis: Vec<BasisLabel> = seeds.basis.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let dim = basis.len();
    let n = ty.n();
    let index = |l: &str| -> Result<usize, TableError> {
        let label: BasisLabel = l.parse()?;
        find_label(&basis, n, label).ok_or_else(|| TableError::UnknownLabel(l.to_string()))
    };
    let axis_map = |f: fn(i32) -> i32| -> Vec<usize> {
        basis
            .iter()
            .map(|&l| match l {
                BasisLabel::Axis(i) => find_label(&basis, n, BasisLabel::Axis(f(i))).expect("axis orbit in basis"),
                extra => find_label(&basis, n, extra).unwrap(),
            })
            .collect()
    };
    let action = [axis_map(|i| -i), axis_map(|i| 2 - i), axis_map(|i| 1 - i)];
    let group = permutation_group(&action);

    let mut products: Vec<Vec<Option<Vector>>> = vec![vec![None; dim]; dim];
    let mut gram: Vec<Vec<Option<Rational>>> = vec![vec![None; dim]; dim];
    let mut product_seeds: Vec<(usize, usize, Vector)> = Vec::new();
    let mut gram_seeds: Vec<(usize, usize, Rational)> = Vec::new();
    for (i, l) in basis.iter().enumerate() {
        if l.is_axis() {
            product_seeds.push((i, i, linalg::unit_vector(dim, i)));
            gram_seeds.push((i, i, Rational::one()));
        }
    }
    for (x, y, terms) in &seeds.products {
        let mut v = linalg::zero_vector(dim);
        for (l, c) in terms {
            v[index(l)?] += c;
        }
        product_seeds.push((index(x)?, index(y)?, v));
    }
    for (x, y, c) in &seeds.gram {
        gram_seeds.push((index(x)?, index(y)?, c.clone()));
    }

    let show = |v: &Vector| format_combination(&basis, v);
    for (i, j, v) in &product_seeds {
        for g in &group {
            let (gi, gj) = (g[*i], g[*j]);
            let image = permute(g, v);
            for (a, b) in [(gi, gj), (gj, gi)] {
                match &products[a][b] {
                    Some(old) if *old != image => {
                        return Err(TableError::Inconsistent {
                            what: format!("{} * {}", basis[a], basis[b]),
                            left: show(old),
                            right: show(&image),
                        })
                    }
                    _ => products[a][b] = Some(image.clone()),
                }
            }
        }
    }
    for (i, j, c) in &gram_seeds {
        for g in &group {
            let (gi, gj) = (g[*i], g[*j]);
            for (a, b) in [(gi, gj), (gj, gi)] {
                match &gram[a][b] {
                    Some(old) if old != c => {
                        return Err(TableError::Inconsistent {
                            what: format!("({}, {})", basis[a], basis[b]),
                            left: format_rational(old),
                            right: format_rational(c),
                        })
                    }
                    _ => gram[a][b] = Some(c.clone()),
                }
            }
        }
    }
    let mut full_products = Vec::with_capacity(dim);
    for (a, row) in products.into_iter().enumerate() {
        let mut out = Vec::with_capacity(dim);
        for (b, v) in row.into_iter().enumerate() {
            out.push(v.ok_or_else(|| TableError::Incomplete(format!("{} * {}", basis[a], basis[b])))?);
        }
        full_products.push(out);
    }
    let mut full_gram = Vec::with_capacity(dim);
    for (a, row) in gram.into_iter().enumerate() {
        let mut out = Vec::with_capacity(dim);
        for (b, v) in row.into_iter().enumerate() {
            out.push(v.ok_or_else(|| TableError::Incomplete(format!("({}, {})", basis[a], basis[b])))?);
        }
        full_gram.push(out);
    }
    Ok(AlgebraTable { ty, basis, products: full_products, gram: full_gram, action })
}

/// Position of `label` in `basis`, reading axis indices modulo `n`.
fn find_label(basis: &[BasisLabel], n: i32, label: BasisLabel) -> Option<usize> {
    basis.iter().position(|&b| match (b, label) {
        (BasisLabel::Axis(i), BasisLabel::Axis(j)) => (i - j).rem_euclid(n) == 0,
        _ => b == label,
    })
}

/// All products of the generating permutations, identity first.
fn permutation_group(gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..gens[0].len()).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let h: Vec<usize> = out[k].iter().map(|&x| g[x]).collect();
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
        k += 1;
    }
    out
}

/// Image of a vector under the basis permutation `g` (basis `i` to `g[i]`).
fn permute(g: &[usize], v: &[Rational]) -> Vector {
    let mut out = linalg::zero_vector(v.len());
    for (i, c) in v.iter().enumerate() {
        out[g[i]] = c.clone();
    }
    out
}

/// `c1 a0 + c2 a1 + ...` with zero terms omitted.
pub fn format_combination(basis: &[BasisLabel], v: &[Rational]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.to_string() } else { format!("{c}*{l}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl AlgebraTable {
    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i][j]
    }

    /// Basis permutations induced by `tau(a0)`, `tau(a1)` and the flip.
    pub fn action(&self) -> &[Vec<usize>; 3] {
        &self.action
    }

    /// All basis permutations generated by [`Self::action`].
    pub fn symmetry_group(&self) -> Vec<Vec<usize>> {
        permutation_group(&self.action)
    }

    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        find_label(&self.basis, self.ty.n(), label)
    }

    /// Indices of the axes `a_i`.
    pub fn axes(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| matches!(self.basis[i], BasisLabel::Axis(_))).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        linalg::unit_vector(self.dim(), i)
    }

    /// A vector from `(label, coefficient)` terms.
    pub fn vector(&self, terms: &[(&str, Rational)]) -> Result<Vector, TableError> {
        let mut v = linalg::zero_vector(self.dim());
        for (l, c) in terms {
            let label: BasisLabel = l.parse()?;
            let i = self.index_of(label).ok_or_else(|| TableError::UnknownLabel(l.to_string()))?;
            v[i] += c;
        }
        Ok(v)
    }

    fn check_dim(&self, v: &[Rational]) -> Result<(), DimensionMismatch> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(DimensionMismatch { expected: self.dim(), got: v.len() })
        }
    }

    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Result<Vector, DimensionMismatch> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let mut out = linalg::zero_vector(self.dim());
        for (i, ui) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ui * vj;
                for (k, p) in self.products[i][j].iter().enumerate() {
                    if !p.is_zero() {
                        out[k] += &c * p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Result<Rational, DimensionMismatch> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(linalg::mat_vec(&self.gram, v).iter().zip(u).map(|(a, b)| a * b).sum())
    }

    /// The adjoint matrix of `v`: column `j` is `v * b_j`.
    pub fn adjoint(&self, v: &[Rational]) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim()).map(|j| self.multiply(v, &self.basis_vector(j)).expect("matching dimension")).collect();
        linalg::transpose(&cols)
    }

    pub fn format_vector(&self, v: &[Rational]) -> String {
        format_combination(&self.basis, v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct M1Violation {
    pub u: BasisLabel,
    pub v: BasisLabel,
    pub w: BasisLabel,
    /// `(u, v w)`
    pub lhs: String,
    /// `(u v, w)`
    pub rhs: String,
}

/// Checks `(u, v w) = (u v, w)` on every ordered triple of basis vectors.
pub fn check_m1(t: &AlgebraTable) -> Vec<M1Violation> {
    let n = t.dim();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let lhs: Rational = t.gram[u].iter().zip(&t.products[v][w]).map(|(a, b)| a * b).sum();
                let rhs: Rational = t.products[u][v].iter().zip(&t.gram).map(|(c, row)| c * &row[w]).sum();
                if lhs != rhs {
                    out.push(M1Violation {
                        u: t.basis[u],
                        v: t.basis[v],
                        w: t.basis[w],
                        lhs: format_rational(&lhs),
                        rhs: format_rational(&rhs),
                    });
                }
            }
        }
    }
    out
}

/// All leading principal minors of the Gram matrix are positive.
pub fn gram_positive_definite(t: &AlgebraTable) -> bool {
    linalg::leading_minors(&t.gram).iter().all(Signed::is_positive)
}

/// Serializable form: upper-triangle products and the full Gram matrix.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraDump {
    pub schema: u32,
    #[serde(rename = "type")]
    pub ty: AlgebraType,
    pub basis: Vec<BasisLabel>,
    pub products: Vec<(usize, usize, Vec<String>)>,
    pub gram: Vec<Vec<String>>,
    pub gram_determinant: String,
    pub m1_violations: usize,
}

pub fn dump(t: &AlgebraTable) -> AlgebraDump {
    let fmt_vec = |v: &Vector| v.iter().map(format_rational).collect::<Vec<_>>();
    let mut products = Vec::new();
    for i in 0..t.dim() {
        for j in i..t.dim() {
            products.push((i, j, fmt_vec(&t.products[i][j])));
        }
    }
    AlgebraDump {
        schema: 1,
        ty: t.ty,
        basis: t.basis.clone(),
        products,
        gram: t.gram.iter().map(fmt_vec).collect(),
        gram_determinant: format_rational(&linalg::determinant(&t.gram)),
        m1_violations: check_m1(t).len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> AlgebraTable {
        algebra_table(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn all_types_complete_with_expected_dimensions() {
        for ty in AlgebraType::ALL {
            let t = algebra_table(ty).unwrap();
            assert_eq!(t.dim(), ty.dimension(), "{ty}");
            for i in 0..t.dim() {
                for j in 0..t.dim() {
                    assert_eq!(t.product(i, j), t.product(j, i));
                    assert_eq!(t.gram()[i][j], t.gram()[j][i]);
                }
                if t.basis()[i].is_axis() {
                    assert_eq!(t.product(i, i), &t.basis_vector(i));
                    assert_eq!(t.gram()[i][i], q(1, 1));
                }
            }
            assert!(check_m1(&t).is_empty(), "{ty}: {:?}", check_m1(&t).first());
            assert!(gram_positive_definite(&t), "{ty}");
        }
    }

    #[test]
    fn printed_values() {
        let t = table("2B");
        assert!(linalg::is_zero(t.product(0, 1)));
        assert_eq!(t.gram()[0][1], q(0, 1));
        let t = table("1A");
        assert_eq!(t.product(0, 0), &vec![q(1, 1)]);
        let t = table("2A");
        let want = t.vector(&[("a0", q(1, 8)), ("a1", q(1, 8)), ("a_rho", q(-1, 8))]).unwrap();
        assert_eq!(t.multiply(&t.basis_vector(0), &t.basis_vector(1)).unwrap(), want);
        let t = table("6A");
        let idx = |s: &str| t.index_of(s.parse().unwrap()).unwrap();
        assert_eq!(t.gram()[idx("a0")][idx("a2")], q(13, 256));
        assert!(linalg::is_zero(t.product(idx("a_rho3"), idx("u_rho2"))));
    }

    #[test]
    fn three_a_product_by_symmetry() {
        let t = table("3A");
        let idx = |s: &str| t.index_of(s.parse().unwrap()).unwrap();
        let want = t
            .vector(&[("a0", q(2, 32)), ("a-1", q(2, 32)), ("a1", q(1, 32)), ("u_rho", q(-135, 2048))])
            .unwrap();
        assert_eq!(t.product(idx("a0"), idx("a-1")), &want);
    }

    #[test]
    fn m1_sample_value_for_2a() {
        let t = table("2A");
        let (a0, a1, ar) = (t.basis_vector(0), t.basis_vector(1), t.basis_vector(2));
        let lhs = t.inner(&a0, &t.multiply(&a1, &ar).unwrap()).unwrap();
        let rhs = t.inner(&t.multiply(&a0, &a1).unwrap(), &ar).unwrap();
        assert_eq!(lhs, q(-3, 32));
        assert_eq!(rhs, q(-3, 32));
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let mut t = table("3C");
        t.gram[1][2] = q(1, 32);
        t.gram[2][1] = q(1, 32);
        assert!(!check_m1(&t).is_empty());
    }

    #[test]
    fn inconsistent_seed_is_rejected() {
        let mut s = seeds::seeds(AlgebraType::T5A);
        // Flipping the sign convention for w_rho in a0.a2 breaks the closure.
        s.products[1].2.last_mut().unwrap().1 = q(1, 1);
        let t = complete(AlgebraType::T5A, &s).unwrap();
        assert!(!check_m1(&t).is_empty());
        let mut s = seeds::seeds(AlgebraType::T2A);
        s.gram.push(("a1", "a0", q(1, 4)));
        assert!(matches!(complete(AlgebraType::T2A, &s), Err(TableError::Inconsistent { .. })));
        let mut s = seeds::seeds(AlgebraType::T4A);
        s.products.pop();
        assert!(matches!(complete(AlgebraType::T4A, &s), Err(TableError::Incomplete(_))));
    }

    #[test]
    fn multiply_rejects_wrong_dimension() {
        let t = table("2A");
        assert!(t.multiply(&[q(1, 1)], &t.basis_vector(0)).is_err());
        let zero = linalg::zero_vector(3);
        assert!(linalg::is_zero(&t.multiply(&t.basis_vector(2), &zero).unwrap()));
    }

    #[test]
    fn type_names_round_trip() {
        for ty in AlgebraType::ALL {
            assert_eq!(ty.to_string().parse::<AlgebraType>().unwrap(), ty);
        }
        assert!("7A".parse::<AlgebraType>().is_err());
    }
}
