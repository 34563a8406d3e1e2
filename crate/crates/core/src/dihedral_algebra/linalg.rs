//! Exact linear algebra over the rationals. Matrices are lists of rows;
//! pivots are the first non-zero entry in a column.

use num_traits::{One, Zero};

use super::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(u: &[Rational], v: &[Rational]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Rational], v: &[Rational]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vector {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = m.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// A basis of `{x : m x = 0}`.
pub fn kernel(m: &Matrix, cols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = zero_vector(cols);
            x[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -r[row][f].clone();
            }
            x
        })
        .collect()
}

/// Coordinates of `v` in terms of `basis` (a list of independent vectors),
/// if `v` lies in their span.
pub fn coordinates(basis: &[Vector], v: &[Rational]) -> Option<Vector> {
    let k = basis.len();
    let n = v.len();
    // Augmented system: columns are the basis vectors, last column is v.
    let m: Matrix = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(std::iter::once(v[i].clone())).collect())
        .collect();
    let (r, pivots) = rref(&m);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = zero_vector(k);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[row][k].clone();
    }
    Some(x)
}

pub fn in_span(basis: &[Vector], v: &[Rational]) -> bool {
    coordinates(basis, v).is_some()
}

/// Reduces a spanning list to a basis in echelon form.
pub fn row_basis(vectors: &[Vector]) -> Vec<Vector> {
    let (r, pivots) = rref(&vectors.to_vec());
    r.into_iter().take(pivots.len()).collect()
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut m = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Rational::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        let pivot = m[c].clone();
        for row in &mut m[c + 1..n] {
            if !row[c].is_zero() {
                let f = &row[c] * &inv;
                for (x, p) in row[c..n].iter_mut().zip(&pivot[c..n]) {
                    *x -= &f * p;
                }
            }
        }
    }
    det
}

/// Determinants of the leading `k x k` blocks, `k = 1..=n`.
pub fn leading_minors(m: &Matrix) -> Vec<Rational> {
    (1..=m.len())
        .map(|k| determinant(&m[..k].iter().map(|row| row[..k].to_vec()).collect()))
        .collect()
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m.iter().enumerate().map(|(i, row)| row.iter().cloned().chain(unit_vector(n, i)).collect()).collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n)
            .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(|x| q(x, 1)).collect()).collect())
    }

    #[test]
    fn determinant_and_inverse() {
        let m = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]];
        assert_eq!(determinant(&m), q(1, 1));
        assert_eq!(inverse(&m).unwrap(), vec![vec![q(1, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]]);
        assert_eq!(leading_minors(&m), vec![q(2, 1), q(1, 1)]);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = vec![vec![q(1, 1), q(2, 1), q(3, 1)]];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(is_zero(&mat_vec(&m, &v)));
        }
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated_and_complements_rank(m in small_matrix(4)) {
            let k = kernel(&m, 4);
            prop_assert_eq!(k.len() + rank(&m), 4);
            for v in &k {
                prop_assert!(is_zero(&mat_vec(&m, v)));
            }
        }

        #[test]
        fn inverse_exists_iff_nonzero_determinant(m in small_matrix(3)) {
            match inverse(&m) {
                Some(inv) => prop_assert_eq!(mat_mul(&m, &inv), identity(3)),
                None => prop_assert!(determinant(&m).is_zero()),
            }
        }
    }
}
