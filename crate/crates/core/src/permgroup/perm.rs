use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// A permutation of `{0, .., n-1}`. Products act on the right: `p.mul(q)`
/// applies `p` first, then `q`. Points print 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a permutation of 0..{0}")]
    NotBijective(usize),
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within a cycle")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// `images[i]` is the image of point `i` (0-based).
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotBijective(n));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(PermError::OutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                used[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                if q == 0 || q > degree {
                    return Err(PermError::OutOfRange { point: q, degree });
                }
                images[p - 1] = q as u32 - 1;
            }
        }
        Ok(Perm(images))
    }

    /// Parses `(1,2,3)(4,5)` style notation; `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|i| (&r[..i], &r[i + 1..])))
                .ok_or_else(|| PermError::Syntax(text.to_string()))?;
            let body = inner.0.trim();
            if !body.is_empty() {
                let pts = body
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| PermError::Syntax(text.to_string()))?;
                cycles.push(pts);
            }
            rest = inner.1.trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate(&self, by: &Perm) -> Perm {
        by.inverse().mul(self).mul(by)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut p = self.0[start];
            while p as usize != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.0[p as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &p)| *i as u32 != p).map(|(i, _)| i as u32)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn right_action() {
        let p = Perm::parse(3, "(1,2)").unwrap();
        let q = Perm::parse(3, "(2,3)").unwrap();
        // 1 -> 2 under p, then 2 -> 3 under q.
        assert_eq!(p.mul(&q).apply(0), 2);
        assert_eq!(p.mul(&q).to_string(), "(1,3,2)");
    }

    #[test]
    fn parse_and_print() {
        let p = Perm::parse(6, "(1,2,3)(5,6)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(5,6)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
        assert!(Perm::parse(3, "(1,4)").is_err());
        assert!(Perm::parse(3, "(1,2)(2,3)").is_err());
        assert!(Perm::parse(3, "1,2").is_err());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![1, 2, 0]).is_ok());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(Perm)
    }

    proptest! {
        #[test]
        fn inverse_and_associativity(p in arb_perm(7), q in arb_perm(7), r in arb_perm(7)) {
            prop_assert!(p.mul(&p.inverse()).is_identity());
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert!(p.pow(p.order() as i64).is_identity());
        }
    }
}
