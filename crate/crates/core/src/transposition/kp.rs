//! The classes `K_p`: minimal 3-generated groups in which every product of
//! two members of `D` has order dividing an odd prime `p`.

use serde::Serialize;

use super::TranspositionSystem;
use crate::permgroup::Subgroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KpReport {
    pub p: u32,
    pub three_generated: bool,
    pub products_divide_p: bool,
    pub minimal: bool,
}

impl KpReport {
    pub fn is_member(&self) -> bool {
        self.three_generated && self.products_divide_p && self.minimal
    }
}

/// Checks the three defining conditions of `K_p` exhaustively.
pub fn kp_membership(s: &TranspositionSystem<'_>, p: u32) -> KpReport {
    let g = s.group();
    let d = s.d();
    let products_divide_p = d
        .iter()
        .enumerate()
        .all(|(i, &x)| d[i + 1..].iter().all(|&y| p.is_multiple_of(g.element_order(g.mul(x, y)))));
    let (three_generated, minimal) = match s.is_minimal_3generated() {
        Ok(r) => (true, r.is_minimal()),
        Err(_) => (false, false),
    };
    KpReport { p, three_generated, products_divide_p, minimal }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OddCoreKind {
    Trivial,
    Cyclic { p: u64 },
    ElementaryAbelian { p: u64 },
    Extraspecial { p: u64, exponent: u32 },
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCore {
    pub order: usize,
    pub kind: OddCoreKind,
    /// `G` is the split extension of `O(G)` by `<a>` for a member `a` of `D`.
    pub split_by_involution: bool,
    #[serde(skip)]
    pub subgroup: Subgroup,
}

/// The prime `p` with `n = p^e`, if any.
fn prime_power(n: usize) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let n = n as u64;
    let p = (2..=n).find(|q| n.is_multiple_of(*q))?;
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// Computes `O(G)`, the largest normal subgroup of odd order, and describes
/// its isomorphism type.
pub fn odd_core_structure(s: &TranspositionSystem<'_>) -> OddCore {
    let g = s.group();
    let core = g
        .normal_subgroups()
        .into_iter()
        .filter(|n| n.order() % 2 == 1)
        .max_by_key(Subgroup::order)
        .expect("the trivial subgroup is normal");
    let order = core.order();
    let split_by_involution = match s.d().first() {
        Some(&a) => 2 * order == g.order() && !core.contains(a),
        None => g.order() == 1,
    };
    let exponent = core.elements().iter().map(|&x| g.element_order(x)).max().unwrap_or(1);
    let kind = match prime_power(order) {
        None => {
            if order == 1 {
                OddCoreKind::Trivial
            } else {
                OddCoreKind::Other
            }
        }
        Some((p, 1)) => OddCoreKind::Cyclic { p },
        Some((p, 2)) if exponent as u64 == p => OddCoreKind::ElementaryAbelian { p },
        Some((p, 3)) => {
            let center = g.centralizer_in(core.elements(), &core);
            let derived = g.derived_of(&core);
            if center.order() as u64 == p && derived == center {
                OddCoreKind::Extraspecial { p, exponent }
            } else {
                OddCoreKind::Other
            }
        }
        Some(_) => OddCoreKind::Other,
    };
    OddCore { order, kind, split_by_involution, subgroup: core }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalogue::{dihedral_group, lookup};
    use crate::permgroup::FiniteGroup;
    use crate::transposition::verify_system;

    fn all_involutions(g: &FiniteGroup) -> Vec<u32> {
        g.elements().filter(|&x| g.element_order(x) == 2).collect()
    }

    #[test]
    fn membership_examples() {
        let g = lookup("3^2:2").unwrap();
        assert!(kp_membership(&verify_system(g, &all_involutions(g)).unwrap(), 3).is_member());
        let g = lookup("D10").unwrap();
        assert!(kp_membership(&verify_system(g, &all_involutions(g)).unwrap(), 5).is_member());
        let g = lookup("S4").unwrap();
        let r = kp_membership(&verify_system(g, &all_involutions(g)).unwrap(), 3);
        assert!(!r.products_divide_p && !r.is_member());
    }

    #[test]
    fn odd_cores() {
        let check = |g: &FiniteGroup, kind: OddCoreKind, order: usize| {
            let core = odd_core_structure(&verify_system(g, &all_involutions(g)).unwrap());
            assert_eq!((core.kind, core.order), (kind, order));
            assert!(core.split_by_involution);
        };
        check(lookup("5^(1+2):2").unwrap(), OddCoreKind::Extraspecial { p: 5, exponent: 5 }, 125);
        check(lookup("3^(1+2):2").unwrap(), OddCoreKind::Extraspecial { p: 3, exponent: 3 }, 27);
        check(lookup("5^2:2").unwrap(), OddCoreKind::ElementaryAbelian { p: 5 }, 25);
        check(&dihedral_group(5), OddCoreKind::Cyclic { p: 5 }, 5);
        check(&dihedral_group(1), OddCoreKind::Trivial, 1);
    }

    #[test]
    fn kp_products_are_p_or_one() {
        for name in ["S3", "D10", "3^2:2", "5^2:2", "3^(1+2):2", "5^(1+2):2", "(5^2:3):2", "S4", "A5"] {
            let g = lookup(name).unwrap();
            let s = verify_system(g, &all_involutions(g)).unwrap();
            for p in [3, 5] {
                if !kp_membership(&s, p).is_member() {
                    continue;
                }
                for &x in s.d() {
                    for &y in s.d() {
                        assert!([1, p].contains(&g.element_order(g.mul(x, y))), "{name}");
                    }
                }
                let core = odd_core_structure(&s);
                let (q, e) = prime_power(core.order).unwrap();
                assert!(q == p as u64 && e <= 3, "{name}");
            }
        }
    }
}
