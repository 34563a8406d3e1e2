//! Printed structure constants of the dihedral algebras, one orbit
//! representative per product or inner product. Axis idempotence and unit
//! norms are added by the completion and are not listed here.

use super::{q, AlgebraType, Rational};

pub(super) type Combination = Vec<(&'static str, Rational)>;

pub(super) struct Seeds {
    pub basis: &'static [&'static str],
    pub products: Vec<(&'static str, &'static str, Combination)>,
    pub gram: Vec<(&'static str, &'static str, Rational)>,
}

fn scaled(c: Rational, terms: &[(&'static str, i64)]) -> Combination {
    terms.iter().map(|&(l, k)| (l, &c * Rational::from_integer(k.into()))).collect()
}

pub(super) fn seeds(ty: AlgebraType) -> Seeds {
    use AlgebraType::*;
    match ty {
        T1A => Seeds { basis: &["a0"], products: vec![], gram: vec![] },
        T2A => Seeds {
            basis: &["a0", "a1", "a_rho"],
            products: vec![
                ("a0", "a1", scaled(q(1, 8), &[("a0", 1), ("a1", 1), ("a_rho", -1)])),
                ("a0", "a_rho", scaled(q(1, 8), &[("a0", 1), ("a_rho", 1), ("a1", -1)])),
            ],
            // The third printed value is (a1, a_rho); a_rho is an axis of norm 1.
            gram: vec![("a0", "a1", q(1, 8)), ("a0", "a_rho", q(1, 8)), ("a1", "a_rho", q(1, 8))],
        },
        T2B => Seeds {
            basis: &["a0", "a1"],
            products: vec![("a0", "a1", vec![])],
            gram: vec![("a0", "a1", q(0, 1))],
        },
        T3A => Seeds {
            basis: &["a-1", "a0", "a1", "u_rho"],
            products: vec![
                (
                    "a0",
                    "a1",
                    [scaled(q(1, 32), &[("a0", 2), ("a1", 2), ("a-1", 1)]), vec![("u_rho", q(-135, 2048))]].concat(),
                ),
                (
                    "a0",
                    "u_rho",
                    [scaled(q(1, 9), &[("a0", 2), ("a1", -1), ("a-1", -1)]), vec![("u_rho", q(5, 32))]].concat(),
                ),
                ("u_rho", "u_rho", vec![("u_rho", q(1, 1))]),
            ],
            gram: vec![("a0", "a1", q(13, 256)), ("a0", "u_rho", q(1, 4)), ("u_rho", "u_rho", q(8, 5))],
        },
        T3C => Seeds {
            basis: &["a-1", "a0", "a1"],
            products: vec![("a0", "a1", scaled(q(1, 64), &[("a0", 1), ("a1", 1), ("a-1", -1)]))],
            gram: vec![("a0", "a1", q(1, 64))],
        },
        T4A => Seeds {
            basis: &["a-1", "a0", "a1", "a2", "v_rho"],
            products: vec![
                ("a0", "a1", scaled(q(1, 64), &[("a0", 3), ("a1", 3), ("a2", 1), ("a-1", 1), ("v_rho", -3)])),
                ("a0", "v_rho", scaled(q(1, 16), &[("a0", 5), ("a1", -2), ("a2", -1), ("a-1", -2), ("v_rho", 3)])),
                ("v_rho", "v_rho", vec![("v_rho", q(1, 1))]),
                ("a0", "a2", vec![]),
            ],
            gram: vec![
                ("a0", "a1", q(1, 32)),
                ("a0", "a2", q(0, 1)),
                ("a0", "v_rho", q(3, 8)),
                ("v_rho", "v_rho", q(2, 1)),
            ],
        },
        T4B => Seeds {
            basis: &["a-1", "a0", "a1", "a2", "a_rho2"],
            products: vec![
                ("a0", "a1", scaled(q(1, 64), &[("a0", 1), ("a1", 1), ("a-1", -1), ("a2", -1), ("a_rho2", 1)])),
                ("a0", "a2", scaled(q(1, 8), &[("a0", 1), ("a2", 1), ("a_rho2", -1)])),
                // Not printed: <<a0, a2>> is of type 2A with third axis a_rho2.
                ("a0", "a_rho2", scaled(q(1, 8), &[("a0", 1), ("a_rho2", 1), ("a2", -1)])),
            ],
            gram: vec![("a0", "a1", q(1, 64)), ("a0", "a2", q(1, 8)), ("a0", "a_rho2", q(1, 8))],
        },
        T5A => Seeds {
            basis: &["a-2", "a-1", "a0", "a1", "a2", "w_rho"],
            products: vec![
                (
                    "a0",
                    "a1",
                    [
                        scaled(q(1, 128), &[("a0", 3), ("a1", 3), ("a2", -1), ("a-1", -1), ("a-2", -1)]),
                        vec![("w_rho", q(1, 1))],
                    ]
                    .concat(),
                ),
                (
                    "a0",
                    "a2",
                    [
                        scaled(q(1, 128), &[("a0", 3), ("a2", 3), ("a1", -1), ("a-1", -1), ("a-2", -1)]),
                        vec![("w_rho", q(-1, 1))],
                    ]
                    .concat(),
                ),
                (
                    "a0",
                    "w_rho",
                    [
                        scaled(q(7, 4096), &[("a1", 1), ("a-1", 1), ("a2", -1), ("a-2", -1)]),
                        vec![("w_rho", q(7, 32))],
                    ]
                    .concat(),
                ),
                (
                    "w_rho",
                    "w_rho",
                    scaled(q(175, 1 << 19), &[("a-2", 1), ("a-1", 1), ("a0", 1), ("a1", 1), ("a2", 1)]),
                ),
            ],
            // (a0, a2) is not printed; associativity of the form against
            // a0.a1 and a0.a2 forces it to equal (a0, a1).
            gram: vec![
                ("a0", "a1", q(3, 128)),
                ("a0", "a2", q(3, 128)),
                ("a0", "w_rho", q(0, 1)),
                ("w_rho", "w_rho", q(875, 1 << 19)),
            ],
        },
        T6A => Seeds {
            basis: &["a-2", "a-1", "a0", "a1", "a2", "a3", "a_rho3", "u_rho2"],
            products: vec![
                (
                    "a0",
                    "a1",
                    [
                        scaled(
                            q(1, 64),
                            &[("a0", 1), ("a1", 1), ("a-2", -1), ("a-1", -1), ("a2", -1), ("a3", -1), ("a_rho3", 1)],
                        ),
                        vec![("u_rho2", q(45, 2048))],
                    ]
                    .concat(),
                ),
                (
                    "a0",
                    "a2",
                    [scaled(q(1, 32), &[("a0", 2), ("a2", 2), ("a-2", 1)]), vec![("u_rho2", q(-135, 2048))]].concat(),
                ),
                (
                    "a0",
                    "u_rho2",
                    [scaled(q(1, 9), &[("a0", 2), ("a2", -1), ("a-2", -1)]), vec![("u_rho2", q(5, 32))]].concat(),
                ),
                ("a0", "a3", scaled(q(1, 8), &[("a0", 1), ("a3", 1), ("a_rho3", -1)])),
                ("a_rho3", "u_rho2", vec![]),
                // Not printed: <<a0, a3>> is of type 2A with third axis
                // a_rho3, and <<a0, a2>> of type 3A with u_rho2.
                ("a0", "a_rho3", scaled(q(1, 8), &[("a0", 1), ("a_rho3", 1), ("a3", -1)])),
                ("u_rho2", "u_rho2", vec![("u_rho2", q(1, 1))]),
            ],
            gram: vec![
                ("a_rho3", "u_rho2", q(0, 1)),
                ("a0", "a1", q(5, 256)),
                ("a0", "a2", q(13, 256)),
                ("a0", "a3", q(1, 8)),
                ("a0", "a_rho3", q(1, 8)),
                ("a0", "u_rho2", q(1, 4)),
                ("u_rho2", "u_rho2", q(8, 5)),
            ],
        },
    }
}
