//! Fixtures shared by the criterion benches.

use min3gen::fpgroup::{parse_group_spec, Presentation};

/// Presentations of increasing size, labelled by group order.
pub const PRESENTATIONS: &[(&str, &str)] = &[
    ("120", "R(2,3,5)"),
    ("216", "R(3,3,3) + (a*b^c)^6"),
    ("3840", "R(2,4,5) + (a*b^c)^6, (c*a^(b^c*a))^4"),
    ("19440", "R(2,4,5) + (a*b^c)^6, (c*a^(b^c*a))^6"),
    ("124800", "R(3,3,5) + (b*a^c)^5, (b*a^(c*a))^5"),
];

pub fn presentation(spec: &str) -> Presentation {
    parse_group_spec(spec).expect("bench presentations parse")
}
