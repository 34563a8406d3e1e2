//! Reference rows of the published shape tables. Group names use the
//! catalogue spelling; `(3^2:3):2` is `3^(1+2):2`.

/// `(group, axes, number of shapes)` for three orbits.
pub const SHAPES3: &[(&str, &str, usize)] = &[
    ("1", "1+1+1", 8),
    ("2^2", "1+2+2", 8),
    ("2^2", "2+2+2", 8),
    ("2^2", "2+2+2", 2),
    ("S3", "1+3+3", 4),
    ("S3", "3+3+3", 1),
    ("2^3", "4+4+4", 64),
    ("2^3", "4+4+2", 16),
    ("2^3", "4+2+2", 32),
    ("2^3", "4+2+2", 4),
    ("D12", "6+6+6", 4),
    ("D12", "6+6+2", 2),
    ("3^2:2", "9+9+9", 1),
    ("S4", "12+12+12", 2),
    ("S4", "6+6+6", 64),
    ("S4", "6+6+3", 16),
    ("3^(1+2):2", "27+27+27", 1),
    ("3^(1+2):2", "27+27+9", 1),
    ("3^(1+2):2", "27+9+9", 1),
];

pub const SHAPES2: &[(&str, &str, usize)] = &[
    ("1", "1+1", 2),
    ("2^2", "2+2", 2),
    ("S3", "1+3", 4),
    ("S3", "3+3", 1),
    ("D10", "1+5", 2),
    ("D12", "6+6", 4),
    ("D12", "6+2", 2),
    ("3^2:2", "9+9", 1),
    ("S4", "12+12", 2),
    ("S4", "6+6", 8),
    ("S4", "6+3", 8),
    ("3^(1+2):2", "27+27", 1),
    ("3^(1+2):2", "27+9", 1),
];

pub const SHAPES1: &[(&str, &str, usize)] = &[
    ("1", "1", 1),
    ("S3", "3", 2),
    ("D10", "5", 1),
    ("3^2:2", "9", 16),
    ("S4", "12", 2),
    ("S4", "6", 4),
    ("5^2:2", "25", 1),
    ("3^(1+2):2", "27", 1),
    ("A5", "15", 4),
    ("(5^2:3):2", "15", 2),
];

/// Every `(group, axes, shape)` named in the algebra tables, both original
/// algebras and their minimal subalgebras; an empty shape means nothing was
/// left to choose.
pub const NAMED_SHAPES: &[(&str, &str, &str)] = &[
    ("1", "1+1+1", "2B, 2B, 2B"),
    ("1", "1+1+1", "2B, 2B, 2A"),
    ("1", "1+1+1", "2B, 2A, 2A"),
    ("1", "1+1+1", "2A, 2A, 2A"),
    ("1", "1+1", "2B"),
    ("1", "1+1", "2A"),
    ("1", "1", ""),
    ("2^2", "1+2+2", "2A, 2A, 4B"),
    ("2^2", "2+2+2", "4A"),
    ("2^2", "2+2+2", "4B"),
    ("2^2", "2+2", "4A"),
    ("2^2", "2+2", "4B"),
    ("S3", "1+3", "2B, 3C"),
    ("S3", "1+3", "2B, 3A"),
    ("S3", "1+3", "2A, 3A"),
    ("S3", "3+3", ""),
    ("S3", "3", "3C"),
    ("S3", "3", "3A"),
    ("D10", "1+5", "2B"),
    ("D10", "5", ""),
    ("D12", "6+2", "4B, 2A"),
    ("3^2:2", "9", "3C, 3C, 3C, 3C"),
    ("3^2:2", "9", "3C, 3C, 3C, 3A"),
    ("S4", "6+3", "4B, 3C, 2A"),
    ("S4", "6+3", "4B, 3A, 2A"),
    ("S4", "12", "4B"),
    ("S4", "6", "2B, 3C"),
    ("S4", "6", "2A, 3C"),
    ("S4", "6", "2B, 3A"),
    ("S4", "6", "2A, 3A"),
    ("A5", "15", "2A, 3C"),
    ("A5", "15", "2A, 3A"),
    ("(5^2:3):2", "15", "3C"),
    // Unresolved cases.
    ("3^2:2", "9", "3C, 3C, 3A, 3A"),
    ("3^2:2", "9", "3A, 3A, 3A, 3A"),
    ("5^2:2", "25", ""),
    ("(5^2:3):2", "15", "3A"),
    // Non-minimal algebras, fully constructed.
    ("2^2", "1+2+2", "2B, 2B, 4A"),
    ("2^2", "1+2+2", "2B, 2B, 4B"),
    ("2^2", "1+2+2", "2B, 2A, 4A"),
    ("2^2", "1+2+2", "2B, 2A, 4B"),
    ("2^2", "1+2+2", "2A, 2A, 4A"),
    ("2^2", "2+2+2", "2B, 2B, 4A"),
    ("2^2", "2+2+2", "2B, 2A, 4B"),
    ("2^2", "2+2+2", "2A, 2A, 4B"),
    ("S3", "1+3+3", "2B, 2B"),
    ("S3", "1+3+3", "2B, 2A"),
    ("S3", "1+3+3", "2A, 2A"),
    ("S3", "3+3+3", ""),
    ("2^3", "4+4+4", "4B, 4B, 4B, 2B, 2B, 2B"),
    ("2^3", "4+4+2", "4A, 4B, 2A, 2A"),
    ("2^3", "4+2+2", "4A, 4A, 2B, 2B, 2B"),
    ("2^3", "4+2+2", "4A, 4B, 2A, 2B, 2B"),
    ("2^3", "4+2+2", "4A, 4B, 2A, 2B, 2A"),
    ("2^3", "4+2+2", "4B, 4B, 2B, 2B, 2B"),
    ("3^2:2", "9+9", ""),
    ("3^2:2", "9+9+9", ""),
    ("S4", "6+6", "2B, 2A, 2A"),
    ("S4", "6+3", "4A, 3C, 2B"),
    ("S4", "6+3", "4A, 3A, 2B"),
    ("S4", "6+3", "4A, 3A, 2A"),
    ("S4", "6+3", "4B, 3C, 2B"),
    ("S4", "6+3", "4B, 3A, 2B"),
    ("S4", "6+6+3", "4B, 2B, 2B, 2B"),
    ("S4", "6+6+3", "4B, 2B, 2A, 2A"),
    ("S4", "6+6+6", "2A, 2B, 2B, 2A, 2B, 2A"),
    ("A5", "15", "2B, 3C"),
    ("A5", "15", "2B, 3A"),
    // Non-minimal algebras, partly constructed.
    ("2^2", "2+2+2", "2A, 2A, 4A"),
    ("2^3", "4+4+4", "4A, 4A, 4A, 2B, 2B, 2B"),
    ("2^3", "4+4+4", "4A, 4A, 4A, 2B, 2B, 2A"),
    ("2^3", "4+4+4", "4A, 4A, 4A, 2A, 2B, 2A"),
    ("2^3", "4+4+4", "4B, 4A, 4A, 2A, 2B, 2A"),
    ("2^3", "4+4+4", "4A, 4A, 4A, 2A, 2A, 2A"),
    ("2^3", "4+4+4", "4B, 4A, 4A, 2A, 2A, 2A"),
    ("2^3", "4+4+4", "4B, 4A, 4B, 2A, 2A, 2B"),
    ("2^3", "4+4+4", "4A, 4B, 4A, 2A, 2A, 2B"),
    ("2^3", "4+2+2", "4A, 4A, 2B, 2B, 2A"),
    ("2^3", "4+2+2", "4A, 4A, 2B, 2A, 2A"),
    ("2^3", "4+2+2", "4B, 4B, 2B, 2A, 2A"),
    ("S4", "6+6", "2B, 2B, 2A"),
    ("S4", "6+6+6", "2B, 2A, 2A, 2B, 2A, 2B"),
    ("S4", "6+6+6", "2A, 2A, 2A, 2A, 2A, 2A"),
    ("S4", "6+6+3", "4A, 2A, 2B, 2B"),
    ("S4", "6+6+3", "4A, 2A, 2B, 2A"),
    ("S4", "6+6+3", "4A, 2A, 2A, 2A"),
];
