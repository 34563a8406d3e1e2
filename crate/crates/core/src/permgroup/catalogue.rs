//! Reference constructions of the named groups used throughout the crate.
//!
//! Names are ASCII: `D8` is the dihedral group of order 8, `3^2:2` a split
//! extension, `3^(1+2):2` the extraspecial group of order 27 and exponent 3
//! extended by an involution, `2xS4` a direct product.

use std::sync::OnceLock;

use super::finite::FiniteGroup;
use super::iso::find_isomorphism;
use super::perm::Perm;
use crate::fpgroup::{coset_enumeration, parse_presentation, Presentation, Strategy};

/// `p^2:2 = <x, y, z | x^p, y^p, [x,y], z^2, x^z x, y^z y>`.
pub fn p_squared_presentation(p: u32) -> Presentation {
    parse_presentation(&format!("x,y,z | x^{p}, y^{p}, [x,y], z^2, x^z*x, y^z*y")).expect("valid")
}

/// `(2m x 2):2 = <x, y, z | x^(2m), y^2, [x,y], z^2, x^z x, y^z x^m y>`.
pub fn two_m_presentation(m: u32) -> Presentation {
    let n = 2 * m;
    parse_presentation(&format!("x,y,z | x^{n}, y^2, [x,y], z^2, x^z*x, y^z*x^{m}*y")).expect("valid")
}

/// `p^(1+2):2 = <x, y, z | x^p, y^p, [x,y]^p, [x,[x,y]], [y,[x,y]], z^2, x^z x, y^z y>`.
pub fn extraspecial_presentation(p: u32) -> Presentation {
    parse_presentation(&format!(
        "x,y,z | x^{p}, y^{p}, [x,y]^{p}, [x,[x,y]], [y,[x,y]], z^2, x^z*x, y^z*y"
    ))
    .expect("valid")
}

/// `(5^2:3):2 = <x, y, z, w | x^5, y^5, z^3, [x,y], w^2, x^w y^-1, y^z y x^-1, z^w z>`.
pub fn five_squared_three_presentation() -> Presentation {
    parse_presentation("x,y,z,w | x^5, y^5, z^3, [x,y], w^2, x^w*y^-1, y^z*y*x^-1, z^w*z").expect("valid")
}

fn from_presentation(p: &Presentation) -> FiniteGroup {
    let t = coset_enumeration(p, &[], 100_000, Strategy::Hlt).expect("catalogue presentation is finite");
    FiniteGroup::from_coset_table(&t).expect("regular action")
}

fn perms(degree: usize, gens: &[&str]) -> FiniteGroup {
    let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse(degree, s).expect("valid cycle")).collect();
    FiniteGroup::from_perms(degree, &gens).expect("small group")
}

/// The dihedral group of order `2n` in its regular action: point `2i + e`
/// stands for `r^i s^e`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let pt = |i: usize, e: usize| (2 * (i % n) + e) as u32;
    let mut rot = Vec::with_capacity(2 * n);
    let mut refl = Vec::with_capacity(2 * n);
    for i in 0..n {
        for e in 0..2 {
            // r^i s^e * r = r^(i +/- 1) s^e and r^i s^e * s = r^i s^(1-e).
            rot.push(if e == 0 { pt(i + 1, 0) } else { pt(i + n - 1, 1) });
            refl.push(pt(i, 1 - e));
        }
    }
    let gens = [Perm::from_images(rot).unwrap(), Perm::from_images(refl).unwrap()];
    FiniteGroup::from_perms(2 * n, &gens).unwrap()
}

/// Direct product with a cyclic group of order 2, on two extra points.
fn times_two(degree: usize, gens: &[&str]) -> FiniteGroup {
    let mut all: Vec<Perm> = gens.iter().map(|s| Perm::parse(degree + 2, s).unwrap()).collect();
    all.push(Perm::from_cycles(degree + 2, &[&[degree + 1, degree + 2]]).unwrap());
    FiniteGroup::from_perms(degree + 2, &all).unwrap()
}

/// Translations of F_p^2 together with negation, on p^2 points.
fn affine_p_squared(p: u32) -> FiniteGroup {
    let n = p * p;
    let point = |a: u32, b: u32| a * p + b;
    let tx: Vec<u32> = (0..n).map(|v| point((v / p + 1) % p, v % p)).collect();
    let ty: Vec<u32> = (0..n).map(|v| point(v / p, (v % p + 1) % p)).collect();
    let neg: Vec<u32> = (0..n).map(|v| point((p - v / p) % p, (p - v % p) % p)).collect();
    let gens = [tx, ty, neg].map(|im| Perm::from_images(im).unwrap());
    FiniteGroup::from_perms(n as usize, &gens).unwrap()
}

/// GL(2,3) acting on the eight non-zero row vectors of F_3^2.
fn gl23() -> FiniteGroup {
    let vectors: Vec<(u32, u32)> = (0..9).map(|v| (v / 3, v % 3)).filter(|&v| v != (0, 0)).collect();
    let index = |v: (u32, u32)| vectors.iter().position(|&w| w == v).unwrap() as u32;
    let act = |m: [[u32; 2]; 2]| {
        let images: Vec<u32> = vectors
            .iter()
            .map(|&(a, b)| index(((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3)))
            .collect();
        Perm::from_images(images).unwrap()
    };
    let gens = [act([[1, 1], [0, 1]]), act([[0, 1], [2, 0]]), act([[2, 0], [0, 1]])];
    FiniteGroup::from_perms(8, &gens).unwrap()
}

struct Entry {
    name: &'static str,
    aliases: &'static [&'static str],
    build: fn() -> FiniteGroup,
}

const ENTRIES: &[Entry] = &[
    Entry { name: "1", aliases: &[], build: || perms(1, &["()"]) },
    Entry { name: "2", aliases: &["D2"], build: || perms(2, &["(1,2)"]) },
    Entry { name: "2^2", aliases: &["D4"], build: || perms(4, &["(1,2)", "(3,4)"]) },
    Entry { name: "S3", aliases: &["D6"], build: || perms(3, &["(1,2,3)", "(1,2)"]) },
    Entry { name: "D8", aliases: &[], build: || dihedral_group(4) },
    Entry { name: "D10", aliases: &[], build: || dihedral_group(5) },
    Entry { name: "D12", aliases: &[], build: || dihedral_group(6) },
    Entry { name: "D20", aliases: &[], build: || dihedral_group(10) },
    Entry { name: "2^3", aliases: &[], build: || perms(6, &["(1,2)", "(3,4)", "(5,6)"]) },
    Entry { name: "S4", aliases: &[], build: || perms(4, &["(1,2,3,4)", "(1,2)"]) },
    Entry { name: "GL(2,3)", aliases: &[], build: gl23 },
    Entry { name: "A5", aliases: &[], build: || perms(5, &["(1,2,3,4,5)", "(1,2,3)"]) },
    Entry { name: "3^2:2", aliases: &[], build: || affine_p_squared(3) },
    Entry { name: "5^2:2", aliases: &[], build: || affine_p_squared(5) },
    Entry { name: "(4x2):2", aliases: &[], build: || from_presentation(&two_m_presentation(2)) },
    Entry { name: "(6x2):2", aliases: &[], build: || from_presentation(&two_m_presentation(3)) },
    Entry {
        name: "3^(1+2):2",
        aliases: &["(3^2:3):2"],
        build: || from_presentation(&extraspecial_presentation(3)),
    },
    Entry { name: "5^(1+2):2", aliases: &[], build: || from_presentation(&extraspecial_presentation(5)) },
    Entry { name: "(5^2:3):2", aliases: &[], build: || from_presentation(&five_squared_three_presentation()) },
    Entry { name: "2xD8", aliases: &[], build: || times_two(4, &["(1,2,3,4)", "(1,3)"]) },
    Entry { name: "2xD12", aliases: &[], build: || times_two(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"]) },
    Entry { name: "2xS4", aliases: &[], build: || times_two(4, &["(1,2,3,4)", "(1,2)"]) },
    Entry { name: "2xA5", aliases: &[], build: || times_two(5, &["(1,2,3,4,5)", "(1,2,3)"]) },
];

fn cache() -> &'static [OnceLock<FiniteGroup>] {
    static CACHE: OnceLock<Vec<OnceLock<FiniteGroup>>> = OnceLock::new();
    CACHE.get_or_init(|| ENTRIES.iter().map(|_| OnceLock::new()).collect())
}

fn entry_group(i: usize) -> &'static FiniteGroup {
    cache()[i].get_or_init(ENTRIES[i].build)
}

/// Canonical names of all catalogue groups, in catalogue order.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Resolves a name or alias to its canonical name.
pub fn canonical_name(name: &str) -> Option<&'static str> {
    let name = name.trim();
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .map(|e| e.name)
}

/// The reference construction for a catalogue name or alias.
pub fn lookup(name: &str) -> Option<&'static FiniteGroup> {
    let canonical = canonical_name(name)?;
    let i = ENTRIES.iter().position(|e| e.name == canonical)?;
    Some(entry_group(i))
}

/// Names `g` by the catalogue: fingerprint match confirmed by an explicit
/// isomorphism. Unmatched groups get `unknown(order=N, fingerprint=...)`.
pub fn identify(g: &FiniteGroup) -> String {
    identify_known(g).map(str::to_string).unwrap_or_else(|| {
        format!("unknown(order={}, fingerprint={})", g.order(), g.fingerprint())
    })
}

/// The catalogue name of `g`, if it has one.
pub fn identify_known(g: &FiniteGroup) -> Option<&'static str> {
    let mut fp = None;
    for (i, e) in ENTRIES.iter().enumerate() {
        let h = entry_group(i);
        if h.order() != g.order() {
            continue;
        }
        let fg = fp.get_or_insert_with(|| g.fingerprint());
        if *fg != h.fingerprint() {
            continue;
        }
        if find_isomorphism(g, h).is_some() {
            return Some(e.name);
        }
    }
    None
}
