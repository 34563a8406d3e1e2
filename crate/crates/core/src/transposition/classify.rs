//! Minimal 3-generated quotients of finitely presented 3-generated groups.

use std::collections::BTreeSet;

use serde::Serialize;

use super::verify_system;
use crate::fpgroup::{coset_enumeration, parse_group_spec, EnumerationError, Presentation, Strategy};
use crate::permgroup::catalogue::identify;
use crate::permgroup::FiniteGroup;

/// One row of the classification table: `R(k,l,m)` plus extra relators.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub id: &'static str,
    pub klm: (u32, u32, u32),
    pub extra_relators: &'static [&'static str],
    /// Name of the finite group the presentation defines.
    pub group: &'static str,
    pub order: usize,
    /// Quotients lying in `S(k,l,m)`, by catalogue name.
    pub quotients: &'static [&'static str],
}

impl TableRow {
    /// Rows above this order are only run on request.
    pub const EXTENDED_ORDER: usize = 1000;

    pub fn is_extended(&self) -> bool {
        self.order > Self::EXTENDED_ORDER
    }

    pub fn spec(&self) -> String {
        let (k, l, m) = self.klm;
        if self.extra_relators.is_empty() {
            format!("R({k},{l},{m})")
        } else {
            format!("R({k},{l},{m}) + {}", self.extra_relators.join(", "))
        }
    }
}

const ABC4: &[&str] = &["(a*b^c)^4"];
const ABC5: &[&str] = &["(a*b^c)^5"];
const ABC6: &[&str] = &["(a*b^c)^6"];

const ROWS: &[TableRow] = &[
    TableRow { id: "233", klm: (2, 3, 3), extra_relators: &[], group: "S4", order: 24, quotients: &["S4"] },
    TableRow { id: "234", klm: (2, 3, 4), extra_relators: &[], group: "2xS4", order: 48, quotients: &["S4"] },
    TableRow { id: "235", klm: (2, 3, 5), extra_relators: &[], group: "2xA5", order: 120, quotients: &["A5"] },
    TableRow {
        id: "244-6",
        klm: (2, 4, 4),
        extra_relators: ABC6,
        group: "(2^2xS3^2):2",
        order: 288,
        quotients: &["D8"],
    },
    TableRow {
        id: "244-5",
        klm: (2, 4, 4),
        extra_relators: ABC5,
        group: "(D10xD10):2",
        order: 200,
        quotients: &["D8"],
    },
    TableRow {
        id: "244-4",
        klm: (2, 4, 4),
        extra_relators: ABC4,
        group: "(D8xD8):2",
        order: 128,
        quotients: &["D8"],
    },
    TableRow { id: "245-5", klm: (2, 4, 5), extra_relators: ABC5, group: "A6:2", order: 720, quotients: &[] },
    TableRow {
        id: "245-4",
        klm: (2, 4, 5),
        extra_relators: ABC4,
        group: "2x((2^4:5):2)",
        order: 320,
        quotients: &[],
    },
    TableRow {
        id: "245-6-6",
        klm: (2, 4, 5),
        extra_relators: &["(a*b^c)^6", "(c*a^(b^c*a))^6"],
        group: "((3^4:A5):2):2",
        order: 19440,
        quotients: &[],
    },
    TableRow {
        id: "245-6-5",
        klm: (2, 4, 5),
        extra_relators: &["(a*b^c)^6", "(c*a^(b^c*a))^5"],
        group: "D20",
        order: 20,
        quotients: &[],
    },
    TableRow {
        id: "245-6-4",
        klm: (2, 4, 5),
        extra_relators: &["(a*b^c)^6", "(c*a^(b^c*a))^4"],
        group: "2x((2^4:A5):2)",
        order: 3840,
        quotients: &[],
    },
    TableRow {
        id: "333-6",
        klm: (3, 3, 3),
        extra_relators: ABC6,
        group: "((6x6):3):2",
        order: 216,
        quotients: &["S3", "3^2:2", "S4", "3^(1+2):2"],
    },
    TableRow {
        id: "333-5",
        klm: (3, 3, 3),
        extra_relators: ABC5,
        group: "(5^2:3):2",
        order: 150,
        quotients: &["(5^2:3):2", "S3"],
    },
    TableRow {
        id: "333-4",
        klm: (3, 3, 3),
        extra_relators: ABC4,
        group: "((4x4):3):2",
        order: 96,
        quotients: &["S3", "S4"],
    },
];

/// All rows of the classification table, in table order.
pub fn main_table() -> &'static [TableRow] {
    ROWS
}

pub fn row_presentation(row: &TableRow) -> Presentation {
    parse_group_spec(&row.spec()).expect("table rows are well formed")
}

/// How `D` is chosen in a quotient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DRule {
    /// The union of the classes of the images of `a`, `b`, `c`.
    #[default]
    ImageClasses,
    /// Every involution of the quotient.
    AllInvolutions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientEntry {
    pub name: String,
    pub order: usize,
    pub kernel_order: usize,
    pub six_transposition: bool,
    /// Some triple of `D` has product orders `(k, l, m)` and generates.
    pub has_klm_triple: bool,
    pub minimal: bool,
    pub member: bool,
    /// The triple in the generators when a member; otherwise the reason.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub schema: u32,
    pub presentation: String,
    pub extra_relators: Vec<String>,
    pub klm: (u32, u32, u32),
    pub d_rule: DRule,
    pub order: usize,
    pub group: String,
    /// One entry per normal subgroup, by increasing kernel order.
    pub quotients: Vec<QuotientEntry>,
    /// Names of the member quotients, sorted and deduplicated.
    pub members: Vec<String>,
}

/// Enumerates `p` (whose first three generators are `a, b, c`), walks every
/// normal subgroup and decides which quotients lie in `S(k,l,m)` and are
/// minimal 3-generated.
pub fn minimal_quotients(
    p: &Presentation,
    extra_relators: &[String],
    klm: (u32, u32, u32),
    rule: DRule,
    limit: usize,
    strategy: Strategy,
) -> Result<ClassificationReport, EnumerationError> {
    let table = coset_enumeration(p, &[], limit, strategy)?;
    let g = FiniteGroup::from_coset_table(&table).expect("coset table of the trivial subgroup is regular");
    let names = p.generator_names();
    let mut quotients = Vec::new();
    for n in g.normal_subgroups() {
        let (q, map) = g.quotient(&n);
        let images: Vec<u32> = g.generators().iter().take(3).map(|&x| map[x as usize]).collect();
        quotients.push(classify_quotient(&q, &images, n.order(), klm, rule, names));
    }
    let members: BTreeSet<String> = quotients.iter().filter(|e| e.member).map(|e| e.name.clone()).collect();
    Ok(ClassificationReport {
        schema: 1,
        presentation: p.to_string(),
        extra_relators: extra_relators.to_vec(),
        klm,
        d_rule: rule,
        order: g.order(),
        group: identify(&g),
        quotients,
        members: members.into_iter().collect(),
    })
}

fn classify_quotient(
    q: &FiniteGroup,
    images: &[u32],
    kernel_order: usize,
    (k, l, m): (u32, u32, u32),
    rule: DRule,
    names: &[String],
) -> QuotientEntry {
    let mut entry = QuotientEntry {
        name: identify(q),
        order: q.order(),
        kernel_order,
        six_transposition: false,
        has_klm_triple: false,
        minimal: false,
        member: false,
        witness: None,
    };
    let d: Vec<u32> = match rule {
        DRule::ImageClasses => images.iter().flat_map(|&x| q.class_of(x)).collect(),
        DRule::AllInvolutions => q.elements().filter(|&x| q.element_order(x) == 2).collect(),
    };
    let s = match verify_system(q, &d) {
        Ok(s) => s,
        Err(e) => {
            entry.witness = Some(e.to_string());
            return entry;
        }
    };
    entry.six_transposition = true;
    let triple = s.find_sklm_triple(k, l, m);
    entry.has_klm_triple = triple.is_some();
    match s.is_minimal_3generated() {
        Ok(r) => {
            entry.minimal = r.is_minimal();
            if let Some(w) = r.witness {
                entry.witness = Some(format!("proper subgroup {} is not 2-generated by D", identify_subgroup(q, &w.subgroup)));
            }
        }
        Err(e) => entry.witness = Some(e.to_string()),
    }
    entry.member = entry.has_klm_triple && entry.minimal;
    if let (true, Some(t)) = (entry.member, triple) {
        let words: Vec<String> = t.iter().map(|&x| q.word(x).display_with(names).to_string()).collect();
        entry.witness = Some(format!("({})", words.join(", ")));
    } else if entry.witness.is_none() {
        entry.witness = Some(format!("no generating triple in D with product orders ({k},{l},{m})"));
    }
    entry
}

/// Catalogue name of a subgroup, built as a group in its own right.
pub(crate) fn identify_subgroup(g: &FiniteGroup, h: &crate::permgroup::Subgroup) -> String {
    let gens = g.small_generating_set(h);
    let perms: Vec<Vec<u32>> = gens
        .iter()
        .map(|&s| h.elements().iter().map(|&x| h.elements().binary_search(&g.mul(x, s)).unwrap() as u32).collect())
        .collect();
    match FiniteGroup::from_right_action(perms) {
        Ok(sub) => identify(&sub),
        Err(_) => format!("subgroup of order {}", h.order()),
    }
}
