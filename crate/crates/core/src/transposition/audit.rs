//! Re-checks the list of non-trivial finite minimal 3-generated
//! 6-transposition groups, group by group.

use serde::Serialize;

use super::{involution_class_unions, verify_system};
use crate::permgroup::catalogue::{five_squared_three_presentation, lookup, two_m_presentation};
use crate::permgroup::FiniteGroup;
use crate::transposition::classify::identify_subgroup;

/// How `D` is chosen for an audited group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "classes", rename_all = "snake_case")]
pub enum DChoice {
    /// The union of the classes of these words in the group generators.
    Classes(Vec<String>),
    /// Every union of involution classes is tried.
    Search,
    /// All involutions.
    AllInvolutions,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub item: &'static str,
    pub group: &'static str,
    pub order: usize,
    pub d: DChoice,
    /// Whether the group is expected to be minimal 3-generated for this `D`.
    pub expected: bool,
    pub minimal: bool,
    /// For searched entries, the passing unions, each as class sizes.
    pub passing_d: Vec<Vec<usize>>,
    pub detail: String,
}

impl AuditEntry {
    pub fn pass(&self) -> bool {
        self.minimal == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub schema: u32,
    pub entries: Vec<AuditEntry>,
    pub all_pass: bool,
}

/// Generator names of the audited presentations, in generator order.
const XYZW: [&str; 4] = ["x", "y", "z", "w"];

fn classes_of_words(g: &FiniteGroup, words: &[&str], gens: usize) -> Vec<u32> {
    let names: Vec<String> = XYZW[..gens].iter().map(|s| s.to_string()).collect();
    let p = crate::fpgroup::Presentation::new(names, Vec::new()).expect("valid generator names");
    let mut d: Vec<u32> = words
        .iter()
        .flat_map(|w| g.class_of(g.eval(&p.parse_word(w).expect("valid word"))))
        .collect();
    d.sort_unstable();
    d.dedup();
    d
}

fn check(g: &FiniteGroup, d: &[u32]) -> (bool, String) {
    match verify_system(g, d) {
        Err(e) => (false, e.to_string()),
        Ok(s) => match s.is_minimal_3generated() {
            Err(e) => (false, e.to_string()),
            Ok(r) => match r.witness {
                None => (true, "minimal 3-generated".to_string()),
                Some(w) => (false, format!("{} is not 2-generated by D", identify_subgroup(g, &w.subgroup))),
            },
        },
    }
}

fn searched(item: &'static str, name: &'static str, expected: bool) -> AuditEntry {
    let g = lookup(name).expect("catalogue group");
    let classes = g.involution_classes(false);
    let mut passing_d = Vec::new();
    for d in involution_class_unions(g) {
        if check(g, &d).0 {
            let sizes = classes.iter().filter(|c| d.binary_search(&c[0]).is_ok()).map(Vec::len).collect();
            passing_d.push(sizes);
        }
    }
    let minimal = !passing_d.is_empty();
    let detail = if minimal {
        format!("{} of {} class unions pass", passing_d.len(), (1usize << classes.len()) - 1)
    } else {
        let all: Vec<u32> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
        format!("no class union passes; all involutions: {}", check(g, &all).1)
    };
    AuditEntry { item, group: name, order: g.order(), d: DChoice::Search, expected, minimal, passing_d, detail }
}

fn specified(item: &'static str, name: &'static str, words: &[&str]) -> AuditEntry {
    let g = lookup(name).expect("catalogue group");
    let d = classes_of_words(g, words, g.num_generators());
    let (minimal, detail) = check(g, &d);
    AuditEntry {
        item,
        group: name,
        order: g.order(),
        d: DChoice::Classes(words.iter().map(|w| w.to_string()).collect()),
        expected: true,
        minimal,
        passing_d: Vec::new(),
        detail,
    }
}

fn all_involutions(item: &'static str, name: &'static str, expected: bool) -> AuditEntry {
    let g = lookup(name).expect("catalogue group");
    let d: Vec<u32> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
    let (minimal, detail) = check(g, &d);
    AuditEntry {
        item,
        group: name,
        order: g.order(),
        d: DChoice::AllInvolutions,
        expected,
        minimal,
        passing_d: Vec::new(),
        detail,
    }
}

/// Builds every listed group and checks it, plus the two standard
/// non-examples `2xD8` and `2xD12`, which must fail.
pub fn theorem_one_audit() -> AuditReport {
    // The presentations behind the catalogue entries fix the generator order.
    debug_assert_eq!(two_m_presentation(2).num_generators(), 3);
    debug_assert_eq!(five_squared_three_presentation().num_generators(), 4);
    let mut entries = Vec::new();
    for name in ["2", "2^2", "S3", "D8", "D10", "D12", "D20"] {
        entries.push(searched("i", name, true));
    }
    for name in ["2^3", "S4", "GL(2,3)", "A5"] {
        entries.push(searched("ii", name, true));
    }
    for name in ["3^2:2", "5^2:2"] {
        entries.push(searched("iii", name, true));
    }
    entries.push(specified("iv", "(4x2):2", &["y", "z", "x*z"]));
    entries.push(specified("iv", "(4x2):2", &["y", "z", "x*z", "x^2"]));
    entries.push(specified("iv", "(6x2):2", &["y", "z"]));
    entries.push(specified("iv", "(6x2):2", &["y", "z", "x^3"]));
    for name in ["3^(1+2):2", "5^(1+2):2"] {
        entries.push(searched("v", name, true));
    }
    entries.push(searched("vi", "(5^2:3):2", true));
    for name in ["2xD8", "2xD12"] {
        entries.push(all_involutions("non-example", name, false));
        entries.push(searched("non-example", name, false));
    }
    let all_pass = entries.iter().all(AuditEntry::pass);
    AuditReport { schema: 1, entries, all_pass }
}
