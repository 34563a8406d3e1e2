use std::fmt::Write as _;

use serde::Serialize;

use min3gen::dihedral_algebra::{algebra_table, dihedral_audit, dump, AlgebraType, DihedralAudit};
use min3gen::fpgroup::{coset_enumeration, parse_group_spec, EnumerationError};
use min3gen::permgroup::catalogue::{canonical_name, lookup, names};
use min3gen::shape_enum::{shape_report, summary_rows, ShapeReport, SWEEP_GROUPS};
use min3gen::transposition::{
    involution_class_unions, kp_membership, main_table, minimal_quotients, odd_core_structure, row_presentation,
    theorem_one_audit, verify_system, ClassificationReport, DRule, OddCoreKind, TableRow,
};

use crate::output::{csv, emit, json, Outcome};
use crate::{Cli, CliError, Command, Format};

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let outcome = match &cli.command {
        Command::Order { relators } => order(cli, relators)?,
        Command::Classify { row, relators, klm, all, list, all_involutions } => {
            let rule = if *all_involutions { DRule::AllInvolutions } else { DRule::ImageClasses };
            classify(cli, row.as_deref(), relators.as_deref(), *klm, *all, *list, rule)?
        }
        Command::Dihedral { ty, dump } => dihedral(cli, ty, *dump)?,
        Command::Shapes { group, orbits, summary } => shapes(cli, group, *orbits, *summary)?,
        Command::AuditTheorem1 => audit_theorem1(cli),
        Command::KpCheck { group, p } => kp_check(cli, group.as_deref(), *p)?,
    };
    emit(cli, &outcome.body)?;
    match outcome.failure {
        Some(f) => Err(CliError::Failure(f)),
        None => Ok(()),
    }
}

fn overflow(e: EnumerationError) -> CliError {
    match e {
        EnumerationError::Overflow { limit } => {
            CliError::Failure(format!("overflow at {limit} cosets (index unknown at this limit)"))
        }
        other => CliError::Usage(other.to_string()),
    }
}

#[derive(Serialize)]
struct OrderReport {
    schema: u32,
    presentation: String,
    strategy: String,
    order: usize,
    cosets_defined: usize,
}

fn order(cli: &Cli, relators: &str) -> Result<Outcome, CliError> {
    let p = parse_group_spec(relators).map_err(|e| CliError::Usage(e.to_string()))?;
    let t = coset_enumeration(&p, &[], cli.max_cosets, cli.strategy).map_err(overflow)?;
    let r = OrderReport {
        schema: 1,
        presentation: p.to_string(),
        strategy: cli.strategy.to_string(),
        order: t.n_cosets(),
        cosets_defined: t.total_defined(),
    };
    Ok(Outcome::ok(match cli.format {
        Format::Text => format!("{}\n", r.order),
        Format::Json => json(&r),
        Format::Csv => csv(&[r]),
    }))
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    schema: u32,
    rows: &'a [ClassifiedRow],
}

#[derive(Serialize)]
struct ClassifiedRow {
    row: Option<String>,
    /// The group as named in the table, for table rows.
    table_group: Option<String>,
    /// Member quotients listed in the table, for table rows.
    expected: Option<Vec<String>>,
    matches: Option<bool>,
    report: ClassificationReport,
}

#[derive(Serialize)]
struct QuotientLine<'a> {
    row: &'a str,
    order: usize,
    kernel_order: usize,
    quotient: &'a str,
    quotient_order: usize,
    six_transposition: bool,
    has_klm_triple: bool,
    minimal: bool,
    member: bool,
}

fn classify_row(cli: &Cli, row: &TableRow, rule: DRule) -> Result<ClassifiedRow, CliError> {
    let p = row_presentation(row);
    let extra: Vec<String> = row.extra_relators.iter().map(|s| s.to_string()).collect();
    let report = minimal_quotients(&p, &extra, row.klm, rule, cli.max_cosets, cli.strategy).map_err(overflow)?;
    let mut expected: Vec<String> = row.quotients.iter().map(|s| s.to_string()).collect();
    expected.sort();
    // The table lists quotients for the default rule only.
    let matches = (rule == DRule::ImageClasses).then(|| report.members == expected);
    Ok(ClassifiedRow {
        row: Some(row.id.to_string()),
        table_group: Some(row.group.to_string()),
        expected: Some(expected), matches, report })
}

fn classify(
    cli: &Cli,
    row: Option<&str>,
    relators: Option<&str>,
    klm: Option<(u32, u32, u32)>,
    all: bool,
    list: bool,
    rule: DRule,
) -> Result<Outcome, CliError> {
    if list {
        let mut s = String::new();
        for r in main_table() {
            let _ = writeln!(s, "{:<9} {:<28} order {}", r.id, r.spec(), r.order);
        }
        return Ok(Outcome::ok(s));
    }
    let rows: Vec<ClassifiedRow> = if let Some(id) = row {
        let r = main_table()
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| CliError::Usage(format!("unknown row {id:?}; see `classify --list`")))?;
        vec![classify_row(cli, r, rule)?]
    } else if let Some(text) = relators {
        let p = parse_group_spec(text).map_err(|e| CliError::Usage(e.to_string()))?;
        if p.num_generators() < 3 {
            return Err(CliError::Usage("a classification presentation needs generators a, b, c first".into()));
        }
        let klm = klm.ok_or_else(|| CliError::Usage("--relators needs --klm".into()))?;
        let report = minimal_quotients(&p, &[], klm, rule, cli.max_cosets, cli.strategy).map_err(overflow)?;
        vec![ClassifiedRow { row: None, table_group: None, expected: None, matches: None, report }]
    } else if all {
        main_table()
            .iter()
            .filter(|r| cli.extended || !r.is_extended())
            .map(|r| classify_row(cli, r, rule))
            .collect::<Result<_, _>>()?
    } else {
        return Err(CliError::Usage("give one of --row, --relators or --all".into()));
    };
    let pass = rows.iter().all(|r| r.matches != Some(false));
    let body = match cli.format {
        Format::Json => json(&ClassifyOutput { schema: 1, rows: &rows }),
        Format::Csv => {
            let lines: Vec<QuotientLine> = rows
                .iter()
                .flat_map(|r| {
                    r.report.quotients.iter().map(move |q| QuotientLine {
                        row: r.row.as_deref().unwrap_or(""),
                        order: r.report.order,
                        kernel_order: q.kernel_order,
                        quotient: &q.name,
                        quotient_order: q.order,
                        six_transposition: q.six_transposition,
                        has_klm_triple: q.has_klm_triple,
                        minimal: q.minimal,
                        member: q.member,
                    })
                })
                .collect();
            csv(&lines)
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let (k, l, m) = r.report.klm;
                let label = r.row.clone().unwrap_or_else(|| r.report.presentation.clone());
                let group = match &r.table_group {
                    Some(t) if r.report.group.starts_with("unknown") => t.clone(),
                    _ => r.report.group.clone(),
                };
                let _ = writeln!(s, "{label}: order {}, {group}", r.report.order);
                let members = if r.report.members.is_empty() { "---".to_string() } else { r.report.members.join(", ") };
                let _ = write!(s, "  quotients in S({k},{l},{m}): {members}");
                match r.matches {
                    Some(true) => s.push_str(" (matches table)\n"),
                    Some(false) => {
                        let _ = writeln!(s, " (table: {})", r.expected.as_deref().unwrap_or_default().join(", "));
                    }
                    None => s.push('\n'),
                }
            }
            s
        }
    };
    Ok(Outcome::check(body, pass, "quotients differ from the table"))
}

fn parse_types(ty: &str) -> Result<Vec<AlgebraType>, CliError> {
    if ty.eq_ignore_ascii_case("all") {
        return Ok(AlgebraType::ALL.to_vec());
    }
    ty.parse::<AlgebraType>()
        .map(|t| vec![t])
        .map_err(|e| CliError::Usage(format!("{e} (or all)")))
}

#[derive(Serialize)]
struct CheckLine {
    #[serde(rename = "type")]
    ty: String,
    check: String,
    pass: bool,
    detail: String,
}

fn dihedral(cli: &Cli, ty: &str, dump_table: bool) -> Result<Outcome, CliError> {
    let types = parse_types(ty)?;
    if dump_table {
        let dumps = types
            .iter()
            .map(|&t| algebra_table(t).map(|t| dump(&t)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Failure(e.to_string()))?;
        let body = if dumps.len() == 1 { json(&dumps[0]) } else { json(&dumps) };
        return Ok(Outcome::ok(body));
    }
    let a: DihedralAudit = dihedral_audit(&types, cli.seed);
    let body = match cli.format {
        Format::Json => json(&a),
        Format::Csv => {
            let lines: Vec<CheckLine> = a
                .types
                .iter()
                .flat_map(|t| {
                    t.checks.iter().map(move |c| CheckLine {
                        ty: t.ty.to_string(),
                        check: c.name.to_string(),
                        pass: c.pass,
                        detail: c.detail.clone().unwrap_or_default(),
                    })
                })
                .collect();
            csv(&lines)
        }
        Format::Text => {
            let mut s = String::new();
            for t in &a.types {
                let marks: Vec<String> =
                    t.checks.iter().map(|c| format!("{} {}", c.name, if c.pass { "ok" } else { "FAIL" })).collect();
                let _ = writeln!(s, "{:<3} dim {}  {}", t.ty.to_string(), t.dim, marks.join("  "));
                for c in t.checks.iter().filter(|c| !c.pass) {
                    let _ = writeln!(s, "    {}: {}", c.name, c.detail.as_deref().unwrap_or(""));
                }
            }
            let _ = writeln!(
                s,
                "inclusions: {} ({})",
                a.inclusions.found.join(", "),
                if a.inclusions.pass { "ok" } else { "FAIL" }
            );
            let _ = writeln!(s, "note: {}", a.inclusions.labelling_note);
            let _ = writeln!(s, "sigma(a0) a1 = a_rho in 2A: {}", if a.sigma_resurrection { "ok" } else { "FAIL" });
            let _ = writeln!(s, "Norton sampling: {} pairs per type, seed {}", a.norton_trials, a.seed);
            s
        }
    };
    Ok(Outcome::check(body, a.pass(), "dihedral audit failed"))
}

fn shapes(cli: &Cli, group: &str, orbits: Option<usize>, summary: bool) -> Result<Outcome, CliError> {
    let groups: Vec<&str> = if group.eq_ignore_ascii_case("all") {
        SWEEP_GROUPS.to_vec()
    } else {
        vec![canonical_name(group).ok_or_else(|| {
            CliError::Usage(format!("unknown group {group:?}; known: {}", names().join(" ")))
        })?]
    };
    let ks: Vec<usize> = match orbits {
        Some(k) if (1..=3).contains(&k) => vec![k],
        Some(k) => return Err(CliError::Usage(format!("--orbits must be 1, 2 or 3, got {k}"))),
        None => vec![1, 2, 3],
    };
    let mut reports: Vec<ShapeReport> = Vec::new();
    for g in &groups {
        for &k in &ks {
            reports.push(shape_report(g, k).map_err(|e| CliError::Failure(e.to_string()))?);
        }
    }
    let body = if summary || cli.format == Format::Csv {
        csv(&summary_rows(&reports))
    } else if cli.format == Format::Json {
        if reports.len() == 1 { json(&reports[0]) } else { json(&reports) }
    } else {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(
                s,
                "{} ({} orbit{}): {} system{}",
                r.group,
                r.orbits,
                if r.orbits == 1 { "" } else { "s" },
                r.systems.len(),
                if r.systems.len() == 1 { "" } else { "s" }
            );
            for sys in &r.systems {
                let choice = if sys.choice_label.is_empty() { "-".to_string() } else { sys.choice_label.clone() };
                let _ = writeln!(
                    s,
                    "  axes {:<10} shapes {:<3} consistent {:<3} up to symmetry {:<3} choices {}",
                    sys.axes, sys.shape_count, sys.consistent_count, sys.dedup_count, choice
                );
            }
        }
        s
    };
    Ok(Outcome::ok(body))
}

fn audit_theorem1(cli: &Cli) -> Outcome {
    let r = theorem_one_audit();
    let body = match cli.format {
        Format::Json => json(&r),
        Format::Csv => csv(
            &r.entries
                .iter()
                .map(|e| (e.item, e.group, e.order, e.expected, e.minimal, e.pass(), e.detail.clone()))
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            for e in &r.entries {
                let _ = writeln!(
                    s,
                    "{:<11} {:<12} order {:<4} {} {}",
                    e.item,
                    e.group,
                    e.order,
                    if e.pass() { "ok  " } else { "FAIL" },
                    e.detail
                );
            }
            s
        }
    };
    Outcome::check(body, r.all_pass, "theorem audit failed")
}

#[derive(Serialize)]
struct KpRow {
    group: String,
    d_class_sizes: Vec<usize>,
    p: u32,
    member: bool,
    products_divide_p: bool,
    minimal: bool,
    odd_core_order: Option<usize>,
    odd_core: Option<OddCoreKind>,
    split: Option<bool>,
    /// For members: odd core a `p`-group of order at most `p^3`, split by
    /// an involution.
    structure_ok: Option<bool>,
}

fn core_label(k: &OddCoreKind) -> String {
    match k {
        OddCoreKind::Trivial => "trivial".into(),
        OddCoreKind::Cyclic { p } => format!("cyclic {p}"),
        OddCoreKind::ElementaryAbelian { p } => format!("{p}^2"),
        OddCoreKind::Extraspecial { p, exponent } => format!("{p}^(1+2), exponent {exponent}"),
        OddCoreKind::Other => "other".into(),
    }
}

fn is_p_power_at_most_cube(n: usize, p: u32) -> bool {
    let p = p as usize;
    [1, p, p * p, p * p * p].contains(&n)
}

fn kp_check(cli: &Cli, group: Option<&str>, p: Option<u32>) -> Result<Outcome, CliError> {
    let groups: Vec<&str> = match group {
        Some(g) => vec![canonical_name(g).ok_or_else(|| CliError::Usage(format!("unknown group {g:?}")))?],
        None => names(),
    };
    let primes: Vec<u32> = match p {
        Some(p) if p >= 3 && (2..p).all(|d| p % d != 0) => vec![p],
        Some(p) => return Err(CliError::Usage(format!("--p must be an odd prime, got {p}"))),
        None => vec![3, 5],
    };
    let mut rows = Vec::new();
    for name in groups {
        let g = lookup(name).expect("canonical names resolve");
        let classes = g.involution_classes(false);
        for d in involution_class_unions(g) {
            let Ok(s) = verify_system(g, &d) else { continue };
            let sizes: Vec<usize> =
                classes.iter().filter(|c| d.binary_search(&c[0]).is_ok()).map(Vec::len).collect();
            for &p in &primes {
                let k = kp_membership(&s, p);
                let core = k.is_member().then(|| odd_core_structure(&s));
                rows.push(KpRow {
                    group: name.to_string(),
                    d_class_sizes: sizes.clone(),
                    p,
                    member: k.is_member(),
                    products_divide_p: k.products_divide_p,
                    minimal: k.minimal,
                    odd_core_order: core.as_ref().map(|c| c.order),
                    structure_ok: core
                        .as_ref()
                        .map(|c| is_p_power_at_most_cube(c.order, p) && c.split_by_involution),
                    odd_core: core.as_ref().map(|c| c.kind.clone()),
                    split: core.as_ref().map(|c| c.split_by_involution),
                });
            }
        }
    }
    let pass = rows.iter().all(|r| r.structure_ok != Some(false));
    let body = match cli.format {
        Format::Json => json(&serde_json::json!({ "schema": 1, "rows": rows })),
        Format::Csv => csv(
            &rows
                .iter()
                .map(|r| {
                    (
                        &r.group,
                        r.d_class_sizes.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+"),
                        r.p,
                        r.member,
                        r.odd_core_order,
                        r.structure_ok,
                    )
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in rows.iter().filter(|r| r.member) {
                let sizes: Vec<String> = r.d_class_sizes.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(
                    s,
                    "K_{}: {:<12} D = {:<8} odd core order {:<4} {:<24} {}",
                    r.p,
                    r.group,
                    sizes.join("+"),
                    r.odd_core_order.unwrap_or(0),
                    r.odd_core.as_ref().map(core_label).unwrap_or_default(),
                    if r.structure_ok == Some(true) { "ok" } else { "FAIL" }
                );
            }
            s
        }
    };
    Ok(Outcome::check(body, pass, "a K_p member has an unexpected odd core"))
}
