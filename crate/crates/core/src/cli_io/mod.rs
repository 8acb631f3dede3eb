//! Command-line plumbing: group resolution, `.cayley` files, element lists,
//! report documents and the text produced by each subcommand.
//!
//! A `.cayley` file holds the order `n` on its first line, an optional
//! `names: a b c ...` line, then `n` rows of `n` whitespace-separated
//! 0-based indices. Row `i`, column `j` is `i∘j` (row = left factor).

pub mod catalog;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::group_kernel::{all_subgroups, GroupError, GroupTable, DEFAULT_ORDER_CAP};
use crate::morphisms::{enumerate_partial_homs, hom_anatomy, is_partial_hom, HomBudget, MorphismError, PartialHom};
use crate::partial_core::{supplements_among, Freeness, PartialError, PartialGroup};
use crate::substructures::{is_normal_partial, partial_quotient, partial_subgroups, PartialSubgroup, SubstructureError};
use crate::theorems::{
    enumerate_instances, first_iso_check, load_catalog, resolve_claims, run_claims, second_iso_check,
    third_iso_check, ClaimReport, InducedMap, InstanceSpec, KernelChoice, Status, Summary, SweepConfig,
    TheoremError, UnknownClaim,
};
use crate::witness::Check;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0:?} is not an element of the group")]
    BadElement(String),
    #[error("expected GROUP:SUPPORT:DEFECT, got {0:?}")]
    BadTriple(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Partial(#[from] PartialError),
    #[error(transparent)]
    Substructure(#[from] SubstructureError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error(transparent)]
    UnknownClaim(#[from] UnknownClaim),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Exit status for a command that ran to completion.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A catalog name, or `file:<path>` for a `.cayley` file.
pub fn resolve_group(spec: &str) -> Result<GroupTable, CliError> {
    match spec.strip_prefix("file:") {
        Some(path) => load_cayley(Path::new(path)),
        None => catalog::parse_catalog(spec),
    }
}

pub fn parse_cayley(text: &str) -> Result<GroupTable, CliError> {
    let err = |line: usize, col: usize, msg: String| CliError::Parse { line, col, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, first) = lines.next().ok_or_else(|| err(1, 1, "empty file".into()))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| err(1, 1, format!("expected the group order, got {:?}", first.trim())))?;
    if n == 0 {
        return Err(err(1, 1, "group order must be positive".into()));
    }
    let mut names = None;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if rows.is_empty() && names.is_none() {
            if let Some(rest) = line.trim_start().strip_prefix("names:") {
                names = Some(rest.split_whitespace().map(str::to_string).collect::<Vec<_>>());
                continue;
            }
        }
        if rows.len() == n {
            return Err(err(ln, 1, format!("more than {n} rows")));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in tokens(line) {
            let v: usize = tok
                .parse()
                .map_err(|_| err(ln, col, format!("expected an index, got {tok:?}")))?;
            if v >= n {
                return Err(err(ln, col, format!("entry {v} is not below {n}")));
            }
            row.push(v);
        }
        if row.len() != n {
            return Err(err(ln, line.len() + 1, format!("expected {n} entries, got {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(text.lines().count() + 1, 1, format!("expected {n} rows, got {}", rows.len())));
    }
    let g = GroupTable::from_rows(&rows)?;
    Ok(match names {
        Some(names) => g.with_names(names)?,
        None => g,
    })
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
}

pub fn render_cayley(g: &GroupTable) -> String {
    let mut out = format!("{}\n", g.order());
    if let Some(names) = g.names() {
        let _ = writeln!(out, "names: {}", names.join(" "));
    }
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn load_cayley(path: &Path) -> Result<GroupTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_cayley(&text)
}

pub fn save_cayley(g: &GroupTable, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, render_cayley(g)).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Comma-separated indices; element names are accepted as aliases, an index
/// takes precedence when a token is both.
pub fn parse_elements(g: &GroupTable, text: &str) -> Result<ElemSet, CliError> {
    let mut set = ElemSet::EMPTY;
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let a = match tok.parse::<usize>() {
            Ok(a) if a < g.order() => a,
            _ => g.lookup_name(tok).ok_or_else(|| CliError::BadElement(tok.to_string()))?,
        };
        set.insert(a);
    }
    Ok(set)
}

pub fn format_set(s: ElemSet) -> String {
    let parts: Vec<String> = s.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Parses `GROUP:SUPPORT:DEFECT`. The group part may itself contain `:`
/// (as in `file:path`).
pub fn parse_triple(text: &str, mode: Freeness) -> Result<(InstanceSpec, PartialGroup), CliError> {
    let mut parts = text.rsplitn(3, ':');
    let (defect, support, group) = match (parts.next(), parts.next(), parts.next()) {
        (Some(d), Some(s), Some(g)) => (d, s, g),
        _ => return Err(CliError::BadTriple(text.to_string())),
    };
    build_instance(group, support, defect, mode)
}

pub fn build_instance(
    group: &str,
    support: &str,
    defect: &str,
    mode: Freeness,
) -> Result<(InstanceSpec, PartialGroup), CliError> {
    let table = resolve_group(group)?;
    let spec = InstanceSpec::new(group, parse_elements(&table, support)?, parse_elements(&table, defect)?);
    let g = spec.build_in(Arc::new(table), mode)?;
    Ok((spec, g))
}

/// Lines `i=name` for tables whose names are not just their indices.
fn legend(g: &GroupTable) -> Option<String> {
    let names = g.names()?;
    if names.iter().enumerate().all(|(i, n)| *n == i.to_string()) {
        return None;
    }
    let parts: Vec<String> = names.iter().enumerate().map(|(i, n)| format!("{i}={n}")).collect();
    Some(format!("elements: {}\n", parts.join(" ")))
}

pub fn cmd_decompose(group: &str) -> Result<String, CliError> {
    let g = resolve_group(group)?;
    let subs = all_subgroups(&g, DEFAULT_ORDER_CAP)?;
    let mut out = format!("{group} (order {})\n", g.order());
    out.extend(legend(&g));
    for e in &subs {
        for d in supplements_among(&g, e, &subs) {
            let _ = writeln!(out, "E = {}  D~ = {}", format_set(e.set()), format_set(d.set()));
        }
    }
    Ok(out)
}

pub fn cmd_build(group: &str, support: &str, defect: &str, mode: Freeness) -> Result<String, CliError> {
    let (spec, g) = build_instance(group, support, defect, mode)?;
    let mut out = format!("partial group {spec}\n");
    out.extend(legend(g.parent()));
    let _ = writeln!(out, "support   {}", format_set(g.support()));
    let _ = writeln!(out, "defect    {}", format_set(g.defect()));
    match g.supplement() {
        Some(s) => {
            let _ = writeln!(out, "supplement {}", format_set(s.set()));
        }
        None => out.push_str("supplement none (weak freeness)\n"),
    }
    let _ = writeln!(out, "carrier   {} ({} elements)", format_set(g.carrier()), g.carrier().len());
    out.push_str("factorization a = x*d\n");
    for a in g.carrier() {
        let _ = writeln!(out, "  {a} = {}*{}", g.support_part(a), g.defect_part(a));
    }
    out.push_str("law a.b\n");
    let carrier = g.carrier().to_vec();
    let width = carrier.iter().map(|a| a.to_string().len()).max().unwrap_or(1);
    let _ = write!(out, "  {:>width$} |", ".");
    for &b in &carrier {
        let _ = write!(out, " {b:>width$}");
    }
    out.push('\n');
    for &a in &carrier {
        let _ = write!(out, "  {a:>width$} |");
        for &b in &carrier {
            let _ = write!(out, " {:>width$}", g.dot(a, b));
        }
        out.push('\n');
    }
    Ok(out)
}

/// The serialized result of a `check` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub config: SweepConfig,
    pub reports: Vec<ClaimReport>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.falsified > 0 {
            EXIT_FALSIFIED
        } else {
            EXIT_OK
        }
    }

    /// Summary line plus one line per falsified report.
    pub fn digest(&self) -> String {
        let mut out = String::new();
        for r in self.reports.iter().filter(|r| r.status == Status::Falsified) {
            let w = r.witness.as_ref().expect("falsified reports carry a witness");
            let _ = writeln!(out, "FALSIFIED {} on {}: {} at {:?}", r.claim, r.instance, w.detail, w.elements);
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{} reports: {} verified, {} falsified, {} skipped",
            self.reports.len(),
            s.verified,
            s.falsified,
            s.skipped
        );
        out
    }
}

/// Enumerates instances and runs the requested claims.
pub fn cmd_check<S: AsRef<str>>(claims: &[S], config: &SweepConfig) -> Result<ReportDocument, CliError> {
    let claims = resolve_claims(claims)?;
    let catalog = load_catalog(config)?;
    let instances = enumerate_instances(&catalog, config.max_order, config.max_defect, config.freeness)?;
    let reports = run_claims(&claims, &instances, config);
    Ok(ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        summary: Summary::of(&reports),
        reports,
    })
}

fn hom_line(f: &PartialHom<'_>) -> String {
    let maps: Vec<String> = f
        .source()
        .carrier()
        .iter()
        .map(|a| format!("{a}->{}", f.image(a)))
        .collect();
    let an = hom_anatomy(f);
    format!(
        "{}  Ker {}  K~ {}  Im {}",
        maps.join(" "),
        format_set(an.kernel),
        format_set(an.default_kernel),
        format_set(an.image)
    )
}

pub fn cmd_homs(from: &str, to: &str, budget: HomBudget, mode: Freeness) -> Result<String, CliError> {
    let (_, g1) = parse_triple(from, mode)?;
    let (_, g2) = parse_triple(to, mode)?;
    let homs = enumerate_partial_homs(&g1, &g2, budget)?;
    let mut out = format!("{} homomorphisms\n", homs.len());
    for f in &homs {
        let _ = writeln!(out, "{}", hom_line(f));
    }
    Ok(out)
}

pub fn cmd_quotient(instance: &str, normal: &str, mode: Freeness) -> Result<String, CliError> {
    let (spec, g) = parse_triple(instance, mode)?;
    let n = PartialSubgroup::new(&g, parse_elements(g.parent(), normal)?)?;
    let q = partial_quotient(&n)?;
    let mut out = format!("{spec} / {}\n", format_set(n.elements()));
    let k = q.group.order();
    for i in 0..k {
        let class: ElemSet = g.carrier().iter().filter(|&a| q.project(a) == i).collect();
        let _ = writeln!(out, "class {i}: {}  (coset {} of F)", format_set(class), format_set(q.group.cosets()[i]));
    }
    out.push_str("table\n");
    for i in 0..k {
        let row: Vec<String> = (0..k).map(|j| q.group.table().mul(i, j).to_string()).collect();
        let _ = writeln!(out, "  {}", row.join(" "));
    }
    Ok(out)
}

/// What `theorem` should check.
#[derive(Debug, Clone)]
pub enum TheoremArgs {
    First {
        from: String,
        to: String,
        images: Option<String>,
    },
    Second {
        instance: String,
        h: Option<String>,
        k: Option<String>,
    },
    Third {
        instance: String,
        k: Option<String>,
        n: Option<String>,
    },
}

fn verdict_line(out: &mut String, label: &str, check: &Check) -> bool {
    match check {
        Ok(()) => {
            let _ = writeln!(out, "VERIFIED  {label}");
            true
        }
        Err(ce) => {
            let _ = writeln!(out, "FALSIFIED {label}: {ce}");
            false
        }
    }
}

/// Runs one isomorphism theorem on the given configuration, or on every
/// admissible one when the optional parts are omitted.
pub fn cmd_theorem(args: &TheoremArgs, budget: HomBudget, mode: Freeness) -> Result<(String, i32), CliError> {
    let mut out = String::new();
    let mut ok = true;
    match args {
        TheoremArgs::First { from, to, images } => {
            let (_, g1) = parse_triple(from, mode)?;
            let (_, g2) = parse_triple(to, mode)?;
            let homs = match images {
                Some(text) => {
                    let tuple = text
                        .split(',')
                        .map(|t| {
                            let t = t.trim();
                            t.parse::<usize>()
                                .ok()
                                .filter(|&a| a < g2.parent().order())
                                .or_else(|| g2.parent().lookup_name(t))
                                .ok_or_else(|| CliError::BadElement(t.to_string()))
                        })
                        .collect::<Result<Vec<Elem>, _>>()?;
                    vec![is_partial_hom(&g1, &g2, &tuple).map_err(MorphismError::NotHom)?]
                }
                None => enumerate_partial_homs(&g1, &g2, budget)?,
            };
            for f in &homs {
                let check = first_iso_check(f, KernelChoice::Default, InducedMap::SupportPart);
                ok &= verdict_line(&mut out, &hom_line(f), &check);
            }
        }
        TheoremArgs::Second { instance, h, k } => {
            let (_, g) = parse_triple(instance, mode)?;
            for (h, k) in subgroup_pairs(&g, h.as_deref(), k.as_deref(), false)? {
                let (hs, ks) = (PartialSubgroup::new(&g, h)?, PartialSubgroup::new(&g, k)?);
                let check = second_iso_check(&hs, &ks)?;
                ok &= verdict_line(&mut out, &format!("H = {}  K = {}", format_set(h), format_set(k)), &check);
            }
        }
        TheoremArgs::Third { instance, k, n } => {
            let (_, g) = parse_triple(instance, mode)?;
            for (k, n) in subgroup_pairs(&g, k.as_deref(), n.as_deref(), true)? {
                let (ks, ns) = (PartialSubgroup::new(&g, k)?, PartialSubgroup::new(&g, n)?);
                let check = third_iso_check(&ks, &ns)?;
                ok &= verdict_line(&mut out, &format!("K = {}  N = {}", format_set(k), format_set(n)), &check);
            }
        }
    }
    if out.is_empty() {
        out.push_str("no admissible configurations\n");
    }
    Ok((out, if ok { EXIT_OK } else { EXIT_FALSIFIED }))
}

/// Explicit pair, or all pairs of partial subgroups with the second normal
/// (and, for `chain`, the first normal and containing the second).
fn subgroup_pairs(
    g: &PartialGroup,
    first: Option<&str>,
    second: Option<&str>,
    chain: bool,
) -> Result<Vec<(ElemSet, ElemSet)>, CliError> {
    match (first, second) {
        (Some(a), Some(b)) => Ok(vec![(parse_elements(g.parent(), a)?, parse_elements(g.parent(), b)?)]),
        (None, None) => {
            let subs = partial_subgroups(g, 8);
            let normal: Vec<ElemSet> = subs
                .iter()
                .copied()
                .filter(|&h| is_normal_partial(&PartialSubgroup::new(g, h).expect("swept")).is_normal())
                .collect();
            let left = if chain { &normal } else { &subs };
            Ok(left
                .iter()
                .flat_map(|&a| normal.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| !chain || b.is_subset(a))
                .collect())
        }
        _ => Err(CliError::Usage("give both subgroups or neither".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_z2() {
        let g = parse_cayley("2\n0 1\n1 0").unwrap();
        assert_eq!(g.rows(), catalog::cyclic(2).rows());
        assert!(g.names().is_none());
        assert_eq!(render_cayley(&parse_cayley("2\n0 1\n1 0\n").unwrap()), "2\n0 1\n1 0\n");
    }

    #[test]
    fn cayley_round_trip_catalog() {
        for (name, g) in catalog::default_catalog() {
            let text = render_cayley(&g);
            let back = parse_cayley(&text).unwrap();
            assert!(back == g, "{name}");
            assert_eq!(render_cayley(&back), text);
        }
    }

    #[test]
    fn cayley_errors() {
        let magma = "3\n0 1 2\n1 2 0\n2 0 0\n";
        assert!(matches!(
            parse_cayley(magma),
            Err(CliError::Group(GroupError::NotAssociative { .. }))
        ));
        assert!(matches!(
            parse_cayley("2\n0 1\n1 x\n"),
            Err(CliError::Parse { line: 3, col: 3, .. })
        ));
        assert!(matches!(parse_cayley("2\n0 1\n1 2\n"), Err(CliError::Parse { line: 3, col: 3, .. })));
        assert!(matches!(parse_cayley("2\n0 1\n"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_cayley("2\n0 1\n1\n"), Err(CliError::Parse { line: 3, .. })));
        assert!(matches!(parse_cayley("two\n"), Err(CliError::Parse { line: 1, col: 1, .. })));
    }

    #[test]
    fn save_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s3.cayley");
        let s3 = catalog::symmetric(3);
        save_cayley(&s3, &path).unwrap();
        let spec = format!("file:{}", path.display());
        assert!(resolve_group(&spec).unwrap() == s3);
        let (_, g) = parse_triple(&format!("{spec}:e,(123),(132):e,(12)"), Freeness::Strict).unwrap();
        assert_eq!(g.carrier().len(), 6);
    }

    #[test]
    fn elements_and_triples() {
        let z6 = catalog::cyclic(6);
        assert_eq!(parse_elements(&z6, "0, 3").unwrap().to_vec(), vec![0, 3]);
        assert!(parse_elements(&z6, "7").is_err());
        let (spec, g) = parse_triple("Z6:0,3:0,2", Freeness::Strict).unwrap();
        assert_eq!(spec.to_string(), "Z6:0,3:0,2");
        assert_eq!(g.carrier().to_vec(), vec![0, 2, 3, 5]);
        assert!(matches!(parse_triple("Z6:0,3", Freeness::Strict), Err(CliError::BadTriple(_))));
        assert!(matches!(
            parse_triple("Z6:0,3:0,1", Freeness::Strict),
            Err(CliError::Partial(PartialError::NotFree))
        ));
    }

    #[test]
    fn decompose_listings() {
        let z6 = cmd_decompose("Z6").unwrap();
        let pairs: Vec<&str> = z6.lines().skip(1).collect();
        assert_eq!(
            pairs,
            [
                "E = {0}  D~ = {0,1,2,3,4,5}",
                "E = {0,3}  D~ = {0,2,4}",
                "E = {0,2,4}  D~ = {0,3}",
                "E = {0,1,2,3,4,5}  D~ = {0}",
            ]
        );
        assert_eq!(cmd_decompose("Z2").unwrap().lines().count(), 3);
        let s3 = cmd_decompose("S3").unwrap();
        assert_eq!(s3.lines().filter(|l| l.starts_with("E = {0,3,4}")).count(), 3);
    }

    #[test]
    fn build_listing() {
        let out = cmd_build("Z6", "0,3", "0,2", Freeness::Strict).unwrap();
        assert!(out.contains("carrier   {0,2,3,5} (4 elements)"));
        assert_eq!(out.lines().filter(|l| l.contains(" | ")).count(), 5);
        let plain = cmd_build("Z6", "0,1,2,3,4,5", "0", Freeness::Strict).unwrap();
        assert!(plain.contains("(6 elements)"));
    }

    #[test]
    fn homs_listing() {
        let out = cmd_homs("Z6:0,3:0,2", "Z6:0,3:0,2", HomBudget::default(), Freeness::Strict).unwrap();
        assert!(out.starts_with("8 homomorphisms"));
        assert!(out.contains("0->0 2->2 3->3 5->5 "));
        assert!(out.contains("0->0 2->0 3->3 5->3 "));
        let to_trivial = cmd_homs("Z6:0,3:0,2", "Z2:0:0", HomBudget::default(), Freeness::Strict).unwrap();
        assert!(to_trivial.starts_with("1 homomorphisms"));
        let from_trivial = cmd_homs("Z2:0:0", "Z6:0,3:0,2", HomBudget::default(), Freeness::Strict).unwrap();
        assert!(from_trivial.starts_with("1 homomorphisms"));
    }

    #[test]
    fn quotient_listing() {
        let out = cmd_quotient("Z6:0,3:0,2", "0,2", Freeness::Strict).unwrap();
        assert!(out.contains("class 0: {0,2}"));
        assert!(out.contains("class 1: {3,5}"));
    }

    #[test]
    fn theorem_commands() {
        let b = HomBudget::default();
        let first = TheoremArgs::First {
            from: "Z6:0,3:0,2".into(),
            to: "Z6:0,3:0,2".into(),
            images: None,
        };
        let (out, code) = cmd_theorem(&first, b, Freeness::Strict).unwrap();
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.lines().count(), 8);
        let third = TheoremArgs::Third {
            instance: "Z6:0,3:0,2".into(),
            k: None,
            n: None,
        };
        assert_eq!(cmd_theorem(&third, b, Freeness::Strict).unwrap().1, EXIT_OK);
        let bad = TheoremArgs::Second {
            instance: "Z6:0,3:0,2".into(),
            h: Some("0".into()),
            k: None,
        };
        assert!(matches!(cmd_theorem(&bad, b, Freeness::Strict), Err(CliError::Usage(_))));
    }

    #[test]
    fn check_document() {
        let config = SweepConfig {
            max_order: 2,
            ..SweepConfig::default()
        };
        let doc = cmd_check(&["P3.2-assoc"], &config).unwrap();
        assert_eq!(doc.summary.verified, 3);
        assert_eq!(doc.exit_code(), EXIT_OK);
        let json = doc.to_json().unwrap();
        assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
        assert!(!json.contains("elapsed_ms"));
        assert!(matches!(cmd_check(&["nope"], &config), Err(CliError::UnknownClaim(_))));
    }
}
