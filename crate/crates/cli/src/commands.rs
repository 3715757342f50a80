use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use skb_core::analysis::analyze;
use skb_core::brace::{strong_left_ideals, trivial_brace, BraceError};
use skb_core::enumeration::{braces_of_order, catalog_query, EnumerationError};
use skb_core::factorization::{
    check_class_four, check_product_sets, find_factorizations, verify_ito, FactorizationQuery,
};
use skb_core::group::GroupError;
use skb_core::io::{
    catalog_manifest, load_brace, load_group, load_solution, read_input, write_catalog, InputFile, LoadError,
    SolutionFile,
};
use skb_core::report::Check;
use skb_core::suites::{axioms, run_suite, run_suite_on, Suite, UnknownSuite};
use skb_core::ybe::{
    decomposition_from_strong_left_ideal, is_decomposable, multipermutation_level, retraction,
    solution_from_brace, Solution, SolutionError,
};
use skb_core::SkewBrace;

use crate::report::{Body, InputDigest, Verdict};

/// Failures that are not mathematical verdicts; they exit with status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    WrongKind(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    UnknownSuite(#[from] UnknownSuite),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Load(LoadError::Io { .. }) | CliError::Write { .. } => "io",
            CliError::Load(_) | CliError::Malformed(_) => "input",
            CliError::WrongKind(_) => "wrong-input-kind",
            CliError::Enumeration(EnumerationError::OrderCapExceeded { .. }) => "order-cap-exceeded",
            CliError::Enumeration(_) => "enumeration",
            CliError::UnknownSuite(_) => "unknown-suite",
            CliError::Precondition(_) => "precondition",
        }
    }
}

/// The input file after validation, or the failed check that rejected it.
enum Validated {
    Group(SkewBrace),
    Brace(SkewBrace),
    Solution(Solution),
    Rejected(Check),
}

struct Loaded {
    value: Validated,
    relabelled_from: Option<usize>,
    kind: &'static str,
}

fn load(path: &Path, body: &mut Body) -> Result<Loaded, CliError> {
    let (file, bytes) = read_input(path)?;
    body.inputs.push(InputDigest {
        path: path.display().to_string(),
        kind: file.kind(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    });
    let kind = file.kind();
    let (value, relabelled_from) = match &file {
        InputFile::Group(g) => match load_group(g) {
            Ok(l) => (Validated::Group(trivial_brace(l.value)), l.identity_relabelled_from),
            Err(e) => (Validated::Rejected(group_check("group_axioms", &e)?), None),
        },
        InputFile::Brace(b) => match load_brace(b) {
            Ok(l) => (Validated::Brace(l.value), l.identity_relabelled_from),
            Err(e) => (Validated::Rejected(brace_check(&e)?), None),
        },
        InputFile::Solution(s) => match load_solution(s) {
            Ok(s) => (Validated::Solution(s), None),
            Err(e) => (Validated::Rejected(solution_check(&e)?), None),
        },
    };
    Ok(Loaded { value, relabelled_from, kind })
}

/// Group failures as a witnessed check; shape problems are input errors.
fn group_check(name: &str, e: &GroupError) -> Result<Check, CliError> {
    let witness = match *e {
        GroupError::Empty | GroupError::NotSquare { .. } | GroupError::EntryOutOfRange { .. } => {
            return Err(CliError::Malformed(e.to_string()))
        }
        GroupError::NotLatinSquare { row, col, value } => vec![row, col, value],
        GroupError::NoIdentityAtZero(x) => vec![x],
        GroupError::NonAssociative { a, b, c } => vec![a, b, c],
        GroupError::MissingInverse(x) => vec![x],
        _ => return Err(CliError::Malformed(e.to_string())),
    };
    Ok(Check::fail(name, witness, e.to_string()))
}

fn brace_check(e: &BraceError) -> Result<Check, CliError> {
    match *e {
        BraceError::Group { which, ref source } => group_check(&format!("{which}_group_axioms"), source),
        BraceError::CompatibilityFailure { a, b, c } => Ok(Check::fail("compatibility", vec![a, b, c], e.to_string())),
        BraceError::IdentityMismatch { add, circ } => Ok(Check::fail("shared_identity", vec![add, circ], e.to_string())),
        _ => Err(CliError::Malformed(e.to_string())),
    }
}

fn solution_check(e: &SolutionError) -> Result<Check, CliError> {
    match *e {
        SolutionError::NotBijectiveR { x, y } => Ok(Check::fail("r_bijective", vec![x, y], e.to_string())),
        SolutionError::BraidFailure { x, y, z } => Ok(Check::fail("braid_relation", vec![x, y, z], e.to_string())),
        _ => Err(CliError::Malformed(e.to_string())),
    }
}

fn load_brace_like(path: &Path, body: &mut Body, command: &str) -> Result<Option<(SkewBrace, Option<usize>)>, CliError> {
    let l = load(path, body)?;
    match l.value {
        Validated::Group(a) | Validated::Brace(a) => Ok(Some((a, l.relabelled_from))),
        Validated::Rejected(c) => {
            body.push(c);
            Ok(None)
        }
        Validated::Solution(_) => Err(CliError::WrongKind(format!("{command} expects a brace or group file"))),
    }
}

pub fn validate(path: &Path) -> Result<Body, CliError> {
    let mut body = Body::default();
    let l = load(path, &mut body)?;
    let mut result = json!({ "kind": l.kind });
    if let Some(e) = l.relabelled_from {
        result["identity_relabelled_from"] = json!(e);
    }
    match l.value {
        Validated::Rejected(c) => body.push(c),
        Validated::Group(a) => {
            body.push(Check::pass("group_axioms"));
            result["order"] = json!(a.order());
            result["abelian"] = json!(a.is_left_brace());
        }
        Validated::Brace(a) => {
            body.push(Check::pass("compatibility"));
            body.push_report(axioms(&a), None);
            result["order"] = json!(a.order());
            result["left_brace"] = json!(a.is_left_brace());
            result["trivial"] = json!(a.is_trivial());
        }
        Validated::Solution(s) => {
            body.push(Check::pass("braid_relation"));
            result["size"] = json!(s.size());
            result["nondegenerate"] = json!(s.is_nondegenerate());
            result["involutive"] = json!(s.is_involutive());
        }
    }
    body.result = result;
    Ok(body)
}

pub fn analyze_file(path: &Path) -> Result<Body, CliError> {
    let mut body = Body::default();
    if let Some((a, moved)) = load_brace_like(path, &mut body, "analyze")? {
        let mut result = serde_json::to_value(analyze(&a)).expect("serializable");
        if let Some(e) = moved {
            result["identity_relabelled_from"] = json!(e);
        }
        body.result = result;
    }
    Ok(body)
}

pub struct FactorizeOpts {
    pub strong: bool,
    pub trivial: bool,
    pub allow_improper: bool,
    pub verify_ito: bool,
    pub verify_class4: bool,
}

pub fn factorize(path: &Path, o: &FactorizeOpts) -> Result<Body, CliError> {
    let mut body = Body::default();
    let Some((a, _)) = load_brace_like(path, &mut body, "factorize")? else {
        return Ok(body);
    };
    let q = FactorizationQuery {
        strong: (o.strong, o.strong),
        trivial: (o.trivial, o.trivial),
        allow_improper: o.allow_improper,
    };
    let found = find_factorizations(&a, &q);
    for f in &found {
        let ctx = format!("B={:?} C={:?}", f.b.elements(), f.c.elements());
        body.verdicts.push(Verdict::in_context(check_product_sets(&a, f), ctx.clone()));
        if !f.is_trivial_trivial() {
            continue;
        }
        if o.verify_ito {
            body.push_report(verify_ito(&a, f).expect("trivial factors"), Some(&ctx));
        }
        if o.verify_class4 {
            for g in [f.clone(), f.swapped()] {
                if g.b_strong && (g.b != g.c || g == *f) {
                    let ctx = format!("B={:?} C={:?}", g.b.elements(), g.c.elements());
                    body.push_report(check_class_four(&a, &g).expect("preconditions hold"), Some(&ctx));
                }
            }
        }
    }
    body.result = json!({ "count": found.len(), "factorizations": found });
    Ok(body)
}

pub struct SolutionOpts {
    pub export: bool,
    pub retract: bool,
    pub level: bool,
    pub decompose: bool,
}

pub fn solution(path: &Path, o: &SolutionOpts) -> Result<Body, CliError> {
    let mut body = Body::default();
    let l = load(path, &mut body)?;
    let (s, brace) = match l.value {
        Validated::Rejected(c) => {
            body.push(c);
            return Ok(body);
        }
        Validated::Solution(s) => (s, None),
        Validated::Group(a) | Validated::Brace(a) => (solution_from_brace(&a), Some(a)),
    };
    let mut result = json!({
        "size": s.size(),
        "nondegenerate": s.is_nondegenerate(),
        "involutive": s.is_involutive(),
    });
    if o.export {
        result["solution"] = serde_json::to_value(SolutionFile::from_solution(&s)).expect("serializable");
    }
    if o.retract {
        let r = retraction(&s).map_err(|e| CliError::Precondition(e.to_string()))?;
        result["retraction"] = json!({
            "class_of": r.class_of,
            "representatives": r.representatives,
            "solution": SolutionFile::from_solution(&r.solution),
        });
    }
    if o.level {
        let v = multipermutation_level(&s, s.size()).map_err(|e| CliError::Precondition(e.to_string()))?;
        result["level"] = serde_json::to_value(v).expect("serializable");
    }
    if o.decompose {
        let mut from_ideals = Vec::new();
        if let Some(a) = &brace {
            for i in strong_left_ideals(a).into_iter().filter(|i| !i.is_zero() && !i.is_full()) {
                let ctx = format!("I={:?}", i.elements());
                let c = match decomposition_from_strong_left_ideal(a, &i) {
                    Ok(d) => {
                        from_ideals.push(d);
                        Check::pass("strong_left_ideal_decomposes")
                    }
                    Err(SolutionError::DecompositionFailure { x, y }) => {
                        Check::fail("strong_left_ideal_decomposes", vec![x, y], "pair lands in the wrong block")
                    }
                    Err(e) => Check::fail("strong_left_ideal_decomposes", i.elements().to_vec(), e.to_string()),
                };
                body.verdicts.push(Verdict::in_context(c, ctx));
            }
        }
        let orbit = is_decomposable(&s);
        if let Some(d) = &orbit {
            body.push(Check::from_result(
                "orbit_decomposition",
                d.first_violation(&s).map_or(Ok(()), |(x, y)| Err((vec![x, y], "pair lands in the wrong block".into()))),
            ));
        }
        result["decompositions"] = json!(from_ideals);
        result["orbit_decomposition"] = json!(orbit);
    }
    body.result = result;
    Ok(body)
}

pub struct EnumerateOpts {
    pub oracle_check: bool,
    pub out: Option<PathBuf>,
    pub filter: Option<String>,
}

pub fn enumerate(n: usize, o: &EnumerateOpts) -> Result<Body, CliError> {
    let mut body = Body::default();
    let cat = braces_of_order(n)?;
    let manifest = catalog_manifest(&cat);
    let mut result = serde_json::to_value(&manifest).expect("serializable");
    if let Some(desc) = &o.filter {
        let hits = catalog_query(&cat, desc)?;
        let files: Vec<&str> = cat
            .entries
            .iter()
            .zip(&manifest.entries)
            .filter(|(a, _)| hits.iter().any(|h| std::ptr::eq(*h, *a)))
            .map(|(_, e)| e.file.as_str())
            .collect();
        result["matches"] = json!(files);
    }
    if o.oracle_check {
        let outcome = run_suite_on(Suite::Enumeration, &cat, true)?;
        push_outcome(&mut body, &outcome.failures, "oracle_matches_catalog");
    }
    if let Some(dir) = &o.out {
        write_catalog(&cat, dir).map_err(|source| CliError::Write { path: dir.display().to_string(), source })?;
        result["written_to"] = json!(dir.display().to_string());
    }
    body.result = result;
    Ok(body)
}

fn push_outcome(body: &mut Body, failures: &[skb_core::suites::SuiteFailure], pass_name: &str) {
    if failures.is_empty() {
        body.push(Check::pass(pass_name));
    }
    for f in failures {
        let ctx = if f.context.is_empty() {
            format!("entry {}", f.entry)
        } else {
            format!("entry {}: {}", f.entry, f.context)
        };
        body.verdicts.push(Verdict::in_context(f.check.clone(), ctx));
    }
}

pub fn suite(name: &str, n: usize, keep_going: bool) -> Result<Body, CliError> {
    let mut body = Body::default();
    let suite: Suite = name.parse()?;
    let outcome = run_suite(suite, n, keep_going)?;
    push_outcome(&mut body, &outcome.failures, suite.name());
    let mut result: Value = serde_json::to_value(&outcome).expect("serializable");
    if let Some(m) = result.as_object_mut() {
        m.remove("failures");
    }
    body.result = result;
    Ok(body)
}
