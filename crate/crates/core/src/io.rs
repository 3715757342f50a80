//! JSON file formats for groups, braces, solutions and brace catalogs.
//!
//! Solutions use `sigma[x][y] = σ_x(y)` and `tau[y][x] = τ_y(x)`: the `tau`
//! table is indexed by the second argument of `r` first.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::brace::{validate_brace, BraceError, SkewBrace};
use crate::enumeration::{BraceCatalog, Provenance};
use crate::group::{identify_group, validate_group, GroupError, GroupTable};
use crate::ybe::{validate_solution, Solution, SolutionError};
use crate::TOOL_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    pub sigma: Vec<Vec<usize>>,
    pub tau: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputFile {
    Group(GroupFile),
    Brace(BraceFile),
    Solution(SolutionFile),
}

/// Problems with the file itself, as opposed to the mathematics in it.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unrecognised file: expected keys `table`, `add`+`circ`, or `sigma`+`tau`")]
    UnknownFormat,
    #[error("declared size {declared} but the tables have {actual} rows")]
    SizeMismatch { declared: usize, actual: usize },
}

impl InputFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InputFile::Group(_) => "group",
            InputFile::Brace(_) => "brace",
            InputFile::Solution(_) => "solution",
        }
    }
}

/// Detects the file type from its keys.
pub fn parse_input(text: &str) -> Result<InputFile, LoadError> {
    let v: Value = serde_json::from_str(text)?;
    let has = |k: &str| v.get(k).is_some();
    let file = if has("sigma") && has("tau") {
        InputFile::Solution(serde_json::from_value(v)?)
    } else if has("add") && has("circ") {
        InputFile::Brace(serde_json::from_value(v)?)
    } else if has("table") {
        InputFile::Group(serde_json::from_value(v)?)
    } else {
        return Err(LoadError::UnknownFormat);
    };
    let (declared, actual) = match &file {
        InputFile::Group(g) => (g.order, g.table.len()),
        InputFile::Brace(b) => (b.order, b.add.len()),
        InputFile::Solution(s) => (s.size, s.sigma.len()),
    };
    if let Some(declared) = declared.filter(|&d| d != actual) {
        return Err(LoadError::SizeMismatch { declared, actual });
    }
    Ok(file)
}

pub fn read_input(path: &Path) -> Result<(InputFile, Vec<u8>), LoadError> {
    let bytes = fs::read(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    let text = String::from_utf8_lossy(&bytes);
    Ok((parse_input(&text)?, bytes))
}

/// Label that acts as a two-sided identity in raw rows.
fn find_identity(rows: &[Vec<usize>]) -> Option<usize> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return None;
    }
    (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
}

/// Exchanges labels `0` and `e`.
fn swap_labels(rows: &[Vec<usize>], e: usize) -> Vec<Vec<usize>> {
    let s = |x: usize| if x == 0 { e } else if x == e { 0 } else { x };
    let n = rows.len();
    (0..n).map(|i| (0..n).map(|j| s(rows[s(i)][s(j)])).collect()).collect()
}

/// Rows with a well-formed identity elsewhere than 0 get labels `0` and the
/// identity exchanged; returns the former identity label in that case.
fn normalize(rows: &[Vec<usize>]) -> (Vec<Vec<usize>>, Option<usize>) {
    let in_range = rows.iter().all(|r| r.iter().all(|&x| x < rows.len()));
    match find_identity(rows).filter(|_| in_range) {
        Some(e) if e != 0 => (swap_labels(rows, e), Some(e)),
        _ => (rows.to_vec(), None),
    }
}

/// A validated value together with the identity label it was moved from.
#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub value: T,
    pub identity_relabelled_from: Option<usize>,
}

pub fn load_group(f: &GroupFile) -> Result<Loaded<GroupTable>, GroupError> {
    let (rows, moved) = normalize(&f.table);
    Ok(Loaded { value: validate_group(&rows)?, identity_relabelled_from: moved })
}

pub fn load_brace(f: &BraceFile) -> Result<Loaded<SkewBrace>, BraceError> {
    let (add, circ) = match (find_identity(&f.add), find_identity(&f.circ)) {
        (Some(e1), Some(e2)) if e1 != e2 => return Err(BraceError::IdentityMismatch { add: e1, circ: e2 }),
        _ => (&f.add, &f.circ),
    };
    let (add, moved) = normalize(add);
    let circ = match moved {
        Some(e) => swap_labels(circ, e),
        None => circ.clone(),
    };
    let add = validate_group(&add).map_err(|source| BraceError::Group { which: "additive", source })?;
    let circ = validate_group(&circ).map_err(|source| BraceError::Group { which: "multiplicative", source })?;
    Ok(Loaded { value: validate_brace(add, circ)?, identity_relabelled_from: moved })
}

pub fn load_solution(f: &SolutionFile) -> Result<Solution, SolutionError> {
    validate_solution(f.sigma.clone(), f.tau.clone())
}

impl GroupFile {
    pub fn from_table(g: &GroupTable) -> GroupFile {
        GroupFile { order: Some(g.order()), table: g.rows() }
    }
}

impl BraceFile {
    pub fn from_brace(a: &SkewBrace) -> BraceFile {
        BraceFile { order: Some(a.order()), add: a.additive().rows(), circ: a.multiplicative().rows() }
    }
}

impl SolutionFile {
    pub fn from_solution(s: &Solution) -> SolutionFile {
        SolutionFile { size: Some(s.size()), sigma: s.sigma_rows().to_vec(), tau: s.tau_rows().to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub additive: Option<String>,
    pub multiplicative: Option<String>,
    pub left_brace: bool,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub order: usize,
    pub count: usize,
    pub provenance: Provenance,
    pub tool_version: String,
    pub entries: Vec<ManifestEntry>,
}

pub fn catalog_manifest(cat: &BraceCatalog) -> Manifest {
    let entries = cat
        .entries
        .iter()
        .enumerate()
        .map(|(i, a)| ManifestEntry {
            file: format!("brace_{}_{:03}.json", cat.order, i),
            additive: identify_group(a.additive()),
            multiplicative: identify_group(a.multiplicative()),
            left_brace: a.is_left_brace(),
            trivial: a.is_trivial(),
        })
        .collect();
    Manifest {
        order: cat.order,
        count: cat.entries.len(),
        provenance: cat.provenance,
        tool_version: TOOL_VERSION.to_string(),
        entries,
    }
}

/// Writes one brace file per entry plus `manifest.json` into `dir`.
pub fn write_catalog(cat: &BraceCatalog, dir: &Path) -> std::io::Result<Manifest> {
    fs::create_dir_all(dir)?;
    let manifest = catalog_manifest(cat);
    for (a, e) in cat.entries.iter().zip(&manifest.entries) {
        fs::write(dir.join(&e.file), serde_json::to_vec(&BraceFile::from_brace(a))?)?;
    }
    fs::write(dir.join("manifest.json"), serde_json::to_vec_pretty(&manifest)?)?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::group::cyclic;

    #[test]
    fn detects_kinds() {
        assert_eq!(parse_input(r#"{"table": [[0]]}"#).unwrap().kind(), "group");
        assert_eq!(parse_input(r#"{"order": 1, "add": [[0]], "circ": [[0]]}"#).unwrap().kind(), "brace");
        assert_eq!(parse_input(r#"{"size": 1, "sigma": [[0]], "tau": [[0]]}"#).unwrap().kind(), "solution");
        assert!(matches!(parse_input(r#"{"rows": []}"#), Err(LoadError::UnknownFormat)));
        assert!(matches!(parse_input("{"), Err(LoadError::Json(_))));
        assert!(matches!(
            parse_input(r#"{"order": 2, "table": [[0]]}"#),
            Err(LoadError::SizeMismatch { declared: 2, actual: 1 })
        ));
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // Z/3 written with identity at label 2
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = load_group(&GroupFile { order: None, table }).unwrap();
        assert_eq!(g.identity_relabelled_from, Some(2));
        assert!(crate::group::are_isomorphic(&g.value, &cyclic(3)).is_some());
        let plain = load_group(&GroupFile::from_table(&cyclic(3))).unwrap();
        assert_eq!(plain.identity_relabelled_from, None);
    }

    #[test]
    fn brace_identities_must_agree() {
        let c2 = vec![vec![0, 1], vec![1, 0]];
        let shifted = vec![vec![1, 0], vec![0, 1]];
        let err = load_brace(&BraceFile { order: None, add: c2, circ: shifted }).unwrap_err();
        assert_eq!(err, BraceError::IdentityMismatch { add: 0, circ: 1 });
    }

    #[test]
    fn brace_file_round_trip() {
        let a = trivial_brace(cyclic(4));
        let f = BraceFile::from_brace(&a);
        let text = serde_json::to_string(&f).unwrap();
        let InputFile::Brace(back) = parse_input(&text).unwrap() else { panic!() };
        assert_eq!(load_brace(&back).unwrap().value, a);
    }
}
