//! Manifest-driven corpus verification.
//!
//! A manifest is a TSV file with one row per tracked declaration:
//!
//! ```text
//! # name <TAB> file <TAB> comma-separated axiom dependencies (`-` if none)
//! trans <TAB> prelude.tt <TAB> -
//! classext <TAB> zac.tt <TAB> UIP_AX,ZAC
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. A declaration is
//! expected to be an `axiom` exactly when its dependency set is its own
//! name alone; everything else must be a `def`. Verification compares,
//! for every row, the declaration's existence, the file it was declared
//! in, its kind, and its exact axiom dependency set.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use crate::kernel::GlobalEnv;
use crate::surface::DeclKind;

/// One row of a manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub axioms: BTreeSet<String>,
    /// 1-based line number in the manifest, for error reporting.
    pub line: usize,
}

impl ManifestEntry {
    /// The declaration kind this row implies.
    pub fn expected_kind(&self) -> DeclKind {
        if self.axioms.len() == 1 && self.axioms.contains(&self.name) {
            DeclKind::Axiom
        } else {
            DeclKind::Def
        }
    }
}

/// A malformed manifest (I/O-level failure: exit code 2 territory).
#[derive(Debug, Clone)]
pub struct ManifestError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ManifestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "manifest line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ManifestError {}

/// Parse a manifest from source text.
pub fn parse_manifest(src: &str) -> Result<Vec<ManifestEntry>, ManifestError> {
    let mut entries: Vec<ManifestEntry> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for (i, raw_line) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(ManifestError {
                line: line_no,
                message: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        }
        let (name, file, axioms_field) = (fields[0].trim(), fields[1].trim(), fields[2].trim());
        if name.is_empty() || file.is_empty() || axioms_field.is_empty() {
            return Err(ManifestError { line: line_no, message: "empty field".to_string() });
        }
        if !seen.insert(name.to_string()) {
            return Err(ManifestError {
                line: line_no,
                message: format!("duplicate entry for `{name}`"),
            });
        }
        let axioms = if axioms_field == "-" {
            BTreeSet::new()
        } else {
            axioms_field.split(',').map(|s| s.trim().to_string()).collect()
        };
        entries.push(ManifestEntry {
            name: name.to_string(),
            file: file.to_string(),
            axioms,
            line: line_no,
        });
    }
    Ok(entries)
}

/// One discrepancy between the manifest and the checked declarations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    /// The manifest names a declaration that was never checked. This is a
    /// checking failure (the corpus is incomplete), not a mere mismatch.
    MissingDecl { name: String, file: String },
    AxiomMismatch { name: String, expected: BTreeSet<String>, actual: BTreeSet<String> },
    KindMismatch { name: String, expected: DeclKind, actual: DeclKind },
    FileMismatch { name: String, expected: String, actual: String },
}

impl Problem {
    pub fn name(&self) -> &str {
        match self {
            Problem::MissingDecl { name, .. }
            | Problem::AxiomMismatch { name, .. }
            | Problem::KindMismatch { name, .. }
            | Problem::FileMismatch { name, .. } => name,
        }
    }

    /// Is this a missing declaration (as opposed to a mismatch)?
    pub fn is_missing(&self) -> bool {
        matches!(self, Problem::MissingDecl { .. })
    }
}

fn fmt_axioms(s: &BTreeSet<String>) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter().cloned().collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::MissingDecl { name, file } => {
                write!(f, "manifest: `{name}` ({file}) is not among the checked declarations")
            }
            Problem::AxiomMismatch { name, expected, actual } => write!(
                f,
                "manifest: `{name}` should depend on axioms `{}` but depends on `{}`",
                fmt_axioms(expected),
                fmt_axioms(actual)
            ),
            Problem::KindMismatch { name, expected, actual } => {
                write!(f, "manifest: `{name}` should be declared `{expected}` but is `{actual}`")
            }
            Problem::FileMismatch { name, expected, actual } => {
                write!(f, "manifest: `{name}` should be declared in `{expected}` but is in `{actual}`")
            }
        }
    }
}

/// The final file-name component of a path string, for comparing a
/// declaration's recorded source against a manifest's file column.
fn base_name(path: &str) -> &str {
    Path::new(path).file_name().and_then(|s| s.to_str()).unwrap_or(path)
}

/// Compare every manifest entry against the declarations in `genv`,
/// collecting all discrepancies rather than stopping at the first.
pub fn verify_manifest(genv: &GlobalEnv, entries: &[ManifestEntry]) -> Vec<Problem> {
    let mut problems = Vec::new();
    for e in entries {
        let decl = match genv.get(&e.name) {
            Some(d) => d,
            None => {
                problems.push(Problem::MissingDecl { name: e.name.clone(), file: e.file.clone() });
                continue;
            }
        };
        let actual_file = base_name(&decl.file).to_string();
        if actual_file != e.file {
            problems.push(Problem::FileMismatch {
                name: e.name.clone(),
                expected: e.file.clone(),
                actual: actual_file,
            });
        }
        let actual_kind = decl.kind;
        if actual_kind != e.expected_kind() {
            problems.push(Problem::KindMismatch {
                name: e.name.clone(),
                expected: e.expected_kind(),
                actual: actual_kind,
            });
        }
        let actual: BTreeSet<String> = decl.axioms.iter().map(|s| s.to_string()).collect();
        if actual != e.axioms {
            problems.push(Problem::AxiomMismatch {
                name: e.name.clone(),
                expected: e.axioms.clone(),
                actual,
            });
        }
    }
    problems
}

/// The manifest's files in first-appearance order: the order the corpus
/// must be loaded in.
pub fn manifest_file_order(entries: &[ManifestEntry]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for e in entries {
        if !out.iter().any(|f| f == &e.file) {
            out.push(e.file.clone());
        }
    }
    out
}

/// The corpus directory in this source tree. Intended for tests and
/// examples; the command-line tool always takes explicit paths.
pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").canonicalize().unwrap_or_else(|_| {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_comments_and_blanks() {
        let src = "# comment\n\nfoo\t01_a.tt\t-\nbar\t01_a.tt\tAX1,AX2\nAX1\t01_a.tt\tAX1\n";
        let entries = parse_manifest(src).unwrap();
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[0].name, "foo");
        assert!(entries[0].axioms.is_empty());
        assert_eq!(entries[0].expected_kind(), DeclKind::Def);
        assert_eq!(entries[1].axioms.len(), 2);
        assert_eq!(entries[1].expected_kind(), DeclKind::Def);
        assert_eq!(entries[2].expected_kind(), DeclKind::Axiom);
        assert_eq!(manifest_file_order(&entries), vec!["01_a.tt"]);
    }

    #[test]
    fn rejects_malformed_rows() {
        assert!(parse_manifest("only_two_fields\tx.tt\n").is_err());
        assert!(parse_manifest("a\tx.tt\t-\na\tx.tt\t-\n").is_err());
        assert!(parse_manifest("a\tx.tt\t\n").is_err());
    }

    #[test]
    fn verifies_against_a_small_environment() {
        let mut g = GlobalEnv::new();
        g.load_source("dir/01_a.tt", "axiom AX : U 0; def d : U 1 := AX -> AX;").unwrap();
        let ok = parse_manifest("AX\t01_a.tt\tAX\nd\t01_a.tt\tAX\n").unwrap();
        assert!(verify_manifest(&g, &ok).is_empty());

        let bad = parse_manifest("AX\t01_a.tt\tAX\nd\t02_b.tt\t-\nghost\t01_a.tt\t-\n").unwrap();
        let problems = verify_manifest(&g, &bad);
        assert_eq!(problems.len(), 3);
        assert!(problems.iter().any(|p| matches!(p, Problem::FileMismatch { name, .. } if name == "d")));
        assert!(problems.iter().any(|p| matches!(p, Problem::AxiomMismatch { name, .. } if name == "d")));
        assert!(problems.iter().any(|p| p.is_missing() && p.name() == "ghost"));
    }
}
