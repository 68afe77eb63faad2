//! The `tcat` command-line interface.
//!
//! ```text
//! tcat check <file>... [--manifest <path>] [--forbid-axioms]
//! tcat axioms <file>... <name>
//! tcat normalize <file>... <name>
//! ```
//!
//! Exit codes: 0 success, 1 checking failure (type errors, missing
//! declarations, forbidden axioms), 2 parse or input error (unreadable
//! files, lexical/syntax errors, malformed manifests), 3 manifest
//! mismatch, 4 usage error.

use std::collections::BTreeSet;

use crate::corpus::{parse_manifest, verify_manifest, ManifestEntry};
use crate::kernel::{normalize, print_core, GlobalEnv, KernelError};
use crate::surface::DeclKind;

const USAGE: &str = "usage: tcat <command> ...

commands:
  tcat check <file>... [--manifest <path>] [--forbid-axioms]
      Parse and type-check files in order; with --manifest, verify each
      listed declaration's file, kind, and axiom dependencies.
  tcat axioms <file>... <name>
      Print the axioms `name` transitively depends on, one per line.
  tcat normalize <file>... <name>
      Print the normal form of `name`'s body (for an axiom, of its type).

exit codes: 0 success, 1 checking failure, 2 parse/input error,
            3 manifest mismatch, 4 usage error";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Check { files: Vec<String>, manifest: Option<String>, forbid_axioms: bool },
    Axioms { files: Vec<String>, name: String },
    Normalize { files: Vec<String>, name: String },
}

/// Parse command-line arguments (without the program name).
pub fn parse_args(args: &[String]) -> Result<Command, String> {
    let (cmd, rest) = match args.split_first() {
        Some(x) => x,
        None => return Err("missing command".to_string()),
    };
    match cmd.as_str() {
        "check" => {
            let mut files = Vec::new();
            let mut manifest = None;
            let mut forbid_axioms = false;
            let mut i = 0;
            while i < rest.len() {
                let a = &rest[i];
                if a == "--forbid-axioms" {
                    forbid_axioms = true;
                } else if a == "--manifest" {
                    i += 1;
                    match rest.get(i) {
                        Some(v) => manifest = Some(v.clone()),
                        None => return Err("--manifest needs a path".to_string()),
                    }
                } else if let Some(v) = a.strip_prefix("--manifest=") {
                    manifest = Some(v.to_string());
                } else if a.starts_with("--") {
                    return Err(format!("unknown option `{a}`"));
                } else {
                    files.push(a.clone());
                }
                i += 1;
            }
            if files.is_empty() {
                return Err("`check` needs at least one file".to_string());
            }
            Ok(Command::Check { files, manifest, forbid_axioms })
        }
        "axioms" | "normalize" => {
            let mut positional = Vec::new();
            for a in rest {
                if a.starts_with("--") {
                    return Err(format!("unknown option `{a}`"));
                }
                positional.push(a.clone());
            }
            if positional.len() < 2 {
                return Err(format!("`{cmd}` needs at least one file and a name"));
            }
            let name = positional.pop().expect("len checked above");
            if cmd == "axioms" {
                Ok(Command::Axioms { files: positional, name })
            } else {
                Ok(Command::Normalize { files: positional, name })
            }
        }
        other => Err(format!("unknown command `{other}`")),
    }
}

/// Read and check the given files in order into a fresh environment.
/// On failure, returns the exit code and the error line to print.
fn load_files(files: &[String]) -> Result<(GlobalEnv, usize), (i32, String)> {
    let mut genv = GlobalEnv::new();
    let mut n_decls = 0;
    for f in files {
        let src = std::fs::read_to_string(f)
            .map_err(|e| (2, format!("error: cannot read `{f}`: {e}")))?;
        match genv.load_source(f, &src) {
            Ok(ds) => n_decls += ds.len(),
            Err(KernelError::Parse(e)) => return Err((2, e.to_string())),
            Err(KernelError::Type(e)) => return Err((1, e.to_string())),
        }
    }
    Ok((genv, n_decls))
}

/// Reorder `files` so that files named by the manifest come first, in the
/// manifest's own order. The manifest's file order is its declared dependency
/// order, so this makes `tcat check corpus/*.tt --manifest ...` independent
/// of how the shell happens to sort the glob.
fn order_by_manifest(files: &[String], entries: &[ManifestEntry]) -> Vec<String> {
    let order = crate::corpus::manifest_file_order(entries);
    let rank = |f: &String| {
        let base = std::path::Path::new(f)
            .file_name()
            .map(|b| b.to_string_lossy().into_owned())
            .unwrap_or_else(|| f.clone());
        order.iter().position(|o| *o == base).unwrap_or(order.len())
    };
    let mut out: Vec<String> = files.to_vec();
    out.sort_by_key(rank);
    out
}

fn fmt_axiom_set(axioms: &BTreeSet<std::sync::Arc<str>>) -> String {
    if axioms.is_empty() {
        "(none)".to_string()
    } else {
        axioms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
    }
}

fn run_check(files: &[String], manifest: Option<&str>, forbid_axioms: bool) -> i32 {
    // Read the manifest first: a malformed manifest is an input error and
    // takes precedence over anything the corpus itself might report.
    let entries: Option<Vec<ManifestEntry>> = match manifest {
        None => None,
        Some(path) => {
            let src = match std::fs::read_to_string(path) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read `{path}`: {e}");
                    return 2;
                }
            };
            match parse_manifest(&src) {
                Ok(es) => Some(es),
                Err(e) => {
                    eprintln!("{path}: {e}");
                    return 2;
                }
            }
        }
    };

    let files: Vec<String> = match &entries {
        Some(es) => order_by_manifest(files, es),
        None => files.to_vec(),
    };

    // Check everything, collecting failures instead of stopping at the first
    // one, so a single report covers the whole run.
    let mut genv = GlobalEnv::new();
    let mut errors: Vec<KernelError> = Vec::new();
    let mut io_failure = false;
    let mut n_decls = 0;
    for f in &files {
        match std::fs::read_to_string(f) {
            Ok(src) => {
                n_decls += genv.load_source_collect(f, &src, &mut errors).len();
            }
            Err(e) => {
                eprintln!("error: cannot read `{f}`: {e}");
                io_failure = true;
            }
        }
    }
    for e in &errors {
        eprintln!("{e}");
    }
    let parse_failure =
        io_failure || errors.iter().any(|e| matches!(e, KernelError::Parse(_)));
    let type_failure = errors.iter().any(|e| matches!(e, KernelError::Type(_)));
    println!("checked {n_decls} declarations in {} files", files.len());

    let mut forbidden_axioms = false;
    if forbid_axioms {
        let declared: Vec<&str> = genv
            .decls()
            .iter()
            .filter(|d| d.kind == DeclKind::Axiom)
            .map(|d| d.name.as_ref())
            .collect();
        if !declared.is_empty() {
            eprintln!(
                "error: axioms are forbidden, but these were declared: {}",
                declared.join(", ")
            );
            forbidden_axioms = true;
        }
    }

    let mut missing = false;
    let mut mismatched = false;
    if let Some(entries) = &entries {
        let problems = verify_manifest(&genv, entries);
        for p in &problems {
            eprintln!("{p}");
        }
        missing = problems.iter().any(|p| p.is_missing());
        mismatched = !problems.is_empty();
        if problems.is_empty() && errors.is_empty() {
            for e in entries {
                let decl = genv.get(&e.name).expect("verified entries exist");
                println!("{}: {}", e.name, fmt_axiom_set(&decl.axioms));
            }
            println!("manifest ok: {} entries", entries.len());
        }
    }

    if parse_failure {
        2
    } else if type_failure || missing || forbidden_axioms {
        1
    } else if mismatched {
        3
    } else {
        0
    }
}

fn run_axioms(files: &[String], name: &str) -> i32 {
    let (genv, _) = match load_files(files) {
        Ok(x) => x,
        Err((code, msg)) => {
            eprintln!("{msg}");
            return code;
        }
    };
    match genv.get(name) {
        Some(d) => {
            for a in &d.axioms {
                println!("{a}");
            }
            0
        }
        None => {
            eprintln!("error: no declaration named `{name}`");
            1
        }
    }
}

fn run_normalize(files: &[String], name: &str) -> i32 {
    let (genv, _) = match load_files(files) {
        Ok(x) => x,
        Err((code, msg)) => {
            eprintln!("{msg}");
            return code;
        }
    };
    match genv.get(name) {
        Some(d) => {
            let core = match &d.body {
                Some(b) => normalize(&genv, b),
                None => normalize(&genv, &d.ty),
            };
            println!("{}", print_core(&genv, &[], &core));
            0
        }
        None => {
            eprintln!("error: no declaration named `{name}`");
            1
        }
    }
}

/// Run the CLI on the given arguments, returning the process exit code.
pub fn run(args: &[String]) -> i32 {
    match parse_args(args) {
        Ok(Command::Check { files, manifest, forbid_axioms }) => {
            run_check(&files, manifest.as_deref(), forbid_axioms)
        }
        Ok(Command::Axioms { files, name }) => run_axioms(&files, &name),
        Ok(Command::Normalize { files, name }) => run_normalize(&files, &name),
        Err(msg) => {
            eprintln!("error: {msg}\n{USAGE}");
            4
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_args(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parses_check() {
        let c = parse_args(&to_args(&["check", "a.tt", "b.tt", "--manifest", "m.tsv"])).unwrap();
        assert_eq!(
            c,
            Command::Check {
                files: vec!["a.tt".into(), "b.tt".into()],
                manifest: Some("m.tsv".into()),
                forbid_axioms: false,
            }
        );
        let c = parse_args(&to_args(&["check", "--manifest=m.tsv", "--forbid-axioms", "a.tt"]))
            .unwrap();
        assert_eq!(
            c,
            Command::Check {
                files: vec!["a.tt".into()],
                manifest: Some("m.tsv".into()),
                forbid_axioms: true,
            }
        );
    }

    #[test]
    fn parses_axioms_and_normalize() {
        let c = parse_args(&to_args(&["axioms", "a.tt", "b.tt", "thm"])).unwrap();
        assert_eq!(c, Command::Axioms { files: vec!["a.tt".into(), "b.tt".into()], name: "thm".into() });
        let c = parse_args(&to_args(&["normalize", "a.tt", "thm"])).unwrap();
        assert_eq!(c, Command::Normalize { files: vec!["a.tt".into()], name: "thm".into() });
    }

    #[test]
    fn usage_errors() {
        assert!(parse_args(&[]).is_err());
        assert!(parse_args(&to_args(&["frobnicate"])).is_err());
        assert!(parse_args(&to_args(&["check"])).is_err());
        assert!(parse_args(&to_args(&["check", "a.tt", "--manifest"])).is_err());
        assert!(parse_args(&to_args(&["check", "a.tt", "--wat"])).is_err());
        assert!(parse_args(&to_args(&["axioms", "only.tt"])).is_err());
    }
}
