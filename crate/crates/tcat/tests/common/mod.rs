//! Shared helpers for the integration tests: loading the shipped corpus
//! and running work on a stack wide enough for deeply nested proof terms.

#![allow(dead_code)] // each test binary uses a different subset

use tcat::corpus::{corpus_dir, manifest_file_order, parse_manifest, ManifestEntry};
use tcat::kernel::{GlobalEnv, KernelError};

/// Run `f` on a thread with a 64 MiB stack. Checking and normalizing the
/// larger corpus proofs recurses deeper than the default test-thread stack
/// allows.
pub fn with_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    let handle = std::thread::Builder::new()
        .stack_size(64 << 20)
        .spawn(f)
        .expect("spawn wide-stack thread");
    match handle.join() {
        Ok(v) => v,
        Err(panic) => std::panic::resume_unwind(panic),
    }
}

/// The parsed corpus manifest.
pub fn manifest_entries() -> Vec<ManifestEntry> {
    let path = corpus_dir().join("manifest.tsv");
    let src = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    parse_manifest(&src).expect("manifest parses")
}

/// The corpus sources as `(path, contents)`, in the manifest's load order.
pub fn corpus_sources(entries: &[ManifestEntry]) -> Vec<(String, String)> {
    manifest_file_order(entries)
        .into_iter()
        .map(|file| {
            let path = corpus_dir().join(&file);
            let src = std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
            (path.to_string_lossy().into_owned(), src)
        })
        .collect()
}

/// Check the given sources in order into a fresh environment, stopping at
/// the first error.
pub fn load(sources: &[(String, String)]) -> Result<GlobalEnv, KernelError> {
    let mut genv = GlobalEnv::new();
    for (file, src) in sources {
        genv.load_source(file, src)?;
    }
    Ok(genv)
}

/// The shipped corpus, checked, along with its manifest. Must run inside
/// [`with_big_stack`].
pub fn load_corpus() -> (GlobalEnv, Vec<ManifestEntry>) {
    let entries = manifest_entries();
    let sources = corpus_sources(&entries);
    let genv = load(&sources).unwrap_or_else(|e| panic!("corpus must check: {e}"));
    (genv, entries)
}
