//! C ABI for the `tcat` proof checker.
//!
//! The surface mirrors the command line: create an environment, load and
//! check `.tt` sources into it in order, then query axiom closures and
//! normal forms or verify a manifest against it.
//!
//! Conventions:
//!
//! * every function is safe to call with null pointers (reported as
//!   [`TcatStatus::UsageError`] or a null result);
//! * failures store a one-line report retrievable with [`tcat_last_error`]
//!   until the next call that mutates the same environment;
//! * strings returned as `*mut c_char` are owned by the caller and must be
//!   released with [`tcat_string_free`];
//! * an environment must not be used from two threads at once.
//!
//! The header `include/tcat.h` is generated from this file at build time.

use std::ffi::{c_char, CStr, CString};

use tcat::corpus::{parse_manifest, verify_manifest};
use tcat::kernel::{normalize, print_core, GlobalEnv, KernelError};

/// Result codes, numerically identical to the `tcat` CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcatStatus {
    /// The operation succeeded.
    Ok = 0,
    /// Type checking failed, or a manifest names a missing declaration.
    CheckError = 1,
    /// A file could not be read, or lexing/parsing failed.
    ParseError = 2,
    /// The checked declarations disagree with the manifest.
    ManifestMismatch = 3,
    /// Null or invalid arguments.
    UsageError = 4,
}

/// An opaque checking environment holding every declaration checked so
/// far and the most recent error report.
pub struct TcatEnv {
    genv: GlobalEnv,
    last_error: Option<CString>,
}

impl TcatEnv {
    fn set_error(&mut self, message: impl Into<String>) {
        let message: String = message.into();
        self.last_error = Some(
            CString::new(message.replace('\0', " "))
                .expect("NUL bytes were just replaced"),
        );
    }

    fn clear_error(&mut self) {
        self.last_error = None;
    }
}

/// Borrow the environment behind a raw pointer, if non-null.
///
/// # Safety
/// `env` must be null or a pointer from [`tcat_env_new`] that has not been
/// freed.
unsafe fn env_mut<'a>(env: *mut TcatEnv) -> Option<&'a mut TcatEnv> {
    unsafe { env.as_mut() }
}

/// Read a C string argument, if non-null and valid UTF-8.
///
/// # Safety
/// `s` must be null or a NUL-terminated string valid for reads.
unsafe fn arg_str<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        return None;
    }
    unsafe { CStr::from_ptr(s) }.to_str().ok()
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("NUL bytes were just replaced")
        .into_raw()
}

/// Create an empty environment. Free it with [`tcat_env_free`].
#[no_mangle]
pub extern "C" fn tcat_env_new() -> *mut TcatEnv {
    Box::into_raw(Box::new(TcatEnv { genv: GlobalEnv::new(), last_error: None }))
}

/// Destroy an environment created by [`tcat_env_new`]. A null pointer is
/// ignored.
///
/// # Safety
/// `env` must be null or a pointer from [`tcat_env_new`] that has not
/// already been freed; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tcat_env_free(env: *mut TcatEnv) {
    if !env.is_null() {
        drop(unsafe { Box::from_raw(env) });
    }
}

/// Parse and type-check a source string, adding its declarations to the
/// environment. Checking stops at the first error; declarations before it
/// are kept. `name` labels the source in error messages.
///
/// # Safety
/// `env` must be a live environment pointer; `name` and `source` must be
/// null or NUL-terminated strings valid for reads.
#[no_mangle]
pub unsafe extern "C" fn tcat_load_source(
    env: *mut TcatEnv,
    name: *const c_char,
    source: *const c_char,
) -> TcatStatus {
    let Some(env) = (unsafe { env_mut(env) }) else { return TcatStatus::UsageError };
    let (Some(name), Some(source)) = (unsafe { arg_str(name) }, unsafe { arg_str(source) })
    else {
        env.set_error("null or non-UTF-8 argument");
        return TcatStatus::UsageError;
    };
    match env.genv.load_source(name, source) {
        Ok(_) => {
            env.clear_error();
            TcatStatus::Ok
        }
        Err(e) => {
            let status = match &e {
                KernelError::Parse(_) => TcatStatus::ParseError,
                KernelError::Type(_) => TcatStatus::CheckError,
            };
            env.set_error(e.to_string());
            status
        }
    }
}

/// Read, parse, and type-check a `.tt` file, adding its declarations to
/// the environment. Checking stops at the first error; declarations before
/// it are kept.
///
/// # Safety
/// `env` must be a live environment pointer; `path` must be null or a
/// NUL-terminated string valid for reads.
#[no_mangle]
pub unsafe extern "C" fn tcat_load_file(env: *mut TcatEnv, path: *const c_char) -> TcatStatus {
    let Some(env) = (unsafe { env_mut(env) }) else { return TcatStatus::UsageError };
    let Some(path) = (unsafe { arg_str(path) }) else {
        env.set_error("null or non-UTF-8 argument");
        return TcatStatus::UsageError;
    };
    let source = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            env.set_error(format!("error: cannot read `{path}`: {e}"));
            return TcatStatus::ParseError;
        }
    };
    let path = CString::new(path).expect("arg_str rejects interior NULs");
    unsafe {
        tcat_load_source(
            env,
            path.as_ptr(),
            CString::new(source.replace('\0', " "))
                .expect("NUL bytes were just replaced")
                .as_ptr(),
        )
    }
}

/// The number of declarations checked into the environment so far.
///
/// # Safety
/// `env` must be null (returns 0) or a live environment pointer.
#[no_mangle]
pub unsafe extern "C" fn tcat_decl_count(env: *const TcatEnv) -> usize {
    match unsafe { env.as_ref() } {
        Some(env) => env.genv.decls().len(),
        None => 0,
    }
}

/// The sorted axiom closure of a declaration, one name per line, as a
/// caller-owned string (empty if the declaration uses no axioms). Returns
/// null and stores an error if there is no such declaration.
///
/// # Safety
/// `env` must be a live environment pointer; `name` must be null or a
/// NUL-terminated string valid for reads. Free the result with
/// [`tcat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tcat_axioms(env: *mut TcatEnv, name: *const c_char) -> *mut c_char {
    let Some(env) = (unsafe { env_mut(env) }) else { return std::ptr::null_mut() };
    let Some(name) = (unsafe { arg_str(name) }) else {
        env.set_error("null or non-UTF-8 argument");
        return std::ptr::null_mut();
    };
    match env.genv.get(name).cloned() {
        Some(decl) => {
            let lines: Vec<&str> = decl.axioms.iter().map(|a| a.as_ref()).collect();
            env.clear_error();
            owned_string(lines.join("\n"))
        }
        None => {
            env.set_error(format!("error: no declaration named `{name}`"));
            std::ptr::null_mut()
        }
    }
}

/// The β-normal form of a declaration's body (for an axiom, of its type),
/// printed in surface syntax, as a caller-owned string. Returns null and
/// stores an error if there is no such declaration.
///
/// # Safety
/// `env` must be a live environment pointer; `name` must be null or a
/// NUL-terminated string valid for reads. Free the result with
/// [`tcat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tcat_normalize(env: *mut TcatEnv, name: *const c_char) -> *mut c_char {
    let Some(env) = (unsafe { env_mut(env) }) else { return std::ptr::null_mut() };
    let Some(name) = (unsafe { arg_str(name) }) else {
        env.set_error("null or non-UTF-8 argument");
        return std::ptr::null_mut();
    };
    match env.genv.get(name).cloned() {
        Some(decl) => {
            let core = match &decl.body {
                Some(body) => normalize(&env.genv, body),
                None => normalize(&env.genv, &decl.ty),
            };
            let printed = print_core(&env.genv, &[], &core);
            env.clear_error();
            owned_string(printed)
        }
        None => {
            env.set_error(format!("error: no declaration named `{name}`"));
            std::ptr::null_mut()
        }
    }
}

/// Verify the environment's declarations against a manifest file. Returns
/// `CheckError` if the manifest names declarations that are missing,
/// `ManifestMismatch` for any other discrepancy (with a line per problem
/// in the error report), `ParseError` for an unreadable or malformed
/// manifest.
///
/// # Safety
/// `env` must be a live environment pointer; `path` must be null or a
/// NUL-terminated string valid for reads.
#[no_mangle]
pub unsafe extern "C" fn tcat_check_manifest(
    env: *mut TcatEnv,
    path: *const c_char,
) -> TcatStatus {
    let Some(env) = (unsafe { env_mut(env) }) else { return TcatStatus::UsageError };
    let Some(path) = (unsafe { arg_str(path) }) else {
        env.set_error("null or non-UTF-8 argument");
        return TcatStatus::UsageError;
    };
    let source = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            env.set_error(format!("error: cannot read `{path}`: {e}"));
            return TcatStatus::ParseError;
        }
    };
    let entries = match parse_manifest(&source) {
        Ok(es) => es,
        Err(e) => {
            env.set_error(format!("{path}: {e}"));
            return TcatStatus::ParseError;
        }
    };
    let problems = verify_manifest(&env.genv, &entries);
    if problems.is_empty() {
        env.clear_error();
        return TcatStatus::Ok;
    }
    let missing = problems.iter().any(|p| p.is_missing());
    let report: Vec<String> = problems.iter().map(|p| p.to_string()).collect();
    env.set_error(report.join("\n"));
    if missing {
        TcatStatus::CheckError
    } else {
        TcatStatus::ManifestMismatch
    }
}

/// The report from the most recent failing call on this environment, or
/// null if the most recent call succeeded. The pointer is borrowed from
/// the environment: it is valid until the next call with the same `env`
/// and must not be freed.
///
/// # Safety
/// `env` must be null (returns null) or a live environment pointer.
#[no_mangle]
pub unsafe extern "C" fn tcat_last_error(env: *const TcatEnv) -> *const c_char {
    match unsafe { env.as_ref() } {
        Some(TcatEnv { last_error: Some(e), .. }) => e.as_ptr(),
        _ => std::ptr::null(),
    }
}

/// Release a string returned by [`tcat_axioms`] or [`tcat_normalize`]. A
/// null pointer is ignored.
///
/// # Safety
/// `s` must be null or an owned string returned by this library that has
/// not already been freed.
#[no_mangle]
pub unsafe extern "C" fn tcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
