#ifndef TCAT_H
#define TCAT_H

/* Generated by cbindgen from the tcat-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes, numerically identical to the `tcat` CLI exit codes.
typedef enum TcatStatus {
  // The operation succeeded.
  TCAT_STATUS_OK = 0,
  // Type checking failed, or a manifest names a missing declaration.
  TCAT_STATUS_CHECK_ERROR = 1,
  // A file could not be read, or lexing/parsing failed.
  TCAT_STATUS_PARSE_ERROR = 2,
  // The checked declarations disagree with the manifest.
  TCAT_STATUS_MANIFEST_MISMATCH = 3,
  // Null or invalid arguments.
  TCAT_STATUS_USAGE_ERROR = 4,
} TcatStatus;

// An opaque checking environment holding every declaration checked so
// far and the most recent error report.
typedef struct TcatEnv TcatEnv;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create an empty environment. Free it with [`tcat_env_free`].
struct TcatEnv *tcat_env_new(void);

// Destroy an environment created by [`tcat_env_new`]. A null pointer is
// ignored.
//
// # Safety
// `env` must be null or a pointer from [`tcat_env_new`] that has not
// already been freed; it must not be used afterwards.
void tcat_env_free(struct TcatEnv *env);

// Parse and type-check a source string, adding its declarations to the
// environment. Checking stops at the first error; declarations before it
// are kept. `name` labels the source in error messages.
//
// # Safety
// `env` must be a live environment pointer; `name` and `source` must be
// null or NUL-terminated strings valid for reads.
enum TcatStatus tcat_load_source(struct TcatEnv *env, const char *name, const char *source);

// Read, parse, and type-check a `.tt` file, adding its declarations to
// the environment. Checking stops at the first error; declarations before
// it are kept.
//
// # Safety
// `env` must be a live environment pointer; `path` must be null or a
// NUL-terminated string valid for reads.
enum TcatStatus tcat_load_file(struct TcatEnv *env, const char *path);

// The number of declarations checked into the environment so far.
//
// # Safety
// `env` must be null (returns 0) or a live environment pointer.
size_t tcat_decl_count(const struct TcatEnv *env);

// The sorted axiom closure of a declaration, one name per line, as a
// caller-owned string (empty if the declaration uses no axioms). Returns
// null and stores an error if there is no such declaration.
//
// # Safety
// `env` must be a live environment pointer; `name` must be null or a
// NUL-terminated string valid for reads. Free the result with
// [`tcat_string_free`].
char *tcat_axioms(struct TcatEnv *env, const char *name);

// The β-normal form of a declaration's body (for an axiom, of its type),
// printed in surface syntax, as a caller-owned string. Returns null and
// stores an error if there is no such declaration.
//
// # Safety
// `env` must be a live environment pointer; `name` must be null or a
// NUL-terminated string valid for reads. Free the result with
// [`tcat_string_free`].
char *tcat_normalize(struct TcatEnv *env, const char *name);

// Verify the environment's declarations against a manifest file. Returns
// `CheckError` if the manifest names declarations that are missing,
// `ManifestMismatch` for any other discrepancy (with a line per problem
// in the error report), `ParseError` for an unreadable or malformed
// manifest.
//
// # Safety
// `env` must be a live environment pointer; `path` must be null or a
// NUL-terminated string valid for reads.
enum TcatStatus tcat_check_manifest(struct TcatEnv *env, const char *path);

// The report from the most recent failing call on this environment, or
// null if the most recent call succeeded. The pointer is borrowed from
// the environment: it is valid until the next call with the same `env`
// and must not be freed.
//
// # Safety
// `env` must be null (returns null) or a live environment pointer.
const char *tcat_last_error(const struct TcatEnv *env);

// Release a string returned by [`tcat_axioms`] or [`tcat_normalize`]. A
// null pointer is ignored.
//
// # Safety
// `s` must be null or an owned string returned by this library that has
// not already been freed.
void tcat_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TCAT_H */
