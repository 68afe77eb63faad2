//! A small proof checker for an intensional Martin-Löf type theory with
//! Π, Σ, identity types, finite base types (`N0`, `N1`, `N2`), and a
//! cumulative hierarchy of explicitly-leveled universes.
//!
//! The crate is organised in three layers:
//!
//! * [`surface`] — concrete syntax: lexer, parser and printer for `.tt`
//!   source files.
//! * [`kernel`] — the trusted core: bidirectional elaboration into a
//!   de Bruijn core calculus, normalisation by evaluation, conversion
//!   checking, and per-declaration axiom dependency tracking.
//! * [`corpus`] — batch checking of a set of `.tt` files against a
//!   manifest that pins the expected axiom closure of selected
//!   declarations.
//!
//! The `tcat` binary exposes the three layers as a command line tool
//! (`tcat check`, `tcat axioms`, `tcat normalize`).

pub mod cli;
pub mod corpus;
pub mod kernel;
pub mod surface;
