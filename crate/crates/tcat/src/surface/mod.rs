//! The surface language: lexing, parsing, and printing of source files.
//!
//! Source files are sequences of declarations,
//!
//! ```text
//! def name : Type := term;
//! axiom name : Type;
//! ```
//!
//! over a term language with Π- and Σ-types, identity types with `J`,
//! the finite types `N0`, `N1`, `N2`, and explicit universes `U 0`,
//! `U 1`, …. See [`parser`] for the grammar.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;

pub use ast::{alpha_eq, DeclKind, ParseError, RawDecl, RawNode, RawTerm, SrcSpan};
pub use lexer::is_reserved;
pub use parser::{parse_file, parse_term};
pub use printer::print_term;
