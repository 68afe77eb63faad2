//! The trusted kernel: core syntax, values, evaluation, conversion, and
//! bidirectional type checking.
//!
//! The type theory is intensional Martin-Löf type theory with:
//!
//! - a cumulative hierarchy of universes `U 0 : U 1 : ...`;
//! - dependent products and sums with η;
//! - intensional identity types eliminated by `J` (based path induction),
//!   with no equality reflection and no uniqueness of identity proofs;
//! - the finite types `N0`, `N1`, `N2` with their dependent eliminators.
//!
//! Top-level `def`s participate in definitional equality; `axiom`s are
//! opaque constants, and every checked declaration records the set of
//! axioms it transitively depends on.

pub mod check;
pub mod conv;
pub mod display;
pub mod error;
pub mod eval;
pub mod globals;
pub mod term;
pub mod value;

pub use check::{check, check_is_type, infer, Context};
pub use conv::{conv, subsume};
pub use display::{core_to_raw, print_core, render_value};
pub use error::{Category, KernelError, TypeError};
pub use eval::{eval, normalize, quote, Unfold};
pub use globals::{Declaration, GlobalEnv};
pub use term::{Core, Level};
pub use value::{Env, Value};
