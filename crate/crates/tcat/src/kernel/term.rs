//! Core terms: the elaborated, de Bruijn-indexed syntax the kernel
//! evaluates and compares.
//!
//! Every binder records the user-facing name it had in the source purely
//! for display; the kernel itself identifies variables by index.

use std::sync::Arc;

/// Universe levels. `Universe(0)` is the type of small types.
pub type Level = u32;

/// A core term. Children are `Arc`-shared so terms can be cheaply cloned
/// into closures and across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Core {
    /// Bound variable as a de Bruijn index: 0 is the innermost binder.
    Var(usize),
    /// Reference to a global `def` or `axiom` by name.
    Global(Arc<str>),
    Universe(Level),
    /// `Pi(x, A, B)`: `B` lives under the binder.
    Pi(Arc<str>, Arc<Core>, Arc<Core>),
    /// `Lam(x, A, t)`: lambdas are domain-annotated in core syntax, so any
    /// core term's type can be re-inferred without context.
    Lam(Arc<str>, Arc<Core>, Arc<Core>),
    App(Arc<Core>, Arc<Core>),
    Sigma(Arc<str>, Arc<Core>, Arc<Core>),
    /// `Pair(A, B, a, b)`: pairs carry the Σ-type's components `(x:A) ** B`
    /// for the same reason lambdas carry their domain.
    Pair(Arc<str>, Arc<Core>, Arc<Core>, Arc<Core>, Arc<Core>),
    Fst(Arc<Core>),
    Snd(Arc<Core>),
    IdTy(Arc<Core>, Arc<Core>, Arc<Core>),
    Refl(Arc<Core>, Arc<Core>),
    /// `J(A, a, C, d, b, p)` with motive `C : (b : A) -> Id A a b -> U l`,
    /// represented with `C`'s body under two binders.
    J {
        ty: Arc<Core>,
        base: Arc<Core>,
        /// Motive body under binders for the endpoint and the proof.
        motive: Arc<Core>,
        motive_names: (Arc<str>, Arc<str>),
        case: Arc<Core>,
        endpoint: Arc<Core>,
        proof: Arc<Core>,
    },
    Empty,
    /// `ElimEmpty(C, s)` with motive body `C` under one binder.
    ElimEmpty { motive: Arc<Core>, motive_name: Arc<str>, scrut: Arc<Core> },
    Unit,
    Star,
    ElimUnit { motive: Arc<Core>, motive_name: Arc<str>, case: Arc<Core>, scrut: Arc<Core> },
    Bool,
    B0,
    B1,
    ElimBool {
        motive: Arc<Core>,
        motive_name: Arc<str>,
        case0: Arc<Core>,
        case1: Arc<Core>,
        scrut: Arc<Core>,
    },
}

impl Core {
    /// Collect the names of all globals referenced by this term into `acc`.
    pub fn globals_into(&self, acc: &mut std::collections::BTreeSet<Arc<str>>) {
        use Core::*;
        match self {
            Var(_) | Universe(_) | Empty | Unit | Star | Bool | B0 | B1 => {}
            Global(name) => {
                acc.insert(name.clone());
            }
            Pi(_, a, b) | Sigma(_, a, b) | Lam(_, a, b) => {
                a.globals_into(acc);
                b.globals_into(acc);
            }
            App(a, b) | Refl(a, b) => {
                a.globals_into(acc);
                b.globals_into(acc);
            }
            Pair(_, a, b, x, y) => {
                a.globals_into(acc);
                b.globals_into(acc);
                x.globals_into(acc);
                y.globals_into(acc);
            }
            Fst(t) | Snd(t) => t.globals_into(acc),
            IdTy(a, l, r) => {
                a.globals_into(acc);
                l.globals_into(acc);
                r.globals_into(acc);
            }
            J { ty, base, motive, case, endpoint, proof, .. } => {
                ty.globals_into(acc);
                base.globals_into(acc);
                motive.globals_into(acc);
                case.globals_into(acc);
                endpoint.globals_into(acc);
                proof.globals_into(acc);
            }
            ElimEmpty { motive, scrut, .. } => {
                motive.globals_into(acc);
                scrut.globals_into(acc);
            }
            ElimUnit { motive, case, scrut, .. } => {
                motive.globals_into(acc);
                case.globals_into(acc);
                scrut.globals_into(acc);
            }
            ElimBool { motive, case0, case1, scrut, .. } => {
                motive.globals_into(acc);
                case0.globals_into(acc);
                case1.globals_into(acc);
                scrut.globals_into(acc);
            }
        }
    }
}
