//! Semantic values for normalisation by evaluation.
//!
//! Values use de Bruijn *levels* for free variables (core terms use
//! indices), which makes weakening free. Everything is `Arc`-shared, so
//! values are cheap to clone and safe to hand across threads.

use std::sync::Arc;

use super::term::{Core, Level};

/// De Bruijn level: 0 is the outermost free variable.
pub type Lvl = usize;

/// Evaluation environment: a persistent cons-list mapping de Bruijn
/// indices to values (index 0 is the most recently pushed entry).
#[derive(Debug, Clone, Default)]
pub struct Env(Option<Arc<EnvCell>>);

#[derive(Debug)]
struct EnvCell {
    head: Arc<Value>,
    tail: Env,
}

impl Env {
    pub fn empty() -> Env {
        Env(None)
    }

    pub fn push(&self, v: Arc<Value>) -> Env {
        Env(Some(Arc::new(EnvCell { head: v, tail: self.clone() })))
    }

    pub fn lookup(&self, ix: usize) -> Arc<Value> {
        let mut cur = self;
        let mut n = ix;
        loop {
            let cell = cur.0.as_ref().expect("kernel invariant: de Bruijn index out of range");
            if n == 0 {
                return cell.head.clone();
            }
            n -= 1;
            cur = &cell.tail;
        }
    }
}

/// A suspended term body awaiting one (or, for `J` motives, two) more
/// arguments.
#[derive(Debug, Clone)]
pub struct Closure {
    pub env: Env,
    pub body: Arc<Core>,
}

/// The head of a neutral value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Head {
    /// A free variable, by level.
    Var(Lvl),
    /// A postulated constant: axioms never unfold.
    Axiom(Arc<str>),
}

/// One eliminator stuck on a neutral head, in application order.
#[derive(Debug, Clone)]
pub enum Elim {
    App(Arc<Value>),
    Fst,
    Snd,
    J {
        ty: Arc<Value>,
        base: Arc<Value>,
        /// Body under two binders: endpoint, then proof.
        motive: Closure,
        motive_names: (Arc<str>, Arc<str>),
        case: Arc<Value>,
        endpoint: Arc<Value>,
    },
    ElimEmpty {
        motive: Closure,
        motive_name: Arc<str>,
    },
    ElimUnit {
        motive: Closure,
        motive_name: Arc<str>,
        case: Arc<Value>,
    },
    ElimBool {
        motive: Closure,
        motive_name: Arc<str>,
        case0: Arc<Value>,
        case1: Arc<Value>,
    },
}

/// Weak-head-normal semantic values.
#[derive(Debug, Clone)]
pub enum Value {
    Universe(Level),
    Pi(Arc<str>, Arc<Value>, Closure),
    Lam(Arc<str>, Arc<Value>, Closure),
    Sigma(Arc<str>, Arc<Value>, Closure),
    /// A pair, remembering the Σ-type it was checked against so it can be
    /// quoted back to annotated core syntax.
    Pair {
        name: Arc<str>,
        dom: Arc<Value>,
        cod: Closure,
        fst: Arc<Value>,
        snd: Arc<Value>,
    },
    IdTy(Arc<Value>, Arc<Value>, Arc<Value>),
    Refl(Arc<Value>, Arc<Value>),
    Empty,
    Unit,
    Star,
    Bool,
    B0,
    B1,
    /// A variable or axiom with eliminators stuck on it.
    Neutral(Head, Vec<Elim>),
    /// A value headed by a `def`. The spine records eliminators applied to
    /// the still-folded global; `unfolded` is the same value with the
    /// definition expanded. Conversion compares spines first and only
    /// falls back to the unfolding when that fails, and quoting chooses a
    /// side depending on whether it is producing a normal form or a
    /// readable type for an error message.
    Glued {
        name: Arc<str>,
        spine: Vec<Elim>,
        unfolded: Arc<Value>,
    },
}

impl Value {
    pub fn var(l: Lvl) -> Arc<Value> {
        Arc::new(Value::Neutral(Head::Var(l), Vec::new()))
    }

    /// Peek through `Glued` wrappers to the underlying weak-head value.
    pub fn unglue(self: &Arc<Value>) -> &Arc<Value> {
        let mut cur = self;
        while let Value::Glued { unfolded, .. } = cur.as_ref() {
            cur = unfolded;
        }
        cur
    }
}
