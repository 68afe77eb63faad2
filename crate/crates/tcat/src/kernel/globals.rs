//! The global environment: checked declarations, indexed by name.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use crate::surface::{DeclKind, SrcSpan};

use super::eval::eval;
use super::term::Core;
use super::value::{Env, Value};

/// A checked top-level declaration. The semantic values of its type and
/// body are computed on first use and cached.
#[derive(Debug)]
pub struct Declaration {
    pub name: Arc<str>,
    pub kind: DeclKind,
    /// The file the declaration was read from, as given to the loader.
    pub file: Arc<str>,
    pub span: SrcSpan,
    pub ty: Arc<Core>,
    /// `None` exactly for axioms.
    pub body: Option<Arc<Core>>,
    /// Names of all axioms this declaration depends on, transitively,
    /// through both its type and its body. An axiom's set contains at
    /// least itself.
    pub axioms: BTreeSet<Arc<str>>,
    ty_val: OnceLock<Arc<Value>>,
    body_val: OnceLock<Arc<Value>>,
}

impl Declaration {
    pub fn new(
        name: Arc<str>,
        kind: DeclKind,
        file: Arc<str>,
        span: SrcSpan,
        ty: Arc<Core>,
        body: Option<Arc<Core>>,
        axioms: BTreeSet<Arc<str>>,
    ) -> Self {
        Declaration {
            name,
            kind,
            file,
            span,
            ty,
            body,
            axioms,
            ty_val: OnceLock::new(),
            body_val: OnceLock::new(),
        }
    }

    /// The declaration's type as a value.
    pub fn ty_val(&self, genv: &GlobalEnv) -> Arc<Value> {
        self.ty_val.get_or_init(|| eval(genv, &Env::empty(), &self.ty)).clone()
    }

    /// The definition's body as a value; `None` for axioms.
    pub fn body_val(&self, genv: &GlobalEnv) -> Option<Arc<Value>> {
        let body = self.body.as_ref()?;
        Some(self.body_val.get_or_init(|| eval(genv, &Env::empty(), body)).clone())
    }
}

/// All declarations checked so far, in order. Later declarations may
/// refer only to earlier ones, so evaluation can never cycle.
#[derive(Debug, Default)]
pub struct GlobalEnv {
    decls: Vec<Arc<Declaration>>,
    index: HashMap<Arc<str>, usize>,
}

impl GlobalEnv {
    pub fn new() -> Self {
        GlobalEnv::default()
    }

    pub fn get(&self, name: &str) -> Option<&Arc<Declaration>> {
        self.index.get(name).map(|&i| &self.decls[i])
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// All declarations, in the order they were checked.
    pub fn decls(&self) -> &[Arc<Declaration>] {
        &self.decls
    }

    pub(crate) fn insert(&mut self, decl: Arc<Declaration>) {
        self.index.insert(decl.name.clone(), self.decls.len());
        self.decls.push(decl);
    }

    /// The union of the axiom dependencies of every global mentioned in
    /// `core`.
    pub fn axioms_of_term(&self, core: &Core) -> BTreeSet<Arc<str>> {
        let mut globals = BTreeSet::new();
        core.globals_into(&mut globals);
        let mut out = BTreeSet::new();
        for g in globals {
            if let Some(d) = self.get(&g) {
                out.extend(d.axioms.iter().cloned());
            }
        }
        out
    }
}
