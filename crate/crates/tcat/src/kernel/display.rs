//! Rendering kernel data back to surface syntax for output and errors.
//!
//! Core terms are converted to raw terms (inventing display names for de
//! Bruijn variables, freshening against everything in scope and every
//! global) and then pretty-printed.

use std::sync::Arc;

use crate::surface::ast::{RawNode, RawTerm, SrcSpan};
use crate::surface::lexer::is_reserved;
use crate::surface::printer::print_term;

use super::eval::{quote, Unfold};
use super::globals::GlobalEnv;
use super::term::Core;
use super::value::{Lvl, Value};

/// Does `t` mention the variable with de Bruijn index `target`?
fn uses_var(t: &Core, target: usize) -> bool {
    use Core::*;
    match t {
        Var(i) => *i == target,
        Global(_) | Universe(_) | Empty | Unit | Star | Bool | B0 | B1 => false,
        Pi(_, a, b) | Sigma(_, a, b) | Lam(_, a, b) => {
            uses_var(a, target) || uses_var(b, target + 1)
        }
        App(a, b) | Refl(a, b) => uses_var(a, target) || uses_var(b, target),
        Pair(_, a, b, x, y) => {
            uses_var(a, target) || uses_var(b, target + 1) || uses_var(x, target) || uses_var(y, target)
        }
        Fst(t) | Snd(t) => uses_var(t, target),
        IdTy(a, l, r) => uses_var(a, target) || uses_var(l, target) || uses_var(r, target),
        J { ty, base, motive, case, endpoint, proof, .. } => {
            uses_var(ty, target)
                || uses_var(base, target)
                || uses_var(motive, target + 2)
                || uses_var(case, target)
                || uses_var(endpoint, target)
                || uses_var(proof, target)
        }
        ElimEmpty { motive, scrut, .. } => uses_var(motive, target + 1) || uses_var(scrut, target),
        ElimUnit { motive, case, scrut, .. } => {
            uses_var(motive, target + 1) || uses_var(case, target) || uses_var(scrut, target)
        }
        ElimBool { motive, case0, case1, scrut, .. } => {
            uses_var(motive, target + 1)
                || uses_var(case0, target)
                || uses_var(case1, target)
                || uses_var(scrut, target)
        }
    }
}

/// Choose a display name for a binder: keep `_` for unused binders, avoid
/// shadowing anything in scope or any global, and never pick a reserved
/// word (freshening `b` can otherwise land on `b1`).
fn fresh_name(genv: &GlobalEnv, names: &[String], base: &str, used: bool) -> String {
    if base == "_" && !used {
        return "_".to_string();
    }
    let base = if base == "_" { "x" } else { base };
    let taken = |s: &str| names.iter().any(|n| n == s) || genv.contains(s) || is_reserved(s);
    if !taken(base) {
        return base.to_string();
    }
    let mut i = 1u32;
    loop {
        let candidate = format!("{base}{i}");
        if !taken(&candidate) {
            return candidate;
        }
        i += 1;
    }
}

fn raw(node: RawNode) -> RawTerm {
    RawTerm::new(SrcSpan::synthetic(), node)
}

/// Convert a core term to a raw term. `names` holds display names for the
/// free variables, outermost first, and is restored before returning.
pub fn core_to_raw(genv: &GlobalEnv, names: &mut Vec<String>, t: &Core) -> RawTerm {
    use Core::*;
    match t {
        Var(i) => {
            let pos = names.len().checked_sub(i + 1).expect("display invariant: index in scope");
            raw(RawNode::Var(names[pos].clone()))
        }
        Global(g) => raw(RawNode::Var(g.to_string())),
        Universe(l) => raw(RawNode::Universe(*l)),
        Pi(x, a, b) => {
            let ar = core_to_raw(genv, names, a);
            let name = fresh_name(genv, names, x, uses_var(b, 0));
            names.push(name.clone());
            let br = core_to_raw(genv, names, b);
            names.pop();
            raw(RawNode::Pi(name, Box::new(ar), Box::new(br)))
        }
        Sigma(x, a, b) => {
            let ar = core_to_raw(genv, names, a);
            let name = fresh_name(genv, names, x, uses_var(b, 0));
            names.push(name.clone());
            let br = core_to_raw(genv, names, b);
            names.pop();
            raw(RawNode::Sigma(name, Box::new(ar), Box::new(br)))
        }
        Lam(x, _, body) => {
            let name = fresh_name(genv, names, x, uses_var(body, 0));
            names.push(name.clone());
            let br = core_to_raw(genv, names, body);
            names.pop();
            raw(RawNode::Lam(name, Box::new(br)))
        }
        App(f, a) => raw(RawNode::App(
            Box::new(core_to_raw(genv, names, f)),
            Box::new(core_to_raw(genv, names, a)),
        )),
        Pair(_, _, _, a, b) => raw(RawNode::Pair(
            Box::new(core_to_raw(genv, names, a)),
            Box::new(core_to_raw(genv, names, b)),
        )),
        Fst(t) => raw(RawNode::Fst(Box::new(core_to_raw(genv, names, t)))),
        Snd(t) => raw(RawNode::Snd(Box::new(core_to_raw(genv, names, t)))),
        IdTy(a, l, r) => raw(RawNode::IdTy(
            Box::new(core_to_raw(genv, names, a)),
            Box::new(core_to_raw(genv, names, l)),
            Box::new(core_to_raw(genv, names, r)),
        )),
        Refl(a, x) => raw(RawNode::Refl(
            Box::new(core_to_raw(genv, names, a)),
            Box::new(core_to_raw(genv, names, x)),
        )),
        J { ty, base, motive, motive_names, case, endpoint, proof } => {
            let motive_raw = binders_to_lam(genv, names, &[&motive_names.0, &motive_names.1], motive);
            raw(RawNode::J {
                ty: Box::new(core_to_raw(genv, names, ty)),
                base: Box::new(core_to_raw(genv, names, base)),
                motive: Box::new(motive_raw),
                case: Box::new(core_to_raw(genv, names, case)),
                endpoint: Box::new(core_to_raw(genv, names, endpoint)),
                proof: Box::new(core_to_raw(genv, names, proof)),
            })
        }
        Empty => raw(RawNode::Empty),
        ElimEmpty { motive, motive_name, scrut } => {
            let m = binders_to_lam(genv, names, &[motive_name], motive);
            raw(RawNode::ElimEmpty(Box::new(m), Box::new(core_to_raw(genv, names, scrut))))
        }
        Unit => raw(RawNode::Unit),
        Star => raw(RawNode::Star),
        ElimUnit { motive, motive_name, case, scrut } => {
            let m = binders_to_lam(genv, names, &[motive_name], motive);
            raw(RawNode::ElimUnit(
                Box::new(m),
                Box::new(core_to_raw(genv, names, case)),
                Box::new(core_to_raw(genv, names, scrut)),
            ))
        }
        Bool => raw(RawNode::Bool),
        B0 => raw(RawNode::B0),
        B1 => raw(RawNode::B1),
        ElimBool { motive, motive_name, case0, case1, scrut } => {
            let m = binders_to_lam(genv, names, &[motive_name], motive);
            raw(RawNode::ElimBool(
                Box::new(m),
                Box::new(core_to_raw(genv, names, case0)),
                Box::new(core_to_raw(genv, names, case1)),
                Box::new(core_to_raw(genv, names, scrut)),
            ))
        }
    }
}

/// Render a motive body under `binders.len()` binders as nested lambdas.
fn binders_to_lam(genv: &GlobalEnv, names: &mut Vec<String>, binders: &[&str], body: &Core) -> RawTerm {
    if binders.is_empty() {
        return core_to_raw(genv, names, body);
    }
    let used = uses_var(body, binders.len() - 1);
    let name = fresh_name(genv, names, binders[0], used);
    names.push(name.clone());
    let inner = binders_to_lam(genv, names, &binders[1..], body);
    names.pop();
    raw(RawNode::Lam(name, Box::new(inner)))
}

/// Print a core term, using `scope` as the display names of its free
/// variables (outermost first).
pub fn print_core(genv: &GlobalEnv, scope: &[Arc<str>], t: &Core) -> String {
    let mut names: Vec<String> = scope.iter().map(|s| s.to_string()).collect();
    print_term(&core_to_raw(genv, &mut names, t))
}

/// Render a value for an error message: definitions stay folded.
pub fn render_value(genv: &GlobalEnv, scope: &[Arc<str>], lvl: Lvl, v: &Arc<Value>) -> String {
    debug_assert_eq!(scope.len(), lvl);
    print_core(genv, scope, &quote(genv, lvl, v, Unfold::No))
}
