//! Evaluation and quotation: normalisation by evaluation.
//!
//! [`eval`] sends core terms to weak-head values, performing β-reduction
//! and ι-reduction as it goes. Definitions evaluate to [`Value::Glued`]
//! so conversion can avoid unfolding them when both sides are headed by
//! the same name; axioms evaluate to neutrals and never reduce.
//! [`quote`] reads a value back into core syntax, either unfolding
//! definitions (for normal forms) or keeping them folded (for display).

use std::sync::Arc;

use super::globals::GlobalEnv;
use super::term::Core;
use super::value::{Closure, Elim, Env, Head, Lvl, Value};

/// Whether quotation expands `def`s or leaves them folded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unfold {
    Yes,
    No,
}

impl Closure {
    pub fn apply(&self, genv: &GlobalEnv, arg: Arc<Value>) -> Arc<Value> {
        eval(genv, &self.env.push(arg), &self.body)
    }

    /// For bodies under two binders (the `J` motive).
    pub fn apply2(&self, genv: &GlobalEnv, a: Arc<Value>, b: Arc<Value>) -> Arc<Value> {
        eval(genv, &self.env.push(a).push(b), &self.body)
    }
}

pub fn eval(genv: &GlobalEnv, env: &Env, t: &Core) -> Arc<Value> {
    match t {
        Core::Var(i) => env.lookup(*i),
        Core::Global(name) => {
            let decl = genv
                .get(name)
                .unwrap_or_else(|| panic!("kernel invariant: unknown global `{name}`"));
            match decl.body_val(genv) {
                Some(unfolded) => {
                    Arc::new(Value::Glued { name: name.clone(), spine: Vec::new(), unfolded })
                }
                None => Arc::new(Value::Neutral(Head::Axiom(name.clone()), Vec::new())),
            }
        }
        Core::Universe(l) => Arc::new(Value::Universe(*l)),
        Core::Pi(x, a, b) => Arc::new(Value::Pi(
            x.clone(),
            eval(genv, env, a),
            Closure { env: env.clone(), body: b.clone() },
        )),
        Core::Lam(x, a, body) => Arc::new(Value::Lam(
            x.clone(),
            eval(genv, env, a),
            Closure { env: env.clone(), body: body.clone() },
        )),
        Core::App(f, a) => do_app(genv, eval(genv, env, f), eval(genv, env, a)),
        Core::Sigma(x, a, b) => Arc::new(Value::Sigma(
            x.clone(),
            eval(genv, env, a),
            Closure { env: env.clone(), body: b.clone() },
        )),
        Core::Pair(x, a, b, l, r) => Arc::new(Value::Pair {
            name: x.clone(),
            dom: eval(genv, env, a),
            cod: Closure { env: env.clone(), body: b.clone() },
            fst: eval(genv, env, l),
            snd: eval(genv, env, r),
        }),
        Core::Fst(t) => do_fst(genv, eval(genv, env, t)),
        Core::Snd(t) => do_snd(genv, eval(genv, env, t)),
        Core::IdTy(a, l, r) => {
            Arc::new(Value::IdTy(eval(genv, env, a), eval(genv, env, l), eval(genv, env, r)))
        }
        Core::Refl(a, x) => Arc::new(Value::Refl(eval(genv, env, a), eval(genv, env, x))),
        Core::J { ty, base, motive, motive_names, case, endpoint, proof } => do_j(
            genv,
            eval(genv, env, ty),
            eval(genv, env, base),
            Closure { env: env.clone(), body: motive.clone() },
            motive_names.clone(),
            eval(genv, env, case),
            eval(genv, env, endpoint),
            eval(genv, env, proof),
        ),
        Core::Empty => Arc::new(Value::Empty),
        Core::ElimEmpty { motive, motive_name, scrut } => do_elim_empty(
            genv,
            Closure { env: env.clone(), body: motive.clone() },
            motive_name.clone(),
            eval(genv, env, scrut),
        ),
        Core::Unit => Arc::new(Value::Unit),
        Core::Star => Arc::new(Value::Star),
        Core::ElimUnit { motive, motive_name, case, scrut } => do_elim_unit(
            genv,
            Closure { env: env.clone(), body: motive.clone() },
            motive_name.clone(),
            eval(genv, env, case),
            eval(genv, env, scrut),
        ),
        Core::Bool => Arc::new(Value::Bool),
        Core::B0 => Arc::new(Value::B0),
        Core::B1 => Arc::new(Value::B1),
        Core::ElimBool { motive, motive_name, case0, case1, scrut } => do_elim_bool(
            genv,
            Closure { env: env.clone(), body: motive.clone() },
            motive_name.clone(),
            eval(genv, env, case0),
            eval(genv, env, case1),
            eval(genv, env, scrut),
        ),
    }
}

/// Extend a stuck value with one more eliminator. `reduce` computes the
/// eliminator's action on the unfolding of a glued value.
fn stuck(
    genv: &GlobalEnv,
    v: &Value,
    elim: Elim,
    reduce: impl FnOnce(&GlobalEnv, Arc<Value>) -> Arc<Value>,
) -> Arc<Value> {
    match v {
        Value::Neutral(h, spine) => {
            let mut spine = spine.clone();
            spine.push(elim);
            Arc::new(Value::Neutral(h.clone(), spine))
        }
        Value::Glued { name, spine, unfolded } => {
            let mut spine = spine.clone();
            spine.push(elim);
            Arc::new(Value::Glued {
                name: name.clone(),
                spine,
                unfolded: reduce(genv, unfolded.clone()),
            })
        }
        _ => unreachable!("kernel invariant: eliminator applied to a non-matching value"),
    }
}

pub fn do_app(genv: &GlobalEnv, f: Arc<Value>, a: Arc<Value>) -> Arc<Value> {
    match f.as_ref() {
        Value::Lam(_, _, clo) => clo.apply(genv, a),
        v => stuck(genv, v, Elim::App(a.clone()), |genv, unf| do_app(genv, unf, a.clone())),
    }
}

pub fn do_fst(genv: &GlobalEnv, v: Arc<Value>) -> Arc<Value> {
    match v.as_ref() {
        Value::Pair { fst, .. } => fst.clone(),
        v => stuck(genv, v, Elim::Fst, do_fst),
    }
}

pub fn do_snd(genv: &GlobalEnv, v: Arc<Value>) -> Arc<Value> {
    match v.as_ref() {
        Value::Pair { snd, .. } => snd.clone(),
        v => stuck(genv, v, Elim::Snd, do_snd),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn do_j(
    genv: &GlobalEnv,
    ty: Arc<Value>,
    base: Arc<Value>,
    motive: Closure,
    motive_names: (Arc<str>, Arc<str>),
    case: Arc<Value>,
    endpoint: Arc<Value>,
    proof: Arc<Value>,
) -> Arc<Value> {
    match proof.as_ref() {
        Value::Refl(_, _) => case,
        v => stuck(
            genv,
            v,
            Elim::J {
                ty: ty.clone(),
                base: base.clone(),
                motive: motive.clone(),
                motive_names: motive_names.clone(),
                case: case.clone(),
                endpoint: endpoint.clone(),
            },
            |genv, unf| do_j(genv, ty, base, motive, motive_names, case, endpoint, unf),
        ),
    }
}

pub fn do_elim_empty(
    genv: &GlobalEnv,
    motive: Closure,
    motive_name: Arc<str>,
    scrut: Arc<Value>,
) -> Arc<Value> {
    // `N0` has no closed values, so the scrutinee is always stuck.
    match scrut.as_ref() {
        v @ (Value::Neutral(..) | Value::Glued { .. }) => stuck(
            genv,
            v,
            Elim::ElimEmpty { motive: motive.clone(), motive_name: motive_name.clone() },
            |genv, unf| do_elim_empty(genv, motive, motive_name, unf),
        ),
        _ => unreachable!("kernel invariant: elim0 scrutinee is not neutral"),
    }
}

pub fn do_elim_unit(
    genv: &GlobalEnv,
    motive: Closure,
    motive_name: Arc<str>,
    case: Arc<Value>,
    scrut: Arc<Value>,
) -> Arc<Value> {
    match scrut.as_ref() {
        Value::Star => case,
        v => stuck(
            genv,
            v,
            Elim::ElimUnit {
                motive: motive.clone(),
                motive_name: motive_name.clone(),
                case: case.clone(),
            },
            |genv, unf| do_elim_unit(genv, motive, motive_name, case, unf),
        ),
    }
}

pub fn do_elim_bool(
    genv: &GlobalEnv,
    motive: Closure,
    motive_name: Arc<str>,
    case0: Arc<Value>,
    case1: Arc<Value>,
    scrut: Arc<Value>,
) -> Arc<Value> {
    match scrut.as_ref() {
        Value::B0 => case0,
        Value::B1 => case1,
        v => stuck(
            genv,
            v,
            Elim::ElimBool {
                motive: motive.clone(),
                motive_name: motive_name.clone(),
                case0: case0.clone(),
                case1: case1.clone(),
            },
            |genv, unf| do_elim_bool(genv, motive, motive_name, case0, case1, unf),
        ),
    }
}

/// Read a value back into core syntax. `lvl` is the number of free
/// variables in scope.
pub fn quote(genv: &GlobalEnv, lvl: Lvl, v: &Arc<Value>, unfold: Unfold) -> Core {
    match v.as_ref() {
        Value::Universe(l) => Core::Universe(*l),
        Value::Pi(x, a, b) => Core::Pi(
            x.clone(),
            Arc::new(quote(genv, lvl, a, unfold)),
            Arc::new(quote_under(genv, lvl, b, unfold)),
        ),
        Value::Lam(x, a, body) => Core::Lam(
            x.clone(),
            Arc::new(quote(genv, lvl, a, unfold)),
            Arc::new(quote_under(genv, lvl, body, unfold)),
        ),
        Value::Sigma(x, a, b) => Core::Sigma(
            x.clone(),
            Arc::new(quote(genv, lvl, a, unfold)),
            Arc::new(quote_under(genv, lvl, b, unfold)),
        ),
        Value::Pair { name, dom, cod, fst, snd } => Core::Pair(
            name.clone(),
            Arc::new(quote(genv, lvl, dom, unfold)),
            Arc::new(quote_under(genv, lvl, cod, unfold)),
            Arc::new(quote(genv, lvl, fst, unfold)),
            Arc::new(quote(genv, lvl, snd, unfold)),
        ),
        Value::IdTy(a, l, r) => Core::IdTy(
            Arc::new(quote(genv, lvl, a, unfold)),
            Arc::new(quote(genv, lvl, l, unfold)),
            Arc::new(quote(genv, lvl, r, unfold)),
        ),
        Value::Refl(a, x) => {
            Core::Refl(Arc::new(quote(genv, lvl, a, unfold)), Arc::new(quote(genv, lvl, x, unfold)))
        }
        Value::Empty => Core::Empty,
        Value::Unit => Core::Unit,
        Value::Star => Core::Star,
        Value::Bool => Core::Bool,
        Value::B0 => Core::B0,
        Value::B1 => Core::B1,
        Value::Neutral(head, spine) => {
            let head_core = match head {
                Head::Var(l) => Core::Var(lvl - l - 1),
                Head::Axiom(name) => Core::Global(name.clone()),
            };
            quote_spine(genv, lvl, head_core, spine, unfold)
        }
        Value::Glued { name, spine, unfolded } => match unfold {
            Unfold::Yes => quote(genv, lvl, unfolded, unfold),
            Unfold::No => quote_spine(genv, lvl, Core::Global(name.clone()), spine, unfold),
        },
    }
}

/// Quote a one-binder closure by applying it to a fresh variable.
fn quote_under(genv: &GlobalEnv, lvl: Lvl, clo: &Closure, unfold: Unfold) -> Core {
    quote(genv, lvl + 1, &clo.apply(genv, Value::var(lvl)), unfold)
}

fn quote_spine(genv: &GlobalEnv, lvl: Lvl, head: Core, spine: &[Elim], unfold: Unfold) -> Core {
    let mut acc = head;
    for elim in spine {
        acc = match elim {
            Elim::App(a) => {
                Core::App(Arc::new(acc), Arc::new(quote(genv, lvl, a, unfold)))
            }
            Elim::Fst => Core::Fst(Arc::new(acc)),
            Elim::Snd => Core::Snd(Arc::new(acc)),
            Elim::J { ty, base, motive, motive_names, case, endpoint } => {
                let motive_body = quote(
                    genv,
                    lvl + 2,
                    &motive.apply2(genv, Value::var(lvl), Value::var(lvl + 1)),
                    unfold,
                );
                Core::J {
                    ty: Arc::new(quote(genv, lvl, ty, unfold)),
                    base: Arc::new(quote(genv, lvl, base, unfold)),
                    motive: Arc::new(motive_body),
                    motive_names: motive_names.clone(),
                    case: Arc::new(quote(genv, lvl, case, unfold)),
                    endpoint: Arc::new(quote(genv, lvl, endpoint, unfold)),
                    proof: Arc::new(acc),
                }
            }
            Elim::ElimEmpty { motive, motive_name } => Core::ElimEmpty {
                motive: Arc::new(quote_under(genv, lvl, motive, unfold)),
                motive_name: motive_name.clone(),
                scrut: Arc::new(acc),
            },
            Elim::ElimUnit { motive, motive_name, case } => Core::ElimUnit {
                motive: Arc::new(quote_under(genv, lvl, motive, unfold)),
                motive_name: motive_name.clone(),
                case: Arc::new(quote(genv, lvl, case, unfold)),
                scrut: Arc::new(acc),
            },
            Elim::ElimBool { motive, motive_name, case0, case1 } => Core::ElimBool {
                motive: Arc::new(quote_under(genv, lvl, motive, unfold)),
                motive_name: motive_name.clone(),
                case0: Arc::new(quote(genv, lvl, case0, unfold)),
                case1: Arc::new(quote(genv, lvl, case1, unfold)),
                scrut: Arc::new(acc),
            },
        };
    }
    acc
}

/// Fully normalise a closed core term, unfolding all definitions.
pub fn normalize(genv: &GlobalEnv, t: &Core) -> Core {
    quote(genv, 0, &eval(genv, &Env::empty(), t), Unfold::Yes)
}
