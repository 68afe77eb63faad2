//! Conversion and subtyping between values.
//!
//! Conversion is untyped and directed by weak-head shapes. η-laws for
//! functions and pairs are applied structurally: a lambda (or pair) on one
//! side is compared against the application (or projections) of the other.
//!
//! Glued values let conversion be lazy about definitions: when both sides
//! are headed by the same `def`, their spines are compared first, and the
//! definition is unfolded only if that fails.

use std::sync::Arc;

use super::eval::{do_app, do_fst, do_snd};
use super::globals::GlobalEnv;
use super::value::{Elim, Lvl, Value};

pub fn conv(genv: &GlobalEnv, lvl: Lvl, a: &Arc<Value>, b: &Arc<Value>) -> bool {
    if Arc::ptr_eq(a, b) {
        return true;
    }
    use Value::*;
    match (a.as_ref(), b.as_ref()) {
        (
            Glued { name: n1, spine: s1, unfolded: u1 },
            Glued { name: n2, spine: s2, unfolded: u2 },
        ) => {
            (n1 == n2 && conv_spines(genv, lvl, s1, s2)) || conv(genv, lvl, u1, u2)
        }
        (Glued { unfolded, .. }, _) => conv(genv, lvl, unfolded, b),
        (_, Glued { unfolded, .. }) => conv(genv, lvl, a, unfolded),
        (Universe(l1), Universe(l2)) => l1 == l2,
        (Pi(_, a1, b1), Pi(_, a2, b2)) | (Sigma(_, a1, b1), Sigma(_, a2, b2)) => {
            conv(genv, lvl, a1, a2) && {
                let v = Value::var(lvl);
                conv(genv, lvl + 1, &b1.apply(genv, v.clone()), &b2.apply(genv, v))
            }
        }
        (Lam(_, _, c1), Lam(_, _, c2)) => {
            let v = Value::var(lvl);
            conv(genv, lvl + 1, &c1.apply(genv, v.clone()), &c2.apply(genv, v))
        }
        (Lam(_, _, c), _) => {
            let v = Value::var(lvl);
            conv(genv, lvl + 1, &c.apply(genv, v.clone()), &do_app(genv, b.clone(), v))
        }
        (_, Lam(_, _, c)) => {
            let v = Value::var(lvl);
            conv(genv, lvl + 1, &do_app(genv, a.clone(), v.clone()), &c.apply(genv, v))
        }
        (Pair { fst: f1, snd: s1, .. }, Pair { fst: f2, snd: s2, .. }) => {
            conv(genv, lvl, f1, f2) && conv(genv, lvl, s1, s2)
        }
        (Pair { fst, snd, .. }, _) => {
            conv(genv, lvl, fst, &do_fst(genv, b.clone()))
                && conv(genv, lvl, snd, &do_snd(genv, b.clone()))
        }
        (_, Pair { fst, snd, .. }) => {
            conv(genv, lvl, &do_fst(genv, a.clone()), fst)
                && conv(genv, lvl, &do_snd(genv, a.clone()), snd)
        }
        (IdTy(t1, l1, r1), IdTy(t2, l2, r2)) => {
            conv(genv, lvl, t1, t2) && conv(genv, lvl, l1, l2) && conv(genv, lvl, r1, r2)
        }
        (Refl(t1, x1), Refl(t2, x2)) => conv(genv, lvl, t1, t2) && conv(genv, lvl, x1, x2),
        (Empty, Empty) | (Unit, Unit) | (Star, Star) | (Bool, Bool) | (B0, B0) | (B1, B1) => true,
        (Neutral(h1, s1), Neutral(h2, s2)) => h1 == h2 && conv_spines(genv, lvl, s1, s2),
        _ => false,
    }
}

fn conv_spines(genv: &GlobalEnv, lvl: Lvl, a: &[Elim], b: &[Elim]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| conv_elim(genv, lvl, x, y))
}

fn conv_elim(genv: &GlobalEnv, lvl: Lvl, a: &Elim, b: &Elim) -> bool {
    match (a, b) {
        (Elim::App(x), Elim::App(y)) => conv(genv, lvl, x, y),
        (Elim::Fst, Elim::Fst) | (Elim::Snd, Elim::Snd) => true,
        (
            Elim::J { ty: t1, base: a1, motive: m1, case: c1, endpoint: e1, .. },
            Elim::J { ty: t2, base: a2, motive: m2, case: c2, endpoint: e2, .. },
        ) => {
            conv(genv, lvl, t1, t2)
                && conv(genv, lvl, a1, a2)
                && {
                    let v1 = Value::var(lvl);
                    let v2 = Value::var(lvl + 1);
                    conv(
                        genv,
                        lvl + 2,
                        &m1.apply2(genv, v1.clone(), v2.clone()),
                        &m2.apply2(genv, v1, v2),
                    )
                }
                && conv(genv, lvl, c1, c2)
                && conv(genv, lvl, e1, e2)
        }
        (Elim::ElimEmpty { motive: m1, .. }, Elim::ElimEmpty { motive: m2, .. }) => {
            let v = Value::var(lvl);
            conv(genv, lvl + 1, &m1.apply(genv, v.clone()), &m2.apply(genv, v))
        }
        (
            Elim::ElimUnit { motive: m1, case: c1, .. },
            Elim::ElimUnit { motive: m2, case: c2, .. },
        ) => {
            let v = Value::var(lvl);
            conv(genv, lvl + 1, &m1.apply(genv, v.clone()), &m2.apply(genv, v))
                && conv(genv, lvl, c1, c2)
        }
        (
            Elim::ElimBool { motive: m1, case0: z1, case1: o1, .. },
            Elim::ElimBool { motive: m2, case0: z2, case1: o2, .. },
        ) => {
            let v = Value::var(lvl);
            conv(genv, lvl + 1, &m1.apply(genv, v.clone()), &m2.apply(genv, v))
                && conv(genv, lvl, z1, z2)
                && conv(genv, lvl, o1, o2)
        }
        _ => false,
    }
}

/// Cumulative subtyping: `got ≤ want`. Universes are cumulative,
/// Π is invariant in its domain and cumulative in its codomain, and Σ is
/// cumulative in both components; everything else falls back to
/// conversion.
pub fn subsume(genv: &GlobalEnv, lvl: Lvl, got: &Arc<Value>, want: &Arc<Value>) -> bool {
    match (got.unglue().as_ref(), want.unglue().as_ref()) {
        (Value::Universe(l1), Value::Universe(l2)) => l1 <= l2,
        (Value::Pi(_, a1, b1), Value::Pi(_, a2, b2)) => {
            conv(genv, lvl, a1, a2) && {
                let v = Value::var(lvl);
                subsume(genv, lvl + 1, &b1.apply(genv, v.clone()), &b2.apply(genv, v))
            }
        }
        (Value::Sigma(_, a1, b1), Value::Sigma(_, a2, b2)) => {
            subsume(genv, lvl, a1, a2) && {
                let v = Value::var(lvl);
                subsume(genv, lvl + 1, &b1.apply(genv, v.clone()), &b2.apply(genv, v))
            }
        }
        _ => conv(genv, lvl, got, want),
    }
}
