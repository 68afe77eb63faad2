//! Pretty-printer for surface terms.
//!
//! Prints with minimal parentheses relative to the parser's precedence
//! table, so `parse . print` is the identity up to alpha-equality.

use std::fmt::Write;

use super::ast::{RawNode, RawTerm};

/// Precedence demanded by a printing context. A term whose own precedence
/// is lower must be parenthesised.
const PREC_PI: u8 = 0;
const PREC_SIGMA: u8 = 1;
const PREC_APP: u8 = 2;
const PREC_ATOM: u8 = 3;

fn prec_of(node: &RawNode) -> u8 {
    use RawNode::*;
    match node {
        Pi(..) | Lam(..) => PREC_PI,
        Sigma(..) => PREC_SIGMA,
        App(..) | Universe(_) | Pair(..) | Fst(..) | Snd(..) | IdTy(..) | Refl(..) | J { .. }
        | ElimEmpty(..) | ElimUnit(..) | ElimBool(..) => PREC_APP,
        Var(_) | Empty | Unit | Star | Bool | B0 | B1 | Ann(..) => PREC_ATOM,
    }
}

pub fn print_term(t: &RawTerm) -> String {
    let mut out = String::new();
    go(t, PREC_PI, &mut out);
    out
}

fn go(t: &RawTerm, ambient: u8, out: &mut String) {
    let wrap = prec_of(&t.node) < ambient;
    if wrap {
        out.push('(');
    }
    bare(t, out);
    if wrap {
        out.push(')');
    }
}

fn bare(t: &RawTerm, out: &mut String) {
    use RawNode::*;
    match &t.node {
        Var(x) => out.push_str(x),
        Universe(n) => {
            let _ = write!(out, "U {n}");
        }
        Pi(..) => {
            // A run of named binder groups, then `->` and the body; a Pi
            // chain with no named binders prints as a plain arrow.
            let mut cur = t;
            let mut grouped = false;
            while let Pi(x, dom, cod) = &cur.node {
                if x == "_" {
                    break;
                }
                let _ = write!(out, "({x} : ");
                go(dom, PREC_PI, out);
                out.push_str(") ");
                cur = cod;
                grouped = true;
            }
            if grouped {
                out.push_str("-> ");
                go(cur, PREC_PI, out);
            } else if let Pi(_, dom, cod) = &cur.node {
                go(dom, PREC_SIGMA, out);
                out.push_str(" -> ");
                go(cod, PREC_PI, out);
            } else {
                unreachable!("Pi case entered with a non-Pi term");
            }
        }
        Sigma(..) => {
            let mut cur = t;
            let mut grouped = false;
            while let Sigma(x, dom, cod) = &cur.node {
                if x == "_" {
                    break;
                }
                let _ = write!(out, "({x} : ");
                go(dom, PREC_PI, out);
                out.push_str(") ");
                cur = cod;
                grouped = true;
            }
            if grouped {
                out.push_str("** ");
                go(cur, PREC_SIGMA, out);
            } else if let Sigma(_, dom, cod) = &cur.node {
                go(dom, PREC_APP, out);
                out.push_str(" ** ");
                go(cod, PREC_SIGMA, out);
            } else {
                unreachable!("Sigma case entered with a non-Sigma term");
            }
        }
        Lam(..) => {
            out.push_str("fun");
            let mut cur = t;
            while let Lam(x, body) = &cur.node {
                let _ = write!(out, " {x}");
                cur = body;
            }
            out.push_str(" => ");
            go(cur, PREC_PI, out);
        }
        App(f, a) => {
            go(f, PREC_APP, out);
            out.push(' ');
            go(a, PREC_ATOM, out);
        }
        Pair(a, b) => atoms(out, "pair", &[a, b]),
        Fst(a) => atoms(out, "fst", &[a]),
        Snd(a) => atoms(out, "snd", &[a]),
        IdTy(ty, l, r) => atoms(out, "Id", &[ty, l, r]),
        Refl(ty, a) => atoms(out, "refl", &[ty, a]),
        J { ty, base, motive, case, endpoint, proof } => {
            atoms(out, "J", &[ty, base, motive, case, endpoint, proof])
        }
        Empty => out.push_str("N0"),
        ElimEmpty(c, s) => atoms(out, "elim0", &[c, s]),
        Unit => out.push_str("N1"),
        Star => out.push_str("star"),
        ElimUnit(c, u, s) => atoms(out, "elim1", &[c, u, s]),
        Bool => out.push_str("N2"),
        B0 => out.push_str("b0"),
        B1 => out.push_str("b1"),
        ElimBool(c, t0, t1, s) => atoms(out, "elim2", &[c, t0, t1, s]),
        Ann(tm, ty) => {
            out.push('(');
            go(tm, PREC_PI, out);
            out.push_str(" : ");
            go(ty, PREC_PI, out);
            out.push(')');
        }
    }
}

fn atoms(out: &mut String, kw: &str, args: &[&RawTerm]) {
    out.push_str(kw);
    for a in args {
        out.push(' ');
        go(a, PREC_ATOM, out);
    }
}
