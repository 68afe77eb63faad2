//! Surface abstract syntax: raw terms and declarations as they come out of
//! the parser, with source spans attached to every node.

use std::fmt;
use std::sync::Arc;

/// A region of a source file. Lines and columns are 1-based; columns count
/// Unicode code points, not bytes. `end_col` points one past the last code
/// point of the region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrcSpan {
    pub file: Arc<str>,
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl SrcSpan {
    pub fn new(file: Arc<str>, start_line: u32, start_col: u32, end_line: u32, end_col: u32) -> Self {
        SrcSpan { file, start_line, start_col, end_line, end_col }
    }

    /// A placeholder span for synthesised terms (e.g. terms rebuilt from the
    /// kernel for display).
    pub fn synthetic() -> Self {
        SrcSpan::new("<internal>".into(), 0, 0, 0, 0)
    }

    /// The smallest span covering both `self` and `other`.
    pub fn join(&self, other: &SrcSpan) -> SrcSpan {
        SrcSpan {
            file: self.file.clone(),
            start_line: self.start_line,
            start_col: self.start_col,
            end_line: other.end_line,
            end_col: other.end_col,
        }
    }
}

impl fmt::Display for SrcSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.start_line, self.start_col)
    }
}

/// A parsed term together with the region of source it came from.
#[derive(Debug, Clone)]
pub struct RawTerm {
    pub span: SrcSpan,
    pub node: RawNode,
}

impl RawTerm {
    pub fn new(span: SrcSpan, node: RawNode) -> Self {
        RawTerm { span, node }
    }
}

/// Term formers of the surface language.
#[derive(Debug, Clone)]
pub enum RawNode {
    /// A name: either a bound variable or a reference to a global declaration.
    Var(String),
    /// `U n` — the n-th universe.
    Universe(u32),
    /// `(x : A) -> B`; the non-dependent arrow `A -> B` binds `"_"`.
    Pi(String, Box<RawTerm>, Box<RawTerm>),
    /// `fun x => t` — unannotated lambda; only checkable, never inferable.
    Lam(String, Box<RawTerm>),
    App(Box<RawTerm>, Box<RawTerm>),
    /// `(x : A) ** B`; the non-dependent product `A ** B` binds `"_"`.
    Sigma(String, Box<RawTerm>, Box<RawTerm>),
    /// `pair a b` — only checkable against a Σ-type.
    Pair(Box<RawTerm>, Box<RawTerm>),
    Fst(Box<RawTerm>),
    Snd(Box<RawTerm>),
    /// `Id A a b`.
    IdTy(Box<RawTerm>, Box<RawTerm>, Box<RawTerm>),
    /// `refl A a : Id A a a`.
    Refl(Box<RawTerm>, Box<RawTerm>),
    /// `J A a C d b p` — identity elimination with the endpoint-and-proof
    /// motive `C : (b : A) -> Id A a b -> U l`.
    J {
        ty: Box<RawTerm>,
        base: Box<RawTerm>,
        motive: Box<RawTerm>,
        case: Box<RawTerm>,
        endpoint: Box<RawTerm>,
        proof: Box<RawTerm>,
    },
    /// `N0` — the empty type.
    Empty,
    /// `elim0 C s`.
    ElimEmpty(Box<RawTerm>, Box<RawTerm>),
    /// `N1` — the unit type.
    Unit,
    Star,
    /// `elim1 C c s`.
    ElimUnit(Box<RawTerm>, Box<RawTerm>, Box<RawTerm>),
    /// `N2` — the two-element type.
    Bool,
    B0,
    B1,
    /// `elim2 C c0 c1 s`.
    ElimBool(Box<RawTerm>, Box<RawTerm>, Box<RawTerm>, Box<RawTerm>),
    /// `(t : T)` — a type annotation, which makes `t` inferable.
    Ann(Box<RawTerm>, Box<RawTerm>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Def,
    Axiom,
}

impl fmt::Display for DeclKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeclKind::Def => write!(f, "def"),
            DeclKind::Axiom => write!(f, "axiom"),
        }
    }
}

/// A top-level declaration: `def name : T := t;` or `axiom name : T;`.
#[derive(Debug, Clone)]
pub struct RawDecl {
    pub kind: DeclKind,
    pub name: String,
    pub name_span: SrcSpan,
    pub ty: RawTerm,
    /// `None` exactly when `kind` is `Axiom`.
    pub body: Option<RawTerm>,
    pub span: SrcSpan,
}

/// A parse (or lexical) failure, reported at a single position.
#[derive(Debug, Clone)]
pub struct ParseError {
    pub span: SrcSpan,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: error[Parse]: expected {}, found {}", self.span, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

/// Alpha-equality of raw terms: spans are ignored and bound names are
/// compared positionally.
pub fn alpha_eq(a: &RawTerm, b: &RawTerm) -> bool {
    fn go(a: &RawTerm, b: &RawTerm, env: &mut Vec<(String, String)>) -> bool {
        use RawNode::*;
        match (&a.node, &b.node) {
            (Var(x), Var(y)) => {
                for (l, r) in env.iter().rev() {
                    let lx = l == x;
                    let ry = r == y;
                    if lx || ry {
                        return lx && ry;
                    }
                }
                x == y
            }
            (Universe(m), Universe(n)) => m == n,
            (Pi(x, a1, b1), Pi(y, a2, b2)) | (Sigma(x, a1, b1), Sigma(y, a2, b2)) => {
                if !go(a1, a2, env) {
                    return false;
                }
                env.push((x.clone(), y.clone()));
                let r = go(b1, b2, env);
                env.pop();
                r
            }
            (Lam(x, b1), Lam(y, b2)) => {
                env.push((x.clone(), y.clone()));
                let r = go(b1, b2, env);
                env.pop();
                r
            }
            (App(f1, a1), App(f2, a2)) | (Pair(f1, a1), Pair(f2, a2)) | (Ann(f1, a1), Ann(f2, a2)) => {
                go(f1, f2, env) && go(a1, a2, env)
            }
            (Fst(t1), Fst(t2)) | (Snd(t1), Snd(t2)) => go(t1, t2, env),
            (IdTy(t1, x1, y1), IdTy(t2, x2, y2)) => {
                go(t1, t2, env) && go(x1, x2, env) && go(y1, y2, env)
            }
            (Refl(t1, x1), Refl(t2, x2)) => go(t1, t2, env) && go(x1, x2, env),
            (
                J { ty: t1, base: a1, motive: c1, case: d1, endpoint: b1, proof: p1 },
                J { ty: t2, base: a2, motive: c2, case: d2, endpoint: b2, proof: p2 },
            ) => {
                go(t1, t2, env)
                    && go(a1, a2, env)
                    && go(c1, c2, env)
                    && go(d1, d2, env)
                    && go(b1, b2, env)
                    && go(p1, p2, env)
            }
            (Empty, Empty) | (Unit, Unit) | (Star, Star) | (Bool, Bool) | (B0, B0) | (B1, B1) => true,
            (ElimEmpty(c1, s1), ElimEmpty(c2, s2)) => go(c1, c2, env) && go(s1, s2, env),
            (ElimUnit(c1, u1, s1), ElimUnit(c2, u2, s2)) => {
                go(c1, c2, env) && go(u1, u2, env) && go(s1, s2, env)
            }
            (ElimBool(c1, x1, y1, s1), ElimBool(c2, x2, y2, s2)) => {
                go(c1, c2, env) && go(x1, x2, env) && go(y1, y2, env) && go(s1, s2, env)
            }
            _ => false,
        }
    }
    go(a, b, &mut Vec::new())
}
