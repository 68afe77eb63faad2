//! Bidirectional elaboration: checking surface terms against values and
//! inferring types, producing core terms.
//!
//! The mode discipline is standard: introduction forms whose type cannot
//! be guessed (`fun`, `pair`) only check; eliminations and annotated
//! terms infer. `check` falls back to `infer` + cumulative subsumption.

use std::sync::Arc;

use crate::surface::{parse_file, DeclKind, RawDecl, RawNode, RawTerm, SrcSpan};

use super::conv::{conv, subsume};
use super::display::render_value;
use super::error::{Category, KernelError, TypeError};
use super::eval::{do_app, do_fst, eval, quote, Unfold};
use super::globals::{Declaration, GlobalEnv};
use super::term::{Core, Level};
use super::value::{Closure, Env, Lvl, Value};

/// The local typing context: binder names (outermost first), their types,
/// and the evaluation environment mapping each binder to a fresh variable.
#[derive(Debug, Clone, Default)]
pub struct Context {
    pub names: Vec<Arc<str>>,
    tys: Vec<Arc<Value>>,
    pub env: Env,
}

impl Context {
    pub fn new() -> Self {
        Context { names: Vec::new(), tys: Vec::new(), env: Env::empty() }
    }

    pub fn lvl(&self) -> Lvl {
        self.names.len()
    }

    /// Extend the context with a new binder.
    pub fn bind(&self, name: Arc<str>, ty: Arc<Value>) -> Context {
        let mut c = self.clone();
        c.env = c.env.push(Value::var(self.lvl()));
        c.names.push(name);
        c.tys.push(ty);
        c
    }

    /// Look a name up among the binders, innermost first, returning its de
    /// Bruijn index and type.
    fn lookup(&self, name: &str) -> Option<(usize, Arc<Value>)> {
        for (ix, n) in self.names.iter().rev().enumerate() {
            if n.as_ref() == name {
                return Some((ix, self.tys[self.names.len() - 1 - ix].clone()));
            }
        }
        None
    }

    fn render(&self, genv: &GlobalEnv, v: &Arc<Value>) -> String {
        render_value(genv, &self.names, self.lvl(), v)
    }
}

fn err(span: &SrcSpan, category: Category, message: String) -> TypeError {
    TypeError::new(span.clone(), category, message)
}

pub fn infer(genv: &GlobalEnv, ctx: &Context, t: &RawTerm) -> Result<(Core, Arc<Value>), TypeError> {
    match &t.node {
        RawNode::Var(x) => {
            if let Some((ix, ty)) = ctx.lookup(x) {
                Ok((Core::Var(ix), ty))
            } else if let Some(d) = genv.get(x) {
                Ok((Core::Global(d.name.clone()), d.ty_val(genv)))
            } else {
                Err(err(&t.span, Category::UnboundName, format!("unbound name `{x}`")))
            }
        }
        RawNode::Universe(n) => Ok((Core::Universe(*n), Arc::new(Value::Universe(n + 1)))),
        RawNode::Pi(x, a, b) => {
            let (ca, la) = check_is_type(genv, ctx, a)?;
            let av = eval(genv, &ctx.env, &ca);
            let xname: Arc<str> = x.as_str().into();
            let ctx2 = ctx.bind(xname.clone(), av);
            let (cb, lb) = check_is_type(genv, &ctx2, b)?;
            Ok((Core::Pi(xname, ca.into(), cb.into()), Arc::new(Value::Universe(la.max(lb)))))
        }
        RawNode::Sigma(x, a, b) => {
            let (ca, la) = check_is_type(genv, ctx, a)?;
            let av = eval(genv, &ctx.env, &ca);
            let xname: Arc<str> = x.as_str().into();
            let ctx2 = ctx.bind(xname.clone(), av);
            let (cb, lb) = check_is_type(genv, &ctx2, b)?;
            Ok((Core::Sigma(xname, ca.into(), cb.into()), Arc::new(Value::Universe(la.max(lb)))))
        }
        RawNode::Lam(..) => Err(err(
            &t.span,
            Category::ExpectedType,
            "cannot infer a type for a bare `fun`; annotate it as `(fun ... => ... : T)`".into(),
        )),
        RawNode::Pair(..) => Err(err(
            &t.span,
            Category::ExpectedType,
            "cannot infer a type for a bare `pair`; annotate it as `(pair a b : T)`".into(),
        )),
        RawNode::App(f, x) => {
            let (cf, fty) = infer(genv, ctx, f)?;
            match fty.unglue().as_ref() {
                Value::Pi(_, dom, cod) => {
                    let cx = check(genv, ctx, x, dom)?;
                    let xv = eval(genv, &ctx.env, &cx);
                    Ok((Core::App(cf.into(), cx.into()), cod.apply(genv, xv)))
                }
                _ => Err(err(
                    &f.span,
                    Category::NotAFunction,
                    format!(
                        "this term is applied to an argument but has type `{}`",
                        ctx.render(genv, &fty)
                    ),
                )),
            }
        }
        RawNode::Fst(p) => {
            let (cp, pty) = infer(genv, ctx, p)?;
            match pty.unglue().as_ref() {
                Value::Sigma(_, dom, _) => Ok((Core::Fst(cp.into()), dom.clone())),
                _ => Err(err(
                    &p.span,
                    Category::NotAPair,
                    format!("`fst` expects a pair, but this term has type `{}`", ctx.render(genv, &pty)),
                )),
            }
        }
        RawNode::Snd(p) => {
            let (cp, pty) = infer(genv, ctx, p)?;
            match pty.unglue().as_ref() {
                Value::Sigma(_, _, cod) => {
                    let pv = eval(genv, &ctx.env, &cp);
                    Ok((Core::Snd(cp.into()), cod.apply(genv, do_fst(genv, pv))))
                }
                _ => Err(err(
                    &p.span,
                    Category::NotAPair,
                    format!("`snd` expects a pair, but this term has type `{}`", ctx.render(genv, &pty)),
                )),
            }
        }
        RawNode::IdTy(a, l, r) => {
            let (ca, lev) = check_is_type(genv, ctx, a)?;
            let av = eval(genv, &ctx.env, &ca);
            let cl = check(genv, ctx, l, &av)?;
            let cr = check(genv, ctx, r, &av)?;
            Ok((Core::IdTy(ca.into(), cl.into(), cr.into()), Arc::new(Value::Universe(lev))))
        }
        RawNode::Refl(a, x) => {
            let (ca, _) = check_is_type(genv, ctx, a)?;
            let av = eval(genv, &ctx.env, &ca);
            let cx = check(genv, ctx, x, &av)?;
            let xv = eval(genv, &ctx.env, &cx);
            Ok((
                Core::Refl(ca.into(), cx.into()),
                Arc::new(Value::IdTy(av, xv.clone(), xv)),
            ))
        }
        RawNode::J { ty, base, motive, case, endpoint, proof } => {
            let (cty, _) = check_is_type(genv, ctx, ty)?;
            let tyv = eval(genv, &ctx.env, &cty);
            let cbase = check(genv, ctx, base, &tyv)?;
            let basev = eval(genv, &ctx.env, &cbase);
            let doms = [
                (Arc::<str>::from("b"), tyv.clone()),
                (
                    Arc::<str>::from("p"),
                    Arc::new(Value::IdTy(tyv.clone(), basev.clone(), Value::var(ctx.lvl()))),
                ),
            ];
            let (cmotive, mnames, _lev) = check_family(genv, ctx, motive, &doms)?;
            let cmotive = Arc::new(cmotive);
            let mclo = Closure { env: ctx.env.clone(), body: cmotive.clone() };
            let reflv = Arc::new(Value::Refl(tyv.clone(), basev.clone()));
            let case_want = mclo.apply2(genv, basev.clone(), reflv);
            let ccase = check(genv, ctx, case, &case_want)?;
            let cend = check(genv, ctx, endpoint, &tyv)?;
            let endv = eval(genv, &ctx.env, &cend);
            let proof_want = Arc::new(Value::IdTy(tyv.clone(), basev, endv.clone()));
            let cproof = check(genv, ctx, proof, &proof_want)?;
            let proofv = eval(genv, &ctx.env, &cproof);
            let result = mclo.apply2(genv, endv, proofv);
            Ok((
                Core::J {
                    ty: cty.into(),
                    base: cbase.into(),
                    motive: cmotive,
                    motive_names: (mnames[0].clone(), mnames[1].clone()),
                    case: ccase.into(),
                    endpoint: cend.into(),
                    proof: cproof.into(),
                },
                result,
            ))
        }
        RawNode::Empty => Ok((Core::Empty, Arc::new(Value::Universe(0)))),
        RawNode::ElimEmpty(motive, scrut) => {
            let doms = [(Arc::<str>::from("x"), Arc::new(Value::Empty))];
            let (cm, mnames, _) = check_family(genv, ctx, motive, &doms)?;
            let cm = Arc::new(cm);
            let mclo = Closure { env: ctx.env.clone(), body: cm.clone() };
            let cs = check(genv, ctx, scrut, &Arc::new(Value::Empty))?;
            let sv = eval(genv, &ctx.env, &cs);
            Ok((
                Core::ElimEmpty { motive: cm, motive_name: mnames[0].clone(), scrut: cs.into() },
                mclo.apply(genv, sv),
            ))
        }
        RawNode::Unit => Ok((Core::Unit, Arc::new(Value::Universe(0)))),
        RawNode::Star => Ok((Core::Star, Arc::new(Value::Unit))),
        RawNode::ElimUnit(motive, case, scrut) => {
            let doms = [(Arc::<str>::from("x"), Arc::new(Value::Unit))];
            let (cm, mnames, _) = check_family(genv, ctx, motive, &doms)?;
            let cm = Arc::new(cm);
            let mclo = Closure { env: ctx.env.clone(), body: cm.clone() };
            let case_want = mclo.apply(genv, Arc::new(Value::Star));
            let cc = check(genv, ctx, case, &case_want)?;
            let cs = check(genv, ctx, scrut, &Arc::new(Value::Unit))?;
            let sv = eval(genv, &ctx.env, &cs);
            Ok((
                Core::ElimUnit {
                    motive: cm,
                    motive_name: mnames[0].clone(),
                    case: cc.into(),
                    scrut: cs.into(),
                },
                mclo.apply(genv, sv),
            ))
        }
        RawNode::Bool => Ok((Core::Bool, Arc::new(Value::Universe(0)))),
        RawNode::B0 => Ok((Core::B0, Arc::new(Value::Bool))),
        RawNode::B1 => Ok((Core::B1, Arc::new(Value::Bool))),
        RawNode::ElimBool(motive, case0, case1, scrut) => {
            let doms = [(Arc::<str>::from("x"), Arc::new(Value::Bool))];
            let (cm, mnames, _) = check_family(genv, ctx, motive, &doms)?;
            let cm = Arc::new(cm);
            let mclo = Closure { env: ctx.env.clone(), body: cm.clone() };
            let c0 = check(genv, ctx, case0, &mclo.apply(genv, Arc::new(Value::B0)))?;
            let c1 = check(genv, ctx, case1, &mclo.apply(genv, Arc::new(Value::B1)))?;
            let cs = check(genv, ctx, scrut, &Arc::new(Value::Bool))?;
            let sv = eval(genv, &ctx.env, &cs);
            Ok((
                Core::ElimBool {
                    motive: cm,
                    motive_name: mnames[0].clone(),
                    case0: c0.into(),
                    case1: c1.into(),
                    scrut: cs.into(),
                },
                mclo.apply(genv, sv),
            ))
        }
        RawNode::Ann(tm, ty) => {
            let (cty, _) = check_is_type(genv, ctx, ty)?;
            let tyv = eval(genv, &ctx.env, &cty);
            let ct = check(genv, ctx, tm, &tyv)?;
            Ok((ct, tyv))
        }
    }
}

pub fn check(
    genv: &GlobalEnv,
    ctx: &Context,
    t: &RawTerm,
    want: &Arc<Value>,
) -> Result<Core, TypeError> {
    match (&t.node, want.unglue().as_ref()) {
        (RawNode::Lam(x, body), Value::Pi(_, dom, cod)) => {
            let xname: Arc<str> = x.as_str().into();
            let ctx2 = ctx.bind(xname.clone(), dom.clone());
            let want_body = cod.apply(genv, Value::var(ctx.lvl()));
            let cbody = check(genv, &ctx2, body, &want_body)?;
            let dom_core = quote(genv, ctx.lvl(), dom, Unfold::No);
            Ok(Core::Lam(xname, dom_core.into(), cbody.into()))
        }
        (RawNode::Lam(..), _) => Err(err(
            &t.span,
            Category::TypeMismatch,
            format!("this is a function, but the expected type is `{}`", ctx.render(genv, want)),
        )),
        (RawNode::Pair(a, b), Value::Sigma(sname, dom, cod)) => {
            let ca = check(genv, ctx, a, dom)?;
            let av = eval(genv, &ctx.env, &ca);
            let cb = check(genv, ctx, b, &cod.apply(genv, av))?;
            let dom_core = quote(genv, ctx.lvl(), dom, Unfold::No);
            let cod_core =
                quote(genv, ctx.lvl() + 1, &cod.apply(genv, Value::var(ctx.lvl())), Unfold::No);
            Ok(Core::Pair(sname.clone(), dom_core.into(), cod_core.into(), ca.into(), cb.into()))
        }
        (RawNode::Pair(..), _) => Err(err(
            &t.span,
            Category::TypeMismatch,
            format!("this is a pair, but the expected type is `{}`", ctx.render(genv, want)),
        )),
        _ => {
            let (c, got) = infer(genv, ctx, t)?;
            if subsume(genv, ctx.lvl(), &got, want) {
                Ok(c)
            } else {
                Err(mismatch(genv, ctx, &t.span, &got, want))
            }
        }
    }
}

/// Classify a failed `subsume` into the most specific error category.
fn mismatch(
    genv: &GlobalEnv,
    ctx: &Context,
    span: &SrcSpan,
    got: &Arc<Value>,
    want: &Arc<Value>,
) -> TypeError {
    match (got.unglue().as_ref(), want.unglue().as_ref()) {
        (Value::Universe(lg), Value::Universe(lw)) => err(
            span,
            Category::UniverseError,
            format!("this type lives in `U {lg}`, which is not a subuniverse of the expected `U {lw}`"),
        ),
        (Value::IdTy(tg, _, _), Value::IdTy(tw, _, _)) if conv(genv, ctx.lvl(), tg, tw) => err(
            span,
            Category::IdEndpointMismatch,
            format!(
                "mismatched endpoints: expected a proof of `{}`, but this proves `{}`",
                ctx.render(genv, want),
                ctx.render(genv, got)
            ),
        ),
        _ => err(
            span,
            Category::TypeMismatch,
            format!(
                "expected a term of type `{}`, but this has type `{}`",
                ctx.render(genv, want),
                ctx.render(genv, got)
            ),
        ),
    }
}

/// Elaborate a term that must itself be a type, returning its universe
/// level.
pub fn check_is_type(
    genv: &GlobalEnv,
    ctx: &Context,
    t: &RawTerm,
) -> Result<(Core, Level), TypeError> {
    let (c, ty) = infer(genv, ctx, t)?;
    match ty.unglue().as_ref() {
        Value::Universe(l) => Ok((c, *l)),
        _ => Err(err(
            &t.span,
            Category::ExpectedType,
            format!("expected a type, but this term has type `{}`", ctx.render(genv, &ty)),
        )),
    }
}

/// Elaborate an eliminator motive: a family over the telescope `doms`,
/// landing in some universe. Returns the family's body under
/// `doms.len()` binders, the display names for those binders, and the
/// universe level.
///
/// Literal lambdas are peeled off directly; any other term is inferred at
/// function type and η-expanded.
fn check_family(
    genv: &GlobalEnv,
    ctx: &Context,
    t: &RawTerm,
    doms: &[(Arc<str>, Arc<Value>)],
) -> Result<(Core, Vec<Arc<str>>, Level), TypeError> {
    if doms.is_empty() {
        let (c, l) = check_is_type(genv, ctx, t)?;
        return Ok((c, Vec::new(), l));
    }
    if let RawNode::Lam(x, body) = &t.node {
        let xname: Arc<str> = x.as_str().into();
        let ctx2 = ctx.bind(xname.clone(), doms[0].1.clone());
        let (c, inner, l) = check_family(genv, &ctx2, body, &doms[1..])?;
        let mut names = Vec::with_capacity(doms.len());
        names.push(xname);
        names.extend(inner);
        return Ok((c, names, l));
    }

    let (c, ty) = infer(genv, ctx, t)?;
    let n = doms.len();
    let mut names = Vec::with_capacity(n);
    let mut cur = ty;
    for (i, (dname, dty)) in doms.iter().enumerate() {
        let lvl_i = ctx.lvl() + i;
        let scope = || {
            let mut s = ctx.names.clone();
            s.extend(doms[..i].iter().map(|(dn, _)| dn.clone()));
            s
        };
        match cur.unglue().as_ref() {
            Value::Pi(nm, dom, cod) => {
                if !conv(genv, lvl_i, dom, dty) {
                    return Err(err(
                        &t.span,
                        Category::TypeMismatch,
                        format!(
                            "the motive's argument {} must have type `{}`, but it takes `{}`",
                            i + 1,
                            render_value(genv, &scope(), lvl_i, dty),
                            render_value(genv, &scope(), lvl_i, dom),
                        ),
                    ));
                }
                names.push(if nm.as_ref() != "_" { nm.clone() } else { dname.clone() });
                let next = cod.apply(genv, Value::var(lvl_i));
                cur = next;
            }
            _ => {
                return Err(err(
                    &t.span,
                    Category::ExpectedType,
                    format!(
                        "the motive must take {n} argument(s), but after {i} it has type `{}`",
                        render_value(genv, &scope(), lvl_i, &cur),
                    ),
                ));
            }
        }
    }
    let level = match cur.unglue().as_ref() {
        Value::Universe(l) => *l,
        _ => {
            let mut scope = ctx.names.clone();
            scope.extend(doms.iter().map(|(dn, _)| dn.clone()));
            return Err(err(
                &t.span,
                Category::ExpectedType,
                format!(
                    "the motive must land in a universe, but it returns `{}`",
                    render_value(genv, &scope, ctx.lvl() + n, &cur),
                ),
            ));
        }
    };
    let mut applied = eval(genv, &ctx.env, &c);
    for i in 0..n {
        applied = do_app(genv, applied, Value::var(ctx.lvl() + i));
    }
    let body = quote(genv, ctx.lvl() + n, &applied, Unfold::No);
    Ok((body, names, level))
}

impl GlobalEnv {
    /// Check one declaration and add it to the environment.
    pub fn check_decl(
        &mut self,
        file: &Arc<str>,
        d: &RawDecl,
    ) -> Result<Arc<Declaration>, KernelError> {
        if self.contains(&d.name) {
            return Err(KernelError::Type(TypeError::new(
                d.name_span.clone(),
                Category::DuplicateName,
                format!("the name `{}` is already declared", d.name),
            )));
        }
        let tag = |mut e: TypeError| {
            e.decl = Some(d.name.clone());
            KernelError::Type(e)
        };
        let ctx = Context::new();
        let (ty_core, _) = check_is_type(self, &ctx, &d.ty).map_err(tag)?;
        let ty_core = Arc::new(ty_core);
        let tyv = eval(self, &Env::empty(), &ty_core);
        let body_core = match (d.kind, &d.body) {
            (DeclKind::Def, Some(b)) => Some(Arc::new(check(self, &ctx, b, &tyv).map_err(tag)?)),
            (DeclKind::Axiom, None) => None,
            _ => unreachable!("parser invariant: a body exists exactly for `def`"),
        };
        let name: Arc<str> = d.name.as_str().into();
        let mut axioms = self.axioms_of_term(&ty_core);
        match &body_core {
            Some(b) => {
                axioms.extend(self.axioms_of_term(b));
            }
            None => {
                axioms.insert(name.clone());
            }
        }
        let decl = Arc::new(Declaration::new(
            name,
            d.kind,
            file.clone(),
            d.span.clone(),
            ty_core,
            body_core,
            axioms,
        ));
        self.insert(decl.clone());
        Ok(decl)
    }

    /// Parse and check a whole source file, adding its declarations.
    /// Stops at the first error.
    pub fn load_source(
        &mut self,
        file: &str,
        src: &str,
    ) -> Result<Vec<Arc<Declaration>>, KernelError> {
        let raw_decls = parse_file(file, src)?;
        let file: Arc<str> = file.into();
        let mut out = Vec::with_capacity(raw_decls.len());
        for d in &raw_decls {
            out.push(self.check_decl(&file, d)?);
        }
        Ok(out)
    }

    /// Parse and check a whole source file, collecting every error instead of
    /// stopping at the first one. A declaration that fails to check is skipped
    /// (later references to it report it as unbound); a parse error abandons
    /// the rest of the file, since recovery points are not defined.
    pub fn load_source_collect(
        &mut self,
        file: &str,
        src: &str,
        errors: &mut Vec<KernelError>,
    ) -> Vec<Arc<Declaration>> {
        let raw_decls = match parse_file(file, src) {
            Ok(ds) => ds,
            Err(e) => {
                errors.push(e.into());
                return Vec::new();
            }
        };
        let file: Arc<str> = file.into();
        let mut out = Vec::with_capacity(raw_decls.len());
        for d in &raw_decls {
            match self.check_decl(&file, d) {
                Ok(decl) => out.push(decl),
                Err(e) => errors.push(e),
            }
        }
        out
    }
}
