//! Recursive-descent parser for the surface language.
//!
//! Precedence, loosest to tightest:
//!
//! 1. `->` (right associative) and `fun _ => _`, which extends as far right
//!    as possible;
//! 2. `**` (right associative), so `A ** B -> C` is `(A ** B) -> C`;
//! 3. application, including the saturated keyword forms (`pair`, `fst`,
//!    `snd`, `Id`, `refl`, `J`, `elim0`, `elim1`, `elim2`), whose arguments
//!    are atoms;
//! 4. atoms: names, `U n`, the finite-type literals, and parenthesised
//!    terms, including annotations `(t : T)`.
//!
//! A parenthesised group `(x y : T)` immediately followed by `->` or `**`
//! is a binder telescope for that connective; several groups may be
//! juxtaposed, as in `(A : U 0) (x : A) -> B`. Anywhere else, `(t : T)`
//! is an annotation.

use super::ast::{DeclKind, ParseError, RawDecl, RawNode, RawTerm, SrcSpan};
use super::lexer::{tokenize, Spanned, Tok};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Connector {
    Arrow,
    Star2,
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_span(&self) -> SrcSpan {
        self.toks[self.pos].span.clone()
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            span: self.peek_span(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Spanned, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.err(what))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, SrcSpan), ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let sp = self.bump().span;
                Ok((name, sp))
            }
            _ => Err(self.err(what)),
        }
    }

    /// Does the token at `i` begin an atom?
    fn atom_starts_at(&self, i: usize) -> bool {
        matches!(
            self.toks[i].tok,
            Tok::LParen
                | Tok::Ident(_)
                | Tok::KwU
                | Tok::KwN0
                | Tok::KwN1
                | Tok::KwStar
                | Tok::KwN2
                | Tok::KwB0
                | Tok::KwB1
        )
    }

    /// Does position `i` start a binder group `( ident+ : ... )`? If so,
    /// return the index just past its closing paren.
    fn scan_group(&self, i: usize) -> Option<usize> {
        if self.toks[i].tok != Tok::LParen {
            return None;
        }
        let mut j = i + 1;
        let mut idents = 0;
        while let Tok::Ident(_) = self.toks[j].tok {
            idents += 1;
            j += 1;
        }
        if idents == 0 || self.toks[j].tok != Tok::Colon {
            return None;
        }
        // Balance parentheses to find the close of the group.
        let mut depth = 1;
        while depth > 0 {
            match self.toks[j].tok {
                Tok::LParen => depth += 1,
                Tok::RParen => depth -= 1,
                Tok::Eof => return None,
                _ => {}
            }
            j += 1;
        }
        Some(j)
    }

    /// If the input at the cursor is a run of binder groups followed by
    /// `->` or `**`, report which connector follows the run.
    fn scan_binders(&self) -> Option<Connector> {
        let mut i = self.pos;
        let mut groups = 0;
        while let Some(j) = self.scan_group(i) {
            groups += 1;
            i = j;
        }
        if groups == 0 {
            return None;
        }
        match self.toks[i].tok {
            Tok::Arrow => Some(Connector::Arrow),
            Tok::Star2 => Some(Connector::Star2),
            _ => None,
        }
    }

    /// Parse the run of binder groups the scanner validated, consume the
    /// connector, parse the body, and fold the telescope over it.
    fn binder_telescope(&mut self, conn: Connector) -> Result<RawTerm, ParseError> {
        let mut binders: Vec<(String, SrcSpan, RawTerm)> = Vec::new();
        while self.scan_group(self.pos).is_some() {
            let open = self.expect(Tok::LParen, "`(`")?.span;
            let mut names = Vec::new();
            while let Tok::Ident(_) = self.peek() {
                names.push(self.ident("a binder name")?);
            }
            self.expect(Tok::Colon, "`:`")?;
            let ty = self.term()?;
            self.expect(Tok::RParen, "`)`")?;
            for (name, _) in names {
                binders.push((name, open.clone(), ty.clone()));
            }
        }
        let body = match conn {
            Connector::Arrow => {
                self.expect(Tok::Arrow, "`->`")?;
                self.term()?
            }
            Connector::Star2 => {
                self.expect(Tok::Star2, "`**`")?;
                self.sigma_level()?
            }
        };
        let mut out = body;
        for (name, open, ty) in binders.into_iter().rev() {
            let span = open.join(&out.span);
            let node = match conn {
                Connector::Arrow => RawNode::Pi(name, Box::new(ty), Box::new(out)),
                Connector::Star2 => RawNode::Sigma(name, Box::new(ty), Box::new(out)),
            };
            out = RawTerm::new(span, node);
        }
        Ok(out)
    }

    /// Entry point for one term: the `->` level.
    fn term(&mut self) -> Result<RawTerm, ParseError> {
        if *self.peek() == Tok::Fun {
            let open = self.bump().span;
            let mut names = Vec::new();
            while let Tok::Ident(_) = self.peek() {
                names.push(self.ident("a binder name")?);
            }
            if names.is_empty() {
                return Err(self.err("a binder name after `fun`"));
            }
            self.expect(Tok::FatArrow, "`=>`")?;
            let mut body = self.term()?;
            for (name, _) in names.into_iter().rev() {
                let span = open.join(&body.span);
                body = RawTerm::new(span, RawNode::Lam(name, Box::new(body)));
            }
            return Ok(body);
        }
        if self.scan_binders() == Some(Connector::Arrow) {
            return self.binder_telescope(Connector::Arrow);
        }
        let lhs = self.sigma_level()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.join(&rhs.span);
            return Ok(RawTerm::new(span, RawNode::Pi("_".into(), Box::new(lhs), Box::new(rhs))));
        }
        Ok(lhs)
    }

    /// The `**` level.
    fn sigma_level(&mut self) -> Result<RawTerm, ParseError> {
        if self.scan_binders() == Some(Connector::Star2) {
            return self.binder_telescope(Connector::Star2);
        }
        let lhs = self.app_level()?;
        if *self.peek() == Tok::Star2 {
            self.bump();
            let rhs = self.sigma_level()?;
            let span = lhs.span.join(&rhs.span);
            return Ok(RawTerm::new(span, RawNode::Sigma("_".into(), Box::new(lhs), Box::new(rhs))));
        }
        Ok(lhs)
    }

    /// The application level: a head (atom or saturated keyword form)
    /// followed by atom arguments.
    fn app_level(&mut self) -> Result<RawTerm, ParseError> {
        let mut head = self.app_head()?;
        while self.atom_starts_at(self.pos) {
            let arg = self.atom()?;
            let span = head.span.join(&arg.span);
            head = RawTerm::new(span, RawNode::App(Box::new(head), Box::new(arg)));
        }
        Ok(head)
    }

    fn app_head(&mut self) -> Result<RawTerm, ParseError> {
        macro_rules! form {
            ($kw:expr, $build:expr) => {{
                let open = self.bump().span;
                let t = $build(self)?;
                let span = open.join(&self.toks[self.pos - 1].span);
                return Ok(RawTerm::new(span, t));
            }};
        }
        match self.peek() {
            Tok::KwPair => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::Pair(Box::new(p.atom()?), Box::new(p.atom()?)))
            }),
            Tok::KwFst => form!(self, |p: &mut Parser| Ok::<_, ParseError>(RawNode::Fst(Box::new(p.atom()?)))),
            Tok::KwSnd => form!(self, |p: &mut Parser| Ok::<_, ParseError>(RawNode::Snd(Box::new(p.atom()?)))),
            Tok::KwId => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::IdTy(
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                ))
            }),
            Tok::KwRefl => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::Refl(Box::new(p.atom()?), Box::new(p.atom()?)))
            }),
            Tok::KwJ => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::J {
                    ty: Box::new(p.atom()?),
                    base: Box::new(p.atom()?),
                    motive: Box::new(p.atom()?),
                    case: Box::new(p.atom()?),
                    endpoint: Box::new(p.atom()?),
                    proof: Box::new(p.atom()?),
                })
            }),
            Tok::KwElim0 => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::ElimEmpty(Box::new(p.atom()?), Box::new(p.atom()?)))
            }),
            Tok::KwElim1 => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::ElimUnit(
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                ))
            }),
            Tok::KwElim2 => form!(self, |p: &mut Parser| {
                Ok::<_, ParseError>(RawNode::ElimBool(
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                    Box::new(p.atom()?),
                ))
            }),
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<RawTerm, ParseError> {
        let span = self.peek_span();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::Var(name)))
            }
            Tok::KwU => {
                self.bump();
                match *self.peek() {
                    Tok::Nat(n) => {
                        let end = self.bump().span;
                        Ok(RawTerm::new(span.join(&end), RawNode::Universe(n)))
                    }
                    _ => Err(self.err("a universe level after `U`")),
                }
            }
            Tok::KwN0 => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::Empty))
            }
            Tok::KwN1 => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::Unit))
            }
            Tok::KwStar => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::Star))
            }
            Tok::KwN2 => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::Bool))
            }
            Tok::KwB0 => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::B0))
            }
            Tok::KwB1 => {
                self.bump();
                Ok(RawTerm::new(span, RawNode::B1))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                if *self.peek() == Tok::Colon {
                    self.bump();
                    let ty = self.term()?;
                    let close = self.expect(Tok::RParen, "`)`")?.span;
                    Ok(RawTerm::new(span.join(&close), RawNode::Ann(Box::new(t), Box::new(ty))))
                } else {
                    let close = self.expect(Tok::RParen, "`)`")?.span;
                    Ok(RawTerm::new(span.join(&close), t.node))
                }
            }
            _ => Err(self.err("a term")),
        }
    }

    fn decl(&mut self) -> Result<RawDecl, ParseError> {
        let kind = match self.peek() {
            Tok::Def => DeclKind::Def,
            Tok::Axiom => DeclKind::Axiom,
            _ => return Err(self.err("`def` or `axiom`")),
        };
        let open = self.bump().span;
        let (name, name_span) = self.ident("a declaration name")?;
        self.expect(Tok::Colon, "`:`")?;
        let ty = self.term()?;
        let body = match kind {
            DeclKind::Def => {
                self.expect(Tok::ColonEq, "`:=`")?;
                Some(self.term()?)
            }
            DeclKind::Axiom => None,
        };
        let close = self.expect(Tok::Semi, "`;`")?.span;
        Ok(RawDecl { kind, name, name_span, ty, body, span: open.join(&close) })
    }
}

fn parser_for(file: &str, src: &str) -> Result<Parser, ParseError> {
    let toks = tokenize(file, src)?;
    Ok(Parser { toks, pos: 0 })
}

/// Parse a whole source file into its declarations.
pub fn parse_file(file: &str, src: &str) -> Result<Vec<RawDecl>, ParseError> {
    let mut p = parser_for(file, src)?;
    let mut decls = Vec::new();
    while *p.peek() != Tok::Eof {
        decls.push(p.decl()?);
    }
    Ok(decls)
}

/// Parse a single term; the input must contain nothing else.
pub fn parse_term(file: &str, src: &str) -> Result<RawTerm, ParseError> {
    let mut p = parser_for(file, src)?;
    let t = p.term()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(t)
}

/// Convenience for tests and internal callers: parse a term from an
/// unnamed snippet, panicking on failure.
pub fn must_parse(src: &str) -> RawTerm {
    match parse_term("<snippet>", src) {
        Ok(t) => t,
        Err(e) => panic!("parse failure in snippet {src:?}: {e}"),
    }
}
