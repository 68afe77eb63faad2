//! Tokenizer for the surface language.
//!
//! Comments run from `--` to the end of the line. Identifiers match
//! `[A-Za-z_][A-Za-z0-9_]*`; a handful of them are reserved keywords.

use std::fmt;
use std::sync::Arc;

use super::ast::{ParseError, SrcSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Nat(u32),
    // Keywords.
    Def,
    Axiom,
    Fun,
    KwU,
    KwPair,
    KwFst,
    KwSnd,
    KwId,
    KwRefl,
    KwJ,
    KwN0,
    KwElim0,
    KwN1,
    KwStar,
    KwElim1,
    KwN2,
    KwB0,
    KwB1,
    KwElim2,
    // Symbols.
    LParen,
    RParen,
    Colon,
    Semi,
    ColonEq,
    Arrow,
    FatArrow,
    Star2,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Nat(n) => write!(f, "numeral `{n}`"),
            Tok::Def => write!(f, "`def`"),
            Tok::Axiom => write!(f, "`axiom`"),
            Tok::Fun => write!(f, "`fun`"),
            Tok::KwU => write!(f, "`U`"),
            Tok::KwPair => write!(f, "`pair`"),
            Tok::KwFst => write!(f, "`fst`"),
            Tok::KwSnd => write!(f, "`snd`"),
            Tok::KwId => write!(f, "`Id`"),
            Tok::KwRefl => write!(f, "`refl`"),
            Tok::KwJ => write!(f, "`J`"),
            Tok::KwN0 => write!(f, "`N0`"),
            Tok::KwElim0 => write!(f, "`elim0`"),
            Tok::KwN1 => write!(f, "`N1`"),
            Tok::KwStar => write!(f, "`star`"),
            Tok::KwElim1 => write!(f, "`elim1`"),
            Tok::KwN2 => write!(f, "`N2`"),
            Tok::KwB0 => write!(f, "`b0`"),
            Tok::KwB1 => write!(f, "`b1`"),
            Tok::KwElim2 => write!(f, "`elim2`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::ColonEq => write!(f, "`:=`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::FatArrow => write!(f, "`=>`"),
            Tok::Star2 => write!(f, "`**`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

/// A token plus the span it occupies.
#[derive(Debug, Clone)]
pub struct Spanned {
    pub tok: Tok,
    pub span: SrcSpan,
}

/// Is `s` a reserved word (unusable as a variable or binder name)?
pub fn is_reserved(s: &str) -> bool {
    keyword(s).is_some()
}

fn keyword(s: &str) -> Option<Tok> {
    Some(match s {
        "def" => Tok::Def,
        "axiom" => Tok::Axiom,
        "fun" => Tok::Fun,
        "U" => Tok::KwU,
        "pair" => Tok::KwPair,
        "fst" => Tok::KwFst,
        "snd" => Tok::KwSnd,
        "Id" => Tok::KwId,
        "refl" => Tok::KwRefl,
        "J" => Tok::KwJ,
        "N0" => Tok::KwN0,
        "elim0" => Tok::KwElim0,
        "N1" => Tok::KwN1,
        "star" => Tok::KwStar,
        "elim1" => Tok::KwElim1,
        "N2" => Tok::KwN2,
        "b0" => Tok::KwB0,
        "b1" => Tok::KwB1,
        "elim2" => Tok::KwElim2,
        _ => return None,
    })
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    file: Arc<str>,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn here(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn span_from(&self, start: (u32, u32)) -> SrcSpan {
        SrcSpan::new(self.file.clone(), start.0, start.1, self.line, self.col)
    }
}

/// Tokenize `src`, attributing positions to `file`. The final element of a
/// successful result is always an `Eof` token.
pub fn tokenize(file: &str, src: &str) -> Result<Vec<Spanned>, ParseError> {
    let file: Arc<str> = file.into();
    let mut cur = Cursor { chars: src.chars().peekable(), file: file.clone(), line: 1, col: 1 };
    let mut out = Vec::new();

    loop {
        // Skip whitespace and comments.
        loop {
            match cur.peek() {
                Some(c) if c.is_whitespace() => {
                    cur.bump();
                }
                Some('-') => {
                    // Only a comment if followed by a second '-'.
                    let mut probe = cur.chars.clone();
                    probe.next();
                    if probe.peek() == Some(&'-') {
                        while let Some(c) = cur.peek() {
                            if c == '\n' {
                                break;
                            }
                            cur.bump();
                        }
                    } else {
                        break;
                    }
                }
                _ => break,
            }
        }

        let start = cur.here();
        let c = match cur.bump() {
            None => {
                out.push(Spanned { tok: Tok::Eof, span: cur.span_from(start) });
                return Ok(out);
            }
            Some(c) => c,
        };

        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            ':' => {
                if cur.peek() == Some('=') {
                    cur.bump();
                    Tok::ColonEq
                } else {
                    Tok::Colon
                }
            }
            '-' => {
                if cur.peek() == Some('>') {
                    cur.bump();
                    Tok::Arrow
                } else {
                    return Err(ParseError {
                        span: cur.span_from(start),
                        expected: "`->` or `--`".to_string(),
                        found: "`-`".to_string(),
                    });
                }
            }
            '=' => {
                if cur.peek() == Some('>') {
                    cur.bump();
                    Tok::FatArrow
                } else {
                    return Err(ParseError {
                        span: cur.span_from(start),
                        expected: "`=>`".to_string(),
                        found: "`=`".to_string(),
                    });
                }
            }
            '*' => {
                if cur.peek() == Some('*') {
                    cur.bump();
                    Tok::Star2
                } else {
                    return Err(ParseError {
                        span: cur.span_from(start),
                        expected: "`**`".to_string(),
                        found: "`*`".to_string(),
                    });
                }
            }
            c if c.is_ascii_digit() => {
                let mut n = String::new();
                n.push(c);
                while let Some(d) = cur.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        cur.bump();
                    } else {
                        break;
                    }
                }
                match n.parse::<u32>() {
                    Ok(v) => Tok::Nat(v),
                    Err(_) => {
                        return Err(ParseError {
                            span: cur.span_from(start),
                            expected: "a universe level that fits in 32 bits".to_string(),
                            found: format!("numeral `{n}`"),
                        });
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                s.push(c);
                while let Some(d) = cur.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        cur.bump();
                    } else {
                        break;
                    }
                }
                keyword(&s).unwrap_or(Tok::Ident(s))
            }
            other => {
                return Err(ParseError {
                    span: cur.span_from(start),
                    expected: "a token".to_string(),
                    found: format!("character `{other}`"),
                });
            }
        };
        out.push(Spanned { tok, span: cur.span_from(start) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize("<test>", src).unwrap().into_iter().map(|s| s.tok).collect()
    }

    #[test]
    fn lambda_tokens() {
        assert_eq!(
            toks("fun x => x"),
            vec![Tok::Fun, Tok::Ident("x".into()), Tok::FatArrow, Tok::Ident("x".into()), Tok::Eof]
        );
    }

    #[test]
    fn symbols_and_keywords() {
        assert_eq!(
            toks("def id : (A : U 0) -> A ** A := pair;"),
            vec![
                Tok::Def,
                Tok::Ident("id".into()),
                Tok::Colon,
                Tok::LParen,
                Tok::Ident("A".into()),
                Tok::Colon,
                Tok::KwU,
                Tok::Nat(0),
                Tok::RParen,
                Tok::Arrow,
                Tok::Ident("A".into()),
                Tok::Star2,
                Tok::Ident("A".into()),
                Tok::ColonEq,
                Tok::KwPair,
                Tok::Semi,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn comments_are_skipped() {
        assert_eq!(toks("-- a comment\nx -- trailing\n"), vec![Tok::Ident("x".into()), Tok::Eof]);
    }

    #[test]
    fn keywords_need_word_boundaries() {
        assert_eq!(toks("funny fst_ b12"), vec![
            Tok::Ident("funny".into()),
            Tok::Ident("fst_".into()),
            Tok::Ident("b12".into()),
            Tok::Eof
        ]);
    }

    #[test]
    fn spans_track_lines_and_cols() {
        let ts = tokenize("<test>", "ab\n  cd").unwrap();
        assert_eq!(ts[0].span.start_line, 1);
        assert_eq!(ts[0].span.start_col, 1);
        assert_eq!(ts[0].span.end_col, 3);
        assert_eq!(ts[1].span.start_line, 2);
        assert_eq!(ts[1].span.start_col, 3);
    }

    #[test]
    fn stray_equals_is_an_error() {
        let err = tokenize("<test>", "x = y").unwrap_err();
        assert!(err.expected.contains("=>"));
    }

    #[test]
    fn single_star_is_an_error() {
        assert!(tokenize("<test>", "A * B").is_err());
    }
}
