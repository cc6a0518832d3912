//! Recursive-descent parser for Laurent polynomial expressions.
//!
//! ```text
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' signed_int)?
//! base     := rational | identifier | '(' expr ')'
//! rational := int ('/' posint)?
//! ```

use num_bigint::BigInt;

use super::{is_identifier, LaurentPoly, RingCtx};
use crate::error::{Error, Result};
use crate::numtheory::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line: tl, column: tc });
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n: BigInt = s.parse().expect("digit run parses");
            out.push(Spanned { tok: Tok::Int(n), line: tl, column: tc });
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            debug_assert!(is_identifier(&s));
            out.push(Spanned { tok: Tok::Ident(s), line: tl, column: tc });
        } else {
            return Err(Error::Syntax {
                line: tl,
                column: tc,
                message: format!("unexpected character {c:?}"),
            });
        }
        column += i - start;
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ctx: &'a RingCtx,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: String) -> Error {
        let t = &self.toks[self.pos];
        Error::Syntax { line: t.line, column: t.column, message }
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let t = self.bump();
        let Tok::Int(n) = t.tok else {
            return Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: format!("expected integer exponent, found {}", t.tok.describe()),
            });
        };
        let n = i64::try_from(if negative { -n } else { n }).map_err(|_| Error::Syntax {
            line: t.line,
            column: t.column,
            message: "exponent out of range".into(),
        })?;
        base.pow(n)
    }

    fn base(&mut self) -> Result<LaurentPoly> {
        let t = self.bump();
        match t.tok {
            Tok::Int(num) => {
                if *self.peek() != Tok::Slash {
                    return Ok(LaurentPoly::constant(self.ctx, Rat::from_integer(num)));
                }
                self.bump();
                let d = self.bump();
                match d.tok {
                    Tok::Int(den) if den != BigInt::from(0) => {
                        Ok(LaurentPoly::constant(self.ctx, Rat::new(num, den)?))
                    }
                    other => Err(Error::Syntax {
                        line: d.line,
                        column: d.column,
                        message: format!("expected positive denominator, found {}", other.describe()),
                    }),
                }
            }
            Tok::Ident(name) => match self.ctx.index_of(&name) {
                Some(i) => Ok(LaurentPoly::var(self.ctx, i)),
                None => Err(Error::UnknownVariable { name, line: t.line, column: t.column }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: format!("expected number, variable or '(', found {}", other.describe()),
            }),
        }
    }
}

/// Parses `text` as an element of the Laurent ring over `ctx`.
pub fn parse(text: &str, ctx: &RingCtx) -> Result<LaurentPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ctx };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error_here(format!("unexpected {}", p.peek().describe())));
    }
    Ok(out)
}
