//! Parser for the textual cell notation.
//!
//! ```text
//! expr    = primary { "*" digits primary }
//! primary = simplex | ident | "1_" primary | "(" expr ")"
//! simplex = ("<" | "⟨") digits { "," digits } (">" | "⟩")
//! ident   = letter { letter | digit | "_" | "." | "'" }
//! ```
//!
//! `y *p x` denotes `y ∘_p x`. Lower indices bind tighter; equal indices
//! associate to the left. Operands of unequal dimension are lifted by units.

use super::expr::{compose, CellExpr};
use super::key::{is_identifier, GenKey, Simplex};
use crate::error::{Error, Result};
use crate::polygraph::Polygraph;

/// Parses an expression whose generators are all simplices.
pub fn parse(text: &str) -> Result<CellExpr> {
    parse_with(text, &mut |_| None)
}

/// Parses an expression, resolving names through `ctx` and checking that every
/// key is a generator of `ctx`.
pub fn parse_in(text: &str, ctx: &Polygraph) -> Result<CellExpr> {
    let e = parse_with(text, &mut |name| ctx.key_by_name(name))?;
    for k in e.generators() {
        if !ctx.contains(&k) {
            return Err(Error::UnknownGenerator(k));
        }
    }
    Ok(e)
}

/// Parses an expression, resolving identifiers with `resolve`.
pub fn parse_with(text: &str, resolve: &mut dyn FnMut(&str) -> Option<GenKey>) -> Result<CellExpr> {
    let mut p = Parser {
        src: text,
        pos: 0,
        resolve,
    };
    let e = p.expr_bounded(usize::MAX)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a, 'r> {
    src: &'a str,
    pos: usize,
    resolve: &'r mut dyn FnMut(&str) -> Option<GenKey>,
}

impl Parser<'_, '_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let len = self
            .rest()
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        let n = self.rest()[..len]
            .parse::<u64>()
            .map_err(|_| self.err("number out of range"))?;
        self.pos += len;
        Ok(n)
    }

    /// Peeks at a `*p` operator without consuming it.
    fn peek_op(&mut self) -> Result<Option<(usize, usize)>> {
        self.skip_ws();
        if !self.rest().starts_with('*') {
            return Ok(None);
        }
        let start = self.pos;
        self.pos += 1;
        let p = self.number();
        let end = self.pos;
        self.pos = start;
        let p = p?;
        let p = usize::try_from(p)
            .ok()
            .filter(|p| *p < 1 << 16)
            .ok_or_else(|| self.err("composition index out of range"))?;
        Ok(Some((p, end)))
    }

    /// Precedence climbing. Only operators with index `<= max_p` are consumed.
    fn expr_bounded(&mut self, max_p: usize) -> Result<CellExpr> {
        let mut lhs = self.primary()?;
        while let Some((p, end)) = self.peek_op()? {
            if p > max_p {
                break;
            }
            let op_pos = self.pos;
            self.pos = end;
            // Strictly lower indices bind tighter than `p`, giving left
            // association for equal indices.
            let rhs = if p == 0 {
                self.primary()?
            } else {
                self.expr_bounded(p - 1)?
            };
            lhs = compose(p, rhs, lhs).map_err(|e| Error::Parse {
                pos: op_pos,
                msg: e.to_string(),
            })?;
        }
        Ok(lhs)
    }

    fn primary(&mut self) -> Result<CellExpr> {
        self.skip_ws();
        if self.eat("1_") {
            return Ok(CellExpr::unit(self.primary()?));
        }
        if self.eat("(") {
            let e = self.expr_bounded(usize::MAX)?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            return Ok(e);
        }
        let unicode = if self.eat("<") {
            false
        } else if self.eat("⟨") {
            true
        } else {
            return self.ident();
        };
        let start = self.pos;
        let mut idx = Vec::new();
        loop {
            let n = self.number()?;
            idx.push(u16::try_from(n).map_err(|_| self.err("vertex index out of range"))?);
            if !self.eat(",") {
                break;
            }
        }
        let close = if unicode { "⟩" } else { ">" };
        if !self.eat(close) {
            return Err(self.err(format!("expected '{close}'")));
        }
        let s = Simplex::new(idx).map_err(|e| Error::Parse {
            pos: start,
            msg: e.to_string(),
        })?;
        Ok(CellExpr::gen(GenKey::Simplex(s)))
    }

    fn ident(&mut self) -> Result<CellExpr> {
        let len: usize = self
            .rest()
            .char_indices()
            .take_while(|&(i, c)| {
                if i == 0 {
                    c.is_ascii_alphabetic()
                } else {
                    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\'')
                }
            })
            .map(|(_, c)| c.len_utf8())
            .sum();
        if len == 0 {
            return Err(self.err("expected a cell"));
        }
        let src = self.src;
        let name = &src[self.pos..self.pos + len];
        debug_assert!(is_identifier(name));
        let key = (self.resolve)(name).ok_or_else(|| self.err(format!("unknown name {name:?}")))?;
        self.pos += len;
        Ok(CellExpr::gen(key))
    }
}
