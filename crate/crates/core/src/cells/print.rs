//! Printer for the textual cell notation.
//!
//! Parentheses are omitted wherever the parser's priority rule recovers the
//! tree. Units introduced by lifting are left implicit: at each composite the
//! outer units of at most one operand are dropped, and the parser restores
//! exactly that many.

use std::fmt::Write;

use super::expr::{CellExpr, CellKind};

pub fn print(e: &CellExpr) -> String {
    print_with(e, false)
}

pub fn print_unicode(e: &CellExpr) -> String {
    print_with(e, true)
}

pub fn print_with(e: &CellExpr, unicode: bool) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, unicode);
    out
}

fn write_expr(out: &mut String, e: &CellExpr, unicode: bool) {
    match e.kind() {
        CellKind::Gen(k) => {
            let _ = k.write_with(out, unicode);
        }
        CellKind::Unit(inner) => {
            out.push_str("1_");
            if matches!(inner.kind(), CellKind::Comp { .. }) {
                out.push('(');
                write_expr(out, inner, unicode);
                out.push(')');
            } else {
                write_expr(out, inner, unicode);
            }
        }
        CellKind::Comp { p, first, second } => {
            let (first, second) = lift_operands(first, second);
            write_operand(out, second, *p, false, unicode);
            let _ = write!(out, "*{p}");
            // Keeps `*0 1_x` from reading as `*01_x`.
            let mut rhs = String::new();
            write_operand(&mut rhs, first, *p, true, unicode);
            if rhs.starts_with(|c: char| c.is_ascii_digit()) {
                out.push(' ');
            }
            out.push_str(&rhs);
        }
    }
}

/// Drops the outer units of the operand with strictly more of them, when the
/// other operand could have been its unlifted partner.
fn lift_operands<'a>(first: &'a CellExpr, second: &'a CellExpr) -> (&'a CellExpr, &'a CellExpr) {
    let (df, ds) = (first.unit_depth(), second.unit_depth());
    if df > ds {
        (first.strip_units(), second)
    } else if ds > df {
        (first, second.strip_units())
    } else {
        (first, second)
    }
}

fn write_operand(out: &mut String, e: &CellExpr, parent_p: usize, applied_first: bool, unicode: bool) {
    let needs_parens = match e.kind() {
        CellKind::Comp { p, .. } => *p > parent_p || (applied_first && *p == parent_p),
        _ => false,
    };
    if needs_parens {
        out.push('(');
        write_expr(out, e, unicode);
        out.push(')');
    } else {
        write_expr(out, e, unicode);
    }
}
