//! Cell expressions over a polygraph.

mod expr;
mod key;
mod parse;
mod print;

pub use expr::{boundary, compose, iterated_boundary, CellExpr, CellKind, Sign};
pub use key::{GenKey, Simplex};
pub use parse::{parse, parse_in, parse_with};
pub use print::{print, print_unicode, print_with};
