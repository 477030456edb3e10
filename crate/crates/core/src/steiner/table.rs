use std::fmt;

use super::AugDirComplex;
use crate::cells::Sign;
use crate::error::{Error, Result};
use crate::polygraph::Chain;

/// A cell of the ω-category of tables: for `0 <= i <= n` a pair
/// `(x_i⁻, x_i⁺)` of nonnegative `i`-chains.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CellTable {
    rows: Vec<(Chain, Chain)>,
}

impl CellTable {
    /// # Panics
    /// If `rows` is empty or a row has the wrong dimension.
    pub fn from_rows(rows: Vec<(Chain, Chain)>) -> Self {
        assert!(!rows.is_empty(), "a table has at least one row");
        for (i, (n, p)) in rows.iter().enumerate() {
            assert!(n.dim() == i && p.dim() == i, "row {i} has the wrong dimension");
        }
        CellTable { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[(Chain, Chain)] {
        &self.rows
    }

    pub fn row(&self, sign: Sign, i: usize) -> &Chain {
        let (n, p) = &self.rows[i];
        match sign {
            Sign::Neg => n,
            Sign::Pos => p,
        }
    }

    /// The `j`-source or `j`-target: rows below `j` kept, row `j` doubled.
    pub fn boundary_at(&self, sign: Sign, j: usize) -> Result<CellTable> {
        if j > self.dim() {
            return Err(Error::BoundaryOutOfRange {
                requested: j,
                dim: self.dim(),
            });
        }
        let mut rows = self.rows[..j].to_vec();
        let r = self.row(sign, j).clone();
        rows.push((r.clone(), r));
        Ok(CellTable { rows })
    }

    pub fn source(&self) -> Result<CellTable> {
        self.boundary_at(Sign::Neg, self.checked_lower()?)
    }

    pub fn target(&self) -> Result<CellTable> {
        self.boundary_at(Sign::Pos, self.checked_lower()?)
    }

    fn checked_lower(&self) -> Result<usize> {
        self.dim().checked_sub(1).ok_or(Error::ZeroDimensional)
    }

    /// The identity: a zero row appended.
    pub fn unit(&self) -> CellTable {
        let mut rows = self.rows.clone();
        let z = Chain::zero(self.dim() + 1);
        rows.push((z.clone(), z));
        CellTable { rows }
    }

    /// `second ∘_j first`, provided the `j`-target of `first` is the
    /// `j`-source of `second`.
    pub fn compose(j: usize, first: &CellTable, second: &CellTable) -> Result<CellTable> {
        let n = first.dim();
        if second.dim() != n || j >= n {
            return Err(Error::CompositionIndex {
                p: j,
                left: second.dim(),
                right: n,
            });
        }
        if let Some(i) = (0..j).find(|&i| first.rows[i] != second.rows[i]) {
            return Err(Error::NotComposable { p: j, row: i });
        }
        if first.row(Sign::Pos, j) != second.row(Sign::Neg, j) {
            return Err(Error::NotComposable { p: j, row: j });
        }
        let mut rows = first.rows[..j].to_vec();
        rows.push((first.row(Sign::Neg, j).clone(), second.row(Sign::Pos, j).clone()));
        for i in j + 1..=n {
            rows.push((
                first.row(Sign::Neg, i) + second.row(Sign::Neg, i),
                first.row(Sign::Pos, i) + second.row(Sign::Pos, i),
            ));
        }
        Ok(CellTable { rows })
    }

    /// Checks the defining conditions of a table in `k`: nonnegative entries,
    /// equal top row, `d x_i^ε = x_{i-1}⁺ - x_{i-1}⁻` and `e x_0^ε = 1`.
    pub fn check_conditions(&self, k: &AugDirComplex) -> std::result::Result<(), String> {
        let n = self.dim();
        for (i, (neg, pos)) in self.rows.iter().enumerate() {
            if !neg.is_nonneg() || !pos.is_nonneg() {
                return Err(format!("row {i} has a negative coefficient"));
            }
        }
        if self.rows[n].0 != self.rows[n].1 {
            return Err(format!("top row {n} has distinct entries"));
        }
        for i in 1..=n {
            let expected = self.row(Sign::Pos, i - 1) - self.row(Sign::Neg, i - 1);
            for sign in Sign::BOTH {
                let d = k.d(self.row(sign, i)).map_err(|e| e.to_string())?;
                if d != expected {
                    return Err(format!("d x_{i}{} = {d}, expected {expected}", sign.symbol()));
                }
            }
        }
        for sign in Sign::BOTH {
            let e = self.row(sign, 0).coefficient_sum();
            if e != 1 {
                return Err(format!("e x_0{} = {e}", sign.symbol()));
            }
        }
        Ok(())
    }

    pub fn to_string_unicode(&self) -> String {
        let mut s = String::new();
        let _ = self.write_with(&mut s, true);
        s
    }

    fn write_with(&self, f: &mut impl fmt::Write, unicode: bool) -> fmt::Result {
        for (i, (n, p)) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_char('\n')?;
            }
            write!(f, "{i}: ")?;
            n.write_with(f, unicode)?;
            f.write_str(" | ")?;
            p.write_with(f, unicode)?;
        }
        Ok(())
    }
}

impl fmt::Display for CellTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl fmt::Debug for CellTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}
