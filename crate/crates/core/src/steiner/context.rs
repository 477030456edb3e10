use std::collections::HashMap;
use std::sync::Arc;

use super::{strong_steiner_check, AugDirComplex, CellTable};
use crate::cells::{CellExpr, CellKind, GenKey};
use crate::error::{Error, Result};
use crate::polygraph::{lambda, Polygraph};

/// Evaluation of cells of a strong Steiner presentation as tables.
///
/// Construction certifies the presentation once; afterwards `eval` is a
/// faithful invariant, so table equality decides equality of cells.
#[derive(Clone)]
pub struct SteinerContext {
    complex: AugDirComplex,
    atoms: HashMap<GenKey, Arc<CellTable>>,
}

impl SteinerContext {
    pub fn new(s: &Polygraph) -> Result<Self> {
        let report = strong_steiner_check(s);
        if !report.passed() {
            let why = report
                .failures
                .first()
                .cloned()
                .or(report.skipped.clone())
                .unwrap_or_default();
            return Err(Error::NotStrongSteiner(why));
        }
        Self::from_complex(lambda(s))
    }

    /// Builds a context from a complex the caller has already certified.
    pub(crate) fn from_complex(complex: AugDirComplex) -> Result<Self> {
        let atoms = complex
            .keys()
            .map(|k| Ok((k.clone(), Arc::new(complex.atom(k)?))))
            .collect::<Result<_>>()?;
        Ok(SteinerContext { complex, atoms })
    }

    pub fn complex(&self) -> &AugDirComplex {
        &self.complex
    }

    pub fn atom(&self, key: &GenKey) -> Result<&CellTable> {
        self.atoms
            .get(key)
            .map(|a| a.as_ref())
            .ok_or_else(|| Error::UnknownGenerator(key.clone()))
    }

    /// Generators to atoms, units to identities, composites to composite
    /// tables. Fails on the first non-composable pair.
    pub fn eval(&self, e: &CellExpr) -> Result<CellTable> {
        let mut memo = HashMap::new();
        self.eval_memo(e, &mut memo).map(|t| (*t).clone())
    }

    fn eval_memo(&self, e: &CellExpr, memo: &mut HashMap<usize, Arc<CellTable>>) -> Result<Arc<CellTable>> {
        if let Some(t) = memo.get(&e.ptr_key()) {
            return Ok(t.clone());
        }
        let t = match e.kind() {
            CellKind::Gen(k) => self
                .atoms
                .get(k)
                .cloned()
                .ok_or_else(|| Error::UnknownGenerator(k.clone()))?,
            CellKind::Unit(u) => Arc::new(self.eval_memo(u, memo)?.unit()),
            CellKind::Comp { p, first, second } => {
                let a = self.eval_memo(first, memo)?;
                let b = self.eval_memo(second, memo)?;
                Arc::new(CellTable::compose(*p, &a, &b)?)
            }
        };
        memo.insert(e.ptr_key(), t.clone());
        Ok(t)
    }

    /// Equality of cells, decided by their tables.
    pub fn cell_eq(&self, a: &CellExpr, b: &CellExpr) -> Result<bool> {
        if a.dim() != b.dim() {
            return Ok(false);
        }
        if a == b {
            // Syntactic equality still requires the cell to exist.
            self.eval(a)?;
            return Ok(true);
        }
        Ok(self.eval(a)? == self.eval(b)?)
    }
}
