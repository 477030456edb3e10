//! Polygraphs and their linearization.

mod chain;
mod json;
mod validate;

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

pub use chain::Chain;
pub use validate::{structural_check, validate, ValidationReport};

use crate::cells::{CellExpr, CellKind, GenKey};
use crate::error::{Error, Result};
use crate::steiner::AugDirComplex;

/// A graded set of generators, each of positive dimension carrying a source
/// and a target cell one dimension below.
#[derive(Clone, Default)]
pub struct Polygraph {
    levels: Vec<Vec<GenKey>>,
    boundaries: HashMap<GenKey, (CellExpr, CellExpr)>,
    names: HashMap<Arc<str>, GenKey>,
    members: HashSet<GenKey>,
}

impl Polygraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a generator after checking that its boundary cells have the right
    /// dimension and only mention generators already present.
    pub fn push_generator(&mut self, key: GenKey, boundary: Option<(CellExpr, CellExpr)>) -> Result<()> {
        let dim = key.dim();
        match (&boundary, dim) {
            (None, 0) => {}
            (Some((src, tgt)), d) if d > 0 => {
                for (role, e) in [("source", src), ("target", tgt)] {
                    let ed = e.checked_dim()?;
                    if ed != d - 1 {
                        return Err(Error::InvalidPolygraph(format!(
                            "{role} of {key} has dimension {ed}, expected {}",
                            d - 1
                        )));
                    }
                    if let Some(k) = e.generators().into_iter().find(|k| !self.contains(k)) {
                        return Err(Error::InvalidPolygraph(format!(
                            "{role} of {key} mentions unknown generator {k}"
                        )));
                    }
                }
            }
            (None, _) => {
                return Err(Error::InvalidPolygraph(format!("{key} needs a source and a target")))
            }
            (Some(_), _) => {
                return Err(Error::InvalidPolygraph(format!("0-generator {key} cannot have a boundary")))
            }
        }
        self.insert(key, boundary)
    }

    /// Assembles a polygraph without checking boundary cells. Only the shape is
    /// enforced: unique keys, keys listed at their own dimension, and exactly
    /// the positive-dimensional keys carrying boundaries. [`validate`] reports
    /// everything else.
    pub fn from_parts(
        levels: Vec<Vec<GenKey>>,
        mut boundaries: HashMap<GenKey, (CellExpr, CellExpr)>,
    ) -> Result<Self> {
        let mut p = Polygraph::new();
        for (d, level) in levels.into_iter().enumerate() {
            for key in level {
                if key.dim() != d {
                    return Err(Error::InvalidPolygraph(format!(
                        "{key} of dimension {} listed in dimension {d}",
                        key.dim()
                    )));
                }
                let b = boundaries.remove(&key);
                if d > 0 && b.is_none() {
                    return Err(Error::InvalidPolygraph(format!("{key} has no boundary")));
                }
                if d == 0 && b.is_some() {
                    return Err(Error::InvalidPolygraph(format!(
                        "0-generator {key} cannot have a boundary"
                    )));
                }
                p.insert(key, b)?;
            }
        }
        if let Some(k) = boundaries.keys().next() {
            return Err(Error::InvalidPolygraph(format!("boundary given for unlisted {k}")));
        }
        Ok(p)
    }

    fn insert(&mut self, key: GenKey, boundary: Option<(CellExpr, CellExpr)>) -> Result<()> {
        if self.contains(&key) {
            return Err(Error::InvalidPolygraph(format!("duplicate generator {key}")));
        }
        if let GenKey::Named { name, .. } = &key {
            if self.names.contains_key(name) {
                return Err(Error::InvalidPolygraph(format!("duplicate name {name}")));
            }
            self.names.insert(name.clone(), key.clone());
        }
        let d = key.dim();
        if self.levels.len() <= d {
            self.levels.resize_with(d + 1, Vec::new);
        }
        self.levels[d].push(key.clone());
        self.members.insert(key.clone());
        if let Some(b) = boundary {
            self.boundaries.insert(key, b);
        }
        Ok(())
    }

    /// Generators by dimension, in insertion order.
    pub fn levels(&self) -> &[Vec<GenKey>] {
        &self.levels
    }

    pub fn generators(&self, dim: usize) -> &[GenKey] {
        self.levels.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All generators, by increasing dimension.
    pub fn keys(&self) -> impl Iterator<Item = &GenKey> + '_ {
        self.levels.iter().flatten()
    }

    /// The top dimension, or `None` for the empty polygraph.
    pub fn dim(&self) -> Option<usize> {
        self.levels.iter().rposition(|l| !l.is_empty())
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, key: &GenKey) -> bool {
        self.members.contains(key)
    }

    pub fn key_by_name(&self, name: &str) -> Option<GenKey> {
        self.names.get(name).cloned()
    }

    pub fn boundary_of(&self, key: &GenKey) -> Option<(&CellExpr, &CellExpr)> {
        self.boundaries.get(key).map(|(s, t)| (s, t))
    }

    pub fn src(&self, key: &GenKey) -> Option<&CellExpr> {
        self.boundaries.get(key).map(|(s, _)| s)
    }

    pub fn tgt(&self, key: &GenKey) -> Option<&CellExpr> {
        self.boundaries.get(key).map(|(_, t)| t)
    }

    /// Whether every key is a simplex.
    pub fn is_simplicial(&self) -> bool {
        self.keys().all(|k| k.as_simplex().is_some())
    }
}

impl PartialEq for Polygraph {
    fn eq(&self, other: &Self) -> bool {
        let trim = |l: &[Vec<GenKey>]| l.len() - l.iter().rev().take_while(|v| v.is_empty()).count();
        let (a, b) = (trim(&self.levels), trim(&other.levels));
        self.levels[..a] == other.levels[..b] && self.boundaries == other.boundaries
    }
}

impl Eq for Polygraph {}

impl std::fmt::Debug for Polygraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for k in self.keys() {
            match self.boundary_of(k) {
                Some((s, t)) => writeln!(f, "{k} : {s} -> {t}")?,
                None => writeln!(f, "{k}")?,
            }
        }
        Ok(())
    }
}

/// The class of a cell in the linearization: generators are basis elements,
/// units vanish and composites add.
pub fn linearize(e: &CellExpr) -> Chain {
    let mut memo: HashMap<usize, Chain> = HashMap::new();
    linearize_memo(e, &mut memo)
}

fn linearize_memo(e: &CellExpr, memo: &mut HashMap<usize, Chain>) -> Chain {
    if let Some(c) = memo.get(&e.ptr_key()) {
        return c.clone();
    }
    let c = match e.kind() {
        CellKind::Gen(k) => Chain::basis(k.clone()),
        CellKind::Unit(_) => Chain::zero(e.dim()),
        CellKind::Comp { first, second, .. } => {
            let mut c = linearize_memo(first, memo);
            if c.dim() == second.dim() {
                c += &linearize_memo(second, memo);
            }
            c
        }
    };
    memo.insert(e.ptr_key(), c.clone());
    c
}

/// The linearization of the free ω-category on `s`: basis the generators,
/// `d x = [t x] - [s x]`, augmentation the coefficient sum.
pub fn lambda(s: &Polygraph) -> AugDirComplex {
    let diff = s
        .boundaries
        .iter()
        .map(|(k, (src, tgt))| {
            let mut d = linearize(tgt);
            if d.dim() == src.dim() {
                d -= &linearize(src);
            }
            (k.clone(), d)
        })
        .collect();
    AugDirComplex::from_parts(s.levels.clone(), diff)
}
