use std::collections::HashMap;
use std::sync::Arc;

use crate::cells::{boundary, CellExpr, GenKey, Sign};
use crate::error::{Error, Result};
use crate::polygraph::Polygraph;
use crate::report::CheckReport;
use crate::steiner::SteinerContext;

/// An ω-functor between free ω-categories, given by the images of the
/// generators of its source. Images need not be generators.
#[derive(Clone)]
pub struct GenMap {
    source: Arc<Polygraph>,
    target: Arc<Polygraph>,
    images: HashMap<GenKey, CellExpr>,
}

impl GenMap {
    /// Checks that every generator has an image of its own dimension built
    /// from generators of `target`.
    pub fn new(source: Arc<Polygraph>, target: Arc<Polygraph>, images: HashMap<GenKey, CellExpr>) -> Result<Self> {
        for key in source.keys() {
            let img = images
                .get(key)
                .ok_or_else(|| Error::InvalidPolygraph(format!("no image for {key}")))?;
            let d = img.checked_dim()?;
            if d != key.dim() {
                return Err(Error::InvalidPolygraph(format!(
                    "image of {key} has dimension {d}"
                )));
            }
            if let Some(k) = img.generators().into_iter().find(|k| !target.contains(k)) {
                return Err(Error::UnknownGenerator(k));
            }
        }
        if images.len() != source.len() {
            return Err(Error::InvalidPolygraph("images given for unknown generators".into()));
        }
        Ok(GenMap {
            source,
            target,
            images,
        })
    }

    pub(crate) fn from_parts_unchecked(
        source: Arc<Polygraph>,
        target: Arc<Polygraph>,
        images: HashMap<GenKey, CellExpr>,
    ) -> Self {
        GenMap {
            source,
            target,
            images,
        }
    }

    pub fn identity(s: Arc<Polygraph>) -> Self {
        let images = s.keys().map(|k| (k.clone(), CellExpr::gen(k.clone()))).collect();
        GenMap {
            source: s.clone(),
            target: s,
            images,
        }
    }

    pub fn source(&self) -> &Arc<Polygraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Polygraph> {
        &self.target
    }

    pub fn image(&self, key: &GenKey) -> Option<&CellExpr> {
        self.images.get(key)
    }

    /// The functorial extension to all cells.
    pub fn apply(&self, e: &CellExpr) -> Result<CellExpr> {
        e.substitute(&mut |k| {
            self.images
                .get(k)
                .cloned()
                .ok_or_else(|| Error::UnknownGenerator(k.clone()))
        })
    }

    /// `g ∘ f`: first `self`, then `g`.
    pub fn then(&self, g: &GenMap) -> Result<GenMap> {
        if !same(&self.target, &g.source) {
            return Err(Error::InvalidPolygraph("maps are not composable".into()));
        }
        let images = self
            .source
            .keys()
            .map(|k| Ok((k.clone(), g.apply(&self.images[k])?)))
            .collect::<Result<_>>()?;
        Ok(GenMap {
            source: self.source.clone(),
            target: g.target.clone(),
            images,
        })
    }

    /// Generator-wise equality of images, decided by tables in `ctx`, which
    /// must present the common target.
    pub fn eq_by_tables(&self, other: &GenMap, ctx: &SteinerContext, name: &str) -> CheckReport {
        let mut r = CheckReport::new(name);
        if !same(&self.source, &other.source) || !same(&self.target, &other.target) {
            r.tick();
            r.fail("maps have different sources or targets");
            return r;
        }
        for k in self.source.keys() {
            let (a, b) = (&self.images[k], &other.images[k]);
            match ctx.cell_eq(a, b) {
                Ok(true) => r.tick(),
                Ok(false) => {
                    r.tick();
                    r.fail(format!("{k} goes to {a} and to {b}"));
                }
                Err(e) => {
                    r.tick();
                    r.fail(format!("{k}: {e}"));
                }
            }
        }
        r
    }

    /// Checks `f(s x) = s f(x)` and `f(t x) = t f(x)` for every generator,
    /// by tables in `ctx`, which must present the target.
    pub fn check_boundaries(&self, ctx: &SteinerContext) -> CheckReport {
        let mut r = CheckReport::new("map-boundaries");
        for k in self.source.keys() {
            let Some((src, tgt)) = self.source.boundary_of(k) else {
                continue;
            };
            for (sign, b) in [(Sign::Neg, src), (Sign::Pos, tgt)] {
                let lhs = self.apply(b);
                let rhs = boundary(sign, &self.images[k], &self.target);
                let ok = match (lhs, rhs) {
                    (Ok(l), Ok(rh)) => ctx.cell_eq(&l, &rh).unwrap_or(false),
                    _ => false,
                };
                r.check(ok, || format!("{k}: boundary {} not preserved", sign.symbol()));
            }
        }
        r
    }
}

pub(crate) fn same(a: &Arc<Polygraph>, b: &Arc<Polygraph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl std::fmt::Debug for GenMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for k in self.source.keys() {
            writeln!(f, "{k} |-> {}", self.images[k])?;
        }
        Ok(())
    }
}
