//! The free expansion on a polygraph and the expansion monad.

mod genmap;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use genmap::GenMap;
pub(crate) use genmap::same;

use crate::cells::{compose, iterated_boundary, CellExpr, CellKind, GenKey, Sign};
use crate::error::{Error, Result};
use crate::polygraph::{structural_check, Polygraph};

/// What a generator of `Ξ(S)` is: the image of a generator of `S`, the
/// origin, or the new generator `r_a` attached to a generator `a` of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role<'a> {
    Eta(&'a GenKey),
    Origin,
    R(&'a GenKey),
}

/// `Ξ(S)` together with the data relating it to `S`.
pub struct ExpandedPolygraph {
    base: Arc<Polygraph>,
    result: Arc<Polygraph>,
    origin: GenKey,
    eta: HashMap<GenKey, GenKey>,
    eta_inv: HashMap<GenKey, GenKey>,
    r: HashMap<GenKey, GenKey>,
    r_inv: HashMap<GenKey, GenKey>,
    chevrons: Mutex<HashMap<CellExpr, CellExpr>>,
}

struct Labels {
    origin: GenKey,
    eta: HashMap<GenKey, GenKey>,
    r: HashMap<GenKey, GenKey>,
}

/// Simplicial labels: `a ↦ a + 1`, origin `<0>`, `r_a = <0, a + 1>`.
fn simplicial_labels(s: &Polygraph) -> Labels {
    let mut eta = HashMap::new();
    let mut r = HashMap::new();
    for k in s.keys() {
        let sh = k.as_simplex().expect("simplicial").shifted(1);
        r.insert(k.clone(), GenKey::Simplex(sh.cone_on(0)));
        eta.insert(k.clone(), GenKey::Simplex(sh));
    }
    Labels {
        origin: GenKey::Simplex(crate::cells::Simplex::vertex(0)),
        eta,
        r,
    }
}

/// Named labels: `S` unchanged, origin `v`, `r_a = r.<a>`, primed as needed
/// to stay fresh.
fn named_labels(s: &Polygraph) -> Labels {
    let mut taken: std::collections::HashSet<String> = s
        .keys()
        .filter_map(|k| match k {
            GenKey::Named { name, .. } => Some(name.to_string()),
            GenKey::Simplex(_) => None,
        })
        .collect();
    let mut fresh = |base: String| {
        let mut name = base;
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        name
    };
    let origin = GenKey::named(fresh("v".into()), 0);
    let mut eta = HashMap::new();
    let mut r = HashMap::new();
    for k in s.keys() {
        eta.insert(k.clone(), k.clone());
        let name = fresh(format!("r.{}", k.to_json_key()));
        r.insert(k.clone(), GenKey::named(name, k.dim() + 1));
    }
    Labels { origin, eta, r }
}

/// Builds `Ξ(S)` dimension by dimension. Simplicial presentations (including
/// the empty one) get simplicial labels with generators sorted
/// lexicographically; others get named labels.
pub fn expand(s: impl Into<Arc<Polygraph>>) -> Result<ExpandedPolygraph> {
    let base: Arc<Polygraph> = s.into();
    let structure = structural_check(&base);
    if !structure.passed() {
        return Err(Error::InvalidPolygraph(structure.failures.join("; ")));
    }
    let simplicial = base.is_simplicial();
    let labels = if simplicial {
        simplicial_labels(&base)
    } else {
        named_labels(&base)
    };
    let mut ex = ExpandedPolygraph {
        base: base.clone(),
        result: Arc::new(Polygraph::new()),
        origin: labels.origin.clone(),
        eta_inv: labels.eta.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        r_inv: labels.r.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        eta: labels.eta,
        r: labels.r,
        chevrons: Mutex::new(HashMap::new()),
    };

    let top = base.dim().map_or(0, |d| d + 1);
    let mut partial = Polygraph::new();
    partial.push_generator(ex.origin.clone(), None)?;
    for d in 0..=top {
        for a in base.generators(d) {
            let b = match base.boundary_of(a) {
                Some((src, tgt)) => Some((ex.shift(src)?, ex.shift(tgt)?)),
                None => None,
            };
            partial.push_generator(ex.eta[a].clone(), b)?;
        }
        if d == 0 {
            continue;
        }
        for a in base.generators(d - 1) {
            let (src, tgt) = ex.r_boundary(a, &partial)?;
            partial.push_generator(ex.r[a].clone(), Some((src, tgt)))?;
        }
    }

    if simplicial {
        let mut levels = partial.levels().to_vec();
        for l in &mut levels {
            l.sort();
        }
        let boundaries = partial
            .keys()
            .filter_map(|k| partial.boundary_of(k).map(|(s, t)| (k.clone(), (s.clone(), t.clone()))))
            .collect();
        partial = Polygraph::from_parts(levels, boundaries)?;
    }
    ex.result = Arc::new(partial);
    Ok(ex)
}

impl ExpandedPolygraph {
    pub fn base(&self) -> &Arc<Polygraph> {
        &self.base
    }

    pub fn result(&self) -> &Arc<Polygraph> {
        &self.result
    }

    pub fn origin(&self) -> &GenKey {
        &self.origin
    }

    /// The key of `η(a)` for a generator `a` of the base.
    pub fn eta_key(&self, a: &GenKey) -> Option<&GenKey> {
        self.eta.get(a)
    }

    /// The key of `r_a` for a generator `a` of the base.
    pub fn r_key(&self, a: &GenKey) -> Option<&GenKey> {
        self.r.get(a)
    }

    pub fn role<'a>(&'a self, k: &GenKey) -> Option<Role<'a>> {
        if *k == self.origin {
            Some(Role::Origin)
        } else if let Some(a) = self.eta_inv.get(k) {
            Some(Role::Eta(a))
        } else {
            self.r_inv.get(k).map(Role::R)
        }
    }

    /// `η` applied to a cell of the base.
    pub fn shift(&self, e: &CellExpr) -> Result<CellExpr> {
        e.substitute(&mut |k| {
            self.eta
                .get(k)
                .map(|k2| CellExpr::gen(k2.clone()))
                .ok_or_else(|| Error::UnknownGenerator(k.clone()))
        })
    }

    /// The unit of the monad at the base, `S* → Ξ(S)*`.
    pub fn eta_map(&self) -> GenMap {
        let images = self
            .base
            .keys()
            .map(|a| (a.clone(), CellExpr::gen(self.eta[a].clone())))
            .collect();
        GenMap::from_parts_unchecked(self.base.clone(), self.result.clone(), images)
    }

    fn r_boundary(&self, a: &GenKey, ctx: &Polygraph) -> Result<(CellExpr, CellExpr)> {
        let ea = CellExpr::gen(self.eta[a].clone());
        if a.dim() == 0 {
            return Ok((CellExpr::gen(self.origin.clone()), ea));
        }
        let ta = self.shift(self.base.tgt(a).expect("positive dimension"))?;
        let src = self.chevron_in(&ta, ctx)?;
        let mut tgt = ea.clone();
        for i in 0..a.dim() {
            let sai = iterated_boundary(Sign::Neg, i, &ea, ctx)?;
            tgt = compose(i, self.chevron_in(&sai, ctx)?, tgt)?;
        }
        Ok((src, tgt))
    }

    /// The chevron `ξ_e` of a cell of `Ξ(S)`.
    pub fn chevron(&self, e: &CellExpr) -> Result<CellExpr> {
        self.chevron_in(e, &self.result)
    }

    fn chevron_in(&self, e: &CellExpr, ctx: &Polygraph) -> Result<CellExpr> {
        if let Some(hit) = self.chevrons.lock().expect("chevron cache").get(e) {
            return Ok(hit.clone());
        }
        let out = match e.kind() {
            CellKind::Gen(k) => match self.role(k) {
                Some(Role::Eta(a)) => CellExpr::gen(self.r[a].clone()),
                Some(Role::Origin) | Some(Role::R(_)) => CellExpr::unit(e.clone()),
                None => return Err(Error::UnknownGenerator(k.clone())),
            },
            CellKind::Unit(u) => CellExpr::unit(self.chevron_in(u, ctx)?),
            CellKind::Comp { p, first, second } => {
                let p = *p;
                let mut acc = iterated_boundary(Sign::Pos, p + 1, second, ctx)?;
                for i in 0..p {
                    let sxi = iterated_boundary(Sign::Neg, i, first, ctx)?;
                    acc = compose(i, self.chevron_in(&sxi, ctx)?, acc)?;
                }
                acc = compose(p, self.chevron_in(first, ctx)?, acc)?;
                compose(p + 1, self.chevron_in(second, ctx)?, acc)?
            }
        };
        self.chevrons
            .lock()
            .expect("chevron cache")
            .insert(e.clone(), out.clone());
        Ok(out)
    }
}

impl std::fmt::Debug for ExpandedPolygraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.result)
    }
}

/// `μ : ΞΞS → ΞS`, from `outer = Ξ(ΞS)` and `inner = Ξ(S)`:
/// `μ(η x) = x`, `μ(v) = v` and `μ(r_x) = ξ_x`.
pub fn mu(outer: &ExpandedPolygraph, inner: &ExpandedPolygraph) -> Result<GenMap> {
    if !same(outer.base(), inner.result()) {
        return Err(Error::InvalidPolygraph("outer expansion is not over the inner one".into()));
    }
    let mut images = HashMap::new();
    for k in outer.result().keys() {
        let img = match outer.role(k).expect("generator of the expansion") {
            Role::Eta(x) => CellExpr::gen(x.clone()),
            Role::Origin => CellExpr::gen(inner.origin().clone()),
            Role::R(x) => inner.chevron(&CellExpr::gen(x.clone()))?,
        };
        images.insert(k.clone(), img);
    }
    Ok(GenMap::from_parts_unchecked(outer.result().clone(), inner.result().clone(), images))
}

/// `T f : ΞA → ΞB` for `f : A → B`, from `ex_a = Ξ(A)` and `ex_b = Ξ(B)`:
/// `η a ↦ η f(a)`, `v ↦ v`, `r_a ↦ ξ_{η f(a)}`.
pub fn t_on_map(f: &GenMap, ex_a: &ExpandedPolygraph, ex_b: &ExpandedPolygraph) -> Result<GenMap> {
    if !same(f.source(), ex_a.base()) || !same(f.target(), ex_b.base()) {
        return Err(Error::InvalidPolygraph("expansions do not match the map".into()));
    }
    let mut images = HashMap::new();
    for k in ex_a.result().keys() {
        let img = match ex_a.role(k).expect("generator of the expansion") {
            Role::Eta(a) => ex_b.shift(f.image(a).expect("total map"))?,
            Role::Origin => CellExpr::gen(ex_b.origin().clone()),
            Role::R(a) => ex_b.chevron(&ex_b.shift(f.image(a).expect("total map"))?)?,
        };
        images.insert(k.clone(), img);
    }
    Ok(GenMap::from_parts_unchecked(ex_a.result().clone(), ex_b.result().clone(), images))
}
