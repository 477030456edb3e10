//! Cylinders and cones as finite sequences of cells: compositions, units,
//! trivial and degenerate cones, and checks for oplax transformation data.
//!
//! Naming: `aux(ε, i)` is the cell `ε α_i`, which is the principal cell of the
//! boundary cylinder `∂^ε_i α`, not that cylinder itself.

use std::fmt;

use serde_json::{json, Value};

use crate::cells::{boundary, compose, iterated_boundary, print, print_unicode, CellExpr, Sign};
use crate::error::{Error, Result};
use crate::expansion::ExpandedPolygraph;
use crate::polygraph::{lambda, linearize, Chain, Polygraph};
use crate::report::CheckReport;
use crate::steiner::SteinerContext;

/// An `n`-cylinder `α : x ⇝ y` given by `s α_0, t α_0, …, s α_{n-1}, t α_{n-1}`
/// (of dimensions `1..=n`) and the principal cell `α_n` of dimension `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    aux: Vec<(CellExpr, CellExpr)>,
    principal: CellExpr,
    top: CellExpr,
    bottom: CellExpr,
}

impl Cylinder {
    /// Checks dimensions only; use [`validate_cylinder`] for the boundary
    /// constraints.
    pub fn new(
        aux: Vec<(CellExpr, CellExpr)>,
        principal: CellExpr,
        top: CellExpr,
        bottom: CellExpr,
    ) -> Result<Self> {
        let n = aux.len();
        if top.dim() != n || bottom.dim() != n {
            return Err(Error::Cylinder(format!(
                "{n}-cylinder between cells of dimensions {} and {}",
                top.dim(),
                bottom.dim()
            )));
        }
        for (i, (s, t)) in aux.iter().enumerate() {
            if s.dim() != i + 1 || t.dim() != i + 1 {
                return Err(Error::Cylinder(format!(
                    "auxiliary cells at index {i} must have dimension {}",
                    i + 1
                )));
            }
        }
        if principal.dim() != n + 1 {
            return Err(Error::Cylinder(format!(
                "principal cell of a {n}-cylinder must have dimension {}",
                n + 1
            )));
        }
        Ok(Cylinder {
            aux,
            principal,
            top,
            bottom,
        })
    }

    pub fn dim(&self) -> usize {
        self.aux.len()
    }

    /// The cell `ε α_i` for `i < n`.
    pub fn aux(&self, sign: Sign, i: usize) -> &CellExpr {
        let (s, t) = &self.aux[i];
        match sign {
            Sign::Neg => s,
            Sign::Pos => t,
        }
    }

    pub fn aux_pairs(&self) -> &[(CellExpr, CellExpr)] {
        &self.aux
    }

    /// `ε α_i` for `i < n`, the principal cell for `i = n`.
    pub fn cell(&self, sign: Sign, i: usize) -> &CellExpr {
        if i == self.dim() {
            &self.principal
        } else {
            self.aux(sign, i)
        }
    }

    pub fn principal(&self) -> &CellExpr {
        &self.principal
    }

    pub fn top(&self) -> &CellExpr {
        &self.top
    }

    pub fn bottom(&self) -> &CellExpr {
        &self.bottom
    }

    /// All cells in order `s α_0, t α_0, …, α_n`.
    pub fn cells(&self) -> Vec<CellExpr> {
        let mut out: Vec<CellExpr> = self
            .aux
            .iter()
            .flat_map(|(s, t)| [s.clone(), t.clone()])
            .collect();
        out.push(self.principal.clone());
        out
    }

    /// Componentwise equality of cells, by tables.
    pub fn table_eq(&self, other: &Cylinder, ctx: &SteinerContext) -> Result<bool> {
        if self.dim() != other.dim() {
            return Ok(false);
        }
        for (a, b) in self.cells().iter().zip(other.cells().iter()) {
            if !ctx.cell_eq(a, b)? {
                return Ok(false);
            }
        }
        Ok(ctx.cell_eq(&self.top, &other.top)? && ctx.cell_eq(&self.bottom, &other.bottom)?)
    }

    fn write_with(&self, f: &mut impl fmt::Write, unicode: bool) -> fmt::Result {
        f.write_char('(')?;
        for (k, c) in self.cells().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&if unicode { print_unicode(c) } else { print(c) })?;
        }
        f.write_char(')')
    }

    pub fn to_string_unicode(&self) -> String {
        let mut s = String::new();
        self.write_with(&mut s, true).expect("writing to a string");
        s
    }
}

impl fmt::Display for Cylinder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

/// `t_{i-1} ∘_{i-1} ⋯ ∘_1 t_0 ∘_0 base`.
fn whisker_below(base: CellExpr, upto: usize, t: impl Fn(usize) -> CellExpr) -> Result<CellExpr> {
    let mut acc = base;
    for j in 0..upto {
        acc = compose(j, acc, t(j))?;
    }
    Ok(acc)
}

/// `base ∘_0 s_0 ∘_1 ⋯ ∘_{i-1} s_{i-1}`.
fn whisker_above(base: CellExpr, upto: usize, s: impl Fn(usize) -> CellExpr) -> Result<CellExpr> {
    let mut acc = base;
    for j in 0..upto {
        acc = compose(j, s(j), acc)?;
    }
    Ok(acc)
}

fn record_eq(r: &mut CheckReport, ctx: &SteinerContext, a: &CellExpr, b: &CellExpr, what: impl FnOnce() -> String) {
    match ctx.cell_eq(a, b) {
        Ok(ok) => r.check(ok, || format!("{}: {} vs {}", what(), print(a), print(b))),
        Err(e) => {
            r.tick();
            r.fail(format!("{}: {e}", what()));
        }
    }
}

fn label(sign: Sign, i: usize, n: usize) -> String {
    if i == n {
        format!("principal a{n}")
    } else {
        let c = if sign == Sign::Neg { 's' } else { 't' };
        format!("{c} a{i}")
    }
}

/// Checks the source and target of every cell of `alpha`:
/// `ε α_i : t α_{i-1} ∘_{i-1} ⋯ ∘_0 ε x_i → ε y_i ∘_0 s α_0 ∘_1 ⋯ ∘_{i-1} s α_{i-1}`.
pub fn validate_cylinder(alpha: &Cylinder, s: &Polygraph, ctx: &SteinerContext) -> CheckReport {
    let mut r = CheckReport::new("cylinder");
    let n = alpha.dim();
    for i in 0..=n {
        let signs: &[Sign] = if i == n { &[Sign::Pos] } else { &Sign::BOTH };
        for &sign in signs {
            let cell = alpha.cell(sign, i);
            let expected = (|| -> Result<(CellExpr, CellExpr)> {
                let xi = iterated_boundary(sign, i, &alpha.top, s)?;
                let yi = iterated_boundary(sign, i, &alpha.bottom, s)?;
                let src = whisker_below(xi, i, |j| alpha.aux(Sign::Pos, j).clone())?;
                let tgt = whisker_above(yi, i, |j| alpha.aux(Sign::Neg, j).clone())?;
                Ok((src, tgt))
            })();
            check_cell_boundaries(&mut r, cell, expected, s, ctx, || label(sign, i, n));
        }
    }
    r
}

fn check_cell_boundaries(
    r: &mut CheckReport,
    cell: &CellExpr,
    expected: Result<(CellExpr, CellExpr)>,
    s: &Polygraph,
    ctx: &SteinerContext,
    what: impl Fn() -> String,
) {
    let (src, tgt) = match expected {
        Ok(st) => st,
        Err(e) => {
            r.tick();
            r.fail(format!("{}: {e}", what()));
            return;
        }
    };
    for (sign, want) in [(Sign::Neg, src), (Sign::Pos, tgt)] {
        match boundary(sign, cell, s) {
            Ok(got) => record_eq(r, ctx, &got, &want, || format!("{}{}", sign.symbol(), what())),
            Err(e) => {
                r.tick();
                r.fail(format!("{}: {e}", what()));
            }
        }
    }
}

/// `∂^ε α`: the `(n-1)`-cylinder `(s α_0, t α_0, …, ε α_{n-1})` from `ε x` to `ε y`.
pub fn cyl_boundary(sign: Sign, alpha: &Cylinder, s: &Polygraph) -> Result<Cylinder> {
    let n = alpha.dim();
    if n == 0 {
        return Err(Error::Cylinder("a 0-cylinder has no boundary".into()));
    }
    Cylinder::new(
        alpha.aux[..n - 1].to_vec(),
        alpha.aux(sign, n - 1).clone(),
        boundary(sign, &alpha.top, s)?,
        boundary(sign, &alpha.bottom, s)?,
    )
}

/// `∂^ε_i α`, iterating [`cyl_boundary`] down to dimension `i`.
pub fn cyl_iterated_boundary(sign: Sign, i: usize, alpha: &Cylinder, s: &Polygraph) -> Result<Cylinder> {
    if i > alpha.dim() {
        return Err(Error::BoundaryOutOfRange {
            requested: i,
            dim: alpha.dim(),
        });
    }
    let mut cur = alpha.clone();
    while cur.dim() > i {
        cur = cyl_boundary(sign, &cur, s)?;
    }
    Ok(cur)
}

fn check_composable(
    p: usize,
    alpha: &Cylinder,
    beta: &Cylinder,
    pairs: &[(&CellExpr, &CellExpr)],
    s: &Polygraph,
    ctx: &SteinerContext,
) -> Result<()> {
    let n = alpha.dim();
    if beta.dim() != n || p >= n {
        return Err(Error::CompositionIndex {
            p,
            left: beta.dim(),
            right: n,
        });
    }
    let mismatch = |what: &str| Error::Cylinder(format!("not composable at dimension {p}: {what}"));
    for i in 0..p {
        for sign in Sign::BOTH {
            if !ctx.cell_eq(alpha.aux(sign, i), beta.aux(sign, i))? {
                return Err(mismatch(&format!("{} a{i}", if sign == Sign::Neg { 's' } else { 't' })));
            }
        }
    }
    if !ctx.cell_eq(alpha.aux(Sign::Pos, p), beta.aux(Sign::Neg, p))? {
        return Err(mismatch(&format!("t a{p} against s b{p}")));
    }
    for &(first, second) in pairs {
        let a = iterated_boundary(Sign::Pos, p, first, s)?;
        let b = iterated_boundary(Sign::Neg, p, second, s)?;
        if !ctx.cell_eq(&a, &b)? {
            return Err(mismatch(&format!("{} against {}", print(first), print(second))));
        }
    }
    Ok(())
}

/// `β ∘_p α` for `α : x ⇝ y` and `β : z ⇝ t`, a cylinder `z ∘_p x ⇝ t ∘_p y`.
pub fn cyl_compose(p: usize, alpha: &Cylinder, beta: &Cylinder, s: &Polygraph, ctx: &SteinerContext) -> Result<Cylinder> {
    check_composable(p, alpha, beta, &[(&alpha.top, &beta.top), (&alpha.bottom, &beta.bottom)], s, ctx)?;
    let n = alpha.dim();
    let (x, t) = (&alpha.top, &beta.bottom);
    let mut aux: Vec<(CellExpr, CellExpr)> = alpha.aux[..p].to_vec();
    aux.push((alpha.aux(Sign::Neg, p).clone(), beta.aux(Sign::Pos, p).clone()));

    let cell = |sign: Sign, i: usize| -> Result<CellExpr> {
        let (head_sign, tail_sign) = if i == p + 1 && i < n { (sign, sign) } else { (Sign::Pos, Sign::Neg) };
        let head = iterated_boundary(head_sign, p + 1, t, s)?;
        let tail = iterated_boundary(tail_sign, p + 1, x, s)?;
        let mut left = whisker_above(head, p, |j| alpha.aux(Sign::Neg, j).clone())?;
        left = compose(p, alpha.cell(sign, i).clone(), left)?;
        let mut right = whisker_below(tail, p, |j| beta.aux(Sign::Pos, j).clone())?;
        right = compose(p, right, beta.cell(sign, i).clone())?;
        compose(p + 1, right, left)
    };
    for i in p + 1..n {
        aux.push((cell(Sign::Neg, i)?, cell(Sign::Pos, i)?));
    }
    let principal = cell(Sign::Pos, n)?;
    Cylinder::new(
        aux,
        principal,
        compose(p, x.clone(), beta.top.clone())?,
        compose(p, alpha.bottom.clone(), t.clone())?,
    )
}

/// `1_α : 1_x ⇝ 1_y`, with cells `…, α_n, α_n, 1_{α_n}`.
pub fn cyl_unit(alpha: &Cylinder) -> Cylinder {
    let mut aux = alpha.aux.clone();
    aux.push((alpha.principal.clone(), alpha.principal.clone()));
    Cylinder {
        aux,
        principal: CellExpr::unit(alpha.principal.clone()),
        top: CellExpr::unit(alpha.top.clone()),
        bottom: CellExpr::unit(alpha.bottom.clone()),
    }
}

/// The trivial cylinder `x ⇝ x` with cells `1_{s x_0}, 1_{t x_0}, …, 1_x`.
pub fn trivial(x: &CellExpr, s: &Polygraph) -> Result<Cylinder> {
    let aux = (0..x.dim())
        .map(|i| {
            Ok((
                CellExpr::unit(iterated_boundary(Sign::Neg, i, x, s)?),
                CellExpr::unit(iterated_boundary(Sign::Pos, i, x, s)?),
            ))
        })
        .collect::<Result<_>>()?;
    Cylinder::new(aux, CellExpr::unit(x.clone()), x.clone(), x.clone())
}

/// A cylinder whose top is the iterated unit on a 0-cell, the origin. Its
/// bottom is the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    cyl: Cylinder,
    origin: CellExpr,
}

impl Cone {
    pub fn new(aux: Vec<(CellExpr, CellExpr)>, principal: CellExpr, origin: CellExpr, base: CellExpr) -> Result<Self> {
        let top = CellExpr::iterated_unit(origin.clone(), base.dim());
        Cone::from_cylinder(Cylinder::new(aux, principal, top, base)?, origin)
    }

    pub fn from_cylinder(cyl: Cylinder, origin: CellExpr) -> Result<Self> {
        if origin.dim() != 0 {
            return Err(Error::Cylinder("the origin of a cone must be a 0-cell".into()));
        }
        if cyl.top != CellExpr::iterated_unit(origin.clone(), cyl.dim()) {
            return Err(Error::Cylinder(format!(
                "top {} is not an iterated unit on {}",
                print(&cyl.top),
                print(&origin)
            )));
        }
        Ok(Cone { cyl, origin })
    }

    pub fn cylinder(&self) -> &Cylinder {
        &self.cyl
    }

    pub fn into_cylinder(self) -> Cylinder {
        self.cyl
    }

    pub fn origin(&self) -> &CellExpr {
        &self.origin
    }

    pub fn base(&self) -> &CellExpr {
        &self.cyl.bottom
    }

    pub fn dim(&self) -> usize {
        self.cyl.dim()
    }

    pub fn aux(&self, sign: Sign, i: usize) -> &CellExpr {
        self.cyl.aux(sign, i)
    }

    pub fn principal(&self) -> &CellExpr {
        &self.cyl.principal
    }

    pub fn cells(&self) -> Vec<CellExpr> {
        self.cyl.cells()
    }

    /// Principal cell and negative auxiliary cells are units (syntactically).
    pub fn is_degenerate(&self) -> bool {
        self.principal().is_unit() && self.cyl.aux.iter().all(|(s, _)| s.is_unit())
    }

    /// `{"aux": [...], "principal": "...", "base": "..."}` in ASCII notation.
    pub fn to_json_value(&self) -> Value {
        let aux: Vec<String> = self.cyl.aux.iter().flat_map(|(s, t)| [print(s), print(t)]).collect();
        json!({
            "aux": aux,
            "principal": print(self.principal()),
            "base": print(self.base()),
        })
    }

    pub fn to_string_unicode(&self) -> String {
        self.cyl.to_string_unicode()
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cyl.fmt(f)
    }
}

/// Checks the cone constraints: `ε α_0 : v → ε x_0`,
/// `ε α_i : t α_{i-1} → ε x_i ∘_0 s α_0 ∘_1 ⋯ ∘_{i-1} s α_{i-1}`, and the same
/// shape for the principal cell with `x` in place of `ε x_i`.
pub fn validate_cone(alpha: &Cone, s: &Polygraph, ctx: &SteinerContext) -> CheckReport {
    let mut r = CheckReport::new("cone");
    let n = alpha.dim();
    let x = alpha.base();
    for i in 0..=n {
        let signs: &[Sign] = if i == n { &[Sign::Pos] } else { &Sign::BOTH };
        for &sign in signs {
            let cell = alpha.cyl.cell(sign, i);
            let expected = (|| -> Result<(CellExpr, CellExpr)> {
                let src = if i == 0 {
                    alpha.origin.clone()
                } else {
                    alpha.aux(Sign::Pos, i - 1).clone()
                };
                let xi = iterated_boundary(sign, i, x, s)?;
                let tgt = whisker_above(xi, i, |j| alpha.aux(Sign::Neg, j).clone())?;
                Ok((src, tgt))
            })();
            check_cell_boundaries(&mut r, cell, expected, s, ctx, || label(sign, i, n));
        }
    }
    r
}

/// `β ∘_p α` for cones `α : v ⇝ x` and `β : v ⇝ y`, by the cone formulas
/// `γ_i = ε y_{p+1} ∘_0 s α_0 ∘_1 ⋯ ∘_p ε α_i ∘_{p+1} ε β_i`.
pub fn cone_compose(p: usize, alpha: &Cone, beta: &Cone, s: &Polygraph, ctx: &SteinerContext) -> Result<Cone> {
    if alpha.origin != beta.origin {
        return Err(Error::Cylinder("cones with different origins".into()));
    }
    check_composable(p, &alpha.cyl, &beta.cyl, &[(alpha.base(), beta.base())], s, ctx)?;
    let n = alpha.dim();
    let (x, y) = (alpha.base(), beta.base());
    let mut aux: Vec<(CellExpr, CellExpr)> = alpha.cyl.aux[..p].to_vec();
    aux.push((alpha.aux(Sign::Neg, p).clone(), beta.aux(Sign::Pos, p).clone()));
    let cell = |sign: Sign, i: usize| -> Result<CellExpr> {
        let head_sign = if i == p + 1 && i < n { sign } else { Sign::Pos };
        let head = iterated_boundary(head_sign, p + 1, y, s)?;
        let mut left = whisker_above(head, p, |j| alpha.aux(Sign::Neg, j).clone())?;
        left = compose(p, alpha.cyl.cell(sign, i).clone(), left)?;
        compose(p + 1, beta.cyl.cell(sign, i).clone(), left)
    };
    for i in p + 1..n {
        aux.push((cell(Sign::Neg, i)?, cell(Sign::Pos, i)?));
    }
    let principal = cell(Sign::Pos, n)?;
    Cone::new(aux, principal, alpha.origin.clone(), compose(p, x.clone(), y.clone())?)
}

pub fn cone_unit(alpha: &Cone) -> Cone {
    Cone {
        cyl: cyl_unit(&alpha.cyl),
        origin: alpha.origin.clone(),
    }
}

/// The unique degenerate cone `v ⇝ x`: `s α_i = 1_{s x_i}`,
/// `t α_i = s x_{i+1}` (or `x` for `i = n - 1`) and `α_n = 1_x`.
pub fn degenerate_cone(x: &CellExpr, origin: &CellExpr, s: &Polygraph) -> Result<Cone> {
    let n = x.dim();
    let sx0 = iterated_boundary(Sign::Neg, 0, x, s)?;
    if &sx0 != origin {
        return Err(Error::Cylinder(format!(
            "0-source {} of {} is not the origin {}",
            print(&sx0),
            print(x),
            print(origin)
        )));
    }
    let mut aux = Vec::with_capacity(n);
    for i in 0..n {
        let neg = CellExpr::unit(iterated_boundary(Sign::Neg, i, x, s)?);
        let pos = if i + 1 == n {
            x.clone()
        } else {
            iterated_boundary(Sign::Neg, i + 1, x, s)?
        };
        aux.push((neg, pos));
    }
    Cone::new(aux, CellExpr::unit(x.clone()), origin.clone(), x.clone())
}

/// The cone `ξ(x)` of the free expansion: cells `ξ_{s x_0}, ξ_{t x_0}, …, ξ_x`.
pub fn expansion_cone(x: &CellExpr, ex: &ExpandedPolygraph) -> Result<Cone> {
    let s = ex.result();
    let aux = (0..x.dim())
        .map(|i| {
            Ok((
                ex.chevron(&iterated_boundary(Sign::Neg, i, x, s)?)?,
                ex.chevron(&iterated_boundary(Sign::Pos, i, x, s)?)?,
            ))
        })
        .collect::<Result<_>>()?;
    Cone::new(aux, ex.chevron(x)?, CellExpr::gen(ex.origin().clone()), x.clone())
}

/// Whether `e` evaluates to an identity table.
pub fn is_identity(e: &CellExpr, ctx: &SteinerContext) -> Result<bool> {
    let t = ctx.eval(e)?;
    let d = t.dim();
    Ok(d > 0 && t.row(Sign::Neg, d).is_zero() && t.row(Sign::Pos, d).is_zero())
}

/// All degenerate cones with basis `x` whose cells are drawn from `pool`.
/// Pool entries equal by tables are tried once.
pub fn degenerate_cones_in(
    x: &CellExpr,
    origin: &CellExpr,
    pool: &[CellExpr],
    s: &Polygraph,
    ctx: &SteinerContext,
) -> Result<Vec<Cone>> {
    let n = x.dim();
    let mut classes: Vec<Vec<(CellExpr, bool)>> = vec![Vec::new(); n + 2];
    for c in pool {
        let d = c.dim();
        if d == 0 || d > n + 1 || ctx.eval(c).is_err() {
            continue;
        }
        let mut seen = false;
        for (other, _) in &classes[d] {
            if ctx.cell_eq(c, other)? {
                seen = true;
                break;
            }
        }
        if !seen {
            let unit = is_identity(c, ctx)?;
            classes[d].push((c.clone(), unit));
        }
    }

    let fits = |cell: &CellExpr, aux: &[(CellExpr, CellExpr)], sign: Sign, i: usize| -> Result<bool> {
        let src = if i == 0 { origin.clone() } else { aux[i - 1].1.clone() };
        let xi = iterated_boundary(sign, i, x, s)?;
        let tgt = whisker_above(xi, i, |j| aux[j].0.clone())?;
        let got_src = boundary(Sign::Neg, cell, s)?;
        let got_tgt = boundary(Sign::Pos, cell, s)?;
        Ok(ctx.cell_eq(&got_src, &src).unwrap_or(false) && ctx.cell_eq(&got_tgt, &tgt).unwrap_or(false))
    };

    type Aux = Vec<(CellExpr, CellExpr)>;
    type Fits<'a> = dyn Fn(&CellExpr, &[(CellExpr, CellExpr)], Sign, usize) -> Result<bool> + 'a;

    fn go(
        i: usize,
        n: usize,
        aux: &mut Aux,
        classes: &[Vec<(CellExpr, bool)>],
        fits: &Fits,
        found: &mut Vec<(Aux, CellExpr)>,
    ) -> Result<()> {
        let level = &classes[i + 1];
        if i == n {
            for (c, unit) in level {
                if *unit && fits(c, aux, Sign::Pos, i)? {
                    found.push((aux.clone(), c.clone()));
                }
            }
            return Ok(());
        }
        for (neg, unit) in level {
            if !*unit || !fits(neg, aux, Sign::Neg, i)? {
                continue;
            }
            for (pos, _) in level {
                if !fits(pos, aux, Sign::Pos, i)? {
                    continue;
                }
                aux.push((neg.clone(), pos.clone()));
                go(i + 1, n, aux, classes, fits, found)?;
                aux.pop();
            }
        }
        Ok(())
    }

    let mut found = Vec::new();
    go(0, n, &mut Vec::new(), &classes, &fits, &mut found)?;
    found
        .into_iter()
        .map(|(aux, principal)| Cone::new(aux, principal, origin.clone(), x.clone()))
        .collect()
}

/// Cells of `s` a degenerate cone on `x` may plausibly use: generators,
/// their iterated units, and the iterated boundaries of `x` with their units.
pub fn degenerate_pool(x: &CellExpr, s: &Polygraph) -> Result<Vec<CellExpr>> {
    let top = x.dim() + 1;
    let mut base: Vec<CellExpr> = s.keys().filter(|k| k.dim() <= top).map(|k| CellExpr::gen(k.clone())).collect();
    for i in 0..=x.dim() {
        for sign in Sign::BOTH {
            base.push(iterated_boundary(sign, i, x, s)?);
        }
    }
    let mut pool = Vec::new();
    for c in base {
        for k in 0..=top - c.dim() {
            pool.push(CellExpr::iterated_unit(c.clone(), k));
        }
    }
    Ok(pool)
}

/// One side of an oplax transformation `θ : f ⇒ g`.
pub enum Endpoint<'a> {
    /// The constant functor on a 0-cell.
    Constant(CellExpr),
    Identity,
    Map(&'a dyn Fn(&CellExpr) -> Result<CellExpr>),
}

impl Endpoint<'_> {
    pub fn apply(&self, e: &CellExpr) -> Result<CellExpr> {
        match self {
            Endpoint::Constant(v) => Ok(CellExpr::iterated_unit(v.clone(), e.dim())),
            Endpoint::Identity => Ok(e.clone()),
            Endpoint::Map(m) => m(e),
        }
    }
}

/// Cells on which [`oplax_check`] tests the axioms: composable pairs
/// `(p, x, y)` with `x` applied first, and cells `u` for the unit axiom.
#[derive(Clone, Debug, Default)]
pub struct Samples {
    pub pairs: Vec<(usize, CellExpr, CellExpr)>,
    pub units: Vec<CellExpr>,
}

impl Samples {
    /// Every composable pair of generators of dimension at most `max_dim`
    /// (the lower one lifted by units), units on every such generator and
    /// units on every sampled composite.
    pub fn generators(s: &Polygraph, ctx: &SteinerContext, max_dim: usize) -> Result<Samples> {
        let gens: Vec<CellExpr> = s
            .keys()
            .filter(|k| k.dim() <= max_dim)
            .map(|k| CellExpr::gen(k.clone()))
            .collect();
        let mut out = Samples::default();
        for a in &gens {
            for b in &gens {
                let n = a.dim().max(b.dim());
                for p in 0..n {
                    let ta = iterated_boundary(Sign::Pos, p.min(a.dim()), a, s)?;
                    let sb = iterated_boundary(Sign::Neg, p.min(b.dim()), b, s)?;
                    if ta.dim() == sb.dim() && ctx.cell_eq(&ta, &sb)? {
                        let x = CellExpr::iterated_unit(a.clone(), n - a.dim());
                        let y = CellExpr::iterated_unit(b.clone(), n - b.dim());
                        out.pairs.push((p, x, y));
                    }
                }
            }
        }
        out.units = gens.clone();
        for (p, x, y) in &out.pairs {
            out.units.push(compose(*p, x.clone(), y.clone())?);
        }
        Ok(out)
    }
}

/// The cylinder `θ(x) : f(x) ⇝ g(x)` with cells `θ_{ε x_i}` and `θ_x`.
pub fn cylinder_of(
    theta: &dyn Fn(&CellExpr) -> Result<CellExpr>,
    f: &Endpoint,
    g: &Endpoint,
    x: &CellExpr,
    s: &Polygraph,
) -> Result<Cylinder> {
    let aux = (0..x.dim())
        .map(|i| {
            Ok((
                theta(&iterated_boundary(Sign::Neg, i, x, s)?)?,
                theta(&iterated_boundary(Sign::Pos, i, x, s)?)?,
            ))
        })
        .collect::<Result<_>>()?;
    Cylinder::new(aux, theta(x)?, f.apply(x)?, g.apply(x)?)
}

/// Checks that `θ` is an oplax transformation from `f` to `g` on `samples`:
/// the shape of `θ_x` on every sampled cell, the composition axiom
/// `θ_{y ∘_p x} = (g(t y_{p+1}) ∘_0 θ_{s x_0} ⋯ ∘_p θ_x) ∘_{p+1} (θ_y ∘_p θ_{t y_{p-1}} ⋯ ∘_0 f(s x_{p+1}))`
/// and the unit axiom `θ_{1_u} = 1_{θ_u}`, all by tables.
pub fn oplax_check(
    theta: &dyn Fn(&CellExpr) -> Result<CellExpr>,
    f: &Endpoint,
    g: &Endpoint,
    samples: &Samples,
    s: &Polygraph,
    ctx: &SteinerContext,
) -> CheckReport {
    let mut r = CheckReport::new("oplax");

    let mut cells: Vec<CellExpr> = Vec::new();
    for (p, x, y) in &samples.pairs {
        cells.push(x.clone());
        cells.push(y.clone());
        if let Ok(c) = compose(*p, x.clone(), y.clone()) {
            cells.push(c);
        }
    }
    cells.extend(samples.units.iter().cloned());
    let mut seen = std::collections::HashSet::new();
    for x in cells {
        if !seen.insert(x.clone()) {
            continue;
        }
        match cylinder_of(theta, f, g, &x, s) {
            Ok(cyl) => {
                let sub = validate_cylinder(&cyl, s, ctx);
                r.checked += sub.checked;
                r.failures
                    .extend(sub.failures.into_iter().map(|w| format!("shape at {}: {w}", print(&x))));
            }
            Err(e) => {
                r.tick();
                r.fail(format!("shape at {}: {e}", print(&x)));
            }
        }
    }

    for (p, x, y) in &samples.pairs {
        let p = *p;
        let sides = (|| -> Result<(CellExpr, CellExpr)> {
            let lhs = theta(&compose(p, x.clone(), y.clone())?)?;
            let head = g.apply(&iterated_boundary(Sign::Pos, p + 1, y, s)?)?;
            let mut left = whisker_above(head, p, |j| {
                iterated_boundary(Sign::Neg, j, x, s).and_then(|c| theta(&c)).expect("boundary of a sampled cell")
            })?;
            left = compose(p, theta(x)?, left)?;
            let tail = f.apply(&iterated_boundary(Sign::Neg, p + 1, x, s)?)?;
            let mut right = whisker_below(tail, p, |j| {
                iterated_boundary(Sign::Pos, j, y, s).and_then(|c| theta(&c)).expect("boundary of a sampled cell")
            })?;
            right = compose(p, right, theta(y)?)?;
            Ok((lhs, compose(p + 1, right, left)?))
        })();
        let what = || format!("composition {} *{p} {}", print(y), print(x));
        match sides {
            Ok((lhs, rhs)) => record_eq(&mut r, ctx, &lhs, &rhs, what),
            Err(e) => {
                r.tick();
                r.fail(format!("{}: {e}", what()));
            }
        }
    }

    for u in &samples.units {
        let sides = (|| -> Result<(CellExpr, CellExpr)> {
            Ok((theta(&CellExpr::unit(u.clone()))?, CellExpr::unit(theta(u)?)))
        })();
        let what = || format!("unit on {}", print(u));
        match sides {
            Ok((lhs, rhs)) => record_eq(&mut r, ctx, &lhs, &rhs, what),
            Err(e) => {
                r.tick();
                r.fail(format!("{}: {e}", what()));
            }
        }
    }
    r
}

/// The four expansion axioms for the chevron of `ex` on `samples`: the two
/// functoriality conditions (through [`oplax_check`] from the constant
/// functor on the origin to the identity), `ξ_{ξ_u} = 1_{ξ_u}` and `ξ_v = 1_v`.
pub fn expansion_axioms_check(ex: &ExpandedPolygraph, samples: &Samples, ctx: &SteinerContext) -> CheckReport {
    let s = ex.result();
    let origin = CellExpr::gen(ex.origin().clone());
    let theta = |e: &CellExpr| ex.chevron(e);
    let mut r = oplax_check(&theta, &Endpoint::Constant(origin.clone()), &Endpoint::Identity, samples, s, ctx);
    r.name = "expansion-axioms".into();

    let mut cells: Vec<CellExpr> = s.keys().map(|k| CellExpr::gen(k.clone())).collect();
    cells.extend(samples.units.iter().cloned());
    for u in &cells {
        let sides = (|| -> Result<(CellExpr, CellExpr)> {
            let xu = ex.chevron(u)?;
            Ok((ex.chevron(&xu)?, CellExpr::unit(xu)))
        })();
        let what = || format!("chevron of the chevron of {}", print(u));
        match sides {
            Ok((lhs, rhs)) => record_eq(&mut r, ctx, &lhs, &rhs, what),
            Err(e) => {
                r.tick();
                r.fail(format!("{}: {e}", what()));
            }
        }
    }
    match ex.chevron(&origin) {
        Ok(xv) => record_eq(&mut r, ctx, &xv, &CellExpr::unit(origin.clone()), || "chevron of the origin".into()),
        Err(e) => {
            r.tick();
            r.fail(format!("chevron of the origin: {e}"));
        }
    }
    r
}

/// `h(g) = [ξ_g]` on generators of `Ξ(S)` satisfies `dh + hd = id - u∘e` in
/// degree 0 (with `u(1)` the origin) and `dh + hd = id` above.
pub fn chain_homotopy_check(ex: &ExpandedPolygraph) -> CheckReport {
    let mut r = CheckReport::new("chain-homotopy");
    let s = ex.result();
    let k = lambda(s);
    let h = |key: &crate::cells::GenKey| -> Result<Chain> { Ok(linearize(&ex.chevron(&CellExpr::gen(key.clone()))?)) };
    for g in s.keys() {
        let out = (|| -> Result<(Chain, Chain)> {
            let mut lhs = k.d(&h(g)?)?;
            if g.dim() > 0 {
                for (b, c) in k.diff_of(g)?.iter() {
                    lhs.add_scaled(&h(b)?, c);
                }
            }
            let mut rhs = Chain::basis(g.clone());
            if g.dim() == 0 {
                rhs.add_term(ex.origin().clone(), -1);
            }
            Ok((lhs, rhs))
        })();
        match out {
            Ok((lhs, rhs)) => r.check(lhs == rhs, || format!("at {g}: {lhs} vs {rhs}")),
            Err(e) => {
                r.tick();
                r.fail(format!("at {g}: {e}"));
            }
        }
    }
    r
}
