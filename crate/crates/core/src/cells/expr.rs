use std::collections::HashMap;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use super::GenKey;
use crate::error::{Error, Result};
use crate::polygraph::Polygraph;

/// Source (`Neg`) or target (`Pos`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Neg, Sign::Pos];

    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Pos => '+',
        }
    }
}

/// Expression denoting a cell of a free ω-category.
///
/// `Comp { p, first, second }` denotes `second ∘_p first`: `first` is applied
/// first. Expressions are immutable and share subterms; dimension and hash are
/// computed once at construction.
#[derive(Clone)]
pub struct CellExpr(Arc<Node>);

struct Node {
    kind: CellKind,
    dim: usize,
    hash: u64,
}

#[derive(Clone, PartialEq, Eq)]
pub enum CellKind {
    Gen(GenKey),
    Unit(CellExpr),
    Comp {
        p: usize,
        first: CellExpr,
        second: CellExpr,
    },
}

impl CellExpr {
    fn from_kind(kind: CellKind) -> Self {
        let mut h = DefaultHasher::new();
        let dim = match &kind {
            CellKind::Gen(k) => {
                0u8.hash(&mut h);
                k.hash(&mut h);
                k.dim()
            }
            CellKind::Unit(u) => {
                1u8.hash(&mut h);
                u.0.hash.hash(&mut h);
                u.dim() + 1
            }
            CellKind::Comp { p, first, second } => {
                2u8.hash(&mut h);
                p.hash(&mut h);
                first.0.hash.hash(&mut h);
                second.0.hash.hash(&mut h);
                first.dim()
            }
        };
        CellExpr(Arc::new(Node {
            kind,
            dim,
            hash: h.finish(),
        }))
    }

    pub fn gen(key: GenKey) -> Self {
        Self::from_kind(CellKind::Gen(key))
    }

    pub fn unit(inner: CellExpr) -> Self {
        Self::from_kind(CellKind::Unit(inner))
    }

    /// `k`-fold unit on `inner`.
    pub fn iterated_unit(inner: CellExpr, k: usize) -> Self {
        (0..k).fold(inner, |acc, _| CellExpr::unit(acc))
    }

    /// `second ∘_p first` for operands of equal dimension `> p`.
    pub fn comp(p: usize, first: CellExpr, second: CellExpr) -> Result<Self> {
        if first.dim() != second.dim() || p >= first.dim() {
            return Err(Error::CompositionIndex {
                p,
                left: second.dim(),
                right: first.dim(),
            });
        }
        Ok(Self::comp_unchecked(p, first, second))
    }

    /// Builds a composite without checking dimensions. [`CellExpr::checked_dim`]
    /// reports the defect later.
    pub fn comp_unchecked(p: usize, first: CellExpr, second: CellExpr) -> Self {
        Self::from_kind(CellKind::Comp { p, first, second })
    }

    pub fn kind(&self) -> &CellKind {
        &self.0.kind
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn as_gen(&self) -> Option<&GenKey> {
        match self.kind() {
            CellKind::Gen(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.kind(), CellKind::Unit(_))
    }

    /// Number of outermost `Unit` wrappers.
    pub fn unit_depth(&self) -> usize {
        let mut e = self;
        let mut k = 0;
        while let CellKind::Unit(inner) = e.kind() {
            e = inner;
            k += 1;
        }
        k
    }

    /// Removes all outermost `Unit` wrappers.
    pub fn strip_units(&self) -> &CellExpr {
        let mut e = self;
        while let CellKind::Unit(inner) = e.kind() {
            e = inner;
        }
        e
    }

    pub(crate) fn ptr_key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Dimension, validating every composite on the way.
    pub fn checked_dim(&self) -> Result<usize> {
        match self.kind() {
            CellKind::Gen(k) => Ok(k.dim()),
            CellKind::Unit(u) => Ok(u.checked_dim()? + 1),
            CellKind::Comp { p, first, second } => {
                let a = first.checked_dim()?;
                let b = second.checked_dim()?;
                if a != b {
                    return Err(Error::Structural(format!(
                        "operands of *{p} have dimensions {b} and {a}"
                    )));
                }
                if *p >= a {
                    return Err(Error::Structural(format!(
                        "*{p} composition of {a}-cells"
                    )));
                }
                Ok(a)
            }
        }
    }

    /// Every generator key occurring in the expression, with repetitions
    /// removed, in first-occurrence order.
    pub fn generators(&self) -> Vec<GenKey> {
        let mut out = Vec::new();
        let mut seen_nodes = std::collections::HashSet::new();
        let mut seen_keys = std::collections::HashSet::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            if !seen_nodes.insert(e.ptr_key()) {
                continue;
            }
            match e.kind() {
                CellKind::Gen(k) => {
                    if seen_keys.insert(k.clone()) {
                        out.push(k.clone());
                    }
                }
                CellKind::Unit(u) => stack.push(u),
                CellKind::Comp { first, second, .. } => {
                    stack.push(second);
                    stack.push(first);
                }
            }
        }
        out
    }

    /// Homomorphic image under a substitution of generators. Units and
    /// composites are preserved; `subst` decides the image of each key.
    pub fn substitute<F>(&self, subst: &mut F) -> Result<CellExpr>
    where
        F: FnMut(&GenKey) -> Result<CellExpr>,
    {
        let mut memo = HashMap::new();
        self.substitute_memo(subst, &mut memo)
    }

    fn substitute_memo<F>(&self, subst: &mut F, memo: &mut HashMap<usize, CellExpr>) -> Result<CellExpr>
    where
        F: FnMut(&GenKey) -> Result<CellExpr>,
    {
        if let Some(hit) = memo.get(&self.ptr_key()) {
            return Ok(hit.clone());
        }
        let out = match self.kind() {
            CellKind::Gen(k) => subst(k)?,
            CellKind::Unit(u) => CellExpr::unit(u.substitute_memo(subst, memo)?),
            CellKind::Comp { p, first, second } => CellExpr::comp_unchecked(
                *p,
                first.substitute_memo(subst, memo)?,
                second.substitute_memo(subst, memo)?,
            ),
        };
        memo.insert(self.ptr_key(), out.clone());
        Ok(out)
    }
}

impl PartialEq for CellExpr {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash
                && self.0.dim == other.0.dim
                && self.0.kind == other.0.kind)
    }
}

impl Eq for CellExpr {}

impl Hash for CellExpr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl fmt::Debug for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print(self))
    }
}

impl fmt::Display for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print(self))
    }
}

impl From<GenKey> for CellExpr {
    fn from(k: GenKey) -> Self {
        CellExpr::gen(k)
    }
}

/// `second ∘_p first`, lifting the lower-dimensional operand by units until
/// both dimensions agree. Composability is not checked here.
pub fn compose(p: usize, first: CellExpr, second: CellExpr) -> Result<CellExpr> {
    let (a, b) = (first.dim(), second.dim());
    if p >= a.max(b) {
        return Err(Error::CompositionIndex {
            p,
            left: b,
            right: a,
        });
    }
    let n = a.max(b);
    let first = CellExpr::iterated_unit(first, n - a);
    let second = CellExpr::iterated_unit(second, n - b);
    Ok(CellExpr::comp_unchecked(p, first, second))
}

/// The `(dim - 1)`-source or target of `e`.
pub fn boundary(sign: Sign, e: &CellExpr, ctx: &Polygraph) -> Result<CellExpr> {
    let mut memo = HashMap::new();
    boundary_memo(sign, e, ctx, &mut memo)
}

fn boundary_memo(
    sign: Sign,
    e: &CellExpr,
    ctx: &Polygraph,
    memo: &mut HashMap<usize, CellExpr>,
) -> Result<CellExpr> {
    if e.dim() == 0 {
        return Err(Error::ZeroDimensional);
    }
    if let Some(hit) = memo.get(&e.ptr_key()) {
        return Ok(hit.clone());
    }
    let out = match e.kind() {
        CellKind::Gen(k) => {
            let (src, tgt) = ctx
                .boundary_of(k)
                .ok_or_else(|| Error::UnknownGenerator(k.clone()))?;
            match sign {
                Sign::Neg => src.clone(),
                Sign::Pos => tgt.clone(),
            }
        }
        CellKind::Unit(u) => u.clone(),
        CellKind::Comp { p, first, second } => {
            if first.dim() != second.dim() || *p >= first.dim() {
                return Err(Error::Structural(format!(
                    "boundary of malformed *{p} composite"
                )));
            }
            if e.dim() - 1 == *p {
                match sign {
                    Sign::Neg => boundary_memo(sign, first, ctx, memo)?,
                    Sign::Pos => boundary_memo(sign, second, ctx, memo)?,
                }
            } else {
                CellExpr::comp_unchecked(
                    *p,
                    boundary_memo(sign, first, ctx, memo)?,
                    boundary_memo(sign, second, ctx, memo)?,
                )
            }
        }
    };
    memo.insert(e.ptr_key(), out.clone());
    Ok(out)
}

/// The `i`-source or `i`-target: [`boundary`] applied `dim - i` times.
pub fn iterated_boundary(sign: Sign, i: usize, e: &CellExpr, ctx: &Polygraph) -> Result<CellExpr> {
    if i > e.dim() {
        return Err(Error::BoundaryOutOfRange {
            requested: i,
            dim: e.dim(),
        });
    }
    let mut cur = e.clone();
    while cur.dim() > i {
        cur = boundary(sign, &cur, ctx)?;
    }
    Ok(cur)
}
