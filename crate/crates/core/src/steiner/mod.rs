//! Augmented directed complexes, Steiner tables and the comparison with the
//! simplex complex.

mod checks;
mod context;
mod json;
mod table;

use std::collections::{HashMap, HashSet};

pub use checks::{
    atomic_check, compare, find_cycle, lin_boundary_check, strong_loop_free_check,
    strong_steiner_check, unital_check, KeyMap, Verdict,
};
pub use context::SteinerContext;
pub use table::CellTable;

use crate::cells::{GenKey, Sign, Simplex};
use crate::error::{Error, Result};
use crate::polygraph::Chain;
use crate::report::CheckReport;

/// A free augmented directed complex: graded bases, a differential on basis
/// elements, the coefficient-sum augmentation, and the nonnegative
/// combinations as positivity cones.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct AugDirComplex {
    bases: Vec<Vec<GenKey>>,
    diff: HashMap<GenKey, Chain>,
    members: HashSet<GenKey>,
}

impl AugDirComplex {
    /// Assembles a complex. Basis keys of positive dimension without a
    /// differential entry have differential zero.
    pub fn from_parts(bases: Vec<Vec<GenKey>>, diff: HashMap<GenKey, Chain>) -> Self {
        let members = bases.iter().flatten().cloned().collect();
        AugDirComplex {
            bases,
            diff,
            members,
        }
    }

    /// Like [`AugDirComplex::from_parts`], rejecting keys listed at the wrong
    /// dimension, duplicates, and differentials leaving the basis.
    pub fn new(bases: Vec<Vec<GenKey>>, diff: HashMap<GenKey, Chain>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (d, level) in bases.iter().enumerate() {
            for k in level {
                if k.dim() != d {
                    return Err(Error::InvalidPolygraph(format!("{k} listed in dimension {d}")));
                }
                if !seen.insert(k.clone()) {
                    return Err(Error::InvalidPolygraph(format!("duplicate basis element {k}")));
                }
            }
        }
        for (k, c) in &diff {
            if !seen.contains(k) || k.dim() == 0 || c.dim() + 1 != k.dim() {
                return Err(Error::InvalidPolygraph(format!("bad differential entry for {k}")));
            }
            if let Some(bad) = c.support().find(|x| !seen.contains(*x)) {
                return Err(Error::InvalidPolygraph(format!("d{k} mentions {bad}")));
            }
        }
        Ok(Self::from_parts(bases, diff))
    }

    pub fn bases(&self) -> &[Vec<GenKey>] {
        &self.bases
    }

    pub fn basis(&self, dim: usize) -> &[GenKey] {
        self.bases.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn keys(&self) -> impl Iterator<Item = &GenKey> + '_ {
        self.bases.iter().flatten()
    }

    pub fn contains(&self, key: &GenKey) -> bool {
        self.members.contains(key)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Differential of a basis element.
    pub fn diff_of(&self, key: &GenKey) -> Result<Chain> {
        if !self.contains(key) {
            return Err(Error::UnknownGenerator(key.clone()));
        }
        if key.dim() == 0 {
            return Err(Error::ZeroDimensional);
        }
        Ok(self
            .diff
            .get(key)
            .cloned()
            .unwrap_or_else(|| Chain::zero(key.dim() - 1)))
    }

    pub fn d(&self, x: &Chain) -> Result<Chain> {
        if x.dim() == 0 {
            return Err(Error::ZeroDimensional);
        }
        let mut out = Chain::zero(x.dim() - 1);
        for (k, v) in x.iter() {
            out.add_scaled(&self.diff_of(k)?, v);
        }
        Ok(out)
    }

    /// Augmentation of a 0-chain.
    pub fn e(&self, x: &Chain) -> Result<i64> {
        if x.dim() != 0 {
            return Err(Error::BoundaryOutOfRange {
                requested: 0,
                dim: x.dim(),
            });
        }
        Ok(x.coefficient_sum())
    }

    /// `d⁻x` or `d⁺x`: the negative or positive part of `dx`.
    pub fn d_eps(&self, sign: Sign, x: &Chain) -> Result<Chain> {
        let (pos, neg) = self.d(x)?.pos_neg();
        Ok(match sign {
            Sign::Neg => neg,
            Sign::Pos => pos,
        })
    }

    /// `d⁻` or `d⁺` iterated down to dimension `i`.
    pub fn d_eps_i(&self, sign: Sign, i: usize, x: &Chain) -> Result<Chain> {
        if i > x.dim() {
            return Err(Error::BoundaryOutOfRange {
                requested: i,
                dim: x.dim(),
            });
        }
        let mut cur = x.clone();
        while cur.dim() > i {
            cur = self.d_eps(sign, &cur)?;
        }
        Ok(cur)
    }

    /// The atom of a basis element: rows `(d_i⁻ b, d_i⁺ b)` topped by `(b, b)`.
    pub fn atom(&self, key: &GenKey) -> Result<CellTable> {
        if !self.contains(key) {
            return Err(Error::UnknownGenerator(key.clone()));
        }
        let b = Chain::basis(key.clone());
        let n = key.dim();
        let mut rows = Vec::with_capacity(n + 1);
        for i in 0..n {
            rows.push((self.d_eps_i(Sign::Neg, i, &b)?, self.d_eps_i(Sign::Pos, i, &b)?));
        }
        rows.push((b.clone(), b));
        let t = CellTable::from_rows(rows);
        for sign in Sign::BOTH {
            let row0 = t.row(sign, 0);
            if row0.coefficient_sum() != 1 {
                return Err(Error::NotUnital(key.clone()));
            }
        }
        Ok(t)
    }
}

impl std::fmt::Debug for AugDirComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for k in self.keys() {
            match self.diff_of(k) {
                Ok(d) => writeln!(f, "d{k} = {d}")?,
                Err(_) => writeln!(f, "{k}")?,
            }
        }
        Ok(())
    }
}

/// `(z⁺, z⁻)` with disjoint supports and `z = z⁺ - z⁻`.
pub fn pos_neg(z: &Chain) -> (Chain, Chain) {
    z.pos_neg()
}

/// Checks `dd = 0` and `ed = 0` on every basis element.
pub fn validate_adc(k: &AugDirComplex) -> CheckReport {
    let mut r = CheckReport::new("adc");
    for key in k.keys() {
        if key.dim() == 0 {
            continue;
        }
        let dx = match k.diff_of(key) {
            Ok(c) => c,
            Err(e) => {
                r.tick();
                r.fail(format!("{key}: {e}"));
                continue;
            }
        };
        if key.dim() == 1 {
            let e = dx.coefficient_sum();
            r.check(e == 0, || format!("e(d{key}) = {e}"));
        } else {
            match k.d(&dx) {
                Ok(ddx) => r.check(ddx.is_zero(), || format!("dd{key} = {ddx}")),
                Err(e) => {
                    r.tick();
                    r.fail(format!("dd{key}: {e}"));
                }
            }
        }
    }
    r
}

/// The normalized chain complex of the standard `n`-simplex, with bases the
/// strictly increasing tuples in `[0, n]` and alternating face sums as
/// differential. `n = -1` gives the empty complex.
pub fn simplex_adc(n: isize) -> AugDirComplex {
    if n < 0 {
        return AugDirComplex::default();
    }
    let n = n as u16;
    let bases: Vec<Vec<GenKey>> = (0..=n as usize)
        .map(|m| Simplex::all(n, m).into_iter().map(GenKey::Simplex).collect())
        .collect();
    let mut diff = HashMap::new();
    for key in bases.iter().skip(1).flatten() {
        diff.insert(key.clone(), face_sum(key.as_simplex().expect("simplex"), None));
    }
    AugDirComplex::from_parts(bases, diff)
}

/// `Σ (-1)^j δ_j s`, or only the odd (`Some(Neg)`) or even (`Some(Pos)`) faces
/// with coefficient one.
pub(crate) fn face_sum(s: &Simplex, parity: Option<Sign>) -> Chain {
    let mut c = Chain::zero(s.dim() - 1);
    for j in 0..=s.dim() {
        let odd = j % 2 == 1;
        let coeff = match parity {
            None => {
                if odd {
                    -1
                } else {
                    1
                }
            }
            Some(Sign::Neg) if odd => 1,
            Some(Sign::Pos) if !odd => 1,
            Some(_) => 0,
        };
        if coeff != 0 {
            c.add_term(GenKey::Simplex(s.face(j).expect("positive dimension")), coeff);
        }
    }
    c
}
