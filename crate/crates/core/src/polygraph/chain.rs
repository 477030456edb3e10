use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::cells::GenKey;

/// Finite integer combination of basis keys, all of one dimension.
///
/// Zero coefficients are never stored. Keys iterate in their natural order,
/// which for simplices is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Chain {
    dim: usize,
    coeffs: BTreeMap<GenKey, i64>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(key: GenKey) -> Self {
        let dim = key.dim();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(key, 1);
        Chain { dim, coeffs }
    }

    /// Builds a chain from terms; repeated keys are summed.
    ///
    /// # Panics
    /// If a key's dimension differs from `dim`.
    pub fn from_terms<I: IntoIterator<Item = (GenKey, i64)>>(dim: usize, terms: I) -> Self {
        let mut c = Chain::zero(dim);
        for (k, v) in terms {
            c.add_term(k, v);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: &GenKey) -> i64 {
        self.coeffs.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GenKey, i64)> + '_ {
        self.coeffs.iter().map(|(k, v)| (k, *v))
    }

    pub fn support(&self) -> impl Iterator<Item = &GenKey> + '_ {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.values().all(|v| *v > 0)
    }

    /// Sum of the coefficients.
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn add_term(&mut self, key: GenKey, v: i64) {
        assert_eq!(key.dim(), self.dim, "key {key} does not live in dimension {}", self.dim);
        if v == 0 {
            return;
        }
        let entry = self.coeffs.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Chain, k: i64) {
        assert_eq!(self.dim, other.dim, "adding chains of different dimensions");
        for (key, v) in &other.coeffs {
            self.add_term(key.clone(), k * v);
        }
    }

    pub fn scaled(&self, k: i64) -> Chain {
        let mut c = Chain::zero(self.dim);
        c.add_scaled(self, k);
        c
    }

    /// `(z⁺, z⁻)` with disjoint supports and `z = z⁺ - z⁻`.
    pub fn pos_neg(&self) -> (Chain, Chain) {
        let mut pos = Chain::zero(self.dim);
        let mut neg = Chain::zero(self.dim);
        for (k, v) in &self.coeffs {
            if *v > 0 {
                pos.coeffs.insert(k.clone(), *v);
            } else {
                neg.coeffs.insert(k.clone(), -v);
            }
        }
        (pos, neg)
    }

    /// The image under a key substitution. Keys mapped to `None` are dropped.
    pub fn map_keys(&self, dim: usize, mut f: impl FnMut(&GenKey) -> Option<GenKey>) -> Chain {
        let mut c = Chain::zero(dim);
        for (k, v) in &self.coeffs {
            if let Some(k2) = f(k) {
                c.add_term(k2, *v);
            }
        }
        c
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, unicode: bool) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_char('0');
        }
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            let abs = v.unsigned_abs();
            if *v < 0 {
                f.write_char('-')?;
            } else if i > 0 {
                f.write_char('+')?;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            k.write_with(f, unicode)?;
        }
        Ok(())
    }

    pub fn to_string_unicode(&self) -> String {
        let mut s = String::new();
        let _ = self.write_with(&mut s, true);
        s
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.dim)?;
        self.write_with(f, false)
    }
}

impl AddAssign<&Chain> for Chain {
    fn add_assign(&mut self, rhs: &Chain) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&Chain> for Chain {
    fn sub_assign(&mut self, rhs: &Chain) {
        self.add_scaled(rhs, -1);
    }
}

impl Add<&Chain> for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        let mut c = self.clone();
        c += rhs;
        c
    }
}

impl Sub<&Chain> for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        let mut c = self.clone();
        c -= rhs;
        c
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scaled(-1)
    }
}
