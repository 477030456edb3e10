use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Indices = SmallVec<[u16; 10]>;

/// A strictly increasing tuple `<i_0,...,i_m>`, naming the `m`-generator of an
/// oriental that corresponds to the injection `[m] -> [n]` with image
/// `{i_0,...,i_m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Indices);

impl Simplex {
    pub fn new<I: IntoIterator<Item = u16>>(indices: I) -> Result<Self> {
        let idx: Indices = indices.into_iter().collect();
        if idx.is_empty() {
            return Err(Error::Simplicial("empty simplex".into()));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Simplicial(format!(
                "simplex indices must be strictly increasing, got {:?}",
                idx.as_slice()
            )));
        }
        Ok(Simplex(idx))
    }

    /// All `m`-simplices with vertices in `[0, n]`, in lexicographic order.
    pub fn all(n: u16, m: usize) -> Vec<Simplex> {
        fn go(start: u16, n: u16, left: usize, cur: &mut Indices, out: &mut Vec<Simplex>) {
            if left == 0 {
                out.push(Simplex(cur.clone()));
                return;
            }
            let mut i = start;
            while usize::from(i) + left <= usize::from(n) + 1 {
                cur.push(i);
                go(i + 1, n, left - 1, cur, out);
                cur.pop();
                i += 1;
            }
        }
        let mut out = Vec::new();
        go(0, n, m + 1, &mut Indices::new(), &mut out);
        out
    }

    pub fn vertex(i: u16) -> Self {
        Simplex(smallvec::smallvec![i])
    }

    pub fn indices(&self) -> &[u16] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn max_vertex(&self) -> u16 {
        *self.0.last().expect("simplex is nonempty")
    }

    /// The image under `i -> i + k`.
    pub fn shifted(&self, k: u16) -> Self {
        Simplex(self.0.iter().map(|i| i + k).collect())
    }

    /// The `j`-th face: drop the `j`-th vertex.
    pub fn face(&self, j: usize) -> Option<Self> {
        if self.0.len() < 2 || j >= self.0.len() {
            return None;
        }
        let mut idx = self.0.clone();
        idx.remove(j);
        Some(Simplex(idx))
    }

    /// Prepends a vertex strictly below the current minimum.
    pub(crate) fn cone_on(&self, apex: u16) -> Self {
        debug_assert!(apex < self.0[0]);
        let mut idx = Indices::with_capacity(self.0.len() + 1);
        idx.push(apex);
        idx.extend_from_slice(&self.0);
        Simplex(idx)
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, unicode: bool) -> fmt::Result {
        f.write_str(if unicode { "⟨" } else { "<" })?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_char(',')?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(if unicode { "⟩" } else { ">" })
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

/// Key of a generator of a polygraph.
///
/// Oriental generators are labelled by simplices and carry their dimension
/// implicitly; generators of arbitrary polygraphs carry a name and an explicit
/// dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKey {
    Simplex(Simplex),
    Named { name: Arc<str>, dim: usize },
}

impl GenKey {
    pub fn simplex<I: IntoIterator<Item = u16>>(indices: I) -> Result<Self> {
        Simplex::new(indices).map(GenKey::Simplex)
    }

    pub fn named(name: impl Into<Arc<str>>, dim: usize) -> Self {
        GenKey::Named {
            name: name.into(),
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            GenKey::Simplex(s) => s.dim(),
            GenKey::Named { dim, .. } => *dim,
        }
    }

    pub fn as_simplex(&self) -> Option<&Simplex> {
        match self {
            GenKey::Simplex(s) => Some(s),
            GenKey::Named { .. } => None,
        }
    }

    /// Serialized form used as a JSON object key: `"0.1.2"` or the raw name.
    pub fn to_json_key(&self) -> String {
        match self {
            GenKey::Simplex(s) => s
                .indices()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join("."),
            GenKey::Named { name, .. } => name.to_string(),
        }
    }

    /// Inverse of [`GenKey::to_json_key`]. Names need their dimension from
    /// context, which the caller supplies.
    pub fn from_json_key(text: &str, dim_of_name: impl FnOnce(&str) -> Option<usize>) -> Result<Self> {
        if text.starts_with(|c: char| c.is_ascii_digit()) {
            let idx = text
                .split('.')
                .map(|part| {
                    part.parse::<u16>()
                        .map_err(|_| Error::Json(format!("bad simplex key {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            GenKey::simplex(idx)
        } else if is_identifier(text) {
            let dim = dim_of_name(text)
                .ok_or_else(|| Error::Json(format!("name {text:?} not listed in dims")))?;
            Ok(GenKey::named(text, dim))
        } else {
            Err(Error::Json(format!("bad generator key {text:?}")))
        }
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, unicode: bool) -> fmt::Result {
        match self {
            GenKey::Simplex(s) => s.write_with(f, unicode),
            GenKey::Named { name, .. } => f.write_str(name),
        }
    }
}

pub(crate) fn is_identifier(text: &str) -> bool {
    let mut chars = text.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\''))
}

impl fmt::Debug for GenKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl fmt::Display for GenKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl From<Simplex> for GenKey {
    fn from(s: Simplex) -> Self {
        GenKey::Simplex(s)
    }
}
