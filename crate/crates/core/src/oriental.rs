//! The orientals `O_n = Ξ^{n+1}(∅)` and their cosimplicial structure.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cells::{CellExpr, GenKey, Simplex};
use crate::error::{Error, Result};
use crate::expansion::{expand, mu, t_on_map, ExpandedPolygraph, GenMap};
use crate::polygraph::{linearize, Chain, Polygraph};
use crate::report::CheckReport;
use crate::steiner::SteinerContext;

struct Cache {
    /// `expansions[n]` is `Ξ(O_{n-1}) = O_n`.
    expansions: Vec<Arc<ExpandedPolygraph>>,
    contexts: HashMap<usize, Arc<SteinerContext>>,
}

fn cache() -> &'static Mutex<Cache> {
    static CACHE: OnceLock<Mutex<Cache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(Cache {
            expansions: Vec::new(),
            contexts: HashMap::new(),
        })
    })
}

fn empty() -> Arc<Polygraph> {
    static EMPTY: OnceLock<Arc<Polygraph>> = OnceLock::new();
    EMPTY.get_or_init(|| Arc::new(Polygraph::new())).clone()
}

/// `O_n` as the expansion of `O_{n-1}`. Built incrementally and cached.
pub fn oriental_expansion(n: usize) -> Arc<ExpandedPolygraph> {
    let mut c = cache().lock().expect("oriental cache");
    while c.expansions.len() <= n {
        let base = c.expansions.last().map_or_else(empty, |e| e.result().clone());
        let ex = expand(base).expect("orientals are valid polygraphs");
        c.expansions.push(Arc::new(ex));
    }
    c.expansions[n].clone()
}

/// The `n`-th oriental; `O_{-1}` is empty.
///
/// # Panics
/// If `n < -1`.
pub fn oriental(n: isize) -> Arc<Polygraph> {
    assert!(n >= -1, "orientals start at -1");
    if n == -1 {
        empty()
    } else {
        oriental_expansion(n as usize).result().clone()
    }
}

/// Table evaluation on `O_n`, certified once and cached.
pub fn oriental_context(n: usize) -> Arc<SteinerContext> {
    if let Some(c) = cache().lock().expect("oriental cache").contexts.get(&n) {
        return c.clone();
    }
    let ctx = Arc::new(SteinerContext::new(&oriental(n as isize)).expect("orientals are strong Steiner"));
    cache()
        .lock()
        .expect("oriental cache")
        .contexts
        .entry(n)
        .or_insert(ctx)
        .clone()
}

/// The cell `<i_0,...,i_m>` of `O_n` for a nondecreasing sequence, by the
/// recursion `<i_0, i_1, ...> = η^{i_0} ξ <i_1 - i_0, ...>`.
pub fn simp(seq: &[u16], n: usize) -> Result<CellExpr> {
    if seq.is_empty() {
        return Err(Error::Simplicial("empty sequence".into()));
    }
    if seq.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Simplicial(format!("{seq:?} is not nondecreasing")));
    }
    if usize::from(*seq.last().expect("nonempty")) > n {
        return Err(Error::Simplicial(format!("{seq:?} leaves [0, {n}]")));
    }
    Ok(simp_rec(seq, n))
}

fn simp_rec(seq: &[u16], n: usize) -> CellExpr {
    if seq.len() == 1 {
        return CellExpr::gen(GenKey::Simplex(Simplex::vertex(seq[0])));
    }
    let i0 = seq[0];
    let m = n - usize::from(i0);
    let rest: Vec<u16> = seq[1..].iter().map(|i| i - i0).collect();
    let inner = simp_rec(&rest, m);
    let mut cell = oriental_expansion(m)
        .chevron(&inner)
        .expect("cells of the oriental have chevrons");
    for j in 0..usize::from(i0) {
        cell = oriental_expansion(m + j + 1)
            .shift(&cell)
            .expect("cells of the oriental shift");
    }
    cell
}

/// The closed form: `r` repeated entries give an `r`-fold unit on the
/// simplex of distinct entries.
pub fn simp_dedup(seq: &[u16]) -> Result<CellExpr> {
    if seq.is_empty() || seq.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Simplicial(format!("{seq:?} is not a nondecreasing sequence")));
    }
    let mut distinct = seq.to_vec();
    distinct.dedup();
    let repeats = seq.len() - distinct.len();
    Ok(CellExpr::iterated_unit(
        CellExpr::gen(GenKey::Simplex(Simplex::new(distinct)?)),
        repeats,
    ))
}

/// An order-preserving map `[n] → [n']`, by its list of values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    values: Vec<u16>,
    cod: usize,
}

impl MonotoneMap {
    pub fn new(values: Vec<u16>, cod: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Simplicial("a map needs a nonempty domain".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Simplicial(format!("{values:?} is not order-preserving")));
        }
        if values.iter().any(|v| usize::from(*v) > cod) {
            return Err(Error::Simplicial(format!("{values:?} leaves [0, {cod}]")));
        }
        Ok(MonotoneMap { values, cod })
    }

    /// Parses `"0,0,1,3"`. Without `cod`, the codomain is `[0, max]`.
    pub fn parse(text: &str, cod: Option<usize>) -> Result<Self> {
        let values = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::Simplicial(format!("bad value {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let cod = cod.unwrap_or_else(|| values.iter().copied().max().map_or(0, usize::from));
        MonotoneMap::new(values, cod)
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            values: (0..=n as u16).collect(),
            cod: n,
        }
    }

    /// `δ_i^n : [n-1] → [n]`, the injection missing `i`.
    pub fn face(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::Simplicial(format!("no face δ_{i} into [{n}]")));
        }
        let values = (0..=n as u16).filter(|v| usize::from(*v) != i).collect();
        Ok(MonotoneMap { values, cod: n })
    }

    /// `σ_i^n : [n+1] → [n]`, the surjection hitting `i` twice.
    pub fn degeneracy(i: usize, n: usize) -> Result<Self> {
        if i > n {
            return Err(Error::Simplicial(format!("no degeneracy σ_{i} onto [{n}]")));
        }
        let values = (0..=n as u16 + 1)
            .map(|v| if usize::from(v) > i { v - 1 } else { v })
            .collect();
        Ok(MonotoneMap { values, cod: n })
    }

    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    pub fn apply(&self, i: u16) -> u16 {
        self.values[usize::from(i)]
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &MonotoneMap) -> Result<MonotoneMap> {
        if g.dom() != self.cod {
            return Err(Error::Simplicial("maps are not composable".into()));
        }
        Ok(MonotoneMap {
            values: self.values.iter().map(|v| g.apply(*v)).collect(),
            cod: g.cod,
        })
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "[{}]->[{}]: {}", self.dom(), self.cod, vals.join(","))
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `O(φ) : O_n → O_{n'}`, sending `<i_0,...,i_m>` to `<φ(i_0),...,φ(i_m)>`.
pub fn cosimplicial_map(phi: &MonotoneMap) -> Result<GenMap> {
    let src = oriental(phi.dom() as isize);
    let tgt = oriental(phi.cod() as isize);
    let mut images = HashMap::new();
    for k in src.keys() {
        let s = k.as_simplex().expect("oriental keys are simplices");
        let seq: Vec<u16> = s.indices().iter().map(|i| phi.apply(*i)).collect();
        images.insert(k.clone(), simp(&seq, phi.cod())?);
    }
    GenMap::new(src, tgt, images)
}

/// `O(δ_i^n) : O_{n-1} → O_n`.
pub fn face(i: usize, n: usize) -> Result<GenMap> {
    cosimplicial_map(&MonotoneMap::face(i, n)?)
}

/// `O(σ_i^n) : O_{n+1} → O_n`.
pub fn degeneracy(i: usize, n: usize) -> Result<GenMap> {
    cosimplicial_map(&MonotoneMap::degeneracy(i, n)?)
}

/// `η : O_k → O_{k+1}`, for `k >= -1`.
pub fn eta(k: isize) -> GenMap {
    oriental_expansion((k + 1) as usize).eta_map()
}

/// `μ : O_{k+2} → O_{k+1}`, for `k >= -1`.
pub fn mu_at(k: isize) -> GenMap {
    let inner = oriental_expansion((k + 1) as usize);
    let outer = oriental_expansion((k + 2) as usize);
    mu(&outer, &inner).expect("consecutive orientals")
}

/// `T^j f` for `f : O_a → O_b`.
pub fn t_power(f: &GenMap, j: usize) -> Result<GenMap> {
    let mut cur = f.clone();
    for _ in 0..j {
        let a = cur.source().dim().map_or(-1, |d| d as isize);
        let b = cur.target().dim().map_or(-1, |d| d as isize);
        let ex_a = oriental_expansion((a + 1) as usize);
        let ex_b = oriental_expansion((b + 1) as usize);
        cur = t_on_map(&cur, &ex_a, &ex_b)?;
    }
    Ok(cur)
}

/// `δ_i^n` as `T^i η` at `O_{n-i-1}`.
pub fn face_via_monad(i: usize, n: usize) -> Result<GenMap> {
    if n == 0 || i > n {
        return Err(Error::Simplicial(format!("no face δ_{i} into [{n}]")));
    }
    t_power(&eta(n as isize - i as isize - 1), i)
}

/// `σ_i^n` as `T^i μ` at `O_{n-i-1}`.
pub fn degeneracy_via_monad(i: usize, n: usize) -> Result<GenMap> {
    if i > n {
        return Err(Error::Simplicial(format!("no degeneracy σ_{i} onto [{n}]")));
    }
    t_power(&mu_at(n as isize - i as isize - 1), i)
}

fn compare_maps(r: &mut CheckReport, label: &str, a: &GenMap, b: &GenMap) {
    let n = a.target().dim().expect("nonempty target");
    let sub = a.eq_by_tables(b, &oriental_context(n), label);
    for f in sub.failures {
        r.fail(format!("{label}: {f}"));
    }
    r.tick();
}

/// The cosimplicial identities between faces and degeneracies of the
/// orientals up to `O_{n_max}`, generator-wise by tables.
pub fn verify_simplicial_identities(n_max: usize) -> CheckReport {
    let mut r = CheckReport::new("simplicial-identities");
    let run = |r: &mut CheckReport, label: String, lhs: Result<GenMap>, rhs: Result<GenMap>| match (lhs, rhs) {
        (Ok(a), Ok(b)) => compare_maps(r, &label, &a, &b),
        (Err(e), _) | (_, Err(e)) => {
            r.tick();
            r.fail(format!("{label}: {e}"));
        }
    };
    let d = face;
    let s = degeneracy;
    for n in 0..=n_max {
        // δ_j δ_i = δ_i δ_{j-1}, i < j, as maps O_{n-2} → O_n.
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = d(i, n - 1).and_then(|a| a.then(&d(j, n)?));
                    let rhs = d(j - 1, n - 1).and_then(|a| a.then(&d(i, n)?));
                    run(&mut r, format!("d{j}d{i} at {n}"), lhs, rhs);
                }
            }
        }
        // σ_j σ_i = σ_i σ_{j+1}, i <= j, as maps O_{n+2} → O_n.
        if n + 2 <= n_max {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = s(i, n + 1).and_then(|a| a.then(&s(j, n)?));
                    let rhs = s(j + 1, n + 1).and_then(|a| a.then(&s(i, n)?));
                    run(&mut r, format!("s{j}s{i} at {n}"), lhs, rhs);
                }
            }
        }
        // σ_j δ_i as maps O_n → O_n, with σ_j : O_{n+1} → O_n and δ_i : O_n → O_{n+1}.
        if n < n_max {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = d(i, n + 1).and_then(|a| a.then(&s(j, n)?));
                    let rhs = if i < j {
                        s(j - 1, n - 1).and_then(|a| a.then(&d(i, n)?))
                    } else if i == j || i == j + 1 {
                        Ok(GenMap::identity(oriental(n as isize)))
                    } else {
                        s(j, n - 1).and_then(|a| a.then(&d(i - 1, n)?))
                    };
                    run(&mut r, format!("s{j}d{i} at {n}"), lhs, rhs);
                }
            }
        }
    }
    r
}

/// Faces and degeneracies computed from the monad agree with the
/// cosimplicial ones, for maps between orientals up to `O_{n_max}`.
pub fn verify_routes(n_max: usize) -> CheckReport {
    let mut r = CheckReport::new("monad-routes");
    for n in 0..=n_max {
        for i in 0..=n {
            if n >= 1 {
                match (face(i, n), face_via_monad(i, n)) {
                    (Ok(a), Ok(b)) => compare_maps(&mut r, &format!("d{i} into {n}"), &a, &b),
                    (Err(e), _) | (_, Err(e)) => {
                        r.tick();
                        r.fail(format!("d{i} into {n}: {e}"));
                    }
                }
            }
            if n < n_max {
                match (degeneracy(i, n), degeneracy_via_monad(i, n)) {
                    (Ok(a), Ok(b)) => compare_maps(&mut r, &format!("s{i} onto {n}"), &a, &b),
                    (Err(e), _) | (_, Err(e)) => {
                        r.tick();
                        r.fail(format!("s{i} onto {n}: {e}"));
                    }
                }
            }
        }
    }
    r
}

/// Monad laws on the orientals: `μ ∘ ηT = id = μ ∘ Tη` on `O_n` for
/// `n <= unit_max`, and `μ ∘ Tμ = μ ∘ μT` as maps `O_{n+2} → O_n` for
/// `n <= assoc_max`.
pub fn verify_monad_laws(unit_max: usize, assoc_max: usize) -> CheckReport {
    let mut r = CheckReport::new("monad-laws");
    let mut run = |label: String, lhs: Result<GenMap>, rhs: Result<GenMap>| match (lhs, rhs) {
        (Ok(a), Ok(b)) => compare_maps(&mut r, &label, &a, &b),
        (Err(e), _) | (_, Err(e)) => {
            r.tick();
            r.fail(format!("{label}: {e}"));
        }
    };
    for n in 0..=unit_max {
        let k = n as isize - 1;
        let id = || Ok(GenMap::identity(oriental(n as isize)));
        run(format!("left unit on {n}"), eta(k + 1).then(&mu_at(k)), id());
        run(
            format!("right unit on {n}"),
            t_power(&eta(k), 1).and_then(|a| a.then(&mu_at(k))),
            id(),
        );
    }
    for n in 0..=assoc_max {
        let k = n as isize - 1;
        let lhs = t_power(&mu_at(k), 1).and_then(|a| a.then(&mu_at(k)));
        let rhs = mu_at(k + 1).then(&mu_at(k));
        run(format!("associativity onto {n}"), lhs, rhs);
    }
    r
}

/// `λ(O(φ))` is the simplicial chain map, `<i_0,...,i_m> ↦ <φ(i_0),...,φ(i_m)>`
/// when that is injective and `0` otherwise, for every face and degeneracy
/// between orientals up to `O_{n_max}`.
pub fn verify_chain_maps(n_max: usize) -> CheckReport {
    let mut r = CheckReport::new("chain-map");
    let mut maps = Vec::new();
    for n in 0..=n_max {
        for i in 0..=n {
            if n >= 1 {
                maps.push(MonotoneMap::face(i, n));
            }
            if n < n_max {
                maps.push(MonotoneMap::degeneracy(i, n));
            }
        }
    }
    for phi in maps {
        let (phi, f) = match phi.and_then(|phi| cosimplicial_map(&phi).map(|f| (phi, f))) {
            Ok(pair) => pair,
            Err(e) => {
                r.tick();
                r.fail(e.to_string());
                continue;
            }
        };
        for k in f.source().keys() {
            let s = k.as_simplex().expect("oriental keys are simplices");
            let image: Vec<u16> = s.indices().iter().map(|i| phi.apply(*i)).collect();
            let expected = match Simplex::new(image) {
                Ok(t) => Chain::basis(GenKey::Simplex(t)),
                Err(_) => Chain::zero(k.dim()),
            };
            let got = f.apply(&CellExpr::gen(k.clone())).map(|e| linearize(&e));
            r.check(got.as_ref() == Ok(&expected), || format!("{phi} at {k}: {got:?} vs {expected}"));
        }
    }
    r
}
