use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graph::{DiGraph, NodeIndex};

use super::{face_sum, validate_adc, AugDirComplex};
use crate::cells::{boundary, CellExpr, GenKey, Sign};
use crate::polygraph::{lambda, linearize, Chain, Polygraph};
use crate::report::CheckReport;

/// `e(d_0^ε b) = 1` for every basis element `b`.
pub fn unital_check(k: &AugDirComplex) -> CheckReport {
    let mut r = CheckReport::new("unitality");
    for key in k.keys() {
        let b = Chain::basis(key.clone());
        for sign in Sign::BOTH {
            match k.d_eps_i(sign, 0, &b) {
                Ok(c) => {
                    let e = c.coefficient_sum();
                    r.check(e == 1, || format!("e(d_0{} {key}) = {e}", sign.symbol()));
                }
                Err(err) => {
                    r.tick();
                    r.fail(format!("{key}: {err}"));
                }
            }
        }
    }
    r
}

/// A cycle of the relation generated by `x -> y` whenever `y ∈ supp d⁺x` or
/// `x ∈ supp d⁻y`, if there is one. The first key is repeated at the end.
pub fn find_cycle(k: &AugDirComplex) -> Option<Vec<GenKey>> {
    let keys: Vec<&GenKey> = k.keys().collect();
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(keys.len(), 0);
    let index: HashMap<&GenKey, NodeIndex> = keys.iter().map(|key| (*key, g.add_node(()))).collect();
    for key in &keys {
        if key.dim() == 0 {
            continue;
        }
        let Ok(d) = k.diff_of(key) else { continue };
        let (pos, neg) = d.pos_neg();
        for y in pos.support() {
            if let Some(&iy) = index.get(y) {
                g.add_edge(index[*key], iy, ());
            }
        }
        for x in neg.support() {
            if let Some(&ix) = index.get(x) {
                g.add_edge(ix, index[*key], ());
            }
        }
    }
    if toposort(&g, None).is_ok() {
        return None;
    }
    let scc = tarjan_scc(&g)
        .into_iter()
        .find(|c| c.len() > 1 || g.contains_edge(c[0], c[0]))?;
    let members: HashSet<NodeIndex> = scc.iter().copied().collect();
    let start = scc[0];
    // Breadth-first search inside the component for a path back to `start`.
    let mut pred: HashMap<NodeIndex, NodeIndex> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    let mut last = None;
    'search: while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if v == start {
                last = Some(u);
                break 'search;
            }
            if members.contains(&v) && !pred.contains_key(&v) {
                pred.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![start];
    let mut cur = last?;
    while cur != start {
        path.push(cur);
        cur = pred[&cur];
    }
    path.push(start);
    path.reverse();
    Some(path.into_iter().map(|i| keys[i.index()].clone()).collect())
}

/// Strong loop-freeness: the generated relation is acyclic, so its reflexive
/// transitive closure is a partial order.
pub fn strong_loop_free_check(k: &AugDirComplex) -> CheckReport {
    let mut r = CheckReport::new("strong-loop-freeness");
    r.checked = k.len();
    if let Some(cycle) = find_cycle(k) {
        let path: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        r.fail(format!("cycle {}", path.join(" -> ")));
    }
    r
}

/// The iterated sources (`Neg`) or targets (`Pos`) of a generator, from
/// dimension `dim - 1` down to 0.
fn boundary_tower(s: &Polygraph, key: &GenKey, sign: Sign) -> crate::error::Result<Vec<CellExpr>> {
    let mut out = Vec::with_capacity(key.dim());
    let mut cur = CellExpr::gen(key.clone());
    while cur.dim() > 0 {
        cur = boundary(sign, &cur, s)?;
        out.push(cur.clone());
    }
    out.reverse();
    Ok(out)
}

/// For every generator `x` and `i < dim x`, the linearized `i`-source and
/// `i`-target of `x` have disjoint supports.
pub fn atomic_check(s: &Polygraph) -> CheckReport {
    let mut r = CheckReport::new("atomicity");
    for key in s.keys() {
        if key.dim() == 0 {
            continue;
        }
        let towers = boundary_tower(s, key, Sign::Neg).and_then(|a| Ok((a, boundary_tower(s, key, Sign::Pos)?)));
        let (srcs, tgts) = match towers {
            Ok(t) => t,
            Err(e) => {
                r.tick();
                r.fail(format!("{key}: {e}"));
                continue;
            }
        };
        for (i, (a, b)) in srcs.iter().zip(&tgts).enumerate() {
            let (la, lb) = (linearize(a), linearize(b));
            let common: Option<&GenKey> = la.support().find(|k| lb.coeff(k) != 0);
            r.check(common.is_none(), || {
                format!("{key}: {i}-source and {i}-target share {}", common.unwrap())
            });
        }
    }
    r
}

/// For every generator of a simplicial polygraph, the linearized source is
/// the sum of odd faces and the linearized target the sum of even faces.
pub fn lin_boundary_check(s: &Polygraph) -> CheckReport {
    let mut r = CheckReport::new("lin-boundary");
    for key in s.keys() {
        if key.dim() == 0 {
            continue;
        }
        let Some(simplex) = key.as_simplex() else {
            r.tick();
            r.fail(format!("{key} is not a simplex"));
            continue;
        };
        let (src, tgt) = s.boundary_of(key).expect("positive-dimensional generator");
        for (sign, e, what) in [(Sign::Neg, src, "odd"), (Sign::Pos, tgt, "even")] {
            let got = linearize(e);
            let want = face_sum(simplex, Some(sign));
            r.check(got == want, || {
                format!("[{}{key}] = {got}, {what} faces give {want}", if sign == Sign::Neg { "s" } else { "t" })
            });
        }
    }
    r
}

/// Atomicity of the presentation together with unitality and strong
/// loop-freeness of its linearization.
pub fn strong_steiner_check(s: &Polygraph) -> CheckReport {
    let mut r = CheckReport::new("strong-steiner");
    let k = lambda(s);
    for part in [
        validate_adc(&k),
        atomic_check(s),
        unital_check(&k),
        strong_loop_free_check(&k),
    ] {
        let name = part.name.clone();
        let mut part = part;
        for f in &mut part.failures {
            *f = format!("{name}: {f}");
        }
        r.absorb(part);
    }
    r
}

/// A dimension-preserving correspondence between generators and basis
/// elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyMap(HashMap<GenKey, GenKey>);

impl KeyMap {
    pub fn identity(s: &Polygraph) -> Self {
        KeyMap(s.keys().map(|k| (k.clone(), k.clone())).collect())
    }

    pub fn from_pairs<I: IntoIterator<Item = (GenKey, GenKey)>>(pairs: I) -> Self {
        KeyMap(pairs.into_iter().collect())
    }

    pub fn get(&self, k: &GenKey) -> Option<&GenKey> {
        self.0.get(k)
    }

    /// Exchanges the images of `a` and `b`.
    pub fn swap(&mut self, a: &GenKey, b: &GenKey) {
        if let (Some(x), Some(y)) = (self.0.get(a).cloned(), self.0.get(b).cloned()) {
            self.0.insert(a.clone(), y);
            self.0.insert(b.clone(), x);
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Outcome of [`compare`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The free ω-category on the presentation is isomorphic to the one of
    /// tables of the complex, via the listed generator correspondence.
    Certified { iso: Vec<(GenKey, GenKey)> },
    Failed { condition: String, witness: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified { .. })
    }

    fn fail(condition: &str, witness: impl Into<String>) -> Self {
        Verdict::Failed {
            condition: condition.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Certified { iso } => write!(f, "certified ({} generators)", iso.len()),
            Verdict::Failed { condition, witness } => write!(f, "failed: {condition}: {witness}"),
        }
    }
}

fn first_failure(r: &CheckReport) -> String {
    r.failures
        .first()
        .cloned()
        .or_else(|| r.skipped.clone())
        .unwrap_or_default()
}

/// Certifies that `s` presents the ω-category of tables of `k_ref`: the
/// reference is unital and strongly loop-free, `s` is atomic, and under
/// `keymap` the linearized source and target of each generator are `d⁻` and
/// `d⁺` of its image.
pub fn compare(s: &Polygraph, k_ref: &AugDirComplex, keymap: &KeyMap) -> Verdict {
    // Dimension-preserving bijection.
    let mut image = HashSet::new();
    for key in s.keys() {
        let Some(t) = keymap.get(key) else {
            return Verdict::fail("keymap", format!("{key} has no image"));
        };
        if t.dim() != key.dim() || !k_ref.contains(t) {
            return Verdict::fail("keymap", format!("{key} maps to {t}, not a basis element of dimension {}", key.dim()));
        }
        if !image.insert(t.clone()) {
            return Verdict::fail("keymap", format!("{t} is hit twice"));
        }
    }
    if keymap.len() != s.len() || image.len() != k_ref.len() {
        return Verdict::fail("keymap", format!("{} generators against {} basis elements", s.len(), k_ref.len()));
    }

    let adc = validate_adc(k_ref);
    if !adc.passed() {
        return Verdict::fail("reference complex", first_failure(&adc));
    }
    let unital = unital_check(k_ref);
    if !unital.passed() {
        return Verdict::fail("unitality", first_failure(&unital));
    }
    let loops = strong_loop_free_check(k_ref);
    if !loops.passed() {
        return Verdict::fail("strong loop-freeness", first_failure(&loops));
    }
    let atomic = atomic_check(s);
    if !atomic.passed() {
        return Verdict::fail("atomicity", first_failure(&atomic));
    }

    for key in s.keys() {
        let Some((src, tgt)) = s.boundary_of(key) else {
            continue;
        };
        let t = keymap.get(key).expect("checked above");
        let (pos, neg) = k_ref.diff_of(t).expect("basis element").pos_neg();
        let transport = |c: &Chain| c.map_keys(c.dim(), |k| keymap.get(k).cloned());
        let (ls, lt) = (transport(&linearize(src)), transport(&linearize(tgt)));
        if ls != neg {
            return Verdict::fail("boundary", format!("[s {key}] = {ls} but d⁻{t} = {neg}"));
        }
        if lt != pos {
            return Verdict::fail("boundary", format!("[t {key}] = {lt} but d⁺{t} = {pos}"));
        }
    }

    let iso = s
        .keys()
        .map(|k| (k.clone(), keymap.get(k).expect("checked").clone()))
        .collect();
    Verdict::Certified { iso }
}
