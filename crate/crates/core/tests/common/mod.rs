#![allow(dead_code)]

use orientalis::cells::{boundary, compose, parse, parse_in, print, print_unicode, CellExpr, GenKey, Sign};
use orientalis::oriental::{oriental, oriental_context, oriental_expansion};
use orientalis::polygraph::{linearize, Chain};
use orientalis::steiner::{pos_neg, CellTable};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const POOL_CAP: usize = 48;

/// A step of the random cell builder: an index into the pool, an operation
/// selector and a parameter.
pub type Step = (usize, u8, usize);

pub fn steps(len: usize) -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec((0..POOL_CAP, 0..4u8, 0..POOL_CAP), 1..len)
}

pub fn generators(n: usize) -> Vec<CellExpr> {
    oriental(n as isize).keys().map(|k| CellExpr::gen(k.clone())).collect()
}

/// Grows a pool of well-formed cells of `O_n` from its generators by units,
/// boundaries and composites whose operands agree by tables.
pub fn build_cells(n: usize, steps: &[Step]) -> Vec<CellExpr> {
    let s = oriental(n as isize);
    let ctx = oriental_context(n);
    let mut pool = generators(n);
    for &(i, op, param) in steps {
        if pool.len() >= POOL_CAP {
            break;
        }
        let a = pool[i % pool.len()].clone();
        let next = match op {
            0 if a.dim() <= n => Some(CellExpr::unit(a)),
            1 if a.dim() > 0 => {
                let sign = if param % 2 == 0 { Sign::Neg } else { Sign::Pos };
                Some(boundary(sign, &a, &s).expect("boundary of a pool cell"))
            }
            _ if a.dim() > 0 => {
                let len = pool.len();
                (0..len).find_map(|k| {
                    let b = &pool[(param + k) % len];
                    let lo = a.dim().min(b.dim());
                    if lo == 0 {
                        return None;
                    }
                    let p = param % lo;
                    let (first, second) = if op == 2 { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
                    let c = compose(p, first, second).ok()?;
                    ctx.eval(&c).ok().map(|_| c)
                })
            }
            _ => None,
        };
        if let Some(c) = next {
            pool.push(c);
        }
    }
    pool
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

/// Every table obtained from the pool by units, boundaries and composites
/// satisfies the table conditions.
pub fn table_closure(n: usize, cells: &[CellExpr]) -> Result<(), TestCaseError> {
    let ctx = oriental_context(n);
    let k = ctx.complex();
    let tables: Vec<CellTable> = cells
        .iter()
        .map(|c| ctx.eval(c).map_err(|e| fail(format!("{}: {e}", print(c)))))
        .collect::<Result<_, _>>()?;
    let ok = |t: &CellTable, what: &dyn Fn() -> String| t.check_conditions(k).map_err(|e| fail(format!("{}: {e}", what())));
    for (c, t) in cells.iter().zip(&tables) {
        ok(t, &|| print(c))?;
        ok(&t.unit(), &|| format!("unit of {}", print(c)))?;
        for j in 0..=t.dim() {
            for sign in Sign::BOTH {
                let b = t.boundary_at(sign, j).map_err(|e| fail(e.to_string()))?;
                ok(&b, &|| format!("boundary {j} of {}", print(c)))?;
            }
        }
    }
    for (a, ta) in cells.iter().zip(&tables) {
        for (b, tb) in cells.iter().zip(&tables) {
            if ta.dim() != tb.dim() {
                continue;
            }
            for j in 0..ta.dim() {
                if let Ok(t) = CellTable::compose(j, ta, tb) {
                    ok(&t, &|| format!("{} *{j} {}", print(b), print(a)))?;
                }
            }
        }
    }
    Ok(())
}

/// Evaluation commutes with boundaries, units and composition.
pub fn eval_naturality(n: usize, cells: &[CellExpr]) -> Result<(), TestCaseError> {
    let s = oriental(n as isize);
    let ctx = oriental_context(n);
    let ev = |c: &CellExpr| ctx.eval(c).map_err(|e| fail(format!("{}: {e}", print(c))));
    for c in cells {
        let t = ev(c)?;
        prop_assert_eq!(ev(&CellExpr::unit(c.clone()))?, t.unit(), "unit of {}", print(c));
        if c.dim() == 0 {
            continue;
        }
        let src = boundary(Sign::Neg, c, &s).map_err(|e| fail(e.to_string()))?;
        let tgt = boundary(Sign::Pos, c, &s).map_err(|e| fail(e.to_string()))?;
        prop_assert_eq!(ev(&src)?, t.source().unwrap(), "source of {}", print(c));
        prop_assert_eq!(ev(&tgt)?, t.target().unwrap(), "target of {}", print(c));
        if let orientalis::cells::CellKind::Comp { p, first, second } = c.kind() {
            let (tf, ts) = (ev(first)?, ev(second)?);
            let lift = |t: CellTable, d: usize| (t.dim()..d).fold(t, |t, _| t.unit());
            let d = tf.dim().max(ts.dim());
            let expected = CellTable::compose(*p, &lift(tf, d), &lift(ts, d)).map_err(|e| fail(e.to_string()))?;
            prop_assert_eq!(t, expected, "composite {}", print(c));
        }
    }
    Ok(())
}

/// A chain of dimension `dim` over `O_n` from raw coefficients.
pub fn chain_from(n: usize, dim: usize, coeffs: &[i64]) -> Chain {
    let keys = oriental(n as isize).generators(dim).to_vec();
    Chain::from_terms(dim, keys.into_iter().zip(coeffs.iter().copied()))
}

/// `z = z⁺ - z⁻` with nonnegative parts of disjoint support.
pub fn pos_neg_split(z: &Chain) -> Result<(), TestCaseError> {
    let (p, q) = pos_neg(z);
    prop_assert!(p.is_nonneg() && q.is_nonneg(), "{} splits into {} and {}", z, p, q);
    let support: Vec<&GenKey> = p.support().collect();
    prop_assert!(q.support().all(|k| !support.contains(&k)), "{} and {} overlap", p, q);
    prop_assert_eq!(&(&p - &q), z);
    prop_assert_eq!(p.dim(), z.dim());
    Ok(())
}

/// Printing then parsing gives back the expression, in both notations.
pub fn parse_round_trip(n: usize, cells: &[CellExpr]) -> Result<(), TestCaseError> {
    let s = oriental(n as isize);
    for c in cells {
        let ascii = print(c);
        let back = parse(&ascii).map_err(|e| fail(format!("{ascii}: {e}")))?;
        prop_assert_eq!(&back, c, "{}", ascii);
        let uni = print_unicode(c);
        let back = parse_in(&uni, &s).map_err(|e| fail(format!("{uni}: {e}")))?;
        prop_assert_eq!(&back, c, "{}", uni);
        prop_assert_eq!(print(&back), ascii);
    }
    Ok(())
}

/// Linearization sends units to zero and same-dimensional composites to sums.
pub fn linearize_additive(cells: &[CellExpr]) -> Result<(), TestCaseError> {
    for c in cells {
        prop_assert!(linearize(&CellExpr::unit(c.clone())).is_zero(), "unit of {}", print(c));
        if let orientalis::cells::CellKind::Comp { first, second, .. } = c.kind() {
            let expected = &linearize(first) + &linearize(second);
            prop_assert_eq!(linearize(c), expected, "{}", print(c));
        }
    }
    Ok(())
}

/// `ξ_{ξ_e} = 1_{ξ_e}` by tables.
pub fn chevron_idempotent(n: usize, cells: &[CellExpr]) -> Result<(), TestCaseError> {
    let ex = oriental_expansion(n);
    let ctx = oriental_context(n);
    for c in cells {
        let x = ex.chevron(c).map_err(|e| fail(e.to_string()))?;
        let xx = ex.chevron(&x).map_err(|e| fail(e.to_string()))?;
        let unit = CellExpr::unit(x.clone());
        prop_assert!(ctx.cell_eq(&xx, &unit).unwrap(), "at {}", print(c));
    }
    Ok(())
}
