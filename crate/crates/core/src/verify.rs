//! The verification pipeline run by `orientalis verify`.

use std::time::Instant;

use crate::cells::CellExpr;
use crate::cylinders::{chain_homotopy_check, expansion_axioms_check, expansion_cone, validate_cone, Samples};
use crate::error::{Error, Result};
use crate::oriental::{
    oriental, oriental_context, oriental_expansion, verify_chain_maps, verify_monad_laws, verify_routes,
    verify_simplicial_identities,
};
use crate::polygraph::{lambda, structural_check, validate, Polygraph};
use crate::report::{CheckReport, VerifyReport};
use crate::steiner::{atomic_check, compare, lin_boundary_check, simplex_adc, strong_loop_free_check, KeyMap, Verdict};

/// Checks run on the oriental `O_n`, in order.
pub const ORIENTAL_CHECKS: [&str; 12] = [
    "structure",
    "atomicity",
    "loop-freeness",
    "lin-boundary",
    "compare",
    "chain-map",
    "monad-laws",
    "simplicial-identities",
    "monad-routes",
    "cones",
    "expansion-axioms",
    "chain-homotopy",
];

/// Checks run on an imported polygraph, in order.
pub const IMPORT_CHECKS: [&str; 6] = [
    "structure",
    "globularity",
    "atomicity",
    "loop-freeness",
    "lin-boundary",
    "compare",
];

/// Composable pairs for the expansion axioms are drawn from generators up to
/// this dimension.
pub const SAMPLE_DIM: usize = 3;

fn selected<'a>(all: &[&'a str], only: Option<&[String]>) -> Result<Vec<&'a str>> {
    let Some(only) = only else {
        return Ok(all.to_vec());
    };
    for name in only {
        if !all.contains(&name.as_str()) {
            return Err(Error::Structural(format!(
                "unknown check {name:?}; expected one of {}",
                all.join(", ")
            )));
        }
    }
    Ok(all.iter().copied().filter(|c| only.iter().any(|o| o == c)).collect())
}

fn run(out: &mut VerifyReport, name: &str, f: impl FnOnce() -> CheckReport) {
    let start = Instant::now();
    let mut report = f();
    report.name = name.to_string();
    out.push(report, start.elapsed());
}

fn verdict_report(v: Verdict) -> CheckReport {
    let mut r = CheckReport::new("compare");
    match v {
        Verdict::Certified { iso } => r.checked = iso.len(),
        Verdict::Failed { condition, witness } => {
            r.tick();
            r.fail(format!("{condition}: {witness}"));
        }
    }
    r
}

/// Runs the selected checks (all of [`ORIENTAL_CHECKS`] by default) on `O_n`.
pub fn verify_oriental(n: usize, only: Option<&[String]>) -> Result<VerifyReport> {
    let checks = selected(&ORIENTAL_CHECKS, only)?;
    let mut out = VerifyReport::default();
    let s = oriental(n as isize);
    for name in checks {
        match name {
            "structure" => run(&mut out, name, || structural_check(&s)),
            "atomicity" => run(&mut out, name, || atomic_check(&s)),
            "loop-freeness" => run(&mut out, name, || strong_loop_free_check(&lambda(&s))),
            "lin-boundary" => run(&mut out, name, || lin_boundary_check(&s)),
            "compare" => run(&mut out, name, || {
                verdict_report(compare(&s, &simplex_adc(n as isize), &KeyMap::identity(&s)))
            }),
            "chain-map" => run(&mut out, name, || verify_chain_maps(n)),
            "monad-laws" => run(&mut out, name, || verify_monad_laws(n, n.saturating_sub(1))),
            "simplicial-identities" => run(&mut out, name, || verify_simplicial_identities(n)),
            "monad-routes" => run(&mut out, name, || verify_routes(n)),
            "cones" => run(&mut out, name, || cones_check(n)),
            "expansion-axioms" => run(&mut out, name, || {
                let ex = oriental_expansion(n);
                let ctx = oriental_context(n);
                match Samples::generators(ex.result(), &ctx, SAMPLE_DIM.min(n)) {
                    Ok(samples) => expansion_axioms_check(&ex, &samples, &ctx),
                    Err(e) => CheckReport::skipped(name, e.to_string()),
                }
            }),
            "chain-homotopy" => run(&mut out, name, || chain_homotopy_check(&oriental_expansion(n))),
            _ => unreachable!("names come from ORIENTAL_CHECKS"),
        }
    }
    Ok(out)
}

/// `expansion_cone(g)` satisfies the cone constraints for every generator
/// `g` of `O_n`.
pub fn cones_check(n: usize) -> CheckReport {
    let ex = oriental_expansion(n);
    let ctx = oriental_context(n);
    let mut r = CheckReport::new("cones");
    for k in ex.result().keys() {
        let x = CellExpr::gen(k.clone());
        match expansion_cone(&x, &ex) {
            Ok(cone) => {
                let sub = validate_cone(&cone, ex.result(), &ctx);
                r.checked += sub.checked;
                r.failures.extend(sub.failures.into_iter().map(|w| format!("cone on {k}: {w}")));
                r.check(cone.base() == &x, || format!("cone on {k} has basis {}", cone.base()));
            }
            Err(e) => {
                r.tick();
                r.fail(format!("cone on {k}: {e}"));
            }
        }
    }
    r
}

/// Runs the selected checks (all of [`IMPORT_CHECKS`] by default) on an
/// arbitrary polygraph. Simplicial checks are skipped unless every key is a
/// simplex.
pub fn verify_polygraph(s: &Polygraph, only: Option<&[String]>) -> Result<VerifyReport> {
    let checks = selected(&IMPORT_CHECKS, only)?;
    let mut out = VerifyReport::default();
    let structure = structural_check(s);
    let well_formed = structure.passed();
    let malformed = |name: &str| CheckReport::skipped(name, "malformed boundaries");
    for name in checks {
        match name {
            "structure" => run(&mut out, name, || structure.clone()),
            "globularity" => run(&mut out, name, || {
                let v = validate(s);
                let mut r = v.linear_globularity;
                if v.cell_globularity.skipped.is_none() {
                    r.absorb(v.cell_globularity);
                }
                if !well_formed {
                    return malformed(name);
                }
                r
            }),
            "atomicity" if !well_formed => run(&mut out, name, || malformed(name)),
            "atomicity" => run(&mut out, name, || atomic_check(s)),
            "loop-freeness" if !well_formed => run(&mut out, name, || malformed(name)),
            "loop-freeness" => run(&mut out, name, || strong_loop_free_check(&lambda(s))),
            "lin-boundary" | "compare" if !s.is_simplicial() => {
                run(&mut out, name, || CheckReport::skipped(name, "not a simplicial polygraph"))
            }
            "lin-boundary" => run(&mut out, name, || lin_boundary_check(s)),
            "compare" if !well_formed => run(&mut out, name, || malformed(name)),
            "compare" => run(&mut out, name, || {
                let n = s.dim().map_or(-1, |d| d as isize);
                verdict_report(compare(s, &simplex_adc(n), &KeyMap::identity(s)))
            }),
            _ => unreachable!("names come from IMPORT_CHECKS"),
        }
    }
    Ok(out)
}
