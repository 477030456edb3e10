use std::fmt;

use super::{lambda, Polygraph};
use crate::cells::{boundary, CellExpr, Sign};
use crate::report::CheckReport;
use crate::steiner::{self, SteinerContext};

/// Result of [`validate`]. The cell-level check only runs on strong Steiner
/// presentations and is skipped otherwise.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub dangling: CheckReport,
    pub dimension: CheckReport,
    pub linear_globularity: CheckReport,
    pub cell_globularity: CheckReport,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.dangling.passed()
            && self.dimension.passed()
            && self.linear_globularity.passed()
            && (self.cell_globularity.passed() || self.cell_globularity.skipped.is_some())
    }

    pub fn checks(&self) -> [&CheckReport; 4] {
        [
            &self.dangling,
            &self.dimension,
            &self.linear_globularity,
            &self.cell_globularity,
        ]
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.checks() {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn validate(s: &Polygraph) -> ValidationReport {
    let (dangling, dimension) = structural_parts(s);
    if !(dangling.passed() && dimension.passed()) {
        return ValidationReport {
            dangling,
            dimension,
            linear_globularity: CheckReport::skipped("linear-globularity", "malformed boundaries"),
            cell_globularity: CheckReport::skipped("cell-globularity", "malformed boundaries"),
        };
    }

    let mut linear_globularity = steiner::validate_adc(&lambda(s));
    linear_globularity.name = "linear-globularity".into();

    let cell_globularity = if !linear_globularity.passed() {
        CheckReport::skipped("cell-globularity", "linear globularity fails")
    } else {
        match SteinerContext::new(s) {
            Ok(ctx) => cell_check(s, &ctx),
            Err(e) => CheckReport::skipped("cell-globularity", e.to_string()),
        }
    };

    ValidationReport {
        dangling,
        dimension,
        linear_globularity,
        cell_globularity,
    }
}

fn cell_check(s: &Polygraph, ctx: &SteinerContext) -> CheckReport {
    let mut r = CheckReport::new("cell-globularity");
    for key in s.keys() {
        let Some((src, tgt)) = s.boundary_of(key) else {
            continue;
        };
        for (role, e) in [("source", src), ("target", tgt)] {
            if let Err(err) = ctx.eval(e) {
                r.tick();
                r.fail(format!("{role} of {key}: {err}"));
            }
        }
        if key.dim() < 2 {
            continue;
        }
        for sign in Sign::BOTH {
            let side = |e: &CellExpr| boundary(sign, e, s);
            let ok = match (side(src), side(tgt)) {
                (Ok(a), Ok(b)) => ctx.cell_eq(&a, &b).unwrap_or(false),
                _ => false,
            };
            r.check(ok, || {
                format!("{key}: {}(source) differs from {}(target)", sign.symbol(), sign.symbol())
            });
        }
    }
    r
}

/// Dangling references and boundary dimensions only: the cheap part of
/// [`validate`].
pub fn structural_check(s: &Polygraph) -> CheckReport {
    let (mut dangling, dimension) = structural_parts(s);
    dangling.name = "structure".into();
    dangling.absorb(dimension);
    dangling
}

fn structural_parts(s: &Polygraph) -> (CheckReport, CheckReport) {
    let mut dangling = CheckReport::new("dangling-keys");
    let mut dimension = CheckReport::new("dimensions");
    for key in s.keys() {
        let Some((src, tgt)) = s.boundary_of(key) else {
            continue;
        };
        for (role, e) in [("source", src), ("target", tgt)] {
            for k in e.generators() {
                dangling.check(s.contains(&k) && k.dim() < key.dim(), || {
                    format!("{role} of {key} mentions {k}")
                });
            }
            match e.checked_dim() {
                Ok(d) => dimension.check(d + 1 == key.dim(), || {
                    format!("{role} of {key} has dimension {d}")
                }),
                Err(err) => {
                    dimension.tick();
                    dimension.fail(format!("{role} of {key}: {err}"));
                }
            }
        }
    }
    (dangling, dimension)
}
