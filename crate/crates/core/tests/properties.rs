mod common;

use orientalis::cells::{CellExpr, CellKind};
use orientalis::oriental::{oriental, oriental_context, simp, simp_dedup};
use proptest::prelude::*;

fn has_composite(cells: &[CellExpr]) -> bool {
    cells.iter().any(|c| matches!(c.kind(), CellKind::Comp { .. }))
}

#[test]
fn builder_reaches_composites_and_units() {
    let steps: Vec<common::Step> = (0..40).map(|i| (i % 13, (i % 4) as u8, (i * 7) % 11)).collect();
    for n in 1..=3 {
        let cells = common::build_cells(n, &steps);
        assert!(has_composite(&cells), "no composite in O_{n}");
        assert!(cells.iter().any(|c| c.is_unit()), "no unit in O_{n}");
        let ctx = oriental_context(n);
        for c in &cells {
            ctx.eval(c).unwrap();
        }
    }
}

#[test]
fn simp_agrees_with_closed_form_exhaustively() {
    fn sequences(n: u16, len: usize, start: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            sequences(n, len, i, cur, out);
            cur.pop();
        }
    }
    for n in 0..=4usize {
        let ctx = oriental_context(n);
        for len in 1..=n + 2 {
            let mut seqs = Vec::new();
            sequences(n as u16, len, 0, &mut Vec::new(), &mut seqs);
            for seq in seqs {
                let a = simp(&seq, n).unwrap();
                let b = simp_dedup(&seq).unwrap();
                assert!(ctx.cell_eq(&a, &b).unwrap(), "{seq:?} in O_{n}: {a} vs {b}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn tables_closed_under_operations(n in 0..=3usize, steps in common::steps(24)) {
        common::table_closure(n, &common::build_cells(n, &steps))?;
    }

    #[test]
    fn eval_commutes_with_boundaries(n in 0..=3usize, steps in common::steps(24)) {
        common::eval_naturality(n, &common::build_cells(n, &steps))?;
    }

    #[test]
    fn parser_round_trips(n in 0..=3usize, steps in common::steps(24)) {
        common::parse_round_trip(n, &common::build_cells(n, &steps))?;
    }

    #[test]
    fn linearize_is_additive(n in 0..=3usize, steps in common::steps(24)) {
        common::linearize_additive(&common::build_cells(n, &steps))?;
    }

    #[test]
    fn chevron_of_chevron_is_a_unit(n in 1..=3usize, steps in common::steps(16)) {
        common::chevron_idempotent(n, &common::build_cells(n, &steps))?;
    }

    #[test]
    fn pos_neg_parts_are_disjoint(n in 0..=4usize, coeffs in prop::collection::vec(-6i64..=6, 0..32)) {
        for m in 0..=n {
            common::pos_neg_split(&common::chain_from(n, m, &coeffs))?;
        }
    }

    #[test]
    fn generator_counts(n in 0..=7usize) {
        let s = oriental(n as isize);
        prop_assert_eq!(s.len(), (1usize << (n + 1)) - 1);
    }
}
