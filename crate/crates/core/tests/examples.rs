use std::collections::HashMap;

use orientalis::cells::{
    boundary, compose, iterated_boundary, parse, print_unicode, CellExpr, CellKind, GenKey, Sign,
};
use orientalis::expansion::{expand, t_on_map, GenMap};
use orientalis::oriental::{
    cosimplicial_map, degeneracy, degeneracy_via_monad, eta, face, face_via_monad, mu_at, oriental, oriental_context,
    oriental_expansion, simp, MonotoneMap,
};
use orientalis::polygraph::{lambda, linearize, validate, Chain, Polygraph};
use orientalis::steiner::{
    atomic_check, compare, pos_neg, simplex_adc, strong_loop_free_check, unital_check, validate_adc, AugDirComplex,
    CellTable, KeyMap, Verdict,
};

fn c(text: &str) -> CellExpr {
    parse(text).unwrap()
}

fn k(idx: &[u16]) -> GenKey {
    GenKey::simplex(idx.iter().copied()).unwrap()
}

fn chain(dim: usize, terms: &[(&[u16], i64)]) -> Chain {
    Chain::from_terms(dim, terms.iter().map(|(i, v)| (k(i), *v)))
}

#[test]
fn dimensions() {
    assert_eq!(c("<0,1>").dim(), 1);
    assert_eq!(c("1_<0>").dim(), 1);
    assert_eq!(c("<1,2>*0<0,1>").dim(), 1);
}

#[test]
fn boundaries() {
    let o2 = oriental(2);
    assert_eq!(boundary(Sign::Neg, &c("<0,1,2>"), &o2).unwrap(), c("<0,2>"));
    assert_eq!(boundary(Sign::Pos, &c("1_<0>"), &oriental(0)).unwrap(), c("<0>"));
    let comp = compose(0, c("<0,1>"), c("<1,2>")).unwrap();
    let src = boundary(Sign::Neg, &comp, &o2).unwrap();
    assert_eq!(linearize(&src), chain(0, &[(&[0], 1)]));
    assert_eq!(iterated_boundary(Sign::Pos, 0, &c("<0,1,2>"), &o2).unwrap(), c("<2>"));
    assert_eq!(iterated_boundary(Sign::Neg, 2, &c("<0,1,2>"), &o2).unwrap(), c("<0,1,2>"));
    assert_eq!(iterated_boundary(Sign::Neg, 0, &c("<0,3>"), &oriental(3)).unwrap(), c("<0>"));
}

#[test]
fn composition_lifts_the_lower_operand() {
    let e = compose(0, c("<0,1>"), c("<1,2>")).unwrap();
    assert!(matches!(e.kind(), CellKind::Comp { p: 0, first, second } if *first == c("<0,1>") && *second == c("<1,2>")));
    let e = compose(0, c("<0,1>"), c("<1,2,3>")).unwrap();
    assert!(matches!(e.kind(), CellKind::Comp { p: 0, first, .. } if *first == CellExpr::unit(c("<0,1>"))));
    assert!(compose(1, c("<0,1>"), c("<1,2>")).is_err());
}

#[test]
fn notation() {
    assert_eq!(c("⟨1,2⟩*0⟨0,1⟩"), compose(0, c("<0,1>"), c("<1,2>")).unwrap());
    assert_eq!(c("1_(⟨0⟩)"), CellExpr::unit(c("<0>")));
    let o3 = oriental(3);
    let t = boundary(Sign::Pos, &c("<0,1,2,3>"), &o3).unwrap();
    assert_eq!(print_unicode(&t), "⟨1,2,3⟩*0⟨0,1⟩*1⟨0,1,3⟩");
}

#[test]
fn linearization() {
    assert_eq!(linearize(&c("<0,1>")), chain(1, &[(&[0, 1], 1)]));
    let u = linearize(&c("1_<0>"));
    assert!(u.is_zero() && u.dim() == 1);
    let t = boundary(Sign::Pos, &c("<0,1,2,3>"), &oriental(3)).unwrap();
    assert_eq!(linearize(&t), chain(2, &[(&[1, 2, 3], 1), (&[0, 1, 3], 1)]));
}

#[test]
fn linearized_orientals() {
    let l1 = lambda(&oriental(1));
    assert_eq!(l1.diff_of(&k(&[0, 1])).unwrap(), chain(0, &[(&[1], 1), (&[0], -1)]));
    let l0 = lambda(&oriental(0));
    assert_eq!(l0.len(), 1);
    assert_eq!(l0.e(&chain(0, &[(&[0], 1)])).unwrap(), 1);
    assert!(lambda(&oriental(3)) == simplex_adc(3));
}

fn two_cell_polygraph(tgt: &str) -> Polygraph {
    let mut s = Polygraph::new();
    for x in ["x", "y"] {
        s.push_generator(GenKey::named(x, 0), None).unwrap();
    }
    for f in ["f", "g"] {
        s.push_generator(GenKey::named(f, 1), Some((c_in("x", &s), c_in("y", &s)))).unwrap();
    }
    let tgt = orientalis::cells::parse_in(tgt, &s).unwrap();
    s.push_generator(GenKey::named("a", 2), Some((c_in("f", &s), tgt))).unwrap();
    s
}

fn c_in(text: &str, s: &Polygraph) -> CellExpr {
    orientalis::cells::parse_in(text, s).unwrap()
}

#[test]
fn validation() {
    assert!(validate(&oriental(4)).passed());
    let mut s = Polygraph::new();
    s.push_generator(GenKey::named("x", 0), None).unwrap();
    s.push_generator(GenKey::named("a", 2), Some((c_in("1_x", &s), c_in("1_x", &s)))).unwrap();
    assert!(s.push_generator(GenKey::named("b", 2), Some((c_in("a", &s), c_in("a", &s)))).is_err());
    assert!(validate(&two_cell_polygraph("g")).passed());
    let bad = two_cell_polygraph("1_x");
    let r = validate(&bad);
    assert!(!r.passed());
    assert!(!r.linear_globularity.passed());
}

#[test]
fn expansion_of_small_polygraphs() {
    let o0 = expand(Polygraph::new()).unwrap();
    assert_eq!(o0.result().len(), 1);
    let o1 = oriental_expansion(1);
    let o2 = expand(o1.result().clone()).unwrap();
    assert_eq!(o2.result().len(), 2 * o1.result().len() + 1);
    assert_eq!(o2.result().as_ref(), oriental(2).as_ref());
    let r = o2.r_key(&k(&[0, 1])).unwrap();
    assert_eq!(r, &k(&[0, 1, 2]));
    assert_eq!(o2.result().tgt(r).unwrap(), &c("<1,2>*0<0,1>"));
    let named = two_cell_polygraph("g");
    let ex = expand(named.clone()).unwrap();
    assert_eq!(ex.result().len(), 2 * named.len() + 1);
    assert!(validate(ex.result()).passed());
    assert!(atomic_check(ex.result()).passed());
}

#[test]
fn chevrons() {
    let ex2 = oriental_expansion(2);
    assert_eq!(ex2.chevron(&c("<1,2>")).unwrap(), c("<0,1,2>"));
    let u = ex2.chevron(&c("1_<1,2>")).unwrap();
    assert_eq!(u, CellExpr::unit(c("<0,1,2>")));
    let ex1 = oriental_expansion(1);
    let xx = ex1.chevron(&ex1.chevron(&c("<1>")).unwrap()).unwrap();
    assert!(oriental_context(1).cell_eq(&xx, &c("1_<0,1>")).unwrap());
}

#[test]
fn monad_unit_and_multiplication() {
    let e1 = eta(1);
    assert_eq!(e1.image(&k(&[0, 1])).unwrap(), &c("<1,2>"));
    let s = oriental(1);
    for g in s.keys().filter(|g| g.dim() > 0) {
        let (src, _) = s.boundary_of(g).unwrap();
        let lhs = boundary(Sign::Neg, e1.image(g).unwrap(), &oriental(2)).unwrap();
        assert_eq!(lhs, e1.apply(src).unwrap());
    }
    let mu = mu_at(1);
    assert_eq!(mu.image(&k(&[0, 1, 2, 3])).unwrap(), &c("1_<0,1,2>"));
    assert_eq!(mu.image(&k(&[2, 3])).unwrap(), &c("<1,2>"));
    assert_eq!(mu.image(&k(&[0, 1])).unwrap(), &c("1_<0>"));
    let t = boundary(Sign::Pos, &c("<0,1,2,3>"), &oriental(3)).unwrap();
    assert_eq!(linearize(&mu.apply(&t).unwrap()), chain(2, &[(&[0, 1, 2], 1)]));
    assert_eq!(mu.apply(&c("1_<2,3>")).unwrap(), c("1_<1,2>"));
    assert_eq!(eta(2).apply(&c("<1,2>*0<0,1>")).unwrap(), c("<2,3>*0<1,2>"));
}

#[test]
fn functor_on_maps() {
    let ctx = oriental_context(3);
    let id2 = GenMap::identity(oriental(2));
    let t = t_on_map(&id2, &oriental_expansion(3), &oriental_expansion(3)).unwrap();
    assert!(t.eq_by_tables(&GenMap::identity(oriental(3)), &ctx, "T id").passed());
    let d0 = face(0, 1).unwrap();
    assert_eq!(d0.image(&k(&[0])).unwrap(), &c("<1>"));
    let td = t_on_map(&d0, &oriental_expansion(1), &oriental_expansion(2)).unwrap();
    assert_eq!(td.image(&k(&[1])).unwrap(), &c("<2>"));
    assert_eq!(td.image(&k(&[0])).unwrap(), &c("<0>"));
    assert_eq!(td.image(&k(&[0, 1])).unwrap(), &c("<0,2>"));
    let lhs = eta(0).then(&td).unwrap();
    let rhs = d0.then(&eta(1)).unwrap();
    assert!(lhs.eq_by_tables(&rhs, &oriental_context(2), "naturality").passed());
}

#[test]
fn nondecreasing_simplices() {
    assert_eq!(simp(&[0, 0, 2], 2).unwrap(), c("1_<0,2>"));
    assert_eq!(simp(&[0, 1, 2], 2).unwrap(), c("<0,1,2>"));
    assert!(oriental_context(2).cell_eq(&simp(&[0, 1, 1], 2).unwrap(), &c("1_<0,1>")).unwrap());
}

#[test]
fn cosimplicial_maps() {
    let sigma = cosimplicial_map(&MonotoneMap::new(vec![0, 0, 1, 2], 2).unwrap()).unwrap();
    let mu = mu_at(1);
    for g in oriental(3).keys() {
        assert_eq!(sigma.image(g), mu.image(g), "at {g}");
    }
    let id = cosimplicial_map(&MonotoneMap::identity(3)).unwrap();
    assert!(id.eq_by_tables(&GenMap::identity(oriental(3)), &oriental_context(3), "id").passed());
    let maps = |a: usize, b: usize| -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let total = (b + 1).pow(a as u32 + 1);
        for code in 0..total {
            let v: Vec<u16> = (0..=a).map(|i| (code / (b + 1).pow(i as u32) % (b + 1)) as u16).collect();
            if let Ok(m) = MonotoneMap::new(v, b) {
                out.push(m);
            }
        }
        out
    };
    for a in 0..=2 {
        for b in 0..=3 {
            for cc in 0..=3 {
                for phi in maps(a, b) {
                    for psi in maps(b, cc) {
                        let direct = cosimplicial_map(&phi.then(&psi).unwrap()).unwrap();
                        let composed = cosimplicial_map(&phi).unwrap().then(&cosimplicial_map(&psi).unwrap()).unwrap();
                        let r = direct.eq_by_tables(&composed, &oriental_context(cc), "functor");
                        assert!(r.passed(), "{phi} then {psi}: {r}");
                    }
                }
            }
        }
    }
}

#[test]
fn faces_and_degeneracies() {
    let s0 = degeneracy(0, 0).unwrap();
    assert_eq!(s0.image(&k(&[0, 1])).unwrap(), &c("1_<0>"));
    for n in 1..=4 {
        for i in 0..=n {
            let a = face(i, n).unwrap();
            let b = face_via_monad(i, n).unwrap();
            assert!(a.eq_by_tables(&b, &oriental_context(n), "face").passed(), "δ_{i} into [{n}]");
        }
        for i in 0..n {
            let a = degeneracy(i, n - 1).unwrap();
            let b = degeneracy_via_monad(i, n - 1).unwrap();
            assert!(a.eq_by_tables(&b, &oriental_context(n - 1), "degeneracy").passed(), "σ_{i} onto [{}]", n - 1);
        }
    }
}

#[test]
fn positive_and_negative_parts() {
    let z = chain(0, &[(&[0], 2), (&[1], -1)]);
    assert_eq!(pos_neg(&z), (chain(0, &[(&[0], 2)]), chain(0, &[(&[1], 1)])));
    assert_eq!(pos_neg(&Chain::zero(1)), (Chain::zero(1), Chain::zero(1)));
    let k2 = simplex_adc(2);
    let d = k2.diff_of(&k(&[0, 1, 2])).unwrap();
    assert_eq!(pos_neg(&d), (chain(1, &[(&[1, 2], 1), (&[0, 1], 1)]), chain(1, &[(&[0, 2], 1)])));
    let b = chain(2, &[(&[0, 1, 2], 1)]);
    assert_eq!(k2.d_eps(Sign::Neg, &b).unwrap(), chain(1, &[(&[0, 2], 1)]));
    assert_eq!(k2.d_eps_i(Sign::Pos, 0, &b).unwrap(), chain(0, &[(&[2], 1)]));
    let e = chain(1, &[(&[0, 1], 1)]);
    assert_eq!(k2.d_eps(Sign::Neg, &e).unwrap(), chain(0, &[(&[0], 1)]));
    assert_eq!(k2.d_eps(Sign::Pos, &e).unwrap(), chain(0, &[(&[1], 1)]));
}

#[test]
fn atoms_and_tables() {
    let k2 = simplex_adc(2);
    let a0 = k2.atom(&k(&[0])).unwrap();
    assert_eq!(a0.rows(), &[(chain(0, &[(&[0], 1)]), chain(0, &[(&[0], 1)]))]);
    let a = k2.atom(&k(&[0, 1, 2])).unwrap();
    let t1 = chain(1, &[(&[0, 1], 1), (&[1, 2], 1)]);
    assert_eq!(
        a.rows(),
        &[
            (chain(0, &[(&[0], 1)]), chain(0, &[(&[2], 1)])),
            (chain(1, &[(&[0, 2], 1)]), t1.clone()),
            (chain(2, &[(&[0, 1, 2], 1)]), chain(2, &[(&[0, 1, 2], 1)])),
        ]
    );
    assert_eq!(a.unit().source().unwrap(), a);
    let comp = CellTable::compose(0, &k2.atom(&k(&[0, 1])).unwrap(), &k2.atom(&k(&[1, 2])).unwrap()).unwrap();
    assert_eq!(
        comp.rows(),
        &[(chain(0, &[(&[0], 1)]), chain(0, &[(&[2], 1)])), (t1.clone(), t1)]
    );
    let u = a.target().unwrap().unit();
    assert_eq!(CellTable::compose(1, &a, &u).unwrap(), a);
    for n in 0..=6 {
        assert!(unital_check(&lambda(&oriental(n))).passed());
        assert!(strong_loop_free_check(&simplex_adc(n)).passed());
    }
}

#[test]
fn evaluation() {
    let ctx = oriental_context(2);
    let k2 = simplex_adc(2);
    let t = boundary(Sign::Pos, &c("<0,1,2>"), &oriental(2)).unwrap();
    let expected = CellTable::compose(0, &k2.atom(&k(&[0, 1])).unwrap(), &k2.atom(&k(&[1, 2])).unwrap()).unwrap();
    assert_eq!(ctx.eval(&t).unwrap(), expected);
    for n in 1..=5 {
        let s = oriental(n);
        let ctx = oriental_context(n as usize);
        for g in s.keys().filter(|g| g.dim() > 0) {
            let x = CellExpr::gen(g.clone());
            let src = boundary(Sign::Neg, &x, &s).unwrap();
            assert_eq!(ctx.eval(&src).unwrap(), ctx.eval(&x).unwrap().source().unwrap());
        }
    }
    let bad = CellExpr::comp(0, c("<1,2>"), c("<0,1>")).unwrap();
    assert!(ctx.eval(&bad).is_err());
}

#[test]
fn cell_equality() {
    let ctx = oriental_context(2);
    assert!(ctx.cell_eq(&c("<0,1,2>"), &c("(1_(<1,2>*0<0,1>))*1<0,1,2>*1 1_<0,2>")).unwrap());
    assert!(ctx.cell_eq(&c("<1,2>*0<0,1>"), &c("1_<2>*0<1,2>*0<0,1>")).unwrap());
    assert!(!ctx.cell_eq(&c("<0,1>"), &c("<0,2>")).unwrap());
    let ctx3 = oriental_context(3);
    let (x, y) = (c("<0,1,2>"), c("1_<0,2>"));
    let (z, w) = (c("<2,3>"), c("<2,3>"));
    let (z, w) = (CellExpr::unit(z), CellExpr::unit(w));
    let lhs = compose(1, compose(0, y.clone(), w.clone()).unwrap(), compose(0, x.clone(), z.clone()).unwrap()).unwrap();
    let rhs = compose(0, compose(1, y, x).unwrap(), compose(1, w, z).unwrap()).unwrap();
    assert!(ctx3.cell_eq(&lhs, &rhs).unwrap());
}

#[test]
fn comparison_verdicts() {
    for n in 0..=4 {
        let s = oriental(n);
        assert!(compare(&s, &simplex_adc(n), &KeyMap::identity(&s)).is_certified());
        assert!(validate_adc(&lambda(&s)).passed());
    }
    for n in 0..=8 {
        assert!(validate_adc(&simplex_adc(n)).passed());
    }
    let s = oriental(2);
    let mut swapped = KeyMap::identity(&s);
    swapped.swap(&k(&[0, 1]), &k(&[0, 2]));
    assert!(matches!(compare(&s, &simplex_adc(2), &swapped), Verdict::Failed { .. }));

    let mut bad = Polygraph::new();
    bad.push_generator(GenKey::named("x", 0), None).unwrap();
    bad.push_generator(GenKey::named("f", 1), Some((c_in("x", &bad), c_in("x", &bad)))).unwrap();
    let f2 = c_in("f*0 f", &bad);
    bad.push_generator(GenKey::named("a", 2), Some((f2.clone(), f2))).unwrap();
    assert!(!atomic_check(&bad).passed());
    let k_bad = lambda(&bad);
    match compare(&bad, &k_bad, &KeyMap::identity(&bad)) {
        Verdict::Failed { witness, .. } => assert!(!witness.is_empty()),
        v => panic!("unexpected {v}"),
    }
}

#[test]
fn cyclic_complex_is_not_loop_free() {
    let (x, y) = (GenKey::named("x", 0), GenKey::named("y", 0));
    let (p, q) = (GenKey::named("p", 1), GenKey::named("q", 1));
    let mut d = HashMap::new();
    d.insert(p.clone(), &Chain::basis(y.clone()) - &Chain::basis(x.clone()));
    d.insert(q.clone(), &Chain::basis(x.clone()) - &Chain::basis(y.clone()));
    let cyclic = AugDirComplex::from_parts(vec![vec![x, y], vec![p, q]], d);
    let r = strong_loop_free_check(&cyclic);
    assert!(!r.passed());
    assert!(!r.failures.is_empty());
}
