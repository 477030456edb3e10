use orientalis::cells::{compose, parse, CellExpr, Sign};
use orientalis::cylinders::{
    cone_compose, cyl_boundary, cyl_compose, degenerate_cone, degenerate_cones_in, degenerate_pool, expansion_cone,
    oplax_check, trivial, validate_cone, validate_cylinder, Endpoint, Samples,
};
use orientalis::oriental::{oriental, oriental_context, oriental_expansion};

fn c(text: &str) -> CellExpr {
    parse(text).unwrap()
}

fn cell_eq(n: usize, a: &CellExpr, b: &CellExpr) -> bool {
    oriental_context(n).cell_eq(a, b).unwrap()
}

#[test]
fn source_of_a_one_cylinder_is_its_first_auxiliary_cell() {
    let ex = oriental_expansion(2);
    let cone = expansion_cone(&c("<1,2>"), &ex).unwrap();
    let src = cyl_boundary(Sign::Neg, cone.cylinder(), ex.result()).unwrap();
    assert_eq!(src.dim(), 0);
    assert_eq!(src.principal(), &c("<0,1>"));
    let tgt = cyl_boundary(Sign::Pos, cone.cylinder(), ex.result()).unwrap();
    assert_eq!(tgt.principal(), &c("<0,2>"));
}

#[test]
fn boundaries_of_boundaries_agree() {
    let ex = oriental_expansion(3);
    let s = ex.result();
    let ctx = oriental_context(3);
    for k in s.generators(2) {
        let cyl = expansion_cone(&CellExpr::gen(k.clone()), &ex).unwrap().into_cylinder();
        for sign in Sign::BOTH {
            let outer = |inner: Sign| {
                let b = cyl_boundary(inner, &cyl, s).unwrap();
                cyl_boundary(sign, &b, s).unwrap()
            };
            assert!(outer(Sign::Neg).table_eq(&outer(Sign::Pos), &ctx).unwrap(), "at {k}");
        }
    }
}

#[test]
fn source_of_a_cone_is_the_cone_of_the_source() {
    let ex = oriental_expansion(2);
    let cone = expansion_cone(&c("<0,1,2>"), &ex).unwrap();
    let src = cyl_boundary(Sign::Neg, cone.cylinder(), ex.result()).unwrap();
    let expected = expansion_cone(&c("<0,2>"), &ex).unwrap();
    assert!(src.table_eq(expected.cylinder(), &oriental_context(2)).unwrap());
}

#[test]
fn boundary_of_a_composite_cone() {
    let ex = oriental_expansion(3);
    let s = ex.result();
    let ctx = oriental_context(3);
    let samples = Samples::generators(s, &ctx, 3).unwrap();
    assert!(!samples.pairs.is_empty());
    for (p, x, y) in &samples.pairs {
        let (p, n) = (*p, x.dim());
        let a = expansion_cone(x, &ex).unwrap().into_cylinder();
        let b = expansion_cone(y, &ex).unwrap().into_cylinder();
        let g = cyl_compose(p, &a, &b, s, &ctx).unwrap();
        for sign in Sign::BOTH {
            let got = cyl_boundary(sign, &g, s).unwrap();
            let expected = if p + 1 < n {
                let ba = cyl_boundary(sign, &a, s).unwrap();
                let bb = cyl_boundary(sign, &b, s).unwrap();
                cyl_compose(p, &ba, &bb, s, &ctx).unwrap()
            } else if sign == Sign::Neg {
                cyl_boundary(sign, &a, s).unwrap()
            } else {
                cyl_boundary(sign, &b, s).unwrap()
            };
            assert!(got.table_eq(&expected, &ctx).unwrap(), "{y} *{p} {x}, {sign:?}");
        }
    }
}

#[test]
fn trivial_cylinders() {
    let s = oriental(2);
    let t = trivial(&c("<1>"), &s).unwrap();
    assert_eq!(t.cells(), vec![c("1_<1>")]);
    let ctx = oriental_context(2);
    let (x, y) = (c("<0,1>"), c("<1,2>"));
    let tx = trivial(&x, &s).unwrap();
    let ty = trivial(&y, &s).unwrap();
    assert!(validate_cylinder(&tx, &s, &ctx).passed());
    let composite = cyl_compose(0, &tx, &ty, &s, &ctx).unwrap();
    let expected = trivial(&compose(0, x, y).unwrap(), &s).unwrap();
    assert!(composite.table_eq(&expected, &ctx).unwrap());
    assert!(validate_cylinder(&composite, &s, &ctx).passed());
}

#[test]
fn zero_composite_of_one_cylinders() {
    let ex = oriental_expansion(3);
    let s = ex.result();
    let ctx = oriental_context(3);
    let a = expansion_cone(&c("<1,2>"), &ex).unwrap().into_cylinder();
    let b = expansion_cone(&c("<2,3>"), &ex).unwrap().into_cylinder();
    let g = cyl_compose(0, &a, &b, s, &ctx).unwrap();
    let whiskered = compose(0, a.top().clone(), b.principal().clone()).unwrap();
    let expected = compose(1, whiskered, compose(0, a.principal().clone(), b.bottom().clone()).unwrap()).unwrap();
    assert!(cell_eq(3, g.principal(), &expected));
}

#[test]
fn composite_of_one_cones() {
    let ex = oriental_expansion(3);
    let s = ex.result();
    let ctx = oriental_context(3);
    let a = expansion_cone(&c("<1,2>"), &ex).unwrap();
    let b = expansion_cone(&c("<2,3>"), &ex).unwrap();
    let g = cone_compose(0, &a, &b, s, &ctx).unwrap();
    assert!(cell_eq(3, g.principal(), &c("<2,3>*0<0,1,2>*1<0,2,3>")));
    assert!(validate_cone(&g, s, &ctx).passed());
}

#[test]
fn composite_of_two_cones() {
    let ex = oriental_expansion(4);
    let s = ex.result();
    let ctx = oriental_context(4);
    let x = c("<1,2,4>");
    let y = c("<2,3,4>*0<1,2>");
    let a = expansion_cone(&x, &ex).unwrap();
    let b = expansion_cone(&y, &ex).unwrap();
    let g = cone_compose(1, &a, &b, s, &ctx).unwrap();
    let mut expected = compose(0, a.aux(Sign::Neg, 0).clone(), y.clone()).unwrap();
    expected = compose(1, a.principal().clone(), expected).unwrap();
    expected = compose(2, b.principal().clone(), expected).unwrap();
    assert!(cell_eq(4, g.principal(), &expected));
    assert!(validate_cone(&g, s, &ctx).passed());
    let direct = expansion_cone(&compose(1, x, y).unwrap(), &ex).unwrap();
    assert!(g.cylinder().table_eq(direct.cylinder(), &ctx).unwrap());
}

#[test]
fn cone_compose_is_cyl_compose_on_generator_pairs() {
    let ex = oriental_expansion(3);
    let s = ex.result();
    let ctx = oriental_context(3);
    let samples = Samples::generators(s, &ctx, 3).unwrap();
    for (p, x, y) in &samples.pairs {
        let a = expansion_cone(x, &ex).unwrap();
        let b = expansion_cone(y, &ex).unwrap();
        let cone = cone_compose(*p, &a, &b, s, &ctx).unwrap();
        let cyl = cyl_compose(*p, a.cylinder(), b.cylinder(), s, &ctx).unwrap();
        assert!(cone.cylinder().table_eq(&cyl, &ctx).unwrap(), "{y} *{p} {x}");
        let direct = expansion_cone(&compose(*p, x.clone(), y.clone()).unwrap(), &ex).unwrap();
        assert!(cone.cylinder().table_eq(direct.cylinder(), &ctx).unwrap(), "{y} *{p} {x}");
    }
}

#[test]
fn degenerate_cones() {
    let s = oriental(3);
    let ctx = oriental_context(3);
    let v = c("<0>");
    assert_eq!(degenerate_cone(&v, &v, &s).unwrap().cells(), vec![c("1_<0>")]);
    assert_eq!(
        degenerate_cone(&c("<0,1>"), &v, &s).unwrap().cells(),
        vec![c("1_<0>"), c("<0,1>"), c("1_<0,1>")]
    );
    for k in s.keys().filter(|k| k.as_simplex().unwrap().indices()[0] == 0) {
        let x = CellExpr::gen(k.clone());
        let cone = degenerate_cone(&x, &v, &s).unwrap();
        assert!(cone.is_degenerate(), "at {k}");
        assert!(validate_cone(&cone, &s, &ctx).passed(), "at {k}");
    }
}

#[test]
fn degenerate_cone_is_unique_in_its_pool() {
    let v = c("<0>");
    for n in 0..=3 {
        let s = oriental(n);
        let ctx = oriental_context(n as usize);
        for k in s.keys().filter(|k| k.as_simplex().unwrap().indices()[0] == 0) {
            let x = CellExpr::gen(k.clone());
            let pool = degenerate_pool(&x, &s).unwrap();
            let found = degenerate_cones_in(&x, &v, &pool, &s, &ctx).unwrap();
            assert_eq!(found.len(), 1, "at {k}");
            let expected = degenerate_cone(&x, &v, &s).unwrap();
            assert!(found[0].cylinder().table_eq(expected.cylinder(), &ctx).unwrap(), "at {k}");
        }
    }
}

#[test]
fn expansion_cones() {
    let ex1 = oriental_expansion(1);
    assert_eq!(expansion_cone(&c("<1>"), &ex1).unwrap().to_string(), "(<0,1>)");
    let ex2 = oriental_expansion(2);
    let cone = expansion_cone(&c("<1,2>"), &ex2).unwrap();
    assert_eq!(cone.to_string(), "(<0,1>, <0,2>, <0,1,2>)");
    assert_eq!(cone.to_string_unicode(), "(⟨0,1⟩, ⟨0,2⟩, ⟨0,1,2⟩)");
    for n in 0..=3 {
        let ex = oriental_expansion(n);
        let ctx = oriental_context(n);
        for k in ex.result().keys() {
            let cone = expansion_cone(&CellExpr::gen(k.clone()), &ex).unwrap();
            assert!(validate_cone(&cone, ex.result(), &ctx).passed(), "at {k} in O_{n}");
        }
    }
}

#[test]
fn chevron_of_a_zero_composite() {
    let ex = oriental_expansion(2);
    let (x, y) = (c("<0,1>"), c("<1,2>"));
    let lhs = ex.chevron(&compose(0, x.clone(), y.clone()).unwrap()).unwrap();
    let rhs = compose(1, ex.chevron(&y).unwrap(), compose(0, ex.chevron(&x).unwrap(), y).unwrap()).unwrap();
    assert!(cell_eq(2, &lhs, &rhs));
    assert!(cell_eq(2, &lhs, &c("<1,2>*0 1_<0,1>*1<0,1,2>")));

    let ex = oriental_expansion(3);
    let lhs = ex.chevron(&c("<2,3>*0<1,2>")).unwrap();
    assert!(cell_eq(3, &lhs, &c("<2,3>*0<0,1,2>*1<0,2,3>")));
}

#[test]
fn chevron_of_a_unit() {
    let ex = oriental_expansion(1);
    let lhs = ex.chevron(&c("1_<1>")).unwrap();
    assert!(cell_eq(1, &lhs, &CellExpr::unit(ex.chevron(&c("<1>")).unwrap())));
    assert!(cell_eq(1, &lhs, &c("1_<0,1>")));
}

#[test]
fn expansion_is_oplax() {
    let ex = oriental_expansion(3);
    let ctx = oriental_context(3);
    let origin = CellExpr::gen(ex.origin().clone());
    let samples = Samples::generators(ex.result(), &ctx, 3).unwrap();
    let theta = |e: &CellExpr| ex.chevron(e);
    let r = oplax_check(&theta, &Endpoint::Constant(origin), &Endpoint::Identity, &samples, ex.result(), &ctx);
    assert!(r.passed(), "{r}");
    assert!(r.checked > 0);
}

#[test]
fn constant_units_are_not_oplax() {
    let s = oriental(2);
    let ctx = oriental_context(2);
    let origin = c("<0>");
    let samples = Samples::generators(&s, &ctx, 2).unwrap();
    let o = origin.clone();
    let theta = move |e: &CellExpr| Ok(CellExpr::iterated_unit(o.clone(), e.dim() + 1));
    let r = oplax_check(&theta, &Endpoint::Constant(origin), &Endpoint::Identity, &samples, &s, &ctx);
    assert!(!r.passed());
    assert!(r.failures.iter().any(|f| f.starts_with("composition")), "{r}");
}

#[test]
fn identity_transformation_is_oplax() {
    let s = oriental(2);
    let ctx = oriental_context(2);
    let samples = Samples::generators(&s, &ctx, 2).unwrap();
    let theta = |e: &CellExpr| Ok(CellExpr::unit(e.clone()));
    let r = oplax_check(&theta, &Endpoint::Identity, &Endpoint::Identity, &samples, &s, &ctx);
    assert!(r.passed(), "{r}");
}
