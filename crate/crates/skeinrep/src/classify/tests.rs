use super::*;
use crate::exactlin::Mat;
use crate::homlab::{are_isomorphic, is_indecomposable};
use crate::repfactory::{build_uq_module, is_weight, verify_relations};

fn f(n: i64) -> &'static CycloField {
    CycloField::of(n).unwrap()
}

#[test]
fn coloring_counts() {
    let fl = f(5);
    let probes3 = [ProjPoint::Finite(fl.zero()), ProjPoint::Finite(fl.one()), ProjPoint::Infinity];
    assert_eq!(enumerate_colorings(&ShadowSpec::new(vec![]).unwrap(), 1, &probes3).len(), 1);
    let p1 = ShadowSpec::new(vec![Puncture::p1(fl, 1, fl.int(3))]).unwrap();
    let cs = enumerate_colorings(&p1, 2, &probes3);
    assert_eq!(cs.iter().map(|c| c.assignment[0].to_string()).collect::<Vec<_>>(), ["S", "P"]);
    let p2 = ShadowSpec::central(&fl.int(2), 1, 0, 1).unwrap();
    assert_eq!(enumerate_colorings(&p2, 1, &probes3).len(), 14);
    let p0 = ShadowSpec::new(vec![Puncture::p0(fl), Puncture::p2(fl.one(), -1, 1)]).unwrap();
    assert_eq!(enumerate_colorings(&p0, 1, &probes3).len(), 14);
    assert!(ShadowSpec::new(vec![Puncture::p1(fl, 1, fl.int(2))]).is_err());
    assert!(ShadowSpec::central(&fl.one(), 1, 2, 1).is_err());
}

#[test]
fn label_display() {
    let fl = f(3);
    assert_eq!(DeltaLabel::s().barred().to_string(), "Sbar");
    let l = DeltaLabel::new(LabelTag::Real(2, Direction::Plus), false).unwrap();
    assert_eq!(l.to_string(), "(3,2)");
    let l = DeltaLabel::new(LabelTag::Imag(1, ProjPoint::Infinity), true).unwrap();
    assert_eq!(l.to_string(), "((1,1),inf)bar");
    assert!(DeltaLabel::new(LabelTag::Real(0, Direction::Minus), false).is_err());
    let _ = fl;
}

#[test]
fn instantiate_examples() {
    let fl = f(3);
    let s = instantiate(&DeltaLabel::s(), &fl.one(), 1, 0).unwrap();
    assert_eq!(s.dim(), 1);
    let sb = instantiate(&DeltaLabel::s().barred(), &fl.one(), 1, 0).unwrap();
    assert_eq!(sb.dim(), 2);
    let m = instantiate(
        &DeltaLabel::new(LabelTag::Imag(1, ProjPoint::Finite(fl.one())), false).unwrap(),
        &fl.int(2),
        -1,
        0,
    )
    .unwrap();
    assert!(is_weight(&m));
    assert!(instantiate(&DeltaLabel::s(), &fl.one(), 1, 1).is_err());
}

#[test]
fn fibers_at_n3() {
    let fl = f(3);
    let rep = fiber_check(&fl.int(2), 1, 0, 2, &default_probes(fl)).unwrap();
    assert_eq!(rep.labels.len(), 28);
    assert!(rep.shadows_equal && rep.pairwise_non_isomorphic, "{:?}", rep.failures);
    assert!(!azumaya_predicate(&rep.shadow));
}

#[test]
fn counts() {
    let fl = f(3);
    for m in 0..=2 {
        let spec = ShadowSpec::central(&fl.int(2), 1, 0, m).unwrap();
        let c = count_summary(&spec, 1).unwrap();
        assert!(c.formulas_match, "m={m}: {c:?}");
        assert_eq!(c.semantic_irreducible_count, 2u64.pow(m as u32));
    }
    // every exceptional module has Loewy length 2 with disjoint top and
    // socle, so the centre acts by scalars on all of them
    let c = count_summary(&ShadowSpec::central(&fl.one(), -1, 0, 1).unwrap(), 2).unwrap();
    assert_eq!(c.weight_labels[0].len(), 26);
    assert!(c.weight_labels[0].iter().all(|l| l.tag != LabelTag::P));
    assert!(!c.semantic_match);
}

#[test]
fn azumaya_examples() {
    let fl = f(5);
    let s = shadow(&instantiate(&DeltaLabel::s(), &fl.int(2), 1, 0).unwrap()).unwrap();
    assert!(!azumaya_predicate(&s));
    let mut sh = s.clone();
    sh.h_p = fl.int(-2);
    assert!(azumaya_predicate(&sh));
    sh.h_p = fl.int(2);
    assert!(!azumaya_predicate(&sh));
    let t = fl.int(3);
    sh.g_plus = Mat::diag(fl, &[t.clone(), t.inv().unwrap()]);
    sh.g_minus = Mat::identity(fl, 2);
    assert!(azumaya_predicate(&sh));
}

#[test]
fn kronecker_roots() {
    let fl = f(3);
    let q = kronecker_build(fl, 2, 1, None).unwrap();
    assert_eq!(q.x, Mat::from_int_rows(fl, &[&[1, 0]]));
    assert_eq!(q.y, Mat::from_int_rows(fl, &[&[0, 1]]));
    let q = kronecker_build(fl, 1, 2, None).unwrap();
    assert_eq!(q.x, Mat::from_int_rows(fl, &[&[1], &[0]]));
    assert_eq!(q.y, Mat::from_int_rows(fl, &[&[0], &[1]]));
    let q = kronecker_build(fl, 1, 1, Some(&ProjPoint::Finite(fl.int(5)))).unwrap();
    assert_eq!((q.x.get(0, 0).clone(), q.y.get(0, 0).clone()), (fl.one(), fl.int(5)));
    assert!(kronecker_build(fl, 1, 0, None).unwrap().x.is_zero());
    assert!(kronecker_build(fl, 3, 1, None).is_err());
    assert!(kronecker_build(fl, 2, 2, None).is_err());
    // J_2 at distinct points are not isomorphic
    let probes = default_probes(fl);
    for (i, a) in probes.iter().enumerate() {
        for b in &probes[i + 1..] {
            let x = kronecker_build(fl, 2, 2, Some(a)).unwrap().to_module();
            let y = kronecker_build(fl, 2, 2, Some(b)).unwrap().to_module();
            assert!(!are_isomorphic(&x, &y).unwrap());
            assert!(is_indecomposable(&x));
        }
    }
}

#[test]
fn gluing_reproduces_exceptional_modules() {
    let fl = f(3);
    for n in 0..=1 {
        for k in 1..=2usize {
            let g = glue_quiver_rep(n, &kronecker_build(fl, k + 1, k, None).unwrap()).unwrap();
            assert!(verify_relations(&g).all_pass());
            let om = build_uq_module(&FamilySpec::omega_plus(fl.one(), 1, n, k)).unwrap();
            assert!(are_isomorphic(&g, &om).unwrap(), "Omega^{k}_{n}");
            let g = glue_quiver_rep(n, &kronecker_build(fl, k, k + 1, None).unwrap()).unwrap();
            let om = build_uq_module(&FamilySpec::omega_minus(fl.one(), 1, n, k)).unwrap();
            assert!(are_isomorphic(&g, &om).unwrap(), "Omega^-{k}_{n}");
            for z in default_probes(fl) {
                let g = glue_quiver_rep(n, &kronecker_build(fl, k, k, Some(&z)).unwrap()).unwrap();
                let m = build_uq_module(&FamilySpec::m(fl.one(), 1, n, k, z.clone())).unwrap();
                assert!(are_isomorphic(&g, &m).unwrap(), "M^{k}_{n}({z})");
            }
        }
        let g = glue_quiver_rep(n, &kronecker_build(fl, 1, 0, None).unwrap()).unwrap();
        assert!(are_isomorphic(&g, &build_uq_module(&FamilySpec::s(fl.one(), 1, n)).unwrap()).unwrap());
    }
}

#[test]
fn bruteforce_small() {
    let fl = f(3);
    let r = kronecker_bruteforce(fl, 2).unwrap();
    assert_eq!(r.dimension_vectors, [(0, 1), (1, 0), (1, 1)]);
    // (1,1) classes: the points 0, 1, -1, inf reachable from {0, 1, -1}
    assert_eq!(r.classes.iter().filter(|c| c.dim_vector == (1, 1)).count(), 4);
}

#[test]
fn dual_numbers() {
    let fl = f(3);
    let c = dual_number_catalog(fl).unwrap();
    assert!(c.one_indecomposable && c.regular_indecomposable);
    assert!(c.sequence.exact && !c.sequence.split);
    assert!(c.all_decompose);
    assert_eq!(c.bruteforce[2].block_types, [(0, 3), (1, 1)]);
    assert!(jordan_certificate(&Mat::from_int_rows(fl, &[&[1, 0], &[0, 0]])).is_none());
}
