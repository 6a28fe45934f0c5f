use super::*;
use crate::presentations::{casimir_fe, normal_form};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f(n: i64) -> &'static CycloField {
    CycloField::of(n).unwrap()
}

#[test]
fn all_families_satisfy_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [3, 5] {
        for fam in Family::ALL {
            for _ in 0..5 {
                let spec = random_spec(f(n), fam, &mut rng);
                let rep = build_module(&spec).unwrap();
                let r = verify_relations(&rep);
                assert!(r.all_pass(), "{fam:?} N={n}: {:?}", r.failures());
                assert!(rep.flags.is_empty(), "{fam:?} {:?}", rep.flags);
            }
        }
    }
}

#[test]
fn dimensions() {
    let fl = f(5);
    let mu = fl.int(2);
    assert_eq!(build_module(&FamilySpec::s(mu.clone(), 1, 3)).unwrap().dim(), 4);
    assert_eq!(build_module(&FamilySpec::pproj(mu.clone(), 1, 1)).unwrap().dim(), 10);
    // n = 1, nbar = 2
    assert_eq!(build_module(&FamilySpec::omega_minus(mu.clone(), 1, 1, 2)).unwrap().dim(), 2 * 2 + 3 * 3);
    assert_eq!(build_module(&FamilySpec::omega_plus(mu.clone(), 1, 1, 2)).unwrap().dim(), 3 * 2 + 2 * 3);
    let m = FamilySpec::m(mu, -1, 1, 2, ProjPoint::Infinity);
    assert_eq!(build_module(&m).unwrap().dim(), 2 * 2 + 2 * 3);
}

#[test]
fn s_trivial_and_first_coefficient() {
    let fl = f(3);
    let mu = fl.int(3);
    let s0 = build_module(&FamilySpec::s(mu.clone(), -1, 0)).unwrap();
    assert!(s0.gen("E").is_zero() && s0.gen("F").is_zero());
    assert_eq!(s0.gen("Kh").scalar_value(), Some(-mu.clone()));
    assert_eq!(s0.gen("Lh").scalar_value(), Some(mu.clone()));
    let s2 = build_module(&FamilySpec::s(mu.clone(), 1, 2)).unwrap();
    assert_eq!(*s2.gen("E").get(0, 1), &mu * &mu * fl.qint(2));
}

#[test]
fn printed_transcriptions_fail() {
    let fl = f(5);
    let (l, m, c) = (fl.int(2), fl.int(3), fl.int(5));
    let vt = build_module(&FamilySpec::vtilde(l.clone(), m.clone(), c.clone()).printed()).unwrap();
    let r = verify_relations(&vt);
    assert!(r.failures().contains(&"F Kh = q Kh F"));
    assert!(r.checks.iter().find(|x| !x.pass).unwrap().witness.is_some());
    let lam = &m * &fl.q_pow(2);
    let pt = build_module(&FamilySpec::ptilde(lam, m, c).printed()).unwrap();
    assert!(!verify_relations(&pt).all_pass());
    let pp = build_module(&FamilySpec::pproj(fl.int(2), 1, 1).printed()).unwrap();
    assert_eq!(verify_relations(&pp).failures(), ["EF - FE = (K - L)/(q - q^-1)"]);
}

#[test]
fn mutation_breaks_ef() {
    let fl = f(3);
    let rep = build_module(&FamilySpec::v(fl.int(2), fl.int(3), fl.int(1), fl.int(1))).unwrap();
    let bad = rep.with_generator("E", Mat::zeros(fl, 3, 3)).unwrap();
    assert_eq!(verify_relations(&bad).failures(), ["EF - FE = (K - L)/(q - q^-1)"]);
}

#[test]
fn evaluate_is_homomorphism() {
    let fl = f(3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rep = build_module(&random_spec(fl, Family::P, &mut rng)).unwrap();
    let d = AlgebraId::DqB;
    assert!(evaluate(&rep, &NFElement::one(d, fl)).unwrap().is_identity());
    let x = normal_form(d, fl, "E F Khi").unwrap();
    let y = normal_form(d, fl, "F Lh E").unwrap();
    let lhs = evaluate(&rep, &x.mul(&y)).unwrap();
    let rhs = &evaluate(&rep, &x).unwrap() * &evaluate(&rep, &y).unwrap();
    assert_eq!(lhs, rhs);
    let o = NFElement::one(AlgebraId::OqSL2, fl);
    assert!(matches!(evaluate(&rep, &o), Err(Error::AlgebraMismatch(_, _))));
}

#[test]
fn casimir_on_s() {
    for n in [3, 5] {
        let fl = f(n);
        let mu = fl.int(2);
        for k in 0..n {
            let rep = build_module(&FamilySpec::s(mu.clone(), 1, k)).unwrap();
            let c = evaluate(&rep, &casimir_fe(fl)).unwrap();
            let d = fl.q_diff();
            let expected = &mu * &mu * fl.q_sym(k + 1) * (&d * &d).inv().unwrap();
            assert_eq!(c.scalar_value(), Some(expected));
        }
    }
}

#[test]
fn shadows_of_s() {
    let fl = f(5);
    let mu = fl.int(3);
    for eps in [1, -1] {
        for n in 0..5 {
            let sh = shadow(&build_module(&FamilySpec::s(mu.clone(), eps, n)).unwrap()).unwrap();
            assert_eq!(sh.h_p, -(fl.q_sym(n + 1) * fl.int(eps)));
            assert_eq!(sh.h_bdry, fl.int(eps) * (&mu * &mu).inv().unwrap());
            assert_eq!(sh.g_plus.det(), fl.one());
            assert_eq!(sh.g_minus.det(), fl.one());
        }
    }
}

#[test]
fn semiweight_ab_roundtrip() {
    let fl = f(5);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let (l, m, h) = (
            CycScalar::random_nonzero(fl, &mut rng, 3),
            CycScalar::random_nonzero(fl, &mut rng, 3),
            CycScalar::random(fl, &mut rng, 3),
        );
        assert_eq!(h_p_of_p(&l, &m, &semiweight_ab(&l, &m, &h).unwrap()).unwrap(), h);
    }
    let one = fl.one();
    assert!(semiweight_ab(&one, &one, &-fl.q_sym(1)).unwrap().is_zero());
}

#[test]
fn p_shadow_is_not_weight() {
    let fl = f(3);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let rep = build_module(&random_spec(fl, Family::P, &mut rng)).unwrap();
    let sh = shadow(&rep).unwrap();
    let g = evaluate(&rep, &crate::presentations::gamma_p(fl)).unwrap();
    let nil = &g - &Mat::scalar(fl, rep.dim(), &sh.h_p);
    assert!(!nil.is_zero() && (&nil * &nil).is_zero());
    assert!(is_semiweight(&rep) && !is_weight(&rep));
    let bad = build_module(&FamilySpec::p(fl.int(1), fl.int(1), fl.int(1), fl.int(1))).unwrap();
    assert_eq!(bad.flags, ["not_semiweight"]);
    assert!(matches!(shadow(&bad), Err(Error::NotSemiweight(_))));
    assert!(!is_semiweight(&bad));
}

#[test]
fn weight_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let fl = f(5);
    for fam in [Family::V, Family::Vtilde, Family::S] {
        let rep = build_module(&random_spec(fl, fam, &mut rng)).unwrap();
        assert!(is_weight(&rep), "{fam:?}");
    }
    for fam in [Family::P, Family::Ptilde, Family::Pproj] {
        let rep = build_module(&random_spec(fl, fam, &mut rng)).unwrap();
        assert!(is_semiweight(&rep) && !is_weight(&rep), "{fam:?}");
    }
}

#[test]
fn uq_specialization() {
    for n in [3, 5] {
        let fl = f(n);
        for k in 0..n - 1 {
            let p = build_uq_module(&FamilySpec::pproj(fl.one(), 1, k)).unwrap();
            assert!(verify_relations(&p).all_pass());
            let s = build_uq_module(&FamilySpec::s(fl.one(), 1, k)).unwrap();
            assert!(verify_relations(&s).all_pass());
            let back = uq_to_dqb(&s, &fl.int(2), -1).unwrap();
            assert!(verify_relations(&back).all_pass());
            let direct = build_module(&FamilySpec::s(fl.int(2), -1, k)).unwrap();
            assert_eq!(back.gens(), direct.gens());
        }
    }
}

#[test]
fn spec_json_roundtrip() {
    let fl = f(5);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for fam in Family::ALL {
        let spec = random_spec(fl, fam, &mut rng);
        assert_eq!(FamilySpec::from_json(&spec.to_json(), fl).unwrap(), spec);
    }
    let v: serde_json::Value = serde_json::from_str(r#"{"family":"S","mu":2,"eps":-1,"n":1}"#).unwrap();
    let s = FamilySpec::from_json(&v, fl).unwrap();
    assert_eq!(s, FamilySpec::s(fl.int(2), -1, 1));
}
