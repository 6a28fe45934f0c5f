use super::rewrite::{letter, torus, Letter, D_E, D_F, D_K, D_L, O_A, O_B, O_C, O_D, U_E, U_F, U_K};
use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f(n: i64) -> &'static CycloField {
    CycloField::of(n).unwrap()
}

fn gen(alg: AlgebraId, n: i64, name: &str) -> NFElement {
    NFElement::generator(alg, f(n), name).unwrap()
}

#[test]
fn ef_relation() {
    let fl = f(5);
    let ef = normal_form(AlgebraId::DqB, fl, "E F").unwrap();
    let c = fl.q_diff().inv().unwrap();
    let expected = gen(AlgebraId::DqB, 5, "F")
        .mul(&gen(AlgebraId::DqB, 5, "E"))
        .add(&gen(AlgebraId::DqB, 5, "K").scale(&c))
        .sub(&gen(AlgebraId::DqB, 5, "L").scale(&c));
    assert_eq!(ef, expected);
    assert_eq!(ef.terms().len(), 3);
    assert_eq!(ef.coeff(&[1, 0, 0, 1]), fl.one());
    assert_eq!(ef.coeff(&[0, 0, 2, 0]), c);
}

#[test]
fn e_kh_swap() {
    let fl = f(3);
    let x = normal_form(AlgebraId::DqB, fl, "E Kh").unwrap();
    assert_eq!(x.terms().len(), 1);
    assert_eq!(x.coeff(&[0, 0, 1, 1]), fl.q_pow(-1));
    let y = normal_form(AlgebraId::DqB, fl, "Kh Khi").unwrap();
    assert_eq!(y, NFElement::one(AlgebraId::DqB, fl));
}

#[test]
fn oq_relations() {
    let fl = f(5);
    let da = normal_form(AlgebraId::OqSL2, fl, "d a").unwrap();
    let mut expected = NFElement::one(AlgebraId::OqSL2, fl);
    expected = expected.add(&NFElement::monomial(AlgebraId::OqSL2, vec![0, 1, 1, 0], fl.q()).unwrap());
    assert_eq!(da, expected);
    let qdet = normal_form(AlgebraId::OqSL2, fl, "a d")
        .unwrap()
        .sub(&normal_form(AlgebraId::OqSL2, fl, "b c").unwrap().scale(&fl.q_pow(-1)));
    assert_eq!(qdet, NFElement::one(AlgebraId::OqSL2, fl));
    // b^n c^s a^m = q^{m(n+s)} a^m b^n c^s
    let bca = normal_form(AlgebraId::OqSL2, fl, "b c a").unwrap();
    assert_eq!(bca.coeff(&[1, 1, 1, 0]), fl.q_pow(2));
    // identity map respects every O_q SL2 relation
    assert!(verify_morphism(&identity_map(AlgebraId::OqSL2, fl).unwrap()).unwrap().all_pass());
}

#[test]
fn uq_truncations() {
    for n in [3, 5] {
        let fl = f(n);
        let u = AlgebraId::UqSl2Small;
        let e = gen(u, n, "E");
        let fg = gen(u, n, "F");
        assert!(e.pow(n as u32).is_zero());
        assert!(fg.pow(n as u32).is_zero());
        let kn = gen(u, n, "kh").pow(n as u32);
        assert_eq!(kn, NFElement::one(u, fl));
        assert!(!e.pow(n as u32 - 1).is_zero());
    }
}

#[test]
fn multiply_basics() {
    let fl = f(3);
    let d = AlgebraId::DqB;
    let x = normal_form(d, fl, "E F^2 Kh").unwrap();
    assert_eq!(multiply(&NFElement::one(d, fl), &x).unwrap(), x);
    let k = gen(d, 3, "Kh").mul(&gen(d, 3, "Khi"));
    assert_eq!(k, NFElement::one(d, fl));
    let (e, fg) = (gen(d, 3, "E"), gen(d, 3, "F"));
    assert_eq!(fg.mul(&e.mul(&fg)), fg.mul(&e).mul(&fg));
    let o = NFElement::one(AlgebraId::OqSL2, fl);
    assert!(matches!(multiply(&x, &o), Err(Error::AlgebraMismatch(_, _))));
    assert!(matches!(normal_form(AlgebraId::BqSL2, fl, "a b"), Err(Error::Unsupported(_))));
}

#[test]
fn centrality() {
    for n in [3, 5, 7] {
        let fl = f(n);
        assert!(casimir_identity_check(fl));
        assert!(!casimir_identity_check_mutated(fl));
        assert!(is_central_symbolic(&h_bdry(fl)).unwrap());
        assert!(is_central_symbolic(&casimir_ef(fl)).unwrap());
    }
    assert!(!is_central_symbolic(&gen(AlgebraId::DqB, 3, "E")).unwrap());
}

fn random_word(rng: &mut ChaCha8Rng, alg: AlgebraId, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| match alg {
            AlgebraId::DqB => match rng.gen_range(0..6) {
                0 => letter(D_E),
                1 => letter(D_F),
                2 => torus(D_K, 1),
                3 => torus(D_K, -1),
                4 => torus(D_L, 1),
                _ => torus(D_L, -1),
            },
            AlgebraId::UqSl2Small => match rng.gen_range(0..3) {
                0 => letter(U_E),
                1 => letter(U_F),
                _ => torus(U_K, 1),
            },
            _ => letter([O_A, O_B, O_C, O_D][rng.gen_range(0..4)]),
        })
        .collect()
}

#[test]
fn confluence_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (alg, n, count) in [(AlgebraId::DqB, 3, 500), (AlgebraId::UqSl2Small, 3, 150), (AlgebraId::OqSL2, 5, 150)] {
        let fl = f(n);
        for _ in 0..count {
            let len = rng.gen_range(0..=6);
            let w = random_word(&mut rng, alg, len);
            let l = normal_form_word(alg, fl, &w, Strategy::Leftmost).unwrap();
            let r = normal_form_word(alg, fl, &w, Strategy::Rightmost).unwrap();
            assert_eq!(l, r, "{alg} word {w:?}");
        }
    }
}

#[test]
fn normal_form_is_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fl = f(5);
    for _ in 0..40 {
        let w = random_word(&mut rng, AlgebraId::DqB, 5);
        let x = normal_form_word(AlgebraId::DqB, fl, &w, Strategy::Leftmost).unwrap();
        let again = multiply(&NFElement::one(AlgebraId::DqB, fl), &x).unwrap();
        assert_eq!(again, x);
    }
}

#[test]
fn json_roundtrip() {
    let fl = f(5);
    let x = casimir_fe(fl);
    let v = x.to_json();
    assert_eq!(v["algebra"], "DqB");
    assert_eq!(NFElement::from_json(&v, fl).unwrap(), x);
}

#[test]
fn majid_map_report() {
    let fl = f(3);
    let m = majid_map(fl);
    let r = verify_morphism(&m).unwrap();
    assert_eq!(r.checks.len(), 7);
    let names: Vec<&str> = r.checks.iter().filter(|c| c.pass).map(|c| c.relation.as_str()).collect();
    assert_eq!(names, ["ba=q^2 ab", "ca=q^-2 ac", "da=ad"]);
    // perturbing one image breaks a relation that held
    let mut bad = m.clone();
    let b = bad.images["b"].scale(&-fl.one());
    bad.images.insert("b".into(), b.add(&bad.images["a"]));
    let r2 = verify_morphism(&bad).unwrap();
    assert!(!r2.checks[0].pass);
    // the images sum to gamma_p
    assert_eq!(m.images["a"].add(&m.images["d"]), gamma_p(fl));
}

#[test]
fn yang_baxter() {
    for n in [3, 5] {
        let fl = f(n);
        assert!(yang_baxter_check(fl));
        assert!(!yang_baxter_holds(fl, &r_matrix_mutated(fl)));
    }
}

#[test]
fn phi_n_identities() {
    let fl = f(3);
    let u = AlgebraId::UqSl2Small;
    let (e, fg, kh) = (gen(u, 3, "E"), gen(u, 3, "F"), gen(u, 3, "kh"));
    let mut total = NFElement::zero(u, fl);
    for n in 0..3 {
        let p = build_phi_n(fl, n);
        assert_eq!(kh.mul(&p), p.scale(&fl.q_pow(n)));
        assert_eq!(p.mul(&kh), p.scale(&fl.q_pow(n)));
        assert_eq!(e.mul(&p), build_phi_n(fl, n + 1).mul(&e));
        assert_eq!(fg.mul(&p), build_phi_n(fl, n - 1).mul(&fg));
        total = total.add(&p);
    }
    assert_eq!(total, NFElement::scalar(u, fl.int(3)));
}

#[test]
fn gamma_n_solves() {
    for n in [3, 5] {
        let fl = f(n);
        let fg = gen(AlgebraId::UqSl2Small, n, "F");
        for k in 0..n - 1 {
            let g = solve_gamma_n(fl, k).unwrap();
            assert_eq!(fg.mul(&g), x_n(fl, k));
            assert!(g.terms().keys().all(|m| m[0] <= n - 2));
        }
        assert!(fg.mul(&solve_gamma_n(fl, n - 1).unwrap()).is_zero());
        assert_eq!(uq_pbw_basis(fl).len(), (n * n * n) as usize);
    }
}

#[test]
fn regular_decomposition_n3() {
    let printed = uq_regular_decomposition_check(f(3), false).unwrap();
    assert!(!printed.pass);
    assert_eq!(printed.total_dim, 23);
    let r = uq_regular_decomposition_check(f(3), true).unwrap();
    assert_eq!(r.total_dim, 27);
    assert_eq!(r.span_rank, 27);
    let dims: Vec<usize> = r.ideals.iter().map(|i| i.dim).collect();
    assert_eq!(dims, [6, 6, 6, 3, 3, 3]);
    assert!(r.pass, "{:?}", r.ideals);
}
