use proptest::prelude::*;
use skeinrep::cyclofield::ScalarRepr;
use skeinrep::presentations::{multiply, normal_form, AlgebraId};
use skeinrep::sl2kit::{bruhat_factor, gluing_lift, prout_solve, ProutOutcome, SL2Mat};
use skeinrep::{CycScalar, CycloField, Mat};

fn field(n: i64) -> &'static CycloField {
    CycloField::of(n).unwrap()
}

fn scalar(f: &'static CycloField, coeffs: &[i64]) -> CycScalar {
    coeffs.iter().enumerate().fold(f.zero(), |acc, (k, &c)| acc + f.zeta_pow(k as i64) * f.int(c))
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 5)
}

fn order() -> impl Strategy<Value = i64> {
    prop_oneof![Just(3i64), Just(5), Just(7)]
}

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!["Kh", "Khi", "Lh", "Lhi", "E", "F"]), 0..5)
        .prop_map(|w| w.join(" "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(n in order(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = field(n);
        let (a, b, c) = (scalar(f, &a), scalar(f, &b), scalar(f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, f.zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_json_roundtrip(n in order(), a in coeffs()) {
        let f = field(n);
        let x = scalar(f, &a);
        let text = serde_json::to_string(&x).unwrap();
        let back: ScalarRepr = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_scalar(f).unwrap(), x);
    }

    #[test]
    fn det_is_multiplicative(a in prop::collection::vec(-3i64..=3, 9), b in prop::collection::vec(-3i64..=3, 9)) {
        let f = field(5);
        let m = |v: &[i64]| Mat::from_fn(f, 3, 3, |i, j| f.zeta_pow(i as i64) * f.int(v[3 * i + j]));
        let (x, y) = (m(&a), m(&b));
        prop_assert_eq!((&x * &y).det(), x.det() * y.det());
        prop_assert_eq!(x.rank() + x.kernel_basis().len(), 3);
        if let Some(xi) = x.inverse() {
            prop_assert!((&x * &xi).is_identity());
        }
    }

    #[test]
    fn normal_forms_are_associative(u in word(), v in word(), w in word()) {
        let f = field(3);
        let nf = |s: &str| normal_form(AlgebraId::DqB, f, s).unwrap();
        let (x, y, z) = (nf(&u), nf(&v), nf(&w));
        let left = multiply(&multiply(&x, &y).unwrap(), &z).unwrap();
        let right = multiply(&x, &multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let joined = [u.as_str(), v.as_str(), w.as_str()].join(" ");
        prop_assert_eq!(left, nf(&joined));
    }

    #[test]
    fn bruhat_and_lift(n in order(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = field(n);
        let a = scalar(f, &a);
        prop_assume!(!a.is_zero());
        let (b, c) = (scalar(f, &b), scalar(f, &c));
        let d = (f.one() + &b * &c) * a.inv().unwrap();
        let m = SL2Mat::from_entries(a, b, c, d).unwrap();
        let (lo, up) = bruhat_factor(&m).unwrap();
        prop_assert!(lo.mat().is_lower_triangular() && up.is_upper());
        prop_assert_eq!(lo.mul(&up), m.clone());
        let (x, y) = gluing_lift(&m).unwrap();
        prop_assert!(!x.in_big_cell() && !y.in_big_cell());
        prop_assert_eq!(x.mul(&y), m);
    }

    #[test]
    fn prout_with_dc_upper(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = field(5);
        let a = SL2Mat::random_generic(f, &mut rng, 3);
        let c = SL2Mat::random_generic(f, &mut rng, 3);
        let b = a.inverse().mul(&SL2Mat::random_upper(f, &mut rng, 3));
        let d = SL2Mat::random_upper(f, &mut rng, 3).mul(&c.inverse());
        let solved = matches!(prout_solve(&a, &b, &c, &d).unwrap(), ProutOutcome::Solved { .. });
        prop_assert!(solved);
    }
}
