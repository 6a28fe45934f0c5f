use super::{CycScalar, CycloField, Poly};
use num_bigint::BigInt;
use num_traits::Zero;

/// Integer coefficients (low degree first) of the Chebyshev polynomial
/// `T_n` with `T_0 = 2`, `T_1 = X`, `T_{n+2} = X T_{n+1} - T_n`, so that
/// `T_n(u + u^{-1}) = u^n + u^{-n}`.
pub fn chebyshev_t(n: usize) -> Vec<BigInt> {
    let mut prev = vec![BigInt::from(2)];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![BigInt::zero(), BigInt::from(1)];
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn eval_int_poly(p: &[BigInt], x: &CycScalar) -> CycScalar {
    let f = x.field();
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + &CycScalar::from_bigint(f, c.clone());
    }
    acc
}

impl Poly {
    pub fn chebyshev(field: &'static CycloField, n: usize) -> Poly {
        Poly::new(field, chebyshev_t(n).into_iter().map(|c| CycScalar::from_bigint(field, c)).collect())
    }
}

/// Roots with multiplicity of `T_N(X) - 2 sign`: the simple root `2 sign` and
/// the double roots `sign (q^n + q^{-n})` for `1 <= n <= (N-1)/2`.
pub fn chebyshev_fiber_pm2(field: &'static CycloField, sign: i64) -> Vec<(CycScalar, usize)> {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    let s = field.int(sign);
    let mut out = vec![(field.int(2 * sign), 1)];
    for n in 1..=((field.order() as i64 - 1) / 2) {
        out.push((&s * &field.q_sym(n), 2));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::root_multiplicity;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_chebyshev() {
        assert_eq!(chebyshev_t(0), ints(&[2]));
        assert_eq!(chebyshev_t(1), ints(&[0, 1]));
        assert_eq!(chebyshev_t(2), ints(&[-2, 0, 1]));
        assert_eq!(chebyshev_t(3), ints(&[0, -3, 0, 1]));
        assert_eq!(chebyshev_t(5), ints(&[0, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn chebyshev_identity_by_evaluation() {
        for n in [3, 5] {
            let f = CycloField::of(n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..50 {
                let u = CycScalar::random_nonzero(f, &mut rng, 3);
                let ui = u.inv().unwrap();
                let x = &u + &ui;
                for k in 0..=(2 * n as usize) {
                    let lhs = eval_int_poly(&chebyshev_t(k), &x);
                    let rhs = u.pow(k as i64).unwrap() + ui.pow(k as i64).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn fiber_multiplicities() {
        for n in [3, 5, 7] {
            let f = CycloField::of(n).unwrap();
            for sign in [1, -1] {
                let fib = chebyshev_fiber_pm2(f, sign);
                let total: usize = fib.iter().map(|(_, m)| m).sum();
                assert_eq!(total, n as usize);
                let p = Poly::chebyshev(f, n as usize).sub(&Poly::constant(f.int(2 * sign)));
                let dp = p.derivative();
                for (r, m) in &fib {
                    assert_eq!(root_multiplicity(&p, r), *m);
                    assert_eq!(dp.eval(r).is_zero(), *m == 2);
                }
            }
        }
    }

    #[test]
    fn a_and_q_forms_agree() {
        // the double roots can be written with A or with q; the sets coincide
        for n in [3, 5, 7, 9] {
            let f = CycloField::of(n).unwrap();
            let m = (n - 1) / 2;
            let mut qs: Vec<String> = (1..=m).map(|k| f.q_sym(k).to_string()).collect();
            let mut as_: Vec<String> = (1..=m).map(|k| (f.a_pow(k) + f.a_pow(-k)).to_string()).collect();
            qs.sort();
            as_.sort();
            assert_eq!(qs, as_);
        }
    }
}
