//! Exact arithmetic in the cyclotomic field `Q(zeta_N)` for odd `N >= 3`.
//!
//! The distinguished elements are `A^{1/2} = zeta`, `A = zeta^2` and
//! `q = zeta^4`. Because `N` is odd all three are primitive `N`-th roots of
//! unity and every half-integer power of `A` is an integer power of `zeta`.

mod chebyshev;
mod poly;
mod scalar;

pub use chebyshev::{chebyshev_fiber_pm2, chebyshev_t, eval_int_poly};
pub use poly::{root_multiplicity, Poly};
pub use scalar::{CycScalar, ScalarInput, ScalarRepr};

use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Odd order `N >= 3` of the root of unity `A^{1/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOrder(u32);

impl RootOrder {
    pub fn new(n: i64) -> Result<Self> {
        if n < 3 || n % 2 == 0 || n > u32::MAX as i64 {
            return Err(Error::BadOrder(n));
        }
        Ok(RootOrder(n as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// The field `Q(zeta_N)`; one shared instance per order.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Monic `Phi_N`, low degree first.
    phi: Vec<i64>,
    /// `zeta^k mod Phi_N` for `0 <= k < N`.
    powers: Vec<Vec<BigInt>>,
}

fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            p = div_exact_int(&p, &phi_d);
        }
    }
    p
}

fn div_exact_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        for (i, &di) in den.iter().enumerate() {
            rem[k + i] -= c * di;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CycloField {}

impl CycloField {
    /// The field for order `N`, created on first use.
    pub fn get(order: RootOrder) -> &'static CycloField {
        static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static CycloField>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = reg.lock().expect("field registry poisoned");
        guard.entry(order.0).or_insert_with(|| Box::leak(Box::new(CycloField::build(order.0))))
    }

    /// Shorthand for `CycloField::get(RootOrder::new(n)?)`.
    pub fn of(n: i64) -> Result<&'static CycloField> {
        Ok(Self::get(RootOrder::new(n)?))
    }

    fn build(order: u32) -> CycloField {
        let phi = cyclotomic_poly(order);
        let d = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::from(0); d];
        cur[0] = BigInt::from(1);
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[d - 1].clone();
            let mut next = vec![BigInt::from(0); d];
            for i in (1..d).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..d {
                next[i] -= &top * phi[i];
            }
            cur = next;
        }
        CycloField { order, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn root_order(&self) -> RootOrder {
        RootOrder(self.order)
    }

    /// Euler phi of `N`, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub(crate) fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(&'static self) -> CycScalar {
        CycScalar::from_int(self, 0)
    }

    pub fn one(&'static self) -> CycScalar {
        CycScalar::from_int(self, 1)
    }

    pub fn int(&'static self, v: i64) -> CycScalar {
        CycScalar::from_int(self, v)
    }

    pub fn rational(&'static self, num: i64, den: i64) -> CycScalar {
        CycScalar::from_ratio(self, BigInt::from(num), BigInt::from(den))
    }

    /// `zeta^k`, i.e. `A^{k/2}`.
    pub fn zeta_pow(&'static self, k: i64) -> CycScalar {
        let r = k.rem_euclid(self.order as i64) as usize;
        CycScalar::from_parts(self, self.powers[r].clone(), BigInt::from(1))
    }

    /// `A^{k/2}`; alias of [`zeta_pow`](Self::zeta_pow).
    pub fn a_half_pow(&'static self, k: i64) -> CycScalar {
        self.zeta_pow(k)
    }

    /// `A^k`.
    pub fn a_pow(&'static self, k: i64) -> CycScalar {
        self.zeta_pow(2 * k)
    }

    /// `q^k = A^{2k}`.
    pub fn q_pow(&'static self, k: i64) -> CycScalar {
        self.zeta_pow(4 * k)
    }

    pub fn q(&'static self) -> CycScalar {
        self.q_pow(1)
    }

    /// `q - q^{-1}`, nonzero since `q` is primitive.
    pub fn q_diff(&'static self) -> CycScalar {
        self.q_pow(1) - self.q_pow(-1)
    }

    /// Quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
    pub fn qint(&'static self, n: i64) -> CycScalar {
        (self.q_pow(n) - self.q_pow(-n)) * self.q_diff().inv().expect("q - q^-1 is nonzero")
    }

    /// `q^n + q^{-n}`.
    pub fn q_sym(&'static self, n: i64) -> CycScalar {
        self.q_pow(n) + self.q_pow(-n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(cyclotomic_poly(15).len() - 1, 8);
    }

    #[test]
    fn bad_orders() {
        assert!(RootOrder::new(4).is_err());
        assert!(RootOrder::new(1).is_err());
        assert!(RootOrder::new(-3).is_err());
        assert!(RootOrder::new(7).is_ok());
    }

    #[test]
    fn zeta_basics() {
        let f = CycloField::of(3).unwrap();
        assert!(f.zeta_pow(0).is_one());
        assert_eq!(f.zeta_pow(1) + f.zeta_pow(2), f.int(-1));
        let f5 = CycloField::of(5).unwrap();
        assert_eq!(f5.zeta_pow(7), f5.zeta_pow(2));
        for k in 0..5 {
            assert!((f5.zeta_pow(k) * f5.zeta_pow(5 - k)).is_one());
        }
        for k in 1..5 {
            assert!(!f5.zeta_pow(k).is_one());
        }
    }

    #[test]
    fn quantum_integers() {
        for n in [3, 5, 7, 9] {
            let f = CycloField::of(n).unwrap();
            assert!(f.qint(1).is_one());
            assert!(f.qint(0).is_zero());
            assert!(f.qint(n).is_zero());
            for m in 1..n {
                assert!(!f.qint(m).is_zero());
                assert_eq!(f.qint(n - m), -f.qint(m));
            }
        }
    }
}
