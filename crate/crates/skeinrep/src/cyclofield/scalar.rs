use super::CycloField;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of `Q(zeta_N)`: integer numerators over one positive common
/// denominator, reduced modulo `Phi_N` and by the content gcd.
#[derive(Clone)]
pub struct CycScalar {
    field: &'static CycloField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    pub(crate) fn from_parts(field: &'static CycloField, num: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.degree());
        let mut s = CycScalar { field, num, den };
        s.normalize();
        s
    }

    pub fn from_int(field: &'static CycloField, v: i64) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = BigInt::from(v);
        CycScalar { field, num, den: BigInt::one() }
    }

    pub fn from_bigint(field: &'static CycloField, v: BigInt) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = v;
        CycScalar { field, num, den: BigInt::one() }
    }

    pub fn from_ratio(field: &'static CycloField, num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut v = vec![BigInt::zero(); field.degree()];
        v[0] = num;
        Self::from_parts(field, v, den)
    }

    pub fn from_rational(field: &'static CycloField, r: &BigRational) -> Self {
        Self::from_ratio(field, r.numer().clone(), r.denom().clone())
    }

    /// Build from rational coefficients of `1, zeta, zeta^2, ...`; any length,
    /// reduced modulo `Phi_N`.
    pub fn from_rational_coeffs(field: &'static CycloField, coeffs: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut wide: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        reduce_mod_phi(field, &mut wide);
        Self::from_parts(field, wide, den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        let r = self.as_rational()?;
        if r.is_integer() {
            r.numer().to_i64()
        } else {
            None
        }
    }

    /// Rational coefficients with respect to `1, zeta, ..., zeta^{phi(N)-1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    /// A cheap size measure used for pivot choice.
    pub fn weight(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).sum::<u64>() + self.den.bits()
    }

    pub fn inv(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_ratio(self.field, r.denom().clone(), r.numer().clone()));
        }
        let a: Vec<BigRational> = self.num.iter().map(|c| BigRational::from(c.clone())).collect();
        let m: Vec<BigRational> = self.field.phi().iter().map(|&c| BigRational::from(BigInt::from(c))).collect();
        let s = qpoly_inverse_mod(&a, &m);
        let mut out = Self::from_rational_coeffs(self.field, &s);
        out = out.scale_int(&self.den);
        Ok(out)
    }

    fn scale_int(mut self, k: &BigInt) -> CycScalar {
        for c in &mut self.num {
            *c *= k;
        }
        self.normalize();
        self
    }

    pub fn pow(&self, e: i64) -> Result<CycScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycScalar::from_int(self.field, 1);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Random element with integer coefficients in `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(field: &'static CycloField, rng: &mut R, bound: i64) -> CycScalar {
        let num = (0..field.degree()).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
        CycScalar { field, num, den: BigInt::one() }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(field: &'static CycloField, rng: &mut R, bound: i64) -> CycScalar {
        loop {
            let s = Self::random(field, rng, bound);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Per-coefficient reduced serialization form.
    pub fn to_repr(&self) -> ScalarRepr {
        let mut num = Vec::with_capacity(self.num.len());
        let mut den = Vec::with_capacity(self.num.len());
        for c in self.coeffs() {
            num.push(BigIntJson(c.numer().clone()));
            den.push(BigIntJson(c.denom().clone()));
        }
        ScalarRepr { num, den }
    }

    fn check_same(&self, other: &CycScalar) {
        assert!(std::ptr::eq(self.field, other.field), "{}", Error::FieldMismatch(self.order(), other.order()));
    }
}

fn reduce_mod_phi(field: &CycloField, wide: &mut Vec<BigInt>) {
    let phi = field.phi();
    let d = field.degree();
    if wide.len() < d {
        wide.resize(d, BigInt::zero());
        return;
    }
    for k in (d..wide.len()).rev() {
        if wide[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut wide[k]);
        for i in 0..d {
            if phi[i] != 0 {
                wide[k - d + i] -= &c * phi[i];
            }
        }
    }
    wide.truncate(d);
}

fn qpoly_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn qpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    qpoly_trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
        r.pop();
        qpoly_trim(&mut r);
    }
    (q, r)
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qpoly_trim(&mut out);
    out
}

/// `s` with `a*s = 1 mod m`, via the extended Euclidean algorithm; `a` must be
/// coprime to `m`.
fn qpoly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    qpoly_trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while r1.len() > 1 {
        let (q, r) = qpoly_divrem(&r0, &r1);
        let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    assert!(r1.len() == 1, "element not invertible modulo Phi_N");
    let c = r1[0].clone();
    s1.iter().map(|x| x / &c).collect()
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.check_same(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            return CycScalar::from_parts(self.field, num, self.den.clone());
        }
        let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a * &rhs.den + b * &self.den).collect();
        CycScalar::from_parts(self.field, num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.check_same(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a - b).collect();
            return CycScalar::from_parts(self.field, num, self.den.clone());
        }
        let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a * &rhs.den - b * &self.den).collect();
        CycScalar::from_parts(self.field, num, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.check_same(rhs);
        if self.is_zero() || rhs.is_zero() {
            return CycScalar::from_int(self.field, 0);
        }
        let d = self.num.len();
        let a_rat = self.num[1..].iter().all(Zero::is_zero);
        let b_rat = rhs.num[1..].iter().all(Zero::is_zero);
        if a_rat || b_rat {
            let (k, v) = if a_rat { (&self.num[0], rhs) } else { (&rhs.num[0], self) };
            let num = v.num.iter().map(|c| c * k).collect();
            return CycScalar::from_parts(self.field, num, &self.den * &rhs.den);
        }
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.num.iter().enumerate() {
                if !y.is_zero() {
                    wide[i + j] += x * y;
                }
            }
        }
        reduce_mod_phi(self.field, &mut wide);
        CycScalar::from_parts(self.field, wide, &self.den * &rhs.den)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn div(self, rhs: &CycScalar) -> CycScalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { field: self.field, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(mut self) -> CycScalar {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] (N={})", self, self.order())
    }
}

/// A big integer written as a JSON number when it fits in `i64`, otherwise
/// as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigIntJson(pub BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|x| BigIntJson(BigInt::from(x)))
                .ok_or_else(|| serde::de::Error::custom("expected an integer")),
            serde_json::Value::String(s) => s.parse::<BigInt>().map(BigIntJson).map_err(serde::de::Error::custom),
            _ => Err(serde::de::Error::custom("expected an integer or decimal string")),
        }
    }
}

/// JSON form of a scalar: coefficient numerators and denominators with
/// respect to powers of `zeta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRepr {
    pub num: Vec<BigIntJson>,
    #[serde(default)]
    pub den: Vec<BigIntJson>,
}

impl ScalarRepr {
    /// Interpret in `Q(zeta_N)`. Missing denominators default to 1 and longer
    /// vectors are reduced modulo `Phi_N`.
    pub fn to_scalar(&self, field: &'static CycloField) -> Result<CycScalar> {
        if self.den.len() > self.num.len() {
            return Err(Error::Parse("more denominators than numerators".into()));
        }
        let mut coeffs = Vec::with_capacity(self.num.len());
        for (i, n) in self.num.iter().enumerate() {
            let d = self.den.get(i).map(|d| d.0.clone()).unwrap_or_else(BigInt::one);
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            coeffs.push(BigRational::new(n.0.clone(), d));
        }
        Ok(CycScalar::from_rational_coeffs(field, &coeffs))
    }
}

/// Scalar input in JSON: a plain integer or a [`ScalarRepr`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarInput {
    Int(i64),
    Repr(ScalarRepr),
}

impl ScalarInput {
    pub fn to_scalar(&self, field: &'static CycloField) -> Result<CycScalar> {
        match self {
            ScalarInput::Int(v) => Ok(field.int(*v)),
            ScalarInput::Repr(r) => r.to_scalar(field),
        }
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}
