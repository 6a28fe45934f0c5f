use super::{CycScalar, CycloField};
use std::fmt;

/// Univariate polynomial over `Q(zeta_N)`, coefficients low degree first and
/// no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: &'static CycloField,
    coeffs: Vec<CycScalar>,
}

impl Poly {
    pub fn new(field: &'static CycloField, mut coeffs: Vec<CycScalar>) -> Poly {
        while coeffs.last().is_some_and(CycScalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &'static CycloField) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn constant(c: CycScalar) -> Poly {
        let field = c.field();
        Poly::new(field, vec![c])
    }

    /// The monomial `X`.
    pub fn x(field: &'static CycloField) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `X - r`.
    pub fn linear(r: &CycScalar) -> Poly {
        let field = r.field();
        Poly::new(field, vec![-r, field.one()])
    }

    pub fn from_ints(field: &'static CycloField, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.int(c)).collect())
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &CycScalar) -> CycScalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect();
        Poly::new(self.field, c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn scale(&self, c: &CycScalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Poly {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, a)| a * &self.field.int(i as i64)).collect();
        Poly::new(self.field, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, di) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &(&c * di);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let g = self.gcd(other);
        let (q, _) = self.mul(other).divrem(&g);
        q.monic()
    }
}

/// Largest `m` with `(X - r)^m` dividing `p`; 0 when `r` is not a root and
/// for the zero polynomial.
pub fn root_multiplicity(p: &Poly, r: &CycScalar) -> usize {
    let mut cur = p.clone();
    let lin = Poly::linear(r);
    let mut m = 0;
    while !cur.is_zero() && cur.eval(r).is_zero() {
        let (q, _) = cur.divrem(&lin);
        cur = q;
        m += 1;
    }
    m
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*X"),
                _ => format!("({c})*X^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_examples() {
        let f = CycloField::of(3).unwrap();
        let p = Poly::from_ints(f, &[1, -2, 1]);
        assert_eq!(root_multiplicity(&p, &f.one()), 2);
        assert_eq!(root_multiplicity(&Poly::from_ints(f, &[5]), &f.one()), 0);
        assert_eq!(root_multiplicity(&p, &f.int(2)), 0);
    }

    #[test]
    fn gcd_lcm() {
        let f = CycloField::of(5).unwrap();
        let q = f.q();
        let a = Poly::linear(&q).mul(&Poly::linear(&f.one()));
        let b = Poly::linear(&q).mul(&Poly::linear(&f.int(2)));
        assert_eq!(a.gcd(&b), Poly::linear(&q));
        let l = a.lcm(&b);
        assert_eq!(l.degree(), Some(3));
        for r in [q, f.one(), f.int(2)] {
            assert!(l.eval(&r).is_zero());
        }
    }

    #[test]
    fn divrem_identity() {
        let f = CycloField::of(7).unwrap();
        let a = Poly::new(f, vec![f.zeta_pow(1), f.int(3), f.q(), f.int(-1), f.zeta_pow(5)]);
        let b = Poly::new(f, vec![f.int(2), f.zeta_pow(3), f.one()]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
