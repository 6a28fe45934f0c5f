//! Exact dense linear algebra over `Q(zeta_N)`.
//!
//! Elimination is fraction-free in the Bareiss sense: each update is
//! `(p a_ij - a_ic a_pj) / p_prev`. Spectral questions are never answered by
//! root finding; callers verify candidate eigenvalues through nilpotency.

use crate::cyclofield::{CycScalar, CycloField, Poly};
use crate::{Error, Result};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: &'static CycloField,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl Mat {
    pub fn zeros(field: &'static CycloField, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &'static CycloField, n: usize) -> Mat {
        Self::scalar(field, n, &field.one())
    }

    pub fn scalar(field: &'static CycloField, n: usize, c: &CycScalar) -> Mat {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diag(field: &'static CycloField, entries: &[CycScalar]) -> Mat {
        let n = entries.len();
        let mut m = Self::zeros(field, n, n);
        for (i, c) in entries.iter().enumerate() {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(
        field: &'static CycloField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycScalar,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field, rows, cols, data }
    }

    pub fn from_rows(field: &'static CycloField, rows: Vec<Vec<CycScalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Mat { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(field: &'static CycloField, rows: &[&[i64]]) -> Mat {
        let v = rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        Self::from_rows(field, v).expect("rectangular integer rows")
    }

    /// Column matrix from a vector.
    pub fn column(field: &'static CycloField, v: &[CycScalar]) -> Mat {
        Mat { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &'static CycloField, rows: usize, cols: &[Vec<CycScalar>]) -> Mat {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// `Some(c)` when the matrix is `c I`.
    pub fn scalar_value(&self) -> Option<CycScalar> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(self.field.zero());
        }
        let c = self.get(0, 0).clone();
        if self.is_diagonal() && (0..self.rows).all(|i| *self.get(i, i) == c) {
            Some(c)
        } else {
            None
        }
    }

    pub fn diagonal(&self) -> Vec<CycScalar> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn scale(&self, c: &CycScalar) -> Mat {
        if c.is_zero() {
            return Self::zeros(self.field, self.rows, self.cols);
        }
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect(),
        }
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Mat) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.field, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        Self::from_fn(self.field, self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            if a.is_zero() {
                return self.field.zero();
            }
            a * other.get(i % other.rows, j % other.cols)
        })
    }

    pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
        let f = a.field;
        let mut m = Self::zeros(f, a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Self::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Row echelon form by Bareiss elimination; returns the reduced matrix
    /// and the pivot column of each nonzero row.
    fn echelon(&self) -> (Mat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = self.field.one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let best = (r..a.rows).filter(|&i| !a.get(i, c).is_zero()).min_by_key(|&i| a.get(i, c).weight());
            let Some(p) = best else { continue };
            a.swap_rows(p, r);
            let piv = a.get(r, c).clone();
            let prev_inv = prev.inv().expect("nonzero Bareiss divisor");
            for i in (r + 1)..a.rows {
                let aic = a.get(i, c).clone();
                for j in (c + 1)..a.cols {
                    let arj = a.get(r, j);
                    let aij = a.get(i, j);
                    let t = if aic.is_zero() || arj.is_zero() {
                        if aij.is_zero() {
                            continue;
                        } else {
                            &piv * aij
                        }
                    } else if aij.is_zero() {
                        -(&aic * arj)
                    } else {
                        &(&piv * aij) - &(&aic * arj)
                    };
                    a.set(i, j, &t * &prev_inv);
                }
                a.set(i, c, self.field.zero());
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<CycScalar>> {
        let (a, pivots) = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            back_substitute(&a, &pivots, &mut v);
            out.push(v);
        }
        out
    }

    /// `Ok(Some(x))` with `A x = b`, `Ok(None)` when inconsistent.
    pub fn solve_linear(&self, b: &[CycScalar]) -> Result<Option<Vec<CycScalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let aug = Self::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (a, pivots) = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut v = vec![self.field.zero(); self.cols + 1];
        v[self.cols] = -self.field.one();
        back_substitute(&a, &pivots, &mut v);
        v.pop();
        Ok(Some(v))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[j] = self.field.one();
            cols.push(self.solve_linear(&e).ok()??);
        }
        Some(Self::from_columns(self.field, n, &cols))
    }

    pub fn det(&self) -> CycScalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut d = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                a.swap_rows(p, c);
                d = -d;
            }
            let piv = a.get(c, c).clone();
            d *= &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in (c + 1)..n {
                let f = a.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(i, j) - &(&f * a.get(c, j));
                    a.set(i, j, v);
                }
            }
        }
        d
    }

    /// Monic generator of the annihilator ideal, via Krylov sequences of
    /// the standard basis vectors and their lcm.
    pub fn minimal_polynomial(&self) -> Poly {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut acc = Poly::constant(f.one());
        for i in 0..n {
            // skip vectors already annihilated by the current lcm
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            if self.apply_poly_vec(&acc, &e).iter().all(CycScalar::is_zero) {
                continue;
            }
            let mut seq = vec![e];
            loop {
                let next = self.mul_vec(seq.last().unwrap());
                let k = Self::from_columns(f, n, &seq);
                if let Some(c) = k.solve_linear(&next).expect("shapes agree") {
                    let mut coeffs: Vec<CycScalar> = c.into_iter().map(|x| -x).collect();
                    coeffs.push(f.one());
                    acc = acc.lcm(&Poly::new(f, coeffs));
                    break;
                }
                seq.push(next);
            }
        }
        acc
    }

    fn apply_poly_vec(&self, p: &Poly, v: &[CycScalar]) -> Vec<CycScalar> {
        let mut acc = vec![self.field.zero(); v.len()];
        for c in p.coeffs().iter().rev() {
            acc = self.mul_vec(&acc);
            for (a, x) in acc.iter_mut().zip(v) {
                *a += &(c * x);
            }
        }
        acc
    }

    pub fn eval_poly(&self, p: &Poly) -> Mat {
        let n = self.rows;
        let mut acc = Self::zeros(self.field, n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &Self::scalar(self.field, n, c);
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square(), "nilpotency of a non-square matrix");
        self.pow(self.rows as u64).is_zero()
    }
}

fn back_substitute(a: &Mat, pivots: &[usize], v: &mut [CycScalar]) {
    let f = a.field;
    for (k, &pc) in pivots.iter().enumerate().rev() {
        let mut s = f.zero();
        for (j, vj) in v.iter().enumerate().skip(pc + 1) {
            let x = a.get(k, j);
            if !x.is_zero() && !vj.is_zero() {
                s += &(x * vj);
            }
        }
        v[pc] = -(&s / a.get(k, pc));
    }
}

/// Incremental row echelon form for sparse systems with many unknowns.
/// Rows are inserted one at a time and reduced against existing pivots.
pub struct SparseEchelon {
    field: &'static CycloField,
    cols: usize,
    pivots: BTreeMap<usize, BTreeMap<usize, CycScalar>>,
}

impl SparseEchelon {
    pub fn new(field: &'static CycloField, cols: usize) -> Self {
        SparseEchelon { field, cols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row given as `(column, value)` pairs; returns whether the
    /// rank grew.
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, CycScalar)>) -> bool {
        let mut row: BTreeMap<usize, CycScalar> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column out of range");
            if v.is_zero() {
                continue;
            }
            let e = row.entry(c).or_insert_with(|| self.field.zero());
            *e += &v;
            if e.is_zero() {
                row.remove(&c);
            }
        }
        loop {
            let Some((&c, lead)) = row.iter().next() else { return false };
            match self.pivots.get(&c) {
                Some(prow) => {
                    let lead = lead.clone();
                    for (&j, pv) in prow {
                        let e = row.entry(j).or_insert_with(|| self.field.zero());
                        *e -= &(&lead * pv);
                        if e.is_zero() {
                            row.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = lead.inv().expect("nonzero leading entry");
                    let normed = row.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
                    self.pivots.insert(c, normed);
                    return true;
                }
            }
        }
    }

    pub fn kernel_basis(&self) -> Vec<Vec<CycScalar>> {
        let f = self.field;
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|j| !self.pivots.contains_key(j)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (&pc, prow) in self.pivots.iter().rev() {
                let mut s = f.zero();
                for (&j, x) in prow.range((pc + 1)..) {
                    if !v[j].is_zero() {
                        s += &(x * &v[j]);
                    }
                }
                v[pc] = -s;
            }
            out.push(v);
        }
        out
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix product shapes")
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        self.try_add(rhs).expect("matrix sum shapes")
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        self.try_sub(rhs).expect("matrix difference shapes")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(z_{})", self.rows, self.cols, self.field.order())?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f3() -> &'static CycloField {
        CycloField::of(3).unwrap()
    }

    fn random_mat(f: &'static CycloField, rng: &mut ChaCha8Rng, r: usize, c: usize) -> Mat {
        Mat::from_fn(f, r, c, |_, _| CycScalar::random(f, rng, 3))
    }

    #[test]
    fn solve_examples() {
        let f = f3();
        let i2 = Mat::identity(f, 2);
        assert_eq!(i2.solve_linear(&[f.int(3), f.int(4)]).unwrap(), Some(vec![f.int(3), f.int(4)]));
        let z = Mat::zeros(f, 2, 2);
        assert_eq!(z.solve_linear(&[f.int(1), f.int(0)]).unwrap(), None);
        assert!(z.solve_linear(&[f.int(1)]).is_err());
    }

    #[test]
    fn solve_roundtrip_q5() {
        let f = CycloField::of(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let a = random_mat(f, &mut rng, 5, 5);
            if a.rank() < 5 {
                continue;
            }
            let x0: Vec<CycScalar> = (0..5).map(|_| CycScalar::random(f, &mut rng, 4)).collect();
            let b = a.mul_vec(&x0);
            assert_eq!(a.solve_linear(&b).unwrap().unwrap(), x0);
            let inv = a.inverse().unwrap();
            assert!((&a * &inv).is_identity());
            assert!(!a.det().is_zero());
        }
    }

    #[test]
    fn kernel_examples() {
        let f = f3();
        assert!(Mat::identity(f, 3).kernel_basis().is_empty());
        assert_eq!(Mat::zeros(f, 3, 3).kernel_basis().len(), 3);
        let m = Mat::from_int_rows(f, &[&[1, 1], &[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], -k[0][1].clone());
        assert!(m.mul_vec(&k[0]).iter().all(CycScalar::is_zero));
    }

    #[test]
    fn rank_nullity_random() {
        let f = CycloField::of(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for t in 0..20 {
            let r = 2 + t % 4;
            let c = 3 + t % 3;
            // low rank by construction
            let u = random_mat(f, &mut rng, r, 2);
            let v = random_mat(f, &mut rng, 2, c);
            let m = &u * &v;
            let k = m.kernel_basis();
            assert_eq!(m.rank() + k.len(), c);
            assert_eq!(m.rank(), m.transpose().rank());
            for v in &k {
                assert!(m.mul_vec(v).iter().all(CycScalar::is_zero));
            }
        }
    }

    #[test]
    fn outer_product_rank_one() {
        let f = f3();
        let u = Mat::column(f, &[f.int(1), f.q(), f.int(2)]);
        let v = Mat::column(f, &[f.zeta_pow(1), f.int(-1)]);
        assert_eq!((&u * &v.transpose()).rank(), 1);
        assert_eq!(Mat::zeros(f, 3, 2).rank(), 0);
        assert_eq!(Mat::identity(f, 4).rank(), 4);
    }

    #[test]
    fn minimal_polynomials() {
        let f = f3();
        let c = f.q();
        let m = Mat::scalar(f, 3, &c);
        assert_eq!(m.minimal_polynomial(), Poly::linear(&c));
        let j = Mat::from_int_rows(f, &[&[0, 1], &[0, 0]]);
        assert_eq!(j.minimal_polynomial(), Poly::new(f, vec![f.zero(), f.zero(), f.one()]));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let a = random_mat(f, &mut rng, 4, 4);
            let p = a.minimal_polynomial();
            assert!(a.eval_poly(&p).is_zero());
        }
    }

    #[test]
    fn nilpotency() {
        let f = f3();
        let u = Mat::from_int_rows(f, &[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        assert!(u.is_nilpotent());
        assert!(!Mat::identity(f, 2).is_nilpotent());
    }

    #[test]
    fn sparse_matches_dense() {
        let f = CycloField::of(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = random_mat(f, &mut rng, 6, 3);
        let v = random_mat(f, &mut rng, 3, 7);
        let m = &u * &v;
        let mut s = SparseEchelon::new(f, 7);
        for i in 0..6 {
            s.insert(m.row(i).iter().cloned().enumerate());
        }
        assert_eq!(s.rank(), m.rank());
        let k = s.kernel_basis();
        assert_eq!(k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(CycScalar::is_zero));
        }
    }

    #[test]
    fn kron_shapes() {
        let f = f3();
        let a = Mat::from_int_rows(f, &[&[1, 2], &[3, 4]]);
        let i = Mat::identity(f, 2);
        let k = a.kron(&i);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(2, 0), f.int(3));
        assert_eq!(*k.get(3, 1), f.int(3));
        assert!(k.get(3, 0).is_zero());
    }
}
