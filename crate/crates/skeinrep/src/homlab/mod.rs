//! Intertwiners, endomorphism rings, simplicity and exact sequences.

use crate::cyclofield::{CycScalar, CycloField};
use crate::exactlin::{Mat, SparseEchelon};
use crate::repfactory::MatRep;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A finite-dimensional module given by the matrices of a generating set.
/// The first `torus_len` generators are diagonal whenever the module is in
/// its standard basis; the solvers use that to prune unknowns.
pub trait Module {
    fn field(&self) -> &'static CycloField;
    fn dim(&self) -> usize;
    /// Name of the acting algebra; modules over different algebras have no
    /// morphisms between them.
    fn kind(&self) -> String;
    fn action_generators(&self) -> Vec<&Mat>;
    fn torus_len(&self) -> usize;
}

impl Module for MatRep {
    fn field(&self) -> &'static CycloField {
        MatRep::field(self)
    }
    fn dim(&self) -> usize {
        MatRep::dim(self)
    }
    fn kind(&self) -> String {
        self.algebra().to_string()
    }
    fn action_generators(&self) -> Vec<&Mat> {
        MatRep::action_generators(self)
    }
    fn torus_len(&self) -> usize {
        MatRep::action_generators(self).len() - 2
    }
}

/// A module over an algebra without a stored presentation, such as a path
/// algebra or the dual numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpModule {
    pub kind: String,
    pub ops: Vec<Mat>,
    pub torus_len: usize,
    #[serde(skip)]
    field: &'static CycloField,
    dim: usize,
}

impl OpModule {
    pub fn new(
        kind: &str,
        field: &'static CycloField,
        dim: usize,
        ops: Vec<Mat>,
        torus_len: usize,
    ) -> Result<OpModule> {
        if ops.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension(format!("operators must be {dim}x{dim}")));
        }
        Ok(OpModule { kind: kind.to_string(), ops, torus_len, field, dim })
    }

    pub fn direct_sum(&self, other: &OpModule) -> Result<OpModule> {
        if self.kind != other.kind || self.ops.len() != other.ops.len() {
            return Err(Error::AlgebraMismatch(self.kind.clone(), other.kind.clone()));
        }
        let ops = self.ops.iter().zip(&other.ops).map(|(a, b)| Mat::block_diag(a, b)).collect();
        OpModule::new(&self.kind, self.field, self.dim + other.dim, ops, self.torus_len)
    }
}

impl Module for OpModule {
    fn field(&self) -> &'static CycloField {
        self.field
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn kind(&self) -> String {
        self.kind.clone()
    }
    fn action_generators(&self) -> Vec<&Mat> {
        self.ops.iter().collect()
    }
    fn torus_len(&self) -> usize {
        self.torus_len
    }
}

fn same_algebra<M: Module + ?Sized>(r1: &M, r2: &M) -> Result<()> {
    if r1.kind() != r2.kind() {
        return Err(Error::AlgebraMismatch(r1.kind(), r2.kind()));
    }
    Ok(())
}

fn torus<M: Module + ?Sized>(r: &M) -> Vec<&Mat> {
    r.action_generators().into_iter().take(r.torus_len()).collect()
}

/// Basis of `{T : T r1(g) = r2(g) T}`; each `T` is `dim r2 x dim r1`.
pub fn hom_space<M: Module + ?Sized>(r1: &M, r2: &M) -> Result<Vec<Mat>> {
    same_algebra(r1, r2)?;
    let f = r1.field();
    let (d1, d2) = (r1.dim(), r2.dim());
    let (t1, t2) = (torus(r1), torus(r2));
    let diagonal = t1.iter().chain(&t2).all(|m| m.is_diagonal());
    // unknowns T[i][j], restricted to matching torus weights when possible
    let mut var = vec![None; d1 * d2];
    let mut unknowns = Vec::new();
    for i in 0..d2 {
        for j in 0..d1 {
            if !diagonal || t1.iter().zip(&t2).all(|(a, b)| a.get(j, j) == b.get(i, i)) {
                var[i * d1 + j] = Some(unknowns.len());
                unknowns.push((i, j));
            }
        }
    }
    let mut ech = SparseEchelon::new(f, unknowns.len());
    let (g1, g2) = (r1.action_generators(), r2.action_generators());
    let skip = if diagonal { t1.len() } else { 0 };
    for (a, b) in g1.iter().zip(&g2).skip(skip) {
        // (T a)[i][j] - (b T)[i][j]
        for i in 0..d2 {
            for j in 0..d1 {
                let mut row = Vec::new();
                for k in 0..d1 {
                    if let Some(v) = var[i * d1 + k] {
                        let x = a.get(k, j);
                        if !x.is_zero() {
                            row.push((v, x.clone()));
                        }
                    }
                }
                for k in 0..d2 {
                    if let Some(v) = var[k * d1 + j] {
                        let x = b.get(i, k);
                        if !x.is_zero() {
                            row.push((v, -x));
                        }
                    }
                }
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(ech
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut t = Mat::zeros(f, d2, d1);
            for (x, &(i, j)) in v.into_iter().zip(&unknowns) {
                t.set(i, j, x);
            }
            t
        })
        .collect())
}

/// `T r1(g) = r2(g) T` for every generator.
pub fn is_intertwiner<M: Module + ?Sized>(t: &Mat, r1: &M, r2: &M) -> bool {
    r1.kind() == r2.kind()
        && t.rows() == r2.dim()
        && t.cols() == r1.dim()
        && r1.action_generators().iter().zip(r2.action_generators()).all(|(a, b)| (t * a) == (b * t))
}

#[derive(Debug, Clone, Serialize)]
pub struct EndReport {
    pub dim: usize,
    /// Dimension of `End / rad End`, the rank of the trace form.
    pub semisimple_dim: usize,
    /// Every basis element of `End` is a scalar plus a nilpotent.
    pub scalar_plus_nilpotent: bool,
    pub local: bool,
}

/// Scalar `c` with `T - c` nilpotent, if any.
fn scalar_part(t: &Mat) -> Option<CycScalar> {
    let f = t.field();
    let c = t.trace() * f.int(t.rows() as i64).inv().ok()?;
    (t - &Mat::scalar(f, t.rows(), &c)).is_nilpotent().then_some(c)
}

/// The rank of `(S, T) -> tr(S T)` on `basis`.
fn trace_form_rank(f: &'static CycloField, basis: &[Mat]) -> usize {
    let n = basis.len();
    let gram = Mat::from_fn(f, n, n, |i, j| (&basis[i] * &basis[j]).trace());
    gram.rank()
}

pub fn endomorphism_report<M: Module + ?Sized>(r: &M) -> Result<EndReport> {
    let end = hom_space(r, r)?;
    let semisimple_dim = trace_form_rank(r.field(), &end);
    let scalar_plus_nilpotent = end.iter().all(|t| scalar_part(t).is_some());
    Ok(EndReport { dim: end.len(), semisimple_dim, scalar_plus_nilpotent, local: semisimple_dim == 1 })
}

/// `End(r)` is local: its semisimple quotient is one-dimensional, so no
/// nontrivial idempotent exists (even after extending scalars).
pub fn is_indecomposable<M: Module + ?Sized>(r: &M) -> bool {
    r.dim() > 0 && endomorphism_report(r).is_ok_and(|e| e.local)
}

/// The submodule generated by `v`: a basis of its span under the action.
pub fn spin<M: Module + ?Sized>(r: &M, v: &[CycScalar]) -> Vec<Vec<CycScalar>> {
    let f = r.field();
    let gens = r.action_generators();
    let mut ech = SparseEchelon::new(f, r.dim());
    let mut basis = Vec::new();
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if ech.insert(w.iter().cloned().enumerate()) {
            for g in &gens {
                queue.push(g.mul_vec(&w));
            }
            basis.push(w);
        }
    }
    basis
}

/// Dimension of the algebra generated by the action matrices.
pub fn action_algebra_dim<M: Module + ?Sized>(r: &M) -> usize {
    let f = r.field();
    let d = r.dim();
    let gens = r.action_generators();
    let mut ech = SparseEchelon::new(f, d * d);
    let mut queue = vec![Mat::identity(f, d)];
    while let Some(m) = queue.pop() {
        if ech.insert(m.entries().iter().cloned().enumerate()) {
            if ech.rank() == d * d {
                break;
            }
            for g in &gens {
                queue.push(*g * &m);
            }
        }
    }
    ech.rank()
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplicityReport {
    pub simple: bool,
    /// Basis of a proper nonzero submodule, when one is found by spinning a
    /// standard basis vector.
    pub witness: Option<Vec<Vec<CycScalar>>>,
    pub algebra_dim: usize,
}

/// Absolute simplicity: the action generates all of `End(V)` (Burnside).
/// Spinning the standard basis vectors supplies a submodule witness for
/// non-simple modules when one of them generates a proper submodule.
pub fn simplicity_report<M: Module + ?Sized>(r: &M) -> SimplicityReport {
    let d = r.dim();
    let f = r.field();
    let algebra_dim = action_algebra_dim(r);
    let mut witness = None;
    for i in 0..d {
        let mut e = vec![f.zero(); d];
        e[i] = f.one();
        let sub = spin(r, &e);
        if sub.len() < d {
            witness = Some(sub);
            break;
        }
    }
    SimplicityReport { simple: d > 0 && algebra_dim == d * d, witness, algebra_dim }
}

pub fn is_simple<M: Module + ?Sized>(r: &M) -> bool {
    r.dim() > 0 && action_algebra_dim(r) == r.dim() * r.dim()
}

/// An invertible intertwiner `r1 -> r2`, if one exists.
pub fn find_isomorphism<M: Module + ?Sized>(r1: &M, r2: &M) -> Result<Option<Mat>> {
    if r1.dim() != r2.dim() {
        same_algebra(r1, r2)?;
        return Ok(None);
    }
    let basis = hom_space(r1, r2)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let f = r1.field();
    let d = r1.dim();
    let combine = |c: &[i64]| {
        let mut t = Mat::zeros(f, d, d);
        for (b, &x) in basis.iter().zip(c) {
            if x != 0 {
                t = &t + &b.scale(&f.int(x));
            }
        }
        t
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let c: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-9..=9)).collect();
        let t = combine(&c);
        if t.rank() == d {
            return Ok(Some(t));
        }
    }
    if basis.len() <= 3 {
        let vals = [0, 1, -1, 2, -2, 3];
        let mut c = vec![0usize; basis.len()];
        loop {
            let coeffs: Vec<i64> = c.iter().map(|&i| vals[i]).collect();
            let t = combine(&coeffs);
            if t.rank() == d {
                return Ok(Some(t));
            }
            let mut k = 0;
            while k < c.len() {
                c[k] += 1;
                if c[k] < vals.len() {
                    break;
                }
                c[k] = 0;
                k += 1;
            }
            if k == c.len() {
                break;
            }
        }
    }
    Ok(None)
}

pub fn are_isomorphic<M: Module + ?Sized>(r1: &M, r2: &M) -> Result<bool> {
    Ok(find_isomorphism(r1, r2)?.is_some())
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceReport {
    pub injective: bool,
    pub surjective: bool,
    pub composite_zero: bool,
    pub exact: bool,
    pub split: bool,
}

/// `0 -> A -i-> B -p-> C -> 0`.
pub fn check_exact_sequence<M: Module + ?Sized>(i: &Mat, p: &Mat, a: &M, b: &M, c: &M) -> Result<SequenceReport> {
    if !is_intertwiner(i, a, b) {
        return Err(Error::NotIntertwiner("i: A -> B".into()));
    }
    if !is_intertwiner(p, b, c) {
        return Err(Error::NotIntertwiner("p: B -> C".into()));
    }
    let injective = i.rank() == a.dim();
    let surjective = p.rank() == c.dim();
    let composite_zero = (p * i).is_zero();
    let exact = injective && surjective && composite_zero && a.dim() + c.dim() == b.dim();
    // a section s: C -> B with p s = 1
    let sections = hom_space(c, b)?;
    let f = b.field();
    let dc = c.dim();
    let cols: Vec<Vec<CycScalar>> = sections.iter().map(|s| (p * s).entries().to_vec()).collect();
    let split = if cols.is_empty() {
        dc == 0
    } else {
        let m = Mat::from_columns(f, dc * dc, &cols);
        m.solve_linear(Mat::identity(f, dc).entries())?.is_some()
    };
    Ok(SequenceReport { injective, surjective, composite_zero, exact, split })
}

/// The matrix of the linear map sending basis vector `j` of the source to
/// `images[j]`, a list of `(target index, coefficient)` pairs.
pub fn map_from_images(f: &'static CycloField, rows: usize, images: &[Vec<(usize, CycScalar)>]) -> Mat {
    let mut m = Mat::zeros(f, rows, images.len());
    for (j, img) in images.iter().enumerate() {
        for (i, c) in img {
            let v = m.get(*i, j) + c;
            m.set(*i, j, v);
        }
    }
    m
}

#[cfg(test)]
mod tests;
