use crate::cyclofield::{CycScalar, CycloField};
use crate::exactlin::Mat;
use crate::homlab::{are_isomorphic, is_indecomposable, OpModule};
use crate::repfactory::{build_uq_module, FamilySpec, MatRep, ProjPoint};
use crate::{Error, Result};
use serde::Serialize;

/// A representation `X, Y: V_a -> V_b` of the Kronecker quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverRep {
    pub da: usize,
    pub db: usize,
    pub x: Mat,
    pub y: Mat,
}

impl QuiverRep {
    pub fn new(x: Mat, y: Mat) -> Result<QuiverRep> {
        if x.rows() != y.rows() || x.cols() != y.cols() {
            return Err(Error::Dimension("X and Y must have the same shape".into()));
        }
        Ok(QuiverRep { da: x.cols(), db: x.rows(), x, y })
    }

    pub fn field(&self) -> &'static CycloField {
        self.x.field()
    }

    /// The path-algebra module on `V_a + V_b`: the idempotent of `a` and the
    /// two arrows.
    pub fn to_module(&self) -> OpModule {
        let f = self.field();
        let d = self.da + self.db;
        let ea = Mat::from_fn(f, d, d, |i, j| if i == j && i < self.da { f.one() } else { f.zero() });
        let embed = |m: &Mat| {
            Mat::from_fn(
                f,
                d,
                d,
                |i, j| if i >= self.da && j < self.da { m.get(i - self.da, j).clone() } else { f.zero() },
            )
        };
        OpModule::new("kronecker quiver", f, d, vec![ea, embed(&self.x), embed(&self.y)], 1).expect("square operators")
    }

    /// For `da = db`: the point `lambda` with `Y = lambda X` up to a
    /// nilpotent, or infinity when `X` is singular.
    pub fn parameter(&self) -> Option<ProjPoint> {
        if self.da != self.db || self.da == 0 {
            return None;
        }
        let f = self.field();
        match self.x.inverse() {
            Some(xi) => {
                let t = &xi * &self.y;
                Some(ProjPoint::Finite(t.trace() * f.int(self.da as i64).inv().ok()?))
            }
            None => Some(ProjPoint::Infinity),
        }
    }
}

fn jordan(f: &'static CycloField, k: usize, lambda: &CycScalar) -> Mat {
    Mat::from_fn(f, k, k, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            f.one()
        } else {
            f.zero()
        }
    })
}

/// The indecomposable for the positive root `(da, db)`; imaginary roots take
/// a point of `CP^1`.
pub fn kronecker_build(f: &'static CycloField, da: usize, db: usize, point: Option<&ProjPoint>) -> Result<QuiverRep> {
    // identity block shifted by `shift` along the longer side
    let unit = |r: usize, c: usize, shift: usize| {
        Mat::from_fn(
            f,
            r,
            c,
            |i, j| if (r < c && j == i + shift) || (r > c && i == j + shift) { f.one() } else { f.zero() },
        )
    };
    // (1,0) and (0,1) fall under the real roots with empty maps
    match (da, db) {
        (0, 0) => Err(Error::InvalidParams("(0,0) is not a positive root".into())),
        (a, b) if a == b + 1 => QuiverRep::new(unit(b, a, 0), unit(b, a, 1)),
        (a, b) if b == a + 1 => QuiverRep::new(unit(b, a, 0), unit(b, a, 1)),
        (a, b) if a == b => match point.ok_or_else(|| Error::InvalidParams("imaginary root needs a point".into()))? {
            ProjPoint::Finite(l) => QuiverRep::new(Mat::identity(f, a), jordan(f, a, l)),
            ProjPoint::Infinity => QuiverRep::new(jordan(f, a, &f.zero()), Mat::identity(f, a)),
        },
        _ => Err(Error::InvalidParams(format!("({da},{db}) is not a positive root"))),
    }
}

/// The `u_q` module on `V_a (x) S_n + V_b (x) S_nbar` with
/// `E (v (x) e_0) += X v (x) ebar_nbar` and `F (v (x) e_n) += Y v (x) ebar_0`.
pub fn glue_quiver_rep(n: i64, q: &QuiverRep) -> Result<MatRep> {
    let f = q.field();
    let nn = f.order() as i64;
    if !(0..=nn - 2).contains(&n) {
        return Err(Error::InvalidParams(format!("n must lie in 0..={}", nn - 2)));
    }
    let nb = nn - 2 - n;
    let s = build_uq_module(&FamilySpec::s(f.one(), 1, n))?;
    let sb = build_uq_module(&FamilySpec::s(f.one(), 1, nb))?;
    let blocks: Vec<&MatRep> = std::iter::repeat_n(&s, q.da).chain(std::iter::repeat_n(&sb, q.db)).collect();
    let (first, rest) = blocks.split_first().ok_or_else(|| Error::InvalidParams("empty quiver rep".into()))?;
    let mut rep = (*first).clone();
    for b in rest {
        rep = rep.direct_sum(b)?;
    }
    let (w, wb) = (n as usize + 1, nb as usize + 1);
    let e_idx = |i: usize, j: usize| j * w + i;
    let eb_idx = |i: usize, j: usize| q.da * w + j * wb + i;
    let mut e = rep.gen("E").clone();
    let mut fm = rep.gen("F").clone();
    for c in 0..q.da {
        for r in 0..q.db {
            let (x, y) = (q.x.get(r, c), q.y.get(r, c));
            let (ei, ej) = (eb_idx(nb as usize, r), e_idx(0, c));
            e.set(ei, ej, e.get(ei, ej) + x);
            let (fi, fj) = (eb_idx(0, r), e_idx(n as usize, c));
            fm.set(fi, fj, fm.get(fi, fj) + y);
        }
    }
    rep.with_generator("E", e)?.with_generator("F", fm)
}

#[derive(Debug, Clone, Serialize)]
pub struct QuiverClass {
    pub dim_vector: (usize, usize),
    pub parameter: Option<ProjPoint>,
    pub representative: QuiverRep,
}

#[derive(Debug, Clone, Serialize)]
pub struct BruteforceReport {
    pub probe_entries: Vec<i64>,
    pub examined: usize,
    pub classes: Vec<QuiverClass>,
    pub dimension_vectors: Vec<(usize, usize)>,
    /// Every dimension vector found satisfies `(da - db)^2 <= 1`.
    pub all_roots: bool,
}

fn all_matrices(f: &'static CycloField, rows: usize, cols: usize, probes: &[i64]) -> Vec<Mat> {
    let cells = rows * cols;
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells];
    loop {
        out.push(Mat::from_fn(f, rows, cols, |i, j| f.int(probes[idx[i * cols + j]])));
        let mut k = 0;
        while k < cells {
            idx[k] += 1;
            if idx[k] < probes.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == cells {
            return out;
        }
    }
}

/// Enumerates all quiver representations with entries in `{0, 1, -1}` and
/// `da + db <= max_total_dim`, keeps the absolutely indecomposable ones and
/// groups them up to isomorphism.
pub fn kronecker_bruteforce(f: &'static CycloField, max_total_dim: usize) -> Result<BruteforceReport> {
    if max_total_dim > 4 {
        return Err(Error::InvalidParams("brute force is limited to total dimension 4".into()));
    }
    let probes = vec![0, 1, -1];
    let mut classes: Vec<(QuiverClass, OpModule)> = Vec::new();
    let mut examined = 0;
    for total in 1..=max_total_dim {
        for da in 0..=total {
            let db = total - da;
            let mats = all_matrices(f, db, da, &probes);
            for x in &mats {
                for y in &mats {
                    examined += 1;
                    let q = QuiverRep::new(x.clone(), y.clone())?;
                    let m = q.to_module();
                    if !is_indecomposable(&m) {
                        continue;
                    }
                    let mut known = false;
                    for (c, cm) in &classes {
                        if c.dim_vector == (da, db) && c.parameter == q.parameter() && are_isomorphic(cm, &m)? {
                            known = true;
                            break;
                        }
                    }
                    if !known {
                        let class = QuiverClass { dim_vector: (da, db), parameter: q.parameter(), representative: q };
                        classes.push((class, m));
                    }
                }
            }
        }
    }
    let mut dimension_vectors: Vec<_> = classes.iter().map(|(c, _)| c.dim_vector).collect();
    dimension_vectors.sort();
    dimension_vectors.dedup();
    let all_roots = dimension_vectors.iter().all(|&(a, b)| (a as i64 - b as i64).pow(2) <= 1);
    Ok(BruteforceReport {
        probe_entries: probes,
        examined,
        classes: classes.into_iter().map(|(c, _)| c).collect(),
        dimension_vectors,
        all_roots,
    })
}
