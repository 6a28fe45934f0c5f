//! Exact 2x2 toolkit for shadows: Bruhat cells, the gluing lift,
//! triangularization of four-matrix instances and shadow consistency.

use crate::cyclofield::{chebyshev_t, eval_int_poly, CycScalar, CycloField, ScalarInput};
use crate::exactlin::Mat;
use crate::repfactory::ShadowDqB;
use crate::{Error, Result};
use rand::Rng;
use serde::Serialize;

/// A determinant one 2x2 matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SL2Mat(Mat);

impl SL2Mat {
    pub fn new(m: Mat) -> Result<SL2Mat> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::Dimension(format!("expected 2x2, got {}x{}", m.rows(), m.cols())));
        }
        if !m.det().is_one() {
            return Err(Error::InvalidParams("determinant is not 1".into()));
        }
        Ok(SL2Mat(m))
    }

    pub fn from_entries(a: CycScalar, b: CycScalar, c: CycScalar, d: CycScalar) -> Result<SL2Mat> {
        let f = a.field();
        SL2Mat::new(Mat::from_rows(f, vec![vec![a, b], vec![c, d]])?)
    }

    pub fn identity(f: &'static CycloField) -> SL2Mat {
        SL2Mat(Mat::identity(f, 2))
    }

    /// `w = [[0, 1], [-1, 0]]`.
    pub fn w(f: &'static CycloField) -> SL2Mat {
        SL2Mat(Mat::from_int_rows(f, &[&[0, 1], &[-1, 0]]))
    }

    /// A random element of the big cell with entries bounded by `bound`.
    pub fn random_big_cell<R: Rng + ?Sized>(f: &'static CycloField, rng: &mut R, bound: i64) -> SL2Mat {
        let a = CycScalar::random_nonzero(f, rng, bound);
        let b = CycScalar::random(f, rng, bound);
        let c = CycScalar::random(f, rng, bound);
        let d = (f.one() + &b * &c) * a.inv().expect("nonzero");
        SL2Mat::from_entries(a, b, c, d).expect("det 1 by construction")
    }

    /// Random element with no zero entry.
    pub fn random_generic<R: Rng + ?Sized>(f: &'static CycloField, rng: &mut R, bound: i64) -> SL2Mat {
        loop {
            let m = SL2Mat::random_big_cell(f, rng, bound);
            if m.0.entries().iter().all(|x| !x.is_zero()) {
                return m;
            }
        }
    }

    /// Random upper triangular element.
    pub fn random_upper<R: Rng + ?Sized>(f: &'static CycloField, rng: &mut R, bound: i64) -> SL2Mat {
        let a = CycScalar::random_nonzero(f, rng, bound);
        let b = CycScalar::random(f, rng, bound);
        let d = a.inv().expect("nonzero");
        SL2Mat::from_entries(a, b, f.zero(), d).expect("det 1 by construction")
    }

    /// Parse `[[a, b], [c, d]]` with integer or coefficient-vector entries.
    pub fn from_json(v: &serde_json::Value, f: &'static CycloField) -> Result<SL2Mat> {
        let rows: Vec<Vec<ScalarInput>> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("2x2 matrix: {e}")))?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_scalar(f)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SL2Mat::new(Mat::from_rows(f, rows)?)
    }

    pub fn mat(&self) -> &Mat {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycScalar {
        self.0.get(i, j)
    }

    pub fn field(&self) -> &'static CycloField {
        self.0.field()
    }

    pub fn inverse(&self) -> SL2Mat {
        let m = &self.0;
        let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        SL2Mat(Mat::from_rows(self.field(), vec![vec![d.clone(), -b.clone()], vec![-c.clone(), a.clone()]]).unwrap())
    }

    pub fn mul(&self, other: &SL2Mat) -> SL2Mat {
        SL2Mat(&self.0 * &other.0)
    }

    pub fn neg(&self) -> SL2Mat {
        SL2Mat(-&self.0)
    }

    pub fn is_upper(&self) -> bool {
        self.0.is_upper_triangular()
    }

    /// Upper-left entry nonzero.
    pub fn in_big_cell(&self) -> bool {
        !self.entry(0, 0).is_zero()
    }

    pub fn trace(&self) -> CycScalar {
        self.0.trace()
    }
}

/// `M = M_- M_+` with `M_-` unit lower triangular and `M_+` upper triangular.
pub fn bruhat_factor(m: &SL2Mat) -> Result<(SL2Mat, SL2Mat)> {
    if !m.in_big_cell() {
        return Err(Error::NotBigCell);
    }
    let f = m.field();
    let a = m.entry(0, 0);
    let ai = a.inv()?;
    let lower = SL2Mat::from_entries(f.one(), f.zero(), m.entry(1, 0) * &ai, f.one())?;
    let upper = SL2Mat::from_entries(a.clone(), m.entry(0, 1).clone(), f.zero(), ai)?;
    Ok((lower, upper))
}

/// Writes a big-cell matrix as a product of two small-cell matrices:
/// `A = M_- w`, `B = -w M_+`.
pub fn gluing_lift(m: &SL2Mat) -> Result<(SL2Mat, SL2Mat)> {
    let (lower, upper) = bruhat_factor(m)?;
    let w = SL2Mat::w(m.field());
    Ok((lower.mul(&w), w.mul(&upper).neg()))
}

/// The solution space of the two homogeneous systems has no determinant one
/// element. `solutions` spans that space (as 2x2 matrices) and the
/// determinant vanishes identically on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerateInstance {
    pub solutions: Vec<Mat>,
}

impl DegenerateInstance {
    /// Recheck that `det` vanishes on the whole span, by checking the
    /// quadratic form and its polarization on the basis.
    pub fn certifies(&self) -> bool {
        let s = &self.solutions;
        (0..s.len()).all(|i| (i..s.len()).all(|j| det_polar(&s[i], &s[j]).is_zero()))
    }
}

fn det_polar(x: &Mat, y: &Mat) -> CycScalar {
    x.get(0, 0) * y.get(1, 1) + y.get(0, 0) * x.get(1, 1) - x.get(0, 1) * y.get(1, 0) - y.get(0, 1) * x.get(1, 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ProutOutcome {
    Solved { g: SL2Mat },
    Degenerate(DegenerateInstance),
}

/// The four products `A g`, `g^-1 B`, `D g^-1`, `g C` are all upper triangular.
pub fn prout_memberships(a: &SL2Mat, b: &SL2Mat, c: &SL2Mat, d: &SL2Mat, g: &SL2Mat) -> bool {
    let gi = g.inverse();
    a.mul(g).is_upper() && gi.mul(b).is_upper() && d.mul(&gi).is_upper() && g.mul(c).is_upper()
}

/// Find `g` in `SL_2` with `A g, g^-1 B, D g^-1, g C` upper triangular.
///
/// Requires `AB` upper triangular and one of `CD`, `DC` upper triangular.
/// A solution forces `DC = (D g^-1)(g C)` upper triangular, so instances
/// with only `CD` upper triangular generally come back `Degenerate`.
pub fn prout_solve(a: &SL2Mat, b: &SL2Mat, c: &SL2Mat, d: &SL2Mat) -> Result<ProutOutcome> {
    if !a.mul(b).is_upper() || !(c.mul(d).is_upper() || d.mul(c).is_upper()) {
        return Err(Error::Precondition("AB and CD (or DC) must be upper triangular".into()));
    }
    let f = a.field();
    let z = f.zero();
    // unknowns (g11, g12, g21, g22)
    let sys = Mat::from_rows(
        f,
        vec![
            vec![a.entry(1, 0).clone(), z.clone(), a.entry(1, 1).clone(), z.clone()],
            vec![b.entry(1, 0).clone(), z.clone(), -b.entry(0, 0).clone(), z.clone()],
            vec![z.clone(), z.clone(), c.entry(0, 0).clone(), c.entry(1, 0).clone()],
            vec![z.clone(), z.clone(), -d.entry(1, 1).clone(), d.entry(1, 0).clone()],
        ],
    )?;
    let kernel = sys.kernel_basis();
    let as_mat = |v: &[CycScalar]| Mat::from_rows(f, vec![v[..2].to_vec(), v[2..].to_vec()]).unwrap();
    let candidate = if let Some(v) = kernel.iter().find(|v| !v[2].is_zero()) {
        // g12 is unconstrained, so it absorbs the determinant
        let mut v = v.clone();
        v[1] = (&v[0] * &v[3] - f.one()) * v[2].inv()?;
        Some(v)
    } else {
        let has = |i: usize| kernel.iter().any(|v| !v[i].is_zero());
        (has(0) && has(3)).then(|| vec![f.one(), z.clone(), z.clone(), f.one()])
    };
    if let Some(v) = candidate {
        let g = SL2Mat::new(as_mat(&v))?;
        if prout_memberships(a, b, c, d, &g) {
            return Ok(ProutOutcome::Solved { g });
        }
    }
    let cert = DegenerateInstance { solutions: kernel.iter().map(|v| as_mat(v)).collect() };
    if !cert.certifies() {
        return Err(Error::Inconsistent("no solution found but determinant does not vanish".into()));
    }
    Ok(ProutOutcome::Degenerate(cert))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiClass {
    Cyclic,
    Semicyclic,
    Diagonal,
    Central,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub phi: SL2Mat,
    pub class: PhiClass,
    pub trace: CycScalar,
}

/// `phi(g) = g_-^{-1} g_+` and its class.
pub fn phi_of_shadow(g_plus: &Mat, g_minus: &Mat) -> Result<PhiReport> {
    let gp = SL2Mat::new(g_plus.clone())?;
    let gm = SL2Mat::new(g_minus.clone())?;
    if !gp.is_upper() || !g_minus.is_lower_triangular() {
        return Err(Error::InvalidParams("g_+ must be upper and g_- lower triangular".into()));
    }
    let phi = gm.inverse().mul(&gp);
    let m = phi.mat();
    let class = if m.scalar_value().is_some() {
        PhiClass::Central
    } else if m.is_diagonal() {
        PhiClass::Diagonal
    } else if m.is_upper_triangular() || m.is_lower_triangular() {
        PhiClass::Semicyclic
    } else {
        PhiClass::Cyclic
    };
    let trace = phi.trace();
    Ok(PhiReport { phi, class, trace })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    /// `T_N(h_p)`
    pub t_n_of_h_p: CycScalar,
    /// `-tr phi(g)`
    pub minus_trace: CycScalar,
    pub trace_relation: bool,
    /// `(g_- g_+)_{11} = h_bdry^N`
    pub boundary_plus_n: bool,
    /// `(g_- g_+)_{11} = h_bdry^{-N}`
    pub boundary_minus_n: bool,
}

impl ConsistencyReport {
    pub fn orientation(&self) -> Option<&'static str> {
        match (self.boundary_plus_n, self.boundary_minus_n) {
            (true, true) => Some("both"),
            (true, false) => Some("h^N"),
            (false, true) => Some("h^-N"),
            (false, false) => None,
        }
    }
}

pub fn shadow_consistency(sh: &ShadowDqB) -> Result<ConsistencyReport> {
    let f = sh.h_p.field();
    let n = f.order() as i64;
    let t_n_of_h_p = eval_int_poly(&chebyshev_t(n as usize), &sh.h_p);
    let phi = phi_of_shadow(&sh.g_plus, &sh.g_minus)?;
    let minus_trace = -phi.trace;
    let corner = (&sh.g_minus * &sh.g_plus).get(0, 0).clone();
    Ok(ConsistencyReport {
        trace_relation: t_n_of_h_p == minus_trace,
        t_n_of_h_p,
        minus_trace,
        boundary_plus_n: corner == sh.h_bdry.pow(n)?,
        boundary_minus_n: corner == sh.h_bdry.pow(-n)?,
    })
}

/// Boundary invariant of a glued surface: `h = h_1 h_2`.
pub fn glue_boundary_invariants(h1: &CycScalar, h2: &CycScalar) -> Result<CycScalar> {
    if h1.is_zero() || h2.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(h1 * h2)
}
