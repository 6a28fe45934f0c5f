use super::{evaluate, MatRep};
use crate::cyclofield::CycScalar;
use crate::exactlin::Mat;
use crate::presentations::{gamma_p, h_bdry, AlgebraId};
use crate::{Error, Result};
use serde::Serialize;

/// Classical shadow `(g_+, g_-, h_p, h_bdry)` of a `D_qB` module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowDqB {
    pub g_plus: Mat,
    pub g_minus: Mat,
    pub h_p: CycScalar,
    pub h_bdry: CycScalar,
}

impl ShadowDqB {
    /// `phi(g) = g_-^{-1} g_+`.
    pub fn phi(&self) -> Mat {
        &self.g_minus.inverse().expect("det g_- = 1") * &self.g_plus
    }
}

fn scalar_of(m: &Mat, what: &str) -> Result<CycScalar> {
    m.scalar_value().ok_or_else(|| Error::NotSemiweight(format!("{what} does not act as a scalar")))
}

fn frobenius(rep: &MatRep) -> Option<[Mat; 4]> {
    if rep.algebra() != AlgebraId::DqB {
        return None;
    }
    let n = rep.field().order() as u64;
    Some([rep.gen("Kh").pow(n), rep.gen("Lh").pow(n), rep.gen("E").pow(n), rep.gen("F").pow(n)])
}

fn gamma_matrix(rep: &MatRep) -> Result<Mat> {
    evaluate(rep, &gamma_p(rep.field()))
}

/// Shadow of a family member. Fails with `NotSemiweight` when a Frobenius
/// element is not scalar.
pub fn shadow(rep: &MatRep) -> Result<ShadowDqB> {
    let f = rep.field();
    let [kn, ln, en, fnn] =
        frobenius(rep).ok_or_else(|| Error::Unsupported(format!("shadow of a {} module", rep.algebra())))?;
    let kappa = scalar_of(&kn, "K^{N/2}")?;
    let ell = scalar_of(&ln, "L^{N/2}")?;
    let e = scalar_of(&en, "E^N")?;
    let fv = scalar_of(&fnn, "F^N")?;
    let dn = f.q_diff().pow(f.order() as i64)?;
    let (ki, li) = (kappa.inv()?, ell.inv()?);
    let z = f.zero();
    let g_plus = Mat::from_rows(f, vec![vec![ki.clone(), -(&dn * &e * &ki)], vec![z.clone(), kappa]])?;
    let g_minus = Mat::from_rows(f, vec![vec![li.clone(), z], vec![&dn * &li * &fv, ell]])?;
    let h = evaluate(rep, &h_bdry(f))?;
    let h_bdry = h.scalar_value().ok_or_else(|| Error::Inconsistent("H_bdry does not act as a scalar".into()))?;
    let gm = gamma_matrix(rep)?;
    let h_p = gm.trace() * f.int(rep.dim() as i64).inv()?;
    if !(&gm - &Mat::scalar(f, rep.dim(), &h_p)).is_nilpotent() {
        return Err(Error::Inconsistent("gamma_p has more than one eigenvalue".into()));
    }
    Ok(ShadowDqB { g_plus, g_minus, h_p, h_bdry })
}

/// `h_p(lambda, mu, ab) = -(q-q^{-1})^2 (lambda mu)^{-1} ab - lambda mu^{-1} q - mu lambda^{-1} q^{-1}`.
pub fn h_p_of_p(lambda: &CycScalar, mu: &CycScalar, ab: &CycScalar) -> Result<CycScalar> {
    let f = lambda.field();
    let d = f.q_diff();
    let lm = lambda * mu;
    let r = lambda * &mu.inv()?;
    Ok(-(&d * &d * ab * lm.inv()?) - &r * &f.q() - r.inv()? * f.q_pow(-1))
}

/// The product `ab` for which `P(lambda, mu, a, b)` has `h_p = h_target`.
pub fn semiweight_ab(lambda: &CycScalar, mu: &CycScalar, h_target: &CycScalar) -> Result<CycScalar> {
    let f = lambda.field();
    let d = f.q_diff();
    let r = lambda * &mu.inv()?;
    let inner = h_target + &(&r * &f.q()) + r.inv()? * f.q_pow(-1);
    Ok(-(lambda * mu * inner) * (&d * &d).inv()?)
}

/// All Frobenius elements act as scalars.
pub fn is_semiweight(rep: &MatRep) -> bool {
    frobenius(rep).is_some_and(|ms| ms.iter().all(|m| m.scalar_value().is_some()))
}

/// Semi-weight, and moreover `gamma_p` and `H_bdry` act as scalars.
pub fn is_weight(rep: &MatRep) -> bool {
    is_semiweight(rep)
        && gamma_matrix(rep).is_ok_and(|m| m.scalar_value().is_some())
        && evaluate(rep, &h_bdry(rep.field())).is_ok_and(|m| m.scalar_value().is_some())
}
