//! The small quantum group: the sums `phi_n`, the elements `gamma_n` and
//! the decomposition of the regular module.

use super::{AlgebraId, NFElement};
use crate::cyclofield::{CycScalar, CycloField};
use crate::exactlin::{Mat, SparseEchelon};
use crate::homlab::are_isomorphic;
use crate::repfactory::{build_uq_module, FamilySpec, MatRep};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

const U: AlgebraId = AlgebraId::UqSl2Small;

fn g(f: &'static CycloField, name: &str) -> NFElement {
    NFElement::generator(U, f, name).expect("u_q generator")
}

fn n_of(f: &CycloField) -> i64 {
    f.order() as i64
}

/// `phi_n = sum_{i mod N} q^{-n i} k^{i/2}`.
pub fn build_phi_n(f: &'static CycloField, n: i64) -> NFElement {
    let nn = n_of(f);
    let mut out = NFElement::zero(U, f);
    for i in 0..nn {
        let m = NFElement::monomial(U, vec![0, i, 0], f.q_pow(-n * i)).expect("normal monomial");
        out = out.add(&m);
    }
    out
}

/// PBW basis `F^a k^{i/2} E^b` in coordinate order `a N^2 + i N + b`.
pub fn uq_pbw_basis(f: &'static CycloField) -> Vec<Vec<i64>> {
    let nn = n_of(f);
    let mut out = Vec::new();
    for a in 0..nn {
        for i in 0..nn {
            for b in 0..nn {
                out.push(vec![a, i, b]);
            }
        }
    }
    out
}

fn index(f: &CycloField, m: &[i64]) -> usize {
    let nn = n_of(f);
    (m[0] * nn * nn + m[1] * nn + m[2]) as usize
}

/// Coordinates of an element in the PBW basis.
pub(crate) fn coords(x: &NFElement) -> Vec<CycScalar> {
    let f = x.field();
    let nn = n_of(f) as usize;
    let mut v = vec![f.zero(); nn * nn * nn];
    for (m, c) in x.terms() {
        v[index(f, m)] = c.clone();
    }
    v
}

/// `x_n = E^{nbar} F^{N-1} phi_n` with `nbar = N - 2 - n`.
pub fn x_n(f: &'static CycloField, n: i64) -> NFElement {
    let nn = n_of(f);
    g(f, "E").pow((nn - 2 - n) as u32).mul(&g(f, "F").pow((nn - 1) as u32)).mul(&build_phi_n(f, n))
}

/// The span `F^a phi_m E^b` with `a <= N-2`, as elements.
fn gamma_span(f: &'static CycloField) -> Vec<NFElement> {
    let nn = n_of(f);
    let mut out = Vec::new();
    for a in 0..nn - 1 {
        for m in 0..nn {
            for b in 0..nn {
                let x = g(f, "F").pow(a as u32).mul(&build_phi_n(f, m)).mul(&g(f, "E").pow(b as u32));
                out.push(x);
            }
        }
    }
    out
}

/// The unique `y` in `span(F^a phi_m E^b, a <= N-2)` with `F y = x`.
fn f_preimage(f: &'static CycloField, x: &NFElement) -> Result<NFElement> {
    let span = gamma_span(f);
    let fl = g(f, "F");
    let cols: Vec<Vec<CycScalar>> = span.iter().map(|y| coords(&fl.mul(y))).collect();
    let dim = cols[0].len();
    let a = Mat::from_columns(f, dim, &cols);
    if !a.kernel_basis().is_empty() {
        return Err(Error::Inconsistent("F y = x has a non-unique solution".into()));
    }
    let sol =
        a.solve_linear(&coords(x))?.ok_or_else(|| Error::Inconsistent("F y = x has no solution in the span".into()))?;
    let mut out = NFElement::zero(U, f);
    for (y, c) in span.iter().zip(&sol) {
        if !c.is_zero() {
            out = out.add(&y.scale(c));
        }
    }
    Ok(out)
}

/// The unique `gamma_n` in `span(F^a phi_m E^b, a <= N-2)` with
/// `F gamma_n = x_n`, for `0 <= n <= N-2`; `gamma_{N-1} = F^{N-1} phi_{N-1}`.
pub fn solve_gamma_n(f: &'static CycloField, n: i64) -> Result<NFElement> {
    let nn = n_of(f);
    if n == nn - 1 {
        return Ok(g(f, "F").pow((nn - 1) as u32).mul(&build_phi_n(f, nn - 1)));
    }
    if !(0..nn - 1).contains(&n) {
        return Err(Error::InvalidParams(format!("gamma_n needs 0 <= n <= N-1, got {n}")));
    }
    f_preimage(f, &x_n(f, n))
}

/// Index `m` with `phi_m` the projector onto `k^{1/2} = A^n`, i.e.
/// `q^m = A^n`: `m = n (N+1)/2 mod N`.
pub fn phi_index_for_weight(f: &CycloField, n: i64) -> i64 {
    let nn = n_of(f);
    (n * (nn + 1) / 2).rem_euclid(nn)
}

/// `gamma_n` built from the projector onto `k^{1/2} = A^n`, the top weight of
/// the module `P_n`.
pub fn gamma_n_weighted(f: &'static CycloField, n: i64) -> Result<NFElement> {
    let nn = n_of(f);
    let phi = build_phi_n(f, phi_index_for_weight(f, n));
    let top = g(f, "F").pow((nn - 1) as u32).mul(&phi);
    if n == nn - 1 {
        return Ok(top);
    }
    if !(0..nn - 1).contains(&n) {
        return Err(Error::InvalidParams(format!("gamma_n needs 0 <= n <= N-1, got {n}")));
    }
    f_preimage(f, &g(f, "E").pow((nn - 2 - n) as u32).mul(&top))
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub n: i64,
    pub h: i64,
    pub dim: usize,
    pub expected_dim: usize,
    /// `P_n(h)` is isomorphic to `P_n` (to `S_{N-1}` when `n = N-1`).
    pub isomorphic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub ideals: Vec<IdealReport>,
    pub total_dim: usize,
    /// Rank of the union of all ideal bases.
    pub span_rank: usize,
    pub pass: bool,
}

/// The left ideal `u_q y` as a list of basis elements.
fn left_ideal(f: &'static CycloField, y: &NFElement) -> Vec<NFElement> {
    let nn = n_of(f) as usize;
    let mut ech = SparseEchelon::new(f, nn * nn * nn);
    let mut out = Vec::new();
    for m in uq_pbw_basis(f) {
        let z = NFElement::monomial(U, m, f.one()).expect("normal monomial").mul(y);
        if ech.insert(coords(&z).into_iter().enumerate()) {
            out.push(z);
        }
    }
    out
}

/// The left module structure on an ideal given by a basis.
fn ideal_module(f: &'static CycloField, basis: &[NFElement]) -> Result<MatRep> {
    let cols: Vec<Vec<CycScalar>> = basis.iter().map(coords).collect();
    let b = Mat::from_columns(f, cols[0].len(), &cols);
    let mut gens = BTreeMap::new();
    for name in ["kh", "E", "F"] {
        let g = g(f, name);
        let mut images = Vec::new();
        for x in basis {
            let c = b
                .solve_linear(&coords(&g.mul(x)))?
                .ok_or_else(|| Error::Inconsistent("ideal is not a left ideal".into()))?;
            images.push(c);
        }
        gens.insert(name.to_string(), Mat::from_columns(f, basis.len(), &images));
    }
    MatRep::new(U, gens)
}

/// `u_q = (+)_{n, h <= n} P_n(h)` with `P_n(h) = u_q gamma_n E^h`. With
/// `weighted` the elements `gamma_n` come from [`gamma_n_weighted`], otherwise
/// from [`solve_gamma_n`] with the printed `phi_n`.
pub fn uq_regular_decomposition_check(f: &'static CycloField, weighted: bool) -> Result<DecompositionReport> {
    let nn = n_of(f);
    let total = (nn * nn * nn) as usize;
    let mut ideals = Vec::new();
    let mut all = SparseEchelon::new(f, total);
    let mut total_dim = 0;
    for n in 0..nn {
        let gamma = if weighted { gamma_n_weighted(f, n)? } else { solve_gamma_n(f, n)? };
        let model = if n == nn - 1 {
            build_uq_module(&FamilySpec::s(f.one(), 1, n))?
        } else {
            build_uq_module(&FamilySpec::pproj(f.one(), 1, n))?
        };
        for h in 0..=n {
            let y = gamma.mul(&g(f, "E").pow(h as u32));
            let basis = left_ideal(f, &y);
            total_dim += basis.len();
            for z in &basis {
                all.insert(coords(z).into_iter().enumerate());
            }
            let module = ideal_module(f, &basis)?;
            ideals.push(IdealReport {
                n,
                h,
                dim: basis.len(),
                expected_dim: model.dim(),
                isomorphic: are_isomorphic(&module, &model)?,
            });
        }
    }
    let span_rank = all.rank();
    let pass =
        total_dim == total && span_rank == total && ideals.iter().all(|i| i.dim == i.expected_dim && i.isomorphic);
    Ok(DecompositionReport { ideals, total_dim, span_rank, pass })
}
