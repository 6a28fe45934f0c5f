//! Explicit matrix modules for `D_qB` and the small quantum group.

mod families;
mod shadow;

pub use shadow::{h_p_of_p, is_semiweight, is_weight, semiweight_ab, shadow, ShadowDqB};

use crate::cyclofield::{CycScalar, CycloField, ScalarInput};
use crate::exactlin::Mat;
use crate::presentations::{AlgebraId, NFElement};
use crate::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    V,
    Vtilde,
    S,
    P,
    Ptilde,
    Pproj,
    OmegaPlus,
    OmegaMinus,
    Mfam,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::V,
        Family::Vtilde,
        Family::S,
        Family::P,
        Family::Ptilde,
        Family::Pproj,
        Family::OmegaPlus,
        Family::OmegaMinus,
        Family::Mfam,
    ];
}

/// A point of `CP^1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjPoint {
    Finite(CycScalar),
    Infinity,
}

impl ProjPoint {
    /// `(z1 : z2)`, with `z2 = 0` giving infinity.
    pub fn from_homogeneous(z1: &CycScalar, z2: &CycScalar) -> Result<ProjPoint> {
        if z2.is_zero() {
            if z1.is_zero() {
                return Err(Error::InvalidParams("(0:0) is not a point of CP^1".into()));
            }
            return Ok(ProjPoint::Infinity);
        }
        Ok(ProjPoint::Finite(z1 / z2))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(z) => write!(f, "{z}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProjPoint::Finite(z) => z.serialize(s),
            ProjPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

/// Which transcription of a definition to use. `Printed` reproduces the
/// formulas verbatim, including index slips; `Corrected` is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Transcription {
    #[default]
    Corrected,
    Printed,
}

/// A family member with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub lambda: Option<CycScalar>,
    pub mu: Option<CycScalar>,
    pub a: Option<CycScalar>,
    pub b: Option<CycScalar>,
    pub c: Option<CycScalar>,
    pub eps: i64,
    pub n: i64,
    pub k: usize,
    pub point: Option<ProjPoint>,
    pub transcription: Transcription,
}

impl FamilySpec {
    fn bare(family: Family) -> FamilySpec {
        FamilySpec {
            family,
            lambda: None,
            mu: None,
            a: None,
            b: None,
            c: None,
            eps: 1,
            n: 0,
            k: 0,
            point: None,
            transcription: Transcription::Corrected,
        }
    }

    pub fn v(lambda: CycScalar, mu: CycScalar, a: CycScalar, b: CycScalar) -> FamilySpec {
        FamilySpec { lambda: Some(lambda), mu: Some(mu), a: Some(a), b: Some(b), ..Self::bare(Family::V) }
    }

    pub fn vtilde(lambda: CycScalar, mu: CycScalar, c: CycScalar) -> FamilySpec {
        FamilySpec { lambda: Some(lambda), mu: Some(mu), c: Some(c), ..Self::bare(Family::Vtilde) }
    }

    pub fn s(mu: CycScalar, eps: i64, n: i64) -> FamilySpec {
        FamilySpec { mu: Some(mu), eps, n, ..Self::bare(Family::S) }
    }

    pub fn p(lambda: CycScalar, mu: CycScalar, a: CycScalar, b: CycScalar) -> FamilySpec {
        FamilySpec { lambda: Some(lambda), mu: Some(mu), a: Some(a), b: Some(b), ..Self::bare(Family::P) }
    }

    pub fn ptilde(lambda: CycScalar, mu: CycScalar, c: CycScalar) -> FamilySpec {
        FamilySpec { lambda: Some(lambda), mu: Some(mu), c: Some(c), ..Self::bare(Family::Ptilde) }
    }

    pub fn pproj(mu: CycScalar, eps: i64, n: i64) -> FamilySpec {
        FamilySpec { mu: Some(mu), eps, n, ..Self::bare(Family::Pproj) }
    }

    /// `Omega^{k}`.
    pub fn omega_plus(mu: CycScalar, eps: i64, n: i64, k: usize) -> FamilySpec {
        FamilySpec { mu: Some(mu), eps, n, k, ..Self::bare(Family::OmegaPlus) }
    }

    /// `Omega^{-k}`.
    pub fn omega_minus(mu: CycScalar, eps: i64, n: i64, k: usize) -> FamilySpec {
        FamilySpec { mu: Some(mu), eps, n, k, ..Self::bare(Family::OmegaMinus) }
    }

    /// `M^k(point)`.
    pub fn m(mu: CycScalar, eps: i64, n: i64, k: usize, point: ProjPoint) -> FamilySpec {
        FamilySpec { mu: Some(mu), eps, n, k, point: Some(point), ..Self::bare(Family::Mfam) }
    }

    pub fn printed(mut self) -> FamilySpec {
        self.transcription = Transcription::Printed;
        self
    }

    fn get(&self, v: &Option<CycScalar>, name: &str) -> Result<CycScalar> {
        v.clone().ok_or_else(|| Error::InvalidParams(format!("{:?} needs parameter {name}", self.family)))
    }

    fn nonzero(&self, v: &Option<CycScalar>, name: &str) -> Result<CycScalar> {
        let x = self.get(v, name)?;
        if x.is_zero() {
            return Err(Error::InvalidParams(format!("{:?} needs {name} != 0", self.family)));
        }
        Ok(x)
    }

    /// The field of the first scalar parameter.
    pub fn field(&self) -> Result<&'static CycloField> {
        [&self.mu, &self.lambda, &self.a, &self.b, &self.c]
            .iter()
            .find_map(|v| v.as_ref().map(CycScalar::field))
            .or_else(|| match &self.point {
                Some(ProjPoint::Finite(z)) => Some(z.field()),
                _ => None,
            })
            .ok_or_else(|| Error::InvalidParams("spec has no scalar parameters".into()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("family".into(), serde_json::json!(self.family));
        for (k, v) in [("lambda", &self.lambda), ("mu", &self.mu), ("a", &self.a), ("b", &self.b), ("c", &self.c)] {
            if let Some(x) = v {
                m.insert(k.into(), serde_json::json!(x));
            }
        }
        if matches!(self.family, Family::S | Family::Pproj | Family::OmegaPlus | Family::OmegaMinus | Family::Mfam) {
            m.insert("eps".into(), self.eps.into());
            m.insert("n".into(), self.n.into());
        }
        if self.k > 0 {
            m.insert("k".into(), self.k.into());
        }
        match &self.point {
            Some(ProjPoint::Finite(z)) => {
                m.insert("point".into(), serde_json::json!(z));
            }
            Some(ProjPoint::Infinity) => {
                m.insert("point".into(), "inf".into());
            }
            None => {}
        }
        if self.transcription == Transcription::Printed {
            m.insert("printed".into(), true.into());
        }
        serde_json::Value::Object(m)
    }

    pub fn from_json(v: &serde_json::Value, field: &'static CycloField) -> Result<FamilySpec> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            family: Family,
            lambda: Option<ScalarInput>,
            mu: Option<ScalarInput>,
            a: Option<ScalarInput>,
            b: Option<ScalarInput>,
            c: Option<ScalarInput>,
            #[serde(default = "one")]
            eps: i64,
            #[serde(default)]
            n: i64,
            #[serde(default)]
            k: usize,
            point: Option<serde_json::Value>,
            #[serde(default)]
            printed: bool,
        }
        fn one() -> i64 {
            1
        }
        let r: Repr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let conv = |x: &Option<ScalarInput>| x.as_ref().map(|s| s.to_scalar(field)).transpose();
        let point = match r.point {
            None => None,
            Some(serde_json::Value::String(s)) if s == "inf" || s == "infinity" => Some(ProjPoint::Infinity),
            Some(p) => {
                let s: ScalarInput = serde_json::from_value(p).map_err(|e| Error::Parse(e.to_string()))?;
                Some(ProjPoint::Finite(s.to_scalar(field)?))
            }
        };
        Ok(FamilySpec {
            family: r.family,
            lambda: conv(&r.lambda)?,
            mu: conv(&r.mu)?,
            a: conv(&r.a)?,
            b: conv(&r.b)?,
            c: conv(&r.c)?,
            eps: r.eps,
            n: r.n,
            k: r.k,
            point,
            transcription: if r.printed { Transcription::Printed } else { Transcription::Corrected },
        })
    }
}

/// A finite-dimensional module: one matrix per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatRep {
    algebra: AlgebraId,
    field: &'static CycloField,
    dim: usize,
    gens: BTreeMap<String, Mat>,
    pub meta: Option<FamilySpec>,
    /// Warnings raised during construction, e.g. `not_semiweight`.
    pub flags: Vec<String>,
}

impl MatRep {
    /// Generator names of a module over `alg`, inverses included.
    pub fn generator_names(alg: AlgebraId) -> &'static [&'static str] {
        match alg {
            AlgebraId::DqB => &["Kh", "Khi", "Lh", "Lhi", "E", "F"],
            AlgebraId::UqSl2Small => &["kh", "khi", "E", "F"],
            _ => &[],
        }
    }

    /// Assemble from generator matrices; inverse torus matrices are computed
    /// when missing.
    pub fn new(alg: AlgebraId, mut gens: BTreeMap<String, Mat>) -> Result<MatRep> {
        let names = Self::generator_names(alg);
        if names.is_empty() {
            return Err(Error::Unsupported(format!("no matrix modules for {alg}")));
        }
        for (g, gi) in [("Kh", "Khi"), ("Lh", "Lhi"), ("kh", "khi")] {
            if names.contains(&g) && !gens.contains_key(gi) {
                let m = gens.get(g).ok_or_else(|| Error::InvalidParams(format!("missing generator {g}")))?;
                let inv = m.inverse().ok_or_else(|| Error::InvalidParams(format!("{g} is not invertible")))?;
                gens.insert(gi.to_string(), inv);
            }
        }
        let first =
            gens.get(names[0]).ok_or_else(|| Error::InvalidParams(format!("missing generator {}", names[0])))?;
        let dim = first.rows();
        let field = first.field();
        for n in names {
            let m = gens.get(*n).ok_or_else(|| Error::InvalidParams(format!("missing generator {n}")))?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!("generator {n} is {}x{}, expected {dim}", m.rows(), m.cols())));
            }
        }
        gens.retain(|k, _| names.contains(&k.as_str()));
        Ok(MatRep { algebra: alg, field, dim, gens, meta: None, flags: Vec::new() })
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen(&self, name: &str) -> &Mat {
        &self.gens[name]
    }

    pub fn gens(&self) -> &BTreeMap<String, Mat> {
        &self.gens
    }

    /// Matrices of the algebra generators without the inverses, in a fixed
    /// order; these suffice for intertwiner and submodule computations.
    pub fn action_generators(&self) -> Vec<&Mat> {
        let names: &[&str] = match self.algebra {
            AlgebraId::DqB => &["Kh", "Lh", "E", "F"],
            _ => &["kh", "E", "F"],
        };
        names.iter().map(|n| &self.gens[*n]).collect()
    }

    /// Replace one generator matrix; used for mutation tests.
    pub fn with_generator(&self, name: &str, m: Mat) -> Result<MatRep> {
        let mut gens = self.gens.clone();
        gens.insert(name.to_string(), m);
        let mut out = MatRep::new(self.algebra, gens)?;
        out.meta = self.meta.clone();
        Ok(out)
    }

    /// Block direct sum.
    pub fn direct_sum(&self, other: &MatRep) -> Result<MatRep> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch(self.algebra.to_string(), other.algebra.to_string()));
        }
        let gens = self.gens.iter().map(|(k, m)| (k.clone(), Mat::block_diag(m, &other.gens[k]))).collect();
        MatRep::new(self.algebra, gens)
    }

    /// Change of basis `T^{-1} rho T`; the columns of `t` are the new basis.
    pub fn conjugate(&self, t: &Mat) -> Result<MatRep> {
        let ti = t.inverse().ok_or_else(|| Error::InvalidParams("change of basis is singular".into()))?;
        let gens = self.gens.iter().map(|(k, m)| (k.clone(), &(&ti * m) * t)).collect();
        MatRep::new(self.algebra, gens)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: serde_json::Map<String, serde_json::Value> =
            self.gens.iter().map(|(k, m)| (k.clone(), serde_json::json!(m))).collect();
        serde_json::json!({
            "algebra": self.algebra,
            "dim": self.dim,
            "gens": gens,
            "meta": self.meta.as_ref().map(FamilySpec::to_json),
            "flags": self.flags,
        })
    }
}

/// Build the module of a family member.
pub fn build_module(spec: &FamilySpec) -> Result<MatRep> {
    let mut rep = families::build(spec)?;
    rep.meta = Some(spec.clone());
    Ok(rep)
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationResult {
    pub relation: String,
    pub pass: bool,
    /// First offending entry `(row, col)` of `lhs - rhs`.
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub algebra: AlgebraId,
    pub dim: usize,
    pub checks: Vec<RelationResult>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.relation.as_str()).collect()
    }
}

fn check(out: &mut Vec<RelationResult>, name: &str, lhs: &Mat, rhs: &Mat) {
    let d = lhs - rhs;
    let mut witness = None;
    'outer: for i in 0..d.rows() {
        for j in 0..d.cols() {
            if !d.get(i, j).is_zero() {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    out.push(RelationResult { relation: name.to_string(), pass: witness.is_none(), witness });
}

/// Every defining relation as an exact matrix identity.
pub fn verify_relations(rep: &MatRep) -> RelationReport {
    let f = rep.field;
    let g = |n: &str| rep.gen(n);
    let id = Mat::identity(f, rep.dim);
    let q = f.q();
    let qi = f.q_pow(-1);
    let inv_d = f.q_diff().inv().expect("q - q^-1 invertible");
    let mut out = Vec::new();
    match rep.algebra {
        AlgebraId::DqB => {
            check(&mut out, "Kh Khi = 1", &(g("Kh") * g("Khi")), &id);
            check(&mut out, "Khi Kh = 1", &(g("Khi") * g("Kh")), &id);
            check(&mut out, "Lh Lhi = 1", &(g("Lh") * g("Lhi")), &id);
            check(&mut out, "Lhi Lh = 1", &(g("Lhi") * g("Lh")), &id);
            check(&mut out, "Kh Lh = Lh Kh", &(g("Kh") * g("Lh")), &(g("Lh") * g("Kh")));
            check(&mut out, "E Kh = q^-1 Kh E", &(g("E") * g("Kh")), &(g("Kh") * g("E")).scale(&qi));
            check(&mut out, "E Lh = q Lh E", &(g("E") * g("Lh")), &(g("Lh") * g("E")).scale(&q));
            check(&mut out, "F Kh = q Kh F", &(g("F") * g("Kh")), &(g("Kh") * g("F")).scale(&q));
            check(&mut out, "F Lh = q^-1 Lh F", &(g("F") * g("Lh")), &(g("Lh") * g("F")).scale(&qi));
            let k = g("Kh") * g("Kh");
            let l = g("Lh") * g("Lh");
            check(
                &mut out,
                "EF - FE = (K - L)/(q - q^-1)",
                &(&(g("E") * g("F")) - &(g("F") * g("E"))),
                &(&k - &l).scale(&inv_d),
            );
        }
        AlgebraId::UqSl2Small => {
            let n = f.order() as u64;
            check(&mut out, "kh khi = 1", &(g("kh") * g("khi")), &id);
            check(&mut out, "E kh = q^-1 kh E", &(g("E") * g("kh")), &(g("kh") * g("E")).scale(&qi));
            check(&mut out, "F kh = q kh F", &(g("F") * g("kh")), &(g("kh") * g("F")).scale(&q));
            let k = g("kh") * g("kh");
            let ki = g("khi") * g("khi");
            check(
                &mut out,
                "EF - FE = (k - k^-1)/(q - q^-1)",
                &(&(g("E") * g("F")) - &(g("F") * g("E"))),
                &(&k - &ki).scale(&inv_d),
            );
            let z = Mat::zeros(f, rep.dim, rep.dim);
            check(&mut out, "E^N = 0", &g("E").pow(n), &z);
            check(&mut out, "F^N = 0", &g("F").pow(n), &z);
            check(&mut out, "k^{N/2} = 1", &g("kh").pow(n), &id);
        }
        _ => {}
    }
    RelationReport { algebra: rep.algebra, dim: rep.dim, checks: out }
}

/// The matrix of a normal-form element acting on the module.
pub fn evaluate(rep: &MatRep, x: &NFElement) -> Result<Mat> {
    if x.algebra() != rep.algebra {
        return Err(Error::AlgebraMismatch(x.algebra().to_string(), rep.algebra.to_string()));
    }
    let f = rep.field;
    let mut total = Mat::zeros(f, rep.dim, rep.dim);
    for (word, c) in x.word_terms() {
        let mut m = Mat::identity(f, rep.dim);
        for (name, e) in word {
            let base = if e < 0 { rep.gen(&format!("{name}i")) } else { rep.gen(name) };
            m = &m * &base.pow(e.unsigned_abs());
        }
        total = &total + &m.scale(&c);
    }
    Ok(total)
}

/// `u_q` module from a `D_qB` module with `H_bdry = eps mu^{-2}`:
/// `k^{1/2} = K^{1/2}/(eps mu)`, `E -> E/mu^2`, `F -> F`.
pub fn dqb_to_uq(rep: &MatRep, mu: &CycScalar, eps: i64) -> Result<MatRep> {
    if rep.algebra != AlgebraId::DqB {
        return Err(Error::AlgebraMismatch(rep.algebra.to_string(), "DqB".into()));
    }
    let f = rep.field;
    let em = mu * &f.int(eps);
    let emi = em.inv()?;
    let mu2i = (mu * mu).inv()?;
    let mut gens = BTreeMap::new();
    gens.insert("kh".to_string(), rep.gen("Kh").scale(&emi));
    gens.insert("khi".to_string(), rep.gen("Khi").scale(&em));
    gens.insert("E".to_string(), rep.gen("E").scale(&mu2i));
    gens.insert("F".to_string(), rep.gen("F").clone());
    MatRep::new(AlgebraId::UqSl2Small, gens)
}

/// `D_qB` module from a `u_q` module: `K^{1/2} = mu eps k^{1/2}`,
/// `L^{1/2} = mu k^{-1/2}`, `E -> mu^2 E`, `F -> F`.
pub fn uq_to_dqb(rep: &MatRep, mu: &CycScalar, eps: i64) -> Result<MatRep> {
    if rep.algebra != AlgebraId::UqSl2Small {
        return Err(Error::AlgebraMismatch(rep.algebra.to_string(), "UqSl2Small".into()));
    }
    if mu.is_zero() {
        return Err(Error::InvalidParams("mu must be nonzero".into()));
    }
    let f = rep.field;
    let em = mu * &f.int(eps);
    let mut gens = BTreeMap::new();
    gens.insert("Kh".to_string(), rep.gen("kh").scale(&em));
    gens.insert("Khi".to_string(), rep.gen("khi").scale(&em.inv()?));
    gens.insert("Lh".to_string(), rep.gen("khi").scale(mu));
    gens.insert("Lhi".to_string(), rep.gen("kh").scale(&mu.inv()?));
    gens.insert("E".to_string(), rep.gen("E").scale(&(mu * mu)));
    gens.insert("F".to_string(), rep.gen("F").clone());
    MatRep::new(AlgebraId::DqB, gens)
}

/// The `u_q` module of a family with `mu = eps = 1` (`S_n`, `P_n`, ...).
pub fn build_uq_module(spec: &FamilySpec) -> Result<MatRep> {
    let f = spec.field()?;
    let mut s = spec.clone();
    s.mu = Some(f.one());
    s.eps = 1;
    let rep = build_module(&s)?;
    let mut out = dqb_to_uq(&rep, &f.one(), 1)?;
    out.meta = Some(s);
    Ok(out)
}

/// A random admissible member of `family` over `f`.
pub fn random_spec<R: Rng + ?Sized>(f: &'static CycloField, family: Family, rng: &mut R) -> FamilySpec {
    let nn = f.order() as i64;
    let mut nz = || CycScalar::random_nonzero(f, rng, 2);
    let (lambda, mu, b) = (nz(), nz(), nz());
    let sign = |r: &mut R| if r.gen_bool(0.5) { 1 } else { -1 };
    match family {
        Family::V => FamilySpec::v(lambda, mu, CycScalar::random(f, rng, 2), CycScalar::random(f, rng, 2)),
        Family::Vtilde => FamilySpec::vtilde(lambda, mu, CycScalar::random(f, rng, 2)),
        Family::S => FamilySpec::s(mu, sign(rng), rng.gen_range(0..nn)),
        Family::P => {
            let m = rng.gen_range(1..=(nn - 1) / 2);
            let h = f.q_sym(m) * f.int(sign(rng));
            let ab = semiweight_ab(&lambda, &mu, &h).expect("nonzero parameters");
            let a = ab * b.inv().expect("b nonzero");
            FamilySpec::p(lambda, mu, a, b)
        }
        Family::Ptilde => {
            let m = rng.gen_range(1..=(nn - 1) / 2);
            let lambda = &mu * &f.q_pow(-m) * f.int(sign(rng));
            FamilySpec::ptilde(lambda, mu, b)
        }
        Family::Pproj => FamilySpec::pproj(mu, sign(rng), rng.gen_range(0..=nn - 2)),
        Family::OmegaPlus => FamilySpec::omega_plus(mu, sign(rng), rng.gen_range(0..=nn - 2), rng.gen_range(1..=2)),
        Family::OmegaMinus => FamilySpec::omega_minus(mu, sign(rng), rng.gen_range(0..=nn - 2), rng.gen_range(1..=2)),
        Family::Mfam => {
            let point =
                if rng.gen_bool(0.2) { ProjPoint::Infinity } else { ProjPoint::Finite(CycScalar::random(f, rng, 2)) };
            FamilySpec::m(mu, sign(rng), rng.gen_range(0..=nn - 2), rng.gen_range(1..=2), point)
        }
    }
}

#[cfg(test)]
mod tests;
