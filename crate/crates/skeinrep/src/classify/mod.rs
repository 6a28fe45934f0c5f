//! Colorings of punctures, the label-to-module map, Azumaya bookkeeping and
//! count checks, plus the Kronecker quiver and dual-number toy models that
//! drive the exceptional classification.

mod dual;
mod kronecker;

pub use dual::{dual_number_catalog, dual_one, dual_regular, jordan_certificate, DualCatalog, JordanBruteforce};
pub use kronecker::{glue_quiver_rep, kronecker_bruteforce, kronecker_build, BruteforceReport, QuiverClass, QuiverRep};

use crate::cyclofield::{CycScalar, CycloField, ScalarInput};
use crate::homlab::{are_isomorphic, is_simple};
use crate::repfactory::{build_module, is_weight, shadow, FamilySpec, MatRep, ProjPoint, ShadowDqB};
use crate::sl2kit::{phi_of_shadow, PhiClass};
use crate::{Error, Result};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

/// Direction of a real root: `Plus` is `(k+1, k)`, `Minus` is `(k, k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelTag {
    S,
    P,
    Real(usize, Direction),
    Imag(usize, ProjPoint),
}

/// An element of the doubled label set: a tag, possibly barred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaLabel {
    pub tag: LabelTag,
    pub bar: bool,
}

impl DeltaLabel {
    pub fn new(tag: LabelTag, bar: bool) -> Result<DeltaLabel> {
        if let LabelTag::Real(0, _) | LabelTag::Imag(0, _) = tag {
            return Err(Error::InvalidParams("root labels need k >= 1".into()));
        }
        Ok(DeltaLabel { tag, bar })
    }

    pub fn s() -> DeltaLabel {
        DeltaLabel { tag: LabelTag::S, bar: false }
    }

    pub fn p() -> DeltaLabel {
        DeltaLabel { tag: LabelTag::P, bar: false }
    }

    pub fn barred(mut self) -> DeltaLabel {
        self.bar = !self.bar;
        self
    }
}

impl fmt::Display for DeltaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tag {
            LabelTag::S => write!(f, "S")?,
            LabelTag::P => write!(f, "P")?,
            LabelTag::Real(k, Direction::Plus) => write!(f, "({},{})", k + 1, k)?,
            LabelTag::Real(k, Direction::Minus) => write!(f, "({},{})", k, k + 1)?,
            LabelTag::Imag(k, z) => write!(f, "(({k},{k}),{z})")?,
        }
        if self.bar {
            write!(f, "bar")?;
        }
        Ok(())
    }
}

impl Serialize for DeltaLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `P0`: generic, `P1`: trace `+-2` but not central, `P2`: central with
/// `h_p != -+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PunctureClass {
    P0,
    P1,
    P2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Puncture {
    pub class: PunctureClass,
    pub sign: i64,
    pub h_p: CycScalar,
    pub mu: CycScalar,
    pub eps: i64,
    pub n: i64,
}

impl Puncture {
    /// A `P2` puncture with the shadow of `S_{mu, eps, n}`.
    pub fn p2(mu: CycScalar, eps: i64, n: i64) -> Puncture {
        let f = mu.field();
        Puncture { class: PunctureClass::P2, sign: eps, h_p: -(f.q_sym(n + 1) * f.int(eps)), mu, eps, n }
    }

    pub fn p1(f: &'static CycloField, sign: i64, h_p: CycScalar) -> Puncture {
        Puncture { class: PunctureClass::P1, sign, h_p, mu: f.one(), eps: sign, n: 0 }
    }

    pub fn p0(f: &'static CycloField) -> Puncture {
        Puncture { class: PunctureClass::P0, sign: 1, h_p: f.zero(), mu: f.one(), eps: 1, n: 0 }
    }

    fn validate(&self) -> Result<()> {
        let f = self.mu.field();
        let nn = f.order() as i64;
        if self.sign.abs() != 1 || self.eps.abs() != 1 {
            return Err(Error::InvalidParams("sign and eps must be +-1".into()));
        }
        match self.class {
            PunctureClass::P2 => {
                if self.mu.is_zero() {
                    return Err(Error::InvalidParams("mu must be nonzero".into()));
                }
                if self.eps != self.sign {
                    return Err(Error::InvalidParams("a central puncture has phi(g) = eps".into()));
                }
                if !(0..=(nn - 3) / 2).contains(&self.n) {
                    return Err(Error::InvalidParams(format!("n must lie in 0..={}", (nn - 3) / 2)));
                }
                if self.h_p != -(f.q_sym(self.n + 1) * f.int(self.eps)) {
                    return Err(Error::InvalidParams("h_p must be -eps (q^{n+1} + q^{-n-1})".into()));
                }
            }
            PunctureClass::P1 => {
                if self.h_p == f.int(2) || self.h_p == f.int(-2) {
                    return Err(Error::InvalidParams("P1 punctures have h_p != +-2".into()));
                }
            }
            PunctureClass::P0 => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowSpec {
    pub punctures: Vec<Puncture>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PunctureJson {
    class: PunctureClass,
    #[serde(default = "one")]
    sign: i64,
    h_p: Option<ScalarInput>,
    mu: Option<ScalarInput>,
    eps: Option<i64>,
    #[serde(default)]
    n: i64,
}

fn one() -> i64 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ShadowSpecJson {
    punctures: Vec<PunctureJson>,
}

impl ShadowSpec {
    pub fn new(punctures: Vec<Puncture>) -> Result<ShadowSpec> {
        for p in &punctures {
            p.validate()?;
        }
        Ok(ShadowSpec { punctures })
    }

    /// `m` copies of the `P2` puncture of `S_{mu, eps, n}`.
    pub fn central(mu: &CycScalar, eps: i64, n: i64, m: usize) -> Result<ShadowSpec> {
        ShadowSpec::new(vec![Puncture::p2(mu.clone(), eps, n); m])
    }

    /// `m = |P2|`.
    pub fn m(&self) -> usize {
        self.punctures.iter().filter(|p| p.class == PunctureClass::P2).count()
    }

    /// Missing `h_p` is derived for `P2` punctures; missing `eps` defaults to
    /// `sign`, missing `mu` to 1.
    pub fn from_json(v: &serde_json::Value, f: &'static CycloField) -> Result<ShadowSpec> {
        let raw: ShadowSpecJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("shadow spec: {e}")))?;
        let mut out = Vec::new();
        for p in raw.punctures {
            let mu = p.mu.map(|x| x.to_scalar(f)).transpose()?.unwrap_or_else(|| f.one());
            let eps = p.eps.unwrap_or(p.sign);
            let h_p = match (p.h_p, p.class) {
                (Some(h), _) => h.to_scalar(f)?,
                (None, PunctureClass::P2) => -(f.q_sym(p.n + 1) * f.int(eps)),
                (None, PunctureClass::P1) => return Err(Error::Parse("P1 punctures need h_p".into())),
                (None, PunctureClass::P0) => f.zero(),
            };
            out.push(Puncture { class: p.class, sign: p.sign, h_p, mu, eps, n: p.n });
        }
        ShadowSpec::new(out)
    }
}

/// The probe points of `CP^1` used for imaginary labels.
pub fn default_probes(f: &'static CycloField) -> Vec<ProjPoint> {
    vec![ProjPoint::Finite(f.zero()), ProjPoint::Finite(f.one()), ProjPoint::Finite(f.int(-1)), ProjPoint::Infinity]
}

/// Labels allowed at a puncture of the given class, truncated at `k_max`.
pub fn labels_for(class: PunctureClass, k_max: usize, probes: &[ProjPoint]) -> Vec<DeltaLabel> {
    match class {
        PunctureClass::P0 => vec![DeltaLabel::s()],
        PunctureClass::P1 => vec![DeltaLabel::s(), DeltaLabel::p()],
        PunctureClass::P2 => {
            let mut base = vec![DeltaLabel::s(), DeltaLabel::p()];
            for k in 1..=k_max {
                base.push(DeltaLabel { tag: LabelTag::Real(k, Direction::Plus), bar: false });
                base.push(DeltaLabel { tag: LabelTag::Real(k, Direction::Minus), bar: false });
                for z in probes {
                    base.push(DeltaLabel { tag: LabelTag::Imag(k, z.clone()), bar: false });
                }
            }
            let barred: Vec<_> = base.iter().cloned().map(DeltaLabel::barred).collect();
            base.into_iter().chain(barred).collect()
        }
    }
}

/// One label per puncture, in puncture order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    pub assignment: Vec<DeltaLabel>,
}

fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| c.iter().map(move |x| [prefix.clone(), vec![x.clone()]].concat()))
            .collect();
    }
    out
}

/// All compatible colorings with root indices at most `k_max`; imaginary
/// labels range over the default probes followed by `extra_points`.
pub fn enumerate_colorings(spec: &ShadowSpec, k_max: usize, probes: &[ProjPoint]) -> Vec<Coloring> {
    let choices: Vec<_> = spec.punctures.iter().map(|p| labels_for(p.class, k_max, probes)).collect();
    product(&choices).into_iter().map(|assignment| Coloring { assignment }).collect()
}

/// The module of a label at a central puncture with data `(mu, eps, n)`;
/// barred labels use `nbar = N - 2 - n`.
pub fn instantiate(label: &DeltaLabel, mu: &CycScalar, eps: i64, n: i64) -> Result<MatRep> {
    let nn = mu.field().order() as i64;
    if !(0..=(nn - 3) / 2).contains(&n) {
        return Err(Error::InvalidParams(format!("n must lie in 0..={}", (nn - 3) / 2)));
    }
    let n = if label.bar { nn - 2 - n } else { n };
    let mu = mu.clone();
    let spec = match &label.tag {
        LabelTag::S => FamilySpec::s(mu, eps, n),
        LabelTag::P => FamilySpec::pproj(mu, eps, n),
        LabelTag::Real(k, Direction::Plus) => FamilySpec::omega_plus(mu, eps, n, *k),
        LabelTag::Real(k, Direction::Minus) => FamilySpec::omega_minus(mu, eps, n, *k),
        LabelTag::Imag(k, z) => FamilySpec::m(mu, eps, n, *k, z.clone()),
    };
    build_module(&spec)
}

/// Either `phi(g)` is not central, or `phi(g) = +-1` and `h_p = -+2`.
pub fn azumaya_predicate(sh: &ShadowDqB) -> bool {
    let Ok(r) = phi_of_shadow(&sh.g_plus, &sh.g_minus) else {
        return false;
    };
    if r.class != PhiClass::Central {
        return true;
    }
    let f = sh.h_p.field();
    let sign = r.phi.entry(0, 0).clone();
    sh.h_p == -(sign * f.int(2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountSummary {
    pub m: usize,
    /// Colorings with values in `{S, Sbar, ((1,1),1), ((1,1),1)bar}` at
    /// central punctures and `S` elsewhere.
    pub weight_count: u64,
    /// Values in `{S, Sbar}`.
    pub irreducible_count: u64,
    /// `P1 -> P`, `P2 -> {P, Pbar}`.
    pub projective_count: u64,
    pub expected: [u64; 3],
    pub formulas_match: bool,
    /// The same counts decided on the modules themselves: a label counts
    /// as weight (simple) when its module is.
    pub semantic_weight_count: u64,
    pub semantic_irreducible_count: u64,
    pub semantic_match: bool,
    /// Labels whose module is weight, per central puncture.
    pub weight_labels: Vec<Vec<DeltaLabel>>,
    pub simple_labels: Vec<Vec<DeltaLabel>>,
}

fn is_weight_label(l: &DeltaLabel) -> bool {
    match &l.tag {
        LabelTag::S => true,
        LabelTag::Imag(1, ProjPoint::Finite(z)) => z.is_one(),
        _ => false,
    }
}

/// Counts of weight, simple and projective colorings at `k_max` and the
/// default probes, by label and by building each candidate module.
pub fn count_summary(spec: &ShadowSpec, k_max: usize) -> Result<CountSummary> {
    let (mut w, mut s, mut p, mut sw, mut ss) = (1u64, 1u64, 1u64, 1u64, 1u64);
    let mut weight_labels = Vec::new();
    let mut simple_labels = Vec::new();
    for punct in &spec.punctures {
        if punct.class != PunctureClass::P2 {
            // P0 and P1 contribute S to the first two counts and P1 -> P to the last
            continue;
        }
        let f = punct.mu.field();
        let labels = labels_for(PunctureClass::P2, k_max, &default_probes(f));
        let mut wl = Vec::new();
        let mut sl = Vec::new();
        for l in &labels {
            let rep = instantiate(l, &punct.mu, punct.eps, punct.n)?;
            if is_weight(&rep) {
                wl.push(l.clone());
            }
            if is_simple(&rep) {
                sl.push(l.clone());
            }
        }
        w *= labels.iter().filter(|l| is_weight_label(l)).count() as u64;
        s *= labels.iter().filter(|l| l.tag == LabelTag::S).count() as u64;
        p *= labels.iter().filter(|l| l.tag == LabelTag::P).count() as u64;
        sw *= wl.len() as u64;
        ss *= sl.len() as u64;
        weight_labels.push(wl);
        simple_labels.push(sl);
    }
    let m = spec.m() as u32;
    let expected = [4u64.pow(m), 2u64.pow(m), 2u64.pow(m)];
    Ok(CountSummary {
        m: m as usize,
        weight_count: w,
        irreducible_count: s,
        projective_count: p,
        formulas_match: [w, s, p] == expected,
        expected,
        semantic_weight_count: sw,
        semantic_irreducible_count: ss,
        semantic_match: sw == expected[0] && ss == expected[1],
        weight_labels,
        simple_labels,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub labels: Vec<DeltaLabel>,
    pub shadow: ShadowDqB,
    pub shadows_equal: bool,
    pub pairwise_non_isomorphic: bool,
    /// Labels whose shadow differs, or pairs found isomorphic.
    pub failures: Vec<String>,
}

/// Instantiate every `P2` label at `(mu, eps, n)`: all share one shadow and
/// no two are isomorphic.
pub fn fiber_check(mu: &CycScalar, eps: i64, n: i64, k_max: usize, probes: &[ProjPoint]) -> Result<FiberReport> {
    let labels = labels_for(PunctureClass::P2, k_max, probes);
    let reps = labels.iter().map(|l| instantiate(l, mu, eps, n)).collect::<Result<Vec<_>>>()?;
    let shadows = reps.iter().map(shadow).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for (l, sh) in labels.iter().zip(&shadows) {
        if *sh != shadows[0] {
            failures.push(format!("shadow of {l} differs from {}", labels[0]));
        }
    }
    let shadows_equal = failures.is_empty();
    let mut pairwise_non_isomorphic = true;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if are_isomorphic(&reps[i], &reps[j])? {
                pairwise_non_isomorphic = false;
                failures.push(format!("{} is isomorphic to {}", labels[i], labels[j]));
            }
        }
    }
    Ok(FiberReport { labels, shadow: shadows[0].clone(), shadows_equal, pairwise_non_isomorphic, failures })
}

#[cfg(test)]
mod tests;
