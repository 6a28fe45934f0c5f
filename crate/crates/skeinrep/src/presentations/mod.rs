//! Presented algebras, PBW normal forms and symbolic identity checks.
//!
//! Normal forms are supported for the Borel double `DqB` (monomials
//! `F^a L^{i/2} K^{j/2} E^b`), the small quantum group (monomials
//! `F^a k^{i/2} E^b`, `0 <= a, b, i < N`) and `O_q SL2` (monomials
//! `a^m b^n c^s d^r` with `m r = 0`). `B_q SL2` and the Heisenberg data are
//! relation data only.

mod dqb;
mod heisenberg;
mod rewrite;
mod uq;

pub use dqb::{
    bqsl2_relations, casimir_ef, casimir_fe, casimir_identity_check, casimir_identity_check_mutated, gamma_p, h_bdry,
    majid_map, majid_map_with, omega_image_check, omega_image_check_with, MajidConvention,
};
pub use heisenberg::{hecke_check, r_matrix, r_matrix_mutated, yang_baxter_check, yang_baxter_holds};
pub use rewrite::Strategy;
pub use uq::{
    build_phi_n, gamma_n_weighted, phi_index_for_weight, solve_gamma_n, uq_pbw_basis, uq_regular_decomposition_check,
    x_n, DecompositionReport, IdealReport,
};

use crate::cyclofield::{CycScalar, CycloField, ScalarRepr};
use crate::{Error, Result};
use rewrite::{Letter, Word};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraId {
    DqB,
    OqSL2,
    BqSL2,
    UqSl2Small,
    HeisenbergData,
}

impl AlgebraId {
    pub fn supports_normal_forms(self) -> bool {
        matches!(self, AlgebraId::DqB | AlgebraId::OqSL2 | AlgebraId::UqSl2Small)
    }

    /// Parse a CLI tag such as `dqb`, `uq`, `oqsl2`.
    pub fn parse(tag: &str) -> Result<AlgebraId> {
        match tag.to_ascii_lowercase().as_str() {
            "dqb" => Ok(AlgebraId::DqB),
            "oqsl2" => Ok(AlgebraId::OqSL2),
            "bqsl2" => Ok(AlgebraId::BqSL2),
            "uq" | "uqsl2small" | "uqsl2" => Ok(AlgebraId::UqSl2Small),
            "heisenberg" | "heisenbergdata" => Ok(AlgebraId::HeisenbergData),
            other => Err(Error::Parse(format!("unknown algebra tag {other:?}"))),
        }
    }

    /// Generator names accepted by [`NFElement::generator`].
    pub fn generator_names(self) -> &'static [&'static str] {
        match self {
            AlgebraId::DqB => &["Kh", "Khi", "Lh", "Lhi", "E", "F"],
            AlgebraId::UqSl2Small => &["kh", "khi", "E", "F"],
            AlgebraId::OqSL2 | AlgebraId::BqSL2 => &["a", "b", "c", "d"],
            AlgebraId::HeisenbergData => &[],
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An element in normal form: ordered monomials (exponent tuples) with
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NFElement {
    algebra: AlgebraId,
    field: &'static CycloField,
    terms: BTreeMap<Vec<i64>, CycScalar>,
}

impl NFElement {
    pub fn zero(algebra: AlgebraId, field: &'static CycloField) -> NFElement {
        NFElement { algebra, field, terms: BTreeMap::new() }
    }

    pub fn scalar(algebra: AlgebraId, c: CycScalar) -> NFElement {
        let field = c.field();
        let mut out = Self::zero(algebra, field);
        if !c.is_zero() {
            out.terms.insert(unit_monomial(algebra), c);
        }
        out
    }

    pub fn one(algebra: AlgebraId, field: &'static CycloField) -> NFElement {
        Self::scalar(algebra, field.one())
    }

    /// A single monomial with coefficient; the monomial must be normal.
    pub fn monomial(algebra: AlgebraId, mono: Vec<i64>, c: CycScalar) -> Result<NFElement> {
        let field = c.field();
        check_monomial(algebra, field, &mono)?;
        let mut out = Self::zero(algebra, field);
        if !c.is_zero() {
            out.terms.insert(mono, c);
        }
        Ok(out)
    }

    /// A generator by name, see [`AlgebraId::generator_names`]. Also accepts
    /// `K`, `Ki`, `L`, `Li` (full powers) in `DqB` and `k`, `ki` in `u_q`.
    pub fn generator(algebra: AlgebraId, field: &'static CycloField, name: &str) -> Result<NFElement> {
        let w = generator_word(algebra, name)?;
        Ok(Self::from_word(algebra, field, &w))
    }

    fn from_word(algebra: AlgebraId, field: &'static CycloField, w: &[Letter]) -> NFElement {
        Self::from_words(algebra, field, vec![(field.one(), w.to_vec())], Strategy::Leftmost)
    }

    fn from_words(
        algebra: AlgebraId,
        field: &'static CycloField,
        words: Vec<(CycScalar, Word)>,
        s: Strategy,
    ) -> NFElement {
        let reduced = rewrite::reduce(algebra, field, words, s);
        let mut out = Self::zero(algebra, field);
        for (w, c) in reduced {
            let (factor, mono) = word_to_monomial(algebra, field, &w);
            out.add_term(mono, &c * &factor);
        }
        out
    }

    fn add_term(&mut self, mono: Vec<i64>, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &[i64]) -> CycScalar {
        self.terms.get(mono).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &NFElement) -> NFElement {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NFElement) -> NFElement {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &CycScalar) -> NFElement {
        let mut out = Self::zero(self.algebra, self.field);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.clone(), x * c);
        }
        out
    }

    /// Product in normal form; errors on mismatched algebras.
    pub fn try_mul(&self, other: &NFElement) -> Result<NFElement> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch(self.algebra.to_string(), other.algebra.to_string()));
        }
        if !self.algebra.supports_normal_forms() {
            return Err(Error::Unsupported(self.algebra.to_string()));
        }
        let mut words = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut w = monomial_to_word(self.algebra, m1);
                w.extend(monomial_to_word(self.algebra, m2));
                words.push((c1 * c2, w));
            }
        }
        Ok(Self::from_words(self.algebra, self.field, words, Strategy::Leftmost))
    }

    pub fn mul(&self, other: &NFElement) -> NFElement {
        self.try_mul(other).expect("product of normal forms")
    }

    pub fn pow(&self, e: u32) -> NFElement {
        let mut acc = Self::one(self.algebra, self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &NFElement) -> NFElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Terms as products of named generator powers, e.g. `[("F", 2), ("Kh", -1)]`;
    /// used by matrix evaluation.
    pub(crate) fn word_terms(&self) -> Vec<(Vec<(&'static str, i64)>, CycScalar)> {
        let names: &[&'static str] = match self.algebra {
            AlgebraId::DqB => &["F", "Lh", "Kh", "E"],
            AlgebraId::UqSl2Small => &["F", "kh", "E"],
            AlgebraId::OqSL2 => &["a", "b", "c", "d"],
            _ => &[],
        };
        self.terms
            .iter()
            .map(|(m, c)| {
                let w = m.iter().zip(names).filter(|(e, _)| **e != 0).map(|(e, n)| (*n, *e)).collect();
                (w, c.clone())
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> =
            self.terms.iter().map(|(m, c)| serde_json::json!({"monomial": m, "coeff": c})).collect();
        serde_json::json!({"algebra": self.algebra, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value, field: &'static CycloField) -> Result<NFElement> {
        #[derive(Deserialize)]
        struct Term {
            monomial: Vec<i64>,
            coeff: ScalarRepr,
        }
        #[derive(Deserialize)]
        struct Repr {
            algebra: AlgebraId,
            terms: Vec<Term>,
        }
        let r: Repr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(r.algebra, field);
        for t in r.terms {
            check_monomial(r.algebra, field, &t.monomial)?;
            out.add_term(t.monomial, t.coeff.to_scalar(field)?);
        }
        Ok(out)
    }
}

impl Serialize for NFElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("({c}){}", monomial_name(self.algebra, m))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.algebra, self)
    }
}

fn unit_monomial(alg: AlgebraId) -> Vec<i64> {
    match alg {
        AlgebraId::DqB | AlgebraId::OqSL2 => vec![0; 4],
        AlgebraId::UqSl2Small => vec![0; 3],
        _ => vec![],
    }
}

fn check_monomial(alg: AlgebraId, f: &CycloField, m: &[i64]) -> Result<()> {
    let n = f.order() as i64;
    let ok = match alg {
        AlgebraId::DqB => m.len() == 4 && m[0] >= 0 && m[3] >= 0,
        AlgebraId::UqSl2Small => m.len() == 3 && m.iter().all(|&x| (0..n).contains(&x)),
        AlgebraId::OqSL2 => m.len() == 4 && m.iter().all(|&x| x >= 0) && m[0] * m[3] == 0,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Parse(format!("{m:?} is not a normal monomial of {alg}")))
    }
}

fn monomial_name(alg: AlgebraId, m: &[i64]) -> String {
    let names: &[&str] = match alg {
        AlgebraId::DqB => &["F", "L^1/2", "K^1/2", "E"],
        AlgebraId::UqSl2Small => &["F", "k^1/2", "E"],
        AlgebraId::OqSL2 => &["a", "b", "c", "d"],
        _ => &[],
    };
    let mut s = String::new();
    for (e, n) in m.iter().zip(names) {
        match *e {
            0 => {}
            1 => s.push_str(n),
            e => s.push_str(&format!("{n}^{e}")),
        }
    }
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

fn monomial_to_word(alg: AlgebraId, m: &[i64]) -> Word {
    use rewrite::*;
    let mut w = Vec::new();
    let rep = |w: &mut Word, g: u8, k: i64| {
        for _ in 0..k {
            w.push(letter(g));
        }
    };
    match alg {
        AlgebraId::DqB => {
            rep(&mut w, D_F, m[0]);
            if m[1] != 0 {
                w.push(torus(D_L, m[1]));
            }
            if m[2] != 0 {
                w.push(torus(D_K, m[2]));
            }
            rep(&mut w, D_E, m[3]);
        }
        AlgebraId::UqSl2Small => {
            rep(&mut w, U_F, m[0]);
            if m[1] != 0 {
                w.push(torus(U_K, m[1]));
            }
            rep(&mut w, U_E, m[2]);
        }
        AlgebraId::OqSL2 => {
            rep(&mut w, O_A, m[0]);
            rep(&mut w, O_B, m[1]);
            rep(&mut w, O_C, m[2]);
            rep(&mut w, O_D, m[3]);
        }
        _ => {}
    }
    w
}

/// Read off the exponent tuple of a normal word, with the scalar needed to
/// move to the published monomial order (only nontrivial for `O_q SL2`,
/// where `b^n c^s a^m = q^{m(n+s)} a^m b^n c^s`).
fn word_to_monomial(alg: AlgebraId, f: &'static CycloField, w: &[Letter]) -> (CycScalar, Vec<i64>) {
    use rewrite::*;
    let count = |g: u8| w.iter().filter(|l| l.gen == g).map(|l| l.exp).sum::<i64>();
    match alg {
        AlgebraId::DqB => (f.one(), vec![count(D_F), count(D_L), count(D_K), count(D_E)]),
        AlgebraId::UqSl2Small => (f.one(), vec![count(U_F), count(U_K), count(U_E)]),
        AlgebraId::OqSL2 => {
            let (m, n, s, r) = (count(O_A), count(O_B), count(O_C), count(O_D));
            (f.q_pow(m * (n + s)), vec![m, n, s, r])
        }
        _ => (f.one(), vec![]),
    }
}

fn generator_word(alg: AlgebraId, name: &str) -> Result<Word> {
    use rewrite::*;
    let w = match (alg, name) {
        (AlgebraId::DqB, "E") => vec![letter(D_E)],
        (AlgebraId::DqB, "F") => vec![letter(D_F)],
        (AlgebraId::DqB, "Kh") => vec![torus(D_K, 1)],
        (AlgebraId::DqB, "Khi") => vec![torus(D_K, -1)],
        (AlgebraId::DqB, "K") => vec![torus(D_K, 2)],
        (AlgebraId::DqB, "Ki") => vec![torus(D_K, -2)],
        (AlgebraId::DqB, "Lh") => vec![torus(D_L, 1)],
        (AlgebraId::DqB, "Lhi") => vec![torus(D_L, -1)],
        (AlgebraId::DqB, "L") => vec![torus(D_L, 2)],
        (AlgebraId::DqB, "Li") => vec![torus(D_L, -2)],
        (AlgebraId::UqSl2Small, "E") => vec![letter(U_E)],
        (AlgebraId::UqSl2Small, "F") => vec![letter(U_F)],
        (AlgebraId::UqSl2Small, "kh") => vec![torus(U_K, 1)],
        (AlgebraId::UqSl2Small, "khi") => vec![torus(U_K, -1)],
        (AlgebraId::UqSl2Small, "k") => vec![torus(U_K, 2)],
        (AlgebraId::UqSl2Small, "ki") => vec![torus(U_K, -2)],
        (AlgebraId::OqSL2, "a") => vec![letter(O_A)],
        (AlgebraId::OqSL2, "b") => vec![letter(O_B)],
        (AlgebraId::OqSL2, "c") => vec![letter(O_C)],
        (AlgebraId::OqSL2, "d") => vec![letter(O_D)],
        (a, n) if !a.supports_normal_forms() => {
            return Err(Error::Unsupported(format!("{a} has no normal forms (generator {n:?})")))
        }
        (a, n) => return Err(Error::Parse(format!("unknown generator {n:?} for {a}"))),
    };
    Ok(w)
}

/// Parse a whitespace separated word such as `"E F"` or `"E^2 Khi F"`.
pub fn parse_word(alg: AlgebraId, field: &'static CycloField, text: &str) -> Result<Word> {
    let mut w = Vec::new();
    for tok in text.split_whitespace() {
        let (name, pow) = match tok.split_once('^') {
            Some((n, p)) => {
                let p: u32 = p.parse().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                (n, p)
            }
            None => (tok, 1),
        };
        let g = generator_word(alg, name)?;
        for _ in 0..pow {
            w.extend(g.iter().copied());
        }
    }
    let _ = field;
    Ok(w)
}

/// Normal form of a word, reduced with the given strategy.
pub fn normal_form_word(alg: AlgebraId, field: &'static CycloField, w: &[Letter], s: Strategy) -> Result<NFElement> {
    if !alg.supports_normal_forms() {
        return Err(Error::Unsupported(format!("{alg} has no normal forms")));
    }
    Ok(NFElement::from_words(alg, field, vec![(field.one(), w.to_vec())], s))
}

/// Normal form of a word given as text.
pub fn normal_form(alg: AlgebraId, field: &'static CycloField, text: &str) -> Result<NFElement> {
    let w = parse_word(alg, field, text)?;
    normal_form_word(alg, field, &w, Strategy::Leftmost)
}

/// Product in normal form.
pub fn multiply(x: &NFElement, y: &NFElement) -> Result<NFElement> {
    x.try_mul(y)
}

/// Whether `x` commutes with every generator, decided on normal forms.
pub fn is_central_symbolic(x: &NFElement) -> Result<bool> {
    let alg = x.algebra();
    if !alg.supports_normal_forms() {
        return Err(Error::Unsupported(format!("{alg} has no normal forms")));
    }
    for name in alg.generator_names() {
        let g = NFElement::generator(alg, x.field(), name)?;
        if !x.commutator(&g).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A relation `sum c_i w_i = 0` between source generators, named for reports.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(CycScalar, Vec<String>)>,
}

impl Relation {
    pub fn new(name: &str, terms: Vec<(CycScalar, &[&str])>) -> Relation {
        Relation {
            name: name.to_string(),
            terms: terms.into_iter().map(|(c, w)| (c, w.iter().map(|s| s.to_string()).collect())).collect(),
        }
    }
}

/// Images of the source generators inside a target algebra.
#[derive(Debug, Clone)]
pub struct GeneratorImageMap {
    pub source: AlgebraId,
    pub target: AlgebraId,
    pub images: BTreeMap<String, NFElement>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
    /// Normal form of the substituted relation when it fails.
    pub residue: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MorphismReport {
    pub source: AlgebraId,
    pub target: AlgebraId,
    pub checks: Vec<RelationCheck>,
}

impl MorphismReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Defining relations of an algebra in terms of its generator names.
pub fn relations(alg: AlgebraId, f: &'static CycloField) -> Vec<Relation> {
    let one = f.one();
    let q = f.q();
    let qi = f.q_pow(-1);
    match alg {
        AlgebraId::BqSL2 => bqsl2_relations(f),
        AlgebraId::OqSL2 => vec![
            Relation::new("ab=q^-1 ba", vec![(one.clone(), &["a", "b"]), (-&qi, &["b", "a"])]),
            Relation::new("ac=q^-1 ca", vec![(one.clone(), &["a", "c"]), (-&qi, &["c", "a"])]),
            Relation::new("db=q bd", vec![(one.clone(), &["d", "b"]), (-&q, &["b", "d"])]),
            Relation::new("dc=q cd", vec![(one.clone(), &["d", "c"]), (-&q, &["c", "d"])]),
            Relation::new("bc=cb", vec![(one.clone(), &["b", "c"]), (-&one, &["c", "b"])]),
            Relation::new("ad=1+q^-1 bc", vec![(one.clone(), &["a", "d"]), (-&one, &[]), (-&qi, &["b", "c"])]),
            Relation::new("da=1+q bc", vec![(one.clone(), &["d", "a"]), (-&one, &[]), (-&q, &["b", "c"])]),
        ],
        AlgebraId::DqB => {
            let c = f.q_diff().inv().expect("q - q^-1 invertible");
            vec![
                Relation::new("E Kh=q^-1 Kh E", vec![(one.clone(), &["E", "Kh"]), (-&qi, &["Kh", "E"])]),
                Relation::new("E Lh=q Lh E", vec![(one.clone(), &["E", "Lh"]), (-&q, &["Lh", "E"])]),
                Relation::new("F Kh=q Kh F", vec![(one.clone(), &["F", "Kh"]), (-&q, &["Kh", "F"])]),
                Relation::new("F Lh=q^-1 Lh F", vec![(one.clone(), &["F", "Lh"]), (-&qi, &["Lh", "F"])]),
                Relation::new("Kh Lh=Lh Kh", vec![(one.clone(), &["Kh", "Lh"]), (-&one, &["Lh", "Kh"])]),
                Relation::new("Kh Khi=1", vec![(one.clone(), &["Kh", "Khi"]), (-&one, &[])]),
                Relation::new("Lh Lhi=1", vec![(one.clone(), &["Lh", "Lhi"]), (-&one, &[])]),
                Relation::new(
                    "EF-FE=(K-L)/(q-q^-1)",
                    vec![
                        (one.clone(), &["E", "F"]),
                        (-&one, &["F", "E"]),
                        (-&c, &["Kh", "Kh"]),
                        (c.clone(), &["Lh", "Lh"]),
                    ],
                ),
            ]
        }
        AlgebraId::UqSl2Small | AlgebraId::HeisenbergData => vec![],
    }
}

/// Substitute images into every source relation and normalize.
pub fn verify_morphism(m: &GeneratorImageMap) -> Result<MorphismReport> {
    if !m.target.supports_normal_forms() {
        return Err(Error::Unsupported(format!("{} has no normal forms", m.target)));
    }
    let field =
        m.images.values().next().map(NFElement::field).ok_or_else(|| Error::InvalidParams("empty image map".into()))?;
    let mut checks = Vec::new();
    for rel in relations(m.source, field) {
        let mut total = NFElement::zero(m.target, field);
        for (c, w) in &rel.terms {
            let mut prod = NFElement::one(m.target, field);
            for g in w {
                let img = m.images.get(g).ok_or_else(|| Error::InvalidParams(format!("no image for generator {g}")))?;
                prod = prod.try_mul(img)?;
            }
            total = total.add(&prod.scale(c));
        }
        let pass = total.is_zero();
        checks.push(RelationCheck {
            relation: rel.name.clone(),
            pass,
            residue: if pass { None } else { Some(total.to_json()) },
        });
    }
    Ok(MorphismReport { source: m.source, target: m.target, checks })
}

/// The identity map of a normal-form algebra, as a generator image map.
pub fn identity_map(alg: AlgebraId, field: &'static CycloField) -> Result<GeneratorImageMap> {
    let mut images = BTreeMap::new();
    for name in alg.generator_names() {
        images.insert(name.to_string(), NFElement::generator(alg, field, name)?);
    }
    Ok(GeneratorImageMap { source: alg, target: alg, images })
}

#[cfg(test)]
mod tests;
