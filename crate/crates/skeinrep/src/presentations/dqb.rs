//! Casimir, boundary element and the Majid map `B_q SL2 -> D_qB`.

use super::{AlgebraId, GeneratorImageMap, NFElement, Relation};
use crate::cyclofield::{CycScalar, CycloField};
use crate::Result;
use std::collections::BTreeMap;

const D: AlgebraId = AlgebraId::DqB;

fn g(f: &'static CycloField, name: &str) -> NFElement {
    NFElement::generator(D, f, name).expect("DqB generator")
}

fn qd2_inv(f: &'static CycloField) -> CycScalar {
    let d = f.q_diff();
    (&d * &d).inv().expect("q - q^-1 invertible")
}

/// `H_bdry = K^{-1/2} L^{-1/2}`.
pub fn h_bdry(f: &'static CycloField) -> NFElement {
    g(f, "Khi").mul(&g(f, "Lhi"))
}

/// `EF + (qL + q^{-1}K)/(q-q^{-1})^2`.
pub fn casimir_ef(f: &'static CycloField) -> NFElement {
    casimir_ef_with(f, f.q(), f.q_pow(-1))
}

fn casimir_ef_with(f: &'static CycloField, cl: CycScalar, ck: CycScalar) -> NFElement {
    let c = qd2_inv(f);
    g(f, "E").mul(&g(f, "F")).add(&g(f, "L").scale(&(&cl * &c))).add(&g(f, "K").scale(&(&ck * &c)))
}

/// `FE + (qK + q^{-1}L)/(q-q^{-1})^2`.
pub fn casimir_fe(f: &'static CycloField) -> NFElement {
    let c = qd2_inv(f);
    g(f, "F").mul(&g(f, "E")).add(&g(f, "K").scale(&(&f.q() * &c))).add(&g(f, "L").scale(&(&f.q_pow(-1) * &c)))
}

/// The two printed expressions of the Casimir agree in normal form.
pub fn casimir_identity_check(f: &'static CycloField) -> bool {
    casimir_ef(f) == casimir_fe(f)
}

/// Same check with `q` and `q^{-1}` swapped on the `EF` side only.
pub fn casimir_identity_check_mutated(f: &'static CycloField) -> bool {
    casimir_ef_with(f, f.q_pow(-1), f.q()) == casimir_fe(f)
}

/// `gamma_p = -(q-q^{-1})^2 C H_bdry`.
pub fn gamma_p(f: &'static CycloField) -> NFElement {
    let d = f.q_diff();
    casimir_fe(f).mul(&h_bdry(f)).scale(&-(&d * &d))
}

/// Defining relations of `B_q SL2`, each written as `lhs - rhs`.
pub fn bqsl2_relations(f: &'static CycloField) -> Vec<Relation> {
    let one = f.one();
    let q2 = f.q_pow(2);
    let qm2 = f.q_pow(-2);
    let t = &one - &qm2;
    vec![
        Relation::new("ba=q^2 ab", vec![(one.clone(), &["b", "a"]), (-&q2, &["a", "b"])]),
        Relation::new("ca=q^-2 ac", vec![(one.clone(), &["c", "a"]), (-&qm2, &["a", "c"])]),
        Relation::new("da=ad", vec![(one.clone(), &["d", "a"]), (-&one, &["a", "d"])]),
        Relation::new(
            "bc=cb+(1-q^-2)a(d-a)",
            vec![(one.clone(), &["b", "c"]), (-&one, &["c", "b"]), (-&t, &["a", "d"]), (t.clone(), &["a", "a"])],
        ),
        Relation::new("db=bd+(1-q^-2)ab", vec![(one.clone(), &["d", "b"]), (-&one, &["b", "d"]), (-&t, &["a", "b"])]),
        Relation::new("cd=dc+(1-q^-2)ca", vec![(one.clone(), &["c", "d"]), (-&one, &["d", "c"]), (-&t, &["c", "a"])]),
        Relation::new("ad-q^2 cb=1", vec![(one.clone(), &["a", "d"]), (-&q2, &["c", "b"]), (-&one, &[])]),
    ]
}

/// Knobs for translating the stated-arc formulas into `D_qB` words. The
/// default reproduces the printed formulas verbatim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MajidConvention {
    /// Write `alpha beta` instead of `beta alpha` in every image.
    pub alpha_first: bool,
    /// Read `gamma_{ij}` as `gamma_{ji}`.
    pub swap_indices: bool,
    /// Replace `A` by `A^{-1}` in the scalars of the arc formula.
    pub invert_a: bool,
}

/// Stated arcs of the punctured bigon as `D_qB` elements, indexed `[i][j]`
/// with `0 = +`, `1 = -`.
fn arcs(f: &'static CycloField) -> ([[NFElement; 2]; 2], [[NFElement; 2]; 2]) {
    let d = f.q_diff();
    let z = NFElement::zero(D, f);
    // Psi(E) = -A/(q-q^-1) alpha_{+-} alpha_{--}, Psi(F) = A^-1/(q-q^-1) beta_{--} beta_{-+}
    let a_pm = g(f, "E").mul(&g(f, "Khi")).scale(&-(&f.a_pow(-1) * &d));
    let b_mp = g(f, "Lhi").mul(&g(f, "F")).scale(&(&f.a_pow(1) * &d));
    let alpha = [[g(f, "Khi"), a_pm], [z.clone(), g(f, "Kh")]];
    let beta = [[g(f, "Lhi"), z], [b_mp, g(f, "Lh")]];
    (alpha, beta)
}

/// `j(gamma_{ij}) = A^{-1/2} beta_{j+} alpha_{i-} - A^{-5/2} beta_{j-} alpha_{i+}`.
fn j_gamma(f: &'static CycloField, conv: MajidConvention, i: usize, j: usize) -> NFElement {
    let (alpha, beta) = arcs(f);
    let (i, j) = if conv.swap_indices { (j, i) } else { (i, j) };
    let s = if conv.invert_a { -1 } else { 1 };
    let prod = |b: &NFElement, a: &NFElement| if conv.alpha_first { a.mul(b) } else { b.mul(a) };
    prod(&beta[j][0], &alpha[i][1])
        .scale(&f.a_half_pow(-s))
        .sub(&prod(&beta[j][1], &alpha[i][0]).scale(&f.a_half_pow(-5 * s)))
}

/// Images of `a, b, c, d` through `phi_2` and `j`.
pub fn majid_map_with(f: &'static CycloField, conv: MajidConvention) -> GeneratorImageMap {
    let s = if conv.invert_a { -1 } else { 1 };
    let mut images = BTreeMap::new();
    images.insert("a".to_string(), j_gamma(f, conv, 1, 0).scale(&-f.a_half_pow(5 * s)));
    images.insert("b".to_string(), j_gamma(f, conv, 1, 1).scale(&-f.a_half_pow(5 * s)));
    images.insert("c".to_string(), j_gamma(f, conv, 0, 0).scale(&f.a_half_pow(s)));
    images.insert("d".to_string(), j_gamma(f, conv, 0, 1).scale(&f.a_half_pow(s)));
    GeneratorImageMap { source: AlgebraId::BqSL2, target: D, images }
}

/// The Majid map with the printed conventions.
pub fn majid_map(f: &'static CycloField) -> GeneratorImageMap {
    majid_map_with(f, MajidConvention::default())
}

/// Image of `x a + y d` under the map compared with `gamma_p`.
pub fn omega_image_check_with(
    f: &'static CycloField,
    m: &GeneratorImageMap,
    coeff_a: &CycScalar,
    coeff_d: &CycScalar,
) -> Result<bool> {
    let img = m.images["a"].scale(coeff_a).add(&m.images["d"].scale(coeff_d));
    Ok(img == gamma_p(f))
}

/// `omega = -q^{-1} a - q d` maps to `gamma_p`.
pub fn omega_image_check(f: &'static CycloField) -> Result<bool> {
    omega_image_check_with(f, &majid_map(f), &-f.q_pow(-1), &-f.q())
}
