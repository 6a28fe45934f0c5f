//! The 4x4 braiding matrix of the Heisenberg relations.

use crate::cyclofield::{CycloField, Poly};
use crate::exactlin::Mat;

fn r_with(f: &'static CycloField, corner: crate::CycScalar) -> Mat {
    let a = f.a_pow(1);
    let ai = f.a_pow(-1);
    let z = f.zero();
    Mat::from_rows(
        f,
        vec![
            vec![a.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), ai.clone(), z.clone()],
            vec![z.clone(), ai, corner, z.clone()],
            vec![z.clone(), z.clone(), z, a],
        ],
    )
    .expect("4x4")
}

/// `R` in the basis `++, +-, -+, --`.
pub fn r_matrix(f: &'static CycloField) -> Mat {
    r_with(f, f.a_pow(1) - f.a_pow(-3))
}

/// `R` with the corner entry `A - A^{-3}` replaced by `A - A^{-1}`.
pub fn r_matrix_mutated(f: &'static CycloField) -> Mat {
    r_with(f, f.a_pow(1) - f.a_pow(-1))
}

/// Braid relation `R12 R23 R12 = R23 R12 R23` on `C^2 (x) C^2 (x) C^2`.
pub fn yang_baxter_holds(f: &'static CycloField, r: &Mat) -> bool {
    let i2 = Mat::identity(f, 2);
    let r12 = r.kron(&i2);
    let r23 = i2.kron(r);
    let lhs = &(&r12 * &r23) * &r12;
    let rhs = &(&r23 * &r12) * &r23;
    lhs == rhs
}

/// `(X - A)(X + A^{-3})` annihilates `R` and is its minimal polynomial.
pub fn hecke_check(f: &'static CycloField, r: &Mat) -> bool {
    let expected = Poly::linear(&f.a_pow(1)).mul(&Poly::linear(&-f.a_pow(-3)));
    r.minimal_polynomial() == expected
}

/// Both the braid relation and the Hecke relation for the printed `R`.
pub fn yang_baxter_check(f: &'static CycloField) -> bool {
    let r = r_matrix(f);
    yang_baxter_holds(f, &r) && hecke_check(f, &r)
}
