use crate::cyclofield::CycloField;
use crate::exactlin::Mat;
use crate::homlab::{check_exact_sequence, is_indecomposable, OpModule, SequenceReport};
use crate::Result;
use serde::Serialize;

const KIND: &str = "dual numbers";

/// The one-dimensional module `1`: `X = 0`.
pub fn dual_one(f: &'static CycloField) -> OpModule {
    OpModule::new(KIND, f, 1, vec![Mat::zeros(f, 1, 1)], 0).expect("1x1")
}

/// The regular module `W` on `(x, y)`: `X x = 0`, `X y = x`.
pub fn dual_regular(f: &'static CycloField) -> OpModule {
    OpModule::new(KIND, f, 2, vec![Mat::from_int_rows(f, &[&[0, 1], &[0, 0]])], 0).expect("2x2")
}

/// For `X` with `X^2 = 0`: a basis `(x_1, y_1, ..., x_r, y_r, z_1, ...)` with
/// `X y_i = x_i` and `X x_i = X z_j = 0`, returned as the columns of an
/// invertible `T` with `T^-1 X T = W^r + 1^(n-2r)`. `None` if `X^2 != 0`.
pub fn jordan_certificate(x: &Mat) -> Option<(Mat, usize)> {
    let f = x.field();
    let n = x.rows();
    if !(x * x).is_zero() {
        return None;
    }
    // pivot columns of X give the y_i
    let mut ys = Vec::new();
    let mut images: Vec<Vec<_>> = Vec::new();
    for j in 0..n {
        let c = x.col(j);
        let mut trial = images.clone();
        trial.push(c.clone());
        if Mat::from_columns(f, n, &trial).rank() == trial.len() {
            images = trial;
            ys.push(j);
        }
    }
    let r = ys.len();
    let mut cols = Vec::new();
    for (i, &j) in ys.iter().enumerate() {
        let mut e = vec![f.zero(); n];
        e[j] = f.one();
        cols.push(images[i].clone());
        cols.push(e);
    }
    // complete the image to a basis of the kernel
    for z in x.kernel_basis() {
        let mut trial = cols.clone();
        trial.push(z.clone());
        if Mat::from_columns(f, n, &trial).rank() == trial.len() {
            cols = trial;
        }
    }
    let t = Mat::from_columns(f, n, &cols);
    let ti = t.inverse()?;
    let mut target = Mat::zeros(f, n, n);
    for i in 0..r {
        target.set(2 * i, 2 * i + 1, f.one());
    }
    (&(&ti * x) * &t == target).then_some((t, r))
}

#[derive(Debug, Clone, Serialize)]
pub struct JordanBruteforce {
    pub size: usize,
    pub examined: usize,
    pub square_zero: usize,
    /// Square-zero matrices with an explicit block decomposition.
    pub decomposed: usize,
    /// `(#W, #1)` block counts that occurred.
    pub block_types: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualCatalog {
    pub one_dim: OpModule,
    pub regular: OpModule,
    pub one_indecomposable: bool,
    pub regular_indecomposable: bool,
    pub sequence: SequenceReport,
    pub bruteforce: Vec<JordanBruteforce>,
    pub all_decompose: bool,
}

/// `1`, `W`, the sequence `0 -> 1 -> W -> 1 -> 0`, and a brute-force check
/// over all matrices with entries in `{0, 1, -1}` up to size 3 that every
/// square-zero one splits into copies of `1` and `W`.
pub fn dual_number_catalog(f: &'static CycloField) -> Result<DualCatalog> {
    let one = dual_one(f);
    let w = dual_regular(f);
    let i = Mat::from_int_rows(f, &[&[1], &[0]]);
    let p = Mat::from_int_rows(f, &[&[0, 1]]);
    let sequence = check_exact_sequence(&i, &p, &one, &w, &one)?;
    let mut bruteforce = Vec::new();
    for size in 1..=3usize {
        let cells = size * size;
        let total = 3usize.pow(cells as u32);
        let mut rep =
            JordanBruteforce { size, examined: total, square_zero: 0, decomposed: 0, block_types: Vec::new() };
        for code in 0..total {
            let mut c = code;
            let x = Mat::from_fn(f, size, size, |_, _| {
                let v = [0, 1, -1][c % 3];
                c /= 3;
                f.int(v)
            });
            if !(&x * &x).is_zero() {
                continue;
            }
            rep.square_zero += 1;
            if let Some((_, r)) = jordan_certificate(&x) {
                rep.decomposed += 1;
                let t = (r, size - 2 * r);
                if !rep.block_types.contains(&t) {
                    rep.block_types.push(t);
                }
            }
        }
        rep.block_types.sort();
        bruteforce.push(rep);
    }
    let all_decompose = bruteforce.iter().all(|b| b.decomposed == b.square_zero);
    Ok(DualCatalog {
        one_indecomposable: is_indecomposable(&one),
        regular_indecomposable: is_indecomposable(&w),
        one_dim: one,
        regular: w,
        sequence,
        bruteforce,
        all_decompose,
    })
}
