use super::{Family, FamilySpec, MatRep, ProjPoint, Transcription};
use crate::cyclofield::{CycScalar, CycloField};
use crate::exactlin::Mat;
use crate::presentations::AlgebraId;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Generator matrices under construction, filled entry by entry.
struct Builder {
    f: &'static CycloField,
    kh: Vec<CycScalar>,
    lh: Vec<CycScalar>,
    e: Mat,
    fm: Mat,
}

impl Builder {
    fn new(f: &'static CycloField, dim: usize) -> Builder {
        Builder {
            f,
            kh: vec![f.zero(); dim],
            lh: vec![f.zero(); dim],
            e: Mat::zeros(f, dim, dim),
            fm: Mat::zeros(f, dim, dim),
        }
    }

    fn weight(&mut self, i: usize, k: CycScalar, l: CycScalar) {
        self.kh[i] = k;
        self.lh[i] = l;
    }

    /// `E u_from += c u_to`.
    fn e(&mut self, from: usize, to: usize, c: CycScalar) {
        let v = self.e.get(to, from) + &c;
        self.e.set(to, from, v);
    }

    fn f(&mut self, from: usize, to: usize, c: CycScalar) {
        let v = self.fm.get(to, from) + &c;
        self.fm.set(to, from, v);
    }

    fn finish(self) -> Result<MatRep> {
        let f = self.f;
        let mut gens = BTreeMap::new();
        gens.insert("Kh".to_string(), Mat::diag(f, &self.kh));
        gens.insert("Lh".to_string(), Mat::diag(f, &self.lh));
        gens.insert("E".to_string(), self.e);
        gens.insert("F".to_string(), self.fm);
        MatRep::new(AlgebraId::DqB, gens)
    }
}

fn check_n(spec: &FamilySpec, max: i64) -> Result<()> {
    if !(0..=max).contains(&spec.n) {
        return Err(Error::InvalidParams(format!("{:?} needs 0 <= n <= {max}, got {}", spec.family, spec.n)));
    }
    if spec.eps != 1 && spec.eps != -1 {
        return Err(Error::InvalidParams(format!("eps must be +1 or -1, got {}", spec.eps)));
    }
    Ok(())
}

/// `(q^{1-i} lambda^2 - q^{i-1} mu^2)/(q - q^{-1}) [i]`.
fn v_coeff(f: &'static CycloField, lambda: &CycScalar, mu: &CycScalar, i: i64) -> CycScalar {
    let d = f.q_diff().inv().expect("q - q^-1 invertible");
    (f.q_pow(1 - i) * lambda * lambda - f.q_pow(i - 1) * mu * mu) * d * f.qint(i)
}

/// `x y^{-1} = +-q^m` for some `1 <= m <= (N-1)/2`.
pub(crate) fn ratio_admissible(f: &'static CycloField, x: &CycScalar, y: &CycScalar) -> bool {
    let r = x * &y.inv().expect("nonzero");
    let half = (f.order() as i64 - 1) / 2;
    (1..=half).any(|m| r == f.q_pow(m) || r == -f.q_pow(m))
}

/// `h in {+-(q^m + q^{-m}) : 1 <= m <= (N-1)/2}`.
pub(crate) fn hp_admissible(f: &'static CycloField, h: &CycScalar) -> bool {
    let half = (f.order() as i64 - 1) / 2;
    (1..=half).any(|m| *h == f.q_sym(m) || *h == -f.q_sym(m))
}

pub(super) fn build(spec: &FamilySpec) -> Result<MatRep> {
    let f = spec.field()?;
    let nn = f.order() as i64;
    let printed = spec.transcription == Transcription::Printed;
    match spec.family {
        Family::V => {
            let (lambda, mu) = (spec.nonzero(&spec.lambda, "lambda")?, spec.nonzero(&spec.mu, "mu")?);
            let (a, b) = (spec.get(&spec.a, "a")?, spec.get(&spec.b, "b")?);
            let mut bl = Builder::new(f, nn as usize);
            fill_v(&mut bl, 0, &lambda, &mu, &a, &b);
            bl.finish()
        }
        Family::Vtilde => {
            let (lambda, mu) = (spec.nonzero(&spec.lambda, "lambda")?, spec.nonzero(&spec.mu, "mu")?);
            let c = spec.get(&spec.c, "c")?;
            let mut bl = Builder::new(f, nn as usize);
            fill_vtilde(&mut bl, 0, &lambda, &mu, &c, printed);
            bl.finish()
        }
        Family::S => {
            check_n(spec, nn - 1)?;
            let mu = spec.nonzero(&spec.mu, "mu")?;
            let mut bl = Builder::new(f, spec.n as usize + 1);
            fill_s(&mut bl, 0, &mu, spec.eps, spec.n);
            bl.finish()
        }
        Family::P => {
            let (lambda, mu) = (spec.nonzero(&spec.lambda, "lambda")?, spec.nonzero(&spec.mu, "mu")?);
            let b = spec.nonzero(&spec.b, "b")?;
            let a = spec.get(&spec.a, "a")?;
            let n = nn as usize;
            let mut bl = Builder::new(f, 2 * n);
            fill_v(&mut bl, 0, &lambda, &mu, &a, &b);
            fill_v(&mut bl, n, &lambda, &mu, &a, &b);
            // y-block: E y_0 += b^{-1} x_{N-1}, E y_i += x_{i-1}
            bl.e(n, n - 1, b.inv()?);
            for i in 1..n {
                bl.e(n + i, i - 1, f.one());
            }
            let mut rep = bl.finish()?;
            if !hp_admissible(f, &super::h_p_of_p(&lambda, &mu, &(&a * &b))?) {
                rep.flags.push("not_semiweight".into());
            }
            Ok(rep)
        }
        Family::Ptilde => {
            let (lambda, mu) = (spec.nonzero(&spec.lambda, "lambda")?, spec.nonzero(&spec.mu, "mu")?);
            let c = spec.nonzero(&spec.c, "c")?;
            let n = nn as usize;
            let mut bl = Builder::new(f, 2 * n);
            fill_vtilde(&mut bl, 0, &lambda, &mu, &c, printed);
            fill_vtilde(&mut bl, n, &lambda, &mu, &c, printed);
            if printed {
                // F y_0 = x_0, F y_i += x_i
                for i in 0..n {
                    bl.f(n + i, i, f.one());
                }
            } else {
                bl.f(n, n - 1, c.inv()?);
                for i in 1..n {
                    bl.f(n + i, i - 1, f.one());
                }
            }
            let mut rep = bl.finish()?;
            // F^N vanishes only when some F coefficient does, i.e. mu lambda^-1 = +-q^m
            if !ratio_admissible(f, &mu, &lambda) {
                rep.flags.push("not_admissible".into());
            }
            Ok(rep)
        }
        Family::Pproj => {
            check_n(spec, nn - 2)?;
            let mu = spec.nonzero(&spec.mu, "mu")?;
            let (eps, n) = (spec.eps, spec.n);
            let d = nn as usize;
            let mut bl = Builder::new(f, 2 * d);
            let em = &mu * &f.int(eps);
            let mu2 = &mu * &mu;
            for i in 0..nn {
                let iu = i as usize;
                bl.weight(iu, &em * &f.a_pow(-2 - n - 2 * i), &mu * &f.a_pow(n + 2 * i + 2));
                bl.weight(d + iu, &em * &f.a_pow(n - 2 * i), &mu * &f.a_pow(2 * i - n));
                if iu + 1 < d {
                    bl.f(iu, iu + 1, f.one());
                    bl.f(d + iu, d + iu + 1, f.one());
                }
                if i > 0 {
                    bl.e(iu, iu - 1, -(&mu2 * &f.qint(i) * f.qint(n + i + 1)));
                    bl.e(d + iu, d + iu - 1, &mu2 * &f.qint(i) * f.qint(n - i + 1));
                }
                // the printed range i <= n leaves EF - FE off by x_{N-1} on y_n
                let last = if printed { n } else { n + 1 };
                if i <= last {
                    bl.e(d + iu, (nn - n + i - 2) as usize, f.one());
                }
            }
            bl.finish()
        }
        Family::OmegaPlus | Family::OmegaMinus | Family::Mfam => {
            check_n(spec, nn - 2)?;
            if spec.k == 0 {
                return Err(Error::InvalidParams("k must be at least 1".into()));
            }
            let mu = spec.nonzero(&spec.mu, "mu")?;
            exceptional(f, spec, &mu)
        }
    }
}

fn fill_v(bl: &mut Builder, off: usize, lambda: &CycScalar, mu: &CycScalar, a: &CycScalar, b: &CycScalar) {
    let f = bl.f;
    let n = f.order() as usize;
    let ab = a * b;
    for i in 0..n {
        let ii = i as i64;
        bl.weight(off + i, lambda * &f.q_pow(-ii), mu * &f.q_pow(ii));
        if i + 1 < n {
            bl.f(off + i, off + i + 1, f.one());
        } else {
            bl.f(off + i, off, b.clone());
        }
        if i == 0 {
            bl.e(off, off + n - 1, a.clone());
        } else {
            bl.e(off + i, off + i - 1, v_coeff(f, lambda, mu, ii) + &ab);
        }
    }
}

/// `F w_i` lands on `w_{i-1}`; the printed formula has `w_i`.
fn fill_vtilde(bl: &mut Builder, off: usize, lambda: &CycScalar, mu: &CycScalar, c: &CycScalar, printed: bool) {
    let f = bl.f;
    let n = f.order() as usize;
    for i in 0..n {
        let ii = i as i64;
        bl.weight(off + i, lambda * &f.q_pow(ii), mu * &f.q_pow(-ii));
        if i + 1 < n {
            bl.e(off + i, off + i + 1, f.one());
        } else {
            bl.e(off + i, off, c.clone());
        }
        if i > 0 {
            let to = if printed { off + i } else { off + i - 1 };
            bl.f(off + i, to, v_coeff(f, mu, lambda, ii));
        }
    }
}

fn fill_s(bl: &mut Builder, off: usize, mu: &CycScalar, eps: i64, n: i64) {
    let f = bl.f;
    let em = mu * &f.int(eps);
    let mu2 = mu * mu;
    for i in 0..=n {
        let iu = off + i as usize;
        bl.weight(iu, &em * &f.a_pow(n - 2 * i), mu * &f.a_pow(2 * i - n));
        if i < n {
            bl.f(iu, iu + 1, f.one());
        }
        if i > 0 {
            bl.e(iu, iu - 1, &mu2 * &f.qint(i) * f.qint(n - i + 1));
        }
    }
}

/// Index layout of the exceptional modules: the `e` block ordered by `j`
/// then `i`, followed by the `ebar` block.
pub(crate) struct ExceptionalLayout {
    pub n: usize,
    pub nbar: usize,
    pub ke: usize,
    pub kb: usize,
}

impl ExceptionalLayout {
    pub fn new(nn: i64, n: i64, ke: usize, kb: usize) -> ExceptionalLayout {
        ExceptionalLayout { n: n as usize, nbar: (nn - 2 - n) as usize, ke, kb }
    }

    pub fn dim(&self) -> usize {
        self.ke * (self.n + 1) + self.kb * (self.nbar + 1)
    }

    /// `e_i^j`, `1 <= j <= ke`.
    pub fn e(&self, i: usize, j: usize) -> usize {
        (j - 1) * (self.n + 1) + i
    }

    /// `ebar_i^j`, `1 <= j <= kb`.
    pub fn eb(&self, i: usize, j: usize) -> usize {
        self.ke * (self.n + 1) + (j - 1) * (self.nbar + 1) + i
    }
}

fn exceptional(f: &'static CycloField, spec: &FamilySpec, mu: &CycScalar) -> Result<MatRep> {
    let nn = f.order() as i64;
    let k = spec.k;
    let (ke, kb) = match spec.family {
        Family::OmegaMinus => (k, k + 1),
        Family::OmegaPlus => (k + 1, k),
        _ => (k, k),
    };
    let lay = ExceptionalLayout::new(nn, spec.n, ke, kb);
    let mut bl = Builder::new(f, lay.dim());
    for j in 1..=ke {
        fill_s(&mut bl, lay.e(0, j), mu, spec.eps, lay.n as i64);
    }
    for j in 1..=kb {
        fill_s(&mut bl, lay.eb(0, j), mu, spec.eps, lay.nbar as i64);
    }
    let (n, nb) = (lay.n, lay.nbar);
    let one = f.one();
    match spec.family {
        Family::OmegaMinus => {
            for j in 1..=k {
                bl.f(lay.e(n, j), lay.eb(0, j + 1), one.clone());
                bl.e(lay.e(0, j), lay.eb(nb, j), one.clone());
            }
        }
        Family::OmegaPlus => {
            for j in 1..=k {
                bl.f(lay.e(n, j), lay.eb(0, j), one.clone());
            }
            for j in 2..=k + 1 {
                bl.e(lay.e(0, j), lay.eb(nb, j - 1), one.clone());
            }
        }
        _ => match spec.point.as_ref().ok_or_else(|| Error::InvalidParams("M^k needs a point of CP^1".into()))? {
            ProjPoint::Finite(lambda) => {
                for j in 1..=k {
                    bl.f(lay.e(n, j), lay.eb(0, j), lambda.clone());
                    if j < k {
                        bl.f(lay.e(n, j), lay.eb(0, j + 1), one.clone());
                    }
                    bl.e(lay.e(0, j), lay.eb(nb, j), one.clone());
                }
            }
            ProjPoint::Infinity => {
                for j in 1..=k {
                    bl.f(lay.e(n, j), lay.eb(0, j), one.clone());
                    if j < k {
                        bl.e(lay.e(0, j), lay.eb(nb, j + 1), one.clone());
                    }
                }
            }
        },
    }
    bl.finish()
}
