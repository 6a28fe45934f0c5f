//! Word rewriting toward PBW order.
//!
//! A word is a list of letters; each algebra supplies a rule for every
//! adjacent pair that is out of order. Torus letters carry an exponent in
//! half units and merge when adjacent.

use super::AlgebraId;
use crate::cyclofield::{CycScalar, CycloField};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

/// One letter: a generator id (which fixes the PBW position) and an
/// exponent, always 1 for non-torus generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u8,
    pub exp: i64,
}

pub type Word = Vec<Letter>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

// DqB letters
pub(crate) const D_F: u8 = 0;
pub(crate) const D_L: u8 = 1;
pub(crate) const D_K: u8 = 2;
pub(crate) const D_E: u8 = 3;
// u_q letters
pub(crate) const U_F: u8 = 0;
pub(crate) const U_K: u8 = 1;
pub(crate) const U_E: u8 = 2;
// O_q SL2 letters, rewriting order b < c < a < d
pub(crate) const O_B: u8 = 0;
pub(crate) const O_C: u8 = 1;
pub(crate) const O_A: u8 = 2;
pub(crate) const O_D: u8 = 3;

pub(crate) fn letter(gen: u8) -> Letter {
    Letter { gen, exp: 1 }
}

pub(crate) fn torus(gen: u8, exp: i64) -> Letter {
    Letter { gen, exp }
}

type Expansion = Vec<(CycScalar, Word)>;

fn is_torus(alg: AlgebraId, g: u8) -> bool {
    match alg {
        AlgebraId::DqB => g == D_L || g == D_K,
        AlgebraId::UqSl2Small => g == U_K,
        _ => false,
    }
}

/// Replacement for the adjacent pair `xy`, or `None` when it is in order.
fn swap_rule(alg: AlgebraId, f: &'static CycloField, x: Letter, y: Letter) -> Option<Expansion> {
    let n = f.order() as i64;
    match alg {
        AlgebraId::DqB => {
            if x.gen == y.gen && is_torus(alg, x.gen) {
                let e = x.exp + y.exp;
                let w = if e == 0 { vec![] } else { vec![torus(x.gen, e)] };
                return Some(vec![(f.one(), w)]);
            }
            match (x.gen, y.gen) {
                (D_E, D_F) => {
                    let c = f.q_diff().inv().expect("q - q^-1 invertible");
                    Some(vec![
                        (f.one(), vec![letter(D_F), letter(D_E)]),
                        (c.clone(), vec![torus(D_K, 2)]),
                        (-c, vec![torus(D_L, 2)]),
                    ])
                }
                (D_E, D_K) => Some(vec![(f.q_pow(-y.exp), vec![y, x])]),
                (D_E, D_L) => Some(vec![(f.q_pow(y.exp), vec![y, x])]),
                (D_K, D_F) => Some(vec![(f.q_pow(-x.exp), vec![y, x])]),
                (D_L, D_F) => Some(vec![(f.q_pow(x.exp), vec![y, x])]),
                (D_K, D_L) => Some(vec![(f.one(), vec![y, x])]),
                _ => None,
            }
        }
        AlgebraId::UqSl2Small => {
            if x.gen == U_K && y.gen == U_K {
                let e = (x.exp + y.exp).rem_euclid(n);
                let w = if e == 0 { vec![] } else { vec![torus(U_K, e)] };
                return Some(vec![(f.one(), w)]);
            }
            match (x.gen, y.gen) {
                (U_E, U_F) => {
                    let c = f.q_diff().inv().expect("q - q^-1 invertible");
                    Some(vec![
                        (f.one(), vec![letter(U_F), letter(U_E)]),
                        (c.clone(), vec![torus(U_K, 2 % n)]),
                        (-c, vec![torus(U_K, (-2i64).rem_euclid(n))]),
                    ])
                }
                (U_E, U_K) => Some(vec![(f.q_pow(-y.exp), vec![y, x])]),
                (U_K, U_F) => Some(vec![(f.q_pow(-x.exp), vec![y, x])]),
                _ => None,
            }
        }
        AlgebraId::OqSL2 => match (x.gen, y.gen) {
            (O_C, O_B) => Some(vec![(f.one(), vec![y, x])]),
            (O_A, O_B) | (O_A, O_C) => Some(vec![(f.q_pow(-1), vec![y, x])]),
            (O_D, O_B) | (O_D, O_C) => Some(vec![(f.q(), vec![y, x])]),
            (O_D, O_A) => Some(vec![(f.one(), vec![]), (f.q(), vec![letter(O_B), letter(O_C)])]),
            (O_A, O_D) => Some(vec![(f.one(), vec![]), (f.q_pow(-1), vec![letter(O_B), letter(O_C)])]),
            _ => None,
        },
        _ => None,
    }
}

/// Words that vanish outright: `E^N` and `F^N` in the small quantum group.
fn killed(alg: AlgebraId, f: &CycloField, w: &[Letter]) -> bool {
    if alg != AlgebraId::UqSl2Small {
        return false;
    }
    let n = f.order() as usize;
    let mut run = 0;
    let mut last = u8::MAX;
    for l in w {
        if l.gen == last && l.gen != U_K {
            run += 1;
        } else {
            run = 1;
            last = l.gen;
        }
        if l.gen != U_K && run >= n {
            return true;
        }
    }
    false
}

fn find_redex(alg: AlgebraId, f: &'static CycloField, w: &[Letter], s: Strategy) -> Option<(usize, Expansion)> {
    let mut positions: Box<dyn Iterator<Item = usize>> = match s {
        Strategy::Leftmost => Box::new(0..w.len().saturating_sub(1)),
        Strategy::Rightmost => Box::new((0..w.len().saturating_sub(1)).rev()),
    };
    positions.find_map(|i| swap_rule(alg, f, w[i], w[i + 1]).map(|e| (i, e)))
}

/// Reduce a linear combination of words to normal words.
pub fn reduce(
    alg: AlgebraId,
    f: &'static CycloField,
    input: Vec<(CycScalar, Word)>,
    s: Strategy,
) -> BTreeMap<Word, CycScalar> {
    let mut pending: Vec<(CycScalar, Word)> = input;
    let mut done: BTreeMap<Word, CycScalar> = BTreeMap::new();
    while let Some((c, w)) = pending.pop() {
        if c.is_zero() || killed(alg, f, &w) {
            continue;
        }
        if let Some(hit) = cached(alg, f, &w, s) {
            for (nw, nc) in hit {
                add_to(&mut done, nw, &c * &nc);
            }
            continue;
        }
        match find_redex(alg, f, &w, s) {
            None => add_to(&mut done, w, c),
            Some((i, exp)) => {
                for (ec, ew) in exp {
                    let mut nw = Vec::with_capacity(w.len() + ew.len());
                    nw.extend_from_slice(&w[..i]);
                    nw.extend(ew);
                    nw.extend_from_slice(&w[i + 2..]);
                    pending.push((&c * &ec, nw));
                }
            }
        }
    }
    done
}

fn add_to(map: &mut BTreeMap<Word, CycScalar>, w: Word, c: CycScalar) {
    match map.get_mut(&w) {
        Some(e) => {
            *e += &c;
            if e.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            if !c.is_zero() {
                map.insert(w, c);
            }
        }
    }
}

type CacheKey = (AlgebraId, u32, Word);
type Cache = Mutex<HashMap<CacheKey, Vec<(Word, CycScalar)>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(alg: AlgebraId, f: &'static CycloField, w: &Word, s: Strategy) -> Option<Vec<(Word, CycScalar)>> {
    // only the default strategy uses the memo, so the two strategies stay
    // independent in confluence tests
    if s != Strategy::Leftmost || w.len() < 3 {
        return None;
    }
    let key = (alg, f.order(), w.clone());
    if let Some(v) = cache().lock().expect("rewrite cache").get(&key) {
        return Some(v.clone());
    }
    // reduce the word alone with the memo disabled for this key, then store
    let mut pending: Vec<(CycScalar, Word)> = Vec::new();
    let mut done: BTreeMap<Word, CycScalar> = BTreeMap::new();
    match find_redex(alg, f, w, s) {
        None => return None,
        Some((i, exp)) => {
            for (ec, ew) in exp {
                let mut nw = Vec::with_capacity(w.len() + ew.len());
                nw.extend_from_slice(&w[..i]);
                nw.extend(ew);
                nw.extend_from_slice(&w[i + 2..]);
                pending.push((ec, nw));
            }
        }
    }
    for (nw, nc) in reduce(alg, f, pending, s) {
        add_to(&mut done, nw, nc);
    }
    let v: Vec<(Word, CycScalar)> = done.into_iter().collect();
    cache().lock().expect("rewrite cache").insert(key, v.clone());
    Some(v)
}
