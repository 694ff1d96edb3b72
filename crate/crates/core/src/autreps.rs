//! Representations of braid-like groups by free group automorphisms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::free::{conj_auto, FreeAuto, FreeBasis, FreeWord};
use crate::words::{Family, GenSym, GroupWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutRep {
    /// Artin's action of B_n on F_n.
    Artin,
    /// Artin on sigma, rho and alpha acting as the generator swap.
    Welded,
    /// `eps(i,j)` raised to the exponent sum of a T_n word.
    Eps(usize, usize),
    /// `t_i -> eps(i,i+1)^k`.
    Phi(i64),
    /// `t_i -> eps(i,i+1)^k eps(i+1,i)^l`.
    Psi(i64, i64),
    /// T_n into Aut of the free group with two extra letters per generator.
    Xi,
    /// Phi on tau, Artin on sigma.
    PhiTilde(i64),
    /// Psi on tau, Artin on sigma.
    PsiTilde(i64, i64),
    /// PsiTilde conjugated by an extra generator `y` on tau.
    PsiBig(i64, i64),
}

impl AutRep {
    /// Parses `artin`, `welded`, `eps`, `phi`, `psi`, `xi`, `phi_tilde`,
    /// `psi_tilde`, `Psi_big` with parameters taken from `params`
    /// (`k`, `l`, `i`, `j`).
    pub fn parse(name: &str, params: &BTreeMap<String, i64>) -> Result<Self> {
        let get = |key: &str, default: Option<i64>| -> Result<i64> {
            params
                .get(key)
                .copied()
                .or(default)
                .ok_or_else(|| Error::BadParameters(format!("{name} needs parameter {key}")))
        };
        let idx = |key: &str| -> Result<usize> {
            let v = get(key, None)?;
            usize::try_from(v).map_err(|_| Error::BadParameters(format!("{key} must be positive")))
        };
        Ok(match name {
            "artin" => AutRep::Artin,
            "welded" => AutRep::Welded,
            "eps" => AutRep::Eps(idx("i")?, idx("j")?),
            "phi" => AutRep::Phi(get("k", None)?),
            "psi" => AutRep::Psi(get("k", None)?, get("l", None)?),
            "xi" => AutRep::Xi,
            "phi_tilde" => AutRep::PhiTilde(get("k", None)?),
            "psi_tilde" => AutRep::PsiTilde(get("k", None)?, get("l", None)?),
            "Psi_big" | "psi_big" => AutRep::PsiBig(get("k", None)?, get("l", None)?),
            other => return Err(Error::UnknownRepresentation(other.to_string())),
        })
    }

    fn allows(self, family: Family) -> bool {
        use AutRep::*;
        match self {
            Artin => family == Family::Sigma,
            Welded => matches!(family, Family::Sigma | Family::Rho | Family::Alpha),
            Eps(..) | Phi(_) | Psi(..) | Xi => family == Family::Tau,
            PhiTilde(_) | PsiTilde(..) | PsiBig(..) => matches!(family, Family::Sigma | Family::Tau),
        }
    }

    /// The free group the representation acts on.
    pub fn basis(self, n: usize) -> Arc<FreeBasis> {
        match self {
            AutRep::Xi => FreeBasis::with_pairs(n),
            AutRep::PsiBig(..) => FreeBasis::with_y(n),
            _ => FreeBasis::standard(n),
        }
    }

    /// Automorphism assigned to a single generator.
    pub fn generator_auto(self, n: usize, g: GenSym) -> Result<FreeAuto> {
        if !self.allows(g.family) {
            return Err(Error::IllegalGenerator { generator: g.to_string(), context: self.to_string() });
        }
        if g.index == 0 || g.index >= n {
            return Err(Error::IndexOutOfRange(format!("{g} with {n} strands")));
        }
        let basis = self.basis(n);
        let (i, j) = (g.index - 1, g.index);
        match (self, g.family) {
            (_, Family::Sigma) => artin_sigma(&basis, i),
            (_, Family::Rho | Family::Alpha) => swap(&basis, i),
            (AutRep::Eps(a, b), _) => {
                if a == b || a == 0 || b == 0 || a > n || b > n {
                    return Err(Error::BadParameters(format!("eps({a},{b}) with {n} strands")));
                }
                conj_auto(&basis, a - 1, b - 1, 1)
            }
            (AutRep::Phi(k) | AutRep::PhiTilde(k), _) => conj_auto(&basis, i, j, k),
            (AutRep::Psi(k, l) | AutRep::PsiTilde(k, l), _) => conj_auto(&basis, i, j, k)?.then(&conj_auto(&basis, j, i, l)?),
            (AutRep::PsiBig(k, l), _) => {
                let y = n;
                let c = conj_auto(&basis, i, y, 1)?.then(&conj_auto(&basis, j, y, 1)?)?;
                conj_auto(&basis, i, j, k)?.then(&conj_auto(&basis, j, i, l)?)?.then(&c)
            }
            (AutRep::Xi, _) => {
                let (ya, yb) = (n + 2 * i, n + 2 * i + 1);
                FreeAuto::from_moved(
                    &basis,
                    vec![
                        (i, FreeWord::from_powers(&basis, &[(i, 1), (ya, 1)]), FreeWord::from_powers(&basis, &[(i, 1), (ya, -1)])),
                        (j, FreeWord::from_powers(&basis, &[(j, 1), (yb, 1)]), FreeWord::from_powers(&basis, &[(j, 1), (yb, -1)])),
                    ],
                )
            }
            _ => unreachable!("alphabet checked above"),
        }
    }
}

impl fmt::Display for AutRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutRep::Artin => f.write_str("artin"),
            AutRep::Welded => f.write_str("welded"),
            AutRep::Eps(i, j) => write!(f, "eps({i},{j})"),
            AutRep::Phi(k) => write!(f, "phi({k})"),
            AutRep::Psi(k, l) => write!(f, "psi({k},{l})"),
            AutRep::Xi => f.write_str("xi"),
            AutRep::PhiTilde(k) => write!(f, "phi_tilde({k})"),
            AutRep::PsiTilde(k, l) => write!(f, "psi_tilde({k},{l})"),
            AutRep::PsiBig(k, l) => write!(f, "Psi_big({k},{l})"),
        }
    }
}

/// `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`.
fn artin_sigma(basis: &Arc<FreeBasis>, i: usize) -> Result<FreeAuto> {
    let j = i + 1;
    FreeAuto::from_moved(
        basis,
        vec![
            (i, FreeWord::from_powers(basis, &[(i, 1), (j, 1), (i, -1)]), FreeWord::generator(basis, j)),
            (j, FreeWord::generator(basis, i), FreeWord::from_powers(basis, &[(j, -1), (i, 1), (j, 1)])),
        ],
    )
}

fn swap(basis: &Arc<FreeBasis>, i: usize) -> Result<FreeAuto> {
    let (a, b) = (FreeWord::generator(basis, i), FreeWord::generator(basis, i + 1));
    FreeAuto::from_moved(basis, vec![(i, b.clone(), b.clone()), (i + 1, a.clone(), a)])
}

/// Image of a word: generator automorphisms composed in word order.
pub fn rep_auto(rep: AutRep, n: usize, w: &GroupWord) -> Result<FreeAuto> {
    if w.strands() != n {
        return Err(Error::DimensionMismatch(format!("word has {} strands, expected {n}", w.strands())));
    }
    let basis = rep.basis(n);
    let mut cache: BTreeMap<GenSym, FreeAuto> = BTreeMap::new();
    let mut acc = FreeAuto::identity(&basis);
    for s in w.syllables() {
        let g = match cache.get(&s.generator) {
            Some(g) => g.clone(),
            None => {
                let g = rep.generator_auto(n, s.generator)?;
                cache.insert(s.generator, g.clone());
                g
            }
        };
        let step = if s.exp < 0 { g.inverse() } else { g };
        for _ in 0..s.exp.unsigned_abs() {
            // each step is certified, so the product's stored inverse is exact
            acc = acc.then_uncertified(&step)?;
        }
    }
    Ok(acc)
}

/// Whether two words have the same image, comparing `rep(u)` against
/// `rep(v)` on every generator.
pub fn auto_equal(rep: AutRep, n: usize, u: &GroupWord, v: &GroupWord) -> Result<bool> {
    Ok(rep_auto(rep, n, u)? == rep_auto(rep, n, v)?)
}

/// Whether `rep(w)` is the identity. The word is split in half and the two
/// halves compared, which keeps intermediate images short.
pub fn in_kernel(rep: AutRep, n: usize, w: &GroupWord) -> Result<bool> {
    let letters: alloc::vec::Vec<(GenSym, i64)> = w.letters().collect();
    let mid = letters.len() / 2;
    let head = GroupWord::from_letters(w.tag(), n, &letters[..mid])?;
    let tail = GroupWord::from_letters(w.tag(), n, &letters[mid..])?;
    auto_equal(rep, n, &head, &tail.inverse())
}
