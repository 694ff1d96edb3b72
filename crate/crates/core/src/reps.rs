//! Linear representations over Laurent polynomial rings, the order oracle for
//! monomial images, and relation reports.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::presentations::{relation_instances, Polarity, PresentationId};
use crate::ring::{LaurentPoly, VarSet};
use crate::words::{Family, GenSym, GroupWord, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixRep {
    /// Lawrence–Bigelow–Krammer over `Z[q^±1, t^±1]`, with the `i < k = j-1`
    /// case sending the correction term to `e(j-1,j)`.
    Lbk,
    /// The same casework with the `i < k = j-1` correction term sent to
    /// `e(j-1,i) = e(i,j-1)` exactly as written in the source formula.
    LbkPrinted,
    /// `Lbk` with `q` and `t` replaced by the given values (over `{q, t}`).
    LbkSpecial { q: LaurentPoly, t: LaurentPoly },
    /// The `q = 1` specialisation over `Z[t^±1]`.
    Psi1t,
    /// Extension of `Psi1t` to virtual braids over `Z[t^±1, t1^±1, ..]`.
    PsiV,
    /// Triangular representation of T_n over `Z[t1^±1, .., tn^±1]`.
    Theta,
}

impl MatrixRep {
    /// Parses `lbk`, `lbk_printed`, `lbk_special`, `psi1t`, `PsiV`, `theta`.
    /// `lbk_special` takes `q=` and `t=` values written over `{q, t}`.
    pub fn parse(name: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        Ok(match name {
            "lbk" => MatrixRep::Lbk,
            "lbk_printed" => MatrixRep::LbkPrinted,
            "lbk_special" => {
                let vars = lbk_vars();
                let get = |k: &str| -> Result<LaurentPoly> {
                    let text = params.get(k).ok_or_else(|| Error::BadParameters(format!("lbk_special needs {k}=")))?;
                    LaurentPoly::parse(&vars, text)
                };
                MatrixRep::LbkSpecial { q: get("q")?, t: get("t")? }
            }
            "psi1t" => MatrixRep::Psi1t,
            "PsiV" | "psiv" | "Psi" => MatrixRep::PsiV,
            "theta" => MatrixRep::Theta,
            other => return Err(Error::UnknownRepresentation(other.to_string())),
        })
    }

    pub fn name(&self) -> String {
        match self {
            MatrixRep::Lbk => "lbk".into(),
            MatrixRep::LbkPrinted => "lbk_printed".into(),
            MatrixRep::LbkSpecial { q, t } => format!("lbk_special(q={q},t={t})"),
            MatrixRep::Psi1t => "psi1t".into(),
            MatrixRep::PsiV => "PsiV".into(),
            MatrixRep::Theta => "theta".into(),
        }
    }

    fn allows(&self, family: Family) -> bool {
        match self {
            MatrixRep::PsiV => matches!(family, Family::Sigma | Family::Rho),
            MatrixRep::Theta => family == Family::Tau,
            _ => family == Family::Sigma,
        }
    }

    fn is_monomial_rep(&self) -> bool {
        matches!(self, MatrixRep::Psi1t | MatrixRep::PsiV)
    }

    pub fn vars(&self, n: usize) -> Arc<VarSet> {
        match self {
            MatrixRep::Lbk | MatrixRep::LbkPrinted | MatrixRep::LbkSpecial { .. } => lbk_vars(),
            MatrixRep::Psi1t => VarSet::new(["t"]).expect("distinct"),
            MatrixRep::PsiV => {
                let mut names = vec![String::from("t")];
                names.extend((1..n).map(|i| format!("t{i}")));
                VarSet::new(names).expect("distinct")
            }
            MatrixRep::Theta => VarSet::new((1..=n).map(|i| format!("t{i}"))).expect("distinct"),
        }
    }

    pub fn basis(&self, n: usize) -> Arc<Vec<String>> {
        match self {
            MatrixRep::Theta => Arc::new((1..n).map(|i| format!("e({i})")).collect()),
            _ => Arc::new(pairs(n).into_iter().map(|(i, j)| format!("e({i},{j})")).collect()),
        }
    }
}

impl fmt::Display for MatrixRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn lbk_vars() -> Arc<VarSet> {
    VarSet::new(["q", "t"]).expect("distinct")
}

/// Pairs `(i, j)`, `i < j`, in lexicographic order, 1-based.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            v.push((i, j));
        }
    }
    v
}

/// Position of `e(i,j)` (either order) in the lexicographic pair basis.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    debug_assert!(1 <= i && i < j && j <= n);
    // rows for first index 1..i-1 contribute (n-1) + (n-2) + ... entries
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// Sparse rows: `rows[r]` lists `(column, coefficient)`.
type BasisMap = Vec<Vec<(usize, LaurentPoly)>>;

struct Ctx {
    n: usize,
    vars: Arc<VarSet>,
    basis: Arc<Vec<String>>,
}

impl Ctx {
    fn var(&self, name: &str) -> LaurentPoly {
        LaurentPoly::var(&self.vars, name).expect("variable in ring")
    }

    fn var_pow(&self, name: &str, e: i32) -> LaurentPoly {
        LaurentPoly::var_pow(&self.vars, name, e).expect("variable in ring")
    }

    fn int(&self, c: i64) -> LaurentPoly {
        LaurentPoly::constant(&self.vars, c)
    }

    fn to_matrix(&self, map: &BasisMap) -> PolyMatrix {
        let mut rows = vec![vec![LaurentPoly::zero(&self.vars); self.basis.len()]; self.basis.len()];
        for (r, row) in map.iter().enumerate() {
            for (c, p) in row {
                rows[r][*c] = &rows[r][*c] + p;
            }
        }
        PolyMatrix::from_rows(&self.vars, &self.basis, rows).expect("square")
    }
}

fn lbk_map(ctx: &Ctx, k: usize, printed: bool) -> BasisMap {
    let n = ctx.n;
    let (q, t) = (ctx.var("q"), ctx.var("t"));
    let one = ctx.int(1);
    let qm1 = &q - &one;
    let e = |i, j| pair_index(n, i, j);
    pairs(n)
        .into_iter()
        .map(|(i, j)| {
            if k + 1 < i || k > j {
                vec![(e(i, j), one.clone())]
            } else if k + 1 == i {
                vec![(e(i - 1, j), one.clone()), (e(i, j), &one - &q)]
            } else if k == i && i + 1 < j {
                vec![(e(i, i + 1), &(&t * &q) * &qm1), (e(i + 1, j), q.clone())]
            } else if k == i {
                vec![(e(i, j), &t * &q.pow(2))]
            } else if i < k && k + 1 < j {
                vec![(e(i, j), one.clone()), (e(k, k + 1), &(&t * &q.pow((k - i) as u32)) * &qm1.pow(2))]
            } else if k + 1 == j {
                let corr = &(&t * &q.pow((j - i) as u32)) * &qm1;
                let target = if printed { e(j - 1, i) } else { e(j - 1, j) };
                vec![(e(i, j - 1), one.clone()), (target, corr)]
            } else {
                debug_assert_eq!(k, j);
                vec![(e(i, j), &one - &q), (e(i, j + 1), q.clone())]
            }
        })
        .collect()
}

fn swap_index(k: usize, x: usize) -> usize {
    if x == k {
        k + 1
    } else if x == k + 1 {
        k
    } else {
        x
    }
}

fn psi1t_map(ctx: &Ctx, k: usize) -> BasisMap {
    let n = ctx.n;
    pairs(n)
        .into_iter()
        .map(|(i, j)| {
            if (i, j) == (k, k + 1) {
                vec![(pair_index(n, i, j), ctx.var("t"))]
            } else {
                vec![(pair_index(n, swap_index(k, i), swap_index(k, j)), ctx.int(1))]
            }
        })
        .collect()
}

fn rho_map(ctx: &Ctx, i: usize) -> BasisMap {
    let n = ctx.n;
    let ti = format!("t{i}");
    pairs(n)
        .into_iter()
        .map(|(a, b)| {
            let (r, c) = if (a, b) == (i, i + 1) {
                ((a, b), ctx.int(1))
            } else if a == i {
                ((i + 1, b), ctx.var(&ti))
            } else if a == i + 1 {
                ((i, b), ctx.var_pow(&ti, -1))
            } else if b == i {
                ((a, i + 1), ctx.var(&ti))
            } else if b == i + 1 {
                ((a, i), ctx.var_pow(&ti, -1))
            } else {
                ((a, b), ctx.int(1))
            };
            vec![(pair_index(n, r.0, r.1), c)]
        })
        .collect()
}

fn theta_map(ctx: &Ctx, i: usize) -> BasisMap {
    let m = ctx.n - 1;
    let inv_next = ctx.var_pow(&format!("t{}", i + 1), -1);
    (1..=m)
        .map(|r| {
            if r != i {
                vec![(r - 1, ctx.int(1))]
            } else {
                let mut row = vec![(i - 1, inv_next.clone())];
                // e_n lies outside the module, so tau_{n-1} drops that term
                if i < m {
                    let c = &inv_next * &(&ctx.var(&format!("t{i}")) - &ctx.int(1));
                    row.push((i, c));
                }
                row
            }
        })
        .collect()
}

/// Inverts a monomial basis map directly.
fn invert_monomial(map: &BasisMap) -> Option<BasisMap> {
    let mut inv: BasisMap = vec![Vec::new(); map.len()];
    for (r, row) in map.iter().enumerate() {
        let [(c, s)] = row.as_slice() else { return None };
        inv[*c] = vec![(r, s.inverse_unit()?)];
    }
    Some(inv)
}

fn matrix_rows(m: &PolyMatrix) -> BasisMap {
    (0..m.dim())
        .map(|r| m.row(r).iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(c, p)| (c, p.clone())).collect())
        .collect()
}

/// Generator images of one representation, built once and reused.
pub struct RepTable {
    rep: MatrixRep,
    ctx: Ctx,
    maps: BTreeMap<(GenSym, bool), BasisMap>,
    mats: BTreeMap<(GenSym, bool), PolyMatrix>,
}

impl RepTable {
    pub fn new(rep: &MatrixRep, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        Ok(RepTable { rep: rep.clone(), ctx: Ctx { n, vars: rep.vars(n), basis: rep.basis(n) }, maps: BTreeMap::new(), mats: BTreeMap::new() })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.ctx.vars
    }

    pub fn basis(&self) -> &Arc<Vec<String>> {
        &self.ctx.basis
    }

    pub fn identity(&self) -> PolyMatrix {
        PolyMatrix::identity(&self.ctx.vars, &self.ctx.basis)
    }

    fn forward_map(&self, g: GenSym) -> Result<BasisMap> {
        let k = g.index;
        let ctx = &self.ctx;
        Ok(match (&self.rep, g.family) {
            (MatrixRep::Lbk, _) => lbk_map(ctx, k, false),
            (MatrixRep::LbkPrinted, _) => lbk_map(ctx, k, true),
            (MatrixRep::LbkSpecial { q, t }, _) => {
                let sub = |p: &LaurentPoly| -> Result<LaurentPoly> {
                    // simultaneous substitution through fresh names would need a
                    // bigger ring; q and t values never mention each other here
                    p.substitute("q", q)?.substitute("t", t)
                };
                if t.terms().any(|(e, _)| e[0] != 0) {
                    return Err(Error::BadParameters("t value must not involve q".into()));
                }
                lbk_map(ctx, k, false)
                    .into_iter()
                    .map(|row| row.into_iter().map(|(c, p)| Ok((c, sub(&p)?))).collect::<Result<Vec<_>>>())
                    .collect::<Result<BasisMap>>()?
            }
            (MatrixRep::Psi1t | MatrixRep::PsiV, Family::Sigma) => psi1t_map(ctx, k),
            (MatrixRep::PsiV, Family::Rho) => rho_map(ctx, k),
            (MatrixRep::Theta, _) => theta_map(ctx, k),
            _ => unreachable!("alphabet checked by caller"),
        })
    }

    fn check(&self, g: GenSym) -> Result<()> {
        if !self.rep.allows(g.family) {
            return Err(Error::IllegalGenerator { generator: g.to_string(), context: self.rep.name() });
        }
        if g.index == 0 || g.index >= self.ctx.n {
            return Err(Error::IndexOutOfRange(format!("{g} with {} strands", self.ctx.n)));
        }
        Ok(())
    }

    /// Basis map of `g` (or of its inverse).
    pub fn generator_map(&mut self, g: GenSym, inverse: bool) -> Result<&BasisMap> {
        self.check(g)?;
        if !self.maps.contains_key(&(g, inverse)) {
            let fwd = self.forward_map(g)?;
            let map = if !inverse {
                fwd
            } else if let Some(inv) = invert_monomial(&fwd) {
                inv
            } else {
                let m = self.ctx.to_matrix(&fwd);
                let inv = m.inverse_unit_pivot()?;
                if !m.mul(&inv)?.is_identity() {
                    return Err(Error::NotInvertible);
                }
                matrix_rows(&inv)
            };
            self.maps.insert((g, inverse), map);
        }
        Ok(&self.maps[&(g, inverse)])
    }

    pub fn generator_matrix(&mut self, g: GenSym, inverse: bool) -> Result<PolyMatrix> {
        if let Some(m) = self.mats.get(&(g, inverse)) {
            return Ok(m.clone());
        }
        let map = self.generator_map(g, inverse)?.clone();
        let m = self.ctx.to_matrix(&map);
        self.mats.insert((g, inverse), m.clone());
        Ok(m)
    }

    fn check_word(&self, w: &GroupWord) -> Result<()> {
        if w.strands() != self.ctx.n {
            return Err(Error::DimensionMismatch(format!("word has {} strands, expected {}", w.strands(), self.ctx.n)));
        }
        w.generators().try_for_each(|g| self.check(g))
    }

    /// Product of generator matrices in word order.
    pub fn word_matrix(&mut self, w: &GroupWord) -> Result<PolyMatrix> {
        self.check_word(w)?;
        let mut acc = self.identity();
        for s in w.syllables() {
            let g = self.generator_matrix(s.generator, s.exp < 0)?;
            acc = acc.mul(&g.pow(s.exp.unsigned_abs()))?;
        }
        Ok(acc)
    }

    /// Same matrix computed by pushing each basis vector through the
    /// generator basis maps one letter at a time.
    pub fn word_matrix_by_basis_maps(&mut self, w: &GroupWord) -> Result<PolyMatrix> {
        self.check_word(w)?;
        let dim = self.ctx.basis.len();
        let zero = LaurentPoly::zero(&self.ctx.vars);
        let mut rows: Vec<Vec<LaurentPoly>> =
            (0..dim).map(|r| (0..dim).map(|c| if r == c { LaurentPoly::one(&self.ctx.vars) } else { zero.clone() }).collect()).collect();
        for (g, e) in w.letters() {
            let map = self.generator_map(g, e < 0)?.clone();
            for row in rows.iter_mut() {
                let mut next = vec![zero.clone(); dim];
                for (c, coeff) in row.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for (d, p) in &map[c] {
                        next[*d] = &next[*d] + &(coeff * p);
                    }
                }
                *row = next;
            }
        }
        PolyMatrix::from_rows(&self.ctx.vars, &self.ctx.basis, rows)
    }
}

/// Matrix of a word: product of generator matrices, leftmost letter first.
pub fn rep_matrix(rep: &MatrixRep, n: usize, w: &GroupWord) -> Result<PolyMatrix> {
    RepTable::new(rep, n)?.word_matrix(w)
}

fn require_quotient_rep(rep: &MatrixRep) -> Result<()> {
    if rep.is_monomial_rep() {
        Ok(())
    } else {
        Err(Error::BadParameters(format!("{rep} does not decide a quotient word problem")))
    }
}

/// Equality of two words in the crystallographic quotient the representation
/// detects (`psi1t` for braids, `PsiV` for virtual braids).
pub fn quotient_equal(rep: &MatrixRep, n: usize, w1: &GroupWord, w2: &GroupWord) -> Result<bool> {
    require_quotient_rep(rep)?;
    let mut table = RepTable::new(rep, n)?;
    Ok(table.word_matrix(w1)? == table.word_matrix(w2)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Finite(u64),
    Infinite,
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Finite(m) => write!(f, "finite({m})"),
            OrderResult::Infinite => f.write_str("infinite"),
        }
    }
}

/// Order of a monomial matrix. With `m` the order of its permutation
/// pattern, `M^m` is diagonal; it has finite order exactly when every
/// diagonal entry is a constant `±1`.
pub fn monomial_order(m: &PolyMatrix) -> Result<OrderResult> {
    let d = m.monomial_decompose()?;
    let k = d.pattern_order();
    let p = m.pow(k);
    let diag = p.monomial_decompose()?;
    debug_assert!(diag.is_identity_pattern());
    let mut sign_flip = false;
    for s in &diag.scalars {
        let (e, c) = s.single_term().ok_or(Error::NotMonomial)?;
        if e.iter().any(|&x| x != 0) || !c.abs().is_one() {
            return Ok(OrderResult::Infinite);
        }
        if c.is_negative() {
            sign_flip = true;
        }
    }
    Ok(OrderResult::Finite(if sign_flip { 2 * k } else { k }))
}

pub fn element_order(rep: &MatrixRep, n: usize, w: &GroupWord) -> Result<OrderResult> {
    monomial_order(&rep_matrix(rep, n, w)?)
}

/// Permutation pattern of basis slots plus the monomial scalar in each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalProfile {
    pub perm: Permutation,
    pub scalars: Vec<LaurentPoly>,
}

impl CrystalProfile {
    /// `(coefficient, exponent vector)` per basis slot.
    pub fn exponent_table(&self) -> Vec<(BigInt, Vec<i32>)> {
        self.scalars.iter().map(|s| s.single_term().map(|(e, c)| (c.clone(), e.clone())).expect("monomial")).collect()
    }
}

pub fn crystal_profile(rep: &MatrixRep, n: usize, w: &GroupWord) -> Result<CrystalProfile> {
    let d = rep_matrix(rep, n, w)?.monomial_decompose()?;
    let perm = Permutation::from_images(d.perm).ok_or(Error::NotMonomial)?;
    Ok(CrystalProfile { perm, scalars: d.scalars })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationStatus {
    Holds,
    Fails,
}

impl fmt::Display for RelationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationStatus::Holds => "holds",
            RelationStatus::Fails => "fails",
        })
    }
}

/// A basis vector whose images differ, with both images written out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub basis: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationOutcome {
    pub family: String,
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub polarity: Polarity,
    pub images_equal: bool,
    /// For asserted-unequal instances, `Holds` means the images differ.
    pub status: RelationStatus,
    pub witness: Option<Witness>,
    /// Matrix-product and basis-map evaluation printed identically.
    pub paths_agree: bool,
}

fn row_text(m: &PolyMatrix, r: usize) -> String {
    let terms: Vec<String> = m
        .row(r)
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(c, p)| if p.is_one() { m.basis()[c].clone() } else { format!("({p})*{}", m.basis()[c]) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn matrix_text(m: &PolyMatrix) -> String {
    (0..m.dim()).map(|r| row_text(m, r)).collect::<Vec<_>>().join("; ")
}

/// Checks every instance of a relation family under a representation,
/// optionally after substituting variables (applied in order).
pub fn relation_report(
    pres: PresentationId,
    rep: &MatrixRep,
    n: usize,
    specialization: &[(String, LaurentPoly)],
) -> Result<Vec<RelationOutcome>> {
    let mut table = RepTable::new(rep, n)?;
    let specialize = |m: PolyMatrix| -> Result<PolyMatrix> {
        specialization.iter().try_fold(m, |m, (name, value)| m.substitute(name, value))
    };
    let mut out = Vec::new();
    for inst in relation_instances(pres, n)? {
        let mut eval = |w: &GroupWord| -> Result<(PolyMatrix, bool)> {
            let a = table.word_matrix(w)?;
            let b = table.word_matrix_by_basis_maps(w)?;
            let agree = matrix_text(&a) == matrix_text(&b);
            Ok((specialize(a)?, agree))
        };
        let (l, la) = eval(&inst.lhs)?;
        let (r, ra) = eval(&inst.rhs)?;
        let images_equal = l == r;
        let status = match (inst.polarity, images_equal) {
            (Polarity::Equal, true) | (Polarity::Unequal, false) => RelationStatus::Holds,
            _ => RelationStatus::Fails,
        };
        let witness = l.first_difference(&r).map(|(row, _)| Witness {
            basis: l.basis()[row].clone(),
            lhs: row_text(&l, row),
            rhs: row_text(&r, row),
        });
        out.push(RelationOutcome {
            family: inst.family,
            label: inst.label,
            lhs: inst.lhs.to_string(),
            rhs: inst.rhs.to_string(),
            polarity: inst.polarity,
            images_equal,
            status,
            witness,
            paths_agree: la && ra,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, GroupTag};

    fn w(s: &str, tag: GroupTag, n: usize) -> GroupWord {
        parse_word(s, tag, n).unwrap()
    }

    fn poly(rep: &MatrixRep, n: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(&rep.vars(n), s).unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let n = 5;
        for (k, (i, j)) in pairs(n).into_iter().enumerate() {
            assert_eq!(pair_index(n, i, j), k);
            assert_eq!(pair_index(n, j, i), k);
        }
    }

    #[test]
    fn lbk_sigma1_fixture() {
        let rep = MatrixRep::Lbk;
        let m = rep_matrix(&rep, 3, &w("s1", GroupTag::B, 3)).unwrap();
        let p = |s| poly(&rep, 3, s);
        let expect = [["t*q^2", "0", "0"], ["t*q^2-t*q", "0", "q"], ["0", "1", "1-q"]];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(m.get(r, c), &p(expect[r][c]), "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn psiv_rho_and_lambda() {
        let rep = MatrixRep::PsiV;
        let m = rep_matrix(&rep, 3, &w("r1", GroupTag::VB, 3)).unwrap();
        let d = m.monomial_decompose().unwrap();
        assert_eq!(d.perm, [0, 2, 1]);
        assert_eq!(d.scalars.iter().map(|s| s.to_string()).collect::<Vec<_>>(), ["1", "t1", "t1^-1"]);
        let l12 = rep_matrix(&rep, 3, &w("l(1,2)", GroupTag::VB, 3)).unwrap();
        assert!(l12.is_diagonal());
        assert_eq!(l12.diagonal_entries().iter().map(|s| s.to_string()).collect::<Vec<_>>(), ["t^-1", "t1", "t1^-1"]);
        assert!(matches!(rep_matrix(&MatrixRep::Psi1t, 3, &w("r1", GroupTag::VB, 3)), Err(Error::IllegalGenerator { .. })));
    }

    #[test]
    fn orders() {
        let rep = MatrixRep::Psi1t;
        assert_eq!(element_order(&rep, 3, &GroupWord::identity(GroupTag::B, 3)).unwrap(), OrderResult::Finite(1));
        assert_eq!(element_order(&rep, 3, &w("a(1,2)^-1 s1 s2", GroupTag::B, 3)).unwrap(), OrderResult::Finite(3));
        assert_eq!(element_order(&rep, 3, &w("s1", GroupTag::B, 3)).unwrap(), OrderResult::Infinite);
        assert_eq!(element_order(&MatrixRep::Lbk, 3, &w("s1", GroupTag::B, 3)), Err(Error::NotMonomial));
    }

    #[test]
    fn lambda13_middle_entry() {
        // rho2 l(1,2) rho2 swaps the first two diagonal slots of l(1,2)
        let rep = MatrixRep::PsiV;
        let m = rep_matrix(&rep, 3, &w("l(1,3)", GroupTag::VB, 3)).unwrap();
        assert_eq!(m.diagonal_entries().iter().map(|s| s.to_string()).collect::<Vec<_>>(), ["t1", "t^-1", "t1^-1"]);
    }

    #[test]
    fn theta_shape() {
        let rep = MatrixRep::Theta;
        let m = rep_matrix(&rep, 4, &w("t1", GroupTag::T, 4)).unwrap();
        assert_eq!(m.get(0, 0).to_string(), "t2^-1");
        assert_eq!(m.get(0, 1).to_string(), "-t2^-1+t1*t2^-1");
        let last = rep_matrix(&rep, 4, &w("t3", GroupTag::T, 4)).unwrap();
        assert_eq!(last.get(2, 2).to_string(), "t4^-1");
        assert!(m.transpose().is_lower_triangular());
    }

    #[test]
    fn quotient_equal_examples() {
        let rep = MatrixRep::Psi1t;
        assert!(quotient_equal(&rep, 3, &w("a(1,2) a(1,3)", GroupTag::B, 3), &w("a(1,3) a(1,2)", GroupTag::B, 3)).unwrap());
        assert!(!quotient_equal(&MatrixRep::PsiV, 3, &w("l(1,2)", GroupTag::VB, 3), &w("l(2,1)", GroupTag::VB, 3)).unwrap());
        assert!(quotient_equal(&MatrixRep::Lbk, 3, &w("s1", GroupTag::B, 3), &w("s1", GroupTag::B, 3)).is_err());
    }
}
