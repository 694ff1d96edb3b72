//! Catalog of defining relations for the braid-like groups.
//!
//! Every family is enumerated over all legal index tuples. Families flagged
//! [`Polarity::Unequal`] list pairs of words that are known to be *different*
//! in the ambient group (the forbidden relations).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::words::{derived_word, Derived, GenSym, GroupTag, GroupWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationId {
    /// Braid relations.
    Braid,
    /// Symmetric group relations on alpha.
    SymmetricAlpha,
    /// Mixed relations of the conjugating automorphism group.
    CnMixed,
    /// Basis-conjugating relations written through eps words.
    McCool,
    /// Singular braid relations.
    Singular,
    /// Symmetric group relations on rho.
    SymmetricRho,
    /// Virtual mixed relations.
    VbMixed,
    /// The two forbidden relations, asserted unequal in VB_n.
    Forbidden,
    /// Pure virtual relations in the lambda generators.
    Vp,
    /// The six VP_3 relations in the order used for the free product model.
    Vp3,
    /// Relations of H_n in the x generators.
    Hn,
    /// Welded mixed relations.
    WbMixed,
    /// `s_{i+1} al_i al_{i+1} = al_i al_{i+1} s_i`, which holds in WB_n.
    WeldedSymmetric,
    /// `al_{i+1} s_i s_{i+1} = s_i s_{i+1} al_i`, which does not hold in WB_n.
    WeldedForbidden,
    /// Universal braid group relations.
    Ub,
    /// Far commutativity of T_n.
    Tn,
}

impl PresentationId {
    pub const ALL: [PresentationId; 16] = [
        PresentationId::Braid,
        PresentationId::SymmetricAlpha,
        PresentationId::CnMixed,
        PresentationId::McCool,
        PresentationId::Singular,
        PresentationId::SymmetricRho,
        PresentationId::VbMixed,
        PresentationId::Forbidden,
        PresentationId::Vp,
        PresentationId::Vp3,
        PresentationId::Hn,
        PresentationId::WbMixed,
        PresentationId::WeldedSymmetric,
        PresentationId::WeldedForbidden,
        PresentationId::Ub,
        PresentationId::Tn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresentationId::Braid => "braid",
            PresentationId::SymmetricAlpha => "symmetric-alpha",
            PresentationId::CnMixed => "cn-mixed",
            PresentationId::McCool => "mccool",
            PresentationId::Singular => "singular",
            PresentationId::SymmetricRho => "symmetric-rho",
            PresentationId::VbMixed => "vb-mixed",
            PresentationId::Forbidden => "forbidden",
            PresentationId::Vp => "vp",
            PresentationId::Vp3 => "vp3",
            PresentationId::Hn => "hn",
            PresentationId::WbMixed => "wb-mixed",
            PresentationId::WeldedSymmetric => "welded-symmetric",
            PresentationId::WeldedForbidden => "welded-forbidden",
            PresentationId::Ub => "ub",
            PresentationId::Tn => "tn",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPresentation(s.to_string()))
    }

    pub fn group(self) -> GroupTag {
        use PresentationId::*;
        match self {
            Braid => GroupTag::B,
            SymmetricAlpha | CnMixed | McCool | WbMixed | WeldedSymmetric | WeldedForbidden => GroupTag::WB,
            Singular => GroupTag::S,
            SymmetricRho | VbMixed | Forbidden | Vp | Vp3 | Hn => GroupTag::VB,
            Ub => GroupTag::UB,
            Tn => GroupTag::T,
        }
    }

    fn min_strands(self) -> usize {
        use PresentationId::*;
        match self {
            Braid | SymmetricAlpha | SymmetricRho | Singular | Ub | Tn => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for PresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// The two sides are equal in the group.
    Equal,
    /// The two sides are known to differ in the group.
    Unequal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    /// Relation family label such as `braid-far` or `vp3-3`.
    pub family: String,
    /// Family label plus indices, unique within a catalog listing.
    pub label: String,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
    pub polarity: Polarity,
}

/// A word spelled in family letters.
#[derive(Clone, Copy)]
enum L {
    S(usize, i64),
    R(usize),
    T(usize),
    Al(usize),
}

struct Builder {
    tag: GroupTag,
    n: usize,
    out: Vec<RelationInstance>,
}

impl Builder {
    fn word(&self, letters: &[L]) -> GroupWord {
        let syl = letters.iter().map(|l| match *l {
            L::S(i, e) => (GenSym::sigma(i), e),
            L::R(i) => (GenSym::rho(i), 1),
            L::T(i) => (GenSym::tau(i), 1),
            L::Al(i) => (GenSym::alpha(i), 1),
        });
        GroupWord::new(self.tag, self.n, syl).expect("catalog words are in range")
    }

    fn push(&mut self, family: &str, idx: String, lhs: GroupWord, rhs: GroupWord, polarity: Polarity) {
        self.out.push(RelationInstance { family: family.to_string(), label: format!("{family}{idx}"), lhs, rhs, polarity });
    }

    fn eq(&mut self, family: &str, idx: String, lhs: &[L], rhs: &[L]) {
        let (l, r) = (self.word(lhs), self.word(rhs));
        self.push(family, idx, l, r, Polarity::Equal);
    }

    fn ne(&mut self, family: &str, idx: String, lhs: &[L], rhs: &[L]) {
        let (l, r) = (self.word(lhs), self.word(rhs));
        self.push(family, idx, l, r, Polarity::Unequal);
    }

    fn derived(&self, d: Derived) -> GroupWord {
        derived_word(d, self.n).expect("indices in range").with_tag(self.tag).expect("alphabet")
    }

    fn prod(&self, parts: &[GroupWord]) -> GroupWord {
        GroupWord::product(self.tag, self.n, parts).expect("same group")
    }

    /// Pairs `i < j` with `|i - j| >= 2` among generator indices.
    fn far_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.n - 1;
        let mut v = Vec::new();
        for i in 1..=m {
            for j in i + 2..=m {
                v.push((i, j));
            }
        }
        v
    }

    /// Ordered pairs `(i, j)`, `i != j`, with `|i - j| >= 2`.
    fn far_ordered(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (i, j) in self.far_pairs() {
            v.push((i, j));
            v.push((j, i));
        }
        v.sort_unstable();
        v
    }

    fn braid(&mut self) {
        for i in 1..self.n.saturating_sub(1) {
            self.eq("braid-adjacent", format!("[{i}]"), &[L::S(i, 1), L::S(i + 1, 1), L::S(i, 1)], &[L::S(i + 1, 1), L::S(i, 1), L::S(i + 1, 1)]);
        }
        for (i, j) in self.far_pairs() {
            self.eq("braid-far", format!("[{i},{j}]"), &[L::S(i, 1), L::S(j, 1)], &[L::S(j, 1), L::S(i, 1)]);
        }
    }

    fn symmetric(&mut self, perm: fn(usize) -> L, labels: [&str; 3]) {
        for i in 1..self.n.saturating_sub(1) {
            self.eq(labels[0], format!("[{i}]"), &[perm(i), perm(i + 1), perm(i)], &[perm(i + 1), perm(i), perm(i + 1)]);
        }
        for (i, j) in self.far_pairs() {
            self.eq(labels[1], format!("[{i},{j}]"), &[perm(i), perm(j)], &[perm(j), perm(i)]);
        }
        for i in 1..self.n {
            self.eq(labels[2], format!("[{i}]"), &[perm(i), perm(i)], &[]);
        }
    }

    /// Shared by C_n and WB_n.
    fn welded_mixed(&mut self, labels: [&str; 3]) {
        for (i, j) in self.far_ordered() {
            self.eq(labels[0], format!("[{i},{j}]"), &[L::Al(i), L::S(j, 1)], &[L::S(j, 1), L::Al(i)]);
        }
        for i in 1..self.n - 1 {
            self.eq(labels[1], format!("[{i}]"), &[L::S(i, 1), L::Al(i + 1), L::Al(i)], &[L::Al(i + 1), L::Al(i), L::S(i + 1, 1)]);
        }
        for i in 1..self.n - 1 {
            self.eq(labels[2], format!("[{i}]"), &[L::S(i + 1, 1), L::S(i, 1), L::Al(i + 1)], &[L::Al(i), L::S(i + 1, 1), L::S(i, 1)]);
        }
    }

    fn distinct_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut v = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    if a != b && b != c && a != c {
                        v.push((a, b, c));
                    }
                }
            }
        }
        v
    }

    fn distinct_quads(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut v = Vec::new();
        for (a, b, c) in self.distinct_triples() {
            for d in 1..=self.n {
                if d != a && d != b && d != c {
                    v.push((a, b, c, d));
                }
            }
        }
        v
    }

    fn mccool(&mut self) {
        let e = |s: &Self, i, j| s.derived(Derived::Eps(i, j));
        for (i, j, k, l) in self.distinct_quads() {
            let (a, b) = (e(self, i, j), e(self, k, l));
            let (lhs, rhs) = (self.prod(&[a.clone(), b.clone()]), self.prod(&[b, a]));
            self.push("mccool-disjoint", format!("[{i},{j},{k},{l}]"), lhs, rhs, Polarity::Equal);
        }
        for (i, j, k) in self.distinct_triples() {
            let (a, b) = (e(self, i, j), e(self, k, j));
            let (lhs, rhs) = (self.prod(&[a.clone(), b.clone()]), self.prod(&[b, a]));
            self.push("mccool-shared", format!("[{i},{j},{k}]"), lhs, rhs, Polarity::Equal);
        }
        for (i, j, k) in self.distinct_triples() {
            let ab = self.prod(&[e(self, i, j), e(self, k, j)]);
            let c = e(self, i, k);
            let (lhs, rhs) = (self.prod(&[ab.clone(), c.clone()]), self.prod(&[c, ab]));
            self.push("mccool-triangle", format!("[{i},{j},{k}]"), lhs, rhs, Polarity::Equal);
        }
    }

    fn singular(&mut self) {
        self.braid();
        for (i, j) in self.far_pairs() {
            self.eq("s-tt", format!("[{i},{j}]"), &[L::T(i), L::T(j)], &[L::T(j), L::T(i)]);
        }
        for (i, j) in self.far_ordered() {
            self.eq("s-ts", format!("[{i},{j}]"), &[L::T(i), L::S(j, 1)], &[L::S(j, 1), L::T(i)]);
        }
        for i in 1..self.n {
            self.eq("s-comm", format!("[{i}]"), &[L::T(i), L::S(i, 1)], &[L::S(i, 1), L::T(i)]);
        }
        for i in 1..self.n.saturating_sub(1) {
            self.eq("s-mix1", format!("[{i}]"), &[L::S(i, 1), L::S(i + 1, 1), L::T(i)], &[L::T(i + 1), L::S(i, 1), L::S(i + 1, 1)]);
        }
        for i in 1..self.n.saturating_sub(1) {
            self.eq("s-mix2", format!("[{i}]"), &[L::S(i + 1, 1), L::S(i, 1), L::T(i + 1)], &[L::T(i), L::S(i + 1, 1), L::S(i, 1)]);
        }
    }

    fn vb_mixed(&mut self) {
        for (i, j) in self.far_ordered() {
            self.eq("vb-far", format!("[{i},{j}]"), &[L::S(i, 1), L::R(j)], &[L::R(j), L::S(i, 1)]);
        }
        for i in 1..self.n - 1 {
            self.eq("vb-slide", format!("[{i}]"), &[L::R(i), L::R(i + 1), L::S(i, 1)], &[L::S(i + 1, 1), L::R(i), L::R(i + 1)]);
        }
    }

    fn forbidden(&mut self) {
        for i in 1..self.n - 1 {
            self.ne("forbidden-head", format!("[{i}]"), &[L::R(i), L::S(i + 1, 1), L::S(i, 1)], &[L::S(i + 1, 1), L::S(i, 1), L::R(i + 1)]);
            self.ne("forbidden-tail", format!("[{i}]"), &[L::R(i + 1), L::S(i, 1), L::S(i + 1, 1)], &[L::R(i), L::S(i + 1, 1), L::S(i, 1)]);
        }
    }

    fn lam(&self, i: usize, j: usize) -> GroupWord {
        self.derived(Derived::Lambda(i, j))
    }

    fn vp(&mut self) {
        let quads = self.distinct_quads();
        for (i, j, k, l) in quads {
            if (i, j) > (k, l) {
                continue;
            }
            let (a, b) = (self.lam(i, j), self.lam(k, l));
            let (lhs, rhs) = (self.prod(&[a.clone(), b.clone()]), self.prod(&[b, a]));
            self.push("vp-disjoint", format!("[{i},{j},{k},{l}]"), lhs, rhs, Polarity::Equal);
        }
        for (k, i, j) in self.distinct_triples() {
            self.triple_relation("vp-triple", format!("[{k},{i},{j}]"), k, i, j);
        }
    }

    /// `l_{k,i} l_{k,j} l_{i,j} = l_{i,j} l_{k,j} l_{k,i}`
    fn triple_relation(&mut self, family: &str, idx: String, k: usize, i: usize, j: usize) {
        let (a, b, c) = (self.lam(k, i), self.lam(k, j), self.lam(i, j));
        let lhs = self.prod(&[a.clone(), b.clone(), c.clone()]);
        let rhs = self.prod(&[c, b, a]);
        self.push(family, idx, lhs, rhs, Polarity::Equal);
    }

    fn vp3(&mut self) {
        for (idx, (k, i, j)) in VP3_TRIPLES.iter().copied().enumerate() {
            self.triple_relation(&format!("vp3-{}", idx + 1), String::new(), k, i, j);
        }
    }

    fn hn(&mut self) {
        let x = |s: &Self, i, j| s.derived(Derived::X(i, j));
        for (i, j, k, l) in self.distinct_quads() {
            if (i, j) > (k, l) {
                continue;
            }
            let (a, b) = (x(self, i, j), x(self, k, l));
            let (lhs, rhs) = (self.prod(&[a.clone(), b.clone()]), self.prod(&[b, a]));
            self.push("hn-disjoint", format!("[{i},{j},{k},{l}]"), lhs, rhs, Polarity::Equal);
        }
        for (i, k, j) in self.distinct_triples() {
            let (a, b) = (x(self, i, k), x(self, k, j));
            let lhs = self.prod(&[a.clone(), b.clone(), a.clone()]);
            let rhs = self.prod(&[b.clone(), a, b]);
            self.push("hn-braid", format!("[{i},{k},{j}]"), lhs, rhs, Polarity::Equal);
        }
    }

    fn ub(&mut self) {
        self.braid();
        for (i, j) in self.far_pairs() {
            self.eq("ub-tt", format!("[{i},{j}]"), &[L::T(i), L::T(j)], &[L::T(j), L::T(i)]);
        }
        for (i, j) in self.far_ordered() {
            self.eq("ub-ts", format!("[{i},{j}]"), &[L::T(i), L::S(j, 1)], &[L::S(j, 1), L::T(i)]);
        }
    }

    fn tn(&mut self) {
        for (i, j) in self.far_pairs() {
            self.eq("tn-far", format!("[{i},{j}]"), &[L::T(i), L::T(j)], &[L::T(j), L::T(i)]);
        }
    }
}

/// `(k, i, j)` for `l_{k,i} l_{k,j} l_{i,j} = l_{i,j} l_{k,j} l_{k,i}`, listed
/// in the order vp3-1..vp3-6.
pub const VP3_TRIPLES: [(usize, usize, usize); 6] = [(1, 2, 3), (1, 3, 2), (3, 1, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1)];

/// Enumerates every instance of a relation family for `n` strands.
pub fn relation_instances(pres: PresentationId, n: usize) -> Result<Vec<RelationInstance>> {
    let min = pres.min_strands();
    if n < min {
        return Err(Error::TooFewStrands { min, got: n });
    }
    if pres == PresentationId::Vp3 && n != 3 {
        return Err(Error::BadParameters(format!("vp3 is defined for 3 strands, got {n}")));
    }
    let mut b = Builder { tag: pres.group(), n, out: vec![] };
    match pres {
        PresentationId::Braid => b.braid(),
        PresentationId::SymmetricAlpha => b.symmetric(L::Al, ["alpha-adjacent", "alpha-far", "alpha-square"]),
        PresentationId::CnMixed => b.welded_mixed(["cn-far", "cn-slide-left", "cn-slide-right"]),
        PresentationId::McCool => b.mccool(),
        PresentationId::Singular => b.singular(),
        PresentationId::SymmetricRho => b.symmetric(L::R, ["rho-adjacent", "rho-far", "rho-square"]),
        PresentationId::VbMixed => b.vb_mixed(),
        PresentationId::Forbidden => b.forbidden(),
        PresentationId::Vp => b.vp(),
        PresentationId::Vp3 => b.vp3(),
        PresentationId::Hn => b.hn(),
        PresentationId::WbMixed => b.welded_mixed(["wb-far", "wb-slide-left", "wb-slide-right"]),
        PresentationId::WeldedSymmetric => {
            for i in 1..n - 1 {
                b.eq("w-sym", format!("[{i}]"), &[L::S(i + 1, 1), L::Al(i), L::Al(i + 1)], &[L::Al(i), L::Al(i + 1), L::S(i, 1)]);
            }
        }
        PresentationId::WeldedForbidden => {
            for i in 1..n - 1 {
                b.ne("w-forb", format!("[{i}]"), &[L::Al(i + 1), L::S(i, 1), L::S(i + 1, 1)], &[L::S(i, 1), L::S(i + 1, 1), L::Al(i)]);
            }
        }
        PresentationId::Ub => b.ub(),
        PresentationId::Tn => b.tn(),
    }
    Ok(b.out)
}
