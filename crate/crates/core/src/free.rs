//! Free groups on named generators and their automorphisms.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::words::Permutation;

/// Ordered, named free generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeBasis {
    names: Vec<String>,
}

impl FreeBasis {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(FreeBasis { names }))
    }

    /// `x1..xn`.
    pub fn standard(n: usize) -> Arc<Self> {
        Arc::new(FreeBasis { names: (1..=n).map(|i| format!("x{i}")).collect() })
    }

    /// `x1..xn, y`.
    pub fn with_y(n: usize) -> Arc<Self> {
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.push("y".into());
        Arc::new(FreeBasis { names })
    }

    /// `x1..xn` followed by the two letters `y(i,1), y(i,2)` for each `i < n`.
    pub fn with_pairs(n: usize) -> Arc<Self> {
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        for i in 1..n {
            names.push(format!("y({i},1)"));
            names.push(format!("y({i},2)"));
        }
        Arc::new(FreeBasis { names })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses whitespace-separated `name` or `name^e` tokens; `1` is the empty word.
    pub fn parse_word(self: &Arc<Self>, text: &str) -> Result<FreeWord> {
        let mut w = FreeWord::identity(self);
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.rsplit_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                None => (tok, 1),
            };
            let g = self.index_of(name).ok_or_else(|| Error::UnknownToken(name.to_string()))?;
            w.push_power(g, exp);
        }
        Ok(w)
    }
}

/// A freely reduced word. Letters are `g + 1` for generator `g` and
/// `-(g + 1)` for its inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeWord {
    basis: Arc<FreeBasis>,
    letters: Vec<i32>,
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

fn letter(g: usize, inverse: bool) -> i32 {
    let l = g as i32 + 1;
    if inverse {
        -l
    } else {
        l
    }
}

impl FreeWord {
    pub fn identity(basis: &Arc<FreeBasis>) -> Self {
        FreeWord { basis: basis.clone(), letters: vec![] }
    }

    pub fn generator(basis: &Arc<FreeBasis>, g: usize) -> Self {
        assert!(g < basis.rank(), "generator index out of range");
        FreeWord { basis: basis.clone(), letters: vec![letter(g, false)] }
    }

    pub fn generator_pow(basis: &Arc<FreeBasis>, g: usize, e: i64) -> Self {
        let mut w = Self::identity(basis);
        w.push_power(g, e);
        w
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_powers(basis: &Arc<FreeBasis>, parts: &[(usize, i64)]) -> Self {
        let mut w = Self::identity(basis);
        for &(g, e) in parts {
            w.push_power(g, e);
        }
        w
    }

    pub fn basis(&self) -> &Arc<FreeBasis> {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed letters, `g + 1` or `-(g + 1)`.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    fn push_letter(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn push_power(&mut self, g: usize, e: i64) {
        assert!(g < self.basis.rank(), "generator index out of range");
        let l = letter(g, e < 0);
        for _ in 0..e.unsigned_abs() {
            self.push_letter(l);
        }
    }

    fn extend_reduced(&mut self, other: &[i32]) {
        for &l in other {
            self.push_letter(l);
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::ContextMismatch);
        }
        let mut w = self.clone();
        w.extend_reduced(&other.letters);
        Ok(w)
    }

    pub fn inverse(&self) -> Self {
        FreeWord { basis: self.basis.clone(), letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `c^-1 self c`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        c.inverse().mul(self)?.mul(c)
    }

    /// Drops every letter whose generator is flagged in `killed`, then reduces.
    /// The result lives over `target`, whose generators are the survivors in order.
    pub fn kill(&self, killed: &[bool], target: &Arc<FreeBasis>) -> Result<Self> {
        let mut map = Vec::with_capacity(killed.len());
        let mut next = 0i32;
        for &k in killed {
            if k {
                map.push(0);
            } else {
                next += 1;
                map.push(next);
            }
        }
        if killed.len() != self.basis.rank() || next as usize != target.rank() {
            return Err(Error::ContextMismatch);
        }
        let mut w = FreeWord::identity(target);
        for &l in &self.letters {
            let m = map[(l.unsigned_abs() - 1) as usize];
            if m != 0 {
                w.push_letter(m * l.signum());
            }
        }
        Ok(w)
    }

    /// Splits into `(a, core)` with `self = a^-1 core a` and `core` cyclically reduced.
    pub fn conjugacy_split(&self) -> (Self, Self) {
        let l = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < l.len() && l[k] == -l[l.len() - 1 - k] {
            k += 1;
        }
        let a = FreeWord { basis: self.basis.clone(), letters: l[l.len() - k..].to_vec() };
        let core = FreeWord { basis: self.basis.clone(), letters: l[k..l.len() - k].to_vec() };
        (a, core)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = &self.basis.names[(l.unsigned_abs() - 1) as usize];
            let e = if l < 0 { -(run as i64) } else { run as i64 };
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// An automorphism of a free group with its inverse stored alongside.
///
/// Composition follows the right-action convention: `a.then(b)` sends
/// `x` to `b(a(x))`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeAuto {
    basis: Arc<FreeBasis>,
    images: Vec<FreeWord>,
    inverse_images: Vec<FreeWord>,
}

impl fmt::Debug for FreeAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.basis.names.iter().zip(self.images.iter().map(|w| w.to_string()))).finish()
    }
}

impl FreeAuto {
    pub fn identity(basis: &Arc<FreeBasis>) -> Self {
        let images: Vec<FreeWord> = (0..basis.rank()).map(|g| FreeWord::generator(basis, g)).collect();
        FreeAuto { basis: basis.clone(), inverse_images: images.clone(), images }
    }

    /// Builds an automorphism from generator images and claimed inverse
    /// images, checking both round trips on every generator.
    pub fn new(basis: &Arc<FreeBasis>, images: Vec<FreeWord>, inverse_images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != basis.rank() || inverse_images.len() != basis.rank() {
            return Err(Error::DimensionMismatch(format!("expected {} images", basis.rank())));
        }
        if images.iter().chain(&inverse_images).any(|w| &w.basis != basis) {
            return Err(Error::ContextMismatch);
        }
        let a = FreeAuto { basis: basis.clone(), images, inverse_images };
        a.certify()?;
        Ok(a)
    }

    /// Builds an automorphism that moves only the listed generators.
    pub fn from_moved(basis: &Arc<FreeBasis>, moved: Vec<(usize, FreeWord, FreeWord)>) -> Result<Self> {
        let mut a = Self::identity(basis);
        for (g, img, inv) in moved {
            a.images[g] = img;
            a.inverse_images[g] = inv;
        }
        a.certify()?;
        Ok(a)
    }

    /// Checks that the stored inverse undoes the images on every generator.
    pub fn certify(&self) -> Result<()> {
        for g in 0..self.basis.rank() {
            let x = FreeWord::generator(&self.basis, g);
            if self.apply_inverse(&self.images[g]) != x || self.apply(&self.inverse_images[g]) != x {
                return Err(Error::CertificateFailed);
            }
        }
        Ok(())
    }

    pub fn basis(&self) -> &Arc<FreeBasis> {
        &self.basis
    }

    pub fn image(&self, g: usize) -> &FreeWord {
        &self.images[g]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[FreeWord] {
        &self.inverse_images
    }

    fn substitute(table: &[FreeWord], basis: &Arc<FreeBasis>, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity(basis);
        for &l in &w.letters {
            let img = &table[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                out.extend_reduced(&img.letters);
            } else {
                for &m in img.letters.iter().rev() {
                    out.push_letter(-m);
                }
            }
        }
        out
    }

    /// Image of an arbitrary word. Panics if `w` lives over another basis.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        assert!(w.basis == self.basis, "free group context mismatch");
        Self::substitute(&self.images, &self.basis, w)
    }

    pub fn apply_inverse(&self, w: &FreeWord) -> FreeWord {
        assert!(w.basis == self.basis, "free group context mismatch");
        Self::substitute(&self.inverse_images, &self.basis, w)
    }

    pub fn inverse(&self) -> Self {
        FreeAuto { basis: self.basis.clone(), images: self.inverse_images.clone(), inverse_images: self.images.clone() }
    }

    /// `x -> other(self(x))`; certified before returning.
    pub fn then(&self, other: &Self) -> Result<Self> {
        let r = self.then_uncertified(other)?;
        r.certify()?;
        Ok(r)
    }

    pub(crate) fn then_uncertified(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::ContextMismatch);
        }
        let images = self.images.iter().map(|w| other.apply(w)).collect();
        let inverse_images = other.inverse_images.iter().map(|w| self.apply_inverse(w)).collect();
        Ok(FreeAuto { basis: self.basis.clone(), images, inverse_images })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(&self.basis);
        for _ in 0..k.unsigned_abs() {
            acc = acc.then_uncertified(&base)?;
        }
        acc.certify()?;
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(g, w)| w.letters == [letter(g, false)])
    }

    /// If every generator is sent to a conjugate `a_i^-1 x_p(i) a_i` with `p`
    /// a permutation, returns `p` and the conjugators.
    pub fn conjugating_data(&self) -> Option<(Permutation, Vec<FreeWord>)> {
        let mut perm = Vec::with_capacity(self.images.len());
        let mut conj = Vec::with_capacity(self.images.len());
        for w in &self.images {
            let (a, core) = w.conjugacy_split();
            match core.letters.as_slice() {
                [l] if *l > 0 => perm.push((*l - 1) as usize),
                _ => return None,
            }
            conj.push(a);
        }
        Some((Permutation::from_images(perm)?, conj))
    }

    /// Generator images after killing the flagged generators in both source and
    /// target. Only the surviving generators are listed.
    pub fn killed_images(&self, killed: &[bool], target: &Arc<FreeBasis>) -> Result<Vec<FreeWord>> {
        self.images
            .iter()
            .zip(killed)
            .filter(|(_, &k)| !k)
            .map(|(w, _)| w.kill(killed, target))
            .collect()
    }

    /// One line per generator: `x1 -> ...`.
    pub fn describe(&self) -> Vec<String> {
        self.basis.names.iter().zip(&self.images).map(|(n, w)| format!("{n} -> {w}")).collect()
    }
}

/// `x_i -> x_j^-1 x_i x_j`, `i != j`, 1-based, in `F_n`.
pub fn eps_auto(n: usize, i: usize, j: usize) -> Result<FreeAuto> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::BadParameters(format!("eps({i},{j}) needs distinct indices in 1..={n}")));
    }
    conj_auto(&FreeBasis::standard(n), i - 1, j - 1, 1)
}

/// `x_g -> x_c^-k x_g x_c^k` with every other generator fixed.
pub(crate) fn conj_auto(basis: &Arc<FreeBasis>, g: usize, c: usize, k: i64) -> Result<FreeAuto> {
    let img = FreeWord::from_powers(basis, &[(c, -k), (g, 1), (c, k)]);
    let inv = FreeWord::from_powers(basis, &[(c, k), (g, 1), (c, -k)]);
    FreeAuto::from_moved(basis, vec![(g, img, inv)])
}
