//! Generator alphabets, group words, and permutation-valued homomorphisms.
//!
//! Words act leftmost-first: the permutation (or automorphism, or matrix) of
//! `g1 g2 ... gm` is "apply `g1`, then `g2`, ...".
//!
//! Text grammar: whitespace-separated tokens `s<i>`, `r<i>`, `t<i>`, `al<i>`
//! and the derived tokens `a(i,j)`, `l(i,j)`, `x(i,j)`, `e(i,j)`, `b(i,j)`,
//! each with an optional `^<int>` exponent. `1` (or an empty string) is the
//! empty word.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Sigma,
    Rho,
    Tau,
    Alpha,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::Sigma => "s",
            Family::Rho => "r",
            Family::Tau => "t",
            Family::Alpha => "al",
        }
    }
}

/// A family generator `sigma_i`, `rho_i`, `tau_i` or `alpha_i` (1-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSym {
    pub family: Family,
    pub index: usize,
}

impl GenSym {
    pub const fn new(family: Family, index: usize) -> Self {
        GenSym { family, index }
    }
    pub const fn sigma(i: usize) -> Self {
        Self::new(Family::Sigma, i)
    }
    pub const fn rho(i: usize) -> Self {
        Self::new(Family::Rho, i)
    }
    pub const fn tau(i: usize) -> Self {
        Self::new(Family::Tau, i)
    }
    pub const fn alpha(i: usize) -> Self {
        Self::new(Family::Alpha, i)
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.token(), self.index)
    }
}

/// Which group a word is read in; fixes the legal alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    /// Braid group: sigma.
    B,
    /// Virtual braid group: sigma, rho.
    VB,
    /// Welded braid group / conjugating automorphisms: sigma, alpha.
    WB,
    /// Universal braid group: sigma, tau.
    UB,
    /// Partially commutative group on tau.
    T,
    /// Singular braid group: sigma, tau.
    S,
}

impl GroupTag {
    pub fn allows(self, family: Family) -> bool {
        use Family::*;
        match self {
            GroupTag::B => family == Sigma,
            GroupTag::VB => matches!(family, Sigma | Rho),
            GroupTag::WB => matches!(family, Sigma | Alpha),
            GroupTag::UB | GroupTag::S => matches!(family, Sigma | Tau),
            GroupTag::T => family == Tau,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupTag::B => "B",
            GroupTag::VB => "VB",
            GroupTag::WB => "WB",
            GroupTag::UB => "UB",
            GroupTag::T => "T",
            GroupTag::S => "S",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "B" => GroupTag::B,
            "VB" => GroupTag::VB,
            "WB" => GroupTag::WB,
            "UB" => GroupTag::UB,
            "T" => GroupTag::T,
            "S" => GroupTag::S,
            other => return Err(Error::UnknownToken(other.to_string())),
        })
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: GenSym,
    pub exp: i64,
}

/// A freely reduced word: adjacent syllables on the same generator are merged
/// and zero exponents dropped. No other relations are applied.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    n: usize,
    tag: GroupTag,
    syllables: Vec<Syllable>,
}

impl GroupWord {
    pub fn identity(tag: GroupTag, n: usize) -> Self {
        GroupWord { n, tag, syllables: Vec::new() }
    }

    pub fn new(tag: GroupTag, n: usize, syllables: impl IntoIterator<Item = (GenSym, i64)>) -> Result<Self> {
        let mut w = Self::identity(tag, n);
        for (g, e) in syllables {
            w.check_gen(g)?;
            w.push(g, e);
        }
        Ok(w)
    }

    /// Word of single letters `(generator, ±1)` given compactly.
    pub fn from_letters(tag: GroupTag, n: usize, letters: &[(GenSym, i64)]) -> Result<Self> {
        Self::new(tag, n, letters.iter().copied())
    }

    fn check_gen(&self, g: GenSym) -> Result<()> {
        if !self.tag.allows(g.family) {
            return Err(Error::IllegalGenerator { generator: g.to_string(), context: self.tag.to_string() });
        }
        if g.index == 0 || g.index >= self.n {
            return Err(Error::IndexOutOfRange(format!("{g} needs 1 <= index <= {}", self.n.saturating_sub(1))));
        }
        Ok(())
    }

    fn push(&mut self, g: GenSym, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.generator == g {
                last.exp += e;
                if last.exp == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push(Syllable { generator: g, exp: e });
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters (sum of absolute exponents).
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.exp.unsigned_abs() as usize).sum()
    }

    /// Expands into unit letters `(generator, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (GenSym, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|s| core::iter::repeat_n((s.generator, s.exp.signum()), s.exp.unsigned_abs() as usize))
    }

    pub fn generators(&self) -> impl Iterator<Item = GenSym> + '_ {
        self.syllables.iter().map(|s| s.generator)
    }

    /// Reinterprets the word in another group containing its letters.
    pub fn with_tag(&self, tag: GroupTag) -> Result<Self> {
        let mut w = self.clone();
        w.tag = tag;
        for s in &self.syllables {
            w.check_gen(s.generator)?;
        }
        Ok(w)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {} strands", self.n, other.n)));
        }
        for s in &other.syllables {
            self.check_gen(s.generator)?;
        }
        Ok(())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.generator, s.exp);
        }
        Ok(w)
    }

    /// Concatenation of several words, all read in `tag`.
    pub fn product<'a>(tag: GroupTag, n: usize, parts: impl IntoIterator<Item = &'a GroupWord>) -> Result<Self> {
        let mut w = Self::identity(tag, n);
        for p in parts {
            w = w.concat(p)?;
        }
        Ok(w)
    }

    pub fn inverse(&self) -> Self {
        let mut w = Self::identity(self.tag, self.n);
        for s in self.syllables.iter().rev() {
            w.push(s.generator, -s.exp);
        }
        w
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::identity(self.tag, self.n);
        for _ in 0..k.unsigned_abs() {
            for s in &base.syllables {
                w.push(s.generator, s.exp);
            }
        }
        w
    }

    /// Conjugate `b^-1 a b` of `self` by `b`.
    pub fn conjugate_by(&self, b: &Self) -> Result<Self> {
        b.inverse().concat(self)?.concat(b)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if s.exp == 1 {
                write!(f, "{}", s.generator)?;
            } else {
                write!(f, "{}^{}", s.generator, s.exp)?;
            }
        }
        Ok(())
    }
}

/// Named elements defined as words in the family generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Derived {
    /// Pure braid generator `a_{i,j}`, `i < j`.
    A(usize, usize),
    /// Virtual pure braid generator `lambda_{i,j}`, `i != j`.
    Lambda(usize, usize),
    /// Generator `x_{i,j}` of the normal closure of B_n in VB_n.
    X(usize, usize),
    /// Basis-conjugating automorphism `eps_{i,j}` as a word in alpha, sigma.
    Eps(usize, usize),
    /// The five elements `b_{11}, b_{12}, b_{21}, b_{22}, b_{23}` of VP_3.
    B(usize, usize),
}

impl Derived {
    pub fn token(self) -> String {
        match self {
            Derived::A(i, j) => format!("a({i},{j})"),
            Derived::Lambda(i, j) => format!("l({i},{j})"),
            Derived::X(i, j) => format!("x({i},{j})"),
            Derived::Eps(i, j) => format!("e({i},{j})"),
            Derived::B(i, j) => format!("b({i},{j})"),
        }
    }
}

fn range_err(d: Derived, n: usize) -> Error {
    Error::IndexOutOfRange(format!("{} with {n} strands", d.token()))
}

/// `g_{hi} g_{hi-1} ... g_{lo}` (empty if `hi < lo`), each with exponent `e`.
fn descending(f: Family, hi: usize, lo: usize, e: i64) -> Vec<(GenSym, i64)> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).rev().map(|i| (GenSym::new(f, i), e)).collect()
}

fn ascending(f: Family, lo: usize, hi: usize, e: i64) -> Vec<(GenSym, i64)> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).map(|i| (GenSym::new(f, i), e)).collect()
}

/// Expands a derived generator into its defining word.
pub fn derived_word(d: Derived, n: usize) -> Result<GroupWord> {
    use Family::*;
    let pair_ok = |i: usize, j: usize| i >= 1 && j >= 1 && i <= n && j <= n && i != j;
    match d {
        Derived::A(i, j) => {
            if !(pair_ok(i, j) && i < j) {
                return Err(range_err(d, n));
            }
            let mut l = descending(Sigma, j - 1, i + 1, 1);
            l.push((GenSym::sigma(i), 2));
            l.extend(ascending(Sigma, i + 1, j - 1, -1));
            GroupWord::new(GroupTag::B, n, l)
        }
        Derived::Lambda(i, j) | Derived::X(i, j) | Derived::Eps(i, j) => {
            if !pair_ok(i, j) {
                return Err(range_err(d, n));
            }
            let (perm_family, tag) = match d {
                Derived::Eps(..) => (Alpha, GroupTag::WB),
                _ => (Rho, GroupTag::VB),
            };
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            let s = GenSym::sigma(lo);
            let p = GenSym::new(perm_family, lo);
            let core: Vec<(GenSym, i64)> = match (d, i < j) {
                (Derived::Lambda(..), true) => vec![(p, 1), (s, -1)],
                (Derived::Lambda(..), false) => vec![(s, -1), (p, 1)],
                (Derived::X(..), true) => vec![(s, 1)],
                (Derived::X(..), false) => vec![(p, 1), (s, 1), (p, 1)],
                (Derived::Eps(..), true) => vec![(p, 1), (s, -1)],
                (Derived::Eps(..), false) if hi == lo + 1 => vec![(s, -1), (p, 1)],
                // eps_{j,i}: conjugate eps_{i,i+1} by alpha_i as well
                (Derived::Eps(..), false) => vec![(p, 1), (p, 1), (s, -1), (p, 1)],
                _ => unreachable!(),
            };
            let mut l = descending(perm_family, hi - 1, lo + 1, 1);
            l.extend(core);
            l.extend(ascending(perm_family, lo + 1, hi - 1, 1));
            GroupWord::new(tag, n, l)
        }
        Derived::B(i, j) => {
            if n < 3 {
                return Err(range_err(d, n));
            }
            let (u, v) = match (i, j) {
                (1, 1) => ((2, 1), (1, 2)),
                (1, 2) => ((1, 3), (1, 2)),
                (2, 1) => ((1, 3), (2, 3)),
                (2, 2) => ((3, 2), (3, 1)),
                (2, 3) => ((3, 2), (2, 3)),
                _ => return Err(range_err(d, n)),
            };
            derived_word(Derived::Lambda(u.0, u.1), n)?.concat(&derived_word(Derived::Lambda(v.0, v.1), n)?)
        }
    }
}

/// λ_{i,j} shorthand used throughout.
pub fn lambda(i: usize, j: usize, n: usize) -> Result<GroupWord> {
    derived_word(Derived::Lambda(i, j), n)
}

/// One lexed token of the word grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Gen(GenSym, i64),
    Derived(Derived, i64),
}

fn parse_pair(body: &str) -> Option<(usize, usize)> {
    let inner = body.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn lex_one(tok: &str) -> Result<Token> {
    let unknown = || Error::UnknownToken(tok.to_string());
    let (base, exp) = match tok.rsplit_once('^') {
        Some((b, e)) if !b.ends_with('(') => (b, e.parse::<i64>().map_err(|_| unknown())?),
        _ => (tok, 1),
    };
    if base.ends_with(')') {
        let open = base.find('(').ok_or_else(unknown)?;
        let (i, j) = parse_pair(&base[open..]).ok_or_else(unknown)?;
        let d = match &base[..open] {
            "a" => Derived::A(i, j),
            "l" => Derived::Lambda(i, j),
            "x" => Derived::X(i, j),
            "e" => Derived::Eps(i, j),
            "b" => Derived::B(i, j),
            _ => return Err(unknown()),
        };
        return Ok(Token::Derived(d, exp));
    }
    let (family, digits) = if let Some(d) = base.strip_prefix("al") {
        (Family::Alpha, d)
    } else if let Some(d) = base.strip_prefix('s') {
        (Family::Sigma, d)
    } else if let Some(d) = base.strip_prefix('r') {
        (Family::Rho, d)
    } else if let Some(d) = base.strip_prefix('t') {
        (Family::Tau, d)
    } else {
        return Err(unknown());
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    let index = digits.parse().map_err(|_| unknown())?;
    Ok(Token::Gen(GenSym::new(family, index), exp))
}

/// Splits text into tokens without checking indices against a group.
pub fn lex(text: &str) -> Result<Vec<Token>> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(Vec::new());
    }
    trimmed.split_whitespace().map(lex_one).collect()
}

/// Parses a word in the given group; derived tokens are expanded first.
pub fn parse_word(text: &str, tag: GroupTag, n: usize) -> Result<GroupWord> {
    let mut w = GroupWord::identity(tag, n);
    for tok in lex(text)? {
        let piece = match tok {
            Token::Gen(g, e) => GroupWord::new(tag, n, [(g, e)])?,
            Token::Derived(d, e) => derived_word(d, n)?.with_tag(tag)?.pow(e),
        };
        w = w.concat(&piece)?;
    }
    Ok(w)
}

/// A permutation of `{1..n}` stored 0-based: `images[x] = π(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    /// Transposition of the 1-based points `i` and `i+1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image list.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// "First `self`, then `other`": `x -> other(self(x))`.
    pub fn then(&self, other: &Self) -> Self {
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(i, &x)| i == x)
    }

    pub fn order(&self) -> u64 {
        let d = crate::matrix::MonomialDecomposition {
            perm: self.images.clone(),
            scalars: Vec::new(),
        };
        d.pattern_order()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", x + 1)?;
                x = self.images[x];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Homomorphisms onto the symmetric group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermHom {
    /// B_n -> S_n, sigma_i -> (i, i+1).
    PhiB,
    /// VB_n -> S_n, sigma_i, rho_i -> (i, i+1); alpha is treated like rho.
    Nu,
    /// VB_n -> S_n, sigma_i -> 1, rho_i -> (i, i+1).
    Mu,
    /// UB_n -> S_n, sigma_i, tau_i -> (i, i+1).
    PiU,
}

impl PermHom {
    pub fn name(self) -> &'static str {
        match self {
            PermHom::PhiB => "phiB",
            PermHom::Nu => "nu",
            PermHom::Mu => "mu",
            PermHom::PiU => "piU",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "phiB" | "phi" => PermHom::PhiB,
            "nu" => PermHom::Nu,
            "mu" => PermHom::Mu,
            "piU" | "pi" => PermHom::PiU,
            other => return Err(Error::UnknownToken(other.to_string())),
        })
    }

    pub fn accepts(self, tag: GroupTag) -> bool {
        match self {
            PermHom::PhiB => tag == GroupTag::B,
            PermHom::Nu => matches!(tag, GroupTag::B | GroupTag::VB | GroupTag::WB),
            // killing sigma breaks the welded mixed relations, so WB is excluded
            PermHom::Mu => matches!(tag, GroupTag::B | GroupTag::VB),
            PermHom::PiU => matches!(tag, GroupTag::B | GroupTag::UB | GroupTag::T | GroupTag::S),
        }
    }

    /// Homomorphisms applicable to words of `tag`.
    pub fn applicable(tag: GroupTag) -> Vec<PermHom> {
        [PermHom::PhiB, PermHom::Nu, PermHom::Mu, PermHom::PiU]
            .into_iter()
            .filter(|h| h.accepts(tag))
            .collect()
    }

    /// Whether the letter maps to the adjacent transposition (else to 1).
    fn moves(self, g: GenSym) -> bool {
        !(self == PermHom::Mu && g.family == Family::Sigma)
    }

    pub fn letter_image(self, g: GenSym, n: usize) -> Permutation {
        if self.moves(g) {
            Permutation::adjacent(n, g.index)
        } else {
            Permutation::identity(n)
        }
    }
}

/// Image of a word under a permutation homomorphism, leftmost letter first.
pub fn permutation_image(w: &GroupWord, hom: PermHom) -> Result<Permutation> {
    if !hom.accepts(w.tag()) {
        return Err(Error::IncompatibleHom { hom: hom.name().to_string(), group: w.tag().to_string() });
    }
    let n = w.strands();
    let mut images: Vec<usize> = (0..n).collect();
    for s in w.syllables() {
        // each transposition is an involution, so only the parity of the exponent matters
        if s.exp.rem_euclid(2) == 1 && hom.moves(s.generator) {
            let (a, b) = (s.generator.index - 1, s.generator.index);
            for x in images.iter_mut() {
                if *x == a {
                    *x = b;
                } else if *x == b {
                    *x = a;
                }
            }
        }
    }
    Ok(Permutation { images })
}
