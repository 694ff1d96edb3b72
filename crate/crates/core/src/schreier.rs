//! Reidemeister–Schreier rewriting for kernels of permutation homomorphisms.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::words::{permutation_image, GenSym, GroupTag, GroupWord, PermHom, Permutation};

/// One representative per coset of the kernel, keyed by permutation image.
#[derive(Debug, Clone)]
pub struct Transversal {
    hom: PermHom,
    tag: GroupTag,
    n: usize,
    reps: Vec<GroupWord>,
    keys: BTreeMap<Vec<usize>, usize>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Transversal {
    pub fn new(hom: PermHom, tag: GroupTag, n: usize, reps: Vec<GroupWord>) -> Result<Self> {
        if !hom.accepts(tag) {
            return Err(Error::IncompatibleHom { hom: hom.name().into(), group: tag.name().into() });
        }
        let mut keys = BTreeMap::new();
        for (k, r) in reps.iter().enumerate() {
            if r.strands() != n {
                return Err(Error::BadTransversal(format!("representative {r} has {} strands", r.strands())));
            }
            let p = permutation_image(r, hom)?;
            if let Some(prev) = keys.insert(p.images().to_vec(), k) {
                return Err(Error::BadTransversal(format!("{} and {r} lie in one coset", reps[prev])));
            }
        }
        if keys.len() != factorial(n) {
            return Err(Error::BadTransversal(format!("{} representatives for {} cosets", keys.len(), factorial(n))));
        }
        if !keys.contains_key(Permutation::identity(n).images()) {
            return Err(Error::BadTransversal("no representative for the kernel itself".into()));
        }
        Ok(Transversal { hom, tag, n, reps, keys })
    }

    /// Shortest sigma words found breadth-first, extending on the right.
    /// For three strands this is {1, s1, s2, s1 s2, s2 s1, s1 s2 s1}.
    pub fn standard(hom: PermHom, tag: GroupTag, n: usize) -> Result<Self> {
        let mut reps = vec![GroupWord::identity(tag, n)];
        let mut seen = BTreeMap::new();
        seen.insert(Permutation::identity(n).images().to_vec(), ());
        let mut queue = VecDeque::from([(GroupWord::identity(tag, n), Permutation::identity(n))]);
        while let Some((w, p)) = queue.pop_front() {
            for i in 1..n {
                let g = GenSym::sigma(i);
                let q = p.then(&hom.letter_image(g, n));
                if seen.insert(q.images().to_vec(), ()).is_none() {
                    let next = w.concat(&GroupWord::new(tag, n, [(g, 1)])?)?;
                    reps.push(next.clone());
                    queue.push_back((next, q));
                }
            }
        }
        Transversal::new(hom, tag, n, reps)
    }

    pub fn reps(&self) -> &[GroupWord] {
        &self.reps
    }

    pub fn hom(&self) -> PermHom {
        self.hom
    }

    pub fn coset_of(&self, w: &GroupWord) -> Result<usize> {
        let p = permutation_image(w, self.hom)?;
        Ok(self.keys[p.images()])
    }

    fn letter(&self, g: GenSym, e: i64) -> Result<GroupWord> {
        GroupWord::new(self.tag, self.n, [(g, e)])
    }

    /// `S_{u,g} = u g (rep of u g)^-1`, freely reduced.
    pub fn schreier_word(&self, coset: usize, g: GenSym) -> Result<GroupWord> {
        let ug = self.reps[coset].concat(&self.letter(g, 1)?)?;
        let bar = &self.reps[self.coset_of(&ug)?];
        ug.concat(&bar.inverse())
    }

    pub fn label(&self, coset: usize, g: GenSym) -> String {
        format!("S_{{{},{g}}}", self.reps[coset])
    }
}

/// One Schreier generator `S_{coset,generator}` raised to `sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchreierSymbol {
    pub coset: usize,
    pub generator: GenSym,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub label: String,
    pub coset: usize,
    pub generator: GenSym,
    pub word: GroupWord,
}

impl fmt::Display for SchreierGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label, self.word)
    }
}

/// Rewrites a kernel element as a product of Schreier generators, dropping
/// generators that are trivial as words.
pub fn rs_rewrite(w: &GroupWord, tr: &Transversal) -> Result<Vec<SchreierSymbol>> {
    if w.strands() != tr.n {
        return Err(Error::DimensionMismatch(format!("word on {} strands, transversal on {}", w.strands(), tr.n)));
    }
    if !permutation_image(w, tr.hom)?.is_identity() {
        return Err(Error::NotInKernel);
    }
    let mut out = Vec::new();
    let mut prefix = GroupWord::identity(w.tag(), w.strands());
    for (g, e) in w.letters() {
        let next = prefix.concat(&GroupWord::new(w.tag(), w.strands(), [(g, e)])?)?;
        let (coset, sign) = if e > 0 { (tr.coset_of(&prefix)?, 1) } else { (tr.coset_of(&next)?, -1) };
        if !tr.schreier_word(coset, g)?.is_empty() {
            out.push(SchreierSymbol { coset, generator: g, sign });
        }
        prefix = next;
    }
    Ok(out)
}

/// Spells a rewriting back out over the base alphabet.
pub fn expand(symbols: &[SchreierSymbol], tr: &Transversal) -> Result<GroupWord> {
    let mut acc = GroupWord::identity(tr.tag, tr.n);
    for s in symbols {
        let word = tr.schreier_word(s.coset, s.generator)?;
        acc = acc.concat(&if s.sign > 0 { word } else { word.inverse() })?;
    }
    Ok(acc)
}

/// Every nontrivial `S_{u,g}` for `u` in the transversal and `g` in
/// `letters`, cosets outermost.
pub fn schreier_generators(tr: &Transversal, letters: &[GenSym]) -> Result<Vec<SchreierGenerator>> {
    let mut out = Vec::new();
    for coset in 0..tr.reps.len() {
        for &g in letters {
            let word = tr.schreier_word(coset, g)?;
            if !word.is_empty() {
                out.push(SchreierGenerator { label: tr.label(coset, g), coset, generator: g, word });
            }
        }
    }
    Ok(out)
}
