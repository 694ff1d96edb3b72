//! Normal form for T_n, the partially commutative group on tau_1..tau_{n-1}
//! where tau_i and tau_j commute when |i - j| >= 2.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{Family, GenSym, GroupTag, GroupWord};

/// Heap of syllables: one stack per generator index. Entries carry the
/// insertion sequence number, which orders them against neighbouring columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pile {
    n: usize,
    // columns[i] holds (exponent, seq) for tau_i; index 0 unused
    columns: Vec<Vec<(i64, u64)>>,
    next_seq: u64,
}

impl Pile {
    pub fn new(n: usize) -> Self {
        Pile { n, columns: vec![Vec::new(); n.max(1)], next_seq: 0 }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    fn top_seq(&self, i: usize) -> Option<u64> {
        self.columns.get(i).and_then(|c| c.last()).map(|&(_, s)| s)
    }

    /// Drops `tau_i^e` on top of the pile, merging with the top of column
    /// `i` when no neighbouring column has anything above it.
    pub fn push(&mut self, i: usize, e: i64) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange(format!("t{i} with {} strands", self.n)));
        }
        if e == 0 {
            return Ok(());
        }
        if let Some(top) = self.top_seq(i) {
            let blocked = [i - 1, i + 1].into_iter().any(|j| self.top_seq(j).is_some_and(|s| s > top));
            if !blocked {
                let col = &mut self.columns[i];
                let last = col.last_mut().expect("nonempty");
                last.0 += e;
                if last.0 == 0 {
                    col.pop();
                }
                return Ok(());
            }
        }
        self.columns[i].push((e, self.next_seq));
        self.next_seq += 1;
        Ok(())
    }

    pub fn from_word(w: &GroupWord) -> Result<Self> {
        let mut pile = Pile::new(w.strands());
        for s in w.syllables() {
            if s.generator.family != Family::Tau {
                return Err(Error::IllegalGenerator { generator: s.generator.to_string(), context: "T_n".into() });
            }
            pile.push(s.generator.index, s.exp)?;
        }
        Ok(pile)
    }

    pub fn is_empty(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Generator indices with at least one entry.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns.iter().enumerate().filter(|(_, c)| !c.is_empty()).map(|(i, _)| i)
    }

    /// Canonical linearisation: always emit the lowest-index entry whose
    /// neighbours below it are already out.
    pub fn linearize(&self) -> Vec<(usize, i64)> {
        let mut next = vec![0usize; self.columns.len()];
        let total: usize = self.columns.iter().map(|c| c.len()).sum();
        let mut out = Vec::with_capacity(total);
        let pending = |next: &[usize], j: usize| self.columns.get(j).and_then(|c| c.get(next[j])).map(|&(_, s)| s);
        while out.len() < total {
            let i = (1..self.columns.len())
                .find(|&i| {
                    let Some(s) = pending(&next, i) else { return false };
                    [i - 1, i + 1].into_iter().all(|j| j >= self.columns.len() || pending(&next, j).is_none_or(|t| t > s))
                })
                .expect("heap always has a minimal entry");
            out.push((i, self.columns[i][next[i]].0));
            next[i] += 1;
        }
        out
    }
}

pub fn tn_normal_form(w: &GroupWord) -> Result<GroupWord> {
    let pile = Pile::from_word(w)?;
    GroupWord::new(GroupTag::T, w.strands(), pile.linearize().into_iter().map(|(i, e)| (GenSym::tau(i), e)))
}

pub fn tn_is_trivial(w: &GroupWord) -> Result<bool> {
    Ok(Pile::from_word(w)?.is_empty())
}

/// Smallest generator index that survives in the normal form.
pub fn tn_min_support(w: &GroupWord) -> Result<Option<usize>> {
    Ok(Pile::from_word(w)?.support().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn t(s: &str, n: usize) -> GroupWord {
        parse_word(s, GroupTag::T, n).unwrap()
    }

    #[test]
    fn commuting_pair_sorted() {
        assert_eq!(tn_normal_form(&t("t3 t1", 4)).unwrap().to_string(), "t1 t3");
    }

    #[test]
    fn free_commutator_survives() {
        let w = t("t1 t2 t1^-1 t2^-1", 3);
        assert_eq!(tn_normal_form(&w).unwrap(), w);
    }

    #[test]
    fn cancellation_through_commutation() {
        let w = t("t2 t4 t2^-1", 5);
        assert_eq!(tn_normal_form(&w).unwrap().to_string(), "t4");
        assert_eq!(tn_min_support(&w).unwrap(), Some(4));
        assert_eq!(tn_min_support(&t("", 3)).unwrap(), None);
        assert!(tn_is_trivial(&t("t1 t3 t1^-1 t3^-1", 4)).unwrap());
    }

    #[test]
    fn adjacency_shape() {
        // descending steps of one, ascending otherwise
        let nf = tn_normal_form(&t("t3 t2 t1 t4 t2 t3", 5)).unwrap();
        let idx: Vec<usize> = nf.syllables().iter().map(|s| s.generator.index).collect();
        for p in idx.windows(2) {
            assert!(p[0] < p[1] || p[0] == p[1] + 1, "{nf}");
        }
    }

    #[test]
    fn rejects_sigma() {
        let w = parse_word("s1", GroupTag::UB, 3).unwrap();
        assert!(matches!(tn_normal_form(&w), Err(Error::IllegalGenerator { .. })));
    }
}
