//! Square matrices over a Laurent polynomial ring.
//!
//! Row convention: row `r` holds the image of basis vector `r`, so the matrix
//! of a composite "first `a`, then `b`" is the product `a * b`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{same_ring, LaurentPoly, VarSet};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    vars: Arc<VarSet>,
    basis: Arc<Vec<String>>,
    entries: Vec<LaurentPoly>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {:?}", self.basis)?;
        for r in 0..self.dim {
            let row: Vec<String> = self.row(r).iter().map(|p| format!("{p}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    pub fn zero(vars: &Arc<VarSet>, basis: &Arc<Vec<String>>) -> Self {
        assert!(!basis.is_empty(), "matrix dimension must be positive");
        let dim = basis.len();
        PolyMatrix {
            dim,
            vars: vars.clone(),
            basis: basis.clone(),
            entries: (0..dim * dim).map(|_| LaurentPoly::zero(vars)).collect(),
        }
    }

    pub fn identity(vars: &Arc<VarSet>, basis: &Arc<Vec<String>>) -> Self {
        let mut m = Self::zero(vars, basis);
        for i in 0..m.dim {
            m.set(i, i, LaurentPoly::one(vars));
        }
        m
    }

    /// Builds a matrix from rows; every entry must live in `vars`.
    pub fn from_rows(
        vars: &Arc<VarSet>,
        basis: &Arc<Vec<String>>,
        rows: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 || rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!("expected {dim}x{dim} rows")));
        }
        let entries: Vec<LaurentPoly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| !same_ring(p.vars(), vars)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { dim, vars: vars.clone(), basis: basis.clone(), entries })
    }

    pub fn diagonal(
        vars: &Arc<VarSet>,
        basis: &Arc<Vec<String>>,
        diag: Vec<LaurentPoly>,
    ) -> Result<Self> {
        if diag.len() != basis.len() {
            return Err(Error::DimensionMismatch(format!("expected {} diagonal entries", basis.len())));
        }
        let mut m = Self::zero(vars, basis);
        for (i, p) in diag.into_iter().enumerate() {
            if !same_ring(p.vars(), vars) {
                return Err(Error::RingMismatch);
            }
            m.set(i, i, p);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn basis(&self) -> &Arc<Vec<String>> {
        &self.basis
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.dim + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        self.entries[r * self.dim + c] = p;
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        if !same_ring(&self.vars, &other.vars) {
            return Err(Error::RingMismatch);
        }
        if !(Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis) {
            return Err(Error::DimensionMismatch("basis labels differ".into()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let n = self.dim;
        let mut out = Self::zero(&self.vars, &self.basis);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul_unchecked(b);
                    out.entries[r * n + c].add_assign_unchecked(&prod);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(&self.vars, &self.basis);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Zero strictly above the diagonal.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.dim).all(|r| (r + 1..self.dim).all(|c| self.get(r, c).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.transpose().is_lower_triangular()
    }

    pub fn diagonal_entries(&self) -> Vec<LaurentPoly> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    /// Applies `f` to every entry (used for specializing variables).
    pub fn try_map(&self, mut f: impl FnMut(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = f(e)?;
            if !same_ring(e.vars(), &self.vars) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, name: &str, value: &LaurentPoly) -> Result<Self> {
        self.try_map(|p| p.substitute(name, value))
    }

    /// First position where the two matrices differ, scanning row-major.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        (0..self.dim)
            .flat_map(|r| (0..self.dim).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != other.get(r, c))
    }

    pub fn monomial_decompose(&self) -> Result<MonomialDecomposition> {
        let n = self.dim;
        let mut perm = Vec::with_capacity(n);
        let mut scalars = Vec::with_capacity(n);
        let mut col_used = alloc::vec![false; n];
        for r in 0..n {
            let mut found = None;
            for c in 0..n {
                let e = self.get(r, c);
                if e.is_zero() {
                    continue;
                }
                if found.is_some() || !e.is_monomial() {
                    return Err(Error::NotMonomial);
                }
                found = Some(c);
            }
            let c = found.ok_or(Error::NotMonomial)?;
            if col_used[c] {
                return Err(Error::NotMonomial);
            }
            col_used[c] = true;
            perm.push(c);
            scalars.push(self.get(r, c).clone());
        }
        Ok(MonomialDecomposition { perm, scalars })
    }

    pub fn from_decomposition(
        vars: &Arc<VarSet>,
        basis: &Arc<Vec<String>>,
        d: &MonomialDecomposition,
    ) -> Result<Self> {
        if d.perm.len() != basis.len() || d.scalars.len() != basis.len() {
            return Err(Error::DimensionMismatch("decomposition size".into()));
        }
        let mut m = Self::zero(vars, basis);
        for (r, (&c, s)) in d.perm.iter().zip(&d.scalars).enumerate() {
            if !same_ring(s.vars(), vars) {
                return Err(Error::RingMismatch);
            }
            m.set(r, c, s.clone());
        }
        Ok(m)
    }

    /// Gauss–Jordan inversion that only ever divides by units `±v^e`.
    ///
    /// Works for any matrix whose elimination always finds a unit pivot (all
    /// braid generator images here do); otherwise reports `NotInvertible`.
    pub fn inverse_unit_pivot(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(&self.vars, &self.basis);
        let mut row_done = alloc::vec![false; n];
        let mut pivot_of_col = alloc::vec![usize::MAX; n];
        for _ in 0..n {
            let mut pick = None;
            'search: for r in (0..n).filter(|&r| !row_done[r]) {
                for c in (0..n).filter(|&c| pivot_of_col[c] == usize::MAX) {
                    if a.get(r, c).is_unit() {
                        pick = Some((r, c));
                        break 'search;
                    }
                }
            }
            let (pr, pc) = pick.ok_or(Error::NotInvertible)?;
            let scale = a.get(pr, pc).inverse_unit().expect("unit pivot");
            for c in 0..n {
                let x = a.get(pr, c).mul_unchecked(&scale);
                a.set(pr, c, x);
                let y = inv.get(pr, c).mul_unchecked(&scale);
                inv.set(pr, c, y);
            }
            for r in 0..n {
                if r == pr || a.get(r, pc).is_zero() {
                    continue;
                }
                let factor = -a.get(r, pc);
                for c in 0..n {
                    let mut x = a.get(r, c).clone();
                    x.add_assign_unchecked(&factor.mul_unchecked(a.get(pr, c)));
                    a.set(r, c, x);
                    let mut y = inv.get(r, c).clone();
                    y.add_assign_unchecked(&factor.mul_unchecked(inv.get(pr, c)));
                    inv.set(r, c, y);
                }
            }
            row_done[pr] = true;
            pivot_of_col[pc] = pr;
        }
        // Row `pivot_of_col[c]` of `a` is now e_c; reorder to get the inverse.
        let mut out = Self::zero(&self.vars, &self.basis);
        for c in 0..n {
            let r = pivot_of_col[c];
            for k in 0..n {
                out.set(c, k, inv.get(r, k).clone());
            }
        }
        Ok(out)
    }
}

/// A monomial matrix written as a permutation pattern plus one-term scalars:
/// row `r` has the single nonzero entry `scalars[r]` in column `perm[r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialDecomposition {
    pub perm: Vec<usize>,
    pub scalars: Vec<LaurentPoly>,
}

impl MonomialDecomposition {
    /// Order of the permutation pattern.
    pub fn pattern_order(&self) -> u64 {
        let n = self.perm.len();
        let mut seen = alloc::vec![false; n];
        let mut order: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn is_identity_pattern(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Exponent vector and coefficient of each row scalar.
    pub fn exponent_table(&self) -> Vec<(BigInt, Vec<i32>)> {
        self.scalars
            .iter()
            .map(|s| {
                let (e, c) = s.single_term().expect("one-term scalar");
                (c.clone(), e.clone())
            })
            .collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn setup() -> (Arc<VarSet>, Arc<Vec<String>>) {
        let vars = VarSet::new(["q", "t"]).unwrap();
        let basis = Arc::new(vec!["e(1,2)".to_string(), "e(1,3)".to_string(), "e(2,3)".to_string()]);
        (vars, basis)
    }

    fn mat(vars: &Arc<VarSet>, basis: &Arc<Vec<String>>, rows: [[&str; 3]; 3]) -> PolyMatrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| LaurentPoly::parse(vars, s).unwrap()).collect())
            .collect();
        PolyMatrix::from_rows(vars, basis, rows).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let (v, b) = setup();
        let m = mat(&v, &b, [["t*q^2", "0", "0"], ["t*q^2-t*q", "0", "q"], ["0", "1", "1-q"]]);
        let i = PolyMatrix::identity(&v, &b);
        assert_eq!(i.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&i).unwrap(), m);
        assert!(m.pow(0).is_identity());
    }

    #[test]
    fn diagonal_product() {
        let (v, b) = setup();
        let d = |s: [&str; 3]| {
            PolyMatrix::diagonal(&v, &b, s.iter().map(|x| LaurentPoly::parse(&v, x).unwrap()).collect())
                .unwrap()
        };
        assert_eq!(d(["t^2", "1", "1"]).mul(&d(["1", "t^2", "1"])).unwrap(), d(["t^2", "t^2", "1"]));
    }

    #[test]
    fn unit_pivot_inverse() {
        let (v, b) = setup();
        let m = mat(&v, &b, [["t*q^2", "0", "0"], ["t*q^2-t*q", "0", "q"], ["0", "1", "1-q"]]);
        let inv = m.inverse_unit_pivot().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_matrix_has_no_unit_pivot_inverse() {
        let (v, b) = setup();
        let m = mat(&v, &b, [["1", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]]);
        assert_eq!(m.inverse_unit_pivot(), Err(Error::NotInvertible));
    }

    #[test]
    fn monomial_decomposition() {
        let (v, b) = setup();
        let i = PolyMatrix::identity(&v, &b);
        let d = i.monomial_decompose().unwrap();
        assert_eq!(d.perm, vec![0, 1, 2]);
        assert!(d.scalars.iter().all(|s| s.is_one()));

        let m = mat(&v, &b, [["0", "t", "0"], ["0", "0", "t"], ["1", "0", "0"]]);
        let d = m.monomial_decompose().unwrap();
        assert_eq!(d.pattern_order(), 3);
        assert_eq!(PolyMatrix::from_decomposition(&v, &b, &d).unwrap(), m);

        let generic = mat(&v, &b, [["t*q^2", "0", "0"], ["t*q^2-t*q", "0", "q"], ["0", "1", "1-q"]]);
        assert_eq!(generic.monomial_decompose(), Err(Error::NotMonomial));
        let two_in_col = mat(&v, &b, [["1", "0", "0"], ["1", "0", "0"], ["0", "0", "1"]]);
        assert_eq!(two_in_col.monomial_decompose(), Err(Error::NotMonomial));
    }

    #[test]
    fn shape_mismatches() {
        let (v, b) = setup();
        let other_vars = VarSet::new(["t"]).unwrap();
        let a = PolyMatrix::identity(&v, &b);
        let c = PolyMatrix::identity(&other_vars, &b);
        assert_eq!(a.mul(&c), Err(Error::RingMismatch));
        let b2 = Arc::new(vec!["e1".to_string(), "e2".to_string()]);
        let d = PolyMatrix::identity(&v, &b2);
        assert!(matches!(a.mul(&d), Err(Error::DimensionMismatch(_))));
    }
}
