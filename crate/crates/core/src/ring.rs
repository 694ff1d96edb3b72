//! Laurent polynomials `Z[v1^±1, ..., vm^±1]` with arbitrary-precision
//! integer coefficients.
//!
//! A polynomial is stored as a map from dense exponent vectors (one entry per
//! variable of its [`VarSet`]) to nonzero coefficients. The map is kept in
//! canonical form at all times, so structural equality is ring equality.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if out.contains(&name) {
                return Err(Error::DuplicateVariable(name));
            }
            out.push(name);
        }
        Ok(Arc::new(VarSet { names: out }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub(crate) fn same_ring(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub type Exponents = Vec<i32>;

/// Ring operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    /// Negates the first operand; the second is only checked for ring agreement.
    Neg,
}

/// Applies a ring operation to two polynomials over the same variables.
pub fn poly_arith(op: PolyOp, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    match op {
        PolyOp::Add => a.checked_add(b),
        PolyOp::Sub => a.checked_sub(b),
        PolyOp::Mul => a.checked_mul(b),
        PolyOp::Neg => {
            if !same_ring(&a.vars, &b.vars) {
                return Err(Error::RingMismatch);
            }
            Ok(-a)
        }
    }
}

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Arc<VarSet>, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c, vec![0; vars.len()])
    }

    /// `c * v^exps`. Panics if `exps` has the wrong length.
    pub fn monomial(vars: &Arc<VarSet>, c: impl Into<BigInt>, exps: Exponents) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// The variable `name` raised to `e`.
    pub fn var_pow(vars: &Arc<VarSet>, name: &str, e: i32) -> Result<Self> {
        let idx = vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = e;
        Ok(Self::monomial(vars, 1, exps))
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        Self::var_pow(vars, name, 1)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, collecting like terms.
    pub fn from_terms<I>(vars: &Arc<VarSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Exponents)>,
    {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// Terms in canonical (ascending exponent vector) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn single_term(&self) -> Option<(&Exponents, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Units of a Laurent ring over Z are `±v^e`.
    pub fn is_unit(&self) -> bool {
        self.single_term().is_some_and(|(_, c)| c.abs().is_one())
    }

    /// True for the constants `1` and `-1`.
    pub fn is_root_of_unity(&self) -> bool {
        self.single_term()
            .is_some_and(|(e, c)| c.abs().is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn inverse_unit(&self) -> Option<Self> {
        let (e, c) = self.single_term()?;
        if !c.abs().is_one() {
            return None;
        }
        let inv: Exponents = e.iter().map(|x| -x).collect();
        Some(Self::monomial(&self.vars, c.clone(), inv))
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow_signed(&self, k: i64) -> Option<Self> {
        let mag = u32::try_from(k.unsigned_abs()).ok()?;
        if k >= 0 {
            Some(self.pow(mag))
        } else {
            Some(self.inverse_unit()?.pow(mag))
        }
    }

    /// Replaces variable `name` by `value`. Negative powers of the variable
    /// need `value` to be a unit.
    pub fn substitute(&self, name: &str, value: &LaurentPoly) -> Result<Self> {
        self.check(value)?;
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let power = rest[idx];
            rest[idx] = 0;
            let factor = value
                .pow_signed(power as i64)
                .ok_or_else(|| Error::NonUnitSubstitution(value.to_string()))?;
            let base = Self::monomial(&self.vars, c.clone(), rest);
            out.add_assign_unchecked(&base.mul_unchecked(&factor));
        }
        Ok(out)
    }

    /// Parses the canonical text form produced by `Display`, e.g. `1-q^2`,
    /// `-t*q^-1`, `3*t1^2*t2^-1`.
    pub fn parse(vars: &Arc<VarSet>, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut out = Self::zero(vars);
        let mut start = 0;
        let mut i = 0;
        while i <= bytes.len() {
            let at_split = i == bytes.len()
                || (i > start && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if at_split {
                let (c, e) = parse_term(vars, &s[start..i])?;
                out.add_term(e, c);
                start = i;
            }
            i += 1;
        }
        Ok(out)
    }
}

fn parse_term(vars: &Arc<VarSet>, term: &str) -> Result<(BigInt, Exponents)> {
    let bad = || Error::Parse(alloc::format!("bad term `{term}`"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'+') => (1, &term[1..]),
        Some(b'-') => (-1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let mut coef = BigInt::from(sign);
    let mut exps = vec![0i32; vars.len()];
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(bad());
        }
        if factor.as_bytes()[0].is_ascii_digit() {
            let n: BigInt = factor.parse().map_err(|_| bad())?;
            coef *= n;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => (name, e.parse::<i32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let idx = vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        exps[idx] += e;
    }
    Ok((coef, exps))
}

fn write_term(f: &mut fmt::Formatter<'_>, vars: &VarSet, e: &Exponents, c: &BigInt) -> fmt::Result {
    let constant = e.iter().all(|&x| x == 0);
    if constant {
        return write!(f, "{c}");
    }
    let mut first = true;
    if c.is_one() {
    } else if (-c).is_one() {
        f.write_str("-")?;
    } else {
        write!(f, "{c}")?;
        first = false;
    }
    for (name, &x) in vars.names().iter().zip(e) {
        if x == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if x == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{x}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 && !c.is_negative() {
                f.write_str("+")?;
            }
            write_term(f, &self.vars, e, c)?;
        }
        Ok(())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics with "ring mismatch" on differing variable sets; use the
        /// `checked_*` methods for a `Result`.
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("ring mismatch")
            }
        }

        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
