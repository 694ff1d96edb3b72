//! VP_3 modelled as `(F_3 ⋊ F_2) * Z`, with F_3 = <b21, b22, b23>,
//! F_2 = <b11, b12> and Z generated by z (the image of lambda_{1,3}).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::free::{FreeAuto, FreeBasis, FreeWord};
use crate::presentations::VP3_TRIPLES;
use crate::words::{lex, Derived, Token};

/// Element `u v` of the semidirect product, `u` in F_3 and `v` in F_2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDElement {
    pub u: FreeWord,
    pub v: FreeWord,
}

impl SDElement {
    pub fn is_identity(&self) -> bool {
        self.u.is_empty() && self.v.is_empty()
    }
}

impl fmt::Display for SDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u.is_empty(), self.v.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, true) => write!(f, "{}", self.u),
            (true, false) => write!(f, "{}", self.v),
            (false, false) => write!(f, "{} {}", self.u, self.v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FpLetter {
    Sd(SDElement),
    Z(i64),
}

/// Free-product normal form: nontrivial letters alternating between factors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FPElement {
    letters: Vec<FpLetter>,
}

impl FPElement {
    pub fn identity() -> Self {
        FPElement::default()
    }

    pub fn letters(&self) -> &[FpLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for FPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                FpLetter::Sd(s) => format!("[{s}]"),
                FpLetter::Z(1) => "z".to_string(),
                FpLetter::Z(k) => format!("z^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Outcome of evaluating `lhs rhs^-1` in the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vp3Check {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub residue: FPElement,
    pub holds: bool,
}

pub struct Vp3Model {
    normal: Arc<FreeBasis>,
    acting: Arc<FreeBasis>,
    // conjugation x -> b x b^-1 for b = b11, b12
    conj: [FreeAuto; 2],
}

impl Default for Vp3Model {
    fn default() -> Self {
        Self::new()
    }
}

impl Vp3Model {
    pub fn new() -> Self {
        let normal = FreeBasis::new(["b21", "b22", "b23"]).expect("distinct");
        let acting = FreeBasis::new(["b11", "b12"]).expect("distinct");
        let w = |parts: &[(usize, i64)]| FreeWord::from_powers(&normal, parts);
        // b11: b23 -> (b22 b21)^-1 b23 (b22 b21)
        let by_b11 = FreeAuto::from_moved(
            &normal,
            vec![(2, w(&[(0, -1), (1, -1), (2, 1), (1, 1), (0, 1)]), w(&[(1, 1), (0, 1), (2, 1), (0, -1), (1, -1)]))],
        )
        .expect("inverse pair");
        // b12: b22 -> (b21 b23^-1) b22 (b21 b23^-1)^-1
        let by_b12 = FreeAuto::from_moved(
            &normal,
            vec![(1, w(&[(0, 1), (2, -1), (1, 1), (2, 1), (0, -1)]), w(&[(2, 1), (0, -1), (1, 1), (0, 1), (2, -1)]))],
        )
        .expect("inverse pair");
        Vp3Model { normal, acting, conj: [by_b11, by_b12] }
    }

    pub fn normal_basis(&self) -> &Arc<FreeBasis> {
        &self.normal
    }

    pub fn acting_basis(&self) -> &Arc<FreeBasis> {
        &self.acting
    }

    /// `v u v^-1`, applying the rightmost letter of `v` first.
    pub fn sd_act(&self, v: &FreeWord, u: &FreeWord) -> FreeWord {
        let mut out = u.clone();
        for &l in v.letters().iter().rev() {
            let a = &self.conj[(l.unsigned_abs() - 1) as usize];
            out = if l > 0 { a.apply(&out) } else { a.apply_inverse(&out) };
        }
        out
    }

    pub fn sd_identity(&self) -> SDElement {
        SDElement { u: FreeWord::identity(&self.normal), v: FreeWord::identity(&self.acting) }
    }

    pub fn sd_mul(&self, x: &SDElement, y: &SDElement) -> SDElement {
        let u = x.u.mul(&self.sd_act(&x.v, &y.u)).expect("same basis");
        let v = x.v.mul(&y.v).expect("same basis");
        SDElement { u, v }
    }

    pub fn sd_inv(&self, x: &SDElement) -> SDElement {
        let vi = x.v.inverse();
        SDElement { u: self.sd_act(&vi, &x.u.inverse()), v: vi }
    }

    fn push(&self, out: &mut Vec<FpLetter>, letter: FpLetter) {
        let merged = match (out.last(), &letter) {
            (Some(FpLetter::Z(a)), FpLetter::Z(b)) => Some(FpLetter::Z(a + b)),
            (Some(FpLetter::Sd(a)), FpLetter::Sd(b)) => Some(FpLetter::Sd(self.sd_mul(a, b))),
            _ => None,
        };
        match merged {
            Some(m) => {
                out.pop();
                let trivial = match &m {
                    FpLetter::Z(k) => *k == 0,
                    FpLetter::Sd(s) => s.is_identity(),
                };
                if !trivial {
                    out.push(m);
                }
            }
            None => match &letter {
                FpLetter::Z(0) => {}
                FpLetter::Sd(s) if s.is_identity() => {}
                _ => out.push(letter),
            },
        }
    }

    pub fn model_mul(&self, x: &FPElement, y: &FPElement) -> FPElement {
        let mut out = x.letters.clone();
        for l in &y.letters {
            // a vanished boundary letter exposes the next pair, which push handles
            self.push(&mut out, l.clone());
        }
        FPElement { letters: out }
    }

    pub fn model_inv(&self, x: &FPElement) -> FPElement {
        let letters = x
            .letters
            .iter()
            .rev()
            .map(|l| match l {
                FpLetter::Z(k) => FpLetter::Z(-k),
                FpLetter::Sd(s) => FpLetter::Sd(self.sd_inv(s)),
            })
            .collect();
        FPElement { letters }
    }

    pub fn model_pow(&self, x: &FPElement, k: i64) -> FPElement {
        let base = if k < 0 { self.model_inv(x) } else { x.clone() };
        (0..k.unsigned_abs()).fold(FPElement::identity(), |acc, _| self.model_mul(&acc, &base))
    }

    fn from_letters(&self, letters: Vec<FpLetter>) -> FPElement {
        let mut out = Vec::new();
        for l in letters {
            self.push(&mut out, l);
        }
        FPElement { letters: out }
    }

    fn sd_word(&self, names: &[(&str, i64)]) -> FpLetter {
        let mut s = self.sd_identity();
        for &(name, e) in names {
            if let Some(g) = self.normal.index_of(name) {
                s = self.sd_mul(&s, &SDElement { u: FreeWord::generator_pow(&self.normal, g, e), v: FreeWord::identity(&self.acting) });
            } else {
                let g = self.acting.index_of(name).expect("model generator");
                s = self.sd_mul(&s, &SDElement { u: FreeWord::identity(&self.normal), v: FreeWord::generator_pow(&self.acting, g, e) });
            }
        }
        FpLetter::Sd(s)
    }

    pub fn z(&self) -> FPElement {
        self.from_letters(vec![FpLetter::Z(1)])
    }

    /// One of b11, b12, b21, b22, b23.
    pub fn b(&self, i: usize, j: usize) -> Result<FPElement> {
        let name = format!("b{i}{j}");
        if self.normal.index_of(&name).is_none() && self.acting.index_of(&name).is_none() {
            return Err(Error::IndexOutOfRange(format!("b({i},{j})")));
        }
        Ok(self.from_letters(vec![self.sd_word(&[(&name, 1)])]))
    }

    pub fn lambda_embed(&self, i: usize, j: usize) -> Result<FPElement> {
        let letters = match (i, j) {
            (1, 3) => vec![FpLetter::Z(1)],
            (1, 2) => vec![FpLetter::Z(-1), self.sd_word(&[("b12", 1)])],
            (2, 1) => vec![self.sd_word(&[("b11", 1), ("b12", -1)]), FpLetter::Z(1)],
            (2, 3) => vec![FpLetter::Z(-1), self.sd_word(&[("b21", 1)])],
            (3, 2) => vec![self.sd_word(&[("b23", 1), ("b21", -1)]), FpLetter::Z(1)],
            (3, 1) => vec![FpLetter::Z(-1), self.sd_word(&[("b21", 1), ("b23", -1), ("b22", 1)])],
            _ => return Err(Error::IndexOutOfRange(format!("l({i},{j}) in VP_3"))),
        };
        Ok(self.from_letters(letters))
    }

    /// Evaluates a word in `l(i,j)` and `b(i,j)` tokens.
    pub fn eval(&self, text: &str) -> Result<FPElement> {
        let mut acc = FPElement::identity();
        for tok in lex(text)? {
            let (g, e) = match tok {
                Token::Derived(Derived::Lambda(i, j), e) => (self.lambda_embed(i, j)?, e),
                Token::Derived(Derived::B(i, j), e) => (self.b(i, j)?, e),
                Token::Derived(d, _) => return Err(Error::UnknownToken(d.token())),
                Token::Gen(g, _) => return Err(Error::IllegalGenerator { generator: g.to_string(), context: "VP_3 model".into() }),
            };
            acc = self.model_mul(&acc, &self.model_pow(&g, e));
        }
        Ok(acc)
    }

    fn check(&self, label: &str, lhs: &str, rhs: &str) -> Result<Vp3Check> {
        let residue = self.model_mul(&self.eval(lhs)?, &self.model_inv(&self.eval(rhs)?));
        Ok(Vp3Check { label: label.into(), lhs: lhs.into(), rhs: rhs.into(), holds: residue.is_identity(), residue })
    }

    /// The six defining relations `l_ki l_kj l_ij = l_ij l_kj l_ki`.
    pub fn verify_vp3_relations(&self) -> Vec<Vp3Check> {
        VP3_TRIPLES
            .iter()
            .enumerate()
            .map(|(idx, &(k, i, j))| {
                let lhs = format!("l({k},{i}) l({k},{j}) l({i},{j})");
                let rhs = format!("l({i},{j}) l({k},{j}) l({k},{i})");
                self.check(&format!("vp3-{}", idx + 1), &lhs, &rhs).expect("valid tokens")
            })
            .collect()
    }

    /// Products of two lambda images that recover the b generators.
    pub fn recomposition_checks(&self) -> Vec<Vp3Check> {
        [
            ("b11", "l(2,1) l(1,2)", "b(1,1)"),
            ("b12", "l(1,3) l(1,2)", "b(1,2)"),
            ("b21", "l(1,3) l(2,3)", "b(2,1)"),
            ("b22", "l(3,2) l(3,1)", "b(2,2)"),
            ("b23", "l(3,2) l(2,3)", "b(2,3)"),
        ]
        .into_iter()
        .map(|(label, lhs, rhs)| self.check(label, lhs, rhs).expect("valid tokens"))
        .collect()
    }

    /// `l(1,2) l(1,3) = l(1,3) l(1,2)`, which must not hold.
    pub fn negative_control(&self) -> Vp3Check {
        self.check("commute(l12,l13)", "l(1,2) l(1,3)", "l(1,3) l(1,2)").expect("valid tokens")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let m = Vp3Model::new();
        let f3 = m.normal_basis().clone();
        let f2 = m.acting_basis().clone();
        let b12 = FreeWord::generator(&f2, 1);
        let b11 = FreeWord::generator(&f2, 0);
        assert_eq!(m.sd_act(&b12, &FreeWord::generator(&f3, 0)).to_string(), "b21");
        assert_eq!(m.sd_act(&b11, &FreeWord::generator(&f3, 2)).to_string(), "b21^-1 b22^-1 b23 b22 b21");
        let u = f3.parse_word("b22 b23^-1").unwrap();
        assert_eq!(m.sd_act(&FreeWord::identity(&f2), &u), u);
    }

    #[test]
    fn free_product_normal_form() {
        let m = Vp3Model::new();
        let b21 = m.b(2, 1).unwrap();
        assert!(m.model_mul(&b21, &m.model_inv(&b21)).is_identity());
        let z2 = m.model_pow(&m.z(), 2);
        let x = m.model_mul(&m.model_mul(&z2, &b21), &m.model_pow(&m.z(), -2));
        assert_eq!(x.letters().len(), 3);
        assert_eq!(x.to_string(), "z^2 [b21] z^-2");
    }

    #[test]
    fn recompositions_and_relations() {
        let m = Vp3Model::new();
        assert_eq!(m.eval("l(2,1) l(1,2)").unwrap().to_string(), "[b11]");
        assert_eq!(m.eval("l(3,2) l(2,3)").unwrap().to_string(), "[b23]");
        assert!(m.recomposition_checks().iter().all(|c| c.holds));
        assert!(m.verify_vp3_relations().iter().all(|c| c.holds));
        assert!(!m.negative_control().holds);
        assert!(m.eval("s1").is_err());
    }
}
