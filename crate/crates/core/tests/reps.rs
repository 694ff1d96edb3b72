use crystbraid_core::matrix::PolyMatrix;
use crystbraid_core::presentations::{PresentationId, VP3_TRIPLES};
use crystbraid_core::reps::{element_order, rep_matrix, relation_report, MatrixRep, OrderResult, RelationStatus, RepTable};
use crystbraid_core::ring::LaurentPoly;
use crystbraid_core::words::{lambda, parse_word, permutation_image, Family, GenSym, GroupTag, GroupWord, PermHom};
use proptest::prelude::*;

fn w(s: &str, tag: GroupTag, n: usize) -> GroupWord {
    parse_word(s, tag, n).unwrap()
}

fn lbk_fixture(rows: [[&str; 3]; 3]) -> PolyMatrix {
    let rep = MatrixRep::Lbk;
    let vars = rep.vars(3);
    let rows = rows.iter().map(|r| r.iter().map(|e| LaurentPoly::parse(&vars, e).unwrap()).collect()).collect();
    PolyMatrix::from_rows(&vars, &rep.basis(3), rows).unwrap()
}

// the two generators and their inverses on three strands, written out by hand
fn fixtures() -> [(&'static str, PolyMatrix); 4] {
    [
        ("s1", lbk_fixture([["t*q^2", "0", "0"], ["t*q^2-t*q", "0", "q"], ["0", "1", "1-q"]])),
        ("s2", lbk_fixture([["1-q", "q", "0"], ["1", "0", "t*q^3-t*q^2"], ["0", "0", "t*q^2"]])),
        ("s1^-1", lbk_fixture([["t^-1*q^-2", "0", "0"], ["-1+2*q^-1-q^-2", "1-q^-1", "1"], ["-q^-1+q^-2", "q^-1", "0"]])),
        ("s2^-1", lbk_fixture([["0", "1", "1-q"], ["q^-1", "1-q^-1", "2-q-q^-1"], ["0", "0", "t^-1*q^-2"]])),
    ]
}

#[test]
fn lbk_matches_hand_matrices() {
    for (word, expect) in fixtures() {
        let got = rep_matrix(&MatrixRep::Lbk, 3, &w(word, GroupTag::B, 3)).unwrap();
        assert_eq!(got, expect, "{word}");
    }
    let [(_, s1), (_, s2), (_, s1i), (_, s2i)] = fixtures();
    assert!(s1.mul(&s1i).unwrap().is_identity());
    assert!(s2.mul(&s2i).unwrap().is_identity());
    assert!(s1i.mul(&s1).unwrap().is_identity());
}

#[test]
fn lbk_braid_relations() {
    for n in 3..=5 {
        let report = relation_report(PresentationId::Braid, &MatrixRep::Lbk, n, &[]).unwrap();
        assert!(report.iter().all(|o| o.status == RelationStatus::Holds && o.paths_agree), "n={n}");
    }
    // the verbatim casework breaks sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2
    let printed = relation_report(PresentationId::Braid, &MatrixRep::LbkPrinted, 3, &[]).unwrap();
    assert!(printed.iter().any(|o| o.status == RelationStatus::Fails));
}

#[test]
fn lbk_at_q_one_is_psi1t() {
    let rep = MatrixRep::LbkSpecial { q: LaurentPoly::one(&MatrixRep::Lbk.vars(3)), t: LaurentPoly::var(&MatrixRep::Lbk.vars(3), "t").unwrap() };
    for n in 3..=4 {
        let word = w("s1 s2^-1 s1 s2 s2", GroupTag::B, n);
        let special = rep_matrix(&rep, n, &word).unwrap();
        let small = rep_matrix(&MatrixRep::Psi1t, n, &word).unwrap();
        assert_eq!(special.to_string_rows(), small.to_string_rows());
    }
}

trait Rows {
    fn to_string_rows(&self) -> Vec<Vec<String>>;
}

impl Rows for PolyMatrix {
    fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.dim()).map(|r| self.row(r).iter().map(|p| p.to_string()).collect()).collect()
    }
}

#[test]
fn psi1t_braid_relations_and_involutions() {
    for n in 3..=5 {
        let report = relation_report(PresentationId::Braid, &MatrixRep::Psi1t, n, &[]).unwrap();
        assert!(report.iter().all(|o| o.status == RelationStatus::Holds), "n={n}");
        let vars = MatrixRep::Psi1t.vars(n);
        for i in 1..n {
            let m = rep_matrix(&MatrixRep::Psi1t, n, &w(&format!("s{i}"), GroupTag::B, n)).unwrap();
            for c in [1, -1] {
                let sq = m.substitute("t", &LaurentPoly::constant(&vars, c)).unwrap().pow(2);
                assert!(sq.is_identity(), "n={n} i={i} t={c}");
            }
        }
    }
}

#[test]
fn pure_generators_are_diagonal_squares() {
    for n in 2..=5 {
        let vars = MatrixRep::Psi1t.vars(n);
        let basis = MatrixRep::Psi1t.basis(n);
        for i in 1..n {
            for j in i + 1..=n {
                let m = rep_matrix(&MatrixRep::Psi1t, n, &w(&format!("a({i},{j})"), GroupTag::B, n)).unwrap();
                let diag = basis
                    .iter()
                    .map(|b| if *b == format!("e({i},{j})") { LaurentPoly::var_pow(&vars, "t", 2).unwrap() } else { LaurentPoly::one(&vars) })
                    .collect();
                assert_eq!(m, PolyMatrix::diagonal(&vars, &basis, diag).unwrap(), "a({i},{j}) n={n}");
            }
        }
    }
}

#[test]
fn psiv_relations() {
    for n in 3..=5 {
        for pres in [PresentationId::SymmetricRho, PresentationId::Braid] {
            let report = relation_report(pres, &MatrixRep::PsiV, n, &[]).unwrap();
            assert!(report.iter().all(|o| o.status == RelationStatus::Holds && o.paths_agree), "{pres} n={n}");
        }
    }
}

#[test]
fn lambda_diagonals() {
    let expect = [
        ((1, 2), ["t^-1", "t1", "t1^-1"]),
        ((2, 1), ["t^-1", "t1^-1", "t1"]),
        ((2, 3), ["t2", "t2^-1", "t^-1"]),
        ((3, 2), ["t2^-1", "t2", "t^-1"]),
        ((3, 1), ["t1^-1", "t^-1", "t1"]),
        // composing r2 l(1,2) r2 puts t^-1 in the middle slot
        ((1, 3), ["t1", "t^-1", "t1^-1"]),
    ];
    for ((i, j), diag) in expect {
        let m = rep_matrix(&MatrixRep::PsiV, 3, &lambda(i, j, 3).unwrap()).unwrap();
        assert!(m.is_diagonal());
        assert_eq!(m.diagonal_entries().iter().map(|p| p.to_string()).collect::<Vec<_>>(), diag, "l({i},{j})");
    }
}

#[test]
fn psiv_respects_vp3_relations() {
    for (k, i, j) in VP3_TRIPLES {
        let lhs = w(&format!("l({k},{i}) l({k},{j}) l({i},{j})"), GroupTag::VB, 3);
        let rhs = w(&format!("l({i},{j}) l({k},{j}) l({k},{i})"), GroupTag::VB, 3);
        assert_eq!(rep_matrix(&MatrixRep::PsiV, 3, &lhs).unwrap(), rep_matrix(&MatrixRep::PsiV, 3, &rhs).unwrap());
    }
}

#[test]
fn mixed_and_forbidden_under_psiv() {
    for n in 3..=5 {
        let vars = MatrixRep::PsiV.vars(n);
        let t1 = LaurentPoly::var(&vars, "t1").unwrap();
        let collapse: Vec<(String, LaurentPoly)> = (2..n).map(|i| (format!("t{i}"), t1.clone())).collect();
        let general = relation_report(PresentationId::VbMixed, &MatrixRep::PsiV, n, &[]).unwrap();
        let special = relation_report(PresentationId::VbMixed, &MatrixRep::PsiV, n, &collapse).unwrap();
        assert!(general.iter().filter(|o| o.family == "vb-slide").all(|o| !o.images_equal && o.witness.is_some()));
        assert!(special.iter().all(|o| o.images_equal));
        let forb = relation_report(PresentationId::Forbidden, &MatrixRep::PsiV, n, &collapse).unwrap();
        assert!(forb.iter().filter(|o| o.family == "forbidden-head").all(|o| o.images_equal));
        assert!(forb.iter().filter(|o| o.family == "forbidden-tail").all(|o| !o.images_equal));
        assert!(general.iter().chain(&special).chain(&forb).all(|o| o.paths_agree));
    }
}

#[test]
fn theta_is_triangular_and_commutes() {
    for n in 2..=6 {
        for i in 1..n {
            let m = rep_matrix(&MatrixRep::Theta, n, &w(&format!("t{i}"), GroupTag::T, n)).unwrap();
            assert!(m.transpose().is_lower_triangular(), "t{i} n={n}");
            let inv = rep_matrix(&MatrixRep::Theta, n, &w(&format!("t{i}^-1"), GroupTag::T, n)).unwrap();
            assert!(m.mul(&inv).unwrap().is_identity());
        }
        let report = relation_report(PresentationId::Tn, &MatrixRep::Theta, n, &[]).unwrap();
        assert!(report.iter().all(|o| o.status == RelationStatus::Holds), "n={n}");
    }
}

#[test]
fn generator_images_are_monomial() {
    for n in 2..=6 {
        for (rep, tag) in [(MatrixRep::Psi1t, GroupTag::B), (MatrixRep::PsiV, GroupTag::VB)] {
            let mut table = RepTable::new(&rep, n).unwrap();
            for i in 1..n {
                for g in [GenSym::sigma(i), GenSym::rho(i)] {
                    if tag == GroupTag::B && g.family != Family::Sigma {
                        continue;
                    }
                    for inv in [false, true] {
                        assert!(table.generator_matrix(g, inv).unwrap().monomial_decompose().is_ok());
                    }
                }
            }
        }
    }
}

fn brute_force_order(m: &PolyMatrix, bound: u64) -> Option<u64> {
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m).unwrap();
    }
    None
}

fn word(tag: GroupTag, n: usize, families: usize, len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0..families, 1..n, prop_oneof![Just(-1i64), Just(1), Just(2)]), 0..len).prop_map(move |v| {
        let letters: Vec<_> = v.into_iter().map(|(f, i, e)| (if f == 0 { GenSym::sigma(i) } else { GenSym::rho(i) }, e)).collect();
        GroupWord::from_letters(tag, n, &letters).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homomorphism_and_paths(u in word(GroupTag::VB, 4, 2, 8), v in word(GroupTag::VB, 4, 2, 8)) {
        let mut table = RepTable::new(&MatrixRep::PsiV, 4).unwrap();
        let uv = table.word_matrix(&u.concat(&v).unwrap()).unwrap();
        prop_assert_eq!(&uv, &table.word_matrix(&u).unwrap().mul(&table.word_matrix(&v).unwrap()).unwrap());
        prop_assert_eq!(&uv, &table.word_matrix_by_basis_maps(&u.concat(&v).unwrap()).unwrap());
    }

    #[test]
    fn lbk_homomorphism(u in word(GroupTag::B, 3, 1, 4), v in word(GroupTag::B, 3, 1, 4)) {
        let mut table = RepTable::new(&MatrixRep::Lbk, 3).unwrap();
        let uv = table.word_matrix(&u.concat(&v).unwrap()).unwrap();
        prop_assert_eq!(&uv, &table.word_matrix(&u).unwrap().mul(&table.word_matrix(&v).unwrap()).unwrap());
        prop_assert_eq!(&uv, &table.word_matrix_by_basis_maps(&u.concat(&v).unwrap()).unwrap());
        prop_assert!(table.word_matrix(&u.concat(&u.inverse()).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn order_oracle_agrees_with_powers(u in word(GroupTag::VB, 3, 2, 10)) {
        let m = rep_matrix(&MatrixRep::PsiV, 3, &u).unwrap();
        let expect = brute_force_order(&m, 12).map_or(OrderResult::Infinite, OrderResult::Finite);
        prop_assert_eq!(element_order(&MatrixRep::PsiV, 3, &u).unwrap(), expect);
    }

    #[test]
    fn fixed_point_permutations_match_powers(n in 4usize..=5, u in word(GroupTag::B, 5, 1, 12)) {
        let u = GroupWord::from_letters(GroupTag::B, n, &u.letters().filter(|(g, _)| g.index < n).collect::<Vec<_>>()).unwrap();
        let p = permutation_image(&u, PermHom::PhiB).unwrap();
        prop_assume!(!p.is_identity() && p.has_fixed_point());
        let m = rep_matrix(&MatrixRep::Psi1t, n, &u).unwrap();
        let expect = brute_force_order(&m, 12).map_or(OrderResult::Infinite, OrderResult::Finite);
        prop_assert_eq!(element_order(&MatrixRep::Psi1t, n, &u).unwrap(), expect);
    }
}

// A 3-cycle fixing a strand still carries torsion: the order-3 elements of
// three strands survive inside four.
#[test]
fn torsion_with_fixed_strand() {
    let u = w("s2^-1 s1", GroupTag::B, 4);
    let p = permutation_image(&u, PermHom::PhiB).unwrap();
    assert!(!p.is_identity() && p.has_fixed_point());
    assert_eq!(element_order(&MatrixRep::Psi1t, 4, &u).unwrap(), OrderResult::Finite(3));
    assert!(rep_matrix(&MatrixRep::Psi1t, 4, &u).unwrap().pow(3).is_identity());
}
