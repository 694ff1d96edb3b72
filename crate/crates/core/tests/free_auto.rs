use crystbraid_core::autreps::{in_kernel, rep_auto, AutRep};
use crystbraid_core::free::{eps_auto, FreeAuto, FreeBasis};
use crystbraid_core::presentations::{relation_instances, Polarity, PresentationId};
use crystbraid_core::words::{parse_word, GenSym, GroupTag, GroupWord};
use proptest::prelude::*;

fn eps_product(n: usize, parts: &[(usize, usize, i64)]) -> FreeAuto {
    let mut acc = FreeAuto::identity(&FreeBasis::standard(n));
    for &(i, j, e) in parts {
        acc = acc.then(&eps_auto(n, i, j).unwrap().pow(e).unwrap()).unwrap();
    }
    acc
}

fn check_family(rep: AutRep, pres: PresentationId, n: usize) {
    for r in relation_instances(pres, n).unwrap() {
        let equal = rep_auto(rep, n, &r.lhs).unwrap() == rep_auto(rep, n, &r.rhs).unwrap();
        assert_eq!(equal, r.polarity == Polarity::Equal, "{pres} {} under {rep}", r.label);
    }
}

#[test]
fn artin_respects_braid_relations() {
    for n in 2..=5 {
        check_family(AutRep::Artin, PresentationId::Braid, n);
    }
}

#[test]
fn pure_braid_generators_match_eps_expansions() {
    for n in 2..=4 {
        for i in 1..n {
            for j in i + 1..=n {
                let a = rep_auto(AutRep::Artin, n, &parse_word(&format!("a({i},{j})"), GroupTag::B, n).unwrap()).unwrap();
                // first form, conjugation by eps(k,i) for k = j-1 down to i+1
                let mut first = Vec::new();
                for k in (i + 1..j).rev() {
                    first.push((k, i, 1));
                }
                first.push((i, j, -1));
                first.push((j, i, -1));
                for k in i + 1..j {
                    first.push((k, i, -1));
                }
                // second form, conjugation by eps(k,j)
                let mut second = Vec::new();
                for k in (i + 1..j).rev() {
                    second.push((k, j, -1));
                }
                second.push((i, j, -1));
                second.push((j, i, -1));
                for k in i + 1..j {
                    second.push((k, j, 1));
                }
                assert_eq!(a, eps_product(n, &first), "a({i},{j}) first form, n={n}");
                assert_eq!(a, eps_product(n, &second), "a({i},{j}) second form, n={n}");
            }
        }
    }
}

#[test]
fn mccool_relations_for_eps_automorphisms() {
    for n in 3..=5 {
        let idx: Vec<usize> = (1..=n).collect();
        for &i in &idx {
            for &j in &idx {
                for &k in &idx {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    assert_eq!(eps_product(n, &[(i, j, 1), (k, j, 1)]), eps_product(n, &[(k, j, 1), (i, j, 1)]));
                    assert_eq!(
                        eps_product(n, &[(i, j, 1), (k, j, 1), (i, k, 1)]),
                        eps_product(n, &[(i, k, 1), (i, j, 1), (k, j, 1)])
                    );
                    for &l in &idx {
                        if l == i || l == j || l == k {
                            continue;
                        }
                        assert_eq!(eps_product(n, &[(i, j, 1), (k, l, 1)]), eps_product(n, &[(k, l, 1), (i, j, 1)]));
                    }
                }
            }
        }
    }
}

#[test]
fn eps_words_give_eps_automorphisms() {
    for n in 2..=5 {
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let w = parse_word(&format!("e({i},{j})"), GroupTag::WB, n).unwrap();
                assert_eq!(rep_auto(AutRep::Welded, n, &w).unwrap(), eps_auto(n, i, j).unwrap(), "e({i},{j}) n={n}");
            }
        }
    }
}

#[test]
fn welded_catalog_families() {
    for n in 3..=5 {
        for pres in [
            PresentationId::SymmetricAlpha,
            PresentationId::CnMixed,
            PresentationId::WbMixed,
            PresentationId::McCool,
            PresentationId::WeldedSymmetric,
            PresentationId::WeldedForbidden,
        ] {
            check_family(AutRep::Welded, pres, n);
        }
    }
}

#[test]
fn phi_and_psi_are_powers_of_eps() {
    for n in 2..=4 {
        for i in 1..n {
            for k in -2..=2i64 {
                assert_eq!(AutRep::Phi(k).generator_auto(n, GenSym::tau(i)).unwrap(), eps_product(n, &[(i, i + 1, k)]));
                for l in -2..=2i64 {
                    assert_eq!(
                        AutRep::Psi(k, l).generator_auto(n, GenSym::tau(i)).unwrap(),
                        eps_product(n, &[(i, i + 1, k), (i + 1, i, l)])
                    );
                }
            }
        }
    }
}

#[test]
fn tn_commutativity_under_phi_psi_xi() {
    for n in 3..=5 {
        for rep in [AutRep::Phi(1), AutRep::Phi(2), AutRep::Psi(1, 1), AutRep::Psi(2, -1), AutRep::Xi] {
            check_family(rep, PresentationId::Tn, n);
        }
    }
}

#[test]
fn kernel_witnesses() {
    let w = parse_word("t1 t2 t3 t2^-1 t1^-1 t2 t3^-1 t2^-1", GroupTag::T, 4).unwrap();
    assert!(rep_auto(AutRep::Xi, 4, &w).unwrap().is_identity());
    assert!(!rep_auto(AutRep::Phi(1), 4, &w).unwrap().is_identity());
    // With letters composed left to right the witness itself is moved; its
    // letter reversal is the kernel element.
    for k in [-2i64, -1, 1, 2, 3] {
        let text = format!("s1 t1^{k} s2 t2^{k} s1 t1^{k} t2^{} s2^-1 t1^{} s1^-1 t2^{} s2^-1", -k, -k, -k);
        let w = parse_word(&text, GroupTag::UB, 3).unwrap();
        assert!(!rep_auto(AutRep::PhiTilde(k), 3, &w).unwrap().is_identity(), "k={k}");
        let rev: Vec<_> = w.letters().collect::<Vec<_>>().into_iter().rev().collect();
        let rev = GroupWord::from_letters(GroupTag::UB, 3, &rev).unwrap();
        assert!(rep_auto(AutRep::PhiTilde(k), 3, &rev).unwrap().is_identity(), "k={k}");
    }
    assert!(!rep_auto(AutRep::Phi(1), 3, &parse_word("t1", GroupTag::T, 3).unwrap()).unwrap().is_identity());
}

#[test]
fn artin_images_are_conjugating() {
    let w = parse_word("s1 s2^-1 s3 s1^2 s2", GroupTag::B, 4).unwrap();
    let (p, _) = rep_auto(AutRep::Artin, 4, &w).unwrap().conjugating_data().unwrap();
    assert_eq!(p.degree(), 4);
}

fn ub_word(n: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0..2usize, 1..n, prop_oneof![Just(-1i64), Just(1i64)]), 0..7).prop_map(move |v| {
        let letters: Vec<(GenSym, i64)> =
            v.into_iter().map(|(f, i, e)| (if f == 0 { GenSym::sigma(i) } else { GenSym::tau(i) }, e)).collect();
        GroupWord::from_letters(GroupTag::UB, n, &letters).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rep_is_multiplicative(u in ub_word(4), v in ub_word(4)) {
        for rep in [AutRep::PsiTilde(1, 2), AutRep::PsiBig(1, -1), AutRep::PhiTilde(2)] {
            let uv = u.concat(&v).unwrap();
            let lhs = rep_auto(rep, 4, &uv).unwrap();
            let rhs = rep_auto(rep, 4, &u).unwrap().then(&rep_auto(rep, 4, &v).unwrap()).unwrap();
            prop_assert!(lhs.certify().is_ok());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn killing_y_recovers_psi_tilde(w in ub_word(4), k in -2i64..=2, l in -2i64..=2) {
        let big = rep_auto(AutRep::PsiBig(k, l), 4, &w).unwrap();
        let small = rep_auto(AutRep::PsiTilde(k, l), 4, &w).unwrap();
        let target = FreeBasis::standard(4);
        let killed = big.killed_images(&[false, false, false, false, true], &target).unwrap();
        prop_assert_eq!(killed.as_slice(), small.images());
    }

    #[test]
    fn kernel_check_agrees_with_full_image(w in ub_word(3)) {
        let full = rep_auto(AutRep::PsiTilde(1, 1), 3, &w).unwrap().is_identity();
        prop_assert_eq!(in_kernel(AutRep::PsiTilde(1, 1), 3, &w).unwrap(), full);
        let trivial = w.concat(&w.inverse()).unwrap();
        prop_assert!(in_kernel(AutRep::PsiTilde(1, 1), 3, &trivial).unwrap());
    }
}
