use crystbraid_core::autreps::{in_kernel, rep_auto, AutRep};
use crystbraid_core::free::FreeWord;
use crystbraid_core::tn::{tn_is_trivial, tn_min_support, tn_normal_form};
use crystbraid_core::words::{parse_word, GenSym, GroupTag, GroupWord};
use proptest::prelude::*;

fn tword(n: usize, letters: &[(usize, i64)]) -> GroupWord {
    let l: Vec<_> = letters.iter().map(|&(i, e)| (GenSym::tau(i), e)).collect();
    GroupWord::from_letters(GroupTag::T, n, &l).unwrap()
}

// Swap adjacent commuting letters at the given positions.
fn shuffle(letters: &[(usize, i64)], swaps: &[usize]) -> Vec<(usize, i64)> {
    let mut v = letters.to_vec();
    for &s in swaps {
        if v.len() >= 2 {
            let k = s % (v.len() - 1);
            if v[k].0.abs_diff(v[k + 1].0) >= 2 {
                v.swap(k, k + 1);
            }
        }
    }
    v
}

/// Random words, half of them built as `u * (u shuffled)^-1` so that the
/// trivial case is well represented.
fn tn_case() -> impl Strategy<Value = (usize, GroupWord)> {
    (3usize..=5).prop_flat_map(|n| {
        let letter = (1..n, prop_oneof![Just(-1i64), Just(1)]);
        (
            Just(n),
            prop::collection::vec(letter, 0..=15),
            prop::collection::vec(0usize..64, 0..40),
            any::<bool>(),
            prop::collection::vec((1..n, prop_oneof![Just(-1i64), Just(1)]), 0..=2),
        )
            .prop_map(|(n, u, swaps, paired, noise)| {
                if paired {
                    let mut all = u.clone();
                    let other = shuffle(&u, &swaps);
                    all.extend(other.iter().rev().map(|&(i, e)| (i, -e)));
                    if all.len() + noise.len() <= 30 && !noise.is_empty() && swaps.len() % 3 == 0 {
                        let mid = all.len() / 2;
                        all.splice(mid..mid, noise);
                    }
                    (n, tword(n, &all))
                } else {
                    (n, tword(n, &u.into_iter().chain(noise).collect::<Vec<_>>()))
                }
            })
    })
}

#[test]
fn spec_examples() {
    let w = parse_word("t1 t2 t3 t2^-1 t1^-1 t2 t3^-1 t2^-1", GroupTag::T, 4).unwrap();
    assert!(!tn_is_trivial(&w).unwrap());
    assert_eq!(tn_min_support(&w).unwrap(), Some(1));
    assert!(rep_auto(AutRep::Xi, 4, &w).unwrap().is_identity());
    assert!(!rep_auto(AutRep::Phi(1), 4, &w).unwrap().is_identity());
    assert!(tn_normal_form(&w).unwrap().len() > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn faithful_oracles_agree((n, w) in tn_case()) {
        let trivial = tn_is_trivial(&w).unwrap();
        for rep in [AutRep::Phi(1), AutRep::Phi(2), AutRep::Psi(1, 1), AutRep::Psi(2, 2)] {
            prop_assert_eq!(in_kernel(rep, n, &w).unwrap(), trivial, "{} {}", rep, w);
        }
        if n == 3 {
            prop_assert_eq!(in_kernel(AutRep::Xi, 3, &w).unwrap(), trivial);
        }
    }

    #[test]
    fn normal_form_laws((n, u) in tn_case(), (m, v) in tn_case()) {
        let nf = tn_normal_form(&u).unwrap();
        prop_assert_eq!(&tn_normal_form(&nf).unwrap(), &nf);
        prop_assert_eq!(tn_is_trivial(&u.concat(&nf.inverse()).unwrap()).unwrap(), true);
        let idx: Vec<usize> = nf.syllables().iter().map(|s| s.generator.index).collect();
        for p in idx.windows(2) {
            prop_assert!(p[0] < p[1] || p[0] == p[1] + 1);
        }
        if n == m {
            let lhs = tn_normal_form(&u.concat(&v).unwrap()).unwrap();
            let rhs = tn_normal_form(&nf.concat(&tn_normal_form(&v).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn minimal_support_generator_moves((n, w) in tn_case()) {
        if let Some(s) = tn_min_support(&w).unwrap() {
            for k in [1, 2] {
                let a = rep_auto(AutRep::Phi(k), n, &w).unwrap();
                let x = FreeWord::generator(a.basis(), s - 1);
                prop_assert_ne!(a.apply(&x), x);
            }
        }
    }
}
