use once_cell::sync::Lazy;
use proptest::prelude::*;

use lltlab::cumulants::{llt_cumulant, moments_from_cumulants, set_partitions, Normalization, SubsetFamily};
use lltlab::corpus::{colored_tuples, skew_tuples};
use lltlab::llt::{llt, llt_min_shifted};
use lltlab::ring::QTPoly;
use lltlab::shapes::{partitions, ribbon_tuples_for, ColoredTuple};
use lltlab::symfunc::{hook_coefficients, SymExpansion};

static TUPLES: Lazy<Vec<ColoredTuple>> = Lazy::new(|| colored_tuples(&skew_tuples(5, 3), 3));

fn poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec((-4i64..=4, -3i32..=3, 0u32..=2), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, qe, te)| QTPoly::monomial(c, qe, te))
            .sum()
    })
}

fn nonzero_poly() -> impl Strategy<Value = QTPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn tuple() -> impl Strategy<Value = ColoredTuple> {
    (0..TUPLES.len()).prop_map(|i| TUPLES[i].clone())
}

fn schur_expansion() -> impl Strategy<Value = SymExpansion> {
    (1usize..=6)
        .prop_flat_map(|n| {
            let lams = partitions(n);
            let k = lams.len();
            (Just(n), Just(lams), prop::collection::vec(poly(), k))
        })
        .prop_map(|(n, lams, cs)| {
            let mut out = SymExpansion::zero(lltlab::symfunc::SBasis::Schur, n);
            for (lam, c) in lams.into_iter().zip(cs) {
                out.add_term(lam, &c);
            }
            out
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_divide_inverts_product(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn shift_by_one_is_a_homomorphism(a in poly(), b in poly()) {
        let s = QTPoly::q() + QTPoly::one();
        let sub = |p: &QTPoly| p.substitute_q(&s);
        if let (Ok(sa), Ok(sb), Ok(sab), Ok(sapb)) = (sub(&a), sub(&b), sub(&(&a * &b)), sub(&(&a + &b))) {
            prop_assert_eq!(sab, &sa * &sb);
            prop_assert_eq!(sapb, &sa + &sb);
        }
    }

    #[test]
    fn attack_is_a_strict_relation(t in tuple()) {
        let cells = t.cells();
        for a in &cells {
            prop_assert!(!t.attacks(a, a));
            for b in &cells {
                prop_assert!(!(t.attacks(a, b) && t.attacks(b, a)));
                if a != b && a.content() == b.content() && a.shape != b.shape {
                    prop_assert_ne!(t.shifted_content(a), t.shifted_content(b));
                }
            }
        }
    }

    #[test]
    fn llt_is_symmetric_and_min_shift_is_a_shift(t in tuple()) {
        let f = llt(&t);
        prop_assert!(f.to_schur().is_ok());
        let shifted = llt_min_shifted(&t);
        prop_assert_eq!(shifted.min_q_exp(), Some(0));
        prop_assert_eq!(shifted.shift_q(f.min_q_exp().unwrap()), f);
    }

    #[test]
    fn hooks_match_schur_rows(t in tuple()) {
        let f = llt(&t);
        prop_assert_eq!(hook_coefficients(&f), f.to_schur().unwrap().hook_rows());
    }

    #[test]
    fn schur_round_trip(s in schur_expansion()) {
        prop_assert_eq!(s.to_monomialq().to_schur().unwrap(), s.clone());
        prop_assert_eq!(s.to_elementary().to_schur(), s);
    }

    #[test]
    fn cumulants_invert_to_moments(t in tuple()) {
        let family = lltlab::cumulants::llt_family(&t, Normalization::Plain).unwrap();
        let ground = family.ground().to_vec();
        let kappas = SubsetFamily::from_mask_fn(ground, |m| family.cumulant_mask(m)).unwrap();
        let back = moments_from_cumulants(&kappas);
        prop_assert_eq!(back.get_mask(family.full_mask()), family.get_mask(family.full_mask()));
        prop_assert_eq!(kappas.get_mask(family.full_mask()), &llt_cumulant(&t, Normalization::Plain).unwrap());
    }

    #[test]
    fn maj_is_additive_over_color_blocks(t in tuple()) {
        let colors: Vec<usize> = (1..=t.num_colors()).collect();
        for pi in set_partitions(&colors) {
            let total: usize = pi.blocks().iter().map(|b| t.restrict(b).unwrap().maj_stat()).sum();
            prop_assert_eq!(total, t.maj_stat());
        }
    }
}

#[test]
fn ribbon_tuple_counts() {
    for n in 1..=8 {
        for lam in partitions(n) {
            let expected: usize = lam.transpose().parts().iter().map(|&h| 1usize << (h - 1)).product();
            assert_eq!(ribbon_tuples_for(&lam).len(), expected, "{lam}");
        }
    }
}

#[test]
fn bell_numbers() {
    let bell = [1, 1, 2, 5, 15, 52, 203];
    for (n, &b) in bell.iter().enumerate().skip(1) {
        assert_eq!(set_partitions(&(1..=n).collect::<Vec<_>>()).len(), b);
    }
}
