//! Randomized identity suite for the GF(2) logic.

use cliffor::binor::{
    binor_inf, binor_sum, binor_sup, binor_xand, binor_xor, complement_top, iota_unit, top, Binor,
};
use cliffor::ring::Gf2;
use cliffor::{Blade, Signature};
use proptest::prelude::*;

fn arb_binor(k: u32) -> impl Strategy<Value = (Signature, Binor)> {
    let sig = Signature::euclidean(k).unwrap();
    prop::collection::vec(0..sig.blade_count() as u32, 0..=8).prop_map(move |blades| {
        let binor = Binor::from_terms(
            &sig,
            blades
                .into_iter()
                .map(|bits| (Blade::from_bits(bits), Gf2::ONE)),
        )
        .unwrap();
        (sig.clone(), binor)
    })
}

proptest! {
    #[test]
    fn generators_are_uniquadratic((sig, _) in arb_binor(8), i in 0u32..8) {
        let g = iota_unit(&sig, i).unwrap();
        prop_assert_eq!(binor_xor(&g, &g), Binor::one(&sig));
    }

    #[test]
    fn sum_group_laws((sig, a) in arb_binor(8)) {
        prop_assert!(binor_sum(&a, &a).is_zero());
        prop_assert_eq!(binor_sum(&Binor::zero(&sig), &a), a);
    }

    #[test]
    fn xand_is_top_times_xor((_, a) in arb_binor(6), (_, b) in arb_binor(6)) {
        prop_assert_eq!(
            binor_xand(&a, &b),
            complement_top(&binor_xor(&a, &b))
        );
    }

    #[test]
    fn complement_involutive((_, a) in arb_binor(8)) {
        prop_assert_eq!(complement_top(&complement_top(&a)), a);
    }

    #[test]
    fn monomials_form_a_group_under_xor(bits_a in 0u32..64, bits_b in 0u32..64) {
        let sig = Signature::euclidean(6).unwrap();
        let a = Binor::from_blade(&sig, Blade::from_bits(bits_a), Gf2::ONE);
        let b = Binor::from_blade(&sig, Blade::from_bits(bits_b), Gf2::ONE);
        let product = binor_xor(&a, &b);
        // closure: the product is again a monomial
        prop_assert_eq!(product.term_count(), 1);
        // identity and inverse: every monomial is its own inverse
        prop_assert_eq!(binor_xor(&a, &a), Binor::one(&sig));
        prop_assert_eq!(binor_xor(&Binor::one(&sig), &a), a.clone());
        // commutativity (the GF(2) collapse of anticommutation)
        prop_assert_eq!(binor_xor(&a, &b), binor_xor(&b, &a));
    }

    #[test]
    fn complement_commutes_with_sup_and_inf(bits_a in 0u32..64, bits_b in 0u32..64) {
        // termwise De Morgan on supports: top-multiplication is a bijection
        // of monomials, so it maps sup/inf patterns onto sup/inf patterns
        let sig = Signature::euclidean(6).unwrap();
        let a = Binor::from_blade(&sig, Blade::from_bits(bits_a), Gf2::ONE);
        let b = Binor::from_blade(&sig, Blade::from_bits(bits_b), Gf2::ONE);
        prop_assert_eq!(
            complement_top(&binor_sup(&a, &b)),
            binor_sup(&complement_top(&a), &complement_top(&b))
        );
        prop_assert_eq!(
            complement_top(&binor_inf(&a, &b)),
            binor_inf(&complement_top(&a), &complement_top(&b))
        );
        // on the underlying sets, the complement monomial carries the
        // complement index set
        let ta = complement_top(&a);
        let blade = ta.support().next().unwrap();
        prop_assert_eq!(blade.bits(), !bits_a & sig.full_mask());
    }

    #[test]
    fn sup_inf_absorption((_, a) in arb_binor(6), (_, b) in arb_binor(6)) {
        prop_assert_eq!(binor_sup(&a, &binor_inf(&a, &b)), a.clone());
        prop_assert_eq!(binor_inf(&a, &binor_sup(&a, &b)), a);
    }
}

#[test]
fn top_of_empty_signature_is_one() {
    let sig = Signature::empty();
    assert_eq!(top(&sig), Binor::one(&sig));
}
