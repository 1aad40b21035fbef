//! Commutative-ring axioms checked by property testing over every catalogue
//! member, plus the unit/involution contracts that the rest of the workspace
//! leans on.

use proptest::prelude::*;
use ring_core::{sample_scalar, seeded_rng, RingDescriptor, Scalar};

const RING_NAMES: &[&str] = &["Q", "Qi", "Zmod:5", "Zmod:7", "dual:Q", "dual:Qi", "dual:dual:Q"];

fn scalar_triple(name: &str, seed: u64) -> (Scalar, Scalar, Scalar) {
    let desc = RingDescriptor::parse(name).unwrap();
    let mut rng = seeded_rng(seed);
    (
        sample_scalar(&desc, &mut rng),
        sample_scalar(&desc, &mut rng),
        sample_scalar(&desc, &mut rng),
    )
}

proptest! {
    #[test]
    fn ring_axioms_hold(name in proptest::sample::select(RING_NAMES.to_vec()), seed in any::<u64>()) {
        let (a, b, c) = scalar_triple(name, seed);
        let desc = a.descriptor().clone();
        let zero = Scalar::zero(&desc);
        let one = Scalar::one(&desc);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a + &a.neg(), zero.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn units_invert_exactly(name in proptest::sample::select(RING_NAMES.to_vec()), seed in any::<u64>()) {
        let desc = RingDescriptor::parse(name).unwrap();
        let mut rng = seeded_rng(seed);
        let u = ring_core::sample_unit(&desc, &mut rng);
        let inv = u.invert().unwrap();
        prop_assert!((&u * &inv).is_one());
        prop_assert!((&inv * &u).is_one());
    }

    #[test]
    fn conjugation_is_an_automorphism(seed in any::<u64>()) {
        for name in ["Qi", "dual:Qi"] {
            let (a, b, _) = scalar_triple(name, seed);
            prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        }
    }

    #[test]
    fn dual_parts_embed_round_trip(seed in any::<u64>()) {
        for name in ["dual:Q", "dual:Qi", "dual:dual:Q"] {
            let desc = RingDescriptor::parse(name).unwrap();
            let mut rng = seeded_rng(seed);
            let s = sample_scalar(&desc, &mut rng);
            let (base, eps) = s.parts().unwrap();
            let rebuilt = &base.embed_dual()
                + &(&eps.embed_dual() * &Scalar::eps(&desc).unwrap());
            prop_assert_eq!(rebuilt, s);
        }
    }
}

#[test]
fn nonunits_refuse_inversion() {
    let dq = RingDescriptor::parse("dual:Q").unwrap();
    let eps = Scalar::eps(&dq).unwrap();
    assert!(eps.invert().is_err());
    let z7 = RingDescriptor::parse("Zmod:7").unwrap();
    assert!(Scalar::zero(&z7).invert().is_err());
}
