//! Property checks: elimination invariants over every supported ring.

use linalg_exact::{
    col_canon, det, find_common_complement, invert, is_invertible, kernel, orth_complement,
    rank, sample_full_col_rank, sample_invertible, sample_matrix, subspace_equal, Form, Matrix,
};
use proptest::prelude::*;
use ring_core::{seeded_rng, RingDescriptor};

const RINGS: [&str; 5] = ["Q", "Qi", "Zmod:5", "Zmod:7", "dual:Q"];

fn ring(idx: usize) -> RingDescriptor {
    RingDescriptor::parse(RINGS[idx % RINGS.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn det_is_multiplicative(seed in any::<u64>(), ridx in 0usize..5, n in 1usize..4) {
        let desc = ring(ridx);
        let mut rng = seeded_rng(seed);
        let a = sample_matrix(&desc, n, n, &mut rng);
        let b = sample_matrix(&desc, n, n, &mut rng);
        prop_assert_eq!(det(&a.mul(&b)), det(&a).mul(&det(&b)));
    }

    #[test]
    fn inverse_round_trips(seed in any::<u64>(), ridx in 0usize..5, n in 1usize..4) {
        let desc = ring(ridx);
        let mut rng = seeded_rng(seed);
        let m = sample_invertible(&desc, n, &mut rng);
        let inv = invert(&m).unwrap();
        prop_assert_eq!(m.mul(&inv), Matrix::identity(&desc, n));
        prop_assert_eq!(inv.mul(&m), Matrix::identity(&desc, n));
        prop_assert!(det(&m).mul(&det(&inv)).is_one());
    }

    #[test]
    fn canonical_form_is_span_invariant(seed in any::<u64>(), ridx in 0usize..5, n in 2usize..5) {
        let desc = ring(ridx);
        let mut rng = seeded_rng(seed);
        let k = 1 + (seed as usize) % (n - 1);
        let m = sample_full_col_rank(&desc, n, k, &mut rng);
        let g = sample_invertible(&desc, k, &mut rng);
        let c1 = col_canon(&m).unwrap();
        let c2 = col_canon(&m.mul(&g)).unwrap();
        prop_assert_eq!(&c1.canon, &c2.canon);
        prop_assert_eq!(&m.mul(&c1.transform), &c1.canon);
        // canonicalising a canonical form changes nothing
        let c3 = col_canon(&c1.canon).unwrap();
        prop_assert_eq!(&c3.canon, &c1.canon);
    }

    #[test]
    fn kernel_matches_rank(seed in any::<u64>(), ridx in 0usize..3, r in 1usize..4, c in 1usize..5) {
        // field rings only: every matrix reduces
        let desc = ring(ridx);
        let mut rng = seeded_rng(seed);
        let m = sample_matrix(&desc, r, c, &mut rng);
        let k = kernel(&m).unwrap();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(rank(&m).unwrap() + k.cols(), c);
        prop_assert_eq!(rank(&k).unwrap(), k.cols());
    }

    #[test]
    fn orthogonal_complement_involutes(seed in any::<u64>(), ridx in 0usize..5, n in 2usize..5) {
        let desc = ring(ridx);
        let mut rng = seeded_rng(seed);
        let k = 1 + (seed as usize) % (n - 1);
        let u = sample_full_col_rank(&desc, n, k, &mut rng);
        let f = Form::dot(&desc, n);
        // the dot-product gram is the identity, always nondegenerate
        if let Ok(c) = orth_complement(&f, &u) {
            if let Ok(cc) = orth_complement(&f, &c) {
                if c.cols() + u.cols() == n {
                    prop_assert!(subspace_equal(&cc, &u).unwrap());
                }
            }
        }
    }

    #[test]
    fn common_complements_complement(seed in any::<u64>(), ridx in 0usize..5, n in 2usize..5) {
        let desc = ring(ridx);
        let mut rng = seeded_rng(seed);
        let k = 1 + (seed as usize) % (n - 1);
        let a = sample_full_col_rank(&desc, n, k, &mut rng);
        let b = sample_full_col_rank(&desc, n, k, &mut rng);
        let c = find_common_complement(&a, &b).unwrap();
        prop_assert_eq!(c.cols(), n - k);
        prop_assert!(is_invertible(&col_canon(&a).unwrap().basis().hstack(&c)));
        prop_assert!(is_invertible(&col_canon(&b).unwrap().basis().hstack(&c)));
    }
}
