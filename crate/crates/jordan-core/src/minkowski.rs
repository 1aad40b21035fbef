//! The rank-two Hermitian algebra is a four-dimensional spin factor in
//! disguise: `{I, s1, s2, s3}` (the identity and the three standard
//! trace-free Hermitian involutions) maps onto the spin basis for the
//! signature (+,-,-,-), and the commutative products agree.

use linalg_exact::Matrix;
use rand::Rng;
use ring_core::{sample_scalar, CheckOutcome, RingDescriptor, Scalar};

use crate::family::{render, TripleSystem};

fn sigma_basis(qi: &RingDescriptor) -> Vec<Matrix> {
    let i = Scalar::i(qi).expect("gaussian ring");
    let one = Scalar::one(qi);
    let zero = Scalar::zero(qi);
    vec![
        Matrix::identity(qi, 2),
        Matrix::from_rows(qi, vec![vec![zero.clone(), one.clone()], vec![one.clone(), zero.clone()]]),
        Matrix::from_rows(qi, vec![vec![zero.clone(), i.neg()], vec![i.clone(), zero.clone()]]),
        Matrix::from_rows(qi, vec![vec![one.clone(), zero.clone()], vec![zero, one.neg()]]),
    ]
}

/// Coordinates of a Hermitian 2x2 matrix in the sigma basis, as a rational
/// column vector.
fn sigma_coords(qi: &RingDescriptor, m: &Matrix) -> Matrix {
    let half = Scalar::half(qi);
    let t = m.get(0, 0).add(m.get(1, 1)).mul(&half);
    let z = m.get(0, 0).sub(m.get(1, 1)).mul(&half);
    let x = m.get(0, 1).add(m.get(1, 0)).mul(&half);
    let i = Scalar::i(qi).expect("gaussian ring");
    let y = i.mul(&m.get(0, 1).sub(m.get(1, 0))).mul(&half);
    let rational = |s: &Scalar| -> Scalar {
        let (re, im) = s.gauss_parts().expect("gaussian entries");
        assert!(im.is_zero(), "sigma coordinates of a hermitian matrix are real");
        re
    };
    let q = RingDescriptor::rational();
    Matrix::from_rows(
        &q,
        vec![vec![rational(&t)], vec![rational(&x)], vec![rational(&y)], vec![rational(&z)]],
    )
}

/// Verify the basis-product tables of the two models agree: all ten
/// unordered basis pairs, then sampled rational combinations.
pub fn check_herm_spin<R: Rng>(samples: usize, rng: &mut R) -> CheckOutcome {
    let qi = RingDescriptor::gaussian_rational();
    let herm = TripleSystem::parse("herm:2", &qi).expect("herm:2 over the gaussian rationals");
    let rational = RingDescriptor::rational();
    let spin = TripleSystem::parse("spin:4", &rational).expect("spin:4 over the rationals");
    let sigmas = sigma_basis(&qi);
    let es = spin.plus_basis();

    let mut out = CheckOutcome::new();
    for a in 0..4 {
        for b in a..4 {
            let herm_side = sigma_coords(&qi, &herm.bullet(&sigmas[a], &sigmas[b]).unwrap());
            let spin_side = spin.bullet(&es[a], &es[b]).unwrap();
            out.record(herm_side == spin_side, || {
                format!(
                    "basis product mismatch at pair ({a}, {b}): hermitian side {}, spin side {}",
                    render(&herm_side),
                    render(&spin_side)
                )
            });
        }
    }

    for _ in 0..samples {
        let coeffs = |rng: &mut R| -> Vec<Scalar> {
            (0..4).map(|_| sample_scalar(&rational, rng)).collect()
        };
        let (ca, cb) = (coeffs(rng), coeffs(rng));
        let lift = |cs: &[Scalar]| -> Matrix {
            let mut acc = Matrix::zeros(&qi, 2, 2);
            for (c, s) in cs.iter().zip(&sigmas) {
                let g = Scalar::gauss_from_parts(&qi, c, &Scalar::zero(&rational)).unwrap();
                acc = acc.add(&s.scale(&g));
            }
            acc
        };
        let (ha, hb) = (lift(&ca), lift(&cb));
        let sa = spin.plus_from_coords(&ca);
        let sb = spin.plus_from_coords(&cb);
        let herm_side = sigma_coords(&qi, &herm.bullet(&ha, &hb).unwrap());
        let spin_side = spin.bullet(&sa, &sb).unwrap();
        out.record(herm_side == spin_side, || {
            format!(
                "sampled product mismatch: hermitian side {}, spin side {}",
                render(&herm_side),
                render(&spin_side)
            )
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::seeded_rng;

    #[test]
    fn ten_pair_table_and_samples_agree() {
        let mut rng = seeded_rng(41);
        let out = check_herm_spin(50, &mut rng);
        assert!(out.is_pass());
        assert_eq!(out.samples(), 60);
    }

    #[test]
    fn sigma_matrices_square_to_the_identity() {
        let qi = RingDescriptor::gaussian_rational();
        let herm = TripleSystem::parse("herm:2", &qi).unwrap();
        let sigmas = sigma_basis(&qi);
        for s in &sigmas[1..] {
            assert!(herm.is_plus_member(s));
            assert_eq!(herm.bullet(s, s).unwrap(), sigmas[0]);
        }
    }

    #[test]
    fn sigma_coords_invert_the_basis() {
        let qi = RingDescriptor::gaussian_rational();
        let q = RingDescriptor::rational();
        let sigmas = sigma_basis(&qi);
        for (k, s) in sigmas.iter().enumerate() {
            let c = sigma_coords(&qi, s);
            let mut expect = Matrix::zeros(&q, 4, 1);
            expect.set(k, 0, Scalar::one(&q));
            assert_eq!(c, expect);
        }
    }
}
