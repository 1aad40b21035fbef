//! Full sweep over small rectangular shapes: every axiom of the graded
//! algebra, checked on every basis pair and triple.

use jordan_core::TripleSystem;
use ring_core::RingDescriptor;
use tkk_lie::{
    check_antisymmetry, check_grading, check_jacobi, check_triple_recovery, GradedLie,
};

#[test]
fn every_small_shape_builds_a_lie_algebra() {
    let q = RingDescriptor::rational();
    for p in 1..=3usize {
        for m in 1..=3usize {
            let sys = TripleSystem::parse(&format!("rect:{p}x{m}"), &q).unwrap();
            let lie = GradedLie::new(sys).unwrap();
            let (dp, dz, dm) = lie.dims();
            assert_eq!(dp, p * m, "plus dim for {p}x{m}");
            assert_eq!(dm, p * m, "minus dim for {p}x{m}");
            assert_eq!(dz, p * p + m * m - 1, "zero dim for {p}x{m}");
            assert_eq!(lie.dim(), (p + m) * (p + m) - 1, "total dim for {p}x{m}");
            assert!(check_antisymmetry(&lie).is_pass(), "{p}x{m} antisymmetry");
            assert!(check_grading(&lie).is_pass(), "{p}x{m} grading");
            assert!(check_jacobi(&lie).is_pass(), "{p}x{m} jacobi");
            assert!(check_triple_recovery(&lie).is_pass(), "{p}x{m} recovery");
        }
    }
}
