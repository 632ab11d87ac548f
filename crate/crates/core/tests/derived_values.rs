//! Hand-derived values, each recomputed by the independent oracle before
//! being compared against the library.

mod common;

use phfe_core::{
    comprehensive_entropy, entropy_distance, fuzziness_entropy, hybrid, nonspecificity_entropy,
    r_kernel, EntropyConfig, FuzzinessKernel, NonSpecificityKernel, Phfe, PsiFunction,
};

const R1: FuzzinessKernel = FuzzinessKernel::R1 { r: 1.0 };

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn r1_kernel_at_a_generic_point() {
    let frozen = 0.348623;
    assert!(close(common::r1(0.7, 0.9), frozen, 1e-6));
    assert!(close(r_kernel(R1, 0.7, 0.9).unwrap(), frozen, 1e-6));
}

#[test]
fn crisp_mixture_fuzziness_is_two_twenty_sevenths() {
    let a = vec![(0.0, 0.5), (1.0, 0.5)];
    assert!(close(common::fuzziness(&a, common::r1), 2.0 / 27.0, 1e-15));
    let lib = Phfe::new(a).unwrap();
    assert!(close(fuzziness_entropy(&lib, R1), 2.0 / 27.0, 1e-15));
}

#[test]
fn narrow_spread_values() {
    let a = vec![(0.4, 0.5), (0.6, 0.5)];
    let lib = Phfe::new(a.clone()).unwrap();
    let (fz, ns) = (0.412563, 0.57735);
    assert!(close(common::fuzziness(&a, common::r1), fz, 1e-6));
    assert!(close(fuzziness_entropy(&lib, R1), fz, 1e-6));
    assert!(close(common::nonspecificity(&a, common::f1), ns, 1e-5));
    assert!(close(nonspecificity_entropy(&lib, NonSpecificityKernel::F1), ns, 1e-5));
    let cfg: EntropyConfig = "r1:f1:max".parse().unwrap();
    assert!(close(comprehensive_entropy(&lib, &cfg), ns, 1e-5));
}

#[test]
fn distance_between_crisp_extremes_is_one() {
    let cfg = EntropyConfig::default();
    for psi in PsiFunction::ALL {
        assert_eq!(entropy_distance(&Phfe::empty_set(), &Phfe::full_set(), psi, &cfg), 1.0);
    }
}

#[test]
fn hybrid_of_crisp_and_half() {
    let h = hybrid(&Phfe::full_set(), &Phfe::singleton(0.5).unwrap());
    assert_eq!(h.len(), 1);
    assert_eq!(h.elements()[0].value, 0.25);
    assert_eq!(h.elements()[0].prob, 1.0);
}
