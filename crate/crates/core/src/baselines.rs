//! Membership-degree-based entropies, the like-distance `d_SU` and the
//! distance-based entropy `E_D` used as comparison baselines.

use serde::{Deserialize, Serialize};

use crate::phfe::{MembershipPair, Phfe};

/// Strictly decreasing `ζ` with `ζ(0) = 1` and `ζ(1/2) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaFunction {
    /// `1 - 2t`, clamped to `[0, 1]`.
    #[default]
    Linear,
}

impl ZetaFunction {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            ZetaFunction::Linear => (1.0 - 2.0 * t).clamp(0.0, 1.0),
        }
    }
}

fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `E_P1`: Shannon-type entropy weighted by probabilities, `0 ln 0 = 0`.
pub fn su_entropy_p1(a: &Phfe) -> f64 {
    let sum: f64 = a
        .pairs()
        .iter()
        .map(|&MembershipPair { value, prob }| (xlnx(value) + xlnx(1.0 - value)) * prob)
        .sum();
    -sum / std::f64::consts::LN_2
}

/// `E_P2`: exponential-type entropy weighted by probabilities.
pub fn su_entropy_p2(a: &Phfe) -> f64 {
    let sum: f64 = a
        .pairs()
        .iter()
        .map(|&MembershipPair { value, prob }| {
            (value * (1.0 - value).exp() + (1.0 - value) * value.exp() - 1.0) * prob
        })
        .sum();
    sum / (0.5f64.exp() - 1.0)
}

/// `d_SU`: absolute difference of the two expectations.
pub fn su_like_distance(a: &Phfe, b: &Phfe) -> f64 {
    (a.expectation() - b.expectation()).abs()
}

/// `E_D = ζ(d_SU(a, {1/2|1}))`.
pub fn su_entropy_d(a: &Phfe, z: ZetaFunction) -> f64 {
    z.eval((a.expectation() - 0.5).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phfe(raw: &[(f64, f64)]) -> Phfe {
        Phfe::new(raw.iter().copied()).unwrap()
    }

    #[test]
    fn p1_examples() {
        assert!((su_entropy_p1(&phfe(&[(0.7, 0.2), (0.9, 0.8)])) - 0.551).abs() < 1e-3);
        assert!((su_entropy_p1(&Phfe::singleton(0.5).unwrap()) - 1.0).abs() < 1e-15);
        // documented failure: a maximally non-specific element scores 0
        assert_eq!(su_entropy_p1(&phfe(&[(0.0, 0.5), (1.0, 0.5)])), 0.0);
    }

    #[test]
    fn p2_examples() {
        assert!((su_entropy_p2(&phfe(&[(0.7, 0.2), (0.9, 0.8)])) - 0.466).abs() < 1e-3);
        assert!((su_entropy_p2(&phfe(&[(0.6, 0.9), (0.9, 0.1)])) - 0.903).abs() < 1e-3);
        assert!((su_entropy_p2(&Phfe::singleton(0.5).unwrap()) - 1.0).abs() < 1e-14);
        assert!(su_entropy_p2(&phfe(&[(0.0, 0.5), (1.0, 0.5)])).abs() < 1e-15);
    }

    #[test]
    fn like_distance_examples() {
        let a = phfe(&[(0.4, 0.5), (0.6, 0.5)]);
        let b = phfe(&[(0.2, 0.5), (0.8, 0.5)]);
        assert_eq!(su_like_distance(&a, &a), 0.0);
        assert!(su_like_distance(&a, &b).abs() < 1e-15);
        assert_eq!(su_like_distance(&Phfe::full_set(), &Phfe::empty_set()), 1.0);
    }

    #[test]
    fn like_distance_reduces_to_mean_difference_for_uniform_probabilities() {
        let a = phfe(&[(0.1, 0.25), (0.3, 0.25), (0.6, 0.25), (0.9, 0.25)]);
        let b = phfe(&[(0.2, 0.5), (0.7, 0.5)]);
        let mean_a: f64 = (0.1 + 0.3 + 0.6 + 0.9) / 4.0;
        let mean_b = (0.2 + 0.7) / 2.0;
        assert!((su_like_distance(&a, &b) - (mean_a - mean_b).abs()).abs() < 1e-15);
        assert_eq!(su_like_distance(&a, &b), su_like_distance(&b, &a));
    }

    #[test]
    fn entropy_d_examples() {
        let z = ZetaFunction::Linear;
        assert_eq!(su_entropy_d(&Phfe::singleton(0.5).unwrap(), z), 1.0);
        assert_eq!(su_entropy_d(&Phfe::full_set(), z), 0.0);
        assert_eq!(su_entropy_d(&phfe(&[(0.4, 0.5), (0.6, 0.5)]), z), 1.0);
        assert_eq!(su_entropy_d(&phfe(&[(0.2, 0.5), (0.8, 0.5)]), z), 1.0);
    }

    #[test]
    fn zeta_contract() {
        let z = ZetaFunction::Linear;
        assert_eq!(z.eval(0.0), 1.0);
        assert_eq!(z.eval(0.5), 0.0);
        assert_eq!(z.eval(0.9), 0.0);
        assert!(z.eval(0.1) > z.eval(0.2));
    }

    #[test]
    fn baselines_are_complement_symmetric() {
        let a = phfe(&[(0.15, 0.3), (0.55, 0.3), (0.8, 0.4)]);
        let c = a.complement();
        assert!((su_entropy_p1(&a) - su_entropy_p1(&c)).abs() < 1e-12);
        assert!((su_entropy_p2(&a) - su_entropy_p2(&c)).abs() < 1e-12);
        let z = ZetaFunction::Linear;
        assert!((su_entropy_d(&a, z) - su_entropy_d(&c, z)).abs() < 1e-12);
    }
}
