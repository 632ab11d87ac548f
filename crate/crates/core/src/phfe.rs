//! Probabilistic hesitant fuzzy elements.
//!
//! A [`Phfe`] is a finite list of membership degrees, each carrying the
//! probability with which it occurs. Values are constructed only through
//! [`canonicalize`] (or the constructors built on it), so every `Phfe` holds
//! a non-empty list of strictly increasing values with positive
//! probabilities summing to one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest allowed deviation of the probability mass from 1.
pub const PROB_SUM_TOLERANCE: f64 = 1e-9;

/// Absolute tolerance under which two probabilities select the "equal"
/// branch of [`pi`].
pub const PI_EQ_TOLERANCE: f64 = 1e-12;

/// One membership degree with its occurrence probability.
///
/// Inside a [`Phfe`] the probability is strictly positive. The same shape
/// is reused for hybrid elements, where `prob` holds a Π weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipPair {
    pub value: f64,
    pub prob: f64,
}

impl MembershipPair {
    pub fn new(value: f64, prob: f64) -> Self {
        MembershipPair { value, prob }
    }
}

/// A canonical probabilistic hesitant fuzzy element.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Phfe {
    pairs: Vec<MembershipPair>,
}

impl Phfe {
    /// Canonicalizes `raw` pairs of (value, probability).
    pub fn new<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        canonicalize(raw)
    }

    /// `{value|1}`.
    pub fn singleton(value: f64) -> Result<Self> {
        canonicalize([(value, 1.0)])
    }

    /// Lowest membership `{0|1}`.
    pub fn empty_set() -> Self {
        Phfe {
            pairs: vec![MembershipPair::new(0.0, 1.0)],
        }
    }

    /// Full membership `{1|1}`.
    pub fn full_set() -> Self {
        Phfe {
            pairs: vec![MembershipPair::new(1.0, 1.0)],
        }
    }

    pub fn pairs(&self) -> &[MembershipPair] {
        &self.pairs
    }

    /// Number of distinct membership values.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.pairs.len() == 1
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.pairs.iter().map(|p| p.value)
    }

    pub fn probs(&self) -> impl Iterator<Item = f64> + '_ {
        self.pairs.iter().map(|p| p.prob)
    }

    /// Σ value·prob.
    pub fn expectation(&self) -> f64 {
        self.pairs.iter().map(|p| p.value * p.prob).sum()
    }

    /// Pairs `(1 - value, prob)`, re-canonicalized.
    pub fn complement(&self) -> Phfe {
        let flipped = self
            .pairs
            .iter()
            .rev()
            .map(|p| MembershipPair::new(1.0 - p.value, p.prob))
            .collect();
        Phfe {
            pairs: merge_sorted(flipped),
        }
    }
}

impl fmt::Display for Phfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}|{}", p.value, p.prob)?;
        }
        f.write_str("}")
    }
}

/// Builds the canonical form of a raw pair list.
///
/// Zero-probability pairs are dropped, equal values are merged by summing
/// their probabilities and the result is sorted ascending by value.
pub fn canonicalize<I>(raw: I) -> Result<Phfe>
where
    I: IntoIterator<Item = (f64, f64)>,
{
    let raw: Vec<(f64, f64)> = raw.into_iter().collect();
    if raw.is_empty() {
        return Err(Error::EmptyInput("no membership pairs"));
    }
    for &(value, prob) in &raw {
        check_unit("membership value", value)?;
        check_unit("probability", prob)?;
    }
    let sum: f64 = raw.iter().map(|&(_, p)| p).sum();
    if (sum - 1.0).abs() > PROB_SUM_TOLERANCE {
        return Err(Error::ProbabilitySum {
            sum,
            tolerance: PROB_SUM_TOLERANCE,
        });
    }

    let mut pairs: Vec<MembershipPair> = raw
        .into_iter()
        .filter(|&(_, p)| p > 0.0)
        .map(|(v, p)| MembershipPair::new(v, p))
        .collect();
    if pairs.is_empty() {
        return Err(Error::EmptyInput("every probability is zero"));
    }
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(Phfe {
        pairs: merge_sorted(pairs),
    })
}

fn merge_sorted(sorted: Vec<MembershipPair>) -> Vec<MembershipPair> {
    let mut out: Vec<MembershipPair> = Vec::with_capacity(sorted.len());
    for pair in sorted {
        match out.last_mut() {
            Some(last) if last.value == pair.value => last.prob += pair.prob,
            _ => out.push(pair),
        }
    }
    out
}

fn check_unit(what: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: x,
            range: "[0, 1]",
        })
    }
}

/// The Π operator: `|a - b|` for different probabilities, their mean for
/// equal ones.
pub fn pi(a: f64, b: f64) -> Result<f64> {
    for x in [a, b] {
        if !(x > 0.0 && x <= 1.0) {
            return Err(Error::OutOfRange {
                what: "probability",
                value: x,
                range: "(0, 1]",
            });
        }
    }
    Ok(pi_unchecked(a, b))
}

#[inline]
pub(crate) fn pi_unchecked(a: f64, b: f64) -> f64 {
    let diff = (a - b).abs();
    if diff <= PI_EQ_TOLERANCE {
        (a + b) / 2.0
    } else {
        diff
    }
}

/// A linguistic term set `s_0 ..= s_{2τ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinguisticScale {
    tau: u32,
}

impl LinguisticScale {
    pub fn new(tau: u32) -> Result<Self> {
        if tau == 0 {
            return Err(Error::InvalidScale);
        }
        Ok(LinguisticScale { tau })
    }

    pub fn tau(&self) -> u32 {
        self.tau
    }

    /// Index of the top term, `2τ`.
    pub fn max_term(&self) -> u32 {
        2 * self.tau
    }

    /// `t / 2τ`, rounded once from the exact fraction.
    pub fn membership(&self, term: i64) -> Result<f64> {
        if term < 0 || term > i64::from(self.max_term()) {
            return Err(Error::TermOutOfRange {
                term,
                max: self.max_term(),
            });
        }
        Ok(term as f64 / f64::from(self.max_term()))
    }
}

/// Converts probabilistic linguistic terms `(t, prob)` into a PHFE.
pub fn from_linguistic(terms: &[(i64, f64)], scale: LinguisticScale) -> Result<Phfe> {
    let pairs = terms
        .iter()
        .map(|&(t, p)| scale.membership(t).map(|v| (v, p)))
        .collect::<Result<Vec<_>>>()?;
    canonicalize(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(p: &Phfe) -> Vec<(f64, f64)> {
        p.pairs().iter().map(|m| (m.value, m.prob)).collect()
    }

    #[test]
    fn drops_zero_probability_and_sorts() {
        let p = canonicalize([(0.66, 0.6), (0.5, 0.0), (0.5, 0.4)]).unwrap();
        assert_eq!(raw(&p), vec![(0.5, 0.4), (0.66, 0.6)]);
    }

    #[test]
    fn singleton_is_fixed_point() {
        let p = canonicalize([(0.3, 1.0)]).unwrap();
        assert_eq!(raw(&p), vec![(0.3, 1.0)]);
        assert!(p.is_singleton());
    }

    #[test]
    fn merges_duplicate_values() {
        let p = canonicalize([(0.7, 0.5), (0.7, 0.5)]).unwrap();
        assert_eq!(raw(&p), vec![(0.7, 1.0)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            canonicalize(Vec::<(f64, f64)>::new()),
            Err(Error::EmptyInput(_))
        ));
        assert!(matches!(
            canonicalize([(1.2, 1.0)]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            canonicalize([(0.2, -0.1), (0.3, 1.1)]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            canonicalize([(f64::NAN, 1.0)]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            canonicalize([(0.2, 0.5), (0.3, 0.4)]),
            Err(Error::ProbabilitySum { .. })
        ));
        // 0.33 * 3 is off by 1e-2
        assert!(matches!(
            canonicalize([(0.5, 0.33), (0.66, 0.33), (0.83, 0.33)]),
            Err(Error::ProbabilitySum { .. })
        ));
    }

    #[test]
    fn accepts_decimal_rounding_noise() {
        let p = canonicalize([(0.1, 0.1), (0.2, 0.2), (0.3, 0.7 + 1e-12)]).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn complement_examples() {
        let a = canonicalize([(0.3, 0.4), (0.8, 0.6)]).unwrap();
        let c = a.complement();
        let got = raw(&c);
        assert_eq!(got.len(), 2);
        assert!((got[0].0 - 0.2).abs() < 1e-15 && got[0].1 == 0.6);
        assert!((got[1].0 - 0.7).abs() < 1e-15 && got[1].1 == 0.4);

        let mid = Phfe::singleton(0.5).unwrap();
        assert_eq!(mid.complement(), mid);
    }

    #[test]
    fn pi_branches() {
        assert!((pi(0.2, 0.8).unwrap() - 0.6).abs() < 1e-15);
        assert_eq!(pi(0.5, 0.5).unwrap(), 0.5);
        assert_eq!(pi(1.0, 1.0).unwrap(), 1.0);
        // inside the equality tolerance the mean is used
        assert!((pi(0.3, 0.3 + 1e-13).unwrap() - 0.3).abs() < 1e-12);
        assert!(matches!(pi(0.0, 0.5), Err(Error::OutOfRange { .. })));
        assert!(matches!(pi(0.5, 1.5), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn linguistic_examples() {
        let s = LinguisticScale::new(3).unwrap();
        let p = from_linguistic(&[(4, 1.0)], s).unwrap();
        assert_eq!(raw(&p), vec![(4.0 / 6.0, 1.0)]);
        let p = from_linguistic(&[(0, 1.0)], s).unwrap();
        assert_eq!(raw(&p), vec![(0.0, 1.0)]);
        let p = from_linguistic(&[(3, 0.5), (6, 0.5)], s).unwrap();
        assert_eq!(raw(&p), vec![(0.5, 0.5), (1.0, 0.5)]);

        assert!(matches!(
            from_linguistic(&[(7, 1.0)], s),
            Err(Error::TermOutOfRange { term: 7, max: 6 })
        ));
        assert!(matches!(
            from_linguistic(&[(-1, 1.0)], s),
            Err(Error::TermOutOfRange { .. })
        ));
        assert!(matches!(LinguisticScale::new(0), Err(Error::InvalidScale)));
    }

    #[test]
    fn linguistic_is_monotone() {
        let s = LinguisticScale::new(5).unwrap();
        for t in 0..10 {
            assert!(s.membership(t).unwrap() < s.membership(t + 1).unwrap());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn raw_phfe() -> impl Strategy<Value = Vec<(f64, f64)>> {
            prop::collection::vec((0.0f64..=1.0, 0.0f64..1.0), 1..7).prop_filter_map(
                "positive mass",
                |v| {
                    let total: f64 = v.iter().map(|x| x.1).sum();
                    (total > 1e-3).then(|| v.into_iter().map(|(h, p)| (h, p / total)).collect())
                },
            )
        }

        proptest! {
            #[test]
            fn pi_is_symmetric_and_bounded(a in 1e-9f64..=1.0, b in 1e-9f64..=1.0) {
                let x = pi(a, b).unwrap();
                prop_assert_eq!(x, pi(b, a).unwrap());
                prop_assert!(x > 0.0 && x <= 1.0);
            }

            #[test]
            fn canonicalize_is_idempotent(v in raw_phfe()) {
                if let Ok(p) = canonicalize(v) {
                    let again = canonicalize(raw(&p)).unwrap();
                    prop_assert_eq!(&again, &p);
                    prop_assert!(p.pairs().windows(2).all(|w| w[0].value < w[1].value));
                    prop_assert!(p.probs().all(|q| q > 0.0));
                }
            }

            #[test]
            fn complement_is_an_involution(v in raw_phfe()) {
                if let Ok(p) = canonicalize(v) {
                    let c = p.complement();
                    prop_assert_eq!(c.len(), p.len());
                    let mut a: Vec<f64> = p.probs().collect();
                    let mut b: Vec<f64> = c.probs().collect();
                    a.sort_by(f64::total_cmp);
                    b.sort_by(f64::total_cmp);
                    prop_assert_eq!(a, b);
                    let back = c.complement();
                    for (x, y) in back.pairs().iter().zip(p.pairs()) {
                        prop_assert!((x.value - y.value).abs() <= 1e-15);
                        prop_assert_eq!(x.prob, y.prob);
                    }
                }
            }
        }
    }
}
