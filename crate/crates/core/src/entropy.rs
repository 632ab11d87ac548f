//! Fuzziness, non-specificity and comprehensive entropies of a PHFE.
//!
//! Every measure is a direct O(l²) double sum over the index pairs
//! `i <= j`, diagonal included. The summation formulas are written against
//! plain slices of [`MembershipPair`] so the distance module can feed hybrid
//! element lists (whose weights do not sum to one) through the same code.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phfe::{pi_unchecked, MembershipPair, Phfe};

/// Generator `R` of the fuzziness entropy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FuzzinessKernel {
    /// `[1 - (|1-4xy|/3)^r] · [1 - (|4(x+y-xy)-3|/3)^r]`, `r >= 1`.
    R1 { r: f64 },
    /// `(2/3)(min{1-2xy, xy}+1) · (2/3)(min{2s-1, 2-2s}+1)` with `s = x+y-xy`.
    R2,
}

impl FuzzinessKernel {
    pub fn r1(r: f64) -> Result<Self> {
        if r.is_finite() && r >= 1.0 {
            Ok(FuzzinessKernel::R1 { r })
        } else {
            Err(Error::OutOfRange {
                what: "R1 exponent r",
                value: r,
                range: "[1, inf)",
            })
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let s = x + y - x * y;
        match *self {
            FuzzinessKernel::R1 { r } => {
                let a = ((1.0 - 4.0 * x * y).abs() / 3.0).powf(r);
                let b = ((4.0 * s - 3.0).abs() / 3.0).powf(r);
                (1.0 - a) * (1.0 - b)
            }
            FuzzinessKernel::R2 => {
                let xy = x * y;
                let a = (2.0 / 3.0) * ((1.0 - 2.0 * xy).min(xy) + 1.0);
                let b = (2.0 / 3.0) * ((2.0 * s - 1.0).min(2.0 - 2.0 * s) + 1.0);
                a * b
            }
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            FuzzinessKernel::R1 { .. } => "r1",
            FuzzinessKernel::R2 => "r2",
        }
    }
}

impl Default for FuzzinessKernel {
    fn default() -> Self {
        FuzzinessKernel::R1 { r: 1.0 }
    }
}

/// Generator `F` of the non-specificity entropy; a function of `|x - y|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NonSpecificityKernel {
    /// `2d / (1 + d)`
    #[default]
    F1,
    /// `ln(1 + d) / ln 2`
    F2,
    /// `d · e^(d-1)`
    F3,
}

impl NonSpecificityKernel {
    pub const ALL: [NonSpecificityKernel; 3] = [
        NonSpecificityKernel::F1,
        NonSpecificityKernel::F2,
        NonSpecificityKernel::F3,
    ];

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let d = (x - y).abs();
        match self {
            NonSpecificityKernel::F1 => 2.0 * d / (1.0 + d),
            NonSpecificityKernel::F2 => d.ln_1p() / std::f64::consts::LN_2,
            NonSpecificityKernel::F3 => d * (d - 1.0).exp(),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            NonSpecificityKernel::F1 => "f1",
            NonSpecificityKernel::F2 => "f2",
            NonSpecificityKernel::F3 => "f3",
        }
    }
}

impl FromStr for NonSpecificityKernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f1" => Ok(NonSpecificityKernel::F1),
            "f2" => Ok(NonSpecificityKernel::F2),
            "f3" => Ok(NonSpecificityKernel::F3),
            _ => Err(Error::UnknownMeasure(s.to_string())),
        }
    }
}

/// Θ, the map combining fuzziness and non-specificity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaCombiner {
    #[default]
    Max,
    /// `x + y - xy`
    ProbabilisticSum,
    /// `min{x + y, 1}`
    BoundedSum,
}

impl ThetaCombiner {
    pub const ALL: [ThetaCombiner; 3] = [
        ThetaCombiner::Max,
        ThetaCombiner::ProbabilisticSum,
        ThetaCombiner::BoundedSum,
    ];

    pub fn combine(&self, x: f64, y: f64) -> f64 {
        match self {
            ThetaCombiner::Max => x.max(y),
            ThetaCombiner::ProbabilisticSum => {
                // x + y - xy, arranged so rounding never leaves [max, 1]
                let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
                hi + lo * (1.0 - hi)
            }
            ThetaCombiner::BoundedSum => (x + y).min(1.0),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            ThetaCombiner::Max => "max",
            ThetaCombiner::ProbabilisticSum => "psum",
            ThetaCombiner::BoundedSum => "bsum",
        }
    }
}

impl FromStr for ThetaCombiner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(ThetaCombiner::Max),
            "psum" => Ok(ThetaCombiner::ProbabilisticSum),
            "bsum" => Ok(ThetaCombiner::BoundedSum),
            _ => Err(Error::UnknownMeasure(s.to_string())),
        }
    }
}

/// A comprehensive entropy `Ep_{uvCk}`: one fuzziness kernel, one
/// non-specificity kernel and one combiner.
///
/// The textual form is `"<r1|r2>:<f1|f2|f3>:<max|psum|bsum>"`, optionally
/// followed by `@r=<float>` for the R1 exponent (default 1).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EntropyConfig {
    pub fuzziness: FuzzinessKernel,
    pub nonspecificity: NonSpecificityKernel,
    pub theta: ThetaCombiner,
}

impl EntropyConfig {
    pub fn new(
        fuzziness: FuzzinessKernel,
        nonspecificity: NonSpecificityKernel,
        theta: ThetaCombiner,
    ) -> Self {
        EntropyConfig {
            fuzziness,
            nonspecificity,
            theta,
        }
    }

    /// All 18 printed configurations, grouped by combiner, then by
    /// fuzziness kernel, then by non-specificity kernel.
    pub fn all(r: f64) -> Vec<EntropyConfig> {
        let fuzz = [FuzzinessKernel::R1 { r }, FuzzinessKernel::R2];
        let mut out = Vec::with_capacity(18);
        for theta in ThetaCombiner::ALL {
            for f in fuzz {
                for ns in NonSpecificityKernel::ALL {
                    out.push(EntropyConfig::new(f, ns, theta));
                }
            }
        }
        out
    }

    /// The paper-style label `Ep_{uvCk}`, e.g. `Ep11C1`.
    pub fn label(&self) -> String {
        let u = match self.fuzziness {
            FuzzinessKernel::R1 { .. } => 1,
            FuzzinessKernel::R2 => 2,
        };
        let v = match self.nonspecificity {
            NonSpecificityKernel::F1 => 1,
            NonSpecificityKernel::F2 => 2,
            NonSpecificityKernel::F3 => 3,
        };
        let k = match self.theta {
            ThetaCombiner::Max => 1,
            ThetaCombiner::ProbabilisticSum => 2,
            ThetaCombiner::BoundedSum => 3,
        };
        format!("Ep{u}{v}C{k}")
    }
}

impl fmt::Display for EntropyConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            self.fuzziness.id(),
            self.nonspecificity.id(),
            self.theta.id()
        )?;
        if let FuzzinessKernel::R1 { r } = self.fuzziness {
            if r != 1.0 {
                write!(f, "@r={r}")?;
            }
        }
        Ok(())
    }
}

/// Splits an `@r=<float>` suffix off a measure id.
pub fn split_exponent(s: &str) -> Result<(&str, Option<f64>)> {
    match s.split_once('@') {
        None => Ok((s, None)),
        Some((head, tail)) => {
            let value = tail
                .strip_prefix("r=")
                .ok_or_else(|| Error::UnknownMeasure(s.to_string()))?;
            let r: f64 = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            Ok((head, Some(r)))
        }
    }
}

/// Parses `r1` / `r2` with an optional `@r=` suffix.
pub fn parse_fuzziness(s: &str) -> Result<FuzzinessKernel> {
    let (head, r) = split_exponent(s)?;
    match (head, r) {
        ("r1", r) => FuzzinessKernel::r1(r.unwrap_or(1.0)),
        ("r2", None) => Ok(FuzzinessKernel::R2),
        _ => Err(Error::UnknownMeasure(s.to_string())),
    }
}

impl FromStr for EntropyConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, r) = split_exponent(s)?;
        let parts: Vec<&str> = head.split(':').collect();
        let [f, ns, theta] = parts[..] else {
            return Err(Error::UnknownMeasure(s.to_string()));
        };
        let fuzziness = match (f, r) {
            ("r1", r) => FuzzinessKernel::r1(r.unwrap_or(1.0))?,
            ("r2", None) => FuzzinessKernel::R2,
            _ => return Err(Error::UnknownMeasure(s.to_string())),
        };
        Ok(EntropyConfig::new(fuzziness, ns.parse()?, theta.parse()?))
    }
}

fn check_unit_args(x: f64, y: f64) -> Result<()> {
    for v in [x, y] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::OutOfRange {
                what: "kernel argument",
                value: v,
                range: "[0, 1]",
            });
        }
    }
    Ok(())
}

pub fn r_kernel(k: FuzzinessKernel, x: f64, y: f64) -> Result<f64> {
    check_unit_args(x, y)?;
    Ok(k.eval(x, y))
}

pub fn f_kernel(k: NonSpecificityKernel, x: f64, y: f64) -> Result<f64> {
    check_unit_args(x, y)?;
    Ok(k.eval(x, y))
}

pub(crate) fn fuzziness_of(pairs: &[MembershipPair], k: FuzzinessKernel) -> f64 {
    let l = pairs.len() as f64;
    let mut sum = 0.0;
    for (i, a) in pairs.iter().enumerate() {
        for b in &pairs[i..] {
            sum += k.eval(a.value, b.value) * pi_unchecked(a.prob, b.prob);
        }
    }
    2.0 / (l * (l + 1.0)) * sum
}

pub(crate) fn nonspecificity_of(pairs: &[MembershipPair], k: NonSpecificityKernel) -> f64 {
    let l = pairs.len() as f64;
    let mut sum = 0.0;
    for (i, a) in pairs.iter().enumerate() {
        // the diagonal term is F(x, x)^Π = 0^Π = 0
        for b in &pairs[i + 1..] {
            let f = k.eval(a.value, b.value);
            if f > 0.0 {
                sum += f.powf(pi_unchecked(a.prob, b.prob));
            }
        }
    }
    2.0 / (2.0f64).max(l * (l - 1.0)) * sum
}

pub(crate) fn comprehensive_of(pairs: &[MembershipPair], cfg: &EntropyConfig) -> f64 {
    cfg.theta.combine(
        fuzziness_of(pairs, cfg.fuzziness),
        nonspecificity_of(pairs, cfg.nonspecificity),
    )
}

/// `Ep_F`: departure from the nearest crisp element.
pub fn fuzziness_entropy(a: &Phfe, k: FuzzinessKernel) -> f64 {
    fuzziness_of(a.pairs(), k)
}

/// `Ep_NS`: spread among the membership values.
pub fn nonspecificity_entropy(a: &Phfe, k: NonSpecificityKernel) -> f64 {
    nonspecificity_of(a.pairs(), k)
}

/// `Ep_C = Θ(Ep_F, Ep_NS)`.
pub fn comprehensive_entropy(a: &Phfe, cfg: &EntropyConfig) -> f64 {
    comprehensive_of(a.pairs(), cfg)
}

/// Fuzziness, non-specificity and their combination, for audit output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyBreakdown {
    pub fuzziness: f64,
    pub nonspecificity: f64,
    pub comprehensive: f64,
}

pub fn entropy_breakdown(a: &Phfe, cfg: &EntropyConfig) -> EntropyBreakdown {
    let fuzziness = fuzziness_entropy(a, cfg.fuzziness);
    let nonspecificity = nonspecificity_entropy(a, cfg.nonspecificity);
    EntropyBreakdown {
        fuzziness,
        nonspecificity,
        comprehensive: cfg.theta.combine(fuzziness, nonspecificity),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const R1: FuzzinessKernel = FuzzinessKernel::R1 { r: 1.0 };

    fn phfe(raw: &[(f64, f64)]) -> Phfe {
        Phfe::new(raw.iter().copied()).unwrap()
    }

    #[test]
    fn r1_kernel_values() {
        assert_eq!(r_kernel(R1, 0.5, 0.5).unwrap(), 1.0);
        assert_eq!(r_kernel(R1, 0.0, 0.0).unwrap(), 0.0);
        assert_eq!(r_kernel(R1, 1.0, 1.0).unwrap(), 0.0);
        // (1 - 1.52/3)(1 - 0.88/3)
        let expected = (1.0 - 1.52 / 3.0) * (1.0 - 0.88 / 3.0);
        assert!((r_kernel(R1, 0.7, 0.9).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 0.348622).abs() < 1e-6);
        assert!((r_kernel(R1, 0.0, 1.0).unwrap() - 4.0 / 9.0).abs() < 1e-15);
        assert!(r_kernel(R1, 1.5, 0.0).is_err());
    }

    #[test]
    fn r2_kernel_as_printed() {
        let r2 = FuzzinessKernel::R2;
        assert_eq!(r2.eval(0.0, 0.0), 0.0);
        assert_eq!(r2.eval(1.0, 1.0), 0.0);
        // the printed R2 peaks at 5/6 on (1/2, 1/2)
        assert!((r2.eval(0.5, 0.5) - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn kernel_symmetry_under_reflection() {
        for k in [R1, FuzzinessKernel::R1 { r: 2.5 }] {
            for (x, y) in [(0.1, 0.7), (0.3, 0.3), (0.9, 0.2), (0.0, 1.0)] {
                assert!((k.eval(x, y) - k.eval(1.0 - y, 1.0 - x)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn r2_kernel_is_not_reflection_symmetric() {
        let r2 = FuzzinessKernel::R2;
        // (2/3)(1.01) * (2/3)(0.38) against (2/3)(0.38) * (2/3)(1.02)
        assert!((r2.eval(0.1, 0.1) - 0.673333 * 0.253333).abs() < 1e-5);
        assert!((r2.eval(0.9, 0.9) - 0.253333 * 0.68).abs() < 1e-5);
        assert_eq!(r2.eval(0.0, 1.0), r2.eval(1.0, 0.0));
    }

    #[test]
    fn f_kernel_values() {
        for k in NonSpecificityKernel::ALL {
            assert_eq!(f_kernel(k, 0.37, 0.37).unwrap(), 0.0);
            assert!((f_kernel(k, 0.0, 1.0).unwrap() - 1.0).abs() < 1e-15, "{k:?}");
        }
        let v = f_kernel(NonSpecificityKernel::F1, 0.4, 0.6).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-15);
        assert!(f_kernel(NonSpecificityKernel::F2, -0.1, 0.2).is_err());
    }

    #[test]
    fn fuzziness_examples() {
        let h1 = phfe(&[(0.7, 0.2), (0.9, 0.8)]);
        assert!((fuzziness_entropy(&h1, R1) - 0.1513).abs() < 5e-4);
        for k in [R1, FuzzinessKernel::R2] {
            assert!(fuzziness_entropy(&Phfe::empty_set(), k).abs() < 1e-15);
            assert!(fuzziness_entropy(&Phfe::full_set(), k).abs() < 1e-15);
        }
        assert_eq!(fuzziness_entropy(&Phfe::singleton(0.5).unwrap(), R1), 1.0);
        let h4 = phfe(&[(0.4, 0.5), (0.6, 0.5)]);
        assert!((fuzziness_entropy(&h4, R1) - 0.412563).abs() < 1e-6);
    }

    #[test]
    fn fuzziness_of_two_point_crisp_mixture() {
        // (1/3)·R(0,1)·(1/2) with R1(0,1) = 4/9
        let a = phfe(&[(0.0, 0.5), (1.0, 0.5)]);
        let v = fuzziness_entropy(&a, R1);
        assert!((v - 2.0 / 27.0).abs() < 1e-15);
        assert!(v > 0.0 && v < 1.0);
    }

    #[test]
    fn nonspecificity_examples() {
        for k in NonSpecificityKernel::ALL {
            assert_eq!(nonspecificity_entropy(&Phfe::singleton(0.42).unwrap(), k), 0.0);
            let extreme = phfe(&[(0.0, 0.5), (1.0, 0.5)]);
            assert!((nonspecificity_entropy(&extreme, k) - 1.0).abs() < 1e-15);
        }
        let h4 = phfe(&[(0.4, 0.5), (0.6, 0.5)]);
        let v = nonspecificity_entropy(&h4, NonSpecificityKernel::F1);
        assert!((v - (1.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((v - 0.57735).abs() < 1e-5);
    }

    #[test]
    fn comprehensive_examples() {
        for cfg in EntropyConfig::all(1.0) {
            assert_eq!(comprehensive_entropy(&Phfe::empty_set(), &cfg), 0.0);
        }
        // Max(Ep_1F, Ep_1NS) on {0.6|0.9, 0.9|0.1}: the printed Eq. for Ep_NS
        // yields (0.6/1.3)^0.8, which exceeds Ep_1F = 0.3488
        let h2 = phfe(&[(0.6, 0.9), (0.9, 0.1)]);
        let cfg = EntropyConfig::default();
        let b = entropy_breakdown(&h2, &cfg);
        assert!((b.fuzziness - 0.3488).abs() < 5e-4);
        assert!((b.nonspecificity - (0.6f64 / 1.3).powf(0.8)).abs() < 1e-12);
        assert_eq!(b.comprehensive, b.fuzziness.max(b.nonspecificity));
    }

    #[test]
    fn theta_contract() {
        for t in ThetaCombiner::ALL {
            assert_eq!(t.combine(0.0, 0.0), 0.0);
            assert_eq!(t.combine(1.0, 0.0), 1.0);
            for (x, y) in [(0.2, 0.7), (0.5, 0.5), (0.99, 0.01)] {
                assert_eq!(t.combine(x, y), t.combine(y, x));
                assert!(t.combine(x, y) <= t.combine(x, y + 0.005));
            }
        }
    }

    #[test]
    fn config_ids_round_trip() {
        let cfg: EntropyConfig = "r1:f2:max".parse().unwrap();
        assert_eq!(cfg.fuzziness, R1);
        assert_eq!(cfg.nonspecificity, NonSpecificityKernel::F2);
        assert_eq!(cfg.theta, ThetaCombiner::Max);
        let cfg: EntropyConfig = "r1:f3:bsum@r=2".parse().unwrap();
        assert_eq!(cfg.fuzziness, FuzzinessKernel::R1 { r: 2.0 });
        assert_eq!(cfg.to_string(), "r1:f3:bsum@r=2");
        assert_eq!("r2:f1:psum".parse::<EntropyConfig>().unwrap().label(), "Ep21C2");
        for bad in ["r3:f1:max", "r1:f1", "r1:f1:max@r=0.5", "r2:f1:max@r=2", "r1:f1:max@q=1"] {
            assert!(bad.parse::<EntropyConfig>().is_err(), "{bad}");
        }
        for cfg in EntropyConfig::all(1.0) {
            assert_eq!(cfg.to_string().parse::<EntropyConfig>().unwrap(), cfg);
        }
        assert_eq!(EntropyConfig::all(1.0).len(), 18);
    }
}
