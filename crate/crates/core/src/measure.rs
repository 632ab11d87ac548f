use std::fmt;
use std::str::FromStr;

use crate::baselines::{su_entropy_d, su_entropy_p1, su_entropy_p2, ZetaFunction};
use crate::entropy::{
    comprehensive_entropy, fuzziness_entropy, nonspecificity_entropy, parse_fuzziness,
    EntropyConfig, FuzzinessKernel, NonSpecificityKernel,
};
use crate::error::{Error, Result};
use crate::phfe::Phfe;

/// Any single-PHFE uncertainty measure, selectable by textual id.
///
/// Ids: `r1`, `r1@r=<x>`, `r2` (fuzziness); `f1`, `f2`, `f3`
/// (non-specificity); `<F>:<NS>:<Θ>[@r=<x>]` (comprehensive); `su-p1`,
/// `su-p2`, `su-d` (baselines).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    Fuzziness(FuzzinessKernel),
    NonSpecificity(NonSpecificityKernel),
    Comprehensive(EntropyConfig),
    SuP1,
    SuP2,
    SuD(ZetaFunction),
}

impl Measure {
    pub fn eval(&self, a: &Phfe) -> f64 {
        match self {
            Measure::Fuzziness(k) => fuzziness_entropy(a, *k),
            Measure::NonSpecificity(k) => nonspecificity_entropy(a, *k),
            Measure::Comprehensive(cfg) => comprehensive_entropy(a, cfg),
            Measure::SuP1 => su_entropy_p1(a),
            Measure::SuP2 => su_entropy_p2(a),
            Measure::SuD(z) => su_entropy_d(a, *z),
        }
    }

    /// Replaces the R1 exponent, if the measure has one.
    pub fn with_exponent(self, r: f64) -> Result<Measure> {
        let k = FuzzinessKernel::r1(r)?;
        Ok(match self {
            Measure::Fuzziness(FuzzinessKernel::R1 { .. }) => Measure::Fuzziness(k),
            Measure::Comprehensive(mut cfg) if matches!(cfg.fuzziness, FuzzinessKernel::R1 { .. }) => {
                cfg.fuzziness = k;
                Measure::Comprehensive(cfg)
            }
            other => other,
        })
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "su-p1" => return Ok(Measure::SuP1),
            "su-p2" => return Ok(Measure::SuP2),
            "su-d" => return Ok(Measure::SuD(ZetaFunction::Linear)),
            "f1" | "f2" | "f3" => return Ok(Measure::NonSpecificity(s.parse()?)),
            _ => {}
        }
        if s.contains(':') {
            return Ok(Measure::Comprehensive(s.parse()?));
        }
        parse_fuzziness(s).map(Measure::Fuzziness)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Fuzziness(k) => {
                f.write_str(k.id())?;
                if let FuzzinessKernel::R1 { r } = k {
                    if *r != 1.0 {
                        write!(f, "@r={r}")?;
                    }
                }
                Ok(())
            }
            Measure::NonSpecificity(k) => f.write_str(k.id()),
            Measure::Comprehensive(cfg) => write!(f, "{cfg}"),
            Measure::SuP1 => f.write_str("su-p1"),
            Measure::SuP2 => f.write_str("su-p2"),
            Measure::SuD(_) => f.write_str("su-d"),
        }
    }
}
