//! Entropy-based distance between two PHFEs.
//!
//! The two elements are first fused into a hybrid list of `l_A · l_B`
//! entries, `((1 - |h_A,i - h_B,j|) / 2, Π(p_A,i, p_B,j))`. Its comprehensive
//! entropy is 1 only when the hybrid collapses onto `{1/2|1}`, and the
//! distance is the ψ-rescaled complement of that entropy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::entropy::{comprehensive_of, EntropyConfig};
use crate::error::{Error, Result};
use crate::phfe::{pi_unchecked, MembershipPair, Phfe};

/// Cross-pair elements of two PHFEs. Not a PHFE: weights need not sum to 1
/// and equal values are kept apart.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HybridElementList {
    elements: Vec<MembershipPair>,
    sources: Vec<(usize, usize)>,
}

impl HybridElementList {
    /// `(value, weight)` entries, ascending by value.
    pub fn elements(&self) -> &[MembershipPair] {
        &self.elements
    }

    /// Index pair `(i, j)` in `(a, b)` that produced each element.
    pub fn sources(&self) -> &[(usize, usize)] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn total_weight(&self) -> f64 {
        self.elements.iter().map(|e| e.prob).sum()
    }

    /// Comprehensive entropy of the list, using weights in place of
    /// probabilities.
    pub fn comprehensive_entropy(&self, cfg: &EntropyConfig) -> f64 {
        comprehensive_of(&self.elements, cfg)
    }
}

pub fn hybrid(a: &Phfe, b: &Phfe) -> HybridElementList {
    let mut items: Vec<(MembershipPair, (usize, usize))> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.pairs().iter().enumerate() {
        for (j, y) in b.pairs().iter().enumerate() {
            let value = (1.0 - (x.value - y.value).abs()) / 2.0;
            let weight = pi_unchecked(x.prob, y.prob);
            items.push((MembershipPair::new(value, weight), (i, j)));
        }
    }
    // weight breaks value ties so hybrid(a, b) and hybrid(b, a) produce the
    // same sequence
    items.sort_by(|(p, s), (q, t)| {
        p.value
            .total_cmp(&q.value)
            .then(p.prob.total_cmp(&q.prob))
            .then(s.cmp(t))
    });
    let (elements, sources) = items.into_iter().unzip();
    HybridElementList { elements, sources }
}

/// Strictly increasing generator ψ on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PsiFunction {
    #[default]
    Identity,
    Square,
    /// `2ζ / (1 + ζ)`
    Harmonic,
    /// `ζ e^(ζ-1)`
    ExpTilt,
}

impl PsiFunction {
    pub const ALL: [PsiFunction; 4] = [
        PsiFunction::Identity,
        PsiFunction::Square,
        PsiFunction::Harmonic,
        PsiFunction::ExpTilt,
    ];

    pub fn eval(&self, z: f64) -> f64 {
        match self {
            PsiFunction::Identity => z,
            PsiFunction::Square => z * z,
            PsiFunction::Harmonic => 2.0 * z / (1.0 + z),
            PsiFunction::ExpTilt => z * (z - 1.0).exp(),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            PsiFunction::Identity => "id",
            PsiFunction::Square => "sq",
            PsiFunction::Harmonic => "harm",
            PsiFunction::ExpTilt => "exp",
        }
    }
}

impl fmt::Display for PsiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PsiFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(PsiFunction::Identity),
            "sq" => Ok(PsiFunction::Square),
            "harm" => Ok(PsiFunction::Harmonic),
            "exp" => Ok(PsiFunction::ExpTilt),
            _ => Err(Error::UnknownMeasure(s.to_string())),
        }
    }
}

/// `Dp(a, b) = 1 - [ψ(Ep_C(hybrid)) - ψ(0)] / [ψ(1) - ψ(0)]`.
pub fn entropy_distance(a: &Phfe, b: &Phfe, psi: PsiFunction, cfg: &EntropyConfig) -> f64 {
    distance_from_entropy(hybrid(a, b).comprehensive_entropy(cfg), psi)
}

pub(crate) fn distance_from_entropy(entropy: f64, psi: PsiFunction) -> f64 {
    let lo = psi.eval(0.0);
    let hi = psi.eval(1.0);
    1.0 - (psi.eval(entropy) - lo) / (hi - lo)
}
