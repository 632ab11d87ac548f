//! Entropy measures for probabilistic hesitant fuzzy elements (PHFEs).
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`phfe`] | canonical PHFEs, complement, the Π operator, linguistic terms |
//! | [`entropy`] | fuzziness `Ep_F`, non-specificity `Ep_NS`, comprehensive `Ep_C` |
//! | [`baselines`] | membership-degree entropies `E_P1`, `E_P2`, like-distance `d_SU`, `E_D` |
//! | [`distance`] | hybrid element lists and the entropy-based distance `Dp` |
//! | [`mcdm`] | entropy-weighted TOPSIS |
//! | [`axioms`] | seeded randomized checks of the measure axioms |
//! | [`reproduce`] | recomputation of the published comparison tables |
//!
//! ```
//! use phfe_core::{fuzziness_entropy, FuzzinessKernel, Phfe};
//!
//! let h = Phfe::new([(0.7, 0.2), (0.9, 0.8)]).unwrap();
//! let e = fuzziness_entropy(&h, FuzzinessKernel::R1 { r: 1.0 });
//! assert!((e - 0.1513).abs() < 5e-4);
//! ```

pub mod axioms;
pub mod baselines;
pub mod distance;
pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod measure;
pub mod mcdm;
pub mod phfe;
pub mod reproduce;

pub use baselines::{su_entropy_d, su_entropy_p1, su_entropy_p2, su_like_distance, ZetaFunction};
pub use distance::{entropy_distance, hybrid, HybridElementList, PsiFunction};
pub use entropy::{
    comprehensive_entropy, entropy_breakdown, f_kernel, fuzziness_entropy, nonspecificity_entropy,
    r_kernel, EntropyBreakdown, EntropyConfig, FuzzinessKernel, NonSpecificityKernel,
    ThetaCombiner,
};
pub use error::{Error, Result};
pub use measure::Measure;
pub use mcdm::{
    closeness, entropy_weights, ideal_distances, run_topsis, CriterionKind, CriterionSpec,
    DecisionMatrix, TopsisResult, WeightVector,
};
pub use phfe::{canonicalize, from_linguistic, pi, LinguisticScale, MembershipPair, Phfe};
