//! Seeded randomized verification of the measure axioms.
//!
//! Each suite draws PHFEs (lengths 1 to 6, random probability simplexes)
//! from a ChaCha stream seeded by the caller, so a `(seed, samples)` pair
//! always replays the same inputs. A suite stops at its first
//! counterexample and records it verbatim.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::baselines::{su_entropy_d, su_entropy_p1, su_entropy_p2, ZetaFunction};
use crate::distance::{distance_from_entropy, entropy_distance, hybrid, PsiFunction};
use crate::entropy::{
    comprehensive_entropy, fuzziness_entropy, nonspecificity_entropy, EntropyConfig,
    FuzzinessKernel, NonSpecificityKernel, ThetaCombiner,
};
use crate::mcdm::{
    cell_ideal_distances, entropy_weights, run_topsis, CriterionKind, CriterionSpec,
    DecisionMatrix, WeightVector,
};
use crate::phfe::{canonicalize, pi, LinguisticScale, MembershipPair, Phfe};

pub const MAX_LEN: usize = 6;
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;
const MONOTONE_SLACK: f64 = 1e-12;

/// Random PHFE source.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn unit(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// `l` distinct membership values, some snapped to 0, 1/2 or 1.
    pub fn values(&mut self, l: usize, lo: f64, hi: f64) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::with_capacity(l);
        while out.len() < l {
            let v = if self.rng.gen_bool(0.15) {
                *[lo, (lo + hi) / 2.0, hi].choose(&mut self.rng).unwrap()
            } else {
                lo + (hi - lo) * self.rng.gen::<f64>()
            };
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// A strictly positive probability vector of length `l`.
    pub fn simplex(&mut self, l: usize) -> Vec<f64> {
        if l == 1 {
            return vec![1.0];
        }
        if self.rng.gen_bool(0.25) {
            return vec![1.0 / l as f64; l];
        }
        let raw: Vec<f64> = (0..l)
            .map(|_| -(1.0 - self.rng.gen::<f64>()).ln() + 1e-6)
            .collect();
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|x| x / total).collect()
    }

    pub fn phfe_with_len(&mut self, l: usize) -> Phfe {
        let values = self.values(l, 0.0, 1.0);
        let probs = self.simplex(l);
        canonicalize(values.into_iter().zip(probs)).expect("sampler builds valid PHFEs")
    }

    pub fn phfe(&mut self) -> Phfe {
        let l = self.rng.gen_range(1..=MAX_LEN);
        self.phfe_with_len(l)
    }

    pub fn matrix(&mut self) -> DecisionMatrix {
        let m = self.rng.gen_range(2..=4);
        let n = self.rng.gen_range(1..=4);
        let criteria = (0..n)
            .map(|j| CriterionSpec {
                name: format!("c{}", j + 1),
                kind: if self.rng.gen_bool(0.3) {
                    CriterionKind::Cost
                } else {
                    CriterionKind::Benefit
                },
            })
            .collect();
        let cells = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let l = self.rng.gen_range(1..=3);
                        self.phfe_with_len(l)
                    })
                    .collect()
            })
            .collect();
        let alternatives = (1..=m).map(|i| format!("x{i}")).collect();
        DecisionMatrix::new(alternatives, criteria, cells).expect("sampler builds valid matrices")
    }
}

/// Fault injected into the harness to confirm that a suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Complement that forgets to carry probabilities with their values.
    Complement,
}

impl std::str::FromStr for Mutation {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "complement" => Ok(Mutation::Complement),
            _ => Err(crate::Error::UnknownMeasure(s.to_string())),
        }
    }
}

fn mutated_complement(a: &Phfe) -> Phfe {
    let values = a.values().collect::<Vec<_>>().into_iter().rev().map(|v| 1.0 - v);
    canonicalize(values.zip(a.probs())).expect("same probability mass")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub description: &'static str,
    pub checks: usize,
    /// Passing requires finding a witness instead of avoiding a violation.
    pub expects_witness: bool,
    pub witness: Option<String>,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str, description: &'static str) -> Self {
        SuiteResult {
            name,
            description,
            checks: 0,
            expects_witness: false,
            witness: None,
            counterexample: None,
        }
    }

    fn expecting_witness(mut self) -> Self {
        self.expects_witness = true;
        self
    }

    fn done(&self) -> bool {
        self.counterexample.is_some() || (self.expects_witness && self.witness.is_some())
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if self.counterexample.is_some() {
            return;
        }
        self.checks += 1;
        if !ok {
            self.counterexample = Some(detail());
        }
    }

    fn witness(&mut self, found: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if found && self.witness.is_none() {
            self.witness = Some(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && (!self.expects_witness || self.witness.is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

fn fuzziness_kernels() -> [FuzzinessKernel; 3] {
    [
        FuzzinessKernel::R1 { r: 1.0 },
        FuzzinessKernel::R1 { r: 2.0 },
        FuzzinessKernel::R2,
    ]
}

fn r1_configs() -> Vec<EntropyConfig> {
    EntropyConfig::all(1.0)
        .into_iter()
        .filter(|c| matches!(c.fuzziness, FuzzinessKernel::R1 { .. }))
        .collect()
}

/// Every single-PHFE measure value, labelled, for comparisons.
fn all_measures(a: &Phfe) -> Vec<(String, f64)> {
    let mut out = measures_with(a, &fuzziness_kernels(), &EntropyConfig::all(1.0));
    out.push(("E_P1".into(), su_entropy_p1(a)));
    out.push(("E_P2".into(), su_entropy_p2(a)));
    out.push(("E_D".into(), su_entropy_d(a, ZetaFunction::Linear)));
    out
}

/// Measures whose kernels are reflection symmetric: everything except R2.
fn symmetric_measures(a: &Phfe) -> Vec<(String, f64)> {
    let kernels = [fuzziness_kernels()[0], fuzziness_kernels()[1]];
    let mut out = measures_with(a, &kernels, &r1_configs());
    out.push(("E_P1".into(), su_entropy_p1(a)));
    out.push(("E_P2".into(), su_entropy_p2(a)));
    out.push(("E_D".into(), su_entropy_d(a, ZetaFunction::Linear)));
    out
}

fn measures_with(a: &Phfe, kernels: &[FuzzinessKernel], configs: &[EntropyConfig]) -> Vec<(String, f64)> {
    let mut out = Vec::new();
    for &k in kernels {
        out.push((format!("Ep_F[{k:?}]"), fuzziness_entropy(a, k)));
    }
    for k in NonSpecificityKernel::ALL {
        out.push((format!("Ep_NS[{}]", k.id()), nonspecificity_entropy(a, k)));
    }
    for cfg in configs {
        out.push((format!("Ep_C[{cfg}]"), comprehensive_entropy(a, cfg)));
    }
    out
}

fn proposed_measures(a: &Phfe) -> Vec<(String, f64)> {
    measures_with(a, &fuzziness_kernels(), &EntropyConfig::all(1.0))
}

/// Runs every suite over `samples` draws seeded with `seed`.
pub fn run_suites(seed: u64, samples: usize, mutation: Option<Mutation>) -> AxiomReport {
    let complement: fn(&Phfe) -> Phfe = match mutation {
        None => Phfe::complement,
        Some(Mutation::Complement) => mutated_complement,
    };
    let mut s = Sampler::new(seed);
    let mut suites = Vec::new();

    suites.append(&mut phfe_suites(&mut s, samples, complement));
    suites.append(&mut entropy_suites(&mut s, samples, complement));
    suites.append(&mut distance_suites(&mut s, samples));
    suites.append(&mut mcdm_suites(&mut s, samples));

    AxiomReport {
        seed,
        samples,
        suites,
    }
}

fn phfe_suites(s: &mut Sampler, samples: usize, complement: fn(&Phfe) -> Phfe) -> Vec<SuiteResult> {
    let mut pi_suite = SuiteResult::new("phfe.pi", "Π symmetric with values in (0, 1]");
    let mut idem = SuiteResult::new("phfe.canonicalize_idempotent", "canonicalize(canonicalize(x)) = canonicalize(x)");
    let mut invol = SuiteResult::new(
        "phfe.complement_involution",
        "complement preserves length and probabilities; applied twice gives the input",
    );
    let mut ling = SuiteResult::new("phfe.linguistic_monotone", "t1 < t2 implies g(t1) < g(t2)");

    for _ in 0..samples {
        let a = s.phfe();
        let probs: Vec<f64> = a.probs().collect();
        for &p in &probs {
            for &q in &probs {
                let (x, y) = (pi(p, q).unwrap(), pi(q, p).unwrap());
                pi_suite.check(x == y && x > 0.0 && x <= 1.0, || {
                    format!("pi({p}, {q}) = {x}, pi({q}, {p}) = {y}")
                });
            }
        }

        let mut raw: Vec<(f64, f64)> = a.pairs().iter().map(|m| (m.value, m.prob)).collect();
        if raw.len() > 1 && s.rng().gen_bool(0.5) {
            // split one pair into two halves with the same value
            let (v, p) = raw[0];
            raw[0].1 = p / 2.0;
            raw.push((v, p / 2.0));
        }
        raw.shuffle(s.rng());
        let once = canonicalize(raw.clone()).unwrap();
        let twice = canonicalize(once.pairs().iter().map(|m| (m.value, m.prob))).unwrap();
        idem.check(once == twice, || format!("input {raw:?}: once {once}, twice {twice}"));

        let c = complement(&a);
        let cc = complement(&c);
        let mut pa = probs.clone();
        let mut pc: Vec<f64> = c.probs().collect();
        pa.sort_by(f64::total_cmp);
        pc.sort_by(f64::total_cmp);
        let back = cc.len() == a.len()
            && cc
                .pairs()
                .iter()
                .zip(a.pairs())
                .all(|(x, y)| (x.value - y.value).abs() <= 1e-15 && x.prob == y.prob);
        invol.check(c.len() == a.len() && pa == pc && back, || {
            format!("a = {a}, complement = {c}, twice = {cc}")
        });

        let tau = s.rng().gen_range(1..=10u32);
        let scale = LinguisticScale::new(tau).unwrap();
        let t = s.rng().gen_range(0..i64::from(2 * tau));
        let (lo, hi) = (scale.membership(t).unwrap(), scale.membership(t + 1).unwrap());
        ling.check(lo < hi, || format!("tau = {tau}: g({t}) = {lo}, g({}) = {hi}", t + 1));
    }
    vec![pi_suite, idem, invol, ling]
}

fn entropy_suites(s: &mut Sampler, samples: usize, complement: fn(&Phfe) -> Phfe) -> Vec<SuiteResult> {
    let mut range = SuiteResult::new("entropy.range", "Ep_F, Ep_NS, Ep_C lie in [0, 1]");
    let mut symmetry = SuiteResult::new(
        "entropy.complement_symmetry",
        "E(a) = E(complement(a)) within 1e-12 for Ep_F (R1), Ep_NS, Ep_C (R1), E_P1, E_P2, E_D",
    );
    let mut r2_gap = SuiteResult::new(
        "entropy.r2_reflection_asymmetry",
        "the R2 kernel gives Ep_F(a) != Ep_F(complement(a)) for some a",
    )
    .expecting_witness();
    let mut boundary = SuiteResult::new(
        "entropy.boundary",
        "Ep_F({0|1}) = Ep_F({1|1}) = 0, Ep_F({0.5|1}) = 1 (R1), Ep_NS(singleton) = 0, Ep_NS({0|0.5,1|0.5}) = 1",
    );
    let mut distinguishing = SuiteResult::new(
        "entropy.crisp_mixture_fuzziness",
        "0 < Ep_F({0|0.5,1|0.5}) < 1, equal to R(0,1)/6",
    );
    let mut order = SuiteResult::new("entropy.combiner_order", "Ep_C: Max <= ProbabilisticSum <= BoundedSum");
    let mut theta = SuiteResult::new(
        "entropy.theta_contract",
        "Θ(x,0) = x for x in {0,1}; Θ symmetric; Θ monotone",
    );
    let mut perm = SuiteResult::new(
        "entropy.permutation_invariance",
        "measures unchanged under permutation of input pairs",
    );
    let mut mono_f = SuiteResult::new(
        "entropy.fuzziness_monotonicity",
        "h_A <= h_B <= 1/2 (or h_A >= h_B >= 1/2) with equal Π implies Ep_F(A) <= Ep_F(B)",
    );
    let mut mono_ns = SuiteResult::new(
        "entropy.nonspecificity_monotonicity",
        "smaller gaps with equal Π imply Ep_NS(A) <= Ep_NS(B)",
    );

    // fixed boundary cases
    let zero = Phfe::empty_set();
    let one = Phfe::full_set();
    let half = Phfe::singleton(0.5).unwrap();
    let split = canonicalize([(0.0, 0.5), (1.0, 0.5)]).unwrap();
    for k in fuzziness_kernels() {
        let (z, o) = (fuzziness_entropy(&zero, k), fuzziness_entropy(&one, k));
        boundary.check(z == 0.0 && o == 0.0, || format!("{k:?}: Ep_F({{0|1}}) = {z}, Ep_F({{1|1}}) = {o}"));
        let m = fuzziness_entropy(&split, k);
        let expected = k.eval(0.0, 1.0) / 6.0;
        distinguishing.check(m > 0.0 && m < 1.0 && (m - expected).abs() < 1e-15, || {
            format!("{k:?}: Ep_F({{0|0.5,1|0.5}}) = {m}, R(0,1)/6 = {expected}")
        });
    }
    for k in fuzziness_kernels().into_iter().filter(|k| matches!(k, FuzzinessKernel::R1 { .. })) {
        let h = fuzziness_entropy(&half, k);
        boundary.check(h == 1.0, || format!("{k:?}: Ep_F({{0.5|1}}) = {h}"));
    }
    for k in NonSpecificityKernel::ALL {
        let e = nonspecificity_entropy(&split, k);
        boundary.check(e == 1.0, || format!("{}: Ep_NS({{0|0.5,1|0.5}}) = {e}", k.id()));
    }

    for _ in 0..samples {
        let a = s.phfe();

        let c = complement(&a);
        for ((name, x), (_, y)) in symmetric_measures(&a).into_iter().zip(symmetric_measures(&c)) {
            symmetry.check((x - y).abs() <= SYMMETRY_TOLERANCE, || {
                format!("{name}: a = {a} -> {x}, complement = {c} -> {y}")
            });
        }

        if !r2_gap.done() {
            let (x, y) = (
                fuzziness_entropy(&a, FuzzinessKernel::R2),
                fuzziness_entropy(&Phfe::complement(&a), FuzzinessKernel::R2),
            );
            r2_gap.witness((x - y).abs() > SYMMETRY_TOLERANCE, || {
                format!("a = {a} -> {x}, complement -> {y}")
            });
        }

        for (name, x) in proposed_measures(&a) {
            range.check((0.0..=1.0).contains(&x), || format!("{name}({a}) = {x}"));
        }

        let gamma = s.unit();
        let single = Phfe::singleton(gamma).unwrap();
        for k in NonSpecificityKernel::ALL {
            let e = nonspecificity_entropy(&single, k);
            boundary.check(e == 0.0, || format!("{}: Ep_NS({single}) = {e}", k.id()));
        }

        for f in fuzziness_kernels() {
            for ns in NonSpecificityKernel::ALL {
                let [mx, ps, bs] = ThetaCombiner::ALL
                    .map(|t| comprehensive_entropy(&a, &EntropyConfig::new(f, ns, t)));
                order.check(mx <= ps && ps <= bs, || {
                    format!("{f:?}/{}: a = {a}: max {mx}, psum {ps}, bsum {bs}", ns.id())
                });
            }
        }

        let (x, y, z) = (s.unit(), s.unit(), s.unit());
        let (lo, hi) = if y <= z { (y, z) } else { (z, y) };
        for t in ThetaCombiner::ALL {
            let ok = t.combine(0.0, 0.0) == 0.0
                && t.combine(1.0, 0.0) == 1.0
                && t.combine(x, y) == t.combine(y, x)
                && t.combine(x, lo) <= t.combine(x, hi);
            theta.check(ok, || format!("{t:?} at x = {x}, y = {y}, z = {z}"));
        }

        let mut raw: Vec<(f64, f64)> = a.pairs().iter().map(|m| (m.value, m.prob)).collect();
        raw.shuffle(s.rng());
        let shuffled = canonicalize(raw.clone()).unwrap();
        for ((name, x), (_, y)) in all_measures(&a).into_iter().zip(all_measures(&shuffled)) {
            perm.check(x == y, || format!("{name}: {a} -> {x}, permuted {raw:?} -> {y}"));
        }

        // constructed pairs for the monotonicity axioms
        let l = s.rng().gen_range(1..=MAX_LEN);
        let probs = s.simplex(l);
        let shrink = s.unit();
        let lower = s.rng().gen_bool(0.5);
        let b_vals = if lower {
            s.values(l, 0.0, 0.5)
        } else {
            s.values(l, 0.5, 1.0)
        };
        let a_vals: Vec<f64> = if lower {
            b_vals.iter().map(|v| v * shrink).collect()
        } else {
            b_vals.iter().map(|v| 1.0 - (1.0 - v) * shrink).collect()
        };
        if let (Ok(pa), Ok(pb)) = (
            canonicalize(a_vals.iter().copied().zip(probs.iter().copied())),
            canonicalize(b_vals.iter().copied().zip(probs.iter().copied())),
        ) {
            if pa.len() == l && pb.len() == l {
                for k in fuzziness_kernels() {
                    let (ea, eb) = (fuzziness_entropy(&pa, k), fuzziness_entropy(&pb, k));
                    mono_f.check(ea <= eb + MONOTONE_SLACK, || {
                        format!("{k:?}: A = {pa} -> {ea}, B = {pb} -> {eb}")
                    });
                }
            }
        }

        if a.len() >= 2 {
            let vals: Vec<f64> = a.values().collect();
            let (min, max) = (vals[0], vals[vals.len() - 1]);
            let span = max - min;
            let room_up = (1.0 - min) / span;
            let room_down = max / span;
            let (room, anchor_low) = if room_up >= room_down {
                (room_up, true)
            } else {
                (room_down, false)
            };
            if room > 1.0 + 1e-9 {
                let stretch = 1.0 + (room - 1.0) * (0.05 + 0.95 * s.unit());
                let stretched: Vec<f64> = vals
                    .iter()
                    .map(|&v| {
                        let w = if anchor_low {
                            min + (v - min) * stretch
                        } else {
                            max - (max - v) * stretch
                        };
                        w.clamp(0.0, 1.0)
                    })
                    .collect();
                if let Ok(b) = canonicalize(stretched.into_iter().zip(a.probs())) {
                    if b.len() == a.len() {
                        for k in NonSpecificityKernel::ALL {
                            let (ea, eb) = (nonspecificity_entropy(&a, k), nonspecificity_entropy(&b, k));
                            mono_ns.check(ea <= eb + MONOTONE_SLACK, || {
                                format!("{}: A = {a} -> {ea}, B = {b} -> {eb}", k.id())
                            });
                        }
                    }
                }
            }
        }
    }
    vec![range, symmetry, r2_gap, boundary, distinguishing, order, theta, perm, mono_f, mono_ns]
}

fn distance_suites(s: &mut Sampler, samples: usize) -> Vec<SuiteResult> {
    let configs = EntropyConfig::all(1.0);
    let r1 = r1_configs();
    let mut symmetry = SuiteResult::new("distance.symmetry", "Dp(a, b) = Dp(b, a) exactly");
    let mut bounded = SuiteResult::new("distance.bounded", "Dp(a, b) in [0, 1]");
    let mut singleton = SuiteResult::new(
        "distance.singleton_reflexivity",
        "Dp({γ|1}, {γ|1}) = 0 for R1-based configurations",
    );
    let mut endpoints = SuiteResult::new(
        "distance.psi_endpoints",
        "Dp = 0 when Ep_C(hybrid) = 1 and Dp = 1 when Ep_C(hybrid) = 0, for every ψ",
    );
    let mut psi_zero = SuiteResult::new(
        "distance.psi_zero_agreement",
        "all ψ agree on whether Dp = 0",
    );
    let mut reflexivity_gap = SuiteResult::new(
        "distance.self_distance_positive",
        "some multi-element a has Dp(a, a) > 0 (property of the hybrid construction)",
    )
    .expecting_witness();

    for i in 0..samples {
        let cfg = configs[i % configs.len()];
        let psi = PsiFunction::ALL[(i / configs.len()) % PsiFunction::ALL.len()];
        let a = s.phfe();
        let b = s.phfe();

        let (ab, ba) = (entropy_distance(&a, &b, psi, &cfg), entropy_distance(&b, &a, psi, &cfg));
        symmetry.check(ab == ba, || format!("{cfg} {psi}: Dp({a}, {b}) = {ab}, reversed {ba}"));
        bounded.check((0.0..=1.0).contains(&ab), || format!("{cfg} {psi}: Dp({a}, {b}) = {ab}"));

        let gamma = s.unit();
        let single = Phfe::singleton(gamma).unwrap();
        let rc = r1[i % r1.len()];
        let d = entropy_distance(&single, &single, psi, &rc);
        singleton.check(d == 0.0, || format!("{rc} {psi}: Dp({single}, {single}) = {d}"));

        let far = [Phfe::empty_set(), Phfe::full_set()];
        let top = hybrid(&single, &single).comprehensive_entropy(&rc);
        let bottom = hybrid(&far[0], &far[1]).comprehensive_entropy(&cfg);
        for p in PsiFunction::ALL {
            let d0 = distance_from_entropy(top, p);
            let d1 = entropy_distance(&far[0], &far[1], p, &cfg);
            endpoints.check(top == 1.0 && d0 == 0.0 && bottom == 0.0 && d1 == 1.0, || {
                format!("{p}: Ep_C(hybrid) = {top} -> Dp {d0}; Ep_C(hybrid) = {bottom} -> Dp {d1}")
            });
        }

        let zeros: Vec<bool> = PsiFunction::ALL
            .iter()
            .map(|&p| entropy_distance(&a, &b, p, &cfg) == 0.0)
            .collect();
        psi_zero.check(zeros.iter().all(|&z| z == zeros[0]), || {
            format!("{cfg}: Dp({a}, {b}) == 0 per ψ: {zeros:?}")
        });

        if !reflexivity_gap.done() && a.len() > 1 {
            let d = entropy_distance(&a, &a, psi, &cfg);
            reflexivity_gap.witness(d > 0.0, || format!("{cfg} {psi}: Dp({a}, {a}) = {d}"));
        }
    }
    vec![symmetry, bounded, singleton, endpoints, psi_zero, reflexivity_gap]
}

fn mcdm_suites(s: &mut Sampler, samples: usize) -> Vec<SuiteResult> {
    let configs = EntropyConfig::all(1.0);
    let r1 = r1_configs();
    let mut simplex = SuiteResult::new("mcdm.weights_simplex", "w_j >= 0 and Σ w_j = 1 within 1e-9");
    let mut ranking = SuiteResult::new(
        "mcdm.closeness_ranking",
        "closeness in [0, 1]; ranking is the stable descending sort of closeness",
    );
    let mut scale = SuiteResult::new(
        "mcdm.normalization_scale_invariance",
        "scaling raw weights by c > 0 leaves normalized weights unchanged",
    );
    let mut ideals = SuiteResult::new(
        "mcdm.ideal_rows",
        "a row equal to the PIS has Cp = 1, a row equal to the NIS has Cp = 0 (R1-based configurations)",
    );
    let mut swap = SuiteResult::new(
        "mcdm.kind_swap",
        "flipping a criterion's kind swaps its D+ and D- contributions",
    );

    for i in 0..samples {
        let cfg = configs[i % configs.len()];
        let psi = PsiFunction::ALL[i % PsiFunction::ALL.len()];
        let m = s.matrix();

        if let Ok(w) = entropy_weights(&m, &cfg) {
            let total: f64 = w.normalized.iter().sum();
            simplex.check(w.normalized.iter().all(|&x| x >= 0.0) && (total - 1.0).abs() <= 1e-9, || {
                format!("{cfg}: weights {:?} (sum {total}) for {m:?}", w.normalized)
            });

            let c = 0.01 + 100.0 * s.unit();
            let scaled = WeightVector::from_raw(w.raw.iter().map(|r| r * c).collect());
            let plain = WeightVector::from_raw(w.raw.clone());
            if let (Ok(x), Ok(y)) = (scaled, plain) {
                let same = x
                    .normalized
                    .iter()
                    .zip(&y.normalized)
                    .all(|(p, q)| (p - q).abs() <= 1e-12);
                scale.check(same, || format!("c = {c}: {:?} vs {:?}", x.normalized, y.normalized));
            }
        }

        if let Ok(r) = run_topsis(&m, &cfg, psi) {
            let in_range = r.closeness.iter().all(|c| (0.0..=1.0).contains(c));
            let sorted = r.ranking.windows(2).all(|w| {
                let (x, y) = (r.closeness[w[0]], r.closeness[w[1]]);
                x > y || (x == y && w[0] < w[1])
            });
            ranking.check(in_range && sorted, || {
                format!("{cfg} {psi}: closeness {:?}, ranking {:?}", r.closeness, r.ranking)
            });
        }

        let rc = r1[i % r1.len()];
        let mut cells = m.cells().to_vec();
        let (pis, nis): (Vec<Phfe>, Vec<Phfe>) = m.criteria().iter().map(|c| c.kind.ideals()).unzip();
        cells.push(pis);
        cells.push(nis);
        let mut names = m.alternatives().to_vec();
        names.push("pis".into());
        names.push("nis".into());
        let extended = DecisionMatrix::new(names, m.criteria().to_vec(), cells).unwrap();
        if let Ok(r) = run_topsis(&extended, &rc, psi) {
            let k = extended.rows();
            let (best, worst) = (r.closeness[k - 2], r.closeness[k - 1]);
            ideals.check(best == 1.0 && worst == 0.0, || {
                format!("{rc} {psi}: Cp(PIS row) = {best}, Cp(NIS row) = {worst}")
            });
        }

        let j = s.rng().gen_range(0..m.cols());
        let before = cell_ideal_distances(&m, psi, &cfg);
        let after = cell_ideal_distances(&m.with_flipped_kind(j), psi, &cfg);
        let ok = before.iter().zip(&after).all(|(x, y)| {
            x.iter().zip(y).enumerate().all(|(col, (&(p, q), &(p2, q2)))| {
                if col == j {
                    p == q2 && q == p2
                } else {
                    p == p2 && q == q2
                }
            })
        });
        swap.check(ok, || format!("{cfg} {psi}: criterion {j}: before {before:?}, after {after:?}"));
    }
    vec![simplex, ranking, scale, ideals, swap]
}

/// Pairs of a hybrid list as plain tuples, used in reports.
pub fn describe_pairs(pairs: &[MembershipPair]) -> String {
    pairs
        .iter()
        .map(|p| format!("{}|{}", p.value, p.prob))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..50 {
            assert_eq!(a.phfe(), b.phfe());
        }
    }

    #[test]
    fn sampler_respects_invariants() {
        let mut s = Sampler::new(1);
        for _ in 0..500 {
            let p = s.phfe();
            assert!((1..=MAX_LEN).contains(&p.len()));
            let total: f64 = p.probs().sum();
            assert!((total - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn small_run_passes() {
        let report = run_suites(3, 300, None);
        for suite in &report.suites {
            assert!(suite.passed(), "{}: {:?}", suite.name, suite.counterexample);
            assert!(suite.checks > 0, "{} ran no checks", suite.name);
        }
    }

    #[test]
    fn mutated_complement_is_caught() {
        let report = run_suites(3, 300, Some(Mutation::Complement));
        let s = report.suite("entropy.complement_symmetry").unwrap();
        assert!(!s.passed());
        assert!(s.counterexample.as_deref().unwrap().contains("complement"));
    }
}
