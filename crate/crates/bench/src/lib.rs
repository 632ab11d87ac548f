//! Input builders shared by the benchmarks.

use phfe_core::axioms::Sampler;
use phfe_core::Phfe;

/// `n` seeded PHFEs of length `len`.
pub fn sample_phfes(seed: u64, n: usize, len: usize) -> Vec<Phfe> {
    let mut s = Sampler::new(seed);
    (0..n).map(|_| s.phfe_with_len(len)).collect()
}
