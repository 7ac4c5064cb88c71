//! Seeded sampling of small-height rational pencil parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, Cyc8, Rational};
use crate::elliptic::nondegenerate_params;

/// Bound on |numerator| and denominator of sampled rationals.
pub const MAX_HEIGHT: i64 = 50;

/// Deterministic stream of rationals n/d with 0 < |n| ≤ 50 and 0 < d ≤ 50.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_nonzero(&mut self) -> Rational {
        let n = self.rng.gen_range(1..=MAX_HEIGHT);
        let sign = if self.rng.gen_bool(0.5) { -1 } else { 1 };
        let d = self.rng.gen_range(1..=MAX_HEIGHT);
        rat(sign * n, d)
    }

    /// A pair (s₀, t₀) whose member is not one of the three tetrahedra.
    pub fn next_pencil_point(&mut self) -> (Rational, Rational) {
        loop {
            let s0 = self.next_nonzero();
            let t0 = self.next_nonzero();
            let ok = nondegenerate_params(
                &Cyc8::from_rational(s0.clone()),
                &Cyc8::from_rational(t0.clone()),
            )
            .is_ok();
            if ok {
                return (s0, t0);
            }
        }
    }
}

/// `count` non-degenerate parameter pairs from `seed`.
pub fn sample_pencil_points(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut sampler = RationalSampler::new(seed);
    (0..count).map(|_| sampler.next_pencil_point()).collect()
}
