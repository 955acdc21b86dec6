//! Deterministic random-number contract.
//!
//! All stochastic draws come from named ChaCha substreams derived from one
//! master seed. Identical seed and configuration therefore reproduce an
//! episode bit for bit, and the substreams are statistically independent
//! (distinct ChaCha stream ids over the same key).

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// One named substream.
pub type RngStream = ChaCha12Rng;

/// The full set of named substreams used by a simulation instance.
#[derive(Debug, Clone)]
pub struct RngStreams {
    /// Ground-user Gauss-Markov mobility.
    pub mobility: RngStream,
    /// Small-scale fading draws for the stochastic links.
    pub fading: RngStream,
    /// Policy sampling, replay sampling and velocity guidance.
    pub policy: RngStream,
    /// Candidate selection in the annealing controller.
    pub annealing: RngStream,
    /// Weight initialization and initial deployments.
    pub init: RngStream,
}

const STREAMS_PER_INSTANCE: u64 = 8;

impl RngStreams {
    pub fn new(seed: u64) -> Self {
        Self::instance(seed, 0)
    }

    /// Substreams for the `idx`-th concurrent instance under the same seed.
    pub fn instance(seed: u64, idx: u64) -> Self {
        let stream = |k: u64| {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            rng.set_stream(idx * STREAMS_PER_INSTANCE + k);
            rng
        };
        Self {
            mobility: stream(0),
            fading: stream(1),
            policy: stream(2),
            annealing: stream(3),
            init: stream(4),
        }
    }
}
