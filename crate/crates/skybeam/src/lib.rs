//! Deterministic, seedable simulator and optimizer for a STAR-RIS-assisted
//! UAV virtual antenna array.
//!
//! The crate models the physical layer (array factor, LoS/Rayleigh/Rician
//! links, composite gains, sum rate), the rotary-wing energy budget, an
//! annealing controller for the STAR-RIS coefficients, and a multi-agent
//! soft actor-critic trainer with attention critics for the UAV swarm,
//! together with random and independent-learner baselines.
//!
//! Everything is driven by named, independently seeded random substreams:
//! identical seed and configuration reproduce a run bit for bit. Hot
//! data-parallel loops run on rayon under the `parallel` feature (default)
//! and fall back to sequential execution without it; both paths produce
//! identical floats.

pub mod channel;
pub mod energy;
pub mod error;
pub mod exec;
pub mod scenario;
pub mod star_ris;

pub use error::{Error, Result};
