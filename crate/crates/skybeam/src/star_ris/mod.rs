//! STAR-RIS coefficient state under the energy-splitting protocol, the
//! annealing controller that retunes it each slot, and an exhaustive-search
//! oracle for tiny instances.

mod atso;
mod oracle;

pub use atso::{atso_optimize, candidate_metric, candidate_sets, select_candidate, state_metric, AnnealSchedule, CandidateSet};
pub use oracle::{exhaustive_oracle, matched_comparison, OracleComparison, OracleOutcome};

use crate::scenario::SaCfg;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Per-element energy-splitting state: reflection amplitude share `a_R` in
/// [0, 1] and two independent phase shifts in [0, 2pi). The transmission
/// amplitude share is implicit (`a_T = 1 - a_R`), so the energy-conservation
/// constraint `a_R + a_T = 1` holds exactly by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarRisState {
    pub amp_r: Vec<f64>,
    pub phase_r: Vec<f64>,
    pub phase_t: Vec<f64>,
}

/// Wrap a phase to [0, 2pi).
pub fn wrap_phase(theta: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut t = theta % tau;
    if t < 0.0 {
        t += tau;
    }
    t
}

impl StarRisState {
    /// Even split, zero phases.
    pub fn new(n_elements: usize) -> Self {
        Self {
            amp_r: vec![0.5; n_elements],
            phase_r: vec![0.0; n_elements],
            phase_t: vec![0.0; n_elements],
        }
    }

    pub fn len(&self) -> usize {
        self.amp_r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amp_r.is_empty()
    }

    /// Transmission amplitude share of element `s`.
    pub fn amp_t(&self, s: usize) -> f64 {
        1.0 - self.amp_r[s]
    }

    /// Reflection coefficient of element `s`: `sqrt(a_R) e^{j theta_R}`.
    pub fn reflection_coeff(&self, s: usize) -> Complex64 {
        Complex64::from_polar(self.amp_r[s].sqrt(), self.phase_r[s])
    }

    /// Transmission coefficient of element `s`: `sqrt(1 - a_R) e^{j theta_T}`.
    pub fn transmission_coeff(&self, s: usize) -> Complex64 {
        Complex64::from_polar(self.amp_t(s).sqrt(), self.phase_t[s])
    }

    /// Diagonals of the reflection and transmission coefficient matrices.
    pub fn coefficient_matrices(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let refl = (0..self.len()).map(|s| self.reflection_coeff(s)).collect();
        let trans = (0..self.len()).map(|s| self.transmission_coeff(s)).collect();
        (refl, trans)
    }

    /// Replace element `s` with explicit coefficients, wrapping phases.
    pub fn set_element(&mut self, s: usize, amp_r: f64, phase_r: f64, phase_t: f64) {
        self.amp_r[s] = amp_r.clamp(0.0, 1.0);
        self.phase_r[s] = wrap_phase(phase_r);
        self.phase_t[s] = wrap_phase(phase_t);
    }
}

impl AnnealSchedule {
    pub fn from_cfg(cfg: &SaCfg) -> Self {
        Self { t_init: cfg.t_init, cooling: cfg.cooling, t_min: cfg.t_min }
    }
}
