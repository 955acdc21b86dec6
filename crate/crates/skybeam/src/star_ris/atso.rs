//! Per-slot annealing controller for the STAR-RIS coefficients.
//!
//! One invocation runs a single coordinate-descent sweep over the elements.
//! Each element is offered a temperature-scaled candidate grid around its
//! current coefficients; candidates are scored by the joint signal metric
//! `|S_k + S_j|^2`, selected by temperature-scaled multinomial sampling while
//! `T > T_min` and greedily afterwards, and the temperature cools once per
//! element. The temperature restarts at `T_init` on every invocation.

use crate::channel::ChannelRealization;
use crate::error::{Error, Result};
use crate::scenario::{RngStream, SaCfg};
use crate::star_ris::{wrap_phase, StarRisState};
use num_complex::Complex64;
use rand::Rng;

/// Cooling schedule of one ATSO invocation.
#[derive(Debug, Clone, Copy)]
pub struct AnnealSchedule {
    pub t_init: f64,
    pub cooling: f64,
    pub t_min: f64,
}

/// Candidate coefficient values for one element; the grid offered to the
/// selection step is the Cartesian product of the three lists.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub amps: Vec<f64>,
    pub phases_r: Vec<f64>,
    pub phases_t: Vec<f64>,
}

impl CandidateSet {
    pub fn combination_count(&self) -> usize {
        self.amps.len() * self.phases_r.len() * self.phases_t.len()
    }

    /// Candidates in deterministic order: amplitude-major, then reflection
    /// phase, then transmission phase. Index 0 is always the current value.
    pub fn combinations(&self) -> Vec<(f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.combination_count());
        for &a in &self.amps {
            for &pr in &self.phases_r {
                for &pt in &self.phases_t {
                    out.push((a, pr, pt));
                }
            }
        }
        out
    }
}

/// Offset multipliers 0, +1, -1, +2, -2, ... truncated to `count`.
fn offset_ladder(count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    let mut k = 1.0;
    out.push(0.0);
    while out.len() < count {
        out.push(k);
        if out.len() < count {
            out.push(-k);
        }
        k += 1.0;
    }
    out
}

/// Temperature-scaled candidate grid around the current element coefficients
/// `(amp_r, phase_r, phase_t)`. Amplitude offsets are clipped to [0, 1] and
/// phase offsets wrap; the current value is always candidate 0 of each list.
pub fn candidate_sets(
    current: (f64, f64, f64),
    t: f64,
    sched: &AnnealSchedule,
    cfg: &SaCfg,
) -> CandidateSet {
    let scale = t / sched.t_init;
    let da = cfg.delta_amp * scale;
    let dp = cfg.delta_phase * scale;
    let amps = offset_ladder(cfg.amp_candidates)
        .iter()
        .map(|k| (current.0 + k * da).clamp(0.0, 1.0))
        .collect();
    let phase_list = |base: f64| -> Vec<f64> {
        offset_ladder(cfg.phase_candidates)
            .iter()
            .map(|k| wrap_phase(base + k * dp))
            .collect()
    };
    CandidateSet {
        amps,
        phases_r: phase_list(current.1),
        phases_t: phase_list(current.2),
    }
}

/// Joint signal contribution `S_k + S_j` of a state, with one element
/// replaced by candidate coefficients.
fn joint_signal(
    chan: &ChannelRealization,
    state: &StarRisState,
    element: usize,
    candidate: (f64, f64, f64),
) -> Complex64 {
    let (a, pr, pt) = candidate;
    let mut acc = chan.h_mk + chan.h_mj;
    for s in 0..state.len() {
        let (refl, trans) = if s == element {
            (
                Complex64::from_polar(a.clamp(0.0, 1.0).sqrt(), pr),
                Complex64::from_polar((1.0 - a.clamp(0.0, 1.0)).sqrt(), pt),
            )
        } else {
            (state.reflection_coeff(s), state.transmission_coeff(s))
        };
        acc += chan.h_ms[s] * (refl * chan.h_sk[s] + trans * chan.h_sj[s]);
    }
    acc
}

/// Metric `|S_k + S_j|^2` of the state with `candidate` substituted at
/// `element`.
pub fn candidate_metric(
    chan: &ChannelRealization,
    state: &StarRisState,
    element: usize,
    candidate: (f64, f64, f64),
) -> f64 {
    joint_signal(chan, state, element, candidate).norm_sqr()
}

/// Pick a candidate index: multinomial sampling proportional to
/// `softmax(metrics / T)` while `T > T_min`, exact argmax (lowest index on
/// ties) at or below `T_min`.
pub fn select_candidate(
    metrics: &[f64],
    t: f64,
    t_min: f64,
    rng: &mut RngStream,
) -> Result<usize> {
    if metrics.is_empty() {
        return Err(Error::Numeric("no candidates to select from".into()));
    }
    let mut best = 0usize;
    let mut best_val = f64::NEG_INFINITY;
    for (i, &m) in metrics.iter().enumerate() {
        if m.is_nan() {
            return Err(Error::Numeric(format!("candidate metric {i} is NaN")));
        }
        if m > best_val {
            best_val = m;
            best = i;
        }
    }
    if best_val == f64::NEG_INFINITY {
        return Err(Error::Numeric("all candidate metrics are -inf".into()));
    }
    if t <= t_min {
        return Ok(best);
    }
    let weights: Vec<f64> = metrics.iter().map(|&m| ((m - best_val) / t).exp()).collect();
    let total: f64 = weights.iter().sum();
    let u = rng.gen::<f64>() * total;
    let mut cum = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        cum += w;
        if u < cum {
            return Ok(i);
        }
    }
    Ok(metrics.len() - 1)
}

/// One annealing sweep over all elements; returns the retuned state.
pub fn atso_optimize(
    chan: &ChannelRealization,
    state: &StarRisState,
    sched: &AnnealSchedule,
    cfg: &SaCfg,
    rng: &mut RngStream,
) -> Result<StarRisState> {
    let mut st = state.clone();
    let mut t = sched.t_init;
    for s in 0..st.len() {
        let current = (st.amp_r[s], st.phase_r[s], st.phase_t[s]);
        let combos = candidate_sets(current, t, sched, cfg).combinations();
        let metrics: Vec<f64> =
            combos.iter().map(|&c| candidate_metric(chan, &st, s, c)).collect();
        let idx = select_candidate(&metrics, t, sched.t_min, rng)?;
        let (a, pr, pt) = combos[idx];
        st.set_element(s, a, pr, pt);
        t = (sched.cooling * t).max(sched.t_min);
    }
    Ok(st)
}

/// Current joint metric of a state (no substitution); used to compare ATSO
/// output against the exhaustive oracle.
pub fn state_metric(chan: &ChannelRealization, state: &StarRisState) -> f64 {
    if state.is_empty() {
        return (chan.h_mk + chan.h_mj).norm_sqr();
    }
    candidate_metric(chan, state, 0, (state.amp_r[0], state.phase_r[0], state.phase_t[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::RngStreams;

    fn schedule() -> AnnealSchedule {
        AnnealSchedule { t_init: 1.0, cooling: 0.95, t_min: 0.1 }
    }

    fn toy_channel(n: usize) -> ChannelRealization {
        // fixed, reproducible pseudo-channel
        let c = |k: f64| Complex64::new((k * 0.9).sin(), (k * 1.7).cos());
        ChannelRealization {
            h_ms: (0..n).map(|s| c(s as f64 + 0.1)).collect(),
            h_sk: (0..n).map(|s| c(s as f64 + 7.5)).collect(),
            h_sj: (0..n).map(|s| c(s as f64 + 3.9)).collect(),
            h_mk: c(21.0),
            h_mj: c(33.0),
        }
    }

    #[test]
    fn candidate_count_is_cartesian_product() {
        let cfg = SaCfg::default();
        let cs = candidate_sets((0.5, 1.0, 2.0), 1.0, &schedule(), &cfg);
        assert_eq!(cs.amps.len(), cfg.amp_candidates);
        assert_eq!(cs.phases_r.len(), cfg.phase_candidates);
        assert_eq!(cs.phases_t.len(), cfg.phase_candidates);
        assert_eq!(cs.combination_count(), 3 * 4 * 4);
        assert_eq!(cs.combinations().len(), 48);
    }

    #[test]
    fn candidates_cluster_at_low_temperature() {
        let cfg = SaCfg::default();
        let sched = schedule();
        let cs = candidate_sets((0.5, 1.0, 2.0), sched.t_min, &sched, &cfg);
        let bound = cfg.delta_amp * sched.t_min / sched.t_init + 1e-15;
        for &a in &cs.amps {
            assert!((a - 0.5).abs() <= bound, "amp {a}");
        }
    }

    #[test]
    fn clipping_keeps_amplitudes_in_range() {
        let cfg = SaCfg::default();
        let cs = candidate_sets((0.0, 0.0, 0.0), 1.0, &schedule(), &cfg);
        assert!(cs.amps.iter().all(|&a| (0.0..=1.0).contains(&a)));
        assert!(cs.amps.iter().any(|&a| a == 0.0));
    }

    #[test]
    fn metric_of_zero_channel_is_zero() {
        let chan = ChannelRealization {
            h_ms: vec![Complex64::new(0.0, 0.0)],
            h_sk: vec![Complex64::new(0.0, 0.0)],
            h_sj: vec![Complex64::new(0.0, 0.0)],
            h_mk: Complex64::new(0.0, 0.0),
            h_mj: Complex64::new(0.0, 0.0),
        };
        let st = StarRisState::new(1);
        assert_eq!(candidate_metric(&chan, &st, 0, (1.0, 0.0, 0.0)), 0.0);
    }

    #[test]
    fn metric_single_element_hand_value() {
        // h_MS = 1, h_SK = 1, everything else 0; full reflection at zero
        // phase puts all energy on the K path: |1*1*1|^2 = 1.
        let chan = ChannelRealization {
            h_ms: vec![Complex64::new(1.0, 0.0)],
            h_sk: vec![Complex64::new(1.0, 0.0)],
            h_sj: vec![Complex64::new(0.0, 0.0)],
            h_mk: Complex64::new(0.0, 0.0),
            h_mj: Complex64::new(0.0, 0.0),
        };
        let st = StarRisState::new(1);
        let m = candidate_metric(&chan, &st, 0, (1.0, 0.0, 0.0));
        assert!((m - 1.0).abs() < 1e-15);
    }

    #[test]
    fn argmax_below_minimum_temperature() {
        let mut rng = RngStreams::new(0).annealing;
        let idx = select_candidate(&[1.0, 3.0, 2.0], 0.05, 0.1, &mut rng).unwrap();
        assert_eq!(idx, 1);
        // ties break toward the lowest index
        let idx = select_candidate(&[3.0, 3.0, 1.0], 0.05, 0.1, &mut rng).unwrap();
        assert_eq!(idx, 0);
    }

    #[test]
    fn flat_metrics_sample_uniformly_at_high_temperature() {
        let mut rng = RngStreams::new(1).annealing;
        let metrics = [5.0, 5.0, 5.0, 5.0];
        let mut counts = [0usize; 4];
        let n = 100_000;
        for _ in 0..n {
            counts[select_candidate(&metrics, 1e9, 0.1, &mut rng).unwrap()] += 1;
        }
        for (i, &c) in counts.iter().enumerate() {
            let freq = c as f64 / n as f64;
            assert!((freq - 0.25).abs() < 0.03 * 0.25 + 0.01, "index {i}: freq {freq}");
        }
    }

    #[test]
    fn dominant_metric_selected_almost_surely() {
        let mut rng = RngStreams::new(2).annealing;
        let metrics = [0.0, 1e6];
        let n = 10_000;
        let mut hits = 0;
        for _ in 0..n {
            if select_candidate(&metrics, 1.0, 0.1, &mut rng).unwrap() == 1 {
                hits += 1;
            }
        }
        assert!(hits as f64 / n as f64 > 0.999);
    }

    #[test]
    fn empirical_frequencies_match_softmax() {
        // acceptance law: frequency of each candidate matches
        // softmax(metrics / T) within 2% over 1e5 trials
        let metrics = [1.0f64, 2.5, 0.5];
        let t = 1.5f64;
        let max = 2.5f64;
        let weights: Vec<f64> = metrics.iter().map(|m| ((m - max) / t).exp()).collect();
        let total: f64 = weights.iter().sum();
        let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
        let mut rng = RngStreams::new(3).annealing;
        let n = 100_000;
        let mut counts = [0usize; 3];
        for _ in 0..n {
            counts[select_candidate(&metrics, t, 0.1, &mut rng).unwrap()] += 1;
        }
        for i in 0..3 {
            let freq = counts[i] as f64 / n as f64;
            assert!((freq - probs[i]).abs() < 0.02, "index {i}: {freq} vs {}", probs[i]);
        }
    }

    #[test]
    fn all_neg_infinite_metrics_rejected() {
        let mut rng = RngStreams::new(0).annealing;
        assert!(select_candidate(&[f64::NEG_INFINITY; 3], 1.0, 0.1, &mut rng).is_err());
        assert!(select_candidate(&[], 1.0, 0.1, &mut rng).is_err());
    }

    #[test]
    fn zero_deltas_leave_state_unchanged() {
        let mut cfg = SaCfg::default();
        cfg.delta_amp = 0.0;
        cfg.delta_phase = 0.0;
        let chan = toy_channel(4);
        let mut st = StarRisState::new(4);
        st.set_element(2, 0.8, 1.0, 2.0);
        let mut rng = RngStreams::new(4).annealing;
        let out = atso_optimize(&chan, &st, &schedule(), &cfg, &mut rng).unwrap();
        assert_eq!(out, st);
    }

    #[test]
    fn greedy_sweep_never_decreases_metric() {
        let cfg = SaCfg::default();
        let sched = AnnealSchedule { t_init: 0.1, cooling: 0.95, t_min: 0.1 };
        let chan = toy_channel(6);
        let st = StarRisState::new(6);
        let before = state_metric(&chan, &st);
        let mut rng = RngStreams::new(5).annealing;
        let out = atso_optimize(&chan, &st, &sched, &cfg, &mut rng).unwrap();
        let after = state_metric(&chan, &out);
        assert!(after >= before, "metric fell from {before} to {after}");
    }

    #[test]
    fn optimizer_is_deterministic_per_seed() {
        let cfg = SaCfg::default();
        let chan = toy_channel(5);
        let st = StarRisState::new(5);
        let mut a = RngStreams::new(6).annealing;
        let mut b = RngStreams::new(6).annealing;
        let out_a = atso_optimize(&chan, &st, &schedule(), &cfg, &mut a).unwrap();
        let out_b = atso_optimize(&chan, &st, &schedule(), &cfg, &mut b).unwrap();
        assert_eq!(out_a, out_b);
    }
}
