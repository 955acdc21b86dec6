//! Scenario configuration: TOML sections `[region]`, `[ris]`, `[radio]`,
//! `[mobility]`, `[energy]`, `[sa]`, `[train]`.
//!
//! Every key has a default, so an empty file is a valid configuration.
//! Unknown keys are rejected with the offending key name in the message.

use crate::error::{Error, Result};
use crate::scenario::Position3;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Speed of light, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Axis-aligned ground rectangle `[x_min, x_max] x [y_min, y_max]`, meters.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }

    pub fn center(&self) -> (f64, f64) {
        ((self.x_min + self.x_max) / 2.0, (self.y_min + self.y_max) / 2.0)
    }
}

/// UAV operating region and kinematic bounds.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RegionCfg {
    /// Horizontal box `[l_min, l_max]^2`, meters.
    pub l_min: f64,
    pub l_max: f64,
    /// Altitude band, meters.
    pub h_min: f64,
    pub h_max: f64,
    /// Minimum pairwise UAV separation, meters.
    pub d_min: f64,
    /// Swarm size N_M.
    pub n_uavs: usize,
    /// Horizontal speed bounds, m/s.
    pub v_min: f64,
    pub v_max: f64,
    /// Vertical speed bounds, m/s.
    pub omega_min: f64,
    pub omega_max: f64,
    /// Reference point xi for the boundary-avoidance reward term; defaults to
    /// the box center when absent.
    pub reference_point: Option<[f64; 3]>,
}

impl Default for RegionCfg {
    fn default() -> Self {
        Self {
            l_min: 0.0,
            l_max: 100.0,
            h_min: 60.0,
            h_max: 90.0,
            d_min: 0.5,
            n_uavs: 8,
            v_min: 0.0,
            v_max: 20.0,
            omega_min: -5.0,
            omega_max: 5.0,
            reference_point: None,
        }
    }
}

impl RegionCfg {
    pub fn reference_point(&self) -> Position3 {
        match self.reference_point {
            Some([x, y, z]) => Position3::new(x, y, z),
            None => Position3::new(
                (self.l_min + self.l_max) / 2.0,
                (self.l_min + self.l_max) / 2.0,
                (self.h_min + self.h_max) / 2.0,
            ),
        }
    }

    pub fn contains(&self, p: &Position3) -> bool {
        p.x >= self.l_min
            && p.x <= self.l_max
            && p.y >= self.l_min
            && p.y <= self.l_max
            && p.z >= self.h_min
            && p.z <= self.h_max
    }
}

/// STAR-RIS placement and element grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RisCfg {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// Total element count N_S; must equal `rows * cols`.
    pub n_elements: usize,
    pub rows: usize,
    pub cols: usize,
    /// Element spacings in meters; half a carrier wavelength when absent.
    pub row_spacing: Option<f64>,
    pub col_spacing: Option<f64>,
}

impl Default for RisCfg {
    fn default() -> Self {
        Self {
            x: 1500.0,
            y: 1500.0,
            z: 20.0,
            n_elements: 60,
            rows: 6,
            cols: 10,
            row_spacing: None,
            col_spacing: None,
        }
    }
}

impl RisCfg {
    pub fn position(&self) -> Position3 {
        Position3::new(self.x, self.y, self.z)
    }
}

/// Carrier, power, noise, path loss and gain-evaluation parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RadioCfg {
    pub carrier_hz: f64,
    pub bandwidth_hz: f64,
    /// Total UVAA transmit power P_t, watts.
    pub tx_power_w: f64,
    /// Noise power spectral density, dBm/Hz; sets sigma^2 together with the
    /// bandwidth unless `noise_power_w` overrides it.
    pub noise_psd_dbm_hz: f64,
    pub noise_power_w: Option<f64>,
    /// Reference path gain at 1 m, linear.
    pub path_loss_ref: f64,
    /// Path loss exponent of the direct UVAA-user links.
    pub alpha_direct: f64,
    /// Path loss exponent of the RIS-user links.
    pub alpha_ris: f64,
    /// Rician K-factor of the RIS-user links, linear.
    pub rician_beta: f64,
    /// Array efficiency in [0, 1].
    pub array_efficiency: f64,
    /// Per-element far-field pattern; only "isotropic" is defined.
    pub element_pattern: String,
    /// Quadrature grid for the pattern integral.
    pub pattern_n_theta: usize,
    pub pattern_n_phi: usize,
    /// Per-side minimum rate requirements, bit/s.
    pub rate_floor_k_bps: f64,
    pub rate_floor_j_bps: f64,
}

impl Default for RadioCfg {
    fn default() -> Self {
        Self {
            carrier_hz: 2.4e9,
            bandwidth_hz: 2.0e6,
            tx_power_w: 0.1,
            noise_psd_dbm_hz: -155.0,
            noise_power_w: None,
            path_loss_ref: 1e-3,
            alpha_direct: 3.6,
            alpha_ris: 2.7,
            rician_beta: 1.9952623149688795, // 3 dB
            array_efficiency: 1.0,
            element_pattern: "isotropic".to_string(),
            pattern_n_theta: 90,
            pattern_n_phi: 180,
            rate_floor_k_bps: 1e5,
            rate_floor_j_bps: 1e5,
        }
    }
}

impl RadioCfg {
    pub fn wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.carrier_hz
    }

    pub fn wavenumber(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.wavelength()
    }

    /// Noise power sigma^2 in watts.
    pub fn noise_power(&self) -> f64 {
        self.noise_power_w
            .unwrap_or_else(|| 10f64.powf((self.noise_psd_dbm_hz - 30.0) / 10.0) * self.bandwidth_hz)
    }
}

/// Gauss-Markov user mobility and per-side movement rectangles.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MobilityCfg {
    /// Memory factor mu in [0, 1].
    pub memory_factor: f64,
    /// Asymptotic mean speed, m/s.
    pub mean_speed: f64,
    pub speed_noise_std: f64,
    pub heading_noise_std: f64,
    /// Same-side (reflection) user rectangle.
    pub k_rect: Rect,
    /// Opposite-side (transmission) user rectangle.
    pub j_rect: Rect,
    pub n_users_k: usize,
    pub n_users_j: usize,
}

impl Default for MobilityCfg {
    fn default() -> Self {
        Self {
            memory_factor: 0.8,
            mean_speed: 1.0,
            speed_noise_std: 0.3,
            heading_noise_std: 0.1,
            k_rect: Rect {
                x_min: 1480.0,
                x_max: 1530.0,
                y_min: 1400.0,
                y_max: 1490.0,
            },
            j_rect: Rect {
                x_min: 1480.0,
                x_max: 1530.0,
                y_min: 1510.0,
                y_max: 1600.0,
            },
            n_users_k: 1,
            n_users_j: 1,
        }
    }
}

impl MobilityCfg {
    pub fn rect_for(&self, side: crate::scenario::Side) -> Rect {
        match side {
            crate::scenario::Side::Reflection => self.k_rect,
            crate::scenario::Side::Transmission => self.j_rect,
        }
    }
}

/// Rotary-wing aerodynamic parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EnergyCfg {
    pub mass_kg: f64,
    pub gravity: f64,
    pub tip_speed: f64,
    /// Mean rotor-induced velocity in hover, m/s.
    pub rotor_induced_v: f64,
    pub air_density: f64,
    pub disc_area: f64,
    pub drag_ratio: f64,
    pub solidity: f64,
    /// Blade-profile hover power P_B, watts; derived from the airframe
    /// parameters when absent.
    pub blade_power_w: Option<f64>,
    /// Induced hover power P_I, watts; derived when absent.
    pub induced_power_w: Option<f64>,
    /// Profile drag coefficient used to derive P_B.
    pub profile_drag_coeff: f64,
    /// Incremental correction factor used to derive P_I.
    pub induced_factor: f64,
}

impl Default for EnergyCfg {
    fn default() -> Self {
        Self {
            mass_kg: 2.0,
            gravity: 9.8,
            tip_speed: 120.0,
            rotor_induced_v: 4.03,
            air_density: 1.225,
            disc_area: 0.503,
            drag_ratio: 0.6,
            solidity: 0.05,
            blade_power_w: None,
            induced_power_w: None,
            profile_drag_coeff: 0.012,
            induced_factor: 0.1,
        }
    }
}

/// Simulated-annealing schedule and candidate-set geometry for the STAR-RIS
/// controller.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SaCfg {
    pub t_init: f64,
    pub cooling: f64,
    pub t_min: f64,
    /// Amplitude perturbation half-width at T = T_init.
    pub delta_amp: f64,
    /// Phase perturbation step at T = T_init, radians.
    pub delta_phase: f64,
    pub amp_candidates: usize,
    pub phase_candidates: usize,
}

impl Default for SaCfg {
    fn default() -> Self {
        Self {
            t_init: 1.0,
            cooling: 0.95,
            t_min: 0.1,
            delta_amp: 0.25,
            delta_phase: std::f64::consts::FRAC_PI_4,
            amp_candidates: 3,
            phase_candidates: 4,
        }
    }
}

/// Mission timing, learning hyperparameters, reward weights and ablations.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainCfg {
    /// Episode count N_E.
    pub episodes: usize,
    /// Slots per episode N_L.
    pub slots: usize,
    /// Slot duration, seconds.
    pub slot_duration: f64,
    /// Gradient update rounds per slot N_U.
    pub updates_per_slot: usize,
    pub batch: usize,
    pub buffer_capacity: usize,
    pub gamma: f64,
    pub tau: f64,
    /// Entropy temperature alpha.
    pub entropy_alpha: f64,
    pub learning_rate: f64,
    /// Hidden width of policy and critic MLPs.
    pub hidden: usize,
    /// Attention key dimension d_k.
    pub attn_dim: usize,
    /// Std of the guidance velocity in the adaptive velocity transition.
    pub sigma_b: f64,
    /// Objective weights: rate in Mbit/s, energy in joules.
    pub lambda1: f64,
    pub lambda2: f64,
    /// Guidance weights: RIS-direction cosine and reference-point distance.
    pub zeta1: f64,
    pub zeta2: f64,
    /// Base penalty weight epsilon in (0, 1].
    pub epsilon: f64,
    /// Ablation switches.
    pub attention: bool,
    pub velocity_guidance: bool,
    pub twin_critic: bool,
    /// Checkpoint cadence, episodes.
    pub checkpoint_every: usize,
}

impl Default for TrainCfg {
    fn default() -> Self {
        Self {
            episodes: 3000,
            slots: 100,
            slot_duration: 1.0,
            updates_per_slot: 1,
            batch: 256,
            buffer_capacity: 100_000,
            gamma: 0.90,
            tau: 0.005,
            entropy_alpha: 0.01,
            learning_rate: 0.0007,
            hidden: 128,
            attn_dim: 64,
            sigma_b: 1.0,
            lambda1: 1.0,
            lambda2: 0.01,
            zeta1: 1.0,
            zeta2: 0.01,
            epsilon: 0.2,
            attention: true,
            velocity_guidance: true,
            twin_critic: false,
            checkpoint_every: 100,
        }
    }
}

/// The whole scenario file.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Master seed for all random substreams.
    pub seed: u64,
    pub region: RegionCfg,
    pub ris: RisCfg,
    pub radio: RadioCfg,
    pub mobility: MobilityCfg,
    pub energy: EnergyCfg,
    pub sa: SaCfg,
    pub train: TrainCfg,
}

impl Config {
    /// Parse and validate a TOML scenario file. An empty file yields the
    /// documented defaults.
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ConfigParse(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Config> {
        let cfg: Config =
            toml::from_str(text).map_err(|e| Error::ConfigParse(e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// SHA-256 of the canonical TOML form; ties checkpoints to the exact
    /// resolved configuration.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(self.to_toml().as_bytes());
        let digest = h.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let err = |msg: String| Err(Error::Config(msg));
        let r = &self.region;
        if !(r.l_min < r.l_max) {
            return err(format!("region.l_min ({}) must be < region.l_max ({})", r.l_min, r.l_max));
        }
        if !(r.h_min < r.h_max) {
            return err(format!("region.h_min ({}) must be < region.h_max ({})", r.h_min, r.h_max));
        }
        if r.h_min < 0.0 {
            return err("region.h_min must be nonnegative".into());
        }
        if r.d_min <= 0.0 {
            return err("region.d_min must be positive".into());
        }
        if r.n_uavs == 0 {
            return err("region.n_uavs must be at least 1".into());
        }
        if r.v_min < 0.0 || r.v_min > r.v_max {
            return err("region.v_min must satisfy 0 <= v_min <= v_max".into());
        }
        if r.omega_min > r.omega_max {
            return err("region.omega_min must be <= region.omega_max".into());
        }

        let ris = &self.ris;
        if ris.n_elements == 0 {
            return err("ris.n_elements must be at least 1".into());
        }
        if ris.rows * ris.cols != ris.n_elements {
            return err(format!(
                "ris.n_elements ({}) must equal ris.rows * ris.cols ({} * {})",
                ris.n_elements, ris.rows, ris.cols
            ));
        }
        for (key, v) in [("ris.row_spacing", ris.row_spacing), ("ris.col_spacing", ris.col_spacing)] {
            if let Some(v) = v {
                if v <= 0.0 {
                    return err(format!("{key} must be positive"));
                }
            }
        }

        let radio = &self.radio;
        if radio.carrier_hz <= 0.0 {
            return err("radio.carrier_hz must be positive".into());
        }
        if radio.bandwidth_hz <= 0.0 {
            return err("radio.bandwidth_hz must be positive".into());
        }
        if radio.tx_power_w <= 0.0 {
            return err("P_t must be positive (radio.tx_power_w)".into());
        }
        if radio.noise_power() <= 0.0 {
            return err("radio noise power must be positive".into());
        }
        if radio.path_loss_ref <= 0.0 {
            return err("radio.path_loss_ref must be positive".into());
        }
        if radio.alpha_direct <= 0.0 || radio.alpha_ris <= 0.0 {
            return err("radio path loss exponents must be positive".into());
        }
        if radio.rician_beta < 0.0 {
            return err("radio.rician_beta must be nonnegative".into());
        }
        if !(0.0..=1.0).contains(&radio.array_efficiency) {
            return err("radio.array_efficiency must lie in [0, 1]".into());
        }
        if radio.element_pattern != "isotropic" {
            return err(format!(
                "radio.element_pattern '{}' is not supported (expected \"isotropic\")",
                radio.element_pattern
            ));
        }
        if radio.pattern_n_theta < 8 {
            return err("radio.pattern_n_theta must be at least 8".into());
        }
        if radio.pattern_n_phi < 8 {
            return err("radio.pattern_n_phi must be at least 8".into());
        }
        if radio.rate_floor_k_bps < 0.0 || radio.rate_floor_j_bps < 0.0 {
            return err("radio rate floors must be nonnegative".into());
        }

        let m = &self.mobility;
        if !(0.0..=1.0).contains(&m.memory_factor) {
            return err("mobility.memory_factor must lie in [0, 1]".into());
        }
        if m.mean_speed < 0.0 || m.speed_noise_std < 0.0 || m.heading_noise_std < 0.0 {
            return err("mobility speeds and noise stds must be nonnegative".into());
        }
        for (key, rect) in [("mobility.k_rect", &m.k_rect), ("mobility.j_rect", &m.j_rect)] {
            if !(rect.x_min <= rect.x_max && rect.y_min <= rect.y_max) {
                return err(format!("{key} must have min <= max on both axes"));
            }
        }
        if m.n_users_k == 0 || m.n_users_j == 0 {
            return err("mobility.n_users_k and mobility.n_users_j must be at least 1".into());
        }

        let e = &self.energy;
        for (key, v) in [
            ("energy.mass_kg", e.mass_kg),
            ("energy.gravity", e.gravity),
            ("energy.tip_speed", e.tip_speed),
            ("energy.rotor_induced_v", e.rotor_induced_v),
            ("energy.air_density", e.air_density),
            ("energy.disc_area", e.disc_area),
            ("energy.drag_ratio", e.drag_ratio),
            ("energy.solidity", e.solidity),
            ("energy.profile_drag_coeff", e.profile_drag_coeff),
        ] {
            if v <= 0.0 {
                return err(format!("{key} must be positive"));
            }
        }
        if e.induced_factor < 0.0 {
            return err("energy.induced_factor must be nonnegative".into());
        }
        if e.tip_speed <= e.rotor_induced_v {
            return err("energy.tip_speed must exceed energy.rotor_induced_v".into());
        }
        for (key, v) in [("energy.blade_power_w", e.blade_power_w), ("energy.induced_power_w", e.induced_power_w)] {
            if let Some(v) = v {
                if v <= 0.0 {
                    return err(format!("{key} must be positive"));
                }
            }
        }

        let sa = &self.sa;
        if !(sa.t_min > 0.0) {
            return err("sa.t_min must be positive".into());
        }
        if sa.t_init < sa.t_min {
            return err("sa.t_init must be >= sa.t_min".into());
        }
        if !(sa.cooling > 0.0 && sa.cooling < 1.0) {
            return err("sa.cooling must lie in (0, 1)".into());
        }
        if sa.delta_amp < 0.0 || sa.delta_phase < 0.0 {
            return err("sa.delta_amp and sa.delta_phase must be nonnegative".into());
        }
        if sa.amp_candidates == 0 || sa.phase_candidates == 0 {
            return err("sa candidate counts must be at least 1".into());
        }

        let t = &self.train;
        if !(0.0..1.0).contains(&t.gamma) {
            return err("train.gamma must lie in [0, 1)".into());
        }
        if !(t.tau > 0.0 && t.tau <= 1.0) {
            return err("train.tau must lie in (0, 1]".into());
        }
        if t.slots == 0 {
            return err("train.slots must be at least 1".into());
        }
        if t.slot_duration <= 0.0 {
            return err("train.slot_duration must be positive".into());
        }
        if t.batch == 0 || t.batch > t.buffer_capacity {
            return err("train.batch must satisfy 1 <= batch <= buffer_capacity".into());
        }
        if t.learning_rate <= 0.0 {
            return err("train.learning_rate must be positive".into());
        }
        if !(t.epsilon > 0.0 && t.epsilon <= 1.0) {
            return err("train.epsilon must lie in (0, 1]".into());
        }
        if t.lambda1 < 0.0 || t.lambda2 < 0.0 || t.zeta1 < 0.0 || t.zeta2 < 0.0 {
            return err("train objective and guidance weights must be nonnegative".into());
        }
        if t.entropy_alpha < 0.0 {
            return err("train.entropy_alpha must be nonnegative".into());
        }
        if t.hidden == 0 || t.attn_dim == 0 {
            return err("train.hidden and train.attn_dim must be at least 1".into());
        }
        if t.sigma_b < 0.0 {
            return err("train.sigma_b must be nonnegative".into());
        }
        if t.checkpoint_every == 0 {
            return err("train.checkpoint_every must be at least 1".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_gives_defaults() {
        let cfg = Config::from_toml("").unwrap();
        assert_eq!(cfg.region.n_uavs, 8);
        assert_eq!(cfg.ris.n_elements, 60);
        assert_eq!(cfg.ris.rows * cfg.ris.cols, 60);
        assert_eq!(cfg.radio.alpha_direct, 3.6);
        assert_eq!(cfg.radio.alpha_ris, 2.7);
        assert_eq!(cfg.train.gamma, 0.90);
        assert_eq!(cfg.train.learning_rate, 0.0007);
        assert_eq!(cfg.train.batch, 256);
        assert_eq!(cfg.sa.cooling, 0.95);
        assert_eq!(cfg.energy.mass_kg, 2.0);
    }

    #[test]
    fn element_grid_factorization_checked() {
        let res = Config::from_toml("[ris]\nn_elements = 60\nrows = 6\ncols = 11\n");
        let msg = res.unwrap_err().to_string();
        assert!(msg.contains("ris.n_elements"), "got: {msg}");
    }

    #[test]
    fn negative_tx_power_rejected() {
        let res = Config::from_toml("[radio]\ntx_power_w = -1.0\n");
        let msg = res.unwrap_err().to_string();
        assert!(msg.contains("P_t must be positive"), "got: {msg}");
    }

    #[test]
    fn unknown_key_named_in_error() {
        let res = Config::from_toml("[radio]\ntx_powerr_w = 1.0\n");
        let msg = res.unwrap_err().to_string();
        assert!(msg.contains("tx_powerr_w"), "got: {msg}");
    }

    #[test]
    fn noise_power_from_psd() {
        let cfg = Config::default();
        // -155 dBm/Hz over 2 MHz
        let expect = 10f64.powf((-155.0 - 30.0) / 10.0) * 2.0e6;
        assert!((cfg.radio.noise_power() - expect).abs() < 1e-25);
    }

    #[test]
    fn config_hash_stable_and_sensitive() {
        let a = Config::default();
        let mut b = Config::default();
        assert_eq!(a.hash(), a.hash());
        b.train.gamma = 0.95;
        assert_ne!(a.hash(), b.hash());
    }

    #[test]
    fn reference_point_defaults_to_box_center() {
        let cfg = Config::default();
        let p = cfg.region.reference_point();
        assert_eq!((p.x, p.y, p.z), (50.0, 50.0, 75.0));
    }
}
