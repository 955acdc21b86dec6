//! The three link models: LoS UVAA-RIS, Rayleigh UVAA-user, Rician RIS-user.

use crate::channel::{aoa_aod_from_geometry, array_factor, direction_angles, SteeringAngles};
use crate::error::{Error, Result};
use crate::scenario::{Config, Position3, RngStream, SwarmState};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// One circularly-symmetric complex Gaussian draw with unit variance.
fn complex_gaussian(rng: &mut RngStream) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Uniform-planar-array steering vector: the Kronecker product of the row
/// and column vectors, where element `p` of the row vector carries phase
/// `-2*pi*p*d_r*cos_horiz*sin_vert/lambda` (columns use `sin_horiz`).
pub fn upa_steering(
    angles: &SteeringAngles,
    rows: usize,
    cols: usize,
    d_row: f64,
    d_col: f64,
    wavelength: f64,
) -> Vec<Complex64> {
    let row_step = -std::f64::consts::TAU * d_row * angles.cos_horiz * angles.sin_vert / wavelength;
    let col_step = -std::f64::consts::TAU * d_col * angles.sin_horiz * angles.sin_vert / wavelength;
    let mut out = Vec::with_capacity(rows * cols);
    for p in 0..rows {
        let row_phase = Complex64::new(0.0, row_step * p as f64).exp();
        for q in 0..cols {
            out.push(row_phase * Complex64::new(0.0, col_step * q as f64).exp());
        }
    }
    out
}

fn ris_spacings(cfg: &Config) -> (f64, f64) {
    let lambda = cfg.radio.wavelength();
    (
        cfg.ris.row_spacing.unwrap_or(lambda / 2.0),
        cfg.ris.col_spacing.unwrap_or(lambda / 2.0),
    )
}

/// LoS channel from the UVAA to the STAR-RIS: scalar array factor toward the
/// RIS times free-space loss (exponent 2) times the per-element steering
/// phases. Deterministic; no fading draw.
pub fn link_uvaa_ris(
    swarm: &SwarmState,
    ris_pos: &Position3,
    cfg: &Config,
) -> Result<Vec<Complex64>> {
    let centroid = swarm.centroid();
    let d = centroid.distance(ris_pos);
    if d == 0.0 {
        return Err(Error::Geometry("UVAA centroid coincides with the RIS".into()));
    }
    let af = array_factor(swarm, &direction_angles(&centroid, ris_pos)?, cfg.radio.wavenumber());
    let steer = aoa_aod_from_geometry(ris_pos, &centroid)?;
    let (d_row, d_col) = ris_spacings(cfg);
    let los = upa_steering(&steer, cfg.ris.rows, cfg.ris.cols, d_row, d_col, cfg.radio.wavelength());
    let amp = (cfg.radio.path_loss_ref / (d * d)).sqrt();
    Ok(los.into_iter().map(|e| af * amp * e).collect())
}

/// Rayleigh-faded direct channel from the UVAA to a user position. One unit
/// complex Gaussian draw per call.
pub fn link_uvaa_user(
    swarm: &SwarmState,
    user_pos: &Position3,
    cfg: &Config,
    rng: &mut RngStream,
) -> Result<Complex64> {
    let centroid = swarm.centroid();
    let d = centroid.distance(user_pos);
    if d == 0.0 {
        return Err(Error::Geometry("UVAA centroid coincides with the user".into()));
    }
    let af = array_factor(swarm, &direction_angles(&centroid, user_pos)?, cfg.radio.wavenumber());
    let amp = (cfg.radio.path_loss_ref * d.powf(-cfg.radio.alpha_direct)).sqrt();
    Ok(af * amp * complex_gaussian(rng))
}

/// Rician channel from the STAR-RIS to a user position: steering-vector LoS
/// component plus i.i.d. complex Gaussian NLoS, mixed by the K-factor beta.
pub fn link_ris_user(
    ris_pos: &Position3,
    user_pos: &Position3,
    cfg: &Config,
    rng: &mut RngStream,
) -> Result<Vec<Complex64>> {
    let d = ris_pos.distance(user_pos);
    if d == 0.0 {
        return Err(Error::Geometry("the RIS coincides with the user".into()));
    }
    let steer = aoa_aod_from_geometry(ris_pos, user_pos)?;
    let (d_row, d_col) = ris_spacings(cfg);
    let los = upa_steering(&steer, cfg.ris.rows, cfg.ris.cols, d_row, d_col, cfg.radio.wavelength());
    let beta = cfg.radio.rician_beta;
    let w_los = (beta / (1.0 + beta)).sqrt();
    let w_nlos = (1.0 / (1.0 + beta)).sqrt();
    let amp = (cfg.radio.path_loss_ref * d.powf(-cfg.radio.alpha_ris)).sqrt();
    Ok(los
        .into_iter()
        .map(|e| amp * (w_los * e + w_nlos * complex_gaussian(rng)))
        .collect())
}
