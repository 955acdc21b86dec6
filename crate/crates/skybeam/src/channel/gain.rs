//! Composite user gains and the system transmission rate.

use crate::channel::ChannelRealization;
use crate::error::{Error, Result};
use crate::scenario::Side;
use num_complex::Complex64;

/// Composite complex amplitude toward one side: the RIS cascade plus the
/// direct path, `sum_s h_MS[s] * coeff[s] * h_SU[s] + h_direct`.
pub fn composite_amplitude(
    chan: &ChannelRealization,
    coeffs: &[Complex64],
    side: Side,
) -> Result<Complex64> {
    if coeffs.len() != chan.n_elements() {
        return Err(Error::Dimension { expected: chan.n_elements(), got: coeffs.len() });
    }
    let ris = chan.ris_vector(side);
    let mut acc = chan.direct(side);
    for s in 0..coeffs.len() {
        acc += chan.h_ms[s] * coeffs[s] * ris[s];
    }
    Ok(acc)
}

/// Total gain toward one side:
/// `4*pi*|cascade + direct|^2 / pattern_integral * efficiency`.
///
/// `coeffs` is the diagonal of the reflection matrix for the reflection side
/// or of the transmission matrix for the transmission side; the caller
/// evaluates the pattern integral once per slot and passes it in.
pub fn composite_gain(
    chan: &ChannelRealization,
    coeffs: &[Complex64],
    side: Side,
    pattern_integral: f64,
    efficiency: f64,
) -> Result<f64> {
    if !(pattern_integral > 0.0) {
        return Err(Error::Numeric(format!(
            "pattern integral must be positive, got {pattern_integral}"
        )));
    }
    let amp = composite_amplitude(chan, coeffs, side)?;
    Ok(4.0 * std::f64::consts::PI * amp.norm_sqr() / pattern_integral * efficiency)
}

/// Sum rate of both sides: `B log2(1 + P_t G_K / sigma^2) + B log2(1 + P_t G_J / sigma^2)`.
pub fn system_rate(g_k: f64, g_j: f64, bandwidth: f64, tx_power: f64, noise_power: f64) -> f64 {
    let snr_k = tx_power * g_k / noise_power;
    let snr_j = tx_power * g_j / noise_power;
    bandwidth * ((1.0 + snr_k).log2() + (1.0 + snr_j).log2())
}
