//! Electromagnetic model: array factor, steering vectors, the three link
//! types, the radiated-power integral, composite user gains and system rate.
//!
//! All operations are pure functions of explicit inputs; the only mutable
//! input is the fading substream, passed explicitly.

mod array;
mod gain;
mod geometry;
mod links;

pub use array::{array_factor, pattern_integral, pattern_integral_seq, ElementPattern};
#[cfg(feature = "parallel")]
pub use array::pattern_integral_par;
pub use gain::{composite_gain, system_rate};
pub use geometry::{aoa_aod_from_geometry, direction_angles, AngleSet, SteeringAngles};
pub use links::{link_ris_user, link_uvaa_ris, link_uvaa_user, upa_steering};

use crate::error::{Error, Result};
use crate::scenario::{Config, Position3, RngStream, Side, SwarmState, UserState};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Complex channel coefficients for every link of one time slot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelRealization {
    /// UVAA to STAR-RIS, one entry per element.
    pub h_ms: Vec<Complex64>,
    /// STAR-RIS to the reflection-side user, per element.
    pub h_sk: Vec<Complex64>,
    /// STAR-RIS to the transmission-side user, per element.
    pub h_sj: Vec<Complex64>,
    /// Direct UVAA link, reflection side.
    pub h_mk: Complex64,
    /// Direct UVAA link, transmission side.
    pub h_mj: Complex64,
}

impl ChannelRealization {
    pub fn n_elements(&self) -> usize {
        self.h_ms.len()
    }

    pub fn ris_vector(&self, side: Side) -> &[Complex64] {
        match side {
            Side::Reflection => &self.h_sk,
            Side::Transmission => &self.h_sj,
        }
    }

    pub fn direct(&self, side: Side) -> Complex64 {
        match side {
            Side::Reflection => self.h_mk,
            Side::Transmission => self.h_mj,
        }
    }
}

/// Reference point of one user side: the user position, or the centroid when
/// a side has several users (the per-side gains treat each side as a single
/// aggregate receiver).
pub fn side_reference(users: &[UserState], side: Side) -> Result<Position3> {
    let mut n = 0usize;
    let (mut x, mut y, mut z) = (0.0, 0.0, 0.0);
    for u in users.iter().filter(|u| u.side == side) {
        x += u.position.x;
        y += u.position.y;
        z += u.position.z;
        n += 1;
    }
    if n == 0 {
        return Err(Error::Geometry(format!("no users on side {side:?}")));
    }
    let n = n as f64;
    Ok(Position3::new(x / n, y / n, z / n))
}

/// Draw all five links for one slot. Fading draws happen in a fixed order
/// (direct K, direct J, RIS-K, RIS-J) so a seeded stream replays exactly.
pub fn draw_realization(
    swarm: &SwarmState,
    users: &[UserState],
    cfg: &Config,
    rng: &mut RngStream,
) -> Result<ChannelRealization> {
    let ris_pos = cfg.ris.position();
    let k_ref = side_reference(users, Side::Reflection)?;
    let j_ref = side_reference(users, Side::Transmission)?;

    let h_mk = link_uvaa_user(swarm, &k_ref, cfg, rng)?;
    let h_mj = link_uvaa_user(swarm, &j_ref, cfg, rng)?;
    let h_ms = link_uvaa_ris(swarm, &ris_pos, cfg)?;
    let h_sk = link_ris_user(&ris_pos, &k_ref, cfg, rng)?;
    let h_sj = link_ris_user(&ris_pos, &j_ref, cfg, rng)?;

    Ok(ChannelRealization { h_ms, h_sk, h_sj, h_mk, h_mj })
}
