//! Initial placement of UAVs and users.

use crate::error::{Error, Result};
use crate::scenario::{Config, Position3, RngStream, Side, SwarmState, UavState, UserState};
use rand::Rng;

const MAX_REJECTION_ATTEMPTS: usize = 10_000;

/// Place UAVs uniformly in the region box with all pairwise distances at
/// least `d_min` (rejection sampling, resampling the offending UAV), and
/// users uniformly in their side rectangles. Excitation currents start at 1.
pub fn init_deployment(cfg: &Config, rng: &mut RngStream) -> Result<(SwarmState, Vec<UserState>)> {
    let r = &cfg.region;
    let mut uavs: Vec<UavState> = Vec::with_capacity(r.n_uavs);
    let mut attempts = 0usize;
    while uavs.len() < r.n_uavs {
        attempts += 1;
        if attempts > MAX_REJECTION_ATTEMPTS {
            return Err(Error::Placement { attempts: MAX_REJECTION_ATTEMPTS });
        }
        let candidate = Position3::new(
            rng.gen_range(r.l_min..=r.l_max),
            rng.gen_range(r.l_min..=r.l_max),
            rng.gen_range(r.h_min..=r.h_max),
        );
        let clear = uavs.iter().all(|u| u.position.distance(&candidate) >= r.d_min);
        if clear {
            uavs.push(UavState::at(candidate));
        }
    }

    let mut users = Vec::with_capacity(cfg.mobility.n_users_k + cfg.mobility.n_users_j);
    for (side, count) in [
        (Side::Reflection, cfg.mobility.n_users_k),
        (Side::Transmission, cfg.mobility.n_users_j),
    ] {
        let rect = cfg.mobility.rect_for(side);
        for _ in 0..count {
            let position = Position3::new(
                rng.gen_range(rect.x_min..=rect.x_max),
                rng.gen_range(rect.y_min..=rect.y_max),
                0.0,
            );
            let heading = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            let speed = cfg.mobility.mean_speed;
            users.push(UserState {
                position,
                velocity: [speed * heading.cos(), speed * heading.sin()],
                side,
                mean_heading: heading,
            });
        }
    }

    Ok((SwarmState { uavs }, users))
}
