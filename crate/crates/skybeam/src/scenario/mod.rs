//! World geometry, user mobility, UAV kinematic state, configuration and the
//! deterministic random-number contract.

mod config;
mod deploy;
mod mobility;
mod rng;

pub use config::{
    Config, EnergyCfg, MobilityCfg, RadioCfg, Rect, RegionCfg, RisCfg, SaCfg, TrainCfg,
};
pub use deploy::init_deployment;
pub use mobility::{gmrmm_step, user_in_rect};
pub use rng::{RngStream, RngStreams};

use serde::{Deserialize, Serialize};

/// A point in the 3D Cartesian scene, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn distance(&self, other: &Position3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Which side of the STAR-RIS a user sits on.
///
/// `Reflection` users share the UAV side of the surface and are served by the
/// reflected wave; `Transmission` users sit behind it and are served by the
/// transmitted wave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Reflection,
    Transmission,
}

/// Kinematic and array state of one UAV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UavState {
    pub position: Position3,
    /// Commanded horizontal speed for the current slot, m/s.
    pub speed: f64,
    /// Horizontal heading, radians.
    pub heading: f64,
    /// Vertical speed, m/s (positive up).
    pub vertical_speed: f64,
    /// Excitation current weight, in [0, 1].
    pub excitation: f64,
    /// Mean speed of the previous slot, used by the kinetic energy term.
    pub prev_mean_speed: f64,
}

impl UavState {
    pub fn at(position: Position3) -> Self {
        Self {
            position,
            speed: 0.0,
            heading: 0.0,
            vertical_speed: 0.0,
            excitation: 1.0,
            prev_mean_speed: 0.0,
        }
    }
}

/// The whole UAV swarm for one time slot. List order is stable across a run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SwarmState {
    pub uavs: Vec<UavState>,
}

impl SwarmState {
    pub fn len(&self) -> usize {
        self.uavs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.uavs.is_empty()
    }

    /// Centroid of the current UAV positions; the UVAA reference point.
    pub fn centroid(&self) -> Position3 {
        let n = self.uavs.len().max(1) as f64;
        let (mut x, mut y, mut z) = (0.0, 0.0, 0.0);
        for u in &self.uavs {
            x += u.position.x;
            y += u.position.y;
            z += u.position.z;
        }
        Position3::new(x / n, y / n, z / n)
    }

    pub fn min_pairwise_distance(&self) -> Option<f64> {
        let mut min: Option<f64> = None;
        for i in 0..self.uavs.len() {
            for j in (i + 1)..self.uavs.len() {
                let d = self.uavs[i].position.distance(&self.uavs[j].position);
                min = Some(min.map_or(d, |m: f64| m.min(d)));
            }
        }
        min
    }
}

/// One mobile ground user (z = 0).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UserState {
    pub position: Position3,
    /// Horizontal velocity, m/s.
    pub velocity: [f64; 2],
    pub side: Side,
    /// Long-run heading the Gauss-Markov process relaxes toward.
    pub mean_heading: f64,
}

impl UserState {
    pub fn speed(&self) -> f64 {
        (self.velocity[0] * self.velocity[0] + self.velocity[1] * self.velocity[1]).sqrt()
    }

    pub fn heading(&self) -> f64 {
        self.velocity[1].atan2(self.velocity[0])
    }
}
