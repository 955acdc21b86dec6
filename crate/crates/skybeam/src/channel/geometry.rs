//! Angle conventions.
//!
//! Directions use standard spherical coordinates: `theta` is measured from
//! the +z axis (vertical angle, [0, pi]) and `phi` is the azimuth in the xy
//! plane from +x (horizontal angle, [-pi, pi]).

use crate::error::{Error, Result};
use crate::scenario::Position3;

/// A far-field direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleSet {
    /// Vertical angle from +z, radians, in [0, pi].
    pub theta: f64,
    /// Horizontal angle from +x, radians, in [-pi, pi].
    pub phi: f64,
}

impl AngleSet {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }
}

/// Trigonometric factors of a link direction as seen from a planar array:
/// the sine of the vertical angle and the cosine/sine of the horizontal
/// angle. These scale the row/column phase gradients of the steering vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteeringAngles {
    pub sin_vert: f64,
    pub cos_horiz: f64,
    pub sin_horiz: f64,
}

/// Direction of `dst` as seen from `src`, as a spherical [`AngleSet`].
pub fn direction_angles(src: &Position3, dst: &Position3) -> Result<AngleSet> {
    let dx = dst.x - src.x;
    let dy = dst.y - src.y;
    let dz = dst.z - src.z;
    let r = (dx * dx + dy * dy + dz * dz).sqrt();
    if r == 0.0 {
        return Err(Error::Geometry("coincident points have no direction".into()));
    }
    Ok(AngleSet::new((dz / r).clamp(-1.0, 1.0).acos(), dy.atan2(dx)))
}

/// Steering-angle factors for the array at `src` toward the link endpoint at
/// `dst`: `sin_vert = |d_xy|/|d|`, and the cosine/sine of the horizontal
/// azimuth `atan2(dy, dx)`.
pub fn aoa_aod_from_geometry(src: &Position3, dst: &Position3) -> Result<SteeringAngles> {
    let dx = dst.x - src.x;
    let dy = dst.y - src.y;
    let dz = dst.z - src.z;
    let horiz = (dx * dx + dy * dy).sqrt();
    let r = (horiz * horiz + dz * dz).sqrt();
    if r == 0.0 {
        return Err(Error::Geometry("coincident points have no steering angles".into()));
    }
    let psi = dy.atan2(dx);
    Ok(SteeringAngles {
        sin_vert: horiz / r,
        cos_horiz: psi.cos(),
        sin_horiz: psi.sin(),
    })
}
