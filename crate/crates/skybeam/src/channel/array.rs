//! Array factor of the UAV virtual antenna array and the radiated-power
//! integral that normalizes the composite gains.

use crate::error::{Error, Result};
use crate::exec;
use crate::scenario::SwarmState;
use crate::channel::AngleSet;
use num_complex::Complex64;

/// Per-element far-field amplitude pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ElementPattern {
    #[default]
    Isotropic,
}

impl ElementPattern {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "isotropic" => Ok(Self::Isotropic),
            other => Err(Error::Config(format!(
                "radio.element_pattern '{other}' is not supported (expected \"isotropic\")"
            ))),
        }
    }

    #[inline]
    pub fn amplitude(&self, _theta: f64, _phi: f64) -> f64 {
        1.0
    }
}

/// Array factor of the swarm toward `angle`, with positions taken relative
/// to the swarm centroid:
/// `sum_m I_m exp(j k (x sin(t)cos(p) + y sin(t)sin(p) + z cos(t)))`.
pub fn array_factor(swarm: &SwarmState, angle: &AngleSet, wavenumber: f64) -> Complex64 {
    let c = swarm.centroid();
    let st = angle.theta.sin();
    let ct = angle.theta.cos();
    let cp = angle.phi.cos();
    let sp = angle.phi.sin();
    let mut acc = Complex64::new(0.0, 0.0);
    for u in &swarm.uavs {
        let proj = (u.position.x - c.x) * st * cp
            + (u.position.y - c.y) * st * sp
            + (u.position.z - c.z) * ct;
        acc += u.excitation * Complex64::new(0.0, wavenumber * proj).exp();
    }
    acc
}

fn integral_row(
    swarm: &SwarmState,
    pattern: ElementPattern,
    wavenumber: f64,
    n_theta: usize,
    n_phi: usize,
    i: usize,
) -> f64 {
    let d_theta = std::f64::consts::PI / n_theta as f64;
    let d_phi = std::f64::consts::TAU / n_phi as f64;
    let theta = (i as f64 + 0.5) * d_theta;
    let sin_theta = theta.sin();
    let mut row = 0.0;
    for j in 0..n_phi {
        let phi = -std::f64::consts::PI + (j as f64 + 0.5) * d_phi;
        let af = array_factor(swarm, &AngleSet::new(theta, phi), wavenumber);
        let w = pattern.amplitude(theta, phi);
        row += af.norm_sqr() * w * w * sin_theta;
    }
    row * d_theta * d_phi
}

/// Midpoint-rule evaluation of
/// `int_0^{2pi} int_0^{pi} |AF|^2 w^2 sin(theta) dtheta dphi`
/// on an `n_theta x n_phi` grid. Rows are independent jobs summed in theta
/// order, so the parallel and sequential paths agree bitwise.
pub fn pattern_integral(
    swarm: &SwarmState,
    pattern: ElementPattern,
    wavenumber: f64,
    n_theta: usize,
    n_phi: usize,
) -> Result<f64> {
    if n_theta < 8 {
        return Err(Error::GridTooCoarse(n_theta));
    }
    let rows = exec::map_indexed(n_theta, |i| {
        integral_row(swarm, pattern, wavenumber, n_theta, n_phi, i)
    });
    Ok(rows.iter().sum())
}

/// Sequential evaluation, kept callable for benchmarks and cross-checks.
pub fn pattern_integral_seq(
    swarm: &SwarmState,
    pattern: ElementPattern,
    wavenumber: f64,
    n_theta: usize,
    n_phi: usize,
) -> Result<f64> {
    if n_theta < 8 {
        return Err(Error::GridTooCoarse(n_theta));
    }
    let rows = exec::map_indexed_seq(n_theta, |i| {
        integral_row(swarm, pattern, wavenumber, n_theta, n_phi, i)
    });
    Ok(rows.iter().sum())
}

/// Rayon evaluation, kept callable for benchmarks and cross-checks.
#[cfg(feature = "parallel")]
pub fn pattern_integral_par(
    swarm: &SwarmState,
    pattern: ElementPattern,
    wavenumber: f64,
    n_theta: usize,
    n_phi: usize,
) -> Result<f64> {
    if n_theta < 8 {
        return Err(Error::GridTooCoarse(n_theta));
    }
    let rows = exec::map_indexed_par(n_theta, |i| {
        integral_row(swarm, pattern, wavenumber, n_theta, n_phi, i)
    });
    Ok(rows.iter().sum())
}
