//! Gauss-Markov random movement for ground users.
//!
//! Speed and heading each follow an AR(1) process
//! `x' = mu*x + (1-mu)*x_mean + sqrt(1-mu^2)*noise`; the heading update pulls
//! toward the mean along the shortest arc so wrap-around cannot flip the
//! relaxation direction. Users are confined to their side rectangle: a step
//! that would leave it is clipped to the wall and the outward velocity
//! component (and the matching mean-heading component) is negated.

use crate::scenario::{MobilityCfg, Rect, RngStream, UserState};
use rand::Rng;
use rand_distr::StandardNormal;

fn wrap_pi(a: f64) -> f64 {
    let mut a = a % std::f64::consts::TAU;
    if a > std::f64::consts::PI {
        a -= std::f64::consts::TAU;
    } else if a < -std::f64::consts::PI {
        a += std::f64::consts::TAU;
    }
    a
}

/// Advance one user by one slot of `dt` seconds.
pub fn gmrmm_step(user: &UserState, cfg: &MobilityCfg, dt: f64, rng: &mut RngStream) -> UserState {
    let mu = cfg.memory_factor;
    let decay = (1.0 - mu * mu).max(0.0).sqrt();
    let speed_noise: f64 = rng.sample::<f64, _>(StandardNormal) * cfg.speed_noise_std;
    let heading_noise: f64 = rng.sample::<f64, _>(StandardNormal) * cfg.heading_noise_std;

    let speed = user.speed();
    let heading = if speed > 0.0 { user.heading() } else { user.mean_heading };

    let new_speed = (mu * speed + (1.0 - mu) * cfg.mean_speed + decay * speed_noise).max(0.0);
    let new_heading = wrap_pi(
        heading + (1.0 - mu) * wrap_pi(user.mean_heading - heading) + decay * heading_noise,
    );

    let mut vx = new_speed * new_heading.cos();
    let mut vy = new_speed * new_heading.sin();
    let mut mean_heading = user.mean_heading;

    let rect = cfg.rect_for(user.side);
    let mut pos = user.position;
    let raw_x = pos.x + vx * dt;
    let raw_y = pos.y + vy * dt;

    pos.x = raw_x.clamp(rect.x_min, rect.x_max);
    if raw_x != pos.x {
        vx = -vx;
        mean_heading = wrap_pi(std::f64::consts::PI - mean_heading);
    }
    pos.y = raw_y.clamp(rect.y_min, rect.y_max);
    if raw_y != pos.y {
        vy = -vy;
        mean_heading = wrap_pi(-mean_heading);
    }

    UserState {
        position: pos,
        velocity: [vx, vy],
        side: user.side,
        mean_heading,
    }
}

/// True when the user sits inside its configured rectangle.
pub fn user_in_rect(user: &UserState, rect: &Rect) -> bool {
    rect.contains(user.position.x, user.position.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{Position3, RngStreams, Side};

    fn user_at(x: f64, y: f64, vx: f64, vy: f64) -> UserState {
        UserState {
            position: Position3::new(x, y, 0.0),
            velocity: [vx, vy],
            side: Side::Reflection,
            mean_heading: vy.atan2(vx),
        }
    }

    fn cfg() -> MobilityCfg {
        MobilityCfg::default()
    }

    #[test]
    fn full_memory_keeps_velocity() {
        let mut c = cfg();
        c.memory_factor = 1.0;
        c.speed_noise_std = 0.0;
        c.heading_noise_std = 0.0;
        let u = user_at(1500.0, 1450.0, 0.3, -0.4);
        let mut rng = RngStreams::new(1).mobility;
        let next = gmrmm_step(&u, &c, 1.0, &mut rng);
        assert!((next.velocity[0] - 0.3).abs() < 1e-12);
        assert!((next.velocity[1] + 0.4).abs() < 1e-12);
    }

    #[test]
    fn memoryless_forgets_previous_velocity() {
        let mut c = cfg();
        c.memory_factor = 0.0;
        c.speed_noise_std = 0.0;
        c.heading_noise_std = 0.0;
        let mut u = user_at(1500.0, 1450.0, 5.0, 0.0);
        u.mean_heading = std::f64::consts::FRAC_PI_2;
        let mut rng = RngStreams::new(1).mobility;
        let next = gmrmm_step(&u, &c, 1.0, &mut rng);
        // speed = mean speed, heading = mean heading, regardless of the
        // previous velocity
        assert!((next.speed() - c.mean_speed).abs() < 1e-12);
        assert!(next.velocity[0].abs() < 1e-12);
        assert!((next.velocity[1] - c.mean_speed).abs() < 1e-12);
    }

    #[test]
    fn outward_step_reflects_at_wall() {
        // Hand computation: user on the x_max wall moving outward at
        // (2, 0) m/s with full memory and no noise. The raw step lands at
        // x_max + 2; the rule clips to x_max and negates v_x.
        let mut c = cfg();
        c.memory_factor = 1.0;
        c.speed_noise_std = 0.0;
        c.heading_noise_std = 0.0;
        let u = user_at(c.k_rect.x_max, 1450.0, 2.0, 0.0);
        let mut rng = RngStreams::new(1).mobility;
        let next = gmrmm_step(&u, &c, 1.0, &mut rng);
        assert_eq!(next.position.x, c.k_rect.x_max);
        assert!((next.velocity[0] + 2.0).abs() < 1e-12);
        assert!(next.velocity[1].abs() < 1e-12);
    }

    #[test]
    fn long_run_mean_speed_converges() {
        let c = cfg();
        let mut u = user_at(1505.0, 1450.0, 1.0, 0.0);
        let mut rng = RngStreams::new(42).mobility;
        let n = 100_000;
        let mut acc = 0.0;
        for _ in 0..n {
            u = gmrmm_step(&u, &c, 1.0, &mut rng);
            acc += u.speed();
        }
        let mean = acc / n as f64;
        assert!(
            (mean - c.mean_speed).abs() / c.mean_speed < 0.05,
            "long-run mean speed {mean} deviates more than 5% from {}",
            c.mean_speed
        );
    }

    #[test]
    fn user_stays_inside_rectangle() {
        let c = cfg();
        let mut u = user_at(1481.0, 1401.0, 1.0, 1.0);
        let mut rng = RngStreams::new(3).mobility;
        for _ in 0..10_000 {
            u = gmrmm_step(&u, &c, 1.0, &mut rng);
            assert!(user_in_rect(&u, &c.k_rect));
        }
    }
}
