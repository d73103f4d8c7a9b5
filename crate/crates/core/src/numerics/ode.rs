//! Adaptive Dormand–Prince 5(4) integrator for scalar ODEs `dy/dt = f(t, y)`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Smallest step magnitude before the integration is abandoned.
    pub min_step: f64,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            min_step: 1e-12,
            max_steps: 200_000,
        }
    }
}

/// Accepted steps of an integration, including the initial point.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub points: Vec<(f64, f64)>,
    /// Set when the stop predicate fired before reaching the end point.
    /// The offending step is not included in `points`.
    pub stopped: bool,
}

impl Trajectory {
    pub fn last(&self) -> (f64, f64) {
        *self.points.last().expect("trajectory holds the initial point")
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// Differences between the 5th- and 4th-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// Integrates from `t0` to `t1` (either direction).
///
/// `stop` is checked on every trial endpoint; when it returns true the
/// integration ends with `stopped = true` and the last accepted point kept.
pub fn integrate<F, S>(
    f: F,
    t0: f64,
    y0: f64,
    t1: f64,
    opts: &OdeOptions,
    mut stop: S,
) -> Result<Trajectory>
where
    F: Fn(f64, f64) -> f64,
    S: FnMut(f64, f64) -> bool,
{
    let mut points = vec![(t0, y0)];
    let span = t1 - t0;
    if span == 0.0 {
        return Ok(Trajectory {
            points,
            stopped: false,
        });
    }
    let dir = span.signum();
    let (mut t, mut y) = (t0, y0);
    let mut k1 = f(t, y);
    let mut h = dir * (span.abs() * 1e-3).max(opts.min_step * 10.0);

    for _ in 0..opts.max_steps {
        if (t1 - t) * dir <= 0.0 {
            return Ok(Trajectory {
                points,
                stopped: false,
            });
        }
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }
        let k2 = f(t + C2 * h, y + h * A21 * k1);
        let k3 = f(t + C3 * h, y + h * (A31 * k1 + A32 * k2));
        let k4 = f(t + C4 * h, y + h * (A41 * k1 + A42 * k2 + A43 * k3));
        let k5 = f(t + C5 * h, y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
        let k6 = f(
            t + h,
            y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
        );
        let y_new = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
        let k7 = f(t + h, y_new);
        let err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
        let scale = opts.abs_tol + opts.rel_tol * y.abs().max(y_new.abs());
        let ratio = (err / scale).abs();

        if !y_new.is_finite() || !ratio.is_finite() {
            h *= 0.25;
        } else if ratio <= 1.0 {
            let t_new = if (t + h - t1) * dir >= 0.0 { t1 } else { t + h };
            if stop(t_new, y_new) {
                return Ok(Trajectory {
                    points,
                    stopped: true,
                });
            }
            t = t_new;
            y = y_new;
            k1 = k7;
            points.push((t, y));
            let grow = if ratio == 0.0 { 5.0 } else { (0.9 * ratio.powf(-0.2)).min(5.0) };
            h *= grow;
        } else {
            h *= (0.9 * ratio.powf(-0.2)).max(0.2);
        }
        if h.abs() < opts.min_step {
            return Err(Error::Integration(format!(
                "step size underflow at t = {t} (|h| < {})",
                opts.min_step
            )));
        }
    }
    Err(Error::Integration(format!(
        "exceeded {} steps before reaching t = {t1}",
        opts.max_steps
    )))
}
