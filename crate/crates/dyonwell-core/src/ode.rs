// Copyright 2026 the dyonwell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Embedded Cash-Karp Runge-Kutta (4/5) with adaptive step control, for the
//! two-component radial systems the shooting oracle integrates.

use crate::error::{CoreError, Result};
use crate::math::FloatExt;

const SAFETY: f64 = 0.9;
const SHRINK_EXP: f64 = -0.25;
const GROW_EXP: f64 = -0.2;
const MAX_STEPS: usize = 200_000;

/// Integrate `y' = f(x, y)` for a 2-vector from `x0` to `x1` (either
/// direction). The state is renormalized whenever it grows beyond `1e250`
/// (the callers only ever use ratios of the components).
pub(crate) fn integrate_radial<F>(
    f: F,
    x0: f64,
    x1: f64,
    y0: [f64; 2],
    rel_tol: f64,
) -> Result<[f64; 2]>
where
    F: Fn(f64, [f64; 2]) -> [f64; 2],
{
    let mut x = x0;
    let mut y = y0;
    let dir = (x1 - x0).signum();
    let mut h = (x1 - x0).abs().min(0.05).max(1e-8) * dir;
    let mut steps = 0usize;
    while (x1 - x) * dir > 0.0 {
        if (x + h - x1) * dir > 0.0 {
            h = x1 - x;
        }
        let (y_new, err) = cash_karp_step(&f, x, y, h);
        let scale = y[0].abs().max(y[1].abs()).max(1e-30);
        let tol = rel_tol * scale;
        if err <= tol || h.abs() <= 1e-13 * x.abs().max(1.0) {
            x += h;
            y = y_new;
            // renormalize to dodge overflow; callers use ratios
            let mag = y[0].abs().max(y[1].abs());
            if mag > 1e250 {
                y[0] /= mag;
                y[1] /= mag;
            }
            let grow = if err > 0.0 {
                SAFETY * (err / tol).powf(GROW_EXP)
            } else {
                5.0
            };
            h *= grow.min(5.0);
        } else {
            let shrink = SAFETY * (err / tol).powf(SHRINK_EXP);
            h *= shrink.max(0.1);
            if h.abs() < 1e-15 * x.abs().max(1.0) {
                return Err(CoreError::IntegrationError("step size underflow"));
            }
        }
        steps += 1;
        if steps > MAX_STEPS {
            return Err(CoreError::IntegrationError("step budget exhausted"));
        }
    }
    Ok(y)
}

fn cash_karp_step<F>(f: &F, x: f64, y: [f64; 2], h: f64) -> ([f64; 2], f64)
where
    F: Fn(f64, [f64; 2]) -> [f64; 2],
{
    const A2: f64 = 0.2;
    const A3: f64 = 0.3;
    const A4: f64 = 0.6;
    const A5: f64 = 1.0;
    const A6: f64 = 0.875;
    const B21: f64 = 0.2;
    const B31: f64 = 3.0 / 40.0;
    const B32: f64 = 9.0 / 40.0;
    const B41: f64 = 0.3;
    const B42: f64 = -0.9;
    const B43: f64 = 1.2;
    const B51: f64 = -11.0 / 54.0;
    const B52: f64 = 2.5;
    const B53: f64 = -70.0 / 27.0;
    const B54: f64 = 35.0 / 27.0;
    const B61: f64 = 1631.0 / 55296.0;
    const B62: f64 = 175.0 / 512.0;
    const B63: f64 = 575.0 / 13824.0;
    const B64: f64 = 44275.0 / 110592.0;
    const B65: f64 = 253.0 / 4096.0;
    const C1: f64 = 37.0 / 378.0;
    const C3: f64 = 250.0 / 621.0;
    const C4: f64 = 125.0 / 594.0;
    const C6: f64 = 512.0 / 1771.0;
    const DC1: f64 = C1 - 2825.0 / 27648.0;
    const DC3: f64 = C3 - 18575.0 / 48384.0;
    const DC4: f64 = C4 - 13525.0 / 55296.0;
    const DC5: f64 = -277.0 / 14336.0;
    const DC6: f64 = C6 - 0.25;

    let add = |a: [f64; 2], terms: &[(f64, [f64; 2])]| {
        let mut out = a;
        for (c, k) in terms {
            out[0] += h * c * k[0];
            out[1] += h * c * k[1];
        }
        out
    };

    let k1 = f(x, y);
    let k2 = f(x + A2 * h, add(y, &[(B21, k1)]));
    let k3 = f(x + A3 * h, add(y, &[(B31, k1), (B32, k2)]));
    let k4 = f(x + A4 * h, add(y, &[(B41, k1), (B42, k2), (B43, k3)]));
    let k5 = f(
        x + A5 * h,
        add(y, &[(B51, k1), (B52, k2), (B53, k3), (B54, k4)]),
    );
    let k6 = f(
        x + A6 * h,
        add(y, &[(B61, k1), (B62, k2), (B63, k3), (B64, k4), (B65, k5)]),
    );

    let mut y_out = [0.0; 2];
    let mut err = 0.0_f64;
    for i in 0..2 {
        y_out[i] = y[i] + h * (C1 * k1[i] + C3 * k3[i] + C4 * k4[i] + C6 * k6[i]);
        let e = h * (DC1 * k1[i] + DC3 * k3[i] + DC4 * k4[i] + DC5 * k5[i] + DC6 * k6[i]);
        err = err.max(e.abs());
    }
    (y_out, err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn harmonic_oscillator_period() {
        // y'' = -y integrated over one period
        let f = |_x: f64, y: [f64; 2]| [y[1], -y[0]];
        let tau = 2.0 * core::f64::consts::PI;
        let y = integrate_radial(f, 0.0, tau, [1.0, 0.0], 1e-12).unwrap();
        assert_relative_eq!(y[0], 1.0, max_relative = 1e-9);
        assert!(y[1].abs() < 1e-9);
    }

    #[test]
    fn exponential_decay_backward() {
        // integrate y' = y from 5 down to 0: y(0) = y(5) e^{-5}
        let f = |_x: f64, y: [f64; 2]| [y[0], 0.0];
        let y = integrate_radial(f, 5.0, 0.0, [1.0, 0.0], 1e-12).unwrap();
        assert_relative_eq!(y[0], (-5.0_f64).exp(), max_relative = 1e-9);
    }

    #[test]
    fn renormalization_keeps_ratio() {
        // stiff growth: y'' = 100 y, ratio y'/y -> 10
        let f = |_x: f64, y: [f64; 2]| [y[1], 100.0 * y[0]];
        let y = integrate_radial(f, 0.0, 80.0, [1.0, 10.0], 1e-10).unwrap();
        assert_relative_eq!(y[1] / y[0], 10.0, max_relative = 1e-8);
        assert!(y[0].is_finite());
    }
}
