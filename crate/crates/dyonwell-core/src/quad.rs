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

//! Adaptive Gauss-Kronrod quadrature (15-point Kronrod / 7-point Gauss
//! panels, worst-panel-first subdivision).

use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::math::FloatExt;

/// Kronrod abscissae on [0, 1] side of the symmetric rule.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// One 15-point Kronrod panel. Returns (integral, error estimate).
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_gauss = fc * WG[3];
    let mut res_kron = fc * WGK[7];
    let mut res_abs = res_kron.abs();
    let mut fv = [0.0_f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        res_kron += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = res_kron * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let err_raw = ((res_kron - res_gauss) * half).abs();
    res_asc *= half.abs();
    res_abs *= half.abs();
    let mut err = err_raw;
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    if floor > err {
        err = floor;
    }
    (res_kron * half, err)
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

/// Adaptive integral of `f` over `[a, b]` to relative tolerance `rel_tol`
/// (with an absolute floor `abs_floor` to keep zero integrals convergent).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
) -> Result<(f64, f64)> {
    integrate_with_breaks(f, &[a, b], rel_tol, abs_floor)
}

/// Adaptive integral over the union of `[breaks[i], breaks[i+1]]`, so known
/// kinks (the well wall) start on panel boundaries.
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    rel_tol: f64,
    abs_floor: f64,
) -> Result<(f64, f64)> {
    const MAX_PANELS: usize = 2000;
    let mut panels: Vec<Panel> = Vec::with_capacity(64);
    for w in breaks.windows(2) {
        if w[1] < w[0] {
            return Err(CoreError::DomainError("integrate: decreasing breakpoints"));
        }
        if w[1] > w[0] {
            let (value, err) = qk15(&f, w[0], w[1]);
            panels.push(Panel {
                a: w[0],
                b: w[1],
                value,
                err,
            });
        }
    }
    if panels.is_empty() {
        return Ok((0.0, 0.0));
    }
    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let target = (rel_tol * total.abs()).max(abs_floor);
        if err <= target {
            return Ok((total, err));
        }
        if panels.len() >= MAX_PANELS {
            return Err(CoreError::QuadratureError { est_error: err });
        }
        // split the worst panel
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap_or(core::cmp::Ordering::Equal))
            .expect("non-empty");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            // interval at floating-point resolution; keep it and give up if
            // the rest cannot compensate
            return Err(CoreError::QuadratureError { est_error: p.err });
        }
        let (v1, e1) = qk15(&f, p.a, mid);
        let (v2, e2) = qk15(&f, mid, p.b);
        panels.push(Panel {
            a: p.a,
            b: mid,
            value: v1,
            err: e1,
        });
        panels.push(Panel {
            a: mid,
            b: p.b,
            value: v2,
            err: e2,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        let (v, _) = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12, 1e-300).unwrap();
        // antiderivative x^4/4 - x^2 + x
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
        assert_relative_eq!(v, exact, max_relative = 1e-14);
    }

    #[test]
    fn oscillatory_integral() {
        let (v, _) = integrate(|x| (10.0 * x).sin(), 0.0, PI, 1e-12, 1e-300).unwrap();
        let exact = (1.0 - (10.0 * PI).cos()) / 10.0;
        assert_relative_eq!(v, exact, max_relative = 1e-11);
    }

    #[test]
    fn integrable_endpoint_singularity() {
        // int_0^1 x^{-1/2} dx = 2
        let (v, _) = integrate(|x| 1.0 / x.sqrt().max(1e-154), 0.0, 1.0, 1e-10, 1e-14).unwrap();
        assert_relative_eq!(v, 2.0, max_relative = 1e-8);
    }

    #[test]
    fn kinked_integrand_with_break() {
        let f = |x: f64| if x < 1.0 { x } else { 2.0 - x };
        let (v, _) = integrate_with_breaks(f, &[0.0, 1.0, 2.0], 1e-13, 1e-300).unwrap();
        assert_relative_eq!(v, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn decaying_exponential_tail() {
        let (v, _) = integrate(|x| (-2.0 * x).exp() * x * x, 0.0, 40.0, 1e-12, 1e-300).unwrap();
        assert_relative_eq!(v, 0.25, max_relative = 1e-11);
    }

    #[test]
    fn zero_integrand() {
        let (v, e) = integrate(|_| 0.0, 0.0, 1.0, 1e-10, 1e-14).unwrap();
        assert_eq!(v, 0.0);
        assert!(e <= 1e-14);
    }
}
