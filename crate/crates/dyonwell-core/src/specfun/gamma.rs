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

//! Log-gamma (real and complex), sign-tracked log-gamma, and digamma.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::math::FloatExt;

/// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

/// Natural log of the gamma function for `x > 0`.
///
/// Absolute accuracy is a few 1e-14 over the positive axis.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(CoreError::DomainError("log_gamma requires x > 0"));
    }
    Ok(lgamma_pos(x))
}

/// `ln Gamma(x)` for `x > 0`, no domain checks.
pub(crate) fn lgamma_pos(x: f64) -> f64 {
    // Lanczos is written for Gamma(z) with z >= 1; shift small arguments up
    // by Gamma(x) = Gamma(x+1)/x.
    if x < 0.5 {
        // reflection keeps accuracy for tiny x
        return (PI / (PI * x).sin()).ln() - lgamma_pos(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `(ln |Gamma(x)|, sign of Gamma(x))` for any non-pole real `x`.
///
/// Returns an error at the poles (x a non-positive integer).
pub(crate) fn lgamma_signed(x: f64) -> Result<(f64, f64)> {
    if x > 0.0 {
        return Ok((lgamma_pos(x), 1.0));
    }
    if x == x.floor() {
        return Err(CoreError::DomainError("gamma pole at non-positive integer"));
    }
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    let s = (PI * x).sin();
    let ln = (PI / s.abs()).ln() - lgamma_pos(1.0 - x);
    Ok((ln, s.signum()))
}

/// `1 / Gamma(x)` for any real `x` (zero at the poles).
pub(crate) fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        return (-lgamma_pos(x)).exp();
    }
    if x == x.floor() {
        return 0.0;
    }
    let (ln, sign) = lgamma_signed(x).expect("non-pole checked above");
    sign * (-ln).exp()
}

/// Principal-branch `ln Gamma(z)` for `Re z > 0`.
pub(crate) fn lgamma_complex(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "lgamma_complex needs Re z > 0");
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    Complex64::new(LN_SQRT_2PI, 0.0) + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// Digamma (psi) function for any non-pole real `x`.
///
/// Recurrence up to `x >= 10`, then the Bernoulli asymptotic series;
/// reflection for negative arguments.
pub(crate) fn digamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        if x == x.floor() {
            return Err(CoreError::DomainError("digamma pole at non-positive integer"));
        }
        // psi(x) = psi(1-x) - pi cot(pi x)
        let cot = (PI * x).cos() / (PI * x).sin();
        return Ok(digamma(1.0 - x)? - PI * cot);
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic: ln x - 1/(2x) - sum B_2n / (2n x^{2n})
    let inv2 = 1.0 / (x * x);
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    Ok(acc + x.ln() - 0.5 / x - series)
}
