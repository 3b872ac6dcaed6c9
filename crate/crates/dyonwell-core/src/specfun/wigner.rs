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

//! Wigner d-functions `d^l_{ms}(theta)` for integer and half-integer
//! indices, by the factorial sum with log-gamma stabilization.

use super::gamma::lgamma_pos;
use crate::error::{CoreError, Result};
use crate::math::FloatExt;
use crate::units::HalfInt;

/// `d^l_{ms}(theta)`.
///
/// Indices are all integers or all half-integers together, with
/// `|m| <= l`, `|s| <= l`. Exact Kronecker limits at `theta = 0` and
/// `theta = pi` hold by construction (the sine/cosine powers are integers).
pub fn wigner_d(l: HalfInt, m: HalfInt, s: HalfInt, theta: f64) -> Result<f64> {
    if !l.same_class(m) || !l.same_class(s) {
        return Err(CoreError::InvalidQuantumNumbers(
            "wigner_d: l, m, s must share the integer/half-integer class",
        ));
    }
    if m.abs() > l || s.abs() > l {
        return Err(CoreError::InvalidQuantumNumbers(
            "wigner_d: |m| and |s| must not exceed l",
        ));
    }
    // doubled indices: every factorial argument below is a true integer
    let lm = (l + m).doubled() / 2; // l + m
    let ls = (l - m).doubled() / 2; // l - m
    let ps = (l + s).doubled() / 2; // l + s
    let ms = (l - s).doubled() / 2; // l - s
    let delta = (m - s).doubled() / 2; // m - s, integer

    let half = 0.5 * theta;
    let (sin_h, cos_h) = half.sin_cos();

    // d^l_{ms} = sqrt((l+m)!(l-m)!(l+s)!(l-s)!)
    //   sum_k (-1)^k cos^{2l+s-m-2k} (-sin)^{m-s+2k}
    //          / ((l+s-k)! k! (l-m-k)! (m-s+k)!)
    let k_min = 0.max(-delta);
    let k_max = ps.min(ls);
    let pref = 0.5
        * (lgamma_pos(lm as f64 + 1.0)
            + lgamma_pos(ls as f64 + 1.0)
            + lgamma_pos(ps as f64 + 1.0)
            + lgamma_pos(ms as f64 + 1.0));
    let mut sum = 0.0_f64;
    for k in k_min..=k_max {
        let p_cos = (ps - k) + (ls - k); // (l+s-k) + (l-m-k) = 2l + s - m - 2k
        let p_sin = delta + 2 * k; // m - s + 2k
        debug_assert!(p_cos >= 0 && p_sin >= 0);
        let ln_den = lgamma_pos((ps - k) as f64 + 1.0)
            + lgamma_pos(k as f64 + 1.0)
            + lgamma_pos((ls - k) as f64 + 1.0)
            + lgamma_pos((delta + k) as f64 + 1.0);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let trig = int_pow(cos_h, p_cos) * int_pow(-sin_h, p_sin);
        sum += sign * trig * (pref - ln_den).exp();
    }
    Ok(sum)
}

/// `x^n` for integer `n >= 0` with the `0^0 = 1` convention.
fn int_pow(x: f64, n: i32) -> f64 {
    debug_assert!(n >= 0);
    let mut acc = 1.0_f64;
    let mut base = x;
    let mut n = n as u32;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    acc
}
