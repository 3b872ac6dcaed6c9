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

//! Confluent hypergeometric function of the first kind, `M(a; b; x)`.
//!
//! The solver evaluates `M` in two regimes: real arguments (bound trial
//! energies, `x = 2 gamma1 rho > 0`) and pure-imaginary arguments (positive
//! trial energies, `x = 2 i kappa rho`). The power series covers small and
//! moderate `|x|`; terms of an oscillatory series cancel against each other
//! by a factor up to `e^|x|`, so the complex series runs in double-double
//! arithmetic. Large `|x|` switches to the standard large-argument expansion
//! with both the `e^x` branch and the recessive branch kept; whichever
//! evaluation reports the smaller error estimate wins.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::dd::{CDd, Dd};
use super::gamma::{lgamma_complex, recip_gamma};
use super::SpecFunResult;
use crate::error::{CoreError, Result};
use crate::math::FloatExt;

const F64_EPS: f64 = 2.3e-16;
const DD_EPS: f64 = 1.0e-31;
const MAX_TERMS: usize = 2000;

fn is_nonpositive_int(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Kummer's function for real arguments.
pub fn kummer_m_real(a: f64, b: f64, x: f64) -> Result<SpecFunResult<f64>> {
    let r = kummer_m(Complex64::new(a, 0.0), b, Complex64::new(x, 0.0))?;
    Ok(SpecFunResult {
        value: r.value.re,
        est_error: r.est_error,
    })
}

/// Kummer's function `M(a; b; x)` with complex-capable `a` and `x`.
///
/// `b` must not be a non-positive integer. Accuracy degrades with the
/// cancellation inherent to the regime; the error estimate is returned and
/// the call fails with `ConvergenceError` if the estimate exceeds 1e-8.
pub fn kummer_m(a: Complex64, b: f64, x: Complex64) -> Result<SpecFunResult<Complex64>> {
    if is_nonpositive_int(b) {
        return Err(CoreError::DomainError(
            "kummer_m: b must not be a non-positive integer",
        ));
    }
    if !x.is_finite() || !a.is_finite() {
        return Err(CoreError::DomainError("kummer_m: non-finite argument"));
    }
    let xa = x.norm();
    if xa > 600.0 {
        return Err(CoreError::RangeError("kummer_m: |x| beyond scaling range"));
    }
    if xa == 0.0 || a == Complex64::new(0.0, 0.0) {
        return Ok(SpecFunResult {
            value: Complex64::new(1.0, 0.0),
            est_error: 0.0,
        });
    }
    // Terminating polynomial when a is a non-positive integer.
    if a.im == 0.0 && is_nonpositive_int(a.re) && (-a.re) < 500.0 {
        return Ok(series_complex(a, b, x, Some((-a.re) as usize)));
    }

    let mut best: Option<SpecFunResult<Complex64>> = None;
    let series_feasible = xa <= 80.0 || (x.im == 0.0 && x.re > 0.0);
    if series_feasible {
        let trial = series_complex(a, b, x, None);
        best = Some(trial);
    }
    if xa >= 20.0 {
        if let Some(trial) = asymptotic(a, b, x) {
            best = match best {
                Some(old) if old.est_error <= trial.est_error => Some(old),
                _ => Some(trial),
            };
        }
    }
    let out = best.ok_or(CoreError::ConvergenceError {
        what: "kummer_m",
        est_error: f64::INFINITY,
    })?;
    if !out.value.is_finite() {
        return Err(CoreError::RangeError("kummer_m: overflow"));
    }
    if out.est_error > 1e-8 {
        return Err(CoreError::ConvergenceError {
            what: "kummer_m",
            est_error: out.est_error,
        });
    }
    Ok(out)
}

/// Power series, double-double accumulation. `terminate_at = Some(m)` stops
/// after the `x^m` term (polynomial case).
fn series_complex(
    a: Complex64,
    b: f64,
    x: Complex64,
    terminate_at: Option<usize>,
) -> SpecFunResult<Complex64> {
    let mut term = CDd::from_c64(Complex64::new(1.0, 0.0));
    let mut sum = term;
    let mut max_mag = 1.0_f64;
    let mut n_terms = 1usize;
    let xdd = CDd::from_c64(x);
    let limit = terminate_at.map(|m| m + 1).unwrap_or(MAX_TERMS);
    let mut small_streak = 0;
    for k in 0..limit {
        let kf = k as f64;
        // term *= (a + k) x / ((b + k)(k + 1)); a + k must be exact or its
        // rounding gets amplified by the cancellation
        let fac = CDd {
            re: Dd::from_exact_sum(a.re, kf),
            im: Dd::from_f64(a.im),
        };
        term = term.mul(fac).mul(xdd).div_f64((b + kf) * (kf + 1.0));
        sum = sum.add(term);
        n_terms += 1;
        let tm = term.norm();
        max_mag = max_mag.max(tm);
        if terminate_at.is_none() {
            let past_hump = kf + 1.0 > x.norm();
            if tm <= 1e-20 * sum.norm().max(1e-300) && past_hump {
                small_streak += 1;
                if small_streak >= 3 {
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
    }
    let value = sum.value();
    let denom = value.norm().max(f64::MIN_POSITIVE);
    // Rounding: the recurrence deposits ~4 eps per term step on the running
    // term; cancellation amplifies by max/|sum|.
    let est = (max_mag / denom) * DD_EPS * (4 * n_terms) as f64 + F64_EPS;
    SpecFunResult {
        value,
        est_error: est,
    }
}

/// Large-argument expansion. Returns `None` when the parameter combination
/// puts a needed gamma argument in the left half-plane or when the divergent
/// tails never get small.
fn asymptotic(a: Complex64, b: f64, x: Complex64) -> Option<SpecFunResult<Complex64>> {
    let bc = Complex64::new(b, 0.0);
    let one = Complex64::new(1.0, 0.0);

    // Dominant branch: Gamma(b)/Gamma(a) e^x x^{a-b} S2,
    // S2 = sum_k (b-a)_k (1-a)_k / (k! x^k).
    let (s2, e2) = poincare_series(bc - a, one - a, x)?;
    // Recessive branch: Gamma(b)/Gamma(b-a) e^{s i pi a} x^{-a} S1,
    // S1 = sum_k (a)_k (a-b+1)_k / (k! (-x)^k).
    let (s1, e1) = poincare_series(a, a - bc + one, -x)?;

    let lnx = x.ln();
    let lgb = lgamma_complex(bc);

    let dominant = if a.re > 0.0 {
        let ln = lgb - lgamma_complex(a) + x + (a - bc) * lnx;
        if ln.re > 700.0 {
            return None;
        }
        ln.exp() * s2
    } else if a.im == 0.0 && x.im == 0.0 {
        let rg = recip_gamma(a.re);
        let lg = lgb + x + (a - bc) * lnx;
        Complex64::new(rg, 0.0) * lg.exp() * s2
    } else {
        return None;
    };

    let ba = bc - a;
    let recessive = if ba.re > 0.0 {
        let sgn = if x.im > 0.0 || (x.im == 0.0 && x.re < 0.0) {
            1.0
        } else {
            -1.0
        };
        let ln = lgb - lgamma_complex(ba) - a * lnx + Complex64::new(0.0, sgn * PI) * a;
        ln.exp() * s1
    } else if ba.im == 0.0 && x.im == 0.0 {
        // real x: branch factor e^{±i pi a} has modulus 1 for real a; the
        // recessive term for x > 0 is real: cos(pi a) x^{-a} / Gamma(b-a).
        let rg = recip_gamma(ba.re);
        let ln = lgb - a * lnx;
        Complex64::new(rg * (PI * a.re).cos(), 0.0) * ln.exp() * s1
    } else {
        return None;
    };

    let value = dominant + recessive;
    let scale = value.norm().max(f64::MIN_POSITIVE);
    let est = (e1 * recessive.norm() + e2 * dominant.norm()) / scale + 4.0 * F64_EPS;
    Some(SpecFunResult {
        value,
        est_error: est,
    })
}

/// `sum_k (p)_k (q)_k / (k! x^k)`, truncated at the smallest term.
/// Returns the sum and a relative error estimate, or `None` if the series
/// starts diverging immediately.
fn poincare_series(p: Complex64, q: Complex64, x: Complex64) -> Option<(Complex64, f64)> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut prev_mag = 1.0_f64;
    let mut min_mag = 1.0_f64;
    for k in 0..60 {
        let kf = k as f64;
        term = term * (p + kf) * (q + kf) / ((kf + 1.0) * x);
        let tm = term.norm();
        if tm >= prev_mag {
            // truncate before the divergent tail
            break;
        }
        sum += term;
        prev_mag = tm;
        min_mag = tm;
        if tm < 1e-18 {
            break;
        }
    }
    if min_mag >= 0.5 {
        return None;
    }
    let est = min_mag / sum.norm().max(f64::MIN_POSITIVE);
    Some((sum, est))
}

/// `M(a; b; x)` together with the contiguous value `M(a+1; b+1; x)`, which
/// the derivative `M'(a;b;x) = (a/b) M(a+1;b+1;x)` needs.
pub fn kummer_m_with_shifted(
    a: Complex64,
    b: f64,
    x: Complex64,
) -> Result<(SpecFunResult<Complex64>, SpecFunResult<Complex64>)> {
    Ok((kummer_m(a, b, x)?, kummer_m(a + 1.0, b + 1.0, x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn m_real(a: f64, b: f64, x: f64) -> f64 {
        kummer_m_real(a, b, x).unwrap().value
    }

    #[test]
    fn identity_exp() {
        // M(a; a; x) = e^x
        assert_relative_eq!(m_real(1.0, 1.0, 1.0), 1.0_f64.exp(), max_relative = 1e-13);
        assert_relative_eq!(m_real(2.5, 2.5, 3.7), 3.7_f64.exp(), max_relative = 1e-13);
    }

    #[test]
    fn value_at_zero_is_one() {
        assert_eq!(m_real(3.7, 2.0, 0.0), 1.0);
        assert_eq!(m_real(-5.0, 2.0, 0.0), 1.0);
    }

    #[test]
    fn terminating_polynomial() {
        // M(-1; b; x) = 1 - x/b
        assert_relative_eq!(m_real(-1.0, 2.0, 1.0), 0.5, max_relative = 1e-14);
        // M(-2; 1; x) = 1 - 2x + x^2/2
        let x = 0.5;
        assert_relative_eq!(
            m_real(-2.0, 1.0, x),
            1.0 - 2.0 * x + x * x / 2.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn rejects_bad_b() {
        assert!(kummer_m_real(1.0, 0.0, 1.0).is_err());
        assert!(kummer_m_real(1.0, -2.0, 1.0).is_err());
        assert!(kummer_m_real(1.0, 1.5, 1.0).is_ok());
    }

    #[test]
    fn kummer_transformation_real() {
        // M(a;b;x) = e^x M(b-a;b;-x)
        for &(a, b, x) in &[
            (0.3, 2.0, 1.7),
            (-0.7, 4.0, 9.0),
            (2.2, 3.0, 25.0),
            (1.4, 2.0, -12.0),
        ] {
            let lhs = m_real(a, b, x);
            let rhs = x.exp() * m_real(b - a, b, -x);
            assert_relative_eq!(lhs, rhs, max_relative = 1e-10);
        }
    }

    #[test]
    fn kummer_transformation_imaginary() {
        for &(are, aim, b, y) in &[
            (1.0, 0.9, 2.0, 7.0),
            (2.0, -1.3, 4.0, 30.0),
            (1.5, 2.0, 3.0, 55.0),
            (1.0, 0.4, 2.0, 110.0),
        ] {
            let a = Complex64::new(are, aim);
            let x = Complex64::new(0.0, y);
            let lhs = kummer_m(a, b, x).unwrap().value;
            let rhs = x.exp() * kummer_m(Complex64::new(b, 0.0) - a, b, -x).unwrap().value;
            let rel = (lhs - rhs).norm() / lhs.norm();
            assert!(rel < 1e-10, "rel {rel} at a=({are},{aim}), b={b}, y={y}");
        }
    }

    #[test]
    fn physical_inside_combination_is_real() {
        // e^{-i kappa rho} M(l+1 + i/kappa; 2l+2; 2 i kappa rho) is real.
        for &(l, kappa, rho) in &[
            (0.0, 0.7, 3.0),
            (1.0, 2.0, 10.0),
            (0.5, 1.3, 5.0),
            (0.0, 2.2, 25.0),
            (1.5, 0.35, 20.0),
        ] {
            let a = Complex64::new(l + 1.0, 1.0 / kappa);
            let z = Complex64::new(0.0, 2.0 * kappa * rho);
            let m = kummer_m(a, 2.0 * l + 2.0, z).unwrap().value;
            let phi = Complex64::new(0.0, -kappa * rho).exp() * m;
            let frac = phi.im.abs() / phi.norm();
            assert!(
                frac < 1e-10,
                "imag fraction {frac:.3e} at l={l}, kappa={kappa}, rho={rho}"
            );
        }
    }

    #[test]
    fn large_real_argument_against_ratio() {
        // e^{-x} M(1; 3; x) = 2(x - 1 + e^{-x})/x^2 exactly.
        for &x in &[5.0, 40.0, 71.0, 150.0] {
            let m = m_real(1.0, 3.0, x);
            let expect = 2.0 * (x - 1.0 + (-x).exp()) / (x * x) * x.exp();
            assert_relative_eq!(m, expect, max_relative = 1e-11);
        }
    }

    #[test]
    fn branch_independence_of_continuation() {
        // The physical value must not depend on which imaginary branch is
        // fed in, because phi is real: conj(z) input gives conj result.
        let a = Complex64::new(1.0, 0.8);
        let z = Complex64::new(0.0, 13.0);
        let up = kummer_m(a, 2.0, z).unwrap().value;
        let dn = kummer_m(a.conj(), 2.0, z.conj()).unwrap().value;
        assert_relative_eq!(up.re, dn.re, max_relative = 1e-11);
        assert_relative_eq!(up.im, -dn.im, max_relative = 1e-11);
    }

    #[test]
    fn est_error_is_reported() {
        let r = kummer_m_real(0.5, 2.0, 10.0).unwrap();
        assert!(r.est_error >= 0.0 && r.est_error < 1e-10);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            kummer_m_real(1.0, 2.0, 700.0),
            Err(CoreError::RangeError(_))
        ));
    }

    #[test]
    fn derivative_relation_against_finite_difference() {
        let (a, b, x) = (0.8, 2.0, 3.0);
        let h = 1e-6;
        let fd = (m_real(a, b, x + h) - m_real(a, b, x - h)) / (2.0 * h);
        let contiguous = a / b * m_real(a + 1.0, b + 1.0, x);
        assert_abs_diff_eq!(fd, contiguous, epsilon = 1e-8);
    }
}
