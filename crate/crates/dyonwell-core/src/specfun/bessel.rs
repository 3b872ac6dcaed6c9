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

//! Bessel `J_nu` and Macdonald `K_nu` of general real order, and spherical
//! Bessel functions for integer and half-integer orders.
//!
//! `J` uses the ascending series below `x = 2` and Steed's continued
//! fractions (CF1 for the logarithmic derivative, complex CF2 plus the
//! Wronskian for normalization) above. `K` uses Temme's series below `x = 2`
//! and the real CF2 above, then the stable upward order recurrence.

use core::f64::consts::PI;

use super::gamma::{lgamma_pos, recip_gamma};
use super::SpecFunResult;
use crate::error::{CoreError, Result};
use crate::math::FloatExt;

const EPS: f64 = 1.0e-16;
const FPMIN: f64 = 1.0e-290;
const MAXIT: usize = 20000;

/// `J_nu(x)` for `nu >= 0`, `x >= 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<SpecFunResult<f64>> {
    Ok(bessel_j_and_deriv(nu, x)?.0)
}

/// `(J_nu(x), J'_nu(x))`.
pub(crate) fn bessel_j_and_deriv(nu: f64, x: f64) -> Result<(SpecFunResult<f64>, f64)> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(CoreError::DomainError("bessel_j requires nu >= 0"));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(CoreError::DomainError("bessel_j requires x >= 0"));
    }
    if x == 0.0 {
        let j = if nu == 0.0 { 1.0 } else { 0.0 };
        let jp = if nu == 1.0 { 0.5 } else if nu == 0.0 { 0.0 } else { 0.0 };
        return Ok((
            SpecFunResult {
                value: j,
                est_error: 0.0,
            },
            jp,
        ));
    }
    if x < 2.0 {
        let j = j_series(nu, x);
        let j1 = j_series(nu + 1.0, x);
        let jp = (nu / x) * j - j1;
        return Ok((
            SpecFunResult {
                value: j,
                est_error: 4.0 * EPS,
            },
            jp,
        ));
    }
    let (j, jp) = j_steed(nu, x)?;
    Ok((
        SpecFunResult {
            value: j,
            est_error: 8.0 * EPS,
        },
        jp,
    ))
}

/// Ascending series; safe for `x < 2` at any order.
fn j_series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    // first term (x/2)^nu / Gamma(nu+1)
    let ln0 = nu * half.ln() - lgamma_pos(nu + 1.0);
    if ln0 < -700.0 {
        return 0.0;
    }
    let mut term = ln0.exp();
    let mut sum = term;
    let msq = -half * half;
    for k in 0..200 {
        let kf = k as f64;
        term *= msq / ((kf + 1.0) * (nu + kf + 1.0));
        sum += term;
        if term.abs() < EPS * sum.abs() {
            break;
        }
    }
    sum
}

/// Steed's method for `x >= 2`: CF1 at order `nu`, downward recurrence to
/// `mu = nu - nl` with `mu <= x`, complex CF2 at `mu`, Wronskian
/// normalization.
fn j_steed(nu: f64, x: f64) -> Result<(f64, f64)> {
    let nl = ((nu - x + 1.5).floor() as i64).max(0) as usize;
    let mu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: f = J'_nu / J_nu by modified Lentz.
    let mut isign = 1.0_f64;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0_f64;
    let mut c = h;
    let mut converged = false;
    for _ in 1..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(CoreError::ConvergenceError {
            what: "bessel_j CF1",
            est_error: f64::NAN,
        });
    }

    // Downward recurrence of (J, J') from nu to mu, unnormalized.
    let mut rjl = isign * FPMIN.sqrt();
    let mut rjpl = h * rjl;
    let rjl1 = rjl; // unnormalized J_nu
    let rjp1 = rjpl; // unnormalized J'_nu
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl; // J'_mu / J_mu

    // CF2 at order mu (complex Lentz): p + i q.
    let mu2 = mu * mu;
    let mut a = 0.25 - mu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br0 = 2.0 * x;
    let bi0 = 2.0;
    let mut fact2 = a * xi / (p * p + q * q);
    let mut cr = br0 + q * fact2;
    let mut ci = bi0 + p * fact2;
    let mut den = br0 * br0 + bi0 * bi0;
    let mut dr = br0 / den;
    let mut di = -bi0 / den;
    let dlr0 = cr * dr - ci * di;
    let dli0 = cr * di + ci * dr;
    let temp = p * dlr0 - q * dli0;
    q = p * dli0 + q * dlr0;
    p = temp;
    let br = br0;
    let mut bi = bi0;
    let mut ok = false;
    for i in 2..MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fact2 = a / (cr * cr + ci * ci);
        cr = br + cr * fact2;
        ci = bi - ci * fact2;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        let dlr = cr * dr - ci * di;
        let dli = cr * di + ci * dr;
        let temp2 = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp2;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            ok = true;
            break;
        }
    }
    if !ok {
        return Err(CoreError::ConvergenceError {
            what: "bessel_j CF2",
            est_error: f64::NAN,
        });
    }

    // Wronskian normalization at order mu, then rescale the saved
    // order-nu pair.
    let gam = (p - f) / q;
    let mut rjmu = (w / ((p - f) * gam + q)).sqrt();
    if rjl < 0.0 {
        rjmu = -rjmu;
    }
    let scale = rjmu / rjl;
    Ok((rjl1 * scale, rjp1 * scale))
}

/// `K_nu(x)` for real `nu` (symmetric in `nu -> -nu`), `x > 0`.
pub fn bessel_k(nu: f64, x: f64) -> Result<SpecFunResult<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(CoreError::DomainError("bessel_k requires x > 0"));
    }
    let nu = nu.abs();
    if !nu.is_finite() {
        return Err(CoreError::DomainError("bessel_k requires finite nu"));
    }
    let nl = (nu + 0.5).floor() as usize;
    let mu = nu - nl as f64; // |mu| <= 1/2
    let (mut kmu, mut k1) = if x <= 2.0 {
        k_temme_series(mu, x)?
    } else {
        k_cf2(mu, x)?
    };
    // upward recurrence in order: K_{m+1} = 2 m / x K_m + K_{m-1}
    let xi2 = 2.0 / x;
    let mut m = mu;
    for _ in 0..nl {
        let knew = (m + 1.0) * xi2 * k1 + kmu;
        kmu = k1;
        k1 = knew;
        m += 1.0;
    }
    let value = kmu;
    if !value.is_finite() {
        return Err(CoreError::RangeError("bessel_k overflow"));
    }
    Ok(SpecFunResult {
        value,
        est_error: 8.0 * EPS * (1.0 + nl as f64).sqrt(),
    })
}

/// `[1/Gamma(1-mu) -/+ 1/Gamma(1+mu)]` combinations as Temme's `gam1`,
/// `gam2`, plus `1/Gamma(1+mu)` and `1/Gamma(1-mu)`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    const EULER_GAMMA: f64 = 0.5772156649015329;
    // mu^3 coefficient of 1/Gamma(1+mu)
    const B3: f64 = -0.042002635034095236;
    let gampl = recip_gamma(1.0 + mu);
    let gammi = recip_gamma(1.0 - mu);
    let gam1 = if mu.abs() < 2e-3 {
        -EULER_GAMMA - B3 * mu * mu
    } else {
        (gammi - gampl) / (2.0 * mu)
    };
    let gam2 = 0.5 * (gammi + gampl);
    (gam1, gam2, gampl, gammi)
}

/// Temme's series for `K_mu`, `K_{mu+1}`, `|mu| <= 1/2`, `x <= 2`.
fn k_temme_series(mu: f64, x: f64) -> Result<(f64, f64)> {
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < 1e-12 {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let mut d = -x2.ln();
    let mut e = mu * d;
    let fact2 = if e.abs() < 1e-12 {
        1.0
    } else {
        (e.exp() - (-e).exp()) / (2.0 * e)
    };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = fact * (gam1 * 0.5 * (e.exp() + (-e).exp()) + gam2 * fact2 * d);
    let mut sum = ff;
    e = e.exp();
    let mut p = 0.5 * e / gampl;
    let mut q = 0.5 / (e * gammi);
    let mut c = 1.0;
    d = x2 * x2;
    let mut sum1 = p;
    let mu2 = mu * mu;
    let mut converged = false;
    for i in 1..MAXIT {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= d / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - fi * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(CoreError::ConvergenceError {
            what: "bessel_k Temme series",
            est_error: f64::NAN,
        });
    }
    Ok((sum, sum1 * 2.0 / x))
}

/// Steed's real CF2 for `K_mu`, `K_{mu+1}`, `x > 2`.
fn k_cf2(mu: f64, x: f64) -> Result<(f64, f64)> {
    let mu2 = mu * mu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    let mut converged = false;
    for i in 2..MAXIT {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(CoreError::ConvergenceError {
            what: "bessel_k CF2",
            est_error: f64::NAN,
        });
    }
    let h = a1 * h;
    let kmu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = kmu * (mu + x + 0.5 - h) / x;
    Ok((kmu, k1))
}

/// Spherical Bessel `j_l(x) = sqrt(pi/(2x)) J_{l+1/2}(x)`, with the
/// `x -> 0` limit handled analytically.
pub fn spherical_j(l: f64, x: f64) -> Result<SpecFunResult<f64>> {
    Ok(spherical_j_with_derivative(l, x)?.0)
}

/// `(j_l(x), j'_l(x))`.
pub fn spherical_j_with_derivative(l: f64, x: f64) -> Result<(SpecFunResult<f64>, f64)> {
    if !(l >= 0.0) {
        return Err(CoreError::DomainError("spherical_j requires l >= 0"));
    }
    if !(x >= 0.0) {
        return Err(CoreError::DomainError("spherical_j requires x >= 0"));
    }
    if x == 0.0 {
        let v = if l == 0.0 { 1.0 } else { 0.0 };
        let dv = if l == 1.0 { 1.0 / 3.0 } else { 0.0 };
        return Ok((
            SpecFunResult {
                value: v,
                est_error: 0.0,
            },
            dv,
        ));
    }
    let nu = l + 0.5;
    let (j, jp) = bessel_j_and_deriv(nu, x)?;
    let pref = (PI / (2.0 * x)).sqrt();
    let value = pref * j.value;
    let deriv = pref * (jp - j.value / (2.0 * x));
    Ok((
        SpecFunResult {
            value,
            est_error: j.est_error + 2.0 * EPS,
        },
        deriv,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn spherical_j0_is_sinc() {
        for &x in &[0.1, 1.0, PI, 10.0, 100.0, 400.0] {
            let expect = x.sin() / x;
            assert_abs_diff_eq!(
                spherical_j(0.0, x).unwrap().value,
                expect,
                epsilon = 1e-12 * (1.0 + expect.abs())
            );
        }
        assert_abs_diff_eq!(spherical_j(0.0, PI).unwrap().value, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn spherical_j1_closed_form() {
        for &x in &[0.3, 1.0, PI, 25.0, 150.0] {
            let expect = x.sin() / (x * x) - x.cos() / x;
            assert_relative_eq!(
                spherical_j(1.0, x).unwrap().value,
                expect,
                max_relative = 1e-10,
                epsilon = 1e-13
            );
        }
        assert_relative_eq!(
            spherical_j(1.0, PI).unwrap().value,
            1.0 / PI,
            max_relative = 1e-12
        );
    }

    #[test]
    fn spherical_j2_closed_form() {
        for &x in &[0.5, 2.0, 12.34, 123.45] {
            let expect = (3.0 / (x * x * x) - 1.0 / x) * x.sin() - 3.0 / (x * x) * x.cos();
            assert_relative_eq!(
                spherical_j(2.0, x).unwrap().value,
                expect,
                max_relative = 1e-9,
                epsilon = 1e-13
            );
        }
    }

    /// Independent series oracle for J at small-to-moderate x.
    fn j_series_oracle(nu: f64, x: f64) -> f64 {
        let mut term = libm::exp(nu * libm::log(x / 2.0) - lgamma_pos(nu + 1.0));
        let mut sum = term;
        for k in 0..400 {
            let kf = k as f64;
            term *= -(x * x / 4.0) / ((kf + 1.0) * (nu + kf + 1.0));
            sum += term;
        }
        sum
    }

    #[test]
    fn half_integer_order_against_series_oracle() {
        // spherical_j(1/2, 2) = sqrt(pi/4) J_1(2)
        let j1 = j_series_oracle(1.0, 2.0);
        let expect = (PI / 4.0).sqrt() * j1;
        assert_relative_eq!(
            spherical_j(0.5, 2.0).unwrap().value,
            expect,
            max_relative = 1e-10
        );
        for &(nu, x) in &[(0.5, 3.0), (2.5, 7.0), (4.0, 11.0), (1.5, 18.0)] {
            assert_relative_eq!(
                bessel_j(nu, x).unwrap().value,
                j_series_oracle(nu, x),
                max_relative = 1e-9,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn j_recurrence_consistency() {
        // J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu
        for &(nu, x) in &[(1.0, 5.0), (2.5, 9.0), (7.0, 3.0), (10.5, 40.0), (3.0, 333.0)] {
            let jm = bessel_j(nu - 1.0, x).unwrap().value;
            let jp = bessel_j(nu + 1.0, x).unwrap().value;
            let j = bessel_j(nu, x).unwrap().value;
            assert_relative_eq!(jm + jp, 2.0 * nu / x * j, max_relative = 1e-8, epsilon = 1e-12);
        }
    }

    #[test]
    fn k_half_integer_closed_forms() {
        // K_{1/2}(x) = sqrt(pi/2x) e^{-x}
        for &x in &[0.3, 1.0, 2.0, 8.0, 40.0] {
            let expect = (PI / (2.0 * x)).sqrt() * (-x).exp();
            assert_relative_eq!(
                bessel_k(0.5, x).unwrap().value,
                expect,
                max_relative = 1e-12
            );
        }
        // K_{3/2}(1) = sqrt(pi/2) e^{-1} (1 + 1)
        assert_relative_eq!(
            bessel_k(1.5, 1.0).unwrap().value,
            (PI / 2.0).sqrt() * (-1.0_f64).exp() * 2.0,
            max_relative = 1e-12
        );
        // K_{5/2}(x) = sqrt(pi/2x) e^{-x} (1 + 3/x + 3/x^2)
        let x = 2.0;
        assert_relative_eq!(
            bessel_k(2.5, x).unwrap().value,
            (PI / (2.0 * x)).sqrt() * (-x).exp() * (1.0 + 3.0 / x + 3.0 / (x * x)),
            max_relative = 1e-12
        );
    }

    #[test]
    fn k_symmetric_in_nu() {
        for &(nu, x) in &[(0.3, 1.7), (1.2, 0.4), (2.5, 9.0)] {
            let a = bessel_k(nu, x).unwrap().value;
            let b = bessel_k(-nu, x).unwrap().value;
            assert_relative_eq!(a, b, max_relative = 1e-14);
        }
    }

    #[test]
    fn k_recurrence_consistency() {
        // K_{nu+1} - K_{nu-1} = (2 nu / x) K_nu
        for &(nu, x) in &[(0.5, 1.0), (1.3, 3.0), (4.2, 0.9), (2.0, 15.0)] {
            let km = bessel_k(nu - 1.0, x).unwrap().value;
            let kp = bessel_k(nu + 1.0, x).unwrap().value;
            let k = bessel_k(nu, x).unwrap().value;
            assert_relative_eq!(kp - km, 2.0 * nu / x * k, max_relative = 1e-9);
        }
    }

    #[test]
    fn k0_small_x_leading_log() {
        // K_0(x) ~ -ln(x/2) - gamma as x -> 0
        const EULER_GAMMA: f64 = 0.5772156649015329;
        let x = 1e-6;
        let expect = -(x / 2.0_f64).ln() - EULER_GAMMA;
        assert_relative_eq!(bessel_k(0.0, x).unwrap().value, expect, max_relative = 1e-9);
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j(-1.0, 2.0).is_err());
        assert!(bessel_j(1.0, -2.0).is_err());
        assert!(bessel_k(0.5, 0.0).is_err());
        assert!(bessel_k(0.5, -1.0).is_err());
        assert!(spherical_j(0.5, -0.1).is_err());
    }

    #[test]
    fn spherical_derivative_matches_finite_difference() {
        for &(l, x) in &[(0.0, 2.0), (1.0, 5.5), (0.5, 3.0), (1.5, 7.0), (2.0, 40.0)] {
            let h = 1e-6;
            let fp = spherical_j(l, x + h).unwrap().value;
            let fm = spherical_j(l, x - h).unwrap().value;
            let fd = (fp - fm) / (2.0 * h);
            let (_, d) = spherical_j_with_derivative(l, x).unwrap();
            assert_abs_diff_eq!(d, fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn j_at_zero_limits() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap().value, 1.0);
        assert_eq!(bessel_j(2.5, 0.0).unwrap().value, 0.0);
        assert_eq!(spherical_j(0.0, 0.0).unwrap().value, 1.0);
        assert_eq!(spherical_j(1.5, 0.0).unwrap().value, 0.0);
    }

    #[test]
    fn large_argument_accuracy_via_asymptotic_j_half() {
        // J_{1/2}(x) = sqrt(2/(pi x)) sin x exactly, up to x = 500
        for &x in &[100.0, 250.0, 500.0] {
            let expect = (2.0 / (PI * x)).sqrt() * x.sin();
            assert_abs_diff_eq!(
                bessel_j(0.5, x).unwrap().value,
                expect,
                epsilon = 1e-11
            );
        }
    }
}
